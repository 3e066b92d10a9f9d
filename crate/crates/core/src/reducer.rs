//! Cyclic-orientability decision and chordless cycle enumeration by
//! chain reduction.
//!
//! Each two-connected component is shrunk step by step: a queue holds
//! degree-2 candidates; from each one a maximal chain of chain material
//! is walked out to its two anchors. Anchors joined by an edge mean the
//! chain closes a chordless cycle, which is emitted and deleted (an ear);
//! non-adjacent anchors mean the chain is contracted to a single
//! degree-2 vertex carrying the chain's original vertices as its key.
//! A walk that wraps around, or whose two directions meet at the same
//! anchor, has found that the whole residue is one cycle: it is emitted
//! whole. The component is cyclically orientable iff the process ends
//! with nothing left or with a single edge.
//!
//! The reduced graph is mutated explicitly: ear edges and vertices are
//! deleted and contractions rewire, so every loop condition reads the
//! actual current structure rather than a color-filtered static
//! adjacency. Chain material is fixed up front: vertices of component
//! degree 2, plus every contracted vertex. Anchors whose current degree
//! later drops to 2 re-enter the queue as walk seeds but are never
//! absorbed mid-chain, which keeps anchors original vertices and lets
//! the single-edge terminal state appear exactly as in the
//! two-connected decomposition theory.

use std::collections::VecDeque;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::biconnected::{biconnected_components, Component};
use crate::graph::{canonicalize, CycleSet, Graph, VertexId};

/// True iff a graph with `n` vertices and `m` edges satisfies the
/// cyclically-orientable edge bound m <= 2n - 3.
pub fn check_edge_bound(n: usize, m: usize) -> bool {
    m as i64 <= 2 * n as i64 - 3
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NotCoReason {
    EdgeBoundGlobal,
    EdgeBoundComponent,
    NoDegreeTwoVertex,
    IrreducibleResidue,
}

impl fmt::Display for NotCoReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NotCoReason::EdgeBoundGlobal => "EdgeBoundGlobal",
            NotCoReason::EdgeBoundComponent => "EdgeBoundComponent",
            NotCoReason::NoDegreeTwoVertex => "NoDegreeTwoVertex",
            NotCoReason::IrreducibleResidue => "IrreducibleResidue",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub enum Verdict {
    Co(CycleSet),
    NotCo {
        reason: NotCoReason,
        component: Option<usize>,
    },
}

impl Verdict {
    pub fn is_co(&self) -> bool {
        matches!(self, Verdict::Co(_))
    }

    pub fn cycles(&self) -> Option<&CycleSet> {
        match self {
            Verdict::Co(c) => Some(c),
            Verdict::NotCo { .. } => None,
        }
    }
}

/// Terminal state of a successful component reduction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Terminal {
    /// A closure consumed the final residual cycle.
    Emptied,
    /// The last ear removal left a bare edge.
    SingleEdge,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReduceStatus {
    Success(Terminal),
    IrreducibleResidue,
}

#[derive(Clone, Debug)]
pub struct ReduceOutcome {
    pub status: ReduceStatus,
    /// Canonical chordless cycles in the component's local ids.
    pub cycles: CycleSet,
}

/// Per-component summary for reporting.
#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub n: usize,
    pub m: usize,
    pub single_edge: bool,
    pub cycle_count: usize,
    pub cycle_len_sum: usize,
    pub terminal: Option<Terminal>,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub verdict: Verdict,
    pub components: Vec<ComponentReport>,
}

#[derive(Clone, Copy, Default, Debug)]
pub struct ReduceOptions {
    /// Re-verify the bookkeeping and every emission against the
    /// component graph after each step. For tests and sweeps.
    pub audit: bool,
    /// Shuffle each component's initial queue with this seed. The
    /// emitted cycle set must not depend on it.
    pub shuffle_seed: Option<u64>,
    /// Reduce components in parallel.
    pub parallel: bool,
}

#[derive(Clone, Debug)]
enum Key {
    Original(u32),
    Contracted {
        seq: Vec<u32>,
        end_a: u32,
        end_b: u32,
    },
}

#[derive(Clone, Debug)]
struct RVertex {
    live: bool,
    /// Walks may absorb this vertex into a chain. Set for vertices of
    /// component degree 2 and for every contracted vertex; anchors are
    /// exactly the non-chainable vertices.
    chainable: bool,
    adj: Vec<u32>,
    key: Key,
}

enum Chain {
    /// The residue is a single cycle, given in traversal order.
    Closure(Vec<u32>),
    /// Chain between distinct anchors, `p` ordered from x-side to y-side.
    Open { x: u32, p: Vec<u32>, y: u32 },
}

struct ReducerState<'g> {
    graph: &'g Graph,
    verts: Vec<RVertex>,
    queue: VecDeque<u32>,
    n_rem: usize,
    m_rem: usize,
    pops: usize,
    emitted: Vec<Vec<u32>>,
    audit: bool,
}

impl<'g> ReducerState<'g> {
    fn new(g: &'g Graph, order: Vec<u32>, audit: bool) -> ReducerState<'g> {
        let verts = g
            .vertices()
            .map(|v| RVertex {
                live: true,
                chainable: g.degree(v) == 2,
                adj: g.neighbors(v).iter().map(|w| w.0).collect(),
                key: Key::Original(v.0),
            })
            .collect();
        ReducerState {
            graph: g,
            verts,
            queue: order.into(),
            n_rem: g.n(),
            m_rem: g.m(),
            pops: 0,
            emitted: Vec::new(),
            audit,
        }
    }

    fn deg(&self, v: u32) -> usize {
        self.verts[v as usize].adj.len()
    }

    fn has_edge(&self, u: u32, v: u32) -> bool {
        self.verts[u as usize].adj.contains(&v)
    }

    fn other_neighbor(&self, v: u32, not: u32) -> u32 {
        let adj = &self.verts[v as usize].adj;
        debug_assert_eq!(adj.len(), 2);
        if adj[0] == not {
            adj[1]
        } else {
            debug_assert_eq!(adj[1], not);
            adj[0]
        }
    }

    fn remove_half_edge(&mut self, from: u32, to: u32) {
        let adj = &mut self.verts[from as usize].adj;
        let pos = adj.iter().position(|&w| w == to).expect("edge present");
        adj.swap_remove(pos);
    }

    /// Walk the maximal chain through the seed `u` (live, degree 2).
    /// Consumed vertices are marked dead here; structural deletion and
    /// the n/m counters are the apply steps' business.
    fn walk_chain(&mut self, u: u32) -> Chain {
        debug_assert!(self.verts[u as usize].live && self.deg(u) == 2);
        self.verts[u as usize].live = false;
        let dir_a = self.verts[u as usize].adj[0];
        let dir_b = self.verts[u as usize].adj[1];

        let mut forward: Vec<u32> = Vec::new();
        let mut prev = u;
        let mut cur = dir_a;
        let x = loop {
            if cur == u {
                // wrapped: the component residue is this cycle
                let mut seq = Vec::with_capacity(forward.len() + 1);
                seq.push(u);
                seq.extend(forward);
                debug_assert!(seq.len() >= 3);
                return Chain::Closure(seq);
            }
            let rv = &self.verts[cur as usize];
            debug_assert!(rv.live, "walk stepped onto a removed vertex");
            if !rv.chainable {
                break cur;
            }
            self.verts[cur as usize].live = false;
            forward.push(cur);
            let next = self.other_neighbor(cur, prev);
            prev = cur;
            cur = next;
        };

        let mut backward: Vec<u32> = Vec::new();
        let mut prev = u;
        let mut cur = dir_b;
        let y = loop {
            debug_assert_ne!(cur, u, "second walk cannot wrap before the first");
            let rv = &self.verts[cur as usize];
            debug_assert!(rv.live, "walk stepped onto a removed vertex");
            if !rv.chainable {
                break cur;
            }
            self.verts[cur as usize].live = false;
            backward.push(cur);
            let next = self.other_neighbor(cur, prev);
            prev = cur;
            cur = next;
        };

        // p in x-side .. y-side order
        let mut p = Vec::with_capacity(forward.len() + backward.len() + 1);
        p.extend(forward.iter().rev());
        p.push(u);
        p.extend(backward.iter());

        if x == y {
            // both directions met the same anchor: the residue is the
            // cycle through it
            let mut seq = Vec::with_capacity(p.len() + 1);
            seq.push(x);
            seq.extend(p);
            return Chain::Closure(seq);
        }
        Chain::Open { x, p, y }
    }

    fn expand_vertex(&self, v: u32, entered_from: u32, out: &mut Vec<u32>) {
        match &self.verts[v as usize].key {
            Key::Original(o) => out.push(*o),
            Key::Contracted { seq, end_a, end_b } => {
                if entered_from == *end_a {
                    out.extend(seq.iter());
                } else {
                    debug_assert_eq!(entered_from, *end_b);
                    out.extend(seq.iter().rev());
                }
            }
        }
    }

    /// Expand a chain to original vertex ids, entering the first member
    /// from `first_pred` and each later member from its predecessor.
    fn expand_chain(&self, first_pred: u32, chain: &[u32]) -> Vec<u32> {
        let mut out = Vec::with_capacity(chain.len());
        let mut pred = first_pred;
        for &v in chain {
            self.expand_vertex(v, pred, &mut out);
            pred = v;
        }
        out
    }

    fn delete_consumed(&mut self, members: &[u32]) -> usize {
        let mut edges_removed = 0;
        for &v in members {
            let nbrs = std::mem::take(&mut self.verts[v as usize].adj);
            for w in nbrs {
                self.remove_half_edge(w, v);
                edges_removed += 1;
            }
            self.verts[v as usize].live = false;
        }
        edges_removed
    }

    /// Emit the cycle closed by the edge (x, y), delete the chain, and
    /// requeue anchors that drop to degree 2.
    fn apply_ear_removal(&mut self, x: u32, p: &[u32], y: u32) {
        debug_assert!(self.has_edge(x, y));
        let mut cycle = Vec::with_capacity(p.len() + 2);
        self.expand_vertex(x, y, &mut cycle);
        cycle.extend(self.expand_chain(x, p));
        self.expand_vertex(y, *p.last().unwrap(), &mut cycle);
        self.emit(cycle);

        let removed = self.delete_consumed(p);
        debug_assert_eq!(removed, p.len() + 1);
        self.n_rem -= p.len();
        self.m_rem -= p.len() + 1;
        for anchor in [x, y] {
            if self.deg(anchor) == 2 {
                self.queue.push_back(anchor);
            }
        }
    }

    /// Replace the chain with one degree-2 vertex keyed by the chain's
    /// original vertices. A one-vertex chain is revived in place; a
    /// longer one becomes a fresh vertex wired to the anchors. Neither
    /// enters the queue.
    fn apply_contraction(&mut self, x: u32, p: &[u32], y: u32) -> u32 {
        debug_assert!(!self.has_edge(x, y));
        if p.len() == 1 {
            let v = p[0];
            self.verts[v as usize].live = true;
            self.verts[v as usize].chainable = true;
            return v;
        }
        let seq = self.expand_chain(x, p);
        let removed = self.delete_consumed(p);
        debug_assert_eq!(removed, p.len() + 1);
        let w = self.verts.len() as u32;
        self.verts.push(RVertex {
            live: true,
            chainable: true,
            adj: vec![x, y],
            key: Key::Contracted { seq, end_a: x, end_b: y },
        });
        self.verts[x as usize].adj.push(w);
        self.verts[y as usize].adj.push(w);
        self.n_rem -= p.len() - 1;
        self.m_rem -= p.len() - 1;
        w
    }

    /// Emit the residual cycle and delete it entirely.
    fn apply_closure(&mut self, seq: &[u32]) {
        let mut cycle = Vec::with_capacity(seq.len());
        let mut pred = *seq.last().unwrap();
        for &v in seq {
            self.expand_vertex(v, pred, &mut cycle);
            pred = v;
        }
        self.emit(cycle);
        let removed = self.delete_consumed(seq);
        debug_assert_eq!(removed, seq.len());
        self.n_rem -= seq.len();
        self.m_rem -= seq.len();
        debug_assert_eq!(self.n_rem, 0, "closure consumes the whole residue");
    }

    fn emit(&mut self, cycle: Vec<u32>) {
        if self.audit {
            let ids: Vec<VertexId> = cycle.iter().map(|&v| VertexId(v)).collect();
            assert!(
                crate::graph::is_chordless_cycle(self.graph, &ids),
                "emitted cycle {cycle:?} is not chordless in the component"
            );
        }
        self.emitted.push(cycle);
    }

    fn run(&mut self) -> ReduceStatus {
        while let Some(u) = self.queue.pop_front() {
            self.pops += 1;
            if !self.verts[u as usize].live || self.deg(u) != 2 {
                continue;
            }
            match self.walk_chain(u) {
                Chain::Closure(seq) => self.apply_closure(&seq),
                Chain::Open { x, p, y } => {
                    if self.has_edge(x, y) {
                        self.apply_ear_removal(x, &p, y);
                    } else {
                        self.apply_contraction(x, &p, y);
                    }
                }
            }
            if self.audit {
                self.audit_state();
            }
        }
        if self.n_rem == 0 && self.m_rem == 0 {
            ReduceStatus::Success(Terminal::Emptied)
        } else if self.n_rem == 2 && self.m_rem == 1 {
            ReduceStatus::Success(Terminal::SingleEdge)
        } else {
            ReduceStatus::IrreducibleResidue
        }
    }

    fn audit_state(&self) {
        let live_count = self.verts.iter().filter(|v| v.live).count();
        assert_eq!(live_count, self.n_rem, "live vertex count drifted");
        let mut half_edges = 0usize;
        for (i, v) in self.verts.iter().enumerate() {
            if !v.live {
                assert!(v.adj.is_empty(), "dead vertex {i} still has edges");
                continue;
            }
            half_edges += v.adj.len();
            if v.chainable {
                assert_eq!(v.adj.len(), 2, "chain material must keep degree 2");
            }
            for &w in &v.adj {
                assert!(self.verts[w as usize].live, "edge to dead vertex");
                assert!(
                    self.verts[w as usize].adj.contains(&(i as u32)),
                    "asymmetric adjacency"
                );
            }
        }
        assert_eq!(half_edges / 2, self.m_rem, "live edge count drifted");
        assert!(
            self.pops <= self.graph.n() + self.graph.m(),
            "queue processed more than n + m pops"
        );
    }
}

/// Reduce one two-connected component (callers filter single edges and
/// check the edge bound and degree-2 preconditions first).
pub fn reduce_component(comp: &Component) -> ReduceOutcome {
    reduce_graph(&comp.subgraph, default_order(&comp.subgraph), false)
}

/// As `reduce_component`, but re-checking all bookkeeping invariants and
/// every emission. Panics on any violation.
pub fn reduce_component_audited(comp: &Component) -> ReduceOutcome {
    reduce_graph(&comp.subgraph, default_order(&comp.subgraph), true)
}

fn default_order(g: &Graph) -> Vec<u32> {
    g.vertices()
        .filter(|&v| g.degree(v) == 2)
        .map(|v| v.0)
        .collect()
}

fn reduce_graph(g: &Graph, order: Vec<u32>, audit: bool) -> ReduceOutcome {
    let mut state = ReducerState::new(g, order, audit);
    let status = state.run();
    let mut cycles = CycleSet::new();
    for raw in &state.emitted {
        let ids: Vec<VertexId> = raw.iter().map(|&v| VertexId(v)).collect();
        let fresh = cycles.insert(canonicalize(&ids));
        if audit {
            assert!(fresh, "cycle emitted twice: {raw:?}");
        } else {
            debug_assert!(fresh, "cycle emitted twice: {raw:?}");
        }
    }
    ReduceOutcome { status, cycles }
}

/// Decide cyclic orientability and enumerate all chordless cycles.
pub fn enumerate_chordless_cycles(g: &Graph) -> Verdict {
    enumerate_with_options(g, &ReduceOptions::default()).verdict
}

pub fn enumerate_with_options(g: &Graph, opts: &ReduceOptions) -> Enumeration {
    // The bound presumes at least one possible edge; the empty and
    // one-vertex graphs are trivially orientable.
    if g.n() >= 2 && !check_edge_bound(g.n(), g.m()) {
        return Enumeration {
            verdict: Verdict::NotCo {
                reason: NotCoReason::EdgeBoundGlobal,
                component: None,
            },
            components: Vec::new(),
        };
    }

    let comps = biconnected_components(g);
    let work = |(idx, comp): (usize, &Component)| -> (ComponentReport, Result<CycleSet, NotCoReason>) {
        let sg = &comp.subgraph;
        let mut report = ComponentReport {
            n: sg.n(),
            m: sg.m(),
            single_edge: comp.is_single_edge,
            cycle_count: 0,
            cycle_len_sum: 0,
            terminal: None,
        };
        if comp.is_single_edge {
            return (report, Ok(CycleSet::new()));
        }
        if !check_edge_bound(sg.n(), sg.m()) {
            return (report, Err(NotCoReason::EdgeBoundComponent));
        }
        if sg.vertices().all(|v| sg.degree(v) != 2) {
            return (report, Err(NotCoReason::NoDegreeTwoVertex));
        }
        let mut order = default_order(sg);
        if let Some(seed) = opts.shuffle_seed {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(idx as u64));
            order.shuffle(&mut rng);
        }
        let outcome = reduce_graph(sg, order, opts.audit);
        match outcome.status {
            ReduceStatus::Success(t) => {
                report.terminal = Some(t);
                report.cycle_count = outcome.cycles.len();
                report.cycle_len_sum = outcome.cycles.iter().map(|c| c.len()).sum();
                (report, Ok(outcome.cycles))
            }
            ReduceStatus::IrreducibleResidue => (report, Err(NotCoReason::IrreducibleResidue)),
        }
    };

    let results: Vec<(ComponentReport, Result<CycleSet, NotCoReason>)> = if opts.parallel {
        use rayon::prelude::*;
        comps.par_iter().enumerate().map(work).collect()
    } else {
        comps.iter().enumerate().map(work).collect()
    };

    let mut reports = Vec::with_capacity(results.len());
    let mut all = CycleSet::new();
    let mut failure: Option<(usize, NotCoReason)> = None;
    for (idx, (report, res)) in results.into_iter().enumerate() {
        reports.push(report);
        match res {
            Ok(cycles) => {
                if failure.is_none() {
                    for local in cycles {
                        let parent: Vec<VertexId> = local
                            .vertices()
                            .iter()
                            .map(|v| comps[idx].to_parent[v.index()])
                            .collect();
                        // to_parent is increasing, so the canonical form
                        // survives the relabeling
                        let mapped = canonicalize(&parent);
                        debug_assert_eq!(mapped.vertices(), parent.as_slice());
                        let fresh = all.insert(mapped);
                        if opts.audit {
                            assert!(fresh, "duplicate cycle across components");
                        } else {
                            debug_assert!(fresh, "duplicate cycle across components");
                        }
                    }
                }
            }
            Err(reason) => {
                if failure.is_none() {
                    failure = Some((idx, reason));
                }
            }
        }
    }

    let verdict = match failure {
        Some((idx, reason)) => Verdict::NotCo {
            reason,
            component: Some(idx),
        },
        None => Verdict::Co(all),
    };
    Enumeration {
        verdict,
        components: reports,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn edge_bound_examples() {
        assert!(!check_edge_bound(4, 6)); // K4
        assert!(check_edge_bound(3, 3)); // triangle, boundary
        assert!(check_edge_bound(2, 1)); // single edge
        assert!(!check_edge_bound(0, 1));
    }

    fn single_component(g: &Graph) -> Component {
        let mut comps = biconnected_components(g);
        assert_eq!(comps.len(), 1);
        comps.pop().unwrap()
    }

    fn label_cycles(g: &Graph, comp: &Component, cycles: &CycleSet) -> Vec<Vec<u32>> {
        cycles
            .iter()
            .map(|c| {
                c.vertices()
                    .iter()
                    .map(|v| g.label(comp.to_parent[v.index()]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn walk_wraps_on_pure_cycle() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let mut state = ReducerState::new(&g, default_order(&g), true);
        match state.walk_chain(0) {
            Chain::Closure(seq) => {
                assert_eq!(seq.len(), 5);
                assert_eq!(seq[0], 0);
            }
            Chain::Open { .. } => panic!("pure cycle must close"),
        }
    }

    #[test]
    fn walk_finds_one_vertex_chain() {
        // two triangles sharing edge (0,1), apexes 2 and 3
        let g = fixtures::two_triangles();
        let mut state = ReducerState::new(&g, default_order(&g), true);
        match state.walk_chain(2) {
            Chain::Open { x, p, y } => {
                assert_eq!(p, vec![2]);
                assert_eq!([x.min(y), x.max(y)], [0, 1]);
            }
            Chain::Closure(_) => panic!("anchored chain expected"),
        }
    }

    #[test]
    fn walk_on_pentagon_apex_5() {
        let g = fixtures::pentagon_two_triangles();
        // label 5 = id 4, neighbors labels 1 and 4 (ids 0, 3), not adjacent
        let mut state = ReducerState::new(&g, default_order(&g), true);
        match state.walk_chain(4) {
            Chain::Open { x, p, y } => {
                assert_eq!(p, vec![4]);
                assert_eq!([x.min(y), x.max(y)], [0, 3]);
                assert!(!state.has_edge(x, y));
            }
            Chain::Closure(_) => panic!("anchored chain expected"),
        }
    }

    #[test]
    fn expand_respects_entry_side() {
        let g = fixtures::pentagon_two_triangles();
        let mut state = ReducerState::new(&g, default_order(&g), true);
        state.verts.push(RVertex {
            live: true,
            chainable: true,
            adj: vec![0, 3],
            key: Key::Contracted {
                seq: vec![5, 6],
                end_a: 0,
                end_b: 3,
            },
        });
        let w = (state.verts.len() - 1) as u32;
        let mut out = Vec::new();
        state.expand_vertex(w, 0, &mut out);
        assert_eq!(out, vec![5, 6]);
        out.clear();
        state.expand_vertex(w, 3, &mut out);
        assert_eq!(out, vec![6, 5]);
        // originals expand to themselves
        out.clear();
        state.expand_vertex(2, 1, &mut out);
        assert_eq!(out, vec![2]);
    }

    #[test]
    fn closure_expands_contracted_members() {
        // C5 with vertex 4 already standing behind a contracted w
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let mut state = ReducerState::new(&g, Vec::new(), true);
        state.verts[4].live = false;
        state.verts[4].adj.clear();
        let w = state.verts.len() as u32;
        state.verts.push(RVertex {
            live: true,
            chainable: true,
            adj: vec![3, 0],
            key: Key::Contracted {
                seq: vec![4],
                end_a: 3,
                end_b: 0,
            },
        });
        for (v, old) in [(0u32, 4u32), (3, 4)] {
            let pos = state.verts[v as usize].adj.iter().position(|&x| x == old).unwrap();
            state.verts[v as usize].adj[pos] = w;
        }
        state.apply_closure(&[0, 1, 2, 3, w]);
        assert_eq!(state.emitted, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(state.n_rem, 0);
        assert_eq!(state.m_rem, 0);
    }

    #[test]
    fn contraction_keys_concatenate_in_traversal_order() {
        let g = fixtures::pentagon_two_triangles();
        let mut state = ReducerState::new(&g, Vec::new(), true);
        let w1 = state.verts.len() as u32;
        let w2 = w1 + 1;
        state.verts.push(RVertex {
            live: true,
            chainable: true,
            adj: vec![0, w2],
            key: Key::Contracted {
                seq: vec![10, 11],
                end_a: 0,
                end_b: w2,
            },
        });
        state.verts.push(RVertex {
            live: true,
            chainable: true,
            adj: vec![w1, 3],
            key: Key::Contracted {
                seq: vec![12, 13],
                end_a: w1,
                end_b: 3,
            },
        });
        assert_eq!(state.expand_chain(0, &[w1, w2]), vec![10, 11, 12, 13]);
        // entering from the other anchor reverses both keys
        assert_eq!(state.expand_chain(3, &[w2, w1]), vec![13, 12, 11, 10]);
    }

    #[test]
    fn triangle_reduces_by_closure() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let comp = single_component(&g);
        let out = reduce_component_audited(&comp);
        assert_eq!(out.status, ReduceStatus::Success(Terminal::Emptied));
        assert_eq!(label_cycles(&g, &comp, &out.cycles), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn two_triangles_end_in_single_edge() {
        let g = fixtures::two_triangles();
        let comp = single_component(&g);
        let out = reduce_component_audited(&comp);
        assert_eq!(out.status, ReduceStatus::Success(Terminal::SingleEdge));
        assert_eq!(
            label_cycles(&g, &comp, &out.cycles),
            vec![vec![1, 2, 3], vec![1, 2, 4]]
        );
    }

    #[test]
    fn k23_is_irreducible() {
        let g = fixtures::k23();
        let comp = single_component(&g);
        let out = reduce_component_audited(&comp);
        assert_eq!(out.status, ReduceStatus::IrreducibleResidue);
    }

    #[test]
    fn pentagon_two_triangles_full_run() {
        let g = fixtures::pentagon_two_triangles();
        let verdict = enumerate_chordless_cycles(&g);
        let cycles = fixtures::label_set(&g, verdict.cycles().expect("CO"));
        assert_eq!(
            cycles,
            vec![vec![1, 2, 3, 4, 5], vec![1, 2, 6], vec![3, 4, 7]]
        );
    }

    #[test]
    fn empty_graph_and_trees_are_co() {
        let empty = Graph::from_edges(0, &[]).unwrap();
        assert!(matches!(enumerate_chordless_cycles(&empty), Verdict::Co(c) if c.is_empty()));
        let lone = Graph::from_edges(1, &[]).unwrap();
        assert!(matches!(enumerate_chordless_cycles(&lone), Verdict::Co(c) if c.is_empty()));
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(matches!(enumerate_chordless_cycles(&tree), Verdict::Co(c) if c.is_empty()));
    }

    #[test]
    fn k4_fails_global_edge_bound() {
        match enumerate_chordless_cycles(&fixtures::k4()) {
            Verdict::NotCo { reason, component } => {
                assert_eq!(reason, NotCoReason::EdgeBoundGlobal);
                assert_eq!(component, None);
            }
            Verdict::Co(_) => panic!("K4 is not CO"),
        }
    }

    #[test]
    fn k4_plus_isolated_fails_component_bound() {
        let g = Graph::from_edges(
            10,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        match enumerate_chordless_cycles(&g) {
            Verdict::NotCo { reason, component } => {
                assert_eq!(reason, NotCoReason::EdgeBoundComponent);
                assert_eq!(component, Some(0));
            }
            Verdict::Co(_) => panic!("not CO"),
        }
    }

    #[test]
    fn k23_reports_irreducible_residue() {
        match enumerate_chordless_cycles(&fixtures::k23()) {
            Verdict::NotCo { reason, .. } => {
                assert_eq!(reason, NotCoReason::IrreducibleResidue)
            }
            Verdict::Co(_) => panic!("K_{{2,3}} is not CO"),
        }
    }

    #[test]
    fn count_identity_per_component() {
        let g = fixtures::pentagon_two_triangles();
        let e = enumerate_with_options(&g, &ReduceOptions { audit: true, ..Default::default() });
        assert!(e.verdict.is_co());
        for r in &e.components {
            if !r.single_edge {
                assert_eq!(r.cycle_count, r.m - r.n + 1);
                assert!(r.cycle_len_sum <= r.n + 2 * (r.m - r.n + 1));
            }
        }
    }

    #[test]
    fn queue_order_does_not_change_the_cycle_set() {
        let g = fixtures::pentagon_two_triangles();
        let base = enumerate_chordless_cycles(&g);
        for seed in 0..20u64 {
            let shuffled = enumerate_with_options(
                &g,
                &ReduceOptions {
                    audit: true,
                    shuffle_seed: Some(seed),
                    parallel: false,
                },
            );
            match (&base, &shuffled.verdict) {
                (Verdict::Co(a), Verdict::Co(b)) => assert_eq!(a, b),
                _ => panic!("verdict changed under shuffle"),
            }
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = fixtures::pentagon_two_triangles();
        let seq = enumerate_chordless_cycles(&g);
        let par = enumerate_with_options(
            &g,
            &ReduceOptions {
                parallel: true,
                ..Default::default()
            },
        );
        match (seq, par.verdict) {
            (Verdict::Co(a), Verdict::Co(b)) => assert_eq!(a, b),
            _ => panic!("parallel changed the verdict"),
        }
    }
}
