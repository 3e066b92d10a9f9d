//! Brute-force ground truth, independent of the reduction machinery.
//!
//! Three oracles: definition-level chordless cycle enumeration, cyclic
//! orientability by exhaustive orientation search, and cyclic
//! orientability by greedy structural peeling. They share nothing with
//! the reducer beyond the graph type, so agreement between them and the
//! fast path is meaningful evidence.

use thiserror::Error;

use crate::graph::{canonicalize, CycleSet, Graph, VertexId};

/// Enumerate every induced (chordless) cycle exactly once, in canonical
/// form. DFS over induced paths rooted at each cycle's smallest vertex;
/// intended for small graphs, no hard limit.
pub fn brute_chordless_cycles(g: &Graph) -> CycleSet {
    let mut out = CycleSet::new();
    let mut path: Vec<VertexId> = Vec::new();
    let mut in_path = vec![false; g.n()];
    for s in g.vertices() {
        path.push(s);
        in_path[s.index()] = true;
        extend(g, s, &mut path, &mut in_path, &mut out);
        in_path[s.index()] = false;
        path.pop();
    }
    out
}

fn extend(g: &Graph, root: VertexId, path: &mut Vec<VertexId>, in_path: &mut [bool], out: &mut CycleSet) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w <= root || in_path[w.index()] {
            continue;
        }
        if path.len() == 1 {
            path.push(w);
            in_path[w.index()] = true;
            extend(g, root, path, in_path, out);
            in_path[w.index()] = false;
            path.pop();
            continue;
        }
        // an edge from w into the path interior would be a chord of every
        // cycle this path could still close
        if path[1..path.len() - 1].iter().any(|&p| g.has_edge(w, p)) {
            continue;
        }
        if g.has_edge(w, root) {
            // closing edge; count each cycle in one direction only
            if path[1] < w {
                path.push(w);
                out.insert(canonicalize(path));
                path.pop();
            }
        } else {
            path.push(w);
            in_path[w.index()] = true;
            extend(g, root, path, in_path, out);
            in_path[w.index()] = false;
            path.pop();
        }
    }
}

/// One direction bit per edge of a fixed edge ordering (`Graph::edges`).
/// Bit 0 orients edge (u, v) as u -> v (with u < v), bit 1 the reverse.
#[derive(Clone, Copy, Debug)]
pub struct Orientation {
    pub bits: u64,
}

impl Orientation {
    /// True iff `cycle` is traversed all-forward or all-backward under
    /// this orientation, given the graph's edge ordering.
    pub fn cyclically_orients(&self, edge_index: &EdgeIndex, cycle: &[VertexId]) -> bool {
        let k = cycle.len();
        let mut forward = 0usize;
        for i in 0..k {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            let idx = edge_index.index_of(a, b);
            let from_low = a < b;
            let bit = (self.bits >> idx) & 1 == 0;
            // bit=0 means low -> high
            if bit == from_low {
                forward += 1;
            }
        }
        forward == 0 || forward == k
    }
}

/// Lookup table from unordered vertex pairs to positions in the fixed
/// edge ordering.
pub struct EdgeIndex {
    map: std::collections::HashMap<(u32, u32), usize>,
}

impl EdgeIndex {
    pub fn new(g: &Graph) -> EdgeIndex {
        let map = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| ((u.0, v.0), i))
            .collect();
        EdgeIndex { map }
    }

    fn index_of(&self, a: VertexId, b: VertexId) -> usize {
        let key = (a.0.min(b.0), a.0.max(b.0));
        self.map[&key]
    }
}

pub const DEFAULT_ORIENTATION_CAP: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("oracle out of range: {m} edges exceeds the {cap}-edge cap")]
pub struct OracleRangeError {
    pub m: usize,
    pub cap: usize,
}

/// Exhaustive cyclic-orientability test: true iff some assignment of
/// directions makes every chordless cycle a directed cycle. Only edges
/// lying on some chordless cycle matter, so the search enumerates
/// orientations of those; the answer equals the sweep over all 2^m.
pub fn brute_is_co(g: &Graph, max_edges: usize) -> Result<bool, OracleRangeError> {
    if g.m() > max_edges {
        return Err(OracleRangeError {
            m: g.m(),
            cap: max_edges,
        });
    }
    let cycles: Vec<Vec<VertexId>> = brute_chordless_cycles(g)
        .into_iter()
        .map(|c| c.vertices().to_vec())
        .collect();
    if cycles.is_empty() {
        return Ok(true);
    }
    let edge_index = EdgeIndex::new(g);
    let mut on_cycle = vec![false; g.m()];
    for c in &cycles {
        let k = c.len();
        for i in 0..k {
            on_cycle[edge_index.index_of(c[i], c[(i + 1) % k])] = true;
        }
    }
    let free_edges: Vec<usize> = (0..g.m()).filter(|&i| on_cycle[i]).collect();
    let k = free_edges.len();
    for assignment in 0u64..(1u64 << k) {
        let mut bits = 0u64;
        for (j, &e) in free_edges.iter().enumerate() {
            if (assignment >> j) & 1 == 1 {
                bits |= 1 << e;
            }
        }
        let o = Orientation { bits };
        if cycles.iter().all(|c| o.cyclically_orients(&edge_index, c)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Structural cyclic-orientability test by greedy peeling, with no code
/// shared with the reducer. Rules, applied to exhaustion:
///   - drop vertices of degree <= 1 (they lie on no cycle);
///   - delete a connected component that is a bare cycle;
///   - delete the interior of a maximal degree-2 chain whose two anchors
///     are adjacent, or coincide (a cycle hanging off one cut vertex).
///
/// The graph is cyclically orientable iff nothing survives. Peel order
/// does not affect the answer.
pub fn decompose_is_co(g: &Graph) -> bool {
    let n = g.n();
    let mut adj: Vec<std::collections::BTreeSet<u32>> = (0..n)
        .map(|i| g.neighbors(VertexId(i as u32)).iter().map(|v| v.0).collect())
        .collect();
    let mut alive: Vec<bool> = (0..n).map(|i| !adj[i].is_empty()).collect();

    let remove_vertex = |adj: &mut Vec<std::collections::BTreeSet<u32>>, alive: &mut Vec<bool>, v: u32| {
        let nbrs: Vec<u32> = adj[v as usize].iter().copied().collect();
        for w in nbrs {
            adj[w as usize].remove(&v);
        }
        adj[v as usize].clear();
        alive[v as usize] = false;
    };

    loop {
        let mut changed = false;

        // strip low-degree vertices
        let mut queue: Vec<u32> = (0..n as u32)
            .filter(|&v| alive[v as usize] && adj[v as usize].len() <= 1)
            .collect();
        while let Some(v) = queue.pop() {
            if !alive[v as usize] {
                continue;
            }
            let nbrs: Vec<u32> = adj[v as usize].iter().copied().collect();
            remove_vertex(&mut adj, &mut alive, v);
            changed = true;
            for w in nbrs {
                if alive[w as usize] && adj[w as usize].len() <= 1 {
                    queue.push(w);
                }
            }
        }

        // peel one chain or bare cycle, then rescan
        let mut peeled = false;
        for v in 0..n as u32 {
            if !alive[v as usize] || adj[v as usize].len() != 2 {
                continue;
            }
            // walk the maximal degree-2 chain through v
            let mut chain = vec![v];
            let mut ends = [0u32; 2];
            let mut closed = false;
            let start_nbrs: Vec<u32> = adj[v as usize].iter().copied().collect();
            for (dir, &first) in start_nbrs.iter().enumerate() {
                let mut prev = v;
                let mut cur = first;
                loop {
                    if cur == v {
                        closed = true;
                        break;
                    }
                    if adj[cur as usize].len() != 2 {
                        ends[dir] = cur;
                        break;
                    }
                    if dir == 0 {
                        chain.insert(0, cur);
                    } else {
                        chain.push(cur);
                    }
                    let next = *adj[cur as usize]
                        .iter()
                        .find(|&&w| w != prev)
                        .expect("degree-2 vertex has a second neighbor");
                    prev = cur;
                    cur = next;
                }
                if closed {
                    break;
                }
            }
            if closed {
                // the component is a bare cycle
                let members: Vec<u32> = {
                    let mut ms = vec![v];
                    let mut prev = v;
                    let mut cur = start_nbrs[0];
                    while cur != v {
                        ms.push(cur);
                        let next = *adj[cur as usize].iter().find(|&&w| w != prev).unwrap();
                        prev = cur;
                        cur = next;
                    }
                    ms
                };
                for u in members {
                    remove_vertex(&mut adj, &mut alive, u);
                }
                peeled = true;
                break;
            }
            let (x, y) = (ends[0], ends[1]);
            if x == y || adj[x as usize].contains(&y) {
                for u in chain {
                    remove_vertex(&mut adj, &mut alive, u);
                }
                peeled = true;
                break;
            }
        }
        if peeled {
            changed = true;
        }
        if !changed {
            break;
        }
    }
    alive.iter().all(|a| !a)
}
