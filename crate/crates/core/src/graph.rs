//! Graph data model: edge-list parsing, cycle canonicalization and the
//! direct chordlessness verifier used by every other module.
//!
//! Graphs are immutable after construction. Vertices carry dense 0-based
//! internal ids; the 1-based labels of the input file are kept in a side
//! table and used for all printed output.

use std::collections::BTreeSet;
use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Dense 0-based vertex index, unique within its graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A cycle in traversal order. The first vertex is not repeated at the end;
/// consecutive vertices (and the last/first pair) must be edges of the
/// owning graph.
pub type Cycle = Vec<VertexId>;

/// Rotation/reflection normal form of a cycle: the minimum vertex comes
/// first, followed by the smaller of its two cycle neighbors. Two
/// traversals of the same cycle in either direction canonicalize
/// identically, so a set of these reports each cycle exactly once.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCycle(Vec<VertexId>);

impl CanonicalCycle {
    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CanonicalCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Set of canonical cycles, ordered lexicographically.
pub type CycleSet = BTreeSet<CanonicalCycle>;

/// Normalize a cycle to its canonical form. Idempotent and invariant under
/// rotation and reversal of the input.
pub fn canonicalize(cycle: &[VertexId]) -> CanonicalCycle {
    let k = cycle.len();
    debug_assert!(k >= 3, "cycles have at least 3 vertices");
    let pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| **v)
        .map(|(i, _)| i)
        .unwrap();
    let next = cycle[(pos + 1) % k];
    let prev = cycle[(pos + k - 1) % k];
    let mut out = Vec::with_capacity(k);
    if next <= prev {
        for i in 0..k {
            out.push(cycle[(pos + i) % k]);
        }
    } else {
        for i in 0..k {
            out.push(cycle[(pos + k - i) % k]);
        }
    }
    CanonicalCycle(out)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("vertex id {0} out of range for {1} vertices")]
    OutOfRange(u32, usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: self-loops are not allowed (vertex {label})")]
    SelfLoop { line: usize, label: u32 },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: u32, v: u32 },
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: vertex label {label} outside 1..={n} declared by the header")]
    LabelOutOfRange { line: usize, label: u32, n: usize },
    #[error("header declares {expected} edges but the body lists {actual}")]
    EdgeCountMismatch { expected: usize, actual: usize },
}

/// Immutable simple undirected graph. Adjacency lists are kept sorted so
/// edge membership is a binary search.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    m: usize,
    labels: Vec<u32>,
}

impl Graph {
    /// Build from 0-based vertex-id pairs. Labels default to id + 1.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let labels = (1..=n as u32).collect();
        Self::build(n, edges, labels)
    }

    fn build(n: usize, edges: &[(u32, u32)], labels: Vec<u32>) -> Result<Graph, GraphError> {
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u as usize >= n {
                return Err(GraphError::OutOfRange(u, n));
            }
            if v as usize >= n {
                return Err(GraphError::OutOfRange(v, n));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            adj[u as usize].push(VertexId(v));
            adj[v as usize].push(VertexId(u));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            m: edges.len(),
            labels,
        })
    }

    /// Parse the edge-list format: optional `c` comment lines, an optional
    /// `p edge <n> <m>` header, `e <u> <v>` edge lines with 1-based labels,
    /// and bare `<u> <v>` lines when no header is present.
    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(u32, u32)> = Vec::new();
        let mut seen: HashSet<(u32, u32)> = HashSet::new();

        let parse_labels = |tokens: &[&str], line: usize| -> Result<(u32, u32), ParseError> {
            if tokens.len() != 2 {
                return Err(ParseError::Malformed {
                    line,
                    msg: format!("expected two vertex labels, found {} tokens", tokens.len()),
                });
            }
            let mut out = [0u32; 2];
            for (slot, tok) in out.iter_mut().zip(tokens) {
                *slot = tok.parse::<u32>().map_err(|_| ParseError::Malformed {
                    line,
                    msg: format!("invalid vertex label `{tok}`"),
                })?;
                if *slot == 0 {
                    return Err(ParseError::Malformed {
                        line,
                        msg: "vertex labels are 1-based positive integers".into(),
                    });
                }
            }
            Ok((out[0], out[1]))
        };

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let tokens: Vec<&str> = raw.split_whitespace().collect();
            if tokens.is_empty() || tokens[0] == "c" {
                continue;
            }
            let (u, v) = match tokens[0] {
                "p" => {
                    if header.is_some() {
                        return Err(ParseError::Malformed {
                            line,
                            msg: "duplicate header line".into(),
                        });
                    }
                    if !edges.is_empty() {
                        return Err(ParseError::Malformed {
                            line,
                            msg: "header must precede edge lines".into(),
                        });
                    }
                    if tokens.len() != 4 || tokens[1] != "edge" {
                        return Err(ParseError::Malformed {
                            line,
                            msg: "expected `p edge <n> <m>`".into(),
                        });
                    }
                    let n = tokens[2].parse::<usize>().map_err(|_| ParseError::Malformed {
                        line,
                        msg: format!("invalid vertex count `{}`", tokens[2]),
                    })?;
                    let m = tokens[3].parse::<usize>().map_err(|_| ParseError::Malformed {
                        line,
                        msg: format!("invalid edge count `{}`", tokens[3]),
                    })?;
                    header = Some((n, m));
                    continue;
                }
                "e" => parse_labels(&tokens[1..], line)?,
                _ => {
                    if header.is_some() {
                        return Err(ParseError::Malformed {
                            line,
                            msg: format!("unexpected line `{}`; expected `e <u> <v>`", raw.trim()),
                        });
                    }
                    parse_labels(&tokens, line)?
                }
            };
            if u == v {
                return Err(ParseError::SelfLoop { line, label: u });
            }
            if let Some((n, _)) = header {
                for label in [u, v] {
                    if label as usize > n {
                        return Err(ParseError::LabelOutOfRange { line, label, n });
                    }
                }
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(ParseError::DuplicateEdge {
                    line,
                    u: key.0,
                    v: key.1,
                });
            }
            edges.push((u, v));
        }

        type LabelMap = Box<dyn Fn(u32) -> u32>;
        let (n, labels, id_of): (usize, Vec<u32>, LabelMap) = match header {
            Some((n, m)) => {
                if edges.len() != m {
                    return Err(ParseError::EdgeCountMismatch {
                        expected: m,
                        actual: edges.len(),
                    });
                }
                (n, (1..=n as u32).collect(), Box::new(|label| label - 1))
            }
            None => {
                let mut labels: Vec<u32> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
                labels.sort_unstable();
                labels.dedup();
                let index: std::collections::HashMap<u32, u32> = labels
                    .iter()
                    .enumerate()
                    .map(|(i, &l)| (l, i as u32))
                    .collect();
                (labels.len(), labels, Box::new(move |label| index[&label]))
            }
        };
        let id_edges: Vec<(u32, u32)> = edges.iter().map(|&(u, v)| (id_of(u), id_of(v))).collect();
        // Self-loops and duplicates were rejected above with line numbers.
        Ok(Self::build(n, &id_edges, labels).expect("validated edge list"))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u.index()].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.adj.len() as u32).map(VertexId)
    }

    /// All edges as (u, v) with u < v, sorted. This is the fixed edge
    /// ordering the orientation oracle indexes into.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: VertexId) -> u32 {
        self.labels[v.index()]
    }

    /// Serialize back to the edge-list format with a header.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("e {} {}\n", self.label(u), self.label(v)));
        }
        out
    }
}

/// True iff `cycle` is a cycle of `g` with no chord: no edge of `g` joins
/// two non-consecutive vertices of the cycle. Malformed sequences return
/// false rather than panicking.
pub fn is_chordless_cycle(g: &Graph, cycle: &[VertexId]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut seen = HashSet::with_capacity(k);
    for &v in cycle {
        if v.index() >= g.n() || !seen.insert(v) {
            return false;
        }
    }
    for i in 0..k {
        if !g.has_edge(cycle[i], cycle[(i + 1) % k]) {
            return false;
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if !consecutive && g.has_edge(cycle[i], cycle[j]) {
                return false;
            }
        }
    }
    true
}
