//! Decomposition into biconnected (two-connected) components.
//!
//! Every chordless cycle lives in exactly one two-connected component, so
//! the reducer works component by component. Components are materialized
//! as independent subgraphs with dense ids and a mapping back to the
//! parent, leaving the reducer free to mutate its copy.

use crate::graph::{Graph, VertexId};

/// One biconnected component: an independent subgraph plus the mapping
/// from its dense local ids back to the parent's ids.
#[derive(Clone, Debug)]
pub struct Component {
    pub subgraph: Graph,
    pub to_parent: Vec<VertexId>,
    pub is_single_edge: bool,
}

/// Split `g` into biconnected components with one iterative lowpoint DFS.
/// Every edge lands in exactly one component; cut vertices appear in
/// several; isolated vertices yield none. Bridges come out as single-edge
/// components.
pub fn biconnected_components(g: &Graph) -> Vec<Component> {
    let n = g.n();
    const UNSET: u32 = u32::MAX;
    let mut disc = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut timer: u32 = 0;
    let mut edge_stack: Vec<(u32, u32)> = Vec::new();
    let mut components = Vec::new();

    // Explicit DFS stack; chains in the inputs get far too deep for
    // recursion.
    struct Frame {
        v: u32,
        parent: u32,
        next: usize,
    }

    for root in 0..n as u32 {
        if disc[root as usize] != UNSET || g.degree(VertexId(root)) == 0 {
            continue;
        }
        disc[root as usize] = timer;
        low[root as usize] = timer;
        timer += 1;
        let mut stack = vec![Frame {
            v: root,
            parent: UNSET,
            next: 0,
        }];
        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            let nbrs = g.neighbors(VertexId(v));
            if frame.next < nbrs.len() {
                let w = nbrs[frame.next].0;
                frame.next += 1;
                if w == frame.parent {
                    continue;
                }
                if disc[w as usize] == UNSET {
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    timer += 1;
                    edge_stack.push((v, w));
                    stack.push(Frame {
                        v: w,
                        parent: v,
                        next: 0,
                    });
                } else if disc[w as usize] < disc[v as usize] {
                    // Back edge, seen once from the lower endpoint.
                    edge_stack.push((v, w));
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                let parent = frame.parent;
                stack.pop();
                if parent == UNSET {
                    break;
                }
                low[parent as usize] = low[parent as usize].min(low[v as usize]);
                if low[v as usize] >= disc[parent as usize] {
                    // parent is an articulation point (or the root) for the
                    // subtree at v; everything above (parent, v) on the edge
                    // stack is one component.
                    let mut edges = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        edges.push(e);
                        if e == (parent, v) {
                            break;
                        }
                    }
                    components.push(materialize(&edges));
                }
            }
        }
        debug_assert!(edge_stack.is_empty());
    }
    components
}

fn materialize(edges: &[(u32, u32)]) -> Component {
    let mut verts: Vec<u32> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let local: std::collections::HashMap<u32, u32> = verts
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i as u32))
        .collect();
    let local_edges: Vec<(u32, u32)> = edges.iter().map(|&(u, v)| (local[&u], local[&v])).collect();
    let subgraph = Graph::from_edges(verts.len(), &local_edges).expect("component of a simple graph");
    Component {
        subgraph,
        to_parent: verts.into_iter().map(VertexId).collect(),
        is_single_edge: edges.len() == 1,
    }
}
