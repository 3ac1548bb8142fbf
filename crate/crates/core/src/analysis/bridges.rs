//! Isthmi and blocks of a multigraph via a single low-link search.
//!
//! The search skips only the tree edge it arrived by (compared by edge index,
//! not by endpoint), so a parallel copy of a tree edge counts as a back edge
//! and parallel pairs land in one block as a digon.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::{EdgeIx, Multigraph, Topology, VertexIx};

/// A block of the graph: a maximal subgraph without a cutpoint.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Block {
    pub edges: Vec<String>,
    pub vertices: Vec<String>,
    /// True iff the block contains a circle.
    pub nontrivial: bool,
}

/// Blocks by index. Isolated vertices form edgeless blocks.
#[derive(Debug, Clone)]
pub(crate) struct Decomposition {
    pub isthmus: Vec<bool>,
    pub block_of_edge: Vec<usize>,
    pub blocks: Vec<BlockIx>,
}

#[derive(Debug, Clone)]
pub(crate) struct BlockIx {
    pub edges: Vec<EdgeIx>,
    pub vertices: Vec<VertexIx>,
    pub nontrivial: bool,
}

impl Decomposition {
    pub fn new(t: &Topology) -> Decomposition {
        let n = t.vertex_count();
        let m = t.edge_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut isthmus = vec![false; m];
        let mut edge_stack: Vec<EdgeIx> = Vec::new();
        let mut raw_blocks: Vec<Vec<EdgeIx>> = Vec::new();
        let mut clock = 0;

        // frame: (vertex, tree edge used to reach it, next incidence position)
        let mut stack: Vec<(VertexIx, Option<EdgeIx>, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            if t.degree(root) == 0 {
                raw_blocks.push(Vec::new());
            }
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            stack.push((root, None, 0));
            while let Some(frame) = stack.last_mut() {
                let (v, via, pos) = *frame;
                if let Some(&e) = t.incident(v).get(pos) {
                    frame.2 += 1;
                    if via == Some(e) {
                        continue;
                    }
                    let w = t.opposite(e, v);
                    if disc[w] == usize::MAX {
                        edge_stack.push(e);
                        disc[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        stack.push((w, Some(e), 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(e);
                        low[v] = low[v].min(disc[w]);
                    }
                    continue;
                }
                stack.pop();
                let (Some(e), Some(&(parent, _, _))) = (via, stack.last()) else {
                    continue;
                };
                low[parent] = low[parent].min(low[v]);
                if low[v] > disc[parent] {
                    isthmus[e] = true;
                }
                if low[v] >= disc[parent] {
                    let mut block = Vec::new();
                    while let Some(f) = edge_stack.pop() {
                        block.push(f);
                        if f == e {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                }
            }
        }

        let mut isolated = (0..n).filter(|&v| t.degree(v) == 0);
        let mut blocks: Vec<BlockIx> = raw_blocks
            .into_iter()
            .map(|mut edges| {
                edges.sort_unstable();
                let vertices: Vec<VertexIx> = if edges.is_empty() {
                    vec![isolated.next().expect("one edgeless block per isolated vertex")]
                } else {
                    edges
                        .iter()
                        .flat_map(|&e| {
                            let (a, b) = t.endpoints(e);
                            [a, b]
                        })
                        .collect::<BTreeSet<_>>()
                        .into_iter()
                        .collect()
                };
                let nontrivial = edges.len() >= 2;
                BlockIx { edges, vertices, nontrivial }
            })
            .collect();
        blocks.sort_by(|a, b| {
            (a.edges.is_empty(), &a.edges, &a.vertices).cmp(&(b.edges.is_empty(), &b.edges, &b.vertices))
        });

        let mut block_of_edge = vec![usize::MAX; m];
        for (i, b) in blocks.iter().enumerate() {
            for &e in &b.edges {
                block_of_edge[e] = i;
            }
        }
        Decomposition { isthmus, block_of_edge, blocks }
    }

    /// Whether `v` lies on a nontrivial block.
    pub fn in_nontrivial_block(&self, t: &Topology, v: VertexIx) -> bool {
        t.incident(v).iter().any(|&e| self.blocks[self.block_of_edge[e]].nontrivial)
    }
}

/// Edge ids lying on no circle.
pub fn find_isthmi<G: Multigraph>(g: &G) -> BTreeSet<String> {
    let t = g.topology();
    let d = Decomposition::new(t);
    (0..t.edge_count()).filter(|&e| d.isthmus[e]).map(|e| t.edge_id(e).to_owned()).collect()
}

/// Blocks in a deterministic order: edge-bearing blocks by edge ids, then
/// isolated vertices.
pub fn blocks<G: Multigraph>(g: &G) -> Vec<Block> {
    let t = g.topology();
    Decomposition::new(t)
        .blocks
        .into_iter()
        .map(|b| Block {
            edges: b.edges.iter().map(|&e| t.edge_id(e).to_owned()).collect(),
            vertices: b.vertices.iter().map(|&v| t.vertex_id(v).to_owned()).collect(),
            nontrivial: b.nontrivial,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Sign, SignedEdge, SignedGraph};

    fn graph(n: usize, edges: &[(usize, usize)]) -> SignedGraph {
        SignedGraph::new(
            (0..n).map(|i| format!("v{i}")),
            edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| SignedEdge::new(format!("e{i}"), format!("v{u}"), format!("v{v}"), Sign::Positive))
                .collect(),
        )
        .unwrap()
    }

    fn ids(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn isthmi_examples() {
        assert_eq!(find_isthmi(&graph(4, &[(0, 1), (1, 2), (2, 3)])), ids(&["e0", "e1", "e2"]));
        assert!(find_isthmi(&graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])).is_empty());
        // paw: triangle 0-1-2 plus pendant 2-3
        assert_eq!(find_isthmi(&graph(4, &[(0, 1), (1, 2), (2, 0), (2, 3)])), ids(&["e3"]));
        // parallel pair is not an isthmus
        assert_eq!(find_isthmi(&graph(3, &[(0, 1), (0, 1), (1, 2)])), ids(&["e2"]));
    }

    #[test]
    fn block_examples() {
        let paw = blocks(&graph(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]));
        assert_eq!(paw.len(), 2);
        assert_eq!(paw[0].edges, ["e0", "e1", "e2"]);
        assert!(paw[0].nontrivial);
        assert_eq!(paw[1].edges, ["e3"]);
        assert!(!paw[1].nontrivial);

        let circle = blocks(&graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]));
        assert_eq!(circle.len(), 1);
        assert!(circle[0].nontrivial);

        let path = blocks(&graph(4, &[(0, 1), (1, 2), (2, 3)]));
        assert_eq!(path.len(), 3);
        assert!(path.iter().all(|b| !b.nontrivial && b.edges.len() == 1));
    }

    #[test]
    fn isolated_vertices_and_bowtie() {
        // two triangles sharing v2, plus isolated v5
        let g = graph(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let bs = blocks(&g);
        assert_eq!(bs.len(), 3);
        assert_eq!(bs[2].vertices, ["v5"]);
        assert!(bs[2].edges.is_empty() && !bs[2].nontrivial);
        assert!(find_isthmi(&g).is_empty());
    }

    #[test]
    fn digon_is_nontrivial_block() {
        let bs = blocks(&graph(2, &[(0, 1), (1, 0)]));
        assert_eq!(bs.len(), 1);
        assert!(bs[0].nontrivial);
        assert_eq!(bs[0].vertices, ["v0", "v1"]);
    }
}
