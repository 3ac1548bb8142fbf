//! Component-by-component classification of the negative subgraph.
//!
//! A line-consistent signed graph is balanced and every component of its
//! negative subgraph is one of:
//!
//! * a circle that is a whole block, each vertex carrying at most one more
//!   edge, a positive isthmus;
//! * a nontrivial path that is induced, or is a circle block minus one
//!   positive edge; its endpoints have degree at most 2, its interior vertices
//!   carry at most one more edge (a positive isthmus), and it either lies in a
//!   nontrivial block or consists of isthmi whose endpoints avoid every
//!   nontrivial block;
//! * a single vertex.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cycles::is_balanced_fast;
use crate::graph::{EdgeIx, Multigraph, Sign, SignedGraph, Topology, VertexIx};

use super::bridges::{Block, Decomposition};
use super::witness::attach_witness;
use super::{Clause, Method, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentKind {
    Circle,
    NontrivialPath,
    SingleVertex,
    /// Some vertex has three or more negative edges.
    Irregular,
}

/// An edge at a component vertex that is not part of the component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtraEdge {
    pub vertex: String,
    pub edge: String,
    pub positive: bool,
    pub isthmus: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircleFacts {
    pub is_block: bool,
    pub extra_edges: Vec<ExtraEdge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathCase {
    /// The path lies inside one nontrivial block.
    InNontrivialBlock,
    /// Every path edge is an isthmus and no endpoint touches a nontrivial block.
    IsthmusPath,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathFacts {
    /// Vertices in path order, starting from the lesser endpoint.
    pub order: Vec<String>,
    pub induced: bool,
    /// The positive edge completing the path to a circle block, if that is the shape.
    pub closing_edge: Option<String>,
    pub endpoints_at_most_divalent: bool,
    pub interior_extra_edges: Vec<ExtraEdge>,
    pub case: Option<PathCase>,
    /// Reported consequences: both endpoints have degree exactly 2 ...
    pub endpoints_divalent: bool,
    /// ... and every non-path edge at an endpoint is a positive isthmus.
    pub endpoint_extensions_positive_isthmi: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    pub kind: ComponentKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circle: Option<CircleFacts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<PathFacts>,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub balanced: bool,
    pub line_consistent: bool,
    pub failed_clause: Option<Clause>,
    pub components: Vec<ComponentReport>,
    pub blocks: Vec<Block>,
}

impl StructureReport {
    /// The report as a verdict, with a witness when negative.
    pub fn to_verdict(&self, g: &SignedGraph) -> Verdict {
        match &self.failed_clause {
            None => Verdict::consistent(Method::Structure),
            Some(c) => attach_witness(g, Verdict::failed(Method::Structure, c.clone())),
        }
    }
}

struct Context<'a> {
    g: &'a SignedGraph,
    t: &'a Topology,
    d: Decomposition,
}

impl Context<'_> {
    fn extra_edges(&self, v: VertexIx, component: &BTreeSet<EdgeIx>) -> Vec<ExtraEdge> {
        self.t
            .incident(v)
            .iter()
            .filter(|e| !component.contains(e))
            .map(|&e| ExtraEdge {
                vertex: self.t.vertex_id(v).to_owned(),
                edge: self.t.edge_id(e).to_owned(),
                positive: self.g.sign(e).is_positive(),
                isthmus: self.d.isthmus[e],
            })
            .collect()
    }

    /// At most one extra edge, and it is a positive isthmus.
    fn lone_positive_isthmus(extra: &[ExtraEdge]) -> bool {
        match extra {
            [] => true,
            [x] => x.positive && x.isthmus,
            _ => false,
        }
    }

    fn is_block(&self, edges: &BTreeSet<EdgeIx>) -> bool {
        let Some(&first) = edges.first() else { return false };
        let block = &self.d.blocks[self.d.block_of_edge[first]];
        block.edges.len() == edges.len() && block.edges.iter().all(|e| edges.contains(e))
    }

    fn circle(&self, vertices: &[VertexIx], edges: &BTreeSet<EdgeIx>) -> (CircleFacts, Option<Clause>) {
        let is_block = self.is_block(edges);
        let mut extra_edges = Vec::new();
        let mut clause =
            (!is_block).then(|| Clause::NegativeCircleNotBlock { vertex: self.t.vertex_id(vertices[0]).into() });
        for &v in vertices {
            let extra = self.extra_edges(v, edges);
            if clause.is_none() && !Self::lone_positive_isthmus(&extra) {
                clause = Some(Clause::NegativeCircleExtraEdge { vertex: self.t.vertex_id(v).into() });
            }
            extra_edges.extend(extra);
        }
        (CircleFacts { is_block, extra_edges }, clause)
    }

    fn path(&self, order: &[VertexIx], edges: &BTreeSet<EdgeIx>) -> (PathFacts, Option<Clause>) {
        let t = self.t;
        let on_path: BTreeSet<VertexIx> = order.iter().copied().collect();
        let (a, b) = (order[0], *order.last().expect("nontrivial path"));
        let endpoints = [t.vertex_id(a).to_owned(), t.vertex_id(b).to_owned()];

        let chords: Vec<EdgeIx> = on_path
            .iter()
            .flat_map(|&v| t.incident(v).iter().copied())
            .filter(|e| !edges.contains(e))
            .filter(|&e| {
                let (x, y) = t.endpoints(e);
                on_path.contains(&x) && on_path.contains(&y)
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let induced = chords.is_empty();
        let closing_edge = match chords.as_slice() {
            [f] => {
                let (x, y) = t.endpoints(*f);
                let mut circle = edges.clone();
                circle.insert(*f);
                let joins_ends = (x == a && y == b) || (x == b && y == a);
                (joins_ends && self.g.sign(*f).is_positive() && self.is_block(&circle)).then_some(*f)
            }
            _ => None,
        };

        let endpoints_at_most_divalent = t.degree(a) <= 2 && t.degree(b) <= 2;
        let mut interior_extra_edges = Vec::new();
        let mut interior_bad = None;
        for &v in &order[1..order.len() - 1] {
            let extra = self.extra_edges(v, edges);
            if interior_bad.is_none() && !Self::lone_positive_isthmus(&extra) {
                interior_bad = Some(v);
            }
            interior_extra_edges.extend(extra);
        }

        let first_block = self.d.block_of_edge[*edges.first().expect("nontrivial path")];
        let in_block =
            self.d.blocks[first_block].nontrivial && edges.iter().all(|&e| self.d.block_of_edge[e] == first_block);
        let isthmus_path = edges.iter().all(|&e| self.d.isthmus[e])
            && !self.d.in_nontrivial_block(t, a)
            && !self.d.in_nontrivial_block(t, b);
        let case = if in_block {
            Some(PathCase::InNontrivialBlock)
        } else if isthmus_path {
            Some(PathCase::IsthmusPath)
        } else {
            None
        };

        let endpoints_divalent = t.degree(a) == 2 && t.degree(b) == 2;
        let endpoint_extensions_positive_isthmi =
            [a, b].iter().flat_map(|&v| self.extra_edges(v, edges)).all(|x| x.positive && x.isthmus);

        let clause = if !induced && closing_edge.is_none() {
            Some(Clause::PathShape { endpoints: endpoints.clone() })
        } else if !endpoints_at_most_divalent {
            let v = if t.degree(a) > 2 { a } else { b };
            Some(Clause::PathEndpointDegree { vertex: t.vertex_id(v).into() })
        } else if let Some(v) = interior_bad {
            Some(Clause::PathInteriorExtraEdge { vertex: t.vertex_id(v).into() })
        } else if case.is_none() {
            Some(Clause::PathPlacement { endpoints: endpoints.clone() })
        } else {
            None
        };

        let facts = PathFacts {
            order: order.iter().map(|&v| t.vertex_id(v).to_owned()).collect(),
            induced,
            closing_edge: closing_edge.map(|f| t.edge_id(f).to_owned()),
            endpoints_at_most_divalent,
            interior_extra_edges,
            case,
            endpoints_divalent,
            endpoint_extensions_positive_isthmi,
        };
        (facts, clause)
    }
}

/// Vertices of the negative path starting at endpoint `start`.
fn walk_path(t: &Topology, edges: &BTreeSet<EdgeIx>, start: VertexIx) -> Vec<VertexIx> {
    let mut order = vec![start];
    let mut prev_edge = None;
    let mut cur = start;
    while let Some(&e) = t.incident(cur).iter().find(|e| edges.contains(e) && Some(**e) != prev_edge) {
        cur = t.opposite(e, cur);
        order.push(cur);
        prev_edge = Some(e);
    }
    order
}

pub fn classify_structure(g: &SignedGraph) -> StructureReport {
    let t = g.topology();
    let n = t.vertex_count();
    let cx = Context { g, t, d: Decomposition::new(t) };
    let negative_degree: Vec<usize> = (0..n).map(|v| g.signed_degree(v, Sign::Negative)).collect();

    let mut component_of = vec![usize::MAX; n];
    let mut components = Vec::new();
    let mut failed: Option<Clause> = None;
    for root in 0..n {
        if component_of[root] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut vertices = vec![root];
        let mut edges = BTreeSet::new();
        component_of[root] = id;
        let mut i = 0;
        while i < vertices.len() {
            let v = vertices[i];
            i += 1;
            for &e in t.incident(v) {
                if g.sign(e).is_positive() {
                    continue;
                }
                edges.insert(e);
                let w = t.opposite(e, v);
                if component_of[w] == usize::MAX {
                    component_of[w] = id;
                    vertices.push(w);
                }
            }
        }
        vertices.sort_unstable();

        let max_degree = vertices.iter().map(|&v| negative_degree[v]).max().unwrap_or(0);
        let kind = if edges.is_empty() {
            ComponentKind::SingleVertex
        } else if max_degree > 2 {
            ComponentKind::Irregular
        } else if vertices.iter().all(|&v| negative_degree[v] == 2) {
            ComponentKind::Circle
        } else {
            ComponentKind::NontrivialPath
        };

        let (circle, path, clause) = match kind {
            ComponentKind::SingleVertex => (None, None, None),
            ComponentKind::Irregular => {
                let v = *vertices.iter().find(|&&v| negative_degree[v] > 2).expect("irregular vertex");
                (None, None, Some(Clause::IrregularNegativeComponent { vertex: t.vertex_id(v).into() }))
            }
            ComponentKind::Circle => {
                let (facts, clause) = cx.circle(&vertices, &edges);
                (Some(facts), None, clause)
            }
            ComponentKind::NontrivialPath => {
                let start = *vertices.iter().find(|&&v| negative_degree[v] == 1).expect("path endpoint");
                let order = walk_path(t, &edges, start);
                let (facts, clause) = cx.path(&order, &edges);
                (None, Some(facts), clause)
            }
        };
        if failed.is_none() {
            failed = clause.clone();
        }
        components.push(ComponentReport {
            vertices: vertices.iter().map(|&v| t.vertex_id(v).to_owned()).collect(),
            edges: edges.iter().map(|&e| t.edge_id(e).to_owned()).collect(),
            kind,
            circle,
            path,
            satisfied: clause.is_none(),
        });
    }

    let balanced = is_balanced_fast(g);
    if !balanced {
        failed = Some(Clause::Unbalanced);
    }
    StructureReport {
        balanced,
        line_consistent: failed.is_none(),
        failed_clause: failed,
        components,
        blocks: super::bridges::blocks(g),
    }
}

/// [`classify_structure`] as a verdict.
pub fn check_structure(g: &SignedGraph) -> Verdict {
    classify_structure(g).to_verdict(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SignedEdge;
    use Sign::{Negative as N, Positive as P};

    fn cycle(signs: &[Sign]) -> SignedGraph {
        let k = signs.len();
        SignedGraph::new(
            (0..k).map(|i| format!("v{i}")),
            signs
                .iter()
                .enumerate()
                .map(|(i, &s)| SignedEdge::new(format!("e{i}"), format!("v{i}"), format!("v{}", (i + 1) % k), s))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn negative_circle_block() {
        let r = classify_structure(&cycle(&[N, N, N, N]));
        assert!(r.line_consistent);
        assert_eq!(r.components.len(), 1);
        let c = &r.components[0];
        assert_eq!(c.kind, ComponentKind::Circle);
        let facts = c.circle.as_ref().unwrap();
        assert!(facts.is_block);
        assert!(facts.extra_edges.is_empty());
    }

    #[test]
    fn star_with_isthmus_path() {
        let g = SignedGraph::new(
            ["c", "l1", "l2", "l3"],
            vec![
                SignedEdge::new("e1", "c", "l1", P),
                SignedEdge::new("e2", "c", "l2", N),
                SignedEdge::new("e3", "c", "l3", N),
            ],
        )
        .unwrap();
        let r = classify_structure(&g);
        assert!(r.line_consistent);
        let paths: Vec<_> = r.components.iter().filter(|c| c.kind == ComponentKind::NontrivialPath).collect();
        assert_eq!(paths.len(), 1);
        let p = paths[0].path.as_ref().unwrap();
        assert_eq!(p.order, ["l2", "c", "l3"]);
        assert_eq!(p.case, Some(PathCase::IsthmusPath));
        assert_eq!(p.interior_extra_edges.len(), 1);
        assert!(p.interior_extra_edges[0].positive && p.interior_extra_edges[0].isthmus);
        assert_eq!(r.components.iter().filter(|c| c.kind == ComponentKind::SingleVertex).count(), 1);
    }

    #[test]
    fn path_closed_by_positive_edge() {
        let r = classify_structure(&cycle(&[N, N, P]));
        assert!(r.line_consistent);
        let p = r.components[0].path.as_ref().unwrap();
        assert!(!p.induced);
        assert_eq!(p.closing_edge.as_deref(), Some("e2"));
        assert_eq!(p.case, Some(PathCase::InNontrivialBlock));
        assert!(p.endpoints_divalent);
    }

    #[test]
    fn odd_closed_path_is_unbalanced() {
        let r = classify_structure(&cycle(&[N, N, N, P]));
        assert!(!r.balanced);
        assert!(!r.line_consistent);
        // the shape itself is fine; only balance fails
        assert!(r.components.iter().all(|c| c.satisfied));
        assert_eq!(r.failed_clause, Some(Clause::Unbalanced));
    }

    #[test]
    fn induced_paths_in_a_block() {
        let r = classify_structure(&cycle(&[N, N, P, P]));
        assert!(r.line_consistent);
        let p = r.components.iter().find_map(|c| c.path.as_ref()).unwrap();
        assert!(p.induced);
        assert_eq!(p.case, Some(PathCase::InNontrivialBlock));
    }

    #[test]
    fn irregular_component() {
        let g = SignedGraph::new(
            ["c", "a", "b", "d"],
            vec![
                SignedEdge::new("e1", "c", "a", N),
                SignedEdge::new("e2", "c", "b", N),
                SignedEdge::new("e3", "c", "d", N),
            ],
        )
        .unwrap();
        let r = classify_structure(&g);
        assert_eq!(r.components[0].kind, ComponentKind::Irregular);
        assert_eq!(r.failed_clause, Some(Clause::IrregularNegativeComponent { vertex: "c".into() }));
    }

    #[test]
    fn negative_circle_with_chord_is_not_a_block() {
        // negative 4-circle plus a positive chord; both triangles carry two negatives
        let mut es = cycle(&[N, N, N, N]).edges();
        es.push(SignedEdge::new("x", "v0", "v2", P));
        let g = SignedGraph::new((0..4).map(|i| format!("v{i}")), es).unwrap();
        let r = classify_structure(&g);
        assert!(r.balanced);
        assert_eq!(r.failed_clause, Some(Clause::NegativeCircleNotBlock { vertex: "v0".into() }));
    }
}
