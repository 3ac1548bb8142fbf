//! Counterexample circles in the line graph.
//!
//! Three constructions cover every way a signed graph can fail:
//!
//! * a negative circle `C` of the graph maps to the circle `L(C)`, whose
//!   vertex-sign product is the edge-sign product of `C`;
//! * three edges at one vertex with negative product form a vertex triangle;
//! * at a degree-3 vertex with negative edges `e`, `e'` and a positive edge `f`
//!   lying on a circle `C` through `e`, inserting `e'` between `e` and `f` in
//!   `L(C)` flips the sign.
//!
//! The oracle is the last resort.

use std::collections::VecDeque;

use crate::cycles::{circle_vertex_sign, is_consistent_oracle, negative_circle};
use crate::graph::{Circle, EdgeIx, Multigraph, Sign, SignedGraph, VertexIx};
use crate::linegraph::{image_of_circle, line_circle, line_graph, vertex_triangle};

use super::bridges::Decomposition;
use super::{AnalysisError, Verdict};

/// A circle of the line graph of `g` with negative vertex-sign product,
/// built from the clause that `failed` reports.
pub fn find_witness(g: &SignedGraph, failed: &Verdict) -> Result<Circle, AnalysisError> {
    if failed.line_consistent {
        return Err(AnalysisError::ConsistentGraph);
    }
    let targeted = match &failed.failed_clause {
        Some(c) if c.is_unbalance() => unbalance_witness(g),
        Some(c) => c
            .vertex()
            .and_then(|v| g.topology().vertex_index(v))
            .and_then(|v| local_witness(g, v, &Decomposition::new(g.topology()))),
        None => None,
    };
    let l = line_graph(g);
    let is_negative = |c: &Circle| circle_vertex_sign(&l, c).is_ok_and(Sign::is_negative);
    if let Some(c) = targeted.filter(is_negative) {
        return Ok(c);
    }
    if let Some(c) = scan(g).filter(is_negative) {
        return Ok(c);
    }
    is_consistent_oracle(&l)?.witness.ok_or(AnalysisError::ConsistentGraph)
}

/// Attaches a witness to a negative verdict when one can be found.
pub(crate) fn attach_witness(g: &SignedGraph, mut verdict: Verdict) -> Verdict {
    verdict.witness = find_witness(g, &verdict).ok();
    verdict
}

/// The least constructible witness over every failure site of `g`.
fn scan(g: &SignedGraph) -> Option<Circle> {
    let d = Decomposition::new(g.topology());
    let local = (0..g.topology().vertex_count()).filter_map(|v| local_witness(g, v, &d));
    unbalance_witness(g).into_iter().chain(local).min()
}

fn unbalance_witness(g: &SignedGraph) -> Option<Circle> {
    let (edges, vertices) = negative_circle(g)?;
    Some(image_of_circle(g, &edges, &vertices))
}

/// Witness at vertex `v`: the least negative vertex triangle there, or the
/// interposed circle when `v` has exactly signs (+, -, -) and its positive
/// edge lies on a circle.
fn local_witness(g: &SignedGraph, v: VertexIx, d: &Decomposition) -> Option<Circle> {
    let t = g.topology();
    let inc = t.incident(v);
    let mut best: Option<Circle> = None;
    for i in 0..inc.len() {
        for j in i + 1..inc.len() {
            for k in j + 1..inc.len() {
                let triple = [inc[i], inc[j], inc[k]];
                if triple.iter().map(|&e| g.sign(e)).product::<Sign>().is_negative() {
                    let c = vertex_triangle(g, v, triple);
                    if best.as_ref().is_none_or(|b| c < *b) {
                        best = Some(c);
                    }
                }
            }
        }
    }
    if best.is_some() {
        return best;
    }
    let positives: Vec<EdgeIx> = inc.iter().copied().filter(|&e| g.sign(e).is_positive()).collect();
    match (inc.len(), positives.as_slice()) {
        (3, [f]) if !d.isthmus[*f] => interposed(g, v, *f),
        _ => None,
    }
}

/// With `f = vw` positive on a circle and `v` carrying negatives `e`, `e'`:
/// take a shortest `w`-`v` path avoiding `f`, closing a circle `C` through `f`
/// and (say) `e`. Returns `L(C)` if that is negative, otherwise `L(C)` with
/// `e'` inserted between `e` and `f`.
fn interposed(g: &SignedGraph, v: VertexIx, f: EdgeIx) -> Option<Circle> {
    let t = g.topology();
    let w = t.opposite(f, v);
    let mut via: Vec<Option<EdgeIx>> = vec![None; t.vertex_count()];
    let mut seen = vec![false; t.vertex_count()];
    seen[w] = true;
    let mut queue = VecDeque::from([w]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &e in t.incident(x) {
            let y = t.opposite(e, x);
            if e != f && !seen[y] {
                seen[y] = true;
                via[y] = Some(e);
                queue.push_back(y);
            }
        }
    }
    if !seen[v] {
        return None;
    }
    // path w -> v as (edge, vertex reached)
    let mut path: Vec<(EdgeIx, VertexIx)> = Vec::new();
    let mut x = v;
    while x != w {
        let e = via[x].expect("reached vertices have a predecessor edge");
        path.push((e, x));
        x = t.opposite(e, x);
    }
    path.reverse();
    let e = path.last().expect("v differs from w").0;
    let other = *t.incident(v).iter().find(|&&x| x != e && x != f)?;

    let mut edges = vec![f];
    let mut vertices = vec![w];
    for &(p, reached) in &path {
        edges.push(p);
        vertices.push(reached);
    }
    let sign: Sign = edges.iter().map(|&x| g.sign(x)).product();
    if sign.is_negative() {
        return Some(image_of_circle(g, &edges, &vertices));
    }
    let mut steps: Vec<(EdgeIx, VertexIx)> = edges.into_iter().zip(vertices).collect();
    steps.push((other, v));
    Some(line_circle(g, &steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{check_condition_i, check_condition_ii, Clause, Method};
    use crate::graph::SignedEdge;
    use Sign::{Negative as N, Positive as P};

    fn named(vertices: &[&str], edges: &[(&str, &str, &str, Sign)]) -> SignedGraph {
        SignedGraph::new(
            vertices.iter().copied(),
            edges.iter().map(|&(id, u, v, s)| SignedEdge::new(id, u, v, s)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn negative_star_gives_vertex_triangle() {
        let g = named(&["c", "a", "b", "d"], &[("e1", "c", "a", N), ("e2", "c", "b", N), ("e3", "c", "d", N)]);
        let w = find_witness(&g, &check_condition_ii(&g)).unwrap();
        let mut vs = w.vertices().to_vec();
        vs.sort();
        assert_eq!(vs, ["e1", "e2", "e3"]);
    }

    #[test]
    fn paw_gives_mixed_vertex_triangle() {
        let g = named(
            &["a", "b", "c", "d"],
            &[("ab", "a", "b", P), ("bc", "b", "c", P), ("ca", "c", "a", P), ("cd", "c", "d", N)],
        );
        let w = find_witness(&g, &check_condition_ii(&g)).unwrap();
        let mut vs = w.vertices().to_vec();
        vs.sort();
        assert_eq!(vs, ["bc", "ca", "cd"]);
        assert_eq!(circle_vertex_sign(&line_graph(&g), &w).unwrap(), N);
    }

    #[test]
    fn interposed_five_circle() {
        let g = named(
            &["v", "u", "y", "x", "w"],
            &[("vu", "v", "u", N), ("uy", "u", "y", N), ("yx", "y", "x", P), ("xv", "x", "v", P), ("vw", "v", "w", N)],
        );
        let verdict = check_condition_i(&g);
        let w = find_witness(&g, &verdict).unwrap();
        let mut vs = w.vertices().to_vec();
        vs.sort();
        assert_eq!(vs, ["uy", "vu", "vw", "xv", "yx"]);
        assert_eq!(circle_vertex_sign(&line_graph(&g), &w).unwrap(), N);
    }

    #[test]
    fn unbalanced_digon_maps_to_line_digon() {
        let g = named(&["a", "b"], &[("e1", "a", "b", P), ("e2", "a", "b", N)]);
        let w = find_witness(&g, &check_condition_ii(&g)).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.edges(), ["e1~e2@a", "e1~e2@b"]);
    }

    #[test]
    fn consistent_graph_has_no_witness() {
        let g = named(&["a", "b"], &[("e1", "a", "b", N)]);
        let v = check_condition_ii(&g);
        assert_eq!(find_witness(&g, &v), Err(AnalysisError::ConsistentGraph));
    }

    #[test]
    fn mislabelled_clause_falls_back() {
        // clause names a vertex where nothing is wrong; scan still finds the triangle
        let g = named(&["c", "a", "b", "d"], &[("e1", "c", "a", N), ("e2", "c", "b", N), ("e3", "c", "d", N)]);
        let v = Verdict::failed(Method::ConditionII, Clause::NegativeEndpointDegree { vertex: "a".into() });
        assert_eq!(find_witness(&g, &v).unwrap().len(), 3);
    }
}
