use crate::cycles::{enumerate_circles, is_balanced_fast};
use crate::graph::{EdgeIx, Multigraph, Sign, SignedGraph, VertexIx};

use super::bridges::Decomposition;
use super::witness::attach_witness;
use super::{AnalysisError, Clause, Method, Verdict};

fn positive_edges(g: &SignedGraph, v: VertexIx) -> Vec<EdgeIx> {
    g.topology().incident(v).iter().copied().filter(|&e| g.sign(e).is_positive()).collect()
}

fn vid(g: &SignedGraph, v: VertexIx) -> String {
    g.topology().vertex_id(v).to_owned()
}

/// First violated degree clause shared by conditions (i) and (iii): a vertex
/// of degree above 3 must be totally positive, and a degree-3 vertex must be
/// totally positive or have exactly one positive edge. With `isthmi`, that
/// one positive edge must also be an isthmus.
fn degree_clause(g: &SignedGraph, isthmi: Option<&[bool]>) -> Option<Clause> {
    let t = g.topology();
    for v in 0..t.vertex_count() {
        let d = t.degree(v);
        if d < 3 || g.all_incident(v, Sign::Positive) {
            continue;
        }
        if d > 3 {
            return Some(Clause::HighDegreeNotTotallyPositive { vertex: vid(g, v) });
        }
        match positive_edges(g, v).as_slice() {
            [f] => {
                if let Some(isthmus) = isthmi {
                    if !isthmus[*f] {
                        return Some(Clause::DegreeThreePositiveNotIsthmus {
                            vertex: vid(g, v),
                            edge: t.edge_id(*f).to_owned(),
                        });
                    }
                }
            }
            _ => return Some(Clause::DegreeThreeMixed { vertex: vid(g, v) }),
        }
    }
    None
}

fn finish(g: &SignedGraph, method: Method, clause: Option<Clause>) -> Verdict {
    match clause {
        None => Verdict::consistent(method),
        Some(c) => attach_witness(g, Verdict::failed(method, c)),
    }
}

/// Balanced; degree above 3 implies totally positive; degree 3 implies
/// totally positive or exactly one positive edge, which is an isthmus.
pub fn check_condition_i(g: &SignedGraph) -> Verdict {
    let clause = if !is_balanced_fast(g) {
        Some(Clause::Unbalanced)
    } else {
        let d = Decomposition::new(g.topology());
        degree_clause(g, Some(&d.isthmus))
    };
    finish(g, Method::ConditionI, clause)
}

/// Balanced; the negative subgraph has maximum degree 2 (so its components are
/// paths, circles and single vertices); every endpoint of a negative edge has
/// at most one positive edge, an isthmus when the vertex has two negative edges.
pub fn check_condition_ii(g: &SignedGraph) -> Verdict {
    finish(g, Method::ConditionII, condition_ii_clause(g))
}

fn condition_ii_clause(g: &SignedGraph) -> Option<Clause> {
    if !is_balanced_fast(g) {
        return Some(Clause::Unbalanced);
    }
    let t = g.topology();
    if let Some(v) = (0..t.vertex_count()).find(|&v| g.signed_degree(v, Sign::Negative) > 2) {
        return Some(Clause::NegativeDegreeExceeded { vertex: vid(g, v) });
    }
    let mut decomposition = None;
    for v in 0..t.vertex_count() {
        let negatives = g.signed_degree(v, Sign::Negative);
        if negatives == 0 {
            continue;
        }
        match positive_edges(g, v).as_slice() {
            [] => {}
            [f] => {
                let d = decomposition.get_or_insert_with(|| Decomposition::new(t));
                if negatives == 2 && !d.isthmus[*f] {
                    return Some(Clause::NegativeInteriorPositiveNotIsthmus {
                        vertex: vid(g, v),
                        edge: t.edge_id(*f).to_owned(),
                    });
                }
            }
            _ => return Some(Clause::NegativeEndpointPositiveExcess { vertex: vid(g, v) }),
        }
    }
    None
}

/// Degree clauses without the isthmus requirement; then, after deleting the
/// positive isthmi, balance and degree at most 2 at negative-edge endpoints.
pub fn check_condition_iii(g: &SignedGraph) -> Verdict {
    let clause = degree_clause(g, None).or_else(|| {
        let d = Decomposition::new(g.topology());
        let pruned = g.edge_subgraph(|e| !(d.isthmus[e] && g.sign(e).is_positive()));
        if !is_balanced_fast(&pruned) {
            return Some(Clause::UnbalancedWithoutPositiveIsthmi);
        }
        let t = pruned.topology();
        (0..t.vertex_count())
            .find(|&v| pruned.signed_degree(v, Sign::Negative) > 0 && t.degree(v) > 2)
            .map(|v| Clause::NegativeEndpointDegree { vertex: vid(&pruned, v) })
    });
    finish(g, Method::ConditionIII, clause)
}

/// The criterion for simple graphs: balanced; degree above 3 implies totally
/// positive; a degree-3 vertex is totally positive or has exactly two negative
/// edges, both lying on every circle through the vertex.
pub fn check_simple_criterion(g: &SignedGraph) -> Result<Verdict, AnalysisError> {
    let t = g.topology();
    let mut pairs = std::collections::BTreeMap::new();
    for e in 0..t.edge_count() {
        let (a, b) = t.endpoints(e);
        if let Some(prev) = pairs.insert((a.min(b), a.max(b)), e) {
            return Err(AnalysisError::NotSimple(t.edge_id(prev).to_owned(), t.edge_id(e).to_owned()));
        }
    }
    if !is_balanced_fast(g) {
        return Ok(finish(g, Method::SimpleCriterion, Some(Clause::Unbalanced)));
    }
    let mut circles = None;
    for v in 0..t.vertex_count() {
        let d = t.degree(v);
        if d < 3 || g.all_incident(v, Sign::Positive) {
            continue;
        }
        let vertex = vid(g, v);
        if d > 3 {
            return Ok(finish(g, Method::SimpleCriterion, Some(Clause::HighDegreeNotTotallyPositive { vertex })));
        }
        let negatives: Vec<&str> =
            t.incident(v).iter().filter(|&&e| g.sign(e).is_negative()).map(|&e| t.edge_id(e)).collect();
        if negatives.len() != 2 {
            return Ok(finish(g, Method::SimpleCriterion, Some(Clause::DegreeThreeNegativeCount { vertex })));
        }
        let circles = match &circles {
            Some(cs) => cs,
            None => circles.insert(enumerate_circles(g)?),
        };
        let misses = circles
            .iter()
            .filter(|c| c.contains_vertex(&vertex))
            .any(|c| negatives.iter().any(|e| !c.contains_edge(e)));
        if misses {
            return Ok(finish(g, Method::SimpleCriterion, Some(Clause::NegativesMissCircle { vertex })));
        }
    }
    Ok(Verdict::consistent(Method::SimpleCriterion))
}

/// For connected bridgeless graphs of order at least 4 without divalent
/// vertices, line consistency is the same as being all positive. `None` when
/// the graph is outside that class.
pub fn check_bridgeless(g: &SignedGraph) -> Option<bool> {
    let t = g.topology();
    if t.vertex_count() < 4 || (0..t.vertex_count()).any(|v| t.degree(v) == 2) {
        return None;
    }
    let d = Decomposition::new(t);
    let connected = d.blocks.iter().all(|b| !b.edges.is_empty()) && is_connected(g);
    if !connected || d.isthmus.iter().any(|&b| b) {
        return None;
    }
    Some(g.is_all_positive())
}

fn is_connected<G: Multigraph>(g: &G) -> bool {
    let t = g.topology();
    let n = t.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &e in t.incident(v) {
            let w = t.opposite(e, v);
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}
