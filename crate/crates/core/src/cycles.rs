//! Circle enumeration and the definitional balance and consistency checks.
//!
//! Circles of length at least three are found by a backtracking search over
//! the simple graph underlying the multigraph, rooted at the least vertex of
//! each circle, and then expanded over every choice of parallel edge. Digons
//! come straight from pairs of parallel edges.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Circle, EdgeIx, GraphError, MarkedGraph, Multigraph, Sign, SignedGraph, Topology, VertexIx};

pub const DEFAULT_CIRCLE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("circle enumeration exceeded the limit of {limit} circles")]
    LimitExceeded { limit: usize },
}

/// Neighbourhood of one vertex in the underlying simple graph, with the
/// parallel edges realizing each adjacency.
struct Bundles {
    // per vertex: (neighbour, edges to it), neighbours ascending
    adj: Vec<Vec<(VertexIx, Vec<EdgeIx>)>>,
}

impl Bundles {
    fn new(t: &Topology) -> Bundles {
        let mut adj: Vec<Vec<(VertexIx, Vec<EdgeIx>)>> = vec![Vec::new(); t.vertex_count()];
        for (v, list) in adj.iter_mut().enumerate() {
            for &e in t.incident(v) {
                let w = t.opposite(e, v);
                match list.iter_mut().find(|(x, _)| *x == w) {
                    Some((_, es)) => es.push(e),
                    None => list.push((w, vec![e])),
                }
            }
            list.sort_by_key(|(w, _)| *w);
        }
        Bundles { adj }
    }

    fn edges_between(&self, a: VertexIx, b: VertexIx) -> &[EdgeIx] {
        self.adj[a].iter().find(|(w, _)| *w == b).map(|(_, es)| es.as_slice()).unwrap_or(&[])
    }
}

/// Search parameters: `rank` orders vertices (circles are rooted at their
/// least-ranked vertex), `root_ok` filters roots, `max_len` bounds length.
struct Search<'a> {
    rank: &'a [usize],
    root_ok: &'a dyn Fn(VertexIx) -> bool,
    max_len: usize,
}

/// Callback receiving a circle as (edges, vertices).
type Visitor<'a, B> = dyn FnMut(&[EdgeIx], &[VertexIx]) -> ControlFlow<B> + 'a;

/// Calls `visit(edges, vertices)` for every circle selected by `search`, in a
/// deterministic order. Sequences are in traversal order, not canonical.
fn visit_circles<B>(t: &Topology, search: &Search<'_>, visit: &mut Visitor<'_, B>) -> ControlFlow<B> {
    let n = t.vertex_count();
    let bundles = Bundles::new(t);
    let mut order: Vec<VertexIx> = (0..n).collect();
    order.sort_by_key(|&v| search.rank[v]);

    for &root in &order {
        if !(search.root_ok)(root) {
            continue;
        }
        // digons
        if search.max_len >= 2 {
            for (w, es) in &bundles.adj[root] {
                if search.rank[*w] < search.rank[root] {
                    continue;
                }
                for i in 0..es.len() {
                    for j in i + 1..es.len() {
                        visit(&[es[i], es[j]], &[root, *w])?;
                    }
                }
            }
        }
        if search.max_len < 3 {
            continue;
        }
        let mut path = vec![root];
        let mut on_path = vec![false; n];
        on_path[root] = true;
        extend(&bundles, search, &mut path, &mut on_path, visit)?;
    }
    ControlFlow::Continue(())
}

fn extend<B>(
    bundles: &Bundles,
    search: &Search<'_>,
    path: &mut Vec<VertexIx>,
    on_path: &mut [bool],
    visit: &mut Visitor<'_, B>,
) -> ControlFlow<B> {
    let root = path[0];
    let last = *path.last().expect("path starts at the root");
    for (w, _) in &bundles.adj[last] {
        let w = *w;
        if w == root {
            // each vertex cycle is seen in both directions; keep one
            if path.len() >= 3 && path[1] < last {
                expand(bundles, path, visit)?;
            }
        } else if !on_path[w] && search.rank[w] > search.rank[root] && path.len() < search.max_len {
            path.push(w);
            on_path[w] = true;
            extend(bundles, search, path, on_path, visit)?;
            on_path[w] = false;
            path.pop();
        }
    }
    ControlFlow::Continue(())
}

/// Visits every edge realization of the vertex cycle `path`.
fn expand<B>(bundles: &Bundles, path: &[VertexIx], visit: &mut Visitor<'_, B>) -> ControlFlow<B> {
    let k = path.len();
    let choices: Vec<&[EdgeIx]> = (0..k).map(|i| bundles.edges_between(path[i], path[(i + 1) % k])).collect();
    // vertices[i] is shared by edges[i] and edges[i + 1]
    let vertices: Vec<VertexIx> = (0..k).map(|i| path[(i + 1) % k]).collect();
    let mut pick = vec![0usize; k];
    let mut edges: Vec<EdgeIx> = choices.iter().map(|c| c[0]).collect();
    loop {
        visit(&edges, &vertices)?;
        let mut i = 0;
        loop {
            if i == k {
                return ControlFlow::Continue(());
            }
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                edges[i] = choices[i][pick[i]];
                break;
            }
            pick[i] = 0;
            edges[i] = choices[i][0];
            i += 1;
        }
    }
}

fn identity_rank(t: &Topology) -> Vec<usize> {
    (0..t.vertex_count()).collect()
}

/// All circles of `g`, canonical and sorted, failing beyond the default limit.
pub fn enumerate_circles<G: Multigraph>(g: &G) -> Result<Vec<Circle>, CycleError> {
    enumerate_circles_with_limit(g, DEFAULT_CIRCLE_LIMIT)
}

pub fn enumerate_circles_with_limit<G: Multigraph>(g: &G, limit: usize) -> Result<Vec<Circle>, CycleError> {
    let t = g.topology();
    let rank = identity_rank(t);
    let search = Search { rank: &rank, root_ok: &|_| true, max_len: usize::MAX };
    let mut out = Vec::new();
    let flow = visit_circles(t, &search, &mut |edges, vertices| {
        if out.len() == limit {
            return ControlFlow::Break(());
        }
        out.push(Circle::from_indices(t, edges, vertices));
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(CycleError::LimitExceeded { limit });
    }
    out.sort();
    Ok(out)
}

/// Balance by definition: every circle has positive edge-sign product.
pub fn is_balanced_oracle(g: &SignedGraph) -> Result<bool, CycleError> {
    Ok(enumerate_circles(g)?
        .iter()
        .all(|c| c.edges().iter().map(|e| g.edge_sign(e).expect("circle edge")).product::<Sign>().is_positive()))
}

/// Balance by two-colouring: look for vertex marks whose products reproduce
/// every edge sign. Linear time.
pub fn is_balanced_fast(g: &SignedGraph) -> bool {
    negative_circle(g).is_none()
}

/// A negative circle of `g` as (edges, vertices) in traversal order, found by
/// the two-colouring search. `None` iff `g` is balanced.
pub(crate) fn negative_circle(g: &SignedGraph) -> Option<(Vec<EdgeIx>, Vec<VertexIx>)> {
    let t = g.topology();
    let n = t.vertex_count();
    let mut mark: Vec<Option<Sign>> = vec![None; n];
    let mut parent: Vec<Option<EdgeIx>> = vec![None; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if mark[root].is_some() {
            continue;
        }
        mark[root] = Some(Sign::Positive);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let mx = mark[x].expect("queued vertices are marked");
            for &e in t.incident(x) {
                let y = t.opposite(e, x);
                match mark[y] {
                    None => {
                        mark[y] = Some(mx * g.sign(e));
                        parent[y] = Some(e);
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    }
                    Some(_) if parent[x] == Some(e) => {}
                    Some(my) if my * mx != g.sign(e) => {
                        return Some(fundamental_circle(t, &parent, &depth, e, x, y));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    None
}

/// The circle formed by the non-tree edge `e = xy` and the tree path y..x.
fn fundamental_circle(
    t: &Topology,
    parent: &[Option<EdgeIx>],
    depth: &[usize],
    e: EdgeIx,
    x: VertexIx,
    y: VertexIx,
) -> (Vec<EdgeIx>, Vec<VertexIx>) {
    let up = |v: VertexIx| {
        let p = parent[v].expect("non-root vertex has a parent edge");
        (p, t.opposite(p, v))
    };
    // climb from y (ascending part) and from x (to be reversed)
    let (mut a, mut b) = (y, x);
    let mut from_y = Vec::new();
    let mut from_x = Vec::new();
    while a != b {
        if depth[a] >= depth[b] {
            let (p, next) = up(a);
            from_y.push((p, next));
            a = next;
        } else {
            let (p, next) = up(b);
            from_x.push((p, b));
            b = next;
        }
    }
    let mut edges = vec![e];
    let mut vertices = vec![y];
    for (p, reached) in from_y {
        edges.push(p);
        vertices.push(reached);
    }
    for (p, reached) in from_x.into_iter().rev() {
        edges.push(p);
        vertices.push(reached);
    }
    (edges, vertices)
}

/// Outcome of the consistency oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub consistent: bool,
    pub witness: Option<Circle>,
}

/// Consistency by definition: every circle has positive vertex-sign product.
///
/// Circles avoiding negative vertices are positive, so the search is rooted at
/// negative vertices only. Digons and triangles are examined before longer
/// circles, and the witness is the least violating circle of the first length
/// tier that has one.
pub fn is_consistent_oracle(m: &MarkedGraph) -> Result<OracleVerdict, CycleError> {
    is_consistent_oracle_with_limit(m, DEFAULT_CIRCLE_LIMIT)
}

pub fn is_consistent_oracle_with_limit(m: &MarkedGraph, limit: usize) -> Result<OracleVerdict, CycleError> {
    let t = m.topology();
    let n = t.vertex_count();
    // negatives first so every circle with a negative vertex has a negative root
    let mut order: Vec<VertexIx> = (0..n).collect();
    order.sort_by_key(|&v| (m.mark(v).is_positive(), v));
    let mut rank = vec![0; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let root_ok = |v: VertexIx| m.mark(v).is_negative();
    let mut seen = 0usize;

    let short = Search { rank: &rank, root_ok: &root_ok, max_len: 3 };
    let mut best: Option<Circle> = None;
    let flow = visit_circles(t, &short, &mut |edges, vertices| {
        seen += 1;
        if seen > limit {
            return ControlFlow::Break(());
        }
        if vertices.iter().map(|&v| m.mark(v)).product::<Sign>().is_negative() {
            let c = Circle::from_indices(t, edges, vertices);
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(CycleError::LimitExceeded { limit });
    }
    if let Some(c) = best {
        return Ok(OracleVerdict { consistent: false, witness: Some(c) });
    }

    let long = Search { rank: &rank, root_ok: &root_ok, max_len: usize::MAX };
    let flow = visit_circles(t, &long, &mut |edges, vertices| {
        if edges.len() <= 3 {
            return ControlFlow::Continue(());
        }
        seen += 1;
        if seen > limit {
            return ControlFlow::Break(None);
        }
        if vertices.iter().map(|&v| m.mark(v)).product::<Sign>().is_negative() {
            return ControlFlow::Break(Some(Circle::from_indices(t, edges, vertices)));
        }
        ControlFlow::Continue(())
    });
    match flow {
        ControlFlow::Continue(()) => Ok(OracleVerdict { consistent: true, witness: None }),
        ControlFlow::Break(Some(c)) => Ok(OracleVerdict { consistent: false, witness: Some(c) }),
        ControlFlow::Break(None) => Err(CycleError::LimitExceeded { limit }),
    }
}

/// Product of the marks on the vertices of `c`, after checking `c` is a
/// circle of `m`.
pub fn circle_vertex_sign(m: &MarkedGraph, c: &Circle) -> Result<Sign, GraphError> {
    c.validate(m)?;
    c.vertices().iter().map(|v| m.vertex_mark(v)).product()
}
