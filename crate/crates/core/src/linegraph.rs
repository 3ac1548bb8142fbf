//! The vertex-marked line graph of a signed multigraph.
//!
//! Line-graph vertices reuse the originating edge identifiers. Each pair of
//! edges sharing an endpoint `v` contributes one line-graph edge named
//! `e~f@v` (with `e < f`), so two parallel edges produce two line-graph edges,
//! one per shared endpoint.

use crate::graph::{Circle, Edge, EdgeIx, MarkedGraph, Multigraph, SignedGraph, VertexIx};

fn escape(id: &str) -> String {
    let mut out = String::with_capacity(id.len());
    for ch in id.chars() {
        if matches!(ch, '\\' | '~' | '@') {
            out.push('\\');
        }
        out.push(ch);
    }
    out
}

/// Identifier of the line-graph edge joining `e` and `f` through `v`.
pub fn line_edge_id(e: &str, f: &str, v: &str) -> String {
    let (lo, hi) = if e <= f { (e, f) } else { (f, e) };
    format!("{}~{}@{}", escape(lo), escape(hi), escape(v))
}

pub fn line_graph(g: &SignedGraph) -> MarkedGraph {
    let t = g.topology();
    let vertices = (0..t.edge_count()).map(|e| (t.edge_id(e).to_owned(), g.sign(e))).collect();
    let mut edges = Vec::new();
    for v in 0..t.vertex_count() {
        let inc = t.incident(v);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                let (eid, fid) = (t.edge_id(e), t.edge_id(f));
                edges.push(Edge::new(line_edge_id(eid, fid, t.vertex_id(v)), eid, fid));
            }
        }
    }
    MarkedGraph::new(vertices, edges).expect("line graph of a loopless graph is loopless")
}

/// Circle of the line graph through the edges `steps[i].0` of `g`, where the
/// step from `steps[i].0` to `steps[i + 1].0` (cyclically) goes through the
/// shared vertex `steps[i].1`.
pub(crate) fn line_circle(g: &SignedGraph, steps: &[(EdgeIx, VertexIx)]) -> Circle {
    let t = g.topology();
    let k = steps.len();
    let mut edges = Vec::with_capacity(k);
    let mut vertices = Vec::with_capacity(k);
    for i in 0..k {
        let (e, joint) = steps[i];
        let next = steps[(i + 1) % k].0;
        edges.push(line_edge_id(t.edge_id(e), t.edge_id(next), t.vertex_id(joint)));
        vertices.push(t.edge_id(next).to_owned());
    }
    Circle::new(edges, vertices).expect("steps describe at least two line-graph edges")
}

/// The triangle of the line graph formed by three edges meeting at `v`.
pub(crate) fn vertex_triangle(g: &SignedGraph, v: VertexIx, edges: [EdgeIx; 3]) -> Circle {
    line_circle(g, &[(edges[0], v), (edges[1], v), (edges[2], v)])
}

/// All vertex triangles: one per 3-subset of the edges at each vertex.
pub fn vertex_triangles(g: &SignedGraph) -> Vec<Circle> {
    let t = g.topology();
    let mut out = Vec::new();
    for v in 0..t.vertex_count() {
        let inc = t.incident(v);
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                for k in j + 1..inc.len() {
                    out.push(vertex_triangle(g, v, [inc[i], inc[j], inc[k]]));
                }
            }
        }
    }
    out.sort();
    out
}

/// Image in the line graph of a circle of `g` given by its cyclic edge order.
pub(crate) fn image_of_circle(g: &SignedGraph, edges: &[EdgeIx], vertices: &[VertexIx]) -> Circle {
    let steps: Vec<_> = edges.iter().copied().zip(vertices.iter().copied()).collect();
    line_circle(g, &steps)
}
