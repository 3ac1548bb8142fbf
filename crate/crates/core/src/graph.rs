//! Signed multigraphs, vertex-marked multigraphs, walks and circles.
//!
//! Vertices and edges are named by opaque string identifiers. Internally each
//! graph keeps its vertices and edges sorted by identifier, so index order is
//! the same as lexicographic identifier order; everything that needs a
//! deterministic order (circle canonicalization, reports) relies on that.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::iter::Product;
use std::ops::Mul;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a vertex inside one graph value.
pub type VertexIx = usize;
/// Index of an edge inside one graph value.
pub type EdgeIx = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge:?} is a loop at vertex {vertex:?}")]
    Loop { edge: String, vertex: String },
    #[error("duplicate edge identifier {0:?}")]
    DuplicateEdge(String),
    #[error("duplicate vertex identifier {0:?}")]
    DuplicateVertex(String),
    #[error("edge {edge:?} has endpoint {vertex:?} which is not a vertex of the graph")]
    UnknownEndpoint { edge: String, vertex: String },
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("edges {first:?} and {second:?} are not consecutive in any walk")]
    NotAWalk { first: String, second: String },
    #[error("walk does not close up")]
    OpenWalk,
    #[error("invalid circle: {0}")]
    InvalidCircle(String),
}

/// An element of the two-element sign group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    /// ASCII symbol used by the JSON format.
    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Sign> {
        match s {
            "+" => Some(Sign::Positive),
            "-" => Some(Sign::Negative),
            _ => None,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// The empty product is positive.
impl Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Positive, Mul::mul)
    }
}

impl<'a> Product<&'a Sign> for Sign {
    fn product<I: Iterator<Item = &'a Sign>>(iter: I) -> Sign {
        iter.copied().product()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Input description of one signed edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedEdge {
    pub id: String,
    pub u: String,
    pub v: String,
    pub sign: Sign,
}

impl SignedEdge {
    pub fn new(id: impl Into<String>, u: impl Into<String>, v: impl Into<String>, sign: Sign) -> Self {
        SignedEdge { id: id.into(), u: u.into(), v: v.into(), sign }
    }
}

/// Input description of one unsigned edge of a marked graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub u: String,
    pub v: String,
}

impl Edge {
    pub fn new(id: impl Into<String>, u: impl Into<String>, v: impl Into<String>) -> Self {
        Edge { id: id.into(), u: u.into(), v: v.into() }
    }
}

/// The loopless multigraph underlying both graph kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    vertex_ids: Vec<String>,
    edge_ids: Vec<String>,
    endpoints: Vec<(VertexIx, VertexIx)>,
    incidence: Vec<Vec<EdgeIx>>,
    vertex_lookup: HashMap<String, VertexIx>,
    edge_lookup: HashMap<String, EdgeIx>,
}

impl Topology {
    /// Validates and sorts. Returns the topology together with the permutation
    /// `order[k] = original position of sorted edge k`.
    fn build(
        vertices: Vec<String>,
        edges: Vec<(String, String, String)>,
    ) -> Result<(Topology, Vec<usize>), GraphError> {
        let mut vertex_ids = vertices;
        vertex_ids.sort();
        if let Some(w) = vertex_ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0].clone()));
        }
        let vertex_lookup: HashMap<String, VertexIx> =
            vertex_ids.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();

        let mut seen = BTreeSet::new();
        for (id, u, v) in &edges {
            if !seen.insert(id.as_str()) {
                return Err(GraphError::DuplicateEdge(id.clone()));
            }
            for end in [u, v] {
                if !vertex_lookup.contains_key(end) {
                    return Err(GraphError::UnknownEndpoint { edge: id.clone(), vertex: end.clone() });
                }
            }
            if u == v {
                return Err(GraphError::Loop { edge: id.clone(), vertex: u.clone() });
            }
        }

        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.sort_by(|&a, &b| edges[a].0.cmp(&edges[b].0));

        let mut edge_ids = Vec::with_capacity(edges.len());
        let mut endpoints = Vec::with_capacity(edges.len());
        let mut incidence = vec![Vec::new(); vertex_ids.len()];
        for (ix, &orig) in order.iter().enumerate() {
            let (id, u, v) = &edges[orig];
            let (a, b) = (vertex_lookup[u], vertex_lookup[v]);
            edge_ids.push(id.clone());
            endpoints.push((a, b));
            incidence[a].push(ix);
            incidence[b].push(ix);
        }
        let edge_lookup = edge_ids.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Ok((Topology { vertex_ids, edge_ids, endpoints, incidence, vertex_lookup, edge_lookup }, order))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn vertex_id(&self, v: VertexIx) -> &str {
        &self.vertex_ids[v]
    }

    pub fn edge_id(&self, e: EdgeIx) -> &str {
        &self.edge_ids[e]
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn edge_ids(&self) -> &[String] {
        &self.edge_ids
    }

    pub fn vertex_index(&self, id: &str) -> Option<VertexIx> {
        self.vertex_lookup.get(id).copied()
    }

    pub fn edge_index(&self, id: &str) -> Option<EdgeIx> {
        self.edge_lookup.get(id).copied()
    }

    pub fn endpoints(&self, e: EdgeIx) -> (VertexIx, VertexIx) {
        self.endpoints[e]
    }

    /// Edges incident with `v`, in ascending index order.
    pub fn incident(&self, v: VertexIx) -> &[EdgeIx] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexIx) -> usize {
        self.incidence[v].len()
    }

    pub fn is_incident(&self, e: EdgeIx, v: VertexIx) -> bool {
        let (a, b) = self.endpoints[e];
        a == v || b == v
    }

    /// The endpoint of `e` that is not `v`. `v` must be an endpoint of `e`.
    pub fn opposite(&self, e: EdgeIx, v: VertexIx) -> VertexIx {
        let (a, b) = self.endpoints[e];
        debug_assert!(a == v || b == v);
        if a == v {
            b
        } else {
            a
        }
    }

    /// True when no two edges share both endpoints.
    pub fn is_simple(&self) -> bool {
        let mut pairs = BTreeSet::new();
        self.endpoints.iter().all(|&(a, b)| pairs.insert((a.min(b), a.max(b))))
    }

    fn require_vertex(&self, id: &str) -> Result<VertexIx, GraphError> {
        self.vertex_index(id).ok_or_else(|| GraphError::UnknownVertex(id.to_owned()))
    }

    fn require_edge(&self, id: &str) -> Result<EdgeIx, GraphError> {
        self.edge_index(id).ok_or_else(|| GraphError::UnknownEdge(id.to_owned()))
    }
}

/// Anything built on a [`Topology`]: signed graphs and marked graphs.
pub trait Multigraph {
    fn topology(&self) -> &Topology;
}

/// A loopless multigraph whose edges carry signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    topology: Topology,
    signs: Vec<Sign>,
}

impl Multigraph for SignedGraph {
    fn topology(&self) -> &Topology {
        &self.topology
    }
}

impl SignedGraph {
    pub fn new<V, S>(vertices: V, edges: Vec<SignedEdge>) -> Result<SignedGraph, GraphError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vertices = vertices.into_iter().map(Into::into).collect();
        let raw = edges.iter().map(|e| (e.id.clone(), e.u.clone(), e.v.clone())).collect();
        let (topology, order) = Topology::build(vertices, raw)?;
        let signs = order.iter().map(|&i| edges[i].sign).collect();
        Ok(SignedGraph { topology, signs })
    }

    pub fn sign(&self, e: EdgeIx) -> Sign {
        self.signs[e]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn edge_sign(&self, id: &str) -> Result<Sign, GraphError> {
        Ok(self.signs[self.topology.require_edge(id)?])
    }

    /// Edges in identifier order, as construction input.
    pub fn edges(&self) -> Vec<SignedEdge> {
        let t = &self.topology;
        (0..t.edge_count())
            .map(|e| {
                let (u, v) = t.endpoints(e);
                SignedEdge::new(t.edge_id(e), t.vertex_id(u), t.vertex_id(v), self.signs[e])
            })
            .collect()
    }

    pub fn degree(&self, v: &str) -> Result<usize, GraphError> {
        Ok(self.topology.degree(self.topology.require_vertex(v)?))
    }

    pub fn is_totally_positive(&self, v: &str) -> Result<bool, GraphError> {
        let v = self.topology.require_vertex(v)?;
        Ok(self.all_incident(v, Sign::Positive))
    }

    pub fn is_totally_negative(&self, v: &str) -> Result<bool, GraphError> {
        let v = self.topology.require_vertex(v)?;
        Ok(self.all_incident(v, Sign::Negative))
    }

    pub(crate) fn all_incident(&self, v: VertexIx, sign: Sign) -> bool {
        self.topology.incident(v).iter().all(|&e| self.signs[e] == sign)
    }

    /// Number of incident edges with the given sign.
    pub fn signed_degree(&self, v: VertexIx, sign: Sign) -> usize {
        self.topology.incident(v).iter().filter(|&&e| self.signs[e] == sign).count()
    }

    pub fn is_all_positive(&self) -> bool {
        self.signs.iter().all(|s| s.is_positive())
    }

    /// The spanning subgraph of negative edges.
    pub fn negative_subgraph(&self) -> SignedGraph {
        self.edge_subgraph(|e| self.signs[e].is_negative())
    }

    /// Spanning subgraph keeping the edges selected by `keep`.
    pub fn edge_subgraph(&self, keep: impl Fn(EdgeIx) -> bool) -> SignedGraph {
        let edges = self.edges().into_iter().enumerate().filter(|(e, _)| keep(*e)).map(|(_, edge)| edge).collect();
        SignedGraph::new(self.topology.vertex_ids.iter().cloned(), edges).expect("subgraph of a valid graph is valid")
    }

    /// Product of the edge signs along `walk`.
    pub fn sign_of_walk(&self, walk: &Walk) -> Result<Sign, GraphError> {
        let edges = walk.resolve(&self.topology)?;
        Ok(edges.iter().map(|&e| self.signs[e]).product())
    }
}

/// A loopless multigraph whose vertices carry signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedGraph {
    topology: Topology,
    marks: Vec<Sign>,
}

impl Multigraph for MarkedGraph {
    fn topology(&self) -> &Topology {
        &self.topology
    }
}

impl MarkedGraph {
    pub fn new(vertices: Vec<(String, Sign)>, edges: Vec<Edge>) -> Result<MarkedGraph, GraphError> {
        let mut lookup: HashMap<&str, Sign> = HashMap::new();
        for (id, s) in &vertices {
            if lookup.insert(id.as_str(), *s).is_some() {
                return Err(GraphError::DuplicateVertex(id.clone()));
            }
        }
        let raw = edges.into_iter().map(|e| (e.id, e.u, e.v)).collect();
        let ids = vertices.iter().map(|(id, _)| id.clone()).collect();
        let (topology, _) = Topology::build(ids, raw)?;
        let marks = topology.vertex_ids.iter().map(|v| lookup[v.as_str()]).collect();
        Ok(MarkedGraph { topology, marks })
    }

    pub fn mark(&self, v: VertexIx) -> Sign {
        self.marks[v]
    }

    pub fn marks(&self) -> &[Sign] {
        &self.marks
    }

    pub fn vertex_mark(&self, id: &str) -> Result<Sign, GraphError> {
        Ok(self.marks[self.topology.require_vertex(id)?])
    }

    /// Edges in identifier order.
    pub fn edges(&self) -> Vec<Edge> {
        let t = &self.topology;
        (0..t.edge_count())
            .map(|e| {
                let (u, v) = t.endpoints(e);
                Edge::new(t.edge_id(e), t.vertex_id(u), t.vertex_id(v))
            })
            .collect()
    }
}

/// A sequence of edges in which consecutive edges share an endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Walk {
    pub edges: Vec<String>,
    pub closed: bool,
}

impl Walk {
    pub fn open<S: Into<String>>(edges: impl IntoIterator<Item = S>) -> Walk {
        Walk { edges: edges.into_iter().map(Into::into).collect(), closed: false }
    }

    pub fn closed<S: Into<String>>(edges: impl IntoIterator<Item = S>) -> Walk {
        Walk { edges: edges.into_iter().map(Into::into).collect(), closed: true }
    }

    /// Concatenation; the result is open.
    pub fn concat(&self, other: &Walk) -> Walk {
        Walk::open(self.edges.iter().chain(&other.edges).cloned())
    }

    /// Resolves edge ids and checks that some traversal realizes the walk.
    fn resolve(&self, t: &Topology) -> Result<Vec<EdgeIx>, GraphError> {
        let edges = self.edges.iter().map(|id| t.require_edge(id)).collect::<Result<Vec<_>, _>>()?;
        let Some(&first) = edges.first() else {
            return Ok(edges);
        };
        // (start vertex, current vertex) pairs consistent with the prefix.
        let (a, b) = t.endpoints(first);
        let mut states = vec![(a, b), (b, a)];
        for pair in edges.windows(2) {
            let next = pair[1];
            states = states
                .into_iter()
                .filter(|&(_, cur)| t.is_incident(next, cur))
                .map(|(start, cur)| (start, t.opposite(next, cur)))
                .collect();
            if states.is_empty() {
                return Err(GraphError::NotAWalk {
                    first: t.edge_id(pair[0]).to_owned(),
                    second: t.edge_id(next).to_owned(),
                });
            }
        }
        if self.closed && !states.iter().any(|&(start, cur)| start == cur) {
            return Err(GraphError::OpenWalk);
        }
        Ok(edges)
    }
}

/// An elementary closed edge sequence.
///
/// `vertices[i]` is the vertex shared by `edges[i]` and `edges[(i + 1) % len]`,
/// so edge `i` joins `vertices[i - 1]` and `vertices[i]`. Values built by this
/// crate are in canonical form: the least edge id first, and of the two
/// directions the one with the smaller second edge id (for digons, the smaller
/// vertex sequence).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Circle {
    edges: Vec<String>,
    vertices: Vec<String>,
}

impl Circle {
    /// Builds a canonical circle from raw sequences. Structural validity is
    /// checked by [`Circle::validate`] against a concrete graph.
    pub fn new(edges: Vec<String>, vertices: Vec<String>) -> Result<Circle, GraphError> {
        if edges.len() < 2 {
            return Err(GraphError::InvalidCircle("length below 2".into()));
        }
        if edges.len() != vertices.len() {
            return Err(GraphError::InvalidCircle("edge and vertex sequences differ in length".into()));
        }
        let (edges, vertices) = canonical_order(&edges, &vertices);
        Ok(Circle { edges, vertices })
    }

    /// Canonical circle from index sequences of `t`.
    pub(crate) fn from_indices(t: &Topology, edges: &[EdgeIx], vertices: &[VertexIx]) -> Circle {
        let (edges, vertices) = canonical_order(edges, vertices);
        Circle {
            edges: edges.iter().map(|&e| t.edge_id(e).to_owned()).collect(),
            vertices: vertices.iter().map(|&v| t.vertex_id(v).to_owned()).collect(),
        }
    }

    /// Builds the circle traversing `edges` in order, deriving the vertex sequence.
    pub fn from_edge_sequence<G: Multigraph>(g: &G, edges: &[String]) -> Result<Circle, GraphError> {
        let t = g.topology();
        let ix = edges.iter().map(|e| t.require_edge(e)).collect::<Result<Vec<_>, _>>()?;
        let vertices =
            circle_vertices(t, &ix).ok_or_else(|| GraphError::InvalidCircle("edges do not form a circle".into()))?;
        let c = Circle::from_indices(t, &ix, &vertices);
        c.validate(g)?;
        Ok(c)
    }

    pub fn edges(&self) -> &[String] {
        &self.edges
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.vertices.iter().any(|x| x == v)
    }

    pub fn contains_edge(&self, e: &str) -> bool {
        self.edges.iter().any(|x| x == e)
    }

    /// Checks the circle invariants against `g`.
    pub fn validate<G: Multigraph>(&self, g: &G) -> Result<(), GraphError> {
        let t = g.topology();
        let k = self.edges.len();
        let bad = |msg: &str| Err(GraphError::InvalidCircle(msg.to_owned()));
        if k < 2 || self.vertices.len() != k {
            return bad("wrong length");
        }
        let edges = self.edges.iter().map(|e| t.require_edge(e)).collect::<Result<Vec<_>, _>>()?;
        let vertices = self.vertices.iter().map(|v| t.require_vertex(v)).collect::<Result<Vec<_>, _>>()?;
        if edges.iter().collect::<BTreeSet<_>>().len() != k {
            return bad("repeated edge");
        }
        if vertices.iter().collect::<BTreeSet<_>>().len() != k {
            return bad("repeated vertex");
        }
        for i in 0..k {
            let prev = vertices[(i + k - 1) % k];
            let (a, b) = t.endpoints(edges[i]);
            if !((a == prev && b == vertices[i]) || (b == prev && a == vertices[i])) {
                return bad(&format!("edge {} does not join its neighbours", self.edges[i]));
            }
        }
        Ok(())
    }

    /// The circle as a closed walk.
    pub fn to_walk(&self) -> Walk {
        Walk::closed(self.edges.iter().cloned())
    }
}

impl PartialOrd for Circle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Shorter circles first, then by edge sequence.
impl Ord for Circle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl fmt::Display for Circle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.edges.join(" "))
    }
}

/// Derives the vertex sequence of a circle given by its cyclic edge order.
pub(crate) fn circle_vertices(t: &Topology, edges: &[EdgeIx]) -> Option<Vec<VertexIx>> {
    let k = edges.len();
    if k < 2 {
        return None;
    }
    if k == 2 {
        let (a, b) = t.endpoints(edges[0]);
        let (c, d) = t.endpoints(edges[1]);
        return ((a, b) == (c, d) || (a, b) == (d, c)).then(|| vec![a, b]);
    }
    let shared = |e: EdgeIx, f: EdgeIx| {
        let (a, b) = t.endpoints(e);
        if t.is_incident(f, a) {
            Some(a)
        } else if t.is_incident(f, b) {
            Some(b)
        } else {
            None
        }
    };
    (0..k).map(|i| shared(edges[i], edges[(i + 1) % k])).collect()
}

/// Rotation and reflection normal form of a circle.
pub(crate) fn canonical_order<T: Ord + Clone>(edges: &[T], vertices: &[T]) -> (Vec<T>, Vec<T>) {
    let k = edges.len();
    let start = (0..k).min_by(|&a, &b| edges[a].cmp(&edges[b])).unwrap_or(0);
    let forward_e: Vec<T> = (0..k).map(|i| edges[(start + i) % k].clone()).collect();
    let forward_v: Vec<T> = (0..k).map(|i| vertices[(start + i) % k].clone()).collect();
    // Reversed traversal starting at the same edge.
    let backward_e: Vec<T> = (0..k).map(|i| edges[(start + k - i) % k].clone()).collect();
    let backward_v: Vec<T> = (0..k).map(|i| vertices[(start + 2 * k - 1 - i) % k].clone()).collect();
    if (&backward_e, &backward_v) < (&forward_e, &forward_v) {
        (backward_e, backward_v)
    } else {
        (forward_e, forward_v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Negative as N, Positive as P};

    fn triangle(signs: [Sign; 3]) -> SignedGraph {
        SignedGraph::new(
            ["a", "b", "c"],
            vec![
                SignedEdge::new("e1", "a", "b", signs[0]),
                SignedEdge::new("e2", "b", "c", signs[1]),
                SignedEdge::new("e3", "c", "a", signs[2]),
            ],
        )
        .unwrap()
    }

    fn star(signs: &[Sign]) -> SignedGraph {
        let mut vertices = vec!["c".to_string()];
        let mut edges = Vec::new();
        for (i, s) in signs.iter().enumerate() {
            vertices.push(format!("l{i}"));
            edges.push(SignedEdge::new(format!("e{}", i + 1), "c", format!("l{i}"), *s));
        }
        SignedGraph::new(vertices, edges).unwrap()
    }

    fn cycle4(signs: [Sign; 4]) -> SignedGraph {
        let names = ["a", "b", "c", "d"];
        let edges =
            (0..4).map(|i| SignedEdge::new(format!("e{}", i + 1), names[i], names[(i + 1) % 4], signs[i])).collect();
        SignedGraph::new(names, edges).unwrap()
    }

    #[test]
    fn sign_group_laws() {
        for s in [P, N] {
            assert_eq!(P * s, s);
        }
        assert_eq!(N * N, P);
        assert_eq!(std::iter::empty::<Sign>().product::<Sign>(), P);
    }

    #[test]
    fn constructor_accepts_triangle_and_parallel_pair() {
        let t = triangle([P, P, P]);
        assert_eq!(t.topology().edge_count(), 3);
        let g =
            SignedGraph::new(["a", "b"], vec![SignedEdge::new("e1", "a", "b", P), SignedEdge::new("e2", "a", "b", N)])
                .unwrap();
        assert!(!g.topology().is_simple());
    }

    #[test]
    fn constructor_rejects_loops_duplicates_and_unknown_endpoints() {
        let err = SignedGraph::new(["a"], vec![SignedEdge::new("e1", "a", "a", P)]).unwrap_err();
        assert_eq!(err, GraphError::Loop { edge: "e1".into(), vertex: "a".into() });
        assert!(err.to_string().contains("loop"));

        let err =
            SignedGraph::new(["a", "b"], vec![SignedEdge::new("e1", "a", "b", P), SignedEdge::new("e1", "b", "a", P)])
                .unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge("e1".into()));

        let err = SignedGraph::new(["a"], vec![SignedEdge::new("e1", "a", "z", P)]).unwrap_err();
        assert_eq!(err, GraphError::UnknownEndpoint { edge: "e1".into(), vertex: "z".into() });
    }

    #[test]
    fn degrees() {
        assert_eq!(triangle([P, P, P]).degree("a").unwrap(), 2);
        assert_eq!(star(&[P, P, P]).degree("c").unwrap(), 3);
        let g =
            SignedGraph::new(["a", "b"], vec![SignedEdge::new("e1", "a", "b", P), SignedEdge::new("e2", "a", "b", P)])
                .unwrap();
        assert_eq!(g.degree("a").unwrap(), 2);
        assert_eq!(g.degree("q"), Err(GraphError::UnknownVertex("q".into())));
    }

    #[test]
    fn total_positivity() {
        assert!(triangle([P, P, P]).is_totally_positive("b").unwrap());
        let s = star(&[P, N, N]);
        assert!(!s.is_totally_positive("c").unwrap());
        assert!(!s.is_totally_negative("c").unwrap());
        assert!(s.is_totally_negative("l1").unwrap());
        let iso = SignedGraph::new(["x"], vec![]).unwrap();
        assert!(iso.is_totally_positive("x").unwrap());
        assert!(iso.is_totally_negative("x").unwrap());
    }

    #[test]
    fn negative_subgraphs() {
        let pos = triangle([P, P, P]).negative_subgraph();
        assert_eq!(pos.topology().vertex_count(), 3);
        assert_eq!(pos.topology().edge_count(), 0);

        let c4 = cycle4([N, N, N, N]);
        assert_eq!(c4.negative_subgraph(), c4);

        let s = star(&[P, N, N]).negative_subgraph();
        assert_eq!(s.topology().edge_ids(), ["e2", "e3"]);
        assert_eq!(s.degree("l0").unwrap(), 0);
        assert_eq!(s.degree("c").unwrap(), 2);
    }

    #[test]
    fn walk_signs() {
        assert_eq!(triangle([P, P, P]).sign_of_walk(&Walk::closed(["e1", "e2", "e3"])).unwrap(), P);
        assert_eq!(triangle([P, N, P]).sign_of_walk(&Walk::closed(["e1", "e2", "e3"])).unwrap(), N);
        let c4 = cycle4([N, N, P, P]);
        assert_eq!(c4.sign_of_walk(&Walk::closed(["e1", "e2", "e3", "e4"])).unwrap(), P);
        assert_eq!(c4.sign_of_walk(&Walk::open(Vec::<String>::new())).unwrap(), P);
    }

    #[test]
    fn walk_errors() {
        let c4 = cycle4([N, N, P, P]);
        assert_eq!(c4.sign_of_walk(&Walk::open(["e1", "e9"])), Err(GraphError::UnknownEdge("e9".into())));
        assert!(matches!(c4.sign_of_walk(&Walk::open(["e1", "e3"])), Err(GraphError::NotAWalk { .. })));
        assert_eq!(c4.sign_of_walk(&Walk::closed(["e1", "e2"])), Err(GraphError::OpenWalk));
        // back and forth along one edge is a closed walk
        assert_eq!(c4.sign_of_walk(&Walk::closed(["e1", "e1"])).unwrap(), P);
    }

    #[test]
    fn circle_canonical_form_and_validation() {
        let t = triangle([P, P, P]);
        let c = Circle::from_edge_sequence(&t, &["e3".into(), "e2".into(), "e1".into()]).unwrap();
        assert_eq!(c.edges(), ["e1", "e2", "e3"]);
        assert_eq!(c.vertices(), ["b", "c", "a"]);
        c.validate(&t).unwrap();

        let bogus = Circle::new(vec!["e1".into(), "e2".into()], vec!["b".into(), "c".into()]).unwrap();
        assert!(bogus.validate(&t).is_err());

        let digon =
            SignedGraph::new(["a", "b"], vec![SignedEdge::new("x", "b", "a", P), SignedEdge::new("y", "a", "b", N)])
                .unwrap();
        let d = Circle::from_edge_sequence(&digon, &["y".into(), "x".into()]).unwrap();
        assert_eq!(d.edges(), ["x", "y"]);
        assert_eq!(d.vertices(), ["a", "b"]);
        d.validate(&digon).unwrap();
    }
}
