//! JSON and Graphviz DOT formats.
//!
//! A signed graph is a JSON object
//!
//! ```json
//! {"edges":[{"id":"e1","sign":"-","u":"a","v":"b"}],"vertices":["a","b"]}
//! ```
//!
//! Identifiers may be written as JSON numbers; they are read as their decimal
//! text. Signs are the strings `"+"` and `"-"`. A marked graph has the same
//! shape with unsigned edges and vertices written as `{"id":..,"sign":..}`.
//!
//! Writers emit compact JSON with object keys sorted and vertices and edges in
//! identifier order, so equal graphs always serialize to the same bytes.

use std::collections::{BTreeMap, HashSet};
use std::fmt::{self, Write as _};

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::analysis::{ComponentKind, StructureReport};
use crate::generate::Recipe;
use crate::graph::{Edge, GraphError, MarkedGraph, Multigraph, Sign, SignedEdge, SignedGraph};

#[derive(Debug, Error)]
pub enum IoError {
    /// Malformed JSON or a document that does not fit the schema. The message
    /// carries the line and column.
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    /// Well-formed document describing an invalid graph.
    #[error("{location}: {source}")]
    Graph {
        location: String,
        #[source]
        source: GraphError,
    },
}

impl IoError {
    fn at(location: String, source: GraphError) -> IoError {
        IoError::Graph { location, source }
    }
}

fn deserialize_id<'de, D: Deserializer<'de>>(d: D) -> Result<String, D::Error> {
    struct IdVisitor;

    impl Visitor<'_> for IdVisitor {
        type Value = String;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a string or number identifier")
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<String, E> {
            Ok(v.to_owned())
        }

        fn visit_string<E: de::Error>(self, v: String) -> Result<String, E> {
            Ok(v)
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<String, E> {
            Ok(v.to_string())
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<String, E> {
            Ok(v.to_string())
        }

        fn visit_f64<E: de::Error>(self, v: f64) -> Result<String, E> {
            Ok(v.to_string())
        }
    }

    d.deserialize_any(IdVisitor)
}

fn deserialize_ids<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<String>, D::Error> {
    #[derive(Deserialize)]
    struct Id(#[serde(deserialize_with = "deserialize_id")] String);
    Ok(Vec::<Id>::deserialize(d)?.into_iter().map(|Id(s)| s).collect())
}

fn deserialize_sign<'de, D: Deserializer<'de>>(d: D) -> Result<Sign, D::Error> {
    struct SignVisitor;

    impl Visitor<'_> for SignVisitor {
        type Value = Sign;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str(r#"a sign, "+" or "-""#)
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<Sign, E> {
            Sign::from_symbol(v).ok_or_else(|| E::invalid_value(de::Unexpected::Str(v), &self))
        }
    }

    d.deserialize_any(SignVisitor)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSignedEdge {
    #[serde(deserialize_with = "deserialize_id")]
    id: String,
    #[serde(deserialize_with = "deserialize_id")]
    u: String,
    #[serde(deserialize_with = "deserialize_id")]
    v: String,
    #[serde(deserialize_with = "deserialize_sign")]
    sign: Sign,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSignedGraph {
    #[serde(deserialize_with = "deserialize_ids")]
    vertices: Vec<String>,
    edges: Vec<RawSignedEdge>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdge {
    #[serde(deserialize_with = "deserialize_id")]
    id: String,
    #[serde(deserialize_with = "deserialize_id")]
    u: String,
    #[serde(deserialize_with = "deserialize_id")]
    v: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMarkedVertex {
    #[serde(deserialize_with = "deserialize_id")]
    id: String,
    #[serde(deserialize_with = "deserialize_sign")]
    sign: Sign,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMarkedGraph {
    vertices: Vec<RawMarkedVertex>,
    edges: Vec<RawEdge>,
}

/// Checks vertex and edge lists in document order so errors can name the
/// offending array element.
fn locate_errors<'a>(
    vertices: impl Iterator<Item = &'a str>,
    edges: impl Iterator<Item = (&'a str, &'a str, &'a str)>,
) -> Result<(), IoError> {
    let mut seen = HashSet::new();
    for (i, v) in vertices.enumerate() {
        if !seen.insert(v) {
            return Err(IoError::at(format!("vertices[{i}]"), GraphError::DuplicateVertex(v.into())));
        }
    }
    let mut edge_ids = HashSet::new();
    for (i, (id, u, v)) in edges.enumerate() {
        let at = |e| IoError::at(format!("edges[{i}]"), e);
        if !edge_ids.insert(id) {
            return Err(at(GraphError::DuplicateEdge(id.into())));
        }
        if u == v {
            return Err(at(GraphError::Loop { edge: id.into(), vertex: u.into() }));
        }
        for w in [u, v] {
            if !seen.contains(w) {
                return Err(at(GraphError::UnknownEndpoint { edge: id.into(), vertex: w.into() }));
            }
        }
    }
    Ok(())
}

pub fn read_signed_graph(text: &str) -> Result<SignedGraph, IoError> {
    let raw: RawSignedGraph = serde_json::from_str(text)?;
    locate_errors(
        raw.vertices.iter().map(String::as_str),
        raw.edges.iter().map(|e| (e.id.as_str(), e.u.as_str(), e.v.as_str())),
    )?;
    let edges = raw.edges.into_iter().map(|e| SignedEdge::new(e.id, e.u, e.v, e.sign)).collect();
    SignedGraph::new(raw.vertices, edges).map_err(|e| IoError::at("graph".into(), e))
}

pub fn write_signed_graph(g: &SignedGraph) -> String {
    let edges: Vec<Value> =
        g.edges().into_iter().map(|e| json!({"id": e.id, "u": e.u, "v": e.v, "sign": e.sign.symbol()})).collect();
    json!({"vertices": g.topology().vertex_ids(), "edges": edges}).to_string()
}

pub fn read_marked_graph(text: &str) -> Result<MarkedGraph, IoError> {
    let raw: RawMarkedGraph = serde_json::from_str(text)?;
    locate_errors(
        raw.vertices.iter().map(|v| v.id.as_str()),
        raw.edges.iter().map(|e| (e.id.as_str(), e.u.as_str(), e.v.as_str())),
    )?;
    let vertices = raw.vertices.into_iter().map(|v| (v.id, v.sign)).collect();
    let edges = raw.edges.into_iter().map(|e| Edge::new(e.id, e.u, e.v)).collect();
    MarkedGraph::new(vertices, edges).map_err(|e| IoError::at("graph".into(), e))
}

pub fn write_marked_graph(m: &MarkedGraph) -> String {
    let t = m.topology();
    let vertices: Vec<Value> =
        (0..t.vertex_count()).map(|v| json!({"id": t.vertex_id(v), "sign": m.mark(v).symbol()})).collect();
    let edges: Vec<Value> = m.edges().into_iter().map(|e| json!({"id": e.id, "u": e.u, "v": e.v})).collect();
    json!({"vertices": vertices, "edges": edges}).to_string()
}

/// Any serializable value as compact JSON with sorted object keys.
pub fn to_json<T: Serialize>(value: &T) -> String {
    sorted(value).to_string()
}

/// Like [`to_json`], indented.
pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(&sorted(value)).expect("JSON values always serialize")
}

fn sorted<T: Serialize>(value: &T) -> Value {
    // serde_json's Value map is a BTreeMap, which sorts keys
    serde_json::to_value(value).expect("report types serialize to JSON")
}

pub fn read_recipe(text: &str) -> Result<Recipe, IoError> {
    Ok(serde_json::from_str(text)?)
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

fn dot_symbol(s: Sign) -> &'static str {
    match s {
        Sign::Positive => "+",
        Sign::Negative => "\u{2212}",
    }
}

/// Graphs that [`export_dot`] can draw.
pub trait DotGraph: Multigraph {
    /// Extra attributes for vertex `v`.
    fn node_attributes(&self, v: usize) -> Option<String>;
    /// Extra attributes for edge `e`, besides its label.
    fn edge_attributes(&self, e: usize) -> Option<String>;
}

impl DotGraph for SignedGraph {
    fn node_attributes(&self, _: usize) -> Option<String> {
        None
    }

    fn edge_attributes(&self, e: usize) -> Option<String> {
        self.sign(e).is_negative().then(|| "style=dashed".to_owned())
    }
}

impl DotGraph for MarkedGraph {
    fn node_attributes(&self, v: usize) -> Option<String> {
        let id = self.topology().vertex_id(v);
        Some(format!("label={}", quote(&format!("{id} [{}]", dot_symbol(self.mark(v))))))
    }

    fn edge_attributes(&self, _: usize) -> Option<String> {
        None
    }
}

/// Renders `g` in Graphviz DOT. Negative edges are dashed and marked-graph
/// vertices are labelled with their sign. With a report, each negative-subgraph
/// component that has edges becomes a cluster and every edge of a nontrivial
/// block gets a `comment` naming the block.
pub fn export_dot<G: DotGraph>(g: &G, annotations: Option<&StructureReport>) -> String {
    let t = g.topology();
    let mut out = String::from("graph G {\n");
    let mut block_of: BTreeMap<&str, usize> = BTreeMap::new();
    if let Some(report) = annotations {
        for (n, c) in report.components.iter().filter(|c| !c.edges.is_empty()).enumerate() {
            let kind = match c.kind {
                ComponentKind::Circle => "circle",
                ComponentKind::NontrivialPath => "path",
                ComponentKind::SingleVertex => "vertex",
                ComponentKind::Irregular => "irregular",
            };
            writeln!(out, "  subgraph cluster_{n} {{").unwrap();
            writeln!(out, "    label={};", quote(&format!("negative {kind}"))).unwrap();
            for v in &c.vertices {
                writeln!(out, "    {};", quote(v)).unwrap();
            }
            out.push_str("  }\n");
        }
        for (i, b) in report.blocks.iter().filter(|b| b.nontrivial).enumerate() {
            for e in &b.edges {
                block_of.insert(e, i);
            }
        }
    }
    for v in 0..t.vertex_count() {
        match g.node_attributes(v) {
            Some(a) => writeln!(out, "  {} [{a}];", quote(t.vertex_id(v))).unwrap(),
            None => writeln!(out, "  {};", quote(t.vertex_id(v))).unwrap(),
        }
    }
    for e in 0..t.edge_count() {
        let (u, v) = t.endpoints(e);
        let id = t.edge_id(e);
        let mut attrs = vec![format!("label={}", quote(id))];
        attrs.extend(g.edge_attributes(e));
        if let Some(b) = block_of.get(id) {
            attrs.push(format!("comment={}", quote(&format!("block {b}"))));
        }
        writeln!(out, "  {} -- {} [{}];", quote(t.vertex_id(u)), quote(t.vertex_id(v)), attrs.join(", ")).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::classify_structure;
    use crate::linegraph::line_graph;

    fn triangle() -> SignedGraph {
        read_signed_graph(
            r#"{"vertices":["c","a","b"],"edges":[
                {"id":"e3","u":"c","v":"a","sign":"+"},
                {"id":"e1","u":"a","v":"b","sign":"-"},
                {"id":"e2","u":"b","v":"c","sign":"-"}]}"#,
        )
        .unwrap()
    }

    #[test]
    fn reads_minimal_graph() {
        let g =
            read_signed_graph(r#"{"vertices":["a","b"],"edges":[{"id":"e1","u":"a","v":"b","sign":"-"}]}"#).unwrap();
        assert_eq!(g.topology().vertex_count(), 2);
        assert_eq!(g.edge_sign("e1").unwrap(), Sign::Negative);
    }

    #[test]
    fn numeric_ids_are_stringified() {
        let g = read_signed_graph(r#"{"vertices":[1,2],"edges":[{"id":7,"u":1,"v":2,"sign":"+"}]}"#).unwrap();
        assert_eq!(g.topology().vertex_ids(), ["1", "2"]);
        assert_eq!(g.topology().edge_ids(), ["7"]);
    }

    #[test]
    fn schema_errors_carry_position() {
        let bad_sign = r#"{"vertices":["a","b"],
"edges":[{"id":"e1","u":"a","v":"b","sign":"x"}]}"#;
        let msg = read_signed_graph(bad_sign).unwrap_err().to_string();
        assert!(msg.contains("line 2"), "{msg}");
        assert!(
            read_signed_graph(r#"{"vertices":["a","b"],"edges":[{"id":"e1","u":"a","v":"b","sign":true}]}"#).is_err()
        );
        assert!(read_signed_graph(r#"{"vertices":["a"],"edges":[],"extra":1}"#).is_err());
        assert!(read_signed_graph(r#"{"vertices":["a"]}"#).is_err());
        assert!(read_signed_graph("{").is_err());
    }

    #[test]
    fn graph_errors_name_the_element() {
        let err = read_signed_graph(r#"{"vertices":["a","b"],"edges":[{"id":"e1","u":"a","v":"a","sign":"+"}]}"#)
            .unwrap_err();
        assert!(matches!(&err, IoError::Graph { location, source: GraphError::Loop { .. } } if location == "edges[0]"));
        let err = read_signed_graph(
            r#"{"vertices":["a","b"],"edges":[{"id":"e1","u":"a","v":"b","sign":"+"},{"id":"e1","u":"a","v":"b","sign":"-"}]}"#,
        )
        .unwrap_err();
        assert_eq!(err.to_string(), r#"edges[1]: duplicate edge identifier "e1""#);
        let err = read_signed_graph(r#"{"vertices":["a","b","a"],"edges":[]}"#).unwrap_err();
        assert!(err.to_string().starts_with("vertices[2]"));
        let err =
            read_signed_graph(r#"{"vertices":["a"],"edges":[{"id":"e","u":"a","v":"z","sign":"+"}]}"#).unwrap_err();
        assert!(matches!(err, IoError::Graph { source: GraphError::UnknownEndpoint { .. }, .. }));
    }

    #[test]
    fn writes_sorted_canonical_json() {
        assert_eq!(
            write_signed_graph(&triangle()),
            r#"{"edges":[{"id":"e1","sign":"-","u":"a","v":"b"},{"id":"e2","sign":"-","u":"b","v":"c"},{"id":"e3","sign":"+","u":"c","v":"a"}],"vertices":["a","b","c"]}"#
        );
        let empty = SignedGraph::new(Vec::<String>::new(), vec![]).unwrap();
        assert_eq!(write_signed_graph(&empty), r#"{"edges":[],"vertices":[]}"#);
    }

    #[test]
    fn round_trips() {
        let g = triangle();
        assert_eq!(read_signed_graph(&write_signed_graph(&g)).unwrap(), g);
        let l = line_graph(&g);
        let text = write_marked_graph(&l);
        let back = read_marked_graph(&text).unwrap();
        assert_eq!(back, l);
        assert_eq!(write_marked_graph(&back), text);
    }

    #[test]
    fn dot_renders_negative_edges_dashed() {
        let dot = export_dot(&triangle(), None);
        assert!(dot.starts_with("graph G {\n"));
        assert!(dot.contains(r#""a" -- "b" [label="e1", style=dashed];"#), "{dot}");
        assert!(dot.contains(r#""c" -- "a" [label="e3"];"#), "{dot}");
    }

    #[test]
    fn dot_labels_marked_vertices() {
        let m = MarkedGraph::new(vec![("e1".into(), Sign::Negative), ("e2".into(), Sign::Positive)], vec![]).unwrap();
        let dot = export_dot(&m, None);
        assert!(dot.contains("\"e1\" [label=\"e1 [\u{2212}]\"];"), "{dot}");
        assert!(dot.contains(r#""e2" [label="e2 [+]"];"#), "{dot}");
    }

    #[test]
    fn dot_clusters_negative_components() {
        let g = read_signed_graph(
            r#"{"vertices":["a","b","c","d"],"edges":[
                {"id":"ab","u":"a","v":"b","sign":"-"},{"id":"bc","u":"b","v":"c","sign":"-"},
                {"id":"cd","u":"c","v":"d","sign":"-"},{"id":"da","u":"d","v":"a","sign":"-"}]}"#,
        )
        .unwrap();
        let dot = export_dot(&g, Some(&classify_structure(&g)));
        assert_eq!(dot.matches("subgraph cluster_").count(), 1);
        assert!(dot.contains("label=\"negative circle\""));
        assert!(dot.contains("comment=\"block 0\""));
        assert_eq!(dot, export_dot(&g, Some(&classify_structure(&g))));
    }

    #[test]
    fn dot_quotes_awkward_ids() {
        let g = SignedGraph::new(["a\"b", "c\\"], vec![SignedEdge::new("x", "a\"b", "c\\", Sign::Positive)]).unwrap();
        assert!(export_dot(&g, None).contains(r#""a\"b" -- "c\\""#));
    }

    #[test]
    fn recipe_rejects_unknown_fields() {
        assert!(read_recipe(r#"{"negative_circles":[{"length":4,"pendants_per_vertex":0}]}"#).is_ok());
        assert!(read_recipe(r#"{"bogus":1}"#).is_err());
    }
}
