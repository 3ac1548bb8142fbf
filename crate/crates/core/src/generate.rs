//! Test corpora: exhaustive small graphs, seeded random multigraphs, and
//! line-consistent graphs assembled from negative circles and paths.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Sign, SignedEdge, SignedGraph};

pub const MAX_EXHAUSTIVE_VERTICES: usize = 7;
pub const MAX_EXHAUSTIVE_EDGES: usize = 12;
/// Parallel multiplicity cap for exhaustive generation.
pub const MAX_MULTIPLICITY: usize = 2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("bounds exceeded: {0}")]
    Bounds(String),
    #[error("impossible parameters: {0}")]
    Parameters(String),
    #[error("unsatisfiable recipe: {0}")]
    Unsatisfiable(String),
}

fn vertex_name(i: usize) -> String {
    format!("v{i}")
}

/// Rejects sizes beyond [`MAX_EXHAUSTIVE_VERTICES`] and [`MAX_EXHAUSTIVE_EDGES`].
pub fn check_bounds(max_vertices: usize, max_edges: usize) -> Result<(), GenerateError> {
    if max_vertices > MAX_EXHAUSTIVE_VERTICES {
        return Err(GenerateError::Bounds(format!("max_vertices {max_vertices} exceeds {MAX_EXHAUSTIVE_VERTICES}")));
    }
    if max_edges > MAX_EXHAUSTIVE_EDGES {
        return Err(GenerateError::Bounds(format!("max_edges {max_edges} exceeds {MAX_EXHAUSTIVE_EDGES}")));
    }
    Ok(())
}

/// Every labelled loopless multigraph on vertex sets `v0..v{n-1}`, `1 <= n <=
/// max_vertices`, with at most `max_edges` edges and parallel multiplicity at
/// most 2, under every sign assignment.
///
/// Order: by vertex count, then multiplicity vector over vertex pairs
/// (lexicographic pair order, first pair varying fastest), then sign mask.
/// Parallel edges between `vi` and `vj` are named `ei-j.0`, `ei-j.1`.
pub fn exhaustive_signed_graphs(max_vertices: usize, max_edges: usize) -> Result<ExhaustiveGraphs, GenerateError> {
    check_bounds(max_vertices, max_edges)?;
    let mut it = ExhaustiveGraphs {
        max_vertices,
        max_edges,
        n: 0,
        pairs: Vec::new(),
        multiplicity: Vec::new(),
        edge_count: 0,
        sign_mask: 0,
        done: max_vertices == 0,
    };
    if !it.done {
        it.start_order(1);
    }
    Ok(it)
}

/// Lazy iterator behind [`exhaustive_signed_graphs`].
#[derive(Debug, Clone)]
pub struct ExhaustiveGraphs {
    max_vertices: usize,
    max_edges: usize,
    n: usize,
    pairs: Vec<(usize, usize)>,
    multiplicity: Vec<usize>,
    edge_count: usize,
    sign_mask: u64,
    done: bool,
}

impl ExhaustiveGraphs {
    fn start_order(&mut self, n: usize) {
        self.n = n;
        self.pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        self.multiplicity = vec![0; self.pairs.len()];
        self.edge_count = 0;
        self.sign_mask = 0;
    }

    fn current(&self) -> SignedGraph {
        let mut edges = Vec::with_capacity(self.edge_count);
        for (&(i, j), &k) in self.pairs.iter().zip(&self.multiplicity) {
            for copy in 0..k {
                let bit = edges.len();
                let sign = if self.sign_mask >> bit & 1 == 1 { Sign::Negative } else { Sign::Positive };
                edges.push(SignedEdge::new(format!("e{i}-{j}.{copy}"), vertex_name(i), vertex_name(j), sign));
            }
        }
        SignedGraph::new((0..self.n).map(vertex_name), edges).expect("generated graphs are valid")
    }

    /// Next multiplicity vector within the edge budget; false when exhausted.
    fn next_shape(&mut self) -> bool {
        for i in 0..self.multiplicity.len() {
            if self.multiplicity[i] < MAX_MULTIPLICITY && self.edge_count < self.max_edges {
                self.multiplicity[i] += 1;
                self.edge_count += 1;
                return true;
            }
            self.edge_count -= self.multiplicity[i];
            self.multiplicity[i] = 0;
        }
        false
    }

    fn advance(&mut self) {
        self.sign_mask += 1;
        if self.sign_mask < 1 << self.edge_count {
            return;
        }
        self.sign_mask = 0;
        if self.next_shape() {
            return;
        }
        if self.n < self.max_vertices {
            self.start_order(self.n + 1);
        } else {
            self.done = true;
        }
    }
}

impl Iterator for ExhaustiveGraphs {
    type Item = SignedGraph;

    fn next(&mut self) -> Option<SignedGraph> {
        if self.done {
            return None;
        }
        let g = self.current();
        self.advance();
        Some(g)
    }
}

/// Negative-edge probabilities cycled through by [`random_corpus`].
pub const CORPUS_PROBABILITIES: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

/// `count` seeded random graphs with at most `max_vertices` vertices and
/// `max_edges` edges. Sizes are drawn uniformly and the negative-edge
/// probability cycles through [`CORPUS_PROBABILITIES`].
pub fn random_corpus(
    count: usize,
    max_vertices: usize,
    max_edges: usize,
    seed: u64,
) -> Result<Vec<SignedGraph>, GenerateError> {
    check_bounds(max_vertices, max_edges)?;
    if max_vertices < 2 && max_edges > 0 {
        return Err(GenerateError::Parameters("edges need at least 2 vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(max_vertices.min(2)..=max_vertices);
            let m = if n < 2 { 0 } else { rng.gen_range(0..=max_edges) };
            let p = CORPUS_PROBABILITIES[i % CORPUS_PROBABILITIES.len()];
            random_signed_graph(n, m, p, rng.gen())
        })
        .collect()
}

/// A seeded random signed multigraph: `m` edges, each between a uniformly
/// chosen pair of distinct vertices, negative with probability
/// `negative_probability`.
pub fn random_signed_graph(
    n: usize,
    m: usize,
    negative_probability: f64,
    seed: u64,
) -> Result<SignedGraph, GenerateError> {
    if m > 0 && n < 2 {
        return Err(GenerateError::Parameters(format!("{m} edges need at least 2 vertices, got {n}")));
    }
    if !(0.0..=1.0).contains(&negative_probability) {
        return Err(GenerateError::Parameters(format!("negative probability {negative_probability} is not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = m.saturating_sub(1).to_string().len();
    let edges = (0..m)
        .map(|i| {
            let u = rng.gen_range(0..n);
            let v = (u + rng.gen_range(1..n)) % n;
            let sign = if rng.gen_bool(negative_probability) { Sign::Negative } else { Sign::Positive };
            SignedEdge::new(format!("e{i:0width$}"), vertex_name(u), vertex_name(v), sign)
        })
        .collect();
    Ok(SignedGraph::new((0..n).map(vertex_name), edges).expect("generated graphs are valid"))
}

/// An all-negative circle block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NegativeCircleSpec {
    pub length: usize,
    /// New positive pendant edges per circle vertex (0 or 1).
    #[serde(default)]
    pub pendants_per_vertex: usize,
}

/// A negative path lying in a nontrivial block: closed by one positive edge
/// when `closed`, otherwise joined to the scaffold (or a fresh positive
/// detour) at both ends so that it is induced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockPathSpec {
    pub length: usize,
    /// New positive pendant edges per interior vertex (0 or 1).
    #[serde(default)]
    pub pendants_per_vertex: usize,
}

/// A negative path made of isthmi.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsthmusPathSpec {
    pub length: usize,
    #[serde(default)]
    pub pendants_per_vertex: usize,
    /// Positive isthmus extensions per endpoint (0 or 1).
    #[serde(default)]
    pub endpoint_extensions: usize,
}

/// A connected all-positive core: a random spanning tree plus extra edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScaffoldSpec {
    pub vertices: usize,
    #[serde(default)]
    pub extra_edges: usize,
}

/// What [`generate_line_consistent`] assembles.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Recipe {
    #[serde(default)]
    pub negative_circles: Vec<NegativeCircleSpec>,
    #[serde(default)]
    pub closed_paths: Vec<BlockPathSpec>,
    #[serde(default)]
    pub induced_paths: Vec<BlockPathSpec>,
    #[serde(default)]
    pub isthmus_paths: Vec<IsthmusPathSpec>,
    #[serde(default)]
    pub scaffold: Option<ScaffoldSpec>,
    /// Extra positive pendant vertices hung on free attachment points.
    #[serde(default)]
    pub positive_pendants: usize,
    /// Join the pieces into one component with positive isthmi where
    /// attachment points allow.
    #[serde(default)]
    pub link: bool,
}

impl Recipe {
    /// A small random recipe, for fuzzing the generator.
    pub fn sample(seed: u64) -> Recipe {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut r = Recipe::default();
        for _ in 0..rng.gen_range(0..=2) {
            r.negative_circles.push(NegativeCircleSpec {
                length: 2 * rng.gen_range(1..=2),
                pendants_per_vertex: rng.gen_range(0..=1),
            });
        }
        for _ in 0..rng.gen_range(0..=1) {
            r.closed_paths
                .push(BlockPathSpec { length: 2 * rng.gen_range(1..=2), pendants_per_vertex: rng.gen_range(0..=1) });
        }
        for _ in 0..rng.gen_range(0..=1) {
            r.induced_paths
                .push(BlockPathSpec { length: 2 * rng.gen_range(1..=2), pendants_per_vertex: rng.gen_range(0..=1) });
        }
        for _ in 0..rng.gen_range(0..=2) {
            r.isthmus_paths.push(IsthmusPathSpec {
                length: rng.gen_range(1..=3),
                pendants_per_vertex: rng.gen_range(0..=1),
                endpoint_extensions: rng.gen_range(0..=1),
            });
        }
        if rng.gen_bool(0.6) {
            let vertices = rng.gen_range(1..=4);
            let extra_edges = if vertices > 1 { rng.gen_range(0..=2) } else { 0 };
            r.scaffold = Some(ScaffoldSpec { vertices, extra_edges });
        }
        r.positive_pendants = rng.gen_range(0..=2);
        r.link = rng.gen_bool(0.8);
        r
    }

    fn validate(&self) -> Result<(), GenerateError> {
        let unsat = |msg: String| Err(GenerateError::Unsatisfiable(msg));
        let check_pendants = |what: &str, k: usize| {
            if k > 1 {
                unsat(format!(
                    "{what}: a vertex on a negative circle or path takes at most one extra edge, asked for {k}"
                ))
            } else {
                Ok(())
            }
        };
        for c in &self.negative_circles {
            if c.length < 2 || c.length % 2 == 1 {
                return unsat(format!("all-negative circle of length {} is not balanced", c.length));
            }
            check_pendants("negative circle", c.pendants_per_vertex)?;
        }
        for (what, paths) in [("closed path", &self.closed_paths), ("induced path", &self.induced_paths)] {
            for p in paths {
                if p.length < 2 || p.length % 2 == 1 {
                    return unsat(format!(
                        "{what} of length {}: a negative path on a circle must have even positive length to keep balance",
                        p.length
                    ));
                }
                check_pendants(what, p.pendants_per_vertex)?;
            }
        }
        for p in &self.isthmus_paths {
            if p.length < 1 {
                return unsat("isthmus path of length 0".into());
            }
            check_pendants("isthmus path", p.pendants_per_vertex)?;
            if p.endpoint_extensions > 1 {
                return unsat(format!(
                    "isthmus path endpoints are at most divalent, asked for {} extensions",
                    p.endpoint_extensions
                ));
            }
        }
        if let Some(s) = &self.scaffold {
            if s.vertices == 0 {
                return unsat("empty scaffold".into());
            }
            if s.vertices == 1 && s.extra_edges > 0 {
                return unsat("extra scaffold edges need two scaffold vertices".into());
            }
        }
        Ok(())
    }
}

/// Incremental graph assembly.
struct Builder {
    vertices: usize,
    edges: Vec<(usize, usize, Sign)>,
    rng: ChaCha8Rng,
}

/// A piece of the construction plus the vertices that may take one more
/// positive isthmus (`slots`) or any number of them (`open`).
struct Unit {
    slots: Vec<usize>,
    open: Vec<usize>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.vertices += 1;
        self.vertices - 1
    }

    fn edge(&mut self, u: usize, v: usize, sign: Sign) {
        self.edges.push((u, v, sign));
    }

    fn pendant(&mut self, at: usize) -> usize {
        let leaf = self.vertex();
        self.edge(at, leaf, Sign::Positive);
        leaf
    }

    fn negative_path(&mut self, length: usize) -> Vec<usize> {
        let mut path = vec![self.vertex()];
        for _ in 0..length {
            let next = self.vertex();
            self.edge(*path.last().expect("nonempty"), next, Sign::Negative);
            path.push(next);
        }
        path
    }

    /// Gives each vertex in `at` a pendant (k = 1) or keeps it as a slot.
    fn pendants_or_slots(&mut self, at: &[usize], k: usize, unit: &mut Unit) {
        for &v in at {
            if k == 1 {
                let leaf = self.pendant(v);
                unit.open.push(leaf);
            } else {
                unit.slots.push(v);
            }
        }
    }

    fn finish(self) -> SignedGraph {
        let width = self.vertices.saturating_sub(1).to_string().len();
        let ewidth = self.edges.len().saturating_sub(1).to_string().len();
        SignedGraph::new(
            (0..self.vertices).map(|i| format!("v{i:0width$}")),
            self.edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v, s))| {
                    SignedEdge::new(format!("e{i:0ewidth$}"), format!("v{u:0width$}"), format!("v{v:0width$}"), s)
                })
                .collect(),
        )
        .expect("assembled graphs are valid")
    }
}

/// Builds a line-consistent signed graph following `recipe`.
///
/// Every negative circle is a block whose vertices take at most one positive
/// isthmus each; closed paths have even length and are completed by one
/// positive edge; induced paths have even length and close through the
/// positive scaffold or a fresh positive detour; isthmus paths keep their
/// endpoints at degree at most 2. Pieces are then joined by positive isthmi
/// that never give a negative-edge vertex more than one extra edge.
pub fn generate_line_consistent(recipe: &Recipe, seed: u64) -> Result<SignedGraph, GenerateError> {
    recipe.validate()?;
    let mut b = Builder { vertices: 0, edges: Vec::new(), rng: ChaCha8Rng::seed_from_u64(seed) };
    let mut units: Vec<Unit> = Vec::new();

    let mut scaffold = None;
    if let Some(spec) = &recipe.scaffold {
        let vs: Vec<usize> = (0..spec.vertices).map(|_| b.vertex()).collect();
        for i in 1..vs.len() {
            let parent = vs[b.rng.gen_range(0..i)];
            b.edge(parent, vs[i], Sign::Positive);
        }
        for _ in 0..spec.extra_edges {
            let i = b.rng.gen_range(0..vs.len());
            let j = (i + b.rng.gen_range(1..vs.len())) % vs.len();
            b.edge(vs[i], vs[j], Sign::Positive);
        }
        scaffold = Some(units.len());
        units.push(Unit { slots: Vec::new(), open: vs });
    }

    for c in &recipe.negative_circles {
        let path = b.negative_path(c.length - 1);
        b.edge(path[c.length - 1], path[0], Sign::Negative);
        let mut unit = Unit { slots: Vec::new(), open: Vec::new() };
        b.pendants_or_slots(&path, c.pendants_per_vertex, &mut unit);
        units.push(unit);
    }

    for p in &recipe.closed_paths {
        let path = b.negative_path(p.length);
        b.edge(path[p.length], path[0], Sign::Positive);
        let mut unit = Unit { slots: Vec::new(), open: Vec::new() };
        b.pendants_or_slots(&path[1..p.length], p.pendants_per_vertex, &mut unit);
        units.push(unit);
    }

    for p in &recipe.induced_paths {
        let path = b.negative_path(p.length);
        let (first, last) = (path[0], path[p.length]);
        let target = match scaffold {
            Some(s) => s,
            None => {
                let hub = b.vertex();
                units.push(Unit { slots: Vec::new(), open: vec![hub] });
                units.len() - 1
            }
        };
        let open = &units[target].open;
        let (x, y) = if open.len() >= 2 {
            let x = open[b.rng.gen_range(0..open.len())];
            (x, open[b.rng.gen_range(0..open.len())])
        } else {
            (open[0], open[0])
        };
        b.edge(first, x, Sign::Positive);
        b.edge(last, y, Sign::Positive);
        let mut interior = Unit { slots: Vec::new(), open: Vec::new() };
        b.pendants_or_slots(&path[1..p.length], p.pendants_per_vertex, &mut interior);
        let unit = &mut units[target];
        unit.slots.extend(interior.slots);
        unit.open.extend(interior.open);
    }

    for p in &recipe.isthmus_paths {
        let path = b.negative_path(p.length);
        let mut unit = Unit { slots: Vec::new(), open: Vec::new() };
        b.pendants_or_slots(&path[1..p.length], p.pendants_per_vertex, &mut unit);
        b.pendants_or_slots(&[path[0], path[p.length]], p.endpoint_extensions, &mut unit);
        units.push(unit);
    }

    for _ in 0..recipe.positive_pendants {
        let candidates: Vec<usize> =
            (0..units.len()).filter(|&u| !units[u].open.is_empty() || !units[u].slots.is_empty()).collect();
        let Some(&u) = candidates.choose(&mut b.rng) else { break };
        let at = take_attachment(&mut b.rng, &mut units[u]);
        let leaf = b.pendant(at);
        units[u].open.push(leaf);
    }

    if recipe.link {
        units.shuffle(&mut b.rng);
        let mut merged: Option<Unit> = None;
        for mut unit in units {
            let Some(acc) = merged.as_mut() else {
                merged = Some(unit);
                continue;
            };
            let free = |u: &Unit| !u.open.is_empty() || !u.slots.is_empty();
            if free(acc) && free(&unit) {
                let x = take_attachment(&mut b.rng, acc);
                let y = take_attachment(&mut b.rng, &mut unit);
                b.edge(x, y, Sign::Positive);
            }
            // unlinked pieces stay separate components; their attachment
            // points are kept so later pieces can still join them
            acc.slots.extend(unit.slots);
            acc.open.extend(unit.open);
        }
    }

    Ok(b.finish())
}

/// Picks an attachment vertex, consuming it if it is a single-use slot.
fn take_attachment(rng: &mut ChaCha8Rng, unit: &mut Unit) -> usize {
    let total = unit.open.len() + unit.slots.len();
    let k = rng.gen_range(0..total);
    if k < unit.open.len() {
        unit.open[k]
    } else {
        unit.slots.swap_remove(k - unit.open.len())
    }
}
