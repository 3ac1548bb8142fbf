//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use linecons::crosscheck::{evaluate_all, CrossCheck};
use linecons::generate::{exhaustive_signed_graphs, generate_line_consistent, random_corpus, Recipe};
use linecons::io::{read_signed_graph, to_json, write_signed_graph};
use linecons::*;

/// Every criterion is exact: no mismatch of any kind is tolerated.
const TOLERATED_MISMATCHES: usize = 0;

const EXHAUSTIVE_MAX_VERTICES: usize = 4;
const EXHAUSTIVE_MAX_EDGES: usize = 6;
const RANDOM_COUNT: usize = 10_000;
const RANDOM_MAX_VERTICES: usize = 7;
const RANDOM_MAX_EDGES: usize = 12;
const RANDOM_SEED: u64 = 20_240_601;
const CUBE_SIGNINGS: usize = 1_000;
const CUBE_SEED: u64 = 3;
const GENERATOR_OUTPUTS: u64 = 1_000;

struct Corpus {
    graphs: Vec<SignedGraph>,
    checks: Vec<CrossCheck>,
}

impl Corpus {
    fn evaluate(graphs: Vec<SignedGraph>) -> Corpus {
        let checks = graphs.par_iter().map(|g| evaluate_all(g).expect("oracle within limits")).collect();
        Corpus { graphs, checks }
    }

    fn iter(&self) -> impl Iterator<Item = (&SignedGraph, &CrossCheck)> {
        self.graphs.iter().zip(&self.checks)
    }
}

struct Report {
    failed: usize,
}

impl Report {
    fn line(&mut self, n: usize, name: &str, mismatches: usize, detail: String) {
        let pass = mismatches == TOLERATED_MISMATCHES;
        if !pass {
            self.failed += 1;
        }
        println!("criterion {n} {name}: {} ({detail}, {mismatches} mismatches)", if pass { "PASS" } else { "FAIL" });
    }
}

fn structural_disagreements(c: &Corpus) -> usize {
    c.checks.iter().filter(|r| !r.disagreements.is_empty()).count()
}

fn build(vertices: &[&str], pairs: &[(&str, &str)], mask: u64) -> SignedGraph {
    let edges = pairs
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| {
            let sign = if mask >> i & 1 == 1 { Sign::Negative } else { Sign::Positive };
            SignedEdge::new(format!("{u}{v}"), u, v, sign)
        })
        .collect();
    SignedGraph::new(vertices.iter().copied(), edges).unwrap()
}

/// Mismatches between the bridgeless criterion, condition (ii), the oracle
/// and "all edges positive" for one signing.
fn bridgeless_mismatch(g: &SignedGraph) -> bool {
    let expected = g.is_all_positive();
    let oracle = is_consistent_oracle(&line_graph(g)).expect("oracle within limits").consistent;
    check_bridgeless(g) != Some(expected) || check_condition_ii(g).line_consistent != expected || oracle != expected
}

fn line_counts_hold(g: &SignedGraph) -> bool {
    let l = line_graph(g);
    let t = g.topology();
    let pairs: usize = (0..t.vertex_count()).map(|v| t.degree(v) * t.degree(v).saturating_sub(1) / 2).sum();
    l.topology().vertex_count() == t.edge_count() && l.topology().edge_count() == pairs
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut report = Report { failed: 0 };

    let exhaustive =
        Corpus::evaluate(exhaustive_signed_graphs(EXHAUSTIVE_MAX_VERTICES, EXHAUSTIVE_MAX_EDGES).unwrap().collect());
    let random =
        Corpus::evaluate(random_corpus(RANDOM_COUNT, RANDOM_MAX_VERTICES, RANDOM_MAX_EDGES, RANDOM_SEED).unwrap());
    let corpora = [&exhaustive, &random];

    report.line(
        1,
        "oracle equivalence, exhaustive",
        structural_disagreements(&exhaustive),
        format!(
            "{} graphs with <= {EXHAUSTIVE_MAX_VERTICES} vertices and <= {EXHAUSTIVE_MAX_EDGES} edges",
            exhaustive.graphs.len()
        ),
    );

    report.line(
        2,
        "oracle equivalence, random",
        random.checks.iter().filter(|r| !r.is_clean()).count(),
        format!(
            "{} graphs with <= {RANDOM_MAX_VERTICES} vertices and <= {RANDOM_MAX_EDGES} edges",
            random.graphs.len()
        ),
    );

    let mut simple = 0;
    let mut mismatches = 0;
    for (g, r) in corpora.iter().flat_map(|c| c.iter()) {
        if g.topology().is_simple() {
            simple += 1;
            let criterion = r.verdict(Method::SimpleCriterion).map(|v| v.line_consistent);
            let ii = r.verdict(Method::ConditionII).map(|v| v.line_consistent);
            mismatches += usize::from(criterion.is_none() || criterion != ii);
        }
    }
    report.line(3, "simple-graph criterion equals condition (ii)", mismatches, format!("{simple} simple graphs"));

    let k4_vertices = ["a", "b", "c", "d"];
    let k4 = [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")];
    let cube_vertices = ["000", "001", "010", "011", "100", "101", "110", "111"];
    let cube: Vec<(&str, &str)> = cube_vertices
        .iter()
        .flat_map(|u| cube_vertices.iter().map(move |v| (*u, *v)))
        .filter(|(u, v)| u < v && u.chars().zip(v.chars()).filter(|(a, b)| a != b).count() == 1)
        .collect();
    assert_eq!(cube.len(), 12);
    let mut rng = ChaCha8Rng::seed_from_u64(CUBE_SEED);
    let cube_masks: Vec<u64> =
        std::iter::once(0).chain((0..CUBE_SIGNINGS).map(|_| rng.gen_range(0..1 << 12))).collect();
    let k4_graphs: Vec<SignedGraph> = (0..1 << 6).map(|m| build(&k4_vertices, &k4, m)).collect();
    let cube_graphs: Vec<SignedGraph> = cube_masks.iter().map(|&m| build(&cube_vertices, &cube, m)).collect();
    let mismatches = k4_graphs.par_iter().chain(cube_graphs.par_iter()).filter(|g| bridgeless_mismatch(g)).count();
    let positive = k4_graphs.iter().chain(&cube_graphs).filter(|g| check_condition_ii(g).line_consistent).count();
    let all_positive_cube = cube_graphs.iter().filter(|g| g.is_all_positive()).count();
    report.line(
        4,
        "bridgeless criterion on K4 and the 3-cube",
        mismatches,
        format!(
            "{} K4 signings, {} cube signings, {positive} judged line consistent, {all_positive_cube} all-positive cube signings",
            k4_graphs.len(),
            cube_graphs.len()
        ),
    );

    let negative_verdicts: usize = corpora
        .iter()
        .flat_map(|c| &c.checks)
        .map(|r| r.verdicts.iter().chain([&r.oracle]).filter(|v| !v.line_consistent).count())
        .sum();
    let bad: usize = corpora.iter().flat_map(|c| &c.checks).map(|r| r.bad_witnesses.len()).sum();
    report.line(5, "witness validity", bad, format!("{negative_verdicts} negative verdicts re-verified"));

    let generated: Vec<SignedGraph> = (0..GENERATOR_OUTPUTS)
        .map(|seed| generate_line_consistent(&Recipe::sample(seed), seed.wrapping_mul(0x9e37_79b9)).unwrap())
        .collect();
    let largest = generated.iter().map(|g| g.topology().edge_count()).max().unwrap_or(0);
    let generated = Corpus::evaluate(generated);
    report.line(
        6,
        "generator soundness",
        generated.checks.iter().filter(|r| !r.is_clean() || !r.line_consistent()).count(),
        format!("{} generated graphs, up to {largest} edges", generated.graphs.len()),
    );

    report.line(
        7,
        "balance cross-check",
        exhaustive.checks.iter().filter(|r| r.balanced_fast != r.balanced_oracle).count(),
        format!("{} graphs", exhaustive.graphs.len()),
    );

    let with_parallel = exhaustive.graphs.iter().filter(|g| !g.topology().is_simple()).count();
    report.line(
        8,
        "line-graph counting",
        exhaustive.graphs.iter().filter(|g| !line_counts_hold(g)).count() + usize::from(with_parallel == 0),
        format!("{} graphs, {with_parallel} with parallel edges", exhaustive.graphs.len()),
    );

    let rerun = random_corpus(RANDOM_COUNT, RANDOM_MAX_VERTICES, RANDOM_MAX_EDGES, RANDOM_SEED).unwrap();
    let mismatches = random
        .iter()
        .zip(&rerun)
        .par_bridge()
        .filter(|((g, r), again)| {
            let text = write_signed_graph(g);
            let back = read_signed_graph(&text).unwrap();
            back != **g
                || write_signed_graph(&back) != text
                || write_signed_graph(again) != text
                || to_json(&evaluate_all(again).unwrap()) != to_json(r)
        })
        .count();
    report.line(9, "round-trip and determinism", mismatches, format!("{} graphs", random.graphs.len()));

    println!("acceptance: {} of 9 criteria failed in {:.1?}", report.failed, start.elapsed());
    if report.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
