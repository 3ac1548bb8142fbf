//! Runs every decision procedure on one graph and compares them with the
//! oracle.

use serde::Serialize;

use crate::analysis::{
    check_bridgeless, check_condition_i, check_condition_ii, check_condition_iii, check_simple_criterion,
    classify_structure, Method, Verdict,
};
use crate::cycles::{circle_vertex_sign, is_balanced_fast, is_balanced_oracle, is_consistent_oracle_with_limit};
use crate::cycles::{CycleError, DEFAULT_CIRCLE_LIMIT};
use crate::graph::{Multigraph, SignedGraph};
use crate::linegraph::line_graph;

/// Verdicts of all methods on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    /// The oracle's verdict, with its witness.
    pub oracle: Verdict,
    /// Verdicts of the structural methods, in [`Method`] order. The
    /// simple-graph criterion appears only for simple graphs.
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bridgeless: Option<bool>,
    pub balanced_fast: bool,
    pub balanced_oracle: bool,
    /// Methods whose verdict differs from the oracle's.
    pub disagreements: Vec<Method>,
    /// Methods that reported "not line consistent" without a valid negative
    /// witness circle.
    pub bad_witnesses: Vec<Method>,
}

impl CrossCheck {
    pub fn line_consistent(&self) -> bool {
        self.oracle.line_consistent
    }

    /// True when every method, the bridgeless criterion (if it applies) and both balance
    /// checks agree, and every witness is valid.
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
            && self.bad_witnesses.is_empty()
            && self.bridgeless.is_none_or(|c| c == self.oracle.line_consistent)
            && self.balanced_fast == self.balanced_oracle
    }

    pub fn verdict(&self, method: Method) -> Option<&Verdict> {
        if method == Method::Oracle {
            return Some(&self.oracle);
        }
        self.verdicts.iter().find(|v| v.method == method)
    }
}

/// Runs conditions (i), (ii), (iii), the structural classification, the
/// simple-graph criterion when `g` is simple, and the oracle on the line graph.
pub fn evaluate_all(g: &SignedGraph) -> Result<CrossCheck, CycleError> {
    evaluate_all_with_limit(g, DEFAULT_CIRCLE_LIMIT)
}

pub fn evaluate_all_with_limit(g: &SignedGraph, limit: usize) -> Result<CrossCheck, CycleError> {
    let l = line_graph(g);
    let found = is_consistent_oracle_with_limit(&l, limit)?;
    let oracle = Verdict {
        method: Method::Oracle,
        line_consistent: found.consistent,
        failed_clause: None,
        witness: found.witness,
    };
    let mut verdicts =
        vec![check_condition_i(g), check_condition_ii(g), check_condition_iii(g), classify_structure(g).to_verdict(g)];
    if g.topology().is_simple() {
        verdicts.push(check_simple_criterion(g).expect("simple graphs are accepted"));
    }
    verdicts.sort_by_key(|v| v.method);

    let witness_ok = |v: &Verdict| {
        v.line_consistent
            || v.witness.as_ref().is_some_and(|c| circle_vertex_sign(&l, c).is_ok_and(|s| s.is_negative()))
    };
    let disagreements =
        verdicts.iter().filter(|v| v.line_consistent != oracle.line_consistent).map(|v| v.method).collect();
    let bad_witnesses = verdicts.iter().chain([&oracle]).filter(|v| !witness_ok(v)).map(|v| v.method).collect();
    Ok(CrossCheck {
        bridgeless: check_bridgeless(g),
        balanced_fast: is_balanced_fast(g),
        balanced_oracle: is_balanced_oracle(g)?,
        oracle,
        verdicts,
        disagreements,
        bad_witnesses,
    })
}
