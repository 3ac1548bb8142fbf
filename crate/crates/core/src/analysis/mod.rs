//! Structural decision procedures for line consistency.
//!
//! Four independent routes decide the same property: three local
//! degree/sign/isthmus characterizations ([`check_condition_i`],
//! [`check_condition_ii`], [`check_condition_iii`]) and the component-wise
//! structural classification ([`classify_structure`]). For simple graphs the
//! older criterion in [`check_simple_criterion`] is a fifth route.
//! [`check_condition_ii`] is the one production callers should use.

mod bridges;
mod conditions;
mod structure;
mod witness;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cycles::CycleError;
use crate::graph::Circle;

pub use bridges::{blocks, find_isthmi, Block};
pub use conditions::{
    check_bridgeless, check_condition_i, check_condition_ii, check_condition_iii, check_simple_criterion,
};
pub use structure::{
    check_structure, classify_structure, CircleFacts, ComponentKind, ComponentReport, ExtraEdge, PathCase, PathFacts,
    StructureReport,
};
pub use witness::find_witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("the criterion requires a simple graph; edges {0:?} and {1:?} are parallel")]
    NotSimple(String, String),
    #[error("the graph is line consistent; there is no witness")]
    ConsistentGraph,
    #[error(transparent)]
    Enumeration(#[from] CycleError),
}

/// Which decision procedure produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Method {
    #[serde(rename = "i")]
    ConditionI,
    #[serde(rename = "ii")]
    ConditionII,
    #[serde(rename = "iii")]
    ConditionIII,
    #[serde(rename = "thm1")]
    SimpleCriterion,
    #[serde(rename = "structure")]
    Structure,
    #[serde(rename = "oracle")]
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ConditionI => "i",
            Method::ConditionII => "ii",
            Method::ConditionIII => "iii",
            Method::SimpleCriterion => "thm1",
            Method::Structure => "structure",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The clause of a criterion that a graph violates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "kebab-case")]
pub enum Clause {
    Unbalanced,
    /// Degree above 3 with a negative edge.
    HighDegreeNotTotallyPositive {
        vertex: String,
    },
    /// Degree 3, not totally positive, and not exactly one positive edge.
    DegreeThreeMixed {
        vertex: String,
    },
    DegreeThreePositiveNotIsthmus {
        vertex: String,
        edge: String,
    },
    NegativeDegreeExceeded {
        vertex: String,
    },
    NegativeEndpointPositiveExcess {
        vertex: String,
    },
    NegativeInteriorPositiveNotIsthmus {
        vertex: String,
        edge: String,
    },
    UnbalancedWithoutPositiveIsthmi,
    NegativeEndpointDegree {
        vertex: String,
    },
    /// Degree 3, not totally positive, and not exactly two negative edges.
    DegreeThreeNegativeCount {
        vertex: String,
    },
    NegativesMissCircle {
        vertex: String,
    },
    IrregularNegativeComponent {
        vertex: String,
    },
    NegativeCircleNotBlock {
        vertex: String,
    },
    NegativeCircleExtraEdge {
        vertex: String,
    },
    PathShape {
        endpoints: [String; 2],
    },
    PathEndpointDegree {
        vertex: String,
    },
    PathInteriorExtraEdge {
        vertex: String,
    },
    PathPlacement {
        endpoints: [String; 2],
    },
    NegativeCircle,
}

impl Clause {
    /// The vertex the clause is about, if any.
    pub fn vertex(&self) -> Option<&str> {
        use Clause::*;
        match self {
            HighDegreeNotTotallyPositive { vertex }
            | DegreeThreeMixed { vertex }
            | DegreeThreePositiveNotIsthmus { vertex, .. }
            | NegativeDegreeExceeded { vertex }
            | NegativeEndpointPositiveExcess { vertex }
            | NegativeInteriorPositiveNotIsthmus { vertex, .. }
            | NegativeEndpointDegree { vertex }
            | DegreeThreeNegativeCount { vertex }
            | NegativesMissCircle { vertex }
            | IrregularNegativeComponent { vertex }
            | NegativeCircleNotBlock { vertex }
            | NegativeCircleExtraEdge { vertex }
            | PathEndpointDegree { vertex }
            | PathInteriorExtraEdge { vertex } => Some(vertex),
            PathShape { endpoints } | PathPlacement { endpoints } => Some(&endpoints[0]),
            Unbalanced | UnbalancedWithoutPositiveIsthmi | NegativeCircle => None,
        }
    }

    pub fn is_unbalance(&self) -> bool {
        matches!(self, Clause::Unbalanced | Clause::UnbalancedWithoutPositiveIsthmi)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Clause::*;
        match self {
            Unbalanced => write!(f, "not balanced"),
            HighDegreeNotTotallyPositive { vertex } => {
                write!(f, "degree>3 not totally positive at {vertex}")
            }
            DegreeThreeMixed { vertex } => {
                write!(f, "degree-3 vertex {vertex} is neither totally positive nor has exactly one positive edge")
            }
            DegreeThreePositiveNotIsthmus { vertex, edge } => {
                write!(f, "degree-3 positive edge not an isthmus: {edge} at {vertex}")
            }
            NegativeDegreeExceeded { vertex } => write!(f, "negative-subgraph degree 3 or more at {vertex}"),
            NegativeEndpointPositiveExcess { vertex } => {
                write!(f, "negative-edge endpoint with two positive edges at {vertex}")
            }
            NegativeInteriorPositiveNotIsthmus { vertex, edge } => {
                write!(f, "positive edge {edge} at negative-subgraph-divalent vertex {vertex} is not an isthmus")
            }
            UnbalancedWithoutPositiveIsthmi => write!(f, "not balanced after deleting positive isthmi"),
            NegativeEndpointDegree { vertex } => {
                write!(f, "negative-edge endpoint {vertex} has degree above 2 after deleting positive isthmi")
            }
            DegreeThreeNegativeCount { vertex } => {
                write!(f, "degree-3 vertex {vertex} is neither totally positive nor has exactly two negative edges")
            }
            NegativesMissCircle { vertex } => {
                write!(f, "a circle through {vertex} misses one of its negative edges")
            }
            IrregularNegativeComponent { vertex } => {
                write!(f, "negative-subgraph component at {vertex} is not a circle, path or vertex")
            }
            NegativeCircleNotBlock { vertex } => write!(f, "negative circle through {vertex} is not a block"),
            NegativeCircleExtraEdge { vertex } => {
                write!(f, "negative-circle vertex {vertex} has an extra edge that is not a lone positive isthmus")
            }
            PathShape { endpoints } => write!(
                f,
                "negative path {}..{} is neither induced nor completed to a circle block by one positive edge",
                endpoints[0], endpoints[1]
            ),
            PathEndpointDegree { vertex } => write!(f, "negative-path endpoint {vertex} has degree above 2"),
            PathInteriorExtraEdge { vertex } => {
                write!(f, "interior negative-path vertex {vertex} has an extra edge that is not a lone positive isthmus")
            }
            PathPlacement { endpoints } => write!(
                f,
                "negative path {}..{} is neither inside a nontrivial block nor an isthmus path away from nontrivial blocks",
                endpoints[0], endpoints[1]
            ),
            NegativeCircle => write!(f, "negative circle in the line graph"),
        }
    }
}

/// A line-consistency decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub method: Method,
    pub line_consistent: bool,
    pub failed_clause: Option<Clause>,
    /// A circle of the line graph with negative vertex-sign product.
    pub witness: Option<Circle>,
}

impl Verdict {
    pub fn consistent(method: Method) -> Verdict {
        Verdict { method, line_consistent: true, failed_clause: None, witness: None }
    }

    pub fn failed(method: Method, clause: Clause) -> Verdict {
        Verdict { method, line_consistent: false, failed_clause: Some(clause), witness: None }
    }
}
