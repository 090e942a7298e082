use thiserror::Error;

use crate::reductions::Reason;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {index} is outside 0..{n}")]
    InvalidSet { index: usize, n: usize },

    #[error("vertex set over {set_n} vertices used with a graph on {graph_n} vertices")]
    UniverseMismatch { set_n: usize, graph_n: usize },

    #[error("{n} vertices exceeds the enumeration guard of {guard}")]
    SizeLimit { n: usize, guard: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("density is undefined for {n} vertices")]
    UndefinedDensity { n: usize },

    #[error("bisection requires an even number of vertices, got {n}")]
    OddOrder { n: usize },

    #[error("density bound must lie strictly between 0 and 1, got {0}")]
    DensityOutOfRange(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("precondition failed: {}", fmt_reasons(.0))]
    Precondition(Vec<Reason>),

    #[error("switch set is not legal: o-vertex {vertex} has {inside} of 4 vertices inside")]
    IllegalSwitchSet { vertex: usize, inside: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn fmt_reasons(reasons: &[Reason]) -> String {
    reasons
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
