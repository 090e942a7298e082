//! Constructions that carry Max-Cut and minimum bisection over to switching
//! to few edges, and the padding that pushes density below any constant.

mod gadget;
mod large_deg;
mod legalize;
mod padding;
mod pipeline;

use std::fmt;

use serde::Serialize;

pub use gadget::GadgetInstance;
pub use large_deg::{bisection_duality_check, cubic_complement_instance, validate_large_deg, DualityCheck, LargeDegInstance};
pub use legalize::{HalfUnits, LegalizeResult, LegalizeStep};
pub use padding::{density_pad, PaddedInstance};
pub use pipeline::{full_pipeline, PipelineOutput};

/// Why an input was rejected or a guarantee does not apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "code", rename_all = "kebab-case")]
pub enum Reason {
    EmptyGraph,
    OddOrder { n: usize },
    MinDegreeTooSmall { min_degree: usize, required: usize },
    ComplementHasTriangle { triangle: (usize, usize, usize) },
    ComplementDisconnected,
    NotCubic { vertex: usize, degree: usize },
    Disconnected,
    HasTriangle { triangle: (usize, usize, usize) },
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::EmptyGraph => write!(f, "graph has no vertices"),
            Reason::OddOrder { n } => write!(f, "odd number of vertices ({n})"),
            Reason::MinDegreeTooSmall { min_degree, required } => {
                write!(f, "minimum degree {min_degree} below {required}")
            }
            Reason::ComplementHasTriangle { triangle: (a, b, c) } => {
                write!(f, "complement contains triangle {a}-{b}-{c}")
            }
            Reason::ComplementDisconnected => write!(f, "complement is disconnected"),
            Reason::NotCubic { vertex, degree } => write!(f, "vertex {vertex} has degree {degree}, not 3"),
            Reason::Disconnected => write!(f, "graph is disconnected"),
            Reason::HasTriangle { triangle: (a, b, c) } => write!(f, "contains triangle {a}-{b}-{c}"),
        }
    }
}
