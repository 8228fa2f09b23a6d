use thiserror::Error;

use crate::budget::SearchBudget;
use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {found} does not fit carrier {expected}")]
    ShapeMismatch { expected: String, found: String },

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("invalid equation: {0}")]
    InvalidEquation(String),

    #[error("carrier is not directed for the given pair: {0}")]
    NotDirected(String),

    #[error("no central common lower bound exists: {0}")]
    NotComDirected(String),

    #[error("operation unsupported on this carrier: {0}")]
    Unsupported(String),

    #[error("preconditions not met: {0}")]
    NotApplicable(String),

    #[error("no witness found: {0}")]
    NotFound(String),

    #[error("nothing found within budget {budget:?} ({examined} candidates examined)")]
    NotFoundWithinBudget { budget: SearchBudget, examined: usize },

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("sub-solver failed: {0}")]
    SolverFailed(String),

    #[error("no implemented construction applies to {0}")]
    NoRuleApplies(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("a dense factor is required: {0}")]
    DensityRequired(String),

    #[error("an abelian second factor is required: {0}")]
    AbelianRequired(String),

    #[error("no NCDP witness available: {0}")]
    NcdpWitnessUnavailable(String),

    #[error("no wRDP witnesses available: {0}")]
    WrdpWitnessUnavailable(String),

    #[error("unknown case {0:?}")]
    UnknownCase(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    /// Whether the failure means "no rule / nothing found" rather than a
    /// broken construction step.
    pub fn is_not_found(&self) -> bool {
        matches!(
            self,
            Error::NoRuleApplies(_)
                | Error::NotFound(_)
                | Error::NotFoundWithinBudget { .. }
                | Error::NotDirected(_)
                | Error::NotComDirected(_)
                | Error::NotApplicable(_)
                | Error::NcdpWitnessUnavailable(_)
                | Error::WrdpWitnessUnavailable(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
