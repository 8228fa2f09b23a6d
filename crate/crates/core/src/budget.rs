use serde::{Deserialize, Serialize};

/// Bounds shared by every enumerative procedure.
///
/// Identical budgets and inputs always give identical results; the seed only
/// breaks ties between candidates of the same canonical size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_abs_coord: u64,
    pub max_word_len: usize,
    pub max_candidates: usize,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_abs_coord: 4, max_word_len: 4, max_candidates: 4000, seed: 0 }
    }
}

impl SearchBudget {
    /// Small budget used when a report is attached to every verified table.
    pub fn quick() -> Self {
        SearchBudget { max_abs_coord: 2, max_word_len: 2, max_candidates: 96, seed: 0 }
    }

    pub fn with_word_len(mut self, len: usize) -> Self {
        self.max_word_len = len;
        self
    }

    pub fn with_candidates(mut self, n: usize) -> Self {
        self.max_candidates = n;
        self
    }

    pub fn with_coord(mut self, c: u64) -> Self {
        self.max_abs_coord = c;
        self
    }
}

/// Result of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome")]
pub enum SearchOutcome<T> {
    Found { value: T, examined: usize },
    /// The whole candidate space was listed and nothing qualified.
    NotFoundExhaustive { examined: usize },
    /// Nothing qualified among the candidates the budget allowed; this is
    /// not a proof of nonexistence.
    NotFoundWithinBudget { budget: SearchBudget, examined: usize },
}

impl<T> SearchOutcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<T> {
        match self {
            SearchOutcome::Found { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn examined(&self) -> usize {
        match self {
            SearchOutcome::Found { examined, .. }
            | SearchOutcome::NotFoundExhaustive { examined }
            | SearchOutcome::NotFoundWithinBudget { examined, .. } => *examined,
        }
    }
}
