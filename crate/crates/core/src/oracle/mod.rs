//! Exact solvers for small instances, written independently of the
//! extractor so they can serve as ground truth.

mod cycles;
mod mis;
mod subdivision;

pub use cycles::induced_cycle_in_range;
pub use mis::{exact_max_stable, DEFAULT_NODE_BUDGET};
pub use subdivision::{exhaustive_subdivision_search, DEFAULT_SIZE_LIMIT};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices; this oracle handles at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("search budget of {0} nodes exhausted")]
    Budget(u64),
    #[error("t = {0} unsupported (only 3 and 4)")]
    UnsupportedT(usize),
    #[error("empty or inverted length range [{lo}, {hi}]")]
    BadRange { lo: usize, hi: usize },
}
