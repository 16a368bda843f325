//! Lower bounds on `γ'_s` and the bounds on `g(k)`, the least `γ'_s` over
//! graphs of order `k`.
//!
//! All values are exact rationals.

mod cycles;
mod elementary;
mod order;

use thiserror::Error;

use crate::labeling::LabelingError;

pub use cycles::{cycle_sum_check, sample_cycles};
pub use elementary::{
    elementary_lower_bound, max_elementary_subgraph, ElementaryLimits, ElementarySubgraph,
    DEFAULT_ELEMENTARY_NODES,
};
pub use order::{g_bounds, order_lower_bound, BoundsReport};

/// Exact rational with `i64` numerator and denominator.
pub type Rational = num_rational::Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("invalid elementary subgraph: {0}")]
    InvalidSubgraph(String),
    #[error("elementary subgraph search exhausted its budget (best covers {} vertices)", .0.covered)]
    BudgetExhausted(Box<ElementarySubgraph>),
    #[error("the upper bound on g(k) needs k >= 12, got k = {0}")]
    UpperBoundDomain(usize),
    #[error("labeling is not an SEDF")]
    NotAnSedf,
    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("vertex sums along a cycle add up to {0} < 0")]
    NegativeCycleSum(i64),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}
