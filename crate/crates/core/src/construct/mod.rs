//! Explicit constructions and a bounded exhaustive search.

pub mod five_diag;
pub mod project;
pub mod search;
pub mod tight;

pub use five_diag::build_5diag;
pub use project::{compose, project, BlockPattern};
pub use search::{exhaustive_search, exhaustive_search_with};
pub use tight::{build_2xn_even, build_2xn_odd, subset_summing_to};
