//! Functors into finite sets: exact limits and colimits, and the canonical
//! comparison map `colim_J lim_I F → lim_I colim_J F` for a bifunctor.

mod comparison;
mod functor;
mod limits;

pub use comparison::{comparison_report, ComparisonReport};
pub use functor::{BiFunctor, SetFunctor};
pub use limits::{colimit, limit, Colimit};
