//! Exact computation of limits and colimits of finite set-valued functors,
//! and decision procedures for when limits over one finite shape commute
//! with colimits over another in the category of sets.
//!
//! The group case is decided exactly, by two independent routes. One
//! compares the quotients of the limit group with the subquotients of the
//! colimit group; the other scans the coset actions of every subgroup of
//! the product. When commutation fails, [`commute`] also builds an explicit
//! bifunctor whose comparison map is not bijective.

pub mod commute;
pub mod config;
pub mod error;
pub mod fincat;
pub mod formats;
pub mod groups;
pub mod setfun;
mod uf;

pub use config::{Caps, SearchBudget};
pub use error::{Error, Result};
pub use fincat::{FinCategory, FiniteDiagram, PropertyFlags, RawCategory};
pub use groups::{FinGroup, GoursatTriple, Subgroup};
pub use setfun::{BiFunctor, ComparisonReport, SetFunctor};
pub use commute::{CommutationReport, Method, Verdict};
pub mod verify;
