//! Deciding whether limits over a finite group commute with colimits over
//! another, and building explicit counterexample bifunctors.

mod decide;
mod search;
mod witness;

pub use decide::{
    criterion_subgroup, decide_commute, CommutationReport, CriterionEvidence, Method, OrbitEvidence, Verdict,
};
pub use search::{bounded_search, SearchHit, SearchOutcome};
pub use witness::{cone_witness, foltz_witness, group_witness, GroupWitness, GroupWitnessSummary, Witness};
