//! Exhaustive checks of the laws relating Mealy and Moore machines.
//!
//! Everything here works by brute force over small instances: hom-sets are
//! enumerated completely, adjunctions are checked as explicit bijections
//! between hom-sets, and the absence of a Moore identity is checked by
//! trying every small candidate. All enumerations run in a fixed order, so
//! reports are deterministic.

mod adjunction;
mod homs;
mod identity;
pub mod sweep;

pub use adjunction::{
    check_adjunction_d1, check_adjunction_d1_with, check_counit, check_hom_correspondence,
    check_hom_correspondence_with, check_moorify_functorial, BijectionReport, Counterexample,
    FailureReason, Side, Transposition,
};
pub use homs::{enumerate_homs, HomSet};
pub use identity::{search_moore_identity, CandidateOutcome, IdentitySearch};
