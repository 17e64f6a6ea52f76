//! The literature's definition of the non-deterministic buffer, compared
//! with the one in [`crate::buffer`].
//!
//! Conforming to the buffer implies the literature's causality condition
//! (`lit-b`), but not conversely; and the buffer does not imply the
//! literature's response condition (`lit-c`). [`counterexample`] builds the
//! two witnessing pairs and [`fuzz_claims`] checks the positive claims on
//! random data.

pub mod conditions;
pub mod fixtures;
pub mod fuzz;

pub use conditions::{lit_verify, lit_verify_all, LitCondition};
pub use fixtures::{counterexample, Check, Expectation, Fixture, Outcome};
pub use fuzz::{fuzz_claims, Claim, ClaimTally, FuzzConfig, FuzzReport, Refutation};
