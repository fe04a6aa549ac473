//! Library half of the `tsg` command-line tool.
//!
//! The binary stays thin; everything the integration tests want to drive
//! directly lives here: the claim suite behind `tsg verify-paper`, and the
//! rendering helpers shared by the table and JSON report writers.

#![forbid(unsafe_code)]

pub mod claims;
pub mod render;

pub use claims::{run_claims, ClaimResult, ClaimStatus, SuiteInput, SCOPES};
