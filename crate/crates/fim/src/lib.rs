//! Computational tools for free inverse monoids.
//!
//! The crate has two layers. The general layer ([`words`], [`munn`]) solves
//! the word problem in any finitely generated free inverse monoid through
//! Munn trees. The monogenic layer specializes to one generator, where Munn
//! trees are integer intervals: [`monogenic`] gives interval arithmetic and
//! normal forms, [`cayley`] builds balls of the right Cayley digraph with a
//! spanning tree and a three-way edge classification, and [`homology`] turns
//! the non-tree edges into a first-homology basis, computes the left action
//! of the monoid on it, and measures the action's weight filtration.
//!
//! Every structural claim those modules rely on is checked by an exhaustive
//! bounded verifier (`verify_*` functions returning [`report::VerificationReport`]),
//! all reachable through the `fim` command-line binary.

pub mod cayley;
#[cfg(feature = "cli")]
pub mod cli;
pub mod error;
pub mod homology;
pub mod monogenic;
pub mod munn;
pub mod render;
pub mod report;
pub mod words;

pub use error::Error;
