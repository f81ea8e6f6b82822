//! Exact computational Lie theory for Borel-de Siebenthal root orders.
//!
//! Everything here is exact: weights are vectors of arbitrary-precision
//! rationals in the simple-root basis, Weyl elements are reflection words,
//! and all decompositions are integer multisets of highest weights.
//!
//! The crate is organized around six subsystems:
//!
//! - [`rootsys`] — finite root systems, Cartan data, Weyl-group words;
//! - [`bds`] — Borel-de Siebenthal gradings, Hermitian pairs, the
//!   classification tables, derived constants;
//! - [`strongorth`] — strongly orthogonal root cascades;
//! - [`decomp`] — character-theoretic oracle: Weyl dimensions, Freudenthal
//!   multiplicities, tensor and Levi branching, symmetric powers;
//! - [`lspath`] — the Littelmann path model with root operators and
//!   Levi branching;
//! - [`series`] — truncated type enumeration for a Borel-de Siebenthal
//!   discrete series and its associated holomorphic discrete series,
//!   common-type reports and admissibility evidence.
//!
//! [`verify`] bundles the heavyweight cross-checks behind named suites and
//! [`report`] holds the JSON-facing report types used by the CLI.

pub mod bds;
pub mod cases;
pub mod decomp;
pub mod lspath;
pub mod ratio;
pub mod report;
pub mod rootsys;
pub mod series;
pub mod strongorth;
pub mod verify;

pub use ratio::Q;
pub use rootsys::{RootSystem, TypeLabel, Weight, WeylWord};
