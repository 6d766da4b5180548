//! Irregularity measures of molecular structure graphs.
//!
//! The crate builds the parametrized graph families that show up in nanoscience
//! (C4C8 and polyhex nanotubes, dendrimer trees, the circumcoronene benzenoid
//! series) plus Mycielski constructions of cycles and paths, and computes four
//! degree-based irregularity measures for them:
//!
//! * the Albertson irregularity `irr` (sum of edge imbalances),
//! * the total irregularity `irr_t` (half the sum of pairwise degree gaps),
//! * the degree variance `Var` (kept as an exact rational),
//! * the Collatz-Sinogowitz index `CS = λ₁ − 2m/n`, with λ₁ obtained from a
//!   shifted power iteration on the adjacency operator.
//!
//! Every family also has closed-form expressions for `irr`, `irr_t`, `Var` and
//! the mean degree ([`formulas`]); [`verify`] checks those against the
//! graph-computed values exactly and runs the `Var − CS` gap sweeps.
//!
//! The crate is `no_std` + `alloc`; file formats and the CLI live in the
//! companion `molirr-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod formulas;
pub mod generators;
pub mod graph;
pub mod indices;
pub mod spectral;
pub mod verify;

/// Exact rational used for degree variance and mean degree.
///
/// `i128` is ample for molecule-scale graphs: the variance numerator is
/// bounded by `n·Σd²`, far below overflow even at n ~ 10⁶.
pub type Rational = num_rational::Ratio<i128>;

/// Float rendering of a [`Rational`] (reports and CSV only; every
/// equivalence check compares rationals exactly).
pub fn rational_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub use generators::{Family, FamilySpec};
pub use graph::{DegreeSequence, Graph};
