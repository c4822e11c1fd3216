//! Exact computation of total domination numbers and total bondage numbers
//! of grid graphs.
//!
//! The library has four layers:
//!
//! * [`grid`] — grid graphs `G(n, m)` (the Cartesian product of two paths)
//!   with edge-removal and vertex-deletion masks, plus the rectangle/square
//!   symmetry group.
//! * [`solver`] — exact solvers: brute-force oracles for `gamma` and
//!   `gamma_t`, a column-profile dynamic program for `gamma_t`, and
//!   enumeration of all minimum total dominating sets.
//! * [`bondage`] — exhaustive search for the total bondage number by
//!   k-increasing enumeration of removable edge subsets with symmetry
//!   reduction.
//! * [`formulas`] — closed-form values, explicit dominating-set
//!   constructions, and known witness edge sets for strips of height at
//!   most four, used to cross-validate the solvers.

pub mod bondage;
pub mod formulas;
pub mod grid;
pub mod set;
pub mod solver;

mod error;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
