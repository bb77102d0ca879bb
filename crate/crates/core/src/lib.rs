//! Decision procedures for linear homogeneous equations over coherence
//! classes of integer strings.
//!
//! Two strings are coherent when they agree after deleting zeros and
//! collapsing runs of equal adjacent entries. An equation
//! `c_1 x_1 + ... + c_m x_m = 0` has a solution in the class of a reduced
//! string `sigma` when there are `m` equal-length strings, each coherent with
//! `sigma`, whose weighted sum vanishes entrywise. Stacked as columns they
//! form a [`WitnessMatrix`].
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! * [`strings`]: canonical forms and the per-column expansion automaton.
//! * [`equations`]: equations, their text form and Rado's subset-sum test.
//! * [`solver`]: complete search for (injective) witnesses, plus a brute
//!   force oracle for differential testing.
//! * [`characterizations`]: closed-form criteria for `sigma = (1)` and for
//!   three-variable equations.
//! * [`mtsystems`]: sparse sequences, Milliken-Taylor sums and witness
//!   instantiation into concrete integer solutions.
//! * [`coloring`]: finite monochromatic-solution search.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod characterizations;
pub mod coloring;
pub mod equations;
mod error;
pub mod mtsystems;
pub mod solver;
pub mod strings;

pub use equations::LinearEquation;
pub use error::Error;
pub use solver::{SolveLimits, SolveStatus, SolverVerdict, WitnessMatrix};
pub use strings::{ReducedString, ZString};

pub type Result<T, E = Error> = core::result::Result<T, E>;
