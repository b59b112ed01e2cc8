//! Finite-model workbench for implicative involutive BE algebras and
//! implicative-orthomodular lattices.
//!
//! The crate represents an algebra as a dense implication table over indices
//! `0..n`, derives the term operations and order relations from it, and then
//! checks algebraic laws, enumerates deductive systems, and analyses the
//! state space with exact rational linear programming.
//!
//! All arithmetic on state values is exact: states are vectors of
//! [`Rat`] (arbitrary-precision rationals), and the simplex solver in
//! [`lp`] never rounds.

pub mod algebra;
pub mod ds;
pub mod format;
pub mod lp;
pub mod search;
pub mod states;
pub mod suite;
pub mod term_laws;

/// Exact rational scalar used throughout state analysis.
pub type Rat = num::BigRational;

/// Smaller exact scalar, handy for tests and throwaway programs.
pub type Rat64 = num::rational::Ratio<i64>;

pub use algebra::{DerivedTables, FiniteAlgebra, RawAlgebra};
pub use term_laws::LawReport;

/// Convenience constructor for `Rat` from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}
