//! Finite-function semantics for proof terms of conjunctive and disjunctive
//! logic.
//!
//! Disjunctive deductions with one letter are interpreted by sums in the
//! category of finite ordinals ([`finfun`]), conjunctive deductions with
//! letters `p1, p2, …` by products, each letter going to its prime. Both
//! interpretations are faithful, so two terms are equal exactly when their
//! finite functions are, and every conjunctive deduction can be compiled into a
//! disjunctive one denoting the same function ([`syntax::conj_to_disj`]).
//!
//! The second, independent route from conjunctive terms to functions passes
//! through split equivalences ([`gen`]) and their representation by
//! relations between radix products ([`brauer`]).

pub mod brauer;
pub mod cli;
pub mod error;
pub mod finfun;
pub mod gen;
pub mod partition;
pub mod radix;
pub mod render;
pub mod syntax;

pub use error::{Error, Result};
pub use finfun::FinFun;
pub use gen::SplitEq;
pub use radix::Radices;
