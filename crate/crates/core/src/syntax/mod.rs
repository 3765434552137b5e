//! Proof terms of the two calculi and their finite-function semantics.
//!
//! Disjunctive terms ([`DisjTerm`]) live in the free category with strict
//! finite coproducts on a single letter; their meaning is computed by
//! [`eval_f`]. Conjunctive terms ([`ConjTerm`]) live in the free category with
//! strict finite products on `p1, p2, …`; [`eval_h`] sends `p_n` to the `n`-th
//! prime. Both semantics are faithful, so equality of terms is decided by
//! comparing tables ([`eq_disj`], [`eq_conj`]).
//!
//! [`eval_h_via_gen`] reaches the same function as [`eval_h`] along a
//! different road: collapse every letter to 1 ([`eval_g`]), read the result as
//! a split equivalence ([`jg`]), and represent that with prime radices.

mod conj;
mod disj;
mod parse;

pub use conj::{
    conj_to_disj, eq_conj, eval_g, eval_h, eval_h_via_gen, infer_type_conj, jg, normalize_obj,
    obj_code, ConjObj, ConjTerm,
};
pub use disj::{eq_disj, eval_f, infer_type_disj, synth_disj, DisjTerm};
pub use parse::{parse_conj, parse_disj};
