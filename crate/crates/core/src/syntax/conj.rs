use std::fmt;

use crate::brauer::{appropriate, f_ab_fun, nth_prime};
use crate::error::{Error, Result};
use crate::finfun::{self, FinFun};
use crate::gen::{j_of, SplitEq};
use crate::radix::Radices;

use super::disj::{synth_disj, DisjTerm};

/// An object of the free category with strict finite products on the
/// letters `p1, p2, …`: a sequence of letter indices, product being
/// concatenation and the empty sequence the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjObj(Vec<usize>);

impl ConjObj {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::OutOfRange("letter indices start at 1".into()));
        }
        Ok(ConjObj(indices))
    }

    pub fn unit() -> Self {
        ConjObj(Vec::new())
    }

    pub fn letter(index: usize) -> Result<Self> {
        Self::new(vec![index])
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &ConjObj) -> ConjObj {
        ConjObj(self.0.iter().chain(&other.0).copied().collect())
    }

    /// The prime of each letter, as radices.
    pub fn prime_radices(&self) -> Radices {
        Radices::new(self.0.iter().map(|&i| nth_prime(i)).collect())
            .expect("primes are at least 2")
    }
}

impl fmt::Display for ConjObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "p{i}")?;
        }
        Ok(())
    }
}

/// Sorts the letters; sorted objects form a skeleton.
pub fn normalize_obj(a: &ConjObj) -> ConjObj {
    let mut v = a.0.clone();
    v.sort_unstable();
    ConjObj(v)
}

/// Product of the primes of the letters; 1 for the unit.
pub fn obj_code(a: &ConjObj) -> usize {
    a.0.iter().map(|&i| nth_prime(i)).product()
}

/// An arrow term of the free category with strict finite products.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConjTerm {
    Id(ConjObj),
    /// The unique arrow `A → I`.
    Bang(ConjObj),
    /// `A·B → A`
    Pr1(ConjObj, ConjObj),
    /// `A·B → B`
    Pr2(ConjObj, ConjObj),
    /// Diagonal `A → A·A`.
    Dup(ConjObj),
    /// First the left term, then the right one.
    Seq(Box<ConjTerm>, Box<ConjTerm>),
    Prod(Box<ConjTerm>, Box<ConjTerm>),
    Pair(Box<ConjTerm>, Box<ConjTerm>),
}

impl ConjTerm {
    pub fn seq(first: ConjTerm, then: ConjTerm) -> Self {
        ConjTerm::Seq(Box::new(first), Box::new(then))
    }

    pub fn prod(left: ConjTerm, right: ConjTerm) -> Self {
        ConjTerm::Prod(Box::new(left), Box::new(right))
    }

    pub fn pair(left: ConjTerm, right: ConjTerm) -> Self {
        ConjTerm::Pair(Box::new(left), Box::new(right))
    }

    pub fn depth(&self) -> usize {
        match self {
            ConjTerm::Seq(a, b) | ConjTerm::Prod(a, b) | ConjTerm::Pair(a, b) => {
                1 + a.depth().max(b.depth())
            }
            _ => 0,
        }
    }
}

impl fmt::Display for ConjTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjTerm::Id(a) => write!(f, "id {a}"),
            ConjTerm::Bang(a) => write!(f, "bang {a}"),
            ConjTerm::Pr1(a, b) => write!(f, "pr1 {a} | {b}"),
            ConjTerm::Pr2(a, b) => write!(f, "pr2 {a} | {b}"),
            ConjTerm::Dup(a) => write!(f, "dup {a}"),
            ConjTerm::Seq(s, t) => write!(f, "({s} ; {t})"),
            ConjTerm::Prod(s, t) => write!(f, "({s} * {t})"),
            ConjTerm::Pair(s, t) => write!(f, "<{s}, {t}>"),
        }
    }
}

/// Source and target objects of a term.
pub fn infer_type_conj(t: &ConjTerm) -> Result<(ConjObj, ConjObj)> {
    use ConjTerm::*;
    Ok(match t {
        Id(a) => (a.clone(), a.clone()),
        Bang(a) => (a.clone(), ConjObj::unit()),
        Pr1(a, b) => (a.concat(b), a.clone()),
        Pr2(a, b) => (a.concat(b), b.clone()),
        Dup(a) => (a.clone(), a.concat(a)),
        Seq(x, y) => {
            let (s1, t1) = infer_type_conj(x)?;
            let (s2, t2) = infer_type_conj(y)?;
            if t1 != s2 {
                return Err(Error::TypeError {
                    term: t.to_string(),
                    message: format!("first part ends at {t1} but second starts at {s2}"),
                });
            }
            (s1, t2)
        }
        Prod(x, y) => {
            let (s1, t1) = infer_type_conj(x)?;
            let (s2, t2) = infer_type_conj(y)?;
            (s1.concat(&s2), t1.concat(&t2))
        }
        Pair(x, y) => {
            let (s1, t1) = infer_type_conj(x)?;
            let (s2, t2) = infer_type_conj(y)?;
            if s1 != s2 {
                return Err(Error::TypeError {
                    term: t.to_string(),
                    message: format!("components have different sources {s1} and {s2}"),
                });
            }
            (s1, t1.concat(&t2))
        }
    })
}

/// The finite function of a term, each letter `p_n` read as the `n`-th prime.
pub fn eval_h(t: &ConjTerm) -> Result<FinFun> {
    infer_type_conj(t)?;
    Ok(eval_h_checked(t))
}

fn eval_h_checked(t: &ConjTerm) -> FinFun {
    use ConjTerm::*;
    match t {
        Id(a) => finfun::identity(obj_code(a)),
        Bang(a) => finfun::terminal(obj_code(a)),
        Pr1(a, b) => finfun::proj1(obj_code(a), obj_code(b)),
        Pr2(a, b) => finfun::proj2(obj_code(a), obj_code(b)),
        Dup(a) => finfun::diag(obj_code(a)),
        Seq(x, y) => finfun::compose(&eval_h_checked(y), &eval_h_checked(x)).expect("well typed"),
        Prod(x, y) => finfun::prod(&eval_h_checked(x), &eval_h_checked(y)),
        Pair(x, y) => finfun::pair(&eval_h_checked(x), &eval_h_checked(y)).expect("well typed"),
    }
}

/// The function underlying the image of a term in the opposite category, each
/// letter read as 1. It runs from the length of the target to the length of
/// the source.
pub fn eval_g(t: &ConjTerm) -> Result<FinFun> {
    infer_type_conj(t)?;
    Ok(eval_g_checked(t))
}

fn eval_g_checked(t: &ConjTerm) -> FinFun {
    use ConjTerm::*;
    match t {
        Id(a) => finfun::identity(a.len()),
        Bang(a) => finfun::kappa(a.len()),
        Pr1(a, b) => finfun::inj1(a.len(), b.len()),
        Pr2(a, b) => finfun::inj2(a.len(), b.len()),
        Dup(a) => finfun::codiag(a.len()),
        Seq(x, y) => finfun::compose(&eval_g_checked(x), &eval_g_checked(y)).expect("well typed"),
        Prod(x, y) => finfun::sum(&eval_g_checked(x), &eval_g_checked(y)),
        Pair(x, y) => {
            finfun::bracket(&eval_g_checked(x), &eval_g_checked(y)).expect("well typed")
        }
    }
}

/// The split equivalence of a term: the letters it wires together.
pub fn jg(t: &ConjTerm) -> Result<SplitEq> {
    Ok(j_of(&eval_g(t)?))
}

/// The function of a term computed through its split equivalence, with the
/// primes of the source and target letters as radices.
pub fn eval_h_via_gen(t: &ConjTerm) -> Result<FinFun> {
    let (src, tgt) = infer_type_conj(t)?;
    let r = j_of(&eval_g_checked(t));
    let (a, b) = (src.prime_radices(), tgt.prime_radices());
    if !appropriate(&a, &b, &r)? {
        return Err(Error::InternalInvariantViolation(format!(
            "prime radices are not appropriate for the split equivalence of `{t}`"
        )));
    }
    f_ab_fun(&a, &b, &r)
}

/// A disjunctive term denoting the same function as `t`.
pub fn conj_to_disj(t: &ConjTerm) -> Result<DisjTerm> {
    Ok(synth_disj(&eval_h(t)?))
}

/// Semantic equality of two terms of the same type.
pub fn eq_conj(t1: &ConjTerm, t2: &ConjTerm) -> Result<bool> {
    let ty1 = infer_type_conj(t1)?;
    let ty2 = infer_type_conj(t2)?;
    if ty1 != ty2 {
        return Err(Error::TypeMismatch(format!(
            "`{t1}` has type {} -> {} but `{t2}` has type {} -> {}",
            ty1.0, ty1.1, ty2.0, ty2.1
        )));
    }
    Ok(eval_h_checked(t1) == eval_h_checked(t2))
}
