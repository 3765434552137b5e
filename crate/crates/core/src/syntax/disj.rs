use std::fmt;

use crate::error::{Error, Result};
use crate::finfun::{self, FinFun};

/// An arrow term of the free category with strict finite coproducts on one
/// letter. Objects are ordinals: `n` stands for the `n`-fold disjunction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DisjTerm {
    Id(usize),
    /// The empty map `0 → n`.
    Kappa(usize),
    /// `n → n + m`
    In1(usize, usize),
    /// `m → n + m`
    In2(usize, usize),
    /// Codiagonal `n + n → n`.
    Fold(usize),
    /// First the left term, then the right one.
    Seq(Box<DisjTerm>, Box<DisjTerm>),
    Sum(Box<DisjTerm>, Box<DisjTerm>),
    Case(Box<DisjTerm>, Box<DisjTerm>),
}

impl DisjTerm {
    pub fn seq(first: DisjTerm, then: DisjTerm) -> Self {
        DisjTerm::Seq(Box::new(first), Box::new(then))
    }

    pub fn sum(left: DisjTerm, right: DisjTerm) -> Self {
        DisjTerm::Sum(Box::new(left), Box::new(right))
    }

    pub fn case(left: DisjTerm, right: DisjTerm) -> Self {
        DisjTerm::Case(Box::new(left), Box::new(right))
    }

    pub fn depth(&self) -> usize {
        match self {
            DisjTerm::Seq(a, b) | DisjTerm::Sum(a, b) | DisjTerm::Case(a, b) => {
                1 + a.depth().max(b.depth())
            }
            _ => 0,
        }
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            DisjTerm::Seq(a, b) | DisjTerm::Sum(a, b) | DisjTerm::Case(a, b) => {
                1 + a.size() + b.size()
            }
            _ => 1,
        }
    }
}

impl fmt::Display for DisjTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DisjTerm::Id(n) => write!(f, "id {n}"),
            DisjTerm::Kappa(n) => write!(f, "kappa {n}"),
            DisjTerm::In1(n, m) => write!(f, "in1 {n} {m}"),
            DisjTerm::In2(n, m) => write!(f, "in2 {n} {m}"),
            DisjTerm::Fold(n) => write!(f, "fold {n}"),
            DisjTerm::Seq(a, b) => write!(f, "({a} ; {b})"),
            DisjTerm::Sum(a, b) => write!(f, "({a} + {b})"),
            DisjTerm::Case(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

/// Source and target ordinals of a term.
pub fn infer_type_disj(t: &DisjTerm) -> Result<(usize, usize)> {
    use DisjTerm::*;
    Ok(match t {
        Id(n) => (*n, *n),
        Kappa(n) => (0, *n),
        In1(n, m) => (*n, n + m),
        In2(n, m) => (*m, n + m),
        Fold(n) => (2 * n, *n),
        Seq(a, b) => {
            let (s1, t1) = infer_type_disj(a)?;
            let (s2, t2) = infer_type_disj(b)?;
            if t1 != s2 {
                return Err(Error::TypeError {
                    term: t.to_string(),
                    message: format!("first part ends at {t1} but second starts at {s2}"),
                });
            }
            (s1, t2)
        }
        Sum(a, b) => {
            let (s1, t1) = infer_type_disj(a)?;
            let (s2, t2) = infer_type_disj(b)?;
            (s1 + s2, t1 + t2)
        }
        Case(a, b) => {
            let (s1, t1) = infer_type_disj(a)?;
            let (s2, t2) = infer_type_disj(b)?;
            if t1 != t2 {
                return Err(Error::TypeError {
                    term: t.to_string(),
                    message: format!("branches have different targets {t1} and {t2}"),
                });
            }
            (s1 + s2, t1)
        }
    })
}

/// The finite function denoted by a disjunctive term.
pub fn eval_f(t: &DisjTerm) -> Result<FinFun> {
    infer_type_disj(t)?;
    Ok(eval_checked(t))
}

fn eval_checked(t: &DisjTerm) -> FinFun {
    use DisjTerm::*;
    match t {
        Id(n) => finfun::identity(*n),
        Kappa(n) => finfun::kappa(*n),
        In1(n, m) => finfun::inj1(*n, *m),
        In2(n, m) => finfun::inj2(*n, *m),
        Fold(n) => finfun::codiag(*n),
        Seq(a, b) => finfun::compose(&eval_checked(b), &eval_checked(a)).expect("well typed"),
        Sum(a, b) => finfun::sum(&eval_checked(a), &eval_checked(b)),
        Case(a, b) => finfun::bracket(&eval_checked(a), &eval_checked(b)).expect("well typed"),
    }
}

/// A term denoting `f`, built by induction on the source: a single point is
/// an identity, an injection, or a composite of two injections; a larger
/// source splits off its last point under a case.
pub fn synth_disj(f: &FinFun) -> DisjTerm {
    let (n, m) = (f.src(), f.tgt());
    match n {
        0 => DisjTerm::Kappa(m),
        1 => point(f.apply(0), m),
        _ => {
            let init = FinFun::new(n - 1, m, f.table()[..n - 1].to_vec())
                .expect("restriction of a valid function");
            DisjTerm::case(synth_disj(&init), point(f.apply(n - 1), m))
        }
    }
}

// The map 1 → m picking `value`.
fn point(value: usize, m: usize) -> DisjTerm {
    if m == 1 {
        DisjTerm::Id(1)
    } else if value == 0 {
        DisjTerm::In1(1, m - 1)
    } else if value == m - 1 {
        DisjTerm::In2(m - 1, 1)
    } else {
        DisjTerm::seq(DisjTerm::In1(1, m - value - 1), DisjTerm::In2(value, m - value))
    }
}

/// Semantic equality of two terms of the same type.
pub fn eq_disj(t1: &DisjTerm, t2: &DisjTerm) -> Result<bool> {
    let ty1 = infer_type_disj(t1)?;
    let ty2 = infer_type_disj(t2)?;
    if ty1 != ty2 {
        return Err(Error::TypeMismatch(format!(
            "`{t1}` has type {} -> {} but `{t2}` has type {} -> {}",
            ty1.0, ty1.1, ty2.0, ty2.1
        )));
    }
    Ok(eval_checked(t1) == eval_checked(t2))
}
