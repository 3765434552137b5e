//! Split equivalences: equivalence relations on the disjoint union of a source
//! and a target ordinal, composed by closing the union of two stacked
//! relations and forgetting the middle layer.
//!
//! For `R: n → m` the source occupies indices `0..n` and the target
//! `n..n+m`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finfun::FinFun;
use crate::partition::{all_partitions, canonicalize, labels_from_classes, UnionFind};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSplitEq")]
pub struct SplitEq {
    src: usize,
    tgt: usize,
    classes: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawSplitEq {
    src: usize,
    tgt: usize,
    classes: Vec<Vec<usize>>,
}

impl TryFrom<RawSplitEq> for SplitEq {
    type Error = Error;

    fn try_from(raw: RawSplitEq) -> Result<Self> {
        SplitEq::new(raw.src, raw.tgt, raw.classes)
    }
}

impl SplitEq {
    /// Validates the partition of `0..src+tgt` and puts it in canonical form.
    pub fn new(src: usize, tgt: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let classes = canonicalize(src + tgt, classes)?;
        Ok(SplitEq { src, tgt, classes })
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn size(&self) -> usize {
        self.src + self.tgt
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Class index of every position.
    pub fn labels(&self) -> Vec<usize> {
        labels_from_classes(&self.classes, self.size())
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.classes
            .iter()
            .any(|c| c.binary_search(&x).is_ok() && c.binary_search(&y).is_ok())
    }

    /// Every split equivalence `src → tgt`; there are Bell(src+tgt).
    pub fn enumerate(src: usize, tgt: usize) -> impl Iterator<Item = SplitEq> {
        all_partitions(src + tgt)
            .into_iter()
            .map(move |classes| SplitEq { src, tgt, classes })
    }
}

impl fmt::Display for SplitEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: {{", self.src, self.tgt)?;
        for (i, class) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("{")?;
            for (j, x) in class.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

/// `n` classes `{i, i+n}`.
pub fn identity(n: usize) -> SplitEq {
    SplitEq {
        src: n,
        tgt: n,
        classes: (0..n).map(|i| vec![i, i + n]).collect(),
    }
}

/// `S ∘ R` for `R: n → m` and `S: m → p`.
pub fn compose(s: &SplitEq, r: &SplitEq) -> Result<SplitEq> {
    if r.tgt != s.src {
        return Err(Error::TypeMismatch(format!(
            "cannot compose split equivalence {} -> {} after {} -> {}",
            s.src, s.tgt, r.src, r.tgt
        )));
    }
    let (n, m, p) = (r.src, r.tgt, s.tgt);
    // R sits on 0..n+m, S on n..n+m+p, sharing the middle block n..n+m
    let mut uf = UnionFind::new(n + m + p);
    uf.union_classes(&r.classes, 0);
    uf.union_classes(&s.classes, n);
    let outer = |x: usize| x < n || x >= n + m;
    let classes = uf
        .into_classes()
        .into_iter()
        .map(|class| {
            class
                .into_iter()
                .filter(|&x| outer(x))
                .map(|x| if x < n { x } else { x - m })
                .collect::<Vec<_>>()
        })
        .filter(|class| !class.is_empty())
        .collect();
    SplitEq::new(n, p, classes)
}

/// The image of `f: m → n`, read as the opposite arrow `n → m`: one class per
/// `i < n`, holding `i` and `n + j` for each `j` with `f(j) = i`.
pub fn j_of(f: &FinFun) -> SplitEq {
    let n = f.tgt();
    let mut classes: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    for (j, &i) in f.table().iter().enumerate() {
        classes[i].push(n + j);
    }
    SplitEq {
        src: n,
        tgt: f.src(),
        classes,
    }
}
