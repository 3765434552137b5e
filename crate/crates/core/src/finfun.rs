//! The skeletal category of finite ordinals and total functions.
//!
//! Objects are bare ordinals `n = {0, …, n-1}`. The coproduct structure is
//! addition (injections, codiagonal, bracket); the product structure is
//! multiplication, with pairs flattened through the mixed-radix code of
//! [`crate::radix`]. Both monoidal structures are strict, so sums and
//! products of arrows associate on the nose.
//!
//! Product shapes are always passed explicitly: the ordinal 6 carries no
//! memory of being `2·3` or `3·2`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::radix::{mr_decode, mr_encode};

/// A total function `src → tgt` stored as its table of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFinFun")]
pub struct FinFun {
    src: usize,
    tgt: usize,
    table: Vec<usize>,
}

#[derive(Deserialize)]
struct RawFinFun {
    src: usize,
    tgt: usize,
    table: Vec<usize>,
}

impl TryFrom<RawFinFun> for FinFun {
    type Error = Error;

    fn try_from(raw: RawFinFun) -> Result<Self> {
        FinFun::new(raw.src, raw.tgt, raw.table)
    }
}

impl FinFun {
    pub fn new(src: usize, tgt: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != src {
            return Err(Error::InvalidFunction(format!(
                "table has {} entries for source {src}",
                table.len()
            )));
        }
        if let Some(i) = table.iter().position(|&v| v >= tgt) {
            return Err(Error::InvalidFunction(format!(
                "value {} at {i} is not below target {tgt}",
                table[i]
            )));
        }
        Ok(FinFun { src, tgt, table })
    }

    /// Builds a function whose source is the table length.
    pub fn from_table(tgt: usize, table: Vec<usize>) -> Result<Self> {
        Self::new(table.len(), tgt, table)
    }

    // Callers guarantee the invariants.
    fn raw(src: usize, tgt: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), src);
        debug_assert!(table.iter().all(|&v| v < tgt));
        FinFun { src, tgt, table }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Every function `src → tgt`, in lexicographic order of tables.
    pub fn enumerate(src: usize, tgt: usize) -> impl Iterator<Item = FinFun> {
        let count = if src == 0 {
            1
        } else {
            tgt.checked_pow(src as u32).expect("too many functions")
        };
        let radices = vec![tgt; src];
        (0..count).map(move |code| {
            let table = mr_decode(&radices, code).expect("code below count");
            FinFun::raw(src, tgt, table)
        })
    }
}

impl fmt::Display for FinFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: [", self.src, self.tgt)?;
        for (i, v) in self.table.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

pub fn identity(n: usize) -> FinFun {
    FinFun::raw(n, n, (0..n).collect())
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose(g: &FinFun, f: &FinFun) -> Result<FinFun> {
    if f.tgt != g.src {
        return Err(Error::TypeMismatch(format!(
            "cannot compose {} -> {} after {} -> {}",
            g.src, g.tgt, f.src, f.tgt
        )));
    }
    let table = f.table.iter().map(|&i| g.table[i]).collect();
    Ok(FinFun::raw(f.src, g.tgt, table))
}

/// The coproduct of arrows: `f` on the first block, `f2` shifted past `f.tgt`.
pub fn sum(f: &FinFun, f2: &FinFun) -> FinFun {
    let table = f
        .table
        .iter()
        .copied()
        .chain(f2.table.iter().map(|&v| f.tgt + v))
        .collect();
    FinFun::raw(f.src + f2.src, f.tgt + f2.tgt, table)
}

/// The empty function `0 → n`.
pub fn kappa(n: usize) -> FinFun {
    FinFun::raw(0, n, Vec::new())
}

pub fn inj1(n: usize, m: usize) -> FinFun {
    FinFun::raw(n, n + m, (0..n).collect())
}

pub fn inj2(n: usize, m: usize) -> FinFun {
    FinFun::raw(m, n + m, (n..n + m).collect())
}

/// `n + n → n`, folding both blocks onto one.
pub fn codiag(n: usize) -> FinFun {
    FinFun::raw(2 * n, n, (0..n).chain(0..n).collect())
}

/// `[f, g] = codiag ∘ (f + g)`.
pub fn bracket(f: &FinFun, g: &FinFun) -> Result<FinFun> {
    if f.tgt != g.tgt {
        return Err(Error::TypeMismatch(format!(
            "bracket needs equal targets, got {} and {}",
            f.tgt, g.tgt
        )));
    }
    let table = f.table.iter().chain(&g.table).copied().collect();
    Ok(FinFun::raw(f.src + g.src, f.tgt, table))
}

/// The product of arrows, flattened by the mixed-radix code on both sides.
pub fn prod(f1: &FinFun, f2: &FinFun) -> FinFun {
    let src_shape = [f1.src, f2.src];
    let tgt_shape = [f1.tgt, f2.tgt];
    let src = f1.src * f2.src;
    let table = (0..src)
        .map(|i| {
            let d = mr_decode(&src_shape, i).expect("index below product");
            mr_encode(&tgt_shape, &[f1.table[d[0]], f2.table[d[1]]]).expect("values in range")
        })
        .collect();
    FinFun::raw(src, f1.tgt * f2.tgt, table)
}

/// First projection `n·m → n`.
pub fn proj1(n: usize, m: usize) -> FinFun {
    FinFun::raw(n * m, n, (0..n * m).map(|i| i / m).collect())
}

/// Second projection `n·m → m`.
pub fn proj2(n: usize, m: usize) -> FinFun {
    FinFun::raw(n * m, m, (0..n * m).map(|i| i % m).collect())
}

/// Diagonal `n → n·n`.
pub fn diag(n: usize) -> FinFun {
    FinFun::raw(n, n * n, (0..n).map(|i| i * n + i).collect())
}

/// `⟨f, g⟩ = (f·g) ∘ diag`.
pub fn pair(f: &FinFun, g: &FinFun) -> Result<FinFun> {
    if f.src != g.src {
        return Err(Error::TypeMismatch(format!(
            "pairing needs equal sources, got {} and {}",
            f.src, g.src
        )));
    }
    let table = f
        .table
        .iter()
        .zip(&g.table)
        .map(|(&a, &b)| a * g.tgt + b)
        .collect();
    Ok(FinFun::raw(f.src, f.tgt * g.tgt, table))
}

/// The unique arrow `n → 1`.
pub fn terminal(n: usize) -> FinFun {
    FinFun::raw(n, 1, vec![0; n])
}
