//! Representing split equivalences by relations between radix products, and
//! the finite-set instances of the exponential and contravariant power-set
//! functors.
//!
//! For `R: n → m` and radices `a` (length `n`) and `b` (length `m`), a code
//! `i < Πa` is related to `j < Πb` when the concatenated digit tuple
//! `decode(a, i) ++ decode(b, j)` is constant on every class of `R`.
//!
//! Functions `X → p` and subsets of `X` are coded by their digit strings with
//! the digit of element 0 most significant. With that one convention the
//! exponential functor at 2 and the inverse-image functor have literally the
//! same tables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finfun::FinFun;
use crate::gen::SplitEq;
use crate::partition::{all_partitions, canonicalize, labels_from_classes};
use crate::radix::{mr_decode, mr_encode, Radices};

/// The `i`-th prime, counting from `nth_prime(1) = 2`.
pub fn nth_prime(i: usize) -> usize {
    assert!(i >= 1, "primes are indexed from 1");
    (2..)
        .filter(|&k| is_prime(k))
        .nth(i - 1)
        .expect("infinitely many primes")
}

/// The first `count` primes.
pub fn primes(count: usize) -> Vec<usize> {
    (2..).filter(|&k| is_prime(k)).take(count).collect()
}

fn is_prime(k: usize) -> bool {
    k >= 2 && (2..).take_while(|d| d * d <= k).all(|d| !k.is_multiple_of(d))
}

/// A binary relation between the ordinals `src` and `tgt`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBinRel")]
pub struct BinRel {
    src: usize,
    tgt: usize,
    pairs: BTreeSet<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawBinRel {
    src: usize,
    tgt: usize,
    pairs: Vec<(usize, usize)>,
}

impl TryFrom<RawBinRel> for BinRel {
    type Error = Error;

    fn try_from(raw: RawBinRel) -> Result<Self> {
        BinRel::new(raw.src, raw.tgt, raw.pairs)
    }
}

impl BinRel {
    pub fn new(
        src: usize,
        tgt: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i >= src || j >= tgt) {
            return Err(Error::OutOfRange(format!(
                "pair ({i},{j}) outside {src} x {tgt}"
            )));
        }
        Ok(BinRel { src, tgt, pairs })
    }

    pub fn graph(f: &FinFun) -> Self {
        BinRel {
            src: f.src(),
            tgt: f.tgt(),
            pairs: f.table().iter().copied().enumerate().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        BinRel {
            src: n,
            tgt: n,
            pairs: (0..n).map(|i| (i, i)).collect(),
        }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }

    pub fn images(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.pairs.range((i, 0)..=(i, usize::MAX)).map(|&(_, j)| j)
    }

    /// Relational composite: first `self`, then `next`.
    pub fn then(&self, next: &BinRel) -> Result<BinRel> {
        if self.tgt != next.src {
            return Err(Error::TypeMismatch(format!(
                "cannot compose relation {} -> {} with {} -> {}",
                self.src, self.tgt, next.src, next.tgt
            )));
        }
        let pairs = self
            .pairs
            .iter()
            .flat_map(|&(i, j)| next.images(j).map(move |k| (i, k)))
            .collect();
        Ok(BinRel {
            src: self.src,
            tgt: next.tgt,
            pairs,
        })
    }

    /// Succeeds when every source element has exactly one image.
    pub fn to_function(&self) -> Result<FinFun> {
        let mut table = Vec::with_capacity(self.src);
        for i in 0..self.src {
            let mut images = self.images(i);
            match (images.next(), images.next()) {
                (Some(j), None) => table.push(j),
                (None, _) => return Err(Error::NotAFunction { element: i, images: 0 }),
                (Some(_), Some(_)) => {
                    return Err(Error::NotAFunction {
                        element: i,
                        images: self.images(i).count(),
                    })
                }
            }
        }
        FinFun::new(self.src, self.tgt, table)
    }
}

impl fmt::Display for BinRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}:", self.src, self.tgt)?;
        for (i, j) in &self.pairs {
            write!(f, " ({i},{j})")?;
        }
        Ok(())
    }
}

fn check_lengths(a: &Radices, b: &Radices, r: &SplitEq) -> Result<()> {
    if a.len() != r.src() || b.len() != r.tgt() {
        return Err(Error::LengthMismatch(format!(
            "radices of lengths {} and {} for a split equivalence {} -> {}",
            a.len(),
            b.len(),
            r.src(),
            r.tgt()
        )));
    }
    Ok(())
}

fn position_radix(a: &Radices, b: &Radices, x: usize) -> usize {
    let n = a.len();
    if x < n {
        a.as_slice()[x]
    } else {
        b.as_slice()[x - n]
    }
}

/// Whether positions related by `r` always carry equal radices.
pub fn appropriate(a: &Radices, b: &Radices, r: &SplitEq) -> Result<bool> {
    check_lengths(a, b, r)?;
    Ok(r.classes().iter().all(|class| {
        let first = position_radix(a, b, class[0]);
        class.iter().all(|&x| position_radix(a, b, x) == first)
    }))
}

/// Enumerates the codes related to each source code.
///
/// For a source code the digits of classes meeting the source are forced;
/// classes lying wholly in the target range over every digit below their
/// least radix.
struct Matcher<'a> {
    a: &'a Radices,
    b: &'a Radices,
    labels: Vec<usize>,
    // classes with no source position, with the number of digits they admit
    free: Vec<(usize, usize)>,
}

impl<'a> Matcher<'a> {
    fn new(a: &'a Radices, b: &'a Radices, r: &SplitEq) -> Self {
        let n = r.src();
        let free = r
            .classes()
            .iter()
            .enumerate()
            .filter(|(_, class)| class[0] >= n)
            .map(|(c, class)| {
                let bound = class.iter().map(|&x| position_radix(a, b, x)).min();
                (c, bound.expect("classes are nonempty"))
            })
            .collect();
        Matcher {
            a,
            b,
            labels: r.labels(),
            free,
        }
    }

    /// Calls `visit` with every target code related to source code `i`;
    /// stops early when `visit` returns false.
    fn for_each_image(&self, i: usize, mut visit: impl FnMut(usize) -> bool) {
        let n = self.a.len();
        let source_digits = self.a.decode(i).expect("source code in range");
        let mut class_digit: Vec<Option<usize>> = vec![None; self.labels.len()];
        for (x, &d) in source_digits.iter().enumerate() {
            let slot = &mut class_digit[self.labels[x]];
            match *slot {
                Some(prev) if prev != d => return,
                _ => *slot = Some(d),
            }
        }
        let b = self.b.as_slice();
        let mut choice = vec![0usize; self.free.len()];
        if self.free.iter().any(|&(_, bound)| bound == 0) {
            return;
        }
        loop {
            for (&(c, _), &d) in self.free.iter().zip(&choice) {
                class_digit[c] = Some(d);
            }
            let digits: Option<Vec<usize>> = (0..b.len())
                .map(|y| {
                    class_digit[self.labels[n + y]].filter(|&d| d < b[y])
                })
                .collect();
            if let Some(digits) = digits {
                let j = self.b.encode(&digits).expect("digits in range");
                if !visit(j) {
                    return;
                }
            }
            // advance the odometer over free classes
            let mut pos = 0;
            loop {
                if pos == choice.len() {
                    return;
                }
                choice[pos] += 1;
                if choice[pos] < self.free[pos].1 {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }
}

/// The relation between `Πa` and `Πb` determined by `r`.
pub fn f_ab_rel(a: &Radices, b: &Radices, r: &SplitEq) -> Result<BinRel> {
    check_lengths(a, b, r)?;
    let matcher = Matcher::new(a, b, r);
    let mut pairs = BTreeSet::new();
    for i in 0..a.product() {
        matcher.for_each_image(i, |j| {
            pairs.insert((i, j));
            true
        });
    }
    Ok(BinRel {
        src: a.product(),
        tgt: b.product(),
        pairs,
    })
}

/// [`f_ab_rel`] as a function, or the first source code without exactly one image.
pub fn f_ab_fun(a: &Radices, b: &Radices, r: &SplitEq) -> Result<FinFun> {
    check_lengths(a, b, r)?;
    let matcher = Matcher::new(a, b, r);
    let mut table = Vec::with_capacity(a.product());
    for i in 0..a.product() {
        let mut found = Vec::with_capacity(2);
        matcher.for_each_image(i, |j| {
            found.push(j);
            found.len() < 2
        });
        match found.as_slice() {
            [j] => table.push(*j),
            [] => return Err(Error::NotAFunction { element: i, images: 0 }),
            _ => {
                let mut count = 0;
                matcher.for_each_image(i, |_| {
                    count += 1;
                    true
                });
                return Err(Error::NotAFunction {
                    element: i,
                    images: count,
                });
            }
        }
    }
    FinFun::new(a.product(), b.product(), table)
}

/// [`f_ab_rel`] with every radix equal to `p`.
pub fn f_p(p: usize, r: &SplitEq) -> Result<BinRel> {
    let a = Radices::constant(p, r.src())?;
    let b = Radices::constant(p, r.tgt())?;
    f_ab_rel(&a, &b, r)
}

/// An equivalence relation on `{0, …, size-1}`, kept as its canonical partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawEqRel")]
pub struct EqRel {
    size: usize,
    classes: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawEqRel {
    size: usize,
    classes: Vec<Vec<usize>>,
}

impl TryFrom<RawEqRel> for EqRel {
    type Error = Error;

    fn try_from(raw: RawEqRel) -> Result<Self> {
        EqRel::new(raw.size, raw.classes)
    }
}

impl EqRel {
    pub fn new(size: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let classes = canonicalize(size, classes)?;
        Ok(EqRel { size, classes })
    }

    pub fn discrete(size: usize) -> Self {
        EqRel {
            size,
            classes: (0..size).map(|x| vec![x]).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn labels(&self) -> Vec<usize> {
        labels_from_classes(&self.classes, self.size)
    }

    pub fn enumerate(size: usize) -> impl Iterator<Item = EqRel> {
        all_partitions(size)
            .into_iter()
            .map(move |classes| EqRel { size, classes })
    }
}

/// The codes of all functions `X → p` constant on each class of `r`.
pub fn respecting_functions(r: &EqRel, p: usize) -> BTreeSet<usize> {
    let radices = vec![p; r.size()];
    let labels = r.labels();
    let class_count = r.classes().len();
    let combos = p.checked_pow(class_count as u32).expect("too many functions");
    let class_radices = vec![p; class_count];
    (0..combos)
        .map(|code| {
            let per_class = mr_decode(&class_radices, code).expect("code below count");
            let digits: Vec<usize> = labels.iter().map(|&c| per_class[c]).collect();
            mr_encode(&radices, &digits).expect("digits below p")
        })
        .collect()
}

/// A choice of one representative per class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepChoice {
    /// The representatives, ascending.
    pub reps: Vec<usize>,
    /// The remaining elements, ascending.
    pub others: Vec<usize>,
    /// Each non-representative mapped to the representative of its class.
    pub phi: BTreeMap<usize, usize>,
}

impl RepChoice {
    /// `phi` as a function between positions in `others` and `reps`.
    pub fn phi_fun(&self) -> FinFun {
        let table = self
            .others
            .iter()
            .map(|x| {
                let rep = self.phi[x];
                self.reps.binary_search(&rep).expect("phi lands on a representative")
            })
            .collect();
        FinFun::new(self.others.len(), self.reps.len(), table).expect("valid by construction")
    }
}

/// Least element of each class as its representative.
pub fn choose_representatives(r: &EqRel) -> RepChoice {
    let mut reps = Vec::new();
    let mut others = Vec::new();
    let mut phi = BTreeMap::new();
    for class in r.classes() {
        let rep = class[0];
        reps.push(rep);
        for &x in &class[1..] {
            others.push(x);
            phi.insert(x, rep);
        }
    }
    reps.sort_unstable();
    others.sort_unstable();
    RepChoice { reps, others, phi }
}

/// All pairs `(f1, f2)` of codes of functions `reps → p` and `others → p`
/// whose copairing respects `r`.
pub fn split_relation(r: &EqRel, choice: &RepChoice, p: usize) -> BinRel {
    let respecting = respecting_functions(r, p);
    let whole = vec![p; r.size()];
    let rep_radices = vec![p; choice.reps.len()];
    let other_radices = vec![p; choice.others.len()];
    let src = p.pow(choice.reps.len() as u32);
    let tgt = p.pow(choice.others.len() as u32);
    let mut pairs = BTreeSet::new();
    for f1 in 0..src {
        let d1 = mr_decode(&rep_radices, f1).expect("in range");
        for f2 in 0..tgt {
            let d2 = mr_decode(&other_radices, f2).expect("in range");
            let mut digits = vec![0; r.size()];
            for (&x, &d) in choice.reps.iter().zip(&d1) {
                digits[x] = d;
            }
            for (&x, &d) in choice.others.iter().zip(&d2) {
                digits[x] = d;
            }
            let code = mr_encode(&whole, &digits).expect("in range");
            if respecting.contains(&code) {
                pairs.insert((f1, f2));
            }
        }
    }
    BinRel { src, tgt, pairs }
}

/// `p^f: p^B → p^A`, sending the code of `g: B → p` to the code of `g ∘ f`.
pub fn exp_functor(p: usize, f: &FinFun) -> Result<FinFun> {
    if p == 0 {
        return Err(Error::OutOfRange("exponent base must be at least 1".into()));
    }
    let src = p.pow(f.tgt() as u32);
    let tgt = p.pow(f.src() as u32);
    let b_radices = vec![p; f.tgt()];
    let a_radices = vec![p; f.src()];
    let table = (0..src)
        .map(|code| {
            let g = mr_decode(&b_radices, code).expect("in range");
            let gf: Vec<usize> = f.table().iter().map(|&x| g[x]).collect();
            mr_encode(&a_radices, &gf).expect("in range")
        })
        .collect();
    FinFun::new(src, tgt, table)
}

/// Code of the subset `members` of `{0, …, size-1}`; element 0 is the high bit.
pub fn subset_code(size: usize, members: &BTreeSet<usize>) -> usize {
    members.iter().map(|&x| 1usize << (size - 1 - x)).sum()
}

pub fn subset_members(size: usize, code: usize) -> BTreeSet<usize> {
    (0..size).filter(|&x| code >> (size - 1 - x) & 1 == 1).collect()
}

/// Inverse image along `f`, on subset codes: `2^B → 2^A`.
pub fn powerset_functor(f: &FinFun) -> FinFun {
    let (a, b) = (f.src(), f.tgt());
    let table = (0..1usize << b)
        .map(|y| {
            let ys = subset_members(b, y);
            let pre: BTreeSet<usize> = (0..a).filter(|&x| ys.contains(&f.apply(x))).collect();
            subset_code(a, &pre)
        })
        .collect();
    FinFun::new(1 << b, 1 << a, table).expect("valid by construction")
}

/// Image of the subset coded by `code` under `f`.
pub fn direct_image(f: &FinFun, code: usize) -> Result<usize> {
    if code >= 1usize << f.src() {
        return Err(Error::OutOfRange(format!(
            "subset code {code} is not below 2^{}",
            f.src()
        )));
    }
    let image: BTreeSet<usize> = subset_members(f.src(), code)
        .into_iter()
        .map(|x| f.apply(x))
        .collect();
    Ok(subset_code(f.tgt(), &image))
}
