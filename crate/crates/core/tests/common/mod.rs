#![allow(dead_code)]

use deduct::finfun::FinFun;
use deduct::gen::SplitEq;
use deduct::partition::{all_partitions, labels_from_classes, UnionFind};
use deduct::syntax::{infer_type_conj, infer_type_disj, obj_code, synth_disj, ConjObj, ConjTerm, DisjTerm};
use deduct::Radices;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Largest value of `obj_code` allowed anywhere in a generated conjunctive term.
pub const MAX_CONJ_CODE: usize = 1500;

/// Largest ordinal allowed anywhere in a generated disjunctive term.
pub const MAX_DISJ_ORDINAL: usize = 10;

pub fn random_obj(rng: &mut impl Rng, max_len: usize, max_letter: usize) -> ConjObj {
    let len = rng.gen_range(0..=max_len);
    ConjObj::new((0..len).map(|_| rng.gen_range(1..=max_letter)).collect()).unwrap()
}

fn split_obj(rng: &mut impl Rng, a: &ConjObj) -> (ConjObj, ConjObj) {
    let k = rng.gen_range(0..=a.len());
    let (l, r) = a.indices().split_at(k);
    (ConjObj::new(l.to_vec()).unwrap(), ConjObj::new(r.to_vec()).unwrap())
}

fn conj_fits(t: &ConjTerm) -> bool {
    fn walk(t: &ConjTerm) -> bool {
        let (s, g) = infer_type_conj(t).unwrap();
        let ok = obj_code(&s) <= MAX_CONJ_CODE && obj_code(&g) <= MAX_CONJ_CODE;
        ok && match t {
            ConjTerm::Seq(a, b) | ConjTerm::Prod(a, b) | ConjTerm::Pair(a, b) => walk(a) && walk(b),
            _ => true,
        }
    }
    walk(t)
}

fn conj_leaf(rng: &mut impl Rng, src: &ConjObj) -> ConjTerm {
    match rng.gen_range(0..5) {
        0 => ConjTerm::Id(src.clone()),
        1 => ConjTerm::Bang(src.clone()),
        2 => ConjTerm::Dup(src.clone()),
        3 => {
            let (a, b) = split_obj(rng, src);
            ConjTerm::Pr1(a, b)
        }
        _ => {
            let (a, b) = split_obj(rng, src);
            ConjTerm::Pr2(a, b)
        }
    }
}

/// A well-typed conjunctive term with source `src` and nesting depth at most
/// `depth`.
pub fn random_conj_from(rng: &mut impl Rng, src: &ConjObj, depth: usize) -> ConjTerm {
    for _ in 0..20 {
        let t = if depth == 0 || rng.gen_bool(0.25) {
            conj_leaf(rng, src)
        } else {
            match rng.gen_range(0..3) {
                0 => {
                    let first = random_conj_from(rng, src, depth - 1);
                    let (_, mid) = infer_type_conj(&first).unwrap();
                    let second = random_conj_from(rng, &mid, depth - 1);
                    ConjTerm::seq(first, second)
                }
                1 => {
                    let (a, b) = split_obj(rng, src);
                    ConjTerm::prod(random_conj_from(rng, &a, depth - 1), random_conj_from(rng, &b, depth - 1))
                }
                _ => ConjTerm::pair(
                    random_conj_from(rng, src, depth - 1),
                    random_conj_from(rng, src, depth - 1),
                ),
            }
        };
        if conj_fits(&t) {
            return t;
        }
    }
    ConjTerm::Id(src.clone())
}

/// Source of up to three letters among `p1..p{max_letter}`.
pub fn random_conj(rng: &mut impl Rng, depth: usize, max_letter: usize) -> ConjTerm {
    let src = random_obj(rng, 3, max_letter);
    random_conj_from(rng, &src, depth)
}

pub fn random_finfun(rng: &mut impl Rng, src: usize, tgt: usize) -> FinFun {
    assert!(tgt > 0 || src == 0);
    FinFun::new(src, tgt, (0..src).map(|_| rng.gen_range(0..tgt)).collect()).unwrap()
}

fn disj_fits(t: &DisjTerm) -> bool {
    fn walk(t: &DisjTerm) -> bool {
        let (s, g) = infer_type_disj(t).unwrap();
        s <= MAX_DISJ_ORDINAL
            && g <= MAX_DISJ_ORDINAL
            && match t {
                DisjTerm::Seq(a, b) | DisjTerm::Sum(a, b) | DisjTerm::Case(a, b) => walk(a) && walk(b),
                _ => true,
            }
    }
    walk(t)
}

fn disj_leaf(rng: &mut impl Rng, n: usize) -> DisjTerm {
    let mut options = vec![0, 1, 2];
    if n.is_multiple_of(2) {
        options.push(3);
    }
    match *options.choose(rng).unwrap() {
        0 => DisjTerm::Id(n),
        1 => DisjTerm::In1(n, rng.gen_range(0..=2)),
        2 => DisjTerm::In2(rng.gen_range(0..=2), n),
        _ => DisjTerm::Fold(n / 2),
    }
}

/// A well-typed disjunctive term with source `n` and nesting depth at most `depth`.
pub fn random_disj_from(rng: &mut impl Rng, n: usize, depth: usize) -> DisjTerm {
    for _ in 0..20 {
        let t = if n == 0 && rng.gen_bool(0.3) {
            DisjTerm::Kappa(rng.gen_range(0..=3))
        } else if depth == 0 || rng.gen_bool(0.25) {
            disj_leaf(rng, n)
        } else {
            let k = rng.gen_range(0..=n);
            match rng.gen_range(0..3) {
                0 => {
                    let first = random_disj_from(rng, n, depth - 1);
                    let (_, mid) = infer_type_disj(&first).unwrap();
                    DisjTerm::seq(first, random_disj_from(rng, mid, depth - 1))
                }
                1 => DisjTerm::sum(random_disj_from(rng, k, depth - 1), random_disj_from(rng, n - k, depth - 1)),
                _ => {
                    let left = random_disj_from(rng, k, depth - 1);
                    let (_, m) = infer_type_disj(&left).unwrap();
                    let right = random_disj_from(rng, n - k, depth - 1);
                    let (_, m2) = infer_type_disj(&right).unwrap();
                    if m == 0 && m2 > 0 {
                        DisjTerm::sum(left, right)
                    } else {
                        // glue the right branch onto the common target
                        let glue = synth_disj(&random_finfun(rng, m2, m));
                        DisjTerm::case(left, DisjTerm::seq(right, glue))
                    }
                }
            }
        };
        if disj_fits(&t) {
            return t;
        }
    }
    DisjTerm::Id(n)
}

pub fn random_disj(rng: &mut impl Rng, depth: usize) -> DisjTerm {
    let n = rng.gen_range(0..=4);
    random_disj_from(rng, n, depth)
}

/// A composable pair `R: n → m`, `S: m → p` with sizes at most `max`, and
/// radices with entries in {2, 3} that are appropriate for both: every class
/// of the joint closure gets one radix.
pub struct ComposablePair {
    pub r: SplitEq,
    pub s: SplitEq,
    pub a: Radices,
    pub b: Radices,
    pub c: Radices,
}

pub fn random_spliteq(rng: &mut impl Rng, src: usize, tgt: usize) -> SplitEq {
    let parts = all_partitions(src + tgt);
    let classes = parts.choose(rng).unwrap().clone();
    SplitEq::new(src, tgt, classes).unwrap()
}

pub fn random_composable(rng: &mut impl Rng, max: usize) -> ComposablePair {
    let (n, m, p) = (rng.gen_range(0..=max), rng.gen_range(0..=max), rng.gen_range(0..=max));
    let r = random_spliteq(rng, n, m);
    let s = random_spliteq(rng, m, p);
    let mut uf = UnionFind::new(n + m + p);
    uf.union_classes(r.classes(), 0);
    uf.union_classes(s.classes(), n);
    let classes = uf.into_classes();
    let labels = labels_from_classes(&classes, n + m + p);
    let class_radix: Vec<usize> = classes.iter().map(|_| rng.gen_range(2..=3)).collect();
    let radix: Vec<usize> = labels.iter().map(|&c| class_radix[c]).collect();
    ComposablePair {
        r,
        s,
        a: Radices::new(radix[..n].to_vec()).unwrap(),
        b: Radices::new(radix[n..n + m].to_vec()).unwrap(),
        c: Radices::new(radix[n + m..].to_vec()).unwrap(),
    }
}

/// All radix vectors of the given length with entries in {2, 3}.
pub fn radix_vectors(len: usize) -> Vec<Vec<usize>> {
    (0..1usize << len)
        .map(|mask| (0..len).map(|x| 2 + (mask >> x & 1)).collect())
        .collect()
}
