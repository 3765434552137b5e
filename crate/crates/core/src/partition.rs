//! Partitions of `{0, …, k-1}` in canonical form, plus the union-find used to
//! close relations under transitivity.

use crate::error::{Error, Result};

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already together.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Merges every block of `classes` after shifting it by `offset`.
    pub fn union_classes(&mut self, classes: &[Vec<usize>], offset: usize) {
        for class in classes {
            if let Some((&first, rest)) = class.split_first() {
                for &x in rest {
                    self.union(first + offset, x + offset);
                }
            }
        }
    }

    pub fn into_classes(mut self) -> Vec<Vec<usize>> {
        let labels: Vec<usize> = (0..self.len()).map(|x| self.find(x)).collect();
        classes_from_labels(&labels)
    }
}

/// Groups indices by label. The result is canonical: classes sorted
/// ascending, ordered by least element.
pub fn classes_from_labels<L: PartialEq>(labels: &[L]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_labels: Vec<&L> = Vec::new();
    for (x, label) in labels.iter().enumerate() {
        match class_labels.iter().position(|l| *l == label) {
            Some(c) => classes[c].push(x),
            None => {
                class_labels.push(label);
                classes.push(vec![x]);
            }
        }
    }
    classes
}

/// For each element, the index of its class in `classes`.
pub fn labels_from_classes(classes: &[Vec<usize>], size: usize) -> Vec<usize> {
    let mut labels = vec![usize::MAX; size];
    for (c, class) in classes.iter().enumerate() {
        for &x in class {
            labels[x] = c;
        }
    }
    labels
}

/// Checks that `classes` partition `{0, …, size-1}` and returns the canonical form.
pub fn canonicalize(size: usize, classes: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    let mut seen = vec![false; size];
    for class in &classes {
        if class.is_empty() {
            return Err(Error::InvalidPartition("empty class".into()));
        }
        for &x in class {
            if x >= size {
                return Err(Error::InvalidPartition(format!(
                    "element {x} is outside 0..{size}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPartition(format!(
                    "element {x} occurs more than once"
                )));
            }
        }
    }
    if let Some(x) = seen.iter().position(|s| !s) {
        return Err(Error::InvalidPartition(format!("element {x} is in no class")));
    }
    let mut classes: Vec<Vec<usize>> = classes
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    classes.sort_unstable_by_key(|c| c[0]);
    Ok(classes)
}

/// Every partition of `{0, …, size-1}` in canonical form, enumerated through
/// restricted growth strings. There are Bell(size) of them.
pub fn all_partitions(size: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(pos: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        if pos == rgs.len() {
            out.push(classes_from_labels(rgs));
            return;
        }
        for label in 0..=max + 1 {
            rgs[pos] = label;
            go(pos + 1, max.max(label), rgs, out);
        }
    }
    let mut out = Vec::new();
    if size == 0 {
        out.push(Vec::new());
    } else {
        let mut rgs = vec![0usize; size];
        go(1, 0, &mut rgs, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..=6).map(|k| all_partitions(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn enumerated_partitions_are_canonical_and_distinct() {
        for k in 0..=5 {
            let parts = all_partitions(k);
            for p in &parts {
                assert_eq!(&canonicalize(k, p.clone()).unwrap(), p);
            }
            let mut sorted = parts.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), parts.len());
        }
    }

    #[test]
    fn canonicalize_sorts_and_validates() {
        let c = canonicalize(4, vec![vec![3, 1], vec![2, 0]]).unwrap();
        assert_eq!(c, vec![vec![0, 2], vec![1, 3]]);
        assert!(canonicalize(3, vec![vec![0, 1]]).is_err());
        assert!(canonicalize(2, vec![vec![0, 1], vec![1]]).is_err());
        assert!(canonicalize(2, vec![vec![0, 1], vec![]]).is_err());
        assert!(canonicalize(2, vec![vec![0, 2], vec![1]]).is_err());
    }

    #[test]
    fn union_find_closure() {
        let mut uf = UnionFind::new(6);
        assert!(uf.union(0, 4));
        assert!(uf.union(4, 2));
        assert!(!uf.union(2, 0));
        uf.union_classes(&[vec![0, 1]], 3);
        assert_eq!(uf.into_classes(), vec![vec![0, 2, 3, 4], vec![1], vec![5]]);
    }

    #[test]
    fn labels_round_trip() {
        let classes = vec![vec![0, 3], vec![1], vec![2, 4]];
        let labels = labels_from_classes(&classes, 5);
        assert_eq!(labels, vec![0, 1, 2, 0, 2]);
        assert_eq!(classes_from_labels(&labels), classes);
    }
}
