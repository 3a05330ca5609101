//! Equivalence relations on a finite carrier, kept in canonical form.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// An equivalence relation on `{0, .., n-1}`.
///
/// Labels are canonical: class labels appear as `0, 1, 2, …` in order of
/// first occurrence, so two partitions describe the same relation exactly
/// when they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    class_of: Vec<usize>,
}

impl Partition {
    /// Canonicalizes an arbitrary labelling.
    pub fn from_labels<L: Eq + Hash>(labels: impl IntoIterator<Item = L>) -> Self {
        let mut seen: HashMap<L, usize> = HashMap::new();
        let class_of = labels
            .into_iter()
            .map(|l| {
                let next = seen.len();
                *seen.entry(l).or_insert(next)
            })
            .collect();
        Partition { class_of }
    }

    /// Groups elements with equal keys.
    pub fn by_key<K: Eq + Hash>(n: usize, key: impl Fn(usize) -> K) -> Self {
        Partition::from_labels((0..n).map(key))
    }

    /// Builds a partition from an explicit list of disjoint classes covering the carrier.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            for &x in class {
                if x >= n {
                    return Err(Error::OutOfRange { value: x, n });
                }
                if labels[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("{x} listed twice")));
                }
                labels[x] = i;
            }
        }
        if let Some(missing) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidPartition(format!("{missing} not covered")));
        }
        Ok(Partition::from_labels(labels))
    }

    pub fn identity(n: usize) -> Self {
        Partition {
            class_of: (0..n).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Partition { class_of: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    #[inline]
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    /// Classes in label order; members ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// Smallest member of each class, indexed by label.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes().into_iter().map(|c| c[0]).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.num_classes() == self.len()
    }

    pub fn is_full(&self) -> bool {
        self.num_classes() <= 1
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Partition) -> bool {
        self.len() == other.len() && self.classes().iter().all(|c| c.iter().all(|&x| other.related(x, c[0])))
    }

    /// Intersection of the two relations.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        Partition::by_key(self.len(), |x| (self.class_of[x], other.class_of[x]))
    }

    /// Classes written as `{a,b},{c}` with members shifted by `base`.
    pub fn display_with_base(&self, base: usize) -> String {
        self.classes()
            .iter()
            .map(|c| {
                let members: Vec<String> = c.iter().map(|&x| (x + base).to_string()).collect();
                format!("{{{}}}", members.join(","))
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with_base(0))
    }
}
