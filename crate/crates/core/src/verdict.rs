//! Outcome of checking a universally quantified law over a finite carrier.

use std::fmt;

/// Either the law holds everywhere, or it fails and carries the
/// lexicographically smallest failing instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    /// Scans instances in order and reports the first one rejected by `holds`.
    pub fn first_failure<I, F>(instances: I, mut holds: F) -> Self
    where
        I: IntoIterator<Item = W>,
        F: FnMut(&W) -> bool,
    {
        for w in instances {
            if !holds(&w) {
                return Verdict::Fails(w);
            }
        }
        Verdict::Holds
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Holds => Verdict::Holds,
            Verdict::Fails(w) => Verdict::Fails(f(w)),
        }
    }

    /// Keeps the first failure of `self`, otherwise evaluates `other`.
    pub fn and_then(self, other: impl FnOnce() -> Verdict<W>) -> Verdict<W> {
        match self {
            Verdict::Holds => other(),
            fail => fail,
        }
    }
}

impl<W: fmt::Debug> fmt::Display for Verdict<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails(w) => write!(f, "fails at {w:?}"),
        }
    }
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

pub(crate) fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| pairs(n).map(move |(y, z)| (x, y, z)))
}

pub(crate) fn quadruples(n: usize) -> impl Iterator<Item = [usize; 4]> {
    pairs(n).flat_map(move |(x, y)| pairs(n).map(move |(z, t)| [x, y, z, t]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_lexicographic() {
        let v = Verdict::first_failure(triples(3), |&(x, y, z)| x + y + z < 3);
        assert_eq!(v, Verdict::Fails((0, 1, 2)));
        assert!(Verdict::first_failure(pairs(2), |_| true).holds());
    }

    #[test]
    fn iterator_sizes() {
        assert_eq!(pairs(3).count(), 9);
        assert_eq!(triples(3).count(), 27);
        assert_eq!(quadruples(2).count(), 16);
        assert_eq!(quadruples(3).next(), Some([0, 0, 0, 0]));
    }
}
