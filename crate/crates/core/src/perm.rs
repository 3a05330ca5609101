//! Permutations of `{0, .., n-1}`.
//!
//! Composition is written `p.compose(&q)` and means "apply `q` first, then
//! `p`", i.e. `x -> p(q(x))`. Every product of translations in this crate
//! follows that convention.

use std::fmt;

use crate::error::{CycleParseError, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(Error::OutOfRange { value: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation { value: v });
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Parses a product of disjoint cycles such as `(12)(34)` or `(1 10 3)`.
    ///
    /// Symbols run over `base ..= base + n - 1`. Inside a cycle, symbols are
    /// separated by whitespace or commas; without separators every character
    /// is read as one decimal digit. `()` and the empty string are the
    /// identity, and fixed points may be omitted.
    pub fn parse_cycles(text: &str, n: usize, base: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let bytes = text.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if text[pos..].trim() == "id" {
            return Ok(Permutation { images });
        }
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return Err(CycleParseError::Malformed(pos).into());
            }
            let close = match text[pos + 1..].find([')', '(']) {
                Some(off) if bytes[pos + 1 + off] == b')' => pos + 1 + off,
                Some(off) => return Err(CycleParseError::Malformed(pos + 1 + off).into()),
                None => return Err(CycleParseError::Malformed(bytes.len()).into()),
            };
            let body = &text[pos + 1..close];
            let cycle = parse_cycle_body(body, n, base)?;
            for &s in &cycle {
                if std::mem::replace(&mut used[s], true) {
                    return Err(CycleParseError::Repeated(s + base).into());
                }
            }
            for (i, &s) in cycle.iter().enumerate() {
                images[s] = cycle[(i + 1) % cycle.len()];
            }
            pos = close + 1;
            skip_ws(&mut pos);
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self.after(other))
    }

    /// Same as [`Permutation::compose`] for operands known to share a size.
    pub(crate) fn after(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Non-trivial cycles, each starting at its smallest element, ordered by
    /// that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation with symbols shifted by `base`. Symbols are written
    /// without separators when every symbol is a single digit.
    pub fn to_cycle_string(&self, base: usize) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let compact = base + self.len() <= 10;
        let sep = if compact { "" } else { " " };
        cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(|&s| (s + base).to_string()).collect();
                format!("({})", body.join(sep))
            })
            .collect()
    }

    /// Relabels the carrier: returns `relabel ∘ self ∘ relabel⁻¹`.
    pub fn conjugate_by(&self, relabel: &Permutation) -> Permutation {
        let mut images = vec![0; self.len()];
        for x in 0..self.len() {
            images[relabel.apply(x)] = relabel.apply(self.apply(x));
        }
        Permutation { images }
    }
}

fn parse_cycle_body(body: &str, n: usize, base: usize) -> Result<Vec<usize>> {
    let tokens: Vec<&str> = if body.contains(|c: char| c.is_whitespace() || c == ',') {
        body.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect()
    } else {
        // Unseparated digits are only unambiguous while every symbol is one digit.
        if !body.is_empty() && base + n > 10 {
            return Err(CycleParseError::BadSymbol(body.to_string()).into());
        }
        body.char_indices().map(|(i, c)| &body[i..i + c.len_utf8()]).collect()
    };
    tokens
        .into_iter()
        .map(|t| {
            let s: usize = t.parse().map_err(|_| CycleParseError::BadSymbol(t.to_string()))?;
            if s < base || s >= base + n {
                return Err(CycleParseError::OutOfRange(s).into());
            }
            Ok(s - base)
        })
        .collect()
}

/// All permutations of `{0, .., n-1}` in lexicographic order of their image lists.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation {
            images: current.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_involution_squared() {
        let swap = p(&[1, 0]);
        assert!(swap.compose(&swap).unwrap().is_identity());
    }

    #[test]
    fn compose_identity_left() {
        let q = p(&[2, 0, 1]);
        assert_eq!(Permutation::identity(3).compose(&q).unwrap(), q);
    }

    #[test]
    fn compose_applies_right_operand_first() {
        // p = (0 1)(2 3), q = (2 3)(0 4) on five points
        let pp = Permutation::parse_cycles("(0 1)(2 3)", 5, 0).unwrap();
        let q = Permutation::parse_cycles("(2 3)(0 4)", 5, 0).unwrap();
        assert_eq!(pp.compose(&q).unwrap().images(), &[4, 0, 2, 3, 1]);
    }

    #[test]
    fn compose_size_mismatch() {
        let err = Permutation::identity(2).compose(&Permutation::identity(3));
        assert!(matches!(err, Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn parse_one_based_examples() {
        let l1 = Permutation::parse_cycles("(12)(34)", 4, 1).unwrap();
        assert_eq!(l1.images(), &[1, 0, 3, 2]);
        let c = Permutation::parse_cycles("(1423)", 4, 1).unwrap();
        assert_eq!(c.images(), &[3, 2, 0, 1]);
        assert!(Permutation::parse_cycles("()", 3, 0).unwrap().is_identity());
        assert!(Permutation::parse_cycles("", 3, 0).unwrap().is_identity());
        assert!(Permutation::parse_cycles(" ( ) ", 3, 0).unwrap().is_identity());
    }

    #[test]
    fn parse_multidigit_symbols() {
        let q = Permutation::parse_cycles("(1 10)(3,4)", 10, 1).unwrap();
        assert_eq!(q.apply(0), 9);
        assert_eq!(q.apply(2), 3);
        assert_eq!(q.to_cycle_string(1), "(1 10)(3 4)");
        // unseparated digits become ambiguous past 9
        assert!(Permutation::parse_cycles("(110)", 10, 1).is_err());
    }

    #[test]
    fn parse_errors() {
        use CycleParseError::*;
        let err = |s: &str| match Permutation::parse_cycles(s, 4, 1) {
            Err(Error::Cycle(e)) => e,
            other => panic!("expected cycle error, got {other:?}"),
        };
        assert_eq!(err("(15)"), OutOfRange(5));
        assert_eq!(err("(10)"), OutOfRange(0));
        assert_eq!(err("(12)(23)"), Repeated(2));
        assert_eq!(err("(121)"), Repeated(1));
        assert!(matches!(err("(12"), Malformed(_)));
        assert!(matches!(err("12)"), Malformed(_)));
        assert!(matches!(err("((12)"), Malformed(_)));
        assert!(matches!(err("(1x)"), BadSymbol(_)));
    }

    #[test]
    fn from_images_rejects() {
        assert!(matches!(
            Permutation::from_images(vec![0, 0]),
            Err(Error::NotAPermutation { value: 0 })
        ));
        assert!(matches!(
            Permutation::from_images(vec![0, 2]),
            Err(Error::OutOfRange { value: 2, n: 2 })
        ));
    }

    #[test]
    fn cycle_string_round_trip() {
        let q = p(&[3, 2, 0, 1]);
        assert_eq!(q.to_cycle_string(1), "(1423)");
        assert_eq!(q.to_string(), "(0312)");
        assert_eq!(Permutation::identity(4).to_cycle_string(1), "()");
    }

    #[test]
    fn all_permutations_lexicographic() {
        let all = all_permutations(3);
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(all_permutations(1).len(), 1);
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    fn triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
        (1usize..=8).prop_flat_map(|n| (perm_strategy(n), perm_strategy(n), perm_strategy(n)))
    }

    proptest! {
        #[test]
        fn group_laws((a, b, c) in triple()) {
            let n = a.len();
            let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
            let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(Permutation::identity(n).compose(&a).unwrap(), a.clone());
            prop_assert_eq!(a.compose(&Permutation::identity(n)).unwrap(), a.clone());
            prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
            prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
        }

        #[test]
        fn cycles_reparse((a, _, _) in triple()) {
            let text = a.to_cycle_string(1);
            prop_assert_eq!(Permutation::parse_cycles(&text, a.len(), 1).unwrap(), a);
        }
    }
}
