//! Permutation groups given by generators, closed by breadth-first
//! multiplication. Carriers here are tiny, so the full element set is kept.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    elements: BTreeSet<Permutation>,
}

impl PermGroup {
    /// The subgroup of `Sym(n)` generated by `generators`.
    ///
    /// An empty generator list yields the trivial group, which is only
    /// rejected when the carrier itself is empty.
    pub fn generated(n: usize, generators: &[Permutation]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                found: g.len(),
            });
        }
        let mut gens: Vec<Permutation> = generators.to_vec();
        gens.sort();
        gens.dedup();
        let identity = Permutation::identity(n);
        let mut elements = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(e) = queue.pop_front() {
            for g in &gens {
                let next = g.after(&e);
                if !elements.contains(&next) {
                    elements.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(PermGroup {
            n,
            generators: gens,
            elements,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.after(b) == b.after(a)))
    }

    /// Orbits of the natural action on the carrier.
    pub fn orbits(&self) -> Partition {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = next;
            while let Some(x) = stack.pop() {
                for g in &self.generators {
                    let y = g.apply(x);
                    if label[y] == usize::MAX {
                        label[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        Partition::from_labels(label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n, 0).unwrap()
    }

    #[test]
    fn single_involution() {
        let g = PermGroup::generated(4, &[cyc("(01)(23)", 4)]).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn klein_four_from_translations() {
        let gens = [
            Permutation::identity(8),
            cyc("(14)(36)", 8),
            cyc("(27)(36)", 8),
            cyc("(14)(27)", 8),
        ];
        let g = PermGroup::generated(8, &gens).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        assert!(g.elements().all(|e| e.after(e).is_identity()));
        assert_eq!(g.orbits().to_string(), "{0},{1,4},{2,7},{3,6},{5}");
    }

    #[test]
    fn cyclic_group_single_orbit() {
        let g = PermGroup::generated(4, &[cyc("(0123)", 4)]).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.orbits().is_full());
    }

    #[test]
    fn symmetric_group_and_errors() {
        let g = PermGroup::generated(4, &[cyc("(01)", 4), cyc("(0123)", 4)]).unwrap();
        assert_eq!(g.order(), 24);
        assert!(!g.is_abelian());
        let trivial = PermGroup::generated(3, &[]).unwrap();
        assert!(trivial.is_trivial());
        assert!(trivial.orbits().is_identity());
        assert_eq!(PermGroup::generated(0, &[]), Err(Error::EmptyCarrier));
        assert!(PermGroup::generated(3, &[Permutation::identity(2)]).is_err());
    }

    #[test]
    fn closure_is_closed() {
        let g = PermGroup::generated(5, &[cyc("(012)", 5), cyc("(34)", 5), cyc("(01)", 5)]).unwrap();
        for a in g.elements() {
            assert!(g.contains(&a.inverse()));
            for b in g.elements() {
                assert!(g.contains(&a.compose(b).unwrap()));
            }
        }
        assert_eq!(g.order(), 12);
    }
}
