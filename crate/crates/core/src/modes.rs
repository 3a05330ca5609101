//! Modes, reductivity and quandle retractions.
//!
//! A mode is an idempotent medial groupoid. Right powers are
//! `a x^0 = a` and `a x^(k+1) = (a x^k) ∗ x`; a groupoid is `k`-reductive
//! when `x y^k = y` for all `x, y`, and `ρ_k` relates `a, b` when
//! `a x^k = b x^k` for every `x`.

use crate::congruence::{partition_is_congruence, quotient_op};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::quasigroup::LeftQuasigroup;
use crate::table::BinaryOpTable;
use crate::verdict::{pairs, quadruples, triples, Verdict};

/// A binary operation with no further structure assumed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Groupoid {
    op: BinaryOpTable,
}

impl Groupoid {
    pub fn from_table(op: BinaryOpTable) -> Result<Self> {
        if op.n() == 0 {
            return Err(Error::EmptyCarrier);
        }
        Ok(Groupoid { op })
    }

    pub fn n(&self) -> usize {
        self.op.n()
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op.get(x, y)
    }

    pub fn table(&self) -> &BinaryOpTable {
        &self.op
    }

    pub fn into_table(self) -> BinaryOpTable {
        self.op
    }

    /// `a x^k`
    pub fn right_power(&self, a: usize, x: usize, k: usize) -> usize {
        (0..k).fold(a, |acc, _| self.op(acc, x))
    }

    pub fn quotient(&self, part: &Partition) -> Result<Groupoid> {
        Groupoid::from_table(quotient_op(&self.op, part)?)
    }

    /// The subgroupoid on `members` (sorted, relabelled `0..len`), if closed.
    pub fn restrict(&self, members: &[usize]) -> Option<Groupoid> {
        let index = |v: usize| members.iter().position(|&m| m == v);
        let mut cells = Vec::with_capacity(members.len() * members.len());
        for &x in members {
            for &y in members {
                cells.push(index(self.op(x, y))?);
            }
        }
        Some(Groupoid {
            op: BinaryOpTable::new(members.len(), cells).expect("relabelled cells are in range"),
        })
    }
}

impl From<LeftQuasigroup> for Groupoid {
    fn from(lq: LeftQuasigroup) -> Self {
        Groupoid {
            op: lq.op_table().clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeFlags {
    pub idempotent: Verdict<usize>,
    /// `(x∗y)∗(z∗t) = (x∗z)∗(y∗t)`
    pub medial: Verdict<[usize; 4]>,
}

impl ModeFlags {
    pub fn is_mode(&self) -> bool {
        self.idempotent.holds() && self.medial.holds()
    }
}

pub fn mode_flags(g: &Groupoid) -> ModeFlags {
    let o = |x, y| g.op(x, y);
    ModeFlags {
        idempotent: Verdict::first_failure(0..g.n(), |&x| o(x, x) == x),
        medial: Verdict::first_failure(quadruples(g.n()), |&[x, y, z, t]| {
            o(o(x, y), o(z, t)) == o(o(x, z), o(y, t))
        }),
    }
}

pub fn is_mode(g: &Groupoid) -> bool {
    mode_flags(g).is_mode()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rho {
    pub k: usize,
    pub partition: Partition,
    pub congruence: Verdict<[usize; 4]>,
}

/// `ρ_k`; `ρ_0` is the identity relation.
pub fn rho_k(g: &Groupoid, k: usize) -> Rho {
    let n = g.n();
    let partition = Partition::by_key(n, |a| (0..n).map(|x| g.right_power(a, x, k)).collect::<Vec<_>>());
    let congruence = partition_is_congruence(&g.op, &partition).expect("sizes agree");
    Rho {
        k,
        partition,
        congruence,
    }
}

/// `x y^k = y` for all `x, y`; the witness is the first failing `(x, y)`.
pub fn is_k_reductive(g: &Groupoid, k: usize) -> Verdict<(usize, usize)> {
    Verdict::first_failure(pairs(g.n()), |&(x, y)| g.right_power(x, y, k) == y)
}

/// The least `k ≤ max_k` for which `g` is `k`-reductive.
///
/// For idempotent groupoids the chain `ρ_0 ⊆ ρ_1 ⊆ … ⊆ ρ_k` is asserted to
/// end in the full relation.
pub fn reductivity_degree(g: &Groupoid, max_k: usize) -> Option<usize> {
    let k = (0..=max_k).find(|&k| is_k_reductive(g, k).holds())?;
    if mode_flags(g).idempotent.holds() {
        let chain: Vec<Partition> = (0..=k).map(|j| rho_k(g, j).partition).collect();
        assert!(
            chain.windows(2).all(|w| w[0].refines(&w[1])),
            "ρ chain is not increasing"
        );
        assert!(chain[k].is_full(), "ρ_k of a k-reductive groupoid is not full");
    }
    Some(k)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuandleFlags {
    pub idempotent: Verdict<usize>,
    /// `x∗(y∗z) = (x∗y)∗(x∗z)`
    pub left_distributive: Verdict<(usize, usize, usize)>,
}

impl QuandleFlags {
    pub fn is_quandle(&self) -> bool {
        self.idempotent.holds() && self.left_distributive.holds()
    }
}

pub fn quandle_flags(q: &LeftQuasigroup) -> QuandleFlags {
    let o = |x, y| q.op(x, y);
    QuandleFlags {
        idempotent: Verdict::first_failure(0..q.n(), |&x| o(x, x) == x),
        left_distributive: Verdict::first_failure(triples(q.n()), |&(x, y, z)| o(x, o(y, z)) == o(o(x, y), o(x, z))),
    }
}

pub fn is_quandle(q: &LeftQuasigroup) -> bool {
    quandle_flags(q).is_quandle()
}

/// Equal left translations within the same orbit of the left multiplication group.
pub fn strong_retraction(q: &LeftQuasigroup) -> Partition {
    let same_translation = Partition::by_key(q.n(), |x| q.op_table().row(x).to_vec());
    same_translation.meet(&q.lmlt().orbits())
}

/// The first `(x, y)`, `x < y`, in one orbit of the left multiplication group
/// with `L_x = L_y`. Errors unless `q` is a quandle.
pub fn quasi_reductive_check(q: &LeftQuasigroup) -> Result<Option<(usize, usize)>> {
    if !is_quandle(q) {
        return Err(Error::NotQuandle);
    }
    Ok(quasi_reductive_witness(q))
}

/// As [`quasi_reductive_check`] without requiring a quandle.
pub fn quasi_reductive_witness(q: &LeftQuasigroup) -> Option<(usize, usize)> {
    let orbits = q.lmlt().orbits();
    pairs(q.n()).find(|&(x, y)| x < y && orbits.related(x, y) && q.op_table().row(x) == q.op_table().row(y))
}
