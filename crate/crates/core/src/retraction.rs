//! The retraction relation of a birack and everything built on it.
//!
//! `x ≈ y` holds when `L_x = L_y` (left translations of `∘`) and `R_x = R_y`
//! (right translations of `•`). It is a congruence of every birack, so the
//! quotient by `≈` is again a birack: the retraction of the corresponding
//! solution. Iterating gives the retraction tower, and the number of steps
//! needed to reach one element is the multipermutation level.

use std::fmt;

use crate::birack::Birack;
use crate::congruence::{partition_is_congruence, quotient_op};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::verdict::{pairs, quadruples, triples, Verdict};

/// The partition of the carrier by equal `(L_x, R_x)`.
///
/// The same relation is also computed from the division operations
/// (`x∖∘z = y∖∘z` and `z/•x = z/•y` for all `z`); the two must agree.
pub fn generalized_retraction(b: &Birack) -> Partition {
    let n = b.n();
    let by_translations = Partition::by_key(n, |x| (b.circ_table().row(x).to_vec(), b.bullet_table().column(x)));
    let by_divisions = Partition::by_key(n, |x| {
        (b.ld_circ_table().row(x).to_vec(), b.rd_bullet_table().column(x))
    });
    assert_eq!(
        by_translations, by_divisions,
        "retraction computed from translations and from divisions differ"
    );
    by_translations
}

/// `x ∼ y` iff `R_x = R_y`: only the right translations of `•` are compared.
/// Not a congruence in general.
pub fn ess_relation(b: &Birack) -> Partition {
    Partition::by_key(b.n(), |x| b.bullet_table().column(x))
}

/// `x ∼ y` iff `L_x = L_y` for the left translations of `∘`.
pub fn left_translation_relation(b: &Birack) -> Partition {
    Partition::by_key(b.n(), |x| b.circ_table().row(x).to_vec())
}

/// One of the four basic operations of a birack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BirackOp {
    Circ,
    LdCirc,
    Bullet,
    RdBullet,
}

impl BirackOp {
    pub const ALL: [BirackOp; 4] = [BirackOp::Circ, BirackOp::LdCirc, BirackOp::Bullet, BirackOp::RdBullet];

    pub fn symbol(self) -> &'static str {
        match self {
            BirackOp::Circ => "∘",
            BirackOp::LdCirc => "∖∘",
            BirackOp::Bullet => "•",
            BirackOp::RdBullet => "/•",
        }
    }

    pub fn eval(self, b: &Birack, x: usize, y: usize) -> usize {
        match self {
            BirackOp::Circ => b.circ(x, y),
            BirackOp::LdCirc => b.ld_circ(x, y),
            BirackOp::Bullet => b.bullet(x, y),
            BirackOp::RdBullet => b.rd_bullet(x, y),
        }
    }
}

/// `x θ y` and `z θ t` but `x⋆z` and `y⋆t` are in different classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceViolation {
    pub op: BirackOp,
    pub quadruple: [usize; 4],
}

impl fmt::Display for CongruenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z, t] = self.quadruple;
        let s = self.op.symbol();
        write!(f, "{x}≡{y}, {z}≡{t} but {x}{s}{z} ≢ {y}{s}{t}")
    }
}

/// Direct check of compatibility with `∘`, `∖∘`, `•`, `/•` by looping over all
/// quadruples. Operations are tried in that order; within an operation the
/// smallest quadruple is reported.
pub fn verify_congruence_bruteforce(b: &Birack, part: &Partition) -> Result<Verdict<CongruenceViolation>> {
    if part.len() != b.n() {
        return Err(Error::SizeMismatch {
            expected: b.n(),
            found: part.len(),
        });
    }
    for op in BirackOp::ALL {
        let v = Verdict::first_failure(quadruples(b.n()), |&[x, y, z, t]| {
            !(part.related(x, y) && part.related(z, t)) || part.related(op.eval(b, x, z), op.eval(b, y, t))
        });
        if let Verdict::Fails(quadruple) = v {
            return Ok(Verdict::Fails(CongruenceViolation { op, quadruple }));
        }
    }
    Ok(Verdict::Holds)
}

/// The birack on the classes of `part`, which must be a congruence for all
/// four operations.
pub fn quotient_birack(b: &Birack, part: &Partition) -> Result<Birack> {
    if part.len() != b.n() {
        return Err(Error::SizeMismatch {
            expected: b.n(),
            found: part.len(),
        });
    }
    let tables = [b.circ_table(), b.ld_circ_table(), b.bullet_table(), b.rd_bullet_table()];
    for (op, table) in BirackOp::ALL.iter().zip(tables) {
        if let Verdict::Fails([x, y, z, t]) = partition_is_congruence(table, part)? {
            return Err(Error::NotCongruence(
                CongruenceViolation {
                    op: *op,
                    quadruple: [x, y, z, t],
                }
                .to_string(),
            ));
        }
    }
    let q = Birack::from_tables(quotient_op(b.circ_table(), part)?, quotient_op(b.bullet_table(), part)?)?;
    debug_assert_eq!(q.ld_circ_table(), &quotient_op(b.ld_circ_table(), part)?);
    debug_assert_eq!(q.rd_bullet_table(), &quotient_op(b.rd_bullet_table(), part)?);
    // Identities survive in quotients.
    let (before, after) = (b.classify(), q.classify());
    assert!(!before.involutive || after.involutive, "quotient lost involutivity");
    assert!(
        !before.square_free || after.square_free,
        "quotient lost square-freeness"
    );
    Ok(q)
}

/// The retraction: the quotient by [`generalized_retraction`].
pub fn retract(b: &Birack) -> Birack {
    quotient_birack(b, &generalized_retraction(b)).expect("the retraction is a congruence")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TowerEnd {
    /// Stage `m` has one element, and no earlier stage does.
    Singleton(usize),
    /// The retraction of the last stage is the identity on a carrier of this size (> 1).
    Stabilized(usize),
    /// Stopped after this many retraction steps without reaching either end.
    Truncated(usize),
}

#[derive(Debug, Clone)]
pub struct RetractionTower {
    /// `stages[0]` is the input; `stages[k+1]` is the retraction of `stages[k]`.
    pub stages: Vec<Birack>,
    /// `retractions[k]` is `≈` on `stages[k]`, for every stage that was retracted
    /// or found to be stable.
    pub retractions: Vec<Partition>,
    pub end: TowerEnd,
}

impl RetractionTower {
    pub fn sizes(&self) -> Vec<usize> {
        self.stages.iter().map(Birack::n).collect()
    }
}

/// Retracts repeatedly until one element remains, the retraction becomes
/// trivial, or `max_steps` retractions have been performed.
pub fn retraction_tower(b: &Birack, max_steps: usize) -> RetractionTower {
    let mut stages = vec![b.clone()];
    let mut retractions = Vec::new();
    let end = loop {
        let last = stages.last().expect("non-empty");
        if last.n() == 1 {
            break TowerEnd::Singleton(stages.len() - 1);
        }
        if stages.len() > max_steps {
            break TowerEnd::Truncated(max_steps);
        }
        let part = generalized_retraction(last);
        if part.is_identity() {
            let size = last.n();
            retractions.push(part);
            break TowerEnd::Stabilized(size);
        }
        let next = quotient_birack(last, &part).expect("the retraction is a congruence");
        retractions.push(part);
        stages.push(next);
    };
    RetractionTower {
        stages,
        retractions,
        end,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultipermutationLevel {
    Level(usize),
    /// The tower stabilized at this carrier size.
    NotMultipermutation(usize),
    /// Gave up after this many steps.
    Unknown(usize),
}

/// Extracts the end of the retraction tower. `max_steps` defaults to the
/// carrier size, which always suffices because sizes strictly decrease.
pub fn multipermutation_level(b: &Birack, max_steps: Option<usize>) -> MultipermutationLevel {
    match retraction_tower(b, max_steps.unwrap_or(b.n())).end {
        TowerEnd::Singleton(m) => MultipermutationLevel::Level(m),
        TowerEnd::Stabilized(k) => MultipermutationLevel::NotMultipermutation(k),
        TowerEnd::Truncated(s) => MultipermutationLevel::Unknown(s),
    }
}

/// Verdicts for the auxiliary identities used to show that `≈` is a
/// congruence. Witness tuples list the quantified variables in the order
/// given in each field's doc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    /// `y•(x∖z) = [(x/y)•(y∘(x∖z))] ∖ [((x/y)∘y)•z]`; witness `[x, y, z]`.
    pub claim1: Verdict<Vec<usize>>,
    /// `y∘(x∖z) = (x/y) ∖ [((x/y)∘y)∘z]`; witness `[x, y, z]`.
    pub claim2: Verdict<Vec<usize>>,
    /// `(x•y)∘[(x∖z)•((x∖z)∖y)] = z•[z∖(x∘y)]`; witness `[x, y, z]`.
    pub claim3: Verdict<Vec<usize>>,
    /// `x•(x∖c) = x•(x∖d)` for `c ≈ d`; witness `[x, c, d]`.
    pub claim4: Verdict<Vec<usize>>,
    /// `z•(z∖(x∘c)) = z•(z∖(x∘d))` for `c ≈ d`; witness `[x, z, c, d]`.
    pub claim5: Verdict<Vec<usize>>,
    /// `(x/y)•(y∘(x∖c)) = (x/y)•(y∘(x∖d))` for `c ≈ d`; witness `[x, y, c, d]`.
    pub claim6: Verdict<Vec<usize>>,
    /// `b∘((a∖z)∘x) = z∘((b•(a∖z))∘x)` for `a ≈ b`; witness `[a, b, x, z]`.
    pub claim7: Verdict<Vec<usize>>,
    /// `b•(a∖c) = b•(a∖d)` for `a ≈ b`, `c ≈ d`; witness `[a, b, c, d]`.
    pub claim8: Verdict<Vec<usize>>,
    /// `y•z = [x•(y∘z)] ∖ [(x∘y)•((x•y)∘z)]`; witness `[x, y, z]`.
    pub identity_c1: Verdict<Vec<usize>>,
}

impl ClaimReport {
    pub fn entries(&self) -> [(&'static str, &Verdict<Vec<usize>>); 9] {
        [
            ("claim1", &self.claim1),
            ("claim2", &self.claim2),
            ("claim3", &self.claim3),
            ("identity_c1", &self.identity_c1),
            ("claim4", &self.claim4),
            ("claim5", &self.claim5),
            ("claim6", &self.claim6),
            ("claim7", &self.claim7),
            ("claim8", &self.claim8),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.entries().iter().all(|(_, v)| v.holds())
    }

    pub fn unconditional_hold(&self) -> bool {
        self.entries()[..4].iter().all(|(_, v)| v.holds())
    }
}

/// Runs every claim over the whole carrier, with the hypothesis pairs of the
/// conditional claims drawn from `≈`.
pub fn proof_identity_suite(b: &Birack) -> ClaimReport {
    let n = b.n();
    let c = |x, y| b.circ(x, y);
    let bl = |x, y| b.bullet(x, y);
    let ld = |x, y| b.ld_circ(x, y);
    let rd = |x, y| b.rd_bullet(x, y);
    let approx = generalized_retraction(b);
    let related: Vec<(usize, usize)> = pairs(n).filter(|&(u, v)| approx.related(u, v)).collect();

    let over_triples = |law: &dyn Fn(usize, usize, usize) -> bool| {
        Verdict::first_failure(triples(n), |&(x, y, z)| law(x, y, z)).map(|(x, y, z)| vec![x, y, z])
    };
    let over = |tuples: Vec<Vec<usize>>, law: &dyn Fn(&[usize]) -> bool| Verdict::first_failure(tuples, |t| law(t));
    let with_related = |free: usize| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let frees: Vec<Vec<usize>> = match free {
            1 => (0..n).map(|x| vec![x]).collect(),
            _ => pairs(n).map(|(x, y)| vec![x, y]).collect(),
        };
        for f in &frees {
            for &(u, v) in &related {
                let mut t = f.clone();
                t.extend([u, v]);
                out.push(t);
            }
        }
        out
    };

    let claim1 = over_triples(&|x, y, z| {
        let q = rd(x, y);
        bl(y, ld(x, z)) == ld(bl(q, c(y, ld(x, z))), bl(c(q, y), z))
    });
    let claim2 = over_triples(&|x, y, z| {
        let q = rd(x, y);
        c(y, ld(x, z)) == ld(q, c(c(q, y), z))
    });
    let claim3 = over_triples(&|x, y, z| {
        let w = ld(x, z);
        c(bl(x, y), bl(w, ld(w, y))) == bl(z, ld(z, c(x, y)))
    });
    let identity_c1 = over_triples(&|x, y, z| bl(y, z) == ld(bl(x, c(y, z)), bl(c(x, y), c(bl(x, y), z))));
    let claim4 = over(with_related(1), &|t| {
        let (x, cc, d) = (t[0], t[1], t[2]);
        bl(x, ld(x, cc)) == bl(x, ld(x, d))
    });
    let claim5 = over(with_related(2), &|t| {
        let (x, z, cc, d) = (t[0], t[1], t[2], t[3]);
        bl(z, ld(z, c(x, cc))) == bl(z, ld(z, c(x, d)))
    });
    let claim6 = over(with_related(2), &|t| {
        let (x, y, cc, d) = (t[0], t[1], t[2], t[3]);
        let q = rd(x, y);
        bl(q, c(y, ld(x, cc))) == bl(q, c(y, ld(x, d)))
    });
    let claim7_tuples: Vec<Vec<usize>> = related
        .iter()
        .flat_map(|&(a, bb)| pairs(n).map(move |(x, z)| vec![a, bb, x, z]))
        .collect();
    let claim7 = over(claim7_tuples, &|t| {
        let (a, bb, x, z) = (t[0], t[1], t[2], t[3]);
        c(bb, c(ld(a, z), x)) == c(z, c(bl(bb, ld(a, z)), x))
    });
    let claim8_tuples: Vec<Vec<usize>> = related
        .iter()
        .flat_map(|&(a, bb)| related.iter().map(move |&(cc, d)| vec![a, bb, cc, d]))
        .collect();
    let claim8 = over(claim8_tuples, &|t| {
        let (a, bb, cc, d) = (t[0], t[1], t[2], t[3]);
        bl(bb, ld(a, cc)) == bl(bb, ld(a, d))
    });
    ClaimReport {
        claim1,
        claim2,
        claim3,
        claim4,
        claim5,
        claim6,
        claim7,
        claim8,
        identity_c1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_collapses_in_one_step() {
        for n in 2..=5 {
            let b = Birack::projection(n);
            assert!(generalized_retraction(&b).is_full());
            assert!(ess_relation(&b).is_full());
            let tower = retraction_tower(&b, n);
            assert_eq!(tower.sizes(), vec![n, 1]);
            assert_eq!(tower.end, TowerEnd::Singleton(1));
            assert_eq!(multipermutation_level(&b, None), MultipermutationLevel::Level(1));
            assert_eq!(quotient_birack(&b, &generalized_retraction(&b)).unwrap().n(), 1);
            assert!(proof_identity_suite(&b).all_hold());
        }
    }

    #[test]
    fn single_element_has_level_zero() {
        let b = Birack::projection(1);
        let tower = retraction_tower(&b, 1);
        assert_eq!(tower.sizes(), vec![1]);
        assert_eq!(tower.end, TowerEnd::Singleton(0));
        assert_eq!(multipermutation_level(&b, None), MultipermutationLevel::Level(0));
    }

    #[test]
    fn identity_partition_quotient_is_same_birack() {
        let b = Birack::projection(3);
        assert!(verify_congruence_bruteforce(&b, &Partition::identity(3))
            .unwrap()
            .holds());
        assert_eq!(quotient_birack(&b, &Partition::identity(3)).unwrap(), b);
    }

    #[test]
    fn truncation_is_reported() {
        let b = Birack::projection(3);
        let tower = retraction_tower(&b, 0);
        assert_eq!(tower.end, TowerEnd::Truncated(0));
        assert_eq!(multipermutation_level(&b, Some(0)), MultipermutationLevel::Unknown(0));
    }

    #[test]
    fn size_mismatch_rejected() {
        let b = Birack::projection(3);
        assert!(verify_congruence_bruteforce(&b, &Partition::identity(2)).is_err());
        assert!(quotient_birack(&b, &Partition::identity(4)).is_err());
    }
}
