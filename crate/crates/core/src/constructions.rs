//! Families of biracks and left quasigroups.

use crate::birack::{Birack, SolutionView};
use crate::cycleset::{birack_from_cycleset, cycleset_from_birack};
use crate::error::{Error, Result};
use crate::perm::{all_permutations, Permutation};
use crate::quasigroup::LeftQuasigroup;
use crate::table::BinaryOpTable;
use crate::verdict::{pairs, triples, Verdict};

/// `x∘y = f(y)`, `x•y = g(x)` for commuting bijections `f`, `g`.
/// Involutive exactly when `g = f⁻¹`; `f = g = id` gives the projection birack.
pub fn permutation_birack(f: &Permutation, g: &Permutation) -> Result<Birack> {
    if f.len() != g.len() {
        return Err(Error::SizeMismatch {
            expected: f.len(),
            found: g.len(),
        });
    }
    if let Some(x) = (0..f.len()).find(|&x| f.apply(g.apply(x)) != g.apply(f.apply(x))) {
        return Err(Error::NotCommuting(x));
    }
    let b = Birack::from_tables(lyubashenko_sigma(f), lyubashenko_tau(g))?;
    assert_eq!(
        b.classify().involutive,
        *g == f.inverse(),
        "involutivity of a permutation birack must match g = f⁻¹"
    );
    Ok(b)
}

fn lyubashenko_sigma(f: &Permutation) -> BinaryOpTable {
    BinaryOpTable::from_fn(f.len(), |_, y| f.apply(y))
}

fn lyubashenko_tau(g: &Permutation) -> BinaryOpTable {
    BinaryOpTable::from_fn(g.len(), |x, _| g.apply(x))
}

/// The maps `σ(x, y) = f(y)`, `τ(x, y) = g(x)` without requiring `fg = gf`.
pub fn lyubashenko_solution(f: &Permutation, g: &Permutation) -> Result<SolutionView> {
    SolutionView::from_maps(lyubashenko_sigma(f), lyubashenko_tau(g))
}

/// `x ∗ y = perms[x](y)`.
pub fn lq_from_permutations(perms: &[Permutation]) -> Result<LeftQuasigroup> {
    let lq = LeftQuasigroup::from_rows(perms)?;
    assert_eq!(
        lq.is_idempotent(),
        perms.iter().enumerate().all(|(m, p)| p.apply(m) == m)
    );
    Ok(lq)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Parameters of an affine cycle set on `Z_m`: the automorphism `f(x) = a·x`
/// and a constant `c`, with `(1-a)² ≡ 0` and `(1-a)·c ≡ 0 (mod m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineData {
    modulus: usize,
    multiplier: usize,
    constant: usize,
    inverse: usize,
}

impl AffineData {
    pub fn new(modulus: usize, multiplier: usize, constant: usize) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidAffine(format!("modulus {modulus} < 2")));
        }
        let m = modulus;
        let a = multiplier % m;
        let c = constant % m;
        if gcd(a, m) != 1 {
            return Err(Error::InvalidAffine(format!("{a} is not a unit mod {m}")));
        }
        let one_minus_a = (1 + m - a) % m;
        if !(one_minus_a * one_minus_a).is_multiple_of(m) {
            return Err(Error::InvalidAffine(format!("(1-{a})^2 is not 0 mod {m}")));
        }
        if !(one_minus_a * c).is_multiple_of(m) {
            return Err(Error::InvalidAffine(format!("(1-{a})*{c} is not 0 mod {m}")));
        }
        let inverse = (1..m).find(|&i| a * i % m == 1).expect("unit has an inverse");
        Ok(AffineData {
            modulus: m,
            multiplier: a,
            constant: c,
            inverse,
        })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn multiplier(&self) -> usize {
        self.multiplier
    }

    pub fn constant(&self) -> usize {
        self.constant
    }

    /// `(1-a)x + a·y + c`
    pub fn cycle_op(&self, x: usize, y: usize) -> usize {
        let m = self.modulus;
        ((1 + m - self.multiplier) * x + self.multiplier * y + self.constant) % m
    }

    /// `a⁻¹(y - (1-a)x - c)`, the left division of [`AffineData::cycle_op`].
    pub fn cycle_ldiv(&self, x: usize, y: usize) -> usize {
        let m = self.modulus;
        let shift = ((1 + m - self.multiplier) * x + self.constant) % m;
        self.inverse * ((y + m - shift) % m) % m
    }

    /// `a⁻¹x + (1-a⁻¹)y - a⁻¹c`
    pub fn bullet_op(&self, x: usize, y: usize) -> usize {
        let m = self.modulus;
        let b = self.inverse;
        (b * x + (1 + m - b) * y + m * m - b * self.constant % m) % m
    }
}

#[derive(Debug, Clone)]
pub struct AffineStructures {
    /// `(Z_m, ⊙)` with `x⊙y = (1-a)x + a·y + c`.
    pub cycle_set: LeftQuasigroup,
    /// `x∘y = (1-a)x + a·y + c`, `x•y = a⁻¹x + (1-a⁻¹)y - a⁻¹c`.
    pub birack: Birack,
}

/// The affine cycle set and the affine involutive birack of `d`.
///
/// The birack is built from its closed form and, independently, as the
/// birack of the cycle set whose operation is `∗` (the left division of `⊙`);
/// the two must coincide. The closed-form `∘` is `⊙` itself, so its left
/// division is `∗`.
pub fn affine_structures(d: &AffineData) -> Result<AffineStructures> {
    let m = d.modulus();
    let cycle_set = LeftQuasigroup::from_table(BinaryOpTable::from_fn(m, |x, y| d.cycle_op(x, y)))?;
    for (x, y) in pairs(m) {
        assert_eq!(
            cycle_set.ldiv(x, y),
            d.cycle_ldiv(x, y),
            "closed-form left division is wrong"
        );
    }
    let closed = Birack::from_tables(
        BinaryOpTable::from_fn(m, |x, y| d.cycle_op(x, y)),
        BinaryOpTable::from_fn(m, |x, y| d.bullet_op(x, y)),
    )?;
    let via_cycle_set = birack_from_cycleset(&cycle_set.dual())?;
    assert_eq!(closed, via_cycle_set, "affine birack routes disagree");
    assert!(closed.classify().involutive);
    debug_assert_eq!(cycleset_from_birack(&closed)?, cycle_set.dual());
    Ok(AffineStructures {
        cycle_set,
        birack: closed,
    })
}

/// A finite group by Cayley table with identity `0`, an automorphism `f`
/// and a constant `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupData {
    table: BinaryOpTable,
    inverses: Vec<usize>,
    automorphism: Permutation,
    constant: usize,
}

impl GroupData {
    pub fn new(table: BinaryOpTable, automorphism: Permutation, constant: usize) -> Result<Self> {
        let n = table.n();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if automorphism.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: automorphism.len(),
            });
        }
        if constant >= n {
            return Err(Error::OutOfRange { value: constant, n });
        }
        let mul = |x, y| table.get(x, y);
        if let Some(x) = (0..n).find(|&x| mul(0, x) != x || mul(x, 0) != x) {
            return Err(Error::InvalidGroup(format!("0 is not an identity at {x}")));
        }
        if let Some((x, y, z)) = triples(n).find(|&(x, y, z)| mul(mul(x, y), z) != mul(x, mul(y, z))) {
            return Err(Error::InvalidGroup(format!("not associative at ({x}, {y}, {z})")));
        }
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            match (0..n).find(|&y| mul(x, y) == 0 && mul(y, x) == 0) {
                Some(y) => inverses.push(y),
                None => return Err(Error::InvalidGroup(format!("{x} has no inverse"))),
            }
        }
        let f = |x| automorphism.apply(x);
        if let Some((x, y)) = pairs(n).find(|&(x, y)| f(mul(x, y)) != mul(f(x), f(y))) {
            return Err(Error::InvalidGroup(format!("not an automorphism at ({x}, {y})")));
        }
        Ok(GroupData {
            table,
            inverses,
            automorphism,
            constant,
        })
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    fn inv(&self, x: usize) -> usize {
        self.inverses[x]
    }
}

/// `Z_m` under addition.
pub fn cyclic_group(m: usize) -> BinaryOpTable {
    BinaryOpTable::from_fn(m, |x, y| (x + y) % m)
}

/// The symmetric group on `k` points; element `i` is the `i`-th permutation in
/// lexicographic order (so `0` is the identity), and `i·j` applies `j` first.
pub fn symmetric_group(k: usize) -> (BinaryOpTable, Vec<Permutation>) {
    let elements = all_permutations(k);
    let index = |p: &Permutation| elements.iter().position(|q| q == p).expect("closed");
    let table = BinaryOpTable::from_fn(elements.len(), |i, j| index(&elements[i].after(&elements[j])));
    (table, elements)
}

/// Conjugation by element `h` as an automorphism of a group table.
pub fn inner_automorphism(table: &BinaryOpTable, h: usize) -> Permutation {
    let n = table.n();
    let h_inv = (0..n)
        .find(|&y| table.get(h, y) == 0)
        .expect("group element has an inverse");
    Permutation::from_images((0..n).map(|x| table.get(table.get(h, x), h_inv)).collect())
        .expect("conjugation is a bijection")
}

#[derive(Debug, Clone)]
pub struct GroupConjugation {
    /// `x ∗ y = x·f(y·x⁻¹)·c`, with its left division obtained by inverting rows.
    pub lq: LeftQuasigroup,
    /// Whether `x∖y = g(y·x⁻¹)·g(c⁻¹)·x` (`g = f⁻¹`) inverts `∗`. This holds
    /// for abelian groups but can fail otherwise; the witness is the first `(x, y)`
    /// where it differs from the true division.
    pub commuted_division_formula: Verdict<(usize, usize)>,
}

/// The left quasigroup `x ∗ y = x·f(y·x⁻¹)·c` on a group.
///
/// The true left division is `x∖y = g(x⁻¹·y·c⁻¹)·x`, which is checked
/// against row inversion. It is idempotent exactly when `c` is the identity.
pub fn group_conjugation_lq(d: &GroupData) -> Result<GroupConjugation> {
    let n = d.n();
    let f = |x| d.automorphism.apply(x);
    let g_perm = d.automorphism.inverse();
    let g = |x| g_perm.apply(x);
    let c = d.constant;
    let op = BinaryOpTable::from_fn(n, |x, y| d.mul(d.mul(x, f(d.mul(y, d.inv(x)))), c));
    let lq = LeftQuasigroup::from_table(op)?;
    for (x, y) in pairs(n) {
        let division = d.mul(g(d.mul(d.mul(d.inv(x), y), d.inv(c))), x);
        assert_eq!(lq.ldiv(x, y), division, "left division formula does not invert ∗");
    }
    let commuted_division_formula = Verdict::first_failure(pairs(n), |&(x, y)| {
        lq.ldiv(x, y) == d.mul(d.mul(g(d.mul(y, d.inv(x))), g(d.inv(c))), x)
    });
    assert_eq!(lq.is_idempotent(), c == 0, "idempotence must match c = identity");
    Ok(GroupConjugation {
        lq,
        commuted_division_formula,
    })
}

/// `x ∗ y = 2x - y (mod n)`.
pub fn dihedral_quandle(n: usize) -> LeftQuasigroup {
    LeftQuasigroup::from_table(BinaryOpTable::from_fn(n, |x, y| (2 * x + n - y) % n)).expect("rows are reflections")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n, 0).unwrap()
    }

    #[test]
    fn identity_maps_give_projection() {
        let id = Permutation::identity(3);
        let b = permutation_birack(&id, &id).unwrap();
        assert_eq!(b, Birack::projection(3));
        assert!(b.classify().involutive);
    }

    #[test]
    fn inverse_pair_is_involutive() {
        let f = cyc("(0123)", 4);
        let b = permutation_birack(&f, &f.inverse()).unwrap();
        assert!(b.classify().involutive);
    }

    #[test]
    fn disjoint_cycles_commute() {
        let b = permutation_birack(&cyc("(01)", 4), &cyc("(23)", 4)).unwrap();
        let report = b.check_axioms();
        assert!(report.is_birack());
        assert!(!b.classify().involutive);
    }

    #[test]
    fn non_commuting_rejected() {
        let err = permutation_birack(&cyc("(012)", 3), &cyc("(01)", 3)).unwrap_err();
        assert_eq!(err, Error::NotCommuting(0));
        let s = lyubashenko_solution(&cyc("(012)", 3), &cyc("(01)", 3)).unwrap();
        assert!(!s.braid_check().holds());
    }

    #[test]
    fn affine_data_validation() {
        assert!(AffineData::new(4, 3, 0).is_ok());
        assert!(AffineData::new(4, 3, 2).is_ok());
        assert!(matches!(AffineData::new(5, 2, 0), Err(Error::InvalidAffine(_))));
        assert!(matches!(AffineData::new(4, 2, 0), Err(Error::InvalidAffine(_))));
        assert!(matches!(AffineData::new(9, 4, 1), Err(Error::InvalidAffine(_))));
        assert!(matches!(AffineData::new(1, 1, 0), Err(Error::InvalidAffine(_))));
    }

    #[test]
    fn affine_z4_matches_hand_arithmetic() {
        let d = AffineData::new(4, 3, 0).unwrap();
        let s = affine_structures(&d).unwrap();
        for (x, y) in pairs(4) {
            assert_eq!(s.cycle_set.op(x, y), (2 * x + 3 * y) % 4);
            assert_eq!(s.birack.circ(x, y), (2 * x + 3 * y) % 4);
            // a⁻¹ = 3, 1 - a⁻¹ = 2
            assert_eq!(s.birack.bullet(x, y), (3 * x + 2 * y) % 4);
        }
        assert!(s.birack.t_map().is_bijective());
    }

    #[test]
    fn affine_with_constant_and_larger_modulus() {
        for (m, a, c) in [(4, 3, 2), (9, 4, 0), (9, 4, 3), (9, 7, 6), (8, 5, 4), (2, 1, 1)] {
            let d = AffineData::new(m, a, c).unwrap();
            let s = affine_structures(&d).unwrap();
            assert!(s.birack.classify().involutive, "({m}, {a}, {c})");
        }
    }

    #[test]
    fn cyclic_group_conjugation() {
        let d = GroupData::new(cyclic_group(3), Permutation::identity(3), 0).unwrap();
        let gc = group_conjugation_lq(&d).unwrap();
        assert_eq!(gc.lq.op_table(), &BinaryOpTable::projection(3, true));
        assert!(gc.commuted_division_formula.holds());
        let shifted = GroupData::new(cyclic_group(3), Permutation::identity(3), 1).unwrap();
        let gc = group_conjugation_lq(&shifted).unwrap();
        for (x, y) in pairs(3) {
            assert_eq!(gc.lq.op(x, y), (y + 1) % 3);
        }
        assert!(!gc.lq.is_idempotent());
        assert!(gc.commuted_division_formula.holds());
        // multiplication by 2 is an automorphism of Z_3
        let neg = GroupData::new(cyclic_group(3), cyc("(12)", 3), 2).unwrap();
        assert!(group_conjugation_lq(&neg).unwrap().commuted_division_formula.holds());
    }

    #[test]
    fn s3_conjugation_is_idempotent() {
        let (table, elements) = symmetric_group(3);
        let swap = elements.iter().position(|p| p.images() == [1, 0, 2]).unwrap();
        let f = inner_automorphism(&table, swap);
        let d = GroupData::new(table, f, 0).unwrap();
        let gc = group_conjugation_lq(&d).unwrap();
        assert!(gc.lq.is_idempotent());
        // the commuted formula x⁻¹·y ↦ y·x⁻¹ breaks in a non-abelian group
        assert!(!gc.commuted_division_formula.holds());
    }

    #[test]
    fn group_data_rejects() {
        let bad = BinaryOpTable::from_fn(3, |x, y| (x * y) % 3);
        assert!(GroupData::new(bad, Permutation::identity(3), 0).is_err());
        let not_auto = cyc("(01)", 3);
        assert!(GroupData::new(cyclic_group(3), not_auto, 0).is_err());
    }

    #[test]
    fn permutation_rows() {
        let lq = lq_from_permutations(&[cyc("(01)", 2), Permutation::identity(2)]).unwrap();
        assert!(!lq.is_idempotent());
        assert!(lq_from_permutations(&vec![Permutation::identity(3); 3])
            .unwrap()
            .is_idempotent());
        assert!(lq_from_permutations(&[Permutation::identity(3)]).is_err());
    }

    #[test]
    fn dihedral_on_z3() {
        let q = dihedral_quandle(3);
        for (x, y) in pairs(3) {
            assert_eq!(q.op(x, y), (2 * y + 3 - x) % 3);
        }
    }
}
