//! Cycle sets and involutive biracks.
//!
//! A cycle set is a left quasigroup `(X, ⊙)` with
//! `(x⊙y)⊙(x⊙z) = (y⊙x)⊙(y⊙z)`. It is non-degenerate when `T: x ↦ x⊙x`
//! is a bijection. Here the cycle-set operation is the primary operation of
//! a [`LeftQuasigroup`] and `∗` is its left division.
//!
//! Non-degenerate cycle sets and involutive biracks determine each other:
//! `x∘y = x∗y`, `x∖∘y = x⊙y`, `x•y = (x∗y)⊙x` and `x/•y = T⁻¹(y∗T(x))`;
//! conversely `⊙ = ∖∘`.

use crate::birack::{Birack, Witness};
use crate::congruence::partition_is_congruence;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::quasigroup::LeftQuasigroup;
use crate::table::BinaryOpTable;
use crate::verdict::{pairs, triples, Verdict};

/// Checks the right-cyclic law pointwise and, independently, as
/// `L_{x⊙y} L_x = L_{y⊙x} L_y`; both forms must agree.
pub fn is_right_cyclic(cs: &LeftQuasigroup) -> Verdict<(usize, usize, usize)> {
    let o = |x, y| cs.op(x, y);
    let pointwise = Verdict::first_failure(triples(cs.n()), |&(x, y, z)| o(o(x, y), o(x, z)) == o(o(y, x), o(y, z)));
    let translations = cs.left_translations();
    let by_translations = pairs(cs.n())
        .all(|(x, y)| translations[o(x, y)].after(&translations[x]) == translations[o(y, x)].after(&translations[y]));
    assert_eq!(
        pointwise.holds(),
        by_translations,
        "right-cyclic law disagrees with its translation form"
    );
    pointwise
}

/// Whether `T: x ↦ x⊙x` is a bijection.
pub fn is_nondegenerate(cs: &LeftQuasigroup) -> bool {
    diagonal_permutation(cs).is_some()
}

fn diagonal_permutation(cs: &LeftQuasigroup) -> Option<Permutation> {
    Permutation::from_images(cs.diagonal()).ok()
}

fn require_right_cyclic(cs: &LeftQuasigroup) -> Result<()> {
    match is_right_cyclic(cs) {
        Verdict::Holds => Ok(()),
        Verdict::Fails((x, y, z)) => Err(Error::NotRightCyclic(x, y, z)),
    }
}

/// The involutive birack of a non-degenerate cycle set.
pub fn birack_from_cycleset(cs: &LeftQuasigroup) -> Result<Birack> {
    require_right_cyclic(cs)?;
    // T must be a bijection; finite right-cyclic left quasigroups always pass.
    let t = diagonal_permutation(cs).ok_or(Error::Degenerate)?;
    let t_inv = t.inverse();
    let n = cs.n();
    let circ = BinaryOpTable::from_fn(n, |x, y| cs.ldiv(x, y));
    let bullet = BinaryOpTable::from_fn(n, |x, y| cs.op(cs.ldiv(x, y), x));
    let b = Birack::from_tables(circ, bullet)?;
    for (x, y) in pairs(n) {
        assert_eq!(
            b.ld_circ(x, y),
            cs.op(x, y),
            "left division of ∘ is not the cycle-set operation"
        );
        assert_eq!(
            b.rd_bullet(x, y),
            t_inv.apply(cs.ldiv(y, t.apply(x))),
            "right division of • does not match T⁻¹(y∗T(x))"
        );
    }
    assert!(b.classify().involutive, "birack of a cycle set is not involutive");
    Ok(b)
}

/// The cycle set `(X, ∖∘)` of an involutive birack.
pub fn cycleset_from_birack(b: &Birack) -> Result<LeftQuasigroup> {
    let report = b.check_axioms();
    let failure = report.involutive_left.witness().or(report.involutive_right.witness());
    if let Some(&Witness::Pair(x, y)) = failure {
        return Err(Error::NotInvolutive(x, y));
    }
    let cs = LeftQuasigroup::from_table(b.ld_circ_table().clone())?;
    assert!(
        is_right_cyclic(&cs).holds(),
        "cycle set of an involutive birack is not right cyclic"
    );
    assert!(is_nondegenerate(&cs), "cycle set of an involutive birack is degenerate");
    Ok(cs)
}

/// The relation `x α y ⇔ x⊙z = y⊙z for all z` together with whether it is a
/// congruence of `⊙` and of the division `∗`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaRelation {
    pub partition: Partition,
    pub congruence_of_op: Verdict<[usize; 4]>,
    pub congruence_of_ldiv: Verdict<[usize; 4]>,
}

pub fn alpha_relation(cs: &LeftQuasigroup) -> AlphaRelation {
    let partition = Partition::by_key(cs.n(), |x| cs.op_table().row(x).to_vec());
    let congruence_of_op = partition_is_congruence(cs.op_table(), &partition).expect("sizes agree");
    let congruence_of_ldiv = partition_is_congruence(cs.ldiv_table(), &partition).expect("sizes agree");
    AlphaRelation {
        partition,
        congruence_of_op,
        congruence_of_ldiv,
    }
}

/// `x⊙(y⊙y) = ((y∗x)⊙y)⊙((y∗x)⊙y)` for all `x, y`.
pub fn kon1_check(cs: &LeftQuasigroup) -> Verdict<(usize, usize)> {
    let o = |x, y| cs.op(x, y);
    Verdict::first_failure(pairs(cs.n()), |&(x, y)| {
        let a = o(cs.ldiv(y, x), y);
        o(x, o(y, y)) == o(a, a)
    })
}

/// Finds a preimage of `z` under `T` without inverting `T`: starting from
/// `u = z`, repeatedly replace `u` by `(u∗z)⊙u`, which turns `T(u)` into
/// `z⊙T(u)`. Since the left translation by `z` has finite order, `z` is
/// reached within `|LMlt|` steps.
///
/// Returns the preimage and the number of steps taken.
pub fn t_preimage_by_iteration(cs: &LeftQuasigroup, z: usize) -> Option<(usize, usize)> {
    let bound = cs.lmlt().order();
    let mut u = z;
    let mut value = cs.op(z, z);
    let mut steps = 1;
    while value != z {
        if steps > bound {
            return None;
        }
        u = cs.op(cs.ldiv(u, z), u);
        value = cs.op(z, value);
        debug_assert_eq!(cs.op(u, u), value);
        steps += 1;
    }
    Some((u, steps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lq(rows: &[&[usize]]) -> LeftQuasigroup {
        LeftQuasigroup::from_table(
            BinaryOpTable::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn projection_cycle_set() {
        let p = LeftQuasigroup::projection(3);
        assert!(is_right_cyclic(&p).holds());
        assert!(is_nondegenerate(&p));
        assert!(kon1_check(&p).holds());
        let b = birack_from_cycleset(&p).unwrap();
        assert_eq!(b, Birack::projection(3));
        assert_eq!(cycleset_from_birack(&b).unwrap(), p);
        let alpha = alpha_relation(&p);
        assert!(alpha.partition.is_full());
        assert!(alpha.congruence_of_op.holds() && alpha.congruence_of_ldiv.holds());
    }

    #[test]
    fn single_three_cycle_row_is_not_right_cyclic() {
        // L_0 = (0 1 2), L_1 = L_2 = id
        let cs = lq(&[&[1, 2, 0], &[0, 1, 2], &[0, 1, 2]]);
        let v = is_right_cyclic(&cs);
        assert!(!v.holds());
        let (x, y, z) = *v.witness().unwrap();
        let o = |a, b| cs.op(a, b);
        assert_ne!(o(o(x, y), o(x, z)), o(o(y, x), o(y, z)));
        assert!(matches!(birack_from_cycleset(&cs), Err(Error::NotRightCyclic(..))));
    }

    #[test]
    fn non_involutive_birack_rejected() {
        // Lyubashenko birack with f = (0 1), g = id: not involutive
        let b = Birack::from_tables(
            BinaryOpTable::from_fn(2, |_, y| 1 - y),
            BinaryOpTable::from_fn(2, |x, _| x),
        )
        .unwrap();
        assert!(matches!(cycleset_from_birack(&b), Err(Error::NotInvolutive(..))));
    }

    #[test]
    fn preimages_found_for_every_point() {
        let cs = lq(&[&[2, 3, 1, 0], &[2, 3, 1, 0], &[3, 2, 0, 1], &[3, 2, 0, 1]]);
        let diag = cs.diagonal();
        for z in 0..4 {
            let (u, steps) = t_preimage_by_iteration(&cs, z).unwrap();
            assert_eq!(diag[u], z);
            assert!(steps <= cs.lmlt().order());
        }
    }
}
