//! Congruences of a single binary operation and the induced quotient tables.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::table::BinaryOpTable;
use crate::verdict::{quadruples, Verdict};

fn check_sizes(op: &BinaryOpTable, part: &Partition) -> Result<()> {
    if op.n() != part.len() {
        return Err(Error::SizeMismatch {
            expected: op.n(),
            found: part.len(),
        });
    }
    Ok(())
}

/// Whether `x ≡ y` and `z ≡ t` imply `x⋆z ≡ y⋆t`. On failure the witness is
/// the lexicographically smallest offending `[x, y, z, t]`.
pub fn partition_is_congruence(op: &BinaryOpTable, part: &Partition) -> Result<Verdict<[usize; 4]>> {
    check_sizes(op, part)?;
    let n = op.n();
    let reps = part.representatives();
    let compatible = (0..n).all(|x| {
        (0..n).all(|z| {
            let rx = reps[part.class_of(x)];
            let rz = reps[part.class_of(z)];
            part.related(op.get(x, z), op.get(rx, rz))
        })
    });
    if compatible {
        return Ok(Verdict::Holds);
    }
    // Slow path only to locate the smallest witness.
    Ok(Verdict::first_failure(quadruples(n), |&[x, y, z, t]| {
        !(part.related(x, y) && part.related(z, t)) || part.related(op.get(x, z), op.get(y, t))
    }))
}

/// Table on class labels with `[x] ⋆ [z] = [x ⋆ z]`.
pub fn quotient_op(op: &BinaryOpTable, part: &Partition) -> Result<BinaryOpTable> {
    if let Verdict::Fails(w) = partition_is_congruence(op, part)? {
        return Err(Error::NotCongruence(format!("compatibility fails at {w:?}")));
    }
    let reps = part.representatives();
    Ok(BinaryOpTable::from_fn(reps.len(), |a, b| {
        part.class_of(op.get(reps[a], reps[b]))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_full_partitions() {
        let op = BinaryOpTable::from_fn(4, |x, y| (x * y + 1) % 4);
        assert!(partition_is_congruence(&op, &Partition::identity(4)).unwrap().holds());
        assert!(partition_is_congruence(&op, &Partition::full(4)).unwrap().holds());
        let q = quotient_op(&op, &Partition::identity(4)).unwrap();
        assert_eq!(q, op);
        let one = quotient_op(&op, &Partition::full(4)).unwrap();
        assert_eq!(one.n(), 1);
    }

    #[test]
    fn modular_reduction_is_congruence() {
        let op = BinaryOpTable::from_fn(6, |x, y| (x + 2 * y) % 6);
        let mod3 = Partition::by_key(6, |x| x % 3);
        assert!(partition_is_congruence(&op, &mod3).unwrap().holds());
        let q = quotient_op(&op, &mod3).unwrap();
        assert_eq!(q, BinaryOpTable::from_fn(3, |x, y| (x + 2 * y) % 3));
    }

    #[test]
    fn smallest_witness_and_rejection() {
        let op = BinaryOpTable::from_fn(3, |x, _| x);
        let part = Partition::from_labels([0, 0, 1]);
        // x ⋆ z = x, so any related pair maps to related results: congruence
        assert!(partition_is_congruence(&op, &part).unwrap().holds());
        let swap = BinaryOpTable::from_fn(3, |x, y| if x == 0 { y } else { (y + 1) % 3 });
        let v = partition_is_congruence(&swap, &part).unwrap();
        assert_eq!(v, Verdict::Fails([0, 1, 0, 1]));
        assert!(quotient_op(&swap, &part).is_err());
        assert!(partition_is_congruence(&swap, &Partition::identity(2)).is_err());
    }
}
