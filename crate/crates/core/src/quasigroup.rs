//! Left quasigroups `(X, ∗, ∖)`: every left translation of `∗` is a bijection
//! and `∖` is its row-inverse.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::table::BinaryOpTable;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeftQuasigroup {
    op: BinaryOpTable,
    ldiv: BinaryOpTable,
}

impl LeftQuasigroup {
    pub fn from_table(op: BinaryOpTable) -> Result<Self> {
        if op.n() == 0 {
            return Err(Error::EmptyCarrier);
        }
        let ldiv = op.left_division()?;
        Ok(LeftQuasigroup { op, ldiv })
    }

    /// Row `x` of the operation is `rows[x]`.
    pub fn from_rows(rows: &[Permutation]) -> Result<Self> {
        LeftQuasigroup::from_table(BinaryOpTable::from_row_permutations(rows)?)
    }

    /// `x ∗ y = y`.
    pub fn projection(n: usize) -> Self {
        LeftQuasigroup::from_table(BinaryOpTable::projection(n, true)).expect("projection rows")
    }

    pub fn n(&self) -> usize {
        self.op.n()
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op.get(x, y)
    }

    #[inline]
    pub fn ldiv(&self, x: usize, y: usize) -> usize {
        self.ldiv.get(x, y)
    }

    pub fn op_table(&self) -> &BinaryOpTable {
        &self.op
    }

    pub fn ldiv_table(&self) -> &BinaryOpTable {
        &self.ldiv
    }

    /// The left quasigroup `(X, ∖, ∗)` with the roles of the operations swapped.
    pub fn dual(&self) -> LeftQuasigroup {
        LeftQuasigroup {
            op: self.ldiv.clone(),
            ldiv: self.op.clone(),
        }
    }

    pub fn left_translation(&self, x: usize) -> Permutation {
        Permutation::from_images_unchecked(self.op.row(x).to_vec())
    }

    pub fn left_translations(&self) -> Vec<Permutation> {
        (0..self.n()).map(|x| self.left_translation(x)).collect()
    }

    pub fn lmlt(&self) -> PermGroup {
        PermGroup::generated(self.n(), &self.left_translations()).expect("non-empty carrier")
    }

    /// `x ↦ x ∗ x`.
    pub fn diagonal(&self) -> Vec<usize> {
        (0..self.n()).map(|x| self.op(x, x)).collect()
    }

    pub fn is_idempotent(&self) -> bool {
        self.op.is_idempotent()
    }
}
