//! Multiplication tables of binary operations on `{0, .., n-1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An `n × n` table; `get(x, y)` is `x ⋆ y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryOpTable {
    n: usize,
    cells: Vec<usize>,
}

impl BinaryOpTable {
    /// Row-major cells; every value must lie in `0..n`.
    pub fn new(n: usize, cells: Vec<usize>) -> Result<Self> {
        if cells.len() != n * n {
            return Err(Error::SizeMismatch {
                expected: n * n,
                found: cells.len(),
            });
        }
        if let Some(&value) = cells.iter().find(|&&v| v >= n) {
            return Err(Error::OutOfRange { value, n });
        }
        Ok(BinaryOpTable { n, cells })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        BinaryOpTable::new(n, rows.concat())
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let cells: Vec<usize> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        assert!(cells.iter().all(|&v| v < n), "table value out of range");
        BinaryOpTable { n, cells }
    }

    /// `x ⋆ y = y` when `right`, otherwise `x ⋆ y = x`.
    pub fn projection(n: usize, right: bool) -> Self {
        if right {
            BinaryOpTable::from_fn(n, |_, y| y)
        } else {
            BinaryOpTable::from_fn(n, |x, _| x)
        }
    }

    /// Table whose row `x` is `perms[x]`.
    pub fn from_row_permutations(perms: &[Permutation]) -> Result<Self> {
        let n = perms.len();
        if let Some(p) = perms.iter().find(|p| p.len() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                found: p.len(),
            });
        }
        Ok(BinaryOpTable {
            n,
            cells: perms.iter().flat_map(|p| p.images().iter().copied()).collect(),
        })
    }

    /// Table whose column `y` is `perms[y]`, i.e. `x ⋆ y = perms[y](x)`.
    pub fn from_column_permutations(perms: &[Permutation]) -> Result<Self> {
        Ok(BinaryOpTable::from_row_permutations(perms)?.transpose())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.cells[x * self.n..(x + 1) * self.n]
    }

    pub fn column(&self, y: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.get(x, y)).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.n.max(1)).take(self.n)
    }

    /// `L_x`, when row `x` is a bijection.
    pub fn row_permutation(&self, x: usize) -> Option<Permutation> {
        Permutation::from_images(self.row(x).to_vec()).ok()
    }

    /// `R_y`, when column `y` is a bijection.
    pub fn column_permutation(&self, y: usize) -> Option<Permutation> {
        Permutation::from_images(self.column(y)).ok()
    }

    /// First row that is not a permutation.
    pub fn first_non_permutation_row(&self) -> Option<usize> {
        (0..self.n).find(|&x| self.row_permutation(x).is_none())
    }

    /// First column that is not a permutation.
    pub fn first_non_permutation_column(&self) -> Option<usize> {
        (0..self.n).find(|&y| self.column_permutation(y).is_none())
    }

    pub fn is_left_quasigroup(&self) -> bool {
        self.first_non_permutation_row().is_none()
    }

    pub fn is_right_quasigroup(&self) -> bool {
        self.first_non_permutation_column().is_none()
    }

    /// Row-inverse table `x \ y = L_x⁻¹(y)`.
    pub fn left_division(&self) -> Result<BinaryOpTable> {
        if let Some(row) = self.first_non_permutation_row() {
            return Err(Error::RowNotPermutation { row });
        }
        let mut cells = vec![0; self.n * self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                cells[x * self.n + self.get(x, y)] = y;
            }
        }
        Ok(BinaryOpTable { n: self.n, cells })
    }

    /// Column-inverse table `x / y = R_y⁻¹(x)`.
    pub fn right_division(&self) -> Result<BinaryOpTable> {
        if let Some(column) = self.first_non_permutation_column() {
            return Err(Error::ColumnNotPermutation { column });
        }
        Ok(self.transpose().left_division()?.transpose())
    }

    pub fn transpose(&self) -> BinaryOpTable {
        BinaryOpTable::from_fn(self.n, |x, y| self.get(y, x))
    }

    /// The same operation after renaming every element `x` to `relabel(x)`.
    pub fn relabel(&self, relabel: &Permutation) -> BinaryOpTable {
        let mut cells = vec![0; self.n * self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                cells[relabel.apply(x) * self.n + relabel.apply(y)] = relabel.apply(self.get(x, y));
            }
        }
        BinaryOpTable { n: self.n, cells }
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.n).all(|x| self.get(x, x) == x)
    }
}

impl fmt::Display for BinaryOpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_and_bad_shape() {
        assert!(matches!(
            BinaryOpTable::new(2, vec![0, 1, 2, 0]),
            Err(Error::OutOfRange { value: 2, n: 2 })
        ));
        assert!(BinaryOpTable::new(2, vec![0, 1, 1]).is_err());
        assert!(BinaryOpTable::from_rows(&[vec![0, 1], vec![0]]).is_err());
    }

    #[test]
    fn divisions_invert() {
        let t = BinaryOpTable::from_rows(&[vec![1, 2, 0], vec![0, 1, 2], vec![2, 1, 0]]).unwrap();
        let ld = t.left_division().unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(t.get(x, ld.get(x, y)), y);
                assert_eq!(ld.get(x, t.get(x, y)), y);
            }
        }
        // column 1 is constant
        assert!(!t.is_right_quasigroup());
        assert_eq!(t.first_non_permutation_column(), Some(1));
        let latin = BinaryOpTable::from_fn(3, |x, y| (x + y) % 3);
        let rd = latin.right_division().unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(latin.get(rd.get(x, y), y), x);
                assert_eq!(rd.get(latin.get(x, y), y), x);
            }
        }
    }

    #[test]
    fn relabel_is_isomorphism() {
        let t = BinaryOpTable::from_fn(3, |x, y| (2 * x + y) % 3);
        let r = Permutation::from_images(vec![2, 0, 1]).unwrap();
        let u = t.relabel(&r);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(u.get(r.apply(x), r.apply(y)), r.apply(t.get(x, y)));
            }
        }
        assert_eq!(u.relabel(&r.inverse()), t);
    }

    #[test]
    fn row_and_column_permutations() {
        let perms = vec![Permutation::from_images(vec![1, 0]).unwrap(), Permutation::identity(2)];
        let rows = BinaryOpTable::from_row_permutations(&perms).unwrap();
        assert_eq!(rows.row(0), &[1, 0]);
        let cols = BinaryOpTable::from_column_permutations(&perms).unwrap();
        assert_eq!(cols.column(0), vec![1, 0]);
        assert_eq!(cols.column_permutation(1), Some(Permutation::identity(2)));
    }
}
