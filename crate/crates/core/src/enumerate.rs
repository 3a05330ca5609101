//! Exhaustive generation of small left quasigroups, biracks, cycle sets and modes.
//!
//! Every enumeration is deterministic: work is split into independent chunks
//! that may run on a thread pool, and results are concatenated in chunk order,
//! so the output does not depend on the number of workers.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::birack::Birack;
use crate::cycleset::is_right_cyclic;
use crate::error::{Error, Result};
use crate::modes::{is_mode, Groupoid};
use crate::perm::{all_permutations, Permutation};
use crate::quasigroup::LeftQuasigroup;
use crate::table::BinaryOpTable;

/// Environment variable read by the command-line tool to override every bound.
pub const BOUND_ENV_VAR: &str = "BIRACK_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    LeftQuasigroups,
    Biracks,
    Cyclesets,
    Modes,
    /// Pairs of a left-quasigroup table and a right-quasigroup table.
    TablePairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub left_quasigroups: usize,
    pub biracks: usize,
    pub cyclesets: usize,
    pub modes: usize,
    pub table_pairs: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            left_quasigroups: 4,
            biracks: 4,
            cyclesets: 4,
            modes: 4,
            table_pairs: 3,
        }
    }
}

impl Bounds {
    pub fn uniform(n: usize) -> Self {
        Bounds {
            left_quasigroups: n,
            biracks: n,
            cyclesets: n,
            modes: n,
            table_pairs: n,
        }
    }

    pub fn get(&self, domain: Domain) -> usize {
        match domain {
            Domain::LeftQuasigroups => self.left_quasigroups,
            Domain::Biracks => self.biracks,
            Domain::Cyclesets => self.cyclesets,
            Domain::Modes => self.modes,
            Domain::TablePairs => self.table_pairs,
        }
    }

    pub fn check(&self, domain: Domain, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let bound = self.get(domain);
        if n > bound {
            return Err(Error::BoundExceeded { n, bound });
        }
        Ok(())
    }
}

/// Extra conditions on enumerated biracks. Every birack already satisfies
/// the quasigroup conditions and the three birack laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumFilter {
    pub n: usize,
    pub involutive: bool,
    pub square_free: bool,
    /// `(X, ∖∘)` is right cyclic.
    pub right_cyclic: bool,
    /// `(X, ∘)` is a mode.
    pub mode: bool,
    /// Keep only the first birack of each isomorphism class.
    pub up_to_isomorphism: bool,
}

impl EnumFilter {
    pub fn all(n: usize) -> Self {
        EnumFilter {
            n,
            ..EnumFilter::default()
        }
    }

    fn accepts(&self, b: &Birack) -> bool {
        let c = b.classify();
        (!self.involutive || c.involutive)
            && (!self.square_free || c.square_free)
            && (!self.right_cyclic
                || is_right_cyclic(&LeftQuasigroup::from_table(b.ld_circ_table().clone()).expect("division rows"))
                    .holds())
            && (!self.mode || is_mode(&Groupoid::from_table(b.circ_table().clone()).expect("non-empty")))
    }
}

#[derive(Clone, Default)]
pub struct Enumerator {
    bounds: Bounds,
    pool: Option<Arc<rayon::ThreadPool>>,
}

impl std::fmt::Debug for Enumerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Enumerator")
            .field("bounds", &self.bounds)
            .field("jobs", &self.pool.as_ref().map(|p| p.current_num_threads()))
            .finish()
    }
}

impl Enumerator {
    /// `jobs = 0` uses the global rayon pool.
    pub fn new(bounds: Bounds, jobs: usize) -> Self {
        let pool = (jobs > 0).then(|| {
            Arc::new(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .expect("thread pool"),
            )
        });
        Enumerator { bounds, pool }
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match &self.pool {
            Some(pool) => pool.install(f),
            None => f(),
        }
    }

    /// All `(n!)^n` left quasigroups, ordered lexicographically by table.
    pub fn left_quasigroups(&self, n: usize) -> Result<LeftQuasigroups> {
        self.bounds.check(Domain::LeftQuasigroups, n)?;
        Ok(LeftQuasigroups::new(n))
    }

    /// All biracks on `n` points passing `filter`, grouped by `∘` table in
    /// lexicographic order and then by `•` table in column-major
    /// lexicographic order.
    pub fn biracks(&self, filter: &EnumFilter) -> Result<Vec<Birack>> {
        let n = filter.n;
        self.bounds.check(Domain::Biracks, n)?;
        let space = LeftQuasigroups::new(n);
        let chunks: Vec<Vec<Birack>> = self.install(|| {
            (0..space.total)
                .into_par_iter()
                .map(|i| {
                    let mut found = biracks_over(&space.at(i));
                    found.retain(|b| filter.accepts(b));
                    found
                })
                .collect()
        });
        let all = chunks.into_iter().flatten();
        Ok(if filter.up_to_isomorphism {
            let mut seen = HashSet::new();
            all.filter(|b| seen.insert(b.canonical_form())).collect()
        } else {
            all.collect()
        })
    }

    /// Right-cyclic left quasigroups, in the order of [`Enumerator::left_quasigroups`].
    pub fn cyclesets(&self, n: usize) -> Result<Vec<LeftQuasigroup>> {
        self.bounds.check(Domain::Cyclesets, n)?;
        let space = LeftQuasigroups::new(n);
        Ok(self.install(|| {
            (0..space.total)
                .into_par_iter()
                .map(|i| space.at(i))
                .filter(|q| is_right_cyclic(q).holds())
                .collect()
        }))
    }

    /// Idempotent medial groupoids, lexicographic by table.
    pub fn modes(&self, n: usize) -> Result<Vec<Groupoid>> {
        self.bounds.check(Domain::Modes, n)?;
        // The first row's off-diagonal entries split the search.
        let prefixes = n.pow(n as u32 - 1);
        let chunks: Vec<Vec<Groupoid>> = self.install(|| {
            (0..prefixes)
                .into_par_iter()
                .map(|p| {
                    let mut search = ModeSearch::new(n);
                    let mut rest = p;
                    for y in (1..n).rev() {
                        search.cells[y] = rest % n;
                        rest /= n;
                    }
                    if search.consistent() {
                        search.run(n);
                    }
                    search.found
                })
                .collect()
        });
        Ok(chunks.into_iter().flatten().collect())
    }

    /// Every pair of a left-quasigroup table and a right-quasigroup table,
    /// ordered by the first table and then the second.
    pub fn table_pairs(&self, n: usize) -> Result<Vec<(BinaryOpTable, BinaryOpTable)>> {
        self.bounds.check(Domain::TablePairs, n)?;
        let lefts: Vec<BinaryOpTable> = LeftQuasigroups::new(n).map(|q| q.op_table().clone()).collect();
        let rights: Vec<BinaryOpTable> = lefts.iter().map(BinaryOpTable::transpose).collect();
        let mut rights_sorted = rights;
        rights_sorted.sort();
        Ok(lefts
            .iter()
            .flat_map(|l| rights_sorted.iter().map(move |r| (l.clone(), r.clone())))
            .collect())
    }
}

/// Streams left quasigroups on `n` points; row `0` varies slowest.
#[derive(Debug, Clone)]
pub struct LeftQuasigroups {
    n: usize,
    perms: Vec<Permutation>,
    total: usize,
    next: usize,
}

impl LeftQuasigroups {
    fn new(n: usize) -> Self {
        let perms = all_permutations(n);
        let total = perms.len().pow(n as u32);
        LeftQuasigroups {
            n,
            perms,
            total,
            next: 0,
        }
    }

    pub fn total(&self) -> usize {
        self.total
    }

    fn at(&self, mut index: usize) -> LeftQuasigroup {
        let k = self.perms.len();
        let mut rows = vec![0; self.n];
        for slot in rows.iter_mut().rev() {
            *slot = index % k;
            index /= k;
        }
        let rows: Vec<Permutation> = rows.into_iter().map(|r| self.perms[r].clone()).collect();
        LeftQuasigroup::from_rows(&rows).expect("rows are permutations")
    }
}

impl Iterator for LeftQuasigroups {
    type Item = LeftQuasigroup;

    fn next(&mut self) -> Option<LeftQuasigroup> {
        if self.next == self.total {
            return None;
        }
        self.next += 1;
        Some(self.at(self.next - 1))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.total - self.next;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LeftQuasigroups {}

const UNSET: usize = usize::MAX;

/// Backtracking search for the `•` tables completing a fixed `∘`.
///
/// Law b1 says `L_{x∘y} L_{x•y} = L_x L_y`, which pins `x•y` to the
/// elements whose left translation is `L_{x∘y}⁻¹ L_x L_y`. Cells are filled
/// column by column keeping columns injective; b2 and b3 are checked on
/// every triple whose cells are already set whenever a column completes.
struct BulletSearch<'a> {
    n: usize,
    circ: &'a LeftQuasigroup,
    candidates: Vec<Vec<usize>>,
    bullet: Vec<usize>,
    found: Vec<Birack>,
}

fn biracks_over(circ: &LeftQuasigroup) -> Vec<Birack> {
    let n = circ.n();
    let mut candidates = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let xy = circ.op(x, y);
            let target: Vec<usize> = (0..n).map(|z| circ.ldiv(xy, circ.op(x, circ.op(y, z)))).collect();
            let cands: Vec<usize> = (0..n)
                .filter(|&w| circ.op_table().row(w) == target.as_slice())
                .collect();
            if cands.is_empty() {
                return Vec::new();
            }
            candidates.push(cands);
        }
    }
    let mut search = BulletSearch {
        n,
        circ,
        candidates,
        bullet: vec![UNSET; n * n],
        found: Vec::new(),
    };
    search.fill(0, 0);
    search.found
}

impl BulletSearch<'_> {
    fn get(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.bullet[x * self.n + y];
        (v != UNSET).then_some(v)
    }

    fn mixed_laws_hold_where_defined(&self) -> bool {
        let n = self.n;
        let c = |x, y| self.circ.op(x, y);
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = self.get(x, y) else { continue };
                for z in 0..n {
                    let (Some(x_yz), Some(yz)) = (self.get(x, c(y, z)), self.get(y, z)) else {
                        continue;
                    };
                    if let (Some(l), Some(r)) = (self.get(xy, z), self.get(x_yz, yz)) {
                        if l != r {
                            return false;
                        }
                    }
                    if let Some(l) = self.get(c(x, y), c(xy, z)) {
                        if l != c(x_yz, yz) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, x: usize, y: usize) {
        let n = self.n;
        if y == n {
            let bullet = BinaryOpTable::new(n, self.bullet.clone()).expect("cells in range");
            let b = Birack::from_tables(self.circ.op_table().clone(), bullet).expect("search only completes biracks");
            self.found.push(b);
            return;
        }
        let (nx, ny) = if x + 1 == n { (0, y + 1) } else { (x + 1, y) };
        for i in 0..self.candidates[x * n + y].len() {
            let w = self.candidates[x * n + y][i];
            if (0..x).any(|u| self.bullet[u * n + y] == w) {
                continue;
            }
            self.bullet[x * n + y] = w;
            if nx != 0 || self.mixed_laws_hold_where_defined() {
                self.fill(nx, ny);
            }
        }
        self.bullet[x * n + y] = UNSET;
    }
}

/// Row-major backtracking over idempotent tables with mediality checked on
/// every quadruple whose cells are set.
struct ModeSearch {
    n: usize,
    cells: Vec<usize>,
    found: Vec<Groupoid>,
}

impl ModeSearch {
    fn new(n: usize) -> Self {
        let mut cells = vec![UNSET; n * n];
        for x in 0..n {
            cells[x * n + x] = x;
        }
        ModeSearch {
            n,
            cells,
            found: Vec::new(),
        }
    }

    fn get(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.cells[x * self.n + y];
        (v != UNSET).then_some(v)
    }

    fn consistent(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = self.get(x, y) else { continue };
                for z in 0..n {
                    let Some(xz) = self.get(x, z) else { continue };
                    for t in 0..n {
                        let (Some(zt), Some(yt)) = (self.get(z, t), self.get(y, t)) else {
                            continue;
                        };
                        if let (Some(l), Some(r)) = (self.get(xy, zt), self.get(xz, yt)) {
                            if l != r {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Fills cells from index `from` onwards.
    fn run(&mut self, from: usize) {
        let n = self.n;
        let Some(k) = (from..n * n).find(|&k| self.cells[k] == UNSET) else {
            let table = BinaryOpTable::new(n, self.cells.clone()).expect("cells in range");
            self.found.push(Groupoid::from_table(table).expect("non-empty"));
            return;
        };
        for v in 0..n {
            self.cells[k] = v;
            if self.consistent() {
                self.run(k + 1);
            }
        }
        self.cells[k] = UNSET;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birack::check_axioms;
    use crate::modes::mode_flags;

    fn enumerator() -> Enumerator {
        Enumerator::default()
    }

    #[test]
    fn left_quasigroup_counts() {
        let e = enumerator();
        assert_eq!(e.left_quasigroups(1).unwrap().count(), 1);
        assert_eq!(e.left_quasigroups(2).unwrap().count(), 4);
        assert_eq!(e.left_quasigroups(3).unwrap().count(), 216);
        let tables: Vec<_> = e.left_quasigroups(3).unwrap().map(|q| q.op_table().clone()).collect();
        assert!(tables.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn bounds() {
        let e = enumerator();
        assert_eq!(
            e.left_quasigroups(9).unwrap_err(),
            Error::BoundExceeded { n: 9, bound: 4 }
        );
        assert_eq!(
            e.biracks(&EnumFilter::all(5)).unwrap_err(),
            Error::BoundExceeded { n: 5, bound: 4 }
        );
        assert_eq!(e.biracks(&EnumFilter::all(0)).unwrap_err(), Error::EmptyCarrier);
        let wide = Enumerator::new(Bounds::uniform(5), 1);
        assert!(wide.bounds().check(Domain::Biracks, 5).is_ok());
    }

    /// Every `(∘, •)` pair of `n`-element tables with entries in range,
    /// filtered by the axiom checker; no structure is assumed.
    fn unpruned_oracle(n: usize) -> Vec<(BinaryOpTable, BinaryOpTable)> {
        let cells = n * n;
        let all_tables: Vec<BinaryOpTable> = (0..n.pow(cells as u32))
            .map(|mut i| {
                let mut c = vec![0; cells];
                for slot in c.iter_mut().rev() {
                    *slot = i % n;
                    i /= n;
                }
                BinaryOpTable::new(n, c).unwrap()
            })
            .collect();
        let mut out = Vec::new();
        for circ in &all_tables {
            for bullet in &all_tables {
                if check_axioms(circ, bullet).unwrap().is_birack() {
                    out.push((circ.clone(), bullet.clone()));
                }
            }
        }
        out
    }

    #[test]
    fn two_element_biracks_match_oracle() {
        let mut oracle = unpruned_oracle(2);
        let mut found: Vec<_> = enumerator()
            .biracks(&EnumFilter::all(2))
            .unwrap()
            .into_iter()
            .map(|b| (b.circ_table().clone(), b.bullet_table().clone()))
            .collect();
        oracle.sort();
        found.sort();
        assert_eq!(found, oracle);
        let involutive = oracle
            .iter()
            .filter(|(c, b)| check_axioms(c, b).unwrap().is_involutive())
            .count();
        let filter = EnumFilter {
            involutive: true,
            ..EnumFilter::all(2)
        };
        assert_eq!(enumerator().biracks(&filter).unwrap().len(), involutive);
    }

    #[test]
    fn three_element_biracks_match_pair_sweep() {
        let e = enumerator();
        let mut expected: Vec<_> = e
            .table_pairs(3)
            .unwrap()
            .into_iter()
            .filter(|(c, b)| check_axioms(c, b).unwrap().is_birack())
            .collect();
        let mut found: Vec<_> = e
            .biracks(&EnumFilter::all(3))
            .unwrap()
            .into_iter()
            .map(|b| (b.circ_table().clone(), b.bullet_table().clone()))
            .collect();
        let len = found.len();
        found.dedup();
        assert_eq!(found.len(), len, "duplicates");
        expected.sort();
        found.sort();
        assert_eq!(found, expected);
    }

    #[test]
    fn single_point() {
        let e = enumerator();
        assert_eq!(e.biracks(&EnumFilter::all(1)).unwrap(), vec![Birack::projection(1)]);
        assert_eq!(e.cyclesets(1).unwrap().len(), 1);
        assert_eq!(e.modes(1).unwrap().len(), 1);
    }

    #[test]
    fn two_element_cycle_sets_by_hand() {
        let oracle = enumerator()
            .left_quasigroups(2)
            .unwrap()
            .filter(|q| {
                let o = |x, y| q.op(x, y);
                (0..2).all(|x| (0..2).all(|y| (0..2).all(|z| o(o(x, y), o(x, z)) == o(o(y, x), o(y, z)))))
            })
            .count();
        assert_eq!(enumerator().cyclesets(2).unwrap().len(), oracle);
    }

    #[test]
    fn modes_match_filtered_tables() {
        for n in 1..=3usize {
            let mut expected = Vec::new();
            let cells = n * n;
            for mut i in 0..n.pow(cells as u32) {
                let mut c = vec![0; cells];
                for slot in c.iter_mut().rev() {
                    *slot = i % n;
                    i /= n;
                }
                let g = Groupoid::from_table(BinaryOpTable::new(n, c).unwrap()).unwrap();
                if mode_flags(&g).is_mode() {
                    expected.push(g);
                }
            }
            assert_eq!(enumerator().modes(n).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let one = Enumerator::new(Bounds::default(), 1)
            .biracks(&EnumFilter::all(3))
            .unwrap();
        let four = Enumerator::new(Bounds::default(), 4)
            .biracks(&EnumFilter::all(3))
            .unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn isomorphism_filter_shrinks() {
        let e = enumerator();
        let raw = e.biracks(&EnumFilter::all(2)).unwrap();
        let iso = e
            .biracks(&EnumFilter {
                up_to_isomorphism: true,
                ..EnumFilter::all(2)
            })
            .unwrap();
        assert!(iso.len() <= raw.len());
        let mut canon: Vec<_> = iso.iter().map(Birack::canonical_form).collect();
        canon.sort();
        canon.dedup();
        assert_eq!(canon.len(), iso.len());
    }
}
