//! Biracks: a left quasigroup `(X, ∘, ∖∘)` and a right quasigroup
//! `(X, •, /•)` tied together by three mixed identities. A birack is the
//! same thing as a non-degenerate set-theoretic solution
//! `r(x, y) = (x∘y, x•y)` of the Yang–Baxter equation.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{all_permutations, Permutation};
use crate::table::BinaryOpTable;
use crate::verdict::{pairs, triples, Verdict};

/// The individual laws that make up the birack axioms and the classifying
/// properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// Every row of `∘` is a bijection.
    LeftQuasigroup,
    /// Every column of `•` is a bijection.
    RightQuasigroup,
    /// `x∘(y∘z) = (x∘y)∘((x•y)∘z)`
    B1,
    /// `(x∘y)•((x•y)∘z) = (x•(y∘z))∘(y•z)`
    B2,
    /// `(x•y)•z = (x•(y∘z))•(y•z)`
    B3,
    /// `(x∘y)∘(x•y) = x`
    InvolutiveLeft,
    /// `(x∘y)•(x•y) = y`
    InvolutiveRight,
    /// `x∘x = x`
    IdempotentCirc,
    /// `x•x = x`
    IdempotentBullet,
    /// `(x∖∘x)/•(x∖∘x) = x`
    Biquandle,
    /// `(x/•x)∖∘(x/•x) = x`
    BiquandleDual,
}

impl Axiom {
    pub const ALL: [Axiom; 11] = [
        Axiom::LeftQuasigroup,
        Axiom::RightQuasigroup,
        Axiom::B1,
        Axiom::B2,
        Axiom::B3,
        Axiom::InvolutiveLeft,
        Axiom::InvolutiveRight,
        Axiom::IdempotentCirc,
        Axiom::IdempotentBullet,
        Axiom::Biquandle,
        Axiom::BiquandleDual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::LeftQuasigroup => "left_quasigroup",
            Axiom::RightQuasigroup => "right_quasigroup",
            Axiom::B1 => "b1",
            Axiom::B2 => "b2",
            Axiom::B3 => "b3",
            Axiom::InvolutiveLeft => "involutive_left",
            Axiom::InvolutiveRight => "involutive_right",
            Axiom::IdempotentCirc => "idempotent_circ",
            Axiom::IdempotentBullet => "idempotent_bullet",
            Axiom::Biquandle => "biquandle",
            Axiom::BiquandleDual => "biquandle_dual",
        }
    }
}

/// A failing instance of an [`Axiom`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    Row(usize),
    Column(usize),
    Element(usize),
    Pair(usize, usize),
    Triple(usize, usize, usize),
}

impl Witness {
    pub fn coordinates(&self) -> Vec<usize> {
        match *self {
            Witness::Row(x) | Witness::Column(x) | Witness::Element(x) => vec![x],
            Witness::Pair(x, y) => vec![x, y],
            Witness::Triple(x, y, z) => vec![x, y, z],
        }
    }

    /// Comma-separated coordinates shifted by `base`.
    pub fn display_with_base(&self, base: usize) -> String {
        let coords: Vec<String> = self.coordinates().iter().map(|c| (c + base).to_string()).collect();
        coords.join(",")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Witness,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness {
            Witness::Row(r) => write!(f, "row {r} not a permutation"),
            Witness::Column(c) => write!(f, "column {c} not a permutation"),
            w => write!(f, "{} fails at ({})", self.axiom.name(), w.display_with_base(0)),
        }
    }
}

/// Read-only access to the four operations; lets the law checks run on raw
/// tables before a [`Birack`] exists.
struct Ops<'a> {
    circ: &'a BinaryOpTable,
    bullet: &'a BinaryOpTable,
    divisions: Option<(BinaryOpTable, BinaryOpTable)>,
}

impl Ops<'_> {
    fn c(&self, x: usize, y: usize) -> usize {
        self.circ.get(x, y)
    }

    fn b(&self, x: usize, y: usize) -> usize {
        self.bullet.get(x, y)
    }

    fn check(&self, axiom: Axiom) -> Option<Verdict<Witness>> {
        let n = self.circ.n();
        let triple = |law: &dyn Fn(usize, usize, usize) -> bool| {
            Verdict::first_failure(triples(n), |&(x, y, z)| law(x, y, z)).map(|(x, y, z)| Witness::Triple(x, y, z))
        };
        let pair = |law: &dyn Fn(usize, usize) -> bool| {
            Verdict::first_failure(pairs(n), |&(x, y)| law(x, y)).map(|(x, y)| Witness::Pair(x, y))
        };
        let element = |law: &dyn Fn(usize) -> bool| Verdict::first_failure(0..n, |&x| law(x)).map(Witness::Element);
        Some(match axiom {
            Axiom::LeftQuasigroup => match self.circ.first_non_permutation_row() {
                Some(r) => Verdict::Fails(Witness::Row(r)),
                None => Verdict::Holds,
            },
            Axiom::RightQuasigroup => match self.bullet.first_non_permutation_column() {
                Some(c) => Verdict::Fails(Witness::Column(c)),
                None => Verdict::Holds,
            },
            Axiom::B1 => triple(&|x, y, z| self.c(x, self.c(y, z)) == self.c(self.c(x, y), self.c(self.b(x, y), z))),
            Axiom::B2 => triple(&|x, y, z| {
                self.b(self.c(x, y), self.c(self.b(x, y), z)) == self.c(self.b(x, self.c(y, z)), self.b(y, z))
            }),
            Axiom::B3 => triple(&|x, y, z| self.b(self.b(x, y), z) == self.b(self.b(x, self.c(y, z)), self.b(y, z))),
            Axiom::InvolutiveLeft => pair(&|x, y| self.c(self.c(x, y), self.b(x, y)) == x),
            Axiom::InvolutiveRight => pair(&|x, y| self.b(self.c(x, y), self.b(x, y)) == y),
            Axiom::IdempotentCirc => element(&|x| self.c(x, x) == x),
            Axiom::IdempotentBullet => element(&|x| self.b(x, x) == x),
            Axiom::Biquandle => {
                let (ld, rd) = self.divisions.as_ref()?;
                element(&|x| {
                    let t = ld.get(x, x);
                    rd.get(t, t) == x
                })
            }
            Axiom::BiquandleDual => {
                let (ld, rd) = self.divisions.as_ref()?;
                element(&|x| {
                    let s = rd.get(x, x);
                    ld.get(s, s) == x
                })
            }
        })
    }
}

/// Per-axiom verdicts for a pair of raw tables. Nothing short-circuits: all
/// laws are evaluated. The biquandle laws need both divisions and are `None`
/// unless both quasigroup conditions hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub left_quasigroup: Verdict<Witness>,
    pub right_quasigroup: Verdict<Witness>,
    pub b1: Verdict<Witness>,
    pub b2: Verdict<Witness>,
    pub b3: Verdict<Witness>,
    pub involutive_left: Verdict<Witness>,
    pub involutive_right: Verdict<Witness>,
    pub idempotent_circ: Verdict<Witness>,
    pub idempotent_bullet: Verdict<Witness>,
    pub biquandle: Option<Verdict<Witness>>,
    pub biquandle_dual: Option<Verdict<Witness>>,
}

impl AxiomReport {
    pub fn get(&self, axiom: Axiom) -> Option<&Verdict<Witness>> {
        match axiom {
            Axiom::LeftQuasigroup => Some(&self.left_quasigroup),
            Axiom::RightQuasigroup => Some(&self.right_quasigroup),
            Axiom::B1 => Some(&self.b1),
            Axiom::B2 => Some(&self.b2),
            Axiom::B3 => Some(&self.b3),
            Axiom::InvolutiveLeft => Some(&self.involutive_left),
            Axiom::InvolutiveRight => Some(&self.involutive_right),
            Axiom::IdempotentCirc => Some(&self.idempotent_circ),
            Axiom::IdempotentBullet => Some(&self.idempotent_bullet),
            Axiom::Biquandle => self.biquandle.as_ref(),
            Axiom::BiquandleDual => self.biquandle_dual.as_ref(),
        }
    }

    /// First failing birack axiom, in the order quasigroup laws, b1, b2, b3.
    pub fn first_birack_failure(&self) -> Option<AxiomFailure> {
        [
            Axiom::LeftQuasigroup,
            Axiom::RightQuasigroup,
            Axiom::B1,
            Axiom::B2,
            Axiom::B3,
        ]
        .into_iter()
        .find_map(|axiom| {
            self.get(axiom)?
                .witness()
                .map(|&witness| AxiomFailure { axiom, witness })
        })
    }

    pub fn is_birack(&self) -> bool {
        self.first_birack_failure().is_none()
    }

    pub fn braid_identities_hold(&self) -> bool {
        self.b1.holds() && self.b2.holds() && self.b3.holds()
    }

    pub fn is_involutive(&self) -> bool {
        self.involutive_left.holds() && self.involutive_right.holds()
    }

    pub fn is_square_free(&self) -> bool {
        self.idempotent_circ.holds() && self.idempotent_bullet.holds()
    }
}

fn same_size(circ: &BinaryOpTable, bullet: &BinaryOpTable) -> Result<()> {
    if circ.n() != bullet.n() {
        return Err(Error::SizeMismatch {
            expected: circ.n(),
            found: bullet.n(),
        });
    }
    Ok(())
}

/// Evaluates every axiom on the raw tables.
pub fn check_axioms(circ: &BinaryOpTable, bullet: &BinaryOpTable) -> Result<AxiomReport> {
    same_size(circ, bullet)?;
    let divisions = circ.left_division().ok().zip(bullet.right_division().ok());
    let ops = Ops {
        circ,
        bullet,
        divisions,
    };
    let get = |a| ops.check(a).expect("law needs no divisions");
    Ok(AxiomReport {
        left_quasigroup: get(Axiom::LeftQuasigroup),
        right_quasigroup: get(Axiom::RightQuasigroup),
        b1: get(Axiom::B1),
        b2: get(Axiom::B2),
        b3: get(Axiom::B3),
        involutive_left: get(Axiom::InvolutiveLeft),
        involutive_right: get(Axiom::InvolutiveRight),
        idempotent_circ: get(Axiom::IdempotentCirc),
        idempotent_bullet: get(Axiom::IdempotentBullet),
        biquandle: ops.check(Axiom::Biquandle),
        biquandle_dual: ops.check(Axiom::BiquandleDual),
    })
}

/// A validated birack. Existence of a value implies every birack axiom holds;
/// both division tables are derived once at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Birack {
    circ: BinaryOpTable,
    bullet: BinaryOpTable,
    ld_circ: BinaryOpTable,
    rd_bullet: BinaryOpTable,
}

/// Flags of a birack that are expressible as identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Classification {
    pub involutive: bool,
    pub square_free: bool,
    pub biquandle: bool,
}

/// A map `X → X` such as `T: x ↦ x∖∘x`, together with whether it is a bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalMap {
    pub images: Vec<usize>,
}

impl DiagonalMap {
    pub fn is_bijective(&self) -> bool {
        self.as_permutation().is_some()
    }

    pub fn as_permutation(&self) -> Option<Permutation> {
        Permutation::from_images(self.images.clone()).ok()
    }
}

impl Birack {
    /// Validates the tables in the order: row bijectivity of `∘`, column
    /// bijectivity of `•`, then b1, b2, b3. The error names the first
    /// failing law and its smallest witness.
    pub fn from_tables(circ: BinaryOpTable, bullet: BinaryOpTable) -> Result<Birack> {
        same_size(&circ, &bullet)?;
        if circ.n() == 0 {
            return Err(Error::EmptyCarrier);
        }
        let ops = Ops {
            circ: &circ,
            bullet: &bullet,
            divisions: None,
        };
        for axiom in [
            Axiom::LeftQuasigroup,
            Axiom::RightQuasigroup,
            Axiom::B1,
            Axiom::B2,
            Axiom::B3,
        ] {
            if let Some(Verdict::Fails(witness)) = ops.check(axiom) {
                return Err(Error::NotBirack(AxiomFailure { axiom, witness }));
            }
        }
        let ld_circ = circ.left_division()?;
        let rd_bullet = bullet.right_division()?;
        Ok(Birack {
            circ,
            bullet,
            ld_circ,
            rd_bullet,
        })
    }

    /// `x∘y = y`, `x•y = x`: the solution `r(x, y) = (y, x)`.
    pub fn projection(n: usize) -> Birack {
        Birack::from_tables(BinaryOpTable::projection(n, true), BinaryOpTable::projection(n, false))
            .expect("projection birack")
    }

    pub fn n(&self) -> usize {
        self.circ.n()
    }

    #[inline]
    pub fn circ(&self, x: usize, y: usize) -> usize {
        self.circ.get(x, y)
    }

    #[inline]
    pub fn bullet(&self, x: usize, y: usize) -> usize {
        self.bullet.get(x, y)
    }

    /// `x ∖∘ y = L_x⁻¹(y)`.
    #[inline]
    pub fn ld_circ(&self, x: usize, y: usize) -> usize {
        self.ld_circ.get(x, y)
    }

    /// `x /• y = R_y⁻¹(x)`.
    #[inline]
    pub fn rd_bullet(&self, x: usize, y: usize) -> usize {
        self.rd_bullet.get(x, y)
    }

    pub fn circ_table(&self) -> &BinaryOpTable {
        &self.circ
    }

    pub fn bullet_table(&self) -> &BinaryOpTable {
        &self.bullet
    }

    pub fn ld_circ_table(&self) -> &BinaryOpTable {
        &self.ld_circ
    }

    pub fn rd_bullet_table(&self) -> &BinaryOpTable {
        &self.rd_bullet
    }

    pub fn check_axioms(&self) -> AxiomReport {
        check_axioms(&self.circ, &self.bullet).expect("sizes agree")
    }

    /// `L_x: y ↦ x∘y`.
    pub fn left_translation(&self, x: usize) -> Permutation {
        Permutation::from_images_unchecked(self.circ.row(x).to_vec())
    }

    /// `R_x: y ↦ y•x`.
    pub fn right_translation(&self, x: usize) -> Permutation {
        Permutation::from_images_unchecked(self.bullet.column(x))
    }

    pub fn left_translations(&self) -> Vec<Permutation> {
        (0..self.n()).map(|x| self.left_translation(x)).collect()
    }

    pub fn right_translations(&self) -> Vec<Permutation> {
        (0..self.n()).map(|x| self.right_translation(x)).collect()
    }

    pub fn lmlt(&self) -> PermGroup {
        PermGroup::generated(self.n(), &self.left_translations()).expect("non-empty carrier")
    }

    pub fn rmlt(&self) -> PermGroup {
        PermGroup::generated(self.n(), &self.right_translations()).expect("non-empty carrier")
    }

    pub fn solution(&self) -> SolutionView {
        SolutionView {
            sigma: self.circ.clone(),
            tau: self.bullet.clone(),
        }
    }

    /// Involutivity is computed twice, from the two identities and from
    /// `r² = id`; the two must agree.
    pub fn classify(&self) -> Classification {
        let report = self.check_axioms();
        let by_identities = report.is_involutive();
        let by_square = self.solution().is_involutive();
        assert_eq!(
            by_identities, by_square,
            "involutivity identities disagree with r^2 = id"
        );
        Classification {
            involutive: by_identities,
            square_free: report.is_square_free(),
            biquandle: report.biquandle.as_ref().is_some_and(Verdict::holds),
        }
    }

    /// `T: x ↦ x∖∘x`.
    pub fn t_map(&self) -> DiagonalMap {
        let t = DiagonalMap {
            images: (0..self.n()).map(|x| self.ld_circ(x, x)).collect(),
        };
        self.check_mutual_inverse(&t);
        t
    }

    /// `S: x ↦ x/•x`.
    pub fn s_map(&self) -> DiagonalMap {
        DiagonalMap {
            images: (0..self.n()).map(|x| self.rd_bullet(x, x)).collect(),
        }
    }

    fn check_mutual_inverse(&self, t: &DiagonalMap) {
        let report = self.check_axioms();
        if report.biquandle.as_ref().is_some_and(Verdict::holds) {
            let s = self.s_map();
            for x in 0..self.n() {
                assert_eq!(s.images[t.images[x]], x, "S∘T is not the identity");
                assert_eq!(t.images[s.images[x]], x, "T∘S is not the identity");
            }
        }
    }

    /// `(y∖∘x)/•(x∖∘y) = x`; equivalent, over all `x, y`, to `involutive_left`.
    pub fn division_identity_left(&self) -> Verdict<(usize, usize)> {
        Verdict::first_failure(pairs(self.n()), |&(x, y)| {
            self.rd_bullet(self.ld_circ(y, x), self.ld_circ(x, y)) == x
        })
    }

    /// `(x/•y)∖∘(y/•x) = y`; equivalent, over all `x, y`, to `involutive_right`.
    pub fn division_identity_right(&self) -> Verdict<(usize, usize)> {
        Verdict::first_failure(pairs(self.n()), |&(x, y)| {
            self.ld_circ(self.rd_bullet(x, y), self.rd_bullet(y, x)) == y
        })
    }

    /// The isomorphic birack obtained by renaming `x` to `relabel(x)`.
    pub fn relabel(&self, relabel: &Permutation) -> Birack {
        Birack {
            circ: self.circ.relabel(relabel),
            bullet: self.bullet.relabel(relabel),
            ld_circ: self.ld_circ.relabel(relabel),
            rd_bullet: self.rd_bullet.relabel(relabel),
        }
    }

    /// The lexicographically least relabeling; equal for isomorphic biracks.
    pub fn canonical_form(&self) -> Birack {
        all_permutations(self.n())
            .iter()
            .map(|p| self.relabel(p))
            .min_by(|a, b| (a.circ.cells(), a.bullet.cells()).cmp(&(b.circ.cells(), b.bullet.cells())))
            .expect("at least one relabeling")
    }
}

/// The pair of maps `σ(x, y) = x∘y`, `τ(x, y) = x•y`, without any
/// validation. Used to test the braid relation on arbitrary maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionView {
    pub sigma: BinaryOpTable,
    pub tau: BinaryOpTable,
}

impl SolutionView {
    pub fn from_maps(sigma: BinaryOpTable, tau: BinaryOpTable) -> Result<SolutionView> {
        same_size(&sigma, &tau)?;
        Ok(SolutionView { sigma, tau })
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    /// `r(x, y) = (σ(x, y), τ(x, y))`.
    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.sigma.get(x, y), self.tau.get(x, y))
    }

    /// `(id×r)(r×id)(id×r) = (r×id)(id×r)(r×id)` on every triple.
    pub fn braid_check(&self) -> Verdict<(usize, usize, usize)> {
        let r12 = |(x, y, z): (usize, usize, usize)| {
            let (a, b) = self.apply(x, y);
            (a, b, z)
        };
        let r23 = |(x, y, z): (usize, usize, usize)| {
            let (b, c) = self.apply(y, z);
            (x, b, c)
        };
        Verdict::first_failure(triples(self.n()), |&t| r23(r12(r23(t))) == r12(r23(r12(t))))
    }

    /// `r² = id`.
    pub fn is_involutive(&self) -> bool {
        pairs(self.n()).all(|(x, y)| {
            let (u, v) = self.apply(x, y);
            self.apply(u, v) == (x, y)
        })
    }
}

/// Convenience wrapper matching the free-function form of the braid check.
pub fn braid_check(s: &SolutionView) -> Verdict<(usize, usize, usize)> {
    s.braid_check()
}
