//! Named properties checked exhaustively over enumerated structures.
//!
//! Each property is a statement that must hold for every structure of its
//! source; [`search_counterexample`] either returns the first structure (in
//! enumeration order) that breaks it or reports how many were examined.

use std::fmt;

use rayon::prelude::*;

use crate::birack::{check_axioms, Birack};
use crate::builtin::{builtin, Structure};
use crate::constructions::{affine_structures, permutation_birack, AffineData};
use crate::cycleset::{
    alpha_relation, birack_from_cycleset, cycleset_from_birack, is_nondegenerate, kon1_check, t_preimage_by_iteration,
};
use crate::enumerate::{EnumFilter, Enumerator};
use crate::error::{Error, Result};
use crate::modes::{is_k_reductive, is_quandle, reductivity_degree, rho_k, strong_retraction, Groupoid};
use crate::partition::Partition;
use crate::perm::{all_permutations, Permutation};
use crate::quasigroup::LeftQuasigroup;
use crate::retraction::{
    ess_relation, generalized_retraction, left_translation_relation, proof_identity_suite, quotient_birack,
    retraction_tower, verify_congruence_bruteforce, TowerEnd,
};
use crate::table::BinaryOpTable;
use crate::verdict::pairs;

/// Largest carrier in the construction corpus.
pub const CONSTRUCTION_MAX_N: usize = 8;

/// Highest `k` tried for `ρ_k` and reductivity.
pub const MAX_K: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Biracks,
    InvolutiveBiracks,
    /// Every left-quasigroup table paired with every right-quasigroup table.
    TablePairs,
    Cyclesets,
    Modes,
    Quandles,
    /// Biracks built by the constructions and the named examples.
    Constructions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    /// `≈` is a congruence; its quotient is a birack keeping involutivity and
    /// square-freeness; the tower shrinks strictly.
    Congruence,
    /// As [`Property::Congruence`] over the construction corpus.
    ConstructionCongruence,
    /// The intermediate identities behind the congruence proof.
    Claims,
    /// In involutive biracks, equal `L`, equal `R` and `≈` coincide.
    InvolutiveEquivalence,
    /// The two biquandle identities hold or fail together.
    BiquandleEquivalence,
    /// The braid relation holds exactly when b1, b2 and b3 do.
    BraidEquivalence,
    /// `L_{x∘y} L_{x•y} = L_x L_y`; the division identities match the
    /// involutivity laws; involutive biracks have `S = T⁻¹` and `L_x⁻¹ T = T R_x`.
    TranslationIdentities,
    Nondegeneracy,
    /// cycle set → birack → cycle set is the identity.
    CyclesetRoundTrip,
    /// involutive birack → cycle set → birack is the identity.
    BirackRoundTrip,
    AlphaCongruence,
    /// The diagonal identity and the preimage iteration.
    DiagonalPreimage,
    /// `ρ_k` is a congruence for `k ≤ 4` and its classes are `k`-reductive.
    RhoCongruence,
    /// For `k`-reductive modes, `ρ_0 ⊆ … ⊆ ρ_k` and the `ρ_j` quotient is `(k-j)`-reductive.
    ReductiveChain,
    /// The strong retraction refines equality of left translations.
    StrongRetraction,
}

impl Property {
    pub const ALL: [Property; 15] = [
        Property::Congruence,
        Property::ConstructionCongruence,
        Property::Claims,
        Property::InvolutiveEquivalence,
        Property::BiquandleEquivalence,
        Property::BraidEquivalence,
        Property::TranslationIdentities,
        Property::Nondegeneracy,
        Property::CyclesetRoundTrip,
        Property::BirackRoundTrip,
        Property::AlphaCongruence,
        Property::DiagonalPreimage,
        Property::RhoCongruence,
        Property::ReductiveChain,
        Property::StrongRetraction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Congruence => "congruence",
            Property::ConstructionCongruence => "construction_congruence",
            Property::Claims => "claims",
            Property::InvolutiveEquivalence => "involutive_equivalence",
            Property::BiquandleEquivalence => "biquandle_equivalence",
            Property::BraidEquivalence => "braid_equivalence",
            Property::TranslationIdentities => "translation_identities",
            Property::Nondegeneracy => "nondegeneracy",
            Property::CyclesetRoundTrip => "cycleset_roundtrip",
            Property::BirackRoundTrip => "birack_roundtrip",
            Property::AlphaCongruence => "alpha_congruence",
            Property::DiagonalPreimage => "diagonal_preimage",
            Property::RhoCongruence => "rho_congruence",
            Property::ReductiveChain => "reductive_chain",
            Property::StrongRetraction => "strong_retraction",
        }
    }

    pub fn from_name(name: &str) -> Result<Property> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == name)
            .ok_or_else(|| Error::UnknownProperty(name.to_string()))
    }

    pub fn source(self) -> Source {
        match self {
            Property::Congruence
            | Property::Claims
            | Property::BiquandleEquivalence
            | Property::TranslationIdentities => Source::Biracks,
            Property::ConstructionCongruence => Source::Constructions,
            Property::InvolutiveEquivalence | Property::BirackRoundTrip => Source::InvolutiveBiracks,
            Property::BraidEquivalence => Source::TablePairs,
            Property::Nondegeneracy
            | Property::CyclesetRoundTrip
            | Property::AlphaCongruence
            | Property::DiagonalPreimage => Source::Cyclesets,
            Property::RhoCongruence | Property::ReductiveChain => Source::Modes,
            Property::StrongRetraction => Source::Quandles,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Exhausted {
        n: usize,
        count: usize,
    },
    Violation {
        n: usize,
        /// Position in enumeration order.
        index: usize,
        structure: String,
        reason: String,
    },
}

impl SearchOutcome {
    pub fn is_exhausted(&self) -> bool {
        matches!(self, SearchOutcome::Exhausted { .. })
    }
}

/// The largest size `search_counterexample` accepts for `source`.
pub fn source_bound(e: &Enumerator, source: Source) -> usize {
    let b = e.bounds();
    match source {
        Source::Biracks | Source::InvolutiveBiracks => b.biracks,
        Source::TablePairs => b.table_pairs,
        Source::Cyclesets => b.cyclesets,
        Source::Modes => b.modes,
        Source::Quandles => b.left_quasigroups,
        Source::Constructions => CONSTRUCTION_MAX_N,
    }
}

type Check<T> = fn(&T) -> std::result::Result<(), String>;

fn first_violation<T: Sync>(
    e: &Enumerator,
    n: usize,
    items: &[T],
    check: Check<T>,
    describe: impl Fn(&T) -> String,
) -> SearchOutcome {
    let hit = e.install(|| items.par_iter().position_first(|item| check(item).is_err()));
    match hit {
        None => SearchOutcome::Exhausted { n, count: items.len() },
        Some(index) => SearchOutcome::Violation {
            n,
            index,
            structure: describe(&items[index]),
            reason: check(&items[index]).unwrap_err(),
        },
    }
}

fn describe_tables(tables: &[(&str, &BinaryOpTable)]) -> String {
    tables
        .iter()
        .map(|(name, t)| format!("{name}={:?}", t.rows().collect::<Vec<_>>()))
        .collect::<Vec<_>>()
        .join(" ")
}

fn describe_birack(b: &Birack) -> String {
    describe_tables(&[("circ", b.circ_table()), ("bullet", b.bullet_table())])
}

fn describe_lq(q: &LeftQuasigroup) -> String {
    describe_tables(&[("op", q.op_table())])
}

fn describe_groupoid(g: &Groupoid) -> String {
    describe_tables(&[("op", g.table())])
}

/// Runs `property` over every structure of size `n` from its source.
pub fn search_counterexample(e: &Enumerator, property: Property, n: usize) -> Result<SearchOutcome> {
    let source = property.source();
    let bound = source_bound(e, source);
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let biracks = |involutive| {
        e.biracks(&EnumFilter {
            involutive,
            ..EnumFilter::all(n)
        })
    };
    let outcome = match property {
        Property::Congruence => first_violation(e, n, &biracks(false)?, check_congruence, describe_birack),
        Property::ConstructionCongruence => {
            let corpus: Vec<Birack> = construction_corpus()
                .into_iter()
                .filter(|(_, b)| b.n() == n)
                .map(|(_, b)| b)
                .collect();
            first_violation(e, n, &corpus, check_congruence, describe_birack)
        }
        Property::Claims => first_violation(e, n, &biracks(false)?, check_claims, describe_birack),
        Property::InvolutiveEquivalence => {
            first_violation(e, n, &biracks(true)?, check_involutive_equivalence, describe_birack)
        }
        Property::BiquandleEquivalence => {
            first_violation(e, n, &biracks(false)?, check_biquandle_equivalence, describe_birack)
        }
        Property::TranslationIdentities => {
            first_violation(e, n, &biracks(false)?, check_translation_identities, describe_birack)
        }
        Property::BirackRoundTrip => first_violation(e, n, &biracks(true)?, check_birack_round_trip, describe_birack),
        Property::BraidEquivalence => first_violation(e, n, &e.table_pairs(n)?, check_braid_equivalence, |(c, b)| {
            describe_tables(&[("circ", c), ("bullet", b)])
        }),
        Property::Nondegeneracy => first_violation(e, n, &e.cyclesets(n)?, check_nondegenerate, describe_lq),
        Property::CyclesetRoundTrip => first_violation(e, n, &e.cyclesets(n)?, check_cycleset_round_trip, describe_lq),
        Property::AlphaCongruence => first_violation(e, n, &e.cyclesets(n)?, check_alpha, describe_lq),
        Property::DiagonalPreimage => first_violation(e, n, &e.cyclesets(n)?, check_diagonal_preimage, describe_lq),
        Property::RhoCongruence => first_violation(e, n, &e.modes(n)?, check_rho_congruence, describe_groupoid),
        Property::ReductiveChain => first_violation(e, n, &e.modes(n)?, check_reductive_chain, describe_groupoid),
        Property::StrongRetraction => {
            let quandles: Vec<LeftQuasigroup> = e.left_quasigroups(n)?.filter(is_quandle).collect();
            first_violation(e, n, &quandles, check_strong_retraction, describe_lq)
        }
    };
    Ok(outcome)
}

fn check_congruence(b: &Birack) -> std::result::Result<(), String> {
    let part = generalized_retraction(b);
    if let Some(v) = verify_congruence_bruteforce(b, &part).expect("sizes agree").witness() {
        return Err(format!("≈ is not a congruence: {v}"));
    }
    let q = quotient_birack(b, &part).map_err(|err| format!("quotient rejected: {err}"))?;
    let c = b.classify();
    let qc = q.classify();
    if (c.involutive && !qc.involutive) || (c.square_free && !qc.square_free) {
        return Err("quotient lost involutivity or square-freeness".to_string());
    }
    let tower = retraction_tower(b, b.n());
    let sizes = tower.sizes();
    if sizes.windows(2).any(|w| w[1] >= w[0]) {
        return Err(format!("tower sizes {sizes:?} do not decrease"));
    }
    if matches!(tower.end, TowerEnd::Truncated(_)) {
        return Err("tower did not terminate".to_string());
    }
    Ok(())
}

fn check_claims(b: &Birack) -> std::result::Result<(), String> {
    let report = proof_identity_suite(b);
    let failure = report
        .entries()
        .into_iter()
        .find(|(_, v)| !v.holds())
        .map(|(name, v)| format!("{name} {v}"));
    failure.map_or(Ok(()), Err)
}

fn check_involutive_equivalence(b: &Birack) -> std::result::Result<(), String> {
    let l = left_translation_relation(b);
    let r = ess_relation(b);
    let both = generalized_retraction(b);
    if l == r && r == both {
        Ok(())
    } else {
        Err(format!("L-equality {l}, R-equality {r}, ≈ {both}"))
    }
}

fn check_biquandle_equivalence(b: &Birack) -> std::result::Result<(), String> {
    let report = b.check_axioms();
    let first = report.biquandle.expect("birack has divisions");
    let second = report.biquandle_dual.expect("birack has divisions");
    if first.holds() == second.holds() {
        Ok(())
    } else {
        Err(format!("(x∖∘x)/•(x∖∘x) = x {first}; (x/•x)∖∘(x/•x) = x {second}"))
    }
}

fn check_braid_equivalence(pair: &(BinaryOpTable, BinaryOpTable)) -> std::result::Result<(), String> {
    let (circ, bullet) = pair;
    let report = check_axioms(circ, bullet).expect("sizes agree");
    let laws = report.b1.holds() && report.b2.holds() && report.b3.holds();
    let braid = crate::birack::SolutionView::from_maps(circ.clone(), bullet.clone())
        .expect("sizes agree")
        .braid_check();
    if braid.holds() == laws {
        Ok(())
    } else {
        Err(format!("braid relation {braid} but b1∧b2∧b3 = {laws}"))
    }
}

fn check_translation_identities(b: &Birack) -> std::result::Result<(), String> {
    let lt = b.left_translations();
    let rt = b.right_translations();
    for (x, y) in pairs(b.n()) {
        if lt[b.circ(x, y)].after(&lt[b.bullet(x, y)]) != lt[x].after(&lt[y]) {
            return Err(format!("L_(x∘y) L_(x•y) ≠ L_x L_y at ({x}, {y})"));
        }
    }
    let report = b.check_axioms();
    if b.division_identity_left().holds() != report.involutive_left.holds() {
        return Err("(y∖∘x)/•(x∖∘y) = x disagrees with the left involutivity law".to_string());
    }
    if b.division_identity_right().holds() != report.involutive_right.holds() {
        return Err("(x/•y)∖∘(y/•x) = y disagrees with the right involutivity law".to_string());
    }
    if b.classify().involutive {
        let t = b.t_map().as_permutation().ok_or("T is not a bijection")?;
        let s = b.s_map().as_permutation().ok_or("S is not a bijection")?;
        if s != t.inverse() {
            return Err("S is not the inverse of T".to_string());
        }
        if let Some(x) = (0..b.n()).find(|&x| lt[x].inverse().after(&t) != t.after(&rt[x])) {
            return Err(format!("L_x⁻¹ T ≠ T R_x at {x}"));
        }
    }
    Ok(())
}

fn check_birack_round_trip(b: &Birack) -> std::result::Result<(), String> {
    let cs = cycleset_from_birack(b).map_err(|err| err.to_string())?;
    let back = birack_from_cycleset(&cs).map_err(|err| err.to_string())?;
    if &back != b {
        return Err("round trip changed the birack".to_string());
    }
    if !back.division_identity_left().holds() || !back.division_identity_right().holds() {
        return Err("division identities fail in the birack of a cycle set".to_string());
    }
    Ok(())
}

fn check_nondegenerate(cs: &LeftQuasigroup) -> std::result::Result<(), String> {
    if is_nondegenerate(cs) {
        Ok(())
    } else {
        Err(format!("diagonal {:?} is not a bijection", cs.diagonal()))
    }
}

fn check_cycleset_round_trip(cs: &LeftQuasigroup) -> std::result::Result<(), String> {
    let b = birack_from_cycleset(cs).map_err(|err| err.to_string())?;
    let back = cycleset_from_birack(&b).map_err(|err| err.to_string())?;
    if &back == cs {
        Ok(())
    } else {
        Err("round trip changed the cycle set".to_string())
    }
}

fn check_alpha(cs: &LeftQuasigroup) -> std::result::Result<(), String> {
    let alpha = alpha_relation(cs);
    if let Some(w) = alpha.congruence_of_op.witness() {
        return Err(format!("α is not a congruence of ⊙ at {w:?}"));
    }
    if let Some(w) = alpha.congruence_of_ldiv.witness() {
        return Err(format!("α is not a congruence of ∗ at {w:?}"));
    }
    Ok(())
}

fn check_diagonal_preimage(cs: &LeftQuasigroup) -> std::result::Result<(), String> {
    if let Some(w) = kon1_check(cs).witness() {
        return Err(format!("x⊙(y⊙y) = a⊙a fails at {w:?}"));
    }
    for z in 0..cs.n() {
        match t_preimage_by_iteration(cs, z) {
            Some((u, _)) if cs.op(u, u) == z => {}
            _ => return Err(format!("no preimage of {z} found")),
        }
    }
    Ok(())
}

fn check_rho_congruence(g: &Groupoid) -> std::result::Result<(), String> {
    for k in 0..=MAX_K {
        let rho = rho_k(g, k);
        if let Some(w) = rho.congruence.witness() {
            return Err(format!("ρ_{k} is not a congruence at {w:?}"));
        }
        for class in rho.partition.classes() {
            match g.restrict(&class) {
                None => return Err(format!("ρ_{k} class {class:?} is not closed")),
                Some(sub) if !is_k_reductive(&sub, k).holds() => {
                    return Err(format!("ρ_{k} class {class:?} is not {k}-reductive"))
                }
                Some(_) => {}
            }
        }
    }
    Ok(())
}

fn check_reductive_chain(g: &Groupoid) -> std::result::Result<(), String> {
    let Some(k) = reductivity_degree(g, MAX_K) else {
        return Ok(());
    };
    let chain: Vec<Partition> = (0..=k).map(|j| rho_k(g, j).partition).collect();
    if let Some(j) = (0..k).find(|&j| !chain[j].refines(&chain[j + 1])) {
        return Err(format!("ρ_{j} is not contained in ρ_{}", j + 1));
    }
    for (j, part) in chain.iter().enumerate() {
        let q = g.quotient(part).map_err(|err| err.to_string())?;
        if !is_k_reductive(&q, k - j).holds() {
            return Err(format!("quotient by ρ_{j} is not {}-reductive", k - j));
        }
    }
    Ok(())
}

fn check_strong_retraction(q: &LeftQuasigroup) -> std::result::Result<(), String> {
    let strong = strong_retraction(q);
    let same_rows = Partition::by_key(q.n(), |x| q.op_table().row(x).to_vec());
    if strong.refines(&same_rows) {
        Ok(())
    } else {
        Err(format!("{strong} does not refine {same_rows}"))
    }
}

/// Biracks from the constructions and the named examples, at most
/// [`CONSTRUCTION_MAX_N`] points, each with a label.
pub fn construction_corpus() -> Vec<(String, Birack)> {
    let mut out = Vec::new();
    for name in ["nelson_ex", "essential_ex", "sv_skewbrace_ex"] {
        if let Ok(Structure::Birack(b)) = builtin(name).map(|x| x.structure) {
            out.push((name.to_string(), b));
        }
    }
    if let Ok(Structure::LeftQuasigroup(cs)) = builtin("rump_cycleset_ex").map(|x| x.structure) {
        out.push((
            "rump_cycleset_ex".to_string(),
            birack_from_cycleset(&cs).expect("cycle set"),
        ));
    }
    for n in 1..=CONSTRUCTION_MAX_N {
        out.push((format!("projection:{n}"), Birack::projection(n)));
    }
    // every commuting pair up to 4 points, powers of a long cycle beyond
    for n in 1..=4 {
        let perms = all_permutations(n);
        for f in &perms {
            for g in &perms {
                if let Ok(b) = permutation_birack(f, g) {
                    out.push((format!("permutation:{f}:{g}"), b));
                }
            }
        }
    }
    for n in 5..=CONSTRUCTION_MAX_N {
        let cycle = Permutation::from_images((0..n).map(|x| (x + 1) % n).collect()).expect("cycle");
        let mut powers = vec![Permutation::identity(n)];
        for _ in 1..n {
            let next = cycle.after(powers.last().expect("non-empty"));
            powers.push(next);
        }
        for f in &powers {
            for g in &powers {
                out.push((
                    format!("permutation:{f}:{g}"),
                    permutation_birack(f, g).expect("powers commute"),
                ));
            }
        }
    }
    for m in 2..=CONSTRUCTION_MAX_N {
        for a in 1..m {
            for c in 0..m {
                if let Ok(d) = AffineData::new(m, a, c) {
                    let s = affine_structures(&d).expect("valid parameters");
                    out.push((format!("affine:{m},{a},{c}"), s.birack));
                }
            }
        }
    }
    out
}
