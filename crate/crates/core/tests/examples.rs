//! Regressions on the fixed example structures.

use birack_core::builtin::{builtin, Structure};
use birack_core::cycleset::{birack_from_cycleset, cycleset_from_birack, is_right_cyclic};
use birack_core::modes::{is_quandle, quasi_reductive_check, strong_retraction};
use birack_core::retraction::{
    ess_relation, generalized_retraction, left_translation_relation, retraction_tower, TowerEnd,
};
use birack_core::{Birack, LeftQuasigroup, Partition, Permutation};

fn birack(name: &str) -> Birack {
    match builtin(name).unwrap().structure {
        Structure::Birack(b) => b,
        other => panic!("{other:?}"),
    }
}

fn lq(name: &str) -> LeftQuasigroup {
    match builtin(name).unwrap().structure {
        Structure::LeftQuasigroup(q) => q,
        other => panic!("{other:?}"),
    }
}

fn perm(text: &str, n: usize) -> Permutation {
    Permutation::parse_cycles(text, n, 1).unwrap()
}

fn classes(n: usize, classes: &[&[usize]]) -> Partition {
    Partition::from_classes(n, &classes.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
}

#[test]
fn nelson_translations_and_divisions() {
    let b = birack("nelson_ex");
    let (l, r) = (b.left_translations(), b.right_translations());
    assert_eq!(l[0], perm("(1 2)", 4));
    assert_eq!(l[1], perm("(1 2)(3 4)", 4));
    assert!(l[2].is_identity() && l[3].is_identity());
    assert_eq!(r[0], perm("(1 2)(3 4)", 4));
    assert_eq!(r[1], perm("(1 2)", 4));
    assert_eq!(r[2], perm("(3 4)", 4));
    assert_eq!(r[3], perm("(3 4)", 4));
    // Every translation is an involution, so the divisions coincide with the operations.
    assert_eq!(b.ld_circ_table(), b.circ_table());
    assert_eq!(b.rd_bullet_table(), b.bullet_table());
    let report = b.check_axioms();
    assert!(report.is_birack());
    assert!(!report.idempotent_circ.holds());
    assert!(!b.division_identity_left().holds());
}

#[test]
fn essential_needs_both_operations() {
    let b = birack("essential_ex");
    assert!(generalized_retraction(&b).is_identity());
    assert_eq!(left_translation_relation(&b), classes(5, &[&[0, 1], &[2, 3], &[4]]));
    assert_eq!(ess_relation(&b), classes(5, &[&[0, 3, 4], &[1, 2]]));
    assert_eq!(retraction_tower(&b, 5).end, TowerEnd::Stabilized(5));
}

#[test]
fn skew_brace_tower() {
    let b = birack("sv_skewbrace_ex");
    let tower = retraction_tower(&b, 8);
    assert_eq!(tower.sizes(), vec![8, 4, 1]);
    assert_eq!(tower.end, TowerEnd::Singleton(2));
    let q = &tower.stages[1];
    assert_eq!(q, &Birack::projection(4));
}

#[test]
fn rump_cycle_set_round_trip() {
    let cs = lq("rump_cycleset_ex");
    assert!(is_right_cyclic(&cs).holds());
    let b = birack_from_cycleset(&cs).unwrap();
    assert!(b.check_axioms().is_involutive());
    assert_eq!(cycleset_from_birack(&b).unwrap(), cs);
    // L_x = R_x for every x.
    assert_eq!(b.left_translations(), b.right_translations());
    assert_eq!(generalized_retraction(&b), classes(4, &[&[0, 1], &[2, 3]]));
}

#[test]
fn quasi_reductive_example() {
    let q = lq("quasi_reductive_ex");
    assert!(is_quandle(&q));
    assert_eq!(quasi_reductive_check(&q).unwrap(), Some((0, 1)));
    assert_eq!(strong_retraction(&q), classes(4, &[&[0, 1], &[2, 3]]));
}

#[test]
fn parameterised_builtins() {
    for name in ["affine:4,3,0", "affine:8,5,4", "affine:9,4,3", "projection:6"] {
        let Structure::Birack(b) = builtin(name).unwrap().structure else {
            panic!("{name}")
        };
        let report = b.check_axioms();
        assert!(report.is_birack() && report.is_involutive(), "{name}");
    }
    // (1-a)^2 must vanish modulo m.
    assert!(builtin("affine:4,2,0").is_err());
    assert!(builtin("nope").is_err());
}
