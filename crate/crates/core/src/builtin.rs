//! Named structures used as fixtures and regression inputs.

use crate::birack::Birack;
use crate::constructions::{affine_structures, dihedral_quandle, AffineData};
use crate::error::{Error, Result};
use crate::modes::Groupoid;
use crate::perm::Permutation;
use crate::quasigroup::LeftQuasigroup;
use crate::table::BinaryOpTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Birack(Birack),
    /// Read as a cycle set or a quandle depending on context.
    LeftQuasigroup(LeftQuasigroup),
    Groupoid(Groupoid),
}

impl Structure {
    pub fn n(&self) -> usize {
        match self {
            Structure::Birack(b) => b.n(),
            Structure::LeftQuasigroup(q) => q.n(),
            Structure::Groupoid(g) => g.n(),
        }
    }
}

/// How a birack is best written out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    Tables,
    Translations,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Builtin {
    pub name: String,
    pub structure: Structure,
    /// Label of element `0` when printed.
    pub base: usize,
    pub layout: Layout,
    pub note: String,
}

/// Names accepted by [`builtin`]; `<n>`, `<m>`, `<a>`, `<c>` are numbers.
pub const BUILTIN_NAMES: &[&str] = &[
    "nelson_ex",
    "essential_ex",
    "sv_skewbrace_ex",
    "rump_cycleset_ex",
    "quasi_reductive_ex",
    "projection:<n>",
    "projection_cycleset:<n>",
    "dihedral_quandle:<n>",
    "affine:<m>,<a>,<c>",
    "affine_cycleset:<m>,<a>,<c>",
];

fn rows(r: &[[usize; 4]]) -> BinaryOpTable {
    BinaryOpTable::from_rows(&r.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).expect("literal table")
}

fn rows5(r: &[[usize; 5]]) -> BinaryOpTable {
    BinaryOpTable::from_rows(&r.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).expect("literal table")
}

/// Neither involutive nor a biquandle.
fn nelson_ex() -> Birack {
    let circ = rows(&[[1, 0, 2, 3], [1, 0, 3, 2], [0, 1, 2, 3], [0, 1, 2, 3]]);
    let bullet = rows(&[[1, 1, 0, 0], [0, 0, 1, 1], [3, 2, 3, 3], [2, 3, 2, 2]]);
    Birack::from_tables(circ, bullet).expect("literal birack")
}

/// `∘` alone does not determine `≈`: rows 0,1 and 2,3 agree but the `•`
/// columns split them.
fn essential_ex() -> Birack {
    let circ = rows5(&[
        [0, 2, 1, 4, 3],
        [0, 2, 1, 4, 3],
        [4, 2, 1, 3, 0],
        [4, 2, 1, 3, 0],
        [3, 2, 1, 0, 4],
    ]);
    let bullet = rows5(&[
        [0, 3, 3, 0, 0],
        [1, 2, 2, 1, 1],
        [2, 1, 1, 2, 2],
        [3, 0, 0, 3, 3],
        [4, 4, 4, 4, 4],
    ]);
    Birack::from_tables(circ, bullet).expect("literal birack")
}

/// An eight-element birack given by its translations; `≈` has four classes
/// and the retraction is the projection birack on four points.
fn sv_skewbrace_ex() -> Birack {
    let p = |s: &str| Permutation::parse_cycles(s, 8, 0).expect("literal cycles");
    let id = Permutation::identity(8);
    let a = p("(1 4)(3 6)");
    let b = p("(2 7)(3 6)");
    let c = p("(1 4)(2 7)");
    let left = [id.clone(), a.clone(), b.clone(), c.clone(), a, id.clone(), c, b];
    let right = [
        id.clone(),
        p("(1 4)(2 7)"),
        p("(1 4)(2 7)"),
        id.clone(),
        p("(1 4)(2 7)"),
        id.clone(),
        id,
        p("(1 4)(2 7)"),
    ];
    let circ = BinaryOpTable::from_row_permutations(&left).expect("literal rows");
    let bullet = BinaryOpTable::from_column_permutations(&right).expect("literal columns");
    Birack::from_tables(circ, bullet).expect("literal birack")
}

fn rump_cycleset_ex() -> LeftQuasigroup {
    LeftQuasigroup::from_table(rows(&[[2, 3, 1, 0], [2, 3, 1, 0], [3, 2, 0, 1], [3, 2, 0, 1]])).expect("literal rows")
}

/// A quandle with `L_0 = L_1 = (2 3)` and `L_2 = L_3 = (0 1)`.
fn quasi_reductive_ex() -> LeftQuasigroup {
    let a = Permutation::parse_cycles("(2 3)", 4, 0).expect("literal cycles");
    let b = Permutation::parse_cycles("(0 1)", 4, 0).expect("literal cycles");
    LeftQuasigroup::from_rows(&[a.clone(), a, b.clone(), b]).expect("literal rows")
}

fn numbers(name: &str, args: &str, count: usize) -> Result<Vec<usize>> {
    let parsed: Option<Vec<usize>> = args.split(',').map(|s| s.trim().parse().ok()).collect();
    match parsed {
        Some(v) if v.len() == count => Ok(v),
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

fn positive(name: &str, n: usize) -> Result<usize> {
    if n == 0 {
        Err(Error::UnknownBuiltin(name.to_string()))
    } else {
        Ok(n)
    }
}

/// Looks up a named structure; parameterised names take `name:args`.
pub fn builtin(name: &str) -> Result<Builtin> {
    let (head, args) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let make = |structure, base, layout, note: &str| Builtin {
        name: name.to_string(),
        structure,
        base,
        layout,
        note: note.to_string(),
    };
    let unknown = || Error::UnknownBuiltin(name.to_string());
    let built = match (head, args) {
        ("nelson_ex", None) => make(
            Structure::Birack(nelson_ex()),
            1,
            Layout::Tables,
            "non-involutive birack, not a biquandle",
        ),
        ("essential_ex", None) => make(
            Structure::Birack(essential_ex()),
            0,
            Layout::Tables,
            "birack whose retraction needs both operations",
        ),
        ("sv_skewbrace_ex", None) => make(
            Structure::Birack(sv_skewbrace_ex()),
            1,
            Layout::Translations,
            "eight-element birack from a skew brace",
        ),
        ("rump_cycleset_ex", None) => make(
            Structure::LeftQuasigroup(rump_cycleset_ex()),
            1,
            Layout::Tables,
            "four-element cycle set",
        ),
        ("quasi_reductive_ex", None) => make(
            Structure::LeftQuasigroup(quasi_reductive_ex()),
            0,
            Layout::Tables,
            "quasi-reductive quandle",
        ),
        ("projection", Some(a)) => {
            let n = positive(name, numbers(name, a, 1)?[0])?;
            make(
                Structure::Birack(Birack::projection(n)),
                0,
                Layout::Tables,
                "x∘y = y, x•y = x",
            )
        }
        ("projection_cycleset", Some(a)) => {
            let n = positive(name, numbers(name, a, 1)?[0])?;
            make(
                Structure::LeftQuasigroup(LeftQuasigroup::projection(n)),
                0,
                Layout::Tables,
                "x⊙y = y",
            )
        }
        ("dihedral_quandle", Some(a)) => {
            let n = positive(name, numbers(name, a, 1)?[0])?;
            make(
                Structure::LeftQuasigroup(dihedral_quandle(n)),
                0,
                Layout::Tables,
                "x∗y = 2x - y",
            )
        }
        ("affine", Some(a)) | ("affine_cycleset", Some(a)) => {
            let v = numbers(name, a, 3)?;
            let s = affine_structures(&AffineData::new(v[0], v[1], v[2])?)?;
            if head == "affine" {
                make(
                    Structure::Birack(s.birack),
                    0,
                    Layout::Tables,
                    "affine involutive birack",
                )
            } else {
                make(
                    Structure::LeftQuasigroup(s.cycle_set),
                    0,
                    Layout::Tables,
                    "x⊙y = (1-a)x + ay + c",
                )
            }
        }
        _ => return Err(unknown()),
    };
    Ok(built)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycleset::is_right_cyclic;
    use crate::modes::is_quandle;

    #[test]
    fn all_fixed_names_build() {
        for name in [
            "nelson_ex",
            "essential_ex",
            "sv_skewbrace_ex",
            "rump_cycleset_ex",
            "quasi_reductive_ex",
        ] {
            assert_eq!(builtin(name).unwrap().name, name);
        }
        assert_eq!(builtin("projection:3").unwrap().structure.n(), 3);
        assert_eq!(builtin("affine:4,3,0").unwrap().structure.n(), 4);
    }

    #[test]
    fn bad_names() {
        for name in [
            "nope",
            "projection",
            "projection:0",
            "projection:x",
            "affine:4,3",
            "nelson_ex:2",
        ] {
            assert!(matches!(builtin(name), Err(Error::UnknownBuiltin(_))), "{name}");
        }
        assert!(matches!(builtin("affine:5,2,0"), Err(Error::InvalidAffine(_))));
    }

    #[test]
    fn kinds() {
        let Structure::LeftQuasigroup(cs) = builtin("rump_cycleset_ex").unwrap().structure else {
            panic!()
        };
        assert!(is_right_cyclic(&cs).holds());
        let Structure::LeftQuasigroup(q) = builtin("quasi_reductive_ex").unwrap().structure else {
            panic!()
        };
        assert!(is_quandle(&q));
    }
}
