use std::path::PathBuf;

use birack_cli::commands::builtin_file;
use birack_cli::run;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn birack(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("birack").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn line<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|rest| rest.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no `{key}` line in\n{text}"))
}

#[test]
fn fixtures_match_builtins() {
    for (file, name) in [
        ("nelson_ex.txt", "nelson_ex"),
        ("essential_ex.txt", "essential_ex"),
        ("sv_skewbrace_ex.txt", "sv_skewbrace_ex"),
        ("rump_cycleset_ex.txt", "rump_cycleset_ex"),
        ("quasi_reductive_ex.txt", "quasi_reductive_ex"),
        ("projection_3.txt", "projection:3"),
        ("projection_cycleset_3.txt", "projection_cycleset:3"),
        ("affine_4_3_0.txt", "affine:4,3,0"),
        ("affine_cycleset_4_3_0.txt", "affine_cycleset:4,3,0"),
        ("dihedral_quandle_3.txt", "dihedral_quandle:3"),
    ] {
        let on_disk = std::fs::read_to_string(fixture(file)).unwrap();
        let dumped = builtin_file(name, None).unwrap().serialize();
        assert_eq!(on_disk, dumped, "{file}");
    }
}

#[test]
fn check_non_involutive_example() {
    let (code, out, _) = birack(&["check", "--format", "machine", &fixture("nelson_ex.txt")]);
    assert_eq!(code, 0);
    assert_eq!(line(&out, "birack"), "yes");
    // Witnesses are printed in the file's base.
    assert_eq!(line(&out, "involutive"), "no (witness 3,1)");
    assert_eq!(line(&out, "biquandle"), "no (witness 3)");
}

#[test]
fn check_human_summary() {
    let (code, out, _) = birack(&["check", &fixture("nelson_ex.txt")]);
    assert_eq!(code, 0);
    assert!(out
        .contains("birack: yes; involutive: no (witness 3,1); square-free: no (witness 1); biquandle: no (witness 3)"));
}

#[test]
fn corrupted_row_is_reported() {
    let (code, out, err) = birack(&["check", "--format", "machine", &fixture("corrupt_circ_row.txt")]);
    assert_eq!(code, 1);
    assert_eq!(line(&out, "birack"), "no (row 2 not a permutation)");
    assert!(err.contains("row 2 not a permutation"));
}

#[test]
fn check_groupoid() {
    let (code, out, _) = birack(&["check", "--format", "machine", &fixture("two_reductive_mode.txt")]);
    assert_eq!(code, 0);
    assert_eq!(line(&out, "mode"), "yes");
    assert_eq!(line(&out, "reductivity"), "2");
}

#[test]
fn retract_tower() {
    let (code, out, _) = birack(&[
        "retract",
        "--tower",
        "--format",
        "machine",
        &fixture("sv_skewbrace_ex.txt"),
    ]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(line(&out, "classes"), "{1,6},{2,5},{3,8},{4,7}");
    assert_eq!(line(&out, "tower"), "8 4 1");
    assert_eq!(line(&out, "level"), "2");

    let (code, out, _) = birack(&[
        "retract",
        "--tower",
        "--format",
        "machine",
        &fixture("essential_ex.txt"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(line(&out, "stabilized"), "5");
}

#[test]
fn convert_round_trip_is_byte_identical() {
    let dir = std::env::temp_dir().join(format!("birack-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let original = fixture("rump_cycleset_ex.txt");
    let (code, solution, _) = birack(&["convert", "--to", "birack", &original]);
    assert_eq!(code, 0);
    assert!(
        solution.contains("L1: (1423)") && solution.contains("R4: (1324)"),
        "{solution}"
    );
    let mid = dir.join("solution.txt");
    std::fs::write(&mid, &solution).unwrap();
    let (code, back, _) = birack(&["convert", "--to", "cycleset", mid.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(back, std::fs::read_to_string(&original).unwrap());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn convert_rejects_non_involutive() {
    let (code, _, err) = birack(&["convert", "--to", "cycleset", &fixture("nelson_ex.txt")]);
    assert_eq!(code, 1);
    assert_eq!(err.trim(), "error: not involutive (witness 3,1)");

    let (code, _, err) = birack(&["convert", "--to", "birack", &fixture("not_right_cyclic.txt")]);
    assert_eq!(code, 1);
    assert!(err.contains("not right cyclic"));
}

#[test]
fn parse_errors_carry_position() {
    let dir = std::env::temp_dir().join(format!("birack-parse-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(
        &path,
        "kind: birack\nn: 2\nbase: 0\ncirc:\n0 1\n0 x\nbullet:\n0 0\n1 1\n",
    )
    .unwrap();
    let (code, _, err) = birack(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 6, column 3"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(birack(&["check", "/nonexistent/file.txt"]).0, 2);
    assert_eq!(birack(&["builtin", "no_such_thing"]).0, 2);
    assert_eq!(birack(&["props", "2", "--property", "no_such_property"]).0, 2);
    let (code, _, err) = birack(&["enumerate", "9"]);
    assert_eq!(code, 2);
    assert!(err.contains("bound exceeded"));
}

#[test]
fn enumerate_counts() {
    for (args, count) in [
        (&["enumerate", "3", "--count-only", "--format", "machine"][..], "66"),
        (
            &["enumerate", "3", "--involutive", "--count-only", "--format", "machine"][..],
            "12",
        ),
        (
            &[
                "enumerate",
                "3",
                "--kind",
                "cycleset",
                "--count-only",
                "--format",
                "machine",
            ][..],
            "12",
        ),
        (
            &[
                "enumerate",
                "3",
                "--kind",
                "mode",
                "--count-only",
                "--format",
                "machine",
            ][..],
            "48",
        ),
    ] {
        let (code, out, _) = birack(args);
        assert_eq!(code, 0);
        assert_eq!(line(&out, "count"), count, "{args:?}");
    }
}

#[test]
fn props_reports_status() {
    let (code, out, _) = birack(&["props", "2", "--property", "claims", "--format", "machine"]);
    assert_eq!(code, 0);
    assert_eq!(line(&out, "claims.2"), "exhausted 4");
    assert_eq!(line(&out, "status"), "ok");
}
