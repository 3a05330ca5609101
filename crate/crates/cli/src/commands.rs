//! Subcommand implementations. Each writes its report to `out` and returns
//! an error for anything that should change the exit status.

use std::io::Write;
use std::path::Path;

use birack_core::builtin::{builtin, Layout, Structure, BUILTIN_NAMES};
use birack_core::cycleset::{birack_from_cycleset, cycleset_from_birack, is_nondegenerate, is_right_cyclic};
use birack_core::enumerate::EnumFilter;
use birack_core::modes::{mode_flags, quandle_flags, reductivity_degree, Groupoid};
use birack_core::retraction::{
    ess_relation, generalized_retraction, left_translation_relation, quotient_birack, retraction_tower,
    verify_congruence_bruteforce, TowerEnd,
};
use birack_core::suite::{
    search_counterexample, source_bound, Property, SearchOutcome, Source, CONSTRUCTION_MAX_N, MAX_K,
};
use birack_core::{check_axioms, Axiom, BinaryOpTable, Birack, Error, LeftQuasigroup, Verdict, Witness};

use crate::file::{Body, StructureFile};
use crate::{Cli, CliError, Command, EnumKind, EnumerateArgs, Format, Target};

type Out<'a> = &'a mut dyn Write;

fn io(e: std::io::Error) -> CliError {
    CliError::Usage(format!("cannot write output: {e}"))
}

/// Lines of `key: value`; the human form aligns the values.
#[derive(Default)]
struct Report {
    rows: Vec<(String, String)>,
}

impl Report {
    fn add(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.rows.push((key.into(), value.into()));
    }

    fn write(&self, format: Format, out: Out) -> Result<(), CliError> {
        let width = self.rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        for (k, v) in &self.rows {
            match format {
                Format::Machine => writeln!(out, "{k}: {v}"),
                Format::Human => writeln!(out, "{k:<width$}  {v}"),
            }
            .map_err(io)?;
        }
        Ok(())
    }
}

fn shifted(coords: &[usize], base: usize) -> String {
    coords
        .iter()
        .map(|c| (c + base).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn verdict_text<W>(v: &Verdict<W>, format: Format, coords: impl Fn(&W) -> String) -> String {
    match (v, format) {
        (Verdict::Holds, _) => "holds".to_string(),
        (Verdict::Fails(w), Format::Machine) => format!("fails {}", coords(w)),
        (Verdict::Fails(w), Format::Human) => format!("fails at {}", coords(w)),
    }
}

fn yes_no<W>(v: &Verdict<W>, coords: impl Fn(&W) -> String) -> String {
    match v {
        Verdict::Holds => "yes".to_string(),
        Verdict::Fails(w) => format!("no (witness {})", coords(w)),
    }
}

fn witness_text(w: &Witness, base: usize) -> String {
    match w {
        Witness::Row(r) => format!("row {}", r + base),
        Witness::Column(c) => format!("column {}", c + base),
        other => other.display_with_base(base),
    }
}

fn read(path: &Path) -> Result<StructureFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    StructureFile::parse(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn dispatch(cli: &Cli, out: Out) -> Result<(), CliError> {
    match &cli.command {
        Command::Check { path } => check(&read(path)?, cli.format, out),
        Command::Retract { path, tower, max_steps } => retract(&read(path)?, *tower, *max_steps, cli.format, out),
        Command::Convert { path, to, tables } => convert(&read(path)?, *to, *tables, out),
        Command::Enumerate(args) => enumerate(args, cli.format, out),
        Command::Props { n, property, jobs } => props(*n, property.as_deref(), jobs.jobs, cli.format, out),
        Command::Builtin { name, base } => dump_builtin(name.as_deref(), *base, out),
    }
}

fn not_birack(report: &birack_core::AxiomReport, base: usize) -> Option<String> {
    let failure = report.first_birack_failure()?;
    Some(match failure.witness {
        Witness::Row(r) => format!("row {} not a permutation", r + base),
        Witness::Column(c) => format!("column {} not a permutation", c + base),
        w => format!("{} fails at {}", failure.axiom.name(), w.display_with_base(base)),
    })
}

fn require_birack(file: &StructureFile) -> Result<Birack, CliError> {
    let (circ, bullet) = file
        .birack_tables()
        .ok_or_else(|| CliError::Semantic(format!("expected a birack, found kind {}", file.kind().name())))?;
    let report = check_axioms(&circ, &bullet)?;
    if let Some(msg) = not_birack(&report, file.base) {
        return Err(CliError::Semantic(format!("not a birack: {msg}")));
    }
    Ok(Birack::from_tables(circ, bullet)?)
}

fn require_left_quasigroup(op: &BinaryOpTable, base: usize) -> Result<LeftQuasigroup, CliError> {
    LeftQuasigroup::from_table(op.clone()).map_err(|e| match e {
        Error::RowNotPermutation { row } => CliError::Semantic(format!("row {} not a permutation", row + base)),
        other => CliError::Core(other),
    })
}

fn check(file: &StructureFile, format: Format, out: Out) -> Result<(), CliError> {
    let base = file.base;
    let mut r = Report::default();
    r.add("kind", file.kind().name());
    r.add("n", file.n().to_string());
    r.add("base", base.to_string());
    let failure = match &file.body {
        Body::Birack { .. } | Body::SolutionPerms { .. } => check_birack(file, format, &mut r)?,
        Body::LeftQuasigroup { op } => check_left_quasigroup(op, base, format, &mut r),
        Body::Groupoid { op } => {
            check_groupoid(op, base, format, &mut r);
            None
        }
    };
    r.write(format, out)?;
    match failure {
        Some(msg) => Err(CliError::Semantic(msg)),
        None => Ok(()),
    }
}

fn check_birack(file: &StructureFile, format: Format, r: &mut Report) -> Result<Option<String>, CliError> {
    let base = file.base;
    let (circ, bullet) = file.birack_tables().expect("birack kind");
    let report = check_axioms(&circ, &bullet)?;
    for axiom in Axiom::ALL {
        let text = match report.get(axiom) {
            Some(v) => verdict_text(v, format, |w| witness_text(w, base)),
            None => "not applicable".to_string(),
        };
        r.add(format!("axiom.{}", axiom.name()), text);
    }
    if let Some(msg) = not_birack(&report, base) {
        r.add("birack", format!("no ({msg})"));
        return Ok(Some(msg));
    }
    let b = Birack::from_tables(circ, bullet)?;
    let class = b.classify();
    let w = |w: &Witness| w.display_with_base(base);
    let involutive = match (&report.involutive_left, &report.involutive_right) {
        (Verdict::Fails(x), _) | (_, Verdict::Fails(x)) => Verdict::Fails(*x),
        _ => Verdict::Holds,
    };
    let square_free = match (&report.idempotent_circ, &report.idempotent_bullet) {
        (Verdict::Fails(x), _) | (_, Verdict::Fails(x)) => Verdict::Fails(*x),
        _ => Verdict::Holds,
    };
    let biquandle = report.biquandle.clone().expect("birack has divisions");
    assert_eq!(involutive.holds(), class.involutive);
    assert_eq!(square_free.holds(), class.square_free);
    assert_eq!(biquandle.holds(), class.biquandle);
    let summary = [
        ("birack", "yes".to_string()),
        ("involutive", yes_no(&involutive, w)),
        ("square_free", yes_no(&square_free, w)),
        ("biquandle", yes_no(&biquandle, w)),
    ];
    match format {
        Format::Machine => {
            for (k, v) in summary {
                r.add(k, v);
            }
        }
        Format::Human => {
            let line: Vec<String> = summary
                .iter()
                .map(|(k, v)| format!("{}: {v}", k.replace('_', "-")))
                .collect();
            r.add("summary", line.join("; "));
        }
    }
    Ok(None)
}

fn check_left_quasigroup(op: &BinaryOpTable, base: usize, format: Format, r: &mut Report) -> Option<String> {
    let lq = match require_left_quasigroup(op, base) {
        Ok(lq) => lq,
        Err(e) => {
            let msg = e.to_string();
            r.add("left_quasigroup", format!("no ({msg})"));
            return Some(msg);
        }
    };
    let coords3 = |&(x, y, z): &(usize, usize, usize)| shifted(&[x, y, z], base);
    r.add("left_quasigroup", "yes");
    let cyclic = is_right_cyclic(&lq);
    r.add("right_cyclic", verdict_text(&cyclic, format, coords3));
    if cyclic.holds() {
        r.add("nondegenerate", if is_nondegenerate(&lq) { "yes" } else { "no" });
    }
    let q = quandle_flags(&lq);
    r.add(
        "idempotent",
        verdict_text(&q.idempotent, format, |x| shifted(&[*x], base)),
    );
    r.add("left_distributive", verdict_text(&q.left_distributive, format, coords3));
    r.add("quandle", if q.is_quandle() { "yes" } else { "no" });
    None
}

fn check_groupoid(op: &BinaryOpTable, base: usize, format: Format, r: &mut Report) {
    let g = Groupoid::from_table(op.clone()).expect("parsed tables are non-empty");
    let flags = mode_flags(&g);
    r.add(
        "idempotent",
        verdict_text(&flags.idempotent, format, |x| shifted(&[*x], base)),
    );
    r.add("medial", verdict_text(&flags.medial, format, |q| shifted(q, base)));
    r.add("mode", if flags.is_mode() { "yes" } else { "no" });
    let degree = reductivity_degree(&g, MAX_K).map_or(format!("none up to {MAX_K}"), |k| k.to_string());
    r.add("reductivity", degree);
}

fn table_text(t: &BinaryOpTable, base: usize) -> String {
    t.rows()
        .map(|row| shifted(row, base).replace(',', " "))
        .collect::<Vec<_>>()
        .join(" | ")
}

fn retract(
    file: &StructureFile,
    tower: bool,
    max_steps: Option<usize>,
    format: Format,
    out: Out,
) -> Result<(), CliError> {
    let b = require_birack(file)?;
    let base = file.base;
    let part = generalized_retraction(&b);
    let mut r = Report::default();
    r.add("n", b.n().to_string());
    r.add("classes", part.display_with_base(base));
    r.add("class_count", part.num_classes().to_string());
    let congruence = verify_congruence_bruteforce(&b, &part)?;
    r.add("congruence", verdict_text(&congruence, format, |v| v.to_string()));
    r.add(
        "left_translation_classes",
        left_translation_relation(&b).display_with_base(base),
    );
    r.add("right_translation_classes", ess_relation(&b).display_with_base(base));
    let q = quotient_birack(&b, &part)?;
    r.add("quotient.circ", table_text(q.circ_table(), base));
    r.add("quotient.bullet", table_text(q.bullet_table(), base));
    let class = q.classify();
    r.add("quotient.involutive", if class.involutive { "yes" } else { "no" });
    r.add("quotient.square_free", if class.square_free { "yes" } else { "no" });
    if tower {
        let t = retraction_tower(&b, max_steps.unwrap_or(b.n()));
        let sizes: Vec<String> = t.sizes().iter().map(usize::to_string).collect();
        let sep = match format {
            Format::Machine => " ",
            Format::Human => " -> ",
        };
        r.add("tower", sizes.join(sep));
        match (t.end, format) {
            (TowerEnd::Singleton(m), _) => r.add("level", m.to_string()),
            (TowerEnd::Stabilized(k), Format::Machine) => r.add("stabilized", k.to_string()),
            (TowerEnd::Stabilized(k), Format::Human) => r.add("end", format!("stabilized at size {k}")),
            (TowerEnd::Truncated(s), Format::Machine) => r.add("truncated", s.to_string()),
            (TowerEnd::Truncated(s), Format::Human) => r.add("end", format!("truncated after {s} steps")),
        }
    }
    r.write(format, out)
}

fn birack_body(b: &Birack, tables: bool) -> Body {
    if tables {
        Body::Birack {
            circ: b.circ_table().clone(),
            bullet: b.bullet_table().clone(),
        }
    } else {
        Body::SolutionPerms {
            left: b.left_translations(),
            right: b.right_translations(),
        }
    }
}

fn convert(file: &StructureFile, to: Target, tables: bool, out: Out) -> Result<(), CliError> {
    let base = file.base;
    let body = match (&file.body, to) {
        (Body::Groupoid { .. }, _) => {
            return Err(CliError::Semantic("a groupoid cannot be converted".to_string()));
        }
        (Body::LeftQuasigroup { op }, Target::Birack) => {
            let cs = require_left_quasigroup(op, base)?;
            let b = birack_from_cycleset(&cs).map_err(|e| match e {
                Error::NotRightCyclic(x, y, z) => {
                    CliError::Semantic(format!("not right cyclic (witness {})", shifted(&[x, y, z], base)))
                }
                other => CliError::Core(other),
            })?;
            birack_body(&b, tables)
        }
        (Body::LeftQuasigroup { op }, Target::Cycleset) => {
            let cs = require_left_quasigroup(op, base)?;
            if let Verdict::Fails((x, y, z)) = is_right_cyclic(&cs) {
                return Err(CliError::Semantic(format!(
                    "not right cyclic (witness {})",
                    shifted(&[x, y, z], base)
                )));
            }
            Body::LeftQuasigroup { op: op.clone() }
        }
        (_, Target::Birack) => birack_body(&require_birack(file)?, tables),
        (_, Target::Cycleset) => {
            let b = require_birack(file)?;
            let cs = cycleset_from_birack(&b).map_err(|e| match e {
                Error::NotInvolutive(x, y) => {
                    CliError::Semantic(format!("not involutive (witness {})", shifted(&[x, y], base)))
                }
                other => CliError::Core(other),
            })?;
            Body::LeftQuasigroup {
                op: cs.op_table().clone(),
            }
        }
    };
    let converted = StructureFile {
        base,
        note: file.note.clone(),
        body,
    };
    write!(out, "{}", converted.serialize()).map_err(io)
}

fn enumerate(args: &EnumerateArgs, format: Format, out: Out) -> Result<(), CliError> {
    let e = crate::enumerator(args.jobs.jobs)?;
    let n = args.n;
    let flags_used = args.involutive || args.square_free || args.right_cyclic || args.mode || args.up_to_iso;
    if flags_used && args.kind != EnumKind::Birack {
        return Err(CliError::Usage("filter flags apply to biracks only".to_string()));
    }
    let files: Vec<StructureFile> = match args.kind {
        EnumKind::Birack => {
            let filter = EnumFilter {
                n,
                involutive: args.involutive,
                square_free: args.square_free,
                right_cyclic: args.right_cyclic,
                mode: args.mode,
                up_to_isomorphism: args.up_to_iso,
            };
            to_files(e.biracks(&filter)?, |b| birack_body(&b, true))
        }
        EnumKind::LeftQuasigroup => to_files(e.left_quasigroups(n)?.collect(), |q| Body::LeftQuasigroup {
            op: q.op_table().clone(),
        }),
        EnumKind::Cycleset => to_files(e.cyclesets(n)?, |q| Body::LeftQuasigroup {
            op: q.op_table().clone(),
        }),
        EnumKind::Mode => to_files(e.modes(n)?, |g| Body::Groupoid { op: g.into_table() }),
    };
    let kind = match args.kind {
        EnumKind::Birack => "birack",
        EnumKind::LeftQuasigroup => "left_quasigroup",
        EnumKind::Cycleset => "cycleset",
        EnumKind::Mode => "mode",
    };
    if !args.count_only {
        for f in &files {
            writeln!(out, "{}---", f.serialize()).map_err(io)?;
        }
    }
    let mut r = Report::default();
    r.add("kind", kind);
    r.add("n", n.to_string());
    r.add("count", files.len().to_string());
    if args.count_only {
        r.write(format, out)
    } else {
        // keeps the dump parseable: the summary is a comment
        let mut buf = Vec::new();
        r.write(format, &mut buf)?;
        for line in String::from_utf8(buf).expect("utf-8").lines() {
            writeln!(out, "# {line}").map_err(io)?;
        }
        Ok(())
    }
}

fn to_files<T>(items: Vec<T>, body: impl Fn(T) -> Body) -> Vec<StructureFile> {
    items
        .into_iter()
        .map(|x| StructureFile {
            base: 0,
            note: None,
            body: body(x),
        })
        .collect()
}

fn props(n: usize, only: Option<&str>, jobs: usize, format: Format, out: Out) -> Result<(), CliError> {
    let e = crate::enumerator(jobs)?;
    let properties = match only {
        Some(name) => vec![Property::from_name(name)?],
        None => Property::ALL.to_vec(),
    };
    if n == 0 {
        return Err(CliError::Usage("n must be positive".to_string()));
    }
    let mut r = Report::default();
    let mut violations = 0;
    for p in properties {
        let source = p.source();
        let top = if source == Source::Constructions {
            CONSTRUCTION_MAX_N
        } else {
            n
        };
        let bound = source_bound(&e, source);
        for size in 1..=top {
            let key = format!("{}.{size}", p.name());
            if size > bound {
                r.add(key, format!("skipped (bound {bound})"));
                continue;
            }
            match search_counterexample(&e, p, size)? {
                SearchOutcome::Exhausted { count, .. } => r.add(key, format!("exhausted {count}")),
                SearchOutcome::Violation {
                    index,
                    structure,
                    reason,
                    ..
                } => {
                    violations += 1;
                    r.add(key, format!("violation at index {index}: {reason}; {structure}"));
                }
            }
        }
    }
    r.add(
        "status",
        if violations == 0 {
            "ok".to_string()
        } else {
            format!("{violations} violations")
        },
    );
    r.write(format, out)?;
    if violations > 0 {
        return Err(CliError::Semantic(format!("{violations} properties violated")));
    }
    Ok(())
}

pub fn builtin_file(name: &str, base: Option<usize>) -> Result<StructureFile, CliError> {
    let b = builtin(name)?;
    let body = match b.structure {
        Structure::Birack(br) => birack_body(&br, b.layout == Layout::Tables),
        Structure::LeftQuasigroup(q) => Body::LeftQuasigroup {
            op: q.op_table().clone(),
        },
        Structure::Groupoid(g) => Body::Groupoid { op: g.into_table() },
    };
    Ok(StructureFile {
        base: base.unwrap_or(b.base),
        note: Some(b.note),
        body,
    })
}

fn dump_builtin(name: Option<&str>, base: Option<usize>, out: Out) -> Result<(), CliError> {
    match name {
        None => {
            for n in BUILTIN_NAMES {
                writeln!(out, "{n}").map_err(io)?;
            }
            Ok(())
        }
        Some(name) => write!(out, "{}", builtin_file(name, base)?.serialize()).map_err(io),
    }
}
