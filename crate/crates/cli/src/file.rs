//! The plain-text structure file.
//!
//! ```text
//! # comment
//! kind: birack
//! n: 4
//! base: 1
//! note: free text
//! circ:
//! 2 1 3 4
//! ...
//! bullet:
//! ...
//! ```
//!
//! `kind` is one of `birack`, `left_quasigroup`, `groupoid` or
//! `solution_perms`. Tables are `circ`/`bullet` for biracks and `op`
//! otherwise; entries lie in `base..base+n`. A `solution_perms` file lists
//! `L<i>: cycles` (row `i` of `∘`) and `R<i>: cycles` (column `i` of `•`) instead.

use std::fmt::Write as _;

use birack_core::{BinaryOpTable, Permutation};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Birack,
    LeftQuasigroup,
    Groupoid,
    SolutionPerms,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Birack => "birack",
            Kind::LeftQuasigroup => "left_quasigroup",
            Kind::Groupoid => "groupoid",
            Kind::SolutionPerms => "solution_perms",
        }
    }

    fn parse(s: &str) -> Option<Kind> {
        [Kind::Birack, Kind::LeftQuasigroup, Kind::Groupoid, Kind::SolutionPerms]
            .into_iter()
            .find(|k| k.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Birack {
        circ: BinaryOpTable,
        bullet: BinaryOpTable,
    },
    LeftQuasigroup {
        op: BinaryOpTable,
    },
    Groupoid {
        op: BinaryOpTable,
    },
    SolutionPerms {
        left: Vec<Permutation>,
        right: Vec<Permutation>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFile {
    pub base: usize,
    pub note: Option<String>,
    pub body: Body,
}

impl StructureFile {
    pub fn kind(&self) -> Kind {
        match self.body {
            Body::Birack { .. } => Kind::Birack,
            Body::LeftQuasigroup { .. } => Kind::LeftQuasigroup,
            Body::Groupoid { .. } => Kind::Groupoid,
            Body::SolutionPerms { .. } => Kind::SolutionPerms,
        }
    }

    pub fn n(&self) -> usize {
        match &self.body {
            Body::Birack { circ, .. } => circ.n(),
            Body::LeftQuasigroup { op } | Body::Groupoid { op } => op.n(),
            Body::SolutionPerms { left, .. } => left.len(),
        }
    }

    /// `(∘, •)` for the two birack kinds.
    pub fn birack_tables(&self) -> Option<(BinaryOpTable, BinaryOpTable)> {
        match &self.body {
            Body::Birack { circ, bullet } => Some((circ.clone(), bullet.clone())),
            Body::SolutionPerms { left, right } => Some((
                BinaryOpTable::from_row_permutations(left).expect("parsed permutations"),
                BinaryOpTable::from_column_permutations(right).expect("parsed permutations"),
            )),
            _ => None,
        }
    }

    pub fn parse(text: &str) -> Result<StructureFile, ParseError> {
        Parser::default().run(text)
    }

    /// Canonical text: header, then tables with right-aligned entries.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        writeln!(out, "kind: {}", self.kind().name()).unwrap();
        writeln!(out, "n: {}", self.n()).unwrap();
        writeln!(out, "base: {}", self.base).unwrap();
        if let Some(note) = &self.note {
            writeln!(out, "note: {note}").unwrap();
        }
        let grid = |out: &mut String, name: &str, t: &BinaryOpTable| {
            let width = (self.base + t.n() - 1).to_string().len();
            writeln!(out, "{name}:").unwrap();
            for row in t.rows() {
                let cells: Vec<String> = row.iter().map(|v| format!("{:>width$}", v + self.base)).collect();
                writeln!(out, "{}", cells.join(" ")).unwrap();
            }
        };
        match &self.body {
            Body::Birack { circ, bullet } => {
                grid(&mut out, "circ", circ);
                grid(&mut out, "bullet", bullet);
            }
            Body::LeftQuasigroup { op } | Body::Groupoid { op } => grid(&mut out, "op", op),
            Body::SolutionPerms { left, right } => {
                for (prefix, perms) in [("L", left), ("R", right)] {
                    for (i, p) in perms.iter().enumerate() {
                        writeln!(out, "{prefix}{}: {}", i + self.base, p.to_cycle_string(self.base)).unwrap();
                    }
                }
            }
        }
        out
    }
}

struct Grid {
    name: String,
    line: usize,
    n: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Default)]
struct Parser {
    kind: Option<Kind>,
    n: Option<usize>,
    base: Option<usize>,
    note: Option<String>,
    grids: Vec<Grid>,
    left: Vec<Option<Permutation>>,
    right: Vec<Option<Permutation>>,
    last_line: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Splits on whitespace and commas, keeping 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        let sep = ch.is_whitespace() || ch == ',';
        match (sep, start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

const GRID_NAMES: [&str; 3] = ["circ", "bullet", "op"];

impl Parser {
    fn n_at(&self, line: usize) -> Result<usize, ParseError> {
        self.n
            .ok_or_else(|| err(line, 1, "`n` must come before any table or permutation"))
    }

    fn run(mut self, text: &str) -> Result<StructureFile, ParseError> {
        let mut open_grid: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            self.last_line = line_no;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(g) = open_grid {
                let n = self.grids[g].n;
                let row = self.parse_row(content, line_no, n)?;
                self.grids[g].rows.push(row);
                if self.grids[g].rows.len() == n {
                    open_grid = None;
                }
                continue;
            }
            let column_of = |byte: usize| content[..byte].chars().count() + 1;
            let key_col = column_of(content.len() - content.trim_start().len());
            let Some(colon) = content.find(':') else {
                return Err(err(
                    line_no,
                    key_col,
                    format!("expected `key: value`, found `{trimmed}`"),
                ));
            };
            let key = content[..colon].trim();
            let after = &content[colon + 1..];
            let value = after.trim();
            let value_col = column_of(colon + 1 + after.len() - after.trim_start().len());
            match key {
                "kind" => {
                    let kind =
                        Kind::parse(value).ok_or_else(|| err(line_no, value_col, format!("unknown kind `{value}`")))?;
                    set_once(&mut self.kind, kind, line_no, key_col, "kind")?;
                }
                "n" => {
                    let n: usize = value
                        .parse()
                        .map_err(|_| err(line_no, value_col, format!("`{value}` is not a size")))?;
                    if n == 0 {
                        return Err(err(line_no, value_col, "n must be positive"));
                    }
                    set_once(&mut self.n, n, line_no, key_col, "n")?;
                }
                "base" => {
                    let base: usize = value
                        .parse()
                        .map_err(|_| err(line_no, value_col, format!("`{value}` is not a base")))?;
                    set_once(&mut self.base, base, line_no, key_col, "base")?;
                }
                "note" => set_once(&mut self.note, value.to_string(), line_no, key_col, "note")?,
                name if GRID_NAMES.contains(&name) => {
                    if !value.is_empty() {
                        return Err(err(line_no, value_col, "table rows start on the next line"));
                    }
                    if self.grids.iter().any(|g| g.name == name) {
                        return Err(err(line_no, key_col, format!("duplicate table `{name}`")));
                    }
                    let n = self.n_at(line_no)?;
                    self.grids.push(Grid {
                        name: name.to_string(),
                        line: line_no,
                        n,
                        rows: Vec::with_capacity(n),
                    });
                    open_grid = Some(self.grids.len() - 1);
                }
                perm if perm.starts_with('L') || perm.starts_with('R') => {
                    let n = self.n_at(line_no)?;
                    let base = self.base.unwrap_or(0);
                    let index = perm[1..]
                        .parse::<usize>()
                        .ok()
                        .filter(|&i| i >= base && i < base + n)
                        .ok_or_else(|| err(line_no, key_col, format!("bad permutation label `{perm}`")))?
                        - base;
                    let p = Permutation::parse_cycles(value, n, base)
                        .map_err(|e| err(line_no, value_col, e.to_string()))?;
                    let slots = if perm.starts_with('L') {
                        &mut self.left
                    } else {
                        &mut self.right
                    };
                    slots.resize(n, None);
                    if slots[index].replace(p).is_some() {
                        return Err(err(line_no, key_col, format!("duplicate `{perm}`")));
                    }
                }
                other => return Err(err(line_no, key_col, format!("unknown key `{other}`"))),
            }
        }
        if let Some(g) = open_grid {
            return Err(err(
                self.last_line + 1,
                1,
                format!("table `{}` has too few rows", self.grids[g].name),
            ));
        }
        self.finish()
    }

    fn parse_row(&self, content: &str, line: usize, n: usize) -> Result<Vec<usize>, ParseError> {
        let base = self.base.unwrap_or(0);
        let toks = tokens(content);
        if toks.len() != n {
            let col = toks.get(n).map_or(content.chars().count() + 1, |t| t.0);
            return Err(err(line, col, format!("expected {n} entries, found {}", toks.len())));
        }
        toks.into_iter()
            .map(|(col, tok)| {
                let v: usize = tok
                    .parse()
                    .map_err(|_| err(line, col, format!("`{tok}` is not a number")))?;
                if v < base || v >= base + n {
                    return Err(err(line, col, format!("entry {v} outside {base}..{}", base + n - 1)));
                }
                Ok(v - base)
            })
            .collect()
    }

    fn take_grid(&mut self, name: &str) -> Option<BinaryOpTable> {
        let pos = self.grids.iter().position(|g| g.name == name)?;
        let grid = self.grids.remove(pos);
        Some(BinaryOpTable::from_rows(&grid.rows).expect("rows validated"))
    }

    fn finish(mut self) -> Result<StructureFile, ParseError> {
        let end = self.last_line + 1;
        let kind = self.kind.ok_or_else(|| err(end, 1, "missing `kind`"))?;
        let n = self.n.ok_or_else(|| err(end, 1, "missing `n`"))?;
        let base = self.base.unwrap_or(0);
        let wants: &[&str] = match kind {
            Kind::Birack => &["circ", "bullet"],
            Kind::LeftQuasigroup | Kind::Groupoid => &["op"],
            Kind::SolutionPerms => &[],
        };
        if let Some(g) = self.grids.iter().find(|g| !wants.contains(&g.name.as_str())) {
            return Err(err(
                g.line,
                1,
                format!("table `{}` does not belong to kind {}", g.name, kind.name()),
            ));
        }
        if kind != Kind::SolutionPerms && (self.left.iter().chain(&self.right).any(Option::is_some)) {
            return Err(err(
                end,
                1,
                format!("permutations do not belong to kind {}", kind.name()),
            ));
        }
        let mut grid = |name: &str| {
            self.take_grid(name)
                .ok_or_else(|| err(end, 1, format!("missing table `{name}`")))
        };
        let body = match kind {
            Kind::Birack => Body::Birack {
                circ: grid("circ")?,
                bullet: grid("bullet")?,
            },
            Kind::LeftQuasigroup => Body::LeftQuasigroup { op: grid("op")? },
            Kind::Groupoid => Body::Groupoid { op: grid("op")? },
            Kind::SolutionPerms => {
                let collect = |slots: &[Option<Permutation>], prefix: &str| -> Result<Vec<Permutation>, ParseError> {
                    (0..n)
                        .map(|i| {
                            slots
                                .get(i)
                                .cloned()
                                .flatten()
                                .ok_or_else(|| err(end, 1, format!("missing `{prefix}{}`", i + base)))
                        })
                        .collect()
                };
                Body::SolutionPerms {
                    left: collect(&self.left, "L")?,
                    right: collect(&self.right, "R")?,
                }
            }
        };
        Ok(StructureFile {
            base,
            note: self.note,
            body,
        })
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: usize, column: usize, key: &str) -> Result<(), ParseError> {
    if slot.is_some() {
        return Err(err(line, column, format!("duplicate `{key}`")));
    }
    *slot = Some(value);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const NELSON: &str = "kind: birack
n: 4
base: 1
circ:
2 1 3 4
2 1 4 3
1 2 3 4
1 2 3 4
bullet:
2 2 1 1
1 1 2 2
4 3 4 4
3 4 3 3
";

    #[test]
    fn parses_and_reserializes() {
        let f = StructureFile::parse(NELSON).unwrap();
        assert_eq!(f.kind(), Kind::Birack);
        assert_eq!(f.n(), 4);
        let (circ, _) = f.birack_tables().unwrap();
        assert_eq!(circ.row(0), &[1, 0, 2, 3]);
        assert_eq!(f.serialize(), NELSON);
    }

    #[test]
    fn comments_commas_and_blank_lines() {
        let text = "# a groupoid\nkind: groupoid\n\nn: 2\nop:\n0, 0 # row zero\n1,1\n";
        let f = StructureFile::parse(text).unwrap();
        assert_eq!(f.serialize(), "kind: groupoid\nn: 2\nbase: 0\nop:\n0 0\n1 1\n");
    }

    #[test]
    fn permutations() {
        let text = "kind: solution_perms\nn: 3\nbase: 1\nL1: (12)\nL2: ()\nL3: ()\nR1: ()\nR2: ()\nR3: (2 3)\n";
        let f = StructureFile::parse(text).unwrap();
        let Body::SolutionPerms { left, right } = &f.body else {
            panic!()
        };
        assert_eq!(left[0].images(), &[1, 0, 2]);
        assert_eq!(right[2].images(), &[0, 2, 1]);
        assert_eq!(StructureFile::parse(&f.serialize()).unwrap(), f);
        assert!(f.serialize().contains("R3: (23)\n"));
    }

    #[test]
    fn wide_entries_are_aligned() {
        let mut rows = Vec::new();
        for x in 0..11 {
            rows.push((0..11).map(|y| (x + y) % 11).collect::<Vec<_>>());
        }
        let f = StructureFile {
            base: 0,
            note: None,
            body: Body::Groupoid {
                op: BinaryOpTable::from_rows(&rows).unwrap(),
            },
        };
        let text = f.serialize();
        assert!(text.contains("\n 0  1  2"));
        assert_eq!(StructureFile::parse(&text).unwrap().serialize(), text);
    }

    fn error_of(text: &str) -> ParseError {
        StructureFile::parse(text).unwrap_err()
    }

    #[test]
    fn error_positions() {
        let e = error_of("kind: birack\nn: 2\ncirc:\n0 1\n0 7\n");
        assert_eq!((e.line, e.column), (5, 3));
        let e = error_of("kind: birack\nn: 2\ncirc:\n0 1\n0\n");
        assert_eq!((e.line, e.column), (5, 2));
        let e = error_of("kind: rack\n");
        assert_eq!((e.line, e.column), (1, 7));
        let e = error_of("kind: birack\nn: 2\ncirc:\n0 1\n");
        assert_eq!(e.line, 5);
        let e = error_of("kind: birack\nn: 2\ncirc:\n0 1\n1 0\n");
        assert!(e.message.contains("bullet"), "{e}");
        let e = error_of("kind: groupoid\nn: 2\nop:\n0 x\n1 1\n");
        assert_eq!((e.line, e.column), (4, 3));
        let e = error_of("kind: solution_perms\nn: 3\nL0: (0 5)\n");
        assert_eq!((e.line, e.column), (3, 5));
        let e = error_of("n: 2\n  bogus: 1\n");
        assert_eq!((e.line, e.column), (2, 3));
        assert!(error_of("kind: groupoid\nkind: groupoid\n")
            .message
            .contains("duplicate"));
        assert!(error_of("circ:\n").message.contains("`n`"));
    }
}
