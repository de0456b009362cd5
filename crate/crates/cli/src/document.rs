//! The line-oriented text format for bipartite tournaments and completions.
//!
//! ```text
//! # comments run to the end of the line
//! V1: u1 u2
//! V2: v1 v2
//! ARCS:
//! u1 -> v1
//! v2 -> u1
//! u2 -> v1
//! u2 -> v2
//! INTRA:
//! u2 -> u1
//! v1 -> v2
//! ```
//!
//! `ARCS:` orients every cross pair exactly once. `INTRA:` is optional and,
//! when present, orients every same-side pair exactly once. The order in
//! which names are listed fixes the vertex indices.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use bitour::{BipartiteTournament, Completion, Side, VertexId};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: vertex name {name:?} is used twice")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}, column {column}: unknown vertex {name:?}")]
    UnknownName {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("line {line}: {a} and {b} are both oriented more than once")]
    DoubleOrientation { line: usize, a: String, b: String },
    #[error("no arc between {0} and {1}")]
    MissingPair(String, String),
    #[error("missing {0} section")]
    MissingSection(&'static str),
    #[error(transparent)]
    Graph(#[from] bitour::Error),
}

/// A parsed and validated document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigraphDocument {
    pub v1: Vec<String>,
    pub v2: Vec<String>,
    pub arcs: Vec<(String, String)>,
    /// Present exactly when the document describes a completion.
    pub intra: Option<Vec<(String, String)>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    V1,
    V2,
    Arcs,
    Intra,
}

impl Section {
    fn header(self) -> &'static str {
        match self {
            Section::V1 => "V1:",
            Section::V2 => "V2:",
            Section::Arcs => "ARCS:",
            Section::Intra => "INTRA:",
        }
    }

    fn of_header(token: &str) -> Option<Section> {
        [Section::V1, Section::V2, Section::Arcs, Section::Intra]
            .into_iter()
            .find(|s| s.header() == token)
    }
}

/// Whitespace-separated tokens with their 1-based columns, comments removed.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let line = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain([(line.len(), ' ')]) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

/// An arc as written on one line, with positions for error reports.
struct RawArc<'a> {
    line: usize,
    tail: (usize, &'a str),
    head: (usize, &'a str),
}

pub fn parse_document(text: &str) -> Result<DigraphDocument, FormatError> {
    let mut names: [Option<Vec<(usize, &str)>>; 2] = [None, None];
    let mut arcs: Vec<RawArc> = Vec::new();
    let mut intra: Option<Vec<RawArc>> = None;
    let mut current: Option<Section> = None;
    let mut seen = Vec::new();

    for (n, line) in text.lines().enumerate() {
        let line_no = n + 1;
        let toks = tokens(line);
        let Some(&(column, first)) = toks.first() else {
            continue;
        };
        let syntax = |column, message: String| FormatError::Syntax {
            line: line_no,
            column,
            message,
        };
        if let Some(section) = Section::of_header(first) {
            if seen.contains(&section) {
                return Err(syntax(
                    column,
                    format!("second {} section", section.header()),
                ));
            }
            seen.push(section);
            current = Some(section);
            match section {
                Section::V1 | Section::V2 => {
                    let slot = usize::from(section == Section::V2);
                    names[slot] = Some(toks[1..].iter().map(|&(_, t)| (line_no, t)).collect());
                }
                Section::Arcs | Section::Intra => {
                    if let Some(&(c, t)) = toks.get(1) {
                        return Err(syntax(
                            c,
                            format!("unexpected {t:?} after {}", section.header()),
                        ));
                    }
                    if section == Section::Intra {
                        intra = Some(Vec::new());
                    }
                }
            }
            continue;
        }
        let target = match current {
            Some(Section::Arcs) => &mut arcs,
            Some(Section::Intra) => intra.as_mut().expect("opened with its header"),
            _ => {
                return Err(syntax(
                    column,
                    format!("expected a section header, found {first:?}"),
                ))
            }
        };
        match toks.as_slice() {
            [tail, (_, "->"), head] => target.push(RawArc {
                line: line_no,
                tail: *tail,
                head: *head,
            }),
            _ => return Err(syntax(column, "expected an arc `tail -> head`".into())),
        }
    }

    let [Some(v1), Some(v2)] = names else {
        let missing = if names[0].is_none() { "V1:" } else { "V2:" };
        return Err(FormatError::MissingSection(missing));
    };
    if !seen.contains(&Section::Arcs) {
        return Err(FormatError::MissingSection("ARCS:"));
    }

    let mut index: HashMap<&str, VertexId> = HashMap::new();
    for (side, list) in [(Side::One, &v1), (Side::Two, &v2)] {
        for (i, &(line, name)) in list.iter().enumerate() {
            if index.insert(name, VertexId { side, index: i }).is_some() {
                return Err(FormatError::DuplicateName {
                    line,
                    name: name.to_owned(),
                });
            }
        }
    }
    let doc = DigraphDocument {
        v1: v1.iter().map(|&(_, s)| s.to_owned()).collect(),
        v2: v2.iter().map(|&(_, s)| s.to_owned()).collect(),
        arcs: check_arcs(&index, &arcs, false)?,
        intra: intra
            .map(|raw| check_arcs(&index, &raw, true))
            .transpose()?,
    };
    doc.check_coverage()?;
    doc.to_bipartite()?;
    Ok(doc)
}

/// Resolves names and rejects arcs on the wrong kind of pair.
fn check_arcs(
    index: &HashMap<&str, VertexId>,
    raw: &[RawArc],
    same_side: bool,
) -> Result<Vec<(String, String)>, FormatError> {
    let mut seen: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    let mut out = Vec::with_capacity(raw.len());
    for arc in raw {
        let lookup = |(column, name): (usize, &str)| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| FormatError::UnknownName {
                    line: arc.line,
                    column,
                    name: name.to_owned(),
                })
        };
        let (a, b) = (lookup(arc.tail)?, lookup(arc.head)?);
        let syntax = |message: String| FormatError::Syntax {
            line: arc.line,
            column: arc.tail.0,
            message,
        };
        if a == b {
            return Err(syntax(format!("loop at {}", arc.tail.1)));
        }
        if (a.side == b.side) != same_side {
            let message = if same_side {
                "cross arcs belong under ARCS:"
            } else {
                "arcs inside one side belong under INTRA:"
            };
            return Err(syntax(format!(
                "{} -> {}: {message}",
                arc.tail.1, arc.head.1
            )));
        }
        let key = (a.min(b), a.max(b));
        if seen.insert(key, arc.line).is_some() {
            return Err(FormatError::DoubleOrientation {
                line: arc.line,
                a: arc.tail.1.to_owned(),
                b: arc.head.1.to_owned(),
            });
        }
        out.push((arc.tail.1.to_owned(), arc.head.1.to_owned()));
    }
    Ok(out)
}

impl DigraphDocument {
    /// Names the vertices of `d` `u1, u2, ..` and `v1, v2, ..`.
    pub fn from_bipartite(d: &BipartiteTournament) -> Self {
        let v1 = (1..=d.n1()).map(|i| format!("u{i}")).collect();
        let v2 = (1..=d.n2()).map(|i| format!("v{i}")).collect();
        Self::named(d, v1, v2)
    }

    /// Writes `d` with the given vertex names, listed in index order.
    pub fn named(d: &BipartiteTournament, v1: Vec<String>, v2: Vec<String>) -> Self {
        let mut doc = DigraphDocument {
            v1,
            v2,
            arcs: Vec::new(),
            intra: None,
        };
        for i in 0..d.n1() {
            for j in 0..d.n2() {
                let (u, v) = (VertexId::one(i), VertexId::two(j));
                let (a, b) = if d.arc(u, v) { (u, v) } else { (v, u) };
                doc.arcs
                    .push((doc.name(a).to_owned(), doc.name(b).to_owned()));
            }
        }
        doc
    }

    /// This document's names with the intra arcs of `t`.
    pub fn with_completion(&self, t: &Completion) -> Self {
        let mut doc = Self::named(t.base(), self.v1.clone(), self.v2.clone());
        let arcs = [Side::One, Side::Two]
            .into_iter()
            .flat_map(|side| {
                t.intra_arcs(side)
                    .into_iter()
                    .map(move |(a, b)| (VertexId { side, index: a }, VertexId { side, index: b }))
            })
            .map(|(a, b)| (doc.name(a).to_owned(), doc.name(b).to_owned()))
            .collect();
        doc.intra = Some(arcs);
        doc
    }

    pub fn name(&self, v: VertexId) -> &str {
        match v.side {
            Side::One => &self.v1[v.index],
            Side::Two => &self.v2[v.index],
        }
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        let find = |list: &[String]| list.iter().position(|n| n == name);
        find(&self.v1)
            .map(VertexId::one)
            .or_else(|| find(&self.v2).map(VertexId::two))
    }

    fn resolve(&self, arcs: &[(String, String)]) -> Vec<(VertexId, VertexId)> {
        arcs.iter()
            .map(|(a, b)| {
                let v = |n: &str| self.vertex(n).expect("names checked at parse time");
                (v(a), v(b))
            })
            .collect()
    }

    /// Reports the first unoriented pair in index order.
    fn check_coverage(&self) -> Result<(), FormatError> {
        let missing = |a: VertexId, b: VertexId| {
            FormatError::MissingPair(self.name(a).to_owned(), self.name(b).to_owned())
        };
        let cross = self.resolve(&self.arcs);
        let oriented = |arcs: &[(VertexId, VertexId)], a, b| {
            arcs.iter()
                .any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
        };
        for i in 0..self.v1.len() {
            for j in 0..self.v2.len() {
                let (u, v) = (VertexId::one(i), VertexId::two(j));
                if !oriented(&cross, u, v) {
                    return Err(missing(u, v));
                }
            }
        }
        if let Some(intra) = &self.intra {
            let intra = self.resolve(intra);
            for (side, n) in [(Side::One, self.v1.len()), (Side::Two, self.v2.len())] {
                for i in 0..n {
                    for j in i + 1..n {
                        let (a, b) = (VertexId { side, index: i }, VertexId { side, index: j });
                        if !oriented(&intra, a, b) {
                            return Err(missing(a, b));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_bipartite(&self) -> Result<BipartiteTournament, FormatError> {
        let arcs = self.resolve(&self.arcs);
        let d = BipartiteTournament::from_fn(self.v1.len(), self.v2.len(), |i, j| {
            arcs.contains(&(VertexId::one(i), VertexId::two(j)))
        })?;
        Ok(d)
    }

    /// The completion, when the document has an `INTRA:` section.
    pub fn to_completion(&self) -> Result<Option<Completion>, FormatError> {
        let Some(intra) = &self.intra else {
            return Ok(None);
        };
        let arcs = self.resolve(intra);
        Ok(Some(Completion::from_fn(self.to_bipartite()?, |a, b| {
            arcs.contains(&(a, b))
        })))
    }
}

impl fmt::Display for DigraphDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "V1: {}", self.v1.join(" "))?;
        writeln!(f, "V2: {}", self.v2.join(" "))?;
        writeln!(f, "ARCS:")?;
        for (a, b) in &self.arcs {
            writeln!(f, "{a} -> {b}")?;
        }
        if let Some(intra) = &self.intra {
            writeln!(f, "INTRA:")?;
            for (a, b) in intra {
                writeln!(f, "{a} -> {b}")?;
            }
        }
        Ok(())
    }
}

/// DOT source with cross arcs solid and intra arcs dashed.
pub fn export_dot(doc: &DigraphDocument) -> String {
    let quote = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
    let mut out = String::from("digraph D {\n");
    for (rank, names) in [(1, &doc.v1), (2, &doc.v2)] {
        let _ = writeln!(out, "  subgraph part{rank} {{ rank = same;");
        for name in names {
            let _ = writeln!(out, "    {};", quote(name));
        }
        out.push_str("  }\n");
    }
    for (a, b) in &doc.arcs {
        let _ = writeln!(out, "  {} -> {};", quote(a), quote(b));
    }
    for (a, b) in doc.intra.iter().flatten() {
        let _ = writeln!(out, "  {} -> {} [style=dashed];", quote(a), quote(b));
    }
    out.push_str("}\n");
    out
}
