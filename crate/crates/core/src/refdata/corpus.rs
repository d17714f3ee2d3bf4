//! The reference-table text format.
//!
//! ```text
//! space E6/P1
//! gen s 4 (1,1,1,1,0,0)
//! row (1,1,1,1,0,0) : 1/1 0 1 0 0
//! row (1,1,1,1,1,0) : 1/1 5 0 0 0 ; -1/1 1 1 0 0
//! ```
//!
//! A row lists `coefficient a b c e` terms for `h^a s^b t^c q^e`, separated
//! by `;`. Coefficients are always written `num/den` in lowest terms. Labels
//! are either root tuples in table coordinates or `degree.index`. `q` is
//! implicit (degree = Fano index). Blank lines and `#` comments are skipped
//! and not preserved.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::coset::{ParabolicQuotient, SpaceId};
use crate::error::{Error, Result};
use crate::poly::{GiambelliPolynomial, Monomial};
use crate::rational::{format_q, is_canonical_q, parse_q, Q};
use crate::rootsystem::RootCoords;

const SHIPPED: [(&str, &str); 9] = [
    ("e6p1", include_str!("../../data/e6p1.qh")),
    ("e6p2", include_str!("../../data/e6p2.qh")),
    ("e7p1", include_str!("../../data/e7p1.qh")),
    ("e7p7", include_str!("../../data/e7p7.qh")),
    ("e8p8", include_str!("../../data/e8p8.qh")),
    ("f4p1", include_str!("../../data/f4p1.qh")),
    ("f4p4", include_str!("../../data/f4p4.qh")),
    ("g2p1", include_str!("../../data/g2p1.qh")),
    ("g2p2", include_str!("../../data/g2p2.qh")),
];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    /// Root tuple in table coordinates.
    Root(RootCoords),
    /// `degree.index`, 1-based index within the degree.
    Indexed { degree: u32, index: u32 },
}

impl Label {
    /// Degree of the labelled class; root labels need the enumeration.
    pub fn degree(&self, quot: &ParabolicQuotient) -> Result<u32> {
        match self {
            Label::Root(r) => Ok(quot.length(quot.parse_label(&r.to_string())?)),
            Label::Indexed { degree, .. } => Ok(*degree),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Root(r) => write!(f, "{r}"),
            Label::Indexed { degree, index } => write!(f, "{degree}.{index}"),
        }
    }
}

impl FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Label, String> {
        if let Some(inner) = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
            let coords: std::result::Result<Vec<i64>, _> = inner.split(',').map(str::parse).collect();
            return match coords {
                Ok(c) if !c.is_empty() && c.iter().all(|&x| x >= 0) => Ok(Label::Root(RootCoords(c))),
                _ => Err(format!("malformed root label `{s}`")),
            };
        }
        let (d, i) = s.split_once('.').ok_or_else(|| format!("malformed label `{s}`"))?;
        match (d.parse(), i.parse()) {
            (Ok(degree), Ok(index)) if index > 0 => Ok(Label::Indexed { degree, index }),
            _ => Err(format!("malformed label `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorDecl {
    pub name: char,
    pub degree: u32,
    pub label: Label,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceRow {
    pub label: Label,
    /// Terms in file order (not canonicalized), so that printing is lossless.
    pub terms: Vec<(Q, Monomial)>,
    /// 1-based line in the source text, 0 if built in memory.
    pub line: usize,
}

impl ReferenceRow {
    pub fn polynomial(&self) -> GiambelliPolynomial {
        GiambelliPolynomial::from_terms(self.terms.iter().cloned())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceTable {
    pub space: SpaceId,
    pub generators: Vec<GeneratorDecl>,
    pub rows: Vec<ReferenceRow>,
}

impl ReferenceTable {
    pub fn generator(&self, name: char) -> Option<&GeneratorDecl> {
        self.generators.iter().find(|g| g.name == name)
    }

    pub fn row(&self, label: &Label) -> Option<&ReferenceRow> {
        self.rows.iter().find(|r| &r.label == label)
    }

    /// Structural checks against the coset enumeration: labels exist and
    /// cover every class exactly once, generator degrees agree with their
    /// labels, and every row is homogeneous of its label's degree.
    pub fn validate(&self, quot: &ParabolicQuotient) -> Result<()> {
        let inv = |row: &ReferenceRow, degree: u32, message: String| Error::Invariant {
            space: self.space.to_string(),
            degree,
            row: row.label.to_string(),
            message,
        };
        let deg_of = |name: char| self.generator(name).map(|g| g.degree).unwrap_or(0);
        for g in &self.generators {
            if g.degree != g.label.degree(quot)? {
                return Err(Error::Invariant {
                    space: self.space.to_string(),
                    degree: g.degree,
                    row: g.label.to_string(),
                    message: format!("generator {} declared with degree {}", g.name, g.degree),
                });
            }
        }
        let mut seen = HashSet::new();
        let mut per_degree: BTreeMap<u32, usize> = BTreeMap::new();
        for row in &self.rows {
            let d = row.label.degree(quot)?;
            if !seen.insert(row.label.clone()) {
                return Err(inv(row, d, "duplicate label".into()));
            }
            if d > quot.dimension {
                return Err(inv(row, d, "label degree exceeds the dimension".into()));
            }
            *per_degree.entry(d).or_default() += 1;
            for (c, m) in &row.terms {
                if (m.s > 0 && self.generator('s').is_none()) || (m.t > 0 && self.generator('t').is_none()) {
                    return Err(inv(row, d, format!("term {c} {m} uses an undeclared generator")));
                }
                let md = m.degree(deg_of('s'), deg_of('t'), quot.fano_index);
                if md != d {
                    return Err(inv(row, d, format!("term {m} has degree {md}")));
                }
            }
            if row.polynomial().is_zero() {
                return Err(inv(row, d, "polynomial is zero".into()));
            }
        }
        for d in 0..=quot.dimension {
            let want = quot.degree_range(d).len();
            let got = per_degree.get(&d).copied().unwrap_or(0);
            if want != got {
                return Err(Error::LabelSetMismatch(format!(
                    "{}: degree {d} has {got} rows but {want} Schubert classes",
                    self.space
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ReferenceTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "space {}", self.space)?;
        for g in &self.generators {
            writeln!(f, "gen {} {} {}", g.name, g.degree, g.label)?;
        }
        for row in &self.rows {
            write!(f, "row {} :", row.label)?;
            for (i, (c, m)) in row.terms.iter().enumerate() {
                if i > 0 {
                    write!(f, " ;")?;
                }
                write!(f, " {} {} {} {} {}", format_q(c), m.h, m.s, m.t, m.q)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    pub tables: Vec<ReferenceTable>,
}

impl Corpus {
    /// The tables bundled with the crate, one per space.
    pub fn shipped() -> Corpus {
        let mut tables = Vec::new();
        for (slug, text) in SHIPPED {
            let c = parse(text).unwrap_or_else(|e| panic!("bundled table {slug}: {e}"));
            tables.extend(c.tables);
        }
        Corpus { tables }
    }

    pub fn shipped_text(space: SpaceId) -> &'static str {
        let slug = space.slug();
        SHIPPED.iter().find(|(s, _)| *s == slug).map(|(_, t)| *t).expect("every space is bundled")
    }

    pub fn table(&self, space: SpaceId) -> Option<&ReferenceTable> {
        self.tables.iter().find(|t| t.space == space)
    }

    pub fn row_count(&self) -> usize {
        self.tables.iter().map(|t| t.rows.len()).sum()
    }
}

impl fmt::Display for Corpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tables.iter().try_for_each(|t| write!(f, "{t}"))
    }
}

impl FromStr for Corpus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Corpus> {
        parse(s)
    }
}

/// Whitespace-separated tokens with 1-based columns (in characters).
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    let mut col = 0;
    let mut start_col = 0;
    for (i, ch) in line.char_indices() {
        col += 1;
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((start_col, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
            start_col = col;
        }
    }
    if let Some(s) = start {
        out.push((start_col, &line[s..]));
    }
    out
}

pub fn parse(text: &str) -> Result<Corpus> {
    let mut tables: Vec<ReferenceTable> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(&(c0, keyword)) = toks.first() else { continue };
        let err = |column: usize, message: String| Error::Parse { line, column, message };
        let end_col = raw.chars().count() + 1;
        let tok = |i: usize, what: &str| -> Result<(usize, &str)> {
            toks.get(i).copied().ok_or_else(|| err(end_col, format!("expected {what}")))
        };
        match keyword {
            "space" => {
                let (c, name) = tok(1, "space name")?;
                let space: SpaceId = name.parse().map_err(|e: Error| err(c, e.to_string()))?;
                if tables.iter().any(|t| t.space == space) {
                    return Err(err(c, format!("space {space} declared twice")));
                }
                if let Some(&(c, extra)) = toks.get(2) {
                    return Err(err(c, format!("unexpected `{extra}`")));
                }
                tables.push(ReferenceTable {
                    space,
                    generators: Vec::new(),
                    rows: Vec::new(),
                });
            }
            "gen" | "row" => {
                let table = tables.last_mut().ok_or_else(|| err(c0, format!("`{keyword}` before any `space` line")))?;
                if keyword == "gen" {
                    let (c, name) = tok(1, "generator name")?;
                    let name = match name {
                        "s" => 's',
                        "t" => 't',
                        _ => return Err(err(c, format!("generator must be s or t, found `{name}`"))),
                    };
                    if table.generator(name).is_some() {
                        return Err(err(c, format!("generator {name} declared twice")));
                    }
                    let (c, deg) = tok(2, "generator degree")?;
                    let degree: u32 = deg.parse().map_err(|_| err(c, format!("bad degree `{deg}`")))?;
                    let (c, lab) = tok(3, "generator label")?;
                    let label = lab.parse().map_err(|m| err(c, m))?;
                    if let Some(&(c, extra)) = toks.get(4) {
                        return Err(err(c, format!("unexpected `{extra}`")));
                    }
                    table.generators.push(GeneratorDecl { name, degree, label });
                } else {
                    let (c, lab) = tok(1, "row label")?;
                    let label = lab.parse().map_err(|m| err(c, m))?;
                    let (c, colon) = tok(2, "`:`")?;
                    if colon != ":" {
                        return Err(err(c, format!("expected `:`, found `{colon}`")));
                    }
                    let mut terms = Vec::new();
                    let mut i = 3;
                    loop {
                        let (c, coef) = tok(i, "coefficient")?;
                        if !coef.contains('/') || !is_canonical_q(coef) {
                            return Err(err(c, format!("coefficient `{coef}` is not a reduced num/den")));
                        }
                        let coef = parse_q(coef).expect("canonical");
                        let mut e = [0u32; 4];
                        for (k, slot) in e.iter_mut().enumerate() {
                            let (c, x) = tok(i + 1 + k, "exponent")?;
                            *slot = x.parse().map_err(|_| err(c, format!("bad exponent `{x}`")))?;
                        }
                        terms.push((coef, Monomial::new(e[0], e[1], e[2], e[3])));
                        i += 5;
                        match toks.get(i) {
                            None => break,
                            Some(&(_, ";")) => i += 1,
                            Some(&(c, other)) => return Err(err(c, format!("expected `;`, found `{other}`"))),
                        }
                    }
                    table.rows.push(ReferenceRow { label, terms, line });
                }
            }
            other => return Err(err(c0, format!("unknown keyword `{other}`"))),
        }
    }
    if tables.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            column: 1,
            message: "no `space` line".to_string(),
        });
    }
    Ok(Corpus { tables })
}
