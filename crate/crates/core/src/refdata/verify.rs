//! Row-by-row check of a reference table against the reconstructed ring.

use std::fmt;

use rayon::prelude::*;

use crate::coset::{ParabolicQuotient, SpaceId};
use crate::error::Result;
use crate::refdata::corpus::{Corpus, Label, ReferenceTable};
use crate::refdata::resolve::{resolve, Resolution};
use crate::graded::GradedClass;
use crate::ringrecon::{EvalOrder, Evaluator};
use crate::rootsystem::GroupKind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    /// The row evaluates to something other than its named class.
    Mismatch { expected: String, got: String },
    /// The label could not be matched to a class.
    Unresolved,
    /// Evaluation itself failed (e.g. degree overflow).
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowResult {
    pub label: Label,
    pub line: usize,
    pub status: RowStatus,
}

/// Labels of the E8/P8 identity `σ_a ⋆ σ_a = σ_b`.
pub const E8_SQUARE_BASE: &str = "(0,1,2,2,2,2,2,1)";
pub const E8_SQUARE: &str = "(2,3,4,4,4,3,2,2)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub space: SpaceId,
    pub rows: Vec<RowResult>,
    /// Rows whose value changes when generators are applied in the other order.
    pub coherence_failures: Vec<Label>,
    pub fano_index: u32,
    /// Smallest degree of a row containing `q`.
    pub first_q_degree: Option<u32>,
    /// Poincaré profile is palindromic and matches the rows per degree.
    pub profile_ok: bool,
    /// E8/P8 only.
    pub tableau_identity: Option<bool>,
}

impl VerificationReport {
    pub fn q_ok(&self) -> bool {
        self.first_q_degree.map_or(true, |d| d >= self.fano_index)
    }

    /// Pass iff there is no failure of any kind.
    pub fn is_ok(&self) -> bool {
        self.failures().next().is_none()
            && self.coherence_failures.is_empty()
            && self.q_ok()
            && self.profile_ok
            && self.tableau_identity != Some(false)
    }

    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.status == RowStatus::Pass).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &RowResult> {
        self.rows.iter().filter(|r| r.status != RowStatus::Pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} — {}/{} rows, coherence {}/{}, first q at {}, profile {}{}",
            self.space,
            if self.is_ok() { "ok" } else { "FAILED" },
            self.passed(),
            self.rows.len(),
            self.rows.len() - self.coherence_failures.len(),
            self.rows.len(),
            self.first_q_degree.map_or("none".to_string(), |d| format!("degree {d}")),
            if self.profile_ok { "ok" } else { "BAD" },
            match self.tableau_identity {
                Some(true) => ", tableau identity ok",
                Some(false) => ", tableau identity FAILED",
                None => "",
            }
        )?;
        for l in &self.coherence_failures {
            writeln!(f, "  row {l}: evaluation depends on generator order")?;
        }
        if !self.q_ok() {
            writeln!(f, "  q appears below the Fano index {}", self.fano_index)?;
        }
        for r in self.failures() {
            match &r.status {
                RowStatus::Mismatch { expected, got } => {
                    writeln!(f, "  line {}: row {}: expected {expected}, got {got}", r.line, r.label)?
                }
                RowStatus::Unresolved => writeln!(f, "  line {}: row {}: label not matched to a class", r.line, r.label)?,
                RowStatus::Error(e) => writeln!(f, "  line {}: row {}: {e}", r.line, r.label)?,
                RowStatus::Pass => {}
            }
        }
        Ok(())
    }
}

/// Validates, resolves and evaluates every row of `table`.
pub fn verify_table(table: &ReferenceTable) -> Result<(VerificationReport, Resolution)> {
    let quot = ParabolicQuotient::enumerate(table.space);
    table.validate(&quot)?;
    let res = resolve(table, quot)?;
    let report = check_rows(table, &res);
    Ok((report, res))
}

pub fn check_rows(table: &ReferenceTable, res: &Resolution) -> VerificationReport {
    let ring = &res.ring;
    let quot = &ring.quotient;
    let mut eval = Evaluator::new(ring, EvalOrder::HOutermost);
    let mut other = Evaluator::new(ring, EvalOrder::HInnermost);
    let mut coherence_failures = Vec::new();
    let mut rows = Vec::new();
    for row in &table.rows {
        let poly = row.polynomial();
        let value = eval.polynomial(&poly);
        if let (Ok(a), Ok(b)) = (&value, other.polynomial(&poly)) {
            if *a != b {
                coherence_failures.push(row.label.clone());
            }
        }
        let status = match (res.labels.get(&row.label), value) {
            (_, Err(e)) => RowStatus::Error(e.to_string()),
            (None, _) => RowStatus::Unresolved,
            (Some(&w), Ok(x)) if x.as_single_class() == Some(w) => RowStatus::Pass,
            (Some(&w), Ok(x)) => RowStatus::Mismatch {
                expected: format!("σ{}", quot.table_label(w)),
                got: x.display(quot).to_string(),
            },
        };
        rows.push(RowResult {
            label: row.label.clone(),
            line: row.line,
            status,
        });
    }

    let first_q_degree = table
        .rows
        .iter()
        .filter(|r| r.terms.iter().any(|(_, m)| m.q > 0))
        .filter_map(|r| r.label.degree(quot).ok())
        .min();

    let profile = quot.poincare_profile();
    let palindromic = profile.iter().eq(profile.iter().rev());
    let counts_match = (0..=quot.dimension).all(|d| {
        table.rows.iter().filter(|r| r.label.degree(quot).ok() == Some(d)).count() == profile[d as usize]
    });
    let dual_ok = (0..quot.len()).all(|w| {
        let v = quot.dual(w);
        quot.dual(v) == w && quot.length(v) + quot.length(w) == quot.dimension
    });

    let tableau_identity = (quot.space.kind == GroupKind::E8).then(|| e8_tableau_identity(table, res).unwrap_or(false));

    VerificationReport {
        space: table.space,
        rows,
        coherence_failures,
        fano_index: quot.fano_index,
        first_q_degree,
        profile_ok: palindromic && counts_match && dual_ok,
        tableau_identity,
    }
}

/// `σ_a ⋆ σ_a = σ_b` in E8/P8, with `σ_a` expanded through its table row.
pub fn e8_tableau_identity(table: &ReferenceTable, res: &Resolution) -> Result<bool> {
    let quot = &res.ring.quotient;
    let a = quot.parse_label(E8_SQUARE_BASE)?;
    let b = quot.parse_label(E8_SQUARE)?;
    let row = table
        .rows
        .iter()
        .find(|r| res.labels.get(&r.label) == Some(&a))
        .ok_or_else(|| crate::error::Error::UnknownLabel {
            space: quot.space.to_string(),
            label: E8_SQUARE_BASE.to_string(),
        })?;
    let x = GradedClass::schubert(quot, 0, a);
    Ok(res.ring.star(&row.polynomial(), &x).as_single_class() == Some(b))
}

/// Verifies every table of a corpus, spaces in parallel.
pub fn verify_corpus(corpus: &Corpus) -> Vec<Result<VerificationReport>> {
    corpus
        .tables
        .par_iter()
        .map(|t| verify_table(t).map(|(r, _)| r))
        .collect()
}
