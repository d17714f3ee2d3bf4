//! Matching table labels to Schubert classes.
//!
//! Root labels are looked up directly. Indexed labels (`degree.index`, used by
//! the E8/P8 table) carry no intrinsic meaning, so the assignment is found by
//! trial: every choice of generator classes of the declared degrees is tried,
//! and the one under which the rows evaluate to distinct single classes wins.
//! A cheap pass first discards generator candidates using only rows that are
//! linear in one generator, which need nothing beyond the Chevalley operator.

use std::collections::{BTreeMap, HashMap};

use crate::chevalley::ChevalleyData;
use crate::coset::ParabolicQuotient;
use crate::error::{Error, Result};
use crate::graded::GradedClass;
use crate::refdata::corpus::{Label, ReferenceTable};
use crate::ringrecon::{EvalOrder, Evaluator, GeneratorSet, QuantumRing};

/// Table label → class ordinal, plus the ring the labels were resolved in.
#[derive(Debug)]
pub struct Resolution {
    pub ring: QuantumRing,
    pub labels: HashMap<Label, usize>,
    /// For indexed tables: candidate pairs tried in full and surviving rows
    /// of the winner; empty for root-labelled tables.
    pub trials: Vec<Trial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trial {
    pub s: Option<usize>,
    pub t: Option<usize>,
    /// Rows that evaluated to a single class not claimed by another row.
    pub matched_rows: usize,
}

pub fn resolve(table: &ReferenceTable, quot: ParabolicQuotient) -> Result<Resolution> {
    let indexed = table.rows.iter().any(|r| matches!(r.label, Label::Indexed { .. }));
    if indexed {
        resolve_indexed(table, quot)
    } else {
        resolve_roots(table, quot)
    }
}

fn resolve_roots(table: &ReferenceTable, quot: ParabolicQuotient) -> Result<Resolution> {
    let mut labels = HashMap::new();
    for row in &table.rows {
        labels.insert(row.label.clone(), quot.parse_label(&row.label.to_string())?);
    }
    let standard = GeneratorSet::standard(&quot)?;
    for (name, def) in [('s', standard.s), ('t', standard.t)] {
        let declared = match table.generator(name) {
            Some(g) => Some(quot.parse_label(&g.label.to_string())?),
            None => None,
        };
        if declared != def.map(|d| d.ordinal) {
            return Err(Error::LabelSetMismatch(format!(
                "{}: table generator {name} is {} but the standard choice is {}",
                table.space,
                declared.map(|o| quot.table_label(o).to_string()).unwrap_or("absent".into()),
                def.map(|d| quot.table_label(d.ordinal).to_string()).unwrap_or("absent".into()),
            )));
        }
    }
    let ring = QuantumRing::with_generators(quot, standard)?;
    Ok(Resolution {
        ring,
        labels,
        trials: Vec::new(),
    })
}

/// Candidates for a generator of the given degree that survive the rows
/// linear in that generator alone.
fn linear_filter(table: &ReferenceTable, quot: &ParabolicQuotient, chev: &ChevalleyData, name: char) -> Vec<usize> {
    let Some(decl) = table.generator(name) else { return Vec::new() };
    let rows: Vec<_> = table
        .rows
        .iter()
        .filter(|r| {
            r.terms.iter().all(|(_, m)| {
                let (mine, other) = if name == 's' { (m.s, m.t) } else { (m.t, m.s) };
                mine <= 1 && other == 0
            })
        })
        .collect();
    quot.degree_range(decl.degree)
        .filter(|&g| {
            rows.iter().all(|row| {
                let mut acc = GradedClass::zero(0);
                for (c, m) in row.polynomial().terms() {
                    let e = if name == 's' { m.s } else { m.t };
                    let mut v = if e == 1 {
                        GradedClass::schubert(quot, 0, g)
                    } else {
                        GradedClass::unit()
                    };
                    v = v.shift_q(m.q, quot.fano_index);
                    for _ in 0..m.h {
                        match chev.apply_h(quot, &v) {
                            Ok(x) => v = x,
                            Err(_) => return false,
                        }
                    }
                    acc.add_scaled(&v, c);
                }
                acc.as_single_class().is_some()
            })
        })
        .collect()
}

/// Greedy claim: rows evaluating to a single class take it; each degree's
/// leftover row takes the leftover class if exactly one of each remains.
fn assign(table: &ReferenceTable, ring: &QuantumRing) -> (HashMap<Label, usize>, usize) {
    let quot = &ring.quotient;
    let mut eval = Evaluator::new(ring, EvalOrder::HOutermost);
    let mut labels = HashMap::new();
    let mut by_degree: BTreeMap<u32, (Vec<&Label>, Vec<usize>)> = BTreeMap::new();
    let mut claimed = vec![false; quot.len()];
    let mut matched = 0;
    for row in &table.rows {
        let hit = eval.polynomial(&row.polynomial()).ok().and_then(|x| x.as_single_class());
        match hit {
            Some(w) if !claimed[w] && row.label.degree(quot).ok() == Some(quot.length(w)) => {
                claimed[w] = true;
                labels.insert(row.label.clone(), w);
                matched += 1;
            }
            _ => {
                if let Ok(d) = row.label.degree(quot) {
                    by_degree.entry(d).or_default().0.push(&row.label);
                }
            }
        }
    }
    for (d, (rows, free)) in by_degree.iter_mut() {
        free.extend(quot.degree_range(*d).filter(|&w| !claimed[w]));
        if rows.len() == 1 && free.len() == 1 {
            labels.insert(rows[0].clone(), free[0]);
        }
    }
    (labels, matched)
}

fn resolve_indexed(table: &ReferenceTable, quot: ParabolicQuotient) -> Result<Resolution> {
    let chev = ChevalleyData::build(&quot);
    let s_cands = linear_filter(table, &quot, &chev, 's');
    let t_cands = linear_filter(table, &quot, &chev, 't');
    let opt = |v: Vec<usize>, declared: bool| -> Vec<Option<usize>> {
        if declared {
            v.into_iter().map(Some).collect()
        } else {
            vec![None]
        }
    };
    let s_opts = opt(s_cands, table.generator('s').is_some());
    let t_opts = opt(t_cands, table.generator('t').is_some());

    let mut trials = Vec::new();
    let mut best: Option<(usize, QuantumRing, HashMap<Label, usize>)> = None;
    let mut tie = false;
    for &s in &s_opts {
        for &t in &t_opts {
            let gens = GeneratorSet::from_ordinals(&quot, s, t)?;
            let ring = QuantumRing::with_generators(quot.clone(), gens)?;
            let (labels, matched) = assign(table, &ring);
            trials.push(Trial { s, t, matched_rows: matched });
            match &best {
                Some((m, ..)) if *m > matched => {}
                Some((m, ..)) if *m == matched => tie = true,
                _ => {
                    tie = false;
                    best = Some((matched, ring, labels));
                }
            }
        }
    }
    let Some((_, ring, labels)) = best else {
        return Err(Error::LabelSetMismatch(format!(
            "{}: no generator classes are consistent with the rows linear in s or t",
            table.space
        )));
    };
    if tie {
        return Err(Error::LabelSetMismatch(format!(
            "{}: several generator choices explain the table equally well",
            table.space
        )));
    }
    Ok(Resolution { ring, labels, trials })
}

/// Whether indices at degree `d` run over `m+1 ..= m+n_d` with
/// `m = n_{d−c}`, i.e. the numbering counts `q·σ` classes of degree `d − c`
/// ahead of the classical ones.
pub fn index_offsets_follow_quantum_count(table: &ReferenceTable, quot: &ParabolicQuotient) -> bool {
    let mut by_degree: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for row in &table.rows {
        if let Label::Indexed { degree, index } = row.label {
            by_degree.entry(degree).or_default().push(index);
        }
    }
    let c = quot.fano_index;
    by_degree.into_iter().all(|(d, mut idx)| {
        idx.sort_unstable();
        let m = if d >= c { quot.degree_range(d - c).len() as u32 } else { 0 };
        idx == (m + 1..=m + quot.degree_range(d).len() as u32).collect::<Vec<_>>()
    })
}
