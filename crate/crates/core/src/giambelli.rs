//! Quantum Giambelli polynomials: every Schubert class as a polynomial in
//! `h, s, t, q`.
//!
//! In each degree `d` the graded piece of the quantum ring has basis
//! `q^k σ_w` with `k·c + ℓ(w) = d`. Monomials of degree `d` are scanned in
//! basis order and kept when their image is independent of those already
//! kept; once they span, each `σ_w` is solved for exactly. Every polynomial
//! is then evaluated back as a certificate.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graded::GradedClass;
use crate::linalg::{Added, SparseSystem};
use crate::poly::{GiambelliPolynomial, Monomial};
use crate::rational::Q;
use crate::ringrecon::{monomial_basis, EvalOrder, Evaluator, QuantumRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GiambelliEntry {
    pub ordinal: usize,
    pub polynomial: GiambelliPolynomial,
    /// The polynomial was evaluated and gave exactly `σ_ordinal`.
    pub certified: bool,
}

#[derive(Clone, Debug)]
pub struct GiambelliTable {
    /// Indexed by ordinal.
    pub entries: Vec<GiambelliEntry>,
    /// Chosen monomial basis per degree.
    pub bases: Vec<Vec<Monomial>>,
}

impl GiambelliTable {
    pub fn polynomial(&self, ordinal: usize) -> &GiambelliPolynomial {
        &self.entries[ordinal].polynomial
    }

    pub fn all_certified(&self) -> bool {
        self.entries.iter().all(|e| e.certified)
    }
}

/// Computes the table for every class of the ring.
pub fn solve_table(ring: &QuantumRing) -> Result<GiambelliTable> {
    let quot = &ring.quotient;
    let mut eval = Evaluator::new(ring, EvalOrder::HOutermost);
    let mut entries: Vec<Option<GiambelliEntry>> = vec![None; quot.len()];
    let mut bases = Vec::new();

    for d in 0..=ring.dimension() {
        let keys = ring.component(d);
        let index: HashMap<(u32, usize), usize> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();

        let mut span = SparseSystem::new(keys.len());
        let mut chosen: Vec<(Monomial, GradedClass)> = Vec::new();
        for m in monomial_basis(&ring.generators, d) {
            if chosen.len() == keys.len() {
                break;
            }
            let v = eval.monomial(m)?;
            if span.add_equation(v.terms().map(|(k, c)| (index[k], c.clone())), Q::zero()) == Added::NewPivot {
                chosen.push((m, v));
            }
        }
        if chosen.len() < keys.len() {
            return Err(Error::Unsolvable {
                space: quot.space.to_string(),
                degree: d,
            });
        }

        for w in quot.degree_range(d) {
            // Σ_j x_j · image_j = σ_w, one equation per basis key
            let mut sys = SparseSystem::new(chosen.len());
            let mut rows: Vec<Vec<(usize, Q)>> = vec![Vec::new(); keys.len()];
            for (j, (_, v)) in chosen.iter().enumerate() {
                for (k, c) in v.terms() {
                    rows[index[k]].push((j, c.clone()));
                }
            }
            for (i, row) in rows.into_iter().enumerate() {
                let rhs = if keys[i] == (0, w) { Q::one() } else { Q::zero() };
                sys.add_equation(row, rhs);
            }
            let x = sys.solve().ok_or_else(|| Error::Unsolvable {
                space: quot.space.to_string(),
                degree: d,
            })?;
            let poly = GiambelliPolynomial::from_terms(chosen.iter().zip(x).map(|((m, _), c)| (c, *m)));
            let certified = eval.polynomial(&poly)?.as_single_class() == Some(w);
            entries[w] = Some(GiambelliEntry {
                ordinal: w,
                polynomial: poly,
                certified,
            });
        }
        bases.push(chosen.into_iter().map(|(m, _)| m).collect());
    }
    Ok(GiambelliTable {
        entries: entries.into_iter().map(|e| e.expect("every degree visited")).collect(),
        bases,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    EqualAsPolynomials,
    /// Different polynomials with the same value in the quantum ring.
    EqualByEvaluation,
    Mismatch,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::EqualAsPolynomials => "EQUAL",
            Comparison::EqualByEvaluation => "EQUAL-BY-EVALUATION",
            Comparison::Mismatch => "MISMATCH",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComparisonReport {
    /// `(ordinal, verdict)` for each reference polynomial.
    pub entries: Vec<(usize, Comparison)>,
}

impl ComparisonReport {
    pub fn count(&self, kind: &Comparison) -> usize {
        self.entries.iter().filter(|(_, c)| c == kind).count()
    }
}

/// Compares reference polynomials `(ordinal, P)` against the computed table.
pub fn compare_tables(ring: &QuantumRing, ours: &GiambelliTable, reference: &[(usize, GiambelliPolynomial)]) -> ComparisonReport {
    let mut eval = Evaluator::new(ring, EvalOrder::HOutermost);
    let entries = reference
        .iter()
        .map(|(w, p)| {
            let mine = ours.polynomial(*w);
            let verdict = if mine == p {
                Comparison::EqualAsPolynomials
            } else {
                match (eval.polynomial(mine), eval.polynomial(p)) {
                    (Ok(a), Ok(b)) if a == b => Comparison::EqualByEvaluation,
                    _ => Comparison::Mismatch,
                }
            };
            (*w, verdict)
        })
        .collect();
    ComparisonReport { entries }
}

impl QuantumRing {
    /// `x ⋆ y`, with `x` rewritten through its Giambelli polynomials.
    pub fn multiply(&self, table: &GiambelliTable, x: &GradedClass, y: &GradedClass) -> GradedClass {
        let px = GiambelliPolynomial::from_terms(x.terms().flat_map(|(&(k, w), c)| {
            table
                .polynomial(w)
                .shifted(Monomial::new(0, 0, 0, k))
                .terms()
                .iter()
                .map(|(a, m)| (a * c, *m))
                .collect::<Vec<_>>()
        }));
        let mut out = self.star(&px, y);
        out.degree = x.degree + y.degree;
        out
    }
}
