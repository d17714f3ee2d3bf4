//! Homogeneous elements of `QH*(G/P)` and degree-shifting `Q[q]`-linear operators.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::coset::ParabolicQuotient;
use crate::rational::{display_q, Q};

/// `(q-power, class ordinal)`.
pub type BasisKey = (u32, usize);

/// A homogeneous class `Σ c · q^k σ_w` with `k · fano_index + ℓ(w) = degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedClass {
    pub degree: u32,
    terms: BTreeMap<BasisKey, Q>,
}

impl GradedClass {
    pub fn zero(degree: u32) -> GradedClass {
        GradedClass { degree, terms: BTreeMap::new() }
    }

    pub fn unit() -> GradedClass {
        GradedClass::basis(0, 0, 0)
    }

    /// `q^k σ_w`, where the caller supplies the matching degree.
    pub fn basis(degree: u32, qpower: u32, ordinal: usize) -> GradedClass {
        let mut terms = BTreeMap::new();
        terms.insert((qpower, ordinal), Q::one());
        GradedClass { degree, terms }
    }

    /// `q^k σ_w` with the degree computed from the quotient.
    pub fn schubert(quot: &ParabolicQuotient, qpower: u32, ordinal: usize) -> GradedClass {
        GradedClass::basis(qpower * quot.fano_index + quot.length(ordinal), qpower, ordinal)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, qpower: u32, ordinal: usize) -> Q {
        self.terms.get(&(qpower, ordinal)).cloned().unwrap_or_else(Q::zero)
    }

    /// Adds `c` to one coordinate, dropping it if the sum vanishes.
    pub fn add_term(&mut self, key: BasisKey, c: &Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &GradedClass, c: &Q) {
        debug_assert!(other.is_zero() || self.is_zero() || other.degree == self.degree);
        if self.terms.is_empty() {
            self.degree = other.degree;
        }
        for (k, v) in &other.terms {
            self.add_term(*k, &(v * c));
        }
    }

    pub fn scaled(&self, c: &Q) -> GradedClass {
        let mut out = GradedClass::zero(self.degree);
        out.add_scaled(self, c);
        out.degree = self.degree;
        out
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: u32, fano_index: u32) -> GradedClass {
        GradedClass {
            degree: self.degree + k * fano_index,
            terms: self.terms.iter().map(|((e, w), c)| ((e + k, *w), c.clone())).collect(),
        }
    }

    /// The ordinal `w` when the class is exactly `σ_w`.
    pub fn as_single_class(&self) -> Option<usize> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(k, w), c) = self.terms.iter().next()?;
        (k == 0 && c.is_one()).then_some(w)
    }

    /// Checks `k · fano_index + ℓ(w) = degree` for every term.
    pub fn is_homogeneous(&self, quot: &ParabolicQuotient) -> bool {
        self.terms
            .keys()
            .all(|&(k, w)| k * quot.fano_index + quot.length(w) == self.degree)
    }

    /// Sum of coefficients; used to compare against tableau counts.
    pub fn coefficient_sum(&self) -> Q {
        self.terms.values().fold(Q::zero(), |acc, c| acc + c)
    }

    pub fn display<'a>(&'a self, quot: &'a ParabolicQuotient) -> ClassDisplay<'a> {
        ClassDisplay { class: self, quot }
    }
}

pub struct ClassDisplay<'a> {
    class: &'a GradedClass,
    quot: &'a ParabolicQuotient,
}

impl fmt::Display for ClassDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.class.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(k, w), c)) in self.class.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "{} ", display_q(c))?;
            }
            match k {
                0 => {}
                1 => write!(f, "q ")?,
                _ => write!(f, "q^{k} ")?,
            }
            write!(f, "σ{}", self.quot.table_label(w))?;
        }
        Ok(())
    }
}

/// One column entry of an operator: `(q-power, target ordinal, coefficient)`.
pub type Entry = (u32, usize, Q);

/// A `Q[q]`-linear map raising degree by `shift`, stored by its columns on the
/// `q^0` Schubert basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedOperator {
    pub name: char,
    pub shift: u32,
    pub fano_index: u32,
    pub columns: Vec<Vec<Entry>>,
}

impl GradedOperator {
    pub fn new(name: char, shift: u32, fano_index: u32, n: usize) -> GradedOperator {
        GradedOperator {
            name,
            shift,
            fano_index,
            columns: vec![Vec::new(); n],
        }
    }

    pub fn column(&self, source: usize) -> GradedClass {
        let mut out = GradedClass::zero(0);
        for (k, w, c) in &self.columns[source] {
            out.add_term((*k, *w), c);
        }
        out
    }

    pub fn entry(&self, source: usize, qpower: u32, target: usize) -> Q {
        self.columns[source]
            .iter()
            .find(|(k, w, _)| *k == qpower && *w == target)
            .map(|(_, _, c)| c.clone())
            .unwrap_or_else(Q::zero)
    }

    pub fn apply(&self, x: &GradedClass) -> GradedClass {
        let mut out = GradedClass::zero(x.degree + self.shift);
        for (&(k0, w), c) in x.terms() {
            for (k, y, a) in &self.columns[w] {
                out.add_term((k0 + k, *y), &(c * a));
            }
        }
        out.degree = x.degree + self.shift;
        out
    }

    /// Sorts each column and drops zero entries so equal operators compare equal.
    pub fn normalize(&mut self) {
        for col in &mut self.columns {
            col.retain(|(_, _, c)| !c.is_zero());
            col.sort_by_key(|e| (e.0, e.1));
        }
    }

    pub fn max_qpower(&self) -> u32 {
        self.columns
            .iter()
            .flat_map(|c| c.iter().map(|e| e.0))
            .max()
            .unwrap_or(0)
    }

    pub fn entry_count(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }
}
