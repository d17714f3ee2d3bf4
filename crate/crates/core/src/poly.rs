//! Polynomials in the generators `h, s, t, q` with rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{display_q, Q};

/// Exponent vector `h^h s^s t^t q^q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub h: u32,
    pub s: u32,
    pub t: u32,
    pub q: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { h: 0, s: 0, t: 0, q: 0 };

    pub fn new(h: u32, s: u32, t: u32, q: u32) -> Monomial {
        Monomial { h, s, t, q }
    }

    pub fn times_h(self) -> Monomial {
        Monomial { h: self.h + 1, ..self }
    }

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial {
            h: self.h + other.h,
            s: self.s + other.s,
            t: self.t + other.t,
            q: self.q + other.q,
        }
    }

    /// Total degree given the degrees of `s`, `t` and `q`.
    pub fn degree(&self, deg_s: u32, deg_t: u32, deg_q: u32) -> u32 {
        self.h + self.s * deg_s + self.t * deg_t + self.q * deg_q
    }
}

/// Basis order: ascending `q`, then `t`, then `s`, then descending `h`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.q
            .cmp(&other.q)
            .then(self.t.cmp(&other.t))
            .then(self.s.cmp(&other.s))
            .then(other.h.cmp(&self.h))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in [("h", self.h), ("s", self.s), ("t", self.t), ("q", self.q)] {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial kept canonical: terms merged, zero coefficients dropped,
/// sorted in the basis order of [`Monomial`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GiambelliPolynomial {
    terms: Vec<(Q, Monomial)>,
}

impl GiambelliPolynomial {
    pub fn zero() -> Self {
        GiambelliPolynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        GiambelliPolynomial::monomial(Q::one(), Monomial::ONE)
    }

    pub fn monomial(c: Q, m: Monomial) -> Self {
        GiambelliPolynomial::from_terms([(c, m)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Q, Monomial)>>(terms: I) -> Self {
        let mut acc: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (c, m) in terms {
            *acc.entry(m).or_insert_with(Q::zero) += c;
        }
        GiambelliPolynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (c, m)).collect(),
        }
    }

    pub fn terms(&self) -> &[(Q, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &GiambelliPolynomial) -> Self {
        GiambelliPolynomial::from_terms(self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn scaled(&self, c: &Q) -> Self {
        GiambelliPolynomial::from_terms(self.terms.iter().map(|(a, m)| (a * c, *m)))
    }

    /// Multiplies every term by the monomial `m`.
    pub fn shifted(&self, m: Monomial) -> Self {
        GiambelliPolynomial::from_terms(self.terms.iter().map(|(a, x)| (a.clone(), x.times(m))))
    }

    /// The common degree of all terms, or `None` if the polynomial is not homogeneous.
    pub fn homogeneous_degree(&self, deg_s: u32, deg_t: u32, deg_q: u32) -> Option<u32> {
        let mut degs = self.terms.iter().map(|(_, m)| m.degree(deg_s, deg_t, deg_q));
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    /// LaTeX in the `a/b\ h^{k}s` style.
    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = latex_monomial(m);
            if mono.is_empty() {
                out.push_str(&display_q(&a));
                out.push_str("\\ ");
            } else {
                if !a.is_one() {
                    out.push_str(&display_q(&a));
                    out.push_str("\\ ");
                }
                out.push_str(&mono);
            }
        }
        out
    }
}

fn latex_monomial(m: &Monomial) -> String {
    let mut s = String::new();
    for (name, e) in [("h", m.h), ("s", m.s), ("t", m.t), ("q", m.q)] {
        match e {
            0 => {}
            1 => s.push_str(name),
            _ => s.push_str(&format!("{name}^{{{e}}}")),
        }
    }
    s
}

impl fmt::Display for GiambelliPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{}", display_q(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{} {m}", display_q(&a))?;
            }
        }
        Ok(())
    }
}
