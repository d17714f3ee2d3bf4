//! Exact sparse Gaussian elimination over `Q`.
//!
//! Equations are reduced against existing pivots as they arrive, with the
//! pivot chosen as the smallest column index present, so feeding equations in
//! a graded order keeps fill-in local. Free variables are set to zero when a
//! solution is read back.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::Q;

#[derive(Clone, Debug, Default)]
pub struct SparseSystem {
    nvars: usize,
    /// pivot column → (row with unit leading coefficient, right-hand side)
    pivots: BTreeMap<usize, (BTreeMap<usize, Q>, Q)>,
    inconsistent: bool,
    equations: usize,
}

/// Outcome of feeding one equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Added {
    NewPivot,
    Redundant,
    Inconsistent,
}

impl SparseSystem {
    pub fn new(nvars: usize) -> SparseSystem {
        SparseSystem {
            nvars,
            ..Default::default()
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn equations(&self) -> usize {
        self.equations
    }

    pub fn add_equation<I>(&mut self, coeffs: I, rhs: Q) -> Added
    where
        I: IntoIterator<Item = (usize, Q)>,
    {
        self.equations += 1;
        let mut row: BTreeMap<usize, Q> = BTreeMap::new();
        for (j, c) in coeffs {
            assert!(j < self.nvars, "variable {j} out of range");
            let e = row.entry(j).or_insert_with(Q::zero);
            *e += c;
            if e.is_zero() {
                row.remove(&j);
            }
        }
        let mut rhs = rhs;
        loop {
            let Some((&lead, lead_coef)) = row.iter().next() else {
                if rhs.is_zero() {
                    return Added::Redundant;
                }
                self.inconsistent = true;
                return Added::Inconsistent;
            };
            match self.pivots.get(&lead) {
                Some((prow, prhs)) => {
                    let f = lead_coef.clone();
                    for (j, c) in prow {
                        let e = row.entry(*j).or_insert_with(Q::zero);
                        *e -= &f * c;
                        if e.is_zero() {
                            row.remove(j);
                        }
                    }
                    rhs -= &f * prhs;
                }
                None => {
                    let inv = Q::one() / lead_coef;
                    for c in row.values_mut() {
                        *c *= &inv;
                    }
                    rhs *= &inv;
                    self.pivots.insert(lead, (row, rhs));
                    return Added::NewPivot;
                }
            }
        }
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.nvars - self.rank()
    }

    /// A solution with every free variable at zero; `None` if inconsistent.
    pub fn solve(&self) -> Option<Vec<Q>> {
        if self.inconsistent {
            return None;
        }
        let mut x = vec![Q::zero(); self.nvars];
        for (&p, (row, rhs)) in self.pivots.iter().rev() {
            let mut v = rhs.clone();
            for (j, c) in row.range(p + 1..) {
                if !x[*j].is_zero() {
                    v -= c * &x[*j];
                }
            }
            x[p] = v;
        }
        Some(x)
    }
}
