//! Quantum multiplication by the hyperplane class.
//!
//! For `w ∈ W^P` and each positive root `α ∉ R_P` put `d = <ϖ_p, α^∨>` and
//! `λ' = λ − d·w(α)` (the orbit weight of `w s_α`). The class of `λ'` enters
//! `h ⋆ σ_w` with coefficient `d`, classically when `ℓ(λ') = ℓ(λ) + 1` and
//! with `q^d` when `ℓ(λ') = ℓ(λ) + 1 − d·c`, `c` the Fano index.

use crate::coset::ParabolicQuotient;
use crate::error::{Error, Result};
use crate::graded::{GradedClass, GradedOperator};
use crate::rational::q_int;

#[derive(Clone, Debug)]
pub struct ChevalleyData {
    /// Per source ordinal: `(target, coefficient)` one degree up.
    pub classical: Vec<Vec<(usize, i64)>>,
    /// Per source ordinal: `(target, q-power, coefficient)`.
    pub quantum: Vec<Vec<(usize, u32, i64)>>,
    pub fano_index: u32,
    /// Largest degree `apply_h` accepts as output.
    pub max_degree: u32,
}

impl ChevalleyData {
    pub fn build(quot: &ParabolicQuotient) -> ChevalleyData {
        let rs = &quot.roots;
        let p = quot.space.node - 1;
        let c = quot.fano_index as i64;
        let n = quot.len();
        let mut classical = vec![Vec::new(); n];
        let mut quantum = vec![Vec::new(); n];

        for w in 0..n {
            let lambda = &quot.element(w).weight;
            let len = quot.length(w) as i64;
            for (b, alpha) in rs.positives.iter().enumerate() {
                let d = rs.coroots[b][p];
                if d <= 0 {
                    continue;
                }
                let wa = rs.to_weight(&quot.act_on_root(w, alpha));
                let image = crate::rootsystem::WeightCoords(
                    lambda.0.iter().zip(&wa.0).map(|(l, x)| l - d * x).collect(),
                );
                let target = quot
                    .ordinal_of_weight(&image)
                    .expect("w·s_α(ϖ) lies in the orbit");
                let tl = quot.length(target) as i64;
                if tl == len + 1 {
                    push_sum(&mut classical[w], target, d);
                } else if tl == len + 1 - d * c {
                    match quantum[w].iter_mut().find(|(t, k, _)| *t == target && *k == d as u32) {
                        Some(e) => e.2 += d,
                        None => quantum[w].push((target, d as u32, d)),
                    }
                }
            }
            classical[w].sort();
            quantum[w].sort();
        }

        let qmax = (2 * quot.dimension).div_ceil(quot.fano_index);
        ChevalleyData {
            classical,
            quantum,
            fano_index: quot.fano_index,
            max_degree: quot.dimension + quot.fano_index * qmax,
        }
    }

    pub fn to_operator(&self) -> GradedOperator {
        let mut op = GradedOperator::new('h', 1, self.fano_index, self.classical.len());
        for (w, col) in op.columns.iter_mut().enumerate() {
            for &(t, a) in &self.classical[w] {
                col.push((0, t, q_int(a)));
            }
            for &(t, k, a) in &self.quantum[w] {
                col.push((k, t, q_int(a)));
            }
        }
        op.normalize();
        op
    }

    /// Classical coefficient of `σ_target` in `h · σ_source`.
    pub fn classical_coefficient(&self, source: usize, target: usize) -> i64 {
        self.classical[source]
            .iter()
            .find(|(t, _)| *t == target)
            .map(|e| e.1)
            .unwrap_or(0)
    }

    pub fn apply_h(&self, quot: &ParabolicQuotient, x: &GradedClass) -> Result<GradedClass> {
        if x.degree + 1 > self.max_degree {
            return Err(Error::DegreeOverflow {
                space: quot.space.to_string(),
                degree: x.degree + 1,
                max: self.max_degree,
            });
        }
        let mut out = GradedClass::zero(x.degree + 1);
        for (&(k0, w), c) in x.terms() {
            for &(t, a) in &self.classical[w] {
                out.add_term((k0, t), &(c * q_int(a)));
            }
            for &(t, k, a) in &self.quantum[w] {
                out.add_term((k0 + k, t), &(c * q_int(a)));
            }
        }
        Ok(out)
    }

    pub fn h_power(&self, quot: &ParabolicQuotient, k: u32) -> Result<GradedClass> {
        (0..k).try_fold(GradedClass::unit(), |acc, _| self.apply_h(quot, &acc))
    }

    /// Smallest source degree whose `h`-image carries a `q` term.
    pub fn first_quantum_degree(&self, quot: &ParabolicQuotient) -> Option<u32> {
        (0..quot.len())
            .filter(|&w| !self.quantum[w].is_empty())
            .map(|w| quot.length(w) + 1)
            .min()
    }
}

fn push_sum(col: &mut Vec<(usize, i64)>, target: usize, d: i64) {
    match col.iter_mut().find(|(t, _)| *t == target) {
        Some(e) => e.1 += d,
        None => col.push((target, d)),
    }
}
