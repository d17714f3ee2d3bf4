//! Classical Schubert structure constants by torus localization.
//!
//! The restriction of the equivariant class `ξ^v` to the fixed point `w` is
//! Billey's sum over reduced subwords: for a reduced word
//! `w = s_{b_1} ⋯ s_{b_L}` and `r_j = s_{b_1} ⋯ s_{b_{j-1}}(α_{b_j})`,
//! `ξ^v(w) = Σ Π_{j ∈ J} r_j` over index sets `J` spelling a reduced word of
//! `v`. For `v ∈ W^P` every suffix of such a word lies in `W^P` as well, so
//! the sum is a dynamic program over orbit elements rather than over subsets.
//!
//! Roots are evaluated at the height functional (every positive root maps to
//! a positive integer), which keeps all restrictions nonzero integers on the
//! diagonal. Products `ξ^u ξ^v = Σ c^x ξ^x` are then solved triangularly; the
//! constants with `ℓ(x) = ℓ(u) + ℓ(v)` are the (non-equivariant) cup-product
//! coefficients, independent of the evaluation point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::coset::ParabolicQuotient;
use crate::rootsystem::RootCoords;

#[derive(Clone, Debug)]
pub struct Localization {
    /// `values[v][w] = ξ^v(w)` at the height functional.
    values: Vec<Vec<BigInt>>,
}

impl Localization {
    pub fn compute(quot: &ParabolicQuotient) -> Localization {
        let n = quot.len();
        let rank = quot.roots.rank();
        let mut values = vec![vec![BigInt::zero(); n]; n];

        for w in 0..n {
            let word = &quot.element(w).word;
            let mut f = vec![BigInt::zero(); n];
            f[0] = BigInt::one();
            for j in (0..word.len()).rev() {
                let b = word[j];
                let root = word[..j]
                    .iter()
                    .rev()
                    .fold(RootCoords::simple(rank, b), |acc, &i| quot.roots.reflect_root_simple(&acc, i));
                let r = BigInt::from(root.height());
                debug_assert!(root.is_positive());
                // targets are one level up, i.e. at larger ordinals, so a
                // descending sweep never reads a value written this step
                for y in (0..n).rev() {
                    if f[y].is_zero() {
                        continue;
                    }
                    if let Some(z) = quot.up(y, b) {
                        let add = &f[y] * &r;
                        f[z] += add;
                    }
                }
            }
            for (v, val) in f.into_iter().enumerate() {
                values[v][w] = val;
            }
        }
        Localization { values }
    }

    pub fn restriction(&self, v: usize, w: usize) -> &BigInt {
        &self.values[v][w]
    }

    /// Cup product `σ_u · σ_v` as `(x, c)` pairs with `ℓ(x) = ℓ(u) + ℓ(v)`.
    pub fn classical_product(&self, quot: &ParabolicQuotient, u: usize, v: usize) -> Vec<(usize, BigInt)> {
        let target = quot.length(u) + quot.length(v);
        if target > quot.dimension {
            return Vec::new();
        }
        let end = quot.degree_range(target).end;
        let mut coeffs: Vec<(usize, BigInt)> = Vec::new();
        for w in 0..end {
            let xu = &self.values[u][w];
            let xv = &self.values[v][w];
            if xu.is_zero() || xv.is_zero() {
                continue;
            }
            let mut rest = xu * xv;
            for (x, c) in &coeffs {
                let r = &self.values[*x][w];
                if !r.is_zero() {
                    rest -= c * r;
                }
            }
            if rest.is_zero() {
                continue;
            }
            let (c, rem) = rest.div_rem(&self.values[w][w]);
            assert!(rem.is_zero(), "localization quotient is not integral");
            coeffs.push((w, c));
        }
        coeffs
            .into_iter()
            .filter(|(x, _)| quot.length(*x) == target)
            .collect()
    }
}
