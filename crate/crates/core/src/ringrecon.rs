//! Quantum multiplication by the non-hyperplane generators.
//!
//! An operator `M_g` for `g ∈ {s, t}` is pinned by three facts: `M_g(1) = σ_g`,
//! it commutes with the Chevalley operator `M_h`, and it is self-adjoint for
//! the quantum Poincaré pairing. Those constraints alone can leave the
//! classical part underdetermined (the commutant of `h` is large when `h`
//! does not generate the ring), so the classical part `S_0` comes from torus
//! localization. Writing `M_g = Σ q^k S_k` and `M_h = Σ q^i H_i`, commutation
//! at order `q^k` reads
//!
//! ```text
//! S_k H_0 − H_0 S_k = −Σ_{i≥1} (S_{k−i} H_i − H_i S_{k−i})
//! ```
//!
//! and `S_k` has negative degree `deg g − k·c`. By hard Lefschetz no nonzero
//! map of negative degree commutes with `H_0`, so every order has exactly one
//! solution; it is found by exact sparse elimination and the nullity is
//! reported rather than assumed.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::chevalley::ChevalleyData;
use crate::coset::ParabolicQuotient;
use crate::error::{Error, Result};
use crate::graded::{GradedClass, GradedOperator};
use crate::linalg::SparseSystem;
use crate::localization::Localization;
use crate::poly::{GiambelliPolynomial, Monomial};
use crate::rational::{q_big, q_int, Q};
use crate::rootsystem::GroupKind;

/// Schubert labels of the E8/P8 generators of degrees 6 and 10.
pub const E8_S: &str = "(0,0,1,1,1,1,1,1)";
pub const E8_T: &str = "(0,1,2,2,2,1,1,1)";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorDef {
    pub name: char,
    pub degree: u32,
    pub ordinal: usize,
}

/// `h` (degree 1), optional `s` and `t`, and `q` of degree equal to the Fano index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub h: usize,
    pub s: Option<GeneratorDef>,
    pub t: Option<GeneratorDef>,
    pub fano_index: u32,
}

impl GeneratorSet {
    /// The customary generators of each space, given by their Schubert labels.
    pub fn standard(quot: &ParabolicQuotient) -> Result<GeneratorSet> {
        let labels: (Option<&str>, Option<&str>) = match (quot.space.kind, quot.space.node) {
            (GroupKind::E6, 1) => (Some("(1,1,1,1,0,0)"), None),
            (GroupKind::E6, 2) => (Some("(0,1,1,1,0,0)"), Some("(1,1,1,1,0,0)")),
            (GroupKind::E7, 1) => (Some("(1,1,1,1,0,0,0)"), Some("(1,1,1,0,1,1,1)")),
            (GroupKind::E7, 7) => (Some("(0,1,0,1,1,1,1)"), Some("(1,1,2,2,1,1,1)")),
            (GroupKind::E8, 8) => (Some(E8_S), Some(E8_T)),
            (GroupKind::F4, 1) => (Some("(1,2,2,0)"), None),
            (GroupKind::F4, 4) => (Some("(1,1,1,1)"), None),
            _ => (None, None),
        };
        let find = |l: Option<&str>| l.map(|l| quot.parse_label(l)).transpose();
        GeneratorSet::from_ordinals(quot, find(labels.0)?, find(labels.1)?)
    }

    pub fn from_ordinals(quot: &ParabolicQuotient, s: Option<usize>, t: Option<usize>) -> Result<GeneratorSet> {
        let def = |name, ordinal: usize| GeneratorDef {
            name,
            degree: quot.length(ordinal),
            ordinal,
        };
        Ok(GeneratorSet {
            h: quot.degree_range(1).start,
            s: s.map(|o| def('s', o)),
            t: t.map(|o| def('t', o)),
            fano_index: quot.fano_index,
        })
    }

    pub fn deg_s(&self) -> u32 {
        self.s.map(|g| g.degree).unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.t.map(|g| g.degree).unwrap_or(0)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.degree(self.deg_s(), self.deg_t(), self.fano_index)
    }

    /// Whether every variable of `m` is a generator of this space.
    pub fn admits(&self, m: &Monomial) -> bool {
        (m.s == 0 || self.s.is_some()) && (m.t == 0 || self.t.is_some())
    }
}

/// Per q-order statistics of one operator solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub order: u32,
    pub unknowns: usize,
    pub equations: usize,
    pub nullity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub generator: char,
    pub orders: Vec<OrderReport>,
}

impl SolveReport {
    pub fn is_unique(&self) -> bool {
        self.orders.iter().all(|o| o.nullity == 0)
    }
}

/// Nullity of the unit/commutation/self-adjointness system with the classical
/// part left free (and with it pinned).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbiguityReport {
    pub generator: char,
    pub unknowns: usize,
    pub nullity_unpinned: usize,
    pub nullity_pinned: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrylovRow {
    pub degree: u32,
    pub dimension: usize,
    pub rank_h: usize,
    pub rank_hs: usize,
    pub rank_hst: usize,
}

impl KrylovRow {
    pub fn deficit_h(&self) -> usize {
        self.dimension - self.rank_h
    }
    pub fn deficit_hs(&self) -> usize {
        self.dimension - self.rank_hs
    }
    pub fn deficit_hst(&self) -> usize {
        self.dimension - self.rank_hst
    }
}

#[derive(Clone, Debug)]
pub struct QuantumRing {
    pub quotient: ParabolicQuotient,
    pub chevalley: ChevalleyData,
    pub generators: GeneratorSet,
    pub h: GradedOperator,
    pub s: Option<GradedOperator>,
    pub t: Option<GradedOperator>,
    pub reports: Vec<SolveReport>,
}

impl QuantumRing {
    pub fn build(space: crate::coset::SpaceId) -> Result<QuantumRing> {
        let quot = ParabolicQuotient::enumerate(space);
        let gens = GeneratorSet::standard(&quot)?;
        QuantumRing::with_generators(quot, gens)
    }

    pub fn with_generators(quot: ParabolicQuotient, generators: GeneratorSet) -> Result<QuantumRing> {
        let chevalley = ChevalleyData::build(&quot);
        let h = chevalley.to_operator();
        let loc = (generators.s.is_some() || generators.t.is_some()).then(|| Localization::compute(&quot));
        let mut reports = Vec::new();
        let mut solve = |g: Option<GeneratorDef>| -> Result<Option<GradedOperator>> {
            match (g, &loc) {
                (Some(def), Some(loc)) => {
                    let (op, rep) = solve_generator_operator(&quot, &chevalley, &h, loc, def)?;
                    reports.push(rep);
                    Ok(Some(op))
                }
                _ => Ok(None),
            }
        };
        let s = solve(generators.s)?;
        let t = solve(generators.t)?;
        Ok(QuantumRing {
            quotient: quot,
            chevalley,
            generators,
            h,
            s,
            t,
            reports,
        })
    }

    /// Assembles a ring from operators obtained elsewhere (e.g. a cache file).
    pub fn from_parts(
        quot: ParabolicQuotient,
        generators: GeneratorSet,
        s: Option<GradedOperator>,
        t: Option<GradedOperator>,
    ) -> QuantumRing {
        let chevalley = ChevalleyData::build(&quot);
        let h = chevalley.to_operator();
        QuantumRing {
            quotient: quot,
            chevalley,
            generators,
            h,
            s,
            t,
            reports: Vec::new(),
        }
    }

    pub fn operator(&self, name: char) -> Option<&GradedOperator> {
        match name {
            'h' => Some(&self.h),
            's' => self.s.as_ref(),
            't' => self.t.as_ref(),
            _ => None,
        }
    }

    pub fn operators(&self) -> Vec<&GradedOperator> {
        std::iter::once(&self.h).chain(self.s.as_ref()).chain(self.t.as_ref()).collect()
    }

    pub fn dimension(&self) -> u32 {
        self.quotient.dimension
    }

    pub fn fano_index(&self) -> u32 {
        self.quotient.fano_index
    }

    /// Largest total degree for which monomials are expanded.
    pub fn max_degree(&self) -> u32 {
        2 * self.quotient.dimension
    }

    /// Basis keys `(k, w)` of the degree-`d` component.
    pub fn component(&self, d: u32) -> Vec<(u32, usize)> {
        let c = self.fano_index();
        (0..=d / c)
            .flat_map(|k| self.quotient.degree_range(d - k * c).map(move |w| (k, w)))
            .collect()
    }

    /// `h^a s^b t^c q^e` as a class: `M_h^a M_s^b M_t^c (q^e · 1)`.
    pub fn monomial_expand(&self, m: Monomial) -> Result<GradedClass> {
        self.check_monomial(&m)?;
        let mut x = GradedClass::unit().shift_q(m.q, self.fano_index());
        for (name, e) in [('t', m.t), ('s', m.s), ('h', m.h)] {
            for _ in 0..e {
                x = self.operator(name).expect("checked").apply(&x);
            }
        }
        Ok(x)
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if !self.generators.admits(m) {
            return Err(Error::Usage(format!("{}: monomial {m} uses an undeclared generator", self.quotient.space)));
        }
        let d = self.generators.monomial_degree(m);
        if d > self.max_degree() {
            return Err(Error::DegreeOverflow {
                space: self.quotient.space.to_string(),
                degree: d,
                max: self.max_degree(),
            });
        }
        Ok(())
    }

    /// `Σ c · M_h^a M_s^b M_t^c (q^e y)` over the terms of `px`, i.e. `x ⋆ y`
    /// when `px` is a polynomial representative of `x`.
    pub fn star(&self, px: &GiambelliPolynomial, y: &GradedClass) -> GradedClass {
        let mut out = GradedClass::zero(0);
        let mut degree = None;
        for (c, m) in px.terms() {
            let mut v = y.shift_q(m.q, self.fano_index());
            for (name, e) in [('t', m.t), ('s', m.s), ('h', m.h)] {
                if let Some(op) = self.operator(name) {
                    for _ in 0..e {
                        v = op.apply(&v);
                    }
                }
            }
            degree.get_or_insert(v.degree);
            out.add_scaled(&v, c);
        }
        out.degree = degree.unwrap_or(y.degree);
        out
    }

    /// Quantum Poincaré pairing as a polynomial in `q` (`q`-power → coefficient).
    pub fn pairing(&self, x: &GradedClass, y: &GradedClass) -> BTreeMap<u32, Q> {
        let mut out: BTreeMap<u32, Q> = BTreeMap::new();
        for (&(a, u), cu) in x.terms() {
            let du = self.quotient.dual(u);
            for (&(b, v), cv) in y.terms() {
                if v == du {
                    *out.entry(a + b).or_insert_with(Q::zero) += cu * cv;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `<M σ_u, σ_v> = <σ_u, M σ_v>` for all basis pairs.
    pub fn is_self_adjoint(&self, op: &GradedOperator) -> bool {
        let n = self.quotient.len();
        (0..n).all(|u| {
            (0..n).all(|v| {
                op.columns[u].iter().all(|(k, y, c)| {
                    // <M σ_u, σ_v> picks the coefficient of σ_{dual v}
                    if *y != self.quotient.dual(v) {
                        return true;
                    }
                    op.entry(v, *k, self.quotient.dual(u)) == *c
                })
            })
        }) && (0..n).all(|v| {
            op.columns[v].iter().all(|(k, y, c)| {
                let u = self.quotient.dual(*y);
                op.entry(u, *k, self.quotient.dual(v)) == *c
            })
        })
    }

    /// `A B σ_w = B A σ_w` for every basis vector.
    pub fn commute(&self, a: &GradedOperator, b: &GradedOperator) -> bool {
        (0..self.quotient.len()).all(|w| {
            let x = GradedClass::schubert(&self.quotient, 0, w);
            a.apply(&b.apply(&x)) == b.apply(&a.apply(&x))
        })
    }

    /// Span of generator monomials in each graded component, by generator subset.
    pub fn krylov_report(&self) -> Vec<KrylovRow> {
        let mut memo: HashMap<Monomial, GradedClass> = HashMap::new();
        (0..=self.dimension())
            .map(|d| {
                let basis = self.component(d);
                let index: HashMap<(u32, usize), usize> = basis.iter().enumerate().map(|(i, k)| (*k, i)).collect();
                let monos = monomial_basis(&self.generators, d);
                let rank_of = |filter: &dyn Fn(&Monomial) -> bool, memo: &mut HashMap<Monomial, GradedClass>| {
                    let mut sys = SparseSystem::new(basis.len());
                    for m in monos.iter().filter(|m| filter(m)) {
                        let v = memo
                            .entry(*m)
                            .or_insert_with(|| self.monomial_expand(*m).expect("in range"))
                            .clone();
                        sys.add_equation(v.terms().map(|(k, c)| (index[k], c.clone())), Q::zero());
                    }
                    sys.rank()
                };
                KrylovRow {
                    degree: d,
                    dimension: basis.len(),
                    rank_h: rank_of(&|m: &Monomial| m.s == 0 && m.t == 0, &mut memo),
                    rank_hs: rank_of(&|m: &Monomial| m.t == 0, &mut memo),
                    rank_hst: rank_of(&|_| true, &mut memo),
                }
            })
            .collect()
    }

    /// Measures how far unit, commutation and self-adjointness go towards
    /// determining `M_g` when the classical part is not supplied.
    pub fn constraint_ambiguity(&self, name: char) -> Option<AmbiguityReport> {
        let op = self.operator(name)?;
        let def = match name {
            's' => self.generators.s?,
            't' => self.generators.t?,
            _ => return None,
        };
        let partner = if name == 't' { self.s.as_ref() } else { None };
        let unpinned = ambiguity_system(self, def, partner, None);
        let pinned = ambiguity_system(self, def, partner, Some(op));
        Some(AmbiguityReport {
            generator: name,
            unknowns: unpinned.nvars(),
            nullity_unpinned: unpinned.nullity(),
            nullity_pinned: pinned.nullity(),
        })
    }
}

/// Which generator is applied last when a monomial is expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalOrder {
    /// `h^a s^b t^c = M_h^a M_s^b M_t^c (1)`.
    HOutermost,
    /// `h^a s^b t^c = M_t^c M_s^b M_h^a (1)`.
    HInnermost,
}

/// Memoized monomial expansion; each monomial is one operator application
/// away from a smaller one.
#[derive(Debug)]
pub struct Evaluator<'a> {
    ring: &'a QuantumRing,
    order: EvalOrder,
    memo: HashMap<Monomial, GradedClass>,
}

impl<'a> Evaluator<'a> {
    pub fn new(ring: &'a QuantumRing, order: EvalOrder) -> Evaluator<'a> {
        Evaluator {
            ring,
            order,
            memo: HashMap::new(),
        }
    }

    pub fn monomial(&mut self, m: Monomial) -> Result<GradedClass> {
        if let Some(x) = self.memo.get(&m) {
            return Ok(x.clone());
        }
        self.ring.check_monomial(&m)?;
        let peel = match self.order {
            EvalOrder::HOutermost => [('h', m.h), ('s', m.s), ('t', m.t)],
            EvalOrder::HInnermost => [('t', m.t), ('s', m.s), ('h', m.h)],
        };
        let x = match peel.iter().find(|(_, e)| *e > 0) {
            None => GradedClass::unit().shift_q(m.q, self.ring.fano_index()),
            Some(&(name, _)) => {
                let mut smaller = m;
                match name {
                    'h' => smaller.h -= 1,
                    's' => smaller.s -= 1,
                    _ => smaller.t -= 1,
                }
                let inner = self.monomial(smaller)?;
                self.ring.operator(name).expect("admitted").apply(&inner)
            }
        };
        self.memo.insert(m, x.clone());
        Ok(x)
    }

    pub fn polynomial(&mut self, p: &GiambelliPolynomial) -> Result<GradedClass> {
        let mut out = GradedClass::zero(0);
        for (i, (c, m)) in p.terms().iter().enumerate() {
            let v = self.monomial(*m)?;
            if i == 0 {
                out.degree = v.degree;
            }
            out.add_scaled(&v, c);
        }
        Ok(out)
    }
}

/// Generator monomials of degree `d`: ascending `q`, `t`, `s`, descending `h`.
pub fn monomial_basis(gens: &GeneratorSet, d: u32) -> Vec<Monomial> {
    let (ds, dt, c) = (gens.deg_s(), gens.deg_t(), gens.fano_index);
    let mut out = Vec::new();
    for e in 0..=d / c {
        let r1 = d - e * c;
        let tmax = if gens.t.is_some() { r1 / dt } else { 0 };
        for tt in 0..=tmax {
            let r2 = r1 - tt * dt;
            let smax = if gens.s.is_some() { r2 / ds } else { 0 };
            for ss in 0..=smax {
                out.push(Monomial::new(r2 - ss * ds, ss, tt, e));
            }
        }
    }
    out
}

/// Builds `M_g` from its classical part (localization) and the order-by-order
/// commutation equations.
pub fn solve_generator_operator(
    quot: &ParabolicQuotient,
    chev: &ChevalleyData,
    hop: &GradedOperator,
    loc: &Localization,
    def: GeneratorDef,
) -> Result<(GradedOperator, SolveReport)> {
    let n = quot.len();
    let c = quot.fano_index;
    let dim = quot.dimension as i64;
    let mut op = GradedOperator::new(def.name, def.degree, c, n);
    for v in 0..n {
        for (x, coef) in loc.classical_product(quot, def.ordinal, v) {
            op.columns[v].push((0, x, q_big(coef)));
        }
    }
    let mut report = SolveReport {
        generator: def.name,
        orders: Vec::new(),
    };

    for k in 1u32.. {
        let delta = def.degree as i64 - (k * c) as i64;
        if dim + delta < 0 {
            break;
        }
        let in_range = |l: i64| (0..=dim).contains(&l);

        let mut vars: Vec<(usize, usize)> = Vec::new();
        let mut var_of: HashMap<(usize, usize), usize> = HashMap::new();
        for x in 0..n {
            let tl = quot.length(x) as i64 + delta;
            if !in_range(tl) {
                continue;
            }
            for y in quot.degree_range(tl as u32) {
                var_of.insert((x, y), vars.len());
                vars.push((x, y));
            }
        }
        if vars.is_empty() {
            report.orders.push(OrderReport { order: k, unknowns: 0, equations: 0, nullity: 0 });
            continue;
        }

        let mut sys = SparseSystem::new(vars.len());
        for w in 0..n {
            let lw = quot.length(w) as i64;
            let tl = lw + 1 + delta;
            if !in_range(tl) {
                continue;
            }
            let sw = GradedClass::schubert(quot, 0, w);
            let ab = op.apply(&hop.apply(&sw));
            let ba = hop.apply(&op.apply(&sw));
            for z in quot.degree_range(tl as u32) {
                let known = ab.coefficient(k, z) - ba.coefficient(k, z);
                let mut coeffs: Vec<(usize, Q)> = Vec::new();
                for &(xp, a) in &chev.classical[w] {
                    if let Some(&id) = var_of.get(&(xp, z)) {
                        coeffs.push((id, q_int(a)));
                    }
                }
                if in_range(lw + delta) {
                    for y in quot.degree_range((lw + delta) as u32) {
                        let b = chev.classical_coefficient(y, z);
                        if b != 0 {
                            coeffs.push((var_of[&(w, y)], q_int(-b)));
                        }
                    }
                }
                sys.add_equation(coeffs, -known);
            }
        }
        let sol = sys.solve().ok_or_else(|| Error::Infeasible {
            space: quot.space.to_string(),
            generator: def.name,
            order: k,
        })?;
        report.orders.push(OrderReport {
            order: k,
            unknowns: vars.len(),
            equations: sys.equations(),
            nullity: sys.nullity(),
        });
        for ((x, y), val) in vars.into_iter().zip(sol) {
            if !val.is_zero() {
                op.columns[x].push((k, y, val));
            }
        }
    }
    op.normalize();
    Ok((op, report))
}

/// Unknowns: every entry `(k, x → y)` of a degree-`deg g` operator. Equations:
/// unit, commutation with `M_h` (and with `partner`), self-adjointness, and
/// optionally the classical entries of `pin`.
fn ambiguity_system(ring: &QuantumRing, def: GeneratorDef, partner: Option<&GradedOperator>, pin: Option<&GradedOperator>) -> SparseSystem {
    let quot = &ring.quotient;
    let n = quot.len();
    let c = quot.fano_index as i64;
    let dim = quot.dimension as i64;
    let g = def.degree as i64;

    let mut var_of: HashMap<(u32, usize, usize), usize> = HashMap::new();
    let mut count = 0;
    for x in 0..n {
        let lx = quot.length(x) as i64;
        let mut k = 0;
        while lx + g - k * c >= 0 {
            let tl = lx + g - k * c;
            if tl <= dim {
                for y in quot.degree_range(tl as u32) {
                    var_of.insert((k as u32, x, y), count);
                    count += 1;
                }
            }
            k += 1;
        }
    }
    let mut sys = SparseSystem::new(count);

    // unit
    for y in quot.degree_range(def.degree) {
        let rhs = if y == def.ordinal { q_int(1) } else { Q::zero() };
        sys.add_equation([(var_of[&(0, 0, y)], q_int(1))], rhs);
    }
    if let Some(pin) = pin {
        for x in 0..n {
            let lx = quot.length(x) as i64;
            if lx + g > dim {
                continue;
            }
            for y in quot.degree_range((lx + g) as u32) {
                sys.add_equation([(var_of[&(0, x, y)], q_int(1))], pin.entry(x, 0, y));
            }
        }
    }

    // X A − A X = 0 for A = M_h and the partner operator
    for a in std::iter::once(&ring.h).chain(partner) {
        let shift = a.shift as i64;
        for w in 0..n {
            let lw = quot.length(w) as i64;
            let mut k = 0i64;
            while lw + shift + g - k * c >= 0 {
                let tl = lw + shift + g - k * c;
                if tl <= dim {
                    for z in quot.degree_range(tl as u32) {
                        let mut coeffs: Vec<(usize, Q)> = Vec::new();
                        // X(A σ_w)
                        for (i, xp, av) in &a.columns[w] {
                            let i = *i as i64;
                            if i <= k {
                                if let Some(&id) = var_of.get(&((k - i) as u32, *xp, z)) {
                                    coeffs.push((id, av.clone()));
                                }
                            }
                        }
                        // A(X σ_w)
                        for j in 0..=k {
                            let yl = lw + g - j * c;
                            if !(0..=dim).contains(&yl) {
                                continue;
                            }
                            for y in quot.degree_range(yl as u32) {
                                let av = a.entry(y, (k - j) as u32, z);
                                if !av.is_zero() {
                                    coeffs.push((var_of[&(j as u32, w, y)], -av));
                                }
                            }
                        }
                        sys.add_equation(coeffs, Q::zero());
                    }
                }
                k += 1;
            }
        }
    }

    // self-adjointness: X(k, u → dual v) = X(k, v → dual u)
    for (&(k, u, y), &id) in &var_of {
        let v = quot.dual(y);
        let du = quot.dual(u);
        if (u, y) >= (v, du) {
            continue;
        }
        let coeffs = match var_of.get(&(k, v, du)) {
            Some(&other) => vec![(id, q_int(1)), (other, q_int(-1))],
            None => vec![(id, q_int(1))],
        };
        sys.add_equation(coeffs, Q::zero());
    }
    sys
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::SpaceId;
    use crate::rootsystem::RootCoords;

    fn ord(q: &ParabolicQuotient, l: &[i64]) -> usize {
        q.ordinal_of_label(&RootCoords(l.to_vec())).unwrap()
    }

    #[test]
    fn monomial_basis_order() {
        let q = ParabolicQuotient::enumerate("E6/P1".parse().unwrap());
        let g = GeneratorSet::standard(&q).unwrap();
        assert_eq!(monomial_basis(&g, 0), vec![Monomial::ONE]);
        assert_eq!(monomial_basis(&g, 4), vec![Monomial::new(4, 0, 0, 0), Monomial::new(0, 1, 0, 0)]);
        let b12 = monomial_basis(&g, 12);
        for m in [
            Monomial::new(12, 0, 0, 0),
            Monomial::new(8, 1, 0, 0),
            Monomial::new(4, 2, 0, 0),
            Monomial::new(0, 3, 0, 0),
            Monomial::new(0, 0, 0, 1),
        ] {
            assert!(b12.contains(&m));
        }
        let mut sorted = b12.clone();
        sorted.sort();
        assert_eq!(sorted, b12);
    }

    #[test]
    fn unit_and_uniqueness() {
        for space in SpaceId::ALL {
            if space.kind == GroupKind::E8 {
                continue;
            }
            let ring = QuantumRing::build(space).unwrap();
            for rep in &ring.reports {
                assert!(rep.is_unique(), "{space} {}: {:?}", rep.generator, rep);
            }
            for (op, def) in [(&ring.s, ring.generators.s), (&ring.t, ring.generators.t)] {
                if let (Some(op), Some(def)) = (op, def) {
                    assert_eq!(op.apply(&GradedClass::unit()).as_single_class(), Some(def.ordinal));
                }
            }
        }
    }

    #[test]
    fn commutation_and_self_adjointness() {
        for space in ["E6/P1", "E6/P2", "F4/P1", "F4/P4", "E7/P7"] {
            let ring = QuantumRing::build(space.parse().unwrap()).unwrap();
            let ops = ring.operators();
            for a in &ops {
                assert!(ring.is_self_adjoint(a), "{space}: {} not self-adjoint", a.name);
                for b in &ops {
                    assert!(ring.commute(a, b), "{space}: [{}, {}] ≠ 0", a.name, b.name);
                }
            }
        }
    }

    #[test]
    fn monomial_expand_examples() {
        let e7 = QuantumRing::build("E7/P7".parse().unwrap()).unwrap();
        let x = e7.monomial_expand(Monomial::new(4, 0, 0, 0)).unwrap();
        assert_eq!(x.as_single_class(), Some(ord(&e7.quotient, &[0, 0, 0, 1, 1, 1, 1])));
        assert_eq!(e7.monomial_expand(Monomial::ONE).unwrap(), GradedClass::unit());

        let e6 = QuantumRing::build("E6/P2".parse().unwrap()).unwrap();
        let s = e6.monomial_expand(Monomial::new(0, 1, 0, 0)).unwrap();
        assert_eq!(s.as_single_class(), Some(ord(&e6.quotient, &[0, 1, 1, 1, 0, 0])));
        assert!(e6.monomial_expand(Monomial::new(50, 0, 0, 0)).is_err());
    }

    #[test]
    fn evaluation_orders_agree() {
        let ring = QuantumRing::build("E6/P2".parse().unwrap()).unwrap();
        let mut a = Evaluator::new(&ring, EvalOrder::HOutermost);
        let mut b = Evaluator::new(&ring, EvalOrder::HInnermost);
        for d in 0..=2 * ring.dimension() {
            for m in monomial_basis(&ring.generators, d) {
                let x = a.monomial(m).unwrap();
                assert_eq!(x, b.monomial(m).unwrap(), "{m}");
                assert_eq!(x, ring.monomial_expand(m).unwrap());
                assert!(x.is_homogeneous(&ring.quotient) && x.degree == d);
            }
        }
    }

    #[test]
    fn krylov_examples() {
        let g2 = QuantumRing::build("G2/P1".parse().unwrap()).unwrap();
        assert!(g2.krylov_report().iter().all(|r| r.deficit_h() == 0));

        let e6 = QuantumRing::build("E6/P1".parse().unwrap()).unwrap();
        let rows = e6.krylov_report();
        assert_eq!(rows[4].deficit_h(), 1);
        assert!(rows.iter().all(|r| r.deficit_hst() == 0));

        let e7 = QuantumRing::build("E7/P1".parse().unwrap()).unwrap();
        let rows = e7.krylov_report();
        assert_eq!(rows[6].deficit_hs(), 1);
        assert_eq!(rows[6].deficit_hst(), 0);
    }

    #[test]
    fn pinned_constraints_are_unique() {
        for space in ["G2/P1", "F4/P1", "E6/P1", "E6/P2"] {
            let ring = QuantumRing::build(space.parse().unwrap()).unwrap();
            for g in ['s', 't'] {
                if let Some(rep) = ring.constraint_ambiguity(g) {
                    assert_eq!(rep.nullity_pinned, 0, "{space} {g}");
                }
            }
        }
    }

    #[test]
    fn pairing_is_poincare() {
        let ring = QuantumRing::build("F4/P4".parse().unwrap()).unwrap();
        let q = &ring.quotient;
        for u in 0..q.len() {
            let x = GradedClass::schubert(q, 1, u);
            let y = GradedClass::schubert(q, 0, q.dual(u));
            assert_eq!(ring.pairing(&x, &y), BTreeMap::from([(1, q_int(1))]));
        }
    }
}
