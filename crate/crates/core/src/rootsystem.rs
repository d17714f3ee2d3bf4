//! Root systems of the exceptional types in the Bourbaki numbering.
//!
//! Roots are kept in simple-root coordinates, weights in fundamental-weight
//! coordinates. The Cartan matrix is stored as `cartan[i][j] = <α_j, α_i^∨>`,
//! so the fundamental-weight coordinates of a root `x` are `cartan · x`.
//!
//! Simple roots carry a half squared length `d_i` (1 for short roots, 2 or 3
//! for the long roots of F4 and G2); with it the invariant form is the
//! integer matrix `(α_i, α_j) = d_i · cartan[i][j]`, and every coroot pairing
//! reduces to an exact integer division.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_rational::Ratio;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl GroupKind {
    pub const ALL: [GroupKind; 5] = [
        GroupKind::E6,
        GroupKind::E7,
        GroupKind::E8,
        GroupKind::F4,
        GroupKind::G2,
    ];

    pub fn rank(self) -> usize {
        match self {
            GroupKind::E6 => 6,
            GroupKind::E7 => 7,
            GroupKind::E8 => 8,
            GroupKind::F4 => 4,
            GroupKind::G2 => 2,
        }
    }

    /// Dimension of the Lie algebra.
    pub fn dimension(self) -> usize {
        match self {
            GroupKind::E6 => 78,
            GroupKind::E7 => 133,
            GroupKind::E8 => 248,
            GroupKind::F4 => 52,
            GroupKind::G2 => 14,
        }
    }

    pub fn parse(s: &str) -> Option<GroupKind> {
        match s {
            "E6" => Some(GroupKind::E6),
            "E7" => Some(GroupKind::E7),
            "E8" => Some(GroupKind::E8),
            "F4" => Some(GroupKind::F4),
            "G2" => Some(GroupKind::G2),
            _ => None,
        }
    }

    /// Bourbaki Cartan matrix, `c[i][j] = <α_j, α_i^∨>` (0-based indices).
    fn cartan(self) -> Vec<Vec<i64>> {
        let r = self.rank();
        let mut c = vec![vec![0i64; r]; r];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |a: usize, b: usize, ab: i64, ba: i64| {
            // c[a][b] = <α_b, α_a^∨>
            c[a - 1][b - 1] = ab;
            c[b - 1][a - 1] = ba;
        };
        match self {
            GroupKind::E6 | GroupKind::E7 | GroupKind::E8 => {
                link(1, 3, -1, -1);
                link(3, 4, -1, -1);
                link(2, 4, -1, -1);
                for k in 4..r {
                    link(k, k + 1, -1, -1);
                }
            }
            GroupKind::F4 => {
                link(1, 2, -1, -1);
                // α_2 long, α_3 short
                link(2, 3, -1, -2);
                link(3, 4, -1, -1);
            }
            GroupKind::G2 => {
                // α_1 short, α_2 long
                link(1, 2, -3, -1);
            }
        }
        c
    }

    /// Half squared lengths of the simple roots, short roots normalised to 1.
    fn half_norms(self) -> Vec<i64> {
        match self {
            GroupKind::F4 => vec![2, 2, 1, 1],
            GroupKind::G2 => vec![1, 3],
            k => vec![1; k.rank()],
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// Coefficients `(a_1, …, a_r)` on the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootCoords(pub Vec<i64>);

/// Coefficients on the fundamental weights, i.e. pairings with the simple coroots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightCoords(pub Vec<i64>);

impl RootCoords {
    pub fn zero(rank: usize) -> Self {
        RootCoords(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootCoords(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&a| a >= 0) && self.0.iter().any(|&a| a > 0)
    }

    pub fn add(&self, other: &RootCoords) -> RootCoords {
        RootCoords(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, k: i64) -> RootCoords {
        RootCoords(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> RootCoords {
        self.scaled(-1)
    }
}

impl fmt::Display for RootCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl WeightCoords {
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        WeightCoords(v)
    }

    pub fn sub(&self, other: &WeightCoords) -> WeightCoords {
        WeightCoords(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> WeightCoords {
        WeightCoords(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for WeightCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub kind: GroupKind,
    /// `cartan[i][j] = <α_j, α_i^∨>`.
    pub cartan: Vec<Vec<i64>>,
    /// Half squared lengths of the simple roots.
    pub half_norms: Vec<i64>,
    /// Positive roots in weakly increasing height, ties broken lexicographically.
    pub positives: Vec<RootCoords>,
    /// Each positive coroot in simple-coroot coordinates.
    pub coroots: Vec<Vec<i64>>,
}

impl RootSystem {
    /// Closes the simple roots under simple reflections and keeps the positive half.
    pub fn build(kind: GroupKind) -> RootSystem {
        let r = kind.rank();
        let cartan = kind.cartan();
        let half_norms = kind.half_norms();
        let mut rs = RootSystem {
            kind,
            cartan,
            half_norms,
            positives: Vec::new(),
            coroots: Vec::new(),
        };

        let mut seen: BTreeSet<RootCoords> = BTreeSet::new();
        let mut queue: VecDeque<RootCoords> = VecDeque::new();
        for i in 0..r {
            let a = RootCoords::simple(r, i);
            seen.insert(a.clone());
            queue.push_back(a);
        }
        while let Some(x) = queue.pop_front() {
            for i in 0..r {
                let y = rs.reflect_root_simple(&x, i);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut positives: Vec<RootCoords> = seen.into_iter().filter(|x| x.is_positive()).collect();
        positives.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        rs.coroots = positives.iter().map(|b| rs.coroot_coords(b)).collect();
        rs.positives = positives;
        rs
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    /// The invariant form `(x, y)` on the root lattice.
    pub fn form(&self, x: &RootCoords, y: &RootCoords) -> i64 {
        let r = self.rank();
        let mut s = 0;
        for i in 0..r {
            if x.0[i] == 0 {
                continue;
            }
            for j in 0..r {
                s += x.0[i] * y.0[j] * self.half_norms[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// `(β, β) / 2`.
    pub fn half_norm(&self, beta: &RootCoords) -> i64 {
        self.form(beta, beta) / 2
    }

    /// `<x, β^∨>` for an arbitrary root `β` (not necessarily positive).
    pub fn pair_root(&self, x: &RootCoords, beta: &RootCoords) -> i64 {
        let num = self.form(x, beta);
        let den = self.half_norm(beta);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// `<x, β^∨>` where `β` is the positive root with index `beta`.
    pub fn pair(&self, x: &RootCoords, beta: usize) -> i64 {
        self.pair_root(x, &self.positives[beta])
    }

    /// Pairing of a weight with the coroot of a positive root.
    pub fn pair_weight(&self, lambda: &WeightCoords, beta: usize) -> i64 {
        self.coroots[beta].iter().zip(&lambda.0).map(|(c, l)| c * l).sum()
    }

    fn coroot_coords(&self, beta: &RootCoords) -> Vec<i64> {
        let d = self.half_norm(beta);
        beta.0
            .iter()
            .zip(&self.half_norms)
            .map(|(b, di)| {
                debug_assert_eq!((b * di) % d, 0);
                b * di / d
            })
            .collect()
    }

    /// Fundamental-weight coordinates of a root-lattice element.
    pub fn to_weight(&self, x: &RootCoords) -> WeightCoords {
        WeightCoords(
            self.cartan
                .iter()
                .map(|row| row.iter().zip(&x.0).map(|(c, a)| c * a).sum())
                .collect(),
        )
    }

    /// Inverse of [`to_weight`](Self::to_weight); `None` off the root lattice.
    pub fn to_root(&self, lambda: &WeightCoords) -> Option<RootCoords> {
        let r = self.rank();
        let mut m: Vec<Vec<Ratio<i64>>> = (0..r)
            .map(|i| {
                let mut row: Vec<Ratio<i64>> = self.cartan[i].iter().map(|&c| Ratio::from_integer(c)).collect();
                row.push(Ratio::from_integer(lambda.0[i]));
                row
            })
            .collect();
        for col in 0..r {
            let piv = (col..r).find(|&i| m[i][col] != Ratio::from_integer(0))?;
            m.swap(col, piv);
            let p = m[col][col];
            for v in m[col].iter_mut() {
                *v /= p;
            }
            for i in 0..r {
                if i != col && m[i][col] != Ratio::from_integer(0) {
                    let f = m[i][col];
                    for j in 0..=r {
                        let t = m[col][j];
                        m[i][j] -= f * t;
                    }
                }
            }
        }
        let mut out = Vec::with_capacity(r);
        for row in &m {
            let v = row[r];
            if !v.is_integer() {
                return None;
            }
            out.push(v.to_integer());
        }
        Some(RootCoords(out))
    }

    pub fn reflect_root_simple(&self, x: &RootCoords, i: usize) -> RootCoords {
        let k: i64 = self.cartan[i].iter().zip(&x.0).map(|(c, a)| c * a).sum();
        let mut y = x.clone();
        y.0[i] -= k;
        y
    }

    /// `s_β(x) = x − <x, β^∨> β`.
    pub fn reflect_root(&self, x: &RootCoords, beta: usize) -> RootCoords {
        let k = self.pair(x, beta);
        x.add(&self.positives[beta].scaled(-k))
    }

    /// `s_β(λ) = λ − <λ, β^∨> β`, all in weight coordinates.
    pub fn reflect_weight(&self, lambda: &WeightCoords, beta: usize) -> WeightCoords {
        let k = self.pair_weight(lambda, beta);
        let b = self.to_weight(&self.positives[beta]);
        WeightCoords(lambda.0.iter().zip(&b.0).map(|(l, x)| l - k * x).collect())
    }

    /// Simple reflection on a weight: `s_i(λ) = λ − λ_i α_i`.
    pub fn reflect_weight_simple(&self, lambda: &WeightCoords, i: usize) -> WeightCoords {
        let k = lambda.0[i];
        WeightCoords(
            lambda
                .0
                .iter()
                .enumerate()
                .map(|(j, l)| l - k * self.cartan[j][i])
                .collect(),
        )
    }

    pub fn index_of(&self, x: &RootCoords) -> Option<usize> {
        self.positives.iter().position(|y| y == x)
    }

    /// Whether `±x` is a root.
    pub fn is_root(&self, x: &RootCoords) -> bool {
        self.index_of(x).is_some() || self.index_of(&x.neg()).is_some()
    }

    pub fn highest_root(&self) -> &RootCoords {
        self.positives.last().expect("root system has roots")
    }

    /// Coefficient of `ϖ_node` in the anticanonical weight of `G/P_node`
    /// (`node` is 1-based, Bourbaki numbering).
    pub fn fano_index(&self, node: usize) -> i64 {
        let p = node - 1;
        let sum = self
            .positives
            .iter()
            .filter(|a| a.0[p] > 0)
            .fold(RootCoords::zero(self.rank()), |acc, a| acc.add(a));
        self.pair_root(&sum, &RootCoords::simple(self.rank(), p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn positive_root_counts() {
        for kind in GroupKind::ALL {
            let rs = RootSystem::build(kind);
            assert_eq!(rs.positives.len(), (kind.dimension() - kind.rank()) / 2, "{kind}");
        }
        assert_eq!(RootSystem::build(GroupKind::G2).positives.len(), 6);
        assert_eq!(RootSystem::build(GroupKind::F4).positives.len(), 24);
    }

    #[test]
    fn e8_highest_root_is_dominant() {
        let rs = RootSystem::build(GroupKind::E8);
        let theta = rs.highest_root();
        assert_eq!(theta.0, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert!(rs.to_weight(theta).0.iter().all(|&a| a >= 0));
    }

    #[test]
    fn cartan_shape() {
        for kind in GroupKind::ALL {
            let rs = RootSystem::build(kind);
            for i in 0..kind.rank() {
                for j in 0..kind.rank() {
                    if i == j {
                        assert_eq!(rs.cartan[i][j], 2);
                    } else {
                        assert!(rs.cartan[i][j] <= 0);
                        assert_eq!(rs.cartan[i][j] == 0, rs.cartan[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let e6 = RootSystem::build(GroupKind::E6);
        assert_eq!(e6.pair_root(&RootCoords::simple(6, 0), &RootCoords::simple(6, 0)), 2);

        let f4 = RootSystem::build(GroupKind::F4);
        assert_eq!(f4.pair_root(&RootCoords::simple(4, 1), &RootCoords::simple(4, 2)), -2);
        assert_eq!(f4.pair_root(&RootCoords::simple(4, 2), &RootCoords::simple(4, 1)), -1);

        let g2 = RootSystem::build(GroupKind::G2);
        let top = g2.positives.len() - 1;
        assert_eq!(g2.pair(g2.highest_root(), top), 2);
        // α_1 short, α_2 long
        assert_eq!(g2.pair_root(&RootCoords::simple(2, 1), &RootCoords::simple(2, 0)), -3);
        assert_eq!(g2.highest_root().0, vec![3, 2]);
    }

    #[test]
    fn pairing_matches_cartan() {
        for kind in GroupKind::ALL {
            let rs = RootSystem::build(kind);
            let r = kind.rank();
            for i in 0..r {
                for j in 0..r {
                    let v = rs.pair_root(&RootCoords::simple(r, j), &RootCoords::simple(r, i));
                    assert_eq!(v, rs.cartan[i][j]);
                }
            }
        }
    }

    #[test]
    fn reflection_closure() {
        for kind in GroupKind::ALL {
            let rs = RootSystem::build(kind);
            for a in &rs.positives {
                for b in 0..rs.positives.len() {
                    assert!(rs.is_root(&rs.reflect_root(a, b)), "{kind}: s_{b}({a}) not a root");
                }
            }
        }
    }

    #[test]
    fn reflect_weight_examples() {
        let e6 = RootSystem::build(GroupKind::E6);
        let w1 = WeightCoords::fundamental(6, 0);
        let a1 = e6.index_of(&RootCoords::simple(6, 0)).unwrap();
        let img = e6.reflect_weight(&w1, a1);
        assert_eq!(e6.to_root(&w1.sub(&img)).unwrap().0, vec![1, 0, 0, 0, 0, 0]);

        let f4 = RootSystem::build(GroupKind::F4);
        let w = WeightCoords::fundamental(4, 0);
        let idx = |i| f4.index_of(&RootCoords::simple(4, i)).unwrap();
        let img = f4.reflect_weight(&f4.reflect_weight(&f4.reflect_weight(&w, idx(0)), idx(1)), idx(2));
        assert_eq!(f4.to_root(&w.sub(&img)).unwrap().0, vec![1, 1, 2, 0]);

        // fixed when the pairing vanishes
        let a2 = e6.index_of(&RootCoords::simple(6, 1)).unwrap();
        assert_eq!(e6.reflect_weight(&w1, a2), w1);
    }

    #[test]
    fn fano_indices() {
        let cases = [
            (GroupKind::E6, 1, 12),
            (GroupKind::E6, 2, 11),
            (GroupKind::E7, 1, 17),
            (GroupKind::E7, 7, 18),
            (GroupKind::E8, 8, 29),
            (GroupKind::F4, 1, 8),
            (GroupKind::F4, 4, 11),
            (GroupKind::G2, 1, 5),
            (GroupKind::G2, 2, 3),
        ];
        for (kind, node, c) in cases {
            assert_eq!(RootSystem::build(kind).fano_index(node), c, "{kind}/P{node}");
        }
    }

    #[test]
    fn weight_root_round_trip() {
        for kind in GroupKind::ALL {
            let rs = RootSystem::build(kind);
            for a in &rs.positives {
                assert_eq!(rs.to_root(&rs.to_weight(a)).as_ref(), Some(a));
            }
        }
    }

    fn kind_strategy() -> impl Strategy<Value = GroupKind> {
        prop_oneof![
            Just(GroupKind::E6),
            Just(GroupKind::E7),
            Just(GroupKind::E8),
            Just(GroupKind::F4),
            Just(GroupKind::G2)
        ]
    }

    proptest! {
        #[test]
        fn pairing_is_bilinear(kind in kind_strategy(), xs in proptest::collection::vec(-5i64..6, 8), ys in proptest::collection::vec(-5i64..6, 8), beta in 0usize..120) {
            let rs = RootSystem::build(kind);
            let r = kind.rank();
            let beta = beta % rs.positives.len();
            let x = RootCoords(xs[..r].to_vec());
            let y = RootCoords(ys[..r].to_vec());
            prop_assert_eq!(rs.pair(&x.add(&y), beta), rs.pair(&x, beta) + rs.pair(&y, beta));
        }

        #[test]
        fn reflection_is_involution(kind in kind_strategy(), ls in proptest::collection::vec(-4i64..5, 8), beta in 0usize..120) {
            let rs = RootSystem::build(kind);
            let beta = beta % rs.positives.len();
            let lambda = WeightCoords(ls[..kind.rank()].to_vec());
            let once = rs.reflect_weight(&lambda, beta);
            prop_assert_eq!(rs.reflect_weight(&once, beta), lambda.clone());
            prop_assert_eq!(once == lambda, rs.pair_weight(&lambda, beta) == 0);
        }
    }
}
