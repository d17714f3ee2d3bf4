//! The parabolic quotient `W/W_P` realised as the Weyl orbit of `ϖ_p`.
//!
//! The stabiliser of `ϖ_p` is exactly `W_P`, so orbit weights identify cosets
//! and the full Weyl group is never materialised. Breadth-first search from
//! `ϖ_p` applies `s_i` whenever `<λ, α_i^∨> > 0`, which raises the length of
//! the minimal representative by one; each level is sorted lexicographically
//! by weight so ordinals are reproducible.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rootsystem::{GroupKind, RootCoords, RootSystem, WeightCoords};

/// One of the nine exceptional (co)minuscule, quasi-minuscule or adjoint spaces.
/// `node` is 1-based in the Bourbaki numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceId {
    pub kind: GroupKind,
    pub node: usize,
}

impl SpaceId {
    pub const ALL: [SpaceId; 9] = [
        SpaceId { kind: GroupKind::E6, node: 1 },
        SpaceId { kind: GroupKind::E6, node: 2 },
        SpaceId { kind: GroupKind::E7, node: 1 },
        SpaceId { kind: GroupKind::E7, node: 7 },
        SpaceId { kind: GroupKind::E8, node: 8 },
        SpaceId { kind: GroupKind::F4, node: 1 },
        SpaceId { kind: GroupKind::F4, node: 4 },
        SpaceId { kind: GroupKind::G2, node: 1 },
        SpaceId { kind: GroupKind::G2, node: 2 },
    ];

    pub fn new(kind: GroupKind, node: usize) -> Result<SpaceId> {
        let id = SpaceId { kind, node };
        if SpaceId::ALL.contains(&id) {
            Ok(id)
        } else {
            Err(Error::UnknownSpace(id.to_string()))
        }
    }

    /// Short lowercase tag such as `e6p1`, used for file names.
    pub fn slug(&self) -> String {
        format!("{}p{}", self.kind.to_string().to_lowercase(), self.node)
    }

    /// Node printed at each coordinate of a table label. Bourbaki order
    /// everywhere except E7/P1, whose tables list `α2` after `α3, α4`, and
    /// E8/P8, whose labels read the long arm `α1, α3, …, α8` first and `α2` last.
    pub fn label_order(&self) -> Vec<usize> {
        match (self.kind, self.node) {
            (GroupKind::E7, 1) => vec![0, 2, 3, 1, 4, 5, 6],
            (GroupKind::E8, 8) => vec![0, 2, 3, 4, 5, 6, 7, 1],
            _ => (0..self.kind.rank()).collect(),
        }
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/P{}", self.kind, self.node)
    }
}

impl FromStr for SpaceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<SpaceId> {
        let norm = s.trim().to_uppercase();
        let (k, p) = norm
            .split_once('/')
            .ok_or_else(|| Error::UnknownSpace(s.to_string()))?;
        let kind = GroupKind::parse(k).ok_or_else(|| Error::UnknownSpace(s.to_string()))?;
        let node: usize = p
            .strip_prefix('P')
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| Error::UnknownSpace(s.to_string()))?;
        SpaceId::new(kind, node).map_err(|_| Error::UnknownSpace(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetElement {
    /// `λ = w(ϖ)`.
    pub weight: WeightCoords,
    /// `α = ϖ − λ` in simple-root coordinates.
    pub label: RootCoords,
    pub length: u32,
    /// Reduced word of the minimal representative, `w = s_{word[0]} s_{word[1]} ⋯`
    /// with 0-based simple-reflection indices; the last letter acts first on `ϖ`.
    pub word: Vec<usize>,
    /// Position within its degree.
    pub index: usize,
}

#[derive(Clone, Debug)]
pub struct ParabolicQuotient {
    pub space: SpaceId,
    pub roots: RootSystem,
    pub fano_index: u32,
    pub dimension: u32,
    /// Sorted by (length, discovery order); the position is the class ordinal.
    pub elements: Vec<CosetElement>,
    degree_start: Vec<usize>,
    by_weight: HashMap<WeightCoords, usize>,
    by_label: HashMap<RootCoords, usize>,
    /// `up[x][i]`: ordinal of `s_i·x` when that raises the length.
    up: Vec<Vec<Option<usize>>>,
}

impl ParabolicQuotient {
    pub fn enumerate(space: SpaceId) -> ParabolicQuotient {
        let roots = RootSystem::build(space.kind);
        let r = roots.rank();
        let p = space.node - 1;
        let fano_index = roots.fano_index(space.node) as u32;

        let mut elements = vec![CosetElement {
            weight: WeightCoords::fundamental(r, p),
            label: RootCoords::zero(r),
            length: 0,
            word: Vec::new(),
            index: 0,
        }];
        let mut by_weight: HashMap<WeightCoords, usize> = HashMap::new();
        by_weight.insert(elements[0].weight.clone(), 0);
        let mut degree_start = vec![0];
        let mut level: Range<usize> = 0..1;
        let mut length = 0;

        while !level.is_empty() {
            length += 1;
            let mut next: Vec<CosetElement> = Vec::new();
            let mut seen: HashMap<WeightCoords, usize> = HashMap::new();
            for x in level.clone() {
                for i in 0..r {
                    let li = elements[x].weight.0[i];
                    if li <= 0 {
                        continue;
                    }
                    let weight = roots.reflect_weight_simple(&elements[x].weight, i);
                    if seen.contains_key(&weight) {
                        continue;
                    }
                    let mut label = elements[x].label.clone();
                    label.0[i] += li;
                    let mut word = Vec::with_capacity(length as usize);
                    word.push(i);
                    word.extend_from_slice(&elements[x].word);
                    seen.insert(weight.clone(), next.len());
                    next.push(CosetElement { weight, label, length, word, index: 0 });
                }
            }
            next.sort_by(|a, b| a.weight.cmp(&b.weight));
            let start = elements.len();
            degree_start.push(start);
            for (k, mut e) in next.into_iter().enumerate() {
                e.index = k;
                by_weight.insert(e.weight.clone(), start + k);
                elements.push(e);
            }
            level = start..elements.len();
        }
        // the last pushed start is for an empty level
        degree_start.pop();
        degree_start.push(elements.len());
        let dimension = elements.last().map(|e| e.length).unwrap_or(0);

        let by_label = elements
            .iter()
            .enumerate()
            .map(|(k, e)| (e.label.clone(), k))
            .collect();
        let up = elements
            .iter()
            .map(|e| {
                (0..r)
                    .map(|i| {
                        (e.weight.0[i] > 0).then(|| by_weight[&roots.reflect_weight_simple(&e.weight, i)])
                    })
                    .collect()
            })
            .collect();

        ParabolicQuotient {
            space,
            roots,
            fano_index,
            dimension,
            elements,
            degree_start,
            by_weight,
            by_label,
            up,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, ordinal: usize) -> &CosetElement {
        &self.elements[ordinal]
    }

    pub fn length(&self, ordinal: usize) -> u32 {
        self.elements[ordinal].length
    }

    /// Ordinals of the classes of degree `d` (empty outside `0..=dimension`).
    pub fn degree_range(&self, d: u32) -> Range<usize> {
        let d = d as usize;
        if d + 1 >= self.degree_start.len() {
            return 0..0;
        }
        self.degree_start[d]..self.degree_start[d + 1]
    }

    pub fn ordinal_of_weight(&self, lambda: &WeightCoords) -> Option<usize> {
        self.by_weight.get(lambda).copied()
    }

    pub fn ordinal_of_label(&self, alpha: &RootCoords) -> Option<usize> {
        self.by_label.get(alpha).copied()
    }

    /// The class carrying the printed label `alpha`.
    pub fn lookup_label(&self, alpha: &RootCoords) -> Result<&CosetElement> {
        self.ordinal_of_label(alpha)
            .map(|k| &self.elements[k])
            .ok_or_else(|| Error::UnknownLabel {
                space: self.space.to_string(),
                label: alpha.to_string(),
            })
    }

    /// `s_i · x` when the length goes up by one.
    pub fn up(&self, ordinal: usize, i: usize) -> Option<usize> {
        self.up[ordinal][i]
    }

    /// Poincaré dual ordinal: `λ ↦ w_0(λ)`.
    pub fn dual(&self, ordinal: usize) -> usize {
        let lambda = &self.elements[ordinal].weight;
        let image = match self.space.kind {
            GroupKind::E6 => {
                let l = &lambda.0;
                WeightCoords(vec![-l[5], -l[1], -l[4], -l[3], -l[2], -l[0]])
            }
            _ => lambda.neg(),
        };
        self.by_weight[&image]
    }

    pub fn poincare_profile(&self) -> Vec<usize> {
        (0..=self.dimension).map(|d| self.degree_range(d).len()).collect()
    }

    /// `w(β)` for the minimal representative `w` of the given class.
    pub fn act_on_root(&self, ordinal: usize, beta: &RootCoords) -> RootCoords {
        self.elements[ordinal]
            .word
            .iter()
            .rev()
            .fold(beta.clone(), |acc, &i| self.roots.reflect_root_simple(&acc, i))
    }

    /// The label of a class in table coordinates (see [`SpaceId::label_order`]).
    pub fn table_label(&self, ordinal: usize) -> RootCoords {
        let label = &self.element(ordinal).label;
        RootCoords(self.space.label_order().iter().map(|&i| label.0[i]).collect())
    }

    /// Label lookup by tuple text in table coordinates, such as
    /// `(1,0,1,0,0,0)` or `1,0,1,0,0,0`.
    pub fn parse_label(&self, text: &str) -> Result<usize> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let coords: std::result::Result<Vec<i64>, _> = inner.split(',').map(|t| t.trim().parse()).collect();
        let unknown = || Error::UnknownLabel {
            space: self.space.to_string(),
            label: text.to_string(),
        };
        let coords = coords.map_err(|_| unknown())?;
        if coords.len() != self.roots.rank() {
            return Err(unknown());
        }
        let mut bourbaki = vec![0; coords.len()];
        for (c, &i) in coords.iter().zip(&self.space.label_order()) {
            bourbaki[i] = *c;
        }
        self.ordinal_of_label(&RootCoords(bourbaki)).ok_or_else(unknown)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_dimensions() {
        let expected = [
            (27, 16),
            (72, 21),
            (126, 33),
            (56, 27),
            (240, 57),
            (24, 15),
            (24, 15),
            (6, 5),
            (6, 5),
        ];
        for (space, (n, dim)) in SpaceId::ALL.iter().zip(expected) {
            let q = ParabolicQuotient::enumerate(*space);
            assert_eq!(q.len(), n, "{space}");
            assert_eq!(q.dimension, dim, "{space}");
            let profile = q.poincare_profile();
            let mut rev = profile.clone();
            rev.reverse();
            assert_eq!(profile, rev, "{space} profile not palindromic");
            assert_eq!(profile.iter().sum::<usize>(), n);
        }
    }

    #[test]
    fn profiles() {
        let e6 = ParabolicQuotient::enumerate("E6/P1".parse().unwrap());
        assert_eq!(&e6.poincare_profile()[..5], &[1, 1, 1, 1, 2]);
        let e7 = ParabolicQuotient::enumerate("E7/P7".parse().unwrap());
        assert_eq!(e7.poincare_profile()[9], 3);
        let g2 = ParabolicQuotient::enumerate("G2/P1".parse().unwrap());
        assert_eq!(g2.poincare_profile(), vec![1; 6]);
    }

    #[test]
    fn labels() {
        let e6 = ParabolicQuotient::enumerate("E6/P1".parse().unwrap());
        assert_eq!(e6.lookup_label(&RootCoords(vec![1, 0, 0, 0, 0, 0])).unwrap().length, 1);
        assert_eq!(e6.lookup_label(&RootCoords::zero(6)).unwrap().length, 0);
        assert!(e6.lookup_label(&RootCoords(vec![5, 0, 0, 0, 0, 0])).is_err());

        let f4 = ParabolicQuotient::enumerate("F4/P1".parse().unwrap());
        assert_eq!(f4.lookup_label(&RootCoords(vec![1, 1, 2, 0])).unwrap().length, 3);
    }

    #[test]
    fn element_invariants() {
        for space in SpaceId::ALL {
            let q = ParabolicQuotient::enumerate(space);
            let varpi = WeightCoords::fundamental(q.roots.rank(), space.node - 1);
            for (k, e) in q.elements.iter().enumerate() {
                assert_eq!(e.word.len() as u32, e.length);
                assert!(e.label.0.iter().all(|&a| a >= 0));
                assert_eq!(q.roots.to_root(&varpi.sub(&e.weight)).unwrap(), e.label);
                assert_eq!(q.degree_range(e.length).start + e.index, k);
                // replaying the word from ϖ lands on the weight
                let replay = e
                    .word
                    .iter()
                    .rev()
                    .fold(varpi.clone(), |acc, &i| q.roots.reflect_weight_simple(&acc, i));
                assert_eq!(replay, e.weight);
            }
        }
    }

    #[test]
    fn orbit_closed_and_lengths_coherent() {
        for space in SpaceId::ALL {
            let q = ParabolicQuotient::enumerate(space);
            for e in &q.elements {
                for i in 0..q.roots.rank() {
                    let img = q.roots.reflect_weight_simple(&e.weight, i);
                    let k = q.ordinal_of_weight(&img).expect("orbit closed");
                    let dl = q.length(k) as i64 - e.length as i64;
                    let expect = e.weight.0[i].signum();
                    assert_eq!(dl, expect, "{space}");
                }
            }
        }
    }

    #[test]
    fn duality() {
        for space in SpaceId::ALL {
            let q = ParabolicQuotient::enumerate(space);
            assert_eq!(q.dual(0), q.len() - 1);
            for k in 0..q.len() {
                assert_eq!(q.dual(q.dual(k)), k);
                assert_eq!(q.length(q.dual(k)), q.dimension - q.length(k));
            }
        }
        let e6 = ParabolicQuotient::enumerate("E6/P1".parse().unwrap());
        let h = e6.ordinal_of_label(&RootCoords(vec![1, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(e6.element(e6.dual(h)).label.0, vec![2, 2, 3, 4, 3, 1]);

        let e8 = ParabolicQuotient::enumerate("E8/P8".parse().unwrap());
        for k in e8.degree_range(6) {
            assert_eq!(e8.length(e8.dual(k)), 51);
        }
    }

    #[test]
    fn e7_p1_table_labels() {
        let q = ParabolicQuotient::enumerate("E7/P1".parse().unwrap());
        let w = q.parse_label("(1,1,1,0,1,1,1)").unwrap();
        assert_eq!(q.element(w).label.0, vec![1, 0, 1, 1, 1, 1, 1]);
        assert_eq!(q.table_label(w).to_string(), "(1,1,1,0,1,1,1)");
        for x in 0..q.len() {
            assert_eq!(q.parse_label(&q.table_label(x).to_string()).unwrap(), x);
        }
    }

    #[test]
    fn e8_p8_table_labels() {
        let q = ParabolicQuotient::enumerate("E8/P8".parse().unwrap());
        let w = q.parse_label("(0,1,2,2,2,2,2,1)").unwrap();
        assert_eq!(q.element(w).label.0, vec![0, 1, 1, 2, 2, 2, 2, 2]);
        assert_eq!(q.length(w), 12);
        assert_eq!(q.length(q.parse_label("(2,3,4,4,4,3,2,2)").unwrap()), 24);
    }

    #[test]
    fn space_parsing() {
        assert_eq!("e7/p7".parse::<SpaceId>().unwrap().to_string(), "E7/P7");
        assert!("E6/P3".parse::<SpaceId>().is_err());
        assert!("A2/P1".parse::<SpaceId>().is_err());
        assert!("E6".parse::<SpaceId>().is_err());
        assert_eq!(SpaceId::ALL[4].slug(), "e8p8");
    }
}
