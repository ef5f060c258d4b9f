//! Degree-truncated toric initial ideals for the paired constructions.
//!
//! Every lattice point of the polytope becomes a variable; a variable maps to
//! its point raised to height one in a cone, and the toric ideal consists of
//! the binomial differences of monomials with equal image. The initial ideal
//! with respect to a reverse lexicographic order is recovered degree by
//! degree by grouping monomials into image fibers, then compared against the
//! combinatorially described generating set.

mod initial;
mod verify;

pub use initial::{claimed_generators, truncated_initial_ideal, TruncatedInitialIdeal};
pub use verify::{
    verify_groebner_claim, verify_hilbert_match, verify_phi_isomorphism, GroebnerReport,
    HilbertReport, HilbertRow, PhiReport,
};

use std::cmp::Ordering;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Poset, SimpleGraph, Subset};
use crate::limits::{
    DEFAULT_BOX_BUDGET, DEFAULT_DEGREE_BOUND, DEFAULT_MONOMIAL_BUDGET, DEFAULT_PERFECTION_LIMIT,
};
use crate::{Error, Result};

/// Which construction the ring is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ToricVariant {
    /// `conv(O_P ∪ -Q_G)`; variables are the nonzero lattice points plus one
    /// variable for the origin.
    Gamma,
    /// `conv((O_P × 1) ∪ (-Q_G × -1))`; all vertex variables survive and the
    /// origin variable sits strictly inside.
    Omega,
    /// `conv(C_P ∪ -Q_G)` with the chain polytope in place of the order
    /// polytope. Its variables are indexed by the same ideals, relabeled by
    /// their maximal elements, so generator sets can be compared index-wise
    /// with the `Gamma` ring.
    ChainGamma,
}

/// A ring variable: the homogenizing origin variable, a stable set variable,
/// or an ideal (respectively antichain) variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarLabel {
    Z,
    Y(Subset),
    X(Subset),
}

/// Variables and their lattice images for one construction.
///
/// Storage order is canonical: `z` first, then the `y` variables sorted by
/// (cardinality, elements), then the `x` variables in the same order of their
/// indexing ideals. Cardinality order refines containment, so the storage
/// order itself is an admissible variable order.
#[derive(Debug, Clone)]
pub struct ToricModel {
    variant: ToricVariant,
    d: usize,
    labels: Vec<VarLabel>,
    images: Vec<Vec<i64>>,
    ideals: Vec<Subset>,
    maxes: Vec<Subset>,
    stables: Vec<Subset>,
    x_start: usize,
}

impl ToricModel {
    pub fn new(p: &Poset, g: &SimpleGraph, variant: ToricVariant) -> Result<Self> {
        if p.ground_set_size() != g.ground_set_size() {
            return Err(Error::DimensionMismatch {
                left: p.ground_set_size(),
                right: g.ground_set_size(),
            });
        }
        let d = p.ground_set_size();
        let mut ideals = p.ideals();
        let mut stables = g.stable_sets().faces().to_vec();
        if variant != ToricVariant::Omega {
            // the empty ideal and the empty stable set both map to the
            // origin, which is the single z variable
            ideals.remove(0);
            stables.remove(0);
        }
        let maxes: Vec<Subset> = ideals
            .iter()
            .map(|i| p.max_elements(i).expect("enumerated ideals are ideals"))
            .collect();

        let lift_dim = match variant {
            ToricVariant::Omega => d + 2,
            _ => d + 1,
        };
        let mut origin = vec![0i64; lift_dim];
        origin[lift_dim - 1] = 1;
        let mut labels = vec![VarLabel::Z];
        let mut images = vec![origin];
        for s in &stables {
            labels.push(VarLabel::Y(s.clone()));
            let mut im: Vec<i64> = s.indicator().iter().map(|&c| -c).collect();
            if variant == ToricVariant::Omega {
                im.push(-1);
            }
            im.push(1);
            images.push(im);
        }
        let x_start = labels.len();
        for (i, ideal) in ideals.iter().enumerate() {
            let (label, base) = match variant {
                ToricVariant::ChainGamma => (maxes[i].clone(), maxes[i].indicator()),
                _ => (ideal.clone(), ideal.indicator()),
            };
            labels.push(VarLabel::X(label));
            let mut im = base;
            if variant == ToricVariant::Omega {
                im.push(1);
            }
            im.push(1);
            images.push(im);
        }
        Ok(ToricModel {
            variant,
            d,
            labels,
            images,
            ideals,
            maxes,
            stables,
            x_start,
        })
    }

    pub fn variant(&self) -> ToricVariant {
        self.variant
    }

    pub fn ground_set_size(&self) -> usize {
        self.d
    }

    pub fn var_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[VarLabel] {
        &self.labels
    }

    pub fn images(&self) -> &[Vec<i64>] {
        &self.images
    }

    /// Ideals indexing the `x` variables, in storage order.
    pub fn ideals(&self) -> &[Subset] {
        &self.ideals
    }

    /// Maximal elements of each indexing ideal, in storage order.
    pub fn maxes(&self) -> &[Subset] {
        &self.maxes
    }

    /// Stable sets indexing the `y` variables, in storage order.
    pub fn stables(&self) -> &[Subset] {
        &self.stables
    }

    /// Storage index of the first `x` variable; `y` variables occupy
    /// `1..x_start`.
    pub fn x_start(&self) -> usize {
        self.x_start
    }

    /// Variables spanning the stable set subring: the `y` block plus, for the
    /// unlifted constructions, the origin variable that plays the role of the
    /// homogenizer there.
    pub fn stable_subring_vars(&self) -> Vec<usize> {
        match self.variant {
            ToricVariant::Omega => (1..self.x_start).collect(),
            _ => std::iter::once(0).chain(1..self.x_start).collect(),
        }
    }

    /// Builds the requested monomial order. Both variants put `z` below every
    /// `y` below every `x` and refine containment within each block; the
    /// seeded one draws a random linear extension.
    pub fn order(&self, variant: OrderVariant) -> MonomialOrder {
        match variant {
            OrderVariant::Canonical => MonomialOrder::identity(self.var_count()),
            OrderVariant::Seeded(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut by_rank = vec![0usize];
                for i in random_extension(&self.stables, &mut rng) {
                    by_rank.push(1 + i);
                }
                for i in random_extension(&self.ideals, &mut rng) {
                    by_rank.push(self.x_start + i);
                }
                MonomialOrder { by_rank }
            }
        }
    }

    /// Renders a monomial with its combinatorial labels: `x` and `y` list one
    /// index set per unit of exponent, `z` is the exponent of the origin
    /// variable.
    pub fn monomial_json(&self, m: &Monomial) -> MonomialJson {
        let mut x = Vec::new();
        let mut y = Vec::new();
        let mut z = 0u32;
        for (i, &e) in m.exps().iter().enumerate() {
            match &self.labels[i] {
                VarLabel::Z => z += e as u32,
                VarLabel::Y(s) => {
                    for _ in 0..e {
                        y.push(s.elems());
                    }
                }
                VarLabel::X(s) => {
                    for _ in 0..e {
                        x.push(s.elems());
                    }
                }
            }
        }
        MonomialJson { x, y, z }
    }
}

/// A random order of `sets` compatible with strict containment, drawn by
/// repeatedly picking a uniformly random minimal element.
fn random_extension(sets: &[Subset], rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut remaining: Vec<usize> = (0..sets.len()).collect();
    let mut out = Vec::with_capacity(sets.len());
    while !remaining.is_empty() {
        let minimal: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&i| {
                remaining
                    .iter()
                    .all(|&j| j == i || !sets[j].is_proper_subset_of(&sets[i]))
            })
            .collect();
        let pick = minimal[rng.gen_range(0..minimal.len())];
        out.push(pick);
        remaining.retain(|&i| i != pick);
    }
    out
}

/// Choice of variable order for the reverse lexicographic comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderVariant {
    /// The storage order itself.
    Canonical,
    /// A reproducible random admissible order.
    Seeded(u64),
}

/// A linear order on the variables; `by_rank[0]` is the smallest variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    by_rank: Vec<usize>,
}

impl MonomialOrder {
    pub fn identity(n: usize) -> Self {
        MonomialOrder {
            by_rank: (0..n).collect(),
        }
    }

    pub fn by_rank(&self) -> &[usize] {
        &self.by_rank
    }

    /// Degree first, then reverse lexicographic: of two monomials of equal
    /// degree the larger one has the smaller exponent on the smallest
    /// variable where they differ.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        for &v in &self.by_rank {
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {}
            }
        }
        Ordering::Equal
    }

    /// The induced order on a subset of the variables. `keep` lists storage
    /// indices in ascending order; the result speaks about the reindexed
    /// variables `0..keep.len()`.
    pub fn restrict(&self, keep: &[usize]) -> MonomialOrder {
        let pos: std::collections::HashMap<usize, usize> =
            keep.iter().enumerate().map(|(s, &f)| (f, s)).collect();
        MonomialOrder {
            by_rank: self
                .by_rank
                .iter()
                .filter_map(|v| pos.get(v).copied())
                .collect(),
        }
    }
}

/// A monomial as an exponent vector over the storage-ordered variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u8>,
}

impl Monomial {
    pub fn from_exps(exps: Vec<u8>) -> Self {
        Monomial { exps }
    }

    /// Product of the listed variables, with multiplicity.
    pub fn from_vars(vars: &[usize], var_count: usize) -> Self {
        let mut exps = vec![0u8; var_count];
        for &v in vars {
            exps[v] += 1;
        }
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u8] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a <= b)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// The image of the monomial under the variable map.
    pub fn image(&self, images: &[Vec<i64>]) -> Vec<i64> {
        let dim = images[0].len();
        let mut out = vec![0i64; dim];
        for (v, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                for k in 0..dim {
                    out[k] += e as i64 * images[v][k];
                }
            }
        }
        out
    }
}

/// Label-level rendering of a monomial: one element list per unit of
/// exponent for the `x` and `y` blocks, total exponent for `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub x: Vec<Vec<usize>>,
    pub y: Vec<Vec<usize>>,
    pub z: u32,
}

/// Knobs for the truncated computations.
#[derive(Debug, Clone)]
pub struct ToricConfig {
    /// Degrees `1..=degree_bound` are examined.
    pub degree_bound: usize,
    /// Cap on the number of monomials enumerated across all degrees.
    pub monomial_budget: usize,
    /// Cap forwarded to lattice point enumeration.
    pub box_budget: u128,
    pub order: OrderVariant,
    /// Largest ground set accepted by the exhaustive perfection search.
    pub perfection_limit: usize,
}

impl Default for ToricConfig {
    fn default() -> Self {
        ToricConfig {
            degree_bound: DEFAULT_DEGREE_BOUND,
            monomial_budget: DEFAULT_MONOMIAL_BUDGET,
            box_budget: DEFAULT_BOX_BUDGET,
            order: OrderVariant::Canonical,
            perfection_limit: DEFAULT_PERFECTION_LIMIT,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg_gamma_model() -> ToricModel {
        ToricModel::new(
            &Poset::chain(1),
            &SimpleGraph::empty(1),
            ToricVariant::Gamma,
        )
        .unwrap()
    }

    #[test]
    fn gamma_model_shape_for_a_segment() {
        let m = seg_gamma_model();
        assert_eq!(m.var_count(), 3);
        assert_eq!(m.labels()[0], VarLabel::Z);
        assert_eq!(
            m.images(),
            &[vec![0, 1], vec![-1, 1], vec![1, 1]]
        );
        assert_eq!(m.x_start(), 2);
        assert_eq!(m.stable_subring_vars(), vec![0, 1]);
    }

    #[test]
    fn omega_model_keeps_empty_labels() {
        let m = ToricModel::new(
            &Poset::chain(1),
            &SimpleGraph::empty(1),
            ToricVariant::Omega,
        )
        .unwrap();
        assert_eq!(m.var_count(), 5);
        assert_eq!(
            m.images(),
            &[
                vec![0, 0, 1],
                vec![0, -1, 1],
                vec![-1, -1, 1],
                vec![0, 1, 1],
                vec![1, 1, 1],
            ]
        );
        assert_eq!(m.stable_subring_vars(), vec![1, 2]);
    }

    #[test]
    fn chain_variant_relabels_by_maximal_elements() {
        let p = Poset::chain(2);
        let m = ToricModel::new(&p, &SimpleGraph::empty(2), ToricVariant::ChainGamma).unwrap();
        let x_labels: Vec<Vec<usize>> = m.labels()[m.x_start()..]
            .iter()
            .map(|l| match l {
                VarLabel::X(s) => s.elems(),
                _ => unreachable!(),
            })
            .collect();
        // ideals of a 2-chain are {1} and {1,2}; their maxima are {1} and {2}
        assert_eq!(x_labels, vec![vec![1], vec![2]]);
        assert_eq!(
            &m.images()[m.x_start()..],
            &[vec![1, 0, 1], vec![0, 1, 1]]
        );
    }

    #[test]
    fn model_rejects_mismatched_ground_sets() {
        assert!(matches!(
            ToricModel::new(
                &Poset::chain(2),
                &SimpleGraph::empty(3),
                ToricVariant::Gamma
            ),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn revlex_prefers_smaller_exponent_on_the_smallest_variable() {
        // vars: z < x1 < x2 < x12; compare x1 x2 with x12 z
        let order = MonomialOrder::identity(4);
        let a = Monomial::from_vars(&[1, 2], 4);
        let b = Monomial::from_vars(&[0, 3], 4);
        assert_eq!(order.compare(&a, &b), Ordering::Greater);
        assert_eq!(order.compare(&b, &a), Ordering::Less);
        assert_eq!(order.compare(&a, &a), Ordering::Equal);
        // degree dominates
        let c = Monomial::from_vars(&[0], 4);
        assert_eq!(order.compare(&c, &a), Ordering::Less);
    }

    #[test]
    fn restricted_order_keeps_relative_ranks() {
        let order = MonomialOrder {
            by_rank: vec![3, 0, 2, 1],
        };
        let sub = order.restrict(&[0, 2, 3]);
        // full ranks 3 < 0 < 2 restrict to storage {0,2,3} -> sub indices
        assert_eq!(sub.by_rank(), &[2, 0, 1]);
    }

    #[test]
    fn seeded_order_respects_blocks_and_containment() {
        let p = Poset::antichain(3);
        let g = SimpleGraph::path(3).unwrap();
        let m = ToricModel::new(&p, &g, ToricVariant::Gamma).unwrap();
        for seed in 0..20 {
            let order = m.order(OrderVariant::Seeded(seed));
            let rank_of = {
                let mut r = vec![0usize; m.var_count()];
                for (pos, &v) in order.by_rank().iter().enumerate() {
                    r[v] = pos;
                }
                r
            };
            assert_eq!(rank_of[0], 0);
            for y in 1..m.x_start() {
                for x in m.x_start()..m.var_count() {
                    assert!(rank_of[y] < rank_of[x]);
                }
            }
            for (i, a) in m.ideals().iter().enumerate() {
                for (j, b) in m.ideals().iter().enumerate() {
                    if a.is_proper_subset_of(b) {
                        assert!(rank_of[m.x_start() + i] < rank_of[m.x_start() + j]);
                    }
                }
            }
            for (i, a) in m.stables().iter().enumerate() {
                for (j, b) in m.stables().iter().enumerate() {
                    if a.is_proper_subset_of(b) {
                        assert!(rank_of[1 + i] < rank_of[1 + j]);
                    }
                }
            }
        }
    }

    #[test]
    fn seeded_order_is_reproducible() {
        let p = Poset::antichain(3);
        let g = SimpleGraph::empty(3);
        let m = ToricModel::new(&p, &g, ToricVariant::Gamma).unwrap();
        assert_eq!(
            m.order(OrderVariant::Seeded(7)),
            m.order(OrderVariant::Seeded(7))
        );
    }

    #[test]
    fn monomial_image_and_divisibility() {
        let m = seg_gamma_model();
        let prod = Monomial::from_vars(&[1, 2], 3);
        assert_eq!(prod.image(m.images()), vec![0, 2]);
        let z2 = Monomial::from_vars(&[0, 0], 3);
        assert_eq!(z2.image(m.images()), vec![0, 2]);
        assert!(!z2.is_squarefree());
        assert!(Monomial::from_vars(&[0], 3).divides(&z2));
        assert!(!prod.divides(&z2));
    }

    #[test]
    fn monomial_json_rendering() {
        let p = Poset::antichain(2);
        let m = ToricModel::new(&p, &SimpleGraph::empty(2), ToricVariant::Gamma).unwrap();
        // vars: z, y1, y2, y12, x1, x2, x12
        let mono = Monomial::from_vars(&[0, 4, 5, 3], 7);
        let json = m.monomial_json(&mono);
        assert_eq!(
            json,
            MonomialJson {
                x: vec![vec![1], vec![2]],
                y: vec![vec![1, 2]],
                z: 1
            }
        );
        assert_eq!(
            serde_json::to_string(&json).unwrap(),
            r#"{"x":[[1],[2]],"y":[[1,2]],"z":1}"#
        );
    }
}
