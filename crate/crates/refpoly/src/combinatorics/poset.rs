//! Finite posets on `{1..d}`, their order ideals and antichains.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{check_ground_set, SimpleGraph, Subset};
use crate::{Error, Result};

/// A partial order on `{1..d}`, stored as the full reflexive-transitive relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    d: usize,
    /// `up[i]` holds the 0-based bitmask of all `j` with `i+1 <= j+1` in the order.
    up: Vec<u32>,
    /// `down[i]` is the transpose of `up`.
    down: Vec<u32>,
}

impl Poset {
    /// Builds a poset from cover-style relations `(a, b)` meaning `a < b`.
    /// The relations are closed transitively; cycles are rejected.
    pub fn from_covers(d: usize, covers: &[(usize, usize)]) -> Result<Self> {
        check_ground_set(d)?;
        let mut up = vec![0u32; d];
        for i in 0..d {
            up[i] |= 1 << i;
        }
        for &(a, b) in covers {
            if a == 0 || a > d || b == 0 || b > d {
                return Err(Error::InvalidInput(format!(
                    "cover ({a},{b}) outside ground set 1..={d}"
                )));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("reflexive cover ({a},{b})")));
            }
            up[a - 1] |= 1 << (b - 1);
        }
        // transitive closure by iterating until stable (d <= 31, so cheap)
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..d {
                let mut acc = up[i];
                let mut rest = up[i];
                while rest != 0 {
                    let j = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    acc |= up[j];
                }
                if acc != up[i] {
                    up[i] = acc;
                    changed = true;
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                if i != j && up[i] & (1 << j) != 0 && up[j] & (1 << i) != 0 {
                    return Err(Error::InvalidInput(format!(
                        "cover relations contain a cycle through {} and {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let mut down = vec![0u32; d];
        for i in 0..d {
            let mut rest = up[i];
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                down[j] |= 1 << i;
            }
        }
        Ok(Poset { d, up, down })
    }

    /// The antichain poset (no relations) on `{1..d}`.
    pub fn antichain(d: usize) -> Self {
        Poset::from_covers(d, &[]).expect("antichain poset")
    }

    /// The chain `1 < 2 < ... < d`.
    pub fn chain(d: usize) -> Self {
        let covers: Vec<(usize, usize)> = (1..d).map(|i| (i, i + 1)).collect();
        Poset::from_covers(d, &covers).expect("chain poset")
    }

    pub fn ground_set_size(&self) -> usize {
        self.d
    }

    /// `a <= b` in the order (1-based labels).
    pub fn leq(&self, a: usize, b: usize) -> bool {
        a >= 1 && b >= 1 && a <= self.d && b <= self.d && self.up[a - 1] & (1 << (b - 1)) != 0
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Cover relations (Hasse diagram edges) in sorted order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.d {
            for b in 1..=self.d {
                if a != b && self.leq(a, b) {
                    let between = (1..=self.d)
                        .any(|k| k != a && k != b && self.leq(a, k) && self.leq(k, b));
                    if !between {
                        out.push((a, b));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether the subset is downward closed.
    pub fn is_ideal(&self, s: &Subset) -> bool {
        s.elems().iter().all(|&e| {
            Subset::from_bits(self.d, self.down[e - 1]).is_subset_of(s)
        })
    }

    /// Whether the subset is pairwise incomparable.
    pub fn is_antichain(&self, s: &Subset) -> bool {
        let elems = s.elems();
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i + 1..] {
                if self.comparable(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// All order ideals, sorted by (cardinality, lexicographic elements).
    pub fn ideals(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = (0..(1u32 << self.d))
            .map(|bits| Subset::from_bits(self.d, bits))
            .filter(|s| self.is_ideal(s))
            .collect();
        out.sort();
        out
    }

    /// All antichains, sorted by (cardinality, lexicographic elements).
    pub fn antichains(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = (0..(1u32 << self.d))
            .map(|bits| Subset::from_bits(self.d, bits))
            .filter(|s| self.is_antichain(s))
            .collect();
        out.sort();
        out
    }

    /// Maximal elements of an order ideal; errors when the input is not an ideal.
    pub fn max_elements(&self, ideal: &Subset) -> Result<Subset> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal {
                subset: ideal.elems(),
            });
        }
        let mut bits = 0u32;
        for e in ideal.elems() {
            let strictly_above = self.up[e - 1] & !(1 << (e - 1));
            if strictly_above & ideal.bits() == 0 {
                bits |= 1 << (e - 1);
            }
        }
        Ok(Subset::from_bits(self.d, bits))
    }

    /// Downward closure of an antichain; errors when the input is not an antichain.
    pub fn ideal_from_antichain(&self, antichain: &Subset) -> Result<Subset> {
        if !self.is_antichain(antichain) {
            return Err(Error::NotAnAntichain {
                subset: antichain.elems(),
            });
        }
        let mut bits = 0u32;
        for e in antichain.elems() {
            bits |= self.down[e - 1];
        }
        Ok(Subset::from_bits(self.d, bits))
    }

    /// The comparability graph: edges join comparable pairs.
    pub fn comparability_graph(&self) -> SimpleGraph {
        let mut edges = Vec::new();
        for a in 1..=self.d {
            for b in a + 1..=self.d {
                if self.comparable(a, b) {
                    edges.push((a, b));
                }
            }
        }
        SimpleGraph::from_edges(self.d, &edges).expect("comparability graph edges are valid")
    }
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    d: usize,
    covers: Vec<(usize, usize)>,
}

impl Serialize for Poset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PosetJson {
            d: self.d,
            covers: self.covers(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PosetJson::deserialize(deserializer)?;
        Poset::from_covers(raw.d, &raw.covers).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vee() -> Poset {
        // 1 < 3 and 2 < 3
        Poset::from_covers(3, &[(1, 3), (2, 3)]).unwrap()
    }

    fn elems(list: &[Subset]) -> Vec<Vec<usize>> {
        list.iter().map(Subset::elems).collect()
    }

    #[test]
    fn chain_ideals_are_prefixes() {
        let p = Poset::chain(3);
        assert_eq!(
            elems(&p.ideals()),
            vec![vec![], vec![1], vec![1, 2], vec![1, 2, 3]]
        );
    }

    #[test]
    fn antichain_ideals_are_all_subsets() {
        let p = Poset::antichain(3);
        assert_eq!(p.ideals().len(), 8);
        assert_eq!(p.antichains().len(), 8);
    }

    #[test]
    fn vee_ideals() {
        assert_eq!(
            elems(&vee().ideals()),
            vec![vec![], vec![1], vec![2], vec![1, 2], vec![1, 2, 3]]
        );
    }

    #[test]
    fn vee_antichains() {
        assert_eq!(
            elems(&vee().antichains()),
            vec![vec![], vec![1], vec![2], vec![3], vec![1, 2]]
        );
    }

    #[test]
    fn chain_antichains_are_empty_and_singletons() {
        let p = Poset::chain(3);
        assert_eq!(
            elems(&p.antichains()),
            vec![vec![], vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn max_elements_examples() {
        let chain = Poset::chain(3);
        let i12 = Subset::from_elems(3, &[1, 2]).unwrap();
        assert_eq!(chain.max_elements(&i12).unwrap().elems(), vec![2]);
        let empty = Subset::empty(3);
        assert!(chain.max_elements(&empty).unwrap().is_empty());
        assert_eq!(vee().max_elements(&i12).unwrap().elems(), vec![1, 2]);
        // {2} is not an ideal of the chain
        let s2 = Subset::from_elems(3, &[2]).unwrap();
        assert_eq!(
            chain.max_elements(&s2),
            Err(Error::NotAnIdeal { subset: vec![2] })
        );
    }

    #[test]
    fn ideal_from_antichain_examples() {
        let chain = Poset::chain(3);
        let a2 = Subset::from_elems(3, &[2]).unwrap();
        assert_eq!(chain.ideal_from_antichain(&a2).unwrap().elems(), vec![1, 2]);
        assert!(chain.ideal_from_antichain(&Subset::empty(3)).unwrap().is_empty());
        let a3 = Subset::from_elems(3, &[3]).unwrap();
        assert_eq!(
            vee().ideal_from_antichain(&a3).unwrap().elems(),
            vec![1, 2, 3]
        );
        let bad = Subset::from_elems(3, &[1, 2]).unwrap();
        assert_eq!(
            chain.ideal_from_antichain(&bad),
            Err(Error::NotAnAntichain { subset: vec![1, 2] })
        );
    }

    #[test]
    fn comparability_graphs() {
        assert_eq!(
            Poset::chain(3).comparability_graph().edges(),
            vec![(1, 2), (1, 3), (2, 3)]
        );
        assert!(Poset::antichain(3).comparability_graph().edges().is_empty());
        assert_eq!(vee().comparability_graph().edges(), vec![(1, 3), (2, 3)]);
    }

    #[test]
    fn cyclic_covers_rejected() {
        assert!(Poset::from_covers(3, &[(1, 2), (2, 3), (3, 1)]).is_err());
        assert!(Poset::from_covers(2, &[(1, 2), (2, 1)]).is_err());
    }

    #[test]
    fn transitive_closure_applied() {
        let p = Poset::from_covers(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(p.leq(1, 3));
        assert_eq!(p.covers(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn json_round_trip() {
        let p = vee();
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"d":3,"covers":[[1,3],[2,3]]}"#);
        let back: Poset = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn max_elements_inverts_ideal_from_antichain() {
        for p in [vee(), Poset::chain(4), Poset::antichain(4)] {
            let ideals = p.ideals();
            let antichains = p.antichains();
            assert_eq!(ideals.len(), antichains.len());
            for i in &ideals {
                let a = p.max_elements(i).unwrap();
                assert!(p.is_antichain(&a));
                assert_eq!(p.ideal_from_antichain(&a).unwrap(), *i);
            }
        }
    }
}
