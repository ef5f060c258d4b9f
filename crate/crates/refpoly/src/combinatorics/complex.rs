//! Simplicial complexes on `{1..d}` with flag detection.

use std::collections::HashSet;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{check_ground_set, SimpleGraph, Subset};
use crate::{Error, Result};

/// A simplicial complex: a downward-closed face set containing the empty set
/// and every singleton of the ground set. The singleton requirement keeps the
/// associated polytope full-dimensional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    d: usize,
    faces: Vec<Subset>,
    membership: HashSet<u32>,
}

impl SimplicialComplex {
    /// Builds the downward closure of the given facets. Every ground-set
    /// element must appear in some facet.
    pub fn from_facets(d: usize, facets: &[Vec<usize>]) -> Result<Self> {
        check_ground_set(d)?;
        let mut membership: HashSet<u32> = HashSet::new();
        membership.insert(0);
        for f in facets {
            let top = Subset::from_elems(d, f)?;
            // close downward by enumerating submasks
            let bits = top.bits();
            let mut sub = bits;
            loop {
                membership.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        Self::from_membership(d, membership)
    }

    /// Builds a complex from an explicit face list, validating closure.
    pub fn from_faces(d: usize, faces: &[Vec<usize>]) -> Result<Self> {
        check_ground_set(d)?;
        let mut membership: HashSet<u32> = HashSet::new();
        for f in faces {
            membership.insert(Subset::from_elems(d, f)?.bits());
        }
        if !membership.contains(&0) {
            return Err(Error::InvalidInput(
                "complex must contain the empty face".into(),
            ));
        }
        for &bits in &membership {
            let mut rest = bits;
            while rest != 0 {
                let j = rest.trailing_zeros();
                rest &= rest - 1;
                if !membership.contains(&(bits & !(1 << j))) {
                    return Err(Error::InvalidInput(format!(
                        "complex is not downward closed at face {:?}",
                        Subset::from_bits(d, bits).elems()
                    )));
                }
            }
        }
        Self::from_membership(d, membership)
    }

    /// Trusted constructor for internally generated face sets (stable sets).
    pub(crate) fn from_faces_unchecked(d: usize, faces: Vec<Subset>) -> Self {
        let membership = faces.iter().map(Subset::bits).collect();
        Self::from_membership(d, membership).expect("internal face sets contain all singletons")
    }

    fn from_membership(d: usize, membership: HashSet<u32>) -> Result<Self> {
        for v in 0..d {
            if !membership.contains(&(1 << v)) {
                return Err(Error::InvalidInput(format!(
                    "complex is missing singleton {{{}}}",
                    v + 1
                )));
            }
        }
        let mut faces: Vec<Subset> = membership
            .iter()
            .map(|&bits| Subset::from_bits(d, bits))
            .collect();
        faces.sort();
        Ok(SimplicialComplex {
            d,
            faces,
            membership,
        })
    }

    /// The full simplex (power set) on `{1..d}`.
    pub fn full_simplex(d: usize) -> Result<Self> {
        Self::from_facets(d, &[(1..=d).collect()])
    }

    pub fn ground_set_size(&self) -> usize {
        self.d
    }

    /// Faces sorted by (cardinality, lexicographic elements).
    pub fn faces(&self) -> &[Subset] {
        &self.faces
    }

    pub fn is_face(&self, s: &Subset) -> bool {
        self.membership.contains(&s.bits())
    }

    /// Maximal faces, sorted.
    pub fn facets(&self) -> Vec<Subset> {
        self.faces
            .iter()
            .filter(|f| {
                (1..=self.d).all(|e| f.contains(e) || !self.is_face(&f.with(e)))
            })
            .copied()
            .collect()
    }

    /// Minimal nonfaces: nonfaces whose proper subsets are all faces. Sorted.
    pub fn minimal_nonfaces(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = (0..(1u32 << self.d))
            .filter(|bits| !self.membership.contains(bits))
            .map(|bits| Subset::from_bits(self.d, bits))
            .filter(|s| s.elems().iter().all(|&e| self.is_face(&s.without(e))))
            .collect();
        out.sort();
        out
    }

    /// Whether every minimal nonface is an edge; otherwise the first larger
    /// minimal nonface is returned as a witness.
    pub fn is_flag(&self) -> (bool, Option<Subset>) {
        match self.minimal_nonfaces().into_iter().find(|s| s.card() >= 3) {
            Some(witness) => (false, Some(witness)),
            None => (true, None),
        }
    }

    /// For a flag complex, the graph whose stable sets reproduce the complex.
    pub fn graph_from_flag_complex(&self) -> Result<SimpleGraph> {
        let (flag, witness) = self.is_flag();
        if !flag {
            return Err(Error::FlagViolation {
                witness: witness.expect("witness accompanies a flag violation").elems(),
            });
        }
        let edges: Vec<(usize, usize)> = self
            .minimal_nonfaces()
            .iter()
            .map(|s| {
                let e = s.elems();
                (e[0], e[1])
            })
            .collect();
        SimpleGraph::from_edges(self.d, &edges)
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    d: usize,
    facets: Vec<Vec<usize>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexJson {
            d: self.d,
            facets: self.facets().iter().map(Subset::elems).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = ComplexJson::deserialize(deserializer)?;
        SimplicialComplex::from_facets(raw.d, &raw.facets).map_err(D::Error::custom)
    }
}

/// Boundary of the triangle: all proper subsets of `{1,2,3}`.
pub fn triangle_boundary() -> SimplicialComplex {
    SimplicialComplex::from_facets(3, &[vec![1, 2], vec![1, 3], vec![2, 3]])
        .expect("triangle boundary")
}
