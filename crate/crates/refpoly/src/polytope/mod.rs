//! Lattice polytopes from posets, graphs and complexes, with exact facet data.

mod hull;

pub use hull::{facet_enumeration, validate_hrep};

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{Poset, SimpleGraph, SimplicialComplex};
use crate::exact::{self, BigRat};
use crate::{Error, Result};

/// One facet inequality `normal . x <= rhs` with a primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    #[serde(rename = "a")]
    pub normal: Vec<i64>,
    #[serde(rename = "b")]
    pub rhs: i64,
}

impl Facet {
    /// Evaluates `normal . x` exactly in 128-bit arithmetic.
    pub fn eval(&self, x: &[i64]) -> i128 {
        self.normal
            .iter()
            .zip(x.iter())
            .map(|(&a, &v)| a as i128 * v as i128)
            .sum()
    }
}

/// Facet description of a full-dimensional polytope. Inequalities are
/// facet-defining, deduplicated, and sorted, so equal polytopes produce
/// identical representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    ambient: usize,
    facets: Vec<Facet>,
}

impl HRep {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Membership of a rational point.
    pub fn contains(&self, x: &[BigRat]) -> bool {
        self.facets.iter().all(|f| {
            let lhs: BigRat = f
                .normal
                .iter()
                .zip(x.iter())
                .map(|(&a, v)| BigRat::from_integer(BigInt::from(a)) * v)
                .sum();
            lhs <= BigRat::from_integer(BigInt::from(f.rhs))
        })
    }

    /// Membership of an integer point in the `n`-th dilate.
    pub fn contains_dilated(&self, x: &[i64], n: i64) -> bool {
        self.facets
            .iter()
            .all(|f| f.eval(x) <= f.rhs as i128 * n as i128)
    }
}

#[derive(Serialize, Deserialize)]
struct HRepJson {
    facets: Vec<Facet>,
}

impl Serialize for HRep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        HRepJson {
            facets: self.facets.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HRep {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = HRepJson::deserialize(deserializer)?;
        let Some(first) = raw.facets.first() else {
            return Err(D::Error::custom("facet list must be nonempty"));
        };
        let ambient = first.normal.len();
        if raw.facets.iter().any(|f| f.normal.len() != ambient) {
            return Err(D::Error::custom("facet normals of mixed dimension"));
        }
        Ok(HRep {
            ambient,
            facets: raw.facets,
        })
    }
}

/// A lattice polytope given by generating points (not necessarily vertices).
/// The facet representation is computed on first use and memoized.
#[derive(Debug)]
pub struct LatticePolytope {
    ambient: usize,
    points: Vec<Vec<i64>>,
    hrep: OnceLock<Result<HRep>>,
}

impl Clone for LatticePolytope {
    fn clone(&self) -> Self {
        let hrep = OnceLock::new();
        if let Some(v) = self.hrep.get() {
            let _ = hrep.set(v.clone());
        }
        LatticePolytope {
            ambient: self.ambient,
            points: self.points.clone(),
            hrep,
        }
    }
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.points == other.points
    }
}

impl Eq for LatticePolytope {}

impl LatticePolytope {
    /// Builds a polytope from generating points; deduplicates and sorts them.
    pub fn new(ambient: usize, mut points: Vec<Vec<i64>>) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::InvalidInput("ambient dimension must be positive".into()));
        }
        if points.is_empty() {
            return Err(Error::InvalidInput("empty point set".into()));
        }
        if points.iter().any(|p| p.len() != ambient) {
            return Err(Error::InvalidInput(format!(
                "every point must have {ambient} coordinates"
            )));
        }
        points.sort();
        points.dedup();
        Ok(LatticePolytope {
            ambient,
            points,
            hrep: OnceLock::new(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Generating points, sorted lexicographically.
    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    /// Affine dimension of the generating points.
    pub fn affine_dim(&self) -> usize {
        exact::affine_dim_int(&self.points)
    }

    /// Facet representation, computed once and cached (thread-safe).
    pub fn facets(&self) -> Result<&HRep> {
        self.hrep
            .get_or_init(|| {
                facet_enumeration(self.ambient, &self.points).map(|facets| HRep {
                    ambient: self.ambient,
                    facets,
                })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Decides reflexivity: the origin must be interior and every facet must
    /// have right-hand side exactly 1. A failing facet (with its contact
    /// points) is returned as the witness.
    pub fn is_reflexive(&self) -> Result<ReflexivityReport> {
        let hrep = self.facets()?;
        for f in hrep.facets() {
            if f.rhs <= 0 {
                return Err(Error::OriginNotInterior {
                    facet: f.normal.clone(),
                    rhs: f.rhs,
                });
            }
        }
        let witness = hrep.facets().iter().find(|f| f.rhs >= 2).map(|f| {
            let contact = self
                .points
                .iter()
                .filter(|p| f.eval(p) == f.rhs as i128)
                .cloned()
                .collect();
            ReflexivityWitness {
                facet: f.clone(),
                contact,
            }
        });
        Ok(ReflexivityReport {
            reflexive: witness.is_none(),
            witness,
        })
    }

    /// Vertices of the dual polytope, as exact rationals `a / b` per facet.
    /// Requires the origin to be interior.
    pub fn dual_polytope(&self) -> Result<Vec<Vec<BigRat>>> {
        let hrep = self.facets()?;
        hrep.facets()
            .iter()
            .map(|f| {
                if f.rhs <= 0 {
                    return Err(Error::OriginNotInterior {
                        facet: f.normal.clone(),
                        rhs: f.rhs,
                    });
                }
                Ok(f.normal
                    .iter()
                    .map(|&a| BigRational::new(BigInt::from(a), BigInt::from(f.rhs)))
                    .collect())
            })
            .collect()
    }
}

/// Verdict of the reflexivity test; `witness` is present exactly when false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflexivityReport {
    pub reflexive: bool,
    pub witness: Option<ReflexivityWitness>,
}

/// A facet with right-hand side at least 2, plus the generating points lying
/// on it; scaling the inequality to `a . x <= 1` makes the dual vertex
/// `a / rhs` non-integral.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflexivityWitness {
    pub facet: Facet,
    pub contact: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct PolytopeJson {
    ambient_dim: usize,
    points: Vec<Vec<i64>>,
}

impl Serialize for LatticePolytope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeJson {
            ambient_dim: self.ambient,
            points: self.points.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LatticePolytope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolytopeJson::deserialize(deserializer)?;
        LatticePolytope::new(raw.ambient_dim, raw.points).map_err(D::Error::custom)
    }
}

/// Order polytope: convex hull of the indicator vectors of order ideals.
pub fn order_polytope(p: &Poset) -> LatticePolytope {
    let points = p.ideals().iter().map(|s| s.indicator()).collect();
    let q = LatticePolytope::new(p.ground_set_size(), points).expect("ideal indicators");
    debug_assert_eq!(q.affine_dim(), q.ambient_dim());
    q
}

/// Chain polytope: convex hull of the indicator vectors of antichains.
pub fn chain_polytope(p: &Poset) -> LatticePolytope {
    let points = p.antichains().iter().map(|s| s.indicator()).collect();
    let q = LatticePolytope::new(p.ground_set_size(), points).expect("antichain indicators");
    debug_assert_eq!(q.affine_dim(), q.ambient_dim());
    q
}

/// Polytope of a simplicial complex: convex hull of the face indicators.
pub fn complex_polytope(c: &SimplicialComplex) -> LatticePolytope {
    let points = c.faces().iter().map(|s| s.indicator()).collect();
    let q = LatticePolytope::new(c.ground_set_size(), points).expect("face indicators");
    debug_assert_eq!(q.affine_dim(), q.ambient_dim());
    q
}

/// Stable set polytope: the complex polytope of the stable sets of the graph.
pub fn stable_set_polytope(g: &SimpleGraph) -> LatticePolytope {
    complex_polytope(&g.stable_sets())
}

/// `conv(a ∪ -b)` in the shared ambient dimension.
pub fn gamma(a: &LatticePolytope, b: &LatticePolytope) -> Result<LatticePolytope> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            left: a.ambient_dim(),
            right: b.ambient_dim(),
        });
    }
    let mut points = a.points().to_vec();
    points.extend(b.points().iter().map(|p| p.iter().map(|&c| -c).collect()));
    LatticePolytope::new(a.ambient_dim(), points)
}

/// `conv((a × {1}) ∪ (-b × {-1}))`, one dimension up.
pub fn omega(a: &LatticePolytope, b: &LatticePolytope) -> Result<LatticePolytope> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            left: a.ambient_dim(),
            right: b.ambient_dim(),
        });
    }
    let mut points: Vec<Vec<i64>> = a
        .points()
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.push(1);
            q
        })
        .collect();
    points.extend(b.points().iter().map(|p| {
        let mut q: Vec<i64> = p.iter().map(|&c| -c).collect();
        q.push(-1);
        q
    }));
    LatticePolytope::new(a.ambient_dim() + 1, points)
}
