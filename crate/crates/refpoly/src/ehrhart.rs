//! Lattice point counts, the δ-polynomial, and integer decomposition.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::limits::DEFAULT_BOX_BUDGET;
use crate::polytope::{HRep, LatticePolytope};
use crate::{Error, Result};

/// All lattice points of the `n`-th dilate, in lexicographic order.
///
/// Enumeration walks the bounding box coordinate by coordinate and prunes a
/// prefix as soon as no completion can satisfy some facet inequality. The box
/// volume is checked against `budget` first so a degenerate call fails fast
/// instead of spinning.
pub fn lattice_points_with_budget(
    poly: &LatticePolytope,
    n: i64,
    budget: u128,
) -> Result<Vec<Vec<i64>>> {
    if n < 1 {
        return Err(Error::InvalidInput("dilation factor must be positive".into()));
    }
    let hrep = poly.facets()?;
    let d = poly.ambient_dim();
    let mut lo = vec![i64::MAX; d];
    let mut hi = vec![i64::MIN; d];
    for p in poly.points() {
        for i in 0..d {
            lo[i] = lo[i].min(p[i] * n);
            hi[i] = hi[i].max(p[i] * n);
        }
    }
    let mut volume: u128 = 1;
    for i in 0..d {
        let width = (hi[i] - lo[i]) as u128 + 1;
        volume = volume.saturating_mul(width);
        if volume > budget {
            return Err(Error::SizeLimit {
                what: "lattice point bounding box",
                required: volume,
                limit: budget,
            });
        }
    }

    // slack[f] = n * rhs - (partial inner product); spare[f][k] = largest
    // possible contribution of coordinates k.. to facet f within the box
    let facets = hrep.facets();
    let mut spare = vec![vec![0i128; d + 1]; facets.len()];
    for (fi, f) in facets.iter().enumerate() {
        for k in (0..d).rev() {
            let a = f.normal[k] as i128;
            let best = (a * lo[k] as i128).max(a * hi[k] as i128);
            spare[fi][k] = spare[fi][k + 1] + best;
        }
    }

    let mut out = Vec::new();
    let mut point = vec![0i64; d];
    let mut slack: Vec<i128> = facets.iter().map(|f| f.rhs as i128 * n as i128).collect();
    descend(0, d, &lo, &hi, hrep, &spare, &mut slack, &mut point, &mut out);
    Ok(out)
}

fn descend(
    k: usize,
    d: usize,
    lo: &[i64],
    hi: &[i64],
    hrep: &HRep,
    spare: &[Vec<i128>],
    slack: &mut [i128],
    point: &mut [i64],
    out: &mut Vec<Vec<i64>>,
) {
    if k == d {
        out.push(point.to_vec());
        return;
    }
    for v in lo[k]..=hi[k] {
        point[k] = v;
        let mut feasible = true;
        for (fi, f) in hrep.facets().iter().enumerate() {
            slack[fi] -= f.normal[k] as i128 * v as i128;
            if slack[fi] + spare[fi][k + 1] < 0 {
                feasible = false;
            }
        }
        if feasible {
            descend(k + 1, d, lo, hi, hrep, spare, slack, point, out);
        }
        for (fi, f) in hrep.facets().iter().enumerate() {
            slack[fi] += f.normal[k] as i128 * v as i128;
        }
    }
}

/// [`lattice_points_with_budget`] with the default budget.
pub fn lattice_points(poly: &LatticePolytope, n: i64) -> Result<Vec<Vec<i64>>> {
    lattice_points_with_budget(poly, n, DEFAULT_BOX_BUDGET)
}

/// Slow second opinion used in tests: scan the whole bounding box and test
/// each point against every inequality, with no pruning shortcuts.
pub mod oracle {
    use super::*;

    pub fn count_via_scan(poly: &LatticePolytope, n: i64) -> Result<u128> {
        let hrep = poly.facets()?;
        let d = poly.ambient_dim();
        let mut lo = vec![i64::MAX; d];
        let mut hi = vec![i64::MIN; d];
        for p in poly.points() {
            for i in 0..d {
                lo[i] = lo[i].min(p[i] * n);
                hi[i] = hi[i].max(p[i] * n);
            }
        }
        let mut count = 0u128;
        let mut point = vec![0i64; d];
        scan(0, d, &lo, &hi, hrep, n, &mut point, &mut count);
        Ok(count)
    }

    fn scan(
        k: usize,
        d: usize,
        lo: &[i64],
        hi: &[i64],
        hrep: &HRep,
        n: i64,
        point: &mut [i64],
        count: &mut u128,
    ) {
        if k == d {
            let inside = hrep.facets().iter().all(|f| {
                let lhs: BigInt = f
                    .normal
                    .iter()
                    .zip(point.iter())
                    .map(|(&a, &v)| BigInt::from(a) * BigInt::from(v))
                    .sum();
                lhs <= BigInt::from(f.rhs) * BigInt::from(n)
            });
            if inside {
                *count += 1;
            }
            return;
        }
        for v in lo[k]..=hi[k] {
            point[k] = v;
            scan(k + 1, d, lo, hi, hrep, n, point, count);
        }
    }
}

/// The δ-polynomial (Ehrhart h*-vector) of a full-dimensional lattice
/// polytope, stored with exactly `dim + 1` coefficients including trailing
/// zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaPolynomial {
    coeffs: Vec<BigInt>,
}

impl DeltaPolynomial {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty());
        DeltaPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Index of the last nonzero coefficient.
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Sum of the coefficients.
    pub fn normalized_volume(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Symmetry over the full coefficient range `0..=dim`. For a
    /// full-dimensional lattice polytope containing the origin in its
    /// interior this holds if and only if the polytope is reflexive.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Multiplication by `1 + λ`, raising the length by one.
    pub fn times_one_plus_lambda(&self) -> DeltaPolynomial {
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
            out[i + 1] += c;
        }
        DeltaPolynomial { coeffs: out }
    }
}

impl Serialize for DeltaPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let small: Option<Vec<u64>> = self.coeffs.iter().map(|c| c.to_u64()).collect();
        match small {
            Some(v) => v.serialize(serializer),
            None => Err(serde::ser::Error::custom("coefficient exceeds u64")),
        }
    }
}

impl<'de> Deserialize<'de> for DeltaPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<u64>::deserialize(deserializer)?;
        if raw.is_empty() {
            return Err(D::Error::custom("coefficient list must be nonempty"));
        }
        Ok(DeltaPolynomial {
            coeffs: raw.into_iter().map(BigInt::from).collect(),
        })
    }
}

/// Computes the δ-polynomial from the counts `L(1), ..., L(dim)` via the
/// inverse binomial transform
/// `δ_i = Σ_{j=0}^{i} (-1)^{i-j} C(dim+1, i-j) L(j)` with `L(0) = 1`.
pub fn delta_polynomial_with_budget(
    poly: &LatticePolytope,
    budget: u128,
) -> Result<DeltaPolynomial> {
    let d = poly.ambient_dim();
    poly.facets()?; // rejects degenerate input before any counting
    let mut counts: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=d as i64 {
        counts.push(BigInt::from(
            lattice_points_with_budget(poly, n, budget)?.len(),
        ));
    }
    let binom = binomial_row(d + 1);
    let mut coeffs = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut acc = BigInt::zero();
        for j in 0..=i {
            let term = &binom[i - j] * &counts[j];
            if (i - j) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        coeffs.push(acc);
    }
    assert!(coeffs[0].is_one(), "delta transform lost the empty dilate");
    assert!(
        coeffs.iter().all(|c| !c.is_negative()),
        "negative delta coefficient; lattice point counts are inconsistent"
    );
    Ok(DeltaPolynomial { coeffs })
}

/// [`delta_polynomial_with_budget`] with the default budget.
pub fn delta_polynomial(poly: &LatticePolytope) -> Result<DeltaPolynomial> {
    delta_polynomial_with_budget(poly, DEFAULT_BOX_BUDGET)
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 1..=n {
        let next = &row[k - 1] * BigInt::from(n - k + 1) / BigInt::from(k);
        row.push(next);
    }
    row
}

/// Outcome of the integer decomposition test. `witness` is a point of some
/// dilate that is not a sum of that many lattice points of the polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdpReport {
    pub idp: bool,
    pub witness: Option<IdpWitness>,
    pub checked_heights: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdpWitness {
    pub n: i64,
    pub point: Vec<i64>,
}

/// Searches for a representation of `target` as a sum of `count` lattice
/// points of the polytope. Candidates are tried largest coordinate sum first
/// and failed `(remainder, count)` states are memoized, so repeated queries
/// against the same polytope stay cheap.
pub struct Decomposer<'a> {
    hrep: &'a HRep,
    candidates: Vec<Vec<i64>>,
    dead: HashSet<(Vec<i64>, i64)>,
}

impl<'a> Decomposer<'a> {
    pub fn new(poly: &'a LatticePolytope, budget: u128) -> Result<Self> {
        let mut candidates = lattice_points_with_budget(poly, 1, budget)?;
        candidates.sort_by_key(|p| {
            let s: i64 = p.iter().sum();
            (std::cmp::Reverse(s), p.clone())
        });
        Ok(Decomposer {
            hrep: poly.facets()?,
            candidates,
            dead: HashSet::new(),
        })
    }

    /// Lattice points of the first dilate, in search order.
    pub fn candidates(&self) -> &[Vec<i64>] {
        &self.candidates
    }

    pub fn decompose(&mut self, target: &[i64], count: i64) -> Option<Vec<Vec<i64>>> {
        let mut parts = Vec::with_capacity(count as usize);
        if self.search(target.to_vec(), count, &mut parts) {
            parts.reverse();
            Some(parts)
        } else {
            None
        }
    }

    fn search(&mut self, remaining: Vec<i64>, count: i64, parts: &mut Vec<Vec<i64>>) -> bool {
        if !self.hrep.contains_dilated(&remaining, count) {
            return false;
        }
        if count == 1 {
            parts.push(remaining);
            return true;
        }
        let key = (remaining, count);
        if self.dead.contains(&key) {
            return false;
        }
        let (remaining, _) = (&key.0, key.1);
        for idx in 0..self.candidates.len() {
            let rest: Vec<i64> = remaining
                .iter()
                .zip(self.candidates[idx].iter())
                .map(|(&r, &c)| r - c)
                .collect();
            if self.search(rest, count - 1, parts) {
                parts.push(self.candidates[idx].clone());
                return true;
            }
        }
        self.dead.insert(key);
        false
    }
}

/// Expresses `point` as a sum of `n` lattice points of the polytope, or
/// reports that no such sum exists. Membership in the `n`-th dilate is a
/// precondition and its failure is an error, not a `None`.
pub fn decompose(
    poly: &LatticePolytope,
    point: &[i64],
    n: i64,
) -> Result<Option<Vec<Vec<i64>>>> {
    if n < 1 || point.len() != poly.ambient_dim() {
        return Err(Error::InvalidInput(
            "need a point of the ambient lattice and a positive height".into(),
        ));
    }
    let hrep = poly.facets()?;
    if !hrep.contains_dilated(point, n) {
        return Err(Error::NotMember {
            point: point.to_vec(),
            n: n as usize,
        });
    }
    let mut dec = Decomposer::new(poly, DEFAULT_BOX_BUDGET)?;
    Ok(dec.decompose(point, n))
}

/// Decides the integer decomposition property.
///
/// Heights `2..=max(2, dim - 1)` are exhaustive: a dilate `nQ` with
/// `n >= dim - 1` always splits off a copy of `Q`, so any failure must
/// already appear below that bound. `extra_heights` can widen the sweep for
/// demonstration purposes.
pub fn is_idp_with(
    poly: &LatticePolytope,
    extra_heights: &[i64],
    budget: u128,
) -> Result<IdpReport> {
    let d = poly.ambient_dim();
    poly.facets()?;
    let top = std::cmp::max(2, d as i64 - 1);
    let mut heights: Vec<i64> = (2..=top).collect();
    for &h in extra_heights {
        if h >= 2 && !heights.contains(&h) {
            heights.push(h);
        }
    }
    heights.sort();
    let mut dec = Decomposer::new(poly, budget)?;
    for &n in &heights {
        for z in lattice_points_with_budget(poly, n, budget)? {
            if dec.decompose(&z, n).is_none() {
                return Ok(IdpReport {
                    idp: false,
                    witness: Some(IdpWitness { n, point: z }),
                    checked_heights: heights,
                });
            }
        }
    }
    Ok(IdpReport {
        idp: true,
        witness: None,
        checked_heights: heights,
    })
}

/// [`is_idp_with`] with no extra heights and the default budget.
pub fn is_idp(poly: &LatticePolytope) -> Result<IdpReport> {
    is_idp_with(poly, &[], DEFAULT_BOX_BUDGET)
}

fn indicator_sum(elems: &[usize], d: usize, last: i64) -> Vec<i64> {
    let mut v = vec![0i64; d + 1];
    for &e in elems {
        assert!(
            (1..=d).contains(&e),
            "witness support must lie in the ground set"
        );
        v[e - 1] = -1;
    }
    v[d] = last;
    v
}

/// Height 2 point of the lifted construction over a complex with minimal
/// nonface `nonface`: minus the indicator of the nonface, with last
/// coordinate -1.
pub fn nonflag_witness(nonface: &[usize], d: usize) -> Vec<i64> {
    assert!(nonface.len() >= 3, "a minimal nonface witness has size >= 3");
    indicator_sum(nonface, d, -1)
}

/// Height 3 point of the lifted construction over a graph with an odd hole:
/// minus the indicator of the hole, with last coordinate -2.
pub fn odd_hole_witness(cycle: &[usize], d: usize) -> Vec<i64> {
    assert!(cycle.len() >= 5 && cycle.len() % 2 == 1, "odd hole length");
    indicator_sum(cycle, d, -2)
}

/// Height `l + 1` point of the lifted construction over a graph whose
/// complement has the odd hole `cycle` of length `2l + 1`: minus the
/// indicator of the hole, with last coordinate `-l`.
pub fn antihole_witness_on(cycle: &[usize], d: usize) -> Vec<i64> {
    assert!(cycle.len() >= 5 && cycle.len() % 2 == 1, "odd antihole length");
    let l = (cycle.len() as i64 - 1) / 2;
    indicator_sum(cycle, d, -l)
}

/// [`antihole_witness_on`] for the hole `1, ..., 2l + 1` on the first
/// vertices of a ground set of size `d`.
pub fn antihole_witness(l: usize, d: usize) -> Vec<i64> {
    let cycle: Vec<usize> = (1..=2 * l + 1).collect();
    antihole_witness_on(&cycle, d)
}

/// Memoized per-dilate lattice point counts for one polytope, used where the
/// same counts feed several checks.
pub struct CountCache<'a> {
    poly: &'a LatticePolytope,
    budget: u128,
    counts: HashMap<i64, u128>,
}

impl<'a> CountCache<'a> {
    pub fn new(poly: &'a LatticePolytope, budget: u128) -> Self {
        CountCache {
            poly,
            budget,
            counts: HashMap::new(),
        }
    }

    pub fn count(&mut self, n: i64) -> Result<u128> {
        if let Some(&c) = self.counts.get(&n) {
            return Ok(c);
        }
        let c = lattice_points_with_budget(self.poly, n, self.budget)?.len() as u128;
        self.counts.insert(n, c);
        Ok(c)
    }
}
