//! Exact facet enumeration for full-dimensional lattice polytopes.
//!
//! The facets of `conv(points)` are the extreme rays of the dual cone
//! `C* = { y : y . (1, p) >= 0 for all points p }`, computed with the
//! incremental double description method: start from a simplicial cone given
//! by d+1 affinely independent points, insert the remaining points one at a
//! time, and keep only adjacent positive/negative ray pairs (the combinatorial
//! adjacency test prunes everything whose contact set is too small to span a
//! facet). All arithmetic is arbitrary-precision integer; every ray is reduced
//! to primitive form as soon as it is created.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exact::{self, RatMatrix};
use crate::{Error, Result};

use super::Facet;

/// Bitset over constraint slots, in processing order.
#[derive(Debug, Clone, PartialEq, Eq)]
struct ZeroSet {
    words: Vec<u64>,
}

impl ZeroSet {
    fn new(len: usize) -> Self {
        ZeroSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn is_subset_of(&self, other: &ZeroSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    coords: Vec<BigInt>,
    zeros: ZeroSet,
}

fn content_reduce(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// Enumerates the facets of `conv(points)`. Requires the points to affinely
/// span the ambient space; errors with `NotFullDim` otherwise.
pub fn facet_enumeration(ambient: usize, points: &[Vec<i64>]) -> Result<Vec<Facet>> {
    if points.is_empty() {
        return Err(Error::InvalidInput("empty point set".into()));
    }
    let lift_dim = ambient + 1;
    let lifted: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            std::iter::once(BigInt::from(1))
                .chain(p.iter().map(|&c| BigInt::from(c)))
                .collect()
        })
        .collect();

    // greedy selection of a lifted basis = d+1 affinely independent points
    let mut basis_idx: Vec<usize> = Vec::new();
    let mut chosen: Vec<Vec<BigInt>> = Vec::new();
    for (i, row) in lifted.iter().enumerate() {
        if basis_idx.len() == lift_dim {
            break;
        }
        chosen.push(row.clone());
        if exact::integer_rank(chosen.clone()) == basis_idx.len() + 1 {
            basis_idx.push(i);
        } else {
            chosen.pop();
        }
    }
    if basis_idx.len() < lift_dim {
        return Err(Error::NotFullDim {
            affine: basis_idx.len().saturating_sub(1),
            ambient,
        });
    }

    // processing order: basis first, remaining points in their given order
    let mut order: Vec<usize> = basis_idx.clone();
    order.extend((0..points.len()).filter(|i| !basis_idx.contains(i)));
    let total = order.len();

    // initial rays: primitive columns of the basis inverse
    let basis_rows: Vec<Vec<BigRational>> = basis_idx
        .iter()
        .map(|&i| {
            lifted[i]
                .iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect()
        })
        .collect();
    let inv = exact::invert(&RatMatrix::from_rows(basis_rows)?)
        .expect("basis rows are linearly independent");
    let mut rays: Vec<Ray> = (0..lift_dim)
        .map(|j| {
            let col: Vec<BigRational> = (0..lift_dim).map(|r| inv[r][j].clone()).collect();
            let (coords, _) = exact::primitive_normalize(&col).expect("inverse column is nonzero");
            let mut zeros = ZeroSet::new(total);
            for k in 0..lift_dim {
                if k != j {
                    zeros.set(k);
                }
            }
            Ray { coords, zeros }
        })
        .collect();

    for t in lift_dim..total {
        let c = &lifted[order[t]];
        let signs: Vec<BigInt> = rays.iter().map(|r| dot(c, &r.coords)).collect();
        if signs.iter().all(|s| !s.is_negative()) {
            for (ray, s) in rays.iter_mut().zip(signs.iter()) {
                if s.is_zero() {
                    ray.zeros.set(t);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| signs[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| signs[i].is_negative()).collect();

        let mut new_rays: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.intersect(&rays[n].zeros);
                // a 2-face needs at least lift_dim - 2 tight constraints
                if common.count() + 2 < lift_dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == n || !common.is_subset_of(&r.zeros));
                if !adjacent {
                    continue;
                }
                let sp = &signs[p];
                let sn = &signs[n];
                let mut coords: Vec<BigInt> = rays[n]
                    .coords
                    .iter()
                    .zip(rays[p].coords.iter())
                    .map(|(nc, pc)| sp * nc - sn * pc)
                    .collect();
                content_reduce(&mut coords);
                let mut zeros = common;
                zeros.set(t);
                new_rays.push(Ray { coords, zeros });
            }
        }

        let mut kept: Vec<Ray> = Vec::new();
        for (i, ray) in rays.into_iter().enumerate() {
            if signs[i].is_negative() {
                continue;
            }
            let mut ray = ray;
            if signs[i].is_zero() {
                ray.zeros.set(t);
            }
            kept.push(ray);
        }
        kept.extend(new_rays);
        rays = kept;
    }

    let mut facets: Vec<Facet> = rays
        .into_iter()
        .map(|ray| {
            let to_i64 = |v: &BigInt| -> Result<i64> {
                i64::try_from(v).map_err(|_| Error::Overflow("storing facet coefficients".into()))
            };
            let rhs = to_i64(&ray.coords[0])?;
            let normal: Vec<i64> = ray.coords[1..]
                .iter()
                .map(|v| to_i64(&(-v)))
                .collect::<Result<_>>()?;
            Ok(Facet { normal, rhs })
        })
        .collect::<Result<_>>()?;
    facets.sort_by(|x, y| x.normal.cmp(&y.normal).then(x.rhs.cmp(&y.rhs)));
    facets.dedup();
    Ok(facets)
}

/// Checks an H-representation against the generating points: every point must
/// satisfy every inequality, every facet must be tight on an affinely
/// (d-1)-dimensional set of points, and normals must be primitive.
pub fn validate_hrep(ambient: usize, points: &[Vec<i64>], facets: &[Facet]) -> Result<()> {
    for f in facets {
        let mut g: i64 = 0;
        for &c in &f.normal {
            g = num_integer::gcd(g, c);
        }
        if g != 1 {
            return Err(Error::InvalidInput(format!(
                "facet normal {:?} is not primitive",
                f.normal
            )));
        }
        let mut tight: Vec<Vec<i64>> = Vec::new();
        for p in points {
            let v: i128 = f
                .normal
                .iter()
                .zip(p.iter())
                .map(|(&a, &x)| a as i128 * x as i128)
                .sum();
            if v > f.rhs as i128 {
                return Err(Error::InvalidInput(format!(
                    "point {p:?} violates facet {:?} <= {}",
                    f.normal, f.rhs
                )));
            }
            if v == f.rhs as i128 {
                tight.push(p.clone());
            }
        }
        let contact_dim = exact::affine_dim_int(&tight);
        if tight.is_empty() || contact_dim != ambient - 1 {
            return Err(Error::InvalidInput(format!(
                "inequality {:?} <= {} has contact dimension {} (want {})",
                f.normal,
                f.rhs,
                contact_dim,
                ambient - 1
            )));
        }
    }
    Ok(())
}
