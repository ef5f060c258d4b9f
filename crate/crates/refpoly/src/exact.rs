//! Exact rational linear algebra: ranks, affine spans, primitive normal forms.
//!
//! Everything here is arbitrary precision. Rank computations clear denominators
//! row by row and then run fraction-free (Bareiss) elimination over integers, so
//! no intermediate rounding or overflow is possible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type BigRat = BigRational;

/// Dense rational matrix with explicit dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRat>,
}

impl RatMatrix {
    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<BigRat>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(RatMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        RatMatrix {
            rows: rows.len(),
            cols: rows.first().map_or(0, Vec::len),
            data: rows
                .iter()
                .flatten()
                .map(|&v| BigRat::from_integer(BigInt::from(v)))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRat {
        &self.data[r * self.cols + c]
    }

    fn row(&self, r: usize) -> &[BigRat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Exact rank via fraction-free elimination.
    pub fn rank(&self) -> usize {
        let int_rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| clear_denominators(self.row(r)))
            .collect();
        integer_rank(int_rows)
    }
}

/// Scales a rational row by the lcm of its denominators; preserves the row space.
fn clear_denominators(row: &[BigRat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in row {
        lcm = lcm.lcm(v.denom());
    }
    row.iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect()
}

/// Rank of an integer matrix by Bareiss fraction-free elimination.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut col = 0;
    while rank < rows && col < cols {
        let pivot_row = (rank..rows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot_row else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let t = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = &t / &prev; // exact by the Bareiss identity
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}

/// Affine dimension of a point set plus an exact basis for the span of
/// differences from the first point. Returns `(0, [])` for a single point.
pub fn solve_affine_span(points: &[Vec<BigRat>]) -> Result<(usize, Vec<Vec<BigRat>>)> {
    let Some(first) = points.first() else {
        return Err(Error::InvalidInput("affine span of an empty set".into()));
    };
    let cols = first.len();
    if points.iter().any(|p| p.len() != cols) {
        return Err(Error::InvalidInput("points of mixed dimension".into()));
    }
    let mut basis: Vec<Vec<BigRat>> = Vec::new();
    for p in &points[1..] {
        let mut diff: Vec<BigRat> = p
            .iter()
            .zip(first.iter())
            .map(|(a, b)| a - b)
            .collect();
        reduce_against(&mut diff, &basis);
        if let Some(lead) = diff.iter().position(|v| !v.is_zero()) {
            let pivot = diff[lead].clone();
            for v in &mut diff {
                *v /= pivot.clone();
            }
            basis.push(diff);
            basis.sort_by_key(|row| row.iter().position(|v| !v.is_zero()));
            if basis.len() == cols {
                break;
            }
        }
    }
    Ok((basis.len(), basis))
}

/// Affine dimension of integer points (convenience wrapper).
pub fn affine_dim_int(points: &[Vec<i64>]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let first = &points[0];
    let diffs: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(first.iter())
                .map(|(a, b)| BigInt::from(a - b))
                .collect()
        })
        .collect();
    integer_rank(diffs)
}

fn reduce_against(row: &mut [BigRat], basis: &[Vec<BigRat>]) {
    for b in basis {
        let lead = b.iter().position(|v| !v.is_zero()).expect("nonzero basis row");
        if !row[lead].is_zero() {
            let f = row[lead].clone();
            for (rv, bv) in row.iter_mut().zip(b.iter()) {
                *rv -= &f * bv;
            }
        }
    }
}

/// Writes `v = c * w` with `w` a primitive integer vector and `c > 0` rational.
/// Errors on the zero vector.
pub fn primitive_normalize(v: &[BigRat]) -> Result<(Vec<BigInt>, BigRat)> {
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let ints = clear_denominators(v);
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    let w: Vec<BigInt> = ints.iter().map(|x| x / &gcd).collect();
    // v = (gcd / lcm) * w, and gcd > 0 by construction of num_integer::gcd
    let c = BigRat::new(gcd, lcm);
    debug_assert!(c.is_positive());
    Ok((w, c))
}

/// Primitive form of an integer vector (divide by the gcd of the entries).
pub fn primitive_int(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut gcd = BigInt::zero();
    for x in v {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &gcd).collect())
}

/// Exact inverse via Gauss-Jordan elimination; `None` when singular.
pub fn invert(m: &RatMatrix) -> Option<Vec<Vec<BigRat>>> {
    let n = m.rows;
    if n != m.cols {
        return None;
    }
    let mut a: Vec<Vec<BigRat>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut inv: Vec<Vec<BigRat>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == c {
                        BigRat::one()
                    } else {
                        BigRat::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let pv = a[col][col].clone();
        for c in 0..n {
            a[col][c] /= pv.clone();
            inv[col][c] /= pv.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let av = &f * &a[col][c];
                    a[r][c] -= av;
                    let iv = &f * &inv[col][c];
                    inv[r][c] -= iv;
                }
            }
        }
    }
    Some(inv)
}

/// Renders a rational as the `"p/q"` string used in JSON reports.
pub fn rat_to_string(r: &BigRat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRat {
        BigRat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rank_identity() {
        let m = RatMatrix::from_int_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn rank_zero_matrix() {
        let m = RatMatrix::from_int_rows(&[vec![0, 0], vec![0, 0]]);
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn rank_dependent_rows() {
        // third row is the sum of the first two
        let m = RatMatrix::from_int_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 2, 1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn affine_span_single_point() {
        let pts = vec![vec![rat(5, 1), rat(7, 1)]];
        let (dim, basis) = solve_affine_span(&pts).unwrap();
        assert_eq!(dim, 0);
        assert!(basis.is_empty());
    }

    #[test]
    fn affine_span_collinear() {
        let pts = vec![
            vec![rat(0, 1), rat(0, 1)],
            vec![rat(1, 1), rat(1, 1)],
            vec![rat(2, 1), rat(2, 1)],
        ];
        let (dim, _) = solve_affine_span(&pts).unwrap();
        assert_eq!(dim, 1);
    }

    #[test]
    fn affine_span_cube() {
        let pts: Vec<Vec<BigRat>> = (0..8u8)
            .map(|m| (0..3).map(|b| rat(((m >> b) & 1) as i64, 1)).collect())
            .collect();
        let (dim, basis) = solve_affine_span(&pts).unwrap();
        assert_eq!(dim, 3);
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn primitive_normalize_examples() {
        let (w, c) = primitive_normalize(&[rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(w, vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(c, rat(1, 2));

        let (w, c) = primitive_normalize(&[rat(2, 1), rat(4, 1)]).unwrap();
        assert_eq!(w, vec![BigInt::from(1), BigInt::from(2)]);
        assert_eq!(c, rat(2, 1));

        let (w, c) = primitive_normalize(&[rat(-2, 3), rat(1, 3), rat(1, 3)]).unwrap();
        assert_eq!(w, vec![BigInt::from(-2), BigInt::from(1), BigInt::from(1)]);
        assert_eq!(c, rat(1, 3));
    }

    #[test]
    fn primitive_normalize_zero_vector() {
        assert_eq!(
            primitive_normalize(&[rat(0, 1), rat(0, 1)]),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn invert_2x2() {
        let m = RatMatrix::from_int_rows(&[vec![2, 1], vec![1, 1]]);
        let inv = invert(&m).unwrap();
        assert_eq!(inv[0], vec![rat(1, 1), rat(-1, 1)]);
        assert_eq!(inv[1], vec![rat(-1, 1), rat(2, 1)]);
    }

    #[test]
    fn rat_string_form() {
        assert_eq!(rat_to_string(&rat(-5, 2)), "-5/2");
        assert_eq!(rat_to_string(&rat(3, 1)), "3/1");
        assert_eq!(rat_to_string(&rat(0, 1)), "0/1");
    }

    proptest! {
        // exactness: round-trip arithmetic has no drift
        #[test]
        fn addition_round_trip(an in -50i64..50, ad in 1i64..20, bn in -50i64..50, bd in 1i64..20) {
            let a = rat(an, ad);
            let b = rat(bn, bd);
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        // normalization is idempotent on already-primitive integer vectors
        #[test]
        fn primitive_idempotent(v in proptest::collection::vec(-20i64..20, 1..6)) {
            prop_assume!(v.iter().any(|&x| x != 0));
            let rats: Vec<BigRat> = v.iter().map(|&x| rat(x, 1)).collect();
            let (w, c) = primitive_normalize(&rats).unwrap();
            let again: Vec<BigRat> = w.iter().map(|x| BigRat::from_integer(x.clone())).collect();
            let (w2, c2) = primitive_normalize(&again).unwrap();
            prop_assert_eq!(&w2, &w);
            prop_assert_eq!(c2, BigRat::one());
            // reconstruct the input exactly
            for (orig, wi) in rats.iter().zip(w.iter()) {
                prop_assert_eq!(orig.clone(), &c * BigRat::from_integer(wi.clone()));
            }
        }

        // rank never exceeds either dimension and matches after row duplication
        #[test]
        fn rank_bounds(rows in proptest::collection::vec(proptest::collection::vec(-9i64..9, 4), 1..5)) {
            let m = RatMatrix::from_int_rows(&rows);
            let r = m.rank();
            prop_assert!(r <= rows.len().min(4));
            let mut doubled = rows.clone();
            doubled.extend(rows.iter().cloned());
            prop_assert_eq!(RatMatrix::from_int_rows(&doubled).rank(), r);
        }
    }
}
