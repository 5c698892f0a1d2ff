//! LLL lattice basis reduction with exact rational Gram-Schmidt data.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::dense::ZMatrix;
use crate::{Error, Result};

struct GramSchmidt {
    /// mu[i][j] for j < i
    mu: Vec<Vec<BigRational>>,
    /// squared norms of the orthogonalized vectors
    norms: Vec<BigRational>,
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

fn gram_schmidt(b: &[Vec<BigInt>]) -> GramSchmidt {
    let n = b.len();
    let rat: Vec<Vec<BigRational>> =
        b.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    let mut norms = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = rat[i].clone();
        for j in 0..i {
            if norms[j] == BigRational::zero() {
                continue;
            }
            let m: BigRational = dot(&rat[i], &star[j]) / &norms[j];
            for (x, y) in v.iter_mut().zip(&star[j]) {
                *x -= &m * y;
            }
            mu[i][j] = m;
        }
        norms.push(dot(&v, &v));
        star.push(v);
    }
    GramSchmidt { mu, norms }
}

fn round(q: &BigRational) -> BigInt {
    // nearest integer, halves rounded down
    let twice = q * BigRational::from_integer(BigInt::from(2));
    let num = twice.numer() + twice.denom();
    num.div_floor(&(twice.denom() * BigInt::from(2)))
}

/// LLL-reduces the rows of `basis` with parameter `delta = 3/4`.
pub fn lll_reduce(basis: &ZMatrix) -> Result<ZMatrix> {
    let n = basis.rows();
    let mut b = basis.row_vecs();
    if n == 0 {
        return Ok(basis.clone());
    }
    let mut gs = gram_schmidt(&b);
    if gs.norms.iter().any(Zero::is_zero) {
        return Err(Error::DependentRows);
    }
    let delta = BigRational::new(BigInt::from(3), BigInt::from(4));
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let size_reduce = |b: &mut Vec<Vec<BigInt>>, gs: &mut GramSchmidt, k: usize, l: usize| {
        if gs.mu[k][l].abs() <= half {
            return;
        }
        let q = round(&gs.mu[k][l]);
        let bl = b[l].clone();
        for (x, y) in b[k].iter_mut().zip(&bl) {
            *x -= &q * y;
        }
        let qr = BigRational::from_integer(q);
        for j in 0..l {
            let d = &qr * &gs.mu[l][j];
            gs.mu[k][j] -= d;
        }
        gs.mu[k][l] -= qr;
    };
    let mut k = 1;
    while k < n {
        size_reduce(&mut b, &mut gs, k, k - 1);
        let m = &gs.mu[k][k - 1];
        let lovasz = gs.norms[k] >= (&delta - m * m) * &gs.norms[k - 1];
        if lovasz {
            for l in (0..k - 1).rev() {
                size_reduce(&mut b, &mut gs, k, l);
            }
            k += 1;
        } else {
            b.swap(k, k - 1);
            gs = gram_schmidt(&b);
            k = (k - 1).max(1);
        }
    }
    Ok(ZMatrix::from_rows(basis.cols(), b))
}

/// Whether the rows satisfy the size and Lovász conditions for `delta = 3/4`.
pub fn is_lll_reduced(basis: &ZMatrix) -> bool {
    let b = basis.row_vecs();
    let gs = gram_schmidt(&b);
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let delta = BigRational::new(BigInt::from(3), BigInt::from(4));
    for i in 0..b.len() {
        for j in 0..i {
            if gs.mu[i][j].abs() > half {
                return false;
            }
        }
        if i > 0 {
            let m = &gs.mu[i][i - 1];
            if gs.norms[i] < (&delta - m * m) * &gs.norms[i - 1] {
                return false;
            }
        }
    }
    true
}

/// Determinant of the Gram matrix `B B^T`: the squared covolume.
pub fn gram_determinant(basis: &ZMatrix) -> BigInt {
    basis.mul(&basis.transpose()).determinant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hnf::same_lattice;

    #[test]
    fn orthogonal_basis_unchanged() {
        let b = ZMatrix::from_i64(&[vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 3]]);
        let r = lll_reduce(&b).unwrap();
        assert!(same_lattice(&b, &r));
        for i in 0..3 {
            let row = r.row(i);
            let orig = b.row(i);
            assert!(row == orig || row.iter().zip(orig).all(|(x, y)| *x == -y));
        }
    }

    #[test]
    fn classic_example() {
        let b = ZMatrix::from_i64(&[vec![1, 1, 1], vec![-1, 0, 2], vec![3, 5, 6]]);
        let r = lll_reduce(&b).unwrap();
        assert!(is_lll_reduced(&r));
        assert!(same_lattice(&b, &r));
        assert_eq!(gram_determinant(&b), gram_determinant(&r));
        assert_eq!(r, ZMatrix::from_i64(&[vec![0, 1, 0], vec![1, 0, 1], vec![-1, 0, 2]]));
    }

    #[test]
    fn dependent_rows_rejected() {
        let b = ZMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(lll_reduce(&b), Err(Error::DependentRows));
    }

    #[test]
    fn rounding() {
        let r = |a: i64, b: i64| round(&BigRational::new(BigInt::from(a), BigInt::from(b)));
        assert_eq!(r(7, 2), BigInt::from(4));
        assert_eq!(r(-7, 2), BigInt::from(-3));
        assert_eq!(r(5, 3), BigInt::from(2));
        assert_eq!(r(-5, 3), BigInt::from(-2));
    }
}
