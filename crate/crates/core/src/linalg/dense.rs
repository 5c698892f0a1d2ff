//! Dense matrices over `Z` and `Q` with exact arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type ZMatrix = Matrix<BigInt>;
pub type QMatrix = Matrix<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_rows(self.cols, idx.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + std::ops::Mul<Output = T>,
{
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl ZMatrix {
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn to_rational(&self) -> QMatrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }

    /// Rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        bareiss(self).0
    }

    /// Determinant of a square matrix by fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let (rank, det) = bareiss(self);
        if rank < self.rows {
            BigInt::zero()
        } else {
            det
        }
    }

    /// Greedy lexicographically first set of rows spanning the row space,
    /// computed over `Q` with a fraction-free echelon basis.
    pub fn lex_first_row_basis(&self) -> Vec<usize> {
        let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new();
        let mut keep = Vec::new();
        for i in 0..self.rows {
            if basis.len() == self.cols {
                break;
            }
            let mut r = self.row(i).to_vec();
            for (c, b) in &basis {
                if r[*c].is_zero() {
                    continue;
                }
                let (f, g) = (b[*c].clone(), r[*c].clone());
                for j in 0..self.cols {
                    r[j] = &r[j] * &f - &g * &b[j];
                }
                make_primitive(&mut r);
            }
            if let Some(c) = r.iter().position(|x| !x.is_zero()) {
                let at = basis.partition_point(|(pc, _)| *pc < c);
                basis.insert(at, (c, r));
                keep.push(i);
            }
        }
        keep
    }
}

/// Divides a vector by the gcd of its entries.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Returns `(rank, last pivot)`; the last pivot is `±det` for full-rank square
/// input, with the sign corrected for row swaps.
fn bareiss(a: &ZMatrix) -> (usize, BigInt) {
    let mut m = a.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut sign = 1;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            m.swap_rows(p, r);
            sign = -sign;
        }
        let piv = m.get(r, c).clone();
        for i in r + 1..rows {
            let f = m.get(i, c).clone();
            for j in c + 1..cols {
                let v = (&piv * m.get(i, j) - &f * m.get(r, j)) / &prev;
                m.set(i, j, v);
            }
            m.set(i, c, BigInt::zero());
        }
        prev = piv;
        r += 1;
    }
    (r, if sign < 0 { -prev } else { prev })
}

impl QMatrix {
    /// Reduced row echelon form, rank, and pivot columns. The pivot in each
    /// column is the first row with a nonzero entry there.
    pub fn rcf(&self) -> (QMatrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = r;
        let out = m.select_rows(&(0..rank).collect::<Vec<_>>());
        (out, rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rcf().1
    }

    pub fn trace(&self) -> BigRational {
        (0..self.rows.min(self.cols)).fold(BigRational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == QMatrix::identity(self.rows)
    }

    pub fn nullspace_rcf(&self) -> QMatrix {
        let (r, _, pivots) = self.rcf();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let mut rows = Vec::new();
        for &f in &free {
            let mut v = vec![BigRational::zero(); self.cols];
            v[f] = BigRational::one();
            for (k, &c) in pivots.iter().enumerate() {
                v[c] = -r.get(k, f).clone();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return QMatrix::zeros(0, self.cols);
        }
        QMatrix::from_rows(self.cols, rows).rcf().0
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> =
                self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Whether two integer vectors are proportional.
pub fn proportional(a: &[BigInt], b: &[BigInt]) -> bool {
    let Some(i) = a.iter().position(|x| !x.is_zero()) else {
        return b.iter().all(Zero::is_zero);
    };
    if b[i].is_zero() {
        return false;
    }
    a.iter().zip(b).all(|(x, y)| x * &b[i] == y * &a[i])
}

pub fn abs_max(m: &ZMatrix) -> BigInt {
    m.data.iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_rank_and_det() {
        let a = ZMatrix::from_i64(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]);
        assert_eq!(a.determinant(), BigInt::from(0));
        let b = ZMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(b.rank(), 1);
        assert_eq!(b.determinant(), BigInt::zero());
        let swap = ZMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.determinant(), BigInt::from(-1));
    }

    #[test]
    fn rational_nullspace() {
        let a = ZMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]).to_rational();
        let n = a.nullspace_rcf();
        assert_eq!(n.rows(), 1);
        assert!(a.mul(&n.transpose()).is_zero());
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn rational_lex_first_rows() {
        let a = ZMatrix::from_i64(&[vec![1, 1, 0], vec![2, 2, 0], vec![0, 1, 1], vec![1, 2, 1], vec![0, 0, 5]]);
        assert_eq!(a.lex_first_row_basis(), vec![0, 2, 4]);
    }
}
