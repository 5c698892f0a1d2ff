//! Row Hermite normal form with unimodular transform.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::dense::ZMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnfResult {
    pub h: ZMatrix,
    pub u: ZMatrix,
    pub rank: usize,
}

impl HnfResult {
    /// Rows of `U` mapping `A` to zero: a basis of the left integer nullspace.
    pub fn left_kernel(&self) -> ZMatrix {
        let idx: Vec<usize> = (self.rank..self.u.rows()).collect();
        self.u.select_rows(&idx)
    }

    /// Nonzero rows of `H`.
    pub fn basis(&self) -> ZMatrix {
        let idx: Vec<usize> = (0..self.rank).collect();
        self.h.select_rows(&idx)
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn negate(&mut self, i: usize) {
        for x in self.a[i].iter_mut().chain(self.u[i].iter_mut()) {
            *x = -&*x;
        }
    }

    /// row_i -= q * row_k
    fn sub_mul(&mut self, i: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let (ak, uk) = (self.a[k].clone(), self.u[k].clone());
        for (x, y) in self.a[i].iter_mut().zip(&ak) {
            *x -= q * y;
        }
        for (x, y) in self.u[i].iter_mut().zip(&uk) {
            *x -= q * y;
        }
    }
}

/// Computes `U A = H` with `U` unimodular and `H` in row Hermite normal form:
/// echelon, positive pivots, entries above each pivot in `[0, pivot)`. The
/// last `rows - rank` rows of `U` span the left integer nullspace of `A`.
pub fn hnf_with_transform(a: &ZMatrix) -> HnfResult {
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = Work { a: a.row_vecs(), u: ZMatrix::identity(rows).row_vecs() };
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !w.a[i][c].is_zero())
                .min_by(|&i, &j| w.a[i][c].abs().cmp(&w.a[j][c].abs()));
            let Some(best) = best else { break };
            w.swap(r, best);
            let mut clean = true;
            for i in r + 1..rows {
                if w.a[i][c].is_zero() {
                    continue;
                }
                let q = w.a[i][c].div_floor(&w.a[r][c]);
                w.sub_mul(i, r, &q);
                if !w.a[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if w.a[r][c].is_zero() {
            continue;
        }
        if w.a[r][c].is_negative() {
            w.negate(r);
        }
        for i in 0..r {
            let q = w.a[i][c].div_floor(&w.a[r][c]);
            w.sub_mul(i, r, &q);
        }
        r += 1;
    }
    HnfResult { h: ZMatrix::from_rows(cols, w.a), u: ZMatrix::from_rows(rows, w.u), rank: r }
}

/// Whether the rows of `a` and `b` generate the same lattice in `Z^n`.
pub fn same_lattice(a: &ZMatrix, b: &ZMatrix) -> bool {
    a.cols() == b.cols() && hnf_with_transform(a).basis() == hnf_with_transform(b).basis()
}

/// Whether every row of `v` lies in the lattice generated by the rows of `a`.
pub fn lattice_contains(a: &ZMatrix, v: &ZMatrix) -> bool {
    let mut rows = a.row_vecs();
    rows.extend(v.row_vecs());
    same_lattice(a, &ZMatrix::from_rows(a.cols(), rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_matrix() {
        let a = ZMatrix::zeros(3, 2);
        let r = hnf_with_transform(&a);
        assert_eq!(r.rank, 0);
        assert_eq!(r.h, a);
        assert_eq!(r.u, ZMatrix::identity(3));
    }

    #[test]
    fn small_example() {
        let a = ZMatrix::from_i64(&[vec![2, 4], vec![3, 5], vec![5, 9]]);
        let r = hnf_with_transform(&a);
        assert_eq!(r.u.mul(&a), r.h);
        assert_eq!(r.rank, 2);
        assert_eq!(r.h, ZMatrix::from_i64(&[vec![1, 1], vec![0, 2], vec![0, 0]]));
        assert_eq!(r.u.determinant().abs(), BigInt::from(1));
        let k = r.left_kernel();
        assert!(k.mul(&a).is_zero());
    }

    #[test]
    fn lattice_comparisons() {
        let a = ZMatrix::from_i64(&[vec![1, 1, 0], vec![0, 2, 2]]);
        let b = ZMatrix::from_i64(&[vec![1, 3, 2], vec![-1, 1, 2], vec![0, 2, 2]]);
        assert!(same_lattice(&a, &b));
        let c = ZMatrix::from_i64(&[vec![1, 1, 0], vec![0, 1, 1]]);
        assert!(!same_lattice(&a, &c));
        assert!(lattice_contains(&c, &a));
        assert!(!lattice_contains(&a, &c));
    }
}
