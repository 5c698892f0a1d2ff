//! Dense linear algebra over a prime field `F_p` with `p < 2^31`.

use rayon::prelude::*;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Modulus {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Modulus { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p - b as u64) % self.p) as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.p) as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            (self.p - a as u64) as u32
        }
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a as u64 % self.p;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc as u32
    }

    /// Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    /// `num / den` reduced mod p; `den` must be a unit.
    pub fn from_ratio(&self, num: i64, den: i64) -> u32 {
        self.mul(self.from_i64(num), self.inv(self.from_i64(den)))
    }

    /// Representative in `(-p/2, p/2)`.
    pub fn symmetric(&self, a: u32) -> i64 {
        let a = a as i64;
        let p = self.p as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }

    /// Number of products `< p^2` that fit in a `u64` accumulator on top of a
    /// reduced value.
    fn lazy_budget(&self) -> usize {
        let sq = (self.p - 1) * (self.p - 1);
        ((u64::MAX - self.p) / sq.max(1)) as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    modulus: Modulus,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(modulus: Modulus, rows: usize, cols: usize) -> Self {
        FpMatrix { modulus, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(modulus: Modulus, n: usize) -> Self {
        let mut m = Self::zeros(modulus, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(modulus: Modulus, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| (x as u64 % modulus.p) as u32));
        }
        FpMatrix { modulus, rows: rows.len(), cols, data }
    }

    pub fn from_i64_rows(modulus: Modulus, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let rows: Vec<Vec<u32>> =
            rows.iter().map(|r| r.iter().map(|&x| modulus.from_i64(x)).collect()).collect();
        Self::from_rows(modulus, cols, &rows)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: u32) {
        let k = i * self.cols + j;
        self.data[k] = self.modulus.add(self.data[k], v);
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zeros(self.modulus, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let m = self.modulus;
        let mut out = FpMatrix::zeros(m, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = m.add(out.get(i, j), m.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FpMatrix { modulus: self.modulus, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> FpMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        FpMatrix { modulus: self.modulus, rows: idx.len(), cols: self.cols, data }
    }

    pub fn trace(&self) -> u32 {
        let m = self.modulus;
        (0..self.rows.min(self.cols)).fold(0, |acc, i| m.add(acc, self.get(i, i)))
    }

    /// Reduced row echelon form and rank.
    pub fn rcf(&self) -> (FpMatrix, usize) {
        let mut e = Echelon::new(self.modulus, self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i));
        }
        let rank = e.rank();
        (e.into_matrix(), rank)
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.modulus, self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i));
            if e.rank() == self.cols {
                break;
            }
        }
        e.rank()
    }

    /// The unique matrix in row canonical form whose rows span
    /// `{ x : A x^T = 0 }`.
    pub fn nullspace_rcf(&self) -> FpMatrix {
        let mut e = Echelon::new(self.modulus, self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i));
        }
        e.nullspace_rcf()
    }

    /// Greedy scan keeping each row that raises the rank of the rows kept so
    /// far.
    pub fn lex_first_row_basis(&self) -> Vec<usize> {
        let mut e = Echelon::new(self.modulus, self.cols);
        let mut keep = Vec::new();
        for i in 0..self.rows {
            if e.rank() == self.cols {
                break;
            }
            if e.insert(self.row(i)) {
                keep.push(i);
            }
        }
        keep
    }
}

/// Incrementally maintained row canonical form. Every basis row has a 1 in
/// its pivot column and 0 in every other pivot column.
#[derive(Debug, Clone)]
pub struct Echelon {
    modulus: Modulus,
    cols: usize,
    basis: Vec<Vec<u32>>,
    pivot_cols: Vec<usize>,
    is_pivot: Vec<bool>,
}

const PARALLEL_WORK: usize = 1 << 16;

impl Echelon {
    pub fn new(modulus: Modulus, cols: usize) -> Self {
        Echelon { modulus, cols, basis: Vec::new(), pivot_cols: Vec::new(), is_pivot: vec![false; cols] }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `row` against the basis; returns the residue (zero iff `row`
    /// lies in the span).
    pub fn reduce(&self, row: &[u32]) -> Vec<u32> {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        let m = self.modulus;
        let p = m.p;
        let budget = m.lazy_budget();
        let mut acc: Vec<u64> = row.iter().map(|&x| x as u64).collect();
        let mut pending = 0usize;
        for (b, &c) in self.basis.iter().zip(&self.pivot_cols) {
            // basis rows vanish on the other pivots, so the coefficient is
            // the original entry
            let coef = row[c];
            if coef == 0 {
                continue;
            }
            if pending == budget {
                for a in acc.iter_mut() {
                    *a %= p;
                }
                pending = 0;
            }
            let f = p - coef as u64;
            for (a, &x) in acc[c..].iter_mut().zip(&b[c..]) {
                *a += f * x as u64;
            }
            pending += 1;
        }
        acc.into_iter().map(|a| (a % p) as u32).collect()
    }

    pub fn contains(&self, row: &[u32]) -> bool {
        self.reduce(row).iter().all(|&x| x == 0)
    }

    /// Adds `row` to the span; returns whether the rank increased.
    pub fn insert(&mut self, row: &[u32]) -> bool {
        let mut r = self.reduce(row);
        let Some(c) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let m = self.modulus;
        let inv = m.inv(r[c]);
        for x in r[c..].iter_mut() {
            *x = m.mul(*x, inv);
        }
        let clear = |b: &mut Vec<u32>| {
            let f = b[c];
            if f != 0 {
                let nf = m.neg(f);
                for (x, &y) in b[c..].iter_mut().zip(&r[c..]) {
                    *x = m.add(*x, m.mul(nf, y));
                }
            }
        };
        if self.basis.len() * self.cols > PARALLEL_WORK {
            self.basis.par_iter_mut().for_each(clear);
        } else {
            self.basis.iter_mut().for_each(clear);
        }
        self.basis.push(r);
        self.pivot_cols.push(c);
        self.is_pivot[c] = true;
        true
    }

    /// Basis rows in insertion order.
    pub fn basis_rows(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p = self.pivot_cols.clone();
        p.sort_unstable();
        p
    }

    /// Basis rows sorted by pivot column: the row canonical form.
    pub fn into_matrix(self) -> FpMatrix {
        let mut order: Vec<usize> = (0..self.basis.len()).collect();
        order.sort_by_key(|&i| self.pivot_cols[i]);
        let rows: Vec<Vec<u32>> = order.into_iter().map(|i| self.basis[i].clone()).collect();
        FpMatrix::from_rows(self.modulus, self.cols, &rows)
    }

    pub fn nullspace_rcf(&self) -> FpMatrix {
        let m = self.modulus;
        let mut null = Echelon::new(m, self.cols);
        for f in (0..self.cols).filter(|&j| !self.is_pivot[j]) {
            let mut v = vec![0u32; self.cols];
            v[f] = 1;
            for (b, &c) in self.basis.iter().zip(&self.pivot_cols) {
                v[c] = m.neg(b[f]);
            }
            null.insert(&v);
        }
        null.into_matrix()
    }
}
