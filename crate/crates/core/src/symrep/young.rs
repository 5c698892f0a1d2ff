//! Young's seminormal form.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{standard_tableaux, Partition};
use crate::linalg::{FpMatrix, Modulus, QMatrix};
use crate::perm::{factorial, Perm};
use crate::{Error, Result};

/// Sparse generator entries `(row, col, num, den)`.
type Entries = Vec<(usize, usize, i64, i64)>;

/// Matrix of the adjacent transposition `(k, k+1)` (0-based points) on the
/// basis of standard tableaux, acting on column vectors.
fn generator_entries(lambda: &Partition, k: usize) -> Entries {
    let tabs = standard_tableaux(lambda);
    let index: HashMap<_, _> = tabs.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let mut out = Vec::new();
    for (i, t) in tabs.iter().enumerate() {
        let r = t.content(k + 1) - t.content(k);
        out.push((i, i, 1, r));
        if r.abs() > 1 {
            let j = index[&t.swapped(k)];
            if r > 0 {
                out.push((j, i, 1, 1));
            } else {
                out.push((j, i, r * r - 1, r * r));
            }
        }
    }
    out
}

/// Rational generator matrices for `(1 2), (2 3), ..`.
pub fn seminormal_generators(lambda: &Partition) -> Vec<QMatrix> {
    let d = lambda.dimension();
    (0..lambda.size().saturating_sub(1))
        .map(|k| {
            let mut m = QMatrix::zeros(d, d);
            for (i, j, num, den) in generator_entries(lambda, k) {
                m.set(i, j, BigRational::new(BigInt::from(num), BigInt::from(den)));
            }
            m
        })
        .collect()
}

/// Adjacent transpositions `k` with `sigma = s_{k1} s_{k2} ..`.
fn reduced_word(sigma: &Perm) -> Vec<usize> {
    let mut w: Vec<u8> = sigma.images().to_vec();
    let mut word = Vec::new();
    // peel generators off the right: sigma = (sigma s_k) s_k
    while let Some(k) = (0..w.len().saturating_sub(1)).find(|&k| w[k] > w[k + 1]) {
        w.swap(k, k + 1);
        word.push(k);
    }
    word.reverse();
    word
}

/// Exact representation matrix of `sigma` in the irreducible module
/// `lambda`. Satisfies `R(s t) = R(s) R(t)`.
pub fn irrep_matrix(lambda: &Partition, sigma: &Perm) -> Result<QMatrix> {
    if sigma.degree() != lambda.size() {
        return Err(Error::DimensionMismatch(format!(
            "permutation of degree {} for a partition of {}",
            sigma.degree(),
            lambda.size()
        )));
    }
    let gens = seminormal_generators(lambda);
    let mut m = QMatrix::identity(lambda.dimension());
    for k in reduced_word(sigma) {
        m = m.mul(&gens[k]);
    }
    Ok(m)
}

/// Every matrix of an irreducible representation over `F_p`, indexed by the
/// lexicographic rank of the permutation.
#[derive(Debug, Clone)]
pub struct Representation {
    partition: Partition,
    dim: usize,
    degree: usize,
    modulus: Modulus,
    data: Vec<u32>,
}

impl Representation {
    /// Needs `p > n` so that the seminormal denominators are units.
    pub fn new(lambda: &Partition, modulus: Modulus) -> Result<Representation> {
        let n = lambda.size();
        if modulus.p() <= n as u64 {
            return Err(Error::InvalidPrime(modulus.p()));
        }
        let d = lambda.dimension();
        let gens: Vec<Vec<(usize, usize, u32)>> = (0..n.saturating_sub(1))
            .map(|k| {
                generator_entries(lambda, k)
                    .into_iter()
                    .map(|(i, j, num, den)| (i, j, modulus.from_ratio(num, den)))
                    .collect()
            })
            .collect();
        let count = factorial(n);
        let mut data = vec![0u32; count * d * d];
        let mut done = vec![false; count];
        let id = Perm::identity(n);
        let r0 = id.lex_rank();
        for i in 0..d {
            data[r0 * d * d + i * d + i] = 1;
        }
        done[r0] = true;
        let mut queue = std::collections::VecDeque::from([id]);
        while let Some(sigma) = queue.pop_front() {
            let src = sigma.lex_rank();
            for (k, g) in gens.iter().enumerate() {
                let tau = sigma.compose(&Perm::transposition(n, k, k + 1));
                let dst = tau.lex_rank();
                if done[dst] {
                    continue;
                }
                // R(tau) = R(sigma) R(s_k)
                let mut out = vec![0u32; d * d];
                for &(a, b, v) in g {
                    for row in 0..d {
                        let x = data[src * d * d + row * d + a];
                        if x != 0 {
                            out[row * d + b] = modulus.add(out[row * d + b], modulus.mul(x, v));
                        }
                    }
                }
                data[dst * d * d..(dst + 1) * d * d].copy_from_slice(&out);
                done[dst] = true;
                queue.push_back(tau);
            }
        }
        Ok(Representation { partition: lambda.clone(), dim: d, degree: n, modulus, data })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Row-major entries of `R(sigma)` where `rank` is the lexicographic rank
    /// of `sigma`.
    pub fn entries(&self, rank: usize) -> &[u32] {
        let dd = self.dim * self.dim;
        &self.data[rank * dd..(rank + 1) * dd]
    }

    pub fn matrix(&self, sigma: &Perm) -> FpMatrix {
        assert_eq!(sigma.degree(), self.degree, "permutation degree mismatch");
        let rows: Vec<Vec<u32>> = self.entries(sigma.lex_rank()).chunks(self.dim).map(<[u32]>::to_vec).collect();
        FpMatrix::from_rows(self.modulus, self.dim, &rows)
    }

    /// Adds `coef * R(sigma)` into the `d x d` block of `target` whose top
    /// left corner is `(row, col)`.
    pub fn add_block(&self, target: &mut FpMatrix, row: usize, col: usize, coef: u32, rank: usize) {
        if coef == 0 {
            return;
        }
        let m = self.modulus;
        let e = self.entries(rank);
        for i in 0..self.dim {
            let dst = &mut target.row_mut(row + i)[col..col + self.dim];
            for (x, &y) in dst.iter_mut().zip(&e[i * self.dim..(i + 1) * self.dim]) {
                if y != 0 {
                    *x = m.add(*x, m.mul(coef, y));
                }
            }
        }
    }
}

/// `sum c_i R(sigma_i)` for a group algebra element given as
/// `(coefficient, permutation)` terms.
pub fn group_algebra_block(rep: &Representation, element: &[(i64, Perm)]) -> FpMatrix {
    let mut out = FpMatrix::zeros(rep.modulus, rep.dim, rep.dim);
    for (c, sigma) in element {
        assert_eq!(sigma.degree(), rep.degree, "permutation degree mismatch");
        rep.add_block(&mut out, 0, 0, rep.modulus.from_i64(*c), sigma.lex_rank());
    }
    out
}
