//! Degree 6: the multilinear nullspace, its module structure, and the
//! identities in one and two variables.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{multilinear_search, normalize, MultilinearSearch};
use crate::expansion::{collapsed_matrix, nonlinear_basis, nonlinear_index, orbit_maxima, Pattern, X, Y};
use crate::linalg::{hnf_with_transform, lll_reduce, rational_reconstruct, Echelon, FpMatrix, Modulus, QMatrix, ZMatrix};
use crate::magma::{association_types, MultilinearBasis};
use crate::parse::parse_polynomial;
use crate::perm::Perm;
use crate::symrep::module_character;
use crate::{Error, Result};

/// Rank and nullspace of the degree 6 expansion matrix mod `p`.
pub type Degree6Nullspace = MultilinearSearch;

pub fn degree6_nullspace(modulus: Modulus) -> Result<Degree6Nullspace> {
    multilinear_search(6, modulus)
}

/// Lifts every row of a modular matrix with the given scale.
pub fn reconstruct_rows(m: &FpMatrix, scale: u64) -> Vec<Vec<i64>> {
    (0..m.rows()).map(|i| rational_reconstruct(m.row(i), m.modulus(), scale)).collect()
}

fn big(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Character of the `S_6`-module spanned by integer vectors over the
/// multilinear basis, computed exactly. Classes are in
/// [`crate::symrep::class_partitions`] order.
pub fn nullspace_character(rows: &[Vec<i64>]) -> Result<Vec<i64>> {
    let basis = MultilinearBasis::new(6)?;
    for r in rows {
        if r.len() != basis.len() {
            return Err(Error::DimensionMismatch(format!("{} coefficients for {} monomials", r.len(), basis.len())));
        }
    }
    let q = QMatrix::from_rows(basis.len(), rows.iter().map(|r| r.iter().map(|&x| big(x)).collect()).collect());
    let (rcf, rank, pivots) = q.rcf();
    let mut actions: HashMap<Perm, QMatrix> = HashMap::new();
    for g in crate::symrep::class_representatives(6) {
        // image of each basis monomial under g
        let image: Vec<usize> = basis
            .monomials()
            .iter()
            .map(|m| basis.index_of(&m.act(&g)).expect("basis closed under the action"))
            .collect();
        let mut a = QMatrix::zeros(rank, rank);
        for i in 0..rank {
            let mut w = vec![BigRational::zero(); basis.len()];
            for (j, x) in rcf.row(i).iter().enumerate() {
                if !x.is_zero() {
                    w[image[j]] += x;
                }
            }
            // coordinates in an RCF basis are read off at the pivots
            let coords: Vec<BigRational> = pivots.iter().map(|&p| w[p].clone()).collect();
            for (j, wj) in w.iter().enumerate() {
                let back: BigRational = coords.iter().enumerate().map(|(k, c)| c * rcf.get(k, j)).sum();
                if back != *wj {
                    return Err(Error::DimensionMismatch(format!("span is not invariant under {g}")));
                }
            }
            for (k, c) in coords.into_iter().enumerate() {
                a.set(k, i, c);
            }
        }
        actions.insert(g, a);
    }
    module_character(6, |g| actions[g].clone())
}

/// Integer nullspace of a collapsed expansion matrix.
#[derive(Debug, Clone)]
pub struct NonlinearIdentities {
    pub pattern: Pattern,
    pub matrix: ZMatrix,
    pub rank: usize,
    /// Unimodular `U` with `U E^t` in Hermite normal form.
    pub transform: ZMatrix,
    /// LLL-reduced and normalized basis of the integer nullspace.
    pub identities: ZMatrix,
}

impl NonlinearIdentities {
    pub fn nullity(&self) -> usize {
        self.matrix.cols() - self.rank
    }
}

pub fn degree6_nonlinear(pattern: Pattern) -> Result<NonlinearIdentities> {
    let e = collapsed_matrix(pattern);
    let hnf = hnf_with_transform(&e.transpose());
    let kernel = hnf.left_kernel();
    let reduced = if kernel.rows() == 0 { kernel } else { lll_reduce(&kernel)? };
    let rows: Vec<Vec<BigInt>> = reduced
        .row_vecs()
        .into_iter()
        .map(|mut r| {
            crate::linalg::dense::make_primitive(&mut r);
            if r.iter().find(|x| !x.is_zero()).is_some_and(|x| x < &BigInt::zero()) {
                for x in r.iter_mut() {
                    *x = -&*x;
                }
            }
            r
        })
        .collect();
    Ok(NonlinearIdentities {
        pattern,
        rank: hnf.rank,
        transform: hnf.u,
        identities: ZMatrix::from_rows(e.cols(), rows),
        matrix: e,
    })
}

/// Coefficient vector over [`nonlinear_basis`] of a polynomial written in
/// `x` and `y`, such as `((x^2x^2)x)y - ((x^2x)x^2)y`.
pub fn identity_from_text(pattern: Pattern, src: &str) -> Result<Vec<i64>> {
    let mut v = vec![0i64; nonlinear_basis(pattern).len()];
    for (c, m) in parse_polynomial(src)? {
        let mut labels = [X; 2];
        for (l, &ch) in m.letters.iter().enumerate() {
            labels[l] = match ch {
                'x' => X,
                'y' => Y,
                _ => {
                    return Err(Error::Parse { position: 0, message: format!("unexpected variable '{ch}'") });
                }
            };
        }
        let tree = m.tree.map_labels(&|l| labels[l as usize]);
        let idx = nonlinear_index(pattern, &tree).ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("'{}' is not a {pattern} monomial", m.tree.render(&|l| m.name(l), true)),
        })?;
        v[idx] += c;
    }
    Ok(v)
}

/// Full linearization over the degree 6 multilinear basis: `x` is replaced
/// by `x_1, .., x_6` (or `x_1, .., x_5` with `y = x_6`) in every order.
pub fn linearize(pattern: Pattern, coeffs: &[i64]) -> Result<Vec<i64>> {
    let basis = MultilinearBasis::new(6)?;
    let nl = nonlinear_basis(pattern);
    if coeffs.len() != nl.len() {
        return Err(Error::DimensionMismatch(format!("{} coefficients for {} monomials", coeffs.len(), nl.len())));
    }
    let mut out = vec![0i64; basis.len()];
    let types = association_types(6)?;
    for (b, &c) in nl.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        let shape = &types[b.type_index];
        let free = match b.y_position {
            None => 6,
            Some(_) => 5,
        };
        for pi in Perm::all(free) {
            let mut labels = Vec::with_capacity(6);
            let mut next = 0;
            for pos in 0..6 {
                if Some(pos) == b.y_position {
                    labels.push(5u8);
                } else {
                    labels.push(pi.images()[next]);
                    next += 1;
                }
            }
            let tree = shape.shape.relabel_positions(&labels);
            out[basis.index_of_tree(&tree)?] += c;
        }
    }
    Ok(out)
}

/// Sets every variable of a multilinear degree 6 vector to `x`, or the
/// first five to `x` and `x_6` to `y`.
pub fn collapse(pattern: Pattern, multilinear: &[i64]) -> Result<Vec<i64>> {
    let basis = MultilinearBasis::new(6)?;
    if multilinear.len() != basis.len() {
        return Err(Error::DimensionMismatch(format!("{} coefficients for {} monomials", multilinear.len(), basis.len())));
    }
    let nl = nonlinear_basis(pattern);
    let mut out = vec![0i64; nl.len()];
    for (m, &c) in basis.monomials().iter().zip(multilinear) {
        if c == 0 {
            continue;
        }
        let y_position = match pattern {
            Pattern::X6 => None,
            Pattern::X5Y => {
                let at = m.perm.images().iter().position(|&x| x == 5).expect("label 5 present");
                Some(orbit_maxima(6, m.type_index)?[at])
            }
        };
        let idx = nl
            .iter()
            .position(|b| b.type_index == m.type_index && b.y_position == y_position)
            .expect("orbit maxima index the basis");
        out[idx] += c;
    }
    Ok(out)
}

/// Rank mod `p` of the `S_6`-orbit of the given multilinear vectors.
pub fn orbit_rank(generators: &[Vec<i64>], modulus: Modulus) -> Result<usize> {
    let basis = MultilinearBasis::new(6)?;
    let mut ech = Echelon::new(modulus, basis.len());
    let perms: Vec<Perm> = Perm::all(6).collect();
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|g| basis.monomials().iter().map(|m| basis.index_of(&m.act(g)).expect("closed")).collect())
        .collect();
    for v in generators {
        for img in &images {
            let mut w = vec![0u32; basis.len()];
            for (j, &c) in v.iter().enumerate() {
                if c != 0 {
                    w[img[j]] = modulus.add(w[img[j]], modulus.from_i64(c));
                }
            }
            ech.insert(&w);
        }
    }
    Ok(ech.rank())
}

/// Linearizations of the `x^6` identities followed by those of the `x^5 y`
/// identities, each normalized.
pub fn degree6_generators() -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for pattern in [Pattern::X6, Pattern::X5Y] {
        let ids = degree6_nonlinear(pattern)?;
        for r in ids.identities.row_vecs() {
            let coeffs: Vec<i64> = r.iter().map(|x| x.to_i64().expect("small coefficients")).collect();
            let mut lin = linearize(pattern, &coeffs)?;
            normalize(&mut lin);
            out.push(lin);
        }
    }
    Ok(out)
}
