//! Identity searches in degrees 3 to 7.

mod degree6;
mod degree7;

use std::fmt;

use num_integer::Integer;

use crate::dias::DiasPoly;
use crate::expansion::{expand, expand_monomial, nonlinear_basis, ExpansionMatrix, Pattern};
use crate::linalg::{FpMatrix, Modulus};
use crate::magma::{letter, MultilinearBasis};
use crate::{Error, Result};

pub use degree6::{
    collapse, degree6_generators, degree6_nonlinear, degree6_nullspace, identity_from_text, linearize,
    nullspace_character, orbit_rank, reconstruct_rows, Degree6Nullspace, NonlinearIdentities,
};
pub use degree7::{
    consequences, degree7_table, format_degree7_table, Degree7Data, Degree7Table, PartitionReport, TableFormat,
};

/// The monomial basis an identity is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisTag {
    /// Multilinear monomials of the given degree in
    /// [`crate::magma::enum_multilinear`] order.
    Multilinear(usize),
    Nonlinear(Pattern),
}

/// Integer coefficients over an ordered monomial basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityVector {
    pub basis: BasisTag,
    pub coeffs: Vec<i64>,
}

impl IdentityVector {
    pub fn new(basis: BasisTag, coeffs: Vec<i64>) -> IdentityVector {
        IdentityVector { basis, coeffs }
    }

    /// Divides by the content and makes the first nonzero coefficient
    /// positive.
    pub fn normalized(mut self) -> IdentityVector {
        normalize(&mut self.coeffs);
        self
    }

    /// Expansion computed term by term, independently of any matrix.
    pub fn expand(&self) -> Result<DiasPoly> {
        let mut out = DiasPoly::zero();
        match self.basis {
            BasisTag::Multilinear(n) => {
                let basis = MultilinearBasis::new(n)?;
                check_len(basis.len(), self.coeffs.len())?;
                for (m, &c) in basis.monomials().iter().zip(&self.coeffs) {
                    if c != 0 {
                        out.add_assign(&expand_monomial(m).scale(&c));
                    }
                }
            }
            BasisTag::Nonlinear(p) => {
                let basis = nonlinear_basis(p);
                check_len(basis.len(), self.coeffs.len())?;
                for (m, &c) in basis.iter().zip(&self.coeffs) {
                    if c != 0 {
                        out.add_assign(&expand(&m.tree()).scale(&c));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Whether the polynomial expands to zero.
    pub fn is_identity(&self) -> Result<bool> {
        Ok(self.expand()?.is_zero())
    }

    pub fn nonzero(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("{got} coefficients for a basis of {expected}")))
    }
}

impl fmt::Display for IdentityVector {
    /// `((x^2x^2)x)x - 2((x^2x)x^2)x + ...`; the zero vector prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = match self.basis {
            BasisTag::Multilinear(n) => match MultilinearBasis::new(n) {
                Ok(b) => b.monomials().iter().map(|m| m.to_tree().render(&letter, false)).collect(),
                Err(_) => return Err(fmt::Error),
            },
            BasisTag::Nonlinear(p) => nonlinear_basis(p).iter().map(|m| m.to_string()).collect(),
        };
        let mut first = true;
        for (name, &c) in names.iter().zip(&self.coeffs) {
            if c == 0 {
                continue;
            }
            let abs = c.abs();
            let sign = match (first, c < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            if abs == 1 {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{abs}{name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Divides by the gcd of the entries and makes the first nonzero entry
/// positive. Zero vectors are left alone.
pub fn normalize(v: &mut [i64]) {
    let g = v.iter().fold(0i64, |g, x| g.gcd(x));
    if g == 0 {
        return;
    }
    let first_negative = v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0);
    let g = if first_negative { -g } else { g };
    for x in v.iter_mut() {
        *x /= g;
    }
}

/// Rank and nullspace of the multilinear expansion matrix in degree `n`.
#[derive(Debug, Clone)]
pub struct MultilinearSearch {
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// Row canonical form of the nullspace over `F_p`.
    pub nullspace: FpMatrix,
}

impl MultilinearSearch {
    pub fn nullity(&self) -> usize {
        self.cols - self.rank
    }
}

/// Builds the expansion matrix of degree `n` and computes its rank and
/// nullspace modulo `p`.
pub fn multilinear_search(n: usize, modulus: Modulus) -> Result<MultilinearSearch> {
    if !(3..=6).contains(&n) {
        return Err(Error::DegreeOutOfRange { degree: n, min: 3, max: 6 });
    }
    let e = ExpansionMatrix::new(n)?;
    let fp = e.to_fp(modulus);
    let mut ech = crate::linalg::Echelon::new(modulus, fp.cols());
    for i in 0..fp.rows() {
        ech.insert(fp.row(i));
        if ech.rank() == fp.cols() {
            break;
        }
    }
    log::debug!("degree {n}: rank {} of {} columns", ech.rank(), fp.cols());
    Ok(MultilinearSearch {
        degree: n,
        rows: e.rows(),
        cols: e.cols(),
        rank: ech.rank(),
        nullspace: ech.nullspace_rcf(),
    })
}
