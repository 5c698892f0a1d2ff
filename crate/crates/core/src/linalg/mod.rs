//! Exact linear algebra over `F_p`, `Q` and `Z`.

pub mod dense;
pub mod fp;
pub mod hnf;
pub mod lll;
pub mod reconstruct;

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use dense::{Matrix, QMatrix, ZMatrix};
pub use fp::{Echelon, FpMatrix, Modulus};
pub use hnf::{hnf_with_transform, lattice_contains, same_lattice, HnfResult};
pub use lll::lll_reduce;
pub use reconstruct::{rational_reconstruct, reconstruct_auto};

use crate::{Error, Result};

/// A matrix tagged with its coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactMatrix {
    Int(ZMatrix),
    Rat(QMatrix),
    Mod(FpMatrix),
}

impl ExactMatrix {
    pub fn rows(&self) -> usize {
        match self {
            ExactMatrix::Int(m) => m.rows(),
            ExactMatrix::Rat(m) => m.rows(),
            ExactMatrix::Mod(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            ExactMatrix::Int(m) => m.cols(),
            ExactMatrix::Rat(m) => m.cols(),
            ExactMatrix::Mod(m) => m.cols(),
        }
    }

    pub fn ring(&self) -> String {
        match self {
            ExactMatrix::Int(_) => "Z".to_string(),
            ExactMatrix::Rat(_) => "Q".to_string(),
            ExactMatrix::Mod(m) => format!("F{}", m.modulus().p()),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            ExactMatrix::Int(m) => m.rank(),
            ExactMatrix::Rat(m) => m.rank(),
            ExactMatrix::Mod(m) => m.rank(),
        }
    }

    pub fn lex_first_row_basis(&self) -> Vec<usize> {
        match self {
            ExactMatrix::Int(m) => m.lex_first_row_basis(),
            ExactMatrix::Rat(m) => {
                // clearing denominators row by row keeps the row space
                let rows: Vec<Vec<BigInt>> = m
                    .row_vecs()
                    .into_iter()
                    .map(|r| {
                        let l = r.iter().fold(BigInt::from(1), |l, x| num_integer::lcm(l, x.denom().clone()));
                        r.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
                    })
                    .collect();
                ZMatrix::from_rows(m.cols(), rows).lex_first_row_basis()
            }
            ExactMatrix::Mod(m) => m.lex_first_row_basis(),
        }
    }

    /// `rows cols ring` header followed by one whitespace-separated line per
    /// row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.rows(), self.cols(), self.ring());
        let mut push = |cells: Vec<String>| {
            let _ = writeln!(s, "{}", cells.join(" "));
        };
        match self {
            ExactMatrix::Int(m) => {
                for i in 0..m.rows() {
                    push(m.row(i).iter().map(|x| x.to_string()).collect());
                }
            }
            ExactMatrix::Rat(m) => {
                for i in 0..m.rows() {
                    push(m.row(i).iter().map(|x| x.to_string()).collect());
                }
            }
            ExactMatrix::Mod(m) => {
                for i in 0..m.rows() {
                    push(m.row(i).iter().map(|x| x.to_string()).collect());
                }
            }
        }
        s
    }

    /// Comma-separated rows without a header.
    pub fn to_csv(&self) -> String {
        self.to_text().lines().skip(1).map(|l| l.replace(' ', ",") + "\n").collect()
    }

    /// Parses [`ExactMatrix::to_text`] output. Lines starting with `#` are
    /// ignored and `.` is accepted for zero.
    pub fn from_text(text: &str) -> Result<ExactMatrix> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::MatrixFormat("missing header".into()))?;
        let h: Vec<&str> = header.split_whitespace().collect();
        if h.len() != 3 {
            return Err(Error::MatrixFormat(format!("bad header '{header}'")));
        }
        let parse_dim = |s: &str| s.parse::<usize>().map_err(|_| Error::MatrixFormat(format!("bad dimension '{s}'")));
        let (rows, cols) = (parse_dim(h[0])?, parse_dim(h[1])?);
        let mut cells: Vec<Vec<String>> = Vec::with_capacity(rows);
        for line in lines {
            let row: Vec<String> =
                line.split_whitespace().map(|c| if c == "." { "0".to_string() } else { c.to_string() }).collect();
            if row.len() != cols {
                return Err(Error::MatrixFormat(format!("row {} has {} entries, expected {cols}", cells.len(), row.len())));
            }
            cells.push(row);
        }
        if cells.len() != rows {
            return Err(Error::MatrixFormat(format!("found {} rows, expected {rows}", cells.len())));
        }
        let bad = |c: &str| Error::MatrixFormat(format!("bad entry '{c}'"));
        match h[2] {
            "Z" => {
                let data = cells
                    .iter()
                    .map(|r| r.iter().map(|c| c.parse::<BigInt>().map_err(|_| bad(c))).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Ok(ExactMatrix::Int(ZMatrix::from_rows(cols, data)))
            }
            "Q" => {
                let data = cells
                    .iter()
                    .map(|r| {
                        r.iter().map(|c| c.parse::<BigRational>().map_err(|_| bad(c))).collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(ExactMatrix::Rat(QMatrix::from_rows(cols, data)))
            }
            ring if ring.starts_with('F') => {
                let p: u64 = ring[1..].parse().map_err(|_| Error::MatrixFormat(format!("bad ring '{ring}'")))?;
                let m = Modulus::new(p)?;
                let data = cells
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|c| c.parse::<i64>().map(|x| m.from_i64(x)).map_err(|_| bad(c)))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(ExactMatrix::Mod(FpMatrix::from_rows(m, cols, &data)))
            }
            ring => Err(Error::MatrixFormat(format!("unknown ring '{ring}'"))),
        }
    }
}
