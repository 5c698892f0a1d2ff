//! Degree 7 by representation theory: one small block computation per
//! irreducible representation of `S_7`.

use std::collections::BTreeMap;
use std::fmt::Write;

use rayon::prelude::*;

use crate::expansion::expand_type;
use crate::linalg::{Echelon, FpMatrix, Modulus};
use crate::magma::{association_types, CommMonomial, MultilinearBasis, Tree};
use crate::perm::lex_rank;
use crate::symrep::{decompose, format_decomposition, partitions, Partition, Representation};
use crate::{Error, Result};

const N: usize = 7;

/// A degree 7 element of the free commutative algebra as
/// `(type, lexicographic rank of the permutation, coefficient)` terms.
type GroupTerms = Vec<(usize, usize, i64)>;

/// The seven liftings of a multilinear degree 6 polynomial `f` to degree 7:
/// `x_i -> x_i x_7` for `i = 1..6`, then `f x_7`.
pub fn consequences(f: &[i64]) -> Result<Vec<BTreeMap<CommMonomial, i64>>> {
    let basis = MultilinearBasis::new(6)?;
    if f.len() != basis.len() {
        return Err(Error::DimensionMismatch(format!("{} coefficients for {} monomials", f.len(), basis.len())));
    }
    let x7 = Tree::leaf(6);
    let mut out = vec![BTreeMap::new(); 7];
    for (m, &c) in basis.monomials().iter().zip(f) {
        if c == 0 {
            continue;
        }
        let t = m.to_tree();
        for (k, acc) in out.iter_mut().enumerate() {
            let lifted = if k < 6 {
                t.substitute(k as u8, &Tree::node(Tree::leaf(k as u8), x7.clone()))
            } else {
                Tree::node(t.clone(), x7.clone())
            };
            *acc.entry(CommMonomial::from_tree(&lifted)?).or_insert(0) += c;
        }
    }
    for acc in out.iter_mut() {
        acc.retain(|_, c| *c != 0);
    }
    Ok(out)
}

/// Group algebra data for degree 7, independent of the representation.
#[derive(Debug, Clone)]
pub struct Degree7Data {
    /// `(type, rank of sigma)` with `t(identity) = t(sigma)`.
    symmetries: Vec<(usize, usize)>,
    consequences: Vec<GroupTerms>,
    /// `expansion[j][i]`: terms of `expand(type j)` with center `i`, as
    /// `(rank of the word, coefficient)`.
    expansion: Vec<Vec<Vec<(usize, i64)>>>,
}

impl Degree7Data {
    /// `generators` are multilinear degree 6 identities.
    pub fn new(generators: &[Vec<i64>]) -> Result<Degree7Data> {
        let types = association_types(N)?;
        let symmetries = crate::magma::type_symmetries(N)?
            .into_iter()
            .map(|s| (s.type_index, s.sigma.lex_rank()))
            .collect();
        let mut consequences_out = Vec::new();
        for g in generators {
            for c in consequences(g)? {
                consequences_out.push(c.into_iter().map(|(m, c)| (m.type_index, m.perm.lex_rank(), c)).collect());
            }
        }
        let expansion = types
            .par_iter()
            .map(|t| {
                let mut by_center = vec![Vec::new(); N];
                for (d, &c) in expand_type(t).iter() {
                    by_center[d.center()].push((lex_rank(d.args()), c));
                }
                by_center
            })
            .collect();
        Ok(Degree7Data { symmetries, consequences: consequences_out, expansion })
    }

    pub fn consequence_count(&self) -> usize {
        self.consequences.len()
    }

    pub fn symmetry_count(&self) -> usize {
        self.symmetries.len()
    }

    /// Ranks of the symmetries, their union with the consequences, and all
    /// identities in the representation `lambda`.
    pub fn report(&self, lambda: &Partition, modulus: Modulus) -> Result<PartitionReport> {
        if lambda.size() != N {
            return Err(Error::DimensionMismatch(format!("[{lambda}] is not a partition of {N}")));
        }
        let rep = Representation::new(lambda, modulus)?;
        let d = rep.dim();
        let ntypes = self.expansion.len();
        let cols = ntypes * d;
        // the identity permutation has rank 0
        let identity = 0;
        let mut ech = Echelon::new(modulus, cols);
        for &(j, sigma) in &self.symmetries {
            let mut block = FpMatrix::zeros(modulus, d, cols);
            rep.add_block(&mut block, 0, j * d, 1, identity);
            rep.add_block(&mut block, 0, j * d, modulus.neg(1), sigma);
            insert_rows(&mut ech, &block);
        }
        let rank_s = ech.rank();
        for terms in &self.consequences {
            let mut block = FpMatrix::zeros(modulus, d, cols);
            for &(j, r, c) in terms {
                rep.add_block(&mut block, 0, j * d, modulus.from_i64(c), r);
            }
            insert_rows(&mut ech, &block);
        }
        let rank_sc = ech.rank();
        let mut m = FpMatrix::zeros(modulus, cols, N * d);
        for (j, centers) in self.expansion.iter().enumerate() {
            for (i, terms) in centers.iter().enumerate() {
                for &(r, c) in terms {
                    rep.add_block(&mut m, j * d, i * d, modulus.from_i64(c), r);
                }
            }
        }
        let rank_n = cols - m.rank();
        // every known identity must expand to zero
        let known = FpMatrix::from_rows(modulus, cols, ech.basis_rows());
        let consistent = known.rows() == 0 || known.mul(&m).is_zero();
        Ok(PartitionReport { partition: lambda.clone(), dim: d, rank_s, rank_sc, rank_n, consistent })
    }
}

fn insert_rows(ech: &mut Echelon, block: &FpMatrix) {
    for i in 0..block.rows() {
        ech.insert(block.row(i));
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub partition: Partition,
    pub dim: usize,
    pub rank_s: usize,
    pub rank_sc: usize,
    pub rank_n: usize,
    /// Whether the known identities lie in the nullspace.
    pub consistent: bool,
}

impl PartitionReport {
    /// Multiplicity of new identities: `rank_n - rank_sc`.
    pub fn new_identities(&self) -> usize {
        self.rank_n.saturating_sub(self.rank_sc)
    }

    pub fn is_monotone(&self) -> bool {
        self.rank_s <= self.rank_sc && self.rank_sc <= self.rank_n
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degree7Table {
    pub prime: u64,
    /// In [`partitions`] order.
    pub reports: Vec<PartitionReport>,
}

impl Degree7Table {
    /// `sum new(lambda) d_lambda`.
    pub fn total(&self) -> usize {
        self.reports.iter().map(|r| r.new_identities() * r.dim).sum()
    }

    pub fn decomposition(&self) -> String {
        let parts: Vec<(Partition, usize)> = self
            .reports
            .iter()
            .filter(|r| r.new_identities() > 0)
            .map(|r| (r.partition.clone(), r.new_identities()))
            .collect();
        format_decomposition(&parts)
    }

    /// Character of the module of new identities, from the multiplicities.
    pub fn new_character(&self) -> Vec<i64> {
        let classes = crate::symrep::class_partitions(N);
        classes
            .iter()
            .map(|mu| {
                self.reports
                    .iter()
                    .map(|r| r.new_identities() as i64 * crate::symrep::character(&r.partition, mu))
                    .sum()
            })
            .collect()
    }

    /// Decomposition recomputed from [`Degree7Table::new_character`].
    pub fn check_decomposition(&self) -> Result<String> {
        Ok(format_decomposition(&decompose(N, &self.new_character())?))
    }
}

/// All fifteen partition reports at one prime, computed in parallel.
pub fn degree7_table(data: &Degree7Data, modulus: Modulus) -> Result<Degree7Table> {
    let reports = partitions(N)
        .par_iter()
        .map(|lambda| {
            let r = data.report(lambda, modulus);
            if let Ok(r) = &r {
                log::info!("[{}] d={} S={} SC={} N={}", r.partition, r.dim, r.rank_s, r.rank_sc, r.rank_n);
            }
            r
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Degree7Table { prime: modulus.p(), reports })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
}

/// Five rows: partitions, then the ranks of S, SC, N and the new
/// multiplicities.
pub fn format_degree7_table(table: &Degree7Table, format: TableFormat) -> String {
    let heads: Vec<String> = table.reports.iter().map(|r| r.partition.compact()).collect();
    let rows: [(&str, Vec<usize>); 4] = [
        ("S", table.reports.iter().map(|r| r.rank_s).collect()),
        ("SC", table.reports.iter().map(|r| r.rank_sc).collect()),
        ("N", table.reports.iter().map(|r| r.rank_n).collect()),
        ("new", table.reports.iter().map(|r| r.new_identities()).collect()),
    ];
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            let _ = writeln!(out, "lambda,{}", heads.join(","));
            for (name, vals) in &rows {
                let v: Vec<String> = vals.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "{name},{}", v.join(","));
            }
        }
        TableFormat::Text => {
            let width: Vec<usize> = heads.iter().map(|h| h.len().max(3)).collect();
            let _ = write!(out, "{:<6}", "lambda");
            for (h, w) in heads.iter().zip(&width) {
                let _ = write!(out, " {h:>w$}");
            }
            out.push('\n');
            for (name, vals) in &rows {
                let _ = write!(out, "{name:<6}");
                for (v, w) in vals.iter().zip(&width) {
                    let _ = write!(out, " {v:>w$}");
                }
                out.push('\n');
            }
        }
    }
    out
}
