//! Published reference values, shipped as data files under `golden/`.

use std::collections::BTreeSet;

use crate::linalg::{ExactMatrix, ZMatrix};

const DEGREE3_TRANSPOSE: &str = include_str!("../golden/degree3_transpose.txt");
const DEGREE4_SUBMATRIX: &str = include_str!("../golden/degree4_submatrix.txt");
const DEGREE5_EXPANSIONS: &str = include_str!("../golden/degree5_expansions.txt");
const DEGREE5_ROW_BASIS: &str = include_str!("../golden/degree5_row_basis.txt");
const DEGREE6_RECONSTRUCTION: &str = include_str!("../golden/degree6_reconstruction.txt");
const DEGREE6_RESIDUES: &str = include_str!("../golden/degree6_residues.txt");
const DEGREE6_MODULE: &str = include_str!("../golden/degree6_module.txt");
const DEGREE7_TABLE: &str = include_str!("../golden/degree7_table.txt");
const X6_EXPANSION: &str = include_str!("../golden/x6_expansion.txt");
const X6_TRANSFORM: &str = include_str!("../golden/x6_transform.txt");
const X6_IDENTITIES: &str = include_str!("../golden/x6_identities.txt");
const X5Y_EXPANSION: &str = include_str!("../golden/x5y_expansion.txt");
const X5Y_IDENTITIES: &str = include_str!("../golden/x5y_identities.txt");
const X5Y_BASIS: &str = include_str!("../golden/x5y_basis.txt");

/// Rank of the degree 6 expansion matrix and the nullity it leaves.
pub const DEGREE6_RANK: usize = 937;
pub const DEGREE6_NULLITY: usize = 8;
/// Scale applied to the degree 6 nullspace rows before lifting.
pub const DEGREE6_SCALE: u64 = 4;
/// Rows (0-based) of the full-rank degree 4 submatrix.
pub const DEGREE4_SUBMATRIX_ROWS: [usize; 15] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 24];

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn int_matrix(text: &str) -> ZMatrix {
    match ExactMatrix::from_text(text).expect("golden matrix parses") {
        ExactMatrix::Int(m) => m,
        other => panic!("golden matrix over {} instead of Z", other.ring()),
    }
}

/// `a-b` ranges and single values, inclusive.
fn ranges(text: &str) -> Vec<u64> {
    let mut out = Vec::new();
    for tok in data_lines(text).flat_map(str::split_whitespace) {
        match tok.split_once('-') {
            Some((a, b)) => out.extend(a.parse::<u64>().unwrap()..=b.parse::<u64>().unwrap()),
            None => out.push(tok.parse().unwrap()),
        }
    }
    out
}

fn keyed<'a>(text: &'a str, key: &str) -> &'a str {
    data_lines(text)
        .find_map(|l| l.strip_prefix(key).map(|rest| rest.trim_start_matches(':').trim()))
        .unwrap_or_else(|| panic!("golden key '{key}' missing"))
}

fn ints(s: &str) -> Vec<i64> {
    s.split_whitespace().map(|x| x.parse().unwrap()).collect()
}

/// 3 x 18 transpose of the degree 3 expansion matrix.
pub fn degree3_transpose() -> ZMatrix {
    int_matrix(DEGREE3_TRANSPOSE)
}

/// Rows [`DEGREE4_SUBMATRIX_ROWS`] of the degree 4 expansion matrix.
pub fn degree4_submatrix() -> ZMatrix {
    int_matrix(DEGREE4_SUBMATRIX)
}

/// Expansions of the three degree 5 types with the identity permutation:
/// `(monomial, [(coefficient, word)])`, words written as `ab[c]de`.
pub fn degree5_expansions() -> Vec<(String, Vec<(i64, String)>)> {
    let mut out: Vec<(String, Vec<(i64, String)>)> = Vec::new();
    for line in data_lines(DEGREE5_EXPANSIONS) {
        match line.split_once(' ') {
            Some((c, w)) => out.last_mut().expect("term before monomial").1.push((c.parse().unwrap(), w.to_string())),
            None => out.push((line.to_string(), Vec::new())),
        }
    }
    out
}

/// Lexicographically first row basis of the degree 5 expansion matrix,
/// 0-based.
pub fn degree5_row_basis() -> Vec<usize> {
    ranges(DEGREE5_ROW_BASIS).into_iter().map(|r| r as usize - 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructedRow {
    pub nonzero: usize,
    pub entries: BTreeSet<i64>,
}

pub fn degree6_reconstruction() -> Vec<ReconstructedRow> {
    data_lines(DEGREE6_RECONSTRUCTION)
        .map(|l| {
            let (head, tail) = l.split_once(':').expect("row has ':'");
            let head = ints(head);
            ReconstructedRow { nonzero: head[1] as usize, entries: ints(tail).into_iter().collect() }
        })
        .collect()
}

/// Residue classes occurring in the degree 6 nullspace basis mod 1000003.
pub fn degree6_residues() -> BTreeSet<u32> {
    ranges(DEGREE6_RESIDUES).into_iter().map(|r| r as u32).collect()
}

pub fn degree6_character() -> Vec<i64> {
    ints(keyed(DEGREE6_MODULE, "character"))
}

pub fn degree6_decomposition() -> String {
    keyed(DEGREE6_MODULE, "decomposition").to_string()
}

pub fn x6_expansion() -> ZMatrix {
    int_matrix(X6_EXPANSION)
}

pub fn x6_transform() -> ZMatrix {
    int_matrix(X6_TRANSFORM)
}

pub fn x5y_expansion() -> ZMatrix {
    int_matrix(X5Y_EXPANSION)
}

pub fn x6_identities() -> Vec<String> {
    data_lines(X6_IDENTITIES).map(str::to_string).collect()
}

pub fn x5y_identities() -> Vec<String> {
    data_lines(X5Y_IDENTITIES).map(str::to_string).collect()
}

pub fn x5y_basis() -> Vec<String> {
    data_lines(X5Y_BASIS).map(str::to_string).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degree7Table {
    /// Column heads in compact notation (`51^2`).
    pub partitions: Vec<String>,
    pub rank_s: Vec<usize>,
    pub rank_sc: Vec<usize>,
    pub rank_n: Vec<usize>,
    pub new: Vec<usize>,
    pub total: usize,
    pub decomposition: String,
}

pub fn degree7_table() -> Degree7Table {
    let row = |key: &str| -> Vec<usize> {
        let line = data_lines(DEGREE7_TABLE)
            .find(|l| l.split_whitespace().next() == Some(key))
            .unwrap_or_else(|| panic!("row {key} missing"));
        line.split_whitespace().skip(1).map(|x| x.parse().unwrap()).collect()
    };
    let partitions = data_lines(DEGREE7_TABLE)
        .find(|l| l.starts_with("lambda"))
        .expect("header row")
        .split_whitespace()
        .skip(1)
        .map(str::to_string)
        .collect();
    Degree7Table {
        partitions,
        rank_s: row("S"),
        rank_sc: row("SC"),
        rank_n: row("N"),
        new: row("new"),
        total: row("total")[0],
        decomposition: keyed(DEGREE7_TABLE, "decomposition").to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn files_parse_with_expected_shapes() {
        assert_eq!((degree3_transpose().rows(), degree3_transpose().cols()), (3, 18));
        assert_eq!((degree4_submatrix().rows(), degree4_submatrix().cols()), (15, 15));
        assert_eq!(degree5_row_basis().len(), 105);
        let ex = degree5_expansions();
        assert_eq!(ex.len(), 3);
        assert!(ex.iter().all(|(_, t)| t.len() == 80 && t.iter().map(|x| x.0).sum::<i64>() == 256));
        assert_eq!(degree6_reconstruction().len(), 8);
        assert_eq!(degree6_residues().len(), 33);
        assert_eq!(degree6_character().len(), 11);
        assert_eq!((x6_expansion().rows(), x6_expansion().cols()), (6, 6));
        assert_eq!((x5y_expansion().rows(), x5y_expansion().cols()), (36, 20));
        assert_eq!(x6_identities().len(), 3);
        assert_eq!(x5y_identities().len(), 4);
        assert_eq!(x5y_basis().len(), 20);
        let t = degree7_table();
        assert_eq!(t.partitions.len(), 15);
        for r in [&t.rank_s, &t.rank_sc, &t.rank_n, &t.new] {
            assert_eq!(r.len(), 15);
        }
        assert_eq!(t.total, 570);
    }
}
