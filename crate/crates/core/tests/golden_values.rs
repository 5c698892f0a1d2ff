//! Published expansions and matrices compared with the computed ones.

use dialg_core::expansion::{expand, ExpansionMatrix};
use dialg_core::golden;
use dialg_core::magma::letter;
use dialg_core::parse::parse_multilinear;

#[test]
fn degree5_expansions_match_the_published_lists() {
    for (src, terms) in golden::degree5_expansions() {
        let m = parse_multilinear(&src).unwrap();
        let poly = expand(&m.tree);
        let got: Vec<(i64, String)> = poly.iter().map(|(d, &c)| (c, d.render(&letter))).collect();
        assert_eq!(got, terms, "{src}");
    }
}

#[test]
fn degree3_matrix_is_the_published_transpose() {
    let e = ExpansionMatrix::new(3).unwrap().to_z();
    assert_eq!(e.transpose(), golden::degree3_transpose());
}

#[test]
fn degree4_submatrix_has_full_rank() {
    let e = ExpansionMatrix::new(4).unwrap().to_z();
    let sub = e.select_rows(&golden::DEGREE4_SUBMATRIX_ROWS);
    assert_eq!(sub, golden::degree4_submatrix());
    assert_ne!(sub.determinant(), 0.into());
}
