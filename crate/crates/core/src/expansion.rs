//! The expansion map from commutative monomials to diassociative polynomials.
//!
//! A commutative product `u v` expands to `u ⊣ v + u ⊢ v + v ⊣ u + v ⊢ u`,
//! the symmetrized Jordan diproduct of the expansions of its factors.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::dias::{DiasMonomial, DiasPoly, Op};
use crate::linalg::{FpMatrix, Modulus, ZMatrix};
use crate::magma::{association_types, type_symmetries, AssociationType, CommMonomial, MultilinearBasis, Tree};
use crate::perm::factorial;
use crate::Result;

/// Expansion of an arbitrary labelled tree. Repeated labels are allowed.
pub fn expand(tree: &Tree) -> DiasPoly {
    expand_memo(tree, &mut HashMap::new())
}

fn expand_memo(tree: &Tree, memo: &mut HashMap<Tree, DiasPoly>) -> DiasPoly {
    if let Some(p) = memo.get(tree) {
        return p.clone();
    }
    let out = match tree {
        Tree::Leaf(x) => DiasPoly::var(*x),
        Tree::Node(l, r) => {
            let u = expand_memo(l, memo);
            let v = expand_memo(r, memo);
            let mut out = u.mul(&v, Op::Left);
            out.add_assign(&u.mul(&v, Op::Right));
            out.add_assign(&v.mul(&u, Op::Left));
            out.add_assign(&v.mul(&u, Op::Right));
            out
        }
    };
    memo.insert(tree.clone(), out.clone());
    out
}

pub fn expand_monomial(m: &CommMonomial) -> DiasPoly {
    expand_type(m.association_type()).relabel(|x| m.perm.images()[x as usize])
}

/// Expansion of a type with leaf `i` labelled `i`.
pub fn expand_type(t: &AssociationType) -> DiasPoly {
    let n = t.degree;
    expand(&t.shape.relabel_positions(&(0..n as u8).collect::<Vec<_>>()))
}

/// Expansion of a linear combination of multilinear monomials.
pub fn expand_combination(terms: &[(i64, CommMonomial)]) -> DiasPoly {
    let mut out = DiasPoly::zero();
    for (c, m) in terms {
        out.add_assign(&expand_monomial(m).scale(c));
    }
    out
}

/// Matrix of the expansion map in degree `n`: rows are the multilinear
/// diassociative monomials in [`crate::dias::enum_dias`] order, columns the
/// multilinear commutative monomials in [`crate::magma::enum_multilinear`]
/// order.
#[derive(Debug, Clone)]
pub struct ExpansionMatrix {
    degree: usize,
    basis: MultilinearBasis,
    /// Sparse columns of `(row, coefficient)`, sorted by row.
    columns: Vec<Vec<(usize, i64)>>,
}

impl ExpansionMatrix {
    pub fn new(n: usize) -> Result<ExpansionMatrix> {
        let basis = MultilinearBasis::new(n)?;
        let per_type: Vec<DiasPoly> = association_types(n)?.iter().map(expand_type).collect();
        let columns = basis
            .monomials()
            .par_iter()
            .map(|m| {
                let images = m.perm.images();
                let mut col: Vec<(usize, i64)> = per_type[m.type_index]
                    .iter()
                    .map(|(d, &c)| (d.relabel(|x| images[x as usize]).index(), c))
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        Ok(ExpansionMatrix { degree: n, basis, columns })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rows(&self) -> usize {
        self.degree * factorial(self.degree)
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn basis(&self) -> &MultilinearBasis {
        &self.basis
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.columns[j].binary_search_by_key(&i, |&(r, _)| r).map_or(0, |k| self.columns[j][k].1)
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        let mut rows = vec![vec![0i64; self.cols()]; self.rows()];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, c) in col {
                rows[i][j] = c;
            }
        }
        rows
    }

    pub fn to_z(&self) -> ZMatrix {
        ZMatrix::from_rows(
            self.cols(),
            self.to_i64_rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(),
        )
    }

    pub fn to_fp(&self, modulus: Modulus) -> FpMatrix {
        let mut m = FpMatrix::zeros(modulus, self.rows(), self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, c) in col {
                m.set(i, j, modulus.from_i64(c));
            }
        }
        m
    }

    /// Distinct coefficients occurring in the columns of one association type.
    pub fn coefficient_set(&self, type_index: usize) -> BTreeSet<i64> {
        self.columns
            .iter()
            .zip(self.basis.monomials())
            .filter(|(_, m)| m.type_index == type_index)
            .flat_map(|(col, _)| col.iter().map(|&(_, c)| c))
            .collect()
    }
}

/// The two nonlinear substitutions studied in degree 6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// Every argument equal to `x`.
    X6,
    /// Five arguments `x`, one argument `y`.
    X5Y,
}

impl Pattern {
    pub const DEGREE: usize = 6;

    pub fn name(self) -> &'static str {
        match self {
            Pattern::X6 => "x6",
            Pattern::X5Y => "x5y",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Label used for `x` in nonlinear trees; `y` is [`Y`].
pub const X: u8 = 0;
pub const Y: u8 = 1;

/// A nonlinear monomial: an association type with `y` at leaf `y_position`
/// (or no `y` at all).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NonlinearMonomial {
    pub type_index: usize,
    pub y_position: Option<usize>,
}

impl NonlinearMonomial {
    pub fn tree(&self) -> Tree {
        let t = &association_types(Pattern::DEGREE).expect("degree 6 is supported")[self.type_index];
        let labels: Vec<u8> =
            (0..Pattern::DEGREE).map(|i| if Some(i) == self.y_position { Y } else { X }).collect();
        t.shape.relabel_positions(&labels)
    }
}

fn xy_name(x: u8) -> String {
    if x == Y { "y" } else { "x" }.to_string()
}

impl fmt::Display for NonlinearMonomial {
    /// `((x^2x)x)(xy)` style, with squares abbreviated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tree().render(&xy_name, true))
    }
}

/// For each leaf position, the largest position in its orbit under the
/// automorphisms of the type's shape.
pub fn orbit_maxima(n: usize, type_index: usize) -> Result<Vec<usize>> {
    let gens: Vec<_> =
        type_symmetries(n)?.into_iter().filter(|s| s.type_index == type_index).map(|s| s.sigma).collect();
    let mut best: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for g in &gens {
            for i in 0..n {
                let j = g.apply(i);
                if best[j] > best[i] {
                    best[i] = best[j];
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(best);
        }
    }
}

/// Column basis of the collapsed matrix: by type, and for `x^5 y` by the
/// position of `y` among orbit representatives, rightmost first.
pub fn nonlinear_basis(pattern: Pattern) -> Vec<NonlinearMonomial> {
    let n = Pattern::DEGREE;
    let types = association_types(n).expect("degree 6 is supported");
    let mut out = Vec::new();
    for t in types {
        match pattern {
            Pattern::X6 => out.push(NonlinearMonomial { type_index: t.index, y_position: None }),
            Pattern::X5Y => {
                let best = orbit_maxima(n, t.index).expect("degree 6 is supported");
                for q in (0..n).rev().filter(|&q| best[q] == q) {
                    out.push(NonlinearMonomial { type_index: t.index, y_position: Some(q) });
                }
            }
        }
    }
    out
}

/// Column of a nonlinear tree in [`nonlinear_basis`].
pub fn nonlinear_index(pattern: Pattern, tree: &Tree) -> Option<usize> {
    let n = Pattern::DEGREE;
    if tree.size() != n {
        return None;
    }
    let leaves = tree.leaves();
    let ys: Vec<usize> = (0..n).filter(|&i| leaves[i] == Y).collect();
    // relabel the leaves by position so that straightening tracks y
    let positional = tree.relabel_positions(&(0..n as u8).collect::<Vec<_>>());
    let m = CommMonomial::from_tree(&positional).ok()?;
    let y_position = match (pattern, ys.as_slice()) {
        (Pattern::X6, []) => None,
        (Pattern::X5Y, [q]) => {
            let at = m.perm.images().iter().position(|&x| x as usize == *q)?;
            Some(orbit_maxima(n, m.type_index).ok()?[at])
        }
        _ => return None,
    };
    let key = NonlinearMonomial { type_index: m.type_index, y_position };
    nonlinear_basis(pattern).iter().position(|b| *b == key)
}

/// Row labels of the collapsed matrix: for `x^6` the six center positions;
/// for `x^5 y` center major, then the words in lexicographic order with
/// `x < y` (so `y` rightmost first).
pub fn collapsed_rows(pattern: Pattern) -> Vec<DiasMonomial> {
    let n = Pattern::DEGREE;
    let mut out = Vec::new();
    for c in 0..n {
        match pattern {
            Pattern::X6 => out.push(DiasMonomial::new(vec![X; n], c)),
            Pattern::X5Y => {
                for q in (0..n).rev() {
                    let mut w = vec![X; n];
                    w[q] = Y;
                    out.push(DiasMonomial::new(w, c));
                }
            }
        }
    }
    out
}

pub fn render_collapsed_row(m: &DiasMonomial) -> String {
    m.render(&xy_name)
}

fn collapsed_row(pattern: Pattern, center: usize, y_at: Option<usize>) -> usize {
    match pattern {
        Pattern::X6 => center,
        Pattern::X5Y => center * Pattern::DEGREE + Pattern::DEGREE - 1 - y_at.expect("x^5 y words contain y"),
    }
}

/// Expansion matrix of the nonlinear monomials: equal diassociative words are
/// merged after substituting the repeated variable.
pub fn collapsed_matrix(pattern: Pattern) -> ZMatrix {
    let n = Pattern::DEGREE;
    let types = association_types(n).expect("degree 6 is supported");
    let expansions: Vec<DiasPoly> = types.iter().map(expand_type).collect();
    let basis = nonlinear_basis(pattern);
    let rows = collapsed_rows(pattern).len();
    let mut m = vec![vec![0i64; basis.len()]; rows];
    for (j, b) in basis.iter().enumerate() {
        for (d, &c) in expansions[b.type_index].iter() {
            let y_at = b.y_position.map(|q| d.args().iter().position(|&x| x as usize == q).expect("label present"));
            m[collapsed_row(pattern, d.center(), y_at)][j] += c;
        }
    }
    ZMatrix::from_i64(&m)
}

/// Expansion of a nonlinear combination, with `x` and `y` words merged.
pub fn expand_nonlinear(pattern: Pattern, coeffs: &[i64]) -> DiasPoly {
    let mut out = DiasPoly::zero();
    for (b, &c) in nonlinear_basis(pattern).iter().zip(coeffs) {
        if c != 0 {
            out.add_assign(&expand(&b.tree()).scale(&c));
        }
    }
    out
}

/// Outcome of evaluating one identity on the free diassociative algebra.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub residual: DiasPoly,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

fn permutations_of(labels: &[u8]) -> Vec<Vec<u8>> {
    use itertools::Itertools;
    labels.iter().copied().permutations(labels.len()).collect()
}

/// The defining identities of a Jordan dialgebra for the diproduct
/// `a·b = a ⊣ b + b ⊢ a`, each fully linearized:
///
/// * `x·(y·z) = x·(z·y)`
/// * `(y·x)·x² = (y·x²)·x`
/// * `(y, x², z) = 2 (y, x, z)·x` with `(a, b, c) = (a·b)·c - a·(b·c)`.
pub fn check_jordan_dialgebra_identities() -> Vec<IdentityCheck> {
    let v = |x: u8| DiasPoly::<i64>::var(x);
    let j = |a: &DiasPoly, b: &DiasPoly| a.jordan(b);
    let assoc = |a: &DiasPoly, b: &DiasPoly, c: &DiasPoly| j(&j(a, b), c).sub(&j(a, &j(b, c)));

    let (x, y, z) = (v(0), v(1), v(2));
    let first = j(&x, &j(&y, &z)).sub(&j(&x, &j(&z, &y)));

    // y = 0, x -> x1, x2, x3 = 1, 2, 3
    let mut second = DiasPoly::zero();
    for p in permutations_of(&[1, 2, 3]) {
        let (a, b, c) = (v(p[0]), v(p[1]), v(p[2]));
        second.add_assign(&j(&j(&v(0), &a), &j(&b, &c)));
        second = second.sub(&j(&j(&v(0), &j(&a, &b)), &c));
    }

    // y = 0, z = 3, x -> x1, x2 = 1, 2
    let mut third = DiasPoly::zero();
    for p in permutations_of(&[1, 2]) {
        let (a, b) = (v(p[0]), v(p[1]));
        third.add_assign(&assoc(&v(0), &j(&a, &b), &v(3)));
        third = third.sub(&j(&assoc(&v(0), &a, &v(3)), &b).scale(&2));
    }

    vec![
        IdentityCheck { name: "x(yz) = x(zy)", residual: first },
        IdentityCheck { name: "(yx)x^2 = (yx^2)x", residual: second },
        IdentityCheck { name: "(y,x^2,z) = 2(y,x,z)x", residual: third },
    ]
}

/// `(y, x², z) - 2 (y, x, z)·z` evaluated with `x, y, z` as single letters.
/// The two sides have different multidegrees, so this does not vanish.
pub fn literal_third_identity_residual() -> DiasPoly {
    let v = |x: u8| DiasPoly::<i64>::var(x);
    let j = |a: &DiasPoly, b: &DiasPoly| a.jordan(b);
    let assoc = |a: &DiasPoly, b: &DiasPoly, c: &DiasPoly| j(&j(a, b), c).sub(&j(a, &j(b, c)));
    let (x, y, z) = (v(0), v(1), v(2));
    assoc(&y, &j(&x, &x), &z).sub(&j(&assoc(&y, &x, &z), &z).scale(&2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::letter;
    use crate::parse::parse_monomial;
    use crate::perm::Perm;

    fn tree(s: &str) -> Tree {
        parse_monomial(s).unwrap().tree
    }

    #[test]
    fn degree_two_and_three() {
        assert_eq!(expand(&tree("ab")).to_string(), "[a]b + [b]a + a[b] + b[a]");
        let e = expand(&tree("(ab)c"));
        assert_eq!(
            e.to_string(),
            "[a]bc + [b]ac + 2 [c]ab + 2 [c]ba + a[b]c + b[a]c + c[a]b + c[b]a + 2 ab[c] + 2 ba[c] + ca[b] + cb[a]"
        );
    }

    #[test]
    fn coefficient_sums_are_powers_of_four() {
        for n in 2..=7 {
            for t in association_types(n).unwrap() {
                let e = expand_type(t);
                let total: i64 = e.iter().map(|(_, &c)| c).sum();
                assert_eq!(total, 4i64.pow(n as u32 - 1));
                assert!(e.iter().all(|(_, &c)| c > 0 && (c as u64).is_power_of_two()));
            }
        }
    }

    #[test]
    fn symmetries_lie_in_the_kernel() {
        for n in 3..=7 {
            for s in type_symmetries(n).unwrap() {
                let t = &association_types(n).unwrap()[s.type_index];
                let a = expand(&t.apply(&Perm::identity(n)));
                let b = expand(&t.apply(&s.sigma));
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn equivariance_degree_four() {
        let basis = MultilinearBasis::new(4).unwrap();
        for m in basis.monomials() {
            let e = expand_monomial(m);
            for sigma in Perm::all(4) {
                let lhs = expand_monomial(&m.act(&sigma));
                let rhs = e.relabel(|x| sigma.images()[x as usize]);
                assert_eq!(lhs, rhs, "{m} under {sigma}");
            }
        }
    }

    #[test]
    fn matrix_shapes() {
        for (n, rows, cols) in [(3, 18, 3), (4, 96, 15), (5, 600, 105)] {
            let e = ExpansionMatrix::new(n).unwrap();
            assert_eq!((e.rows(), e.cols()), (rows, cols));
        }
        let e3 = ExpansionMatrix::new(3).unwrap();
        assert_eq!(e3.get(0, 0), 1);
        // rows [a]bc, [a]cb, [b]ac, ..
        assert_eq!(e3.get(1, 0), 0);
        assert_eq!(e3.get(2, 0), 1);
        assert_eq!(e3.to_z().rank(), 3);
    }

    #[test]
    fn nonlinear_bases() {
        let b6: Vec<String> = nonlinear_basis(Pattern::X6).iter().map(|m| m.to_string()).collect();
        assert_eq!(b6.len(), 6);
        assert_eq!(b6[0], "(((x^2x)x)x)x");
        assert_eq!(nonlinear_basis(Pattern::X5Y).len(), 20);
        assert_eq!(collapsed_rows(Pattern::X5Y).len(), 36);
        for (i, m) in nonlinear_basis(Pattern::X5Y).iter().enumerate() {
            assert_eq!(nonlinear_index(Pattern::X5Y, &m.tree()), Some(i));
        }
        let e = collapsed_matrix(Pattern::X6);
        for j in 0..6 {
            let s: BigInt = (0..6).map(|i| e.get(i, j).clone()).sum();
            assert_eq!(s, BigInt::from(1024));
        }
    }

    #[test]
    fn jordan_dialgebra_identities() {
        for c in check_jordan_dialgebra_identities() {
            assert!(c.holds(), "{}: {}", c.name, c.residual.render(&letter));
        }
        assert!(!literal_third_identity_residual().is_zero());
    }
}
