use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use dialg_core::expansion::expand_monomial;
use dialg_core::linalg::lll::{gram_determinant, is_lll_reduced};
use dialg_core::linalg::{hnf_with_transform, lll_reduce, rational_reconstruct, same_lattice, Modulus, ZMatrix};
use dialg_core::magma::{association_types, CommMonomial, MultilinearBasis};
use dialg_core::perm::{factorial, Perm};
use dialg_core::symrep::{irrep_matrix, partitions};

fn int_matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = ZMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-bound..=bound, c), r)
            .prop_map(|rows| ZMatrix::from_i64(&rows))
    })
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    (0..factorial(n)).prop_map(move |r| Perm::from_lex_rank(n, r))
}

fn monomial() -> impl Strategy<Value = CommMonomial> {
    (3usize..=6).prop_flat_map(|n| {
        let types = association_types(n).unwrap().len();
        (0..types, perm(n)).prop_map(move |(t, p)| {
            CommMonomial::from_tree(&association_types(n).unwrap()[t].apply(&p)).unwrap()
        })
    })
}

fn is_hnf(h: &ZMatrix, rank: usize) -> bool {
    let mut last: Option<usize> = None;
    for i in 0..h.rows() {
        let lead = h.row(i).iter().position(|x| !x.is_zero());
        match lead {
            None => {
                if i < rank {
                    return false;
                }
            }
            Some(c) => {
                if i >= rank || last.is_some_and(|l| c <= l) || !h.get(i, c).is_positive() {
                    return false;
                }
                for k in 0..i {
                    let x = h.get(k, c);
                    if x.is_negative() || x >= h.get(i, c) {
                        return false;
                    }
                }
                last = Some(c);
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn hnf_transform_is_unimodular(a in int_matrix(6, 6, 12)) {
        let r = hnf_with_transform(&a);
        prop_assert_eq!(r.u.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(r.u.mul(&a), r.h.clone());
        prop_assert!(is_hnf(&r.h, r.rank));
        prop_assert_eq!(r.rank, a.rank());
        prop_assert!(r.left_kernel().mul(&a).is_zero());
    }

    #[test]
    fn lll_preserves_the_lattice(a in int_matrix(5, 7, 30)) {
        prop_assume!(a.rank() == a.rows());
        let b = lll_reduce(&a).unwrap();
        prop_assert!(same_lattice(&a, &b));
        prop_assert!(is_lll_reduced(&b));
        prop_assert_eq!(gram_determinant(&a), gram_determinant(&b));
    }

    #[test]
    fn reconstruction_round_trip(
        v in proptest::collection::vec(-500i64..=500, 1..40),
        scale in 1u64..=12,
    ) {
        let m = Modulus::new(1_000_003).unwrap();
        let inv = m.inv(m.from_i64(scale as i64));
        let row: Vec<u32> = v.iter().map(|&x| m.mul(m.from_i64(x), inv)).collect();
        let g = v.iter().fold(0i64, |g, x| g.gcd(x));
        let expect: Vec<i64> = if g == 0 { v.clone() } else { v.iter().map(|x| x / g).collect() };
        prop_assert_eq!(rational_reconstruct(&row, m, scale), expect);
    }

    #[test]
    fn expansion_is_equivariant(m in monomial(), seed in 0usize..5040) {
        let n = m.degree();
        let sigma = Perm::from_lex_rank(n, seed % factorial(n));
        let lhs = expand_monomial(&m.act(&sigma));
        let rhs = expand_monomial(&m).relabel(|x| sigma.images()[x as usize]);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn straightening_is_canonical(m in monomial(), seed in 0usize..720) {
        let n = m.degree();
        let sigma = Perm::from_lex_rank(n, seed % factorial(n));
        let image = m.act(&sigma);
        prop_assert!(image.is_canonical());
        prop_assert_eq!(CommMonomial::from_tree(&image.to_tree()).unwrap(), image.clone());
        prop_assert_eq!(image.act(&sigma.inverse()), m.clone());
        prop_assert!(MultilinearBasis::new(n).unwrap().index_of(&image).is_some());
    }

    #[test]
    fn irreducible_matrices_are_homomorphic(
        n in 2usize..=6,
        which in 0usize..11,
        a in 0usize..720,
        b in 0usize..720,
    ) {
        let ps = partitions(n);
        let lambda = &ps[which % ps.len()];
        let s = Perm::from_lex_rank(n, a % factorial(n));
        let t = Perm::from_lex_rank(n, b % factorial(n));
        let lhs = irrep_matrix(lambda, &s.compose(&t)).unwrap();
        let rhs = irrep_matrix(lambda, &s).unwrap().mul(&irrep_matrix(lambda, &t).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lex_rank_round_trip(n in 1usize..=7, r in 0usize..5040) {
        let r = r % factorial(n);
        prop_assert_eq!(Perm::from_lex_rank(n, r).lex_rank(), r);
    }
}
