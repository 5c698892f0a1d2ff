//! Characters by the Murnaghan-Nakayama rule and decomposition of modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{partitions, Partition};
use crate::linalg::QMatrix;
use crate::perm::{factorial, Perm};
use crate::{Error, Result};

/// Conjugacy classes of `S_n` by cycle type in ascending lexicographic order:
/// `1^n` first, `n` last.
pub fn class_partitions(n: usize) -> Vec<Partition> {
    let mut p = partitions(n);
    p.reverse();
    p
}

/// Product of consecutive cycles, longest first: cycle type `32` gives
/// (123)(45).
pub fn class_representative(mu: &Partition) -> Perm {
    let n = mu.size();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut next = 1;
    for &len in mu.parts() {
        cycles.push((next..next + len).collect());
        next += len;
    }
    let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
    Perm::from_cycles(n, &refs)
}

/// One representative per class, in [`class_partitions`] order.
pub fn class_representatives(n: usize) -> Vec<Perm> {
    class_partitions(n).iter().map(class_representative).collect()
}

/// `n! / z_mu`.
pub fn class_size(mu: &Partition) -> usize {
    let mut z: usize = 1;
    let parts = mu.parts();
    let mut i = 0;
    while i < parts.len() {
        let run = parts[i..].iter().take_while(|&&q| q == parts[i]).count();
        z *= parts[i].pow(run as u32) * factorial(run);
        i += run;
    }
    factorial(mu.size()) / z
}

/// `chi_lambda` at the class of cycle type `mu`.
pub fn character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size(), "partitions of different sizes");
    let len = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    mn(&beta, mu.parts())
}

/// Removes rim hooks of the lengths in `hooks` from the beta-set `beta`.
fn mn(beta: &[usize], hooks: &[usize]) -> i64 {
    let Some((&k, rest)) = hooks.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.to_vec();
        next[i] = b - k;
        total += sign * mn(&next, rest);
    }
    total
}

/// Rows indexed by [`partitions`] (irreducibles), columns by
/// [`class_partitions`].
pub fn character_table(n: usize) -> Vec<Vec<i64>> {
    let classes = class_partitions(n);
    partitions(n).iter().map(|l| classes.iter().map(|mu| character(l, mu)).collect()).collect()
}

/// Weighted inner product `(1/n!) sum |C| a(C) b(C)` over the classes of
/// `S_n`, exact.
pub fn inner_product(n: usize, a: &[i64], b: &[i64]) -> BigRational {
    let classes = class_partitions(n);
    let num: BigInt = classes
        .iter()
        .zip(a.iter().zip(b))
        .map(|(mu, (x, y))| BigInt::from(class_size(mu)) * x * y)
        .sum();
    BigRational::new(num, BigInt::from(factorial(n)))
}

/// Traces of `action(g)` for the class representatives of `S_n`. Fails if a
/// trace is not an integer.
pub fn module_character(n: usize, action: impl Fn(&Perm) -> QMatrix) -> Result<Vec<i64>> {
    class_representatives(n)
        .iter()
        .map(|g| {
            let t = action(g).trace();
            if !t.is_integer() {
                return Err(Error::InvalidCharacter(format!("trace {t} at {g} is not an integer")));
            }
            t.to_integer().to_i64().ok_or_else(|| Error::InvalidCharacter(format!("trace {t} too large")))
        })
        .collect()
}

/// Multiplicities of the irreducibles in a character given in
/// [`class_partitions`] order. Zero multiplicities are omitted; the order is
/// that of [`partitions`].
pub fn decompose(n: usize, chi: &[i64]) -> Result<Vec<(Partition, usize)>> {
    if chi.len() != class_partitions(n).len() {
        return Err(Error::InvalidCharacter(format!(
            "expected {} class values, got {}",
            class_partitions(n).len(),
            chi.len()
        )));
    }
    let classes = class_partitions(n);
    let mut out = Vec::new();
    for lambda in partitions(n) {
        let row: Vec<i64> = classes.iter().map(|mu| character(&lambda, mu)).collect();
        let m = inner_product(n, chi, &row);
        if !m.is_integer() || m.is_negative() {
            return Err(Error::InvalidCharacter(format!("multiplicity of [{lambda}] is {m}")));
        }
        let m = m.to_integer();
        if !m.is_zero() {
            out.push((lambda, m.to_usize().expect("multiplicity fits")));
        }
    }
    Ok(out)
}

/// `3[6] + [51]`; the empty decomposition prints as `0`.
pub fn format_decomposition(parts: &[(Partition, usize)]) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    parts
        .iter()
        .map(|(l, m)| if *m == 1 { format!("[{l}]") } else { format!("{m}[{l}]") })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symrep::irrep_matrix;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn s6_classes() {
        let names: Vec<String> = class_representatives(6).iter().map(|g| g.to_string()).collect();
        assert_eq!(
            names,
            [
                "e",
                "(12)",
                "(12)(34)",
                "(12)(34)(56)",
                "(123)",
                "(123)(45)",
                "(123)(456)",
                "(1234)",
                "(1234)(56)",
                "(12345)",
                "(123456)"
            ]
        );
        assert_eq!(class_representatives(2).iter().map(|g| g.to_string()).collect::<Vec<_>>(), ["e", "(12)"]);
        assert_eq!(class_representatives(7).len(), 15);
        let sizes: usize = class_partitions(7).iter().map(class_size).sum();
        assert_eq!(sizes, 5040);
    }

    #[test]
    fn s6_rows() {
        let classes = class_partitions(6);
        let row = |l: &str| classes.iter().map(|mu| character(&p(l), mu)).collect::<Vec<_>>();
        assert_eq!(row("51"), vec![5, 3, 1, -1, 2, 0, -1, 1, -1, 0, -1]);
        assert_eq!(row("6"), vec![1; 11]);
        assert_eq!(row("1^6"), vec![1, -1, 1, -1, 1, -1, 1, -1, 1, 1, -1]);
    }

    #[test]
    fn orthogonality() {
        for n in 1..=7 {
            let t = character_table(n);
            for (i, a) in t.iter().enumerate() {
                for (j, b) in t.iter().enumerate() {
                    let expect = BigRational::from_integer(BigInt::from((i == j) as i64));
                    assert_eq!(inner_product(n, a, b), expect);
                }
            }
        }
    }

    #[test]
    fn traces_match_characters() {
        for n in 2..=6 {
            let classes = class_partitions(n);
            for lambda in partitions(n) {
                let chi = module_character(n, |g| irrep_matrix(&lambda, g).unwrap()).unwrap();
                let expect: Vec<i64> = classes.iter().map(|mu| character(&lambda, mu)).collect();
                assert_eq!(chi, expect, "{lambda}");
            }
        }
    }

    #[test]
    fn decompositions() {
        let d = decompose(6, &[8, 6, 4, 2, 5, 3, 2, 4, 2, 3, 2]).unwrap();
        assert_eq!(format_decomposition(&d), "3[6] + [51]");
        assert_eq!(decompose(6, &[0; 11]).unwrap(), vec![]);
        assert_eq!(format_decomposition(&[]), "0");
        // regular representation of S_3
        let d = decompose(3, &[6, 0, 0]).unwrap();
        assert_eq!(d, vec![(p("3"), 1), (p("21"), 2), (p("1^3"), 1)]);
        assert!(decompose(3, &[1, 0, 0]).is_err());
        assert!(decompose(3, &[1, -1, 0]).is_err());
        assert!(decompose(3, &[1, 1]).is_err());
    }

    #[test]
    fn regular_representation_by_permutation_matrices() {
        let n = 4;
        let all: Vec<Perm> = Perm::all(n).collect();
        let chi = module_character(n, |g| {
            let mut m = QMatrix::zeros(all.len(), all.len());
            for (j, h) in all.iter().enumerate() {
                let i = all.iter().position(|x| *x == g.compose(h)).unwrap();
                m.set(i, j, BigRational::from_integer(BigInt::from(1)));
            }
            m
        })
        .unwrap();
        let d = decompose(n, &chi).unwrap();
        for (lambda, mult) in d {
            assert_eq!(mult, lambda.dimension());
        }
    }
}
