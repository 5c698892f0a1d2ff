//! Permutations of `{0, .., n-1}` stored in one-line notation.
//!
//! Composition follows the functional convention: `(s * t)(i) = s(t(i))`.

use std::fmt;
use std::ops::Mul;

use itertools::Itertools;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// Builds a permutation from its images. Returns `None` unless `images`
    /// is a rearrangement of `0..images.len()`.
    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(images))
    }

    /// Builds a permutation of degree `n` from disjoint cycles written with
    /// 1-based points, e.g. `&[&[1, 2, 3], &[4, 5]]` for (123)(45).
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Self {
        let mut images: Vec<u8> = (0..n as u8).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                images[a - 1] = (b - 1) as u8;
            }
        }
        Perm::from_images(images).expect("cycles must be disjoint and within degree")
    }

    /// Transposition of the 0-based points `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<u8> = (0..n as u8).collect();
        images.swap(i, j);
        Perm(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn sign(&self) -> i64 {
        let even = self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0;
        if even {
            1
        } else {
            -1
        }
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, num_integer::lcm)
    }

    /// Index of this permutation in the lexicographic listing of `S_n`.
    pub fn lex_rank(&self) -> usize {
        lex_rank(&self.0)
    }

    pub fn from_lex_rank(n: usize, mut rank: usize) -> Perm {
        let mut pool: Vec<u8> = (0..n as u8).collect();
        let mut images = Vec::with_capacity(n);
        let mut f = factorial(n);
        for k in (1..=n).rev() {
            f /= k;
            let idx = rank / f;
            rank %= f;
            images.push(pool.remove(idx));
        }
        Perm(images)
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        (0..n as u8).permutations(n).map(Perm)
    }
}

/// Lexicographic rank of a word that is a rearrangement of `0..w.len()`.
pub fn lex_rank(w: &[u8]) -> usize {
    let n = w.len();
    let mut rank = 0;
    let mut used: u32 = 0;
    for (i, &x) in w.iter().enumerate() {
        let smaller_unused = (x as u32) - (used & ((1u32 << x) - 1)).count_ones();
        rank = rank * (n - i) + smaller_unused as usize;
        used |= 1 << x;
    }
    rank
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "e");
        }
        for c in nontrivial {
            write!(f, "(")?;
            let sep = if self.degree() > 9 { "," } else { "" };
            write!(f, "{}", c.iter().map(|x| (x + 1).to_string()).join(sep))?;
            write!(f, ")")?;
        }
        Ok(())
    }
}
