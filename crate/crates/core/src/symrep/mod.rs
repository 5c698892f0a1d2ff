//! Symmetric group combinatorics: partitions, standard tableaux, Young's
//! seminormal representations, characters and module decomposition.

mod characters;
mod young;

use std::fmt;

use crate::perm::factorial;
use crate::{Error, Result};

pub use characters::{
    character, character_table, class_partitions, class_representative, class_representatives, class_size,
    decompose, format_decomposition, inner_product, module_character,
};
pub use young::{group_algebra_block, irrep_matrix, seminormal_generators, Representation};

/// A partition of `n` with parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((0..first).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn dimension(&self) -> usize {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks *= (row - j + conj.0[j] - i - 1) as u128;
            }
        }
        (factorial(self.size()) as u128 / hooks) as usize
    }

    /// Parses the compact notation, e.g. `421`, `51^2` or `51²`.
    /// ASCII form with exponents after `^`: `51^2`, `2^21^3`.
    pub fn compact(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let run = self.0[i..].iter().take_while(|&&q| q == p).count();
            out.push_str(&p.to_string());
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            i += run;
        }
        out
    }

    pub fn parse(s: &str) -> Result<Partition> {
        let bad = || Error::InvalidCharacter(format!("cannot parse partition '{s}'"));
        let mut parts = Vec::new();
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            let part = c.to_digit(10).ok_or_else(bad)? as usize;
            let mut exp = String::new();
            if chars.peek() == Some(&'^') {
                chars.next();
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    exp.push(char::from_digit(d, 10).unwrap());
                    chars.next();
                }
            } else {
                while let Some(d) = chars.peek().and_then(|&c| superscript_value(c)) {
                    exp.push(char::from_digit(d, 10).unwrap());
                    chars.next();
                }
            }
            let times = if exp.is_empty() { 1 } else { exp.parse().map_err(|_| bad())? };
            if part == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat_n(part, times));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad());
        }
        Ok(Partition(parts))
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn superscript_value(c: char) -> Option<u32> {
    SUPERSCRIPTS.iter().position(|&s| s == c).map(|i| i as u32)
}

impl fmt::Display for Partition {
    /// Repeated parts use exponents: `3²1`, `1⁷`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let run = self.0[i..].iter().take_while(|&&q| q == p).count();
            write!(f, "{p}")?;
            if run > 1 {
                for d in run.to_string().chars() {
                    write!(f, "{}", SUPERSCRIPTS[d.to_digit(10).unwrap() as usize])?;
                }
            }
            i += run;
        }
        Ok(())
    }
}

/// All partitions of `n` in reverse lexicographic order: `n` first, `1^n`
/// last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn irrep_dim(lambda: &Partition) -> usize {
    lambda.dimension()
}

/// A standard Young tableau stored as the row of each entry `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<u8>,
    cols: Vec<u8>,
}

impl Tableau {
    pub fn row_of(&self, k: usize) -> usize {
        self.rows[k] as usize
    }

    pub fn col_of(&self, k: usize) -> usize {
        self.cols[k] as usize
    }

    /// `col - row` of the cell holding `k`.
    pub fn content(&self, k: usize) -> i64 {
        self.cols[k] as i64 - self.rows[k] as i64
    }

    /// Exchanges the entries `k` and `k + 1`.
    pub fn swapped(&self, k: usize) -> Tableau {
        let mut t = self.clone();
        t.rows.swap(k, k + 1);
        t.cols.swap(k, k + 1);
        t
    }
}

/// Standard tableaux of shape `lambda`, ordered lexicographically by the
/// sequence of rows holding `0, 1, ..`.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    fn go(lambda: &[usize], fill: &mut Vec<usize>, t: &mut Tableau, out: &mut Vec<Tableau>, left: usize) {
        if left == 0 {
            out.push(t.clone());
            return;
        }
        for r in 0..lambda.len() {
            if fill[r] < lambda[r] && (r == 0 || fill[r] < fill[r - 1]) {
                t.rows.push(r as u8);
                t.cols.push(fill[r] as u8);
                fill[r] += 1;
                go(lambda, fill, t, out, left - 1);
                fill[r] -= 1;
                t.rows.pop();
                t.cols.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut t = Tableau { rows: Vec::new(), cols: Vec::new() };
    go(&lambda.0, &mut vec![0; lambda.len()], &mut t, &mut out, lambda.size());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_lists() {
        assert_eq!(partitions(1), vec![Partition(vec![1])]);
        assert_eq!(partitions(7).len(), 15);
        assert_eq!(partitions(6).len(), 11);
        let names: Vec<String> = partitions(7).iter().map(|p| p.to_string()).collect();
        assert_eq!(
            names,
            ["7", "61", "52", "51²", "43", "421", "41³", "3²1", "32²", "321²", "31⁴", "2³1", "2²1³", "21⁵", "1⁷"]
        );
    }

    #[test]
    fn dimensions() {
        let d = |s: &str| Partition::parse(s).unwrap().dimension();
        assert_eq!(d("7"), 1);
        assert_eq!(d("421"), 35);
        assert_eq!(d("61"), 6);
        assert_eq!(d("1^7"), 1);
        assert_eq!(d("3²1"), 21);
        for n in 1..=7 {
            let sum: usize = partitions(n).iter().map(|p| p.dimension().pow(2)).sum();
            assert_eq!(sum, factorial(n));
            for p in partitions(n) {
                assert_eq!(standard_tableaux(&p).len(), p.dimension(), "{p}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        for p in partitions(7) {
            assert_eq!(Partition::parse(&p.to_string()).unwrap(), p);
        }
        assert_eq!(Partition::parse("51^2").unwrap(), Partition::new(vec![5, 1, 1]));
        assert!(Partition::parse("15").is_err());
        assert!(Partition::parse("4x").is_err());
        assert_eq!(Partition::new(vec![1, 0, 3, 1]).parts(), &[3, 1, 1]);
        assert_eq!(Partition::new(vec![3, 1, 1]).conjugate(), Partition::new(vec![3, 1, 1]));
        assert_eq!(Partition::new(vec![4, 2]).conjugate(), Partition::new(vec![2, 2, 1, 1]));
    }
}
