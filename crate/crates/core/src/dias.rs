//! Diassociative monomials in Loday normal form.
//!
//! Every monomial in `⊢` and `⊣` equals `x1 ⊢ ... ⊢ x_i ⊣ ... ⊣ x_n` for a
//! unique center `x_i`, so a monomial is stored as its argument word plus the
//! center position.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::magma::letter;
use crate::perm::{factorial, lex_rank, Perm};
use crate::{Error, Result};

/// Product symbol: `Right` is `⊢` (the center comes from the right factor),
/// `Left` is `⊣` (the center comes from the left factor).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Right,
    Left,
}

/// Ordered by center position, then by argument word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiasMonomial {
    center: usize,
    args: Vec<u8>,
}

impl DiasMonomial {
    /// `center` is a 0-based position into `args`.
    pub fn new(args: Vec<u8>, center: usize) -> Self {
        assert!(center < args.len(), "center out of range");
        DiasMonomial { center, args }
    }

    pub fn var(label: u8) -> Self {
        DiasMonomial { center: 0, args: vec![label] }
    }

    pub fn args(&self) -> &[u8] {
        &self.args
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn degree(&self) -> usize {
        self.args.len()
    }

    pub fn mul(&self, other: &DiasMonomial, op: Op) -> Result<DiasMonomial> {
        if self.args.iter().any(|a| other.args.contains(a)) {
            return Err(Error::OverlappingLabels);
        }
        Ok(self.mul_unchecked(other, op))
    }

    /// Product without the disjointness check; used for nonlinear words.
    pub fn mul_unchecked(&self, other: &DiasMonomial, op: Op) -> DiasMonomial {
        let mut args = Vec::with_capacity(self.args.len() + other.args.len());
        args.extend_from_slice(&self.args);
        args.extend_from_slice(&other.args);
        let center = match op {
            Op::Right => self.args.len() + other.center,
            Op::Left => self.center,
        };
        DiasMonomial { center, args }
    }

    pub fn relabel(&self, f: impl Fn(u8) -> u8) -> DiasMonomial {
        DiasMonomial { center: self.center, args: self.args.iter().map(|&a| f(a)).collect() }
    }

    /// Row of this monomial in [`enum_dias`] order, for multilinear words on
    /// `0..n`.
    pub fn index(&self) -> usize {
        self.center * factorial(self.args.len()) + lex_rank(&self.args)
    }

    pub fn render(&self, name: &dyn Fn(u8) -> String) -> String {
        let mut s = String::new();
        for (i, &a) in self.args.iter().enumerate() {
            if i == self.center {
                s.push('[');
                s.push_str(&name(a));
                s.push(']');
            } else {
                s.push_str(&name(a));
            }
        }
        s
    }
}

/// `ab[c]d` for `a b ĉ d`.
impl fmt::Display for DiasMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&letter))
    }
}

pub fn dias_mul(u: &DiasMonomial, v: &DiasMonomial, op: Op) -> Result<DiasMonomial> {
    u.mul(v, op)
}

/// Multilinear monomials of degree `n`: center position major, argument
/// permutation (lexicographic) minor.
pub fn enum_dias(n: usize) -> Vec<DiasMonomial> {
    let perms: Vec<Perm> = Perm::all(n).collect();
    (0..n)
        .flat_map(|center| {
            perms.iter().map(move |p| DiasMonomial { center, args: p.images().to_vec() })
        })
        .collect()
}

pub trait Coeff:
    Clone + PartialEq + Zero + One + AddAssign + Mul<Output = Self> + Sub<Output = Self> + Neg<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + AddAssign + Mul<Output = T> + Sub<Output = T> + Neg<Output = T>
{
}

/// Linear combination of diassociative monomials; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiasPoly<C = i64> {
    terms: BTreeMap<DiasMonomial, C>,
}

impl<C: Coeff> Default for DiasPoly<C> {
    fn default() -> Self {
        DiasPoly { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> DiasPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn var(label: u8) -> Self {
        Self::monomial(DiasMonomial::var(label), C::one())
    }

    pub fn monomial(m: DiasMonomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: DiasMonomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &DiasPoly<C>) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &DiasPoly<C>) -> DiasPoly<C> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &C) -> DiasPoly<C> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone() * k.clone());
        }
        out
    }

    /// Bilinear extension of the monomial product.
    pub fn mul(&self, other: &DiasPoly<C>, op: Op) -> DiasPoly<C> {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul_unchecked(b, op), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// The Jordan diproduct `â b + b â`, i.e. `a ⊣ b + b ⊢ a`.
    pub fn jordan(&self, other: &DiasPoly<C>) -> DiasPoly<C> {
        let mut out = self.mul(other, Op::Left);
        out.add_assign(&other.mul(self, Op::Right));
        out
    }

    /// The symmetrized product `{a, b} + {b, a}` of Jordan diproducts.
    pub fn sym(&self, other: &DiasPoly<C>) -> DiasPoly<C> {
        let mut out = self.jordan(other);
        out.add_assign(&other.jordan(self));
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &DiasMonomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in [`enum_dias`] order.
    pub fn iter(&self) -> impl Iterator<Item = (&DiasMonomial, &C)> {
        self.terms.iter()
    }

    pub fn relabel(&self, f: impl Fn(u8) -> u8) -> DiasPoly<C> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.relabel(&f), c.clone());
        }
        out
    }
}

impl<C: Coeff + fmt::Display + PartialOrd> DiasPoly<C> {
    pub fn render(&self, name: &dyn Fn(u8) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = *c < C::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if !abs.is_one() {
                s.push_str(&format!("{abs} "));
            }
            s.push_str(&m.render(name));
        }
        s
    }
}

impl<C: Coeff + fmt::Display + PartialOrd> fmt::Display for DiasPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&letter))
    }
}

/// The five defining identities of a diassociative algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LodayAxiom {
    RightAssociativity,
    LeftAssociativity,
    InnerAssociativity,
    LeftBar,
    RightBar,
}

impl LodayAxiom {
    pub const ALL: [LodayAxiom; 5] = [
        LodayAxiom::RightAssociativity,
        LodayAxiom::LeftAssociativity,
        LodayAxiom::InnerAssociativity,
        LodayAxiom::LeftBar,
        LodayAxiom::RightBar,
    ];

    /// Both sides evaluated on monomials.
    pub fn sides(self, x: &DiasMonomial, y: &DiasMonomial, z: &DiasMonomial) -> (DiasMonomial, DiasMonomial) {
        use Op::{Left as L, Right as R};
        let m = |a: &DiasMonomial, b: &DiasMonomial, op| a.mul_unchecked(b, op);
        match self {
            LodayAxiom::RightAssociativity => (m(&m(x, y, R), z, R), m(x, &m(y, z, R), R)),
            LodayAxiom::LeftAssociativity => (m(&m(x, y, L), z, L), m(x, &m(y, z, L), L)),
            LodayAxiom::InnerAssociativity => (m(&m(x, y, R), z, L), m(x, &m(y, z, L), R)),
            LodayAxiom::LeftBar => (m(&m(x, y, L), z, R), m(&m(x, y, R), z, R)),
            LodayAxiom::RightBar => (m(x, &m(y, z, L), L), m(x, &m(y, z, R), L)),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct LodayReport {
    /// Number of (axiom, x, y, z) instances evaluated.
    pub checked: usize,
    pub failures: Vec<String>,
}

impl LodayReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates all five axioms on every triple of normal-form monomials with
/// disjoint labels and total degree at most `max_degree`.
pub fn check_loday_axioms(max_degree: usize) -> LodayReport {
    let mut report = LodayReport::default();
    let all_on = |labels: Vec<u8>| -> Vec<DiasMonomial> {
        let k = labels.len();
        let mut out = Vec::new();
        for p in Perm::all(k) {
            let args: Vec<u8> = p.images().iter().map(|&i| labels[i as usize]).collect();
            for center in 0..k {
                out.push(DiasMonomial::new(args.clone(), center));
            }
        }
        out
    };
    for total in 3..=max_degree {
        for a in 1..total {
            for b in 1..total - a {
                let xs = all_on((0..a as u8).collect());
                let ys = all_on((a as u8..(a + b) as u8).collect());
                let zs = all_on(((a + b) as u8..total as u8).collect());
                for x in &xs {
                    for y in &ys {
                        for z in &zs {
                            for ax in LodayAxiom::ALL {
                                let (l, r) = ax.sides(x, y, z);
                                report.checked += 1;
                                if l != r {
                                    report.failures.push(format!("{ax:?}: x={x} y={y} z={z}: {l} != {r}"));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}
