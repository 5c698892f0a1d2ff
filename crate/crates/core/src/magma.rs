//! Monomials of the free commutative nonassociative operad.
//!
//! A monomial is a complete binary tree with labelled leaves. Commutativity
//! lets every internal node swap its children, so each equivalence class has
//! a canonical representative: at every node the left child comes first in
//! [`shape_cmp`] order, and children of equal shape are ordered by their leaf
//! label sequences.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::perm::Perm;
use crate::{Error, Result};

pub const MAX_DEGREE: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf(u8),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaf(label: u8) -> Tree {
        Tree::Leaf(label)
    }

    pub fn node(left: Tree, right: Tree) -> Tree {
        Tree::Node(Box::new(left), Box::new(right))
    }

    pub fn size(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(l, r) => l.size() + r.size(),
        }
    }

    /// Leaf labels read left to right.
    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.size());
        self.push_leaves(&mut out);
        out
    }

    fn push_leaves(&self, out: &mut Vec<u8>) {
        match self {
            Tree::Leaf(x) => out.push(*x),
            Tree::Node(l, r) => {
                l.push_leaves(out);
                r.push_leaves(out);
            }
        }
    }

    /// Same tree with leaf `i` (left-to-right position) relabelled `labels[i]`.
    pub fn relabel_positions(&self, labels: &[u8]) -> Tree {
        fn go(t: &Tree, labels: &[u8], next: &mut usize) -> Tree {
            match t {
                Tree::Leaf(_) => {
                    let x = labels[*next];
                    *next += 1;
                    Tree::Leaf(x)
                }
                Tree::Node(l, r) => {
                    let l = go(l, labels, next);
                    let r = go(r, labels, next);
                    Tree::node(l, r)
                }
            }
        }
        let mut next = 0;
        go(self, labels, &mut next)
    }

    /// Applies `f` to every leaf label.
    pub fn map_labels(&self, f: &impl Fn(u8) -> u8) -> Tree {
        match self {
            Tree::Leaf(x) => Tree::Leaf(f(*x)),
            Tree::Node(l, r) => Tree::node(l.map_labels(f), r.map_labels(f)),
        }
    }

    /// Replaces every leaf labelled `label` by `with`.
    pub fn substitute(&self, label: u8, with: &Tree) -> Tree {
        match self {
            Tree::Leaf(x) if *x == label => with.clone(),
            Tree::Leaf(_) => self.clone(),
            Tree::Node(l, r) => Tree::node(l.substitute(label, with), r.substitute(label, with)),
        }
    }

    /// The unlabelled shape as a string of dashes, e.g. `((--)-)-`.
    pub fn shape_string(&self) -> String {
        self.render(&|_| "-".to_string(), false)
    }

    /// Parenthesized rendering with juxtaposition for products; the outermost
    /// product carries no parentheses. With `squares`, a product of two equal
    /// leaves `xx` is written `x^2`.
    pub fn render(&self, name: &dyn Fn(u8) -> String, squares: bool) -> String {
        fn factor(t: &Tree, name: &dyn Fn(u8) -> String, squares: bool) -> String {
            match t {
                Tree::Leaf(x) => name(*x),
                Tree::Node(l, r) => {
                    if squares {
                        if let (Tree::Leaf(a), Tree::Leaf(b)) = (l.as_ref(), r.as_ref()) {
                            if a == b {
                                return format!("{}^2", name(*a));
                            }
                        }
                    }
                    format!("({})", body(t, name, squares))
                }
            }
        }
        fn body(t: &Tree, name: &dyn Fn(u8) -> String, squares: bool) -> String {
            match t {
                Tree::Leaf(x) => name(*x),
                Tree::Node(l, r) => format!("{}{}", factor(l, name, squares), factor(r, name, squares)),
            }
        }
        if squares {
            if let Tree::Node(l, r) = self {
                if let (Tree::Leaf(a), Tree::Leaf(b)) = (l.as_ref(), r.as_ref()) {
                    if a == b {
                        return format!("{}^2", name(*a));
                    }
                }
            }
        }
        body(self, name, squares)
    }

    /// Canonical representative of the commutativity class of this tree.
    pub fn straighten(&self) -> Tree {
        match self {
            Tree::Leaf(_) => self.clone(),
            Tree::Node(l, r) => {
                let l = l.straighten();
                let r = r.straighten();
                if canonical_cmp(&l, &r) == Ordering::Greater {
                    Tree::node(r, l)
                } else {
                    Tree::node(l, r)
                }
            }
        }
    }
}

/// Total order on unlabelled shapes: larger trees first, then recursively by
/// left child and right child.
pub fn shape_cmp(a: &Tree, b: &Tree) -> Ordering {
    let (sa, sb) = (a.size(), b.size());
    if sa != sb {
        return sb.cmp(&sa);
    }
    match (a, b) {
        (Tree::Leaf(_), Tree::Leaf(_)) => Ordering::Equal,
        (Tree::Node(al, ar), Tree::Node(bl, br)) => {
            shape_cmp(al, bl).then_with(|| shape_cmp(ar, br))
        }
        _ => unreachable!("trees of equal size are both leaves or both nodes"),
    }
}

fn canonical_cmp(a: &Tree, b: &Tree) -> Ordering {
    shape_cmp(a, b).then_with(|| a.leaves().cmp(&b.leaves()))
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&letter, false))
    }
}

/// `0 -> a`, `1 -> b`, ...
pub fn letter(x: u8) -> String {
    ((b'a' + x) as char).to_string()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociationType {
    pub index: usize,
    pub degree: usize,
    /// Canonical shape; every leaf carries label 0.
    pub shape: Tree,
}

impl AssociationType {
    /// The shape with leaf `i` labelled `perm(i)`.
    pub fn apply(&self, perm: &Perm) -> Tree {
        self.shape.relabel_positions(perm.images())
    }
}

struct TypeTable {
    types: Vec<AssociationType>,
    by_shape: HashMap<String, usize>,
}

fn type_tables() -> &'static Vec<TypeTable> {
    static TABLES: OnceLock<Vec<TypeTable>> = OnceLock::new();
    TABLES.get_or_init(|| {
        // index 0 is an empty placeholder so that tables[n] is degree n
        let mut tables: Vec<TypeTable> = vec![TypeTable {
            types: Vec::new(),
            by_shape: HashMap::new(),
        }];
        for n in 1..=MAX_DEGREE + 1 {
            let mut shapes = Vec::new();
            if n == 1 {
                shapes.push(Tree::Leaf(0));
            } else {
                for a in (n.div_ceil(2)..n).rev() {
                    let b = n - a;
                    for l in &tables[a].types {
                        for r in &tables[b].types {
                            if a > b || l.index <= r.index {
                                shapes.push(Tree::node(l.shape.clone(), r.shape.clone()));
                            }
                        }
                    }
                }
            }
            let types: Vec<AssociationType> = shapes
                .into_iter()
                .enumerate()
                .map(|(index, shape)| AssociationType { index, degree: n, shape })
                .collect();
            let by_shape = types.iter().map(|t| (t.shape.shape_string(), t.index)).collect();
            tables.push(TypeTable { types, by_shape });
        }
        tables
    })
}

fn check_degree(n: usize) -> Result<()> {
    if (1..=MAX_DEGREE).contains(&n) {
        Ok(())
    } else {
        Err(Error::DegreeOutOfRange { degree: n, min: 1, max: MAX_DEGREE })
    }
}

/// Association types of degree `n` in reverse degree-lexicographic order:
/// larger left factor first, then by the left factor's position, then by the
/// right factor's position.
pub fn association_types(n: usize) -> Result<&'static [AssociationType]> {
    check_degree(n)?;
    Ok(&type_tables()[n].types)
}

/// Position of a canonical shape in [`association_types`].
pub fn type_index_of(shape: &Tree) -> Option<usize> {
    let n = shape.size();
    type_tables().get(n)?.by_shape.get(&shape.shape_string()).copied()
}

/// A multilinear monomial: an association type with argument labels
/// `perm(0), perm(1), ...` on its leaves from left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CommMonomial {
    pub type_index: usize,
    pub perm: Perm,
}

impl CommMonomial {
    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn association_type(&self) -> &'static AssociationType {
        &type_tables()[self.degree()].types[self.type_index]
    }

    pub fn to_tree(&self) -> Tree {
        self.association_type().apply(&self.perm)
    }

    /// Canonical monomial of a multilinear tree whose labels are `0..n`.
    pub fn from_tree(tree: &Tree) -> Result<CommMonomial> {
        let s = tree.straighten();
        let labels = s.leaves();
        let perm = Perm::from_images(labels).ok_or(Error::NotMultilinear)?;
        let shape = s.map_labels(&|_| 0);
        let type_index = type_index_of(&shape).ok_or(Error::NotMultilinear)?;
        Ok(CommMonomial { type_index, perm })
    }

    /// Relabels the arguments by `sigma` (label `x` becomes `sigma(x)`) and
    /// straightens the result.
    pub fn act(&self, sigma: &Perm) -> CommMonomial {
        let tree = self.association_type().apply(&sigma.compose(&self.perm));
        CommMonomial::from_tree(&tree).expect("relabelling keeps the monomial multilinear")
    }

    pub fn is_canonical(&self) -> bool {
        let t = self.to_tree();
        t.straighten() == t
    }
}

impl fmt::Display for CommMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_tree())
    }
}

/// Straightens a multilinear tree into its canonical monomial.
pub fn straighten(tree: &Tree) -> Result<CommMonomial> {
    CommMonomial::from_tree(tree)
}

/// Canonical multilinear monomials of degree `n`, ordered by association type
/// and then by the lexicographic order of the argument permutation.
pub fn enum_multilinear(n: usize) -> Result<Vec<CommMonomial>> {
    let types = association_types(n)?;
    let mut out = Vec::new();
    for t in types {
        for perm in Perm::all(n) {
            let m = CommMonomial { type_index: t.index, perm };
            if m.is_canonical() {
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// Ordered multilinear monomials with a reverse index.
#[derive(Debug, Clone)]
pub struct MultilinearBasis {
    pub degree: usize,
    monomials: Vec<CommMonomial>,
    index: HashMap<CommMonomial, usize>,
}

impl MultilinearBasis {
    pub fn new(n: usize) -> Result<Self> {
        let monomials = enum_multilinear(n)?;
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(MultilinearBasis { degree: n, monomials, index })
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[CommMonomial] {
        &self.monomials
    }

    pub fn get(&self, i: usize) -> &CommMonomial {
        &self.monomials[i]
    }

    /// Column of a canonical monomial.
    pub fn index_of(&self, m: &CommMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Column of the canonical form of an arbitrary multilinear tree.
    pub fn index_of_tree(&self, t: &Tree) -> Result<usize> {
        let m = CommMonomial::from_tree(t)?;
        self.index_of(&m).ok_or(Error::NotMultilinear)
    }
}

/// An involution `sigma` of the leaf positions of a type with
/// `t(identity) = t(sigma)` under commutativity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeSymmetry {
    pub type_index: usize,
    pub sigma: Perm,
}

/// One symmetry per internal node whose two children have the same shape:
/// the involution exchanging those subtrees. Nodes are visited in post-order.
pub fn type_symmetries(n: usize) -> Result<Vec<TypeSymmetry>> {
    fn visit(t: &Tree, offset: usize, n: usize, out: &mut Vec<Perm>) {
        if let Tree::Node(l, r) = t {
            visit(l, offset, n, out);
            visit(r, offset + l.size(), n, out);
            if shape_cmp(l, r) == Ordering::Equal {
                let k = l.size();
                let mut images: Vec<u8> = (0..n as u8).collect();
                for i in 0..k {
                    images.swap(offset + i, offset + k + i);
                }
                out.push(Perm::from_images(images).expect("swap of blocks is a permutation"));
            }
        }
    }
    let mut out = Vec::new();
    for t in association_types(n)? {
        let mut sigmas = Vec::new();
        visit(&t.shape, 0, n, &mut sigmas);
        out.extend(sigmas.into_iter().map(|sigma| TypeSymmetry { type_index: t.index, sigma }));
    }
    Ok(out)
}

/// `(2n-3)!!`, the number of multilinear commutative monomials of degree `n`.
pub fn double_factorial_count(n: usize) -> usize {
    if n < 2 {
        return 1;
    }
    (1..=2 * n - 3).step_by(2).product()
}
