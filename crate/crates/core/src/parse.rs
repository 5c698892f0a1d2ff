//! Parser for parenthesized commutative monomials such as `((ab)c)d`.
//!
//! Variables are single letters. A product is the juxtaposition of exactly two
//! factors, and every product used as a factor must be parenthesized. `x^2`
//! abbreviates `(xx)`.

use crate::magma::Tree;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedMonomial {
    /// Leaves carry the rank of their letter among the distinct letters used.
    pub tree: Tree,
    /// `letters[label]` is the variable name of `label`.
    pub letters: Vec<char>,
}

impl ParsedMonomial {
    pub fn is_multilinear(&self) -> bool {
        self.tree.size() == self.letters.len()
    }

    pub fn name(&self, label: u8) -> String {
        self.letters[label as usize].to_string()
    }
}

enum Raw {
    Var(char),
    Prod(Box<Raw>, Box<Raw>),
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.src.len(), |&(p, _)| p)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.pos(), message: message.into() }
    }

    fn factor(&mut self) -> Result<Raw> {
        match self.peek() {
            Some('(') => {
                self.at += 1;
                let inner = self.product()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.at += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.at += 1;
                if self.peek() == Some('^') {
                    self.at += 1;
                    if self.peek() != Some('2') {
                        return Err(self.err("only the exponent 2 is supported"));
                    }
                    self.at += 1;
                    return Ok(Raw::Prod(Box::new(Raw::Var(c)), Box::new(Raw::Var(c))));
                }
                Ok(Raw::Var(c))
            }
            Some(c) => Err(self.err(format!("unexpected character '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    /// A single factor, or exactly two juxtaposed factors.
    fn product(&mut self) -> Result<Raw> {
        let left = self.factor()?;
        match self.peek() {
            None | Some(')') => Ok(left),
            _ => {
                let right = self.factor()?;
                match self.peek() {
                    None | Some(')') => Ok(Raw::Prod(Box::new(left), Box::new(right))),
                    _ => Err(self.err("a product has exactly two factors; add parentheses")),
                }
            }
        }
    }
}

pub fn parse_monomial(src: &str) -> Result<ParsedMonomial> {
    let chars: Vec<(usize, char)> = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { chars, at: 0, src };
    let raw = p.product()?;
    if p.peek().is_some() {
        return Err(p.err("unbalanced ')'"));
    }
    let mut letters = Vec::new();
    collect_letters(&raw, &mut letters);
    letters.sort_unstable();
    letters.dedup();
    let tree = to_tree(&raw, &letters);
    Ok(ParsedMonomial { tree, letters })
}

/// Parses and rejects repeated variables.
pub fn parse_multilinear(src: &str) -> Result<ParsedMonomial> {
    let m = parse_monomial(src)?;
    if !m.is_multilinear() {
        let leaves = m.tree.leaves();
        let mut seen = vec![false; m.letters.len()];
        for x in leaves {
            if std::mem::replace(&mut seen[x as usize], true) {
                let c = m.letters[x as usize];
                let position = src.rfind(c).unwrap_or(0);
                return Err(Error::Parse { position, message: format!("variable '{c}' repeated") });
            }
        }
    }
    Ok(m)
}

/// Parses a signed sum of monomials with optional integer coefficients, e.g.
/// `((x^2x^2)x)x - 2((x^2x)x^2)x`. Variable labels are assigned per term.
pub fn parse_polynomial(src: &str) -> Result<Vec<(i64, ParsedMonomial)>> {
    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut start = 0;
    let mut seen_body = false;
    let flush = |from: usize, to: usize, sign: i64, terms: &mut Vec<(i64, ParsedMonomial)>| -> Result<()> {
        let text = &src[from..to];
        let trimmed = text.trim_start();
        let offset = from + text.len() - trimmed.len();
        let digits: String = trimmed.chars().take_while(char::is_ascii_digit).collect();
        let coeff: i64 = if digits.is_empty() {
            1
        } else {
            digits.parse().map_err(|_| Error::Parse { position: offset, message: "coefficient too large".into() })?
        };
        let body = &trimmed[digits.len()..];
        let m = parse_monomial(body).map_err(|e| match e {
            Error::Parse { position, message } => {
                Error::Parse { position: position + offset + digits.len(), message }
            }
            other => other,
        })?;
        terms.push((sign * coeff, m));
        Ok(())
    };
    for (i, c) in src.char_indices() {
        match c {
            '+' | '-' => {
                if seen_body {
                    flush(start, i, sign, &mut terms)?;
                } else if src[start..i].trim().is_empty() && terms.is_empty() {
                    // leading sign
                } else {
                    return Err(Error::Parse { position: i, message: "missing term".into() });
                }
                sign = if c == '-' { -1 } else { 1 };
                start = i + 1;
                seen_body = false;
            }
            c if c.is_whitespace() => {}
            _ => seen_body = true,
        }
    }
    if !seen_body {
        return Err(Error::Parse { position: src.len(), message: "missing term".into() });
    }
    flush(start, src.len(), sign, &mut terms)?;
    Ok(terms)
}

fn collect_letters(r: &Raw, out: &mut Vec<char>) {
    match r {
        Raw::Var(c) => out.push(*c),
        Raw::Prod(a, b) => {
            collect_letters(a, out);
            collect_letters(b, out);
        }
    }
}

fn to_tree(r: &Raw, letters: &[char]) -> Tree {
    match r {
        Raw::Var(c) => Tree::Leaf(letters.binary_search(c).expect("letter collected") as u8),
        Raw::Prod(a, b) => Tree::node(to_tree(a, letters), to_tree(b, letters)),
    }
}
