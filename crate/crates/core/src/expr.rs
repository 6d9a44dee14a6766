//! Element expressions: products of catalog names with integer exponents.
//!
//! Tokens are separated by whitespace; `X^k`, `X^-1`, `X^{-2}` and `X^(-2)`
//! are accepted, as are parenthesised groups `( … )^k`. A product is read as
//! functional composition, so the rightmost factor acts first.

use std::fmt;

use crate::error::{Error, Result};
use crate::names::CatalogName;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Name(CatalogName),
    Group(Expr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub atom: Atom,
    pub exp: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Expr {
    pub factors: Vec<Factor>,
}

impl Expr {
    pub fn parse(s: &str) -> Result<Expr> {
        let chars: Vec<char> = s.chars().collect();
        let mut p = Parser { s: &chars, pos: 0 };
        let e = p.product()?;
        p.skip_ws();
        if p.pos != chars.len() {
            return Err(p.err("unexpected `)`"));
        }
        Ok(e)
    }

    pub fn name(n: CatalogName, exp: i64) -> Expr {
        Expr {
            factors: vec![Factor {
                atom: Atom::Name(n),
                exp,
            }],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Every catalog name mentioned, in order of appearance.
    pub fn names(&self) -> Vec<CatalogName> {
        let mut out = Vec::new();
        for f in &self.factors {
            match &f.atom {
                Atom::Name(n) => out.push(*n),
                Atom::Group(e) => out.extend(e.names()),
            }
        }
        out
    }
}

struct Parser<'a> {
    s: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        let text: String = self.s.iter().collect();
        Error::Parse(format!("{msg} at column {} in `{text}`", self.pos + 1))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn product(&mut self) -> Result<Expr> {
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') => break,
                Some('(') => {
                    self.pos += 1;
                    let inner = self.product()?;
                    if self.peek() != Some(')') {
                        return Err(self.err("missing `)`"));
                    }
                    self.pos += 1;
                    let exp = self.exponent()?;
                    factors.push(Factor {
                        atom: Atom::Group(inner),
                        exp,
                    });
                }
                Some(_) => {
                    let name = self.ident()?;
                    let exp = self.exponent()?;
                    factors.push(Factor {
                        atom: Atom::Name(name),
                        exp,
                    });
                }
            }
        }
        Ok(Expr { factors })
    }

    fn ident(&mut self) -> Result<CatalogName> {
        let start = self.pos;
        let mut depth = 0;
        while let Some(c) = self.peek() {
            match c {
                '[' => depth += 1,
                ']' if depth > 0 => depth -= 1,
                c if depth > 0 && !c.is_whitespace() => {}
                c if c.is_ascii_alphanumeric() || c == '_' => {}
                _ => break,
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a name"));
        }
        let tok: String = self.s[start..self.pos].iter().collect();
        tok.parse().map_err(|_| {
            self.pos = start;
            self.err(&format!("unknown name `{tok}`"))
        })
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let close = match self.peek() {
            Some('{') => Some('}'),
            Some('(') => Some(')'),
            _ => None,
        };
        if close.is_some() {
            self.pos += 1;
        }
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let tok: String = self.s[start..self.pos].iter().collect();
        let v: i64 = tok.parse().map_err(|_| self.err("bad exponent"))?;
        if let Some(c) = close {
            if self.peek() != Some(c) {
                return Err(self.err("unclosed exponent"));
            }
            self.pos += 1;
        }
        Ok(v)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match &fac.atom {
                Atom::Name(n) => write!(f, "{n}")?,
                Atom::Group(e) => write!(f, "({e})")?,
            }
            if fac.exp != 1 {
                write!(f, "^{}", fac.exp)?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Expr::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names::CurveName;

    #[test]
    fn simple_product() {
        let e = Expr::parse("A4 A3 A2 A1").unwrap();
        assert_eq!(
            e.names(),
            vec![
                CatalogName::A(4),
                CatalogName::A(3),
                CatalogName::A(2),
                CatalogName::A(1)
            ]
        );
    }

    #[test]
    fn exponents() {
        let e = Expr::parse("S^-1 B^{2} C_4^(-3) X").unwrap();
        let exps: Vec<i64> = e.factors.iter().map(|f| f.exp).collect();
        assert_eq!(exps, vec![-1, 2, -3, 1]);
    }

    #[test]
    fn groups_and_twists() {
        let e = Expr::parse("(B D2^-1)^-1 T[c_1] T[b_2]^2").unwrap();
        assert_eq!(e.factors.len(), 3);
        assert_eq!(
            e.factors[1].atom,
            Atom::Name(CatalogName::Twist(CurveName::C(1)))
        );
        assert_eq!(e.to_string(), "(B D2^-1)^-1 T[c_1] T[b_2]^2");
        assert_eq!(Expr::parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn errors() {
        assert!(Expr::parse("A1 (B").is_err());
        assert!(Expr::parse("A1)").is_err());
        assert!(Expr::parse("Q").is_err());
        assert!(Expr::parse("A1^").is_err());
        assert!(Expr::parse("").unwrap().is_empty());
    }
}
