//! Symbolic names for catalog mapping classes and curves.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Named curves on the surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveName {
    /// `a_k`; `a_0` is `S(a_1)`.
    A(usize),
    B,
    C(usize),
    D(usize),
    CBar(usize),
    DBar(usize),
    B2,
    E,
    /// `e_1 … e_4` (odd genus).
    Ei(usize),
    Alpha,
    X,
    Y,
    Z,
}

/// Named mapping classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogName {
    Identity,
    A(usize),
    B,
    S,
    U,
    T,
    R,
    /// Involution reversing every `a_i` and `b`.
    R0,
    C(usize),
    D(usize),
    CBar(usize),
    DBar(usize),
    B2,
    E,
    Ei(usize),
    X,
    P,
    V,
    W,
    T1,
    T2,
    /// `U_i = (C̄_i)^{-1}(D̄_{i+1})^{-1}`.
    Ui(usize),
    /// Twist about a curve parallel to the boundary.
    TBoundary,
    /// Right twist about a named curve.
    Twist(CurveName),
}

fn invalid(name: impl fmt::Display, genus: usize, reason: impl Into<String>) -> Error {
    Error::InvalidName {
        name: name.to_string(),
        genus,
        reason: reason.into(),
    }
}

fn need(cond: bool, name: impl fmt::Display, genus: usize, reason: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(name, genus, reason))
    }
}

impl CurveName {
    pub fn validate(&self, g: usize) -> Result<()> {
        use CurveName::*;
        match *self {
            A(k) => need(k <= 2 * g, self, g, "index must be in 0..=2g"),
            B => need(g >= 2, self, g, "needs g >= 2"),
            C(k) | CBar(k) => need((1..g).contains(&k), self, g, "index must be in 1..=g-1"),
            D(k) | DBar(k) => need(
                g >= 3 && (1..=g - 2).contains(&k),
                self,
                g,
                "index must be in 1..=g-2",
            ),
            B2 | E | X | Y | Z => need(g >= 3, self, g, "needs g >= 3"),
            Ei(k) => {
                need(g >= 3 && g % 2 == 1, self, g, "needs odd g >= 3")?;
                need((1..=4).contains(&k), self, g, "index must be in 1..=4")
            }
            Alpha => need(g >= 3 && g % 2 == 1, self, g, "needs odd g >= 3"),
        }
    }

    /// Every curve name admissible at genus `g`, in a fixed order.
    pub fn all(g: usize) -> Vec<CurveName> {
        use CurveName::*;
        let mut v: Vec<CurveName> = (0..=2 * g).map(A).collect();
        v.push(B);
        v.extend((1..g).map(C));
        v.extend((1..g.saturating_sub(1)).map(D));
        v.extend((1..g).map(CBar));
        v.extend((1..g.saturating_sub(1)).map(DBar));
        v.extend([B2, E]);
        v.extend((1..=4).map(Ei));
        v.extend([Alpha, X, Y, Z]);
        v.retain(|c| c.validate(g).is_ok());
        v
    }
}

impl CatalogName {
    pub fn validate(&self, g: usize) -> Result<()> {
        use CatalogName::*;
        match *self {
            Identity | S | U | T | R | R0 | TBoundary => Ok(()),
            // at g = 2 the curve b extends the chain as a fifth member
            A(5) if g == 2 => Ok(()),
            A(i) => need((1..=2 * g).contains(&i), self, g, "index must be in 1..=2g"),
            B => need(g >= 2, self, g, "needs g >= 2"),
            V => need(g >= 2, self, g, "needs g >= 2"),
            C(k) => CurveName::C(k).validate(g),
            D(k) => CurveName::D(k).validate(g),
            CBar(k) => CurveName::CBar(k).validate(g),
            DBar(k) => CurveName::DBar(k).validate(g),
            B2 | E | X | P | W | T1 | T2 => need(g >= 3, self, g, "needs g >= 3"),
            Ei(k) => CurveName::Ei(k).validate(g),
            Ui(i) => need(
                i >= 1 && i + 3 <= g,
                self,
                g,
                "index must be in 1..=g-3 (needs Dbar_{i+1})",
            ),
            Twist(c) => c.validate(g),
        }
    }

    /// Every catalog name admissible at genus `g` except the `Twist(_)` family.
    pub fn all(g: usize) -> Vec<CatalogName> {
        use CatalogName::*;
        let mut v = vec![
            Identity, TBoundary, S, U, T, R, R0, B, V, B2, E, X, P, W, T1, T2,
        ];
        v.extend((1..=2 * g + 1).map(A));
        for k in 1..=g {
            v.extend([C(k), D(k), CBar(k), DBar(k), Ui(k)]);
        }
        v.extend((1..=4).map(Ei));
        v.retain(|c| c.validate(g).is_ok());
        v
    }
}

impl fmt::Display for CurveName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CurveName::*;
        match self {
            A(k) => write!(f, "a_{k}"),
            B => write!(f, "b"),
            C(k) => write!(f, "c_{k}"),
            D(k) => write!(f, "d_{k}"),
            CBar(k) => write!(f, "cbar_{k}"),
            DBar(k) => write!(f, "dbar_{k}"),
            B2 => write!(f, "b_2"),
            E => write!(f, "e"),
            Ei(k) => write!(f, "e_{k}"),
            Alpha => write!(f, "alpha"),
            X => write!(f, "x"),
            Y => write!(f, "y"),
            Z => write!(f, "z"),
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CatalogName::*;
        match self {
            Identity => write!(f, "1"),
            A(i) => write!(f, "A{i}"),
            B => write!(f, "B"),
            S => write!(f, "S"),
            U => write!(f, "U"),
            T => write!(f, "T"),
            R => write!(f, "R"),
            R0 => write!(f, "R0"),
            C(k) => write!(f, "C{k}"),
            D(k) => write!(f, "D{k}"),
            CBar(k) => write!(f, "Cbar{k}"),
            DBar(k) => write!(f, "Dbar{k}"),
            B2 => write!(f, "B2"),
            E => write!(f, "E"),
            Ei(k) => write!(f, "E{k}"),
            X => write!(f, "X"),
            P => write!(f, "P"),
            V => write!(f, "V"),
            W => write!(f, "W"),
            T1 => write!(f, "t1"),
            T2 => write!(f, "t2"),
            Ui(i) => write!(f, "U{i}"),
            TBoundary => write!(f, "Td"),
            Twist(c) => write!(f, "T[{c}]"),
        }
    }
}

/// Split `prefix<digits>` or `prefix_<digits>`.
fn indexed<'a>(s: &'a str, prefix: &str) -> Option<usize> {
    let rest: &'a str = s.strip_prefix(prefix)?;
    let rest = rest.strip_prefix('_').unwrap_or(rest);
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

impl FromStr for CurveName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use CurveName::*;
        let s = s.trim();
        Ok(match s {
            "b" => B,
            "b_2" | "b2" => B2,
            "e" => E,
            "alpha" => Alpha,
            "x" => X,
            "y" => Y,
            "z" => Z,
            _ => {
                if let Some(k) = indexed(s, "cbar") {
                    CBar(k)
                } else if let Some(k) = indexed(s, "dbar") {
                    DBar(k)
                } else if let Some(k) = indexed(s, "a") {
                    A(k)
                } else if let Some(k) = indexed(s, "c") {
                    C(k)
                } else if let Some(k) = indexed(s, "d") {
                    D(k)
                } else if let Some(k) = indexed(s, "e") {
                    Ei(k)
                } else {
                    return Err(Error::Parse(format!("unknown curve name `{s}`")));
                }
            }
        })
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use CatalogName::*;
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("T[").and_then(|r| r.strip_suffix(']')) {
            return Ok(Twist(inner.parse()?));
        }
        Ok(match s {
            "1" | "id" => Identity,
            "B" => B,
            "S" => S,
            "U" => U,
            "T" => T,
            "R" => R,
            "R0" => R0,
            "B2" | "B_2" => B2,
            "E" => E,
            "X" => X,
            "P" => P,
            "V" => V,
            "W" => W,
            "t1" | "t_1" => T1,
            "t2" | "t_2" => T2,
            "Td" | "T_d" => TBoundary,
            _ => {
                if let Some(k) = indexed(s, "Cbar") {
                    CBar(k)
                } else if let Some(k) = indexed(s, "Dbar") {
                    DBar(k)
                } else if let Some(k) = indexed(s, "A") {
                    A(k)
                } else if let Some(k) = indexed(s, "C") {
                    C(k)
                } else if let Some(k) = indexed(s, "D") {
                    D(k)
                } else if let Some(k) = indexed(s, "E") {
                    Ei(k)
                } else if let Some(k) = indexed(s, "U") {
                    Ui(k)
                } else {
                    return Err(Error::Parse(format!("unknown element name `{s}`")));
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_round_trip() {
        for g in [3usize, 5] {
            for c in CurveName::all(g) {
                assert_eq!(c.to_string().parse::<CurveName>().unwrap(), c);
                let t = CatalogName::Twist(c);
                assert_eq!(t.to_string().parse::<CatalogName>().unwrap(), t);
            }
        }
        for n in [
            CatalogName::A(12),
            CatalogName::CBar(2),
            CatalogName::Ui(2),
            CatalogName::T1,
            CatalogName::TBoundary,
            CatalogName::Ei(3),
        ] {
            assert_eq!(n.to_string().parse::<CatalogName>().unwrap(), n);
        }
    }

    #[test]
    fn underscore_forms() {
        assert_eq!("A_4".parse::<CatalogName>().unwrap(), CatalogName::A(4));
        assert_eq!("a3".parse::<CurveName>().unwrap(), CurveName::A(3));
        assert_eq!("B_2".parse::<CatalogName>().unwrap(), CatalogName::B2);
    }

    #[test]
    fn genus_ranges() {
        assert!(CurveName::C(1).validate(3).is_ok());
        assert!(CurveName::C(3).validate(3).is_err());
        assert!(CurveName::D(2).validate(3).is_err());
        assert!(CurveName::Ei(1).validate(4).is_err());
        assert!(CatalogName::Ui(2).validate(5).is_ok());
        assert!(CatalogName::Ui(2).validate(4).is_err());
        assert!(CatalogName::B.validate(1).is_err());
        assert!("Q7".parse::<CatalogName>().is_err());
    }
    #[test]
    fn catalog_listing() {
        let g3 = CatalogName::all(3);
        assert!(g3.contains(&CatalogName::A(6)) && !g3.contains(&CatalogName::A(7)));
        assert!(g3.contains(&CatalogName::D(1)) && !g3.contains(&CatalogName::Ui(1)));
        assert!(CatalogName::all(2).contains(&CatalogName::A(5)));
        for n in CatalogName::all(5) {
            assert_eq!(n.to_string().parse::<CatalogName>().unwrap(), n);
        }
    }
}
