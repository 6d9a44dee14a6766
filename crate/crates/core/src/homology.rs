//! The symplectic representation on first homology.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::aut::Automorphism;

#[derive(Clone, PartialEq, Eq)]
pub struct SympMatrix {
    n: usize,
    entries: Vec<Vec<BigInt>>,
}

impl SympMatrix {
    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        if r == c {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self { n, entries }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self { n, entries }
    }

    /// Column `i` is the exponent-sum vector of the image of `x_{i+1}`.
    pub fn abelianize(aut: &Automorphism) -> Self {
        Self::from_i64(&aut.abelianization())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r][c]
    }

    pub fn mul(&self, other: &SympMatrix) -> SympMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut entries = vec![vec![BigInt::zero(); n]; n];
        for (r, row) in entries.iter_mut().enumerate() {
            for k in 0..n {
                let a = &self.entries[r][k];
                if a.is_zero() {
                    continue;
                }
                for (c, slot) in row.iter_mut().enumerate() {
                    *slot += a * &other.entries[k][c];
                }
            }
        }
        SympMatrix { n, entries }
    }

    pub fn transpose(&self) -> SympMatrix {
        let n = self.n;
        let entries = (0..n)
            .map(|r| (0..n).map(|c| self.entries[c][r].clone()).collect())
            .collect();
        SympMatrix { n, entries }
    }

    pub fn neg(&self) -> SympMatrix {
        SympMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|x| -x).collect())
                .collect(),
        }
    }

    pub fn pow(&self, k: u64) -> SympMatrix {
        let mut acc = SympMatrix::identity(self.n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == SympMatrix::identity(self.n)
    }

    pub fn is_neg_identity(&self) -> bool {
        *self == SympMatrix::identity(self.n).neg()
    }

    /// `s` with `Mᵀ·J·M = s·J`, if `s = ±1`.
    pub fn form_sign(&self, form: &[Vec<i64>]) -> Option<i8> {
        let j = SympMatrix::from_i64(form);
        let lhs = self.transpose().mul(&j).mul(self);
        if lhs == j {
            Some(1)
        } else if lhs == j.neg() {
            Some(-1)
        } else {
            None
        }
    }

    /// Least `n <= cap` with `M^n = I`.
    pub fn order(&self, cap: u64) -> Option<u64> {
        let mut cur = self.clone();
        for n in 1..=cap {
            if cur.is_identity() {
                return Some(n);
            }
            cur = cur.mul(self);
        }
        None
    }
}

impl fmt::Debug for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
