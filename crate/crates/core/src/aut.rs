//! Automorphisms of a free group, stored with the images of the generators
//! under both the map and its inverse.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{check_cap, push_reduced, Word};

#[derive(Clone, PartialEq, Eq)]
pub struct Automorphism {
    rank: usize,
    fwd: Vec<Word>,
    bwd: Vec<Word>,
}

fn apply_images(images: &[Word], rank: usize, w: &Word) -> Result<Word> {
    if w.rank() != rank {
        return Err(Error::RankMismatch {
            left: rank,
            right: w.rank(),
        });
    }
    let mut out: Vec<i32> = Vec::with_capacity(w.len() * 4);
    for &l in w.letters() {
        let img = images[l.unsigned_abs() as usize - 1].letters();
        if l > 0 {
            for &m in img {
                push_reduced(&mut out, m);
            }
        } else {
            for &m in img.iter().rev() {
                push_reduced(&mut out, -m);
            }
        }
        check_cap(out.len())?;
    }
    Ok(Word::from_reduced_unchecked(rank, out))
}

impl Automorphism {
    pub fn identity(rank: usize) -> Self {
        let gens: Vec<Word> = (1..=rank).map(|i| Word::generator(rank, i)).collect();
        Self {
            rank,
            fwd: gens.clone(),
            bwd: gens,
        }
    }

    /// Build from forward and backward images, checking that they are mutually
    /// inverse on every generator.
    pub fn from_images(fwd: Vec<Word>, bwd: Vec<Word>) -> Result<Self> {
        let rank = fwd.len();
        if bwd.len() != rank {
            return Err(Error::RankMismatch {
                left: rank,
                right: bwd.len(),
            });
        }
        for w in fwd.iter().chain(&bwd) {
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: w.rank(),
                });
            }
        }
        let a = Self { rank, fwd, bwd };
        for i in 1..=rank {
            let x = Word::generator(rank, i);
            if a.apply(&a.apply_inverse(&x)?)? != x || a.apply_inverse(&a.apply(&x)?)? != x {
                return Err(Error::NotAutomorphism(format!(
                    "forward and backward images disagree on x{i}"
                )));
            }
        }
        Ok(a)
    }

    /// Conjugation `u ↦ v·u·v^{-1}`.
    pub fn inner(v: &Word) -> Result<Self> {
        let rank = v.rank();
        let vi = v.inverse();
        let mut fwd = Vec::with_capacity(rank);
        let mut bwd = Vec::with_capacity(rank);
        for i in 1..=rank {
            let x = Word::generator(rank, i);
            fwd.push(x.conjugate(v)?);
            bwd.push(x.conjugate(&vi)?);
        }
        Ok(Self { rank, fwd, bwd })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.fwd
    }

    pub fn inverse_images(&self) -> &[Word] {
        &self.bwd
    }

    /// Image of generator `x_i` (1-based).
    pub fn image(&self, i: usize) -> &Word {
        &self.fwd[i - 1]
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        apply_images(&self.fwd, self.rank, w)
    }

    pub fn apply_inverse(&self, w: &Word) -> Result<Word> {
        apply_images(&self.bwd, self.rank, w)
    }

    pub fn inverse(&self) -> Self {
        Self {
            rank: self.rank,
            fwd: self.bwd.clone(),
            bwd: self.fwd.clone(),
        }
    }

    /// Functional composition: `other` is applied first.
    pub fn compose(&self, other: &Automorphism) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let fwd = other
            .fwd
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        let bwd = self
            .bwd
            .iter()
            .map(|w| other.apply_inverse(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            rank: self.rank,
            fwd,
            bwd,
        })
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Automorphism::identity(self.rank);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.fwd
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters() == [(i + 1) as i32])
    }

    /// Generator-by-generator comparison of forward images.
    pub fn equals(&self, other: &Automorphism) -> bool {
        self.rank == other.rank && self.fwd == other.fwd
    }

    /// Column `i` is the exponent-sum vector of the image of `x_{i+1}`.
    pub fn abelianization(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let cols: Vec<Vec<i64>> = self.fwd.iter().map(|w| w.exponent_sums()).collect();
        (0..n)
            .map(|r| (0..n).map(|c| cols[c][r]).collect())
            .collect()
    }

    /// If the automorphism is `x ↦ w^{-1}·x·w` for every generator, return `w`.
    ///
    /// Requires rank ≥ 2; the witness is then unique.
    pub fn inner_witness(&self) -> Option<Word> {
        let n = self.rank;
        if n < 2 {
            return None;
        }
        let ab = self.abelianization();
        for (r, row) in ab.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != i64::from(r == c) {
                    return None;
                }
            }
        }
        // φ(x_i) = v_i^{-1} x_i v_i with v_i not starting with x_i^{±1};
        // then w = x_i^k v_i for some integer k.
        let v1 = conjugator_tail(&self.fwd[0], 1)?;
        let v2 = conjugator_tail(&self.fwd[1], 2)?;
        let candidate = if v1 == v2 {
            v1
        } else if strip_power(&v1, 2).as_ref() == Some(&v2) {
            // w = v1 = x2^j v2
            v1
        } else if strip_power(&v2, 1).as_ref() == Some(&v1) {
            v2
        } else {
            return None;
        };
        let w = Word::from_reduced_unchecked(n, candidate);
        let wi = w.inverse();
        for i in 1..=n {
            let x = Word::generator(n, i);
            match x.conjugate(&wi) {
                Ok(c) if c == self.fwd[i - 1] => {}
                _ => return None,
            }
        }
        Some(w)
    }
}

/// For `img = v^{-1} x_i v` (reduced, `v` not starting with `x_i^{±1}`), return `v`.
fn conjugator_tail(img: &Word, i: i32) -> Option<Vec<i32>> {
    let l = img.letters();
    if l.len().is_multiple_of(2) {
        return None;
    }
    let m = l.len() / 2;
    if l[m] != i {
        return None;
    }
    let tail = &l[m + 1..];
    let head = &l[..m];
    if head.iter().rev().map(|x| -x).ne(tail.iter().copied()) {
        return None;
    }
    if tail.first().map(|t| t.abs()) == Some(i) {
        return None;
    }
    Some(tail.to_vec())
}

/// If `v` starts with a nonzero power of `x_i`, return the remainder.
fn strip_power(v: &[i32], i: i32) -> Option<Vec<i32>> {
    let first = *v.first()?;
    if first.abs() != i {
        return None;
    }
    let k = v.iter().take_while(|&&l| l == first).count();
    Some(v[k..].to_vec())
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Automorphism(rank {}) {{", self.rank)?;
        for (i, w) in self.fwd.iter().enumerate() {
            writeln!(f, "  x{} -> {}", i + 1, w)?;
        }
        write!(f, "}}")
    }
}
