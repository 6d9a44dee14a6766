//! Freely reduced words in a free group of fixed rank.
//!
//! A letter is a signed generator index: `i` stands for `x_i` and `-i` for
//! `x_i^{-1}`, with `1 <= i <= rank`.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_WORD_CAP: usize = 10_000_000;

static WORD_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_WORD_CAP);

/// Upper bound on the length of any word produced by the word algebra.
pub fn word_cap() -> usize {
    WORD_CAP.load(Ordering::Relaxed)
}

pub fn set_word_cap(cap: usize) {
    WORD_CAP.store(cap.max(1), Ordering::Relaxed);
}

pub(crate) fn check_cap(len: usize) -> Result<()> {
    let cap = word_cap();
    if len > cap {
        Err(Error::WordTooLong { len, cap })
    } else {
        Ok(())
    }
}

/// Push `letter` onto a reduced stack, cancelling against the top.
#[inline]
pub(crate) fn push_reduced(stack: &mut Vec<i32>, letter: i32) {
    if stack.last() == Some(&-letter) {
        stack.pop();
    } else {
        stack.push(letter);
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: usize,
    letters: Vec<i32>,
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Self {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, index: usize) -> Self {
        assert!(
            index >= 1 && index <= rank,
            "generator {index} out of range"
        );
        Self {
            rank,
            letters: vec![index as i32],
        }
    }

    /// Free reduction of an arbitrary letter sequence (single stack pass).
    pub fn reduce<I>(rank: usize, letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = i32>,
    {
        let mut stack = Vec::new();
        for l in letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::IndexOutOfRange { index: l, rank });
            }
            push_reduced(&mut stack, l);
        }
        check_cap(stack.len())?;
        Ok(Self {
            rank,
            letters: stack,
        })
    }

    /// Caller guarantees the letters are in range and freely reduced.
    pub(crate) fn from_reduced_unchecked(rank: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0] != -w[1]));
        Self { rank, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn same_rank(&self, other: &Word) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.same_rank(other)?;
        let mut stack = Vec::with_capacity(self.len() + other.len());
        stack.extend_from_slice(&self.letters);
        for &l in &other.letters {
            push_reduced(&mut stack, l);
        }
        check_cap(stack.len())?;
        Ok(Word::from_reduced_unchecked(self.rank, stack))
    }

    pub fn inverse(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `by · self · by^{-1}`.
    pub fn conjugate(&self, by: &Word) -> Result<Word> {
        by.concat(self)?.concat(&by.inverse())
    }

    pub fn pow(&self, k: i64) -> Result<Word> {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base)?;
        }
        Ok(out)
    }

    /// Strip matching inverse letters from both ends.
    pub fn cyclic_reduce(&self) -> Word {
        let l = &self.letters;
        let (mut i, mut j) = (0usize, l.len());
        while j >= i + 2 && l[i] == -l[j - 1] {
            i += 1;
            j -= 1;
        }
        Word {
            rank: self.rank,
            letters: l[i..j].to_vec(),
        }
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.len() < 2 || self.letters[0] != -self.letters[self.len() - 1]
    }

    pub fn cyclic_key(&self) -> CyclicKey {
        let core = self.cyclic_reduce();
        let fwd = least_rotation(&core.letters);
        let inv = core.inverse();
        let bwd = least_rotation(&inv.letters);
        CyclicKey(fwd.min(bwd))
    }

    /// Exponent-sum vector (abelianization) in `Z^rank`.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for &l in &self.letters {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }
}

/// Lexicographically least rotation, two-pointer method, O(n).
fn least_rotation(s: &[i32]) -> Vec<i32> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    let start = i.min(j);
    s[start..].iter().chain(&s[..start]).copied().collect()
}

/// Canonical representative of a word up to conjugation and inversion.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicKey(Vec<i32>);

impl CyclicKey {
    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn fmt_letters(letters: &[i32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "1");
    }
    for (n, &l) in letters.iter().enumerate() {
        if n > 0 {
            write!(f, " ")?;
        }
        if l > 0 {
            write!(f, "x{l}")?;
        } else {
            write!(f, "x{}^-1", -l)?;
        }
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.letters, f)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[")?;
        fmt_letters(&self.letters, f)?;
        write!(f, "]")
    }
}

impl fmt::Display for CyclicKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_letters(&self.0, f)?;
        write!(f, ")")
    }
}
