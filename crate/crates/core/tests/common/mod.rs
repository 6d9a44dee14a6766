//! Brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use mcg_core::{Automorphism, Word};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Visit every letter sequence over `±1..=±rank` of length at most `max_len`.
pub fn for_each_sequence(rank: i32, max_len: usize, f: &mut dyn FnMut(&[i32])) {
    fn go(rank: i32, left: usize, buf: &mut Vec<i32>, f: &mut dyn FnMut(&[i32])) {
        f(buf);
        if left == 0 {
            return;
        }
        for i in 1..=rank {
            for a in [i, -i] {
                buf.push(a);
                go(rank, left - 1, buf, f);
                buf.pop();
            }
        }
    }
    go(rank, max_len, &mut Vec::new(), f);
}

/// Every letter sequence over `±1..=±rank` of length at most `max_len`.
pub fn all_sequences(rank: i32, max_len: usize) -> Vec<Vec<i32>> {
    let alphabet: Vec<i32> = (1..=rank).flat_map(|i| [i, -i]).collect();
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for &a in &alphabet {
                let mut v: Vec<i32> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Delete the leftmost cancelling pair until none remain.
pub fn naive_reduce(letters: &[i32]) -> Vec<i32> {
    let mut v = letters.to_vec();
    'outer: loop {
        for i in 0..v.len().saturating_sub(1) {
            if v[i] == -v[i + 1] {
                v.drain(i..i + 2);
                continue 'outer;
            }
        }
        return v;
    }
}

pub fn naive_cyclic_core(letters: &[i32]) -> Vec<i32> {
    let mut v = naive_reduce(letters);
    while v.len() >= 2 && v[0] == -v[v.len() - 1] {
        v.remove(0);
        v.pop();
    }
    v
}

fn inverse(v: &[i32]) -> Vec<i32> {
    v.iter().rev().map(|x| -x).collect()
}

/// Least rotation of the cyclic core or its inverse, by listing all rotations.
pub fn naive_key(letters: &[i32]) -> Vec<i32> {
    let c = naive_cyclic_core(letters);
    let ci = inverse(&c);
    let n = c.len();
    let mut best = c.clone();
    for s in [&c, &ci] {
        for r in 0..n.max(1) {
            let rot: Vec<i32> = s[r..].iter().chain(&s[..r]).copied().collect();
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

fn contains(hay: &[i32], needle: &[i32]) -> bool {
    needle.is_empty() || hay.windows(needle.len()).any(|w| w == needle)
}

/// Conjugacy up to inversion: `v` is a substring of `u·u` or `u⁻¹·u⁻¹`.
pub fn naive_conjugate(u: &[i32], v: &[i32]) -> bool {
    let (cu, cv) = (naive_cyclic_core(u), naive_cyclic_core(v));
    if cu.len() != cv.len() {
        return false;
    }
    let cui = inverse(&cu);
    let uu: Vec<i32> = cu.iter().chain(&cu).copied().collect();
    let ii: Vec<i32> = cui.iter().chain(&cui).copied().collect();
    contains(&uu, &cv) || contains(&ii, &cv)
}

pub fn random_word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    let letters: Vec<i32> = (0..n)
        .map(|_| {
            let i = rng.gen_range(1..=rank as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    Word::reduce(rank, letters).unwrap()
}

/// Checks `φ(x_i) == w⁻¹·x_i·w` for every generator.
pub fn is_witness(phi: &Automorphism, w: &Word) -> bool {
    let rank = phi.rank();
    (1..=rank).all(|i| {
        let x = Word::generator(rank, i);
        let lhs = w.inverse().concat(&x).unwrap().concat(w).unwrap();
        lhs == *phi.image(i)
    })
}
