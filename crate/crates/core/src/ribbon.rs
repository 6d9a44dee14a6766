//! Dehn twists computed on a disk-with-bands model of the surface.
//!
//! The surface is a disk with `2g` orientable bands attached along its
//! boundary circle. Walking counterclockwise from the basepoint, handle `i`
//! contributes the band ends `in(x_{2i-1}), out(x_{2i}), out(x_{2i-1}), in(x_{2i})`,
//! so the boundary of the surface reads `[x_1,x_2]···[x_{2g-1},x_{2g}]`.
//! Generator `x_j` runs from the basepoint to `in(x_j)`, through band `j`, and
//! back from `out(x_j)`.
//!
//! A simple closed curve given as a cyclic word is realised as parallel
//! strands through the bands joined by disjoint chords of the disk. The twist
//! acts on a generator loop by splicing in a copy of the curve at every chord
//! the loop crosses, turning right (or left for the inverse twist).

use std::cmp::Ordering;

use crate::aut::Automorphism;
use crate::error::{Error, Result};
use crate::word::Word;

/// A point on the boundary circle: (band end, slot within that end).
/// The basepoint sits before every band end.
type Pos = (i64, i64);

const BASEPOINT: Pos = (-1, 0);

#[derive(Clone, Copy, Debug)]
struct BandEnds {
    input: i64,
    output: i64,
}

#[derive(Clone, Debug)]
pub struct BandModel {
    rank: usize,
    ends: Vec<BandEnds>,
}

struct Chord {
    from: Pos,
    to: Pos,
    /// Chord leaves occurrence `after` of the curve word.
    after: usize,
}

fn crosses(a: Pos, b: Pos, p: Pos, q: Pos) -> bool {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    (lo < p && p < hi) != (lo < q && q < hi)
}

/// `x` lies strictly inside the counterclockwise arc from `a` to `b`.
fn in_ccw_arc(a: Pos, b: Pos, x: Pos) -> bool {
    if a < b {
        a < x && x < b
    } else {
        x > a || x < b
    }
}

impl BandModel {
    /// Standard handle layout for genus `g`.
    pub fn standard(genus: usize) -> Self {
        let mut ends = vec![
            BandEnds {
                input: 0,
                output: 0
            };
            2 * genus
        ];
        for h in 0..genus {
            let base = 4 * h as i64;
            ends[2 * h] = BandEnds {
                input: base,
                output: base + 2,
            };
            ends[2 * h + 1] = BandEnds {
                input: base + 3,
                output: base + 1,
            };
        }
        Self {
            rank: 2 * genus,
            ends,
        }
    }

    fn n_ends(&self) -> i64 {
        2 * self.rank as i64
    }

    fn entry(&self, l: i32) -> i64 {
        let e = self.ends[l.unsigned_abs() as usize - 1];
        if l > 0 {
            e.input
        } else {
            e.output
        }
    }

    fn exit(&self, l: i32) -> i64 {
        let e = self.ends[l.unsigned_abs() as usize - 1];
        if l > 0 {
            e.output
        } else {
            e.input
        }
    }

    /// The boundary word read off the model.
    pub fn boundary_word(&self) -> Word {
        let mut letters = Vec::with_capacity(2 * self.rank);
        for h in 0..self.rank / 2 {
            let (a, b) = (2 * h as i32 + 1, 2 * h as i32 + 2);
            letters.extend_from_slice(&[a, b, -a, -b]);
        }
        Word::reduce(self.rank, letters).expect("valid boundary word")
    }

    /// Ordering key of occurrence `k`, walked so that it crosses its band
    /// from the input end to the output end.
    fn strand_key(&self, c: &[i32], k: usize) -> Vec<i64> {
        let n = c.len();
        let forward = c[k] > 0;
        let n_ends = self.n_ends();
        let mut idx = k;
        let mut key = Vec::with_capacity(2 * n);
        for _ in 0..2 * n {
            let l = if forward { c[idx] } else { -c[idx] };
            let next = if forward {
                (idx + 1) % n
            } else {
                (idx + n - 1) % n
            };
            let nl = if forward { c[next] } else { -c[next] };
            key.push((self.entry(nl) - self.exit(l)).rem_euclid(n_ends));
            idx = next;
        }
        key
    }

    fn chords(&self, c: &[i32]) -> Result<Vec<Chord>> {
        let n = c.len();
        let mut rank_in = vec![(0usize, 0usize); n];
        for band in 1..=self.rank as i32 {
            let mut occ: Vec<(Vec<i64>, usize)> = (0..n)
                .filter(|&k| c[k].abs() == band)
                .map(|k| (self.strand_key(c, k), k))
                .collect();
            occ.sort();
            if occ.windows(2).any(|p| p[0].0 == p[1].0) {
                return Err(Error::NotSimple(format!("{c:?} (proper power)")));
            }
            let m = occ.len();
            for (r, (_, k)) in occ.into_iter().enumerate() {
                rank_in[k] = (r, m);
            }
        }
        let slot = |k: usize, entering: bool| -> Pos {
            let l = c[k];
            let (r, m) = rank_in[k];
            let end = if entering {
                self.entry(l)
            } else {
                self.exit(l)
            };
            let at_input = end == self.ends[l.unsigned_abs() as usize - 1].input;
            (
                end,
                if at_input {
                    r as i64
                } else {
                    (m - 1 - r) as i64
                },
            )
        };
        let chords: Vec<Chord> = (0..n)
            .map(|k| Chord {
                from: slot(k, false),
                to: slot((k + 1) % n, true),
                after: k,
            })
            .collect();
        for (i, a) in chords.iter().enumerate() {
            for b in &chords[i + 1..] {
                if crosses(a.from, a.to, b.from, b.to) {
                    return Err(Error::NotSimple(format!("{c:?}")));
                }
            }
        }
        Ok(chords)
    }

    fn splice(&self, c: &[i32], chords: &[Chord], a: Pos, b: Pos, right: bool, out: &mut Vec<i32>) {
        let mut hits: Vec<(Pos, &Chord)> = chords
            .iter()
            .filter(|ch| crosses(a, b, ch.from, ch.to))
            .map(|ch| {
                let near = if in_ccw_arc(a, b, ch.from) {
                    ch.from
                } else {
                    ch.to
                };
                (near, ch)
            })
            .collect();
        // counterclockwise distance from `a`
        hits.sort_by(|x, y| {
            let kx = (x.0 < a, x.0);
            let ky = (y.0 < a, y.0);
            kx.partial_cmp(&ky).unwrap_or(Ordering::Equal)
        });
        for (_, ch) in hits {
            // the curve crosses from our left to our right iff it starts on the left
            let left_to_right = !in_ccw_arc(a, b, ch.from);
            let forward = left_to_right == right;
            let k = ch.after;
            let rot = c[k + 1..].iter().chain(&c[..=k]);
            if forward {
                out.extend(rot);
            } else {
                let v: Vec<i32> = rot.map(|l| -l).collect();
                out.extend(v.into_iter().rev());
            }
        }
    }

    fn twist_images(&self, c: &[i32], chords: &[Chord], right: bool) -> Result<Vec<Word>> {
        let counts: Vec<usize> = (1..=self.rank as i32)
            .map(|j| c.iter().filter(|l| l.abs() == j).count())
            .collect();
        (1..=self.rank)
            .map(|j| {
                let e = self.ends[j - 1];
                let at_in = (e.input, -1);
                let at_out = (e.output, counts[j - 1] as i64);
                let mut letters = Vec::new();
                self.splice(c, chords, BASEPOINT, at_in, right, &mut letters);
                letters.push(j as i32);
                self.splice(c, chords, at_out, BASEPOINT, right, &mut letters);
                Word::reduce(self.rank, letters)
            })
            .collect()
    }

    /// Right Dehn twist about the simple closed curve represented by `curve`
    /// (any word in its free homotopy class; orientation is irrelevant).
    /// With `right = false` the roles of the twist and its inverse swap.
    pub fn twist(&self, curve: &Word, right: bool) -> Result<Automorphism> {
        if curve.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: curve.rank(),
            });
        }
        let core = curve.cyclic_reduce();
        if core.is_empty() {
            return Err(Error::NotSimple("empty word".into()));
        }
        let c = core.letters();
        let chords = self.chords(c)?;
        let fwd = self.twist_images(c, &chords, right)?;
        let bwd = self.twist_images(c, &chords, !right)?;
        let aut =
            Automorphism::from_images(fwd, bwd).map_err(|_| Error::NotSimple(format!("{core}")))?;
        let delta = self.boundary_word();
        if aut.apply(&delta)? != delta {
            return Err(Error::NotSimple(format!("{core} (boundary not fixed)")));
        }
        Ok(aut)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, l: &[i32]) -> Word {
        Word::reduce(rank, l.iter().copied()).unwrap()
    }

    #[test]
    fn generator_twists_are_handle_transvections() {
        let m = BandModel::standard(2);
        let ta = m.twist(&w(4, &[1]), true).unwrap();
        assert_eq!(ta.image(2).letters(), &[2, -1]);
        assert_eq!(ta.image(1).letters(), &[1]);
        let tb = m.twist(&w(4, &[2]), true).unwrap();
        assert_eq!(tb.image(1).letters(), &[1, 2]);
        assert_eq!(tb.image(3).letters(), &[3]);
    }

    #[test]
    fn twist_is_conjugation_invariant() {
        let m = BandModel::standard(2);
        let c = w(4, &[2, -1, -2, 3]);
        let t1 = m.twist(&c, true).unwrap();
        let t2 = m
            .twist(&c.conjugate(&w(4, &[4, 1])).unwrap(), true)
            .unwrap();
        let t3 = m.twist(&c.inverse(), true).unwrap();
        assert!(t1.equals(&t2));
        assert!(t1.equals(&t3));
    }

    #[test]
    fn non_simple_curves_are_rejected() {
        let m = BandModel::standard(2);
        assert!(m.twist(&w(4, &[1, -3]), true).is_err());
        assert!(m.twist(&w(4, &[1, 1]), true).is_err());
        assert!(m.twist(&Word::identity(4), true).is_err());
    }

    #[test]
    fn boundary_parallel_twist_is_inner() {
        let m = BandModel::standard(2);
        let d = m.boundary_word();
        let t = m.twist(&d, true).unwrap();
        assert!(t.inner_witness().is_some());
    }
}
