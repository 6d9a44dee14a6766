//! The combinatorial model of a genus-`g` surface with one boundary component.

use crate::error::{Error, Result};
use crate::ribbon::BandModel;
use crate::word::Word;

/// Base curves that carry a directly computed twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseCurve {
    /// `a_i`, `1 <= i <= 2g`.
    A(usize),
    B,
}

impl std::fmt::Display for BaseCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BaseCurve::A(i) => write!(f, "a_{i}"),
            BaseCurve::B => write!(f, "b"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SurfaceModel {
    genus: usize,
    rank: usize,
    delta: Word,
    a: Vec<Word>,
    b: Option<Word>,
    form: Vec<Vec<i64>>,
    bands: BandModel,
}

impl SurfaceModel {
    /// Standard chain configuration: `a_1 = x_1`, `a_{2i} = x_{2i}`,
    /// `a_{2i+1} = x_{2i-1}[x_{2i+1},x_{2i+2}]x_{2i+1}^{-1}` and `b = x_3`
    /// (b exists for `g >= 2`).
    pub fn build(genus: usize) -> Result<Self> {
        if genus < 1 {
            return Err(Error::GenusTooSmall { genus, min: 1 });
        }
        let rank = 2 * genus;
        let bands = BandModel::standard(genus);
        let delta = bands.boundary_word();
        let mut a = Vec::with_capacity(rank);
        a.push(Word::generator(rank, 1));
        for k in 2..=rank {
            let w = if k % 2 == 0 {
                Word::generator(rank, k)
            } else {
                let i = (k - 1) / 2;
                let (p, q, r) = (2 * i as i32 - 1, 2 * i as i32 + 1, 2 * i as i32 + 2);
                Word::reduce(rank, [p, q, r, -q, -r, -q])?
            };
            a.push(w);
        }
        let b = (genus >= 2).then(|| Word::generator(rank, 3));
        let mut form = vec![vec![0i64; rank]; rank];
        for h in 0..genus {
            form[2 * h][2 * h + 1] = 1;
            form[2 * h + 1][2 * h] = -1;
        }
        Ok(Self {
            genus,
            rank,
            delta,
            a,
            b,
            form,
            bands,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Boundary class `[x_1,x_2]···[x_{2g-1},x_{2g}]`.
    pub fn delta(&self) -> &Word {
        &self.delta
    }

    pub fn bands(&self) -> &BandModel {
        &self.bands
    }

    pub fn base_curve(&self, c: BaseCurve) -> Result<&Word> {
        match c {
            BaseCurve::A(i) if (1..=self.rank).contains(&i) => Ok(&self.a[i - 1]),
            BaseCurve::B => self.b.as_ref().ok_or_else(|| Error::InvalidName {
                name: "b".into(),
                genus: self.genus,
                reason: "b meets a_4, which needs g >= 2".into(),
            }),
            BaseCurve::A(i) => Err(Error::InvalidName {
                name: format!("a_{i}"),
                genus: self.genus,
                reason: format!("index must be in 1..={}", self.rank),
            }),
        }
    }

    pub fn base_curves(&self) -> Vec<BaseCurve> {
        let mut v: Vec<BaseCurve> = (1..=self.rank).map(BaseCurve::A).collect();
        if self.b.is_some() {
            v.push(BaseCurve::B);
        }
        v
    }

    /// Intersection form on `H_1 = Z^{2g}` in the basis `[x_1],…,[x_{2g}]`.
    pub fn intersection_form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn homology_class(&self, u: &Word) -> Vec<i64> {
        u.exponent_sums()
    }

    pub fn pairing(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0;
        for (i, row) in self.form.iter().enumerate() {
            for (j, &f) in row.iter().enumerate() {
                s += u[i] * f * v[j];
            }
        }
        s
    }

    /// Unoriented free-homotopy equality.
    pub fn curve_equal(&self, u: &Word, v: &Word) -> bool {
        u.cyclic_key() == v.cyclic_key()
    }
}
