//! Mapping classes as certified automorphisms, the named-element catalog,
//! and equality / order tests in the boundary-fixing and boundary-free groups.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::aut::Automorphism;
use crate::error::{Error, Result};
use crate::expr::{Atom, Expr};
use crate::homology::SympMatrix;
use crate::names::{CatalogName, CurveName};
use crate::surface::{BaseCurve, SurfaceModel};
use crate::word::Word;

/// Handedness convention for twists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Calibration {
    /// `(A_2A_1)^6` at genus 1 is `x ↦ δ·x·δ^{-1}`.
    #[default]
    Standard,
    /// Every twist replaced by its inverse.
    Mirror,
}

impl Calibration {
    pub fn right(self) -> bool {
        self == Calibration::Standard
    }

    /// Exponent `m` with the boundary twist equal to conjugation by `δ^m`.
    pub fn boundary_exponent(self) -> i64 {
        match self {
            Calibration::Standard => 1,
            Calibration::Mirror => -1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Calibration::Standard => "standard",
            Calibration::Mirror => "mirror",
        }
    }
}

impl fmt::Display for Calibration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Calibration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Calibration::Standard),
            "mirror" => Ok(Calibration::Mirror),
            _ => Err(Error::Parse(format!("unknown calibration `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingClass {
    aut: Automorphism,
    sign: i8,
    expr: String,
}

fn wrap(e: &str) -> String {
    if e.contains(' ') {
        format!("({e})")
    } else {
        e.to_string()
    }
}

impl MappingClass {
    pub fn new(aut: Automorphism, sign: i8, expr: impl Into<String>) -> Self {
        Self {
            aut,
            sign,
            expr: expr.into(),
        }
    }

    pub fn identity(rank: usize) -> Self {
        Self::new(Automorphism::identity(rank), 1, "1")
    }

    pub fn aut(&self) -> &Automorphism {
        &self.aut
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn expr(&self) -> &str {
        &self.expr
    }

    pub fn with_expr(mut self, expr: impl Into<String>) -> Self {
        self.expr = expr.into();
        self
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.aut.apply(w)
    }

    /// `self ∘ other`; `other` acts first.
    pub fn compose(&self, other: &MappingClass) -> Result<MappingClass> {
        let expr = match (self.expr.as_str(), other.expr.as_str()) {
            ("1", e) | (e, "1") => e.to_string(),
            (a, b) => format!("{a} {b}"),
        };
        Ok(Self {
            aut: self.aut.compose(&other.aut)?,
            sign: self.sign * other.sign,
            expr,
        })
    }

    pub fn inverse(&self) -> MappingClass {
        Self {
            aut: self.aut.inverse(),
            sign: self.sign,
            expr: format!("{}^-1", wrap(&self.expr)),
        }
    }

    pub fn pow(&self, k: i64) -> Result<MappingClass> {
        let sign = if k % 2 == 0 { 1 } else { self.sign };
        Ok(Self {
            aut: self.aut.pow(k)?,
            sign,
            expr: match k {
                0 => "1".into(),
                1 => self.expr.clone(),
                _ => format!("{}^{k}", wrap(&self.expr)),
            },
        })
    }

    pub fn matrix(&self) -> SympMatrix {
        SympMatrix::abelianize(&self.aut)
    }
}

/// How a catalog name is built.
enum Definition {
    Base(BaseCurve),
    Reflection,
    Boundary,
    Formula(String),
    Along(CurveName),
}

/// Where a named curve comes from.
pub(crate) enum CurveSource {
    Base(BaseCurve),
    Named(CurveName),
}

pub const DEFAULT_SEED: u64 = 0x5eed_0f2e;

/// Catalog of named mapping classes for one genus and calibration.
pub struct Engine {
    model: SurfaceModel,
    calibration: Calibration,
    cache: Mutex<HashMap<(CatalogName, i64), MappingClass>>,
    pub(crate) curve_cache: Mutex<HashMap<CurveName, crate::curves::CurveRef>>,
    sample: Vec<Word>,
}

fn join(parts: impl IntoIterator<Item = String>) -> String {
    parts.into_iter().collect::<Vec<_>>().join(" ")
}

impl Engine {
    pub fn new(genus: usize, calibration: Calibration) -> Result<Self> {
        Self::with_seed(genus, calibration, DEFAULT_SEED)
    }

    /// `seed` only drives the random pre-screen words used by `equal`.
    pub fn with_seed(genus: usize, calibration: Calibration, seed: u64) -> Result<Self> {
        let model = SurfaceModel::build(genus)?;
        let rank = model.rank();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sample = (0..8)
            .map(|_| {
                let letters: Vec<i32> = (0..12)
                    .map(|_| {
                        let i = rng.gen_range(1..=rank as i32);
                        if rng.gen_bool(0.5) {
                            i
                        } else {
                            -i
                        }
                    })
                    .collect();
                Word::reduce(rank, letters).expect("in range")
            })
            .collect();
        Ok(Self {
            model,
            calibration,
            cache: Mutex::new(HashMap::new()),
            curve_cache: Mutex::new(HashMap::new()),
            sample,
        })
    }

    pub fn standard(genus: usize) -> Result<Self> {
        Self::new(genus, Calibration::Standard)
    }

    pub fn model(&self) -> &SurfaceModel {
        &self.model
    }

    pub fn genus(&self) -> usize {
        self.model.genus()
    }

    pub fn rank(&self) -> usize {
        self.model.rank()
    }

    pub fn calibration(&self) -> Calibration {
        self.calibration
    }

    pub fn identity(&self) -> MappingClass {
        MappingClass::identity(self.rank())
    }

    /// Twist about a base curve `a_i` or `b`.
    pub fn base_twist(&self, c: BaseCurve) -> Result<MappingClass> {
        let word = self.model.base_curve(c)?;
        let aut = self.model.bands().twist(word, self.calibration.right())?;
        let name = match c {
            BaseCurve::A(i) => format!("A{i}"),
            BaseCurve::B => "B".into(),
        };
        Ok(MappingClass::new(aut, 1, name))
    }

    /// `F∘C∘F^{-1}`.
    pub fn conjugate_twist(&self, f: &MappingClass, c: &MappingClass) -> Result<MappingClass> {
        let expr = format!(
            "{} {} {}^-1",
            wrap(f.expr()),
            wrap(c.expr()),
            wrap(f.expr())
        );
        Ok(f.compose(c)?.compose(&f.inverse())?.with_expr(expr))
    }

    /// Positive twist about `F(c)` given the positive twist `C` about `c`:
    /// `F∘C∘F^{-1}`, or `F∘C^{-1}∘F^{-1}` when `F` reverses orientation.
    pub fn twist_along(&self, f: &MappingClass, c: &MappingClass) -> Result<MappingClass> {
        if f.sign() > 0 {
            self.conjugate_twist(f, c)
        } else {
            self.conjugate_twist(f, &c.inverse())
        }
    }

    /// Orientation-reversing involution fixing every `a_i` and `b` as a set.
    /// Composed with `S^{2g+1}` it gives `R`.
    ///
    /// `x_{2i-1} ↦ P_i x_{2i-1}^{-1} P_i^{-1}`,
    /// `x_{2i} ↦ P_i x_{2i-1} x_{2i} x_{2i-1}^{-1} P_i^{-1}` with
    /// `P_i = h_g^{-1}···h_{i+1}^{-1}`, `h_i = [x_{2i-1},x_{2i}]`.
    fn build_reflection(&self) -> Result<MappingClass> {
        let g = self.genus();
        let rank = self.rank();
        let mut images = vec![Word::identity(rank); rank];
        let mut p = Word::identity(rank);
        for i in (1..=g).rev() {
            let (a, b) = (2 * i as i32 - 1, 2 * i as i32);
            images[2 * i - 2] = Word::reduce(rank, [-a])?.conjugate(&p)?;
            images[2 * i - 1] = Word::reduce(rank, [a, b, -a])?.conjugate(&p)?;
            let h = Word::reduce(rank, [a, b, -a, -b])?;
            p = p.concat(&h.inverse())?;
        }
        let aut = Automorphism::from_images(images.clone(), images)
            .map_err(|e| Error::Certification(format!("reflection: {e}")))?;
        let delta = self.model.delta();
        if aut.apply(delta)? != delta.inverse() {
            return Err(Error::Certification(
                "reflection does not invert delta".into(),
            ));
        }
        Ok(MappingClass::new(aut, -1, "R0"))
    }

    fn boundary_twist(&self) -> Result<MappingClass> {
        let d = self
            .model
            .delta()
            .pow(self.calibration.boundary_exponent())?;
        Ok(MappingClass::new(Automorphism::inner(&d)?, 1, "Td"))
    }

    fn definition(&self, n: CatalogName) -> Result<Definition> {
        use CatalogName as N;
        let g = self.genus();
        n.validate(g)?;
        Ok(match n {
            N::Identity => Definition::Formula(String::new()),
            N::A(5) if g == 2 => Definition::Base(BaseCurve::B),
            N::A(i) => Definition::Base(BaseCurve::A(i)),
            N::B => Definition::Base(BaseCurve::B),
            N::R0 => Definition::Reflection,
            // the reflection fixing every a_i but exchanging b with its
            // image under the rotation S^{2g+1}
            N::R => Definition::Formula(format!("S^{} R0", 2 * g + 1)),
            N::TBoundary => Definition::Boundary,
            N::S => Definition::Formula(join((1..=2 * g).rev().map(|i| format!("A{i}")))),
            N::U => Definition::Formula("S^-1".into()),
            N::T => Definition::Formula("S R".into()),
            N::C(k) => {
                let e = 2 * k as i64 - 1;
                Definition::Formula(format!("S^{} B S^{}", -e, e))
            }
            N::D(k) => {
                let e = 2 * k as i64;
                Definition::Formula(format!("S^{} B S^{}", -e, e))
            }
            N::CBar(k) => {
                let e = 2 * g as i64 + 1;
                Definition::Formula(format!("S^{e} C{k} S^{}", -e))
            }
            N::DBar(k) => {
                let e = 2 * g as i64 + 1;
                Definition::Formula(format!("S^{e} D{k} S^{}", -e))
            }
            N::B2 => Definition::Along(CurveName::B2),
            N::E => Definition::Along(CurveName::E),
            N::Ei(k) => Definition::Along(CurveName::Ei(k)),
            N::Twist(c) => Definition::Along(c),
            N::Ui(i) => Definition::Formula(format!("Cbar{i}^-1 Dbar{}^-1", i + 1)),
            N::X => Definition::Formula(self.x_formula()),
            N::P => Definition::Formula("X B X^-1".into()),
            N::V => Definition::Formula("A4 A3 A2 A1 A1 A2 A3 A4".into()),
            N::W => Definition::Formula(
                "A6 A5 A4 A3 A2 (t2 A6 A5)^-1 B (t2 A6 A5) (A4 A3 A2 A1)^-1".into(),
            ),
            N::T1 => Definition::Formula("A2 A1 A3 A2".into()),
            N::T2 => Definition::Formula("A4 A3 A5 A4".into()),
        })
    }

    /// `D_3^{-1}C_4^{-1}D_5^{-1}···D_{g-2}^{-1}C_{g-1}^{-1}` (empty at `g = 3`).
    pub fn odd_tail(&self) -> String {
        join((3..self.genus()).map(|j| {
            if j % 2 == 1 {
                format!("D{j}^-1")
            } else {
                format!("C{j}^-1")
            }
        }))
    }

    /// `C_3^{-1}D_4^{-1}C_5^{-1}···D_{g-2}^{-1}C_{g-1}^{-1}`.
    pub fn even_tail(&self) -> String {
        join((3..self.genus()).map(|j| {
            if j % 2 == 1 {
                format!("C{j}^-1")
            } else {
                format!("D{j}^-1")
            }
        }))
    }

    /// The parity-dependent `V` with `x = VS(b)`.
    pub fn x_prefix(&self) -> String {
        if self.genus() % 2 == 1 {
            self.odd_tail()
        } else {
            self.even_tail()
        }
    }

    fn x_formula(&self) -> String {
        if self.genus() % 2 == 1 {
            format!("S^3 C2 D1 B {} S", self.odd_tail())
        } else {
            format!("S^4 B D2^-1 {} S", self.even_tail())
        }
    }

    /// Human-readable definition of a catalog name.
    pub fn describe(&self, n: CatalogName) -> Result<String> {
        Ok(match self.definition(n)? {
            Definition::Base(c) => format!("twist about {c}"),
            Definition::Reflection => "reflection".into(),
            Definition::Boundary => format!(
                "conjugation by delta^{}",
                self.calibration.boundary_exponent()
            ),
            Definition::Formula(f) if f.is_empty() => "1".into(),
            Definition::Formula(f) => f,
            Definition::Along(c) => format!("twist about {c}"),
        })
    }

    fn certify(&self, m: &MappingClass) -> Result<()> {
        let d = self.model.delta();
        let img = m.apply(d)?;
        let ok = if m.sign() > 0 {
            img == *d
        } else {
            img == d.inverse()
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Certification(format!(
                "{} does not map delta to delta^{}",
                m.expr(),
                m.sign()
            )))
        }
    }

    fn build(&self, n: CatalogName) -> Result<MappingClass> {
        let m = match self.definition(n)? {
            Definition::Base(c) => self.base_twist(c)?,
            Definition::Reflection => self.build_reflection()?,
            Definition::Boundary => self.boundary_twist()?,
            Definition::Formula(f) => self.eval(&Expr::parse(&f)?)?,
            Definition::Along(c) => {
                let (map, source) = self.curve_definition(c)?;
                let f = self.eval(&Expr::parse(&map)?)?;
                let base = match source {
                    CurveSource::Base(b) => self.base_twist(b)?,
                    CurveSource::Named(s) => self.resolve(CatalogName::Twist(s))?,
                };
                self.twist_along(&f, &base)?
            }
        };
        let m = m.with_expr(n.to_string());
        self.certify(&m)?;
        Ok(m)
    }

    fn cached(&self, key: (CatalogName, i64)) -> Option<MappingClass> {
        self.cache
            .lock()
            .expect("cache poisoned")
            .get(&key)
            .cloned()
    }

    fn store(&self, key: (CatalogName, i64), m: &MappingClass) {
        self.cache
            .lock()
            .expect("cache poisoned")
            .entry(key)
            .or_insert_with(|| m.clone());
    }

    /// Resolve a catalog name (memoized).
    pub fn resolve(&self, n: CatalogName) -> Result<MappingClass> {
        if let Some(m) = self.cached((n, 1)) {
            return Ok(m);
        }
        let m = self.build(n)?;
        self.store((n, 1), &m);
        Ok(m)
    }

    /// `n^k` (memoized).
    pub fn resolve_pow(&self, n: CatalogName, k: i64) -> Result<MappingClass> {
        if k == 1 {
            return self.resolve(n);
        }
        if let Some(m) = self.cached((n, k)) {
            return Ok(m);
        }
        let m = if k == -1 {
            self.resolve(n)?.inverse()
        } else {
            self.resolve(n)?.pow(k)?
        };
        let m = m.with_expr(Expr::name(n, k).to_string());
        self.store((n, k), &m);
        Ok(m)
    }

    pub fn reflection(&self) -> Result<MappingClass> {
        self.resolve(CatalogName::R)
    }

    pub fn eval(&self, e: &Expr) -> Result<MappingClass> {
        let mut acc = self.identity();
        for f in &e.factors {
            let m = match &f.atom {
                Atom::Name(n) => self.resolve_pow(*n, f.exp)?,
                Atom::Group(inner) => self.eval(inner)?.pow(f.exp)?,
            };
            acc = acc.compose(&m)?;
        }
        Ok(acc.with_expr(if e.is_empty() {
            "1".to_string()
        } else {
            e.to_string()
        }))
    }

    pub fn eval_str(&self, s: &str) -> Result<MappingClass> {
        self.eval(&Expr::parse(s)?)
    }

    /// `m` with `φ = (x ↦ δ^m·x·δ^{-m})`, if any.
    pub fn delta_power(&self, a: &Automorphism) -> Option<i64> {
        let w = a.inner_witness()?;
        // φ(x) = w^{-1} x w, so the conjugator is w^{-1}
        let v = w.inverse();
        if v.is_empty() {
            return Some(0);
        }
        let d = self.model.delta();
        if v.len() % d.len() != 0 {
            return None;
        }
        let m = (v.len() / d.len()) as i64;
        [m, -m]
            .into_iter()
            .find(|&k| d.pow(k).ok().as_ref() == Some(&v))
    }

    /// Cheap necessary conditions for equality.
    fn prescreen(&self, a: &MappingClass, b: &MappingClass) -> bool {
        if a.sign() != b.sign() || a.aut().abelianization() != b.aut().abelianization() {
            return false;
        }
        self.sample
            .iter()
            .all(|w| matches!((a.apply(w), b.apply(w)), (Ok(x), Ok(y)) if x == y))
    }

    /// Exact equality in the boundary-fixing group.
    pub fn equal(&self, a: &MappingClass, b: &MappingClass) -> bool {
        self.prescreen(a, b) && a.aut().equals(b.aut())
    }

    /// `m` with `a∘b^{-1}` equal to conjugation by `δ^m`.
    pub fn equal_mod_boundary(&self, a: &MappingClass, b: &MappingClass) -> Option<i64> {
        if a.sign() != b.sign() {
            return None;
        }
        if self.equal(a, b) {
            return Some(0);
        }
        let rho = a.aut().compose(&b.inverse().aut).ok()?;
        self.delta_power(&rho)
    }

    /// Least `n <= cap` with `φ^n` trivial modulo the boundary twist.
    pub fn order_mod_boundary(&self, phi: &MappingClass, cap: u64) -> Option<u64> {
        let d = phi.matrix().order(cap)?;
        let step = phi.pow(d as i64).ok()?;
        let mut cur = step.clone();
        let mut n = d;
        while n <= cap {
            if cur.sign() > 0 && self.delta_power(cur.aut()).is_some() {
                return Some(n);
            }
            cur = cur.compose(&step).ok()?;
            n += d;
        }
        None
    }

    /// A base curve (or failing that, a generator) on which `a` and `b` differ.
    pub fn distinguishing_curve(&self, a: &MappingClass, b: &MappingClass) -> Option<String> {
        for c in self.model.base_curves() {
            let w = self.model.base_curve(c).ok()?;
            let (x, y) = (a.apply(w).ok()?, b.apply(w).ok()?);
            if !self.model.curve_equal(&x, &y) {
                return Some(format!(
                    "{c}: {} vs {}",
                    x.cyclic_reduce(),
                    y.cyclic_reduce()
                ));
            }
        }
        for i in 1..=self.rank() {
            let (x, y) = (a.aut().image(i), b.aut().image(i));
            if x != y {
                return Some(format!("x{i}: {x} vs {y}"));
            }
        }
        None
    }

    /// Named curves whose class equals that of `w`.
    pub fn named_matches(&self, w: &Word) -> Vec<CurveName> {
        let key = w.cyclic_key();
        CurveName::all(self.genus())
            .into_iter()
            .filter(|&c| {
                self.resolve_curve(c)
                    .map(|r| r.word().cyclic_key() == key)
                    .unwrap_or(false)
            })
            .collect()
    }

    /// `join` for callers that build products from parts.
    pub fn product(parts: &[&str]) -> String {
        join(
            parts
                .iter()
                .filter(|p| !p.is_empty())
                .map(|p| p.to_string()),
        )
    }
}

impl Engine {
    pub(crate) fn curve_definition(&self, c: CurveName) -> Result<(String, CurveSource)> {
        use CurveName as C;
        let g = self.genus() as i64;
        c.validate(self.genus())?;
        Ok(match c {
            C::A(0) => ("S".into(), CurveSource::Base(BaseCurve::A(1))),
            C::A(k) => (String::new(), CurveSource::Base(BaseCurve::A(k))),
            C::B => (String::new(), CurveSource::Base(BaseCurve::B)),
            C::C(k) => (
                format!("S^{}", -(2 * k as i64 - 1)),
                CurveSource::Base(BaseCurve::B),
            ),
            C::D(k) => (
                format!("S^{}", -(2 * k as i64)),
                CurveSource::Base(BaseCurve::B),
            ),
            C::CBar(k) => (format!("S^{}", 2 * g + 1), CurveSource::Named(C::C(k))),
            C::DBar(k) => (format!("S^{}", 2 * g + 1), CurveSource::Named(C::D(k))),
            C::B2 => ("C2^-1 A6 A5 A4".into(), CurveSource::Base(BaseCurve::B)),
            C::E => ("A2 A1 A4^-1 C1".into(), CurveSource::Base(BaseCurve::A(5))),
            C::Alpha => (
                Self::product(&["B", &self.odd_tail(), "S"]),
                CurveSource::Base(BaseCurve::B),
            ),
            C::Ei(1) => {
                let us: Vec<String> = (2..g - 2).step_by(2).map(|i| format!("U{i}")).collect();
                (
                    Self::product(&[&us.join(" "), &format!("Cbar{}^-1", g - 1), "T"]),
                    CurveSource::Base(BaseCurve::B),
                )
            }
            C::Ei(2) => {
                let u: Vec<String> = (2..g - 2)
                    .step_by(2)
                    .map(|i| format!("Cbar{i} D{i}"))
                    .collect();
                (
                    Self::product(&["C1", &u.join(" "), &format!("Cbar{}", g - 1), "T^-1"]),
                    CurveSource::Named(C::CBar(g as usize - 1)),
                )
            }
            C::Ei(3) => ("E1^-1 Cbar2^-1".into(), CurveSource::Named(C::Ei(2))),
            C::Ei(_) => ("T^3".into(), CurveSource::Named(C::Ei(3))),
            C::X => (
                Self::product(&[&self.x_prefix(), "S"]),
                CurveSource::Base(BaseCurve::B),
            ),
            C::Y => ("B S".into(), CurveSource::Base(BaseCurve::B)),
            C::Z => ("S^2".into(), CurveSource::Named(C::Y)),
        })
    }
}
