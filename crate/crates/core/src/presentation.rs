//! Finite presentations of the boundary-fixing mapping class group: the
//! classical one on `B, A_1, …, A_{2g}` and its rewrite on `B, U`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mcg::{Engine, MappingClass};
use crate::names::CatalogName;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Syllable {
    pub gen: String,
    pub exp: i64,
}

/// A word over generator names, kept freely reduced with merged syllables.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SWord(Vec<Syllable>);

impl SWord {
    pub fn one() -> Self {
        SWord(Vec::new())
    }

    pub fn gen(name: &str) -> Self {
        SWord(vec![Syllable {
            gen: name.into(),
            exp: 1,
        }])
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    fn push(&mut self, s: Syllable) {
        if s.exp == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.gen == s.gen {
                last.exp += s.exp;
                if last.exp == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push(s);
    }

    pub fn mul(&self, other: &SWord) -> SWord {
        let mut out = self.clone();
        for s in &other.0 {
            out.push(s.clone());
        }
        out
    }

    pub fn inv(&self) -> SWord {
        let mut out = SWord::one();
        for s in self.0.iter().rev() {
            out.push(Syllable {
                gen: s.gen.clone(),
                exp: -s.exp,
            });
        }
        out
    }

    pub fn pow(&self, k: i64) -> SWord {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut out = SWord::one();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `h^F = F·h·F^{-1}`.
    pub fn conj(&self, f: &SWord) -> SWord {
        f.mul(self).mul(&f.inv())
    }

    pub fn product(parts: &[&SWord]) -> SWord {
        parts.iter().fold(SWord::one(), |acc, p| acc.mul(p))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .0
            .iter()
            .map(|s| format!("{}^{}", s.gen, s.exp))
            .collect();
        f.write_str(&toks.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub label: String,
    pub word: SWord,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    Wajnryb,
    TwoGenerator,
}

impl Scheme {
    pub fn as_str(self) -> &'static str {
        match self {
            Scheme::Wajnryb => "wajnryb",
            Scheme::TwoGenerator => "two-generator",
        }
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wajnryb" => Ok(Scheme::Wajnryb),
            "two-generator" => Ok(Scheme::TwoGenerator),
            _ => Err(Error::Parse(format!("unknown scheme `{s}`"))),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub scheme: Scheme,
    pub genus: usize,
    pub generators: Vec<String>,
    pub relators: Vec<Relator>,
}

/// `l = r` as the relator `l·r^{-1}`.
fn rel(label: String, l: SWord, r: SWord) -> Relator {
    Relator {
        label,
        word: l.mul(&r.inv()),
    }
}

/// Alphabet-generic relators (i)–(iv), with `a(i)` the word standing for `A_i`.
fn relators(g: usize, b: &SWord, a: &dyn Fn(usize) -> SWord) -> Vec<Relator> {
    let mut out = Vec::new();
    for i in (1..=2 * g).filter(|&i| i != 4) {
        out.push(rel(format!("(i) B A{i}"), b.mul(&a(i)), a(i).mul(b)));
    }
    for j in 1..=2 * g {
        for k in j + 2..=2 * g {
            out.push(rel(
                format!("(i) A{j} A{k}"),
                a(j).mul(&a(k)),
                a(k).mul(&a(j)),
            ));
        }
    }
    out.push(rel(
        "(ii) B A4".into(),
        SWord::product(&[b, &a(4), b]),
        SWord::product(&[&a(4), b, &a(4)]),
    ));
    for i in 1..2 * g {
        out.push(rel(
            format!("(ii) A{i} A{}", i + 1),
            SWord::product(&[&a(i), &a(i + 1), &a(i)]),
            SWord::product(&[&a(i + 1), &a(i), &a(i + 1)]),
        ));
    }
    out
}

fn chain_v(a: &dyn Fn(usize) -> SWord) -> SWord {
    SWord::product(&[&a(4), &a(3), &a(2), &a(1), &a(1), &a(2), &a(3), &a(4)])
}

fn t1_t2_w(b: &SWord, a: &dyn Fn(usize) -> SWord) -> (SWord, SWord, SWord) {
    let t1 = SWord::product(&[&a(2), &a(1), &a(3), &a(2)]);
    let t2 = SWord::product(&[&a(4), &a(3), &a(5), &a(4)]);
    let m = SWord::product(&[&t2, &a(6), &a(5)]);
    let w = SWord::product(&[
        &a(6),
        &a(5),
        &a(4),
        &a(3),
        &a(2),
        &m.inv(),
        b,
        &m,
        &SWord::product(&[&a(4), &a(3), &a(2), &a(1)]).inv(),
    ]);
    (t1, t2, w)
}

pub fn wajnryb_presentation(g: usize) -> Result<Presentation> {
    if g < 3 {
        return Err(Error::GenusTooSmall { genus: g, min: 3 });
    }
    let b = SWord::gen("B");
    let a = |i: usize| SWord::gen(&format!("A{i}"));
    let mut rs = relators(g, &b, &a);
    let v = chain_v(&a);
    rs.push(rel(
        "(iii)".into(),
        SWord::product(&[&a(1), &a(2), &a(3)]).pow(4),
        SWord::product(&[&b, &v, &b, &v.inv()]),
    ));
    let (t1, t2, w) = t1_t2_w(&b, &a);
    let t21 = t2.mul(&t1);
    rs.push(rel(
        "(iv)".into(),
        SWord::product(&[&a(1), &a(3), &a(5), &b.conj(&w)]),
        SWord::product(&[&t21.inv(), &b, &t21, &t2.inv(), &b, &t2, &b]),
    ));
    let mut generators = vec!["B".to_string()];
    generators.extend((1..=2 * g).map(|i| format!("A{i}")));
    Ok(Presentation {
        scheme: Scheme::Wajnryb,
        genus: g,
        generators,
        relators: rs,
    })
}

/// `X` written over `B` and `U` (`S = U^{-1}`, `C_k = U^{2k-1}BU^{1-2k}`, …).
pub fn x_word(g: usize) -> SWord {
    let u = SWord::gen("U");
    let b = SWord::gen("B");
    let s = u.inv();
    let c = |k: usize| b.conj(&u.pow(2 * k as i64 - 1));
    let d = |k: usize| b.conj(&u.pow(2 * k as i64));
    let mut x = SWord::one();
    if g % 2 == 1 {
        x = SWord::product(&[&s.pow(3), &c(2), &d(1), &b]);
        for j in 3..g {
            x = x.mul(&if j % 2 == 1 { d(j) } else { c(j) }.inv());
        }
    } else {
        x = x.mul(&SWord::product(&[&s.pow(4), &b, &d(2).inv()]));
        for j in 3..g {
            x = x.mul(&if j % 2 == 1 { c(j) } else { d(j) }.inv());
        }
    }
    x.mul(&s)
}

/// Rewrite onto `B, U` with `A_k ↦ P^{U^k}`, `P = B^X`, collapsing the
/// commutation and braid families to one representative per `U`-orbit.
pub fn rewrite_two_generator(p: &Presentation) -> Result<Presentation> {
    if p.scheme != Scheme::Wajnryb {
        return Err(Error::WrongScheme {
            expected: Scheme::Wajnryb.to_string(),
            got: p.scheme.to_string(),
        });
    }
    let g = p.genus;
    let b = SWord::gen("B");
    let u = SWord::gen("U");
    let pw = b.conj(&x_word(g));
    let a = |i: usize| pw.conj(&u.pow(i as i64));
    let mut rs = Vec::new();
    for i in (1..=2 * g).filter(|&i| i != 4) {
        rs.push(rel(format!("(i) B P^U^{i}"), b.mul(&a(i)), a(i).mul(&b)));
    }
    for i in 2..2 * g {
        rs.push(rel(format!("(ii) P P^U^{i}"), pw.mul(&a(i)), a(i).mul(&pw)));
    }
    rs.push(rel(
        "(iii) B P^U^4".into(),
        SWord::product(&[&b, &a(4), &b]),
        SWord::product(&[&a(4), &b, &a(4)]),
    ));
    rs.push(rel(
        "(iii) P P^U".into(),
        SWord::product(&[&pw, &a(1), &pw]),
        SWord::product(&[&a(1), &pw, &a(1)]),
    ));
    let v = chain_v(&a);
    rs.push(rel(
        "(iv)".into(),
        SWord::product(&[&a(1), &a(2), &a(3)]).pow(4),
        b.mul(&b.conj(&v)),
    ));
    let (t1, t2, w) = t1_t2_w(&b, &a);
    rs.push(rel(
        "(v)".into(),
        SWord::product(&[&a(1), &a(3), &a(5), &b.conj(&w)]),
        SWord::product(&[&b, &b.conj(&t1.inv().mul(&t2.inv())), &b.conj(&t2.inv())]),
    ));
    Ok(Presentation {
        scheme: Scheme::TwoGenerator,
        genus: g,
        generators: vec!["B".into(), "U".into()],
        relators: rs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelatorStatus {
    Exact,
    /// Conjugation by `δ^m`, `m ≠ 0`.
    DeltaPower(i64),
    Failure(String),
}

#[derive(Clone, Debug)]
pub struct RelatorReport {
    pub label: String,
    pub status: RelatorStatus,
}

pub fn evaluate_word(engine: &Engine, w: &SWord) -> Result<MappingClass> {
    let mut acc = engine.identity();
    for s in w.syllables() {
        let n: CatalogName = s.gen.parse()?;
        acc = acc.compose(&engine.resolve_pow(n, s.exp)?)?;
    }
    Ok(acc)
}

pub fn verify_presentation(p: &Presentation, engine: &Engine) -> Result<Vec<RelatorReport>> {
    if p.genus != engine.genus() {
        return Err(Error::GenusMismatch {
            presentation: p.genus,
            model: engine.genus(),
        });
    }
    p.relators
        .par_iter()
        .map(|r| {
            let m = evaluate_word(engine, &r.word)?;
            let status = if m.aut().is_identity() {
                RelatorStatus::Exact
            } else if let Some(k) = engine.delta_power(m.aut()) {
                RelatorStatus::DeltaPower(k)
            } else {
                let id = engine.identity();
                RelatorStatus::Failure(
                    engine
                        .distinguishing_curve(&m, &id)
                        .unwrap_or_else(|| "no witness".into()),
                )
            };
            Ok(RelatorReport {
                label: r.label.clone(),
                status,
            })
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct Counts {
    generators: usize,
    relators: usize,
}

#[derive(Serialize, Deserialize)]
struct JsonPresentation {
    scheme: String,
    genus: usize,
    generators: Vec<String>,
    relators: Vec<Vec<Syllable>>,
    counts: Counts,
}

pub fn export(p: &Presentation, format: &str) -> Result<String> {
    match format {
        "text" => {
            let mut s = format!(
                "# {} {} {} {}\n",
                p.scheme,
                p.genus,
                p.generators.len(),
                p.relators.len()
            );
            for r in &p.relators {
                s.push_str(&r.word.to_string());
                s.push('\n');
            }
            Ok(s)
        }
        "json" => {
            let j = JsonPresentation {
                scheme: p.scheme.to_string(),
                genus: p.genus,
                generators: p.generators.clone(),
                relators: p.relators.iter().map(|r| r.word.0.clone()).collect(),
                counts: Counts {
                    generators: p.generators.len(),
                    relators: p.relators.len(),
                },
            };
            serde_json::to_string_pretty(&j)
                .map(|mut s| {
                    s.push('\n');
                    s
                })
                .map_err(|e| Error::Json(e.to_string()))
        }
        other => Err(Error::UnknownFormat(other.into())),
    }
}

/// Parse the JSON export. Relator labels are not part of the schema and come
/// back as `r1, r2, …`.
pub fn parse_json(s: &str) -> Result<Presentation> {
    let j: JsonPresentation = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
    if j.counts.relators != j.relators.len() || j.counts.generators != j.generators.len() {
        return Err(Error::Json("counts disagree with contents".into()));
    }
    Ok(Presentation {
        scheme: j.scheme.parse()?,
        genus: j.genus,
        generators: j.generators,
        relators: j
            .relators
            .into_iter()
            .enumerate()
            .map(|(i, w)| Relator {
                label: format!("r{}", i + 1),
                word: w.into_iter().fold(SWord::one(), |mut acc, s| {
                    acc.push(s);
                    acc
                }),
            })
            .collect(),
    })
}
