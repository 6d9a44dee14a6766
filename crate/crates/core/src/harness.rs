//! Named, genus-parametrized checks of the displayed identities and orbit
//! claims, with machine-readable results.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mcg::Engine;
use crate::names::{CatalogName, CurveName};
use crate::presentation::{
    rewrite_two_generator, verify_presentation, wajnryb_presentation, RelatorStatus,
};

pub const CHECKS: &[&str] = &[
    "chain_action",
    "thm3_odd",
    "thm3_even",
    "ext_T_orbit",
    "ext_T_chain",
    "ext_even",
    "ext_odd_e_chain",
    "lantern",
    "lantern_rewrite",
    "b2_consistency",
    "cbar_commute",
    "tor_even",
    "tor_odd",
    "tor_g3_chain",
    "tor_b2_e",
    "tor_final",
    "orders",
    "rotation",
    "presentation_wajnryb",
    "presentation_two_gen",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    #[serde(skip)]
    pub genus: usize,
    pub status: Status,
    pub witness: Option<String>,
    pub ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub genus: usize,
    pub calibration: String,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.results
            .iter()
            .filter(|r| r.status == Status::Fail)
            .count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check; timings only when asked, so the default is byte-stable.
    pub fn to_text(&self, timings: bool) -> String {
        let mut s = String::new();
        for r in &self.results {
            let st = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            s.push_str(&format!("{st:4}  g={}  {:<22}", self.genus, r.name));
            if timings {
                s.push_str(&format!(" {:>6} ms", r.ms));
            }
            if let Some(w) = &r.witness {
                s.push_str("  ");
                s.push_str(w);
            }
            s.truncate(s.trim_end().len());
            s.push('\n');
        }
        s.push_str(&format!(
            "{} checks, {} failed, {} skipped\n",
            self.results.len(),
            self.failures(),
            self.results
                .iter()
                .filter(|r| r.status == Status::Skipped)
                .count()
        ));
        s
    }
}

/// Outcome of one predicate: pass flag plus a note.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub ok: bool,
    pub detail: String,
}

enum Outcome {
    Done(Vec<Verdict>, Vec<String>),
    Skip(String),
}

/// `lhs == rhs` exactly as automorphisms.
pub fn identity_check(e: &Engine, lhs: &str, rhs: &str) -> Result<Verdict> {
    let l = e.eval_str(lhs)?;
    let r = e.eval_str(rhs)?;
    if e.equal(&l, &r) {
        return Ok(Verdict {
            ok: true,
            detail: format!("{lhs} == {rhs}"),
        });
    }
    let detail = match e.equal_mod_boundary(&l, &r) {
        Some(m) => format!("{lhs} == {rhs} only up to delta^{m}"),
        None => format!(
            "{lhs} != {rhs}; differs on {}",
            e.distinguishing_curve(&l, &r)
                .unwrap_or_else(|| "orientation".into())
        ),
    };
    Ok(Verdict { ok: false, detail })
}

/// `expr(from) ~ to` as unoriented curves.
pub fn orbit_check(e: &Engine, expr: &str, from: CurveName, to: CurveName) -> Result<Verdict> {
    let img = e.apply_to_curve(expr, from)?;
    let target = e.resolve_curve(to)?;
    let ok = e.model().curve_equal(&img, target.word());
    let detail = if ok {
        format!("{expr} ({from}) ~ {to}")
    } else {
        format!(
            "{expr} ({from}) = {} is not {to} = {}",
            img.cyclic_reduce(),
            target.word().cyclic_reduce()
        )
    };
    Ok(Verdict { ok, detail })
}

fn skip(reason: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome::Skip(reason.into()))
}

fn done(v: Vec<Verdict>) -> Result<Outcome> {
    Ok(Outcome::Done(v, Vec::new()))
}

fn odd_at_least(g: usize, min: usize) -> Option<String> {
    (g.is_multiple_of(2) || g < min).then(|| format!("needs odd g >= {min}"))
}

fn even_at_least(g: usize, min: usize) -> Option<String> {
    (g % 2 == 1 || g < min).then(|| format!("needs even g >= {min}"))
}

fn at_least(g: usize, min: usize) -> Option<String> {
    (g < min).then(|| format!("needs g >= {min}"))
}

/// `(C̄_1^{g-3}V)(SBS^{-1}C̄_1^{-1})(V^{-1}C̄_1^{3-g}) == X C̄_1^{-1}` with `X` the twist about `x`.
fn vsb_identity(e: &Engine) -> Result<Verdict> {
    let g = e.genus() as i64;
    let v = e.x_prefix();
    let vv = if v.is_empty() { "1".to_string() } else { v };
    let lhs = format!(
        "(Cbar1^{} {vv}) (S B S^-1 Cbar1^-1) ({vv})^-1 Cbar1^{}",
        g - 3,
        3 - g
    );
    identity_check(e, &lhs, "T[x] Cbar1^-1")
}

fn check(e: &Engine, name: &str) -> Result<Outcome> {
    let g = e.genus();
    match name {
        "chain_action" => done(
            (2..=2 * g)
                .map(|i| identity_check(e, &format!("S A{i} S^-1"), &format!("A{}", i - 1)))
                .collect::<Result<_>>()?,
        ),
        "thm3_odd" => {
            if let Some(r) = odd_at_least(g, 3) {
                return skip(r);
            }
            let tail = e.odd_tail();
            let mut notes = Vec::new();
            if tail.is_empty() {
                notes.push("middle product D3^-1...C(g-1)^-1 is empty at this genus".into());
            }
            let word = Engine::product(&["C2 D1 B", &tail, "S"]);
            let v = vec![
                orbit_check(e, &word, CurveName::B, CurveName::A(3))?,
                orbit_check(e, "C2 D1", CurveName::Alpha, CurveName::A(3))?,
            ];
            Ok(Outcome::Done(v, notes))
        }
        "thm3_even" => {
            if let Some(r) = even_at_least(g, 4) {
                return skip(r);
            }
            let word = Engine::product(&["B D2^-1", &e.even_tail(), "S"]);
            done(vec![orbit_check(e, &word, CurveName::B, CurveName::A(4))?])
        }
        "ext_T_orbit" => {
            if let Some(r) = at_least(g, 2) {
                return skip(r);
            }
            use CurveName as C;
            let mut pairs = vec![(C::B, C::C(1))];
            for i in 1..g.saturating_sub(1) {
                pairs.push((C::C(i), C::DBar(i)));
                pairs.push((C::CBar(i), C::D(i)));
                pairs.push((C::D(i), C::C(i + 1)));
                pairs.push((C::DBar(i), C::CBar(i + 1)));
            }
            done(
                pairs
                    .into_iter()
                    .map(|(a, b)| orbit_check(e, "T^-1", a, b))
                    .collect::<Result<_>>()?,
            )
        }
        "ext_T_chain" => {
            let v: Vec<Verdict> = (2..2 * g)
                .map(|i| orbit_check(e, "T", CurveName::A(i), CurveName::A(i - 1)))
                .collect::<Result<_>>()?;
            let last = orbit_check(e, "T", CurveName::A(2 * g), CurveName::A(2 * g - 1))?;
            let note = format!(
                "informational i=2g: T(a_{}) ~ a_{} is {}",
                2 * g,
                2 * g - 1,
                last.ok
            );
            Ok(Outcome::Done(v, vec![note]))
        }
        "ext_even" => {
            if let Some(r) = even_at_least(g, 2) {
                return skip(r);
            }
            let mut parts: Vec<String> = (1..g.saturating_sub(2))
                .step_by(2)
                .map(|k| format!("C{k} Dbar{k}"))
                .collect();
            parts.push(format!("C{} T^-1", g - 1));
            done(vec![orbit_check(
                e,
                &parts.join(" "),
                CurveName::C(g - 1),
                CurveName::A(1),
            )?])
        }
        "ext_odd_e_chain" => {
            if let Some(r) = odd_at_least(g, 3) {
                return skip(r);
            }
            let mut v = Vec::new();
            for k in 1..=4 {
                let c = e.resolve_curve(CurveName::Ei(k))?;
                let simple = e.model().bands().twist(c.word(), true).is_ok();
                v.push(Verdict {
                    ok: simple,
                    detail: format!("e_{k} := {} is simple: {simple}", c.definition()),
                });
            }
            v.push(orbit_check(
                e,
                "C1^-1 E4",
                CurveName::Ei(2),
                CurveName::A(1),
            )?);
            done(v)
        }
        "lantern" => match at_least(g, 3) {
            Some(r) => skip(r),
            None => done(vec![identity_check(e, "A1 A3 A5 B2", "B D1 E")?]),
        },
        "lantern_rewrite" => match at_least(g, 3) {
            Some(r) => skip(r),
            None => done(vec![identity_check(
                e,
                "A1",
                "(B A3^-1) (D1 A5^-1) (E B2^-1)",
            )?]),
        },
        "b2_consistency" => {
            if g != 3 {
                return skip("C2^-1 S(b) = b_2 is claimed only at g = 3 (S(b) differs from A6 A5 A4(b) for g >= 4)");
            }
            let lhs = e.apply_to_curve("C2^-1 S", CurveName::B)?;
            let rhs = e.apply_to_curve("C2^-1 A6 A5 A4", CurveName::B)?;
            let ok = e.model().curve_equal(&lhs, &rhs);
            done(vec![Verdict {
                ok,
                detail: format!("C2^-1 S (b) ~ C2^-1 A6 A5 A4 (b): {ok}"),
            }])
        }
        "cbar_commute" => {
            if let Some(r) = at_least(g, 3) {
                return skip(r);
            }
            let mut others: Vec<String> = (1..g).map(|i| format!("C{i}")).collect();
            others.extend((3..g - 1).map(|j| format!("D{j}")));
            let mut v: Vec<Verdict> = others
                .iter()
                .map(|o| identity_check(e, &format!("Cbar1 {o}"), &format!("{o} Cbar1")))
                .collect::<Result<_>>()?;
            let vw = e.x_prefix();
            if !vw.is_empty() {
                v.push(identity_check(
                    e,
                    &format!("Cbar1 {vw}"),
                    &format!("{vw} Cbar1"),
                )?);
            }
            done(v)
        }
        "tor_even" => {
            if let Some(r) = even_at_least(g, 4) {
                return skip(r);
            }
            let v = vec![
                vsb_identity(e)?,
                identity_check(e, "(B D2^-1) T[x] (B D2^-1)^-1", "A4")?,
            ];
            let note = format!(
                "V = {} (alternating C odd / D even; both readings agree)",
                e.x_prefix()
            );
            Ok(Outcome::Done(v, vec![note]))
        }
        "tor_odd" => {
            if let Some(r) = odd_at_least(g, 5) {
                return skip(r);
            }
            done(vec![
                vsb_identity(e)?,
                identity_check(
                    e,
                    "(C2 D1 B C4^-3) (T[x] C4^-1) (C2 D1 B C4^-3)^-1",
                    "A3 C4^-1",
                )?,
            ])
        }
        "tor_g3_chain" => {
            if g != 3 {
                return skip("stated for g = 3");
            }
            done(vec![
                orbit_check(e, "C1^-1 D1^-1 S^2 B S", CurveName::B, CurveName::A(5))?,
                identity_check(
                    e,
                    "(Cbar1 C2^-1) (S B S^-1 C2^-1) (C2 Cbar1^-1)",
                    "(C2^-1 S) B (S^-1 C2) C2^-1",
                )?,
                identity_check(e, "(C2^-1 S) B (S^-1 C2) C2^-1", "B2 C2^-1")?,
                identity_check(
                    e,
                    "(B Cbar1^-1) (S B S^-1 B2^-1) (B Cbar1^-1)^-1",
                    "T[y] B2^-1",
                )?,
                orbit_check(e, "S^2 B S", CurveName::B, CurveName::Z)?,
                identity_check(
                    e,
                    "(C1^-1 D1^-1 B2^2) (T[z] B2^-1) (B2^-2 D1 C1)",
                    "A5 B2^-1",
                )?,
            ])
        }
        "tor_b2_e" => match at_least(g, 3) {
            Some(r) => skip(r),
            None => done(vec![
                identity_check(
                    e,
                    "(A1^-2 C2^-1 A6 A5 A4) (B A1^-1) (A1^-2 C2^-1 A6 A5 A4)^-1",
                    "B2 A1^-1",
                )?,
                identity_check(
                    e,
                    "(B2^-2 A2 A1 A4^-1 C1) (A5 B2^-1) (B2^-2 A2 A1 A4^-1 C1)^-1",
                    "E B2^-1",
                )?,
            ]),
        },
        "tor_final" => match at_least(g, 3) {
            Some(r) => skip(r),
            None => done(vec![orbit_check(
                e,
                "C1^-1 A1^-1 A4 A3",
                CurveName::A(2),
                CurveName::B,
            )?]),
        },
        "orders" => {
            let n = 4 * g as u64 + 2;
            let cases: Vec<(&str, u64)> = match g {
                1 => vec![("A2 A1", 6), ("A1 A2 A1", 4)],
                2 => vec![("A4 A3 A2 A1", 10), ("A5 A4 A3 A2 A1", 6)],
                _ => vec![("S", n), ("B S B^-1", n)],
            };
            let mut v = Vec::new();
            for (expr, want) in cases {
                let m = e.eval_str(expr)?;
                let got = e.order_mod_boundary(&m, 2 * want);
                v.push(Verdict {
                    ok: got == Some(want),
                    detail: format!(
                        "order({expr}) = {}",
                        got.map_or("none".into(), |x| x.to_string())
                    ),
                });
            }
            done(v)
        }
        "rotation" => {
            let s = e.resolve(CatalogName::S)?;
            let k = 2 * g as i64 + 1;
            let m = e.delta_power(s.pow(2 * k)?.aut());
            let neg = s.pow(k)?.matrix().is_neg_identity();
            done(vec![
                Verdict {
                    ok: matches!(m, Some(1) | Some(-1)),
                    detail: format!("S^{} = conj by delta^{m:?}", 2 * k),
                },
                Verdict {
                    ok: neg,
                    detail: format!("abelianized S^{k} = -I: {neg}"),
                },
            ])
        }
        "presentation_wajnryb" | "presentation_two_gen" => {
            if let Some(r) = at_least(g, 3) {
                return skip(r);
            }
            let mut p = wajnryb_presentation(g)?;
            if name == "presentation_two_gen" {
                p = rewrite_two_generator(&p)?;
            }
            let rep = verify_presentation(&p, e)?;
            let mut v: Vec<Verdict> = rep
                .iter()
                .filter(|r| r.status != RelatorStatus::Exact)
                .map(|r| Verdict {
                    ok: false,
                    detail: format!("{}: {:?}", r.label, r.status),
                })
                .collect();
            v.push(Verdict {
                ok: true,
                detail: format!("{} relators checked", rep.len()),
            });
            done(v)
        }
        other => Err(Error::UnknownCheck(other.into())),
    }
}

pub fn run_check(e: &Engine, name: &str) -> Result<CheckResult> {
    if !CHECKS.contains(&name) {
        return Err(Error::UnknownCheck(name.into()));
    }
    let t = Instant::now();
    let (status, witness) = match check(e, name) {
        Ok(Outcome::Skip(r)) => (Status::Skipped, Some(r)),
        Ok(Outcome::Done(v, notes)) => {
            let failed: Vec<&Verdict> = v.iter().filter(|x| !x.ok).collect();
            if failed.is_empty() {
                let w = if notes.is_empty() {
                    None
                } else {
                    Some(notes.join("; "))
                };
                (Status::Pass, w)
            } else {
                let mut parts: Vec<String> = failed.iter().map(|x| x.detail.clone()).collect();
                parts.extend(notes);
                (Status::Fail, Some(parts.join("; ")))
            }
        }
        Err(err) => (Status::Fail, Some(format!("error: {err}"))),
    };
    Ok(CheckResult {
        name: name.into(),
        genus: e.genus(),
        status,
        witness,
        ms: t.elapsed().as_millis() as u64,
    })
}

pub fn run_all(e: &Engine, parallel: bool) -> Report {
    let one = |n: &&str| run_check(e, n).expect("catalog name");
    let results = if parallel {
        CHECKS.par_iter().map(one).collect()
    } else {
        CHECKS.iter().map(one).collect()
    };
    Report {
        genus: e.genus(),
        calibration: e.calibration().to_string(),
        results,
    }
}
