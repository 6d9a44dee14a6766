//! Acceptance suite. Prints one line per criterion; exits nonzero on any failure.

mod common;

use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use mcg_core::harness::{identity_check, run_check, Status};
use mcg_core::presentation::{
    rewrite_two_generator, verify_presentation, wajnryb_presentation, RelatorStatus,
};
use mcg_core::{Automorphism, CatalogName, Engine, Word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn engine(g: usize) -> Result<Engine, String> {
    Engine::standard(g).map_err(|e| e.to_string())
}

fn all_exact(p: &mcg_core::presentation::Presentation, e: &Engine) -> Result<(), String> {
    let rep = verify_presentation(p, e).map_err(|e| e.to_string())?;
    for r in rep {
        ensure(r.status == RelatorStatus::Exact, || {
            format!("g={} relator {} gave {:?}", p.genus, r.label, r.status)
        })?;
    }
    Ok(())
}

fn relation_suite() -> Outcome {
    let mut notes = Vec::new();
    for (g, want) in [(3usize, 23usize), (4, 38), (5, 57)] {
        let t = Instant::now();
        let e = engine(g)?;
        let p = wajnryb_presentation(g).map_err(|e| e.to_string())?;
        ensure(p.relators.len() == want, || {
            format!("g={g}: {} relators, expected {want}", p.relators.len())
        })?;
        all_exact(&p, &e)?;
        let dt = t.elapsed();
        ensure(dt < Duration::from_secs(60), || {
            format!("g={g} took {dt:?}")
        })?;
        notes.push(format!("g={g}: {want} exact in {} ms", dt.as_millis()));
    }
    Ok(notes.join("; "))
}

fn two_generator() -> Outcome {
    let mut notes = Vec::new();
    for (g, want) in [(3usize, 13usize), (4, 17)] {
        let e = engine(g)?;
        let p = rewrite_two_generator(&wajnryb_presentation(g).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure(p.relators.len() == want, || {
            format!("g={g}: {} relators, expected {want}", p.relators.len())
        })?;
        all_exact(&p, &e)?;
        for k in 1..=2 * g {
            let a = e.eval_str(&format!("A{k}")).map_err(|e| e.to_string())?;
            let s = e
                .eval_str(&format!("S^-{k} X B X^-1 S^{k}"))
                .map_err(|e| e.to_string())?;
            ensure(e.equal(&a, &s), || {
                format!("g={g}: substitution fails for A{k}")
            })?;
        }
        notes.push(format!("g={g}: {want} exact, substitution ok"));
    }
    Ok(notes.join("; "))
}

fn torsion_orders() -> Outcome {
    let cases: [(usize, &str, u64); 6] = [
        (1, "A2 A1", 6),
        (1, "A1 A2 A1", 4),
        (2, "A4 A3 A2 A1", 10),
        (2, "A5 A4 A3 A2 A1", 6),
        (3, "S", 14),
        (3, "B S B^-1", 14),
    ];
    let mut notes = Vec::new();
    for (g, expr, want) in cases {
        let e = engine(g)?;
        let t = Instant::now();
        let m = e.eval_str(expr).map_err(|e| e.to_string())?;
        let got = e.order_mod_boundary(&m, 100);
        let dt = t.elapsed();
        ensure(got == Some(want), || {
            format!("g={g} order({expr}) = {got:?}")
        })?;
        ensure(dt < Duration::from_secs(30), || {
            format!("g={g} {expr} took {dt:?}")
        })?;
        notes.push(format!("g={g} {expr}: {want}"));
    }
    Ok(notes.join("; "))
}

fn lantern() -> Outcome {
    for g in 3..=5 {
        let e = engine(g)?;
        let v = identity_check(&e, "A1 A3 A5 B2", "B D1 E").map_err(|e| e.to_string())?;
        ensure(v.ok, || format!("g={g}: {}", v.detail))?;
    }
    Ok("A1 A3 A5 B2 == B D1 E at g=3,4,5".into())
}

fn expect_pass(check: &str, genera: &[usize]) -> Result<(), String> {
    for &g in genera {
        let e = engine(g)?;
        let r = run_check(&e, check).map_err(|e| e.to_string())?;
        ensure(r.status == Status::Pass, || {
            format!(
                "{check} at g={g}: {:?} {}",
                r.status,
                r.witness.unwrap_or_default()
            )
        })?;
    }
    Ok(())
}

fn orbit_theorems() -> Outcome {
    expect_pass("thm3_odd", &[3, 5])?;
    expect_pass("thm3_even", &[4, 6])?;
    expect_pass("ext_even", &[4, 6])?;
    expect_pass("ext_odd_e_chain", &[3, 5])?;
    expect_pass("ext_T_orbit", &[3, 4, 5])?;
    Ok("thm3_odd, thm3_even, ext_even, ext_odd_e_chain, ext_T_orbit".into())
}

fn identity_suite() -> Outcome {
    let checks = [
        "tor_even",
        "tor_odd",
        "tor_g3_chain",
        "tor_b2_e",
        "tor_final",
        "b2_consistency",
        "cbar_commute",
        "lantern_rewrite",
        "rotation",
    ];
    let engines: Vec<Engine> = (3..=5).map(engine).collect::<Result<_, _>>()?;
    let mut notes = Vec::new();
    for c in checks {
        let mut passed = Vec::new();
        for e in &engines {
            let r = run_check(e, c).map_err(|e| e.to_string())?;
            match r.status {
                Status::Pass => passed.push(e.genus()),
                Status::Skipped => {}
                Status::Fail => {
                    return Err(format!(
                        "{c} at g={}: {}",
                        e.genus(),
                        r.witness.unwrap_or_default()
                    ))
                }
            }
        }
        ensure(!passed.is_empty(), || {
            format!("{c} admissible at no genus in 3..5")
        })?;
        notes.push(format!("{c} {passed:?}"));
    }
    Ok(notes.join(", "))
}

fn word_properties() -> Outcome {
    let mut n = 0u64;
    let mut bad = None;
    for rank in 1..=3 {
        for_each_sequence(rank, 8, &mut |s| {
            n += 1;
            let w = Word::reduce(rank as usize, s.iter().copied()).unwrap();
            if bad.is_none()
                && (w.letters() != naive_reduce(s).as_slice()
                    || w.cyclic_key().letters() != naive_key(s).as_slice())
            {
                bad = Some(s.to_vec());
            }
        });
    }
    if let Some(s) = bad {
        return Err(format!("mismatch on {s:?}"));
    }
    let short = all_sequences(3, 4);
    let keys: Vec<_> = short
        .iter()
        .map(|s| Word::reduce(3, s.iter().copied()).unwrap().cyclic_key())
        .collect();
    for (i, u) in short.iter().enumerate() {
        for (j, v) in short.iter().enumerate() {
            ensure((keys[i] == keys[j]) == naive_conjugate(u, v), || {
                format!("conjugacy mismatch {u:?} {v:?}")
            })?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    for k in 0..100 {
        let v = random_word(&mut rng, 2 + k % 5, 20);
        let phi = Automorphism::inner(&v).map_err(|e| e.to_string())?;
        let ok = phi.inner_witness().is_some_and(|w| is_witness(&phi, &w));
        ensure(ok, || format!("inner_witness failed for {v}"))?;
    }
    Ok(format!(
        "{n} words vs oracles, {} conjugacy pairs, 100 witnesses",
        short.len() * short.len()
    ))
}

fn homology() -> Outcome {
    let mut count = 0;
    for g in 1..=4usize {
        let e = engine(g)?;
        let j = e.model().intersection_form();
        for n in CatalogName::all(g) {
            let m = e.resolve(n).map_err(|e| e.to_string())?;
            ensure(m.matrix().form_sign(j) == Some(m.sign()), || {
                format!("{n} at g={g} does not preserve J up to sign")
            })?;
            count += 1;
        }
        let s = e.eval_str("S").map_err(|e| e.to_string())?;
        let rot = s.pow(2 * g as i64 + 1).map_err(|e| e.to_string())?;
        ensure(rot.matrix().is_neg_identity(), || {
            format!("S^(2g+1) != -I at g={g}")
        })?;
        let ord = s.matrix().order(1000);
        let n = 4 * g as u64 + 2;
        ensure(
            ord.is_some_and(|o| n.is_multiple_of(o) && o > 2 * g as u64 + 1),
            || format!("order of S matrix at g={g} is {ord:?}"),
        )?;
    }
    Ok(format!(
        "{count} catalog matrices; S^(2g+1) = -I and S order ok for g=1..4"
    ))
}

fn negative_controls() -> Outcome {
    // (genus, corrupted lhs, rhs); each lhs differs from a verified identity in one letter
    let cases = [
        (3usize, "A1 A3 A4 B2", "B D1 E"),
        (3, "A1 A2 A2", "A2 A1 A2"),
        (1, "(A2 A2)^6", "Td"),
    ];
    let mut notes = Vec::new();
    for (g, lhs, rhs) in cases {
        let e = engine(g)?;
        let v = identity_check(&e, lhs, rhs).map_err(|e| e.to_string())?;
        ensure(!v.ok, || format!("corruption {lhs} == {rhs} passed"))?;
        ensure(
            v.detail.contains("differs on") || v.detail.contains("delta^"),
            || format!("no witness for {lhs}: {}", v.detail),
        )?;
        notes.push(v.detail);
    }
    Ok(notes.join(" | "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("relation suite", relation_suite),
        ("two-generator presentation", two_generator),
        ("torsion orders", torsion_orders),
        ("lantern", lantern),
        ("orbit theorems", orbit_theorems),
        ("identity suite", identity_suite),
        ("word-core properties", word_properties),
        ("homology certificates", homology),
        ("negative controls", negative_controls),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = panic::catch_unwind(f).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let ms = t.elapsed().as_millis();
        match out {
            Ok(d) => println!("criterion {} {name}: PASS ({ms} ms) {d}", i + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({ms} ms) {d}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
