use mcg_core::presentation::{
    export, parse_json, rewrite_two_generator, verify_presentation, wajnryb_presentation,
    RelatorStatus,
};
use mcg_core::{CurveName, Engine};

#[test]
fn substitution_reproduces_chain_twists() {
    for g in [3usize, 4] {
        let e = Engine::standard(g).unwrap();
        for k in 1..=2 * g {
            let a = e.eval_str(&format!("A{k}")).unwrap();
            let sub = e.eval_str(&format!("S^-{k} X B X^-1 S^{k}")).unwrap();
            assert!(e.equal(&a, &sub), "A{k} at g={g}");
        }
    }
}

#[test]
fn x_sends_b_to_a0() {
    for g in 3..=6 {
        let e = Engine::standard(g).unwrap();
        assert!(
            e.maps_curve("X", CurveName::B, CurveName::A(0)).unwrap(),
            "g={g}"
        );
    }
}

#[test]
fn u_conjugation_shifts_the_chain() {
    let e = Engine::standard(4).unwrap();
    for j in 1..=3 {
        for i in 1..=8 - j {
            let lhs = e.eval_str(&format!("U^{j} A{i} U^-{j}")).unwrap();
            let rhs = e.eval_str(&format!("A{}", i + j)).unwrap();
            assert!(e.equal(&lhs, &rhs), "U^{j} A{i}");
        }
    }
    // so commutation of A_j, A_k only depends on k - j
    for d in 2..=7 {
        let base = e
            .eval_str(&format!("A1 A{} A1^-1 A{}^-1", 1 + d, 1 + d))
            .unwrap();
        for j in 2..=8 - d {
            let shifted = e
                .eval_str(&format!(
                    "U^{} A1 A{} A1^-1 A{}^-1 U^-{}",
                    j - 1,
                    1 + d,
                    1 + d,
                    j - 1
                ))
                .unwrap();
            let direct = e
                .eval_str(&format!("A{j} A{} A{j}^-1 A{}^-1", j + d, j + d))
                .unwrap();
            assert!(e.equal(&shifted, &direct));
        }
        assert!(base.aut().is_identity());
    }
}

#[test]
fn exports_are_deterministic() {
    let p = rewrite_two_generator(&wajnryb_presentation(3).unwrap()).unwrap();
    let a = export(&p, "text").unwrap();
    let b = export(
        &rewrite_two_generator(&wajnryb_presentation(3).unwrap()).unwrap(),
        "text",
    )
    .unwrap();
    assert_eq!(a, b);
    assert!(a.starts_with("# two-generator 3 2 13\n"));
    assert_eq!(a.lines().count(), 14);
    assert!(a.lines().skip(1).all(|l| l
        .split(' ')
        .all(|t| t.starts_with("B^") || t.starts_with("U^"))));
}

#[test]
fn json_counts_and_round_trip() {
    let p = wajnryb_presentation(4).unwrap();
    let j = export(&p, "json").unwrap();
    let v: serde_json::Value = serde_json::from_str(&j).unwrap();
    assert_eq!(v["counts"]["generators"], 9);
    assert_eq!(v["counts"]["relators"], 38);
    let q = parse_json(&j).unwrap();
    assert_eq!(q.generators, p.generators);
    let words: Vec<_> = q.relators.iter().map(|r| &r.word).collect();
    assert_eq!(
        words,
        p.relators.iter().map(|r| &r.word).collect::<Vec<_>>()
    );
    assert!(export(&p, "yaml").is_err());
}

#[test]
fn parsed_presentation_still_verifies() {
    let p = rewrite_two_generator(&wajnryb_presentation(3).unwrap()).unwrap();
    let q = parse_json(&export(&p, "json").unwrap()).unwrap();
    let e = Engine::standard(3).unwrap();
    let rep = verify_presentation(&q, &e).unwrap();
    assert!(rep.iter().all(|r| r.status == RelatorStatus::Exact));
}

#[test]
fn mirror_calibration_verifies_too() {
    let e = Engine::new(3, "mirror".parse().unwrap()).unwrap();
    let p = wajnryb_presentation(3).unwrap();
    let rep = verify_presentation(&p, &e).unwrap();
    assert!(rep.iter().all(|r| r.status == RelatorStatus::Exact));
}

#[test]
fn genus_mismatch_is_an_error() {
    let e = Engine::standard(4).unwrap();
    assert!(verify_presentation(&wajnryb_presentation(3).unwrap(), &e).is_err());
    assert!(wajnryb_presentation(2).is_err());
}
