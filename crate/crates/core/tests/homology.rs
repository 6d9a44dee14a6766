use mcg_core::{CatalogName, Engine, SympMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn catalog(g: usize) -> Vec<String> {
    CatalogName::all(g).iter().map(|n| n.to_string()).collect()
}

#[test]
fn abelianization_is_functorial() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in [2usize, 3] {
        let e = Engine::standard(g).unwrap();
        let names = catalog(g);
        for _ in 0..100 {
            let a = &names[rng.gen_range(0..names.len())];
            let b = &names[rng.gen_range(0..names.len())];
            let (ma, mb) = (e.eval_str(a).unwrap(), e.eval_str(b).unwrap());
            let ab = ma.compose(&mb).unwrap();
            assert_eq!(ab.matrix(), ma.matrix().mul(&mb.matrix()), "{a} . {b}");
        }
    }
}

#[test]
fn catalog_preserves_form_up_to_sign() {
    for g in 1..=4 {
        let e = Engine::standard(g).unwrap();
        let j = e.model().intersection_form();
        for n in CatalogName::all(g) {
            let m = e.resolve(n).unwrap();
            assert_eq!(m.matrix().form_sign(j), Some(m.sign()), "{n} at g={g}");
        }
    }
}

#[test]
fn reflections_reverse_the_form() {
    let e = Engine::standard(3).unwrap();
    let j = e.model().intersection_form();
    for n in ["R", "R0", "T"] {
        assert_eq!(e.eval_str(n).unwrap().matrix().form_sign(j), Some(-1));
    }
}

#[test]
fn rotation_is_minus_identity_and_s_order() {
    for g in 1..=4usize {
        let e = Engine::standard(g).unwrap();
        let s = e.eval_str("S").unwrap();
        assert!(s.pow(2 * g as i64 + 1).unwrap().matrix().is_neg_identity());
        let n = s.matrix().order(100).unwrap();
        assert_eq!((4 * g as u64 + 2) % n, 0);
        assert!(n > 2 * g as u64 + 1);
    }
}

#[test]
fn trivial_matrices() {
    let e = Engine::standard(2).unwrap();
    assert!(e.eval_str("Td").unwrap().matrix().is_identity());
    assert_eq!(SympMatrix::identity(4).order(1), Some(1));
    assert_eq!(e.eval_str("A1").unwrap().matrix().order(500), None);
    let g1 = Engine::standard(1).unwrap();
    assert_eq!(g1.eval_str("A2 A1").unwrap().matrix().order(10), Some(6));
}
