use hopflab::bimodlab::{
    closure, decompose_left, homogeneous_weight, hw_bivectors, hw_monomial_basis, is_hw_bivector, ActionSide,
    Weight, DEFAULT_CAP,
};
use hopflab::ncpoly::{hc, Letter, NCPoly, Word};
use hopflab::scalars::QRat;
use hopflab::vectors::v;
use proptest::prelude::*;

fn monomial(max: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec(prop::sample::select(Letter::ALL.to_vec()), 0..=max)
        .prop_map(|w| hc().normal_form(&NCPoly::single(Word(w), QRat::one())).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn weights_add(u in monomial(4), w in monomial(4)) {
        let (Some(a), Some(b)) = (homogeneous_weight(&u), homogeneous_weight(&w)) else {
            return Err(TestCaseError::fail("normal forms of words are homogeneous"));
        };
        let p = hc().mul(&u, &w).unwrap();
        if !p.is_zero() {
            prop_assert_eq!(homogeneous_weight(&p), Some(Weight { left: a.left + b.left, right: a.right + b.right }));
        }
    }
}

#[test]
fn hw_bivectors_form_a_subalgebra() {
    let basis = hw_monomial_basis(3).unwrap();
    for (m1, x) in &basis.elements {
        for (m2, y) in &basis.elements {
            let p = hc().mul(x, y).unwrap();
            assert!(is_hw_bivector(&p).unwrap(), "{m1} * {m2}");
        }
    }
}

#[test]
fn closure_is_deterministic() {
    for seed in ["v3", "v5", "v6"] {
        let a = closure(&[v(seed)], ActionSide::Bi, DEFAULT_CAP).unwrap();
        let b = closure(&[v(seed)], ActionSide::Bi, DEFAULT_CAP).unwrap();
        assert_eq!(a.basis, b.basis);
        assert_eq!(a.left, b.left);
        assert_eq!(a.right, b.right);
    }
}

#[test]
fn modules_satisfy_the_double_relations() {
    for seed in ["v3", "v5", "v6", "v1"] {
        let m = closure(&[v(seed)], ActionSide::Bi, DEFAULT_CAP).unwrap();
        let report = m.check_relations();
        assert!(report.passed(), "{seed}: {report}");
        for part in decompose_left(&m).unwrap() {
            assert!(part.check_relations().passed());
        }
    }
}

#[test]
fn h11_summands_and_hw_space() {
    let m = closure(&[v("v3")], ActionSide::Bi, DEFAULT_CAP).unwrap();
    let parts = decompose_left(&m).unwrap();
    assert_eq!(parts.len(), 4);
    for p in &parts[1..] {
        assert_eq!(p.left, parts[0].left);
    }
    let mut weights: Vec<Weight> = hw_bivectors(&m).unwrap().into_iter().map(|(w, _)| w).collect();
    weights.sort();
    let expected = [(0, 0), (0, 2), (2, 0), (2, 2)].map(|(left, right)| Weight { left, right });
    assert_eq!(weights, expected);
}

#[test]
fn b_annihilates_h20_only() {
    let h20 = closure(&[v("v5")], ActionSide::Bi, DEFAULT_CAP).unwrap();
    let h02 = closure(&[v("v6")], ActionSide::Bi, DEFAULT_CAP).unwrap();
    assert!(h20.left[&Letter::B].is_zero());
    assert!(!h02.left[&Letter::B].is_zero());
}
