mod common;

use hopflab::expr::{format_poly, parse_expr};
use hopflab::ncpoly::{cqsl2, double, hc, presentation_check, uqsl2, Letter, NCPoly, Presentation, Word};
use hopflab::scalars::QRat;
use proptest::prelude::*;

fn presentations() -> [&'static Presentation; 4] {
    [uqsl2(), cqsl2(), hc(), double()]
}

fn word(pres: &'static Presentation, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(pres.alphabet().to_vec()), 0..=max).prop_map(Word)
}

fn coefficient() -> impl Strategy<Value = QRat> {
    (-3i64..=3, -3i64..=3, 0i64..=2).prop_map(|(a, k, d)| {
        let c = &QRat::from_int(a) * &QRat::q_pow(k);
        let den = &QRat::q_pow(d) - &QRat::one();
        if d == 0 || c.is_zero() {
            c
        } else {
            c.checked_div(&den).unwrap()
        }
    })
}

fn poly(pres: &'static Presentation) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((word(pres, 5), coefficient()), 0..5)
        .prop_map(move |terms| pres.normal_form(&NCPoly::from_terms(terms)).unwrap())
}

fn any_pres() -> impl Strategy<Value = &'static Presentation> {
    prop::sample::select(presentations().to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4000))]

    #[test]
    fn normal_form_is_idempotent((pres, w) in any_pres().prop_flat_map(|p| (Just(p), word(p, 6)))) {
        let once = pres.normal_form(&NCPoly::single(w, QRat::one())).unwrap();
        prop_assert!(once.keys().all(|m| pres.is_normal(m)));
        prop_assert_eq!(pres.normal_form(&once).unwrap(), once);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(800))]

    #[test]
    fn multiplication_is_associative(
        (pres, x, y, z) in any_pres().prop_flat_map(|p| (Just(p), word(p, 3), word(p, 3), word(p, 3)))
    ) {
        let [x, y, z] = [x, y, z].map(|w| NCPoly::single(w, QRat::one()));
        let left = pres.mul(&pres.mul(&x, &y).unwrap(), &z).unwrap();
        let right = pres.mul(&x, &pres.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn parse_inverts_format((pres, p) in any_pres().prop_flat_map(|p| (Just(p), poly(p)))) {
        let text = format_poly(&p);
        prop_assert!(text.is_ascii());
        prop_assert_eq!(parse_expr(&text, pres).unwrap(), p, "{}", text);
    }
}

#[test]
fn presentations_are_confluent() {
    for pres in presentations() {
        let report = presentation_check(pres);
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn normal_monomial_shapes() {
    use Letter::*;
    let rank = |l: Letter| [E, F, K, Kinv, B, C, A, D].iter().position(|&x| x == l).unwrap();
    for len in 0..=4 {
        for w in uqsl2().normal_words(len) {
            let ls = w.letters();
            assert!(ls.windows(2).all(|p| rank(p[0]) <= rank(p[1])), "{w}");
            assert!(!(w.count(K) > 0 && w.count(Kinv) > 0), "{w}");
        }
        for w in cqsl2().normal_words(len) {
            let ls = w.letters();
            assert!(ls.windows(2).all(|p| rank(p[0]) <= rank(p[1])), "{w}");
            assert!(w.count(A) * w.count(D) == 0, "{w}");
        }
        for w in hc().normal_words(len) {
            let (h, c) = w.split_hc();
            assert!(uqsl2().is_normal(&h) && cqsl2().is_normal(&c), "{w}");
            assert_eq!(h.concat(&c), w);
        }
        let expected: usize = (0..=len).map(|i| uqsl2().normal_words(i).len() * cqsl2().normal_words(len - i).len()).sum();
        assert_eq!(hc().normal_words(len).len(), expected);
    }
}

#[test]
fn printed_relations_hold() {
    for &(name, lhs, rhs) in common::RELATIONS {
        let pres = hopflab::ncpoly::presentation(name).unwrap();
        let diff = parse_expr(&format!("{lhs} - ({rhs})"), pres).unwrap();
        assert!(diff.is_zero(), "{name}: {lhs} = {rhs} leaves {}", format_poly(&diff));
    }
}
