use hopflab::hopf::{act_left, act_left_via, act_right, act_right_via, antipode, coproduct, pairing, Route};
use hopflab::ncpoly::{cqsl2, double, hc, uqsl2, Letter, NCPoly, Presentation, Word};
use hopflab::scalars::QRat;
use proptest::prelude::*;

fn words(pres: &Presentation, max: usize) -> Vec<NCPoly> {
    (0..=max).flat_map(|n| pres.normal_words(n)).map(|w| NCPoly::single(w, QRat::one())).collect()
}

fn gens() -> Vec<NCPoly> {
    Letter::ALL.iter().map(|&g| NCPoly::letter(g)).collect()
}

#[test]
fn module_axioms() {
    let vs = words(hc(), 3);
    for x in gens() {
        for y in gens() {
            let xy = double().mul(&x, &y).unwrap();
            for v in &vs {
                let composed = act_left(&x, &act_left(&y, v).unwrap()).unwrap();
                assert_eq!(act_left(&xy, v).unwrap(), composed, "left {x:?} {y:?} {v:?}");
                let composed = act_right(&act_right(v, &x).unwrap(), &y).unwrap();
                assert_eq!(act_right(v, &xy).unwrap(), composed, "right {x:?} {y:?} {v:?}");
            }
        }
    }
}

#[test]
fn bimodule_compatibility() {
    let vs = words(hc(), 3);
    for x in gens() {
        for y in gens() {
            for v in &vs {
                let a = act_right(&act_left(&x, v).unwrap(), &y).unwrap();
                let b = act_left(&x, &act_right(v, &y).unwrap()).unwrap();
                assert_eq!(a, b, "{x:?} {v:?} {y:?}");
            }
        }
    }
}

fn pair_tensor(t: &hopflab::hopf::TensorPoly, first: &NCPoly, second: &NCPoly, c_first: bool) -> QRat {
    let mut out = QRat::zero();
    for ((l, r), coeff) in t.terms() {
        let (l, r) = (NCPoly::single(l.clone(), QRat::one()), NCPoly::single(r.clone(), QRat::one()));
        let (a, b) = if c_first {
            (pairing(&l, first).unwrap(), pairing(&r, second).unwrap())
        } else {
            (pairing(first, &l).unwrap(), pairing(second, &r).unwrap())
        };
        out = &out + &(&(&a * &b) * coeff);
    }
    out
}

#[test]
fn pairing_axioms() {
    let cs = words(cqsl2(), 3);
    let hs = words(uqsl2(), 3);
    for c in &cs {
        let dc = coproduct(c, cqsl2()).unwrap();
        for h in &hs {
            for h2 in &hs {
                let hh = uqsl2().mul(h, h2).unwrap();
                assert_eq!(pairing(c, &hh).unwrap(), pair_tensor(&dc, h, h2, true), "{c:?} {h:?} {h2:?}");
            }
        }
    }
    for h in &hs {
        let dh = coproduct(h, uqsl2()).unwrap();
        for c in &cs {
            for c2 in &cs {
                let cc = cqsl2().mul(c, c2).unwrap();
                assert_eq!(pairing(&cc, h).unwrap(), pair_tensor(&dh, c, c2, false), "{c:?} {c2:?} {h:?}");
            }
        }
    }
}

#[test]
fn pairing_with_antipodes() {
    for c in Letter::C_GENS {
        for h in Letter::H_GENS {
            let (c, h) = (NCPoly::letter(c), NCPoly::letter(h));
            let sc = antipode(&c, cqsl2()).unwrap();
            let sh = antipode(&h, uqsl2()).unwrap();
            assert_eq!(pairing(&sc, &h).unwrap(), pairing(&c, &sh).unwrap());
        }
    }
}

fn word(pres: &'static Presentation, max: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec(prop::sample::select(pres.alphabet().to_vec()), 0..=max)
        .prop_map(move |w| pres.normal_form(&NCPoly::single(Word(w), QRat::one())).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn closed_forms_match_recursion(x in word(double(), 2), v in word(hc(), 4)) {
        prop_assert_eq!(
            act_left_via(Route::ClosedForm, &x, &v).unwrap(),
            act_left_via(Route::Recursive, &x, &v).unwrap()
        );
        prop_assert_eq!(
            act_right_via(Route::ClosedForm, &v, &x).unwrap(),
            act_right_via(Route::Recursive, &v, &x).unwrap()
        );
    }
}
