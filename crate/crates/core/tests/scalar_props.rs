use hopflab::scalars::{q_minus_qinv, qint, QRat};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

#[derive(Clone, Debug)]
enum Tree {
    Int(i64),
    QPow(i64),
    Add(Box<Tree>, Box<Tree>),
    Sub(Box<Tree>, Box<Tree>),
    Mul(Box<Tree>, Box<Tree>),
    Div(Box<Tree>, Box<Tree>),
}

fn tree() -> impl Strategy<Value = Tree> {
    let leaf = prop_oneof![(-4i64..=4).prop_map(Tree::Int), (-3i64..=3).prop_map(Tree::QPow)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Tree::Add(a.into(), b.into())),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Tree::Sub(a.into(), b.into())),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Tree::Mul(a.into(), b.into())),
            (inner.clone(), inner).prop_map(|(a, b)| Tree::Div(a.into(), b.into())),
        ]
    })
}

fn direct(t: &Tree) -> Option<QRat> {
    Some(match t {
        Tree::Int(n) => QRat::from_int(*n),
        Tree::QPow(k) => QRat::q_pow(*k),
        Tree::Add(a, b) => &direct(a)? + &direct(b)?,
        Tree::Sub(a, b) => &direct(a)? - &direct(b)?,
        Tree::Mul(a, b) => &direct(a)? * &direct(b)?,
        Tree::Div(a, b) => direct(a)?.checked_div(&direct(b)?).ok()?,
    })
}

/// Same value by another route: operands swapped, subtraction through negation, division through inverses.
fn swapped(t: &Tree) -> Option<QRat> {
    Some(match t {
        Tree::Int(n) => (0..n.unsigned_abs()).fold(QRat::zero(), |acc, _| &acc + &QRat::from_int(n.signum())),
        Tree::QPow(k) => QRat::q().pow(*k).ok()?,
        Tree::Add(a, b) => &swapped(b)? + &swapped(a)?,
        Tree::Sub(a, b) => &(-&swapped(b)?) + &swapped(a)?,
        Tree::Mul(a, b) => &swapped(b)? * &swapped(a)?,
        Tree::Div(a, b) => &swapped(b)?.inv().ok()? * &swapped(a)?,
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=13).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn canonical_form_is_unique(t in tree()) {
        let (x, y) = (direct(&t), swapped(&t));
        prop_assert_eq!(x.is_some(), y.is_some());
        if let (Some(x), Some(y)) = (x, y) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(s in tree(), t in tree(), points in prop::collection::vec(rational(), 3)) {
        let (Some(x), Some(y)) = (direct(&s), direct(&t)) else { return Ok(()) };
        for q0 in &points {
            let (Ok(ex), Ok(ey)) = (x.eval(q0), y.eval(q0)) else { continue };
            if let Ok(p) = (&x * &y).eval(q0) {
                prop_assert_eq!(p, &ex * &ey);
            }
            if let Ok(s) = (&x + &y).eval(q0) {
                prop_assert_eq!(s, &ex + &ey);
            }
        }
    }
}

#[test]
fn quantum_integer_identity() {
    for n in -20..=20 {
        assert_eq!(&qint(n) * &q_minus_qinv(), &QRat::q_pow(n) - &QRat::q_pow(-n), "n = {n}");
    }
}
