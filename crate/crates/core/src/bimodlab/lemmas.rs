//! Closed-form action lemmas on products of highest-weight vectors.
//!
//! Right-hand sides may carry `v1^-1`; such identities are compared after left multiplication by `v1`,
//! using `v1 v3 = v3 v1` and `v1 v41^m = q^-2m v41^m v1`.

use super::Powers;
use crate::hopf::act_left;
use crate::ncpoly::{hc, Letter, NCPoly, Word};
use crate::report::{Report, Status};
use crate::scalars::{qint, QRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaBounds {
    pub l: u32,
    pub m: u32,
    pub n: u32,
    pub s: u32,
}

impl Default for LemmaBounds {
    fn default() -> Self {
        LemmaBounds { l: 3, m: 3, n: 3, s: 3 }
    }
}

type Factors = Vec<(&'static str, i64)>;

struct Term {
    coeff: QRat,
    factors: Factors,
}

struct Case {
    params: String,
    acting: NCPoly,
    target: Factors,
    rhs: Vec<Term>,
}

fn qp(k: i64) -> QRat {
    QRat::q_pow(k)
}

fn term(coeff: QRat, factors: &[(&'static str, i64)]) -> Term {
    Term { coeff, factors: factors.iter().copied().filter(|f| f.1 != 0).collect() }
}

fn same(coeff: QRat, target: &Factors) -> Term {
    Term { coeff, factors: target.clone() }
}

fn gen(l: Letter) -> NCPoly {
    NCPoly::letter(l)
}

fn product(powers: &mut Powers, factors: &[(&'static str, i64)]) -> Result<NCPoly, String> {
    let mut exps = Vec::with_capacity(factors.len());
    for &(name, k) in factors {
        let k = u32::try_from(k).map_err(|_| format!("negative power of {name}"))?;
        exps.push((name, k));
    }
    Ok(powers.product(&exps))
}

/// `v1 · term`, moving `v1` past the leading `v3` and `v41` factors.
fn shifted(powers: &mut Powers, t: &Term) -> Result<NCPoly, String> {
    let Some(pos) = t.factors.iter().position(|f| f.0 == "v1") else {
        let p = product(powers, &t.factors)?;
        return Ok(hc().mul_nf(&crate::vectors::v("v1"), &p).scale(&t.coeff));
    };
    let mut shift = 0;
    for &(name, k) in &t.factors[..pos] {
        match name {
            "v3" => {}
            "v41" => shift += 2 * k,
            other => return Err(format!("cannot move v1 past {other}")),
        }
    }
    let mut factors = t.factors.clone();
    factors[pos].1 += 1;
    Ok(product(powers, &factors)?.scale(&(&t.coeff * &qp(-shift))))
}

fn check_case(powers: &mut Powers, case: &Case) -> Result<bool, String> {
    let target = product(powers, &case.target)?;
    let lhs = act_left(&case.acting, &target).map_err(|e| e.to_string())?;
    let terms: Vec<&Term> = case.rhs.iter().filter(|t| !t.coeff.is_zero()).collect();
    if terms.iter().all(|t| t.factors.iter().all(|f| f.1 >= 0)) {
        let mut rhs = NCPoly::zero();
        for t in terms {
            rhs.add_scaled(&product(powers, &t.factors)?, &t.coeff);
        }
        return Ok(lhs == rhs);
    }
    let mut rhs = NCPoly::zero();
    for t in terms {
        rhs = &rhs + &shifted(powers, t)?;
    }
    Ok(hc().mul_nf(&crate::vectors::v("v1"), &lhs) == rhs)
}

fn failures(powers: &mut Powers, cases: &[Case]) -> Vec<String> {
    let mut out = Vec::new();
    for case in cases {
        match check_case(powers, case) {
            Ok(true) => {}
            Ok(false) => out.push(case.params.clone()),
            Err(e) => out.push(format!("{} ({e})", case.params)),
        }
    }
    out
}

fn run(report: &mut Report, powers: &mut Powers, name: &str, range: &str, cases: Vec<Case>) {
    let failed = failures(powers, &cases);
    report.check(name, format!("{range}, {} cases", cases.len()), failed.is_empty(), || {
        format!("fails at {}", failed.join("; "))
    });
}

/// Like `run`, but a printed formula that fails is documented when the stated reading holds everywhere.
fn run_with_reading(
    report: &mut Report,
    powers: &mut Powers,
    name: &str,
    range: &str,
    printed: Vec<Case>,
    reading: (&str, Vec<Case>),
) {
    let params = format!("{range}, {} cases", printed.len());
    let failed = failures(powers, &printed);
    if failed.is_empty() {
        return report.push(name, params, Status::Pass, None);
    }
    let first: Vec<&str> = failed.iter().take(3).map(String::as_str).collect();
    let witness = format!("printed form fails in {} of {} cases, first at {}", failed.len(), printed.len(), first.join("; "));
    if failures(powers, &reading.1).is_empty() {
        report.push(name, params, Status::Documented, Some(format!("{witness}; holds everywhere {}", reading.0)));
    } else {
        report.push(name, params, Status::Fail, Some(witness));
    }
}

fn range(max: u32) -> std::ops::RangeInclusive<i64> {
    0..=max as i64
}

/// `q^{2±s}(q^{..} d - q^{..} a) F + [2n+2s](q^{l+4} + q^{..}) b`, the operator isolating the `v41` component.
fn special_operator(x: &str, l: i64, n: i64, s: i64) -> NCPoly {
    let (outer, dexp, aexp, bexp) = match x {
        "v5" => (2 + s, -l + s - 1, l - s + 1, -l - 2 * n),
        _ => (2 - s, -l - s - 1, l + s + 1, -l - 2 * n - 4 * s),
    };
    let bcoeff = &qint(2 * n + 2 * s) * &(&qp(l + 4) + &qp(bexp));
    NCPoly::from_terms([
        (Word(vec![Letter::D, Letter::F]), &qp(outer) * &qp(dexp)),
        (Word(vec![Letter::A, Letter::F]), -(&qp(outer) * &qp(aexp))),
        (Word(vec![Letter::B]), bcoeff),
    ])
}

fn rectangle_lemmas(report: &mut Report, powers: &mut Powers, x: &'static str, b: LemmaBounds) {
    let v5 = x == "v5";
    let tag = format!("v3^l v1^n {x}^s");
    let tag41 = format!("v3^l v41^m v1^n {x}^s");
    let lns = format!("l <= {}, n <= {}, s <= {}", b.l, b.n, b.s);
    let lmns = format!("l <= {}, m <= {}, n <= {}, s <= {}", b.l, b.m, b.n, b.s);
    let mut c_cases = Vec::new();
    let mut f_cases = Vec::new();
    let mut b_cases = Vec::new();
    let mut op_cases = Vec::new();
    let mut op_reading = Vec::new();
    let mut vanish = Vec::new();
    for l in range(b.l) {
        for n in range(b.n) {
            for s in range(b.s) {
                let params = format!("l={l} n={n} s={s}");
                let target: Factors = vec![("v3", l), ("v1", n), (x, s)];
                let c = if v5 { qp(s) } else { qp(-s) };
                c_cases.push(Case {
                    params: params.clone(),
                    acting: gen(Letter::C),
                    target: target.clone(),
                    rhs: vec![term(&c * &qint(l), &[("v3", l - 1), ("v1", n + 1), (x, s)])],
                });
                let f0 = if v5 { &QRat::one() - &qp(-2 * n - 4 * s) } else { &QRat::one() - &qp(-2 * n) };
                f_cases.push(Case {
                    params: params.clone(),
                    acting: gen(Letter::F),
                    target: target.clone(),
                    rhs: vec![
                        term(f0, &[("v3", l + 1), ("v1", n - 1), (x, s)]),
                        term(&qp(1 - 2 * n - 2 * s) * &qint(2 * n + 2 * s), &[("v3", l), ("v41", 1), ("v1", n - 1), (x, s)]),
                    ],
                });
                let (b0, b1) = if v5 {
                    (&(&qp(-2 * n - l) - &qp(l)) * &qp(1 - s), &qp(2 - 2 * n - s) * &qint(l))
                } else {
                    (&(&qp(-l - 2 * n - 3 * s) - &qp(l + s)) * &qp(1), &qp(2 - 2 * n - 3 * s) * &qint(l))
                };
                b_cases.push(Case {
                    params: params.clone(),
                    acting: gen(Letter::B),
                    target: target.clone(),
                    rhs: vec![
                        term(b0, &[("v3", l), ("v41", 1), ("v1", n - 1), (x, s)]),
                        term(-b1, &[("v3", l - 1), ("v41", 2), ("v1", n - 1), (x, s)]),
                    ],
                });
                let op = special_operator(x, l, n, s);
                let v6_coeff = |shift: i64| {
                    let mid = &(&QRat::one() - &qp(2 * n)) * &qp(2 * l + 2 * n + 4 * s + shift);
                    let poly = &(&QRat::one() + &mid) - &qp(4 * l + 6 * n + 8 * s + 4);
                    &(&qp(1 - 2 * l - 5 * n - 7 * s) * &poly) * &qint(n + 2 * s)
                };
                let rhs_coeff = if v5 {
                    let poly = &(&(&QRat::one() + &qp(2 * l + 2 * n + 2)) - &qp(2 * l + 4 * n + 4 * s + 2))
                        - &qp(4 * l + 6 * n + 4 * s + 4);
                    &(&qp(1 - 2 * l - 5 * n - 3 * s) * &poly) * &qint(n)
                } else {
                    v6_coeff(0)
                };
                let rhs_factors = [("v3", l), ("v41", 1), ("v1", n - 1), (x, s)];
                op_reading.push(Case {
                    params: params.clone(),
                    acting: op.clone(),
                    target: target.clone(),
                    rhs: vec![term(v6_coeff(2), &rhs_factors)],
                });
                let zero = act_left(&op, &product(powers, &target).expect("nonnegative"))
                    .map(|v| v.is_zero())
                    .unwrap_or(false);
                let expect_zero = if v5 { n == 0 } else { n == 0 && s == 0 };
                if zero != expect_zero {
                    vanish.push(params.clone());
                }
                op_cases.push(Case {
                    params,
                    acting: op,
                    target,
                    rhs: vec![term(rhs_coeff, &rhs_factors)],
                });
            }
        }
    }
    let mut a_cases = Vec::new();
    let mut d_cases = Vec::new();
    for l in range(b.l) {
        for m in range(b.m) {
            for n in range(b.n) {
                for s in range(b.s) {
                    let params = format!("l={l} m={m} n={n} s={s}");
                    let target: Factors =
                        vec![("v3", l), ("v41", m), ("v1", n), (x, s)].into_iter().filter(|f| f.1 != 0).collect();
                    let down = [("v3", l - 1), ("v41", m + 1), ("v1", n), (x, s)];
                    let (a0, a1, d0, d1) = if v5 {
                        (qp(m - l + s), qp(m + s + 1), qp(l - m - s), qp(-m - 2 * n - s - 1))
                    } else {
                        (qp(m - l - s), qp(m - s + 1), qp(l - m + s), qp(-m - 2 * n - 3 * s - 1))
                    };
                    a_cases.push(Case {
                        params: params.clone(),
                        acting: gen(Letter::A),
                        target: target.clone(),
                        rhs: vec![same(a0, &target), term(-(&a1 * &qint(l)), &down)],
                    });
                    d_cases.push(Case {
                        params,
                        acting: gen(Letter::D),
                        target: target.clone(),
                        rhs: vec![same(d0, &target), term(&d1 * &qint(l), &down)],
                    });
                }
            }
        }
    }
    run(report, powers, &format!("c |> {tag}"), &lns, c_cases);
    run(report, powers, &format!("F |> {tag}"), &lns, f_cases);
    run(report, powers, &format!("b |> {tag}"), &lns, b_cases);
    run(report, powers, &format!("a |> {tag41}"), &lmns, a_cases);
    run(report, powers, &format!("d |> {tag41}"), &lmns, d_cases);
    let op_name = format!("special operator |> {tag}");
    if v5 {
        run(report, powers, &op_name, &lns, op_cases);
    } else {
        let reading = ("with q^(2l+2n+4s+2) in place of q^(2l+2n+4s)", op_reading);
        run_with_reading(report, powers, &op_name, &lns, op_cases, reading);
    }
    let condition = if v5 { "n = 0" } else { "n = s = 0" };
    report.check(format!("special operator on {tag} vanishes iff {condition}"), lns, vanish.is_empty(), || {
        format!("wrong vanishing at {}", vanish.join("; "))
    });
}

fn single_lemmas(report: &mut Report, powers: &mut Powers, max: u32) {
    let span = format!("n <= {max}");
    type Rule = fn(i64) -> Vec<Term>;
    let rules: Vec<(&str, &'static str, Letter, Rule)> = vec![
        ("a", "v3", Letter::A, |n| vec![term(qp(-n), &[("v3", n)]), term(-(&qp(1) * &qint(n)), &[("v3", n - 1), ("v41", 1)])]),
        ("c", "v3", Letter::C, |n| vec![term(qint(n), &[("v3", n - 1), ("v1", 1)])]),
        ("b", "v3", Letter::B, |n| vec![term(qint(n), &[("v3", n - 1), ("v31", 1)])]),
        ("d", "v3", Letter::D, |n| vec![term(qp(n), &[("v3", n)]), term(&qp(-1) * &qint(n), &[("v3", n - 1), ("v41", 1)])]),
        ("a", "v1", Letter::A, |n| vec![term(QRat::one(), &[("v1", n)])]),
        ("b", "v1", Letter::B, |n| vec![term(&(&qp(-2 * n) - &QRat::one()) * &qp(1), &[("v41", 1), ("v1", n - 1)])]),
        ("c", "v1", Letter::C, |_| vec![]),
        ("d", "v1", Letter::D, |n| vec![term(QRat::one(), &[("v1", n)])]),
        ("F", "v1", Letter::F, |n| {
            vec![
                term(&QRat::one() - &qp(-2 * n), &[("v3", 1), ("v1", n - 1)]),
                term(&qp(1 - 2 * n) * &qint(2 * n), &[("v41", 1), ("v1", n - 1)]),
            ]
        }),
        ("a", "v41", Letter::A, |n| vec![term(qp(n), &[("v41", n)])]),
        ("b", "v41", Letter::B, |_| vec![]),
        ("c", "v41", Letter::C, |_| vec![]),
        ("d", "v41", Letter::D, |n| vec![term(qp(-n), &[("v41", n)])]),
        ("a", "v5", Letter::A, |n| vec![term(qp(n), &[("v5", n)])]),
        ("b", "v5", Letter::B, |_| vec![]),
        ("c", "v5", Letter::C, |_| vec![]),
        ("d", "v5", Letter::D, |n| vec![term(qp(-n), &[("v5", n)])]),
        ("F", "v5", Letter::F, |n| vec![term(&qp(2 - 2 * n) * &qint(2 * n), &[("dotv21", 1), ("v5", n - 1)])]),
        ("a", "v6", Letter::A, |n| vec![term(qp(-n), &[("v6", n)])]),
        ("b", "v6", Letter::B, |n| {
            vec![term(&qp(n + 2) * &(&qp(-4 * n) - &QRat::one()), &[("ddotv21", 1), ("v6", n - 1)])]
        }),
        ("c", "v6", Letter::C, |_| vec![]),
        ("d", "v6", Letter::D, |n| vec![term(qp(n), &[("v6", n)])]),
        ("F", "v6", Letter::F, |n| vec![term(&qp(2 - 2 * n) * &qint(2 * n), &[("ddotv21", 1), ("v6", n - 1)])]),
    ];
    for (g, x, letter, rule) in rules {
        let cases = range(max)
            .map(|n| Case {
                params: format!("n={n}"),
                acting: gen(letter),
                target: vec![(x, n)],
                rhs: rule(n),
            })
            .collect();
        run(report, powers, &format!("{g} |> {x}^n"), &span, cases);
    }
}

/// Checks every closed-form action on products of `v3, v41, v1, v5, v6` over the given exponent ranges.
pub fn verify_action_lemmas(bounds: LemmaBounds) -> Report {
    let mut report = Report::new("action lemmas");
    let mut powers = Powers::default();
    rectangle_lemmas(&mut report, &mut powers, "v5", bounds);
    rectangle_lemmas(&mut report, &mut powers, "v6", bounds);
    single_lemmas(&mut report, &mut powers, bounds.n.max(bounds.l));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_pass() {
        let r = verify_action_lemmas(LemmaBounds { l: 1, m: 1, n: 1, s: 1 });
        assert!(r.passed(), "{r}");
    }
}

