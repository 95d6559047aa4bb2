//! One line per acceptance criterion. Runs without the libtest harness so the lines always show.

mod common;

use std::time::Instant;

use hopflab::bimodlab::{
    casimir_check, characters_check, hilbert_check, hw_bivectors, is_simple, lambda_check, one_dim_characters,
    example_check, peter_weyl_check, verify_action_lemmas, verify_identities, verify_operator_relations,
    Certificate, FDBimodule, LemmaBounds, Simplicity, Weight, DEFAULT_CAP, DEFAULT_WORD_CAP,
};
use hopflab::expr::{format_poly, parse_expr};
use hopflab::ncpoly::{cqsl2, double, hc, presentation, presentation_check, uqsl2, Letter, NCPoly, Presentation, Word};
use hopflab::report::{Report, Status};
use hopflab::scalars::QRat;
use hopflab::store::{archive_text, parse_archive};
use hopflab::tables::verify_action_tables;
use hopflab::vectors::Example;
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(r: &Report) -> Result<(), String> {
    ensure(r.passed(), || {
        let first = r.failures().next().map(|i| format!("{} ({})", i.name, i.witness.clone().unwrap_or_default()));
        format!("{}; first failure: {}", r.summary(), first.unwrap_or_default())
    })
}

fn sample<S: Strategy>(runner: &mut TestRunner, s: &S) -> S::Value {
    s.new_tree(runner).expect("strategy produces a value").current()
}

fn random_word(pres: &'static Presentation, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(pres.alphabet().to_vec()), 0..=max).prop_map(Word)
}

fn presentations() -> [&'static Presentation; 4] {
    [uqsl2(), cqsl2(), hc(), double()]
}

fn presentation_soundness() -> Outcome {
    let mut overlaps = 0;
    for pres in presentations() {
        let r = presentation_check(pres);
        passed(&r)?;
        overlaps += r.items.len();
    }
    for &(name, lhs, rhs) in common::RELATIONS {
        let diff = parse_expr(&format!("{lhs} - ({rhs})"), presentation(name).unwrap()).map_err(|e| e.to_string())?;
        ensure(diff.is_zero(), || format!("{lhs} = {rhs} leaves {}", format_poly(&diff)))?;
    }
    let mut runner = TestRunner::deterministic();
    for pres in presentations() {
        let strat = random_word(pres, 6);
        for _ in 0..1000 {
            let w = sample(&mut runner, &strat);
            let once = pres.normal_form(&NCPoly::single(w.clone(), QRat::one())).unwrap();
            ensure(pres.normal_form(&once).unwrap() == once, || format!("{}: {w} is not idempotent", pres.name()))?;
        }
    }
    Ok(format!("{overlaps} overlaps resolve, {} printed relations vanish, 4000 words idempotent", common::RELATIONS.len()))
}

fn action_tables() -> Outcome {
    let r = verify_action_tables();
    passed(&r)?;
    let documented: Vec<_> = r.items.iter().filter(|i| i.status == Status::Documented).collect();
    ensure(documented.iter().all(|i| i.witness.as_deref().is_some_and(|w| w.contains("engine gives"))), || {
        "documented entry without the engine value".into()
    })?;
    Ok(format!("{} entries, {} documented slips", r.items.len(), documented.len()))
}

fn operator_relations() -> Outcome {
    let r = verify_operator_relations(4).map_err(|e| e.to_string())?;
    passed(&r)?;
    Ok(format!("{} relations on both sides of every normal monomial of degree <= 4", r.items.len()))
}

fn example(ex: Example) -> Result<(FDBimodule, Report), String> {
    example_check(ex, DEFAULT_CAP).map_err(|e| e.to_string())
}

fn h11(modules: &mut Vec<(String, FDBimodule)>) -> Outcome {
    let (m, r) = example(Example::H11)?;
    passed(&r)?;
    ensure(m.dim() == 16, || format!("dimension {}", m.dim()))?;
    let mut weights: Vec<Weight> = hw_bivectors(&m).map_err(|e| e.to_string())?.into_iter().map(|(w, _)| w).collect();
    weights.sort();
    let expected = [(0, 0), (0, 2), (2, 0), (2, 2)].map(|(left, right)| Weight { left, right });
    ensure(weights == expected, || format!("hw weights {weights:?}"))?;
    let s = is_simple(&m, DEFAULT_WORD_CAP).map_err(|e| e.to_string())?;
    ensure(s == Simplicity::Simple(Certificate::Burnside { span: 256 }), || format!("{s:?}"))?;
    modules.push(("H11".into(), m));
    Ok("dim 16, hw weights (0,0) (0,2) (2,0) (2,2), matrices agree, density span 256".into())
}

fn h20_h02(modules: &mut Vec<(String, FDBimodule)>) -> Outcome {
    let (m20, r20) = example(Example::H20)?;
    let (m02, r02) = example(Example::H02)?;
    passed(&r20)?;
    passed(&r02)?;
    ensure(m20.dim() == 9 && m02.dim() == 9, || format!("dimensions {} and {}", m20.dim(), m02.dim()))?;
    ensure(m20.left[&Letter::B].is_zero(), || "b acts nontrivially on H20".into())?;
    ensure(!m02.left[&Letter::B].is_zero(), || "b annihilates H02".into())?;
    modules.push(("H20".into(), m20));
    modules.push(("H02".into(), m02));
    Ok("dims 9 and 9, matrices agree, b-matrix zero on H20 and nonzero on H02".into())
}

fn peter_weyl(modules: &mut Vec<(String, FDBimodule)>) -> Outcome {
    let (r, span, pieces) = peter_weyl_check(2, DEFAULT_CAP).map_err(|e| e.to_string())?;
    passed(&r)?;
    let dims: Vec<usize> = pieces.iter().map(|p| p.module.dim()).collect();
    ensure(span.dim() == 100, || format!("span dimension {}", span.dim()))?;
    ensure(dims == [81, 9, 9, 1], || format!("pieces {dims:?}"))?;
    modules.push(("span of products".into(), span));
    for p in pieces {
        modules.push((format!("H({},{})", p.lambda, p.mu), p.module));
    }
    Ok("span 100 = 81 + 9 + 9 + 1".into())
}

fn identities() -> Outcome {
    let r = verify_identities("all").map_err(|e| e.to_string())?;
    passed(&r)?;
    Ok(r.summary())
}

fn hilbert() -> Outcome {
    let r = hilbert_check(6).map_err(|e| e.to_string())?;
    passed(&r)?;
    let counts: Vec<String> = r.items.iter().filter(|i| i.name.starts_with("degree")).map(|i| i.params.clone()).collect();
    let expected: Vec<String> = [1, 4, 11, 24, 45, 76, 119].iter().map(|c| format!("count {c}")).collect();
    ensure(counts == expected, || format!("{counts:?}"))?;
    Ok("counts 1 4 11 24 45 76 119 agree with enumeration, sum and closed form".into())
}

fn lemmas() -> Outcome {
    let r = verify_action_lemmas(LemmaBounds::default());
    passed(&r)?;
    Ok(r.summary())
}

fn lambda() -> Outcome {
    let r = lambda_check(5).map_err(|e| e.to_string())?;
    passed(&r)?;
    Ok(r.summary())
}

fn characters() -> Outcome {
    passed(&characters_check())?;
    let verified: Vec<(i64, i64)> = one_dim_characters().into_iter().filter(|c| c.verified()).map(|c| (c.a, c.d)).collect();
    ensure(verified == [(1, 1), (-1, -1)], || format!("verified {verified:?}"))?;
    Ok("exactly a = d = 1 and a = d = -1".into())
}

fn casimir(modules: &[(String, FDBimodule)]) -> Outcome {
    let mut summands = 0;
    for (name, m) in modules.iter().filter(|(n, _)| n != "span of products") {
        let r = casimir_check(m, name).map_err(|e| e.to_string())?;
        passed(&r)?;
        summands += r.items.len();
    }
    Ok(format!("{summands} simple left summands match their highest weights"))
}

fn random_poly(pres: &'static Presentation) -> impl Strategy<Value = NCPoly> {
    let coeff = (-3i64..=3, -3i64..=3).prop_map(|(a, k)| &QRat::from_int(a) * &QRat::q_pow(k));
    prop::collection::vec((random_word(pres, 5), coeff), 0..5)
        .prop_map(move |terms| pres.normal_form(&NCPoly::from_terms(terms)).unwrap())
}

fn cli_store(modules: &[(String, FDBimodule)]) -> Outcome {
    let mut runner = TestRunner::deterministic();
    for pres in presentations() {
        let strat = random_poly(pres);
        for _ in 0..500 {
            let p = sample(&mut runner, &strat);
            let text = format_poly(&p);
            let back = parse_expr(&text, pres).map_err(|e| format!("{text}: {e}"))?;
            ensure(back == p, || format!("{}: `{text}` does not round-trip", pres.name()))?;
        }
    }
    for (name, m) in modules {
        let text = archive_text(m);
        ensure(text == archive_text(m), || format!("{name}: saves differ"))?;
        let (back, warnings) = parse_archive(&text).map_err(|e| format!("{name}: {e}"))?;
        ensure(warnings.is_empty(), || format!("{name}: {warnings:?}"))?;
        ensure(back.basis == m.basis && back.left == m.left && back.right == m.right, || format!("{name}: round trip differs"))?;
    }
    Ok(format!("2000 forms round-trip, {} archives round-trip byte-identically", modules.len()))
}

fn main() {
    let mut modules = Vec::new();
    let mut failed = 0;
    let mut line = |n: usize, title: &str, outcome: Outcome, started: Instant| {
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS {title}: {detail} [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL {title}: {why} [{secs:.1}s]");
            }
        }
    };
    macro_rules! run {
        ($n:expr, $title:expr, $body:expr) => {{
            let t = Instant::now();
            let outcome = $body;
            line($n, $title, outcome, t);
        }};
    }
    run!(1, "presentation soundness", presentation_soundness());
    run!(2, "action tables", action_tables());
    run!(3, "operator relations", operator_relations());
    run!(4, "H11", h11(&mut modules));
    run!(5, "H20 and H02", h20_h02(&mut modules));
    run!(6, "degree-2 Peter-Weyl", peter_weyl(&mut modules));
    run!(7, "highest-weight identities", identities());
    run!(8, "Hilbert series", hilbert());
    run!(9, "action lemmas", lemmas());
    run!(10, "lambda projection", lambda());
    run!(11, "one-dimensional modules", characters());
    run!(12, "Casimir spectra", casimir(&modules));
    run!(13, "parser and store", cli_store(&modules));
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 13 criteria pass");
}
