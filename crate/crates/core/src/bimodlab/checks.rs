//! Whole-module checks: printed examples, Peter-Weyl pieces, characters, operator relations, conjecture runs.

use std::collections::BTreeMap;

use super::{
    casimir_eigenvalue, casimir_spectrum, closure, decompose_left, family_rank, hw_bivectors, is_simple, ActionSide,
    BimodError, FDBimodule, Powers, Simplicity, DEFAULT_WORD_CAP,
};
use crate::expr::format_poly;
use crate::hopf::{act_left, act_right};
use crate::linalg::Matrix;
use crate::ncpoly::{double, hc, Letter, NCPoly};
use crate::report::{Report, Status};
use crate::scalars::QRat;
use crate::vectors::{h_lambda_mu_seed, printed_basis, printed_left, printed_right, v, Example};

pub fn example_seed(ex: Example) -> NCPoly {
    match ex {
        Example::H11 => v("v3"),
        Example::H20 => v("v5"),
        Example::H02 => v("v6"),
    }
}

pub fn example_name(ex: Example) -> &'static str {
    match ex {
        Example::H11 => "H11",
        Example::H20 => "H20",
        Example::H02 => "H02",
    }
}

/// Printed matrices on the flattened basis `x_ij ↦ i·n + j`.
fn full_printed_matrices(ex: Example) -> (BTreeMap<Letter, Matrix>, BTreeMap<Letter, Matrix>) {
    let n = printed_basis(ex).len();
    let lift = |blocks: BTreeMap<Letter, Matrix>, left: bool| -> BTreeMap<Letter, Matrix> {
        blocks
            .into_iter()
            .map(|(g, phi)| {
                let mut full = Matrix::zeros(n * n, n * n);
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            if left {
                                full[(i * n + j, k * n + j)] = phi[(i, k)].clone();
                            } else {
                                full[(i * n + j, i * n + k)] = phi[(j, k)].clone();
                            }
                        }
                    }
                }
                (g, full)
            })
            .collect()
    };
    (lift(printed_left(ex), true), lift(printed_right(ex), false))
}

/// Change of basis `P` whose column `α` holds the coordinates of the printed vector `x_α`.
pub fn change_of_basis(m: &FDBimodule, vectors: &[NCPoly]) -> Result<Matrix, BimodError> {
    let cols = vectors.iter().map(|x| m.coords(x).ok_or(BimodError::NotInSpan)).collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_columns(m.dim(), &cols))
}

/// Closure of the example's seed compared with the printed basis and matrices: `M·P = P·M_printed`.
pub fn example_check(ex: Example, cap: usize) -> Result<(FDBimodule, Report), BimodError> {
    let name = example_name(ex);
    let m = closure(&[example_seed(ex)], ActionSide::Bi, cap)?;
    let mut report = Report::new(format!("example {name}"));
    let basis: Vec<NCPoly> = printed_basis(ex).into_iter().flatten().collect();
    report.check("dimension", format!("{} expected", basis.len()), m.dim() == basis.len(), || format!("got {}", m.dim()));
    if m.dim() != basis.len() {
        return Ok((m, report));
    }
    let p = match change_of_basis(&m, &basis) {
        Ok(p) => p,
        Err(_) => {
            report.push("printed basis lies in the closure", "", Status::Fail, None);
            return Ok((m, report));
        }
    };
    report.check("printed basis is a basis", "", p.rank() == m.dim(), || format!("rank {}", p.rank()));
    let (full_left, full_right) = full_printed_matrices(ex);
    for (side, ours, theirs) in [("left", &m.left, &full_left), ("right", &m.right, &full_right)] {
        for (g, printed) in theirs {
            let ok = &ours[g] * &p == &p * printed;
            report.check(format!("{side} {g} matrix"), "M P = P M_printed", ok, || "matrices differ after change of basis".into());
        }
    }
    let b_zero = m.left[&Letter::B].is_zero();
    report.push("left b-matrix", if b_zero { "zero" } else { "nonzero" }, Status::Pass, None);
    let simple = is_simple(&m, DEFAULT_WORD_CAP)?;
    report.check("simple", certificate_label(&simple), simple.is_simple(), || format!("{simple:?}"));
    Ok((m, report))
}

pub fn certificate_label(s: &Simplicity) -> String {
    match s {
        Simplicity::Simple(super::Certificate::Burnside { span }) => format!("density span {span}"),
        Simplicity::Simple(super::Certificate::HighestWeight) => "single highest-weight line".into(),
        Simplicity::Simple(super::Certificate::WeightLine { weight }) => format!("weight line {weight}"),
        Simplicity::NotSimple { witness } => format!("proper submodule of dimension {}", witness.len()),
        Simplicity::Inconclusive { reached } => format!("inconclusive, span {reached}"),
    }
}

/// Casimir eigenvalues on each left summand, compared with the highest weight of the summand.
pub fn casimir_check(m: &FDBimodule, label: &str) -> Result<Report, BimodError> {
    let mut report = Report::new(format!("casimir {label}"));
    for (i, part) in decompose_left(m)?.iter().enumerate() {
        let spec = casimir_spectrum(part, ActionSide::Left)?;
        let predicted = spec.eigenvalues.iter().all(|(val, _, wt)| *val == casimir_eigenvalue(*wt));
        let desc: Vec<String> = spec.eigenvalues.iter().map(|(_, mult, wt)| format!("weight {wt} x{mult}")).collect();
        report.check(
            format!("summand {i}"),
            format!("dim {}: {}", part.dim(), desc.join(", ")),
            predicted && spec.is_complete(),
            || "eigenvalues do not match the highest weights or miss part of the summand".into(),
        );
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct PeterWeylPiece {
    pub lambda: u32,
    pub mu: u32,
    pub generator: String,
    pub module: FDBimodule,
}

/// `v1^μ v5^((λ-μ)/2)` or `v1^λ v6^((μ-λ)/2)`.
pub fn peter_weyl_generator(lambda: u32, mu: u32) -> (String, NCPoly) {
    let factors = if lambda >= mu { [("v1", mu), ("v5", (lambda - mu) / 2)] } else { [("v1", lambda), ("v6", (mu - lambda) / 2)] };
    let text: Vec<String> = factors
        .iter()
        .filter(|f| f.1 > 0)
        .map(|(n, k)| if *k == 1 { n.to_string() } else { format!("{n}^{k}") })
        .collect();
    let text = if text.is_empty() { "1".to_string() } else { text.join(" ") };
    (text, Powers::default().product(&factors))
}

/// Span of all products of `n` basis vectors of `H11`, split into the closures of its highest-weight generators.
pub fn peter_weyl_check(n: u32, cap: usize) -> Result<(Report, FDBimodule, Vec<PeterWeylPiece>), BimodError> {
    let h11: Vec<NCPoly> = printed_basis(Example::H11).into_iter().flatten().collect();
    let mut products = vec![NCPoly::one()];
    for _ in 0..n {
        products = products.iter().flat_map(|p| h11.iter().map(move |b| hc().mul_nf(p, b))).collect();
    }
    let span = closure(&products, ActionSide::Bi, cap)?;
    let mut report = Report::new(format!("peter-weyl degree {n}"));
    let rank = family_rank(&products);
    report.check("span of products", format!("dim {}", span.dim()), rank == span.dim(), || {
        format!("products span {rank}, their closure {}", span.dim())
    });

    let mut pieces = Vec::new();
    let mut lambda = n as i64;
    let mut weights = Vec::new();
    while lambda >= 0 {
        let mut mu = n as i64;
        while mu >= 0 {
            weights.push((lambda as u32, mu as u32));
            mu -= 2;
        }
        lambda -= 2;
    }
    for (lambda, mu) in weights {
        let (text, g) = peter_weyl_generator(lambda, mu);
        let module = closure(&[g], ActionSide::Bi, cap)?;
        let expected = (((lambda + 1) * (mu + 1)) as usize).pow(2);
        let inside = module.basis.iter().all(|b| span.coords(b).is_some());
        let simple = is_simple(&module, DEFAULT_WORD_CAP)?;
        report.check(
            format!("H({lambda},{mu}) = <{text}>"),
            format!("dim {}, {}", module.dim(), certificate_label(&simple)),
            module.dim() == expected && inside && simple.is_simple(),
            || format!("expected dim {expected}, inside span: {inside}"),
        );
        pieces.push(PeterWeylPiece { lambda, mu, generator: text, module });
    }
    let all: Vec<NCPoly> = pieces.iter().flat_map(|p| p.module.basis.iter().cloned()).collect();
    let total: usize = pieces.iter().map(|p| p.module.dim()).sum();
    let dims: Vec<String> = pieces.iter().map(|p| p.module.dim().to_string()).collect();
    report.check("direct sum", dims.join(" + "), family_rank(&all) == total, || "pieces intersect".into());
    report.check("pieces exhaust the span", format!("{total} of {}", span.dim()), total == span.dim(), || "dimension gap".into());
    let hw = hw_bivectors(&span)?.len();
    let mut per_piece = Vec::new();
    for p in &pieces {
        per_piece.push(hw_bivectors(&p.module)?.len());
    }
    let parts: Vec<String> = per_piece.iter().map(|k| k.to_string()).collect();
    let hw_sum: usize = per_piece.iter().sum();
    report.check("hw bivectors add up", format!("{hw} = {}", parts.join(" + ")), hw == hw_sum, || {
        format!("span has {hw}, pieces have {hw_sum}")
    });
    if n == 2 {
        for (lambda, mu, family) in [(2, 0, "dotv"), (0, 2, "ddotv")] {
            let piece = pieces.iter().find(|p| p.lambda == lambda && p.mu == mu).expect("piece present");
            let named: Vec<NCPoly> =
                (1..=3).flat_map(|i| (1..=3).map(move |j| format!("{family}{i}{j}"))).map(|s| v(&s)).collect();
            let mut joint = piece.module.basis.clone();
            joint.extend(named.iter().cloned());
            let ok = family_rank(&named) == 9 && family_rank(&joint) == 9;
            report.check(format!("H({lambda},{mu}) row space"), format!("span of {family}_ij"), ok, || "row spaces differ".into());
        }
    }
    Ok((report, span, pieces))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    pub a: i64,
    pub d: i64,
    /// Defining relations of the double that the assignment violates.
    pub violated: Vec<String>,
}

impl Character {
    pub fn verified(&self) -> bool {
        self.violated.is_empty()
    }
}

fn character_value(p: &NCPoly, a: i64, d: i64) -> QRat {
    let mut total = QRat::zero();
    for (w, c) in p.terms() {
        let mut x = c.clone();
        for l in w.letters() {
            let f = match l {
                Letter::E | Letter::F | Letter::B | Letter::C => 0,
                Letter::K | Letter::Kinv => 1,
                Letter::A => a,
                Letter::D => d,
            };
            x = &x * &QRat::from_int(f);
        }
        total = &total + &x;
    }
    total
}

/// Candidates `E,F,b,c ↦ 0`, `K^±1 ↦ 1`, `a ↦ ±1`, `d ↦ ±1`, each tested on every defining relation.
pub fn one_dim_characters() -> Vec<Character> {
    let mut out = Vec::new();
    for a in [1, -1] {
        for d in [1, -1] {
            let mut violated = Vec::new();
            for (lhs, rhs) in double().rules() {
                let l = NCPoly::single(lhs, QRat::one());
                if character_value(&l, a, d) != character_value(&rhs, a, d) {
                    violated.push(format!("{} = {}", format_poly(&l), format_poly(&rhs)));
                }
            }
            out.push(Character { a, d, violated });
        }
    }
    out
}

pub fn characters_check() -> Report {
    let mut report = Report::new("one-dimensional modules");
    let chars = one_dim_characters();
    for ch in &chars {
        let name = format!("a -> {}, d -> {}", ch.a, ch.d);
        let expected = ch.a == ch.d;
        if ch.verified() {
            report.check(name, "verified", expected, || "unexpected character".into());
        } else {
            let first = ch.violated.first().cloned().unwrap_or_default();
            let witness = format!("violates {} relations, e.g. {first}", ch.violated.len());
            report.push(name, "rejected", Status::from_bool(!expected), Some(witness));
        }
    }
    let count = chars.iter().filter(|c| c.verified()).count();
    report.check("verified characters", format!("{count}"), count == 2, || "expected exactly 2".into());
    report
}

/// Every defining relation of the double acts as zero on all normal monomials of `H⊗C` up to `max_degree`.
pub fn verify_operator_relations(max_degree: usize) -> Result<Report, BimodError> {
    let words: Vec<NCPoly> =
        (0..=max_degree).flat_map(|k| hc().normal_words(k)).map(|w| NCPoly::single(w, QRat::one())).collect();
    let mut report = Report::new("operator relations");
    for (lhs, rhs) in double().rules() {
        let l = NCPoly::single(lhs, QRat::one());
        let name = format!("{} = {}", format_poly(&l), format_poly(&rhs));
        let mut bad_left = None;
        let mut bad_right = None;
        for w in &words {
            if bad_left.is_none() && act_left(&l, w)? != act_left(&rhs, w)? {
                bad_left = Some(format_poly(w));
            }
            if bad_right.is_none() && act_right(w, &l)? != act_right(w, &rhs)? {
                bad_right = Some(format_poly(w));
            }
        }
        let params = format!("{} monomials, both sides", words.len());
        report.check(name, params, bad_left.is_none() && bad_right.is_none(), || {
            format!("left fails on {:?}, right fails on {:?}", bad_left, bad_right)
        });
    }
    Ok(report)
}

/// Closure of the conjectured generator compared with `((λ+1)(μ+1))²`; an experiment, never an assumption.
pub fn conjecture_check(pairs: &[(u32, u32)], cap: usize) -> Result<Report, BimodError> {
    let mut report = Report::new("generator conjecture");
    for &(lambda, mu) in pairs {
        let seed = h_lambda_mu_seed(lambda, mu)?;
        let expected = (((lambda + 1) * (mu + 1)) as usize).pow(2);
        let params = format!("seed {}, expected dim {expected}", format_poly(&seed));
        match closure(&[seed], ActionSide::Bi, cap) {
            Ok(m) if m.dim() == expected => {
                report.push(format!("h({lambda},{mu})"), params, Status::ConjectureConsistent, None)
            }
            Ok(m) => report.push(format!("h({lambda},{mu})"), params, Status::Fail, Some(format!("closure has dim {}", m.dim()))),
            Err(BimodError::LocalFinitenessExceeded { cap }) => {
                report.push(format!("h({lambda},{mu})"), params, Status::Fail, Some(format!("closure exceeds {cap}")))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}
