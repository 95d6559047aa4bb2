//! Named vectors of `H⊗C` and the explicit action matrices of the three small bimodules.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use crate::expr::{parse_expr, parse_scalar};
use crate::linalg::Matrix;
use crate::ncpoly::{hc, Letter, NCPoly};

const DEFINITIONS: &[(&str, &str)] = &[
    ("Delta", "E F + (q^-1 K + q K^-1) / (q - q^-1)^2"),
    ("v1", "(q - q^-1) E K^-1 a c - c^2"),
    ("v2", "(q - q^-1) Delta a c - (q + q^-1)/(q - q^-1) K a c - q^-2 F K c^2 + E a^2"),
    ("v3", "E K^-1"),
    ("v4", "Delta"),
    ("v5", "K^-1 c^2"),
    ("v6", "q^-1 (q - q^-1)^2 E^2 K^-1 a^2 - q (q^2 - q^-2) E a c + K c^2"),
    ("v11", "E K^-1"),
    ("v12", "K^-1"),
    ("v13", "F"),
    ("v14", "Delta"),
    ("v21", "(q - q^-1) E K^-1 a c - c^2"),
    ("v22", "(q - q^-1) K^-1 a c"),
    ("v23", "(q - q^-1) F a c + a^2"),
    ("v24", "(q - q^-1) Delta a c - (q + q^-1)/(q - q^-1) K a c - q^-2 F K c^2 + E a^2"),
    ("v31", "(q^-1 - q) E K^-1 d b + q d^2"),
    ("v32", "(q^-1 - q) K^-1 d b"),
    ("v33", "(q^-1 - q) F d b - q b^2"),
    ("v34", "(q^-1 - q) Delta d b + (q + q^-1)/(q - q^-1) K d b + q^-1 F K d^2 - q E b^2"),
    ("v41", "(q - q^-1) E K^-1 b c - d c"),
    ("v42", "(q - q^-1) K^-1 b c"),
    ("v43", "(q - q^-1) F b c + q a b"),
    ("v44", "(q - q^-1) Delta b c - (q + q^-1)/(q - q^-1) K b c - q^-2 F K d c + q E a b - 1/(q - q^-1) K"),
    ("dotv11", "K^-1 c^2"),
    ("dotv12", "(q - q^-1) F c^2 + q a c"),
    ("dotv13", "q^-3 (q - q^-1)^2 F^2 K c^2 + q^-1 (q^2 - q^-2) F K a c + K a^2"),
    ("dotv21", "q^-1 K^-1 d c"),
    ("dotv22", "q^-1 (q - q^-1) F d c + b c + 1/(q + q^-1)"),
    ("dotv23", "q^-4 (q - q^-1)^2 F^2 K d c + q^-2 (q^2 - q^-2) F K b c + q^-2 (q - q^-1) F K + K a b"),
    ("dotv31", "K^-1 d^2"),
    ("dotv32", "(q - q^-1) F d^2 + d b"),
    ("dotv33", "q^-3 (q - q^-1)^2 F^2 K d^2 + q^-2 (q^2 - q^-2) F K d b + K b^2"),
    ("ddotv11", "q^-1 (q - q^-1)^2 E^2 K^-1 a^2 - q (q^2 - q^-2) E a c + K c^2"),
    ("ddotv12", "(q^-1 - q) E K^-1 a^2 + q a c"),
    ("ddotv13", "K^-1 a^2"),
    ("ddotv21", "q^-1 (q - q^-1)^2 E^2 K^-1 a b - (q^2 - q^-2) E b c - (q - q^-1) E + q^-1 K d c"),
    ("ddotv22", "(q^-1 - q) E K^-1 a b + b c + 1/(q + q^-1)"),
    ("ddotv23", "K^-1 a b"),
    ("ddotv31", "q^-1 (q - q^-1)^2 E^2 K^-1 b^2 - (q^2 - q^-2) E d b + K d^2"),
    ("ddotv32", "(q^-1 - q) E K^-1 b^2 + d b"),
    ("ddotv33", "K^-1 b^2"),
];

/// Canonical spelling of a vector name: `v_21` and `v21` agree.
fn canonical_name(name: &str) -> String {
    name.replace('_', "")
}

/// Every known vector name.
pub fn names() -> impl Iterator<Item = &'static str> {
    DEFINITIONS.iter().map(|(n, _)| *n)
}

/// Closed form of a named vector as an `H⊗C` polynomial.
pub fn named(name: &str) -> Option<NCPoly> {
    static CACHE: OnceLock<RwLock<HashMap<String, NCPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = canonical_name(name);
    if let Some(v) = cache.read().unwrap().get(&key) {
        return Some(v.clone());
    }
    let (_, text) = DEFINITIONS.iter().find(|(n, _)| *n == key)?;
    let v = parse_expr(text, hc()).expect("built-in definition parses");
    cache.write().unwrap().insert(key, v.clone());
    Some(v)
}

/// Named vector that is known to exist.
pub fn v(name: &str) -> NCPoly {
    named(name).unwrap_or_else(|| panic!("unknown vector {name}"))
}

/// Basis `x_{ij}` of one of the three explicit bimodules, as `[i][j]`.
pub fn printed_basis(which: Example) -> Vec<Vec<NCPoly>> {
    let (prefix, n) = match which {
        Example::H11 => ("v", 4),
        Example::H20 => ("dotv", 3),
        Example::H02 => ("ddotv", 3),
    };
    (1..=n).map(|i| (1..=n).map(|j| v(&format!("{prefix}{i}{j}"))).collect()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Example {
    H11,
    H20,
    H02,
}

type Table = &'static [(Letter, &'static [&'static [&'static str]])];

use Letter::{Kinv, A, B, C, D, E, F, K};

const H11_LEFT: Table = &[
    (E, &[&["0", "0", "q^-1 - q", "0"], &["0", "0", "0", "q"], &["0", "0", "0", "0"], &["0", "0", "-q^-1 - q", "0"]]),
    (F, &[&["0", "1 - q^-2", "0", "0"], &["0", "0", "0", "0"], &["0", "0", "0", "-1"], &["0", "1 + q^-2", "0", "0"]]),
    (K, &[&["1", "0", "0", "0"], &["0", "q^2", "0", "0"], &["0", "0", "q^-2", "0"], &["0", "0", "0", "1"]]),
    (Kinv, &[&["1", "0", "0", "0"], &["0", "q^-2", "0", "0"], &["0", "0", "q^2", "0"], &["0", "0", "0", "1"]]),
    (A, &[&["q^-1", "0", "0", "0"], &["0", "1", "0", "0"], &["0", "0", "1", "0"], &["-q", "0", "0", "q"]]),
    (B, &[&["0", "0", "0", "0"], &["0", "0", "0", "0"], &["1", "0", "0", "0"], &["0", "q^-1 - q", "0", "0"]]),
    (C, &[&["0", "0", "0", "0"], &["1", "0", "0", "0"], &["0", "0", "0", "0"], &["0", "0", "q^-1 - q", "0"]]),
    (D, &[&["q", "0", "0", "0"], &["0", "1", "0", "0"], &["0", "0", "1", "0"], &["q^-1", "0", "0", "q^-1"]]),
];

const H11_RIGHT: Table = &[
    (
        E,
        &[
            &["0", "q^-2 - 1", "0", "0"],
            &["0", "0", "(q^2 + 1)/(q - q^-1)", "0"],
            &["0", "0", "0", "0"],
            &["0", "0", "1 - q^2", "0"],
        ],
    ),
    (
        F,
        &[
            &["0", "0", "0", "0"],
            &["(q^2 + 1)/(q^-1 - q)", "0", "0", "0"],
            &["0", "1 - q^-2", "0", "0"],
            &["q^2 - 1", "0", "0", "0"],
        ],
    ),
    (K, &[&["q^-2", "0", "0", "0"], &["0", "1", "0", "0"], &["0", "0", "q^2", "0"], &["0", "0", "0", "1"]]),
    (Kinv, &[&["q^2", "0", "0", "0"], &["0", "1", "0", "0"], &["0", "0", "q^-2", "0"], &["0", "0", "0", "1"]]),
    (
        A,
        &[&["1", "0", "0", "0"], &["0", "q^-1", "0", "q^-1/(q^-1 - q)"], &["0", "0", "1", "0"], &["0", "0", "0", "q"]],
    ),
    (B, &[&["0", "0", "0", "0"], &["q", "0", "0", "0"], &["0", "0", "0", "1"], &["0", "0", "0", "0"]]),
    (C, &[&["0", "0", "0", "q^-1"], &["0", "0", "1", "0"], &["0", "0", "0", "0"], &["0", "0", "0", "0"]]),
    (D, &[&["1", "0", "0", "0"], &["0", "q", "0", "q/(q - q^-1)"], &["0", "0", "1", "0"], &["0", "0", "0", "q^-1"]]),
];

const SL2_E: &[&[&str]] = &[&["0", "1", "0"], &["0", "0", "q + q^-1"], &["0", "0", "0"]];
const SL2_F: &[&[&str]] = &[&["0", "0", "0"], &["q + q^-1", "0", "0"], &["0", "1", "0"]];
const ZERO3: &[&[&str]] = &[&["0", "0", "0"], &["0", "0", "0"], &["0", "0", "0"]];

const H20_LEFT: Table = &[
    (E, SL2_E),
    (F, SL2_F),
    (K, &[&["q^2", "0", "0"], &["0", "1", "0"], &["0", "0", "q^-2"]]),
    (Kinv, &[&["q^-2", "0", "0"], &["0", "1", "0"], &["0", "0", "q^2"]]),
    (A, &[&["q", "0", "0"], &["0", "1", "0"], &["0", "0", "q^-1"]]),
    (B, ZERO3),
    (C, &[&["0", "1 - q^-2", "0"], &["0", "0", "q^2 - q^-2"], &["0", "0", "0"]]),
    (D, &[&["q^-1", "0", "0"], &["0", "1", "0"], &["0", "0", "q"]]),
];

const H20_RIGHT: Table = &[
    (E, SL2_E),
    (F, SL2_F),
    (K, &[&["q^-2", "0", "0"], &["0", "1", "0"], &["0", "0", "q^2"]]),
    (Kinv, &[&["q^2", "0", "0"], &["0", "1", "0"], &["0", "0", "q^-2"]]),
    (A, &[&["q^-1", "0", "0"], &["0", "1", "0"], &["0", "0", "q"]]),
    (B, ZERO3),
    (C, &[&["0", "q - q^-1", "0"], &["0", "0", "q - q^-3"], &["0", "0", "0"]]),
    (D, &[&["q", "0", "0"], &["0", "1", "0"], &["0", "0", "q^-1"]]),
];

const H02_LEFT: Table = &[
    (E, SL2_E),
    (F, SL2_F),
    (K, &[&["q^2", "0", "0"], &["0", "1", "0"], &["0", "0", "q^-2"]]),
    (Kinv, &[&["q^-2", "0", "0"], &["0", "1", "0"], &["0", "0", "q^2"]]),
    (A, &[&["q^-1", "0", "0"], &["0", "1", "0"], &["0", "0", "q"]]),
    (B, &[&["0", "0", "0"], &["q^-1 - q^3", "0", "0"], &["0", "q^-1 - q", "0"]]),
    (C, ZERO3),
    (D, &[&["q", "0", "0"], &["0", "1", "0"], &["0", "0", "q^-1"]]),
];

const H02_RIGHT: Table = &[
    (E, SL2_E),
    (F, SL2_F),
    (K, &[&["q^-2", "0", "0"], &["0", "1", "0"], &["0", "0", "q^2"]]),
    (Kinv, &[&["q^2", "0", "0"], &["0", "1", "0"], &["0", "0", "q^-2"]]),
    (A, &[&["q", "0", "0"], &["0", "1", "0"], &["0", "0", "q^-1"]]),
    (B, &[&["0", "0", "0"], &["q^-2 - q^2", "0", "0"], &["0", "1 - q^2", "0"]]),
    (C, ZERO3),
    (D, &[&["q^-1", "0", "0"], &["0", "1", "0"], &["0", "0", "q"]]),
];

fn build(table: Table) -> BTreeMap<Letter, Matrix> {
    table
        .iter()
        .map(|(g, rows)| {
            let m = rows.iter().map(|r| r.iter().map(|t| parse_scalar(t).expect("matrix entry parses")).collect()).collect();
            (*g, Matrix::from_rows(m))
        })
        .collect()
}

/// Published left matrices `φ_j(x)`: column `k` is the image of `x_{kj}`.
pub fn printed_left(which: Example) -> BTreeMap<Letter, Matrix> {
    build(match which {
        Example::H11 => H11_LEFT,
        Example::H20 => H20_LEFT,
        Example::H02 => H02_LEFT,
    })
}

/// Published right matrices `φ'_i(x)`: column `k` is the image of `x_{ik}`.
pub fn printed_right(which: Example) -> BTreeMap<Letter, Matrix> {
    build(match which {
        Example::H11 => H11_RIGHT,
        Example::H20 => H20_RIGHT,
        Example::H02 => H02_RIGHT,
    })
}

/// Conjectured generator `K^{-(λ+μ)/2} c^{λ-μ}` (or `b^{μ-λ}`) of the bimodule indexed by `(λ, μ)`.
pub fn h_lambda_mu_seed(lambda: u32, mu: u32) -> Result<NCPoly, ParityError> {
    if !(lambda + mu).is_multiple_of(2) {
        return Err(ParityError { lambda, mu });
    }
    let k = (lambda + mu) / 2;
    let mut w = vec![Kinv; k as usize];
    if lambda >= mu {
        w.extend(std::iter::repeat_n(C, (lambda - mu) as usize));
    } else {
        w.extend(std::iter::repeat_n(B, (mu - lambda) as usize));
    }
    Ok(NCPoly::word(&w))
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("lambda - mu must be even, got ({lambda}, {mu})")]
pub struct ParityError {
    pub lambda: u32,
    pub mu: u32,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::format_poly;

    #[test]
    fn all_definitions_parse() {
        for n in names() {
            assert!(!v(n).is_zero(), "{n}");
        }
        assert_eq!(format_poly(&v("v5")), "K^-1 c^2");
        assert_eq!(v("v_21"), v("v1"));
    }

    #[test]
    fn seeds() {
        assert_eq!(format_poly(&h_lambda_mu_seed(1, 1).unwrap()), "K^-1");
        assert_eq!(h_lambda_mu_seed(2, 0).unwrap(), v("v5"));
        assert_eq!(h_lambda_mu_seed(0, 2).unwrap(), v("ddotv33"));
        assert!(h_lambda_mu_seed(1, 0).is_err());
    }
}
