//! Exact scalars: polynomials and rational functions in `q` over ℚ.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at the evaluation point")]
    PoleAtPoint,
}

/// Polynomial in `q` with rational coefficients.
///
/// Stored densely from exponent 0; the highest stored coefficient is never zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·q^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn lc(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Divide by `q^k`; the caller guarantees `k <= order`.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        QPoly { coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    r[i + j] -= &c * dj;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (QPoly::from_coeffs(q), QPoly::from_coeffs(r))
    }

    /// Exact quotient; panics in debug builds if the division leaves a remainder.
    pub fn exact_div(&self, d: &QPoly) -> QPoly {
        if d.is_one() {
            return self.clone();
        }
        if d.is_monomial() {
            let k = d.order().unwrap_or(0);
            return self.shift_down(k).scale(&d.lc().recip());
        }
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (oa, ob) = (self.order().unwrap(), other.order().unwrap());
        let k = oa.min(ob);
        let a = self.shift_down(oa);
        let b = other.shift_down(ob);
        let core = if a.is_constant() || b.is_constant() {
            QPoly::one()
        } else {
            int_to_qpoly(&int_gcd(&to_primitive_int(&a).1, &to_primitive_int(&b).1)).monic()
        };
        core.shift_up(k)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate modulo a prime `p`; `None` if a coefficient denominator vanishes mod `p`.
    pub fn eval_mod(&self, x: u64, p: u64) -> Option<u64> {
        let mut acc = 0u64;
        for c in self.coeffs.iter().rev() {
            acc = add_mod(mul_mod(acc, x, p), rational_mod(c, p)?, p);
        }
        Some(acc)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

// Integer polynomial helpers.

fn to_primitive_int(p: &QPoly) -> (BigRational, Vec<BigInt>) {
    let l = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    let prim = ints.iter().map(|c| c / &g).collect();
    (BigRational::new(g, l), prim)
}

fn int_to_qpoly(p: &[BigInt]) -> QPoly {
    QPoly::from_coeffs(p.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

fn int_trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn int_primitive(p: &[BigInt]) -> Vec<BigInt> {
    let g = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return Vec::new();
    }
    p.iter().map(|c| c / &g).collect()
}

fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        int_trim(&mut r);
    }
    r
}

fn int_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() { (a.to_vec(), b.to_vec()) } else { (b.to_vec(), a.to_vec()) };
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = int_primitive(&int_pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// Exact division of integer polynomials; `None` unless the divisor divides evenly.
fn int_div_exact(a: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let dd = d.len() - 1;
    if a.len() < d.len() {
        return None;
    }
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dd];
    for i in (0..q.len()).rev() {
        let (c, rem) = r[i + dd].div_rem(&d[dd]);
        if !rem.is_zero() {
            return None;
        }
        for (j, dj) in d.iter().enumerate() {
            r[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(q)
    } else {
        None
    }
}

// Modular helpers.

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

fn int_mod(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

fn rational_mod(c: &BigRational, p: u64) -> Option<u64> {
    let n = int_mod(c.numer(), p);
    let d = inv_mod(int_mod(c.denom(), p), p)?;
    Some(mul_mod(n, d, p))
}

/// Element of ℚ(q) kept as `num/den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl Default for QRat {
    fn default() -> Self {
        QRat::zero()
    }
}

impl QRat {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return QRat::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.exact_div(&g), den.exact_div(&g)) };
        let lc = den.lc();
        if lc.is_one() {
            QRat { num, den }
        } else {
            let inv = lc.recip();
            QRat { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        QRat { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        QRat { num: QPoly::one(), den: QPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(c: BigRational) -> Self {
        QRat { num: QPoly::constant(c), den: QPoly::one() }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat { num: p, den: QPoly::one() }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let one = BigRational::one();
        if k >= 0 {
            QRat { num: QPoly::monomial(one, k as usize), den: QPoly::one() }
        } else {
            QRat { num: QPoly::one(), den: QPoly::monomial(one, (-k) as usize) }
        }
    }

    /// `c·q^k`
    pub fn term(c: i64, k: i64) -> Self {
        &Self::from_int(c) * &Self::q_pow(k)
    }

    /// Laurent polynomial `Σ c_i q^{k_i}`.
    pub fn laurent(terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(c, k)| &acc + &Self::term(c, k))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Constant rational value, if this scalar does not depend on `q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_one() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = QRat::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn checked_div(&self, rhs: &QRat) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact value at a rational point.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(ScalarError::PoleAtPoint);
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Value modulo a prime at `q0`; `None` on a pole or a bad coefficient denominator.
    pub fn eval_mod(&self, q0: u64, p: u64) -> Option<u64> {
        let n = self.num.eval_mod(q0, p)?;
        let d = inv_mod(self.den.eval_mod(q0, p)?, p)?;
        Some(mul_mod(n, d, p))
    }

    /// Sign flag and body of the canonical text form. An empty body stands for 1.
    pub(crate) fn render_parts(&self) -> (bool, String) {
        if self.is_zero() {
            return (false, "0".into());
        }
        let (cn, np) = to_primitive_int(&self.num);
        let (cd, dp) = to_primitive_int(&self.den);
        let mut kappa = cn / cd;
        let a = np.iter().position(|c| !c.is_zero()).unwrap();
        let b = dp.iter().position(|c| !c.is_zero()).unwrap();
        let np0 = np[a..].to_vec();
        let mut dp0 = dp[b..].to_vec();
        let minus = [BigInt::from(-1), BigInt::zero(), BigInt::one()];
        let plus = [BigInt::one(), BigInt::zero(), BigInt::one()];
        let (mut e1, mut e2) = (0i64, 0i64);
        while let Some(r) = int_div_exact(&dp0, &minus) {
            dp0 = r;
            e1 += 1;
        }
        while let Some(r) = int_div_exact(&dp0, &plus) {
            dp0 = r;
            e2 += 1;
        }
        let r = ((dp0.len() - 1) / 2) as i64;
        let shift = a as i64 - b as i64 - e1 - e2 - r;
        let mut numer: Vec<(BigInt, i64)> =
            np0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (c.clone(), i as i64 + shift)).collect();
        let mut negative = false;
        if kappa.is_integer() {
            let k = kappa.to_integer();
            for t in numer.iter_mut() {
                t.0 *= &k;
            }
            kappa = BigRational::one();
            if numer.last().unwrap().0.is_negative() {
                negative = true;
                for t in numer.iter_mut() {
                    t.0 = -t.0.clone();
                }
            }
        } else if kappa.is_negative() {
            negative = true;
            kappa = -kappa;
        }
        let mut pieces = Vec::new();
        if !kappa.is_one() {
            pieces.push(format!("{}/{}", kappa.numer(), kappa.denom()));
        }
        if numer.len() > 1 {
            pieces.push(format!("({})", render_laurent(&numer)));
        } else if !(numer[0].0.is_one() && numer[0].1 == 0) {
            pieces.push(render_laurent(&numer));
        }
        if e1 > 0 {
            pieces.push(format!("(q - q^-1)^-{e1}"));
        }
        if e2 > 0 {
            pieces.push(format!("(q + q^-1)^-{e2}"));
        }
        if dp0.len() > 1 {
            let bal: Vec<(BigInt, i64)> = dp0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.clone(), i as i64 - r))
                .collect();
            pieces.push(format!("({})^-1", render_laurent(&bal)));
        }
        (negative, pieces.join(" "))
    }
}

fn q_power_text(e: i64) -> String {
    if e == 1 {
        "q".into()
    } else {
        format!("q^{e}")
    }
}

/// Render `Σ c q^e`, highest exponent first.
fn render_laurent(terms: &[(BigInt, i64)]) -> String {
    let mut out = String::new();
    for (i, (c, e)) in terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (mag.is_one(), *e) {
            (_, 0) => out.push_str(&mag.to_string()),
            (true, e) => out.push_str(&q_power_text(e)),
            (false, e) => out.push_str(&format!("{} {}", mag, q_power_text(e))),
        }
    }
    out
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, body) = self.render_parts();
        let body = if body.is_empty() { "1".to_string() } else { body };
        if neg {
            write!(f, "-{body}")
        } else {
            f.write_str(&body)
        }
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QRat::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let d1 = self.den.exact_div(&g);
        let d2 = rhs.den.exact_div(&g);
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        QRat::reduce(num, &self.den * &d2)
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRat { num: &self.num * &rhs.num, den: QPoly::one() };
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        let lc = den.lc();
        if lc.is_one() {
            QRat { num, den }
        } else {
            let inv = lc.recip();
            QRat { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

impl Div for &QRat {
    type Output = QRat;
    /// Panics on division by zero; use [`QRat::checked_div`] to handle it.
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QRat {
            type Output = QRat;
            fn $m(self, rhs: QRat) -> QRat { (&self).$m(&rhs) }
        }
        impl $tr<&QRat> for QRat {
            type Output = QRat;
            fn $m(self, rhs: &QRat) -> QRat { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl From<i64> for QRat {
    fn from(n: i64) -> Self {
        QRat::from_int(n)
    }
}

/// `q - q^-1`
pub fn q_minus_qinv() -> QRat {
    QRat::laurent(&[(1, 1), (-1, -1)])
}

/// `q + q^-1`
pub fn q_plus_qinv() -> QRat {
    QRat::laurent(&[(1, 1), (1, -1)])
}

/// Balanced quantum integer `[n] = (q^n - q^-n)/(q - q^-1)`.
pub fn qint(n: i64) -> QRat {
    let m = n.unsigned_abs() as i64;
    let mut acc = QRat::zero();
    for k in 0..m {
        acc = &acc + &QRat::q_pow(2 * k - (m - 1));
    }
    if n < 0 {
        -acc
    } else {
        acc
    }
}

pub fn qfactorial(n: u32) -> QRat {
    (1..=n as i64).fold(QRat::one(), |acc, k| &acc * &qint(k))
}

/// Gaussian binomial in the balanced convention; zero outside `0 <= k <= n`.
pub fn qbinom(n: i64, k: i64) -> QRat {
    if n < 0 || k < 0 || k > n {
        return QRat::zero();
    }
    let num = qfactorial(n as u32);
    let den = &qfactorial(k as u32) * &qfactorial((n - k) as u32);
    &num / &den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(qint(0), QRat::zero());
        assert_eq!(qint(1), QRat::one());
        assert_eq!(qint(2), q_plus_qinv());
        assert_eq!(qint(3), QRat::laurent(&[(1, 2), (1, 0), (1, -2)]));
        assert_eq!(qint(-2), -q_plus_qinv());
        let direct = &(&QRat::q_pow(3) - &QRat::q_pow(-3)) / &q_minus_qinv();
        assert_eq!(qint(3), direct);
    }

    #[test]
    fn gaussian_binomial() {
        assert_eq!(qbinom(4, 2), QRat::laurent(&[(1, 4), (1, 2), (2, 0), (1, -2), (1, -4)]));
        assert_eq!(qbinom(3, 0), QRat::one());
        assert_eq!(qbinom(2, 3), QRat::zero());
    }

    #[test]
    fn canonical_form() {
        let x = QRat::new(QPoly::from_ints(&[-2, 0, 2]), QPoly::from_ints(&[0, 4, 4])).unwrap();
        assert_eq!(x.num(), &QPoly::from_coeffs(vec![r(-1, 2), r(1, 2)]));
        assert_eq!(x.den(), &QPoly::from_ints(&[0, 1]));
        assert_eq!(QRat::new(QPoly::one(), QPoly::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn evaluation_and_poles() {
        let x = q_minus_qinv().inv().unwrap();
        assert_eq!(x.eval(&r(1, 1)), Err(ScalarError::PoleAtPoint));
        assert_eq!(x.eval(&r(2, 1)).unwrap(), r(2, 3));
        assert_eq!(qint(3).eval(&r(2, 1)).unwrap(), r(21, 4));
    }

    #[test]
    fn gcd_is_monic() {
        let a = &QPoly::from_ints(&[-1, 0, 1]) * &QPoly::from_ints(&[0, 0, 3]);
        let b = &QPoly::from_ints(&[1, 1]) * &QPoly::from_ints(&[0, 2]);
        assert_eq!(a.gcd(&b), QPoly::from_ints(&[0, 1, 1]));
    }

    #[test]
    fn rendering() {
        assert_eq!(q_minus_qinv().inv().unwrap().to_string(), "(q - q^-1)^-1");
        assert_eq!((-q_minus_qinv().inv().unwrap()).to_string(), "-(q - q^-1)^-1");
        assert_eq!(QRat::term(-3, -1).to_string(), "-3 q^-1");
        assert_eq!(QRat::from_rational(r(1, 2)).to_string(), "1/2");
        assert_eq!(QRat::laurent(&[(1, 2), (1, 0)]).to_string(), "(q^2 + 1)");
        let y = &QRat::laurent(&[(1, 2), (1, 0)]) / &q_plus_qinv();
        assert_eq!(y.to_string(), "q");
        let z = &QRat::one() / &QRat::laurent(&[(1, 2), (1, 1), (1, 0)]);
        assert_eq!(z.to_string(), "q^-1 (q + 1 + q^-1)^-1");
        assert_eq!(QRat::one().to_string(), "1");
        assert_eq!(QRat::from_int(-1).to_string(), "-1");
    }
}
