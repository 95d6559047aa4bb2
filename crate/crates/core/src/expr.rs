//! Text syntax for scalars and polynomials.
//!
//! Juxtaposition or `*` multiplies, `/` divides by a scalar, `^` takes integer
//! powers (negative ones only for scalars and `K`), and `[x, y]_w` is the
//! twisted commutator `xy - w·yx`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::ncpoly::{AlgebraError, Letter, NCPoly, Presentation, Word};
use crate::scalars::{QRat, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("parse error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("`{0}` is not a scalar")]
    NotScalar(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    Name(String),
    Neg(Box<Expr>),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Bracket(Box<Expr>, Box<Expr>, Option<Box<Expr>>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let cs: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let (pos, ch) = cs[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let mut j = i;
            while j < cs.len() && cs[j].1.is_ascii_digit() {
                j += 1;
            }
            let text: String = cs[i..j].iter().map(|c| c.1).collect();
            out.push((pos, Tok::Num(text.parse().unwrap())));
            i = j;
        } else if ch.is_ascii_alphabetic() {
            let mut j = i;
            while j < cs.len() && (cs[j].1.is_ascii_alphanumeric() || cs[j].1 == '_') {
                j += 1;
            }
            out.push((pos, Tok::Ident(cs[i..j].iter().map(|c| c.1).collect())));
            i = j;
        } else if "+-*/^()[],_".contains(ch) {
            out.push((pos, Tok::Sym(ch)));
            i += 1;
        } else {
            return Err(ExprError::Syntax { pos, msg: format!("unexpected character `{ch}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: &str) -> Result<T, ExprError> {
        Err(ExprError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("expected `{c}`"))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut terms = Vec::new();
        let first_neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let t = self.term()?;
        terms.push(if first_neg { Expr::Neg(Box::new(t)) } else { t });
        loop {
            if self.eat('+') {
                terms.push(self.term()?);
            } else if self.eat('-') {
                terms.push(Expr::Neg(Box::new(self.term()?)));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('(')) | Some(Tok::Sym('[')))
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.power()?;
        let mut factors = Vec::new();
        loop {
            if self.eat('*') {
                factors.push(std::mem::replace(&mut acc, self.power()?));
            } else if self.eat('/') {
                let d = self.power()?;
                acc = Expr::Div(Box::new(acc), Box::new(d));
            } else if self.starts_factor() {
                factors.push(std::mem::replace(&mut acc, self.power()?));
            } else {
                break;
            }
        }
        if factors.is_empty() {
            Ok(acc)
        } else {
            factors.push(acc);
            Ok(Expr::Product(factors))
        }
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let Some(Tok::Num(n)) = self.peek().cloned() else { return self.err("expected an exponent") };
            self.at += 1;
            let n: i64 = n.try_into().map_err(|_| ExprError::Syntax { pos: self.pos(), msg: "exponent too large".into() })?;
            return Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(s)) => {
                self.at += 1;
                Ok(Expr::Name(s))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Sym('[')) => {
                self.at += 1;
                let x = self.expr()?;
                self.expect(',')?;
                let y = self.expr()?;
                self.expect(']')?;
                let w = if self.eat('_') { Some(Box::new(self.power()?)) } else { None };
                Ok(Expr::Bracket(Box::new(x), Box::new(y), w))
            }
            _ => self.err("expected a number, name or bracket"),
        }
    }
}

pub fn parse_ast(text: &str) -> Result<Expr, ExprError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Resolve a name to a polynomial in `pres`.
fn resolve(name: &str, pres: &Presentation) -> Result<NCPoly, ExprError> {
    let letter = |l: Letter| -> Result<NCPoly, ExprError> {
        if pres.contains(l) {
            Ok(NCPoly::letter(l))
        } else {
            Err(AlgebraError::AlphabetMismatch { letter: l, algebra: pres.name() }.into())
        }
    };
    if name == "q" {
        return Ok(NCPoly::scalar(QRat::q()));
    }
    if name == "Kinv" {
        return letter(Letter::Kinv);
    }
    if let Some(v) = crate::vectors::named(name) {
        pres.check_alphabet(&v)?;
        return pres.normal_form(&v).map_err(Into::into);
    }
    if name.chars().all(|c| c == 'q' || Letter::from_char(c).is_some()) {
        let mut acc = NCPoly::one();
        for c in name.chars() {
            let f = if c == 'q' { NCPoly::scalar(QRat::q()) } else { letter(Letter::from_char(c).unwrap())? };
            acc = pres.mul(&acc, &f)?;
        }
        return Ok(acc);
    }
    Err(ExprError::UnknownName(name.into()))
}

pub fn eval(e: &Expr, pres: &Presentation) -> Result<NCPoly, ExprError> {
    Ok(match e {
        Expr::Num(n) => NCPoly::scalar(QRat::from_rational(num_rational::BigRational::from_integer(n.clone()))),
        Expr::Name(s) => resolve(s, pres)?,
        Expr::Neg(x) => -&eval(x, pres)?,
        Expr::Sum(xs) => {
            let mut acc = NCPoly::zero();
            for x in xs {
                acc = &acc + &eval(x, pres)?;
            }
            acc
        }
        Expr::Product(xs) => {
            let mut acc = NCPoly::one();
            for x in xs {
                acc = pres.mul(&acc, &eval(x, pres)?)?;
            }
            acc
        }
        Expr::Div(x, d) => {
            let dv = eval(d, pres)?;
            let s = dv.as_scalar().ok_or_else(|| ExprError::NotScalar(format_poly(&dv)))?;
            eval(x, pres)?.scale(&s.inv()?)
        }
        Expr::Pow(x, n) => {
            let base = eval(x, pres)?;
            if let Some(s) = base.as_scalar() {
                NCPoly::scalar(s.pow(*n)?)
            } else if *n >= 0 {
                pres.pow(&base, *n as u32)?
            } else if base == NCPoly::letter(Letter::K) {
                pres.pow(&NCPoly::letter(Letter::Kinv), n.unsigned_abs() as u32)?
            } else if base == NCPoly::letter(Letter::Kinv) {
                pres.pow(&NCPoly::letter(Letter::K), n.unsigned_abs() as u32)?
            } else {
                return Err(ExprError::NotScalar(format_poly(&base)));
            }
        }
        Expr::Bracket(x, y, w) => {
            let xv = eval(x, pres)?;
            let yv = eval(y, pres)?;
            let wv = match w {
                Some(w) => {
                    let v = eval(w, pres)?;
                    v.as_scalar().ok_or_else(|| ExprError::NotScalar(format_poly(&v)))?
                }
                None => QRat::one(),
            };
            &pres.mul(&xv, &yv)? - &pres.mul(&yv, &xv)?.scale(&wv)
        }
    })
}

/// Parse text into a normal-form polynomial of `pres`.
pub fn parse_expr(text: &str, pres: &Presentation) -> Result<NCPoly, ExprError> {
    eval(&parse_ast(text)?, pres)
}

pub fn parse_scalar(text: &str) -> Result<QRat, ExprError> {
    let v = parse_expr(text, crate::ncpoly::hc())?;
    v.as_scalar().ok_or_else(|| ExprError::NotScalar(text.into()))
}

fn print_order(a: &Word, b: &Word) -> std::cmp::Ordering {
    b.len().cmp(&a.len()).then_with(|| a.letters().cmp(b.letters()))
}

/// Canonical text of a polynomial: higher degree first, then lexicographic.
pub fn format_poly(p: &NCPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| print_order(a.0, b.0));
    let mut out = String::new();
    for (i, (w, c)) in terms.into_iter().enumerate() {
        let (neg, body) = c.render_parts();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (body.is_empty(), w.is_empty()) {
            (true, true) => out.push('1'),
            (true, false) => out.push_str(&w.to_string()),
            (false, true) => out.push_str(&body),
            (false, false) => {
                out.push_str(&body);
                out.push(' ');
                out.push_str(&w.to_string());
            }
        }
    }
    out
}

/// Wrapper giving polynomials their canonical `Display`.
pub struct Pretty<'a>(pub &'a NCPoly);

impl fmt::Display for Pretty<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::{double, hc, uqsl2};

    #[test]
    fn normalize_fe() {
        let p = parse_expr("F E", uqsl2()).unwrap();
        assert_eq!(format_poly(&p), "E F - (q - q^-1)^-1 K + (q - q^-1)^-1 K^-1");
    }

    #[test]
    fn round_trip_simple() {
        for text in ["E F - (q - q^-1)^-1 K + (q - q^-1)^-1 K^-1", "K^-1 c^2", "1/2 q^2 E + 3", "-q^-1 K c^2"] {
            let p = parse_expr(text, hc()).unwrap();
            assert_eq!(parse_expr(&format_poly(&p), hc()).unwrap(), p, "{text}");
        }
    }

    #[test]
    fn juxtaposed_letters_split() {
        assert_eq!(parse_expr("Kac", hc()).unwrap(), parse_expr("K a c", hc()).unwrap());
    }

    #[test]
    fn negative_power_of_nonscalar_rejected() {
        assert!(matches!(parse_expr("E^-1", hc()), Err(ExprError::NotScalar(_))));
        assert!(matches!(parse_expr("E / F", hc()), Err(ExprError::NotScalar(_))));
        assert!(parse_expr("1/(q - q)", hc()).is_err());
    }

    #[test]
    fn bracket() {
        let p = parse_expr("[K, E]_q^2", double()).unwrap();
        assert!(p.is_zero());
        assert!(matches!(parse_expr("a", uqsl2()), Err(ExprError::Algebra(_))));
        assert!(matches!(parse_expr("E + ", hc()), Err(ExprError::Syntax { .. })));
    }
}
