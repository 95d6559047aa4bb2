//! Noncommutative polynomials over ℚ(q) and rewriting presentations.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use thiserror::Error;

use crate::scalars::{q_minus_qinv, QRat};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    E,
    F,
    K,
    Kinv,
    A,
    B,
    C,
    D,
}

impl Letter {
    pub const ALL: [Letter; 8] = [Letter::E, Letter::F, Letter::K, Letter::Kinv, Letter::A, Letter::B, Letter::C, Letter::D];
    pub const H_GENS: [Letter; 4] = [Letter::E, Letter::F, Letter::K, Letter::Kinv];
    pub const C_GENS: [Letter; 4] = [Letter::A, Letter::B, Letter::C, Letter::D];

    /// Position in the monomial order: `E < F < K < K^-1 < b < c < a < d`.
    pub fn rank(self) -> u8 {
        match self {
            Letter::E => 0,
            Letter::F => 1,
            Letter::K => 2,
            Letter::Kinv => 3,
            Letter::B => 4,
            Letter::C => 5,
            Letter::A => 6,
            Letter::D => 7,
        }
    }

    pub fn is_h(self) -> bool {
        self.rank() < 4
    }

    /// Matrix position `(i, j)` of a coordinate function `X_ij`.
    pub fn matrix_index(self) -> Option<(usize, usize)> {
        match self {
            Letter::A => Some((0, 0)),
            Letter::B => Some((0, 1)),
            Letter::C => Some((1, 0)),
            Letter::D => Some((1, 1)),
            _ => None,
        }
    }

    pub fn from_matrix_index(i: usize, j: usize) -> Letter {
        [[Letter::A, Letter::B], [Letter::C, Letter::D]][i][j]
    }

    pub fn name(self) -> &'static str {
        match self {
            Letter::E => "E",
            Letter::F => "F",
            Letter::K => "K",
            Letter::Kinv => "K^-1",
            Letter::A => "a",
            Letter::B => "b",
            Letter::C => "c",
            Letter::D => "d",
        }
    }

    pub fn from_char(ch: char) -> Option<Letter> {
        Some(match ch {
            'E' => Letter::E,
            'F' => Letter::F,
            'K' => Letter::K,
            'a' => Letter::A,
            'b' => Letter::B,
            'c' => Letter::C,
            'd' => Letter::D,
            _ => return None,
        })
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A word in the generators, ordered degree-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&x| x == l).count()
    }

    /// Split a normal H⊗C word into its H and C parts.
    pub fn split_hc(&self) -> (Word, Word) {
        let k = self.0.iter().position(|l| !l.is_h()).unwrap_or(self.0.len());
        (Word(self.0[..k].to_vec()), Word(self.0[k..].to_vec()))
    }
}

impl From<&[Letter]> for Word {
    fn from(ls: &[Letter]) -> Self {
        Word(ls.to_vec())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            let n = j - i;
            parts.push(match (l, n) {
                (Letter::Kinv, n) => format!("K^-{n}"),
                (l, 1) => l.name().to_string(),
                (l, n) => format!("{}^{n}", l.name()),
            });
            i = j;
        }
        f.write_str(&parts.join(" "))
    }
}

/// Finite ℚ(q)-linear combination of keys; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinComb<K: Ord>(BTreeMap<K, QRat>);

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb(BTreeMap::new())
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb(BTreeMap::new())
    }

    pub fn single(k: K, c: QRat) -> Self {
        let mut m = Self::zero();
        m.add_term(k, c);
        m
    }

    pub fn from_terms<I: IntoIterator<Item = (K, QRat)>>(terms: I) -> Self {
        let mut m = Self::zero();
        for (k, c) in terms {
            m.add_term(k, c);
        }
        m
    }

    pub fn add_term(&mut self, k: K, c: QRat) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &QRat) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.0 {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, k: &K) -> QRat {
        self.0.get(k).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn get(&self, k: &K) -> Option<&QRat> {
        self.0.get(k)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&K, &QRat)> {
        self.0.iter()
    }

    pub fn keys(&self) -> impl DoubleEndedIterator<Item = &K> {
        self.0.keys()
    }

    /// Largest key with its coefficient.
    pub fn leading(&self) -> Option<(&K, &QRat)> {
        self.0.iter().next_back()
    }

    pub fn remove(&mut self, k: &K) -> Option<QRat> {
        self.0.remove(k)
    }

    pub fn retain<P: FnMut(&K, &QRat) -> bool>(&mut self, mut p: P) {
        self.0.retain(|k, v| p(k, v));
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, QRat)> {
        self.0.into_iter()
    }
}

impl<K: Ord + Clone> std::ops::Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &QRat::one());
        out
    }
}

impl<K: Ord + Clone> std::ops::Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &QRat::from_int(-1));
        out
    }
}

impl<K: Ord + Clone> std::ops::Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&QRat::from_int(-1))
    }
}

pub type NCPoly = LinComb<Word>;

impl LinComb<Word> {
    pub fn one() -> Self {
        Self::scalar(QRat::one())
    }

    pub fn scalar(c: QRat) -> Self {
        Self::single(Word::empty(), c)
    }

    pub fn letter(l: Letter) -> Self {
        Self::single(Word::letter(l), QRat::one())
    }

    pub fn word(ls: &[Letter]) -> Self {
        Self::single(Word(ls.to_vec()), QRat::one())
    }

    /// The scalar value if the polynomial is a multiple of the empty word.
    pub fn as_scalar(&self) -> Option<QRat> {
        match self.len() {
            0 => Some(QRat::zero()),
            1 => self.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.keys().flat_map(|w| w.0.iter().copied())
    }

    pub fn max_degree(&self) -> usize {
        self.keys().map(Word::len).max().unwrap_or(0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("letter {letter} is not in the alphabet of {algebra}")]
    AlphabetMismatch { letter: Letter, algebra: &'static str },
    #[error("rule {0} does not decrease in the monomial order")]
    NonTermination(String),
    #[error("term {0} lies outside the coordinate window")]
    NotInWindow(String),
}

/// Generators, rewrite rules and a memoised normal form.
pub struct Presentation {
    name: &'static str,
    alphabet: Vec<Letter>,
    rules: HashMap<(Letter, Letter), NCPoly>,
    cache: RwLock<HashMap<(Word, Letter), NCPoly>>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation").field("name", &self.name).field("rules", &self.rules.len()).finish()
    }
}

/// Overlap ambiguities of a presentation and the ones that fail to resolve.
#[derive(Debug, Clone)]
pub struct CriticalPairReport {
    pub checked: usize,
    pub failures: Vec<(Word, NCPoly, NCPoly)>,
}

impl CriticalPairReport {
    pub fn confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Presentation {
    pub fn new(
        name: &'static str,
        alphabet: Vec<Letter>,
        rules: Vec<((Letter, Letter), NCPoly)>,
    ) -> Result<Self, AlgebraError> {
        for ((x, y), rhs) in &rules {
            let lhs = Word(vec![*x, *y]);
            if rhs.keys().any(|w| *w >= lhs) {
                return Err(AlgebraError::NonTermination(format!("{lhs}")));
            }
        }
        Ok(Presentation { name, alphabet, rules: rules.into_iter().collect(), cache: RwLock::new(HashMap::new()) })
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    /// Rules sorted by left-hand side.
    pub fn rules(&self) -> Vec<(Word, NCPoly)> {
        let mut v: Vec<_> = self.rules.iter().map(|((x, y), r)| (Word(vec![*x, *y]), r.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn rule(&self, x: Letter, y: Letter) -> Option<&NCPoly> {
        self.rules.get(&(x, y))
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.alphabet.contains(&l)
    }

    pub fn check_alphabet(&self, p: &NCPoly) -> Result<(), AlgebraError> {
        match p.letters().find(|l| !self.contains(*l)) {
            Some(letter) => Err(AlgebraError::AlphabetMismatch { letter, algebra: self.name }),
            None => Ok(()),
        }
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        w.0.windows(2).all(|p| !self.rules.contains_key(&(p[0], p[1])))
    }

    /// Normal form of `m·x` for a normal word `m`.
    fn append(&self, m: &Word, x: Letter) -> NCPoly {
        let Some(&last) = m.0.last() else {
            return NCPoly::letter(x);
        };
        let Some(rhs) = self.rules.get(&(last, x)) else {
            let mut w = m.0.clone();
            w.push(x);
            return NCPoly::single(Word(w), QRat::one());
        };
        let key = (m.clone(), x);
        if let Some(hit) = self.cache.read().unwrap().get(&key) {
            return hit.clone();
        }
        let prefix = Word(m.0[..m.0.len() - 1].to_vec());
        let mut out = NCPoly::zero();
        for (u, c) in rhs.terms() {
            let mut acc = NCPoly::single(prefix.clone(), c.clone());
            for &y in &u.0 {
                acc = self.append_poly(&acc, y);
            }
            out.add_scaled(&acc, &QRat::one());
        }
        self.cache.write().unwrap().insert(key, out.clone());
        out
    }

    fn append_poly(&self, p: &NCPoly, x: Letter) -> NCPoly {
        let mut out = NCPoly::zero();
        for (m, c) in p.terms() {
            out.add_scaled(&self.append(m, x), c);
        }
        out
    }

    fn normal_word(&self, w: &Word) -> NCPoly {
        let mut acc = NCPoly::one();
        for &x in &w.0 {
            acc = self.append_poly(&acc, x);
        }
        acc
    }

    /// Product of two polynomials already in normal form.
    fn mul_normal(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, cu) in a.terms() {
            for (v, cv) in b.terms() {
                let mut acc = NCPoly::single(u.clone(), cu * cv);
                for &y in &v.0 {
                    acc = self.append_poly(&acc, y);
                }
                out.add_scaled(&acc, &QRat::one());
            }
        }
        out
    }

    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly, AlgebraError> {
        self.check_alphabet(p)?;
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.normal_word(w), c);
        }
        Ok(out)
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly, AlgebraError> {
        let a = self.normal_form(a)?;
        let b = self.normal_form(b)?;
        Ok(self.mul_normal(&a, &b))
    }

    /// Product of words/polys assumed to be normal already; skips re-normalising the factors.
    pub(crate) fn mul_nf(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.mul_normal(a, b)
    }

    pub fn pow(&self, a: &NCPoly, n: u32) -> Result<NCPoly, AlgebraError> {
        let a = self.normal_form(a)?;
        let mut acc = NCPoly::one();
        for _ in 0..n {
            acc = self.mul_normal(&acc, &a);
        }
        Ok(acc)
    }

    /// Every overlap `x y z` of two rule patterns with its two reductions.
    pub fn overlaps(&self) -> Vec<(Word, NCPoly, NCPoly)> {
        let mut out = Vec::new();
        let mut keys: Vec<_> = self.rules.keys().copied().collect();
        keys.sort();
        for &(x, y) in &keys {
            for &(y2, z) in &keys {
                if y != y2 {
                    continue;
                }
                let left = self.mul_normal(&self.rules[&(x, y)], &NCPoly::letter(z));
                let left = self.normal_form(&left).unwrap();
                let right = self.mul_normal(&NCPoly::letter(x), &self.rules[&(y, z)]);
                let right = self.normal_form(&right).unwrap();
                out.push((Word(vec![x, y, z]), left, right));
            }
        }
        out
    }

    pub fn check(&self) -> CriticalPairReport {
        let all = self.overlaps();
        let checked = all.len();
        let failures = all.into_iter().filter(|(_, l, r)| l != r).collect();
        CriticalPairReport { checked, failures }
    }

    /// All normal words of a given length.
    pub fn normal_words(&self, len: usize) -> Vec<Word> {
        let mut layer = vec![Word::empty()];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &layer {
                for &l in &self.alphabet {
                    if w.0.last().is_none_or(|&p| !self.rules.contains_key(&(p, l))) {
                        next.push(w.concat(&Word::letter(l)));
                    }
                }
            }
            layer = next;
        }
        layer.sort();
        layer
    }
}

/// Coefficients of `v` on a window of monomials.
pub fn coords(v: &NCPoly, window: &[Word]) -> Result<Vec<QRat>, AlgebraError> {
    if let Some(w) = v.keys().find(|w| !window.contains(w)) {
        return Err(AlgebraError::NotInWindow(w.to_string()));
    }
    Ok(window.iter().map(|w| v.coeff(w)).collect())
}

fn poly(terms: &[(QRat, &[Letter])]) -> NCPoly {
    NCPoly::from_terms(terms.iter().map(|(c, w)| (Word(w.to_vec()), c.clone())))
}

fn qp(k: i64) -> QRat {
    QRat::q_pow(k)
}

use Letter::{Kinv, A, B, C, D, E, F, K};

fn h_rules() -> Vec<((Letter, Letter), NCPoly)> {
    let inv = q_minus_qinv().inv().unwrap();
    vec![
        ((K, Kinv), NCPoly::one()),
        ((Kinv, K), NCPoly::one()),
        ((K, E), poly(&[(qp(2), &[E, K])])),
        ((Kinv, E), poly(&[(qp(-2), &[E, Kinv])])),
        ((K, F), poly(&[(qp(-2), &[F, K])])),
        ((Kinv, F), poly(&[(qp(2), &[F, Kinv])])),
        ((F, E), poly(&[(QRat::one(), &[E, F]), (-&inv, &[K]), (inv, &[Kinv])])),
    ]
}

fn c_rules() -> Vec<((Letter, Letter), NCPoly)> {
    let one = QRat::one();
    vec![
        ((A, B), poly(&[(qp(-1), &[B, A])])),
        ((A, C), poly(&[(qp(-1), &[C, A])])),
        ((D, B), poly(&[(qp(1), &[B, D])])),
        ((D, C), poly(&[(qp(1), &[C, D])])),
        ((C, B), poly(&[(one.clone(), &[B, C])])),
        ((A, D), poly(&[(one.clone(), &[]), (qp(-1), &[B, C])])),
        ((D, A), poly(&[(one, &[]), (qp(1), &[B, C])])),
    ]
}

fn cop_rules() -> Vec<((Letter, Letter), NCPoly)> {
    let one = QRat::one();
    vec![
        ((A, B), poly(&[(qp(1), &[B, A])])),
        ((A, C), poly(&[(qp(1), &[C, A])])),
        ((D, B), poly(&[(qp(-1), &[B, D])])),
        ((D, C), poly(&[(qp(-1), &[C, D])])),
        ((C, B), poly(&[(one.clone(), &[B, C])])),
        ((D, A), poly(&[(one.clone(), &[]), (qp(-1), &[B, C])])),
        ((A, D), poly(&[(one, &[]), (qp(1), &[B, C])])),
    ]
}

fn cross_rules() -> Vec<((Letter, Letter), NCPoly)> {
    let one = QRat::one();
    let m1 = QRat::from_int(-1);
    vec![
        ((A, E), poly(&[(qp(-1), &[E, A]), (qp(-1), &[K, C])])),
        ((B, E), poly(&[(qp(1), &[E, B]), (qp(1), &[K, D]), (-qp(1), &[A])])),
        ((C, E), poly(&[(qp(-1), &[E, C])])),
        ((D, E), poly(&[(qp(1), &[E, D]), (-qp(1), &[C])])),
        ((A, F), poly(&[(qp(-1), &[F, A]), (-qp(-2), &[Kinv, B])])),
        ((B, F), poly(&[(qp(-1), &[F, B])])),
        ((C, F), poly(&[(qp(1), &[F, C]), (m1, &[Kinv, D]), (one.clone(), &[A])])),
        ((D, F), poly(&[(qp(1), &[F, D]), (one.clone(), &[B])])),
        ((A, K), poly(&[(one.clone(), &[K, A])])),
        ((B, K), poly(&[(qp(2), &[K, B])])),
        ((C, K), poly(&[(qp(-2), &[K, C])])),
        ((D, K), poly(&[(one.clone(), &[K, D])])),
        ((A, Kinv), poly(&[(one.clone(), &[Kinv, A])])),
        ((B, Kinv), poly(&[(qp(-2), &[Kinv, B])])),
        ((C, Kinv), poly(&[(qp(2), &[Kinv, C])])),
        ((D, Kinv), poly(&[(one, &[Kinv, D])])),
    ]
}

/// `U_q(sl2)`
pub fn uqsl2() -> &'static Presentation {
    static P: OnceLock<Presentation> = OnceLock::new();
    P.get_or_init(|| Presentation::new("uqsl2", Letter::H_GENS.to_vec(), h_rules()).unwrap())
}

/// `C_q[SL2]`
pub fn cqsl2() -> &'static Presentation {
    static P: OnceLock<Presentation> = OnceLock::new();
    P.get_or_init(|| Presentation::new("cqsl2", Letter::C_GENS.to_vec(), c_rules()).unwrap())
}

/// The Heisenberg double `H⊗C`: C letters commute past H letters.
pub fn hc() -> &'static Presentation {
    static P: OnceLock<Presentation> = OnceLock::new();
    P.get_or_init(|| {
        let mut rules = h_rules();
        rules.extend(c_rules());
        for x in Letter::C_GENS {
            for h in Letter::H_GENS {
                rules.push(((x, h), NCPoly::word(&[h, x])));
            }
        }
        Presentation::new("hc", Letter::ALL.to_vec(), rules).unwrap()
    })
}

/// The quantum double `D(H)`, normal words H-part first.
pub fn double() -> &'static Presentation {
    static P: OnceLock<Presentation> = OnceLock::new();
    P.get_or_init(|| {
        let mut rules = h_rules();
        rules.extend(cop_rules());
        rules.extend(cross_rules());
        Presentation::new("double", Letter::ALL.to_vec(), rules).unwrap()
    })
}

/// One item per overlap, with both reductions as witness when they differ.
pub fn presentation_check(pres: &Presentation) -> crate::report::Report {
    use crate::expr::format_poly;
    let mut report = crate::report::Report::new(format!("presentation {}", pres.name()));
    for (word, left, right) in pres.overlaps() {
        let (x, z) = (word.0[0], word.0[2]);
        let y = word.0[1];
        report.check(format!("overlap {word}"), "", left == right, || {
            format!("({x} {y}) {z} -> {}; {x} ({y} {z}) -> {}", format_poly(&left), format_poly(&right))
        });
    }
    report
}

pub fn presentation(name: &str) -> Option<&'static Presentation> {
    match name {
        "uqsl2" => Some(uqsl2()),
        "cqsl2" => Some(cqsl2()),
        "hc" => Some(hc()),
        "double" => Some(double()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presentations_confluent() {
        for p in [uqsl2(), cqsl2(), hc(), double()] {
            let r = p.check();
            assert!(r.confluent(), "{}: {:?}", p.name(), r.failures.first());
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn word_display() {
        assert_eq!(Word(vec![E, E, Kinv, Kinv, C, A]).to_string(), "E^2 K^-2 c a");
        assert_eq!(Word::empty().to_string(), "1");
    }

    #[test]
    fn k_inverse_cancels() {
        let p = hc().normal_form(&NCPoly::word(&[K, E, Kinv])).unwrap();
        assert_eq!(p, NCPoly::single(Word(vec![E]), qp(2)));
    }

    #[test]
    fn alphabet_mismatch() {
        let err = uqsl2().normal_form(&NCPoly::letter(A)).unwrap_err();
        assert!(matches!(err, AlgebraError::AlphabetMismatch { letter: A, .. }));
    }

    #[test]
    fn c_normal_words_have_no_ad() {
        for w in cqsl2().normal_words(4) {
            assert!(!(w.count(A) > 0 && w.count(D) > 0), "{w}");
        }
        // b^m c^r a^p d^n, pn = 0, of total degree 3
        assert_eq!(cqsl2().normal_words(3).len(), 16);
    }

    #[test]
    fn dropped_rule_breaks_confluence() {
        let rules: Vec<_> = c_rules().into_iter().filter(|(k, _)| *k != (C, B)).collect();
        let broken = Presentation::new("broken", Letter::C_GENS.to_vec(), rules).unwrap();
        let report = presentation_check(&broken);
        assert!(!report.passed());
        assert!(presentation_check(cqsl2()).passed());
    }
}
