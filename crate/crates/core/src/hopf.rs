//! Hopf structure, the pairing between `C_q[SL2]` and `U_q(sl2)`, and the
//! left/right actions of the double on `H⊗C`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use crate::ncpoly::{cqsl2, hc, uqsl2, AlgebraError, Letter, LinComb, NCPoly, Presentation, Word};
use crate::scalars::QRat;

use Letter::{Kinv, A, B, C, D, E, F, K};

pub type TensorPoly = LinComb<(Word, Word)>;

/// Coproduct of a generator as a list of `(left, right)` words of length at most one.
pub fn letter_coproduct(g: Letter) -> Vec<(QRat, Word, Word)> {
    let one = QRat::one;
    let w = Word::letter;
    match g {
        E => vec![(one(), w(E), w(K)), (one(), Word::empty(), w(E))],
        F => vec![(one(), w(F), Word::empty()), (one(), w(Kinv), w(F))],
        K => vec![(one(), w(K), w(K))],
        Kinv => vec![(one(), w(Kinv), w(Kinv))],
        _ => {
            let (i, j) = g.matrix_index().unwrap();
            (0..2)
                .map(|k| (one(), w(Letter::from_matrix_index(i, k)), w(Letter::from_matrix_index(k, j))))
                .collect()
        }
    }
}

pub fn letter_counit(g: Letter) -> QRat {
    match g {
        K | Kinv | A | D => QRat::one(),
        E | F | B | C => QRat::zero(),
    }
}

fn letter_antipode(g: Letter) -> NCPoly {
    let m1 = QRat::from_int(-1);
    match g {
        E => NCPoly::single(Word(vec![E, Kinv]), m1),
        F => NCPoly::single(Word(vec![K, F]), m1),
        K => NCPoly::letter(Kinv),
        Kinv => NCPoly::letter(K),
        A => NCPoly::letter(D),
        B => NCPoly::single(Word::letter(B), -QRat::q()),
        C => NCPoly::single(Word::letter(C), -QRat::q_pow(-1)),
        D => NCPoly::letter(A),
    }
}

fn tensor_append(pres: &Presentation, t: &TensorPoly, g: Letter) -> TensorPoly {
    let mut out = TensorPoly::zero();
    let parts = letter_coproduct(g);
    for ((u, v), c) in t.terms() {
        for (cg, x, y) in &parts {
            let left = pres.mul_nf(&NCPoly::single(u.clone(), QRat::one()), &NCPoly::single(x.clone(), QRat::one()));
            let right = pres.mul_nf(&NCPoly::single(v.clone(), QRat::one()), &NCPoly::single(y.clone(), QRat::one()));
            let k = c * cg;
            for (lw, lc) in left.terms() {
                for (rw, rc) in right.terms() {
                    out.add_term((lw.clone(), rw.clone()), &(&k * lc) * rc);
                }
            }
        }
    }
    out
}

/// `Δ(p)` with both legs in normal form of `pres`.
pub fn coproduct(p: &NCPoly, pres: &Presentation) -> Result<TensorPoly, AlgebraError> {
    pres.check_alphabet(p)?;
    let mut out = TensorPoly::zero();
    for (w, c) in p.terms() {
        let mut acc = TensorPoly::single((Word::empty(), Word::empty()), QRat::one());
        for &g in w.letters() {
            acc = tensor_append(pres, &acc, g);
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

pub fn counit(p: &NCPoly) -> QRat {
    let mut out = QRat::zero();
    for (w, c) in p.terms() {
        let e = w.letters().iter().fold(QRat::one(), |acc, &g| &acc * &letter_counit(g));
        out = &out + &(&e * c);
    }
    out
}

pub fn antipode(p: &NCPoly, pres: &Presentation) -> Result<NCPoly, AlgebraError> {
    pres.check_alphabet(p)?;
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut acc = NCPoly::one();
        for &g in w.letters().iter().rev() {
            acc = pres.mul_nf(&acc, &letter_antipode(g));
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// `φ(c, h)` for single words: a matrix entry of the tensor power of the vector representation.
pub fn pair_words(cw: &Word, hw: &Word) -> QRat {
    let n = cw.len();
    let mut row: u64 = 0;
    let mut col: u64 = 0;
    for (k, l) in cw.letters().iter().enumerate() {
        let Some((i, j)) = l.matrix_index() else { return QRat::zero() };
        row |= (i as u64) << k;
        col |= (j as u64) << k;
    }
    let q_weight = |idx: u64, range: std::ops::Range<usize>| -> i64 {
        range.map(|p| if (idx >> p) & 1 == 0 { 1 } else { -1 }).sum()
    };
    let mut v: BTreeMap<u64, QRat> = BTreeMap::from([(row, QRat::one())]);
    for &g in hw.letters() {
        let mut next: BTreeMap<u64, QRat> = BTreeMap::new();
        let mut push = |idx: u64, c: QRat| {
            let e = next.entry(idx).or_insert_with(QRat::zero);
            *e = &*e + &c;
        };
        for (&idx, c) in &v {
            match g {
                K => push(idx, c * &QRat::q_pow(q_weight(idx, 0..n))),
                Kinv => push(idx, c * &QRat::q_pow(-q_weight(idx, 0..n))),
                E => {
                    for k in 0..n {
                        if (idx >> k) & 1 == 0 {
                            push(idx | (1 << k), c * &QRat::q_pow(q_weight(idx, k + 1..n)));
                        }
                    }
                }
                F => {
                    for k in 0..n {
                        if (idx >> k) & 1 == 1 {
                            push(idx & !(1 << k), c * &QRat::q_pow(-q_weight(idx, 0..k)));
                        }
                    }
                }
                _ => return QRat::zero(),
            }
        }
        next.retain(|_, c| !c.is_zero());
        v = next;
    }
    v.get(&col).cloned().unwrap_or_else(QRat::zero)
}

/// The Hopf pairing `φ(c, h)`, bilinear in both arguments.
pub fn pairing(c: &NCPoly, h: &NCPoly) -> Result<QRat, AlgebraError> {
    cqsl2().check_alphabet(c)?;
    uqsl2().check_alphabet(h)?;
    let mut out = QRat::zero();
    for (cw, cc) in c.terms() {
        for (hw, hcf) in h.terms() {
            let p = pair_words(cw, hw);
            if !p.is_zero() {
                out = &out + &(&(cc * hcf) * &p);
            }
        }
    }
    Ok(out)
}

fn word_poly(w: &Word) -> NCPoly {
    NCPoly::single(w.clone(), QRat::one())
}

/// `h ▷ c = c₁ φ(c₂, h)`
pub fn h_on_c(h: &Word, c: &Word) -> NCPoly {
    let mut out = NCPoly::zero();
    for ((c1, c2), k) in coproduct(&word_poly(c), cqsl2()).unwrap().terms() {
        let p = pair_words(c2, h);
        if !p.is_zero() {
            out.add_term(c1.clone(), k * &p);
        }
    }
    out
}

/// `c ◁ h = c₂ φ(c₁, h)`
pub fn c_by_h(c: &Word, h: &Word) -> NCPoly {
    let mut out = NCPoly::zero();
    for ((c1, c2), k) in coproduct(&word_poly(c), cqsl2()).unwrap().terms() {
        let p = pair_words(c1, h);
        if !p.is_zero() {
            out.add_term(c2.clone(), k * &p);
        }
    }
    out
}

/// `c ▷ h = h₁ φ(c, h₂)`
pub fn c_on_h(c: &Word, h: &Word) -> NCPoly {
    let mut out = NCPoly::zero();
    for ((h1, h2), k) in coproduct(&word_poly(h), uqsl2()).unwrap().terms() {
        let p = pair_words(c, h2);
        if !p.is_zero() {
            out.add_term(h1.clone(), k * &p);
        }
    }
    out
}

/// `h ◁ c = h₂ φ(c, h₁)`
pub fn h_by_c(h: &Word, c: &Word) -> NCPoly {
    let mut out = NCPoly::zero();
    for ((h1, h2), k) in coproduct(&word_poly(h), uqsl2()).unwrap().terms() {
        let p = pair_words(c, h1);
        if !p.is_zero() {
            out.add_term(h2.clone(), k * &p);
        }
    }
    out
}

/// Product of an H polynomial and a C polynomial inside `H⊗C`.
fn hc_join(h: &NCPoly, c: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (hw, hk) in h.terms() {
        for (cw, ck) in c.terms() {
            out.add_term(hw.concat(cw), hk * ck);
        }
    }
    out
}

fn double_coproduct(g: Letter) -> Vec<(QRat, Word, Word, Word)> {
    let pres = if g.is_h() { uqsl2() } else { cqsl2() };
    let mut out = Vec::new();
    for (c, x, y) in letter_coproduct(g) {
        for ((x1, x2), k) in coproduct(&word_poly(&x), pres).unwrap().terms() {
            out.push((&c * k, x1.clone(), x2.clone(), y.clone()));
        }
    }
    out
}

/// Whole-monomial formulas for a generator acting on a normal `H⊗C` monomial.
pub mod closed {
    use super::*;

    pub fn left(g: Letter, m: &Word) -> NCPoly {
        let (hb, cb) = m.split_hc();
        if g.is_h() {
            return hc_join(&word_poly(&hb), &h_on_c(&Word::letter(g), &cb));
        }
        let mut out = NCPoly::zero();
        for (k, g1, g2, g3) in double_coproduct(g) {
            let h_part = h_by_c(&hb, &g2);
            if h_part.is_zero() {
                continue;
            }
            let s1 = antipode(&word_poly(&g1), cqsl2()).unwrap();
            let c_part = cqsl2().mul_nf(&cqsl2().mul_nf(&s1, &word_poly(&cb)), &word_poly(&g3));
            out.add_scaled(&hc_join(&h_part, &c_part), &k);
        }
        out
    }

    pub fn right(m: &Word, g: Letter) -> NCPoly {
        let (hb, cb) = m.split_hc();
        if !g.is_h() {
            return hc_join(&c_on_h(&Word::letter(g), &hb), &word_poly(&cb));
        }
        let mut out = NCPoly::zero();
        for (k, g1, g2, g3) in double_coproduct(g) {
            let c_part = c_by_h(&cb, &g2);
            if c_part.is_zero() {
                continue;
            }
            let s1 = antipode(&word_poly(&g1), uqsl2()).unwrap();
            let h_part = uqsl2().mul_nf(&uqsl2().mul_nf(&s1, &word_poly(&hb)), &word_poly(&g3));
            out.add_scaled(&hc_join(&h_part, &c_part), &k);
        }
        out
    }
}

/// Action of each generator of the double on each generator of `H⊗C`.
#[derive(Debug, Clone, PartialEq)]
pub struct GenActionTable {
    pub left: BTreeMap<(Letter, Letter), NCPoly>,
    pub right: BTreeMap<(Letter, Letter), NCPoly>,
}

impl GenActionTable {
    /// Computed from the pairing; keys are `(acting generator, acted-on letter)`.
    pub fn derived() -> &'static GenActionTable {
        static T: OnceLock<GenActionTable> = OnceLock::new();
        T.get_or_init(|| {
            let mut left = BTreeMap::new();
            let mut right = BTreeMap::new();
            for g in Letter::ALL {
                for x in Letter::ALL {
                    left.insert((g, x), closed::left(g, &Word::letter(x)));
                    right.insert((g, x), closed::right(&Word::letter(x), g));
                }
            }
            GenActionTable { left, right }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Generator table extended by the module-algebra rule.
    Recursive,
    /// Whole-monomial formulas.
    ClosedForm,
}

struct ActionCache {
    left: RwLock<HashMap<(Letter, Word), NCPoly>>,
    right: RwLock<HashMap<(Letter, Word), NCPoly>>,
}

fn cache() -> &'static ActionCache {
    static C: OnceLock<ActionCache> = OnceLock::new();
    C.get_or_init(|| ActionCache { left: RwLock::new(HashMap::new()), right: RwLock::new(HashMap::new()) })
}

fn act_word_left(g: &Word, v: &NCPoly) -> NCPoly {
    let mut acc = v.clone();
    for &x in g.letters().iter().rev() {
        acc = left_letter_poly(x, &acc);
    }
    acc
}

fn act_word_right(v: &NCPoly, g: &Word) -> NCPoly {
    let mut acc = v.clone();
    for &x in g.letters() {
        acc = right_letter_poly(&acc, x);
    }
    acc
}

fn left_letter_poly(g: Letter, v: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in v.terms() {
        out.add_scaled(&left_letter_word(g, w), c);
    }
    out
}

fn right_letter_poly(v: &NCPoly, g: Letter) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in v.terms() {
        out.add_scaled(&right_letter_word(w, g), c);
    }
    out
}

fn left_letter_word(g: Letter, w: &Word) -> NCPoly {
    match w.len() {
        0 => return NCPoly::scalar(letter_counit(g)),
        1 => return GenActionTable::derived().left[&(g, w.letters()[0])].clone(),
        _ => {}
    }
    let key = (g, w.clone());
    if let Some(hit) = cache().left.read().unwrap().get(&key) {
        return hit.clone();
    }
    let n = w.len();
    let head = Word(w.letters()[..n - 1].to_vec());
    let tail = Word(w.letters()[n - 1..].to_vec());
    let mut out = NCPoly::zero();
    for (k, g1, g2) in letter_coproduct(g) {
        let a = act_word_left(&g1, &word_poly(&head));
        if a.is_zero() {
            continue;
        }
        let b = act_word_left(&g2, &word_poly(&tail));
        out.add_scaled(&hc().mul_nf(&a, &b), &k);
    }
    cache().left.write().unwrap().insert(key, out.clone());
    out
}

fn right_letter_word(w: &Word, g: Letter) -> NCPoly {
    match w.len() {
        0 => return NCPoly::scalar(letter_counit(g)),
        1 => return GenActionTable::derived().right[&(g, w.letters()[0])].clone(),
        _ => {}
    }
    let key = (g, w.clone());
    if let Some(hit) = cache().right.read().unwrap().get(&key) {
        return hit.clone();
    }
    let n = w.len();
    let head = Word(w.letters()[..n - 1].to_vec());
    let tail = Word(w.letters()[n - 1..].to_vec());
    let mut out = NCPoly::zero();
    for (k, g1, g2) in letter_coproduct(g) {
        let a = act_word_right(&word_poly(&head), &g1);
        if a.is_zero() {
            continue;
        }
        let b = act_word_right(&word_poly(&tail), &g2);
        out.add_scaled(&hc().mul_nf(&a, &b), &k);
    }
    cache().right.write().unwrap().insert(key, out.clone());
    out
}

fn closed_left_poly(g: Letter, v: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in v.terms() {
        out.add_scaled(&closed::left(g, w), c);
    }
    out
}

fn closed_right_poly(v: &NCPoly, g: Letter) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in v.terms() {
        out.add_scaled(&closed::right(w, g), c);
    }
    out
}

/// `x ▶ v`; words of `x` act right to left.
pub fn act_left_via(route: Route, x: &NCPoly, v: &NCPoly) -> Result<NCPoly, AlgebraError> {
    let v = hc().normal_form(v)?;
    crate::ncpoly::double().check_alphabet(x)?;
    let mut out = NCPoly::zero();
    for (w, c) in x.terms() {
        let mut acc = v.clone();
        for &g in w.letters().iter().rev() {
            acc = match route {
                Route::Recursive => left_letter_poly(g, &acc),
                Route::ClosedForm => closed_left_poly(g, &acc),
            };
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// `v ◀ x`; words of `x` act left to right.
pub fn act_right_via(route: Route, v: &NCPoly, x: &NCPoly) -> Result<NCPoly, AlgebraError> {
    let v = hc().normal_form(v)?;
    crate::ncpoly::double().check_alphabet(x)?;
    let mut out = NCPoly::zero();
    for (w, c) in x.terms() {
        let mut acc = v.clone();
        for &g in w.letters() {
            acc = match route {
                Route::Recursive => right_letter_poly(&acc, g),
                Route::ClosedForm => closed_right_poly(&acc, g),
            };
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

pub fn act_left(x: &NCPoly, v: &NCPoly) -> Result<NCPoly, AlgebraError> {
    act_left_via(Route::Recursive, x, v)
}

pub fn act_right(v: &NCPoly, x: &NCPoly) -> Result<NCPoly, AlgebraError> {
    act_right_via(Route::Recursive, v, x)
}

/// Single generator on an already normal vector.
pub(crate) fn left_gen(g: Letter, v: &NCPoly) -> NCPoly {
    left_letter_poly(g, v)
}

pub(crate) fn right_gen(v: &NCPoly, g: Letter) -> NCPoly {
    right_letter_poly(v, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(x: Letter) -> NCPoly {
        NCPoly::letter(x)
    }

    #[test]
    fn pairing_on_generators() {
        assert_eq!(pairing(&l(A), &l(K)).unwrap(), QRat::q());
        assert_eq!(pairing(&l(D), &l(K)).unwrap(), QRat::q_pow(-1));
        assert_eq!(pairing(&l(B), &l(E)).unwrap(), QRat::one());
        assert_eq!(pairing(&l(C), &l(F)).unwrap(), QRat::one());
        assert_eq!(pairing(&l(A), &NCPoly::one()).unwrap(), QRat::one());
        assert_eq!(pairing(&l(B), &NCPoly::one()).unwrap(), QRat::zero());
        assert!(pairing(&l(E), &l(K)).is_err());
    }

    #[test]
    fn a_acting_on_e() {
        let got = act_left(&l(A), &l(E)).unwrap();
        let want = NCPoly::from_terms([(Word(vec![E]), QRat::one()), (Word(vec![K, C, D]), QRat::q())]);
        assert_eq!(got, want);
    }

    #[test]
    fn antipode_is_anti_multiplicative_on_c() {
        let ab = cqsl2().mul(&l(A), &l(B)).unwrap();
        let lhs = antipode(&ab, cqsl2()).unwrap();
        let rhs = cqsl2().mul(&antipode(&l(B), cqsl2()).unwrap(), &antipode(&l(A), cqsl2()).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
