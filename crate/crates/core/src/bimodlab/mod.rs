//! Finite-dimensional sub-bimodules of `H⊗C`: weights, closures, simplicity and decompositions.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::hopf::{left_gen, right_gen};
use crate::linalg::{mat_mul_mod, Echelon, Matrix, ModEchelon, TrackedSpan, MOD_P};
use crate::ncpoly::{double, hc, AlgebraError, LinComb, Letter, NCPoly, Word};
use crate::scalars::{q_minus_qinv, QRat};
use crate::vectors::ParityError;

mod checks;
mod hwalg;
mod lemmas;

pub use checks::*;
pub use hwalg::*;
pub use lemmas::*;

pub const DEFAULT_CAP: usize = 512;
pub const DEFAULT_WORD_CAP: usize = 8;
/// Largest `d²` for which the density test is attempted.
pub const BURNSIDE_LIMIT: usize = 1024;

/// Evaluation points for modular certificates.
const EVAL_POINTS: [u64; 4] = [1_000_003, 7_919, 104_729, 15_485_863];

#[derive(Debug, thiserror::Error)]
pub enum BimodError {
    #[error("zero vector has no weight")]
    ZeroVector,
    #[error("closure exceeded the dimension cap {cap}")]
    LocalFinitenessExceeded { cap: usize },
    #[error("decomposition incomplete: {0}")]
    DecompositionIncomplete(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unsupported letters: {0}")]
    UnsupportedLetters(String),
    #[error("module has no {0} action")]
    MissingSide(&'static str),
    #[error("vector outside the module span")]
    NotInSpan,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Parity(#[from] ParityError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub left: i64,
    pub right: i64,
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionSide {
    Left,
    Right,
    Bi,
}

impl ActionSide {
    pub fn has_left(self) -> bool {
        matches!(self, ActionSide::Left | ActionSide::Bi)
    }

    pub fn has_right(self) -> bool {
        matches!(self, ActionSide::Right | ActionSide::Bi)
    }

    pub fn name(self) -> &'static str {
        match self {
            ActionSide::Left => "left",
            ActionSide::Right => "right",
            ActionSide::Bi => "bi",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "left" => Some(ActionSide::Left),
            "right" => Some(ActionSide::Right),
            "bi" => Some(ActionSide::Bi),
            _ => None,
        }
    }
}

/// Eigenvalue exponents of `K▶` and `◀K^-1` on a normal monomial.
pub fn monomial_weight(w: &Word) -> Weight {
    let n = |l| w.count(l) as i64;
    use Letter::*;
    Weight {
        left: n(A) + n(C) - n(B) - n(D),
        right: 2 * n(E) - 2 * n(F) - n(A) - n(B) + n(C) + n(D),
    }
}

pub fn weight_of(v: &NCPoly) -> Result<Option<Weight>, BimodError> {
    let v = hc().normal_form(v)?;
    let (w, _) = v.leading().ok_or(BimodError::ZeroVector)?;
    let guess = monomial_weight(w);
    let kl = left_gen(Letter::K, &v);
    let kr = right_gen(&v, Letter::Kinv);
    let ok = kl == v.scale(&QRat::q_pow(guess.left)) && kr == v.scale(&QRat::q_pow(guess.right));
    Ok(ok.then_some(guess))
}

pub fn is_hw_bivector(v: &NCPoly) -> Result<bool, BimodError> {
    let v = hc().normal_form(v)?;
    Ok(left_gen(Letter::E, &v).is_zero() && right_gen(&v, Letter::E).is_zero())
}

/// Splits `v` into components homogeneous for the weights visible on `side`.
fn weight_components(v: &NCPoly, side: ActionSide) -> BTreeMap<Weight, NCPoly> {
    let mut out: BTreeMap<Weight, NCPoly> = BTreeMap::new();
    for (w, c) in v.terms() {
        let mut wt = monomial_weight(w);
        if !side.has_left() {
            wt.left = 0;
        }
        if !side.has_right() {
            wt.right = 0;
        }
        out.entry(wt).or_default().add_term(w.clone(), c.clone());
    }
    out
}

/// Weight shared by every term of `v`, if any.
pub fn homogeneous_weight(v: &NCPoly) -> Option<Weight> {
    let mut it = v.keys().map(monomial_weight);
    let first = it.next()?;
    it.all(|w| w == first).then_some(first)
}

type Coords = LinComb<usize>;

fn apply(m: &Matrix, v: &Coords) -> Coords {
    let mut out = Coords::zero();
    for (&k, c) in v.terms() {
        for i in 0..m.rows() {
            let a = &m[(i, k)];
            if !a.is_zero() {
                out.add_term(i, a * c);
            }
        }
    }
    out
}

fn to_dense(v: &Coords, n: usize) -> Vec<QRat> {
    let mut out = vec![QRat::zero(); n];
    for (&i, c) in v.terms() {
        out[i] = c.clone();
    }
    out
}

/// Products of named vectors, with powers cached.
#[derive(Default)]
pub(crate) struct Powers {
    cache: HashMap<(&'static str, u32), NCPoly>,
}

impl Powers {
    pub(crate) fn power(&mut self, name: &'static str, k: u32) -> NCPoly {
        if let Some(p) = self.cache.get(&(name, k)) {
            return p.clone();
        }
        let p = if k == 0 { NCPoly::one() } else { hc().mul_nf(&self.power(name, k - 1), &crate::vectors::v(name)) };
        self.cache.insert((name, k), p.clone());
        p
    }

    pub(crate) fn product(&mut self, factors: &[(&'static str, u32)]) -> NCPoly {
        let mut acc = NCPoly::one();
        for &(name, k) in factors {
            if k > 0 {
                acc = hc().mul_nf(&acc, &self.power(name, k));
            }
        }
        acc
    }
}

/// Rank of a family of vectors: full rank is certified modulo a prime, anything else is computed exactly.
pub(crate) fn family_rank(vs: &[NCPoly]) -> usize {
    let weights: Vec<Option<Weight>> = vs.iter().map(homogeneous_weight).collect();
    let mut groups: BTreeMap<Option<Weight>, Vec<&NCPoly>> = BTreeMap::new();
    if weights.iter().any(Option::is_none) {
        groups.insert(None, vs.iter().collect());
    } else {
        for (v, w) in vs.iter().zip(weights) {
            groups.entry(w).or_default().push(v);
        }
    }
    groups.values().map(|g| group_rank(g)).sum()
}

fn group_rank(vs: &[&NCPoly]) -> usize {
    if full_rank_mod_p(vs) {
        return vs.len();
    }
    let mut ech = Echelon::new();
    for v in vs {
        ech.insert(v);
    }
    ech.dim()
}

fn full_rank_mod_p(vs: &[&NCPoly]) -> bool {
    let mut index: HashMap<&Word, usize> = HashMap::new();
    for v in vs {
        for w in v.keys() {
            let n = index.len();
            index.entry(w).or_insert(n);
        }
    }
    if index.len() < vs.len() {
        return false;
    }
    'points: for q0 in EVAL_POINTS {
        let mut ech = ModEchelon::new(MOD_P);
        for v in vs {
            let mut row = vec![0u64; index.len()];
            for (w, c) in v.terms() {
                match c.eval_mod(q0, MOD_P) {
                    Some(x) => row[index[w]] = x,
                    None => continue 'points,
                }
            }
            if !ech.insert(&row) {
                return false;
            }
        }
        return true;
    }
    false
}

/// Finite-dimensional subspace of `H⊗C` stable under the chosen actions.
#[derive(Clone, Debug, PartialEq)]
pub struct FDBimodule {
    pub basis: Vec<NCPoly>,
    /// Column `k` of `left[g]` holds the coordinates of `g ▶ basis[k]`.
    pub left: BTreeMap<Letter, Matrix>,
    /// Column `k` of `right[g]` holds the coordinates of `basis[k] ◀ g`.
    pub right: BTreeMap<Letter, Matrix>,
    pub side: ActionSide,
}

impl FDBimodule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Builds the action matrices for a basis already known to span a stable subspace.
    pub fn from_basis(basis: Vec<NCPoly>, side: ActionSide) -> Result<Self, BimodError> {
        let mut span = TrackedSpan::new();
        for b in &basis {
            if span.insert(b).is_none() {
                return Err(BimodError::DecompositionIncomplete("basis is linearly dependent".into()));
            }
        }
        let coords = |v: &NCPoly| span.coords(v).ok_or(BimodError::NotInSpan);
        let n = basis.len();
        let mut left = BTreeMap::new();
        let mut right = BTreeMap::new();
        for g in Letter::ALL {
            if side.has_left() {
                let cols = basis.iter().map(|b| coords(&left_gen(g, b))).collect::<Result<Vec<_>, _>>()?;
                left.insert(g, Matrix::from_columns(n, &cols));
            }
            if side.has_right() {
                let cols = basis.iter().map(|b| coords(&right_gen(b, g))).collect::<Result<Vec<_>, _>>()?;
                right.insert(g, Matrix::from_columns(n, &cols));
            }
        }
        Ok(FDBimodule { basis, left, right, side })
    }

    /// Coordinates of `v` in the basis.
    pub fn coords(&self, v: &NCPoly) -> Option<Vec<QRat>> {
        let mut span = TrackedSpan::new();
        for b in &self.basis {
            span.insert(b);
        }
        span.coords(v)
    }

    pub fn vector(&self, coords: &[QRat]) -> NCPoly {
        let mut out = NCPoly::zero();
        for (b, c) in self.basis.iter().zip(coords) {
            if !c.is_zero() {
                out.add_scaled(b, c);
            }
        }
        out
    }

    fn coord_vector(&self, v: &Coords) -> NCPoly {
        let mut out = NCPoly::zero();
        for (&i, c) in v.terms() {
            out.add_scaled(&self.basis[i], c);
        }
        out
    }

    pub fn weights(&self) -> Vec<Option<Weight>> {
        self.basis.iter().map(homogeneous_weight).collect()
    }

    /// All action matrices, left ones first.
    fn all_matrices(&self) -> Vec<&Matrix> {
        self.left.values().chain(self.right.values()).collect()
    }

    /// Matrices of the non-diagonal generators.
    fn moving_matrices(&self) -> Vec<&Matrix> {
        let moving = |g: &Letter| !matches!(g, Letter::K | Letter::Kinv);
        self.left
            .iter()
            .chain(self.right.iter())
            .filter(|(g, _)| moving(g))
            .map(|(_, m)| m)
            .collect()
    }

    /// Checks every defining relation of the double as a matrix identity on each present side.
    pub fn check_relations(&self) -> crate::report::Report {
        let mut report = crate::report::Report::new("matrix relations");
        let n = self.dim();
        let eval = |mats: &BTreeMap<Letter, Matrix>, p: &NCPoly, reversed: bool| -> Matrix {
            let mut acc = Matrix::zeros(n, n);
            for (w, c) in p.terms() {
                let mut m = Matrix::identity(n);
                for &l in w.letters() {
                    m = if reversed { &mats[&l] * &m } else { &m * &mats[&l] };
                }
                acc = &acc + &m.scale(c);
            }
            acc
        };
        for (lhs, rhs) in double().rules() {
            let l = NCPoly::single(lhs.clone(), QRat::one());
            let name = format!("{} = {}", crate::expr::format_poly(&l), crate::expr::format_poly(&rhs));
            if self.side.has_left() {
                let ok = eval(&self.left, &l, false) == eval(&self.left, &rhs, false);
                report.check(name.clone(), "left", ok, || "matrices differ".into());
            }
            if self.side.has_right() {
                let ok = eval(&self.right, &l, true) == eval(&self.right, &rhs, true);
                report.check(name, "right", ok, || "matrices differ".into());
            }
        }
        report
    }
}

/// Smallest subspace containing `seeds` and stable under the actions on `side`.
pub fn closure(seeds: &[NCPoly], side: ActionSide, cap: usize) -> Result<FDBimodule, BimodError> {
    let mut buckets: BTreeMap<Weight, Echelon<Word>> = BTreeMap::new();
    let mut queue: VecDeque<NCPoly> = VecDeque::new();
    let mut dim = 0usize;
    let mut add = |v: &NCPoly, queue: &mut VecDeque<NCPoly>| -> Result<(), BimodError> {
        for (wt, comp) in weight_components(v, side) {
            let ech = buckets.entry(wt).or_default();
            let r = ech.residual(&comp);
            if r.is_zero() {
                continue;
            }
            ech.insert(&r);
            dim += 1;
            if dim > cap {
                return Err(BimodError::LocalFinitenessExceeded { cap });
            }
            queue.push_back(r);
        }
        Ok(())
    };
    for s in seeds {
        hc().check_alphabet(s)?;
        add(&hc().normal_form(s)?, &mut queue)?;
    }
    const MOVING: [Letter; 6] = [Letter::E, Letter::F, Letter::A, Letter::B, Letter::C, Letter::D];
    while let Some(u) = queue.pop_front() {
        for g in MOVING {
            if side.has_left() {
                add(&left_gen(g, &u), &mut queue)?;
            }
            if side.has_right() {
                add(&right_gen(&u, g), &mut queue)?;
            }
        }
    }
    let mut rows: Vec<NCPoly> = buckets.values().flat_map(|e| e.rows().iter().cloned()).collect();
    rows.sort_by(|a, b| a.leading().map(|x| x.0).cmp(&b.leading().map(|x| x.0)));
    echelon_module(rows, side)
}

/// Matrices for reduced echelon rows with pairwise distinct pivots.
fn echelon_module(basis: Vec<NCPoly>, side: ActionSide) -> Result<FDBimodule, BimodError> {
    let n = basis.len();
    let pivots: Vec<Word> = basis.iter().map(|b| b.leading().expect("nonzero row").0.clone()).collect();
    let coords = |v: &NCPoly| -> Result<Vec<QRat>, BimodError> {
        let c: Vec<QRat> = pivots.iter().map(|p| v.coeff(p)).collect();
        let mut r = v.clone();
        for (b, x) in basis.iter().zip(&c) {
            if !x.is_zero() {
                r.add_scaled(b, &-x);
            }
        }
        if r.is_zero() {
            Ok(c)
        } else {
            Err(BimodError::NotInSpan)
        }
    };
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for g in Letter::ALL {
        if side.has_left() {
            let cols = basis.iter().map(|b| coords(&left_gen(g, b))).collect::<Result<Vec<_>, _>>()?;
            left.insert(g, Matrix::from_columns(n, &cols));
        }
        if side.has_right() {
            let cols = basis.iter().map(|b| coords(&right_gen(b, g))).collect::<Result<Vec<_>, _>>()?;
            right.insert(g, Matrix::from_columns(n, &cols));
        }
    }
    Ok(FDBimodule { basis, left, right, side })
}

/// Groups basis indices by the weight visible on `side`, highest first.
fn weight_blocks(m: &FDBimodule, key: impl Fn(Weight) -> (i64, i64)) -> Vec<((i64, i64), Vec<usize>)> {
    let mut blocks: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
    let weights = m.weights();
    if weights.iter().any(Option::is_none) {
        return vec![((0, 0), (0..m.dim()).collect())];
    }
    for (i, w) in weights.into_iter().enumerate() {
        blocks.entry(key(w.unwrap())).or_default().push(i);
    }
    blocks.into_iter().rev().collect()
}

/// Kernel of the stacked matrices restricted to the columns in `cols`.
fn block_kernel(mats: &[&Matrix], cols: &[usize]) -> Vec<Coords> {
    let rows: Vec<Vec<QRat>> =
        mats.iter().flat_map(|m| (0..m.rows()).map(move |i| cols.iter().map(|&k| m[(i, k)].clone()).collect())).collect();
    let sub = if rows.is_empty() { Matrix::zeros(0, cols.len()) } else { Matrix::from_rows(rows) };
    sub.kernel()
        .into_iter()
        .map(|v| Coords::from_terms(v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (cols[j], c))))
        .collect()
}

fn hw_left_coords(m: &FDBimodule) -> Result<Vec<(i64, Coords)>, BimodError> {
    let e = m.left.get(&Letter::E).ok_or(BimodError::MissingSide("left"))?;
    let mut out = Vec::new();
    for ((w, _), cols) in weight_blocks(m, |w| (w.left, 0)) {
        for v in block_kernel(&[e], &cols) {
            out.push((w, v));
        }
    }
    Ok(out)
}

fn hw_right_coords(m: &FDBimodule) -> Result<Vec<(i64, Coords)>, BimodError> {
    let e = m.right.get(&Letter::E).ok_or(BimodError::MissingSide("right"))?;
    let mut out = Vec::new();
    for ((w, _), cols) in weight_blocks(m, |w| (w.right, 0)) {
        for v in block_kernel(&[e], &cols) {
            out.push((w, v));
        }
    }
    Ok(out)
}

fn hw_bi_coords(m: &FDBimodule) -> Result<Vec<(Weight, Coords)>, BimodError> {
    let el = m.left.get(&Letter::E).ok_or(BimodError::MissingSide("left"))?;
    let er = m.right.get(&Letter::E).ok_or(BimodError::MissingSide("right"))?;
    let mut out = Vec::new();
    for ((l, r), cols) in weight_blocks(m, |w| (w.left, w.right)) {
        for v in block_kernel(&[el, er], &cols) {
            out.push((Weight { left: l, right: r }, v));
        }
    }
    Ok(out)
}

/// Kernel of the left `E`-action, highest left weight first.
pub fn hw_vectors_left(m: &FDBimodule) -> Result<Vec<NCPoly>, BimodError> {
    Ok(hw_left_coords(m)?.iter().map(|(_, v)| m.coord_vector(v)).collect())
}

/// Joint kernel of the left and right `E`-actions, each vector weight-homogeneous.
pub fn hw_bivectors(m: &FDBimodule) -> Result<Vec<(Weight, NCPoly)>, BimodError> {
    Ok(hw_bi_coords(m)?.iter().map(|(w, v)| (*w, m.coord_vector(v))).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Products of action matrices span all `d²` matrices.
    Burnside { span: usize },
    /// A unique highest-weight line generating the whole module.
    HighestWeight,
    /// A basis vector spanning its weight space generates the module, and its dual functional generates the dual.
    WeightLine { weight: Weight },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Simplicity {
    Simple(Certificate),
    /// Basis of a proper nonzero invariant subspace.
    NotSimple { witness: Vec<NCPoly> },
    Inconclusive { reached: usize },
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::Simple(_))
    }
}

/// Dimension reached by products of at most `word_cap` generators, evaluated modulo a prime.
fn burnside_span(mats: &[&Matrix], d: usize, word_cap: usize) -> Option<usize> {
    'points: for q0 in EVAL_POINTS {
        let mut gens = Vec::new();
        for m in mats {
            match m.to_mod(q0, MOD_P) {
                Some(g) => gens.push(g),
                None => continue 'points,
            }
        }
        let mut id = vec![0u64; d * d];
        for i in 0..d {
            id[i * d + i] = 1;
        }
        let mut ech = ModEchelon::new(MOD_P);
        ech.insert(&id);
        let mut frontier = vec![id];
        for _ in 0..word_cap {
            let mut next = Vec::new();
            for m in &frontier {
                for g in &gens {
                    let p = mat_mul_mod(g, m, d, MOD_P);
                    if ech.insert(&p) {
                        next.push(p);
                    }
                    if ech.dim() == d * d {
                        return Some(d * d);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        return Some(ech.dim());
    }
    None
}

/// Smallest subspace containing `start` and stable under `mats`.
fn cyclic_span(mats: &[&Matrix], start: &Coords, limit: usize) -> Echelon<usize> {
    let mut ech = Echelon::new();
    let mut queue = VecDeque::new();
    if ech.insert(start).is_some() {
        queue.push_back(start.clone());
    }
    while let Some(u) = queue.pop_front() {
        for m in mats {
            let img = apply(m, &u);
            let r = ech.residual(&img);
            if !r.is_zero() {
                ech.insert(&r);
                queue.push_back(r);
                if ech.dim() >= limit {
                    return ech;
                }
            }
        }
    }
    ech
}

fn highest_weight_space(m: &FDBimodule) -> Result<Vec<Coords>, BimodError> {
    Ok(match m.side {
        ActionSide::Bi => hw_bi_coords(m)?.into_iter().map(|x| x.1).collect(),
        ActionSide::Left => hw_left_coords(m)?.into_iter().map(|x| x.1).collect(),
        ActionSide::Right => hw_right_coords(m)?.into_iter().map(|x| x.1).collect(),
    })
}

/// Density test, with a highest-weight certificate for modules too large for it.
pub fn is_simple(m: &FDBimodule, word_cap: usize) -> Result<Simplicity, BimodError> {
    let d = m.dim();
    if d == 0 {
        return Ok(Simplicity::NotSimple { witness: Vec::new() });
    }
    let mats = m.moving_matrices();
    let all = m.all_matrices();
    let mut reached = 0;
    if d * d <= BURNSIDE_LIMIT {
        if let Some(span) = burnside_span(&all, d, word_cap) {
            if span == d * d {
                return Ok(Simplicity::Simple(Certificate::Burnside { span }));
            }
            reached = span;
        }
    }
    let hw = highest_weight_space(m)?;
    for h in &hw {
        let sub = cyclic_span(&mats, h, d);
        if sub.dim() < d {
            return Ok(Simplicity::NotSimple { witness: sub.rows().iter().map(|v| m.coord_vector(v)).collect() });
        }
    }
    if hw.len() == 1 {
        return Ok(Simplicity::Simple(Certificate::HighestWeight));
    }
    let transposed: Vec<Matrix> = all.iter().map(|x| x.transpose()).collect();
    let tref: Vec<&Matrix> = transposed.iter().collect();
    let dual_witness = |sub: &Echelon<usize>| -> Simplicity {
        let rows: Vec<Vec<QRat>> = sub.rows().iter().map(|r| to_dense(r, d)).collect();
        let witness = Matrix::from_rows(rows).kernel().iter().map(|v| m.vector(v)).collect();
        Simplicity::NotSimple { witness }
    };
    if let Some((i, weight)) = weight_line(m) {
        let e = Coords::single(i, QRat::one());
        let sub = cyclic_span(&all, &e, d);
        if sub.dim() < d {
            return Ok(Simplicity::NotSimple { witness: sub.rows().iter().map(|v| m.coord_vector(v)).collect() });
        }
        let dual = cyclic_span(&tref, &e, d);
        if dual.dim() < d {
            return Ok(dual_witness(&dual));
        }
        return Ok(Simplicity::Simple(Certificate::WeightLine { weight }));
    }
    for i in 0..d {
        let sub = cyclic_span(&tref, &Coords::single(i, QRat::one()), d);
        if sub.dim() < d {
            return Ok(dual_witness(&sub));
        }
    }
    Ok(Simplicity::Inconclusive { reached })
}

/// A basis vector alone in its weight space, for the weights visible on the module's sides.
fn weight_line(m: &FDBimodule) -> Option<(usize, Weight)> {
    let weights = m.weights();
    let key = |w: Weight| match m.side {
        ActionSide::Bi => w,
        ActionSide::Left => Weight { left: w.left, right: 0 },
        ActionSide::Right => Weight { left: 0, right: w.right },
    };
    let mut counts: BTreeMap<Weight, usize> = BTreeMap::new();
    for w in &weights {
        *counts.entry(key((*w)?)).or_default() += 1;
    }
    weights.iter().enumerate().map(|(i, w)| (i, key(w.expect("homogeneous")))).find(|(_, w)| counts[w] == 1)
}

/// Left summands generated by highest-weight vectors, each with a basis built by a fixed word sequence.
pub fn decompose_left(m: &FDBimodule) -> Result<Vec<FDBimodule>, BimodError> {
    let d = m.dim();
    let left: BTreeMap<Letter, &Matrix> = m.left.iter().map(|(g, x)| (*g, x)).collect();
    if left.is_empty() {
        return Err(BimodError::MissingSide("left"));
    }
    let moving: Vec<Letter> = Letter::ALL.into_iter().filter(|g| !matches!(g, Letter::K | Letter::Kinv)).collect();
    let mut found: Echelon<usize> = Echelon::new();
    let mut summands = Vec::new();
    for (_, h) in hw_left_coords(m)? {
        if found.contains(&h) {
            continue;
        }
        let mut span = TrackedSpan::new();
        let mut gens = vec![h.clone()];
        span.insert(&h);
        let mut i = 0;
        while i < gens.len() {
            for g in &moving {
                let img = apply(left[g], &gens[i]);
                if span.insert(&img).is_some() {
                    gens.push(img);
                }
            }
            i += 1;
        }
        let n = gens.len();
        let before = found.dim();
        for v in &gens {
            found.insert(v);
        }
        if found.dim() != before + n {
            return Err(BimodError::DecompositionIncomplete(format!("summand of dimension {n} meets the previous ones")));
        }
        let mut mats = BTreeMap::new();
        for g in Letter::ALL {
            let cols: Vec<Vec<QRat>> =
                gens.iter().map(|v| span.coords(&apply(left[&g], v)).expect("closed under the action")).collect();
            mats.insert(g, Matrix::from_columns(n, &cols));
        }
        let summand = FDBimodule {
            basis: gens.iter().map(|v| m.coord_vector(v)).collect(),
            left: mats,
            right: BTreeMap::new(),
            side: ActionSide::Left,
        };
        if !is_simple(&summand, DEFAULT_WORD_CAP)?.is_simple() {
            return Err(BimodError::DecompositionIncomplete(format!("summand of dimension {n} is not certified simple")));
        }
        summands.push(summand);
    }
    if found.dim() != d {
        return Err(BimodError::DecompositionIncomplete(format!("summands reach {} of {d}", found.dim())));
    }
    Ok(summands)
}

/// `Δ = EF + (q^-1 K + q K^-1)/(q - q^-1)^2`.
pub fn casimir() -> NCPoly {
    crate::vectors::v("Delta")
}

#[derive(Clone, Debug, PartialEq)]
pub struct CasimirSpectrum {
    pub dim: usize,
    /// Eigenvalue, multiplicity and the highest weight that produced it.
    pub eigenvalues: Vec<(QRat, usize, i64)>,
}

impl CasimirSpectrum {
    pub fn is_complete(&self) -> bool {
        self.eigenvalues.iter().map(|e| e.1).sum::<usize>() == self.dim
    }
}

/// Predicted eigenvalue `(q^{λ+1} + q^{-λ-1})/(q - q^-1)^2`.
pub fn casimir_eigenvalue(lambda: i64) -> QRat {
    let s = q_minus_qinv();
    &(&QRat::q_pow(lambda + 1) + &QRat::q_pow(-lambda - 1)) / &(&s * &s)
}

pub fn casimir_spectrum(m: &FDBimodule, side: ActionSide) -> Result<CasimirSpectrum, BimodError> {
    let (mats, hw) = match side {
        ActionSide::Left => (&m.left, hw_left_coords(m)?),
        ActionSide::Right => (&m.right, hw_right_coords(m)?),
        ActionSide::Bi => return Err(BimodError::MissingSide("single")),
    };
    let s = q_minus_qinv();
    let c = (&s * &s).inv().unwrap();
    let ef = match side {
        ActionSide::Left => &mats[&Letter::E] * &mats[&Letter::F],
        _ => &mats[&Letter::F] * &mats[&Letter::E],
    };
    let k = &mats[&Letter::K].scale(&(&QRat::q_pow(-1) * &c)) + &mats[&Letter::Kinv].scale(&(&QRat::q() * &c));
    let delta = &ef + &k;
    let key = |w: Weight| match side {
        ActionSide::Left => (w.left, 0),
        _ => (w.right, 0),
    };
    let blocks = weight_blocks(m, key);
    let mut eigenvalues: Vec<(QRat, usize, i64)> = Vec::new();
    for (wt, h) in hw {
        let img = apply(&delta, &h);
        let (&i, hi) = h.terms().next().expect("nonzero");
        let lambda = &img.coeff(&i) / hi;
        if img != h.scale(&lambda) || eigenvalues.iter().any(|e| e.0 == lambda) {
            continue;
        }
        let mut nullity = 0;
        for (_, cols) in &blocks {
            let rows: Vec<Vec<QRat>> = cols
                .iter()
                .map(|&i| {
                    cols.iter().map(|&j| if i == j { &delta[(i, j)] - &lambda } else { delta[(i, j)].clone() }).collect()
                })
                .collect();
            let sub = Matrix::from_rows(rows);
            nullity += cols.len() - sub.rank();
        }
        eigenvalues.push((lambda, nullity, wt));
    }
    Ok(CasimirSpectrum { dim: m.dim(), eigenvalues })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vectors::v;

    #[test]
    fn weights_of_named_vectors() {
        assert_eq!(weight_of(&v("v1")).unwrap(), Some(Weight { left: 2, right: 2 }));
        assert_eq!(weight_of(&v("v4")).unwrap(), Some(Weight { left: 0, right: 0 }));
        assert_eq!(weight_of(&NCPoly::letter(Letter::C)).unwrap(), Some(Weight { left: 1, right: 1 }));
        assert!(matches!(weight_of(&NCPoly::zero()), Err(BimodError::ZeroVector)));
        let mixed = &NCPoly::letter(Letter::A) + &NCPoly::letter(Letter::B);
        assert_eq!(weight_of(&mixed).unwrap(), None);
    }

    #[test]
    fn hw_examples() {
        assert!(is_hw_bivector(&v("v3")).unwrap());
        assert!(!is_hw_bivector(&NCPoly::letter(Letter::F)).unwrap());
        let p = hc().mul(&v("v1"), &v("v3")).unwrap();
        assert!(is_hw_bivector(&p).unwrap());
    }

    #[test]
    fn trivial_closure() {
        let m = closure(&[NCPoly::one()], ActionSide::Bi, DEFAULT_CAP).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(hw_vectors_left(&m).unwrap(), vec![NCPoly::one()]);
        let parts = decompose_left(&m).unwrap();
        assert_eq!(parts.len(), 1);
        let spec = casimir_spectrum(&m, ActionSide::Left).unwrap();
        assert_eq!(spec.eigenvalues, vec![(casimir_eigenvalue(0), 1, 0)]);
    }

    #[test]
    fn two_trivial_lines_are_not_simple() {
        let mut mats = BTreeMap::new();
        for g in Letter::ALL {
            let e = crate::hopf::letter_counit(g);
            mats.insert(g, Matrix::identity(2).scale(&e));
        }
        let m = FDBimodule {
            basis: vec![NCPoly::one(), NCPoly::letter(Letter::E)],
            left: mats,
            right: BTreeMap::new(),
            side: ActionSide::Left,
        };
        assert!(matches!(is_simple(&m, 8).unwrap(), Simplicity::NotSimple { witness } if witness.len() == 1));
    }

    #[test]
    fn cap_is_enforced() {
        let err = closure(&[NCPoly::letter(Letter::F)], ActionSide::Left, 3).unwrap_err();
        assert!(matches!(err, BimodError::LocalFinitenessExceeded { cap: 3 }));
    }
}
