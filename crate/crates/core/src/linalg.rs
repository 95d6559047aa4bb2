//! Exact and modular linear algebra.

use std::collections::BTreeMap;
use std::fmt;

use crate::ncpoly::LinComb;
use crate::scalars::{add_mod, inv_mod, mul_mod, QRat};

/// Dense matrix over ℚ(q).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<QRat>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = QRat;
    fn index(&self, (i, j): (usize, usize)) -> &QRat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut QRat {
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![QRat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = QRat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<QRat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix whose column `k` is the `k`-th vector.
    pub fn from_columns(n_rows: usize, cols: &[Vec<QRat>]) -> Self {
        let mut m = Self::zeros(n_rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[QRat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<QRat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(QRat::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn scale(&self, c: &QRat) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn mul_vec(&self, v: &[QRat]) -> Vec<QRat> {
        (0..self.rows)
            .map(|i| {
                let mut acc = QRat::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Basis of the null space.
    pub fn kernel(&self) -> Vec<Vec<QRat>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![QRat::zero(); self.cols];
                v[f] = QRat::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else { continue };
            for j in 0..m.cols {
                m.data.swap(row * m.cols + j, p * m.cols + j);
            }
            let inv = m[(row, col)].inv().unwrap();
            for j in col..m.cols {
                m[(row, j)] = &m[(row, j)] * &inv;
            }
            for i in 0..m.rows {
                if i == row || m[(i, col)].is_zero() {
                    continue;
                }
                let f = m[(i, col)].clone();
                for j in col..m.cols {
                    if !m[(row, j)].is_zero() {
                        m[(i, j)] = &m[(i, j)] - &(&f * &m[(row, j)]);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn to_mod(&self, q0: u64, p: u64) -> Option<Vec<u64>> {
        self.data.iter().map(|x| x.eval_mod(q0, p)).collect()
    }
}

impl std::ops::Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut m = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        m[(i, j)] = &m[(i, j)] + &(a * b);
                    }
                }
            }
        }
        m
    }
}

impl std::ops::Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl std::ops::Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self + &rhs.scale(&QRat::from_int(-1))
    }
}

/// Reduced echelon basis of a space of sparse vectors; pivot = largest key.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<LinComb<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), pivots: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[LinComb<K>] {
        &self.rows
    }

    /// Coefficients of `v` on the stored rows, and the residual.
    pub fn decompose(&self, v: &LinComb<K>) -> (Vec<(usize, QRat)>, LinComb<K>) {
        let coeffs: Vec<(usize, QRat)> =
            v.terms().filter_map(|(k, c)| self.pivots.get(k).map(|&i| (i, c.clone()))).collect();
        let mut r = v.clone();
        for (i, c) in &coeffs {
            r.add_scaled(&self.rows[*i], &-c);
        }
        (coeffs, r)
    }

    pub fn residual(&self, v: &LinComb<K>) -> LinComb<K> {
        self.decompose(v).1
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.residual(v).is_zero()
    }

    /// Adds `v` if independent; returns the new row's index.
    pub fn insert(&mut self, v: &LinComb<K>) -> Option<usize> {
        let r = self.residual(v);
        let (pk, lc) = r.leading().map(|(k, c)| (k.clone(), c.clone()))?;
        let r = r.scale(&lc.inv().unwrap());
        for row in self.rows.iter_mut() {
            let c = row.coeff(&pk);
            if !c.is_zero() {
                row.add_scaled(&r, &-&c);
            }
        }
        self.rows.push(r);
        self.pivots.insert(pk, self.rows.len() - 1);
        Some(self.rows.len() - 1)
    }

    /// Rows sorted by pivot, largest first.
    pub fn sorted_rows(&self) -> Vec<LinComb<K>> {
        self.pivots.values().rev().map(|&i| self.rows[i].clone()).collect()
    }
}

/// Basis of a space together with coordinates relative to chosen generators.
///
/// Unlike [`Echelon`], coordinates refer to the vectors as inserted.
#[derive(Clone, Debug, Default)]
pub struct TrackedSpan<K: Ord + Clone> {
    ech: Echelon<K>,
    // row i of the echelon = Σ track[i][j] · inserted[j]
    track: Vec<BTreeMap<usize, QRat>>,
    count: usize,
}

impl<K: Ord + Clone> TrackedSpan<K> {
    pub fn new() -> Self {
        TrackedSpan { ech: Echelon::new(), track: Vec::new(), count: 0 }
    }

    pub fn dim(&self) -> usize {
        self.count
    }

    /// Inserts `v` when independent and returns its generator index.
    pub fn insert(&mut self, v: &LinComb<K>) -> Option<usize> {
        let (coeffs, r) = self.ech.decompose(v);
        let (pk, lc) = r.leading().map(|(k, c)| (k.clone(), c.clone()))?;
        let inv = lc.inv().unwrap();
        // r = v - Σ c_i row_i
        let mut t: BTreeMap<usize, QRat> = BTreeMap::new();
        t.insert(self.count, QRat::one());
        for (i, c) in &coeffs {
            for (j, x) in &self.track[*i] {
                let e = t.entry(*j).or_insert_with(QRat::zero);
                *e = &*e - &(c * x);
            }
        }
        let t: BTreeMap<usize, QRat> = t.into_iter().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, &x * &inv)).collect();
        let r = r.scale(&inv);
        for (i, row) in self.ech.rows.iter_mut().enumerate() {
            let c = row.coeff(&pk);
            if !c.is_zero() {
                row.add_scaled(&r, &-&c);
                for (j, x) in &t {
                    let e = self.track[i].entry(*j).or_insert_with(QRat::zero);
                    *e = &*e - &(&c * x);
                }
                self.track[i].retain(|_, x| !x.is_zero());
            }
        }
        self.ech.rows.push(r);
        self.ech.pivots.insert(pk, self.ech.rows.len() - 1);
        self.track.push(t);
        self.count += 1;
        Some(self.count - 1)
    }

    /// Coordinates of `v` on the inserted generators, if `v` lies in the span.
    pub fn coords(&self, v: &LinComb<K>) -> Option<Vec<QRat>> {
        let (coeffs, r) = self.ech.decompose(v);
        if !r.is_zero() {
            return None;
        }
        let mut out = vec![QRat::zero(); self.count];
        for (i, c) in coeffs {
            for (j, x) in &self.track[i] {
                out[*j] = &out[*j] + &(&c * x);
            }
        }
        Some(out)
    }
}

/// Incremental row echelon over `F_p`.
#[derive(Clone, Debug)]
pub struct ModEchelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModEchelon {
    pub fn new(p: u64) -> Self {
        ModEchelon { p, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, v: &[u64]) -> bool {
        let p = self.p;
        let mut v = v.to_vec();
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                let f = p - c;
                for (x, r) in v.iter_mut().zip(row) {
                    if *r != 0 {
                        *x = add_mod(*x, mul_mod(f, *r, p), p);
                    }
                }
            }
        }
        let Some(piv) = v.iter().position(|&x| x != 0) else { return false };
        let inv = inv_mod(v[piv], p).unwrap();
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        self.rows.push((piv, v));
        true
    }
}

pub const MOD_P: u64 = (1 << 61) - 1;

pub fn mat_mul_mod(a: &[u64], b: &[u64], n: usize, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let y = b[k * n + j];
                if y != 0 {
                    out[i * n + j] = add_mod(out[i * n + j], mul_mod(x, y, p), p);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one() {
        let q = QRat::q();
        let m = Matrix::from_rows(vec![vec![QRat::one(), q.clone()], vec![q.clone(), &q * &q]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(QRat::is_zero));
    }

    #[test]
    fn tracked_coordinates() {
        let mut s: TrackedSpan<usize> = TrackedSpan::new();
        let a = LinComb::from_terms([(0, QRat::one()), (1, QRat::q())]);
        let b = LinComb::from_terms([(1, QRat::one())]);
        s.insert(&a);
        s.insert(&b);
        let v = &a.scale(&QRat::from_int(3)) + &b.scale(&QRat::q());
        assert_eq!(s.coords(&v).unwrap(), vec![QRat::from_int(3), QRat::q()]);
        assert!(s.insert(&v).is_none());
    }
}
