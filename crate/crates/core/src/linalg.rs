//! Dense exact linear algebra: matrices, ranks, row spaces.
//!
//! Rank computations offer a modular fast path: the rank over `F_p` is a
//! lower bound for the rank over the field, so hitting the sought rank mod p
//! certifies it exactly; only deficient cases fall back to field arithmetic.

use crate::scalar::{mulmod, Scalar, RANK_PRIME, RANK_SQRT2};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq)]
pub struct Mat<F> {
    pub nrows: usize,
    pub ncols: usize,
    pub data: Vec<F>,
}

impl<F: Scalar> Mat<F> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Mat { nrows, ncols, data: vec![F::zero(); nrows * ncols] }
    }
    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }
    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(nrows * ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                data.push(f(i, j));
            }
        }
        Mat { nrows, ncols, data }
    }
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols);
            data.extend(r);
        }
        Mat { nrows, ncols, data }
    }
    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.ncols, self.nrows, |i, j| self[(j, i)].clone())
    }
    pub fn scale(&self, c: &F) -> Self {
        let mut m = self.clone();
        for x in &mut m.data {
            *x = x.clone() * c.clone();
        }
        m
    }
    pub fn flatten(&self) -> Vec<F> {
        self.data.clone()
    }
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ncols);
        (0..self.nrows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.ncols {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc + a.clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }
    pub fn bracket(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
        a.clone() * b.clone() - b.clone() * a.clone()
    }
    /// exp of a nilpotent matrix, exact and finite.
    pub fn exp_nilpotent(&self) -> Mat<F> {
        assert_eq!(self.nrows, self.ncols);
        let mut acc = Mat::identity(self.nrows);
        let mut pow = Mat::identity(self.nrows);
        let mut k = 1i64;
        loop {
            pow = pow * self.clone();
            if pow.is_zero() {
                break;
            }
            assert!(k <= self.nrows as i64, "matrix is not nilpotent");
            let inv_fact = {
                let mut f = F::one();
                for j in 1..=k {
                    f = f * F::from_i64(j);
                }
                f.inv()
            };
            acc = acc + pow.scale(&inv_fact);
            k += 1;
        }
        acc
    }
    /// Gauss-Jordan inverse, `None` when singular.
    pub fn inverse(&self) -> Option<Mat<F>> {
        assert_eq!(self.nrows, self.ncols);
        let n = self.nrows;
        let mut a = self.clone();
        let mut inv: Mat<F> = Mat::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            for j in 0..n {
                a.data.swap(col * n + j, piv * n + j);
                inv.data.swap(col * n + j, piv * n + j);
            }
            let pinv = a[(col, col)].inv();
            for j in 0..n {
                a[(col, j)] = a[(col, j)].clone() * pinv.clone();
                inv[(col, j)] = inv[(col, j)].clone() * pinv.clone();
            }
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let c = a[(r, col)].clone();
                    for j in 0..n {
                        let x = a[(col, j)].clone() * c.clone();
                        a[(r, j)] = a[(r, j)].clone() - x;
                        let y = inv[(col, j)].clone() * c.clone();
                        inv[(r, j)] = inv[(r, j)].clone() - y;
                    }
                }
            }
        }
        Some(inv)
    }
}

impl<F: Scalar> std::ops::Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.ncols + j]
    }
}
impl<F: Scalar> std::ops::IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.ncols + j]
    }
}
impl<F: Scalar> Add for Mat<F> {
    type Output = Mat<F>;
    fn add(mut self, o: Mat<F>) -> Mat<F> {
        assert_eq!((self.nrows, self.ncols), (o.nrows, o.ncols));
        for (x, y) in self.data.iter_mut().zip(o.data) {
            *x = x.clone() + y;
        }
        self
    }
}
impl<F: Scalar> Sub for Mat<F> {
    type Output = Mat<F>;
    fn sub(mut self, o: Mat<F>) -> Mat<F> {
        assert_eq!((self.nrows, self.ncols), (o.nrows, o.ncols));
        for (x, y) in self.data.iter_mut().zip(o.data) {
            *x = x.clone() - y;
        }
        self
    }
}
impl<F: Scalar> Neg for Mat<F> {
    type Output = Mat<F>;
    fn neg(mut self) -> Mat<F> {
        for x in &mut self.data {
            *x = -x.clone();
        }
        self
    }
}
impl<F: Scalar> Mul for Mat<F> {
    type Output = Mat<F>;
    fn mul(self, o: Mat<F>) -> Mat<F> {
        assert_eq!(self.ncols, o.nrows);
        let mut out: Mat<F> = Mat::zero(self.nrows, o.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.ncols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

impl<F: Scalar> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Incremental reduced row echelon basis for span queries.
#[derive(Clone, Debug)]
pub struct RowSpace<F> {
    pub ncols: usize,
    /// echelon rows, pivot entry normalized to one
    pub rows: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
}

impl<F: Scalar> RowSpace<F> {
    pub fn new(ncols: usize) -> Self {
        RowSpace { ncols, rows: Vec::new(), pivots: Vec::new() }
    }
    pub fn from_vectors<I: IntoIterator<Item = Vec<F>>>(ncols: usize, it: I) -> Self {
        let mut rs = RowSpace::new(ncols);
        for v in it {
            rs.insert(v);
        }
        rs
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    /// Residual of `v` after eliminating all pivot coordinates.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for j in 0..self.ncols {
                    if !row[j].is_zero() {
                        let x = row[j].clone() * c.clone();
                        v[j] = v[j].clone() - x;
                    }
                }
            }
        }
        v
    }
    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }
    /// Insert a vector; returns `true` if the dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let c = v[p].inv();
        for x in &mut v {
            if !x.is_zero() {
                *x = x.clone() * c.clone();
            }
        }
        // keep earlier rows reduced against the new pivot
        for row in &mut self.rows {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for j in 0..self.ncols {
                    if !v[j].is_zero() {
                        let x = v[j].clone() * c.clone();
                        row[j] = row[j].clone() - x;
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
    /// Column indices that carry no pivot; unit vectors there form a basis of
    /// the quotient by this span (within the coordinate space).
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|j| !self.pivots.contains(j)).collect()
    }
}

/// Exact rank by Gaussian elimination over the field.
pub fn rank_exact<F: Scalar>(rows: &[Vec<F>]) -> usize {
    let mut rs = RowSpace::new(rows.first().map_or(0, |r| r.len()));
    for v in rows {
        rs.insert(v.clone());
    }
    rs.dim()
}

/// Rank of the reduction mod [`RANK_PRIME`]; a lower bound for the exact
/// rank. Returns `None` if some entry fails to reduce.
pub fn rank_modp<F: Scalar>(rows: &[Vec<F>]) -> Option<usize> {
    let p = RANK_PRIME;
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut reduced: Vec<Vec<u64>> = Vec::with_capacity(rows.len());
    for r in rows {
        let mut out = Vec::with_capacity(ncols);
        for x in r {
            out.push(x.mod_p(p, RANK_SQRT2)?);
        }
        reduced.push(out);
    }
    let mut rank = 0usize;
    let mut work = reduced;
    let nrows = work.len();
    let mut col = 0usize;
    while rank < nrows && col < ncols {
        if let Some(pr) = (rank..nrows).find(|&r| work[r][col] != 0) {
            work.swap(rank, pr);
            let inv = crate::scalar::invmod(work[rank][col], p).unwrap();
            for j in col..ncols {
                work[rank][j] = mulmod(work[rank][j], inv, p);
            }
            for r in 0..nrows {
                if r != rank && work[r][col] != 0 {
                    let c = work[r][col];
                    for j in col..ncols {
                        let t = mulmod(c, work[rank][j], p);
                        work[r][j] = (work[r][j] + p - t) % p;
                    }
                }
            }
            rank += 1;
        }
        col += 1;
    }
    Some(rank)
}

/// Rank with the modular shortcut: if the modular rank already reaches the
/// maximum possible it is the exact rank; otherwise fall back to exact
/// elimination.
pub fn rank<F: Scalar>(rows: &[Vec<F>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let cap = rows.len().min(ncols);
    if let Some(r) = rank_modp(rows) {
        if r == cap {
            return r;
        }
    }
    rank_exact(rows)
}

/// Whether the rank is at least `target`, with the modular shortcut.
pub fn rank_at_least<F: Scalar>(rows: &[Vec<F>], target: usize) -> bool {
    if let Some(r) = rank_modp(rows) {
        if r >= target {
            return true;
        }
    }
    rank_exact(rows) >= target
}

/// Coordinates of `v` in the given independent `basis`, if it lies in the span.
pub fn coords_in_basis<F: Scalar>(basis: &[Vec<F>], v: &[F]) -> Option<Vec<F>> {
    let ncols = v.len();
    let k = basis.len();
    // augmented echelon: [basis | I], reduce v alongside
    let mut rs: Vec<Vec<F>> = Vec::new();
    let mut piv: Vec<usize> = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        let mut row: Vec<F> = b.clone();
        row.extend((0..k).map(|j| if j == i { F::one() } else { F::zero() }));
        for (r, &p) in rs.iter().zip(&piv) {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(r.iter()) {
                    if !y.is_zero() {
                        *x = x.clone() - y.clone() * c.clone();
                    }
                }
            }
        }
        let p = row[..ncols].iter().position(|x| !x.is_zero())?;
        let c = row[p].inv();
        for x in &mut row {
            if !x.is_zero() {
                *x = x.clone() * c.clone();
            }
        }
        rs.push(row);
        piv.push(p);
    }
    let mut w: Vec<F> = v.to_vec();
    w.extend(vec![F::zero(); k]);
    for (r, &p) in rs.iter().zip(&piv) {
        if !w[p].is_zero() {
            let c = w[p].clone();
            for (x, y) in w.iter_mut().zip(r.iter()) {
                if !y.is_zero() {
                    *x = x.clone() - y.clone() * c.clone();
                }
            }
        }
    }
    if w[..ncols].iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(w[ncols..].iter().map(|x| -x.clone()).collect())
}
