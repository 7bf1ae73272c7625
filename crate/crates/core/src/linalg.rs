//! Dense exact linear algebra over a [`FieldCtx`]: matrices, reduced row
//! echelon form, kernels and canonical subspaces.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::ONE);
        }
        m
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Build from small integers reduced into the prime field.
    pub fn from_ints(f: &FieldCtx, rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect())
    }

    pub fn from_columns(rows: usize, cols: Vec<Vec<Scalar>>) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.into_iter().enumerate() {
                m.set(i, j, x);
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Scalar] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, f: &FieldCtx, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, f: &FieldCtx, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, f: &FieldCtx, c: Scalar) -> Matrix {
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// self += c * other
    pub fn add_scaled(&mut self, f: &FieldCtx, c: Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        axpy(f, &mut self.data, c, &other.data);
    }

    pub fn mul(&self, f: &FieldCtx, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                axpy(f, out_row, a, other.row(k));
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &FieldCtx, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(f, self.row(i), v)).collect()
    }

    pub fn pow(&self, f: &FieldCtx, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut r = Matrix::identity(self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(f, &b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(f, &b);
            }
        }
        r
    }

    /// Kronecker product; row index of the result is (i * other.rows + k).
    pub fn kron(&self, f: &FieldCtx, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self, f: &FieldCtx) -> usize {
        rref(f, self).1
    }

    /// Stack the rows of `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }
}

#[inline]
pub fn axpy(f: &FieldCtx, dst: &mut [Scalar], c: Scalar, src: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = f.add(*d, f.mul(c, s));
        }
    }
}

pub fn dot(f: &FieldCtx, a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

pub fn vec_add(f: &FieldCtx, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn vec_sub(f: &FieldCtx, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}

pub fn vec_scale(f: &FieldCtx, c: Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|&x| f.mul(c, x)).collect()
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Canonical reduced row echelon form. Returns the reduced matrix (same shape,
/// zero rows at the bottom), its rank and the pivot columns.
pub fn rref(f: &FieldCtx, m: &Matrix) -> (Matrix, usize, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(pr) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..a.cols {
                a.data.swap(pr * a.cols + j, r * a.cols + j);
            }
        }
        let inv = f.inv(a.get(r, c)).expect("nonzero pivot");
        for x in a.row_mut(r) {
            *x = f.mul(*x, inv);
        }
        let pivot_row = a.row(r).to_vec();
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c);
            if !factor.is_zero() {
                axpy(f, a.row_mut(i), f.neg(factor), &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, r, pivots)
}

/// Right null space {x : M x = 0}.
pub fn kernel(f: &FieldCtx, m: &Matrix) -> Subspace {
    let (red, rank, pivots) = rref(f, m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::with_capacity(n - rank);
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::ZERO; n];
        v[free] = Scalar::ONE;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(red.get(row, free));
        }
        basis.push(v);
    }
    Subspace::from_rows(f, n, basis)
}

/// Kernel of M - alpha I.
pub fn eigenspace(f: &FieldCtx, m: &Matrix, alpha: Scalar) -> Subspace {
    assert!(m.is_square());
    let shifted = m.sub(f, &Matrix::scalar(m.rows, alpha));
    kernel(f, &shifted)
}

/// One solution of M x = b, if any.
pub fn solve(f: &FieldCtx, m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(b.len(), m.rows);
    let mut aug = Matrix::zeros(m.rows, m.cols + 1);
    for (i, &bi) in b.iter().enumerate() {
        aug.row_mut(i)[..m.cols].copy_from_slice(m.row(i));
        aug.set(i, m.cols, bi);
    }
    let (red, _, pivots) = rref(f, &aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![Scalar::ZERO; m.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = red.get(row, m.cols);
    }
    Some(x)
}

/// A subspace of k^n stored as its canonical RREF basis: rows sorted by
/// pivot, each pivot entry 1 and every other entry of a pivot column 0.
/// Equal subspaces therefore compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![Scalar::ZERO; ambient];
                v[i] = Scalar::ONE;
                v
            })
            .collect();
        Subspace { ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn from_rows<I>(f: &FieldCtx, ambient: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut s = Subspace::zero(ambient);
        for r in rows {
            s.insert(f, r);
        }
        s
    }

    pub fn from_matrix_rows(f: &FieldCtx, m: &Matrix) -> Self {
        let (red, rank, pivots) = rref(f, m);
        Subspace { ambient: m.cols, rows: (0..rank).map(|i| red.row(i).to_vec()).collect(), pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        if self.rows.is_empty() {
            return Matrix::zeros(0, self.ambient);
        }
        Matrix::from_rows(self.rows.clone())
    }

    /// Residue of `v` after eliminating all pivot coordinates.
    pub fn reduce(&self, f: &FieldCtx, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = w[pc];
            if !c.is_zero() {
                axpy(f, &mut w, f.neg(c), row);
            }
        }
        w
    }

    pub fn contains(&self, f: &FieldCtx, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        is_zero_vec(&self.reduce(f, v))
    }

    /// Coordinates of `v` in the canonical basis, assuming `v` lies in the space.
    pub fn coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    /// Coordinates of `v`, or `None` when `v` is outside the space.
    pub fn try_coords(&self, f: &FieldCtx, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.contains(f, v).then(|| self.coords(v))
    }

    pub fn combination(&self, f: &FieldCtx, coeffs: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; self.ambient];
        for (c, row) in coeffs.iter().zip(&self.rows) {
            axpy(f, &mut out, *c, row);
        }
        out
    }

    /// Add a vector; returns true when the dimension grew.
    pub fn insert(&mut self, f: &FieldCtx, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut w = self.reduce(f, &v);
        let Some(pc) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(w[pc]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if !c.is_zero() {
                axpy(f, row, f.neg(c), &w);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(pos, pc);
        self.rows.insert(pos, w);
        true
    }

    pub fn sum(&self, f: &FieldCtx, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(f, r.clone());
        }
        s
    }

    pub fn is_subspace_of(&self, f: &FieldCtx, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(f, r))
    }

    pub fn intersect(&self, f: &FieldCtx, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let (r, s) = (self.dim(), other.dim());
        if r == 0 || s == 0 {
            return Subspace::zero(self.ambient);
        }
        // columns: u_1..u_r, -v_1..-v_s ; kernel vectors (a, b) give sum a_i u_i
        let mut cols = Vec::with_capacity(r + s);
        cols.extend(self.rows.iter().cloned());
        cols.extend(other.rows.iter().map(|v| v.iter().map(|&x| f.neg(x)).collect()));
        let m = Matrix::from_columns(self.ambient, cols);
        let ker = kernel(f, &m);
        Subspace::from_rows(f, self.ambient, ker.rows.iter().map(|k| self.combination(f, &k[..r])))
    }

    /// Apply a linear map given as a function on vectors to every basis vector.
    pub fn image<F>(&self, f: &FieldCtx, ambient: usize, map: F) -> Subspace
    where
        F: Fn(&[Scalar]) -> Vec<Scalar>,
    {
        Subspace::from_rows(f, ambient, self.rows.iter().map(|r| map(r)))
    }
}

/// dim U - dim V for V contained in U.
pub fn quotient_dim(f: &FieldCtx, u: &Subspace, v: &Subspace) -> Result<usize> {
    if !v.is_subspace_of(f, u) {
        return Err(Error::NotContained);
    }
    Ok(u.dim() - v.dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> FieldCtx {
        FieldCtx::new(3, 2).unwrap()
    }

    #[test]
    fn rref_of_rank_one_matrix() {
        let f = gf3();
        let m = Matrix::from_ints(&f, &[&[1, 2], &[2, 1]]);
        let (r, rank, piv) = rref(&f, &m);
        assert_eq!(r, Matrix::from_ints(&f, &[&[1, 2], &[0, 0]]));
        assert_eq!(rank, 1);
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn rref_identity_and_zero() {
        let f = gf3();
        let id = Matrix::identity(4);
        assert_eq!(rref(&f, &id), (id.clone(), 4, vec![0, 1, 2, 3]));
        let z = Matrix::zeros(3, 3);
        assert_eq!(rref(&f, &z).1, 0);
        assert!(rref(&f, &z).0.is_zero());
    }

    #[test]
    fn kernels() {
        let f = gf3();
        let m = Matrix::from_ints(&f, &[&[1, 2], &[0, 0]]);
        let k = kernel(&f, &m);
        assert_eq!(k.basis(), &[vec![Scalar(1), Scalar(1)]]);
        assert_eq!(kernel(&f, &Matrix::identity(3)).dim(), 0);
        assert_eq!(kernel(&f, &Matrix::zeros(3, 3)), Subspace::full(3));
    }

    #[test]
    fn eigenspaces() {
        let f = gf3();
        let xi = f.xi();
        let jordan = Matrix::from_rows(vec![vec![xi, Scalar::ONE], vec![Scalar::ZERO, xi]]);
        let e = eigenspace(&f, &jordan, xi);
        assert_eq!(e.basis(), &[vec![Scalar::ONE, Scalar::ZERO]]);
        assert_eq!(eigenspace(&f, &Matrix::scalar(2, xi), xi).dim(), 2);
        let d = Matrix::from_rows(vec![vec![xi, Scalar::ZERO], vec![Scalar::ZERO, Scalar::ONE]]);
        assert_eq!(eigenspace(&f, &d, xi).dim(), 1);
    }

    #[test]
    fn quotient_dimensions() {
        let f = gf3();
        let u = Subspace::full(2);
        let v = Subspace::from_rows(&f, 2, vec![vec![Scalar(1), Scalar(1)]]);
        assert_eq!(quotient_dim(&f, &u, &v), Ok(1));
        assert_eq!(quotient_dim(&f, &u, &u), Ok(0));
        assert_eq!(quotient_dim(&f, &v, &u), Err(Error::NotContained));
    }

    #[test]
    fn intersection() {
        let f = gf3();
        let u = Subspace::from_rows(&f, 3, vec![f_row(&f, &[1, 0, 0]), f_row(&f, &[0, 1, 0])]);
        let v = Subspace::from_rows(&f, 3, vec![f_row(&f, &[0, 1, 1]), f_row(&f, &[1, 1, 0])]);
        let w = u.intersect(&f, &v);
        assert_eq!(w.dim(), 1);
        assert!(w.contains(&f, &f_row(&f, &[1, 1, 0])));
    }

    fn f_row(f: &FieldCtx, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| f.from_int(x)).collect()
    }
}
