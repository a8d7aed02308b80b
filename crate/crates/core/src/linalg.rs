//! Dense exact linear algebra over prime fields `F_p`.
//!
//! Every Hom, Ext and kernel computation in the crate bottoms out here. Vectors
//! are plain `Vec<u32>` with entries in `[0, p)`; matrices are row-major.

use std::fmt;

use crate::error::{Error, Result};

/// Primality check by trial division. Moduli in this crate are small.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[inline]
pub fn add(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + b as u64) % p as u64) as u32
}

#[inline]
pub fn sub(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + p as u64 - b as u64) % p as u64) as u32
}

#[inline]
pub fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub fn neg(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn pow(mut base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of a nonzero residue.
pub fn inv(a: u32, p: u32) -> u32 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    pow(a, p as u64 - 2, p)
}

/// Reduces an arbitrary signed integer into `[0, p)`.
pub fn reduce(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

/// A dense matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<F_{}>{}x{} [", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Matrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1 % p);
        }
        m
    }

    /// Builds a matrix from row-major data, reducing every entry mod `p`.
    pub fn from_vec(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        let data = data.into_iter().map(|x| x % p).collect();
        Matrix { p, rows, cols, data }
    }

    /// Builds a matrix from signed integer rows, reducing mod `p`.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| reduce(x, p)));
        }
        Matrix { p, rows: rows.len(), cols, data }
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_row_vectors(p: u32, cols: usize, vectors: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            assert_eq!(v.len(), cols, "vector has wrong length");
            data.extend(v.iter().map(|&x| x % p));
        }
        Matrix { p, rows: vectors.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(p: u32, rows: usize, columns: &[Vec<u32>]) -> Self {
        Self::from_row_vectors(p, rows, columns).transpose()
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.p, other.p, "matrices over different fields");
        assert_eq!(self.cols, other.rows, "incompatible shapes for product");
        let p = self.p as u64;
        let mut out = vec![0u64; self.rows * other.cols];
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out[r * other.cols..(r + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d = (*d + a * b as u64) % p;
                }
            }
        }
        Matrix { p: self.p, rows: self.rows, cols: other.cols, data: out.into_iter().map(|x| x as u32).collect() }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "incompatible shapes for matrix-vector product");
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let s = self.row(r).iter().zip(v).fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p);
                s as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sum");
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| add(a, b, p)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in difference");
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| sub(a, b, p)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let p = self.p;
        let data = self.data.iter().map(|&a| mul(a, c % p, p)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    /// `[self other]`
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack needs equal row counts");
        let mut m = Matrix::zeros(self.p, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            m.data[r * m.cols..r * m.cols + self.cols].copy_from_slice(self.row(r));
            m.data[r * m.cols + self.cols..(r + 1) * m.cols].copy_from_slice(other.row(r));
        }
        m
    }

    /// `[self; other]`
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack needs equal column counts");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { p: self.p, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diagonal(p: u32, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(self.p, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, self.get(r0 + r, c0 + c));
            }
        }
        m
    }

    /// Sub-matrix made of the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.p, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.set(r, j, self.get(r, c));
            }
        }
        m
    }

    pub fn trace(&self) -> u32 {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| add(acc, self.get(i, i), self.p))
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Reduced row-echelon form together with its pivot columns.
    pub fn echelon(&self) -> Echelon {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(found) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(row, found);
            let scale = inv(m.get(row, col), p);
            if scale != 1 {
                for c in col..m.cols {
                    let v = mul(m.get(row, c), scale, p);
                    m.set(row, c, v);
                }
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = sub(m.get(r, c), mul(factor, m.get(row, c), p), p);
                    m.data[r * m.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Column space as a subspace of `F_p^rows`.
    pub fn column_space(&self) -> Subspace {
        Subspace::spanned_by(&self.transpose())
    }

    /// Row space as a subspace of `F_p^cols`.
    pub fn row_space(&self) -> Subspace {
        Subspace::spanned_by(self)
    }
}

/// Output of Gaussian elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Reduced row-echelon form and rank.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let e = m.echelon();
    let rank = e.rank();
    (e.reduced, rank)
}

/// Null space `{v : m v = 0}` as a subspace of `F_p^cols`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let p = m.prime();
    let n = m.cols();
    let e = m.echelon();
    let mut is_pivot = vec![false; n];
    for &c in &e.pivots {
        is_pivot[c] = true;
    }
    let mut vectors = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; n];
        v[free] = 1 % p;
        for (r, &pc) in e.pivots.iter().enumerate() {
            v[pc] = neg(e.reduced.get(r, free), p);
        }
        vectors.push(v);
    }
    Subspace::spanned_by(&Matrix::from_row_vectors(p, n, &vectors))
}

/// Solves `a x = b`. Returns `Ok(None)` when `b` is not in the column space.
pub fn solve(a: &Matrix, b: &[u32]) -> Result<Option<Vec<u32>>> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "system has {} equations but right-hand side has length {}",
            a.rows(),
            b.len()
        )));
    }
    let p = a.prime();
    let rhs = Matrix::from_columns(p, b.len(), &[b.to_vec()]);
    Ok(solve_matrix(a, &rhs).map(|x| x.column(0)))
}

/// Solves `a X = b` for a matrix of right-hand sides, if solvable.
pub fn solve_matrix(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    assert_eq!(a.rows(), b.rows(), "solve_matrix: row mismatch");
    let p = a.prime();
    let n = a.cols();
    let aug = a.hstack(b);
    let e = aug.echelon();
    if e.pivots.iter().any(|&c| c >= n) {
        return None;
    }
    let mut x = Matrix::zeros(p, n, b.cols());
    for (r, &pc) in e.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(pc, j, e.reduced.get(r, n + j));
        }
    }
    Some(x)
}

/// A linear subspace of `F_p^n`, stored as its canonical reduced echelon basis.
///
/// Two equal subspaces have identical basis matrices, so structural equality is
/// subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: u32, ambient: usize) -> Self {
        Subspace { basis: Matrix::zeros(p, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(p: u32, ambient: usize) -> Self {
        Subspace { basis: Matrix::identity(p, ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the rows of `rows`.
    pub fn spanned_by(rows: &Matrix) -> Self {
        let e = rows.echelon();
        let rank = e.rank();
        let basis = e.reduced.block(0, 0, rank, rows.cols());
        Subspace { basis, pivots: e.pivots }
    }

    pub fn from_vectors(p: u32, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        Self::spanned_by(&Matrix::from_row_vectors(p, ambient, vectors))
    }

    pub fn prime(&self) -> u32 {
        self.basis.prime()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Basis vectors as rows, in reduced echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.dim()).map(|r| self.basis.row(r).to_vec()).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::AmbientMismatch(self.ambient_dim(), other.ambient_dim()));
        }
        Ok(())
    }

    /// Reduces `v` against the basis; the result is zero exactly on members.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.prime();
        let mut v = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let f = v[pc];
            if f == 0 {
                continue;
            }
            for (x, &b) in v.iter_mut().zip(self.basis.row(r)) {
                *x = sub(*x, mul(f, b, p), p);
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient_dim(), "vector not in ambient space");
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::spanned_by(&self.basis.vstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let p = self.prime();
        // a·U = b·V  <=>  (a, b) in ker [U; V]^T, with the sign folded into b.
        let stacked = self.basis.vstack(&other.basis);
        let ker = kernel_basis(&stacked.transpose());
        let k = self.dim();
        let mut vectors = Vec::with_capacity(ker.dim());
        for coeffs in ker.basis_vectors() {
            let a = Matrix::from_row_vectors(p, k, &[coeffs[..k].to_vec()]);
            vectors.push(a.mul(&self.basis).row(0).to_vec());
        }
        Ok(Subspace::from_vectors(p, self.ambient_dim(), &vectors))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.basis_vectors().iter().all(|v| other.contains(v)))
    }

    /// Coordinates kept by the quotient map: the non-pivot positions.
    pub fn complement_positions(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient_dim()).filter(|&c| !is_pivot[c]).collect()
    }

    /// Surjection `F_p^n -> F_p^(n - dim)` with kernel exactly this subspace.
    pub fn quotient_map(&self) -> Matrix {
        let p = self.prime();
        let n = self.ambient_dim();
        let keep = self.complement_positions();
        let mut q = Matrix::zeros(p, keep.len(), n);
        for c in 0..n {
            let mut e = vec![0u32; n];
            e[c] = 1 % p;
            let red = self.reduce(&e);
            for (i, &k) in keep.iter().enumerate() {
                q.set(i, c, red[k]);
            }
        }
        q
    }

    /// Injection `F_p^(n - dim) -> F_p^n` onto the standard complement; a section of `quotient_map`.
    pub fn complement_section(&self) -> Matrix {
        let p = self.prime();
        let keep = self.complement_positions();
        let mut s = Matrix::zeros(p, self.ambient_dim(), keep.len());
        for (i, &k) in keep.iter().enumerate() {
            s.set(k, i, 1);
        }
        s
    }
}
