//! Exact linear algebra over a [`Field`]: small dense matrices, sparse incremental
//! row echelon forms for rank computations, and univariate polynomial helpers.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::Field;

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, zero: &F) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero.zero_like(); rows * cols],
        }
    }

    pub fn identity(n: usize, zero: &F) -> Self {
        let mut m = Self::zeros(n, n, zero);
        for i in 0..n {
            m[(i, i)] = zero.one_like();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diag(entries: &[F]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n, &entries[0]);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
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

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.times(s)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let zero = self.zero();
        let mut out = Self::zeros(self.rows, other.cols, &zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].plus(&a.times(b));
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn trace(&self) -> F {
        let mut t = self.zero();
        for i in 0..self.rows.min(self.cols) {
            t = t.plus(&self[(i, i)]);
        }
        t
    }

    fn zero(&self) -> F {
        self.data
            .first()
            .map(F::zero_like)
            .expect("matrix has no entries to infer the field from")
    }

    /// Row-reduces a copy; returns (rank, determinant of the leading square block if square).
    fn eliminate(&self) -> (usize, F) {
        let mut m = self.clone();
        let mut det = self.zero().one_like();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                det = self.zero();
                continue;
            };
            if p != rank {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, rank * m.cols + j);
                }
                det = det.negate();
            }
            let piv = m[(rank, col)].clone();
            det = det.times(&piv);
            let inv = piv.try_inv().expect("nonzero pivot");
            for r in rank + 1..m.rows {
                let f = m[(r, col)].times(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = m[(rank, j)].times(&f);
                    m[(r, j)] = m[(r, j)].minus(&v);
                }
            }
            rank += 1;
        }
        if rank < m.rows.min(m.cols) {
            det = self.zero();
        }
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        if self.data.is_empty() {
            return 0;
        }
        self.eliminate().0
    }

    pub fn det(&self) -> F {
        assert!(self.is_square(), "determinant of non-square matrix");
        self.eliminate().1
    }

    pub fn inverse(&self) -> Result<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let zero = self.zero();
        let mut a = self.clone();
        let mut inv = Self::identity(n, &zero);
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::DivisionByZero)?;
            for j in 0..n {
                a.data.swap(p * n + j, col * n + j);
                inv.data.swap(p * n + j, col * n + j);
            }
            let pinv = a[(col, col)].try_inv()?;
            for j in 0..n {
                a[(col, j)] = a[(col, j)].times(&pinv);
                inv[(col, j)] = inv[(col, j)].times(&pinv);
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let va = a[(col, j)].times(&f);
                    a[(r, j)] = a[(r, j)].minus(&va);
                    let vi = inv[(col, j)].times(&f);
                    inv[(r, j)] = inv[(r, j)].minus(&vi);
                }
            }
        }
        Ok(inv)
    }

    /// Basis of the right kernel {v : M v = 0}, from the reduced row echelon form.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        if self.data.is_empty() {
            return Vec::new();
        }
        let mut m = self.clone();
        let zero = self.zero();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
            let inv = m[(r, col)].try_inv().expect("nonzero pivot");
            for j in 0..m.cols {
                m[(r, j)] = m[(r, j)].times(&inv);
            }
            for i in 0..m.rows {
                if i == r || m[(i, col)].is_zero() {
                    continue;
                }
                let f = m[(i, col)].clone();
                for j in 0..m.cols {
                    let v = m[(r, j)].times(&f);
                    m[(i, j)] = m[(i, j)].minus(&v);
                }
            }
            pivots.push(col);
            r += 1;
        }
        let one = zero.one_like();
        (0..m.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![zero.clone(); m.cols];
                v[free] = one.clone();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = m[(row, free)].negate();
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial det(tI − M), coefficients lowest degree first
    /// (Faddeev–LeVerrier; exact in characteristic zero).
    pub fn charpoly(&self) -> Vec<F> {
        assert!(self.is_square());
        let n = self.rows;
        let zero = self.zero();
        let one = zero.one_like();
        let mut coeffs = vec![zero.clone(); n + 1];
        coeffs[n] = one.clone();
        let ident = Self::identity(n, &zero);
        let mut m_k = Self::zeros(n, n, &zero);
        let mut c_prev = one;
        for k in 1..=n {
            m_k = self.mul(&m_k).add(&ident.scale(&c_prev));
            let am = self.mul(&m_k);
            let kf = int_in(&zero, k as i64);
            let c_k = am.trace().negate().times(&kf.try_inv().expect("k > 0"));
            coeffs[n - k] = c_k.clone();
            c_prev = c_k;
        }
        coeffs
    }
}

/// The integer `v` as an element of the field of `like`.
pub fn int_in<F: Field>(like: &F, v: i64) -> F {
    let one = like.one_like();
    let mut acc = like.zero_like();
    let mut base = if v < 0 { one.negate() } else { one };
    let mut e = v.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.plus(&base);
        }
        base = base.plus(&base);
        e >>= 1;
    }
    acc
}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sparse vector: column index to nonzero value.
pub type SparseVec<F> = BTreeMap<usize, F>;

/// Incrementally maintained reduced row echelon basis of a subspace spanned by sparse
/// vectors. Each stored row has its pivot as its smallest column with value 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon<F: Field> {
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        v.retain(|_, x| !x.is_zero());
        let mut floor = 0usize;
        loop {
            let Some((&col, coef)) = v.range(floor..).find(|(c, _)| self.rows.contains_key(c)) else {
                return v;
            };
            let coef = coef.clone();
            let basis = &self.rows[&col];
            for (&j, b) in basis {
                let delta = b.times(&coef);
                let entry = v.entry(j).or_insert_with(|| delta.zero_like());
                *entry = entry.minus(&delta);
                if entry.is_zero() {
                    v.remove(&j);
                }
            }
            floor = col + 1;
        }
    }

    pub fn contains(&self, v: SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let r = self.reduce(v);
        let Some((&pivot, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.try_inv().expect("nonzero lead");
        let r: SparseVec<F> = r.into_iter().map(|(j, x)| (j, x.times(&inv))).collect();
        self.rows.insert(pivot, r);
        true
    }
}

/// Rank of a family of sparse vectors.
pub fn sparse_rank<F: Field>(vectors: impl IntoIterator<Item = SparseVec<F>>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Dimension of the solution space of the homogeneous system `rows · u = 0` in `unknowns` variables.
pub fn nullity<F: Field>(rows: impl IntoIterator<Item = SparseVec<F>>, unknowns: usize) -> usize {
    unknowns - sparse_rank(rows)
}

/// Univariate polynomial helpers (coefficients lowest degree first, trailing zeros trimmed).
pub mod upoly {
    use super::*;

    pub fn trim<F: Field>(mut p: Vec<F>) -> Vec<F> {
        while p.len() > 1 && p.last().is_some_and(F::is_zero) {
            p.pop();
        }
        p
    }

    pub fn is_zero<F: Field>(p: &[F]) -> bool {
        p.iter().all(F::is_zero)
    }

    pub fn derivative<F: Field>(p: &[F]) -> Vec<F> {
        if p.len() <= 1 {
            return vec![p[0].zero_like()];
        }
        trim(
            p.iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.times(&int_in(c, k as i64)))
                .collect(),
        )
    }

    pub fn rem<F: Field>(num: &[F], den: &[F]) -> Vec<F> {
        let den = trim(den.to_vec());
        let mut r = trim(num.to_vec());
        let dd = den.len() - 1;
        let zero = den[0].zero_like();
        let lead = den[dd].try_inv().expect("division by zero polynomial");
        while !is_zero(&r) && r.len() > dd {
            let k = r.len() - 1 - dd;
            let c = r[r.len() - 1].times(&lead);
            for (j, d) in den.iter().enumerate() {
                r[k + j] = r[k + j].minus(&c.times(d));
            }
            r.pop();
            if r.is_empty() {
                r.push(zero.clone());
            }
            r = trim(r);
        }
        r
    }

    /// Monic gcd.
    pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !is_zero(&y) {
            let r = rem(&x, &y);
            x = std::mem::replace(&mut y, r);
        }
        if is_zero(&x) {
            return x;
        }
        let inv = x.last().unwrap().try_inv().unwrap();
        x.iter().map(|c| c.times(&inv)).collect()
    }

    pub fn degree<F: Field>(p: &[F]) -> Option<usize> {
        let p = trim(p.to_vec());
        if is_zero(&p) {
            None
        } else {
            Some(p.len() - 1)
        }
    }
}
