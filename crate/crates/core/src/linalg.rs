//! Exact linear algebra over ℚ and the radical ring.
//!
//! Subspaces are stored by their reduced row-echelon basis, so equality,
//! hashing and ordering are all syntactic.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{RadicalScalar, Rational};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T = Rational> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Self { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

impl<T: Clone + PartialEq> Matrix<T> {
    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pub fn mul_mat(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.get(i, k) * other.get(k, j);
            }
            acc
        }))
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc = acc + a * b;
                }
                acc
            })
            .collect())
    }
}

/// Exact inertia of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl Inertia {
    pub fn new(positive: usize, zero: usize, negative: usize) -> Self {
        Self { positive, zero, negative }
    }

    pub fn size(&self) -> usize {
        self.positive + self.zero + self.negative
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }

    pub fn is_positive_definite(&self) -> bool {
        self.zero == 0 && self.negative == 0
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn to_rational_vec(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

/// Writes `v = c · p` with `p` a primitive integer vector and `c > 0`.
/// Orientation is preserved. Returns `None` for the zero vector.
pub fn primitive_direction(v: &[Rational]) -> Option<(Vec<BigInt>, Rational)> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    let prim: Vec<BigInt> = ints.iter().map(|x| x / &g).collect();
    Some((prim, Rational::new(g, lcm)))
}

/// Primitive integer vector spanning the line of `v`, first nonzero entry positive.
pub fn primitive_line(v: &[Rational]) -> Option<Vec<BigInt>> {
    let (mut p, _) = primitive_direction(v)?;
    if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in &mut p {
            *x = -core::mem::take(x);
        }
    }
    Some(p)
}

/// Integer determinant by Bareiss fraction-free elimination.
pub fn det_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate { -d } else { d }
}

impl Matrix<Rational> {
    pub fn from_int_rows(rows: &[Vec<BigInt>], cols: usize) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| to_rational_vec(r)).collect(), cols)
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det *= &piv;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) / &piv;
                for j in c..n {
                    let v = m.get(i, j) - &f * m.get(c, j);
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.cols];
                x[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    x[p] = -r.get(i, f).clone();
                }
                x
            })
            .collect()
    }

    /// Some solution of `A x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { b[i].clone() }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Degenerate("singular matrix"));
        }
        Ok(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Exact inertia by symmetric Gaussian elimination (LDLᵀ, with the
    /// `e_i + e_j` substitution when the diagonal vanishes).
    pub fn signature(&self) -> Result<Inertia> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetricMatrix);
        }
        let mut a = self.to_rows();
        let mut inertia = Inertia::default();
        loop {
            let n = a.len();
            if n == 0 {
                break;
            }
            let Some(k) = pivot_or_mix::<Rational>(&mut a) else {
                inertia.zero += n;
                break;
            };
            let p = a[k][k].clone();
            if p.is_positive() {
                inertia.positive += 1;
            } else {
                inertia.negative += 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&i| i != k).collect();
            a = rest
                .iter()
                .map(|&i| rest.iter().map(|&j| &a[i][j] - &(&a[i][k] * &a[k][j] / &p)).collect())
                .collect();
        }
        Ok(inertia)
    }
}

/// Index of a nonzero diagonal entry. If the diagonal vanishes but some
/// off-diagonal `a_ij` does not, applies the congruence `e_i ← e_i + e_j`
/// (new diagonal `2a_ij`) and returns `i`. `None` means the block is zero.
fn pivot_or_mix<T>(a: &mut [Vec<T>]) -> Option<usize>
where
    T: Clone + Zero,
    for<'a> &'a T: Add<&'a T, Output = T>,
{
    let n = a.len();
    if let Some(k) = (0..n).find(|&i| !a[i][i].is_zero()) {
        return Some(k);
    }
    let (i, j) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| i != j && !a[i][j].is_zero())?;
    let sum: Vec<_> = a[i].iter().zip(&a[j]).map(|(x, y)| x + y).collect();
    a[i] = sum;
    for row in a.iter_mut() {
        let v = &row[i] + &row[j];
        row[i] = v;
    }
    Some(i)
}

impl Matrix<RadicalScalar> {
    /// The same matrix over ℚ, when every entry is rational.
    pub fn to_rational(&self) -> Option<Matrix<Rational>> {
        let data: Option<Vec<Rational>> = self.data.iter().map(RadicalScalar::to_rational).collect();
        Some(Matrix { rows: self.rows, cols: self.cols, data: data? })
    }

    /// Rank; rational matrices use fraction elimination, others a
    /// division-free elimination whose zero tests are structural.
    pub fn rank(&self) -> usize {
        if let Some(q) = self.to_rational() {
            return q.rank();
        }
        let mut m = self.to_rows();
        let mut rank = 0;
        let cols = self.cols;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let piv = m[rank][c].clone();
            for i in rank + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = m[i][c].clone();
                let (top, rest) = m.split_at_mut(i);
                for (x, p) in rest[0][c..cols].iter_mut().zip(&top[rank][c..cols]) {
                    *x = &(&piv * &*x) - &(&f * p);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Exact inertia by division-free symmetric elimination: each step
    /// replaces the trailing block `S` by `p·S − a aᵀ`, a congruence scaled
    /// by the pivot `p`, and flips the bookkeeping when `p < 0`.
    pub fn signature(&self) -> Result<Inertia> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetricMatrix);
        }
        if let Some(q) = self.to_rational() {
            return q.signature();
        }
        let mut a = self.to_rows();
        let mut inertia = Inertia::default();
        let mut negated = false;
        loop {
            let n = a.len();
            if n == 0 {
                break;
            }
            let Some(k) = pivot_or_mix::<RadicalScalar>(&mut a) else {
                inertia.zero += n;
                break;
            };
            let p = a[k][k].clone();
            let s = p.try_sign()?;
            if (s > 0) != negated {
                inertia.positive += 1;
            } else {
                inertia.negative += 1;
            }
            if s < 0 {
                negated = !negated;
            }
            let rest: Vec<usize> = (0..n).filter(|&i| i != k).collect();
            a = rest
                .iter()
                .map(|&i| {
                    rest.iter()
                        .map(|&j| &(&p * &a[i][j]) - &(&a[i][k] * &a[k][j]))
                        .collect()
                })
                .collect();
        }
        Ok(inertia)
    }
}

impl<T> Neg for Matrix<T>
where
    T: Neg<Output = T>,
{
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.into_iter().map(|x| -x).collect() }
    }
}

impl<T: Clone> Add for &Matrix<T>
where
    for<'a> &'a T: Add<&'a T, Output = T>,
{
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<T: Clone> Sub for &Matrix<T>
where
    for<'a> &'a T: Sub<&'a T, Output = T>,
{
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Gram matrix `G_ij = ⟨v_i, v_j⟩`.
pub fn gram_matrix(vectors: &[Vec<Rational>]) -> Matrix {
    Matrix::from_fn(vectors.len(), vectors.len(), |i, j| dot(&vectors[i], &vectors[j]))
}

/// `det G`; the empty family has Gram determinant 1.
pub fn gram_det(vectors: &[Vec<Rational>]) -> Rational {
    if vectors.is_empty() {
        return Rational::one();
    }
    gram_matrix(vectors).det().expect("Gram matrices are square")
}

/// Volume `√det G` of the parallelotope spanned by `vectors`.
pub fn gram_volume(vectors: &[Vec<Rational>]) -> RadicalScalar {
    RadicalScalar::sqrt(&gram_det(vectors)).expect("Gram determinants are nonnegative")
}

/// A linear subspace of ℝⁿ in canonical RREF form.
///
/// The derived ordering compares RREF bases lexicographically; it is the
/// basis order used by every matrix and report.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Self { ambient: n, basis: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Self { ambient: n, basis: Matrix::<Rational>::identity(n).to_rows() }
    }

    /// Canonical span of `vectors` in ℝⁿ.
    pub fn span(vectors: &[Vec<Rational>], n: usize) -> Result<Self> {
        if vectors.is_empty() {
            return Ok(Self::zero(n));
        }
        let m = Matrix::from_rows(vectors.to_vec(), n)?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Self { ambient: n, basis })
    }

    pub fn span_int(vectors: &[Vec<BigInt>], n: usize) -> Result<Self> {
        let rows: Vec<Vec<Rational>> = vectors.iter().map(|v| to_rational_vec(v)).collect();
        Self::span(&rows, n)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(&rows, self.ambient)
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(rows, self.ambient).map(|m| m.rank() == self.dim()).unwrap_or(false)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// `true` when `self ∩ other = {0}`.
    pub fn meets_trivially(&self, other: &Subspace) -> Result<bool> {
        Ok(self.sum(other)?.dim() == self.dim() + other.dim())
    }

    /// Gram determinant of the RREF basis.
    pub fn gram_det(&self) -> Rational {
        gram_det(&self.basis)
    }

    pub fn orthogonal_complement(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        let m = Matrix::from_rows(self.basis.clone(), self.ambient).expect("basis rows have ambient length");
        Subspace::span(&m.kernel(), self.ambient).expect("kernel vectors have ambient length")
    }

    /// Pairwise orthogonal primitive integer basis (rational Gram–Schmidt,
    /// each vector rescaled to primitive form).
    pub fn orthogonal_basis(&self) -> Vec<Vec<Rational>> {
        let mut out: Vec<Vec<Rational>> = Vec::new();
        for v in &self.basis {
            let mut w = v.clone();
            for u in &out {
                let f = dot(&w, u) / dot(u, u);
                for (wi, ui) in w.iter_mut().zip(u) {
                    *wi -= &f * ui;
                }
            }
            let (p, _) = primitive_direction(&w).expect("basis vectors are independent");
            out.push(to_rational_vec(&p));
        }
        out
    }

    /// Orthogonal projection matrix `Bᵀ(BBᵀ)⁻¹B`.
    pub fn projection(&self) -> Result<Matrix> {
        if self.basis.is_empty() {
            return Err(Error::Degenerate("projection onto the zero subspace"));
        }
        let b = Matrix::from_rows(self.basis.clone(), self.ambient)?;
        let bt = b.transpose();
        let g = b.mul_mat(&bt)?.inverse()?;
        bt.mul_mat(&g)?.mul_mat(&b)
    }
}

pub fn canonicalize(vectors: &[Vec<Rational>], n: usize) -> Result<Subspace> {
    Subspace::span(vectors, n)
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

/// Squared product of the sines of the principal angles between `a` and `b`.
pub fn sin_squared(a: &Subspace, b: &Subspace) -> Result<Rational> {
    a.check(b)?;
    let mut both = a.basis.clone();
    both.extend(b.basis.iter().cloned());
    Ok(gram_det(&both) / (a.gram_det() * b.gram_det()))
}

pub fn orthogonal_projection(w: &Subspace) -> Result<Matrix> {
    w.projection()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn sp(vs: &[&[i64]], n: usize) -> Subspace {
        Subspace::span(&vs.iter().map(|x| v(x)).collect::<Vec<_>>(), n).unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(sp(&[&[2, 0, 0]], 3).basis(), &[v(&[1, 0, 0])]);
        assert_eq!(sp(&[&[1, 1], &[2, 2]], 2).basis(), &[v(&[1, 1])]);
        assert_eq!(sp(&[], 3).dim(), 0);
    }

    #[test]
    fn sums() {
        let e1 = sp(&[&[1, 0, 0]], 3);
        let e2 = sp(&[&[0, 1, 0]], 3);
        let d = sp(&[&[1, 1, 0]], 3);
        assert_eq!(e1.sum(&e2).unwrap(), sp(&[&[1, 0, 0], &[0, 1, 0]], 3));
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        assert_eq!(e1.sum(&d).unwrap(), sp(&[&[1, 0, 0], &[0, 1, 0]], 3));
        assert!(e1.sum(&sp(&[&[1, 0]], 2)).is_err());
    }

    #[test]
    fn sines() {
        let e1 = sp(&[&[1, 0]], 2);
        let e2 = sp(&[&[0, 1]], 2);
        let d = sp(&[&[1, 1]], 2);
        assert_eq!(sin_squared(&e1, &e2).unwrap(), int(1));
        assert_eq!(sin_squared(&e1, &d).unwrap(), rat(1, 2));
        assert_eq!(sin_squared(&e1, &e1).unwrap(), int(0));
        assert_eq!(sin_squared(&Subspace::zero(2), &d).unwrap(), int(1));
    }

    #[test]
    fn projections() {
        let p = sp(&[&[1, 0]], 2).projection().unwrap();
        assert_eq!(p.to_rows(), vec![v(&[1, 0]), v(&[0, 0])]);
        let p = sp(&[&[1, 1]], 2).projection().unwrap();
        assert_eq!(p.to_rows(), vec![vec![rat(1, 2), rat(1, 2)], vec![rat(1, 2), rat(1, 2)]]);
        let p = sp(&[&[1, 0, 0], &[0, 1, 0]], 3).projection().unwrap();
        assert_eq!(p.to_rows(), vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 0])]);
        assert!(Subspace::zero(2).projection().is_err());
    }

    #[test]
    fn gram_volumes() {
        assert_eq!(gram_volume(&[v(&[1, 0]), v(&[0, 1])]), RadicalScalar::one());
        assert_eq!(gram_volume(&[v(&[1, 1])]), RadicalScalar::sqrt(&int(2)).unwrap());
        assert_eq!(gram_volume(&[v(&[1, 0]), v(&[1, 1])]), RadicalScalar::one());
        assert!(gram_volume(&[v(&[1, 1]), v(&[2, 2])]).is_zero());
    }

    #[test]
    fn determinants_kernels_inverses() {
        let m = Matrix::from_rows(vec![v(&[2, 1]), v(&[1, 3])], 2).unwrap();
        assert_eq!(m.det().unwrap(), int(5));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_mat(&inv).unwrap(), Matrix::identity(2));
        let k = Matrix::from_rows(vec![v(&[1, 1, 1])], 3).unwrap().kernel();
        assert_eq!(k.len(), 2);
        let sol = m.solve(&v(&[3, 4])).unwrap().unwrap();
        assert_eq!(sol, v(&[1, 1]));
    }

    #[test]
    fn signatures() {
        let id: Matrix = Matrix::identity(3);
        assert_eq!(id.signature().unwrap(), Inertia::new(3, 0, 0));
        let d = Matrix::from_rows(vec![v(&[1, 0, 0]), v(&[0, -1, 0]), v(&[0, 0, 0])], 3).unwrap();
        assert_eq!(d.signature().unwrap(), Inertia::new(1, 1, 1));
        let j = Matrix::from_rows(vec![v(&[0, -1, -1]), v(&[-1, 0, -1]), v(&[-1, -1, 0])], 3).unwrap();
        assert_eq!(j.signature().unwrap(), Inertia::new(2, 0, 1));
        let jr = j.map(|x| RadicalScalar::from_rational(x.clone()));
        assert_eq!(jr.signature().unwrap(), Inertia::new(2, 0, 1));
        let nonsym = Matrix::from_rows(vec![v(&[0, 1]), v(&[0, 0])], 2).unwrap();
        assert_eq!(nonsym.signature(), Err(Error::NotSymmetricMatrix));
    }

    #[test]
    fn radical_signature_and_rank() {
        let s2 = RadicalScalar::sqrt(&int(2)).unwrap();
        let one = RadicalScalar::one();
        // [[1, √2], [√2, 1]] has eigenvalues 1 ± √2.
        let m = Matrix::from_rows(vec![vec![one.clone(), s2.clone()], vec![s2.clone(), one.clone()]], 2).unwrap();
        assert_eq!(m.signature().unwrap(), Inertia::new(1, 0, 1));
        assert_eq!(m.rank(), 2);
        // [[√2, 2], [1, √2]] is singular.
        let two = RadicalScalar::from_int(2);
        let m = Matrix::from_rows(vec![vec![s2.clone(), two], vec![one, s2]], 2).unwrap();
        assert_eq!(m.rank(), 1);
    }

    fn small_vec(n: usize) -> impl Strategy<Value = Vec<Rational>> {
        prop::collection::vec((-4i64..=4, 1i64..=3).prop_map(|(a, b)| rat(a, b)), n)
    }

    fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
        prop::collection::vec(small_vec(n), 0..=n).prop_map(move |vs| Subspace::span(&vs, n).unwrap())
    }

    proptest! {
        #[test]
        fn sin_squared_properties(a in subspace(3), b in subspace(3)) {
            let s = sin_squared(&a, &b).unwrap();
            prop_assert_eq!(&s, &sin_squared(&b, &a).unwrap());
            prop_assert!(s >= int(0) && s <= int(1));
            let meets = a.meets_trivially(&b).unwrap();
            prop_assert_eq!(s.is_zero(), !meets);
            let orthogonal = a.basis().iter().all(|x| b.basis().iter().all(|y| dot(x, y).is_zero()));
            prop_assert_eq!(s == int(1), orthogonal);
            let r = RadicalScalar::sqrt(&s).unwrap();
            prop_assert_eq!(&r * &r, RadicalScalar::from_rational(s));
        }

        #[test]
        fn projection_properties(w in subspace(3), x in small_vec(3)) {
            prop_assume!(w.dim() > 0);
            let p = w.projection().unwrap();
            prop_assert!(p.is_symmetric());
            prop_assert_eq!(p.mul_mat(&p).unwrap(), p.clone());
            for b in w.basis() {
                prop_assert_eq!(&p.mul_vec(b).unwrap(), b);
            }
            for c in w.orthogonal_complement().basis() {
                prop_assert!(p.mul_vec(c).unwrap().iter().all(Zero::is_zero));
            }
            let px = p.mul_vec(&x).unwrap();
            prop_assert!(w.contains_vector(&px));
        }

        #[test]
        fn sum_is_canonical(a in subspace(4), b in subspace(4)) {
            let s = a.sum(&b).unwrap();
            prop_assert_eq!(Subspace::span(s.basis(), 4).unwrap(), s.clone());
            prop_assert!(s.contains(&a) && s.contains(&b));
        }

        #[test]
        fn rational_and_radical_signatures_agree(rows in prop::collection::vec(small_vec(4), 4)) {
            let m = Matrix::from_rows(rows, 4).unwrap();
            let s = &m + &m.transpose();
            let r = s.map(|x| RadicalScalar::from_rational(x.clone()));
            prop_assert_eq!(s.signature().unwrap(), r.signature().unwrap());
            prop_assert_eq!(s.signature().unwrap().rank(), s.rank());
            prop_assert_eq!(r.rank(), s.rank());
        }
    }
}
