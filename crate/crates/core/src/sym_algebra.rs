//! The symmetric subalgebra spanned by subspace classes `x_L` and its
//! combinatorial shadow, the graded Möbius algebra.
//!
//! Products follow `x_L · x_{L'} = sin(L, L') · x_{L+L'}` when `L ∩ L' = 0`
//! and vanish otherwise. Public elements use the `x` basis with radical
//! coefficients.
//!
//! [`SymAlgebra`] additionally works in the rescaled basis
//! `z_L = x_L / √g_L`, where `g_L` is the Gram determinant of the RREF basis
//! of `L`. In that basis every structure constant is rational, and the cone
//! elements of polytopes with rational data have rational coordinates, so
//! ranks and inertia are computed over ℚ. Passing between the bases is a
//! positive diagonal rescaling, which preserves rank and inertia.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arrangement::{LineArrangement, SubspaceLattice};
use crate::error::{Error, Result};
use crate::geometry::Polytope;
use crate::linalg::{sin_squared, to_rational_vec, Inertia, Matrix, Subspace};
use crate::measure::WeightedDirections;
use crate::scalar::{rational_sqrt_exact, RadicalScalar, Rational};

/// Graded element `Σ a_L x_L` with all `L` of dimension `degree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymElement {
    n: usize,
    degree: usize,
    coeffs: BTreeMap<Subspace, RadicalScalar>,
}

impl SymElement {
    pub fn zero(n: usize, degree: usize) -> Self {
        Self { n, degree, coeffs: BTreeMap::new() }
    }

    /// `x_{{0}}`, the multiplicative identity.
    pub fn unit(n: usize) -> Self {
        Self::basis(Subspace::zero(n))
    }

    /// The basis element `x_L`.
    pub fn basis(l: Subspace) -> Self {
        let mut e = Self::zero(l.ambient_dim(), l.dim());
        e.coeffs.insert(l, RadicalScalar::one());
        e
    }

    pub fn from_terms<I>(n: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subspace, RadicalScalar)>,
    {
        let mut e = Self::zero(n, degree);
        for (l, a) in terms {
            if l.ambient_dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: l.ambient_dim() });
            }
            if l.dim() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: l.dim() });
            }
            e.add_term(l, a);
        }
        Ok(e)
    }

    fn add_term(&mut self, l: Subspace, a: RadicalScalar) {
        if a.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(l.clone()).or_default();
        *slot += &a;
        if slot.is_zero() {
            self.coeffs.remove(&l);
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Subspace, RadicalScalar> {
        &self.coeffs
    }

    pub fn coeff(&self, l: &Subspace) -> RadicalScalar {
        self.coeffs.get(l).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (l, a) in &other.coeffs {
            out.add_term(l.clone(), a.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        let mut out = Self::zero(self.n, self.degree);
        for (l, a) in &self.coeffs {
            out.add_term(l.clone(), a * c);
        }
        out
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    /// `σ = (−1)^k` in degree `k`; the antipode acts trivially on `x_L`.
    pub fn euler_verdier(&self) -> Self {
        if self.degree.is_multiple_of(2) {
            self.clone()
        } else {
            self.scale(&RadicalScalar::from_int(-1))
        }
    }

    /// Coefficient of `x_{ℝⁿ}`; the top class is normalized to 1.
    pub fn top_evaluate(&self) -> Result<RadicalScalar> {
        if self.degree != self.n {
            return Err(Error::DegreeMismatch { expected: self.n, found: self.degree });
        }
        Ok(self.coeff(&Subspace::full(self.n)))
    }
}

/// `sin(L, L')` as an exact radical.
pub fn sine(a: &Subspace, b: &Subspace) -> Result<RadicalScalar> {
    RadicalScalar::sqrt(&sin_squared(a, b)?)
}

/// Product in the `x` basis, with no lattice required.
pub fn multiply(a: &SymElement, b: &SymElement) -> Result<SymElement> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch { expected: a.n, found: b.n });
    }
    let mut out = SymElement::zero(a.n, a.degree + b.degree);
    if a.degree + b.degree > a.n {
        return Ok(out);
    }
    for (l, x) in &a.coeffs {
        for (m, y) in &b.coeffs {
            let s = sin_squared(l, m)?;
            if s.is_zero() {
                continue;
            }
            let c = &(x * y) * &RadicalScalar::sqrt(&s)?;
            out.add_term(l.sum(m)?, c);
        }
    }
    Ok(out)
}

/// Product of a list of elements; the empty product is the unit.
pub fn product(n: usize, factors: &[SymElement]) -> Result<SymElement> {
    let mut acc = SymElement::unit(n);
    for f in factors {
        acc = multiply(&acc, f)?;
    }
    Ok(acc)
}

/// `σ`, re-exported as a free function.
pub fn euler_verdier_sym(x: &SymElement) -> SymElement {
    x.euler_verdier()
}

pub fn top_evaluate(x: &SymElement) -> Result<RadicalScalar> {
    x.top_evaluate()
}

/// Degree-one element of a centrally symmetric polytope: `Σ c_L x_L` with
/// `c_L` the volume of one of the two facets perpendicular to `L`.
pub fn ell_symmetric(p: &Polytope, e: &LineArrangement) -> Result<SymElement> {
    if !p.is_centrally_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let m = p.surface_class()?;
    ell_of_symmetric_measure(&m, e)
}

/// Degree-one element of a symmetric measure on lines of `e`: each line
/// contributes `w · |ξ| · x_L`, taking one of the two opposite entries.
pub fn ell_of_symmetric_measure(m: &WeightedDirections, e: &LineArrangement) -> Result<SymElement> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = e.ambient_dim();
    if m.ambient_dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: m.ambient_dim() });
    }
    let mut out = SymElement::zero(n, 1);
    for (d, _) in m.entries() {
        let i = e.line_index(d).ok_or(Error::OffArrangement)?;
        if e.lines()[i] == *d {
            out.add_term(e.line_subspace(i), m.mass(d));
        }
    }
    Ok(out)
}

/// Cone element `Σ w_L |ξ_L| x_L` from one rational weight per line.
pub fn cone_element(e: &LineArrangement, weights: &[Rational]) -> Result<SymElement> {
    if weights.len() != e.len() {
        return Err(Error::DimensionMismatch { expected: e.len(), found: weights.len() });
    }
    let mut m = WeightedDirections::new(e.ambient_dim());
    for (line, w) in e.lines().iter().zip(weights) {
        m.add_primitive(line.clone(), w.clone());
        m.add_primitive(line.iter().map(|x| -x).collect(), w.clone());
    }
    ell_of_symmetric_measure(&m, e)
}

/// Membership in the open cone `K(E)`: a strictly positive coefficient on
/// every line and nothing else.
pub fn cone_membership(x: &SymElement, e: &LineArrangement) -> bool {
    x.degree == 1
        && x.n == e.ambient_dim()
        && x.coeffs.len() == e.len()
        && (0..e.len()).all(|i| x.coeff(&e.line_subspace(i)).sign() > 0)
}

/// Graded Möbius algebra element `Σ b_L y_L`, rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MobiusElement {
    n: usize,
    degree: usize,
    coeffs: BTreeMap<Subspace, Rational>,
}

impl MobiusElement {
    pub fn basis(l: Subspace) -> Self {
        let mut coeffs = BTreeMap::new();
        let (n, degree) = (l.ambient_dim(), l.dim());
        coeffs.insert(l, Rational::one());
        Self { n, degree, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Subspace, Rational> {
        &self.coeffs
    }

    /// `y_L · y_{L'} = y_{L+L'}` if `L ∩ L' = 0`, else 0.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let mut coeffs: BTreeMap<Subspace, Rational> = BTreeMap::new();
        if self.degree + other.degree <= self.n {
            for (l, a) in &self.coeffs {
                for (m, b) in &other.coeffs {
                    if l.meets_trivially(m)? {
                        *coeffs.entry(l.sum(m)?).or_insert_with(Rational::zero) += a * b;
                    }
                }
            }
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok(Self { n: self.n, degree: self.degree + other.degree, coeffs })
    }
}

/// One entry of a multiplication table, by positions in the level bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry<T> {
    pub left: usize,
    pub right: usize,
    /// `(position in level k+l, coefficient)`.
    pub product: Vec<(usize, T)>,
}

/// Matrix of a Lefschetz map together with its exact rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzMatrix {
    /// Rows indexed by `𝓛_{n−k}`, columns by `𝓛_k`, in the `x` basis.
    pub matrix: Matrix<RadicalScalar>,
    pub rank: usize,
}

/// `A*₊(E)` with its lattice and the rescaled `z` basis.
#[derive(Clone, Debug)]
pub struct SymAlgebra {
    e: LineArrangement,
    lattice: SubspaceLattice,
    gram: BTreeMap<Subspace, Rational>,
}

impl SymAlgebra {
    pub fn new(e: &LineArrangement) -> Self {
        let lattice = SubspaceLattice::build(e);
        let gram = lattice.levels().iter().flatten().map(|l| (l.clone(), l.gram_det())).collect();
        Self { e: e.clone(), lattice, gram }
    }

    pub fn arrangement(&self) -> &LineArrangement {
        &self.e
    }

    pub fn lattice(&self) -> &SubspaceLattice {
        &self.lattice
    }

    pub fn ambient_dim(&self) -> usize {
        self.e.ambient_dim()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.lattice.level(k).len()
    }

    pub fn unit(&self) -> SymElement {
        SymElement::unit(self.ambient_dim())
    }

    fn g(&self, l: &Subspace) -> &Rational {
        &self.gram[l]
    }

    fn sqrt_g(&self, l: &Subspace) -> RadicalScalar {
        RadicalScalar::sqrt(self.g(l)).expect("Gram determinants are positive")
    }

    /// `z_L · z_{L'} = c · z_{L+L'}` with
    /// `c² = G(L ∪ L') g_{L+L'} / (g_L g_{L'})²`, a rational square.
    pub fn z_constant(&self, l: &Subspace, m: &Subspace) -> Result<Rational> {
        let s2 = sin_squared(l, m)?;
        if s2.is_zero() {
            return Ok(Rational::zero());
        }
        let sum = l.sum(m)?;
        let gs = self.gram.get(&sum).ok_or(Error::ArrangementMismatch)?;
        let c2 = s2 * gs / (self.g(l) * self.g(m));
        rational_sqrt_exact(&c2).ok_or(Error::InvalidInput("structure constant is not rational in the z basis".into()))
    }

    /// `x`-basis element to `z`-basis coordinates over the level basis.
    pub fn to_z(&self, x: &SymElement) -> Result<Vec<RadicalScalar>> {
        let level = self.lattice.level(x.degree);
        let mut out = alloc::vec![RadicalScalar::zero(); level.len()];
        for (l, a) in &x.coeffs {
            let i = self.lattice.index_of(l).ok_or(Error::ArrangementMismatch)?;
            out[i] = a * &self.sqrt_g(l);
        }
        Ok(out)
    }

    pub fn from_z(&self, degree: usize, z: &[RadicalScalar]) -> SymElement {
        let mut out = SymElement::zero(self.ambient_dim(), degree);
        for (l, c) in self.lattice.level(degree).iter().zip(z) {
            let inv = self.sqrt_g(l).scale(&self.g(l).recip());
            out.add_term(l.clone(), c * &inv);
        }
        out
    }

    /// Rational `z` coordinates, when they exist.
    pub fn to_z_rational(&self, x: &SymElement) -> Result<Option<Vec<Rational>>> {
        Ok(self.to_z(x)?.iter().map(RadicalScalar::to_rational).collect())
    }

    /// Product of `z`-coordinate vectors of degrees `k` and `l`.
    fn z_multiply<T>(&self, k: usize, a: &[T], l: usize, b: &[T]) -> Result<Vec<T>>
    where
        T: Clone + Zero + for<'a> core::ops::AddAssign<&'a T>,
        for<'a> &'a T: core::ops::Mul<&'a T, Output = T> + core::ops::Mul<&'a Rational, Output = T>,
    {
        let n = self.ambient_dim();
        if k + l > n {
            return Ok(Vec::new());
        }
        let target = self.lattice.level(k + l);
        let mut out = alloc::vec![T::zero(); target.len()];
        for (i, li) in self.lattice.level(k).iter().enumerate() {
            if a[i].is_zero() {
                continue;
            }
            for (j, mj) in self.lattice.level(l).iter().enumerate() {
                if b[j].is_zero() {
                    continue;
                }
                let c = self.z_constant(li, mj)?;
                if c.is_zero() {
                    continue;
                }
                let pos = self.lattice.index_of(&li.sum(mj)?).ok_or(Error::ArrangementMismatch)?;
                let term = &(&a[i] * &b[j]) * &c;
                out[pos] += &term;
            }
        }
        Ok(out)
    }

    /// Product in the algebra, via the rational `z` structure constants.
    pub fn multiply(&self, a: &SymElement, b: &SymElement) -> Result<SymElement> {
        let za = self.to_z(a)?;
        let zb = self.to_z(b)?;
        let degree = a.degree + b.degree;
        if degree > self.ambient_dim() {
            return Ok(SymElement::zero(self.ambient_dim(), degree));
        }
        let z = self.z_multiply(a.degree, &za, b.degree, &zb)?;
        Ok(self.from_z(degree, &z))
    }

    pub fn cone_membership(&self, x: &SymElement) -> bool {
        cone_membership(x, &self.e)
    }

    fn check_cone_list(&self, k: usize, c_list: &[SymElement]) -> Result<()> {
        let n = self.ambient_dim();
        if 2 * k > n || c_list.len() != n - 2 * k {
            return Err(Error::InvalidInput(alloc::format!(
                "expected {} cone elements for degree {k}",
                n.saturating_sub(2 * k)
            )));
        }
        if c_list.iter().any(|c| !self.cone_membership(c)) {
            return Err(Error::NotInCone);
        }
        Ok(())
    }

    /// `z` coordinates of `ℓ_{C₁}⋯ℓ_{C_m}`.
    fn z_cone_product(&self, c_list: &[SymElement]) -> Result<(usize, Vec<RadicalScalar>)> {
        let mut deg = 0;
        let mut acc = alloc::vec![RadicalScalar::one()];
        for c in c_list {
            let zc = self.to_z(c)?;
            acc = self.z_multiply(deg, &acc, c.degree, &zc)?;
            deg += c.degree;
        }
        Ok((deg, acc))
    }

    /// Matrix (in `z` coordinates) of `x ↦ x · Π c` from level `k`.
    fn z_map(&self, k: usize, c_list: &[SymElement]) -> Result<(usize, Matrix<RadicalScalar>)> {
        let (deg, prod) = self.z_cone_product(c_list)?;
        let target = k + deg;
        let rows = if target <= self.ambient_dim() { self.dim(target) } else { 0 };
        let cols = self.dim(k);
        let mut m = Matrix::zeros(rows, cols);
        if rows == 0 {
            return Ok((target, m));
        }
        for j in 0..cols {
            let mut e = alloc::vec![RadicalScalar::zero(); cols];
            e[j] = RadicalScalar::one();
            let col = self.z_multiply(k, &e, deg, &prod)?;
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok((target, m))
    }

    /// Multiplication by `ℓ_{C₁}⋯ℓ_{C_{n−2k}}` from `𝓛_k` to `𝓛_{n−k}`.
    pub fn lefschetz_matrix(&self, k: usize, c_list: &[SymElement]) -> Result<LefschetzMatrix> {
        self.check_cone_list(k, c_list)?;
        let (target, z) = self.z_map(k, c_list)?;
        let rank = z.rank();
        let src = self.lattice.level(k);
        let dst = self.lattice.level(target);
        let matrix = Matrix::from_fn(dst.len(), src.len(), |i, j| {
            // x-coefficient = z-coefficient · √(g_L / g_M)
            let f = RadicalScalar::sqrt(&(self.g(&src[j]) / self.g(&dst[i]))).expect("positive");
            z.get(i, j) * &f
        });
        Ok(LefschetzMatrix { matrix, rank })
    }

    /// Gram matrix `Σ_M z_{Ma} z_{Mb} / g_M` of the images `x_L · ℓ_C`
    /// under the Euclidean inner product of `x` coordinates, conjugated by
    /// `diag(√g_L)` so that it stays rational. Its nullity is the nullity of
    /// the Lefschetz map, computed independently of the rank.
    pub fn lefschetz_image_gram(&self, k: usize, c_list: &[SymElement]) -> Result<Matrix<Rational>> {
        self.check_cone_list(k, c_list)?;
        let (target, z) = self.z_map(k, c_list)?;
        let z = z.to_rational().ok_or(Error::InvalidInput("cone elements are not rational in the z basis".into()))?;
        let inv: Vec<Rational> = self.lattice.level(target).iter().map(|m| self.g(m).recip()).collect();
        Ok(Matrix::from_fn(z.cols(), z.cols(), |a, b| {
            (0..z.rows()).map(|i| z.get(i, a) * z.get(i, b) * &inv[i]).sum()
        }))
    }

    /// `z`-basis Gram matrix of `q(x, y) = top(σ(x) · y · ℓ_C)` on level `k`.
    fn hr_gram_z(&self, k: usize, c_list: &[SymElement]) -> Result<Matrix<RadicalScalar>> {
        self.check_cone_list(k, c_list)?;
        let (target, lz) = self.z_map(k, c_list)?;
        let n = self.ambient_dim();
        debug_assert_eq!(target, n - k);
        let sign = if k.is_multiple_of(2) { RadicalScalar::one() } else { RadicalScalar::from_int(-1) };
        let src = self.lattice.level(k);
        let dst = self.lattice.level(n - k);
        // pairing P[a][b] = top(z_{src a} · z_{dst b}) = z constant (g_{ℝⁿ} = 1)
        let mut p = Matrix::zeros(src.len(), dst.len());
        for (a, l) in src.iter().enumerate() {
            for (b, m) in dst.iter().enumerate() {
                let c = self.z_constant(l, m)?;
                p.set(a, b, RadicalScalar::from_rational(c));
            }
        }
        let g = p.mul_mat(&lz)?;
        Ok(g.map(|v| v * &sign))
    }

    /// Gram matrix of the Hodge–Riemann form on `𝓛_k` in the `x` basis.
    /// Exact symmetry is checked.
    pub fn hr_gram_sym(&self, k: usize, c_list: &[SymElement]) -> Result<Matrix<RadicalScalar>> {
        let z = self.hr_gram_z(k, c_list)?;
        if !z.is_symmetric() {
            return Err(Error::NotSymmetricMatrix);
        }
        let src = self.lattice.level(k);
        let roots: Vec<RadicalScalar> = src.iter().map(|l| self.sqrt_g(l)).collect();
        Ok(Matrix::from_fn(z.rows(), z.cols(), |i, j| &(z.get(i, j) * &roots[i]) * &roots[j]))
    }

    /// Inertia of the Hodge–Riemann form on all of level `k`.
    pub fn hr_signature(&self, k: usize, c_list: &[SymElement]) -> Result<Inertia> {
        self.hr_gram_z(k, c_list)?.signature()
    }

    /// `z`-coordinate kernel of `x ↦ x · ℓ_{C₀} · ℓ_C`, which lands in
    /// degree `n − k + 1`. For `k = 0` the primitive space is taken to be
    /// `{0}`: the Lefschetz functional `x ↦ top(x · ℓ_C)` is positive on the unit.
    fn primitive_z(&self, k: usize, c0: &SymElement, c_list: &[SymElement]) -> Result<Vec<Vec<Rational>>> {
        self.check_cone_list(k, c_list)?;
        if !self.cone_membership(c0) {
            return Err(Error::NotInCone);
        }
        if k == 0 {
            return Ok(Vec::new());
        }
        let mut all = Vec::with_capacity(c_list.len() + 1);
        all.push(c0.clone());
        all.extend(c_list.iter().cloned());
        let (_, m) = self.z_map(k, &all)?;
        let m = m.to_rational().ok_or(Error::InvalidInput("cone elements are not rational in the z basis".into()))?;
        Ok(m.kernel())
    }

    /// Basis of the primitive subspace of level `k`, in the `x` basis.
    pub fn primitive_basis(&self, k: usize, c0: &SymElement, c_list: &[SymElement]) -> Result<Vec<SymElement>> {
        let ker = self.primitive_z(k, c0, c_list)?;
        Ok(ker
            .iter()
            .map(|v| {
                let z: Vec<RadicalScalar> = v.iter().map(|x| RadicalScalar::from_rational(x.clone())).collect();
                self.from_z(k, &z)
            })
            .collect())
    }

    /// Inertia of the Hodge–Riemann form restricted to the primitive subspace.
    pub fn primitive_signature(&self, k: usize, c0: &SymElement, c_list: &[SymElement]) -> Result<Inertia> {
        let ker = self.primitive_z(k, c0, c_list)?;
        if ker.is_empty() {
            return Ok(Inertia::default());
        }
        let g = self.hr_gram_z(k, c_list)?;
        let g = g.to_rational().ok_or(Error::InvalidInput("Gram matrix is not rational in the z basis".into()))?;
        let kmat = Matrix::from_rows(ker, g.cols())?.transpose();
        let restricted = kmat.transpose().mul_mat(&g)?.mul_mat(&kmat)?;
        restricted.signature()
    }

    /// Products of all basis pairs from levels `k` and `l`, `x` basis.
    pub fn multiplication_table(&self, k: usize, l: usize) -> Result<Vec<TableEntry<RadicalScalar>>> {
        let mut out = Vec::new();
        let n = self.ambient_dim();
        for (i, a) in self.lattice.level(k).iter().enumerate() {
            for (j, b) in self.lattice.level(l).iter().enumerate() {
                let mut product = Vec::new();
                if k + l <= n {
                    let s = sine(a, b)?;
                    if !s.is_zero() {
                        let pos = self.lattice.index_of(&a.sum(b)?).ok_or(Error::ArrangementMismatch)?;
                        product.push((pos, s));
                    }
                }
                out.push(TableEntry { left: i, right: j, product });
            }
        }
        Ok(out)
    }

    /// Möbius algebra table: all structure constants replaced by 1.
    pub fn mobius_table(&self, k: usize, l: usize) -> Result<Vec<TableEntry<Rational>>> {
        let mut out = Vec::new();
        for (i, a) in self.lattice.level(k).iter().enumerate() {
            for (j, b) in self.lattice.level(l).iter().enumerate() {
                let p = MobiusElement::basis(a.clone()).multiply(&MobiusElement::basis(b.clone()))?;
                let product = p
                    .coeffs()
                    .iter()
                    .map(|(s, c)| (self.lattice.index_of(s).expect("sums of lattice members"), c.clone()))
                    .collect();
                out.push(TableEntry { left: i, right: j, product });
            }
        }
        Ok(out)
    }

    /// Cone element from rational line weights in the arrangement's order.
    pub fn cone_element(&self, weights: &[Rational]) -> Result<SymElement> {
        cone_element(&self.e, weights)
    }

    /// Lines as rational vectors, in arrangement order.
    pub fn line_vectors(&self) -> Vec<Vec<Rational>> {
        self.e.lines().iter().map(|l| to_rational_vec(l)).collect()
    }
}
