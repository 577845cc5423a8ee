//! Degree-one classes as centered signed measures and their top-degree
//! pairings against symmetric products.
//!
//! `pair_top(μ, ν, m)` evaluates `χ(ℓ_μ · ℓ_ν · m)` for a degree `n − 2`
//! symmetric element `m = Σ c_M x_M`. Each `x_M` cuts the computation down to
//! the plane `W = M^⊥`: both measures are restricted to `W`, expressed in an
//! orthogonal integer basis `B = (b₁, b₂)` of `W`, paired by the planar
//! formula, and divided by `|b₁||b₂|` to return to the ambient metric.
//!
//! The planar pairing is `χ(μ, ν) = Σ_{(ξ,w) ∈ μ} w · h_{Q_ν}(−ξ)` where
//! `Q_ν` is any formal difference of polygons with edge measure `ν`. On
//! surface measures this is `vol(P − Q) − vol P − vol Q`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arrangement::LineArrangement;
use crate::error::{Error, Result};
use crate::geometry::{mixed_area_support, polygon_from_measure, Polytope};
use crate::linalg::{dot, primitive_direction, primitive_line, to_rational_vec, Inertia, Matrix, Subspace};
use crate::measure::WeightedDirections;
use crate::scalar::{int, RadicalScalar, Rational};
use crate::sym_algebra::{cone_membership, ell_symmetric, product, SymElement};

/// `σ(μ) = −a_*μ`.
pub fn euler_verdier_deg1(mu: &WeightedDirections) -> WeightedDirections {
    mu.antipode().negated()
}

/// Pushforward to `W` along the orthogonal projection; each entry keeps its
/// mass times `|π_W(û)|`, zero projections are dropped.
pub fn restrict(mu: &WeightedDirections, w: &Subspace) -> Result<WeightedDirections> {
    let n = mu.ambient_dim();
    if w.ambient_dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: w.ambient_dim() });
    }
    let p = w.projection()?;
    let mut out = WeightedDirections::new(n);
    for (d, wt) in mu.entries() {
        let img = p.mul_vec(&to_rational_vec(d))?;
        if let Some((prim, c)) = primitive_direction(&img) {
            out.add_primitive(prim, wt * c);
        }
    }
    Ok(out)
}

/// Planar measure in the coordinates of `basis`: a functional `ξ` on `W`
/// becomes `(ξ·b₁, ξ·b₂)`.
fn plane_coordinates(mu: &WeightedDirections, basis: &[Vec<Rational>]) -> Result<WeightedDirections> {
    let mut out = WeightedDirections::new(2);
    for (d, w) in mu.entries() {
        let d = to_rational_vec(d);
        let coords: Vec<Rational> = basis.iter().map(|b| dot(&d, b)).collect();
        if coords.iter().any(|c| !c.is_zero()) {
            out.add(&coords, w.clone())?;
        }
    }
    Ok(out)
}

fn spans_plane(mu: &WeightedDirections) -> bool {
    let dirs = mu.directions_as_rational();
    !dirs.is_empty() && Matrix::from_rows(dirs, 2).map(|m| m.rank() == 2).unwrap_or(false)
}

fn square_measure() -> WeightedDirections {
    WeightedDirections::from_i64(2, &[(alloc::vec![1, 0], int(1)), (alloc::vec![-1, 0], int(1)), (alloc::vec![0, 1], int(1)), (alloc::vec![0, -1], int(1))])
        .expect("valid planar directions")
}

/// Polygons `(A, B)` with `μ = S_A − S_B` for a centered planar measure.
///
/// Both parts of the sign split get the same centering correction, and a
/// unit square measure is added to both whenever either part is degenerate.
pub fn decompose_2d(mu: &WeightedDirections) -> Result<(Polytope, Polytope)> {
    if mu.ambient_dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: mu.ambient_dim() });
    }
    if !mu.is_centered() {
        return Err(Error::NotCentered);
    }
    let (mut pos, mut neg) = mu.split();
    let c = pos.centroid();
    if c.iter().any(|x| !x.is_zero()) {
        let opp: Vec<Rational> = c.iter().map(|x| -x).collect();
        pos.add(&opp, Rational::one())?;
        neg.add(&opp, Rational::one())?;
    }
    if !spans_plane(&pos) || !spans_plane(&neg) {
        let sq = square_measure();
        pos = pos.blaschke_sum(&sq)?;
        neg = neg.blaschke_sum(&sq)?;
    }
    Ok((polygon_from_measure(&pos)?, polygon_from_measure(&neg)?))
}

/// `Σ_{(ξ,w) ∈ μ} w · h(−ξ)` for `h = h_A − h_B`.
fn planar_against(mu: &WeightedDirections, ab: &(Polytope, Polytope)) -> Rational {
    let two = int(2);
    (mixed_area_support(mu, &ab.0.negate()) - mixed_area_support(mu, &ab.1.negate())) * two
}

/// Planar pairing `χ(ℓ_μ ℓ_ν)` of two centered measures in ℝ².
pub fn planar_pairing(mu: &WeightedDirections, nu: &WeightedDirections) -> Result<Rational> {
    if !mu.is_centered() {
        return Err(Error::NotCentered);
    }
    Ok(planar_against(mu, &decompose_2d(nu)?))
}

/// One plane `W = M^⊥` of a symmetric element: its coordinate basis and
/// the factor `c_M / (|b₁||b₂|)`.
#[derive(Clone, Debug)]
struct PlaneTerm {
    basis: Vec<Vec<Rational>>,
    factor: RadicalScalar,
}

/// Precomputed plane terms of a degree `n − 2` symmetric element, so that
/// many pairings against the same element share the setup.
#[derive(Clone, Debug)]
pub struct Pairing {
    n: usize,
    terms: Vec<PlaneTerm>,
}

impl Pairing {
    pub fn new(m: &SymElement) -> Result<Self> {
        let n = m.ambient_dim();
        if n < 2 {
            return Err(Error::InvalidInput("pairing needs ambient dimension at least 2".into()));
        }
        if m.degree() != n - 2 {
            return Err(Error::DegreeMismatch { expected: n - 2, found: m.degree() });
        }
        let mut terms = Vec::with_capacity(m.coeffs().len());
        for (sub, c) in m.coeffs() {
            let basis = sub.orthogonal_complement().orthogonal_basis();
            let norms: Rational = basis.iter().map(|b| dot(b, b)).product();
            let factor = c * &RadicalScalar::sqrt(&norms.recip())?;
            terms.push(PlaneTerm { basis, factor });
        }
        Ok(Self { n, terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, mu: &WeightedDirections) -> Result<()> {
        if mu.ambient_dim() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: mu.ambient_dim() });
        }
        if !mu.is_centered() {
            return Err(Error::NotCentered);
        }
        Ok(())
    }

    pub fn pair(&self, mu: &WeightedDirections, nu: &WeightedDirections) -> Result<RadicalScalar> {
        self.check(mu)?;
        self.check(nu)?;
        let mut total = RadicalScalar::zero();
        for t in &self.terms {
            let a = plane_coordinates(mu, &t.basis)?;
            let b = plane_coordinates(nu, &t.basis)?;
            total += &t.factor.scale(&planar_pairing(&a, &b)?);
        }
        Ok(total)
    }

    /// Matrix `[pair(xs[i], ys[j])]`, decomposing each `y` once per plane.
    pub fn matrix(&self, xs: &[WeightedDirections], ys: &[WeightedDirections]) -> Result<Matrix<RadicalScalar>> {
        for m in xs.iter().chain(ys) {
            self.check(m)?;
        }
        let mut out: Matrix<RadicalScalar> = Matrix::zeros(xs.len(), ys.len());
        for t in &self.terms {
            let px: Vec<WeightedDirections> = xs.iter().map(|x| plane_coordinates(x, &t.basis)).collect::<Result<_>>()?;
            let dy: Vec<(Polytope, Polytope)> =
                ys.iter().map(|y| decompose_2d(&plane_coordinates(y, &t.basis)?)).collect::<Result<_>>()?;
            for (i, x) in px.iter().enumerate() {
                for (j, y) in dy.iter().enumerate() {
                    let v = t.factor.scale(&planar_against(x, y));
                    let mut cur = out.get(i, j).clone();
                    cur += &v;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }
}

/// `χ(ℓ_μ · ℓ_ν · m)` for centered `μ, ν` and a symmetric `m` of degree `n − 2`.
pub fn pair_top(mu: &WeightedDirections, nu: &WeightedDirections, m: &SymElement) -> Result<RadicalScalar> {
    Pairing::new(m)?.pair(mu, nu)
}

/// Basis of `A¹(E)`: centered signed measures on the directions `±ξ_L`.
///
/// Variables are ordered `(ξ₀, −ξ₀, ξ₁, −ξ₁, …)`; the basis is the kernel
/// of the centering map read off its reduced echelon form.
pub fn degree_one_basis(e: &LineArrangement) -> Vec<WeightedDirections> {
    let n = e.ambient_dim();
    let dirs = signed_directions(e);
    let centering = Matrix::from_fn(n, dirs.len(), |i, j| Rational::from_integer(dirs[j][i].clone()));
    centering.kernel().iter().map(|v| measure_from_coords(n, &dirs, v)).collect()
}

fn signed_directions(e: &LineArrangement) -> Vec<Vec<num_bigint::BigInt>> {
    e.lines().iter().flat_map(|l| [l.clone(), l.iter().map(|x| -x).collect()]).collect()
}

fn measure_from_coords(n: usize, dirs: &[Vec<num_bigint::BigInt>], v: &[Rational]) -> WeightedDirections {
    let mut m = WeightedDirections::new(n);
    for (d, w) in dirs.iter().zip(v) {
        m.add_primitive(d.clone(), w.clone());
    }
    m
}

/// Coordinates of a measure on `±E` in [`degree_one_basis`].
pub fn degree_one_coordinates(e: &LineArrangement, basis: &[WeightedDirections], mu: &WeightedDirections) -> Result<Vec<Rational>> {
    if !mu.supported_on(e) {
        return Err(Error::OffArrangement);
    }
    if !mu.is_centered() {
        return Err(Error::NotCentered);
    }
    let dirs = signed_directions(e);
    let b = Matrix::from_fn(dirs.len(), basis.len(), |i, j| basis[j].weight(&dirs[i]));
    let v: Vec<Rational> = dirs.iter().map(|d| mu.weight(d)).collect();
    b.solve(&v)?.ok_or(Error::Degenerate("measure outside the degree-one span"))
}

fn check_cone_list(e: &LineArrangement, c_list: &[SymElement]) -> Result<()> {
    let n = e.ambient_dim();
    if n < 2 || c_list.len() != n - 2 {
        return Err(Error::InvalidInput(alloc::format!("expected {} cone elements", n.saturating_sub(2))));
    }
    if c_list.iter().any(|c| !cone_membership(c, e)) {
        return Err(Error::NotInCone);
    }
    Ok(())
}

/// The degree-one Hodge–Riemann form on [`degree_one_basis`].
#[derive(Clone, Debug)]
pub struct DegreeOneForm {
    pub basis: Vec<WeightedDirections>,
    pub gram: Matrix<RadicalScalar>,
    /// `ℓ_C` had no terms, so the form vanishes identically.
    pub degenerate: bool,
}

/// Gram matrix of `q(x, y) = χ(σ(x) · y · ℓ_C)` on `A¹(E)`.
pub fn hr_gram_deg1(e: &LineArrangement, c_list: &[SymElement]) -> Result<DegreeOneForm> {
    check_cone_list(e, c_list)?;
    let ell = product(e.ambient_dim(), c_list)?;
    let pairing = Pairing::new(&ell)?;
    let basis = degree_one_basis(e);
    let twisted: Vec<WeightedDirections> = basis.iter().map(euler_verdier_deg1).collect();
    let gram = pairing.matrix(&twisted, &basis)?;
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetricMatrix);
    }
    Ok(DegreeOneForm { basis, gram, degenerate: pairing.is_zero() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HrVerdict {
    /// Positive definite on the primitive hyperplane.
    Pass,
    Fail,
    /// `q(Q, Q) < 0` does not hold, so no verdict is drawn.
    HypothesisFailed,
    /// The product `ℓ_C` vanished.
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HrEqualityReport {
    /// `q(Q, Q) = χ(σ(Q) · Q · ℓ_C)`; the hyperbolic hypothesis asks for it to be negative.
    pub q_value: RadicalScalar,
    pub a1_dim: usize,
    pub primitive_dim: usize,
    pub inertia: Option<Inertia>,
    pub verdict: HrVerdict,
}

/// Signature of `q` on the hyperplane `H = {x : q(x, Q) = 0}` of `A¹(E)`.
///
/// With `q(Q, Q) < 0`, the form is expected to be positive definite on `H`,
/// which forces `x = 0` whenever `q(x, Q) = q(x, x) = 0`.
pub fn hr_equality_check(e: &LineArrangement, q: &WeightedDirections, c_list: &[SymElement]) -> Result<HrEqualityReport> {
    let form = hr_gram_deg1(e, c_list)?;
    let d = form.basis.len();
    let coords = degree_one_coordinates(e, &form.basis, q)?;
    let coords: Vec<RadicalScalar> = coords.into_iter().map(RadicalScalar::from_rational).collect();
    let functional = form.gram.mul_vec(&coords)?;
    let q_value: RadicalScalar = coords.iter().zip(&functional).map(|(a, b)| a * b).sum();
    let mut report = HrEqualityReport { q_value, a1_dim: d, primitive_dim: 0, inertia: None, verdict: HrVerdict::Degenerate };
    if form.degenerate {
        return Ok(report);
    }
    if !report.q_value.is_negative() {
        report.verdict = HrVerdict::HypothesisFailed;
        return Ok(report);
    }
    let restricted = restrict_form(&form.gram, &functional)?;
    let inertia = restricted.signature()?;
    report.primitive_dim = restricted.rows();
    report.verdict = if inertia.positive == restricted.rows() { HrVerdict::Pass } else { HrVerdict::Fail };
    report.inertia = Some(inertia);
    Ok(report)
}

/// `KᵀGK` for a kernel basis `K` of the functional `f ≠ 0`; division free
/// so that radical entries stay in the ring.
fn restrict_form(g: &Matrix<RadicalScalar>, f: &[RadicalScalar]) -> Result<Matrix<RadicalScalar>> {
    let d = f.len();
    let p = f.iter().position(|x| !x.is_zero()).ok_or(Error::Degenerate("zero functional"))?;
    if let (Some(gr), Some(fr)) = (g.to_rational(), f.iter().map(RadicalScalar::to_rational).collect::<Option<Vec<_>>>()) {
        let row = Matrix::from_rows(alloc::vec![fr], d)?;
        let ker = row.kernel();
        let k = Matrix::from_rows(ker, d)?.transpose();
        let r = k.transpose().mul_mat(&gr)?.mul_mat(&k)?;
        return Ok(r.map(|x| RadicalScalar::from_rational(x.clone())));
    }
    let cols: Vec<Vec<RadicalScalar>> = (0..d)
        .filter(|&j| j != p)
        .map(|j| {
            let mut v = alloc::vec![RadicalScalar::zero(); d];
            v[j] = f[p].clone();
            v[p] = -f[j].clone();
            v
        })
        .collect();
    let k = Matrix::from_rows(cols, d)?;
    k.mul_mat(g)?.mul_mat(&k.transpose())
}

/// Rank of `x ↦ (x|_{L^⊥})_{L ∈ E}` on `A¹(E)`, with the expected full rank `2|E| − n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RestrictionRank {
    pub rank: usize,
    pub expected: usize,
}

impl RestrictionRank {
    pub fn is_injective(&self) -> bool {
        self.rank == self.expected
    }
}

pub fn restriction_rank(e: &LineArrangement) -> Result<RestrictionRank> {
    let basis = degree_one_basis(e);
    // rows keyed by (line, restricted direction)
    let mut rows: alloc::collections::BTreeMap<(usize, Vec<num_bigint::BigInt>), Vec<Rational>> = Default::default();
    for i in 0..e.len() {
        let w = e.line_subspace(i).orthogonal_complement();
        for (j, b) in basis.iter().enumerate() {
            for (d, wt) in restrict(b, &w)?.entries() {
                let row = rows.entry((i, d.clone())).or_insert_with(|| alloc::vec![Rational::zero(); basis.len()]);
                row[j] += wt;
            }
        }
    }
    let m = Matrix::from_rows(rows.into_values().collect(), basis.len())?;
    Ok(RestrictionRank { rank: m.rank(), expected: 2 * e.len() - e.ambient_dim() })
}

/// Alexandrov–Fenchel values for `(K, L; C₁, …, C_{n−2})`:
/// `a = χ(ℓ_K ℓ_{−L} ℓ_C)`, `b = χ(ℓ_K ℓ_{−K} ℓ_C)`, `c = χ(ℓ_L ℓ_{−L} ℓ_C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AfReport {
    pub mixed: RadicalScalar,
    pub left: RadicalScalar,
    pub right: RadicalScalar,
    /// `a² − bc`.
    pub slack: RadicalScalar,
    pub holds: bool,
}

/// Line arrangement spanned by the facet normals of symmetric polytopes.
pub fn arrangement_of_normals(bodies: &[Polytope], n: usize) -> Result<LineArrangement> {
    let mut lines: Vec<Vec<num_bigint::BigInt>> = Vec::new();
    for b in bodies {
        for f in b.facets() {
            let l = primitive_line(&to_rational_vec(&f.normal)).ok_or(Error::Degenerate("zero facet normal"))?;
            if !lines.contains(&l) {
                lines.push(l);
            }
        }
    }
    lines.sort();
    LineArrangement::new(lines, n)
}

pub fn af_check(k: &Polytope, l: &Polytope, c_list: &[Polytope]) -> Result<AfReport> {
    let n = k.ambient_dim();
    if l.ambient_dim() != n || c_list.iter().any(|c| c.ambient_dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: l.ambient_dim() });
    }
    if n < 2 || c_list.len() != n - 2 {
        return Err(Error::InvalidInput(alloc::format!("expected {} symmetric bodies", n.saturating_sub(2))));
    }
    let ell = if c_list.is_empty() {
        SymElement::unit(n)
    } else {
        let e = arrangement_of_normals(c_list, n)?;
        let factors: Vec<SymElement> = c_list.iter().map(|c| ell_symmetric(c, &e)).collect::<Result<_>>()?;
        product(n, &factors)?
    };
    let pairing = Pairing::new(&ell)?;
    let sk = k.surface_class()?;
    let sl = l.surface_class()?;
    let mixed = pairing.pair(&sk, &sl.antipode())?;
    let left = pairing.pair(&sk, &sk.antipode())?;
    let right = pairing.pair(&sl, &sl.antipode())?;
    let slack = &(&mixed * &mixed) - &(&left * &right);
    let holds = !slack.is_negative();
    Ok(AfReport { mixed, left, right, slack, holds })
}
