//! Brute-force evaluators used to pin normalizations and to check the fast
//! pipelines against each other.
//!
//! The reference value is `χ(ℓ_{P₁} ⋯ ℓ_{P_n})`, computed by
//! [`chi_product_oracle`] from volumes of Minkowski sums in `ℝ^{n(n−1)}`.
//! Every other route is compared with it through [`oracle_calibrate`].

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::degree_one::{arrangement_of_normals, pair_top};
use crate::error::{Error, Result};
use crate::geometry::{mixed_volume_polarization, projection_body, volume_polynomial_coefficient, zonotope_mixed_volume, Polytope};
use crate::linalg::{det_int, primitive_line};
use crate::measure::WeightedDirections;
use crate::scalar::{int, rat, RadicalScalar, Rational};
use crate::sym_algebra::{ell_symmetric, product, SymElement};

/// Largest vertex count per body accepted by the lifted oracles for `n ≥ 3`.
pub const ORACLE_VERTEX_LIMIT: usize = 8;

fn check_bodies(bodies: &[Polytope]) -> Result<usize> {
    let n = bodies.len();
    if !(2..=3).contains(&n) {
        return Err(Error::InvalidInput(alloc::format!("oracles support n in {{2, 3}}, got {n}")));
    }
    if let Some(b) = bodies.iter().find(|b| b.ambient_dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: b.ambient_dim() });
    }
    if n >= 3 && bodies.iter().any(|b| b.vertices().len() > ORACLE_VERTEX_LIMIT) {
        return Err(Error::SizeGuard("more than 8 vertices per body"));
    }
    Ok(n)
}

/// Embeds each `P_i` into `(ℝⁿ)^{n−1}` by a linear map given per block.
fn lift(p: &Polytope, n: usize, block: impl Fn(usize) -> Rational) -> Result<Polytope> {
    let pts: Vec<Vec<Rational>> = p
        .vertices()
        .iter()
        .map(|v| (0..n - 1).flat_map(|j| {
            let f = block(j);
            v.iter().map(move |x| x * &f)
        }).collect())
        .collect();
    Polytope::hull(&pts, n * (n - 1))
}

/// `χ(ℓ_{P₁} ⋯ ℓ_{P_n})` for `n ∈ {2, 3}`.
///
/// The bodies are lifted by `p ↦ (p, …, p)` for the first and
/// `p ↦ −p` in block `i − 1` for the `i`-th; the answer is the coefficient
/// of `Π λᵢ^{n−1}` in the volume of `Σ λᵢ Aᵢ`. For `n = 2` this is the
/// `λμ` coefficient of `vol(λP₁ − μP₂)`.
pub fn chi_product_oracle(bodies: &[Polytope]) -> Result<Rational> {
    let n = check_bodies(bodies)?;
    let lifted: Vec<Polytope> = bodies
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if i == 0 {
                lift(p, n, |_| Rational::one())
            } else {
                lift(p, n, |j| if j + 1 == i { int(-1) } else { Rational::zero() })
            }
        })
        .collect::<Result<_>>()?;
    volume_polynomial_coefficient(&lifted, &alloc::vec![n - 1; n])
}

/// The mixed volume of the bodies `ι_i P_i` projected to the orthogonal
/// complement of the diagonal, with Lebesgue measure there, times
/// `(n(n−1))! / (n−1)!ⁿ`.
///
/// Computed in the basis `e_j − e_n` (`j < n`) of the complement, whose
/// Gram determinant is `nⁿ`.
pub fn wtv_definitional(bodies: &[Polytope]) -> Result<RadicalScalar> {
    let n = check_bodies(bodies)?;
    let inv = rat(1, n as i64);
    let lifted: Vec<Polytope> = bodies
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if i + 1 == n {
                lift(p, n, |_| -inv.clone())
            } else {
                lift(p, n, |j| if j == i { Rational::one() - &inv } else { -inv.clone() })
            }
        })
        .collect::<Result<_>>()?;
    let coeff = volume_polynomial_coefficient(&lifted, &alloc::vec![n - 1; n])?;
    let density = RadicalScalar::sqrt(&Rational::from_integer(BigInt::from(n).pow(n as u32)))?;
    Ok(density.scale(&coeff))
}

/// Entries of a symmetric measure grouped by line: `(ξ_L, w)` with `ξ_L`
/// the line's canonical orientation.
fn line_entries(m: &WeightedDirections) -> Result<Vec<(Vec<BigInt>, Rational)>> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(m
        .entries()
        .filter(|(d, _)| primitive_line(&crate::linalg::to_rational_vec(d)).as_deref() == Some(d.as_slice()))
        .map(|(d, w)| (d.clone(), w.clone()))
        .collect())
}

fn det_sum(choices: &[Vec<(Vec<BigInt>, Rational)>]) -> Rational {
    fn rec(i: usize, choices: &[Vec<(Vec<BigInt>, Rational)>], rows: &mut Vec<Vec<BigInt>>, w: Rational, acc: &mut Rational) {
        if i == choices.len() {
            let d = det_int(rows.clone());
            if !d.is_zero() {
                *acc += w * Rational::from_integer(d.abs());
            }
            return;
        }
        for (d, wi) in &choices[i] {
            rows.push(d.clone());
            rec(i + 1, choices, rows, &w * wi, acc);
            rows.pop();
        }
    }
    let mut acc = Rational::zero();
    rec(0, choices, &mut Vec::new(), Rational::one(), &mut acc);
    acc
}

/// `Σ |det(ξ_{L₁}, …, ξ_{L_n})| Π w_i(L_i)` over one line per symmetric
/// measure.
pub fn line_kernel(measures: &[WeightedDirections]) -> Result<Rational> {
    let n = measures.len();
    if let Some(m) = measures.iter().find(|m| m.ambient_dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: m.ambient_dim() });
    }
    let choices: Vec<_> = measures.iter().map(line_entries).collect::<Result<_>>()?;
    Ok(det_sum(&choices))
}

/// The `±`-resolved determinant kernel divided by `2ⁿ`. It agrees with
/// [`line_kernel`] on symmetric measures and is wrong otherwise.
pub fn naive_kernel(measures: &[WeightedDirections]) -> Result<Rational> {
    let n = measures.len();
    if let Some(m) = measures.iter().find(|m| m.ambient_dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: m.ambient_dim() });
    }
    let choices: Vec<Vec<(Vec<BigInt>, Rational)>> =
        measures.iter().map(|m| m.entries().map(|(d, w)| (d.clone(), w.clone())).collect()).collect();
    Ok(det_sum(&choices) / Rational::from_integer(BigInt::from(2).pow(n as u32)))
}

/// The evaluation routes compared by the calibration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    /// `top(ℓ_{C₁} ⋯ ℓ_{C_n})` in the symmetric algebra.
    Symmetric,
    /// `pair_top(S_{P₁}, S_{P₂}, ℓ_{C₃} ⋯ ℓ_{C_n})`.
    PairTop,
    LineKernel,
    /// Exact zonotope formula on the projection bodies.
    ProjectionBody,
    /// Polarized volume of the projection bodies as vertex polytopes.
    Polarization,
    Definitional,
    ChiOracle,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Symmetric => "symmetric_algebra",
            Route::PairTop => "pair_top",
            Route::LineKernel => "line_kernel",
            Route::ProjectionBody => "projection_body",
            Route::Polarization => "polarization",
            Route::Definitional => "wtv_definitional",
            Route::ChiOracle => "chi_oracle",
        }
    }

    /// Whether the route needs every body centrally symmetric.
    pub fn symmetric_only(self) -> bool {
        matches!(self, Route::Symmetric | Route::LineKernel | Route::ProjectionBody | Route::Polarization)
    }
}

/// Value of `route` on a tuple of bodies in `ℝⁿ`.
pub fn evaluate_route(route: Route, bodies: &[Polytope]) -> Result<RadicalScalar> {
    let n = bodies.len();
    if let Some(b) = bodies.iter().find(|b| b.ambient_dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: b.ambient_dim() });
    }
    if route.symmetric_only() && bodies.iter().any(|b| !b.is_centrally_symmetric()) {
        return Err(Error::NotSymmetric);
    }
    let rational = |q: Rational| Ok(RadicalScalar::from_rational(q));
    match route {
        Route::Symmetric => {
            let e = arrangement_of_normals(bodies, n)?;
            let ls: Vec<SymElement> = bodies.iter().map(|b| ell_symmetric(b, &e)).collect::<Result<_>>()?;
            product(n, &ls)?.top_evaluate()
        }
        Route::PairTop => {
            let rest = &bodies[2..];
            let m = if rest.is_empty() {
                SymElement::unit(n)
            } else {
                if rest.iter().any(|b| !b.is_centrally_symmetric()) {
                    return Err(Error::NotSymmetric);
                }
                let e = arrangement_of_normals(rest, n)?;
                let ls: Vec<SymElement> = rest.iter().map(|b| ell_symmetric(b, &e)).collect::<Result<_>>()?;
                product(n, &ls)?
            };
            pair_top(&bodies[0].surface_class()?, &bodies[1].surface_class()?, &m)
        }
        Route::LineKernel => {
            let ms: Vec<WeightedDirections> = bodies.iter().map(Polytope::surface_class).collect::<Result<_>>()?;
            rational(line_kernel(&ms)?)
        }
        Route::ProjectionBody => {
            let zs = bodies.iter().map(projection_body).collect::<Result<Vec<_>>>()?;
            rational(zonotope_mixed_volume(&zs)?)
        }
        Route::Polarization => {
            let zs = bodies.iter().map(projection_body).collect::<Result<Vec<_>>>()?;
            let ps: Vec<(Polytope, usize)> = zs.iter().map(|z| (z.to_polytope(), 1)).collect();
            rational(mixed_volume_polarization(&ps)?)
        }
        Route::Definitional => wtv_definitional(bodies),
        Route::ChiOracle => rational(chi_product_oracle(bodies)?),
    }
}

/// One named tuple of bodies in the reference battery.
#[derive(Clone, Debug)]
pub struct BatteryInstance {
    pub name: String,
    pub bodies: Vec<Polytope>,
}

impl BatteryInstance {
    pub fn is_symmetric(&self) -> bool {
        self.bodies.iter().all(Polytope::is_centrally_symmetric)
    }
}

fn parallelepiped(rows: &[Vec<i64>]) -> Polytope {
    let n = rows.len();
    let mut pts = Vec::new();
    for mask in 0..(1u32 << n) {
        let p: Vec<Rational> = (0..n)
            .map(|c| {
                rows.iter()
                    .enumerate()
                    .map(|(i, r)| int(r[c]) * if mask >> i & 1 == 1 { rat(1, 2) } else { rat(-1, 2) })
                    .sum()
            })
            .collect();
        pts.push(p);
    }
    Polytope::hull(&pts, n).expect("independent edge vectors")
}

fn simplex(pts: &[Vec<i64>]) -> Polytope {
    Polytope::from_i64(pts, pts[0].len()).expect("valid simplex")
}

/// Fixed reference battery: boxes, sheared boxes and simplices.
pub fn reference_battery(n: usize) -> Vec<BatteryInstance> {
    let inst = |name: &str, bodies: Vec<Polytope>| BatteryInstance { name: name.into(), bodies };
    match n {
        2 => {
            let b1 = Polytope::centered_box(&[int(1), int(1)]);
            let b2 = Polytope::centered_box(&[int(2), rat(1, 2)]);
            let s1 = parallelepiped(&[alloc::vec![1, 0], alloc::vec![1, 1]]);
            let s2 = parallelepiped(&[alloc::vec![2, 1], alloc::vec![-1, 3]]);
            let t1 = simplex(&[alloc::vec![0, 0], alloc::vec![1, 0], alloc::vec![0, 1]]);
            let t2 = simplex(&[alloc::vec![0, 0], alloc::vec![3, 1], alloc::vec![-1, 2]]);
            alloc::vec![
                inst("box-box", alloc::vec![b1.clone(), b1.clone()]),
                inst("box-box2", alloc::vec![b1.clone(), b2.clone()]),
                inst("sheared-box", alloc::vec![s1.clone(), b2.clone()]),
                inst("sheared-sheared", alloc::vec![s1.clone(), s2.clone()]),
                inst("simplex-simplex", alloc::vec![t1.clone(), t1.clone()]),
                inst("simplex-box", alloc::vec![t2.clone(), b1.clone()]),
                inst("simplex-sheared", alloc::vec![t1, s2]),
            ]
        }
        3 => {
            let cube = Polytope::unit_cube(3);
            let b = Polytope::centered_box(&[int(1), int(2), rat(1, 2)]);
            let s = parallelepiped(&[alloc::vec![1, 0, 0], alloc::vec![1, 1, 0], alloc::vec![0, 1, 2]]);
            let t = Polytope::standard_simplex(3);
            let t2 = simplex(&[alloc::vec![0, 0, 0], alloc::vec![2, 0, 1], alloc::vec![0, 1, 0], alloc::vec![1, 1, 2]]);
            alloc::vec![
                inst("cube-cube-cube", alloc::vec![cube.clone(), cube.clone(), cube.clone()]),
                inst("box-cube-box", alloc::vec![b.clone(), cube.clone(), b.clone()]),
                inst("sheared-box-cube", alloc::vec![s.clone(), b.clone(), cube.clone()]),
                inst("simplex-simplex-cube", alloc::vec![t.clone(), t.clone(), cube.clone()]),
                inst("simplex-box-sheared", alloc::vec![t2, b, s]),
            ]
        }
        _ => Vec::new(),
    }
}

/// Ratio of one route to the χ oracle across the battery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalibrationRecord {
    pub n: usize,
    pub route: Route,
    pub reference: Route,
    /// The common ratio, if all instances agree.
    pub ratio: Option<RadicalScalar>,
    /// `(instance, route value, reference value)`.
    pub instances: Vec<(String, RadicalScalar, RadicalScalar)>,
}

impl CalibrationRecord {
    pub fn is_consistent(&self) -> bool {
        self.ratio.is_some()
    }
}

/// Ratio `a / b` when `b` is rational and nonzero, else `None`.
fn ratio(a: &RadicalScalar, b: &RadicalScalar) -> Option<RadicalScalar> {
    let q = b.to_rational()?;
    if q.is_zero() {
        return None;
    }
    Some(a.scale(&q.recip()))
}

/// Runs every route on the reference battery and records its ratio to the
/// χ oracle. A record whose ratio varies across instances has `ratio = None`.
pub fn oracle_calibrate(n: usize) -> Result<Vec<CalibrationRecord>> {
    oracle_calibrate_on(n, &reference_battery(n))
}

pub fn oracle_calibrate_on(n: usize, battery: &[BatteryInstance]) -> Result<Vec<CalibrationRecord>> {
    if !(2..=3).contains(&n) {
        return Err(Error::InvalidInput(alloc::format!("calibration supports n in {{2, 3}}, got {n}")));
    }
    let refs: Vec<RadicalScalar> =
        battery.iter().map(|b| evaluate_route(Route::ChiOracle, &b.bodies)).collect::<Result<_>>()?;
    let routes = [Route::Symmetric, Route::PairTop, Route::LineKernel, Route::ProjectionBody, Route::Polarization, Route::Definitional];
    let mut out = Vec::new();
    for route in routes {
        let mut instances = Vec::new();
        let mut common: Option<Option<RadicalScalar>> = None;
        for (inst, r) in battery.iter().zip(&refs) {
            let applicable = match route {
                r if r.symmetric_only() => inst.is_symmetric(),
                Route::PairTop => inst.bodies[2..].iter().all(Polytope::is_centrally_symmetric),
                _ => true,
            };
            if !applicable {
                continue;
            }
            let v = evaluate_route(route, &inst.bodies)?;
            let q = ratio(&v, r);
            common = Some(match common {
                None => q,
                Some(prev) if prev == q => prev,
                Some(_) => None,
            });
            instances.push((inst.name.clone(), v, r.clone()));
        }
        out.push(CalibrationRecord { n, route, reference: Route::ChiOracle, ratio: common.flatten(), instances });
    }
    Ok(out)
}
