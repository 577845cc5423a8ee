//! Seeded generators for arrangements, polytopes, cone elements and
//! degree-one classes.

use num_bigint::BigInt;
use polyalg_core::arrangement::LineArrangement;
use polyalg_core::geometry::{Polytope, Zonotope};
use polyalg_core::linalg::{to_rational_vec, Matrix};
use polyalg_core::measure::WeightedDirections;
use polyalg_core::scalar::{int, rat};
use polyalg_core::Rational;
use rand::Rng;

use crate::error::{HarnessError, Result};

/// Attempts before a generator reports exhaustion.
pub const MAX_ATTEMPTS: usize = 1000;

/// Largest denominator of random polytope coordinates.
pub const MAX_DENOMINATOR: i64 = 8;

/// `count` distinct lines with integer entries in `[−bound, bound]`
/// spanning ℝⁿ.
pub fn random_arrangement<R: Rng>(rng: &mut R, n: usize, count: usize, bound: i64) -> Result<LineArrangement> {
    for _ in 0..MAX_ATTEMPTS {
        let lines: Vec<Vec<i64>> = (0..count).map(|_| (0..n).map(|_| rng.random_range(-bound..=bound)).collect()).collect();
        if let Ok(e) = LineArrangement::from_i64(&lines, n) {
            return Ok(e);
        }
    }
    Err(HarnessError::Exhausted { what: format!("{count} spanning lines in dimension {n}"), attempts: MAX_ATTEMPTS })
}

/// Uniform rational in `[−1, 1]` with denominator at most 8.
pub fn random_coordinate<R: Rng>(rng: &mut R) -> Rational {
    let d = rng.random_range(1..=MAX_DENOMINATOR);
    rat(rng.random_range(-d..=d), d)
}

/// Hull of `m` random points of `[−1, 1]ⁿ`, redrawn until full-dimensional.
pub fn random_polytope<R: Rng>(rng: &mut R, n: usize, m: usize) -> Result<Polytope> {
    for _ in 0..MAX_ATTEMPTS {
        let pts: Vec<Vec<Rational>> = (0..m).map(|_| (0..n).map(|_| random_coordinate(rng)).collect()).collect();
        if let Ok(p) = Polytope::hull(&pts, n) {
            if p.is_full_dimensional() {
                return Ok(p);
            }
        }
    }
    Err(HarnessError::Exhausted { what: format!("full-dimensional hull of {m} points in dimension {n}"), attempts: MAX_ATTEMPTS })
}

/// Positive rational `a / b` with `1 ≤ a ≤ 8`, `1 ≤ b ≤ 4`.
pub fn random_positive<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.random_range(1..=8), rng.random_range(1..=4))
}

pub fn random_weights<R: Rng>(rng: &mut R, count: usize) -> Vec<Rational> {
    (0..count).map(|_| random_positive(rng)).collect()
}

/// Zonotope `Σ w_i [−ξ_i, ξ_i] / 2` over the lines of `e`, random weights.
pub fn random_line_zonotope<R: Rng>(rng: &mut R, e: &LineArrangement) -> Result<Zonotope> {
    let gens = e
        .lines()
        .iter()
        .map(|l| {
            let w = random_positive(rng);
            to_rational_vec(l).into_iter().map(|x| x * &w).collect()
        })
        .collect();
    Ok(Zonotope::new(gens, e.ambient_dim())?)
}

/// Zonotope from `g` random integer generators with entries in
/// `[−bound, bound]`, redrawn until full-dimensional.
pub fn random_zonotope<R: Rng>(rng: &mut R, n: usize, g: usize, bound: i64) -> Result<Zonotope> {
    for _ in 0..MAX_ATTEMPTS {
        let gens: Vec<Vec<i64>> = (0..g).map(|_| (0..n).map(|_| rng.random_range(-bound..=bound)).collect()).collect();
        if gens.iter().any(|v| v.iter().all(|&x| x == 0)) {
            continue;
        }
        let big: Vec<Vec<BigInt>> = gens.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
        if Matrix::from_int_rows(&big, n)?.rank() < n {
            continue;
        }
        let rows = big.iter().map(|v| to_rational_vec(v)).collect();
        return Ok(Zonotope::new(rows, n)?);
    }
    Err(HarnessError::Exhausted { what: format!("full-dimensional zonotope in dimension {n}"), attempts: MAX_ATTEMPTS })
}

/// Random element of the kernel of `(d_L) ↦ Σ d_L ξ_L`, small integer
/// combination of a kernel basis.
fn random_circuit<R: Rng>(rng: &mut R, e: &LineArrangement) -> Result<Vec<Rational>> {
    let n = e.ambient_dim();
    let cols: Vec<Vec<Rational>> = e.lines().iter().map(|l| to_rational_vec(l)).collect();
    let m = Matrix::from_rows(cols, n)?.transpose();
    let mut d = vec![Rational::from_integer(0.into()); e.len()];
    for v in m.kernel() {
        let c = int(rng.random_range(-3..=3));
        for (di, vi) in d.iter_mut().zip(&v) {
            *di += vi * &c;
        }
    }
    Ok(d)
}

/// Nonnegative centered measure on `±E` that is in general not symmetric:
/// the facet measure of a polytope with normals on `E`.
///
/// With `d` in the kernel of the centering map, line `L` gets mass
/// `max(d_L, 0) + t_L` at `+ξ_L` and `max(−d_L, 0) + t_L` at `−ξ_L`.
pub fn random_body_measure<R: Rng>(rng: &mut R, e: &LineArrangement) -> Result<WeightedDirections> {
    let zero = Rational::from_integer(0.into());
    let d = random_circuit(rng, e)?;
    let mut out = WeightedDirections::new(e.ambient_dim());
    for (line, dl) in e.lines().iter().zip(&d) {
        let t = random_positive(rng);
        let plus = dl.clone().max(zero.clone()) + &t;
        let minus = (-dl).max(zero.clone()) + &t;
        out.add_primitive(line.clone(), plus);
        out.add_primitive(line.iter().map(|x| -x).collect(), minus);
    }
    Ok(out)
}

/// Signed centered measure on `±E`: a random circuit plus a symmetric part
/// with integer weights of both signs.
pub fn random_signed_measure<R: Rng>(rng: &mut R, e: &LineArrangement) -> Result<WeightedDirections> {
    let d = random_circuit(rng, e)?;
    let mut out = WeightedDirections::new(e.ambient_dim());
    for (line, dl) in e.lines().iter().zip(&d) {
        let s = int(rng.random_range(-4..=4));
        out.add_primitive(line.clone(), dl + &s);
        out.add_primitive(line.iter().map(|x| -x).collect(), s);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream;
    use num_traits::Signed;
    use proptest::prelude::*;

    #[test]
    fn arrangements_span_and_respect_bounds() {
        let mut rng = stream(1, "arr");
        for n in 2..=5 {
            let e = random_arrangement(&mut rng, n, n + 2, 3).unwrap();
            assert_eq!(e.len(), n + 2);
            assert!(e.lines().iter().flatten().all(|x| x.magnitude() <= &3u32.into()));
        }
        assert!(random_arrangement(&mut rng, 3, 2, 3).is_err());
    }

    #[test]
    fn polytopes_are_full_dimensional_with_small_denominators() {
        let mut rng = stream(2, "poly");
        for n in 2..=4 {
            let p = random_polytope(&mut rng, n, 2 * n + 2).unwrap();
            assert!(p.is_full_dimensional());
            for v in p.vertices().iter().flatten() {
                assert!(v.abs() <= int(1));
                assert!(v.denom() <= &BigInt::from(MAX_DENOMINATOR));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn generated_measures_are_centered(seed in any::<u64>(), n in 2usize..=4, extra in 0usize..=3) {
            let mut rng = stream(seed, "measure");
            let e = random_arrangement(&mut rng, n, n + extra, 3).unwrap();
            let body = random_body_measure(&mut rng, &e).unwrap();
            prop_assert!(body.is_centered());
            prop_assert!(body.is_nonnegative());
            prop_assert!(body.supported_on(&e));
            let signed = random_signed_measure(&mut rng, &e).unwrap();
            prop_assert!(signed.is_centered());
        }

        #[test]
        fn line_zonotopes_are_symmetric_bodies(seed in any::<u64>()) {
            let mut rng = stream(seed, "zono");
            let e = random_arrangement(&mut rng, 3, 4, 2).unwrap();
            let z = random_line_zonotope(&mut rng, &e).unwrap().to_polytope();
            prop_assert!(z.is_centrally_symmetric());
            prop_assert!(z.is_full_dimensional());
        }
    }
}
