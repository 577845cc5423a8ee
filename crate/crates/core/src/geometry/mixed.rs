//! Mixed volumes by exact polarization of the volume polynomial.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::polytope::Polytope;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::measure::WeightedDirections;
use crate::scalar::{int, Rational};

pub fn multinomial(n: usize, alpha: &[usize]) -> BigInt {
    let fact = |k: usize| (1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i));
    alpha.iter().fold(fact(n), |acc, &a| acc / fact(a))
}

/// All `β ∈ ℕ^m` with `|β| = total` and `β ≤ caps` componentwise.
fn compositions(m: usize, total: usize, caps: &[usize]) -> Vec<Vec<usize>> {
    fn rec(i: usize, left: usize, caps: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 == caps.len() {
            if left <= caps[i] {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for b in 0..=left.min(caps[i]) {
            cur.push(b);
            rec(i + 1, left - b, caps, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(0, total, caps, &mut Vec::new(), &mut out);
    }
    out
}

fn monomial(lambda: &[usize], beta: &[usize]) -> Rational {
    let v = lambda.iter().zip(beta).fold(BigInt::one(), |acc, (&l, &b)| acc * BigInt::from(l).pow(b as u32));
    Rational::from_integer(v)
}

/// `vol(Σ λᵢ Kᵢ)` for nonnegative integer dilations.
fn dilated_sum_volume(bodies: &[Polytope], lambda: &[usize]) -> Result<Rational> {
    let mut acc: Option<Polytope> = None;
    for (k, &l) in bodies.iter().zip(lambda) {
        if l == 0 {
            continue;
        }
        let scaled = k.scale(&int(l as i64));
        acc = Some(match acc {
            None => scaled,
            Some(a) => a.minkowski_sum(&scaled)?,
        });
    }
    Ok(acc.map(|p| p.volume_or_zero()).unwrap_or_else(Rational::zero))
}

/// Coefficient of `λ^α` in `vol(Σ λᵢ Kᵢ)`.
///
/// Only monomials with `βᵢ ≤ dim Kᵢ` can occur. Evaluation points are drawn
/// greedily from the simplex lattice `{λ ∈ ℕ^m : |λ| = n}` until the
/// restricted Vandermonde system is square and invertible.
pub fn volume_polynomial_coefficient(bodies: &[Polytope], alpha: &[usize]) -> Result<Rational> {
    let Some(first) = bodies.first() else {
        return Err(Error::InvalidInput("no bodies".into()));
    };
    let n = first.ambient_dim();
    if let Some(b) = bodies.iter().find(|b| b.ambient_dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: b.ambient_dim() });
    }
    if alpha.len() != bodies.len() || alpha.iter().sum::<usize>() != n {
        return Err(Error::InvalidInput("multiplicities must sum to the ambient dimension".into()));
    }
    let caps: Vec<usize> = bodies.iter().map(Polytope::affine_dim).collect();
    if alpha.iter().zip(&caps).any(|(a, c)| a > c) {
        return Ok(Rational::zero());
    }
    let m = bodies.len();
    let monomials = compositions(m, n, &caps);
    let target = monomials.iter().position(|b| b == alpha).expect("alpha respects the caps");
    let full = alloc::vec![n; m];
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut points: Vec<Vec<usize>> = Vec::new();
    for lambda in compositions(m, n, &full) {
        if rows.len() == monomials.len() {
            break;
        }
        let row: Vec<Rational> = monomials.iter().map(|b| monomial(&lambda, b)).collect();
        rows.push(row);
        if Matrix::from_rows(rows.clone(), monomials.len())?.rank() == rows.len() {
            points.push(lambda);
        } else {
            rows.pop();
        }
    }
    if rows.len() != monomials.len() {
        return Err(Error::Degenerate("polarization system is singular"));
    }
    let values: Vec<Rational> =
        points.iter().map(|l| dilated_sum_volume(bodies, l)).collect::<Result<_>>()?;
    let sol = Matrix::from_rows(rows, monomials.len())?
        .solve(&values)?
        .ok_or(Error::Degenerate("polarization system is inconsistent"))?;
    Ok(sol[target].clone())
}

/// Mixed volume `V(K₁[a₁], …, K_m[a_m])` with `Σ aᵢ = n`.
pub fn mixed_volume_polarization(bodies: &[(Polytope, usize)]) -> Result<Rational> {
    let polys: Vec<Polytope> = bodies.iter().map(|(p, _)| p.clone()).collect();
    let alpha: Vec<usize> = bodies.iter().map(|(_, a)| *a).collect();
    let n = polys.first().map(Polytope::ambient_dim).unwrap_or(0);
    let c = volume_polynomial_coefficient(&polys, &alpha)?;
    Ok(c / Rational::from_integer(multinomial(n, &alpha)))
}

/// `V(A, B) = (vol(A+B) − vol A − vol B)/2` for planar, possibly degenerate, polygons.
pub fn mixed_area(a: &Polytope, b: &Polytope) -> Result<Rational> {
    if a.ambient_dim() != 2 || b.ambient_dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: a.ambient_dim().max(b.ambient_dim()) });
    }
    let s = a.minkowski_sum(b)?;
    Ok((s.volume_or_zero() - a.volume_or_zero() - b.volume_or_zero()) / int(2))
}

/// `V(A, B) = ½ Σ_{(ξ,w) ∈ S_A} w · h_B(ξ)`, valid for any signed edge measure.
pub fn mixed_area_support(surface_a: &WeightedDirections, b: &Polytope) -> Rational {
    let total: Rational = surface_a.entries().map(|(d, w)| w * b.support_int(d)).sum();
    total / int(2)
}
