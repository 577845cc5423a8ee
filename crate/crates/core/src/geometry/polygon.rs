//! Planar reconstruction of a polygon from its edge-normal measure.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::polytope::Polytope;
use crate::error::{Error, Result};
use crate::linalg::to_rational_vec;
use crate::measure::WeightedDirections;
use crate::scalar::Rational;

fn half(v: &[Rational]) -> u8 {
    if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) { 0 } else { 1 }
}

/// Exact counterclockwise angular order starting from the positive x-axis.
pub fn angle_cmp(a: &[Rational], b: &[Rational]) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let cross = &a[0] * &b[1] - &a[1] * &b[0];
        if cross.is_positive() {
            Ordering::Less
        } else if cross.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// The polygon whose edge-normal measure is `mu`, with the first vertex at
/// the origin. Edges are `w · rot90(ξ)` traversed counterclockwise.
pub fn polygon_from_measure(mu: &WeightedDirections) -> Result<Polytope> {
    if mu.ambient_dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: mu.ambient_dim() });
    }
    if !mu.is_nonnegative() {
        return Err(Error::InvalidInput("negative weight in polygon measure".into()));
    }
    if !mu.is_centered() {
        return Err(Error::NotCentered);
    }
    let mut edges: Vec<Vec<Rational>> = mu
        .entries()
        .map(|(d, w)| {
            let d = to_rational_vec(d);
            alloc::vec![-&d[1] * w, &d[0] * w]
        })
        .collect();
    edges.sort_by(|a, b| angle_cmp(a, b));
    let mut pts = alloc::vec![alloc::vec![Rational::zero(), Rational::zero()]];
    for e in &edges {
        let last = pts.last().expect("nonempty");
        let next = alloc::vec![&last[0] + &e[0], &last[1] + &e[1]];
        pts.push(next);
    }
    Polytope::hull(&pts, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn square_and_triangle() {
        let sq = WeightedDirections::from_i64(
            2,
            &[(vec![1, 0], int(1)), (vec![-1, 0], int(1)), (vec![0, 1], int(1)), (vec![0, -1], int(1))],
        )
        .unwrap();
        let p = polygon_from_measure(&sq).unwrap();
        assert_eq!(p, Polytope::from_i64(&[vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]], 2).unwrap());
        let tri = Polytope::standard_simplex(2);
        let rec = polygon_from_measure(&tri.surface_class().unwrap()).unwrap();
        assert_eq!(rec.surface_class().unwrap(), tri.surface_class().unwrap());
        assert_eq!(rec.volume().unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_bad_input() {
        let bad = WeightedDirections::from_i64(2, &[(vec![1, 0], int(1))]).unwrap();
        assert_eq!(polygon_from_measure(&bad), Err(Error::NotCentered));
        let neg = WeightedDirections::from_i64(2, &[(vec![1, 0], int(-1)), (vec![-1, 0], int(-1))]).unwrap();
        assert!(polygon_from_measure(&neg).is_err());
        let seg = WeightedDirections::from_i64(2, &[(vec![1, 0], int(2)), (vec![-1, 0], int(2))]).unwrap();
        assert!(!polygon_from_measure(&seg).unwrap().is_full_dimensional());
    }

    proptest! {
        #[test]
        fn round_trip(pts in prop::collection::vec(prop::collection::vec((-6i64..=6).prop_map(|x| rat(x, 3)), 2), 3..9)) {
            let p = Polytope::hull(&pts, 2).unwrap();
            prop_assume!(p.is_full_dimensional());
            let mu = p.surface_class().unwrap();
            let q = polygon_from_measure(&mu).unwrap();
            prop_assert_eq!(q.surface_class().unwrap(), mu);
            // equal up to translation
            let shift: Vec<Rational> = p.vertices()[0].iter().zip(&q.vertices()[0]).map(|(a, b)| a - b).collect();
            prop_assert_eq!(q.translate(&shift), p);
        }
    }
}
