//! Normalization constants between the evaluation routes, as measured by
//! [`crate::oracles::oracle_calibrate`] against the χ oracle.
//!
//! Each constant is `route value / χ value` on the reference battery.
//! `verify` re-measures them; the test suite and the `oracle-calibrate`
//! command assert agreement.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::oracles::{oracle_calibrate, CalibrationRecord, Route};
use crate::scalar::{rat, RadicalScalar};

/// Dimensions for which constants were measured.
pub const CALIBRATED_DIMENSIONS: [usize; 2] = [2, 3];

/// Stored ratio of `route` to the χ oracle in dimension `n`.
pub fn constant(n: usize, route: Route) -> Result<RadicalScalar> {
    let one = RadicalScalar::from_int(1);
    let c = match (n, route) {
        (_, Route::ChiOracle) => one,
        // measured: symmetric algebra, pair_top and line kernel agree with χ
        (2 | 3, Route::Symmetric | Route::PairTop | Route::LineKernel) => one,
        // measured n = 2: zonotope formula on projection bodies is 2χ
        (2, Route::ProjectionBody | Route::Polarization) => RadicalScalar::from_int(2),
        // measured n = 3: 4/3, i.e. 2ⁿ/n!
        (3, Route::ProjectionBody | Route::Polarization) => RadicalScalar::from_rational(rat(4, 3)),
        // measured n = 2: the Δ-complement density gives 1/2
        (2, Route::Definitional) => RadicalScalar::from_rational(rat(1, 2)),
        // measured n = 3: √3/9, i.e. n^(−n/2)
        (3, Route::Definitional) => RadicalScalar::from_term(rat(1, 9), BigUint::from(3u32)),
        _ => return Err(Error::InvalidInput(alloc::format!("no calibration constant for n = {n}"))),
    };
    Ok(c)
}

/// Converts a route value to the χ normalization.
pub fn to_chi(n: usize, route: Route, value: &RadicalScalar) -> Result<RadicalScalar> {
    let c = constant(n, route)?;
    let q = c.to_rational().ok_or(Error::InvalidInput("irrational calibration constant".into()))?;
    Ok(value.scale(&q.recip()))
}

/// A stored constant that disagrees with a fresh measurement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub route: Route,
    pub stored: RadicalScalar,
    pub measured: Option<RadicalScalar>,
}

/// Compares measured records with the stored constants.
pub fn check_records(records: &[CalibrationRecord]) -> Vec<Mismatch> {
    records
        .iter()
        .filter_map(|r| {
            let stored = constant(r.n, r.route).ok()?;
            (r.ratio.as_ref() != Some(&stored)).then(|| Mismatch { n: r.n, route: r.route, stored, measured: r.ratio.clone() })
        })
        .collect()
}

/// Re-runs the calibration for `n` and reports disagreements.
pub fn verify(n: usize) -> Result<Vec<Mismatch>> {
    Ok(check_records(&oracle_calibrate(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_constants_match_measurement() {
        assert!(verify(2).unwrap().is_empty());
    }

    #[test]
    fn closed_forms() {
        for n in CALIBRATED_DIMENSIONS {
            let fact: i64 = (1..=n as i64).product();
            let pb = constant(n, Route::ProjectionBody).unwrap();
            assert_eq!(pb, RadicalScalar::from_rational(rat(1 << n, fact)));
            let d = constant(n, Route::Definitional).unwrap();
            let nn = RadicalScalar::from_int((n as i64).pow(n as u32));
            assert_eq!(&(&d * &d) * &nn, RadicalScalar::from_int(1));
        }
        assert!(constant(4, Route::Symmetric).is_err());
    }
}
