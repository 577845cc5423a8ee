//! The six experiment commands.
//!
//! Trials run on the rayon pool; each trial draws only from its own named
//! streams, and results are reassembled in trial order.

use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use polyalg_core::arrangement::{dowling_wilson_profile, LineArrangement};
use polyalg_core::calibration::{self, CALIBRATED_DIMENSIONS};
use polyalg_core::degree_one::{
    af_check, degree_one_coordinates, hr_equality_check, hr_gram_deg1, HrVerdict,
};
use polyalg_core::geometry::{Polytope, Zonotope};
use polyalg_core::linalg::Matrix;
use polyalg_core::measure::WeightedDirections;
use polyalg_core::oracles::{evaluate_route, oracle_calibrate, Route};
use polyalg_core::sym_algebra::{cone_element, cone_membership, ell_symmetric, SymAlgebra, SymElement};
use polyalg_core::{RadicalScalar, Rational};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{Bodies, Command, ExperimentConfig, Lines, Mode, NamedBodies};
use crate::error::{HarnessError, Result};
use crate::float;
use crate::generate::{
    random_arrangement, random_body_measure, random_line_zonotope, random_polytope, random_weights, random_zonotope,
};
use crate::report::{CalibrationUsed, ExperimentReport, Num, Signature, Summary, Timing, Verdict};
use crate::rng::stream;

/// Routes whose agreement is checked on random symmetric tuples.
pub const AGREEMENT_ROUTES: [Route; 5] =
    [Route::LineKernel, Route::ProjectionBody, Route::Polarization, Route::Symmetric, Route::PairTop];

/// Validates `config` and runs its command.
pub fn run(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let start = Instant::now();
    let command = config.command()?;
    let (results, summary) = match command {
        Command::Lattice => cmd_lattice(config)?,
        Command::AlgebraTable => cmd_algebra_table(config)?,
        Command::Lefschetz => cmd_lefschetz(config)?,
        Command::HodgeRiemann => cmd_hodge_riemann(config)?,
        Command::AfFuzz => cmd_af_fuzz(config)?,
        Command::OracleCalibrate => cmd_oracle_calibrate(config)?,
    };
    Ok(ExperimentReport {
        command,
        config: config.clone(),
        results,
        summary,
        calibration: calibration_used(config.n),
        timing: Timing { elapsed_ms: start.elapsed().as_millis() as u64 },
    })
}

type Outcome = (Vec<serde_json::Value>, Summary);

/// Debug builds re-measure the planar constants once per process.
fn assert_calibration() {
    static CHECKED: OnceLock<()> = OnceLock::new();
    if cfg!(debug_assertions) {
        CHECKED.get_or_init(|| {
            let mismatches = calibration::verify(2).expect("planar calibration runs");
            debug_assert!(mismatches.is_empty(), "stored constants disagree with measurement: {mismatches:?}");
        });
    }
}

fn calibration_used(n: usize) -> CalibrationUsed {
    let routes = [Route::Symmetric, Route::PairTop, Route::LineKernel, Route::ProjectionBody, Route::Polarization, Route::Definitional];
    let constants = routes
        .iter()
        .filter_map(|&r| calibration::constant(n, r).ok().map(|c| (r.name().to_string(), c.to_string())))
        .collect();
    let note = (!CALIBRATED_DIMENSIONS.contains(&n)).then(|| {
        format!("no measured constants for n = {n}; pair_top and the symmetric algebra evaluate χ directly (ratio 1 measured for n = 2, 3)")
    });
    CalibrationUsed { n, constants, note }
}

fn par_trials<T, F>(config: &ExperimentConfig, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    (0..config.trials).into_par_iter().map(f).collect()
}

fn to_values<T: Serialize>(items: &[T]) -> Result<Vec<serde_json::Value>> {
    items.iter().map(|t| Ok(serde_json::to_value(t)?)).collect()
}

fn summary(verdict: Verdict, trials: usize, passed: usize, notes: Vec<String>) -> Summary {
    Summary { verdict, trials, passed, failed: trials - passed, notes }
}

fn int_vec(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("small coordinates")).collect()
}

fn lines_json(e: &LineArrangement) -> Vec<Vec<i64>> {
    e.lines().iter().map(|l| int_vec(l)).collect()
}

fn vertices_json(p: &Polytope) -> Vec<Vec<String>> {
    p.vertices().iter().map(|v| v.iter().map(Rational::to_string).collect()).collect()
}

fn measure_json(m: &WeightedDirections) -> Vec<(Vec<i64>, String)> {
    m.entries().map(|(d, w)| (int_vec(d), w.to_string())).collect()
}

/// Coefficients of a degree-one element on each line of `e`.
fn line_coefficients(x: &SymElement, e: &LineArrangement) -> Vec<String> {
    (0..e.len()).map(|i| x.coeff(&e.line_subspace(i)).to_string()).collect()
}

/// The trial's arrangement: explicit, or drawn from `trial/{i}/arrangement`.
pub fn trial_arrangement(config: &ExperimentConfig, trial: usize) -> Result<LineArrangement> {
    let n = config.n;
    let (count, bound, seed) = match &config.lines {
        Some(Lines::Explicit(lines)) => return Ok(LineArrangement::from_i64(lines, n)?),
        Some(Lines::Random(draw)) => (draw.random.count, draw.random.bound, draw.random.seed.unwrap_or(config.seed)),
        None => (n + 2, 3, config.seed),
    };
    random_arrangement(&mut stream(seed, &format!("trial/{trial}/arrangement")), n, count, bound)
}

/// `count` elements of `K(E)` following the config's body policy.
pub fn trial_cones(config: &ExperimentConfig, e: &LineArrangement, trial: usize, count: usize) -> Result<Vec<SymElement>> {
    let n = config.n;
    let out: Vec<SymElement> = match &config.bodies {
        Bodies::Named(NamedBodies::ZonotopeFromLines) => (0..count)
            .map(|j| {
                let w = random_weights(&mut stream(config.seed, &format!("trial/{trial}/cone/{j}")), e.len());
                Ok(cone_element(e, &w)?)
            })
            .collect::<Result<_>>()?,
        Bodies::Named(NamedBodies::Cube) => {
            let c = ell_symmetric(&Polytope::unit_cube(n), e).map_err(body_error)?;
            vec![c; count]
        }
        Bodies::Explicit(list) => (0..count)
            .map(|j| ell_symmetric(&list[j % list.len()].to_polytope(n)?, e).map_err(body_error))
            .collect::<Result<_>>()?,
    };
    if out.iter().any(|c| !cone_membership(c, e)) {
        return Err(HarnessError::Config("bodies do not give elements of the open cone K(E)".into()));
    }
    Ok(out)
}

fn body_error(err: polyalg_core::Error) -> HarnessError {
    HarnessError::Config(format!("body unusable with this arrangement: {err}"))
}

// ---------------------------------------------------------------- lattice

#[derive(Serialize)]
struct TopHeavy {
    k: usize,
    lower: usize,
    upper: usize,
    holds: bool,
}

#[derive(Serialize)]
struct LatticeTrial {
    trial: usize,
    lines: Vec<Vec<i64>>,
    profile: Vec<usize>,
    checks: Vec<TopHeavy>,
    holds: bool,
}

pub fn cmd_lattice(config: &ExperimentConfig) -> Result<Outcome> {
    let trials = par_trials(config, |i| {
        let e = trial_arrangement(config, i)?;
        let alg = SymAlgebra::new(&e);
        let dw = dowling_wilson_profile(alg.lattice());
        Ok(LatticeTrial {
            trial: i,
            lines: lines_json(&e),
            holds: dw.holds(),
            checks: dw.checks.iter().map(|c| TopHeavy { k: c.k, lower: c.lower, upper: c.upper, holds: c.holds }).collect(),
            profile: dw.profile,
        })
    })?;
    let passed = trials.iter().filter(|t| t.holds).count();
    let verdict = if passed == trials.len() { Verdict::Pass } else { Verdict::Violation };
    Ok((to_values(&trials)?, summary(verdict, trials.len(), passed, Vec::new())))
}

// ---------------------------------------------------------- algebra_table

/// `(left, right, [(position, coefficient), ...])`.
type TableRow = (usize, usize, Vec<(usize, String)>);

#[derive(Serialize)]
struct TableJson {
    k: usize,
    l: usize,
    /// `[left, right, [[position, coefficient], ...]]` in `A*₊(E)`.
    sym: Vec<TableRow>,
    mobius: Vec<TableRow>,
    support_matches: bool,
    coincide: bool,
}

#[derive(Serialize)]
struct AlgebraTrial {
    trial: usize,
    lines: Vec<Vec<i64>>,
    /// Basis rows of each member of `𝓛_k`, level by level.
    levels: Vec<Vec<Vec<Vec<String>>>>,
    tables: Vec<TableJson>,
    support_matches: bool,
    coincide: bool,
}

pub fn cmd_algebra_table(config: &ExperimentConfig) -> Result<Outcome> {
    let n = config.n;
    let trials = par_trials(config, |i| {
        let e = trial_arrangement(config, i)?;
        let alg = SymAlgebra::new(&e);
        let levels = alg
            .lattice()
            .levels()
            .iter()
            .map(|lv| lv.iter().map(|s| s.basis().iter().map(|r| r.iter().map(Rational::to_string).collect()).collect()).collect())
            .collect();
        let mut tables = Vec::new();
        for k in 0..=n {
            for l in 0..=n - k {
                let sym = alg.multiplication_table(k, l)?;
                let mob = alg.mobius_table(k, l)?;
                let mut support_matches = sym.len() == mob.len();
                let mut coincide = support_matches;
                for (s, m) in sym.iter().zip(&mob) {
                    let ps: Vec<usize> = s.product.iter().map(|p| p.0).collect();
                    let pm: Vec<usize> = m.product.iter().map(|p| p.0).collect();
                    support_matches &= ps == pm;
                    coincide &= ps == pm
                        && s.product.iter().zip(&m.product).all(|(a, b)| a.1 == RadicalScalar::from_rational(b.1.clone()));
                }
                tables.push(TableJson {
                    k,
                    l,
                    sym: sym.iter().map(|t| (t.left, t.right, t.product.iter().map(|(p, c)| (*p, c.to_string())).collect())).collect(),
                    mobius: mob.iter().map(|t| (t.left, t.right, t.product.iter().map(|(p, c)| (*p, c.to_string())).collect())).collect(),
                    support_matches,
                    coincide,
                });
            }
        }
        Ok(AlgebraTrial {
            trial: i,
            lines: lines_json(&e),
            levels,
            support_matches: tables.iter().all(|t| t.support_matches),
            coincide: tables.iter().all(|t| t.coincide),
            tables,
        })
    })?;
    let passed = trials.iter().filter(|t| t.support_matches).count();
    let verdict = if passed == trials.len() { Verdict::Pass } else { Verdict::Violation };
    Ok((to_values(&trials)?, summary(verdict, trials.len(), passed, Vec::new())))
}

// -------------------------------------------------------------- lefschetz

#[derive(Serialize)]
struct LefschetzLevel {
    k: usize,
    source_dim: usize,
    target_dim: usize,
    /// Rank of the Lefschetz matrix.
    rank: usize,
    injective: bool,
    /// Nullity of the Gram matrix of the images `x_L · ℓ_C`.
    image_gram_nullity: usize,
    /// `rank = source_dim − image_gram_nullity`.
    consistent: bool,
    /// Inertia of the Hodge–Riemann form on the whole level.
    hr_signature: Signature,
    /// Whether `rank = source_dim − nullity` also holds for the
    /// Hodge–Riemann form. It can fail without contradicting anything, since
    /// the top-degree pairing of `A*₊(E)` can be degenerate.
    hr_nullity_matches: bool,
}

#[derive(Serialize)]
struct LefschetzTrial {
    trial: usize,
    lines: Vec<Vec<i64>>,
    /// Line coefficients of each cone element; level `k` uses the first `n − 2k`.
    cones: Vec<Vec<String>>,
    levels: Vec<LefschetzLevel>,
}

pub fn cmd_lefschetz(config: &ExperimentConfig) -> Result<Outcome> {
    let n = config.n;
    let ks: Vec<usize> = match config.k {
        Some(k) => vec![k],
        None => (0..=n / 2).collect(),
    };
    let tol = config.tolerance;
    let trials = par_trials(config, |i| {
        let e = trial_arrangement(config, i)?;
        let alg = SymAlgebra::new(&e);
        let cones = trial_cones(config, &e, i, n)?;
        let mut levels = Vec::new();
        for &k in &ks {
            let c_list = &cones[..n - 2 * k];
            let lm = alg.lefschetz_matrix(k, c_list)?;
            let (rank, image_nullity, hr) = match config.mode {
                Mode::Exact => {
                    let images = alg.lefschetz_image_gram(k, c_list)?.signature()?;
                    (lm.rank, images.zero, alg.hr_signature(k, c_list)?)
                }
                Mode::Float => {
                    let m = float::to_dmatrix(&lm.matrix);
                    let images = float::inertia(&(m.transpose() * &m), tol);
                    let g = alg.hr_gram_sym(k, c_list)?;
                    (float::rank(&m, tol), images.zero, float::inertia(&float::to_dmatrix(&g), tol))
                }
            };
            let source_dim = alg.dim(k);
            levels.push(LefschetzLevel {
                k,
                source_dim,
                target_dim: alg.dim(n - k),
                rank,
                injective: rank == source_dim,
                image_gram_nullity: image_nullity,
                consistent: rank + image_nullity == source_dim,
                hr_nullity_matches: rank + hr.zero == source_dim,
                hr_signature: hr.into(),
            });
        }
        Ok(LefschetzTrial { trial: i, lines: lines_json(&e), cones: cones.iter().map(|c| line_coefficients(c, &e)).collect(), levels })
    })?;
    let passed = trials.iter().filter(|t| t.levels.iter().all(|l| l.consistent)).count();
    let mut notes = vec!["injectivity in degree k >= 2 is conjectural; ranks are reported, not asserted".to_string()];
    let degenerate = trials.iter().flat_map(|t| &t.levels).filter(|l| !l.hr_nullity_matches).count();
    if degenerate > 0 {
        notes.push(format!("{degenerate} levels where the Hodge-Riemann Gram has a larger kernel than the Lefschetz map"));
    }
    let verdict = if passed == trials.len() {
        Verdict::Informational
    } else {
        notes.push("Lefschetz rank disagrees with the image Gram nullity in some trials".into());
        Verdict::Inconclusive
    };
    Ok((to_values(&trials)?, summary(verdict, trials.len(), passed, notes)))
}

// ---------------------------------------------------------- hodge_riemann

#[derive(Serialize)]
struct SymPart {
    k: usize,
    level_dim: usize,
    primitive_dim: usize,
    signature: Signature,
    definite: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum DegreeOneStatus {
    Pass,
    Fail,
    /// No draw of `Q` met `q(Q, Q) < 0` within the redraw budget.
    HypothesisUnmet,
}

#[derive(Serialize)]
struct DegreeOnePart {
    status: DegreeOneStatus,
    /// Draws of `Q` rejected because the hypothesis failed.
    redraws: usize,
    q_value: Option<Num>,
    q_measure: Vec<(Vec<i64>, String)>,
    a1_dim: usize,
    primitive_dim: usize,
    signature: Option<Signature>,
}

#[derive(Serialize)]
struct HodgeTrial {
    trial: usize,
    lines: Vec<Vec<i64>>,
    /// Line coefficients of `C₁, …, C_{n−2}` followed by the extra `C₀`.
    cones: Vec<Vec<String>>,
    symmetric: SymPart,
    degree_one: DegreeOnePart,
}

struct DegreeOneOutcome {
    verdict: HrVerdict,
    q_value: RadicalScalar,
    a1_dim: usize,
    primitive_dim: usize,
    signature: Option<Signature>,
}

fn degree_one_exact(e: &LineArrangement, q: &WeightedDirections, c_list: &[SymElement]) -> Result<DegreeOneOutcome> {
    let r = hr_equality_check(e, q, c_list)?;
    Ok(DegreeOneOutcome {
        verdict: r.verdict,
        q_value: r.q_value,
        a1_dim: r.a1_dim,
        primitive_dim: r.primitive_dim,
        signature: r.inertia.map(Into::into),
    })
}

fn degree_one_float(e: &LineArrangement, q: &WeightedDirections, c_list: &[SymElement], tol: f64) -> Result<DegreeOneOutcome> {
    let form = hr_gram_deg1(e, c_list)?;
    let coords: Vec<RadicalScalar> =
        degree_one_coordinates(e, &form.basis, q)?.into_iter().map(RadicalScalar::from_rational).collect();
    let functional = form.gram.mul_vec(&coords)?;
    let q_value: RadicalScalar = coords.iter().zip(&functional).map(|(a, b)| a * b).sum();
    let mut out = DegreeOneOutcome { verdict: HrVerdict::Degenerate, q_value, a1_dim: form.basis.len(), primitive_dim: 0, signature: None };
    if form.degenerate {
        return Ok(out);
    }
    if !out.q_value.is_negative() {
        out.verdict = HrVerdict::HypothesisFailed;
        return Ok(out);
    }
    let g = float::to_dmatrix(&form.gram);
    let f: Vec<f64> = functional.iter().map(RadicalScalar::to_f64).collect();
    let b = float::hyperplane_basis(&f);
    let restricted = b.transpose() * g * &b;
    let sig = float::inertia(&restricted, tol);
    out.primitive_dim = restricted.nrows();
    out.verdict = if sig.positive == out.primitive_dim { HrVerdict::Pass } else { HrVerdict::Fail };
    out.signature = Some(sig.into());
    Ok(out)
}

fn symmetric_part(alg: &SymAlgebra, k: usize, c0: &SymElement, c_list: &[SymElement], config: &ExperimentConfig) -> Result<SymPart> {
    let (primitive_dim, sig) = match config.mode {
        Mode::Exact => {
            let basis = alg.primitive_basis(k, c0, c_list)?;
            (basis.len(), alg.primitive_signature(k, c0, c_list)?)
        }
        Mode::Float => {
            let basis = alg.primitive_basis(k, c0, c_list)?;
            let level = alg.lattice().level(k);
            let b = Matrix::from_fn(level.len(), basis.len(), |r, c| basis[c].coeff(&level[r]));
            let g = alg.hr_gram_sym(k, c_list)?;
            let restricted = b.transpose().mul_mat(&g)?.mul_mat(&b)?;
            (basis.len(), float::inertia(&float::to_dmatrix(&restricted), config.tolerance))
        }
    };
    Ok(SymPart {
        k,
        level_dim: alg.dim(k),
        primitive_dim,
        definite: sig.positive == primitive_dim,
        signature: sig.into(),
    })
}

pub fn cmd_hodge_riemann(config: &ExperimentConfig) -> Result<Outcome> {
    assert_calibration();
    let n = config.n;
    let k = config.k.unwrap_or(1);
    let trials = par_trials(config, |i| {
        let e = trial_arrangement(config, i)?;
        let alg = SymAlgebra::new(&e);
        let cones = trial_cones(config, &e, i, n - 1)?;
        let (c_deg1, c0) = (&cones[..n - 2], &cones[n - 2]);
        let symmetric = symmetric_part(&alg, k, c0, &cones[..n - 2 * k], config)?;

        let mut redraws = 0;
        let mut part = None;
        for r in 0..=config.max_redraws {
            let q = random_body_measure(&mut stream(config.seed, &format!("trial/{i}/q/{r}")), &e)?;
            let out = match config.mode {
                Mode::Exact => degree_one_exact(&e, &q, c_deg1)?,
                Mode::Float => degree_one_float(&e, &q, c_deg1, config.tolerance)?,
            };
            let status = match out.verdict {
                HrVerdict::Pass => DegreeOneStatus::Pass,
                HrVerdict::Fail => DegreeOneStatus::Fail,
                HrVerdict::HypothesisFailed | HrVerdict::Degenerate => {
                    redraws += 1;
                    continue;
                }
            };
            part = Some(DegreeOnePart {
                status,
                redraws,
                q_value: Some(Num::from(&out.q_value)),
                q_measure: measure_json(&q),
                a1_dim: out.a1_dim,
                primitive_dim: out.primitive_dim,
                signature: out.signature,
            });
            break;
        }
        let degree_one = part.unwrap_or(DegreeOnePart {
            status: DegreeOneStatus::HypothesisUnmet,
            redraws,
            q_value: None,
            q_measure: Vec::new(),
            a1_dim: 2 * e.len() - n,
            primitive_dim: 0,
            signature: None,
        });
        Ok(HodgeTrial {
            trial: i,
            lines: lines_json(&e),
            cones: cones.iter().map(|c| line_coefficients(c, &e)).collect(),
            symmetric,
            degree_one,
        })
    })?;

    let violation = |t: &HodgeTrial| t.degree_one.status == DegreeOneStatus::Fail || (k == 1 && !t.symmetric.definite);
    let passed = trials
        .iter()
        .filter(|t| t.degree_one.status == DegreeOneStatus::Pass && (k > 1 || t.symmetric.definite))
        .count();
    let unmet = trials.iter().filter(|t| t.degree_one.status == DegreeOneStatus::HypothesisUnmet).count();
    let redraws: usize = trials.iter().map(|t| t.degree_one.redraws).sum();
    let mut notes = vec![format!("{redraws} draws of Q rejected by the hypothesis q(Q, Q) < 0 and redrawn")];
    if unmet > 0 {
        notes.push(format!("{unmet} trials exhausted the redraw budget and are not counted as passes"));
    }
    if k > 1 {
        let indefinite = trials.iter().filter(|t| !t.symmetric.definite).count();
        notes.push(format!("degree {k} is conjectural: {indefinite} trials not definite on the primitive subspace"));
    }
    let verdict = if trials.iter().any(violation) {
        Verdict::Violation
    } else if unmet > 0 {
        Verdict::Inconclusive
    } else if k > 1 {
        Verdict::Informational
    } else {
        Verdict::Pass
    };
    Ok((to_values(&trials)?, summary(verdict, trials.len(), passed, notes)))
}

// ---------------------------------------------------------------- af_fuzz

#[derive(Serialize)]
struct AfTrial {
    trial: usize,
    k_vertices: Vec<Vec<String>>,
    l_vertices: Vec<Vec<String>>,
    c_vertices: Vec<Vec<Vec<String>>>,
    mixed: Num,
    left: Num,
    right: Num,
    slack: Num,
    holds: bool,
}

/// The `n − 2` symmetric bodies of an AF trial.
fn af_bodies(config: &ExperimentConfig, trial: usize) -> Result<Vec<Polytope>> {
    let n = config.n;
    let count = n - 2;
    match &config.bodies {
        Bodies::Named(NamedBodies::Cube) => Ok(vec![Polytope::unit_cube(n); count]),
        Bodies::Explicit(list) => (0..count).map(|j| list[j % list.len()].to_polytope(n)).collect(),
        Bodies::Named(NamedBodies::ZonotopeFromLines) => {
            if count == 0 {
                return Ok(Vec::new());
            }
            let mut c = config.clone();
            if c.lines.is_none() {
                c.lines = Some(Lines::Random(crate::config::RandomLinesDraw {
                    random: crate::config::RandomLines { count: n + 1, bound: 2, seed: None },
                }));
            }
            let e = trial_arrangement(&c, trial)?;
            (0..count)
                .map(|j| Ok(random_line_zonotope(&mut stream(config.seed, &format!("trial/{trial}/C/{j}")), &e)?.to_polytope()))
                .collect()
        }
    }
}

pub fn cmd_af_fuzz(config: &ExperimentConfig) -> Result<Outcome> {
    assert_calibration();
    let n = config.n;
    let m = config.points();
    let trials = par_trials(config, |i| {
        let k = random_polytope(&mut stream(config.seed, &format!("trial/{i}/K")), n, m)?;
        let l = random_polytope(&mut stream(config.seed, &format!("trial/{i}/L")), n, m)?;
        let cs = af_bodies(config, i)?;
        let r = af_check(&k, &l, &cs)?;
        let holds = match config.mode {
            Mode::Exact => r.holds,
            Mode::Float => {
                let a = (&r.mixed * &r.mixed).to_f64();
                let bc = (&r.left * &r.right).to_f64();
                a - bc >= -config.tolerance * a.abs().max(bc.abs()).max(1.0)
            }
        };
        Ok(AfTrial {
            trial: i,
            k_vertices: vertices_json(&k),
            l_vertices: vertices_json(&l),
            c_vertices: cs.iter().map(vertices_json).collect(),
            mixed: Num::from(&r.mixed),
            left: Num::from(&r.left),
            right: Num::from(&r.right),
            slack: Num::from(&r.slack),
            holds,
        })
    })?;
    let passed = trials.iter().filter(|t| t.holds).count();
    let verdict = if passed == trials.len() { Verdict::Pass } else { Verdict::Violation };
    Ok((to_values(&trials)?, summary(verdict, trials.len(), passed, Vec::new())))
}

// ------------------------------------------------------- oracle_calibrate

/// Route values on one tuple of symmetric bodies, raw and converted to χ.
#[derive(Clone, Debug, Serialize)]
pub struct Agreement {
    pub values: Vec<(String, Num, Num)>,
    pub agree: bool,
}

/// Evaluates [`AGREEMENT_ROUTES`] on `bodies` and checks that all of them
/// give the same value after dividing by the stored constants.
pub fn symmetric_agreement(bodies: &[Polytope]) -> Result<Agreement> {
    let n = bodies.len();
    let mut values = Vec::new();
    let mut chis = Vec::new();
    for route in AGREEMENT_ROUTES {
        let v = evaluate_route(route, bodies)?;
        let chi = calibration::to_chi(n, route, &v)?;
        values.push((route.name().to_string(), Num::from(&v), Num::from(&chi)));
        chis.push(chi);
    }
    let agree = chis.windows(2).all(|w| w[0] == w[1]);
    Ok(Agreement { values, agree })
}

/// `n` random zonotopes with `n + 1` generators for agreement trial `trial`.
pub fn random_symmetric_tuple(seed: u64, n: usize, trial: usize) -> Result<Vec<Polytope>> {
    (0..n)
        .map(|j| {
            let z: Zonotope = random_zonotope(&mut stream(seed, &format!("trial/{trial}/body/{j}")), n, n + 1, 2)?;
            Ok(z.to_polytope())
        })
        .collect()
}

#[derive(Serialize)]
struct RecordJson {
    route: &'static str,
    reference: &'static str,
    ratio: Option<Num>,
    stored: Option<Num>,
    consistent: bool,
    matches_stored: bool,
    instances: Vec<(String, Num, Num)>,
}

#[derive(Serialize)]
struct AgreementTrial {
    trial: usize,
    bodies: Vec<Vec<Vec<String>>>,
    values: Vec<(String, Num, Num)>,
    agree: bool,
}

#[derive(Serialize)]
#[serde(untagged)]
enum CalibrationItem {
    Record(RecordJson),
    Agreement(AgreementTrial),
}

pub fn cmd_oracle_calibrate(config: &ExperimentConfig) -> Result<Outcome> {
    let n = config.n;
    let records = oracle_calibrate(n)?;
    let mismatches = calibration::check_records(&records);
    let mut items: Vec<CalibrationItem> = records
        .iter()
        .map(|r| {
            let stored = calibration::constant(n, r.route).ok();
            CalibrationItem::Record(RecordJson {
                route: r.route.name(),
                reference: r.reference.name(),
                ratio: r.ratio.as_ref().map(Num::from),
                matches_stored: stored.is_some() && stored == r.ratio,
                stored: stored.as_ref().map(Num::from),
                consistent: r.is_consistent(),
                instances: r.instances.iter().map(|(name, v, c)| (name.clone(), Num::from(v), Num::from(c))).collect(),
            })
        })
        .collect();
    let agreements = par_trials(config, |i| {
        let bodies = random_symmetric_tuple(config.seed, n, i)?;
        let a = symmetric_agreement(&bodies)?;
        Ok(AgreementTrial { trial: i, bodies: bodies.iter().map(vertices_json).collect(), values: a.values, agree: a.agree })
    })?;
    let inconsistent = records.iter().filter(|r| !r.is_consistent()).count();
    let disagreeing = agreements.iter().filter(|a| !a.agree).count();
    let mut notes = Vec::new();
    if inconsistent > 0 {
        notes.push(format!("{inconsistent} routes have a non-constant ratio to the χ oracle"));
    }
    if !mismatches.is_empty() {
        notes.push(format!("{} stored constants disagree with the measurement", mismatches.len()));
    }
    if disagreeing > 0 {
        notes.push(format!("{disagreeing} random symmetric tuples disagree after calibration"));
    }
    let total = records.len() + agreements.len();
    let good_records = records
        .iter()
        .filter(|r| r.is_consistent() && calibration::constant(n, r.route).ok() == r.ratio)
        .count();
    let passed = good_records + agreements.len() - disagreeing;
    let verdict = if notes.is_empty() { Verdict::Pass } else { Verdict::Violation };
    items.extend(agreements.into_iter().map(CalibrationItem::Agreement));
    Ok((to_values(&items)?, summary(verdict, total, passed, notes)))
}
