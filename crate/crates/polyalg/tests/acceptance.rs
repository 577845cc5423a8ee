//! Acceptance suite: one check per criterion, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so that every line is printed even when
//! a criterion fails, and so that criteria run in a fixed order with their
//! own wall-clock budgets. The process exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use polyalg::commands::{random_symmetric_tuple, run, symmetric_agreement};
use polyalg::config::{Command, ExperimentConfig, Lines, RandomLines, RandomLinesDraw};
use polyalg::generate::{random_arrangement, random_body_measure, random_polytope, random_signed_measure, random_weights};
use polyalg::rng::stream;
use polyalg::Verdict;
use polyalg_core::arrangement::LineArrangement;
use polyalg_core::degree_one::{euler_verdier_deg1, pair_top, restrict, restriction_rank};
use polyalg_core::geometry::Polytope;
use polyalg_core::linalg::Subspace;
use polyalg_core::measure::WeightedDirections;
use polyalg_core::oracles::{chi_product_oracle, naive_kernel};
use polyalg_core::scalar::{int, rat};
use polyalg_core::sym_algebra::{
    cone_element, ell_of_symmetric_measure, ell_symmetric, multiply, product, SymAlgebra, SymElement,
};
use polyalg_core::{RadicalScalar, Rational};
use rand::Rng;
use serde_json::Value;

const SEED: u64 = 20_240_611;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn random_lines(count: usize, bound: i64) -> Option<Lines> {
    Some(Lines::Random(RandomLinesDraw { random: RandomLines { count, bound, seed: None } }))
}

fn axes_with(n: usize, extra: &[&[i64]]) -> Vec<Vec<i64>> {
    let mut lines: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    lines.extend(extra.iter().map(|l| l.to_vec()));
    lines
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn results(report: &polyalg::ExperimentReport) -> &[Value] {
    &report.results
}

// 1. coordinate axes: level dimensions, top of ℓ_cube^n, table coincidence
fn axes_exactness() -> Outcome {
    let mut facts = Vec::new();
    for n in 2..=6 {
        let e = LineArrangement::axes(n);
        let alg = SymAlgebra::new(&e);
        for k in 0..=n {
            if alg.dim(k) != binomial(n, k) {
                return outcome(false, format!("n = {n}: |L_{k}| = {} != C({n},{k})", alg.dim(k)));
            }
        }
        let cube = ell_symmetric(&Polytope::unit_cube(n), &e).unwrap();
        let top = product(n, &vec![cube; n]).unwrap().top_evaluate().unwrap();
        let fact: i64 = (1..=n as i64).product();
        if top != RadicalScalar::from_int(fact) {
            return outcome(false, format!("n = {n}: top(l_cube^n) = {top}, expected {fact}"));
        }
        for k in 0..=n {
            for l in 0..=n - k {
                let sym = alg.multiplication_table(k, l).unwrap();
                let mob = alg.mobius_table(k, l).unwrap();
                let same = sym.len() == mob.len()
                    && sym.iter().zip(&mob).all(|(s, m)| {
                        s.left == m.left
                            && s.right == m.right
                            && s.product.len() == m.product.len()
                            && s.product.iter().zip(&m.product).all(|(a, b)| {
                                a.0 == b.0 && a.1 == RadicalScalar::from_rational(b.1.clone())
                            })
                    });
                if !same {
                    return outcome(false, format!("n = {n}: tables differ in degrees ({k}, {l})"));
                }
            }
        }
        facts.push(format!("{n}!={fact}"));
    }
    outcome(true, format!("dimensions C(n,k), tops {}, tables coincide", facts.join(" ")))
}

// 2. line kernel, projection bodies and polarization agree after calibration
fn kernel_zonotope_polarization() -> Outcome {
    let mut checked = 0;
    for n in [2, 3] {
        for i in 0..25 {
            let bodies = random_symmetric_tuple(SEED, n, i).unwrap();
            let a = symmetric_agreement(&bodies).unwrap();
            if !a.agree {
                return outcome(false, format!("n = {n}, instance {i}: {:?}", a.values));
            }
            checked += 1;
        }
    }
    outcome(true, format!("{checked} symmetric tuples, five routes equal after the stored constants"))
}

// 3. planar pairing against vol(P − Q) − vol P − vol Q
fn planar_identity() -> Outcome {
    let unit = SymElement::unit(2);
    for i in 0..50 {
        let p = random_polytope(&mut stream(SEED, &format!("c3/{i}/P")), 2, 6).unwrap();
        let q = random_polytope(&mut stream(SEED, &format!("c3/{i}/Q")), 2, 6).unwrap();
        let lhs = pair_top(&p.surface_class().unwrap(), &q.surface_class().unwrap(), &unit).unwrap();
        let diff = p.minkowski_sum(&q.negate()).unwrap();
        let rhs = diff.volume().unwrap() - p.volume().unwrap() - q.volume().unwrap();
        if lhs != RadicalScalar::from_rational(rhs.clone()) {
            return outcome(false, format!("pair {i}: pair_top = {lhs}, volumes give {rhs}"));
        }
    }
    outcome(true, "50 rational polygon pairs match exactly")
}

// 4. one-line symmetric element on boxes, and the triangle discrepancy
fn cross_pipeline() -> Outcome {
    let axes = LineArrangement::axes(3);
    let e3 = Subspace::span(&[vec![int(0), int(0), int(1)]], 3).unwrap();
    let x3 = SymElement::basis(e3);
    let cube = Polytope::unit_cube(3);
    let cube_value = pair_top(&cube.surface_class().unwrap(), &cube.surface_class().unwrap(), &x3).unwrap();
    if cube_value != RadicalScalar::from_int(2) {
        return outcome(false, format!("unit cube with x_e3 gives {cube_value}, expected 2"));
    }
    for i in 0..20 {
        let mut rng = stream(SEED, &format!("c4/{i}"));
        let mut side = || rat(rng.random_range(1..=9), rng.random_range(1..=4));
        let b1 = Polytope::centered_box(&[side(), side(), side()]);
        let b2 = Polytope::centered_box(&[side(), side(), side()]);
        let w = RadicalScalar::from_rational(side());
        let m = x3.scale(&w);
        let via_pair = pair_top(&b1.surface_class().unwrap(), &b2.surface_class().unwrap(), &m).unwrap();
        let l1 = ell_symmetric(&b1, &axes).unwrap();
        let l2 = ell_symmetric(&b2, &axes).unwrap();
        let via_sym = product(3, &[l1, l2, m]).unwrap().top_evaluate().unwrap();
        if via_pair != via_sym {
            return outcome(false, format!("boxes {i}: pair_top {via_pair} vs symmetric algebra {via_sym}"));
        }
    }
    let t = Polytope::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 1]], 2).unwrap();
    let st = t.surface_class().unwrap();
    let naive = naive_kernel(&[st.clone(), st.clone()]).unwrap();
    let correct = chi_product_oracle(&[t.clone(), t.clone()]).unwrap();
    let paired = pair_top(&st, &st, &SymElement::unit(2)).unwrap();
    let ok = naive == rat(3, 2) && correct == int(2) && paired == RadicalScalar::from_int(2);
    outcome(ok, format!("cube value 2, 20 box triples agree; triangle naive {naive} vs oracle {correct}, pair_top {paired}"))
}

// 5. Alexandrov–Fenchel fuzz
fn af_fuzz() -> Outcome {
    let mut total = 0;
    for n in [3, 4] {
        let mut c = ExperimentConfig::new(Command::AfFuzz, n);
        c.trials = 100;
        c.seed = SEED;
        let r = run(&c).unwrap();
        if r.summary.verdict != Verdict::Pass {
            let bad: Vec<&Value> = results(&r).iter().filter(|t| t["holds"] == false).collect();
            return outcome(false, format!("n = {n}: {} violations, first {:?}", bad.len(), bad.first()));
        }
        total += r.summary.passed;
    }
    outcome(total == 200, format!("{total} of 200 instances satisfy a^2 >= bc exactly"))
}

// 6. degree-one Hodge–Riemann on random arrangements
fn hodge_riemann_degree_one() -> Outcome {
    let mut trials = 0;
    let mut redraws = 0;
    for (n, count) in [(3, 6), (4, 7)] {
        let mut c = ExperimentConfig::new(Command::HodgeRiemann, n);
        c.k = Some(1);
        c.trials = 25;
        c.seed = SEED;
        c.lines = random_lines(count, 3);
        let r = run(&c).unwrap();
        for t in results(&r) {
            let d = &t["degree_one"];
            redraws += d["redraws"].as_u64().unwrap();
            let dim = d["primitive_dim"].as_u64().unwrap();
            let sig = &d["signature"];
            let definite = d["status"] == "pass" && sig["positive"] == dim && sig["zero"] == 0 && sig["negative"] == 0;
            if !definite || dim == 0 {
                return outcome(false, format!("n = {n}, trial {}: {d}", t["trial"]));
            }
            trials += 1;
        }
    }
    outcome(trials == 50, format!("{trials} trials with signature (dim, 0, 0); {redraws} hypothesis failures redrawn"))
}

// 7. restriction to hyperplanes is injective on A¹(E)
fn restriction_determinacy() -> Outcome {
    for i in 0..25 {
        let n = 3 + i % 3;
        let mut rng = stream(SEED, &format!("c7/{i}"));
        let count = n + rng.random_range(0..=3);
        let e = random_arrangement(&mut rng, n, count, 3).unwrap();
        let r = restriction_rank(&e).unwrap();
        if !r.is_injective() {
            return outcome(false, format!("arrangement {i}: rank {} != 2|E| - n = {}", r.rank, r.expected));
        }
    }
    outcome(true, "25 arrangements with n in {3,4,5}: rank 2|E| - n")
}

// 8. top-heaviness
fn dowling_wilson() -> Outcome {
    let mut total = 0;
    for (n, trials) in [(3, 34), (4, 33), (5, 33)] {
        let mut c = ExperimentConfig::new(Command::Lattice, n);
        c.trials = trials;
        c.seed = SEED;
        c.lines = random_lines(n + 3, 3);
        let r = run(&c).unwrap();
        if r.summary.verdict != Verdict::Pass {
            return outcome(false, format!("n = {n}: {} failures", r.summary.failed));
        }
        total += r.summary.passed;
    }
    outcome(total == 100, format!("{total} arrangements satisfy |L_k| <= |L_(n-k)|"))
}

// 9. algebraic property suite
fn random_sym(rng: &mut impl Rng, alg: &SymAlgebra, k: usize) -> SymElement {
    let mut terms: Vec<(Subspace, RadicalScalar)> = Vec::new();
    for l in alg.lattice().level(k) {
        if rng.random_bool(0.6) {
            let c = rat(rng.random_range(-5..=5), rng.random_range(1..=3));
            terms.push((l.clone(), RadicalScalar::from_rational(c)));
        }
    }
    SymElement::from_terms(alg.ambient_dim(), k, terms).unwrap()
}

fn property_suite() -> Outcome {
    const CASES: usize = 100;
    let mut counts = [0usize; 5];
    for i in 0..CASES {
        let mut rng = stream(SEED, &format!("c9/{i}"));
        let n = 3 + i % 2;
        let count = n + rng.random_range(0..=2);
        let e = random_arrangement(&mut rng, n, count, 2).unwrap();
        let alg = SymAlgebra::new(&e);

        // commutativity and associativity, z basis against x basis
        let (ka, kb) = (rng.random_range(0..=1), rng.random_range(0..=1));
        let kc = rng.random_range(0..=n - ka - kb);
        let (a, b, c) = (random_sym(&mut rng, &alg, ka), random_sym(&mut rng, &alg, kb), random_sym(&mut rng, &alg, kc));
        let ab = alg.multiply(&a, &b).unwrap();
        if ab != alg.multiply(&b, &a).unwrap() || ab != multiply(&a, &b).unwrap() {
            return outcome(false, format!("case {i}: multiplication not commutative"));
        }
        let left = alg.multiply(&ab, &c).unwrap();
        let right = alg.multiply(&a, &alg.multiply(&b, &c).unwrap()).unwrap();
        if left != right {
            return outcome(false, format!("case {i}: multiplication not associative"));
        }
        counts[0] += 1;

        // σ: multiplicative involution, compatible with the degree-one twist
        let sigma_ab = ab.euler_verdier();
        if sigma_ab != alg.multiply(&a.euler_verdier(), &b.euler_verdier()).unwrap() || a.euler_verdier().euler_verdier() != a {
            return outcome(false, format!("case {i}: sigma is not a multiplicative involution"));
        }
        let w = random_weights(&mut rng, e.len());
        let mut sym_measure = WeightedDirections::new(n);
        for (line, wl) in e.lines().iter().zip(&w) {
            sym_measure.add_primitive(line.clone(), wl.clone());
            sym_measure.add_primitive(line.iter().map(|x| -x).collect(), wl.clone());
        }
        let twisted = ell_of_symmetric_measure(&euler_verdier_deg1(&sym_measure), &e).unwrap();
        let mu = random_signed_measure(&mut rng, &e).unwrap();
        if twisted != ell_of_symmetric_measure(&sym_measure, &e).unwrap().euler_verdier()
            || euler_verdier_deg1(&euler_verdier_deg1(&mu)) != mu
        {
            return outcome(false, format!("case {i}: degree-one sigma inconsistent"));
        }
        counts[1] += 1;

        // Gram symmetry σ(x)·y·ℓ_C = σ(y)·x·ℓ_C
        let cones: Vec<SymElement> = (0..n - 2).map(|_| cone_element(&e, &random_weights(&mut rng, e.len())).unwrap()).collect();
        let ell = product(n, &cones).unwrap();
        let nu = random_signed_measure(&mut rng, &e).unwrap();
        let xy = pair_top(&euler_verdier_deg1(&mu), &nu, &ell).unwrap();
        let yx = pair_top(&euler_verdier_deg1(&nu), &mu, &ell).unwrap();
        if xy != yx {
            return outcome(false, format!("case {i}: Gram not symmetric, {xy} vs {yx}"));
        }
        counts[2] += 1;

        // centering, Blaschke sums and linearity of the pairing
        let k = random_polytope(&mut stream(SEED, &format!("c9/{i}/K")), n, n + 3).unwrap();
        let l = random_polytope(&mut stream(SEED, &format!("c9/{i}/L")), n, n + 3).unwrap();
        let t: Vec<Rational> = (0..n).map(|_| rat(rng.random_range(-4..=4), 3)).collect();
        let (sk, sl) = (k.surface_class().unwrap(), l.surface_class().unwrap());
        let sum = sk.blaschke_sum(&sl).unwrap();
        let body = random_body_measure(&mut rng, &e).unwrap();
        let linear = pair_top(&sum, &body, &ell).unwrap() == &pair_top(&sk, &body, &ell).unwrap() + &pair_top(&sl, &body, &ell).unwrap();
        if !(sk.is_centered() && sum.is_centered() && sum == sl.blaschke_sum(&sk).unwrap())
            || k.translate(&t).surface_class().unwrap() != sk
            || !linear
        {
            return outcome(false, format!("case {i}: centering or Blaschke invariant broken"));
        }
        counts[3] += 1;

        // restriction functoriality: W₂ ⊂ W₁ gives (μ|W₁)|W₂ = μ|W₂
        let gens: Vec<Vec<Rational>> =
            (0..n - 1).map(|_| (0..n).map(|_| int(rng.random_range(-3..=3))).collect()).collect();
        let w1 = Subspace::span(&gens, n).unwrap();
        let w2 = Subspace::span(&gens[..1], n).unwrap();
        let both = restrict(&restrict(&mu, &w1).unwrap(), &w2).unwrap();
        let direct = restrict(&mu, &w2).unwrap();
        let twist = restrict(&euler_verdier_deg1(&mu), &w1).unwrap() == euler_verdier_deg1(&restrict(&mu, &w1).unwrap());
        if both != direct || !twist {
            return outcome(false, format!("case {i}: restriction not functorial"));
        }
        counts[4] += 1;
    }
    outcome(
        counts.iter().all(|&c| c >= CASES),
        format!(
            "{} multiplication, {} sigma, {} Gram symmetry, {} Blaschke/centering, {} restriction cases",
            counts[0], counts[1], counts[2], counts[3], counts[4]
        ),
    )
}

// 10. exploratory degree-two runs
fn conjecture_exploration() -> Outcome {
    let mut lines = Vec::new();
    let mut mismatched = 0;
    // generic draws have a zero degree-two primitive space; the explicit
    // axis-plus-diagonal arrangements do not
    let runs = [
        (4, random_lines(10, 3)),
        (5, random_lines(8, 3)),
        (5, random_lines(10, 3)),
        (4, Some(Lines::Explicit(axes_with(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1], &[1, -1, 0, 0]])))),
        (5, Some(Lines::Explicit(axes_with(5, &[&[1, 1, 0, 0, 0], &[0, 0, 1, 1, 0], &[0, 0, 0, 1, 1]])))),
    ];
    for (n, lines_cfg) in runs {
        let count = match &lines_cfg {
            Some(Lines::Explicit(v)) => v.len(),
            Some(Lines::Random(r)) => r.random.count,
            None => unreachable!(),
        };
        let mut c = ExperimentConfig::new(Command::Lefschetz, n);
        c.k = Some(2);
        c.trials = 2;
        c.seed = SEED;
        c.lines = lines_cfg;
        let lef = run(&c).unwrap();
        for t in results(&lef) {
            for lv in t["levels"].as_array().unwrap() {
                if lv["consistent"] != true {
                    return outcome(false, format!("n = {n}: inconsistent Lefschetz level {lv}"));
                }
                mismatched += usize::from(lv["hr_nullity_matches"] != true);
                lines.push(format!("n={n} |E|={count} rank {}/{}", lv["rank"], lv["source_dim"]));
            }
        }
        let mut h = c.clone();
        h.command = Some(Command::HodgeRiemann);
        let hr = run(&h).unwrap();
        if hr.summary.verdict == Verdict::Violation {
            return outcome(false, format!("n = {n}: hodge_riemann verdict {:?}", hr.summary.verdict));
        }
        for t in results(&hr) {
            let sym = &t["symmetric"];
            let s = &sym["signature"];
            lines.push(format!(
                "n={n} |E|={count} primitive dim {} sig ({},{},{})",
                sym["primitive_dim"], s["positive"], s["zero"], s["negative"]
            ));
        }
    }
    outcome(
        true,
        format!("completed; {}; {mismatched} levels with a degenerate top pairing", lines.join(", ")),
    )
}

fn main() -> ExitCode {
    type Check = fn() -> Outcome;
    let criteria: [(&str, Check, u64); 10] = [
        ("coordinate-axes exactness", axes_exactness, 5),
        ("kernel/zonotope/polarization agreement", kernel_zonotope_polarization, 60),
        ("planar pairing identity", planar_identity, 10),
        ("cross-pipeline n = 3 check", cross_pipeline, 10),
        ("Alexandrov-Fenchel fuzz", af_fuzz, 600),
        ("Hodge-Riemann degree one", hodge_riemann_degree_one, 600),
        ("restriction determinacy", restriction_determinacy, 120),
        ("Dowling-Wilson sanity", dowling_wilson, 120),
        ("algebraic property suite", property_suite, 120),
        ("degree-two exploration", conjecture_exploration, 1800),
    ];
    let mut failures = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            outcome(false, format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*budget);
        let ok = result.ok && in_time;
        failures += usize::from(!ok);
        println!(
            "{} criterion {:>2} {name} ({:.1}s of {budget}s): {}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64(),
            result.detail
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
