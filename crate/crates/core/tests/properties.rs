//! Cross-module invariants over small random inputs.

use polyalg_core::arrangement::{dowling_wilson_profile, LineArrangement, SubspaceLattice};
use polyalg_core::degree_one::{euler_verdier_deg1, pair_top, planar_pairing, restrict, restriction_rank};
use polyalg_core::geometry::Polytope;
use polyalg_core::linalg::Subspace;
use polyalg_core::measure::WeightedDirections;
use polyalg_core::oracles::chi_product_oracle;
use polyalg_core::scalar::{int, rat};
use polyalg_core::sym_algebra::{ell_symmetric, multiply, product, SymAlgebra, SymElement};
use polyalg_core::{RadicalScalar, Rational};
use proptest::prelude::*;

fn lines(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), n..=max)
        .prop_filter("nonzero lines", |ls| ls.iter().all(|l| l.iter().any(|&c| c != 0)))
}

fn arrangement(n: usize, max: usize) -> impl Strategy<Value = LineArrangement> {
    let base: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    lines(n, max).prop_filter_map("distinct lines", move |extra| {
        let all: Vec<Vec<i64>> = base.iter().cloned().chain(extra.into_iter().take(max - n)).collect();
        LineArrangement::from_i64(&all, n).ok()
    })
}

fn polygon() -> impl Strategy<Value = Polytope> {
    prop::collection::vec((-6i64..=6, -6i64..=6), 3..8)
        .prop_filter_map("full-dimensional", |pts| {
            let pts: Vec<Vec<i64>> = pts.into_iter().map(|(a, b)| vec![a, b]).collect();
            Polytope::from_i64(&pts, 2).ok().filter(Polytope::is_full_dimensional)
        })
}

fn signed_measure(e: &LineArrangement, weights: &[i64]) -> WeightedDirections {
    let mut m = WeightedDirections::new(e.ambient_dim());
    for (line, w) in e.lines().iter().zip(weights.chunks(2)) {
        m.add_primitive(line.clone(), int(w[0]));
        m.add_primitive(line.iter().map(|x| -x).collect(), int(w[1]));
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn lattice_is_top_heavy(e in arrangement(4, 7)) {
        let lattice = SubspaceLattice::build(&e);
        prop_assert!(dowling_wilson_profile(&lattice).holds());
        prop_assert_eq!(lattice.profile()[0], 1);
        prop_assert_eq!(lattice.profile()[4], 1);
    }

    #[test]
    fn unit_is_neutral_and_sigma_is_multiplicative(e in arrangement(3, 6), i in 0usize..16, j in 0usize..16) {
        let alg = SymAlgebra::new(&e);
        let l1 = &alg.lattice().level(1)[i % alg.dim(1)];
        let l2 = &alg.lattice().level(2)[j % alg.dim(2)];
        let (a, b) = (SymElement::basis(l1.clone()), SymElement::basis(l2.clone()));
        prop_assert_eq!(alg.multiply(&alg.unit(), &a).unwrap(), a.clone());
        let ab = multiply(&a, &b).unwrap();
        prop_assert_eq!(ab.euler_verdier(), multiply(&a.euler_verdier(), &b.euler_verdier()).unwrap());
    }

    #[test]
    fn restriction_stays_injective(e in arrangement(3, 6)) {
        prop_assert!(restriction_rank(&e).unwrap().is_injective());
    }

    #[test]
    fn restriction_commutes_with_sigma(e in arrangement(3, 5), w in prop::collection::vec(-3i64..=3, 10), v in prop::collection::vec(-3i64..=3, 3)) {
        prop_assume!(v.iter().any(|&c| c != 0));
        let mu = signed_measure(&e, &w);
        let plane = Subspace::span(&[v.iter().map(|&c| int(c)).collect()], 3).unwrap();
        let direct = restrict(&euler_verdier_deg1(&mu), &plane).unwrap();
        prop_assert_eq!(direct, euler_verdier_deg1(&restrict(&mu, &plane).unwrap()));
    }

    #[test]
    fn planar_pairing_matches_mixed_volume_route(p in polygon(), q in polygon()) {
        let (sp, sq) = (p.surface_class().unwrap(), q.surface_class().unwrap());
        let paired = pair_top(&sp, &sq, &SymElement::unit(2)).unwrap();
        prop_assert_eq!(paired.clone(), RadicalScalar::from_rational(planar_pairing(&sp, &sq).unwrap()));
        let volumes = p.minkowski_sum(&q.negate()).unwrap().volume().unwrap() - p.volume().unwrap() - q.volume().unwrap();
        prop_assert_eq!(paired, RadicalScalar::from_rational(volumes));
    }

    #[test]
    fn chi_oracle_is_symmetric_in_its_bodies(p in polygon(), q in polygon()) {
        prop_assert_eq!(chi_product_oracle(&[p.clone(), q.clone()]).unwrap(), chi_product_oracle(&[q, p]).unwrap());
    }
}

// ℓ_B carries facet areas, so the top product is 3! vol(B)^2.
#[test]
fn box_products_match_oracle() {
    let axes = LineArrangement::axes(3);
    let sides: Vec<Rational> = vec![rat(1, 2), int(3), rat(5, 3)];
    let b = Polytope::centered_box(&sides);
    let ell = ell_symmetric(&b, &axes).unwrap();
    let top = product(3, &[ell.clone(), ell.clone(), ell]).unwrap().top_evaluate().unwrap();
    let vol: Rational = sides.iter().product();
    assert_eq!(top, RadicalScalar::from_rational(chi_product_oracle(&[b.clone(), b.clone(), b]).unwrap()));
    assert_eq!(top, RadicalScalar::from_rational(&vol * &vol * int(6)));
}
