//! Centered zonotopes `Σ [−g, g]` and projection bodies.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::polytope::Polytope;
use crate::error::{Error, Result};
use crate::linalg::{dot, primitive_line, to_rational_vec, Matrix};
use crate::scalar::{int, Rational};

/// Zonotope `Σ [−g, g]` over its half-generators `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Zonotope {
    n: usize,
    generators: Vec<Vec<Rational>>,
}

impl Zonotope {
    /// Zero generators are dropped.
    pub fn new(generators: Vec<Vec<Rational>>, n: usize) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: g.len() });
        }
        let generators = generators.into_iter().filter(|g| g.iter().any(|x| !x.is_zero())).collect();
        Ok(Self { n, generators })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Vec<Rational>] {
        &self.generators
    }

    /// `h(x) = Σ |⟨g, x⟩|`.
    pub fn support(&self, x: &[Rational]) -> Rational {
        self.generators.iter().map(|g| dot(g, x).abs()).sum()
    }

    /// Vertex description via iterated Minkowski sums.
    pub fn to_polytope(&self) -> Polytope {
        let mut p = Polytope::hull(&[alloc::vec![Rational::zero(); self.n]], self.n).expect("a point");
        for g in &self.generators {
            let neg: Vec<Rational> = g.iter().map(|x| -x).collect();
            let seg = Polytope::hull(&[g.clone(), neg], self.n).expect("a segment");
            p = p.minkowski_sum(&seg).expect("same ambient");
        }
        p
    }

    /// `vol = 2ⁿ Σ_{n-subsets} |det|`.
    pub fn volume(&self) -> Rational {
        let mut total = Rational::zero();
        let k = self.generators.len();
        let n = self.n;
        let mut idx: Vec<usize> = (0..n).collect();
        if k < n {
            return total;
        }
        loop {
            let rows: Vec<Vec<Rational>> = idx.iter().map(|&i| self.generators[i].clone()).collect();
            total += Matrix::from_rows(rows, n).expect("n columns").det().expect("square").abs();
            // next combination
            let Some(pos) = (0..n).rev().find(|&i| idx[i] != i + k - n) else { break };
            idx[pos] += 1;
            for j in pos + 1..n {
                idx[j] = idx[j - 1] + 1;
            }
        }
        total * int(1i64 << n)
    }
}

/// Projection body as a zonotope: one half-generator `(w_ξ + w_{−ξ})/2 · ξ`
/// per facet-normal line, so that `h(x) = ½ Σ_F vol(F) |⟨u_F, x⟩|`.
pub fn projection_body(p: &Polytope) -> Result<Zonotope> {
    let m = p.surface_class()?;
    let mut lines: BTreeMap<Vec<BigInt>, Rational> = BTreeMap::new();
    for (d, w) in m.entries() {
        let line = primitive_line(&to_rational_vec(d)).expect("facet normals are nonzero");
        *lines.entry(line).or_insert_with(Rational::zero) += w;
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let gens = lines
        .into_iter()
        .map(|(l, w)| to_rational_vec(&l).into_iter().map(|x| x * &w * &half).collect())
        .collect();
    Zonotope::new(gens, p.ambient_dim())
}

/// `V(Z₁, …, Zₙ) = (2ⁿ/n!) Σ |det(g₁, …, gₙ)|` over one half-generator per zonotope.
pub fn zonotope_mixed_volume(zs: &[Zonotope]) -> Result<Rational> {
    let Some(first) = zs.first() else {
        return Err(Error::InvalidInput("no zonotopes".into()));
    };
    let n = first.n;
    if zs.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: zs.len() });
    }
    if let Some(z) = zs.iter().find(|z| z.n != n) {
        return Err(Error::DimensionMismatch { expected: n, found: z.n });
    }
    if zs.iter().any(|z| z.generators.is_empty()) {
        return Ok(Rational::zero());
    }
    let mut total = Rational::zero();
    let mut idx = alloc::vec![0usize; n];
    loop {
        let rows: Vec<Vec<Rational>> = (0..n).map(|i| zs[i].generators[idx[i]].clone()).collect();
        total += Matrix::from_rows(rows, n)?.det()?.abs();
        let mut i = 0;
        loop {
            if i == n {
                let fact: i64 = (1..=n as i64).product();
                return Ok(total * Rational::new(BigInt::from(1i64 << n), BigInt::from(fact)));
            }
            idx[i] += 1;
            if idx[i] < zs[i].generators.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::mixed::mixed_volume_polarization;
    use crate::scalar::rat;
    use alloc::vec;
    use proptest::prelude::*;

    fn z(gens: &[&[i64]]) -> Zonotope {
        let n = gens[0].len();
        Zonotope::new(gens.iter().map(|g| g.iter().map(|&x| int(x)).collect()).collect(), n).unwrap()
    }

    #[test]
    fn cube_projection_body() {
        let pc = projection_body(&Polytope::unit_cube(3)).unwrap();
        let mut gens = pc.generators().to_vec();
        gens.sort();
        assert_eq!(gens, vec![vec![int(0), int(0), int(1)], vec![int(0), int(1), int(0)], vec![int(1), int(0), int(0)]]);
        assert_eq!(pc.to_polytope(), Polytope::centered_box(&[int(2), int(2), int(2)]));
        assert_eq!(zonotope_mixed_volume(&[pc.clone(), pc.clone(), pc]).unwrap(), int(8));
    }

    #[test]
    fn mixed_volume_examples() {
        let a = Zonotope::new(vec![vec![rat(1, 2), int(0)], vec![int(0), rat(1, 2)]], 2).unwrap();
        assert_eq!(zonotope_mixed_volume(&[a.clone(), a]).unwrap(), int(1));
        assert_eq!(zonotope_mixed_volume(&[z(&[&[1, 0]]), z(&[&[0, 1]])]).unwrap(), int(2));
        assert!(zonotope_mixed_volume(&[z(&[&[1, 0]])]).is_err());
    }

    fn projection_support_by_facets(p: &Polytope, x: &[Rational]) -> Rational {
        p.facets().iter().map(|f| dot(&to_rational_vec(&f.normal), x).abs() * &f.weight).sum::<Rational>() / int(2)
    }

    fn random_zonotope(n: usize) -> impl Strategy<Value = Zonotope> {
        prop::collection::vec(prop::collection::vec(-3i64..=3, n), 1..=n + 1).prop_map(move |gs| {
            Zonotope::new(gs.iter().map(|g| g.iter().map(|&x| int(x)).collect()).collect(), n).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn projection_body_support(pts in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 8), x in prop::collection::vec(-5i64..=5, 3)) {
            let p = Polytope::from_i64(&pts, 3).unwrap();
            prop_assume!(p.is_full_dimensional());
            let x: Vec<Rational> = x.iter().map(|&v| int(v)).collect();
            let pb = projection_body(&p).unwrap();
            prop_assert_eq!(pb.support(&x), projection_support_by_facets(&p, &x));
            prop_assert_eq!(pb.to_polytope().support(&x), pb.support(&x));
            prop_assert!(pb.to_polytope().is_centrally_symmetric());
        }

        #[test]
        fn zonotope_routes_agree_2d(a in random_zonotope(2), b in random_zonotope(2)) {
            let v = zonotope_mixed_volume(&[a.clone(), b.clone()]).unwrap();
            prop_assert_eq!(&v, &zonotope_mixed_volume(&[b.clone(), a.clone()]).unwrap());
            let pol = mixed_volume_polarization(&[(a.to_polytope(), 1), (b.to_polytope(), 1)]).unwrap();
            prop_assert_eq!(&v, &pol);
            prop_assert_eq!(zonotope_mixed_volume(&[a.clone(), a.clone()]).unwrap(), a.volume());
        }

        #[test]
        fn zonotope_routes_agree_3d(a in random_zonotope(3), b in random_zonotope(3)) {
            let v = zonotope_mixed_volume(&[a.clone(), a.clone(), b.clone()]).unwrap();
            let pol = mixed_volume_polarization(&[(a.to_polytope(), 2), (b.to_polytope(), 1)]).unwrap();
            prop_assert_eq!(v, pol);
            prop_assert_eq!(a.to_polytope().volume_or_zero(), a.volume());
        }
    }
}
