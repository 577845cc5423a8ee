use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::hull::integer_hull;
use crate::error::{Error, Result};
use crate::linalg::{dot, to_rational_vec};
use crate::measure::WeightedDirections;
use crate::scalar::{int, RadicalScalar, Rational};

/// Facet record with rational data only: the facet volume is
/// `weight · √(normal·normal)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetData {
    pub normal: Vec<BigInt>,
    pub offset: Rational,
    pub weight: Rational,
}

impl FacetData {
    pub fn area(&self) -> RadicalScalar {
        let n2: BigInt = self.normal.iter().map(|x| x * x).sum();
        &RadicalScalar::sqrt(&Rational::from_integer(n2)).expect("nonnegative") * &self.weight
    }
}

/// Convex polytope given by its extreme points, with derived facet data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polytope {
    n: usize,
    affine_dim: usize,
    vertices: Vec<Vec<Rational>>,
    facets: Vec<FacetData>,
    volume: Rational,
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl Polytope {
    /// Convex hull of `points` in ℝⁿ.
    pub fn hull(points: &[Vec<Rational>], n: usize) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidInput("hull of an empty point set".into()));
        }
        if let Some(p) = points.iter().find(|p| p.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: p.len() });
        }
        let distinct: Vec<Vec<Rational>> =
            points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let mut lcm = BigInt::one();
        for p in &distinct {
            for x in p {
                lcm = lcm.lcm(x.denom());
            }
        }
        let scale = Rational::from_integer(lcm.clone());
        let ints: Vec<Vec<BigInt>> = distinct
            .iter()
            .map(|p| p.iter().map(|x| (x * &scale).to_integer()).collect())
            .collect();
        let raw = integer_hull(&ints, n)?;
        let vertices: Vec<Vec<Rational>> = raw.vertices.iter().map(|&i| distinct[i].clone()).collect();
        let mut facets: Vec<FacetData> = Vec::new();
        let mut volume = Rational::zero();
        if raw.affine_dim == n {
            let lpow = |k: usize| Rational::from_integer(lcm.pow(k as u32));
            let fw = Rational::from_integer(factorial(n - 1)) * lpow(n - 1);
            for f in raw.facets {
                facets.push(FacetData {
                    normal: f.normal,
                    offset: Rational::new(f.offset, lcm.clone()),
                    weight: Rational::from_integer(f.scaled_weight) / &fw,
                });
            }
            facets.sort_by(|a, b| a.normal.cmp(&b.normal));
            volume = Rational::from_integer(raw.scaled_volume) / (Rational::from_integer(factorial(n)) * lpow(n));
        }
        Ok(Self { n, affine_dim: raw.affine_dim, vertices, facets, volume })
    }

    pub fn from_i64(points: &[Vec<i64>], n: usize) -> Result<Self> {
        let pts: Vec<Vec<Rational>> = points.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect();
        Self::hull(&pts, n)
    }

    /// Axis-parallel box `Π [−aᵢ/2, aᵢ/2]`.
    pub fn centered_box(sides: &[Rational]) -> Self {
        let n = sides.len();
        let half = Rational::new(1.into(), 2.into());
        let pts: Vec<Vec<Rational>> = (0..1usize << n)
            .map(|mask| {
                (0..n)
                    .map(|i| {
                        let h = &sides[i] * &half;
                        if mask >> i & 1 == 1 { h } else { -h }
                    })
                    .collect()
            })
            .collect();
        Self::hull(&pts, n).expect("boxes are valid")
    }

    /// Unit cube `[−1/2, 1/2]ⁿ`.
    pub fn unit_cube(n: usize) -> Self {
        Self::centered_box(&alloc::vec![Rational::one(); n])
    }

    /// Standard simplex `conv(0, e₁, …, eₙ)`.
    pub fn standard_simplex(n: usize) -> Self {
        let mut pts = alloc::vec![alloc::vec![Rational::zero(); n]];
        for i in 0..n {
            let mut e = alloc::vec![Rational::zero(); n];
            e[i] = Rational::one();
            pts.push(e);
        }
        Self::hull(&pts, n).expect("simplices are valid")
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.n
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[FacetData] {
        &self.facets
    }

    /// Lebesgue volume; errors on lower-dimensional input.
    pub fn volume(&self) -> Result<Rational> {
        if !self.is_full_dimensional() {
            return Err(Error::Degenerate("volume of a lower-dimensional polytope"));
        }
        Ok(self.volume.clone())
    }

    /// Lebesgue volume, zero for lower-dimensional input.
    pub fn volume_or_zero(&self) -> Rational {
        self.volume.clone()
    }

    /// Facet-normal measure `Σ (ξ, w)`.
    pub fn surface_class(&self) -> Result<WeightedDirections> {
        if !self.is_full_dimensional() {
            return Err(Error::Degenerate("surface class of a lower-dimensional polytope"));
        }
        let mut m = WeightedDirections::new(self.n);
        for f in &self.facets {
            m.add_primitive(f.normal.clone(), f.weight.clone());
        }
        debug_assert!(m.is_centered());
        Ok(m)
    }

    /// Support function `max_v ⟨v, x⟩`.
    pub fn support(&self, x: &[Rational]) -> Rational {
        self.vertices.iter().map(|v| dot(v, x)).max().expect("polytopes are nonempty")
    }

    pub fn support_int(&self, x: &[BigInt]) -> Rational {
        self.support(&to_rational_vec(x))
    }

    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Self::hull(&pts, self.n)
    }

    pub fn negate(&self) -> Self {
        self.scale(&int(-1))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let pts: Vec<Vec<Rational>> = self.vertices.iter().map(|v| v.iter().map(|x| x * c).collect()).collect();
        Self::hull(&pts, self.n).expect("scaled vertex sets are nonempty")
    }

    pub fn translate(&self, t: &[Rational]) -> Self {
        let pts: Vec<Vec<Rational>> =
            self.vertices.iter().map(|v| v.iter().zip(t).map(|(x, y)| x + y).collect()).collect();
        Self::hull(&pts, self.n).expect("translated vertex sets are nonempty")
    }

    /// Mean of the vertices.
    pub fn vertex_centroid(&self) -> Vec<Rational> {
        let k = Rational::from_integer(BigInt::from(self.vertices.len()));
        (0..self.n).map(|i| self.vertices.iter().map(|v| v[i].clone()).sum::<Rational>() / &k).collect()
    }

    /// Invariant under the point reflection through the vertex centroid.
    pub fn is_centrally_symmetric(&self) -> bool {
        let c = self.vertex_centroid();
        let set: BTreeSet<&Vec<Rational>> = self.vertices.iter().collect();
        self.vertices.iter().all(|v| {
            let r: Vec<Rational> = v.iter().zip(&c).map(|(x, ci)| ci * int(2) - x).collect();
            set.contains(&r)
        })
    }
}
