//! Signed discrete measures on facet-normal directions.
//!
//! An entry `(ξ, w)` with primitive integer `ξ` carries mass `w·|ξ|` at the
//! unit vector `ξ/|ξ|`. Storing `w` instead of the mass keeps everything
//! rational. A centered measure models a degree-one class.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arrangement::LineArrangement;
use crate::error::{Error, Result};
use crate::linalg::{primitive_direction, to_rational_vec};
use crate::scalar::{RadicalScalar, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedDirections {
    n: usize,
    entries: BTreeMap<Vec<BigInt>, Rational>,
}

impl WeightedDirections {
    pub fn new(n: usize) -> Self {
        Self { n, entries: BTreeMap::new() }
    }

    /// Builds a measure from arbitrary nonzero rational directions; a
    /// direction `c·ξ` with weight `w` becomes `(ξ, c·w)`.
    pub fn from_entries<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<Rational>, Rational)>,
    {
        let mut out = Self::new(n);
        for (dir, w) in entries {
            out.add(&dir, w)?;
        }
        Ok(out)
    }

    pub fn from_i64(n: usize, entries: &[(Vec<i64>, Rational)]) -> Result<Self> {
        Self::from_entries(
            n,
            entries.iter().map(|(d, w)| (d.iter().map(|&x| Rational::from_integer(x.into())).collect(), w.clone())),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Adds weight `w` at direction `dir`, rescaling to the primitive direction.
    pub fn add(&mut self, dir: &[Rational], w: Rational) -> Result<()> {
        if dir.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: dir.len() });
        }
        let (p, c) = primitive_direction(dir).ok_or_else(|| Error::InvalidInput("zero direction".into()))?;
        self.add_primitive(p, w * c);
        Ok(())
    }

    /// Adds weight at an already primitive direction.
    pub fn add_primitive(&mut self, dir: Vec<BigInt>, w: Rational) {
        if w.is_zero() {
            return;
        }
        let slot = self.entries.entry(dir.clone()).or_insert_with(Rational::zero);
        *slot += w;
        if slot.is_zero() {
            self.entries.remove(&dir);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<BigInt>, &Rational)> {
        self.entries.iter()
    }

    pub fn weight(&self, dir: &[BigInt]) -> Rational {
        self.entries.get(dir).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ w ξ`.
    pub fn centroid(&self) -> Vec<Rational> {
        let mut c = alloc::vec![Rational::zero(); self.n];
        for (d, w) in &self.entries {
            for (ci, di) in c.iter_mut().zip(d) {
                *ci += w * Rational::from_integer(di.clone());
            }
        }
        c
    }

    pub fn is_centered(&self) -> bool {
        self.centroid().iter().all(Zero::is_zero)
    }

    /// Invariant under `ξ ↦ −ξ`.
    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|(d, w)| self.weight(&negate(d)) == *w)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|w| !w.is_negative())
    }

    /// Pushforward under `ξ ↦ −ξ`.
    pub fn antipode(&self) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|(d, w)| (negate(d), w.clone())).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::new(self.n);
        for (d, w) in &self.entries {
            out.add_primitive(d.clone(), w * c);
        }
        out
    }

    pub fn negated(&self) -> Self {
        self.scale(&Rational::from_integer((-1).into()))
    }

    /// Sum of measures; parallel equally oriented entries merge.
    pub fn blaschke_sum(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        let mut out = self.clone();
        for (d, w) in &other.entries {
            out.add_primitive(d.clone(), w.clone());
        }
        Ok(out)
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.blaschke_sum(&other.negated())
    }

    /// Total mass `w·√(ξ·ξ)` at a direction, as an exact radical.
    pub fn mass(&self, dir: &[BigInt]) -> RadicalScalar {
        let w = self.weight(dir);
        let norm2: BigInt = dir.iter().map(|x| x * x).sum();
        &RadicalScalar::sqrt(&Rational::from_integer(norm2)).expect("squared norm is nonnegative") * &w
    }

    /// Every direction lies on a line of `e`.
    pub fn supported_on(&self, e: &LineArrangement) -> bool {
        self.n == e.ambient_dim() && self.entries.keys().all(|d| e.line_index(d).is_some())
    }

    /// Positive and negative parts as nonnegative measures.
    pub fn split(&self) -> (Self, Self) {
        let mut pos = Self::new(self.n);
        let mut neg = Self::new(self.n);
        for (d, w) in &self.entries {
            if w.is_positive() {
                pos.add_primitive(d.clone(), w.clone());
            } else {
                neg.add_primitive(d.clone(), -w.clone());
            }
        }
        (pos, neg)
    }

    pub fn directions_as_rational(&self) -> Vec<Vec<Rational>> {
        self.entries.keys().map(|d| to_rational_vec(d)).collect()
    }
}

pub(crate) fn negate(d: &[BigInt]) -> Vec<BigInt> {
    d.iter().map(|x| -x).collect()
}
