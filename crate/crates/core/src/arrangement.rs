//! Line arrangements and their lattices of spanned subspaces.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{primitive_line, to_rational_vec, Matrix, Subspace};
use crate::scalar::Rational;

/// A finite set of pairwise non-parallel lines spanning ℝⁿ.
///
/// Each line is stored as a primitive integer vector whose first nonzero
/// entry is positive; lines are kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineArrangement {
    n: usize,
    lines: Vec<Vec<BigInt>>,
}

impl LineArrangement {
    pub fn new(lines: Vec<Vec<BigInt>>, n: usize) -> Result<Self> {
        let rational: Vec<Vec<Rational>> = lines.iter().map(|l| to_rational_vec(l)).collect();
        Self::from_rational(&rational, n)
    }

    pub fn from_i64(lines: &[Vec<i64>], n: usize) -> Result<Self> {
        Self::new(lines.iter().map(|l| l.iter().map(|&x| BigInt::from(x)).collect()).collect(), n)
    }

    /// Scales rational directions to primitive integers, then validates.
    pub fn from_rational(lines: &[Vec<Rational>], n: usize) -> Result<Self> {
        let mut set = BTreeSet::new();
        for l in lines {
            if l.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: l.len() });
            }
            let p = primitive_line(l).ok_or_else(|| Error::InvalidInput("zero line direction".into()))?;
            if !set.insert(p) {
                return Err(Error::InvalidInput("parallel lines in arrangement".into()));
            }
        }
        let lines: Vec<Vec<BigInt>> = set.into_iter().collect();
        if n == 0 || Matrix::from_int_rows(&lines, n)?.rank() < n {
            return Err(Error::InvalidInput("lines do not span the ambient space".into()));
        }
        Ok(Self { n, lines })
    }

    /// The coordinate axes of ℝⁿ.
    pub fn axes(n: usize) -> Self {
        let lines = (0..n)
            .rev()
            .map(|i| (0..n).map(|j| BigInt::from((i == j) as i32)).collect())
            .collect();
        Self { n, lines }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn lines(&self) -> &[Vec<BigInt>] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn line_subspace(&self, i: usize) -> Subspace {
        Subspace::span_int(&self.lines[i..=i], self.n).expect("lines have ambient length")
    }

    /// Index of the line through `v` (either orientation).
    pub fn line_index(&self, v: &[BigInt]) -> Option<usize> {
        let p = primitive_line(&to_rational_vec(v))?;
        self.lines.binary_search(&p).ok()
    }
}

/// The subspaces `L₁ + ⋯ + L_k` of dimension `k` spanned by lines of an
/// arrangement, for `k = 0..=n`.
#[derive(Clone, Debug)]
pub struct SubspaceLattice {
    n: usize,
    levels: Vec<Vec<Subspace>>,
    witnesses: BTreeMap<Subspace, Vec<usize>>,
}

impl SubspaceLattice {
    /// Breadth-first closure: level `k+1` collects `M + ℓ` over `M` in level
    /// `k` and lines `ℓ ⊄ M`.
    pub fn build(e: &LineArrangement) -> Self {
        let n = e.ambient_dim();
        let line_spaces: Vec<Subspace> = (0..e.len()).map(|i| e.line_subspace(i)).collect();
        let zero = Subspace::zero(n);
        let mut witnesses = BTreeMap::new();
        witnesses.insert(zero.clone(), Vec::new());
        let mut levels = alloc::vec![alloc::vec![zero]];
        for _ in 0..n {
            let mut next: BTreeMap<Subspace, Vec<usize>> = BTreeMap::new();
            for m in levels.last().expect("nonempty") {
                let wit = &witnesses[m];
                for (i, l) in line_spaces.iter().enumerate() {
                    if m.contains(l) {
                        continue;
                    }
                    let s = m.sum(l).expect("same ambient");
                    next.entry(s).or_insert_with(|| {
                        let mut w = wit.clone();
                        w.push(i);
                        w
                    });
                }
            }
            levels.push(next.keys().cloned().collect());
            witnesses.extend(next);
        }
        Self { n, levels, witnesses }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn level(&self, k: usize) -> &[Subspace] {
        &self.levels[k]
    }

    pub fn levels(&self) -> &[Vec<Subspace>] {
        &self.levels
    }

    pub fn profile(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Position of `s` within its level, in the canonical basis order.
    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.levels.get(s.dim())?.binary_search(s).ok()
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.index_of(s).is_some()
    }

    /// Indices of `k` independent lines whose sum is `s`.
    pub fn witness(&self, s: &Subspace) -> Option<&[usize]> {
        self.witnesses.get(s).map(Vec::as_slice)
    }
}

/// One comparison `|𝓛_k| ≤ |𝓛_{n−k}|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopHeavyCheck {
    pub k: usize,
    pub lower: usize,
    pub upper: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DowlingWilsonReport {
    pub profile: Vec<usize>,
    pub checks: Vec<TopHeavyCheck>,
}

impl DowlingWilsonReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

pub fn dowling_wilson_profile(lattice: &SubspaceLattice) -> DowlingWilsonReport {
    let profile = lattice.profile();
    let n = lattice.ambient_dim();
    let checks = (0..=n / 2)
        .map(|k| {
            let (lower, upper) = (profile[k], profile[n - k]);
            TopHeavyCheck { k, lower, upper, holds: lower <= upper }
        })
        .collect();
    DowlingWilsonReport { profile, checks }
}

/// `true` when the vectors are linearly independent.
pub fn independent(vectors: &[Vec<BigInt>], n: usize) -> bool {
    vectors.iter().all(|v| !v.iter().all(Zero::is_zero))
        && Matrix::from_int_rows(vectors, n).map(|m| m.rank() == vectors.len()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn arr(lines: &[&[i64]], n: usize) -> LineArrangement {
        LineArrangement::from_i64(&lines.iter().map(|l| l.to_vec()).collect::<Vec<_>>(), n).unwrap()
    }

    #[test]
    fn axes_profile() {
        let l = SubspaceLattice::build(&LineArrangement::axes(3));
        assert_eq!(l.profile(), vec![1, 3, 3, 1]);
        let dw = dowling_wilson_profile(&l);
        assert!(dw.holds());
        assert!(dw.checks.iter().all(|c| c.lower == c.upper));
    }

    #[test]
    fn generic_and_special_profiles() {
        let e = arr(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]], 3);
        assert_eq!(SubspaceLattice::build(&e).profile(), vec![1, 4, 6, 1]);
        let e = arr(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0]], 3);
        let l = SubspaceLattice::build(&e);
        assert_eq!(l.profile(), vec![1, 4, 4, 1]);
        assert!(dowling_wilson_profile(&l).holds());
        // moment curve: any 4 points independent, so every 3 lines span a distinct hyperplane
        let lines: Vec<Vec<i64>> = (1..=6).map(|t: i64| vec![1, t, t * t, t * t * t]).collect();
        let e = LineArrangement::from_i64(&lines, 4).unwrap();
        let l = SubspaceLattice::build(&e);
        assert_eq!(l.profile(), vec![1, 6, 15, 20, 1]);
        assert!(dowling_wilson_profile(&l).holds());
    }

    #[test]
    fn invalid_arrangements() {
        assert!(LineArrangement::from_i64(&[vec![1, 0], vec![2, 0], vec![0, 1]], 2).is_err());
        assert!(LineArrangement::from_i64(&[vec![1, 0, 0], vec![0, 1, 0]], 3).is_err());
        assert!(LineArrangement::from_i64(&[vec![0, 0], vec![0, 1]], 2).is_err());
        let e = LineArrangement::from_i64(&[vec![-2, 4], vec![0, 3]], 2).unwrap();
        assert_eq!(e.lines()[1], vec![BigInt::from(1), BigInt::from(-2)]);
    }

    fn random_arrangement() -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
        (2usize..=4).prop_flat_map(|n| {
            (prop::collection::vec(prop::collection::vec(-3i64..=3, n), n..n + 4), Just(n))
        })
    }

    proptest! {
        #[test]
        fn lattice_invariants((lines, n) in random_arrangement(), seed in any::<u64>()) {
            let Ok(e) = LineArrangement::from_i64(&lines, n) else { return Ok(()); };
            let l = SubspaceLattice::build(&e);
            let p = l.profile();
            prop_assert_eq!(p[1], e.len());
            prop_assert_eq!(p[n], 1);
            for k in 1..=n {
                for s in l.level(k) {
                    prop_assert_eq!(s.dim(), k);
                    let w = l.witness(s).unwrap();
                    prop_assert_eq!(w.len(), k);
                    let vs: Vec<Vec<BigInt>> = w.iter().map(|&i| e.lines()[i].clone()).collect();
                    prop_assert!(independent(&vs, n));
                    prop_assert_eq!(&Subspace::span_int(&vs, n).unwrap(), s);
                    prop_assert!(l.level(k - 1).iter().any(|m| s.contains(m)));
                }
            }
            prop_assert!(dowling_wilson_profile(&l).holds());
            // permuting the input (and flipping orientations) changes nothing
            let mut perm = lines.clone();
            let len = perm.len();
            perm.rotate_left((seed as usize) % len);
            for v in perm.iter_mut().step_by(2) {
                for x in v.iter_mut() { *x = -*x; }
            }
            let e2 = LineArrangement::from_i64(&perm, n).unwrap();
            prop_assert_eq!(&e2, &e);
            let l2 = SubspaceLattice::build(&e2);
            prop_assert_eq!(l2.levels(), l.levels());
        }
    }
}
