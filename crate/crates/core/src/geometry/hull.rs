//! Exact convex hulls of integer point sets by beneath-beyond placing.
//!
//! The boundary is kept as a triangulation: every facet record is a
//! `(d−1)`-simplex with an outward cofactor normal. Coplanar simplices are
//! merged into true facets at the end.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{det_int, dot_int, to_rational_vec, Matrix};

/// A true facet of an integer hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawFacet {
    /// Primitive outward normal.
    pub normal: Vec<BigInt>,
    /// `⟨normal, x⟩ = offset` on the facet.
    pub offset: BigInt,
    /// `(d−1)! · vol_{d−1}(F) / |normal|`, an integer for lattice simplices.
    pub scaled_weight: BigInt,
    /// Indices of the extreme points on the facet.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawHull {
    pub affine_dim: usize,
    /// Indices of the extreme points, ascending.
    pub vertices: Vec<usize>,
    /// Empty unless the input is full-dimensional.
    pub facets: Vec<RawFacet>,
    /// `d! · vol_d`; zero for degenerate input.
    pub scaled_volume: BigInt,
}

struct Simplex {
    verts: Vec<usize>,
    normal: Vec<BigInt>,
    offset: BigInt,
    /// The same plane in `i64`, when it fits.
    fast: Option<(Vec<i64>, i64)>,
    alive: bool,
}

/// Coordinates below this bound use the `i64` fast path.
const FAST_COORD_BOUND: i64 = 1 << 20;
const FAST_DIM: usize = 8;

fn fast_points(pts: &[Vec<BigInt>]) -> Option<Vec<Vec<i64>>> {
    if pts.first().is_some_and(|p| p.len() > FAST_DIM) {
        return None;
    }
    pts.iter()
        .map(|p| p.iter().map(|x| x.to_i64().filter(|v| v.abs() < FAST_COORD_BOUND)).collect())
        .collect()
}

fn dot_i64(a: &[i64], b: &[i64]) -> Option<i64> {
    a.iter().zip(b).try_fold(0i64, |acc, (x, y)| acc.checked_add(x.checked_mul(*y)?))
}

/// Checked Bareiss determinant of the leading `n × n` block.
fn det_small(mut m: [[i64; FAST_DIM]; FAST_DIM], n: usize) -> Option<i64> {
    if n == 0 {
        return Some(1);
    }
    let mut negate = false;
    let mut prev = 1i64;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let p = (k + 1..n).find(|&i| m[i][k] != 0);
            let Some(p) = p else { return Some(0) };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k])?;
                let b = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
        }
        prev = m[k][k];
    }
    Some(if negate { -m[n - 1][n - 1] } else { m[n - 1][n - 1] })
}

fn cofactor_normal_fast(pts: &[Vec<i64>], verts: &[usize], d: usize) -> Option<Vec<i64>> {
    let v0 = &pts[verts[0]];
    let mut edges = [[0i64; FAST_DIM]; FAST_DIM];
    for (r, &i) in verts[1..].iter().enumerate() {
        for c in 0..d {
            edges[r][c] = pts[i][c] - v0[c];
        }
    }
    (0..d)
        .map(|j| {
            let mut minor = [[0i64; FAST_DIM]; FAST_DIM];
            for r in 0..d - 1 {
                for (cc, c) in (0..d).filter(|&c| c != j).enumerate() {
                    minor[r][cc] = edges[r][c];
                }
            }
            let m = det_small(minor, d - 1)?;
            Some(if (d - 1 + j) % 2 == 1 { -m } else { m })
        })
        .collect()
}

/// Cofactor normal `N` with `N·y = det(v₁−v₀, …, v_{d−1}−v₀, y)`.
fn cofactor_normal(pts: &[Vec<BigInt>], verts: &[usize], d: usize) -> Vec<BigInt> {
    let v0 = &pts[verts[0]];
    let edges: Vec<Vec<BigInt>> = verts[1..]
        .iter()
        .map(|&i| pts[i].iter().zip(v0).map(|(a, b)| a - b).collect())
        .collect();
    (0..d)
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = edges
                .iter()
                .map(|e| e.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let m = det_int(minor);
            if (d - 1 + j) % 2 == 1 { -m } else { m }
        })
        .collect()
}

fn affine_basis(pts: &[Vec<BigInt>], d: usize) -> Vec<usize> {
    let mut chosen = vec![0usize];
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, p) in pts.iter().enumerate().skip(1) {
        if chosen.len() == d + 1 {
            break;
        }
        let diff: Vec<BigInt> = p.iter().zip(&pts[0]).map(|(a, b)| a - b).collect();
        rows.push(diff);
        let rank = Matrix::from_int_rows(&rows, d).expect("rows have length d").rank();
        if rank == rows.len() {
            chosen.push(i);
        } else {
            rows.pop();
        }
    }
    chosen
}

/// Hull of distinct integer points in ℤᵈ.
pub fn integer_hull(pts: &[Vec<BigInt>], d: usize) -> Result<RawHull> {
    if pts.is_empty() {
        return Err(Error::InvalidInput("hull of an empty point set".into()));
    }
    if let Some(p) = pts.iter().find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: p.len() });
    }
    let basis = affine_basis(pts, d);
    let r = basis.len() - 1;
    if r < d {
        return Ok(degenerate_hull(pts, d, &basis));
    }
    if d == 1 {
        let (lo, hi) = extremes_1d(pts, 0);
        let facets = vec![
            RawFacet { normal: vec![-BigInt::one()], offset: -pts[lo][0].clone(), scaled_weight: BigInt::one(), vertices: vec![lo] },
            RawFacet { normal: vec![BigInt::one()], offset: pts[hi][0].clone(), scaled_weight: BigInt::one(), vertices: vec![hi] },
        ];
        let mut vertices = vec![lo, hi];
        vertices.sort_unstable();
        return Ok(RawHull { affine_dim: 1, vertices, facets, scaled_volume: &pts[hi][0] - &pts[lo][0] });
    }
    Ok(full_hull(pts, d, &basis))
}

fn extremes_1d(pts: &[Vec<BigInt>], c: usize) -> (usize, usize) {
    let mut lo = 0;
    let mut hi = 0;
    for (i, p) in pts.iter().enumerate() {
        if p[c] < pts[lo][c] {
            lo = i;
        }
        if p[c] > pts[hi][c] {
            hi = i;
        }
    }
    (lo, hi)
}

fn degenerate_hull(pts: &[Vec<BigInt>], d: usize, basis: &[usize]) -> RawHull {
    let r = basis.len() - 1;
    let vertices = match r {
        0 => vec![0],
        _ => {
            // Coordinate projection onto the pivot columns is injective on the affine hull.
            let rows: Vec<Vec<BigInt>> = basis[1..]
                .iter()
                .map(|&i| pts[i].iter().zip(&pts[basis[0]]).map(|(a, b)| a - b).collect())
                .collect();
            let (_, pivots) = Matrix::from_int_rows(&rows, d).expect("rows have length d").rref();
            let projected: Vec<Vec<BigInt>> =
                pts.iter().map(|p| pivots.iter().map(|&c| p[c].clone()).collect()).collect();
            if r == 1 {
                let (lo, hi) = extremes_1d(&projected, 0);
                let mut v = vec![lo, hi];
                v.sort_unstable();
                v
            } else {
                let sub = affine_basis(&projected, r);
                full_hull(&projected, r, &sub).vertices
            }
        }
    };
    RawHull { affine_dim: r, vertices, facets: Vec::new(), scaled_volume: BigInt::zero() }
}

fn full_hull(pts: &[Vec<BigInt>], d: usize, basis: &[usize]) -> RawHull {
    let mut facets: Vec<Simplex> = Vec::new();
    let mut ridges: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    // (d+1)·centroid of the initial simplex; strictly interior forever after.
    let mut interior = vec![BigInt::zero(); d];
    for &i in basis {
        for (c, x) in interior.iter_mut().zip(&pts[i]) {
            *c += x;
        }
    }
    let scale = BigInt::from(d + 1);
    let fast_pts = fast_points(pts);

    let make = |verts: Vec<usize>| -> Simplex {
        let fast_normal = fast_pts.as_ref().and_then(|fp| cofactor_normal_fast(fp, &verts, d));
        let mut normal = match &fast_normal {
            Some(f) => f.iter().map(|&x| BigInt::from(x)).collect(),
            None => cofactor_normal(pts, &verts, d),
        };
        let mut offset = dot_int(&normal, &pts[verts[0]]);
        let flip = dot_int(&normal, &interior) > &offset * &scale;
        if flip {
            for x in &mut normal {
                *x = -core::mem::take(x);
            }
            offset = -offset;
        }
        let fast = fast_normal.and_then(|f| {
            let f: Vec<i64> = if flip { f.iter().map(|x| -x).collect() } else { f };
            Some((f, offset.to_i64()?))
        });
        Simplex { verts, normal, offset, fast, alive: true }
    };

    let add = |facets: &mut Vec<Simplex>, ridges: &mut BTreeMap<Vec<usize>, Vec<usize>>, s: Simplex| {
        let id = facets.len();
        for skip in 0..s.verts.len() {
            let mut r: Vec<usize> = s.verts.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect();
            r.sort_unstable();
            ridges.entry(r).or_default().push(id);
        }
        facets.push(s);
    };

    let first = {
        let rows: Vec<Vec<BigInt>> = basis[1..]
            .iter()
            .map(|&i| pts[i].iter().zip(&pts[basis[0]]).map(|(a, b)| a - b).collect())
            .collect();
        det_int(rows).abs()
    };
    let mut volume = first;
    for skip in 0..=d {
        let verts: Vec<usize> = basis.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect();
        let s = make(verts);
        add(&mut facets, &mut ridges, s);
    }

    // Strict height of point `pi` above simplex `f`, if positive.
    let above = |f: &Simplex, pi: usize| -> Option<BigInt> {
        if let (Some((nf, of)), Some(fp)) = (&f.fast, &fast_pts) {
            if let Some(h) = dot_i64(nf, &fp[pi]) {
                return (h > *of).then(|| BigInt::from(h - of));
            }
        }
        let h = dot_int(&f.normal, &pts[pi]);
        (h > f.offset).then(|| h - &f.offset)
    };

    // Conflict lists: every unplaced outside point waits on one visible simplex.
    let in_basis: BTreeSet<usize> = basis.iter().copied().collect();
    let mut conflicts: Vec<Vec<usize>> = vec![Vec::new(); facets.len()];
    for pi in (0..pts.len()).filter(|i| !in_basis.contains(i)) {
        if let Some(id) = (0..facets.len()).find(|&id| above(&facets[id], pi).is_some()) {
            conflicts[id].push(pi);
        }
    }
    let ridges_of = |verts: &[usize]| -> Vec<Vec<usize>> {
        (0..verts.len())
            .map(|skip| {
                let mut r: Vec<usize> = verts.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect();
                r.sort_unstable();
                r
            })
            .collect()
    };
    let mut cursor = 0;
    while cursor < facets.len() {
        if !facets[cursor].alive || conflicts[cursor].is_empty() {
            cursor += 1;
            continue;
        }
        let pi = conflicts[cursor].pop().expect("nonempty");
        // The visible region is connected; grow it across ridges.
        let mut visible: BTreeSet<usize> = BTreeSet::new();
        let mut stack = vec![cursor];
        visible.insert(cursor);
        volume += above(&facets[cursor], pi).expect("conflict points are strictly outside");
        while let Some(id) = stack.pop() {
            for r in ridges_of(&facets[id].verts) {
                for &o in &ridges[&r] {
                    if !visible.contains(&o) {
                        if let Some(h) = above(&facets[o], pi) {
                            volume += h;
                            visible.insert(o);
                            stack.push(o);
                        }
                    }
                }
            }
        }
        let mut horizon: Vec<Vec<usize>> = Vec::new();
        let mut orphans: Vec<usize> = Vec::new();
        for &id in &visible {
            for r in ridges_of(&facets[id].verts) {
                let owners = ridges.get_mut(&r).expect("every ridge is registered");
                owners.retain(|&o| o != id);
                if !owners.is_empty() && !owners.iter().any(|o| visible.contains(o)) {
                    horizon.push(r.clone());
                }
                if owners.is_empty() {
                    ridges.remove(&r);
                }
            }
            facets[id].alive = false;
            orphans.append(&mut conflicts[id]);
        }
        let first_new = facets.len();
        for r in horizon {
            let mut verts = r;
            verts.push(pi);
            let s = make(verts);
            add(&mut facets, &mut ridges, s);
            conflicts.push(Vec::new());
        }
        // An outside point that saw a removed simplex sees a new one.
        for q in orphans {
            if let Some(id) = (first_new..facets.len()).find(|&id| above(&facets[id], q).is_some()) {
                conflicts[id].push(q);
            }
        }
        cursor = cursor.min(first_new);
    }

    // Merge coplanar simplices into facets.
    let mut planes: BTreeMap<(Vec<BigInt>, BigInt), BigInt> = BTreeMap::new();
    let mut used: BTreeSet<usize> = BTreeSet::new();
    for f in facets.iter().filter(|f| f.alive) {
        let mut g = BigInt::zero();
        for x in &f.normal {
            g = g.gcd(x);
        }
        let prim: Vec<BigInt> = f.normal.iter().map(|x| x / &g).collect();
        let off = &f.offset / &g;
        *planes.entry((prim, off)).or_insert_with(BigInt::zero) += g;
        used.extend(f.verts.iter().copied());
    }
    let plane_list: Vec<(Vec<BigInt>, BigInt, BigInt)> =
        planes.into_iter().map(|((n, o), w)| (n, o, w)).collect();
    let vertices: Vec<usize> = used
        .into_iter()
        .filter(|&v| {
            let normals: Vec<Vec<BigInt>> = plane_list
                .iter()
                .filter(|(n, o, _)| dot_int(n, &pts[v]) == *o)
                .map(|(n, _, _)| n.clone())
                .collect();
            Matrix::from_rows(normals.iter().map(|n| to_rational_vec(n)).collect(), d)
                .expect("normals have length d")
                .rank()
                == d
        })
        .collect();
    let facets = plane_list
        .into_iter()
        .map(|(normal, offset, scaled_weight)| {
            let verts = vertices.iter().copied().filter(|&v| dot_int(&normal, &pts[v]) == offset).collect();
            RawFacet { normal, offset, scaled_weight, vertices: verts }
        })
        .collect();
    RawHull { affine_dim: d, vertices, facets, scaled_volume: volume }
}
