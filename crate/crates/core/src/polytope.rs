//! Lattice polytopes with exact rational arithmetic: convex hull vertex sets,
//! Euclidean volumes by fan triangulation, Minkowski sums, mixed volumes by
//! inclusion-exclusion, and the combinatorial degree data of Laurent
//! polynomials (one copy of the Newton polytope per slot, standard simplices
//! in the remaining slots).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::{bareiss_det, bareiss_rank, RatMatrix};
use crate::rat::{rat_int, Rat};

pub const MAX_DIM: usize = 4;

/// Convex hull of integer points, stored as its canonical vertex list
/// (exactly the extreme points, sorted lexicographically).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
}

impl LatticePolytope {
    /// Builds the hull of a nonempty point set in ambient dimension <= 4.
    pub fn hull(points: &[Vec<i64>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Domain("hull of empty point set".into()));
        }
        let dim = points[0].len();
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::Shape(format!(
                "ambient dimension must be 1..={MAX_DIM}, got {dim}"
            )));
        }
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::Shape("points of mixed dimension".into()));
        }
        let mut unique: Vec<Vec<i64>> = points.to_vec();
        unique.sort();
        unique.dedup();
        let mut vertices = if dim == 2 {
            hull2d(&unique)
        } else {
            let mut out = Vec::new();
            for (i, p) in unique.iter().enumerate() {
                let others: Vec<&[i64]> = unique
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, q)| q.as_slice())
                    .collect();
                if others.is_empty() || !in_convex_hull_int(p, &others) {
                    out.push(p.clone());
                }
            }
            out
        };
        vertices.sort();
        Ok(LatticePolytope { dim, vertices })
    }

    pub fn point(p: Vec<i64>) -> Result<Self> {
        LatticePolytope::hull(std::slice::from_ref(&p))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// Exact membership test against the vertex set (rational LP).
    pub fn contains(&self, point: &[Rat]) -> Result<bool> {
        if point.len() != self.dim {
            return Err(Error::Shape("point dimension mismatch".into()));
        }
        let verts: Vec<&[i64]> = self.vertices.iter().map(|v| v.as_slice()).collect();
        Ok(in_convex_hull(point, &verts))
    }

    /// Dimension of the affine span of the vertex set.
    pub fn affine_rank(&self) -> usize {
        if self.vertices.len() <= 1 {
            return 0;
        }
        let base = &self.vertices[0];
        let mut grid: Vec<Vec<BigInt>> = self.vertices[1..]
            .iter()
            .map(|p| {
                p.iter()
                    .zip(base)
                    .map(|(a, b)| BigInt::from(a - b))
                    .collect()
            })
            .collect();
        bareiss_rank(&mut grid)
    }

    /// Exact Euclidean volume in the ambient dimension. Lower-dimensional
    /// bodies have volume zero; full-dimensional ones are fan-triangulated
    /// from the lexicographically smallest vertex.
    pub fn volume(&self) -> Rat {
        if self.affine_rank() < self.dim {
            return Rat::zero();
        }
        let simplices = triangulate_fulldim(&self.vertices, self.dim);
        let mut total = Rat::zero();
        let apex_factorial: BigInt = (1..=self.dim as u64).product::<u64>().into();
        for s in simplices {
            let base = &self.vertices[s[0]];
            let mut grid: Vec<Vec<BigInt>> = s[1..]
                .iter()
                .map(|&i| {
                    self.vertices[i]
                        .iter()
                        .zip(base)
                        .map(|(a, b)| BigInt::from(a - b))
                        .collect()
                })
                .collect();
            let det = bareiss_det(&mut grid).abs();
            total += Rat::new(det, apex_factorial.clone());
        }
        total
    }

    /// Hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &LatticePolytope) -> Result<LatticePolytope> {
        if self.dim != other.dim {
            return Err(Error::Shape("Minkowski sum dimension mismatch".into()));
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        LatticePolytope::hull(&sums)
    }
}

/// Mixed volume V(P_1, ..., P_n) of n bodies in ambient dimension n, by
/// inclusion-exclusion over Minkowski sums of subsets, normalized so that
/// V(P, ..., P) = Vol(P).
pub fn mixed_volume(bodies: &[LatticePolytope]) -> Result<Rat> {
    let n = bodies.len();
    if n == 0 {
        return Err(Error::Shape("mixed volume of no bodies".into()));
    }
    if bodies.iter().any(|b| b.dim() != n) {
        return Err(Error::Shape(format!(
            "mixed volume needs {n} bodies in ambient dimension {n}"
        )));
    }
    let mut acc = Rat::zero();
    for mask in 1u32..(1 << n) {
        let mut sum: Option<LatticePolytope> = None;
        for (i, body) in bodies.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum = Some(match sum {
                    None => body.clone(),
                    Some(s) => s.minkowski_sum(body)?,
                });
            }
        }
        let vol = sum.unwrap().volume();
        let sign = if (n - mask.count_ones() as usize).is_multiple_of(2) {
            1
        } else {
            -1
        };
        acc += vol * rat_int(sign);
    }
    let n_factorial: BigInt = (1..=n as u64).product::<u64>().into();
    Ok(acc / Rat::from_integer(n_factorial))
}

/// n! times the mixed volume of the hulls of the given supports; always a
/// nonnegative integer for lattice inputs.
pub fn bk_number(supports: &[Vec<Vec<i64>>]) -> Result<i64> {
    let bodies: Vec<LatticePolytope> = supports
        .iter()
        .map(|s| LatticePolytope::hull(s))
        .collect::<Result<_>>()?;
    bk_number_of_bodies(&bodies)
}

pub fn bk_number_of_bodies(bodies: &[LatticePolytope]) -> Result<i64> {
    let n = bodies.len();
    let v = mixed_volume(bodies)?;
    let n_factorial: BigInt = (1..=n as u64).product::<u64>().into();
    let scaled = v * Rat::from_integer(n_factorial);
    if !scaled.is_integer() || scaled.is_negative() {
        return Err(Error::Internal(format!(
            "mixed volume times n! must be a nonnegative integer, got {scaled}"
        )));
    }
    i64::try_from(scaled.to_integer())
        .map_err(|_| Error::CapExceeded("combinatorial degree exceeds i64".into()))
}

/// Per-slot degree data of a polynomial: entry i is the count with i copies
/// of the Newton polytope and n - i standard simplices; `bkd` is the
/// maximum. A support that collapses to a single point after monomial
/// clearing is flagged and reports all zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BKReport {
    pub entries: Vec<i64>,
    pub bkd: i64,
    pub point_support: bool,
}

/// The combinatorial degree of a Laurent polynomial. The polynomial is
/// monomial-cleared first (monomials have no zeros on the torus); only the
/// Newton polytope of the generic linear slot matters, fixed as
/// conv{0, e_1, ..., e_n}.
pub fn bk_degree(p: &LaurentPoly) -> Result<BKReport> {
    if p.is_zero() {
        return Err(Error::Domain("degree data of the zero polynomial".into()));
    }
    let cleared = p.clear_monomial()?;
    let n = cleared.nvars();
    if n == 0 || n > MAX_DIM {
        return Err(Error::Shape(format!(
            "need 1..={MAX_DIM} variables, got {n}"
        )));
    }
    let newton = LatticePolytope::hull(&cleared.support())?;
    if newton.vertices().len() == 1 {
        return Ok(BKReport {
            entries: vec![0; n],
            bkd: 0,
            point_support: true,
        });
    }
    let mut simplex_pts: Vec<Vec<i64>> = vec![vec![0; n]];
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        simplex_pts.push(e);
    }
    let simplex = LatticePolytope::hull(&simplex_pts)?;
    let mut entries = Vec::with_capacity(n);
    for i in 1..=n {
        let mut bodies = Vec::with_capacity(n);
        for _ in 0..i {
            bodies.push(newton.clone());
        }
        for _ in i..n {
            bodies.push(simplex.clone());
        }
        entries.push(bk_number_of_bodies(&bodies)?);
    }
    let bkd = *entries.iter().max().unwrap();
    Ok(BKReport {
        entries,
        bkd,
        point_support: false,
    })
}

// ---------------------------------------------------------------------------
// triangulation
// ---------------------------------------------------------------------------

/// Triangulates a full-dimensional polytope given by its vertex set: fan from
/// the lexicographically smallest vertex over recursively triangulated
/// facets. Returns index tuples of size d + 1.
fn triangulate_fulldim(vertices: &[Vec<i64>], d: usize) -> Vec<Vec<usize>> {
    let m = vertices.len();
    debug_assert!(m > d);
    if m == d + 1 {
        return vec![(0..=d).collect()];
    }
    if d == 1 {
        let imin = (0..m).min_by_key(|&i| vertices[i][0]).unwrap();
        let imax = (0..m).max_by_key(|&i| vertices[i][0]).unwrap();
        return vec![vec![imin, imax]];
    }
    let apex = (0..m).min_by_key(|&i| vertices[i].clone()).unwrap();
    let mut out = Vec::new();
    for facet in facet_hyperplanes(vertices, d) {
        if facet.indices.contains(&apex) {
            continue;
        }
        // project the facet along the largest normal coordinate; this is an
        // affine bijection on the facet's hyperplane, so the triangulation
        // combinatorics carry back unchanged
        let drop = (0..d)
            .max_by_key(|&j| facet.normal[j].abs().clone())
            .unwrap();
        let projected: Vec<Vec<i64>> = facet
            .indices
            .iter()
            .map(|&i| {
                vertices[i]
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != drop)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        for sub in triangulate_fulldim(&projected, d - 1) {
            let mut simplex = vec![apex];
            simplex.extend(sub.into_iter().map(|local| facet.indices[local]));
            out.push(simplex);
        }
    }
    out
}

struct Facet {
    normal: Vec<BigInt>,
    indices: Vec<usize>,
}

/// All supporting hyperplanes spanned by vertex subsets, oriented so the
/// polytope satisfies normal . x <= c.
fn facet_hyperplanes(vertices: &[Vec<i64>], d: usize) -> Vec<Facet> {
    let m = vertices.len();
    let mut seen: BTreeMap<(Vec<BigInt>, BigInt), Vec<usize>> = BTreeMap::new();
    for combo in combinations(m, d) {
        let base = &vertices[combo[0]];
        let rows: Vec<Vec<Rat>> = combo[1..]
            .iter()
            .map(|&i| {
                vertices[i]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| rat_int(a - b))
                    .collect()
            })
            .collect();
        let mat = match RatMatrix::from_rows(rows) {
            Ok(m) => m,
            Err(_) => continue,
        };
        let kernel = mat.kernel();
        if kernel.len() != 1 {
            continue; // subset does not span a hyperplane
        }
        let mut normal: Vec<BigInt> = kernel[0].iter().map(|x| x.to_integer()).collect();
        let mut c: BigInt = normal
            .iter()
            .zip(base)
            .map(|(n, &x)| n * BigInt::from(x))
            .sum();
        let mut side = 0i8; // -1 below, +1 above
        let mut supporting = true;
        for p in vertices {
            let val: BigInt = normal
                .iter()
                .zip(p)
                .map(|(n, &x)| n * BigInt::from(x))
                .sum();
            let cmp = val.cmp(&c);
            let s = match cmp {
                std::cmp::Ordering::Less => -1,
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => 1,
            };
            if s != 0 {
                if side == 0 {
                    side = s;
                } else if side != s {
                    supporting = false;
                    break;
                }
            }
        }
        if !supporting || side == 0 {
            continue; // not supporting, or all points on the plane
        }
        if side > 0 {
            for x in &mut normal {
                *x = -x.clone();
            }
            c = -c;
        }
        let indices: Vec<usize> = (0..m)
            .filter(|&i| {
                let val: BigInt = normal
                    .iter()
                    .zip(&vertices[i])
                    .map(|(n, &x)| n * BigInt::from(x))
                    .sum();
                val == c
            })
            .collect();
        seen.entry((normal, c)).or_insert(indices);
    }
    seen.into_iter()
        .map(|((normal, _), indices)| Facet { normal, indices })
        .collect()
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    if k > m {
        return out;
    }
    loop {
        out.push(combo.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] < m - (k - i) {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// exact rational LP feasibility (phase-1 simplex with Bland's rule)
// ---------------------------------------------------------------------------

/// Monotone-chain hull vertices for sorted, deduplicated planar points;
/// strict turns only, so collinear interior points are dropped.
fn hull2d(sorted: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if sorted.len() <= 2 {
        return sorted.to_vec();
    }
    let cross = |o: &[i64], a: &[i64], b: &[i64]| -> i128 {
        (a[0] - o[0]) as i128 * (b[1] - o[1]) as i128
            - (a[1] - o[1]) as i128 * (b[0] - o[0]) as i128
    };
    let mut lower: Vec<&Vec<i64>> = Vec::new();
    for p in sorted {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<&Vec<i64>> = Vec::new();
    for p in sorted.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    let mut out: Vec<Vec<i64>> = Vec::new();
    for chain in [lower, upper] {
        for p in &chain[..chain.len() - 1] {
            out.push((*p).clone());
        }
    }
    // degenerate (collinear) inputs collapse both chains to the segment ends
    out.sort();
    out.dedup();
    out
}

fn in_convex_hull_int(point: &[i64], points: &[&[i64]]) -> bool {
    let p: Vec<Rat> = point.iter().map(|&x| rat_int(x)).collect();
    in_convex_hull(&p, points)
}

/// Is `point` a convex combination of `points`? Exact phase-1 simplex.
pub fn in_convex_hull(point: &[Rat], points: &[&[i64]]) -> bool {
    if points.is_empty() {
        return false;
    }
    let n = point.len();
    let k = points.len();
    let rows = n + 1;
    // tableau: k lambda columns, `rows` artificial columns, rhs
    let cols = k + rows + 1;
    let mut t = vec![vec![Rat::zero(); cols]; rows];
    for (j, q) in points.iter().enumerate() {
        for i in 0..n {
            t[i][j] = rat_int(q[i]);
        }
        t[rows - 1][j] = rat_int(1);
    }
    for i in 0..n {
        t[i][cols - 1] = point[i].clone();
    }
    t[rows - 1][cols - 1] = rat_int(1);
    // make rhs nonnegative, install artificial basis
    for (i, row) in t.iter_mut().enumerate() {
        if row[cols - 1].is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        row[k + i] = rat_int(1);
    }
    let mut basis: Vec<usize> = (k..k + rows).collect();

    loop {
        // reduced costs for phase-1 objective (sum of artificials)
        let mut entering = None;
        for j in 0..k + rows {
            let c_j = if j >= k { rat_int(1) } else { Rat::zero() };
            let mut z_j = Rat::zero();
            for i in 0..rows {
                if basis[i] >= k {
                    z_j += &t[i][j];
                }
            }
            if c_j - z_j < Rat::zero() {
                entering = Some(j);
                break; // Bland: smallest index
            }
        }
        let Some(e) = entering else {
            // optimal: feasible iff artificial part of objective is zero
            let obj: Rat = (0..rows)
                .filter(|&i| basis[i] >= k)
                .map(|i| t[i][cols - 1].clone())
                .fold(Rat::zero(), |a, b| a + b);
            return obj.is_zero();
        };
        // ratio test with Bland tie-break on smallest basis index
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..rows {
            if t[i][e] > Rat::zero() {
                let ratio = &t[i][cols - 1] / &t[i][e];
                let better = match &best {
                    None => true,
                    Some(b) => ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(l) = leave else {
            return false; // unbounded cannot happen in phase 1; defensive exit
        };
        // pivot
        let piv = t[l][e].clone();
        for j in 0..cols {
            t[l][j] /= &piv;
        }
        for i in 0..rows {
            if i != l && !t[i][e].is_zero() {
                let f = t[i][e].clone();
                for j in 0..cols {
                    let delta = &t[l][j] * &f;
                    t[i][j] -= delta;
                }
            }
        }
        basis[l] = e;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn pts(v: &[&[i64]]) -> Vec<Vec<i64>> {
        v.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn hull_collinear_segment() {
        let h = LatticePolytope::hull(&pts(&[&[0, 0], &[1, 0], &[2, 0]])).unwrap();
        assert_eq!(h.vertices(), &[vec![0, 0], vec![2, 0]]);
    }

    #[test]
    fn hull_unit_square() {
        let h = LatticePolytope::hull(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(h.vertices().len(), 4);
    }

    #[test]
    fn hull_drops_interior_point() {
        let h = LatticePolytope::hull(&pts(&[&[0, 0], &[2, 1], &[1, 2], &[1, 1]])).unwrap();
        assert_eq!(h.vertices(), &[vec![0, 0], vec![1, 2], vec![2, 1]]);
        assert!(h.contains(&[rat(1, 1), rat(1, 1)]).unwrap());
        assert!(!h.contains(&[rat(2, 1), rat(2, 1)]).unwrap());
    }

    #[test]
    fn volume_basics() {
        let simplex = LatticePolytope::hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(simplex.volume(), rat(1, 2));
        let cube = LatticePolytope::hull(&pts(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ]))
        .unwrap();
        assert_eq!(cube.volume(), rat(1, 1));
        let segment = LatticePolytope::hull(&pts(&[&[0, 0], &[3, 0]])).unwrap();
        assert_eq!(segment.volume(), rat(0, 1));
    }

    #[test]
    fn minkowski_square_from_segments() {
        let e1 = LatticePolytope::hull(&pts(&[&[0, 0], &[1, 0]])).unwrap();
        let e2 = LatticePolytope::hull(&pts(&[&[0, 0], &[0, 1]])).unwrap();
        let sq = e1.minkowski_sum(&e2).unwrap();
        assert_eq!(sq.vertices().len(), 4);
        assert_eq!(sq.volume(), rat(1, 1));
        // adding a point translates nothing
        let origin = LatticePolytope::point(vec![0, 0]).unwrap();
        assert_eq!(e1.minkowski_sum(&origin).unwrap(), e1);
    }

    #[test]
    fn minkowski_simplex_dilate() {
        let s = LatticePolytope::hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let d = s.minkowski_sum(&s).unwrap();
        let want = LatticePolytope::hull(&pts(&[&[0, 0], &[2, 0], &[0, 2]])).unwrap();
        assert_eq!(d, want);
    }

    #[test]
    fn mixed_volume_segments() {
        let e1 = LatticePolytope::hull(&pts(&[&[0, 0], &[1, 0]])).unwrap();
        let e2 = LatticePolytope::hull(&pts(&[&[0, 0], &[0, 1]])).unwrap();
        assert_eq!(mixed_volume(&[e1, e2]).unwrap(), rat(1, 2));
    }

    #[test]
    fn mixed_volume_diagonal_is_volume() {
        let h = LatticePolytope::hull(&pts(&[&[0, 0], &[2, 1], &[1, 2]])).unwrap();
        assert_eq!(mixed_volume(&[h.clone(), h.clone()]).unwrap(), h.volume());
    }

    #[test]
    fn mixed_volume_dilates() {
        let d = 3i64;
        let e = 4i64;
        let pd = LatticePolytope::hull(&pts(&[&[0, 0], &[d, 0], &[0, d]])).unwrap();
        let pe = LatticePolytope::hull(&pts(&[&[0, 0], &[e, 0], &[0, e]])).unwrap();
        assert_eq!(mixed_volume(&[pd, pe]).unwrap(), rat(d * e, 2));
    }

    #[test]
    fn bk_number_examples() {
        // dense degree-(d, e) supports give the product bound
        for d in 1..=4i64 {
            for e in 1..=4i64 {
                let sd: Vec<Vec<i64>> = (0..=d)
                    .flat_map(|a| (0..=(d - a)).map(move |b| vec![a, b]))
                    .collect();
                let se: Vec<Vec<i64>> = (0..=e)
                    .flat_map(|a| (0..=(e - a)).map(move |b| vec![a, b]))
                    .collect();
                assert_eq!(bk_number(&[sd, se]).unwrap(), d * e);
            }
        }
        let square = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(bk_number(&[square.clone(), square]).unwrap(), 2);
        let point_slot = pts(&[&[3, 2]]);
        let anything = pts(&[&[0, 0], &[5, 1]]);
        assert_eq!(bk_number(&[point_slot, anything]).unwrap(), 0);
    }

    #[test]
    fn bk_degree_segment_support() {
        let p = LaurentPoly::from_terms(2, vec![(vec![0, 0], rat(1, 1)), (vec![3, 0], rat(-2, 1))])
            .unwrap();
        let rep = bk_degree(&p).unwrap();
        assert_eq!(rep.entries, vec![3, 0]);
        assert_eq!(rep.bkd, 3);
        assert!(!rep.point_support);
    }

    #[test]
    fn bk_degree_dense_quadratic() {
        let d = 2i64;
        let terms: Vec<(Vec<i64>, Rat)> = (0..=d)
            .flat_map(|a| (0..=(d - a)).map(move |b| (vec![a, b], rat(1, 1))))
            .collect();
        let p = LaurentPoly::from_terms(2, terms).unwrap();
        let rep = bk_degree(&p).unwrap();
        assert_eq!(rep.entries, vec![d, d * d]);
        assert_eq!(rep.bkd, d * d);
    }

    #[test]
    fn bk_degree_single_monomial() {
        let p = LaurentPoly::from_terms(2, vec![(vec![5, -7], rat(3, 1))]).unwrap();
        let rep = bk_degree(&p).unwrap();
        assert_eq!(rep.entries, vec![0, 0]);
        assert!(rep.point_support);
    }

    #[test]
    fn mixed_volume_dim3_simplex_and_segment() {
        // two generic linear forms and one univariate binomial meet the
        // torus in exactly one point, so 3! V(simplex, simplex, segment) = 1
        let simplex =
            LatticePolytope::hull(&pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        let segment = LatticePolytope::hull(&pts(&[&[0, 0, 0], &[0, 0, 1]])).unwrap();
        let v = mixed_volume(&[simplex.clone(), simplex, segment]).unwrap();
        assert_eq!(v * rat(6, 1), rat(1, 1));
    }

    #[test]
    fn volume_cross_polytope_dim4() {
        // conv(+-e_i) has volume 2^4 / 4! = 2/3
        let mut corners = Vec::new();
        for i in 0..4 {
            for s in [-1i64, 1] {
                let mut p = vec![0i64; 4];
                p[i] = s;
                corners.push(p);
            }
        }
        let cross = LatticePolytope::hull(&corners).unwrap();
        assert_eq!(cross.vertices().len(), 8);
        assert_eq!(cross.volume(), rat(2, 3));
    }

    #[test]
    fn volume_dim4_cross_check() {
        // 4-cube has volume 1; its triangulation must tile exactly
        let mut corners = Vec::new();
        for mask in 0..16i64 {
            corners.push(vec![
                mask & 1,
                (mask >> 1) & 1,
                (mask >> 2) & 1,
                (mask >> 3) & 1,
            ]);
        }
        let cube = LatticePolytope::hull(&corners).unwrap();
        assert_eq!(cube.volume(), rat(1, 1));
    }
}
