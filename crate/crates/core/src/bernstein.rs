//! Numeric counting of isolated torus solutions of bivariate systems, used
//! as the empirical side of the mixed-volume root bound: eliminate one
//! variable through an exact Sylvester resultant, locate candidate roots
//! with Durand-Kerner iteration, polish with Newton steps on the original
//! system, and keep solutions with both coordinates away from zero and
//! residuals below a hard threshold.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::bareiss_det;
use crate::mpoly::IntPoly;
use crate::rat::rat_to_f64;

pub const RESIDUAL_TOL: f64 = 1e-8;
const COORD_TOL: f64 = 1e-9;
const DEDUP_TOL: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct TorusCount {
    pub count: usize,
    /// True when the elimination degenerates (identically zero resultant or
    /// a one-dimensional solution set): the count is then meaningless and
    /// the finiteness hypothesis of the root bound fails.
    pub degenerate: bool,
}

/// Writes a bivariate polynomial as coefficients in t2: index k holds the
/// t1-polynomial multiplying t2^k, denominators cleared.
fn coeffs_in_t2(p: &LaurentPoly) -> Vec<IntPoly> {
    let mut lcm = BigInt::one();
    for (_, c) in p.terms() {
        lcm = lcm.lcm(c.denom());
    }
    let deg2 = p.terms().map(|(e, _)| e[1]).max().unwrap_or(0) as usize;
    let deg1 = p.terms().map(|(e, _)| e[0]).max().unwrap_or(0) as usize;
    let mut rows = vec![vec![BigInt::zero(); deg1 + 1]; deg2 + 1];
    for (e, c) in p.terms() {
        rows[e[1] as usize][e[0] as usize] = c.numer() * (&lcm / c.denom());
    }
    rows.into_iter().map(IntPoly::new).collect()
}

/// Sylvester resultant of f and g with respect to t2, an exact integer
/// polynomial in t1 (up to a nonzero constant from denominator clearing).
fn resultant_t2(f: &[IntPoly], g: &[IntPoly]) -> IntPoly {
    let df = f.len() - 1;
    let dg = g.len() - 1;
    let n = df + dg;
    if n == 0 {
        return IntPoly::one();
    }
    let mut grid = vec![vec![IntPoly::zero(); n]; n];
    for (row, item) in grid.iter_mut().enumerate().take(dg) {
        for (k, c) in f.iter().enumerate() {
            item[row + df - k] = c.clone();
        }
    }
    for row in 0..df {
        for (k, c) in g.iter().enumerate() {
            grid[dg + row][row + dg - k] = c.clone();
        }
    }
    bareiss_det(&mut grid)
}

fn poly_to_f64(coeffs: &[BigInt]) -> Vec<f64> {
    // scale by the largest magnitude to stay inside f64 range
    let max_log = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .map(crate::rat::bigint_ln_abs)
        .fold(f64::NEG_INFINITY, f64::max);
    coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                0.0
            } else {
                let sign = if c.is_negative() { -1.0 } else { 1.0 };
                sign * (crate::rat::bigint_ln_abs(c) - max_log).exp()
            }
        })
        .collect()
}

/// Durand-Kerner simultaneous iteration for all complex roots.
fn all_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|x| x.norm() == 0.0) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let lead = *c.last().unwrap();
    for x in &mut c {
        *x /= lead;
    }
    let n = c.len() - 1;
    let radius = 1.0 + c[..n].iter().map(|x| x.norm()).fold(0.0f64, f64::max);
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (0..c.len()).rev() {
            acc = acc * z + c[k];
        }
        acc
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| radius * seed.powu(k as u32 + 1) / seed.norm().powi(k as i32))
        .collect();
    for _ in 0..600 {
        let mut moved: f64 = 0.0;
        for k in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != k {
                    denom *= roots[k] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(1e-12, 1e-12);
            }
            let delta = eval(roots[k]) / denom;
            roots[k] -= delta;
            moved = moved.max(delta.norm() / (1.0 + roots[k].norm()));
        }
        if moved < 1e-14 {
            break;
        }
    }
    roots
}

fn laurent_to_f64_terms(p: &LaurentPoly) -> Vec<(i64, i64, f64)> {
    p.terms()
        .map(|(e, c)| (e[0], e[1], rat_to_f64(c)))
        .collect()
}

fn eval_terms(terms: &[(i64, i64, f64)], x: Complex64, y: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &(a, b, c) in terms {
        acc += c * x.powu(a as u32) * y.powu(b as u32);
    }
    acc
}

fn eval_dx(terms: &[(i64, i64, f64)], x: Complex64, y: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &(a, b, c) in terms {
        if a > 0 {
            acc += c * a as f64 * x.powu(a as u32 - 1) * y.powu(b as u32);
        }
    }
    acc
}

fn eval_dy(terms: &[(i64, i64, f64)], x: Complex64, y: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &(a, b, c) in terms {
        if b > 0 {
            acc += c * b as f64 * x.powu(a as u32) * y.powu(b as u32 - 1);
        }
    }
    acc
}

/// Magnitude of the largest term at the point: the natural scale for a
/// relative residual test.
fn eval_scale(terms: &[(i64, i64, f64)], x: Complex64, y: Complex64) -> f64 {
    terms
        .iter()
        .map(|&(a, b, c)| c.abs() * x.norm().powi(a as i32) * y.norm().powi(b as i32))
        .sum::<f64>()
        .max(1.0)
}

/// Newton polish on the 2x2 system; returns the refined point when the
/// iteration converges.
fn newton_refine(
    ft: &[(i64, i64, f64)],
    gt: &[(i64, i64, f64)],
    mut x: Complex64,
    mut y: Complex64,
) -> Option<(Complex64, Complex64)> {
    for _ in 0..80 {
        let fv = eval_terms(ft, x, y);
        let gv = eval_terms(gt, x, y);
        let j11 = eval_dx(ft, x, y);
        let j12 = eval_dy(ft, x, y);
        let j21 = eval_dx(gt, x, y);
        let j22 = eval_dy(gt, x, y);
        let det = j11 * j22 - j12 * j21;
        if det.norm() < 1e-14 {
            return Some((x, y)); // singular Jacobian: keep the candidate
        }
        let dx = (fv * j22 - gv * j12) / det;
        let dy = (gv * j11 - fv * j21) / det;
        x -= dx;
        y -= dy;
        if dx.norm() + dy.norm() < 1e-13 * (1.0 + x.norm() + y.norm()) {
            return Some((x, y));
        }
    }
    Some((x, y))
}

fn univariate_in_t1(coeffs2: &[IntPoly]) -> bool {
    coeffs2.len() == 1
}

fn torus_roots_of_intpoly(p: &IntPoly) -> Vec<Complex64> {
    let mut coeffs = p.coeffs().to_vec();
    // strip roots at zero: not on the torus
    while coeffs.first().is_some_and(|c| c.is_zero()) {
        coeffs.remove(0);
    }
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    let cf: Vec<Complex64> = poly_to_f64(&coeffs)
        .into_iter()
        .map(|v| Complex64::new(v, 0.0))
        .collect();
    all_roots(&cf)
        .into_iter()
        .filter(|z| z.norm() > COORD_TOL)
        .collect()
}

/// Accepted solutions with their residuals, for diagnostics.
pub fn debug_solutions(
    f: &LaurentPoly,
    g: &LaurentPoly,
) -> Result<Vec<(Complex64, Complex64, f64, f64)>> {
    let fc = f.clear_monomial()?;
    let gc = g.clear_monomial()?;
    let ft = laurent_to_f64_terms(&fc);
    let gt = laurent_to_f64_terms(&gc);
    let (points, _) = solve_cleared(&fc, &gc)?;
    Ok(points
        .into_iter()
        .map(|(x, y)| {
            (
                x,
                y,
                eval_terms(&ft, x, y).norm(),
                eval_terms(&gt, x, y).norm(),
            )
        })
        .collect())
}

/// Counts isolated solutions of f = g = 0 with both coordinates nonzero.
/// Polynomials are monomial-cleared first (the torus zero set is
/// unchanged). Residuals are measured on the cleared, rational-coefficient
/// system.
pub fn count_torus_solutions(f: &LaurentPoly, g: &LaurentPoly) -> Result<TorusCount> {
    if f.nvars() != 2 || g.nvars() != 2 {
        return Err(Error::Shape("torus counting handles two variables".into()));
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::Precondition("polynomials must be nonzero".into()));
    }
    let f = f.clear_monomial()?;
    let g = g.clear_monomial()?;
    let (points, degenerate) = solve_cleared(&f, &g)?;
    Ok(TorusCount {
        count: points.len(),
        degenerate,
    })
}

fn solve_cleared(f: &LaurentPoly, g: &LaurentPoly) -> Result<(Vec<(Complex64, Complex64)>, bool)> {
    let f = f.clone();
    let g = g.clone();
    let fc = coeffs_in_t2(&f);
    let gc = coeffs_in_t2(&g);
    let ft = laurent_to_f64_terms(&f);
    let gt = laurent_to_f64_terms(&g);

    let mut candidates: Vec<(Complex64, Complex64)> = Vec::new();
    if univariate_in_t1(&fc) && univariate_in_t1(&gc) {
        // no t2 anywhere: any common t1-root gives a full line of solutions
        let rf = torus_roots_of_intpoly(&fc[0]);
        let rg = torus_roots_of_intpoly(&gc[0]);
        let shared = rf
            .iter()
            .any(|a| rg.iter().any(|b| (a - b).norm() < DEDUP_TOL));
        return Ok((Vec::new(), shared));
    }
    if univariate_in_t1(&fc) || univariate_in_t1(&gc) {
        let (uni, other, other_terms) = if univariate_in_t1(&fc) {
            (&fc[0], &gc, &gt)
        } else {
            (&gc[0], &fc, &ft)
        };
        for x in torus_roots_of_intpoly(uni) {
            // specialize the other polynomial at t1 = x
            let spec: Vec<Complex64> = other
                .iter()
                .map(|c| {
                    let cf = poly_to_f64(c.coeffs());
                    let mut acc = Complex64::new(0.0, 0.0);
                    for k in (0..cf.len()).rev() {
                        acc = acc * x + cf[k];
                    }
                    acc
                })
                .collect();
            if spec.iter().all(|c| c.norm() < 1e-12) {
                return Ok((Vec::new(), true));
            }
            for y in all_roots(&spec) {
                if y.norm() > COORD_TOL {
                    let _ = other_terms;
                    candidates.push((x, y));
                }
            }
        }
    } else {
        let res = resultant_t2(&fc, &gc);
        if res.is_zero() {
            return Ok((Vec::new(), true));
        }
        for x in torus_roots_of_intpoly(&res) {
            // candidate t2 values from f(x, .) and from g(x, .)
            for source in [&fc, &gc] {
                let spec: Vec<Complex64> = source
                    .iter()
                    .map(|c| {
                        let cf = poly_to_f64(c.coeffs());
                        let mut acc = Complex64::new(0.0, 0.0);
                        for k in (0..cf.len()).rev() {
                            acc = acc * x + cf[k];
                        }
                        acc
                    })
                    .collect();
                for y in all_roots(&spec) {
                    if y.norm() > COORD_TOL {
                        candidates.push((x, y));
                    }
                }
            }
        }
    }

    // polish, filter by relative residual at the point, dedupe
    let mut accepted: Vec<(Complex64, Complex64)> = Vec::new();
    for (x0, y0) in candidates {
        let Some((x, y)) = newton_refine(&ft, &gt, x0, y0) else {
            continue;
        };
        if !x.is_finite() || !y.is_finite() {
            continue;
        }
        if x.norm() < COORD_TOL || y.norm() < COORD_TOL {
            continue;
        }
        let rf = eval_terms(&ft, x, y).norm();
        let rg = eval_terms(&gt, x, y).norm();
        let ok = rf.is_finite()
            && rg.is_finite()
            && rf <= RESIDUAL_TOL * eval_scale(&ft, x, y)
            && rg <= RESIDUAL_TOL * eval_scale(&gt, x, y);
        if !ok {
            continue;
        }
        let duplicate = accepted
            .iter()
            .any(|&(ax, ay)| (ax - x).norm() < DEDUP_TOL && (ay - y).norm() < DEDUP_TOL);
        if !duplicate {
            accepted.push((x, y));
        }
    }
    Ok((accepted, false))
}
