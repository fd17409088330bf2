//! Truncated p-adic power series, Newton polygons, root counting in the
//! closed unit disc, Gauss norms, and the coefficient sequences behind the
//! exponential-sum root bounds.
//!
//! Root counts follow Newton-polygon semantics: zeros are counted with
//! multiplicity and z = 0 contributes its order of vanishing. A count is
//! only returned when the stored coefficients certify it: every coefficient
//! that is merely "zero at its precision" must be provably unable to lower
//! the relevant part of the polygon, otherwise the truncation or precision
//! is too small and that is an error, not a guess.

use num_bigint::BigInt;
use num_traits::Zero;

use super::Padic;
use crate::error::{Error, Result};
use crate::rat::{rat_int, Rat};

#[derive(Debug, Clone)]
pub struct PadicSeries {
    p: u64,
    coeffs: Vec<Padic>,
}

impl PadicSeries {
    pub fn new(coeffs: Vec<Padic>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Shape(
                "series needs at least the constant term".into(),
            ));
        }
        let p = coeffs[0].prime();
        if coeffs.iter().any(|c| c.prime() != p) {
            return Err(Error::Domain("mixed primes in series".into()));
        }
        Ok(PadicSeries { p, coeffs })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Truncation order T: coefficients c_0 ... c_T are stored.
    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Padic] {
        &self.coeffs
    }

    /// (index, exact valuation) for every coefficient certified nonzero.
    fn certified_points(&self) -> Vec<(usize, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.valuation().map(|v| (k, v)))
            .collect()
    }
}

/// Lower convex hull of the certified points (k, v(c_k)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(usize, i64)>,
}

fn certify_min(series: &PadicSeries) -> Result<(Vec<(usize, i64)>, i64)> {
    let pts = series.certified_points();
    if pts.is_empty() {
        return Err(Error::Uncertified(
            "every coefficient is zero at its precision".into(),
        ));
    }
    let min_val = pts.iter().map(|&(_, v)| v).min().unwrap();
    for (k, c) in series.coeffs().iter().enumerate() {
        if c.valuation().is_none() && c.precision() <= min_val {
            return Err(Error::Uncertified(format!(
                "coefficient {k} is only known modulo p^{}, which cannot rule out \
                 valuation {min_val}; raise the working precision",
                c.precision()
            )));
        }
    }
    Ok((pts, min_val))
}

/// Newton polygon of the series, built from coefficients with certified
/// valuations. Errors when an unknown coefficient could lower the polygon
/// at or below the minimal certified valuation.
pub fn newton_polygon(series: &PadicSeries) -> Result<NewtonPolygon> {
    let (pts, _) = certify_min(series)?;
    // monotone chain, keeping the lower hull
    let mut hull: Vec<(usize, i64)> = Vec::new();
    for &(x, y) in &pts {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            // pop while the middle point is on or above the segment
            let lhs = (x2 - x1) as i128 * (y - y1) as i128;
            let rhs = (x - x1) as i128 * (y2 - y1) as i128;
            if lhs <= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((x, y));
    }
    Ok(NewtonPolygon { vertices: hull })
}

/// Number of zeros z with v(z) >= 0, with multiplicity, including z = 0 by
/// its order of vanishing: the last index attaining the minimal coefficient
/// valuation.
pub fn roots_in_unit_disc(series: &PadicSeries) -> Result<usize> {
    let (pts, min_val) = certify_min(series)?;
    Ok(pts
        .iter()
        .filter(|&&(_, v)| v == min_val)
        .map(|&(k, _)| k)
        .max()
        .unwrap())
}

/// Series sum_i b_i e^(w_i z) truncated at order T, coefficient of z^k being
/// sum_i b_i w_i^k / k!. Requires certified v(w_i) >= 2, the integral form
/// of the convergence condition |w|_p <= p^(-p/(p-1)).
pub fn exp_sum_series(b: &[Padic], w: &[Padic], t_order: usize) -> Result<PadicSeries> {
    if b.is_empty() || b.len() != w.len() {
        return Err(Error::Shape(
            "need equal, nonzero numbers of coefficients and exponents".into(),
        ));
    }
    let p = b[0].prime();
    if b.iter().chain(w).any(|x| x.prime() != p) {
        return Err(Error::Domain("mixed primes".into()));
    }
    for (i, wi) in w.iter().enumerate() {
        let lb = wi.valuation_lower_bound();
        if lb < 2 {
            return Err(Error::Precondition(format!(
                "exponent {i} needs certified valuation >= 2, got lower bound {lb}"
            )));
        }
    }
    let mut coeffs = Vec::with_capacity(t_order + 1);
    // c_0 = sum b_i
    let mut c0 = b[0].clone();
    for bi in &b[1..] {
        c0 = c0.add(bi)?;
    }
    coeffs.push(c0);
    // powers w_i^k / k! built incrementally
    let mut pow: Vec<Padic> = w
        .iter()
        .map(|wi| Padic::one(p, wi.precision() + 2 * t_order as i64 + 4))
        .collect();
    for k in 1..=t_order {
        let mut ck: Option<Padic> = None;
        for i in 0..w.len() {
            pow[i] = pow[i].mul(&w[i])?.div_int(&BigInt::from(k as i64))?;
            let term = b[i].mul(&pow[i])?;
            ck = Some(match ck {
                None => term,
                Some(acc) => acc.add(&term)?,
            });
        }
        coeffs.push(ck.unwrap());
    }
    PadicSeries::new(coeffs)
}

/// Report of the exponential-sum root bound: at most p/(p-1) * (n-1) zeros
/// in the closed unit disc.
#[derive(Debug, Clone)]
pub struct RootBoundReport {
    pub p: u64,
    pub n: usize,
    pub t_order: usize,
    pub count: usize,
    pub bound: usize,
    pub pass: bool,
    pub min_valuation: i64,
}

/// Counts unit-disc zeros of sum b_i e^(w_i z) from a truncated expansion
/// and compares against floor(p/(p-1) * (n-1)).
///
/// Beyond the certification demanded by `roots_in_unit_disc`, the truncation
/// itself is checked: the analytic lower bound for every dropped coefficient
/// must exceed the minimal certified valuation, otherwise the count could be
/// an undercount and the order T is too small.
pub fn verify_padic_root_bound(
    b: &[Padic],
    w: &[Padic],
    t_order: usize,
) -> Result<RootBoundReport> {
    if b.iter().all(|bi| bi.is_zero_at_precision()) {
        return Err(Error::Precondition(
            "all coefficients are zero at their precision".into(),
        ));
    }
    let series = exp_sum_series(b, w, t_order)?;
    let p = series.prime();
    let n = b.len();
    let count = roots_in_unit_disc(&series)?;
    let (_, min_val) = certify_min(&series)?;
    // tail bound: v(c_k) >= min_b + k v_w - (k-1)/(p-1), increasing in k
    let min_b = b.iter().map(|x| x.valuation_lower_bound()).min().unwrap();
    let min_w = w.iter().map(|x| x.valuation_lower_bound()).min().unwrap();
    let k = (t_order + 1) as i64;
    let pm1 = p as i64 - 1;
    if (min_b + k * min_w - min_val) * pm1 < k {
        return Err(Error::Uncertified(format!(
            "truncation order {t_order} cannot rule out tail coefficients of \
             valuation {min_val}; raise T"
        )));
    }
    let bound = (p as usize * (n - 1)) / (p as usize - 1);
    Ok(RootBoundReport {
        p,
        n,
        t_order,
        count,
        bound,
        pass: count <= bound,
        min_valuation: min_val,
    })
}

/// The linear recurrence d_k = s_1 d_(k-1) + ... + s_i d_(k-i) seeded by
/// d_0 = ... = d_(i-2) = 0, d_(i-1) = 1, where the s_j are the signed
/// elementary symmetric functions of the w's: d_k is the coefficient of
/// z^(i-1) in z^k reduced modulo prod (z - w_j).
pub fn dk_sequence(w: &[Padic], kmax: usize) -> Result<Vec<Padic>> {
    let i = w.len();
    if i == 0 {
        return Err(Error::Shape("need at least one exponent".into()));
    }
    let p = w[0].prime();
    for (j, wj) in w.iter().enumerate() {
        if wj.prime() != p {
            return Err(Error::Domain("mixed primes".into()));
        }
        if wj.valuation_lower_bound() < 2 {
            return Err(Error::Precondition(format!(
                "exponent {j} needs certified valuation >= 2"
            )));
        }
    }
    if kmax + 1 < i {
        return Err(Error::Precondition("kmax must be at least i - 1".into()));
    }
    let modulus = monic_product(w)?; // coefficients m_0 .. m_i, m_i = 1
    let seed_prec = w.iter().map(|x| x.precision()).min().unwrap() + 2 * kmax as i64 + 8;
    let mut d: Vec<Padic> = Vec::with_capacity(kmax + 1);
    for _ in 0..i.saturating_sub(1) {
        d.push(Padic::zero_at(p, seed_prec));
    }
    d.push(Padic::one(p, seed_prec));
    for k in i..=kmax {
        // d_k = -sum_{j=1..i} m_{i-j} d_{k-j}
        let mut acc = Padic::zero_at(p, seed_prec);
        for j in 1..=i {
            let t = modulus[i - j].mul(&d[k - j])?;
            acc = acc.add(&t)?;
        }
        d.push(acc.neg());
    }
    d.truncate(kmax + 1);
    Ok(d)
}

/// Independent route for d_k: literally reduce z^k modulo prod (z - w_j) and
/// read off the z^(i-1) coefficient.
pub fn dk_by_reduction(w: &[Padic], k: usize) -> Result<Padic> {
    let i = w.len();
    let p = w[0].prime();
    let modulus = monic_product(w)?;
    let work = w.iter().map(|x| x.precision()).min().unwrap() + 2 * k as i64 + 8;
    // remainder representation r_0 .. r_(i-1)
    let mut r = vec![Padic::zero_at(p, work); i];
    r[0] = Padic::one(p, work);
    for _ in 0..k {
        // multiply by z, then reduce the overflow coefficient through the
        // monic modulus: z^i = -(m_0 + m_1 z + ... + m_(i-1) z^(i-1))
        let overflow = r[i - 1].clone();
        for idx in (1..i).rev() {
            r[idx] = r[idx - 1].clone();
        }
        r[0] = Padic::zero_at(p, work);
        if !overflow.is_zero_at_precision() || overflow.precision() < work {
            for idx in 0..i {
                let t = overflow.mul(&modulus[idx])?;
                r[idx] = r[idx].sub(&t)?;
            }
        }
    }
    Ok(r[i - 1].clone())
}

fn monic_product(w: &[Padic]) -> Result<Vec<Padic>> {
    let p = w[0].prime();
    let work = w.iter().map(|x| x.precision()).min().unwrap() + 2 * w.len() as i64 + 8;
    let mut coeffs = vec![Padic::one(p, work)];
    for wj in w {
        // multiply by (z - w_j)
        let mut next = vec![Padic::zero_at(p, work); coeffs.len() + 1];
        for (idx, c) in coeffs.iter().enumerate() {
            next[idx + 1] = next[idx + 1].add(c)?;
            let t = c.mul(wj)?;
            next[idx] = next[idx].sub(&t)?;
        }
        coeffs = next;
    }
    Ok(coeffs)
}

/// Per-index verdicts for the valuation growth v(d_k) >= p/(p-1) (k - i + 1),
/// checked exactly as (p-1) v >= p (k - i + 1).
#[derive(Debug, Clone)]
pub struct DkValuationReport {
    pub p: u64,
    pub i: usize,
    pub kmax: usize,
    pub failures: Vec<usize>,
    pub all_pass: bool,
}

pub fn dk_valuation_check(w: &[Padic], kmax: usize) -> Result<DkValuationReport> {
    let i = w.len();
    let p = w[0].prime();
    let d = dk_sequence(w, kmax)?;
    let pm1 = p as i64 - 1;
    let mut failures = Vec::new();
    for (k, dk) in d.iter().enumerate() {
        let required = p as i64 * (k as i64 - i as i64 + 1);
        match dk.valuation() {
            Some(v) => {
                if pm1 * v < required {
                    failures.push(k);
                }
            }
            None => {
                // zero at precision: certified valuation >= prec
                if pm1 * dk.precision() < required {
                    return Err(Error::Uncertified(format!(
                        "d_{k} is zero at precision {} which cannot certify the \
                         required valuation; raise the input precision",
                        dk.precision()
                    )));
                }
            }
        }
    }
    Ok(DkValuationReport {
        p,
        i,
        kmax,
        all_pass: failures.is_empty(),
        failures,
    })
}

/// log_p of the sup norm on the disc of radius p^log_r: max over stored k of
/// (k log_r - v(c_k)). Errors when an uncertified coefficient could exceed
/// the certified maximum.
pub fn gauss_norm(series: &PadicSeries, log_r: &Rat) -> Result<Rat> {
    let mut best: Option<Rat> = None;
    for (k, v) in series.certified_points() {
        let val = rat_int(k as i64) * log_r - rat_int(v);
        if best.as_ref().is_none_or(|b| val > *b) {
            best = Some(val);
        }
    }
    let Some(best) = best else {
        return Err(Error::Uncertified(
            "every coefficient is zero at its precision".into(),
        ));
    };
    for (k, c) in series.coeffs().iter().enumerate() {
        if c.valuation().is_none() {
            let upper = rat_int(k as i64) * log_r - rat_int(c.precision());
            if upper > best {
                return Err(Error::Uncertified(format!(
                    "coefficient {k} is too imprecise to certify the Gauss norm"
                )));
            }
        }
    }
    Ok(best)
}

/// Schwarz-style root bound: roots in the unit disc are at most
/// gauss_norm(R = p) - gauss_norm(R = 1) in log_p units.
#[derive(Debug, Clone)]
pub struct SchwarzReport {
    pub roots: usize,
    pub bound: Rat,
    pub holds: bool,
}

pub fn schwarz_report(series: &PadicSeries) -> Result<SchwarzReport> {
    let roots = roots_in_unit_disc(series)?;
    let at_p = gauss_norm(series, &rat_int(1))?;
    let at_1 = gauss_norm(series, &Rat::zero())?;
    let bound = at_p - at_1;
    let holds = rat_int(roots as i64) <= bound;
    Ok(SchwarzReport {
        roots,
        bound,
        holds,
    })
}

/// Sign-change count for a real exponential sum sum b_i e^(w_i x) on a grid:
/// a floating-point lower bound for the number of real zeros, compared with
/// the bound n - 1.
#[derive(Debug, Clone)]
pub struct RealZeroReport {
    pub n: usize,
    pub sign_changes: usize,
    pub bound: usize,
    pub pass: bool,
}

pub fn real_exp_sum_zero_count(
    b: &[Rat],
    w: &[Rat],
    lo: &Rat,
    hi: &Rat,
    grid: usize,
) -> Result<RealZeroReport> {
    if b.is_empty() || b.len() != w.len() {
        return Err(Error::Shape(
            "need matching nonempty coefficient lists".into(),
        ));
    }
    if grid < 2 {
        return Err(Error::Precondition("grid must be at least 2".into()));
    }
    if lo >= hi {
        return Err(Error::Precondition("empty interval".into()));
    }
    let bf: Vec<f64> = b.iter().map(crate::rat::rat_to_f64).collect();
    let wf: Vec<f64> = w.iter().map(crate::rat::rat_to_f64).collect();
    let lof = crate::rat::rat_to_f64(lo);
    let hif = crate::rat::rat_to_f64(hi);
    let eval = |x: f64| -> f64 { bf.iter().zip(&wf).map(|(bi, wi)| bi * (wi * x).exp()).sum() };
    let mut changes = 0usize;
    let mut last_nonzero: Option<bool> = None;
    for idx in 0..=grid {
        let x = lof + (hif - lof) * idx as f64 / grid as f64;
        let y = eval(x);
        if y == 0.0 {
            changes += 1;
            last_nonzero = None;
        } else {
            let s = y > 0.0;
            if let Some(prev) = last_nonzero {
                if prev != s {
                    changes += 1;
                }
            }
            last_nonzero = Some(s);
        }
    }
    let bound = b.len() - 1;
    Ok(RealZeroReport {
        n: b.len(),
        sign_changes: changes,
        bound,
        pass: changes <= bound,
    })
}
