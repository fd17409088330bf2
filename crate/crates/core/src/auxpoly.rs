//! The explicit product polynomial P(t) = prod_{i,j < 3N} (t - alpha^i beta^j),
//! its coefficient heights, certified p-adic valuations at arguments
//! congruent to 1 mod p, and the archimedean/p-adic norm-gap report.
//!
//! The report never renders a verdict on whether polynomials vanishing "for
//! analytic reasons" exist; it documents that for this P the naive bounds
//! multiply to something bigger than 1.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::Domain;
use crate::mpoly::IntPoly;
use crate::rat::{bigint_ln_abs, rat_valuation, Rat};

/// Monic integer polynomial with ascending coefficients and the root grid
/// it was built from.
#[derive(Debug, Clone)]
pub struct ProductPoly {
    pub alpha: u64,
    pub beta: u64,
    pub n_param: u64,
    pub coeffs: Vec<BigInt>,
    pub distinct_roots: usize,
    pub duplicate_roots: bool,
}

fn root_grid(alpha: u64, beta: u64, n_param: u64) -> Vec<BigInt> {
    let side = 3 * n_param;
    let mut roots = Vec::with_capacity((side * side) as usize);
    let a = BigInt::from(alpha);
    let b = BigInt::from(beta);
    let mut ai = BigInt::from(1);
    for _ in 0..side {
        let mut val = ai.clone();
        for _ in 0..side {
            roots.push(val.clone());
            val *= &b;
        }
        ai *= &a;
    }
    roots
}

fn poly_from_roots(roots: &[BigInt]) -> IntPoly {
    match roots.len() {
        0 => IntPoly::new(vec![BigInt::from(1)]),
        1 => IntPoly::new(vec![-roots[0].clone(), BigInt::from(1)]),
        n => {
            let (lo, hi) = roots.split_at(n / 2);
            poly_from_roots(lo).ref_mul(&poly_from_roots(hi))
        }
    }
}

/// Builds the monic degree-9N^2 product polynomial. Roots with different
/// (i, j) may coincide when alpha and beta are multiplicatively dependent;
/// the multiplicity is reported, the degree is always 9N^2.
pub fn build_product_poly(
    alpha: u64,
    beta: u64,
    n_param: u64,
    limits: &Limits,
) -> Result<ProductPoly> {
    if alpha < 2 || beta < 2 {
        return Err(Error::Precondition("bases must be integers >= 2".into()));
    }
    if n_param < 1 {
        return Err(Error::Precondition("N must be at least 1".into()));
    }
    let side = 3 * n_param;
    if side * side > limits.product_cap {
        return Err(Error::CapExceeded(format!(
            "{} linear factors exceed the cap {}",
            side * side,
            limits.product_cap
        )));
    }
    let roots = root_grid(alpha, beta, n_param);
    let mut unique = roots.clone();
    unique.sort();
    unique.dedup();
    let poly = poly_from_roots(&roots);
    let coeffs = poly.coeffs().to_vec();
    debug_assert_eq!(coeffs.len() as u64, side * side + 1);
    Ok(ProductPoly {
        alpha,
        beta,
        n_param,
        coeffs,
        distinct_roots: unique.len(),
        duplicate_roots: unique.len() != roots.len(),
    })
}

impl ProductPoly {
    pub fn degree(&self) -> u64 {
        self.coeffs.len() as u64 - 1
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }
}

/// Exact maximum coefficient magnitude and its natural log.
pub fn coeff_height(coeffs: &[BigInt]) -> (BigInt, f64) {
    let max = coeffs
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let log = bigint_ln_abs(&max);
    (max, log)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    /// The argument is one of the roots: P(x) = 0 exactly.
    ExactZero,
}

#[derive(Debug, Clone)]
pub struct ValuationReport {
    pub p: u64,
    pub n_param: u64,
    pub total: Valuation,
    /// 9N^2: one factor of valuation >= 1 per root.
    pub guaranteed: i64,
}

fn check_congruence_one(x: &Rat, p: u64, what: &str) -> Result<()> {
    let shifted = x - Rat::from_integer(BigInt::from(1));
    if shifted.is_zero() {
        return Ok(());
    }
    if rat_valuation(&shifted, p)? < 1 {
        return Err(Error::Precondition(format!(
            "{what} must be congruent to 1 mod {p}"
        )));
    }
    Ok(())
}

/// Exact valuation v_p(P(x)) = sum of factor valuations for x = 1 mod p,
/// with alpha = beta = 1 mod p; always at least 9N^2.
pub fn padic_valuation_at(
    alpha: u64,
    beta: u64,
    n_param: u64,
    x: &Rat,
    p: u64,
    limits: &Limits,
) -> Result<ValuationReport> {
    if !crate::factor::is_prime_u64(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if alpha % p != 1 || beta % p != 1 {
        return Err(Error::Precondition(format!(
            "bases must be congruent to 1 mod {p}"
        )));
    }
    check_congruence_one(x, p, "the argument")?;
    let side = 3 * n_param;
    if side * side > limits.product_cap {
        return Err(Error::CapExceeded("root grid exceeds the cap".into()));
    }
    let guaranteed = (side * side) as i64;
    let mut total: i64 = 0;
    for r in root_grid(alpha, beta, n_param) {
        let diff = x - Rat::from_integer(r);
        if diff.is_zero() {
            return Ok(ValuationReport {
                p,
                n_param,
                total: Valuation::ExactZero,
                guaranteed,
            });
        }
        let v = rat_valuation(&diff, p)?;
        debug_assert!(v >= 1, "x and the roots are all 1 mod p");
        total += v;
    }
    if total < guaranteed {
        return Err(Error::Internal(format!(
            "factor-wise valuation {total} fell below the guaranteed {guaranteed}"
        )));
    }
    Ok(ValuationReport {
        p,
        n_param,
        total: Valuation::Finite(total),
        guaranteed,
    })
}

/// The norm-gap report: p-adic smallness from the certified valuation lower
/// bound, archimedean size from the exact coefficient height and the box
/// |x| < M^(3N), and their product in log scale. `product_log > 0` records
/// that the naive bounds do not multiply below 1.
#[derive(Debug, Clone)]
pub struct GapReport {
    pub alpha: u64,
    pub beta: u64,
    pub p: u64,
    pub n_param: u64,
    pub degree: u64,
    /// ln of the exact maximum |coefficient|
    pub log_height: f64,
    /// certified for every x = 1 mod p by the factor-wise argument: 9N^2
    pub guaranteed_valuation: i64,
    /// minimum exact valuation over the sampled arguments (>= guaranteed)
    pub padic_lower_bound: i64,
    pub sampled_valuations: Vec<i64>,
    /// p^(-padic_lower_bound)
    pub f_estimate: f64,
    pub log_f: f64,
    /// exp(log_height + degree * 3N * log M), M = max(alpha, beta)
    pub g_estimate: f64,
    pub log_g: f64,
    pub product_log: f64,
    pub product_exceeds_one: bool,
    pub distinct_roots: usize,
    pub duplicate_roots: bool,
}

pub fn analytic_gap_report(
    alpha: u64,
    beta: u64,
    p: u64,
    n_param: u64,
    limits: &Limits,
) -> Result<GapReport> {
    let poly = build_product_poly(alpha, beta, n_param, limits)?;
    if alpha % p != 1 || beta % p != 1 {
        return Err(Error::Precondition(format!(
            "bases must be congruent to 1 mod {p}"
        )));
    }
    let degree = poly.degree();
    let (_, log_height) = coeff_height(&poly.coeffs);
    let guaranteed = degree as i64;
    // deterministic sample of arguments in 1 + pZ_p, skipping exact roots
    let p_rat = Rat::from_integer(BigInt::from(p));
    let mut samples: Vec<Rat> = (1..=4u64)
        .map(|k| Rat::from_integer(BigInt::from(1 + k as i64 * p as i64)))
        .collect();
    samples.push(
        Rat::from_integer(BigInt::from(1)) + &p_rat / (&p_rat + Rat::from_integer(BigInt::from(1))),
    );
    let mut sampled_valuations = Vec::new();
    for x in &samples {
        match padic_valuation_at(alpha, beta, n_param, x, p, limits)?.total {
            Valuation::Finite(v) => sampled_valuations.push(v),
            Valuation::ExactZero => continue,
        }
    }
    let padic_lower_bound = sampled_valuations
        .iter()
        .copied()
        .min()
        .unwrap_or(guaranteed);
    let log_p = (p as f64).ln();
    let log_f = -(padic_lower_bound as f64) * log_p;
    let m = alpha.max(beta) as f64;
    let log_g = log_height + degree as f64 * (3 * n_param) as f64 * m.ln();
    let product_log = log_f + log_g;
    Ok(GapReport {
        alpha,
        beta,
        p,
        n_param,
        degree,
        log_height,
        guaranteed_valuation: guaranteed,
        padic_lower_bound,
        sampled_valuations,
        f_estimate: log_f.exp(),
        log_f,
        g_estimate: log_g.exp(),
        log_g,
        product_log,
        product_exceeds_one: product_log > 0.0,
        distinct_roots: poly.distinct_roots,
        duplicate_roots: poly.duplicate_roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn degree_nine_all_distinct() {
        let lim = Limits::default();
        let p = build_product_poly(2, 3, 1, &lim).unwrap();
        assert_eq!(p.degree(), 9);
        assert_eq!(p.distinct_roots, 9);
        assert!(!p.duplicate_roots);
        // monic
        assert_eq!(*p.coeffs.last().unwrap(), BigInt::from(1));
        // constant term is -(product of roots) = -(2*3)^9
        let want = -BigInt::from(6).pow(9);
        assert_eq!(p.coeffs[0], want);
        // vanishes at every designated root
        for (i, j) in [(0u32, 0u32), (2, 1), (1, 2)] {
            let x = rat_int(2i64.pow(i) * 3i64.pow(j));
            assert!(p.eval(&x).is_zero());
        }
        assert!(!p.eval(&rat_int(5)).is_zero());
    }

    #[test]
    fn duplicate_roots_flagged() {
        let lim = Limits::default();
        let p = build_product_poly(4, 4, 1, &lim).unwrap();
        assert_eq!(p.degree(), 9);
        assert!(p.duplicate_roots);
        assert_eq!(p.distinct_roots, 5); // 4^(i+j), i+j in 0..=4
    }

    #[test]
    fn height_of_linear() {
        let (max, log) = coeff_height(&[BigInt::from(-2), BigInt::from(1)]);
        assert_eq!(max, BigInt::from(2));
        assert!((log - 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn height_bounded_by_vieta() {
        let lim = Limits::default();
        let p = build_product_poly(2, 3, 1, &lim).unwrap();
        let (_, log_height) = coeff_height(&p.coeffs);
        // crude Vieta bound: binom(9, k) max_root^9 <= 2^9 * 36^9
        let bound = 9.0 * (2.0 * 36.0f64).ln();
        assert!(log_height <= bound);
    }

    #[test]
    fn height_growth_trend() {
        // log-height grows roughly like N^3
        let lim = Limits::default();
        let h1 = coeff_height(&build_product_poly(2, 3, 1, &lim).unwrap().coeffs).1;
        let h2 = coeff_height(&build_product_poly(2, 3, 2, &lim).unwrap().coeffs).1;
        let ratio = h2 / h1;
        assert!(ratio > 4.0 && ratio < 16.0, "ratio {ratio}");
    }

    #[test]
    fn valuation_at_root_is_exact_zero() {
        let lim = Limits::default();
        let rep = padic_valuation_at(4, 7, 1, &rat_int(4), 3, &lim).unwrap();
        assert_eq!(rep.total, Valuation::ExactZero);
    }

    #[test]
    fn valuation_at_ten() {
        let lim = Limits::default();
        let rep = padic_valuation_at(4, 7, 1, &rat_int(10), 3, &lim).unwrap();
        match rep.total {
            Valuation::Finite(v) => assert!(v >= 9, "v = {v}"),
            Valuation::ExactZero => panic!("10 is not a root"),
        }
    }

    #[test]
    fn valuation_rejects_bad_congruence() {
        let lim = Limits::default();
        assert!(padic_valuation_at(4, 7, 1, &rat_int(2), 3, &lim).is_err());
        assert!(padic_valuation_at(5, 7, 1, &rat_int(10), 3, &lim).is_err());
        // rational argument congruent to 1 mod 3 is fine
        assert!(padic_valuation_at(4, 7, 1, &rat(10, 7), 3, &lim).is_ok());
    }

    #[test]
    fn gap_report_positive_product() {
        let lim = Limits::default();
        let rep = analytic_gap_report(4, 7, 3, 1, &lim).unwrap();
        assert_eq!(rep.degree, 9);
        assert!(rep.padic_lower_bound >= 9);
        assert!(rep.product_log > 0.0);
        assert!(rep.product_exceeds_one);
        let rep2 = analytic_gap_report(4, 7, 3, 2, &lim).unwrap();
        assert_eq!(rep2.degree, 36);
        assert!(rep2.product_log > rep.product_log);
    }
}
