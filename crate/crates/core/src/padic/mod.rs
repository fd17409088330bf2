//! Fixed-precision p-adic arithmetic with explicit precision bookkeeping.
//!
//! A value is stored as `p^val * unit + O(p^prec)`: the absolute precision
//! `prec` says modulo which power of p the value is known. A value with no
//! nonzero digit below its precision is "zero at this precision" and carries
//! only `prec`. Every operation computes the precision of its result from
//! the precisions of its inputs, so a final value of precision k is honestly
//! certified modulo p^k. Nothing here rounds silently.

pub mod series;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{int_valuation, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Padic {
    p: u64,
    /// absolute precision: the value is known modulo p^prec
    prec: i64,
    /// None encodes "zero at this precision" (valuation >= prec)
    val: Option<i64>,
    /// unit in [1, p^(prec - val)), coprime to p; zero when val is None
    unit: BigUint,
}

impl Padic {
    pub fn zero_at(p: u64, prec: i64) -> Self {
        Padic {
            p,
            prec,
            val: None,
            unit: BigUint::zero(),
        }
    }

    pub fn one(p: u64, prec: i64) -> Self {
        Padic::from_bigint(p, &BigInt::one(), prec)
    }

    /// Builds `x * p^shift + O(p^prec)` from an exact integer x.
    pub fn from_shifted_bigint(p: u64, shift: i64, x: &BigInt, prec: i64) -> Self {
        let m = prec - shift;
        if m <= 0 || x.is_zero() {
            return Padic::zero_at(p, prec);
        }
        let modulus = BigUint::from(p).pow(m as u32);
        let r = x
            .mod_floor(&BigInt::from(modulus.clone()))
            .to_biguint()
            .unwrap();
        if r.is_zero() {
            return Padic::zero_at(p, prec);
        }
        let (unit_raw, v) = crate::rat::strip_p(&r, p);
        let val = shift + v as i64;
        let m_unit = BigUint::from(p).pow((prec - val) as u32);
        Padic {
            p,
            prec,
            val: Some(val),
            unit: unit_raw % m_unit,
        }
    }

    pub fn from_bigint(p: u64, x: &BigInt, prec: i64) -> Self {
        Padic::from_shifted_bigint(p, 0, x, prec)
    }

    pub fn from_int(p: u64, x: i64, prec: i64) -> Self {
        Padic::from_bigint(p, &BigInt::from(x), prec)
    }

    /// Exact rational to precision `prec`; the denominator must make sense in
    /// Q_p (it always does: p-parts go into the valuation).
    pub fn from_rat(p: u64, x: &Rat, prec: i64) -> Result<Self> {
        check_precision(prec)?;
        if x.is_zero() {
            return Ok(Padic::zero_at(p, prec));
        }
        let v = crate::rat::rat_valuation(x, p)?;
        if prec - v <= 0 {
            return Ok(Padic::zero_at(p, prec));
        }
        let m = BigUint::from(p).pow((prec - v) as u32);
        // unit part: numerator and denominator with p stripped
        let (nu, nv) = crate::rat::strip_p(x.numer().magnitude(), p);
        let (du, dv) = crate::rat::strip_p(x.denom().magnitude(), p);
        debug_assert_eq!(nv as i64 - dv as i64, v);
        let du_inv = mod_inverse(&du, &m)
            .ok_or_else(|| Error::Internal("denominator unit not invertible".into()))?;
        let mut unit = (nu % &m) * du_inv % &m;
        if x.is_negative() {
            unit = (&m - unit) % &m;
        }
        if unit.is_zero() {
            return Ok(Padic::zero_at(p, prec));
        }
        Ok(Padic {
            p,
            prec,
            val: Some(v),
            unit,
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// Exact valuation when certified; None when zero at this precision.
    pub fn valuation(&self) -> Option<i64> {
        self.val
    }

    pub fn unit_part(&self) -> &BigUint {
        &self.unit
    }

    pub fn is_zero_at_precision(&self) -> bool {
        self.val.is_none()
    }

    /// Lower bound for the valuation that is always certified.
    pub fn valuation_lower_bound(&self) -> i64 {
        self.val.unwrap_or(self.prec)
    }

    /// Canonical integer representative in [0, p^(prec-val)) * p^val, as an
    /// exact rational.
    pub fn to_rat(&self) -> Rat {
        match self.val {
            None => Rat::zero(),
            Some(v) => {
                let unit = Rat::from_integer(BigInt::from(self.unit.clone()));
                let pv = Rat::from_integer(BigInt::from(self.p)).pow(v as i32);
                unit * pv
            }
        }
    }

    fn check_same_prime(&self, other: &Padic) -> Result<()> {
        if self.p != other.p {
            return Err(Error::Domain(format!(
                "mixed primes {} and {}",
                self.p, other.p
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Padic) -> Result<Padic> {
        self.check_same_prime(other)?;
        let k = self.prec.min(other.prec);
        match (self.val, other.val) {
            (None, None) => Ok(Padic::zero_at(self.p, k)),
            (None, Some(_)) => Ok(other.truncate(k)),
            (Some(_), None) => Ok(self.truncate(k)),
            (Some(va), Some(vb)) => {
                let v = va.min(vb);
                if k - v <= 0 {
                    return Ok(Padic::zero_at(self.p, k));
                }
                let a = BigInt::from(self.unit.clone()) * BigInt::from(self.p).pow((va - v) as u32);
                let b =
                    BigInt::from(other.unit.clone()) * BigInt::from(self.p).pow((vb - v) as u32);
                Ok(Padic::from_shifted_bigint(self.p, v, &(a + b), k))
            }
        }
    }

    pub fn neg(&self) -> Padic {
        match self.val {
            None => self.clone(),
            Some(v) => {
                let m = BigUint::from(self.p).pow((self.prec - v) as u32);
                Padic {
                    p: self.p,
                    prec: self.prec,
                    val: Some(v),
                    unit: (&m - &self.unit) % m,
                }
            }
        }
    }

    pub fn sub(&self, other: &Padic) -> Result<Padic> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Padic) -> Result<Padic> {
        self.check_same_prime(other)?;
        match (self.val, other.val) {
            (None, None) => Ok(Padic::zero_at(self.p, self.prec + other.prec)),
            (None, Some(vb)) => Ok(Padic::zero_at(self.p, self.prec + vb)),
            (Some(va), None) => Ok(Padic::zero_at(self.p, va + other.prec)),
            (Some(va), Some(vb)) => {
                let val = va + vb;
                let rel = (self.prec - va).min(other.prec - vb);
                debug_assert!(rel > 0);
                let m = BigUint::from(self.p).pow(rel as u32);
                let unit = (&self.unit * &other.unit) % m;
                debug_assert!(!unit.is_zero());
                Ok(Padic {
                    p: self.p,
                    prec: val + rel,
                    val: Some(val),
                    unit,
                })
            }
        }
    }

    /// Multiplicative inverse; errors on zero-at-precision input.
    pub fn inv(&self) -> Result<Padic> {
        let Some(v) = self.val else {
            return Err(Error::UndecidedAtPrecision(
                "cannot invert a value that is zero at its precision".into(),
            ));
        };
        let rel = self.prec - v;
        let m = BigUint::from(self.p).pow(rel as u32);
        let unit = mod_inverse(&self.unit, &m)
            .ok_or_else(|| Error::Internal("unit not invertible".into()))?;
        Ok(Padic {
            p: self.p,
            prec: rel - v,
            val: Some(-v),
            unit,
        })
    }

    pub fn div(&self, other: &Padic) -> Result<Padic> {
        self.mul(&other.inv()?)
    }

    /// Multiplication by an exact nonzero integer.
    pub fn mul_int(&self, c: &BigInt) -> Padic {
        if c.is_zero() {
            return Padic::zero_at(self.p, self.prec);
        }
        match self.val {
            None => {
                let vc = int_valuation(c, self.p) as i64;
                Padic::zero_at(self.p, self.prec + vc)
            }
            Some(v) => {
                let vc = int_valuation(c, self.p) as i64;
                let rel = self.prec - v;
                let m = BigInt::from(BigUint::from(self.p).pow(rel as u32));
                let cu = (c / BigInt::from(self.p).pow(vc as u32)).mod_floor(&m);
                let unit = (BigInt::from(self.unit.clone()) * cu)
                    .mod_floor(&m)
                    .to_biguint()
                    .unwrap();
                debug_assert!(!unit.is_zero());
                Padic {
                    p: self.p,
                    prec: v + vc + rel,
                    val: Some(v + vc),
                    unit,
                }
            }
        }
    }

    /// Exact division by a nonzero integer.
    pub fn div_int(&self, c: &BigInt) -> Result<Padic> {
        if c.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        let vc = int_valuation(c, self.p) as i64;
        match self.val {
            None => Ok(Padic::zero_at(self.p, self.prec - vc)),
            Some(v) => {
                let rel = self.prec - v;
                let m = BigUint::from(self.p).pow(rel as u32);
                let cu = (c / BigInt::from(self.p).pow(vc as u32))
                    .mod_floor(&BigInt::from(m.clone()))
                    .to_biguint()
                    .unwrap();
                let cu_inv = mod_inverse(&cu, &m)
                    .ok_or_else(|| Error::Internal("integer unit not invertible".into()))?;
                let unit = (&self.unit * cu_inv) % &m;
                Ok(Padic {
                    p: self.p,
                    prec: v - vc + rel,
                    val: Some(v - vc),
                    unit,
                })
            }
        }
    }

    pub fn pow(&self, k: u32) -> Result<Padic> {
        let mut acc = Padic::one(
            self.p,
            self.prec + self.valuation_lower_bound().abs() * k as i64 + 4,
        );
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Drops precision to `prec` (no-op if already lower).
    pub fn truncate(&self, prec: i64) -> Padic {
        if prec >= self.prec {
            return self.clone();
        }
        match self.val {
            None => Padic::zero_at(self.p, prec),
            Some(v) => {
                if v >= prec {
                    Padic::zero_at(self.p, prec)
                } else {
                    let m = BigUint::from(self.p).pow((prec - v) as u32);
                    let unit = &self.unit % m;
                    if unit.is_zero() {
                        Padic::zero_at(self.p, prec)
                    } else {
                        Padic {
                            p: self.p,
                            prec,
                            val: Some(v),
                            unit,
                        }
                    }
                }
            }
        }
    }

    /// Congruence modulo p^k: the difference is zero at precision >= k.
    pub fn congruent_at(&self, other: &Padic, k: i64) -> Result<bool> {
        let d = self.sub(other)?;
        Ok(d.prec >= k && d.truncate(k).is_zero_at_precision())
    }
}

impl std::fmt::Display for Padic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.val {
            None => write!(f, "O({}^{})", self.p, self.prec),
            Some(v) => write!(
                f,
                "{}^{} * {} + O({}^{})",
                self.p, v, self.unit, self.p, self.prec
            ),
        }
    }
}

pub fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(&m).to_biguint().unwrap())
}

fn ilog_p(p: u64, n: i64) -> i64 {
    if n <= 1 {
        return 0;
    }
    let mut k = 0;
    let mut acc: i128 = 1;
    while acc * p as i128 <= n as i128 {
        acc *= p as i128;
        k += 1;
    }
    k
}

/// Hard ceiling for requested absolute precisions: generous for desk work,
/// small enough that exponent arithmetic can never overflow.
pub const MAX_PRECISION: i64 = 1 << 20;

pub fn check_precision(prec: i64) -> Result<()> {
    if !(1..=MAX_PRECISION).contains(&prec) {
        return Err(Error::Precondition(format!(
            "precision must lie in 1..={MAX_PRECISION}, got {prec}"
        )));
    }
    Ok(())
}

fn check_prime(p: u64) -> Result<()> {
    if !crate::factor::is_prime_u64(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    Ok(())
}

/// Iwasawa's p-adic logarithm of a nonzero rational, with log_p(p) = 0 and
/// log_p(-1) = 0: write x = +-p^v u and return log(u^(p-1)) / (p-1) via the
/// series log(1 + t). The result is certified modulo p^prec.
pub fn iwasawa_log(x: &Rat, p: u64, prec: i64) -> Result<Padic> {
    check_prime(p)?;
    if x.is_zero() {
        return Err(Error::Domain("logarithm of zero".into()));
    }
    check_precision(prec)?;
    let v = crate::rat::rat_valuation(x, p)?;
    let pr = Rat::from_integer(BigInt::from(p));
    let mut u = x / pr.pow(v as i32);
    if u.is_negative() {
        u = -u;
    }
    if u.is_one() {
        return Ok(Padic::zero_at(p, prec));
    }
    let t = u.pow(p as i32 - 1) - Rat::one();
    if t.is_zero() {
        // u^(p-1) = 1, a root of unity
        return Ok(Padic::zero_at(p, prec));
    }
    let vt = crate::rat::rat_valuation(&t, p)?;
    debug_assert!(vt >= 1, "u^(p-1) = 1 mod p by Fermat");
    // series terms t^k / k; absolute guard for the divisions by k
    let work = prec + ilog_p(p, prec + 32) + 3;
    let mut kmax = 1;
    while kmax * vt - ilog_p(p, kmax) < work {
        kmax += 1;
    }
    let t_padic = Padic::from_rat(p, &t, work + ilog_p(p, kmax) + 1)?;
    let mut acc = Padic::zero_at(p, work);
    let mut power = Padic::one(p, t_padic.precision());
    for k in 1..=kmax {
        power = power.mul(&t_padic)?;
        let mut term = power.div_int(&BigInt::from(k))?;
        if k % 2 == 0 {
            term = term.neg();
        }
        acc = acc.add(&term)?;
    }
    let result = acc.div_int(&BigInt::from(p as i64 - 1))?;
    if result.precision() < prec {
        return Err(Error::Internal(format!(
            "log lost precision: wanted {prec}, got {}",
            result.precision()
        )));
    }
    Ok(result.truncate(prec))
}

/// p-adic exponential sum_{k} w^k / k!. Requires v(w) >= 1 for odd p and
/// v(w) >= 2 for p = 2 (certified), the convergence domain.
pub fn padic_exp(w: &Padic) -> Result<Padic> {
    let p = w.prime();
    check_prime(p)?;
    let needed = if p == 2 { 2 } else { 1 };
    let vw = match w.valuation() {
        Some(v) => {
            if v < needed {
                return Err(Error::Precondition(format!(
                    "exp needs valuation >= {needed} for p = {p}, got {v}"
                )));
            }
            v
        }
        None => {
            if w.precision() < needed {
                return Err(Error::UndecidedAtPrecision(format!(
                    "exp argument zero at precision {} < {needed}",
                    w.precision()
                )));
            }
            // exp(O(p^k)) = 1 + O(p^k)
            return Ok(Padic::one(p, w.precision()));
        }
    };
    let prec = w.precision();
    // v(w^k / k!) >= k (vw - 1/(p-1)) + 1/(p-1) > 0 and grows linearly
    let denom = vw * (p as i64 - 1) - 1;
    debug_assert!(denom > 0);
    let kmax = (prec * (p as i64 - 1)) / denom + 2;
    let mut acc = Padic::one(p, prec);
    let mut term = Padic::one(p, prec + vw * kmax + 4);
    for k in 1..=kmax {
        term = term.mul(w)?.div_int(&BigInt::from(k))?;
        acc = acc.add(&term)?;
    }
    if acc.precision() < prec {
        return Err(Error::Internal(format!(
            "exp lost precision: wanted {prec}, got {}",
            acc.precision()
        )));
    }
    Ok(acc.truncate(prec))
}

/// Report of a p-adic matrix rank computation at finite precision.
#[derive(Debug, Clone)]
pub struct PadicRankReport {
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
    /// Precisions still carried by the eliminated residual block; the rank is
    /// exact iff the true entries of that block are zero, which finite
    /// precision can never certify, so the rank is a certified lower bound
    /// and "rank deficient" verdicts are statements at this precision.
    pub residual_min_precision: Option<i64>,
}

/// Row echelon rank with certified pivots: a pivot is only used when its
/// valuation is known exactly (nonzero at its precision). Errors when the
/// elimination leaves entries with no informative precision.
pub fn padic_matrix_rank(rows_in: &[Vec<Padic>]) -> Result<PadicRankReport> {
    if rows_in.is_empty() || rows_in[0].is_empty() {
        return Err(Error::Shape("empty matrix".into()));
    }
    let rows = rows_in.len();
    let cols = rows_in[0].len();
    if rows_in.iter().any(|r| r.len() != cols) {
        return Err(Error::Shape("ragged rows".into()));
    }
    let p = rows_in[0][0].prime();
    if rows_in.iter().any(|r| r.iter().any(|e| e.prime() != p)) {
        return Err(Error::Domain("mixed primes in matrix".into()));
    }
    let mut m: Vec<Vec<Padic>> = rows_in.to_vec();
    let mut rank = 0;
    let mut used_cols = vec![false; cols];
    loop {
        // best certified pivot: minimal valuation, then row-major order
        let mut pivot: Option<(usize, usize, i64)> = None;
        for (i, row) in m.iter().enumerate().skip(rank) {
            for (j, e) in row.iter().enumerate() {
                if used_cols[j] {
                    continue;
                }
                if let Some(v) = e.valuation() {
                    if pivot.is_none_or(|(_, _, pv)| v < pv) {
                        pivot = Some((i, j, v));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = pivot else {
            // all remaining entries are zero at their precision
            let mut min_prec: Option<i64> = None;
            for row in m.iter().skip(rank) {
                for (j, e) in row.iter().enumerate() {
                    if !used_cols[j] {
                        min_prec =
                            Some(min_prec.map_or(e.precision(), |x: i64| x.min(e.precision())));
                    }
                }
            }
            if let Some(mp) = min_prec {
                if mp <= 0 {
                    return Err(Error::UndecidedAtPrecision(
                        "elimination exhausted the precision of a residual entry".into(),
                    ));
                }
            }
            return Ok(PadicRankReport {
                rank,
                rows,
                cols,
                residual_min_precision: min_prec,
            });
        };
        m.swap(rank, pi);
        used_cols[pj] = true;
        let pivot_entry = m[rank][pj].clone();
        for i in rank + 1..rows {
            let factor = m[i][pj].div(&pivot_entry)?;
            for j in 0..cols {
                if used_cols[j] && j != pj {
                    continue;
                }
                let delta = factor.mul(&m[rank][j])?;
                m[i][j] = m[i][j].sub(&delta)?;
            }
        }
        rank += 1;
        if rank == rows {
            return Ok(PadicRankReport {
                rank,
                rows,
                cols,
                residual_min_precision: None,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn normalization_and_display() {
        let x = Padic::from_int(5, 50, 4);
        assert_eq!(x.valuation(), Some(2));
        assert_eq!(*x.unit_part(), BigUint::from(2u32));
        assert_eq!(x.precision(), 4);
        let z = Padic::from_int(5, 625, 4);
        assert!(z.is_zero_at_precision());
    }

    #[test]
    fn rational_input_with_denominator() {
        // 1/2 mod 5^3: inverse of 2 is 63
        let x = Padic::from_rat(5, &rat(1, 2), 3).unwrap();
        assert_eq!(x.valuation(), Some(0));
        assert_eq!(*x.unit_part(), BigUint::from(63u32));
    }

    #[test]
    fn addition_cancellation_tracks_precision() {
        let a = Padic::from_int(5, 6, 6);
        let b = Padic::from_int(5, -6, 6);
        let s = a.add(&b).unwrap();
        assert!(s.is_zero_at_precision());
        assert_eq!(s.precision(), 6);
        let c = a.add(&Padic::from_int(5, 19, 6)).unwrap();
        assert_eq!(c.valuation(), Some(2));
    }

    #[test]
    fn multiplication_precision_rule() {
        // (p^1 u + O(p^4)) * (p^2 w + O(p^5)): val 3, relative min(3, 3) -> prec 6
        let a = Padic::from_int(5, 5 * 2, 4);
        let b = Padic::from_int(5, 25 * 3, 5);
        let c = a.mul(&b).unwrap();
        assert_eq!(c.valuation(), Some(3));
        assert_eq!(c.precision(), 6);
        assert_eq!(*c.unit_part(), BigUint::from(6u32));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Padic::from_rat(5, &rat(7, 3), 8).unwrap();
        let inv = a.inv().unwrap();
        let prod = a.mul(&inv).unwrap();
        assert!(prod
            .congruent_at(&Padic::one(5, 8), prod.precision())
            .unwrap());
    }

    #[test]
    fn log_of_one_and_p() {
        assert!(iwasawa_log(&rat_int(1), 5, 10)
            .unwrap()
            .is_zero_at_precision());
        assert!(iwasawa_log(&rat_int(5), 5, 10)
            .unwrap()
            .is_zero_at_precision());
        assert!(iwasawa_log(&rat_int(-1), 5, 10)
            .unwrap()
            .is_zero_at_precision());
        assert!(iwasawa_log(&rat_int(0), 5, 10).is_err());
    }

    #[test]
    fn log_of_six_base_five() {
        // log(6) = log(1 + 5) = 5 - 25/2 + ... = 5 mod 25
        let l = iwasawa_log(&rat_int(6), 5, 2).unwrap();
        assert!(l.congruent_at(&Padic::from_int(5, 5, 2), 2).unwrap());
    }

    #[test]
    fn exp_of_zero_and_five() {
        let z = Padic::zero_at(5, 6);
        let e = padic_exp(&z).unwrap();
        assert!(e.congruent_at(&Padic::one(5, 6), 6).unwrap());
        // exp(5) mod 125 = 1 + 5 + 25/2 = 1 + 5 + 25*63 = 81 mod 125
        let w = Padic::from_int(5, 5, 3);
        let e5 = padic_exp(&w).unwrap();
        assert!(e5.congruent_at(&Padic::from_int(5, 81, 3), 3).unwrap());
    }

    #[test]
    fn exp_convergence_precondition() {
        let w = Padic::from_int(5, 3, 6); // valuation 0
        assert!(matches!(padic_exp(&w), Err(Error::Precondition(_))));
        let w2 = Padic::from_int(2, 2, 6); // valuation 1, p = 2 needs 2
        assert!(matches!(padic_exp(&w2), Err(Error::Precondition(_))));
    }

    #[test]
    fn exp_log_roundtrip() {
        for p in [3u64, 5, 7] {
            let u = rat_int(1 + (p * p) as i64);
            let l = iwasawa_log(&u, p, 10).unwrap();
            let e = padic_exp(&l).unwrap();
            let u_padic = Padic::from_rat(p, &u, 10).unwrap();
            assert!(
                e.congruent_at(&u_padic, e.precision().min(10)).unwrap(),
                "p = {p}"
            );
        }
    }

    #[test]
    fn log_homomorphism() {
        let p = 7;
        let a = rat(50, 3);
        let b = rat(-14, 5);
        let la = iwasawa_log(&a, p, 9).unwrap();
        let lb = iwasawa_log(&b, p, 9).unwrap();
        let lab = iwasawa_log(&(a * b), p, 9).unwrap();
        let sum = la.add(&lb).unwrap();
        assert!(lab.congruent_at(&sum, 9).unwrap());
    }

    #[test]
    fn padic_rank_of_log_matrix() {
        // logs of [[4, 8], [16, 64]] in Q_5: all multiples of log 2, rank 1
        let prec = 12;
        let mk = |v: i64| iwasawa_log(&rat_int(v), 5, prec).unwrap();
        let m = vec![vec![mk(4), mk(8)], vec![mk(16), mk(64)]];
        let report = padic_matrix_rank(&m).unwrap();
        assert_eq!(report.rank, 1);
        // identity-like independent logs: rank 2
        let m2 = vec![vec![mk(6), mk(1)], vec![mk(1), mk(6)]];
        let report2 = padic_matrix_rank(&m2).unwrap();
        assert_eq!(report2.rank, 2);
    }
}
