//! Exact rational scalars and small helpers used throughout the crate.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Arbitrary-precision rational with reduced numerator/denominator and
/// positive denominator (the invariants are maintained by `BigRational`).
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses "a/b" or "a" with optional sign.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator {num:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator {den:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rat::new(n, d))
}

/// p-adic valuation of a nonzero integer.
pub fn int_valuation(x: &BigInt, p: u64) -> u64 {
    assert!(!x.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut v = 0;
    let mut x = x.clone();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&x, &p);
        if r.is_zero() {
            v += 1;
            x = q;
        } else {
            return v;
        }
    }
}

/// p-adic valuation of a nonzero rational.
pub fn rat_valuation(x: &Rat, p: u64) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::Domain("valuation of zero".into()));
    }
    Ok(int_valuation(x.numer(), p) as i64 - int_valuation(x.denom(), p) as i64)
}

/// Strips every power of p from a positive integer, returning (p-free part, valuation).
pub fn strip_p(x: &BigUint, p: u64) -> (BigUint, u64) {
    let p = BigUint::from(p);
    let mut v = 0;
    let mut x = x.clone();
    while (&x % &p).is_zero() && !x.is_zero() {
        x /= &p;
        v += 1;
    }
    (x, v)
}

/// Uniform random rational with numerator and denominator in [1, bound].
pub fn random_unit_fraction<R: Rng>(rng: &mut R, bound: u64) -> Rat {
    let n = rng.gen_range(1..=bound);
    let d = rng.gen_range(1..=bound);
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Random nonzero rational with numerator in [-nb, nb] and denominator in [1, db].
pub fn random_rat<R: Rng>(rng: &mut R, nb: i64, db: i64) -> Rat {
    let mut n = 0i64;
    while n == 0 {
        n = rng.gen_range(-nb..=nb);
    }
    let d = rng.gen_range(1..=db);
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Natural log of |x| for a nonzero integer, robust for very large values.
pub fn bigint_ln_abs(x: &BigInt) -> f64 {
    let mag = x.magnitude();
    if mag.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = mag.bits();
    if bits <= 52 {
        let v: u64 = mag.try_into().expect("fits");
        return (v as f64).ln();
    }
    let shift = bits - 52;
    let top: BigUint = mag >> shift;
    let v: u64 = top.try_into().expect("fits after shift");
    (v as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    if x.is_zero() {
        return 0.0;
    }
    sign * (bigint_ln_abs(x.numer()) - bigint_ln_abs(x.denom())).exp()
}

/// Decimal-string forms used by the JSON formats.
pub fn rat_to_parts(x: &Rat) -> (String, String) {
    (x.numer().to_string(), x.denom().to_string())
}

pub fn rat_from_parts(n: &str, d: &str) -> Result<Rat> {
    let n: BigInt = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator {n:?}")))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator {d:?}")))?;
    if d.is_zero() || d.sign() == Sign::Minus {
        return Err(Error::Parse("denominator must be positive".into()));
    }
    Ok(Rat::new(n, d))
}

pub fn rat_one() -> Rat {
    Rat::one()
}
