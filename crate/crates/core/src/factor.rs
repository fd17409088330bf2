//! Factored nonzero rationals: sign plus a prime -> exponent map.
//!
//! This is the backbone of the multiplicative machinery: a nonzero rational
//! is stored in fully factored form so that products, powers, and the group
//! pairing reduce to integer arithmetic on exponents.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// A nonzero rational as sign * prod p^e with distinct primes and nonzero
/// integer exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactoredRat {
    negative: bool,
    factors: BTreeMap<BigUint, i64>,
}

impl FactoredRat {
    pub fn one() -> Self {
        FactoredRat {
            negative: false,
            factors: BTreeMap::new(),
        }
    }

    pub fn from_parts(negative: bool, factors: BTreeMap<BigUint, i64>) -> Result<Self> {
        for (p, e) in &factors {
            if *e == 0 {
                return Err(Error::Domain("zero exponent in factored rational".into()));
            }
            if !is_prime(p) {
                return Err(Error::Domain(format!("{p} is not prime")));
            }
        }
        Ok(FactoredRat { negative, factors })
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.factors.is_empty()
    }

    pub fn factors(&self) -> &BTreeMap<BigUint, i64> {
        &self.factors
    }

    pub fn exponent_of(&self, p: &BigUint) -> i64 {
        self.factors.get(p).copied().unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.keys()
    }

    pub fn mul(&self, other: &FactoredRat) -> FactoredRat {
        let mut factors = self.factors.clone();
        for (p, e) in &other.factors {
            let slot = factors.entry(p.clone()).or_insert(0);
            *slot = slot.checked_add(*e).expect("factored exponent overflow");
            if *slot == 0 {
                factors.remove(p);
            }
        }
        FactoredRat {
            negative: self.negative ^ other.negative,
            factors,
        }
    }

    pub fn pow(&self, k: i64) -> FactoredRat {
        if k == 0 {
            return FactoredRat::one();
        }
        let factors = self
            .factors
            .iter()
            .map(|(p, e)| {
                (
                    p.clone(),
                    e.checked_mul(k).expect("factored exponent overflow"),
                )
            })
            .collect();
        FactoredRat {
            negative: self.negative && k.rem_euclid(2) == 1,
            factors,
        }
    }

    /// Exact reconstruction as a rational.
    pub fn reconstruct(&self) -> Rat {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (p, e) in &self.factors {
            let p = BigInt::from(p.clone());
            if *e > 0 {
                num *= p.pow(*e as u32);
            } else {
                den *= p.pow((-e) as u32);
            }
        }
        if self.negative {
            num = -num;
        }
        Rat::new(num, den)
    }

    /// Estimated decimal digits of the reconstructed value; used by the
    /// coefficient-growth caps before any expansion happens.
    pub fn digit_estimate(&self) -> f64 {
        self.factors
            .iter()
            .map(|(p, e)| {
                let lp = crate::rat::bigint_ln_abs(&BigInt::from(p.clone()));
                e.unsigned_abs() as f64 * lp / std::f64::consts::LN_10
            })
            .sum()
    }
}

/// Factors a nonzero rational exactly. Errors on zero input.
pub fn factor_rational(q: &Rat) -> Result<FactoredRat> {
    if q.is_zero() {
        return Err(Error::Domain("cannot factor zero".into()));
    }
    let negative = q.is_negative();
    // numerator and denominator are coprime, so no prime appears on both sides
    let mut factors: BTreeMap<BigUint, i64> = BTreeMap::new();
    for (p, e) in factor_biguint(q.numer().magnitude()) {
        factors.insert(p, e as i64);
    }
    for (p, e) in factor_biguint(q.denom().magnitude()) {
        factors.insert(p, -(e as i64));
    }
    Ok(FactoredRat { negative, factors })
}

/// Full factorization of a positive integer as prime -> multiplicity.
pub fn factor_biguint(n: &BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    if n.is_one() || n.is_zero() {
        return out;
    }
    let mut stack = vec![n.clone()];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = find_factor(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    out
}

fn find_factor(n: &BigUint) -> BigUint {
    // small trial division first, then Pollard rho (Brent cycle variant)
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let p = BigUint::from(p);
        if (n % &p).is_zero() {
            return p;
        }
    }
    let mut c = BigUint::one();
    loop {
        if let Some(d) = pollard_rho(n, &c) {
            return d;
        }
        c += 1u32;
    }
}

fn pollard_rho(n: &BigUint, c: &BigUint) -> Option<BigUint> {
    let one = BigUint::one();
    let f = |x: &BigUint| (x * x + c) % n;
    let mut x = BigUint::from(2u32);
    let mut y = x.clone();
    let mut d = one.clone();
    let mut steps = 0u64;
    while d.is_one() {
        x = f(&x);
        y = f(&f(&y));
        let diff = if x > y { &x - &y } else { &y - &x };
        d = diff.gcd(n);
        steps += 1;
        if steps > 1 << 22 {
            return None;
        }
    }
    if &d == n {
        None
    } else {
        Some(d)
    }
}

/// Miller-Rabin. Deterministic for inputs below 2^64, strong probable-prime
/// with fixed witnesses above.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return false;
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let a = BigUint::from(a) % n;
        if a.is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // these witnesses decide primality for all n < 2^64
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = modpow_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn modpow_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}
