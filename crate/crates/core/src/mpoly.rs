//! Polynomial entry types for fraction-free elimination: multivariate
//! integer polynomials (structural rank of pencils) and univariate integer
//! polynomials (Sylvester resultants).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::linalg::Domain;

/// Multivariate polynomial over the integers, sparse, lex-ordered terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntMultiPoly {
    pub fn zero(nvars: usize) -> Self {
        IntMultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = IntMultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0u32; nvars];
        e[i] = 1;
        let mut p = IntMultiPoly::zero(nvars);
        p.terms.insert(e, BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        IntMultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn multiply(&self, rhs: &Self) -> Self {
        let mut out = IntMultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Evaluates at rational points (used only by tests and the randomized
    /// cross-checks).
    pub fn eval(&self, point: &[crate::rat::Rat]) -> crate::rat::Rat {
        use crate::rat::Rat;
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = Rat::from_integer(c.clone());
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

impl std::ops::Add for IntMultiPoly {
    type Output = IntMultiPoly;
    fn add(self, rhs: IntMultiPoly) -> IntMultiPoly {
        let nvars = self.nvars.max(rhs.nvars);
        IntMultiPoly::add(&self.widen(nvars), &rhs.widen(nvars))
    }
}

impl std::ops::Mul for IntMultiPoly {
    type Output = IntMultiPoly;
    fn mul(self, rhs: IntMultiPoly) -> IntMultiPoly {
        let nvars = self.nvars.max(rhs.nvars);
        self.widen(nvars).multiply(&rhs.widen(nvars))
    }
}

impl Zero for IntMultiPoly {
    fn zero() -> Self {
        // nvars is refined on first combination with a sized operand
        IntMultiPoly::zero(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for IntMultiPoly {
    fn one() -> Self {
        IntMultiPoly::constant(0, BigInt::one())
    }
}

impl Domain for IntMultiPoly {
    fn ref_mul(&self, rhs: &Self) -> Self {
        let nvars = self.nvars.max(rhs.nvars);
        self.widen(nvars).multiply(&rhs.widen(nvars))
    }

    fn ref_sub(&self, rhs: &Self) -> Self {
        let nvars = self.nvars.max(rhs.nvars);
        self.widen(nvars).add(&rhs.widen(nvars).neg())
    }

    fn exact_div(&self, rhs: &Self) -> Self {
        let nvars = self.nvars.max(rhs.nvars);
        let mut rem = self.widen(nvars);
        let div = rhs.widen(nvars);
        let mut quot = IntMultiPoly::zero(nvars);
        let (de, dc) = div.leading().expect("division by zero polynomial");
        let (de, dc) = (de.clone(), dc.clone());
        while let Some((re, rc)) = rem.leading() {
            let exp: Vec<u32> = re
                .iter()
                .zip(&de)
                .map(|(a, b)| a.checked_sub(*b).expect("inexact polynomial division"))
                .collect();
            let (q, r) = rc.div_rem(&dc);
            debug_assert!(r.is_zero(), "inexact polynomial division");
            let mut term = IntMultiPoly::zero(nvars);
            term.terms.insert(exp, q);
            quot = quot.add(&term);
            rem = rem.add(&term.multiply(&div).neg());
        }
        quot
    }
}

impl IntMultiPoly {
    fn widen(&self, nvars: usize) -> IntMultiPoly {
        if self.nvars == nvars {
            return self.clone();
        }
        assert!(self.nvars <= nvars);
        IntMultiPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.resize(nvars, 0);
                    (e2, c.clone())
                })
                .collect(),
        }
    }
}

/// Univariate polynomial over the integers, dense ascending coefficients,
/// trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }
}

impl std::ops::Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in rhs.0.iter().enumerate() {
            out[i] += b;
        }
        IntPoly::new(out)
    }
}

impl std::ops::Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        self.ref_mul(&rhs)
    }
}

impl Zero for IntPoly {
    fn zero() -> Self {
        IntPoly(Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for IntPoly {
    fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }
}

impl Domain for IntPoly {
    fn ref_mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    fn ref_sub(&self, rhs: &Self) -> Self {
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in rhs.0.iter().enumerate() {
            out[i] -= b;
        }
        IntPoly::new(out)
    }

    fn exact_div(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut rem = self.0.clone();
        let d = rhs.0.len();
        assert!(d > 0, "division by zero polynomial");
        assert!(rem.len() >= d, "inexact polynomial division");
        let lead = &rhs.0[d - 1];
        let mut quot = vec![BigInt::zero(); rem.len() + 1 - d];
        while rem.len() >= d {
            let (q, r) = rem.last().unwrap().div_rem(lead);
            debug_assert!(r.is_zero(), "inexact polynomial division");
            let k = rem.len() - d;
            quot[k] = q.clone();
            for (i, b) in rhs.0.iter().enumerate() {
                let t = &q * b;
                rem[k + i] -= t;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() < d {
                break;
            }
        }
        debug_assert!(rem.is_empty(), "inexact polynomial division");
        IntPoly::new(quot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{bareiss_det, bareiss_rank};

    fn c(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn multipoly_exact_div_roundtrip() {
        let x = IntMultiPoly::variable(2, 0);
        let y = IntMultiPoly::variable(2, 1);
        let a = x.add(&y); // x + y
        let b = x.ref_sub(&y); // x - y
        let prod = a.ref_mul(&b);
        assert_eq!(prod.exact_div(&a), b);
        assert_eq!(prod.exact_div(&b), a);
    }

    #[test]
    fn skew_pencil_symbolic_rank() {
        // x1 (E12 - E21) + x2 (E13 - E31) + x3 (E23 - E32)
        let v = |i| IntMultiPoly::variable(3, i);
        let z = || IntMultiPoly::zero(3);
        let mut grid = vec![
            vec![z(), v(0), v(1)],
            vec![v(0).neg(), z(), v(2)],
            vec![v(1).neg(), v(2).neg(), z()],
        ];
        let mut det_grid = grid.clone();
        assert_eq!(bareiss_rank(&mut grid), 2);
        assert!(bareiss_det(&mut det_grid).is_zero());
    }

    #[test]
    fn intpoly_division() {
        // (t^2 - 1) / (t - 1) = t + 1
        let num = IntPoly::new(vec![c(-1), c(0), c(1)]);
        let den = IntPoly::new(vec![c(-1), c(1)]);
        assert_eq!(num.exact_div(&den), IntPoly::new(vec![c(1), c(1)]));
    }
}
