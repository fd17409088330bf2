//! Multivariate Laurent polynomials with exact rational coefficients.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Sparse Laurent polynomial: exponent vector in Z^nvars -> nonzero rational
/// coefficient. The support S(P) is the key set; the zero polynomial has no
/// terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rat>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = LaurentPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn monomial(nvars: usize, exp: Vec<i64>, c: Rat) -> Result<Self> {
        if exp.len() != nvars {
            return Err(Error::Shape("exponent vector length mismatch".into()));
        }
        let mut p = LaurentPoly::zero(nvars);
        p.add_term(exp, c);
        Ok(p)
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, Rat)>,
    ) -> Result<Self> {
        let mut p = LaurentPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Shape("exponent vector length mismatch".into()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rat)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: Rat) {
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

    pub fn add(&self, rhs: &LaurentPoly) -> Result<LaurentPoly> {
        if self.nvars != rhs.nvars {
            return Err(Error::Shape("variable count mismatch".into()));
        }
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rat) -> LaurentPoly {
        if s.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn multiply(&self, rhs: &LaurentPoly) -> Result<LaurentPoly> {
        if self.nvars != rhs.nvars {
            return Err(Error::Shape("variable count mismatch".into()));
        }
        let mut out = LaurentPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// Exact evaluation at a point of the torus; every coordinate must be
    /// nonzero because exponents may be negative. Coordinate powers are
    /// tabulated once per call.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::Shape("point length mismatch".into()));
        }
        if point.iter().any(|z| z.is_zero()) {
            return Err(Error::Domain(
                "Laurent evaluation requires nonzero coordinates".into(),
            ));
        }
        if self.terms.is_empty() {
            return Ok(Rat::zero());
        }
        // power tables: pos[v][k] = z_v^k, neg[v][k] = z_v^-k
        let mut pos: Vec<Vec<Rat>> = Vec::with_capacity(self.nvars);
        let mut neg: Vec<Vec<Rat>> = Vec::with_capacity(self.nvars);
        for v in 0..self.nvars {
            let hi = self.terms.keys().map(|e| e[v]).max().unwrap().max(0);
            let lo = self.terms.keys().map(|e| e[v]).min().unwrap().min(0);
            let mut up = vec![Rat::one()];
            for _ in 0..hi {
                up.push(up.last().unwrap() * &point[v]);
            }
            let inv = point[v].recip();
            let mut down = vec![Rat::one()];
            for _ in 0..-lo {
                down.push(down.last().unwrap() * &inv);
            }
            pos.push(up);
            neg.push(down);
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in e.iter().enumerate() {
                if k >= 0 {
                    t *= &pos[v][k as usize];
                } else {
                    t *= &neg[v][(-k) as usize];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact zero test at a torus point. Equivalent to `eval(..) == 0` but
    /// runs on homogenized integers (numerator/denominator power tables, no
    /// rational reduction), which is much faster on large coordinates.
    pub fn vanishes_at(&self, point: &[Rat]) -> Result<bool> {
        use num_bigint::BigInt;
        if point.len() != self.nvars {
            return Err(Error::Shape("point length mismatch".into()));
        }
        if point.iter().any(|z| z.is_zero()) {
            return Err(Error::Domain(
                "Laurent evaluation requires nonzero coordinates".into(),
            ));
        }
        if self.terms.is_empty() {
            return Ok(true);
        }
        // shift exponents to be nonnegative: multiplies by a nonzero monomial
        let mins: Vec<i64> = (0..self.nvars)
            .map(|v| self.terms.keys().map(|e| e[v]).min().unwrap().min(0))
            .collect();
        let maxs: Vec<i64> = (0..self.nvars)
            .map(|v| self.terms.keys().map(|e| e[v]).max().unwrap() - mins[v])
            .collect();
        // coefficient denominators cleared once
        let coeff_lcm = self.terms.values().fold(BigInt::one(), |acc, c| {
            num_integer::Integer::lcm(&acc, c.denom())
        });
        // power tables for numerators and denominators
        let mut num_pow: Vec<Vec<BigInt>> = Vec::with_capacity(self.nvars);
        let mut den_pow: Vec<Vec<BigInt>> = Vec::with_capacity(self.nvars);
        for (v, z) in point.iter().enumerate() {
            let mut np = vec![BigInt::one()];
            let mut dp = vec![BigInt::one()];
            for _ in 0..maxs[v] {
                np.push(np.last().unwrap() * z.numer());
                dp.push(dp.last().unwrap() * z.denom());
            }
            num_pow.push(np);
            den_pow.push(dp);
        }
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.numer() * (&coeff_lcm / c.denom());
            for v in 0..self.nvars {
                let k = (e[v] - mins[v]) as usize;
                t *= &num_pow[v][k];
                t *= &den_pow[v][maxs[v] as usize - k];
            }
            acc += t;
        }
        Ok(acc.is_zero())
    }

    /// Divides by the unique monomial that makes every exponent nonnegative
    /// with, for each variable, some term of exponent zero. The zero set on
    /// the torus is unchanged. Errors on the zero polynomial.
    pub fn clear_monomial(&self) -> Result<LaurentPoly> {
        if self.is_zero() {
            return Err(Error::Domain(
                "cannot clear monomial of zero polynomial".into(),
            ));
        }
        let mins: Vec<i64> = (0..self.nvars)
            .map(|v| self.terms.keys().map(|e| e[v]).min().unwrap())
            .collect();
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(&mins).map(|(x, m)| x - m).collect(), c.clone()))
                .collect(),
        })
    }

    /// Max total degree over the support (meaningful for cleared polynomials).
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    /// Rescales to integer coefficients, content 1, and a positive coefficient
    /// on the lexicographically smallest exponent.
    pub fn canonical_integer_form(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<Rat> = self.terms.values().cloned().collect();
        let scaled = crate::linalg::primitive_integer_vector(&coeffs);
        let mut terms: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
        for ((e, _), c) in self.terms.iter().zip(scaled) {
            terms.insert(e.clone(), c);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }
}
