//! Canonical integer-vector enumeration shared by every search in the crate.
//!
//! The documented search order is: max-norm ascending, then L1-norm
//! ascending, then lexicographically descending. Only sign representatives
//! are produced (first nonzero coordinate positive); `primitive_only`
//! additionally restricts to vectors with coordinate gcd 1. The first vector
//! of the order is always e_1.

use std::cmp::Reverse;

/// Iterator over nonzero integer vectors of bounded max-norm in canonical
/// search order.
pub struct CanonicalVectors {
    dim: usize,
    max_height: i64,
    primitive_only: bool,
    level: i64,
    buffer: Vec<Vec<i64>>,
    idx: usize,
}

impl CanonicalVectors {
    pub fn new(dim: usize, max_height: i64, primitive_only: bool) -> Self {
        CanonicalVectors {
            dim,
            max_height,
            primitive_only,
            level: 0,
            buffer: Vec::new(),
            idx: 0,
        }
    }

    fn fill_level(&mut self, m: i64) {
        let mut out = Vec::new();
        let mut v = vec![-m; self.dim];
        loop {
            if v.iter().any(|x| x.abs() == m)
                && sign_representative(&v)
                && (!self.primitive_only || vec_gcd(&v) == 1)
            {
                out.push(v.clone());
            }
            // odometer over [-m, m]^dim
            let mut i = self.dim;
            loop {
                if i == 0 {
                    out.sort_by_key(|v| (l1(v), Reverse(v.clone())));
                    self.buffer = out;
                    self.idx = 0;
                    return;
                }
                i -= 1;
                if v[i] < m {
                    v[i] += 1;
                    for x in &mut v[i + 1..] {
                        *x = -m;
                    }
                    break;
                }
            }
        }
    }
}

impl Iterator for CanonicalVectors {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        loop {
            if self.idx < self.buffer.len() {
                let v = self.buffer[self.idx].clone();
                self.idx += 1;
                return Some(v);
            }
            if self.level >= self.max_height {
                return None;
            }
            self.level += 1;
            let m = self.level;
            self.fill_level(m);
        }
    }
}

fn l1(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}

/// First nonzero coordinate positive.
pub fn sign_representative(v: &[i64]) -> bool {
    match v.iter().find(|x| **x != 0) {
        Some(x) => *x > 0,
        None => false,
    }
}

pub fn vec_gcd(v: &[i64]) -> i64 {
    v.iter()
        .fold(0i64, |acc, &x| num_integer::Integer::gcd(&acc, &x))
}

/// Box [0, n-1]^dim in lexicographic order.
pub fn box_points(dim: usize, n: u64) -> impl Iterator<Item = Vec<i64>> {
    let mut current: Option<Vec<i64>> = if n == 0 { None } else { Some(vec![0; dim]) };
    std::iter::from_fn(move || {
        let v = current.clone()?;
        // advance odometer
        let mut next = v.clone();
        let mut i = dim;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i] + 1 < n as i64 {
                next[i] += 1;
                for x in &mut next[i + 1..] {
                    *x = 0;
                }
                current = Some(next);
                break;
            }
        }
        Some(v)
    })
}
