//! Finitely generated multiplicative subgroups X of (Q*)^n: the bilinear
//! pairing <a, b>_X = prod x_ij^(a_i b_j), box enumeration X(N), orthogonal
//! pair searches, and vanishing-polynomial machinery.
//!
//! Everything runs on the exponent lattice: each generator entry is stored
//! by its prime exponent vector plus a sign bit, so pairing identities are
//! integer linear algebra per prime axis plus a parity condition on the
//! sign axis. The sign axis has order two, which is why searches enumerate
//! all nonzero integer vectors rather than only primitive ones: a witness
//! can exist at an even multiple without existing at the primitive vector.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::enumerate::{box_points, CanonicalVectors};
use crate::error::{Error, Result};
use crate::factor::{factor_rational, FactoredRat};
use crate::laurent::LaurentPoly;
use crate::limits::Limits;
use crate::linalg::{bareiss_rank, RatMatrix};
use crate::padic::{padic_matrix_rank, Padic};
use crate::pencil::{structural_rank, MatrixPencil, RankMode};
use crate::polytope::bk_degree;
use crate::rat::Rat;

/// Subgroup of (Q*)^n generated by m row tuples of nonzero rationals.
#[derive(Debug, Clone)]
pub struct MultGroup {
    m: usize,
    n: usize,
    gens: Vec<Vec<FactoredRat>>,
    lattice: ExponentLattice,
}

/// Exponent-lattice view of the generators: one integer tensor per prime
/// axis plus a parity tensor for the sign axis.
#[derive(Debug, Clone)]
pub struct ExponentLattice {
    /// primes appearing anywhere in the generators, ascending
    pub axes: Vec<BigUint>,
    /// exps[i][j][ax] = exponent of axes[ax] in generator entry (i, j)
    pub exps: Vec<Vec<Vec<i64>>>,
    /// signs[i][j] = 1 iff entry (i, j) is negative
    pub signs: Vec<Vec<u8>>,
}

impl MultGroup {
    pub fn new(gens: Vec<Vec<FactoredRat>>) -> Result<Self> {
        if gens.is_empty() || gens[0].is_empty() {
            return Err(Error::Shape("need at least one generator entry".into()));
        }
        let m = gens.len();
        let n = gens[0].len();
        if gens.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("ragged generator rows".into()));
        }
        let mut axes: BTreeSet<BigUint> = BTreeSet::new();
        for row in &gens {
            for e in row {
                axes.extend(e.primes().cloned());
            }
        }
        let axes: Vec<BigUint> = axes.into_iter().collect();
        let exps = gens
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| axes.iter().map(|p| e.exponent_of(p)).collect())
                    .collect()
            })
            .collect();
        let signs = gens
            .iter()
            .map(|row| row.iter().map(|e| u8::from(e.is_negative())).collect())
            .collect();
        Ok(MultGroup {
            m,
            n,
            gens,
            lattice: ExponentLattice { axes, exps, signs },
        })
    }

    pub fn from_rats(gens: &[Vec<Rat>]) -> Result<Self> {
        let factored = gens
            .iter()
            .map(|row| row.iter().map(factor_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        MultGroup::new(factored)
    }

    pub fn generator_count(&self) -> usize {
        self.m
    }

    pub fn coordinate_count(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Vec<FactoredRat>] {
        &self.gens
    }

    pub fn lattice(&self) -> &ExponentLattice {
        &self.lattice
    }

    /// The bilinear pairing <a, b>_X = prod_ij x_ij^(a_i b_j), exactly.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> Result<FactoredRat> {
        if a.len() != self.m || b.len() != self.n {
            return Err(Error::Shape(format!(
                "pairing needs lengths {} and {}",
                self.m, self.n
            )));
        }
        let mut factors: BTreeMap<BigUint, i64> = BTreeMap::new();
        for (ax, p) in self.lattice.axes.iter().enumerate() {
            let mut total: i128 = 0;
            for i in 0..self.m {
                for j in 0..self.n {
                    total += a[i] as i128 * b[j] as i128 * self.lattice.exps[i][j][ax] as i128;
                }
            }
            let total = i64::try_from(total)
                .map_err(|_| Error::CapExceeded("pairing exponent exceeds i64".into()))?;
            if total != 0 {
                factors.insert(p.clone(), total);
            }
        }
        let mut parity: i64 = 0;
        for i in 0..self.m {
            for j in 0..self.n {
                parity += a[i] * b[j] * self.lattice.signs[i][j] as i64;
            }
        }
        FactoredRat::from_parts(parity.rem_euclid(2) == 1, factors)
    }

    /// The group element x^a = (prod_i x_i1^(a_i), ..., prod_i x_in^(a_i)).
    pub fn element(&self, a: &[i64]) -> Result<Vec<FactoredRat>> {
        if a.len() != self.m {
            return Err(Error::Shape("exponent vector length mismatch".into()));
        }
        (0..self.n)
            .map(|j| {
                let mut factors: BTreeMap<BigUint, i64> = BTreeMap::new();
                for (ax, p) in self.lattice.axes.iter().enumerate() {
                    let mut total: i128 = 0;
                    for i in 0..self.m {
                        total += a[i] as i128 * self.lattice.exps[i][j][ax] as i128;
                    }
                    let total = i64::try_from(total)
                        .map_err(|_| Error::CapExceeded("element exponent exceeds i64".into()))?;
                    if total != 0 {
                        factors.insert(p.clone(), total);
                    }
                }
                let parity: i64 = (0..self.m)
                    .map(|i| a[i] * self.lattice.signs[i][j] as i64)
                    .sum();
                FactoredRat::from_parts(parity.rem_euclid(2) == 1, factors)
            })
            .collect()
    }
}

/// Deduplicated X(N) with the collision count N^m - |X(N)|; collisions are
/// multiplicative relations visible inside the box.
#[derive(Debug, Clone)]
pub struct XnEnumeration {
    pub points: Vec<Vec<FactoredRat>>,
    pub requested: u64,
    pub collisions: u64,
}

pub fn enumerate_xn(x: &MultGroup, n_box: u64, limits: &Limits) -> Result<XnEnumeration> {
    if n_box == 0 {
        return Err(Error::Precondition("box size must be at least 1".into()));
    }
    let total = (n_box as u128)
        .checked_pow(x.m as u32)
        .ok_or_else(|| Error::CapExceeded("box size overflows".into()))?;
    if total > limits.enumeration_cap as u128 {
        return Err(Error::CapExceeded(format!(
            "enumerating {total} box elements exceeds the cap {}",
            limits.enumeration_cap
        )));
    }
    let mut seen: BTreeSet<Vec<FactoredRat>> = BTreeSet::new();
    let mut points = Vec::new();
    for a in box_points(x.m, n_box) {
        let z = x.element(&a)?;
        if seen.insert(z.clone()) {
            points.push(z);
        }
    }
    let requested = total as u64;
    let collisions = requested - points.len() as u64;
    Ok(XnEnumeration {
        points,
        requested,
        collisions,
    })
}

/// Search report for an orthogonal pair <a, b>_X = 1 with nonzero integer
/// vectors of bounded max-norm.
#[derive(Debug, Clone)]
pub struct OrthogonalPairReport {
    pub height: i64,
    pub witness: Option<(Vec<i64>, Vec<i64>)>,
}

/// Searches all nonzero integer pairs with max-norm <= height in canonical
/// order. For each a the prime-axis conditions on b are linear, so a is
/// skipped when the stacked prime matrix has full column rank; the sign
/// axis adds a parity condition checked during enumeration. Certificates
/// are re-verified through the exact pairing before being returned.
pub fn search_condition_o(x: &MultGroup, height: i64) -> Result<OrthogonalPairReport> {
    if x.m != x.n {
        return Err(Error::Precondition(
            "orthogonal pair search needs a square generator matrix".into(),
        ));
    }
    if height < 1 {
        return Err(Error::Precondition("height must be at least 1".into()));
    }
    let n = x.n;
    let axes = x.lattice.axes.len();
    for a in CanonicalVectors::new(n, height, false) {
        // stacked prime-axis matrix L_a[ax][j] = sum_i a_i e_ij[ax]
        let mut stacked: Vec<Vec<i64>> = vec![vec![0; n]; axes];
        for (ax, row) in stacked.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut total: i128 = 0;
                for i in 0..n {
                    total += a[i] as i128 * x.lattice.exps[i][j][ax] as i128;
                }
                *slot = i64::try_from(total)
                    .map_err(|_| Error::CapExceeded("exponent overflow".into()))?;
            }
        }
        let sign_row: Vec<i64> = (0..n)
            .map(|j| (0..n).map(|i| a[i] * x.lattice.signs[i][j] as i64).sum())
            .collect();
        if !stacked.is_empty() {
            let mut grid: Vec<Vec<BigInt>> = stacked
                .iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            if bareiss_rank(&mut grid) == n {
                continue; // only b = 0 satisfies the prime conditions
            }
        }
        for b in CanonicalVectors::new(n, height, false) {
            let primes_ok = stacked
                .iter()
                .all(|row| row.iter().zip(&b).map(|(&l, &bj)| l * bj).sum::<i64>() == 0);
            if !primes_ok {
                continue;
            }
            let parity: i64 = sign_row.iter().zip(&b).map(|(&s, &bj)| s * bj).sum();
            if parity.rem_euclid(2) != 0 {
                continue;
            }
            let value = x.pairing(&a, &b)?;
            if !value.is_one() {
                return Err(Error::Internal(
                    "lattice conditions matched but the pairing is not 1".into(),
                ));
            }
            return Ok(OrthogonalPairReport {
                height,
                witness: Some((a, b)),
            });
        }
    }
    Ok(OrthogonalPairReport {
        height,
        witness: None,
    })
}

/// Subgroup-orthogonality verdict: <A, B>_X = 1 on generator pairs plus the
/// rank inequality m'/m + n'/n > 1.
#[derive(Debug, Clone)]
pub struct SubgroupOrthogonalityReport {
    pub orthogonal: bool,
    pub a_rank: usize,
    pub b_rank: usize,
    pub rank_inequality: bool,
    pub verdict: bool,
}

pub fn verify_condition_big_o(
    x: &MultGroup,
    a_basis: &[Vec<i64>],
    b_basis: &[Vec<i64>],
) -> Result<SubgroupOrthogonalityReport> {
    for a in a_basis {
        if a.len() != x.m {
            return Err(Error::Shape("A basis vector of wrong length".into()));
        }
    }
    for b in b_basis {
        if b.len() != x.n {
            return Err(Error::Shape("B basis vector of wrong length".into()));
        }
    }
    let mut orthogonal = true;
    'outer: for a in a_basis {
        for b in b_basis {
            if !x.pairing(a, b)?.is_one() {
                orthogonal = false;
                break 'outer;
            }
        }
    }
    let int_rank = |rows: &[Vec<i64>]| -> usize {
        if rows.is_empty() {
            return 0;
        }
        let mut grid: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        bareiss_rank(&mut grid)
    };
    let a_rank = int_rank(a_basis);
    let b_rank = int_rank(b_basis);
    // m'/m + n'/n > 1 without fractions
    let rank_inequality = (a_rank * x.n + b_rank * x.m) > x.m * x.n;
    Ok(SubgroupOrthogonalityReport {
        orthogonal,
        a_rank,
        b_rank,
        rank_inequality,
        verdict: orthogonal && rank_inequality,
    })
}

fn expanded_point(z: &[FactoredRat]) -> Vec<Rat> {
    z.iter().map(|f| f.reconstruct()).collect()
}

fn monomial_digit_estimate(z: &[FactoredRat], exp: &[i64]) -> f64 {
    z.iter()
        .zip(exp)
        .map(|(f, &e)| f.digit_estimate() * e.unsigned_abs() as f64)
        .sum()
}

/// Digit-cap guard for the expanded coordinate matrix of enumerated points,
/// estimated from the exponent lattice before anything is expanded.
fn vanishing_digit_guard(points: &[Vec<FactoredRat>], limits: &Limits) -> Result<()> {
    let digits: f64 = points
        .iter()
        .map(|z| z.iter().map(|f| f.digit_estimate()).sum::<f64>())
        .sum();
    if digits > limits.digit_cap {
        return Err(Error::CapExceeded(format!(
            "expanding {} points would hold about {digits:.0} digits, cap is {}",
            points.len(),
            limits.digit_cap
        )));
    }
    Ok(())
}

/// Exact kernel search for a polynomial with support inside `support` that
/// vanishes on all of X(multiplier * n_box). Returns the first canonical
/// kernel vector as a Laurent polynomial, verified against every enumerated
/// point, or None when the evaluation matrix has full column rank.
pub fn vanishing_poly_search(
    x: &MultGroup,
    support: &[Vec<i64>],
    multiplier: u64,
    n_box: u64,
    limits: &Limits,
) -> Result<Option<LaurentPoly>> {
    if support.is_empty() {
        return Err(Error::Precondition("empty candidate support".into()));
    }
    if support.iter().any(|e| e.len() != x.n) {
        return Err(Error::Shape("support exponent of wrong arity".into()));
    }
    let mut support: Vec<Vec<i64>> = support.to_vec();
    support.sort();
    support.dedup();
    let xn = enumerate_xn(x, multiplier * n_box, limits)?;
    // digit cap before any expansion
    let mut digits = 0.0;
    for z in &xn.points {
        for e in &support {
            digits += monomial_digit_estimate(z, e);
        }
    }
    if digits > limits.digit_cap {
        return Err(Error::CapExceeded(format!(
            "evaluation matrix would hold about {digits:.0} digits, cap is {}",
            limits.digit_cap
        )));
    }
    let rows: Vec<Vec<Rat>> = xn
        .points
        .iter()
        .map(|z| {
            support
                .iter()
                .map(|e| {
                    let mut acc = FactoredRat::one();
                    for (f, &k) in z.iter().zip(e) {
                        acc = acc.mul(&f.pow(k));
                    }
                    acc.reconstruct()
                })
                .collect()
        })
        .collect();
    let matrix = RatMatrix::from_rows(rows)?;
    let kernel = matrix.kernel();
    let Some(first) = kernel.first() else {
        return Ok(None);
    };
    let poly = LaurentPoly::from_terms(
        x.n,
        support
            .iter()
            .cloned()
            .zip(first.iter().cloned())
            .filter(|(_, c)| !c.is_zero()),
    )?
    .canonical_integer_form();
    for z in &xn.points {
        if !poly.vanishes_at(&expanded_point(z))? {
            return Err(Error::Internal(
                "kernel polynomial does not vanish on an enumerated point".into(),
            ));
        }
    }
    Ok(Some(poly))
}

/// Verdict for the combinatorial-degree vanishing condition: BKd(P) < N^n
/// and P = 0 on X(nN).
#[derive(Debug, Clone)]
pub struct ConditionMReport {
    pub bkd: i64,
    pub bkd_bound: i64,
    pub degree_ok: bool,
    pub vanishing_ok: bool,
    pub points_checked: usize,
    pub verdict: bool,
}

pub fn check_condition_m(
    x: &MultGroup,
    p: &LaurentPoly,
    n_param: u64,
    limits: &Limits,
) -> Result<ConditionMReport> {
    if p.is_zero() {
        return Err(Error::Precondition("polynomial must be nonzero".into()));
    }
    if p.nvars() != x.n {
        return Err(Error::Shape("polynomial arity must match the group".into()));
    }
    let report = bk_degree(p)?;
    let bound = (n_param as i64).pow(x.n as u32);
    let degree_ok = report.bkd < bound;
    let xn = enumerate_xn(x, x.n as u64 * n_param, limits)?;
    vanishing_digit_guard(&xn.points, limits)?;
    let mut vanishing_ok = true;
    for z in &xn.points {
        if !p.vanishes_at(&expanded_point(z))? {
            vanishing_ok = false;
            break;
        }
    }
    Ok(ConditionMReport {
        bkd: report.bkd,
        bkd_bound: bound,
        degree_ok,
        vanishing_ok,
        points_checked: xn.points.len(),
        verdict: degree_ok && vanishing_ok,
    })
}

/// Verdict for the support-size variant: |S(P)| < N^n and P = 0 on X(2N).
#[derive(Debug, Clone)]
pub struct ConditionMPrimeReport {
    pub support_size: usize,
    pub support_bound: i64,
    pub size_ok: bool,
    pub vanishing_ok: bool,
    pub points_checked: usize,
    pub verdict: bool,
}

pub fn check_condition_m_prime(
    x: &MultGroup,
    p: &LaurentPoly,
    n_param: u64,
    limits: &Limits,
) -> Result<ConditionMPrimeReport> {
    if p.is_zero() {
        return Err(Error::Precondition("polynomial must be nonzero".into()));
    }
    if p.nvars() != x.n {
        return Err(Error::Shape("polynomial arity must match the group".into()));
    }
    let bound = (n_param as i64).pow(x.n as u32);
    let support_size = p.support_size();
    let size_ok = (support_size as i64) < bound;
    let xn = enumerate_xn(x, 2 * n_param, limits)?;
    vanishing_digit_guard(&xn.points, limits)?;
    let mut vanishing_ok = true;
    for z in &xn.points {
        if !p.vanishes_at(&expanded_point(z))? {
            vanishing_ok = false;
            break;
        }
    }
    Ok(ConditionMPrimeReport {
        support_size,
        support_bound: bound,
        size_ok,
        vanishing_ok,
        points_checked: xn.points.len(),
        verdict: size_ok && vanishing_ok,
    })
}

/// Rank-deficiency verdicts for a matrix of logarithms, through either the
/// structural (pencil) route or the p-adic route at finite precision.
#[derive(Debug, Clone)]
pub struct ConditionWReport {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub exact: bool,
    pub confidence: f64,
    /// Some(minimum residual precision) for the p-adic route.
    pub at_precision: Option<i64>,
    /// rank < n (square matrices only).
    pub rank_deficient: Option<bool>,
    /// rank < mn / (m + n).
    pub below_mixed_threshold: bool,
}

pub fn check_condition_w_pencil(p: &MatrixPencil, limits: &Limits) -> Result<ConditionWReport> {
    let exact_possible = p.components().len() <= limits.exact_max_symbols
        && p.rows().max(p.cols()) <= limits.exact_max_dim;
    let mode = if exact_possible {
        RankMode::Exact
    } else {
        RankMode::Randomized {
            seed: 0x5eed,
            trials: 8,
        }
    };
    let sr = structural_rank(p, mode, limits)?;
    let (rows, cols) = (p.rows(), p.cols());
    Ok(ConditionWReport {
        rows,
        cols,
        rank: sr.rank,
        exact: sr.exact,
        confidence: sr.confidence,
        at_precision: None,
        rank_deficient: if rows == cols {
            Some(sr.rank < rows)
        } else {
            None
        },
        below_mixed_threshold: sr.rank * (rows + cols) < rows * cols,
    })
}

pub fn check_condition_w_padic(rows_in: &[Vec<Padic>]) -> Result<ConditionWReport> {
    let report = padic_matrix_rank(rows_in)?;
    Ok(ConditionWReport {
        rows: report.rows,
        cols: report.cols,
        rank: report.rank,
        exact: false,
        confidence: f64::NAN,
        at_precision: report.residual_min_precision,
        rank_deficient: if report.rows == report.cols {
            Some(report.rank < report.rows)
        } else {
            None
        },
        below_mixed_threshold: report.rank * (report.rows + report.cols)
            < report.rows * report.cols,
    })
}

/// The product polynomial built from an orthogonal pair: over the distinct
/// values c of <v, b>_X for v in the box [0, nN)^n, multiply the binomials
/// (t^b - c) and clear the monomial. Its support lies on a segment in
/// direction b and it vanishes on all of X(nN).
#[derive(Debug, Clone)]
pub struct P0Construction {
    pub poly: LaurentPoly,
    pub distinct_values: usize,
    pub box_size: u64,
    /// (nN)^(n-1) * (1 + max |a_i|), the a-priori factor-count bound.
    pub factor_bound: u128,
}

pub fn construct_p0(
    x: &MultGroup,
    a: &[i64],
    b: &[i64],
    n_param: u64,
    limits: &Limits,
) -> Result<P0Construction> {
    if x.m != x.n {
        return Err(Error::Precondition(
            "needs a square generator matrix".into(),
        ));
    }
    if a.iter().all(|&v| v == 0) || b.iter().all(|&v| v == 0) {
        return Err(Error::Precondition(
            "witness vectors must be nonzero".into(),
        ));
    }
    let value = x.pairing(a, b)?;
    if !value.is_one() {
        return Err(Error::Precondition(format!(
            "pairing of the supplied vectors is {}, not 1",
            value.reconstruct()
        )));
    }
    let n = x.n;
    let side = n as u64 * n_param;
    let total = (side as u128)
        .checked_pow(n as u32)
        .ok_or_else(|| Error::CapExceeded("box size overflows".into()))?;
    if total > limits.enumeration_cap as u128 {
        return Err(Error::CapExceeded(format!(
            "box of {total} exponent vectors exceeds the cap {}",
            limits.enumeration_cap
        )));
    }
    let mut values: BTreeSet<FactoredRat> = BTreeSet::new();
    for v in box_points(n, side) {
        values.insert(x.pairing(&v, b)?);
    }
    let digits: f64 = values.iter().map(|c| c.digit_estimate()).sum();
    if digits > limits.digit_cap {
        return Err(Error::CapExceeded(format!(
            "product coefficients would hold about {digits:.0} digits, cap is {}",
            limits.digit_cap
        )));
    }
    let mut poly = LaurentPoly::constant(n, Rat::from_integer(1.into()));
    for c in &values {
        let factor = LaurentPoly::from_terms(
            n,
            vec![
                (b.to_vec(), Rat::from_integer(1.into())),
                (vec![0; n], -c.reconstruct()),
            ],
        )?;
        poly = poly.multiply(&factor)?;
    }
    let poly = poly.clear_monomial()?;
    // structural vanishing check: z^b is one of the roots for every z in X(nN)
    let xn = enumerate_xn(x, side, limits)?;
    for z in &xn.points {
        let mut zb = FactoredRat::one();
        for (f, &k) in z.iter().zip(b) {
            zb = zb.mul(&f.pow(k));
        }
        if !values.contains(&zb) {
            return Err(Error::Internal(
                "a box point evaluates outside the collected root set".into(),
            ));
        }
    }
    let max_a = a.iter().map(|v| v.unsigned_abs()).max().unwrap();
    let factor_bound = (side as u128).pow(n as u32 - 1) * (1 + max_a as u128);
    Ok(P0Construction {
        poly,
        distinct_values: values.len(),
        box_size: side,
        factor_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn group(rows: &[&[i64]]) -> MultGroup {
        let gens: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| rat_int(v)).collect())
            .collect();
        MultGroup::from_rats(&gens).unwrap()
    }

    #[test]
    fn pairing_basics() {
        let x = group(&[&[2, 3], &[5, 7]]);
        assert!(x.pairing(&[0, 0], &[1, 1]).unwrap().is_one());
        assert_eq!(
            x.pairing(&[1, 0], &[0, 1]).unwrap().reconstruct(),
            rat_int(3)
        );
        assert_eq!(
            x.pairing(&[1, 1], &[1, 1]).unwrap().reconstruct(),
            rat_int(210)
        );
    }

    #[test]
    fn pairing_bilinearity() {
        let x = group(&[&[2, -3], &[5, 7]]);
        let a1 = [1i64, -2];
        let a2 = [0i64, 3];
        let b = [2i64, 1];
        let sum: Vec<i64> = a1.iter().zip(&a2).map(|(p, q)| p + q).collect();
        let lhs = x.pairing(&sum, &b).unwrap();
        let rhs = x
            .pairing(&a1, &b)
            .unwrap()
            .mul(&x.pairing(&a2, &b).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn enumerate_small_boxes() {
        let lim = Limits::default();
        let x = group(&[&[2]]);
        let xn = enumerate_xn(&x, 3, &lim).unwrap();
        let vals: Vec<Rat> = xn.points.iter().map(|z| z[0].reconstruct()).collect();
        assert_eq!(vals, vec![rat_int(1), rat_int(2), rat_int(4)]);
        assert_eq!(xn.collisions, 0);

        let x2 = group(&[&[2], &[4]]);
        let xn2 = enumerate_xn(&x2, 2, &lim).unwrap();
        assert_eq!(xn2.points.len(), 4);
        assert_eq!(xn2.collisions, 0);

        let x3 = group(&[&[2], &[2]]);
        let xn3 = enumerate_xn(&x3, 2, &lim).unwrap();
        assert_eq!(xn3.points.len(), 3);
        assert_eq!(xn3.collisions, 1);
    }

    #[test]
    fn trivial_box_is_identity() {
        let lim = Limits::default();
        let x = group(&[&[2, 3], &[5, 7]]);
        let xn = enumerate_xn(&x, 1, &lim).unwrap();
        assert_eq!(xn.points.len(), 1);
        assert!(xn.points[0].iter().all(|f| f.is_one()));
    }

    #[test]
    fn caps_error_loudly() {
        let tight = Limits {
            enumeration_cap: 8,
            ..Limits::default()
        };
        let x = group(&[&[2, 3], &[5, 7]]);
        assert!(matches!(
            enumerate_xn(&x, 4, &tight),
            Err(Error::CapExceeded(_))
        ));
        let few_digits = Limits {
            digit_cap: 10.0,
            ..Limits::default()
        };
        let p = LaurentPoly::from_terms(
            2,
            vec![(vec![40, 0], rat_int(1)), (vec![0, 40], rat_int(-1))],
        )
        .unwrap();
        assert!(matches!(
            check_condition_m(&x, &p, 2, &few_digits),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn condition_o_found_for_dependent_gens() {
        // every entry 2: pairing(a, b) = 2^((sum a)(sum b))
        let x = group(&[&[2, 2], &[2, 2]]);
        let rep = search_condition_o(&x, 2).unwrap();
        let (a, b) = rep.witness.expect("witness exists");
        assert!(x.pairing(&a, &b).unwrap().is_one());
        // first canonical a with singular prime matrix is (1, 0); for it the
        // kernel needs b1 + b2 = 0, first such canonical b is (1, -1)
        assert_eq!(a, vec![1, 0]);
        assert_eq!(b, vec![1, -1]);
    }

    #[test]
    fn condition_o_none_for_independent_primes() {
        let x = group(&[&[2, 3], &[5, 7]]);
        let rep = search_condition_o(&x, 5).unwrap();
        assert!(rep.witness.is_none());
    }

    #[test]
    fn condition_o_entry_one_shortcut() {
        // a literal 1 in an isolated slot pairs to 1 against that axis
        let x = group(&[&[1, 2], &[3, 5]]);
        let rep = search_condition_o(&x, 2).unwrap();
        let (a, b) = rep.witness.expect("witness exists");
        assert!(x.pairing(&a, &b).unwrap().is_one());
    }

    #[test]
    fn condition_o_sign_axis_needs_even_multiple() {
        // single generator -1: pairing(a, b) = (-1)^(a b); no witness at
        // height 1, the first is (1, 2)
        let x = group(&[&[-1]]);
        assert!(search_condition_o(&x, 1).unwrap().witness.is_none());
        let rep = search_condition_o(&x, 2).unwrap();
        let (a, b) = rep.witness.expect("witness exists");
        assert_eq!((a, b), (vec![1], vec![2]));
    }

    #[test]
    fn condition_big_o_cases() {
        let x = group(&[&[1, 1], &[1, 1]]);
        // trivial group: Z^2 orthogonal to Z^2
        let full = vec![vec![1, 0], vec![0, 1]];
        let rep = verify_condition_big_o(&x, &full, &full).unwrap();
        assert!(rep.verdict);
        // empty bases fail the rank inequality
        let rep0 = verify_condition_big_o(&x, &[], &[]).unwrap();
        assert!(!rep0.verdict);
        assert!(rep0.orthogonal);
        // independent primes: orthogonality fails for full bases
        let y = group(&[&[2, 3], &[5, 7]]);
        let rep2 = verify_condition_big_o(&y, &full, &full).unwrap();
        assert!(!rep2.orthogonal);
    }

    #[test]
    fn vanishing_search_diagonal_group() {
        let lim = Limits::default();
        let x = group(&[&[2, 2], &[3, 3]]);
        let support = vec![vec![1, 0], vec![0, 1]];
        let p = vanishing_poly_search(&x, &support, 2, 1, &lim)
            .unwrap()
            .expect("t1 - t2 vanishes on the diagonal");
        // canonical form puts +1 on the lex-smallest exponent: t2 - t1
        let t2_minus_t1 =
            LaurentPoly::from_terms(2, vec![(vec![1, 0], rat_int(-1)), (vec![0, 1], rat_int(1))])
                .unwrap();
        assert_eq!(p, t2_minus_t1);
    }

    #[test]
    fn vanishing_search_wide_support_always_finds() {
        // more monomials than points forces a kernel vector
        let lim = Limits::default();
        let x = group(&[&[2, 3], &[5, 7]]);
        let support: Vec<Vec<i64>> = (-2..3)
            .flat_map(|u| (-2..3).map(move |v| vec![u, v]))
            .collect();
        // |S| = 25 > |X(2)| = 4
        let p = vanishing_poly_search(&x, &support, 2, 1, &lim)
            .unwrap()
            .expect("wide support must admit a vanishing polynomial");
        assert!(!p.is_zero());
    }

    #[test]
    fn vanishing_search_generic_none() {
        let lim = Limits::default();
        let x = group(&[&[2, 3], &[5, 7]]);
        let support: Vec<Vec<i64>> = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
        // X(4) has 16 points, 4 monomials: full column rank expected
        assert!(vanishing_poly_search(&x, &support, 2, 2, &lim)
            .unwrap()
            .is_none());
    }

    #[test]
    fn condition_m_and_m_prime() {
        let lim = Limits::default();
        let x = group(&[&[2, 2], &[3, 3]]);
        let p =
            LaurentPoly::from_terms(2, vec![(vec![1, 0], rat_int(1)), (vec![0, 1], rat_int(-1))])
                .unwrap();
        let m = check_condition_m(&x, &p, 2, &lim).unwrap();
        assert!(m.verdict, "{m:?}");
        let mp = check_condition_m_prime(&x, &p, 2, &lim).unwrap();
        assert!(mp.verdict, "{mp:?}");
        // constant 1 never vanishes
        let one = LaurentPoly::constant(2, rat(1, 1));
        assert!(!check_condition_m(&x, &one, 2, &lim).unwrap().vanishing_ok);
        // big support fails the size clause regardless of vanishing
        let wide = LaurentPoly::from_terms(2, (0..4).map(|k| (vec![k, 0], rat_int(1)))).unwrap();
        let mp2 = check_condition_m_prime(&x, &wide, 1, &lim).unwrap();
        assert!(!mp2.size_ok);
        assert!(!mp2.verdict);
    }

    #[test]
    fn condition_w_routes() {
        let lim = Limits::default();
        let q = vec![
            vec![
                factor_rational(&rat_int(4)).unwrap(),
                factor_rational(&rat_int(8)).unwrap(),
            ],
            vec![
                factor_rational(&rat_int(16)).unwrap(),
                factor_rational(&rat_int(64)).unwrap(),
            ],
        ];
        let p = crate::pencil::log_pencil(&q).unwrap();
        let rep = check_condition_w_pencil(&p, &lim).unwrap();
        assert_eq!(rep.rank, 1);
        assert_eq!(rep.rank_deficient, Some(true));
        // independent primes on the diagonal: full rank, condition fails
        let q2 = vec![
            vec![
                factor_rational(&rat_int(2)).unwrap(),
                factor_rational(&rat_int(3)).unwrap(),
            ],
            vec![
                factor_rational(&rat_int(3)).unwrap(),
                factor_rational(&rat_int(2)).unwrap(),
            ],
        ];
        let p2 = crate::pencil::log_pencil(&q2).unwrap();
        let rep2 = check_condition_w_pencil(&p2, &lim).unwrap();
        assert_eq!(rep2.rank, 2);
        assert_eq!(rep2.rank_deficient, Some(false));
    }

    #[test]
    fn p0_diagonal_group() {
        let lim = Limits::default();
        let x = group(&[&[2, 2], &[3, 3]]);
        let a = vec![1i64, -1];
        let b = vec![1i64, -1];
        let built = construct_p0(&x, &a, &b, 2, &lim).unwrap();
        assert_eq!(built.distinct_values, 1);
        assert!(built.distinct_values as u128 <= built.factor_bound);
        // single factor t1 t2^-1 - 1, cleared to t1 - t2
        let want =
            LaurentPoly::from_terms(2, vec![(vec![1, 0], rat_int(1)), (vec![0, 1], rat_int(-1))])
                .unwrap();
        assert_eq!(built.poly, want);
        // it passes the vanishing condition and has segment degree data
        let m = check_condition_m(&x, &built.poly, 2, &lim).unwrap();
        assert!(m.verdict);
        let bk = bk_degree(&built.poly).unwrap();
        assert_eq!(bk.entries[1..], vec![0]);
        assert_eq!(bk.entries[0], built.poly.total_degree());
    }

    #[test]
    fn p0_rejects_bad_pairing() {
        let lim = Limits::default();
        let x = group(&[&[2, 3], &[5, 7]]);
        let err = construct_p0(&x, &[1, 0], &[1, 0], 2, &lim);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }
}
