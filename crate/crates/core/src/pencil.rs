//! Matrix pencils: formal sums sum_i M_i x_i of rational matrices over
//! declared independent symbols, their structural rank over the rational
//! function field, and pencils of prime exponents read off from matrices of
//! positive rationals.

use num_bigint::BigInt;

use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::factor::FactoredRat;
use crate::limits::Limits;
use crate::linalg::{bareiss_rank, RatMatrix};
use crate::mpoly::IntMultiPoly;
use crate::rat::{random_unit_fraction, Rat};

/// Formal sum of rational matrices over distinct symbols. All component
/// matrices share the pencil shape; an empty component list is the zero
/// pencil of that shape.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixPencil {
    rows: usize,
    cols: usize,
    components: Vec<(String, RatMatrix)>,
}

impl MatrixPencil {
    pub fn new(rows: usize, cols: usize, components: Vec<(String, RatMatrix)>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("pencil dimensions must be positive".into()));
        }
        for (sym, m) in &components {
            if m.rows() != rows || m.cols() != cols {
                return Err(Error::Shape(format!(
                    "component {sym} is {}x{}, pencil is {rows}x{cols}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let mut names: Vec<&str> = components.iter().map(|(s, _)| s.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        if names.len() != components.len() {
            return Err(Error::Shape("pencil symbols must be distinct".into()));
        }
        Ok(MatrixPencil {
            rows,
            cols,
            components,
        })
    }

    pub fn from_basis(basis: &[RatMatrix]) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::Shape("empty matrix list".into()));
        }
        let rows = basis[0].rows();
        let cols = basis[0].cols();
        MatrixPencil::new(
            rows,
            cols,
            basis
                .iter()
                .enumerate()
                .map(|(i, m)| (format!("t{i}"), m.clone()))
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn components(&self) -> &[(String, RatMatrix)] {
        &self.components
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Substitutes rational values for the symbols.
    pub fn evaluate(&self, values: &[Rat]) -> Result<RatMatrix> {
        if values.len() != self.components.len() {
            return Err(Error::Shape("one value per symbol required".into()));
        }
        let mut acc = RatMatrix::zeros(self.rows, self.cols);
        for ((_, m), v) in self.components.iter().zip(values) {
            acc = acc.add(&m.scale(v))?;
        }
        Ok(acc)
    }

    /// Entries as integer multivariate polynomials, denominators cleared row
    /// by row (rank is unchanged).
    fn polynomial_grid(&self) -> Vec<Vec<IntMultiPoly>> {
        let k = self.components.len();
        (0..self.rows)
            .map(|r| {
                let lcm = self.components.iter().fold(BigInt::one(), |acc, (_, m)| {
                    m.row(r)
                        .iter()
                        .fold(acc, |a, e| num_integer::Integer::lcm(&a, e.denom()))
                });
                (0..self.cols)
                    .map(|c| {
                        let mut p = IntMultiPoly::zero(k);
                        for (i, (_, m)) in self.components.iter().enumerate() {
                            let e = m.at(r, c);
                            let coeff = e.numer() * (&lcm / e.denom());
                            let mut exp = vec![0u32; k];
                            exp[i] = 1;
                            p.add_term(exp, coeff);
                        }
                        p
                    })
                    .collect()
            })
            .collect()
    }
}

/// How to compute a structural rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMode {
    /// Fraction-free elimination with multivariate polynomial entries.
    Exact,
    /// Maximum rank over seeded random rational evaluations.
    Randomized { seed: u64, trials: u32 },
}

/// Structural rank result. In randomized mode the rank is a lower bound that
/// equals the exact value with the reported confidence.
#[derive(Debug, Clone, PartialEq)]
pub struct StructuralRank {
    pub rank: usize,
    pub exact: bool,
    pub trials: u32,
    /// Schwartz-Zippel failure bound for a single trial (deg / range).
    pub per_trial_error: f64,
    /// 1 - per_trial_error ^ trials.
    pub confidence: f64,
}

/// Numerators and denominators of randomized evaluation points are drawn
/// uniformly from [1, RANDOM_RANGE].
pub const RANDOM_RANGE: u64 = 1_000_000;

/// Rank of sum_i M_i x_i over Q(x_1, ..., x_k).
///
/// Exact mode runs fraction-free elimination on polynomial entries and is
/// capped by `limits` (symbol count and matrix size) because minors grow
/// combinatorially; randomized mode evaluates the symbols at uniform random
/// rationals and reports the Schwartz-Zippel confidence.
pub fn structural_rank(
    pencil: &MatrixPencil,
    mode: RankMode,
    limits: &Limits,
) -> Result<StructuralRank> {
    if pencil.components.is_empty() {
        // zero pencil of known shape
        return Ok(StructuralRank {
            rank: 0,
            exact: true,
            trials: 0,
            per_trial_error: 0.0,
            confidence: 1.0,
        });
    }
    match mode {
        RankMode::Exact => {
            let k = pencil.components.len();
            let dim = pencil.rows.max(pencil.cols);
            if k > limits.exact_max_symbols || dim > limits.exact_max_dim {
                return Err(Error::CapExceeded(format!(
                    "exact structural rank capped at {} symbols and {}x{} shape \
                     (got {k} symbols, {}x{}); use randomized mode or raise the caps",
                    limits.exact_max_symbols,
                    limits.exact_max_dim,
                    limits.exact_max_dim,
                    pencil.rows,
                    pencil.cols
                )));
            }
            let mut grid = pencil.polynomial_grid();
            Ok(StructuralRank {
                rank: bareiss_rank(&mut grid),
                exact: true,
                trials: 0,
                per_trial_error: 0.0,
                confidence: 1.0,
            })
        }
        RankMode::Randomized { seed, trials } => {
            if trials == 0 {
                return Err(Error::Precondition(
                    "randomized mode needs trials >= 1".into(),
                ));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let k = pencil.components.len();
            let mut best = 0;
            for _ in 0..trials {
                let values: Vec<Rat> = (0..k)
                    .map(|_| random_unit_fraction(&mut rng, RANDOM_RANGE))
                    .collect();
                let rank = pencil.evaluate(&values)?.rank();
                best = best.max(rank);
            }
            let deg = pencil.rows.min(pencil.cols) as f64;
            let per_trial_error = deg / RANDOM_RANGE as f64;
            Ok(StructuralRank {
                rank: best,
                exact: false,
                trials,
                per_trial_error,
                confidence: 1.0 - per_trial_error.powi(trials as i32),
            })
        }
    }
}

/// Reads a matrix of positive rationals as a pencil over the symbols
/// "log p", one component per prime appearing, with the exponent of p in
/// entry (u, v) as the component entry. Logarithms of distinct primes are
/// linearly independent over the rationals, so the structural rank of the
/// result models the rank of the real logarithm matrix.
pub fn log_pencil(entries: &[Vec<FactoredRat>]) -> Result<MatrixPencil> {
    if entries.is_empty() || entries[0].is_empty() {
        return Err(Error::Shape("log pencil needs a nonempty matrix".into()));
    }
    let rows = entries.len();
    let cols = entries[0].len();
    if entries.iter().any(|r| r.len() != cols) {
        return Err(Error::Shape("ragged rows".into()));
    }
    let mut primes = std::collections::BTreeSet::new();
    for row in entries {
        for e in row {
            if e.is_negative() {
                return Err(Error::Domain(
                    "log pencil requires positive rational entries".into(),
                ));
            }
            primes.extend(e.primes().cloned());
        }
    }
    let mut components = Vec::new();
    for p in primes {
        let m = RatMatrix::from_rows(
            entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| Rat::from_integer(BigInt::from(e.exponent_of(&p))))
                        .collect()
                })
                .collect(),
        )?;
        components.push((format!("log{p}"), m));
    }
    MatrixPencil::new(rows, cols, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::factor_rational;
    use crate::rat::{rat, rat_int};

    fn skew3() -> MatrixPencil {
        let e = |i: usize, j: usize, s: i64| {
            let mut m = RatMatrix::zeros(3, 3);
            *m.at_mut(i, j) = rat_int(s);
            m
        };
        let b1 = e(0, 1, 1).add(&e(1, 0, -1)).unwrap();
        let b2 = e(0, 2, 1).add(&e(2, 0, -1)).unwrap();
        let b3 = e(1, 2, 1).add(&e(2, 1, -1)).unwrap();
        MatrixPencil::from_basis(&[b1, b2, b3]).unwrap()
    }

    #[test]
    fn identity_pencil_full_rank() {
        let p = MatrixPencil::from_basis(&[RatMatrix::identity(4)]).unwrap();
        let r = structural_rank(&p, RankMode::Exact, &Limits::default()).unwrap();
        assert_eq!(r.rank, 4);
    }

    #[test]
    fn skew_pencil_rank_two() {
        let p = skew3();
        let exact = structural_rank(&p, RankMode::Exact, &Limits::default()).unwrap();
        assert_eq!(exact.rank, 2);
        let rand = structural_rank(
            &p,
            RankMode::Randomized {
                seed: 42,
                trials: 4,
            },
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(rand.rank, 2);
        assert!(rand.confidence > 0.999_999);
    }

    #[test]
    fn single_singular_component() {
        let m = RatMatrix::from_rows(vec![
            vec![rat_int(2), rat_int(3)],
            vec![rat_int(4), rat_int(6)],
        ])
        .unwrap();
        let p = MatrixPencil::new(2, 2, vec![("x1".into(), m)]).unwrap();
        let r = structural_rank(&p, RankMode::Exact, &Limits::default()).unwrap();
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn log_pencil_exponents() {
        let q: Vec<Vec<FactoredRat>> = vec![
            vec![
                factor_rational(&rat_int(4)).unwrap(),
                factor_rational(&rat_int(8)).unwrap(),
            ],
            vec![
                factor_rational(&rat_int(16)).unwrap(),
                factor_rational(&rat_int(64)).unwrap(),
            ],
        ];
        let p = log_pencil(&q).unwrap();
        assert_eq!(p.components().len(), 1);
        assert_eq!(p.components()[0].0, "log2");
        let m = &p.components()[0].1;
        assert_eq!(*m.at(0, 0), rat_int(2));
        assert_eq!(*m.at(0, 1), rat_int(3));
        assert_eq!(*m.at(1, 0), rat_int(4));
        assert_eq!(*m.at(1, 1), rat_int(6));
        let r = structural_rank(&p, RankMode::Exact, &Limits::default()).unwrap();
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn log_pencil_of_ones_is_zero_pencil() {
        let q = vec![vec![factor_rational(&rat_int(1)).unwrap()]];
        let p = log_pencil(&q).unwrap();
        assert!(p.components().is_empty());
        let r = structural_rank(&p, RankMode::Exact, &Limits::default()).unwrap();
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn log_pencil_two_primes() {
        let q: Vec<Vec<FactoredRat>> = vec![
            vec![
                factor_rational(&rat_int(2)).unwrap(),
                factor_rational(&rat_int(3)).unwrap(),
            ],
            vec![
                factor_rational(&rat_int(3)).unwrap(),
                factor_rational(&rat_int(2)).unwrap(),
            ],
        ];
        let p = log_pencil(&q).unwrap();
        assert_eq!(p.components().len(), 2);
        let m2 = &p.components()[0].1;
        assert_eq!(*m2.at(0, 0), rat_int(1));
        assert_eq!(*m2.at(1, 1), rat_int(1));
        assert_eq!(*m2.at(0, 1), rat_int(0));
        let m3 = &p.components()[1].1;
        assert_eq!(*m3.at(0, 1), rat_int(1));
        assert_eq!(*m3.at(1, 0), rat_int(1));
    }

    #[test]
    fn rejects_negative_entries() {
        let q = vec![vec![factor_rational(&rat(-2, 1)).unwrap()]];
        assert!(log_pencil(&q).is_err());
    }

    #[test]
    fn exact_caps_enforced() {
        let p = MatrixPencil::from_basis(&[RatMatrix::identity(9)]).unwrap();
        let err = structural_rank(&p, RankMode::Exact, &Limits::default());
        assert!(matches!(err, Err(Error::CapExceeded(_))));
    }
}
