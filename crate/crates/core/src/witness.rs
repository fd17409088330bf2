//! Witness pairs for singular families: nonzero rational vectors w, v with
//! w^T A v = 0 for every A in a family.
//!
//! For a basis of a subspace in which every element is singular, the
//! recursive construction normalizes a maximal-rank basis element to
//! diag(1..1, 0..0), recurses on the lower-right blocks of the transformed
//! family, and pulls the pair back through the change of basis. For pencils
//! there is a bounded brute-force search over integer vectors.

use num_traits::Zero;

use crate::enumerate::CanonicalVectors;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{diagonal_normal_form, RatMatrix};
use crate::pencil::{structural_rank, MatrixPencil, RankMode};
use crate::rat::{rat_int, Rat};

/// A left/right pair of nonzero rational vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessPair {
    pub w: Vec<Rat>,
    pub v: Vec<Rat>,
}

impl WitnessPair {
    /// Exact post-hoc check: w^T A v = 0 for every A.
    pub fn annihilates(&self, family: &[RatMatrix]) -> bool {
        family.iter().all(|a| {
            let av = match a.mul_vec(&self.v) {
                Ok(av) => av,
                Err(_) => return false,
            };
            self.w
                .iter()
                .zip(&av)
                .map(|(x, y)| x * y)
                .fold(Rat::zero(), |acc, t| acc + t)
                .is_zero()
        })
    }

    pub fn is_nonzero(&self) -> bool {
        self.w.iter().any(|x| !x.is_zero()) && self.v.iter().any(|x| !x.is_zero())
    }
}

/// Result of the all-singular check.
#[derive(Debug, Clone)]
pub struct SingularityCheck {
    pub all_singular: bool,
    pub structural_rank: usize,
    pub dimension: usize,
    pub exact: bool,
    /// Meaningful only when `exact` is false.
    pub confidence: f64,
}

fn validate_family(basis: &[RatMatrix]) -> Result<usize> {
    if basis.is_empty() {
        return Err(Error::Shape("empty basis".into()));
    }
    let n = basis[0].rows();
    for m in basis {
        if !m.is_square() || m.rows() != n {
            return Err(Error::Shape(
                "basis must consist of square matrices of one shape".into(),
            ));
        }
    }
    Ok(n)
}

/// True iff det(sum_i t_i A_i) is the zero polynomial, i.e. every element of
/// the span is singular. Uses exact structural rank when the caps allow,
/// otherwise seeded randomized rank with reported confidence.
pub fn verify_all_singular(basis: &[RatMatrix], limits: &Limits) -> Result<SingularityCheck> {
    let n = validate_family(basis)?;
    let pencil = MatrixPencil::from_basis(basis)?;
    let exact_possible = basis.len() <= limits.exact_max_symbols && n <= limits.exact_max_dim;
    let mode = if exact_possible {
        RankMode::Exact
    } else {
        RankMode::Randomized {
            seed: 0x5eed,
            trials: 8,
        }
    };
    let sr = structural_rank(&pencil, mode, limits)?;
    Ok(SingularityCheck {
        all_singular: sr.rank < n,
        structural_rank: sr.rank,
        dimension: n,
        exact: sr.exact,
        confidence: sr.confidence,
    })
}

/// Finds a pair (w, v) with w^T A v = 0 exactly for every basis element of a
/// family in which every element of the span is singular.
///
/// Errors: a nonsingular element (precondition), or an all-zero basis
/// (degenerate: any pair would do, which we refuse to invent silently).
pub fn singular_subspace_witness(basis: &[RatMatrix], limits: &Limits) -> Result<WitnessPair> {
    let _n = validate_family(basis)?;
    if basis.iter().all(|m| m.is_zero()) {
        return Err(Error::Degenerate(
            "all-zero basis: every pair is a witness".into(),
        ));
    }
    let check = verify_all_singular(basis, limits)?;
    if !check.all_singular {
        return Err(Error::Precondition(format!(
            "family contains a nonsingular element (structural rank {} of {})",
            check.structural_rank, check.dimension
        )));
    }
    let pair = recurse(basis.to_vec())?;
    if !pair.is_nonzero() || !pair.annihilates(basis) {
        return Err(Error::Internal(
            "constructed witness failed exact re-verification".into(),
        ));
    }
    Ok(pair)
}

fn recurse(family: Vec<RatMatrix>) -> Result<WitnessPair> {
    let n = family[0].rows();
    if family.iter().all(|m| m.is_zero()) {
        // trivial family: any pair annihilates it
        let mut e1 = vec![Rat::zero(); n];
        e1[0] = rat_int(1);
        return Ok(WitnessPair {
            w: e1.clone(),
            v: e1,
        });
    }
    // fixed element: first basis member of maximal rank
    let ranks: Vec<usize> = family.iter().map(|m| m.rank()).collect();
    let best = ranks.iter().copied().max().unwrap();
    if best == n {
        return Err(Error::Precondition(
            "family contains a nonsingular element".into(),
        ));
    }
    let a_idx = ranks.iter().position(|&r| r == best).unwrap();
    let (p, q, r) = diagonal_normal_form(&family[a_idx]);
    debug_assert!(r >= 1 && r < n);

    // lower-right (n-r) x (n-r) blocks of the transformed family
    let blocks: Result<Vec<RatMatrix>> = family
        .iter()
        .map(|b| {
            let t = p.matmul(b)?.matmul(&q)?;
            let mut sub = RatMatrix::zeros(n - r, n - r);
            for i in r..n {
                for j in r..n {
                    *sub.at_mut(i - r, j - r) = t.at(i, j).clone();
                }
            }
            Ok(sub)
        })
        .collect();
    let sub_pair = recurse(blocks?)?;

    // pad with r zeros, then pull back: w = P^T w~, v = Q v~
    let mut w_pad = vec![Rat::zero(); n];
    let mut v_pad = vec![Rat::zero(); n];
    w_pad[r..n].clone_from_slice(&sub_pair.w);
    v_pad[r..n].clone_from_slice(&sub_pair.v);
    let w = p.transpose().mul_vec(&w_pad)?;
    let v = q.mul_vec(&v_pad)?;
    Ok(WitnessPair { w, v })
}

/// Bounded search for an integer pair with w^T M_i v = 0 for every pencil
/// component. Both vectors range over primitive integer vectors of max-norm
/// at most `height` in the canonical order; the first pair found is
/// returned. For each fixed w the condition on v is linear, so w is skipped
/// whenever the stacked matrix [w^T M_1; ...; w^T M_k] has full column rank.
pub fn brute_force_pencil_witness(
    pencil: &MatrixPencil,
    height: i64,
) -> Result<Option<WitnessPair>> {
    if !pencil.is_square() {
        return Err(Error::Shape(
            "pencil witness search needs a square pencil".into(),
        ));
    }
    if height < 1 {
        return Err(Error::Precondition("height must be at least 1".into()));
    }
    let n = pencil.rows();
    let family: Vec<&RatMatrix> = pencil.components().iter().map(|(_, m)| m).collect();
    for w in CanonicalVectors::new(n, height, true) {
        let w_rat: Vec<Rat> = w.iter().map(|&x| rat_int(x)).collect();
        if !family.is_empty() {
            let stacked = RatMatrix::from_rows(
                family
                    .iter()
                    .map(|m| m.transpose().mul_vec(&w_rat))
                    .collect::<Result<Vec<_>>>()?,
            )?;
            if stacked.rank() == n {
                continue;
            }
            for v in CanonicalVectors::new(n, height, true) {
                let v_rat: Vec<Rat> = v.iter().map(|&x| rat_int(x)).collect();
                let ok = stacked.mul_vec(&v_rat)?.iter().all(|x| x.is_zero());
                if ok {
                    return Ok(Some(WitnessPair { w: w_rat, v: v_rat }));
                }
            }
        } else {
            // zero pencil: first canonical pair works
            let v_rat: Vec<Rat> = CanonicalVectors::new(n, height, true)
                .next()
                .unwrap()
                .iter()
                .map(|&x| rat_int(x))
                .collect();
            return Ok(Some(WitnessPair { w: w_rat, v: v_rat }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::factor_rational;
    use crate::pencil::log_pencil;
    use crate::rat::rat_int;

    fn e(n: usize, i: usize, j: usize, s: i64) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        *m.at_mut(i, j) = rat_int(s);
        m
    }

    fn skew_basis() -> Vec<RatMatrix> {
        vec![
            e(3, 0, 1, 1).add(&e(3, 1, 0, -1)).unwrap(),
            e(3, 0, 2, 1).add(&e(3, 2, 0, -1)).unwrap(),
            e(3, 1, 2, 1).add(&e(3, 2, 1, -1)).unwrap(),
        ]
    }

    #[test]
    fn all_singular_checks() {
        let lim = Limits::default();
        let single = vec![e(2, 0, 0, 1)];
        assert!(verify_all_singular(&single, &lim).unwrap().all_singular);
        let id = vec![RatMatrix::identity(2)];
        assert!(!verify_all_singular(&id, &lim).unwrap().all_singular);
        assert!(
            verify_all_singular(&skew_basis(), &lim)
                .unwrap()
                .all_singular
        );
    }

    #[test]
    fn witness_for_rank_one_projector() {
        let lim = Limits::default();
        let basis = vec![e(2, 0, 0, 1)]; // diag(1, 0)
        let pair = singular_subspace_witness(&basis, &lim).unwrap();
        assert_eq!(pair.w, vec![rat_int(0), rat_int(1)]);
        assert_eq!(pair.v, vec![rat_int(0), rat_int(1)]);
    }

    #[test]
    fn witness_for_skew_family_is_parallel_pair() {
        let lim = Limits::default();
        let basis = skew_basis();
        let pair = singular_subspace_witness(&basis, &lim).unwrap();
        assert!(pair.annihilates(&basis));
        // w^T A v = 0 for all elementary skews in dim 3 iff w and v are parallel
        let cross: Vec<Rat> = vec![
            &pair.w[1] * &pair.v[2] - &pair.w[2] * &pair.v[1],
            &pair.w[2] * &pair.v[0] - &pair.w[0] * &pair.v[2],
            &pair.w[0] * &pair.v[1] - &pair.w[1] * &pair.v[0],
        ];
        assert!(cross.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn witness_for_upper_pair_family() {
        let lim = Limits::default();
        let basis = vec![e(2, 0, 0, 1), e(2, 0, 1, 1)]; // {E11, E12}
        let pair = singular_subspace_witness(&basis, &lim).unwrap();
        assert!(pair.annihilates(&basis));
    }

    #[test]
    fn nonsingular_family_rejected() {
        let lim = Limits::default();
        let err = singular_subspace_witness(&[RatMatrix::identity(3)], &lim);
        assert!(matches!(err, Err(Error::Precondition(_))));
        // each element singular but the span is not
        let err2 = singular_subspace_witness(&[e(2, 0, 0, 1), e(2, 1, 1, 1)], &lim);
        assert!(matches!(err2, Err(Error::Precondition(_))));
    }

    #[test]
    fn all_zero_basis_is_degenerate() {
        let lim = Limits::default();
        let err = singular_subspace_witness(&[RatMatrix::zeros(2, 2)], &lim);
        assert!(matches!(err, Err(Error::Degenerate(_))));
    }

    #[test]
    fn pencil_witness_log_example() {
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
        let p = log_pencil(&q).unwrap();
        let pair = brute_force_pencil_witness(&p, 3).unwrap().unwrap();
        assert_eq!(pair.w, vec![rat_int(1), rat_int(0)]);
        assert_eq!(pair.v, vec![rat_int(3), rat_int(-2)]);
    }

    #[test]
    fn pencil_witness_identity() {
        let p = MatrixPencil::from_basis(&[RatMatrix::identity(2)]).unwrap();
        let pair = brute_force_pencil_witness(&p, 2).unwrap().unwrap();
        assert_eq!(pair.w, vec![rat_int(1), rat_int(0)]);
        assert_eq!(pair.v, vec![rat_int(0), rat_int(1)]);
    }

    #[test]
    fn pencil_witness_zero_pencil() {
        let p = MatrixPencil::new(2, 2, Vec::new()).unwrap();
        let pair = brute_force_pencil_witness(&p, 1).unwrap().unwrap();
        assert_eq!(pair.w, vec![rat_int(1), rat_int(0)]);
        assert_eq!(pair.v, vec![rat_int(1), rat_int(0)]);
    }

    #[test]
    fn pencil_witness_none_when_independent() {
        // pencil forcing w^T v = 0 and w^T diag(1,-1) v = 0 and w^T offdiag...
        // use three generic symmetric components so no pair of height 1 exists
        let m1 = RatMatrix::from_i64_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let m2 = RatMatrix::from_i64_rows(&[vec![1, 0], vec![0, -1]]).unwrap();
        let m3 = RatMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let p = MatrixPencil::from_basis(&[m1, m2, m3]).unwrap();
        assert!(brute_force_pencil_witness(&p, 3).unwrap().is_none());
    }
}
