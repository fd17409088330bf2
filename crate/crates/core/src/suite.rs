//! Seeded batch property runs covering every module's invariants, plus the
//! shared random-instance generators. The CLI `suite` verb drives this; the
//! acceptance tests reuse the generators with their own counts.

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::auxpoly;
use crate::bernstein;
use crate::enumerate::{box_points, CanonicalVectors};
use crate::error::Result;
use crate::factor::{factor_rational, FactoredRat};
use crate::groups::{self, ConstraintKind};
use crate::laurent::LaurentPoly;
use crate::limits::Limits;
use crate::linalg::RatMatrix;
use crate::multgroup::{
    check_condition_m, construct_p0, enumerate_xn, search_condition_o, vanishing_poly_search,
    MultGroup,
};
use crate::padic::series::{
    dk_valuation_check, exp_sum_series, roots_in_unit_disc, schwarz_report,
    verify_padic_root_bound, PadicSeries,
};
use crate::padic::{iwasawa_log, padic_exp, Padic};
use crate::pencil::{log_pencil, structural_rank, MatrixPencil, RankMode};
use crate::polytope::{bk_degree, bk_number, mixed_volume, LatticePolytope};
use crate::rat::{random_rat, rat_int, Rat};
use crate::witness::singular_subspace_witness;

#[derive(Debug, Clone, serde::Serialize)]
pub struct SuiteCheck {
    pub module: String,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub checks: Vec<SuiteCheck>,
    pub all_pass: bool,
}

// ---------------------------------------------------------------------------
// shared generators
// ---------------------------------------------------------------------------

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> RatMatrix {
    loop {
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|_| (0..n).map(|_| rat_int(rng.gen_range(-3..=3))).collect())
            .collect();
        let m = RatMatrix::from_rows(rows).unwrap();
        if !m.det().unwrap().is_zero() {
            return m;
        }
    }
}

/// A basis of a subspace of singular matrices: random matrices with the last
/// column zero, conjugated by random invertible integer matrices on both
/// sides. Every element of the span is singular.
pub fn random_singular_family(rng: &mut ChaCha8Rng, n: usize, dim: usize) -> Vec<RatMatrix> {
    let p = random_invertible(rng, n);
    let q = random_invertible(rng, n);
    let mut out = Vec::with_capacity(dim);
    for _ in 0..dim {
        let mut a = RatMatrix::zeros(n, n);
        let mut nonzero = false;
        for r in 0..n {
            for c in 0..n - 1 {
                let v = rng.gen_range(-4i64..=4);
                nonzero |= v != 0;
                *a.at_mut(r, c) = rat_int(v);
            }
        }
        if !nonzero {
            *a.at_mut(0, 0) = rat_int(1);
        }
        out.push(p.matmul(&a).unwrap().matmul(&q).unwrap());
    }
    out
}

/// A bivariate system with small supports, both variables present in each
/// polynomial, nonzero coefficients in [-9, 9], rejecting draws whose
/// elimination degenerates (non-finite zero sets).
pub fn random_sparse_system(rng: &mut ChaCha8Rng) -> (LaurentPoly, LaurentPoly) {
    loop {
        let mut polys = Vec::new();
        for _ in 0..2 {
            let size = rng.gen_range(3..=6);
            let mut terms = Vec::new();
            for _ in 0..size {
                let e = vec![rng.gen_range(0i64..=3), rng.gen_range(0i64..=3)];
                let mut c = 0;
                while c == 0 {
                    c = rng.gen_range(-9i64..=9);
                }
                terms.push((e, rat_int(c)));
            }
            polys.push(LaurentPoly::from_terms(2, terms).unwrap());
        }
        let f = &polys[0];
        let g = &polys[1];
        let uses_both =
            |p: &LaurentPoly| p.terms().any(|(e, _)| e[0] > 0) && p.terms().any(|(e, _)| e[1] > 0);
        if f.is_zero() || g.is_zero() || !uses_both(f) || !uses_both(g) {
            continue;
        }
        match bernstein::count_torus_solutions(f, g) {
            Ok(r) if !r.degenerate => return (f.clone(), g.clone()),
            _ => continue,
        }
    }
}

/// Exponent tensors with a planted orthogonal pair (a, b): per prime axis,
/// T = (a.a)(b.b) U - (a^T U b) a b^T annihilates the pair while staying
/// generic otherwise.
pub fn random_planted_orthogonal_group(
    rng: &mut ChaCha8Rng,
    n: usize,
) -> (MultGroup, Vec<i64>, Vec<i64>) {
    let primes = [2u64, 3];
    loop {
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-2i64..=2)).collect();
        let b: Vec<i64> = (0..n).map(|_| rng.gen_range(-2i64..=2)).collect();
        if a.iter().all(|&v| v == 0) || b.iter().all(|&v| v == 0) {
            continue;
        }
        let aa: i64 = a.iter().map(|v| v * v).sum();
        let bb: i64 = b.iter().map(|v| v * v).sum();
        let mut tensors = Vec::new();
        for _ in primes {
            let u: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-2i64..=2)).collect())
                .collect();
            let aub: i64 = (0..n)
                .map(|i| (0..n).map(|j| a[i] * u[i][j] * b[j]).sum::<i64>())
                .sum();
            let mut t: Vec<Vec<i64>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| aa * bb * u[i][j] - aub * a[i] * b[j])
                        .collect()
                })
                .collect();
            // the plant survives scaling: divide out the content to keep
            // generator exponents (and everything built from them) small
            let content = t
                .iter()
                .flatten()
                .fold(0i64, |acc, &x| num_integer::Integer::gcd(&acc, &x));
            if content > 1 {
                for row in &mut t {
                    for x in row {
                        *x /= content;
                    }
                }
            }
            tensors.push(t);
        }
        let gens: Vec<Vec<FactoredRat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut factors = std::collections::BTreeMap::new();
                        for (ax, &p) in primes.iter().enumerate() {
                            let e = tensors[ax][i][j];
                            if e != 0 {
                                factors.insert(BigUint::from(p), e);
                            }
                        }
                        FactoredRat::from_parts(false, factors).unwrap()
                    })
                    .collect()
            })
            .collect();
        let x = MultGroup::new(gens).unwrap();
        // the plant must be verifiable
        if x.pairing(&a, &b).unwrap().is_one() {
            return (x, a, b);
        }
    }
}

/// n x n generator matrix of pairwise distinct primes: multiplicatively
/// independent entries, so no orthogonal pair exists at any height.
pub fn independent_prime_group(n: usize, offset: usize) -> MultGroup {
    let mut primes = Vec::new();
    let mut candidate = 2u64;
    while primes.len() < n * n + offset {
        if crate::factor::is_prime_u64(candidate) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    let gens: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| rat_int(primes[offset + i * n + j] as i64))
                .collect()
        })
        .collect();
    MultGroup::from_rats(&gens).unwrap()
}

/// Matrix of positive rationals supported on the primes 2, 3, 5, 7.
pub fn random_positive_rational_matrix(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<FactoredRat>> {
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let mut factors = std::collections::BTreeMap::new();
                    for p in [2u64, 3, 5, 7] {
                        let e = rng.gen_range(-3i64..=3);
                        if e != 0 {
                            factors.insert(BigUint::from(p), e);
                        }
                    }
                    FactoredRat::from_parts(false, factors).unwrap()
                })
                .collect()
        })
        .collect()
}

/// Floating-point rank with partial pivoting, for the transcendental
/// surrogate cross-check.
pub fn numeric_rank(mut rows: Vec<Vec<f64>>, tol: f64) -> usize {
    let m = rows.len();
    if m == 0 {
        return 0;
    }
    let n = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < m && col < n {
        let (best, best_abs) = (rank..m)
            .map(|i| (i, rows[i][col].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if best_abs <= tol {
            col += 1;
            continue;
        }
        rows.swap(rank, best);
        for i in rank + 1..m {
            let f = rows[i][col] / rows[rank][col];
            for j in col..n {
                rows[i][j] -= f * rows[rank][j];
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// A random p-adic exponential-sum instance (b, w) with v(w_i) >= 2 and
/// pairwise distinct exponents, so the sum is never the zero function.
pub fn random_exp_sum_instance(
    rng: &mut ChaCha8Rng,
    p: u64,
    n: usize,
    prec: i64,
) -> (Vec<Padic>, Vec<Padic>) {
    let b: Vec<Padic> = (0..n)
        .map(|_| {
            let mut v = 0;
            while v == 0 {
                v = rng.gen_range(-9i64..=9);
            }
            Padic::from_int(p, v, prec)
        })
        .collect();
    let p2 = (p * p) as i64;
    let mut ks: Vec<i64> = (0..=9).collect();
    for i in (1..ks.len()).rev() {
        ks.swap(i, rng.gen_range(0..=i));
    }
    let w: Vec<Padic> = (0..n)
        .map(|i| Padic::from_int(p, p2 * ks[i], prec))
        .collect();
    (b, w)
}

// ---------------------------------------------------------------------------
// the suite itself
// ---------------------------------------------------------------------------

fn check(
    out: &mut Vec<SuiteCheck>,
    module: &str,
    name: &str,
    body: impl FnOnce() -> Result<(bool, String)>,
) {
    let start = std::time::Instant::now();
    let (pass, detail) = match body() {
        Ok((pass, detail)) => (pass, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    if std::env::var_os("LOGMAT_SUITE_TIMINGS").is_some() {
        eprintln!("{module}::{name}: {:?}", start.elapsed());
    }
    out.push(SuiteCheck {
        module: module.into(),
        name: name.into(),
        pass,
        detail,
    });
}

pub fn run_suite(seed: u64, limits: &Limits) -> SuiteReport {
    let mut checks = Vec::new();
    let c = &mut checks;

    check(c, "exact", "factored_rational_roundtrip", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x01);
        for _ in 0..50 {
            let x = random_rat(&mut rng, 10_000, 10_000);
            let f = factor_rational(&x)?;
            if f.reconstruct() != x {
                return Ok((false, format!("{x} failed to round-trip")));
            }
        }
        Ok((true, "50 random rationals".into()))
    });

    check(c, "exact", "structural_rank_mode_agreement", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x02);
        let mut agree = 0;
        let total = 100;
        for t in 0..total {
            let k = rng.gen_range(1..=3usize);
            let basis: Vec<RatMatrix> = (0..k)
                .map(|_| {
                    RatMatrix::from_rows(
                        (0..3)
                            .map(|_| (0..3).map(|_| rat_int(rng.gen_range(-5..=5))).collect())
                            .collect(),
                    )
                    .unwrap()
                })
                .collect();
            let pencil = MatrixPencil::from_basis(&basis)?;
            let exact = structural_rank(&pencil, RankMode::Exact, limits)?.rank;
            let rand = structural_rank(
                &pencil,
                RankMode::Randomized {
                    seed: seed ^ t,
                    trials: 2,
                },
                limits,
            )?
            .rank;
            if rand > exact {
                return Ok((false, "randomized rank exceeded exact".into()));
            }
            if rand == exact {
                agree += 1;
            }
        }
        Ok((
            agree * 100 >= total * 99,
            format!("{agree}/{total} agreements"),
        ))
    });

    check(c, "exact", "det_rank_kernel_consistency", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x03);
        for _ in 0..30 {
            let n = rng.gen_range(2..=5usize);
            let m = RatMatrix::from_rows(
                (0..n)
                    .map(|_| (0..n).map(|_| random_rat(&mut rng, 6, 3)).collect())
                    .collect(),
            )?;
            let rank = m.rank();
            let kernel = m.kernel();
            if rank + kernel.len() != n {
                return Ok((false, "rank-nullity violated".into()));
            }
            let det = m.det()?;
            if det.is_zero() != (rank < n) {
                return Ok((false, "det/rank verdicts disagree".into()));
            }
            for v in &kernel {
                if m.mul_vec(v)?.iter().any(|x| !x.is_zero()) {
                    return Ok((false, "kernel vector not annihilated".into()));
                }
            }
        }
        Ok((true, "30 random square matrices".into()))
    });

    check(c, "exact", "clear_monomial_preserves_torus_zeros", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x04);
        for _ in 0..30 {
            let nv = rng.gen_range(1..=3usize);
            let terms: Vec<(Vec<i64>, Rat)> = (0..rng.gen_range(2..=5))
                .map(|_| {
                    (
                        (0..nv).map(|_| rng.gen_range(-3i64..=3)).collect(),
                        random_rat(&mut rng, 9, 1),
                    )
                })
                .collect();
            let p = LaurentPoly::from_terms(nv, terms)?;
            if p.is_zero() {
                continue;
            }
            let q = p.clear_monomial()?;
            let z: Vec<Rat> = (0..nv).map(|_| random_rat(&mut rng, 7, 5)).collect();
            let pv = p.eval(&z)?;
            let qv = q.eval(&z)?;
            if pv.is_zero() != qv.is_zero() {
                return Ok((false, "zero sets differ after clearing".into()));
            }
        }
        Ok((true, "30 random polynomials and points".into()))
    });

    check(c, "exact", "log_pencil_float_surrogate", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x05);
        for _ in 0..100 {
            let n = rng.gen_range(2..=3usize);
            let q = random_positive_rational_matrix(&mut rng, n);
            let pencil = log_pencil(&q)?;
            let exact = structural_rank(&pencil, RankMode::Exact, limits)?.rank;
            // substitute ln p for the symbol "log p": floats are surrogates
            // for transcendentals here
            let mut float_rows = vec![vec![0.0f64; n]; n];
            for (sym, m) in pencil.components() {
                let p: f64 = sym.trim_start_matches("log").parse::<u64>().unwrap() as f64;
                for (r, row) in float_rows.iter_mut().enumerate() {
                    for (cc, slot) in row.iter_mut().enumerate() {
                        *slot += crate::rat::rat_to_f64(m.at(r, cc)) * p.ln();
                    }
                }
            }
            let numeric = numeric_rank(float_rows, 1e-9);
            if numeric != exact {
                return Ok((false, format!("structural {exact} vs numeric {numeric}")));
            }
        }
        Ok((true, "100 random positive matrices".into()))
    });

    check(c, "witness", "singular_subspace_batch", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x06);
        for i in 0..200 {
            let n = rng.gen_range(2..=5usize);
            let dim = rng.gen_range(1..=3usize.min(n * (n - 1)));
            let family = random_singular_family(&mut rng, n, dim);
            let pair = singular_subspace_witness(&family, limits)?;
            if !pair.annihilates(&family) {
                return Ok((false, format!("instance {i} produced an invalid pair")));
            }
        }
        Ok((true, "200 seeded singular families".into()))
    });

    check(c, "witness", "basis_change_invariance", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x07);
        for _ in 0..20 {
            let n = rng.gen_range(2..=4usize);
            let family = random_singular_family(&mut rng, n, 2);
            let p = random_invertible(&mut rng, n);
            let q = random_invertible(&mut rng, n);
            let transformed: Vec<RatMatrix> = family
                .iter()
                .map(|a| p.matmul(a).unwrap().matmul(&q).unwrap())
                .collect();
            let pair = singular_subspace_witness(&transformed, limits)?;
            // pull back through the transformation
            let w0 = p.transpose().mul_vec(&pair.w)?;
            let v0 = q.mul_vec(&pair.v)?;
            let pulled = crate::witness::WitnessPair { w: w0, v: v0 };
            if !pulled.annihilates(&family) {
                return Ok((false, "pullback failed".into()));
            }
        }
        Ok((true, "20 transformed families".into()))
    });

    check(c, "polytope", "mixed_volume_symmetry_translation", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x08);
        for _ in 0..15 {
            let n = 2;
            let mk = |rng: &mut ChaCha8Rng| -> LatticePolytope {
                let pts: Vec<Vec<i64>> = (0..rng.gen_range(2..=5))
                    .map(|_| (0..n).map(|_| rng.gen_range(0i64..=4)).collect())
                    .collect();
                LatticePolytope::hull(&pts).unwrap()
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            let v1 = mixed_volume(&[a.clone(), b.clone()])?;
            let v2 = mixed_volume(&[b.clone(), a.clone()])?;
            if v1 != v2 {
                return Ok((false, "mixed volume not symmetric".into()));
            }
            let shift: Vec<i64> = (0..n).map(|_| rng.gen_range(-3i64..=3)).collect();
            let translated = LatticePolytope::hull(
                &a.vertices()
                    .iter()
                    .map(|v| v.iter().zip(&shift).map(|(x, s)| x + s).collect())
                    .collect::<Vec<_>>(),
            )?;
            let v3 = mixed_volume(&[translated, b])?;
            if v1 != v3 {
                return Ok((false, "mixed volume not translation invariant".into()));
            }
        }
        Ok((true, "15 random pairs".into()))
    });

    check(c, "polytope", "mixed_volume_monotonicity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x09);
        for _ in 0..15 {
            let pts: Vec<Vec<i64>> = (0..6)
                .map(|_| vec![rng.gen_range(0i64..=4), rng.gen_range(0i64..=4)])
                .collect();
            let sub: Vec<Vec<i64>> = pts[0..3].to_vec();
            let big = LatticePolytope::hull(&pts)?;
            let small = LatticePolytope::hull(&sub)?;
            let v_big = mixed_volume(&[big.clone(), big.clone()])?;
            let v_small = mixed_volume(&[small.clone(), small.clone()])?;
            if v_small > v_big {
                return Ok((false, "monotonicity failed".into()));
            }
            let v_mixed_small = mixed_volume(&[small.clone(), big.clone()])?;
            let v_mixed_big = mixed_volume(&[big.clone(), big.clone()])?;
            if v_mixed_small > v_mixed_big {
                return Ok((false, "mixed monotonicity failed".into()));
            }
        }
        Ok((true, "15 nested supports".into()))
    });

    check(c, "polytope", "bernstein_bound_numeric", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0A);
        for i in 0..20 {
            let (f, g) = random_sparse_system(&mut rng);
            let r = bernstein::count_torus_solutions(&f, &g)?;
            let bk = bk_number(&[f.support(), g.support()])?;
            if r.count as i64 > bk {
                return Ok((
                    false,
                    format!("instance {i}: {} located > bound {bk}", r.count),
                ));
            }
        }
        Ok((true, "20 seeded sparse systems".into()))
    });

    check(c, "padic", "exp_log_roundtrip", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0B);
        for p in [3u64, 5, 7] {
            for _ in 0..10 {
                let k = rng.gen_range(1..=50i64);
                let u = Rat::one() + rat_int(k * (p * p) as i64);
                let l = iwasawa_log(&u, p, 12)?;
                let e = padic_exp(&l)?;
                let target = Padic::from_rat(p, &u, 12)?;
                if !e.congruent_at(&target, e.precision().min(12))? {
                    return Ok((false, format!("round trip failed for {u} at p = {p}")));
                }
            }
        }
        Ok((true, "30 units across p in {3, 5, 7}".into()))
    });

    check(c, "padic", "log_homomorphism", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0C);
        for _ in 0..30 {
            let p = [3u64, 5, 7][rng.gen_range(0..3)];
            let x = random_rat(&mut rng, 50, 20);
            let y = random_rat(&mut rng, 50, 20);
            let lx = iwasawa_log(&x, p, 9)?;
            let ly = iwasawa_log(&y, p, 9)?;
            let lxy = iwasawa_log(&(x * y), p, 9)?;
            if !lxy.congruent_at(&lx.add(&ly)?, 9)? {
                return Ok((false, "additivity failed".into()));
            }
        }
        Ok((true, "30 random pairs".into()))
    });

    check(c, "padic", "polygon_unit_scaling", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0D);
        for _ in 0..20 {
            let p = [3u64, 5][rng.gen_range(0..2)];
            let len = rng.gen_range(2..=6usize);
            let coeffs: Vec<Padic> = (0..len)
                .map(|_| Padic::from_int(p, rng.gen_range(-40i64..=40), 14))
                .collect();
            let Ok(s) = PadicSeries::new(coeffs.clone()) else {
                continue;
            };
            let Ok(count) = roots_in_unit_disc(&s) else {
                continue;
            };
            let unit = Padic::from_int(p, 1 + p as i64 * rng.gen_range(0i64..=4), 14);
            let scaled = PadicSeries::new(coeffs.iter().map(|x| x.mul(&unit).unwrap()).collect())?;
            if roots_in_unit_disc(&scaled)? != count {
                return Ok((false, "count changed under unit scaling".into()));
            }
        }
        Ok((true, "20 scaled series".into()))
    });

    check(c, "padic", "exp_sum_root_bound_batch", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0E);
        for i in 0..30 {
            let p = [3u64, 5, 7][rng.gen_range(0..3)];
            let n = rng.gen_range(1..=5usize);
            let (b, w) = random_exp_sum_instance(&mut rng, p, n, 60);
            let t_order = 6 * n + 10;
            let rep = verify_padic_root_bound(&b, &w, t_order)?;
            if !rep.pass {
                return Ok((
                    false,
                    format!("instance {i}: count {} > bound {}", rep.count, rep.bound),
                ));
            }
        }
        Ok((true, "30 seeded exponential sums".into()))
    });

    check(c, "padic", "dk_valuation_growth", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0F);
        for p in [3u64, 5, 7] {
            let i = rng.gen_range(1..=4usize);
            let w: Vec<Padic> = (0..i)
                .map(|k| Padic::from_int(p, (p * p) as i64 * (k as i64 + 1), 140))
                .collect();
            let rep = dk_valuation_check(&w, 30)?;
            if !rep.all_pass {
                return Ok((false, format!("p = {p}: failures at {:?}", rep.failures)));
            }
        }
        Ok((true, "p in {3, 5, 7}, k up to 30".into()))
    });

    check(c, "padic", "schwarz_inequality", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x10);
        let mut tested = 0;
        for _ in 0..40 {
            let p = [3u64, 5][rng.gen_range(0..2)];
            let len = rng.gen_range(2..=6usize);
            let coeffs: Vec<Padic> = (0..len)
                .map(|_| Padic::from_int(p, rng.gen_range(-60i64..=60), 16))
                .collect();
            let Ok(s) = PadicSeries::new(coeffs) else {
                continue;
            };
            match schwarz_report(&s) {
                Ok(rep) => {
                    tested += 1;
                    if !rep.holds {
                        return Ok((false, "Schwarz bound violated".into()));
                    }
                }
                Err(_) => continue, // uncertified draws are skipped
            }
        }
        Ok((tested >= 20, format!("{tested} certified instances")))
    });

    check(c, "multgroup", "pairing_bilinearity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x11);
        for _ in 0..30 {
            let n = rng.gen_range(2..=3usize);
            let gens: Vec<Vec<Rat>> = (0..n)
                .map(|_| (0..n).map(|_| random_rat(&mut rng, 30, 10)).collect())
                .collect();
            let x = MultGroup::from_rats(&gens)?;
            let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-3i64..=3)).collect();
            let b1: Vec<i64> = (0..n).map(|_| rng.gen_range(-3i64..=3)).collect();
            let b2: Vec<i64> = (0..n).map(|_| rng.gen_range(-3i64..=3)).collect();
            let sum: Vec<i64> = b1.iter().zip(&b2).map(|(x, y)| x + y).collect();
            let lhs = x.pairing(&a, &sum)?;
            let rhs = x.pairing(&a, &b1)?.mul(&x.pairing(&a, &b2)?);
            if lhs != rhs {
                return Ok((false, "bilinearity failed".into()));
            }
        }
        Ok((true, "30 random triples".into()))
    });

    check(c, "multgroup", "planted_orthogonal_pipeline", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x12);
        for i in 0..10 {
            let (x, a_planted, b_planted) = random_planted_orthogonal_group(&mut rng, 2);
            let height = a_planted
                .iter()
                .chain(&b_planted)
                .map(|v| v.abs())
                .max()
                .unwrap()
                .max(1);
            let rep = search_condition_o(&x, height)?;
            let Some((a, b)) = rep.witness else {
                return Ok((false, format!("instance {i}: planted pair not found")));
            };
            if !x.pairing(&a, &b)?.is_one() {
                return Ok((false, "witness does not verify".into()));
            }
            let built = construct_p0(&x, &a, &b, 2, limits)?;
            if built.distinct_values as u128 > built.factor_bound {
                return Ok((false, format!("instance {i}: factor count above its bound")));
            }
            let m = check_condition_m(&x, &built.poly, 2, limits)?;
            if !m.vanishing_ok {
                return Ok((false, format!("instance {i}: product poly does not vanish")));
            }
            let bk = bk_degree(&built.poly)?;
            if bk.entries[0] != built.poly.total_degree() || bk.entries[1..].iter().any(|&e| e != 0)
            {
                return Ok((false, format!("instance {i}: degree data not segment-like")));
            }
        }
        Ok((true, "10 planted instances".into()))
    });

    check(c, "multgroup", "independent_primes_negative", || {
        for i in 0..10 {
            let x = independent_prime_group(2, i);
            let height = 3;
            let rep = search_condition_o(&x, height)?;
            if rep.witness.is_some() {
                return Ok((false, format!("offset {i}: unexpected witness")));
            }
            // independent route: raw pairing evaluation over every pair up
            // to min(height, 3) must agree that nothing pairs to 1
            for a in CanonicalVectors::new(2, height.min(3), false) {
                for b in CanonicalVectors::new(2, height.min(3), false) {
                    if x.pairing(&a, &b)?.is_one() {
                        return Ok((false, format!("offset {i}: brute force found {a:?}, {b:?}")));
                    }
                }
            }
            let xn = enumerate_xn(&x, 3, limits)?;
            if xn.collisions != 0 {
                return Ok((false, format!("offset {i}: unexpected collisions")));
            }
            let support: Vec<Vec<i64>> = (0..3)
                .flat_map(|u| (0..3).map(move |v| vec![u, v]))
                .take(8)
                .collect();
            if vanishing_poly_search(&x, &support, 2, 2, limits)?.is_some() {
                return Ok((false, format!("offset {i}: spurious vanishing polynomial")));
            }
        }
        Ok((
            true,
            "10 independent-prime instances with brute-force cross-check".into(),
        ))
    });

    check(
        c,
        "multgroup",
        "orthogonal_pair_gives_vanishing_range",
        || {
            // whenever an orthogonal pair exists, the product polynomial built
            // from it satisfies the degree-and-vanishing condition for every N
            // in a window [N0, N0 + 2]
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x16);
            for i in 0..5 {
                let (x, _, _) = loop {
                    let (x, a, b) = random_planted_orthogonal_group(&mut rng, 2);
                    if a.iter().all(|v| v.abs() <= 1) && b.iter().all(|v| v.abs() <= 1) {
                        break (x, a, b);
                    }
                };
                let rep = search_condition_o(&x, 1)?;
                let Some((a, b)) = rep.witness else {
                    return Ok((
                        false,
                        format!("instance {i}: witness not found at height 1"),
                    ));
                };
                let mut n0 = None;
                for n_param in 1..=12u64 {
                    let built = construct_p0(&x, &a, &b, n_param, limits)?;
                    let m = check_condition_m(&x, &built.poly, n_param, limits)?;
                    if m.verdict {
                        n0 = Some(n_param);
                        break;
                    }
                }
                let Some(n0) = n0 else {
                    return Ok((false, format!("instance {i}: no threshold up to 12")));
                };
                for n_param in n0..=n0 + 2 {
                    let built = construct_p0(&x, &a, &b, n_param, limits)?;
                    let m = check_condition_m(&x, &built.poly, n_param, limits)?;
                    if !m.verdict {
                        return Ok((
                            false,
                            format!("instance {i}: condition fails again at N = {n_param}"),
                        ));
                    }
                }
            }
            Ok((true, "5 planted instances with threshold windows".into()))
        },
    );

    check(c, "groups", "regular_rep_faithful_homomorphism", || {
        // exhaustive over every catalog group (all have order <= 24),
        // at the permutation level: rho(a) rho(b) = rho(ab) and injectivity
        for g in groups::catalog() {
            let n = g.order();
            let perm = |e: usize| -> Vec<usize> { (0..n).map(|b| g.mul(e, b)).collect() };
            let perms: Vec<Vec<usize>> = (0..n).map(perm).collect();
            for a in 0..n {
                for b in 0..n {
                    let composed: Vec<usize> = (0..n).map(|x| perms[a][perms[b][x]]).collect();
                    if composed != perms[g.mul(a, b)] {
                        return Ok((false, format!("{}: homomorphism fails", g.name)));
                    }
                }
            }
            let mut sorted = perms.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                return Ok((false, format!("{}: representation not faithful", g.name)));
            }
        }
        Ok((true, "all catalog groups, all pairs".into()))
    });

    check(c, "groups", "convolution_identity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x13);
        for g in [groups::symmetric(3), groups::dihedral(4), groups::cyclic(6)] {
            let n = g.order();
            let lam: Vec<Rat> = (0..n).map(|_| random_rat(&mut rng, 9, 4)).collect();
            let mu: Vec<Rat> = (0..n).map(|_| random_rat(&mut rng, 9, 4)).collect();
            let prod = groups::group_matrix(&g, &lam)?.matmul(&groups::group_matrix(&g, &mu)?)?;
            let conv = groups::convolution(&g, &mu, &lam)?;
            if prod != groups::group_matrix(&g, &conv)? {
                return Ok((false, format!("{}: convolution identity failed", g.name)));
            }
        }
        Ok((true, "3 groups, random vectors".into()))
    });

    check(c, "groups", "projection_idempotent_ranks", || {
        for g in groups::catalog() {
            let mut subgroups: Vec<Vec<usize>> = vec![vec![g.identity()]];
            if let Some(&t) = g.involutions().first() {
                subgroups.push(vec![g.identity(), t]);
            }
            for h in subgroups {
                let pr = groups::projection_plus(&g, &h)?;
                if pr.matmul(&pr)? != pr {
                    return Ok((false, format!("{}: projection not idempotent", g.name)));
                }
                if pr.rank() != g.order() / h.len() {
                    return Ok((false, format!("{}: projection rank wrong", g.name)));
                }
            }
        }
        Ok((true, "all catalog groups".into()))
    });

    check(c, "groups", "rank_experiments_quick", || {
        for g in [
            groups::cyclic(2),
            groups::cyclic(4),
            groups::cyclic(6),
            groups::symmetric(3),
            groups::dihedral(4),
            groups::quaternion8(),
        ] {
            let rep = groups::rank_experiment(
                &g,
                ConstraintKind::Leopoldt,
                &[g.identity()],
                None,
                3,
                seed ^ 0x14,
                limits,
            )?;
            if !rep.pass {
                return Ok((false, format!("{}: archimedean experiment failed", g.name)));
            }
            if let Some(&cc) = g.central_involutions().first() {
                let rep2 = groups::rank_experiment(
                    &g,
                    ConstraintKind::Gross,
                    &[g.identity()],
                    Some(cc),
                    3,
                    seed ^ 0x15,
                    limits,
                )?;
                if !rep2.pass {
                    return Ok((false, format!("{}: p-adic experiment failed", g.name)));
                }
            }
        }
        Ok((true, "6 groups".into()))
    });

    check(c, "auxpoly", "product_polynomial_properties", || {
        for n_param in [1u64, 2] {
            let p = auxpoly::build_product_poly(4, 7, n_param, limits)?;
            if p.degree() != 9 * n_param * n_param {
                return Ok((false, "degree mismatch".into()));
            }
            if *p.coeffs.last().unwrap() != 1.into() {
                return Ok((false, "not monic".into()));
            }
            for v in box_points(2, 3 * n_param).take(5) {
                let root = rat_int(4i64.pow(v[0] as u32) * 7i64.pow(v[1] as u32));
                if !p.eval(&root).is_zero() {
                    return Ok((false, "missing root".into()));
                }
            }
            let rep = auxpoly::analytic_gap_report(4, 7, 3, n_param, limits)?;
            if rep.padic_lower_bound < rep.guaranteed_valuation {
                return Ok((false, "sampled valuation below guarantee".into()));
            }
            if !rep.product_exceeds_one {
                return Ok((false, "norm product unexpectedly below 1".into()));
            }
        }
        Ok((true, "N in {1, 2}".into()))
    });

    check(c, "exact", "exp_sum_series_matches_rational_oracle", || {
        // c_k of sum b_i e^(w_i z) equals the exact rational sum b_i w_i^k / k!
        let p = 5u64;
        let b_rat = [rat_int(2), rat_int(-3)];
        let w_rat = [rat_int(25), rat_int(50)];
        let b: Vec<Padic> = b_rat
            .iter()
            .map(|x| Padic::from_rat(p, x, 30).unwrap())
            .collect();
        let w: Vec<Padic> = w_rat
            .iter()
            .map(|x| Padic::from_rat(p, x, 30).unwrap())
            .collect();
        let s = exp_sum_series(&b, &w, 6)?;
        let mut factorial = Rat::one();
        for (k, ck) in s.coeffs().iter().enumerate() {
            if k > 0 {
                factorial *= rat_int(k as i64);
            }
            let want: Rat = b_rat
                .iter()
                .zip(&w_rat)
                .map(|(bi, wi)| bi * wi.pow(k as i32) / &factorial)
                .fold(Rat::zero(), |a, t| a + t);
            let target = Padic::from_rat(p, &want, ck.precision())?;
            if !ck.congruent_at(&target, ck.precision().min(20))? {
                return Ok((false, format!("coefficient {k} mismatch")));
            }
        }
        Ok((
            true,
            "coefficients 0..=6 against the rational formula".into(),
        ))
    });

    let all_pass = checks.iter().all(|ch| ch.pass);
    SuiteReport {
        seed,
        checks,
        all_pass,
    }
}
