//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line with its runtime. Tolerances and instance counts are
//! pinned here; a failure of any of these is a release blocker.

use std::time::Instant;

use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use logmat_core::bernstein::count_torus_solutions;
use logmat_core::groups::{self, ConstraintKind};
use logmat_core::laurent::LaurentPoly;
use logmat_core::limits::Limits;
use logmat_core::linalg::RatMatrix;
use logmat_core::multgroup::{
    check_condition_m, construct_p0, search_condition_o, vanishing_poly_search,
};
use logmat_core::padic::series::{dk_valuation_check, verify_padic_root_bound};
use logmat_core::padic::{iwasawa_log, padic_exp, Padic};
use logmat_core::pencil::{structural_rank, MatrixPencil, RankMode};
use logmat_core::polytope::{bk_degree, bk_number};
use logmat_core::rat::{rat_int, Rat};
use logmat_core::suite::{
    independent_prime_group, random_exp_sum_instance, random_planted_orthogonal_group,
    random_singular_family, random_sparse_system,
};
use logmat_core::witness::singular_subspace_witness;

fn report(name: &str, pass: bool, start: Instant, budget_s: f64, detail: &str) {
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "acceptance {name}: {} ({elapsed:.2}s, budget {budget_s}s) {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{name} failed: {detail}");
    assert!(
        elapsed < budget_s,
        "{name} exceeded its {budget_s}s budget ({elapsed:.2}s)"
    );
}

fn skew_pencil() -> MatrixPencil {
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

/// Criterion 1: the 3x3 skew-symmetric pencil has exact structural rank 2
/// and 100 seeded randomized runs agree.
#[test]
fn acceptance_1_structural_rank() {
    let start = Instant::now();
    let limits = Limits::default();
    let pencil = skew_pencil();
    let exact = structural_rank(&pencil, RankMode::Exact, &limits).unwrap();
    let mut all_agree = exact.rank == 2;
    for seed in 0..100u64 {
        let r =
            structural_rank(&pencil, RankMode::Randomized { seed, trials: 2 }, &limits).unwrap();
        all_agree &= r.rank == 2;
    }
    report(
        "1 structural rank",
        all_agree,
        start,
        1.0,
        &format!("exact {} with 100 randomized agreements", exact.rank),
    );
}

/// Criterion 2: 200 seeded singular families (dimensions 1..3 inside square
/// sizes 2..5) all yield exactly verifying witness pairs.
#[test]
fn acceptance_2_singular_subspace_witnesses() {
    let start = Instant::now();
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC2);
    let mut ok = 0;
    let total = 200;
    for _ in 0..total {
        let n = rng.gen_range(2..=5usize);
        let dim = rng.gen_range(1..=3usize.min(n * (n - 1)));
        let family = random_singular_family(&mut rng, n, dim);
        let pair = singular_subspace_witness(&family, &limits).unwrap();
        if pair.is_nonzero() && pair.annihilates(&family) {
            ok += 1;
        }
    }
    report(
        "2 singular subspace witnesses",
        ok == total,
        start,
        10.0,
        &format!("{ok}/{total} valid pairs"),
    );
}

/// Criterion 3: products of simplex dilates realize the Bezout count, and
/// the first degree-data entry equals the total degree on 100 random
/// monomially-cleared bivariate supports.
#[test]
fn acceptance_3_mixed_volumes() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = String::new();
    for d in 1..=6i64 {
        for e in 1..=6i64 {
            let sd: Vec<Vec<i64>> = (0..=d)
                .flat_map(|a| (0..=(d - a)).map(move |b| vec![a, b]))
                .collect();
            let se: Vec<Vec<i64>> = (0..=e)
                .flat_map(|a| (0..=(e - a)).map(move |b| vec![a, b]))
                .collect();
            let bk = bk_number(&[sd, se]).unwrap();
            if bk != d * e {
                pass = false;
                detail = format!("dilates ({d}, {e}) gave {bk}");
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC3);
    let mut checked = 0;
    while checked < 100 {
        let size = rng.gen_range(2..=6usize);
        let terms: Vec<(Vec<i64>, Rat)> = (0..size)
            .map(|_| {
                (
                    vec![rng.gen_range(0i64..=4), rng.gen_range(0i64..=4)],
                    rat_int(rng.gen_range(1i64..=9)),
                )
            })
            .collect();
        let p = LaurentPoly::from_terms(2, terms).unwrap();
        if p.support_size() < 2 {
            continue;
        }
        let cleared = p.clear_monomial().unwrap();
        let rep = bk_degree(&cleared).unwrap();
        if rep.point_support {
            continue;
        }
        checked += 1;
        if rep.entries[0] != cleared.total_degree() {
            pass = false;
            detail = format!(
                "support {:?}: entry {} vs degree {}",
                cleared.support(),
                rep.entries[0],
                cleared.total_degree()
            );
        }
    }
    report(
        "3 mixed volumes",
        pass,
        start,
        5.0,
        if detail.is_empty() {
            "36 dilate pairs and 100 degree cross-checks"
        } else {
            &detail
        },
    );
}

/// Criterion 4: on 50 seeded sparse bivariate systems, the numerically
/// located torus-solution count never exceeds the mixed-volume bound.
#[test]
fn acceptance_4_bernstein_bound() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC4);
    let mut ok = 0;
    let total = 50;
    let mut detail = String::new();
    for i in 0..total {
        let (f, g) = random_sparse_system(&mut rng);
        let located = count_torus_solutions(&f, &g).unwrap();
        let bk = bk_number(&[f.support(), g.support()]).unwrap();
        if !located.degenerate && located.count as i64 <= bk {
            ok += 1;
        } else {
            detail = format!("instance {i}: {} located, bound {bk}", located.count);
        }
    }
    report(
        "4 root-count bound",
        ok == total,
        start,
        30.0,
        if detail.is_empty() {
            "50 systems within the bound"
        } else {
            &detail
        },
    );
}

/// Criterion 5: exponential/logarithm round trips at precision 12 for 100
/// units, 100 passing exponential-sum root bounds, and the coefficient
/// valuation growth for i <= 5, k <= 50.
#[test]
fn acceptance_5_padic_analysis() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC5);
    let mut pass = true;
    let mut detail = String::new();

    let mut done = 0;
    'outer: for round in 0..34 {
        for p in [3u64, 5, 7] {
            if done == 100 {
                break 'outer;
            }
            let _ = round;
            let mut den = rng.gen_range(1..=20i64);
            while den % p as i64 == 0 {
                den = rng.gen_range(1..=20i64);
            }
            let num = rng.gen_range(1..=50i64);
            let u = Rat::one() + Rat::new((num * (p * p) as i64).into(), den.into());
            let l = iwasawa_log(&u, p, 12).unwrap();
            let e = padic_exp(&l).unwrap();
            let target = Padic::from_rat(p, &u, 12).unwrap();
            if !e.congruent_at(&target, 12.min(e.precision())).unwrap() {
                pass = false;
                detail = format!("round trip failed for {u} at p = {p}");
            }
            done += 1;
        }
    }

    for i in 0..100 {
        let p = [3u64, 5, 7][rng.gen_range(0..3)];
        let n = rng.gen_range(1..=5usize);
        let (b, w) = random_exp_sum_instance(&mut rng, p, n, 60);
        let rep = verify_padic_root_bound(&b, &w, 6 * n + 10).unwrap();
        if !rep.pass {
            pass = false;
            detail = format!("root bound instance {i}: {} > {}", rep.count, rep.bound);
        }
    }

    for p in [3u64, 5, 7] {
        for i in 1..=5usize {
            let w: Vec<Padic> = (0..i)
                .map(|k| Padic::from_int(p, (p * p) as i64 * (k as i64 + 1), 160))
                .collect();
            let rep = dk_valuation_check(&w, 50).unwrap();
            if !rep.all_pass {
                pass = false;
                detail = format!("valuation growth failed at p = {p}, i = {i}");
            }
        }
    }

    report(
        "5 p-adic analysis",
        pass,
        start,
        30.0,
        if detail.is_empty() {
            "100 round trips, 100 root bounds, growth for i <= 5, k <= 50"
        } else {
            &detail
        },
    );
}

/// Criterion 6: planted orthogonal pairs are recovered and drive the product
/// polynomial pipeline; independent-prime instances stay negative.
#[test]
fn acceptance_6_conditions_pipeline() {
    let start = Instant::now();
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC6);
    let mut pass = true;
    let mut detail = String::new();

    for i in 0..50 {
        let (x, a_planted, b_planted) = random_planted_orthogonal_group(&mut rng, 2);
        let height = a_planted
            .iter()
            .chain(&b_planted)
            .map(|v| v.abs())
            .max()
            .unwrap()
            .max(1);
        let found = search_condition_o(&x, height).unwrap();
        let Some((a, b)) = found.witness else {
            pass = false;
            detail = format!("planted instance {i}: no witness up to {height}");
            continue;
        };
        if !x.pairing(&a, &b).unwrap().is_one() {
            pass = false;
            detail = format!("planted instance {i}: pairing not 1");
            continue;
        }
        let built = construct_p0(&x, &a, &b, 2, &limits).unwrap();
        let m = check_condition_m(&x, &built.poly, 2, &limits).unwrap();
        if !m.vanishing_ok {
            pass = false;
            detail = format!("planted instance {i}: product polynomial does not vanish");
            continue;
        }
        let bk = bk_degree(&built.poly).unwrap();
        let degree_like =
            bk.entries[0] == built.poly.total_degree() && bk.entries[1..].iter().all(|&v| v == 0);
        if !degree_like {
            pass = false;
            detail = format!("planted instance {i}: degree data {:?}", bk.entries);
        }
    }

    for i in 0..50 {
        let x = independent_prime_group(2, i);
        if search_condition_o(&x, 4).unwrap().witness.is_some() {
            pass = false;
            detail = format!("independent instance {i}: unexpected witness");
            continue;
        }
        let support: Vec<Vec<i64>> = (0..10)
            .map(|_| vec![rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3)])
            .collect();
        let mut support = support;
        support.sort();
        support.dedup();
        // |S| <= |X(2N)| = 16 holds by construction (at most 10 monomials)
        if vanishing_poly_search(&x, &support, 2, 2, &limits)
            .unwrap()
            .is_some()
        {
            pass = false;
            detail = format!("independent instance {i}: spurious vanishing polynomial");
        }
    }

    report(
        "6 conditions pipeline",
        pass,
        start,
        60.0,
        if detail.is_empty() {
            "50 planted and 50 independent instances"
        } else {
            &detail
        },
    );
}

/// Criterion 7: for every catalog (G, H) with |H| in {1, 2} the generic
/// coset-sum-zero rank is n/|H| - 1 on 20 seeds, and for every catalog
/// (G, H, c) with a central involution c outside H the conjugation-negated
/// rank is n/(2 |H|); the structural pencil rank agrees throughout.
#[test]
fn acceptance_7_group_matrices() {
    let start = Instant::now();
    let limits = Limits::default();
    let mut pass = true;
    let mut detail = String::new();
    let mut configs = 0;

    for g in groups::catalog() {
        let mut subgroups: Vec<Vec<usize>> = vec![vec![g.identity()]];
        for t in g.involutions() {
            subgroups.push(vec![g.identity(), t]);
        }
        for h in &subgroups {
            configs += 1;
            let rep = groups::rank_experiment(
                &g,
                ConstraintKind::Leopoldt,
                h,
                None,
                20,
                0xACC7 ^ configs,
                &limits,
            )
            .unwrap();
            if !rep.pass {
                pass = false;
                detail = format!(
                    "{} with |H| = {}: predicted {}, structural {}, trials {:?}",
                    g.name,
                    h.len(),
                    rep.predicted,
                    rep.structural,
                    rep.trial_ranks
                );
            }
        }
        for c in g.central_involutions() {
            for h in &subgroups {
                if h.contains(&c) {
                    continue;
                }
                configs += 1;
                let rep = groups::rank_experiment(
                    &g,
                    ConstraintKind::Gross,
                    h,
                    Some(c),
                    20,
                    0xACC7 ^ configs,
                    &limits,
                )
                .unwrap();
                if !rep.pass {
                    pass = false;
                    detail = format!(
                        "{} with |H| = {}, c = {c}: predicted {}, structural {}, trials {:?}",
                        g.name,
                        h.len(),
                        rep.predicted,
                        rep.structural,
                        rep.trial_ranks
                    );
                }
            }
        }
    }

    if detail.is_empty() {
        detail = format!("{configs} catalog configurations, 20 seeds each");
    }
    report("7 group matrices", pass, start, 60.0, &detail);
}

/// Criterion 8: product polynomial for alpha = 4, beta = 7, p = 3 at
/// N in {1, 2}: degree 9N^2, certified valuation at least 9N^2, and a
/// positive norm-gap product.
#[test]
fn acceptance_8_auxpoly() {
    let start = Instant::now();
    let limits = Limits::default();
    let mut pass = true;
    let mut detail = String::new();
    for n_param in [1u64, 2] {
        let rep = logmat_core::auxpoly::analytic_gap_report(4, 7, 3, n_param, &limits).unwrap();
        if rep.degree != 9 * n_param * n_param {
            pass = false;
            detail = format!("N = {n_param}: degree {}", rep.degree);
        }
        if rep.padic_lower_bound < rep.guaranteed_valuation
            || rep.guaranteed_valuation != (9 * n_param * n_param) as i64
        {
            pass = false;
            detail = format!(
                "N = {n_param}: valuation bound {} vs guarantee {}",
                rep.padic_lower_bound, rep.guaranteed_valuation
            );
        }
        // spot-check the certified bound on explicit arguments
        for k in [1i64, 2, 5] {
            let x = Rat::from_integer((1 + 3 * k).into());
            let v =
                logmat_core::auxpoly::padic_valuation_at(4, 7, n_param, &x, 3, &limits).unwrap();
            match v.total {
                logmat_core::auxpoly::Valuation::Finite(t) => {
                    if t < (9 * n_param * n_param) as i64 {
                        pass = false;
                        detail = format!("N = {n_param}, x = {x}: valuation {t}");
                    }
                }
                logmat_core::auxpoly::Valuation::ExactZero => {}
            }
        }
        if !rep.product_exceeds_one {
            pass = false;
            detail = format!("N = {n_param}: product_log {}", rep.product_log);
        }
    }
    report(
        "8 product polynomial",
        pass,
        start,
        10.0,
        if detail.is_empty() {
            "N in {1, 2} with certified valuations"
        } else {
            &detail
        },
    );
}
