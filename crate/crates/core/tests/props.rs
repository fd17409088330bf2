//! Property tests for the serialization formats and the algebraic
//! invariants that are cheap enough to fuzz.

use proptest::prelude::*;

use logmat_core::enumerate::CanonicalVectors;
use logmat_core::factor::factor_rational;
use logmat_core::json as wire;
use logmat_core::laurent::LaurentPoly;
use logmat_core::linalg::RatMatrix;
use logmat_core::multgroup::MultGroup;
use logmat_core::pencil::MatrixPencil;
use logmat_core::polytope::{mixed_volume, LatticePolytope};
use logmat_core::rat::Rat;
use num_bigint::BigInt;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-20000i64..=20000, 1i64..=20000).prop_map(|(n, d)| Rat::new(BigInt::from(n), BigInt::from(d)))
}

fn arb_nonzero_rat() -> impl Strategy<Value = Rat> {
    arb_rat().prop_filter("nonzero", |x| !num_traits::Zero::is_zero(x))
}

proptest! {
    #[test]
    fn rational_json_roundtrip(x in arb_rat()) {
        let j = wire::rat_to_json(&x);
        prop_assert_eq!(wire::rat_from_json(&j).unwrap(), x);
    }

    #[test]
    fn factoring_inverts_reconstruction(x in arb_nonzero_rat()) {
        let f = factor_rational(&x).unwrap();
        prop_assert_eq!(f.reconstruct(), x);
    }

    #[test]
    fn matrix_json_roundtrip(rows in proptest::collection::vec(
        proptest::collection::vec(arb_rat(), 1..4), 1..4)
    ) {
        let cols = rows[0].len();
        prop_assume!(rows.iter().all(|r| r.len() == cols));
        let m = RatMatrix::from_rows(rows).unwrap();
        let j = wire::matrix_to_json(&m);
        prop_assert_eq!(wire::matrix_from_json(&j).unwrap(), m);
    }

    #[test]
    fn pencil_json_roundtrip(entries in proptest::collection::vec(-9i64..=9, 8)) {
        let m1 = RatMatrix::from_i64_rows(&[
            entries[0..2].to_vec(),
            entries[2..4].to_vec(),
        ]).unwrap();
        let m2 = RatMatrix::from_i64_rows(&[
            entries[4..6].to_vec(),
            entries[6..8].to_vec(),
        ]).unwrap();
        let p = MatrixPencil::new(2, 2, vec![("x0".into(), m1), ("x1".into(), m2)]).unwrap();
        let j = wire::pencil_to_json(&p);
        prop_assert_eq!(wire::pencil_from_json(&j).unwrap(), p);
    }

    #[test]
    fn laurent_json_roundtrip(terms in proptest::collection::vec(
        ((-5i64..=5, -5i64..=5), arb_rat()), 1..6)
    ) {
        let p = LaurentPoly::from_terms(
            2,
            terms.into_iter().map(|((a, b), c)| (vec![a, b], c)),
        ).unwrap();
        let j = wire::laurent_to_json(&p);
        prop_assert_eq!(wire::laurent_from_json(&j, Some(2)).unwrap(), p);
    }

    #[test]
    fn pairing_is_bilinear(
        gens in proptest::collection::vec(arb_nonzero_rat(), 4),
        a1 in proptest::collection::vec(-3i64..=3, 2),
        a2 in proptest::collection::vec(-3i64..=3, 2),
        b in proptest::collection::vec(-3i64..=3, 2),
    ) {
        let x = MultGroup::from_rats(&[
            gens[0..2].to_vec(),
            gens[2..4].to_vec(),
        ]).unwrap();
        let sum: Vec<i64> = a1.iter().zip(&a2).map(|(p, q)| p + q).collect();
        let lhs = x.pairing(&sum, &b).unwrap();
        let rhs = x.pairing(&a1, &b).unwrap().mul(&x.pairing(&a2, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_volume_symmetric_and_monotone(
        pts_a in proptest::collection::vec((0i64..=4, 0i64..=4), 2..6),
        pts_b in proptest::collection::vec((0i64..=4, 0i64..=4), 2..6),
    ) {
        let to_vecs = |pts: &[(i64, i64)]| -> Vec<Vec<i64>> {
            pts.iter().map(|&(x, y)| vec![x, y]).collect()
        };
        let a = LatticePolytope::hull(&to_vecs(&pts_a)).unwrap();
        let b = LatticePolytope::hull(&to_vecs(&pts_b)).unwrap();
        let v1 = mixed_volume(&[a.clone(), b.clone()]).unwrap();
        let v2 = mixed_volume(&[b.clone(), a.clone()]).unwrap();
        prop_assert_eq!(&v1, &v2);
        // dropping points can only shrink the body and the mixed volume
        let first = to_vecs(&pts_a[0..2]);
        let small = LatticePolytope::hull(&first).unwrap();
        let v3 = mixed_volume(&[small, b]).unwrap();
        prop_assert!(v3 <= v1);
    }

    #[test]
    fn canonical_vectors_are_unique_and_bounded(dim in 1usize..=3, h in 1i64..=3) {
        let all: Vec<Vec<i64>> = CanonicalVectors::new(dim, h, false).collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), all.len());
        for v in &all {
            prop_assert!(v.iter().any(|&x| x != 0));
            prop_assert!(v.iter().all(|&x| x.abs() <= h));
            prop_assert!(*v.iter().find(|&&x| x != 0).unwrap() > 0);
        }
        // e_1 comes first
        let mut e1 = vec![0i64; dim];
        e1[0] = 1;
        prop_assert_eq!(&all[0], &e1);
    }
}
