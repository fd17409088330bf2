//! JSON wire formats. Big integers travel as decimal strings; every format
//! round-trips to an equal value and serializes deterministically.
//!
//! - rational: {"n": "...", "d": "..."}
//! - matrix: [[rational, ...], ...]
//! - pencil: {"shape": [r, c], "components": [{"sym": s, "m": matrix}, ...]}
//! - Laurent polynomial: [{"e": [ints], "c": rational}, ...]
//! - p-adic number: {"p": int, "val": int, "unit": string, "prec": int}
//!   (zero at precision k is {"val": k, "unit": "0", "prec": k})
//! - group: {"order": n, "table": [[int, ...], ...], "labels": [...]}
//! - multiplicative group: {"gens": matrix}
//! - witness pair: {"w": [rational, ...], "v": [rational, ...]}

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::laurent::LaurentPoly;
use crate::linalg::RatMatrix;
use crate::multgroup::MultGroup;
use crate::padic::Padic;
use crate::pencil::MatrixPencil;
use crate::rat::{rat_from_parts, rat_to_parts, Rat};
use crate::witness::WitnessPair;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RatJson {
    pub n: String,
    pub d: String,
}

pub fn rat_to_json(x: &Rat) -> RatJson {
    let (n, d) = rat_to_parts(x);
    RatJson { n, d }
}

pub fn rat_from_json(j: &RatJson) -> Result<Rat> {
    rat_from_parts(&j.n, &j.d)
}

pub type MatrixJson = Vec<Vec<RatJson>>;

pub fn matrix_to_json(m: &RatMatrix) -> MatrixJson {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(rat_to_json).collect())
        .collect()
}

pub fn matrix_from_json(j: &MatrixJson) -> Result<RatMatrix> {
    let rows = j
        .iter()
        .map(|r| r.iter().map(rat_from_json).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_rows(rows)
}

pub fn rat_vec_to_json(v: &[Rat]) -> Vec<RatJson> {
    v.iter().map(rat_to_json).collect()
}

pub fn rat_vec_from_json(j: &[RatJson]) -> Result<Vec<Rat>> {
    j.iter().map(rat_from_json).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PencilComponentJson {
    pub sym: String,
    pub m: MatrixJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PencilJson {
    pub shape: [usize; 2],
    pub components: Vec<PencilComponentJson>,
}

pub fn pencil_to_json(p: &MatrixPencil) -> PencilJson {
    PencilJson {
        shape: [p.rows(), p.cols()],
        components: p
            .components()
            .iter()
            .map(|(sym, m)| PencilComponentJson {
                sym: sym.clone(),
                m: matrix_to_json(m),
            })
            .collect(),
    }
}

pub fn pencil_from_json(j: &PencilJson) -> Result<MatrixPencil> {
    let components = j
        .components
        .iter()
        .map(|c| Ok((c.sym.clone(), matrix_from_json(&c.m)?)))
        .collect::<Result<Vec<_>>>()?;
    MatrixPencil::new(j.shape[0], j.shape[1], components)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LaurentTermJson {
    pub e: Vec<i64>,
    pub c: RatJson,
}

pub type LaurentJson = Vec<LaurentTermJson>;

pub fn laurent_to_json(p: &LaurentPoly) -> LaurentJson {
    p.terms()
        .map(|(e, c)| LaurentTermJson {
            e: e.clone(),
            c: rat_to_json(c),
        })
        .collect()
}

/// The arity is read from the terms; it must be supplied explicitly for the
/// zero polynomial (empty list).
pub fn laurent_from_json(j: &LaurentJson, nvars: Option<usize>) -> Result<LaurentPoly> {
    let nvars = match (j.first(), nvars) {
        (_, Some(n)) => n,
        (Some(t), None) => t.e.len(),
        (None, None) => {
            return Err(Error::Parse(
                "empty polynomial needs an explicit variable count".into(),
            ))
        }
    };
    LaurentPoly::from_terms(
        nvars,
        j.iter()
            .map(|t| Ok((t.e.clone(), rat_from_json(&t.c)?)))
            .collect::<Result<Vec<_>>>()?,
    )
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PadicJson {
    pub p: u64,
    pub val: i64,
    pub unit: String,
    pub prec: i64,
}

pub fn padic_to_json(x: &Padic) -> PadicJson {
    match x.valuation() {
        None => PadicJson {
            p: x.prime(),
            val: x.precision(),
            unit: "0".into(),
            prec: x.precision(),
        },
        Some(v) => PadicJson {
            p: x.prime(),
            val: v,
            unit: x.unit_part().to_string(),
            prec: x.precision(),
        },
    }
}

pub fn padic_from_json(j: &PadicJson) -> Result<Padic> {
    crate::padic::check_precision(j.prec)?;
    if j.val.unsigned_abs() > crate::padic::MAX_PRECISION as u64 {
        return Err(Error::Parse(format!("valuation {} out of range", j.val)));
    }
    let unit: BigUint = j
        .unit
        .parse()
        .map_err(|_| Error::Parse(format!("bad unit {:?}", j.unit)))?;
    if unit == BigUint::from(0u32) {
        return Ok(Padic::zero_at(j.p, j.prec));
    }
    Ok(Padic::from_shifted_bigint(j.p, j.val, &unit.into(), j.prec))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultGroupJson {
    pub gens: MatrixJson,
}

pub fn multgroup_to_json(x: &MultGroup) -> MultGroupJson {
    MultGroupJson {
        gens: x
            .gens()
            .iter()
            .map(|row| row.iter().map(|f| rat_to_json(&f.reconstruct())).collect())
            .collect(),
    }
}

pub fn multgroup_from_json(j: &MultGroupJson) -> Result<MultGroup> {
    let gens = j
        .gens
        .iter()
        .map(|row| row.iter().map(rat_from_json).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    MultGroup::from_rats(&gens)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

pub fn group_to_json(g: &FiniteGroup) -> GroupJson {
    GroupJson {
        order: g.order(),
        table: g.table().clone(),
        labels: g.labels().to_vec(),
    }
}

pub fn group_from_json(name: &str, j: &GroupJson) -> Result<FiniteGroup> {
    if j.table.len() != j.order {
        return Err(Error::InvalidGroup(
            "declared order does not match table".into(),
        ));
    }
    FiniteGroup::new(name, j.labels.clone(), j.table.clone())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessJson {
    pub w: Vec<RatJson>,
    pub v: Vec<RatJson>,
}

pub fn witness_to_json(p: &WitnessPair) -> WitnessJson {
    WitnessJson {
        w: rat_vec_to_json(&p.w),
        v: rat_vec_to_json(&p.v),
    }
}

pub fn witness_from_json(j: &WitnessJson) -> Result<WitnessPair> {
    Ok(WitnessPair {
        w: rat_vec_from_json(&j.w)?,
        v: rat_vec_from_json(&j.v)?,
    })
}

pub fn points_to_json(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    points.to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn rational_roundtrip() {
        for x in [rat(-7, 3), rat(0, 1), rat(123456789, 987654321)] {
            let j = rat_to_json(&x);
            assert_eq!(rat_from_json(&j).unwrap(), x);
        }
        let j = serde_json::to_string(&rat_to_json(&rat(-7, 3))).unwrap();
        assert_eq!(j, r#"{"n":"-7","d":"3"}"#);
    }

    #[test]
    fn pencil_roundtrip() {
        let m = RatMatrix::from_i64_rows(&[vec![2, 3], vec![4, 6]]).unwrap();
        let p = MatrixPencil::new(2, 2, vec![("log2".into(), m)]).unwrap();
        let j = pencil_to_json(&p);
        let back = pencil_from_json(&j).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn laurent_roundtrip_and_inference() {
        let p =
            LaurentPoly::from_terms(2, vec![(vec![1, -2], rat(3, 4)), (vec![0, 0], rat(-1, 1))])
                .unwrap();
        let j = laurent_to_json(&p);
        assert_eq!(laurent_from_json(&j, None).unwrap(), p);
        assert!(laurent_from_json(&Vec::new(), None).is_err());
        assert!(laurent_from_json(&Vec::new(), Some(2)).unwrap().is_zero());
    }

    #[test]
    fn padic_roundtrip() {
        let x = Padic::from_rat(5, &rat(7, 2), 8).unwrap();
        let j = padic_to_json(&x);
        let back = padic_from_json(&j).unwrap();
        assert_eq!(x, back);
        let z = Padic::zero_at(5, 6);
        let jz = padic_to_json(&z);
        assert_eq!(jz.unit, "0");
        assert_eq!(padic_from_json(&jz).unwrap(), z);
    }

    #[test]
    fn group_roundtrip() {
        let g = crate::groups::symmetric(3);
        let j = group_to_json(&g);
        let back = group_from_json("S3", &j).unwrap();
        assert_eq!(back.order(), 6);
        assert_eq!(back.table(), g.table());
    }

    #[test]
    fn multgroup_roundtrip() {
        let x = MultGroup::from_rats(&[vec![rat(2, 1), rat(-3, 5)], vec![rat(7, 2), rat(1, 1)]])
            .unwrap();
        let j = multgroup_to_json(&x);
        let back = multgroup_from_json(&j).unwrap();
        assert_eq!(x.gens(), back.gens());
    }
}
