//! JSON interchange for algebras and matched pairs.
//!
//! Scalars are strings (`"3"`, `"-1/2"`). Sparse tensors are lists of
//! `[i, j, k, "c"]` entries; the antipode is a list of matrix rows, so
//! `antipode[i][j]` is the coefficient of `e_i` in `S(e_j)`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{HopfAlgebra, StructureConstants};
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::matched_pair::{Action, MatchedPair, Side};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldJson {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl FieldJson {
    pub fn from_field(f: Field) -> Self {
        match f {
            Field::Rational => FieldJson::Named("Q".into()),
            Field::Prime(p) => FieldJson::Prime { fp: p },
        }
    }

    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldJson::Named(s) => s.parse(),
            FieldJson::Prime { fp } => Field::prime(*fp),
        }
    }
}

pub type SparseEntry = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfJson {
    pub field: FieldJson,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<SparseEntry>,
    pub unit: Vec<String>,
    pub comult: Vec<SparseEntry>,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub a: HopfJson,
    pub h: HopfJson,
    /// `h ⊳ a` entries `[h, a, k, "c"]`.
    pub left: Vec<SparseEntry>,
    /// `h ⊲ a` entries `[h, a, k, "c"]`.
    pub right: Vec<SparseEntry>,
}

fn sparse(t: &Tensor3) -> Vec<SparseEntry> {
    t.support().map(|(i, j, k, c)| (i, j, k, c.to_string())).collect()
}

fn dense(field: Field, dims: [usize; 3], entries: &[SparseEntry]) -> Result<Tensor3> {
    let mut t = Tensor3::zeros(field, dims);
    for (i, j, k, c) in entries {
        if *i >= dims[0] || *j >= dims[1] || *k >= dims[2] {
            return Err(Error::Dimension(format!("entry [{i}, {j}, {k}] outside {dims:?}")));
        }
        t.add_at(*i, *j, *k, &field.parse(c)?);
    }
    Ok(t)
}

fn strings(v: &Vector) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn vector(field: Field, n: usize, what: &str, v: &[String]) -> Result<Vector> {
    if v.len() != n {
        return Err(Error::Dimension(format!("{what} has length {}, expected {n}", v.len())));
    }
    Vector::from_scalars(field, v.iter().map(|s| field.parse(s)).collect::<Result<_>>()?)
}

pub fn hopf_to_json(h: &HopfAlgebra) -> HopfJson {
    let s = h.structure();
    HopfJson {
        field: FieldJson::from_field(h.field()),
        dim: h.dim(),
        basis: h.basis_names().to_vec(),
        mult: sparse(&s.mult),
        unit: strings(&s.unit),
        comult: sparse(&s.comult),
        counit: strings(&s.counit),
        antipode: s.antipode.row_vectors().iter().map(strings).collect(),
    }
}

/// Parses and validates dimensions; the Hopf axioms are not checked here.
pub fn hopf_from_json(j: &HopfJson) -> Result<HopfAlgebra> {
    let field = j.field.to_field()?;
    let n = j.dim;
    if j.basis.len() != n {
        return Err(Error::Dimension(format!("{} basis names for dimension {n}", j.basis.len())));
    }
    if j.antipode.len() != n {
        return Err(Error::Dimension(format!("antipode has {} rows, expected {n}", j.antipode.len())));
    }
    let rows = j
        .antipode
        .iter()
        .map(|r| vector(field, n, "antipode row", r).map(Vector::into_coeffs))
        .collect::<Result<Vec<_>>>()?;
    let sc = StructureConstants {
        mult: dense(field, [n; 3], &j.mult)?,
        unit: vector(field, n, "unit", &j.unit)?,
        comult: dense(field, [n; 3], &j.comult)?,
        counit: vector(field, n, "counit", &j.counit)?,
        antipode: Matrix::from_rows(field, rows)?,
    };
    HopfAlgebra::new(field, j.basis.clone(), sc)
}

pub fn hopf_to_string(h: &HopfAlgebra) -> String {
    serde_json::to_string_pretty(&hopf_to_json(h)).expect("serializable")
}

pub fn hopf_from_str(s: &str) -> Result<HopfAlgebra> {
    hopf_from_json(&serde_json::from_str(s)?)
}

pub fn pair_to_json(p: &MatchedPair) -> PairJson {
    PairJson {
        a: hopf_to_json(p.a()),
        h: hopf_to_json(p.h()),
        left: sparse(p.left().table()),
        right: sparse(p.right().table()),
    }
}

/// Parses a pair; it is returned unverified.
pub fn pair_from_json(j: &PairJson) -> Result<MatchedPair> {
    let a = Arc::new(hopf_from_json(&j.a)?.verified()?);
    let h = Arc::new(hopf_from_json(&j.h)?.verified()?);
    if a.field() != h.field() {
        return Err(Error::FieldMismatch(a.field(), h.field()));
    }
    let f = a.field();
    let left = Action::new(Side::Left, h.clone(), a.clone(), dense(f, [h.dim(), a.dim(), a.dim()], &j.left)?)?;
    let right = Action::new(Side::Right, h.clone(), a.clone(), dense(f, [h.dim(), a.dim(), h.dim()], &j.right)?)?;
    MatchedPair::new(left, right)
}

pub fn pair_to_string(p: &MatchedPair) -> String {
    serde_json::to_string_pretty(&pair_to_json(p)).expect("serializable")
}

pub fn pair_from_str(s: &str) -> Result<MatchedPair> {
    pair_from_json(&serde_json::from_str(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matched_pair::canonical_pair;
    use crate::presets::sweedler_h4;

    #[test]
    fn algebra_round_trip() {
        for f in [Field::rationals(), Field::prime(7).unwrap()] {
            let h = sweedler_h4(f).unwrap();
            let back = hopf_from_str(&hopf_to_string(&h)).unwrap();
            assert_eq!(back, h);
        }
    }

    #[test]
    fn field_encoding() {
        let j = hopf_to_json(&sweedler_h4(Field::prime(5).unwrap()).unwrap());
        let v = serde_json::to_value(&j).unwrap();
        assert_eq!(v["field"], serde_json::json!({"Fp": 5}));
        let j = hopf_to_json(&sweedler_h4(Field::rationals()).unwrap());
        assert_eq!(serde_json::to_value(&j).unwrap()["field"], "Q");
    }

    #[test]
    fn pair_round_trip() {
        let q = Field::rationals();
        let p = canonical_pair(q, &q.parse("1/2").unwrap()).unwrap();
        let back = pair_from_str(&pair_to_string(&p)).unwrap();
        assert!(!back.is_verified());
        assert_eq!(back.verify().unwrap(), p);
    }

    #[test]
    fn bad_dimensions_are_rejected() {
        let mut j = hopf_to_json(&sweedler_h4(Field::rationals()).unwrap());
        j.unit.pop();
        assert!(matches!(hopf_from_json(&j), Err(Error::Dimension(_))));
        let mut j = hopf_to_json(&sweedler_h4(Field::rationals()).unwrap());
        j.mult.push((9, 0, 0, "1".into()));
        assert!(hopf_from_json(&j).is_err());
    }
}
