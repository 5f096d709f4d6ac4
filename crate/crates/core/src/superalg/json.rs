//! Interchange format for algebras and graded linear maps.
//!
//! Coefficients travel as canonical exact strings ("3", "-2/7", a residue
//! mod p), struct fields keep declaration order and coefficient maps are
//! keyed by basis index in a BTreeMap, so equal values always serialize to
//! byte-identical JSON. Bracket entries are stored only for left <= right;
//! the other triangle is implied by graded skew-symmetry.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::field::{Field, Scalar};
use crate::exactlin::matrix::Matrix;
use crate::exactlin::subspace::GradedDim;
use crate::superalg::algebra::SuperAlgebra;
use crate::superalg::maps::GradedLinearMap;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldDoc {
    Name(String),
    Prime { p: u64 },
}

impl FieldDoc {
    pub fn of(field: Field) -> FieldDoc {
        match field {
            Field::Rationals => FieldDoc::Name("Q".into()),
            Field::Prime(p) => FieldDoc::Prime { p },
        }
    }

    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldDoc::Name(n) if n == "Q" => Ok(Field::Rationals),
            FieldDoc::Name(n) => Err(Error::Parse(format!(
                "unknown field {n:?}; use \"Q\" or {{\"p\": <prime>}}"
            ))),
            FieldDoc::Prime { p } => Field::prime(*p),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimDoc {
    pub even: usize,
    pub odd: usize,
}

impl DimDoc {
    pub fn of(dim: GradedDim) -> DimDoc {
        DimDoc {
            even: dim.even,
            odd: dim.odd,
        }
    }

    pub fn to_dim(self) -> GradedDim {
        GradedDim::new(self.even, self.odd)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntryDoc {
    pub left: usize,
    pub right: usize,
    /// basis index -> coefficient string
    pub value: BTreeMap<usize, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub field: FieldDoc,
    pub dim: DimDoc,
    pub names: Vec<String>,
    pub brackets: Vec<BracketEntryDoc>,
}

pub fn algebra_to_doc(name: &str, a: &SuperAlgebra) -> Result<AlgebraDoc> {
    if !a.validation().skew_violations.is_empty() {
        return Err(Error::Defect(
            "tensor breaks graded skew-symmetry and cannot use triangular storage".into(),
        ));
    }
    let f = a.field();
    let d = a.total_dim();
    let mut brackets = Vec::new();
    for i in 0..d {
        for j in i..d {
            let row = a.bracket_basis(i, j);
            let mut value = BTreeMap::new();
            for (k, c) in row.iter().enumerate() {
                if !f.is_zero(c) {
                    value.insert(k, f.format_scalar(c));
                }
            }
            if !value.is_empty() {
                brackets.push(BracketEntryDoc {
                    left: i,
                    right: j,
                    value,
                });
            }
        }
    }
    Ok(AlgebraDoc {
        name: name.to_string(),
        field: FieldDoc::of(f),
        dim: DimDoc::of(a.dim()),
        names: a.names().to_vec(),
        brackets,
    })
}

pub fn algebra_from_doc(doc: &AlgebraDoc) -> Result<(String, SuperAlgebra)> {
    let field = doc.field.to_field()?;
    let dim = doc.dim.to_dim();
    let d = dim.total();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut entries = Vec::with_capacity(doc.brackets.len());
    for e in &doc.brackets {
        if !seen.insert((e.left, e.right)) {
            return Err(Error::Parse(format!(
                "duplicate bracket entry ({}, {})",
                e.left, e.right
            )));
        }
        let mut value = Vec::with_capacity(e.value.len());
        for (k, s) in &e.value {
            if *k >= d {
                return Err(Error::Parse(format!(
                    "bracket target {k} out of range for dimension {d}"
                )));
            }
            value.push((*k, field.parse_scalar(s)?));
        }
        entries.push((e.left, e.right, value));
    }
    let algebra = SuperAlgebra::from_bracket_entries(field, dim, doc.names.clone(), &entries)?;
    Ok((doc.name.clone(), algebra))
}

pub fn algebra_to_json(name: &str, a: &SuperAlgebra) -> Result<String> {
    let doc = algebra_to_doc(name, a)?;
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Parse(e.to_string()))
}

pub fn algebra_from_json(s: &str) -> Result<(String, SuperAlgebra)> {
    let doc: AlgebraDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    algebra_from_doc(&doc)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub source: DimDoc,
    pub target: DimDoc,
    /// row i is the image of the i-th source basis vector
    pub rows: Vec<Vec<String>>,
}

pub fn map_to_doc(m: &GradedLinearMap) -> MapDoc {
    let f = m.field();
    MapDoc {
        source: DimDoc::of(m.source()),
        target: DimDoc::of(m.target()),
        rows: m
            .matrix()
            .row_vecs()
            .iter()
            .map(|r| r.iter().map(|c| f.format_scalar(c)).collect())
            .collect(),
    }
}

pub fn map_from_doc(field: Field, doc: &MapDoc) -> Result<GradedLinearMap> {
    let target = doc.target.to_dim();
    let rows: Vec<Vec<Scalar>> = doc
        .rows
        .iter()
        .map(|r| r.iter().map(|s| field.parse_scalar(s)).collect())
        .collect::<Result<_>>()?;
    let matrix = Matrix::from_rows(field, target.total(), &rows)?;
    GradedLinearMap::new(doc.source.to_dim(), target, matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn algebra_round_trip_is_byte_identical() {
        for name in ["paper-L", "paper-M", "gf5-solvable-2-1", "sl2"] {
            let a = catalog::get(name).unwrap();
            let json = algebra_to_json(name, &a).unwrap();
            let (n2, b) = algebra_from_json(&json).unwrap();
            assert_eq!(n2, name);
            assert_eq!(a, b);
            assert_eq!(algebra_to_json(&n2, &b).unwrap(), json);
        }
    }

    #[test]
    fn rational_coefficients_round_trip_exactly() {
        let f = Field::Rationals;
        let a = SuperAlgebra::from_bracket_entries(
            f,
            GradedDim::new(2, 1),
            crate::superalg::algebra::standard_names(3),
            &[(0, 1, vec![(0, f.parse_scalar("-22/7").unwrap())])],
        )
        .unwrap();
        let json = algebra_to_json("t", &a).unwrap();
        assert!(json.contains("-22/7"));
        let (_, b) = algebra_from_json(&json).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_malformed_documents() {
        let base = r#"{
            "name": "t", "field": "Q", "dim": {"even": 1, "odd": 1},
            "names": ["a", "b"],
            "brackets": [{"left": 1, "right": 1, "value": {"0": "1"}}]
        }"#;
        assert!(algebra_from_json(base).is_ok());

        let dup = base.replace(
            r#"[{"left": 1, "right": 1, "value": {"0": "1"}}]"#,
            r#"[{"left": 1, "right": 1, "value": {"0": "1"}},
                {"left": 1, "right": 1, "value": {"0": "2"}}]"#,
        );
        assert!(algebra_from_json(&dup).is_err());

        let bad_field = base.replace("\"Q\"", "\"R\"");
        assert!(algebra_from_json(&bad_field).is_err());

        let bad_coeff = base.replace("\"1\"}", "\"one\"}");
        assert!(algebra_from_json(&bad_coeff).is_err());

        let out_of_range = base.replace(r#"{"0": "1"}"#, r#"{"7": "1"}"#);
        assert!(algebra_from_json(&out_of_range).is_err());

        let even_diag = base.replace(r#""left": 1, "right": 1"#, r#""left": 0, "right": 0"#);
        assert!(algebra_from_json(&even_diag).is_err());

        let unknown_key = base.replace(r#""name": "t","#, r#""name": "t", "extra": 1,"#);
        assert!(algebra_from_json(&unknown_key).is_err());
    }

    #[test]
    fn prime_field_documents_reduce_mod_p() {
        let json = r#"{
            "name": "t", "field": {"p": 5}, "dim": {"even": 2, "odd": 0},
            "names": ["a", "b"],
            "brackets": [{"left": 0, "right": 1, "value": {"0": "7"}}]
        }"#;
        let (_, a) = algebra_from_json(json).unwrap();
        let f = a.field();
        assert_eq!(f.format_scalar(a.constant(0, 1, 0)), "2");
        // rejects a denominator divisible by p
        let bad = json.replace("\"7\"", "\"1/5\"");
        assert!(algebra_from_json(&bad).is_err());
    }

    #[test]
    fn map_round_trip() {
        let m = catalog::get("paper-M").unwrap();
        let q = m.central_quotient();
        let doc = map_to_doc(&q.projection);
        let back = map_from_doc(m.field(), &doc).unwrap();
        assert_eq!(back, q.projection);
        let s1 = serde_json::to_string(&doc).unwrap();
        let s2 = serde_json::to_string(&map_to_doc(&back)).unwrap();
        assert_eq!(s1, s2);
    }
}
