//! JSON serialization of algebra elements, matrices, and table rows.
//!
//! Schema, shared by the whole crate:
//!
//! * rationals are strings `"num/den"` in lowest terms with positive
//!   denominator (`"num"` alone when the denominator is 1);
//! * a scalar of ℚ(q) is `{"r0": "...", "r1": "..."}` — the coordinates on
//!   `1` and `q`;
//! * an element is `{"algebra": NAME, "coeffs": [scalar, ...]}` with one
//!   scalar per basis slot in the frozen basis order; Ω elements carry an
//!   additional `"degrees"` array tagging each slot with its form degree;
//! * a matrix is `{"cols": c, "entries": [[scalar, ...], ...], "rows": r}`.
//!
//! Objects serialize with their keys in sorted order, so identical data
//! always produces byte-identical output. Every number is exact; nothing
//! is ever rendered as floating point.

use serde_json::{Map, Value};

use crate::expr::{AlgElem, Algebra};
use crate::linalg::Mat;
use crate::scalar::Scalar;
use crate::wz_forms;

/// `{"r0": ..., "r1": ...}` for one scalar.
pub fn scalar_to_value(c: &Scalar) -> Value {
    serde_json::to_value(c).expect("scalar serialization is infallible")
}

pub fn scalar_from_value(v: &Value) -> Result<Scalar, String> {
    serde_json::from_value(v.clone()).map_err(|e| format!("invalid scalar: {e}"))
}

/// `{"algebra": ..., "coeffs": [...]}` (plus `"degrees"` for Ω).
pub fn element_to_value(e: &AlgElem) -> Value {
    let mut obj = Map::new();
    obj.insert("algebra".into(), Value::String(e.algebra.name().into()));
    obj.insert(
        "coeffs".into(),
        Value::Array(e.coeffs.iter().map(scalar_to_value).collect()),
    );
    if e.algebra == Algebra::WZ {
        let degrees = (0..wz_forms::DIM)
            .map(|i| Value::from(wz_forms::decode(i).0))
            .collect();
        obj.insert("degrees".into(), Value::Array(degrees));
    }
    Value::Object(obj)
}

pub fn element_from_value(v: &Value) -> Result<AlgElem, String> {
    let obj = v.as_object().ok_or("element must be a JSON object")?;
    let name = obj
        .get("algebra")
        .and_then(Value::as_str)
        .ok_or("missing \"algebra\" name")?;
    let algebra = Algebra::by_name(name)
        .ok_or_else(|| format!("unknown algebra {name:?} (expected M, F, H, or WZ)"))?;
    let coeffs = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or("missing \"coeffs\" array")?;
    if coeffs.len() != algebra.dim() {
        return Err(format!(
            "algebra {name} has dimension {}, got {} coefficients",
            algebra.dim(),
            coeffs.len()
        ));
    }
    let coeffs = coeffs
        .iter()
        .map(scalar_from_value)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlgElem::new(algebra, coeffs))
}

/// `{"cols": ..., "entries": [[...]], "rows": ...}` for an exact matrix.
pub fn matrix_to_value(m: &Mat<Scalar>) -> Value {
    let mut obj = Map::new();
    obj.insert("cols".into(), Value::from(m.cols));
    let entries: Vec<Value> = (0..m.rows)
        .map(|i| Value::Array((0..m.cols).map(|j| scalar_to_value(&m[(i, j)])).collect()))
        .collect();
    obj.insert("entries".into(), Value::Array(entries));
    obj.insert("rows".into(), Value::from(m.rows));
    Value::Object(obj)
}

pub fn matrix_from_value(v: &Value) -> Result<Mat<Scalar>, String> {
    let obj = v.as_object().ok_or("matrix must be a JSON object")?;
    let rows = obj
        .get("rows")
        .and_then(Value::as_u64)
        .ok_or("missing \"rows\"")? as usize;
    let cols = obj
        .get("cols")
        .and_then(Value::as_u64)
        .ok_or("missing \"cols\"")? as usize;
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or("missing \"entries\"")?;
    if entries.len() != rows {
        return Err(format!("expected {rows} rows, got {}", entries.len()));
    }
    let mut m = Mat::zeros(rows, cols);
    for (i, row) in entries.iter().enumerate() {
        let row = row.as_array().ok_or("matrix row must be an array")?;
        if row.len() != cols {
            return Err(format!("row {i}: expected {cols} entries, got {}", row.len()));
        }
        for (j, cell) in row.iter().enumerate() {
            m[(i, j)] = scalar_from_value(cell)?;
        }
    }
    Ok(m)
}

/// Pretty-printed JSON document with a trailing newline (the export file
/// format). Key order inside objects is sorted, so the bytes are a pure
/// function of the data.
pub fn to_document(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON rendering is infallible");
    s.push('\n');
    s
}

pub fn from_document(s: &str) -> Result<Value, String> {
    serde_json::from_str(s).map_err(|e| format!("invalid JSON: {e}"))
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr;
    use crate::scalar::qq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn elements_round_trip_and_match_the_frozen_shape() {
        let x = expr::parse("x", Algebra::M).unwrap();
        let v = element_to_value(&x);
        // The single unit coefficient sits at slot (1,0) = index 3.
        assert_eq!(v["algebra"], "M");
        let coeffs = v["coeffs"].as_array().unwrap();
        assert_eq!(coeffs.len(), 9);
        for (i, c) in coeffs.iter().enumerate() {
            if i == 3 {
                assert_eq!(c["r0"], "1");
                assert_eq!(c["r1"], "0");
            } else {
                assert_eq!(c["r0"], "0");
                assert_eq!(c["r1"], "0");
            }
        }
        assert_eq!(element_from_value(&v).unwrap(), x);

        // Rationals print in lowest terms with positive denominator.
        let e = AlgElem::scalar(Algebra::M, &Scalar::new(qq(-4, 6), qq(3, 1)));
        let v = element_to_value(&e);
        assert_eq!(v["coeffs"][0]["r0"], "-2/3");
        assert_eq!(v["coeffs"][0]["r1"], "3");
        assert_eq!(element_from_value(&v).unwrap(), e);
    }

    #[test]
    fn omega_elements_carry_degree_tags() {
        let u = expr::parse("1 + x dx + y^2 dx dy", Algebra::WZ).unwrap();
        let v = element_to_value(&u);
        let degrees: Vec<u64> = v["degrees"]
            .as_array()
            .unwrap()
            .iter()
            .map(|d| d.as_u64().unwrap())
            .collect();
        let expected: Vec<u64> = (0..36)
            .map(|i| match i {
                0..=8 => 0,
                9..=26 => 1,
                _ => 2,
            })
            .collect();
        assert_eq!(degrees, expected);
        assert_eq!(element_from_value(&v).unwrap(), u);
    }

    #[test]
    fn random_elements_round_trip_in_every_algebra() {
        let mut rng = ChaCha8Rng::seed_from_u64(20260815);
        for alg in Algebra::ALL {
            for _ in 0..50 {
                let coeffs: Vec<Scalar> = (0..alg.dim())
                    .map(|_| {
                        Scalar::new(
                            qq(rng.gen_range(-9..=9), rng.gen_range(1..=5)),
                            qq(rng.gen_range(-9..=9), rng.gen_range(1..=5)),
                        )
                    })
                    .collect();
                let e = AlgElem::new(alg, coeffs);
                let doc = to_document(&element_to_value(&e));
                let back = element_from_value(&from_document(&doc).unwrap()).unwrap();
                assert_eq!(back, e);
                // Determinism: serializing again yields identical bytes.
                assert_eq!(to_document(&element_to_value(&back)), doc);
            }
        }
    }

    #[test]
    fn matrices_round_trip() {
        let m = Mat::from_fn(3, 2, |i, j| {
            Scalar::new(qq((i * 2 + j) as i64, 3), qq(1, (i + j + 1) as i64))
        });
        let v = matrix_to_value(&m);
        assert_eq!(matrix_from_value(&v).unwrap(), m);
        assert!(matrix_from_value(&serde_json::json!({"rows": 1})).is_err());
    }

    #[test]
    fn malformed_documents_are_rejected_with_reasons() {
        let bad = serde_json::json!({"algebra": "Z", "coeffs": []});
        assert!(element_from_value(&bad).unwrap_err().contains("unknown algebra"));
        let bad = serde_json::json!({"algebra": "M", "coeffs": [1, 2]});
        assert!(element_from_value(&bad).unwrap_err().contains("dimension"));
        assert!(from_document("{not json").is_err());
    }
}
