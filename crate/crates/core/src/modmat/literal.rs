//! JSON forms: rings as `{"mod": m}` or `{"ring": "Z"}`, matrices as
//! row-major nested arrays such as `[[0,1],[0,0]]`.

use serde_json::{json, Value};

use super::{Matrix, MatrixError, Ring};

fn literal(msg: impl Into<String>) -> MatrixError {
    MatrixError::Literal(msg.into())
}

/// `{"mod": m}`, `{"ring": "Z"}` or the bare string `"Z"`.
pub fn ring_from_json(v: &Value) -> Result<Ring, MatrixError> {
    if v.as_str() == Some("Z") {
        return Ok(Ring::Integers);
    }
    let obj = v.as_object().ok_or_else(|| literal("ring must be an object"))?;
    match (obj.get("mod"), obj.get("ring")) {
        (Some(m), None) if obj.len() == 1 => {
            let m = m.as_u64().ok_or_else(|| literal("\"mod\" must be a positive integer"))?;
            Ring::zmod(m)
        }
        (None, Some(Value::String(s))) if obj.len() == 1 && s == "Z" => Ok(Ring::Integers),
        _ => Err(literal(format!("unrecognized ring {v}"))),
    }
}

pub fn ring_to_json(r: Ring) -> Value {
    match r {
        Ring::Integers => json!({ "ring": "Z" }),
        Ring::Mod(m) => json!({ "mod": m }),
    }
}

pub fn vector_from_json(v: &Value) -> Result<Vec<i64>, MatrixError> {
    v.as_array()
        .ok_or_else(|| literal(format!("expected an array of integers, got {v}")))?
        .iter()
        .map(|e| e.as_i64().ok_or_else(|| literal(format!("{e} is not an integer"))))
        .collect()
}

/// Entries are reduced into the ring, so `[[-1]]` over `Z/5` is `[[4]]`.
pub fn matrix_from_json(ring: Ring, v: &Value) -> Result<Matrix, MatrixError> {
    let rows = v
        .as_array()
        .ok_or_else(|| literal(format!("expected nested arrays, got {v}")))?
        .iter()
        .map(vector_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(ring, rows)
}

/// Parses a literal such as `[[0,1],[0,0]]`.
pub fn parse_matrix(ring: Ring, text: &str) -> Result<Matrix, MatrixError> {
    let v: Value = serde_json::from_str(text).map_err(|e| literal(format!("{text}: {e}")))?;
    matrix_from_json(ring, &v)
}

pub fn parse_vector(text: &str) -> Result<Vec<i64>, MatrixError> {
    let v: Value = serde_json::from_str(text).map_err(|e| literal(format!("{text}: {e}")))?;
    vector_from_json(&v)
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::from(m.to_rows())
}
