//! Solution JSON and the permutation text format.
//!
//! A solution is `{"group": {"mod": m, "rank": N}, "a", "b", "c", "d", "z",
//! "t"}` where `c`, `d`, `z`, `t` may be omitted and are then completed.
//! Output is compact with sorted keys, so equal solutions serialize to equal
//! bytes.
//!
//! A permutation is written one pair per line,
//! `x1,...,xN y1,...,yN -> p1,...,pN q1,...,qN`, in lexicographic order of
//! `(x, y)`.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::modmat::literal::{matrix_from_json, matrix_to_json, ring_from_json, vector_from_json};
use crate::modmat::{GroupSpec, Matrix, MatrixError};

use super::solution::check_vector;
use super::{affine_translation, complete_solution, AffineSolution, KernelError, LinearSolution, PermutationMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed input: {0}")]
    Malformed(String),
    /// The input is well formed but cannot be completed to a solution.
    #[error("cannot complete solution: {0}")]
    Incomplete(KernelError),
}

impl From<MatrixError> for FormatError {
    fn from(e: MatrixError) -> Self {
        FormatError::Malformed(e.to_string())
    }
}

fn malformed(msg: impl Into<String>) -> FormatError {
    FormatError::Malformed(msg.into())
}

fn shape(e: KernelError) -> FormatError {
    match e {
        KernelError::NotInvertible(_) | KernelError::Eq13Violation => FormatError::Incomplete(e),
        other => FormatError::Malformed(other.to_string()),
    }
}

pub fn group_from_json(v: &Value) -> Result<GroupSpec, FormatError> {
    let obj = v.as_object().ok_or_else(|| malformed("\"group\" must be an object"))?;
    if let Some(k) = obj.keys().find(|k| *k != "mod" && *k != "rank") {
        return Err(malformed(format!("unknown group field \"{k}\"")));
    }
    let field = |k: &str| {
        obj.get(k)
            .and_then(Value::as_u64)
            .ok_or_else(|| malformed(format!("group needs a nonnegative integer \"{k}\"")))
    };
    Ok(GroupSpec::new(field("mod")?, field("rank")? as usize)?)
}

fn parse_object(text: &str) -> Result<Map<String, Value>, FormatError> {
    let v: Value = serde_json::from_str(text).map_err(|e| malformed(e.to_string()))?;
    match v {
        Value::Object(m) => Ok(m),
        _ => Err(malformed("expected a JSON object")),
    }
}

const SOLUTION_KEYS: [&str; 7] = ["group", "a", "b", "c", "d", "z", "t"];

/// Parses a solution, completing whatever was left out. Given `c` and `d`
/// are taken as they are; verification is a separate step.
pub fn parse_solution(text: &str) -> Result<AffineSolution, FormatError> {
    let obj = parse_object(text)?;
    if let Some(k) = obj.keys().find(|k| !SOLUTION_KEYS.contains(&k.as_str())) {
        return Err(malformed(format!("unknown field \"{k}\"")));
    }
    let group = group_from_json(obj.get("group").ok_or_else(|| malformed("missing \"group\""))?)?;
    let ring = group.ring();
    let matrix = |k: &str| -> Result<Option<Matrix>, FormatError> {
        obj.get(k).map(|v| matrix_from_json(ring, v)).transpose().map_err(FormatError::from)
    };
    let vector = |k: &str| -> Result<Option<Vec<i64>>, FormatError> {
        match obj.get(k) {
            None => Ok(None),
            Some(v) => Ok(Some(check_vector(&group, &vector_from_json(v)?, k).map_err(shape)?)),
        }
    };
    let a = matrix("a")?.ok_or_else(|| malformed("missing \"a\""))?;
    let b = matrix("b")?.ok_or_else(|| malformed("missing \"b\""))?;
    let linear = match (matrix("c")?, matrix("d")?) {
        (Some(c), Some(d)) => LinearSolution::new(group, a, b, c, d).map_err(shape)?,
        (None, None) => complete_solution(group, &a, &b).map_err(shape)?,
        _ => return Err(malformed("give both \"c\" and \"d\" or neither")),
    };
    let zero = vec![0; group.rank()];
    let (z, t) = match (vector("z")?, vector("t")?) {
        (z, Some(t)) => (z.unwrap_or(zero), t),
        (Some(z), None) => {
            let t = affine_translation(group, &linear.a, &linear.b, &z).map_err(shape)?;
            (z, t)
        }
        (None, None) => (zero.clone(), zero),
    };
    linear.with_translation(&z, &t).map_err(shape)
}

pub fn solution_to_value(s: &AffineSolution) -> Value {
    let l = &s.linear;
    json!({
        "group": {"mod": l.group.modulus(), "rank": l.group.rank()},
        "a": matrix_to_json(&l.a),
        "b": matrix_to_json(&l.b),
        "c": matrix_to_json(&l.c),
        "d": matrix_to_json(&l.d),
        "z": s.z,
        "t": s.t,
    })
}

/// Compact JSON with sorted keys.
pub fn render_solution(s: &AffineSolution) -> String {
    solution_to_value(s).to_string()
}

/// A pair `(a, b)` over an arbitrary ring, for classification:
/// `{"ring": {"mod": m} | {"ring": "Z"}, "a": ..., "b": ...}` with `b`
/// optional. A solution file is accepted as well.
pub fn parse_pair(text: &str) -> Result<(Matrix, Option<Matrix>), FormatError> {
    let obj = parse_object(text)?;
    let ring = match (obj.get("ring"), obj.get("group")) {
        (Some(r), None) => ring_from_json(r)?,
        (None, Some(g)) => group_from_json(g)?.ring(),
        _ => return Err(malformed("give exactly one of \"ring\" and \"group\"")),
    };
    let a = matrix_from_json(ring, obj.get("a").ok_or_else(|| malformed("missing \"a\""))?)?;
    let b = obj.get("b").map(|v| matrix_from_json(ring, v)).transpose()?;
    if !a.is_square() || b.as_ref().is_some_and(|b| (b.rows(), b.cols()) != (a.rows(), a.cols())) {
        return Err(malformed("\"a\" and \"b\" must be square of the same size"));
    }
    Ok((a, b))
}

fn render_label(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

pub fn render_permutation(r: &PermutationMap) -> String {
    let n = r.order();
    let mut out = String::new();
    for x in 0..n {
        for y in 0..n {
            let (p, q) = r.apply(x, y);
            out.push_str(&format!(
                "{} {} -> {} {}\n",
                render_label(&r.label(x)),
                render_label(&r.label(y)),
                render_label(&r.label(p)),
                render_label(&r.label(q)),
            ));
        }
    }
    out
}

fn parse_label(s: &str) -> Result<Vec<i64>, FormatError> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| malformed(format!("bad label \"{s}\""))))
        .collect()
}

/// Parses the text format. Lines may come in any order; blank lines are
/// ignored. Without a group the labels must be `0..n-1`.
pub fn parse_permutation(text: &str, group: Option<GroupSpec>) -> Result<PermutationMap, FormatError> {
    let mut lines = Vec::new();
    for (no, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| malformed(format!("line {}: missing \"->\"", no + 1)))?;
        let two = |side: &str| -> Result<[Vec<i64>; 2], FormatError> {
            let parts: Vec<&str> = side.split_whitespace().collect();
            match parts.as_slice() {
                [u, v] => Ok([parse_label(u)?, parse_label(v)?]),
                _ => Err(malformed(format!("line {}: expected two elements per side", no + 1))),
            }
        };
        lines.push((two(lhs)?, two(rhs)?));
    }
    let order = match group {
        Some(g) => g.order().ok_or_else(|| malformed("group too large"))?,
        None => (1..=lines.len()).find(|k| k * k >= lines.len()).unwrap_or(0),
    };
    if order == 0 || lines.len() != order * order {
        return Err(malformed(format!(
            "{} lines do not describe a map of X×X",
            lines.len()
        )));
    }
    let index = |l: &[i64]| -> Result<usize, FormatError> {
        let ok = match group {
            Some(g) => {
                l.len() == g.rank() && l.iter().all(|&v| v >= 0 && (v as u64) < g.modulus())
            }
            None => l.len() == 1 && l[0] >= 0 && (l[0] as usize) < order,
        };
        if !ok {
            return Err(malformed(format!("label {l:?} is not an element")));
        }
        Ok(match group {
            Some(g) => g.index_of(l),
            None => l[0] as usize,
        })
    };
    let mut table = vec![None; order * order];
    for ([x, y], [p, q]) in &lines {
        let slot = &mut table[index(x)? * order + index(y)?];
        if slot.is_some() {
            return Err(malformed(format!("pair {x:?} {y:?} appears twice")));
        }
        *slot = Some((index(p)? * order + index(q)?) as u32);
    }
    let table = table.into_iter().map(|v| v.expect("every pair was filled")).collect();
    PermutationMap::from_table(order, group, table).map_err(|e| malformed(e.to_string()))
}

/// `{"order": n, "table": [...]}`, plus `"group"` when the set carries one.
pub fn permutation_to_value(r: &PermutationMap) -> Value {
    let mut v = json!({ "order": r.order(), "table": r.table() });
    if let Some(g) = r.group() {
        v["group"] = json!({"mod": g.modulus(), "rank": g.rank()});
    }
    v
}
