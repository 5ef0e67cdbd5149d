//! JSON-lines records: one solution per line, then a summary line.

use serde::Serialize;
use serde_json::Value;

use crate::modmat::GroupSpec;
use crate::ybkernel::format::{permutation_to_value, solution_to_value};
use crate::ybkernel::CheckSet;

use super::{HuntError, LinearPair, SetCensus};

/// Closing record of a search. `count_canonical` is only defined for the
/// permutation census. `elapsed` is wall-clock seconds and may be left out
/// to make output reproducible byte for byte.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub checks: Vec<&'static str>,
    pub count_canonical: Option<usize>,
    pub count_raw: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<f64>,
}

impl Summary {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }
}

/// Each pair completed to a full solution, in search order.
pub fn linear_lines(group: GroupSpec, pairs: &[LinearPair]) -> Result<Vec<String>, HuntError> {
    pairs
        .iter()
        .map(|p| {
            let s = p.complete(group)?.into_affine();
            Ok(solution_to_value(&s).to_string())
        })
        .collect()
}

pub fn linear_summary(pairs: &[LinearPair], elapsed: Option<f64>) -> Summary {
    Summary {
        checks: CheckSet::ALL.names(),
        count_canonical: None,
        count_raw: pairs.len(),
        elapsed,
    }
}

/// Each raw permutation with the index of its relabeling class.
pub fn census_lines(census: &SetCensus) -> Vec<String> {
    census
        .raw
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = permutation_to_value(r);
            v["class"] = Value::from(census.class_of(i));
            v.to_string()
        })
        .collect()
}

pub fn census_summary(census: &SetCensus, elapsed: Option<f64>) -> Summary {
    Summary {
        checks: census.checks.names(),
        count_canonical: Some(census.canonical.len()),
        count_raw: census.raw.len(),
        elapsed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hunt::{enumerate_linear, enumerate_set_theoretic, SearchConfig};

    #[test]
    fn linear_records() {
        let cfg = SearchConfig::default();
        let pairs = enumerate_linear(2, 1, &cfg).unwrap();
        let g = GroupSpec::new(2, 1).unwrap();
        assert_eq!(
            linear_lines(g, &pairs).unwrap(),
            vec![r#"{"a":[[0]],"b":[[1]],"c":[[1]],"d":[[0]],"group":{"mod":2,"rank":1},"t":[0],"z":[0]}"#]
        );
        assert_eq!(
            linear_summary(&pairs, None).to_line(),
            r#"{"checks":["qybe","unitarity","crossing"],"count_canonical":null,"count_raw":1}"#
        );
    }

    #[test]
    fn census_records() {
        let c = enumerate_set_theoretic(2, &SearchConfig::default()).unwrap();
        assert_eq!(
            census_lines(&c),
            vec![
                r#"{"class":0,"order":2,"table":[0,1,2,3]}"#,
                r#"{"class":1,"order":2,"table":[3,2,1,0]}"#
            ]
        );
        let s = census_summary(&c, Some(0.5)).to_line();
        assert_eq!(
            s,
            r#"{"checks":["qybe","unitarity","crossing"],"count_canonical":2,"count_raw":2,"elapsed":0.5}"#
        );
    }
}
