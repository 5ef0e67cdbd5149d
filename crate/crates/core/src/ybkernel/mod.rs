//! Solution types, completion from `(a, b)` and verification of the braid
//! relation, unitarity and crossing symmetry.
//!
//! Every condition has two independent checkers: block identities in
//! `a, b, c, d` ([`algebraic`]) and direct evaluation on the explicit
//! permutation of `X×X` ([`setlevel`], [`crossing`]).

pub mod algebraic;
pub mod crossing;
pub mod format;
mod permutation;
mod report;
pub mod setlevel;
mod solution;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::modmat::MatrixError;

pub use algebraic::{
    verify_braid_affine, verify_braid_algebraic, verify_crossing_affine, verify_crossing_linear,
    verify_crossing_pointwise, verify_unitarity_affine, verify_unitarity_algebraic,
};
pub use crossing::verify_crossing_matrix;
pub use permutation::{to_permutation, PermutationMap, DEFAULT_CAP};
pub use report::{CheckOutcome, Element, VerificationReport, Witness};
pub use setlevel::{verify_qybe_set, verify_unitarity_set, witness_is_violation};
pub use solution::{
    affine_translation, check_eq13, complete_affine, complete_solution, AffineSolution,
    LinearSolution,
};

/// Which factor failed to be invertible during completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Singular {
    B,
    OneMinusASquared,
    AMinusOne,
}

impl fmt::Display for Singular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Singular::B => "b",
            Singular::OneMinusASquared => "1-a^2",
            Singular::AMinusOne => "a-1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("{0} is not invertible")]
    NotInvertible(Singular),
    #[error("(a, b) does not satisfy ab = ba + aba")]
    Eq13Violation,
    #[error("|X| = {order} exceeds the cap of {cap}")]
    GroupTooLarge { order: usize, cap: usize },
    #[error("map is not a bijection of X×X")]
    NotBijective,
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Subset of the three conditions to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CheckSet {
    pub qybe: bool,
    pub unitarity: bool,
    pub crossing: bool,
}

impl CheckSet {
    pub const ALL: CheckSet = CheckSet {
        qybe: true,
        unitarity: true,
        crossing: true,
    };

    pub fn names(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.qybe {
            out.push("qybe");
        }
        if self.unitarity {
            out.push("unitarity");
        }
        if self.crossing {
            out.push("crossing");
        }
        out
    }
}

impl FromStr for CheckSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut set = CheckSet {
            qybe: false,
            unitarity: false,
            crossing: false,
        };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "qybe" => set.qybe = true,
                "unitarity" => set.unitarity = true,
                "crossing" => set.crossing = true,
                other => return Err(format!("unknown check '{other}'")),
            }
        }
        Ok(set)
    }
}

impl fmt::Display for CheckSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names().join(","))
    }
}

fn crossing_note(report: &VerificationReport, checks: CheckSet) -> Option<String> {
    if !checks.crossing {
        return None;
    }
    if !(checks.qybe && checks.unitarity) {
        Some("crossing evaluated without checking the braid relation and unitarity".into())
    } else if report.qybe.is_fail() || report.unitarity.is_fail() {
        Some("crossing evaluated on a map that fails the braid relation or unitarity".into())
    } else {
        None
    }
}

fn run(enabled: bool, f: impl FnOnce() -> Result<CheckOutcome, KernelError>) -> Result<CheckOutcome, KernelError> {
    if enabled {
        f()
    } else {
        Ok(CheckOutcome::Skipped)
    }
}

/// Verification through block identities (translation equations included
/// for affine maps).
pub fn verify_algebraic(s: &AffineSolution, checks: CheckSet) -> Result<VerificationReport, KernelError> {
    let mut report = VerificationReport {
        qybe: run(checks.qybe, || verify_braid_affine(s))?,
        unitarity: run(checks.unitarity, || verify_unitarity_affine(s))?,
        crossing: run(checks.crossing, || verify_crossing_affine(s))?,
        notes: Vec::new(),
    };
    report.notes.extend(crossing_note(&report, checks));
    Ok(report)
}

/// Verification by direct evaluation on the permutation table.
pub fn verify_set_level(
    r: &PermutationMap,
    checks: CheckSet,
    cap: usize,
) -> Result<VerificationReport, KernelError> {
    let mut report = VerificationReport {
        qybe: run(checks.qybe, || Ok(verify_qybe_set(r)))?,
        unitarity: run(checks.unitarity, || Ok(verify_unitarity_set(r)))?,
        crossing: run(checks.crossing, || verify_crossing_matrix(r, cap))?,
        notes: Vec::new(),
    };
    report.notes.extend(crossing_note(&report, checks));
    Ok(report)
}
