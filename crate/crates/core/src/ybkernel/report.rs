use serde::Serialize;

/// Elements of `X` are reported as residue vectors.
pub type Element = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A named matrix identity that does not hold.
    Identity { name: String },
    /// `R12 R13 R23 (x,y,z) != R23 R13 R12 (x,y,z)`.
    Triple {
        x: Element,
        y: Element,
        z: Element,
        lhs: [Element; 3],
        rhs: [Element; 3],
    },
    /// `R21 R (x,y) = image != (x,y)`.
    Pair { x: Element, y: Element, image: [Element; 2] },
    /// Entry of `(R21)^t R^t` that differs from the identity matrix.
    MatrixEntry {
        row: [Element; 2],
        col: [Element; 2],
        value: i64,
        expected: i64,
    },
    /// A failed crossing condition (1: unique `y, y'`; 2: they satisfy the
    /// second pair of equations).
    Condition { condition: u8, detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail { witness: Witness },
    Skipped,
}

impl CheckOutcome {
    pub fn fail(witness: Witness) -> CheckOutcome {
        CheckOutcome::Fail { witness }
    }

    pub fn identity_fail(name: &str) -> CheckOutcome {
        CheckOutcome::fail(Witness::Identity { name: name.into() })
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckOutcome::Fail { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            CheckOutcome::Fail { witness } => Some(witness),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub qybe: CheckOutcome,
    pub unitarity: CheckOutcome,
    pub crossing: CheckOutcome,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn any_fail(&self) -> bool {
        [&self.qybe, &self.unitarity, &self.crossing]
            .iter()
            .any(|c| c.is_fail())
    }
}
