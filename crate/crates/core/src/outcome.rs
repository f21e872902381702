use serde::{Deserialize, Serialize};

/// A yes/no answer together with the first counterexample found when the answer is no.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> Outcome<W> {
    pub fn pass() -> Self {
        Outcome { holds: true, witness: None }
    }

    pub fn fail(witness: W) -> Self {
        Outcome { holds: false, witness: Some(witness) }
    }

    pub fn from_violation(violation: Option<W>) -> Self {
        match violation {
            Some(w) => Self::fail(w),
            None => Self::pass(),
        }
    }
}
