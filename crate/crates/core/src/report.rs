use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

/// A failing instance of an identity, with both sides rendered canonically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub parameters: BTreeMap<String, i64>,
    pub lhs: String,
    pub rhs: String,
}

/// Deterministic verdict on a family of exact identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checked: u64,
    pub holds: bool,
    pub first_counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checked: 0,
            holds: true,
            first_counterexample: None,
        }
    }

    /// Records one instance `lhs == rhs`. Only the first failure is kept.
    pub fn check<T: PartialEq + Display>(&mut self, params: &[(&str, i64)], lhs: &T, rhs: &T) -> bool {
        self.checked += 1;
        let ok = lhs == rhs;
        if !ok {
            self.fail(params, lhs.to_string(), rhs.to_string());
        }
        ok
    }

    /// Records a failing instance whose sides are already rendered.
    pub fn fail(&mut self, params: &[(&str, i64)], lhs: String, rhs: String) {
        self.holds = false;
        if self.first_counterexample.is_none() {
            self.first_counterexample = Some(Counterexample {
                parameters: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                lhs,
                rhs,
            });
        }
    }

    /// Folds another report's counts and first failure into this one.
    pub fn absorb(&mut self, other: &VerificationReport) {
        self.checked += other.checked;
        if !other.holds {
            self.holds = false;
            if self.first_counterexample.is_none() {
                self.first_counterexample = other.first_counterexample.clone();
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
