//! Theorem-level verdicts assembled from the lower layers, with every
//! redundantly computable condition cross-checked.

mod embedding;
mod enumerate;
mod extension;
mod modules;

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;

pub use embedding::{
    certify_central_p_subgroup, certify_central_quotient, certify_group_quotient,
    certify_quotient_embedding, certify_square_zero,
};
pub use enumerate::{
    enumerate_embedding_ideals, DimensionRow, EnumerationOptions, EnumerationReport, IdealRecord,
    ENUMERATION_EXHAUSTIVE_LIMIT, EQUIVALENT_CONDITIONS,
};
pub use extension::{certify_group_extension_closure, extension_closure_obstruction};
pub use modules::{approximations, certify_approximations, certify_mod_y, check_orthogonal_family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Positive,
    Negative,
    /// Hypotheses unmet or a search was incomplete.
    Inconclusive,
    /// Two conditions that must agree did not.
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Condition {
    Flag(bool),
    Count(usize),
    Note(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub theorem_tag: String,
    /// What a positive verdict asserts.
    pub claim: String,
    pub inputs: String,
    pub conditions: BTreeMap<String, Condition>,
    pub verdict: Verdict,
    pub cross_checks: Vec<CrossCheck>,
}

impl Certificate {
    pub(crate) fn new(tag: &str, claim: &str, inputs: impl Into<String>) -> Self {
        Certificate {
            theorem_tag: tag.into(),
            claim: claim.into(),
            inputs: inputs.into(),
            conditions: BTreeMap::new(),
            verdict: Verdict::Inconclusive,
            cross_checks: Vec::new(),
        }
    }

    pub(crate) fn flag(&mut self, name: &str, value: bool) -> bool {
        self.conditions.insert(name.into(), Condition::Flag(value));
        value
    }

    pub(crate) fn count(&mut self, name: &str, value: usize) -> usize {
        self.conditions.insert(name.into(), Condition::Count(value));
        value
    }

    pub(crate) fn note(&mut self, name: &str, value: impl Into<String>) {
        self.conditions
            .insert(name.into(), Condition::Note(value.into()));
    }

    pub(crate) fn cross<T: Display + PartialEq>(&mut self, name: &str, lhs: T, rhs: T) -> bool {
        let equal = lhs == rhs;
        self.cross_checks.push(CrossCheck {
            name: name.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            equal,
        });
        equal
    }

    /// Copy conditions and cross-checks of a sub-certificate under a prefix.
    pub(crate) fn absorb(&mut self, prefix: &str, other: &Certificate) {
        for (k, v) in &other.conditions {
            self.conditions.insert(format!("{prefix}.{k}"), v.clone());
        }
        for c in &other.cross_checks {
            self.cross_checks.push(CrossCheck {
                name: format!("{prefix}.{}", c.name),
                ..c.clone()
            });
        }
    }

    /// Set the verdict, overridden by any failed cross-check.
    pub(crate) fn finish(mut self, verdict: Verdict) -> Self {
        self.verdict = if self.is_consistent() {
            verdict
        } else {
            Verdict::Inconsistent
        };
        self
    }

    pub fn is_positive(&self) -> bool {
        self.verdict == Verdict::Positive
    }

    pub fn is_consistent(&self) -> bool {
        self.cross_checks.iter().all(|c| c.equal)
    }

    pub fn flag_value(&self, name: &str) -> Option<bool> {
        match self.conditions.get(name)? {
            Condition::Flag(b) => Some(*b),
            _ => None,
        }
    }

    pub fn count_value(&self, name: &str) -> Option<usize> {
        match self.conditions.get(name)? {
            Condition::Count(n) => Some(*n),
            _ => None,
        }
    }
}

pub(crate) fn verdict_of(positive: bool) -> Verdict {
    if positive {
        Verdict::Positive
    } else {
        Verdict::Negative
    }
}
