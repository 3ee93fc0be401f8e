use serde::Serialize;

use super::condition::ConditionCheck;
use crate::families::Family;
use crate::solver::EkrVerdict;

/// Compact rendering of a family for witnesses, e.g. `{{0,2}, {1,3}}`.
pub(crate) fn show(f: &Family) -> String {
    format!("{f:?}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The solver ran out of budget before the assertion could be decided.
    Budget,
}

/// One evaluated assertion. Failing checks always carry a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub assertion: String,
    pub status: Status,
    /// False for checks that are recorded but not gated on, such as
    /// instances where a hypothesis holds only with equality.
    pub asserted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    /// Asserted checks that failed.
    pub failed: usize,
    /// Non-asserted checks that failed (findings, not errors).
    pub reported: usize,
    pub budget_exhausted: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub target: String,
    pub instance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition: Option<ConditionCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<EkrVerdict>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl AuditReport {
    pub fn new(target: impl Into<String>, instance: impl Into<String>) -> Self {
        AuditReport {
            target: target.into(),
            instance: instance.into(),
            r: None,
            seed: None,
            condition: None,
            verdicts: Vec::new(),
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn pass(&mut self, assertion: impl Into<String>, asserted: bool) {
        self.push(Check { assertion: assertion.into(), status: Status::Pass, asserted, detail: None, witness: None });
    }

    pub fn fail(&mut self, assertion: impl Into<String>, asserted: bool, witness: impl Into<String>) {
        self.push(Check {
            assertion: assertion.into(),
            status: Status::Fail,
            asserted,
            detail: None,
            witness: Some(witness.into()),
        });
    }

    /// Records `ok` as pass, or as a failure with the lazily built witness.
    pub fn check(&mut self, assertion: impl Into<String>, asserted: bool, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.pass(assertion, asserted);
        } else {
            self.fail(assertion, asserted, witness());
        }
    }

    pub fn budget(&mut self, assertion: impl Into<String>, detail: impl Into<String>) {
        self.push(Check {
            assertion: assertion.into(),
            status: Status::Budget,
            asserted: true,
            detail: Some(detail.into()),
            witness: None,
        });
    }

    pub fn push(&mut self, check: Check) {
        debug_assert!(check.status != Status::Fail || check.witness.is_some());
        self.summary.total += 1;
        match (check.status, check.asserted) {
            (Status::Pass, _) => self.summary.passed += 1,
            (Status::Fail, true) => self.summary.failed += 1,
            (Status::Fail, false) => self.summary.reported += 1,
            (Status::Budget, _) => self.summary.budget_exhausted += 1,
        }
        self.checks.push(check);
    }

    /// Appends another report's checks, prefixing their assertions.
    pub fn absorb(&mut self, prefix: &str, other: AuditReport) {
        for mut c in other.checks {
            c.assertion = format!("{prefix}{}", c.assertion);
            self.push(c);
        }
    }

    pub fn ok(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail && c.asserted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts() {
        let mut r = AuditReport::new("t", "P(1)^1");
        r.pass("a", true);
        r.fail("b", false, "w");
        r.check("c", true, false, || "{0}".into());
        r.budget("d", "nodes");
        assert_eq!(r.summary, Summary { total: 4, passed: 1, failed: 1, reported: 1, budget_exhausted: 1 });
        assert!(!r.ok());
        assert_eq!(r.failures().count(), 1);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["checks"][1]["witness"], "w");
        assert!(json.get("verdicts").is_none());
    }
}
