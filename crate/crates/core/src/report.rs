//! Structured verification output.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
    Unsupported,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
            Status::Unsupported => "unsupported",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub observed: Value,
    pub expected: Value,
    pub citation: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        status: Status,
        observed: impl Into<Value>,
        expected: impl Into<Value>,
        citation: impl Into<String>,
    ) {
        self.checks.push(Check {
            name: name.into(),
            status,
            observed: observed.into(),
            expected: expected.into(),
            citation: citation.into(),
        });
    }

    /// Record a check whose status is decided by equality of observed and expected.
    pub fn compare(
        &mut self,
        name: impl Into<String>,
        observed: impl Into<Value>,
        expected: impl Into<Value>,
        citation: impl Into<String>,
    ) -> bool {
        let (observed, expected) = (observed.into(), expected.into());
        let ok = observed == expected;
        self.push(name, Status::from_bool(ok), observed, expected, citation);
        ok
    }

    /// Record a boolean check.
    pub fn assert(
        &mut self,
        name: impl Into<String>,
        ok: bool,
        detail: impl Into<Value>,
        citation: impl Into<String>,
    ) -> bool {
        self.push(name, Status::from_bool(ok), detail, Value::Bool(true), citation);
        ok
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn has_failure(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
