//! Verification reports: one [`Check`] per identity, each run over a stated
//! range and stopping at the first counterexample.

use std::fmt;

use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub identity: String,
    pub range: String,
    pub status: Status,
    pub counterexample: Option<String>,
    pub note: Option<String>,
    /// Number of cases evaluated before stopping.
    pub cases: usize,
}

impl Check {
    /// Runs `cases` in order; each yields `Err(description)` on failure.
    pub fn run<I>(identity: impl Into<String>, range: impl Into<String>, cases: I) -> Self
    where
        I: IntoIterator<Item = std::result::Result<(), String>>,
    {
        let mut n = 0;
        let mut counterexample = None;
        for c in cases {
            n += 1;
            if let Err(e) = c {
                counterexample = Some(e);
                break;
            }
        }
        Check {
            identity: identity.into(),
            range: range.into(),
            status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
            counterexample,
            note: None,
            cases: n,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "identity": self.identity,
            "range": self.range,
            "status": self.status.to_string(),
            "cases": self.cases,
        });
        if let Some(c) = &self.counterexample {
            v["counterexample"] = json!(c);
        }
        if let Some(n) = &self.note {
            v["note"] = json!(n);
        }
        v
    }
}

/// `Ok` when equal, else a message showing both sides.
pub fn expect_eq<T: PartialEq + fmt::Debug>(label: impl fmt::Display, lhs: &T, rhs: &T) -> std::result::Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{label}: lhs = {lhs:?}, rhs = {rhs:?}"))
    }
}

/// Like [`expect_eq`] but without printing the (possibly huge) sides.
pub fn expect_same<T: PartialEq>(label: impl fmt::Display, lhs: &T, rhs: &T) -> std::result::Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{label}: sides differ"))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    /// Literal forms that are known not to hold and are superseded by a
    /// check in `checks`; reported, but they do not decide the outcome.
    pub discrepancies: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new(), discrepancies: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn document(&mut self, c: Check) {
        self.discrepancies.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.discrepancies.extend(other.discrepancies);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "suite": self.suite,
            "status": if self.passed() { "pass" } else { "fail" },
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        });
        if !self.discrepancies.is_empty() {
            v["discrepancies"] = json!(self.discrepancies.iter().map(Check::to_json).collect::<Vec<_>>());
        }
        v
    }
}
