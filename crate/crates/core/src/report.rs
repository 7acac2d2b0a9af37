use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one identity at one parameter tuple. Both sides are always
/// rendered so a failure can be read off the report alone.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Map<String, Value>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

impl CheckReport {
    pub fn compare(check: impl Into<String>, params: &[(&str, i64)], lhs: String, rhs: String, ok: bool) -> Self {
        CheckReport {
            check: check.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), Value::from(*v))).collect(),
            status: if ok { Status::Pass } else { Status::Fail },
            lhs,
            rhs,
        }
    }

    /// Exact equality of two values rendered through `render`.
    pub fn equal<T: PartialEq>(
        check: impl Into<String>,
        params: &[(&str, i64)],
        lhs: &T,
        rhs: &T,
        render: impl Fn(&T) -> String,
    ) -> Self {
        Self::compare(check, params, render(lhs), render(rhs), lhs == rhs)
    }

    /// A check that could not be evaluated at all.
    pub fn error(check: impl Into<String>, params: &[(&str, i64)], err: impl ToString) -> Self {
        Self::compare(
            check,
            params,
            format!("error: {}", err.to_string()),
            String::new(),
            false,
        )
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One NDJSON line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Ordered collection of reports; passes iff every report passes.
#[derive(Clone, Debug, Default)]
pub struct Suite {
    pub reports: Vec<CheckReport>,
}

impl Suite {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, r: CheckReport) {
        self.reports.push(r);
    }

    pub fn extend(&mut self, other: Suite) {
        self.reports.extend(other.reports);
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(CheckReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.reports.iter().filter(|r| !r.passed())
    }

    pub fn len(&self) -> usize {
        self.reports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reports.is_empty()
    }
}

impl FromIterator<CheckReport> for Suite {
    fn from_iter<I: IntoIterator<Item = CheckReport>>(iter: I) -> Self {
        Suite {
            reports: iter.into_iter().collect(),
        }
    }
}
