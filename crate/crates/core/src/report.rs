//! Structured verification reports.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A known discrepancy with a recorded explanation; does not fail the report.
    Documented,
    /// Experiment agreeing with an unproven statement.
    ConjectureConsistent,
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Documented => "DOCUMENTED",
            Status::ConjectureConsistent => "CONJECTURE-CONSISTENT",
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportItem {
    pub name: String,
    pub params: String,
    pub status: Status,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), items: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, params: impl Into<String>, status: Status, witness: Option<String>) {
        self.items.push(ReportItem { name: name.into(), params: params.into(), status, witness });
    }

    pub fn check(&mut self, name: impl Into<String>, params: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        let w = if ok { None } else { Some(witness()) };
        self.push(name, params, Status::from_bool(ok), w);
    }

    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|i| i.status == Status::Fail)
    }

    pub fn count(&self, status: &Status) -> usize {
        self.items.iter().filter(|i| &i.status == status).count()
    }

    pub fn summary(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!("{verdict} {}: {} items, {} failed", self.title, self.items.len(), self.count(&Status::Fail));
        let doc = self.count(&Status::Documented);
        if doc > 0 {
            s.push_str(&format!(", {doc} documented"));
        }
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for item in &self.items {
            write!(f, "  [{}] {}", item.status.label(), item.name)?;
            if !item.params.is_empty() {
                write!(f, " ({})", item.params)?;
            }
            writeln!(f)?;
            if let Some(w) = &item.witness {
                writeln!(f, "      {w}")?;
            }
        }
        Ok(())
    }
}
