//! Machine-readable reports. Field order is fixed by the struct layout and
//! violations keep the lexicographic tuple order of the checkers.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use zinbiel::report::{CheckReport, Condition};
use zinbiel::Q;

use crate::format::{Rational, StructureFile};

#[derive(Debug, Clone, Serialize)]
pub struct ViolationOut {
    pub tuple: Vec<usize>,
    pub residual: Vec<Rational>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionOut {
    pub id: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<ViolationOut>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SectionOut {
    pub name: String,
    pub status: &'static str,
    pub conditions: Vec<ConditionOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reference: Vec<ConditionOut>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportFile {
    pub command: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<SectionOut>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub derived: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representative: Option<StructureFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn condition(c: &Condition<Q>) -> ConditionOut {
    ConditionOut {
        id: c.id.clone(),
        status: status(c.holds()),
        violations: c
            .violations
            .iter()
            .map(|v| ViolationOut { tuple: v.tuple.clone(), residual: v.residual.iter().cloned().map(Rational).collect() })
            .collect(),
    }
}

pub fn section(name: &str, r: &CheckReport<Q>) -> SectionOut {
    SectionOut {
        name: name.to_string(),
        status: status(r.pass()),
        conditions: r.conditions.iter().map(condition).collect(),
        reference: r.reference.iter().map(condition).collect(),
    }
}

impl ReportFile {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            status: "pass",
            checks: Vec::new(),
            derived: BTreeMap::new(),
            representative: None,
            seed: None,
            error: None,
        }
    }

    pub fn failed(command: impl Into<String>, error: impl Into<String>) -> Self {
        let mut r = Self::new(command);
        r.status = "fail";
        r.error = Some(error.into());
        r
    }

    /// Adds a check section; the report fails if the section does.
    pub fn check(mut self, name: &str, r: &CheckReport<Q>) -> Self {
        if !r.pass() {
            self.status = "fail";
        }
        self.checks.push(section(name, r));
        self
    }

    pub fn derive(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.derived.insert(key.to_string(), value.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
