//! Per-condition residual reports produced by every identity checker.

use std::fmt;

use crate::linalg::is_zero_vec;
use crate::scalar::Scalar;

/// A basis tuple at which an identity fails, together with the nonzero
/// residual it produces.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation<T> {
    pub tuple: Vec<usize>,
    pub residual: Vec<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Condition<T> {
    pub id: String,
    pub violations: Vec<Violation<T>>,
}

impl<T> Condition<T> {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Residuals for a family of conditions.
///
/// `conditions` decide [`CheckReport::pass`]. `reference` holds residuals of
/// alternative literal readings of an identity; they are recorded for
/// comparison and never affect the pass flag.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport<T> {
    pub conditions: Vec<Condition<T>>,
    pub reference: Vec<Condition<T>>,
}

impl<T: Scalar> Default for CheckReport<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> CheckReport<T> {
    pub fn new() -> Self {
        Self { conditions: Vec::new(), reference: Vec::new() }
    }

    pub fn pass(&self) -> bool {
        self.conditions.iter().all(Condition::holds)
    }

    /// Starts a new decisive condition; subsequent [`record`](Self::record)
    /// calls with the same id append to it.
    pub fn condition(&mut self, id: &str) {
        if !self.conditions.iter().any(|c| c.id == id) {
            self.conditions.push(Condition { id: id.to_string(), violations: Vec::new() });
        }
    }

    pub fn reference_condition(&mut self, id: &str) {
        if !self.reference.iter().any(|c| c.id == id) {
            self.reference.push(Condition { id: id.to_string(), violations: Vec::new() });
        }
    }

    /// Records `residual` at `tuple` if it is nonzero.
    pub fn record(&mut self, id: &str, tuple: &[usize], residual: Vec<T>) {
        self.condition(id);
        if !is_zero_vec(&residual) {
            let c = self.conditions.iter_mut().find(|c| c.id == id).unwrap();
            c.violations.push(Violation { tuple: tuple.to_vec(), residual });
        }
    }

    pub fn record_reference(&mut self, id: &str, tuple: &[usize], residual: Vec<T>) {
        self.reference_condition(id);
        if !is_zero_vec(&residual) {
            let c = self.reference.iter_mut().find(|c| c.id == id).unwrap();
            c.violations.push(Violation { tuple: tuple.to_vec(), residual });
        }
    }

    pub fn get(&self, id: &str) -> Option<&Condition<T>> {
        self.conditions.iter().find(|c| c.id == id)
    }

    pub fn get_reference(&self, id: &str) -> Option<&Condition<T>> {
        self.reference.iter().find(|c| c.id == id)
    }

    /// True when condition `id` exists and has no violations.
    pub fn holds(&self, id: &str) -> bool {
        self.get(id).is_some_and(Condition::holds)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.conditions.iter().filter(|c| !c.holds()).map(|c| c.id.as_str()).collect()
    }

    /// Absorbs another report, prefixing its condition ids.
    pub fn merge(&mut self, prefix: &str, other: CheckReport<T>) {
        for mut c in other.conditions {
            c.id = format!("{prefix}{}", c.id);
            self.conditions.push(c);
        }
        for mut c in other.reference {
            c.id = format!("{prefix}{}", c.id);
            self.reference.push(c);
        }
    }

    pub fn summary(&self) -> String {
        let failing = self.failing();
        if failing.is_empty() {
            "all conditions hold".to_string()
        } else {
            format!("failing conditions: {}", failing.join(", "))
        }
    }
}

impl<T: Scalar> fmt::Display for CheckReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.conditions {
            writeln!(f, "{:<12} {}", c.id, if c.holds() { "ok" } else { "FAIL" })?;
            for v in c.violations.iter().take(5) {
                let r: Vec<String> = v.residual.iter().map(ToString::to_string).collect();
                writeln!(f, "    at {:?}: [{}]", v.tuple, r.join(", "))?;
            }
        }
        Ok(())
    }
}
