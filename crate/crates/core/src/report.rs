//! Verification reports shared by every checker.

use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// The statements the harness can verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StatementId {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Wielandt,
    Multiplier,
    Lemma22,
    Cor42,
    Prop13,
    Counterexample,
    Separating,
    Duality,
}

impl StatementId {
    pub const ALL: [StatementId; 12] = [
        StatementId::Thm1,
        StatementId::Thm2,
        StatementId::Thm3,
        StatementId::Thm4,
        StatementId::Wielandt,
        StatementId::Multiplier,
        StatementId::Lemma22,
        StatementId::Cor42,
        StatementId::Prop13,
        StatementId::Counterexample,
        StatementId::Separating,
        StatementId::Duality,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::Thm1 => "thm1",
            StatementId::Thm2 => "thm2",
            StatementId::Thm3 => "thm3",
            StatementId::Thm4 => "thm4",
            StatementId::Wielandt => "wielandt",
            StatementId::Multiplier => "multiplier",
            StatementId::Lemma22 => "lemma22",
            StatementId::Cor42 => "cor42",
            StatementId::Prop13 => "prop13",
            StatementId::Counterexample => "counterexample",
            StatementId::Separating => "separating",
            StatementId::Duality => "duality",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for StatementId {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| crate::Error::invalid(format!("unknown statement id `{s}`")))
    }
}

/// One failed check, with enough data to reproduce it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub instance: String,
    pub message: String,
    pub witness: Value,
}

impl Violation {
    pub fn new(instance: impl Into<String>, message: impl Into<String>, witness: Value) -> Self {
        Violation {
            instance: instance.into(),
            message: message.into(),
            witness,
        }
    }
}

/// Outcome of verifying one statement on one input.
///
/// `elapsed` is kept out of the JSON form so that reports are reproducible
/// byte for byte.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub statement_id: StatementId,
    pub instances_checked: usize,
    pub violations: Vec<Violation>,
    pub vacuous: bool,
    #[serde(skip)]
    pub elapsed: Duration,
    pub details: Value,
}

impl VerificationReport {
    pub fn new(statement_id: StatementId) -> Self {
        VerificationReport {
            statement_id,
            instances_checked: 0,
            violations: Vec::new(),
            vacuous: false,
            elapsed: Duration::ZERO,
            details: Value::Object(Default::default()),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records a check; a `false` condition becomes a violation.
    pub fn check(&mut self, ok: bool, instance: impl Into<String>, message: impl Into<String>, witness: Value) {
        if !ok {
            self.violations.push(Violation::new(instance, message, witness));
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        if let Value::Object(map) = &mut self.details {
            map.insert(key.to_string(), serde_json::to_value(value).unwrap_or(Value::Null));
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (self.passed(), self.vacuous) {
            (false, _) => "FAIL",
            (true, true) => "PASS (vacuous)",
            (true, false) => "PASS",
        };
        writeln!(
            f,
            "{}: {verdict}, {} instances checked, {} violations, {:.3}s",
            self.statement_id,
            self.instances_checked,
            self.violations.len(),
            self.elapsed.as_secs_f64()
        )?;
        for v in self.violations.iter().take(10) {
            write!(f, "  violation [{}]: {}", v.instance, v.message)?;
            if !v.witness.is_null() {
                write!(f, " {}", v.witness)?;
            }
            writeln!(f)?;
        }
        if let Value::Object(map) = &self.details {
            for (k, v) in map {
                writeln!(f, "  {k}: {v}")?;
            }
        }
        Ok(())
    }
}
