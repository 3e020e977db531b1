//! Structured pass/fail records emitted by every verifier.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::algebra::field::{Field, FieldSpec};
use crate::groebner::BettiTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verifier run. `details.assertions` maps every sub-assertion to its outcome, and
/// the status is `pass` iff all of them hold.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub a: Vec<Value>,
    pub status: Status,
    pub details: Map<String, Value>,
}

impl VerificationReport {
    pub fn new<F: Field>(check: &str, field: &F) -> Self {
        let mut details = Map::new();
        details.insert("assertions".into(), Value::Object(Map::new()));
        VerificationReport { check: check.into(), field: field.spec(), seed: None, a: Vec::new(), status: Status::Fail, details }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_a<F: Field>(mut self, field: &F, a: &[F::Elem]) -> Self {
        self.a = a.iter().map(|x| elem_json(field, x)).collect();
        self
    }

    /// Records a sub-assertion and returns its outcome.
    pub fn assert(&mut self, name: &str, ok: bool) -> bool {
        if let Some(Value::Object(map)) = self.details.get_mut("assertions") {
            map.insert(name.into(), Value::Bool(ok));
        }
        self.status = if self.assertions().all(|(_, v)| v) { Status::Pass } else { Status::Fail };
        ok
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).unwrap_or_else(|e| Value::String(e.to_string()));
        self.details.insert(key.into(), v);
    }

    pub fn assertions(&self) -> impl Iterator<Item = (&str, bool)> {
        let map = match self.details.get("assertions") {
            Some(Value::Object(m)) => Some(m),
            _ => None,
        };
        map.into_iter().flat_map(|m| m.iter().map(|(k, v)| (k.as_str(), v.as_bool() == Some(true))))
    }

    pub fn assertion(&self, name: &str) -> Option<bool> {
        self.assertions().find(|(k, _)| *k == name).map(|(_, v)| v)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Names of the failed sub-assertions.
    pub fn failures(&self) -> Vec<String> {
        self.assertions().filter(|(_, v)| !v).map(|(k, _)| k.to_string()).collect()
    }
}

/// A field element as a JSON number when it is an integer that fits, else as a string.
pub fn elem_json<F: Field>(field: &F, x: &F::Elem) -> Value {
    let r = field.to_ratio(x);
    if r.is_integer() {
        if let Ok(n) = i64::try_from(r.numer()) {
            return Value::from(n);
        }
    }
    Value::String(field.elem_to_string(x))
}

/// `[[i, degree, count], ...]`.
pub fn betti_json(table: &BettiTable) -> Value {
    Value::Array(table.iter().map(|(&(i, d), &n)| Value::from(alloc::vec![Value::from(i), Value::from(d), Value::from(n)])).collect())
}
