use std::collections::BTreeMap;
use std::fmt::Write as _;

use rug::Float;
use serde::Serialize;
use serde_json::Value;

use crate::numkernel::{to_decimal, BigComplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// Output of one CLI run. Every number is a full-precision decimal string.
///
/// `elapsed_ms` is kept out of the JSON so that identical runs produce
/// identical bytes.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub op: String,
    pub inputs: BTreeMap<String, String>,
    pub digits: u32,
    pub results: BTreeMap<String, Value>,
    pub residuals: BTreeMap<String, String>,
    pub verdicts: BTreeMap<String, Verdict>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn new(op: &str, digits: u32) -> Self {
        RunReport {
            op: op.to_string(),
            inputs: BTreeMap::new(),
            digits,
            results: BTreeMap::new(),
            residuals: BTreeMap::new(),
            verdicts: BTreeMap::new(),
            elapsed_ms: 0,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.to_string(), value.to_string());
    }

    pub fn result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    pub fn residual(&mut self, key: &str, value: &Float) {
        self.residuals.insert(key.to_string(), to_decimal(value));
    }

    pub fn verdict(&mut self, key: &str, verdict: Verdict) {
        self.verdicts.insert(key.to_string(), verdict);
    }

    pub fn passed(&self) -> bool {
        self.verdicts.values().all(|v| *v != Verdict::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned plain-text rendering.
    pub fn to_table(&self) -> String {
        let mut rows: Vec<(String, String)> = Vec::new();
        for (k, v) in &self.inputs {
            rows.push((format!("input {k}"), v.clone()));
        }
        for (k, v) in &self.results {
            flatten(&format!("result {k}"), v, &mut rows);
        }
        for (k, v) in &self.residuals {
            rows.push((format!("residual {k}"), short(v)));
        }
        for (k, v) in &self.verdicts {
            let text = match v {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Skipped => "SKIPPED",
            };
            rows.push((format!("verdict {k}"), text.to_string()));
        }
        let width = rows
            .iter()
            .map(|(k, _)| k.chars().count())
            .max()
            .unwrap_or(0);
        let mut out = format!("{} ({} digits)\n", self.op, self.digits);
        for (k, v) in rows {
            let _ = writeln!(out, "  {k:<width$}  {v}");
        }
        let _ = writeln!(out, "  elapsed {} ms", self.elapsed_ms);
        out
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, inner) in map {
                flatten(&format!("{prefix}.{k}"), inner, out);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object()) => {
            for (i, inner) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), inner, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), short(s))),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

/// Decimal string cut to 25 significant characters for the table.
fn short(s: &str) -> String {
    let (mantissa, exp) = match s.find('e') {
        Some(i) => (&s[..i], &s[i..]),
        None => (s, ""),
    };
    if mantissa.len() <= 26 {
        return s.to_string();
    }
    format!("{}…{exp}", &mantissa[..26])
}

pub fn real(x: &Float) -> Value {
    Value::String(to_decimal(x))
}

pub fn complex(z: &BigComplex) -> Value {
    serde_json::json!({ "re": to_decimal(&z.re), "im": to_decimal(&z.im) })
}
