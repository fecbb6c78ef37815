//! Versioned JSON envelope and plain-text rendering of command results.

use serde_json::{json, Value};

use remoteness_core::Permutation;

pub const SCHEMA_VERSION: u32 = 1;

/// Outcome of a brute-force cross-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub agrees: bool,
    pub detail: String,
}

/// The result of one subcommand.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub result: Value,
    /// Preformatted text; when absent the result is rendered generically.
    pub text: Option<String>,
    pub verification: Option<Verification>,
    /// Set when the command itself checks a claim that did not hold.
    pub failed: bool,
}

impl Report {
    pub fn new(command: &'static str, result: Value) -> Report {
        Report {
            command,
            result,
            text: None,
            verification: None,
            failed: false,
        }
    }

    pub fn with_text(mut self, text: String) -> Report {
        self.text = Some(text);
        self
    }

    pub fn succeeded(&self) -> bool {
        !self.failed && self.verification.as_ref().map_or(true, |v| v.agrees)
    }

    /// `{"schema": 1, "command": .., "result": .., "verify": ..}`. Object keys are
    /// sorted, so equal inputs give byte-identical output.
    pub fn to_json(&self) -> String {
        let mut env = json!({
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "result": self.result,
        });
        if let Some(v) = &self.verification {
            env["verify"] = json!({ "agrees": v.agrees, "detail": v.detail });
        }
        let mut s = serde_json::to_string_pretty(&env).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = match &self.text {
            Some(t) => t.clone(),
            None => render_text(&self.result),
        };
        if let Some(v) = &self.verification {
            out.push_str(&format!(
                "verify: {} ({})\n",
                if v.agrees { "agrees" } else { "DISAGREES" },
                v.detail
            ));
        }
        out
    }
}

/// `key: value` lines for an object, compact JSON for nested values.
pub fn render_text(value: &Value) -> String {
    match value {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
            let mut out = String::new();
            for (k, v) in map {
                let shown = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("{k:<width$}  {shown}\n"));
            }
            out
        }
        Value::String(s) => format!("{s}\n"),
        other => format!("{other}\n"),
    }
}

/// A permutation as its image list.
pub fn perm_json(p: &Permutation) -> Value {
    json!(p.to_vec())
}

pub fn perms_json(ps: &[Permutation]) -> Value {
    Value::Array(ps.iter().map(perm_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_carries_schema_and_sorted_keys() {
        let r = Report::new("demo", json!({"b": 1, "a": [0, 1]}));
        let s = r.to_json();
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["command"], "demo");
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
        assert!(v.get("verify").is_none());
    }

    #[test]
    fn failed_verification_fails_the_report() {
        let mut r = Report::new("demo", json!(1));
        assert!(r.succeeded());
        r.verification = Some(Verification {
            agrees: false,
            detail: "x".into(),
        });
        assert!(!r.succeeded());
        assert!(r.to_text().contains("DISAGREES"));
    }

    #[test]
    fn generic_text_rendering() {
        let t = render_text(&json!({"remoteness": 4, "name": "C5", "witness": [0, 2, 4, 1, 3]}));
        assert!(t.contains("remoteness  4"));
        assert!(t.contains("name        C5"));
        assert!(t.contains("[0,2,4,1,3]"));
    }
}
