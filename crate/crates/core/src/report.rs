//! Named pass/fail checks with witnesses, and the document that collects them.
//!
//! The structured form is JSON with keys in a fixed order:
//! `{tool, version, input, checks: [{name, pass, witness?, values}], seed, timing}`.
//! Everything except `timing` is a function of the input and seed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub values: BTreeMap<String, String>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Check {
            name: name.into(),
            pass,
            witness: None,
            values: BTreeMap::new(),
        }
    }

    pub fn witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn value(mut self, key: &str, v: impl ToString) -> Self {
        self.values.insert(key.to_string(), v.to_string());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub input: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub seed: Option<u64>,
    pub timing: Timing,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut input = BTreeMap::new();
        input.insert("command".to_string(), command.to_string());
        Report {
            tool: "linfield".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            input,
            checks: Vec::new(),
            seed: None,
            timing: Timing { elapsed_ms: 0 },
        }
    }

    pub fn input(&mut self, key: &str, v: impl ToString) -> &mut Self {
        self.input.insert(key.to_string(), v.to_string());
        self
    }

    pub fn push(&mut self, c: Check) -> &mut Self {
        self.checks.push(c);
        self
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) -> &mut Self {
        self.checks.extend(cs);
        self
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let args: Vec<String> = self.input.iter().filter(|(k, _)| *k != "command").map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(s, "{} {}: {} {}", self.tool, self.version, self.input["command"], args.join(" "));
        if let Some(seed) = self.seed {
            let _ = writeln!(s, "seed: {seed}");
        }
        for c in &self.checks {
            let _ = writeln!(s, "[{}] {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
            if let Some(w) = &c.witness {
                let _ = writeln!(s, "    witness: {w}");
            }
            for (k, v) in &c.values {
                let _ = writeln!(s, "    {k} = {v}");
            }
        }
        let n = self.checks.iter().filter(|c| c.pass).count();
        let _ = writeln!(s, "{n}/{} checks passed ({} ms)", self.checks.len(), self.timing.elapsed_ms);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_key_order_is_stable() {
        let mut r = Report::new("field");
        r.input("q", 4).push(Check::new("modulus", true).value("b", 2).value("a", 1));
        let j = r.to_json();
        let pos = |k: &str| j.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("tool") < pos("version") && pos("version") < pos("input") && pos("input") < pos("checks"));
        assert!(pos("checks") < pos("seed") && pos("seed") < pos("timing"));
        assert!(pos("a") < pos("b"));
        assert!(!j.contains("witness"));
        assert!(r.all_pass());
        assert!(r.to_text().contains("[PASS] modulus"));
    }
}
