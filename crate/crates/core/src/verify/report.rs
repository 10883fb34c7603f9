use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Sweep cell key; reports list checks sorted by this key.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cell {
    pub algebra: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl Cell {
    pub fn new(algebra: &str, n: usize) -> Self {
        Cell { algebra: algebra.to_string(), n, p: None, label: None }
    }

    pub fn degree(mut self, p: usize) -> Self {
        self.p = Some(p);
        self
    }

    pub fn label(mut self, l: impl ToString) -> Self {
        self.label = Some(l.to_string());
        self
    }
}

/// One verdict with its numbers and, on failure, a replayable witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub name: String,
    pub cell: Cell,
    pub ok: bool,
    #[serde(default)]
    pub data: BTreeMap<String, serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl Check {
    pub fn new(name: &str, cell: Cell, ok: bool) -> Self {
        Check { name: name.to_string(), cell, ok, data: BTreeMap::new(), witness: None }
    }

    pub fn with(mut self, key: &str, v: impl Serialize) -> Self {
        self.data.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
        self
    }

    pub fn witness(mut self, w: impl Serialize) -> Self {
        self.witness = Some(serde_json::to_value(w).expect("serializable"));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub kind: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(kind: &str, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| (&a.cell, &a.name).cmp(&(&b.cell, &b.name)));
        let passed = checks.iter().all(|c| c.ok);
        Report { kind: kind.to_string(), passed, checks, timing_ms: None }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }

    /// Drops timing so that reruns are byte-identical.
    pub fn deterministic(mut self) -> Self {
        self.timing_ms = None;
        self
    }

    /// Flat dimension table: one row per check and numeric datum.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,algebra,n,p,label,ok,key,value\n");
        for c in &self.checks {
            for (k, v) in &c.data {
                if v.is_number() || v.is_boolean() {
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{},{}\n",
                        c.name,
                        c.cell.algebra,
                        c.cell.n,
                        c.cell.p.map(|p| p.to_string()).unwrap_or_default(),
                        c.cell.label.clone().unwrap_or_default(),
                        c.ok,
                        k,
                        v
                    ));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trip_and_order() {
        let r = Report::new(
            "x",
            vec![
                Check::new("b", Cell::new("uv", 2).degree(1), true).with("dim", 3),
                Check::new("a", Cell::new("k", 1), false).witness((0, 1)),
            ],
        );
        assert!(!r.passed);
        assert_eq!(r.checks[0].cell.algebra, "k");
        let s = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<Report>(&s.replace("\"kind\"", "\"kinds\"")).is_err());
        assert!(r.to_csv().contains("b,uv,2,1,,true,dim,3"));
    }
}
