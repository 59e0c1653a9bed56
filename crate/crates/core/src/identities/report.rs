use std::fmt::Write;

use serde::Serialize;

use super::{CheckReport, IdentityRecord};

#[derive(Serialize)]
struct RecordRow<'a> {
    id: &'a str,
    source: &'a str,
    statement: &'a str,
    domain: String,
    free_vars: Vec<&'static str>,
    ext: Option<i64>,
}

impl<'a> From<&'a IdentityRecord> for RecordRow<'a> {
    fn from(r: &'a IdentityRecord) -> Self {
        RecordRow {
            id: r.id,
            source: r.source,
            statement: r.statement,
            domain: r.domain(),
            free_vars: r.free_vars.iter().map(|v| v.name()).collect(),
            ext: r.ext,
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn records_text(recs: &[IdentityRecord]) -> String {
    let mut out = String::new();
    for r in recs {
        writeln!(out, "{:<12} {}  [{}]  ({})", r.id, r.statement, r.domain(), r.source).unwrap();
    }
    out
}

pub fn records_json(recs: &[IdentityRecord]) -> String {
    let rows: Vec<RecordRow> = recs.iter().map(RecordRow::from).collect();
    serde_json::to_string_pretty(&rows).expect("serializable")
}

pub fn records_csv(recs: &[IdentityRecord]) -> String {
    let mut out = String::from("id,source,statement,domain\n");
    for r in recs {
        let row = [r.id, r.source, r.statement, &r.domain()].map(csv_field);
        writeln!(out, "{}", row.join(",")).unwrap();
    }
    out
}

pub fn reports_text(reps: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reps {
        let status = if r.ok() { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {:<12} {}/{} passed  {} ms", r.id, r.passed, r.attempted, r.millis).unwrap();
        for f in &r.failures {
            writeln!(out, "    {}: lhs = {}  rhs = {}", f.params, f.lhs, f.rhs).unwrap();
        }
    }
    out
}

pub fn reports_json(reps: &[CheckReport]) -> String {
    serde_json::to_string_pretty(reps).expect("serializable")
}

/// One row per failure, plus one `pass` row per report without failures.
pub fn reports_csv(reps: &[CheckReport]) -> String {
    let mut out = String::from("id,params,status,lhs,rhs,millis\n");
    for r in reps {
        if r.failures.is_empty() {
            let summary = format!("{}/{}", r.passed, r.attempted);
            writeln!(out, "{},{},pass,,,{}", csv_field(&r.id), summary, r.millis).unwrap();
        }
        for f in &r.failures {
            let row = [r.id.as_str(), &f.params, "fail", &f.lhs, &f.rhs].map(csv_field);
            writeln!(out, "{},{}", row.join(","), r.millis).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{registry, Failure};

    #[test]
    fn json_schema() {
        let rep = CheckReport {
            id: "EDG-1".into(),
            attempted: 2,
            passed: 1,
            failures: vec![Failure { params: "n=1".into(), lhs: "3".into(), rhs: "4".into() }],
            millis: 0,
        };
        let v: serde_json::Value = serde_json::from_str(&reports_json(&[rep])).unwrap();
        let obj = &v[0];
        for key in ["id", "attempted", "passed", "failures", "millis"] {
            assert!(obj.get(key).is_some(), "{key}");
        }
        assert_eq!(obj["failures"][0]["rhs"], "4");
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        let csv = records_csv(registry());
        assert_eq!(csv.lines().count(), registry().len() + 1);
    }
}
