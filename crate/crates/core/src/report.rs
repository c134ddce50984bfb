//! Line-oriented report records.
//!
//! Every record prints the keys `kind, status, order, witness_count, trace,
//! provenance` in that order, with `-` for absent values, followed by any
//! extra keys in insertion order. Values containing spaces are quoted.

use std::fmt::Write as _;

use crate::group::PermGroup;
use crate::integrability::Verdict;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record {
    pub kind: String,
    pub status: Option<String>,
    pub order: Option<String>,
    pub witness_count: Option<usize>,
    pub trace: Vec<String>,
    pub provenance: Option<String>,
    pub extra: Vec<(String, String)>,
}

impl Record {
    pub fn new(kind: &str) -> Self {
        Record { kind: kind.into(), ..Record::default() }
    }

    pub fn status(mut self, s: impl ToString) -> Self {
        self.status = Some(s.to_string());
        self
    }

    pub fn order(mut self, o: impl ToString) -> Self {
        self.order = Some(o.to_string());
        self
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.extra.push((key.into(), value.to_string()));
        self
    }

    /// Status, witness count, trace and provenance of a verdict.
    pub fn verdict(mut self, v: &Verdict) -> Self {
        self.status = Some(v.status.to_string());
        self.witness_count = Some(v.witnesses.len());
        self.trace = v.trace.iter().map(ToString::to_string).collect();
        self.provenance = v.normalizer_provenance.map(|p| p.to_string());
        self = self.with("witnesses_complete", v.witnesses_complete).with("candidates", v.candidates_examined);
        if let Some(reason) = &v.inconclusive_reason {
            self = self.with("reason", reason);
        }
        self
    }

    fn fields(&self) -> Vec<(String, String)> {
        let dash = || "-".to_string();
        let mut f = vec![
            ("kind".to_string(), self.kind.clone()),
            ("status".to_string(), self.status.clone().unwrap_or_else(dash)),
            ("order".to_string(), self.order.clone().unwrap_or_else(dash)),
            ("witness_count".to_string(), self.witness_count.map_or_else(dash, |c| c.to_string())),
            ("trace".to_string(), if self.trace.is_empty() { dash() } else { self.trace.join(">") }),
            ("provenance".to_string(), self.provenance.clone().unwrap_or_else(dash)),
        ];
        f.extend(self.extra.iter().cloned());
        f
    }

    pub fn render(&self, json_like: bool) -> String {
        let fields = self.fields();
        if json_like {
            let (fixed, extra) = fields.split_at(6);
            let mut s = String::from("{");
            for (k, v) in fixed {
                let _ = write!(s, "{k}: {}, ", quote(v, true));
            }
            s.push_str("details: {");
            let parts: Vec<String> = extra.iter().map(|(k, v)| format!("{k}: {}", quote(v, true))).collect();
            s.push_str(&parts.join(", "));
            s.push_str("}}");
            s
        } else {
            fields.iter().map(|(k, v)| format!("{k}={}", quote(v, false))).collect::<Vec<_>>().join(" ")
        }
    }
}

fn quote(v: &str, always: bool) -> String {
    if always || v.is_empty() || v.contains(char::is_whitespace) || v.contains('"') {
        format!("\"{}\"", v.replace('\\', "\\\\").replace('"', "\\\""))
    } else {
        v.to_string()
    }
}

/// A group as a record: order and generators.
pub fn group_record(kind: &str, g: &PermGroup) -> Record {
    Record::new(kind)
        .order(g.order_big())
        .with("degree", g.degree())
        .with("generators", g.generator_strings().join(" "))
}
