use pointed_hopf::report::Check;
use serde::Serialize;
use serde_json::Value;

use crate::run::{Instance, Output};
use crate::Format;

#[derive(Serialize)]
struct Document<'a> {
    instance: &'a Instance,
    checks: Vec<&'a Check>,
}

pub fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Json => {
            // struct fields keep schema order; nested maps are key-sorted
            let doc = Document {
                instance: &out.instance,
                checks: out.sections.iter().flat_map(|(_, r)| r.checks.iter()).collect(),
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Md => markdown(out),
    }
}

fn cell(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    };
    s.replace('|', "\\|")
}

fn markdown(out: &Output) -> String {
    let i = &out.instance;
    let dim = i.dim.map_or_else(|| "not built".to_string(), |d| d.to_string());
    let mut s = format!("# Instance p={} s={} t={} lambda={} mu={}\n\ndim = {dim}\n", i.p, i.s, i.t, i.lambda, i.mu);
    for (family, report) in &out.sections {
        s.push_str(&format!(
            "\n## {family}\n\n| check | status | observed | expected | claim |\n|---|---|---|---|---|\n"
        ));
        for c in &report.checks {
            s.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                c.name,
                c.status.as_str(),
                cell(&c.observed),
                cell(&c.expected),
                c.citation.replace('|', "\\|"),
            ));
        }
    }
    s
}
