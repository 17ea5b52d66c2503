use serde_json::{json, Value};

use equihom::homalg::GradedDims;

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub input_digest: Option<String>,
    pub results: Value,
    pub verified: bool,
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "results": self.results,
            "verified": self.verified,
            "version": env!("CARGO_PKG_VERSION"),
        });
        if let Some(t) = self.timing_ms {
            v["timing_ms"] = json!(t);
        }
        v
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.to_json()).expect("serializable"),
            Format::Table => {
                let mut lines = Vec::new();
                flatten("", &self.to_json(), &mut lines);
                let width = lines.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                lines
                    .into_iter()
                    .map(|(k, v)| format!("{k:<width$}  {v}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&join(k), x, out);
            }
        }
        // arrays of scalars stay on one line
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        _ => out.push((prefix.to_string(), v.to_string())),
    }
}

/// `{"lo": .., "dims": [..]}`
pub fn graded(d: &GradedDims) -> Value {
    json!({ "lo": d.lo, "dims": d.dims })
}
