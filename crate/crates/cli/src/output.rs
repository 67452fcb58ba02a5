use serde_json::Value;
use wildflower::{Dyadic, Tri};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub fn dyadic(d: Dyadic) -> Value {
    serde_json::json!({ "num": d.numerator(), "den_exp": d.exponent() })
}

pub fn tri(t: Tri) -> Value {
    match t.as_bool() {
        Some(b) => Value::Bool(b),
        None => Value::String("unknown".into()),
    }
}

pub fn emit(report: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("serializable") + "\n",
        Format::Text => {
            let mut lines = Vec::new();
            flatten("", report, &mut lines);
            lines.into_iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
        }
    }
}

/// One `path: value` line per leaf. Objects and arrays of non-scalars are
/// walked with dotted paths; arrays of scalars print inline as JSON.
pub fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) if !is_dyadic(v) => {
            for (k, child) in map {
                flatten(&join(k), child, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), child, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Object(_) => out.push((prefix.to_string(), dyadic_text(v))),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn is_dyadic(v: &Value) -> bool {
    v.as_object().is_some_and(|m| m.len() == 2 && m.contains_key("num") && m.contains_key("den_exp"))
}

fn dyadic_text(v: &Value) -> String {
    let num = v["num"].as_i64().unwrap_or(0);
    let exp = v["den_exp"].as_u64().unwrap_or(0) as u32;
    Dyadic::new(num, exp).to_string()
}
