use serde_json::Value;

use crate::args::Format;

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("values serialize"),
        Format::Text => {
            let mut out = String::new();
            text(value, 0, &mut out);
            out.pop();
            out
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => Some(format!(
            "[{}]",
            items.iter().map(|x| scalar(x).unwrap()).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

/// Indented `key: value` lines, one per field, in JSON order.
fn text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (k, x) in items.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{k}]\n"));
                        text(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap())),
    }
}
