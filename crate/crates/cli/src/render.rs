//! Output envelopes and the JSON, CSV and human renderings.

use serde::Serialize;
use serde_json::Value;

#[derive(Serialize)]
struct Envelope<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    seed: u64,
    result: &'a Value,
}

pub fn json(command: &str, seed: u64, result: &Value) -> String {
    let env = Envelope { tool: "oridom", version: env!("CARGO_PKG_VERSION"), command, seed, result };
    serde_json::to_string_pretty(&env).expect("values serialise") + "\n"
}

/// Indented `key: value` lines rendered from the same envelope.
pub fn human(command: &str, seed: u64, result: &Value) -> String {
    let mut out = format!("oridom {} {command} (seed {seed})\n", env!("CARGO_PKG_VERSION"));
    walk(result, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object()) => {
            let parts: Option<Vec<String>> = items.iter().map(|i| scalar(i)).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        _ => None,
    }
}

fn walk(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if let Value::String(text) = x {
                    if text.contains('\n') {
                        out.push_str(&format!("{pad}{k}: |\n"));
                        for line in text.lines() {
                            out.push_str(&format!("{pad}  {line}\n"));
                        }
                        continue;
                    }
                }
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        walk(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        walk(x, depth + 1, out);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v).unwrap_or_default())),
    }
}

pub fn csv<T: Serialize>(rows: &[T]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_mirrors_json() {
        let v = serde_json::json!({"gamma": 2, "witness": [0, 2], "nested": {"ok": true}});
        let h = human("gamma", 0, &v);
        assert!(h.contains("gamma: 2\n"));
        assert!(h.contains("witness: [0, 2]\n"));
        assert!(h.contains("nested:\n  ok: true\n"));
        let block = human("x", 0, &serde_json::json!({"arcs": "2\n0 1\n"}));
        assert!(block.contains("arcs: |\n  2\n  0 1\n"));
        let j = json("gamma", 7, &v);
        assert!(j.contains("\"seed\": 7"));
        assert!(j.contains("\"version\""));
    }
}
