//! Canonical JSON: sorted keys, two-space indentation, and integers above
//! 2^53 written as decimal strings.

use serde_json::{Map, Number, Value};

pub const SCHEMA_VERSION: u64 = 1;

/// Largest integer every JSON reader represents exactly.
pub const MAX_SAFE: u64 = 1 << 53;

/// Replaces integers outside `[-2^53, 2^53]` by decimal strings.
pub fn encode_big(v: Value) -> Value {
    match v {
        Value::Number(n) => {
            let big = match (n.as_u64(), n.as_i64()) {
                (Some(u), _) => u > MAX_SAFE,
                (None, Some(i)) => i.unsigned_abs() > MAX_SAFE,
                _ => false,
            };
            if big {
                Value::String(n.to_string())
            } else {
                Value::Number(n)
            }
        }
        Value::Array(a) => Value::Array(a.into_iter().map(encode_big).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, encode_big(v))).collect()),
        other => other,
    }
}

/// Inverse of [`encode_big`] for unsigned values: decimal strings that only
/// fit as big integers become numbers again. Small numeric strings are left
/// alone since they were never produced by the encoder.
pub fn decode_big(v: Value) -> Value {
    match v {
        Value::String(s) => match s.parse::<u64>() {
            Ok(u) if u > MAX_SAFE && u.to_string() == s => Value::Number(Number::from(u)),
            _ => Value::String(s),
        },
        Value::Array(a) => Value::Array(a.into_iter().map(decode_big).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, decode_big(v))).collect()),
        other => other,
    }
}

/// Pretty printer with sorted keys (the default `serde_json` map is ordered)
/// that keeps arrays of scalars on one line.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = String::new();
    write_value(&mut s, v, 0);
    s.push('\n');
    s
}

fn scalar(v: &Value) -> String {
    serde_json::to_string(v).expect("scalars always serialize")
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(a) if a.is_empty() => out.push_str("[]"),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = a.iter().map(scalar).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(a) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(o) if o.is_empty() => out.push_str("{}"),
        Value::Object(o) => {
            out.push_str("{\n");
            for (i, (k, x)) in o.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&scalar(&Value::String(k.clone())));
                out.push_str(": ");
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < o.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        other => out.push_str(&scalar(other)),
    }
}

pub fn object(entries: impl IntoIterator<Item = (&'static str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in entries {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn big_integers_become_strings() {
        let v = json!({"small": 5, "edge": MAX_SAFE, "big": MAX_SAFE + 1, "neg": -(1i64 << 60)});
        let e = encode_big(v);
        assert_eq!(e["small"], json!(5));
        assert_eq!(e["edge"], json!(MAX_SAFE));
        assert_eq!(e["big"], json!((MAX_SAFE + 1).to_string()));
        assert_eq!(e["neg"], json!((-(1i64 << 60)).to_string()));
        assert_eq!(decode_big(e.clone())["big"], json!(MAX_SAFE + 1));
        assert_eq!(decode_big(json!("12")), json!("12"));
    }

    #[test]
    fn printed_form_parses_back() {
        let v = json!({"z": [[1, 2], [3]], "a": [], "m": {"k": [true, null, "x\"y"]}, "e": {}});
        let s = to_canonical_string(&v);
        assert_eq!(serde_json::from_str::<Value>(&s).unwrap(), v);
        assert!(s.contains("[1, 2]"));
    }

    #[test]
    fn keys_are_sorted() {
        let v = json!({"b": 1, "a": {"d": 2, "c": 3}});
        assert_eq!(
            to_canonical_string(&v),
            "{\n  \"a\": {\n    \"c\": 3,\n    \"d\": 2\n  },\n  \"b\": 1\n}\n"
        );
    }
}
