//! Minimal JSON-Schema checker covering the subset used by the shipped
//! schema documents: type, enum, required, properties,
//! additionalProperties, items, minItems/maxItems, minimum, and local
//! $ref into definitions.

#![allow(dead_code)]

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::Command;

pub fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf()
}

pub fn load_schema(name: &str) -> Value {
    let path = workspace_root().join("docs/schemas").join(name);
    serde_json::from_str(&std::fs::read_to_string(&path).expect("schema file"))
        .expect("schema parses")
}

pub fn validate(root: &Value, schema: &Value, instance: &Value, at: &str) -> Result<(), String> {
    let schema = resolve_ref(root, schema)?;
    let obj = match schema.as_object() {
        Some(obj) => obj,
        None => return Ok(()), // empty schema admits anything
    };
    if obj.is_empty() {
        return Ok(());
    }
    if let Some(allowed) = obj.get("enum").and_then(Value::as_array) {
        if !allowed.contains(instance) {
            return Err(format!("{at}: {instance} not in enum"));
        }
    }
    if let Some(ty) = obj.get("type").and_then(Value::as_str) {
        let ok = match ty {
            "object" => instance.is_object(),
            "array" => instance.is_array(),
            "string" => instance.is_string(),
            "integer" => instance.is_i64() || instance.is_u64(),
            "number" => instance.is_number(),
            "boolean" => instance.is_boolean(),
            "null" => instance.is_null(),
            other => return Err(format!("{at}: unsupported type `{other}`")),
        };
        if !ok {
            return Err(format!("{at}: expected {ty}, got {instance}"));
        }
    }
    if let Some(minimum) = obj.get("minimum").and_then(Value::as_i64) {
        if let Some(v) = instance.as_i64() {
            if v < minimum {
                return Err(format!("{at}: {v} below minimum {minimum}"));
            }
        }
    }
    if let Some(map) = instance.as_object() {
        if let Some(required) = obj.get("required").and_then(Value::as_array) {
            for key in required {
                let key = key.as_str().unwrap();
                if !map.contains_key(key) {
                    return Err(format!("{at}: missing required key `{key}`"));
                }
            }
        }
        let props = obj.get("properties").and_then(Value::as_object);
        let additional = obj.get("additionalProperties");
        for (key, value) in map {
            let child_at = format!("{at}/{key}");
            if let Some(prop_schema) = props.and_then(|p| p.get(key)) {
                validate(root, prop_schema, value, &child_at)?;
            } else {
                match additional {
                    Some(Value::Bool(false)) => {
                        return Err(format!("{at}: unexpected key `{key}`"));
                    }
                    Some(Value::Bool(true)) | None => {}
                    Some(schema) => validate(root, schema, value, &child_at)?,
                }
            }
        }
    }
    if let Some(items) = instance.as_array() {
        if let Some(min_items) = obj.get("minItems").and_then(Value::as_u64) {
            if (items.len() as u64) < min_items {
                return Err(format!("{at}: fewer than {min_items} items"));
            }
        }
        if let Some(max_items) = obj.get("maxItems").and_then(Value::as_u64) {
            if (items.len() as u64) > max_items {
                return Err(format!("{at}: more than {max_items} items"));
            }
        }
        if let Some(item_schema) = obj.get("items") {
            for (i, item) in items.iter().enumerate() {
                validate(root, item_schema, item, &format!("{at}[{i}]"))?;
            }
        }
    }
    Ok(())
}

fn resolve_ref<'a>(root: &'a Value, schema: &'a Value) -> Result<&'a Value, String> {
    if let Some(reference) = schema.get("$ref").and_then(Value::as_str) {
        let path = reference
            .strip_prefix("#/")
            .ok_or_else(|| format!("unsupported $ref {reference}"))?;
        let mut node = root;
        for part in path.split('/') {
            node = node
                .get(part)
                .ok_or_else(|| format!("dangling $ref {reference}"))?;
        }
        return Ok(node);
    }
    Ok(schema)
}

pub fn assert_valid(schema_file: &str, instance: &Value) {
    let schema = load_schema(schema_file);
    if let Err(msg) = validate(&schema, &schema, instance, "$") {
        panic!("instance does not match {schema_file}: {msg}\n{instance:#}");
    }
}

/// Runs the CLI binary and returns (stdout, exit code).
pub fn run_cli(args: &[&str]) -> (String, i32) {
    let exe = env!("CARGO_BIN_EXE_hlnet");
    let output = Command::new(exe)
        .args(args)
        .env("RUST_LOG", "warn")
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("utf8 output"),
        output.status.code().unwrap_or(-1),
    )
}

pub fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}
