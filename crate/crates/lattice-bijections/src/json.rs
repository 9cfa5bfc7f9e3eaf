//! JSON forms of the four value kinds.
//!
//! Every field holds the text form of the corresponding component, so a JSON
//! object round-trips through the same parsers as the plain text grammar.

use lattice_bijections_core::path::{GridPoint, NEPath};
use lattice_bijections_core::warmup::{MarkedTiePath, TiePath};
use lattice_bijections_core::{Error, MarkedPath, ParseError, PathTriple, Value, ValueKind};
use serde_json::{json, Map, Value as Json};

pub fn ne_path(p: &NEPath) -> Json {
    let s = p.start();
    json!({ "start": [s.x, s.y], "steps": lattice_bijections_core::path::format_steps(p.steps()) })
}

pub fn to_json(v: &Value) -> Json {
    match v {
        Value::Path(p) => ne_path(p),
        Value::MarkedTie(m) => {
            let mut obj = ne_path(m.path().path());
            obj["mark"] = json!(m.mark());
            obj
        }
        Value::Triple(t) => json!({
            "A": t.a().to_string(),
            "B": t.b().to_string(),
            "C": t.c().to_string(),
        }),
        Value::Marked(m) => json!({ "H": m.path().to_string(), "X": m.mark() }),
    }
}

fn malformed(detail: impl Into<String>) -> Error {
    ParseError::Malformed {
        what: "json value",
        detail: detail.into(),
    }
    .into()
}

fn field<'a>(obj: &'a Map<String, Json>, key: &str) -> Result<&'a Json, Error> {
    obj.get(key).ok_or_else(|| malformed(format!("missing field {key:?}")))
}

fn str_field<'a>(obj: &'a Map<String, Json>, key: &str) -> Result<&'a str, Error> {
    field(obj, key)?
        .as_str()
        .ok_or_else(|| malformed(format!("field {key:?} must be a string")))
}

fn uint_field(obj: &Map<String, Json>, key: &str) -> Result<usize, Error> {
    field(obj, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| malformed(format!("field {key:?} must be a non-negative integer")))
}

fn ne_from(obj: &Map<String, Json>) -> Result<NEPath, Error> {
    let start = match field(obj, "start")?.as_array().map(Vec::as_slice) {
        Some([x, y]) => match (x.as_i64(), y.as_i64()) {
            (Some(x), Some(y)) => GridPoint::new(x, y),
            _ => return Err(malformed("start coordinates must be integers")),
        },
        _ => return Err(malformed("start must be [x, y]")),
    };
    let steps = lattice_bijections_core::path::parse_steps(str_field(obj, "steps")?)?;
    Ok(NEPath::new(start, steps))
}

/// Parses one JSON document as a value of the given kind.
pub fn from_json(kind: ValueKind, text: &str) -> Result<Value, Error> {
    let doc: Json = serde_json::from_str(text).map_err(|e| malformed(e.to_string()))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| malformed("expected a JSON object"))?;
    Ok(match kind {
        ValueKind::Path => Value::Path(ne_from(obj)?),
        ValueKind::MarkedTie => {
            let path = TiePath::new(ne_from(obj)?)?;
            Value::MarkedTie(MarkedTiePath::new(path, uint_field(obj, "mark")?)?)
        }
        ValueKind::Triple => {
            let parts = [str_field(obj, "A")?, str_field(obj, "B")?, str_field(obj, "C")?];
            Value::Triple(PathTriple::new(
                parts[0].parse()?,
                parts[1].parse()?,
                parts[2].parse()?,
            )?)
        }
        ValueKind::Marked => Value::Marked(MarkedPath::new(
            str_field(obj, "H")?.parse()?,
            uint_field(obj, "X")?,
        )?),
    })
}

/// Parses `text` as JSON if it looks like an object, otherwise as plain text.
pub fn parse_any(kind: ValueKind, text: &str) -> Result<Value, Error> {
    let text = text.trim();
    if text.starts_with('{') {
        from_json(kind, text)
    } else {
        kind.parse(text)
    }
}
