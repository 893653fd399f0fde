//! JSON file formats for gauges and operators.
//!
//! Rationals are encoded losslessly as strings `"p/q"` (or `"p"`) and bare
//! JSON integers are accepted on input. Malformed files are rejected with a
//! diagnostic naming the offending field path, e.g.
//! `generators[2][0]: malformed rational "x"`.
//!
//! Gauge file:
//! ```json
//! {"dim": 2, "generators": [["1","0"],["-1","0"],["0","1/3"]], "label": "example"}
//! ```
//!
//! Operator file (`domain`/`codomain` may be an inline gauge object, a path
//! to a gauge file relative to the operator file, or a fixture name):
//! ```json
//! {"matrix": [["0","1"]], "domain": "referee_plane", "codomain": "upper_real"}
//! ```

use std::path::{Path, PathBuf};

use serde_json::Value;

use crate::error::{Error, Result};
use crate::gauge::{fixtures, PolyhedralGauge};
use crate::operators::LinearOperator;
use crate::scalar::{format_rat, parse_rat, Rat};

/// Load and validate a gauge from a JSON file.
pub fn gauge_from_file(path: impl AsRef<Path>) -> Result<PolyhedralGauge> {
    let path = path.as_ref();
    let value = read_json(path)?;
    gauge_from_value(&value, &display(path)).map_err(|e| contextualize(e, path))
}

/// Parse a gauge from an in-memory JSON value. `source` names the origin
/// for diagnostics.
pub fn gauge_from_value(value: &Value, source: &str) -> Result<PolyhedralGauge> {
    let obj = expect_object(value, source, "")?;
    let dim = expect_u64(require(obj, source, "dim")?, source, "dim")? as usize;
    let generators_value = require(obj, source, "generators")?;
    let rows = expect_array(generators_value, source, "generators")?;
    let mut generators = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let field = format!("generators[{i}]");
        let entries = expect_array(row, source, &field)?;
        let mut g = Vec::with_capacity(entries.len());
        for (j, entry) in entries.iter().enumerate() {
            g.push(expect_rat(entry, source, &format!("{field}[{j}]"))?);
        }
        generators.push(g);
    }
    let label = match obj.get("label") {
        Some(v) => expect_str(v, source, "label")?.to_string(),
        None => String::new(),
    };
    PolyhedralGauge::new(dim, generators, label)
}

/// Serialize a gauge to the JSON file format.
pub fn gauge_to_value(g: &PolyhedralGauge) -> Value {
    let generators: Vec<Value> = g
        .generators()
        .iter()
        .map(|row| Value::Array(row.iter().map(|r| Value::String(format_rat(r))).collect()))
        .collect();
    serde_json::json!({
        "dim": g.dim(),
        "generators": generators,
        "label": g.label(),
    })
}

pub fn gauge_to_file(g: &PolyhedralGauge, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let text = serde_json::to_string_pretty(&gauge_to_value(g)).expect("gauge JSON serializes");
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: display(path),
        source,
    })
}

/// Load an operator (matrix plus its two spaces) from a JSON file.
///
/// Gauge references by path are resolved relative to the operator file.
pub fn operator_from_file(path: impl AsRef<Path>) -> Result<LinearOperator> {
    let path = path.as_ref();
    let value = read_json(path)?;
    let base = path.parent().map(PathBuf::from).unwrap_or_default();
    operator_from_value(&value, &display(path), &base).map_err(|e| contextualize(e, path))
}

/// Parse an operator from an in-memory JSON value; `base` anchors relative
/// gauge paths.
pub fn operator_from_value(value: &Value, source: &str, base: &Path) -> Result<LinearOperator> {
    let obj = expect_object(value, source, "")?;
    let matrix_value = require(obj, source, "matrix")?;
    let rows = expect_array(matrix_value, source, "matrix")?;
    let mut matrix = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let field = format!("matrix[{i}]");
        let entries = expect_array(row, source, &field)?;
        let mut r = Vec::with_capacity(entries.len());
        for (j, entry) in entries.iter().enumerate() {
            r.push(expect_rat(entry, source, &format!("{field}[{j}]"))?);
        }
        matrix.push(r);
    }
    let domain = gauge_reference(require(obj, source, "domain")?, source, "domain", base)?;
    let codomain = gauge_reference(require(obj, source, "codomain")?, source, "codomain", base)?;
    LinearOperator::new(matrix, domain, codomain)
}

pub fn operator_to_value(op: &LinearOperator) -> Value {
    let matrix: Vec<Value> = op
        .matrix()
        .iter()
        .map(|row| Value::Array(row.iter().map(|r| Value::String(format_rat(r))).collect()))
        .collect();
    serde_json::json!({
        "matrix": matrix,
        "domain": gauge_to_value(op.domain()),
        "codomain": gauge_to_value(op.codomain()),
    })
}

pub fn operator_to_file(op: &LinearOperator, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let text =
        serde_json::to_string_pretty(&operator_to_value(op)).expect("operator JSON serializes");
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: display(path),
        source,
    })
}

/// Resolve a space argument that is either a fixture name or a file path.
pub fn load_space(name_or_path: &str) -> Result<PolyhedralGauge> {
    if fixtures::looks_like_fixture(name_or_path) {
        fixtures::by_name(name_or_path)
    } else {
        gauge_from_file(name_or_path)
    }
}

fn gauge_reference(
    value: &Value,
    source: &str,
    field: &str,
    base: &Path,
) -> Result<PolyhedralGauge> {
    match value {
        Value::Object(_) => gauge_from_value(value, &format!("{source}:{field}")),
        Value::String(s) => {
            if fixtures::looks_like_fixture(s) {
                fixtures::by_name(s)
            } else {
                let referenced = base.join(s);
                gauge_from_file(referenced)
            }
        }
        _ => Err(Error::Parse {
            path: source.into(),
            message: format!("{field}: expected a gauge object, file path, or fixture name"),
        }),
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: display(path),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: display(path),
        message: format!("invalid JSON: {e}"),
    })
}

fn display(path: &Path) -> String {
    path.display().to_string()
}

/// Keep the failing file name on errors raised while resolving references.
fn contextualize(e: Error, path: &Path) -> Error {
    match e {
        Error::Input(message) => Error::Parse {
            path: display(path),
            message,
        },
        other => other,
    }
}

fn expect_object<'v>(
    value: &'v Value,
    source: &str,
    field: &str,
) -> Result<&'v serde_json::Map<String, Value>> {
    value.as_object().ok_or_else(|| Error::Parse {
        path: source.into(),
        message: format!(
            "{}: expected an object",
            if field.is_empty() { "root" } else { field }
        ),
    })
}

fn require<'v>(
    obj: &'v serde_json::Map<String, Value>,
    source: &str,
    field: &str,
) -> Result<&'v Value> {
    obj.get(field).ok_or_else(|| Error::Parse {
        path: source.into(),
        message: format!("missing field {field:?}"),
    })
}

fn expect_array<'v>(value: &'v Value, source: &str, field: &str) -> Result<&'v Vec<Value>> {
    value.as_array().ok_or_else(|| Error::Parse {
        path: source.into(),
        message: format!("{field}: expected an array"),
    })
}

fn expect_str<'v>(value: &'v Value, source: &str, field: &str) -> Result<&'v str> {
    value.as_str().ok_or_else(|| Error::Parse {
        path: source.into(),
        message: format!("{field}: expected a string"),
    })
}

fn expect_u64(value: &Value, source: &str, field: &str) -> Result<u64> {
    value.as_u64().ok_or_else(|| Error::Parse {
        path: source.into(),
        message: format!("{field}: expected a nonnegative integer"),
    })
}

fn expect_rat(value: &Value, source: &str, field: &str) -> Result<Rat> {
    let parsed = match value {
        Value::String(s) => parse_rat(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(crate::scalar::int(i))
            } else {
                Err(Error::Input(format!(
                    "non-integer number {n}; use a \"p/q\" string for fractions"
                )))
            }
        }
        other => Err(Error::Input(format!("expected a rational, got {other}"))),
    };
    parsed.map_err(|e| {
        let message = match e {
            Error::Input(m) => m,
            other => other.to_string(),
        };
        Error::Parse {
            path: source.into(),
            message: format!("{field}: {message}"),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use std::io::Write;

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn gauge_round_trip() {
        let f = write_temp(
            r#"{"dim": 2, "generators": [["1","0"],["-1","0"],["0","1/3"]], "label": "ex"}"#,
        );
        let g = gauge_from_file(f.path()).unwrap();
        assert_eq!(g.dim(), 2);
        assert_eq!(g.generators()[2][1], rat(1, 3));
        assert_eq!(g.label(), "ex");

        let out = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
        gauge_to_file(&g, out.path()).unwrap();
        let g2 = gauge_from_file(out.path()).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn bare_integers_are_accepted() {
        let f = write_temp(r#"{"dim": 1, "generators": [[0],[1]]}"#);
        let g = gauge_from_file(f.path()).unwrap();
        assert_eq!(g.generators()[1][0], int(1));
    }

    #[test]
    fn malformed_rational_names_the_field() {
        let f = write_temp(r#"{"dim": 1, "generators": [["0"],["x/y"]]}"#);
        let err = gauge_from_file(f.path()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("generators[1][0]"), "got: {msg}");
    }

    #[test]
    fn missing_field_is_reported() {
        let f = write_temp(r#"{"generators": [["1"]]}"#);
        let msg = gauge_from_file(f.path()).unwrap_err().to_string();
        assert!(msg.contains("dim"), "got: {msg}");
    }

    #[test]
    fn float_entries_are_rejected() {
        let f = write_temp(r#"{"dim": 1, "generators": [[0.5],[1]]}"#);
        let msg = gauge_from_file(f.path()).unwrap_err().to_string();
        assert!(msg.contains("generators[0][0]"), "got: {msg}");
    }

    #[test]
    fn operator_with_fixture_references() {
        let f = write_temp(
            r#"{"matrix": [["0","1"]], "domain": "referee_plane", "codomain": "upper_real"}"#,
        );
        let op = operator_from_file(f.path()).unwrap();
        assert_eq!(op.domain().dim(), 2);
        assert_eq!(op.codomain().dim(), 1);
        assert_eq!(op.matrix()[0][1], int(1));
    }

    #[test]
    fn operator_with_inline_and_relative_gauges() {
        let dir = tempfile::tempdir().unwrap();
        let gauge_path = dir.path().join("line.json");
        std::fs::write(
            &gauge_path,
            r#"{"dim": 1, "generators": [["0"],["1"]], "label": "line"}"#,
        )
        .unwrap();
        let op_path = dir.path().join("op.json");
        std::fs::write(
            &op_path,
            r#"{"matrix": [["1"]],
                "domain": "line.json",
                "codomain": {"dim": 1, "generators": [["0"],["1"]]}}"#,
        )
        .unwrap();
        let op = operator_from_file(&op_path).unwrap();
        assert_eq!(op.domain().label(), "line");
    }

    #[test]
    fn load_space_dispatches_on_shape() {
        assert_eq!(load_space("weighted_linf:2").unwrap().dim(), 2);
        assert!(load_space("no-such-file.json").is_err());
    }

    #[test]
    fn invalid_gauge_in_file_reports_axiom() {
        let f = write_temp(r#"{"dim": 1, "generators": [["1"]]}"#);
        let msg = gauge_from_file(f.path()).unwrap_err().to_string();
        assert!(msg.contains("not nonnegative"), "got: {msg}");
    }
}
