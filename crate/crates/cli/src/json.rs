//! Exact JSON encoding.
//!
//! Rationals are strings `"p/q"` (or `"p"` for integers). A field element is
//! either a rational string or `{"x": e, "y": e, "r": e}` meaning
//! `x + y * sqrt(r)`, nested down to rationals.

use equidissect::construction::NgonVerdict;
use equidissect::dissection::{Dissection, Piece};
use equidissect::exactnum::{make_rational, BigInt, BigRational, FieldElem, Interval, NumError};
use equidissect::geom2d::{Point, Polygon, RigidMotion};
use equidissect::report::{CheckResult, VerificationReport, Witness};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JsonError {
    #[error("{0}")]
    Invalid(String),
    #[error("tower depth {depth} exceeds the limit {limit}")]
    TowerLimitExceeded { depth: usize, limit: usize },
}

fn invalid(msg: impl Into<String>) -> JsonError {
    JsonError::Invalid(msg.into())
}

impl From<NumError> for JsonError {
    fn from(e: NumError) -> JsonError {
        match e {
            NumError::TowerLimitExceeded { depth, limit } => JsonError::TowerLimitExceeded { depth, limit },
            other => invalid(other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, JsonError>;

pub fn rational_to_json(q: &BigRational) -> Value {
    if q.is_integer() {
        Value::String(q.numer().to_string())
    } else {
        Value::String(format!("{}/{}", q.numer(), q.denom()))
    }
}

/// Parses `"p/q"`, `"p"`, or a JSON integer.
pub fn parse_rational_str(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| invalid(format!("bad rational {s:?}")))?;
    let q: BigInt = q.parse().map_err(|_| invalid(format!("bad rational {s:?}")))?;
    Ok(make_rational(p, q)?)
}

pub fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational_str(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational_str(&n.to_string()),
        other => Err(invalid(format!("expected a rational string, got {other}"))),
    }
}

pub fn elem_to_json(e: &FieldElem) -> Value {
    match e.components() {
        None => rational_to_json(e.as_rational().expect("rational when no components")),
        Some((x, y, r)) => json!({
            "x": elem_to_json(&x),
            "y": elem_to_json(&y),
            "r": elem_to_json(&r),
        }),
    }
}

pub fn elem_from_json(v: &Value, max_depth: usize) -> Result<FieldElem> {
    match v {
        Value::Object(m) => {
            let get = |k: &str| m.get(k).ok_or_else(|| invalid(format!("field element is missing {k:?}")));
            let x = elem_from_json(get("x")?, max_depth)?;
            let y = elem_from_json(get("y")?, max_depth)?;
            let r = elem_from_json(get("r")?, max_depth)?;
            if m.len() != 3 {
                return Err(invalid("field element has unexpected keys"));
            }
            let root = r.sqrt_adjoin_limited(max_depth)?;
            let value = x + y * root;
            if value.tower_depth() > max_depth {
                return Err(JsonError::TowerLimitExceeded {
                    depth: value.tower_depth(),
                    limit: max_depth,
                });
            }
            Ok(value)
        }
        other => Ok(FieldElem::from_rational(rational_from_json(other)?)),
    }
}

pub fn point_to_json(p: &Point) -> Value {
    json!([elem_to_json(&p.x), elem_to_json(&p.y)])
}

pub fn point_from_json(v: &Value, max_depth: usize) -> Result<Point> {
    match v.as_array().map(Vec::as_slice) {
        Some([x, y]) => Ok(Point {
            x: elem_from_json(x, max_depth)?,
            y: elem_from_json(y, max_depth)?,
        }),
        _ => Err(invalid(format!("expected a point [x, y], got {v}"))),
    }
}

pub fn polygon_to_json(p: &Polygon) -> Value {
    json!({ "vertices": p.vertices().iter().map(point_to_json).collect::<Vec<_>>() })
}

pub fn polygon_from_json(v: &Value, max_depth: usize) -> Result<Polygon> {
    let verts = v
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| invalid("polygon needs a \"vertices\" array"))?;
    let pts = verts.iter().map(|p| point_from_json(p, max_depth)).collect::<Result<Vec<_>>>()?;
    Polygon::new(pts).map_err(|e| invalid(format!("bad polygon: {e}")))
}

/// A single polygon object or an array of them.
pub fn polygons_from_json(v: &Value, max_depth: usize) -> Result<Vec<Polygon>> {
    match v {
        Value::Array(items) => items.iter().map(|p| polygon_from_json(p, max_depth)).collect(),
        _ => Ok(vec![polygon_from_json(v, max_depth)?]),
    }
}

pub fn motion_to_json(m: &RigidMotion) -> Value {
    json!({ "c": elem_to_json(&m.c), "s": elem_to_json(&m.s), "t": point_to_json(&m.t) })
}

/// Motions are taken as written; validity is the verifier's business.
pub fn motion_from_json(v: &Value, max_depth: usize) -> Result<RigidMotion> {
    let get = |k: &str| v.get(k).ok_or_else(|| invalid(format!("motion is missing {k:?}")));
    Ok(RigidMotion::from_raw_parts(
        elem_from_json(get("c")?, max_depth)?,
        elem_from_json(get("s")?, max_depth)?,
        point_from_json(get("t")?, max_depth)?,
    ))
}

fn index_from_json(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|i| i as usize)
        .ok_or_else(|| invalid(format!("piece needs a non-negative integer {key:?}")))
}

pub fn dissection_to_json(d: &Dissection) -> Value {
    let pieces: Vec<Value> = d
        .pieces
        .iter()
        .map(|p| {
            json!({
                "shape": polygon_to_json(&p.shape),
                "source_index": p.source_index,
                "motion": motion_to_json(&p.motion),
                "target_index": p.target_index,
            })
        })
        .collect();
    json!({
        "sources": d.sources.iter().map(polygon_to_json).collect::<Vec<_>>(),
        "targets": d.targets.iter().map(polygon_to_json).collect::<Vec<_>>(),
        "pieces": pieces,
        "allow_reflections": false,
    })
}

pub fn dissection_from_json(v: &Value, max_depth: usize) -> Result<Dissection> {
    match v.get("allow_reflections") {
        None | Some(Value::Bool(false)) => {}
        Some(Value::Bool(true)) => {
            return Err(invalid("allow_reflections = true is not supported: only proper rigid motions are accepted"))
        }
        Some(other) => return Err(invalid(format!("allow_reflections must be a boolean, got {other}"))),
    }
    let list = |k: &str| {
        v.get(k)
            .and_then(Value::as_array)
            .ok_or_else(|| invalid(format!("dissection needs a {k:?} array")))
    };
    let sources = list("sources")?.iter().map(|p| polygon_from_json(p, max_depth)).collect::<Result<Vec<_>>>()?;
    let targets = list("targets")?.iter().map(|p| polygon_from_json(p, max_depth)).collect::<Result<Vec<_>>>()?;
    let pieces = list("pieces")?
        .iter()
        .map(|p| {
            let shape = polygon_from_json(p.get("shape").ok_or_else(|| invalid("piece needs a shape"))?, max_depth)?;
            let motion = motion_from_json(p.get("motion").ok_or_else(|| invalid("piece needs a motion"))?, max_depth)?;
            Ok(Piece::new(shape, index_from_json(p, "source_index")?, motion, index_from_json(p, "target_index")?))
        })
        .collect::<Result<Vec<_>>>()?;
    Dissection::new(sources, targets, pieces).map_err(|e| invalid(e.to_string()))
}

pub fn report_to_json(r: &VerificationReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("name".into(), json!(c.name));
            m.insert("passed".into(), json!(c.passed));
            let ws: Vec<Value> = c
                .witnesses
                .iter()
                .map(|w| json!({ "label": w.label, "value": elem_to_json(&w.value), "approx": w.approx() }))
                .collect();
            m.insert("witnesses".into(), Value::Array(ws));
            if let Some(n) = &c.note {
                m.insert("note".into(), json!(n));
            }
            Value::Object(m)
        })
        .collect();
    json!({ "verdict": if r.passed() { "VERIFIED" } else { "FAILED" }, "passed": r.passed(), "checks": checks })
}

pub fn report_from_json(v: &Value, max_depth: usize) -> Result<VerificationReport> {
    let checks = v
        .get("checks")
        .and_then(Value::as_array)
        .ok_or_else(|| invalid("report needs a \"checks\" array"))?;
    let checks = checks
        .iter()
        .map(|c| {
            let name = c.get("name").and_then(Value::as_str).ok_or_else(|| invalid("check needs a name"))?;
            let passed = c.get("passed").and_then(Value::as_bool).ok_or_else(|| invalid("check needs passed"))?;
            let witnesses = c
                .get("witnesses")
                .and_then(Value::as_array)
                .map(|ws| {
                    ws.iter()
                        .map(|w| {
                            let label = w.get("label").and_then(Value::as_str).ok_or_else(|| invalid("witness needs a label"))?;
                            let value = elem_from_json(w.get("value").ok_or_else(|| invalid("witness needs a value"))?, max_depth)?;
                            Ok(Witness::new(label, value))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .transpose()?
                .unwrap_or_default();
            Ok(CheckResult {
                name: name.to_string(),
                passed,
                witnesses,
                note: c.get("note").and_then(Value::as_str).map(str::to_string),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::new(checks))
}

pub fn interval_to_json(iv: &Interval) -> Value {
    json!({ "lo": rational_to_json(&iv.lo), "hi": rational_to_json(&iv.hi) })
}

pub fn interval_from_json(v: &Value) -> Result<Interval> {
    let get = |k: &str| v.get(k).ok_or_else(|| invalid(format!("interval is missing {k:?}")));
    Ok(Interval {
        lo: rational_from_json(get("lo")?)?,
        hi: rational_from_json(get("hi")?)?,
    })
}

pub fn ngon_to_json(v: &NgonVerdict) -> Value {
    json!({
        "n": v.n,
        "holds": v.holds,
        "kappa": interval_to_json(&v.kappa),
        "residual": interval_to_json(&v.residual),
    })
}

pub fn ngon_from_json(v: &Value) -> Result<NgonVerdict> {
    Ok(NgonVerdict {
        n: v.get("n").and_then(Value::as_u64).ok_or_else(|| invalid("verdict needs n"))? as u32,
        holds: v.get("holds").and_then(Value::as_bool).ok_or_else(|| invalid("verdict needs holds"))?,
        kappa: interval_from_json(v.get("kappa").ok_or_else(|| invalid("verdict needs kappa"))?)?,
        residual: interval_from_json(v.get("residual").ok_or_else(|| invalid("verdict needs residual"))?)?,
    })
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
