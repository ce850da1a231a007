//! Number formatting shared by every output format.

use symkin::Vec2;

/// Shortest decimal that round-trips, with `-0` folded into `0`.
pub fn num(x: f64) -> String {
    format!("{:?}", x + 0.0)
}

/// Same folding for values handed to the JSON writer.
pub fn clean(x: f64) -> f64 {
    x + 0.0
}

pub fn vec_json(v: Vec2) -> serde_json::Value {
    serde_json::json!({ "x": clean(v.x), "y": clean(v.y) })
}
