use std::fmt::Write;

use super::expr::{FunctionExpr, Term};
use super::{MotionSpec, Parameter};

/// Shortest round-trip decimal; `-0` prints as `0.0`.
pub(crate) fn num(x: f64) -> String {
    if x == 0.0 {
        "0.0".to_string()
    } else {
        format!("{x:?}")
    }
}

fn section(out: &mut String, name: &str, f: &FunctionExpr) {
    let _ = writeln!(out, "\n[{name}]");
    for t in &f.terms {
        let line = match t {
            Term::Poly { coeffs } => {
                let c: Vec<String> = coeffs.iter().map(|&c| num(c)).collect();
                format!("poly {}", c.join(" "))
            }
            Term::Sin { amp, freq, phase } => format!("sin {} {} {}", num(*amp), num(*freq), num(*phase)),
            Term::Cos { amp, freq, phase } => format!("cos {} {} {}", num(*amp), num(*freq), num(*phase)),
        };
        let _ = writeln!(out, "{line}");
    }
}

/// Canonical text of a motion file: fixed key order, one blank line before
/// each section, no comments, shortest round-trip numbers.
pub fn serialize_spec(spec: &MotionSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "name = {}", spec.name);
    let _ = writeln!(out, "parameter = {}", spec.parameter.as_str());
    let _ = writeln!(out, "char_length = {}", num(spec.char_length));
    section(&mut out, "o.x", &spec.o_x);
    section(&mut out, "o.y", &spec.o_y);
    if spec.parameter == Parameter::Time {
        section(&mut out, "theta", &spec.theta);
    }
    out
}
