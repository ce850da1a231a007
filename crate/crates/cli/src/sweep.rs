//! Parameter sweeps.

use rayon::prelude::*;
use symkin::motion_spec::MotionSpec;

use crate::analysis::{analyze, Analysis};
use crate::fmt::num;

pub const SWEEP_HEADER: &str = "param,pole_x,pole_y,u_norm,inflection_diameter,p2_x,p2_y,ball_x,ball_y,reason";

/// `steps` samples spanning `[from, to]` inclusively, in increasing order.
pub fn samples(from: f64, to: f64, steps: usize) -> Vec<f64> {
    let n = (steps - 1) as f64;
    (0..steps)
        .map(|i| if i + 1 == steps { to } else { from + (to - from) * (i as f64 / n) })
        .collect()
}

/// Checks the sweep preconditions; the message goes to standard error.
pub fn check_range(from: f64, to: f64, steps: usize) -> Result<(), String> {
    if !(from.is_finite() && to.is_finite()) || from >= to {
        return Err(format!("invalid range: need finite from < to, got {from} .. {to}"));
    }
    if steps < 2 {
        return Err(format!("need at least 2 steps, got {steps}"));
    }
    Ok(())
}

fn cell(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

/// Reasons as `field=code` pairs joined by `;`.
pub fn reason_cell(a: &Analysis) -> String {
    a.absent.iter().map(|(f, c)| format!("{f}={c}")).collect::<Vec<_>>().join(";")
}

fn row(at: f64, a: &Result<Analysis, symkin::KinematicsError>) -> String {
    let a = match a {
        Ok(a) => a,
        Err(e) => return format!("{},,,,,,,,,{}", num(at), e.code()),
    };
    let p2 = a.higher_pole(2);
    [
        num(at),
        cell(a.pole.map(|p| p.x)),
        cell(a.pole.map(|p| p.y)),
        cell(a.u.map(|u| u.norm())),
        cell(a.inflection_diameter()),
        cell(p2.map(|p| p.x)),
        cell(p2.map(|p| p.y)),
        cell(a.balls_point.map(|p| p.x)),
        cell(a.balls_point.map(|p| p.y)),
        reason_cell(a),
    ]
    .join(",")
}

/// Analyses every sample in parallel; results come back in sample order.
pub fn sweep_analyses(spec: &MotionSpec, from: f64, to: f64, steps: usize, order: usize) -> Vec<(f64, Result<Analysis, symkin::KinematicsError>)> {
    samples(from, to, steps).into_par_iter().map(|t| (t, analyze(spec, t, order))).collect()
}

/// The sweep CSV, LF line endings, trailing newline.
pub fn sweep_csv(rows: &[(f64, Result<Analysis, symkin::KinematicsError>)]) -> String {
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for (t, a) in rows {
        out.push_str(&row(*t, a));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_inclusive() {
        let s = samples(0.0, 1.0, 5);
        assert_eq!(s, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(samples(-1.0, 0.3, 2), vec![-1.0, 0.3]);
    }

    #[test]
    fn range_checks() {
        assert!(check_range(0.0, 1.0, 2).is_ok());
        assert!(check_range(1.0, 1.0, 2).is_err());
        assert!(check_range(0.0, 1.0, 1).is_err());
        assert!(check_range(0.0, f64::NAN, 3).is_err());
    }
}
