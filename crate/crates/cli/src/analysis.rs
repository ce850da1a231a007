//! Per-instant analysis: every quantity the library can report, with a
//! reason code in place of each one that is degenerate at this instant.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use symkin::bresse::{balls_point_bresse, bresse_set, BresseSet, Locus};
use symkin::motion_spec::{evaluate, evaluate_geometric, MotionSpec};
use symkin::polodes::{canonicalize, polode_curvatures, BottemaInvariants, PolodeRadius};
use symkin::rigid_motion::{acceleration_pole, pole_point_jets, velocity_pole, MotionState};
use symkin::tol::tau_deg;
use symkin::{KinematicsError, Vec2};

use crate::fmt::{clean, vec_json};

/// Everything known about one instant.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub at: f64,
    pub order: usize,
    pub pole: Option<Vec2>,
    pub pole_accel: Option<Vec2>,
    pub u: Option<Vec2>,
    pub inflection_pole: Option<Vec2>,
    pub higher_poles: Vec<(usize, Result<Vec2, KinematicsError>)>,
    pub bresse: Vec<(usize, Result<BresseSet, KinematicsError>)>,
    pub balls_point: Option<Vec2>,
    pub bottema: Option<BottemaInvariants>,
    pub fixed_polode_radius: Option<Vec2>,
    pub moving_polode_radius: Option<Vec2>,
    /// Field name → reason code for every absent field.
    pub absent: BTreeMap<&'static str, &'static str>,
}

impl Analysis {
    fn absent_all(&mut self, fields: &[&'static str], e: &KinematicsError) {
        for f in fields {
            self.absent.insert(f, e.code());
        }
    }

    pub fn inflection_diameter(&self) -> Option<f64> {
        Some((self.inflection_pole? - self.pole?).norm())
    }

    pub fn higher_pole(&self, k: usize) -> Option<Vec2> {
        self.higher_poles.iter().find(|(j, _)| *j == k).and_then(|(_, r)| r.as_ref().ok().copied())
    }

    /// `true` when every present number is finite.
    pub fn is_finite(&self) -> bool {
        let vecs = [self.pole, self.pole_accel, self.u, self.inflection_pole, self.balls_point, self.fixed_polode_radius, self.moving_polode_radius];
        vecs.iter().flatten().all(|v| v.is_finite())
            && self.higher_poles.iter().all(|(_, r)| r.as_ref().map_or(true, |v| v.is_finite()))
            && self.bottema.as_ref().is_none_or(|b| {
                [b.b2, b.a3, b.b3].iter().chain(b.higher.iter().flat_map(|(a, b)| [a, b])).all(|x| x.is_finite())
            })
    }
}

fn stationary(state: &MotionState, u: Vec2, r_ap: Vec2) -> bool {
    u.norm() <= tau_deg(&[state.a_jets.get(1).norm(), state.omega_value() * r_ap.norm()])
}

fn radius(r: Result<PolodeRadius, KinematicsError>) -> Result<Vec2, KinematicsError> {
    r.and_then(PolodeRadius::finite)
}

/// Analyses `spec` at parameter `at` with jets of order `order` (≥ 3).
///
/// Fails only when the motion cannot be evaluated at all; kinematic
/// degeneracies become absent fields.
pub fn analyze(spec: &MotionSpec, at: f64, order: usize) -> Result<Analysis, KinematicsError> {
    let state = evaluate(spec, at, order)?;
    let mut a = Analysis {
        at,
        order,
        pole: None,
        pole_accel: None,
        u: None,
        inflection_pole: None,
        higher_poles: Vec::new(),
        bresse: Vec::new(),
        balls_point: None,
        bottema: None,
        fixed_polode_radius: None,
        moving_polode_radius: None,
        absent: BTreeMap::new(),
    };
    let dependent = [
        "pole",
        "pole_accel",
        "u",
        "inflection_pole",
        "balls_point",
        "bottema",
        "fixed_polode_radius",
        "moving_polode_radius",
    ];
    let p = match velocity_pole(&state) {
        Ok(p) => p,
        Err(e) => {
            a.absent_all(&dependent, &e);
            for k in 2..=order {
                a.higher_poles.push((k, acceleration_pole(&state, k)));
                a.bresse.push((k, Err(e.clone())));
            }
            return Ok(a);
        }
    };
    a.pole = Some(p);
    let pj = pole_point_jets(&state, 2)?;
    let w = state.omega_value();
    let p2 = pj.get(2);
    match acceleration_pole(&state, 2) {
        Ok(q) => a.pole_accel = Some(q),
        Err(e) => a.absent_all(&["pole_accel"], &e),
    }
    a.inflection_pole = Some(p + p2 / (w * w));
    let u = p2.tilde() / w;
    if stationary(&state, u, p - state.a_pos()) {
        a.absent.insert("u", KinematicsError::UndefinedTangent.code());
    } else {
        a.u = Some(u);
    }
    for k in 2..=order {
        a.higher_poles.push((k, acceleration_pole(&state, k)));
        a.bresse.push((k, bresse_set(&state, k)));
    }
    match balls_point_bresse(&state) {
        Ok(b) => a.balls_point = Some(b),
        Err(e) => a.absent_all(&["balls_point"], &e),
    }
    match canonicalize(&state) {
        Ok((_, inv)) => a.bottema = Some(inv),
        Err(e) => a.absent_all(&["bottema"], &e),
    }
    let curv = if a.u.is_none() {
        Err(KinematicsError::UndefinedTangent)
    } else {
        evaluate_geometric(spec, at, order).and_then(|g| polode_curvatures(&g))
    };
    match curv {
        Ok(c) => {
            for (field, r) in [("fixed_polode_radius", c.fixed), ("moving_polode_radius", c.moving)] {
                match radius(Ok(r)) {
                    Ok(v) if field == "fixed_polode_radius" => a.fixed_polode_radius = Some(v),
                    Ok(v) => a.moving_polode_radius = Some(v),
                    Err(e) => a.absent_all(&[field], &e),
                }
            }
        }
        Err(e) => a.absent_all(&["fixed_polode_radius", "moving_polode_radius"], &e),
    }
    Ok(a)
}

fn opt_vec(v: Option<Vec2>) -> Value {
    v.map_or(Value::Null, vec_json)
}

fn locus_json(l: &Locus) -> Value {
    match *l {
        Locus::CircleThroughPole { d, .. } => json!({ "kind": "circle", "diameter": vec_json(d) }),
        Locus::LineThroughPole { dir, .. } => json!({ "kind": "line", "direction": vec_json(dir) }),
        Locus::PointOnly { .. } => json!({ "kind": "point" }),
        Locus::Degenerate => json!({ "kind": "degenerate" }),
    }
}

impl Analysis {
    /// The JSON report; keys are sorted, absent values are `null`.
    pub fn to_json(&self, spec_name: &str) -> Value {
        let higher: Vec<Value> = self
            .higher_poles
            .iter()
            .map(|(k, r)| match r {
                Ok(v) => json!({ "k": k, "point": vec_json(*v), "reason": null }),
                Err(e) => json!({ "k": k, "point": null, "reason": e.code() }),
            })
            .collect();
        let bresse: Vec<Value> = self
            .bresse
            .iter()
            .map(|(k, r)| match r {
                Ok(b) => json!({
                    "k": k,
                    "zero_normal": locus_json(&b.zero_normal),
                    "zero_tangential": locus_json(&b.zero_tangential),
                    "reason": null,
                }),
                Err(e) => json!({ "k": k, "zero_normal": null, "zero_tangential": null, "reason": e.code() }),
            })
            .collect();
        let bottema = self.bottema.as_ref().map_or(Value::Null, |b| {
            json!({
                "b2": clean(b.b2),
                "a3": clean(b.a3),
                "b3": clean(b.b3),
                "higher": b.higher.iter().enumerate().map(|(i, (a, bb))| json!({ "k": i + 4, "a": clean(*a), "b": clean(*bb) })).collect::<Vec<_>>(),
            })
        });
        json!({
            "spec": spec_name,
            "at": clean(self.at),
            "order": self.order,
            "pole": opt_vec(self.pole),
            "pole_accel": opt_vec(self.pole_accel),
            "u": opt_vec(self.u),
            "inflection_pole": opt_vec(self.inflection_pole),
            "inflection_diameter": self.inflection_diameter().map(clean),
            "higher_poles": higher,
            "bresse": bresse,
            "balls_point": opt_vec(self.balls_point),
            "bottema": bottema,
            "fixed_polode_radius": opt_vec(self.fixed_polode_radius),
            "moving_polode_radius": opt_vec(self.moving_polode_radius),
            "absent": self.absent,
        })
    }
}
