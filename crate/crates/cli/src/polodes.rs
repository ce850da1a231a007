//! Sampled polodes: the pole in the fixed frame, the same point in body
//! coordinates, and the body curve carried to the pose at a reference sample.

use rayon::prelude::*;
use symkin::motion_spec::{evaluate, MotionSpec};
use symkin::rigid_motion::velocity_pole;
use symkin::{KinematicsError, Vec2};

use crate::fmt::num;
use crate::sweep::samples;

pub const POLODES_HEADER: &str = "param,theta,fixed_x,fixed_y,moving_x,moving_y,moving_fixed_x,moving_fixed_y,reason";

#[derive(Clone, Debug)]
pub struct PolodeSample {
    pub param: f64,
    pub theta: f64,
    /// Fixed polode point and the same point in body coordinates.
    pub points: Result<(Vec2, Vec2), KinematicsError>,
}

#[derive(Clone, Debug)]
pub struct PolodeTrace {
    pub samples: Vec<PolodeSample>,
    /// Index of the sample whose pose carries the moving polode.
    pub reference: usize,
    pub ref_origin: Vec2,
    pub ref_theta: f64,
}

impl PolodeTrace {
    /// Body point `m` seen in the fixed frame at the reference pose.
    pub fn carried(&self, m: Vec2) -> Vec2 {
        self.ref_origin + m.rotate(self.ref_theta)
    }

    pub fn reference_param(&self) -> f64 {
        self.samples[self.reference].param
    }
}

fn sample(spec: &MotionSpec, t: f64) -> PolodeSample {
    let theta = spec.angle(t);
    let points = evaluate(spec, t, 2).and_then(|s| velocity_pole(&s)).map(|p| {
        let o = spec.position(t);
        (p, (p - o).rotate(-theta))
    });
    PolodeSample { param: t, theta, points }
}

pub fn trace(spec: &MotionSpec, from: f64, to: f64, steps: usize) -> PolodeTrace {
    let samples: Vec<PolodeSample> = samples(from, to, steps).into_par_iter().map(|t| sample(spec, t)).collect();
    let reference = samples.len() / 2;
    let t = samples[reference].param;
    PolodeTrace { ref_origin: spec.position(t), ref_theta: spec.angle(t), reference, samples }
}

pub fn polodes_csv(tr: &PolodeTrace) -> String {
    let mut out = String::from(POLODES_HEADER);
    out.push('\n');
    for s in &tr.samples {
        let line = match &s.points {
            Ok((f, m)) => {
                let c = tr.carried(*m);
                [s.param, s.theta, f.x, f.y, m.x, m.y, c.x, c.y].map(num).join(",") + ","
            }
            Err(e) => format!("{},{},,,,,,,{}", num(s.param), num(s.theta), e.code()),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}
