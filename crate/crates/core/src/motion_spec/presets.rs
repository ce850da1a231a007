//! Closed-form reference motions with known polodes.
//!
//! * `pure-rotation`: rotation about the fixed point (1, 0.5) with `θ = t`;
//!   both polodes collapse to that point.
//! * `rolling-wheel`: a wheel of radius 1 rolling on the line `y = 0`
//!   (centre `(t, 1)`, `θ = −t`); the fixed polode is that line, the
//!   moving polode the rim.
//! * `cardan`: a circle of radius 1 rolling inside a circle of radius 2
//!   (`o = (cos t, sin t)`, `θ = −t`); the polodes are those two circles.

use super::{parse_spec, MotionSpec};

pub struct Preset {
    pub name: &'static str,
    pub summary: &'static str,
    pub document: &'static str,
}

pub const PRESETS: [Preset; 3] = [
    Preset {
        name: "pure-rotation",
        summary: "rotation about the fixed point (1, 0.5)",
        document: include_str!("../../fixtures/presets/pure-rotation.motion"),
    },
    Preset {
        name: "rolling-wheel",
        summary: "unit wheel rolling on the x axis",
        document: include_str!("../../fixtures/presets/rolling-wheel.motion"),
    },
    Preset {
        name: "cardan",
        summary: "unit circle rolling inside a circle of radius 2",
        document: include_str!("../../fixtures/presets/cardan.motion"),
    },
];

/// Wheel radius of `rolling-wheel`.
pub const WHEEL_RADIUS: f64 = 1.0;
/// Crank radius `a` of `cardan`; the fixed polode has radius `2a`.
pub const CARDAN_RADIUS: f64 = 1.0;

pub fn find(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}

/// The parsed preset; panics only if a shipped fixture is malformed.
pub fn preset(name: &str) -> Option<MotionSpec> {
    find(name).map(|p| parse_spec(p.document).expect("shipped presets parse"))
}
