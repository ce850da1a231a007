//! Declarative motion files: closed-form `o(t)` and `θ(t)` built from
//! polynomial and harmonic terms, so every jet is exact.
//!
//! ```text
//! # comments run to the end of the line
//! name = rolling-wheel
//! parameter = time          # or `angle`: then θ is the parameter itself
//! char_length = 1.0         # optional, default 1
//!
//! [o.x]
//! poly 0.0 1.0              # c0 c1 … (degree ≤ 10)
//! [o.y]
//! poly 1.0
//! sin 0.5 2.0 0.0           # amp · sin(freq·t + phase); `cos` likewise
//! [theta]                   # required for `time`, rejected for `angle`
//! poly 0.0 -1.0
//! ```
//!
//! Keys come before the first section; each key and each section may appear
//! once; a component holds at most 16 terms.

mod expr;
mod parse;
pub mod presets;
mod serialize;

pub use expr::{FunctionExpr, Term, MAX_DEGREE, MAX_TERMS};
pub use parse::parse_spec;
pub use serialize::serialize_spec;

use serde::Serialize;
use thiserror::Error;

use crate::error::{KinematicsError, Result};
use crate::jets::{PlanarJet, ScalarJet};
use crate::polodes::GeometricMotion;
use crate::rigid_motion::MotionState;
use crate::symplectic::Vec2;
use crate::tol::tau_omega;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    /// The parameter is time; `θ(t)` is given explicitly.
    Time,
    /// The parameter is the rotation angle itself (`θ̇ = 1`).
    Angle,
}

impl Parameter {
    pub fn as_str(self) -> &'static str {
        match self {
            Parameter::Time => "time",
            Parameter::Angle => "angle",
        }
    }
}

/// A parsed, validated motion definition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MotionSpec {
    pub name: String,
    pub parameter: Parameter,
    pub char_length: f64,
    pub o_x: FunctionExpr,
    pub o_y: FunctionExpr,
    /// Empty when `parameter` is `angle`.
    pub theta: FunctionExpr,
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum SpecError {
    #[error("syntax error at line {line}, column {col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("invalid field `{field}`: {reason}")]
    Validation { field: String, reason: String },
}

impl MotionSpec {
    /// Position of the moving-frame origin.
    pub fn position(&self, t: f64) -> Vec2 {
        Vec2::new(self.o_x.value(t), self.o_y.value(t))
    }

    pub fn angle(&self, t: f64) -> f64 {
        match self.parameter {
            Parameter::Time => self.theta.value(t),
            Parameter::Angle => t,
        }
    }

    /// Fixed-frame position of the body point with moving-frame coordinates `local`.
    pub fn body_point(&self, t: f64, local: Vec2) -> Vec2 {
        self.position(t) + local.rotate(self.angle(t))
    }

    fn theta_jet(&self, at: f64, order: usize) -> Result<ScalarJet> {
        Ok(match self.parameter {
            Parameter::Time => self.theta.jet(at, order)?,
            Parameter::Angle => ScalarJet::variable(at, order),
        })
    }

    fn o_jet(&self, at: f64, order: usize) -> Result<PlanarJet> {
        Ok(PlanarJet::from_components(&self.o_x.jet(at, order)?, &self.o_y.jet(at, order)?)?)
    }
}

fn check_args(at: f64, order: usize) -> Result<()> {
    if !at.is_finite() {
        return Err(KinematicsError::NonFinite("parameter value"));
    }
    if order == 0 {
        return Err(crate::JetError::InsufficientOrder { needed: 1, available: 0 }.into());
    }
    if order > crate::K_MAX {
        return Err(crate::JetError::OrderTooLarge(order).into());
    }
    Ok(())
}

/// Instantaneous state at parameter `at`, with the moving-frame origin as
/// reference point and jets of order `order` (`1..=12`).
pub fn evaluate(spec: &MotionSpec, at: f64, order: usize) -> Result<MotionState> {
    check_args(at, order)?;
    let a_jets = spec.o_jet(at, order)?;
    let omega = spec.theta_jet(at, order)?.shift()?;
    Ok(MotionState::new(a_jets, omega).with_char_length(spec.char_length))
}

/// The same instant in the angle parametrization.
pub fn evaluate_geometric(spec: &MotionSpec, at: f64, order: usize) -> Result<GeometricMotion> {
    check_args(at, order)?;
    let o = spec.o_jet(at, order)?;
    match spec.parameter {
        Parameter::Angle => Ok(GeometricMotion::new(o, at)),
        Parameter::Time => {
            let theta = spec.theta_jet(at, order)?;
            if theta.get(1).abs() <= tau_omega(o.get(1).norm(), spec.char_length) {
                return Err(KinematicsError::PureTranslation);
            }
            let t_of_theta = theta.with(0, 0.0).inverse(at)?;
            Ok(GeometricMotion::new(o.compose(&t_of_theta), theta.value()))
        }
    }
}
