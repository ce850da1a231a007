//! Conjugate points and the Euler–Savary family, in vector form.
//!
//! All constructions here are purely geometric: they take points, not jets.
//! Inputs within a relative [`GUARD_BAND`] of a singular configuration are
//! rejected instead of producing huge answers.

use crate::error::{KinematicsError, Result};
use crate::rigid_motion::{point_derivative, MotionState};
use crate::symplectic::Vec2;
use crate::tol::{tau_deg, GUARD_BAND};
use crate::trajectory::center_of_curvature;

/// A moving point `a` and the centre of curvature `a0` of its path.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConjugatePair {
    pub a: Vec2,
    pub a0: Vec2,
}

impl ConjugatePair {
    /// `r_AA0`.
    pub fn ray(&self) -> Vec2 {
        self.a0 - self.a
    }
}

/// Conjugate of the body point at absolute position `a`, from its velocity
/// and acceleration.
pub fn conjugate_point(state: &MotionState, a: Vec2) -> Result<ConjugatePair> {
    let r = a - state.a_pos();
    let v = point_derivative(state, r, 1)?;
    let acc = point_derivative(state, r, 2)?;
    Ok(ConjugatePair { a, a0: a + center_of_curvature(v, acc)? })
}

/// Inputs of the scalar Euler–Savary equation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EulerSavaryScalarInput {
    /// Signed distance from the pole along the pole ray.
    pub r: f64,
    /// Inflection-circle diameter.
    pub d: f64,
    /// Angle from the pole tangent to the pole ray.
    pub theta: f64,
}

fn check_ray(ray: Vec2) -> Result<()> {
    if ray.norm() <= tau_deg(&[]) || !ray.is_finite() {
        Err(KinematicsError::DegenerateConjugate)
    } else {
        Ok(())
    }
}

/// Intersection of the pole rays `A A0` and `B B0`.
pub fn pole_from_conjugates(pair1: &ConjugatePair, pair2: &ConjugatePair) -> Result<Vec2> {
    let (ra, rb) = (pair1.ray(), pair2.ray());
    check_ray(ra)?;
    check_ray(rb)?;
    let den = rb.perp_dot(ra);
    if den.abs() <= GUARD_BAND * ra.norm() * rb.norm() {
        return Err(KinematicsError::ParallelRays);
    }
    let r_ab = pair2.a - pair1.a;
    Ok(pair1.a + ra * (rb.perp_dot(r_ab) / den))
}

/// `r_AA0 = r_PA² / (r_PW·r_PA − r_PA²) · r_PA`.
pub fn euler_savary_vector(r_pa: Vec2, r_pw: Vec2) -> Result<Vec2> {
    let r2 = r_pa.norm_sq();
    let den = r_pw.dot(r_pa) - r2;
    if den.abs() <= GUARD_BAND * r2.max(r_pw.norm() * r_pa.norm()) {
        return Err(KinematicsError::OnInflectionCircle);
    }
    Ok(r_pa * (r2 / den))
}

/// Signed curvature radius `ρ = r² / (D sin θ − r)`.
pub fn euler_savary_scalar(input: &EulerSavaryScalarInput) -> Result<f64> {
    let EulerSavaryScalarInput { r, d, theta } = *input;
    let den = d * theta.sin() - r;
    if den.abs() <= GUARD_BAND * r.abs().max(d) {
        return Err(KinematicsError::OnInflectionCircle);
    }
    Ok(r * r / den)
}

/// Scalar inputs equivalent to the vectors `r_PA`, `r_PW`, plus the unit
/// vector `e` of the pole ray along which the signed `r` and `ρ` are measured.
///
/// The pole tangent is oriented so that `W` lies on its left; `θ` is taken in
/// `[0, π)`, so `r > 0` exactly when `A` is on the same side of the pole
/// tangent as `W`. The curvature centre is then `A + ρ·e`.
pub fn scalar_input_from_vectors(r_pa: Vec2, r_pw: Vec2) -> Result<(EulerSavaryScalarInput, Vec2)> {
    let dist = r_pa.norm();
    let Some(e) = r_pa.normalized() else {
        return Err(KinematicsError::DegenerateConjugate);
    };
    let d = r_pw.norm();
    let tangent = r_pw.normalized().map_or(Vec2::E1, |w| -w.tilde());
    let mut theta = tangent.perp_dot(e).atan2(tangent.dot(e));
    let (mut r, mut e) = (dist, e);
    if theta < 0.0 {
        theta += std::f64::consts::PI;
        r = -r;
        e = -e;
    }
    if theta >= std::f64::consts::PI {
        theta -= std::f64::consts::PI;
        r = -r;
        e = -e;
    }
    Ok((EulerSavaryScalarInput { r, d, theta }, e))
}

/// Inflection pole `W` from the pole and two conjugate pairs.
pub fn inflection_pole_from_conjugates(pair1: &ConjugatePair, pair2: &ConjugatePair, p: Vec2) -> Result<Vec2> {
    let (a, b) = (pair1.a - p, pair2.a - p);
    let cross = a.perp_dot(b);
    if cross.abs() <= GUARD_BAND * a.norm() * b.norm() {
        return Err(KinematicsError::CollinearInput);
    }
    // r_PW · r_PA for each pair, from the vector Euler–Savary equation
    let project = |r: Vec2, ray: Vec2| -> Result<f64> {
        let s = ray.dot(r);
        let r2 = r.norm_sq();
        if s.abs() <= GUARD_BAND * ray.norm() * r.norm() {
            return Err(KinematicsError::DegenerateConjugate);
        }
        Ok(r2 * (r2 / s + 1.0))
    };
    let alpha = project(a, pair1.ray())?;
    let beta = project(b, pair2.ray())?;
    Ok(p + (a.tilde() * beta - b.tilde() * alpha) / cross)
}

/// Ball's point from `P`, `W` and two conjugate pairs whose moving points
/// have stationary path curvature (for instance the joints of a four-bar).
pub fn balls_point_geometric(p: Vec2, w: Vec2, pair1: &ConjugatePair, pair2: &ConjugatePair) -> Result<Vec2> {
    let (ra, rb) = (pair1.ray(), pair2.ray());
    let den = ra.perp_dot(rb);
    if den.abs() <= GUARD_BAND * ra.norm() * rb.norm() {
        return Err(KinematicsError::ParallelRays);
    }
    let r_pw = w - p;
    let h = (rb * r_pw.perp_dot(pair1.a - p) - ra * r_pw.perp_dot(pair2.a - p)) / den;
    let scale = r_pw.norm().max((pair1.a - p).norm()).max((pair2.a - p).norm());
    if h.norm() <= tau_deg(&[scale]) {
        return Err(KinematicsError::DegenerateHelper);
    }
    Ok(p + h * (r_pw.dot(h) / h.norm_sq()))
}
