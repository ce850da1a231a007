//! Three moving frames: angular and velocity chains, relative poles and the
//! Aronhold–Kennedy collinearity.
//!
//! Relative velocities are always taken at one common probe point `A`; the
//! velocity chain holds pointwise there and only there.

use crate::error::{KinematicsError, Result};
use crate::jets::ScalarJet;
use crate::rigid_motion::{point_derivative, MotionState};
use crate::symplectic::Vec2;
use crate::tol::{tau_deg, tau_omega};

/// Motion of frame `i` relative to frame `j`, probed at a point `A`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FramePair {
    pub i: usize,
    pub j: usize,
    pub omega_ij: ScalarJet,
    /// Velocity of the point of frame `i` at `A`, minus that of frame `j`.
    pub v_a_ij: Vec2,
}

impl FramePair {
    /// The same pair with the roles of `i` and `j` exchanged.
    pub fn swapped(&self) -> FramePair {
        FramePair { i: self.j, j: self.i, omega_ij: self.omega_ij.neg(), v_a_ij: -self.v_a_ij }
    }

    /// Builds the relative pair from two absolute motions, probed at `a`.
    pub fn from_absolute(i: usize, frame_i: &MotionState, j: usize, frame_j: &MotionState, a: Vec2) -> Result<FramePair> {
        let vi = point_derivative(frame_i, a - frame_i.a_pos(), 1)?;
        let vj = point_derivative(frame_j, a - frame_j.a_pos(), 1)?;
        let n = frame_i.omega.order().min(frame_j.omega.order());
        let omega_ij = frame_i.omega.truncate(n).sub(&frame_j.omega.truncate(n))?;
        Ok(FramePair { i, j, omega_ij, v_a_ij: vi - vj })
    }
}

/// `ω_ki` from `ω_ij + ω_jk + ω_ki = 0`, entry by entry.
pub fn angular_chain(ij: &ScalarJet, jk: &ScalarJet) -> Result<ScalarJet> {
    Ok(ij.add(jk)?.neg())
}

/// `v_ki = −(v_ij + v_jk)`; valid for velocities only.
pub fn velocity_chain(v_ij: Vec2, v_jk: Vec2) -> Vec2 {
    -(v_ij + v_jk)
}

/// Absolute position of the relative velocity pole `P_ij`.
pub fn relative_pole(pair: &FramePair, a_pos: Vec2) -> Result<Vec2> {
    let w = pair.omega_ij.value();
    if w.abs() <= tau_omega(pair.v_a_ij.norm(), 1.0) {
        return Err(KinematicsError::PureTranslation);
    }
    Ok(a_pos + pair.v_a_ij.tilde() / w)
}

/// Collinearity defect of three points, normalised by the squared largest
/// pairwise distance; zero iff the points are collinear.
pub fn aronhold_residual(p_ij: Vec2, p_jk: Vec2, p_ki: Vec2) -> f64 {
    let area = (p_ki - p_ij).perp_dot(p_jk - p_ij).abs();
    let d2 = (p_jk - p_ij).norm_sq().max((p_ki - p_jk).norm_sq()).max((p_ij - p_ki).norm_sq());
    area / d2.max(tau_deg(&[]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::PlanarJet;

    fn jet(v: &[f64]) -> ScalarJet {
        ScalarJet::new(v).unwrap()
    }

    fn frame(pos: (f64, f64), vel: (f64, f64), w: f64) -> MotionState {
        MotionState::new(PlanarJet::new(&[pos.into(), vel.into()]).unwrap(), jet(&[w]))
    }

    #[test]
    fn angular_chain_examples() {
        assert_eq!(angular_chain(&jet(&[2.0]), &jet(&[3.0])).unwrap().value(), -5.0);
        let jk = jet(&[1.0, -2.0, 0.5]);
        assert_eq!(angular_chain(&ScalarJet::zero(2), &jk).unwrap(), jk.neg());
        assert!(angular_chain(&jet(&[1.0]), &jk).is_err());
    }

    #[test]
    fn velocity_chain_examples() {
        assert_eq!(velocity_chain(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)), Vec2::new(-1.0, -1.0));
        let v = Vec2::new(0.3, -2.0);
        assert_eq!(velocity_chain(v, -v), Vec2::ZERO);
    }

    #[test]
    fn cyclic_relabeling() {
        let (a, b) = (jet(&[0.375, 1.0]), jet(&[-1.125, 0.25]));
        let c = angular_chain(&a, &b).unwrap();
        assert_eq!(angular_chain(&b, &c).unwrap(), a);
        let (u, v) = (Vec2::new(1.0, 2.0), Vec2::new(-0.5, 0.25));
        let w = velocity_chain(u, v);
        assert_eq!(velocity_chain(v, w), u);
    }

    #[test]
    fn pole_is_symmetric_under_swap() {
        let pair = FramePair { i: 1, j: 2, omega_ij: jet(&[0.7]), v_a_ij: Vec2::new(0.3, -1.9) };
        let a = Vec2::new(0.1, 0.2);
        assert_eq!(relative_pole(&pair, a).unwrap(), relative_pole(&pair.swapped(), a).unwrap());
        let still = FramePair { omega_ij: jet(&[0.0]), ..pair };
        assert_eq!(relative_pole(&still, a), Err(KinematicsError::PureTranslation));
    }

    #[test]
    fn hinge_is_the_relative_pole() {
        // both frames rotate about H = (1, 2) at different rates
        let h = Vec2::new(1.0, 2.0);
        let (wi, wj) = (0.9, -0.4);
        let fi = frame((h.x, h.y), (0.0, 0.0), wi);
        let fj = frame((h.x, h.y), (0.0, 0.0), wj);
        let a = Vec2::new(-0.5, 0.3);
        let pair = FramePair::from_absolute(1, &fi, 2, &fj, a).unwrap();
        assert!((relative_pole(&pair, a).unwrap() - h).norm() < 1e-14);
    }

    #[test]
    fn residual_examples() {
        assert_eq!(aronhold_residual(Vec2::new(0.0, 0.0), Vec2::new(3.0, 0.0), Vec2::new(-1.0, 0.0)), 0.0);
        // area 1 over squared diameter 2
        assert_eq!(aronhold_residual(Vec2::ZERO, Vec2::E1, Vec2::E2), 0.5);
    }

    #[test]
    fn three_frames_give_collinear_poles() {
        let frames = [frame((0.0, 0.0), (1.0, 0.5), 0.8), frame((2.0, -1.0), (-0.3, 0.9), -0.6), frame((1.0, 3.0), (0.2, 0.2), 1.7)];
        let a = Vec2::new(0.4, 0.4);
        let pole = |i: usize, j: usize| relative_pole(&FramePair::from_absolute(i, &frames[i], j, &frames[j], a).unwrap(), a).unwrap();
        assert!(aronhold_residual(pole(0, 1), pole(1, 2), pole(2, 0)) <= 1e-12);
    }
}
