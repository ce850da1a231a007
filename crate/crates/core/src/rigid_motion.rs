//! Moving-plane kinematics: point derivatives of every order, the angular
//! invariants `Ω_r^(k)`, `Ω_t^(k)`, the velocity pole and the acceleration
//! poles.

use crate::error::{JetError, KinematicsError, Result};
use crate::jets::{PlanarJet, ScalarJet};
use crate::symplectic::Vec2;
use crate::tol::{tau_deg, tau_omega};

/// Instantaneous state of a moving plane.
///
/// `a_jets` are the derivatives of a reference point `A` (entry 0 is its
/// position), `omega` the derivatives of the angular velocity `ω = θ̇`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MotionState {
    pub a_jets: PlanarJet,
    pub omega: ScalarJet,
    /// Characteristic length used to scale the pure-translation threshold.
    pub char_length: f64,
}

/// The pair `(Ω_r^(k), Ω_t^(k))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OmegaComponents {
    pub k: usize,
    pub omega_r: f64,
    pub omega_t: f64,
}

impl OmegaComponents {
    pub fn norm_sq(&self) -> f64 {
        self.omega_r * self.omega_r + self.omega_t * self.omega_t
    }
}

impl MotionState {
    pub fn new(a_jets: PlanarJet, omega: ScalarJet) -> Self {
        MotionState { a_jets, omega, char_length: 1.0 }
    }

    pub fn with_char_length(mut self, char_length: f64) -> Self {
        self.char_length = char_length;
        self
    }

    pub fn a_pos(&self) -> Vec2 {
        self.a_jets.value()
    }

    pub fn omega_value(&self) -> f64 {
        self.omega.value()
    }

    /// Highest `k` for which `point_derivative` is defined.
    pub fn max_order(&self) -> usize {
        self.a_jets.order().min(self.omega.order() + 1)
    }

    fn check(&self, k: usize) -> Result<()> {
        let available = self.max_order();
        if k > available {
            Err(JetError::InsufficientOrder { needed: k, available }.into())
        } else {
            Ok(())
        }
    }

    /// The same motion described from the body point `A + r_ab`.
    pub fn rebased(&self, r_ab: Vec2) -> Result<MotionState> {
        let n = self.max_order();
        let table = omega_table(&self.omega, n)?;
        let derivs: Vec<Vec2> = (0..=n).map(|k| self.derivative_with(&table[k], r_ab, k)).collect();
        Ok(MotionState {
            a_jets: PlanarJet::new(&derivs)?,
            omega: self.omega.truncate(n.saturating_sub(1)),
            char_length: self.char_length,
        })
    }

    fn derivative_with(&self, om: &OmegaComponents, r_ab: Vec2, k: usize) -> Vec2 {
        self.a_jets.get(k) - r_ab * om.omega_r + r_ab.tilde() * om.omega_t
    }
}

/// `(Ω_r^(j), Ω_t^(j))` for `j = 0..=k`.
///
/// Runs `Ω_r' + ω Ω_t`, `Ω_t' − ω Ω_r` over jets from the seeds `(−1, 0)`.
pub fn omega_table(omega: &ScalarJet, k: usize) -> Result<Vec<OmegaComponents>> {
    let top = omega.order() + 1;
    if k > top {
        return Err(JetError::InsufficientOrder { needed: k, available: top }.into());
    }
    let mut r = ScalarJet::constant(-1.0, top.min(crate::jets::K_MAX));
    let mut t = ScalarJet::zero(r.order());
    let mut out = Vec::with_capacity(k + 1);
    out.push(OmegaComponents { k: 0, omega_r: -1.0, omega_t: 0.0 });
    for j in 1..=k {
        let nr = r.shift()?.add_trunc(&omega.mul_trunc(&t));
        let nt = t.shift()?.sub_trunc(&omega.mul_trunc(&r));
        r = nr;
        t = nt;
        out.push(OmegaComponents { k: j, omega_r: r.value(), omega_t: t.value() });
    }
    Ok(out)
}

pub fn omega_components(omega: &ScalarJet, k: usize) -> Result<OmegaComponents> {
    Ok(omega_table(omega, k)?[k])
}

/// `r_B^(k) = r_A^(k) − Ω_r^(k) r_AB + Ω_t^(k) r̃_AB`.
pub fn point_derivative(state: &MotionState, r_ab: Vec2, k: usize) -> Result<Vec2> {
    state.check(k)?;
    let om = omega_components(&state.omega, k)?;
    Ok(state.derivative_with(&om, r_ab, k))
}

/// All derivatives `0..=k_max` of the body point `A + r_ab`.
pub fn point_jets(state: &MotionState, r_ab: Vec2, k_max: usize) -> Result<PlanarJet> {
    state.check(k_max)?;
    let table = omega_table(&state.omega, k_max)?;
    let d: Vec<Vec2> = (0..=k_max).map(|k| state.derivative_with(&table[k], r_ab, k)).collect();
    Ok(PlanarJet::new(&d)?)
}

/// `r_AP = r̃̇_A / ω`, the offset from `A` to the velocity pole.
pub fn velocity_pole_offset(state: &MotionState) -> Result<Vec2> {
    state.check(1)?;
    let v = state.a_jets.get(1);
    let w = state.omega.value();
    if w.abs() <= tau_omega(v.norm(), state.char_length) {
        return Err(KinematicsError::PureTranslation);
    }
    Ok(v.tilde() / w)
}

/// Absolute position of the velocity pole.
pub fn velocity_pole(state: &MotionState) -> Result<Vec2> {
    Ok(state.a_pos() + velocity_pole_offset(state)?)
}

/// Derivatives of the body point that currently coincides with the pole.
pub fn pole_point_jets(state: &MotionState, k_max: usize) -> Result<PlanarJet> {
    let r_ap = velocity_pole_offset(state)?;
    point_jets(state, r_ap, k_max)
}

/// Velocity of the pole along its locus, `u = p̃̈ / ω`.
pub fn pole_displacement_velocity(state: &MotionState) -> Result<Vec2> {
    let p = pole_point_jets(state, 2)?;
    Ok(p.get(2).tilde() / state.omega.value())
}

/// Point whose `k`-th derivative vanishes.
pub fn acceleration_pole(state: &MotionState, k: usize) -> Result<Vec2> {
    if k == 0 {
        return Err(KinematicsError::OutOfRange("acceleration pole order starts at 1"));
    }
    state.check(k)?;
    let om = omega_components(&state.omega, k)?;
    let x = state.a_jets.get(k);
    let den = om.norm_sq();
    let tau = tau_deg(&[]);
    if den <= tau * tau {
        return Err(KinematicsError::DegenerateAngularState(k));
    }
    let r = if om.omega_r == 0.0 {
        // keeps order 1 identical to the velocity pole
        x.tilde() / om.omega_t
    } else {
        (x * om.omega_r + x.tilde() * om.omega_t) / den
    };
    Ok(state.a_pos() + r)
}

/// Pole data at one instant.
#[derive(Clone, Debug, PartialEq)]
pub struct PoleReport {
    pub p: Vec2,
    pub p_jets: PlanarJet,
    pub u: Vec2,
    /// `(k, P_k)` for every order at which the acceleration pole exists.
    pub higher_poles: Vec<(usize, Vec2)>,
}

pub fn pole_report(state: &MotionState, k_max: usize) -> Result<PoleReport> {
    let p = velocity_pole(state)?;
    let p_jets = pole_point_jets(state, k_max.max(2))?;
    let u = p_jets.get(2).tilde() / state.omega.value();
    let higher_poles = (2..=k_max).filter_map(|k| acceleration_pole(state, k).ok().map(|q| (k, q))).collect();
    Ok(PoleReport { p, p_jets, u, higher_poles })
}
