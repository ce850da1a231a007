//! Bresse loci of every order: points whose `k`-th acceleration has no
//! normal (first family) or no tangential (second family) component.
//!
//! Both loci pass through the pole. For `Ω → 0` a circle opens up into the
//! line through the pole it tends to; for `p^(k) → 0` it shrinks to the pole.

use crate::error::{KinematicsError, Result};
use crate::rigid_motion::{omega_components, pole_point_jets, velocity_pole, MotionState, OmegaComponents};
use crate::symplectic::Vec2;
use crate::tol::{tau_deg, BRESSE_FLAT, TAU_ALG};

/// A locus through the pole `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Locus {
    /// Circle through `p` with diameter vector `d` (the opposite point is `p + d`).
    CircleThroughPole { p: Vec2, d: Vec2 },
    /// Line through `p` with unit direction `dir`.
    LineThroughPole { p: Vec2, dir: Vec2 },
    /// Only the pole itself.
    PointOnly { p: Vec2 },
    /// Every point of the plane satisfies the condition.
    Degenerate,
}

impl Locus {
    pub fn kind(&self) -> &'static str {
        match self {
            Locus::CircleThroughPole { .. } => "circle",
            Locus::LineThroughPole { .. } => "line",
            Locus::PointOnly { .. } => "point",
            Locus::Degenerate => "degenerate",
        }
    }

    pub fn diameter(&self) -> Option<Vec2> {
        match *self {
            Locus::CircleThroughPole { d, .. } => Some(d),
            _ => None,
        }
    }
}

/// The two Bresse loci of acceleration order `k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BresseSet {
    pub k: usize,
    pub zero_normal: Locus,
    pub zero_tangential: Locus,
    pub omega: OmegaComponents,
    /// `p^(k)`, the k-th derivative of the body point at the pole.
    pub p_k: Vec2,
}

fn locus(p: Vec2, pk: Vec2, along_zero: Vec2, coeff: f64, other: f64, pk_tiny: bool) -> Locus {
    let flat = coeff.abs() <= BRESSE_FLAT * (coeff.abs() + other.abs());
    match (pk_tiny, flat) {
        (true, true) => Locus::Degenerate,
        (true, false) => Locus::PointOnly { p },
        (false, true) => Locus::LineThroughPole { p, dir: along_zero / along_zero.norm() },
        (false, false) => Locus::CircleThroughPole { p, d: pk / coeff },
    }
}

/// Bresse loci of order `k ≥ 2`.
pub fn bresse_set(state: &MotionState, k: usize) -> Result<BresseSet> {
    if k < 2 {
        return Err(KinematicsError::OutOfRange("Bresse order starts at 2"));
    }
    let p = velocity_pole(state)?;
    let pk = pole_point_jets(state, k)?.get(k);
    let om = omega_components(&state.omega, k)?;
    let scale = state.a_jets.get(k).norm().max(om.norm_sq().sqrt() * (p - state.a_pos()).norm());
    let tiny = pk.norm() <= tau_deg(&[scale]);
    Ok(BresseSet {
        k,
        zero_normal: locus(p, pk, pk.tilde(), om.omega_r, om.omega_t, tiny),
        zero_tangential: locus(p, pk.tilde(), pk, om.omega_t, om.omega_r, tiny),
        omega: om,
        p_k: pk,
    })
}

/// Zero iff `q` lies on the locus.
///
/// Circles use `|a² − d·a| / |d|²` with `a = q − p`; lines the sine of the
/// angle between `a` and the line; a point-locus the plain distance.
pub fn locus_residual(locus: &Locus, q: Vec2) -> f64 {
    match *locus {
        Locus::CircleThroughPole { p, d } => {
            let a = q - p;
            (a.norm_sq() - d.dot(a)).abs() / d.norm_sq().max(tau_deg(&[]))
        }
        Locus::LineThroughPole { p, dir } => {
            let a = q - p;
            dir.perp_dot(a).abs() / a.norm().max(tau_deg(&[]))
        }
        Locus::PointOnly { p } => (q - p).norm(),
        Locus::Degenerate => 0.0,
    }
}

/// Second intersection of the two circles of one order: the acceleration pole.
pub fn pole_via_bresse(set: &BresseSet) -> Result<Vec2> {
    let (Locus::CircleThroughPole { p, d: dn }, Locus::CircleThroughPole { d: dt, .. }) =
        (set.zero_normal, set.zero_tangential)
    else {
        return Err(KinematicsError::DegenerateIntersection);
    };
    let diff = dn.tilde() - dt.tilde();
    let n2 = diff.norm_sq();
    if n2 <= tau_deg(&[dn.norm_sq(), dt.norm_sq()]) * f64::EPSILON {
        return Err(KinematicsError::DegenerateIntersection);
    }
    Ok(p + diff * (dt.dot(diff) / n2))
}

/// Ball's point: second intersection of the zero-normal loci of orders 2
/// and 3 (the inflection circle and the next one).
pub fn balls_point_bresse(state: &MotionState) -> Result<Vec2> {
    let first = bresse_set(state, 2)?.zero_normal;
    let second = bresse_set(state, 3)?.zero_normal;
    match (first, second) {
        (Locus::CircleThroughPole { p, d: n1 }, Locus::CircleThroughPole { d: n2, .. }) => {
            let diff = n1 - n2;
            let scale = n1.norm().max(n2.norm());
            if diff.norm() <= tau_deg(&[scale]) {
                return Err(KinematicsError::CoincidentCircles);
            }
            let cross = n1.perp_dot(n2);
            if cross.abs() <= TAU_ALG * n1.norm() * n2.norm() {
                return Err(KinematicsError::CoincidentDirection);
            }
            Ok(p + (n1.tilde() - n2.tilde()) * (cross / diff.norm_sq()))
        }
        (Locus::CircleThroughPole { p, d: n1 }, Locus::LineThroughPole { dir, .. }) => {
            let s = n1.dot(dir);
            if s.abs() <= TAU_ALG * n1.norm() {
                return Err(KinematicsError::CoincidentDirection);
            }
            Ok(p + dir * s)
        }
        _ => Err(KinematicsError::DegenerateIntersection),
    }
}
