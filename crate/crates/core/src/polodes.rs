//! Polodes in the geometric parametrization (derivatives with respect to
//! the rotation angle `θ`, i.e. `θ̇ = 1`), their higher derivatives and
//! curvature radii, and the canonical-frame (Bottema) invariants.

use serde::Serialize;

use crate::error::{JetError, KinematicsError, Result};
use crate::jets::{PlanarJet, ScalarJet};
use crate::rigid_motion::{point_jets, velocity_pole_offset, MotionState};
use crate::symplectic::Vec2;
use crate::tol::{tau_deg, TAU_ALG};

/// Motion of the moving-frame origin `o(θ)` around `θ = theta0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeometricMotion {
    /// `o, o', o'', …` with primes denoting `d/dθ`.
    pub o_jets: PlanarJet,
    pub theta0: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polode {
    Fixed,
    Moving,
}

/// Canonical-frame derivatives `o_k = (a_k, b_k)`; `o_0 = o_1 = 0`, `a_2 = 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BottemaInvariants {
    /// Inflection-circle diameter.
    pub b2: f64,
    pub a3: f64,
    pub b3: f64,
    /// `(a_k, b_k)` for `k = 4, 5, …`.
    pub higher: Vec<(f64, f64)>,
}

impl BottemaInvariants {
    /// `o_k` in the canonical frame.
    pub fn o(&self, k: usize) -> Option<Vec2> {
        match k {
            0 | 1 => Some(Vec2::ZERO),
            2 => Some(Vec2::new(0.0, self.b2)),
            3 => Some(Vec2::new(self.a3, self.b3)),
            _ => self.higher.get(k - 4).map(|&(a, b)| Vec2::new(a, b)),
        }
    }
}

/// Curvature radius vector of a polode at the pole.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PolodeRadius {
    Finite(Vec2),
    Straight,
}

impl PolodeRadius {
    pub fn finite(self) -> Result<Vec2> {
        match self {
            PolodeRadius::Finite(r) => Ok(r),
            PolodeRadius::Straight => Err(KinematicsError::StraightPolode),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolodeCurvatures {
    pub fixed: PolodeRadius,
    /// Radius vector of the moving polode, expressed in the fixed frame.
    pub moving: PolodeRadius,
}

impl GeometricMotion {
    pub fn new(o_jets: PlanarJet, theta0: f64) -> Self {
        GeometricMotion { o_jets, theta0 }
    }

    pub fn order(&self) -> usize {
        self.o_jets.order()
    }

    fn need(&self, k: usize) -> Result<()> {
        if self.order() < k {
            Err(JetError::InsufficientOrder { needed: k, available: self.order() }.into())
        } else {
            Ok(())
        }
    }

    /// `p, p', …` of the fixed polode: `p^(k) = o^(k) + õ^(k+1)`.
    pub fn fixed_polode_jets(&self) -> Result<PlanarJet> {
        self.need(1)?;
        Ok(self.o_jets.add_trunc(&self.o_jets.shift()?.tilde()))
    }

    /// `Rq', Rq'', …` of the moving polode, expressed in the fixed frame;
    /// entry `i` holds the derivative of order `i + 1`.
    pub fn moving_polode_derivatives(&self) -> Result<Vec<Vec2>> {
        self.need(2)?;
        // Q_1 = p', Q_k = Q'_{k−1} − J Q_{k−1}
        let mut q = self.fixed_polode_jets()?.shift()?;
        let mut out = vec![q.value()];
        while q.order() > 0 {
            let next = q.shift()?;
            q = next.add_trunc(&q.tilde().scale(-1.0));
            out.push(q.value());
        }
        Ok(out)
    }
}

pub fn fixed_polode_point(m: &GeometricMotion) -> Result<Vec2> {
    m.need(1)?;
    Ok(m.o_jets.value() + m.o_jets.get(1).tilde())
}

/// Moving-polode point in moving-frame coordinates.
pub fn moving_polode_point(m: &GeometricMotion) -> Result<Vec2> {
    m.need(1)?;
    Ok(m.o_jets.get(1).tilde().rotate(-m.theta0))
}

/// `p^(k)` (fixed) or `Rq^(k)` (moving, in the fixed frame); needs order `k + 1`.
pub fn polode_derivative(m: &GeometricMotion, k: usize, which: Polode) -> Result<Vec2> {
    if k == 0 {
        return Err(KinematicsError::OutOfRange("polode derivative order starts at 1"));
    }
    m.need(k + 1)?;
    match which {
        Polode::Fixed => Ok(m.fixed_polode_jets()?.get(k)),
        Polode::Moving => Ok(m.moving_polode_derivatives()?[k - 1]),
    }
}

fn radius(p1: Vec2, den: f64) -> PolodeRadius {
    let n2 = p1.norm_sq();
    if den.abs() <= TAU_ALG * n2 {
        PolodeRadius::Straight
    } else {
        PolodeRadius::Finite(p1.tilde() * (n2 / den))
    }
}

/// Curvature radius vectors of both polodes at the pole.
pub fn polode_curvatures(m: &GeometricMotion) -> Result<PolodeCurvatures> {
    m.need(3)?;
    let p = m.fixed_polode_jets()?;
    let (p1, p2) = (p.get(1), p.get(2));
    let scale = m.o_jets.get(1).norm().max(m.o_jets.get(2).norm());
    if p1.norm() <= tau_deg(&[scale]) {
        return Err(KinematicsError::UndefinedTangent);
    }
    let cross = p1.perp_dot(p2);
    Ok(PolodeCurvatures { fixed: radius(p1, cross), moving: radius(p1, cross - p1.norm_sq()) })
}

/// Re-expresses the instantaneous motion in the canonical frame: origin at
/// the pole, second axis towards the inflection pole, first axis along the
/// common polode tangent (so `p' = (−b2, 0)`), parametrized by `θ`.
///
/// The time derivatives of the body point at the pole are carried over to
/// `θ` by composing with the inverse of `θ(t)`.
pub fn canonicalize(state: &MotionState) -> Result<(GeometricMotion, BottemaInvariants)> {
    let k = state.max_order();
    if k < 3 {
        return Err(JetError::InsufficientOrder { needed: 3, available: k }.into());
    }
    let r_ap = velocity_pole_offset(state)?;
    let body = point_jets(state, r_ap, k)?;
    let w = state.omega_value();
    let u = body.get(2).tilde() / w;
    if u.norm() <= tau_deg(&[state.a_jets.get(1).norm(), w * r_ap.norm()]) {
        return Err(KinematicsError::UndefinedTangent);
    }
    let mut theta = vec![0.0];
    theta.extend_from_slice(&state.omega.as_slice()[..k]);
    let t_of_theta = ScalarJet::new(&theta)?.inverse(0.0)?;
    let geo = body.compose(&t_of_theta);
    let e2 = geo.get(2) / geo.get(2).norm();
    let e1 = -e2.tilde();
    let coords = |v: Vec2| Vec2::new(v.dot(e1), v.dot(e2));
    let mut o = vec![Vec2::ZERO, Vec2::ZERO, Vec2::new(0.0, geo.get(2).norm())];
    o.extend((3..=k).map(|i| coords(geo.get(i))));
    let inv = BottemaInvariants {
        b2: o[2].y,
        a3: o[3].x,
        b3: o[3].y,
        higher: o[4..].iter().map(|v| (v.x, v.y)).collect(),
    };
    Ok((GeometricMotion::new(PlanarJet::new(&o)?, 0.0), inv))
}

const PASCAL_MAX: usize = 20;

/// Binomial coefficient `k! / (i! (k−i)!)` by the Pascal recurrence.
pub fn pascal_coefficient(i: usize, k: usize) -> Result<u64> {
    if i > k || k > PASCAL_MAX {
        return Err(KinematicsError::OutOfRange("pascal coefficient needs 0 ≤ i ≤ k ≤ 20"));
    }
    let mut row = [0u64; PASCAL_MAX + 1];
    row[0] = 1;
    for n in 1..=k {
        for j in (1..=n).rev() {
            row[j] += row[j - 1];
        }
    }
    Ok(row[i])
}
