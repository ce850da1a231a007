//! Kinematics of a single moving point.

use crate::error::{JetError, KinematicsError, Result};
use crate::jets::ScalarJet;
use crate::symplectic::Vec2;
use crate::tol::{tau_deg, TAU_DEG};

/// Polar description `r(t) = r(t)·e(φ(t))` of a trajectory.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarState {
    r: ScalarJet,
    phi: ScalarJet,
}

impl PolarState {
    pub fn new(r: ScalarJet, phi: ScalarJet) -> Result<Self> {
        if r.order() != phi.order() {
            return Err(JetError::OrderMismatch { left: r.order(), right: phi.order() }.into());
        }
        if r.value() < 0.0 {
            return Err(KinematicsError::OutOfRange("polar radius must be non-negative"));
        }
        Ok(PolarState { r, phi })
    }

    pub fn r(&self) -> &ScalarJet {
        &self.r
    }

    pub fn phi(&self) -> &ScalarJet {
        &self.phi
    }

    pub fn order(&self) -> usize {
        self.r.order()
    }
}

/// Coefficients `(a_∥, a_⊥)` of `r^(k)` in the rotating basis `{e, ẽ}`.
///
/// Runs `a_∥' − φ̇ a_⊥`, `a_⊥' + φ̇ a_∥` over jets, so each step loses one
/// order and the derivatives of the coefficients stay exact.
pub fn polar_components(state: &PolarState, k: usize) -> Result<(f64, f64)> {
    let order = state.order();
    if k > order {
        return Err(JetError::InsufficientOrder { needed: k, available: order }.into());
    }
    let mut par = state.r;
    let mut perp = ScalarJet::zero(order);
    if k > 0 {
        let phi_dot = state.phi.shift()?;
        for _ in 0..k {
            let next_par = par.shift()?.sub_trunc(&phi_dot.mul_trunc(&perp));
            let next_perp = perp.shift()?.add_trunc(&phi_dot.mul_trunc(&par));
            par = next_par;
            perp = next_perp;
        }
    }
    Ok((par.value(), perp.value()))
}

// 15-point Kronrod nodes and weights with the embedded 7-point Gauss rule,
// kept at their published precision.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        kron += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

fn adaptive(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let (val, err) = gk15(f, a, b);
    if err <= tol || depth == 0 {
        return val;
    }
    let m = 0.5 * (a + b);
    adaptive(f, a, m, 0.5 * tol, depth - 1) + adaptive(f, m, b, 0.5 * tol, depth - 1)
}

/// Length of a path between `t0` and `t1`, given its velocity `ṙ(t)`.
///
/// Adaptive Gauss–Kronrod (7/15) on `|ṙ|`; relative accuracy about 1e-11
/// for smooth integrands.
pub fn arc_length(velocity: impl Fn(f64) -> Vec2, t0: f64, t1: f64) -> Result<f64> {
    if !(t0.is_finite() && t1.is_finite()) || t0 > t1 {
        return Err(KinematicsError::InvalidInterval);
    }
    if t0 == t1 {
        return Ok(0.0);
    }
    let speed = |t: f64| velocity(t).norm();
    let (rough, _) = gk15(&speed, t0, t1);
    let tol = 1e-12 * rough.abs().max(f64::MIN_POSITIVE);
    let len = adaptive(&speed, t0, t1, tol, 40);
    if len.is_finite() {
        Ok(len)
    } else {
        Err(KinematicsError::NonFinite("arc-length integrand"))
    }
}

/// Unit tangent and normal of a trajectory.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrenetBasis {
    pub t: Vec2,
    pub n: Vec2,
}

/// Frenet frame plus signed curvature (positive when turning toward `N`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrenetFrame {
    pub t: Vec2,
    pub n: Vec2,
    pub kappa: f64,
}

pub fn frenet(v: Vec2) -> Result<FrenetBasis> {
    let speed = v.norm();
    if speed <= tau_deg(&[speed]) {
        return Err(KinematicsError::ZeroVelocity);
    }
    let t = v / speed;
    Ok(FrenetBasis { t, n: t.tilde() })
}

pub fn frenet_kappa(v: Vec2, a: Vec2) -> Result<FrenetFrame> {
    let FrenetBasis { t, n } = frenet(v)?;
    let speed = v.norm();
    Ok(FrenetFrame { t, n, kappa: v.perp_dot(a) / (speed * speed * speed) })
}

/// Vector from the moving point to the centre of curvature of its path.
pub fn center_of_curvature(v: Vec2, a: Vec2) -> Result<Vec2> {
    frenet(v)?;
    let w = v.perp_dot(a);
    if w.abs() <= TAU_DEG * v.norm() * a.norm() || w == 0.0 {
        return Err(KinematicsError::InfiniteCurvature);
    }
    Ok(v.tilde() * (v.norm_sq() / w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::finite_difference_oracle;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn jet(v: &[f64]) -> ScalarJet {
        ScalarJet::new(v).unwrap()
    }

    #[test]
    fn first_order_components() {
        let s = PolarState::new(jet(&[2.0, 3.0, 0.0]), jet(&[0.0, 5.0, 0.0])).unwrap();
        assert_eq!(polar_components(&s, 1).unwrap(), (3.0, 10.0));
    }

    #[test]
    fn unit_circle_acceleration() {
        let s = PolarState::new(jet(&[1.0, 0.0, 0.0]), jet(&[0.0, 1.0, 0.0])).unwrap();
        assert_eq!(polar_components(&s, 2).unwrap(), (-1.0, 0.0));
    }

    #[test]
    fn order_zero_is_the_radius() {
        let s = PolarState::new(jet(&[2.5, 1.0]), jet(&[0.7, 1.0])).unwrap();
        assert_eq!(polar_components(&s, 0).unwrap(), (2.5, 0.0));
        assert!(polar_components(&s, 2).is_err());
    }

    #[test]
    fn negative_radius_rejected() {
        assert!(PolarState::new(jet(&[-1.0, 0.0]), jet(&[0.0, 0.0])).is_err());
        assert!(PolarState::new(jet(&[1.0, 0.0]), jet(&[0.0])).is_err());
    }

    #[test]
    fn fourth_order_matches_finite_differences() {
        // r(t) = 1.5 + 0.4t − 0.3t² + 0.1t³ + 0.05t⁴, φ(t) = 0.2 + 0.9t + 0.25t² − 0.1t³
        let rc = [1.5, 0.4, -0.3, 0.1, 0.05];
        let pc = [0.2, 0.9, 0.25, -0.1, 0.0];
        let poly = |c: &[f64], t: f64| c.iter().rev().fold(0.0, |acc, x| acc * t + x);
        let derivs = |c: &[f64]| {
            let f = [1.0, 1.0, 2.0, 6.0, 24.0];
            c.iter().zip(f).map(|(x, f)| x * f).collect::<Vec<_>>()
        };
        let s = PolarState::new(jet(&derivs(&rc)), jet(&derivs(&pc))).unwrap();
        let pos = |t: f64| Vec2::polar(poly(&pc, t)) * poly(&rc, t);
        let d4 = finite_difference_oracle(pos, 0.0, 4);
        let e = Vec2::polar(0.2);
        let (par, perp) = polar_components(&s, 4).unwrap();
        let expect = Vec2::new(d4.dot(e), d4.dot(e.tilde()));
        assert!((Vec2::new(par, perp) - expect).norm() <= 1e-6 * expect.norm().max(1.0));
    }

    #[test]
    fn circle_circumference() {
        let len = arc_length(|t| Vec2::new(-t.sin(), t.cos()), 0.0, 2.0 * PI).unwrap();
        assert!((len - 2.0 * PI).abs() < 1e-8);
    }

    #[test]
    fn straight_segment() {
        let len = arc_length(|_| Vec2::new(1.0, 2.0), 0.0, 1.0).unwrap();
        assert!((len - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn cycloid_arch() {
        let len = arc_length(|t| Vec2::new(1.0 - t.cos(), t.sin()), 0.0, 2.0 * PI).unwrap();
        assert!((len - 8.0).abs() < 1e-7);
    }

    #[test]
    fn reversed_interval_rejected() {
        assert_eq!(arc_length(|_| Vec2::E1, 1.0, 0.0), Err(KinematicsError::InvalidInterval));
    }

    #[test]
    fn frenet_examples() {
        let f = frenet_kappa(Vec2::new(2.0, 0.0), Vec2::new(0.0, 2.0)).unwrap();
        assert_eq!(f.t, Vec2::new(1.0, 0.0));
        assert_eq!(f.n, Vec2::new(0.0, 1.0));
        // 4 / 2³; the radius |r_AA0| = 2 agrees
        assert_eq!(f.kappa, 0.5);
        assert_eq!(frenet_kappa(Vec2::new(0.0, 3.0), Vec2::new(0.0, 7.0)).unwrap().kappa, 0.0);
        assert_eq!(frenet(Vec2::ZERO), Err(KinematicsError::ZeroVelocity));
    }

    #[test]
    fn curvature_center_examples() {
        let (r, w) = (1.7, 0.6);
        let c = center_of_curvature(Vec2::new(0.0, r * w), Vec2::new(-r * w * w, 0.0)).unwrap();
        assert!((c - Vec2::new(-r, 0.0)).norm() < 1e-15);
        let c = center_of_curvature(Vec2::new(1.0, 0.0), Vec2::new(0.0, 2.0)).unwrap();
        assert_eq!(c, Vec2::new(0.0, 0.5));
        assert_eq!(
            center_of_curvature(Vec2::new(1.0, 0.0), Vec2::new(3.0, 0.0)),
            Err(KinematicsError::InfiniteCurvature)
        );
    }

    #[test]
    fn tangent_turns_with_curvature() {
        // r(t) = (t + 0.3t², 0.5t² − 0.2t³), dT/ds = κN at t = 0.4
        let v = |t: f64| Vec2::new(1.0 + 0.6 * t, t - 0.6 * t * t);
        let a = |t: f64| Vec2::new(0.6, 1.0 - 1.2 * t);
        let t0 = 0.4;
        let dt = finite_difference_oracle(|t| v(t) / v(t).norm(), t0, 1);
        let f = frenet_kappa(v(t0), a(t0)).unwrap();
        let dt_ds = dt / v(t0).norm();
        assert!((dt_ds - f.n * f.kappa).norm() < 1e-8);
    }

    fn vec2() -> impl Strategy<Value = Vec2> {
        (-10.0..10.0f64, -10.0..10.0f64).prop_map(Vec2::from)
    }

    proptest! {
        #[test]
        fn radius_is_reciprocal_curvature(v in vec2(), a in vec2()) {
            prop_assume!(v.norm() > 1e-3 && v.perp_dot(a).abs() > 1e-3 * v.norm() * a.norm());
            let c = center_of_curvature(v, a).unwrap();
            let k = frenet_kappa(v, a).unwrap().kappa;
            prop_assert!((c.norm() * k.abs() - 1.0).abs() <= 1e-9);
            prop_assert_eq!(frenet(v).unwrap().n, frenet(v).unwrap().t.tilde());
        }

        #[test]
        fn tangential_acceleration_is_irrelevant(v in vec2(), a in vec2(), lam in 0.1..5.0f64, mu in -5.0..5.0f64) {
            prop_assume!(v.norm() > 1e-2 && v.perp_dot(a).abs() > 1e-2 * v.norm() * a.norm());
            let c0 = center_of_curvature(v, a).unwrap();
            let c1 = center_of_curvature(v * lam, a * (lam * lam) + v * mu).unwrap();
            prop_assert!((c0 - c1).norm() <= 1e-9 * c0.norm());
        }
    }
}
