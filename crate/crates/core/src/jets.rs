//! Truncated Taylor data ("jets") for scalar and planar functions.
//!
//! A jet of order `K` stores the value and the first `K` derivatives of a
//! function at one evaluation point: `d[i] = f^(i)(t0)`. Products follow the
//! Leibniz rule, so every kinematic recursion that is run over jets yields
//! exact higher derivatives (up to rounding) instead of finite differences.

use crate::error::JetError;
use crate::symplectic::{JPower, Vec2};

/// Largest supported jet order.
pub const K_MAX: usize = 12;

const N: usize = K_MAX + 1;

const BINOM: [[f64; N]; N] = {
    let mut t = [[0.0; N]; N];
    let mut k = 0;
    while k < N {
        t[k][0] = 1.0;
        let mut i = 1;
        while i <= k {
            t[k][i] = t[k - 1][i - 1] + if i < k { t[k - 1][i] } else { 0.0 };
            i += 1;
        }
        k += 1;
    }
    t
};

const FACT: [f64; N] = {
    let mut f = [1.0; N];
    let mut i = 1;
    while i < N {
        f[i] = f[i - 1] * i as f64;
        i += 1;
    }
    f
};

fn check_order(order: usize) -> Result<(), JetError> {
    if order > K_MAX {
        Err(JetError::OrderTooLarge(order))
    } else {
        Ok(())
    }
}

fn same_order(a: usize, b: usize) -> Result<(), JetError> {
    if a != b {
        Err(JetError::OrderMismatch { left: a, right: b })
    } else {
        Ok(())
    }
}

/// Value and derivatives of a scalar function at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalarJet {
    order: usize,
    d: [f64; N],
}

impl ScalarJet {
    /// Builds a jet from `[f, f', f'', …]`; the order is `derivs.len() − 1`.
    pub fn new(derivs: &[f64]) -> Result<Self, JetError> {
        if derivs.is_empty() {
            return Err(JetError::InsufficientOrder { needed: 0, available: 0 });
        }
        let order = derivs.len() - 1;
        check_order(order)?;
        if let Some(i) = derivs.iter().position(|x| !x.is_finite()) {
            return Err(JetError::NonFinite(i));
        }
        let mut d = [0.0; N];
        d[..derivs.len()].copy_from_slice(derivs);
        Ok(ScalarJet { order, d })
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(0.0, order)
    }

    pub fn constant(c: f64, order: usize) -> Self {
        assert!(order <= K_MAX, "jet order {order} exceeds K_MAX");
        let mut d = [0.0; N];
        d[0] = c;
        ScalarJet { order, d }
    }

    /// The identity function `t ↦ t` at `t0`.
    pub fn variable(t0: f64, order: usize) -> Self {
        let mut j = Self::constant(t0, order);
        if order >= 1 {
            j.d[1] = 1.0;
        }
        j
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn value(&self) -> f64 {
        self.d[0]
    }

    /// The `i`-th derivative. Panics when `i` exceeds the order.
    pub fn get(&self, i: usize) -> f64 {
        assert!(i <= self.order, "derivative {i} beyond jet order {}", self.order);
        self.d[i]
    }

    pub fn derivative(&self, i: usize) -> Result<f64, JetError> {
        if i > self.order {
            Err(JetError::InsufficientOrder { needed: i, available: self.order })
        } else {
            Ok(self.d[i])
        }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.d[..=self.order]
    }

    /// Replaces entry `i` (used by perturbation tests and by the reparametrization).
    pub fn with(mut self, i: usize, value: f64) -> Self {
        assert!(i <= self.order);
        self.d[i] = value;
        self
    }

    pub fn is_finite(&self) -> bool {
        self.as_slice().iter().all(|x| x.is_finite())
    }

    /// Keeps the first `order` derivatives.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let mut d = [0.0; N];
        d[..=order].copy_from_slice(&self.d[..=order]);
        ScalarJet { order, d }
    }

    /// Jet of the derivative: drops the value and re-indexes.
    pub fn shift(&self) -> Result<Self, JetError> {
        if self.order == 0 {
            return Err(JetError::InsufficientOrder { needed: 1, available: 0 });
        }
        let mut d = [0.0; N];
        d[..self.order].copy_from_slice(&self.d[1..=self.order]);
        Ok(ScalarJet { order: self.order - 1, d })
    }

    pub fn add(&self, other: &ScalarJet) -> Result<Self, JetError> {
        same_order(self.order, other.order)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &ScalarJet) -> Result<Self, JetError> {
        same_order(self.order, other.order)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a)
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|a| a * s)
    }

    /// Leibniz product.
    pub fn mul(&self, other: &ScalarJet) -> Result<Self, JetError> {
        same_order(self.order, other.order)?;
        Ok(self.mul_trunc(other))
    }

    /// Leibniz product at the smaller of the two orders.
    pub(crate) fn mul_trunc(&self, other: &ScalarJet) -> Self {
        let order = self.order.min(other.order);
        let mut d = [0.0; N];
        for (k, dk) in d.iter_mut().enumerate().take(order + 1) {
            *dk = (0..=k).map(|i| BINOM[k][i] * self.d[i] * other.d[k - i]).sum();
        }
        ScalarJet { order, d }
    }

    /// Sum at the smaller of the two orders.
    pub(crate) fn add_trunc(&self, other: &ScalarJet) -> Self {
        let order = self.order.min(other.order);
        self.truncate(order).zip(&other.truncate(order), |a, b| a + b)
    }

    pub(crate) fn sub_trunc(&self, other: &ScalarJet) -> Self {
        let order = self.order.min(other.order);
        self.truncate(order).zip(&other.truncate(order), |a, b| a - b)
    }

    /// Jets of `sin∘θ` and `cos∘θ`, via `(sin θ)' = θ'·cos θ` and
    /// `(cos θ)' = −θ'·sin θ` applied order by order.
    pub fn sin_cos(&self) -> (ScalarJet, ScalarJet) {
        let (s0, c0) = self.d[0].sin_cos();
        let mut s = ScalarJet::constant(s0, self.order);
        let mut c = ScalarJet::constant(c0, self.order);
        // s^(n+1) = Σ_i C(n,i) θ^(i+1) c^(n−i)
        for n in 0..self.order {
            let mut ds = 0.0;
            let mut dc = 0.0;
            for i in 0..=n {
                let w = BINOM[n][i] * self.d[i + 1];
                ds += w * c.d[n - i];
                dc -= w * s.d[n - i];
            }
            s.d[n + 1] = ds;
            c.d[n + 1] = dc;
        }
        (s, c)
    }

    /// Normalized Taylor coefficients `d[i] / i!`.
    fn taylor(&self) -> [f64; N] {
        let mut t = [0.0; N];
        for i in 0..=self.order {
            t[i] = self.d[i] / FACT[i];
        }
        t
    }

    fn from_taylor(t: &[f64; N], order: usize) -> Self {
        let mut d = [0.0; N];
        for i in 0..=order {
            d[i] = t[i] * FACT[i];
        }
        ScalarJet { order, d }
    }

    /// Jet of `f∘g`, where `self` holds the derivatives of `f` at `g(t0)` and
    /// `inner` is the jet of `g` at `t0`. The result has the smaller order.
    pub fn compose(&self, inner: &ScalarJet) -> ScalarJet {
        let order = self.order.min(inner.order);
        let a = self.taylor();
        let mut h = inner.taylor();
        h[0] = 0.0;
        let mut out = [0.0; N];
        out[0] = a[0];
        // running power h^n, truncated
        let mut pow = [0.0; N];
        pow[0] = 1.0;
        for n in 1..=order {
            let mut next = [0.0; N];
            for i in 0..=order {
                if pow[i] == 0.0 {
                    continue;
                }
                for j in 1..=order - i {
                    next[i + j] += pow[i] * h[j];
                }
            }
            pow = next;
            for k in n..=order {
                out[k] += a[n] * pow[k];
            }
        }
        ScalarJet::from_taylor(&out, order)
    }

    /// Jet of the inverse function `g⁻¹` at `g(t0)`, solved order by order.
    /// `self` is the jet of `g` at `t0`; the result has value `t0`.
    pub fn inverse(&self, t0: f64) -> Result<ScalarJet, JetError> {
        let slope = if self.order >= 1 { self.d[1] } else { 0.0 };
        if slope == 0.0 || !slope.is_finite() {
            return Err(JetError::NotInvertible);
        }
        let order = self.order;
        // τ(s) with g(τ(s)) = s around s0 = g(t0); τ(s0) = t0
        let mut tau = ScalarJet::constant(t0, order);
        if order >= 1 {
            tau.d[1] = 1.0 / slope;
        }
        let inv = 1.0 / slope;
        for k in 2..=order {
            let probe = self.compose(&tau.truncate(k));
            // coefficient k of g∘τ is linear in τ_k with factor g'·(1/k!)·k! = g'
            let resid = probe.d[k];
            tau.d[k] = -resid * inv;
        }
        Ok(tau)
    }

    fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        let mut d = [0.0; N];
        for i in 0..=self.order {
            d[i] = f(self.d[i]);
        }
        ScalarJet { order: self.order, d }
    }

    fn zip(&self, other: &ScalarJet, f: impl Fn(f64, f64) -> f64) -> Self {
        let mut d = [0.0; N];
        for i in 0..=self.order {
            d[i] = f(self.d[i], other.d[i]);
        }
        ScalarJet { order: self.order, d }
    }
}

/// Free-function form of [`ScalarJet::add`].
pub fn jet_add(a: &ScalarJet, b: &ScalarJet) -> Result<ScalarJet, JetError> {
    a.add(b)
}

/// Free-function form of [`ScalarJet::mul`].
pub fn jet_mul(a: &ScalarJet, b: &ScalarJet) -> Result<ScalarJet, JetError> {
    a.mul(b)
}

pub fn jet_sin_cos(theta: &ScalarJet) -> (ScalarJet, ScalarJet) {
    theta.sin_cos()
}

/// Value and derivatives of a planar curve at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanarJet {
    order: usize,
    d: [Vec2; N],
}

/// Linear operators that commute with differentiation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearOp {
    Tilde,
    JPow(u32),
}

impl PlanarJet {
    pub fn new(derivs: &[Vec2]) -> Result<Self, JetError> {
        if derivs.is_empty() {
            return Err(JetError::InsufficientOrder { needed: 0, available: 0 });
        }
        let order = derivs.len() - 1;
        check_order(order)?;
        if let Some(i) = derivs.iter().position(|v| !v.is_finite()) {
            return Err(JetError::NonFinite(i));
        }
        let mut d = [Vec2::ZERO; N];
        d[..derivs.len()].copy_from_slice(derivs);
        Ok(PlanarJet { order, d })
    }

    pub fn constant(c: Vec2, order: usize) -> Self {
        assert!(order <= K_MAX, "jet order {order} exceeds K_MAX");
        let mut d = [Vec2::ZERO; N];
        d[0] = c;
        PlanarJet { order, d }
    }

    pub fn from_components(x: &ScalarJet, y: &ScalarJet) -> Result<Self, JetError> {
        same_order(x.order, y.order)?;
        let mut d = [Vec2::ZERO; N];
        for i in 0..=x.order {
            d[i] = Vec2::new(x.d[i], y.d[i]);
        }
        Ok(PlanarJet { order: x.order, d })
    }

    pub fn x(&self) -> ScalarJet {
        self.component(|v| v.x)
    }

    pub fn y(&self) -> ScalarJet {
        self.component(|v| v.y)
    }

    fn component(&self, f: impl Fn(Vec2) -> f64) -> ScalarJet {
        let mut d = [0.0; N];
        for i in 0..=self.order {
            d[i] = f(self.d[i]);
        }
        ScalarJet { order: self.order, d }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn value(&self) -> Vec2 {
        self.d[0]
    }

    /// The `i`-th derivative. Panics when `i` exceeds the order.
    pub fn get(&self, i: usize) -> Vec2 {
        assert!(i <= self.order, "derivative {i} beyond jet order {}", self.order);
        self.d[i]
    }

    pub fn derivative(&self, i: usize) -> Result<Vec2, JetError> {
        if i > self.order {
            Err(JetError::InsufficientOrder { needed: i, available: self.order })
        } else {
            Ok(self.d[i])
        }
    }

    pub fn as_slice(&self) -> &[Vec2] {
        &self.d[..=self.order]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let mut d = [Vec2::ZERO; N];
        d[..=order].copy_from_slice(&self.d[..=order]);
        PlanarJet { order, d }
    }

    pub fn shift(&self) -> Result<Self, JetError> {
        if self.order == 0 {
            return Err(JetError::InsufficientOrder { needed: 1, available: 0 });
        }
        let mut d = [Vec2::ZERO; N];
        d[..self.order].copy_from_slice(&self.d[1..=self.order]);
        Ok(PlanarJet { order: self.order - 1, d })
    }

    pub fn add(&self, other: &PlanarJet) -> Result<Self, JetError> {
        same_order(self.order, other.order)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &PlanarJet) -> Result<Self, JetError> {
        same_order(self.order, other.order)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    pub(crate) fn add_trunc(&self, other: &PlanarJet) -> Self {
        let order = self.order.min(other.order);
        self.truncate(order).zip(&other.truncate(order), |a, b| a + b)
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|v| v * s)
    }

    /// Leibniz product with a scalar jet, at the smaller order.
    pub fn scale_by(&self, s: &ScalarJet) -> Self {
        let order = self.order.min(s.order);
        let mut d = [Vec2::ZERO; N];
        for (k, dk) in d.iter_mut().enumerate().take(order + 1) {
            let mut acc = Vec2::ZERO;
            for i in 0..=k {
                acc += self.d[k - i] * (BINOM[k][i] * s.d[i]);
            }
            *dk = acc;
        }
        PlanarJet { order, d }
    }

    /// Applies a constant linear operator entrywise.
    pub fn map_linear(&self, op: LinearOp) -> Self {
        match op {
            LinearOp::Tilde => self.map(Vec2::tilde),
            LinearOp::JPow(k) => {
                let p = JPower::new(k);
                self.map(|v| p.apply(v))
            }
        }
    }

    pub fn tilde(&self) -> Self {
        self.map_linear(LinearOp::Tilde)
    }

    /// Jet of `f∘g` for each component; see [`ScalarJet::compose`].
    pub fn compose(&self, inner: &ScalarJet) -> PlanarJet {
        let x = self.x().compose(inner);
        let y = self.y().compose(inner);
        PlanarJet::from_components(&x, &y).expect("components share an order")
    }

    /// Polynomial evaluation of the truncated Taylor series at offset `h`.
    pub fn taylor_eval(&self, h: f64) -> Vec2 {
        let mut acc = Vec2::ZERO;
        for i in (0..=self.order).rev() {
            acc = acc * h + self.d[i] / FACT[i];
        }
        acc
    }

    fn map(&self, f: impl Fn(Vec2) -> Vec2) -> Self {
        let mut d = [Vec2::ZERO; N];
        for i in 0..=self.order {
            d[i] = f(self.d[i]);
        }
        PlanarJet { order: self.order, d }
    }

    fn zip(&self, other: &PlanarJet, f: impl Fn(Vec2, Vec2) -> Vec2) -> Self {
        let mut d = [Vec2::ZERO; N];
        for i in 0..=self.order {
            d[i] = f(self.d[i], other.d[i]);
        }
        PlanarJet { order: self.order, d }
    }
}

pub fn vec_jet_map(a: &PlanarJet, op: LinearOp) -> PlanarJet {
    a.map_linear(op)
}

impl ScalarJet {
    /// Polynomial evaluation of the truncated Taylor series at offset `h`.
    pub fn taylor_eval(&self, h: f64) -> f64 {
        let mut acc = 0.0;
        for i in (0..=self.order).rev() {
            acc = acc * h + self.d[i] / FACT[i];
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::finite_difference_oracle;
    use proptest::prelude::*;

    fn jet(v: &[f64]) -> ScalarJet {
        ScalarJet::new(v).unwrap()
    }

    #[test]
    fn binomial_table_rows() {
        assert_eq!(&BINOM[4][..5], &[1.0, 4.0, 6.0, 4.0, 1.0]);
        assert_eq!(BINOM[12][6], 924.0);
    }

    #[test]
    fn constant_scales_every_entry() {
        let b = jet(&[1.0, -2.0, 3.5, 0.25]);
        let c = ScalarJet::constant(3.0, 3);
        assert_eq!(c.mul(&b).unwrap().as_slice(), &[3.0, -6.0, 10.5, 0.75]);
    }

    #[test]
    fn product_of_powers() {
        // t² and t³ at t = 1, differentiated symbolically
        let t2 = jet(&[1.0, 2.0, 2.0, 0.0, 0.0, 0.0]);
        let t3 = jet(&[1.0, 3.0, 6.0, 6.0, 0.0, 0.0]);
        let p = jet_mul(&t2, &t3).unwrap();
        assert_eq!(p.as_slice(), &[1.0, 5.0, 20.0, 60.0, 120.0, 120.0]);
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let a = ScalarJet::zero(3);
        let b = ScalarJet::zero(4);
        assert_eq!(a.mul(&b), Err(JetError::OrderMismatch { left: 3, right: 4 }));
        assert!(jet_add(&a, &b).is_err());
        assert_eq!(ScalarJet::new(&[0.0; 14]), Err(JetError::OrderTooLarge(13)));
        assert_eq!(ScalarJet::new(&[0.0, f64::NAN]), Err(JetError::NonFinite(1)));
    }

    #[test]
    fn sin_of_identity_is_maclaurin() {
        let (s, c) = ScalarJet::variable(0.0, 6).sin_cos();
        assert_eq!(s.as_slice(), &[0.0, 1.0, 0.0, -1.0, 0.0, 1.0, 0.0]);
        assert_eq!(c.as_slice(), &[1.0, 0.0, -1.0, 0.0, 1.0, 0.0, -1.0]);
    }

    #[test]
    fn sin_of_constant() {
        let (s, _) = ScalarJet::constant(0.4, 5).sin_cos();
        assert_eq!(s.value(), 0.4f64.sin());
        assert!(s.as_slice()[1..].iter().all(|&x| x == 0.0));
    }

    #[test]
    fn sin_cos_matches_finite_differences() {
        // θ(t) = 0.3 + 0.8 t − 0.5 t² + 0.2 t³ around t = 0
        let theta = jet(&[0.3, 0.8, -1.0, 1.2, 0.0, 0.0]);
        let (s, c) = theta.sin_cos();
        let f = |t: f64| {
            let th = 0.3 + 0.8 * t - 0.5 * t * t + 0.2 * t * t * t;
            Vec2::new(th.sin(), th.cos())
        };
        for k in 1..=5 {
            let fd = finite_difference_oracle(f, 0.0, k);
            let exact = Vec2::new(s.get(k), c.get(k));
            assert!((fd - exact).norm() <= 1e-6 * exact.norm().max(1.0), "k={k}: {fd:?} vs {exact:?}");
        }
    }

    #[test]
    fn tilde_map_is_entrywise() {
        let a = PlanarJet::new(&[Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)]).unwrap();
        let t = vec_jet_map(&a, LinearOp::Tilde);
        assert_eq!(t.as_slice(), &[Vec2::new(0.0, 1.0), Vec2::new(-1.0, 0.0)]);
        let n = vec_jet_map(&a, LinearOp::JPow(2));
        assert_eq!(n.as_slice(), &[Vec2::new(-1.0, 0.0), Vec2::new(0.0, -1.0)]);
    }

    #[test]
    fn compose_with_linear_inner() {
        // f = exp at 0, g(t) = 2t → f∘g = exp(2t)
        let f = jet(&[1.0; 6]);
        let g = jet(&[0.0, 2.0, 0.0, 0.0, 0.0, 0.0]);
        let h = f.compose(&g);
        for k in 0..=5 {
            assert!((h.get(k) - 2f64.powi(k as i32)).abs() < 1e-12);
        }
    }

    #[test]
    fn inverse_of_exp_is_log() {
        // g = exp at t0 = 0 → g⁻¹ = ln at s0 = 1: derivatives (0, 1, −1, 2, −6, 24)
        let g = jet(&[1.0; 6]);
        let inv = g.inverse(0.0).unwrap();
        let expect = [0.0, 1.0, -1.0, 2.0, -6.0, 24.0];
        for k in 0..=5 {
            assert!((inv.get(k) - expect[k]).abs() < 1e-12, "k={k}: {}", inv.get(k));
        }
        assert_eq!(jet(&[1.0, 0.0, 1.0]).inverse(0.0), Err(JetError::NotInvertible));
    }

    fn arb_jet(order: usize) -> impl Strategy<Value = ScalarJet> {
        proptest::collection::vec(-3.0..3.0f64, order + 1).prop_map(|v| ScalarJet::new(&v).unwrap())
    }

    proptest! {
        #[test]
        fn product_commutes(a in arb_jet(8), b in arb_jet(8)) {
            let (ab, ba) = (a.mul(&b).unwrap(), b.mul(&a).unwrap());
            for k in 0..=8 {
                prop_assert!((ab.get(k) - ba.get(k)).abs() <= 1e-12 * 2f64.powi(k as i32) * 9.0);
            }
        }

        #[test]
        fn leibniz_consistency(a in arb_jet(11), b in arb_jet(11)) {
            let lhs = a.mul(&b).unwrap().shift().unwrap();
            let rhs = a.shift().unwrap().mul_trunc(&b).add_trunc(&a.mul_trunc(&b.shift().unwrap()));
            for k in 0..=lhs.order() {
                let scale = 1.0 + lhs.get(k).abs();
                prop_assert!((lhs.get(k) - rhs.get(k)).abs() <= 1e-12 * scale * 2f64.powi(k as i32));
            }
        }

        #[test]
        fn pythagoras_on_jets(theta in arb_jet(12)) {
            let (s, c) = theta.sin_cos();
            let one = s.mul(&s).unwrap().add(&c.mul(&c).unwrap()).unwrap();
            prop_assert!((one.value() - 1.0).abs() <= 1e-12);
            // magnitudes of high derivatives grow like k!·|θ|^k; compare relatively
            let scale: f64 = s.as_slice().iter().chain(c.as_slice()).fold(1.0, |m, x| m.max(x.abs()));
            for k in 1..=12 {
                prop_assert!(one.get(k).abs() <= 1e-12 * scale * scale);
            }
        }

        #[test]
        fn shift_commutes_with_tilde(v in proptest::collection::vec((-5.0..5.0f64, -5.0..5.0f64), 2..8)) {
            let d: Vec<Vec2> = v.into_iter().map(Vec2::from).collect();
            let a = PlanarJet::new(&d).unwrap();
            prop_assert_eq!(a.tilde().shift().unwrap(), a.shift().unwrap().tilde());
        }

        #[test]
        fn inverse_round_trips(g in arb_jet(7).prop_filter("slope", |g| g.get(1).abs() > 0.3)) {
            let inv = g.inverse(0.0).unwrap();
            let id = g.compose(&inv);
            prop_assert!((id.get(1) - 1.0).abs() < 1e-9);
            for k in 2..=7 {
                prop_assert!(id.get(k).abs() < 1e-6 * (1.0 + inv.get(k).abs()), "k={} {}", k, id.get(k));
            }
        }
    }
}
