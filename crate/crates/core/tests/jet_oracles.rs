//! Jet arithmetic against the finite-difference oracle on random inputs.

mod support;

use support::{rng, uniform};
use symkin::oracle::finite_difference_oracle;
use symkin::{ScalarJet, Vec2};

fn random_jet(r: &mut rand_chacha::ChaCha8Rng, order: usize) -> ScalarJet {
    let d: Vec<f64> = (0..=order).map(|_| uniform(r)).collect();
    ScalarJet::new(&d).unwrap()
}

/// Scalar `f` as the x component of a planar curve, for the oracle.
fn fd(f: impl Fn(f64) -> f64, k: usize) -> f64 {
    finite_difference_oracle(|t| Vec2::new(f(t), 0.0), 0.0, k).x
}

fn close(got: f64, want: f64, tol: f64) -> bool {
    (got - want).abs() <= tol * want.abs().max(1.0)
}

#[test]
fn products_and_trig() {
    let mut r = rng(11);
    for _ in 0..200 {
        let (a, b) = (random_jet(&mut r, 6), random_jet(&mut r, 6));
        let ab = a.mul(&b).unwrap();
        let (s, c) = a.sin_cos();
        for k in 1..=5 {
            let want = fd(|t| a.taylor_eval(t) * b.taylor_eval(t), k);
            assert!(close(ab.get(k), want, 1e-6), "product k={k}");
            let want = fd(|t| a.taylor_eval(t).sin(), k);
            assert!(close(s.get(k), want, 1e-6), "sin k={k}");
            let want = fd(|t| a.taylor_eval(t).cos(), k);
            assert!(close(c.get(k), want, 1e-6), "cos k={k}");
        }
    }
}

#[test]
fn composition() {
    let mut r = rng(12);
    for _ in 0..200 {
        let outer = random_jet(&mut r, 6);
        let mut inner = random_jet(&mut r, 6);
        inner = inner.with(0, 0.0);
        let h = outer.compose(&inner);
        for k in 1..=5 {
            let want = fd(|t| outer.taylor_eval(inner.taylor_eval(t)), k);
            assert!(close(h.get(k), want, 1e-6), "k={k}");
        }
    }
}

#[test]
fn inversion_round_trips() {
    let mut r = rng(13);
    for _ in 0..200 {
        let t0 = uniform(&mut r);
        let mut g = random_jet(&mut r, 8).with(0, 0.0);
        g = g.with(1, 0.5 + uniform(&mut r).abs());
        let inv = g.inverse(t0).unwrap();
        assert_eq!(inv.value(), t0);
        // g(τ(s) − t0) = s near s = 0
        let back = g.compose(&inv.with(0, 0.0));
        assert!((back.get(1) - 1.0).abs() < 1e-12);
        for k in 2..=8 {
            assert!(back.get(k).abs() < 1e-9 * (1.0 + inv.get(k).abs()), "k={k}");
        }
    }
}
