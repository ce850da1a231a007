//! Random motions for the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symkin::motion_spec::{FunctionExpr, MotionSpec, Parameter, Term};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(r: &mut ChaCha8Rng) -> f64 {
    r.gen_range(-1.0..1.0)
}

fn term(r: &mut ChaCha8Rng) -> Term {
    match r.gen_range(0..3) {
        0 => Term::Poly { coeffs: (0..r.gen_range(1..5)).map(|_| uniform(r)).collect() },
        1 => Term::Sin { amp: uniform(r), freq: 2.0 * uniform(r), phase: 3.0 * uniform(r) },
        _ => Term::Cos { amp: uniform(r), freq: 2.0 * uniform(r), phase: 3.0 * uniform(r) },
    }
}

pub fn component(r: &mut ChaCha8Rng) -> FunctionExpr {
    FunctionExpr::new((0..r.gen_range(1..4)).map(|_| term(r)).collect())
}

/// θ with θ̇ ≥ 0.4 in magnitude everywhere.
pub fn monotone_angle(r: &mut ChaCha8Rng) -> FunctionExpr {
    let rate = r.gen_range(0.5..1.5) * if r.gen_bool(0.5) { 1.0 } else { -1.0 };
    FunctionExpr::new(vec![
        Term::Poly { coeffs: vec![uniform(r), rate] },
        Term::Sin { amp: 0.1 * uniform(r), freq: uniform(r), phase: uniform(r) },
    ])
}

pub fn random_spec(r: &mut ChaCha8Rng) -> MotionSpec {
    let angle = r.gen_bool(0.25);
    MotionSpec {
        name: format!("random-{}", r.gen_range(0..1000)),
        parameter: if angle { Parameter::Angle } else { Parameter::Time },
        char_length: r.gen_range(0.5..3.0),
        o_x: component(r),
        o_y: component(r),
        theta: if angle { FunctionExpr::new(Vec::new()) } else { monotone_angle(r) },
    }
}
