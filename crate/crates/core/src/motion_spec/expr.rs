use serde::Serialize;

use crate::jets::ScalarJet;

/// Highest polynomial degree accepted in a motion file.
pub const MAX_DEGREE: usize = 10;
/// Most terms one component may hold.
pub const MAX_TERMS: usize = 16;

/// One summand of a component function.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Term {
    /// `c0 + c1 t + … + cn tⁿ`.
    Poly { coeffs: Vec<f64> },
    /// `amp · sin(freq t + phase)`.
    Sin { amp: f64, freq: f64, phase: f64 },
    /// `amp · cos(freq t + phase)`.
    Cos { amp: f64, freq: f64, phase: f64 },
}

impl Term {
    /// `k`-th derivative at `t`, in closed form.
    pub fn derivative(&self, t: f64, k: usize) -> f64 {
        match self {
            Term::Poly { coeffs } => {
                if k >= coeffs.len() {
                    return 0.0;
                }
                // falling factorial n!/(n−k)! times c_n, by Horner
                let mut acc = 0.0;
                for n in (k..coeffs.len()).rev() {
                    let ff: f64 = ((n - k + 1)..=n).map(|m| m as f64).product();
                    acc = acc * t + coeffs[n] * ff;
                }
                acc
            }
            Term::Sin { amp, freq, phase } => harmonic(*amp, *freq, *phase, t, k, 0),
            Term::Cos { amp, freq, phase } => harmonic(*amp, *freq, *phase, t, k, 1),
        }
    }
}

// amp · freq^k · sin^(k + quarter)(freq t + phase); the derivatives of sin
// cycle through sin, cos, −sin, −cos, and cos = sin'
fn harmonic(amp: f64, freq: f64, phase: f64, t: f64, k: usize, quarter: usize) -> f64 {
    let x = freq * t + phase;
    let base = match (k + quarter) % 4 {
        0 => x.sin(),
        1 => x.cos(),
        2 => -x.sin(),
        _ => -x.cos(),
    };
    base * amp * freq.powi(k as i32)
}

/// Finite sum of terms.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct FunctionExpr {
    pub terms: Vec<Term>,
}

impl FunctionExpr {
    pub fn new(terms: Vec<Term>) -> Self {
        FunctionExpr { terms }
    }

    pub fn value(&self, t: f64) -> f64 {
        self.derivative(t, 0)
    }

    pub fn derivative(&self, t: f64, k: usize) -> f64 {
        self.terms.iter().map(|term| term.derivative(t, k)).sum()
    }

    /// Jet of order `order` at `t`.
    pub fn jet(&self, t: f64, order: usize) -> Result<ScalarJet, crate::JetError> {
        let d: Vec<f64> = (0..=order).map(|k| self.derivative(t, k)).collect();
        ScalarJet::new(&d)
    }
}
