//! Library-wide tolerances.

/// Relative tolerance for algebraic identities between vectors.
pub const TAU_ALG: f64 = 1e-9;

/// Base of the degeneracy threshold; multiplied by the characteristic scale
/// of the operands (see [`tau_deg`]).
pub const TAU_DEG: f64 = 1e-12;

/// Relative width of the band around a singular manifold inside which the
/// curvature constructions refuse to answer.
pub const GUARD_BAND: f64 = 1e-7;

/// A Bresse circle degrades to a line when its `|Ω|` falls below this
/// fraction of `|Ω_r| + |Ω_t|`.
pub const BRESSE_FLAT: f64 = 1e-9;

/// Angular velocity threshold base, see [`tau_omega`].
pub const TAU_OMEGA: f64 = 1e-9;

/// `TAU_DEG · max(1, scales…)`.
pub fn tau_deg(scales: &[f64]) -> f64 {
    TAU_DEG * scales.iter().fold(1.0_f64, |m, s| m.max(s.abs()))
}

/// `TAU_OMEGA · (1 + |ṙ_A| / L)` with `L` the characteristic length.
pub fn tau_omega(ref_speed: f64, char_length: f64) -> f64 {
    TAU_OMEGA * (1.0 + ref_speed.abs() / char_length)
}
