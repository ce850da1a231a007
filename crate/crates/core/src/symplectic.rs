//! Planar vector algebra built on the complex structure `J` (quarter turn
//! counter-clockwise).
//!
//! Everything here is coordinate-light: a [`Vec2`] is a free vector, the
//! tilde operator is `J`, and the skew-scalar product `ã·b` is the oriented
//! parallelogram area. Angles are counter-clockwise positive.

use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// A free vector in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };
    pub const E1: Vec2 = Vec2 { x: 1.0, y: 0.0 };
    pub const E2: Vec2 = Vec2 { x: 0.0, y: 1.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Unit vector at polar angle `phi`.
    #[inline]
    pub fn polar(phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Vec2::new(c, s)
    }

    /// Skew-orthogonal vector `Ja = (−a.y, a.x)`.
    #[inline]
    pub fn tilde(self) -> Self {
        Vec2::new(-self.y, self.x)
    }

    #[inline]
    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// Skew-scalar product `ã·b = a.x·b.y − a.y·b.x`.
    #[inline]
    pub fn perp_dot(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// `cos θ·a + sin θ·ã`.
    #[inline]
    pub fn rotate(self, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        self * c + self.tilde() * s
    }

    /// `J^k a`; the cycle `a, ã, −a, −ã` repeats with period 4.
    #[inline]
    pub fn j_pow(self, k: u32) -> Self {
        JPower::new(k).apply(self)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// `self / |self|`, or `None` for a vector with zero (or non-finite) length.
    pub fn normalized(self) -> Option<Vec2> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(self / n)
        } else {
            None
        }
    }

    pub fn distance(self, other: Vec2) -> f64 {
        (other - self).norm()
    }
}

/// Scalar product.
#[inline]
pub fn dot(a: Vec2, b: Vec2) -> f64 {
    a.dot(b)
}

/// Skew-scalar product `ã·b`.
#[inline]
pub fn perp_dot(a: Vec2, b: Vec2) -> f64 {
    a.perp_dot(b)
}

#[inline]
pub fn tilde(a: Vec2) -> Vec2 {
    a.tilde()
}

#[inline]
pub fn rotate(a: Vec2, theta: f64) -> Vec2 {
    a.rotate(theta)
}

#[inline]
pub fn j_pow(k: u32, a: Vec2) -> Vec2 {
    a.j_pow(k)
}

/// A power of the complex structure, reduced mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct JPower(u8);

impl JPower {
    pub const IDENTITY: JPower = JPower(0);
    pub const J: JPower = JPower(1);

    pub fn new(k: u32) -> Self {
        JPower((k % 4) as u8)
    }

    /// `(−J)^k`, which equals `J^(3k)`.
    pub fn minus_j(k: u32) -> Self {
        JPower::new((k % 4) * 3)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn apply(self, a: Vec2) -> Vec2 {
        match self.0 {
            0 => a,
            1 => a.tilde(),
            2 => -a,
            _ => -a.tilde(),
        }
    }

    pub fn compose(self, other: JPower) -> JPower {
        JPower((self.0 + other.0) % 4)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Vec2 {
    #[inline]
    fn add_assign(&mut self, o: Vec2) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl SubAssign for Vec2 {
    #[inline]
    fn sub_assign(&mut self, o: Vec2) {
        self.x -= o.x;
        self.y -= o.y;
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, v: Vec2) -> Vec2 {
        v * self
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn div(self, s: f64) -> Vec2 {
        Vec2::new(self.x / s, self.y / s)
    }
}

impl From<(f64, f64)> for Vec2 {
    fn from((x, y): (f64, f64)) -> Self {
        Vec2::new(x, y)
    }
}
