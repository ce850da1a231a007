//! Planar kinematics in symplectic vector form.
//!
//! The crate is organised bottom-up:
//!
//! * [`symplectic`] planar vectors, the quarter-turn operator and its powers;
//! * [`jets`] value-plus-derivatives containers with Leibniz arithmetic;
//! * [`trajectory`] single-point kinematics (polar recursion, Frenet frame);
//! * [`rigid_motion`] point derivatives of a moving plane, poles of all orders;
//! * [`relative_motion`] three-frame chains and relative poles;
//! * [`bresse`] zero-normal / zero-tangential loci and Ball's point;
//! * [`curvature_geometry`] conjugate points and the Euler–Savary family;
//! * [`polodes`] polode derivatives, curvature radii, canonical invariants;
//! * [`motion_spec`] the motion-file format and closed-form presets.

#![allow(clippy::needless_range_loop)]

pub mod bresse;
pub mod curvature_geometry;
pub mod error;
pub mod jets;
pub mod motion_spec;
pub mod oracle;
pub mod polodes;
pub mod relative_motion;
pub mod rigid_motion;
pub mod symplectic;
pub mod tol;
pub mod trajectory;

pub use error::{JetError, KinematicsError, Result};
pub use jets::{PlanarJet, ScalarJet, K_MAX};
pub use symplectic::{JPower, Vec2};
