//! Single-qubit geometry on the Riemann sphere.
//!
//! Pure qubit states are identified with points of the extended complex plane
//! through stereographic projection of the Bloch sphere. Under that
//! identification a single-qubit unitary acts as the Möbius transformation
//! whose coefficient matrix is the unitary itself, so gate identities can be
//! checked as compositions of fractional linear maps (up to global phase) and
//! constant-Hamiltonian precession traces circles in the plane.
//!
//! Modules, bottom-up:
//!
//! - [`extplane`]: homogeneous points of C ∪ {∞}, Möbius maps as PSL(2,C),
//!   the chordal metric, cross-ratio and circlines.
//! - [`qubit`]: states, Bloch vectors, the projection and its inverse,
//!   superposition and inner products evaluated on the plane.
//! - [`gates`]: unitaries, the unitary ↔ Möbius correspondence, axis–angle
//!   decomposition and identity checks up to global phase.
//! - [`dynamics`]: closed-form evolution under a constant Hamiltonian and
//!   the circline traced by the precessing state.

pub mod dynamics;
pub mod error;
pub mod extplane;
pub mod gates;
pub mod qubit;

pub use num_complex::Complex64;

pub use dynamics::{Hamiltonian, TrajectoryRecord};
pub use error::{Error, Result};
pub use extplane::{Circline, ExtendedComplex, MoebiusTransform};
pub use gates::{AxisAngleDecomposition, UnitaryGate};
pub use qubit::{BlochVector, QubitState, SphereCircle};

/// Default tolerance for geometric predicates (containment, point equality).
pub const GEOMETRIC_TOL: f64 = 1e-9;

/// Default tolerance for algebraic identities (normalization, determinants).
pub const ALGEBRAIC_TOL: f64 = 1e-12;
