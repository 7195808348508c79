//! Exact q-series engine for the Gromov-Witten generating functions of
//! elliptic surfaces.
//!
//! Everything is computed over arbitrary-precision rationals in truncated
//! formal power series — no floating point anywhere — so the
//! generating-function identities this crate verifies (the theta-ODE for
//! the E(n) product formulas, the genus-1 recursion/fiber-sum
//! reconciliation, and the Yau-Zaslow doubling relation on K3) are checked
//! to exact zero residuals, coefficient by coefficient.
//!
//! Modules:
//! - [`rational`], [`series`]: the arithmetic substrate.
//! - [`arith`]: divisor sums and the Eisenstein-type series G, G₂, G_e, G_o.
//! - [`surface`]: E(n) intersection data, dimension formulas, the E(1)
//!   lattice and its dual bases.
//! - [`gw`]: the genus-0 product formulas, the θ-ODE solver, and the two
//!   genus-1 assemblies.
//! - [`yz`]: the doubling ODE, its modular certificate, and the
//!   Yau-Zaslow tables.
//! - [`verify`]: every identity as a named check with a machine-readable
//!   report.

pub mod arith;
pub mod error;
pub mod gw;
pub mod rational;
pub mod series;
pub mod surface;
pub mod verify;
pub mod yz;

pub use error::Error;
pub use rational::Rational;
pub use series::{product_power, Series};
pub use surface::{E1Lattice, HClass, LatticeVector, SurfaceModel, E1_RANK};
pub use verify::{all_passed, run_all, VerificationReport, VerifyConfig};
pub use yz::{DoublingReport, YzTable};
