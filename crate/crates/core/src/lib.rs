//! Closed-form scattering solutions of the partner potentials V± = W² ± W′ generated by
//! the superpotential W = −m/√x, together with an independent numerical harness
//! (ODE integration, Frobenius series, finite-difference residuals) that checks them.

// `!(x > 0.0)` style guards are used on purpose so that NaN fails them
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod closedform;
pub mod dd;
pub mod error;
pub mod golden;
pub mod oracle;
pub mod potential;
pub mod report;
pub mod scattering;
pub mod specfun;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
