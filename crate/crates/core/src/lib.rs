//! Casimir energy of a scalar field between parallel plates carried by a
//! stationary observer in a rotating spacetime.
//!
//! The flat-space energy [`casimir::casimir_energy_flat_massive`] is dressed by a
//! factor that depends only on the comoving metric ([`geometry::LocalMetric`]).
//! [`backgrounds`] builds that metric for a rotating cylinder and for the Kerr
//! equatorial plane, and [`regimes`] gives the characteristic velocities where
//! the energy vanishes or changes sign.

pub mod backgrounds;
pub mod casimir;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod quadrature;
pub mod regimes;
pub mod specfun;
pub mod sweep;
pub mod units;

pub use error::{Error, Result};
