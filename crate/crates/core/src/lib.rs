//! Numerical laboratory for power moments of the Riemann zeta function on
//! the critical line: evaluation of ζ(1/2+it), divisor-problem error terms,
//! smoothed and hybrid moments, Atkinson-type explicit series, Diophantine
//! counting bounds, short-interval mean squares, and the Mellin transform
//! of |ζ(1/2+ix)|⁴.

pub mod constants;
pub mod counting;
pub mod dd;
pub mod divisor;
pub mod error;
pub mod explicit;
pub mod jutila;
pub mod mellin;
pub mod moments;
pub mod quad;
pub mod special;
pub mod sum;
pub mod zeta;

pub use error::{Error, Result};
