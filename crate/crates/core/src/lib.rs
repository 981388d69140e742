//! Coefficient functionals, Bernstein certificates and radius computations for
//! starlike functions associated with `phi(z) = (1 + z/2)^2`.

pub mod bernstein;
pub mod error;
pub mod gft;
pub mod oracle;
pub mod pipelines;
pub mod radius;
pub mod rational;
pub mod series;

pub use error::{Error, Result};
