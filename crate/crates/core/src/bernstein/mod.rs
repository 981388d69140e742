//! Exact bivariate Bernstein enclosures, subdivision, corner estimates and
//! positivity certificates.

mod certify;
mod corner;
mod patch;
mod poly;

pub use certify::{
    certify_positive, validate, CertNode, CertSummary, CornerRule, NodeStatus,
    PositivityCertificate, Witness, WITNESS_LATTICE,
};
pub use corner::{corner_estimate, CornerEstimate, CornerSplit};
pub use patch::{bound_above, enclosure, to_bernstein, BernsteinPatch, Rect};
pub use poly::BiPoly;
