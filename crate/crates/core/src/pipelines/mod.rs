//! End-to-end verifications built from the other modules.

mod a4;
mod h2;
mod h3;
mod registry;
mod report;

pub use a4::{a4_family, a4_modulus, max_a4, A4Max};
pub use h2::{h2_oracle, verify_h2};
pub use h3::{
    build_h3_reduction, h1_eval, h3_oracle, h_eval, h_groups, h_y_coefficient, verify_h3,
    verify_h3_with, H3OracleConfig, H3Reduction, HGroups, H3_SCALE, H3_SCALED_BOUND,
};
pub use registry::{
    A4Check, Check, CheckRegistry, H2Check, H3Check, JanowskiCheck, PhiScanCheck, RadiusCheck,
    A4_MAX, A4_WITNESS,
};
pub use report::{OracleStats, Status, SubCheck, VerificationReport};
