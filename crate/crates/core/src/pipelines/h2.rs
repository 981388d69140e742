//! The second Hankel determinant bound `|H_2(2)| <= 1/4`.

use rayon::prelude::*;

use super::report::{OracleStats, SubCheck, VerificationReport};
use crate::error::{Error, Result};
use crate::gft::{
    h2_envelope, h2_envelope_derivative, h2_from_lz, hankel2, schwarz_to_coeffs, H2Reduction,
    ParamTriple, SchwarzCoeffs,
};
use crate::oracle::PolarGrid;
use crate::rational::{int, rat, Rational};
use num_traits::{Signed, Zero};

/// Max of `|H_2(2)|` over `p_1` on `[0, 2]` (`grid + 1` points) and `gamma`,
/// `eta` on a polar grid of the closed disk.
pub fn h2_oracle(grid: usize) -> OracleStats {
    let disk = PolarGrid::closed(grid / 4 + 1, PolarGrid::DEFAULT_PHASES).points();
    let n = grid.max(1);
    let observed = (0..=n)
        .into_par_iter()
        .flat_map_iter(|i| disk.iter().map(move |g| (i, *g)))
        .map(|(i, gamma)| {
            let p1 = 2.0 * i as f64 / n as f64;
            disk.iter()
                .map(|eta| {
                    let t = ParamTriple::new(gamma, *eta, Default::default());
                    h2_from_lz(p1, &t)
                        .map(|h| h.norm())
                        .unwrap_or(f64::INFINITY)
                })
                .fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max);
    OracleStats::new((n + 1) * disk.len() * disk.len(), observed, 0.25 + 1e-9)
}

/// Runs the exact reduction checks on the interior points `p_1 = 2k/grid`,
/// the two boundary cases, the sharpness witness `w = z^2`, and a grid scan.
pub fn verify_h2(grid: usize) -> Result<VerificationReport> {
    if grid < 32 {
        return Err(Error::OutOfRange {
            what: "grid (expected >= 32)",
            value: grid.to_string(),
        });
    }
    let samples: Vec<Rational> = (1..grid as i64).map(|k| rat(2 * k, grid as i64)).collect();
    let mut checks = Vec::new();

    let mut identity_ok = true;
    let mut cases_ok = true;
    let mut decreasing = true;
    for p in &samples {
        let red = H2Reduction::new(p.clone())?;
        identity_ok &= red.product() == h2_envelope(p)?;
        cases_ok &= red.case_conditions();
        decreasing &= !h2_envelope_derivative(p).is_positive();
    }
    checks.push(SubCheck::new(
        "envelope identity",
        identity_ok,
        format!(
            "|D|(|A1|+|B1|+|C1|) = g1(p1) at {} rational points",
            samples.len()
        ),
    ));
    checks.push(SubCheck::new(
        "case conditions",
        cases_ok,
        "A1 C1 > 0, |C1| >= 1 and |B1| >= 2(1 - |C1|)",
    ));
    checks.push(SubCheck::new(
        "envelope decreasing",
        decreasing,
        "g1'(p1) <= 0 at every sample",
    ));

    let at0 = h2_envelope(&int(0))?;
    let at2 = h2_envelope(&int(2))?;
    checks.push(SubCheck::new(
        "boundary cases",
        at0 == rat(1, 4) && at2 == rat(19, 192),
        format!("p1 = 0 gives {at0}, p1 = 2 gives {at2}"),
    ));

    let w = SchwarzCoeffs::real(int(0), int(1), int(0), int(0));
    let h = hankel2(&schwarz_to_coeffs(&w));
    checks.push(SubCheck::new(
        "sharpness w = z^2",
        h.im.is_zero() && h.re == rat(-1, 4),
        format!("H2(2) = {}", h.re),
    ));

    // the envelope is decreasing, so its value at p1 = 0 dominates
    let bound = if at0 >= at2 { at0 } else { at2 };
    let stats = h2_oracle(grid);
    Ok(VerificationReport::assemble(
        "|H2(2)| <= 1/4",
        Some(bound),
        checks,
        Some(stats),
    ))
}
