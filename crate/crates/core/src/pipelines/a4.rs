//! Numerical maximization of `|a_4|` over the class.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gft::{schwarz_parametrize_unchecked, schwarz_to_coeffs, ParamTriple};
use crate::oracle::{compass_max, golden_max, PolarGrid};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct A4Max {
    pub value: f64,
    pub c1: f64,
    pub gamma: [f64; 2],
    pub eta: [f64; 2],
    pub samples: usize,
    /// Maximizer and maximum of the one-parameter family.
    pub family_t: f64,
    pub family_value: f64,
}

/// `|a_4|` along the Blaschke product `w(z) = z (t - z)/(1 - t z)`
/// with `c_1 = t`: `t (1 - t^2) - 7 t^3/24`.
pub fn a4_family(t: f64) -> f64 {
    t * (1.0 - t * t) - 7.0 * t * t * t / 24.0
}

/// `|a_4|` at Schwarz parameters `(c_1, gamma, eta)`; `rho` does not enter.
pub fn a4_modulus(c1: f64, gamma: Complex64, eta: Complex64) -> f64 {
    let t = ParamTriple::new(gamma, eta, Complex64::new(0.0, 0.0));
    schwarz_to_coeffs(&schwarz_parametrize_unchecked(c1, &t))
        .a4
        .norm()
}

fn project(v: &mut [f64]) {
    v[0] = v[0].clamp(0.0, 1.0);
    for k in [1, 3] {
        let r = v[k].hypot(v[k + 1]);
        if r > 1.0 {
            v[k] /= r;
            v[k + 1] /= r;
        }
    }
}

/// Grid scan over `c_1` (`grid + 1` points on `[0, 1]`), `gamma` on a polar
/// grid and `eta` on the unit circle (`a_4` is affine in `eta`, so its
/// modulus peaks on the circle), then compass refinement of the best few
/// points for at most `refine_steps` sweeps each.
pub fn max_a4(grid: usize, refine_steps: usize) -> Result<A4Max> {
    if grid < 64 {
        return Err(Error::OutOfRange {
            what: "grid (expected >= 64)",
            value: grid.to_string(),
        });
    }
    let phases = PolarGrid::DEFAULT_PHASES;
    let disk = PolarGrid::closed(grid / 4 + 1, phases).points();
    let circle: Vec<Complex64> = (0..phases)
        .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / phases as f64))
        .collect();
    let mut scored: Vec<(f64, [f64; 5])> = (0..=grid)
        .into_par_iter()
        .flat_map_iter(|i| disk.iter().map(move |g| (i, *g)))
        .map(|(i, gamma)| {
            let c1 = i as f64 / grid as f64;
            circle
                .iter()
                .map(|eta| {
                    (
                        a4_modulus(c1, gamma, *eta),
                        [c1, gamma.re, gamma.im, eta.re, eta.im],
                    )
                })
                .fold(
                    (f64::NEG_INFINITY, [0.0; 5]),
                    |a, b| if b.0 > a.0 { b } else { a },
                )
        })
        .collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0));

    let f = |v: &[f64]| a4_modulus(v[0], Complex64::new(v[1], v[2]), Complex64::new(v[3], v[4]));
    let step0 = 1.0 / grid as f64;
    let (value, best) = scored
        .iter()
        .take(4)
        .map(|(_, start)| compass_max(f, project, start, step0, 1e-13, refine_steps))
        .fold((f64::NEG_INFINITY, vec![0.0; 5]), |a, b| {
            if b.0 > a.0 {
                b
            } else {
                a
            }
        });

    let (family_value, family_t) = golden_max(a4_family, 0.0, 1.0, 1e-12);
    Ok(A4Max {
        value,
        c1: best[0],
        gamma: [best[1], best[2]],
        eta: [best[3], best[4]],
        samples: (grid + 1) * disk.len() * circle.len(),
        family_t,
        family_value,
    })
}
