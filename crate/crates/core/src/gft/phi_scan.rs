//! Numeric scans of the Ma–Minda properties of `phi(z) = (1 + z/2)^2`.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::PolarGrid;

/// Open-disk scans never go past this radius.
pub const MAX_SCAN_RADIUS: f64 = 1.0 - 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhiScanConfig {
    pub radii: usize,
    pub phases: usize,
    pub boundary_points: usize,
}

impl PhiScanConfig {
    pub fn from_density(grid_density: usize) -> Self {
        Self {
            radii: grid_density,
            phases: 4 * grid_density,
            boundary_points: 10_000.max(grid_density * grid_density),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub samples: usize,
    pub min_modulus: f64,
    pub max_modulus: f64,
    pub min_real_part: f64,
    /// `max |z/(8 + 3z)|`, the Möbius image of `z phi'(z)/(phi(z) - 1)`.
    pub max_starlike_ratio: f64,
    /// `min_t |phi(e^{it}) - 5/4|^2` over the boundary grid.
    pub boundary_min: f64,
    /// Values of the boundary quantity at `t = 0` and `t = pi`.
    pub boundary_at_zero: f64,
    pub boundary_at_pi: f64,
    pub boundary_points: usize,
    /// Largest deviation from `9/8 - cos(2t)/8` on the boundary grid.
    pub boundary_formula_error: f64,
    pub modulus_ok: bool,
    pub real_part_ok: bool,
    pub starlike_ok: bool,
    pub boundary_ok: bool,
}

impl PropertyReport {
    pub fn all_ok(&self) -> bool {
        self.modulus_ok && self.real_part_ok && self.starlike_ok && self.boundary_ok
    }
}

pub fn phi(z: Complex64) -> Complex64 {
    let w = 1.0 + z / 2.0;
    w * w
}

/// `|phi(e^{it}) - 5/4|^2`, computed directly.
pub fn boundary_gap(t: f64) -> f64 {
    (phi(Complex64::from_polar(1.0, t)) - 1.25).norm_sqr()
}

pub fn ma_minda_scan(grid_density: usize) -> Result<PropertyReport> {
    ma_minda_scan_with(PhiScanConfig::from_density(grid_density))
}

pub fn ma_minda_scan_with(cfg: PhiScanConfig) -> Result<PropertyReport> {
    if cfg.radii < 8 || cfg.phases < 8 {
        return Err(Error::OutOfRange {
            what: "grid density (expected >= 8)",
            value: cfg.radii.min(cfg.phases).to_string(),
        });
    }
    let grid = PolarGrid::closed(cfg.radii, cfg.phases).with_max_radius(MAX_SCAN_RADIUS);
    let pts = grid.points();

    #[derive(Clone, Copy)]
    struct Acc {
        min_mod: f64,
        max_mod: f64,
        min_re: f64,
        max_ratio: f64,
    }
    let init = Acc {
        min_mod: f64::INFINITY,
        max_mod: f64::NEG_INFINITY,
        min_re: f64::INFINITY,
        max_ratio: f64::NEG_INFINITY,
    };
    let acc = pts
        .par_iter()
        .map(|&z| {
            let v = phi(z);
            let m = v.norm();
            Acc {
                min_mod: m,
                max_mod: m,
                min_re: v.re,
                max_ratio: (z / (8.0 + 3.0 * z)).norm(),
            }
        })
        .reduce(
            || init,
            |a, b| Acc {
                min_mod: a.min_mod.min(b.min_mod),
                max_mod: a.max_mod.max(b.max_mod),
                min_re: a.min_re.min(b.min_re),
                max_ratio: a.max_ratio.max(b.max_ratio),
            },
        );

    let n = cfg.boundary_points.max(2);
    let (boundary_min, formula_err) = (0..n)
        .into_par_iter()
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64;
            let g = boundary_gap(t);
            (g, (g - (1.125 - (2.0 * t).cos() / 8.0)).abs())
        })
        .reduce(
            || (f64::INFINITY, 0.0f64),
            |a, b| (a.0.min(b.0), a.1.max(b.1)),
        );
    let at_zero = boundary_gap(0.0);
    let at_pi = boundary_gap(std::f64::consts::PI);

    Ok(PropertyReport {
        samples: pts.len(),
        min_modulus: acc.min_mod,
        max_modulus: acc.max_mod,
        min_real_part: acc.min_re,
        max_starlike_ratio: acc.max_ratio,
        boundary_min,
        boundary_at_zero: at_zero,
        boundary_at_pi: at_pi,
        boundary_points: n,
        boundary_formula_error: formula_err,
        modulus_ok: acc.min_mod > 0.25 && acc.max_mod < 2.25,
        real_part_ok: acc.min_re > 0.0,
        starlike_ok: acc.max_ratio < 0.2,
        boundary_ok: boundary_min >= 1.0 - 1e-10
            && (at_zero - 1.0).abs() <= 1e-10
            && (at_pi - 1.0).abs() <= 1e-10,
    })
}
