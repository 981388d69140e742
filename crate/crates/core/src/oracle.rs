//! Brute-force floating-point search used to cross-check closed forms:
//! polar grids on the closed unit disk, compass search refinement, and
//! golden-section maximization on an interval.
//!
//! Nothing in here knows about the formulas it checks.

use num_complex::Complex64;
use rayon::prelude::*;

/// Polar sampling of the closed unit disk: `moduli` radii evenly spaced on
/// `[0, max_radius]` (both ends included) times `phases` angles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarGrid {
    pub moduli: usize,
    pub phases: usize,
    pub max_radius: f64,
}

impl PolarGrid {
    pub const DEFAULT_PHASES: usize = 24;

    pub fn closed(moduli: usize, phases: usize) -> Self {
        Self {
            moduli: moduli.max(1),
            phases: phases.max(1),
            max_radius: 1.0,
        }
    }

    pub fn with_max_radius(mut self, r: f64) -> Self {
        self.max_radius = r;
        self
    }

    pub fn radius(&self, k: usize) -> f64 {
        if self.moduli == 1 {
            0.0
        } else {
            self.max_radius * k as f64 / (self.moduli - 1) as f64
        }
    }

    pub fn angle(&self, k: usize) -> f64 {
        std::f64::consts::TAU * k as f64 / self.phases as f64
    }

    /// All sample points; the origin is emitted once.
    pub fn points(&self) -> Vec<Complex64> {
        let mut pts = vec![Complex64::new(0.0, 0.0)];
        for i in 1..self.moduli {
            let r = self.radius(i);
            for k in 0..self.phases {
                pts.push(Complex64::from_polar(r, self.angle(k)));
            }
        }
        pts
    }
}

/// Maximizes `f` by compass search from `start`, where `project` maps a
/// trial point back into the feasible set. Steps halve after a full sweep
/// without improvement; stops when the step drops below `min_step` or after
/// `max_sweeps` sweeps.
pub fn compass_max<F, P>(
    f: F,
    project: P,
    start: &[f64],
    step0: f64,
    min_step: f64,
    max_sweeps: usize,
) -> (f64, Vec<f64>)
where
    F: Fn(&[f64]) -> f64,
    P: Fn(&mut [f64]),
{
    let mut x = start.to_vec();
    project(&mut x);
    let mut best = f(&x);
    let mut step = step0;
    let mut trial = x.clone();
    for _ in 0..max_sweeps {
        if step < min_step {
            break;
        }
        let mut improved = false;
        for d in 0..x.len() {
            for sign in [1.0, -1.0] {
                trial.copy_from_slice(&x);
                trial[d] += sign * step;
                project(&mut trial);
                let v = f(&trial);
                if v > best {
                    best = v;
                    x.copy_from_slice(&trial);
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    (best, x)
}

/// Maximum of `f` over the closed unit disk: polar grid scan, then compass
/// refinement from the best `seeds` grid points.
pub fn disk_max<F>(f: F, grid: PolarGrid, seeds: usize, max_sweeps: usize) -> (f64, Complex64)
where
    F: Fn(Complex64) -> f64 + Sync,
{
    let mut scored: Vec<(f64, Complex64)> =
        grid.points().into_par_iter().map(|z| (f(z), z)).collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0));
    let step0 = 1.0 / grid.moduli.max(grid.phases) as f64;
    let project = |v: &mut [f64]| {
        let r = v[0].hypot(v[1]);
        if r > 1.0 {
            v[0] /= r;
            v[1] /= r;
        }
    };
    scored
        .iter()
        .take(seeds.max(1))
        .map(|&(_, z)| {
            let (v, x) = compass_max(
                |v| f(Complex64::new(v[0], v[1])),
                project,
                &[z.re, z.im],
                step0,
                1e-13,
                max_sweeps,
            );
            (v, Complex64::new(x[0], x[1]))
        })
        .fold((f64::NEG_INFINITY, Complex64::new(0.0, 0.0)), |acc, c| {
            if c.0 > acc.0 {
                c
            } else {
                acc
            }
        })
}

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - inv_phi * (hi - lo);
    let mut b = lo + inv_phi * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    while hi - lo > tol {
        if fa < fb {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = f(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = f(a);
        }
    }
    let t = 0.5 * (lo + hi);
    (f(t), t)
}
