//! The third Hankel determinant bound `|H_3(1)| <= 1/9`.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use rayon::prelude::*;

use super::report::{OracleStats, SubCheck, VerificationReport};
use crate::bernstein::{bound_above, certify_positive, validate, BiPoly, CornerRule, Rect};
use crate::error::{Error, Result};
use crate::gft::{
    h3_schwarz_poly, hankel3, schwarz_parametrize_unchecked, schwarz_to_coeffs, ParamTriple,
    SchwarzCoeffs,
};
use crate::oracle::PolarGrid;
use crate::rational::{int, rat, Field};

/// `9216 |H_3(1)|` never exceeds this on the class.
pub const H3_SCALED_BOUND: i64 = 1024;
pub const H3_SCALE: i64 = 9216;

/// Printed expansion of `F = 1024 - G_1`, indexed `[power of x][power of p]`.
const PRINTED_F: [[i64; 7]; 5] = [
    [0, 0, 2048, -464, -1024, 464, -61],
    [0, -1088, -864, 448, 620, 640, 244],
    [896, -256, -2504, 976, 1856, -720, -248],
    [-288, 1088, 640, -448, -416, -640, 64],
    [128, 256, -384, -512, 384, 256, -128],
];

/// Printed expansion of `G_2`, indexed `[power of p][power of x]`.
const PRINTED_G2: [[i64; 5]; 7] = [
    [0, 1152, 0, -864, 0],
    [0, 1088, 256, -1088, -256],
    [864, -2304, -152, 2528, 128],
    [464, -448, -976, 448, 512],
    [-864, 1396, -96, -1600, -256],
    [-464, -640, 720, 640, -256],
    [61, -244, 248, -64, 128],
];

/// The four groups of the majorant `H(p, x, y)` of `9216 |H_3(1)|`, where
/// `p = c_1`, `x = |gamma|`, `y = |eta|`:
/// `H = base + y_lin y + y_quad y^2 + rest (1 - y^2)`.
pub struct HGroups<R> {
    pub base: R,
    pub y_lin: R,
    pub y_quad: R,
    pub rest: R,
}

/// Evaluates the groups in any ring; `k` embeds integers.
pub fn h_groups<R>(p: &R, x: &R, k: impl Fn(i64) -> R) -> HGroups<R>
where
    R: Clone + Add<Output = R> + Sub<Output = R> + Mul<Output = R>,
{
    let p2 = p.clone() * p.clone();
    let p4 = p2.clone() * p2.clone();
    let p6 = p4.clone() * p2.clone();
    let x2 = x.clone() * x.clone();
    let x3 = x2.clone() * x.clone();
    let x4 = x2.clone() * x2.clone();
    let s = k(1) - p2.clone();
    let t = k(1) - x2.clone();

    let base = k(61) * p6.clone()
        + k(244) * p4.clone() * s.clone() * x.clone()
        + k(8) * p2.clone() * (k(89) - k(120) * p2.clone() + k(31) * p4.clone()) * x2.clone()
        - k(32) * (k(-9) - k(7) * p2.clone() + k(14) * p4 + k(2) * p6) * x3
        + k(128) * p2.clone() * s.clone() * s.clone() * x4;
    let y_lin = k(16)
        * t.clone()
        * p.clone()
        * s.clone()
        * (k(29) * p2.clone()
            + k(16) * x2.clone() * s.clone()
            + x.clone() * (k(68) + k(40) * p2.clone()));
    let y_quad = k(32)
        * t.clone()
        * s.clone()
        * (k(32) * t.clone() * s.clone()
            + k(9) * (k(3) * p2.clone() + k(4) * x.clone() * s.clone()) * x.clone());
    let rest = k(288) * t * s.clone() * (k(3) * p2 + k(4) * x.clone() * s);
    HGroups {
        base,
        y_lin,
        y_quad,
        rest,
    }
}

/// `H(p, x, y)`.
pub fn h_eval<T: Field>(p: T, x: T, y: T) -> T {
    let g = h_groups(&p, &x, T::from_int);
    let y2 = y.clone() * y.clone();
    g.base + g.y_lin * y + g.y_quad * y2.clone() + g.rest * (T::one() - y2)
}

/// `H_1(p, x, y)`: `H` with the linear-in-`y` group taken at `y = 1`.
pub fn h1_eval<T: Field>(p: T, x: T, y: T) -> T {
    let g = h_groups(&p, &x, T::from_int);
    let y2 = y.clone() * y;
    g.base + g.y_lin + g.y_quad * y2.clone() + g.rest * (T::one() - y2)
}

/// Coefficient of `y` in `H`.
pub fn h_y_coefficient<T: Field>(p: T, x: T) -> T {
    h_groups(&p, &x, T::from_int).y_lin
}

#[derive(Clone, Debug, PartialEq)]
pub struct H3Reduction {
    /// `H_1(p, x, 1)`.
    pub g1: BiPoly,
    /// `H_1(p, x, 0)`.
    pub g2: BiPoly,
    /// `1024 - G_1`.
    pub f: BiPoly,
}

impl H3Reduction {
    pub fn h<T: Field>(&self, p: T, x: T, y: T) -> T {
        h_eval(p, x, y)
    }

    pub fn h1<T: Field>(&self, p: T, x: T, y: T) -> T {
        h1_eval(p, x, y)
    }

    pub fn printed_f() -> BiPoly {
        let terms = PRINTED_F
            .iter()
            .enumerate()
            .flat_map(|(j, row)| row.iter().enumerate().map(move |(i, &c)| (i, j, int(c))));
        BiPoly::from_terms(6, 4, terms).expect("fits (6, 4)")
    }

    pub fn printed_g2() -> BiPoly {
        let terms = PRINTED_G2
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &c)| (i, j, int(c))));
        BiPoly::from_terms(6, 4, terms).expect("fits (6, 4)")
    }
}

fn compare(what: &'static str, built: &BiPoly, printed: &BiPoly) -> Result<()> {
    let diff = built - printed;
    let bad: Vec<String> = diff
        .terms()
        .map(|(i, j, c)| format!("p^{i} x^{j} off by {c}"))
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::Transcription {
            what,
            detail: bad.join(", "),
        })
    }
}

/// Expands `G_1`, `G_2` and `F` from the structure of `H` and checks them
/// against the printed expansions.
pub fn build_h3_reduction() -> Result<H3Reduction> {
    let g = h_groups(&BiPoly::p(), &BiPoly::x(), BiPoly::from);
    let g1 = (&(&g.base + &g.y_lin) + &g.y_quad).with_bidegree(6, 4)?;
    let g2 = (&(&g.base + &g.y_lin) + &g.rest).with_bidegree(6, 4)?;
    let f = (&BiPoly::from(H3_SCALED_BOUND) - &g1).with_bidegree(6, 4)?;
    compare("F = 1024 - G1", &f, &H3Reduction::printed_f())?;
    compare("G2", &g2, &H3Reduction::printed_g2())?;
    Ok(H3Reduction { g1, g2, f })
}

/// Sampling density for the brute-force `|9216 H_3(1)|` scan.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct H3OracleConfig {
    pub c1_points: usize,
    pub moduli: usize,
    pub phases: usize,
}

impl H3OracleConfig {
    pub fn from_grid(grid: usize) -> Self {
        Self {
            c1_points: grid + 1,
            moduli: (grid / 4 + 1).max(2),
            phases: grid.max(4),
        }
    }

    pub fn samples(&self) -> usize {
        let disk = 1 + (self.moduli - 1) * self.phases;
        self.c1_points * disk * disk * self.phases
    }
}

/// Max of `|9216 H_3(1)|` over `c_1` on `[0, 1]`, `gamma`, `eta` on a polar
/// grid of the closed disk and `rho` on the unit circle.
pub fn h3_oracle(cfg: H3OracleConfig) -> OracleStats {
    let disk = PolarGrid::closed(cfg.moduli, cfg.phases).points();
    let circle: Vec<Complex64> = (0..cfg.phases)
        .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / cfg.phases as f64))
        .collect();
    let n = cfg.c1_points.max(2);
    let observed = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| disk.iter().map(move |g| (i, *g)))
        .map(|(i, gamma)| {
            let c1 = i as f64 / (n - 1) as f64;
            let mut best = 0.0f64;
            for eta in &disk {
                for rho in &circle {
                    let t = ParamTriple::new(gamma, *eta, *rho);
                    let c = schwarz_parametrize_unchecked(c1, &t);
                    best = best.max(h3_schwarz_poly(&c).norm());
                }
            }
            best
        })
        .reduce(|| 0.0, f64::max);
    let samples = n * disk.len() * disk.len() * circle.len();
    OracleStats::new(samples, observed, H3_SCALED_BOUND as f64 * (1.0 + 1e-9))
}

/// Certifies `1024 - G_1 >= 0` on `[0, 1]^2` (corner rule at the origin),
/// bounds `G_2` by its largest Bernstein coefficient, checks the sharpness
/// witness `w = z^3`, and cross-checks with a grid scan.
pub fn verify_h3(max_depth: usize, grid: usize) -> Result<VerificationReport> {
    verify_h3_with(max_depth, H3OracleConfig::from_grid(grid))
}

pub fn verify_h3_with(max_depth: usize, oracle: H3OracleConfig) -> Result<VerificationReport> {
    if max_depth < 3 {
        return Err(Error::OutOfRange {
            what: "max depth (expected >= 3)",
            value: max_depth.to_string(),
        });
    }
    let red = build_h3_reduction()?;
    let mut checks = vec![SubCheck::new(
        "expansions",
        true,
        "F and G2 built from H match the printed expansions",
    )];

    let unit = Rect::unit();
    let rule = CornerRule::origin(&red.f)?;
    let (cert, stats) = rayon::join(
        || certify_positive(&red.f, &unit, max_depth, Some(&rule)),
        || h3_oracle(oracle),
    );
    let summary = validate(&cert, &red.f)?;
    checks.push(SubCheck::new(
        "G1 <= 1024",
        summary.success(),
        format!(
            "{} positive leaves, {} corner leaves, {} failed; re-validated",
            summary.coeff_positive, summary.corner_certified, summary.failed
        ),
    ));

    let g2_max = bound_above(&red.g2, &unit, 0);
    let cap = int(H3_SCALED_BOUND);
    checks.push(SubCheck::new(
        "G2 <= 1024",
        g2_max <= cap,
        format!("largest Bernstein coefficient {g2_max}"),
    ));

    let scaled = if g2_max > cap { g2_max } else { cap };
    let bound = scaled / int(H3_SCALE);

    let w = SchwarzCoeffs::real(int(0), int(0), int(1), int(0));
    let exact = hankel3(&schwarz_to_coeffs(&w));
    checks.push(SubCheck::new(
        "sharpness w = z^3",
        exact.im == int(0) && exact.re == -rat(1, 9) && h3_schwarz_poly(&w).re == int(-1024),
        format!("H3(1) = {}", exact.re),
    ));

    let mut report =
        VerificationReport::assemble("|H3(1)| <= 1/9", Some(bound), checks, Some(stats));
    report.certificate_summary = Some(summary);
    report.certificate = Some(cert);
    Ok(report)
}
