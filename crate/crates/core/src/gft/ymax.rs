//! Closed form of `Y(A, B, C) = max_{|z| <= 1} (|A + Bz + Cz^2| + 1 - |z|^2)`
//! for real `A, B, C`.

use std::fmt;

/// Branch comparisons closer than this are flagged as near a case boundary.
const BOUNDARY_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct YArgs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl YArgs {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        Self { a, b, c }
    }

    /// The function being maximized, for oracles.
    pub fn objective(&self, z: num_complex::Complex64) -> f64 {
        (self.a + self.b * z + self.c * z * z).norm() + 1.0 - z.norm_sqr()
    }
}

/// Which row of the case table produced the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YBranch {
    /// `AC >= 0`, `|B| >= 2(1 - |C|)`: `|A| + |B| + |C|`.
    SameSignModuli,
    /// `AC >= 0`, `|B| < 2(1 - |C|)`: `1 + |A| + B^2/(4(1 - |C|))`.
    SameSignInterior,
    /// `AC < 0`, first row: `1 - |A| + B^2/(4(1 - |C|))`.
    MixedSignInterior,
    /// `AC < 0`, second row: `1 + |A| + B^2/(4(1 + |C|))`.
    MixedSignAxis,
    /// `R(A,B,C)` first row: `|A| + |B| - |C|`.
    RDominantB,
    /// `R(A,B,C)` second row: `-|A| + |B| + |C|`.
    RDominantC,
    /// `R(A,B,C)` last row: `(|A| + |C|) sqrt(1 - B^2/(4AC))`.
    RSqrt,
}

impl fmt::Display for YBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            YBranch::SameSignModuli => "(i) |B| >= 2(1-|C|)",
            YBranch::SameSignInterior => "(i) |B| < 2(1-|C|)",
            YBranch::MixedSignInterior => "(ii) first",
            YBranch::MixedSignAxis => "(ii) second",
            YBranch::RDominantB => "(ii) R first",
            YBranch::RDominantC => "(ii) R second",
            YBranch::RSqrt => "(ii) R otherwise",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct YMax {
    pub value: f64,
    pub branch: YBranch,
    /// Some branch comparison evaluated within `1e-12` of equality.
    pub near_boundary: bool,
}

/// Evaluates the case table; conditions are tested in printed order and the
/// first match wins.
///
/// The mixed-sign threshold is `-4AC(C^{-2} - 1)` and the first `R` row is
/// `|A| + |B| - |C|`; both forms agree with a direct maximization over the
/// disk.
pub fn y_max(y: YArgs) -> YMax {
    let YArgs { a, b, c } = y;
    let (aa, ab, ac) = (a.abs(), b.abs(), c.abs());
    let b2 = b * b;
    let mut near = false;
    // `lhs <= rhs` style test that records closeness
    let mut le = |lhs: f64, rhs: f64, strict: bool| {
        let scale = 1.0 + lhs.abs().max(rhs.abs());
        if (lhs - rhs).abs() <= BOUNDARY_EPS * scale {
            near = true;
        }
        if strict {
            lhs < rhs
        } else {
            lhs <= rhs
        }
    };

    let (value, branch) = if le(0.0, a * c, false) {
        if le(2.0 * (1.0 - ac), ab, false) {
            (aa + ab + ac, YBranch::SameSignModuli)
        } else {
            (
                1.0 + aa + b2 / (4.0 * (1.0 - ac)),
                YBranch::SameSignInterior,
            )
        }
    } else {
        let threshold = -4.0 * a * c * (1.0 / (c * c) - 1.0);
        if le(threshold, b2, false) && le(ab, 2.0 * (1.0 - ac), true) {
            (
                1.0 - aa + b2 / (4.0 * (1.0 - ac)),
                YBranch::MixedSignInterior,
            )
        } else if le(b2, (4.0 * (1.0 + ac).powi(2)).min(threshold), true) {
            (1.0 + aa + b2 / (4.0 * (1.0 + ac)), YBranch::MixedSignAxis)
        } else if le(ac * (ab + 4.0 * aa), (a * b).abs(), false) {
            (aa + ab - ac, YBranch::RDominantB)
        } else if le((a * b).abs(), ac * (ab - 4.0 * aa), false) {
            (-aa + ab + ac, YBranch::RDominantC)
        } else {
            (
                (aa + ac) * (1.0 - b2 / (4.0 * a * c)).sqrt(),
                YBranch::RSqrt,
            )
        }
    };
    YMax {
        value,
        branch,
        near_boundary: near,
    }
}
