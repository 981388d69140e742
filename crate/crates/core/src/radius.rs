//! Radius of convexity of order `gamma`: the least root of `g(r) = gamma` with
//! `g(r) = 1 - r - r^2/4 - r(1 + r/2)/((1 - r/2)^2 (1 - r^2))`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{from_f64, int, rat, serde_frac, to_f64, Rational};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;

fn check_unit(r: &Rational, open_left: bool) -> Result<()> {
    let ok = if open_left {
        r.is_positive()
    } else {
        !r.is_negative()
    };
    if !ok || *r >= int(1) {
        return Err(Error::OutOfRange {
            what: if open_left {
                "r (expected 0 < r < 1)"
            } else {
                "r (expected 0 <= r < 1)"
            },
            value: r.to_string(),
        });
    }
    Ok(())
}

pub fn radius_g(r: &Rational) -> Result<Rational> {
    check_unit(r, false)?;
    let one = Rational::one();
    let half = rat(1, 2);
    let lead = &one - r - r * r / int(4);
    let num = r * (&one + r * &half);
    let d = &one - r * &half;
    let den = &d * &d * (&one - r * r);
    Ok(lead - num / den)
}

pub fn radius_g_f64(r: f64) -> f64 {
    let d = 1.0 - r / 2.0;
    (1.0 - r - r * r / 4.0) - r * (1.0 + r / 2.0) / (d * d * (1.0 - r * r))
}

/// `-r^4 - 3r^3 + 2r^2 + 3r + 2`, the numerator of `h'(r)` up to the factor 4.
pub fn h_prime_numerator(r: &Rational) -> Rational {
    let r2 = r * r;
    -(&r2 * &r2) - int(3) * &r2 * r + int(2) * &r2 + int(3) * r + int(2)
}

/// `h'(r) = 4(-r^4 - 3r^3 + 2r^2 + 3r + 2)/((2 - r)^3 (1 - r)^2 (1 + r)^2)`;
/// the denominator is positive on `(0, 1)`, so the sign is the numerator's.
pub fn h_prime_positive(r: &Rational) -> Result<bool> {
    check_unit(r, true)?;
    Ok(h_prime_numerator(r).is_positive())
}

/// `(1 - r^2)(r^2 + 3r + 2) + 3r^2`, the form that makes positivity evident.
pub fn h_prime_numerator_factored(r: &Rational) -> Rational {
    let r2 = r * r;
    (int(1) - &r2) * (&r2 + int(3) * r + int(2)) + int(3) * &r2
}

#[derive(Clone, Debug, PartialEq)]
pub struct RadiusProblem {
    gamma: Rational,
    tolerance: f64,
}

impl RadiusProblem {
    pub fn new(gamma: Rational, tolerance: f64) -> Result<Self> {
        if gamma.is_negative() || gamma >= int(1) {
            return Err(Error::OutOfRange {
                what: "gamma (expected 0 <= gamma < 1)",
                value: gamma.to_string(),
            });
        }
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Err(Error::OutOfRange {
                what: "tolerance (expected > 0)",
                value: tolerance.to_string(),
            });
        }
        Ok(Self { gamma, tolerance })
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadiusSolution {
    pub root: f64,
    /// `g(lo) > gamma`.
    #[serde(with = "serde_frac")]
    pub lo: Rational,
    /// `g(hi) < gamma`.
    #[serde(with = "serde_frac")]
    pub hi: Rational,
    pub width: f64,
    /// `g(root) - gamma` in binary64.
    pub residual: f64,
    pub iterations: usize,
}

/// Bisection with exact sign tests at dyadic midpoints.
///
/// The upper end starts at `1 - 2^-20` and is halved while the sign change
/// persists; bisection then continues until the bracket is no wider than the
/// tolerance and the midpoint residual is within it.
pub fn solve_radius(prob: &RadiusProblem) -> Result<RadiusSolution> {
    let gamma = &prob.gamma;
    let not_found = || Error::BracketNotFound(gamma.to_string());
    let above = |r: &Rational| -> Result<bool> { Ok(radius_g(r)? > *gamma) };

    let mut lo = Rational::zero();
    let mut hi = int(1) - rat(1, 1 << 20);
    if !above(&lo)? || above(&hi)? || radius_g(&hi)? == *gamma {
        return Err(not_found());
    }
    let half = rat(1, 2);
    loop {
        let cand = &hi * &half;
        if cand.is_zero() || above(&cand)? || radius_g(&cand)? == *gamma {
            lo = cand.max(lo);
            break;
        }
        hi = cand;
    }

    let tol = from_f64(prob.tolerance);
    let mut iterations = 0;
    loop {
        let mid = (&lo + &hi) * &half;
        let g_mid = radius_g(&mid)?;
        let residual = to_f64(&(&g_mid - gamma));
        if &hi - &lo <= tol && residual.abs() <= prob.tolerance {
            return Ok(RadiusSolution {
                root: to_f64(&mid),
                width: to_f64(&(&hi - &lo)),
                lo,
                hi,
                residual,
                iterations,
            });
        }
        if g_mid == *gamma {
            let root = to_f64(&mid);
            return Ok(RadiusSolution {
                root,
                width: 0.0,
                lo: mid.clone(),
                hi: mid,
                residual: 0.0,
                iterations,
            });
        }
        if g_mid > *gamma {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
        if iterations > 4096 {
            return Err(not_found());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(radius_g(&int(0)).unwrap(), int(1));
        assert_eq!(radius_g(&rat(1, 2)).unwrap(), rat(-451, 432));
        assert!(radius_g(&int(1)).is_err());
        assert!(radius_g(&rat(-1, 2)).is_err());
    }

    #[test]
    fn derivative_sign() {
        assert!(h_prime_positive(&rat(1, 2)).unwrap());
        assert!(h_prime_positive(&rat(1, 8)).unwrap());
        assert!(h_prime_positive(&int(0)).is_err());
        let r = rat(3, 11);
        assert_eq!(h_prime_numerator(&r), h_prime_numerator_factored(&r));
    }

    #[test]
    fn gamma_zero() {
        let s = solve_radius(&RadiusProblem::new(int(0), DEFAULT_TOLERANCE).unwrap()).unwrap();
        assert!(s.root > 0.33 && s.root < 0.35);
        assert!(s.width <= 1e-12);
        assert!(radius_g(&s.lo).unwrap().is_positive());
        assert!(radius_g(&s.hi).unwrap().is_negative());
    }

    #[test]
    fn gamma_range() {
        assert!(RadiusProblem::new(int(1), 1e-9).is_err());
        assert!(RadiusProblem::new(rat(-1, 3), 1e-9).is_err());
        assert!(RadiusProblem::new(int(0), 0.0).is_err());
    }
}
