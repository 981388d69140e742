use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::patch::Rect;
use super::poly::BiPoly;
use crate::error::{Error, Result};
use crate::rational::{pow, serde_frac, Rational};

/// `F = Q + R` around a zero at a box corner, in reflected coordinates where the
/// corner is the origin and the box is `[0, w_p] x [0, w_x]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CornerSplit {
    /// Coefficient of `p^2` in `Q`.
    pub quad_pp: Rational,
    /// Coefficient of `p x` in `Q`.
    pub quad_px: Rational,
    /// Coefficient of `x^2` in `Q`.
    pub quad_xx: Rational,
    /// Monomials of total degree at least three.
    pub tail: Vec<(usize, usize, Rational)>,
    /// Larger side of the box.
    pub half_width: Rational,
}

impl CornerSplit {
    /// Direct construction for a polynomial already centered at the origin.
    pub fn new(
        quad_pp: Rational,
        quad_px: Rational,
        quad_xx: Rational,
        tail: Vec<(usize, usize, Rational)>,
        half_width: Rational,
    ) -> Result<Self> {
        if let Some((i, j, _)) = tail.iter().find(|(i, j, _)| i + j < 3) {
            return Err(Error::NotACornerZero(format!(
                "tail monomial p^{i} x^{j} has total degree below 3"
            )));
        }
        if !half_width.is_positive() {
            return Err(Error::OutOfRange {
                what: "half width",
                value: half_width.to_string(),
            });
        }
        Ok(Self {
            quad_pp,
            quad_px,
            quad_xx,
            tail,
            half_width,
        })
    }

    /// Moves `corner` of `rect` to the origin, reflecting axes so the box lies
    /// in the first quadrant, and separates the quadratic part.
    pub fn at_corner(f: &BiPoly, rect: &Rect, corner: (&Rational, &Rational)) -> Result<Self> {
        let (p0, x0) = corner;
        if !rect.is_corner(p0, x0) {
            return Err(Error::NotACorner {
                p: p0.to_string(),
                x: x0.to_string(),
                rect: rect.to_string(),
            });
        }
        let sp = if p0 == &rect.p_lo {
            Rational::one()
        } else {
            -Rational::one()
        };
        let sx = if x0 == &rect.x_lo {
            Rational::one()
        } else {
            -Rational::one()
        };
        let g = f.remap(p0, &sp, x0, &sx);
        for (i, j) in [(0, 0), (1, 0), (0, 1)] {
            let c = g.coeff(i, j);
            if !c.is_zero() {
                return Err(Error::NotACornerZero(format!(
                    "coefficient of p^{i} x^{j} at ({p0}, {x0}) is {c}"
                )));
            }
        }
        let tail = g
            .terms()
            .filter(|(i, j, _)| i + j >= 3)
            .map(|(i, j, c)| (i, j, c.clone()))
            .collect();
        let h = rect.p_width().max(rect.x_width());
        Self::new(g.coeff(2, 0), g.coeff(1, 1), g.coeff(0, 2), tail, h)
    }

    /// `Q + R` as a polynomial in the reflected coordinates.
    pub fn to_poly(&self) -> BiPoly {
        let mut terms = vec![
            (2, 0, self.quad_pp.clone()),
            (1, 1, self.quad_px.clone()),
            (0, 2, self.quad_xx.clone()),
        ];
        terms.extend(self.tail.iter().cloned());
        let m = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let n = terms.iter().map(|t| t.1).max().unwrap_or(0);
        BiPoly::from_terms(m, n, terms).expect("degrees fit")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CornerEstimate {
    pub success: bool,
    /// `min(alpha - |beta|/2, delta - |beta|/2)`.
    #[serde(with = "serde_frac")]
    pub lambda: Rational,
    /// `sum |c_ij| h^(i+j-2)` over the tail.
    #[serde(with = "serde_frac")]
    pub tail_sum: Rational,
    #[serde(with = "serde_frac")]
    pub margin: Rational,
}

/// Lower bound `F >= margin (p^2 + x^2)` on `[0, h]^2`, using
/// `2|px| <= p^2 + x^2` and `p^i x^j <= h^(i+j-2) (p^2 + x^2)`.
pub fn corner_estimate(split: &CornerSplit) -> CornerEstimate {
    let half_beta = split.quad_px.abs() / Rational::from_integer(2.into());
    let lambda = (&split.quad_pp - &half_beta).min(&split.quad_xx - &half_beta);
    let tail_sum = split.tail.iter().fold(Rational::zero(), |acc, (i, j, c)| {
        acc + c.abs() * pow(&split.half_width, i + j - 2)
    });
    let margin = &lambda - &tail_sum;
    CornerEstimate {
        success: lambda.is_positive() && margin.is_positive(),
        lambda,
        tail_sum,
        margin,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn pure_quadratic() {
        let s = CornerSplit::new(int(1), int(0), int(1), vec![], rat(3, 2)).unwrap();
        let e = corner_estimate(&s);
        assert!(e.success);
        assert_eq!((e.lambda, e.tail_sum, e.margin), (int(1), int(0), int(1)));
    }

    #[test]
    fn tail_too_heavy() {
        let s = CornerSplit::new(int(1), int(0), int(1), vec![(3, 0, int(-10))], int(1)).unwrap();
        let e = corner_estimate(&s);
        assert!(!e.success);
        assert_eq!(e.tail_sum, int(10));
    }

    #[test]
    fn reflection_to_far_corner() {
        // (1 - p)^2 + (2 - x)^2 vanishes at the (hi, hi) corner of [0,1] x [1,2]
        let p = BiPoly::p();
        let x = BiPoly::x();
        let f = (BiPoly::from(1) - p).pow(2) + (BiPoly::from(2) - x).pow(2);
        let r = Rect::new(int(0), int(1), int(1), int(2)).unwrap();
        let s = CornerSplit::at_corner(&f, &r, (&int(1), &int(2))).unwrap();
        assert_eq!(
            (s.quad_pp.clone(), s.quad_px.clone(), s.quad_xx.clone()),
            (int(1), int(0), int(1))
        );
        assert!(s.tail.is_empty());
        assert!(corner_estimate(&s).success);
    }

    #[test]
    fn rejects_non_corner_and_non_zero() {
        let f = BiPoly::p().pow(2) + BiPoly::x().pow(2);
        let r = Rect::unit();
        assert!(matches!(
            CornerSplit::at_corner(&f, &r, (&rat(1, 2), &int(0))),
            Err(Error::NotACorner { .. })
        ));
        assert!(matches!(
            CornerSplit::at_corner(&f, &r, (&int(1), &int(0))),
            Err(Error::NotACornerZero(_))
        ));
        assert!(CornerSplit::new(int(1), int(0), int(1), vec![(1, 1, int(1))], int(1)).is_err());
    }
}
