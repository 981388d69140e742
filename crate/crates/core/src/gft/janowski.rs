use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{rat, serde_frac, Rational};

/// Parameters of the Möbius map `p(z) = (1 + Az)/(1 + Bz)`, `-1 < B < A <= 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct JanowskiParams {
    a: Rational,
    b: Rational,
}

impl JanowskiParams {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        let one = Rational::one();
        if !(-&one < b && b < a && a <= one) {
            return Err(Error::ParameterOrder {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Center `(1 - AB)/(1 - B^2)` of the image disk.
    pub fn center(&self) -> Rational {
        (Rational::one() - &self.a * &self.b) / (Rational::one() - &self.b * &self.b)
    }

    /// Radius `(A - B)/(1 - B^2)` of the image disk.
    pub fn radius(&self) -> Rational {
        (&self.a - &self.b) / (Rational::one() - &self.b * &self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiskReport {
    #[serde(with = "serde_frac")]
    pub center: Rational,
    #[serde(with = "serde_frac")]
    pub radius: Rational,
    /// `a - r = (1 - A)/(1 - B)`.
    #[serde(with = "serde_frac")]
    pub left_end: Rational,
    /// `a + r = (1 + A)/(1 + B)`.
    #[serde(with = "serde_frac")]
    pub right_end: Rational,
    /// `|a - 5/4| + r`; the disk sits inside `B(5/4, 1)` iff this is `<= 1`.
    #[serde(with = "serde_frac")]
    pub containment: Rational,
    pub endpoint_test: bool,
    pub disk_test: bool,
}

impl DiskReport {
    pub fn subordinate(&self) -> bool {
        self.endpoint_test
    }
}

/// Sufficient condition for `(1 + Az)/(1 + Bz) ≺ (1 + z/2)^2`: the image disk
/// lies in `[1/4, 9/4]` along the real axis, equivalently inside `B(5/4, 1)`.
/// Both tests are evaluated exactly and must agree.
pub fn janowski_check(j: &JanowskiParams) -> DiskReport {
    let center = j.center();
    let radius = j.radius();
    let left_end = &center - &radius;
    let right_end = &center + &radius;
    let endpoint_test = left_end >= rat(1, 4) && right_end <= rat(9, 4);
    let containment = (&center - rat(5, 4)).abs() + &radius;
    let disk_test = containment <= Rational::one();
    assert_eq!(
        endpoint_test, disk_test,
        "endpoint and disk containment tests disagree for A={}, B={}",
        j.a, j.b
    );
    DiskReport {
        center,
        radius,
        left_end,
        right_end,
        containment,
        endpoint_test,
        disk_test,
    }
}
