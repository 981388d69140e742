use num_complex::Complex;
use num_traits::{Signed, Zero};

use super::{class_from_caratheodory, lz_parametrize, CaratheodoryCoeffs, ParamTriple};
use crate::error::{Error, Result};
use crate::rational::{int, rat, Field, Rational};

/// Coefficients of the quadratic in `gamma` that bounds `|H_2(2)|` for a fixed
/// interior `p_1`, after dividing out `D = p_1 (4 - p_1^2) eta / 24` with `|eta| = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct H2Reduction {
    pub p1: Rational,
    pub a1: Rational,
    pub b1: Rational,
    pub c1: Rational,
    pub d_mag: Rational,
}

impl H2Reduction {
    pub fn new(p1: Rational) -> Result<Self> {
        if p1 <= Rational::zero() || p1 >= int(2) {
            return Err(Error::OutOfRange {
                what: "p1 (expected 0 < p1 < 2)",
                value: p1.to_string(),
            });
        }
        let p = &p1;
        let p2 = p * p;
        let p3 = &p2 * p;
        let s = int(4) - &p2;
        let a1 = rat(-19, 128) * &p3 / &s;
        let b1 = p / int(16);
        let c1 = -(int(12) + &p2) / (int(8) * p);
        let d_mag = p * &s / int(24);
        Ok(Self {
            p1,
            a1,
            b1,
            c1,
            d_mag,
        })
    }

    /// `A_1 C_1 > 0` and `|C_1| >= 1`, which put the maximum in the `AC >= 0`,
    /// `|B| >= 2(1 - |C|)` row of the `Y` table.
    pub fn case_conditions(&self) -> bool {
        let same_sign = (&self.a1 * &self.c1).is_positive();
        let c_big = self.c1.abs() >= int(1);
        let b_row = self.b1.abs() >= int(2) * (int(1) - self.c1.abs());
        same_sign && c_big && b_row
    }

    /// `|D| (|A_1| + |B_1| + |C_1|)`.
    pub fn product(&self) -> Rational {
        &self.d_mag * (self.a1.abs() + self.b1.abs() + self.c1.abs())
    }
}

/// `max |H_2(2)|` over the parametrization with `p_1` fixed.
pub fn h2_envelope(p1: &Rational) -> Result<Rational> {
    if *p1 < Rational::zero() || *p1 > int(2) {
        return Err(Error::OutOfRange {
            what: "p1 (expected 0 <= p1 <= 2)",
            value: p1.to_string(),
        });
    }
    if p1.is_zero() {
        return Ok(rat(1, 4));
    }
    if *p1 == int(2) {
        return Ok(rat(19, 192));
    }
    let p2 = p1 * p1;
    Ok((int(768) - int(96) * &p2 - int(5) * &p2 * &p2) / int(3072))
}

/// `g_1'(p_1) = -(192 p_1 + 20 p_1^3)/3072`, nonpositive on `[0, 2]`.
pub fn h2_envelope_derivative(p1: &Rational) -> Rational {
    -(int(192) * p1 + int(20) * p1 * p1 * p1) / int(3072)
}

/// `H_2(2) = a_2 a_4 - a_3^2` with `a_n` taken through the Carathéodory route.
pub fn h2_from_lz<T: Field>(p1: T, t: &ParamTriple<T>) -> Result<Complex<T>> {
    let p: CaratheodoryCoeffs<T> = lz_parametrize(p1, t)?;
    let [a2, a3, a4] = class_from_caratheodory(&p);
    Ok(&a2 * &a4 - &a3 * &a3)
}
