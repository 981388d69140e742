//! Coefficient maps and functionals for `S*(phi)` with `phi(z) = (1 + z/2)^2`.
//!
//! Formulas are generic over [`Field`]: exact rationals for identities and
//! certificates, `f64` inside grid oracles.

mod coeffs;
mod h2;
mod janowski;
mod param;
mod phi_scan;
mod ymax;

use num_complex::Complex;

use crate::rational::Field;

pub use coeffs::{
    caratheodory_from_schwarz, class_from_caratheodory, h3_schwarz_poly, hankel2, hankel3,
    schwarz_to_coeffs,
};
pub use h2::{h2_envelope, h2_envelope_derivative, h2_from_lz, H2Reduction};
pub use janowski::{janowski_check, DiskReport, JanowskiParams};
pub(crate) use param::schwarz_parametrize_unchecked;
pub use param::{lz_parametrize, schwarz_parametrize};
pub use phi_scan::{
    boundary_gap, ma_minda_scan, ma_minda_scan_with, phi, PhiScanConfig, PropertyReport,
    MAX_SCAN_RADIUS,
};
pub use ymax::{y_max, YArgs, YBranch, YMax};

pub(crate) fn k<T: Field>(num: i64, den: i64) -> Complex<T> {
    Complex::new(T::ratio(num, den), T::zero())
}

pub(crate) fn real<T: Field>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// Coefficients `c_1..c_4` of a Schwarz function `w(z) = sum c_n z^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SchwarzCoeffs<T> {
    pub c1: Complex<T>,
    pub c2: Complex<T>,
    pub c3: Complex<T>,
    pub c4: Complex<T>,
}

impl<T: Field> SchwarzCoeffs<T> {
    pub fn new(c1: Complex<T>, c2: Complex<T>, c3: Complex<T>, c4: Complex<T>) -> Self {
        Self { c1, c2, c3, c4 }
    }

    pub fn real(c1: T, c2: T, c3: T, c4: T) -> Self {
        Self::new(real(c1), real(c2), real(c3), real(c4))
    }

    /// `c_k -> lambda^k c_k`, the coefficients of `w(lambda z)`.
    pub fn rotate(&self, lambda: &Complex<T>) -> Self {
        let l2 = lambda * lambda;
        let l3 = &l2 * lambda;
        let l4 = &l3 * lambda;
        Self::new(
            &self.c1 * lambda,
            &self.c2 * l2,
            &self.c3 * l3,
            &self.c4 * l4,
        )
    }
}

/// Coefficients `p_1..p_4` of a Carathéodory function `p(z) = 1 + sum p_n z^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct CaratheodoryCoeffs<T> {
    pub p1: Complex<T>,
    pub p2: Complex<T>,
    pub p3: Complex<T>,
    pub p4: Complex<T>,
}

impl<T: Field> CaratheodoryCoeffs<T> {
    pub fn as_array(&self) -> [&Complex<T>; 4] {
        [&self.p1, &self.p2, &self.p3, &self.p4]
    }
}

/// Taylor coefficients `a_2..a_5` of `f(z) = z + sum a_n z^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassCoeffs<T> {
    pub a2: Complex<T>,
    pub a3: Complex<T>,
    pub a4: Complex<T>,
    pub a5: Complex<T>,
}

impl<T: Field> ClassCoeffs<T> {
    pub fn real(a2: T, a3: T, a4: T, a5: T) -> Self {
        Self {
            a2: real(a2),
            a3: real(a3),
            a4: real(a4),
            a5: real(a5),
        }
    }
}

/// Unit-disk parameters `(gamma, eta, rho)` shared by both parametrization
/// lemmas. Each modulus must be at most one.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamTriple<T> {
    pub gamma: Complex<T>,
    pub eta: Complex<T>,
    pub rho: Complex<T>,
}

impl<T: Field> ParamTriple<T> {
    pub fn new(gamma: Complex<T>, eta: Complex<T>, rho: Complex<T>) -> Self {
        Self { gamma, eta, rho }
    }

    pub fn zero() -> Self {
        Self::new(k(0, 1), k(0, 1), k(0, 1))
    }

    pub(crate) fn validate(&self) -> crate::Result<()> {
        for (name, z) in [
            ("|gamma|", &self.gamma),
            ("|eta|", &self.eta),
            ("|rho|", &self.rho),
        ] {
            if z.norm_sqr() > T::one() + T::slack() {
                return Err(crate::Error::OutOfRange {
                    what: name,
                    value: format!("{:?}", z),
                });
            }
        }
        Ok(())
    }
}
