use super::{k, real, CaratheodoryCoeffs, ParamTriple, SchwarzCoeffs};
use crate::error::{Error, Result};
use crate::rational::Field;

fn check_range<T: Field>(what: &'static str, v: &T, hi: i64) -> Result<()> {
    if *v < T::zero() - T::slack() || *v > T::from_int(hi) + T::slack() {
        return Err(Error::OutOfRange {
            what,
            value: format!("{v:?}"),
        });
    }
    Ok(())
}

/// Standard parametrization of `p_2, p_3, p_4` for real `p_1 ∈ [0, 2]`.
pub fn lz_parametrize<T: Field>(p1: T, t: &ParamTriple<T>) -> Result<CaratheodoryCoeffs<T>> {
    check_range("p1 (expected 0 <= p1 <= 2)", &p1, 2)?;
    t.validate()?;
    let (g, e, r) = (&t.gamma, &t.eta, &t.rho);
    let p = real(p1);
    let p2_ = &p * &p;
    let p3_ = &p2_ * &p;
    let p4_ = &p3_ * &p;
    let s = k::<T>(4, 1) - &p2_;
    let one = k::<T>(1, 1);
    let g_bar = g.conj();
    let free_g = real(T::one() - g.norm_sqr());
    let free_e = real(T::one() - e.norm_sqr());

    let p2 = (&p2_ + g * &s) * k(1, 2);
    let p3 = (&p3_ + k::<T>(2, 1) * &s * &p * g - &s * &p * g * g
        + k::<T>(2, 1) * &s * &free_g * e)
        * k(1, 4);
    let p4 = (&p4_
        + &s * g * (&p2_ * (g * g - k::<T>(3, 1) * g + k::<T>(3, 1)) + k::<T>(4, 1) * g)
        - k::<T>(4, 1) * &s * &free_g * (&p * (g - &one) * e + &g_bar * e * e - &free_e * r))
        * k(1, 8);
    Ok(CaratheodoryCoeffs { p1: p, p2, p3, p4 })
}

/// Schwarz-coefficient form of `c_2, c_3, c_4` for real `c_1 ∈ [0, 1]`.
pub fn schwarz_parametrize<T: Field>(c1: T, t: &ParamTriple<T>) -> Result<SchwarzCoeffs<T>> {
    check_range("c1 (expected 0 <= c1 <= 1)", &c1, 1)?;
    t.validate()?;
    Ok(schwarz_parametrize_unchecked(c1, t))
}

/// Same as [`schwarz_parametrize`] without range validation, for hot oracle loops
/// whose samples are feasible by construction.
pub(crate) fn schwarz_parametrize_unchecked<T: Field>(
    c1: T,
    t: &ParamTriple<T>,
) -> SchwarzCoeffs<T> {
    let (g, e, r) = (&t.gamma, &t.eta, &t.rho);
    let c = real(c1);
    let c_2 = &c * &c;
    let s = k::<T>(1, 1) - &c_2;
    let free_g = real(T::one() - g.norm_sqr());
    let free_e = real(T::one() - e.norm_sqr());
    let g2 = g * g;

    let c2 = &s * g;
    let c3 = &s * (e * &free_g - &c * &g2);
    let c4 = &s
        * (&c_2 * &g2 * g - &free_g * (k::<T>(2, 1) * &c * g * e + g.conj() * e * e)
            + &free_g * &free_e * r);
    SchwarzCoeffs::new(c, c2, c3, c4)
}
