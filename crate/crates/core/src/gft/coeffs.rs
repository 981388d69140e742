use num_complex::Complex;

use super::{k, CaratheodoryCoeffs, ClassCoeffs, SchwarzCoeffs};
use crate::rational::Field;

type C<T> = Complex<T>;

/// Taylor coefficients of `f` from the Schwarz coefficients of `w` in
/// `z f'/f = phi(w)`.
pub fn schwarz_to_coeffs<T: Field>(c: &SchwarzCoeffs<T>) -> ClassCoeffs<T> {
    let (c1, c2, c3, c4) = (&c.c1, &c.c2, &c.c3, &c.c4);
    let c1_2 = c1 * c1;
    let c1_3 = &c1_2 * c1;
    let c1_4 = &c1_3 * c1;

    let a2 = c1.clone();
    let a3 = (k::<T>(5, 1) * &c1_2 + k::<T>(4, 1) * c2) * k(1, 8);
    let a4 = (k::<T>(7, 1) * &c1_3 + k::<T>(16, 1) * c1 * c2 + k::<T>(8, 1) * c3) * k(1, 24);
    let a5 = (k::<T>(43, 1) * &c1_4
        + k::<T>(184, 1) * &c1_2 * c2
        + k::<T>(72, 1) * c2 * c2
        + k::<T>(176, 1) * c1 * c3
        + k::<T>(96, 1) * c4)
        * k(1, 384);
    ClassCoeffs { a2, a3, a4, a5 }
}

/// `p = (1 + w)/(1 - w)` coefficient relations.
pub fn caratheodory_from_schwarz<T: Field>(w: &SchwarzCoeffs<T>) -> CaratheodoryCoeffs<T> {
    let (w1, w2, w3, w4) = (&w.c1, &w.c2, &w.c3, &w.c4);
    let two = k::<T>(2, 1);
    let w1_2 = w1 * w1;
    let w1_3 = &w1_2 * w1;
    let p1 = &two * w1;
    let p2 = &two * (w2 + &w1_2);
    let p3 = &two * (w3 + k::<T>(2, 1) * w1 * w2 + &w1_3);
    let p4 =
        &two * (w4 + k::<T>(2, 1) * w1 * w3 + w2 * w2 + k::<T>(3, 1) * &w1_2 * w2 + &w1_3 * w1);
    CaratheodoryCoeffs { p1, p2, p3, p4 }
}

/// `(a_2, a_3, a_4)` through the Carathéodory route:
/// `a_2 = p_1/2`, `a_3 = (p_1^2 + 8 p_2)/32`, `a_4 = (32 p_3 - p_1^3)/192`.
pub fn class_from_caratheodory<T: Field>(p: &CaratheodoryCoeffs<T>) -> [C<T>; 3] {
    let p1_2 = &p.p1 * &p.p1;
    let a2 = &p.p1 * k(1, 2);
    let a3 = (&p1_2 + k::<T>(8, 1) * &p.p2) * k(1, 32);
    let a4 = (k::<T>(32, 1) * &p.p3 - &p1_2 * &p.p1) * k(1, 192);
    [a2, a3, a4]
}

/// `H_2(2) = a_2 a_4 - a_3^2`.
pub fn hankel2<T: Field>(a: &ClassCoeffs<T>) -> C<T> {
    &a.a2 * &a.a4 - &a.a3 * &a.a3
}

/// `H_3(1)` for `a_1 = 1`.
pub fn hankel3<T: Field>(a: &ClassCoeffs<T>) -> C<T> {
    let (a2, a3, a4, a5) = (&a.a2, &a.a3, &a.a4, &a.a5);
    a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2)
}

/// `9216 H_3(1)` expanded directly in the Schwarz coefficients.
pub fn h3_schwarz_poly<T: Field>(c: &SchwarzCoeffs<T>) -> C<T> {
    let (c1, c2, c3, c4) = (&c.c1, &c.c2, &c.c3, &c.c4);
    let c1_2 = c1 * c1;
    let c1_3 = &c1_2 * c1;
    let c1_4 = &c1_3 * c1;
    let c1_6 = &c1_4 * &c1_2;
    k::<T>(-61, 1) * c1_6
        + k::<T>(244, 1) * &c1_4 * c2
        + k::<T>(464, 1) * &c1_3 * c3
        + k::<T>(1088, 1) * c1 * c2 * c3
        - k::<T>(8, 1) * &c1_2 * (k::<T>(89, 1) * c2 * c2 + k::<T>(108, 1) * c4)
        - k::<T>(32, 1)
            * (k::<T>(9, 1) * c2 * c2 * c2 + k::<T>(32, 1) * c3 * c3 - k::<T>(36, 1) * c2 * c4)
}
