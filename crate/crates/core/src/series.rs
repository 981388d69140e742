//! Truncated formal power series with exact rational coefficients.
//!
//! A [`TruncSeries`] of order `N` stores `N + 1` coefficients, index `k`
//! holding the coefficient of `z^k`; every operation is exact modulo
//! `z^(N+1)`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, rat, Rational};

/// Truncation order used when the caller does not pick one: enough for
/// `a_2..a_5` plus a few cross-check coefficients.
pub const DEFAULT_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c z^k`, or zero if `k` lies beyond the truncation.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The identity series `z`.
    pub fn z(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// Builds a series from leading coefficients; missing entries are zero and
    /// entries beyond `order` are dropped.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = Rational>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; zero past the truncation.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Same series re-truncated (or zero-padded) to a different order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().cloned(), order)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    fn require_zero_constant(&self, what: &'static str) -> Result<()> {
        if self.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(Error::NonZeroConstant(what))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    /// `exp(self)` via `n b_n = sum_{k=1..n} k a_k b_{n-k}`, i.e. `(exp a)' = a' exp a`.
    pub fn exp(&self) -> Result<Self> {
        self.require_zero_constant("series_exp argument")?;
        let n = self.order();
        let mut b = vec![Rational::zero(); n + 1];
        b[0] = Rational::one();
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * int(k as i64) * &b[m - k];
                }
            }
            b[m] = acc / int(m as i64);
        }
        Ok(Self { coeffs: b })
    }

    /// `self ∘ inner` by Horner's scheme; `inner` must vanish at the origin.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        inner.require_zero_constant("series_compose inner")?;
        let n = self.order();
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Exact division by `z` as an index shift. The result has order `N - 1`
    /// because the top coefficient is unknown after the shift.
    pub fn divide_by_z(&self) -> Result<Self> {
        self.require_zero_constant("division by z")?;
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Termwise antiderivative vanishing at 0; raises the order by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / int(k as i64 + 1));
        }
        Self { coeffs }
    }

    /// Multiplication by `z`, dropping the coefficient pushed past the order.
    pub fn mul_z(&self) -> Self {
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs[..n].iter().cloned());
        Self { coeffs }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// The subordinating function `(1 + z/2)^2 = 1 + z + z^2/4`.
pub fn phi(order: usize) -> TruncSeries {
    TruncSeries::from_coeffs([int(1), int(1), rat(1, 4)], order)
}

/// `(1 + u)/(1 - u) = 1 + 2u + 2u^2 + ...` truncated at `order`.
pub fn cayley(order: usize) -> TruncSeries {
    let coeffs = (0..=order).map(|k| if k == 0 { int(1) } else { int(2) });
    TruncSeries::from_coeffs(coeffs, order)
}

/// Member of the class generated by a Schwarz function `w`:
/// `f = z exp( ∫_0^z (phi(w(t)) - 1)/t dt )`, truncated at `z^order`.
///
/// The integrand's removable singularity is handled by checking that
/// `phi(w) - 1` has no constant term and shifting indices.
pub fn member_from_schwarz(w: &TruncSeries, order: usize) -> Result<TruncSeries> {
    w.require_zero_constant("Schwarz function")?;
    if w.order() < order {
        return Err(Error::OutOfRange {
            what: "Schwarz series truncation (must be >= requested order)",
            value: w.order().to_string(),
        });
    }
    let w = w.with_order(order);
    let integrand = phi(order)
        .compose(&w)?
        .sub(&TruncSeries::one(order))?
        .divide_by_z()?;
    let log_f_over_z = integrand.integrate();
    debug_assert_eq!(log_f_over_z.order(), order);
    Ok(log_f_over_z.exp()?.mul_z())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(coeffs: &[(i64, i64)], order: usize) -> TruncSeries {
        TruncSeries::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)), order)
    }

    #[test]
    fn products() {
        let one_plus = s(&[(1, 1), (1, 1)], 4);
        let one_minus = s(&[(1, 1), (-1, 1)], 4);
        assert_eq!(
            one_plus.mul(&one_minus).unwrap(),
            s(&[(1, 1), (0, 1), (-1, 1)], 4)
        );

        let half = s(&[(1, 1), (1, 2)], 4);
        assert_eq!(half.mul(&half).unwrap(), phi(4));

        let z1 = TruncSeries::z(1);
        assert_eq!(z1.mul(&z1).unwrap(), TruncSeries::zero(1));
    }

    #[test]
    fn mismatched_orders_rejected() {
        let err = TruncSeries::z(3).mul(&TruncSeries::z(4)).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 3, right: 4 });
        assert!(TruncSeries::z(3).compose(&TruncSeries::z(2)).is_err());
    }

    #[test]
    fn exponentials() {
        assert_eq!(TruncSeries::zero(6).exp().unwrap(), TruncSeries::one(6));

        let a = s(&[(0, 1), (1, 1), (1, 8)], 4);
        let e = a.exp().unwrap();
        assert_eq!(&e.coeffs()[..4], &[int(1), int(1), rat(5, 8), rat(7, 24)]);

        let b = s(&[(0, 1), (0, 1), (1, 2), (0, 1), (1, 16)], 4);
        assert_eq!(
            b.exp().unwrap(),
            s(&[(1, 1), (0, 1), (1, 2), (0, 1), (3, 16)], 4)
        );

        let err = TruncSeries::one(3).exp().unwrap_err();
        assert_eq!(err, Error::NonZeroConstant("series_exp argument"));
    }

    #[test]
    fn compositions() {
        let w = s(&[(0, 1), (3, 7), (-2, 5), (1, 9)], 6);
        assert_eq!(TruncSeries::z(6).compose(&w).unwrap(), w);

        let z2 = TruncSeries::monomial(int(1), 2, 6);
        assert_eq!(
            phi(6).compose(&z2).unwrap(),
            s(&[(1, 1), (0, 1), (1, 1), (0, 1), (1, 4)], 6)
        );

        // (1+w)/(1-w) with w = c1 z + c2 z^2
        let (c1, c2) = (rat(2, 3), rat(-1, 5));
        let w = TruncSeries::from_coeffs([int(0), c1.clone(), c2.clone()], 2);
        let p = cayley(2).compose(&w).unwrap();
        assert_eq!(p.coeff(1), int(2) * &c1);
        assert_eq!(p.coeff(2), int(2) * (&c2 + &c1 * &c1));

        assert!(phi(3).compose(&TruncSeries::one(3)).is_err());
    }

    #[test]
    fn members_from_monomial_schwarz_functions() {
        let f = member_from_schwarz(&TruncSeries::z(5), 5).unwrap();
        assert_eq!(
            &f.coeffs()[..5],
            &[int(0), int(1), int(1), rat(5, 8), rat(7, 24)]
        );

        let f = member_from_schwarz(&TruncSeries::monomial(int(1), 2, 5), 5).unwrap();
        assert_eq!(f.coeff(2), int(0));
        assert_eq!(f.coeff(3), rat(1, 2));
        assert_eq!(f.coeff(4), int(0));

        let f = member_from_schwarz(&TruncSeries::monomial(int(1), 3, 5), 5).unwrap();
        assert_eq!(f.coeff(2), int(0));
        assert_eq!(f.coeff(3), int(0));
        assert_eq!(f.coeff(4), rat(1, 3));
        assert_eq!(f.coeff(5), int(0));
    }

    #[test]
    fn member_rejects_bad_input() {
        let w = s(&[(1, 2), (1, 1)], 4);
        assert!(member_from_schwarz(&w, 4).is_err());
        assert!(member_from_schwarz(&TruncSeries::z(3), 5).is_err());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(phi(3).to_string(), "1 + (1)z + (1/4)z^2 + O(z^4)");
        assert_eq!(TruncSeries::zero(1).to_string(), "0 + O(z^2)");
    }

    fn arb_series(order: usize, zero_constant: bool) -> impl Strategy<Value = TruncSeries> {
        prop::collection::vec((-6i64..=6, 1i64..=5), order + 1).prop_map(move |v| {
            let mut t = TruncSeries::from_coeffs(v.into_iter().map(|(n, d)| rat(n, d)), order);
            if zero_constant {
                t.coeffs[0] = Rational::zero();
            }
            t
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn exp_of_negation_inverts(a in arb_series(6, true)) {
            let prod = a.exp().unwrap().mul(&a.neg().exp().unwrap()).unwrap();
            prop_assert_eq!(prod, TruncSeries::one(6));
        }

        #[test]
        fn composition_is_associative(
            f in arb_series(5, false),
            g in arb_series(5, true),
            h in arb_series(5, true),
        ) {
            let left = f.compose(&g).unwrap().compose(&h).unwrap();
            let right = f.compose(&g.compose(&h).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn members_are_normalized(w in arb_series(6, true)) {
            let f = member_from_schwarz(&w, 6).unwrap();
            prop_assert_eq!(f.coeff(0), int(0));
            prop_assert_eq!(f.coeff(1), int(1));
        }
    }
}
