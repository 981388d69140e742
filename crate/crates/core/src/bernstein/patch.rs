use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{transpose, BiPoly};
use crate::error::{Error, Result};
use crate::rational::{binomial, int, parse_rational, to_frac_string, Rational};

/// Closed axis-aligned box `[p_lo, p_hi] x [x_lo, x_hi]`.
/// Serializes as `["p_lo", "p_hi", "x_lo", "x_hi"]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[String; 4]", try_from = "[String; 4]")]
pub struct Rect {
    pub p_lo: Rational,
    pub p_hi: Rational,
    pub x_lo: Rational,
    pub x_hi: Rational,
}

impl Rect {
    pub fn new(p_lo: Rational, p_hi: Rational, x_lo: Rational, x_hi: Rational) -> Result<Self> {
        if p_lo >= p_hi || x_lo >= x_hi {
            return Err(Error::OutOfRange {
                what: "box (expected p_lo < p_hi and x_lo < x_hi)",
                value: format!("[{p_lo}, {p_hi}] x [{x_lo}, {x_hi}]"),
            });
        }
        Ok(Self {
            p_lo,
            p_hi,
            x_lo,
            x_hi,
        })
    }

    pub fn unit() -> Self {
        Self::new(int(0), int(1), int(0), int(1)).unwrap()
    }

    pub fn p_width(&self) -> Rational {
        &self.p_hi - &self.p_lo
    }

    pub fn x_width(&self) -> Rational {
        &self.x_hi - &self.x_lo
    }

    pub fn contains(&self, p: &Rational, x: &Rational) -> bool {
        &self.p_lo <= p && p <= &self.p_hi && &self.x_lo <= x && x <= &self.x_hi
    }

    pub fn is_corner(&self, p: &Rational, x: &Rational) -> bool {
        (p == &self.p_lo || p == &self.p_hi) && (x == &self.x_lo || x == &self.x_hi)
    }

    /// Midpoint quadrisection in the order `(lo,lo), (lo,hi), (hi,lo), (hi,hi)`,
    /// the first component referring to `p`.
    pub fn quadrants(&self) -> [Rect; 4] {
        let half = Rational::new(1.into(), 2.into());
        let pm = (&self.p_lo + &self.p_hi) * &half;
        let xm = (&self.x_lo + &self.x_hi) * &half;
        let mk = |a: &Rational, b: &Rational, c: &Rational, d: &Rational| Rect {
            p_lo: a.clone(),
            p_hi: b.clone(),
            x_lo: c.clone(),
            x_hi: d.clone(),
        };
        [
            mk(&self.p_lo, &pm, &self.x_lo, &xm),
            mk(&self.p_lo, &pm, &xm, &self.x_hi),
            mk(&pm, &self.p_hi, &self.x_lo, &xm),
            mk(&pm, &self.p_hi, &xm, &self.x_hi),
        ]
    }

    pub fn to_strings(&self) -> [String; 4] {
        [&self.p_lo, &self.p_hi, &self.x_lo, &self.x_hi].map(to_frac_string)
    }
}

impl From<Rect> for [String; 4] {
    fn from(r: Rect) -> Self {
        r.to_strings()
    }
}

impl TryFrom<[String; 4]> for Rect {
    type Error = Error;
    fn try_from(v: [String; 4]) -> Result<Self> {
        let [a, b, c, d] = v;
        Rect::new(
            parse_rational(&a)?,
            parse_rational(&b)?,
            parse_rational(&c)?,
            parse_rational(&d)?,
        )
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] x [{}, {}]",
            self.p_lo, self.p_hi, self.x_lo, self.x_hi
        )
    }
}

/// Bernstein coefficients of a polynomial over a box, after the affine remap
/// of the box onto `[0, 1]^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernsteinPatch {
    pub rect: Rect,
    pub bcoeffs: Vec<Vec<Rational>>,
}

impl BernsteinPatch {
    pub fn bidegree(&self) -> (usize, usize) {
        (self.bcoeffs.len() - 1, self.bcoeffs[0].len() - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.bcoeffs[i][j]
    }

    pub fn min_coeff(&self) -> Rational {
        self.enclosure().0
    }

    pub fn max_coeff(&self) -> Rational {
        self.enclosure().1
    }

    /// `(min b_ij, max b_ij)`; the polynomial lies in this range on the box.
    pub fn enclosure(&self) -> (Rational, Rational) {
        let mut it = self.bcoeffs.iter().flatten();
        let first = it.next().expect("non-empty patch").clone();
        it.fold((first.clone(), first), |(lo, hi), c| {
            (
                if *c < lo { c.clone() } else { lo },
                if *c > hi { c.clone() } else { hi },
            )
        })
    }

    /// Evaluates the patch at a point of its box by de Casteljau in both directions.
    pub fn eval(&self, p: &Rational, x: &Rational) -> Rational {
        let u = (p - &self.rect.p_lo) / self.rect.p_width();
        let v = (x - &self.rect.x_lo) / self.rect.x_width();
        let cols: Vec<Rational> = self
            .bcoeffs
            .iter()
            .map(|row| casteljau_eval(row, &v))
            .collect();
        casteljau_eval(&cols, &u)
    }

    /// Splits at the box midpoints; children follow [`Rect::quadrants`] order.
    pub fn subdivide(&self) -> [BernsteinPatch; 4] {
        let (lo_u, hi_u) = split_rows(&self.bcoeffs);
        let halves = |m: &Vec<Vec<Rational>>| {
            let (lo, hi) = split_rows(&transpose(m));
            (transpose(&lo), transpose(&hi))
        };
        let (ll, lh) = halves(&lo_u);
        let (hl, hh) = halves(&hi_u);
        let [q1, q2, q3, q4] = self.rect.quadrants();
        [
            BernsteinPatch {
                rect: q1,
                bcoeffs: ll,
            },
            BernsteinPatch {
                rect: q2,
                bcoeffs: lh,
            },
            BernsteinPatch {
                rect: q3,
                bcoeffs: hl,
            },
            BernsteinPatch {
                rect: q4,
                bcoeffs: hh,
            },
        ]
    }
}

fn casteljau_eval(b: &[Rational], t: &Rational) -> Rational {
    let s = Rational::one() - t;
    let mut w = b.to_vec();
    for level in 1..w.len() {
        for i in 0..w.len() - level {
            w[i] = &w[i] * &s + &w[i + 1] * t;
        }
    }
    w.swap_remove(0)
}

/// Splits a 1D Bernstein sequence at `t = 1/2`.
fn split_seq(b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let n = b.len();
    let half = Rational::new(1.into(), 2.into());
    let mut w = b.to_vec();
    let mut left = Vec::with_capacity(n);
    let mut right = vec![Rational::zero(); n];
    left.push(w[0].clone());
    right[n - 1] = w[n - 1].clone();
    for level in 1..n {
        for i in 0..n - level {
            w[i] = (&w[i] + &w[i + 1]) * &half;
        }
        left.push(w[0].clone());
        right[n - 1 - level] = w[n - 1 - level].clone();
    }
    (left, right)
}

/// Splits every column (the `u` direction) of a coefficient matrix.
fn split_rows(m: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let cols = transpose(m);
    let (lo, hi): (Vec<_>, Vec<_>) = cols.iter().map(|c| split_seq(c)).unzip();
    (transpose(&lo), transpose(&hi))
}

/// Exact conversion of `f` restricted to `rect` into the Bernstein basis of
/// the same bidegree.
pub fn to_bernstein(f: &BiPoly, rect: &Rect) -> BernsteinPatch {
    let (m, n) = f.bidegree();
    let g = f.remap(&rect.p_lo, &rect.p_width(), &rect.x_lo, &rect.x_width());
    let along_u = power_to_bernstein_rows(g.matrix(), m);
    let along_v = power_to_bernstein_rows(&transpose(&along_u), n);
    BernsteinPatch {
        rect: rect.clone(),
        bcoeffs: transpose(&along_v),
    }
}

/// `b_i = sum_{k <= i} C(i,k)/C(m,k) a_k`, applied to each column.
fn power_to_bernstein_rows(a: &[Vec<Rational>], m: usize) -> Vec<Vec<Rational>> {
    let width = a[0].len();
    let mut out = vec![vec![Rational::zero(); width]; m + 1];
    for (i, row_out) in out.iter_mut().enumerate() {
        for (k, row_in) in a.iter().enumerate().take(i + 1) {
            let w = Rational::new(binomial(i, k), binomial(m, k));
            for (o, c) in row_out.iter_mut().zip(row_in) {
                if !c.is_zero() {
                    *o += c * &w;
                }
            }
        }
    }
    out
}

/// The min and max Bernstein coefficients over a box.
pub fn enclosure(patch: &BernsteinPatch) -> (Rational, Rational) {
    patch.enclosure()
}

/// Largest Bernstein coefficient over all patches after `depth` rounds of
/// uniform quadrisection; an upper bound for `f` on `rect`.
pub fn bound_above(f: &BiPoly, rect: &Rect, depth: usize) -> Rational {
    let mut level = vec![to_bernstein(f, rect)];
    for _ in 0..depth {
        level = level.iter().flat_map(|p| p.subdivide()).collect();
    }
    level
        .iter()
        .map(BernsteinPatch::max_coeff)
        .max()
        .expect("at least one patch")
}
