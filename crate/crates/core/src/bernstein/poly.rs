use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, parse_rational, to_frac_string, Rational};

/// Bivariate polynomial in the power basis; entry `(i, j)` multiplies `p^i x^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<Vec<Rational>>,
}

impl BiPoly {
    pub fn zero(m: usize, n: usize) -> Self {
        Self {
            coeffs: vec![vec![Rational::zero(); n + 1]; m + 1],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self {
            coeffs: vec![vec![c]],
        }
    }

    /// `c p^i x^j` with bidegree `(i, j)`.
    pub fn monomial(c: Rational, i: usize, j: usize) -> Self {
        let mut out = Self::zero(i, j);
        out.coeffs[i][j] = c;
        out
    }

    pub fn p() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Builds from a dense row-major matrix; rows index powers of `p`.
    pub fn from_matrix(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let width = rows.first().map(Vec::len).unwrap_or(0);
        if width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(Error::Parse {
                line: 0,
                msg: "coefficient matrix must be rectangular and non-empty".into(),
            });
        }
        Ok(Self { coeffs: rows })
    }

    /// Builds from `(i, j, c)` triples; repeated monomials are summed.
    pub fn from_terms(
        m: usize,
        n: usize,
        terms: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(m, n);
        for (i, j, c) in terms {
            if i > m || j > n {
                return Err(Error::DegreeOverflow { i, j, m, n });
            }
            out.coeffs[i][j] += c;
        }
        Ok(out)
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.coeffs.len() - 1, self.coeffs[0].len() - 1)
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.coeffs
    }

    /// Nonzero terms in row-major order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.coeffs.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    /// Same polynomial padded (or trimmed) to bidegree `(m, n)`.
    pub fn with_bidegree(&self, m: usize, n: usize) -> Result<Self> {
        let mut out = Self::zero(m, n);
        for (i, j, c) in self.terms() {
            if i > m || j > n {
                return Err(Error::DegreeOverflow { i, j, m, n });
            }
            out.coeffs[i][j] = c.clone();
        }
        Ok(out)
    }

    /// Smallest bidegree holding every nonzero term.
    pub fn trimmed(&self) -> Self {
        let (m, n) = self
            .terms()
            .fold((0, 0), |(m, n), (i, j, _)| (m.max(i), n.max(j)));
        self.with_bidegree(m, n).expect("trim keeps all terms")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|r| r.iter().map(|a| a * c).collect())
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(Rational::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Horner evaluation in both variables.
    pub fn eval(&self, p: &Rational, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for row in self.coeffs.iter().rev() {
            let mut r = Rational::zero();
            for c in row.iter().rev() {
                r = r * x + c;
            }
            acc = acc * p + r;
        }
        acc
    }

    pub fn eval_f64(&self, p: f64, x: f64) -> f64 {
        let mut acc = 0.0;
        for row in self.coeffs.iter().rev() {
            let mut r = 0.0;
            for c in row.iter().rev() {
                r = r * x + crate::rational::to_f64(c);
            }
            acc = acc * p + r;
        }
        acc
    }

    /// `g(u, v) = f(a + w u, c + z v)`, same bidegree.
    pub fn remap(&self, a: &Rational, w: &Rational, c: &Rational, z: &Rational) -> Self {
        let (m, n) = self.bidegree();
        let along_p = shift_rows(&self.coeffs, m, a, w);
        let transposed = transpose(&along_p);
        let along_x = shift_rows(&transposed, n, c, z);
        Self {
            coeffs: transpose(&along_x),
        }
    }

    /// Renders the text format accepted by [`BiPoly::parse`].
    pub fn to_text(&self) -> String {
        let (m, n) = self.bidegree();
        let mut s = format!("bidegree {m} {n}\n");
        for (i, j, c) in self.terms() {
            s.push_str(&format!("{i} {j} {}\n", to_frac_string(c)));
        }
        s
    }

    /// Parses `bidegree m n` followed by `i j num/den` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out: Option<Self> = None;
        let mut seen = std::collections::HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |msg: String| Error::Parse { line: line_no, msg };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let Some(poly) = out.as_mut() else {
                if fields.len() != 3 || fields[0] != "bidegree" {
                    return Err(parse_err("expected header `bidegree m n`".into()));
                }
                let m = fields[1]
                    .parse()
                    .map_err(|_| parse_err("bad degree".into()))?;
                let n = fields[2]
                    .parse()
                    .map_err(|_| parse_err("bad degree".into()))?;
                out = Some(Self::zero(m, n));
                continue;
            };
            if fields.len() != 3 {
                return Err(parse_err(format!("expected `i j num/den`, got {line:?}")));
            }
            let i: usize = fields[0]
                .parse()
                .map_err(|_| parse_err("bad exponent".into()))?;
            let j: usize = fields[1]
                .parse()
                .map_err(|_| parse_err("bad exponent".into()))?;
            let c = parse_rational(fields[2]).map_err(|e| parse_err(e.to_string()))?;
            let (m, n) = poly.bidegree();
            if i > m || j > n {
                return Err(Error::DegreeOverflow { i, j, m, n });
            }
            if !seen.insert((i, j)) {
                return Err(parse_err(format!("monomial p^{i} x^{j} listed twice")));
            }
            poly.coeffs[i][j] = c;
        }
        out.ok_or(Error::Parse {
            line: 0,
            msg: "missing `bidegree m n` header".into(),
        })
    }
}

/// For each column, rewrites `sum_i a_i t^i` with `t = a + w u` as a polynomial in `u`.
fn shift_rows(
    rows: &[Vec<Rational>],
    deg: usize,
    a: &Rational,
    w: &Rational,
) -> Vec<Vec<Rational>> {
    let width = rows[0].len();
    let a_pows = powers(a, deg);
    let w_pows = powers(w, deg);
    let mut out = vec![vec![Rational::zero(); width]; deg + 1];
    for (i, row) in rows.iter().enumerate() {
        for k in 0..=i {
            let factor = Rational::from_integer(binomial(i, k)) * &a_pows[i - k] * &w_pows[k];
            if factor.is_zero() {
                continue;
            }
            for (col, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out[k][col] += c * &factor;
                }
            }
        }
    }
    out
}

pub(crate) fn powers(a: &Rational, deg: usize) -> Vec<Rational> {
    let mut v = Vec::with_capacity(deg + 1);
    let mut cur = Rational::one();
    for _ in 0..=deg {
        v.push(cur.clone());
        cur *= a;
    }
    v
}

pub(crate) fn transpose(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let width = rows[0].len();
    (0..width)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if i > 0 {
                write!(f, "*p^{i}")?;
            }
            if j > 0 {
                write!(f, "*x^{j}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let (m1, n1) = self.bidegree();
        let (m2, n2) = rhs.bidegree();
        let mut out = BiPoly::zero(m1.max(m2), n1.max(n2));
        for (i, j, c) in self.terms().chain(rhs.terms()) {
            out.coeffs[i][j] += c;
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let (m1, n1) = self.bidegree();
        let (m2, n2) = rhs.bidegree();
        let mut out = BiPoly::zero(m1 + m2, n1 + n2);
        for (i, j, a) in self.terms() {
            for (k, l, b) in rhs.terms() {
                out.coeffs[i + k][j + l] += a * b;
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &BiPoly) -> BiPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl From<i64> for BiPoly {
    fn from(n: i64) -> Self {
        BiPoly::constant(Rational::from_integer(BigInt::from(n)))
    }
}
