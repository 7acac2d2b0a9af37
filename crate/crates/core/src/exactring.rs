//! Exact scalar rings: arbitrary-precision integers and dense univariate
//! polynomials over any ring in this module (so `Poly<Poly<Integer>>` is a
//! bivariate polynomial).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

pub type Integer = BigInt;

/// Polynomial in `t` with integer coefficients.
pub type UniPoly = Poly<Integer>;

/// Polynomial in `x` whose coefficients are polynomials in `t`.
pub type BiPoly = Poly<UniPoly>;

const VARIABLES: [&str; 4] = ["t", "x", "y", "z"];

/// Commutative integral domain with exact arithmetic.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + Send + Sync {
    /// Polynomial nesting depth; integers are 0.
    const DEPTH: usize;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Quotient `q` with `q * rhs == self`; errors if no such `q` exists.
    fn exact_div(&self, rhs: &Self) -> Result<Self>;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// `(negative, absolute rendering, absolute value is one)` when the value
    /// is a single signed term, `None` for a sum of several terms.
    fn single_term(&self) -> Option<(bool, String, bool)>;

    fn render(&self) -> String;

    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl Ring for Integer {
    const DEPTH: usize = 0;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(Error::DivisionByZero);
        }
        let q = self / rhs;
        if &q * rhs != *self {
            return Err(Error::NonExactDivision {
                dividend: self.to_string(),
                divisor: rhs.to_string(),
            });
        }
        Ok(q)
    }
    fn single_term(&self) -> Option<(bool, String, bool)> {
        let abs = self.abs();
        Some((self.is_negative(), abs.to_string(), One::is_one(&abs)))
    }
    fn render(&self) -> String {
        self.to_string()
    }
    fn to_json(&self) -> Value {
        Value::Number(serde_json::Number::from_str(&self.to_string()).expect("integer literal"))
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Number(n) => {
                BigInt::from_str(&n.to_string()).map_err(|_| Error::Json(format!("not an integer: {n}")))
            }
            other => Err(Error::Json(format!("expected integer, got {other}"))),
        }
    }
}

/// Dense polynomial, coefficients in ascending degree, no trailing zeros.
/// The zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * var^deg`
    pub fn monomial(c: R, deg: usize) -> Self {
        let mut coeffs = vec![R::zero(); deg];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `var^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul_ref(v).add_ref(c))
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Render with an explicit name for the outermost variable.
    pub fn render_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let terms: Vec<_> = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let only = terms.len() == 1;
        let mut out = String::new();
        for (n, (deg, c)) in terms.into_iter().enumerate() {
            let mono = match deg {
                0 => String::new(),
                1 => var.to_string(),
                d => format!("{var}^{d}"),
            };
            let (negative, body) = match c.single_term() {
                Some((neg, abs, abs_one)) => {
                    let body = if mono.is_empty() {
                        abs
                    } else if abs_one {
                        mono
                    } else {
                        format!("{abs}*{mono}")
                    };
                    (neg, body)
                }
                None => {
                    let inner = c.render();
                    let body = if mono.is_empty() {
                        if only {
                            inner
                        } else {
                            format!("({inner})")
                        }
                    } else {
                        format!("({inner})*{mono}")
                    };
                    (false, body)
                }
            };
            match (n, negative) {
                (0, true) => out.push_str(&format!("-{body}")),
                (0, false) => out.push_str(&body),
                (_, true) => out.push_str(&format!(" - {body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
            }
        }
        out
    }

    /// Long division that must leave no remainder.
    pub fn exact_div_poly(&self, divisor: &Self) -> Result<Self> {
        let non_exact = || Error::NonExactDivision {
            dividend: self.render(),
            divisor: divisor.render(),
        };
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading().expect("nonzero divisor");
        let Some(nd) = self.degree() else {
            return Ok(Self::zero());
        };
        if nd < dd {
            return Err(non_exact());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let q = top.exact_div(lead).map_err(|e| match e {
                Error::NonExactDivision { .. } => non_exact(),
                other => other,
            })?;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub_ref(&q.mul_ref(d));
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(non_exact());
        }
        Ok(Self::new(quot))
    }
}

impl UniPoly {
    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| Integer::from(c)).collect())
    }
}

impl<R: Ring> Ring for Poly<R> {
    const DEPTH: usize = R::DEPTH + 1;

    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Poly { coeffs: vec![R::one()] }
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(R::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add_ref(&rhs.coeff(i))).collect())
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub_ref(&rhs.coeff(i))).collect())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::new(out)
    }
    fn neg_ref(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(R::neg_ref).collect(),
        }
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        self.exact_div_poly(rhs)
    }

    fn single_term(&self) -> Option<(bool, String, bool)> {
        let mut nz = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (deg, c) = nz.next()?;
        if nz.next().is_some() {
            return None;
        }
        let (neg, abs, abs_one) = c.single_term()?;
        let var = VARIABLES[R::DEPTH];
        let mono = match deg {
            0 => return Some((neg, abs, abs_one)),
            1 => var.to_string(),
            d => format!("{var}^{d}"),
        };
        let body = if abs_one { mono } else { format!("{abs}*{mono}") };
        Some((neg, body, false))
    }

    fn render(&self) -> String {
        self.render_in(VARIABLES[R::DEPTH])
    }

    fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(R::to_json).collect())
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Array(items) => Ok(Self::new(items.iter().map(R::from_json).collect::<Result<_>>()?)),
            other => Err(Error::Json(format!("expected coefficient array, got {other}"))),
        }
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<R: Ring> $tr<&Poly<R>> for &Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: &Poly<R>) -> Poly<R> {
                self.$inner(rhs)
            }
        }
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: Poly<R>) -> Poly<R> {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        self.neg_ref()
    }
}

/// Binomial coefficient; zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::NegativeBinomial(n));
    }
    if k < 0 || k > n {
        return Ok(BigInt::from(0));
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 1..=k {
        // acc * (n-k+i) is divisible by i at every step
        acc = acc * Integer::from(n - k + i) / Integer::from(i);
    }
    Ok(acc)
}

/// `(-1)^e` as a ring element.
pub fn sign<R: Ring>(e: i64) -> R {
    if e.rem_euclid(2) == 0 {
        R::one()
    } else {
        R::one().neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_i64s(cs)
    }

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn add_identity_and_inverse() {
        assert_eq!(p(&[1, 1]) + UniPoly::zero(), p(&[1, 1]));
        let s = p(&[1, 1]) + p(&[-1, -1]);
        assert!(s.coeffs().is_empty());
        assert_eq!(s, UniPoly::zero());
    }

    #[test]
    fn add_coefficientwise() {
        // (1+3t+t^2) + (2+t)
        assert_eq!(p(&[1, 3, 1]) + p(&[2, 1]), p(&[3, 4, 1]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[1, 1]) * UniPoly::one(), p(&[1, 1]));
        assert_eq!(p(&[1, 1]) * p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(p(&[2, 1]) * p(&[3, 5, 1]), p(&[6, 13, 7, 1]));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[1, 2, 1]).exact_div(&p(&[1, 1])).unwrap(), p(&[1, 1]));
        let a = p(&[4, -1, 7]);
        assert_eq!(a.exact_div(&UniPoly::one()).unwrap(), a);
        let cube = p(&[1, 1]) * p(&[1, 1]) * p(&[1, -1]);
        assert_eq!(cube.exact_div(&p(&[1, 1])).unwrap(), p(&[1, 0, -1]));
    }

    #[test]
    fn exact_division_errors() {
        assert!(matches!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(Error::NonExactDivision { .. })
        ));
        // integer quotient coefficient would be 1/2
        assert!(matches!(
            p(&[1, 1]).exact_div(&p(&[2])),
            Err(Error::NonExactDivision { .. })
        ));
        assert!(matches!(
            p(&[1]).exact_div(&UniPoly::zero()),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            p(&[1]).exact_div(&p(&[0, 1])),
            Err(Error::NonExactDivision { .. })
        ));
        assert!(matches!(int(7).exact_div(&int(2)), Err(Error::NonExactDivision { .. })));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 3, 1]).eval(&int(0)), int(1));
        assert_eq!(p(&[1, 3, 1]).eval(&int(1)), int(5));
        assert_eq!(p(&[1, 6, 6, 1]).eval(&int(1)), int(14));
        assert_eq!(UniPoly::zero().eval(&int(3)), int(0));
    }

    #[test]
    fn binomial_values() {
        for n in 0..10 {
            assert_eq!(binomial(n, 0).unwrap(), int(1));
        }
        assert_eq!(binomial(6, 3).unwrap(), int(20));
        assert_eq!(binomial(5, 7).unwrap(), int(0));
        assert_eq!(binomial(5, -1).unwrap(), int(0));
        assert_eq!(binomial(-1, 0), Err(Error::NegativeBinomial(-1)));
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let mut row = vec![int(1)];
        for n in 0..40i64 {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as i64).unwrap(), v);
            }
            let mut next = vec![int(1)];
            next.extend(row.windows(2).map(|w| &w[0] + &w[1]));
            next.push(int(1));
            row = next;
        }
    }

    #[test]
    fn degree_and_canonical_form() {
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(p(&[0, 0, 3, 0, 0]).degree(), Some(2));
        assert_eq!(p(&[0, 0]), UniPoly::zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, -3, 1]).to_string(), "1 - 3*t + t^2");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[0, 0, -1]).to_string(), "-t^2");
        assert_eq!(p(&[-1, 1]).to_string(), "-1 + t");
        assert_eq!(p(&[0, 1]).render_in("x"), "x");
        let h3 = BiPoly::new(vec![p(&[1]), p(&[-2, -1]), p(&[1, -1])]);
        assert_eq!(h3.to_string(), "1 + (-2 - t)*x + (1 - t)*x^2");
        let m = BiPoly::new(vec![p(&[]), p(&[0, -2])]);
        assert_eq!(m.to_string(), "-2*t*x");
    }

    #[test]
    fn json_round_trip() {
        let a = p(&[1, -3, 1]);
        let v = a.to_json();
        assert_eq!(v.to_string(), "[1,-3,1]");
        assert_eq!(UniPoly::from_json(&v).unwrap(), a);
        assert_eq!(UniPoly::zero().to_json().to_string(), "[]");
        let big = Integer::from(10).pow(40u32);
        assert_eq!(Integer::from_json(&big.to_json()).unwrap(), big);
        assert!(Integer::from_json(&serde_json::json!([1])).is_err());
    }

    #[test]
    fn bivariate_exact_division() {
        // (1 + t*x)(1 - x) / (1 - x)
        let a = BiPoly::new(vec![p(&[1]), p(&[0, 1])]);
        let b = BiPoly::new(vec![p(&[1]), p(&[-1])]);
        assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }
}
