//! Truncated formal power series in `x`.
//!
//! A `Series` knows its coefficients for `0 <= n < order` and nothing else.
//! Every operation returns the largest order it can vouch for; reading at or
//! beyond the order is an error rather than a silent zero.

use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactring::{Integer, Poly, Ring, UniPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Series whose order is the number of supplied coefficients.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Series {
            coeffs: (0..order).map(f).collect(),
        }
    }

    pub fn from_poly(p: &Poly<R>, order: usize) -> Self {
        Self::from_fn(order, |n| p.coeff(n))
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| R::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { R::one() } else { R::zero() })
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 1 { R::one() } else { R::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// `[x^n]`; zero for negative `n`.
    pub fn coefficient(&self, n: i64) -> Result<R> {
        if n < 0 {
            return Ok(R::zero());
        }
        self.coeffs.get(n as usize).cloned().ok_or(Error::BeyondTruncation {
            index: n,
            order: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series {
            coeffs: self.coeffs.iter().take(order).cloned().collect(),
        }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        Series {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, R::add_ref)
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, R::sub_ref)
    }

    pub fn neg_ref(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(R::neg_ref).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Truncated Cauchy product; order is the smaller operand order.
    pub fn mul_ref(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![R::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order - i).enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Series { coeffs: out }
    }

    /// Multiply by `x^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        Self::from_fn(
            self.order(),
            |n| {
                if n < k {
                    R::zero()
                } else {
                    self.coeffs[n - k].clone()
                }
            },
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = k;
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

    /// `1 / self` by the convolution recurrence `t_n = -sum_{j=1..n} a_j t_{n-j}`.
    /// Requires the constant coefficient to be exactly 1.
    pub fn reciprocal(&self) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant(self.coeffs[0].render()));
        }
        let mut t: Vec<R> = Vec::with_capacity(order);
        t.push(R::one());
        for n in 1..order {
            let mut acc = R::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() {
                    acc = acc.add_ref(&self.coeffs[j].mul_ref(&t[n - j]));
                }
            }
            t.push(acc.neg_ref());
        }
        Ok(Series { coeffs: t })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(R::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let (order, items) = json_parts(v)?;
        let coeffs = items.iter().map(R::from_json).collect::<Result<Vec<_>>>()?;
        Ok(Series { coeffs }.truncate(order))
    }
}

fn json_parts(v: &Value) -> Result<(usize, &Vec<Value>)> {
    let order = v
        .get("order")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("series needs a non-negative integer \"order\"".into()))? as usize;
    let items = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("series needs a \"coeffs\" array".into()))?;
    if items.len() != order {
        return Err(Error::Json(format!(
            "series order {order} but {} coefficients",
            items.len()
        )));
    }
    Ok((order, items))
}

macro_rules! forward_series_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<R: Ring> $tr<&Series<R>> for &Series<R> {
            type Output = Series<R>;
            fn $method(self, rhs: &Series<R>) -> Series<R> {
                self.$inner(rhs)
            }
        }
        impl<R: Ring> $tr for Series<R> {
            type Output = Series<R>;
            fn $method(self, rhs: Series<R>) -> Series<R> {
                self.$inner(&rhs)
            }
        }
    };
}

forward_series_binop!(Add, add, add_ref);
forward_series_binop!(Sub, sub, sub_ref);
forward_series_binop!(Mul, mul, mul_ref);

impl<R: Ring> Neg for Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        self.neg_ref()
    }
}

/// A series whose coefficient ring is only known at runtime, as when it is
/// read from JSON.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnySeries {
    Int(Series<Integer>),
    Poly(Series<UniPoly>),
}

impl AnySeries {
    /// Integer entries give an integer series, coefficient arrays a
    /// polynomial series; a mixture is rejected.
    pub fn from_json(v: &Value) -> Result<Self> {
        let (_, items) = json_parts(v)?;
        let ints = items.iter().filter(|c| c.is_number()).count();
        if ints == items.len() {
            Series::from_json(v).map(AnySeries::Int)
        } else if ints == 0 {
            Series::from_json(v).map(AnySeries::Poly)
        } else {
            Err(Error::MixedRing)
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnySeries::Int(s) => s.to_json(),
            AnySeries::Poly(s) => s.to_json(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (AnySeries::Int(a), AnySeries::Int(b)) => Ok(AnySeries::Int(a * b)),
            (AnySeries::Poly(a), AnySeries::Poly(b)) => Ok(AnySeries::Poly(a * b)),
            _ => Err(Error::MixedRing),
        }
    }

    pub fn reciprocal(&self) -> Result<Self> {
        match self {
            AnySeries::Int(a) => a.reciprocal().map(AnySeries::Int),
            AnySeries::Poly(a) => a.reciprocal().map(AnySeries::Poly),
        }
    }
}
