//! Catalan numbers and their convolution powers, Narayana polynomials and
//! their mixed convolution powers, Lucas polynomials and the companion
//! polynomials `h_k`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactring::{binomial, BiPoly, Integer, Poly, Ring, UniPoly};
use crate::powerseries::Series;

/// Which convolution-power sequence to draw entries from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilyId {
    /// `C_{k,n} = [x^n] c(x)^k`
    CatalanConv(u32),
    /// `C_{k,n}(t) = [x^n] c(x,t)^{(k)}`
    NarayanaConv(u32),
}

impl FamilyId {
    pub fn catalan(k: i64) -> Result<Self> {
        Ok(FamilyId::CatalanConv(check_k(k)?))
    }

    pub fn narayana(k: i64) -> Result<Self> {
        Ok(FamilyId::NarayanaConv(check_k(k)?))
    }

    pub fn k(self) -> u32 {
        match self {
            FamilyId::CatalanConv(k) | FamilyId::NarayanaConv(k) => k,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::CatalanConv(k) => write!(f, "catalan-conv(k={k})"),
            FamilyId::NarayanaConv(k) => write!(f, "narayana-conv(k={k})"),
        }
    }
}

fn check_k(k: i64) -> Result<u32> {
    if k < 1 || k > u32::MAX as i64 {
        return Err(Error::InvalidConvolutionIndex(k));
    }
    Ok(k as u32)
}

/// `C_n = binom(2n, n) / (n + 1)`, zero for negative `n`.
pub fn catalan(n: i64) -> Integer {
    if n < 0 {
        return Integer::zero();
    }
    binomial(2 * n, n).expect("n >= 0") / Integer::from(n + 1)
}

/// `C_{k,n} = k/(n+k) * binom(2n+k-1, n)`, zero for negative `n`.
pub fn catalan_conv(k: i64, n: i64) -> Result<Integer> {
    check_k(k)?;
    if n < 0 {
        return Ok(Integer::zero());
    }
    let b = binomial(2 * n + k - 1, n)?;
    Ok(b * Integer::from(k) / Integer::from(n + k))
}

/// `c(x)` truncated at `order`.
pub fn catalan_series(order: usize) -> Series<Integer> {
    Series::from_fn(order, |n| catalan(n as i64))
}

/// `c(x)^k` from the closed-form coefficients.
pub fn catalan_conv_series(k: i64, order: usize) -> Result<Series<Integer>> {
    check_k(k)?;
    Ok(Series::from_fn(order, |n| {
        catalan_conv(k, n as i64).expect("k checked")
    }))
}

/// Narayana polynomial `C_n(t) = sum_j binom(n,j) binom(n-1,j) / (j+1) t^j`,
/// with `C_0(t) = 1` and the zero polynomial for negative `n`.
pub fn narayana(n: i64) -> UniPoly {
    if n < 0 {
        return UniPoly::zero();
    }
    if n == 0 {
        return UniPoly::one();
    }
    UniPoly::new(
        (0..n)
            .map(|j| {
                let num = binomial(n, j).expect("n > 0") * binomial(n - 1, j).expect("n > 0");
                num / Integer::from(j + 1)
            })
            .collect(),
    )
}

/// `c_0(x,t) = sum_n C_n(t) x^n`
pub fn c0_series(order: usize) -> Series<UniPoly> {
    Series::from_fn(order, |n| narayana(n as i64))
}

/// `c_1(x,t) = 1 + t sum_{n>=1} C_n(t) x^n`
pub fn c1_series(order: usize) -> Series<UniPoly> {
    Series::from_fn(order, |n| {
        if n == 0 {
            UniPoly::one()
        } else {
            narayana(n as i64).shift(1)
        }
    })
}

/// Memo of the mixed convolution powers `c(x,t)^{(k)}` at a fixed order.
///
/// `c^{(0)} = 1`, `c^{(2j)} = c^{(2j-1)} c_1`, `c^{(2j+1)} = c^{(2j)} c_0`.
/// Owned by one caller at a time; build one per thread when parallelising.
#[derive(Clone, Debug)]
pub struct MixedPowers {
    c0: Series<UniPoly>,
    c1: Series<UniPoly>,
    powers: Vec<Series<UniPoly>>,
}

impl MixedPowers {
    pub fn new(order: usize) -> Self {
        MixedPowers {
            c0: c0_series(order),
            c1: c1_series(order),
            powers: vec![Series::one(order)],
        }
    }

    pub fn order(&self) -> usize {
        self.c0.order()
    }

    pub fn c0(&self) -> &Series<UniPoly> {
        &self.c0
    }

    pub fn c1(&self) -> &Series<UniPoly> {
        &self.c1
    }

    pub fn get(&mut self, k: usize) -> &Series<UniPoly> {
        while self.powers.len() <= k {
            let j = self.powers.len();
            let factor = if j.is_multiple_of(2) { &self.c1 } else { &self.c0 };
            let next = self.powers[j - 1].mul_ref(factor);
            self.powers.push(next);
        }
        &self.powers[k]
    }
}

/// `c(x,t)^{(k)}` truncated at `order`.
pub fn narayana_conv_series(k: i64, order: usize) -> Result<Series<UniPoly>> {
    let k = check_k(k)?;
    Ok(MixedPowers::new(order).get(k as usize).clone())
}

/// `C_{k,n}(t)`, zero for negative `n`.
pub fn narayana_conv(k: i64, n: i64) -> Result<UniPoly> {
    check_k(k)?;
    if n < 0 {
        return Ok(UniPoly::zero());
    }
    narayana_conv_series(k, n as usize + 1)?.coefficient(n)
}

/// Values the Lucas recurrence can run over: scalars, polynomials, series.
pub trait LucasOperand: Clone {
    /// The integer `c` in the same ring (and at the same order, for series).
    fn constant_like(&self, c: i64) -> Self;
    fn add_op(&self, rhs: &Self) -> Self;
    fn mul_op(&self, rhs: &Self) -> Self;
}

impl<R: Ring> LucasOperand for R {
    fn constant_like(&self, c: i64) -> Self {
        R::from_i64(c)
    }
    fn add_op(&self, rhs: &Self) -> Self {
        self.add_ref(rhs)
    }
    fn mul_op(&self, rhs: &Self) -> Self {
        self.mul_ref(rhs)
    }
}

impl<R: Ring> LucasOperand for Series<R> {
    fn constant_like(&self, c: i64) -> Self {
        Series::one(self.order()).scale(&R::from_i64(c))
    }
    fn add_op(&self, rhs: &Self) -> Self {
        self.add_ref(rhs)
    }
    fn mul_op(&self, rhs: &Self) -> Self {
        self.mul_ref(rhs)
    }
}

/// Bivariate Lucas polynomial: `L_0 = 2`, `L_1 = x`,
/// `L_n = x L_{n-1} + s L_{n-2}`.
pub fn lucas<T: LucasOperand>(n: usize, x: &T, s: &T) -> T {
    let mut prev = x.constant_like(2);
    if n == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for _ in 1..n {
        let next = x.mul_op(&cur).add_op(&s.mul_op(&prev));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `L_k(1, -x)` as a polynomial in `x`, degree `floor(k/2)`.
pub fn h_int(k: i64) -> Result<UniPoly> {
    let k = check_k(k)?;
    let minus_x = UniPoly::from_i64s(&[0, -1]);
    Ok(lucas(k as usize, &UniPoly::one(), &minus_x))
}

/// `h_k(x,t)` of degree `floor((k+1)/2)` in `x`:
/// `h_{2j} = L_j(a, s)` and `h_{2j+1} = x t L_j(a, s) + L_{j+1}(a, s)`
/// with `a = 1 - (1+t)x` and `s = -t x^2`.
pub fn h_t(k: i64) -> Result<BiPoly> {
    let k = check_k(k)? as usize;
    let t = UniPoly::var();
    let a = BiPoly::new(vec![UniPoly::one(), UniPoly::from_i64s(&[-1, -1])]);
    let s = BiPoly::monomial(t.neg_ref(), 2);
    let j = k / 2;
    if k.is_multiple_of(2) {
        Ok(lucas(j, &a, &s))
    } else {
        let xt = BiPoly::monomial(t, 1);
        Ok(xt.mul_ref(&lucas(j, &a, &s)).add_ref(&lucas(j + 1, &a, &s)))
    }
}

/// Substitute `t = v` in every coefficient of a polynomial in `x`.
pub fn eval_t(p: &BiPoly, v: &Integer) -> UniPoly {
    p.map(|c| c.eval(v))
}

/// Substitute `t = v` in every coefficient of a series.
pub fn eval_series_t(s: &Series<UniPoly>, v: &Integer) -> Series<Integer> {
    s.map(|c| c.eval(v))
}

/// Poly with exponent `e` of `t` and integer coefficient one: `t^e`.
pub fn t_pow(e: usize) -> UniPoly {
    Poly::monomial(Integer::one(), e)
}
