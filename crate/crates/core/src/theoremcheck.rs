//! Executable checks of the duality lemma, the four shift theorems, their
//! corollaries, the quoted closed forms, and the series identities.
//!
//! Every comparison is exact. Each public `check_*` returns a [`Suite`] of
//! per-tuple reports in a fixed order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalanseq::FamilyId;
use crate::catalanseq::{
    c0_series, c1_series, catalan, catalan_conv, catalan_conv_series, catalan_series, eval_t, h_int, h_t, lucas,
    narayana, t_pow, MixedPowers,
};
use crate::error::{Error, Result};
use crate::exactring::{binomial, sign, BiPoly, Integer, Ring, UniPoly};
use crate::hankel::{build_hankel, det_fraction_free, narayana_hankel_matrix, HankelSpec, SquareMatrix};
use crate::pathoracle::{a_weight_table, PathOracle};
use crate::powerseries::Series;
use crate::report::{CheckReport, Suite};

fn binom_i(n: i64, k: i64) -> i64 {
    // small exponents only; used for signs and t-powers
    i64::try_from(binomial(n, k).expect("n >= 0")).expect("fits in i64")
}

fn binom_u(n: usize, k: usize) -> usize {
    binom_i(n as i64, k as i64) as usize
}

/// Both sides of the duality
/// `det(s_{i+j-M})_{i,j<=N+M} = (-1)^{N + binom(M+1,2)} det(t_{i+j+M+2})_{i,j<N}`
/// where `t = 1/s`. Needs `s_0 = 1` and at least `2N + M + 1` coefficients.
pub fn lemma_sides<R: Ring>(s: &[R], m: usize, n: usize) -> Result<(R, R)> {
    let needed = 2 * n + m + 1;
    if s.len() < needed {
        return Err(Error::InsufficientCoefficients { needed, got: s.len() });
    }
    let series = Series::from_coeffs(s[..needed].to_vec());
    let recip = series.reciprocal()?;
    let lhs_m = build_hankel(|i| series.coeffs()[i].clone(), -(m as i64), n + m + 1);
    let rhs_m = build_hankel(|i| recip.coeffs()[i].clone(), m as i64 + 2, n);
    let lhs = det_fraction_free(&lhs_m)?;
    let rhs = det_fraction_free(&rhs_m)?;
    let e = n as i64 + binom_i(m as i64 + 1, 2);
    Ok((lhs, sign::<R>(e).mul_ref(&rhs)))
}

pub fn check_lemma<R: Ring>(s: &[R], m: usize, n: usize) -> Result<CheckReport> {
    let (lhs, rhs) = lemma_sides(s, m, n)?;
    Ok(CheckReport::equal(
        "lemma",
        &[("m", m as i64), ("n", n as i64)],
        &lhs,
        &rhs,
        R::render,
    ))
}

/// Seeded random integer series with `s_0 = 1` and `|s_i| <= 9`, each checked
/// for every `M <= m_max`, `1 <= N <= n_max`. One report per series.
pub fn check_lemma_random(count: usize, seed: u64, m_max: usize, n_max: usize) -> Suite {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = 2 * n_max + m_max + 1;
    (0..count)
        .map(|idx| {
            let mut s = vec![Integer::from(1)];
            s.extend((1..len).map(|_| Integer::from(rng.gen_range(-9i64..=9))));
            let base = [("seed", seed as i64), ("index", idx as i64)];
            let mut first_failure = None;
            'outer: for m in 0..=m_max {
                for n in 1..=n_max {
                    match lemma_sides(&s, m, n) {
                        Ok((l, r)) if l == r => {}
                        Ok((l, r)) => {
                            first_failure = Some((m, n, l.render(), r.render()));
                            break 'outer;
                        }
                        Err(e) => {
                            first_failure = Some((m, n, format!("error: {e}"), String::new()));
                            break 'outer;
                        }
                    }
                }
            }
            let coeffs = s.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
            match first_failure {
                None => CheckReport::compare(
                    "lemma.random",
                    &[base[0], base[1], ("m_max", m_max as i64), ("n_max", n_max as i64)],
                    format!("s = [{coeffs}]"),
                    "all (M, N) balanced".into(),
                    true,
                ),
                Some((m, n, l, r)) => CheckReport::compare(
                    "lemma.random",
                    &[base[0], base[1], ("m", m as i64), ("n", n as i64)],
                    l,
                    format!("{r} (s = [{coeffs}])"),
                    false,
                ),
            }
        })
        .collect()
}

/// Lemma on structured series: `s = 1`, `s = c(x)^k` for `k <= k_max`, and
/// `s = c(x,t)^{(k)}` for `k <= 2` at small sizes.
pub fn check_lemma_structured(k_max: usize, m_max: usize, n_max: usize) -> Result<Suite> {
    let mut suite = Suite::new();
    let len = 2 * n_max + m_max + 1;
    let unit: Vec<Integer> = Series::<Integer>::one(len).coeffs().to_vec();
    for m in 0..=m_max {
        for n in 1..=n_max {
            let mut r = check_lemma(&unit, m, n)?;
            r.check = "lemma.unit".into();
            suite.push(r);
        }
    }
    for k in 1..=k_max {
        let s = catalan_conv_series(k as i64, len)?;
        for m in 0..=m_max {
            for n in 1..=n_max {
                let mut r = check_lemma(s.coeffs(), m, n)?;
                r.check = "lemma.catalan-conv".into();
                r.params.insert("k".into(), (k as i64).into());
                suite.push(r);
            }
        }
    }
    let small_m = m_max.min(2);
    let small_n = n_max.min(3);
    let mut powers = MixedPowers::new(2 * small_n + small_m + 1);
    for k in 1..=2 {
        let s = powers.get(k).clone();
        for m in 0..=small_m {
            for n in 1..=small_n {
                let mut r = check_lemma(s.coeffs(), m, n)?;
                r.check = "lemma.narayana-conv".into();
                r.params.insert("k".into(), (k as i64).into());
                suite.push(r);
            }
        }
    }
    Ok(suite)
}

/// Source of shifted Hankel matrices for one convolution index.
trait HankelSource<R: Ring> {
    fn matrix(&mut self, shift: i64, size: usize) -> Result<SquareMatrix<R>>;
}

struct CatalanSource {
    k: i64,
}

impl HankelSource<Integer> for CatalanSource {
    fn matrix(&mut self, shift: i64, size: usize) -> Result<SquareMatrix<Integer>> {
        let k = self.k;
        Ok(build_hankel(
            |i| catalan_conv(k, i as i64).expect("k >= 1"),
            shift,
            size,
        ))
    }
}

struct NarayanaSource {
    k: usize,
    powers: MixedPowers,
}

impl NarayanaSource {
    /// Memo sized for every `(shift, size)` in `needs`, asserted up front.
    fn new(k: usize, needs: &[(i64, usize)]) -> Result<Self> {
        let family = FamilyId::narayana(k as i64)?;
        let order = needs
            .iter()
            .map(|&(shift, size)| HankelSpec { family, shift, size }.required_order())
            .max()
            .unwrap_or(1);
        Ok(NarayanaSource {
            k,
            powers: MixedPowers::new(order),
        })
    }
}

impl HankelSource<UniPoly> for NarayanaSource {
    fn matrix(&mut self, shift: i64, size: usize) -> Result<SquareMatrix<UniPoly>> {
        narayana_hankel_matrix(&mut self.powers, self.k, shift, size)
    }
}

/// Shape shared by the four shift theorems:
/// `D_{K,zero_shift}(N) = 0` for `1 <= N <= zero_max` (first row vanishing) and
/// `D_{K,zero_shift}(n + offset) = (-1)^sign_exp * factor(n) * D_{K,rhs_shift}(n)`.
struct ShiftTheorem {
    id: &'static str,
    k: usize,
    m: usize,
    zero_shift: i64,
    zero_max: usize,
    offset: usize,
    rhs_shift: i64,
    sign_exp: i64,
}

impl ShiftTheorem {
    fn needs(&self, n_max: usize) -> Vec<(i64, usize)> {
        vec![
            (self.zero_shift, self.zero_max),
            (self.zero_shift, n_max + self.offset),
            (self.rhs_shift, n_max),
        ]
    }

    fn run<R: Ring>(&self, src: &mut impl HankelSource<R>, n_max: usize, factor: impl Fn(usize) -> R) -> Result<Suite> {
        let mut suite = Suite::new();
        let (k, m) = (self.k as i64, self.m as i64);
        for size in 1..=self.zero_max {
            let mat = src.matrix(self.zero_shift, size)?;
            let det = det_fraction_free(&mat)?;
            let row_zero = mat.row_is_zero(0);
            let lhs = if row_zero {
                det.render()
            } else {
                format!("{} (first row nonzero)", det.render())
            };
            suite.push(CheckReport::compare(
                format!("{}.zero", self.id),
                &[("k", k), ("m", m), ("N", size as i64)],
                lhs,
                "0".into(),
                det.is_zero() && row_zero,
            ));
        }
        for n in 0..=n_max {
            let lhs = det_fraction_free(&src.matrix(self.zero_shift, n + self.offset)?)?;
            let base = det_fraction_free(&src.matrix(self.rhs_shift, n)?)?;
            let rhs = sign::<R>(self.sign_exp).mul_ref(&factor(n)).mul_ref(&base);
            suite.push(CheckReport::equal(
                format!("{}.shift", self.id),
                &[("k", k), ("m", m), ("n", n as i64)],
                &lhs,
                &rhs,
                R::render,
            ));
        }
        Ok(suite)
    }
}

fn even_theorem(id: &'static str, k: usize, m: usize) -> ShiftTheorem {
    let (ki, mi) = (k as i64, m as i64);
    ShiftTheorem {
        id,
        k,
        m,
        zero_shift: 1 - ki - mi,
        zero_max: m + k - 1,
        offset: m + k,
        rhs_shift: 1 - ki + mi,
        sign_exp: binom_i(mi + ki, 2),
    }
}

fn odd_theorem(id: &'static str, k: usize, m: usize) -> ShiftTheorem {
    let (ki, mi) = (k as i64, m as i64);
    ShiftTheorem {
        id,
        k,
        m,
        zero_shift: 2 - ki - mi,
        zero_max: (m + k).saturating_sub(2),
        offset: m + k - 1,
        rhs_shift: 1 - ki + mi,
        sign_exp: binom_i(mi + ki - 1, 2),
    }
}

fn require_k(k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidConvolutionIndex(k as i64));
    }
    Ok(())
}

/// `D_{2k,1-k-m}(N) = 0` for `N = 1..m+k-1` and
/// `D_{2k,1-k-m}(n+m+k) = (-1)^{binom(m+k,2)} D_{2k,1-k+m}(n)`.
pub fn check_thm1(k: usize, m: usize, n_max: usize) -> Result<Suite> {
    require_k(k)?;
    let th = even_theorem("thm1", k, m);
    th.run(&mut CatalanSource { k: 2 * k as i64 }, n_max, |_| Integer::from(1))
}

/// `D_{2k-1,2-k-m}(N) = 0` for `N = 1..m+k-2` and
/// `D_{2k-1,2-k-m}(n+m+k-1) = (-1)^{binom(m+k-1,2)} D_{2k-1,1-k+m}(n)`.
pub fn check_thm2(k: usize, m: usize, n_max: usize) -> Result<Suite> {
    require_k(k)?;
    let th = odd_theorem("thm2", k, m);
    th.run(&mut CatalanSource { k: 2 * k as i64 - 1 }, n_max, |_| Integer::from(1))
}

/// Polynomial analogue of [`check_thm1`] with the extra factor `t^{kn}`.
pub fn check_thm3(k: usize, m: usize, n_max: usize) -> Result<Suite> {
    require_k(k)?;
    let th = even_theorem("thm3", k, m);
    let mut src = NarayanaSource::new(2 * k, &th.needs(n_max))?;
    th.run(&mut src, n_max, |n| t_pow(k * n))
}

/// Polynomial analogue of [`check_thm2`] with the extra factor `t^{kn}`;
/// stated for `m >= 1` only.
pub fn check_thm4(k: usize, m: usize, n_max: usize) -> Result<Suite> {
    require_k(k)?;
    if m < 1 {
        return Err(Error::InvalidConvolutionIndex(m as i64));
    }
    let th = odd_theorem("thm4", k, m);
    let mut src = NarayanaSource::new(2 * k - 1, &th.needs(n_max))?;
    th.run(&mut src, n_max, |n| t_pow(k * n))
}

/// Same identity as [`check_thm4`] without the `m >= 1` guard, for probing
/// the `m = 0` case.
pub fn check_thm4_unguarded(k: usize, m: usize, n_max: usize) -> Result<Suite> {
    require_k(k)?;
    let th = odd_theorem("thm4", k, m);
    let mut src = NarayanaSource::new(2 * k - 1, &th.needs(n_max))?;
    th.run(&mut src, n_max, |n| t_pow(k * n))
}

/// Parameter ranges for [`check_corollaries`].
#[derive(Clone, Copy, Debug)]
pub struct CorollaryBounds {
    /// `det(C_{i+j}) = det(C_{2,i+j}) = det(C_{i+j+1}) = 1` for sizes up to this.
    pub catalan_unit_size: usize,
    pub even_k_max: usize,
    pub even_size_max: usize,
    pub odd_k_max: usize,
    pub odd_size_max: usize,
    pub poly_k_max: usize,
    /// `n` in `D_{2k,1-k,t}(kn)`.
    pub poly_n_max: usize,
    pub narayana_unit_size: usize,
}

impl Default for CorollaryBounds {
    fn default() -> Self {
        CorollaryBounds {
            catalan_unit_size: 12,
            even_k_max: 3,
            even_size_max: 24,
            odd_k_max: 2,
            odd_size_max: 24,
            poly_k_max: 3,
            poly_n_max: 3,
            narayana_unit_size: 8,
        }
    }
}

fn int_report(check: &str, params: &[(&str, i64)], lhs: &Integer, rhs: &Integer) -> CheckReport {
    CheckReport::equal(check, params, lhs, rhs, Integer::render)
}

fn poly_report(check: &str, params: &[(&str, i64)], lhs: &UniPoly, rhs: &UniPoly) -> CheckReport {
    CheckReport::equal(check, params, lhs, rhs, UniPoly::render)
}

fn int_hankel(seq: impl Fn(usize) -> Integer, shift: i64, size: usize) -> Result<Integer> {
    det_fraction_free(&build_hankel(seq, shift, size))
}

/// Sign and support patterns that follow from the shift theorems at small
/// `m`, plus the unit and `t^{binom(n,2)}` Hankel determinants.
pub fn check_corollaries(b: &CorollaryBounds) -> Result<Suite> {
    let mut suite = Suite::new();
    let one = Integer::from(1);

    for n in 0..=b.catalan_unit_size {
        let ni = n as i64;
        let c = int_hankel(|i| catalan(i as i64), 0, n)?;
        let c2 = int_hankel(|i| catalan_conv(2, i as i64).expect("k = 2"), 0, n)?;
        let c_shift = int_hankel(|i| catalan(i as i64), 1, n)?;
        suite.push(int_report("unit-det.catalan", &[("n", ni)], &c, &one));
        suite.push(int_report("unit-det.conv2", &[("n", ni)], &c2, &one));
        suite.push(int_report("unit-det.catalan-shifted", &[("n", ni)], &c_shift, &one));
    }

    // D_{2k,1-k}(kn) = (-1)^{n binom(k,2)}, zero off multiples of k
    for k in 1..=b.even_k_max {
        let ki = k as i64;
        for size in 0..=b.even_size_max {
            let d = int_hankel(|i| catalan_conv(2 * ki, i as i64).expect("k >= 1"), 1 - ki, size)?;
            let want = if size % k == 0 {
                sign::<Integer>((size / k) as i64 * binom_i(ki, 2))
            } else {
                Integer::from(0)
            };
            suite.push(int_report(
                "even-conv.pattern",
                &[("k", ki), ("N", size as i64)],
                &d,
                &want,
            ));
        }
    }

    for k in 1..=b.odd_k_max {
        let ki = k as i64;
        let period = 2 * k + 1;
        let seq = |i: usize| catalan_conv(2 * ki + 1, i as i64).expect("k >= 1");
        for size in 0..=b.odd_size_max {
            let (q, r) = ((size / period) as i64, size % period);
            let d21 = int_hankel(seq, -ki, size)?;
            let want21 = if r == 0 {
                sign::<Integer>(ki * q)
            } else if r == k + 1 {
                sign::<Integer>(ki * q + binom_i(ki + 1, 2))
            } else {
                Integer::from(0)
            };
            suite.push(int_report(
                "odd-conv.pattern-low",
                &[("k", ki), ("N", size as i64)],
                &d21,
                &want21,
            ));

            let d22 = int_hankel(seq, 1 - ki, size)?;
            let want22 = if r == 0 {
                sign::<Integer>(ki * q)
            } else if r == k {
                sign::<Integer>(ki * q + binom_i(ki, 2))
            } else {
                Integer::from(0)
            };
            suite.push(int_report(
                "odd-conv.pattern-high",
                &[("k", ki), ("N", size as i64)],
                &d22,
                &want22,
            ));
        }
    }

    // D_{2k,1-k,t}(kn) = (-1)^{n binom(k,2)} t^{k^2 binom(n,2)}, zero off multiples of k
    for k in 1..=b.poly_k_max {
        let ki = k as i64;
        let top = k * b.poly_n_max;
        let mut src = NarayanaSource::new(2 * k, &[(1 - ki, top)])?;
        for size in 0..=top {
            let d = det_fraction_free(&src.matrix(1 - ki, size)?)?;
            let want = if size % k == 0 {
                let n = size / k;
                t_pow(k * k * binom_u(n, 2)).mul_ref(&sign(n as i64 * binom_i(ki, 2)))
            } else {
                UniPoly::zero()
            };
            suite.push(poly_report(
                "narayana-even.pattern",
                &[("k", ki), ("N", size as i64)],
                &d,
                &want,
            ));
        }
    }

    {
        let mut src = NarayanaSource::new(1, &[(0, b.narayana_unit_size), (1, b.narayana_unit_size)])?;
        for n in 0..=b.narayana_unit_size {
            let want = t_pow(binom_u(n, 2));
            let d0 = det_fraction_free(&src.matrix(0, n)?)?;
            let d1 = det_fraction_free(&src.matrix(1, n)?)?;
            suite.push(poly_report("narayana-unit.unshifted", &[("n", n as i64)], &d0, &want));
            suite.push(poly_report("narayana-unit.shifted", &[("n", n as i64)], &d1, &want));
        }
    }
    Ok(suite)
}

/// `1 + t^2 + ... + t^{2n}`
fn even_geometric(n: usize) -> UniPoly {
    (0..=n).fold(UniPoly::zero(), |acc, j| acc + t_pow(2 * j))
}

/// Closed forms for `D_{4,0,t}` (sizes `<= d40_max`) and `D_{3,0,t}`
/// (sizes `<= d30_max`).
pub fn check_external_closed_forms(d40_max: usize, d30_max: usize) -> Result<Suite> {
    let mut suite = Suite::new();
    let mut src4 = NarayanaSource::new(4, &[(0, d40_max)])?;
    for size in 0..=d40_max {
        let n = size / 2;
        let want = if size % 2 == 0 {
            t_pow(2 * (n * n - n))
                .mul_ref(&even_geometric(n))
                .mul_ref(&sign(n as i64))
        } else {
            t_pow(2 * n * n).mul_ref(&even_geometric(n)).mul_ref(&sign(n as i64))
        };
        let d = det_fraction_free(&src4.matrix(0, size)?)?;
        suite.push(poly_report("closed.d40", &[("N", size as i64)], &d, &want));
    }
    let mut src3 = NarayanaSource::new(3, &[(0, d30_max)])?;
    for size in 0..=d30_max {
        let top = binom_u(size, 2);
        let want = (0..=size / 2).fold(UniPoly::zero(), |acc, j| {
            let c = binomial((size - j) as i64, j as i64).expect("n >= 0");
            let term = t_pow(top - j).scale(&c).mul_ref(&sign(j as i64));
            acc + term
        });
        let d = det_fraction_free(&src3.matrix(0, size)?)?;
        suite.push(poly_report("closed.d30", &[("N", size as i64)], &d, &want));
    }
    Ok(suite)
}

fn series_report<R: Ring>(check: &str, params: &[(&str, i64)], lhs: &Series<R>, rhs: &Series<R>) -> CheckReport {
    let render = |s: &Series<R>| {
        let parts: Vec<String> = s.coeffs().iter().map(R::render).collect();
        format!("[{}] + O(x^{})", parts.join(", "), s.order())
    };
    CheckReport::equal(check, params, lhs, rhs, render)
}

/// Series and polynomial identities at truncation `order`, for convolution
/// indices `k <= k_max`.
pub fn check_series_identities(order: usize, k_max: usize) -> Result<Suite> {
    if order < 4 {
        return Err(Error::InsufficientCoefficients { needed: 4, got: order });
    }
    let mut suite = Suite::new();
    let o = order as i64;
    let one_i = Series::<Integer>::one(order);
    let c = catalan_series(order);
    let xc = c.shift(1);
    let c_inv = c.reciprocal()?;

    suite.push(series_report(
        "catalan.functional",
        &[("order", o)],
        &(&one_i + &xc.mul_ref(&c)),
        &c,
    ));
    suite.push(series_report(
        "catalan.reciprocal",
        &[("order", o)],
        &(&xc + &c_inv),
        &one_i,
    ));

    for k in 1..=k_max {
        let ki = k as i64;
        let ck = c.pow(k as u32);
        let closed = catalan_conv_series(ki, order)?;
        suite.push(series_report(
            "conv.closed-form",
            &[("k", ki), ("order", o)],
            &ck,
            &closed,
        ));
        let lhs = &xc.pow(k as u32) + &ck.reciprocal()?;
        let rhs = Series::from_poly(&h_int(ki)?, order);
        suite.push(series_report(
            "conv.reciprocal-tail",
            &[("k", ki), ("order", o)],
            &lhs,
            &rhs,
        ));
        let via_sub = lucas(k, &UniPoly::from_i64s(&[1, -2]), &UniPoly::from_i64s(&[0, 0, -1]));
        suite.push(poly_report("h-int.even-lucas", &[("k", ki)], &h_int(2 * ki)?, &via_sub));
    }

    // L_n(x + y, -xy) = x^n + y^n on a small grid
    for x in -3i64..=3 {
        for y in -3i64..=3 {
            let (xi, yi) = (Integer::from(x), Integer::from(y));
            for n in 0..=10usize {
                let lhs = lucas(n, &(&xi + &yi), &-(&xi * &yi));
                let rhs = xi.pow(n as u32) + yi.pow(n as u32);
                suite.push(int_report(
                    "lucas.power-sum",
                    &[("x", x), ("y", y), ("n", n as i64)],
                    &lhs,
                    &rhs,
                ));
            }
        }
    }

    let one = Series::<UniPoly>::one(order);
    let t = UniPoly::var();
    let c0 = c0_series(order);
    let c1 = c1_series(order);
    let c0c1 = c0.mul_ref(&c1);
    let one_minus_t = one.scale(&UniPoly::from_i64s(&[1, -1]));
    suite.push(series_report(
        "narayana.c1-from-c0",
        &[("order", o)],
        &c1,
        &(&one_minus_t + &c0.scale(&t)),
    ));
    suite.push(series_report(
        "narayana.functional-c1",
        &[("order", o)],
        &c1,
        &(&one + &c0c1.shift(1).scale(&t)),
    ));
    suite.push(series_report(
        "narayana.functional-c0",
        &[("order", o)],
        &c0,
        &(&one + &c0c1.shift(1)),
    ));
    let at_one = |s: &Series<UniPoly>| s.map(|p| p.eval(&Integer::from(1)));
    suite.push(series_report("c0-at-t1", &[("order", o)], &at_one(&c0), &c));
    suite.push(series_report("c1-at-t1", &[("order", o)], &at_one(&c1), &c));

    let mut powers = MixedPowers::new(order);
    let top = 2 * k_max + 2;
    let pw: Vec<Series<UniPoly>> = (0..=top).map(|j| powers.get(j).clone()).collect();
    for k in 2..=top {
        suite.push(series_report(
            "mixed.step-two",
            &[("k", k as i64), ("order", o)],
            &pw[k],
            &pw[k - 2].mul_ref(&pw[2]),
        ));
    }
    for k in 1..=k_max {
        let ki = k as i64;
        let p = [("k", ki), ("order", o)];
        suite.push(series_report(
            "mixed.odd-recurrence",
            &p,
            &pw[2 * k - 1],
            &(&pw[2 * k - 2] + &pw[2 * k].shift(1)),
        ));
        suite.push(series_report(
            "mixed.even-recurrence",
            &p,
            &pw[2 * k],
            &(&pw[2 * k - 1] + &pw[2 * k + 1].shift(1).scale(&t)),
        ));
    }
    // coefficient form of the two recurrences
    for k in 1..=k_max.min(3) {
        for n in 0..order as i64 {
            let p = [("k", k as i64), ("n", n)];
            let c_at = |j: usize, i: i64| pw[j].coefficient(i).expect("within order");
            let lhs = c_at(2 * k, n);
            let rhs = c_at(2 * k - 1, n) + &t * &c_at(2 * k + 1, n - 1);
            suite.push(poly_report("mixed.coeff-even", &p, &lhs, &rhs));
            let lhs = c_at(2 * k + 1, n);
            let rhs = c_at(2 * k, n) + c_at(2 * k + 2, n - 1);
            suite.push(poly_report("mixed.coeff-odd", &p, &lhs, &rhs));
        }
    }
    for n in 0..order as i64 {
        suite.push(poly_report(
            "mixed.square-is-narayana",
            &[("n", n)],
            &pw[2].coefficient(n)?,
            &narayana(n + 1),
        ));
    }

    // 1/c^{(k)} + t^{floor((k+1)/2)} x^k c^{(k)} = h_k(x,t)
    for (k, pk) in pw.iter().enumerate().take(k_max + 1).skip(1) {
        let ki = k as i64;
        let p = [("k", ki), ("order", o)];
        let lhs = &pk.reciprocal()? + &pk.shift(k).scale(&t_pow(k.div_ceil(2)));
        let h = h_t(ki)?;
        suite.push(series_report("h.reciprocal-tail", &p, &lhs, &bipoly_series(&h, order)));
        suite.push(poly_report(
            "h.at-t1",
            &[("k", ki)],
            &eval_t(&h, &Integer::from(1)),
            &h_int(ki)?,
        ));
    }
    let h1 = BiPoly::new(vec![UniPoly::one(), UniPoly::from_i64s(&[-1, 1])]);
    let lhs38 = &c0.reciprocal()? + &c0.shift(1).scale(&t);
    suite.push(series_report(
        "h.first",
        &[("order", o)],
        &lhs38,
        &bipoly_series(&h1, order),
    ));
    let h2 = BiPoly::new(vec![UniPoly::one(), UniPoly::from_i64s(&[-1, -1])]);
    suite.push(CheckReport::equal("h.second", &[], &h_t(2)?, &h2, BiPoly::render));
    // h_{2k} from the k-th power of c^{(2)} rather than the memoised c^{(2k)}
    for k in 1..=k_max / 2 {
        let ki = k as i64;
        let sq = pw[2].pow(k as u32);
        let lhs = &sq.reciprocal()? + &sq.shift(2 * k).scale(&t_pow(k));
        suite.push(series_report(
            "h.even-power",
            &[("k", ki), ("order", o)],
            &lhs,
            &bipoly_series(&h_t(2 * ki)?, order),
        ));
    }
    // h_{2k+1} = x t h_{2k} + h_{2k+2}
    let xt = BiPoly::monomial(t.clone(), 1);
    for k in 1..=k_max.saturating_sub(1) / 2 {
        let ki = k as i64;
        let rhs = xt.mul_ref(&h_t(2 * ki)?).add_ref(&h_t(2 * ki + 2)?);
        suite.push(CheckReport::equal(
            "h.odd-recurrence",
            &[("k", ki)],
            &h_t(2 * ki + 1)?,
            &rhs,
            BiPoly::render,
        ));
    }
    Ok(suite)
}

fn bipoly_series(p: &BiPoly, order: usize) -> Series<UniPoly> {
    Series::from_poly(p, order)
}

/// Path weights against mixed convolution powers for all `(k, n)` with
/// `2n + k - 1 <= length_max`, plus enumeration against the step-recurrence
/// table for `j <= length_max`, heights `<= height_max`.
pub fn check_paths(oracle: &PathOracle, length_max: usize, height_max: usize) -> Result<Suite> {
    let mut suite = Suite::new();
    for k in 1..=length_max + 1 {
        for n in 0..=(length_max + 1 - k) / 2 {
            suite.push(oracle.prop1_check(k, n)?);
        }
    }
    let table = a_weight_table(length_max);
    for (j, row) in table.iter().enumerate() {
        for h in 0..=height_max {
            let rec = row.get(h).cloned().unwrap_or_else(UniPoly::zero);
            let brute = oracle.a_weight(j, h)?;
            suite.push(poly_report(
                "paths.recurrence",
                &[("j", j as i64), ("k", h as i64)],
                &brute,
                &rec,
            ));
        }
    }
    Ok(suite)
}
