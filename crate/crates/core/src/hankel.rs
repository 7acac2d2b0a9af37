//! Shifted, zero-padded Hankel matrices and exact fraction-free determinants.

use serde_json::{json, Value};

use crate::catalanseq::{catalan_conv, FamilyId, MixedPowers};
use crate::error::{Error, Result};
use crate::exactring::{Integer, Ring, UniPoly};

/// Extra series coefficients computed beyond the largest Hankel index.
pub const ORDER_MARGIN: usize = 2;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SquareMatrix<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> SquareMatrix<R> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { n, entries }
    }

    /// Panics unless every row has `rows.len()` entries.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        SquareMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.n {
                self.entries.swap(a * self.n + j, b * self.n + j);
            }
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SquareMatrix<S> {
        SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Constant along every anti-diagonal.
    pub fn is_hankel(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == 0 || j + 1 == self.n || self.get(i, j) == self.get(i - 1, j + 1)))
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(R::is_zero)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.n)
            .map(|i| Value::Array(self.row(i).iter().map(R::to_json).collect()))
            .collect();
        json!({ "n": self.n, "rows": rows })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("matrix needs a non-negative integer \"n\"".into()))? as usize;
        let rows = v
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("matrix needs a \"rows\" array".into()))?;
        if rows.len() != n {
            return Err(Error::Json(format!("matrix n = {n} but {} rows", rows.len())));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let row = row
                .as_array()
                .filter(|r| r.len() == n)
                .ok_or_else(|| Error::Json(format!("each row needs {n} entries")))?;
            for e in row {
                entries.push(R::from_json(e)?);
            }
        }
        Ok(SquareMatrix { n, entries })
    }
}

/// `N x N` matrix with entry `(i, j) = seq(i + j + shift)`; `seq` is only
/// consulted for non-negative indices, negative ones read as zero.
pub fn build_hankel<R: Ring>(seq: impl Fn(usize) -> R, shift: i64, n: usize) -> SquareMatrix<R> {
    let values: Vec<R> = (0..(2 * n).saturating_sub(1))
        .map(|d| {
            let idx = d as i64 + shift;
            if idx < 0 {
                R::zero()
            } else {
                seq(idx as usize)
            }
        })
        .collect();
    SquareMatrix::from_fn(n, |i, j| values[i + j].clone())
}

/// Exact determinant by one-step Bareiss elimination.
///
/// Every division is by the previous pivot and is exact in any integral
/// domain; a remainder is reported as [`Error::NonExactDivision`]. Zero pivots
/// are handled by swapping in a lower row; if none exists the determinant is 0.
pub fn det_fraction_free<R: Ring>(m: &SquareMatrix<R>) -> Result<R> {
    let n = m.size();
    if n == 0 {
        return Ok(R::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let lead = a.get(i, k).clone();
            for j in k + 1..n {
                let num = a.get(i, j).mul_ref(&pivot).sub_ref(&lead.mul_ref(a.get(k, j)));
                a.entries[i * n + j] = num.exact_div(&prev)?;
            }
            a.entries[i * n + k] = R::zero();
        }
        prev = pivot;
    }
    let det = a.get(n - 1, n - 1).clone();
    Ok(if negate { det.neg_ref() } else { det })
}

/// One shifted Hankel determinant `det(a_{i+j+shift})_{i,j<size}` of a
/// convolution-power family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HankelSpec {
    pub family: FamilyId,
    pub shift: i64,
    pub size: usize,
}

/// Determinant value in the family's scalar ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HankelValue {
    Int(Integer),
    Poly(UniPoly),
}

impl HankelValue {
    pub fn render(&self) -> String {
        match self {
            HankelValue::Int(v) => v.render(),
            HankelValue::Poly(p) => p.render(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            HankelValue::Int(v) => v.to_json(),
            HankelValue::Poly(p) => p.to_json(),
        }
    }
}

impl HankelSpec {
    pub fn new(family: FamilyId, shift: i64, size: i64) -> Result<Self> {
        if size < 0 {
            return Err(Error::NegativeSize(size));
        }
        Ok(HankelSpec {
            family,
            shift,
            size: size as usize,
        })
    }

    /// Largest sequence index the matrix reads, `None` when every entry is
    /// padding or the matrix is empty.
    pub fn max_index(&self) -> Option<usize> {
        if self.size == 0 {
            return None;
        }
        let top = 2 * (self.size as i64 - 1) + self.shift;
        (top >= 0).then_some(top as usize)
    }

    /// Series order needed to fill the matrix, with [`ORDER_MARGIN`].
    pub fn required_order(&self) -> usize {
        self.max_index().map_or(0, |i| i + 1) + ORDER_MARGIN
    }

    pub fn determinant(&self) -> Result<HankelValue> {
        let k = self.family.k() as i64;
        match self.family {
            FamilyId::CatalanConv(_) => catalan_hankel_det(k, self.shift, self.size as i64).map(HankelValue::Int),
            FamilyId::NarayanaConv(_) => narayana_hankel_det(k, self.shift, self.size as i64).map(HankelValue::Poly),
        }
    }
}

/// `D_{K,M}(N) = det(C_{K, i+j+M})_{i,j<N}`, with `D_{K,M}(0) = 1`.
pub fn catalan_hankel_det(k: i64, shift: i64, size: i64) -> Result<Integer> {
    let spec = HankelSpec::new(FamilyId::catalan(k)?, shift, size)?;
    let m = build_hankel(|i| catalan_conv(k, i as i64).expect("k checked"), shift, spec.size);
    det_fraction_free(&m)
}

/// `D_{K,M,t}(N) = det(C_{K, i+j+M}(t))_{i,j<N}`, with `D_{K,M,t}(0) = 1`.
pub fn narayana_hankel_det(k: i64, shift: i64, size: i64) -> Result<UniPoly> {
    let spec = HankelSpec::new(FamilyId::narayana(k)?, shift, size)?;
    let mut powers = MixedPowers::new(spec.required_order());
    let m = narayana_hankel_matrix(&mut powers, k as usize, shift, spec.size)?;
    det_fraction_free(&m)
}

/// The matrix `(C_{K, i+j+M}(t))` built from a shared memo of mixed powers.
/// Errors if the memo's order is too short for the requested size.
pub fn narayana_hankel_matrix(
    powers: &mut MixedPowers,
    k: usize,
    shift: i64,
    size: usize,
) -> Result<SquareMatrix<UniPoly>> {
    let spec = HankelSpec::new(FamilyId::narayana(k as i64)?, shift, size as i64)?;
    if let Some(top) = spec.max_index() {
        if top >= powers.order() {
            return Err(Error::BeyondTruncation {
                index: top as i64,
                order: powers.order(),
            });
        }
    }
    let series = powers.get(k);
    Ok(build_hankel(|i| series.coeffs()[i].clone(), shift, size))
}

/// `D(0), ..., D(size_max)` for one family and shift.
pub fn hankel_table(family: FamilyId, shift: i64, size_max: usize) -> Result<Vec<HankelValue>> {
    let k = family.k() as usize;
    match family {
        FamilyId::CatalanConv(_) => (0..=size_max)
            .map(|n| catalan_hankel_det(k as i64, shift, n as i64).map(HankelValue::Int))
            .collect(),
        FamilyId::NarayanaConv(_) => {
            let top = HankelSpec {
                family,
                shift,
                size: size_max,
            };
            let mut powers = MixedPowers::new(top.required_order());
            (0..=size_max)
                .map(|n| {
                    let m = narayana_hankel_matrix(&mut powers, k, shift, n)?;
                    det_fraction_free(&m).map(HankelValue::Poly)
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalanseq::catalan;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    fn imat(rows: &[&[i64]]) -> SquareMatrix<Integer> {
        SquareMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn build_examples() {
        let empty = build_hankel(|i| catalan(i as i64), 0, 0);
        assert_eq!(empty.size(), 0);
        let padded = build_hankel(|i| catalan_conv(4, i as i64).unwrap(), -2, 2);
        assert_eq!(padded, imat(&[&[0, 0], &[0, 1]]));
        let m = build_hankel(|i| catalan(i as i64), 0, 3);
        assert_eq!(m, imat(&[&[1, 1, 2], &[1, 2, 5], &[2, 5, 14]]));
        assert!(m.is_hankel());
    }

    #[test]
    fn det_examples() {
        assert_eq!(
            det_fraction_free(&SquareMatrix::<Integer>::identity(4)).unwrap(),
            int(1)
        );
        assert_eq!(det_fraction_free(&imat(&[&[1, 1], &[1, 2]])).unwrap(), int(1));
        assert_eq!(det_fraction_free(&imat(&[])).unwrap(), int(1));
        assert_eq!(det_fraction_free(&imat(&[&[0, 1], &[1, 0]])).unwrap(), int(-1));
        assert_eq!(det_fraction_free(&imat(&[&[0, 1], &[0, 3]])).unwrap(), int(0));
        let p = |cs: &[i64]| UniPoly::from_i64s(cs);
        let m = SquareMatrix::from_rows(vec![vec![p(&[1]), p(&[1, 1])], vec![p(&[1, 1]), p(&[1, 3, 1])]]);
        // (1+3t+t^2) - (1+t)^2
        assert_eq!(det_fraction_free(&m).unwrap(), p(&[0, 1]));
    }

    #[test]
    fn catalan_hankel_is_one() {
        for n in 0..=10 {
            let m = build_hankel(|i| catalan(i as i64), 0, n);
            assert_eq!(det_fraction_free(&m).unwrap(), int(1));
        }
    }

    #[test]
    fn d_int_examples() {
        assert_eq!(catalan_hankel_det(4, -2, 5).unwrap(), int(2));
        assert_eq!(catalan_hankel_det(3, 0, 3).unwrap(), int(-1));
        for k in 1..=4 {
            for m in -3..=3 {
                assert_eq!(catalan_hankel_det(k, m, 0).unwrap(), int(1));
            }
        }
        assert_eq!(catalan_hankel_det(0, 0, 1), Err(Error::InvalidConvolutionIndex(0)));
        assert_eq!(catalan_hankel_det(1, 0, -1), Err(Error::NegativeSize(-1)));
    }

    #[test]
    fn d_poly_examples() {
        let p = |cs: &[i64]| UniPoly::from_i64s(cs);
        assert_eq!(narayana_hankel_det(4, 0, 2).unwrap(), p(&[-1, 0, -1]));
        assert_eq!(narayana_hankel_det(3, -1, 3).unwrap(), p(&[0, 0, -1]));
        assert_eq!(narayana_hankel_det(2, 5, 0).unwrap(), UniPoly::one());
    }

    #[test]
    fn d_poly_at_one_is_d_int() {
        for k in 1..=4 {
            for m in -3..=3 {
                for n in 0..=6 {
                    let poly = narayana_hankel_det(k, m, n).unwrap();
                    assert_eq!(
                        poly.eval(&int(1)),
                        catalan_hankel_det(k, m, n).unwrap(),
                        "k={k} m={m} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn short_memo_is_rejected() {
        let mut powers = MixedPowers::new(3);
        assert!(matches!(
            narayana_hankel_matrix(&mut powers, 2, 0, 3),
            Err(Error::BeyondTruncation { index: 4, order: 3 })
        ));
    }

    #[test]
    fn matrix_json() {
        let m = imat(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.to_json().to_string(), r#"{"n":2,"rows":[[1,2],[3,4]]}"#);
        assert_eq!(SquareMatrix::<Integer>::from_json(&m.to_json()).unwrap(), m);
        assert!(SquareMatrix::<Integer>::from_json(&json!({"n": 2, "rows": [[1]]})).is_err());
    }

    #[test]
    fn table_matches_single_determinants() {
        let fam = FamilyId::narayana(3).unwrap();
        let table = hankel_table(fam, -1, 5).unwrap();
        for (n, v) in table.iter().enumerate() {
            assert_eq!(*v, HankelValue::Poly(narayana_hankel_det(3, -1, n as i64).unwrap()));
        }
    }
}
