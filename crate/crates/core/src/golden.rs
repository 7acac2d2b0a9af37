//! Published reference values: determinant sequences and the `h_k(x,t)` table.

use crate::catalanseq::{h_t, FamilyId};
use crate::error::Result;
use crate::exactring::{BiPoly, Integer, Ring, UniPoly};
use crate::hankel::{hankel_table, HankelValue};
use crate::report::{CheckReport, Suite};

/// `(K, M, values from N = 0)` for integer determinant sequences.
pub const INT_SEQUENCES: [(u32, i64, [i64; 12]); 4] = [
    (4, -2, [1, 0, 0, -1, -1, 2, 2, -3, -3, 4, 4, -5]),
    (4, 0, [1, 1, -2, -2, 3, 3, -4, -4, 5, 5, -6, -6]),
    (3, -1, [1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0, 1]),
    (3, 0, [1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0]),
];

/// `t^e * q(t)` with `q` given by ascending coefficients, times `sign`.
fn scaled(sign: i64, e: usize, q: &[i64]) -> UniPoly {
    UniPoly::from_i64s(q).shift(e).scale(&Integer::from(sign))
}

/// `(K, M, values from N = 0)` for polynomial determinant sequences.
pub fn poly_sequences() -> Vec<(u32, i64, Vec<UniPoly>)> {
    let one = UniPoly::one();
    let zero = UniPoly::zero();
    vec![
        (
            4,
            -2,
            vec![
                one.clone(),
                zero.clone(),
                zero.clone(),
                scaled(-1, 0, &[1]),
                scaled(-1, 2, &[1]),
                scaled(1, 4, &[1, 0, 1]),
                scaled(1, 8, &[1, 0, 1]),
                scaled(-1, 12, &[1, 0, 1, 0, 1]),
                scaled(-1, 18, &[1, 0, 1, 0, 1]),
                scaled(1, 24, &[1, 0, 1, 0, 1, 0, 1]),
            ],
        ),
        (
            4,
            0,
            vec![
                one.clone(),
                one.clone(),
                scaled(-1, 0, &[1, 0, 1]),
                scaled(-1, 2, &[1, 0, 1]),
                scaled(1, 4, &[1, 0, 1, 0, 1]),
                scaled(1, 8, &[1, 0, 1, 0, 1]),
                scaled(-1, 12, &[1, 0, 1, 0, 1, 0, 1]),
            ],
        ),
        (
            3,
            0,
            vec![
                one.clone(),
                one.clone(),
                scaled(1, 0, &[-1, 1]),
                scaled(1, 2, &[-2, 1]),
                scaled(1, 4, &[1, -3, 1]),
                scaled(1, 8, &[3, -4, 1]),
                scaled(1, 12, &[-1, 6, -5, 1]),
            ],
        ),
        // entries past N = 4 are not reliable in print
        (
            3,
            -1,
            vec![
                one,
                zero,
                scaled(-1, 0, &[1]),
                scaled(-1, 2, &[1]),
                scaled(-1, 4, &[-1, 1]),
            ],
        ),
    ]
}

/// `h_1(x,t), ..., h_6(x,t)`, coefficients of `x^0, x^1, ...` as polynomials in `t`.
pub fn h_table() -> Vec<BiPoly> {
    let rows: [&[&[i64]]; 6] = [
        &[&[1], &[-1, 1]],
        &[&[1], &[-1, -1]],
        &[&[1], &[-2, -1], &[1, -1]],
        &[&[1], &[-2, -2], &[1, 0, 1]],
        &[&[1], &[-3, -2], &[3, 1, 1], &[-1, 1]],
        &[&[1], &[-3, -3], &[3, 3, 3], &[-1, 0, 0, -1]],
    ];
    rows.iter()
        .map(|r| BiPoly::new(r.iter().map(|c| UniPoly::from_i64s(c)).collect()))
        .collect()
}

pub fn check_int_sequences() -> Result<Suite> {
    let mut suite = Suite::new();
    for (k, m, values) in INT_SEQUENCES {
        let got = hankel_table(FamilyId::CatalanConv(k), m, values.len() - 1)?;
        for (n, (g, want)) in got.iter().zip(values).enumerate() {
            let want = HankelValue::Int(Integer::from(want));
            suite.push(CheckReport::equal(
                "golden.int",
                &[("K", k as i64), ("M", m), ("N", n as i64)],
                g,
                &want,
                HankelValue::render,
            ));
        }
    }
    Ok(suite)
}

pub fn check_poly_sequences() -> Result<Suite> {
    let mut suite = Suite::new();
    for (k, m, values) in poly_sequences() {
        let got = hankel_table(FamilyId::NarayanaConv(k), m, values.len() - 1)?;
        for (n, (g, want)) in got.iter().zip(values).enumerate() {
            let want = HankelValue::Poly(want);
            suite.push(CheckReport::equal(
                "golden.poly",
                &[("K", k as i64), ("M", m), ("N", n as i64)],
                g,
                &want,
                HankelValue::render,
            ));
        }
    }
    Ok(suite)
}

pub fn check_h_table() -> Result<Suite> {
    let mut suite = Suite::new();
    for (i, want) in h_table().iter().enumerate() {
        let k = i as i64 + 1;
        suite.push(CheckReport::equal(
            "golden.h",
            &[("k", k)],
            &h_t(k)?,
            want,
            BiPoly::render,
        ));
    }
    Ok(suite)
}

pub fn check_all() -> Result<Suite> {
    let mut suite = check_int_sequences()?;
    suite.extend(check_poly_sequences()?);
    suite.extend(check_h_table()?);
    Ok(suite)
}
