use catalan_hankel::catalanseq::{catalan_conv_series, lucas, MixedPowers};
use catalan_hankel::exactring::binomial;
use catalan_hankel::hankel::{build_hankel, det_fraction_free, SquareMatrix};
use catalan_hankel::{Integer, Ring, Series, UniPoly};
use proptest::prelude::*;

fn int() -> impl Strategy<Value = Integer> {
    (-50i64..=50).prop_map(Integer::from)
}

fn poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-9i64..=9, 0..5).prop_map(|cs| UniPoly::from_i64s(&cs))
}

fn nonzero_poly() -> impl Strategy<Value = UniPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn unit_series() -> impl Strategy<Value = Series<Integer>> {
    prop::collection::vec(-9i64..=9, 0..16).prop_map(|tail| {
        let mut cs = vec![Integer::from(1)];
        cs.extend(tail.into_iter().map(Integer::from));
        Series::from_coeffs(cs)
    })
}

fn int_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<Integer>>> {
    (0..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec((-9i64..=9).prop_map(Integer::from), n), n))
}

fn poly_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<UniPoly>>> {
    (0..=max).prop_flat_map(|n| {
        prop::collection::vec(
            prop::collection::vec(
                prop::collection::vec(-4i64..=4, 0..3).prop_map(|c| UniPoly::from_i64s(&c)),
                n,
            ),
            n,
        )
    })
}

fn cofactor<R: Ring>(m: &[Vec<R>]) -> R {
    if m.is_empty() {
        return R::one();
    }
    let mut acc = R::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<R>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul_ref(&cofactor(&minor));
        acc = if j % 2 == 0 {
            acc.add_ref(&term)
        } else {
            acc.sub_ref(&term)
        };
    }
    acc
}

proptest! {
    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, UniPoly::zero());
        prop_assert_eq!(&a * &UniPoly::one(), a.clone());
    }

    #[test]
    fn exact_div_round_trip(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn eval_is_a_homomorphism(a in poly(), b in poly(), v in -4i64..=4) {
        let v = Integer::from(v);
        prop_assert_eq!((&a * &b).eval(&v), a.eval(&v) * b.eval(&v));
        prop_assert_eq!((&a + &b).eval(&v), a.eval(&v) + b.eval(&v));
    }

    #[test]
    fn pascal_rule(n in 1i64..60, k in -2i64..62) {
        prop_assert_eq!(
            binomial(n, k).unwrap(),
            binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap()
        );
    }

    #[test]
    fn reciprocal_inverts(s in unit_series()) {
        let r = s.reciprocal().unwrap();
        prop_assert_eq!(s.mul_ref(&r), Series::one(s.order()));
    }

    #[test]
    fn pow_adds_exponents(s in unit_series(), i in 0u32..4, j in 0u32..4) {
        prop_assert_eq!(s.pow(i).mul_ref(&s.pow(j)), s.pow(i + j));
    }

    #[test]
    fn coefficient_is_linear(a in unit_series(), b in unit_series(), c in int()) {
        let order = a.order().min(b.order());
        let sum = a.scale(&c).add_ref(&b);
        for n in 0..order as i64 {
            prop_assert_eq!(
                sum.coefficient(n).unwrap(),
                &c * a.coefficient(n).unwrap() + b.coefficient(n).unwrap()
            );
        }
    }

    #[test]
    fn det_matches_cofactor_int(rows in int_matrix(5)) {
        let want = cofactor(&rows);
        prop_assert_eq!(det_fraction_free(&SquareMatrix::from_rows(rows)).unwrap(), want);
    }

    #[test]
    fn det_matches_cofactor_poly(rows in poly_matrix(4)) {
        let want = cofactor(&rows);
        prop_assert_eq!(det_fraction_free(&SquareMatrix::from_rows(rows)).unwrap(), want);
    }

    #[test]
    fn row_swap_negates(rows in int_matrix(5), a in 0usize..5, b in 0usize..5) {
        prop_assume!(rows.len() >= 2);
        let (a, b) = (a % rows.len(), b % rows.len());
        prop_assume!(a != b);
        let m = SquareMatrix::from_rows(rows);
        let mut swapped = m.clone();
        swapped.swap_rows(a, b);
        prop_assert_eq!(det_fraction_free(&swapped).unwrap(), -det_fraction_free(&m).unwrap());
    }

    #[test]
    fn det_commutes_with_evaluation(rows in poly_matrix(4), v in -3i64..=3) {
        let v = Integer::from(v);
        let m = SquareMatrix::from_rows(rows);
        let at = m.map(|p| p.eval(&v));
        prop_assert_eq!(det_fraction_free(&m).unwrap().eval(&v), det_fraction_free(&at).unwrap());
    }

    #[test]
    fn hankel_is_constant_on_antidiagonals(k in 1i64..5, shift in -4i64..4, n in 0usize..7) {
        let s = catalan_conv_series(k, 2 * n + 8).unwrap();
        let m = build_hankel(|i| s.coeffs()[i].clone(), shift, n);
        prop_assert!(m.is_hankel());
        for i in 0..n {
            for j in 0..n {
                let idx = (i + j) as i64 + shift;
                let want = if idx < 0 { Integer::from(0) } else { s.coeffs()[idx as usize].clone() };
                prop_assert_eq!(m.get(i, j), &want);
            }
        }
    }

    #[test]
    fn lucas_is_power_sum(x in -4i64..=4, y in -4i64..=4, n in 0usize..12) {
        let (xi, yi) = (Integer::from(x), Integer::from(y));
        let got = lucas(n, &(&xi + &yi), &-(&xi * &yi));
        let want = xi.pow(n as u32) + yi.pow(n as u32);
        prop_assert_eq!(got, want);
    }

    #[test]
    fn mixed_powers_specialize_to_catalan_powers(k in 0usize..7) {
        let mut powers = MixedPowers::new(10);
        let at_one = powers.get(k).map(|p| p.eval(&Integer::from(1)));
        let direct = if k == 0 {
            Series::one(10)
        } else {
            catalan_conv_series(k as i64, 10).unwrap()
        };
        prop_assert_eq!(at_one, direct);
    }
}
