mod common;

use common::{big, i_oracle, recursion_rows};
use halphen::sequence_engine::{
    big_i, grid_e, row_closed_form, uv_row, BaseCurveParams, GridOffset, GridRule, GridVariant, SequenceTable,
};
use halphen::{Big, BigParams, Params128, Table128};
use proptest::prelude::*;

fn params(t: i64, k: i64) -> BigParams {
    BaseCurveParams::new(big(t), big(k)).unwrap()
}

fn scan_grid(b: i64, delta: i64, rule: GridRule) -> Option<i64> {
    let thr = |e: i64| match rule.offset {
        GridOffset::Zero => (e - 1) * (delta - e - 1),
        GridOffset::One => (e - 1) * (delta - e),
    };
    if delta < 1 || b < 0 {
        return None;
    }
    match rule.variant {
        GridVariant::AMax => (1..=delta / 2).rev().find(|&e| b > thr(e)),
        GridVariant::BMax => (1..=(delta - 1) / 2).rev().find(|&e| b > thr(e)),
        GridVariant::MinScan => (1..=delta).find(|&e| b <= thr(e)),
    }
}

#[test]
fn table_matches_recursion_oracle() {
    for (t, k, alpha) in [(4, 4, 202), (10, 7, 0), (33, 5, 2), (120, 60, 202)] {
        let s_max = big(t + k + 1 + 2 * 40);
        let table = SequenceTable::build(params(t, k), big(alpha), &s_max).unwrap();
        let oracle = recursion_rows(t, k, alpha, 40);
        assert_eq!(table.rows().len(), oracle.len());
        for (row, (s, a, b, g)) in table.rows().iter().zip(&oracle) {
            assert_eq!((&row.s, &row.a, &row.b, &row.g), (s, a, b, g), "t={t} k={k} alpha={alpha}");
        }
    }
}

#[test]
fn big_i_matches_resolution_count() {
    for t in 1..25 {
        for k in 1..=t {
            let p = params(t, k);
            for s in (t + k - 1)..(t + k + 30) {
                assert_eq!(big_i(&p, &big(s)).unwrap(), i_oracle(t, k, &big(s)));
            }
        }
    }
}

#[test]
fn uv_rows_solve_their_defining_equation() {
    let p = params(40, 25);
    let g = big(123_456);
    for x in (1..200).step_by(2) {
        let r = uv_row(&p, &g, &big(x)).unwrap();
        let x = big(x);
        let rhs = common::choose3(&(&x + 3)) - 3 + &g - &x * &p.d_tk;
        assert_eq!(&x * &r.u + &r.v, rhs);
        assert!(r.v >= big(0) && r.v < x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rows_satisfy_closed_form_invariant(k in 4i64..300, dt in 0i64..300, alpha in prop::sample::select(vec![0i64, 2, 202]), steps in 1usize..40) {
        let t = k + dt;
        let p = params(t, k);
        let s_max = big(t + k + 1 + 2 * steps as i64);
        let table = SequenceTable::build(p, big(alpha), &s_max).unwrap();
        let a0 = table.rows()[0].a.clone();
        for (j, row) in table.rows().iter().enumerate().skip(1) {
            let rhs = i_oracle(t, k, &row.s) - 1 - &a0 - big(alpha) * big(j as i64);
            prop_assert_eq!(&(&row.s - 1) * &row.a + &row.b, rhs);
            prop_assert!(row.b >= big(0) && row.b <= &row.s - 2);
        }
    }

    #[test]
    fn closed_form_agrees_with_recursion(k in 1i64..200, dt in 0i64..200, alpha in 0i64..400, j in 0i64..60) {
        let t = k + dt;
        let p = params(t, k);
        let s = big(t + k + 1 + 2 * j);
        let table = SequenceTable::build(p.clone(), big(alpha), &s).unwrap();
        prop_assert_eq!(table.last(), &row_closed_form(&p, &big(alpha), &s).unwrap());
    }

    #[test]
    fn grid_bisection_matches_scan(b in 0i64..5000, delta in 0i64..400,
                                   variant in prop::sample::select(vec![GridVariant::AMax, GridVariant::BMax, GridVariant::MinScan]),
                                   offset in prop::sample::select(vec![GridOffset::Zero, GridOffset::One])) {
        let rule = GridRule::new(variant, offset);
        prop_assert_eq!(grid_e(&b, &delta, rule), scan_grid(b, delta, rule));
    }

    #[test]
    fn i128_and_bigint_tables_agree(k in 1i64..2000, dt in 0i64..2000, alpha in 0i64..1000, steps in 0i64..30) {
        let t = k + dt;
        let s_max = t + k + 1 + 2 * steps;
        let small = Table128::build(Params128::from_i64(t, k).unwrap(), alpha as i128, &(s_max as i128)).unwrap();
        let bigt = SequenceTable::build(params(t, k), big(alpha), &big(s_max)).unwrap();
        for (x, y) in small.rows().iter().zip(bigt.rows()) {
            prop_assert_eq!(Big::from(x.a), y.a.clone());
            prop_assert_eq!(Big::from(x.b), y.b.clone());
            prop_assert_eq!(Big::from(x.g), y.g.clone());
            prop_assert_eq!(x.in_model, y.in_model);
        }
    }
}
