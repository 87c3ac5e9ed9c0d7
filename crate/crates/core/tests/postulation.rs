mod common;

use common::hilbert_burch;
use halphen::exact_linalg::{PrimeField, DEFAULT_PRIME};
use halphen::postulation::{h0_ideal, h0_ideal_retry, h0_quadric, Component, Fe, QPoint, SchemeSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn field() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME).unwrap()
}

fn curve(t: usize) -> Component {
    Component::DeterminantalCurve { t, matrix: None }
}

fn binom3(n: usize) -> usize {
    n * (n - 1) * (n - 2) / 6
}

#[test]
fn determinantal_curves_follow_their_resolution() {
    let f = field();
    for t in 1..=5usize {
        for s in (t - 1)..=(t + 3) {
            for seed in 0..3 {
                let r = h0_ideal(&SchemeSpec::new(vec![curve(t)]), s as u32, &f, seed).unwrap();
                assert!(!r.inconclusive);
                assert_eq!(r.h0 as i64, hilbert_burch(t as i64, s as i64), "t={t} s={s} seed={seed}");
            }
        }
    }
}

#[test]
fn disjoint_pairs_have_no_forms_at_the_critical_degree() {
    let f = field();
    for (t, k) in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)] {
        let z = SchemeSpec::new(vec![curve(t), curve(k)]);
        let s = (t + k - 1) as u32;
        assert_eq!(h0_ideal_retry(&z, s, &f, 0).unwrap().h0, 0, "t={t} k={k}");
        // One degree up the union still imposes independent conditions.
        let expected = common::i_oracle(t as i64, k as i64, &common::big(s as i64 + 1));
        assert_eq!(halphen::Big::from(h0_ideal_retry(&z, s + 1, &f, 0).unwrap().h0), expected, "t={t} k={k}");
    }
}

fn random_points(rng: &mut ChaCha8Rng, f: &PrimeField, n: usize) -> Vec<QPoint> {
    let mut p1 = || [Fe(f.random(rng)), Fe(f.random_nonzero(rng))];
    (0..n).map(|_| QPoint { uv: p1(), wz: p1() }).collect()
}

#[test]
fn general_points_on_the_quadric_have_maximal_rank() {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for a in 0..=6u32 {
        for b in 0..=6u32 {
            for n in [0usize, 1, 7, 20, 35, 49] {
                let pts = random_points(&mut rng, &f, n);
                let r = h0_quadric(&f, &pts, (&[], &[]), (a, b)).unwrap();
                let expected = ((a + 1) * (b + 1)) as i64 - n as i64;
                assert_eq!(r.h0 as i64, expected.max(0), "a={a} b={b} n={n}");
            }
        }
    }
}

#[test]
fn general_points_in_space_have_maximal_rank() {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for s in 0..=5u32 {
        for n in [1usize, 4, 10, 30, 56] {
            let comps = (0..n)
                .map(|_| Component::Point { coords: [0; 4].map(|_| Fe(rng.gen_range(1..DEFAULT_PRIME))) })
                .collect();
            let r = h0_ideal(&SchemeSpec::new(comps), s, &f, 0).unwrap();
            let expected = binom3(s as usize + 3) as i64 - n as i64;
            assert_eq!(r.h0 as i64, expected.max(0), "s={s} n={n}");
        }
    }
}

#[test]
fn small_primes_still_give_answers() {
    let f = PrimeField::new(32_003).unwrap();
    let r = h0_ideal_retry(&SchemeSpec::new(vec![curve(2)]), 2, &f, 1).unwrap();
    assert_eq!(r.h0, 3);
    assert!(PrimeField::new(32_004).is_err());
}
