//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
//! All comparisons are exact (tolerance 0); runtime limits are part of each criterion.

mod common;

use std::time::{Duration, Instant};

use common::{big, hilbert_burch, i_oracle};
use halphen::exact_linalg::{PrimeField, DEFAULT_PRIME};
use halphen::lemma_verifier::{catalog, verify, verify_spec, weakened_l53, Budget, BoxSpec};
use halphen::planner::{claim_one, plan, CaseTag, PlanOptions, StepData, StepRecord};
use halphen::postulation::{h0_ideal, horace_check, random_config, Component, SchemeSpec};
use halphen::range_genus::{classify, genus_bound_a, genus_bound_c, RangePair, RangeTag};
use halphen::sequence_engine::{big_i, BaseCurveParams, SequenceTable};
use halphen::Big;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome, u64);

fn params(t: i64, k: i64) -> halphen::BigParams {
    BaseCurveParams::new(big(t), big(k)).unwrap()
}

fn rows_invariant() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut rows = 0u64;
    for _ in 0..1000 {
        let k = rng.gen_range(4..=500i64);
        let t = rng.gen_range(k..=500i64);
        let alpha = [0i64, 2, 202][rng.gen_range(0..3)];
        let s_max = big(t + k + 1 + 2 * 50);
        let table = SequenceTable::build(params(t, k), big(alpha), &s_max).unwrap();
        let a0 = table.rows()[0].a.clone();
        for (j, row) in table.rows().iter().enumerate().skip(1) {
            let rhs = i_oracle(t, k, &row.s) - 1 - &a0 - big(alpha * j as i64);
            let lhs = (&row.s - 1) * &row.a + &row.b;
            if lhs != rhs || row.b < big(0) || row.b > &row.s - 2 {
                return (false, format!("t={t} k={k} alpha={alpha} s={}: {lhs} != {rhs} or b out of range", row.s));
            }
            rows += 1;
        }
    }
    (true, format!("{rows} rows"))
}

fn increment_identity() -> Outcome {
    let mut checked = 0u64;
    for k in 4..=40i64 {
        for t in k..=40 {
            let p = params(t, k);
            let d_tk = big(t * (t + 1) / 2 + k * (k + 1) / 2);
            let start = big(t + k - 1);
            let mut acc = i_oracle(t, k, &start);
            let mut s = start;
            while s <= big(t + k + 39) {
                if big_i(&p, &s).unwrap() != acc {
                    return (false, format!("t={t} k={k} s={s}"));
                }
                // I(s+1) - I(s) = C(s+3, 2) - d_tk
                acc += (&s + 3) * (&s + 2) / 2 - &d_tk;
                s += 1;
                checked += 1;
            }
        }
    }
    let b = BoxSpec::parse("k=4..40,t=k..40,u=0..19").unwrap();
    let r = verify("L5.1", &Budget::Exhaustive(b)).unwrap();
    (r.passed(), format!("{checked} levels telescoped, catalog box {} tuples, {} failures", r.samples_tested, r.failures.len()))
}

const CONSTRUCTION_CHECKS: [&str; 8] = [
    "genus_bracket",
    "y_le_m_minus_7",
    "final_level_identity",
    "e_at_most_201",
    "delta_at_least_202",
    "genus_at_least_26",
    "degree_total",
    "genus_total",
];

fn full_scale_plan() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for m in [1_380_000i64, 1_380_001] {
        let q = m * m + 4 * m + 6;
        let d = (q + 5) / 6;
        let opts = PlanOptions { record: StepRecord::None, ..PlanOptions::default() };
        let p = plan(big(d), big(m), None, opts).unwrap();
        let missing: Vec<_> = CONSTRUCTION_CHECKS
            .iter()
            .filter(|n| !p.check(n).is_some_and(|c| c.pass))
            .copied()
            .collect();
        ok &= p.all_green() && missing.is_empty();
        details.push(format!(
            "m={m} g={} route={:?} all_green={} missing_or_red={:?}",
            p.context.g,
            p.route,
            p.all_green(),
            missing
        ));
    }
    (ok, details.join("; "))
}

fn lemma_sweep() -> Outcome {
    let mut failing = Vec::new();
    let mut total = 0u64;
    for spec in catalog() {
        for seed in 0..3 {
            let r = verify_spec(&spec, &Budget::standard(seed)).unwrap();
            total += r.samples_tested;
            if !r.passed() {
                let w = &r.failures[0];
                let tuple: Vec<String> = w.tuple.iter().map(|(k, v)| format!("{k}={v}")).collect();
                failing.push(format!("{} seed {seed}: {} failures, first {} ({})", spec.id, r.failures.len(), tuple.join(","), w.detail));
            }
        }
    }
    let weak = verify_spec(&weakened_l53(), &Budget::standard(0)).unwrap();
    let caught = !weak.failures.is_empty();
    let ok = failing.is_empty() && caught;
    let mut detail = format!("{} ids, {total} samples tested, weakened variant: {} witnesses", catalog().len(), weak.failures.len());
    if !failing.is_empty() {
        detail += &format!("; failing: {}", failing.join("; "));
    }
    (ok, detail)
}

fn postulation() -> Outcome {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let curve = |t: usize| Component::DeterminantalCurve { t, matrix: None };
    let mut n = 0;
    for seed in 0..3u64 {
        for t in 2..=5usize {
            let r = h0_ideal(&SchemeSpec::new(vec![curve(t)]), t as u32 - 1, &f, seed).unwrap();
            if r.inconclusive || r.h0 != 0 {
                return (false, format!("h0(I_C{t}({})) = {} seed {seed}", t - 1, r.h0));
            }
            for s in t..=t + 3 {
                let r = h0_ideal(&SchemeSpec::new(vec![curve(t)]), s as u32, &f, seed).unwrap();
                if r.inconclusive || r.h0 as i64 != hilbert_burch(t as i64, s as i64) {
                    return (false, format!("t={t} s={s} seed {seed}: h0={}", r.h0));
                }
                n += 1;
            }
        }
        for (t, k) in [(1usize, 1usize), (2, 1), (2, 2), (3, 2), (3, 3)] {
            let r = h0_ideal(&SchemeSpec::new(vec![curve(t), curve(k)]), (t + k - 1) as u32, &f, seed).unwrap();
            if r.inconclusive || r.h0 != 0 {
                return (false, format!("pair ({t},{k}) seed {seed}: h0={}", r.h0));
            }
            n += 1;
        }
    }
    (true, format!("{n} resolution and union checks over 3 seeds"))
}

fn horace_bookkeeping() -> Outcome {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut additive = 0;
    for i in 0..100u64 {
        let cfg = random_config(&f, &mut rng, 8);
        let r = horace_check(&cfg, None, None, &f, i).unwrap();
        if r.inconclusive || !r.restriction_identity || !r.trace_bound {
            return (false, format!("config {i}: {r:?}"));
        }
        additive += r.additive as u32;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(60);
    let cases = [CaseTag::A, CaseTag::B, CaseTag::C, CaseTag::EmptyGrid];
    for i in 0..1000 {
        let k = rng.gen_range(1..100_000i64);
        let t = k + rng.gen_range(0..100_000i64);
        let alpha = big(rng.gen_range(0..1000));
        let p = params(t, k);
        let s = big(t + k + 1 + 2 * rng.gen_range(0..10_000i64));
        let a = big(rng.gen_range(0..i64::MAX));
        let b = big(rng.gen_range(0..t + k));
        let m: Big = (&s + 3) * (&s + 3) - 2 * (&p.d_tk + &a) - &alpha + &b;
        let (delta, b_next) = m.div_mod_floor(&(&s + 1));
        let e = big(rng.gen_range(1..=201));
        let case = cases[rng.gen_range(0..4)];
        let step = StepData { s: s.clone(), a, b, b_next, delta };
        let c = claim_one(&p, &alpha, &step, &e, case);
        if !c.holds() {
            return (false, format!("tuple {i}: {c:?}"));
        }
    }
    (true, format!("100 configs: restriction identity and trace bound hold, naive count additive in {additive}; 1000 count identities"))
}

fn range_partition() -> Outcome {
    let mut pairs = 0u64;
    for m in 3..=200i64 {
        for d in 1..=m * m + 1 {
            let pair = RangePair::new(d, m).unwrap();
            let empty = classify(&pair).tag == RangeTag::Empty;
            if empty != (genus_bound_a(&pair) < 0) {
                return (false, format!("d={d} m={m}"));
            }
            pairs += 1;
        }
    }
    for m in 2..=100i64 {
        for d in (m * m - m + 1)..=(m * m + 3 * m) {
            let pair = RangePair::new(big(d), big(m)).unwrap();
            if classify(&pair).tag != RangeTag::C {
                continue;
            }
            let r = (m - d % m) % m;
            let num = big(d) * big(d + m * m - 4 * m) - big(r * (m - r) * (m - 1));
            let (q, rem) = num.div_rem(&big(2 * m));
            let got = genus_bound_c(&pair).map(|c| c.genus);
            if rem != big(0) || got.ok() != Some(q + 1) {
                return (false, format!("Range C d={d} m={m}"));
            }
            pairs += 1;
        }
    }
    (true, format!("{pairs} pairs"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("table rows satisfy the closed-form invariant", rows_invariant, 10),
        ("closed form of I(s) equals telescoped increments", increment_identity, 5),
        ("full-scale plan at the lowest Range A degree is green", full_scale_plan, 60),
        ("lemma catalog sweep and soundness self-test", lemma_sweep, 300),
        ("postulation of determinantal curves and disjoint pairs", postulation, 120),
        ("Horace bookkeeping and trace count identity", horace_bookkeeping, 60),
        ("range partition and Range C integrality", range_partition, 10),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = run();
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(*limit);
        let pass = ok && in_time;
        failed += !pass as u32;
        println!(
            "{} {}. {name} [{:.2}s, limit {limit}s{}] {detail}",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64(),
            if in_time { "" } else { ", exceeded" },
        );
    }
    println!("{} of {} criteria passed", criteria.len() as u32 - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

