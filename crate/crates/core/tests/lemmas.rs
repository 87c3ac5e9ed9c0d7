use halphen::lemma_verifier::{catalog, find, verify, verify_spec, weakened_l53, Budget, BoxSpec};
use proptest::prelude::*;

fn json(id: &str, budget: &Budget) -> String {
    verify(id, budget).unwrap().to_json(false).to_string()
}

#[test]
fn small_budget_passes_for_sound_entries() {
    for spec in catalog() {
        if spec.id == "L5.9" {
            continue;
        }
        let r = verify_spec(&spec, &Budget::Random { samples: 300, seed: 11 }).unwrap();
        assert!(r.passed(), "{}: {:?}", spec.id, r.failures.first());
        assert!(r.samples_tested > 0, "{} tested nothing", spec.id);
    }
}

#[test]
fn l59_fails_at_alpha_zero_only() {
    let at = |alpha: u32| {
        let b = BoxSpec::parse(&format!("k=3..6,t=k..k+150,alpha={alpha},steps=4")).unwrap();
        verify("L5.9", &Budget::Exhaustive(b)).unwrap()
    };
    let zero = at(0);
    assert!(!zero.passed());
    assert_eq!(zero.failures[0].tuple["alpha"], 0.into());
    for alpha in 1..4 {
        assert!(at(alpha).passed(), "alpha={alpha}");
    }
}

#[test]
fn weakened_constant_is_caught() {
    let r = verify_spec(&weakened_l53(), &Budget::standard(0)).unwrap();
    assert!(!r.failures.is_empty());
}

#[test]
fn report_does_not_depend_on_thread_count() {
    let budget = Budget::Random { samples: 2_000, seed: 3 };
    let with = |n: usize| {
        rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap().install(|| json("L8.4", &budget))
    };
    assert_eq!(with(1), with(4));
}

#[test]
fn unknown_ids_and_empty_budgets_are_usage_errors() {
    assert!(matches!(verify("L0.0", &Budget::standard(0)), Err(halphen::Error::Usage(_))));
    assert!(matches!(verify("L5.1", &Budget::Random { samples: 0, seed: 0 }), Err(halphen::Error::Usage(_))));
    assert!(find("L5.3").is_some());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn seeded_reports_are_reproducible(seed in 0u64..1_000_000, idx in 0usize..22) {
        let ids: Vec<_> = catalog().iter().map(|l| l.id).collect();
        let id = ids[idx % ids.len()];
        let budget = Budget::Random { samples: 200, seed };
        prop_assert_eq!(json(id, &budget), json(id, &budget));
    }

    #[test]
    fn box_reports_are_reproducible(kmax in 1i64..12, span in 0i64..20, steps in 1i64..6) {
        let b = BoxSpec::parse(&format!("k=1..{kmax},t=k..k+{span},steps={steps}")).unwrap();
        let budget = Budget::Exhaustive(b);
        let first = verify("L5.1", &budget).unwrap();
        prop_assert!(first.passed());
        prop_assert_eq!(first.samples_tested as i64, kmax * (span + 1) * steps);
        prop_assert_eq!(first.to_json(false).to_string(), json("L5.1", &budget));
    }
}
