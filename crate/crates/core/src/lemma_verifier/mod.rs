//! Numerical lemmas as executable predicates.
//!
//! Every catalog entry pairs a hypothesis with a conclusion over exact
//! integers. `verify` draws seeded random tuples (or walks a box), keeps the
//! ones satisfying the hypothesis and records any conclusion failure as a
//! replayable witness.

mod boxspec;
mod catalog;
mod sample;

pub use boxspec::BoxSpec;
pub use catalog::{catalog, weakened_l53};

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{usage, Result};
use crate::Big;

/// Named integer parameters of one sample.
pub type Tuple = BTreeMap<&'static str, Big>;

pub(crate) type Rng = rand_chacha::ChaCha8Rng;

type Check = fn(&Tuple) -> std::result::Result<(), String>;

/// Below-threshold probe: its own sampler, the hypothesis without the
/// largeness clause, and the bound the clause would have guaranteed.
#[derive(Clone, Copy)]
pub struct Probe {
    pub(crate) sample: fn(&mut Rng) -> Tuple,
    pub(crate) hypothesis: fn(&Tuple) -> bool,
    pub(crate) conclusion: Check,
}

#[derive(Clone, Copy)]
pub struct LemmaSpec {
    pub id: &'static str,
    pub statement: &'static str,
    pub anchor: &'static str,
    /// Discrepancy log carried in the report header.
    pub note: Option<&'static str>,
    /// Variables a box may range over.
    pub box_vars: &'static [&'static str],
    /// Values used when a box leaves a variable unset.
    pub defaults: &'static [(&'static str, i64)],
    pub(crate) sample: fn(&mut Rng) -> Tuple,
    /// Adds derived quantities; `None` if they are undefined for the tuple.
    pub(crate) derive: fn(Tuple) -> Option<Tuple>,
    pub(crate) hypothesis: fn(&Tuple) -> bool,
    pub(crate) conclusion: Check,
    pub(crate) probe: Option<Probe>,
}

impl std::fmt::Debug for LemmaSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LemmaSpec").field("id", &self.id).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Budget {
    Random { samples: u64, seed: u64 },
    Exhaustive(BoxSpec),
}

impl Budget {
    pub fn standard(seed: u64) -> Self {
        Budget::Random { samples: 10_000, seed }
    }

    fn describe(&self) -> Value {
        match self {
            Budget::Random { samples, seed } => json!({"kind": "random", "samples": samples, "seed": seed}),
            Budget::Exhaustive(b) => json!({"kind": "box", "spec": b.source()}),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub index: u64,
    pub tuple: Tuple,
    pub detail: String,
}

impl Witness {
    fn to_json(&self) -> Value {
        let tuple: BTreeMap<&str, String> = self.tuple.iter().map(|(k, v)| (*k, v.to_string())).collect();
        json!({"index": self.index, "tuple": tuple, "detail": self.detail})
    }
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub id: &'static str,
    pub note: Option<&'static str>,
    pub budget: Budget,
    pub samples_drawn: u64,
    pub samples_tested: u64,
    pub failures: Vec<Witness>,
    pub probes_tested: u64,
    /// Failures below a largeness threshold, where nothing is claimed.
    pub informational: Vec<Witness>,
    pub runtime: Duration,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// JSON form; the runtime is left out unless asked for so that reports stay byte-identical.
    pub fn to_json(&self, with_runtime: bool) -> Value {
        let mut v = json!({
            "id": self.id,
            "note": self.note,
            "budget": self.budget.describe(),
            "samples_drawn": self.samples_drawn,
            "samples_tested": self.samples_tested,
            "failures": self.failures.iter().map(Witness::to_json).collect::<Vec<_>>(),
            "probes_tested": self.probes_tested,
            "informational": self.informational.iter().map(Witness::to_json).collect::<Vec<_>>(),
            "verdict": if self.passed() { "pass" } else { "fail" },
        });
        if with_runtime {
            v["runtime_ms"] = json!(self.runtime.as_millis() as u64);
        }
        v
    }
}

/// Look up a catalog entry by id.
pub fn find(id: &str) -> Option<LemmaSpec> {
    catalog().into_iter().find(|l| l.id == id)
}

pub fn verify(id: &str, budget: &Budget) -> Result<LemmaReport> {
    let spec = find(id).ok_or_else(|| usage(format!("unknown lemma id {id}")))?;
    verify_spec(&spec, budget)
}

/// Stream tags keep probe draws independent of the main draws.
const STREAM_MAIN: u64 = 0;
const STREAM_PROBE: u64 = 1;

fn rng_for(seed: u64, stream: u64, index: u64) -> Rng {
    use rand::SeedableRng;
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    bytes[8..16].copy_from_slice(&stream.to_le_bytes());
    bytes[16..24].copy_from_slice(&index.to_le_bytes());
    Rng::from_seed(bytes)
}

enum Eval {
    Skipped,
    Passed,
    Failed(Witness),
}

fn evaluate(
    index: u64,
    raw: Tuple,
    derive: fn(Tuple) -> Option<Tuple>,
    hypothesis: fn(&Tuple) -> bool,
    conclusion: Check,
) -> Eval {
    let Some(tuple) = derive(raw) else {
        return Eval::Skipped;
    };
    if !hypothesis(&tuple) {
        return Eval::Skipped;
    }
    match conclusion(&tuple) {
        Ok(()) => Eval::Passed,
        Err(detail) => Eval::Failed(Witness { index, tuple, detail }),
    }
}

fn tally(evals: Vec<Eval>) -> (u64, Vec<Witness>) {
    let mut tested = 0;
    let mut failures = Vec::new();
    for e in evals {
        match e {
            Eval::Skipped => {}
            Eval::Passed => tested += 1,
            Eval::Failed(w) => {
                tested += 1;
                failures.push(w);
            }
        }
    }
    (tested, failures)
}

pub fn verify_spec(spec: &LemmaSpec, budget: &Budget) -> Result<LemmaReport> {
    let start = Instant::now();
    let (drawn, tested, failures, probes_tested, informational) = match budget {
        Budget::Random { samples, seed } => {
            if *samples == 0 {
                return Err(usage("sample budget must be positive"));
            }
            let evals: Vec<Eval> = (0..*samples)
                .into_par_iter()
                .map(|i| {
                    let mut rng = rng_for(*seed, STREAM_MAIN, i);
                    evaluate(i, (spec.sample)(&mut rng), spec.derive, spec.hypothesis, spec.conclusion)
                })
                .collect();
            let (tested, failures) = tally(evals);
            let (probes_tested, informational) = match spec.probe {
                Some(probe) => {
                    let n = (*samples / 10).max(1);
                    let evals: Vec<Eval> = (0..n)
                        .into_par_iter()
                        .map(|i| {
                            let mut rng = rng_for(*seed, STREAM_PROBE, i);
                            evaluate(i, (probe.sample)(&mut rng), spec.derive, probe.hypothesis, probe.conclusion)
                        })
                        .collect();
                    tally(evals)
                }
                None => (0, Vec::new()),
            };
            (*samples, tested, failures, probes_tested, informational)
        }
        Budget::Exhaustive(b) => {
            let tuples = b.enumerate(spec)?;
            let n = tuples.len() as u64;
            let evals: Vec<Eval> = tuples
                .into_par_iter()
                .enumerate()
                .map(|(i, t)| evaluate(i as u64, t, spec.derive, spec.hypothesis, spec.conclusion))
                .collect();
            let (tested, failures) = tally(evals);
            (n, tested, failures, 0, Vec::new())
        }
    };
    Ok(LemmaReport {
        id: spec.id,
        note: spec.note,
        budget: budget.clone(),
        samples_drawn: drawn,
        samples_tested: tested,
        failures,
        probes_tested,
        informational,
        runtime: start.elapsed(),
    })
}
