//! Command-line front end.
//!
//! Every report is a JSON object `{"config": ..., "result": ...}` with sorted
//! keys; `classify`, `bound`, `table` and `uv` can also print TSV.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::exact_linalg::{PrimeField, DEFAULT_PRIME};
use crate::lemma_verifier::{self, Budget, BoxSpec};
use crate::planner::{self, Mode, PlanOptions, StepRecord};
use crate::postulation::{self, HoraceConfig, SchemeSpec};
use crate::range_genus::{classify, genus_bound, GenusBound, RangePair, RangeTag};
use crate::sequence_engine::{BaseCurveParams, SequenceTable, UvTable, ALPHA};
use crate::Big;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RangeArg {
    A,
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Strict,
    Exploratory,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StepsArg {
    All,
    AOnly,
    None,
}

#[derive(Debug, Parser)]
#[command(name = "halphen", version, about = "Exact arithmetic for the maximal genus of space curves in Range A")]
struct Cli {
    /// Prime for finite-field computations [env: HALPHEN_PRIME, default 2^61-1]
    #[arg(long, global = true)]
    prime: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Range of (d, m) and the three cut-offs
    Classify { d: Big, m: Big },
    /// Maximal genus bound in Range A or C
    Bound {
        #[arg(value_enum, ignore_case = true)]
        range: RangeArg,
        d: Big,
        m: Big,
    },
    /// Rows (s, a, b, g) of the recursion
    Table {
        t: Big,
        k: Big,
        #[arg(long, default_value_t = Big::from(ALPHA))]
        alpha: Big,
        /// Last level; defaults to t+k+21
        #[arg(long)]
        smax: Option<Big>,
    },
    /// Rows (x, u, v) of the second table
    Uv {
        t: Big,
        k: Big,
        g: Big,
        #[arg(long, default_value_t = Big::from(1))]
        xmin: Big,
        /// Defaults to xmin+20
        #[arg(long)]
        xmax: Option<Big>,
    },
    /// Construction schedule for (d, m) and genus g (default G_A)
    Plan {
        d: Big,
        m: Big,
        g: Option<Big>,
        #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = StepsArg::AOnly)]
        steps: StepsArg,
        #[arg(long, default_value_t = ALPHA)]
        alpha: i64,
    },
    /// Check a catalog lemma (or `all`) on random samples or a box
    VerifyLemma {
        id: String,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long = "box")]
        box_spec: Option<String>,
        /// Include runtimes in the report
        #[arg(long)]
        timing: bool,
    },
    /// h^0(I_Z(s)) for a scheme given as JSON
    Postulate { file: PathBuf, s: u32 },
    /// Residual and trace bookkeeping for a configuration given as JSON
    HoraceDemo {
        file: PathBuf,
        #[arg(long)]
        expect_trace: Option<usize>,
        #[arg(long)]
        expect_residual: Option<usize>,
    },
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutput {
    fn ok(code: i32, stdout: String) -> Self {
        RunOutput { code, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        RunOutput { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

fn from_error(e: Error) -> RunOutput {
    match e {
        Error::Invariant(_) => RunOutput { code: EXIT_FAIL, stdout: String::new(), stderr: format!("error: {e}\n") },
        _ => RunOutput::usage(e),
    }
}

fn prime_from_env() -> Result<u64, String> {
    match std::env::var("HALPHEN_PRIME") {
        Ok(v) => v.trim().parse().map_err(|_| format!("HALPHEN_PRIME={v} is not an integer")),
        Err(_) => Ok(DEFAULT_PRIME),
    }
}

/// Applies `HALPHEN_THREADS` to the global pool; later calls are no-ops.
pub fn init_threads() {
    if let Some(n) = std::env::var("HALPHEN_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn s(v: &Big) -> String {
    v.to_string()
}

fn report(config: Value, result: Value) -> String {
    let mut out = serde_json::to_string_pretty(&json!({"config": config, "result": result})).expect("values serialize");
    out.push('\n');
    out
}

fn tsv(lines: &[Vec<String>]) -> String {
    lines.iter().map(|l| l.join("\t") + "\n").collect()
}

pub fn run<I, A>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => RunOutput::ok(EXIT_OK, text),
                _ => RunOutput { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let prime = match cli.prime.map(Ok).unwrap_or_else(prime_from_env) {
        Ok(p) => p,
        Err(msg) => return RunOutput::usage(msg),
    };
    let args: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let config = json!({
        "args": args,
        "prime": prime,
        "seed": cli.seed,
        "format": match cli.format { Format::Json => "json", Format::Tsv => "tsv" },
    });
    let ctx = Ctx { prime, seed: cli.seed, format: cli.format, config };
    match dispatch(&ctx, cli.command) {
        Ok(out) => out,
        Err(e) => from_error(e),
    }
}

struct Ctx {
    prime: u64,
    seed: u64,
    format: Format,
    config: Value,
}

impl Ctx {
    fn config_with(&self, extra: Value) -> Value {
        let mut c = self.config.clone();
        if let (Some(obj), Value::Object(more)) = (c.as_object_mut(), extra) {
            obj.extend(more);
        }
        c
    }

    fn json_only(&self, command: &str) -> crate::Result<()> {
        if self.format == Format::Tsv {
            return Err(crate::error::usage(format!("{command} has no TSV output")));
        }
        Ok(())
    }

    fn field(&self) -> crate::Result<PrimeField> {
        PrimeField::new(self.prime)
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> crate::Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| crate::error::usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| crate::error::usage(format!("{}: malformed JSON: {e}", path.display())))
}

fn dispatch(ctx: &Ctx, command: Command) -> crate::Result<RunOutput> {
    match command {
        Command::Classify { d, m } => {
            let pair = RangePair::new(d, m)?;
            let c = classify(&pair);
            Ok(RunOutput::ok(
                EXIT_OK,
                match ctx.format {
                    Format::Tsv => tsv(&[vec![
                        c.tag.to_string(),
                        c.lower_a.to_string(),
                        c.lower_b.to_string(),
                        c.upper_b.to_string(),
                    ]]),
                    Format::Json => report(
                        ctx.config_with(json!({"command": "classify"})),
                        json!({
                            "d": s(&pair.d), "m": s(&pair.m), "range": c.tag.as_str(),
                            "lower_a": c.lower_a.to_string(), "lower_b": c.lower_b.to_string(), "upper_b": s(&c.upper_b),
                        }),
                    ),
                },
            ))
        }
        Command::Bound { range, d, m } => {
            let pair = RangePair::new(d, m)?;
            let tag = match range {
                RangeArg::A => RangeTag::A,
                RangeArg::C => RangeTag::C,
            };
            let (value, r) = match genus_bound(tag, &pair)? {
                GenusBound::Value(v) => (v, None),
                GenusBound::RangeC(c) => (c.genus, Some(c.r)),
                GenusBound::NotRepresentable => unreachable!("only A and C are accepted"),
            };
            Ok(RunOutput::ok(
                EXIT_OK,
                match ctx.format {
                    Format::Tsv => {
                        let mut line = vec![tag.to_string(), s(&pair.d), s(&pair.m), s(&value)];
                        line.extend(r.as_ref().map(s));
                        tsv(&[line])
                    }
                    Format::Json => report(
                        ctx.config_with(json!({"command": "bound"})),
                        json!({"range": tag.as_str(), "d": s(&pair.d), "m": s(&pair.m), "genus": s(&value), "r": r.as_ref().map(s)}),
                    ),
                },
            ))
        }
        Command::Table { t, k, alpha, smax } => {
            let params = BaseCurveParams::new(t, k)?;
            let smax = smax.unwrap_or_else(|| params.sum() + 21);
            let table = SequenceTable::build(params.clone(), alpha.clone(), &smax)?;
            let rows = table.rows();
            Ok(RunOutput::ok(
                EXIT_OK,
                match ctx.format {
                    Format::Tsv => {
                        let mut lines = vec![vec!["s".into(), "a".into(), "b".into(), "g".into()]];
                        lines.extend(rows.iter().map(|r| vec![s(&r.s), s(&r.a), s(&r.b), s(&r.g)]));
                        tsv(&lines)
                    }
                    Format::Json => report(
                        ctx.config_with(json!({"command": "table", "alpha": s(&alpha)})),
                        json!({
                            "t": s(&params.t), "k": s(&params.k), "d_tk": s(&params.d_tk), "g_tk": s(&params.g_tk),
                            "rows": rows.iter().map(|r| json!({"s": s(&r.s), "a": s(&r.a), "b": s(&r.b), "g": s(&r.g), "in_model": r.in_model})).collect::<Vec<_>>(),
                        }),
                    ),
                },
            ))
        }
        Command::Uv { t, k, g, xmin, xmax } => {
            let params = BaseCurveParams::new(t, k)?;
            let xmax = xmax.unwrap_or_else(|| &xmin + 20);
            let table = UvTable::build(params.clone(), g.clone(), &xmin, &xmax)?;
            Ok(RunOutput::ok(
                EXIT_OK,
                match ctx.format {
                    Format::Tsv => {
                        let mut lines = vec![vec!["x".into(), "u".into(), "v".into(), "U".into()]];
                        lines.extend(table.rows.iter().map(|r| vec![s(&r.x), s(&r.u), s(&r.v), s(&r.total_degree(&params))]));
                        tsv(&lines)
                    }
                    Format::Json => report(
                        ctx.config_with(json!({"command": "uv"})),
                        json!({
                            "t": s(&params.t), "k": s(&params.k), "g": s(&g),
                            "rows": table.rows.iter().map(|r| json!({"x": s(&r.x), "u": s(&r.u), "v": s(&r.v), "U": s(&r.total_degree(&params))})).collect::<Vec<_>>(),
                        }),
                    ),
                },
            ))
        }
        Command::Plan { d, m, g, mode, steps, alpha } => {
            ctx.json_only("plan")?;
            let opts = PlanOptions {
                mode: match mode {
                    ModeArg::Strict => Mode::Strict,
                    ModeArg::Exploratory => Mode::Exploratory,
                },
                record: match steps {
                    StepsArg::All => StepRecord::All,
                    StepsArg::AOnly => StepRecord::AOnly,
                    StepsArg::None => StepRecord::None,
                },
                alpha,
            };
            let plan = planner::plan(d, m, g, opts)?;
            let code = if plan.all_green() { EXIT_OK } else { EXIT_FAIL };
            let config = ctx.config_with(json!({
                "command": "plan", "alpha": alpha,
                "mode": match mode { ModeArg::Strict => "strict", ModeArg::Exploratory => "exploratory" },
                "steps": match steps { StepsArg::All => "all", StepsArg::AOnly => "a-only", StepsArg::None => "none" },
            }));
            Ok(RunOutput::ok(code, report(config, plan.to_json())))
        }
        Command::VerifyLemma { id, samples, box_spec, timing } => {
            ctx.json_only("verify-lemma")?;
            let budget = match &box_spec {
                Some(b) => Budget::Exhaustive(BoxSpec::parse(b)?),
                None => Budget::Random { samples, seed: ctx.seed },
            };
            let specs = if id == "all" {
                lemma_verifier::catalog()
            } else {
                vec![lemma_verifier::find(&id).ok_or_else(|| crate::error::usage(format!("unknown lemma id {id}")))?]
            };
            let mut reports = Vec::new();
            let mut failed = false;
            for spec in &specs {
                let r = lemma_verifier::verify_spec(spec, &budget)?;
                failed |= !r.passed();
                reports.push(r.to_json(timing));
            }
            let config = ctx.config_with(json!({"command": "verify-lemma", "id": id, "samples": samples, "box": box_spec, "timing": timing}));
            let result = if reports.len() == 1 { reports.pop().expect("one report") } else { Value::Array(reports) };
            Ok(RunOutput::ok(if failed { EXIT_FAIL } else { EXIT_OK }, report(config, result)))
        }
        Command::Postulate { file, s: level } => {
            ctx.json_only("postulate")?;
            let field = ctx.field()?;
            let z: SchemeSpec = read_json(&file)?;
            let r = postulation::h0_ideal_retry(&z, level, &field, ctx.seed)?;
            let code = if r.inconclusive { EXIT_INCONCLUSIVE } else { EXIT_OK };
            let config = ctx.config_with(json!({"command": "postulate", "file": file.display().to_string(), "s": level}));
            Ok(RunOutput::ok(code, report(config, serde_json::to_value(&r).expect("serializable"))))
        }
        Command::HoraceDemo { file, expect_trace, expect_residual } => {
            ctx.json_only("horace-demo")?;
            let field = ctx.field()?;
            let cfg: HoraceConfig = read_json(&file)?;
            let r = postulation::horace_check(&cfg, expect_trace, expect_residual, &field, ctx.seed)?;
            let code = if r.inconclusive {
                EXIT_INCONCLUSIVE
            } else if r.pass {
                EXIT_OK
            } else {
                EXIT_FAIL
            };
            let config = ctx.config_with(json!({
                "command": "horace-demo", "file": file.display().to_string(),
                "expect_trace": expect_trace, "expect_residual": expect_residual,
            }));
            Ok(RunOutput::ok(code, report(config, serde_json::to_value(&r).expect("serializable"))))
        }
    }
}
