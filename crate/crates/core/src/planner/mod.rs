//! Construction schedule for a target `(d, m, g)`.
//!
//! Picks the base curves, runs the `(a, b, g)` recursion up to the switch
//! level `y`, continues with the `(u, v)` table up to `m - 3`, and records
//! every step with its grid data and the identities it must satisfy.

mod cases;
mod select;

pub use cases::{case_tag, claim_one, matching_cases, CaseTag, ClaimOne, StepData};
pub use select::{select_all, select_k, select_t, select_y_fast, select_y_scan, Selection};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::range_genus::{genus_bound_a, in_lower_range_a, RangePair};
use crate::scalar::{int, Int};
use crate::sequence_engine::{
    genus_ct, grid_e, uv_row, BaseCurveParams, GridOffset, GridRule, GridVariant, SequenceTable, ALPHA,
};

pub(crate) const ALPHA_DEFAULT: i64 = ALPHA;
/// Largest grid size the construction allows.
pub const E_MAX: i64 = 201;
/// Smallest width of an A-step.
pub const DELTA_MIN: i64 = 202;
/// Smallest genus reached by the recursion past its base level.
pub const GENUS_STEP_MIN: i64 = 26;
/// Level from which every genus in lower Range A is covered.
pub const LEVEL_MIN: i64 = 1_380_000;
/// Genus from which the construction applies.
pub const GENUS_MIN: i64 = 340_000_000_000_000;

const RULE_A: GridRule = GridRule::new(GridVariant::AMax, GridOffset::Zero);
const RULE_TRANSITION: GridRule = GridRule::new(GridVariant::BMax, GridOffset::Zero);
const RULE_B: GridRule = GridRule::new(GridVariant::BMax, GridOffset::One);
const RULE_FINAL: GridRule = GridRule::new(GridVariant::AMax, GridOffset::One);

/// `g_{1000} + g_{1000}`, the genus below which the selections are not used.
pub fn genus_floor<T: Int>() -> T {
    int::<T>(2) * genus_ct(&int::<T>(1000))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Strict,
    Exploratory,
}

/// Which steps are kept in the returned plan; all are validated regardless.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepRecord {
    All,
    AOnly,
    None,
}

#[derive(Clone, Copy, Debug)]
pub struct PlanOptions {
    pub mode: Mode,
    pub record: StepRecord,
    pub alpha: i64,
}

impl Default for PlanOptions {
    fn default() -> Self {
        PlanOptions { mode: Mode::Strict, record: StepRecord::All, alpha: ALPHA }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    A,
    Transition,
    B,
    Final,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Full inductive construction.
    Construction,
    /// Genus small enough for the known non-special construction.
    SmallGenus,
    /// Hypotheses of the theorems fail; nothing is scheduled.
    Rejected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusContext<T> {
    pub m: T,
    pub d: T,
    pub g: T,
    pub g_a: T,
}

/// One Horace step from level `level` to `level + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanStep<T> {
    pub kind: StepKind,
    pub level: T,
    /// `a(s)` on A-steps, `u(x)` afterwards.
    pub degree: T,
    /// `b(s)` on A-steps, `v(x)` afterwards.
    pub remainder: T,
    /// Genus of the union after the step.
    pub genus_after: T,
    pub delta: T,
    /// Lines in the first ruling; `None` when the remainder is zero or no size qualifies.
    pub e: Option<T>,
    /// Lines in the second ruling, `delta - e`.
    pub f: Option<T>,
    /// The roles of the rulings alternate from one step to the next.
    pub swapped: bool,
    pub case_tag: Option<CaseTag>,
}

/// Last step: width, grid and which lines reach `C_t` and `C_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinalStep<T> {
    pub level: T,
    pub delta: T,
    pub remainder: T,
    pub e: Option<T>,
    /// Index of the second-ruling line meeting `C_t`.
    pub line_to_ct: T,
    /// Index of the second-ruling line meeting `C_k`.
    pub line_to_ck: T,
    /// Second-ruling lines `1..=n` meeting the rest of the curve.
    pub lines_to_curve: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct ConstructionPlan<T> {
    pub context: GenusContext<T>,
    pub mode: Mode,
    pub route: Route,
    pub alpha: i64,
    pub t: Option<T>,
    pub k: Option<T>,
    pub y: Option<T>,
    pub a_steps: Vec<PlanStep<T>>,
    pub b_steps: Vec<PlanStep<T>>,
    pub final_step: Option<FinalStep<T>>,
    pub a_step_count: usize,
    pub b_step_count: usize,
    pub max_e: Option<T>,
    pub validity: Vec<Check>,
}

impl<T: Int> ConstructionPlan<T> {
    pub fn all_green(&self) -> bool {
        self.validity.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.validity.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.validity.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        let s = |v: &T| Value::String(v.to_string());
        let opt = |v: &Option<T>| v.as_ref().map_or(Value::Null, s);
        let step = |p: &PlanStep<T>| {
            json!({
                "kind": p.kind,
                "level": s(&p.level),
                "degree": s(&p.degree),
                "remainder": s(&p.remainder),
                "genus_after": s(&p.genus_after),
                "delta": s(&p.delta),
                "e": opt(&p.e),
                "f": opt(&p.f),
                "swapped": p.swapped,
                "case_tag": p.case_tag.map(|c| c.as_str()),
            })
        };
        json!({
            "context": {
                "m": s(&self.context.m),
                "d": s(&self.context.d),
                "g": s(&self.context.g),
                "g_a": s(&self.context.g_a),
            },
            "mode": self.mode,
            "route": self.route,
            "alpha": self.alpha,
            "t": opt(&self.t),
            "k": opt(&self.k),
            "y": opt(&self.y),
            "a_step_count": self.a_step_count,
            "b_step_count": self.b_step_count,
            "max_e": opt(&self.max_e),
            "a_steps": self.a_steps.iter().map(step).collect::<Vec<_>>(),
            "b_steps": self.b_steps.iter().map(step).collect::<Vec<_>>(),
            "final": self.final_step.as_ref().map(|f| json!({
                "level": s(&f.level),
                "delta": s(&f.delta),
                "remainder": s(&f.remainder),
                "e": opt(&f.e),
                "line_to_ct": s(&f.line_to_ct),
                "line_to_ck": s(&f.line_to_ck),
                "lines_to_curve": s(&f.lines_to_curve),
            })),
            "validity": self.validity,
            "all_green": self.all_green(),
        })
    }
}

/// Accumulates one named check over many steps.
struct Tally {
    name: &'static str,
    failures: u64,
    first: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, failures: 0, first: None }
    }

    fn test(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(witness());
            }
        }
    }

    fn finish(self) -> Check {
        Check {
            name: self.name.to_string(),
            pass: self.failures == 0,
            witness: self.first.map(|w| format!("{w} ({} failing)", self.failures)),
        }
    }
}

fn single(name: &str, pass: bool, witness: impl FnOnce() -> String) -> Check {
    Check { name: name.to_string(), pass, witness: if pass { None } else { Some(witness()) } }
}

fn bump_max<T: Int>(max: &mut Option<T>, e: &Option<T>) {
    if let Some(e) = e {
        if max.as_ref().is_none_or(|m| e > m) {
            *max = Some(e.clone());
        }
    }
}

/// Schedule the construction for `(d, m)` and genus `g` (default `G_A(d, m)`).
pub fn plan<T: Int>(d: T, m: T, g: Option<T>, opts: PlanOptions) -> Result<ConstructionPlan<T>> {
    let pair = RangePair::new(d.clone(), m.clone())?;
    let g_a = genus_bound_a(&pair);
    let g = g.unwrap_or_else(|| g_a.clone());
    let mut plan = ConstructionPlan {
        context: GenusContext { m: m.clone(), d: d.clone(), g: g.clone(), g_a: g_a.clone() },
        mode: opts.mode,
        route: Route::Construction,
        alpha: opts.alpha,
        t: None,
        k: None,
        y: None,
        a_steps: Vec::new(),
        b_steps: Vec::new(),
        final_step: None,
        a_step_count: 0,
        b_step_count: 0,
        max_e: None,
        validity: Vec::new(),
    };

    let lower = in_lower_range_a(&pair);
    let in_range = !g.is_negative() && g <= g_a;
    let level_ok = m >= int(LEVEL_MIN);
    let genus_big = g >= int(GENUS_MIN);
    let v = &mut plan.validity;
    v.push(single("range_a_lower_half", lower, || {
        format!("(d={d}, m={m}) is not in Range A with 4d < m^2+4m+6")
    }));
    v.push(single("genus_in_range", in_range, || format!("g={g} outside [0, {g_a}]")));

    match opts.mode {
        Mode::Strict => {
            // Either g = G_A with G_A large, or m large with any g in range.
            let covered = lower && in_range && ((g == g_a && genus_big) || level_ok);
            v.push(single("theorem_hypotheses", covered, || {
                format!("need g = G_A >= {GENUS_MIN} or m >= {LEVEL_MIN}")
            }));
            if !covered {
                plan.route = Route::Rejected;
                return Ok(plan);
            }
            if !genus_big {
                plan.route = Route::SmallGenus;
                // g <= 0.02 d^{3/2}, squared.
                let ok = int::<T>(2500) * g.clone() * g.clone() <= d.clone() * d.clone() * d.clone();
                v.push(single("small_genus_delegation", ok, || format!("2500 g^2 > d^3 for g={g}")));
                return Ok(plan);
            }
        }
        Mode::Exploratory => {
            v.push(single("level_threshold", level_ok, || format!("m={m} < {LEVEL_MIN}")));
            v.push(single("genus_threshold", genus_big, || format!("g={g} < {GENUS_MIN}")));
        }
    }
    let floor = genus_floor::<T>();
    v.push(single("genus_at_least_floor", g >= floor, || format!("g={g} < g_1000,1000={floor}")));
    build_schedule(&mut plan, opts)?;
    Ok(plan)
}

fn build_schedule<T: Int>(plan: &mut ConstructionPlan<T>, opts: PlanOptions) -> Result<()> {
    let GenusContext { m, d, g, .. } = plan.context.clone();
    let alpha = int::<T>(opts.alpha);
    let v = &mut plan.validity;

    let Some(t) = select_t(&g) else {
        v.push(single("select_t", false, || format!("no t >= 1 with 10^6 g_t <= 999999 g for g={g}")));
        return Ok(());
    };
    let Some(k) = select_k(&g, &t, &m) else {
        v.push(single("select_k", false, || format!("g - g_t < 0 for t={t}")));
        return Ok(());
    };
    plan.t = Some(t.clone());
    plan.k = Some(k.clone());
    let mill = int::<T>(1_000_000);
    let cut = int::<T>(999_999) * g.clone();
    let t_ok = mill.clone() * genus_ct(&t) <= cut && mill * genus_ct(&(t.clone() + T::one())) > cut;
    v.push(single("select_t_bracket", t_ok, || format!("t={t}")));
    v.push(single("k_parity", (t.clone() + k.clone() - m.clone()).is_even(), || format!("t={t} k={k} m={m}")));
    let k_ok = k >= T::one() && k <= t;
    v.push(single("k_le_t", k_ok, || format!("k={k} t={t}")));
    if !k_ok {
        return Ok(());
    }
    let ratio_ok = int::<T>(200) * k.clone() > t && int::<T>(30) * k.clone() <= t;
    v.push(single("k_ratio", ratio_ok, || format!("need t/200 < k <= t/30, t={t} k={k}")));

    let params = BaseCurveParams::new(t.clone(), k.clone())?;
    let g_tk = params.g_tk.clone();
    let two_k = int::<T>(2) * k.clone();
    let bracket = g_tk <= g && g <= g_tk.clone() + two_k.clone() * k.clone() + two_k;
    v.push(single("genus_bracket", bracket, || format!("g_tk={g_tk} g={g} k={k}")));

    let s0 = params.s0();
    let mut table = SequenceTable::build(params.clone(), alpha.clone(), &s0)?;
    let y = select_y_scan(&mut table, &g)?;
    plan.y = Some(y.clone());
    let two = int::<T>(2);
    v.push(single("y_parity", (y.clone() - m.clone() + T::one()).is_even(), || format!("y={y} m={m}")));
    let y_ok = y.clone() + int(7) <= m;
    v.push(single("y_le_m_minus_7", y_ok, || format!("y={y} m={m}")));

    // The table now runs up to y + 2.
    let mut increasing = Tally::new("genus_increasing");
    let mut g26 = Tally::new("genus_at_least_26");
    for w in table.rows().windows(2) {
        increasing.test(w[1].g > w[0].g, || format!("g({})={} <= g({})={}", w[1].s, w[1].g, w[0].s, w[0].g));
        if w[1].s <= y {
            g26.test(w[1].g >= int(GENUS_STEP_MIN), || format!("g({})={}", w[1].s, w[1].g));
        }
    }

    let mut delta_min = Tally::new("delta_at_least_202");
    let mut e_exists = Tally::new("e_exists");
    let mut e_max = Tally::new("e_at_most_201");
    let mut partition = Tally::new("case_partition");
    let mut claim = Tally::new("claim_one_balance");
    let mut genus_run = Tally::new("genus_total");
    let mut degree_sum = params.d_tk.clone() + table.rows()[0].a.clone();
    let mut genus_sum = g_tk.clone();
    let e_cap = int::<T>(E_MAX);
    let mut index = 0usize;

    let rows = table.rows();
    let a_count = rows.iter().take_while(|r| r.s < y).count();
    for w in rows[..=a_count].windows(2) {
        let (cur, next) = (&w[0], &w[1]);
        let delta = next.a.clone() - cur.a.clone();
        delta_min.test(delta >= int(DELTA_MIN), || format!("s={} delta={delta}", cur.s));
        let e = if cur.b.is_positive() { grid_e(&cur.b, &delta, RULE_A) } else { None };
        e_exists.test(cur.b.is_zero() || e.is_some(), || format!("s={} b={} delta={delta}", cur.s, cur.b));
        if let Some(ev) = &e {
            e_max.test(*ev <= e_cap, || format!("s={} e={ev}", cur.s));
        }
        let tag = e.as_ref().map_or(
            if cur.b.is_zero() { Some(CaseTag::EmptyGrid) } else { None },
            |ev| case_tag(&cur.b, &delta, ev, &alpha),
        );
        partition.test(tag.is_some(), || format!("s={} b={} delta={delta} e={:?}", cur.s, cur.b, e));
        if let Some(tag) = tag {
            let step = StepData {
                s: cur.s.clone(),
                a: cur.a.clone(),
                b: cur.b.clone(),
                b_next: next.b.clone(),
                delta: delta.clone(),
            };
            let c = claim_one(&params, &alpha, &step, &e.clone().unwrap_or_else(T::one), tag);
            claim.test(c.holds(), || format!("s={} lhs={} rhs={}", cur.s, c.lhs, c.rhs));
        }
        degree_sum = degree_sum + delta.clone();
        genus_sum = genus_sum + delta.clone() - alpha.clone();
        genus_run.test(genus_sum == g_tk.clone() + next.g.clone(), || format!("running genus at s={}", next.s));
        bump_max(&mut plan.max_e, &e);
        if opts.record != StepRecord::None {
            plan.a_steps.push(PlanStep {
                kind: StepKind::A,
                level: cur.s.clone(),
                degree: cur.a.clone(),
                remainder: cur.b.clone(),
                genus_after: genus_sum.clone(),
                f: e.as_ref().map(|ev| delta.clone() - ev.clone()),
                e,
                delta,
                swapped: index % 2 == 1,
                case_tag: tag,
            });
        }
        index += 1;
    }

    // Switch from the recursion to the (u, v) table at level y.
    let row_y = table.row(&y).expect("row y is stored").clone();
    let row_y2 = table.row(&(y.clone() + two.clone())).expect("row y+2 is stored").clone();
    let uv_y2 = uv_row(&params, &g, &(y.clone() + two.clone()))?;
    let delta = uv_y2.u.clone() - row_y.a.clone();
    let gamma = g.clone() - g_tk.clone() - row_y.g.clone();
    let mu = delta.clone() - gamma.clone();
    v.push(single("transition_gamma_nonnegative", !gamma.is_negative(), || format!("gamma={gamma}")));
    v.push(single("transition_margin", mu >= int(E_MAX), || format!("delta-gamma={mu}")));
    v.push(single("transition_degree_below_next_row", row_y2.a >= uv_y2.u, || {
        format!("a(y+2)={} < u(y+2)={}", row_y2.a, uv_y2.u)
    }));
    let e = if row_y.b.is_positive() { grid_e(&row_y.b, &delta, RULE_TRANSITION) } else { None };
    e_exists.test(row_y.b.is_zero() || e.is_some(), || format!("transition y={y} b={}", row_y.b));
    if let Some(ev) = &e {
        e_max.test(*ev <= e_cap, || format!("transition y={y} e={ev}"));
    }
    let tag = match &e {
        Some(ev) => case_tag(&row_y.b, &delta, ev, &mu),
        None if row_y.b.is_zero() => Some(CaseTag::EmptyGrid),
        None => None,
    };
    partition.test(tag.is_some(), || format!("transition y={y} b={} delta={delta}", row_y.b));
    degree_sum = degree_sum + delta.clone();
    genus_sum = genus_sum + gamma;
    bump_max(&mut plan.max_e, &e);
    if opts.record != StepRecord::None {
        plan.a_steps.push(PlanStep {
            kind: StepKind::Transition,
            level: y.clone(),
            degree: row_y.a.clone(),
            remainder: row_y.b.clone(),
            genus_after: genus_sum.clone(),
            f: e.as_ref().map(|ev| delta.clone() - ev.clone()),
            e,
            delta,
            swapped: index % 2 == 1,
            case_tag: tag,
        });
    }
    index += 1;
    plan.a_step_count = a_count + 1;

    let last = m.clone() - int(3);
    if y.clone() + two.clone() > last {
        v.push(single("schedule_reaches_final_level", false, || format!("y+2={} > m-3", y + two)));
        for t in [increasing, g26, delta_min, e_exists, e_max, partition, claim, genus_run] {
            v.push(t.finish());
        }
        return Ok(());
    }

    // B-steps at x = y+2, ..., m-5; genus stays g.
    let mut x = y.clone() + two.clone();
    let mut cur = uv_y2;
    let mut b_count = 0usize;
    let mut b_delta = Tally::new("b_delta_positive");
    while x < last {
        let nx = x.clone() + two.clone();
        let next = uv_row(&params, &g, &nx)?;
        let delta = next.u.clone() - cur.u.clone();
        b_delta.test(delta.is_positive(), || format!("x={x} delta={delta}"));
        let e = if cur.v.is_positive() { grid_e(&cur.v, &delta, RULE_B) } else { None };
        e_exists.test(cur.v.is_zero() || e.is_some(), || format!("x={x} v={} delta={delta}", cur.v));
        if let Some(ev) = &e {
            e_max.test(*ev <= e_cap, || format!("x={x} e={ev}"));
        }
        degree_sum = degree_sum + delta.clone();
        bump_max(&mut plan.max_e, &e);
        if opts.record == StepRecord::All {
            plan.b_steps.push(PlanStep {
                kind: StepKind::B,
                level: x.clone(),
                degree: cur.u.clone(),
                remainder: cur.v.clone(),
                genus_after: genus_sum.clone(),
                f: e.as_ref().map(|ev| delta.clone() - ev.clone()),
                e,
                delta,
                swapped: index % 2 == 1,
                case_tag: if cur.v.is_zero() { Some(CaseTag::EmptyGrid) } else { None },
            });
        }
        index += 1;
        b_count += 1;
        cur = next;
        x = nx;
    }
    plan.b_step_count = b_count;

    // Final step at m-3 reaches degree d.
    let total = cur.total_degree(&params);
    let delta = d.clone() - total;
    let e = if cur.v.is_positive() { grid_e(&cur.v, &delta, RULE_FINAL) } else { None };
    e_exists.test(cur.v.is_zero() || e.is_some(), || format!("final v={} delta={delta}", cur.v));
    if let Some(ev) = &e {
        e_max.test(*ev <= e_cap, || format!("final e={ev}"));
    }
    bump_max(&mut plan.max_e, &e);
    // With v = 0 any grid works; the one-line grid fixes the attachment indices.
    let e_eff = e.clone().unwrap_or_else(T::one);
    let fin = FinalStep {
        level: last.clone(),
        delta: delta.clone(),
        remainder: cur.v.clone(),
        line_to_ct: delta.clone() - e_eff.clone() - T::one(),
        line_to_ck: delta.clone() - e_eff.clone(),
        lines_to_curve: if cur.v.is_positive() {
            cur.v.clone() - (e_eff.clone() - T::one()) * (delta.clone() - e_eff.clone())
        } else {
            T::zero()
        },
        e,
    };
    v.push(single("final_delta_positive", delta.is_positive(), || format!("delta={delta}")));
    v.push(single("attachment_lines_exist", fin.line_to_ct >= T::one(), || {
        format!("delta-e={} < 2", fin.line_to_ck)
    }));
    degree_sum = degree_sum + delta;
    plan.final_step = Some(fin);

    let top = uv_row(&params, &g, &(m.clone() - T::one()))?;
    let u_top = top.total_degree(&params);
    if g == plan.context.g_a {
        let ok = u_top == d.clone() - T::one() && top.v == m.clone() - int(3);
        v.push(single("final_level_identity", ok, || format!("U(m-1)={u_top} v(m-1)={}", top.v)));
    } else {
        let ok = u_top.clone() - T::one() <= d && d <= u_top.clone() + two.clone();
        v.push(single("final_degree_bracket", ok, || format!("U(m-1)={u_top} d={d}")));
    }
    v.push(single("degree_total", degree_sum == d, || format!("sum of widths gives {degree_sum}, d={d}")));
    // C_t, C_k and the rest form a tree with two nodes.
    let tree = (genus_sum.clone() - g_tk.clone()) + params.g_t.clone() + params.g_k.clone();
    genus_run.test(genus_sum == g && tree == g, || format!("final genus {genus_sum}, g={g}"));
    for t in [increasing, g26, delta_min, e_exists, e_max, partition, claim, genus_run, b_delta] {
        v.push(t.finish());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Big;

    #[test]
    fn toy_exploratory_plan_reports_failures() {
        let opts = PlanOptions { mode: Mode::Exploratory, ..Default::default() };
        let p = plan(11i64, 6, Some(0), opts).unwrap();
        assert!(!p.all_green());
        assert!(!p.check("level_threshold").unwrap().pass);
        assert!(!p.check("genus_threshold").unwrap().pass);
        assert!(!p.check("genus_at_least_floor").unwrap().pass);
    }

    #[test]
    fn strict_small_genus_routes_away() {
        let m = Big::from(LEVEL_MIN);
        let d: Big = (&m * &m + 4 * &m + 6 + 5) / 6;
        let p = plan(d, m, Some(Big::from(0)), PlanOptions::default()).unwrap();
        assert_eq!(p.route, Route::SmallGenus);
        assert!(p.all_green());
        assert!(p.check("y_le_m_minus_7").is_none());
    }

    #[test]
    fn strict_rejects_out_of_range() {
        let p = plan(Big::from(11), Big::from(6), None, PlanOptions::default()).unwrap();
        assert_eq!(p.route, Route::Rejected);
        assert!(!p.all_green());
    }

    #[test]
    fn genus_floor_value() {
        assert_eq!(genus_floor::<i64>(), 2 + 1000 * 1001 * 1995 / 3);
    }
}
