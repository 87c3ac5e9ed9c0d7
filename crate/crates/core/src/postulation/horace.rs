//! Residual and trace with respect to the quadric `Q`.
//!
//! A configuration is `Z = X ∪ grid ∪ χ ∪ S`: curve stand-ins `X` off `Q`
//! with their marked points on `Q`, a grid of ruling lines, double points `χ`
//! at grid nodes and extra points `S` on `Q`. The residual is `X ∪ χ_red` in
//! degree `s - 2`; the trace is the grid plus the marked and extra points in
//! bidegree `(s, s)`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::forms::{eval_row, restrict_to_quadric, MonomialBasis};
use super::quadric::{h0_quadric, lies_on, ruling_coords, segre, QPoint};
use super::{coords, ideal_piece, maximal_minors, Component, Fe, Ruling, SchemeSpec, P1, P3};
use crate::error::{domain, Result};
use crate::exact_linalg::{FieldMatrix, PrimeField};

/// Node `ruling1[i] ∩ ruling2[j]` of the grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridNode {
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoraceConfig {
    pub level: u32,
    #[serde(default)]
    pub off_quadric: SchemeSpec,
    /// Points of `X ∩ Q`.
    #[serde(default)]
    pub marked: Vec<QPoint>,
    #[serde(default)]
    pub ruling1: Vec<P1>,
    #[serde(default)]
    pub ruling2: Vec<P1>,
    /// Marked point carried by each first-ruling line, if any.
    #[serde(default)]
    pub marks1: Vec<Option<usize>>,
    #[serde(default)]
    pub marks2: Vec<Option<usize>>,
    #[serde(default)]
    pub nilpotents: Vec<GridNode>,
    #[serde(default)]
    pub extra: Vec<QPoint>,
}

fn q_form(field: &PrimeField, x: &[u64; 4]) -> u64 {
    field.sub(field.mul(x[0], x[3]), field.mul(x[1], x[2]))
}

fn in_span(field: &PrimeField, p: &[u64; 4], q: &[u64; 4], x: &[u64; 4]) -> bool {
    FieldMatrix::from_rows(*field, 4, &[p.to_vec(), q.to_vec(), x.to_vec()]).rank() <= 2
}

fn on_component(field: &PrimeField, comp: &Component, x: &[u64; 4]) -> bool {
    match comp {
        Component::Line { p, q } => in_span(field, &coords(field, p), &coords(field, q), x),
        Component::DeterminantalCurve { matrix: Some(m), .. } => {
            let m: Vec<Vec<[u64; 4]>> = m.iter().map(|r| r.iter().map(|p| coords(field, p)).collect()).collect();
            let basis = MonomialBasis::new(m.len() as u32);
            let vals = eval_row(field, &basis, x);
            maximal_minors(field, &m)
                .iter()
                .all(|f| f.iter().zip(&vals).fold(0, |acc, (a, b)| field.add(acc, field.mul(*a, *b))) == 0)
        }
        _ => false,
    }
}

impl HoraceConfig {
    pub fn grid_size(&self) -> (usize, usize) {
        (self.ruling1.len(), self.ruling2.len())
    }

    /// Checks the configuration's internal consistency.
    pub fn validate(&self, field: &PrimeField) -> Result<()> {
        let (e, f) = self.grid_size();
        if self.level < 2 {
            return Err(domain("the level must be at least 2"));
        }
        if e as u32 > self.level || f as u32 > self.level {
            return Err(domain(format!("grid ({e}, {f}) exceeds the level {}", self.level)));
        }
        for c in &self.off_quadric.components {
            match c {
                Component::Point { coords: p } | Component::DoublePoint { coords: p } => {
                    if q_form(field, &coords(field, p)) == 0 {
                        return Err(domain("an off-quadric point lies on Q"));
                    }
                }
                Component::Line { p, q } => {
                    let (p, q) = (coords(field, p), coords(field, q));
                    let mid = [0, 1, 2, 3].map(|i| field.add(p[i], q[i]));
                    if [p, q, mid].iter().all(|x| q_form(field, x) == 0) {
                        return Err(domain("an off-quadric line is contained in Q"));
                    }
                }
                Component::RulingLine { .. } | Component::Grid { .. } => {
                    return Err(domain("ruling lines belong to the grid, not to X"));
                }
                Component::DeterminantalCurve { matrix: None, .. } => {
                    return Err(domain("curves in a configuration need an explicit matrix"));
                }
                Component::DeterminantalCurve { .. } => {}
            }
        }
        for (idx, m) in self.marked.iter().enumerate() {
            let x = segre(field, m);
            if !self.off_quadric.components.iter().any(|c| on_component(field, c, &x)) {
                return Err(domain(format!("marked point {idx} is not on any component of X")));
            }
        }
        if self.marks1.len() != e || self.marks2.len() != f {
            return Err(domain("one mark entry per grid line is required"));
        }
        let mut used = vec![false; self.marked.len()];
        let lines = self.ruling1.iter().map(|p| (Ruling::First, p)).chain(self.ruling2.iter().map(|p| (Ruling::Second, p)));
        for ((family, param), mark) in lines.zip(self.marks1.iter().chain(&self.marks2)) {
            if let Some(k) = mark {
                let q = self.marked.get(*k).ok_or_else(|| domain(format!("mark {k} is out of range")))?;
                if used[*k] {
                    return Err(domain(format!("marked point {k} is used by two grid lines")));
                }
                used[*k] = true;
                if !lies_on(field, family, param, q) {
                    return Err(domain(format!("grid line does not pass through marked point {k}")));
                }
            }
        }
        for n in &self.nilpotents {
            if n.i >= e || n.j >= f {
                return Err(domain(format!("nilpotent at ({}, {}) is not a grid node", n.i, n.j)));
            }
        }
        Ok(())
    }

    fn node_point(&self, field: &PrimeField, n: &GridNode) -> P3 {
        segre(field, &QPoint { uv: self.ruling1[n.i], wz: self.ruling2[n.j] }).map(Fe)
    }

    /// The whole scheme `Z`.
    pub fn scheme(&self, field: &PrimeField) -> SchemeSpec {
        let mut comps = self.off_quadric.components.clone();
        comps.extend(self.ruling1.iter().map(|p| Component::RulingLine { family: Ruling::First, param: *p }));
        comps.extend(self.ruling2.iter().map(|p| Component::RulingLine { family: Ruling::Second, param: *p }));
        comps.extend(self.nilpotents.iter().map(|n| Component::DoublePoint { coords: self.node_point(field, n) }));
        comps.extend(self.extra.iter().map(|q| Component::Point { coords: segre(field, q).map(Fe) }));
        SchemeSpec::new(comps)
    }

    /// Points of `X ∩ Q` and `S` lying on no grid line.
    pub fn off_grid_points(&self, field: &PrimeField) -> Vec<QPoint> {
        self.marked
            .iter()
            .chain(&self.extra)
            .filter(|q| {
                !self.ruling1.iter().any(|p| lies_on(field, Ruling::First, p, q))
                    && !self.ruling2.iter().any(|p| lies_on(field, Ruling::Second, p, q))
            })
            .copied()
            .collect()
    }
}

/// `Res_Q(Z) = X ∪ χ_red`: grid lines and points on `Q` drop out, each double point at a node becomes the node.
pub fn residual(cfg: &HoraceConfig, field: &PrimeField) -> Result<SchemeSpec> {
    cfg.validate(field)?;
    let mut comps = cfg.off_quadric.components.clone();
    comps.extend(cfg.nilpotents.iter().map(|n| Component::Point { coords: cfg.node_point(field, n) }));
    Ok(SchemeSpec::new(comps))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoraceReport {
    pub level: u32,
    pub grid: (usize, usize),
    pub h0_total: usize,
    pub h0_residual: usize,
    pub h0_trace: usize,
    /// Rank of the restriction of `H^0(I_Z(s))` to `Q`.
    pub restriction_rank: usize,
    /// `h0_total = h0_residual + restriction_rank`.
    pub restriction_identity: bool,
    /// `restriction_rank <= h0_trace`.
    pub trace_bound: bool,
    pub conditions_total: i64,
    pub conditions_residual: i64,
    pub conditions_trace: i64,
    /// Condition counts add up: `total = residual + trace`.
    pub additive: bool,
    /// Off-grid points of `Q` imposing conditions on the trace.
    pub psi: usize,
    /// `(s+1-e)(s+1-f) - #Ψ`; zero when the points fill the residual bidegree exactly.
    pub balance: i64,
    pub expected_trace_ok: Option<bool>,
    pub expected_residual_ok: Option<bool>,
    pub inconclusive: bool,
    pub pass: bool,
    pub seed: u64,
    pub prime: u64,
}

fn binom3(n: i64) -> i64 {
    n * (n - 1) * (n - 2) / 6
}

pub fn horace_check(
    cfg: &HoraceConfig,
    expected_h0_trace: Option<usize>,
    expected_h0_res: Option<usize>,
    field: &PrimeField,
    seed: u64,
) -> Result<HoraceReport> {
    cfg.validate(field)?;
    let s = cfg.level;
    let (e, f) = cfg.grid_size();
    let (total, g1) = ideal_piece(&cfg.scheme(field), s, field, seed)?;
    let (res, g2) = ideal_piece(&residual(cfg, field)?, s - 2, field, seed)?;
    let restricted = restrict_to_quadric(field, &MonomialBasis::new(s), &total);
    let restriction_rank = restricted.rank();
    let trace_points: Vec<QPoint> = cfg.marked.iter().chain(&cfg.extra).copied().collect();
    let trace = h0_quadric(field, &trace_points, (&cfg.ruling1, &cfg.ruling2), (s, s))?;
    let psi = cfg.off_grid_points(field).len();
    let si = s as i64;
    let conditions_total = binom3(si + 3) - total.rows() as i64;
    let conditions_residual = binom3(si + 1) - res.rows() as i64;
    let conditions_trace = (si + 1) * (si + 1) - trace.h0 as i64;
    let restriction_identity = total.rows() == res.rows() + restriction_rank;
    let trace_bound = restriction_rank <= trace.h0;
    let expected_trace_ok = expected_h0_trace.map(|v| v == trace.h0);
    let expected_residual_ok = expected_h0_res.map(|v| v == res.rows());
    let inconclusive = !(g1 && g2);
    let pass = !inconclusive
        && restriction_identity
        && trace_bound
        && expected_trace_ok.unwrap_or(true)
        && expected_residual_ok.unwrap_or(true);
    Ok(HoraceReport {
        level: s,
        grid: (e, f),
        h0_total: total.rows(),
        h0_residual: res.rows(),
        h0_trace: trace.h0,
        restriction_rank,
        restriction_identity,
        trace_bound,
        conditions_total,
        conditions_residual,
        conditions_trace,
        additive: conditions_total == conditions_residual + conditions_trace,
        psi,
        balance: (si + 1 - e as i64) * (si + 1 - f as i64) - psi as i64,
        expected_trace_ok,
        expected_residual_ok,
        inconclusive,
        pass,
        seed,
        prime: field.modulus(),
    })
}

fn random_p1(field: &PrimeField, rng: &mut ChaCha8Rng) -> P1 {
    [Fe(1), Fe(field.random(rng))]
}

fn random_qpoint(field: &PrimeField, rng: &mut ChaCha8Rng) -> QPoint {
    QPoint { uv: random_p1(field, rng), wz: random_p1(field, rng) }
}

/// Line through a point of `Q` and a random point; returns the line and both points where it meets `Q`.
fn secant(field: &PrimeField, rng: &mut ChaCha8Rng) -> Option<(Component, QPoint, QPoint)> {
    let p = random_qpoint(field, rng);
    let px = segre(field, &p);
    let r: [u64; 4] = [0; 4].map(|_| field.random(rng));
    let qr = q_form(field, &r);
    let bil = field.sub(
        field.add(field.mul(px[0], r[3]), field.mul(px[3], r[0])),
        field.add(field.mul(px[1], r[2]), field.mul(px[2], r[1])),
    );
    if qr == 0 || bil == 0 {
        return None;
    }
    let lambda = field.neg(field.mul(bil, field.inv(qr)?));
    let second = [0, 1, 2, 3].map(|i| field.add(px[i], field.mul(lambda, r[i])));
    let q = ruling_coords(field, &second)?;
    Some((Component::Line { p: px.map(Fe), q: r.map(Fe) }, p, q))
}

/// A random consistent configuration with level at most `max_level`.
pub fn random_config(field: &PrimeField, rng: &mut ChaCha8Rng, max_level: u32) -> HoraceConfig {
    let level = rng.gen_range(2..=max_level.max(2));
    let mut comps = Vec::new();
    let mut marked = Vec::new();
    for _ in 0..rng.gen_range(0..=3) {
        if let Some((line, a, b)) = secant(field, rng) {
            comps.push(line);
            marked.push(a);
            marked.push(b);
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let x: [u64; 4] = [0; 4].map(|_| field.random(rng));
        if q_form(field, &x) != 0 {
            comps.push(Component::Point { coords: x.map(Fe) });
        }
    }
    let e = rng.gen_range(0..=level.min(3)) as usize;
    let f = rng.gen_range(0..=level.min(3)) as usize;
    let mut free: Vec<usize> = (0..marked.len()).collect();
    let mut pick_line = |rng: &mut ChaCha8Rng, family: Ruling| -> (P1, Option<usize>) {
        if !free.is_empty() && rng.gen_bool(0.5) {
            let k = free.swap_remove(rng.gen_range(0..free.len()));
            let q: &QPoint = &marked[k];
            (if family == Ruling::First { q.uv } else { q.wz }, Some(k))
        } else {
            (random_p1(field, rng), None)
        }
    };
    let (ruling1, marks1): (Vec<_>, Vec<_>) = (0..e).map(|_| pick_line(rng, Ruling::First)).unzip();
    let (ruling2, marks2): (Vec<_>, Vec<_>) = (0..f).map(|_| pick_line(rng, Ruling::Second)).unzip();
    let mut nodes: Vec<GridNode> = (0..e).flat_map(|i| (0..f).map(move |j| GridNode { i, j })).collect();
    let keep = rng.gen_range(0..=nodes.len().min(3));
    let mut nilpotents = Vec::new();
    for _ in 0..keep {
        nilpotents.push(nodes.swap_remove(rng.gen_range(0..nodes.len())));
    }
    let extra = (0..rng.gen_range(0..=3)).map(|_| random_qpoint(field, rng)).collect();
    HoraceConfig { level, off_quadric: SchemeSpec::new(comps), marked, ruling1, ruling2, marks1, marks2, nilpotents, extra }
}
