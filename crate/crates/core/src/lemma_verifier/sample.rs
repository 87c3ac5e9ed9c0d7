//! Random tuples for the catalog.

use num_bigint::RandBigInt;
use num_traits::{FromPrimitive, One, ToPrimitive};
use rand::Rng as _;

use super::{Rng, Tuple};
use crate::range_genus::{genus_bound_a, RangePair};
use crate::Big;

pub(crate) fn uniform(rng: &mut Rng, lo: &Big, hi: &Big) -> Big {
    if hi <= lo {
        return lo.clone();
    }
    rng.gen_bigint_range(lo, &(hi + 1))
}

pub(crate) fn uniform_i(rng: &mut Rng, lo: i64, hi: i64) -> Big {
    Big::from(rng.gen_range(lo..=hi.max(lo)))
}

/// Log-uniform integer in `[lo, hi]` (both at least 1).
pub(crate) fn log_uniform(rng: &mut Rng, lo: f64, hi: f64) -> Big {
    let (l, h) = (lo.max(1.0).ln(), hi.max(lo).max(1.0).ln());
    let x = rng.gen_range(l..=h).exp();
    let big = |f: f64| Big::from_f64(f).unwrap_or_default();
    let lo = big(lo.max(1.0).ceil());
    let hi = big(hi.floor()).max(lo.clone());
    big(x.round()).clamp(lo, hi)
}

/// `alpha` mix: the construction's value, small constants, and values under `(t+k)/102 - 1`.
pub(crate) fn alpha(rng: &mut Rng, sum: &Big) -> Big {
    let cap: Big = sum / 102 - 1;
    let cap = cap.to_i64().unwrap_or(i64::MAX).max(0);
    match rng.gen_range(0..20) {
        0..=5 => Big::from(202),
        6..=8 => Big::from(0),
        9..=10 => Big::from(2),
        11..=15 => uniform_i(rng, 0, 1000),
        _ => uniform_i(rng, 0, cap),
    }
}

/// Shape of the `(t, k, alpha, u)` draws.
#[derive(Clone, Copy)]
pub(crate) struct Shape {
    /// Range of `t + k`.
    pub sum: (f64, f64),
    /// Largest ratio `t / k`.
    pub ratio: f64,
    /// Range of the step index `u` (level `s = t+k+1+2u`).
    pub u: (f64, f64),
    /// Probability that `u` is 0.
    pub u_zero: f64,
}

pub(crate) fn tk(rng: &mut Rng, sum: (f64, f64), ratio: f64) -> (Big, Big) {
    let n = log_uniform(rng, sum.0.max(2.0), sum.1);
    let r = if rng.gen_bool(0.1) { 1.0 } else { rng.gen_range(0.0..=ratio.ln()).exp() };
    let nf = n.to_f64().unwrap_or(f64::MAX);
    let mut k = Big::from(((nf / (1.0 + r)).round() as u128).max(1));
    if k > &n / 2 {
        k = &n / 2;
    }
    if k < Big::one() {
        k = Big::one();
    }
    let t = &n - &k;
    (t, k)
}

pub(crate) fn tkau(rng: &mut Rng, shape: Shape) -> Tuple {
    let (t, k) = tk(rng, shape.sum, shape.ratio);
    let alpha = alpha(rng, &(&t + &k));
    let u = if rng.gen_bool(shape.u_zero) { Big::from(0) } else { log_uniform(rng, shape.u.0.max(1.0), shape.u.1) - 1 };
    Tuple::from([("t", t), ("k", k), ("alpha", alpha), ("u", u)])
}

/// `(m, d, g)` with `d` in lower Range A and `0 <= g <= G_A(d, m)`.
///
/// `m` is log-uniform over `m_range`; `g` is `G_A` a quarter of the time,
/// otherwise log-uniform or uniform below it.
pub(crate) fn context(rng: &mut Rng, m_range: (f64, f64)) -> Tuple {
    let m = log_uniform(rng, m_range.0.max(4.0), m_range.1);
    let quad = &m * &m + 4 * &m + 6;
    // lower Range A: quad/6 <= d < quad/4
    let lo = (&quad + 5) / 6;
    let hi = (&quad - 1) / 4;
    let d = uniform(rng, &lo, &hi);
    let g_max = genus_bound_a(&RangePair { d: d.clone(), m: m.clone() });
    let g = match rng.gen_range(0..4) {
        0 => g_max.clone(),
        1 => uniform(rng, &Big::from(0), &g_max),
        _ => {
            let top = g_max.to_f64().unwrap_or(1.0).max(1.0);
            let floor = crate::planner::genus_floor::<Big>().to_f64().unwrap_or(1.0).min(top);
            log_uniform(rng, floor * 0.5, top).min(g_max.clone())
        }
    };
    Tuple::from([("m", m), ("d", d), ("g", g)])
}
