//! Integer sequences driving the inductive construction.
//!
//! Closed forms for the base curves `C_t`, the count `I(s)`, the
//! `(a, b, g)` recursion with step parameter `alpha`, the `(u, v)` table for
//! a target genus and the grid-size rules.

mod grid;
mod table;
mod uv;

pub use grid::{grid_e, GridOffset, GridRule, GridVariant};
pub use table::{base_row, row_closed_form, SeqRow, SequenceTable};
pub use uv::{uv_row, UvRow, UvTable};

use crate::error::{domain, Result};
use crate::scalar::{binom3, int, Int};

/// Default step parameter.
pub const ALPHA: i64 = 202;

/// Degree of `C_t`, `t(t+1)/2`.
pub fn degree_ct<T: Int>(t: &T) -> T {
    t.clone() * (t.clone() + T::one()) / int(2)
}

/// Arithmetic genus of `C_t`, `1 + t(t+1)(2t-5)/6`.
pub fn genus_ct<T: Int>(t: &T) -> T {
    T::one() + t.clone() * (t.clone() + T::one()) * (int::<T>(2) * t.clone() - int(5)) / int(6)
}

/// Invariants of the disjoint union `C_t ⊔ C_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCurveParams<T> {
    pub t: T,
    pub k: T,
    pub d_tk: T,
    pub g_t: T,
    pub g_k: T,
    pub g_tk: T,
}

impl<T: Int> BaseCurveParams<T> {
    pub fn new(t: T, k: T) -> Result<Self> {
        if k < T::one() || t < k {
            return Err(domain(format!("need t >= k >= 1, got t={t}, k={k}")));
        }
        let g_t = genus_ct(&t);
        let g_k = genus_ct(&k);
        Ok(BaseCurveParams {
            d_tk: degree_ct(&t) + degree_ct(&k),
            g_tk: g_t.clone() + g_k.clone(),
            g_t,
            g_k,
            t,
            k,
        })
    }

    pub fn from_i64(t: i64, k: i64) -> Result<Self> {
        Self::new(int(t), int(k))
    }

    /// `t + k`.
    pub fn sum(&self) -> T {
        self.t.clone() + self.k.clone()
    }

    /// First level of the recursion, `t + k + 1`.
    pub fn s0(&self) -> T {
        self.sum() + T::one()
    }
}

/// `I(s) = h0(O(s)) - h0(O_{C_t ⊔ C_k}(s))` by its closed form, for `s >= t + k - 1`.
pub fn big_i<T: Int>(params: &BaseCurveParams<T>, s: &T) -> Result<T> {
    let n = s.clone() - params.sum();
    if n < -T::one() {
        return Err(domain(format!("I(s) needs s >= t+k-1, got s={s}")));
    }
    let tk = params.sum();
    let bracket = (n.clone() + int(3)) * (n.clone() + int(2))
        + int::<T>(3) * tk * (n.clone() + int(2))
        + int::<T>(6) * params.k.clone() * params.t.clone();
    Ok((n + T::one()) * bracket / int(6))
}

/// Right-hand side of the invariant `s(d + a) + 3 - g_tk - g + b = C(s+3, 3)`.
pub(crate) fn level_identity_holds<T: Int>(params: &BaseCurveParams<T>, row: &SeqRow<T>) -> bool {
    let s = &row.s;
    let lhs = s.clone() * (params.d_tk.clone() + row.a.clone()) + int(3) - params.g_tk.clone()
        - row.g.clone()
        + row.b.clone();
    lhs == binom3(&(s.clone() + int(3)))
}
