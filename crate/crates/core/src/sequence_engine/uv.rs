
use super::BaseCurveParams;
use crate::error::{domain, Result};
use crate::scalar::{binom3, div_rem_euclid, int, Int};

/// `x (d_tk + u) + 3 - g + v = C(x+3, 3)` with `0 <= v <= x-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UvRow<T> {
    pub x: T,
    /// Extra degree beyond `d_tk`.
    pub u: T,
    pub v: T,
}

impl<T: Int> UvRow<T> {
    /// Total degree `U(x) = d_tk + u(x)`.
    pub fn total_degree(&self, params: &BaseCurveParams<T>) -> T {
        params.d_tk.clone() + self.u.clone()
    }
}

pub fn uv_row<T: Int>(params: &BaseCurveParams<T>, g: &T, x: &T) -> Result<UvRow<T>> {
    if *x < T::one() {
        return Err(domain(format!("level x={x} must be positive")));
    }
    let rhs = binom3(&(x.clone() + int(3))) - int(3) + g.clone() - x.clone() * params.d_tk.clone();
    let (u, v) = div_rem_euclid(&rhs, x);
    Ok(UvRow { x: x.clone(), u, v })
}

/// Rows of the `(u, v)` table for `x = x_min, x_min + 2, ..., x_max`.
#[derive(Clone, Debug)]
pub struct UvTable<T> {
    pub params: BaseCurveParams<T>,
    pub g: T,
    pub rows: Vec<UvRow<T>>,
}

impl<T: Int> UvTable<T> {
    pub fn build(params: BaseCurveParams<T>, g: T, x_min: &T, x_max: &T) -> Result<Self> {
        if !(x_max.clone() - x_min.clone()).is_even() {
            return Err(domain("x_min and x_max must have the same parity"));
        }
        let mut rows = Vec::new();
        let mut x = x_min.clone();
        while x <= *x_max {
            rows.push(uv_row(&params, &g, &x)?);
            x = x + int(2);
        }
        Ok(UvTable { params, g, rows })
    }
}
