
use super::{big_i, level_identity_holds, BaseCurveParams};
use crate::error::{domain, invariant, Result};
use crate::scalar::{binom3, div_rem_euclid, int, Int};

/// One level of the `(a, b, g)` recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqRow<T> {
    pub s: T,
    pub a: T,
    pub b: T,
    pub g: T,
    /// False once `a` turns negative (tiny `t, k` with a large `alpha`).
    pub in_model: bool,
}

/// Base level `s = t+k+1`: `(t+k+1) a + b = C(t+k+4, 3) - 3 + g_tk - (t+k+1) d_tk`, `0 <= b <= t+k`.
pub fn base_row<T: Int>(params: &BaseCurveParams<T>) -> SeqRow<T> {
    let s = params.s0();
    let rhs = binom3(&(s.clone() + int(3))) - int(3) + params.g_tk.clone()
        - s.clone() * params.d_tk.clone();
    let (a, b) = div_rem_euclid(&rhs, &s);
    SeqRow { in_model: !a.is_negative(), s, a, b, g: T::zero() }
}

/// Row at level `s` without running the recursion.
///
/// For `s >= t+k+3` the pair `(a, b)` is the Euclidean division
/// `(s-1) a + b = I(s) - 1 - a(t+k+1) - alpha (s-t-k-1)/2`.
pub fn row_closed_form<T: Int>(params: &BaseCurveParams<T>, alpha: &T, s: &T) -> Result<SeqRow<T>> {
    let s0 = params.s0();
    check_level(&s0, s)?;
    let base = base_row(params);
    if *s == s0 {
        return Ok(base);
    }
    let steps = (s.clone() - s0) / int(2);
    let rhs = big_i(params, s)? - T::one() - base.a.clone() - alpha.clone() * steps.clone();
    let (a, b) = div_rem_euclid(&rhs, &(s.clone() - T::one()));
    let g = a.clone() - base.a - alpha.clone() * steps;
    Ok(SeqRow { s: s.clone(), in_model: !a.is_negative(), a, b, g })
}

fn check_level<T: Int>(s0: &T, s: &T) -> Result<()> {
    if s < s0 || !(s.clone() - s0.clone()).is_even() {
        return Err(domain(format!("level {s} is not of the form t+k+1+2j (t+k+1 = {s0})")));
    }
    Ok(())
}

/// Rows of the recursion for `s = t+k+1, t+k+3, ...`.
#[derive(Clone, Debug)]
pub struct SequenceTable<T> {
    params: BaseCurveParams<T>,
    alpha: T,
    rows: Vec<SeqRow<T>>,
}

impl<T: Int> SequenceTable<T> {
    /// Table from the base level up to `s_max` (same parity as `t+k+1`).
    pub fn build(params: BaseCurveParams<T>, alpha: T, s_max: &T) -> Result<Self> {
        if alpha.is_negative() {
            return Err(domain("alpha must be non-negative"));
        }
        check_level(&params.s0(), s_max)?;
        let base = base_row(&params);
        let mut table = SequenceTable { params, alpha, rows: vec![base] };
        table.check_row(0)?;
        table.extend_to(s_max)?;
        Ok(table)
    }

    /// Continue the recursion from an arbitrary row instead of the base level.
    pub fn resume_from(params: BaseCurveParams<T>, alpha: T, row: SeqRow<T>, s_max: &T) -> Result<Self> {
        check_level(&params.s0(), &row.s)?;
        let mut table = SequenceTable { params, alpha, rows: vec![row] };
        table.check_row(0)?;
        table.extend_to(s_max)?;
        Ok(table)
    }

    pub fn params(&self) -> &BaseCurveParams<T> {
        &self.params
    }

    pub fn alpha(&self) -> &T {
        &self.alpha
    }

    pub fn rows(&self) -> &[SeqRow<T>] {
        &self.rows
    }

    pub fn last(&self) -> &SeqRow<T> {
        self.rows.last().expect("table has a base row")
    }

    /// Append rows until the last level is at least `s_max`.
    pub fn extend_to(&mut self, s_max: &T) -> Result<()> {
        while self.last().s < *s_max {
            self.push_next()?;
        }
        Ok(())
    }

    /// Append the next row and return it.
    pub fn push_next(&mut self) -> Result<&SeqRow<T>> {
        let prev = self.last();
        let s = prev.s.clone() + int(2);
        let m = (s.clone() + T::one()) * (s.clone() + T::one())
            - int::<T>(2) * (self.params.d_tk.clone() + prev.a.clone())
            - self.alpha.clone()
            + prev.b.clone();
        let (q, b) = div_rem_euclid(&m, &(s.clone() - T::one()));
        let a = prev.a.clone() + q.clone();
        let g = prev.g.clone() + q - self.alpha.clone();
        self.rows.push(SeqRow { in_model: !a.is_negative(), s, a, b, g });
        self.check_row(self.rows.len() - 1)?;
        Ok(self.last())
    }

    fn check_row(&self, idx: usize) -> Result<()> {
        let row = &self.rows[idx];
        if !level_identity_holds(&self.params, row) {
            return Err(invariant(format!(
                "level identity fails at s={} (a={}, b={}, g={})",
                row.s, row.a, row.b, row.g
            )));
        }
        Ok(())
    }

    /// Row at level `s`, if stored.
    pub fn row(&self, s: &T) -> Option<&SeqRow<T>> {
        let first = &self.rows[0].s;
        if s < first || !(s.clone() - first.clone()).is_even() {
            return None;
        }
        let idx = ((s.clone() - first.clone()) / int(2)).to_usize()?;
        self.rows.get(idx)
    }

    /// Step width `delta(s) = a(s+2) - a(s)`.
    pub fn delta(&self, s: &T) -> Result<T> {
        let lo = self.row(s).ok_or_else(|| domain(format!("row s={s} missing")))?;
        let next = s.clone() + int(2);
        let hi = self.row(&next).ok_or_else(|| domain(format!("row s={next} missing")))?;
        Ok(hi.a.clone() - lo.a.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(t: i64, k: i64) -> BaseCurveParams<i64> {
        BaseCurveParams::from_i64(t, k).unwrap()
    }

    #[test]
    fn base_row_example() {
        let r = base_row(&params(3, 2));
        assert_eq!((r.a, r.b, r.g), (5, 0, 0));
    }

    #[test]
    fn recursion_example() {
        let t = SequenceTable::build(params(3, 2), 2, &8).unwrap();
        let r = t.row(&8).unwrap();
        assert_eq!((r.a, r.b, r.g), (12, 2, 5));
        assert_eq!(t.delta(&6).unwrap(), 12 - t.row(&6).unwrap().a);
        assert!(t.delta(&8).is_err());
        assert!(t.row(&7).is_none());
    }

    #[test]
    fn rejects_wrong_parity() {
        assert!(SequenceTable::build(params(3, 2), 2, &9).is_err());
    }

    #[test]
    fn tiny_parameters_leave_the_model_without_panicking() {
        let t = SequenceTable::build(params(1, 1), 202, &41).unwrap();
        assert!(t.rows().iter().any(|r| !r.in_model));
    }

    #[test]
    fn closed_form_matches_recursion() {
        for (t, k, alpha) in [(3, 2, 2), (4, 4, 0), (10, 7, 202), (50, 4, 13)] {
            let table = SequenceTable::build(params(t, k), alpha, &(t + k + 1 + 120)).unwrap();
            for row in table.rows() {
                assert_eq!(row_closed_form(&params(t, k), &alpha, &row.s).unwrap(), *row);
            }
        }
    }
}
