//! Case split of a Horace step and the trace count it must balance.

use serde::Serialize;

use crate::scalar::{int, Int};
use crate::sequence_engine::BaseCurveParams;

/// Bracket containing the remainder `b` of a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    A,
    B,
    C,
    EmptyGrid,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::A => "a",
            CaseTag::B => "b",
            CaseTag::C => "c",
            CaseTag::EmptyGrid => "empty-grid",
        }
    }
}

/// Every bracket containing `b`, with `L = (e-1)(delta-e-1)`:
/// (a) `L + alpha - e <= b <= e(delta-e-1)`,
/// (b) `L + e - 1 <= b <= L + alpha - 1 - e`,
/// (c) `L < b <= L + e - 2`.
pub fn matching_cases<T: Int>(b: &T, delta: &T, e: &T, alpha: &T) -> Vec<CaseTag> {
    if b.is_zero() {
        return vec![CaseTag::EmptyGrid];
    }
    let one = T::one();
    let l = (e.clone() - one.clone()) * (delta.clone() - e.clone() - one.clone());
    let mut out = Vec::new();
    let upper_a = e.clone() * (delta.clone() - e.clone() - one.clone());
    if l.clone() + alpha.clone() - e.clone() <= *b && *b <= upper_a {
        out.push(CaseTag::A);
    }
    if l.clone() + e.clone() - one.clone() <= *b && *b <= l.clone() + alpha.clone() - one - e.clone() {
        out.push(CaseTag::B);
    }
    if l < *b && *b <= l + e.clone() - int(2) {
        out.push(CaseTag::C);
    }
    out
}

/// The unique bracket containing `b`, or `None` if zero or several match.
pub fn case_tag<T: Int>(b: &T, delta: &T, e: &T, alpha: &T) -> Option<CaseTag> {
    match matching_cases(b, delta, e, alpha).as_slice() {
        [one] => Some(*one),
        _ => None,
    }
}

/// Both sides of `2 d_tk + #Psi + b(s+2) = (s+3-e')(s+3-delta+e')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimOne<T> {
    pub e_prime: T,
    pub psi: T,
    pub lhs: T,
    pub rhs: T,
}

impl<T: Int> ClaimOne<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Recursion data of one step from level `s` to `s + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepData<T> {
    pub s: T,
    pub a: T,
    pub b: T,
    pub b_next: T,
    pub delta: T,
}

/// Trace count of a step for grid size `e` in the given case.
pub fn claim_one<T: Int>(
    params: &BaseCurveParams<T>,
    alpha: &T,
    step: &StepData<T>,
    e: &T,
    case: CaseTag,
) -> ClaimOne<T> {
    let StepData { s, a, b, b_next, delta } = step;
    let one = T::one();
    let two_a_minus_b = int::<T>(2) * a.clone() - b.clone();
    let e2 = e.clone() * e.clone();
    let (e_prime, psi) = match case {
        CaseTag::A => (
            e.clone() + one.clone(),
            two_a_minus_b + (e.clone() - one.clone()) * delta.clone() - e2 - int::<T>(2) * e.clone()
                + alpha.clone()
                - one,
        ),
        CaseTag::B | CaseTag::C => (
            e.clone(),
            two_a_minus_b + (e.clone() - int(2)) * delta.clone() - e2 + alpha.clone(),
        ),
        CaseTag::EmptyGrid => (
            one.clone(),
            two_a_minus_b - delta.clone() + alpha.clone() - one,
        ),
    };
    let lhs = int::<T>(2) * params.d_tk.clone() + psi.clone() + b_next.clone();
    let s3 = s.clone() + int(3);
    let rhs = (s3.clone() - e_prime.clone()) * (s3 - delta.clone() + e_prime.clone());
    ClaimOne { e_prime, psi, lhs, rhs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence_engine::SequenceTable;

    #[test]
    fn brackets_partition_small_e() {
        let (delta, alpha) = (400i64, 202i64);
        for e in 1..=101 {
            let l = (e - 1) * (delta - e - 1);
            for b in (l + 1)..=(e * (delta - e - 1)) {
                assert_eq!(matching_cases(&b, &delta, &e, &alpha).len(), 1, "e={e} b={b}");
            }
        }
        assert_eq!(case_tag(&0i64, &delta, &3, &alpha), Some(CaseTag::EmptyGrid));
    }

    #[test]
    fn brackets_overlap_for_large_e() {
        let (delta, alpha, e) = (400i64, 202i64, 102i64);
        let l = (e - 1) * (delta - e - 1);
        assert_eq!(case_tag(&(l + 100), &delta, &e, &alpha), None);
    }

    #[test]
    fn claim_one_holds_on_table_rows() {
        let p = BaseCurveParams::<i64>::from_i64(30, 20).unwrap();
        let table = SequenceTable::build(p.clone(), 2, &(51 + 40)).unwrap();
        let rows = table.rows();
        for w in rows.windows(2) {
            let delta = w[1].a - w[0].a;
            for e in 1..6 {
                for case in [CaseTag::A, CaseTag::B, CaseTag::C, CaseTag::EmptyGrid] {
                    let step = StepData { s: w[0].s, a: w[0].a, b: w[0].b, b_next: w[1].b, delta };
                    let c = claim_one(&p, &2, &step, &e, case);
                    assert!(c.holds(), "{c:?}");
                }
            }
        }
    }
}
