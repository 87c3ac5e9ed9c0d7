//! Choice of the base curves `C_t`, `C_k` and of the switch level `y`.

use super::ALPHA_DEFAULT;
use crate::error::Result;
use crate::scalar::{int, Int};
use crate::sequence_engine::{genus_ct, row_closed_form, BaseCurveParams, SequenceTable};

/// Largest `t` with `f(t)` true, assuming `f` is monotone (true then false) and `f(lo)` holds.
fn last_true<T: Int>(lo: T, f: impl Fn(&T) -> bool) -> T {
    let mut lo = lo;
    let mut hi = lo.clone() + T::one();
    while f(&hi) {
        lo = hi.clone();
        hi = hi * int(2);
    }
    while hi.clone() - lo.clone() > T::one() {
        let mid = (lo.clone() + hi.clone()) / int(2);
        if f(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Maximal `t >= 1` with `10^6 g_t <= 999999 g`, or `None` for negative `g`.
pub fn select_t<T: Int>(g: &T) -> Option<T> {
    let rhs = int::<T>(999_999) * g.clone();
    let fits = |t: &T| int::<T>(1_000_000) * genus_ct(t) <= rhs;
    if !fits(&T::one()) {
        return None;
    }
    Some(last_true(T::one(), fits))
}

/// Maximal `k >= 1` with `g_t + g_k <= g` and `t + k = m (mod 2)`.
pub fn select_k<T: Int>(g: &T, t: &T, m: &T) -> Option<T> {
    let rem = g.clone() - genus_ct(t);
    if rem.is_negative() {
        return None;
    }
    // g_1 = g_2 = 0, so the search starts at 2.
    let mut k = last_true(int::<T>(2), |k: &T| genus_ct(k) <= rem);
    if !(t.clone() + k.clone() - m.clone()).is_even() {
        k = k - T::one();
    }
    Some(k)
}

/// Last level `s = t+k+1 (mod 2)` with `g_tk + g(s) <= g`, by extending `table` one row at a time.
///
/// On return the table also holds the first row past the threshold.
pub fn select_y_scan<T: Int>(table: &mut SequenceTable<T>, g: &T) -> Result<T> {
    let g_tk = table.params().g_tk.clone();
    let mut s = table.params().s0();
    loop {
        let next = s.clone() + int(2);
        table.extend_to(&next)?;
        let row = table.row(&next).expect("row was just added");
        if g_tk.clone() + row.g.clone() > *g {
            return Ok(s);
        }
        s = next;
    }
}

/// Same threshold as [`select_y_scan`], found by galloping and bisection on the closed-form rows.
pub fn select_y_fast<T: Int>(params: &BaseCurveParams<T>, alpha: &T, g: &T) -> Result<T> {
    let s0 = params.s0();
    let level = |j: &T| s0.clone() + int::<T>(2) * j.clone();
    let within = |j: &T| -> Result<bool> {
        let row = row_closed_form(params, alpha, &level(j))?;
        Ok(params.g_tk.clone() + row.g <= *g)
    };
    let mut lo = T::zero();
    let mut hi = T::one();
    while within(&hi)? {
        lo = hi.clone();
        hi = hi * int(2);
    }
    while hi.clone() - lo.clone() > T::one() {
        let mid = (lo.clone() + hi.clone()) / int(2);
        if within(&mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(level(&lo))
}

/// `t, k, y` for a genus and level, with the default `alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection<T> {
    pub t: T,
    pub k: T,
    pub y: T,
}

/// Fast selection used by the samplers; `None` when no admissible `t, k` exists.
pub fn select_all<T: Int>(g: &T, m: &T) -> Option<Selection<T>> {
    let t = select_t(g)?;
    let k = select_k(g, &t, m)?;
    let params = BaseCurveParams::new(t.clone(), k.clone()).ok()?;
    let y = select_y_fast(&params, &int(ALPHA_DEFAULT), g).ok()?;
    Some(Selection { t, k, y })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Big;

    #[test]
    fn select_t_matches_linear_scan() {
        let g1000 = genus_ct(&1000i128);
        for g in [g1000 - 1, g1000, g1000 + 1, g1000 + 1000, g1000 * 2] {
            let scan = (1..2000i128).filter(|t| 1_000_000 * genus_ct(t) <= 999_999 * g).max();
            assert_eq!(select_t(&g), scan);
        }
        assert_eq!(select_t(&0i128), Some(2));
        assert_eq!(select_t(&-1i128), None);
    }

    #[test]
    fn select_t_bracket_at_large_genus() {
        let g: Big = Big::from(10u64).pow(15);
        let t = select_t(&g).unwrap();
        assert!(t >= Big::from(1000));
        assert!(Big::from(1_000_000) * genus_ct(&t) <= Big::from(999_999) * &g);
        assert!(Big::from(1_000_000) * genus_ct(&(&t + 1)) > Big::from(999_999) * &g);
        let m = Big::from(2_000_001u64);
        let k = select_k(&g, &t, &m).unwrap();
        assert!((&t + &k - &m) % 2 == Big::from(0));
        assert!(t > (&k * 30 - 30) && &k * 200 > t);
    }

    #[test]
    fn select_k_bracket() {
        for g in (0..4000i128).step_by(37) {
            let t = select_t(&g).unwrap();
            for m in [100i128, 101] {
                let k = select_k(&g, &t, &m).unwrap();
                let g_tk = genus_ct(&t) + genus_ct(&k);
                assert!(g_tk <= g && g < genus_ct(&t) + genus_ct(&(k + 2)));
                assert_eq!((t + k - m).rem_euclid(2), 0);
            }
        }
    }

    #[test]
    fn y_scan_and_fast_agree() {
        for (t, k) in [(1000i128, 300i128), (3000, 500), (5000, 4000)] {
            let p = BaseCurveParams::new(t, k).unwrap();
            for extra in [0i128, 1, 500, 20_000, 400_000] {
                let g = p.g_tk + extra;
                let mut table = SequenceTable::build(p.clone(), 202, &p.s0()).unwrap();
                let y = select_y_scan(&mut table, &g).unwrap();
                assert_eq!(y, select_y_fast(&p, &202, &g).unwrap());
                if extra == 0 {
                    assert_eq!(y, p.s0());
                }
            }
        }
    }
}
