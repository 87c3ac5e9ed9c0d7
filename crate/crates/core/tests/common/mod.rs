//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use halphen::Big;
use num_integer::Integer;

pub fn big(v: i64) -> Big {
    Big::from(v)
}

/// `C(n, 3)` as the polynomial `n(n-1)(n-2)/6`.
pub fn choose3(n: &Big) -> Big {
    n * (n - 1) * (n - 2) / 6
}

/// `h^0(I_{C_c}(s))` read off the resolution `0 -> c O(-c-1) -> (c+1) O(-c) -> I -> 0`.
pub fn hilbert_burch(c: i64, s: i64) -> i64 {
    let h = |n: i64| if n < 0 { 0 } else { (n + 1) * (n + 2) * (n + 3) / 6 };
    (c + 1) * h(s - c) - c * h(s - c - 1)
}

/// `h^0(O_{C_c}(s))`, valid once `h^1(O_{C_c}(s))` vanishes (`s >= c - 3`).
fn h0_curve(c: i64, s: &Big) -> Big {
    let cc = big(c);
    choose3(&(s + 3)) - (&cc + 1) * choose3(&(s - &cc + 3)) + &cc * choose3(&(s - &cc + 2))
}

/// `I(s)` for `C_t ⊔ C_k` from the two resolutions rather than from degree and genus.
pub fn i_oracle(t: i64, k: i64, s: &Big) -> Big {
    choose3(&(s + 3)) - h0_curve(t, s) - h0_curve(k, s)
}

/// `(a, b, g)` rows from the defining recursion, starting at `s = t+k+1`.
pub fn recursion_rows(t: i64, k: i64, alpha: i64, steps: usize) -> Vec<(Big, Big, Big, Big)> {
    let d_tk = big(t * (t + 1) / 2 + k * (k + 1) / 2);
    let s0 = big(t + k + 1);
    let n0: Big = i_oracle(t, k, &s0) - 1;
    let (a0, b0) = n0.div_mod_floor(&s0);
    let mut rows = vec![(s0.clone(), a0.clone(), b0, big(0))];
    for _ in 0..steps {
        let (s, a, b, g) = rows.last().unwrap().clone();
        let s2 = &s + 2;
        let m: Big = (&s2 + 1) * (&s2 + 1) - 2 * (&d_tk + &a) - alpha + &b;
        let (q, r) = m.div_mod_floor(&(&s2 - 1));
        rows.push((s2, &a + &q, r, g + q - alpha));
    }
    rows
}
