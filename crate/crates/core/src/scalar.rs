//! Integer scalar abstraction shared by the sequence, range and planner code.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable as the value type of every table.
///
/// Implemented for `BigInt` and `i128`. The `i128` instance overflows
/// (and panics in debug builds) once values pass roughly 1.7e38, which
/// is far beyond the parameter sizes exercised by the test suites.
pub trait Int:
    Integer + Signed + Clone + Debug + Display + FromStr + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Lift a machine integer into `T`.
#[inline]
pub fn int<T: Int>(v: i64) -> T {
    T::from_i64(v).expect("i64 fits every Int")
}

/// Binomial coefficient C(n, 3) for any integer n (zero for 0 <= n < 3).
pub fn binom3<T: Int>(n: &T) -> T {
    n.clone() * (n.clone() - T::one()) * (n.clone() - int(2)) / int(6)
}

/// Binomial coefficient C(n, 2).
pub fn binom2<T: Int>(n: &T) -> T {
    n.clone() * (n.clone() - T::one()) / int(2)
}

/// Euclidean division with a remainder in `[0, |m|)`.
pub fn div_rem_euclid<T: Int>(n: &T, m: &T) -> (T, T) {
    let (q, r) = n.div_mod_floor(m);
    if r.is_negative() {
        (q + T::one(), r - m.clone())
    } else {
        (q, r)
    }
}

/// Floor of the integer square root of a non-negative value.
pub fn isqrt<T: Int>(n: &T) -> T {
    assert!(!n.is_negative(), "isqrt of a negative value");
    if n.is_zero() {
        return T::zero();
    }
    // Seed from f64 and correct; exact for every size.
    let mut x = match n.to_f64() {
        Some(f) if f.is_finite() => T::from_f64(f.sqrt()).unwrap_or_else(|| n.clone()),
        _ => n.clone(),
    };
    if x.is_zero() {
        x = T::one();
    }
    loop {
        let y = (x.clone() + n.clone() / x.clone()) / int(2);
        if y >= x {
            break;
        }
        x = y;
    }
    while x.clone() * x.clone() > *n {
        x = x - T::one();
    }
    while (x.clone() + T::one()) * (x.clone() + T::one()) <= *n {
        x = x + T::one();
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn binomials_match_factorial_definition() {
        // Pascal's triangle as the oracle.
        let mut row = vec![1i128];
        for n in 0i128..60 {
            let c3 = row.get(3).copied().unwrap_or(0);
            assert_eq!(binom3::<i128>(&n), c3, "n = {n}");
            let mut next = vec![1i128; row.len() + 1];
            for j in 1..row.len() {
                next[j] = row[j - 1] + row[j];
            }
            row = next;
        }
        assert_eq!(binom2::<i64>(&10), 45);
    }

    #[test]
    fn euclid_remainder_is_non_negative() {
        assert_eq!(div_rem_euclid::<i64>(&-7, &3), (-3, 2));
        assert_eq!(div_rem_euclid::<i64>(&7, &3), (2, 1));
    }

    #[test]
    fn roots_are_floors() {
        let big: BigInt = "123456789012345678901234567890123".parse().unwrap();
        let r = isqrt(&big);
        assert!(&r * &r <= big && (&r + 1) * (&r + 1) > big);
        assert_eq!(isqrt::<i64>(&99), 9);
    }
}
