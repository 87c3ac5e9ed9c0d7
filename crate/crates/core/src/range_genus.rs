//! Halphen ranges of a degree/level pair and the closed-form genus bounds.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::scalar::{binom3, int, Int};

/// Degree `d` and postulation level `m` of a space curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangePair<T> {
    pub d: T,
    pub m: T,
}

impl<T: Int> RangePair<T> {
    pub fn new(d: T, m: T) -> Result<Self> {
        if d < T::one() {
            return Err(domain(format!("degree {d} must be at least 1")));
        }
        if m < int(2) {
            return Err(domain(format!("level {m} must be at least 2")));
        }
        Ok(RangePair { d, m })
    }

    /// `m^2 + 4m + 6`, the numerator shared by the Range A cut-offs.
    fn quad(&self) -> T {
        self.m.clone() * self.m.clone() + int::<T>(4) * self.m.clone() + int(6)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RangeTag {
    Empty,
    A,
    B,
    C,
}

impl RangeTag {
    pub fn as_str(self) -> &'static str {
        match self {
            RangeTag::Empty => "Empty",
            RangeTag::A => "A",
            RangeTag::B => "B",
            RangeTag::C => "C",
        }
    }
}

impl std::fmt::Display for RangeTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Range tag together with the three cut-offs for the given level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeClass<T: Int> {
    pub tag: RangeTag,
    /// `(m^2 + 4m + 6) / 6`, first degree of Range A.
    pub lower_a: Ratio<T>,
    /// `(m^2 + 4m + 6) / 3`, first degree of Range B.
    pub lower_b: Ratio<T>,
    /// `m^2 - m`, last degree of Range B.
    pub upper_b: T,
}

pub fn classify<T: Int>(pair: &RangePair<T>) -> RangeClass<T> {
    let q = pair.quad();
    let d = &pair.d;
    let m = &pair.m;
    let upper_b = m.clone() * m.clone() - m.clone();
    let six_d = int::<T>(6) * d.clone();
    let three_d = int::<T>(3) * d.clone();
    let tag = if six_d < q {
        RangeTag::Empty
    } else if three_d < q {
        RangeTag::A
    } else if *d <= upper_b {
        RangeTag::B
    } else {
        RangeTag::C
    };
    RangeClass {
        tag,
        lower_a: Ratio::new(q.clone(), int(6)),
        lower_b: Ratio::new(q, int(3)),
        upper_b,
    }
}

/// True when `d < (m^2 + 4m + 6)/4`, the lower half of Range A handled by the construction.
pub fn in_lower_range_a<T: Int>(pair: &RangePair<T>) -> bool {
    classify(pair).tag == RangeTag::A && int::<T>(4) * pair.d.clone() < pair.quad()
}

/// `G_A(d, m) = 1 + (m - 1) d - C(m + 2, 3)`, defined for every pair.
pub fn genus_bound_a<T: Int>(pair: &RangePair<T>) -> T {
    let m = &pair.m;
    T::one() + (m.clone() - T::one()) * pair.d.clone() - binom3(&(m.clone() + int(2)))
}

/// Range C maximal genus and the residue `r` with `d + r = 0 mod m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundC<T> {
    pub genus: T,
    pub r: T,
}

pub fn genus_bound_c<T: Int>(pair: &RangePair<T>) -> Result<BoundC<T>> {
    let class = classify(pair);
    if class.tag != RangeTag::C {
        return Err(domain(format!(
            "(d={}, m={}) lies in range {}, not C",
            pair.d, pair.m, class.tag
        )));
    }
    let (d, m) = (&pair.d, &pair.m);
    let r = (m.clone() - d.mod_floor(m)).mod_floor(m);
    let num = d.clone() * (d.clone() + m.clone() * m.clone() - int::<T>(4) * m.clone())
        - r.clone() * (m.clone() - r.clone()) * (m.clone() - T::one());
    let den = int::<T>(2) * m.clone();
    let (q, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(crate::error::invariant(format!(
            "2m does not divide the Range C numerator for (d={d}, m={m})"
        )));
    }
    Ok(BoundC { genus: T::one() + q, r })
}

/// Outcome of a bound query for a chosen range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenusBound<T> {
    Value(T),
    RangeC(BoundC<T>),
    /// The Range B bound has no closed form here.
    NotRepresentable,
}

pub fn genus_bound<T: Int>(tag: RangeTag, pair: &RangePair<T>) -> Result<GenusBound<T>> {
    match tag {
        RangeTag::A => Ok(GenusBound::Value(genus_bound_a(pair))),
        RangeTag::B => Ok(GenusBound::NotRepresentable),
        RangeTag::C => genus_bound_c(pair).map(GenusBound::RangeC),
        RangeTag::Empty => Err(domain("no genus bound is attached to the empty range")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn pair(d: i64, m: i64) -> RangePair<i64> {
        RangePair::new(d, m).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&pair(10, 6)).tag, RangeTag::Empty);
        assert_eq!(classify(&pair(11, 6)).tag, RangeTag::A);
        assert_eq!(classify(&pair(21, 6)).tag, RangeTag::A);
        assert_eq!(classify(&pair(22, 6)).tag, RangeTag::B);
        assert_eq!(classify(&pair(30, 6)).tag, RangeTag::B);
        assert_eq!(classify(&pair(31, 6)).tag, RangeTag::C);
        let c = classify(&pair(11, 6));
        assert_eq!(c.lower_a.to_string(), "11");
        assert_eq!(c.lower_b.to_string(), "22");
        assert_eq!(classify(&pair(1, 7)).lower_a.to_string(), "83/6");
    }

    #[test]
    fn bound_a_examples() {
        assert_eq!(genus_bound_a(&pair(11, 6)), 0);
        assert_eq!(genus_bound_a(&pair(12, 6)), 5);
        for d in 1..50 {
            assert_eq!(genus_bound_a(&pair(d, 2)), d - 3);
        }
    }

    #[test]
    fn bound_c_examples() {
        assert_eq!(genus_bound_c(&pair(31, 6)).unwrap(), BoundC { genus: 110, r: 5 });
        assert_eq!(genus_bound_c(&pair(36, 6)).unwrap(), BoundC { genus: 145, r: 0 });
        assert!(genus_bound_c(&pair(21, 5)).is_ok());
        assert!(matches!(genus_bound_c(&pair(30, 6)), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn range_b_is_not_representable() {
        assert_eq!(genus_bound(RangeTag::B, &pair(25, 6)).unwrap(), GenusBound::NotRepresentable);
    }

    #[test]
    fn rejects_small_level() {
        assert!(RangePair::new(5i64, 1).is_err());
        assert!(RangePair::new(0i64, 5).is_err());
    }

    #[test]
    fn big_and_small_scalars_agree() {
        for m in 2..40i64 {
            for d in 1..(m * m + 2) {
                let small = pair(d, m);
                let big = RangePair::new(BigInt::from(d), BigInt::from(m)).unwrap();
                assert_eq!(classify(&small).tag, classify(&big).tag);
                assert_eq!(BigInt::from(genus_bound_a(&small)), genus_bound_a(&big));
            }
        }
    }
}
