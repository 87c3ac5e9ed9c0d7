use crate::scalar::{int, Int};

/// Which extremal `e` a step asks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GridVariant {
    /// Largest `e <= delta/2` with `b` above the threshold.
    AMax,
    /// Largest `e < delta/2` with `b` above the threshold.
    BMax,
    /// Smallest `e` in `[1, delta]` with `b` at most the threshold.
    MinScan,
}

/// Threshold shape: `Zero` is `(e-1)(delta-e-1)`, `One` is `(e-1)(delta-e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GridOffset {
    Zero,
    One,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridRule {
    pub variant: GridVariant,
    pub offset: GridOffset,
}

impl GridRule {
    pub const fn new(variant: GridVariant, offset: GridOffset) -> Self {
        GridRule { variant, offset }
    }
}

fn threshold<T: Int>(e: &T, delta: &T, offset: GridOffset) -> T {
    let tail = match offset {
        GridOffset::Zero => delta.clone() - e.clone() - T::one(),
        GridOffset::One => delta.clone() - e.clone(),
    };
    (e.clone() - T::one()) * tail
}

/// Grid size for remainder `b` and width `delta`, or `None` when no `e` qualifies.
///
/// The threshold is increasing in `e` on `[1, delta/2]`, so every variant
/// reduces to a bisection on that half.
pub fn grid_e<T: Int>(b: &T, delta: &T, rule: GridRule) -> Option<T> {
    if *delta < T::one() || b.is_negative() {
        return None;
    }
    let two = int::<T>(2);
    let above = |e: &T| *b > threshold(e, delta, rule.offset);
    match rule.variant {
        GridVariant::AMax | GridVariant::BMax => {
            let hi = if rule.variant == GridVariant::AMax {
                delta.clone() / two.clone()
            } else {
                (delta.clone() - T::one()) / two.clone()
            };
            if hi < T::one() || !above(&T::one()) {
                return None;
            }
            // Invariant: above(lo), and every e in (hi, limit] fails.
            let (mut lo, mut hi) = (T::one(), hi);
            while lo < hi {
                let mid = (lo.clone() + hi.clone() + T::one()) / two.clone();
                if above(&mid) {
                    lo = mid;
                } else {
                    hi = mid - T::one();
                }
            }
            Some(lo)
        }
        GridVariant::MinScan => {
            // The threshold peaks at ceil(delta/2); past it, it only decreases.
            let peak = (delta.clone() + T::one()) / two.clone();
            if above(&peak) {
                return None;
            }
            let (mut lo, mut hi) = (T::one(), peak);
            while lo < hi {
                let mid = (lo.clone() + hi.clone()) / two.clone();
                if above(&mid) {
                    lo = mid + T::one();
                } else {
                    hi = mid;
                }
            }
            Some(lo)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A0: GridRule = GridRule::new(GridVariant::AMax, GridOffset::Zero);
    const SCAN0: GridRule = GridRule::new(GridVariant::MinScan, GridOffset::Zero);

    fn scan(b: i64, delta: i64, rule: GridRule) -> Option<i64> {
        let thr = |e: i64| match rule.offset {
            GridOffset::Zero => (e - 1) * (delta - e - 1),
            GridOffset::One => (e - 1) * (delta - e),
        };
        match rule.variant {
            GridVariant::AMax => (1..=delta).filter(|&e| 2 * e <= delta && b > thr(e)).max(),
            GridVariant::BMax => (1..=delta).filter(|&e| 2 * e < delta && b > thr(e)).max(),
            GridVariant::MinScan => (1..=delta).find(|&e| b <= thr(e)),
        }
    }

    #[test]
    fn examples() {
        assert_eq!(grid_e(&12i64, &10, A0), Some(2));
        assert_eq!(grid_e(&12i64, &10, SCAN0), Some(3));
        assert_eq!(grid_e(&0i64, &10, A0), None);
    }

    #[test]
    fn bisection_matches_scan() {
        for variant in [GridVariant::AMax, GridVariant::BMax, GridVariant::MinScan] {
            for offset in [GridOffset::Zero, GridOffset::One] {
                let rule = GridRule::new(variant, offset);
                for delta in 1..40 {
                    for b in 0..(delta * delta / 2 + 3) {
                        assert_eq!(grid_e(&b, &delta, rule), scan(b, delta, rule), "{rule:?} b={b} d={delta}");
                    }
                }
            }
        }
    }
}
