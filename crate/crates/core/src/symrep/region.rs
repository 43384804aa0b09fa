//! Regions of nonzero 4-vectors cut out by where the maximal valuation sits.

use serde::Serialize;

use super::series::{Series, SeriesVec};
use super::SymrepError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RegionTag {
    /// Maximal valuation attained at component `i`.
    pub a: [bool; 4],
    /// Maximal valuation attained only at component `i`.
    pub a_strict: [bool; 4],
    /// In `A_1` with `v(x_1) = v(x_4)`.
    pub e: bool,
    /// In `(A_2 & A_3) \ (A_1 | A_4)`.
    pub b: bool,
    /// In `B` with `L(t^3 x_1) + L(t^2 x_2) = 0`.
    pub s: bool,
}

/// Leading terms of `t^3 x_1` and `t^2 x_2` cancel.
fn s_condition(x1: &Series, x2: &Series) -> bool {
    x1.shift(3).leading_series().add(&x2.shift(2).leading_series()).is_zero()
}

/// Leading terms of `3 t^2 x_1` and `2 t x_2` cancel.
pub fn third_column_condition(x1: &Series, x2: &Series) -> bool {
    x1.shift(2).leading_series().scale(3).add(&x2.shift(1).leading_series().scale(2)).is_zero()
}

pub fn classify_region(v: &SeriesVec) -> Result<RegionTag, SymrepError> {
    if v.is_zero() {
        return Err(SymrepError::ZeroVector);
    }
    let vals = v.valuations();
    let max = vals.iter().copied().max().flatten();
    let a: [bool; 4] = std::array::from_fn(|i| vals[i] == max);
    let count = a.iter().filter(|&&x| x).count();
    let a_strict = std::array::from_fn(|i| a[i] && count == 1);
    let e = a[0] && vals[0] == vals[3];
    let b = a[1] && a[2] && !a[0] && !a[3];
    let s = b && s_condition(&v.0[0], &v.0[1]);
    Ok(RegionTag { a, a_strict, e, b, s })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tm1(q: u64) -> Series {
        Series::monomial(1, -1, q)
    }

    #[test]
    fn examples() {
        let z = Series::zero(5);
        let r = classify_region(&SeriesVec([tm1(5), z.clone(), z.clone(), z.clone()])).unwrap();
        assert_eq!(r.a, [true, false, false, false]);
        assert_eq!(r.a_strict, [true, false, false, false]);
        assert!(!r.e && !r.b);

        let r = classify_region(&SeriesVec([tm1(5), z.clone(), z.clone(), tm1(5)])).unwrap();
        assert_eq!(r.a, [true, false, false, true]);
        assert!(r.e && r.a_strict.iter().all(|&x| !x));

        let r = classify_region(&SeriesVec([z.clone(), tm1(5), tm1(5), z.clone()])).unwrap();
        assert!(r.a[1] && r.a[2] && r.b && !r.s);

        assert_eq!(classify_region(&SeriesVec::zero(5)), Err(SymrepError::ZeroVector));
    }

    #[test]
    fn s_membership() {
        let q = 5;
        let x1 = Series::monomial(-2, -3, q);
        let x2 = Series::monomial(2, -2, q);
        let r = classify_region(&SeriesVec([x1.clone(), x2.clone(), Series::monomial(1, -2, q), Series::zero(q)])).unwrap();
        assert!(r.b && r.s);
        assert!(!third_column_condition(&x1, &x2));
    }
}
