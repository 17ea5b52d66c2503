//! Scalar fields the engine can run over.
//!
//! Every algebraic routine in this crate is generic over [`Scalar`]. The
//! exact rational type [`crate::Q`] is the default and the only one whose
//! rank computations are trustworthy for every input; the floating point
//! impls exist for quick experiments on small, well-conditioned data.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, Signed, ToPrimitive, Zero};

/// A field of characteristic zero.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static {
    /// True when zero tests are exact.
    const EXACT: bool;

    /// The rational number `num / den`. Panics on `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Whether the value is treated as zero by elimination.
    fn is_negligible(&self) -> bool;

    /// Magnitude used to rank pivot candidates.
    fn magnitude(&self) -> f64;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::MAX)
    }
}

/// Fixed-width rationals. Arithmetic overflows on large intermediate values,
/// so this is only suitable for tiny matrices.
impl Scalar for Rational64 {
    const EXACT: bool = true;

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational64::new(num, den)
    }

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::MAX)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn is_negligible(&self) -> bool {
        self.abs() < 1e-9
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f32 / den as f32
    }

    fn is_negligible(&self) -> bool {
        self.abs() < 1e-4
    }

    fn magnitude(&self) -> f64 {
        self.abs() as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_agree_across_fields() {
        let q = BigRational::from_ratio(3, 6);
        assert_eq!(q, BigRational::new(1.into(), 2.into()));
        assert_eq!(f64::from_ratio(3, 6), 0.5);
        assert_eq!(Rational64::from_ratio(-2, 4), Rational64::new(-1, 2));
        assert!(f32::from_ratio(1, 100_000).is_negligible());
        assert!(!BigRational::from_ratio(1, 1_000_000).is_negligible());
    }
}
