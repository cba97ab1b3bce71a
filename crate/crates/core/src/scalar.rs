//! Scalar abstraction for closed-form quantities (densities, probabilities).
//!
//! Counts and lengths are always integers; the ratios built from them are
//! evaluated in whatever numeric type the caller picks. Exact rationals are
//! used for every comparison that feeds a verdict, floats only for display.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num};

/// A numeric field closed-form formulas can be evaluated in.
pub trait Scalar: Num + Clone + PartialOrd + Debug + Send + Sync {
    fn from_count(n: u64) -> Self;

    fn ratio(num: u64, den: u64) -> Self {
        Self::from_count(num) / Self::from_count(den)
    }
}

impl<T> Scalar for T
where
    T: Num + FromPrimitive + Clone + PartialOrd + Debug + Send + Sync,
{
    fn from_count(n: u64) -> Self {
        T::from_u64(n).expect("count representable in scalar type")
    }
}

/// Rounds the non-negative ratio `num / den` half-up to thousandths.
pub fn round_half_up_thousandths(num: u64, den: u64) -> u64 {
    assert!(den > 0, "zero denominator");
    let num = u128::from(num) * 2000 + u128::from(den);
    let den = 2 * u128::from(den);
    (num / den) as u64
}

/// Renders thousandths in the table style: `.781`, `1.000`.
pub fn format_thousandths(thousandths: u64) -> String {
    let whole = thousandths / 1000;
    let frac = thousandths % 1000;
    if whole == 0 {
        format!(".{frac:03}")
    } else {
        format!("{whole}.{frac:03}")
    }
}

/// Renders thousandths with an explicit leading digit: `0.781`.
pub fn format_thousandths_decimal(thousandths: u64) -> String {
    format!("{}.{:03}", thousandths / 1000, thousandths % 1000)
}

/// Parses a printed three-place density such as `.6`, `.523` or `0.615` into thousandths.
pub fn parse_thousandths(text: &str) -> Option<u64> {
    let (whole, frac) = match text.split_once('.') {
        Some((w, f)) => (w, f),
        None => (text, ""),
    };
    if frac.len() > 3 || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let whole: u64 = if whole.is_empty() {
        0
    } else {
        whole.parse().ok()?
    };
    let mut frac_val = 0u64;
    for (idx, b) in frac.bytes().enumerate() {
        frac_val += u64::from(b - b'0') * 10u64.pow(2 - idx as u32);
    }
    Some(whole * 1000 + frac_val)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Exact, Rational};

    #[test]
    fn half_up_rounding() {
        assert_eq!(round_half_up_thousandths(1, 2), 500);
        assert_eq!(round_half_up_thousandths(10, 17), 588);
        assert_eq!(round_half_up_thousandths(553, 708), 781);
        // 0.0125 exactly -> 0.013
        assert_eq!(round_half_up_thousandths(1, 80), 13);
        assert_eq!(round_half_up_thousandths(2, 1), 2000);
    }

    #[test]
    fn thousandths_round_trip() {
        assert_eq!(format_thousandths(781), ".781");
        assert_eq!(format_thousandths(500), ".500");
        assert_eq!(format_thousandths(1000), "1.000");
        assert_eq!(format_thousandths_decimal(615), "0.615");
        assert_eq!(parse_thousandths(".6"), Some(600));
        assert_eq!(parse_thousandths(".523"), Some(523));
        assert_eq!(parse_thousandths("0.615"), Some(615));
        assert_eq!(parse_thousandths(".5234"), None);
    }

    #[test]
    fn scalar_types_agree() {
        let exact = Exact::ratio(10, 17);
        let small = Rational::ratio(10, 17);
        let float = f64::ratio(10, 17);
        assert_eq!(*exact.numer(), 10.into());
        assert_eq!(small, Rational::new(10, 17));
        assert!((float - 10.0 / 17.0).abs() < 1e-15);
    }
}
