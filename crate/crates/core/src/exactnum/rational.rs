use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::NumError;

/// Builds the canonical rational `p/q`: positive denominator, reduced, zero as `0/1`.
pub fn make_rational(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<BigRational, NumError> {
    let q = q.into();
    if q.is_zero() {
        return Err(NumError::ZeroDenominator);
    }
    Ok(BigRational::new(p.into(), q))
}

/// Integer as a rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact square root of a rational, when it is a perfect square.
pub(crate) fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    if &(&rn * &rn) != n {
        return None;
    }
    let rd = d.sqrt();
    if &(&rd * &rd) != d {
        return None;
    }
    Some(BigRational::new(rn, rd))
}

/// Largest dyadic `k / 2^bits` not exceeding `q`.
pub(crate) fn floor_dyadic(q: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::from(1) << bits;
    let scaled = (q * &scale).floor().to_integer();
    BigRational::new(scaled, scale)
}

/// Smallest dyadic `k / 2^bits` not below `q`.
pub(crate) fn ceil_dyadic(q: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::from(1) << bits;
    let scaled = (q * &scale).ceil().to_integer();
    BigRational::new(scaled, scale)
}

/// Renders `q` rounded to `digits` places after the decimal point.
pub fn format_decimal(q: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (q * BigRational::from_integer(scale.clone())).round().to_integer();
    let negative = scaled.is_negative();
    let magnitude = scaled.abs();
    let int_part = &magnitude / &scale;
    let frac_part = &magnitude % &scale;
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
}
