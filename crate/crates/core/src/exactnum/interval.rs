//! Certified rational enclosures of tower elements.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::node::Node;
use super::rational::{ceil_dyadic, floor_dyadic};
use super::{FieldElem, NumError};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(q: BigRational) -> Interval {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    /// `-1`/`+1` when the interval lies strictly on one side of zero,
    /// `0` for the degenerate interval `[0, 0]`, `None` when undecided.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    pub(crate) fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub(crate) fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().cloned().unwrap();
        let hi = products.iter().max().cloned().unwrap();
        Interval { lo, hi }
    }

    pub(crate) fn scale(&self, q: &BigRational) -> Interval {
        let a = &self.lo * q;
        let b = &self.hi * q;
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    /// Outward rounding to multiples of `2^-bits`.
    pub(crate) fn round_out(&self, bits: u32) -> Interval {
        Interval {
            lo: floor_dyadic(&self.lo, bits),
            hi: ceil_dyadic(&self.hi, bits),
        }
    }
}

/// Enclosure of `sqrt` over a non-negative interval, on the `2^-bits` grid.
pub(crate) fn sqrt_interval(iv: &Interval, bits: u32) -> Interval {
    let scale = BigRational::from_integer(BigInt::from(1) << (2 * bits));
    let denom = BigInt::from(1) << bits;
    let lo = if iv.lo.is_positive() {
        let n = (&iv.lo * &scale).floor().to_integer();
        BigRational::new(n.sqrt(), denom.clone())
    } else {
        BigRational::zero()
    };
    let n = (&iv.hi * &scale).ceil().to_integer();
    let mut s = n.sqrt();
    if &s * &s < n {
        s += 1;
    }
    Interval {
        lo,
        hi: BigRational::new(s, denom),
    }
}

fn enclose(n: &Node, rads: &[Node], bits: u32) -> Interval {
    match n {
        Node::Rat(q) => Interval::point(q.clone()),
        Node::Ext { level, x, y } => {
            let ix = enclose(x, rads, bits);
            let iy = enclose(y, rads, bits);
            let ir = enclose(&rads[level - 1], rads, bits);
            let root = sqrt_interval(&ir, bits);
            ix.add(&iy.mul(&root)).round_out(bits)
        }
    }
}

impl FieldElem {
    /// Certified interval of width at most `eps` containing the exact value.
    pub fn to_interval(&self, eps: &BigRational) -> Result<Interval, NumError> {
        if !eps.is_positive() {
            return Err(NumError::NonPositiveTolerance);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Interval::point(q.clone()));
        }
        let mut bits = 64u32;
        loop {
            let iv = enclose(self.node(), self.tower().rads(), bits);
            if &iv.width() <= eps {
                return Ok(iv);
            }
            bits *= 2;
        }
    }

    /// Nearest double, via an enclosure of width `2^-60` relative to magnitude one.
    pub fn to_f64(&self) -> f64 {
        let eps = BigRational::new(1.into(), BigInt::from(1) << 60);
        self.to_interval(&eps)
            .map(|iv| iv.midpoint_f64())
            .unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::make_rational;

    fn eps(p: i64, q: i64) -> BigRational {
        make_rational(p, q).unwrap()
    }

    #[test]
    fn rationals_are_exact() {
        let x = FieldElem::ratio(5, 2);
        let iv = x.to_interval(&eps(1, 1)).unwrap();
        assert_eq!(iv, Interval::point(make_rational(5, 2).unwrap()));
    }

    #[test]
    fn sqrt3_digits() {
        let s3 = FieldElem::from_int(3).sqrt_adjoin().unwrap();
        let e = eps(1, 1_000_000);
        let iv = s3.to_interval(&e).unwrap();
        assert!(iv.width() <= e);
        // Digit oracle: 1.7320508^2 < 3 < 1.7320509^2
        let lo = make_rational(17_320_508, 10_000_000).unwrap();
        let hi = make_rational(17_320_509, 10_000_000).unwrap();
        assert!(&lo * &lo < BigRational::from_integer(3.into()));
        assert!(&hi * &hi > BigRational::from_integer(3.into()));
        assert!(iv.lo >= lo - &e && iv.hi <= hi + &e);
    }

    #[test]
    fn interval_agrees_with_sign() {
        let s3 = FieldElem::from_int(3).sqrt_adjoin().unwrap();
        let x = FieldElem::from_int(7) - FieldElem::from_int(4) * &s3;
        let iv = x.to_interval(&eps(1, 1000)).unwrap();
        assert_eq!(iv.sign(), Some(1));
        assert_eq!(x.sign(), 1);
    }

    #[test]
    fn rejects_non_positive_tolerance() {
        let x = FieldElem::one();
        assert_eq!(x.to_interval(&eps(0, 1)), Err(NumError::NonPositiveTolerance));
    }
}
