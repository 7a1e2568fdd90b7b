use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ConstructionError;
use crate::exactnum::{BigRational, Interval};

/// Outcome of the regular n-gon additivity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NgonVerdict {
    pub n: u32,
    /// Exact: `a^2 + b^2 == c^2`.
    pub holds: bool,
    pub kappa: Interval,
    /// Enclosure of `kappa * (a^2 + b^2 - c^2)`.
    pub residual: Interval,
}

/// Enclosure of `atan(x)` for rational `0 < x < 1` from the alternating series.
fn atan_small(x: &BigRational, bits: u32) -> Interval {
    let tol = BigRational::new(BigInt::one(), BigInt::one() << (bits + 8));
    let x2 = x * x;
    let mut power = x.clone();
    let mut sum = BigRational::zero();
    let mut k: u32 = 0;
    loop {
        let term = &power / BigRational::from_integer((2 * k + 1).into());
        let next = &sum + if k % 2 == 0 { term.clone() } else { -term.clone() };
        if term < tol {
            // Consecutive partial sums bracket the limit.
            let (lo, hi) = if sum <= next { (sum, next) } else { (next, sum) };
            return Interval { lo, hi }.round_out(bits + 4);
        }
        sum = next;
        power = &power * &x2;
        k += 1;
    }
}

/// Certified enclosure of pi from Machin's formula.
pub fn pi_interval(bits: u32) -> Interval {
    let a = atan_small(&BigRational::new(1.into(), 5.into()), bits + 8);
    let b = atan_small(&BigRational::new(1.into(), 239.into()), bits + 8);
    let sixteen = BigRational::from_integer(16.into());
    let four = BigRational::from_integer(4.into());
    Interval {
        lo: &a.lo * &sixteen - &b.hi * &four,
        hi: &a.hi * &sixteen - &b.lo * &four,
    }
    .round_out(bits + 4)
}

/// Enclosures of `sin(x)` and `cos(x)` for a rational `0 < x < 2`, where the
/// Taylor terms decrease from the start.
fn sin_cos(x: &BigRational, bits: u32) -> (Interval, Interval) {
    let tol = BigRational::new(BigInt::one(), BigInt::one() << (bits + 8));
    let x2 = x * x;
    let series = |first: BigRational, offset: u64| {
        let mut term = first;
        let mut sum = BigRational::zero();
        let mut k: u64 = 0;
        loop {
            let next = &sum + if k % 2 == 0 { term.clone() } else { -term.clone() };
            if term < tol {
                let (lo, hi) = if sum <= next { (sum, next) } else { (next, sum) };
                return Interval { lo, hi }.round_out(bits + 4);
            }
            sum = next;
            let m = 2 * k + offset;
            term = &term * &x2 / BigRational::from_integer(((m + 1) * (m + 2)).into());
            k += 1;
        }
    };
    (series(x.clone(), 1), series(BigRational::one(), 0))
}

/// Certified enclosure of `kappa_n = n / (4 tan(pi / n))`, the area of the
/// regular n-gon with unit side.
pub fn kappa_interval(n: u32, bits: u32) -> Result<Interval, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::InvalidInput(format!("n must be at least 3, got {n}")));
    }
    let work = bits + 16;
    let pi = pi_interval(work);
    let nq = BigRational::from_integer(n.into());
    let theta_lo = &pi.lo / &nq;
    let theta_hi = &pi.hi / &nq;
    // tan is increasing on (0, pi/2); sin and cos are positive there.
    let (sin_lo, cos_lo) = sin_cos(&theta_lo, work);
    let (sin_hi, cos_hi) = sin_cos(&theta_hi, work);
    let tan_min = &sin_lo.lo / &cos_lo.hi;
    let tan_max = &sin_hi.hi / &cos_hi.lo;
    let four = BigRational::from_integer(4.into());
    Ok(Interval {
        lo: &nq / (&four * tan_max),
        hi: &nq / (&four * tan_min),
    }
    .round_out(bits))
}

/// Regular n-gons on sides `a` and `b` add up to the one on `c` exactly when
/// `a^2 + b^2 = c^2`; the verdict is exact and `kappa` only feeds the residual.
pub fn ngon_additivity(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    n: u32,
    bits: u32,
) -> Result<NgonVerdict, ConstructionError> {
    if !a.is_positive() || !b.is_positive() || !c.is_positive() {
        return Err(ConstructionError::InvalidInput(format!(
            "sides must be positive, got a = {a}, b = {b}, c = {c}"
        )));
    }
    let kappa = kappa_interval(n, bits)?;
    let diff = a * a + b * b - c * c;
    Ok(NgonVerdict {
        n,
        holds: diff.is_zero(),
        residual: kappa.scale(&diff),
        kappa,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn close(iv: &Interval, expected: f64, tol: f64) -> bool {
        use num_traits::ToPrimitive;
        let lo = iv.lo.to_f64().unwrap();
        let hi = iv.hi.to_f64().unwrap();
        lo - tol <= expected && expected <= hi + tol && hi - lo < tol
    }

    #[test]
    fn pi_matches_known_digits() {
        let pi = pi_interval(128);
        let digits = BigRational::new(
            "314159265358979323846264338327950288".parse().unwrap(),
            "100000000000000000000000000000000000".parse().unwrap(),
        );
        let tol = BigRational::new(1.into(), BigInt::from(10).pow(34));
        assert!(pi.lo <= &digits + &tol && &digits - &tol <= pi.hi);
        assert!(pi.width() < BigRational::new(1.into(), BigInt::one() << 120));
    }

    #[test]
    fn kappa_small_cases() {
        // Independent closed forms: sqrt(3)/4, 1, 3 sqrt(3)/2.
        let k3 = kappa_interval(3, 96).unwrap();
        assert!(close(&k3, 3f64.sqrt() / 4.0, 1e-14));
        assert!(k3.width() < BigRational::new(1.into(), BigInt::one() << 90));
        // Squares of the endpoints enclose 3/16.
        assert!(&k3.lo * &k3.lo <= BigRational::new(3.into(), 16.into()));
        assert!(BigRational::new(3.into(), 16.into()) <= &k3.hi * &k3.hi);
        let k4 = kappa_interval(4, 96).unwrap();
        assert!(k4.contains(&q(1)));
        let k6 = kappa_interval(6, 96).unwrap();
        assert!(&k6.lo * &k6.lo <= BigRational::new(27.into(), 4.into()));
        assert!(BigRational::new(27.into(), 4.into()) <= &k6.hi * &k6.hi);
    }

    #[test]
    fn kappa_against_float() {
        for n in 3..=24u32 {
            let k = kappa_interval(n, 80).unwrap();
            let f = n as f64 / (4.0 * (std::f64::consts::PI / n as f64).tan());
            assert!(close(&k, f, 1e-9 * f), "n = {n}");
        }
    }

    #[test]
    fn additivity_examples() {
        let v = ngon_additivity(&q(3), &q(4), &q(5), 4, 64).unwrap();
        assert!(v.holds);
        assert!(v.residual.contains_zero());
        let v = ngon_additivity(&q(3), &q(4), &q(5), 3, 64).unwrap();
        assert!(v.holds);
        assert_eq!(v.residual, Interval::point(q(0)));
        let v = ngon_additivity(&q(2), &q(3), &q(4), 5, 64).unwrap();
        assert!(!v.holds);
        assert!(!v.residual.contains_zero());
        assert_eq!(v.residual.sign(), Some(-1));
    }

    #[test]
    fn additivity_rejects_bad_input() {
        assert!(ngon_additivity(&q(0), &q(4), &q(5), 4, 64).is_err());
        assert!(ngon_additivity(&q(3), &q(4), &q(5), 2, 64).is_err());
    }
}
