//! Exact rational scalars and small helpers shared across the crate.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

pub fn rat_i64(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse an integer or `p/q` fraction.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rational::from_integer(n))
    }
}

/// Display as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Floor of sqrt for a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative");
    n.sqrt()
}

/// If `q >= 0` is the square of a rational, return that square root.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let sn = isqrt(q.numer());
    let sd = isqrt(q.denom());
    if &(&sn * &sn) == q.numer() && &(&sd * &sd) == q.denom() {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// `lo <= sqrt(q) <= hi` with `hi - lo <= 2^-prec`, for `q >= 0`.
pub fn sqrt_bounds(q: &Rational, prec: u32) -> (Rational, Rational) {
    assert!(!q.is_negative());
    if q.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    // sqrt(p/d) = sqrt(p*d)/d; scale by 4^prec so the integer sqrt carries the precision
    let scale = BigInt::one() << (2 * prec);
    let pd = q.numer() * q.denom() * &scale;
    let s = isqrt(&pd);
    let den = q.denom() * (BigInt::one() << prec);
    let lo = Rational::new(s.clone(), den.clone());
    if &(&s * &s) == &pd {
        (lo.clone(), lo)
    } else {
        let hi = Rational::new(s + 1, den);
        (lo, hi)
    }
}

/// Round `r` outward-down to a dyadic with denominator `2^prec` (floor).
pub fn dyadic_floor(r: &Rational, prec: u32) -> Rational {
    let scaled = r * Rational::from_integer(BigInt::one() << prec);
    let fl = scaled.floor();
    fl / Rational::from_integer(BigInt::one() << prec)
}

/// Round `r` outward-up to a dyadic with denominator `2^prec` (ceil).
pub fn dyadic_ceil(r: &Rational, prec: u32) -> Rational {
    let scaled = r * Rational::from_integer(BigInt::one() << prec);
    let cl = scaled.ceil();
    cl / Rational::from_integer(BigInt::one() << prec)
}

/// Sign as -1, 0, +1.
pub fn sgn(r: &Rational) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Greatest common divisor of a slice of integers (nonnegative result).
pub fn gcd_all(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-9").unwrap(), rat_i64(-9));
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), rat(-3, 4));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
        assert_eq!(format_rational(&rat(-3, 4)), "-3/4");
        assert_eq!(format_rational(&rat_i64(7)), "7");
    }

    #[test]
    fn sqrt_helpers() {
        assert_eq!(exact_sqrt(&rat(9, 4)).unwrap(), rat(3, 2));
        assert!(exact_sqrt(&rat_i64(2)).is_none());
        let (lo, hi) = sqrt_bounds(&rat_i64(2), 30);
        assert!(lo.clone() * lo.clone() <= rat_i64(2));
        assert!(hi.clone() * hi.clone() >= rat_i64(2));
        assert!(hi - lo <= Rational::new(BigInt::one(), BigInt::one() << 30));
    }

    #[test]
    fn dyadic_rounding_brackets() {
        let r = rat(22, 7);
        let lo = dyadic_floor(&r, 10);
        let hi = dyadic_ceil(&r, 10);
        assert!(lo <= r && r <= hi);
        assert!(hi - lo <= Rational::new(BigInt::one(), BigInt::from(1024)) * rat_i64(2));
    }
}
