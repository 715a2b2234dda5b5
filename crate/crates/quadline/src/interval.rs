//! Rational interval arithmetic with outward dyadic rounding.
//!
//! Used for the certified-refinement path: all endpoints are exact rationals,
//! every operation is conservative, and callers re-run whole computations at a
//! higher working precision until the signs they need are certified.

use crate::rational::{dyadic_ceil, dyadic_floor, sqrt_bounds, Rational};
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct Iv {
    pub lo: Rational,
    pub hi: Rational,
}

impl fmt::Debug for Iv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:.6}, {:.6}]",
            crate::surd::rational_to_f64(&self.lo),
            crate::surd::rational_to_f64(&self.hi)
        )
    }
}

impl Iv {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Iv { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Iv {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn from_i64(v: i64) -> Self {
        Iv::point(crate::rational::rat_i64(v))
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Certified sign: Some(-1|1) when the interval excludes zero, Some(0) for
    /// the exact point zero, None when undecided.
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

    /// Outward rounding to dyadic endpoints, keeping denominators bounded.
    pub fn round_out(&self, prec: u32) -> Iv {
        Iv {
            lo: dyadic_floor(&self.lo, prec),
            hi: dyadic_ceil(&self.hi, prec),
        }
    }

    pub fn add(&self, o: &Iv) -> Iv {
        Iv::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Iv) -> Iv {
        Iv::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> Iv {
        Iv::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, o: &Iv) -> Iv {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        Iv::new(lo, hi)
    }

    pub fn scale(&self, c: &Rational) -> Iv {
        if c.is_negative() {
            Iv::new(&self.hi * c, &self.lo * c)
        } else {
            Iv::new(&self.lo * c, &self.hi * c)
        }
    }

    /// Reciprocal; the interval must exclude zero.
    pub fn recip(&self) -> Option<Iv> {
        if self.contains_zero() {
            return None;
        }
        Some(Iv::new(
            Rational::from_integer(1.into()) / &self.hi,
            Rational::from_integer(1.into()) / &self.lo,
        ))
    }

    pub fn div(&self, o: &Iv) -> Option<Iv> {
        Some(self.mul(&o.recip()?))
    }

    /// Square root; lower endpoint clamped at zero for intervals touching it.
    pub fn sqrt(&self, prec: u32) -> Option<Iv> {
        if self.hi.is_negative() {
            return None;
        }
        let lo_in = if self.lo.is_negative() {
            Rational::zero()
        } else {
            self.lo.clone()
        };
        let (l, _) = sqrt_bounds(&lo_in, prec);
        let (_, h) = sqrt_bounds(&self.hi, prec);
        Some(Iv::new(l, h))
    }

    pub fn square(&self) -> Iv {
        if !self.lo.is_negative() {
            Iv::new(&self.lo * &self.lo, &self.hi * &self.hi)
        } else if !self.hi.is_positive() {
            Iv::new(&self.hi * &self.hi, &self.lo * &self.lo)
        } else {
            let a = &self.lo * &self.lo;
            let b = &self.hi * &self.hi;
            Iv::new(Rational::zero(), if a > b { a } else { b })
        }
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn to_f64(&self) -> f64 {
        crate::surd::rational_to_f64(&self.mid())
    }

    /// Strictly-less test, certified.
    pub fn lt(&self, o: &Iv) -> Option<bool> {
        if self.hi < o.lo {
            Some(true)
        } else if self.lo > o.hi {
            Some(false)
        } else {
            None
        }
    }

    pub fn disjoint(&self, o: &Iv) -> bool {
        self.hi < o.lo || o.hi < self.lo
    }

    pub fn intersects(&self, o: &Iv) -> bool {
        !self.disjoint(o)
    }
}

/// Dot product of rational 3-vectors of intervals.
pub fn dot3(a: &[Iv; 3], b: &[Iv; 3]) -> Iv {
    a[0].mul(&b[0]).add(&a[1].mul(&b[1])).add(&a[2].mul(&b[2]))
}

pub fn cross3(a: &[Iv; 3], b: &[Iv; 3]) -> [Iv; 3] {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i64};

    #[test]
    fn arithmetic_encloses() {
        let a = Iv::new(rat_i64(1), rat_i64(2));
        let b = Iv::new(rat_i64(-3), rat_i64(-1));
        let m = a.mul(&b);
        assert_eq!(m.lo, rat_i64(-6));
        assert_eq!(m.hi, rat_i64(-1));
        let s = a.sub(&b);
        assert_eq!(s.lo, rat_i64(2));
        assert_eq!(s.hi, rat_i64(5));
        assert_eq!(a.recip().unwrap().lo, rat(1, 2));
    }

    #[test]
    fn sqrt_and_sign() {
        let a = Iv::new(rat_i64(2), rat_i64(2));
        let r = a.sqrt(40).unwrap();
        assert!(r.width() < rat(1, 1 << 30));
        assert!(Iv::new(rat_i64(-1), rat_i64(1)).sign().is_none());
        assert_eq!(Iv::new(rat_i64(1), rat_i64(2)).sign(), Some(1));
    }

    #[test]
    fn rounding_contains() {
        let a = Iv::new(rat(1, 3), rat(2, 3));
        let r = a.round_out(16);
        assert!(r.lo <= a.lo && a.hi <= r.hi);
        assert!(r.width() <= a.width() + rat(2, 1 << 16));
    }
}
