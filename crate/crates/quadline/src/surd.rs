//! Quadratic surds `p + r*sqrt(q)` with exact sign determination.

use crate::rational::{exact_sqrt, sgn, sqrt_bounds, Rational};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Value `p + r * sqrt(q)` with rational `p, r` and rational `q >= 0`.
///
/// Normalized so that a perfect-square `q` is folded into `p` (then `r = q = 0`),
/// and `r = 0` forces `q = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct Surd {
    pub p: Rational,
    pub r: Rational,
    pub q: Rational,
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*sqrt({}))", self.p, self.r, self.q)
    }
}

impl Surd {
    pub fn new(p: Rational, r: Rational, q: Rational) -> Self {
        assert!(!q.is_negative(), "surd with negative radicand");
        if r.is_zero() || q.is_zero() {
            return Surd {
                p,
                r: Rational::zero(),
                q: Rational::zero(),
            };
        }
        if let Some(s) = exact_sqrt(&q) {
            return Surd {
                p: p + r * s,
                r: Rational::zero(),
                q: Rational::zero(),
            };
        }
        Surd { p, r, q }
    }

    pub fn from_rational(p: Rational) -> Self {
        Surd {
            p,
            r: Rational::zero(),
            q: Rational::zero(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.r.is_zero()
    }

    /// Sign of the value: -1, 0, +1. Decided by at most two squarings.
    pub fn sign(&self) -> i32 {
        if self.r.is_zero() {
            return sgn(&self.p);
        }
        let sp = sgn(&self.p);
        let sr = sgn(&self.r);
        if sp == 0 {
            return sr;
        }
        if sp == sr {
            return sp;
        }
        // opposite signs: compare p^2 against r^2 q
        let lhs = &self.p * &self.p;
        let rhs = &self.r * &self.r * &self.q;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sp,
            Ordering::Less => sr,
            Ordering::Equal => 0,
        }
    }

    /// Exact comparison with another surd (possibly over a different radicand).
    pub fn cmp_surd(&self, other: &Surd) -> Ordering {
        // sign of (p1-p2) + r1 sqrt(q1) - r2 sqrt(q2)
        let c = &self.p - &other.p;
        let s = sign_c_r1_r2(&c, &self.r, &self.q, &(-other.r.clone()), &other.q);
        match s {
            x if x > 0 => Ordering::Greater,
            x if x < 0 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    pub fn cmp_rational(&self, other: &Rational) -> Ordering {
        Surd::new(
            &self.p - other,
            self.r.clone(),
            self.q.clone(),
        )
        .sign()
        .cmp(&0)
    }

    /// Rational bounds with width <= 2^-prec (plus surd scaling).
    pub fn bounds(&self, prec: u32) -> (Rational, Rational) {
        if self.r.is_zero() {
            return (self.p.clone(), self.p.clone());
        }
        let (slo, shi) = sqrt_bounds(&self.q, prec);
        if self.r.is_positive() {
            (&self.p + &self.r * slo, &self.p + &self.r * shi)
        } else {
            (&self.p + &self.r * shi, &self.p + &self.r * slo)
        }
    }

    pub fn neg(&self) -> Surd {
        Surd {
            p: -self.p.clone(),
            r: -self.r.clone(),
            q: self.q.clone(),
        }
    }

    /// Sum with a rational.
    pub fn add_rational(&self, c: &Rational) -> Surd {
        Surd {
            p: &self.p + c,
            r: self.r.clone(),
            q: self.q.clone(),
        }
    }

    /// Product with a rational.
    pub fn scale(&self, c: &Rational) -> Surd {
        if c.is_zero() {
            return Surd::from_rational(Rational::zero());
        }
        Surd {
            p: &self.p * c,
            r: &self.r * c,
            q: self.q.clone(),
        }
    }

    /// Sum of two surds over the same radicand.
    pub fn add_same(&self, other: &Surd) -> Surd {
        let q = if self.r.is_zero() {
            other.q.clone()
        } else {
            self.q.clone()
        };
        debug_assert!(self.r.is_zero() || other.r.is_zero() || self.q == other.q);
        Surd::new(&self.p + &other.p, &self.r + &other.r, q)
    }

    /// Product of two surds over the same radicand.
    pub fn mul_same(&self, other: &Surd) -> Surd {
        let q = if self.r.is_zero() {
            other.q.clone()
        } else {
            self.q.clone()
        };
        debug_assert!(self.r.is_zero() || other.r.is_zero() || self.q == other.q);
        let p = &self.p * &other.p + &self.r * &other.r * &q;
        let r = &self.p * &other.r + &self.r * &other.p;
        Surd::new(p, r, q)
    }

    pub fn to_f64(&self) -> f64 {
        let p: f64 = rational_to_f64(&self.p);
        let r: f64 = rational_to_f64(&self.r);
        let q: f64 = rational_to_f64(&self.q);
        p + r * q.sqrt()
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_surd(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_surd(other)
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // out of f64 range after reduction: fall back to ratio of floats
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Sign of `c + r1*sqrt(q1) + r2*sqrt(q2)`.
fn sign_c_r1_r2(c: &Rational, r1: &Rational, q1: &Rational, r2: &Rational, q2: &Rational) -> i32 {
    let x = Surd::new(c.clone(), r1.clone(), q1.clone());
    let y = Surd::new(Rational::zero(), r2.clone(), q2.clone());
    let sx = x.sign();
    let sy = y.sign();
    if sx == 0 {
        return sy;
    }
    if sy == 0 {
        return sx;
    }
    if sx == sy {
        return sx;
    }
    // |x| vs |y|: x^2 is a surd over q1, y^2 is rational
    let x2 = x.mul_same(&x);
    let y2 = &y.r * &y.r * &y.q;
    match x2.cmp_rational(&y2) {
        Ordering::Greater => sx,
        Ordering::Less => sy,
        Ordering::Equal => 0,
    }
}

/// Exact sign of `r1*sqrt(q1) + r2*sqrt(q2) + r3*sqrt(q3)` with all `q >= 0`.
///
/// Zero is detected algebraically (two squarings plus sign conditions); a
/// nonzero value gets its sign from interval refinement, which terminates.
pub fn sign_sqrt_sum3(terms: &[(Rational, Rational); 3]) -> i32 {
    // drop vanishing terms
    let live: Vec<(Rational, Rational)> = terms
        .iter()
        .filter(|(r, q)| !r.is_zero() && !q.is_zero())
        .cloned()
        .collect();
    match live.len() {
        0 => return 0,
        1 => {
            return Surd::new(Rational::zero(), live[0].0.clone(), live[0].1.clone()).sign();
        }
        2 => {
            return sign_c_r1_r2(
                &Rational::zero(),
                &live[0].0,
                &live[0].1,
                &live[1].0,
                &live[1].1,
            );
        }
        _ => {}
    }
    let (r1, q1) = &live[0];
    let (r2, q2) = &live[1];
    let (r3, q3) = &live[2];
    // zero test: r1 sqrt(q1) + r2 sqrt(q2) = -r3 sqrt(q3)
    // squaring: r1^2 q1 + r2^2 q2 + 2 r1 r2 sqrt(q1 q2) = r3^2 q3
    let w = r3 * r3 * q3 - r1 * r1 * q1 - r2 * r2 * q2;
    let lhs_coeff = Rational::from_integer(2.into()) * r1 * r2;
    let squares_match = {
        let l2 = &lhs_coeff * &lhs_coeff * q1 * q2;
        let w2 = &w * &w;
        l2 == w2 && sgn(&lhs_coeff) == sgn(&w)
    };
    if squares_match {
        // |r1 sqrt(q1)+r2 sqrt(q2)| == |r3| sqrt(q3); zero iff the signs oppose
        let s12 = sign_c_r1_r2(&Rational::zero(), r1, q1, r2, q2);
        if s12 == -sgn(r3) {
            return 0;
        }
    }
    // nonzero: certified refinement
    let mut prec = 32u32;
    loop {
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (r, q) in &live {
            let (slo, shi) = sqrt_bounds(q, prec);
            if r.is_positive() {
                lo = lo + r * &slo;
                hi = hi + r * &shi;
            } else {
                lo = lo + r * &shi;
                hi = hi + r * &slo;
            }
        }
        if lo.is_positive() {
            return 1;
        }
        if hi.is_negative() {
            return -1;
        }
        prec *= 2;
        assert!(prec < 1 << 20, "sqrt-sum sign refinement did not converge");
    }
}
