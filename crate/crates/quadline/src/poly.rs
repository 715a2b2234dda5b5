//! Dense univariate polynomials over the rationals: exact arithmetic,
//! subresultant gcd, Sturm counting, and root isolation by bisection.

use crate::interval::Iv;
use crate::rational::{gcd_all, sgn, Rational};
use crate::surd::Surd;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficients in ascending order, leading coefficient nonzero (empty = zero).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<Rational>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}*x^{}", c, i))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn from_i64(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| crate::rational::rat_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lead(&self) -> &Rational {
        self.coeffs.last().expect("lead of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + o.coeff(i));
        }
        Poly::new(out)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - o.coeff(i));
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact sign at a rational point via homogeneous integer Horner.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        // sign of sum c_i n^i d^(deg-i), with c_i as integers over common denominator
        let deg = self.deg();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let n = x.numer();
        let d = x.denom();
        let mut acc = BigInt::zero();
        // Horner in n with trailing powers of d
        for i in (0..=deg).rev() {
            let ci = self.coeff(i);
            let ci_int = ci.numer() * (&den_lcm / ci.denom());
            acc = acc * n + ci_int * d.pow((deg - i) as u32);
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Sign at +inf (pos=true) or -inf.
    pub fn sign_at_inf(&self, pos: bool) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let s = sgn(self.lead());
        if pos || self.deg() % 2 == 0 {
            s
        } else {
            -s
        }
    }

    /// Evaluate over the field Q(sqrt(q)).
    pub fn eval_surd(&self, x: &Surd) -> Surd {
        let mut acc = Surd::from_rational(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_same(x).add_same(&Surd::from_rational(c.clone()));
        }
        acc
    }

    /// Interval evaluation.
    pub fn eval_iv(&self, x: &Iv) -> Iv {
        let mut acc = Iv::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&Iv::point(c.clone()));
        }
        acc
    }

    /// Exact division with remainder over Q. Panics on zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero());
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        let dd = d.deg();
        let dl = d.lead().clone();
        while !rem.is_zero() && rem.deg() >= dd {
            let shift = rem.deg() - dd;
            let c = rem.lead() / &dl;
            let mut term = vec![Rational::zero(); shift + 1];
            term[shift] = c;
            let term = Poly::new(term);
            quo = quo.add(&term);
            rem = rem.sub(&term.mul(d));
        }
        (quo, rem)
    }

    /// Content-free integer form: (integer coefficients, positive leading sign),
    /// equal to this polynomial up to a positive rational factor.
    pub fn primitive_int(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = gcd_all(&ints);
        if g.is_zero() {
            g = BigInt::one();
        }
        let mut out: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        if out.last().unwrap().is_negative() {
            for c in &mut out {
                *c = -c.clone();
            }
        }
        out
    }

    pub fn from_int(cs: Vec<BigInt>) -> Poly {
        Poly::new(cs.into_iter().map(Rational::from_integer).collect())
    }

    /// Primitive-part normalization (positive leading coefficient).
    pub fn normalized(&self) -> Poly {
        Poly::from_int(self.primitive_int())
    }

    /// Gcd by the subresultant polynomial remainder sequence on primitive
    /// integer forms; the result is primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let mut a = self.primitive_int();
        let mut b = other.primitive_int();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = (a.len() - 1) - (b.len() - 1);
            let r = int_pseudo_rem(&a, &b);
            if r.is_empty() {
                // b is the gcd up to content
                let p = Poly::from_int(b);
                return p.normalized();
            }
            if r.len() == 1 {
                // constant remainder: gcd is 1
                return Poly::constant(Rational::one());
            }
            a = b;
            // divide r by g * h^delta
            let div = &g * pow_big(&h, delta as u32);
            b = r.iter().map(|c| c / &div).collect();
            g = a.last().unwrap().clone();
            // h = g^delta h^(1-delta)
            h = if delta == 0 {
                h
            } else {
                let gp = pow_big(&g, delta as u32);
                let hp = pow_big(&h, (delta - 1) as u32);
                &gp / &hp
            };
        }
    }

    /// Squarefree part (divide by gcd with the derivative), normalized.
    /// Returns (squarefree part, gcd degree).
    pub fn squarefree(&self) -> (Poly, usize) {
        if self.is_zero() || self.deg() == 0 {
            return (self.clone(), 0);
        }
        let g = self.gcd(&self.derivative());
        if g.deg() == 0 {
            return (self.normalized(), 0);
        }
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        (q.normalized(), g.deg())
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.deg() == 0 || self.gcd(&self.derivative()).deg() == 0
    }

    /// Cauchy root bound: all real roots lie in (-M, M).
    pub fn root_bound(&self) -> Rational {
        assert!(!self.is_zero());
        let lead = self.lead();
        let mut m = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let v = (c / lead).abs();
            if v > m {
                m = v;
            }
        }
        m + Rational::one()
    }
}

fn pow_big(b: &BigInt, e: u32) -> BigInt {
    b.pow(e)
}

/// Pseudo-remainder of integer polynomials: lc(b)^(da-db+1) * a mod b.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let da = a.len() - 1;
    let db = b.len() - 1;
    assert!(da >= db);
    let lb = b.last().unwrap().clone();
    let mut r: Vec<BigInt> = a.to_vec();
    for k in (db..=da).rev() {
        if r.len() <= k {
            continue;
        }
        // multiply the remainder through by lb, then cancel with shifted b
        let rk = r[k].clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        let shift = k - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(&rk * bc);
        }
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Sturm chain of a squarefree polynomial, elements normalized to primitive
/// integer form (positive factors only, so the sign structure is preserved).
pub struct Sturm {
    pub chain: Vec<Poly>,
}

impl Sturm {
    pub fn new(p: &Poly) -> Sturm {
        let p0 = p.normalized();
        let mut chain = vec![p0.clone()];
        if p0.degree().map_or(true, |d| d == 0) {
            return Sturm { chain };
        }
        let mut a = p0;
        let mut b = a.derivative().normalized();
        chain.push(b.clone());
        while !b.is_zero() && b.deg() > 0 {
            let (_, r) = a.divrem(&b);
            if r.is_zero() {
                break;
            }
            let nr = r.neg().normalized();
            // keep the sign of -r: normalized() may flip it, so recompute
            let flip = sgn(r.neg().lead()) != sgn(nr.lead());
            let next = if flip { nr.neg() } else { nr };
            chain.push(next.clone());
            a = b;
            b = next;
        }
        Sturm { chain }
    }

    fn variations<F: Fn(&Poly) -> i32>(&self, f: F) -> usize {
        let mut count = 0;
        let mut last = 0;
        for p in &self.chain {
            let s = f(p);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        self.variations(|p| p.sign_at(x))
    }

    pub fn variations_at_inf(&self, pos: bool) -> usize {
        self.variations(|p| p.sign_at_inf(pos))
    }
}

/// Interval endpoint: a rational or an infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    At(Rational),
    PosInf,
}

/// Count distinct real roots of a squarefree `p` in `(lo, hi]`
/// (the right end is included when finite; infinite ends are open).
pub fn sturm_count_halfopen(st: &Sturm, lo: &Bound, hi: &Bound) -> usize {
    let vl = match lo {
        Bound::NegInf => st.variations_at_inf(false),
        Bound::At(x) => st.variations_at(x),
        Bound::PosInf => st.variations_at_inf(true),
    };
    let vh = match hi {
        Bound::NegInf => st.variations_at_inf(false),
        Bound::At(x) => st.variations_at(x),
        Bound::PosInf => st.variations_at_inf(true),
    };
    vl.saturating_sub(vh)
}

/// Count distinct real roots of `p` on an interval after squarefree reduction.
pub fn sturm_count(p: &Poly, lo: &Bound, hi: &Bound) -> usize {
    let (sf, _) = p.squarefree();
    let st = Sturm::new(&sf);
    sturm_count_halfopen(&st, lo, hi)
}

/// An isolated real root of a squarefree polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum RootLoc {
    /// Exact rational root.
    Exact(Rational),
    /// Exactly one root in the open interval; the polynomial is nonzero at both ends.
    Open(Rational, Rational),
}

impl RootLoc {
    pub fn to_iv(&self) -> Iv {
        match self {
            RootLoc::Exact(r) => Iv::point(r.clone()),
            RootLoc::Open(a, b) => Iv::new(a.clone(), b.clone()),
        }
    }

    pub fn width(&self) -> Rational {
        match self {
            RootLoc::Exact(_) => Rational::zero(),
            RootLoc::Open(a, b) => b - a,
        }
    }
}

/// Isolate all real roots of squarefree `p`, sorted ascending.
pub fn isolate_roots(p: &Poly) -> Vec<RootLoc> {
    assert!(p.is_squarefree(), "isolate_roots requires squarefree input");
    if p.deg() == 0 {
        return vec![];
    }
    let st = Sturm::new(p);
    let m = p.root_bound();
    let lo = -m.clone();
    let hi = m;
    debug_assert!(p.sign_at(&lo) != 0 && p.sign_at(&hi) != 0);
    let mut out = Vec::new();
    isolate_rec(p, &st, &lo, &hi, &mut out);
    out.sort_by(|a, b| root_key(a).cmp(&root_key(b)));
    out
}

fn root_key(r: &RootLoc) -> Rational {
    match r {
        RootLoc::Exact(x) => x.clone(),
        RootLoc::Open(a, b) => (a + b) / Rational::from_integer(2.into()),
    }
}

fn count_open(p: &Poly, st: &Sturm, lo: &Rational, hi: &Rational) -> usize {
    // roots in (lo, hi]; p(hi) != 0 is required by callers so this is (lo, hi)
    debug_assert!(p.sign_at(lo) != 0 && p.sign_at(hi) != 0);
    st.variations_at(lo).saturating_sub(st.variations_at(hi))
}

fn isolate_rec(p: &Poly, st: &Sturm, lo: &Rational, hi: &Rational, out: &mut Vec<RootLoc>) {
    let n = count_open(p, st, lo, hi);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(RootLoc::Open(lo.clone(), hi.clone()));
        return;
    }
    let mut mid = (lo + hi) / Rational::from_integer(2.into());
    if p.sign_at(&mid) == 0 {
        // exact root at the midpoint: carve out a gap around it
        let mut w = (hi - lo) / Rational::from_integer(16.into());
        loop {
            let a = &mid - &w;
            let b = &mid + &w;
            if p.sign_at(&a) != 0
                && p.sign_at(&b) != 0
                && count_open(p, st, &a, &b) == 1
            {
                out.push(RootLoc::Exact(mid.clone()));
                isolate_rec(p, st, lo, &a, out);
                isolate_rec(p, st, &b, hi, out);
                return;
            }
            w = w / Rational::from_integer(2.into());
        }
    }
    // guard against a midpoint exactly at a root of a chain element making
    // progress ambiguous is unnecessary: counts split exactly
    let left = count_open(p, st, lo, &mid);
    if left == n {
        // all roots left of mid
        isolate_rec(p, st, lo, &mid, out);
        return;
    }
    if left == 0 {
        isolate_rec(p, st, &mid, hi, out);
        return;
    }
    isolate_rec(p, st, lo, &mid, out);
    // mid may be "just below" a root; the right half starts at mid (p(mid)!=0)
    let mid2 = std::mem::take(&mut mid);
    isolate_rec(p, st, &mid2, hi, out);
}

/// Refine an isolating interval below the requested width.
pub fn refine_root(p: &Poly, loc: &RootLoc, width: &Rational) -> RootLoc {
    let mut cur = loc.clone();
    loop {
        match &cur {
            RootLoc::Exact(_) => return cur,
            RootLoc::Open(a, b) => {
                if &(b - a) <= width {
                    return cur;
                }
                let m = (a + b) / Rational::from_integer(2.into());
                let sm = p.sign_at(&m);
                if sm == 0 {
                    return RootLoc::Exact(m);
                }
                let sa = p.sign_at(a);
                cur = if sa != sm {
                    RootLoc::Open(a.clone(), m)
                } else {
                    RootLoc::Open(m, b.clone())
                };
            }
        }
    }
}

/// Resultant in y of two quadratics-in-y with polynomial coefficients:
/// `A1 y^2 + B1 y + C1` and `A2 y^2 + B2 y + C2`.
///
/// Sylvester determinant in closed form: (A1 C2 - A2 C1)^2 - (A1 B2 - A2 B1)(B1 C2 - B2 C1).
pub fn resultant_quadratics(
    a1: &Poly,
    b1: &Poly,
    c1: &Poly,
    a2: &Poly,
    b2: &Poly,
    c2: &Poly,
) -> Poly {
    let u = a1.mul(c2).sub(&a2.mul(c1));
    let v = a1.mul(b2).sub(&a2.mul(b1));
    let w = b1.mul(c2).sub(&b2.mul(c1));
    u.mul(&u).sub(&v.mul(&w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i64};

    #[test]
    fn eval_and_signs() {
        let p = Poly::from_i64(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(p.eval(&rat_i64(2)), rat_i64(2));
        assert_eq!(p.sign_at(&rat(3, 2)), 1);
        assert_eq!(p.sign_at(&rat(7, 5)), -1);
        assert_eq!(p.sign_at_inf(false), 1);
        let q = Poly::from_i64(&[0, 1]); // x
        assert_eq!(q.sign_at_inf(false), -1);
    }

    #[test]
    fn divrem_exact() {
        let p = Poly::from_i64(&[-1, 0, 0, 1]); // x^3 - 1
        let d = Poly::from_i64(&[-1, 1]); // x - 1
        let (q, r) = p.divrem(&d);
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_i64(&[1, 1, 1]));
    }

    #[test]
    fn gcd_and_squarefree() {
        let p = Poly::from_i64(&[-1, 0, 1]); // (x-1)(x+1)
        let q = Poly::from_i64(&[-1, 0, 0, 1]); // x^3-1
        assert_eq!(p.gcd(&q), Poly::from_i64(&[-1, 1]));
        // (x-1)^2 (x+2)
        let s = Poly::from_i64(&[-1, 1]).mul(&Poly::from_i64(&[-1, 1])).mul(&Poly::from_i64(&[2, 1]));
        let (sf, gdeg) = s.squarefree();
        assert_eq!(gdeg, 1);
        assert_eq!(sf, Poly::from_i64(&[-1, 1]).mul(&Poly::from_i64(&[2, 1])).normalized());
        assert!(!s.is_squarefree());
        assert!(sf.is_squarefree());
    }

    #[test]
    fn sturm_counts() {
        let p = Poly::from_i64(&[-2, 0, 1]); // x^2-2
        assert_eq!(sturm_count(&p, &Bound::NegInf, &Bound::PosInf), 2);
        let q = Poly::from_i64(&[1, 0, 1]); // x^2+1
        assert_eq!(sturm_count(&q, &Bound::NegInf, &Bound::PosInf), 0);
        assert_eq!(
            sturm_count(&p, &Bound::At(rat_i64(0)), &Bound::PosInf),
            1
        );
        // non-squarefree input is reduced internally
        let s = p.mul(&p);
        assert_eq!(sturm_count(&s, &Bound::NegInf, &Bound::PosInf), 2);
        // degree 5 with 3 real roots: (x^2+1)(x)(x-1)(x+3)
        let t = Poly::from_i64(&[1, 0, 1])
            .mul(&Poly::from_i64(&[0, 1]))
            .mul(&Poly::from_i64(&[-1, 1]))
            .mul(&Poly::from_i64(&[3, 1]));
        assert_eq!(sturm_count(&t, &Bound::NegInf, &Bound::PosInf), 3);
    }

    #[test]
    fn isolation_and_refinement() {
        let p = Poly::from_i64(&[-2, 0, 1]);
        let roots = isolate_roots(&p);
        assert_eq!(roots.len(), 2);
        for (i, loc) in roots.iter().enumerate() {
            let refined = refine_root(&p, loc, &rat(1, 1_000_000));
            let iv = refined.to_iv();
            assert!(iv.width() <= rat(1, 1_000_000));
            let target = if i == 0 { -std::f64::consts::SQRT_2 } else { std::f64::consts::SQRT_2 };
            assert!((iv.to_f64() - target).abs() < 1e-5);
        }
        // exact rational roots get found exactly: x(x-1)(x-2)... roots 0,1,2
        let q = Poly::from_i64(&[0, 1])
            .mul(&Poly::from_i64(&[-1, 1]))
            .mul(&Poly::from_i64(&[-2, 1]));
        let roots = isolate_roots(&q);
        assert_eq!(roots.len(), 3);
        for loc in &roots {
            let refined = refine_root(&q, loc, &rat(1, 1 << 30));
            match refined {
                RootLoc::Exact(_) => {}
                RootLoc::Open(a, b) => assert!(b - a <= rat(1, 1 << 30)),
            }
        }
    }

    #[test]
    fn resultant_matches_shared_roots() {
        // P1 = (y - 1)(y - x) = y^2 - (1+x) y + x ; P2 = (y - 2)(y - x) share root y=x
        let one = Poly::from_i64(&[1]);
        let a1 = one.clone();
        let b1 = Poly::from_i64(&[-1, -1]);
        let c1 = Poly::from_i64(&[0, 1]);
        let a2 = one.clone();
        let b2 = Poly::from_i64(&[-2, -1]);
        let c2 = Poly::from_i64(&[0, 2]);
        let r = resultant_quadratics(&a1, &b1, &c1, &a2, &b2, &c2);
        // the resultant must vanish identically in x? No: shared root for all x -> yes identically zero
        assert!(r.is_zero());
        // generic: P1=(y-1)(y-2), P2=(y-3)(y-4): resultant constant (1-3)(1-4)(2-3)(2-4)=12
        let b1 = Poly::from_i64(&[-3]);
        let c1 = Poly::from_i64(&[2]);
        let b2 = Poly::from_i64(&[-7]);
        let c2 = Poly::from_i64(&[12]);
        let r = resultant_quadratics(&one, &b1, &c1, &one, &b2, &c2);
        assert_eq!(r, Poly::from_i64(&[12]));
    }

    #[test]
    fn eval_surd_stays_in_field() {
        use crate::surd::Surd;
        // p(x) = x^2 - 2 at x = sqrt(2) is 0
        let p = Poly::from_i64(&[-2, 0, 1]);
        let s = Surd::new(rat_i64(0), rat_i64(1), rat_i64(2));
        assert_eq!(p.eval_surd(&s).sign(), 0);
        // at x = 1 + sqrt(2): (1+s)^2 - 2 = 1 + 2s + 2 - 2 = 1 + 2 sqrt 2 > 0
        let s2 = Surd::new(rat_i64(1), rat_i64(1), rat_i64(2));
        assert_eq!(p.eval_surd(&s2).sign(), 1);
    }
}
