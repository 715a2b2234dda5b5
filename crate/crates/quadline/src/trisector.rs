//! Projected trisector quartics on the canonical projected bisector, their
//! asymptotes, and the intersection resultant whose real roots are the
//! Voronoi vertices.

use crate::lines::LineSet;
use crate::poly::{self, Bound, Poly};
use crate::rational::Rational;
use crate::surd::Surd;
use num_traits::{One, Zero};

/// Direction of an asymptote line in the projected bisector plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    Vertical,
    Horizontal,
}

/// Implicit curve A(x) y^2 + B(x) y + C(x) = 0 of a projected trisector
/// T(l1, l2, l_i) on the projected bisector of lines 1 and 2, together with
/// its closed-form asymptotes.
#[derive(Clone, Debug)]
pub struct ProjectedTrisector {
    /// Third line index (3 or 4).
    pub line: usize,
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    /// The same curve as a quadratic in x: A'(y) x^2 + B'(y) x + C'(y).
    pub ap: Poly,
    pub bp: Poly,
    pub cp: Poly,
    /// x = e A/a -+ sqrt(A Delta), increasing order.
    pub vertical_asymptotes: (Surd, Surd),
    /// y = (d A -+ sqrt(A Delta)) / a, increasing order.
    pub horizontal_asymptotes: (Surd, Surd),
}

/// Coefficients of the trisector quartic, transcribed term by term.
pub fn trisector_polynomial(lines: &LineSet, i: usize) -> ProjectedTrisector {
    assert!(!lines.a.is_zero(), "trisector_polynomial rejects a = 0");
    let a = lines.a.clone();
    let (b, c, d, e) = lines.bcde(i);
    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let a4 = &a2 * &a2;
    let r = crate::rational::rat_i64;

    // A(x) = a^2 + a^4 + a^2 d^2 + a^4 d^2 - e^2 - a^2 e^2
    //        + (2 a e + 2 a^3 e) x - a^2 x^2
    let a_c0 = &a2 + &a4 + &a2 * &d * &d + &a4 * &d * &d - &e * &e - &a2 * &e * &e;
    let a_c1 = r(2) * &a * &e + r(2) * &a3 * &e;
    let a_c2 = -&a2;
    let pa = Poly::new(vec![a_c0, a_c1, a_c2]);

    // B(x) = -2c - 4a^2 c - 2a^4 c - 2c d^2 - 4a^2 c d^2 - 2a^4 c d^2
    //        + 2b d e + 4a^2 b d e + 2a^4 b d e
    //        + (-2a b d - 2a^3 b d - 2a c e - 2a^3 c e - 2 d e - 4a^2 d e - 2a^4 d e) x
    //        + (2a d + 2a^3 d) x^2
    let b_c0 = r(-2) * &c - r(4) * &a2 * &c - r(2) * &a4 * &c
        - r(2) * &c * &d * &d
        - r(4) * &a2 * &c * &d * &d
        - r(2) * &a4 * &c * &d * &d
        + r(2) * &b * &d * &e
        + r(4) * &a2 * &b * &d * &e
        + r(2) * &a4 * &b * &d * &e;
    let b_c1 = r(-2) * &a * &b * &d - r(2) * &a3 * &b * &d - r(2) * &a * &c * &e
        - r(2) * &a3 * &c * &e
        - r(2) * &d * &e
        - r(4) * &a2 * &d * &e
        - r(2) * &a4 * &d * &e;
    let b_c2 = r(2) * &a * &d + r(2) * &a3 * &d;
    let pb = Poly::new(vec![b_c0, b_c1, b_c2]);

    // C(x) = -1 - 2a^2 - a^4 + c^2 - d^2 - 2a^2 d^2 - a^4 d^2 + c^2 d^2
    //        + 2a^2 c^2 (1 + d^2) + a^4 c^2 (1 + d^2)
    //        - 2b c d e - 4a^2 b c d e - 2a^4 b c d e
    //        - e^2 - 2a^2 e^2 - a^4 e^2
    //        + b^2 (1+e^2) + 2a^2 b^2 (1+e^2) + a^4 b^2 (1+e^2)
    //        + (-2b - 4a^2 b - 2a^4 b + 2c d e + 4a^2 c d e + 2a^4 c d e
    //           - 2b e^2 - 4a^2 b e^2 - 2a^4 b e^2) x
    //        + (1 + a^2 - a^2 d^2 - a^4 d^2 + e^2 + a^2 e^2) x^2
    let one_e2 = Rational::one() + &e * &e;
    let c_c0 = r(-1) - r(2) * &a2 - &a4 + &c * &c
        - &d * &d
        - r(2) * &a2 * &d * &d
        - &a4 * &d * &d
        + &c * &c * &d * &d
        + r(2) * &a2 * &c * &c * (Rational::one() + &d * &d)
        + &a4 * &c * &c * (Rational::one() + &d * &d)
        - r(2) * &b * &c * &d * &e
        - r(4) * &a2 * &b * &c * &d * &e
        - r(2) * &a4 * &b * &c * &d * &e
        - &e * &e
        - r(2) * &a2 * &e * &e
        - &a4 * &e * &e
        + &b * &b * &one_e2
        + r(2) * &a2 * &b * &b * &one_e2
        + &a4 * &b * &b * &one_e2;
    let c_c1 = r(-2) * &b - r(4) * &a2 * &b - r(2) * &a4 * &b
        + r(2) * &c * &d * &e
        + r(4) * &a2 * &c * &d * &e
        + r(2) * &a4 * &c * &d * &e
        - r(2) * &b * &e * &e
        - r(4) * &a2 * &b * &e * &e
        - r(2) * &a4 * &b * &e * &e;
    let c_c2 = Rational::one() + &a2 - &a2 * &d * &d - &a4 * &d * &d + &e * &e + &a2 * &e * &e;
    let pc = Poly::new(vec![c_c0, c_c1, c_c2]);

    // transpose: P as quadratic in x, coefficients quadratic in y
    // A'(y) = -a^4 d^2 + 2a^3 d y - a^2 d^2 + a^2 e^2 - a^2 y^2 + a^2 + 2a d y + e^2 + 1
    let ap_c0 = -&a4 * &d * &d - &a2 * &d * &d + &a2 * &e * &e + &a2 + &e * &e + Rational::one();
    let ap_c1 = r(2) * &a3 * &d + r(2) * &a * &d;
    let ap_c2 = -&a2;
    let pap = Poly::new(vec![ap_c0, ap_c1, ap_c2]);
    // B'(y), C'(y) from the x^1 and x^0 coefficients of A, B, C
    let pbp = Poly::new(vec![pc.coeff(1), pb.coeff(1), pa.coeff(1)]);
    let pcp = Poly::new(vec![pc.coeff(0), pb.coeff(0), pa.coeff(0)]);

    // closed-form asymptotes: x = eA/a ± sqrt(A Delta), y = (dA ± sqrt(A Delta))/a
    let cap_a = Rational::one() + &a2;
    let delta = &d * &d + &e * &e + Rational::one();
    let rad = &cap_a * &delta;
    let vx_center = &e * &cap_a / &a;
    let v1 = Surd::new(vx_center.clone(), -Rational::one(), rad.clone());
    let v2 = Surd::new(vx_center, Rational::one(), rad.clone());
    let (v_lo, v_hi) = order_pair(v1, v2);
    let hy_center = &d * &cap_a / &a;
    let inv_a = Rational::one() / &a;
    let h1 = Surd::new(hy_center.clone(), -inv_a.clone(), rad.clone());
    let h2 = Surd::new(hy_center, inv_a, rad);
    let (h_lo, h_hi) = order_pair(h1, h2);

    let t = ProjectedTrisector {
        line: i,
        a: pa,
        b: pb,
        c: pc,
        ap: pap,
        bp: pbp,
        cp: pcp,
        vertical_asymptotes: (v_lo, v_hi),
        horizontal_asymptotes: (h_lo, h_hi),
    };
    debug_assert_eq!(t.a.eval_surd(&t.vertical_asymptotes.0).sign(), 0);
    debug_assert_eq!(t.a.eval_surd(&t.vertical_asymptotes.1).sign(), 0);
    debug_assert_eq!(t.ap.eval_surd(&t.horizontal_asymptotes.0).sign(), 0);
    debug_assert_eq!(t.ap.eval_surd(&t.horizontal_asymptotes.1).sign(), 0);
    t
}

fn order_pair(s1: Surd, s2: Surd) -> (Surd, Surd) {
    if s1.cmp_surd(&s2) == std::cmp::Ordering::Greater {
        (s2, s1)
    } else {
        (s1, s2)
    }
}

/// P(x, y) evaluated as a polynomial in y for fixed symbolic treatment:
/// returns (A(x0), B(x0), C(x0)).
impl ProjectedTrisector {
    pub fn eval_x(&self, x0: &Rational) -> (Rational, Rational, Rational) {
        (self.a.eval(x0), self.b.eval(x0), self.c.eval(x0))
    }

    pub fn eval_y(&self, y0: &Rational) -> (Rational, Rational, Rational) {
        (self.ap.eval(y0), self.bp.eval(y0), self.cp.eval(y0))
    }

    /// P(x0, y0) exactly.
    pub fn eval_point(&self, x0: &Rational, y0: &Rational) -> Rational {
        let (a, b, c) = self.eval_x(x0);
        (&a * y0 + &b) * y0 + &c
    }
}

/// Res_y of two related projected trisectors: degree <= 8 in x, with the real
/// roots at the x-coordinates of the projected intersection points.
pub fn intersection_polynomial(t1: &ProjectedTrisector, t2: &ProjectedTrisector) -> Poly {
    poly::resultant_quadratics(&t1.a, &t1.b, &t1.c, &t2.a, &t2.b, &t2.c)
}

/// Number of Voronoi vertices of the four lines: exact count of the real
/// roots of the squarefree intersection resultant on the canonical bisector.
pub fn vertex_count(lines: &LineSet) -> usize {
    let t3 = trisector_polynomial(lines, 3);
    let t4 = trisector_polynomial(lines, 4);
    let r = intersection_polynomial(&t3, &t4);
    poly::sturm_count(&r, &Bound::NegInf, &Bound::PosInf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i64};

    pub const WITNESSES: [[i64; 9]; 15] = [
        [-9, 2, -2, 1, -3, -1, 1, -1, -5],
        [-3, -16, -12, -3, 9, -10, 1, 9, -11],
        [-4, 5, 10, 3, 4, 5, 6, -1, 1],
        [4, -9, -8, -6, -1, 10, -1, 0, -1],
        [1, -19, 11, 7, 16, -11, 1, -12, 6],
        [16, -10, 3, 0, -1, 5, 1, 2, 5],
        [4, 7, 9, 1, 10, -3, -10, 6, -8],
        [2, -19, -4, -13, 20, 14, -18, -3, 9],
        [10, 8, -15, -2, 15, 12, 9, -2, 4],
        [1, -18, -5, -4, -16, 11, -18, -6, -3],
        [1, 29, 4, 2, 20, 11, 25, 0, -3],
        [2, 3, -6, -3, 16, -1, -12, -3, -19],
        [5, 7, -10, 0, 2, 16, 7, 0, -16],
        [3, 17, 9, 0, 19, 11, -16, 2, -8],
        [9, 32, -26, 14, 38, 11, -40, 12, -15],
    ];
    pub const WITNESS_COUNTS: [usize; 15] = [0, 2, 2, 2, 4, 4, 4, 4, 4, 6, 6, 6, 6, 6, 6];
    pub const EIGHT_VERTEX: [i64; 9] = [10, 14, -6, -9, -5, -19, 5, 13, 11];

    /// Independent oracle: rebuild the trisector polynomial from the distance
    /// equations d(p,l1)^2 = d(p,l_i)^2 with z = -a x y/(1+a^2) substituted,
    /// as a bivariate polynomial, and compare with the transcription up to a
    /// constant factor.
    fn derived_bivariate(lines: &LineSet, i: usize) -> Vec<Vec<Rational>> {
        use num_traits::Zero;
        // represent polynomials in (x, y) as coeff[i][j] * x^i y^j
        type Biv = Vec<Vec<Rational>>;
        fn biv_zero(nx: usize, ny: usize) -> Biv {
            vec![vec![Rational::zero(); ny]; nx]
        }
        fn biv_add(a: &Biv, b: &Biv) -> Biv {
            let nx = a.len().max(b.len());
            let ny = a.iter().chain(b.iter()).map(|r| r.len()).max().unwrap();
            let mut out = biv_zero(nx, ny);
            for (i, row) in a.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    out[i][j] = &out[i][j] + v;
                }
            }
            for (i, row) in b.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    out[i][j] = &out[i][j] + v;
                }
            }
            out
        }
        fn biv_mul(a: &Biv, b: &Biv) -> Biv {
            let mut out = biv_zero(a.len() + b.len(), a[0].len() + b[0].len());
            for (i, ra) in a.iter().enumerate() {
                for (j, va) in ra.iter().enumerate() {
                    if va.is_zero() {
                        continue;
                    }
                    for (k, rb) in b.iter().enumerate() {
                        for (l, vb) in rb.iter().enumerate() {
                            out[i + k][j + l] = &out[i + k][j + l] + &(va * vb);
                        }
                    }
                }
            }
            out
        }
        fn biv_scale(a: &Biv, c: &Rational) -> Biv {
            a.iter()
                .map(|r| r.iter().map(|v| v * c).collect())
                .collect()
        }
        fn biv_const(c: Rational) -> Biv {
            vec![vec![c]]
        }
        let x_m: Biv = vec![vec![Rational::zero()], vec![Rational::one()]];
        let y_m: Biv = vec![vec![Rational::zero(), Rational::one()]];

        let a = &lines.a;
        let cap_a = Rational::one() + a * a;
        // z = -a x y / (1+a^2)
        let z = biv_scale(&biv_mul(&x_m, &y_m), &(-(a.clone()) / &cap_a));

        // squared distance to a line as a bivariate polynomial in (x, y):
        // cross((p - q), u) . cross((p - q), u) / (u . u)
        let dist2 = |q: [Rational; 3], u: [Rational; 3]| -> Biv {
            let p = [x_m.clone(), y_m.clone(), z.clone()];
            let w: Vec<Biv> = (0..3)
                .map(|k| biv_add(&p[k], &biv_const(-q[k].clone())))
                .collect();
            let cr = [
                biv_add(&biv_scale(&w[1], &u[2]), &biv_scale(&w[2], &(-u[1].clone()))),
                biv_add(&biv_scale(&w[2], &u[0]), &biv_scale(&w[0], &(-u[2].clone()))),
                biv_add(&biv_scale(&w[0], &u[1]), &biv_scale(&w[1], &(-u[0].clone()))),
            ];
            let mut num = biv_mul(&cr[0], &cr[0]);
            num = biv_add(&num, &biv_mul(&cr[1], &cr[1]));
            num = biv_add(&num, &biv_mul(&cr[2], &cr[2]));
            let den = &u[0] * &u[0] + &u[1] * &u[1] + &u[2] * &u[2];
            biv_scale(&num, &(Rational::one() / den))
        };
        let (q1, u1) = lines.line(1);
        let (qi, ui) = lines.line(i);
        let d1 = dist2(q1, u1);
        let di = dist2(qi, ui);
        biv_add(&d1, &biv_scale(&di, &rat_i64(-1)))
    }

    #[test]
    fn transcription_matches_distance_derivation() {
        use num_traits::Zero;
        for params in [WITNESSES[0], WITNESSES[4], WITNESSES[9], EIGHT_VERTEX] {
            let lines = LineSet::from_i64(params);
            for i in [3usize, 4] {
                let t = trisector_polynomial(&lines, i);
                let derived = derived_bivariate(&lines, i);
                // paper polynomial as bivariate: A(x) y^2 + B(x) y + C(x)
                // find the proportionality constant from one nonzero coefficient
                let paper_coeff = |ix: usize, iy: usize| -> Rational {
                    match iy {
                        0 => t.c.coeff(ix),
                        1 => t.b.coeff(ix),
                        2 => t.a.coeff(ix),
                        _ => Rational::zero(),
                    }
                };
                let mut lambda: Option<Rational> = None;
                for (ix, row) in derived.iter().enumerate() {
                    for (iy, v) in row.iter().enumerate() {
                        let pc = paper_coeff(ix, iy);
                        if !v.is_zero() || !pc.is_zero() {
                            assert!(!v.is_zero() && !pc.is_zero(), "support mismatch at x^{ix} y^{iy}");
                            let r = v / &pc;
                            match &lambda {
                                None => lambda = Some(r),
                                Some(l) => assert_eq!(l, &r, "non-proportional at x^{ix} y^{iy}"),
                            }
                        }
                    }
                }
                assert!(lambda.is_some());
            }
        }
    }

    #[test]
    fn asymptotes_closed_form_example() {
        // a = -9, line 3 = (2,-2,1,-3): A = 82, Delta = 11, x = 82/3 -+ sqrt(902)
        let lines = LineSet::from_i64(WITNESSES[0]);
        let t = trisector_polynomial(&lines, 3);
        let lo = Surd::new(rat(82, 3), rat_i64(-1), rat_i64(902));
        let hi = Surd::new(rat(82, 3), rat_i64(1), rat_i64(902));
        assert_eq!(t.vertical_asymptotes.0, lo);
        assert_eq!(t.vertical_asymptotes.1, hi);
        // both are roots of the transcribed A(x)
        assert_eq!(t.a.eval_surd(&lo).sign(), 0);
        assert_eq!(t.a.eval_surd(&hi).sign(), 0);
    }

    #[test]
    fn asymptotes_translation_invariant() {
        let base = LineSet::from_i64(WITNESSES[4]);
        let t0 = trisector_polynomial(&base, 3);
        let mut moved = base.clone();
        moved.b3 = rat_i64(99);
        moved.c3 = rat(-7, 3);
        let t1 = trisector_polynomial(&moved, 3);
        assert_eq!(t0.vertical_asymptotes, t1.vertical_asymptotes);
        assert_eq!(t0.horizontal_asymptotes, t1.horizontal_asymptotes);
    }

    #[test]
    fn symmetric_e_zero() {
        // e_i = 0: vertical asymptotes symmetric about 0
        let lines = LineSet::from_i64([3, 5, -2, 2, 0, -1, 1, -1, -5]);
        let t = trisector_polynomial(&lines, 3);
        let neg = t.vertical_asymptotes.0.neg();
        assert_eq!(neg, t.vertical_asymptotes.1);
    }

    #[test]
    fn witness_vertex_counts() {
        for (params, expect) in WITNESSES.iter().zip(WITNESS_COUNTS.iter()) {
            let lines = LineSet::from_i64(*params);
            assert_eq!(vertex_count(&lines), *expect, "params {params:?}");
        }
        let eight = LineSet::from_i64(EIGHT_VERTEX);
        assert_eq!(vertex_count(&eight), 8);
    }

    #[test]
    fn topology_x_sturm_is_six() {
        let lines = LineSet::from_i64(WITNESSES[9]);
        let t3 = trisector_polynomial(&lines, 3);
        let t4 = trisector_polynomial(&lines, 4);
        let r = intersection_polynomial(&t3, &t4);
        assert_eq!(r.deg(), 8);
        assert_eq!(poly::sturm_count(&r, &Bound::NegInf, &Bound::PosInf), 6);
    }

    #[test]
    fn resultant_roots_are_intersections() {
        // at each isolated root x0 of the resultant, the two quadratics in y
        // share a real root: check P1 and P2 nearly vanish at the recovered y
        let lines = LineSet::from_i64(WITNESSES[10]);
        let t3 = trisector_polynomial(&lines, 3);
        let t4 = trisector_polynomial(&lines, 4);
        let r = intersection_polynomial(&t3, &t4);
        let (sf, _) = r.squarefree();
        let roots = poly::isolate_roots(&sf);
        assert_eq!(roots.len(), 6);
        for loc in &roots {
            let refined = poly::refine_root(&sf, loc, &rat(1, 1i64 << 40));
            let x0 = match refined {
                poly::RootLoc::Exact(v) => v,
                poly::RootLoc::Open(a, b) => (a + b) / rat_i64(2),
            };
            // shared y root: (C2 A1 - C1 A2) / (B1 A2 - B2 A1)
            let (a1, b1, c1) = t3.eval_x(&x0);
            let (a2, b2, c2) = t4.eval_x(&x0);
            let denom = &b1 * &a2 - &b2 * &a1;
            assert!(!num_traits::Zero::is_zero(&denom));
            let y0 = (&c2 * &a1 - &c1 * &a2) / denom;
            let p1 = (&a1 * &y0 + &b1) * &y0 + &c1;
            let p2 = (&a2 * &y0 + &b2) * &y0 + &c2;
            let p1f = crate::surd::rational_to_f64(&p1).abs();
            let p2f = crate::surd::rational_to_f64(&p2).abs();
            assert!(p1f < 1e-4 && p2f < 1e-4, "residuals {p1f} {p2f}");
        }
    }
}
