//! Branch separation of a projected trisector in a frame.
//!
//! A projected trisector is a quartic with two vertical and two horizontal
//! asymptotes and four unbounded branches. Cutting the plane along the two
//! asymptote lines perpendicular to the monotone direction gives three zones;
//! in each zone the curve is exactly two root graphs that never meet, and the
//! six (zone, root) cells glue across the cuts where the finite root
//! continues. The glued chains are the branches: a three-zone chain (the
//! middle branch, hugging one asymptote at both ends), the single-cell branch
//! of the middle zone (the U branch), and two corner branches.

use crate::frame::{FrameData, TraceError, TraceResult};
use crate::interval::Iv;
use crate::rational::{rat_i64, Rational};
use crate::trisector::Axis;
use num_traits::{One, Zero};

/// Quadratic with interval coefficients, ascending order.
#[derive(Clone, Debug)]
pub struct QuadIv {
    pub c: [Iv; 3],
}

impl QuadIv {
    pub fn eval(&self, t: &Iv) -> Iv {
        self.c[2].mul(t).add(&self.c[1]).mul(t).add(&self.c[0])
    }

    fn eval_f64(&self, t: f64) -> f64 {
        (self.c[2].to_f64() * t + self.c[1].to_f64()) * t + self.c[0].to_f64()
    }
}

/// A projected trisector curve in a frame, with interval scalars.
#[derive(Clone, Debug)]
pub struct CurveIv {
    /// Global index of the third line (the one not defining the bisector).
    pub line: usize,
    /// A(x) y^2 + B(x) y + C(x) = 0.
    pub a: QuadIv,
    pub b: QuadIv,
    pub c: QuadIv,
    /// Transposed view A'(y) x^2 + B'(y) x + C'(y).
    pub ap: QuadIv,
    pub bp: QuadIv,
    pub cp: QuadIv,
    /// Vertical asymptote values (increasing).
    pub vx: (Iv, Iv),
    /// Horizontal asymptote values (increasing).
    pub hy: (Iv, Iv),
}

fn iv1() -> Iv {
    Iv::point(Rational::one())
}

/// Build the curve of line `line` on the bisector of `frame`, from the frame
/// parameters (alpha; b, c, d, e). Mirrors the exact transcription in
/// `trisector`, in factored form; equivalence is pinned by tests.
pub fn curve_in_frame(frame: &FrameData, which_other: usize) -> CurveIv {
    let (line, bcde) = &frame.others[which_other];
    let a = &frame.alpha;
    let [b, c, d, e] = bcde;
    let one = iv1();
    let two = Iv::from_i64(2);
    let four = Iv::from_i64(4);
    let a2 = a.square();
    let ac = one.add(&a2); // 1 + a^2
    let ac2 = ac.square();
    let d2 = d.square();
    let e2 = e.square();
    let one_d2 = one.add(&d2);
    let one_e2 = one.add(&e2);
    let delta = d2.add(&e2).add(&one);

    // A(x) = Ac (a^2 (1+d^2) - e^2) + 2 a e Ac x - a^2 x^2
    let pa = QuadIv {
        c: [
            ac.mul(&a2.mul(&one_d2).sub(&e2)),
            two.mul(a).mul(e).mul(&ac),
            a2.neg(),
        ],
    };
    // B(x) = 2 Ac^2 (b d e - c (1+d^2)) - 2 Ac (a(bd + ce) + Ac d e) x + 2 a d Ac x^2
    let pb = QuadIv {
        c: [
            two.mul(&ac2).mul(&b.mul(d).mul(e).sub(&c.mul(&one_d2))),
            two.neg()
                .mul(&ac)
                .mul(&a.mul(&b.mul(d).add(&c.mul(e))).add(&ac.mul(d).mul(e))),
            two.mul(a).mul(d).mul(&ac),
        ],
    };
    // C(x) = Ac^2 (b^2(1+e^2) + c^2(1+d^2) - 2 b c d e - Delta)
    //        + 2 Ac^2 (c d e - b (1+e^2)) x + Ac (1 - a^2 d^2 + e^2) x^2
    let pc = QuadIv {
        c: [
            ac2.mul(
                &b.square()
                    .mul(&one_e2)
                    .add(&c.square().mul(&one_d2))
                    .sub(&two.mul(b).mul(c).mul(d).mul(e))
                    .sub(&delta),
            ),
            two.mul(&ac2).mul(&c.mul(d).mul(e).sub(&b.mul(&one_e2))),
            ac.mul(&one.sub(&a2.mul(&d2)).add(&e2)),
        ],
    };
    // A'(y) = Ac (1 + e^2 - a^2 d^2) + 2 a d Ac y - a^2 y^2
    let pap = QuadIv {
        c: [
            ac.mul(&one.add(&e2).sub(&a2.mul(&d2))),
            two.mul(a).mul(d).mul(&ac),
            a2.neg(),
        ],
    };
    // B'(y), C'(y): x^1 and x^0 coefficients of (A, B, C) as quadratics in y
    let pbp = QuadIv {
        c: [pc.c[1].clone(), pb.c[1].clone(), pa.c[1].clone()],
    };
    let pcp = QuadIv {
        c: [pc.c[0].clone(), pb.c[0].clone(), pa.c[0].clone()],
    };

    // asymptotes: x = e Ac / a ± sqrt(Ac Delta); y = (d Ac ± sqrt(Ac Delta)) / a
    let prec = frame.prec;
    let rad = ac.mul(&delta).sqrt(prec).expect("Ac*Delta >= 0");
    let inv_a = a.recip().expect("alpha is certified nonzero");
    let x_mid = e.mul(&ac).mul(&inv_a);
    let y_mid = d.mul(&ac).mul(&inv_a);
    let (vx_lo, vx_hi) = (x_mid.sub(&rad), x_mid.add(&rad));
    let scaled = rad.mul(&inv_a);
    let (mut hy_lo, mut hy_hi) = (y_mid.sub(&scaled), y_mid.add(&scaled));
    if hy_lo.lo > hy_hi.lo {
        std::mem::swap(&mut hy_lo, &mut hy_hi);
    }
    let _ = four;

    CurveIv {
        line: *line,
        a: pa,
        b: pb,
        c: pc,
        ap: pap,
        bp: pbp,
        cp: pcp,
        vx: (vx_lo, vx_hi),
        hy: (hy_lo, hy_hi),
    }
}

/// Monotone class: whether all branches are graphs over y or over x.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonoClass {
    /// Middle branch hugs a vertical asymptote; every horizontal line meets
    /// the curve twice.
    YMono,
    /// Middle branch hugs a horizontal asymptote.
    XMono,
}

/// Branch identity within one curve.
pub const BR_CORNER_LOW: usize = 0;
pub const BR_MIDDLE: usize = 1;
pub const BR_U: usize = 2;
pub const BR_CORNER_HIGH: usize = 3;

/// One of the eight unbounded ends of a curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct End {
    /// The asymptote line the end hugs.
    pub axis: Axis,
    /// Which of the two parallel asymptotes (false = smaller value).
    pub upper: bool,
    /// Receding direction along the asymptote: up/right when true.
    pub positive: bool,
}

/// Combinatorial branch structure of a curve in a frame.
#[derive(Clone, Debug)]
pub struct CurveStructure {
    pub class: MonoClass,
    /// Asymptote values cutting the zone (monotone) coordinate, increasing.
    pub cuts: (Iv, Iv),
    /// Asymptote values in the root coordinate, increasing.
    pub across: (Iv, Iv),
    /// Root index (0 = lo, 1 = hi) of the middle branch per zone; [i, 1-i, i].
    pub mid_pattern: [usize; 3],
    /// Per cut: blow-up sign just below / above the cut.
    pub blow_below: [i32; 2],
    pub blow_above: [i32; 2],
    /// Ends of the four branches, each ordered along increasing zone coordinate.
    pub ends: [[End; 2]; 4],
}

/// Faces of a single trisector-like curve (five, tree-adjacent).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveFace {
    /// Beyond the low corner branch.
    OuterLow,
    /// Between the middle branch and the two corner branches.
    Mid,
    /// Between the middle branch and the U branch.
    MidU,
    /// Beyond the U branch.
    OuterU,
    /// Beyond the high corner branch.
    OuterHigh,
}

impl CurveFace {
    /// Nearest-diagram faces of the three-line diagram on this bisector.
    pub fn is_nvd(&self) -> bool {
        matches!(self, CurveFace::Mid | CurveFace::OuterU)
    }

    pub const ALL: [CurveFace; 5] = [
        CurveFace::OuterLow,
        CurveFace::Mid,
        CurveFace::MidU,
        CurveFace::OuterU,
        CurveFace::OuterHigh,
    ];

    /// The two faces separated by a branch, as (lower-side, upper-side) in the
    /// face tree: corner_low: OuterLow|Mid, middle: Mid|MidU, u: MidU|OuterU,
    /// corner_high: OuterHigh|Mid.
    pub fn sides_of_branch(branch: usize) -> (CurveFace, CurveFace) {
        match branch {
            BR_CORNER_LOW => (CurveFace::OuterLow, CurveFace::Mid),
            BR_MIDDLE => (CurveFace::Mid, CurveFace::MidU),
            BR_U => (CurveFace::MidU, CurveFace::OuterU),
            BR_CORNER_HIGH => (CurveFace::OuterHigh, CurveFace::Mid),
            _ => panic!("branch id"),
        }
    }
}

/// A curve together with its branch structure.
#[derive(Clone, Debug)]
pub struct CurveAnalysis {
    pub curve: CurveIv,
    pub st: CurveStructure,
}

fn certified_sign(v: &Iv, what: &'static str) -> TraceResult<i32> {
    match v.sign() {
        Some(s) if s != 0 => Ok(s),
        _ => Err(TraceError::PrecisionExhausted(what)),
    }
}

/// Decide the monotone class: find a numeric witness where one of the two
/// discriminants dips negative, then certify it with interval arithmetic.
fn mono_class(curve: &CurveIv) -> TraceResult<MonoClass> {
    // disc_y(x) = B^2 - 4AC < 0 somewhere  => some column misses the curve => ... (x side)
    // disc_x(y) = B'^2 - 4A'C' < 0 somewhere => some row misses the curve
    // exactly one of the two dips negative: a negative row witness proves the
    // middle branch hugs a horizontal asymptote (XMono) and vice versa.
    let disc_col = quad_disc(&curve.a, &curve.b, &curve.c);
    let disc_row = quad_disc(&curve.ap, &curve.bp, &curve.cp);
    let wit_col = f64_negative_witness(&disc_col);
    let wit_row = f64_negative_witness(&disc_row);
    // a negative column-discriminant witness means vertical lines miss the
    // curve: middle hugs a vertical asymptote: YMono
    if let Some(x) = wit_col {
        if certified_sign(&eval_poly_iv(&disc_col, &Iv::point(x)), "disc witness")? == -1 {
            return Ok(MonoClass::YMono);
        }
    }
    if let Some(y) = wit_row {
        if certified_sign(&eval_poly_iv(&disc_row, &Iv::point(y)), "disc witness")? == -1 {
            return Ok(MonoClass::XMono);
        }
    }
    Err(TraceError::PrecisionExhausted("monotone class witness"))
}

fn quad_disc(a: &QuadIv, b: &QuadIv, c: &QuadIv) -> Vec<Iv> {
    // B^2 - 4AC as a degree-4 interval polynomial
    let mut out = vec![Iv::point(Rational::zero()); 5];
    let four = Iv::from_i64(4);
    for i in 0..3 {
        for j in 0..3 {
            let t = b.c[i].mul(&b.c[j]).sub(&four.mul(&a.c[i]).mul(&c.c[j]));
            out[i + j] = out[i + j].add(&t);
        }
    }
    out
}

fn eval_poly_iv(p: &[Iv], t: &Iv) -> Iv {
    let mut acc = Iv::point(Rational::zero());
    for c in p.iter().rev() {
        acc = acc.mul(t).add(c);
    }
    acc
}

/// Search for a rational point where the interval polynomial is clearly
/// negative, steering with f64 and snapping to a dyadic rational.
fn f64_negative_witness(p: &[Iv]) -> Option<Rational> {
    let cf: Vec<f64> = p.iter().map(|c| c.to_f64()).collect();
    let lead = *cf.last()?;
    if !lead.is_finite() || lead == 0.0 {
        return None;
    }
    let bound = 1.0
        + cf[..cf.len() - 1]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let eval = |x: f64| -> f64 { cf.iter().rev().fold(0.0, |acc, c| acc * x + c) };
    let n = 4096;
    let mut best = (f64::INFINITY, 0.0);
    for i in 0..=n {
        let x = -bound + 2.0 * bound * (i as f64) / (n as f64);
        let v = eval(x);
        if v < best.0 {
            best = (v, x);
        }
    }
    // local refinement
    let mut lo = best.1 - 2.0 * bound / n as f64;
    let mut hi = best.1 + 2.0 * bound / n as f64;
    for _ in 0..60 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if eval(m1) < eval(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let x = (lo + hi) / 2.0;
    if eval(x) >= 0.0 {
        return None;
    }
    // snap to a dyadic rational
    let scaled = (x * (1u64 << 32) as f64).round();
    if !scaled.is_finite() {
        return None;
    }
    Some(Rational::new(
        num_bigint::BigInt::from(scaled as i128),
        num_bigint::BigInt::from(1u64 << 32),
    ))
}

/// Analyze the branch structure of a curve. Fails with a refinement request
/// (PrecisionExhausted) when the working precision cannot certify a sign.
pub fn analyze_curve(curve: &CurveIv) -> TraceResult<CurveAnalysis> {
    let class = mono_class(curve)?;
    let (cuts, across, bq) = match class {
        // zones along y, roots in x: cuts at horizontal asymptote values
        MonoClass::YMono => (curve.hy.clone(), curve.vx.clone(), &curve.bp),
        MonoClass::XMono => (curve.vx.clone(), curve.hy.clone(), &curve.b),
    };
    if !cuts.0.disjoint(&cuts.1) {
        return Err(TraceError::PrecisionExhausted("cut separation"));
    }

    // blow-up signs at the cuts: the quadratic's leading coefficient is
    // -alpha^2 < 0, so the A-coefficient is positive strictly between the
    // cuts and negative outside; the blowing root behaves like -B/A.
    let s0 = certified_sign(&bq.eval(&cuts.0), "B at lower cut")?;
    let s1 = certified_sign(&bq.eval(&cuts.1), "B at upper cut")?;
    let blow_below = [s0, -s1];
    let blow_above = [-s0, s1];
    // blowing root index: +inf -> hi (1), -inf -> lo (0); finite root is the other
    let fin_below = [
        if blow_below[0] > 0 { 0 } else { 1 },
        if blow_below[1] > 0 { 0 } else { 1 },
    ];
    let fin_above = [
        if blow_above[0] > 0 { 0 } else { 1 },
        if blow_above[1] > 0 { 0 } else { 1 },
    ];
    // middle = the three-zone chain; requires the glued zone-1 cell to be shared
    if fin_above[0] != fin_below[1] {
        return Err(TraceError::Structural(
            "no three-zone chain: middle branch not found".into(),
        ));
    }
    let mid_pattern = [fin_below[0], fin_above[0], fin_above[1]];
    if mid_pattern[0] != mid_pattern[2] {
        return Err(TraceError::Structural(
            "middle branch ends on different asymptotes".into(),
        ));
    }
    if mid_pattern[1] == mid_pattern[0] {
        return Err(TraceError::Structural(
            "middle pattern does not alternate".into(),
        ));
    }

    // ends in (zone coordinate, root coordinate) terms, then axis translation
    let (v_axis, h_axis) = match class {
        MonoClass::YMono => (Axis::Vertical, Axis::Horizontal),
        MonoClass::XMono => (Axis::Horizontal, Axis::Vertical),
    };
    // "vertical-like" end: t -> ±inf hugging across[idx] (an asymptote of v_axis);
    // "horizontal-like" end at cut k with side s: an end of the h_axis asymptote k.
    let v_end = |idx: usize, up: bool| End {
        axis: v_axis,
        upper: idx == 1,
        positive: up,
    };
    let h_end = |k: usize, s: i32| End {
        axis: h_axis,
        upper: k == 1,
        positive: s > 0,
    };
    let m = mid_pattern[0];
    let cl = 1 - m; // corner roots are opposite the middle's in their zones
    let u = 1 - mid_pattern[1];
    let ends = [
        // corner low: from its horizontal end at cut0 backwards to t -> -inf;
        // ordered along increasing t: (t->-inf vertical end, cut0 horizontal end)
        [v_end(cl, false), h_end(0, blow_below[0])],
        // middle: t -> -inf to t -> +inf on the same across line
        [v_end(m, false), v_end(m, true)],
        // u: cut0 side above, cut1 side below
        [h_end(0, blow_above[0]), h_end(1, blow_below[1])],
        // corner high
        [h_end(1, blow_above[1]), v_end(1 - mid_pattern[2], true)],
    ];

    Ok(CurveAnalysis {
        curve: curve.clone(),
        st: CurveStructure {
            class,
            cuts,
            across,
            mid_pattern,
            blow_below,
            blow_above,
            ends,
        },
    })
}

impl CurveAnalysis {
    /// Monotone (zone) coordinate and root coordinate of a frame point.
    pub fn tr_of_xy(&self, x: &Iv, y: &Iv) -> (Iv, Iv) {
        match self.st.class {
            MonoClass::YMono => (y.clone(), x.clone()),
            MonoClass::XMono => (x.clone(), y.clone()),
        }
    }

    /// The quadratic coefficients in the root coordinate at zone coordinate t.
    fn quad_at(&self, t: &Iv) -> (Iv, Iv, Iv) {
        let (a, b, c) = match self.st.class {
            MonoClass::YMono => (&self.curve.ap, &self.curve.bp, &self.curve.cp),
            MonoClass::XMono => (&self.curve.a, &self.curve.b, &self.curve.c),
        };
        (a.eval(t), b.eval(t), c.eval(t))
    }

    pub fn zone_of(&self, t: &Iv) -> TraceResult<usize> {
        if t.lt(&self.st.cuts.0) == Some(true) {
            return Ok(0);
        }
        if self.st.cuts.1.lt(t) == Some(true) {
            return Ok(2);
        }
        if self.st.cuts.0.lt(t) == Some(true) && t.lt(&self.st.cuts.1) == Some(true) {
            return Ok(1);
        }
        Err(TraceError::PrecisionExhausted("zone of point"))
    }

    /// Root index (0 = lo, 1 = hi) of a point (t, r) on the curve: compare r
    /// with the other root r' = -B/A - r.
    pub fn root_index(&self, t: &Iv, r: &Iv) -> TraceResult<usize> {
        let (a, b, _) = self.quad_at(t);
        if a.contains_zero() {
            return Err(TraceError::PrecisionExhausted("root index: A at point"));
        }
        let other = b.div(&a).unwrap().neg().sub(r);
        match r.lt(&other) {
            Some(true) => Ok(0),
            Some(false) => Ok(1),
            None => Err(TraceError::PrecisionExhausted("root index separation")),
        }
    }

    /// Branch id of a curve point given in frame coordinates.
    pub fn branch_of_point(&self, x: &Iv, y: &Iv) -> TraceResult<usize> {
        let (t, r) = self.tr_of_xy(x, y);
        let zone = self.zone_of(&t)?;
        let idx = self.root_index(&t, &r)?;
        Ok(self.branch_of_cell(zone, idx))
    }

    pub fn branch_of_cell(&self, zone: usize, root_idx: usize) -> usize {
        if root_idx == self.st.mid_pattern[zone] {
            BR_MIDDLE
        } else {
            match zone {
                0 => BR_CORNER_LOW,
                1 => BR_U,
                _ => BR_CORNER_HIGH,
            }
        }
    }

    /// A rational zone coordinate strictly inside the given zone.
    pub fn zone_sample_t(&self, zone: usize) -> TraceResult<Rational> {
        let one = rat_i64(1);
        match zone {
            0 => Ok(&self.st.cuts.0.lo - &one),
            2 => Ok(&self.st.cuts.1.hi + &one),
            1 => {
                if self.st.cuts.0.hi < self.st.cuts.1.lo {
                    Ok((&self.st.cuts.0.hi + &self.st.cuts.1.lo)
                        / Rational::from_integer(2.into()))
                } else {
                    Err(TraceError::PrecisionExhausted("zone-1 sample"))
                }
            }
            _ => panic!("zone"),
        }
    }

    /// The curve point on `(zone, root_idx)` at zone coordinate t, as frame
    /// coordinates (x, y). `prec` controls the sqrt width.
    pub fn point_on_cell(
        &self,
        zone: usize,
        root_idx: usize,
        t: &Rational,
        prec: u32,
    ) -> TraceResult<(Iv, Iv)> {
        let ti = Iv::point(t.clone());
        let (a, b, c) = self.quad_at(&ti);
        if a.contains_zero() {
            return Err(TraceError::PrecisionExhausted("cell point: A"));
        }
        let disc = b.square().sub(&Iv::from_i64(4).mul(&a).mul(&c));
        let sq = disc
            .sqrt(prec)
            .ok_or(TraceError::PrecisionExhausted("cell point: disc"))?;
        let two_a = Iv::from_i64(2).mul(&a);
        let r1 = b.neg().sub(&sq).div(&two_a).unwrap();
        let r2 = b.neg().add(&sq).div(&two_a).unwrap();
        let (lo, hi) = match r1.lt(&r2) {
            Some(true) => (r1, r2),
            Some(false) => (r2, r1),
            None => return Err(TraceError::PrecisionExhausted("cell point: root order")),
        };
        let r = if root_idx == 0 { lo } else { hi };
        let _ = zone;
        Ok(match self.st.class {
            MonoClass::YMono => (r, ti),
            MonoClass::XMono => (ti, r),
        })
    }

    /// A representative frame point on the given branch (used for matching
    /// branches of the same trisector across its three host bisectors).
    pub fn point_on_branch(&self, branch: usize, prec: u32) -> TraceResult<(Iv, Iv)> {
        let (zone, root_idx) = match branch {
            BR_CORNER_LOW => (0, 1 - self.st.mid_pattern[0]),
            BR_MIDDLE => (1, self.st.mid_pattern[1]),
            BR_U => (1, 1 - self.st.mid_pattern[1]),
            BR_CORNER_HIGH => (2, 1 - self.st.mid_pattern[2]),
            _ => panic!("branch id"),
        };
        let t = self.zone_sample_t(zone)?;
        self.point_on_cell(zone, root_idx, &t, prec)
    }

    /// Face of a frame point that is not on the curve.
    pub fn face_of_point(&self, x: &Iv, y: &Iv) -> TraceResult<CurveFace> {
        let (t, r) = self.tr_of_xy(x, y);
        let zone = self.zone_of(&t)?;
        let (a, b, c) = self.quad_at(&t);
        if a.contains_zero() {
            return Err(TraceError::PrecisionExhausted("face: A at point"));
        }
        let disc = b.square().sub(&Iv::from_i64(4).mul(&a).mul(&c));
        let sq = disc
            .sqrt(self.curve_prec())
            .ok_or(TraceError::PrecisionExhausted("face: disc"))?;
        let two_a = Iv::from_i64(2).mul(&a);
        let r1 = b.neg().sub(&sq).div(&two_a).unwrap();
        let r2 = b.neg().add(&sq).div(&two_a).unwrap();
        let (lo, hi) = match r1.lt(&r2) {
            Some(true) => (r1, r2),
            Some(false) => (r2, r1),
            None => return Err(TraceError::PrecisionExhausted("face: root order")),
        };
        let j = if r.lt(&lo) == Some(true) {
            0
        } else if hi.lt(&r) == Some(true) {
            2
        } else if lo.lt(&r) == Some(true) && r.lt(&hi) == Some(true) {
            1
        } else {
            return Err(TraceError::PrecisionExhausted("face: interval position"));
        };
        Ok(self.face_of_piece(zone, j))
    }

    /// Face of the open piece (zone, position) where position 0 is below both
    /// roots, 1 between, 2 above.
    pub fn face_of_piece(&self, zone: usize, j: usize) -> CurveFace {
        let m = self.st.mid_pattern[zone];
        match zone {
            0 | 2 => {
                if j == 1 {
                    CurveFace::Mid
                } else {
                    // j on the corner's far side vs the middle's far side
                    let corner_far = if m == 1 { 0 } else { 2 };
                    if j == corner_far {
                        if zone == 0 {
                            CurveFace::OuterLow
                        } else {
                            CurveFace::OuterHigh
                        }
                    } else {
                        CurveFace::MidU
                    }
                }
            }
            1 => {
                if j == 1 {
                    CurveFace::MidU
                } else {
                    let mid_far = if m == 1 { 2 } else { 0 };
                    // beyond the middle root is the Mid face; beyond the U root
                    // is OuterU
                    if j == mid_far {
                        CurveFace::Mid
                    } else {
                        CurveFace::OuterU
                    }
                }
            }
            _ => panic!("zone"),
        }
    }

    fn curve_prec(&self) -> u32 {
        64
    }

    /// Ends of branch `b` ordered along increasing zone coordinate.
    pub fn branch_ends(&self, b: usize) -> &[End; 2] {
        &self.st.ends[b]
    }

    /// Asymptote value (in the root coordinate) of the middle branch.
    pub fn middle_axis(&self) -> (Axis, bool) {
        let e = &self.st.ends[BR_MIDDLE][0];
        (e.axis, e.upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::compute_frame;
    use crate::lines::LineSet;

    fn analysis(params: [i64; 9], which: usize) -> CurveAnalysis {
        let lines = LineSet::from_i64(params);
        let frame = compute_frame(&lines, (1, 2), 128).unwrap();
        let curve = curve_in_frame(&frame, which);
        analyze_curve(&curve).unwrap()
    }

    #[test]
    fn interval_curve_matches_exact_transcription() {
        let lines = LineSet::from_i64([-9, 2, -2, 1, -3, -1, 1, -1, -5]);
        let frame = compute_frame(&lines, (1, 2), 128).unwrap();
        for which in [0usize, 1] {
            let civ = curve_in_frame(&frame, which);
            let exact = crate::trisector::trisector_polynomial(&lines, civ.line);
            for k in 0..3 {
                for (interval, poly) in [
                    (&civ.a.c[k], &exact.a),
                    (&civ.b.c[k], &exact.b),
                    (&civ.c.c[k], &exact.c),
                    (&civ.ap.c[k], &exact.ap),
                    (&civ.bp.c[k], &exact.bp),
                    (&civ.cp.c[k], &exact.cp),
                ] {
                    let want = poly.coeff(k);
                    assert!(
                        interval.lo <= want && want <= interval.hi,
                        "coefficient {k} mismatch"
                    );
                }
            }
            // asymptotes agree with the exact surds
            let (vlo, vhi) = &exact.vertical_asymptotes;
            let (lo, hi) = vlo.bounds(100);
            assert!(civ.vx.0.lo <= hi && lo <= civ.vx.0.hi);
            let (lo, hi) = vhi.bounds(100);
            assert!(civ.vx.1.lo <= hi && lo <= civ.vx.1.hi);
        }
    }

    #[test]
    fn four_branches_with_unique_middle() {
        for params in [
            [-9, 2, -2, 1, -3, -1, 1, -1, -5],
            [1, -18, -5, -4, -16, 11, -18, -6, -3],
            [10, 14, -6, -9, -5, -19, 5, 13, 11],
            [5, 7, -10, 0, 2, 16, 7, 0, -16],
        ] {
            for which in [0usize, 1] {
                let an = analysis(params, which);
                // middle pattern alternates
                assert_eq!(an.st.mid_pattern[0], an.st.mid_pattern[2]);
                assert_ne!(an.st.mid_pattern[0], an.st.mid_pattern[1]);
                // exactly one branch has both ends on one asymptote line
                let mut same_line = 0;
                for b in 0..4 {
                    let e = an.branch_ends(b);
                    if e[0].axis == e[1].axis && e[0].upper == e[1].upper {
                        same_line += 1;
                        assert_eq!(b, BR_MIDDLE);
                    }
                }
                assert_eq!(same_line, 1);
                // each asymptote line hosts exactly two ends, opposite directions
                use std::collections::HashMap;
                let mut per_line: HashMap<(Axis, bool), Vec<bool>> = HashMap::new();
                for b in 0..4 {
                    for e in an.branch_ends(b) {
                        per_line.entry((e.axis, e.upper)).or_default().push(e.positive);
                    }
                }
                assert_eq!(per_line.len(), 4);
                for (_line, dirs) in per_line {
                    assert_eq!(dirs.len(), 2);
                    assert_ne!(dirs[0], dirs[1]);
                }
            }
        }
    }

    #[test]
    fn branch_points_lie_on_curve() {
        let an = analysis([1, -18, -5, -4, -16, 11, -18, -6, -3], 0);
        for b in 0..4 {
            let (x, y) = an.point_on_branch(b, 128).unwrap();
            // P(x, y) interval must straddle zero
            let (a, bb, c) = (an.curve.a.eval(&x), an.curve.b.eval(&x), an.curve.c.eval(&x));
            let p = a.mul(&y).add(&bb).mul(&y).add(&c);
            assert!(p.contains_zero(), "branch {b}: {:?}", p);
            // and membership maps back to the same branch
            assert_eq!(an.branch_of_point(&x, &y).unwrap(), b);
        }
    }

    #[test]
    fn face_labels_match_exact_distances() {
        // sample a point in each face and compare the NVD/FVD label with the
        // exact rational distance comparison on the bisector surface
        let params = [-9i64, 2, -2, 1, -3, -1, 1, -1, -5];
        let lines = LineSet::from_i64(params);
        let frame = compute_frame(&lines, (1, 2), 128).unwrap();
        for which in [0usize, 1] {
            let curve = curve_in_frame(&frame, which);
            let third = curve.line;
            let an = analyze_curve(&curve).unwrap();
            for zone in 0..3 {
                let t = an.zone_sample_t(zone).unwrap();
                for j in [0usize, 1, 2] {
                    // build a rational sample point at (t, r) with r picked by
                    // nudging beyond/between the roots
                    let ti = Iv::point(t.clone());
                    let (a, b, c) = an.quad_at(&ti);
                    let disc = b.square().sub(&Iv::from_i64(4).mul(&a).mul(&c));
                    let sq = disc.sqrt(96).unwrap();
                    let two_a = Iv::from_i64(2).mul(&a);
                    let r1 = b.neg().sub(&sq).div(&two_a).unwrap();
                    let r2 = b.neg().add(&sq).div(&two_a).unwrap();
                    let (lo, hi) = if r1.lt(&r2) == Some(true) { (r1, r2) } else { (r2, r1) };
                    let r = match j {
                        0 => &lo.lo - &rat_i64(2),
                        1 => (&lo.hi + &hi.lo) / Rational::from_integer(2.into()),
                        _ => &hi.hi + &rat_i64(2),
                    };
                    let (x, y) = match an.st.class {
                        MonoClass::YMono => (r.clone(), t.clone()),
                        MonoClass::XMono => (t.clone(), r.clone()),
                    };
                    let z = -(&lines.a * &x * &y) / (Rational::one() + &lines.a * &lines.a);
                    let p = [x.clone(), y.clone(), z];
                    let d12 = lines.dist2(&p, 1);
                    let dk = lines.dist2(&p, third);
                    let face = an
                        .face_of_point(&Iv::point(x), &Iv::point(y))
                        .unwrap();
                    assert_eq!(
                        face.is_nvd(),
                        dk > d12,
                        "params {params:?} curve {which} zone {zone} j {j} face {face:?}"
                    );
                }
            }
        }
    }

    use crate::rational::rat_i64;
}
