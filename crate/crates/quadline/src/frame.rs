//! Canonical frames for each of the six line pairs.
//!
//! The input parametrization fixes the frame of the pair (1,2). For any other
//! pair a similarity transform (rotation + translation + positive scaling)
//! brings the two lines into the same canonical position; Voronoi topology is
//! invariant under similarities. The transform involves square roots, so all
//! derived frames carry rational interval scalars at a working precision and
//! are recomputed on demand at higher precision.

use crate::interval::{cross3, dot3, Iv};
use crate::lines::LineSet;
use crate::rational::Rational;
use num_traits::{One, Zero};

/// Errors from the certified-refinement path.
#[derive(Clone, Debug)]
pub enum TraceError {
    /// A sign could not be certified below the precision cap; the input is
    /// degenerate or vanishingly close to degenerate for this predicate.
    PrecisionExhausted(&'static str),
    /// The input violates a structural assumption (general position).
    Degenerate(String),
    /// Internal consistency check failed.
    Structural(String),
}

impl std::fmt::Display for TraceError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TraceError::PrecisionExhausted(what) => {
                write!(f, "precision exhausted while deciding: {what}")
            }
            TraceError::Degenerate(msg) => write!(f, "degenerate input: {msg}"),
            TraceError::Structural(msg) => write!(f, "structural inconsistency: {msg}"),
        }
    }
}

impl std::error::Error for TraceError {}

pub type TraceResult<T> = Result<T, TraceError>;

/// Upper bound on refinement precision before giving up.
pub const PREC_CAP: u32 = 4096;

/// Line pair indices, 1-based, first < second.
pub type Pair = (usize, usize);

pub const ALL_PAIRS: [Pair; 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// The two non-pair line indices, in increasing order.
pub fn others(pair: Pair) -> (usize, usize) {
    let mut it = (1..=4).filter(|k| *k != pair.0 && *k != pair.1);
    (it.next().unwrap(), it.next().unwrap())
}

/// Frame scalars at one working precision.
#[derive(Clone, Debug)]
pub struct FrameData {
    pub pair: Pair,
    pub prec: u32,
    /// Slope parameter: the pair lines have directions (1, ±alpha, 0).
    pub alpha: Iv,
    /// (line index, [b, c, d, e]) of the two non-pair lines in frame coordinates.
    pub others: [(usize, [Iv; 4]); 2],
    /// Row-major rotation (rows are the frame axes in world coordinates).
    rot: [[Iv; 3]; 3],
    /// World-space origin (midpoint of the common perpendicular feet); rational.
    origin: [Rational; 3],
    /// Positive scale factor mapping the half-distance to 1.
    scale: Iv,
}

impl FrameData {
    /// Map a world-space interval point into frame coordinates.
    pub fn to_frame(&self, p: &[Iv; 3]) -> [Iv; 3] {
        let w = [
            p[0].sub(&Iv::point(self.origin[0].clone())),
            p[1].sub(&Iv::point(self.origin[1].clone())),
            p[2].sub(&Iv::point(self.origin[2].clone())),
        ];
        [
            dot3(&self.rot[0], &w).mul(&self.scale),
            dot3(&self.rot[1], &w).mul(&self.scale),
            dot3(&self.rot[2], &w).mul(&self.scale),
        ]
    }

    /// Map a frame-coordinate interval point back to world space.
    pub fn from_frame(&self, p: &[Iv; 3]) -> [Iv; 3] {
        let inv_s = self.scale.recip().expect("frame scale excludes zero");
        let q = [p[0].mul(&inv_s), p[1].mul(&inv_s), p[2].mul(&inv_s)];
        let col = |k: usize| -> [Iv; 3] {
            [
                self.rot[0][k].clone(),
                self.rot[1][k].clone(),
                self.rot[2][k].clone(),
            ]
        };
        [
            dot3(&col(0), &q).add(&Iv::point(self.origin[0].clone())),
            dot3(&col(1), &q).add(&Iv::point(self.origin[1].clone())),
            dot3(&col(2), &q).add(&Iv::point(self.origin[2].clone())),
        ]
    }

    /// Map a world direction vector into frame axes (no translation/scale).
    pub fn dir_to_frame(&self, u: &[Iv; 3]) -> [Iv; 3] {
        [
            dot3(&self.rot[0], u),
            dot3(&self.rot[1], u),
            dot3(&self.rot[2], u),
        ]
    }

    /// Bisector surface height z = -alpha x y / (1 + alpha^2) in frame coords.
    pub fn surface_z(&self, x: &Iv, y: &Iv) -> Iv {
        let denom = self.alpha.square().add(&Iv::point(Rational::one()));
        self.alpha
            .neg()
            .mul(x)
            .mul(y)
            .div(&denom)
            .expect("1 + alpha^2 > 0")
    }
}

fn iv_pt(r: &Rational) -> Iv {
    Iv::point(r.clone())
}

fn rat_vec(v: &[Rational; 3]) -> [Iv; 3] {
    [iv_pt(&v[0]), iv_pt(&v[1]), iv_pt(&v[2])]
}

/// Feet of the common perpendicular of two skew lines; exact.
fn common_perpendicular_feet(
    q1: &[Rational; 3],
    u1: &[Rational; 3],
    q2: &[Rational; 3],
    u2: &[Rational; 3],
) -> ([Rational; 3], [Rational; 3]) {
    let dot = |a: &[Rational; 3], b: &[Rational; 3]| -> Rational {
        &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
    };
    let w = [&q2[0] - &q1[0], &q2[1] - &q1[1], &q2[2] - &q1[2]];
    // solve [u1.u1, -u1.u2; u1.u2, -u2.u2] (s, t) = (w.u1, w.u2)
    let a11 = dot(u1, u1);
    let a12 = -dot(u1, u2);
    let a21 = dot(u1, u2);
    let a22 = -dot(u2, u2);
    let b1 = dot(&w, u1);
    let b2 = dot(&w, u2);
    let det = &a11 * &a22 - &a12 * &a21;
    assert!(!det.is_zero(), "parallel lines have no unique perpendicular");
    let s = (&b1 * &a22 - &b2 * &a12) / &det;
    let t = (&a11 * &b2 - &a21 * &b1) / &det;
    let f1 = [
        &q1[0] + &s * &u1[0],
        &q1[1] + &s * &u1[1],
        &q1[2] + &s * &u1[2],
    ];
    let f2 = [
        &q2[0] + &t * &u2[0],
        &q2[1] + &t * &u2[1],
        &q2[2] + &t * &u2[2],
    ];
    (f1, f2)
}

/// Compute the frame of `pair` at the given working precision.
///
/// For the pair (1,2) the frame is the identity and all scalars are exact
/// points; other pairs get interval scalars whose widths shrink with `prec`.
pub fn compute_frame(lines: &LineSet, pair: Pair, prec: u32) -> TraceResult<FrameData> {
    if pair == (1, 2) {
        let zero = Rational::zero();
        let mk = |i: usize| -> (usize, [Iv; 4]) {
            let (b, c, d, e) = lines.bcde(i);
            (i, [iv_pt(&b), iv_pt(&c), iv_pt(&d), iv_pt(&e)])
        };
        let one = || iv_pt(&Rational::one());
        let zo = || iv_pt(&zero);
        return Ok(FrameData {
            pair,
            prec,
            alpha: iv_pt(&lines.a),
            others: [mk(3), mk(4)],
            rot: [
                [one(), zo(), zo()],
                [zo(), one(), zo()],
                [zo(), zo(), one()],
            ],
            origin: [zero.clone(), zero.clone(), zero],
            scale: one(),
        });
    }

    let (i, j) = pair;
    let (qi, ui) = lines.line(i);
    let (qj, uj) = lines.line(j);
    let (fi, fj) = common_perpendicular_feet(&qi, &ui, &qj, &uj);
    let origin = [
        (&fi[0] + &fj[0]) / Rational::from_integer(2.into()),
        (&fi[1] + &fj[1]) / Rational::from_integer(2.into()),
        (&fi[2] + &fj[2]) / Rational::from_integer(2.into()),
    ];

    let uiv = rat_vec(&ui);
    let ujv = rat_vec(&uj);
    let ni = dot3(&uiv, &uiv).sqrt(prec).unwrap();
    let nj = dot3(&ujv, &ujv).sqrt(prec).unwrap();
    let ui_hat = unit_div(&uiv, &ni)?;
    let uj_hat = unit_div(&ujv, &nj)?;
    // skew lines: both the sum and the difference of unit directions are nonzero
    let sum = add3(&ui_hat, &uj_hat);
    let diff = sub3(&ui_hat, &uj_hat);
    if dot3(&sum, &sum).sign() != Some(1) || dot3(&diff, &diff).sign() != Some(1) {
        return Err(TraceError::PrecisionExhausted("frame axis norms"));
    }
    let xh = normalize(&sum, prec)?;
    let yh = normalize(&diff, prec)?;
    let zh = cross3(&xh, &yh);
    // the z-coordinate of line i's foot decides which line sits at z = +1
    let w_fi = [
        iv_pt(&(&fi[0] - &origin[0])),
        iv_pt(&(&fi[1] - &origin[1])),
        iv_pt(&(&fi[2] - &origin[2])),
    ];
    let zi = dot3(&zh, &w_fi);
    let (yh, zh) = match zi.sign() {
        Some(1) => (yh, zh),
        Some(-1) => (neg3(&yh), neg3(&zh)),
        _ => return Err(TraceError::PrecisionExhausted("top line side")),
    };

    let h = dot3(&zh, &w_fi);
    let scale = match h.sign() {
        Some(1) => h.recip().unwrap(),
        _ => return Err(TraceError::PrecisionExhausted("frame scale")),
    };

    // alpha: direction of line i in frame coords is ∝ (1, alpha, 0)
    let dix = dot3(&xh, &uiv);
    let diy = dot3(&yh, &uiv);
    if dix.contains_zero() {
        return Err(TraceError::PrecisionExhausted("alpha denominator"));
    }
    let alpha = diy.div(&dix).unwrap();
    if alpha.contains_zero() {
        return Err(TraceError::PrecisionExhausted("alpha sign"));
    }

    // non-pair lines in frame coordinates
    let (k1, k2) = others(pair);
    let mut out: Vec<(usize, [Iv; 4])> = Vec::with_capacity(2);
    for k in [k1, k2] {
        let (qk, uk) = lines.line(k);
        let ukv = rat_vec(&uk);
        let dz = dot3(&zh, &ukv);
        if dz.contains_zero() {
            return Err(TraceError::PrecisionExhausted("line direction z-component"));
        }
        let dx = dot3(&xh, &ukv);
        let dy = dot3(&yh, &ukv);
        let d = dx.div(&dz).unwrap();
        let e = dy.div(&dz).unwrap();
        let wq = [
            iv_pt(&(&qk[0] - &origin[0])),
            iv_pt(&(&qk[1] - &origin[1])),
            iv_pt(&(&qk[2] - &origin[2])),
        ];
        let wx = dot3(&xh, &wq);
        let wy = dot3(&yh, &wq);
        let wz = dot3(&zh, &wq);
        // parameter where the line crosses the z' = 0 plane
        let t0 = wz.neg().div(&dz).unwrap();
        let b = wx.add(&t0.mul(&dx)).mul(&scale);
        let c = wy.add(&t0.mul(&dy)).mul(&scale);
        out.push((k, [b, c, d, e]));
    }

    Ok(FrameData {
        pair,
        prec,
        alpha,
        others: [out[0].clone(), out[1].clone()],
        rot: [xh, yh, zh],
        origin,
        scale,
    })
}

fn add3(a: &[Iv; 3], b: &[Iv; 3]) -> [Iv; 3] {
    [a[0].add(&b[0]), a[1].add(&b[1]), a[2].add(&b[2])]
}

fn sub3(a: &[Iv; 3], b: &[Iv; 3]) -> [Iv; 3] {
    [a[0].sub(&b[0]), a[1].sub(&b[1]), a[2].sub(&b[2])]
}

fn neg3(a: &[Iv; 3]) -> [Iv; 3] {
    [a[0].neg(), a[1].neg(), a[2].neg()]
}

fn unit_div(v: &[Iv; 3], n: &Iv) -> TraceResult<[Iv; 3]> {
    let inv = n
        .recip()
        .ok_or(TraceError::PrecisionExhausted("unit vector norm"))?;
    Ok([v[0].mul(&inv), v[1].mul(&inv), v[2].mul(&inv)])
}

fn normalize(v: &[Iv; 3], prec: u32) -> TraceResult<[Iv; 3]> {
    let n2 = dot3(v, v);
    let n = n2
        .sqrt(prec)
        .ok_or(TraceError::PrecisionExhausted("normalize sqrt"))?;
    unit_div(v, &n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_i64;

    #[test]
    fn identity_frame_for_pair_12() {
        let lines = LineSet::from_i64([-9, 2, -2, 1, -3, -1, 1, -1, -5]);
        let f = compute_frame(&lines, (1, 2), 64).unwrap();
        assert_eq!(f.alpha.to_f64(), -9.0);
        assert_eq!(f.others[0].0, 3);
        assert_eq!(f.others[0].1[0].to_f64(), 2.0);
    }

    #[test]
    fn derived_frame_puts_pair_in_canonical_position() {
        let lines = LineSet::from_i64([1, -18, -5, -4, -16, 11, -18, -6, -3]);
        for pair in ALL_PAIRS {
            let f = compute_frame(&lines, pair, 128).unwrap();
            let (qi, ui) = lines.line(pair.0);
            let qf = f.to_frame(&rat_vec(&qi));
            let uf = f.dir_to_frame(&rat_vec(&ui));
            assert!(uf[2].to_f64().abs() < 1e-9, "{pair:?}");
            let slope = uf[1].to_f64() / uf[0].to_f64();
            assert!((slope - f.alpha.to_f64()).abs() < 1e-9, "{pair:?}");
            assert!((qf[2].to_f64() - 1.0).abs() < 1e-9, "{pair:?}");
            let (qj, uj) = lines.line(pair.1);
            let qjf = f.to_frame(&rat_vec(&qj));
            let ujf = f.dir_to_frame(&rat_vec(&uj));
            assert!((qjf[2].to_f64() + 1.0).abs() < 1e-9, "{pair:?}");
            let slope_j = ujf[1].to_f64() / ujf[0].to_f64();
            assert!((slope_j + f.alpha.to_f64()).abs() < 1e-9, "{pair:?}");
        }
    }

    #[test]
    fn frame_roundtrip() {
        let lines = LineSet::from_i64([1, -18, -5, -4, -16, 11, -18, -6, -3]);
        let f = compute_frame(&lines, (2, 4), 128).unwrap();
        let p = [
            Iv::point(rat_i64(3)),
            Iv::point(rat_i64(-7)),
            Iv::point(rat_i64(2)),
        ];
        let q = f.from_frame(&f.to_frame(&p));
        for k in 0..3 {
            assert!((q[k].to_f64() - p[k].to_f64()).abs() < 1e-9);
            assert!(q[k].lo <= p[k].lo && p[k].hi <= q[k].hi);
        }
    }

    #[test]
    fn refinement_shrinks_widths() {
        let lines = LineSet::from_i64([1, -18, -5, -4, -16, 11, -18, -6, -3]);
        let lo = compute_frame(&lines, (3, 4), 64).unwrap();
        let hi = compute_frame(&lines, (3, 4), 256).unwrap();
        assert!(hi.alpha.width() < lo.alpha.width());
        assert!(crate::surd::rational_to_f64(&hi.alpha.width()) < 1e-40);
    }
}
