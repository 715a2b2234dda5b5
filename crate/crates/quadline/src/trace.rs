//! Extraction of the real configuration realized on each of the six
//! bisectors of a four-line input.
//!
//! Vertices are isolated once, exactly, on the canonical bisector; their 3D
//! boxes are mapped into each pair frame. All remaining per-bisector
//! predicates (asymptote order, branch membership, crossing order and signs)
//! are certified by adaptive rational interval refinement.

use crate::branch::{analyze_curve, curve_in_frame, CurveAnalysis, MonoClass, BR_MIDDLE, BR_U};
use crate::config::{Color, Configuration, Crossing, CurveCombi, CurveLine};
use crate::frame::{compute_frame, others, FrameData, Pair, TraceError, TraceResult, ALL_PAIRS, PREC_CAP};
use crate::interval::Iv;
use crate::lines::LineSet;
use crate::poly::{self, Poly, RootLoc};
use crate::rational::Rational;
use crate::trisector::{intersection_polynomial, trisector_polynomial, Axis};
use num_traits::One;
use std::collections::BTreeMap;

/// Exact per-input data shared by all six bisector traces.
pub struct TraceContext {
    pub lines: LineSet,
    /// Squarefree intersection resultant on the canonical bisector.
    pub resultant: Poly,
    /// Isolated roots, ascending: the global vertex identities.
    pub roots: Vec<RootLoc>,
    t3a: Poly,
    t3b: Poly,
    t3c: Poly,
    t4a: Poly,
    t4b: Poly,
    t4c: Poly,
}

impl TraceContext {
    pub fn new(lines: &LineSet) -> TraceResult<TraceContext> {
        let t3 = trisector_polynomial(lines, 3);
        let t4 = trisector_polynomial(lines, 4);
        let r = intersection_polynomial(&t3, &t4);
        if r.is_zero() {
            return Err(TraceError::Degenerate("zero resultant".into()));
        }
        let (sf, gdeg) = r.squarefree();
        if gdeg > 0 {
            return Err(TraceError::Degenerate(
                "intersection resultant not squarefree".into(),
            ));
        }
        let roots = poly::isolate_roots(&sf);
        Ok(TraceContext {
            lines: lines.clone(),
            resultant: sf,
            roots,
            t3a: t3.a,
            t3b: t3.b,
            t3c: t3.c,
            t4a: t4.a,
            t4b: t4.b,
            t4c: t4.c,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.roots.len()
    }

    /// World-space interval box of vertex `i`, with x-width about 2^-prec.
    pub fn vertex_3d(&self, i: usize, prec: u32) -> TraceResult<[Iv; 3]> {
        let width = Rational::new(1.into(), num_bigint::BigInt::one() << prec);
        let loc = poly::refine_root(&self.resultant, &self.roots[i], &width);
        let x = loc.to_iv();
        // shared y root of the two quadratics: primary and secondary
        // eliminants; at least one denominator is nonzero in general position
        let a1 = self.t3a.eval_iv(&x);
        let b1 = self.t3b.eval_iv(&x);
        let c1 = self.t3c.eval_iv(&x);
        let a2 = self.t4a.eval_iv(&x);
        let b2 = self.t4b.eval_iv(&x);
        let c2 = self.t4c.eval_iv(&x);
        let num1 = c2.mul(&a1).sub(&c1.mul(&a2));
        let den1 = b1.mul(&a2).sub(&b2.mul(&a1));
        let y = if !den1.contains_zero() {
            num1.div(&den1).unwrap()
        } else {
            let num2 = b1.mul(&c2).sub(&b2.mul(&c1));
            let den2 = a1.mul(&c2).sub(&a2.mul(&c1));
            if !den2.contains_zero() {
                num2.neg().div(&den2).unwrap()
            } else {
                return Err(TraceError::PrecisionExhausted("vertex y eliminant"));
            }
        };
        let a = Iv::point(self.lines.a.clone());
        let denom = Iv::point(Rational::one()).add(&a.square());
        let z = a.neg().mul(&x).mul(&y).div(&denom).unwrap();
        Ok([x, y, z])
    }
}

/// The configuration traced on one bisector, with its provenance.
#[derive(Clone, Debug)]
pub struct TracedConfig {
    pub pair: Pair,
    pub config: Configuration,
    /// Third line of the red / blue curve (the trisector identities).
    pub red_line: usize,
    pub blue_line: usize,
    /// Crossing id == global vertex index (canonical-resultant root order).
    pub prec: u32,
}

/// Trace the configuration of one bisector at adaptive precision.
pub fn trace_configuration(ctx: &TraceContext, pair: Pair) -> TraceResult<TracedConfig> {
    let mut prec = 64u32;
    loop {
        match trace_at(ctx, pair, prec) {
            Ok(t) => return Ok(t),
            Err(TraceError::PrecisionExhausted(_)) if prec < PREC_CAP => {
                prec *= 2;
            }
            Err(e) => return Err(e),
        }
    }
}

struct CurveSide {
    analysis: CurveAnalysis,
    line: usize,
}

fn trace_at(ctx: &TraceContext, pair: Pair, prec: u32) -> TraceResult<TracedConfig> {
    let frame = compute_frame(&ctx.lines, pair, prec)?;
    let red = CurveSide {
        analysis: analyze_curve(&curve_in_frame(&frame, 0))?,
        line: frame.others[0].0,
    };
    let blue = CurveSide {
        analysis: analyze_curve(&curve_in_frame(&frame, 1))?,
        line: frame.others[1].0,
    };

    // asymptote words
    let vert_order = sorted_word(
        &red.analysis.curve.vx,
        &blue.analysis.curve.vx,
        "vertical asymptote order",
    )?;
    let horiz_order = sorted_word(
        &red.analysis.curve.hy,
        &blue.analysis.curve.hy,
        "horizontal asymptote order",
    )?;

    let red_cc = combi_of(&red.analysis);
    let blue_cc = combi_of(&blue.analysis);

    // vertices: membership and ordering
    let n = ctx.vertex_count();
    let mut crossings = Vec::with_capacity(n);
    let mut per_red: [Vec<(usize, Iv)>; 4] = Default::default();
    let mut per_blue: [Vec<(usize, Iv)>; 4] = Default::default();
    for v in 0..n {
        let p3 = ctx.vertex_3d(v, prec)?;
        let pf = frame.to_frame(&p3);
        let (x, y) = (pf[0].clone(), pf[1].clone());
        let rb = red.analysis.branch_of_point(&x, &y)?;
        let bb = blue.analysis.branch_of_point(&x, &y)?;
        let sign = crossing_sign(&red.analysis, &blue.analysis, &x, &y)?;
        crossings.push(Crossing {
            red_branch: rb,
            blue_branch: bb,
            sign,
        });
        let (tr, _) = red.analysis.tr_of_xy(&x, &y);
        let (tb, _) = blue.analysis.tr_of_xy(&x, &y);
        per_red[rb].push((v, tr));
        per_blue[bb].push((v, tb));
    }
    let red_seq = order_along(per_red)?;
    let blue_seq = order_along(per_blue)?;

    let config = Configuration {
        vert_order,
        horiz_order,
        red: red_cc,
        blue: blue_cc,
        crossings,
        red_seq,
        blue_seq,
    };
    // structural validation: the planar map must close up consistently
    crate::config::build_dcel(&config)?;

    Ok(TracedConfig {
        pair,
        config,
        red_line: red.line,
        blue_line: blue.line,
        prec,
    })
}

fn combi_of(an: &CurveAnalysis) -> CurveCombi {
    CurveCombi {
        class: an.st.class,
        middle_upper: an.st.mid_pattern[0] == 1,
    }
}

fn sorted_word(
    red_pair: &(Iv, Iv),
    blue_pair: &(Iv, Iv),
    what: &'static str,
) -> TraceResult<[CurveLine; 4]> {
    let mut items: Vec<(Iv, CurveLine)> = vec![
        (
            red_pair.0.clone(),
            CurveLine {
                color: Color::Red,
                upper: false,
            },
        ),
        (
            red_pair.1.clone(),
            CurveLine {
                color: Color::Red,
                upper: true,
            },
        ),
        (
            blue_pair.0.clone(),
            CurveLine {
                color: Color::Blue,
                upper: false,
            },
        ),
        (
            blue_pair.1.clone(),
            CurveLine {
                color: Color::Blue,
                upper: true,
            },
        ),
    ];
    // insertion sort with certified comparisons
    for i in 1..4 {
        let mut j = i;
        while j > 0 {
            match items[j].0.lt(&items[j - 1].0) {
                Some(true) => {
                    items.swap(j, j - 1);
                    j -= 1;
                }
                Some(false) => break,
                None => {
                    // same-curve pairs are pre-sorted; overlapping intervals
                    // across curves need more precision
                    return Err(TraceError::PrecisionExhausted(what));
                }
            }
        }
    }
    Ok([items[0].1, items[1].1, items[2].1, items[3].1])
}

fn order_along(mut per: [Vec<(usize, Iv)>; 4]) -> TraceResult<[Vec<usize>; 4]> {
    let mut out: [Vec<usize>; 4] = Default::default();
    for (b, list) in per.iter_mut().enumerate() {
        for i in 1..list.len() {
            let mut j = i;
            while j > 0 {
                match list[j].1.lt(&list[j - 1].1) {
                    Some(true) => {
                        list.swap(j, j - 1);
                        j -= 1;
                    }
                    Some(false) => break,
                    None => return Err(TraceError::PrecisionExhausted("vertex order on branch")),
                }
            }
        }
        out[b] = list.iter().map(|(v, _)| *v).collect();
    }
    Ok(out)
}

/// Sign of a transversal crossing: the cross product of the two gradients,
/// each converted to a tangent oriented along the curve's increasing monotone
/// coordinate.
fn crossing_sign(
    red: &CurveAnalysis,
    blue: &CurveAnalysis,
    x: &Iv,
    y: &Iv,
) -> TraceResult<i8> {
    let grad = |an: &CurveAnalysis| -> (Iv, Iv) {
        // P = A(x) y^2 + B(x) y + C(x)
        let dpx = {
            // A'(x) y^2 + B'(x) y + C'(x) with quadratic-coefficient derivatives
            let da = deriv_eval(&an.curve.a, x);
            let db = deriv_eval(&an.curve.b, x);
            let dc = deriv_eval(&an.curve.c, x);
            da.mul(&y.square()).add(&db.mul(y)).add(&dc)
        };
        let dpy = {
            let a = an.curve.a.eval(x);
            let b = an.curve.b.eval(x);
            Iv::from_i64(2).mul(&a).mul(y).add(&b)
        };
        (dpx, dpy)
    };
    let (rx, ry) = grad(red);
    let (bx, by) = grad(blue);
    // tangent (-P_y, P_x); orientation along increasing monotone coordinate:
    // YMono wants positive y-component (P_x), XMono positive x-component (-P_y)
    let orient = |an: &CurveAnalysis, px: &Iv, py: &Iv| -> TraceResult<i32> {
        let comp = match an.st.class {
            MonoClass::YMono => px.clone(),
            MonoClass::XMono => py.neg(),
        };
        match comp.sign() {
            Some(s) if s != 0 => Ok(s),
            _ => Err(TraceError::PrecisionExhausted("tangent orientation")),
        }
    };
    let sr = orient(red, &rx, &ry)?;
    let sb = orient(blue, &bx, &by)?;
    let det = rx.mul(&by).sub(&ry.mul(&bx));
    let sd = match det.sign() {
        Some(s) if s != 0 => s,
        _ => return Err(TraceError::PrecisionExhausted("crossing transversality")),
    };
    Ok((sd * sr * sb) as i8)
}

fn deriv_eval(q: &crate::branch::QuadIv, x: &Iv) -> Iv {
    // d/dx (c0 + c1 x + c2 x^2) = c1 + 2 c2 x
    q.c[1].add(&Iv::from_i64(2).mul(&q.c[2]).mul(x))
}

/// Parallelism of the two curves on a bisector: both x-monotone or both
/// y-monotone.
pub fn parallel(a: &CurveAnalysis, b: &CurveAnalysis) -> bool {
    a.st.class == b.st.class
}

/// All six traced configurations.
pub fn trace_all(ctx: &TraceContext) -> TraceResult<[TracedConfig; 6]> {
    let mut out = Vec::with_capacity(6);
    for pair in ALL_PAIRS {
        out.push(trace_configuration(ctx, pair)?);
    }
    Ok(out.try_into().unwrap())
}

/// Branch correspondence of one trisector across its three host bisectors.
///
/// The trisector of lines {i, j, l} is a curve on the bisectors of the pairs
/// {i,j}, {i,l}, {j,l}. A sample 3D point on a branch in one host is located
/// in another host by frame mapping and branch membership.
#[derive(Clone, Debug)]
pub struct TrisectorHosts {
    /// The omitted line (trisectors are named by the line they exclude).
    pub excluded: usize,
    /// (pair, color in that trace) for the three hosts.
    pub hosts: [(Pair, Color); 3],
    /// branch_map[h][b] = branch id in host h corresponding to branch b in
    /// hosts[0].
    pub branch_map: [[usize; 4]; 3],
}

/// The three lines of the trisector that excludes `excluded`.
pub fn trisector_lines(excluded: usize) -> [usize; 3] {
    let mut v: Vec<usize> = (1..=4).filter(|&k| k != excluded).collect();
    v.sort();
    [v[0], v[1], v[2]]
}

/// Hosts of a trisector: the three pairs among its lines.
pub fn trisector_pairs(excluded: usize) -> [Pair; 3] {
    let [a, b, c] = trisector_lines(excluded);
    [(a, b), (a, c), (b, c)]
}

/// Compute branch correspondences for all four trisectors of a traced tuple.
pub fn match_branches(
    ctx: &TraceContext,
    traces: &[TracedConfig; 6],
) -> TraceResult<Vec<TrisectorHosts>> {
    let by_pair: BTreeMap<Pair, &TracedConfig> = traces.iter().map(|t| (t.pair, t)).collect();
    let mut out = Vec::new();
    for excluded in 1..=4 {
        let pairs = trisector_pairs(excluded);
        let third = |p: Pair| -> usize {
            let (a, b) = others(p);
            // the curve's line on pair p that is part of this trisector:
            // trisector lines are all lines except `excluded`
            if a == excluded {
                b
            } else if b == excluded {
                a
            } else {
                // both others are trisector members; the curve of this
                // trisector is the one whose third line is not `excluded`
                unreachable!("pair not hosting the trisector")
            }
        };
        let mut hosts: Vec<(Pair, Color)> = Vec::with_capacity(3);
        for p in pairs {
            let t = by_pair[&p];
            let l = third(p);
            let color = if t.red_line == l {
                Color::Red
            } else if t.blue_line == l {
                Color::Blue
            } else {
                return Err(TraceError::Structural("curve line mismatch".into()));
            };
            hosts.push((p, color));
        }

        let mut prec = 128u32;
        'retry: loop {
            let mut branch_map = [[usize::MAX; 4]; 3];
            branch_map[0] = [0, 1, 2, 3];
            // analysis of the anchor host curve
            let frames: Vec<FrameData> = pairs
                .iter()
                .map(|&p| compute_frame(&ctx.lines, p, prec))
                .collect::<TraceResult<_>>()?;
            let mut analyses = Vec::with_capacity(3);
            for (k, f) in frames.iter().enumerate() {
                let which = if f.others[0].0 == third(pairs[k]) { 0 } else { 1 };
                analyses.push(analyze_curve(&curve_in_frame(f, which))?);
            }
            for b in 0..4 {
                let sample = analyses[0].point_on_branch(b, prec)?;
                let z0 = frames[0].surface_z(&sample.0, &sample.1);
                let world = frames[0].from_frame(&[sample.0.clone(), sample.1.clone(), z0]);
                for h in 1..3 {
                    let local = frames[h].to_frame(&world);
                    match analyses[h].branch_of_point(&local[0], &local[1]) {
                        Ok(bb) => branch_map[h][b] = bb,
                        Err(TraceError::PrecisionExhausted(_)) if prec < PREC_CAP => {
                            prec *= 2;
                            continue 'retry;
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
            // validate: bijective per host, middle to middle
            for h in 1..3 {
                let mut seen = [false; 4];
                for b in 0..4 {
                    seen[branch_map[h][b]] = true;
                }
                if seen != [true; 4] {
                    return Err(TraceError::Structural(format!(
                        "branch correspondence not bijective for trisector {excluded}"
                    )));
                }
                if branch_map[h][BR_MIDDLE] != BR_MIDDLE {
                    return Err(TraceError::Structural(format!(
                        "middle branch not preserved across hosts of trisector {excluded}"
                    )));
                }
            }
            out.push(TrisectorHosts {
                excluded,
                hosts: [hosts[0], hosts[1], hosts[2]],
                branch_map,
            });
            break;
        }
    }
    Ok(out)
}

/// Check the cross-host branch facts: the middle branch is shared, and each
/// non-middle branch is the U branch on exactly one host.
pub fn validate_middle_u_structure(m: &TrisectorHosts) -> TraceResult<()> {
    let mut u_count = [0usize; 4];
    for h in 0..3 {
        for b in 0..4 {
            if m.branch_map[h][b] == BR_U {
                u_count[b] += 1;
            }
        }
    }
    if u_count[BR_MIDDLE] != 0 {
        return Err(TraceError::Structural(
            "middle branch became a U branch".into(),
        ));
    }
    let mut ones = 0;
    for (b, &c) in u_count.iter().enumerate() {
        if b == BR_MIDDLE {
            continue;
        }
        if c == 1 {
            ones += 1;
        }
    }
    if ones != 3 {
        return Err(TraceError::Structural(format!(
            "U-branch distribution {u_count:?} violates the one-host rule"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{enumerate_simple_configurations, simple_configuration};

    const TOPO_I: [i64; 9] = [-9, 2, -2, 1, -3, -1, 1, -1, -5];
    const TOPO_X: [i64; 9] = [1, -18, -5, -4, -16, 11, -18, -6, -3];

    #[test]
    fn topology_i_traces_zero_vertices_everywhere() {
        let lines = LineSet::from_i64(TOPO_I);
        let ctx = TraceContext::new(&lines).unwrap();
        assert_eq!(ctx.vertex_count(), 0);
        let traces = trace_all(&ctx).unwrap();
        let mut classes = Vec::new();
        for t in &traces {
            assert_eq!(t.config.vertex_count(), 0);
            let (nr, nb) = t.config.nvd_end_counts().unwrap();
            let mut pair = [nr, nb];
            pair.sort();
            classes.push(pair);
        }
        // three (2,2)-bisectors and three (2,6)-bisectors
        let n22 = classes.iter().filter(|c| **c == [2, 2]).count();
        let n26 = classes.iter().filter(|c| **c == [2, 6]).count();
        assert_eq!((n22, n26), (3, 3), "{classes:?}");
    }

    #[test]
    fn topology_x_traces_six_vertices_everywhere() {
        let lines = LineSet::from_i64(TOPO_X);
        let ctx = TraceContext::new(&lines).unwrap();
        assert_eq!(ctx.vertex_count(), 6);
        let traces = trace_all(&ctx).unwrap();
        for t in &traces {
            assert_eq!(t.config.vertex_count(), 6, "pair {:?}", t.pair);
        }
    }

    #[test]
    fn traced_simple_config_matches_tree_path_prediction() {
        // topology I has no twists anywhere: every traced configuration must
        // agree exactly with the combinatorial reconstruction from its words
        // and middle choices
        let lines = LineSet::from_i64(TOPO_I);
        let ctx = TraceContext::new(&lines).unwrap();
        for pair in ALL_PAIRS {
            let t = trace_configuration(&ctx, pair).unwrap();
            let c = &t.config;
            let rebuilt =
                simple_configuration(c.vert_order, c.horiz_order, c.red, c.blue).unwrap();
            assert_eq!(c, &rebuilt, "pair {pair:?}");
        }
    }

    #[test]
    fn traced_targets_appear_in_simple_enumeration() {
        let lines = LineSet::from_i64(TOPO_I);
        let ctx = TraceContext::new(&lines).unwrap();
        let all: std::collections::BTreeSet<String> = enumerate_simple_configurations()
            .iter()
            .map(|c| c.canonical_form())
            .collect();
        for pair in ALL_PAIRS {
            let t = trace_configuration(&ctx, pair).unwrap();
            assert!(
                all.contains(&t.config.canonical_form()),
                "pair {pair:?} missing: {}",
                t.config.encode()
            );
        }
    }

    #[test]
    fn branch_correspondence_and_u_structure() {
        for params in [TOPO_I, TOPO_X] {
            let lines = LineSet::from_i64(params);
            let ctx = TraceContext::new(&lines).unwrap();
            let traces = trace_all(&ctx).unwrap();
            let matches = match_branches(&ctx, &traces).unwrap();
            assert_eq!(matches.len(), 4);
            for m in &matches {
                validate_middle_u_structure(m).unwrap();
            }
        }
    }

    #[test]
    fn crossing_sign_alternates_on_shared_pairs() {
        let lines = LineSet::from_i64(TOPO_X);
        let ctx = TraceContext::new(&lines).unwrap();
        let traces = trace_all(&ctx).unwrap();
        for t in &traces {
            for b in 0..4 {
                // crossings with the same partner branch must alternate signs
                for w in t.config.red_seq[b].windows(2) {
                    let c0 = &t.config.crossings[w[0]];
                    let c1 = &t.config.crossings[w[1]];
                    if c0.blue_branch == c1.blue_branch {
                        // only forced when also consecutive along the blue branch
                        let bb = &t.config.blue_seq[c0.blue_branch];
                        let i0 = bb.iter().position(|x| *x == w[0]).unwrap();
                        let i1 = bb.iter().position(|x| *x == w[1]).unwrap();
                        if i0.abs_diff(i1) == 1 {
                            assert_ne!(c0.sign, c1.sign);
                        }
                    }
                }
            }
        }
    }
}
