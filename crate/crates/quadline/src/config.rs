//! Combinatorial configurations: the overlay of two trisector-like curves on
//! a projected bisector, with NVD/FVD/VD2 face labels, twists, and canonical
//! forms under the symmetry group (quarter rotations, mirror, color swap).

use crate::branch::{CurveFace, End, MonoClass, BR_CORNER_HIGH, BR_CORNER_LOW, BR_MIDDLE};
use crate::frame::{TraceError, TraceResult};
use crate::trisector::Axis;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Curve color within a configuration. Red is the first curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// One asymptote line of the overlay: which curve and which of its two
/// parallel asymptotes on the given axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveLine {
    pub color: Color,
    pub upper: bool,
}

/// Purely combinatorial curve data: everything follows from the monotone
/// class and the middle-branch choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CurveCombi {
    pub class: MonoClass,
    /// Middle branch hugs the upper (true) or lower of its two asymptotes
    /// perpendicular to the monotone direction.
    pub middle_upper: bool,
}

impl CurveCombi {
    pub fn middle_axis(&self) -> Axis {
        match self.class {
            MonoClass::YMono => Axis::Vertical,
            MonoClass::XMono => Axis::Horizontal,
        }
    }

    /// The four middle choices of the enumeration.
    pub fn all() -> [CurveCombi; 4] {
        [
            CurveCombi {
                class: MonoClass::YMono,
                middle_upper: false,
            },
            CurveCombi {
                class: MonoClass::YMono,
                middle_upper: true,
            },
            CurveCombi {
                class: MonoClass::XMono,
                middle_upper: false,
            },
            CurveCombi {
                class: MonoClass::XMono,
                middle_upper: true,
            },
        ]
    }

    /// Branch ends, ordered along increasing monotone coordinate, for each of
    /// the four branches (corner-low, middle, U, corner-high). Matches the
    /// real-geometry branch separation.
    pub fn ends(&self) -> [[End; 2]; 4] {
        let (v_axis, h_axis) = match self.class {
            MonoClass::YMono => (Axis::Vertical, Axis::Horizontal),
            MonoClass::XMono => (Axis::Horizontal, Axis::Vertical),
        };
        let m = if self.middle_upper { 1usize } else { 0 };
        // blow-up sign at both cuts: positive when the middle hugs the lower
        // across-line
        let s = if m == 0 { 1i32 } else { -1 };
        let v_end = |idx: usize, up: bool| End {
            axis: v_axis,
            upper: idx == 1,
            positive: up,
        };
        let h_end = |k: usize, sgn: i32| End {
            axis: h_axis,
            upper: k == 1,
            positive: sgn > 0,
        };
        [
            [v_end(1 - m, false), h_end(0, s)],
            [v_end(m, false), v_end(m, true)],
            [h_end(0, -s), h_end(1, -s)],
            [h_end(1, s), v_end(1 - m, true)],
        ]
    }
}

/// A crossing of a red and a blue branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub red_branch: usize,
    pub blue_branch: usize,
    /// Orientation: +1 when the blue tangent (along increasing monotone
    /// coordinate) points to the left of the red tangent.
    pub sign: i8,
}

/// Labels of overlay faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FaceLabel {
    Nvd,
    Fvd,
    Vd2,
}

/// The combinatorial overlay of two trisector-like curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    /// The four vertical asymptote lines in increasing order.
    pub vert_order: [CurveLine; 4],
    /// The four horizontal asymptote lines in increasing order.
    pub horiz_order: [CurveLine; 4],
    pub red: CurveCombi,
    pub blue: CurveCombi,
    pub crossings: Vec<Crossing>,
    /// Crossing ids along each red branch, in traversal order.
    pub red_seq: [Vec<usize>; 4],
    pub blue_seq: [Vec<usize>; 4],
}

/// Circle clusters in CCW order: right, top, left, bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cluster {
    Right,
    Top,
    Left,
    Bottom,
}

impl Configuration {
    pub fn vertex_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn curve(&self, c: Color) -> &CurveCombi {
        match c {
            Color::Red => &self.red,
            Color::Blue => &self.blue,
        }
    }

    pub fn seq(&self, c: Color) -> &[Vec<usize>; 4] {
        match c {
            Color::Red => &self.red_seq,
            Color::Blue => &self.blue_seq,
        }
    }

    /// Word of one axis: the four asymptote lines in increasing value order.
    pub fn word(&self, axis: Axis) -> &[CurveLine; 4] {
        match axis {
            Axis::Vertical => &self.vert_order,
            Axis::Horizontal => &self.horiz_order,
        }
    }

    /// Rank (0..4) of a curve's asymptote line within its axis word.
    pub fn line_rank(&self, axis: Axis, color: Color, upper: bool) -> usize {
        self.word(axis)
            .iter()
            .position(|l| l.color == color && l.upper == upper)
            .expect("line present in word")
    }

    /// Circle position (0..16, CCW starting just above the positive x axis)
    /// of a branch end of the given curve.
    pub fn end_position(&self, color: Color, end: &End) -> usize {
        let rank = self.line_rank(end.axis, color, end.upper);
        match (end.axis, end.positive) {
            (Axis::Horizontal, true) => rank,            // right cluster, increasing y
            (Axis::Vertical, true) => 4 + (3 - rank),    // top, decreasing x
            (Axis::Horizontal, false) => 8 + (3 - rank), // left, decreasing y
            (Axis::Vertical, false) => 12 + rank,        // bottom, increasing x
        }
    }

    /// Cluster and transverse rank of a circle position.
    pub fn position_meta(pos: usize) -> (Cluster, usize) {
        match pos {
            0..=3 => (Cluster::Right, pos),
            4..=7 => (Cluster::Top, 3 - (pos - 4)),
            8..=11 => (Cluster::Left, 3 - (pos - 8)),
            12..=15 => (Cluster::Bottom, pos - 12),
            _ => panic!("position out of range"),
        }
    }

    /// The 16 endpoint slots in circle order: (position, color, branch, end index).
    pub fn endpoint_slots(&self) -> Vec<(usize, Color, usize, usize)> {
        let mut out = Vec::with_capacity(16);
        for color in [Color::Red, Color::Blue] {
            let ends = self.curve(color).ends();
            for (b, pair) in ends.iter().enumerate() {
                for (ei, end) in pair.iter().enumerate() {
                    out.push((self.end_position(color, end), color, b, ei));
                }
            }
        }
        out.sort();
        debug_assert!(out.windows(2).all(|w| w[0].0 != w[1].0));
        out
    }

    /// The face of `color`'s own curve containing the angular position `pos`
    /// (which must not be one of that curve's own endpoint positions).
    pub fn arc_face(&self, color: Color, pos: usize) -> CurveFace {
        let cc = self.curve(color);
        let (cluster, rank) = Self::position_meta(pos);
        // number of this curve's asymptote values strictly below the
        // position's transverse value
        let below = |axis: Axis| -> usize {
            self.word(axis)[..rank]
                .iter()
                .filter(|l| l.color == color)
                .count()
        };
        let (zone, j) = match (cc.class, cluster) {
            (MonoClass::YMono, Cluster::Top) => (2, below(Axis::Vertical)),
            (MonoClass::YMono, Cluster::Bottom) => (0, below(Axis::Vertical)),
            (MonoClass::YMono, Cluster::Right) => (below(Axis::Horizontal), 2),
            (MonoClass::YMono, Cluster::Left) => (below(Axis::Horizontal), 0),
            (MonoClass::XMono, Cluster::Right) => (2, below(Axis::Horizontal)),
            (MonoClass::XMono, Cluster::Left) => (0, below(Axis::Horizontal)),
            (MonoClass::XMono, Cluster::Top) => (below(Axis::Vertical), 2),
            (MonoClass::XMono, Cluster::Bottom) => (below(Axis::Vertical), 0),
        };
        face_of_piece_combi(cc, zone, j)
    }
}

/// Face of the open piece (zone, j) for a combinatorial curve; j counts the
/// curve's own roots below the point (0, 1, 2).
pub fn face_of_piece_combi(cc: &CurveCombi, zone: usize, j: usize) -> CurveFace {
    let m0 = if cc.middle_upper { 1 } else { 0 };
    let m = [m0, 1 - m0, m0][zone];
    match zone {
        0 | 2 => {
            if j == 1 {
                CurveFace::Mid
            } else {
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

/// The branch separating two tree-adjacent curve faces, if any.
fn branch_between(a: CurveFace, b: CurveFace) -> Option<usize> {
    (0..4).find(|&br| {
        let (x, y) = CurveFace::sides_of_branch(br);
        (x == a && y == b) || (x == b && y == a)
    })
}

/// Path between two faces in the curve-face tree, as a branch sequence.
pub fn face_tree_path(from: CurveFace, to: CurveFace) -> Vec<usize> {
    if from == to {
        return vec![];
    }
    let nodes = CurveFace::ALL;
    let idx = |f: CurveFace| nodes.iter().position(|x| *x == f).unwrap();
    let mut prev: [Option<(usize, usize)>; 5] = [None; 5];
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(idx(from));
    let mut seen = [false; 5];
    seen[idx(from)] = true;
    while let Some(u) = queue.pop_front() {
        for v in 0..5 {
            if seen[v] {
                continue;
            }
            if let Some(br) = branch_between(nodes[u], nodes[v]) {
                seen[v] = true;
                prev[v] = Some((u, br));
                queue.push_back(v);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = idx(to);
    while cur != idx(from) {
        let (p, br) = prev[cur].unwrap();
        path.push(br);
        cur = p;
    }
    path.reverse();
    path
}

/// Build the unique twist-free configuration with the given asymptote words
/// and middle choices. Crossings follow from the face trees: a branch of one
/// curve crosses exactly the branches on the tree path between the faces of
/// the other curve containing its two endpoints.
pub fn simple_configuration(
    vert_order: [CurveLine; 4],
    horiz_order: [CurveLine; 4],
    red: CurveCombi,
    blue: CurveCombi,
) -> TraceResult<Configuration> {
    let mut cfg = Configuration {
        vert_order,
        horiz_order,
        red,
        blue,
        crossings: vec![],
        red_seq: Default::default(),
        blue_seq: Default::default(),
    };
    let red_ends = red.ends();
    let blue_ends = blue.ends();
    let mut red_paths: [Vec<usize>; 4] = Default::default();
    for b in 0..4 {
        let p0 = cfg.end_position(Color::Red, &red_ends[b][0]);
        let p1 = cfg.end_position(Color::Red, &red_ends[b][1]);
        let f0 = cfg.arc_face(Color::Blue, p0);
        let f1 = cfg.arc_face(Color::Blue, p1);
        red_paths[b] = face_tree_path(f0, f1);
    }
    let mut blue_paths: [Vec<usize>; 4] = Default::default();
    for b in 0..4 {
        let p0 = cfg.end_position(Color::Blue, &blue_ends[b][0]);
        let p1 = cfg.end_position(Color::Blue, &blue_ends[b][1]);
        let f0 = cfg.arc_face(Color::Red, p0);
        let f1 = cfg.arc_face(Color::Red, p1);
        blue_paths[b] = face_tree_path(f0, f1);
    }
    for r in 0..4 {
        for b in 0..4 {
            let x = red_paths[r].contains(&b);
            let y = blue_paths[b].contains(&r);
            if x != y {
                return Err(TraceError::Structural(format!(
                    "tree-path asymmetry on branch pair ({r},{b})"
                )));
            }
        }
    }
    let mut cross_id: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for r in 0..4 {
        for &b in &red_paths[r] {
            let p0r = cfg.end_position(Color::Red, &red_ends[r][0]);
            let p1r = cfg.end_position(Color::Red, &red_ends[r][1]);
            let p0b = cfg.end_position(Color::Blue, &blue_ends[b][0]);
            let p1b = cfg.end_position(Color::Blue, &blue_ends[b][1]);
            let sign = single_crossing_sign(p0r, p1r, p0b, p1b)?;
            let id = cfg.crossings.len();
            cfg.crossings.push(Crossing {
                red_branch: r,
                blue_branch: b,
                sign,
            });
            cross_id.insert((r, b), id);
        }
    }
    for r in 0..4 {
        cfg.red_seq[r] = red_paths[r].iter().map(|&b| cross_id[&(r, b)]).collect();
    }
    for b in 0..4 {
        cfg.blue_seq[b] = blue_paths[b].iter().map(|&r| cross_id[&(r, b)]).collect();
    }
    Ok(cfg)
}

/// Sign of a single transversal crossing of two boundary-to-boundary arcs
/// from their circular endpoint order: +1 when, walking CCW from the red
/// start, the blue start appears before the red end.
pub fn single_crossing_sign(p0r: usize, p1r: usize, p0b: usize, p1b: usize) -> TraceResult<i8> {
    let rel = |p: usize| (p + 16 - p0r) % 16;
    let (er, sb, eb) = (rel(p1r), rel(p0b), rel(p1b));
    let b0_inside = sb < er;
    let b1_inside = eb < er;
    if b0_inside == b1_inside {
        return Err(TraceError::Structural(
            "crossing endpoints do not interleave".into(),
        ));
    }
    Ok(if b0_inside { 1 } else { -1 })
}

// ---------------------------------------------------------------------------
// Planar map (DCEL) of a configuration
// ---------------------------------------------------------------------------

/// Node of the planar map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Node {
    /// Circle endpoint at the given position.
    Boundary(usize),
    /// Crossing id.
    Cross(usize),
}

/// Edge of the planar map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    /// Segment `seg` (0-based) of branch `branch` of curve `color`.
    Segment {
        color: Color,
        branch: usize,
        seg: usize,
    },
    /// Boundary circle arc from position p to position (p+1) mod 16.
    Arc(usize),
}

#[derive(Clone, Debug)]
pub struct Dcel {
    pub edges: Vec<(Node, Node, EdgeKind)>,
    pub faces: Vec<FaceInfo>,
    /// face id per dart; dart 2e goes from edges[e].0 to edges[e].1.
    pub face_of_dart: Vec<usize>,
    pub outer_face: usize,
}

#[derive(Clone, Debug)]
pub struct FaceInfo {
    pub label: FaceLabel,
    pub red_face: CurveFace,
    pub blue_face: CurveFace,
    pub darts: Vec<usize>,
    /// True when the face does not touch the boundary circle.
    pub bounded: bool,
    /// Number of branch-segment darts on the boundary (arcs excluded).
    pub seg_edges: usize,
}

impl Dcel {
    pub fn dart_nodes(&self, d: usize) -> (Node, Node) {
        let (u, v, _) = &self.edges[d / 2];
        if d % 2 == 0 {
            (*u, *v)
        } else {
            (*v, *u)
        }
    }
}

/// Build the planar map of a configuration and label its faces. Validates
/// Euler's formula and label consistency.
pub fn build_dcel(cfg: &Configuration) -> TraceResult<Dcel> {
    let slots = cfg.endpoint_slots();
    if slots.len() != 16 || slots.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(TraceError::Structural("endpoint slots not distinct".into()));
    }

    let mut edges: Vec<(Node, Node, EdgeKind)> = Vec::new();
    for color in [Color::Red, Color::Blue] {
        let ends = cfg.curve(color).ends();
        for b in 0..4 {
            let seqv = &cfg.seq(color)[b];
            let start = Node::Boundary(cfg.end_position(color, &ends[b][0]));
            let stop = Node::Boundary(cfg.end_position(color, &ends[b][1]));
            let mut prev = start;
            for (k, &cid) in seqv.iter().enumerate() {
                edges.push((
                    prev,
                    Node::Cross(cid),
                    EdgeKind::Segment {
                        color,
                        branch: b,
                        seg: k,
                    },
                ));
                prev = Node::Cross(cid);
            }
            edges.push((
                prev,
                stop,
                EdgeKind::Segment {
                    color,
                    branch: b,
                    seg: seqv.len(),
                },
            ));
        }
    }
    for p in 0..16 {
        edges.push((
            Node::Boundary(p),
            Node::Boundary((p + 1) % 16),
            EdgeKind::Arc(p),
        ));
    }

    // rotation system: CCW dart order around each node
    let n_cross = cfg.crossings.len();
    let node_key = |n: Node| -> (u8, usize) {
        match n {
            Node::Boundary(p) => (0, p),
            Node::Cross(c) => (1, c),
        }
    };
    let mut leaving: BTreeMap<(u8, usize), Vec<usize>> = BTreeMap::new();
    for (e, (u, v, _)) in edges.iter().enumerate() {
        leaving.entry(node_key(*u)).or_default().push(2 * e);
        leaving.entry(node_key(*v)).or_default().push(2 * e + 1);
    }
    let mut cross_darts: Vec<[Option<usize>; 4]> = vec![[None; 4]; n_cross];
    for (e, (u, v, kind)) in edges.iter().enumerate() {
        if let EdgeKind::Segment { color, .. } = kind {
            if let Node::Cross(c) = v {
                let slot = match color {
                    Color::Red => 0,
                    Color::Blue => 2,
                };
                cross_darts[*c][slot] = Some(2 * e + 1); // dart leaving c backwards
            }
            if let Node::Cross(c) = u {
                let slot = match color {
                    Color::Red => 1,
                    Color::Blue => 3,
                };
                cross_darts[*c][slot] = Some(2 * e); // dart leaving c forwards
            }
        }
    }
    let mut rot: BTreeMap<(u8, usize), Vec<usize>> = BTreeMap::new();
    for p in 0..16usize {
        let key = node_key(Node::Boundary(p));
        let ds = leaving.get(&key).cloned().unwrap_or_default();
        if ds.len() != 3 {
            return Err(TraceError::Structural(format!(
                "boundary node {p} has degree {}",
                ds.len()
            )));
        }
        let mut next_arc = None;
        let mut prev_arc = None;
        let mut seg = None;
        for d in ds {
            match &edges[d / 2].2 {
                EdgeKind::Arc(a) => {
                    if *a == p {
                        next_arc = Some(d);
                    } else {
                        prev_arc = Some(d);
                    }
                }
                EdgeKind::Segment { .. } => seg = Some(d),
            }
        }
        let (na, pa, sg) = (
            next_arc.ok_or_else(|| TraceError::Structural("missing next arc".into()))?,
            prev_arc.ok_or_else(|| TraceError::Structural("missing prev arc".into()))?,
            seg.ok_or_else(|| TraceError::Structural("missing endpoint segment".into()))?,
        );
        // interior is to the left of CCW circle arcs; around a boundary node
        // CCW order is: arc to the next position, inward segment, arc back
        rot.insert(key, vec![na, sg, pa]);
    }
    for c in 0..n_cross {
        let [rin, rout, bin, bout] = cross_darts[c];
        let (rin, rout, bin, bout) = match (rin, rout, bin, bout) {
            (Some(a), Some(b), Some(x), Some(y)) => (a, b, x, y),
            _ => {
                return Err(TraceError::Structural(format!(
                    "crossing {c} missing incident darts"
                )))
            }
        };
        let order = if cfg.crossings[c].sign > 0 {
            vec![rout, bout, rin, bin]
        } else {
            vec![rout, bin, rin, bout]
        };
        rot.insert(node_key(Node::Cross(c)), order);
    }

    // face tracing: next dart of (u -> v) is the CW successor of the twin at v
    let twin = |d: usize| d ^ 1;
    let dart_target = |d: usize| -> Node {
        let (u, v, _) = &edges[d / 2];
        if d % 2 == 0 {
            *v
        } else {
            *u
        }
    };
    let n_darts = edges.len() * 2;
    let mut face_of_dart = vec![usize::MAX; n_darts];
    let mut faces_darts: Vec<Vec<usize>> = Vec::new();
    for d0 in 0..n_darts {
        if face_of_dart[d0] != usize::MAX {
            continue;
        }
        let fid = faces_darts.len();
        let mut cyc = Vec::new();
        let mut d = d0;
        loop {
            face_of_dart[d] = fid;
            cyc.push(d);
            let v = dart_target(d);
            let ds = &rot[&node_key(v)];
            let t = twin(d);
            let pos = ds
                .iter()
                .position(|&x| x == t)
                .ok_or_else(|| TraceError::Structural("twin not in rotation".into()))?;
            d = ds[(pos + ds.len() - 1) % ds.len()];
            if d == d0 {
                break;
            }
            if cyc.len() > n_darts {
                return Err(TraceError::Structural("face walk does not close".into()));
            }
        }
        faces_darts.push(cyc);
    }

    let n_nodes = 16 + n_cross;
    let n_edges = edges.len();
    let n_faces = faces_darts.len();
    if n_nodes as i64 - n_edges as i64 + n_faces as i64 != 2 {
        return Err(TraceError::Structural(format!(
            "Euler check failed: V={n_nodes} E={n_edges} F={n_faces}"
        )));
    }

    // the outer face is bounded by the reversed arc darts
    let outer_dart = edges
        .iter()
        .enumerate()
        .find_map(|(e, (_, _, k))| matches!(k, EdgeKind::Arc(_)).then_some(2 * e + 1))
        .unwrap();
    let outer_face = face_of_dart[outer_dart];

    let mut infos = Vec::with_capacity(n_faces);
    for (fid, darts) in faces_darts.iter().enumerate() {
        if fid == outer_face {
            infos.push(FaceInfo {
                label: FaceLabel::Vd2,
                red_face: CurveFace::Mid,
                blue_face: CurveFace::Mid,
                darts: darts.clone(),
                bounded: false,
                seg_edges: 0,
            });
            continue;
        }
        let mut red_face: Option<CurveFace> = None;
        let mut blue_face: Option<CurveFace> = None;
        let mut bounded = true;
        let mut seg_edges = 0;
        for &d in darts {
            let (_, _, kind) = &edges[d / 2];
            match kind {
                EdgeKind::Arc(p) => {
                    bounded = false;
                    set_or_check(&mut red_face, arc_gap_face(cfg, Color::Red, *p), "red/arc")?;
                    set_or_check(&mut blue_face, arc_gap_face(cfg, Color::Blue, *p), "blue/arc")?;
                }
                EdgeKind::Segment { color, branch, .. } => {
                    seg_edges += 1;
                    let forward = d % 2 == 0;
                    let cc = cfg.curve(*color);
                    let (below, above) = faces_beside_combi(cc, *branch);
                    // branch oriented along increasing monotone coordinate:
                    // walking +y has smaller x on the left; walking +x has
                    // larger y on the left
                    let left_face = match cc.class {
                        MonoClass::YMono => below,
                        MonoClass::XMono => above,
                    };
                    let right_face = if left_face == below { above } else { below };
                    let f = if forward { left_face } else { right_face };
                    match color {
                        Color::Red => set_or_check(&mut red_face, f, "red/segment")?,
                        Color::Blue => set_or_check(&mut blue_face, f, "blue/segment")?,
                    }
                }
            }
        }
        let (red_face, blue_face) = match (red_face, blue_face) {
            (Some(r), Some(b)) => (r, b),
            _ => {
                return Err(TraceError::Structural(
                    "face with undetermined curve side".into(),
                ))
            }
        };
        let label = match (red_face.is_nvd(), blue_face.is_nvd()) {
            (true, true) => FaceLabel::Nvd,
            (false, false) => FaceLabel::Fvd,
            _ => FaceLabel::Vd2,
        };
        infos.push(FaceInfo {
            label,
            red_face,
            blue_face,
            darts: darts.clone(),
            bounded,
            seg_edges,
        });
    }

    Ok(Dcel {
        edges,
        faces: infos,
        face_of_dart,
        outer_face,
    })
}

fn set_or_check(slot: &mut Option<CurveFace>, v: CurveFace, what: &str) -> TraceResult<()> {
    match slot {
        None => {
            *slot = Some(v);
            Ok(())
        }
        Some(cur) if *cur == v => Ok(()),
        Some(cur) => Err(TraceError::Structural(format!(
            "{what}: inconsistent curve face {cur:?} vs {v:?}"
        ))),
    }
}

/// Face of `color`'s curve over the open boundary gap between circle
/// positions p and p+1.
fn arc_gap_face(cfg: &Configuration, color: Color, p: usize) -> CurveFace {
    let cc = cfg.curve(color);
    let q = (p + 1) % 16;
    let (cl_p, rank_p) = Configuration::position_meta(p);
    let (cl_q, _) = Configuration::position_meta(q);
    // lines of this curve strictly below a transverse point half a step past
    // rank_p in the cluster sweep direction
    let below_half = |axis: Axis| -> usize {
        let word = cfg.word(axis);
        let increasing = matches!(cl_p, Cluster::Right | Cluster::Bottom);
        let hi_rank = if increasing { rank_p + 1 } else { rank_p };
        word[..hi_rank].iter().filter(|l| l.color == color).count()
    };
    if cl_p == cl_q {
        let (zone, j) = match (cc.class, cl_p) {
            (MonoClass::YMono, Cluster::Top) => (2, below_half(Axis::Vertical)),
            (MonoClass::YMono, Cluster::Bottom) => (0, below_half(Axis::Vertical)),
            (MonoClass::YMono, Cluster::Right) => (below_half(Axis::Horizontal), 2),
            (MonoClass::YMono, Cluster::Left) => (below_half(Axis::Horizontal), 0),
            (MonoClass::XMono, Cluster::Right) => (2, below_half(Axis::Horizontal)),
            (MonoClass::XMono, Cluster::Left) => (0, below_half(Axis::Horizontal)),
            (MonoClass::XMono, Cluster::Top) => (below_half(Axis::Vertical), 2),
            (MonoClass::XMono, Cluster::Bottom) => (below_half(Axis::Vertical), 0),
        };
        face_of_piece_combi(cc, zone, j)
    } else {
        // corner gaps: both coordinates infinite
        let (zone, j) = match (cc.class, cl_p) {
            (MonoClass::YMono, Cluster::Right) => (2, 2), // x,y -> +inf
            (MonoClass::XMono, Cluster::Right) => (2, 2),
            (MonoClass::YMono, Cluster::Top) => (2, 0), // x -> -inf, y -> +inf
            (MonoClass::XMono, Cluster::Top) => (0, 2),
            (MonoClass::YMono, Cluster::Left) => (0, 0), // both -inf
            (MonoClass::XMono, Cluster::Left) => (0, 0),
            (MonoClass::YMono, Cluster::Bottom) => (0, 2), // x -> +inf, y -> -inf
            (MonoClass::XMono, Cluster::Bottom) => (2, 0),
        };
        face_of_piece_combi(cc, zone, j)
    }
}

/// The two curve faces beside a branch, as (smaller root coordinate side,
/// larger side).
pub fn faces_beside_combi(cc: &CurveCombi, branch: usize) -> (CurveFace, CurveFace) {
    let m0 = if cc.middle_upper { 1usize } else { 0 };
    let (zone, root) = match branch {
        BR_CORNER_LOW => (0, 1 - m0),
        BR_MIDDLE => (0, m0),
        crate::branch::BR_U => (1, m0),
        BR_CORNER_HIGH => (2, 1 - m0),
        _ => panic!("branch"),
    };
    let below = face_of_piece_combi(cc, zone, if root == 0 { 0 } else { 1 });
    let above = face_of_piece_combi(cc, zone, if root == 0 { 1 } else { 2 });
    (below, above)
}

// ---------------------------------------------------------------------------
// Twists
// ---------------------------------------------------------------------------

/// A twist: two crossings consecutive on both of their branches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    pub crossings: (usize, usize),
    pub red_branch: usize,
    pub blue_branch: usize,
    /// Full when certified by the bounded two-edge face criterion (the bigon
    /// is labeled NVD or FVD); otherwise reported as partial.
    pub full: bool,
    pub bigon_label: FaceLabel,
}

/// All twists of a configuration, classified by the two-edge bounded face
/// criterion.
pub fn detect_twists(cfg: &Configuration) -> TraceResult<Vec<Twist>> {
    let dcel = build_dcel(cfg)?;
    detect_twists_dcel(cfg, &dcel)
}

pub fn detect_twists_dcel(_cfg: &Configuration, dcel: &Dcel) -> TraceResult<Vec<Twist>> {
    let mut out = Vec::new();
    for f in &dcel.faces {
        if !f.bounded || f.seg_edges != 2 || f.darts.len() != 2 {
            continue;
        }
        let mut cids = Vec::new();
        let mut rb = (usize::MAX, usize::MAX);
        for &d in &f.darts {
            let (u, v, kind) = &dcel.edges[d / 2];
            if let (Node::Cross(a), Node::Cross(b)) = (u, v) {
                cids.push(*a.min(b));
                cids.push(*a.max(b));
            }
            if let EdgeKind::Segment { color, branch, .. } = kind {
                match color {
                    Color::Red => rb.0 = *branch,
                    Color::Blue => rb.1 = *branch,
                }
            }
        }
        cids.sort();
        cids.dedup();
        if cids.len() != 2 {
            return Err(TraceError::Structural("bigon with odd vertices".into()));
        }
        out.push(Twist {
            crossings: (cids[0], cids[1]),
            red_branch: rb.0,
            blue_branch: rb.1,
            full: f.label != FaceLabel::Vd2,
            bigon_label: f.label,
        });
    }
    out.sort_by_key(|t| t.crossings);
    Ok(out)
}

/// An edge handle: segment `seg` of `branch` of `color`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeRef {
    pub color: Color,
    pub branch: usize,
    pub seg: usize,
}

/// Insert a twist across a face bounded by both edges: the two edge interiors
/// gain two new consecutive crossings. `require_vd2` enforces the
/// search-phase restriction to faces labeled VD2.
pub fn insert_twist(
    cfg: &Configuration,
    e1: EdgeRef,
    e2: EdgeRef,
    require_vd2: bool,
) -> TraceResult<Configuration> {
    if e1.color == e2.color {
        return Err(TraceError::Degenerate(
            "same-color branches never cross".into(),
        ));
    }
    if cfg.vertex_count() + 2 > 8 {
        return Err(TraceError::Degenerate("vertex budget exceeded".into()));
    }
    let (red_edge, blue_edge) = if e1.color == Color::Red {
        (e1, e2)
    } else {
        (e2, e1)
    };
    let dcel = build_dcel(cfg)?;
    let mut shared: Option<(usize, bool, bool)> = None;
    for (fid, f) in dcel.faces.iter().enumerate() {
        if fid == dcel.outer_face {
            continue;
        }
        let mut dir_r = None;
        let mut dir_b = None;
        for &d in &f.darts {
            if let EdgeKind::Segment { color, branch, seg } = &dcel.edges[d / 2].2 {
                let er = EdgeRef {
                    color: *color,
                    branch: *branch,
                    seg: *seg,
                };
                if er == red_edge {
                    dir_r = Some(d % 2 == 0);
                }
                if er == blue_edge {
                    dir_b = Some(d % 2 == 0);
                }
            }
        }
        if let (Some(a), Some(b)) = (dir_r, dir_b) {
            if f.seg_edges == 2 && f.bounded {
                return Err(TraceError::Degenerate(
                    "twisting a bigon would nest full twists".into(),
                ));
            }
            if require_vd2 && f.label != FaceLabel::Vd2 {
                return Err(TraceError::Degenerate(
                    "search-phase twist on a non-VD2 face".into(),
                ));
            }
            shared = Some((fid, a, b));
            break;
        }
    }
    let (_fid, red_forward, blue_forward) = shared.ok_or_else(|| {
        TraceError::Degenerate("edges do not bound a common face".into())
    })?;

    // With the shared face to the left of its CCW boundary walk, pulling the
    // two edge interiors together creates two crossings; along the walk
    // direction of the red edge they appear in order (first, second) with
    // walk-frame signs (+1, -1), and along the blue edge's walk direction in
    // the reversed order.
    let mut out = cfg.clone();
    let id_first = out.crossings.len();
    let id_second = id_first + 1;
    let flip = |fwd: bool, s: i8| if fwd { s } else { -s };
    let s_first = flip(red_forward, flip(blue_forward, 1));
    out.crossings.push(Crossing {
        red_branch: red_edge.branch,
        blue_branch: blue_edge.branch,
        sign: s_first,
    });
    out.crossings.push(Crossing {
        red_branch: red_edge.branch,
        blue_branch: blue_edge.branch,
        sign: -s_first,
    });
    let red_insert = if red_forward {
        [id_first, id_second]
    } else {
        [id_second, id_first]
    };
    let blue_insert = if blue_forward {
        [id_second, id_first]
    } else {
        [id_first, id_second]
    };
    out.red_seq[red_edge.branch].splice(red_edge.seg..red_edge.seg, red_insert);
    out.blue_seq[blue_edge.branch].splice(blue_edge.seg..blue_edge.seg, blue_insert);
    build_dcel(&out)?;
    Ok(out)
}

/// Remove a full twist: delete its two crossings and merge the split edges.
pub fn remove_full_twist(cfg: &Configuration, t: &Twist) -> TraceResult<Configuration> {
    if !t.full {
        return Err(TraceError::Degenerate(
            "refusing to remove a twist not certified full".into(),
        ));
    }
    Ok(remove_crossing_pair(cfg, t.crossings))
}

/// Remove a pair of crossings (consecutive on both branches).
pub fn remove_crossing_pair(cfg: &Configuration, pair: (usize, usize)) -> Configuration {
    let mut out = cfg.clone();
    let kill = [pair.0, pair.1];
    let remap = |id: usize| -> Option<usize> {
        if kill.contains(&id) {
            None
        } else {
            Some(id - kill.iter().filter(|&&k| k < id).count())
        }
    };
    out.crossings = cfg
        .crossings
        .iter()
        .enumerate()
        .filter(|(i, _)| !kill.contains(i))
        .map(|(_, c)| *c)
        .collect();
    for s in out.red_seq.iter_mut().chain(out.blue_seq.iter_mut()) {
        *s = s.iter().filter_map(|&id| remap(id)).collect();
    }
    out
}

// ---------------------------------------------------------------------------
// Symmetry group and canonical form
// ---------------------------------------------------------------------------

fn map_end_r90(e: &End) -> End {
    // rotate the plane by 90 degrees CCW: (x, y) -> (-y, x)
    match e.axis {
        // vertical line x=v -> horizontal line y'=v; up <-> left
        Axis::Vertical => End {
            axis: Axis::Horizontal,
            upper: e.upper,
            positive: !e.positive,
        },
        // horizontal line y=h -> vertical line x'=-h (order flips); right -> up
        Axis::Horizontal => End {
            axis: Axis::Vertical,
            upper: !e.upper,
            positive: e.positive,
        },
    }
}

impl Configuration {
    /// Apply a symmetry: `rot` quarter turns CCW, then optional mirror
    /// (x -> -x), then optional color swap.
    pub fn image(&self, rot: u8, mirror: bool, swap: bool) -> Configuration {
        let mut cur = self.clone();
        for _ in 0..rot {
            cur = cur.rot90();
        }
        if mirror {
            cur = cur.mirror_x();
        }
        if swap {
            cur = cur.color_swap();
        }
        cur
    }

    fn rot90(&self) -> Configuration {
        let vert: Vec<CurveLine> = self
            .horiz_order
            .iter()
            .rev()
            .map(|l| CurveLine {
                color: l.color,
                upper: !l.upper,
            })
            .collect();
        let horiz: Vec<CurveLine> = self.vert_order.to_vec();
        let map_curve = |cc: &CurveCombi| -> CurveCombi {
            let m = map_end_r90(&cc.ends()[BR_MIDDLE][0]);
            CurveCombi {
                class: match cc.class {
                    MonoClass::YMono => MonoClass::XMono,
                    MonoClass::XMono => MonoClass::YMono,
                },
                middle_upper: m.upper,
            }
        };
        let red = map_curve(&self.red);
        let blue = map_curve(&self.blue);
        // YMono curves flip traversal (t = y becomes x' = -y); XMono keep it
        let red_rev = self.red.class == MonoClass::YMono;
        let blue_rev = self.blue.class == MonoClass::YMono;
        self.transformed(
            vert.try_into().unwrap(),
            horiz.try_into().unwrap(),
            red,
            blue,
            red_rev,
            blue_rev,
            1,
        )
    }

    fn mirror_x(&self) -> Configuration {
        let vert: Vec<CurveLine> = self
            .vert_order
            .iter()
            .rev()
            .map(|l| CurveLine {
                color: l.color,
                upper: !l.upper,
            })
            .collect();
        let map_curve = |cc: &CurveCombi| -> CurveCombi {
            CurveCombi {
                class: cc.class,
                middle_upper: match cc.class {
                    MonoClass::YMono => !cc.middle_upper,
                    MonoClass::XMono => cc.middle_upper,
                },
            }
        };
        let red = map_curve(&self.red);
        let blue = map_curve(&self.blue);
        let red_rev = self.red.class == MonoClass::XMono;
        let blue_rev = self.blue.class == MonoClass::XMono;
        self.transformed(
            vert.try_into().unwrap(),
            self.horiz_order,
            red,
            blue,
            red_rev,
            blue_rev,
            -1,
        )
    }

    fn color_swap(&self) -> Configuration {
        let swap_line = |l: &CurveLine| CurveLine {
            color: l.color.flip(),
            upper: l.upper,
        };
        let vert = self.vert_order.map(|l| swap_line(&l));
        let horiz = self.horiz_order.map(|l| swap_line(&l));
        let crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .map(|c| Crossing {
                red_branch: c.blue_branch,
                blue_branch: c.red_branch,
                sign: -c.sign,
            })
            .collect();
        Configuration {
            vert_order: vert,
            horiz_order: horiz,
            red: self.blue,
            blue: self.red,
            crossings,
            red_seq: self.blue_seq.clone(),
            blue_seq: self.red_seq.clone(),
        }
    }

    fn transformed(
        &self,
        vert_order: [CurveLine; 4],
        horiz_order: [CurveLine; 4],
        red: CurveCombi,
        blue: CurveCombi,
        red_rev: bool,
        blue_rev: bool,
        geom_sign: i8,
    ) -> Configuration {
        let map_branch = |rev: bool, b: usize| -> usize {
            if rev {
                match b {
                    BR_CORNER_LOW => BR_CORNER_HIGH,
                    BR_CORNER_HIGH => BR_CORNER_LOW,
                    other => other,
                }
            } else {
                b
            }
        };
        let sign_factor =
            geom_sign * (if red_rev { -1 } else { 1 }) * (if blue_rev { -1 } else { 1 });
        let crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .map(|c| Crossing {
                red_branch: map_branch(red_rev, c.red_branch),
                blue_branch: map_branch(blue_rev, c.blue_branch),
                sign: c.sign * sign_factor,
            })
            .collect();
        let mut red_seq: [Vec<usize>; 4] = Default::default();
        let mut blue_seq: [Vec<usize>; 4] = Default::default();
        for b in 0..4 {
            let mut s = self.red_seq[b].clone();
            if red_rev {
                s.reverse();
            }
            red_seq[map_branch(red_rev, b)] = s;
            let mut s = self.blue_seq[b].clone();
            if blue_rev {
                s.reverse();
            }
            blue_seq[map_branch(blue_rev, b)] = s;
        }
        Configuration {
            vert_order,
            horiz_order,
            red,
            blue,
            crossings,
            red_seq,
            blue_seq,
        }
    }

    /// Deterministic plain-text encoding of the configuration data.
    pub fn encode(&self) -> String {
        let mut s = String::new();
        let wl = |out: &mut String, w: &[CurveLine; 4]| {
            for l in w {
                out.push(match (l.color, l.upper) {
                    (Color::Red, false) => 'r',
                    (Color::Red, true) => 'R',
                    (Color::Blue, false) => 'b',
                    (Color::Blue, true) => 'B',
                });
            }
        };
        wl(&mut s, &self.vert_order);
        s.push('|');
        wl(&mut s, &self.horiz_order);
        for cc in [&self.red, &self.blue] {
            let _ = write!(
                s,
                "|{}{}",
                match cc.class {
                    MonoClass::YMono => 'y',
                    MonoClass::XMono => 'x',
                },
                if cc.middle_upper { 'U' } else { 'L' }
            );
        }
        for b in 0..4 {
            s.push('|');
            for &cid in &self.red_seq[b] {
                let c = &self.crossings[cid];
                let _ = write!(s, "{}{}", c.blue_branch, if c.sign > 0 { '+' } else { '-' });
            }
        }
        for b in 0..4 {
            s.push('|');
            for &cid in &self.blue_seq[b] {
                let _ = write!(s, "{}", self.crossings[cid].red_branch);
            }
        }
        s
    }

    /// Minimal encoding over the symmetry group. Equal strings iff the
    /// configurations are equivalent.
    pub fn canonical_form(&self) -> String {
        let mut best: Option<String> = None;
        for rot in 0..4u8 {
            for mirror in [false, true] {
                for swap in [false, true] {
                    let enc = self.image(rot, mirror, swap).encode();
                    if best.as_ref().map_or(true, |b| enc < *b) {
                        best = Some(enc);
                    }
                }
            }
        }
        best.unwrap()
    }

    /// Number of unbounded arcs of each curve whose diagram label is NVD:
    /// the curve's vertex contribution to the map of unbounded
    /// nearest-diagram features.
    pub fn nvd_end_counts(&self) -> TraceResult<(usize, usize)> {
        let dcel = build_dcel(self)?;
        let mut counts = (0usize, 0usize);
        for (e, (_, _, kind)) in dcel.edges.iter().enumerate() {
            if let EdgeKind::Segment { color, branch, seg } = kind {
                let len = self.seq(*color)[*branch].len();
                let mut tails = 0;
                if *seg == 0 {
                    tails += 1;
                }
                if *seg == len {
                    tails += 1;
                }
                if tails == 0 {
                    continue;
                }
                if edge_label(&dcel, e)? == FaceLabel::Nvd {
                    match color {
                        Color::Red => counts.0 += tails,
                        Color::Blue => counts.1 += tails,
                    }
                }
            }
        }
        Ok(counts)
    }
}

/// Diagram label of a branch segment: the non-VD2 side.
pub fn edge_label(dcel: &Dcel, edge: usize) -> TraceResult<FaceLabel> {
    let f0 = dcel.face_of_dart[2 * edge];
    let f1 = dcel.face_of_dart[2 * edge + 1];
    let l0 = dcel.faces[f0].label;
    let l1 = dcel.faces[f1].label;
    match (l0, l1) {
        (FaceLabel::Vd2, l) | (l, FaceLabel::Vd2) if l != FaceLabel::Vd2 => Ok(l),
        _ => Err(TraceError::Structural(format!(
            "segment with face labels {l0:?}/{l1:?}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// Enumeration of simple configurations
// ---------------------------------------------------------------------------

/// All interleavings of two red and two blue values (increasing-order words).
pub fn interleavings() -> Vec<[CurveLine; 4]> {
    let mut out = Vec::new();
    for mask in 0..16u8 {
        if mask.count_ones() != 2 {
            continue;
        }
        let mut word = [CurveLine {
            color: Color::Red,
            upper: false,
        }; 4];
        let mut reds = 0;
        let mut blues = 0;
        for (i, slot) in word.iter_mut().enumerate() {
            if mask & (1 << i) != 0 {
                *slot = CurveLine {
                    color: Color::Red,
                    upper: reds == 1,
                };
                reds += 1;
            } else {
                *slot = CurveLine {
                    color: Color::Blue,
                    upper: blues == 1,
                };
                blues += 1;
            }
        }
        out.push(word);
    }
    out.sort_by_key(|w| w.map(|l| (l.color, l.upper)));
    out
}

/// The four horizontal arrangements of the enumeration: representatives of
/// the six interleavings under the vertical symmetry of the fixed blue curve.
pub fn horizontal_cases() -> Vec<[CurveLine; 4]> {
    let keep = ["RRBB", "RBRB", "RBBR", "BRRB"];
    interleavings()
        .into_iter()
        .filter(|w| {
            let s: String = w
                .iter()
                .map(|l| if l.color == Color::Red { 'R' } else { 'B' })
                .collect();
            keep.contains(&s.as_str())
        })
        .collect()
}

/// The raw simple-configuration candidates of the search: the blue curve is
/// fixed (middle on its right vertical asymptote); the red curve ranges over
/// four middle choices, six vertical and four horizontal arrangements.
pub fn raw_simple_candidates() -> Vec<Configuration> {
    let blue = CurveCombi {
        class: MonoClass::YMono,
        middle_upper: true,
    };
    let mut out = Vec::new();
    for vword in interleavings() {
        for hword in horizontal_cases() {
            for red in CurveCombi::all() {
                if let Ok(cfg) = simple_configuration(vword, hword, red, blue) {
                    out.push(cfg);
                }
            }
        }
    }
    out
}

/// Deduplicated simple configurations.
pub fn enumerate_simple_configurations() -> Vec<Configuration> {
    let mut seen = BTreeMap::new();
    for cfg in raw_simple_candidates() {
        seen.entry(cfg.canonical_form()).or_insert(cfg);
    }
    seen.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ends_match_branch_module_convention() {
        for cc in CurveCombi::all() {
            let ends = cc.ends();
            let mut per_line: BTreeMap<(Axis, bool), Vec<bool>> = BTreeMap::new();
            for pair in &ends {
                for e in pair {
                    per_line
                        .entry((e.axis, e.upper))
                        .or_default()
                        .push(e.positive);
                }
            }
            assert_eq!(per_line.len(), 4);
            for (k, dirs) in per_line {
                assert_eq!(dirs.len(), 2, "{k:?}");
                assert_ne!(dirs[0], dirs[1]);
            }
            let m = &ends[BR_MIDDLE];
            assert_eq!(m[0].axis, m[1].axis);
            assert_eq!(m[0].upper, m[1].upper);
        }
    }

    #[test]
    fn face_piece_table_matches_sides() {
        for cc in CurveCombi::all() {
            for b in 0..4 {
                let (lo, hi) = faces_beside_combi(&cc, b);
                assert_ne!(lo, hi);
                let (x, y) = CurveFace::sides_of_branch(b);
                assert!(
                    (lo == x && hi == y) || (lo == y && hi == x),
                    "{cc:?} branch {b}: ({lo:?},{hi:?}) vs ({x:?},{y:?})"
                );
            }
        }
    }

    #[test]
    fn raw_candidate_count_is_96() {
        assert_eq!(raw_simple_candidates().len(), 96);
    }

    #[test]
    fn simple_configs_are_even_with_consistent_faces() {
        let all = enumerate_simple_configurations();
        assert!(!all.is_empty());
        let mut zero_vertex = 0;
        for cfg in &all {
            assert_eq!(cfg.vertex_count() % 2, 0, "{}", cfg.encode());
            let d = build_dcel(cfg).unwrap();
            // inner faces: 9 + V (the two face trees overlay), plus the outer
            assert_eq!(d.faces.len(), 10 + cfg.vertex_count(), "{}", cfg.encode());
            if cfg.vertex_count() == 0 {
                zero_vertex += 1;
            }
        }
        assert!(zero_vertex >= 2);
    }

    #[test]
    fn canonical_form_respects_group() {
        let all = enumerate_simple_configurations();
        for cfg in all.iter().take(12) {
            let canon = cfg.canonical_form();
            for rot in 0..4u8 {
                for mirror in [false, true] {
                    for swap in [false, true] {
                        let img = cfg.image(rot, mirror, swap);
                        assert_eq!(img.canonical_form(), canon);
                        if !mirror && !swap {
                            let back = img.image((4 - rot) % 4, false, false);
                            assert_eq!(back, *cfg);
                        }
                    }
                }
            }
            assert_eq!(cfg.image(0, true, false).image(0, true, false), *cfg);
            assert_eq!(cfg.image(0, false, true).image(0, false, true), *cfg);
        }
    }

    fn find_face_edge_pair(cfg: &Configuration, want: FaceLabel) -> Option<(EdgeRef, EdgeRef)> {
        let dcel = build_dcel(cfg).unwrap();
        for (fid, f) in dcel.faces.iter().enumerate() {
            if fid == dcel.outer_face || f.label != want {
                continue;
            }
            let mut red = None;
            let mut blue = None;
            for &d in &f.darts {
                if let EdgeKind::Segment { color, branch, seg } = &dcel.edges[d / 2].2 {
                    let er = EdgeRef {
                        color: *color,
                        branch: *branch,
                        seg: *seg,
                    };
                    match color {
                        Color::Red => red = Some(er),
                        Color::Blue => blue = Some(er),
                    }
                }
            }
            if let (Some(r), Some(b)) = (red, blue) {
                return Some((r, b));
            }
        }
        None
    }

    #[test]
    fn twist_roundtrip_on_simple_configs() {
        let all = enumerate_simple_configurations();
        let mut tested = 0;
        for cfg in &all {
            if cfg.vertex_count() > 6 {
                continue;
            }
            let Some((r, b)) = find_face_edge_pair(cfg, FaceLabel::Nvd) else {
                continue;
            };
            tested += 1;
            let twisted = insert_twist(cfg, r, b, false).unwrap();
            assert_eq!(twisted.vertex_count(), cfg.vertex_count() + 2);
            let twists = detect_twists(&twisted).unwrap();
            // the inserted pair has the two fresh crossing ids; adjacent older
            // crossings may legitimately form further (sequential) bigons
            let inserted = (cfg.vertex_count(), cfg.vertex_count() + 1);
            let full = twists
                .iter()
                .find(|t| t.full && t.crossings == inserted)
                .unwrap_or_else(|| panic!("inserted twist not detected: {}", twisted.encode()));
            assert_eq!(full.bigon_label, FaceLabel::Fvd);
            let back = remove_full_twist(&twisted, full).unwrap();
            assert_eq!(back.canonical_form(), cfg.canonical_form());
        }
        assert!(tested > 0);
    }

    #[test]
    fn vd2_twist_is_partial_and_nesting_rejected() {
        let all = enumerate_simple_configurations();
        let mut tested = 0;
        for cfg in &all {
            if cfg.vertex_count() > 6 {
                continue;
            }
            let Some((r, b)) = find_face_edge_pair(cfg, FaceLabel::Vd2) else {
                continue;
            };
            let twisted = insert_twist(cfg, r, b, true).unwrap();
            assert_eq!(twisted.vertex_count(), cfg.vertex_count() + 2);
            let twists = detect_twists(&twisted).unwrap();
            let bigon = twists.iter().find(|t| !t.full);
            assert!(bigon.is_some(), "{}", twisted.encode());
            let bigon = bigon.unwrap();
            let seg_of = |color: Color| {
                let branch = match color {
                    Color::Red => bigon.red_branch,
                    Color::Blue => bigon.blue_branch,
                };
                let seqv = &twisted.seq(color)[branch];
                let i = seqv.iter().position(|&c| c == bigon.crossings.0).unwrap();
                let j = seqv.iter().position(|&c| c == bigon.crossings.1).unwrap();
                i.max(j)
            };
            let r2 = EdgeRef {
                color: Color::Red,
                branch: bigon.red_branch,
                seg: seg_of(Color::Red),
            };
            let b2 = EdgeRef {
                color: Color::Blue,
                branch: bigon.blue_branch,
                seg: seg_of(Color::Blue),
            };
            assert!(insert_twist(&twisted, r2, b2, false).is_err());
            tested += 1;
            if tested > 5 {
                break;
            }
        }
        assert!(tested > 0);
    }
}
