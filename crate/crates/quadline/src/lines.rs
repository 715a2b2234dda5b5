//! Four-line inputs in the canonical parametrization and the general-position
//! predicates that gate every downstream computation.

use crate::rational::Rational;
use crate::surd::sign_sqrt_sum3;
use num_traits::{One, Zero};
use std::fmt;

/// Four lines in the canonical frame:
/// line 1 through (0,0,1) with direction (1,a,0),
/// line 2 through (0,0,-1) with direction (1,-a,0),
/// lines 3 and 4 through (b_i, c_i, 0) with direction (d_i, e_i, 1).
#[derive(Clone, PartialEq, Eq)]
pub struct LineSet {
    pub a: Rational,
    pub b3: Rational,
    pub c3: Rational,
    pub d3: Rational,
    pub e3: Rational,
    pub b4: Rational,
    pub c4: Rational,
    pub d4: Rational,
    pub e4: Rational,
}

impl fmt::Debug for LineSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LineSet({}, {},{},{},{}, {},{},{},{})",
            self.a, self.b3, self.c3, self.d3, self.e3, self.b4, self.c4, self.d4, self.e4
        )
    }
}

impl LineSet {
    pub fn new(params: [Rational; 9]) -> Self {
        let [a, b3, c3, d3, e3, b4, c4, d4, e4] = params;
        LineSet {
            a,
            b3,
            c3,
            d3,
            e3,
            b4,
            c4,
            d4,
            e4,
        }
    }

    pub fn from_i64(p: [i64; 9]) -> Self {
        LineSet::new(p.map(crate::rational::rat_i64))
    }

    pub fn params(&self) -> [Rational; 9] {
        [
            self.a.clone(),
            self.b3.clone(),
            self.c3.clone(),
            self.d3.clone(),
            self.e3.clone(),
            self.b4.clone(),
            self.c4.clone(),
            self.d4.clone(),
            self.e4.clone(),
        ]
    }

    /// (point, direction) of line index 1..=4, rational coordinates.
    pub fn line(&self, i: usize) -> ([Rational; 3], [Rational; 3]) {
        let z = Rational::zero;
        let one = Rational::one;
        match i {
            1 => ([z(), z(), one()], [one(), self.a.clone(), z()]),
            2 => ([z(), z(), -one()], [one(), -self.a.clone(), z()]),
            3 => (
                [self.b3.clone(), self.c3.clone(), z()],
                [self.d3.clone(), self.e3.clone(), one()],
            ),
            4 => (
                [self.b4.clone(), self.c4.clone(), z()],
                [self.d4.clone(), self.e4.clone(), one()],
            ),
            _ => panic!("line index out of range"),
        }
    }

    /// Parameters (b, c, d, e) of line 3 or 4.
    pub fn bcde(&self, i: usize) -> (Rational, Rational, Rational, Rational) {
        match i {
            3 => (
                self.b3.clone(),
                self.c3.clone(),
                self.d3.clone(),
                self.e3.clone(),
            ),
            4 => (
                self.b4.clone(),
                self.c4.clone(),
                self.d4.clone(),
                self.e4.clone(),
            ),
            _ => panic!("bcde wants line 3 or 4"),
        }
    }

    /// Exact squared distance from a rational point to line `i`.
    pub fn dist2(&self, p: &[Rational; 3], i: usize) -> Rational {
        let (q, u) = self.line(i);
        let w = [&p[0] - &q[0], &p[1] - &q[1], &p[2] - &q[2]];
        let cr = [
            &w[1] * &u[2] - &w[2] * &u[1],
            &w[2] * &u[0] - &w[0] * &u[2],
            &w[0] * &u[1] - &w[1] * &u[0],
        ];
        let num = &cr[0] * &cr[0] + &cr[1] * &cr[1] + &cr[2] * &cr[2];
        let den = &u[0] * &u[0] + &u[1] * &u[1] + &u[2] * &u[2];
        num / den
    }
}

/// Which general-position condition failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GpViolation {
    /// a = 0: lines 1 and 2 parallel (degenerate parametrization).
    ZeroA,
    /// Two lines are parallel or intersect.
    NotSkew(usize, usize),
    /// Three direction vectors parallel to a common plane.
    DirectionsCoplanar(usize, usize, usize),
    /// The four unit direction points are cocircular (condition 4).
    Cocircular,
    /// Related trisectors share an asymptote.
    SharedAsymptote(usize, usize),
    /// The intersection resultant on the canonical bisector is not squarefree
    /// (surrogate for tangential-intersection conditions).
    ResultantNotSquarefree,
    /// The intersection resultant vanishes identically (shared component).
    ZeroResultant,
}

impl fmt::Display for GpViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GpViolation::ZeroA => write!(f, "a = 0: lines 1 and 2 are parallel"),
            GpViolation::NotSkew(i, j) => write!(f, "lines {i} and {j} are not skew"),
            GpViolation::DirectionsCoplanar(i, j, k) => {
                write!(f, "directions of lines {i}, {j}, {k} are coplanar")
            }
            GpViolation::Cocircular => {
                write!(f, "the four direction points on the sphere are cocircular")
            }
            GpViolation::SharedAsymptote(i, j) => {
                write!(f, "trisectors of lines {i} and {j} share an asymptote")
            }
            GpViolation::ResultantNotSquarefree => {
                write!(f, "intersection resultant is not squarefree")
            }
            GpViolation::ZeroResultant => {
                write!(f, "intersection resultant vanishes: shared trisector component")
            }
        }
    }
}

/// Outcome of the general-position check.
#[derive(Clone, Debug)]
pub struct GeneralPositionReport {
    pub violations: Vec<GpViolation>,
}

impl GeneralPositionReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

fn det3(m: [[&Rational; 3]; 3]) -> Rational {
    m[0][0] * &(m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * &(m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * &(m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Pairwise-skew test: lines are skew iff det[u_i, u_j, q_j - q_i] != 0.
fn skew(li: &([Rational; 3], [Rational; 3]), lj: &([Rational; 3], [Rational; 3])) -> bool {
    let (qi, ui) = li;
    let (qj, uj) = lj;
    let w = [&qj[0] - &qi[0], &qj[1] - &qi[1], &qj[2] - &qi[2]];
    let d = det3([
        [&ui[0], &ui[1], &ui[2]],
        [&uj[0], &uj[1], &uj[2]],
        [&w[0], &w[1], &w[2]],
    ]);
    !d.is_zero()
}

/// Full general-position check. All predicates are exact.
pub fn check_general_position(lines: &LineSet) -> GeneralPositionReport {
    let mut violations = Vec::new();
    if lines.a.is_zero() {
        violations.push(GpViolation::ZeroA);
        return GeneralPositionReport { violations };
    }

    let ls: Vec<_> = (1..=4).map(|i| lines.line(i)).collect();

    // condition (1a): pairwise skew
    for i in 0..4 {
        for j in i + 1..4 {
            if !skew(&ls[i], &ls[j]) {
                violations.push(GpViolation::NotSkew(i + 1, j + 1));
            }
        }
    }
    // condition (1b): no three directions parallel to a common plane
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                let (_, ui) = &ls[i];
                let (_, uj) = &ls[j];
                let (_, uk) = &ls[k];
                let d = det3([
                    [&ui[0], &ui[1], &ui[2]],
                    [&uj[0], &uj[1], &uj[2]],
                    [&uk[0], &uk[1], &uk[2]],
                ]);
                if d.is_zero() {
                    violations.push(GpViolation::DirectionsCoplanar(i + 1, j + 1, k + 1));
                }
            }
        }
    }
    // condition (4): unit direction points not cocircular on the sphere
    if cocircular_directions(lines) {
        violations.push(GpViolation::Cocircular);
    }

    // distinct asymptote sets for the related trisectors on the canonical
    // bisector (implied by condition 4; checked directly as well)
    let t3 = crate::trisector::trisector_polynomial(lines, 3);
    let t4 = crate::trisector::trisector_polynomial(lines, 4);
    if t3.vertical_asymptotes.0 == t4.vertical_asymptotes.0
        || t3.vertical_asymptotes.0 == t4.vertical_asymptotes.1
        || t3.vertical_asymptotes.1 == t4.vertical_asymptotes.0
        || t3.vertical_asymptotes.1 == t4.vertical_asymptotes.1
    {
        violations.push(GpViolation::SharedAsymptote(3, 4));
    }
    if !violations.is_empty() {
        return GeneralPositionReport { violations };
    }

    // squarefree intersection resultant (surrogate for conditions (2)-(3))
    let r = crate::trisector::intersection_polynomial(&t3, &t4);
    if r.is_zero() {
        violations.push(GpViolation::ZeroResultant);
    } else if !r.is_squarefree() {
        violations.push(GpViolation::ResultantNotSquarefree);
    }

    GeneralPositionReport { violations }
}

/// Exact cocircularity test of the four direction points on the unit sphere.
///
/// Cocircular on the sphere means coplanar in space: the determinant with rows
/// (u_i / |u_i|, 1) vanishes. Scaling rows by |u_i| and expanding along the
/// norm column leaves m12*sqrt(A) + m3*sqrt(D3) + m4*sqrt(D4) with rational
/// minors (lines 1 and 2 share the norm sqrt(A)); its sign is decided exactly.
fn cocircular_directions(lines: &LineSet) -> bool {
    let a = &lines.a;
    let rows: [[Rational; 3]; 4] = [
        [Rational::one(), a.clone(), Rational::zero()],
        [Rational::one(), -a.clone(), Rational::zero()],
        [lines.d3.clone(), lines.e3.clone(), Rational::one()],
        [lines.d4.clone(), lines.e4.clone(), Rational::one()],
    ];
    let radicands: [Rational; 4] = [
        Rational::one() + a * a,
        Rational::one() + a * a,
        Rational::one() + &lines.d3 * &lines.d3 + &lines.e3 * &lines.e3,
        Rational::one() + &lines.d4 * &lines.d4 + &lines.e4 * &lines.e4,
    ];
    let mut coeffs: Vec<(Rational, Rational)> = Vec::new();
    for i in 0..4 {
        let idx: Vec<usize> = (0..4).filter(|&r| r != i).collect();
        let m = det3([
            [&rows[idx[0]][0], &rows[idx[0]][1], &rows[idx[0]][2]],
            [&rows[idx[1]][0], &rows[idx[1]][1], &rows[idx[1]][2]],
            [&rows[idx[2]][0], &rows[idx[2]][1], &rows[idx[2]][2]],
        ]);
        let signed = if i % 2 == 0 { -m } else { m };
        coeffs.push((signed, radicands[i].clone()));
    }
    let shared = (&coeffs[0].0 + &coeffs[1].0, coeffs[0].1.clone());
    let terms: [(Rational, Rational); 3] = [shared, coeffs[2].clone(), coeffs[3].clone()];
    sign_sqrt_sum3(&terms) == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_i64;

    #[test]
    fn witness_passes() {
        let l = LineSet::from_i64([-9, 2, -2, 1, -3, -1, 1, -1, -5]);
        let rep = check_general_position(&l);
        assert!(rep.pass(), "{:?}", rep.violations);
    }

    #[test]
    fn zero_a_fails() {
        let l = LineSet::from_i64([0, 2, -2, 1, -3, -1, 1, -1, -5]);
        let rep = check_general_position(&l);
        assert_eq!(rep.violations, vec![GpViolation::ZeroA]);
    }

    #[test]
    fn translate_of_line3_fails_condition4() {
        // line 4 a translate of line 3: identical direction points are trivially cocircular
        let l = LineSet::from_i64([-9, 2, -2, 1, -3, 7, 5, 1, -3]);
        let rep = check_general_position(&l);
        assert!(
            rep.violations.contains(&GpViolation::Cocircular),
            "{:?}",
            rep.violations
        );
    }

    #[test]
    fn intersecting_lines_fail() {
        // line 3 through (b+d, c+e, 1) at t=1; on line 1 iff c+e = a(b+d)
        let l = LineSet::from_i64([-9, 0, -6, 1, -3, -1, 1, -1, -5]);
        let rep = check_general_position(&l);
        assert!(rep
            .violations
            .iter()
            .any(|v| matches!(v, GpViolation::NotSkew(1, 3))));
    }

    #[test]
    fn dist2_on_bisector() {
        let l = LineSet::from_i64([-9, 2, -2, 1, -3, -1, 1, -1, -5]);
        let x = rat_i64(3);
        let y = rat_i64(-2);
        let z = -(&l.a * &x * &y) / (Rational::one() + &l.a * &l.a);
        let p = [x, y, z];
        assert_eq!(l.dist2(&p, 1), l.dist2(&p, 2));
        assert_ne!(l.dist2(&p, 1), l.dist2(&p, 3));
    }
}
