//! Signed simplex intersection predicates.
//!
//! Hits are reported only for transverse intersections strictly inside both
//! simplices. Anything touching a boundary, and any singular configuration
//! that still makes contact, is [`HitOutcome::Degenerate`]; callers are
//! expected to perturb (pick a new cone apex) and try again.

use num_traits::{One, Signed, Zero};

use super::{determinant, neg, sign_of, solve_columns, Point, Point4, Scalar, Segment, Tri3, Tri4, Triangle, Vector};

/// Sign of the determinant of three column vectors.
pub fn sign_det3(u1: &Vector<3>, u2: &Vector<3>, u3: &Vector<3>) -> i8 {
    sign_of(&determinant(&[u1.clone(), u2.clone(), u3.clone()]))
}

/// Sign of the determinant of four column vectors.
pub fn sign_det4(u1: &Vector<4>, u2: &Vector<4>, u3: &Vector<4>, u4: &Vector<4>) -> i8 {
    sign_of(&determinant(&[u1.clone(), u2.clone(), u3.clone(), u4.clone()]))
}

/// How two closed segments meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegSegClass {
    Disjoint,
    /// The segments share exactly one endpoint and nothing else.
    SharedEndpointOnly,
    Violation,
}

/// A transverse intersection strictly inside two simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedHit<const N: usize> {
    pub location: Point<N>,
    pub sign: i8,
    /// Barycentric coordinates of the hit in the first simplex.
    pub first: Vec<Scalar>,
    /// Barycentric coordinates of the hit in the second simplex.
    pub second: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HitOutcome<const N: usize> {
    None,
    Hit(SignedHit<N>),
    Degenerate,
}

impl<const N: usize> HitOutcome<N> {
    pub fn is_none(&self) -> bool {
        matches!(self, HitOutcome::None)
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, HitOutcome::Degenerate)
    }

    pub fn sign(&self) -> Option<i8> {
        match self {
            HitOutcome::Hit(h) => Some(h.sign),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Region {
    Interior,
    Boundary,
    Outside,
}

fn unit_interval_region(t: &Scalar) -> Region {
    if t.is_negative() || *t > Scalar::one() {
        Region::Outside
    } else if t.is_zero() || t.is_one() {
        Region::Boundary
    } else {
        Region::Interior
    }
}

/// Region of `(b1, b2)` relative to the standard triangle `b1, b2 >= 0, b1 + b2 <= 1`.
fn unit_triangle_region(b1: &Scalar, b2: &Scalar) -> Region {
    let rest = Scalar::one() - b1 - b2;
    if b1.is_negative() || b2.is_negative() || rest.is_negative() {
        Region::Outside
    } else if b1.is_zero() || b2.is_zero() || rest.is_zero() {
        Region::Boundary
    } else {
        Region::Interior
    }
}

fn segment_barycentric(t: &Scalar) -> Vec<Scalar> {
    vec![Scalar::one() - t, t.clone()]
}

fn triangle_barycentric(b1: &Scalar, b2: &Scalar) -> Vec<Scalar> {
    vec![Scalar::one() - b1 - b2, b1.clone(), b2.clone()]
}

/// Classify the intersection of two closed segments in any dimension.
pub fn seg_seg_classify<const N: usize>(s1: &Segment<N>, s2: &Segment<N>) -> SegSegClass {
    let shared: Vec<(&Point<N>, &Point<N>, &Point<N>)> = [
        (&s1.start, &s1.end, &s2.start, &s2.end),
        (&s1.start, &s1.end, &s2.end, &s2.start),
        (&s1.end, &s1.start, &s2.start, &s2.end),
        (&s1.end, &s1.start, &s2.end, &s2.start),
    ]
    .into_iter()
    .filter(|(p, _, q, _)| p == q)
    .map(|(p, o1, _, o2)| (p, o1, o2))
    .collect();

    match shared.as_slice() {
        [] => {}
        [(x, o1, o2)] => {
            // Only a collinear continuation in the same direction overlaps.
            let d1 = o1.sub(x);
            let d2 = o2.sub(x);
            return match solve_columns(&[d1], &d2).solution {
                Some(c) if c[0].is_positive() => SegSegClass::Violation,
                _ => SegSegClass::SharedEndpointOnly,
            };
        }
        _ => return SegSegClass::Violation,
    }

    let d1 = s1.direction();
    let d2 = s2.direction();
    let rhs = s2.start.sub(&s1.start);
    let sol = solve_columns(&[d1.clone(), neg(&d2)], &rhs);
    if sol.rank == 2 {
        return match sol.solution {
            Some(x) if unit_interval_region(&x[0]) != Region::Outside && unit_interval_region(&x[1]) != Region::Outside => {
                SegSegClass::Violation
            }
            _ => SegSegClass::Disjoint,
        };
    }
    // Parallel. Overlap requires a common line.
    let Some(t0) = solve_columns(&[d1.clone()], &rhs).solution else {
        return SegSegClass::Disjoint;
    };
    let t1 = solve_columns(&[d1], &s2.end.sub(&s1.start)).solution.expect("parallel and collinear");
    let (lo, hi) = if t0[0] <= t1[0] { (&t0[0], &t1[0]) } else { (&t1[0], &t0[0]) };
    if hi.is_negative() || *lo > Scalar::one() {
        SegSegClass::Disjoint
    } else {
        SegSegClass::Violation
    }
}

/// [`seg_seg_classify`] in three dimensions.
pub fn seg_seg_disjoint3(s1: &Segment<3>, s2: &Segment<3>) -> SegSegClass {
    seg_seg_classify(s1, s2)
}

type P2 = [Scalar; 2];

pub(crate) fn orient2(a: &P2, b: &P2, c: &P2) -> i8 {
    let v = (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0]);
    sign_of(&v)
}

fn within_box(a: &P2, b: &P2, p: &P2) -> bool {
    (0..2).all(|i| {
        let (lo, hi) = if a[i] <= b[i] { (&a[i], &b[i]) } else { (&b[i], &a[i]) };
        lo <= &p[i] && &p[i] <= hi
    })
}

pub(crate) fn segments_meet_2d(p1: &P2, p2: &P2, q1: &P2, q2: &P2) -> bool {
    let o1 = orient2(p1, p2, q1);
    let o2 = orient2(p1, p2, q2);
    let o3 = orient2(q1, q2, p1);
    let o4 = orient2(q1, q2, p2);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && within_box(p1, p2, q1))
        || (o2 == 0 && within_box(p1, p2, q2))
        || (o3 == 0 && within_box(q1, q2, p1))
        || (o4 == 0 && within_box(q1, q2, p2))
}

/// Whether the closed planar segment `p q` meets the closed standard triangle
/// with corners (0,0), (1,0), (0,1).
pub(crate) fn segment_meets_unit_triangle_2d(p: &P2, q: &P2) -> bool {
    if unit_triangle_region(&p[0], &p[1]) != Region::Outside || unit_triangle_region(&q[0], &q[1]) != Region::Outside {
        return true;
    }
    let zero = Scalar::zero();
    let one = Scalar::one();
    let corners = [
        [zero.clone(), zero.clone()],
        [one.clone(), zero.clone()],
        [zero, one],
    ];
    (0..3).any(|i| segments_meet_2d(p, q, &corners[i], &corners[(i + 1) % 3]))
}

/// Whether a closed segment meets a closed triangle, in any dimension.
pub fn seg_tri_meets<const N: usize>(s: &Segment<N>, t: &Triangle<N>) -> bool {
    let d = s.direction();
    let [v1, v2] = t.edge_vectors();
    let q0 = &t.vertices[0];
    let rhs = q0.sub(&s.start);
    let sol = solve_columns(&[d, neg(&v1), neg(&v2)], &rhs);
    if !sol.consistent {
        return false;
    }
    if let Some(x) = sol.solution {
        return unit_interval_region(&x[0]) != Region::Outside && unit_triangle_region(&x[1], &x[2]) != Region::Outside;
    }
    // Segment parallel to and inside the triangle's plane: decide in plane coordinates.
    let plane = |p: &Point<N>| -> P2 {
        let c = solve_columns(&[v1.clone(), v2.clone()], &p.sub(q0))
            .solution
            .expect("point lies in the triangle's plane");
        [c[0].clone(), c[1].clone()]
    };
    segment_meets_unit_triangle_2d(&plane(&s.start), &plane(&s.end))
}

/// Whether a closed segment meets a closed triangle in four-space. Any
/// contact is a degeneracy there, since a 1-cell and a 2-cell generically miss.
pub fn seg_tri_meets4(s: &Segment<4>, t: &Tri4) -> bool {
    seg_tri_meets(s, t)
}

/// Transverse hit of a segment with a triangle in three-space.
///
/// Solves `p0 + a d = q0 + b1 v1 + b2 v2`; the sign is `sign_det3(d, v1, v2)`.
pub fn seg_tri_hit3(s: &Segment<3>, t: &Tri3) -> HitOutcome<3> {
    let d = s.direction();
    let [v1, v2] = t.edge_vectors();
    let rhs = t.vertices[0].sub(&s.start);
    let sol = solve_columns(&[d.clone(), neg(&v1), neg(&v2)], &rhs);
    let Some(x) = sol.solution else {
        return if seg_tri_meets(s, t) { HitOutcome::Degenerate } else { HitOutcome::None };
    };
    match unit_interval_region(&x[0]).max(unit_triangle_region(&x[1], &x[2])) {
        Region::Outside => HitOutcome::None,
        Region::Boundary => HitOutcome::Degenerate,
        Region::Interior => HitOutcome::Hit(SignedHit {
            location: s.start.offset(&d, &x[0]),
            sign: sign_det3(&d, &v1, &v2),
            first: segment_barycentric(&x[0]),
            second: triangle_barycentric(&x[1], &x[2]),
        }),
    }
}

/// Transverse hit of two triangles in four-space.
///
/// Solves `p0 + s1 u1 + s2 u2 = q0 + t1 v1 + t2 v2`; the sign is
/// `sign_det4(u1, u2, v1, v2)`.
pub fn tri_tri_hit4(t1: &Tri4, t2: &Tri4) -> HitOutcome<4> {
    let [u1, u2] = t1.edge_vectors();
    let [v1, v2] = t2.edge_vectors();
    let rhs = t2.vertices[0].sub(&t1.vertices[0]);
    let sol = solve_columns(&[u1.clone(), u2.clone(), neg(&v1), neg(&v2)], &rhs);
    let Some(x) = sol.solution else {
        // Non-transverse planes: any contact shows up on an edge of one of the two.
        return if tris_intersect_singular(t1, t2) { HitOutcome::Degenerate } else { HitOutcome::None };
    };
    match unit_triangle_region(&x[0], &x[1]).max(unit_triangle_region(&x[2], &x[3])) {
        Region::Outside => HitOutcome::None,
        Region::Boundary => HitOutcome::Degenerate,
        Region::Interior => {
            let location = t1.vertices[0].offset(&u1, &x[0]).offset(&u2, &x[1]);
            HitOutcome::Hit(SignedHit {
                location,
                sign: sign_det4(&u1, &u2, &v1, &v2),
                first: triangle_barycentric(&x[0], &x[1]),
                second: triangle_barycentric(&x[2], &x[3]),
            })
        }
    }
}

fn tris_intersect_singular<const N: usize>(t1: &Triangle<N>, t2: &Triangle<N>) -> bool {
    let edge_hits = |a: &Triangle<N>, b: &Triangle<N>| {
        a.edges()
            .into_iter()
            .any(|(p, q)| seg_tri_meets(&Segment { start: p, end: q }, b))
    };
    edge_hits(t1, t2) || edge_hits(t2, t1)
}

/// Whether two closed triangles in four-space share any point.
pub fn tris_intersect(t1: &Tri4, t2: &Tri4) -> bool {
    !tri_tri_hit4(t1, t2).is_none()
}

/// Whether the nonzero direction `d` lies in the closed cone spanned by `w1, w2`.
pub fn direction_in_cone<const N: usize>(d: &Vector<N>, w1: &Vector<N>, w2: &Vector<N>) -> bool {
    match solve_columns(&[w1.clone(), w2.clone()], d).solution {
        Some(c) => !c[0].is_negative() && !c[1].is_negative(),
        None => false,
    }
}

/// Whether two PL cells (segments or triangles, given by their vertices) in
/// four-space meet exactly in the face spanned by their common vertices.
/// Cells with no common vertex must be disjoint; identical cells fail.
pub fn cells_meet_properly(a: &[Point4], b: &[Point4]) -> bool {
    let shared: Vec<&Point4> = a.iter().filter(|p| b.contains(p)).collect();
    let seg = |c: &[Point4]| Segment {
        start: c[0].clone(),
        end: c[1].clone(),
    };
    let tri = |c: &[Point4]| Triangle {
        vertices: [c[0].clone(), c[1].clone(), c[2].clone()],
    };
    // Vertices of `c` other than the shared ones, in order.
    let others = |c: &[Point4]| -> Vec<Point4> { c.iter().filter(|p| !shared.contains(p)).cloned().collect() };

    if shared.len() == a.len() && shared.len() == b.len() {
        return false;
    }
    if shared.len() == a.len().min(b.len()) && shared.len() == 2 {
        // A segment that is an edge of the triangle.
        return true;
    }
    match (a.len(), b.len(), shared.len()) {
        (2, 2, 0) => seg_seg_classify(&seg(a), &seg(b)) == SegSegClass::Disjoint,
        (2, 2, 1) => seg_seg_classify(&seg(a), &seg(b)) == SegSegClass::SharedEndpointOnly,
        (2, 3, 0) => !seg_tri_meets(&seg(a), &tri(b)),
        (3, 2, 0) => !seg_tri_meets(&seg(b), &tri(a)),
        (2, 3, 1) | (3, 2, 1) => {
            let (s, t) = if a.len() == 2 { (a, b) } else { (b, a) };
            let v = shared[0];
            let p = &others(s)[0];
            let rest = others(t);
            !direction_in_cone(&p.sub(v), &rest[0].sub(v), &rest[1].sub(v))
        }
        (3, 3, 0) => tri_tri_hit4(&tri(a), &tri(b)).is_none(),
        (3, 3, 1) => {
            let v = shared[0];
            let (oa, ob) = (others(a), others(b));
            let opposite = |o: &[Point4]| Segment {
                start: o[0].clone(),
                end: o[1].clone(),
            };
            let into_cone = |o1: &[Point4], o2: &[Point4]| {
                o1.iter()
                    .any(|p| direction_in_cone(&p.sub(v), &o2[0].sub(v), &o2[1].sub(v)))
            };
            !seg_tri_meets(&opposite(&oa), &tri(b))
                && !seg_tri_meets(&opposite(&ob), &tri(a))
                && !into_cone(&oa, &ob)
                && !into_cone(&ob, &oa)
        }
        (3, 3, 2) => {
            let (v1, v2) = (shared[0], shared[1]);
            let (p, r) = (&others(a)[0], &others(b)[0]);
            let folds_onto = |x: &Point4, y: &Point4| {
                direction_in_cone(&x.sub(v1), &v2.sub(v1), &y.sub(v1)) || direction_in_cone(&x.sub(v2), &v1.sub(v2), &y.sub(v2))
            };
            !folds_onto(p, r) && !folds_onto(r, p)
        }
        _ => false,
    }
}
