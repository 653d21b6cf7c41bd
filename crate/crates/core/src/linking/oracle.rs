//! Independent cross-checks for the cone computations.
//!
//! The three-dimensional check counts signed crossings of a generic planar
//! projection. The four-dimensional check works dually: instead of coning
//! the curve, it fills the surface with a solid 3-chain and counts where the
//! curve passes through it.

use std::collections::{BTreeMap, HashMap};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GeomCycle1, GeomCycle2, LinkingError, RETRY_BUDGET};
use crate::geometry::predicates::{orient2, segments_meet_2d};
use crate::geometry::{
    determinant, dot, int, neg, ratio, seg_seg_classify, seg_tri_meets4, sign_det3, sign_det4, sign_of, solve_columns,
    Point, Point4, Scalar, SegSegClass, Segment4, Vector,
};

const ORACLE_SEED: u64 = 0x5eed_0f_0ac1e;

/// Linking number from signed crossings where `a` passes over `b` in a
/// generic parallel projection. Crossing sign is `sign det(d_a, d_b, r)` for
/// viewing direction `r`.
pub fn lk3_projection_oracle(a: &GeomCycle1<3>, b: &GeomCycle1<3>) -> Result<i64, LinkingError> {
    for sa in a.segments() {
        for sb in b.segments() {
            if seg_seg_classify(&sa, &sb) != SegSegClass::Disjoint {
                return Err(LinkingError::NotDisjoint);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    for _ in 0..RETRY_BUDGET {
        let r: Vector<3> = std::array::from_fn(|_| int(rng.gen_range(-1000..=1000)));
        if let Some(total) = crossing_sum(a, b, &r) {
            return Ok(total);
        }
    }
    Err(LinkingError::RetryBudgetExhausted(RETRY_BUDGET))
}

fn crossing_sum(a: &GeomCycle1<3>, b: &GeomCycle1<3>, r: &Vector<3>) -> Option<i64> {
    // Basis of the plane orthogonal to r, built around a nonzero coordinate k.
    let k = (0..3).find(|&k| !r[k].is_zero())?;
    let (i, j) = ((k + 1) % 3, (k + 2) % 3);
    let mut e1: Vector<3> = std::array::from_fn(|_| Scalar::zero());
    let mut e2 = e1.clone();
    e1[i] = r[k].clone();
    e1[k] = -&r[i];
    e2[j] = r[k].clone();
    e2[k] = -&r[j];
    let project = |p: &Point<3>| -> [Scalar; 2] { [dot(&p.0, &e1), dot(&p.0, &e2)] };

    let mut total = 0i64;
    for sa in a.segments() {
        let (p1, p2) = (project(&sa.start), project(&sa.end));
        for sb in b.segments() {
            let (q1, q2) = (project(&sb.start), project(&sb.end));
            if !segments_meet_2d(&p1, &p2, &q1, &q2) {
                continue;
            }
            let proper = orient2(&p1, &p2, &q1) * orient2(&p1, &p2, &q2) < 0
                && orient2(&q1, &q2, &p1) * orient2(&q1, &q2, &p2) < 0;
            if !proper {
                return None;
            }
            let cross = |u: &[Scalar; 2], v: &[Scalar; 2]| &u[0] * &v[1] - &u[1] * &v[0];
            let dp = [&p2[0] - &p1[0], &p2[1] - &p1[1]];
            let dq = [&q2[0] - &q1[0], &q2[1] - &q1[1]];
            let w = [&q1[0] - &p1[0], &q1[1] - &p1[1]];
            let denom = cross(&dp, &dq);
            let s = cross(&w, &dq) / &denom;
            let t = cross(&w, &dp) / &denom;
            let (da, db) = (sa.direction(), sb.direction());
            let above = sa.start.offset(&da, &s).sub(&sb.start.offset(&db, &t));
            if dot(&above, r).is_positive() {
                total += sign_det3(&da, &db, r) as i64;
            }
        }
    }
    Some(total)
}

// Relates I(curve, W) to I(cone, surface) under the frame conventions of
// `sign_det4` used on both sides.
const CHAIN_SIGN: i64 = 1;

/// Linking number of `c1` with a suspension-shaped `c2` (the double cone of
/// a flat triangle's boundary over two apexes), computed by counting signed
/// passages of `c1` through a solid 3-chain bounded by `c2`.
///
/// The chain is `W = e (cone_A(D) - cone_B(D))` for a disk `D` fanned from a
/// point `m` over the rim; `m` starts at the rim centroid (the flat disk) and
/// is re-drawn if `c1` meets the chain non-transversally.
pub fn lk4_chain_oracle(c1: &GeomCycle1<4>, c2: &GeomCycle2) -> Result<i64, LinkingError> {
    let shape = SuspensionShape::recognize(c2)?;
    for s in c1.segments() {
        for t in c2.triangles() {
            if seg_tri_meets4(&s, t) {
                return Err(LinkingError::NotDisjoint);
            }
        }
    }
    let segments = c1.segments();
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let centroid = Point::centroid(&shape.rim);
    for attempt in 0..RETRY_BUDGET {
        let m = if attempt == 0 {
            centroid.clone()
        } else {
            let jitter: Vector<4> = std::array::from_fn(|_| ratio(rng.gen_range(-1000..=1000), 997));
            centroid.translate(&jitter)
        };
        let Some(chain) = shape.filling(&m) else {
            continue;
        };
        if let Some(total) = chain_crossings(&segments, &chain) {
            return Ok(CHAIN_SIGN * total);
        }
    }
    Err(LinkingError::RetryBudgetExhausted(RETRY_BUDGET))
}

struct SuspensionShape {
    apexes: [Point4; 2],
    rim: [Point4; 3],
    /// The surface as an oriented 2-chain over local ids
    /// (apexes 0, 1; fan point 2; rim 3, 4, 5).
    surface: BTreeMap<[usize; 3], i64>,
}

impl SuspensionShape {
    fn recognize(c2: &GeomCycle2) -> Result<Self, LinkingError> {
        let tris = c2.triangles();
        if tris.len() != 6 {
            return Err(LinkingError::NotSuspensionShaped("expected six triangles"));
        }
        let mut incidence: BTreeMap<&Point4, usize> = BTreeMap::new();
        for t in tris {
            for p in &t.vertices {
                *incidence.entry(p).or_default() += 1;
            }
        }
        let apexes: Vec<Point4> = incidence.iter().filter(|(_, &k)| k == 3).map(|(p, _)| (*p).clone()).collect();
        let rim: Vec<Point4> = incidence.iter().filter(|(_, &k)| k == 4).map(|(p, _)| (*p).clone()).collect();
        if incidence.len() != 5 || apexes.len() != 2 || rim.len() != 3 {
            return Err(LinkingError::NotSuspensionShaped("expected two apexes over a three-point rim"));
        }
        let rim_vectors = [rim[1].sub(&rim[0]), rim[2].sub(&rim[0])];
        if solve_columns(&rim_vectors, &Point4::origin().0).rank < 2 {
            return Err(LinkingError::NotSuspensionShaped("rim triangle is degenerate"));
        }
        let mut ids: HashMap<&Point4, usize> = HashMap::new();
        ids.insert(&apexes[0], 0);
        ids.insert(&apexes[1], 1);
        for (k, p) in rim.iter().enumerate() {
            ids.insert(p, 3 + k);
        }
        let mut surface = BTreeMap::new();
        for t in tris {
            let face = t.vertices.each_ref().map(|p| ids[p]);
            if face.iter().filter(|&&v| v < 2).count() != 1 {
                return Err(LinkingError::NotSuspensionShaped("each triangle must use exactly one apex"));
            }
            add_simplex(&mut surface, face.to_vec(), 1);
        }
        Ok(SuspensionShape {
            apexes: [apexes[0].clone(), apexes[1].clone()],
            rim: [rim[0].clone(), rim[1].clone(), rim[2].clone()],
            surface,
        })
    }

    /// Oriented tetrahedra of a 3-chain bounded by the surface, fanned from `m`.
    /// `None` if some tetrahedron is flat.
    fn filling(&self, m: &Point4) -> Option<Vec<([Point4; 4], i64)>> {
        let point = |id: usize| -> Point4 {
            match id {
                0 | 1 => self.apexes[id].clone(),
                2 => m.clone(),
                _ => self.rim[id - 3].clone(),
            }
        };
        let tetra_ids = |sign: [i64; 2]| -> Vec<([usize; 4], i64)> {
            (0..2)
                .flat_map(|q| (0..3).map(move |i| ([q, 2, 3 + i, 3 + (i + 1) % 3], sign[q])))
                .collect()
        };
        let chosen = [[1, -1], [-1, 1]].into_iter().map(tetra_ids).find(|tets| {
            let mut boundary = BTreeMap::new();
            for (t, c) in tets {
                for skip in 0..4 {
                    let face: Vec<usize> = (0..4).filter(|&k| k != skip).map(|k| t[k]).collect();
                    add_simplex(&mut boundary, face, if skip % 2 == 0 { *c } else { -c });
                }
            }
            boundary == self.surface
        })?;
        let mut out = Vec::with_capacity(chosen.len());
        for (ids, c) in chosen {
            let pts = ids.map(point);
            let frame = [pts[1].sub(&pts[0]), pts[2].sub(&pts[0]), pts[3].sub(&pts[0])];
            if solve_columns(&frame, &Point4::origin().0).rank < 3 {
                return None;
            }
            out.push((pts, c));
        }
        Some(out)
    }
}

/// Add `coef * [v0, v1, v2]` to a chain keyed by sorted vertex ids.
fn add_simplex(chain: &mut BTreeMap<[usize; 3], i64>, mut face: Vec<usize>, coef: i64) {
    let mut parity = 1;
    for i in 0..face.len() {
        for j in 0..face.len() - 1 - i {
            if face[j] > face[j + 1] {
                face.swap(j, j + 1);
                parity = -parity;
            }
        }
    }
    let key = [face[0], face[1], face[2]];
    let entry = chain.entry(key).or_insert(0);
    *entry += parity * coef;
    if *entry == 0 {
        chain.remove(&key);
    }
}

/// Signed transverse passages of the segments through the tetrahedra, or
/// `None` on any boundary contact or segment lying in a tetrahedron's hyperplane.
fn chain_crossings(segments: &[Segment4], chain: &[([Point4; 4], i64)]) -> Option<i64> {
    let mut total = 0;
    for s in segments {
        let d = s.direction();
        for (pts, coef) in chain {
            let w = [pts[1].sub(&pts[0]), pts[2].sub(&pts[0]), pts[3].sub(&pts[0])];
            let cols = [d.clone(), neg(&w[0]), neg(&w[1]), neg(&w[2])];
            let sol = solve_columns(&cols, &pts[0].sub(&s.start));
            let Some(x) = sol.solution else {
                if sol.consistent {
                    return None;
                }
                continue;
            };
            let one = int(1);
            let rest = &one - &x[1] - &x[2] - &x[3];
            let coords = [&x[1], &x[2], &x[3], &rest];
            if x[0].is_negative() || x[0] > one || coords.iter().any(|c| c.is_negative()) {
                continue;
            }
            if x[0].is_zero() || x[0] == one || coords.iter().any(|c| c.is_zero()) {
                return None;
            }
            debug_assert!(sign_of(&determinant(&cols)) != 0);
            total += coef * sign_det4(&d, &w[0], &w[1], &w[2]) as i64;
        }
    }
    Some(total)
}
