use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GeomCycle1, GeomCycle2, LinkingError, LinkingResult};
use crate::geometry::{
    int, seg_seg_classify, seg_tri_hit3, seg_tri_meets4, tri_tri_hit4, HitOutcome, Point, Point3, Point4, Scalar,
    SegSegClass, Triangle,
};

/// Apex draws attempted before giving up on an input.
pub const RETRY_BUDGET: u32 = 64;

const GRID: i64 = 1_000_003;

/// Uniform point of a rational grid over the bounding box of `points`,
/// inflated on every side by three times the box diameter.
pub(crate) fn sample_apex<const N: usize, R: Rng>(points: &[Point<N>], rng: &mut R) -> Point<N> {
    let lo: [Scalar; N] =
        std::array::from_fn(|i| points.iter().map(|p| &p.0[i]).min().expect("nonempty").clone());
    let hi: [Scalar; N] =
        std::array::from_fn(|i| points.iter().map(|p| &p.0[i]).max().expect("nonempty").clone());
    let mut diameter = (0..N).map(|i| &hi[i] - &lo[i]).max().unwrap_or_else(Scalar::zero);
    if diameter.is_zero() {
        diameter = int(1);
    }
    let pad = &diameter * int(3);
    Point(std::array::from_fn(|i| {
        let start = &lo[i] - &pad;
        let width = &hi[i] + &pad - &start;
        let k = rng.gen_range(0..=GRID);
        start + width * Scalar::new(BigInt::from(k), BigInt::from(GRID))
    }))
}

fn cone_points<const N: usize>(a: &GeomCycle1<N>, b_points: impl Iterator<Item = Point<N>>) -> Vec<Point<N>> {
    a.points().iter().cloned().chain(b_points).collect()
}

/// Linking number of two disjoint closed polylines in three-space.
///
/// Cones `a` to an apex `p` and sums `sign_det3(d, a_i - p, a_{i+1} - p)`
/// over segments of `b` (direction `d`) crossing cone triangles.
pub fn lk3(a: &GeomCycle1<3>, b: &GeomCycle1<3>, seed: u64) -> Result<LinkingResult<3>, LinkingError> {
    for sa in a.segments() {
        for sb in b.segments() {
            if seg_seg_classify(&sa, &sb) != SegSegClass::Disjoint {
                return Err(LinkingError::NotDisjoint);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = cone_points(a, b.points().iter().cloned());
    let b_segments = b.segments();
    for retries in 0..RETRY_BUDGET {
        let apex: Point3 = sample_apex(&pool, &mut rng);
        if let Some(value) = cone_count3(a, &b_segments, &apex) {
            return Ok(LinkingResult { value, apex, retries });
        }
    }
    Err(LinkingError::RetryBudgetExhausted(RETRY_BUDGET))
}

fn cone_count3(a: &GeomCycle1<3>, b_segments: &[crate::geometry::Segment3], apex: &Point3) -> Option<i64> {
    let mut total = 0i64;
    for sa in a.segments() {
        let cone = Triangle::new(apex.clone(), sa.start, sa.end).ok()?;
        for sb in b_segments {
            match seg_tri_hit3(sb, &cone) {
                HitOutcome::None => {}
                HitOutcome::Hit(h) => total += h.sign as i64,
                HitOutcome::Degenerate => return None,
            }
        }
    }
    Some(total)
}

/// Linking number of a closed polyline with a disjoint closed oriented
/// surface in four-space: the class of `c1` in `H_1(R^4 - c2)`.
///
/// Cones `c1` to an apex and sums `sign_det4(cone tangents, surface tangents)`
/// over transverse cone/surface triangle hits.
pub fn lk4(c1: &GeomCycle1<4>, c2: &GeomCycle2, seed: u64) -> Result<LinkingResult<4>, LinkingError> {
    let segments = c1.segments();
    for s in &segments {
        for t in c2.triangles() {
            if seg_tri_meets4(s, t) {
                return Err(LinkingError::NotDisjoint);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = cone_points(c1, c2.triangles().iter().flat_map(|t| t.vertices.clone()));
    for retries in 0..RETRY_BUDGET {
        let apex: Point4 = sample_apex(&pool, &mut rng);
        if let Some(value) = cone_count4(&segments, c2, &apex) {
            return Ok(LinkingResult { value, apex, retries });
        }
    }
    Err(LinkingError::RetryBudgetExhausted(RETRY_BUDGET))
}

fn cone_count4(segments: &[crate::geometry::Segment4], c2: &GeomCycle2, apex: &Point4) -> Option<i64> {
    let mut total = 0i64;
    for s in segments {
        let cone = Triangle::new(apex.clone(), s.start.clone(), s.end.clone()).ok()?;
        for t in c2.triangles() {
            match tri_tri_hit4(&cone, t) {
                HitOutcome::None => {}
                HitOutcome::Hit(h) => total += h.sign as i64,
                HitOutcome::Degenerate => return None,
            }
        }
    }
    Some(total)
}
