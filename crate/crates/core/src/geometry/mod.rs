//! Exact rational geometry in three and four dimensions.
//!
//! Every quantity is a [`Scalar`], an arbitrary-precision rational that is
//! kept in lowest terms after each operation, so orientation and incidence
//! questions are decided exactly. There are no tolerances anywhere in this
//! module: a point is on a boundary or it is not.

mod linalg;
pub(crate) mod predicates;

pub use linalg::{determinant, solve_columns, LinearSolution};
pub use predicates::{
    cells_meet_properly, direction_in_cone, seg_seg_classify, seg_seg_disjoint3, seg_tri_hit3,
    seg_tri_meets, seg_tri_meets4, sign_det3, sign_det4,
    tri_tri_hit4, tris_intersect, HitOutcome, SegSegClass, SignedHit,
};

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Exact rational scalar. Always normalized: positive denominator, reduced.
pub type Scalar = BigRational;

/// Column vector of fixed arity.
pub type Vector<const N: usize> = [Scalar; N];

/// Integer-valued scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den` as a reduced scalar. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Sign of a scalar as -1, 0 or +1.
pub fn sign_of(x: &Scalar) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("triangle vertices are affinely dependent")]
    DegenerateTriangle,
}

/// A point (or displacement) in rational `N`-space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<const N: usize>(pub [Scalar; N]);

pub type Point3 = Point<3>;
pub type Point4 = Point<4>;

impl<const N: usize> Point<N> {
    pub fn new(coords: [Scalar; N]) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: [i64; N]) -> Self {
        Point(coords.map(int))
    }

    pub fn origin() -> Self {
        Point(std::array::from_fn(|_| Scalar::zero()))
    }

    pub fn coords(&self) -> &[Scalar; N] {
        &self.0
    }

    /// `self - other` as a vector.
    pub fn sub(&self, other: &Self) -> Vector<N> {
        std::array::from_fn(|i| &self.0[i] - &other.0[i])
    }

    pub fn translate(&self, v: &Vector<N>) -> Self {
        Point(std::array::from_fn(|i| &self.0[i] + &v[i]))
    }

    /// `self + t * v`.
    pub fn offset(&self, v: &Vector<N>, t: &Scalar) -> Self {
        Point(std::array::from_fn(|i| &self.0[i] + &v[i] * t))
    }

    /// Affine combination `(1 - t) * self + t * other`.
    pub fn lerp(&self, other: &Self, t: &Scalar) -> Self {
        self.offset(&other.sub(self), t)
    }

    pub fn centroid(points: &[Self]) -> Self {
        assert!(!points.is_empty(), "centroid of no points");
        let n = int(points.len() as i64);
        Point(std::array::from_fn(|i| {
            points.iter().fold(Scalar::zero(), |acc, p| acc + &p.0[i]) / &n
        }))
    }

    /// Apply `x -> m x + t`, with `m` given row-major.
    pub fn affine_map(&self, m: &[[Scalar; N]; N], t: &Vector<N>) -> Self {
        Point(std::array::from_fn(|r| {
            (0..N).fold(t[r].clone(), |acc, c| acc + &m[r][c] * &self.0[c])
        }))
    }
}

impl Point<3> {
    /// Lift into the slice `w = level` of four-space.
    pub fn lift(&self, level: Scalar) -> Point4 {
        let [x, y, z] = self.0.clone();
        Point([x, y, z, level])
    }
}

impl<const N: usize> fmt::Debug for Point<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn dot<const N: usize>(a: &Vector<N>, b: &Vector<N>) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

pub fn neg<const N: usize>(v: &Vector<N>) -> Vector<N> {
    std::array::from_fn(|i| -&v[i])
}

pub fn is_zero_vector<const N: usize>(v: &Vector<N>) -> bool {
    v.iter().all(Zero::is_zero)
}

/// A closed segment; endpoint order carries the orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment<const N: usize> {
    pub start: Point<N>,
    pub end: Point<N>,
}

pub type Segment3 = Segment<3>;
pub type Segment4 = Segment<4>;

impl<const N: usize> Segment<N> {
    pub fn new(start: Point<N>, end: Point<N>) -> Result<Self, GeometryError> {
        if start == end {
            return Err(GeometryError::DegenerateSegment);
        }
        Ok(Segment { start, end })
    }

    pub fn direction(&self) -> Vector<N> {
        self.end.sub(&self.start)
    }

    pub fn reversed(&self) -> Self {
        Segment {
            start: self.end.clone(),
            end: self.start.clone(),
        }
    }
}

/// A closed triangle; cyclic vertex order carries the orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangle<const N: usize> {
    pub vertices: [Point<N>; 3],
}

pub type Tri3 = Triangle<3>;
pub type Tri4 = Triangle<4>;

impl<const N: usize> Triangle<N> {
    pub fn new(a: Point<N>, b: Point<N>, c: Point<N>) -> Result<Self, GeometryError> {
        let t = Triangle {
            vertices: [a, b, c],
        };
        if solve_columns(&t.edge_vectors(), &[(); N].map(|_| Scalar::zero())).rank < 2 {
            return Err(GeometryError::DegenerateTriangle);
        }
        Ok(t)
    }

    /// Edge vectors `v1 - v0`, `v2 - v0`.
    pub fn edge_vectors(&self) -> [Vector<N>; 2] {
        let [a, b, c] = &self.vertices;
        [b.sub(a), c.sub(a)]
    }

    pub fn reversed(&self) -> Self {
        let [a, b, c] = self.vertices.clone();
        Triangle {
            vertices: [a, c, b],
        }
    }

    /// The three closed edges, in boundary order.
    pub fn edges(&self) -> [(Point<N>, Point<N>); 3] {
        let [a, b, c] = self.vertices.clone();
        [(a.clone(), b.clone()), (b, c.clone()), (c, a)]
    }
}
