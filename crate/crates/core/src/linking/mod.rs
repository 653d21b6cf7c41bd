//! PL linking numbers: closed polyline vs closed polyline in three-space, and
//! closed polyline vs closed triangulated surface in four-space.
//!
//! Both are computed by coning the 1-cycle to a random rational apex and
//! counting signed transverse hits of the cone with the other cycle. The
//! apex only affects the bookkeeping (`apex`, `retries`), never the value.

mod cone;
mod cycle;
mod oracle;

pub use cone::{lk3, lk4, RETRY_BUDGET};
pub use cycle::{GeomCycle1, GeomCycle2};
pub use oracle::{lk3_projection_oracle, lk4_chain_oracle};

use thiserror::Error;

use crate::geometry::Point;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkingError {
    #[error("cycle needs at least {min} points, got {got}")]
    TooFewPoints { min: usize, got: usize },
    #[error("consecutive points {0} and {1} coincide")]
    RepeatedPoint(usize, usize),
    #[error("polyline segments {0} and {1} intersect")]
    SelfIntersection(usize, usize),
    #[error("triangle {0} is degenerate")]
    DegenerateTriangle(usize),
    #[error("surface boundary does not vanish")]
    NotClosed,
    #[error("surface is not a closed orientable surface: {0}")]
    NotASurface(&'static str),
    #[error("surface triangles {0} and {1} overlap")]
    SurfaceOverlap(usize, usize),
    #[error("cycles are not disjoint")]
    NotDisjoint,
    #[error("no generic configuration found in {0} attempts")]
    RetryBudgetExhausted(u32),
    #[error("surface is not the suspension of a flat triangle: {0}")]
    NotSuspensionShaped(&'static str),
}

/// A linking number with the bookkeeping that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingResult<const N: usize> {
    pub value: i64,
    pub apex: Point<N>,
    /// Apex draws rejected as non-generic before this one.
    pub retries: u32,
}
