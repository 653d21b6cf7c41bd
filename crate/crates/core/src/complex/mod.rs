//! Abstract graphs and 2-complexes: K6 combinatorics, suspensions, cycle
//! spaces, closed-surface detection, and K6-minor testing.

mod cycles;
mod graph;
mod k6;
mod minor;
mod two_complex;

pub use cycles::{
    as_closed_surface, enumerate_one_cycles, enumerate_one_cycles_with, lemma32_pairs, lemma32_pairs_with,
    mod2_cycle_basis, mod2_cycle_basis_with, span, surface_two_cycles, surface_two_cycles_with,
};
pub use graph::Graph;
pub use k6::{dual_pairs, k6, DualPair, Triangle};
pub use minor::{has_k6_minor, has_k6_minor_with};
pub use two_complex::{orient_faces, suspension, suspension_two_cycle, AbstractOneCycle, AbstractTwoCycle, TwoComplex};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("edge {0}-{1} is not in the complex")]
    MissingEdge(usize, usize),
    #[error("duplicate or degenerate face {0:?}")]
    DuplicateFace([usize; 3]),
    #[error("invalid triangle {0:?}")]
    InvalidTriangle([usize; 3]),
    #[error("invalid cycle {0:?}")]
    InvalidCycle(Vec<usize>),
    #[error("complex is not a suspension")]
    NotASuspension,
    #[error("face support is not orientable")]
    NonOrientable,
    #[error("{what} is {actual}, above the limit of {limit}")]
    GuardExceeded { what: &'static str, actual: usize, limit: usize },
}

/// Size limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    pub max_cycle_vertices: usize,
    pub max_surface_faces: usize,
    pub max_cycle_rank: usize,
    pub max_minor_vertices: usize,
}

pub const MAX_CYCLE_VERTICES: usize = 9;
pub const MAX_SURFACE_FACES: usize = 40;
pub const MAX_CYCLE_RANK: usize = 12;
pub const MAX_MINOR_VERTICES: usize = 12;

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_cycle_vertices: MAX_CYCLE_VERTICES,
            max_surface_faces: MAX_SURFACE_FACES,
            max_cycle_rank: MAX_CYCLE_RANK,
            max_minor_vertices: MAX_MINOR_VERTICES,
        }
    }
}

impl Guards {
    fn check(&self, what: &'static str, actual: usize, limit: usize) -> Result<(), ComplexError> {
        if actual > limit {
            return Err(ComplexError::GuardExceeded { what, actual, limit });
        }
        Ok(())
    }
}
