//! Exact PL linking invariants for spatial embeddings of K6 and for
//! embeddings of its suspension S(K6) in four-space.

pub mod cli;
pub mod complex;
pub mod geometry;
pub mod invariants;
pub mod io;
pub mod linking;
