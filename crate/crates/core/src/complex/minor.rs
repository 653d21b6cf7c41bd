//! K6-minor testing by exhaustive contraction search.
//!
//! A graph has a K6 minor iff some sequence of edge contractions produces a
//! graph with K6 as a subgraph, so deletions never need to be branched on.
//! Vertices of degree at most two are removed or suppressed up front: K6 has
//! minimum degree five, so they can never be needed as branch vertices.

use std::collections::HashSet;

use super::{ComplexError, Graph, Guards};

const TARGET: usize = 6;
const TARGET_EDGES: usize = 15;

pub fn has_k6_minor(g: &Graph) -> Result<bool, ComplexError> {
    has_k6_minor_with(g, &Guards::default())
}

pub fn has_k6_minor_with(g: &Graph, guards: &Guards) -> Result<bool, ComplexError> {
    guards.check("minor search vertices", g.vertex_count(), guards.max_minor_vertices.min(32))?;
    let mut adj = vec![0u32; g.vertex_count()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut failed = HashSet::new();
    Ok(search(reduce(adj), &mut failed))
}

fn edge_count(adj: &[u32]) -> usize {
    adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
}

fn search(adj: Vec<u32>, failed: &mut HashSet<Vec<u32>>) -> bool {
    let n = adj.len();
    if n < TARGET || edge_count(&adj) < TARGET_EDGES {
        return false;
    }
    if has_k6_subgraph(&adj) {
        return true;
    }
    if failed.contains(&adj) {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 && search(reduce(contract(&adj, u, v)), failed) {
                return true;
            }
        }
    }
    failed.insert(adj);
    false
}

/// Merge `v` into `u` and drop `v`, keeping the remaining labels in order.
fn contract(adj: &[u32], u: usize, v: usize) -> Vec<u32> {
    let mut merged = adj.to_vec();
    merged[u] = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
    for w in 0..adj.len() {
        if w != u && w != v && adj[w] >> v & 1 == 1 {
            merged[w] = (merged[w] & !(1 << v)) | 1 << u;
        }
    }
    remove_vertex(&merged, v)
}

fn remove_vertex(adj: &[u32], v: usize) -> Vec<u32> {
    let low = (1u32 << v) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, &m)| (m & low) | ((m >> 1) & !low))
        .collect()
}

/// Delete vertices of degree <= 1 and suppress degree-2 vertices until none remain.
fn reduce(mut adj: Vec<u32>) -> Vec<u32> {
    loop {
        let Some(v) = (0..adj.len()).find(|&v| adj[v].count_ones() <= 2) else {
            return adj;
        };
        let m = adj[v];
        if m.count_ones() == 2 {
            let x = m.trailing_zeros() as usize;
            let y = 31 - m.leading_zeros() as usize;
            adj[x] |= 1 << y;
            adj[y] |= 1 << x;
        }
        for w in 0..adj.len() {
            adj[w] &= !(1 << v);
        }
        adj = remove_vertex(&adj, v);
    }
}

fn has_k6_subgraph(adj: &[u32]) -> bool {
    let candidates = (0..adj.len())
        .filter(|&v| adj[v].count_ones() as usize >= TARGET - 1)
        .fold(0u32, |m, v| m | 1 << v);
    extend_clique(adj, candidates, 0)
}

fn extend_clique(adj: &[u32], candidates: u32, size: usize) -> bool {
    if size == TARGET {
        return true;
    }
    if (candidates.count_ones() as usize) < TARGET - size {
        return false;
    }
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        // Only later candidates, so each clique is built in increasing order.
        if extend_clique(adj, rest & adj[v], size + 1) {
            return true;
        }
    }
    false
}
