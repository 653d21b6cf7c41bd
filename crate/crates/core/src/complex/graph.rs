use std::collections::BTreeSet;

use super::ComplexError;

/// A finite simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    /// Build a graph, rejecting loops, duplicate edges, and out-of-range endpoints.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, ComplexError> {
        let mut g = Graph::empty(vertex_count);
        for (u, v) in edges {
            if u == v {
                return Err(ComplexError::Loop(u));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(ComplexError::VertexOutOfRange {
                    vertex: u.max(v),
                    count: vertex_count,
                });
            }
            if !g.edges.insert(sorted(u, v)) {
                return Err(ComplexError::DuplicateEdge(u, v));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.edges.insert((u, v));
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle graphs need at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle graph is simple")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).expect("Petersen graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted pairs, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&sorted(u, v))
    }

    /// Adds an edge; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, ComplexError> {
        if u == v {
            return Err(ComplexError::Loop(u));
        }
        if u.max(v) >= self.vertex_count {
            return Err(ComplexError::VertexOutOfRange {
                vertex: u.max(v),
                count: self.vertex_count,
            });
        }
        Ok(self.edges.insert(sorted(u, v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Replace edge `{u, v}` by a path through `extra` new vertices.
    pub fn subdivide_edge(&self, u: usize, v: usize, extra: usize) -> Result<Self, ComplexError> {
        if !self.has_edge(u, v) {
            return Err(ComplexError::MissingEdge(u, v));
        }
        let mut g = Graph::empty(self.vertex_count + extra);
        g.edges = self.edges.clone();
        g.edges.remove(&sorted(u, v));
        let mut path = vec![u];
        path.extend(self.vertex_count..self.vertex_count + extra);
        path.push(v);
        for w in path.windows(2) {
            g.edges.insert(sorted(w[0], w[1]));
        }
        Ok(g)
    }
}

pub(crate) fn sorted(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}
