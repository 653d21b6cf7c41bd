//! Triangles of K6 and their dual (complementary) triangles.

use serde::{Deserialize, Serialize};

use super::{ComplexError, Graph};

/// The complete graph on six vertices.
pub fn k6() -> Graph {
    Graph::complete(6)
}

/// A 3-cycle of K6, stored with sorted vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[usize; 3]", into = "[usize; 3]")]
pub struct Triangle([usize; 3]);

impl Triangle {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self, ComplexError> {
        let mut v = [a, b, c];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            return Err(ComplexError::InvalidTriangle(v));
        }
        if v[2] >= 6 {
            return Err(ComplexError::InvalidTriangle(v));
        }
        Ok(Triangle(v))
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// The triangle on the three remaining vertices of K6.
    pub fn dual(&self) -> Triangle {
        let rest: Vec<usize> = (0..6).filter(|v| !self.contains(*v)).collect();
        Triangle([rest[0], rest[1], rest[2]])
    }

    /// Edges in cyclic order `(a,b), (b,c), (c,a)`.
    pub fn edges(&self) -> [(usize, usize); 3] {
        let [a, b, c] = self.0;
        [(a, b), (b, c), (c, a)]
    }

    /// All 20 triangles in lexicographic order.
    pub fn all() -> Vec<Triangle> {
        let mut out = Vec::with_capacity(20);
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    out.push(Triangle([a, b, c]));
                }
            }
        }
        out
    }
}

impl TryFrom<[usize; 3]> for Triangle {
    type Error = ComplexError;

    fn try_from(v: [usize; 3]) -> Result<Self, Self::Error> {
        Triangle::new(v[0], v[1], v[2])
    }
}

impl From<Triangle> for [usize; 3] {
    fn from(t: Triangle) -> Self {
        t.0
    }
}

/// A triangle together with its dual. Canonically `t` contains vertex 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DualPair {
    pub t: Triangle,
    #[serde(rename = "tBar")]
    pub t_bar: Triangle,
}

impl DualPair {
    pub fn containing(t: Triangle) -> Self {
        let (t, t_bar) = if t.contains(0) { (t, t.dual()) } else { (t.dual(), t) };
        DualPair { t, t_bar }
    }
}

/// The 10 unordered pairs of dual triangles, ordered lexicographically by `t`.
pub fn dual_pairs() -> Vec<DualPair> {
    Triangle::all()
        .into_iter()
        .filter(|t| t.contains(0))
        .map(DualPair::containing)
        .collect()
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    #[test]
    fn k6_basics() {
        let g = k6();
        assert_eq!(g.edge_count(), 15);
        assert!((0..6).all(|v| g.degree(v) == 5));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(0, 2));
    }

    #[test]
    fn ten_dual_pairs_cover_all_triangles() {
        let pairs = dual_pairs();
        assert_eq!(pairs.len(), 10);
        let mut seen = BTreeSet::new();
        for p in &pairs {
            let mut all: Vec<usize> = p.t.vertices().into_iter().chain(p.t_bar.vertices()).collect();
            all.sort_unstable();
            assert_eq!(all, vec![0, 1, 2, 3, 4, 5]);
            assert!(p.t.contains(0));
            assert!(seen.insert(p.t));
            assert!(seen.insert(p.t_bar));
        }
        assert_eq!(seen.len(), 20);
        assert_eq!(pairs[0].t.vertices(), [0, 1, 2]);
        assert_eq!(pairs[0].t_bar.vertices(), [3, 4, 5]);
    }

    #[test]
    fn rejects_bad_triangles() {
        assert!(Triangle::new(0, 0, 1).is_err());
        assert!(Triangle::new(0, 1, 6).is_err());
        assert_eq!(Triangle::new(4, 2, 0).unwrap().vertices(), [0, 2, 4]);
    }
}
