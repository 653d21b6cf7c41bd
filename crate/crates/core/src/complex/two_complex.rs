use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::graph::sorted;
use super::{ComplexError, Graph, Triangle};

/// A 2-dimensional cell complex: vertices, edges, and oriented triangular faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoComplex {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    faces: Vec<[usize; 3]>,
    apexes: Option<(usize, usize)>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl TwoComplex {
    pub fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        faces: Vec<[usize; 3]>,
        apexes: Option<(usize, usize)>,
    ) -> Result<Self, ComplexError> {
        let mut edge_index = HashMap::with_capacity(edges.len());
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(ComplexError::Loop(u));
            }
            if u.max(v) >= vertex_count {
                return Err(ComplexError::VertexOutOfRange {
                    vertex: u.max(v),
                    count: vertex_count,
                });
            }
            let e = sorted(u, v);
            if edge_index.insert(e, i).is_some() {
                return Err(ComplexError::DuplicateEdge(u, v));
            }
            normalized.push(e);
        }
        let mut seen = BTreeSet::new();
        for f in &faces {
            for &(u, v) in &face_edges(f) {
                if !edge_index.contains_key(&sorted(u, v)) {
                    return Err(ComplexError::MissingEdge(u, v));
                }
            }
            let mut key = *f;
            key.sort_unstable();
            if key[0] == key[1] || key[1] == key[2] || !seen.insert(key) {
                return Err(ComplexError::DuplicateFace(*f));
            }
        }
        if let Some((a, b)) = apexes {
            if a == b || a.max(b) >= vertex_count {
                return Err(ComplexError::NotASuspension);
            }
        }
        Ok(TwoComplex {
            vertex_count,
            edges: normalized,
            faces,
            apexes,
            edge_index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    /// The two cone points `(a, b)` when this complex is a suspension.
    pub fn apexes(&self) -> Option<(usize, usize)> {
        self.apexes
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&sorted(u, v)).copied()
    }

    pub fn face_id(&self, vertices: [usize; 3]) -> Option<usize> {
        let mut key = vertices;
        key.sort_unstable();
        self.faces.iter().position(|f| {
            let mut k = *f;
            k.sort_unstable();
            k == key
        })
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Signed coefficients of the oriented face boundary, one per edge.
    pub fn face_boundary(&self, face: usize) -> [(usize, i64); 3] {
        face_edges(&self.faces[face]).map(|(u, v)| (self.edge_index[&sorted(u, v)], if u < v { 1 } else { -1 }))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

fn face_edges(f: &[usize; 3]) -> [(usize, usize); 3] {
    [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])]
}

/// The suspension of `g`: vertices of `g` plus apexes `a = n`, `b = n + 1`.
///
/// Edges are those of `g` followed by `(v, a)` for every `v`, then `(v, b)`.
/// Each edge `{u, v}` of `g` spawns the faces `(u, v, a)` and `(u, v, b)`.
pub fn suspension(g: &Graph) -> TwoComplex {
    let n = g.vertex_count();
    let (a, b) = (n, n + 1);
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend((0..n).map(|v| (v, a)));
    edges.extend((0..n).map(|v| (v, b)));
    let faces = g.edges().flat_map(|(u, v)| [[u, v, a], [u, v, b]]).collect();
    TwoComplex::new(n + 2, edges, faces, Some((a, b))).expect("suspension of a simple graph is well formed")
}

/// A simple closed edge path, stored in canonical form: the smallest vertex
/// first and the smaller of its two neighbours second.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct AbstractOneCycle(Vec<usize>);

impl TryFrom<Vec<usize>> for AbstractOneCycle {
    type Error = ComplexError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        AbstractOneCycle::new(v)
    }
}

impl From<AbstractOneCycle> for Vec<usize> {
    fn from(c: AbstractOneCycle) -> Self {
        c.0
    }
}

impl AbstractOneCycle {
    pub fn new(vertices: Vec<usize>) -> Result<Self, ComplexError> {
        let distinct: BTreeSet<usize> = vertices.iter().copied().collect();
        if vertices.len() < 3 || distinct.len() != vertices.len() {
            return Err(ComplexError::InvalidCycle(vertices));
        }
        let start = (0..vertices.len()).min_by_key(|&i| vertices[i]).expect("nonempty");
        let mut rotated: Vec<usize> = vertices[start..].iter().chain(&vertices[..start]).copied().collect();
        if rotated[1] > rotated[rotated.len() - 1] {
            rotated[1..].reverse();
        }
        Ok(AbstractOneCycle(rotated))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i], self.0[(i + 1) % n]))
    }

    pub fn lies_in(&self, c: &TwoComplex) -> bool {
        self.edges().all(|(u, v)| c.edge_id(u, v).is_some())
    }
}

impl From<Triangle> for AbstractOneCycle {
    fn from(t: Triangle) -> Self {
        AbstractOneCycle(t.vertices().to_vec())
    }
}

/// A set of faces with an orientation (+1 or -1) per face, sorted by face index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbstractTwoCycle {
    faces: Vec<(usize, i8)>,
}

impl AbstractTwoCycle {
    pub fn new(mut faces: Vec<(usize, i8)>) -> Self {
        faces.sort_unstable();
        AbstractTwoCycle { faces }
    }

    pub fn faces(&self) -> &[(usize, i8)] {
        &self.faces
    }

    pub fn face_indices(&self) -> Vec<usize> {
        self.faces.iter().map(|&(f, _)| f).collect()
    }

    /// Every face reversed.
    pub fn reversed(&self) -> Self {
        AbstractTwoCycle {
            faces: self.faces.iter().map(|&(f, o)| (f, -o)).collect(),
        }
    }

    pub fn vertices(&self, c: &TwoComplex) -> BTreeSet<usize> {
        self.faces.iter().flat_map(|&(f, _)| c.faces()[f]).collect()
    }

    /// Edge ids covered by at least one face.
    pub fn edges(&self, c: &TwoComplex) -> BTreeSet<usize> {
        self.faces
            .iter()
            .flat_map(|&(f, _)| c.face_boundary(f).map(|(e, _)| e))
            .collect()
    }

    pub fn mod2_boundary(&self, c: &TwoComplex) -> Vec<bool> {
        let mut out = vec![false; c.edges().len()];
        for &(f, _) in &self.faces {
            for (e, _) in c.face_boundary(f) {
                out[e] ^= true;
            }
        }
        out
    }

    pub fn signed_boundary(&self, c: &TwoComplex) -> Vec<i64> {
        let mut out = vec![0; c.edges().len()];
        for &(f, o) in &self.faces {
            for (e, s) in c.face_boundary(f) {
                out[e] += s * o as i64;
            }
        }
        out
    }

    pub fn euler_characteristic(&self, c: &TwoComplex) -> i64 {
        self.vertices(c).len() as i64 - self.edges(c).len() as i64 + self.faces.len() as i64
    }

    /// Faces as oriented vertex triples (reversed where the flag is -1).
    pub fn oriented_faces(&self, c: &TwoComplex) -> Vec<[usize; 3]> {
        self.faces
            .iter()
            .map(|&(f, o)| {
                let [x, y, z] = c.faces()[f];
                if o > 0 {
                    [x, y, z]
                } else {
                    [x, z, y]
                }
            })
            .collect()
    }
}

/// Propagate an orientation breadth-first over the face adjacency graph,
/// starting each connected component at +1. Returns `None` when two faces
/// sharing an edge cannot be made to induce opposite orientations on it.
pub fn orient_faces(c: &TwoComplex, support: &[usize]) -> Option<Vec<(usize, i8)>> {
    let mut by_edge: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
    for &f in support {
        for (e, s) in c.face_boundary(f) {
            by_edge.entry(e).or_default().push((f, s));
        }
    }
    let mut orientation: HashMap<usize, i8> = HashMap::new();
    for &root in support {
        if orientation.contains_key(&root) {
            continue;
        }
        orientation.insert(root, 1);
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            let of = orientation[&f] as i64;
            for (e, s) in c.face_boundary(f) {
                for &(g, t) in &by_edge[&e] {
                    if g == f {
                        continue;
                    }
                    // Opposite induced orientations on the shared edge.
                    let want = (-(s * of) * t) as i8;
                    match orientation.get(&g) {
                        Some(&og) if og != want => return None,
                        Some(_) => {}
                        None => {
                            orientation.insert(g, want);
                            queue.push_back(g);
                        }
                    }
                }
            }
        }
    }
    let mut out: Vec<(usize, i8)> = orientation.into_iter().collect();
    out.sort_unstable();
    Some(out)
}

/// The suspension `S(t)` of a base triangle as an oriented 2-cycle: the six
/// faces coning the edges of `t` to both apexes.
pub fn suspension_two_cycle(c: &TwoComplex, t: Triangle) -> Result<AbstractTwoCycle, ComplexError> {
    let (a, b) = c.apexes().ok_or(ComplexError::NotASuspension)?;
    let mut support = Vec::with_capacity(6);
    for (u, v) in t.edges() {
        if u.max(v) >= c.vertex_count() || u == a || u == b || v == a || v == b || c.edge_id(u, v).is_none() {
            return Err(ComplexError::MissingEdge(u, v));
        }
        for apex in [a, b] {
            support.push(c.face_id([u, v, apex]).ok_or(ComplexError::MissingEdge(u, v))?);
        }
    }
    support.sort_unstable();
    let faces = orient_faces(c, &support).ok_or(ComplexError::NonOrientable)?;
    Ok(AbstractTwoCycle::new(faces))
}
