use std::collections::{BTreeSet, HashMap};

use super::LinkingError;
use crate::geometry::{cells_meet_properly, seg_seg_classify, Point, Point4, Scalar, SegSegClass, Segment, Tri4, Triangle, Vector};

/// An oriented simple closed polyline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeomCycle1<const N: usize> {
    points: Vec<Point<N>>,
}

impl<const N: usize> GeomCycle1<N> {
    /// Validates the polyline is closed and simple.
    pub fn new(points: Vec<Point<N>>) -> Result<Self, LinkingError> {
        let n = points.len();
        if n < 3 {
            return Err(LinkingError::TooFewPoints { min: 3, got: n });
        }
        for i in 0..n {
            if points[i] == points[(i + 1) % n] {
                return Err(LinkingError::RepeatedPoint(i, (i + 1) % n));
            }
        }
        let cycle = GeomCycle1 { points };
        let segs = cycle.segments();
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                let expected = if adjacent {
                    SegSegClass::SharedEndpointOnly
                } else {
                    SegSegClass::Disjoint
                };
                if seg_seg_classify(&segs[i], &segs[j]) != expected {
                    return Err(LinkingError::SelfIntersection(i, j));
                }
            }
        }
        Ok(cycle)
    }

    pub fn points(&self) -> &[Point<N>] {
        &self.points
    }

    /// Segments `p_i -> p_{i+1}`, closing back to `p_0`.
    pub fn segments(&self) -> Vec<Segment<N>> {
        let n = self.points.len();
        (0..n)
            .map(|i| Segment {
                start: self.points[i].clone(),
                end: self.points[(i + 1) % n].clone(),
            })
            .collect()
    }

    pub fn reversed(&self) -> Self {
        let mut points = self.points.clone();
        points.reverse();
        GeomCycle1 { points }
    }

    /// Insert `p` after vertex `i`, re-validating simplicity.
    pub fn with_inserted(&self, i: usize, p: Point<N>) -> Result<Self, LinkingError> {
        let mut points = self.points.clone();
        points.insert(i + 1, p);
        GeomCycle1::new(points)
    }

    /// Image under `x -> m x + t`. An invertible map keeps the cycle simple.
    pub fn mapped(&self, m: &[[Scalar; N]; N], t: &Vector<N>) -> Self {
        GeomCycle1 {
            points: self.points.iter().map(|p| p.affine_map(m, t)).collect(),
        }
    }
}

/// An oriented closed surface in four-space, as a list of oriented triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeomCycle2 {
    triangles: Vec<Tri4>,
}

impl GeomCycle2 {
    /// Validates: non-degenerate triangles; every directed edge matched by
    /// exactly one reversed copy; circular vertex links; no overlaps.
    pub fn new(triangles: Vec<Tri4>) -> Result<Self, LinkingError> {
        for (i, t) in triangles.iter().enumerate() {
            let [a, b, c] = t.vertices.clone();
            Triangle::new(a, b, c).map_err(|_| LinkingError::DegenerateTriangle(i))?;
        }
        let mut ids: HashMap<&Point4, usize> = HashMap::new();
        let faces: Vec<[usize; 3]> = triangles
            .iter()
            .map(|t| {
                t.vertices.each_ref().map(|p| {
                    let next = ids.len();
                    *ids.entry(p).or_insert(next)
                })
            })
            .collect();

        let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
        for f in &faces {
            for k in 0..3 {
                *directed.entry((f[k], f[(k + 1) % 3])).or_default() += 1;
            }
        }
        for (&(u, v), &k) in &directed {
            if k != 1 || directed.get(&(v, u)) != Some(&1) {
                return Err(LinkingError::NotClosed);
            }
        }
        for v in 0..ids.len() {
            if !link_is_circle(&faces, v) {
                return Err(LinkingError::NotASurface("vertex link is not a single circle"));
            }
        }
        for i in 0..triangles.len() {
            for j in i + 1..triangles.len() {
                if !cells_meet_properly(&triangles[i].vertices, &triangles[j].vertices) {
                    return Err(LinkingError::SurfaceOverlap(i, j));
                }
            }
        }
        Ok(GeomCycle2 { triangles })
    }

    pub fn triangles(&self) -> &[Tri4] {
        &self.triangles
    }

    pub fn reversed(&self) -> Self {
        GeomCycle2 {
            triangles: self.triangles.iter().map(Triangle::reversed).collect(),
        }
    }

    /// Replace triangle `i` by three triangles fanned from the interior point `p`.
    pub fn with_split(&self, i: usize, p: Point4) -> Result<Self, LinkingError> {
        let [a, b, c] = self.triangles[i].vertices.clone();
        let mut triangles = self.triangles.clone();
        triangles.splice(
            i..=i,
            [
                Triangle {
                    vertices: [a.clone(), b.clone(), p.clone()],
                },
                Triangle {
                    vertices: [b, c.clone(), p.clone()],
                },
                Triangle {
                    vertices: [c, a, p],
                },
            ],
        );
        GeomCycle2::new(triangles)
    }

    pub fn mapped(&self, m: &[[Scalar; 4]; 4], t: &Vector<4>) -> Self {
        GeomCycle2 {
            triangles: self
                .triangles
                .iter()
                .map(|tri| Triangle {
                    vertices: tri.vertices.each_ref().map(|p| p.affine_map(m, t)),
                })
                .collect(),
        }
    }
}

fn link_is_circle(faces: &[[usize; 3]], v: usize) -> bool {
    let link: Vec<(usize, usize)> = faces
        .iter()
        .filter(|f| f.contains(&v))
        .map(|f| {
            let o: Vec<usize> = f.iter().copied().filter(|&x| x != v).collect();
            (o[0], o[1])
        })
        .collect();
    let nodes: BTreeSet<usize> = link.iter().flat_map(|&(a, b)| [a, b]).collect();
    let Some(&first) = nodes.first() else {
        return false;
    };
    let mut seen = BTreeSet::from([first]);
    let mut stack = vec![first];
    while let Some(x) = stack.pop() {
        for &(a, b) in &link {
            let y = match (a == x, b == x) {
                (true, _) => b,
                (_, true) => a,
                _ => continue,
            };
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.len() == nodes.len()
}
