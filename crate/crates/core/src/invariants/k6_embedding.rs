use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{derive_seed, Diagnostics, InvariantError, InvariantName, LinkReport, PairRecord, VerifyReport, Violation, TOOL_VERSION};
use crate::complex::{dual_pairs, Triangle};
use crate::geometry::{seg_seg_classify, Point, Point3, SegSegClass, Segment3};
use crate::linking::{lk3, GeomCycle1, LinkingError};

/// K6 placed in three-space: six vertices, each edge straight unless it has
/// a polyline of interior points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedK6 {
    vertices: [Point3; 6],
    /// Keyed by `(u, v)` with `u < v`; points run from `u` towards `v`.
    polylines: BTreeMap<(usize, usize), Vec<Point3>>,
}

impl EmbeddedK6 {
    pub fn new(vertices: [Point3; 6]) -> Self {
        EmbeddedK6 {
            vertices,
            polylines: BTreeMap::new(),
        }
    }

    /// Route edge `u-v` through `interior` (listed from `u` to `v`).
    pub fn with_polyline(mut self, u: usize, v: usize, mut interior: Vec<Point3>) -> Result<Self, InvariantError> {
        if u == v || u.max(v) >= 6 {
            return Err(InvariantError::Malformed(format!("no edge {u}-{v} in K6")));
        }
        if u > v {
            interior.reverse();
        }
        let key = (u.min(v), u.max(v));
        if interior.is_empty() {
            self.polylines.remove(&key);
        } else {
            self.polylines.insert(key, interior);
        }
        Ok(self)
    }

    pub fn vertices(&self) -> &[Point3; 6] {
        &self.vertices
    }

    pub fn polylines(&self) -> &BTreeMap<(usize, usize), Vec<Point3>> {
        &self.polylines
    }

    /// Points of edge `u-v` from `u` to `v`, endpoints included.
    pub fn edge_path(&self, u: usize, v: usize) -> Vec<Point3> {
        let mut path = vec![self.vertices[u.min(v)].clone()];
        if let Some(inner) = self.polylines.get(&(u.min(v), u.max(v))) {
            path.extend(inner.iter().cloned());
        }
        path.push(self.vertices[u.max(v)].clone());
        if u > v {
            path.reverse();
        }
        path
    }

    /// The embedded triangle `t`, oriented along `t.edges()`.
    pub fn triangle_cycle(&self, t: Triangle) -> Result<GeomCycle1<3>, LinkingError> {
        let mut points = Vec::new();
        for (u, v) in t.edges() {
            let path = self.edge_path(u, v);
            points.extend_from_slice(&path[..path.len() - 1]);
        }
        GeomCycle1::new(points)
    }

    pub fn translated(&self, offset: &[crate::geometry::Scalar; 3]) -> Self {
        EmbeddedK6 {
            vertices: self.vertices.each_ref().map(|p| p.translate(offset)),
            polylines: self
                .polylines
                .iter()
                .map(|(k, pts)| (*k, pts.iter().map(|p| p.translate(offset)).collect()))
                .collect(),
        }
    }
}

/// Vertex i at `(i, i^2, i^3)` for `i = 1..=6`; no two chords meet because
/// any four of these points are affinely independent.
pub fn moment_curve_k6() -> EmbeddedK6 {
    EmbeddedK6::new(std::array::from_fn(|i| {
        let t = i as i64 + 1;
        Point::from_ints([t, t * t, t * t * t])
    }))
}

struct Piece {
    nodes: (usize, usize),
    ends: (Point3, Point3),
    label: String,
}

/// Every pair of edge pieces must be disjoint, or meet only in the single
/// graph point they share.
pub fn verify_embedding3(e: &EmbeddedK6) -> VerifyReport {
    let mut points: Vec<(Point3, String)> = e
        .vertices
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), format!("vertex {i}")))
        .collect();
    let mut pieces = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            let mut nodes = vec![u];
            if let Some(inner) = e.polylines.get(&(u, v)) {
                for (k, p) in inner.iter().enumerate() {
                    nodes.push(points.len());
                    points.push((p.clone(), format!("edge {u}-{v} point {k}")));
                }
            }
            nodes.push(v);
            let split = nodes.len() > 2;
            for (k, w) in nodes.windows(2).enumerate() {
                pieces.push(Piece {
                    nodes: (w[0], w[1]),
                    ends: (points[w[0]].0.clone(), points[w[1]].0.clone()),
                    label: if split {
                        format!("edge {u}-{v} segment {k}")
                    } else {
                        format!("edge {u}-{v}")
                    },
                });
            }
        }
    }

    let mut violations = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].0 == points[j].0 {
                violations.push(Violation {
                    kind: "coincident-points".into(),
                    first: points[i].1.clone(),
                    second: points[j].1.clone(),
                });
            }
        }
    }
    let segments: Vec<Option<Segment3>> = pieces
        .iter()
        .map(|p| Segment3::new(p.ends.0.clone(), p.ends.1.clone()).ok())
        .collect();
    for i in 0..pieces.len() {
        let Some(si) = &segments[i] else { continue };
        for j in i + 1..pieces.len() {
            let Some(sj) = &segments[j] else { continue };
            let (a, b) = (pieces[i].nodes, pieces[j].nodes);
            let shares = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
            let expected = if shares {
                SegSegClass::SharedEndpointOnly
            } else {
                SegSegClass::Disjoint
            };
            if seg_seg_classify(si, sj) != expected {
                violations.push(Violation {
                    kind: "crossing".into(),
                    first: pieces[i].label.clone(),
                    second: pieces[j].label.clone(),
                });
            }
        }
    }
    VerifyReport::from_violations(violations)
}

/// Linking numbers of the ten dual triangle pairs and their absolute sum mod 2.
pub fn lambda(e: &EmbeddedK6, seed: u64) -> Result<LinkReport, InvariantError> {
    verify_embedding3(e).into_result()?;
    let pairs: Vec<PairRecord> = dual_pairs()
        .into_par_iter()
        .enumerate()
        .map(|(i, pair)| {
            let a = e.triangle_cycle(pair.t)?;
            let b = e.triangle_cycle(pair.t_bar)?;
            let r = lk3(&a, &b, derive_seed(seed, i as u64))?;
            Ok(PairRecord {
                pair,
                omega: Some(r.value),
                omega_t_s_bar: None,
                omega_t_bar_s: None,
                big_omega: None,
                retries: r.retries,
            })
        })
        .collect::<Result<_, InvariantError>>()?;
    let abs_sum: i64 = pairs.iter().map(|p| p.omega.unwrap_or(0).abs()).sum();
    Ok(LinkReport {
        invariant: InvariantName::Lambda,
        value: Some((abs_sum % 2) as u8),
        diagnostics: Diagnostics {
            retries: pairs.iter().map(|p| p.retries).sum(),
            abs_sum,
            parity_anomaly: false,
        },
        pairs,
        seed,
        tool_version: TOOL_VERSION.to_string(),
    })
}

/// Six integer points uniform in `[-bound, bound]^3`, redrawn until the
/// straight-line K6 on them is an embedding.
pub fn random_generic_k6(seed: u64, bound: i64) -> Result<EmbeddedK6, InvariantError> {
    if bound < 8 {
        return Err(InvariantError::BoundTooSmall(bound));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let e = EmbeddedK6::new(std::array::from_fn(|_| {
            Point::from_ints(std::array::from_fn(|_| rng.gen_range(-bound..=bound)))
        }));
        if verify_embedding3(&e).valid {
            return Ok(e);
        }
    }
}
