use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{
    derive_seed, verify_embedding3, Diagnostics, EmbeddedK6, InvariantError, InvariantName, LinkReport, PairRecord,
    VerifyReport, Violation, TOOL_VERSION,
};
use crate::complex::{dual_pairs, k6, suspension, suspension_two_cycle, Triangle, TwoComplex};
use crate::geometry::{cells_meet_properly, int, Point3, Point4, Scalar, Segment4, Tri4};
use crate::io::Rational;
use crate::linking::{lk4, GeomCycle1, GeomCycle2};

/// Vertex index of the upper apex `a`.
pub const APEX_A: usize = 6;
/// Vertex index of the lower apex `b`.
pub const APEX_B: usize = 7;

/// S(K6) placed in four-space.
///
/// `points[0..8]` are the complex vertices (K6 then `a`, `b`); further points
/// subdivide edges and faces. Edges without a path are straight; faces
/// without a triangulation are the single flat triangle on their vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedSuspension {
    points: Vec<Point4>,
    /// Keyed by `(u, v)` with `u < v`; interior point indices from `u` to `v`.
    edge_paths: BTreeMap<(usize, usize), Vec<usize>>,
    /// Keyed by face index in `suspension(k6())`; triangles are oriented like the face.
    faces: BTreeMap<usize, Vec<[usize; 3]>>,
}

fn complex() -> TwoComplex {
    suspension(&k6())
}

impl EmbeddedSuspension {
    pub fn new(
        points: Vec<Point4>,
        edge_paths: BTreeMap<(usize, usize), Vec<usize>>,
        face_triangulations: BTreeMap<[usize; 3], Vec<[usize; 3]>>,
    ) -> Result<Self, InvariantError> {
        let bad = |m: String| Err(InvariantError::Malformed(m));
        if points.len() < 8 {
            return bad(format!("need at least 8 points, got {}", points.len()));
        }
        let c = complex();
        let mut owner: BTreeMap<usize, String> = BTreeMap::new();
        let mut paths = BTreeMap::new();
        for (&(u, v), inner) in &edge_paths {
            if c.edge_id(u, v).is_none() || u == v {
                return bad(format!("no edge {u}-{v} in the suspension"));
            }
            let mut inner = inner.clone();
            if u > v {
                inner.reverse();
            }
            for &p in &inner {
                if p < 8 || p >= points.len() {
                    return bad(format!("edge {u}-{v} uses point {p}, outside 8..{}", points.len()));
                }
                if let Some(prev) = owner.insert(p, format!("edge {u}-{v}")) {
                    return bad(format!("point {p} used by both {prev} and edge {u}-{v}"));
                }
            }
            if !inner.is_empty() && paths.insert((u.min(v), u.max(v)), inner).is_some() {
                return bad(format!("edge {u}-{v} given twice"));
            }
        }
        let mut e = EmbeddedSuspension {
            points,
            edge_paths: paths,
            faces: BTreeMap::new(),
        };
        for (&key, tris) in &face_triangulations {
            let Some(f) = c.face_id(key) else {
                return bad(format!("no face {key:?} in the suspension"));
            };
            let [x, y, z] = c.faces()[f];
            let boundary: Vec<usize> = [(x, y), (y, z), (z, x)]
                .iter()
                .flat_map(|&(u, v)| {
                    let p = e.edge_path(u, v);
                    p[..p.len() - 1].to_vec()
                })
                .collect();
            let on_boundary: BTreeSet<usize> = boundary.iter().copied().collect();
            let mut used = BTreeSet::new();
            for t in tris {
                for &p in t {
                    if p >= e.points.len() {
                        return bad(format!("face {key:?} uses point {p}, outside 0..{}", e.points.len()));
                    }
                    if !on_boundary.contains(&p) && used.insert(p) {
                        if p < 8 {
                            return bad(format!("face {key:?} uses vertex {p} not on its boundary"));
                        }
                        if let Some(prev) = owner.insert(p, format!("face {key:?}")) {
                            return bad(format!("point {p} used by both {prev} and face {key:?}"));
                        }
                    }
                }
            }
            if !is_disk_with_boundary(tris, &boundary) {
                return bad(format!("triangulation of face {key:?} is not an oriented disk on its boundary"));
            }
            if e.faces.insert(f, tris.clone()).is_some() {
                return bad(format!("face {key:?} given twice"));
            }
        }
        Ok(e)
    }

    pub fn points(&self) -> &[Point4] {
        &self.points
    }

    pub fn edge_paths(&self) -> &BTreeMap<(usize, usize), Vec<usize>> {
        &self.edge_paths
    }

    /// Explicit face triangulations, keyed by face vertex triple as listed in the complex.
    pub fn face_triangulations(&self) -> BTreeMap<[usize; 3], Vec<[usize; 3]>> {
        let c = complex();
        self.faces.iter().map(|(&f, t)| (c.faces()[f], t.clone())).collect()
    }

    /// Point indices of edge `u-v` from `u` to `v`, endpoints included.
    pub fn edge_path(&self, u: usize, v: usize) -> Vec<usize> {
        let mut path = vec![u.min(v)];
        if let Some(inner) = self.edge_paths.get(&(u.min(v), u.max(v))) {
            path.extend_from_slice(inner);
        }
        path.push(u.max(v));
        if u > v {
            path.reverse();
        }
        path
    }

    fn face_triangles(&self, c: &TwoComplex, f: usize) -> Vec<[usize; 3]> {
        match self.faces.get(&f) {
            Some(t) => t.clone(),
            None => vec![c.faces()[f]],
        }
    }

    fn tri(&self, t: [usize; 3]) -> Tri4 {
        Tri4 {
            vertices: t.map(|i| self.points[i].clone()),
        }
    }

    /// The embedded base triangle `t`, oriented along `t.edges()`.
    pub fn one_cycle(&self, t: Triangle) -> Result<GeomCycle1<4>, InvariantError> {
        let mut pts = Vec::new();
        for (u, v) in t.edges() {
            let p = self.edge_path(u, v);
            pts.extend(p[..p.len() - 1].iter().map(|&i| self.points[i].clone()));
        }
        Ok(GeomCycle1::new(pts)?)
    }

    /// The embedded suspension sphere over `t`.
    pub fn two_cycle(&self, t: Triangle) -> Result<GeomCycle2, InvariantError> {
        let c = complex();
        let z = suspension_two_cycle(&c, t)?;
        let mut tris = Vec::new();
        for &(f, o) in z.faces() {
            for tri in self.face_triangles(&c, f) {
                let t = self.tri(tri);
                tris.push(if o > 0 { t } else { t.reversed() });
            }
        }
        Ok(GeomCycle2::new(tris)?)
    }
}

/// Whether the oriented triangles form a disk whose boundary is the closed
/// point path `boundary`, traversed in order.
fn is_disk_with_boundary(tris: &[[usize; 3]], boundary: &[usize]) -> bool {
    let mut directed: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    let mut add = |p: usize, q: usize, k: i64| {
        let (key, s) = if p < q { ((p, q), k) } else { ((q, p), -k) };
        *directed.entry(key).or_default() += s;
    };
    for t in tris {
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            return false;
        }
        for k in 0..3 {
            add(t[k], t[(k + 1) % 3], 1);
        }
    }
    let n = boundary.len();
    for k in 0..n {
        add(boundary[k], boundary[(k + 1) % n], -1);
    }
    if directed.values().any(|&c| c != 0) {
        return false;
    }
    let vertices: BTreeSet<usize> = tris.iter().flatten().copied().collect();
    let edges: BTreeSet<(usize, usize)> = tris
        .iter()
        .flat_map(|t| (0..3).map(move |k| (t[k].min(t[(k + 1) % 3]), t[k].max(t[(k + 1) % 3]))))
        .collect();
    vertices.len() as i64 - edges.len() as i64 + tris.len() as i64 == 1
}

/// Every pair of cells (edge segments and face triangles) must be disjoint
/// or meet exactly in their shared vertices and edge.
pub fn verify_embedding4(e: &EmbeddedSuspension) -> VerifyReport {
    let c = complex();
    let mut violations = Vec::new();
    for i in 0..e.points.len() {
        for j in i + 1..e.points.len() {
            if e.points[i] == e.points[j] {
                violations.push(Violation {
                    kind: "coincident-points".into(),
                    first: format!("point {i}"),
                    second: format!("point {j}"),
                });
            }
        }
    }
    let name = |v: usize| match v {
        APEX_A => "a".to_string(),
        APEX_B => "b".to_string(),
        _ => v.to_string(),
    };
    let mut cells: Vec<(Vec<Point4>, String)> = Vec::new();
    for &(u, v) in c.edges() {
        let path = e.edge_path(u, v);
        for (k, w) in path.windows(2).enumerate() {
            let label = if path.len() > 2 {
                format!("edge {}-{} segment {k}", name(u), name(v))
            } else {
                format!("edge {}-{}", name(u), name(v))
            };
            if Segment4::new(e.points[w[0]].clone(), e.points[w[1]].clone()).is_err() {
                violations.push(Violation {
                    kind: "degenerate-cell".into(),
                    first: label,
                    second: String::new(),
                });
                continue;
            }
            cells.push((vec![e.points[w[0]].clone(), e.points[w[1]].clone()], label));
        }
    }
    for (f, face) in c.faces().iter().enumerate() {
        let tris = e.face_triangles(&c, f);
        let [x, y, z] = face.map(name);
        for (k, t) in tris.iter().enumerate() {
            let label = if tris.len() > 1 {
                format!("face {x}-{y}-{z} triangle {k}")
            } else {
                format!("face {x}-{y}-{z}")
            };
            let [p, q, r] = t.map(|i| e.points[i].clone());
            if crate::geometry::Triangle::new(p.clone(), q.clone(), r.clone()).is_err() {
                violations.push(Violation {
                    kind: "degenerate-cell".into(),
                    first: label,
                    second: String::new(),
                });
                continue;
            }
            cells.push((vec![p, q, r], label));
        }
    }
    let mut crossings: Vec<Violation> = (0..cells.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let cells = &cells;
            (i + 1..cells.len()).filter_map(move |j| {
                (!cells_meet_properly(&cells[i].0, &cells[j].0)).then(|| Violation {
                    kind: "improper-intersection".into(),
                    first: cells[i].1.clone(),
                    second: cells[j].1.clone(),
                })
            })
        })
        .collect();
    violations.append(&mut crossings);
    VerifyReport::from_violations(violations)
}

/// The standard embedding: `base` in the slice `w = 0`, apex `a` at
/// `(apex_a, 1)`, apex `b` at `(apex_b, -1)`, faces coned straight.
pub fn sigma6(base: &EmbeddedK6, apex_a: &Point3, apex_b: &Point3) -> Result<EmbeddedSuspension, InvariantError> {
    verify_embedding3(base).into_result()?;
    let mut points: Vec<Point4> = base.vertices().iter().map(|p| p.lift(int(0))).collect();
    points.push(apex_a.lift(int(1)));
    points.push(apex_b.lift(int(-1)));
    let mut edge_paths = BTreeMap::new();
    for (&key, inner) in base.polylines() {
        let ids = (points.len()..points.len() + inner.len()).collect();
        points.extend(inner.iter().map(|p| p.lift(int(0))));
        edge_paths.insert(key, ids);
    }
    let mut e = EmbeddedSuspension {
        points,
        edge_paths,
        faces: BTreeMap::new(),
    };
    let c = complex();
    for (f, &[x, y, apex]) in c.faces().iter().enumerate() {
        let path = e.edge_path(x, y);
        if path.len() > 2 {
            let fan = path.windows(2).map(|w| [w[0], w[1], apex]).collect();
            e.faces.insert(f, fan);
        }
    }
    Ok(e)
}

/// Linking numbers of each dual triangle with the suspension of the other,
/// and the mod-2 reduction of half their absolute sum.
pub fn big_lambda(e: &EmbeddedSuspension, seed: u64) -> Result<LinkReport, InvariantError> {
    verify_embedding4(e).into_result()?;
    let pairs: Vec<PairRecord> = dual_pairs()
        .into_par_iter()
        .enumerate()
        .map(|(i, pair)| {
            let i = i as u64;
            let forward = lk4(&e.one_cycle(pair.t)?, &e.two_cycle(pair.t_bar)?, derive_seed(seed, 2 * i))?;
            let backward = lk4(&e.one_cycle(pair.t_bar)?, &e.two_cycle(pair.t)?, derive_seed(seed, 2 * i + 1))?;
            let total = forward.value.abs() + backward.value.abs();
            Ok(PairRecord {
                pair,
                omega: None,
                omega_t_s_bar: Some(forward.value),
                omega_t_bar_s: Some(backward.value),
                big_omega: Some(Rational(Scalar::new(BigInt::from(total), BigInt::from(2)))),
                retries: forward.retries + backward.retries,
            })
        })
        .collect::<Result<_, InvariantError>>()?;
    let abs_sum: i64 = pairs
        .iter()
        .map(|p| p.omega_t_s_bar.unwrap_or(0).abs() + p.omega_t_bar_s.unwrap_or(0).abs())
        .sum();
    let parity_anomaly = abs_sum % 2 != 0;
    Ok(LinkReport {
        invariant: InvariantName::BigLambda,
        value: (!parity_anomaly).then_some(((abs_sum / 2) % 2) as u8),
        diagnostics: Diagnostics {
            retries: pairs.iter().map(|p| p.retries).sum(),
            abs_sum,
            parity_anomaly,
        },
        pairs,
        seed,
        tool_version: TOOL_VERSION.to_string(),
    })
}
