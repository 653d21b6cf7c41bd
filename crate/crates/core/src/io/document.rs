use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Rational;
use crate::complex::{Graph, TwoComplex};
use crate::geometry::{Point, Point3};
use crate::invariants::{EmbeddedK6, EmbeddedSuspension};

pub const SCHEMA_VERSION: &str = "1";

/// A parse or validation error, located by line/column and/or field path.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct DocumentError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub field: Option<String>,
    pub message: String,
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let (Some(l), Some(c)) = (self.line, self.column) {
            write!(f, "line {l}, column {c}: ")?;
        }
        if let Some(field) = &self.field {
            write!(f, "field `{field}`: ")?;
        }
        f.write_str(&self.message)
    }
}

impl DocumentError {
    fn at(field: impl Into<String>, message: impl Into<String>) -> Self {
        DocumentError {
            line: None,
            column: None,
            field: Some(field.into()),
            message: message.into(),
        }
    }

    fn from_json(e: &serde_json::Error, field: Option<String>) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; the position is kept separately.
        let message = match message.rfind(" at line ") {
            Some(i) if e.line() > 0 => message[..i].to_string(),
            _ => message,
        };
        DocumentError {
            line: (e.line() > 0).then_some(e.line()),
            column: (e.line() > 0).then_some(e.column()),
            field: field.filter(|f| !f.is_empty() && f != "."),
            message,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct GraphDocument {
    pub schema_version: String,
    pub kind: String,
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
}

/// An edge routed through extra points, listed from `edge[0]` to `edge[1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgePath {
    pub edge: [usize; 2],
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceTriangulation {
    pub face: [usize; 3],
    pub triangles: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct EmbeddedK6Document {
    pub schema_version: String,
    pub kind: String,
    /// The six K6 vertices, then any polyline points.
    pub vertices: Vec<[Rational; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub polylines: Vec<EdgePath>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct EmbeddedSuspensionDocument {
    pub schema_version: String,
    pub kind: String,
    /// Vertices 0..5 of K6, apex `a` = 6, apex `b` = 7, then subdivision points.
    pub vertices: Vec<[Rational; 4]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edge_paths: Vec<EdgePath>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub face_triangulations: Vec<FaceTriangulation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct TwoComplexDocument {
    pub schema_version: String,
    pub kind: String,
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub apexes: Option<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingDocument {
    Graph(GraphDocument),
    EmbeddedK6(EmbeddedK6Document),
    EmbeddedSuspension(EmbeddedSuspensionDocument),
    TwoComplex(TwoComplexDocument),
}

pub const KIND_GRAPH: &str = "graph";
pub const KIND_K6: &str = "embedded-k6";
pub const KIND_SUSPENSION: &str = "embedded-suspension";
pub const KIND_TWO_COMPLEX: &str = "two-complex";

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct Header {
    schema_version: Option<serde_json::Value>,
    kind: Option<serde_json::Value>,
}

fn typed<T: DeserializeOwned>(bytes: &[u8]) -> Result<T, DocumentError> {
    let de = &mut serde_json::Deserializer::from_slice(bytes);
    let value = serde_path_to_error::deserialize(&mut *de)
        .map_err(|e| DocumentError::from_json(e.inner(), Some(e.path().to_string())))?;
    de.end().map_err(|e| DocumentError::from_json(&e, None))?;
    Ok(value)
}

/// Parse and fully validate an embedding document.
pub fn parse_document(bytes: &[u8]) -> Result<EmbeddingDocument, DocumentError> {
    let header: Header = typed(bytes)?;
    match header.schema_version {
        Some(serde_json::Value::String(v)) if v == SCHEMA_VERSION => {}
        Some(v) => return Err(DocumentError::at("schemaVersion", format!("unknown schema version {v}"))),
        None => return Err(DocumentError::at("schemaVersion", "missing")),
    }
    let doc = match header.kind.as_ref().and_then(|k| k.as_str()) {
        Some(KIND_GRAPH) => EmbeddingDocument::Graph(typed(bytes)?),
        Some(KIND_K6) => EmbeddingDocument::EmbeddedK6(typed(bytes)?),
        Some(KIND_SUSPENSION) => EmbeddingDocument::EmbeddedSuspension(typed(bytes)?),
        Some(KIND_TWO_COMPLEX) => EmbeddingDocument::TwoComplex(typed(bytes)?),
        Some(k) => return Err(DocumentError::at("kind", format!("unknown kind {k:?}"))),
        None => return Err(DocumentError::at("kind", "missing or not a string")),
    };
    doc.validate()?;
    Ok(doc)
}

/// Pretty JSON with a trailing newline; field order is fixed by the types.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

/// Parse any report type, with positioned errors.
pub fn parse_report<T: DeserializeOwned>(bytes: &[u8]) -> Result<T, DocumentError> {
    typed(bytes)
}

fn check_index(field: String, i: usize, count: usize) -> Result<(), DocumentError> {
    if i >= count {
        Err(DocumentError::at(field, format!("index {i} out of range for {count} vertices")))
    } else {
        Ok(())
    }
}

fn check_paths(paths: &[EdgePath], fixed: usize, count: usize, field: &str) -> Result<(), DocumentError> {
    let mut used = BTreeSet::new();
    for (i, p) in paths.iter().enumerate() {
        for (k, &v) in p.edge.iter().enumerate() {
            check_index(format!("{field}[{i}].edge[{k}]"), v, fixed)?;
        }
        for (k, &v) in p.path.iter().enumerate() {
            let f = format!("{field}[{i}].path[{k}]");
            check_index(f.clone(), v, count)?;
            if v < fixed {
                return Err(DocumentError::at(f, format!("path point {v} is a complex vertex")));
            }
            if !used.insert(v) {
                return Err(DocumentError::at(f, format!("point {v} used by more than one path")));
            }
        }
    }
    Ok(())
}

impl EmbeddingDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            EmbeddingDocument::Graph(_) => KIND_GRAPH,
            EmbeddingDocument::EmbeddedK6(_) => KIND_K6,
            EmbeddingDocument::EmbeddedSuspension(_) => KIND_SUSPENSION,
            EmbeddingDocument::TwoComplex(_) => KIND_TWO_COMPLEX,
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            EmbeddingDocument::Graph(d) => to_json(d),
            EmbeddingDocument::EmbeddedK6(d) => to_json(d),
            EmbeddingDocument::EmbeddedSuspension(d) => to_json(d),
            EmbeddingDocument::TwoComplex(d) => to_json(d),
        }
    }

    fn validate(&self) -> Result<(), DocumentError> {
        match self {
            EmbeddingDocument::Graph(d) => d.to_graph().map(drop),
            EmbeddingDocument::EmbeddedK6(d) => d.to_embedding().map(drop),
            EmbeddingDocument::EmbeddedSuspension(d) => d.to_embedding().map(drop),
            EmbeddingDocument::TwoComplex(d) => d.to_complex().map(drop),
        }
    }
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument {
            schema_version: SCHEMA_VERSION.into(),
            kind: KIND_GRAPH.into(),
            vertex_count: g.vertex_count(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, DocumentError> {
        for (i, e) in self.edges.iter().enumerate() {
            for (k, &v) in e.iter().enumerate() {
                check_index(format!("edges[{i}][{k}]"), v, self.vertex_count)?;
            }
        }
        Graph::new(self.vertex_count, self.edges.iter().map(|e| (e[0], e[1])))
            .map_err(|e| DocumentError::at("edges", e.to_string()))
    }
}

impl EmbeddedK6Document {
    pub fn from_embedding(e: &EmbeddedK6) -> Self {
        let mut vertices: Vec<[Rational; 3]> = e.vertices().iter().map(coords).collect();
        let mut polylines = Vec::new();
        for (&(u, v), pts) in e.polylines() {
            let start = vertices.len();
            vertices.extend(pts.iter().map(coords));
            polylines.push(EdgePath {
                edge: [u, v],
                path: (start..vertices.len()).collect(),
            });
        }
        EmbeddedK6Document {
            schema_version: SCHEMA_VERSION.into(),
            kind: KIND_K6.into(),
            vertices,
            polylines,
        }
    }

    pub fn to_embedding(&self) -> Result<EmbeddedK6, DocumentError> {
        if self.vertices.len() < 6 {
            return Err(DocumentError::at("vertices", format!("need at least 6 vertices, got {}", self.vertices.len())));
        }
        check_paths(&self.polylines, 6, self.vertices.len(), "polylines")?;
        let pts: Vec<Point3> = self.vertices.iter().map(point).collect();
        let mut e = EmbeddedK6::new(std::array::from_fn(|i| pts[i].clone()));
        for (i, p) in self.polylines.iter().enumerate() {
            let [u, v] = p.edge;
            if e.polylines().contains_key(&(u.min(v), u.max(v))) {
                return Err(DocumentError::at(format!("polylines[{i}].edge"), "edge routed twice"));
            }
            e = e
                .with_polyline(u, v, p.path.iter().map(|&k| pts[k].clone()).collect())
                .map_err(|err| DocumentError::at(format!("polylines[{i}].edge"), err.to_string()))?;
        }
        Ok(e)
    }
}

impl EmbeddedSuspensionDocument {
    pub fn from_embedding(e: &EmbeddedSuspension) -> Self {
        EmbeddedSuspensionDocument {
            schema_version: SCHEMA_VERSION.into(),
            kind: KIND_SUSPENSION.into(),
            vertices: e.points().iter().map(coords).collect(),
            edge_paths: e
                .edge_paths()
                .iter()
                .map(|(&(u, v), path)| EdgePath {
                    edge: [u, v],
                    path: path.clone(),
                })
                .collect(),
            face_triangulations: e
                .face_triangulations()
                .into_iter()
                .map(|(face, triangles)| FaceTriangulation { face, triangles })
                .collect(),
        }
    }

    pub fn to_embedding(&self) -> Result<EmbeddedSuspension, DocumentError> {
        let n = self.vertices.len();
        if n < 8 {
            return Err(DocumentError::at("vertices", format!("need at least 8 vertices, got {n}")));
        }
        check_paths(&self.edge_paths, 8, n, "edgePaths")?;
        for (i, f) in self.face_triangulations.iter().enumerate() {
            for (k, &v) in f.face.iter().enumerate() {
                check_index(format!("faceTriangulations[{i}].face[{k}]"), v, 8)?;
            }
            for (j, t) in f.triangles.iter().enumerate() {
                for (k, &v) in t.iter().enumerate() {
                    check_index(format!("faceTriangulations[{i}].triangles[{j}][{k}]"), v, n)?;
                }
            }
        }
        let mut paths = BTreeMap::new();
        for (i, p) in self.edge_paths.iter().enumerate() {
            let [u, v] = p.edge;
            let mut path = p.path.clone();
            if u > v {
                path.reverse();
            }
            if paths.insert((u.min(v), u.max(v)), path).is_some() {
                return Err(DocumentError::at(format!("edgePaths[{i}].edge"), "edge routed twice"));
            }
        }
        let mut faces = BTreeMap::new();
        for (i, f) in self.face_triangulations.iter().enumerate() {
            let mut key = f.face;
            key.sort_unstable();
            if faces.insert(key, f.triangles.clone()).is_some() {
                return Err(DocumentError::at(format!("faceTriangulations[{i}].face"), "face given twice"));
            }
        }
        // Triangulations are matched to faces by vertex set; restore the listed order.
        let faces = faces
            .into_iter()
            .map(|(key, t)| {
                let listed = self.face_triangulations.iter().find(|f| {
                    let mut k = f.face;
                    k.sort_unstable();
                    k == key
                });
                (listed.map_or(key, |f| f.face), t)
            })
            .collect();
        EmbeddedSuspension::new(self.vertices.iter().map(point).collect(), paths, faces)
            .map_err(|e| DocumentError::at("faceTriangulations", e.to_string()))
    }
}

impl TwoComplexDocument {
    pub fn from_complex(c: &TwoComplex) -> Self {
        TwoComplexDocument {
            schema_version: SCHEMA_VERSION.into(),
            kind: KIND_TWO_COMPLEX.into(),
            vertex_count: c.vertex_count(),
            edges: c.edges().iter().map(|&(u, v)| [u, v]).collect(),
            faces: c.faces().to_vec(),
            apexes: c.apexes().map(|(a, b)| [a, b]),
        }
    }

    pub fn to_complex(&self) -> Result<TwoComplex, DocumentError> {
        for (i, e) in self.edges.iter().enumerate() {
            for (k, &v) in e.iter().enumerate() {
                check_index(format!("edges[{i}][{k}]"), v, self.vertex_count)?;
            }
        }
        for (i, f) in self.faces.iter().enumerate() {
            for (k, &v) in f.iter().enumerate() {
                check_index(format!("faces[{i}][{k}]"), v, self.vertex_count)?;
            }
        }
        TwoComplex::new(
            self.vertex_count,
            self.edges.iter().map(|e| (e[0], e[1])).collect(),
            self.faces.clone(),
            self.apexes.map(|[a, b]| (a, b)),
        )
        .map_err(|e| DocumentError::at("faces", e.to_string()))
    }
}

fn coords<const N: usize>(p: &Point<N>) -> [Rational; N] {
    p.0.clone().map(Rational)
}

fn point<const N: usize>(c: &[Rational; N]) -> Point<N> {
    Point(c.clone().map(|r| r.0))
}
