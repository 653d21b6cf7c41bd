//! JSON documents and exact rational encoding.

mod document;
mod rational;

pub use document::{
    parse_document, parse_report, to_json, DocumentError, EdgePath, EmbeddedK6Document, EmbeddedSuspensionDocument,
    EmbeddingDocument, FaceTriangulation, GraphDocument, TwoComplexDocument, KIND_GRAPH, KIND_K6, KIND_SUSPENSION,
    KIND_TWO_COMPLEX, SCHEMA_VERSION,
};
pub use rational::{Rational, RationalError};
