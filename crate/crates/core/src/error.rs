use thiserror::Error;

use crate::polytope::Diagnostic;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid polyhedron: {}", join_diagnostics(.0))]
    InvalidPolyhedron(Vec<Diagnostic>),

    #[error("face {0} is not a basis: it must be an n-gon sharing an edge with each of the other n faces")]
    NotABasis(usize),

    #[error("polyhedron is not simple: vertex {0} has valence {1}")]
    NotSimple(usize, usize),

    #[error("position {position} is out of range for an {n}-pyramitoid")]
    InvalidVertex { position: usize, n: usize },

    #[error("lateral face at position {0} is not a triangle")]
    NotATriangle(usize),

    #[error("contracting position {0} would leave a neighbouring face with fewer than three sides")]
    NeighborUnderflow(usize),

    #[error("size {n} is out of range: {reason}")]
    InvalidSize { n: usize, reason: &'static str },

    #[error("enumeration cap exceeded: n = {n} > {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("code is for an {code}-gon but the pyramitoid has an {pyramitoid}-gon basis")]
    CodeMismatch { code: usize, pyramitoid: usize },

    #[error("too many mirrors: {0} (at most {1} are supported)")]
    TooManyMirrors(usize, usize),

    #[error("unknown face {0}")]
    UnknownFace(usize),

    #[error("boundary maps do not compose to zero in degree {0}")]
    ChainComplexInvalid(usize),

    #[error("basis mismatch: north has {north}-gon basis, south has {south}-gon basis")]
    BasisMismatch { north: usize, south: usize },

    #[error("gluing does not produce a polyhedron: {0}")]
    GluingInvalid(String),

    #[error("invalid equator: {0}")]
    EquatorInvalid(String),

    #[error("code does not alternate triangles around the basis: {0}")]
    CodeAlternation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

fn join_diagnostics(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
