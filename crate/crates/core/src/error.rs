use thiserror::Error;

use crate::embedding::{Edge, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("vertex {vertex} lists neighbor {neighbor}, but {neighbor} does not list {vertex}")]
    AsymmetricAdjacency { vertex: Vertex, neighbor: Vertex },
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    DuplicateNeighbor { vertex: Vertex, neighbor: Vertex },
    #[error("vertex {vertex} lists itself as a neighbor")]
    SelfLoop { vertex: Vertex },
    #[error("vertex index {index} out of range (n = {n})")]
    VertexOutOfRange { index: Vertex, n: usize },
    #[error("an embedding needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("outer directive {0:?} is not a face of the embedding")]
    UnknownOuterFace(Vec<Vertex>),
    #[error("rotation system is not a sphere embedding: V - E + F = {vertices} - {edges} + {faces}")]
    NotPlanar {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
}

/// Precondition violations of the carving entry points. Labeling conflicts
/// are not errors; they end a carve with a failure outcome.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CarveError {
    #[error("{0} is not an edge of the graph")]
    UnknownEdge(Edge),
    #[error("{0} does not lie on the outer cycle")]
    NotOuterEdge(Edge),
    #[error("outer cycle has length {0}, need at least 4")]
    OuterCycleTooShort(usize),
    #[error("entrances {0} and {1} share an endpoint")]
    AdjacentEntrances(Edge, Edge),
    #[error("both entrances are {0}")]
    SameEntrance(Edge),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChamberError {
    #[error("vertex sequence is not a Hamiltonian cycle")]
    NotHamiltonian,
    #[error("the cycle is the outer cycle itself; it has no entrance edge")]
    NoEntrance,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search budget of {0} node expansions exhausted")]
    BudgetExhausted(u64),
    #[error("terminals must be three distinct vertices of the graph")]
    BadTerminals,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("unknown corpus graph {0:?}")]
    UnknownName(String),
    #[error("prism parameter k must be at least 2, got {0}")]
    PrismTooSmall(usize),
    #[error("composition is not cubic at vertex {0}")]
    NotCubic(Vertex),
    #[error("composition is not planar: {0}")]
    NotPlanar(EmbeddingError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}
