//! Hamiltonian cycles in cubic plane graphs by chamber expansion, with an
//! exact backtracking oracle to check it against.

pub mod carve;
pub mod chamber;
pub mod connectivity;
pub mod corpus;
pub mod cuts;
pub mod dot;
pub mod embedding;
pub mod error;
pub mod format;
pub mod oracle;
pub mod record;
pub mod scaling;
pub mod validate;

pub use carve::{
    carve, carve_double, carve_with, select_entrance, CarveOptions, CarveResult, CarveStatus, DoorWalk, EdgeRole,
};
pub use chamber::chamber_count;
pub use corpus::{build_named, generate_prism, NamedGraph};
pub use cuts::{enumerate_3_edge_cuts, EdgeCut};
pub use embedding::{trace_faces, Adjacency, Edge, Face, PlanarEmbedding, SimpleGraph, Vertex};
pub use error::{CarveError, ChamberError, CorpusError, EmbeddingError, OracleError};
pub use format::{parse_embedding, to_rotation_format};
pub use oracle::{find_hamiltonian_cycle, verify_cycle, CycleCertificate, PathProfile};
pub use record::{parse_record, Record};
pub use validate::{validate, ValidationReport};
