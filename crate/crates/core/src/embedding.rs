//! Plane graphs as rotation systems.
//!
//! A [`PlanarEmbedding`] stores, for every vertex, the counterclockwise cyclic
//! order of its neighbours. Every undirected edge `{u, v}` contributes two
//! darts `u -> v` and `v -> u`; faces are the orbits of the dart successor
//!
//! ```text
//! next(u -> v) = v -> w,   w = the neighbour following u in the rotation at v
//! ```
//!
//! which is fixed once so that face ids and face walks are reproducible.

use std::fmt;

use crate::error::EmbeddingError;

pub type Vertex = usize;

/// Undirected edge, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge { lo: a, hi: b }
        } else {
            Edge { lo: b, hi: a }
        }
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn endpoints(self) -> [Vertex; 2] {
        [self.lo, self.hi]
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint that is not `v`. `v` must be an endpoint.
    pub fn other(self, v: Vertex) -> Vertex {
        debug_assert!(self.contains(v));
        if self.lo == v {
            self.hi
        } else {
            self.lo
        }
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.contains(other.lo) || self.contains(other.hi)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// Directed half of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dart {
    pub id: usize,
    pub from: Vertex,
    pub to: Vertex,
}

impl Dart {
    pub fn edge(&self) -> Edge {
        Edge::new(self.from, self.to)
    }
}

/// A facial walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Vertices in walk order, starting at the tail of the first dart.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.darts.iter().map(|d| d.from)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.darts.iter().map(Dart::edge)
    }

    pub fn sorted_vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<_> = self.vertices().collect();
        vs.sort_unstable();
        vs
    }
}

/// Read-only adjacency access shared by the embedding and plain graphs.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn neighbors(&self, v: Vertex) -> &[Vertex];

    fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count() && self.neighbors(u).contains(&v)
    }

    /// All edges, sorted.
    fn edge_list(&self) -> Vec<Edge> {
        let mut edges: Vec<Edge> = (0..self.vertex_count())
            .flat_map(|u| {
                self.neighbors(u)
                    .iter()
                    .filter(move |&&v| u < v)
                    .map(move |&v| Edge::new(u, v))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }
}

/// Plain undirected graph given by adjacency lists. Used for search problems
/// that need auxiliary vertices and therefore have no embedding.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<Vertex>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let mut g = SimpleGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn from_adjacency<A: Adjacency + ?Sized>(a: &A) -> Self {
        SimpleGraph {
            adj: (0..a.vertex_count()).map(|v| a.neighbors(v).to_vec()).collect(),
        }
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Adds `{u, v}` unless it is a loop or already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        if u == v || self.adj[u].contains(&v) {
            return;
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
    }
}

impl Adjacency for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }
}

/// A graph together with a counterclockwise rotation at every vertex.
///
/// Construction validates symmetry and simplicity, builds the dart tables and
/// traces all faces. Whether the rotation system describes a sphere embedding
/// is *not* a construction requirement; see [`trace_faces`] and
/// [`PlanarEmbedding::euler_characteristic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarEmbedding {
    rotations: Vec<Vec<Vertex>>,
    outer_directive: Option<Vec<Vertex>>,
    // dart d belongs to vertex `dart_origin[d]` at rotation slot `d - offsets[v]`
    offsets: Vec<usize>,
    dart_origin: Vec<Vertex>,
    twin: Vec<usize>,
    edge_of_dart: Vec<usize>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    face_of_dart: Vec<usize>,
    outer_face: usize,
}

pub const MIN_VERTICES: usize = 4;

impl PlanarEmbedding {
    /// Builds an embedding from counterclockwise rotations. `outer` optionally
    /// names the outer face by its vertex cycle (either orientation).
    pub fn from_rotations(
        rotations: Vec<Vec<Vertex>>,
        outer: Option<Vec<Vertex>>,
    ) -> Result<Self, EmbeddingError> {
        let n = rotations.len();
        if n < MIN_VERTICES {
            return Err(EmbeddingError::TooFewVertices(n));
        }
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                if u >= n {
                    return Err(EmbeddingError::VertexOutOfRange { index: u, n });
                }
                if u == v {
                    return Err(EmbeddingError::SelfLoop { vertex: v });
                }
                if rot[..i].contains(&u) {
                    return Err(EmbeddingError::DuplicateNeighbor {
                        vertex: v,
                        neighbor: u,
                    });
                }
            }
        }

        let mut offsets = Vec::with_capacity(n + 1);
        let mut total = 0;
        for rot in &rotations {
            offsets.push(total);
            total += rot.len();
        }
        offsets.push(total);

        let mut dart_origin = Vec::with_capacity(total);
        let mut keyed = Vec::with_capacity(total);
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                dart_origin.push(v);
                keyed.push((Edge::new(v, u), offsets[v] + i));
            }
        }
        keyed.sort_unstable();

        let mut twin = vec![usize::MAX; total];
        let mut edge_of_dart = vec![usize::MAX; total];
        let mut edges = Vec::with_capacity(total / 2);
        let mut i = 0;
        while i < keyed.len() {
            let (e, d) = keyed[i];
            if i + 1 >= keyed.len() || keyed[i + 1].0 != e {
                let from = dart_origin[d];
                return Err(EmbeddingError::AsymmetricAdjacency {
                    vertex: from,
                    neighbor: e.other(from),
                });
            }
            let d2 = keyed[i + 1].1;
            twin[d] = d2;
            twin[d2] = d;
            edge_of_dart[d] = edges.len();
            edge_of_dart[d2] = edges.len();
            edges.push(e);
            i += 2;
        }

        let mut emb = PlanarEmbedding {
            rotations,
            outer_directive: None,
            offsets,
            dart_origin,
            twin,
            edge_of_dart,
            edges,
            faces: Vec::new(),
            face_of_dart: Vec::new(),
            outer_face: 0,
        };
        emb.trace();
        emb.outer_face = match &outer {
            Some(cycle) => emb
                .find_face_by_cycle(cycle)
                .ok_or_else(|| EmbeddingError::UnknownOuterFace(cycle.clone()))?,
            None => emb.default_outer_face(),
        };
        emb.outer_directive = outer;
        Ok(emb)
    }

    fn trace(&mut self) {
        let total = self.dart_origin.len();
        let mut face_of_dart = vec![usize::MAX; total];
        let mut faces = Vec::new();
        for start in 0..total {
            if face_of_dart[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                face_of_dart[d] = id;
                darts.push(self.dart(d));
                d = self.face_successor(d);
                if d == start {
                    break;
                }
            }
            faces.push(Face { id, darts });
        }
        self.faces = faces;
        self.face_of_dart = face_of_dart;
    }

    /// Maximum length; ties go to the lexicographically smallest sorted
    /// vertex list.
    fn default_outer_face(&self) -> usize {
        let mut best = 0;
        let mut best_key = self.faces[0].sorted_vertices();
        for f in &self.faces[1..] {
            let best_len = self.faces[best].len();
            if f.len() < best_len {
                continue;
            }
            let key = f.sorted_vertices();
            if f.len() > best_len || key < best_key {
                best = f.id;
                best_key = key;
            }
        }
        best
    }

    fn find_face_by_cycle(&self, cycle: &[Vertex]) -> Option<usize> {
        let k = cycle.len();
        if k == 0 {
            return None;
        }
        let matches = |walk: &[Vertex]| {
            (0..k).any(|shift| {
                (0..k).all(|i| walk[(i + shift) % k] == cycle[i])
                    || (0..k).all(|i| walk[(shift + k - i) % k] == cycle[i])
            })
        };
        self.faces
            .iter()
            .filter(|f| f.len() == k)
            .find(|f| matches(&f.vertices().collect::<Vec<_>>()))
            .map(|f| f.id)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rotations
    }

    pub fn outer_directive(&self) -> Option<&[Vertex]> {
        self.outer_directive.as_deref()
    }

    /// Sorted edge list; positions are the edge indices used throughout.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn dart_count(&self) -> usize {
        self.dart_origin.len()
    }

    pub fn dart(&self, d: usize) -> Dart {
        let from = self.dart_origin[d];
        Dart {
            id: d,
            from,
            to: self.rotations[from][d - self.offsets[from]],
        }
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    pub fn edge_of_dart(&self, d: usize) -> usize {
        self.edge_of_dart[d]
    }

    /// Dart `u -> v`, if `{u, v}` is an edge.
    pub fn dart_between(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.rotations
            .get(u)?
            .iter()
            .position(|&w| w == v)
            .map(|i| self.offsets[u] + i)
    }

    pub fn face_successor(&self, d: usize) -> usize {
        let back = self.twin[d];
        let v = self.dart_origin[back];
        let slot = back - self.offsets[v];
        self.offsets[v] + (slot + 1) % self.rotations[v].len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_of_dart(&self, d: usize) -> usize {
        self.face_of_dart[d]
    }

    /// The two faces on either side of edge `e` (equal for a bridge).
    pub fn faces_of_edge(&self, e: usize) -> [usize; 2] {
        let [a, b] = self.darts_of_edge(e);
        [self.face_of_dart[a], self.face_of_dart[b]]
    }

    pub fn darts_of_edge(&self, e: usize) -> [usize; 2] {
        let Edge { lo, hi } = self.edges[e];
        let d = self.dart_between(lo, hi).expect("edge present");
        [d, self.twin[d]]
    }

    pub fn outer_face_id(&self) -> usize {
        self.outer_face
    }

    pub fn outer_face(&self) -> &Face {
        &self.faces[self.outer_face]
    }

    /// V - E + F over the traced faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn is_connected(&self) -> bool {
        crate::connectivity::is_connected(self)
    }

    /// Same graph drawn in the mirror: every rotation reversed.
    pub fn mirrored(&self) -> PlanarEmbedding {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlanarEmbedding::from_rotations(rotations, self.outer_directive.clone())
            .expect("mirror of a valid rotation system is valid")
    }

    /// Rebuilds with a different outer face, given by vertex cycle.
    pub fn with_outer(&self, cycle: Vec<Vertex>) -> Result<PlanarEmbedding, EmbeddingError> {
        PlanarEmbedding::from_rotations(self.rotations.clone(), Some(cycle))
    }
}

impl Adjacency for PlanarEmbedding {
    fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.rotations[v]
    }

    fn edge_list(&self) -> Vec<Edge> {
        self.edges.clone()
    }
}

/// Faces of a sphere embedding. Fails when `V - E + F != 2` or the graph is
/// disconnected.
pub fn trace_faces(emb: &PlanarEmbedding) -> Result<&[Face], EmbeddingError> {
    if !emb.is_connected() || emb.euler_characteristic() != 2 {
        return Err(EmbeddingError::NotPlanar {
            vertices: emb.vertex_count(),
            edges: emb.edge_count(),
            faces: emb.face_count(),
        });
    }
    Ok(emb.faces())
}
