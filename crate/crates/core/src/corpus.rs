//! Test graphs: prisms, a few classical polyhedra, the Tutte graph, and
//! gadgets built by gluing smaller graphs together.

use std::fmt;

use crate::embedding::{trace_faces, Adjacency, PlanarEmbedding, Vertex};
use crate::error::{CorpusError, EmbeddingError};
use crate::record::Record;
use crate::validate::{validate, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hamiltonicity {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Hamiltonicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hamiltonicity::Yes => "yes",
            Hamiltonicity::No => "no",
            Hamiltonicity::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub barnette: bool,
    pub hamiltonian: Hamiltonicity,
    /// How the graph was built.
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub embedding: PlanarEmbedding,
    pub expected: Expected,
}

impl NamedGraph {
    fn new(name: impl Into<String>, embedding: PlanarEmbedding, barnette: bool, hamiltonian: Hamiltonicity, source: &str) -> Self {
        NamedGraph {
            name: name.into(),
            embedding,
            expected: Expected { barnette, hamiltonian, source: source.to_string() },
        }
    }

    pub fn manifest_record(&self) -> Record {
        let r = validate(&self.embedding);
        let mut rec = Record::new();
        rec.push("name", &self.name)
            .push("n", self.embedding.vertex_count())
            .push("edges", self.embedding.edge_count())
            .push("faces", self.embedding.face_count())
            .push("barnette", r.is_barnette)
            .push("cubic", r.is_cubic)
            .push("bipartite", r.is_bipartite)
            .push("hamiltonian", self.expected.hamiltonian)
            .push("source", &self.expected.source);
        rec
    }
}

/// A graph with three attachment vertices of degree 2. Each terminal's
/// missing neighbour goes last in its rotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragment {
    pub embedding: PlanarEmbedding,
    /// `(x, y, z)`.
    pub terminals: [Vertex; 3],
}

/// Names accepted by `build_named`, besides `prism_<2k>`.
pub const NAMES: &[&str] = &[
    "cube",
    "prism_6",
    "prism_10",
    "truncated_octahedron",
    "dodecahedron",
    "tutte_fragment",
    "tutte_graph",
    "tutte_composed",
    "cube_pair",
    "cube_chain",
    "cube_triple",
];

pub fn build_named(name: &str) -> Result<NamedGraph, CorpusError> {
    use Hamiltonicity::*;
    let unknown = || CorpusError::UnknownName(name.to_string());
    let table = |rows: &[[Vertex; 3]]| -> Result<PlanarEmbedding, CorpusError> {
        Ok(PlanarEmbedding::from_rotations(rows.iter().map(|r| r.to_vec()).collect(), None)?)
    };
    let g = match name {
        "cube" => {
            let mut g = generate_prism(2)?;
            g.name = "cube".into();
            g
        }
        "truncated_octahedron" => NamedGraph::new(
            name,
            table(&TRUNCATED_OCTAHEDRON)?,
            true,
            Yes,
            "truncated octahedron, Archimedean solid",
        ),
        "dodecahedron" => NamedGraph::new(name, table(&DODECAHEDRON)?, false, Yes, "regular dodecahedron"),
        "tutte_graph" => NamedGraph::new(name, table(&TUTTE)?, false, No, "Tutte graph, 46 vertices"),
        "tutte_fragment" => {
            let f = tutte_fragment()?;
            NamedGraph::new(name, f.embedding, false, Unknown, "one third of the Tutte graph")
        }
        "tutte_composed" => {
            let f = tutte_fragment()?;
            let mut g = compose_fragments([&f, &f, &f], Wiring::Tutte)?;
            g.name = name.into();
            g.expected.hamiltonian = No;
            g
        }
        "cube_pair" => {
            let c = generate_prism(2)?.embedding;
            NamedGraph::new(name, vertex_sum(&c, 0, &c, 0)?, true, Unknown, "two cubes glued at a vertex")
        }
        "cube_chain" => {
            let c = generate_prism(2)?.embedding;
            let pair = vertex_sum(&c, 0, &c, 0)?;
            // vertex 6 of the second cube, antipodal to its glued vertex 0
            let far = 6 - 1 + (c.vertex_count() - 1);
            NamedGraph::new(
                name,
                vertex_sum(&pair, far, &c, 0)?,
                true,
                Unknown,
                "three cubes glued in a chain at antipodal vertices",
            )
        }
        "cube_triple" => {
            let f = fragment_from_vertex(&generate_prism(2)?.embedding, 0);
            let mut g = compose_fragments([&f, &f, &f], Wiring::Tutte)?;
            g.name = name.into();
            g
        }
        _ => {
            let cycle: usize = name.strip_prefix("prism_").and_then(|s| s.parse().ok()).ok_or_else(unknown)?;
            if cycle % 2 == 1 {
                return Err(unknown());
            }
            generate_prism(cycle / 2)?
        }
    };
    Ok(g)
}

/// Every graph of `NAMES` that is a closed cubic graph (the fragment is not).
pub fn standard_corpus() -> Vec<NamedGraph> {
    NAMES
        .iter()
        .filter(|&&n| n != "tutte_fragment")
        .map(|n| build_named(n).expect("shipped corpus builds"))
        .collect()
}

/// The prism over a 2k-cycle: outer vertices 0..2k, inner 2k..4k, with
/// inner vertex 2k + i above outer vertex i.
pub fn generate_prism(k: usize) -> Result<NamedGraph, CorpusError> {
    if k < 2 {
        return Err(CorpusError::PrismTooSmall(k));
    }
    let m = 2 * k;
    let mut rot = Vec::with_capacity(2 * m);
    for i in 0..m {
        rot.push(vec![(i + 1) % m, m + i, (i + m - 1) % m]);
    }
    for i in 0..m {
        rot.push(vec![i, m + (i + 1) % m, m + (i + m - 1) % m]);
    }
    let emb = PlanarEmbedding::from_rotations(rot, None)?;
    Ok(NamedGraph::new(
        format!("prism_{m}"),
        emb,
        true,
        Hamiltonicity::Yes,
        &format!("prism over the {m}-cycle"),
    ))
}

/// Restriction to `vertices` (sorted ids, renumbered in order). The three
/// terminals lose their single outside neighbour.
pub fn fragment_from_subgraph(
    emb: &PlanarEmbedding,
    vertices: &[Vertex],
    terminals: [Vertex; 3],
) -> Result<Fragment, CorpusError> {
    let mut index = vec![usize::MAX; emb.vertex_count()];
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    for (i, &v) in sorted.iter().enumerate() {
        index[v] = i;
    }
    let rotations = sorted
        .iter()
        .map(|&v| {
            let rot = emb.rotation(v);
            let start = rot.iter().position(|&u| index[u] == usize::MAX).map_or(0, |p| p + 1);
            (0..rot.len())
                .map(|i| rot[(start + i) % rot.len()])
                .filter(|&u| index[u] != usize::MAX)
                .map(|u| index[u])
                .collect()
        })
        .collect();
    Ok(Fragment {
        embedding: PlanarEmbedding::from_rotations(rotations, None)?,
        terminals: terminals.map(|t| index[t]),
    })
}

/// `G - v`; the terminals are the former neighbours of `v` in rotation order.
pub fn fragment_from_vertex(emb: &PlanarEmbedding, v: Vertex) -> Fragment {
    let rest: Vec<Vertex> = (0..emb.vertex_count()).filter(|&u| u != v).collect();
    let r = emb.rotation(v);
    fragment_from_subgraph(emb, &rest, [r[0], r[1], r[2]]).expect("vertex deletion keeps a valid embedding")
}

/// The third of the Tutte graph attached to its central vertex through `z`.
pub fn tutte_fragment() -> Result<Fragment, CorpusError> {
    let g = PlanarEmbedding::from_rotations(TUTTE.iter().map(|r| r.to_vec()).collect(), None)?;
    let mut part = vec![1, 4, 5, 6];
    part.extend(23..=33);
    fragment_from_subgraph(&g, &part, [6, 23, 1])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wiring {
    /// A new central vertex joined to every `z`; `x` of fragment i joined to
    /// `y` of fragment i + 1.
    Tutte,
}

pub fn compose_fragments(fragments: [&Fragment; 3], wiring: Wiring) -> Result<NamedGraph, CorpusError> {
    let Wiring::Tutte = wiring;
    let mut last_err = None;
    for mask in 0..16u32 {
        let rotations = tutte_wiring(fragments, mask);
        let center = rotations.len() - 1;
        let emb = PlanarEmbedding::from_rotations(rotations, None)?;
        if let Some(v) = (0..emb.vertex_count()).find(|&v| emb.degree(v) != 3) {
            return Err(CorpusError::NotCubic(v));
        }
        match trace_faces(&emb) {
            Ok(_) => {
                let report: ValidationReport = validate(&emb);
                let n = emb.vertex_count();
                return Ok(NamedGraph::new(
                    format!("composed_{n}"),
                    emb,
                    report.is_barnette,
                    Hamiltonicity::Unknown,
                    &format!("three fragments around a central vertex {center}"),
                ));
            }
            Err(e) => last_err = Some(e),
        }
    }
    Err(CorpusError::NotPlanar(last_err.unwrap_or(EmbeddingError::TooFewVertices(0))))
}

/// Bit i of `mask` mirrors fragment i; bit 3 reverses the center.
fn tutte_wiring(fragments: [&Fragment; 3], mask: u32) -> Vec<Vec<Vertex>> {
    let mut offsets = [0usize; 3];
    let mut total = 0;
    for (i, f) in fragments.iter().enumerate() {
        offsets[i] = total;
        total += f.embedding.vertex_count();
    }
    let center = total;
    let mut rot: Vec<Vec<Vertex>> = Vec::with_capacity(total + 1);
    for (i, f) in fragments.iter().enumerate() {
        let mirror = mask & (1 << i) != 0;
        for v in 0..f.embedding.vertex_count() {
            let mut r: Vec<Vertex> = f.embedding.rotation(v).iter().map(|&u| u + offsets[i]).collect();
            if mirror {
                r.reverse();
            }
            rot.push(r);
        }
    }
    let global = |i: usize, t: usize| offsets[i] + fragments[i].terminals[t];
    let mut hub = Vec::with_capacity(3);
    for i in 0..3 {
        let j = (i + 1) % 3;
        let (x, y, z) = (global(i, 0), global(j, 1), global(i, 2));
        rot[x].push(y);
        rot[y].push(x);
        rot[z].push(center);
        hub.push(z);
    }
    if mask & 8 != 0 {
        hub.reverse();
    }
    rot.push(hub);
    rot
}

/// Deletes `v1` from `g1` and `v2` from `g2` and joins their former
/// neighbourhoods by three edges: the first neighbours together, the other
/// two crosswise so the orientation matches. Vertices of `g1` keep their
/// order and come first.
pub fn vertex_sum(g1: &PlanarEmbedding, v1: Vertex, g2: &PlanarEmbedding, v2: Vertex) -> Result<PlanarEmbedding, CorpusError> {
    let n1 = g1.vertex_count();
    let id1 = |u: Vertex| if u > v1 { u - 1 } else { u };
    let id2 = |u: Vertex| (if u > v2 { u - 1 } else { u }) + n1 - 1;
    let (r1, r2) = (g1.rotation(v1), g2.rotation(v2));
    if r1.len() != 3 {
        return Err(CorpusError::NotCubic(v1));
    }
    if r2.len() != 3 {
        return Err(CorpusError::NotCubic(n1 + v2));
    }
    // partner of each neighbour of v1 / v2
    let across1 = |u: Vertex| {
        let i = r1.iter().position(|&w| w == u).expect("neighbour");
        id2(r2[(3 - i) % 3])
    };
    let across2 = |u: Vertex| {
        let i = r2.iter().position(|&w| w == u).expect("neighbour");
        id1(r1[(3 - i) % 3])
    };
    let mut rot = Vec::with_capacity(n1 + g2.vertex_count() - 2);
    for v in (0..n1).filter(|&v| v != v1) {
        rot.push(g1.rotation(v).iter().map(|&u| if u == v1 { across1(v) } else { id1(u) }).collect());
    }
    for v in (0..g2.vertex_count()).filter(|&v| v != v2) {
        rot.push(g2.rotation(v).iter().map(|&u| if u == v2 { across2(v) } else { id2(u) }).collect());
    }
    let emb = PlanarEmbedding::from_rotations(rot, None)?;
    trace_faces(&emb).map_err(CorpusError::NotPlanar)?;
    Ok(emb)
}

/// Inserts a two-rung ladder across a face: two new vertices on each of two
/// boundary edges, joined crosswise without crossing. Adds four vertices.
pub fn ladder_expansion(emb: &PlanarEmbedding, face: usize, first: usize, second: usize) -> Option<PlanarEmbedding> {
    let darts = &emb.face(face).darts;
    let (ab, cd) = (darts.get(first)?, darts.get(second)?);
    if ab.edge() == cd.edge() || first == second {
        return None;
    }
    let n = emb.vertex_count();
    let (a, b, c, d) = (ab.from, ab.to, cd.from, cd.to);
    let (p1, p2, r1, r2) = (n, n + 1, n + 2, n + 3);
    let mut rot: Vec<Vec<Vertex>> = emb.rotations().to_vec();
    let replace = |rot: &mut Vec<Vec<Vertex>>, at: Vertex, old: Vertex, new: Vertex| {
        if let Some(slot) = rot[at].iter_mut().find(|u| **u == old) {
            *slot = new;
        }
    };
    replace(&mut rot, a, b, p1);
    replace(&mut rot, b, a, p2);
    replace(&mut rot, c, d, r1);
    replace(&mut rot, d, c, r2);
    rot.push(vec![a, r2, p2]);
    rot.push(vec![p1, r1, b]);
    rot.push(vec![c, p2, r2]);
    rot.push(vec![p1, d, r1]);
    let out = PlanarEmbedding::from_rotations(rot, None).ok()?;
    trace_faces(&out).ok()?;
    Some(out)
}

/// All ladder expansions of `emb` that are again Barnette graphs.
pub fn barnette_ladder_expansions(emb: &PlanarEmbedding) -> Vec<PlanarEmbedding> {
    let mut out = Vec::new();
    for f in 0..emb.face_count() {
        let len = emb.face(f).len();
        for i in 0..len {
            for j in 0..len {
                if let Some(g) = ladder_expansion(emb, f, i, j) {
                    if validate(&g).is_barnette {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

/// Bipartite three-terminal fragments with at most 13 vertices: `G - v` for
/// every vertex of the cube, of every Barnette ladder expansion of the cube,
/// and of `cube_pair`.
pub fn bipartite_fragment_sweep() -> Vec<(String, Fragment)> {
    let cube = generate_prism(2).expect("cube").embedding;
    let mut sources = vec![("cube".to_string(), cube.clone())];
    for (i, g) in barnette_ladder_expansions(&cube).into_iter().enumerate() {
        sources.push((format!("cube_ladder_{i}"), g));
    }
    sources.push(("cube_pair".to_string(), build_named("cube_pair").expect("cube_pair").embedding));
    let mut out = Vec::new();
    for (name, g) in sources {
        for v in 0..g.vertex_count() {
            out.push((format!("{name}-v{v}"), fragment_from_vertex(&g, v)));
        }
    }
    out
}

pub const DODECAHEDRON: [[Vertex; 3]; 20] = [
    [19, 10, 1],
    [8, 2, 0],
    [6, 3, 1],
    [4, 19, 2],
    [5, 17, 3],
    [6, 15, 4],
    [2, 7, 5],
    [8, 14, 6],
    [1, 9, 7],
    [10, 13, 8],
    [0, 11, 9],
    [18, 12, 10],
    [16, 13, 11],
    [14, 9, 12],
    [15, 7, 13],
    [16, 5, 14],
    [12, 17, 15],
    [18, 4, 16],
    [11, 19, 17],
    [0, 3, 18],
];

pub const TRUNCATED_OCTAHEDRON: [[Vertex; 3]; 24] = [
    [2, 1, 6],
    [7, 0, 4],
    [3, 0, 12],
    [13, 5, 2],
    [18, 1, 5],
    [4, 3, 19],
    [7, 8, 0],
    [10, 6, 1],
    [9, 14, 6],
    [15, 8, 11],
    [20, 11, 7],
    [9, 10, 21],
    [13, 2, 14],
    [12, 16, 3],
    [15, 12, 8],
    [17, 14, 9],
    [17, 22, 13],
    [23, 16, 15],
    [4, 19, 20],
    [18, 5, 22],
    [18, 21, 10],
    [23, 11, 20],
    [23, 19, 16],
    [21, 22, 17],
];

/// Central vertex 0 joined to 1, 2 and 3, one per third.
pub const TUTTE: [[Vertex; 3]; 46] = [
    [2, 3, 1],
    [26, 4, 0],
    [11, 0, 10],
    [19, 0, 18],
    [33, 5, 1],
    [29, 6, 4],
    [27, 7, 5],
    [14, 8, 6],
    [38, 9, 7],
    [37, 10, 8],
    [39, 2, 9],
    [39, 12, 2],
    [35, 13, 11],
    [14, 15, 12],
    [34, 7, 13],
    [22, 16, 13],
    [44, 17, 15],
    [43, 18, 16],
    [45, 3, 17],
    [45, 20, 3],
    [41, 21, 19],
    [22, 23, 20],
    [40, 15, 21],
    [27, 24, 21],
    [32, 25, 23],
    [31, 26, 24],
    [33, 1, 25],
    [23, 6, 28],
    [32, 27, 29],
    [28, 5, 30],
    [31, 29, 33],
    [30, 25, 32],
    [31, 24, 28],
    [30, 4, 26],
    [35, 38, 14],
    [12, 36, 34],
    [39, 37, 35],
    [9, 38, 36],
    [8, 34, 37],
    [11, 10, 36],
    [41, 44, 22],
    [20, 42, 40],
    [45, 43, 41],
    [17, 44, 42],
    [16, 40, 43],
    [19, 18, 42],
];
