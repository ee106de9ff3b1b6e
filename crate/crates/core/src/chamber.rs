//! Chamber analysis of a Hamiltonian cycle.
//!
//! Relative to the outer cycle, a Hamiltonian cycle splits into inner cycle
//! edges and entrance edges (outer edges it skips). Together these form
//! closed cycles, the chambers.

use std::collections::HashSet;

use crate::carve::{outer_edges, EdgeRole};
use crate::embedding::{Edge, PlanarEmbedding, Vertex};
use crate::error::ChamberError;
use crate::oracle::verify_cycle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberAnalysis {
    pub chambers: usize,
    pub entrances: Vec<Edge>,
    /// Role of every edge, indexed like `PlanarEmbedding::edges`. Doors
    /// lying inside a chamber are inner doors, the rest outer doors.
    pub roles: Vec<EdgeRole>,
}

pub fn chamber_count(emb: &PlanarEmbedding, cycle: &[Vertex]) -> Result<usize, ChamberError> {
    analyze_chambers(emb, cycle).map(|a| a.chambers)
}

pub fn analyze_chambers(emb: &PlanarEmbedding, cycle: &[Vertex]) -> Result<ChamberAnalysis, ChamberError> {
    if !verify_cycle(emb, cycle).is_hamiltonian {
        return Err(ChamberError::NotHamiltonian);
    }
    let k = cycle.len();
    let on_cycle: HashSet<Edge> = (0..k).map(|i| Edge::new(cycle[i], cycle[(i + 1) % k])).collect();
    let outer: HashSet<Edge> = outer_edges(emb).into_iter().collect();
    let mut entrances: Vec<Edge> = outer.iter().copied().filter(|e| !on_cycle.contains(e)).collect();
    entrances.sort_unstable();
    if entrances.is_empty() {
        return Err(ChamberError::NoEntrance);
    }

    // union-find over vertices on the chamber edges
    let n = emb.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    let mut degree = vec![0u8; n];
    let chamber_edges = emb
        .edges()
        .iter()
        .copied()
        .filter(|e| (on_cycle.contains(e) && !outer.contains(e)) || entrances.contains(e));
    for e in chamber_edges {
        degree[e.lo()] += 1;
        degree[e.hi()] += 1;
        let (a, b) = (find(&mut parent, e.lo()), find(&mut parent, e.hi()));
        parent[a] = b;
    }
    let mut closed = vec![true; n];
    let mut touched = vec![false; n];
    for v in (0..n).filter(|&v| degree[v] > 0) {
        let r = find(&mut parent, v);
        touched[r] = true;
        closed[r] &= degree[v] == 2;
    }
    let chambers = (0..n).filter(|&r| touched[r] && closed[r]).count();

    // faces reachable from the outer face without crossing the cycle
    let mut outside = vec![false; emb.face_count()];
    let mut stack = vec![emb.outer_face_id()];
    outside[emb.outer_face_id()] = true;
    while let Some(f) = stack.pop() {
        for e in emb.face(f).edges() {
            if on_cycle.contains(&e) {
                continue;
            }
            let idx = emb.edge_index(e).expect("face edge");
            for g in emb.faces_of_edge(idx) {
                if !outside[g] {
                    outside[g] = true;
                    stack.push(g);
                }
            }
        }
    }
    let roles = emb
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            if on_cycle.contains(e) {
                if outer.contains(e) {
                    EdgeRole::OuterHamiltonian
                } else {
                    EdgeRole::InnerHamiltonian
                }
            } else if entrances.contains(e) {
                EdgeRole::EntranceDoor
            } else if outside[emb.faces_of_edge(i)[0]] {
                EdgeRole::OuterDoor
            } else {
                EdgeRole::InnerDoor
            }
        })
        .collect();
    Ok(ChamberAnalysis { chambers, entrances, roles })
}
