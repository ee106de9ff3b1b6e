//! Membership test for the Barnette class: cubic, bipartite, planar and
//! 3-connected.

use std::collections::VecDeque;

use crate::connectivity;
use crate::embedding::{trace_faces, Adjacency, PlanarEmbedding};

/// Above this size the exhaustive pair-removal scan is replaced.
pub const EXHAUSTIVE_CONNECTIVITY_LIMIT: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub is_cubic: bool,
    pub is_bipartite: bool,
    /// Side (0 or 1) of every vertex, when bipartite.
    pub coloring: Option<Vec<u8>>,
    pub is_planar_embedding: bool,
    pub vertex_connectivity_at_least_3: bool,
    pub is_barnette: bool,
}

pub fn validate(emb: &PlanarEmbedding) -> ValidationReport {
    let is_cubic = (0..emb.vertex_count()).all(|v| emb.degree(v) == 3);
    let coloring = two_coloring(emb);
    let is_planar_embedding = trace_faces(emb).is_ok();
    let n = emb.vertex_count();
    let vertex_connectivity_at_least_3 = if n <= EXHAUSTIVE_CONNECTIVITY_LIMIT {
        connectivity::three_connected_exhaustive(emb)
    } else if is_cubic && is_planar_embedding {
        connectivity::cubic_plane_three_connected(emb)
    } else {
        connectivity::vertex_connectivity_at_least(emb, 3)
    };
    let is_bipartite = coloring.is_some();
    ValidationReport {
        is_cubic,
        is_bipartite,
        coloring,
        is_planar_embedding,
        vertex_connectivity_at_least_3,
        is_barnette: is_cubic && is_bipartite && is_planar_embedding && vertex_connectivity_at_least_3,
    }
}

/// Breadth-first 2-coloring, `None` on an odd cycle.
pub fn two_coloring<A: Adjacency + ?Sized>(g: &A) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn cube_is_barnette() {
        let r = validate(&corpus::generate_prism(2).unwrap().embedding);
        assert!(r.is_cubic && r.is_bipartite && r.is_planar_embedding);
        assert!(r.vertex_connectivity_at_least_3);
        assert!(r.is_barnette);
        let c = r.coloring.unwrap();
        assert_ne!(c[0], c[1]);
    }

    #[test]
    fn path_is_not_cubic() {
        let rot = vec![vec![1], vec![0, 2], vec![1, 3], vec![2]];
        let r = validate(&PlanarEmbedding::from_rotations(rot, None).unwrap());
        assert!(!r.is_cubic);
        assert!(r.is_bipartite);
        assert!(r.is_planar_embedding);
        assert!(!r.vertex_connectivity_at_least_3);
        assert!(!r.is_barnette);
    }

    #[test]
    fn k4_is_not_bipartite() {
        let rot = vec![vec![1, 2, 3], vec![2, 0, 3], vec![3, 0, 1], vec![1, 0, 2]];
        let r = validate(&PlanarEmbedding::from_rotations(rot, None).unwrap());
        assert!(r.is_cubic);
        assert!(!r.is_bipartite);
        assert!(r.coloring.is_none());
        assert!(r.vertex_connectivity_at_least_3);
        assert!(!r.is_barnette);
    }

    #[test]
    fn large_prism_uses_the_dual_criterion() {
        let emb = corpus::generate_prism(120).unwrap().embedding;
        assert!(emb.vertex_count() > EXHAUSTIVE_CONNECTIVITY_LIMIT);
        assert!(validate(&emb).is_barnette);
    }
}
