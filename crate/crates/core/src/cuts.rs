//! Nontrivial 3-edge-cuts.
//!
//! On a sphere embedding, a minimal edge cut is exactly the set of edges
//! dual to a cycle of the face-adjacency multigraph, so 3-edge bonds are the
//! dual triangles. The three edges around a single vertex form the trivial
//! (facial) triangles and are dropped. Embeddings that fail the Euler check
//! fall back to a pair-plus-bridge search.

use std::collections::BTreeMap;

use crate::connectivity::{components_without_edges, is_connected};
use crate::embedding::{trace_faces, Adjacency, Edge, PlanarEmbedding, SimpleGraph, Vertex};

/// Three edges whose removal splits the graph into `side_a` (the side holding
/// the lowest-numbered vertex) and `side_b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    pub edges: [Edge; 3],
    pub side_a: Vec<Vertex>,
    pub side_b: Vec<Vertex>,
}

impl EdgeCut {
    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    /// True if both endpoints of `e` lie on one side and `e` is not a cut edge.
    pub fn strictly_inside(&self, e: Edge) -> bool {
        if self.contains(e) {
            return false;
        }
        let in_a = |v| self.side_a.binary_search(&v).is_ok();
        in_a(e.lo()) == in_a(e.hi())
    }
}

pub fn is_trivial(edges: &[Edge; 3]) -> bool {
    edges[0]
        .endpoints()
        .into_iter()
        .any(|v| edges[1].contains(v) && edges[2].contains(v))
}

pub fn enumerate_3_edge_cuts(emb: &PlanarEmbedding) -> Vec<EdgeCut> {
    let triples = if trace_faces(emb).is_ok() {
        dual_triangles(emb)
    } else {
        pair_bridge_search(emb)
    };
    let mut cuts: Vec<EdgeCut> = triples
        .into_iter()
        .filter(|t| !is_trivial(t))
        .filter_map(|t| split(emb, t))
        .collect();
    cuts.sort_by_key(|c| c.edges);
    cuts.dedup_by(|a, b| a.edges == b.edges);
    cuts
}

fn split(emb: &PlanarEmbedding, mut edges: [Edge; 3]) -> Option<EdgeCut> {
    edges.sort_unstable();
    let (count, label) = components_without_edges(emb, &edges);
    if count != 2 {
        return None;
    }
    let (side_a, side_b) = (0..emb.vertex_count()).partition(|&v| label[v] == label[0]);
    Some(EdgeCut { edges, side_a, side_b })
}

fn dual_triangles(emb: &PlanarEmbedding) -> Vec<[Edge; 3]> {
    let f = emb.face_count();
    let mut between: BTreeMap<(usize, usize), Vec<Edge>> = BTreeMap::new();
    for (i, &e) in emb.edges().iter().enumerate() {
        let [a, b] = emb.faces_of_edge(i);
        if a != b {
            between.entry((a.min(b), a.max(b))).or_default().push(e);
        }
    }
    let mut nbrs = vec![Vec::new(); f];
    for &(a, b) in between.keys() {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    // orient every dual edge towards the endpoint of higher (degree, id)
    let rank = |x: usize| (nbrs[x].len(), x);
    let out: Vec<Vec<usize>> = (0..f)
        .map(|x| nbrs[x].iter().copied().filter(|&y| rank(y) > rank(x)).collect())
        .collect();

    let mut mark = vec![usize::MAX; f];
    let mut found = Vec::new();
    for a in 0..f {
        for &c in &out[a] {
            mark[c] = a;
        }
        for &b in &out[a] {
            for &c in &out[b] {
                if mark[c] != a {
                    continue;
                }
                let key = |x: usize, y: usize| (x.min(y), x.max(y));
                for &e1 in &between[&key(a, b)] {
                    for &e2 in &between[&key(b, c)] {
                        for &e3 in &between[&key(a, c)] {
                            found.push([e1, e2, e3]);
                        }
                    }
                }
            }
        }
    }
    found
}

fn pair_bridge_search(emb: &PlanarEmbedding) -> Vec<[Edge; 3]> {
    let edges = emb.edges();
    let n = emb.vertex_count();
    let connected_minus = |cut: &[Edge]| components_without_edges(emb, cut).0 == 1;
    let mut found = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let pair = [edges[i], edges[j]];
            let rest = SimpleGraph::from_edges(
                n,
                edges.iter().filter(|e| !pair.contains(e)).map(|e| (e.lo(), e.hi())),
            );
            if !is_connected(&rest) {
                continue;
            }
            for b in bridges(&rest) {
                if b > edges[j] && connected_minus(&[edges[i], b]) && connected_minus(&[edges[j], b]) {
                    found.push([edges[i], edges[j], b]);
                }
            }
        }
    }
    found
}

/// Bridges of a graph by iterative low-link DFS.
pub fn bridges<A: Adjacency + ?Sized>(g: &A) -> Vec<Edge> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, next neighbour slot)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, parent, slot) = stack[top];
            if let Some(&u) = g.neighbors(v).get(slot) {
                stack[top].2 += 1;
                if u == parent {
                    continue;
                }
                if disc[u] == usize::MAX {
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    stack.push((u, v, 0));
                } else {
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        out.push(Edge::new(v, parent));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    /// Independent oracle: all triples, removal disconnects, no proper subset
    /// disconnects, not the star of a vertex.
    fn brute_force(emb: &PlanarEmbedding) -> Vec<[Edge; 3]> {
        let es = emb.edges();
        let disconnects = |cut: &[Edge]| components_without_edges(emb, cut).0 > 1;
        let mut out = Vec::new();
        for i in 0..es.len() {
            for j in i + 1..es.len() {
                for k in j + 1..es.len() {
                    let t = [es[i], es[j], es[k]];
                    if is_trivial(&t) || !disconnects(&t) {
                        continue;
                    }
                    let minimal = !t.iter().any(|&e| disconnects(&[e]))
                        && !disconnects(&[t[0], t[1]])
                        && !disconnects(&[t[0], t[2]])
                        && !disconnects(&[t[1], t[2]]);
                    if minimal {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    fn edges_of(cuts: &[EdgeCut]) -> Vec<[Edge; 3]> {
        cuts.iter().map(|c| c.edges).collect()
    }

    #[test]
    fn cube_has_no_nontrivial_cut() {
        let emb = corpus::generate_prism(2).unwrap().embedding;
        assert!(enumerate_3_edge_cuts(&emb).is_empty());
        assert!(brute_force(&emb).is_empty());
    }

    #[test]
    fn cube_pair_has_exactly_the_bridging_triple() {
        let g = corpus::build_named("cube_pair").unwrap();
        let cuts = enumerate_3_edge_cuts(&g.embedding);
        assert_eq!(edges_of(&cuts), brute_force(&g.embedding));
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].side_a.len(), 7);
        assert_eq!(cuts[0].side_b.len(), 7);
    }

    #[test]
    fn fallback_search_agrees_on_small_graphs() {
        for name in ["cube", "cube_pair", "prism_6"] {
            let emb = corpus::build_named(name).unwrap().embedding;
            let mut a: Vec<[Edge; 3]> = pair_bridge_search(&emb)
                .into_iter()
                .filter(|t| !is_trivial(t))
                .map(|mut t| {
                    t.sort_unstable();
                    t
                })
                .collect();
            a.sort_unstable();
            assert_eq!(a, brute_force(&emb), "{name}");
        }
    }

    #[test]
    fn bridges_of_a_path_and_a_cycle() {
        let p = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(bridges(&p).len(), 3);
        let c = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(bridges(&c).is_empty());
    }
}
