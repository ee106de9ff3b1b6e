//! Connectivity primitives used by validation and cut enumeration.

use std::collections::{HashSet, VecDeque};

use crate::embedding::{Adjacency, Edge, PlanarEmbedding, Vertex};

pub fn is_connected<A: Adjacency + ?Sized>(g: &A) -> bool {
    let removed = vec![false; g.vertex_count()];
    connected_without(g, &removed)
}

/// True if the vertices not flagged in `removed` induce a connected graph.
/// An empty remainder counts as connected.
pub fn connected_without<A: Adjacency + ?Sized>(g: &A, removed: &[bool]) -> bool {
    let n = g.vertex_count();
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut reached = 1;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                reached += 1;
                queue.push_back(u);
            }
        }
    }
    reached == removed.iter().filter(|&&r| !r).count()
}

/// Component label of every vertex after deleting the given edges.
pub fn components_without_edges<A: Adjacency + ?Sized>(g: &A, cut: &[Edge]) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if label[u] == usize::MAX && !cut.contains(&Edge::new(u, v)) {
                    label[u] = count;
                    queue.push_back(u);
                }
            }
        }
        count += 1;
    }
    (count, label)
}

/// 3-connectivity by deleting every vertex and every pair of vertices.
/// Quadratically many BFS runs; meant for small graphs.
pub fn three_connected_exhaustive<A: Adjacency + ?Sized>(g: &A) -> bool {
    let n = g.vertex_count();
    if n < 4 || !is_connected(g) {
        return false;
    }
    let mut removed = vec![false; n];
    for a in 0..n {
        removed[a] = true;
        if !connected_without(g, &removed) {
            return false;
        }
        for b in a + 1..n {
            removed[b] = true;
            let ok = connected_without(g, &removed);
            removed[b] = false;
            if !ok {
                return false;
            }
        }
        removed[a] = false;
    }
    true
}

/// For a connected cubic graph with a sphere embedding: vertex and edge
/// connectivity coincide, and the graph is 3-edge-connected exactly when the
/// dual has no loops (bridges) and no parallel edges (2-edge-cuts).
pub fn cubic_plane_three_connected(emb: &PlanarEmbedding) -> bool {
    let mut pairs = HashSet::with_capacity(emb.edge_count());
    for e in 0..emb.edge_count() {
        let [a, b] = emb.faces_of_edge(e);
        if a == b || !pairs.insert((a.min(b), a.max(b))) {
            return false;
        }
    }
    true
}

/// Even's reduction: the graph is k-vertex-connected iff every pair among
/// the first k vertices, and every pair (v_i, w) with i < k, is joined by k
/// internally disjoint paths.
pub fn vertex_connectivity_at_least<A: Adjacency + ?Sized>(g: &A, k: usize) -> bool {
    let n = g.vertex_count();
    if n <= k || !is_connected(g) {
        return false;
    }
    let mut net = SplitNetwork::new(g);
    for i in 0..k {
        for w in i + 1..n {
            if net.disjoint_paths(i, w, k) < k {
                return false;
            }
        }
    }
    true
}

/// Unit-capacity vertex-split network: vertex v becomes v_in = 2v and
/// v_out = 2v + 1 joined by an arc of capacity one.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u8>,
    adj: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new<A: Adjacency + ?Sized>(g: &A) -> Self {
        let n = g.vertex_count();
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); 2 * n],
        };
        for v in 0..n {
            net.arc(2 * v, 2 * v + 1, 1);
            for &u in g.neighbors(v) {
                net.arc(2 * v + 1, 2 * u, 1);
            }
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u8) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Number of internally vertex-disjoint s-t paths, capped at `limit`.
    fn disjoint_paths(&mut self, s: Vertex, t: Vertex, limit: usize) -> usize {
        let original = self.cap.clone();
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < limit {
            let mut pred = vec![usize::MAX; self.adj.len()];
            let mut queue = VecDeque::from([source]);
            pred[source] = usize::MAX - 1;
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for &a in &self.adj[x] {
                    let y = self.head[a];
                    if self.cap[a] > 0 && pred[y] == usize::MAX {
                        pred[y] = a;
                        queue.push_back(y);
                    }
                }
            }
            if pred[sink] == usize::MAX {
                break;
            }
            let mut x = sink;
            while x != source {
                let a = pred[x];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                x = self.head[a ^ 1];
            }
            flow += 1;
        }
        self.cap = original;
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::embedding::SimpleGraph;

    #[test]
    fn cube_is_three_connected_by_every_method() {
        let emb = corpus::generate_prism(2).unwrap().embedding;
        assert!(three_connected_exhaustive(&emb));
        assert!(vertex_connectivity_at_least(&emb, 3));
        assert!(cubic_plane_three_connected(&emb));
        assert!(!vertex_connectivity_at_least(&emb, 4));
    }

    #[test]
    fn cycle_is_only_two_connected() {
        let c6 = SimpleGraph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6)));
        assert!(is_connected(&c6));
        assert!(vertex_connectivity_at_least(&c6, 2));
        assert!(!vertex_connectivity_at_least(&c6, 3));
        assert!(!three_connected_exhaustive(&c6));
    }

    #[test]
    fn components_after_cut() {
        let p = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let (count, label) = components_without_edges(&p, &[Edge::new(1, 2)]);
        assert_eq!(count, 2);
        assert_eq!(label, vec![0, 0, 1, 1]);
    }
}
