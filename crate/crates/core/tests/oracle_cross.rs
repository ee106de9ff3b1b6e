use barnette_core::corpus::{self, barnette_ladder_expansions};
use barnette_core::oracle::{
    count_hamiltonian_cycles, enumerate_hamiltonian_cycles, find_hamiltonian_cycle, longest_cycle, DEFAULT_BUDGET,
};
use barnette_core::{verify_cycle, Adjacency, SimpleGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Hamiltonian cycles by extending vertex sequences from vertex 0; each
/// undirected cycle is met twice, once per direction.
fn naive_count<A: Adjacency>(g: &A) -> u64 {
    fn extend<A: Adjacency>(g: &A, path: &mut Vec<usize>, used: &mut [bool], count: &mut u64) {
        let n = g.vertex_count();
        let last = *path.last().unwrap();
        if path.len() == n {
            if g.has_edge(last, path[0]) {
                *count += 1;
            }
            return;
        }
        for v in 0..n {
            if !used[v] && g.has_edge(last, v) {
                used[v] = true;
                path.push(v);
                extend(g, path, used, count);
                path.pop();
                used[v] = false;
            }
        }
    }
    let n = g.vertex_count();
    if n < 3 {
        return 0;
    }
    let mut used = vec![false; n];
    used[0] = true;
    let mut count = 0;
    extend(g, &mut vec![0], &mut used, &mut count);
    count / 2
}

fn petersen() -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.extend([(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]);
    }
    SimpleGraph::from_edges(10, edges)
}

fn complete_bipartite_33() -> SimpleGraph {
    SimpleGraph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b))))
}

fn check(name: &str, g: &impl Adjacency) {
    let cycles = enumerate_hamiltonian_cycles(g, DEFAULT_BUDGET).unwrap();
    assert_eq!(cycles.len() as u64, naive_count(g), "{name}");
    for c in &cycles {
        assert!(verify_cycle(g, c).is_hamiltonian, "{name}: {c:?}");
    }
    let mut dedup = cycles.clone();
    dedup.dedup();
    assert_eq!(dedup.len(), cycles.len());
}

#[test]
fn cube_has_six() {
    let cube = corpus::build_named("cube").unwrap().embedding;
    assert_eq!(naive_count(&cube), 6);
    assert_eq!(count_hamiltonian_cycles(&cube, DEFAULT_BUDGET).unwrap(), 6);
}

#[test]
fn counts_match_naive_enumeration_up_to_twelve() {
    check("prism_6", &corpus::build_named("prism_6").unwrap().embedding);
    check("cube", &corpus::build_named("cube").unwrap().embedding);
    check("petersen", &petersen());
    check("k33", &complete_bipartite_33());
    let cube = corpus::build_named("cube").unwrap().embedding;
    for (i, g) in barnette_ladder_expansions(&cube).iter().enumerate() {
        check(&format!("ladder {i}"), g);
    }
}

#[test]
fn counts_match_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(3..=10);
        let p = rng.gen_range(0.25..0.8);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = SimpleGraph::from_edges(n, edges.clone());
        check(&format!("{edges:?}"), &g);
    }
}

#[test]
fn search_results_pass_verifier() {
    for g in corpus::standard_corpus() {
        let s = find_hamiltonian_cycle(&g.embedding, DEFAULT_BUDGET);
        assert!(!s.exhausted(), "{}", g.name);
        if let Some(c) = s.cycle() {
            assert!(verify_cycle(&g.embedding, &c.vertices).is_hamiltonian);
        }
        let l = longest_cycle(&g.embedding, DEFAULT_BUDGET);
        assert!(l.certificate.is_cycle, "{}", g.name);
        assert_eq!(s.cycle().is_some(), l.certificate.is_hamiltonian);
    }
}

#[test]
fn petersen_circumference_is_nine() {
    let l = longest_cycle(&petersen(), DEFAULT_BUDGET);
    assert_eq!(l.certificate.length, 9);
    assert!(!l.exhausted);
}

#[test]
fn named_graph_verdicts() {
    let dodeca = corpus::build_named("dodecahedron").unwrap().embedding;
    assert!(find_hamiltonian_cycle(&dodeca, DEFAULT_BUDGET).cycle().is_some());
    let tutte = corpus::build_named("tutte_graph").unwrap().embedding;
    assert!(find_hamiltonian_cycle(&tutte, DEFAULT_BUDGET).proves_none());
    let hex = corpus::build_named("prism_6").unwrap().embedding;
    assert!(find_hamiltonian_cycle(&hex, DEFAULT_BUDGET).cycle().is_some());
}
