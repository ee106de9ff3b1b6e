//! Exact Hamiltonian search, used as ground truth for the carve.
//!
//! The solver decides every edge In or Out. Each vertex needs exactly two In
//! edges, so a vertex with two In edges drops the rest and a vertex with only
//! two candidates keeps both. Partial paths are tracked by their endpoints so
//! an edge closing a path early is rejected, and the search backs off as soon
//! as the non-Out edges stop connecting the vertex set. Branching picks the
//! most constrained vertex and its lowest-indexed undecided edge.

use std::collections::VecDeque;

use crate::embedding::{Adjacency, Edge, SimpleGraph, Vertex};
use crate::error::OracleError;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCertificate {
    pub vertices: Vec<Vertex>,
    /// Sequence is a simple closed cycle of the graph.
    pub is_cycle: bool,
    pub is_hamiltonian: bool,
    pub length: usize,
}

/// Checks a vertex sequence as a closed cycle: at least three vertices, no
/// repeats, consecutive (and last-to-first) vertices adjacent.
pub fn verify_cycle<A: Adjacency + ?Sized>(g: &A, vertices: &[Vertex]) -> CycleCertificate {
    let n = g.vertex_count();
    let k = vertices.len();
    let mut seen = vec![false; n];
    let mut is_cycle = k >= 3;
    for &v in vertices {
        if v >= n || seen[v] {
            is_cycle = false;
            break;
        }
        seen[v] = true;
    }
    if is_cycle {
        is_cycle = (0..k).all(|i| g.has_edge(vertices[i], vertices[(i + 1) % k]));
    }
    CycleCertificate {
        vertices: vertices.to_vec(),
        is_cycle,
        is_hamiltonian: is_cycle && k == n,
        length: k,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Hamiltonian(CycleCertificate),
    NonHamiltonian,
    /// Budget ran out before the search space was covered.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonSearch {
    pub verdict: Verdict,
    pub expansions: u64,
}

impl HamiltonSearch {
    pub fn cycle(&self) -> Option<&CycleCertificate> {
        match &self.verdict {
            Verdict::Hamiltonian(c) => Some(c),
            _ => None,
        }
    }

    pub fn proves_none(&self) -> bool {
        self.verdict == Verdict::NonHamiltonian
    }

    pub fn exhausted(&self) -> bool {
        self.verdict == Verdict::Undecided
    }
}

pub fn find_hamiltonian_cycle<A: Adjacency + ?Sized>(g: &A, budget: u64) -> HamiltonSearch {
    find_hamiltonian_cycle_with(g, &[], &[], budget)
}

/// Hamiltonian cycle containing every `required` edge and none of the
/// `forbidden` ones.
pub fn find_hamiltonian_cycle_with<A: Adjacency + ?Sized>(
    g: &A,
    required: &[Edge],
    forbidden: &[Edge],
    budget: u64,
) -> HamiltonSearch {
    let mut solver = Solver::new(g, None, budget);
    let mut found = None;
    let outcome = solver.run(required, forbidden, &mut |s| {
        found = Some(s.extract_cycle());
        false
    });
    let verdict = match (outcome, found) {
        (_, Some(cycle)) => Verdict::Hamiltonian(verify_cycle(g, &cycle)),
        (Flow::Exhausted, None) => Verdict::Undecided,
        _ => Verdict::NonHamiltonian,
    };
    HamiltonSearch { verdict, expansions: solver.expansions }
}

/// Every Hamiltonian cycle, each once: rotated to start at its lowest vertex
/// and oriented towards the smaller of that vertex's two cycle neighbours.
pub fn enumerate_hamiltonian_cycles<A: Adjacency + ?Sized>(
    g: &A,
    budget: u64,
) -> Result<Vec<Vec<Vertex>>, OracleError> {
    let mut solver = Solver::new(g, None, budget);
    let mut cycles = Vec::new();
    let outcome = solver.run(&[], &[], &mut |s| {
        cycles.push(s.extract_cycle());
        true
    });
    if outcome == Flow::Exhausted {
        return Err(OracleError::BudgetExhausted(budget));
    }
    cycles.sort();
    Ok(cycles)
}

pub fn count_hamiltonian_cycles<A: Adjacency + ?Sized>(g: &A, budget: u64) -> Result<u64, OracleError> {
    enumerate_hamiltonian_cycles(g, budget).map(|c| c.len() as u64)
}

/// Which pairs of the three terminals `(x, y, z)` are joined by a
/// Hamiltonian path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathProfile {
    pub terminals: [Vertex; 3],
    /// Unordered pairs, each stored `(min, max)`, sorted.
    pub feasible_pairs: Vec<(Vertex, Vertex)>,
}

impl PathProfile {
    pub fn admits(&self, a: Vertex, b: Vertex) -> bool {
        self.feasible_pairs.contains(&(a.min(b), a.max(b)))
    }

    /// Exactly two feasible pairs; they share one terminal, returned here.
    pub fn forced_terminal(&self) -> Option<Vertex> {
        if self.feasible_pairs.len() != 2 {
            return None;
        }
        let (p, q) = (self.feasible_pairs[0], self.feasible_pairs[1]);
        [p.0, p.1].into_iter().find(|&t| t == q.0 || t == q.1)
    }

    pub fn is_tutte_like(&self) -> bool {
        self.forced_terminal().is_some()
    }
}

/// Each pair is decided by a cycle search on the graph plus one auxiliary
/// vertex adjacent to both terminals of the pair.
pub fn hamiltonian_path_profile<A: Adjacency + ?Sized>(
    g: &A,
    terminals: [Vertex; 3],
    budget: u64,
) -> Result<PathProfile, OracleError> {
    let [x, y, z] = terminals;
    let n = g.vertex_count();
    if x == y || y == z || x == z || terminals.iter().any(|&t| t >= n) {
        return Err(OracleError::BadTerminals);
    }
    let mut feasible_pairs = Vec::new();
    for (a, b) in [(x, y), (x, z), (y, z)] {
        if hamiltonian_path_exists(g, a, b, budget)? {
            feasible_pairs.push((a.min(b), a.max(b)));
        }
    }
    feasible_pairs.sort_unstable();
    Ok(PathProfile { terminals, feasible_pairs })
}

pub fn hamiltonian_path_exists<A: Adjacency + ?Sized>(
    g: &A,
    a: Vertex,
    b: Vertex,
    budget: u64,
) -> Result<bool, OracleError> {
    let mut aug = SimpleGraph::from_adjacency(g);
    let aux = aug.add_vertex();
    aug.add_edge(aux, a);
    aug.add_edge(aux, b);
    match find_hamiltonian_cycle(&aug, budget).verdict {
        Verdict::Hamiltonian(_) => Ok(true),
        Verdict::NonHamiltonian => Ok(false),
        Verdict::Undecided => Err(OracleError::BudgetExhausted(budget)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestCycle {
    /// Longest cycle found; empty when none was found.
    pub certificate: CycleCertificate,
    /// Budget ran out; `certificate` is then only a lower bound.
    pub exhausted: bool,
    pub expansions: u64,
}

/// Exact circumference: a Hamiltonian search first, then searches for
/// cycles through exactly `n - k` vertices for k = 1, 2, ..., one search
/// per omitted vertex set. The first success is maximum.
pub fn longest_cycle<A: Adjacency + ?Sized>(g: &A, budget: u64) -> LongestCycle {
    let n = g.vertex_count();
    let mut spent = 0u64;
    for k in 0..=n.saturating_sub(3) {
        let mut omitted: Vec<usize> = (0..k).collect();
        loop {
            let mut active = vec![true; n];
            for &v in &omitted {
                active[v] = false;
            }
            let mut solver = Solver::new(g, Some(active), budget - spent);
            let mut found = None;
            let outcome = solver.run(&[], &[], &mut |s| {
                found = Some(s.extract_cycle());
                false
            });
            spent += solver.expansions;
            if let Some(cycle) = found {
                return LongestCycle {
                    certificate: verify_cycle(g, &cycle),
                    exhausted: false,
                    expansions: spent,
                };
            }
            if outcome == Flow::Exhausted || spent >= budget {
                return LongestCycle {
                    certificate: verify_cycle(g, &[]),
                    exhausted: true,
                    expansions: spent,
                };
            }
            if !next_combination(&mut omitted, n) {
                break;
            }
        }
    }
    LongestCycle { certificate: verify_cycle(g, &[]), exhausted: false, expansions: spent }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Free,
    In,
    Out,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
    Exhausted,
}

enum Undo {
    Decide(usize),
    End(Vertex, Vertex),
}

struct Solver {
    active: Vec<bool>,
    n_active: usize,
    ends: Vec<(Vertex, Vertex)>,
    incident: Vec<Vec<usize>>,
    state: Vec<EdgeState>,
    deg_in: Vec<u8>,
    free: Vec<u32>,
    // for a path endpoint, the opposite endpoint; a bare vertex points at itself
    end: Vec<Vertex>,
    in_count: usize,
    trail: Vec<Undo>,
    queue: Vec<Vertex>,
    expansions: u64,
    budget: u64,
}

impl Solver {
    fn new<A: Adjacency + ?Sized>(g: &A, active: Option<Vec<bool>>, budget: u64) -> Self {
        let n = g.vertex_count();
        let active = active.unwrap_or_else(|| vec![true; n]);
        let ends: Vec<(Vertex, Vertex)> = g.edge_list().iter().map(|e| (e.lo(), e.hi())).collect();
        let mut incident = vec![Vec::new(); n];
        let mut state = vec![EdgeState::Free; ends.len()];
        let mut free = vec![0u32; n];
        for (i, &(u, v)) in ends.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
            if active[u] && active[v] {
                free[u] += 1;
                free[v] += 1;
            } else {
                state[i] = EdgeState::Out;
            }
        }
        Solver {
            n_active: active.iter().filter(|&&a| a).count(),
            active,
            ends,
            incident,
            state,
            deg_in: vec![0; n],
            free,
            end: (0..n).collect(),
            in_count: 0,
            trail: Vec::new(),
            queue: Vec::new(),
            expansions: 0,
            budget,
        }
    }

    fn edge_id(&self, e: Edge) -> Option<usize> {
        self.incident
            .get(e.lo())?
            .iter()
            .copied()
            .find(|&i| self.ends[i] == (e.lo(), e.hi()))
    }

    fn run(&mut self, required: &[Edge], forbidden: &[Edge], on_found: &mut dyn FnMut(&Solver) -> bool) -> Flow {
        if self.n_active < 3 {
            return Flow::Continue;
        }
        for &e in required {
            match self.edge_id(e) {
                Some(i) if self.set_in(i) => {}
                _ => return Flow::Continue,
            }
        }
        for &e in forbidden {
            if let Some(i) = self.edge_id(e) {
                if !self.set_out(i) {
                    return Flow::Continue;
                }
            }
        }
        self.queue.extend((0..self.active.len()).filter(|&v| self.active[v]));
        if !self.propagate() {
            return Flow::Continue;
        }
        self.search(on_found)
    }

    fn search(&mut self, on_found: &mut dyn FnMut(&Solver) -> bool) -> Flow {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Flow::Exhausted;
        }
        if self.in_count == self.n_active {
            return if on_found(self) { Flow::Continue } else { Flow::Stop };
        }
        if !self.candidates_connected() {
            return Flow::Continue;
        }
        let Some(v) = (0..self.active.len())
            .filter(|&v| self.active[v] && self.deg_in[v] < 2 && self.free[v] > 0)
            .min_by_key(|&v| (self.free[v], v))
        else {
            return Flow::Continue;
        };
        let e = self.incident[v]
            .iter()
            .copied()
            .filter(|&i| self.state[i] == EdgeState::Free)
            .min()
            .expect("free edge present");
        for take in [true, false] {
            let mark = self.trail.len();
            self.queue.clear();
            let ok = if take { self.set_in(e) } else { self.set_out(e) };
            if ok && self.propagate() {
                let flow = self.search(on_found);
                if flow != Flow::Continue {
                    self.undo_to(mark);
                    return flow;
                }
            }
            self.undo_to(mark);
        }
        Flow::Continue
    }

    fn set_in(&mut self, e: usize) -> bool {
        match self.state[e] {
            EdgeState::In => return true,
            EdgeState::Out => return false,
            EdgeState::Free => {}
        }
        let (u, v) = self.ends[e];
        if self.deg_in[u] == 2 || self.deg_in[v] == 2 {
            return false;
        }
        let closing = self.deg_in[u] == 1 && self.end[u] == v;
        if closing && self.in_count + 1 != self.n_active {
            return false;
        }
        self.state[e] = EdgeState::In;
        self.trail.push(Undo::Decide(e));
        self.deg_in[u] += 1;
        self.deg_in[v] += 1;
        self.free[u] -= 1;
        self.free[v] -= 1;
        self.in_count += 1;
        if !closing {
            let (a, b) = (self.end[u], self.end[v]);
            self.trail.push(Undo::End(a, self.end[a]));
            self.trail.push(Undo::End(b, self.end[b]));
            self.end[a] = b;
            self.end[b] = a;
            self.queue.extend([a, b]);
        }
        self.queue.extend([u, v]);
        true
    }

    fn set_out(&mut self, e: usize) -> bool {
        match self.state[e] {
            EdgeState::Out => return true,
            EdgeState::In => return false,
            EdgeState::Free => {}
        }
        let (u, v) = self.ends[e];
        self.state[e] = EdgeState::Out;
        self.trail.push(Undo::Decide(e));
        self.free[u] -= 1;
        self.free[v] -= 1;
        self.queue.extend([u, v]);
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().expect("non-empty trail") {
                Undo::End(v, old) => self.end[v] = old,
                Undo::Decide(e) => {
                    let (u, v) = self.ends[e];
                    if self.state[e] == EdgeState::In {
                        self.deg_in[u] -= 1;
                        self.deg_in[v] -= 1;
                        self.in_count -= 1;
                    }
                    self.free[u] += 1;
                    self.free[v] += 1;
                    self.state[e] = EdgeState::Free;
                }
            }
        }
    }

    fn free_edges(&self, x: Vertex) -> Vec<usize> {
        self.incident[x]
            .iter()
            .copied()
            .filter(|&i| self.state[i] == EdgeState::Free)
            .collect()
    }

    fn propagate(&mut self) -> bool {
        while let Some(x) = self.queue.pop() {
            if !self.active[x] {
                continue;
            }
            let have = self.deg_in[x] as u32;
            if have == 2 {
                for i in self.free_edges(x) {
                    if !self.set_out(i) {
                        return false;
                    }
                }
                continue;
            }
            if have + self.free[x] < 2 {
                return false;
            }
            if have + self.free[x] == 2 {
                for i in self.free_edges(x) {
                    if !self.set_in(i) {
                        return false;
                    }
                }
                continue;
            }
            if have == 1 && self.in_count + 1 < self.n_active {
                let partner = self.end[x];
                for i in self.free_edges(x) {
                    let (u, v) = self.ends[i];
                    if (u == partner || v == partner) && !self.set_out(i) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn candidates_connected(&self) -> bool {
        let n = self.active.len();
        let Some(start) = (0..n).find(|&v| self.active[v]) else {
            return true;
        };
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut reached = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &i in &self.incident[v] {
                if self.state[i] == EdgeState::Out {
                    continue;
                }
                let (a, b) = self.ends[i];
                let u = if a == v { b } else { a };
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == self.n_active
    }

    fn extract_cycle(&self) -> Vec<Vertex> {
        let start = (0..self.active.len()).find(|&v| self.active[v]).expect("active vertex");
        let next_of = |v: Vertex, prev: Option<Vertex>| {
            self.incident[v]
                .iter()
                .filter(|&&i| self.state[i] == EdgeState::In)
                .map(|&i| {
                    let (a, b) = self.ends[i];
                    if a == v {
                        b
                    } else {
                        a
                    }
                })
                .filter(|&u| Some(u) != prev)
                .min()
        };
        let mut cycle = vec![start];
        let mut prev = None;
        let mut cur = start;
        while let Some(next) = next_of(cur, prev) {
            if next == start {
                break;
            }
            cycle.push(next);
            prev = Some(cur);
            cur = next;
        }
        cycle
    }
}
