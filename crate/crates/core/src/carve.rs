//! Chamber expansion ("carving") for cubic plane graphs.
//!
//! Every outer edge except the entrance starts in the cycle. The face behind
//! the entrance is entered and its boundary labeled alternately cycle edge /
//! door, then each door is opened in turn and the face behind it is labeled
//! the same way. The carve never backtracks; a labeling conflict ends it with
//! a failure outcome.

use std::collections::VecDeque;
use std::fmt;

use crate::cuts::EdgeCut;
use crate::embedding::{Adjacency, Edge, PlanarEmbedding, Vertex};
use crate::error::CarveError;
use crate::oracle::verify_cycle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeRole {
    OuterHamiltonian,
    InnerHamiltonian,
    OuterDoor,
    InnerDoor,
    EntranceDoor,
    Unassigned,
}

impl EdgeRole {
    pub fn is_hamiltonian(self) -> bool {
        matches!(self, EdgeRole::OuterHamiltonian | EdgeRole::InnerHamiltonian)
    }

    pub fn is_door(self) -> bool {
        matches!(self, EdgeRole::OuterDoor | EdgeRole::InnerDoor | EdgeRole::EntranceDoor)
    }

    pub fn tag(self) -> &'static str {
        match self {
            EdgeRole::OuterHamiltonian => "H_o",
            EdgeRole::InnerHamiltonian => "H_i",
            EdgeRole::OuterDoor => "D_o",
            EdgeRole::InnerDoor => "D_i",
            EdgeRole::EntranceDoor => "d_e",
            EdgeRole::Unassigned => "none",
        }
    }
}

impl fmt::Display for EdgeRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CarveStatus {
    HamiltonianCycle,
    NearCycle,
    Failure,
}

impl fmt::Display for CarveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CarveStatus::HamiltonianCycle => "hamiltonian_cycle",
            CarveStatus::NearCycle => "near_cycle",
            CarveStatus::Failure => "failure",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureKind {
    OddFace { face: usize, length: usize },
    /// The edge must be both in the cycle and a door, or it would give
    /// `vertex` a third cycle edge.
    RoleConflict { edge: Edge, vertex: Option<Vertex> },
    DoorAdjacency { edge: Edge, vertex: Vertex },
    PrematureCycle { length: usize },
    /// Frontier ran dry with fewer than n cycle edges.
    Exhausted { hamiltonian_edges: usize },
    /// Labels claimed a cycle the verifier rejected.
    VerifierRejected,
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureKind::OddFace { face, length } => write!(f, "face {face} has odd length {length}"),
            FailureKind::RoleConflict { edge, vertex: Some(v) } => {
                write!(f, "edge {edge} would be a third cycle edge at vertex {v}")
            }
            FailureKind::RoleConflict { edge, vertex: None } => {
                write!(f, "edge {edge} is required to be both a cycle edge and a door")
            }
            FailureKind::DoorAdjacency { edge, vertex } => {
                write!(f, "door {edge} touches another door at vertex {vertex}")
            }
            FailureKind::PrematureCycle { length } => {
                write!(f, "cycle edges closed a cycle of length {length}")
            }
            FailureKind::Exhausted { hamiltonian_edges } => {
                write!(f, "no doors left with {hamiltonian_edges} cycle edges")
            }
            FailureKind::VerifierRejected => f.write_str("verifier rejected the labeled cycle"),
        }
    }
}

/// Order in which the doors found on one face join the frontier.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum DoorWalk {
    /// Along the face-successor direction from the entering door.
    #[default]
    Right,
    Left,
}

/// When a door position of an opened face is taken into the cycle instead.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Promotion {
    /// The face across the edge has an outer cycle edge on its boundary.
    #[default]
    OuterCycle,
    /// Experimental: the face across the edge also borders an entered face
    /// or a face some queued door leads into. A door there would let the
    /// explored faces close a ring.
    ExploredRegion,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CarveOptions {
    pub walk: DoorWalk,
    pub promotion: Promotion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeEvent {
    /// Edge shared by the opened face and the bridge face.
    pub edge: Edge,
    /// Second door, on the bridge face, promoted with `edge`.
    pub door: Edge,
    pub face: usize,
}

/// One door opening.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Opening {
    pub step: usize,
    /// 0 for single carves; 0 or 1 in double mode.
    pub side: usize,
    pub door: Edge,
    pub face: usize,
    /// Roles given out by this opening, in boundary order.
    pub assigned: Vec<(Edge, EdgeRole)>,
    /// Door positions turned into cycle edges because their other face
    /// carries an outer cycle edge.
    pub promoted: Vec<Edge>,
    pub bridge: Option<BridgeEvent>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarveResult {
    pub status: CarveStatus,
    /// The Hamiltonian or near cycle; empty on failure.
    pub cycle: Vec<Vertex>,
    /// Final role of every edge, indexed like `PlanarEmbedding::edges`.
    pub roles: Vec<EdgeRole>,
    pub trace: Vec<Opening>,
    pub entrances: Vec<Edge>,
    pub failure: Option<FailureKind>,
    /// Longest cycle available from the cycle-edge labels: a closed
    /// component, or a path whose ends are adjacent in the graph.
    pub best_cycle: Vec<Vertex>,
}

impl CarveResult {
    pub fn failure_reason(&self) -> Option<String> {
        self.failure.as_ref().map(|f| f.to_string())
    }

    pub fn count(&self, role: EdgeRole) -> usize {
        self.roles.iter().filter(|&&r| r == role).count()
    }

    pub fn promotions(&self) -> usize {
        self.trace.iter().map(|o| o.promoted.len()).sum()
    }

    pub fn bridge_events(&self) -> usize {
        self.trace.iter().filter(|o| o.bridge.is_some()).count()
    }

    /// Whether the shared-outer-edge reading of the expansion rule changed
    /// any label.
    pub fn interpretation_fired(&self) -> bool {
        self.promotions() > 0 || self.bridge_events() > 0
    }
}

/// An outer edge suitable as entrance, with the reasons it may be suspect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EntranceChoice {
    pub edge: Edge,
    /// The edge is itself an edge of some nontrivial 3-cut.
    pub is_cut_edge: bool,
    /// No outer edge avoided every cut side; this one is excluded by the
    /// fewest cuts.
    pub fallback: bool,
    pub excluded_by: usize,
}

pub fn outer_edges(emb: &PlanarEmbedding) -> Vec<Edge> {
    let mut es: Vec<Edge> = emb.outer_face().edges().collect();
    es.sort_unstable();
    es.dedup();
    es
}

fn check_outer(emb: &PlanarEmbedding) -> Result<(), CarveError> {
    let len = emb.outer_face().len();
    if len < 4 {
        return Err(CarveError::OuterCycleTooShort(len));
    }
    Ok(())
}

/// Outer edges not strictly inside either side of any cut, least first.
pub fn admissible_entrances(emb: &PlanarEmbedding, cuts: &[EdgeCut]) -> Vec<Edge> {
    outer_edges(emb)
        .into_iter()
        .filter(|&e| cuts.iter().all(|c| !c.strictly_inside(e)))
        .collect()
}

pub fn select_entrance(emb: &PlanarEmbedding, cuts: &[EdgeCut]) -> Result<EntranceChoice, CarveError> {
    check_outer(emb)?;
    let excluded = |e: Edge| cuts.iter().filter(|c| c.strictly_inside(e)).count();
    let (edge, excluded_by) = outer_edges(emb)
        .into_iter()
        .map(|e| (e, excluded(e)))
        .min_by_key(|&(e, k)| (k, e))
        .expect("outer face has edges");
    Ok(EntranceChoice {
        edge,
        is_cut_edge: cuts.iter().any(|c| c.contains(edge)),
        fallback: excluded_by > 0,
        excluded_by,
    })
}

pub fn carve(emb: &PlanarEmbedding, entrance: Edge) -> Result<CarveResult, CarveError> {
    carve_with(emb, entrance, CarveOptions::default())
}

pub fn carve_with(emb: &PlanarEmbedding, entrance: Edge, options: CarveOptions) -> Result<CarveResult, CarveError> {
    let e = outer_entrance(emb, entrance)?;
    Ok(Carver::new(emb, options, &[e]).run())
}

/// Two expansion fronts, one per entrance, taking turns door by door.
pub fn carve_double(
    emb: &PlanarEmbedding,
    entrances: [Edge; 2],
    options: CarveOptions,
) -> Result<CarveResult, CarveError> {
    let [a, b] = entrances;
    if a == b {
        return Err(CarveError::SameEntrance(a));
    }
    if a.shares_endpoint(b) {
        return Err(CarveError::AdjacentEntrances(a, b));
    }
    let ia = outer_entrance(emb, a)?;
    let ib = outer_entrance(emb, b)?;
    Ok(Carver::new(emb, options, &[ia, ib]).run())
}

fn outer_entrance(emb: &PlanarEmbedding, e: Edge) -> Result<usize, CarveError> {
    let idx = emb.edge_index(e).ok_or(CarveError::UnknownEdge(e))?;
    check_outer(emb)?;
    if !emb.faces_of_edge(idx).contains(&emb.outer_face_id()) {
        return Err(CarveError::NotOuterEdge(e));
    }
    Ok(idx)
}

struct Carver<'a> {
    emb: &'a PlanarEmbedding,
    options: CarveOptions,
    entrances: Vec<usize>,
    roles: Vec<EdgeRole>,
    entered: Vec<bool>,
    frontiers: Vec<VecDeque<usize>>,
    // edge is a door still waiting in some frontier
    queued: Vec<bool>,
    // queued doors per face they lead into
    pending: Vec<u32>,
    // outer cycle edges per face
    outer_h: Vec<u32>,
    ham_deg: Vec<u8>,
    door_deg: Vec<u8>,
    h_count: usize,
    parent: Vec<usize>,
    size: Vec<usize>,
    closed: bool,
    trace: Vec<Opening>,
}

type Step = Result<(), FailureKind>;

impl<'a> Carver<'a> {
    fn new(emb: &'a PlanarEmbedding, options: CarveOptions, entrances: &[usize]) -> Self {
        let n = emb.vertex_count();
        let m = emb.edge_count();
        let sides = entrances.len();
        Carver {
            emb,
            options,
            entrances: entrances.to_vec(),
            roles: vec![EdgeRole::Unassigned; m],
            entered: vec![false; emb.face_count()],
            frontiers: vec![VecDeque::new(); sides],
            queued: vec![false; m],
            pending: vec![0; emb.face_count()],
            outer_h: vec![0; emb.face_count()],
            ham_deg: vec![0; n],
            door_deg: vec![0; n],
            h_count: 0,
            parent: (0..n).collect(),
            size: vec![1; n],
            closed: false,
            trace: Vec::new(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn other_face(&self, e: usize, f: usize) -> usize {
        let [a, b] = self.emb.faces_of_edge(e);
        if a == f {
            b
        } else {
            a
        }
    }

    fn set_role(&mut self, e: usize, role: EdgeRole, log: &mut Vec<(Edge, EdgeRole)>) -> Step {
        let edge = self.emb.edges()[e];
        let current = self.roles[e];
        if current != EdgeRole::Unassigned {
            if current.is_hamiltonian() == role.is_hamiltonian() {
                return Ok(());
            }
            return Err(FailureKind::RoleConflict { edge, vertex: None });
        }
        let (u, v) = (edge.lo(), edge.hi());
        if role.is_hamiltonian() {
            self.add_hamiltonian(edge)?;
        } else {
            for w in [u, v] {
                if self.door_deg[w] > 0 {
                    return Err(FailureKind::DoorAdjacency { edge, vertex: w });
                }
            }
            self.door_deg[u] += 1;
            self.door_deg[v] += 1;
        }
        self.roles[e] = role;
        log.push((edge, role));
        Ok(())
    }

    fn add_hamiltonian(&mut self, edge: Edge) -> Step {
        let (u, v) = (edge.lo(), edge.hi());
        for w in [u, v] {
            if self.ham_deg[w] == 2 {
                return Err(FailureKind::RoleConflict { edge, vertex: Some(w) });
            }
        }
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            let length = self.size[ru];
            if length != self.emb.vertex_count() {
                return Err(FailureKind::PrematureCycle { length });
            }
            self.closed = true;
        } else {
            let (big, small) = if self.size[ru] >= self.size[rv] { (ru, rv) } else { (rv, ru) };
            self.parent[small] = big;
            self.size[big] += self.size[small];
        }
        self.ham_deg[u] += 1;
        self.ham_deg[v] += 1;
        self.h_count += 1;
        Ok(())
    }

    /// Door to cycle edge, used by the bridge rule; checked beforehand.
    fn promote_door(&mut self, e: usize) -> Step {
        let edge = self.emb.edges()[e];
        self.add_hamiltonian(edge)?;
        self.door_deg[edge.lo()] -= 1;
        self.door_deg[edge.hi()] -= 1;
        self.roles[e] = EdgeRole::InnerHamiltonian;
        Ok(())
    }

    fn run(mut self) -> CarveResult {
        let outcome = self.expand();
        self.finish(outcome)
    }

    fn expand(&mut self) -> Step {
        let emb = self.emb;
        let outer = emb.outer_face_id();
        self.entered[outer] = true;
        let mut log = Vec::new();
        for e in outer_edges(emb).into_iter().filter_map(|e| emb.edge_index(e)) {
            if self.entrances.contains(&e) {
                self.set_role(e, EdgeRole::EntranceDoor, &mut log)?;
            } else {
                self.set_role(e, EdgeRole::OuterHamiltonian, &mut log)?;
                for f in emb.faces_of_edge(e) {
                    self.outer_h[f] += 1;
                }
            }
        }
        for side in 0..self.entrances.len() {
            let e = self.entrances[side];
            let chamber = self.other_face(e, outer);
            if !self.entered[chamber] {
                self.open(side, e, chamber, false)?;
            }
        }
        loop {
            if self.closed {
                return Ok(());
            }
            let mut progressed = false;
            for side in 0..self.frontiers.len() {
                let Some(door) = self.next_door(side) else { continue };
                progressed = true;
                self.knock(side, door)?;
                if self.closed {
                    return Ok(());
                }
            }
            if !progressed {
                return Err(FailureKind::Exhausted { hamiltonian_edges: self.h_count });
            }
        }
    }

    fn next_door(&mut self, side: usize) -> Option<usize> {
        while let Some(d) = self.frontiers[side].pop_front() {
            if self.queued[d] {
                self.queued[d] = false;
                for f in self.emb.faces_of_edge(d) {
                    if !self.entered[f] {
                        self.pending[f] -= 1;
                    }
                }
                return Some(d);
            }
        }
        None
    }

    fn knock(&mut self, side: usize, door: usize) -> Step {
        let [a, b] = self.emb.faces_of_edge(door);
        let behind = if !self.entered[a] {
            a
        } else if !self.entered[b] {
            b
        } else {
            // both sides explored: only the bridge rule may still use it
            let at = self.trace.len();
            if let Some(ev) = self.bridge(side, door, b)? {
                self.trace.push(Opening {
                    step: at,
                    side,
                    door: self.emb.edges()[door],
                    face: b,
                    assigned: Vec::new(),
                    promoted: Vec::new(),
                    bridge: Some(ev),
                });
            }
            return Ok(());
        };
        self.open(side, door, behind, true)
    }

    /// Labels `face`, entered through `door`, alternately cycle edge and
    /// door. With `promote`, a door position whose other face carries an
    /// outer cycle edge becomes a cycle edge.
    fn open(&mut self, side: usize, door: usize, face: usize, promote: bool) -> Step {
        let emb = self.emb;
        let len = emb.face(face).len();
        self.entered[face] = true;
        let step = self.trace.len();
        self.trace.push(Opening {
            step,
            side,
            door: emb.edges()[door],
            face,
            assigned: Vec::new(),
            promoted: Vec::new(),
            bridge: None,
        });
        if len % 2 == 1 {
            return Err(FailureKind::OddFace { face, length: len });
        }
        let start = emb
            .darts_of_edge(door)
            .into_iter()
            .find(|&d| emb.face_of_dart(d) == face)
            .expect("door borders the face");
        let mut walk = Vec::with_capacity(len);
        let mut d = emb.face_successor(start);
        while d != start {
            walk.push(emb.edge_of_dart(d));
            d = emb.face_successor(d);
        }

        let mut log = Vec::new();
        let mut promoted = Vec::new();
        let mut new_doors = Vec::new();
        let mut result = Ok(());
        for (i, &e) in walk.iter().enumerate() {
            let position = i + 1;
            let mut role = if position % 2 == 1 { EdgeRole::InnerHamiltonian } else { EdgeRole::InnerDoor };
            if promote && role == EdgeRole::InnerDoor && self.must_stay_inside(e, face) {
                role = EdgeRole::InnerHamiltonian;
                if self.roles[e] == EdgeRole::Unassigned {
                    promoted.push(emb.edges()[e]);
                }
            }
            let fresh = self.roles[e] == EdgeRole::Unassigned;
            if let Err(f) = self.set_role(e, role, &mut log) {
                result = Err(f);
                break;
            }
            if fresh && role == EdgeRole::InnerDoor {
                new_doors.push(e);
            }
        }
        if self.options.walk == DoorWalk::Left {
            new_doors.reverse();
        }
        for &e in &new_doors {
            self.queued[e] = true;
            let far = self.other_face(e, face);
            self.pending[far] += 1;
            self.frontiers[side].push_back(e);
        }
        let opening = self.trace.last_mut().expect("opening recorded");
        opening.assigned = log;
        opening.promoted = promoted;
        result?;
        if self.closed {
            return Ok(());
        }
        if let Some(ev) = self.bridge(side, door, face)? {
            self.trace.last_mut().expect("opening recorded").bridge = Some(ev);
        }
        Ok(())
    }

    fn must_stay_inside(&self, e: usize, face: usize) -> bool {
        let across = self.other_face(e, face);
        if self.outer_h[across] > 0 {
            return true;
        }
        if self.options.promotion == Promotion::OuterCycle {
            return false;
        }
        let emb = self.emb;
        self.pending[across] > 0
            || emb.face(across).edges().filter_map(|x| emb.edge_index(x)).any(|x| {
                let g = self.other_face(x, across);
                x != e && g != face && (self.entered[g] || self.pending[g] > 0)
            })
    }

    /// Bridge-face rule: an edge `e` of `face`, not yet in the cycle, whose
    /// other face is unexplored, carries an outer cycle edge and has a
    /// queued door `d_j`. Both `e` and `d_j` join the cycle, the other face
    /// counts as entered, and the doors of the face beyond `d_j` move to the
    /// front of the frontier.
    fn bridge(&mut self, side: usize, door: usize, face: usize) -> Result<Option<BridgeEvent>, FailureKind> {
        let emb = self.emb;
        for e in emb.face(face).edges().filter_map(|x| emb.edge_index(x)) {
            if e == door || self.roles[e].is_hamiltonian() || self.roles[e] == EdgeRole::EntranceDoor {
                continue;
            }
            let cj = self.other_face(e, face);
            if self.entered[cj] || self.outer_h[cj] == 0 || self.pending[cj] == 0 {
                continue;
            }
            let dj = emb
                .face(cj)
                .edges()
                .filter_map(|x| emb.edge_index(x))
                .find(|&x| x != door && x != e && self.queued[x]);
            let Some(dj) = dj else { continue };
            if !self.bridge_is_legal(e, dj) {
                continue;
            }
            if self.roles[e] == EdgeRole::Unassigned {
                let mut sink = Vec::new();
                self.set_role(e, EdgeRole::InnerHamiltonian, &mut sink)?;
            } else {
                self.promote_door(e)?;
            }
            self.promote_door(dj)?;
            self.queued[dj] = false;
            self.pending[cj] -= 1;
            self.entered[cj] = true;
            let beyond = self.other_face(dj, cj);
            let frontier = &mut self.frontiers[side];
            let (mut front, back): (VecDeque<usize>, VecDeque<usize>) =
                frontier.drain(..).partition(|&x| emb.faces_of_edge(x).contains(&beyond));
            front.extend(back);
            *frontier = front;
            let edges = emb.edges();
            return Ok(Some(BridgeEvent { edge: edges[e], door: edges[dj], face: cj }));
        }
        Ok(None)
    }

    fn bridge_is_legal(&mut self, e: usize, dj: usize) -> bool {
        let (a, b) = (self.emb.edges()[e], self.emb.edges()[dj]);
        let ends = [a.lo(), a.hi(), b.lo(), b.hi()];
        for &x in &ends {
            let extra = ends.iter().filter(|&&y| y == x).count();
            if self.ham_deg[x] as usize + extra > 2 {
                return false;
            }
        }
        let (ra, rb) = (self.find(a.lo()), self.find(a.hi()));
        if ra == rb {
            return false;
        }
        let (rc, rd) = (self.find(b.lo()), self.find(b.hi()));
        let merged = |x: usize| if x == rb { ra } else { x };
        if merged(rc) == merged(rd) {
            return self.h_count + 2 == self.emb.vertex_count();
        }
        true
    }

    fn finish(self, outcome: Step) -> CarveResult {
        let emb = self.emb;
        let n = emb.vertex_count();
        let mut roles = self.roles;
        let entrances: Vec<Edge> = self.entrances.iter().map(|&e| emb.edges()[e]).collect();
        let ham: Vec<Edge> = emb
            .edges()
            .iter()
            .zip(&roles)
            .filter(|(_, r)| r.is_hamiltonian())
            .map(|(&e, _)| e)
            .collect();
        let mut status = CarveStatus::Failure;
        let mut cycle = Vec::new();
        let mut failure = outcome.err();
        let pieces = cycle_pieces(emb, &ham);

        if failure.is_none() && self.closed && self.h_count == n {
            let candidate = pieces.closed.first().cloned().unwrap_or_default();
            if verify_cycle(emb, &candidate).is_hamiltonian {
                status = CarveStatus::HamiltonianCycle;
                cycle = candidate;
                for r in roles.iter_mut().filter(|r| **r == EdgeRole::Unassigned) {
                    *r = EdgeRole::InnerDoor;
                }
            } else {
                failure = Some(FailureKind::VerifierRejected);
            }
        }
        if status == CarveStatus::Failure {
            let near = near_cycle(emb, &failure, &pieces);
            if let Some(c) = near {
                status = CarveStatus::NearCycle;
                cycle = c;
            }
        }
        let best_cycle = if status == CarveStatus::Failure {
            pieces.longest()
        } else {
            cycle.clone()
        };
        CarveResult {
            status,
            cycle,
            roles,
            trace: self.trace,
            entrances,
            failure,
            best_cycle,
        }
    }
}

/// Closed components and open paths of the cycle-edge subgraph.
struct Pieces {
    closed: Vec<Vec<Vertex>>,
    paths: Vec<Vec<Vertex>>,
    uncovered: usize,
}

impl Pieces {
    fn longest_closable_path<A: Adjacency>(&self, g: &A) -> Option<&Vec<Vertex>> {
        self.paths
            .iter()
            .filter(|p| p.len() >= 3 && g.has_edge(p[0], p[p.len() - 1]))
            .max_by_key(|p| p.len())
    }

    fn longest(&self) -> Vec<Vertex> {
        self.closed.iter().chain(self.paths.iter()).max_by_key(|c| c.len()).cloned().unwrap_or_default()
    }
}

fn cycle_pieces(emb: &PlanarEmbedding, ham: &[Edge]) -> Pieces {
    let n = emb.vertex_count();
    let mut nbrs: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for e in ham {
        nbrs[e.lo()].push(e.hi());
        nbrs[e.hi()].push(e.lo());
    }
    for l in &mut nbrs {
        l.sort_unstable();
    }
    let mut seen = vec![false; n];
    let walk = |start: Vertex, seen: &mut Vec<bool>| {
        let mut seq = vec![start];
        seen[start] = true;
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = nbrs[cur].iter().copied().find(|&u| u != prev && !seen[u]);
            match next {
                Some(u) => {
                    seen[u] = true;
                    seq.push(u);
                    prev = cur;
                    cur = u;
                }
                None => return seq,
            }
        }
    };
    let mut pieces = Pieces { closed: Vec::new(), paths: Vec::new(), uncovered: 0 };
    for v in 0..n {
        if nbrs[v].len() == 1 && !seen[v] {
            let p = walk(v, &mut seen);
            pieces.paths.push(p);
        }
    }
    for v in 0..n {
        if nbrs[v].is_empty() {
            pieces.uncovered += 1;
        } else if !seen[v] {
            pieces.closed.push(walk(v, &mut seen));
        }
    }
    pieces
}

/// A cycle on n - 1 vertices: the labels closed one early, or they form a
/// single path through all but one vertex whose ends are adjacent.
fn near_cycle(emb: &PlanarEmbedding, failure: &Option<FailureKind>, pieces: &Pieces) -> Option<Vec<Vertex>> {
    let n = emb.vertex_count();
    if let Some(FailureKind::PrematureCycle { length }) = failure {
        if *length == n - 1 {
            if let Some(path) = pieces.paths.iter().find(|p| p.len() == n - 1) {
                return Some(path.clone());
            }
        }
    }
    if pieces.closed.is_empty() && pieces.paths.len() == 1 && pieces.uncovered == 1 {
        let path = pieces.longest_closable_path(emb)?;
        if path.len() == n - 1 {
            return Some(path.clone());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn cube() -> PlanarEmbedding {
        corpus::build_named("cube").unwrap().embedding
    }

    #[test]
    fn cube_carves_a_hamiltonian_cycle() {
        let emb = cube();
        let r = carve(&emb, Edge::new(0, 1)).unwrap();
        assert_eq!(r.status, CarveStatus::HamiltonianCycle, "{:?}", r.failure);
        assert_eq!(r.cycle.len(), 8);
        assert!(verify_cycle(&emb, &r.cycle).is_hamiltonian);
        assert_eq!(r.count(EdgeRole::OuterHamiltonian) + r.count(EdgeRole::InnerHamiltonian), 8);
        assert_eq!(r.count(EdgeRole::OuterHamiltonian), 3);
        assert_eq!(r.count(EdgeRole::EntranceDoor), 1);
        assert_eq!(r.count(EdgeRole::Unassigned), 0);
        assert_eq!(r.bridge_events(), 0);
    }

    #[test]
    fn first_chamber_alternates() {
        let r = carve(&cube(), Edge::new(0, 1)).unwrap();
        let first = &r.trace[0];
        assert_eq!(first.door, Edge::new(0, 1));
        let roles: Vec<EdgeRole> = first.assigned.iter().map(|a| a.1).collect();
        assert_eq!(
            roles,
            vec![EdgeRole::InnerHamiltonian, EdgeRole::InnerDoor, EdgeRole::InnerHamiltonian]
        );
    }

    #[test]
    fn preconditions() {
        let emb = cube();
        assert_eq!(carve(&emb, Edge::new(0, 2)), Err(CarveError::UnknownEdge(Edge::new(0, 2))));
        assert_eq!(carve(&emb, Edge::new(4, 5)), Err(CarveError::NotOuterEdge(Edge::new(4, 5))));
        let opts = CarveOptions::default();
        assert_eq!(
            carve_double(&emb, [Edge::new(0, 1), Edge::new(1, 2)], opts),
            Err(CarveError::AdjacentEntrances(Edge::new(0, 1), Edge::new(1, 2)))
        );
        assert_eq!(
            carve_double(&emb, [Edge::new(0, 1), Edge::new(0, 1)], opts),
            Err(CarveError::SameEntrance(Edge::new(0, 1)))
        );
    }

    #[test]
    fn odd_face_is_a_failure_not_a_panic() {
        let emb = corpus::build_named("dodecahedron").unwrap().embedding;
        let e = outer_edges(&emb)[0];
        let r = carve(&emb, e).unwrap();
        assert_eq!(r.status, CarveStatus::Failure);
        assert!(matches!(r.failure, Some(FailureKind::OddFace { length: 5, .. })));
        assert!(r.cycle.is_empty());
    }

    #[test]
    fn entrance_choice_on_cut_free_graph() {
        let emb = cube();
        let c = select_entrance(&emb, &[]).unwrap();
        assert_eq!(c.edge, Edge::new(0, 1));
        assert!(!c.fallback && !c.is_cut_edge);
        assert_eq!(admissible_entrances(&emb, &[]).len(), 4);
    }

    #[test]
    fn left_walk_labels_like_right_walk_on_the_cube() {
        let emb = cube();
        let right = carve(&emb, Edge::new(0, 1)).unwrap();
        let left = carve_with(&emb, Edge::new(0, 1), CarveOptions { walk: DoorWalk::Left, ..Default::default() }).unwrap();
        assert_eq!(left.status, CarveStatus::HamiltonianCycle);
        assert_eq!(left.roles, right.roles);
    }

    #[test]
    fn pieces_of_a_path() {
        let emb = cube();
        let ham = [Edge::new(0, 1), Edge::new(1, 2), Edge::new(2, 3)];
        let p = cycle_pieces(&emb, &ham);
        assert_eq!(p.paths, vec![vec![0, 1, 2, 3]]);
        assert!(p.closed.is_empty());
        assert_eq!(p.uncovered, 4);
        assert_eq!(p.longest_closable_path(&emb), Some(&vec![0, 1, 2, 3]));
    }
}
