//! Simulation of the sharing protocol on a coloured graph.
//!
//! * Distribution: one share per weight class, the `i`-th smallest weight
//!   holding share index `i`. Threshold and share count both equal the
//!   number of classes, so every class is needed.
//! * Reconstruction: phases walk rainbow paths, each collecting the shares
//!   of the classes it crosses, until every class is held.
//! * Dissemination: rounds fire cycles through already-informed
//!   participants; when no cycle helps, one round of shortest paths
//!   reaches everyone left.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::colors::ClassGraph;
use crate::cover::optimal_cover;
use crate::error::{Error, Result};
use crate::formulas::SchemeParameters;
use crate::graph::{Graph, SchemeFamily, VertexId};
use crate::labeling::{edge_weights, verify_bijection, Labeling, WeightedColoring};
use crate::rainbow::{best_gain_path, RainbowPath};
use crate::sharing::{reconstruct, split, SecretConfig, Share};
use crate::{Meter, SearchBudget};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeInstance {
    pub graph: Graph,
    pub labeling: Labeling,
    pub coloring: WeightedColoring,
    pub class_to_share: BTreeMap<u32, Share>,
    pub secret: Vec<u8>,
    /// Closed-form parameters when the graph belongs to a scheme family.
    pub params: Option<SchemeParameters>,
}

impl SchemeInstance {
    pub fn k(&self) -> usize {
        self.class_to_share.len()
    }

    /// Shares a participant can read: one per class among its incident edges.
    pub fn participant_shares(&self, v: VertexId) -> Vec<&Share> {
        let weights: BTreeSet<u32> = self.graph.neighbors(v).iter().filter_map(|&u| self.coloring.weight(v, u)).collect();
        weights.iter().map(|wt| &self.class_to_share[wt]).collect()
    }
}

/// Splits `secret` into one share per weight class of the labeling's colouring.
pub fn distribute(graph: &Graph, labeling: &Labeling, secret: &[u8], seed: u64) -> Result<SchemeInstance> {
    if !verify_bijection(labeling, graph.n()) {
        return Err(Error::InvalidLabeling("labeling is not a bijection onto 1..=n".into()));
    }
    if !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    let coloring = edge_weights(graph, labeling)?;
    let classes = coloring.distinct_weights();
    let shares = split(secret, &SecretConfig::new(classes.len(), classes.len(), seed))?;
    let class_to_share = classes.into_iter().zip(shares).collect();
    let params = match (graph.family().and_then(|f| SchemeFamily::try_from(f).ok()), graph.p()) {
        (Some(f), p) if p >= 2 => SchemeParameters::closed_form(f, p).ok(),
        _ => None,
    };
    Ok(SchemeInstance { graph: graph.clone(), labeling: labeling.clone(), coloring, class_to_share, secret: secret.to_vec(), params })
}

/// How each reconstruction phase picks its path.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PhasePolicy {
    /// Path with the most uncollected classes (shorter, then lexicographically smaller, on ties).
    #[default]
    Greedy,
    /// Greedy, but no phase may collect more than `k - 1` classes.
    Clamped,
    /// Paths of a minimum cover, fewest participants among those.
    Optimal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionPhase {
    pub path: RainbowPath,
    pub newly_collected: BTreeSet<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionTrace {
    pub phases: Vec<ReconstructionPhase>,
    pub collected_after: Vec<BTreeSet<u32>>,
    pub participants_used: BTreeSet<VertexId>,
    pub recovered: Vec<u8>,
}

impl ReconstructionTrace {
    pub fn phase_count(&self) -> usize {
        self.phases.len()
    }
}

pub fn simulate_reconstruction(instance: &SchemeInstance, policy: PhasePolicy) -> Result<ReconstructionTrace> {
    simulate_reconstruction_with_budget(instance, policy, SearchBudget::default())
}

pub fn simulate_reconstruction_with_budget(instance: &SchemeInstance, policy: PhasePolicy, budget: SearchBudget) -> Result<ReconstructionTrace> {
    let (g, w) = (&instance.graph, &instance.coloring);
    let k = instance.k();
    let mut phases = Vec::new();
    let mut collected_after = Vec::new();
    let mut collected: BTreeSet<u32> = BTreeSet::new();

    let out_of_budget = |phases: usize, collected: usize| move |e: Error| match e {
        Error::BudgetExceeded { .. } => Error::ReconstructionBudget { phases, collected, total: k },
        other => other,
    };

    fn record(path: RainbowPath, collected: &mut BTreeSet<u32>, phases: &mut Vec<ReconstructionPhase>, after: &mut Vec<BTreeSet<u32>>) {
        let newly: BTreeSet<u32> = path.weights.iter().copied().filter(|wt| !collected.contains(wt)).collect();
        collected.extend(newly.iter().copied());
        after.push(collected.clone());
        phases.push(ReconstructionPhase { path, newly_collected: newly });
    }

    match policy {
        PhasePolicy::Optimal => {
            let cover = optimal_cover(g, w, budget).map_err(out_of_budget(0, 0))?;
            for path in cover.paths {
                record(path, &mut collected, &mut phases, &mut collected_after);
            }
        }
        PhasePolicy::Greedy | PhasePolicy::Clamped => {
            let cg = ClassGraph::new(g, w)?;
            let cap = if policy == PhasePolicy::Clamped && k > 1 { k - 1 } else { usize::MAX };
            let mut meter = Meter::new(budget);
            while collected.len() < k {
                let wanted = crate::colors::ColorSet::full(k).minus(cg.to_set(collected.iter().copied()));
                let done = collected_after.len();
                let vertices = best_gain_path(&cg, wanted, cap, &mut meter).map_err(out_of_budget(done, collected.len()))?;
                let path = RainbowPath::from_vertices(w, vertices).expect("path follows graph edges");
                record(path, &mut collected, &mut phases, &mut collected_after);
            }
        }
    }

    let participants_used = phases.iter().flat_map(|ph| ph.path.vertices.iter().copied()).collect();
    let shares: Vec<Share> = collected.iter().map(|wt| instance.class_to_share[wt].clone()).collect();
    let recovered = reconstruct(&shares, k)?;
    Ok(ReconstructionTrace { phases, collected_after, participants_used, recovered })
}

/// Minimum number of reconstruction phases over all rainbow-path covers.
pub fn empirical_rp(graph: &Graph, coloring: &WeightedColoring) -> Result<usize> {
    crate::cover::empirical_rp(graph, coloring)
}

/// Fewest participants over all phase-optimal covers.
pub fn empirical_m(graph: &Graph, coloring: &WeightedColoring) -> Result<usize> {
    crate::cover::empirical_m(graph, coloring)
}

pub const DEFAULT_CYCLE_LIMIT: usize = 1_000_000;

/// Simple cycles of at most `max_len` vertices through at least one anchor.
///
/// Each cycle is listed once, starting at its least vertex and oriented so
/// the second vertex is smaller than the last. The list is sorted.
pub fn enumerate_cycles(graph: &Graph, anchor: &BTreeSet<VertexId>, max_len: usize, limit: usize) -> Result<Vec<Vec<VertexId>>> {
    let n = graph.n();
    let mut out = Vec::new();
    if anchor.is_empty() || max_len < 3 {
        return Ok(out);
    }

    struct Walk<'a> {
        graph: &'a Graph,
        anchor: &'a BTreeSet<VertexId>,
        max_len: usize,
        limit: usize,
        start: VertexId,
        path: Vec<VertexId>,
        on_path: Vec<bool>,
        anchored: usize,
    }

    impl Walk<'_> {
        fn extend(&mut self, out: &mut Vec<Vec<VertexId>>) -> Result<()> {
            let end = *self.path.last().expect("non-empty path");
            for &u in self.graph.neighbors(end) {
                if u == self.start && self.path.len() >= 3 && self.path[1] < end && self.anchored > 0 {
                    if out.len() >= self.limit {
                        return Err(Error::TooManyCycles(self.limit));
                    }
                    out.push(self.path.clone());
                }
                if u <= self.start || self.on_path[u] || self.path.len() >= self.max_len {
                    continue;
                }
                let a = usize::from(self.anchor.contains(&u));
                self.on_path[u] = true;
                self.path.push(u);
                self.anchored += a;
                self.extend(out)?;
                self.anchored -= a;
                self.path.pop();
                self.on_path[u] = false;
            }
            Ok(())
        }
    }

    let mut walk = Walk { graph, anchor, max_len, limit, start: 0, path: Vec::new(), on_path: vec![false; n], anchored: 0 };
    for s in 0..n {
        walk.start = s;
        walk.path = vec![s];
        walk.on_path[s] = true;
        walk.anchored = usize::from(anchor.contains(&s));
        walk.extend(&mut out)?;
        walk.on_path[s] = false;
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Circuit {
    /// Closed walk, listed without repeating the first vertex.
    Cycle(Vec<VertexId>),
    /// Fallback path from an informed participant.
    Path(Vec<VertexId>),
}

impl Circuit {
    pub fn vertices(&self) -> &[VertexId] {
        match self {
            Circuit::Cycle(v) | Circuit::Path(v) => v,
        }
    }

    pub fn is_fallback(&self) -> bool {
        matches!(self, Circuit::Path(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisseminationRound {
    pub circuits: Vec<Circuit>,
    pub informed_after: BTreeSet<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisseminationTrace {
    pub informed0: BTreeSet<VertexId>,
    pub rounds: Vec<DisseminationRound>,
}

impl DisseminationTrace {
    pub fn round_count(&self) -> usize {
        self.rounds.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DisseminationOptions {
    /// Longest cycle (in vertices) a round may use; `None` allows all.
    pub max_cycle_len: Option<usize>,
    pub cycle_limit: usize,
}

impl Default for DisseminationOptions {
    fn default() -> Self {
        Self { max_cycle_len: None, cycle_limit: DEFAULT_CYCLE_LIMIT }
    }
}

/// Round-by-round spread from `informed0`.
///
/// Every cycle fired in a round passes through a participant informed
/// before the round began. Within a round the cycle adding the most new
/// participants fires next (shorter, then lexicographically smaller, on
/// ties) until no cycle adds anyone. A round in which no cycle helps
/// instead sends one shortest path to each remaining participant.
pub fn simulate_dissemination(graph: &Graph, informed0: &BTreeSet<VertexId>, opts: &DisseminationOptions) -> Result<DisseminationTrace> {
    let n = graph.n();
    if informed0.is_empty() {
        return Err(Error::InvalidParameter("the initial informed set is empty".into()));
    }
    if let Some(&bad) = informed0.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidParameter(format!("vertex {bad} is outside 0..{n}")));
    }
    let mut reachable = vec![false; n];
    for &s in informed0 {
        for (v, d) in graph.distances_from(s).into_iter().enumerate() {
            reachable[v] |= d.is_some();
        }
    }
    let unreachable: Vec<VertexId> = (0..n).filter(|&v| !reachable[v]).collect();
    if !unreachable.is_empty() {
        return Err(Error::Unreachable(unreachable));
    }

    let max_len = opts.max_cycle_len.unwrap_or(n).min(n);
    let mut informed = informed0.clone();
    let mut rounds = Vec::new();
    while informed.len() < n {
        let anchors = informed.clone();
        let cycles = enumerate_cycles(graph, &anchors, max_len, opts.cycle_limit)?;
        let mut circuits = Vec::new();
        loop {
            let gain = |c: &Vec<VertexId>| c.iter().filter(|v| !informed.contains(v)).count();
            let best = cycles
                .iter()
                .filter(|c| gain(c) > 0)
                .min_by(|a, b| gain(b).cmp(&gain(a)).then(a.len().cmp(&b.len())).then(a.cmp(b)));
            let Some(best) = best else { break };
            informed.extend(best.iter().copied());
            circuits.push(Circuit::Cycle(best.clone()));
        }
        if circuits.is_empty() {
            for v in 0..n {
                if informed.contains(&v) {
                    continue;
                }
                let path = graph.shortest_path_from_set(&anchors, v).expect("reachability checked up front");
                informed.extend(path.iter().copied());
                circuits.push(Circuit::Path(path));
            }
        }
        rounds.push(DisseminationRound { circuits, informed_after: informed.clone() });
    }
    Ok(DisseminationTrace { informed0: informed0.clone(), rounds })
}
