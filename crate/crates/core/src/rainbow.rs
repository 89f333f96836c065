//! Rainbow paths, rainbow connectivity and the exact RACN search.
//!
//! A path is rainbow when its edge weights are pairwise distinct. A
//! colouring is rainbow connected when every vertex pair is joined by a
//! rainbow path. The RACN of a graph is the fewest distinct weights over
//! all bijective labelings whose colouring is rainbow connected.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::colors::{ClassGraph, ColorSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::labeling::{edge_weights, verify_bijection, Labeling, WeightedColoring};
use crate::{Meter, SearchBudget};

/// Simple path with pairwise distinct edge weights.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RainbowPath {
    pub vertices: Vec<VertexId>,
    pub weights: Vec<u32>,
}

impl RainbowPath {
    pub fn from_vertices(w: &WeightedColoring, vertices: Vec<VertexId>) -> Option<Self> {
        let weights = vertices.windows(2).map(|p| w.weight(p[0], p[1])).collect::<Option<Vec<_>>>()?;
        Some(Self { vertices, weights })
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight_set(&self) -> BTreeSet<u32> {
        self.weights.iter().copied().collect()
    }

    /// Adjacency, simplicity, weight agreement with `w` and distinctness.
    pub fn is_valid(&self, g: &Graph, w: &WeightedColoring) -> bool {
        if self.vertices.is_empty() || self.weights.len() + 1 != self.vertices.len() {
            return false;
        }
        let distinct_vertices: BTreeSet<_> = self.vertices.iter().collect();
        let distinct_weights: BTreeSet<_> = self.weights.iter().collect();
        distinct_vertices.len() == self.vertices.len()
            && distinct_weights.len() == self.weights.len()
            && self.vertices.windows(2).zip(&self.weights).all(|(p, &wt)| g.has_edge(p[0], p[1]) && w.weight(p[0], p[1]) == Some(wt))
    }
}

/// Dense or sparse visited set over `(vertex, colour set)` states.
enum Visited {
    Dense { bits: Vec<u64>, stride: usize },
    Sparse(BTreeSet<(VertexId, u128)>),
}

impl Visited {
    const DENSE_LIMIT_BITS: usize = 1 << 26;

    fn new(n: usize, k: usize) -> Self {
        if k < 32 && n.saturating_mul(1usize << k) <= Self::DENSE_LIMIT_BITS {
            let stride = 1usize << k;
            Visited::Dense { bits: vec![0; (n * stride).div_ceil(64)], stride }
        } else {
            Visited::Sparse(BTreeSet::new())
        }
    }

    /// Marks the state and reports whether it was new.
    fn insert(&mut self, v: VertexId, set: ColorSet) -> bool {
        match self {
            Visited::Dense { bits, stride } => {
                let i = v * *stride + set.0 as usize;
                let (word, bit) = (i / 64, i % 64);
                let fresh = bits[word] >> bit & 1 == 0;
                bits[word] |= 1 << bit;
                fresh
            }
            Visited::Sparse(s) => s.insert((v, set.0)),
        }
    }
}

/// Shortest rainbow paths from `src` to every vertex in `targets`.
///
/// Breadth-first over `(vertex, used colours)` states. A shortest rainbow
/// walk never repeats a vertex (cutting the loop would leave a shorter
/// rainbow walk), so every reported walk is a simple path.
fn rainbow_bfs(cg: &ClassGraph, src: VertexId, targets: &BTreeSet<VertexId>, meter: &mut Meter) -> Result<BTreeMap<VertexId, Vec<VertexId>>> {
    struct State {
        v: VertexId,
        set: ColorSet,
        parent: usize,
    }
    let mut found = BTreeMap::new();
    if targets.is_empty() {
        return Ok(found);
    }
    let mut arena = vec![State { v: src, set: ColorSet::EMPTY, parent: usize::MAX }];
    let mut visited = Visited::new(cg.n(), cg.k());
    visited.insert(src, ColorSet::EMPTY);
    let mut queue = VecDeque::from([0usize]);
    let trace = |arena: &[State], mut i: usize| {
        let mut path = Vec::new();
        while i != usize::MAX {
            path.push(arena[i].v);
            i = arena[i].parent;
        }
        path.reverse();
        path
    };
    while let Some(i) = queue.pop_front() {
        meter.tick()?;
        let (v, set) = (arena[i].v, arena[i].set);
        for &(u, c) in &cg.adj[v] {
            if set.contains(c) {
                continue;
            }
            let next = set.with(c);
            if !visited.insert(u, next) {
                continue;
            }
            arena.push(State { v: u, set: next, parent: i });
            let j = arena.len() - 1;
            if targets.contains(&u) && !found.contains_key(&u) {
                found.insert(u, trace(&arena, j));
                if found.len() == targets.len() {
                    return Ok(found);
                }
            }
            queue.push_back(j);
        }
    }
    Ok(found)
}

pub fn exists_rainbow_path(g: &Graph, w: &WeightedColoring, u: VertexId, v: VertexId) -> Result<Option<RainbowPath>> {
    exists_rainbow_path_with_budget(g, w, u, v, SearchBudget::default())
}

/// A shortest rainbow `u`-`v` path, if any exists.
pub fn exists_rainbow_path_with_budget(g: &Graph, w: &WeightedColoring, u: VertexId, v: VertexId, budget: SearchBudget) -> Result<Option<RainbowPath>> {
    if u >= g.n() || v >= g.n() {
        return Err(Error::InvalidParameter(format!("vertex out of range 0..{}", g.n())));
    }
    if u == v {
        return Err(Error::InvalidParameter("endpoints must differ".into()));
    }
    let cg = ClassGraph::new(g, w)?;
    let mut meter = Meter::new(budget);
    let found = rainbow_bfs(&cg, u, &BTreeSet::from([v]), &mut meter)?;
    Ok(found.get(&v).map(|path| RainbowPath::from_vertices(w, path.clone()).expect("path follows graph edges")))
}

/// Outcome of a full pairwise rainbow check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowConnectivity {
    pub connected: bool,
    /// One shortest rainbow path per pair `(u, v)` with `u < v`.
    pub witnesses: BTreeMap<(VertexId, VertexId), RainbowPath>,
    /// Pairs with no rainbow path.
    pub missing: Vec<(VertexId, VertexId)>,
}

pub fn is_rainbow_connected(g: &Graph, w: &WeightedColoring) -> Result<RainbowConnectivity> {
    is_rainbow_connected_with_budget(g, w, SearchBudget::default())
}

pub fn is_rainbow_connected_with_budget(g: &Graph, w: &WeightedColoring, budget: SearchBudget) -> Result<RainbowConnectivity> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let cg = ClassGraph::new(g, w)?;
    let mut meter = Meter::new(budget);
    let mut witnesses = BTreeMap::new();
    let mut missing = Vec::new();
    for s in 0..g.n() {
        let targets: BTreeSet<_> = (s + 1..g.n()).collect();
        let found = rainbow_bfs(&cg, s, &targets, &mut meter)?;
        for t in targets {
            match found.get(&t) {
                Some(path) => {
                    witnesses.insert((s, t), RainbowPath::from_vertices(w, path.clone()).expect("path follows graph edges"));
                }
                None => missing.push((s, t)),
            }
        }
    }
    Ok(RainbowConnectivity { connected: missing.is_empty(), witnesses, missing })
}

/// Depth-first yes/no rainbow connectivity over simple paths. Cheap on
/// the tiny graphs the exact RACN search visits.
pub(crate) fn rainbow_connected_dfs(cg: &ClassGraph, meter: &mut Meter) -> Result<bool> {
    let n = cg.n();
    for s in 0..n {
        // pairs (t, s) with t < s were settled from t
        let mut reached: Vec<bool> = (0..n).map(|t| t <= s).collect();
        let mut remaining = n - 1 - s;
        if remaining == 0 {
            continue;
        }
        let mut on_path = vec![false; n];
        on_path[s] = true;
        fn go(cg: &ClassGraph, v: VertexId, used: ColorSet, on_path: &mut [bool], reached: &mut [bool], remaining: &mut usize, meter: &mut Meter) -> Result<()> {
            meter.tick()?;
            for &(u, c) in &cg.adj[v] {
                if on_path[u] || used.contains(c) {
                    continue;
                }
                if !reached[u] {
                    reached[u] = true;
                    *remaining -= 1;
                    if *remaining == 0 {
                        return Ok(());
                    }
                }
                on_path[u] = true;
                go(cg, u, used.with(c), on_path, reached, remaining, meter)?;
                on_path[u] = false;
                if *remaining == 0 {
                    return Ok(());
                }
            }
            Ok(())
        }
        go(cg, s, ColorSet::EMPTY, &mut on_path, &mut reached, &mut remaining, meter)?;
        if remaining > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Phase objective for [`max_new_color_path`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Best {
    gain: usize,
    len: usize,
}

/// Rainbow path with the most weights outside `collected`; ties go to the
/// shorter path, then to the lexicographically smaller vertex sequence.
pub fn max_new_color_path(g: &Graph, w: &WeightedColoring, collected: &BTreeSet<u32>) -> Result<RainbowPath> {
    max_new_color_path_capped(g, w, collected, usize::MAX, SearchBudget::default())
}

/// As [`max_new_color_path`], considering only paths whose gain is at most `cap`.
pub fn max_new_color_path_capped(g: &Graph, w: &WeightedColoring, collected: &BTreeSet<u32>, cap: usize, budget: SearchBudget) -> Result<RainbowPath> {
    let cg = ClassGraph::new(g, w)?;
    let have = cg.to_set(collected.iter().copied());
    let wanted = ColorSet::full(cg.k()).minus(have);
    if wanted.is_empty() {
        return Err(Error::InvalidParameter("every weight class is already collected".into()));
    }
    let mut meter = Meter::new(budget);
    let path = best_gain_path(&cg, wanted, cap.max(1), &mut meter)?;
    Ok(RainbowPath::from_vertices(w, path).expect("path follows graph edges"))
}

pub(crate) fn best_gain_path(cg: &ClassGraph, wanted: ColorSet, cap: usize, meter: &mut Meter) -> Result<Vec<VertexId>> {
    struct Search<'a> {
        cg: &'a ClassGraph,
        wanted: ColorSet,
        cap: usize,
        ceiling: usize,
        best: Best,
        best_path: Vec<VertexId>,
        path: Vec<VertexId>,
        on_path: Vec<bool>,
        done: bool,
    }

    impl Search<'_> {
        /// Largest gain any extension of the current path could still reach.
        fn reachable_gain(&self, used: ColorSet, gain: usize) -> usize {
            let end = *self.path.last().expect("path is never empty");
            let mut open = ColorSet::EMPTY;
            let mut free_vertices = 0;
            for v in 0..self.cg.n() {
                if self.on_path[v] && v != end {
                    continue;
                }
                if !self.on_path[v] {
                    free_vertices += 1;
                }
                for &(u, c) in &self.cg.adj[v] {
                    if u > v && (!self.on_path[u] || u == end) {
                        open = open.with(c);
                    }
                }
            }
            let colours = open.minus(used).intersect(self.wanted).len();
            (gain + colours.min(free_vertices)).min(self.cap)
        }

        fn visit(&mut self, used: ColorSet, gain: usize, meter: &mut Meter) -> Result<()> {
            meter.tick()?;
            let len = self.path.len() - 1;
            if len > 0 && (gain > self.best.gain || (gain == self.best.gain && len < self.best.len)) {
                self.best = Best { gain, len };
                self.best_path.clone_from(&self.path);
                if gain == self.ceiling && len == gain {
                    self.done = true;
                    return Ok(());
                }
            }
            let reach = self.reachable_gain(used, gain);
            if reach < self.best.gain || (reach == self.best.gain && len + self.best.gain.saturating_sub(gain).max(1) >= self.best.len) {
                return Ok(());
            }
            let end = *self.path.last().expect("path is never empty");
            for &(u, c) in &self.cg.adj[end] {
                if self.on_path[u] || used.contains(c) {
                    continue;
                }
                let g2 = gain + usize::from(self.wanted.contains(c));
                if g2 > self.cap {
                    continue;
                }
                self.on_path[u] = true;
                self.path.push(u);
                self.visit(used.with(c), g2, meter)?;
                self.path.pop();
                self.on_path[u] = false;
                if self.done {
                    return Ok(());
                }
            }
            Ok(())
        }
    }

    let ceiling = wanted.len().min(cap);
    let mut search = Search {
        cg,
        wanted,
        cap,
        ceiling,
        best: Best { gain: 0, len: usize::MAX },
        best_path: Vec::new(),
        path: Vec::new(),
        on_path: vec![false; cg.n()],
        done: false,
    };
    for s in 0..cg.n() {
        search.path.push(s);
        search.on_path[s] = true;
        search.visit(ColorSet::EMPTY, 0, meter)?;
        search.on_path[s] = false;
        search.path.pop();
        if search.done {
            break;
        }
    }
    if search.best.gain == 0 {
        return Err(Error::InvalidParameter("no edge carries an uncollected weight".into()));
    }
    Ok(search.best_path)
}

/// Result of the exhaustive RACN search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RacnCertificate {
    pub value: usize,
    pub witness: Labeling,
    pub exhaustive: bool,
    /// Complete labelings whose colouring was tested for rainbow connectivity.
    pub labelings_examined: u64,
}

pub const DEFAULT_MAX_N: usize = 8;

pub fn racn_exact(g: &Graph, max_n: usize) -> Result<RacnCertificate> {
    racn_exact_with_budget(g, max_n, SearchBudget::default())
}

/// Minimum distinct-weight count over every bijective labeling whose
/// colouring is rainbow connected.
///
/// Labels are assigned vertex by vertex in ascending order. A branch is cut
/// once the weights of its fully labeled edges already use as many classes
/// as the best witness so far, and the search stops early if it meets the
/// diameter lower bound. The witness is the lexicographically smallest
/// labeling attaining the minimum.
pub fn racn_exact_with_budget(g: &Graph, max_n: usize, budget: SearchBudget) -> Result<RacnCertificate> {
    let n = g.n();
    if n > max_n {
        return Err(Error::InstanceTooLarge { n, max: max_n });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let floor = g.diameter().unwrap_or(0);

    // For vertex v, the already-labeled neighbours whose edge completes when v is labeled.
    let back: Vec<Vec<VertexId>> = (0..n).map(|v| g.neighbors(v).iter().copied().filter(|&u| u < v).collect()).collect();

    struct Search<'a> {
        g: &'a Graph,
        back: Vec<Vec<VertexId>>,
        labels: Vec<u32>,
        used: Vec<bool>,
        counts: Vec<u32>,
        distinct: usize,
        best: usize,
        witness: Option<Vec<u32>>,
        examined: u64,
        floor: usize,
        meter: Meter,
    }

    impl Search<'_> {
        fn assign(&mut self, v: VertexId) -> Result<()> {
            let n = self.labels.len();
            if v == n {
                self.examined += 1;
                let l = Labeling::new(self.labels.clone());
                let w = edge_weights(self.g, &l)?;
                let cg = ClassGraph::new(self.g, &w)?;
                if rainbow_connected_dfs(&cg, &mut self.meter)? {
                    self.best = self.distinct;
                    self.witness = Some(self.labels.clone());
                }
                return Ok(());
            }
            for label in 1..=n as u32 {
                if self.used[label as usize] {
                    continue;
                }
                self.meter.tick()?;
                self.used[label as usize] = true;
                self.labels[v] = label;
                let before = self.distinct;
                for i in 0..self.back[v].len() {
                    let wt = (label + self.labels[self.back[v][i]]) as usize;
                    if self.counts[wt] == 0 {
                        self.distinct += 1;
                    }
                    self.counts[wt] += 1;
                }
                if self.distinct < self.best {
                    self.assign(v + 1)?;
                }
                for i in 0..self.back[v].len() {
                    let wt = (label + self.labels[self.back[v][i]]) as usize;
                    self.counts[wt] -= 1;
                }
                self.distinct = before;
                self.labels[v] = 0;
                self.used[label as usize] = false;
                if self.best <= self.floor {
                    return Ok(());
                }
            }
            Ok(())
        }
    }

    let mut search = Search {
        g,
        back,
        labels: vec![0; n],
        used: vec![false; n + 1],
        counts: vec![0; 2 * n + 1],
        distinct: 0,
        best: usize::MAX,
        witness: None,
        examined: 0,
        floor,
        meter: Meter::new(budget),
    };
    search.assign(0)?;
    let witness = search.witness.ok_or_else(|| Error::InvalidGraph("no labeling yields a rainbow-connected colouring".into()))?;
    Ok(RacnCertificate { value: search.best, witness: Labeling::new(witness), exhaustive: true, labelings_examined: search.examined })
}

/// Distinct-weight count of `l` when its colouring is rainbow connected.
pub fn racn_upper(g: &Graph, l: &Labeling) -> Result<Option<usize>> {
    if !verify_bijection(l, g.n()) {
        return Err(Error::InvalidLabeling("labeling is not a bijection onto 1..=n".into()));
    }
    let w = edge_weights(g, l)?;
    let rc = is_rainbow_connected(g, &w)?;
    Ok(rc.connected.then(|| w.distinct_weight_count()))
}
