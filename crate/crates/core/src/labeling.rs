//! Antimagic vertex labelings and the edge colouring they induce.
//!
//! An edge's weight is the sum of its endpoint labels, and the weight is
//! the edge's colour. The four closed-form labelings below are the ones
//! used for the shadow (even and odd `p`), splitting and Mycielski graphs.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Edge, Family, Graph, VertexId};

/// Vertex labels indexed by [`VertexId`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labeling(Vec<u32>);

impl Labeling {
    pub fn new(values: Vec<u32>) -> Self {
        Self(values)
    }

    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.0.get(v).copied()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff the labels are a bijection onto `{1..n}`.
    pub fn is_bijection(&self, n: usize) -> bool {
        verify_bijection(self, n)
    }
}

pub fn verify_bijection(l: &Labeling, n: usize) -> bool {
    if l.len() != n {
        return false;
    }
    let mut seen = vec![false; n + 1];
    for &x in l.values() {
        let x = x as usize;
        if x == 0 || x > n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

fn check_p(p: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("p must be at least 2, got {p}")));
    }
    Ok(())
}

/// Labeling for the shadow graph: the even-`p` form when `p` is even and
/// the odd-`p` form otherwise. Layout is `x_1..x_p, y_1..y_p`.
pub fn shadow_labeling(p: usize) -> Result<Labeling> {
    check_p(p)?;
    let p32 = p as u32;
    let x = (1..=p32).map(|t| if t % 2 == 1 { 2 * t - 1 } else { 2 * t });
    let y = (1..=p32).map(|t| match (p % 2 == 0, t % 2 == 1) {
        (true, true) => 2 * p32 - 2 * t + 1,
        (true, false) => 2 * p32 - 2 * t + 2,
        (false, true) => 2 * p32 - 2 * t + 2,
        (false, false) => 2 * p32 - 2 * t + 1,
    });
    Ok(Labeling(x.chain(y).collect()))
}

/// `x_t -> t`, `y_t -> 2p - t + 1`.
pub fn splitting_labeling(p: usize) -> Result<Labeling> {
    check_p(p)?;
    let p32 = p as u32;
    let x = 1..=p32;
    let y = (1..=p32).map(|t| 2 * p32 - t + 1);
    Ok(Labeling(x.chain(y).collect()))
}

/// `x_t -> 2p - t + 2`, `y_t -> t`, apex `-> p + 1`.
pub fn mycielski_labeling(p: usize) -> Result<Labeling> {
    check_p(p)?;
    let p32 = p as u32;
    let x = (1..=p32).map(|t| 2 * p32 - t + 2);
    let y = 1..=p32;
    Ok(Labeling(x.chain(y).chain([p32 + 1]).collect()))
}

/// Identity labeling `x_t -> t` on the path.
pub fn path_labeling(p: usize) -> Result<Labeling> {
    check_p(p)?;
    Ok(Labeling((1..=p as u32).collect()))
}

/// The closed-form labeling that belongs to a family.
pub fn family_labeling(family: Family, p: usize) -> Result<Labeling> {
    match family {
        Family::Path => path_labeling(p),
        Family::Shadow => shadow_labeling(p),
        Family::Splitting => splitting_labeling(p),
        Family::Mycielski => mycielski_labeling(p),
    }
}

/// Edge weights of a graph under a labeling, with the weight classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedColoring {
    edges: Vec<Edge>,
    weights: Vec<u32>,
    classes: BTreeMap<u32, Vec<Edge>>,
}

impl WeightedColoring {
    /// Builds a colouring from `(edge, weight)` pairs in any order.
    pub fn from_weights(entries: impl IntoIterator<Item = (Edge, u32)>) -> Self {
        let mut pairs: Vec<(Edge, u32)> = entries.into_iter().map(|(e, w)| (Edge::new(e.0, e.1), w)).collect();
        pairs.sort_unstable();
        let mut classes: BTreeMap<u32, Vec<Edge>> = BTreeMap::new();
        for &(e, w) in &pairs {
            classes.entry(w).or_default().push(e);
        }
        let (edges, weights) = pairs.into_iter().unzip();
        Self { edges, weights, classes }
    }

    /// Edges in ascending order, parallel to [`WeightedColoring::weights`].
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, u32)> + '_ {
        self.edges.iter().copied().zip(self.weights.iter().copied())
    }

    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<u32> {
        let i = self.edges.binary_search(&Edge::new(u, v)).ok()?;
        Some(self.weights[i])
    }

    pub fn classes(&self) -> &BTreeMap<u32, Vec<Edge>> {
        &self.classes
    }

    /// Distinct weights in ascending order.
    pub fn distinct_weights(&self) -> Vec<u32> {
        self.classes.keys().copied().collect()
    }

    pub fn distinct_weight_count(&self) -> usize {
        self.classes.len()
    }
}

/// Colours every edge with the sum of its endpoint labels.
pub fn edge_weights(g: &Graph, l: &Labeling) -> Result<WeightedColoring> {
    if l.len() != g.n() {
        return Err(Error::InvalidLabeling(format!("labeling covers {} vertices, graph has {}", l.len(), g.n())));
    }
    Ok(WeightedColoring::from_weights(g.edges().iter().map(|&e| (e, l.values()[e.0] + l.values()[e.1]))))
}

pub fn distinct_weight_count(w: &WeightedColoring) -> usize {
    w.distinct_weight_count()
}
