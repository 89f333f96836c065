//! Dense colour-class indices over a weighted colouring.
//!
//! Searches work with a bitset of class indices rather than raw weights.
//! Class `i` is the `i`-th smallest distinct weight.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::labeling::WeightedColoring;

/// Set of colour-class indices, at most 128 classes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorSet(pub u128);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn full(k: usize) -> Self {
        if k >= 128 {
            ColorSet(u128::MAX)
        } else {
            ColorSet((1u128 << k) - 1)
        }
    }

    #[inline]
    pub fn contains(self, c: usize) -> bool {
        self.0 >> c & 1 == 1
    }

    #[inline]
    pub fn with(self, c: usize) -> Self {
        ColorSet(self.0 | 1 << c)
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ColorSet(self.0 | other.0)
    }

    #[inline]
    pub fn minus(self, other: Self) -> Self {
        ColorSet(self.0 & !other.0)
    }

    #[inline]
    pub fn intersect(self, other: Self) -> Self {
        ColorSet(self.0 & other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..128).filter(move |&c| self.contains(c))
    }
}

/// Adjacency annotated with colour-class indices.
#[derive(Clone, Debug)]
pub(crate) struct ClassGraph {
    /// `(neighbour, class)` pairs, neighbours ascending.
    pub adj: Vec<Vec<(VertexId, usize)>>,
    /// Distinct weights, ascending; index = class.
    pub weights: Vec<u32>,
}

impl ClassGraph {
    pub fn new(g: &Graph, w: &WeightedColoring) -> Result<Self> {
        if w.edges().len() != g.edge_count() || w.edges().iter().any(|e| g.edge_index(e.0, e.1).is_none()) {
            return Err(Error::InvalidLabeling("colouring does not match the graph's edge set".into()));
        }
        let weights = w.distinct_weights();
        if weights.len() > 128 {
            return Err(Error::TooManyClasses(weights.len()));
        }
        let class_of = |wt: u32| weights.binary_search(&wt).unwrap_or(0);
        let mut adj = alloc::vec![Vec::new(); g.n()];
        for (e, &wt) in w.edges().iter().zip(w.weights()) {
            let c = class_of(wt);
            adj[e.0].push((e.1, c));
            adj[e.1].push((e.0, c));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { adj, weights })
    }

    pub fn k(&self) -> usize {
        self.weights.len()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn class_of(&self, weight: u32) -> Option<usize> {
        self.weights.binary_search(&weight).ok()
    }

    pub fn to_set(&self, weights: impl IntoIterator<Item = u32>) -> ColorSet {
        weights.into_iter().filter_map(|wt| self.class_of(wt)).fold(ColorSet::EMPTY, ColorSet::with)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_ops() {
        let a = ColorSet::EMPTY.with(0).with(3);
        let b = ColorSet::EMPTY.with(3).with(5);
        assert_eq!(a.union(b).len(), 3);
        assert_eq!(a.minus(b), ColorSet::EMPTY.with(0));
        assert!(ColorSet::EMPTY.with(3).is_subset(a));
        assert_eq!(ColorSet::full(4).iter().collect::<Vec<_>>(), [0, 1, 2, 3]);
        assert_eq!(ColorSet::full(128).len(), 128);
    }
}
