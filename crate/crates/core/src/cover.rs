//! Minimum rainbow-path covers of the colour classes.
//!
//! A cover is a collection of rainbow paths whose weight sets together
//! contain every class. The phase count `rp` is the fewest paths in any
//! cover. The participant count `m` is the fewest distinct vertices over
//! covers that use exactly `rp` paths.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::colors::{ClassGraph, ColorSet};
use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::labeling::WeightedColoring;
use crate::rainbow::RainbowPath;
use crate::{Meter, SearchBudget};

/// An optimal cover together with its paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalCover {
    pub rp: usize,
    pub m: usize,
    pub paths: Vec<RainbowPath>,
}

/// Colour sets of every rainbow path (at least one edge) inside `allowed`,
/// each with the first path that produced it in depth-first order.
fn rainbow_color_sets(cg: &ClassGraph, allowed: &[bool], meter: &mut Meter) -> Result<BTreeMap<ColorSet, Vec<VertexId>>> {
    fn go(
        cg: &ClassGraph,
        allowed: &[bool],
        path: &mut Vec<VertexId>,
        on_path: &mut [bool],
        used: ColorSet,
        out: &mut BTreeMap<ColorSet, Vec<VertexId>>,
        meter: &mut Meter,
    ) -> Result<()> {
        meter.tick()?;
        if path.len() > 1 {
            out.entry(used).or_insert_with(|| path.clone());
        }
        let end = *path.last().expect("non-empty path");
        for &(u, c) in &cg.adj[end] {
            if !allowed[u] || on_path[u] || used.contains(c) {
                continue;
            }
            on_path[u] = true;
            path.push(u);
            go(cg, allowed, path, on_path, used.with(c), out, meter)?;
            path.pop();
            on_path[u] = false;
        }
        Ok(())
    }

    let mut out = BTreeMap::new();
    let mut on_path = vec![false; cg.n()];
    for s in (0..cg.n()).filter(|&s| allowed[s]) {
        let mut path = vec![s];
        on_path[s] = true;
        go(cg, allowed, &mut path, &mut on_path, ColorSet::EMPTY, &mut out, meter)?;
        on_path[s] = false;
    }
    Ok(out)
}

/// Sets not strictly contained in another set of the family.
fn maximal(sets: impl IntoIterator<Item = ColorSet>) -> Vec<ColorSet> {
    let mut all: Vec<ColorSet> = sets.into_iter().collect();
    all.sort_by_key(|s| core::cmp::Reverse(s.len()));
    let mut kept: Vec<ColorSet> = Vec::new();
    for s in all {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept
}

/// Fewest sets from `sets` whose union is `full`, if any.
fn min_cover_size(sets: &[ColorSet], full: ColorSet, meter: &mut Meter) -> Result<Option<usize>> {
    if full.is_empty() {
        return Ok(Some(0));
    }
    let sets = maximal(sets.iter().copied());
    let mut layer = vec![ColorSet::EMPTY];
    for size in 1..=full.len() {
        let mut next = alloc::collections::BTreeSet::new();
        for &u in &layer {
            for &s in &sets {
                meter.tick()?;
                let v = u.union(s);
                if v == full {
                    return Ok(Some(size));
                }
                next.insert(v);
            }
        }
        let reduced = maximal(next);
        if reduced.len() == layer.len() && reduced.iter().all(|r| layer.contains(r)) {
            return Ok(None);
        }
        layer = reduced;
    }
    Ok(None)
}

/// `size` sets (with repetition allowed) whose union is `full`, as indices into `sets`.
fn find_cover(sets: &[ColorSet], full: ColorSet, size: usize) -> Option<Vec<usize>> {
    fn go(sets: &[ColorSet], full: ColorSet, left: usize, start: usize, acc: ColorSet, chosen: &mut Vec<usize>) -> bool {
        if acc == full {
            return true;
        }
        if left == 0 {
            return false;
        }
        for i in start..sets.len() {
            if sets[i].minus(acc).is_empty() {
                continue;
            }
            chosen.push(i);
            if go(sets, full, left - 1, i + 1, acc.union(sets[i]), chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    go(sets, full, size, 0, ColorSet::EMPTY, &mut chosen).then_some(chosen)
}

/// Minimum number of rainbow paths covering every weight class.
pub fn empirical_rp(g: &Graph, w: &WeightedColoring) -> Result<usize> {
    empirical_rp_with_budget(g, w, SearchBudget::default())
}

pub fn empirical_rp_with_budget(g: &Graph, w: &WeightedColoring, budget: SearchBudget) -> Result<usize> {
    let cg = ClassGraph::new(g, w)?;
    let mut meter = Meter::new(budget);
    rp_of(&cg, &mut meter)
}

fn rp_of(cg: &ClassGraph, meter: &mut Meter) -> Result<usize> {
    let all = vec![true; cg.n()];
    let sets: Vec<ColorSet> = rainbow_color_sets(cg, &all, meter)?.into_keys().collect();
    // every single edge is a rainbow path, so a cover always exists
    Ok(min_cover_size(&sets, ColorSet::full(cg.k()), meter)?.unwrap_or(cg.k()))
}

/// Minimum number of distinct vertices over all covers with `rp` paths.
pub fn empirical_m(g: &Graph, w: &WeightedColoring) -> Result<usize> {
    Ok(optimal_cover(g, w, SearchBudget::default())?.m)
}

/// Computes `rp`, then searches vertex subsets in order of size (and
/// lexicographically within a size) for the first one whose induced
/// subgraph holds `rp` rainbow paths covering every class.
pub fn optimal_cover(g: &Graph, w: &WeightedColoring, budget: SearchBudget) -> Result<OptimalCover> {
    let cg = ClassGraph::new(g, w)?;
    let mut meter = Meter::new(budget);
    let full = ColorSet::full(cg.k());
    let rp = rp_of(&cg, &mut meter)?;
    let n = cg.n();

    let edge_colors_within = |allowed: &[bool]| {
        let mut set = ColorSet::EMPTY;
        for v in (0..n).filter(|&v| allowed[v]) {
            for &(u, c) in &cg.adj[v] {
                if allowed[u] {
                    set = set.with(c);
                }
            }
        }
        set
    };

    for size in 2..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            meter.tick()?;
            let mut allowed = vec![false; n];
            for &v in &combo {
                allowed[v] = true;
            }
            if edge_colors_within(&allowed) == full {
                let found = rainbow_color_sets(&cg, &allowed, &mut meter)?;
                let sets: Vec<ColorSet> = maximal(found.keys().copied());
                if let Some(pick) = find_cover(&sets, full, rp) {
                    let paths = pick
                        .into_iter()
                        .map(|i| {
                            let (_, path) = found.iter().find(|(s, _)| **s == sets[i]).expect("set came from the map");
                            RainbowPath::from_vertices(w, path.clone()).expect("path follows graph edges")
                        })
                        .collect();
                    return Ok(OptimalCover { rp, m: size, paths });
                }
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the whole vertex set always admits an rp-path cover")
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
