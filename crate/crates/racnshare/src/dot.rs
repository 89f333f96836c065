//! Graphviz export. Edges are labelled with their weight and drawn in one
//! colour per weight class.

use std::fmt::Write;

use racnshare_core::{Graph, WeightedColoring};

pub const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#ad494a",
];

/// DOT text for `g`. Without a colouring edges are plain.
pub fn export_dot(g: &Graph, coloring: Option<&WeightedColoring>) -> String {
    let mut out = String::new();
    let title = match g.family() {
        Some(f) => format!("{}_p{}", f.name(), g.p()),
        None => "G".to_string(),
    };
    writeln!(out, "graph \"{title}\" {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 0..g.n() {
        writeln!(out, "  {v} [label=\"{}\"];", g.name(v)).unwrap();
    }
    let classes: Vec<u32> = coloring.map(|w| w.distinct_weights()).unwrap_or_default();
    for e in g.edges() {
        match coloring.and_then(|w| w.weight(e.0, e.1)) {
            Some(wt) => {
                let class = classes.binary_search(&wt).expect("weight is one of the classes");
                writeln!(out, "  {} -- {} [label=\"{wt}\", color=\"{}\"];", e.0, e.1, PALETTE[class % PALETTE.len()]).unwrap();
            }
            None => writeln!(out, "  {} -- {};", e.0, e.1).unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
