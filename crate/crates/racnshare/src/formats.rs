//! JSON documents for graphs, labelings, colourings, certificates, shares
//! and traces. Vertices appear by display name wherever a person reads them;
//! edge lists use 0-based indices.

use std::collections::{BTreeMap, BTreeSet};

use racnshare_core::formulas::{ValidationReport, ValidationRow};
use racnshare_core::protocol::{Circuit, DisseminationRound, DisseminationTrace, ReconstructionPhase, ReconstructionTrace};
use racnshare_core::rainbow::{RacnCertificate, RainbowPath};
use racnshare_core::sharing::Share;
use racnshare_core::{Edge, Family, Graph, Labeling, WeightedColoring};
use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::FormatError;

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents always serialize")
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T, FormatError> {
    Ok(serde_json::from_str(text)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default)]
    pub p: usize,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub roles: BTreeMap<String, String>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            family: g.family().map(|f| f.name().to_string()),
            p: g.p(),
            n: g.n(),
            edges: g.edges().iter().map(|e| [e.0, e.1]).collect(),
            roles: (0..g.n()).map(|v| (v.to_string(), g.name(v))).collect(),
        }
    }

    /// Family graphs are rebuilt from `family` and `p` and must match the
    /// document exactly; other graphs take their names from `roles`.
    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        let mut names = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let name = self.roles.get(&v.to_string()).ok_or_else(|| FormatError::Invalid(format!("vertex {v} has no role")))?;
            names.push(name.clone());
        }
        if self.roles.len() != self.n {
            return Err(FormatError::Invalid(format!("{} roles for {} vertices", self.roles.len(), self.n)));
        }
        let edges = self.edges.iter().map(|&[u, v]| (u, v));
        match &self.family {
            Some(name) => {
                let family = Family::parse(name).ok_or_else(|| FormatError::Invalid(format!("unknown family {name:?}")))?;
                let g = family.build(self.p)?;
                let given = Graph::new(Some(family), self.p, g.roles().to_vec(), edges)?;
                let named_ok = (0..g.n()).all(|v| g.name(v) == names[v]);
                if g.n() != self.n || !named_ok || given.edges() != g.edges() {
                    return Err(FormatError::Invalid(format!("document does not match the {name} graph with p = {}", self.p)));
                }
                Ok(g)
            }
            None => Ok(Graph::from_named(names, edges)?),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingDoc {
    pub labels: BTreeMap<String, u32>,
}

impl LabelingDoc {
    pub fn from_labeling(g: &Graph, l: &Labeling) -> Self {
        Self { labels: l.values().iter().enumerate().map(|(v, &x)| (g.name(v), x)).collect() }
    }

    pub fn to_labeling(&self, g: &Graph) -> Result<Labeling, FormatError> {
        let mut values = vec![0; g.n()];
        for (name, &x) in &self.labels {
            let v = g.find(name).ok_or_else(|| FormatError::Invalid(format!("no vertex named {name:?}")))?;
            values[v] = x;
        }
        if self.labels.len() != g.n() {
            return Err(FormatError::Invalid(format!("{} labels for {} vertices", self.labels.len(), g.n())));
        }
        Ok(Labeling::new(values))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDoc {
    pub weights: Vec<[u32; 3]>,
    pub classes: BTreeMap<String, Vec<[usize; 2]>>,
}

impl ColoringDoc {
    pub fn from_coloring(w: &WeightedColoring) -> Self {
        Self {
            weights: w.iter().map(|(e, wt)| [e.0 as u32, e.1 as u32, wt]).collect(),
            classes: w.classes().iter().map(|(wt, es)| (wt.to_string(), es.iter().map(|e| [e.0, e.1]).collect())).collect(),
        }
    }

    /// Rebuilds from `weights`; `classes` must agree with it.
    pub fn to_coloring(&self) -> Result<WeightedColoring, FormatError> {
        let w = WeightedColoring::from_weights(self.weights.iter().map(|&[u, v, wt]| (Edge::new(u as usize, v as usize), wt)));
        if w.iter().count() != self.weights.len() {
            return Err(FormatError::Invalid("an edge is listed twice".into()));
        }
        if Self::from_coloring(&w).classes != self.classes {
            return Err(FormatError::Invalid("classes disagree with weights".into()));
        }
        Ok(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub value: usize,
    pub witness: BTreeMap<String, u32>,
    pub exhaustive: bool,
    pub examined: u64,
}

impl CertificateDoc {
    pub fn from_certificate(g: &Graph, c: &RacnCertificate) -> Self {
        Self { value: c.value, witness: LabelingDoc::from_labeling(g, &c.witness).labels, exhaustive: c.exhaustive, examined: c.labelings_examined }
    }

    pub fn to_certificate(&self, g: &Graph) -> Result<RacnCertificate, FormatError> {
        let witness = LabelingDoc { labels: self.witness.clone() }.to_labeling(g)?;
        Ok(RacnCertificate { value: self.value, witness, exhaustive: self.exhaustive, labelings_examined: self.examined })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShareDoc {
    pub index: u8,
    pub payload_hex: String,
}

impl ShareDoc {
    pub fn from_share(s: &Share) -> Self {
        Self { index: s.index, payload_hex: hex::encode(&s.payload) }
    }

    pub fn to_share(&self) -> Result<Share, FormatError> {
        Ok(Share { index: self.index, payload: hex::decode(&self.payload_hex)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDoc {
    pub vertices: Vec<String>,
    pub weights: Vec<u32>,
}

fn names(g: &Graph, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| g.name(v)).collect()
}

fn ids(g: &Graph, names: &[String]) -> Result<Vec<usize>, FormatError> {
    names.iter().map(|n| g.find(n).ok_or_else(|| FormatError::Invalid(format!("no vertex named {n:?}")))).collect()
}

impl PathDoc {
    fn from_path(g: &Graph, p: &RainbowPath) -> Self {
        Self { vertices: names(g, p.vertices.iter().copied()), weights: p.weights.clone() }
    }

    fn to_path(&self, g: &Graph) -> Result<RainbowPath, FormatError> {
        Ok(RainbowPath { vertices: ids(g, &self.vertices)?, weights: self.weights.clone() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseDoc {
    pub path: PathDoc,
    pub newly_collected: Vec<u32>,
    pub collected_after: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconstructionDoc {
    pub policy: String,
    pub k: usize,
    pub phases: Vec<PhaseDoc>,
    pub participants_used: Vec<String>,
    pub recovered_hex: String,
    pub matches_secret: bool,
}

impl ReconstructionDoc {
    pub fn from_trace(g: &Graph, policy: &str, k: usize, secret: &[u8], t: &ReconstructionTrace) -> Self {
        Self {
            policy: policy.to_string(),
            k,
            phases: t
                .phases
                .iter()
                .zip(&t.collected_after)
                .map(|(ph, after)| PhaseDoc {
                    path: PathDoc::from_path(g, &ph.path),
                    newly_collected: ph.newly_collected.iter().copied().collect(),
                    collected_after: after.iter().copied().collect(),
                })
                .collect(),
            participants_used: names(g, t.participants_used.iter().copied()),
            recovered_hex: hex::encode(&t.recovered),
            matches_secret: t.recovered == secret,
        }
    }

    pub fn to_trace(&self, g: &Graph) -> Result<ReconstructionTrace, FormatError> {
        let phases = self
            .phases
            .iter()
            .map(|ph| Ok(ReconstructionPhase { path: ph.path.to_path(g)?, newly_collected: ph.newly_collected.iter().copied().collect() }))
            .collect::<Result<_, FormatError>>()?;
        Ok(ReconstructionTrace {
            phases,
            collected_after: self.phases.iter().map(|ph| ph.collected_after.iter().copied().collect()).collect(),
            participants_used: ids(g, &self.participants_used)?.into_iter().collect(),
            recovered: hex::decode(&self.recovered_hex)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "lowercase")]
pub enum CircuitDoc {
    Cycle(Vec<String>),
    Path(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundDoc {
    pub round: usize,
    pub circuits: Vec<CircuitDoc>,
    pub newly_informed: Vec<String>,
    pub informed_after: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisseminationDoc {
    pub informed0: Vec<String>,
    pub max_cycle_len: Option<usize>,
    pub rounds: Vec<RoundDoc>,
}

/// Display names sorted numerically when they are all numbers.
fn sorted_names(g: &Graph, set: &BTreeSet<usize>) -> Vec<String> {
    let mut out = names(g, set.iter().copied());
    out.sort_by(|a, b| match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        _ => a.cmp(b),
    });
    out
}

impl DisseminationDoc {
    pub fn from_trace(g: &Graph, max_cycle_len: Option<usize>, t: &DisseminationTrace) -> Self {
        let mut before = t.informed0.clone();
        let rounds = t
            .rounds
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let newly: BTreeSet<usize> = r.informed_after.difference(&before).copied().collect();
                before = r.informed_after.clone();
                RoundDoc {
                    round: i + 1,
                    circuits: r
                        .circuits
                        .iter()
                        .map(|c| match c {
                            Circuit::Cycle(vs) => CircuitDoc::Cycle(names(g, vs.iter().copied())),
                            Circuit::Path(vs) => CircuitDoc::Path(names(g, vs.iter().copied())),
                        })
                        .collect(),
                    newly_informed: sorted_names(g, &newly),
                    informed_after: sorted_names(g, &r.informed_after),
                }
            })
            .collect();
        Self { informed0: sorted_names(g, &t.informed0), max_cycle_len, rounds }
    }

    pub fn to_trace(&self, g: &Graph) -> Result<DisseminationTrace, FormatError> {
        let rounds = self
            .rounds
            .iter()
            .map(|r| {
                let circuits = r
                    .circuits
                    .iter()
                    .map(|c| match c {
                        CircuitDoc::Cycle(vs) => Ok(Circuit::Cycle(ids(g, vs)?)),
                        CircuitDoc::Path(vs) => Ok(Circuit::Path(ids(g, vs)?)),
                    })
                    .collect::<Result<_, FormatError>>()?;
                Ok(DisseminationRound { circuits, informed_after: ids(g, &r.informed_after)?.into_iter().collect() })
            })
            .collect::<Result<_, FormatError>>()?;
        Ok(DisseminationTrace { informed0: ids(g, &self.informed0)?.into_iter().collect(), rounds })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapDoc {
    pub field: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDoc {
    pub family: String,
    pub p: usize,
    pub n: usize,
    pub k_closed: usize,
    pub k_observed: usize,
    pub rainbow_connected: Option<bool>,
    pub rp_closed: usize,
    pub rp_empirical: Option<usize>,
    pub m_closed: usize,
    pub m_empirical: Option<usize>,
    pub racn_exact: Option<usize>,
    pub lower_bound: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed_yy_weights: Option<Vec<u32>>,
    pub mismatches: Vec<String>,
    pub gaps: Vec<GapDoc>,
}

impl RowDoc {
    pub fn from_row(r: &ValidationRow) -> Self {
        Self {
            family: r.closed.family.name().to_string(),
            p: r.closed.p,
            n: r.closed.n,
            k_closed: r.closed.k,
            k_observed: r.observed_k,
            rainbow_connected: r.rainbow_connected,
            rp_closed: r.closed.rp,
            rp_empirical: r.empirical_rp,
            m_closed: r.closed.m,
            m_empirical: r.empirical_m,
            racn_exact: r.racn_exact,
            lower_bound: r.lower_bound,
            printed_yy_weights: r.printed_yy_weights.clone(),
            mismatches: r.mismatches.iter().map(|m| m.describe()).collect(),
            gaps: r.gaps.iter().map(|g| GapDoc { field: g.field.name().to_string(), reason: g.reason.to_string() }).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub rows: Vec<RowDoc>,
    pub mismatch_count: usize,
    pub gap_count: usize,
}

impl ReportDoc {
    pub fn from_reports(reports: &[ValidationReport]) -> Self {
        Self {
            rows: reports.iter().flat_map(|r| r.rows.iter().map(RowDoc::from_row)).collect(),
            mismatch_count: reports.iter().map(|r| r.mismatch_count()).sum(),
            gap_count: reports.iter().map(|r| r.gap_count()).sum(),
        }
    }

    /// Aligned plain-text table, one line per row followed by any mismatches and gaps.
    pub fn to_table(&self) -> String {
        let opt = |x: Option<usize>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
        let header = ["family", "p", "n", "k", "k_obs", "rainbow", "rp", "rp_emp", "m", "m_emp", "racn", "bound", "status"];
        let mut lines: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
        for r in &self.rows {
            let status = if !r.mismatches.is_empty() {
                "MISMATCH"
            } else if !r.gaps.is_empty() {
                "gap"
            } else {
                "ok"
            };
            lines.push(vec![
                r.family.clone(),
                r.p.to_string(),
                r.n.to_string(),
                r.k_closed.to_string(),
                r.k_observed.to_string(),
                r.rainbow_connected.map_or("-".into(), |b| if b { "yes".into() } else { "no".into() }),
                r.rp_closed.to_string(),
                opt(r.rp_empirical),
                r.m_closed.to_string(),
                opt(r.m_empirical),
                opt(r.racn_exact),
                r.lower_bound.to_string(),
                status.to_string(),
            ]);
        }
        let widths: Vec<usize> = (0..header.len()).map(|c| lines.iter().map(|l| l[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for l in &lines {
            let cells: Vec<String> = l.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        for r in &self.rows {
            for m in &r.mismatches {
                out.push_str(&format!("{} p={}: {m}\n", r.family, r.p));
            }
            for g in &r.gaps {
                out.push_str(&format!("{} p={}: {} not computed ({})\n", r.family, r.p, g.field, g.reason));
            }
        }
        out.push_str(&format!("{} mismatches, {} gaps\n", self.mismatch_count, self.gap_count));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use racnshare_core::graph::{mycielski_of_path, shadow_of_path};
    use racnshare_core::labeling::{edge_weights, shadow_labeling};

    #[test]
    fn graph_schema_shape() {
        let g = shadow_of_path(2).unwrap();
        let v: serde_json::Value = serde_json::to_value(GraphDoc::from_graph(&g)).unwrap();
        assert_eq!(v["family"], "shadow");
        assert_eq!(v["n"], 4);
        assert_eq!(v["roles"]["0"], "x1");
        assert_eq!(v["roles"]["3"], "y2");
        assert_eq!(v["edges"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn family_graph_must_match() {
        let mut doc = GraphDoc::from_graph(&mycielski_of_path(3).unwrap());
        assert_eq!(doc.to_graph().unwrap(), mycielski_of_path(3).unwrap());
        doc.edges.pop();
        assert!(doc.to_graph().is_err());
        let mut doc = GraphDoc::from_graph(&shadow_of_path(3).unwrap());
        doc.roles.insert("0".into(), "q".into());
        assert!(doc.to_graph().is_err());
    }

    #[test]
    fn coloring_schema_shape() {
        let g = shadow_of_path(2).unwrap();
        let w = edge_weights(&g, &shadow_labeling(2).unwrap()).unwrap();
        let doc = ColoringDoc::from_coloring(&w);
        assert_eq!(doc.classes.len(), 3);
        assert_eq!(doc.to_coloring().unwrap(), w);
        let mut bad = doc.clone();
        bad.classes.clear();
        assert!(bad.to_coloring().is_err());
    }

    #[test]
    fn share_hex() {
        let s = Share { index: 3, payload: vec![0xde, 0xad] };
        let doc = ShareDoc::from_share(&s);
        assert_eq!(doc.payload_hex, "dead");
        assert_eq!(doc.to_share().unwrap(), s);
        assert!(ShareDoc { index: 1, payload_hex: "zz".into() }.to_share().is_err());
    }
}
