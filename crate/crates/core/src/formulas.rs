//! Closed-form scheme parameters and their empirical cross-check.
//!
//! For each family the closed forms give the share count `k` (the colour
//! count of the family's labeling), the minimum participant count `m`
//! and the number of reconstruction phases `rp`. [`validate_family`]
//! recomputes each quantity from the graph and flags every disagreement.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cover::optimal_cover;
use crate::error::{Error, Result};
use crate::graph::{Family, SchemeFamily};
use crate::labeling::{edge_weights, family_labeling};
use crate::rainbow::{is_rainbow_connected_with_budget, racn_exact_with_budget};
use crate::SearchBudget;

fn check_p(p: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("p must be at least 2, got {p}")));
    }
    Ok(())
}

/// `(-1)^(p-1)` as ±1.
fn alt(p: usize) -> i64 {
    if p % 2 == 1 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchemeParameters {
    pub family: SchemeFamily,
    pub p: usize,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub rp: usize,
}

impl SchemeParameters {
    pub fn closed_form(family: SchemeFamily, p: usize) -> Result<Self> {
        Ok(Self { family, p, n: family.participants(p), k: k_closed_form(family, p)?, m: m_closed_form(family, p)?, rp: rp_closed_form(family, p)? })
    }
}

/// Number of shares, equal to the colour count of the family's labeling.
pub fn k_closed_form(family: SchemeFamily, p: usize) -> Result<usize> {
    check_p(p)?;
    Ok(match family {
        SchemeFamily::Shadow if p % 2 == 0 => p + 1,
        SchemeFamily::Shadow => p + 3,
        SchemeFamily::Splitting => p + 1,
        SchemeFamily::Mycielski => 2 * p,
    })
}

/// Minimum number of cooperating participants.
pub fn m_closed_form(family: SchemeFamily, p: usize) -> Result<usize> {
    check_p(p)?;
    let p_i = p as i64;
    Ok(match family {
        SchemeFamily::Shadow => ((2 * p_i + 5 + alt(p)) / 2) as usize,
        SchemeFamily::Splitting if p == 3 => p + 1,
        SchemeFamily::Splitting => p + 2,
        SchemeFamily::Mycielski => 2 * p + 1,
    })
}

/// Number of reconstruction phases.
pub fn rp_closed_form(family: SchemeFamily, p: usize) -> Result<usize> {
    check_p(p)?;
    let p_i = p as i64;
    Ok(match family {
        SchemeFamily::Shadow if p % 2 == 0 => 1,
        SchemeFamily::Shadow => 2,
        SchemeFamily::Splitting if p == 3 => 2,
        SchemeFamily::Splitting => 1,
        SchemeFamily::Mycielski => ((2 * p_i + 1 + alt(p)) / 4) as usize,
    })
}

/// The lower-bound expression printed with each family's RACN claim,
/// evaluated with the graph's own minimum and maximum degree.
///
/// * shadow: `(p-1) + δ` for even `p`, `(p-1) + Δ` for odd `p`
/// * splitting: `(p-1) + δ + 1`
/// * Mycielski: `(p-1) + Δ + 1`
pub fn theorem_lower_bound(family: SchemeFamily, p: usize) -> Result<usize> {
    check_p(p)?;
    let g = family.family().build(p)?;
    let (min_deg, max_deg) = g.degree_stats();
    Ok(match family {
        SchemeFamily::Shadow if p % 2 == 0 => (p - 1) + min_deg,
        SchemeFamily::Shadow => (p - 1) + max_deg,
        SchemeFamily::Splitting => (p - 1) + min_deg + 1,
        SchemeFamily::Mycielski => (p - 1) + max_deg + 1,
    })
}

/// Weights `4p - 2t + 1` printed for `y_t y_{t+1}` in the splitting graph.
/// Those edges do not exist in the standard splitting graph; the values are
/// kept for the report only.
pub fn splitting_printed_yy_weights(p: usize) -> Vec<u32> {
    (1..p as u32).map(|t| 4 * p as u32 - 2 * t + 1).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    ColorCount { closed: usize, observed: usize },
    Phases { closed: usize, empirical: usize },
    Participants { closed: usize, empirical: usize },
    Racn { closed: usize, exact: usize },
    NotRainbowConnected { missing_pairs: usize },
    /// The printed lower bound exceeds the colour count of a rainbow-connected labeling.
    BoundAboveWitness { bound: usize, colors: usize },
    /// The printed lower bound exceeds the exact RACN.
    BoundAboveExact { bound: usize, exact: usize },
}

impl Mismatch {
    pub fn describe(&self) -> String {
        match self {
            Mismatch::ColorCount { closed, observed } => format!("k: closed form {closed}, labeling uses {observed} colours"),
            Mismatch::Phases { closed, empirical } => format!("rp: closed form {closed}, minimum cover needs {empirical}"),
            Mismatch::Participants { closed, empirical } => format!("m: closed form {closed}, minimum cover uses {empirical}"),
            Mismatch::Racn { closed, exact } => format!("racn: closed form {closed}, exhaustive search gives {exact}"),
            Mismatch::NotRainbowConnected { missing_pairs } => format!("labeling is not rainbow connected ({missing_pairs} pairs lack a rainbow path)"),
            Mismatch::BoundAboveWitness { bound, colors } => format!("lower bound {bound} exceeds the {colors} colours of a rainbow-connected labeling"),
            Mismatch::BoundAboveExact { bound, exact } => format!("lower bound {bound} exceeds the exact value {exact}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Field {
    RainbowConnected,
    Cover,
    Racn,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::RainbowConnected => "rainbow_connected",
            Field::Cover => "rp/m",
            Field::Racn => "racn_exact",
        }
    }
}

/// A quantity that could not be computed for a row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gap {
    pub field: Field,
    pub reason: Error,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationRow {
    pub closed: SchemeParameters,
    pub observed_k: usize,
    pub rainbow_connected: Option<bool>,
    pub empirical_rp: Option<usize>,
    pub empirical_m: Option<usize>,
    pub racn_exact: Option<usize>,
    pub lower_bound: usize,
    /// Splitting rows only: the printed `y_t y_{t+1}` weight family.
    pub printed_yy_weights: Option<Vec<u32>>,
    pub mismatches: Vec<Mismatch>,
    pub gaps: Vec<Gap>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub family: SchemeFamily,
    pub rows: Vec<ValidationRow>,
}

impl ValidationReport {
    pub fn mismatch_count(&self) -> usize {
        self.rows.iter().map(|r| r.mismatches.len()).sum()
    }

    pub fn gap_count(&self) -> usize {
        self.rows.iter().map(|r| r.gaps.len()).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.mismatch_count() == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValidationOptions {
    pub budget: SearchBudget,
    /// Largest vertex count for the exhaustive RACN search.
    pub racn_max_n: usize,
    /// Largest vertex count for the empirical `rp`/`m` search.
    pub cover_max_n: usize,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        Self { budget: SearchBudget::default(), racn_max_n: crate::rainbow::DEFAULT_MAX_N, cover_max_n: 13 }
    }
}

/// One row per requested `p`, in the order given.
pub fn validate_family(family: SchemeFamily, ps: impl IntoIterator<Item = usize>, opts: &ValidationOptions) -> Result<ValidationReport> {
    let rows = ps.into_iter().map(|p| validate_one(family, p, opts)).collect::<Result<Vec<_>>>()?;
    Ok(ValidationReport { family, rows })
}

fn validate_one(family: SchemeFamily, p: usize, opts: &ValidationOptions) -> Result<ValidationRow> {
    let closed = SchemeParameters::closed_form(family, p)?;
    let g = family.family().build(p)?;
    let w = edge_weights(&g, &family_labeling(family.family(), p)?)?;
    let observed_k = w.distinct_weight_count();
    let lower_bound = theorem_lower_bound(family, p)?;
    let mut mismatches = Vec::new();
    let mut gaps = Vec::new();

    if observed_k != closed.k {
        mismatches.push(Mismatch::ColorCount { closed: closed.k, observed: observed_k });
    }

    let rainbow_connected = match is_rainbow_connected_with_budget(&g, &w, opts.budget) {
        Ok(rc) => {
            if !rc.connected {
                mismatches.push(Mismatch::NotRainbowConnected { missing_pairs: rc.missing.len() });
            } else if lower_bound > observed_k {
                mismatches.push(Mismatch::BoundAboveWitness { bound: lower_bound, colors: observed_k });
            }
            Some(rc.connected)
        }
        Err(e) => {
            gaps.push(Gap { field: Field::RainbowConnected, reason: e });
            None
        }
    };

    let (mut empirical_rp, mut empirical_m) = (None, None);
    if g.n() > opts.cover_max_n {
        gaps.push(Gap { field: Field::Cover, reason: Error::InstanceTooLarge { n: g.n(), max: opts.cover_max_n } });
    } else {
        match optimal_cover(&g, &w, opts.budget) {
            Ok(c) => {
                if c.rp != closed.rp {
                    mismatches.push(Mismatch::Phases { closed: closed.rp, empirical: c.rp });
                }
                if c.m != closed.m {
                    mismatches.push(Mismatch::Participants { closed: closed.m, empirical: c.m });
                }
                empirical_rp = Some(c.rp);
                empirical_m = Some(c.m);
            }
            Err(e) => gaps.push(Gap { field: Field::Cover, reason: e }),
        }
    }

    let racn_exact = if g.n() > opts.racn_max_n {
        gaps.push(Gap { field: Field::Racn, reason: Error::InstanceTooLarge { n: g.n(), max: opts.racn_max_n } });
        None
    } else {
        match racn_exact_with_budget(&g, opts.racn_max_n, opts.budget) {
            Ok(cert) => {
                if cert.value != closed.k {
                    mismatches.push(Mismatch::Racn { closed: closed.k, exact: cert.value });
                }
                if lower_bound > cert.value {
                    mismatches.push(Mismatch::BoundAboveExact { bound: lower_bound, exact: cert.value });
                }
                Some(cert.value)
            }
            Err(e) => {
                gaps.push(Gap { field: Field::Racn, reason: e });
                None
            }
        }
    };

    let printed_yy_weights = (family == SchemeFamily::Splitting).then(|| splitting_printed_yy_weights(p));

    Ok(ValidationRow { closed, observed_k, rainbow_connected, empirical_rp, empirical_m, racn_exact, lower_bound, printed_yy_weights, mismatches, gaps })
}

/// Family the closed forms apply to, if any.
pub fn scheme_family(f: Family) -> Option<SchemeFamily> {
    SchemeFamily::try_from(f).ok()
}
