//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed under `--strict`, 2 invalid
//! input, 3 a search budget or size limit was hit.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use racnshare_core::formulas::{theorem_lower_bound, validate_family, SchemeParameters, ValidationOptions};
use racnshare_core::labeling::{edge_weights, family_labeling};
use racnshare_core::protocol::{distribute, simulate_dissemination, simulate_reconstruction_with_budget, DisseminationOptions, PhasePolicy};
use racnshare_core::rainbow::{is_rainbow_connected_with_budget, racn_exact_with_budget, racn_upper, DEFAULT_MAX_N};
use racnshare_core::sharing::{reconstruct, split, SecretConfig};
use racnshare_core::{Error, Family, Graph, Labeling, SchemeFamily, SearchBudget, WeightedColoring};
use serde_json::json;

use crate::dot::export_dot;
use crate::fixture::{parse_vertex_list, Fixture};
use crate::formats::{
    from_json, to_json, CertificateDoc, ColoringDoc, DisseminationDoc, GraphDoc, LabelingDoc, PathDoc, ReconstructionDoc, ReportDoc, ShareDoc,
};
use crate::FormatError;

#[derive(Debug, Parser)]
#[command(name = "racnshare", version, about = "Rainbow antimagic colourings and colour-class secret sharing")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Exit with status 1 when a verification or validation check fails.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Node budget for the exhaustive searches.
    #[arg(long, global = true, default_value_t = SearchBudget::DEFAULT_NODES)]
    pub budget: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Dot,
    Table,
}

#[derive(Debug, Args)]
pub struct Instance {
    #[arg(long, value_parser = parse_family)]
    pub family: Option<Family>,
    #[arg(long)]
    pub p: Option<usize>,
    /// Graph JSON file, instead of --family/--p.
    #[arg(long, conflicts_with_all = ["family", "p"])]
    pub graph: Option<PathBuf>,
    /// Labeling JSON file; defaults to the family's closed-form labeling.
    #[arg(long)]
    pub labeling: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SecretInput {
    /// Secret as UTF-8 text.
    #[arg(long)]
    pub secret: Option<String>,
    /// Secret as hex bytes.
    #[arg(long)]
    pub secret_hex: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a graph.
    Build(Instance),
    /// Print the labeling of an instance.
    Label(Instance),
    /// Print the edge weights and colour classes induced by the labeling.
    Weights(Instance),
    /// Check that every vertex pair has a rainbow path.
    VerifyRainbow(Instance),
    /// Rainbow antimagic connection number.
    Racn {
        #[command(flatten)]
        instance: Instance,
        /// Exhaustive search over all labelings; otherwise the colour count of the given labeling.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Closed-form scheme parameters.
    Formulas {
        #[arg(long, value_parser = parse_scheme_family)]
        family: SchemeFamily,
        #[arg(long)]
        p: usize,
    },
    /// Compare closed forms with computed values over a range of p.
    Validate {
        /// One family; all three when omitted.
        #[arg(long, value_parser = parse_scheme_family)]
        family: Option<SchemeFamily>,
        /// Inclusive range such as `2..6`.
        #[arg(long, value_parser = parse_range)]
        p_range: (usize, usize),
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        racn_max_n: usize,
        #[arg(long, default_value_t = 13)]
        cover_max_n: usize,
    },
    /// Split a secret into shares.
    Split {
        #[command(flatten)]
        secret: SecretInput,
        #[arg(long)]
        threshold: usize,
        #[arg(long)]
        shares: usize,
    },
    /// Recover a secret from a JSON array of shares.
    Reconstruct {
        #[arg(long)]
        shares: PathBuf,
        /// Defaults to the number of shares given.
        #[arg(long)]
        threshold: Option<usize>,
    },
    /// Distribute a secret over the colour classes and gather it back phase by phase.
    SimulateReconstruction {
        #[command(flatten)]
        instance: Instance,
        #[command(flatten)]
        secret: SecretInput,
        /// Use a minimum cover instead of greedy phases.
        #[arg(long, conflicts_with = "clamp")]
        optimal: bool,
        /// Greedy phases that never collect every class at once.
        #[arg(long)]
        clamp: bool,
    },
    /// Spread a message through cycles and fallback paths.
    SimulateDissemination {
        #[arg(long, required_unless_present = "graph")]
        fixture: Option<PathBuf>,
        #[arg(long, conflicts_with = "fixture")]
        graph: Option<PathBuf>,
        /// Comma-separated display names of the initially informed participants.
        #[arg(long)]
        informed: String,
        /// Overrides the fixture's cycle length limit.
        #[arg(long)]
        max_cycle_len: Option<usize>,
    },
    /// Graphviz DOT with one colour per weight class.
    ExportDot(Instance),
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| format!("unknown family {s:?} (expected path, shadow, splitting or mycielski)"))
}

fn parse_scheme_family(s: &str) -> Result<SchemeFamily, String> {
    SchemeFamily::parse(s).ok_or_else(|| format!("unknown family {s:?} (expected shadow, splitting or mycielski)"))
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|e| format!("bad range start: {e}"))?;
    let b: usize = b.trim().parse().map_err(|e| format!("bad range end: {e}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

#[derive(Debug)]
enum Failure {
    /// Exit 1.
    Check(String),
    /// Exit 2.
    Input(String),
    Format(FormatError),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Format(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Format(FormatError::Core(e))
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
            Failure::Format(FormatError::Core(e)) => match e {
                Error::BudgetExceeded { .. } | Error::InstanceTooLarge { .. } | Error::ReconstructionBudget { .. } | Error::TooManyCycles(_) => 3,
                _ => 2,
            },
            Failure::Format(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Check(m) | Failure::Input(m) => m.clone(),
            Failure::Format(e) => e.to_string(),
        }
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buf = String::new();
    let result = execute(&cli, &mut buf);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|e| FormatError::Io(format!("{}: {e}", path.display())))
}

fn load_graph(inst: &Instance) -> Result<Graph, Failure> {
    match (&inst.graph, inst.family, inst.p) {
        (Some(path), _, _) => Ok(from_json::<GraphDoc>(&read(path)?)?.to_graph()?),
        (None, Some(f), Some(p)) => Ok(f.build(p)?),
        _ => Err(Failure::Input("give --family and --p, or --graph FILE".into())),
    }
}

fn load_labeling(inst: &Instance, g: &Graph) -> Result<Labeling, Failure> {
    match (&inst.labeling, g.family()) {
        (Some(path), _) => Ok(from_json::<LabelingDoc>(&read(path)?)?.to_labeling(g)?),
        (None, Some(f)) => Ok(family_labeling(f, g.p())?),
        (None, None) => Err(Failure::Input("this graph has no closed-form labeling; give --labeling FILE".into())),
    }
}

fn load_coloring(inst: &Instance) -> Result<(Graph, Labeling, WeightedColoring), Failure> {
    let g = load_graph(inst)?;
    let l = load_labeling(inst, &g)?;
    if !l.is_bijection(g.n()) {
        return Err(Error::InvalidLabeling(format!("labels are not a bijection onto 1..={}", g.n())).into());
    }
    let w = edge_weights(&g, &l)?;
    Ok((g, l, w))
}

fn secret_bytes(s: &SecretInput) -> Result<Vec<u8>, Failure> {
    match (&s.secret, &s.secret_hex) {
        (Some(text), _) => Ok(text.as_bytes().to_vec()),
        (None, Some(h)) => Ok(hex::decode(h.trim()).map_err(FormatError::from)?),
        (None, None) => Err(Failure::Input("give --secret or --secret-hex".into())),
    }
}

fn emit_json<T: serde::Serialize>(out: &mut String, value: &T) {
    out.push_str(&to_json(value));
    out.push('\n');
}

fn only(format: OutputFormat, allowed: &[OutputFormat], what: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Input(format!("{what} does not support --format {format:?}").to_lowercase()))
    }
}

fn execute(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    let budget = SearchBudget::new(cli.budget);
    let fmt = cli.format;
    match &cli.command {
        Command::Build(inst) => {
            only(fmt, &[OutputFormat::Json, OutputFormat::Dot], "build")?;
            let g = load_graph(inst)?;
            match fmt {
                OutputFormat::Dot => out.push_str(&export_dot(&g, None)),
                _ => emit_json(out, &GraphDoc::from_graph(&g)),
            }
        }
        Command::Label(inst) => {
            only(fmt, &[OutputFormat::Json], "label")?;
            let g = load_graph(inst)?;
            let l = load_labeling(inst, &g)?;
            emit_json(out, &LabelingDoc::from_labeling(&g, &l));
        }
        Command::Weights(inst) => {
            only(fmt, &[OutputFormat::Json, OutputFormat::Dot], "weights")?;
            let (g, _, w) = load_coloring(inst)?;
            match fmt {
                OutputFormat::Dot => out.push_str(&export_dot(&g, Some(&w))),
                _ => emit_json(out, &ColoringDoc::from_coloring(&w)),
            }
        }
        Command::ExportDot(inst) => {
            let g = load_graph(inst)?;
            let w = match (&inst.labeling, g.family()) {
                (None, None) => None,
                _ => Some(load_coloring(inst)?.2),
            };
            out.push_str(&export_dot(&g, w.as_ref()));
        }
        Command::VerifyRainbow(inst) => {
            only(fmt, &[OutputFormat::Json], "verify-rainbow")?;
            let (g, _, w) = load_coloring(inst)?;
            let rc = is_rainbow_connected_with_budget(&g, &w, budget)?;
            let witnesses: Vec<_> = rc.witnesses.iter().map(|(&(u, v), path)| json!({ "pair": [g.name(u), g.name(v)], "path": path_doc(&g, path) })).collect();
            let missing: Vec<_> = rc.missing.iter().map(|&(u, v)| [g.name(u), g.name(v)]).collect();
            emit_json(out, &json!({ "connected": rc.connected, "colors": w.distinct_weight_count(), "missing": missing, "witnesses": witnesses }));
            if cli.strict && !rc.connected {
                return Err(Failure::Check(format!("{} vertex pairs have no rainbow path", rc.missing.len())));
            }
        }
        Command::Racn { instance, exact, max_n } => {
            only(fmt, &[OutputFormat::Json], "racn")?;
            if *exact {
                let g = load_graph(instance)?;
                let cert = racn_exact_with_budget(&g, *max_n, budget)?;
                emit_json(out, &CertificateDoc::from_certificate(&g, &cert));
            } else {
                let (g, l, _) = load_coloring(instance)?;
                let upper = racn_upper(&g, &l)?;
                emit_json(out, &json!({ "upper_bound": upper, "labeling": LabelingDoc::from_labeling(&g, &l).labels }));
                if cli.strict && upper.is_none() {
                    return Err(Failure::Check("the labeling is not rainbow connected".into()));
                }
            }
        }
        Command::Formulas { family, p } => {
            only(fmt, &[OutputFormat::Json], "formulas")?;
            let s = SchemeParameters::closed_form(*family, *p)?;
            let bound = theorem_lower_bound(*family, *p)?;
            emit_json(out, &json!({ "family": s.family.name(), "p": s.p, "n": s.n, "k": s.k, "m": s.m, "rp": s.rp, "lower_bound": bound }));
        }
        Command::Validate { family, p_range, racn_max_n, cover_max_n } => {
            only(fmt, &[OutputFormat::Json, OutputFormat::Table], "validate")?;
            let opts = ValidationOptions { budget, racn_max_n: *racn_max_n, cover_max_n: *cover_max_n };
            let families: Vec<SchemeFamily> = match family {
                Some(f) => vec![*f],
                None => SchemeFamily::ALL.to_vec(),
            };
            let reports = families.iter().map(|&f| validate_family(f, p_range.0..=p_range.1, &opts)).collect::<Result<Vec<_>, _>>()?;
            let doc = ReportDoc::from_reports(&reports);
            match fmt {
                OutputFormat::Table => out.push_str(&doc.to_table()),
                _ => emit_json(out, &doc),
            }
            if cli.strict && doc.mismatch_count > 0 {
                return Err(Failure::Check(format!("{} mismatches between closed forms and computed values", doc.mismatch_count)));
            }
        }
        Command::Split { secret, threshold, shares } => {
            only(fmt, &[OutputFormat::Json], "split")?;
            let bytes = secret_bytes(secret)?;
            let list = split(&bytes, &SecretConfig::new(*threshold, *shares, cli.seed))?;
            emit_json(out, &list.iter().map(ShareDoc::from_share).collect::<Vec<_>>());
        }
        Command::Reconstruct { shares, threshold } => {
            only(fmt, &[OutputFormat::Json], "reconstruct")?;
            let docs: Vec<ShareDoc> = from_json(&read(shares)?)?;
            let list = docs.iter().map(ShareDoc::to_share).collect::<Result<Vec<_>, _>>()?;
            let secret = reconstruct(&list, threshold.unwrap_or(list.len()))?;
            emit_json(out, &json!({ "secret_hex": hex::encode(&secret), "secret_utf8": String::from_utf8(secret).ok() }));
        }
        Command::SimulateReconstruction { instance, secret, optimal, clamp } => {
            only(fmt, &[OutputFormat::Json, OutputFormat::Table], "simulate-reconstruction")?;
            let (g, l, _) = load_coloring(instance)?;
            let bytes = secret_bytes(secret)?;
            let inst = distribute(&g, &l, &bytes, cli.seed)?;
            let (policy, name) = match (optimal, clamp) {
                (true, _) => (PhasePolicy::Optimal, "optimal"),
                (_, true) => (PhasePolicy::Clamped, "clamped"),
                _ => (PhasePolicy::Greedy, "greedy"),
            };
            let trace = simulate_reconstruction_with_budget(&inst, policy, budget)?;
            let doc = ReconstructionDoc::from_trace(&g, name, inst.k(), &bytes, &trace);
            match fmt {
                OutputFormat::Table => {
                    for (i, ph) in doc.phases.iter().enumerate() {
                        out.push_str(&format!("phase {}: {}  new {:?}  held {}/{}\n", i + 1, ph.path.vertices.join("-"), ph.newly_collected, ph.collected_after.len(), doc.k));
                    }
                    out.push_str(&format!("{} phases, {} participants, recovered: {}\n", doc.phases.len(), doc.participants_used.len(), doc.matches_secret));
                }
                _ => emit_json(out, &doc),
            }
            if !doc.matches_secret {
                return Err(Failure::Check("reconstruction did not recover the secret".into()));
            }
        }
        Command::SimulateDissemination { fixture, graph, informed, max_cycle_len } => {
            only(fmt, &[OutputFormat::Json, OutputFormat::Table], "simulate-dissemination")?;
            let (g, fixture_len) = match (fixture, graph) {
                (Some(path), _) => {
                    let f = load_fixture(path)?;
                    (f.graph()?, f.max_cycle_len)
                }
                (None, Some(path)) => (from_json::<GraphDoc>(&read(path)?)?.to_graph()?, None),
                (None, None) => return Err(Failure::Input("give --fixture FILE or --graph FILE".into())),
            };
            let limit = max_cycle_len.or(fixture_len);
            let informed0 = parse_vertex_list(&g, informed)?.into_iter().collect();
            let opts = DisseminationOptions { max_cycle_len: limit, ..DisseminationOptions::default() };
            let trace = simulate_dissemination(&g, &informed0, &opts)?;
            let doc = DisseminationDoc::from_trace(&g, limit, &trace);
            match fmt {
                OutputFormat::Table => {
                    for r in &doc.rounds {
                        let circuits: Vec<String> = r
                            .circuits
                            .iter()
                            .map(|c| match c {
                                crate::formats::CircuitDoc::Cycle(v) => format!("cycle {}", v.join("-")),
                                crate::formats::CircuitDoc::Path(v) => format!("path {}", v.join("->")),
                            })
                            .collect();
                        out.push_str(&format!("round {}: {}  new {{{}}}\n", r.round, circuits.join(", "), r.newly_informed.join(",")));
                    }
                    out.push_str(&format!("{} rounds\n", doc.rounds.len()));
                }
                _ => emit_json(out, &doc),
            }
        }
    }
    Ok(())
}

fn path_doc(g: &Graph, p: &racnshare_core::rainbow::RainbowPath) -> PathDoc {
    PathDoc { vertices: p.vertices.iter().map(|&v| g.name(v)).collect(), weights: p.weights.clone() }
}

/// Reads a fixture file; the bundled fixture's file name also works from any directory.
fn load_fixture(path: &Path) -> Result<Fixture, FormatError> {
    if !path.exists() && path.file_name().is_some_and(|n| n == "fig1_inferred.json") {
        return Ok(crate::fixture::fig1_inferred());
    }
    Fixture::load(path)
}
