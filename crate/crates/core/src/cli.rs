//! The `iasi` command-line front end.
//!
//! Every command prints one JSON document. Exit status is 0 on success, 1 on
//! a domain error (with `{"error": code, "message": ...}` on stderr) and 2 on
//! a usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::construct::{construct_bi_bipartite, construct_bi_path, construct_iso, construct_iso_uniform};
use crate::error::{IasiError, Result};
use crate::graph::{EdgeId, Graph};
use crate::labeling::{classify, Labeling, Verdict};
use crate::oracle::{search_labeling, SearchBounds};
use crate::theorems::{verify_theorem_on, TheoremConfig, DEFAULT_INSTANCES};
use crate::transfer::{
    transfer_contract, transfer_line, transfer_reduce, transfer_subdivide, transfer_total, Transferred,
};

/// Environment variable overriding the default search bounds,
/// e.g. `a=6,d=6,nmin=3,nmax=5,cap=6`.
pub const BOUNDS_ENV: &str = "IASI_BOUNDS";

#[derive(Debug, Parser)]
#[command(name = "iasi", version, about = "Arithmetic set-indexers on simple graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the JSON result here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a labeling of a graph.
    Classify {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        labels: PathBuf,
    },
    /// Build an associated graph.
    Transform {
        #[arg(short, long)]
        graph: PathBuf,
        #[command(flatten)]
        target: Target,
        /// Name of the merged vertex (contract only).
        #[arg(long)]
        name: Option<String>,
    },
    /// Carry a labeling to an associated graph and classify the result.
    Transfer {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        labels: PathBuf,
        #[command(flatten)]
        target: Target,
        /// Also write the new graph to this file.
        #[arg(long)]
        graph_out: Option<PathBuf>,
        /// Also write the new labeling to this file.
        #[arg(long)]
        labels_out: Option<PathBuf>,
    },
    /// Construct a labeling of a requested class.
    Construct {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: ConstructKind,
        /// Common difference (lowest difference for biarithmetic kinds).
        #[arg(short, long, default_value_t = 1)]
        d: u64,
        /// Ratio between adjacent differences.
        #[arg(short, long, default_value_t = 2)]
        k: u64,
        /// Label size for every vertex.
        #[arg(long, default_value_t = 3, conflicts_with = "sizes")]
        size: usize,
        /// Per-vertex sizes: in path order for bi-path, in vertex-id order otherwise.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
    },
    /// Exhaustively search for a labeling of a class.
    Search {
        #[arg(short, long)]
        graph: PathBuf,
        /// Target verdict, or `any` for every IASI with AP vertex labels.
        #[arg(long, default_value = "any")]
        class: String,
        #[command(flatten)]
        bounds: BoundsArgs,
    },
    /// Check a known result on fixture graphs or a given graph.
    VerifyTheorem {
        theorem: String,
        /// Fixture names such as P3, C4, K4, K1,3 (separated by spaces or `;`).
        #[arg(long, value_delimiter = ';', num_args = 1..)]
        instances: Vec<String>,
        /// Check a graph file instead of (or in addition to) fixtures.
        #[arg(short, long)]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 25)]
        witness_limit: usize,
        #[command(flatten)]
        bounds: BoundsArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Line,
    Total,
    Subdivide,
    Contract,
    Reduce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Iso,
    BiBipartite,
    BiPath,
}

#[derive(Debug, Args)]
pub struct Target {
    #[arg(long, value_enum)]
    op: Op,
    /// Edge `u~v` to contract.
    #[arg(long, required_if_eq("op", "contract"))]
    edge: Option<String>,
    /// Vertex to remove by topological reduction.
    #[arg(long, required_if_eq("op", "reduce"))]
    vertex: Option<String>,
    /// Edges to subdivide (default: all), as `u~v,x~y`.
    #[arg(long, value_delimiter = ',')]
    edges: Option<Vec<String>>,
}

#[derive(Debug, Default, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    a_max: Option<u64>,
    #[arg(long)]
    d_max: Option<u64>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Largest graph (in vertices) the oracle accepts.
    #[arg(long)]
    cap: Option<usize>,
}

impl BoundsArgs {
    fn resolve(&self, env: Option<&str>) -> Result<SearchBounds> {
        let mut b = match env {
            Some(text) => parse_bounds_env(text)?,
            None => SearchBounds::default(),
        };
        if let Some(v) = self.a_max {
            b.a_max = v;
        }
        if let Some(v) = self.d_max {
            b.d_max = v;
        }
        if let Some(v) = self.n_min {
            b.n_min = v;
        }
        if let Some(v) = self.n_max {
            b.n_max = v;
        }
        if let Some(v) = self.cap {
            b.vertex_cap = v;
        }
        b.validate()?;
        Ok(b)
    }
}

/// Parses `a=6,d=6,nmin=3,nmax=5,cap=6`; omitted keys keep their defaults.
pub fn parse_bounds_env(text: &str) -> Result<SearchBounds> {
    let mut b = SearchBounds::default();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| IasiError::InvalidBounds(format!("expected key=value, got `{part}`")))?;
        let bad = || IasiError::InvalidBounds(format!("`{value}` is not a valid value for `{key}`"));
        match key.trim() {
            "a" => b.a_max = value.trim().parse().map_err(|_| bad())?,
            "d" => b.d_max = value.trim().parse().map_err(|_| bad())?,
            "nmin" => b.n_min = value.trim().parse().map_err(|_| bad())?,
            "nmax" => b.n_max = value.trim().parse().map_err(|_| bad())?,
            "cap" => b.vertex_cap = value.trim().parse().map_err(|_| bad())?,
            other => return Err(IasiError::InvalidBounds(format!("unknown key `{other}`"))),
        }
    }
    b.validate()?;
    Ok(b)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| IasiError::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| IasiError::Io(format!("{}: {e}", path.display())))
}

/// Reads a graph as JSON or, if the file does not start with `{`, as an edge list.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        serde_json::from_str(&text).map_err(|e| IasiError::Parse(format!("{}: {e}", path.display())))
    } else {
        Graph::parse_edge_list(&text)
    }
}

pub fn read_labels(path: &Path) -> Result<Labeling> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| IasiError::Parse(format!("{}: {e}", path.display())))
}

/// Canonical JSON text: pretty-printed, newline-terminated.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

fn parse_edges(list: &Option<Vec<String>>) -> Result<Option<Vec<EdgeId>>> {
    list.as_ref()
        .map(|items| items.iter().map(|s| EdgeId::parse(s)).collect())
        .transpose()
}

fn transform(g: &Graph, target: &Target, name: Option<&str>) -> Result<Graph> {
    match target.op {
        Op::Line => g.line_graph(),
        Op::Total => g.total_graph(),
        Op::Subdivide => g.subdivide(parse_edges(&target.edges)?.as_deref()),
        Op::Contract => g.contract_edge(&EdgeId::parse(target.edge.as_deref().unwrap_or_default())?, name),
        Op::Reduce => g.topological_reduce(target.vertex.as_deref().unwrap_or_default()),
    }
}

fn transfer(g: &Graph, f: &Labeling, target: &Target) -> Result<Transferred> {
    match target.op {
        Op::Line => transfer_line(g, f),
        Op::Total => transfer_total(g, f),
        Op::Subdivide => transfer_subdivide(g, f, parse_edges(&target.edges)?.as_deref()),
        Op::Contract => transfer_contract(g, f, &EdgeId::parse(target.edge.as_deref().unwrap_or_default())?),
        Op::Reduce => transfer_reduce(g, f, target.vertex.as_deref().unwrap_or_default()),
    }
}

fn parse_class(text: &str) -> Result<Option<Verdict>> {
    if text == "any" {
        Ok(None)
    } else {
        text.parse().map(Some)
    }
}

fn construct(g: &Graph, kind: ConstructKind, d: u64, k: u64, size: usize, sizes: Option<&[usize]>) -> Result<Labeling> {
    match kind {
        ConstructKind::Iso => match sizes {
            None => construct_iso_uniform(g, d, size),
            Some(list) => {
                if list.len() != g.vertex_count() {
                    return Err(IasiError::InvalidParameter(format!(
                        "{} sizes given for {} vertices",
                        list.len(),
                        g.vertex_count()
                    )));
                }
                let map = g.vertices().map(str::to_string).zip(list.iter().copied()).collect();
                construct_iso(g, d, &map)
            }
        },
        ConstructKind::BiBipartite => {
            if sizes.is_some() {
                return Err(IasiError::InvalidParameter("bi-bipartite sizes are fixed to max(3, k)".into()));
            }
            construct_bi_bipartite(g, d, k)
        }
        ConstructKind::BiPath => {
            let uniform = vec![size; g.vertex_count()];
            construct_bi_path(g, d, k, sizes.unwrap_or(&uniform))
        }
    }
}

/// Executes a parsed command and returns the JSON document to emit.
pub fn execute(cli: &Cli, env_bounds: Option<&str>) -> Result<String> {
    let doc = match &cli.command {
        Command::Classify { graph, labels } => {
            let g = read_graph(graph)?;
            let f = read_labels(labels)?;
            to_json(&classify(&g, &f)?)
        }
        Command::Transform { graph, target, name } => {
            let g = read_graph(graph)?;
            to_json(&transform(&g, target, name.as_deref())?)
        }
        Command::Transfer { graph, labels, target, graph_out, labels_out } => {
            let g = read_graph(graph)?;
            let f = read_labels(labels)?;
            let t = transfer(&g, &f, target)?;
            if let Some(path) = graph_out {
                write(path, &to_json(&t.graph))?;
            }
            if let Some(path) = labels_out {
                write(path, &to_json(&t.labeling))?;
            }
            to_json(&t)
        }
        Command::Construct { graph, kind, d, k, size, sizes } => {
            let g = read_graph(graph)?;
            let f = construct(&g, *kind, *d, *k, *size, sizes.as_deref())?;
            to_json(&json!({ "graph": g, "labeling": f, "report": classify(&g, &f)? }))
        }
        Command::Search { graph, class, bounds } => {
            let g = read_graph(graph)?;
            let b = bounds.resolve(env_bounds)?.with_class(parse_class(class)?);
            to_json(&search_labeling(&g, &b)?)
        }
        Command::VerifyTheorem { theorem, instances, graph, witness_limit, bounds } => {
            let mut graphs = Vec::new();
            let names: Vec<String> = if instances.is_empty() && graph.is_none() {
                DEFAULT_INSTANCES.iter().map(|s| s.to_string()).collect()
            } else {
                instances.clone()
            };
            for name in names {
                let g = Graph::fixture(&name)?;
                graphs.push((name, g));
            }
            if let Some(path) = graph {
                graphs.push((path.display().to_string(), read_graph(path)?));
            }
            let config = TheoremConfig { bounds: bounds.resolve(env_bounds)?, witness_limit: *witness_limit };
            to_json(&verify_theorem_on(theorem, &graphs, &config)?)
        }
    };
    if let Some(path) = &cli.output {
        write(path, &doc)?;
        return Ok(String::new());
    }
    Ok(doc)
}

/// Parses `args`, runs the command and returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    let env = std::env::var(BOUNDS_ENV).ok();
    match execute(&cli, env.as_deref()) {
        Ok(doc) => {
            let _ = stdout.write_all(doc.as_bytes());
            0
        }
        Err(e) => {
            let body = json!({ "error": e.code(), "message": e.to_string() });
            let _ = stderr.write_all(to_json(&body).as_bytes());
            1
        }
    }
}
