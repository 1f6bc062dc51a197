use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use ringline::graph::{
    count_cliques, extension_profile_containing, CensusOptions, Graph, Limits, DEFAULT_CENSUS_BUDGET,
    DEFAULT_VERTEX_BOUND,
};
use ringline::rings::{spec_graph, unit_difference_graph, RingSpec, Summand};
use ringline::suite::{self, SuiteConfig, SUITE_CENSUS_BUDGET};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

/// Distant graphs of projective lines over finite rings: construction,
/// clique census, verification and count tables.
#[derive(Parser, Debug)]
#[command(name = "ringline", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Census node budget [default: 1000000, or 100000000 for verify].
    #[arg(long, env = "RINGLINE_BUDGET", global = true)]
    budget: Option<u64>,
    /// Census worker threads; 0 uses all available cores.
    #[arg(long, default_value_t = 0, global = true)]
    workers: usize,
    /// Largest graph (in vertices) that may be built.
    #[arg(long, default_value_t = DEFAULT_VERTEX_BOUND, global = true)]
    vertex_bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph and print its size and regularity.
    Build {
        #[command(flatten)]
        graph: GraphArgs,
        /// Write Graphviz DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Count cliques of every size up to --kmax.
    Census {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        kmax: usize,
        /// Also print the extension-count histogram of all K-cliques.
        #[arg(long, value_name = "K")]
        profile: Option<usize>,
        /// Restrict the profile to cliques containing these vertex labels.
        #[arg(long, value_delimiter = ',', requires = "profile")]
        base: Vec<String>,
    },
    /// Run a verification suite.
    Verify {
        /// commutative, matrix, partitions, identities, fixtures or all
        suite: String,
    },
    /// Print the point-count, cap1N/cap2N and coefficient tables.
    Tables,
}

#[derive(clap::Args, Debug)]
struct GraphArgs {
    /// Ring spec as a JSON file, or inline JSON starting with '{'.
    #[arg(long)]
    spec: String,
    /// Use the unit-difference graph on GL_m(q) of a single matrix summand.
    #[arg(long)]
    unit_graph: bool,
}

impl GraphArgs {
    fn load(&self, limits: &Limits) -> Result<Graph> {
        let text = if self.spec.trim_start().starts_with('{') {
            self.spec.clone()
        } else {
            fs::read_to_string(&self.spec).with_context(|| format!("reading {}", self.spec))?
        };
        let spec = RingSpec::from_json(&text)?;
        for w in spec.validate()? {
            eprintln!("warning: {w}");
        }
        if self.unit_graph {
            let (m, q) = match spec.summands.as_slice() {
                [Summand::Matrix { m, q }] if spec.radical_multiplier == 1 => (*m, *q),
                _ => bail!("--unit-graph needs a spec with exactly one matrix summand"),
            };
            return Ok(unit_difference_graph(m, q, limits)?.graph);
        }
        Ok(spec_graph(&spec, limits)?)
    }
}

fn number(x: &BigUint) -> serde_json::Value {
    match x.to_u64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn csv_string(rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn build(cli: &Cli, graph: &GraphArgs, dot: &Option<PathBuf>, limits: &Limits) -> Result<String> {
    let g = graph.load(limits)?;
    if let Some(path) = dot {
        fs::write(path, g.to_dot()).with_context(|| format!("writing {}", path.display()))?;
    }
    let deg = if g.is_t() { None } else { g.regular_degree() };
    let edges = if g.is_t() { 0 } else { g.edge_count() };
    Ok(match cli.format {
        Format::Json => json!({
            "is_t": g.is_t(),
            "vertices": g.n(),
            "edges": edges,
            "regular_degree": deg,
        })
        .to_string()
            + "\n",
        Format::Csv => csv_string(&[
            vec!["vertices".into(), "edges".into(), "regular_degree".into()],
            vec![
                g.n().to_string(),
                edges.to_string(),
                deg.map(|d| d.to_string()).unwrap_or_default(),
            ],
        ])?,
        Format::Text if g.is_t() => "graph T\n".into(),
        Format::Text => match deg {
            Some(d) => format!("{} vertices, {d}-regular, {edges} edges\n", g.n()),
            None => format!("{} vertices, {edges} edges\n", g.n()),
        },
    })
}

fn census(
    cli: &Cli,
    graph: &GraphArgs,
    kmax: usize,
    profile: Option<usize>,
    base: &[String],
    limits: &Limits,
) -> Result<String> {
    let g = graph.load(limits)?;
    let opts = CensusOptions::with_budget(cli.budget.unwrap_or(DEFAULT_CENSUS_BUDGET)).workers(cli.workers);
    let counts = count_cliques(&g, kmax, &opts)?;
    let hist = match profile {
        Some(k) => {
            let base = base
                .iter()
                .map(|l| g.find_label(l).with_context(|| format!("no vertex labelled {l:?}")))
                .collect::<Result<Vec<_>>>()?;
            Some((k, extension_profile_containing(&g, &base, k, &opts)?))
        }
        None => None,
    };
    Ok(match cli.format {
        Format::Json => {
            let mut v = json!({ "counts": counts.counts().iter().map(number).collect::<Vec<_>>() });
            if let Some((k, h)) = &hist {
                v["profile"] = json!({
                    "k": k,
                    "histogram": h.iter().map(|(e, c)| (e.to_string(), json!(c))).collect::<serde_json::Map<_, _>>(),
                });
            }
            v.to_string() + "\n"
        }
        Format::Csv => {
            let mut rows = vec![vec!["k".to_string(), "count".to_string()]];
            rows.extend(counts.counts().iter().enumerate().map(|(k, c)| vec![k.to_string(), c.to_string()]));
            let mut out = csv_string(&rows)?;
            if let Some((k, h)) = &hist {
                let mut rows = vec![vec![format!("extensions_of_{k}_cliques"), "cliques".to_string()]];
                rows.extend(h.iter().map(|(e, c)| vec![e.to_string(), c.to_string()]));
                out.push('\n');
                out.push_str(&csv_string(&rows)?);
            }
            out
        }
        Format::Text => {
            let list: Vec<String> = counts.counts().iter().map(|c| c.to_string()).collect();
            let mut out = format!("clique counts k=0..{kmax}: {}\n", list.join(","));
            if let Some((k, h)) = &hist {
                out.push_str(&format!("extension profile of {k}-cliques (extensions: cliques)\n"));
                for (e, c) in h {
                    out.push_str(&format!("{e}: {c}\n"));
                }
            }
            out
        }
    })
}

fn verify(cli: &Cli, name: &str, limits: &Limits) -> Result<(String, bool)> {
    let cfg = SuiteConfig {
        census: CensusOptions::with_budget(cli.budget.unwrap_or(SUITE_CENSUS_BUDGET)).workers(cli.workers),
        limits: *limits,
    };
    let checks = suite::run(name, &cfg)?;
    let ok = checks.iter().all(|c| c.passed);
    let out = match cli.format {
        Format::Json => serde_json::to_string_pretty(&checks)? + "\n",
        Format::Csv => {
            let mut rows = vec![vec!["suite".into(), "check".into(), "passed".into(), "detail".into()]];
            rows.extend(
                checks
                    .iter()
                    .map(|c| vec![c.suite.to_string(), c.name.clone(), c.passed.to_string(), c.detail.clone()]),
            );
            csv_string(&rows)?
        }
        Format::Text => {
            let mut out = String::new();
            for c in &checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    out.push_str(&format!("{mark} [{}] {}\n", c.suite, c.name));
                } else {
                    out.push_str(&format!("{mark} [{}] {} ({})\n", c.suite, c.name, c.detail));
                }
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            out.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
            out
        }
    };
    Ok((out, ok))
}

fn run(cli: &Cli) -> Result<bool> {
    let limits = Limits {
        max_vertices: cli.vertex_bound,
    };
    if cli.budget == Some(0) || cli.vertex_bound == 0 {
        bail!("budgets and bounds must be positive");
    }
    let (out, ok) = match &cli.command {
        Command::Build { graph, dot } => (build(cli, graph, dot, &limits)?, true),
        Command::Census {
            graph,
            kmax,
            profile,
            base,
        } => (census(cli, graph, *kmax, *profile, base, &limits)?, true),
        Command::Verify { suite } => verify(cli, suite, &limits)?,
        Command::Tables => {
            let out = match cli.format {
                Format::Text => suite::tables_text()?,
                Format::Json => serde_json::to_string_pretty(&suite::tables_json()?)? + "\n",
                Format::Csv => suite::tables_csv()?,
            };
            (out, true)
        }
    };
    std::io::stdout().write_all(out.as_bytes())?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
