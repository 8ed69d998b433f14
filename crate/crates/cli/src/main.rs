use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use orthogeo::geodesic::geodesic;
use orthogeo::io::{
    float_json, geodesic_json, parse_host, parse_point, poset_json, samples_csv, Host, Kind,
};
use orthogeo::metric::ChainPoint;
use orthogeo::oracle::{cat0_check, enumerate_arches, oracle_distance};
use orthogeo::poset::boolean_gated_sets;
use orthogeo::Error;

/// Exact geodesics in orthoscheme complexes of modular semilattices.
#[derive(Parser)]
#[command(name = "orthogeo", version)]
struct Cli {
    /// Treat the structure file as this kind instead of reading its `kind` field.
    #[arg(long = "as", value_enum, global = true)]
    kind: Option<KindArg>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Pip,
    Graph,
    Poset,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Pip => Kind::Pip,
            KindArg::Graph => Kind::Graph,
            KindArg::Poset => Kind::Poset,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Load a structure and report its size.
    Validate { structure: PathBuf },
    /// Lattice, modularity and distributivity flags.
    Classify { structure: PathBuf },
    /// Geodesic distance between two points.
    Dist {
        structure: PathBuf,
        x: PathBuf,
        y: PathBuf,
    },
    /// The geodesic as JSON, or `k` evenly spaced points as CSV.
    Geodesic {
        structure: PathBuf,
        x: PathBuf,
        y: PathBuf,
        /// Emit this many evenly spaced path points (implies CSV).
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=100_000))]
        samples: Option<u32>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// The optimal arch, or every arch with `--all`.
    Arch {
        structure: PathBuf,
        x: PathBuf,
        y: PathBuf,
        #[arg(long)]
        all: bool,
    },
    /// Grid shortest-path upper bound next to the engine distance.
    Oracle {
        structure: PathBuf,
        x: PathBuf,
        y: PathBuf,
        /// Grid refinement: steps of 1/n in every simplex.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=64))]
        n: u32,
    },
    /// Sampled check of the CAT(0) convexity inequality.
    #[command(name = "cat0-check")]
    Cat0Check {
        structure: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Poset of Boolean-gated sets of a graph.
    #[command(name = "gated-sets")]
    GatedSets { graph: PathBuf },
}

enum Failure {
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path, kind: Option<Kind>) -> Result<Host, Failure> {
    Ok(parse_host(&read(path)?, kind)?)
}

fn point(host: &Host, path: &Path) -> Result<ChainPoint, Failure> {
    Ok(parse_point(host, &read(path)?)?)
}

fn names(host: &Host, items: &[usize]) -> Value {
    Value::from(
        items
            .iter()
            .map(|&u| host.poset.name(u))
            .collect::<Vec<_>>(),
    )
}

fn run(cli: Cli) -> Result<String, Failure> {
    let kind = cli.kind.map(Kind::from);
    let out = match cli.command {
        Command::Validate { structure } => {
            let host = load(&structure, kind)?;
            json!({
                "valid": true,
                "kind": host.kind.to_string(),
                "elements": host.poset.len(),
                "rank": host.poset.max_rank(),
            })
        }
        Command::Classify { structure } => {
            let host = load(&structure, kind)?;
            let c = host.poset.classification();
            json!({
                "lattice": c.lattice,
                "modular": c.modular,
                "distributive": c.distributive,
                "meet_semilattice": c.meet_semilattice,
                "modular_semilattice": c.modular_semilattice,
                "median": c.median,
            })
        }
        Command::Dist { structure, x, y } => {
            let host = load(&structure, kind)?;
            let (x, y) = (point(&host, &x)?, point(&host, &y)?);
            let g = geodesic(&host.poset, &x, &y)?;
            json!({"length": float_json(g.length)})
        }
        Command::Geodesic {
            structure,
            x,
            y,
            samples,
            format,
        } => {
            let host = load(&structure, kind)?;
            let (x, y) = (point(&host, &x)?, point(&host, &y)?);
            let g = geodesic(&host.poset, &x, &y)?;
            return Ok(match (format, samples) {
                (Some(Format::Json), Some(_)) => {
                    return Err(Failure::Io(
                        "--samples produces CSV; drop --format json".into(),
                    ))
                }
                (Some(Format::Csv), None) => samples_csv(&host, &g.path, 2),
                (_, Some(k)) => samples_csv(&host, &g.path, k as usize),
                _ => format!("{}\n", geodesic_json(&host, &g)),
            });
        }
        Command::Arch {
            structure,
            x,
            y,
            all,
        } => {
            let host = load(&structure, kind)?;
            let (x, y) = (point(&host, &x)?, point(&host, &y)?);
            if all {
                let (a, list) = enumerate_arches(&host.poset, &x, &y)?;
                let arches: Vec<Value> = list
                    .iter()
                    .map(|(arch, v2)| {
                        json!({
                            "arch": names(&host, arch.members()),
                            "v2": v2.to_string(),
                            "v": float_json(v2.to_f64().max(0.0).sqrt()),
                            "concave": arch.is_concave(),
                        })
                    })
                    .collect();
                json!({"base": host.poset.name(a), "count": arches.len(), "arches": arches})
            } else {
                let g = geodesic(&host.poset, &x, &y)?;
                json!({
                    "arch": g.arch.as_ref().map(|a| names(&host, a)),
                    "case": g.case.to_string(),
                    "length": float_json(g.length),
                })
            }
        }
        Command::Oracle { structure, x, y, n } => {
            let host = load(&structure, kind)?;
            let (x, y) = (point(&host, &x)?, point(&host, &y)?);
            let bound = oracle_distance(&host.poset, &x, &y, n)?;
            let g = geodesic(&host.poset, &x, &y)?;
            json!({
                "n": n,
                "upper_bound": float_json(bound),
                "engine": float_json(g.length),
                "excess": float_json(bound - g.length),
            })
        }
        Command::Cat0Check {
            structure,
            samples,
            seed,
        } => {
            let host = load(&structure, kind)?;
            let report = cat0_check(&host.poset, samples, seed)?;
            let mut v = serde_json::to_value(&report).expect("report serializes");
            v["max_violation"] = float_json(report.max_violation);
            if let Some(w) = &report.worst_case {
                v["worst_case"]["violation"] = float_json(w.violation);
            }
            v
        }
        Command::GatedSets { graph } => {
            let text = read(&graph)?;
            let v: Value = serde_json::from_str(&text)
                .map_err(|e| Failure::Domain(Error::InvalidInput(format!("graph JSON: {e}"))))?;
            let list = |key: &str| -> Vec<String> {
                v[key]
                    .as_array()
                    .map(|a| {
                        a.iter()
                            .filter_map(|s| s.as_str().map(String::from))
                            .collect()
                    })
                    .unwrap_or_default()
            };
            let vertices = list("vertices");
            let edges: Vec<(String, String)> = v["edges"]
                .as_array()
                .map(|a| {
                    a.iter()
                        .filter_map(|e| {
                            Some((e[0].as_str()?.to_string(), e[1].as_str()?.to_string()))
                        })
                        .collect()
                })
                .unwrap_or_default();
            poset_json(&boolean_gated_sets(&vertices, &edges)?)
        }
    };
    Ok(format!("{out}\n"))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
