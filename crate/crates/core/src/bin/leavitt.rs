use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use leavitt::closure::{hsat_lattice, LatticeConfig, LatticeMode};
use leavitt::corpus::run_corpus;
use leavitt::cycles::gk_dimension;
use leavitt::lie::{is_balloon, is_balloon_monoid};
use leavitt::monoid::{bounded_equal, bounded_leq, composition_series, MonoidElement};
use leavitt::random::RandomGraphSpec;
use leavitt::suite::{property_suite, CheckOptions};
use leavitt::{ClassificationReport, FieldChar, Graph};

#[derive(Parser)]
#[command(
    name = "leavitt",
    version,
    about = "Classify directed graphs by the algebraic properties of their Leavitt path algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Characteristic of the coefficient field (0 or a prime).
    #[arg(long = "char", global = true, default_value = "0")]
    char: FieldChar,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Full classification report.
    Classify {
        graph: PathBuf,
        /// Report id; defaults to the file stem.
        #[arg(long)]
        id: Option<String>,
    },
    /// GK-dimension with the cycle-chain lengths behind it.
    Gkdim { graph: PathBuf },
    /// Lattice of hereditary saturated sets.
    Lattice {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    /// Composition series with step types.
    Series { graph: PathBuf },
    /// Balloon test, by definition and through the talented monoid.
    Balloon {
        graph: PathBuf,
        #[arg(long)]
        vertex: String,
        /// Comma-separated base set.
        #[arg(long, value_delimiter = ',', required = true)]
        over: Vec<String>,
    },
    /// Bounded order and equality decisions in the talented monoid.
    Monoid {
        #[arg(value_enum)]
        relation: Relation,
        graph: PathBuf,
        #[arg(long, default_value_t = 10)]
        depth: u32,
        /// Left element, e.g. `u@0+w@1`.
        a: String,
        /// Right element.
        b: String,
    },
    /// Golden-report corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Cross-checks over seeded random graphs.
    Prop {
        #[arg(long, default_value_t = 1000)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "0,2,3")]
        chars: Vec<FieldChar>,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[arg(long, default_value_t = 16)]
        max_edges: usize,
        /// Make every sampled graph connected.
        #[arg(long)]
        connected: bool,
        /// Directory receiving one graph file per counterexample.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Auto,
    Exhaustive,
    Generated,
}

#[derive(Clone, Copy, ValueEnum)]
enum Relation {
    Leq,
    Eq,
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Compare every graph in a directory with its golden report.
    Run { dir: PathBuf },
}

/// Exit status: 0 success, 1 consistency failure or mismatch, 2 input error.
enum Outcome {
    Ok,
    Inconsistent,
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Graph::parse_any(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(format: Format, value: &Value, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("JSON serializes")
        ),
        Format::Text => print!("{}", text()),
    }
}

fn lines(pairs: &[(&str, String)]) -> String {
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<12} {v}\n"))
        .collect()
}

fn run(cli: Cli) -> Result<Outcome, String> {
    let format = cli.format;
    match cli.command {
        Command::Classify { graph, id } => {
            let g = read_graph(&graph)?;
            let id = id.unwrap_or_else(|| {
                graph
                    .file_stem()
                    .and_then(|s| s.to_str())
                    .unwrap_or("graph")
                    .to_string()
            });
            let report =
                ClassificationReport::build(&id, &g, cli.char).map_err(|e| e.to_string())?;
            emit(format, &report.to_json(), || report.to_text());
            Ok(if report.has_failures() {
                Outcome::Inconsistent
            } else {
                Outcome::Ok
            })
        }
        Command::Gkdim { graph } => {
            let gk = gk_dimension(&read_graph(&graph)?);
            emit(format, &gk.to_json(), || {
                lines(&[
                    ("gk", gk.value.to_string()),
                    ("d1", format!("{:?}", gk.d1)),
                    ("d2", format!("{:?}", gk.d2)),
                    ("disjoint", gk.disjoint_cycles.to_string()),
                    ("no_exit", gk.no_exit.to_string()),
                ])
            });
            Ok(Outcome::Ok)
        }
        Command::Lattice { graph, mode } => {
            let g = read_graph(&graph)?;
            let mode = match mode {
                Mode::Auto => LatticeMode::Auto,
                Mode::Exhaustive => LatticeMode::Exhaustive,
                Mode::Generated => LatticeMode::Generated,
            };
            let lattice = hsat_lattice(
                &g,
                &LatticeConfig {
                    mode,
                    ..LatticeConfig::from_env()
                },
            )
            .map_err(|e| e.to_string())?;
            emit(format, &lattice.to_json(&g), || {
                let mut out = String::new();
                for (i, s) in lattice.elements.iter().enumerate() {
                    let mark = if lattice.minimal.contains(&i) {
                        " (minimal)"
                    } else {
                        ""
                    };
                    out.push_str(&format!("{i}: {{{}}}{mark}\n", g.names_of(s).join(",")));
                }
                for (i, j) in &lattice.hasse {
                    out.push_str(&format!("{i} < {j}\n"));
                }
                out
            });
            Ok(Outcome::Ok)
        }
        Command::Series { graph } => {
            let g = read_graph(&graph)?;
            let series = composition_series(&g).map_err(|e| e.to_string())?;
            emit(format, &series.to_json(&g), || {
                let mut out = String::new();
                for (step, t) in series.chain.windows(2).zip(&series.types) {
                    out.push_str(&format!(
                        "{{{}}} < {{{}}}  {t}\n",
                        g.names_of(&step[0]).join(","),
                        g.names_of(&step[1]).join(",")
                    ));
                }
                out
            });
            Ok(Outcome::Ok)
        }
        Command::Balloon {
            graph,
            vertex,
            over,
        } => {
            let g = read_graph(&graph)?;
            let v = g.vertex(&vertex).map_err(|e| e.to_string())?;
            let names: Vec<&str> = over.iter().map(String::as_str).collect();
            let base = g.set_of(&names).map_err(|e| e.to_string())?;
            let by_definition = is_balloon(&g, v, &base).map_err(|e| e.to_string())?;
            let by_monoid = is_balloon_monoid(&g, v, &base).map_err(|e| e.to_string())?;
            let value = json!({
                "vertex": vertex,
                "over": g.names_of(&base),
                "balloon": by_definition,
                "balloon_monoid": by_monoid,
                "agree": by_definition == by_monoid,
            });
            emit(format, &value, || {
                lines(&[
                    ("balloon", by_definition.to_string()),
                    ("monoid", by_monoid.to_string()),
                ])
            });
            Ok(if by_definition == by_monoid {
                Outcome::Ok
            } else {
                Outcome::Inconsistent
            })
        }
        Command::Monoid {
            relation,
            graph,
            depth,
            a,
            b,
        } => {
            let g = read_graph(&graph)?;
            let x = MonoidElement::parse(&g, &a).map_err(|e| e.to_string())?;
            let y = MonoidElement::parse(&g, &b).map_err(|e| e.to_string())?;
            let (name, result) = match relation {
                Relation::Leq => ("leq", bounded_leq(&g, &x, &y, depth)),
                Relation::Eq => ("eq", bounded_equal(&g, &x, &y, depth)),
            };
            let value = json!({
                "relation": name,
                "a": x.display(&g),
                "b": y.display(&g),
                "depth": depth,
                "result": result.as_str(),
            });
            emit(format, &value, || format!("{result}\n"));
            Ok(Outcome::Ok)
        }
        Command::Corpus {
            action: CorpusAction::Run { dir },
        } => {
            let summary = run_corpus(&dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            emit(format, &summary.to_json(), || {
                let mut out = String::new();
                for c in &summary.cases {
                    let status = if c.passed { "pass" } else { "FAIL" };
                    let msg = c
                        .message
                        .as_deref()
                        .map(|m| format!(": {m}"))
                        .unwrap_or_default();
                    out.push_str(&format!("{status} {}{msg}\n", c.file));
                }
                out.push_str(&format!(
                    "{} passed, {} failed\n",
                    summary.passed(),
                    summary.failed()
                ));
                out
            });
            Ok(if summary.failed() == 0 {
                Outcome::Ok
            } else {
                Outcome::Inconsistent
            })
        }
        Command::Prop {
            n,
            seed,
            chars,
            max_vertices,
            max_edges,
            connected,
            out,
        } => {
            if n == 0 || max_vertices == 0 {
                return Err("--n and --max-vertices must be at least 1".into());
            }
            let spec = RandomGraphSpec {
                seed,
                max_vertices,
                max_edges,
                connected,
            };
            let report = property_suite(n, &spec, &chars, &CheckOptions::default());
            if let Some(dir) = &out {
                fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
                for f in &report.findings {
                    let body = format!("# {}\n# {}\n{}", f.check, f.detail, f.graph);
                    fs::write(dir.join(f.file_name()), body).map_err(|e| e.to_string())?;
                }
            }
            emit(format, &report.to_json(), || {
                let mut text = String::new();
                for (check, t) in &report.tally {
                    text.push_str(&format!(
                        "{check:<60} pass {:>5} fail {:>5} skipped {:>5}\n",
                        t.pass, t.fail, t.skipped
                    ));
                }
                text.push_str(&format!(
                    "{} graphs, {} findings\n",
                    report.graphs,
                    report.findings.len()
                ));
                text
            });
            Ok(if report.findings.is_empty() {
                Outcome::Ok
            } else {
                Outcome::Inconsistent
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Inconsistent) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
