//! The canonical example graphs and the golden-report corpus runner.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::Value;

use crate::graph::Graph;
use crate::linalg::FieldChar;
use crate::report::ClassificationReport;

pub const PT: &str = "vertex u\n";
pub const LOOP: &str = "vertex u\nedge c u u\n";
pub const TOEP: &str = "vertex u\nvertex w\nedge c u u\nedge f u w\n";
pub const TWO_CHAIN: &str = "vertex u\nvertex v\nedge a u u\nedge g u v\nedge b v v\n";
pub const TWO_CYCLE: &str = "vertex u\nvertex v\nedge e1 u v\nedge e2 v u\n";
pub const SINK_FAN: &str =
    "vertex v\nvertex w1\nvertex w2\nedge e1 v w1\nedge e2 v w2\nedge f w2 w2\n";
pub const BALLOON: &str = "vertex u\nvertex v\nedge p u u\nedge q u u\nedge C v v\nedge g v u\n";
pub const COMET3: &str =
    "vertex v1\nvertex v2\nvertex v3\nvertex t\nedge a v1 v2\nedge b v2 v3\nedge c v3 v1\nedge d t v1\n";
pub const TWO_SINK: &str = "vertex v\nvertex w1\nvertex w2\nedge e1 v w1\nedge e2 v w2\n";

fn parse(text: &str) -> Graph {
    Graph::parse(text).expect("canonical graph parses")
}

pub fn pt() -> Graph {
    parse(PT)
}

pub fn single_loop() -> Graph {
    parse(LOOP)
}

pub fn toep() -> Graph {
    parse(TOEP)
}

pub fn two_chain() -> Graph {
    parse(TWO_CHAIN)
}

pub fn two_cycle() -> Graph {
    parse(TWO_CYCLE)
}

pub fn sink_fan() -> Graph {
    parse(SINK_FAN)
}

pub fn balloon() -> Graph {
    parse(BALLOON)
}

pub fn comet3() -> Graph {
    parse(COMET3)
}

pub fn two_sink() -> Graph {
    parse(TWO_SINK)
}

/// One vertex `u` carrying `n` loops `p1..pn`.
pub fn rose(n: usize) -> Graph {
    let mut text = String::from("vertex u\n");
    for i in 1..=n {
        text.push_str(&format!("edge p{i} u u\n"));
    }
    parse(&text)
}

/// The named canonical graphs, as `(stem, graph)` pairs.
pub fn canonical() -> Vec<(&'static str, Graph)> {
    vec![
        ("G_pt", pt()),
        ("G_loop", single_loop()),
        ("G_toep", toep()),
        ("G_rose2", rose(2)),
        ("G_rose3", rose(3)),
        ("G_2chain", two_chain()),
        ("G_2cycle", two_cycle()),
        ("G_sinkfan", sink_fan()),
        ("G_balloon", balloon()),
        ("G_comet3", comet3()),
        ("G_2sink", two_sink()),
    ]
}

/// Golden file next to a graph file: `x.graph` pairs with `x.expected.json`.
pub fn golden_path(graph: &Path) -> PathBuf {
    let stem = graph
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or_default();
    graph.with_file_name(format!("{stem}.expected.json"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub file: String,
    pub passed: bool,
    pub message: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CorpusSummary {
    pub cases: Vec<CaseResult>,
}

impl CorpusSummary {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "total": self.cases.len(),
            "passed": self.passed(),
            "failed": self.failed(),
            "cases": self.cases.iter().map(|c| serde_json::json!({
                "file": c.file,
                "passed": c.passed,
                "message": c.message,
            })).collect::<Vec<_>>(),
        })
    }
}

fn run_case(graph_path: &Path) -> std::result::Result<(), String> {
    let text = fs::read_to_string(graph_path).map_err(|e| e.to_string())?;
    let g = Graph::parse_any(&text).map_err(|e| e.to_string())?;
    let golden_file = golden_path(graph_path);
    let golden_text = fs::read_to_string(&golden_file)
        .map_err(|e| format!("missing golden {}: {e}", golden_file.display()))?;
    let golden: Value =
        serde_json::from_str(&golden_text).map_err(|e| format!("bad golden JSON: {e}"))?;
    let p = golden
        .get("char")
        .and_then(Value::as_u64)
        .ok_or("golden report lacks `char`")
        .and_then(|p| FieldChar::new(p).map_err(|_| "golden `char` is not 0 or a prime"))?;
    let id = golden.get("id").and_then(Value::as_str).unwrap_or_default();
    let actual = ClassificationReport::build(id, &g, p)
        .map_err(|e| e.to_string())?
        .to_json();
    if actual == golden {
        Ok(())
    } else {
        Err(first_difference(&golden, &actual, "$"))
    }
}

fn first_difference(expected: &Value, actual: &Value, path: &str) -> String {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, ev) in e {
                match a.get(k) {
                    None => return format!("{path}.{k}: missing"),
                    Some(av) if av != ev => {
                        return first_difference(ev, av, &format!("{path}.{k}"))
                    }
                    _ => {}
                }
            }
            match a.keys().find(|k| !e.contains_key(*k)) {
                Some(k) => format!("{path}.{k}: unexpected"),
                None => format!("{path}: differs"),
            }
        }
        _ => format!("{path}: expected {expected}, got {actual}"),
    }
}

/// Classifies every `*.graph` and `*.json` graph file in `dir` (golden files
/// excluded) and compares it structurally with its golden report.
pub fn run_corpus(dir: &Path) -> std::io::Result<CorpusSummary> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            let name = p.file_name().and_then(|n| n.to_str()).unwrap_or_default();
            p.is_file()
                && !name.ends_with(".expected.json")
                && (name.ends_with(".graph") || name.ends_with(".json"))
        })
        .collect();
    files.sort();
    let cases = files
        .par_iter()
        .map(|f| {
            let file = f
                .file_name()
                .and_then(|n| n.to_str())
                .unwrap_or_default()
                .to_string();
            match run_case(f) {
                Ok(()) => CaseResult {
                    file,
                    passed: true,
                    message: None,
                },
                Err(m) => CaseResult {
                    file,
                    passed: false,
                    message: Some(m),
                },
            }
        })
        .collect();
    Ok(CorpusSummary { cases })
}
