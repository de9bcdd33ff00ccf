//! Acceptance criteria, one printed line each.
//!
//! Runs without the libtest harness so every criterion reports even when an
//! earlier one fails. The process fails if any criterion fails, except the
//! ones listed in `BLOCKED`, which must fail for the recorded reason.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use leavitt::closure::{brute_force_lattice, generated_lattice, order_ideal_vertices};
use leavitt::corpus::{self, run_corpus};
use leavitt::cycles::{enumerate_cycles, gk_dimension, is_no_exit};
use leavitt::lie::{cross_check_simplicity, is_lie_simple, one_in_commutator};
use leavitt::monoid::{
    bounded_in_order_ideal, composition_series, series_lengths, MonoidElement, QuotientType,
    TriState,
};
use leavitt::random::{random_graph, RandomGraphSpec};
use leavitt::suite::{property_suite, CheckOptions, SuiteReport};
use leavitt::{FieldChar, GkValue, Graph};

const SAMPLE_SIZE: u64 = 1000;
const SAMPLE_SEED: u64 = 20_240_601;
const LATTICE_SAMPLE: u64 = 500;
const GK_TIME_LIMIT: Duration = Duration::from_millis(10);
const SUITE_TIME_LIMIT: Duration = Duration::from_secs(300);
const MONOID_DEPTH: u32 = 10;
const EXACT_LIMIT: usize = 6;

/// Criteria that cannot pass as stated, with the sub-check that blocks them.
/// The char-2 monoid form of Lie solvability accepts graphs such as
/// `x -> w <- y`, whose algebra is M_3(K) and is not Lie solvable.
const BLOCKED: &[(u32, &str)] = &[(2, "lie-solvable-graph-vs-monoid@char2")];

fn chars() -> Vec<FieldChar> {
    [0, 2, 3]
        .into_iter()
        .map(|p| FieldChar::new(p).unwrap())
        .collect()
}

fn fc(p: u64) -> FieldChar {
    FieldChar::new(p).unwrap()
}

struct Verdict {
    passed: bool,
    detail: String,
    failing: Vec<String>,
}

impl Verdict {
    fn from_failures(failing: Vec<String>, summary: String) -> Verdict {
        Verdict {
            passed: failing.is_empty(),
            detail: summary,
            failing,
        }
    }
}

fn check(failing: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failing.push(what.into());
    }
}

fn criterion_1() -> Verdict {
    let cases: [(&str, Graph, GkValue); 6] = [
        ("G_pt", corpus::pt(), GkValue::Finite(0)),
        ("G_2sink", corpus::two_sink(), GkValue::Finite(0)),
        ("G_loop", corpus::single_loop(), GkValue::Finite(1)),
        ("G_toep", corpus::toep(), GkValue::Finite(2)),
        ("G_2chain", corpus::two_chain(), GkValue::Finite(3)),
        ("G_rose2", corpus::rose(2), GkValue::Infinite),
    ];
    let mut failing = Vec::new();
    let mut slowest = Duration::ZERO;
    for (name, g, expected) in &cases {
        let start = Instant::now();
        let gk = gk_dimension(g);
        let took = start.elapsed();
        slowest = slowest.max(took);
        check(
            &mut failing,
            gk.value == *expected,
            format!("{name}: gk {} expected {expected}", gk.value),
        );
        check(
            &mut failing,
            took < GK_TIME_LIMIT,
            format!("{name}: {took:?}"),
        );
        // No-exit graphs have GK-dimension at most 1.
        check(
            &mut failing,
            !is_no_exit(g) || gk.value.at_most(1),
            format!("{name}: no-exit but gk {}", gk.value),
        );
    }
    Verdict::from_failures(failing, format!("6 graphs, slowest {slowest:?}"))
}

const CRITERION_2_CHECKS: &[&str] = &[
    "lie-solvable-graph-vs-monoid",
    "no-exit-iff-gk-at-most-1",
    "singleton-ideals-iff-no-edges-between-distinct-vertices",
    "loops-and-points-iff-gk-and-singleton-ideals",
    "nilpotent-graph-vs-monoid",
    "balloon-graph-vs-monoid",
    "disjoint-cycles-iff-tame-series-iff-finite-gk",
    "cyclic-series-iff-disjoint-cycles-without-sinks",
];

fn check_base(key: &str) -> &str {
    key.split('@').next().unwrap_or(key)
}

fn criterion_2(report: &SuiteReport, took: Duration) -> Verdict {
    let mut failing = Vec::new();
    for (key, t) in &report.tally {
        if CRITERION_2_CHECKS.contains(&check_base(key)) && t.fail > 0 {
            failing.push(key.clone());
        }
    }
    for name in CRITERION_2_CHECKS {
        let ran = report
            .tally
            .iter()
            .any(|(k, t)| check_base(k) == *name && t.pass + t.fail > 0);
        check(&mut failing, ran, format!("{name} never ran"));
    }
    check(
        &mut failing,
        took <= SUITE_TIME_LIMIT,
        format!("runtime {took:?}"),
    );
    let counts: Vec<String> = report
        .tally
        .iter()
        .filter(|(k, t)| CRITERION_2_CHECKS.contains(&check_base(k)) && t.fail > 0)
        .map(|(k, t)| format!("{k}: {} of {}", t.fail, t.pass + t.fail))
        .collect();
    let summary = format!(
        "{} graphs, chars 0,2,3, {took:.1?}; counterexamples [{}]",
        report.graphs,
        counts.join(", ")
    );
    Verdict::from_failures(failing, summary)
}

fn criterion_3() -> Verdict {
    let spec = RandomGraphSpec {
        seed: SAMPLE_SEED ^ 3,
        max_vertices: 10,
        max_edges: 16,
        connected: false,
    };
    let mut failing = Vec::new();
    for i in 0..LATTICE_SAMPLE {
        let g = random_graph(&spec.nth(i));
        let brute: BTreeSet<_> = brute_force_lattice(&g).elements.into_iter().collect();
        let generated: BTreeSet<_> = generated_lattice(&g).elements.into_iter().collect();
        check(&mut failing, brute == generated, format!("graph {i}"));
    }
    Verdict::from_failures(
        failing,
        format!("{LATTICE_SAMPLE} graphs with up to 10 vertices"),
    )
}

/// Sinks counted directly against minimal nonempty lattice elements whose
/// restriction has no cycle.
fn sink_mismatch(g: &Graph) -> Option<String> {
    let lattice = brute_force_lattice(g);
    let acyclic_minimal = lattice
        .minimal
        .iter()
        .filter(|&&i| enumerate_cycles(&g.restriction(&lattice.elements[i]).unwrap()).is_empty())
        .count();
    let sinks = (0..g.vertex_count()).filter(|&v| g.is_sink(v)).count();
    (sinks != acyclic_minimal)
        .then(|| format!("{sinks} sinks, {acyclic_minimal} acyclic minimal sets"))
}

fn corpus_graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = corpus::canonical()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    for f in files
        .into_iter()
        .filter(|f| f.extension().is_some_and(|e| e == "graph"))
    {
        let g = Graph::parse_any(&std::fs::read_to_string(&f).unwrap()).unwrap();
        out.push((f.file_name().unwrap().to_string_lossy().into_owned(), g));
    }
    out
}

fn criterion_4(report: &SuiteReport) -> Verdict {
    let mut failing = Vec::new();
    let graphs = corpus_graphs();
    for (name, g) in &graphs {
        if let Some(m) = sink_mismatch(g) {
            failing.push(format!("{name}: {m}"));
        }
    }
    let t = report
        .tally
        .get("sinks-match-acyclic-minimal-ideals")
        .copied()
        .unwrap_or_default();
    check(
        &mut failing,
        t.fail == 0 && t.pass as u64 == report.graphs,
        format!("random sample: {} failures", t.fail),
    );
    Verdict::from_failures(
        failing,
        format!(
            "{} corpus graphs, {} random graphs",
            graphs.len(),
            t.pass + t.fail
        ),
    )
}

fn criterion_5() -> Verdict {
    let mut failing = Vec::new();
    let mut correct = 0;
    for n in 2u64..=6 {
        for p in [0u64, 2, 3, 5] {
            // The only relation vector is (1 - n) δ_u, so δ_u is in its span
            // exactly when 1 - n is invertible in the prime field.
            let expected = if p == 0 { n != 1 } else { (n - 1) % p != 0 };
            let got = one_in_commutator(&corpus::rose(n as usize), fc(p));
            if got == expected {
                correct += 1;
            } else {
                failing.push(format!("rose({n}) char {p}: got {got}"));
            }
        }
    }
    Verdict::from_failures(failing, format!("{correct}/20 correct"))
}

fn criterion_6() -> Verdict {
    let mut failing = Vec::new();
    let mut expect = |name: &str, g: &Graph, p: u64, want: bool| match is_lie_simple(g, fc(p)) {
        Ok(v) => check(
            &mut failing,
            v.verdict == want,
            format!("{name} char {p}: got {}", v.verdict),
        ),
        Err(e) => failing.push(format!("{name} char {p}: {e}")),
    };
    expect("G_rose3", &corpus::rose(3), 2, true);
    expect("G_rose2", &corpus::rose(2), 0, false);
    for p in [0, 2, 3] {
        expect("G_balloon", &corpus::balloon(), p, true);
    }
    for p in [0, 2, 3, 5, 7] {
        expect("G_loop", &corpus::single_loop(), p, false);
    }
    Verdict::from_failures(failing, "10 verdicts".to_string())
}

fn criterion_7(report: &SuiteReport) -> Verdict {
    let mut failing = Vec::new();
    let mut checked = 0;
    let mut skipped = 0;
    for (key, t) in report
        .tally
        .iter()
        .filter(|(k, _)| check_base(k) == "simplicity-implications")
    {
        checked += t.pass + t.fail;
        skipped += t.skipped;
        check(
            &mut failing,
            t.fail == 0,
            format!("{key}: {} violations", t.fail),
        );
    }
    for (name, g) in corpus_graphs() {
        for p in chars() {
            match cross_check_simplicity(&g, p) {
                Ok(r) => check(
                    &mut failing,
                    r.passed(),
                    format!("{name} char {p}: {:?}", r.violations),
                ),
                Err(e) => failing.push(format!("{name} char {p}: {e}")),
            }
        }
    }
    check(&mut failing, checked > 0, "no graph was checked");
    Verdict::from_failures(
        failing,
        format!("{checked} checked, {skipped} skipped (zero commutator or disconnected)"),
    )
}

fn criterion_8() -> Verdict {
    let mut failing = Vec::new();
    let mut pairs = 0;
    let graphs = corpus_graphs();
    for (name, g) in &graphs {
        let n = g.vertex_count();
        for v in 0..n {
            let ideal = order_ideal_vertices(g, v);
            for u in 0..n {
                pairs += 1;
                let found =
                    bounded_in_order_ideal(g, &MonoidElement::generator(u, 0), v, MONOID_DEPTH);
                let member = ideal.contains(u);
                check(
                    &mut failing,
                    found != TriState::True || member,
                    format!("{name}: {u} <= {v} contradicts closure"),
                );
                if n <= EXACT_LIMIT {
                    check(
                        &mut failing,
                        (found == TriState::True) == member,
                        format!("{name}: {u} in <{v}>: {found} vs {member}"),
                    );
                }
            }
        }
    }
    Verdict::from_failures(
        failing,
        format!(
            "{} graphs, {pairs} vertex pairs at depth {MONOID_DEPTH}",
            graphs.len()
        ),
    )
}

fn criterion_9(report: &SuiteReport) -> Verdict {
    use QuotientType::*;
    let mut failing = Vec::new();
    let types = |g: &Graph| composition_series(g).unwrap().types;
    check(
        &mut failing,
        types(&corpus::two_chain()) == [Cyclic, Cyclic],
        "G_2chain tags",
    );
    let toep = types(&corpus::toep());
    check(
        &mut failing,
        toep.len() == 2 && toep.contains(&NonComparable) && toep.contains(&Cyclic),
        format!("G_toep tags {toep:?}"),
    );
    check(
        &mut failing,
        types(&corpus::rose(2)) == [Comparable],
        "G_rose2 tags",
    );
    for (name, g) in corpus_graphs() {
        let lengths = series_lengths(&g).unwrap();
        check(
            &mut failing,
            lengths.len() == 1,
            format!("{name}: lengths {lengths:?}"),
        );
    }
    let t = report
        .tally
        .get("series-length-invariant")
        .copied()
        .unwrap_or_default();
    check(
        &mut failing,
        t.fail == 0,
        format!("random sample: {} graphs with several lengths", t.fail),
    );
    Verdict::from_failures(
        failing,
        format!(
            "order-invariant on {} random graphs with <= 6 vertices",
            t.pass
        ),
    )
}

fn run_twice(args: &[&str]) -> (Vec<u8>, Vec<u8>) {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_leavitt"))
            .args(args)
            .output()
            .unwrap()
            .stdout
    };
    (run(), run())
}

fn criterion_10() -> Verdict {
    let mut failing = Vec::new();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    for file in ["G_balloon.graph", "G_sinkfan.graph", "G_rose3.graph"] {
        let path = dir.join(file);
        let path = path.to_str().unwrap();
        for p in ["0", "2"] {
            let (a, b) = run_twice(&["--char", p, "classify", path]);
            check(
                &mut failing,
                !a.is_empty() && a == b,
                format!("classify {file} char {p}"),
            );
        }
    }
    let (a, b) = run_twice(&["prop", "--n", "200", "--seed", "17", "--chars", "0,2,3"]);
    check(
        &mut failing,
        !a.is_empty() && a == b,
        "prop --n 200 --seed 17",
    );
    Verdict::from_failures(failing, "classify x6, prop x1, each run twice".to_string())
}

fn main() {
    let start = Instant::now();
    let report = property_suite(
        SAMPLE_SIZE,
        &RandomGraphSpec {
            seed: SAMPLE_SEED,
            max_vertices: 8,
            max_edges: 16,
            connected: false,
        },
        &chars(),
        &CheckOptions::default(),
    );
    let suite_time = start.elapsed();

    let summary = run_corpus(&Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")).unwrap();
    assert_eq!(
        summary.failed(),
        0,
        "shipped corpus has mismatches: {:?}",
        summary.cases
    );

    let verdicts = [
        (1, "GK-dimension values", criterion_1()),
        (
            2,
            "paired-theorem equivalences",
            criterion_2(&report, suite_time),
        ),
        (3, "lattice oracle", criterion_3()),
        (4, "sink correspondence", criterion_4(&report)),
        (5, "commutator membership", criterion_5()),
        (6, "Lie simplicity end-to-end", criterion_6()),
        (7, "simplicity cross-checks", criterion_7(&report)),
        (8, "monoid oracle containment", criterion_8()),
        (9, "composition series", criterion_9(&report)),
        (10, "determinism", criterion_10()),
    ];

    let mut unexpected = Vec::new();
    for (id, title, v) in &verdicts {
        let blocked: Vec<&str> = BLOCKED
            .iter()
            .filter(|(b, _)| b == id)
            .map(|(_, s)| *s)
            .collect();
        let status = if v.passed { "PASS" } else { "FAIL" };
        let note = if !v.passed && !blocked.is_empty() {
            " (known blocked)"
        } else {
            ""
        };
        println!("criterion {id:>2}: {status}{note} {title}: {}", v.detail);
        for f in &v.failing {
            println!("    {f}");
        }
        if blocked.is_empty() {
            if !v.passed {
                unexpected.push(format!("criterion {id} failed"));
            }
        } else {
            let explained = !v.passed && v.failing.iter().all(|f| blocked.contains(&f.as_str()));
            if !explained {
                unexpected.push(format!(
                    "criterion {id} no longer fails only on {blocked:?}"
                ));
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("{}", unexpected.join("\n"));
        std::process::exit(1);
    }
}
