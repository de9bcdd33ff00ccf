//! Cross-checks between independently computed characterizations, run per
//! graph and over seeded random samples.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::json;

use crate::closure::{brute_force_lattice, generated_sets_with, hsat_closure};
use crate::cycles::{
    enumerate_cycles, gk_dimension, has_disjoint_cycles, is_disjoint_vertices_and_loops, is_no_exit,
};
use crate::graph::Graph;
use crate::lie::{
    commutator_zero, cross_check_simplicity, is_balloon, is_balloon_monoid, is_lie_nilpotent,
    is_lie_solvable, is_lie_solvable_monoid,
};
use crate::linalg::FieldChar;
use crate::monoid::{
    bounded_in_order_ideal, composition_series, series_lengths, MonoidElement, QuotientType,
    TriState,
};
use crate::random::{random_graph, RandomGraphSpec};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// Characteristic the check ran at, for characteristic-dependent checks.
    pub char: Option<FieldChar>,
    pub status: CheckStatus,
    pub detail: Option<String>,
}

impl CheckOutcome {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "check": self.name,
            "char": self.char.map(FieldChar::value),
            "status": self.status.as_str(),
            "detail": self.detail,
        })
    }
}

/// Knobs for [`graph_checks`].
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    /// Closure operator used for the singleton ideals and the generated
    /// lattice; replaced only to confirm that a broken closure is caught.
    pub closure: fn(&Graph, &VertexSet) -> VertexSet,
    /// Rewriting depth for the bounded monoid order check.
    pub monoid_depth: u32,
    /// Largest graph for the exhaustive-versus-generated lattice check.
    pub lattice_limit: usize,
    /// Largest graph for the balloon, series-invariance and exact monoid checks.
    pub small_limit: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            closure: hsat_closure,
            monoid_depth: 10,
            lattice_limit: 10,
            small_limit: 6,
        }
    }
}

struct Checks {
    out: Vec<CheckOutcome>,
}

impl Checks {
    fn push(
        &mut self,
        name: &'static str,
        char: Option<FieldChar>,
        ok: bool,
        detail: impl FnOnce() -> String,
    ) {
        let (status, detail) = if ok {
            (CheckStatus::Pass, None)
        } else {
            (CheckStatus::Fail, Some(detail()))
        };
        self.out.push(CheckOutcome {
            name,
            char,
            status,
            detail,
        });
    }

    fn skip(&mut self, name: &'static str, char: Option<FieldChar>, why: &str) {
        self.out.push(CheckOutcome {
            name,
            char,
            status: CheckStatus::Skipped,
            detail: Some(why.to_string()),
        });
    }
}

/// Runs every cross-check on one nonempty graph.
pub fn graph_checks(g: &Graph, chars: &[FieldChar], opts: &CheckOptions) -> Vec<CheckOutcome> {
    let mut c = Checks { out: Vec::new() };
    let n = g.vertex_count();
    if n == 0 {
        return c.out;
    }
    let gk = gk_dimension(g);
    let gk_le_1 = gk.value.at_most(1);
    let no_exit = is_no_exit(g);
    let disjoint = has_disjoint_cycles(g);
    let ideals: Vec<VertexSet> = (0..n)
        .map(|v| (opts.closure)(g, &VertexSet::singleton(n, v)))
        .collect();
    let singletons = ideals.iter().all(|i| i.len() == 1);
    let loops_and_points = is_disjoint_vertices_and_loops(g);

    c.push("no-exit-iff-gk-at-most-1", None, no_exit == gk_le_1, || {
        format!("no-exit {no_exit}, gk {}", gk.value)
    });
    c.push(
        "gk-shape",
        None,
        gk.value.is_finite() == disjoint && (!no_exit || disjoint) && gk.d2 <= gk.d1,
        || {
            format!(
                "gk {}, disjoint cycles {disjoint}, no-exit {no_exit}, d1 {:?}, d2 {:?}",
                gk.value, gk.d1, gk.d2
            )
        },
    );

    let no_cross_edges = g.edges().iter().all(|e| e.src == e.dst);
    c.push(
        "singleton-ideals-iff-no-edges-between-distinct-vertices",
        None,
        singletons == no_cross_edges,
        || format!("singleton ideals {singletons}, only loops {no_cross_edges}"),
    );
    c.push(
        "loops-and-points-iff-gk-and-singleton-ideals",
        None,
        loops_and_points == (gk_le_1 && singletons),
        || {
            format!(
                "loops and points {loops_and_points}, gk {}, singleton ideals {singletons}",
                gk.value
            )
        },
    );
    match is_lie_nilpotent(g) {
        Ok(_) => c.push("nilpotent-graph-vs-monoid", None, true, String::new),
        Err(e) => c.push("nilpotent-graph-vs-monoid", None, false, || e.to_string()),
    }

    for &p in chars {
        let graph_route = is_lie_solvable(g, p);
        match is_lie_solvable_monoid(g, p) {
            Ok(monoid_route) => c.push(
                "lie-solvable-graph-vs-monoid",
                Some(p),
                graph_route.verdict == monoid_route.verdict,
                || {
                    format!(
                        "graph route {} ({}, {:?}), monoid route {} ({}, {:?})",
                        graph_route.verdict,
                        graph_route.branch,
                        graph_route.witnesses,
                        monoid_route.verdict,
                        monoid_route.branch,
                        monoid_route.witnesses
                    )
                },
            ),
            Err(e) => c.push("lie-solvable-graph-vs-monoid", Some(p), false, || {
                e.to_string()
            }),
        }
        let solvable = graph_route.verdict;
        c.push(
            "solvable-implies-gk-at-most-1",
            Some(p),
            !solvable || gk_le_1,
            || format!("gk {}", gk.value),
        );
        c.push(
            "nilpotent-implies-solvable",
            Some(p),
            !loops_and_points || solvable,
            || "nilpotent but not solvable".to_string(),
        );
        if p != FieldChar::TWO {
            let zero = commutator_zero(g);
            c.push("odd-char-solvable-iff-commutator-zero", Some(p), solvable == zero && zero == (gk_le_1 && singletons), || {
                format!("solvable {solvable}, commutator zero {zero}, gk {}, singleton ideals {singletons}", gk.value)
            });
        }
        match cross_check_simplicity(g, p) {
            Ok(r) if r.skipped.is_some() => c.skip(
                "simplicity-implications",
                Some(p),
                r.skipped.unwrap_or_default(),
            ),
            Ok(r) => c.push("simplicity-implications", Some(p), r.passed(), || {
                r.violations.join("; ")
            }),
            Err(e) => c.push("simplicity-implications", Some(p), false, || e.to_string()),
        }
    }

    match composition_series(g) {
        Ok(series) => {
            let tame = series.types.iter().all(|t| *t != QuotientType::Comparable);
            c.push(
                "disjoint-cycles-iff-tame-series-iff-finite-gk",
                None,
                disjoint == tame && tame == gk.value.is_finite(),
                || {
                    format!(
                        "disjoint cycles {disjoint}, series types {:?}, gk {}",
                        series.types, gk.value
                    )
                },
            );
            let all_cyclic = series.types.iter().all(|t| *t == QuotientType::Cyclic);
            let no_sinks = (0..n).all(|v| !g.is_sink(v));
            c.push(
                "cyclic-series-iff-disjoint-cycles-without-sinks",
                None,
                all_cyclic == (disjoint && no_sinks),
                || {
                    format!(
                        "series types {:?}, disjoint cycles {disjoint}, sinks absent {no_sinks}",
                        series.types
                    )
                },
            );
        }
        Err(e) => c.push(
            "disjoint-cycles-iff-tame-series-iff-finite-gk",
            None,
            false,
            || e.to_string(),
        ),
    }

    let sinks = (0..n).filter(|&v| g.is_sink(v)).count();
    let minimal: Vec<&VertexSet> = ideals
        .iter()
        .filter(|i| ideals.iter().all(|j| j == *i || !j.is_subset(i)))
        .collect();
    let mut acyclic_minimal: Vec<&VertexSet> = minimal
        .into_iter()
        .filter(|m| {
            g.restriction(m)
                .map(|r| enumerate_cycles(&r).is_empty())
                .unwrap_or(false)
        })
        .collect();
    acyclic_minimal.sort();
    acyclic_minimal.dedup();
    c.push(
        "sinks-match-acyclic-minimal-ideals",
        None,
        sinks == acyclic_minimal.len(),
        || {
            format!(
                "{sinks} sinks, {} acyclic minimal ideals",
                acyclic_minimal.len()
            )
        },
    );

    if n <= opts.lattice_limit {
        let brute: std::collections::BTreeSet<VertexSet> =
            brute_force_lattice(g).elements.into_iter().collect();
        let generated = generated_sets_with(g, opts.closure);
        c.push(
            "lattice-exhaustive-vs-generated",
            None,
            brute == generated,
            || {
                let missing: Vec<_> = brute
                    .difference(&generated)
                    .map(|s| g.names_of(s))
                    .collect();
                let extra: Vec<_> = generated
                    .difference(&brute)
                    .map(|s| g.names_of(s))
                    .collect();
                format!("missing {missing:?}, extra {extra:?}")
            },
        );
    } else {
        c.skip("lattice-exhaustive-vs-generated", None, "above size limit");
    }

    let connected = g.is_connected().unwrap_or(false);
    if n <= opts.small_limit && connected && n >= 2 {
        let mut bad = Vec::new();
        for v in 0..n {
            let others: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            for mask in 1u64..(1 << others.len()) {
                let base = VertexSet::from_indices(
                    n,
                    (0..others.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| others[i]),
                );
                let a = is_balloon(g, v, &base);
                let b = is_balloon_monoid(g, v, &base);
                if a != b {
                    bad.push(format!(
                        "{} over {:?}: {a:?} vs {b:?}",
                        g.vertex_name(v),
                        g.names_of(&base)
                    ));
                }
            }
        }
        c.push("balloon-graph-vs-monoid", None, bad.is_empty(), || {
            bad.join("; ")
        });
    } else {
        c.skip(
            "balloon-graph-vs-monoid",
            None,
            "needs a connected graph with 2 to small-limit vertices",
        );
    }

    if n <= opts.small_limit {
        match series_lengths(g) {
            Ok(lengths) => c.push("series-length-invariant", None, lengths.len() == 1, || {
                format!("lengths {lengths:?}")
            }),
            Err(e) => c.push("series-length-invariant", None, false, || e.to_string()),
        }
    } else {
        c.skip("series-length-invariant", None, "above size limit");
    }

    let mut wrong = Vec::new();
    for v in 0..n {
        let closure = hsat_closure(g, &VertexSet::singleton(n, v));
        for u in 0..n {
            let found =
                bounded_in_order_ideal(g, &MonoidElement::generator(u, 0), v, opts.monoid_depth);
            let sound = found != TriState::True || closure.contains(u);
            let exact = n > opts.small_limit || (found == TriState::True) == closure.contains(u);
            if !(sound && exact) {
                wrong.push(format!(
                    "{} in ideal of {}: search {found}, closure {}",
                    g.vertex_name(u),
                    g.vertex_name(v),
                    closure.contains(u)
                ));
            }
        }
    }
    c.push("monoid-order-vs-closure", None, wrong.is_empty(), || {
        wrong.join("; ")
    });
    c.out
}

/// A failed check on one sampled graph, with the graph itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub index: u64,
    pub check: &'static str,
    pub char: Option<FieldChar>,
    pub detail: String,
    pub graph: String,
}

impl Finding {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "index": self.index,
            "check": self.check,
            "char": self.char.map(FieldChar::value),
            "detail": self.detail,
            "graph": self.graph,
        })
    }

    /// File name for the emitted counterexample graph.
    pub fn file_name(&self) -> String {
        match self.char {
            Some(p) => format!("{:05}-{}-char{}.graph", self.index, self.check, p),
            None => format!("{:05}-{}.graph", self.index, self.check),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub graphs: u64,
    pub seed: u64,
    pub chars: Vec<FieldChar>,
    pub tally: BTreeMap<String, CheckTally>,
    pub findings: Vec<Finding>,
}

impl SuiteReport {
    /// Findings for one check, optionally restricted to one characteristic.
    pub fn findings_for(&self, check: &str, char: Option<FieldChar>) -> Vec<&Finding> {
        self.findings
            .iter()
            .filter(|f| f.check == check && (char.is_none() || f.char == char))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "graphs": self.graphs,
            "seed": self.seed,
            "chars": self.chars.iter().map(|p| p.value()).collect::<Vec<_>>(),
            "checks": self.tally.iter().map(|(k, t)| (k.clone(), json!({"pass": t.pass, "fail": t.fail, "skipped": t.skipped}))).collect::<serde_json::Map<_, _>>(),
            "findings": self.findings.iter().map(Finding::to_json).collect::<Vec<_>>(),
        })
    }
}

fn tally_key(o: &CheckOutcome) -> String {
    match o.char {
        Some(p) => format!("{}@char{}", o.name, p),
        None => o.name.to_string(),
    }
}

/// Runs [`graph_checks`] over `n` random graphs drawn from `spec`. Odd-indexed
/// graphs are forced connected so the connectivity-dependent checks get
/// coverage. Results are merged in index order.
pub fn property_suite(
    n: u64,
    spec: &RandomGraphSpec,
    chars: &[FieldChar],
    opts: &CheckOptions,
) -> SuiteReport {
    let per_graph: Vec<(u64, Graph, Vec<CheckOutcome>)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let s = RandomGraphSpec {
                connected: spec.connected || i % 2 == 1,
                ..spec.nth(i)
            };
            let g = random_graph(&s);
            let outcomes = graph_checks(&g, chars, opts);
            (i, g, outcomes)
        })
        .collect();
    let mut tally: BTreeMap<String, CheckTally> = BTreeMap::new();
    let mut findings = Vec::new();
    for (i, g, outcomes) in per_graph {
        for o in outcomes {
            let t = tally.entry(tally_key(&o)).or_default();
            match o.status {
                CheckStatus::Pass => t.pass += 1,
                CheckStatus::Skipped => t.skipped += 1,
                CheckStatus::Fail => {
                    t.fail += 1;
                    findings.push(Finding {
                        index: i,
                        check: o.name,
                        char: o.char,
                        detail: o.detail.unwrap_or_default(),
                        graph: g.to_text(),
                    });
                }
            }
        }
    }
    SuiteReport {
        graphs: n,
        seed: spec.seed,
        chars: chars.to_vec(),
        tally,
        findings,
    }
}
