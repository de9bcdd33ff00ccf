//! The full classification of one graph at one characteristic.

use serde_json::{json, Map, Value};

use crate::cycles::{gk_dimension, GkDimension};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lie::{
    commutator_zero, is_graded_simple, is_lie_nilpotent, is_lie_simple, is_lie_solvable,
    is_lie_solvable_monoid, is_simple_lpa, one_in_commutator, LieSimpleVerdict, LieVerdict,
};
use crate::linalg::FieldChar;
use crate::monoid::{composition_series, CompositionSeries};
use crate::suite::{graph_checks, CheckOptions, CheckOutcome, CheckStatus};

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub id: String,
    pub char: FieldChar,
    pub graph: Graph,
    pub simple: LieVerdict,
    pub graded_simple: bool,
    pub lie_solvable: LieVerdict,
    pub lie_solvable_monoid: LieVerdict,
    pub lie_nilpotent: Result<LieVerdict>,
    pub commutator_zero: bool,
    pub one_in_commutator: bool,
    pub lie_simple: Result<LieSimpleVerdict>,
    pub gk: GkDimension,
    pub series: CompositionSeries,
    pub consistency: Vec<CheckOutcome>,
}

impl ClassificationReport {
    /// Classifies a nonempty graph.
    pub fn build(id: &str, g: &Graph, p: FieldChar) -> Result<ClassificationReport> {
        if g.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(ClassificationReport {
            id: id.to_string(),
            char: p,
            graph: g.clone(),
            simple: is_simple_lpa(g)?,
            graded_simple: is_graded_simple(g)?,
            lie_solvable: is_lie_solvable(g, p),
            lie_solvable_monoid: is_lie_solvable_monoid(g, p)?,
            lie_nilpotent: is_lie_nilpotent(g),
            commutator_zero: commutator_zero(g),
            one_in_commutator: one_in_commutator(g, p),
            lie_simple: is_lie_simple(g, p),
            gk: gk_dimension(g),
            series: composition_series(g)?,
            consistency: graph_checks(g, &[p], &CheckOptions::default()),
        })
    }

    /// Whether some consistency check failed.
    pub fn has_failures(&self) -> bool {
        self.consistency
            .iter()
            .any(|c| c.status == CheckStatus::Fail)
    }

    pub fn to_json(&self) -> Value {
        let g = &self.graph;
        let lie_simple = match &self.lie_simple {
            Ok(v) => v.to_json(g),
            Err(e) => json!({ "verdict": Value::Null, "error": e.to_string() }),
        };
        let nilpotent = match &self.lie_nilpotent {
            Ok(v) => json!(v.verdict),
            Err(_) => Value::Null,
        };
        let mut details = Map::new();
        let mut detail = |key: &str, operation: &str, branch: &str, witnesses: &[String]| {
            details.insert(
                key.to_string(),
                json!({ "operation": operation, "branch": branch, "witnesses": witnesses }),
            );
        };
        detail(
            "simple",
            "is_simple_lpa",
            self.simple.branch,
            &self.simple.witnesses,
        );
        detail(
            "graded_simple",
            "is_graded_simple",
            "talented-monoid-simple",
            &[],
        );
        detail(
            "lie_solvable",
            "is_lie_solvable",
            self.lie_solvable.branch,
            &self.lie_solvable.witnesses,
        );
        detail(
            "lie_solvable_monoid",
            "is_lie_solvable_monoid",
            self.lie_solvable_monoid.branch,
            &self.lie_solvable_monoid.witnesses,
        );
        match &self.lie_nilpotent {
            Ok(v) => detail("lie_nilpotent", "is_lie_nilpotent", v.branch, &v.witnesses),
            Err(e) => detail(
                "lie_nilpotent",
                "is_lie_nilpotent",
                "inconsistent",
                &[e.to_string()],
            ),
        }
        detail(
            "commutator_zero",
            "commutator_zero",
            "isolated-vertices-and-loops",
            &[],
        );
        detail(
            "one_in_commutator",
            "one_in_commutator",
            "relation-span",
            &[],
        );
        match &self.lie_simple {
            Ok(v) => detail("lie_simple", "is_lie_simple", v.branch.as_str(), &[]),
            Err(e) => detail(
                "lie_simple",
                "is_lie_simple",
                "not-applicable",
                &[e.to_string()],
            ),
        }
        detail("gk", "gk_dimension", "cycle-chains", &[]);
        detail(
            "series_types",
            "composition_series",
            "least-minimal-ideal-first",
            &[],
        );
        json!({
            "id": self.id,
            "char": self.char.value(),
            "simple": self.simple.verdict,
            "graded_simple": self.graded_simple,
            "lie_solvable": self.lie_solvable.verdict,
            "lie_solvable_monoid": self.lie_solvable_monoid.verdict,
            "lie_nilpotent": nilpotent,
            "commutator_zero": self.commutator_zero,
            "one_in_commutator": self.one_in_commutator,
            "lie_simple": lie_simple,
            "gk": self.gk.value.to_json(),
            "gk_details": self.gk.to_json(),
            "series": self.series.to_json(g),
            "series_types": self.series.types.iter().map(|t| t.as_str()).collect::<Vec<_>>(),
            "consistency": self.consistency.iter().map(CheckOutcome::to_json).collect::<Vec<_>>(),
            "details": details,
        })
    }

    pub fn to_text(&self) -> String {
        let g = &self.graph;
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<20} {v}\n"));
        line("id", self.id.clone());
        line("char", self.char.to_string());
        line(
            "simple",
            format!("{} ({})", self.simple.verdict, self.simple.branch),
        );
        line("graded_simple", self.graded_simple.to_string());
        line(
            "lie_solvable",
            format!(
                "{} ({})",
                self.lie_solvable.verdict, self.lie_solvable.branch
            ),
        );
        line(
            "lie_solvable_monoid",
            format!(
                "{} ({})",
                self.lie_solvable_monoid.verdict, self.lie_solvable_monoid.branch
            ),
        );
        line(
            "lie_nilpotent",
            match &self.lie_nilpotent {
                Ok(v) => v.verdict.to_string(),
                Err(e) => format!("error: {e}"),
            },
        );
        line("commutator_zero", self.commutator_zero.to_string());
        line("one_in_commutator", self.one_in_commutator.to_string());
        line(
            "lie_simple",
            match &self.lie_simple {
                Ok(v) => match &v.core {
                    Some(w) => format!(
                        "{} (branch {}, W = {:?})",
                        v.verdict,
                        v.branch.as_str(),
                        g.names_of(w)
                    ),
                    None => format!("{} (branch {})", v.verdict, v.branch.as_str()),
                },
                Err(e) => format!("n/a ({e})"),
            },
        );
        line(
            "gk",
            format!(
                "{} (d1 {:?}, d2 {:?})",
                self.gk.value, self.gk.d1, self.gk.d2
            ),
        );
        line(
            "series",
            self.series
                .chain
                .iter()
                .map(|s| format!("{{{}}}", g.names_of(s).join(",")))
                .collect::<Vec<_>>()
                .join(" < "),
        );
        line(
            "series_types",
            self.series
                .types
                .iter()
                .map(|t| t.as_str())
                .collect::<Vec<_>>()
                .join(", "),
        );
        for c in &self.consistency {
            let name = match c.char {
                Some(p) => format!("{} @{}", c.name, p),
                None => c.name.to_string(),
            };
            let detail = c
                .detail
                .as_deref()
                .map(|d| format!(": {d}"))
                .unwrap_or_default();
            line("check", format!("{} {name}{detail}", c.status.as_str()));
        }
        out
    }
}
