//! Lie-theoretic verdicts for L_K(E) under the commutator bracket.
//!
//! Scalars enter only through the characteristic of K. Membership of a
//! vertex combination `Σ a_v v` in `[L, L]` reduces to membership of the
//! weight vector `a` in the span of `δ_v − Σ_{e ∈ s⁻¹(v)} δ_{r(e)}` over the
//! regular vertices, since `v − Σ r(e) = Σ [e, e*]`.

use serde_json::json;

use crate::closure::{hsat_closure, order_ideal_vertices};
use crate::cycles::{enumerate_cycles, gk_dimension, is_comet, is_disjoint_vertices_and_loops};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{span_contains, FieldChar};
use crate::monoid::{comparable_in_me, is_t_simple, TriState};
use crate::vertex_set::VertexSet;

/// Integer weights on the vertices of one graph, read in the prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexWeightVector {
    weights: Vec<i64>,
}

impl VertexWeightVector {
    pub fn new(g: &Graph, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != g.vertex_count() {
            return Err(Error::WeightLength {
                expected: g.vertex_count(),
                found: weights.len(),
            });
        }
        Ok(VertexWeightVector { weights })
    }

    pub fn zero(g: &Graph) -> Self {
        VertexWeightVector {
            weights: vec![0; g.vertex_count()],
        }
    }

    pub fn delta(g: &Graph, v: usize) -> Self {
        let mut a = Self::zero(g);
        a.weights[v] = 1;
        a
    }

    /// The image of `1 = Σ_v v`.
    pub fn ones(g: &Graph) -> Self {
        VertexWeightVector {
            weights: vec![1; g.vertex_count()],
        }
    }

    /// Indicator vector of `set`.
    pub fn indicator(set: &VertexSet) -> Self {
        VertexWeightVector {
            weights: (0..set.universe())
                .map(|v| i64::from(set.contains(v)))
                .collect(),
        }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }
}

/// A boolean verdict with the clause that decided it and the offending or
/// supporting vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieVerdict {
    pub verdict: bool,
    pub branch: &'static str,
    pub witnesses: Vec<String>,
}

impl LieVerdict {
    fn new(
        verdict: bool,
        branch: &'static str,
        g: &Graph,
        witnesses: impl IntoIterator<Item = usize>,
    ) -> Self {
        LieVerdict {
            verdict,
            branch,
            witnesses: witnesses
                .into_iter()
                .map(|v| g.vertex_name(v).to_string())
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "verdict": self.verdict, "branch": self.branch, "witnesses": self.witnesses })
    }
}

fn isolated_or_lone_loop(g: &Graph, v: usize) -> bool {
    let (out, inc) = (g.out_edges(v), g.in_edges(v));
    (out.is_empty() && inc.is_empty()) || (out.len() == 1 && inc.len() == 1 && g.is_loop(out[0]))
}

/// The cycle through `v` along unique out-edges, if `v` lies on a cycle
/// without an exit.
fn exitless_cycle_at(g: &Graph, v: usize) -> Option<VertexSet> {
    let mut cycle = VertexSet::singleton(g.vertex_count(), v);
    let mut u = v;
    loop {
        let [e] = g.out_edges(u) else { return None };
        u = g.edge(*e).dst;
        if u == v {
            return Some(cycle);
        }
        if !cycle.insert(u) {
            return None;
        }
    }
}

/// L_K(E) is simple: every vertex reaches every sink and every cycle, and
/// every cycle has an exit.
pub fn is_simple_lpa(g: &Graph) -> Result<LieVerdict> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n = g.vertex_count();
    if let Some(c) = (0..n).find_map(|v| exitless_cycle_at(g, v)) {
        return Ok(LieVerdict::new(false, "cycle-without-exit", g, c.iter()));
    }
    let trees: Vec<VertexSet> = (0..n).map(|v| g.tree(v)).collect();
    // A tree meets a cycle exactly when it contains all of it, so it is
    // enough to reach every sink and every vertex lying on a cycle.
    let targets: Vec<usize> = (0..n)
        .filter(|&v| g.is_sink(v) || g.ranges(v).any(|w| trees[w].contains(v)))
        .collect();
    for (v, tree) in trees.iter().enumerate() {
        if let Some(&t) = targets.iter().find(|&&t| !tree.contains(t)) {
            return Ok(LieVerdict::new(
                false,
                "vertex-misses-sink-or-cycle",
                g,
                [v, t],
            ));
        }
    }
    Ok(LieVerdict::new(true, "cofinal-with-exits", g, []))
}

/// L_K(E) has no nontrivial graded ideals, decided on the talented monoid.
pub fn is_graded_simple(g: &Graph) -> Result<bool> {
    is_t_simple(g)
}

/// `[L, L] = 0`: isolated vertices and single loops only.
pub fn commutator_zero(g: &Graph) -> bool {
    is_disjoint_vertices_and_loops(g)
}

/// `δ_v − Σ_{e ∈ s⁻¹(v)} δ_{r(e)}` for each regular `v`, with multiplicity.
pub fn relation_vectors(g: &Graph) -> Vec<Vec<i64>> {
    (0..g.vertex_count())
        .filter(|&v| !g.is_sink(v))
        .map(|v| {
            let mut row = vec![0i64; g.vertex_count()];
            row[v] += 1;
            for w in g.ranges(v) {
                row[w] -= 1;
            }
            row
        })
        .collect()
}

/// Whether `Σ a_v v` lies in `[L, L]`.
pub fn commutator_span_membership(g: &Graph, a: &VertexWeightVector, p: FieldChar) -> Result<bool> {
    if a.weights.len() != g.vertex_count() {
        return Err(Error::WeightLength {
            expected: g.vertex_count(),
            found: a.weights.len(),
        });
    }
    Ok(span_contains(&relation_vectors(g), &a.weights, p))
}

/// Whether `1 = Σ_v v` lies in `[L, L]`.
pub fn one_in_commutator(g: &Graph, p: FieldChar) -> bool {
    span_contains(
        &relation_vectors(g),
        &VertexWeightVector::ones(g).weights,
        p,
    )
}

/// Every out-edge of `v` lands on a sink it alone enters, or on a vertex
/// whose only in-edges are that edge and one loop.
pub fn ranges_are_private(g: &Graph, v: usize) -> bool {
    g.out_edges(v).iter().all(|&e| {
        let w = g.edge(e).dst;
        let incoming = g.in_edges(w);
        if g.is_sink(w) {
            incoming == [e]
        } else {
            incoming.len() == 2
                && incoming.contains(&e)
                && incoming.iter().any(|&f| f != e && g.is_loop(f))
        }
    })
}

/// Lie solvability read off the graph.
///
/// In characteristic 2: no cycle has an exit, and every vertex is a sink, lies
/// on a cycle of length at most 2, or has only private ranges (see
/// [`ranges_are_private`]). Otherwise: isolated vertices and loops only.
pub fn is_lie_solvable(g: &Graph, p: FieldChar) -> LieVerdict {
    if p != FieldChar::TWO {
        let bad: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| !isolated_or_lone_loop(g, v))
            .collect();
        return LieVerdict::new(bad.is_empty(), "isolated-vertices-and-loops", g, bad);
    }
    let cycles = enumerate_cycles(g);
    if let Some(c) = cycles.iter().find(|c| c.has_exit(g)) {
        return LieVerdict::new(false, "cycle-with-exit", g, c.vertices.iter());
    }
    let short = cycles
        .into_iter()
        .filter(|c| c.len() <= 2)
        .fold(g.empty_set(), |acc, c| acc.union(&c.vertices));
    let bad: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| !(g.is_sink(v) || short.contains(v) || ranges_are_private(g, v)))
        .collect();
    LieVerdict::new(bad.is_empty(), "no-exit-vertex-clauses", g, bad)
}

/// `⟨v⟩` is a minimal ideal: every vertex of its closure generates it back.
fn is_minimal_ideal(g: &Graph, ideal: &VertexSet) -> bool {
    let n = g.vertex_count();
    ideal
        .iter()
        .all(|u| hsat_closure(g, &VertexSet::singleton(n, u)) == *ideal)
}

/// Lie solvability read off the talented monoid.
///
/// In characteristic 2: GK-dimension at most 1, and for each vertex `v`
/// either `⟨v⟩` is a minimal non-comparable ideal (acyclic restriction), or a
/// cyclic one (comet restriction) on at most two vertices, or the ranges of
/// `v` are parallel to everything else in M_E, decided by the structural
/// criterion for no-exit graphs. Otherwise: GK-dimension at most 1 and
/// `⟨v⟩ ∩ E⁰ = {v}` for every `v`.
pub fn is_lie_solvable_monoid(g: &Graph, p: FieldChar) -> Result<LieVerdict> {
    let gk = gk_dimension(g).value;
    if !gk.at_most(1) {
        return Ok(LieVerdict::new(false, "gk-above-one", g, []));
    }
    if p != FieldChar::TWO {
        let bad: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| order_ideal_vertices(g, v).len() != 1)
            .collect();
        return Ok(LieVerdict::new(
            bad.is_empty(),
            "gk-and-singleton-ideals",
            g,
            bad,
        ));
    }
    let mut bad = Vec::new();
    for v in 0..g.vertex_count() {
        let ideal = order_ideal_vertices(g, v);
        let minimal = is_minimal_ideal(g, &ideal);
        let restricted = g.restriction(&ideal)?;
        let non_comparable = minimal && enumerate_cycles(&restricted).is_empty();
        let cyclic = minimal && ideal.len() <= 2 && is_comet(&restricted)?;
        if !(non_comparable || cyclic || ranges_are_private(g, v)) {
            bad.push(v);
        }
    }
    Ok(LieVerdict::new(
        bad.is_empty(),
        "gk-and-ideal-types",
        g,
        bad,
    ))
}

/// The M_E form of the private-ranges clause, by bounded search: every
/// range `r(e)` of `v` is incomparable with every vertex other than `v` and
/// itself.
pub fn ranges_parallel_in_me(g: &Graph, v: usize, depth: u32) -> Result<TriState> {
    let mut all = TriState::True;
    for w in g.ranges(v) {
        for u in (0..g.vertex_count()).filter(|&u| u != v && u != w) {
            match comparable_in_me(g, w, u, depth)? {
                TriState::True => return Ok(TriState::False),
                TriState::Unknown => all = TriState::Unknown,
                TriState::False => {}
            }
        }
    }
    Ok(all)
}

/// Lie nilpotency, computed both as "isolated vertices and loops" and as
/// "GK-dimension at most 1 with singleton ideals"; the two must agree.
pub fn is_lie_nilpotent(g: &Graph) -> Result<LieVerdict> {
    let graph_form = is_disjoint_vertices_and_loops(g);
    debug_assert_eq!(
        graph_form,
        (0..g.vertex_count()).all(|v| isolated_or_lone_loop(g, v))
    );
    let monoid_form = gk_dimension(g).value.at_most(1)
        && (0..g.vertex_count()).all(|v| order_ideal_vertices(g, v).len() == 1);
    if graph_form != monoid_form {
        return Err(Error::Inconsistent(format!(
            "nilpotency: graph form {graph_form}, monoid form {monoid_form}"
        )));
    }
    let bad = (0..g.vertex_count()).filter(|&v| order_ideal_vertices(g, v).len() != 1);
    Ok(LieVerdict::new(
        graph_form,
        "isolated-vertices-and-loops",
        g,
        bad,
    ))
}

fn check_balloon_input(g: &Graph, v: usize, base: &VertexSet) -> Result<()> {
    g.check_set(base)?;
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    if base.is_empty() {
        return Err(Error::EmptyBase);
    }
    if base.contains(v) {
        return Err(Error::VertexInBase(g.vertex_name(v).to_string()));
    }
    Ok(())
}

/// `v` is a balloon over `base`: its only in-edge is a loop `C`, and its
/// out-edges are `C` and at least one edge into `base`.
pub fn is_balloon(g: &Graph, v: usize, base: &VertexSet) -> Result<bool> {
    check_balloon_input(g, v, base)?;
    let [c] = g.in_edges(v) else {
        return Ok(false);
    };
    if !g.is_loop(*c) {
        return Ok(false);
    }
    let out = g.out_edges(v);
    let into_base = out
        .iter()
        .filter(|&&e| base.contains(g.edge(e).dst))
        .count();
    Ok(into_base > 0 && out.iter().all(|&e| e == *c || base.contains(g.edge(e).dst)))
}

/// The balloon condition through the talented monoid: `E⁰ ∖ {v}` is
/// hereditary saturated, `r(s⁻¹(v)) ∖ base = {v}`, and the quotient by
/// `E⁰ ∖ {v}` has a simple cyclic talented monoid.
pub fn is_balloon_monoid(g: &Graph, v: usize, base: &VertexSet) -> Result<bool> {
    check_balloon_input(g, v, base)?;
    let mut h = g.all_vertices();
    h.remove(v);
    if !crate::closure::is_hereditary_saturated(g, &h) {
        return Ok(false);
    }
    let outside: VertexSet =
        VertexSet::from_indices(g.vertex_count(), g.ranges(v)).difference(base);
    if outside != VertexSet::singleton(g.vertex_count(), v) {
        return Ok(false);
    }
    let q = g.quotient_graph(&g.all_vertices(), &h)?;
    Ok(is_t_simple(&q)? && is_comet(&q)?)
}

/// Intersection of all nonempty hereditary saturated sets, or `None` when
/// it is empty. Nonempty exactly when there is a single minimal one.
pub fn simple_core(g: &Graph) -> Result<Option<VertexSet>> {
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut minimal: Vec<VertexSet> = Vec::new();
    for v in 0..n {
        let c = hsat_closure(g, &VertexSet::singleton(n, v));
        if minimal.iter().any(|m| m.is_subset(&c)) {
            continue;
        }
        minimal.retain(|m| !c.is_subset(m));
        minimal.push(c);
    }
    Ok(match minimal.as_slice() {
        [only] => Some(only.clone()),
        _ => None,
    })
}

/// Which characterization decided Lie simplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicityBranch {
    /// L_K(E) is simple; `[L, L]` is simple iff `1 ∉ [L, L]`.
    A,
    /// L_K(E) is not simple; balloons over the simple core.
    B,
}

impl SimplicityBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            SimplicityBranch::A => "A",
            SimplicityBranch::B => "B",
        }
    }
}

/// Verdict on simplicity of `[L, L]` with the sub-verdicts behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSimpleVerdict {
    pub verdict: bool,
    pub branch: SimplicityBranch,
    /// `[L, L] = 0`; the zero algebra is not simple.
    pub zero_commutator: bool,
    /// Branch A: whether `1 ∈ [L, L]`.
    pub one_in_commutator: Option<bool>,
    /// Branch B: the simple core W.
    pub core: Option<VertexSet>,
    /// Branch B: whether L_K(W) is simple.
    pub core_simple: Option<bool>,
    /// Branch B: vertices outside W that are not balloons over W.
    pub non_balloons: Vec<usize>,
    /// Branch B: vertices outside W whose range sum into W misses `[L_K(W), L_K(W)]`.
    pub membership_failures: Vec<usize>,
    /// Branch B with a positive verdict: ⟨W⟩ must then be a minimal
    /// non-cyclic ideal, i.e. the restriction to W is not a comet.
    pub core_not_comet: Option<bool>,
}

impl LieSimpleVerdict {
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let names = |vs: &[usize]| {
            vs.iter()
                .map(|&v| g.vertex_name(v).to_string())
                .collect::<Vec<_>>()
        };
        json!({
            "verdict": self.verdict,
            "branch": self.branch.as_str(),
            "W": self.core.as_ref().map(|w| g.names_of(w)),
            "zero_commutator": self.zero_commutator,
            "one_in_commutator": self.one_in_commutator,
            "core_simple": self.core_simple,
            "non_balloons": names(&self.non_balloons),
            "membership_failures": names(&self.membership_failures),
            "core_not_comet": self.core_not_comet,
        })
    }
}

/// Simplicity of the Lie algebra `[L, L]` for a connected graph.
pub fn is_lie_simple(g: &Graph, p: FieldChar) -> Result<LieSimpleVerdict> {
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    let zero = commutator_zero(g);
    let simple = is_simple_lpa(g)?.verdict;
    let mut out = LieSimpleVerdict {
        verdict: false,
        branch: if simple {
            SimplicityBranch::A
        } else {
            SimplicityBranch::B
        },
        zero_commutator: zero,
        one_in_commutator: None,
        core: None,
        core_simple: None,
        non_balloons: Vec::new(),
        membership_failures: Vec::new(),
        core_not_comet: None,
    };
    if simple {
        let one = one_in_commutator(g, p);
        out.one_in_commutator = Some(one);
        out.verdict = !one && !zero;
        return Ok(out);
    }
    let Some(core) = simple_core(g)? else {
        return Ok(out);
    };
    let restricted = g.restriction(&core)?;
    let core_simple = is_simple_lpa(&restricted)?.verdict;
    out.core_simple = Some(core_simple);
    let position: Vec<Option<usize>> = {
        let mut pos = vec![None; g.vertex_count()];
        for (i, v) in core.iter().enumerate() {
            pos[v] = Some(i);
        }
        pos
    };
    for v in core.complement().iter() {
        if !is_balloon(g, v, &core)? {
            out.non_balloons.push(v);
            continue;
        }
        let mut target = VertexWeightVector::zero(&restricted);
        for e in g.out_edges(v) {
            if let Some(i) = position[g.edge(*e).dst] {
                target.weights[i] = 1;
            }
        }
        if !commutator_span_membership(&restricted, &target, p)? {
            out.membership_failures.push(v);
        }
    }
    out.verdict =
        !zero && core_simple && out.non_balloons.is_empty() && out.membership_failures.is_empty();
    if out.verdict {
        out.core_not_comet = Some(!is_comet(&restricted)?);
    }
    out.core = Some(core);
    Ok(out)
}

/// Outcome of the implications linking Lie simplicity, graded simplicity
/// and simplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityCrossCheck {
    /// Why the check did not apply, if it did not.
    pub skipped: Option<&'static str>,
    pub violations: Vec<String>,
}

impl SimplicityCrossCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, with LS = `[L, L]` simple, GS = graded simple, S = simple:
/// (a) LS ∧ GS ⇒ S; (b) LS ⇒ (GS ⇔ S); (c) LS ∧ GS ⇔ S ∧ 1 ∉ `[L, L]`.
/// Skipped for disconnected graphs and when `[L, L] = 0`.
pub fn cross_check_simplicity(g: &Graph, p: FieldChar) -> Result<SimplicityCrossCheck> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let skip = |why| {
        Ok(SimplicityCrossCheck {
            skipped: Some(why),
            violations: Vec::new(),
        })
    };
    if !g.is_connected()? {
        return skip("disconnected");
    }
    if commutator_zero(g) {
        return skip("zero commutator");
    }
    let ls = is_lie_simple(g, p)?.verdict;
    let gs = is_graded_simple(g)?;
    let s = is_simple_lpa(g)?.verdict;
    let one = one_in_commutator(g, p);
    let mut violations = Vec::new();
    if ls && gs && !s {
        violations.push("Lie simple and graded simple but not simple".to_string());
    }
    if ls && gs != s {
        violations.push(format!("Lie simple with graded simple {gs} but simple {s}"));
    }
    if (ls && gs) != (s && !one) {
        violations.push(format!(
            "Lie simple and graded simple is {}, simple with 1 outside [L,L] is {}",
            ls && gs,
            s && !one
        ));
    }
    Ok(SimplicityCrossCheck {
        skipped: None,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::*;

    fn p(n: u64) -> FieldChar {
        FieldChar::new(n).unwrap()
    }

    fn g(text: &str) -> Graph {
        Graph::parse(text).unwrap()
    }

    #[test]
    fn simplicity_examples() {
        assert!(is_simple_lpa(&rose(2)).unwrap().verdict);
        assert!(!is_simple_lpa(&single_loop()).unwrap().verdict);
        let t = is_simple_lpa(&toep()).unwrap();
        assert!(!t.verdict);
        assert_eq!(t.witnesses, ["w", "u"]);
        assert!(is_simple_lpa(&pt()).unwrap().verdict);
        assert!(!is_simple_lpa(&two_sink()).unwrap().verdict);
        assert!(
            is_simple_lpa(&g("vertex v\nvertex w\nedge e v w"))
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn graded_simplicity_examples() {
        assert!(is_graded_simple(&rose(2)).unwrap());
        assert!(is_graded_simple(&single_loop()).unwrap());
        assert!(!is_graded_simple(&toep()).unwrap());
    }

    #[test]
    fn commutator_examples() {
        assert!(commutator_zero(&pt()));
        assert!(commutator_zero(&single_loop()));
        assert!(!commutator_zero(&two_cycle()));
    }

    #[test]
    fn span_membership_examples() {
        let r3 = rose(3);
        let du = VertexWeightVector::delta(&r3, 0);
        assert!(!commutator_span_membership(&r3, &du, p(2)).unwrap());
        assert!(commutator_span_membership(&r3, &du, p(0)).unwrap());
        assert!(
            commutator_span_membership(&toep(), &VertexWeightVector::zero(&toep()), p(3)).unwrap()
        );
        assert!(
            !commutator_span_membership(&pt(), &VertexWeightVector::delta(&pt(), 0), p(5)).unwrap()
        );
        let bad = VertexWeightVector::new(&r3, vec![1]).unwrap();
        assert_eq!(
            commutator_span_membership(&toep(), &bad, p(2)),
            Err(Error::WeightLength {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn one_in_commutator_examples() {
        assert!(one_in_commutator(&rose(2), p(0)));
        assert!(!one_in_commutator(&rose(3), p(2)));
        for q in [0, 2, 3, 5] {
            assert!(!one_in_commutator(&pt(), p(q)));
        }
    }

    #[test]
    fn solvability_examples() {
        assert!(is_lie_solvable(&two_cycle(), p(2)).verdict);
        assert!(!is_lie_solvable(&two_cycle(), p(3)).verdict);
        assert!(is_lie_solvable(&sink_fan(), p(2)).verdict);
        assert!(!is_lie_solvable(&sink_fan(), p(0)).verdict);
        for q in [0, 2, 3] {
            assert!(!is_lie_solvable(&toep(), p(q)).verdict);
        }
    }

    #[test]
    fn monoid_solvability_examples() {
        assert!(is_lie_solvable_monoid(&two_cycle(), p(2)).unwrap().verdict);
        let loop_and_point = g("vertex u\nvertex x\nedge c u u");
        assert!(
            is_lie_solvable_monoid(&loop_and_point, p(5))
                .unwrap()
                .verdict
        );
        let v = is_lie_solvable_monoid(&two_chain(), p(0)).unwrap();
        assert!(!v.verdict);
        assert!(is_lie_solvable_monoid(&sink_fan(), p(2)).unwrap().verdict);
    }

    #[test]
    fn solvability_routes_disagree_on_shared_sink() {
        // L_K of x → w ← y is M_3(K), which is not Lie solvable in any
        // characteristic; the monoid route accepts it because every ⟨v⟩ is
        // the whole, acyclic, minimal graph.
        let shared = g("vertex x\nvertex y\nvertex w\nedge a x w\nedge b y w");
        assert!(!is_lie_solvable(&shared, p(2)).verdict);
        assert!(is_lie_solvable_monoid(&shared, p(2)).unwrap().verdict);
    }

    #[test]
    fn nilpotency_examples() {
        assert!(is_lie_nilpotent(&single_loop()).unwrap().verdict);
        assert!(!is_lie_nilpotent(&two_cycle()).unwrap().verdict);
        assert!(is_lie_nilpotent(&pt()).unwrap().verdict);
    }

    #[test]
    fn balloon_examples() {
        let b = balloon();
        let (u, v) = (b.vertex("u").unwrap(), b.vertex("v").unwrap());
        let over_u = b.set_of(&["u"]).unwrap();
        assert!(is_balloon(&b, v, &over_u).unwrap());
        assert!(is_balloon_monoid(&b, v, &over_u).unwrap());
        assert_eq!(
            is_balloon(&b, v, &b.set_of(&["v"]).unwrap()),
            Err(Error::VertexInBase("v".into()))
        );
        assert_eq!(is_balloon(&b, v, &b.empty_set()), Err(Error::EmptyBase));
        assert!(!is_balloon(&b, u, &b.set_of(&["v"]).unwrap()).unwrap());

        let t = toep();
        let over_w = t.set_of(&["w"]).unwrap();
        assert!(is_balloon(&t, 0, &over_w).unwrap());
        assert!(is_balloon_monoid(&t, 0, &over_w).unwrap());

        let c = two_cycle();
        let over_v = c.set_of(&["v"]).unwrap();
        assert!(!is_balloon(&c, 0, &over_v).unwrap());
        assert!(!is_balloon_monoid(&c, 0, &over_v).unwrap());

        let apart = g("vertex a\nvertex b\nedge c a a");
        assert_eq!(
            is_balloon(&apart, 0, &apart.set_of(&["b"]).unwrap()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn simple_core_examples() {
        let b = balloon();
        assert_eq!(b.names_of(&simple_core(&b).unwrap().unwrap()), ["u"]);
        assert_eq!(simple_core(&two_sink()).unwrap(), None);
        let r = rose(2);
        assert_eq!(r.names_of(&simple_core(&r).unwrap().unwrap()), ["u"]);
    }

    #[test]
    fn lie_simplicity_examples() {
        let v = is_lie_simple(&rose(3), p(2)).unwrap();
        assert!(v.verdict);
        assert_eq!(v.branch, SimplicityBranch::A);
        let v = is_lie_simple(&rose(2), p(0)).unwrap();
        assert!(!v.verdict);
        assert_eq!(v.one_in_commutator, Some(true));
        for q in [0, 2, 3] {
            let v = is_lie_simple(&balloon(), p(q)).unwrap();
            assert!(v.verdict, "balloon at char {q}");
            assert_eq!(v.branch, SimplicityBranch::B);
            assert_eq!(v.core_not_comet, Some(true));
        }
        for q in [0, 2, 3, 5] {
            assert!(!is_lie_simple(&single_loop(), p(q)).unwrap().verdict);
            let v = is_lie_simple(&pt(), p(q)).unwrap();
            assert!(!v.verdict && v.zero_commutator);
        }
        assert_eq!(
            is_lie_simple(&g("vertex a\nvertex b"), p(2)),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn cross_check_examples() {
        let r = cross_check_simplicity(&rose(3), p(2)).unwrap();
        assert!(r.skipped.is_none() && r.passed());
        assert!(cross_check_simplicity(&balloon(), p(0)).unwrap().passed());
        assert_eq!(
            cross_check_simplicity(&single_loop(), p(3))
                .unwrap()
                .skipped,
            Some("zero commutator")
        );
        assert_eq!(
            cross_check_simplicity(&pt(), p(2)).unwrap().skipped,
            Some("zero commutator")
        );
    }

    #[test]
    fn graph_monoid_parallelism_observation() {
        let fan = two_sink();
        assert_eq!(ranges_parallel_in_me(&fan, 0, 6).unwrap(), TriState::True);
        assert!(ranges_are_private(&fan, 0));
        // With an in-edge a → v, a = v = w in M_E, so the range w of v is
        // comparable with a although the structural clause holds at v.
        let path = g("vertex a\nvertex v\nvertex w\nedge e a v\nedge f v w");
        assert!(ranges_are_private(&path, 1));
        assert_eq!(ranges_parallel_in_me(&path, 1, 6).unwrap(), TriState::False);
    }
}
