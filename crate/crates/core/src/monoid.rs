//! The talented monoid T_E and the graph monoid M_E.
//!
//! T_E is generated by `v(i)` for vertices `v` and integers `i`, subject to
//! `v(i) = Σ_{e ∈ s⁻¹(v)} r(e)(i+1)` for every regular `v`. It is the graph
//! monoid of the ℤ-covering graph, which is acyclic, so every element has a
//! canonical form once all generators below a given level are expanded. The
//! order and equality procedures here compare those canonical forms.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use num::{BigUint, One, Zero};

use crate::closure::hsat_closure;
use crate::cycles::{enumerate_cycles, is_comet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Bound on the number of states explored by the graph-monoid search.
pub const ME_STATE_CAP: usize = 4096;

/// A three-valued answer from a bounded search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriState {
    True,
    False,
    Unknown,
}

impl TriState {
    pub fn as_str(self) -> &'static str {
        match self {
            TriState::True => "true",
            TriState::False => "false",
            TriState::Unknown => "unknown",
        }
    }

    pub fn or(self, other: TriState) -> TriState {
        match (self, other) {
            (TriState::True, _) | (_, TriState::True) => TriState::True,
            (TriState::False, TriState::False) => TriState::False,
            _ => TriState::Unknown,
        }
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A finite multiset of generators `v(i)`, stored as counts keyed by
/// `(vertex index, shift)`. The empty multiset is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidElement {
    terms: BTreeMap<(usize, i64), BigUint>,
}

impl MonoidElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(v: usize, shift: i64) -> Self {
        let mut a = Self::zero();
        a.add_term(v, shift, BigUint::one());
        a
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, v: usize, shift: i64, count: BigUint) {
        if !count.is_zero() {
            *self.terms.entry((v, shift)).or_default() += count;
        }
    }

    pub fn add(&self, other: &MonoidElement) -> MonoidElement {
        let mut out = self.clone();
        for (&(v, i), c) in &other.terms {
            out.add_term(v, i, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigUint) -> MonoidElement {
        let mut out = Self::zero();
        for (&(v, i), c) in &self.terms {
            out.add_term(v, i, c * k);
        }
        out
    }

    /// `(vertex, shift, count)` in ascending `(vertex, shift)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64, &BigUint)> + '_ {
        self.terms.iter().map(|(&(v, i), c)| (v, i, c))
    }

    pub fn count(&self, v: usize, shift: i64) -> BigUint {
        self.terms.get(&(v, shift)).cloned().unwrap_or_default()
    }

    /// Number of generators counted with multiplicity.
    pub fn size(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn max_shift(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, i)| i).max()
    }

    pub fn min_shift(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, i)| i).min()
    }

    pub fn support(&self, universe: usize) -> VertexSet {
        VertexSet::from_indices(universe, self.terms.keys().map(|&(v, _)| v))
    }

    /// The ℤ-action: every `v(i)` becomes `v(i+n)`.
    pub fn shift(&self, n: i64) -> MonoidElement {
        MonoidElement {
            terms: self
                .terms
                .iter()
                .map(|(&(v, i), c)| ((v, i + n), c.clone()))
                .collect(),
        }
    }

    /// Sub-multiset test.
    pub fn is_submultiset(&self, other: &MonoidElement) -> bool {
        self.terms
            .iter()
            .all(|(k, c)| other.terms.get(k).is_some_and(|d| c <= d))
    }

    /// Only sinks occur, so no relation applies any more.
    pub fn is_irreducible(&self, g: &Graph) -> bool {
        self.terms.keys().all(|&(v, _)| g.is_sink(v))
    }

    /// Parses `u@0 + w@1 + 3*v@-2`. A bare vertex means shift 0, and `0` or
    /// the empty string is the identity.
    pub fn parse(g: &Graph, text: &str) -> Result<MonoidElement> {
        let text = text.trim();
        let mut out = MonoidElement::zero();
        if text.is_empty() || text == "0" {
            return Ok(out);
        }
        let bad = || Error::MonoidSyntax(text.to_string());
        for part in text.split('+') {
            let part = part.trim();
            if part.is_empty() {
                return Err(bad());
            }
            let (count, gen) = match part.split_once('*') {
                Some((k, rest)) => (k.trim().parse::<BigUint>().map_err(|_| bad())?, rest.trim()),
                None => (BigUint::one(), part),
            };
            let (name, shift) = match gen.rsplit_once('@') {
                Some((name, s)) => (name, s.trim().parse::<i64>().map_err(|_| bad())?),
                None => (gen, 0),
            };
            out.add_term(g.vertex(name.trim())?, shift, count);
        }
        Ok(out)
    }

    pub fn display(&self, g: &Graph) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(&(v, i), c)| {
                if c.is_one() {
                    format!("{}@{}", g.vertex_name(v), i)
                } else {
                    format!("{}*{}@{}", c, g.vertex_name(v), i)
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Every element obtained by rewriting one occurrence of a regular
/// generator `v(i)` into `Σ r(e)(i+1)`. Sinks are irreducible.
pub fn expand_once(g: &Graph, a: &MonoidElement) -> Vec<MonoidElement> {
    let mut out = BTreeSet::new();
    for &(v, i) in a.terms.keys() {
        if g.is_sink(v) {
            continue;
        }
        let mut next = a.clone();
        decrement(&mut next.terms, (v, i));
        for w in g.ranges(v) {
            next.add_term(w, i + 1, BigUint::one());
        }
        out.insert(next);
    }
    out.into_iter().collect()
}

fn decrement<K: Ord>(terms: &mut BTreeMap<K, BigUint>, key: K) {
    let c = terms.get_mut(&key).expect("term present");
    *c -= 1u32;
    if c.is_zero() {
        terms.remove(&key);
    }
}

/// Rewrites every regular generator with shift below `level`, until none
/// is left. The result does not depend on the rewriting order.
pub fn push(g: &Graph, a: &MonoidElement, level: i64) -> MonoidElement {
    let mut terms = a.terms.clone();
    let mut pending: BTreeSet<(i64, usize)> = terms
        .keys()
        .filter(|&&(v, i)| i < level && !g.is_sink(v))
        .map(|&(v, i)| (i, v))
        .collect();
    while let Some((i, v)) = pending.pop_first() {
        let c = terms.remove(&(v, i)).expect("pending term present");
        for w in g.ranges(v) {
            *terms.entry((w, i + 1)).or_default() += &c;
            if i + 1 < level && !g.is_sink(w) {
                pending.insert((i + 1, w));
            }
        }
    }
    MonoidElement { terms }
}

fn push_level(a: &MonoidElement, b: &MonoidElement, depth: u32) -> i64 {
    let top = a
        .max_shift()
        .into_iter()
        .chain(b.max_shift())
        .max()
        .unwrap_or(0);
    top + i64::from(depth)
}

/// Decides `a = b` by comparing both sides pushed `depth` levels past their
/// highest shift. Equal pushes prove equality; unequal pushes made only of
/// sinks prove inequality.
pub fn bounded_equal(g: &Graph, a: &MonoidElement, b: &MonoidElement, depth: u32) -> TriState {
    let level = push_level(a, b, depth);
    let (pa, pb) = (push(g, a, level), push(g, b, level));
    if pa == pb {
        TriState::True
    } else if pa.is_irreducible(g) && pb.is_irreducible(g) {
        TriState::False
    } else {
        TriState::Unknown
    }
}

/// Decides `a ≤ b`, that is `b = a + c` for some `c`, by sub-multiset
/// containment of the pushed forms.
pub fn bounded_leq(g: &Graph, a: &MonoidElement, b: &MonoidElement, depth: u32) -> TriState {
    let level = push_level(a, b, depth);
    let (pa, pb) = (push(g, a, level), push(g, b, level));
    if pa.is_submultiset(&pb) {
        TriState::True
    } else if pa.is_irreducible(g) && pb.is_irreducible(g) {
        TriState::False
    } else {
        TriState::Unknown
    }
}

/// Whether `a` lies in the ℤ-order-ideal generated by `v`, tested as
/// `a ≤ M·Σ_{|k| ≤ depth} v(k)` with `M` the size of the pushed `a`.
pub fn bounded_in_order_ideal(g: &Graph, a: &MonoidElement, v: usize, depth: u32) -> TriState {
    let d = i64::from(depth);
    let mut window = MonoidElement::zero();
    for k in -d..=d {
        window.add_term(v, k, BigUint::one());
    }
    let level = push_level(a, &window, depth);
    let m = push(g, a, level).size().max(BigUint::one());
    bounded_leq(g, a, &window.scale(&m), depth)
}

type MeState = BTreeMap<usize, BigUint>;

fn me_expansions(g: &Graph, x: &MeState) -> Vec<MeState> {
    x.keys()
        .filter(|&&v| !g.is_sink(v))
        .map(|&v| {
            let mut next = x.clone();
            decrement(&mut next, v);
            for w in g.ranges(v) {
                *next.entry(w).or_default() += 1u32;
            }
            next
        })
        .collect()
}

struct MeClosure {
    states: Vec<MeState>,
    exhausted: bool,
}

fn me_closure(g: &Graph, start: MeState, depth: u32) -> MeClosure {
    let mut seen: HashSet<MeState> = HashSet::from([start.clone()]);
    let mut states = vec![start.clone()];
    let mut queue = VecDeque::from([(start, 0u32)]);
    let mut exhausted = true;
    while let Some((x, d)) = queue.pop_front() {
        for next in me_expansions(g, &x) {
            if seen.contains(&next) {
                continue;
            }
            if d >= depth || states.len() >= ME_STATE_CAP {
                exhausted = false;
                continue;
            }
            seen.insert(next.clone());
            states.push(next.clone());
            queue.push_back((next, d + 1));
        }
    }
    MeClosure { states, exhausted }
}

fn me_leq(a: &MeClosure, b: &MeClosure) -> TriState {
    let sub = |x: &MeState, y: &MeState| x.iter().all(|(k, c)| y.get(k).is_some_and(|d| c <= d));
    if a.states.iter().any(|x| b.states.iter().any(|y| sub(x, y))) {
        TriState::True
    } else if a.exhausted && b.exhausted {
        TriState::False
    } else {
        TriState::Unknown
    }
}

/// Decides `v ≤ w` in the graph monoid M_E by exploring single rewrites
/// from both sides up to `depth` steps.
pub fn me_bounded_leq(g: &Graph, v: usize, w: usize, depth: u32) -> TriState {
    let cv = me_closure(g, BTreeMap::from([(v, BigUint::one())]), depth);
    let cw = me_closure(g, BTreeMap::from([(w, BigUint::one())]), depth);
    me_leq(&cv, &cw)
}

/// Whether `v ≤ w` or `w ≤ v` in M_E, by bounded search.
pub fn comparable_in_me(g: &Graph, v: usize, w: usize, depth: u32) -> Result<TriState> {
    if v == w {
        return Err(Error::Inconsistent(format!(
            "comparability needs two distinct vertices, got `{}` twice",
            g.vertex_name(v)
        )));
    }
    let cv = me_closure(g, BTreeMap::from([(v, BigUint::one())]), depth);
    let cw = me_closure(g, BTreeMap::from([(w, BigUint::one())]), depth);
    Ok(me_leq(&cv, &cw).or(me_leq(&cw, &cv)))
}

/// T_E has no ℤ-order-ideals besides 0 and itself. Every nonempty
/// hereditary saturated set contains the closure of one of its vertices,
/// so it suffices that each singleton closure is everything.
pub fn is_t_simple(g: &Graph) -> Result<bool> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n = g.vertex_count();
    Ok((0..n).all(|v| hsat_closure(g, &VertexSet::singleton(n, v)).is_full()))
}

/// Type of a simple ℤ-order-ideal subquotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuotientType {
    /// Some shift of an element returns to it.
    Cyclic,
    /// Shifted elements are incomparable with the original.
    NonComparable,
    /// Some shift of an element lies strictly below it.
    Comparable,
}

impl QuotientType {
    pub fn as_str(self) -> &'static str {
        match self {
            QuotientType::Cyclic => "cyclic",
            QuotientType::NonComparable => "non-comparable",
            QuotientType::Comparable => "comparable",
        }
    }
}

impl fmt::Display for QuotientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies the simple subquotient between adjacent hereditary saturated
/// sets `lower ⊊ upper`: cyclic for a comet, non-comparable for an acyclic
/// quotient graph, comparable otherwise.
pub fn simple_quotient_type(
    g: &Graph,
    lower: &VertexSet,
    upper: &VertexSet,
) -> Result<QuotientType> {
    let q = g.quotient_graph(upper, lower)?;
    if q.is_empty() || !is_t_simple(&q)? {
        return Err(Error::QuotientNotSimple);
    }
    Ok(if is_comet(&q)? {
        QuotientType::Cyclic
    } else if enumerate_cycles(&q).is_empty() {
        QuotientType::NonComparable
    } else {
        QuotientType::Comparable
    })
}

/// A maximal chain `∅ = H₀ ⊊ … ⊊ Hₙ = E⁰` of hereditary saturated sets
/// with the type of each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionSeries {
    pub chain: Vec<VertexSet>,
    pub types: Vec<QuotientType>,
}

impl CompositionSeries {
    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        serde_json::json!({
            "chain": self.chain.iter().map(|s| g.names_of(s)).collect::<Vec<_>>(),
            "types": self.types.iter().map(|t| t.as_str()).collect::<Vec<_>>(),
        })
    }
}

/// Minimal nonempty hereditary saturated sets of `g / lower`, lifted back
/// to `g` and sorted.
fn minimal_steps(g: &Graph, lower: &VertexSet) -> Result<Vec<VertexSet>> {
    let (q, map) = g.quotient_with_map(&g.all_vertices(), lower)?;
    let n = q.vertex_count();
    let closures: BTreeSet<VertexSet> = (0..n)
        .map(|v| hsat_closure(&q, &VertexSet::singleton(n, v)))
        .collect();
    let mut out: Vec<VertexSet> = closures
        .iter()
        .filter(|c| closures.iter().all(|d| d == *c || !d.is_subset(c)))
        .map(|c| {
            lower.union(&VertexSet::from_indices(
                g.vertex_count(),
                c.iter().map(|v| map[v]),
            ))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Builds a composition series by repeatedly adding the least minimal
/// nonempty hereditary saturated set of the current quotient graph.
pub fn composition_series(g: &Graph) -> Result<CompositionSeries> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let mut chain = vec![g.empty_set()];
    let mut types = Vec::new();
    loop {
        let lower = chain.last().expect("chain starts with ∅").clone();
        if lower.is_full() {
            return Ok(CompositionSeries { chain, types });
        }
        let upper = minimal_steps(g, &lower)?
            .into_iter()
            .next()
            .ok_or_else(|| {
                Error::Inconsistent("nonempty quotient graph without a minimal ideal".into())
            })?;
        types.push(simple_quotient_type(g, &lower, &upper)?);
        chain.push(upper);
    }
}

/// Lengths of the composition series reachable under every tie-breaking
/// order of minimal-ideal selection.
pub fn series_lengths(g: &Graph) -> Result<BTreeSet<usize>> {
    fn remaining(
        g: &Graph,
        lower: &VertexSet,
        memo: &mut HashMap<VertexSet, BTreeSet<usize>>,
    ) -> Result<BTreeSet<usize>> {
        if lower.is_full() {
            return Ok(BTreeSet::from([0]));
        }
        if let Some(known) = memo.get(lower) {
            return Ok(known.clone());
        }
        let mut out = BTreeSet::new();
        for upper in minimal_steps(g, lower)? {
            out.extend(remaining(g, &upper, memo)?.into_iter().map(|k| k + 1));
        }
        memo.insert(lower.clone(), out.clone());
        Ok(out)
    }
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    remaining(g, &g.empty_set(), &mut HashMap::new())
}

/// The quotient graph `E / H`, whose talented monoid is `T_E / ⟨H⟩`.
pub fn quotient_monoid_vertices(g: &Graph, h: &VertexSet) -> Result<Graph> {
    g.quotient_graph(&g.all_vertices(), h)
}
