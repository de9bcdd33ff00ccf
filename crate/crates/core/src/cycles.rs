//! Cycle enumeration, the structural graph classes built on it, and the
//! combinatorial Gelfand–Kirillov dimension of the Leavitt path algebra.

use std::fmt;
use std::ops::ControlFlow;

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A cycle as its edge sequence, starting at its smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub edges: Vec<usize>,
    pub vertices: VertexSet,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_loop(&self) -> bool {
        self.edges.len() == 1
    }

    /// Some vertex of the cycle emits an edge that is not on the cycle.
    pub fn has_exit(&self, g: &Graph) -> bool {
        self.vertices.iter().any(|v| g.out_edges(v).len() > 1)
    }
}

/// All cycles, one per rotation class, in the order Johnson's algorithm finds
/// them. Parallel edges yield distinct cycles over the same vertex set.
pub fn enumerate_cycles(g: &Graph) -> Vec<Cycle> {
    let mut out = Vec::new();
    let _ = visit_cycles(g, |c| {
        out.push(c);
        ControlFlow::Continue(())
    });
    out
}

/// Feeds each cycle to `visit` until it breaks.
pub fn visit_cycles<F>(g: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(Cycle) -> ControlFlow<()>,
{
    let n = g.vertex_count();
    let mut state = Johnson {
        g,
        start: 0,
        blocked: vec![false; n],
        block_map: vec![Vec::new(); n],
        path: Vec::new(),
    };
    for s in 0..n {
        state.start = s;
        for v in s..n {
            state.blocked[v] = false;
            state.block_map[v].clear();
        }
        state.circuit(s, &mut visit)?;
    }
    ControlFlow::Continue(())
}

struct Johnson<'g> {
    g: &'g Graph,
    start: usize,
    blocked: Vec<bool>,
    block_map: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl Johnson<'_> {
    /// Returns whether a cycle through `v` was found, or the visitor's break.
    fn circuit<F>(&mut self, v: usize, visit: &mut F) -> ControlFlow<(), bool>
    where
        F: FnMut(Cycle) -> ControlFlow<()>,
    {
        let g = self.g;
        let mut found = false;
        self.blocked[v] = true;
        for &e in g.out_edges(v) {
            let w = g.edge(e).dst;
            if w < self.start {
                continue;
            }
            if w == self.start {
                let mut edges = self.path.clone();
                edges.push(e);
                let vertices =
                    VertexSet::from_indices(g.vertex_count(), edges.iter().map(|&e| g.edge(e).src));
                if let ControlFlow::Break(()) = visit(Cycle { edges, vertices }) {
                    return ControlFlow::Break(());
                }
                found = true;
            } else if !self.blocked[w] {
                self.path.push(e);
                let sub = self.circuit(w, visit);
                self.path.pop();
                if sub? {
                    found = true;
                }
            }
        }
        if found {
            self.unblock(v);
        } else {
            for w in g.ranges(v) {
                if w >= self.start && !self.block_map[w].contains(&v) {
                    self.block_map[w].push(v);
                }
            }
        }
        ControlFlow::Continue(found)
    }

    fn unblock(&mut self, v: usize) {
        self.blocked[v] = false;
        for u in std::mem::take(&mut self.block_map[v]) {
            if self.blocked[u] {
                self.unblock(u);
            }
        }
    }
}

/// No two distinct cycles share a vertex.
pub fn has_disjoint_cycles(g: &Graph) -> bool {
    let mut covered = g.empty_set();
    visit_cycles(g, |c| {
        if c.vertices.is_disjoint(&covered) {
            covered = covered.union(&c.vertices);
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    })
    .is_continue()
}

/// No cycle has an exit.
pub fn is_no_exit(g: &Graph) -> bool {
    visit_cycles(g, |c| {
        if c.has_exit(g) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_continue()
}

/// Every vertex is isolated or carries exactly one loop and nothing else.
pub fn is_disjoint_vertices_and_loops(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| {
        let (out, inc) = (g.out_edges(v), g.in_edges(v));
        (out.is_empty() && inc.is_empty())
            || (out.len() == 1 && inc.len() == 1 && g.is_loop(out[0]))
    })
}

/// Exactly one cycle, reached from every vertex, without an exit.
pub fn is_comet(g: &Graph) -> Result<bool> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let cycles = enumerate_cycles(g);
    let [cycle] = cycles.as_slice() else {
        return Ok(false);
    };
    Ok(
        !cycle.has_exit(g)
            && (0..g.vertex_count()).all(|v| !g.tree(v).is_disjoint(&cycle.vertices)),
    )
}

/// Mutually disjoint cycles, each vertex reaching one of them, no exits.
pub fn is_multiheaded_comet(g: &Graph) -> Result<bool> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !has_disjoint_cycles(g) || !is_no_exit(g) {
        return Ok(false);
    }
    let heads = enumerate_cycles(g)
        .iter()
        .fold(g.empty_set(), |acc, c| acc.union(&c.vertices));
    Ok((0..g.vertex_count()).all(|v| !g.tree(v).is_disjoint(&heads)))
}

/// Cycles of a graph with disjoint cycles, ordered by reachability.
#[derive(Debug, Clone)]
pub struct CycleChainDag {
    pub cycles: Vec<Cycle>,
    /// `arcs[i]` lists the cycles reachable from cycle `i`.
    pub arcs: Vec<Vec<usize>>,
    pub has_exit: Vec<bool>,
}

impl CycleChainDag {
    /// `None` when two cycles share a vertex (the reachability relation is
    /// then not antisymmetric).
    pub fn build(g: &Graph) -> Option<CycleChainDag> {
        if !has_disjoint_cycles(g) {
            return None;
        }
        let cycles = enumerate_cycles(g);
        let reach: Vec<VertexSet> = cycles
            .iter()
            .map(|c| g.tree(c.vertices.first().expect("cycles are nonempty")))
            .collect();
        let arcs = (0..cycles.len())
            .map(|i| {
                (0..cycles.len())
                    .filter(|&j| j != i && !reach[i].is_disjoint(&cycles[j].vertices))
                    .collect()
            })
            .collect();
        let has_exit = cycles.iter().map(|c| c.has_exit(g)).collect();
        Some(CycleChainDag {
            cycles,
            arcs,
            has_exit,
        })
    }

    /// Longest chain, counted in cycles.
    pub fn longest_chain(&self) -> u32 {
        let mut memo = vec![None; self.cycles.len()];
        (0..self.cycles.len())
            .map(|i| self.chain_from(i, &mut memo))
            .max()
            .unwrap_or(0)
    }

    fn chain_from(&self, i: usize, memo: &mut Vec<Option<u32>>) -> u32 {
        if let Some(d) = memo[i] {
            return d;
        }
        let d = 1 + self.arcs[i]
            .iter()
            .map(|&j| self.chain_from(j, memo))
            .max()
            .unwrap_or(0);
        memo[i] = Some(d);
        d
    }

    /// Longest chain whose last cycle has an exit; 0 if no cycle has one.
    pub fn longest_exit_chain(&self) -> u32 {
        let mut memo = vec![None; self.cycles.len()];
        (0..self.cycles.len())
            .map(|i| self.exit_chain_from(i, &mut memo))
            .max()
            .unwrap_or(0)
    }

    fn exit_chain_from(&self, i: usize, memo: &mut Vec<Option<u32>>) -> u32 {
        if let Some(d) = memo[i] {
            return d;
        }
        let tail = self.arcs[i]
            .iter()
            .map(|&j| self.exit_chain_from(j, memo))
            .max()
            .unwrap_or(0);
        let d = if tail > 0 {
            tail + 1
        } else {
            u32::from(self.has_exit[i])
        };
        memo[i] = Some(d);
        d
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GkValue {
    Finite(u32),
    Infinite,
}

impl GkValue {
    pub fn is_finite(self) -> bool {
        matches!(self, GkValue::Finite(_))
    }

    pub fn at_most(self, bound: u32) -> bool {
        matches!(self, GkValue::Finite(d) if d <= bound)
    }

    pub fn to_json(self) -> serde_json::Value {
        match self {
            GkValue::Finite(d) => json!(d),
            GkValue::Infinite => json!("inf"),
        }
    }
}

impl fmt::Display for GkValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GkValue::Finite(d) => write!(f, "{d}"),
            GkValue::Infinite => f.write_str("inf"),
        }
    }
}

/// GK-dimension together with the chain lengths it was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GkDimension {
    pub value: GkValue,
    /// Longest chain of cycles; `None` when the dimension is infinite.
    pub d1: Option<u32>,
    /// Longest chain ending in a cycle with an exit.
    pub d2: Option<u32>,
    pub disjoint_cycles: bool,
    pub no_exit: bool,
}

impl GkDimension {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "d1": self.d1,
            "d2": self.d2,
            "gk": self.value.to_json(),
            "disjoint_cycles": self.disjoint_cycles,
            "no_exit": self.no_exit,
        })
    }
}

/// max(2·d₁ − 1, 2·d₂) for graphs with disjoint cycles, infinite otherwise.
pub fn gk_dimension(g: &Graph) -> GkDimension {
    let no_exit = is_no_exit(g);
    match CycleChainDag::build(g) {
        None => GkDimension {
            value: GkValue::Infinite,
            d1: None,
            d2: None,
            disjoint_cycles: false,
            no_exit,
        },
        Some(dag) => {
            let (d1, d2) = (dag.longest_chain(), dag.longest_exit_chain());
            let value = (2 * i64::from(d1) - 1).max(2 * i64::from(d2)).max(0);
            GkDimension {
                value: GkValue::Finite(value as u32),
                d1: Some(d1),
                d2: Some(d2),
                disjoint_cycles: true,
                no_exit,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> Graph {
        Graph::parse(text).unwrap()
    }

    fn gk(text: &str) -> GkDimension {
        gk_dimension(&g(text))
    }

    const TOEP: &str = "vertex u\nvertex w\nedge c u u\nedge f u w";
    const CHAIN2: &str = "vertex u\nvertex v\nedge a u u\nedge g u v\nedge b v v";
    const ROSE2: &str = "vertex u\nedge p1 u u\nedge p2 u u";
    const CYCLE2: &str = "vertex u\nvertex v\nedge e1 u v\nedge e2 v u";
    const SINKFAN: &str =
        "vertex v\nvertex w1\nvertex w2\nedge e1 v w1\nedge e2 v w2\nedge f w2 w2";
    const COMET3: &str =
        "vertex v1\nvertex v2\nvertex v3\nvertex t\nedge a v1 v2\nedge b v2 v3\nedge c v3 v1\nedge d t v1";
    const TWO_LOOPS: &str = "vertex a\nvertex b\nedge x a a\nedge y b b";

    #[test]
    fn enumeration_examples() {
        let rose = g(ROSE2);
        let cycles = enumerate_cycles(&rose);
        assert_eq!(cycles.len(), 2);
        assert!(cycles.iter().all(Cycle::is_loop));
        let two = enumerate_cycles(&g(CYCLE2));
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].len(), 2);
        assert!(enumerate_cycles(&g(
            "vertex v\nvertex w1\nvertex w2\nedge a v w1\nedge b v w2"
        ))
        .is_empty());
    }

    #[test]
    fn enumeration_starts_at_smallest_vertex() {
        let c = g(COMET3);
        let cycles = enumerate_cycles(&c);
        assert_eq!(cycles.len(), 1);
        let ids: Vec<&str> = cycles[0]
            .edges
            .iter()
            .map(|&e| c.edge(e).id.as_str())
            .collect();
        assert_eq!(ids, ["a", "b", "c"]);
    }

    #[test]
    fn complete_digraph_cycle_count() {
        // K4 with all ordered pairs: 6 two-cycles, 8 three-cycles, 6 four-cycles.
        let mut text = String::new();
        for v in 0..4 {
            text += &format!("vertex {v}\n");
        }
        for a in 0..4 {
            for b in 0..4 {
                if a != b {
                    text += &format!("edge e{a}{b} {a} {b}\n");
                }
            }
        }
        assert_eq!(enumerate_cycles(&g(&text)).len(), 20);
    }

    #[test]
    fn disjointness_examples() {
        assert!(!has_disjoint_cycles(&g(ROSE2)));
        assert!(has_disjoint_cycles(&g(CHAIN2)));
        assert!(has_disjoint_cycles(&g("vertex a\nvertex b\nedge e a b")));
    }

    #[test]
    fn no_exit_examples() {
        assert!(!is_no_exit(&g(TOEP)));
        assert!(is_no_exit(&g(CYCLE2)));
        assert!(is_no_exit(&g(SINKFAN)));
    }

    #[test]
    fn gk_examples() {
        let pt = gk("vertex u");
        assert_eq!(
            (pt.value, pt.d1, pt.d2),
            (GkValue::Finite(0), Some(0), Some(0))
        );
        assert_eq!(
            gk("vertex v\nvertex w1\nvertex w2\nedge a v w1\nedge b v w2").value,
            GkValue::Finite(0)
        );
        let l = gk("vertex u\nedge c u u");
        assert_eq!(
            (l.value, l.d1, l.d2),
            (GkValue::Finite(1), Some(1), Some(0))
        );
        let t = gk(TOEP);
        assert_eq!(
            (t.value, t.d1, t.d2),
            (GkValue::Finite(2), Some(1), Some(1))
        );
        let c = gk(CHAIN2);
        assert_eq!(
            (c.value, c.d1, c.d2),
            (GkValue::Finite(3), Some(2), Some(1))
        );
        let r = gk(ROSE2);
        assert_eq!((r.value, r.d1), (GkValue::Infinite, None));
    }

    #[test]
    fn gk_json_shape() {
        assert_eq!(
            gk(TOEP).to_json().to_string(),
            r#"{"d1":1,"d2":1,"disjoint_cycles":true,"gk":2,"no_exit":false}"#
        );
        assert_eq!(gk(ROSE2).to_json()["gk"], "inf");
    }

    #[test]
    fn loops_and_points() {
        assert!(is_disjoint_vertices_and_loops(&g(
            "vertex p\nvertex u\nedge c u u"
        )));
        assert!(!is_disjoint_vertices_and_loops(&g(CYCLE2)));
        assert!(!is_disjoint_vertices_and_loops(&g(TOEP)));
        assert!(!is_disjoint_vertices_and_loops(&g(ROSE2)));
    }

    #[test]
    fn comet_examples() {
        assert!(is_comet(&g(COMET3)).unwrap());
        assert!(is_multiheaded_comet(&g(COMET3)).unwrap());
        assert!(!is_comet(&g(TWO_LOOPS)).unwrap());
        assert!(is_multiheaded_comet(&g(TWO_LOOPS)).unwrap());
        assert!(!is_comet(&g(TOEP)).unwrap());
        assert!(!is_multiheaded_comet(&g(TOEP)).unwrap());
        assert_eq!(is_comet(&g("")), Err(Error::EmptyGraph));
    }
}
