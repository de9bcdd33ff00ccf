//! Finite directed multigraphs and the elementary constructions on them.
//!
//! Vertices and edges carry arbitrary non-whitespace ids and are stored in
//! declaration order; every set-valued result is reported in that order.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::closure;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: usize,
    pub dst: usize,
}

/// An immutable finite directed multigraph.
#[derive(Debug, Clone)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, usize>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

/// Incremental construction with the same validation as the parsers.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    vertices: Vec<String>,
    vertex_index: HashMap<String, usize>,
    edges: Vec<Edge>,
    edge_ids: HashMap<String, usize>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, id: &str) -> Result<usize> {
        self.vertex_at(id, 0)
    }

    fn vertex_at(&mut self, id: &str, line: usize) -> Result<usize> {
        check_token(id, line)?;
        if self.vertex_index.contains_key(id) {
            return Err(Error::DuplicateVertex {
                line,
                id: id.to_string(),
            });
        }
        let idx = self.vertices.len();
        self.vertices.push(id.to_string());
        self.vertex_index.insert(id.to_string(), idx);
        Ok(idx)
    }

    pub fn edge(&mut self, id: &str, src: &str, dst: &str) -> Result<usize> {
        self.edge_at(id, src, dst, 0)
    }

    fn edge_at(&mut self, id: &str, src: &str, dst: &str, line: usize) -> Result<usize> {
        check_token(id, line)?;
        if self.edge_ids.contains_key(id) {
            return Err(Error::DuplicateEdge {
                line,
                id: id.to_string(),
            });
        }
        let lookup = |v: &str| {
            self.vertex_index
                .get(v)
                .copied()
                .ok_or_else(|| Error::UndeclaredVertex {
                    line,
                    edge: id.to_string(),
                    vertex: v.to_string(),
                })
        };
        let (s, r) = (lookup(src)?, lookup(dst)?);
        let idx = self.edges.len();
        self.edges.push(Edge {
            id: id.to_string(),
            src: s,
            dst: r,
        });
        self.edge_ids.insert(id.to_string(), idx);
        Ok(idx)
    }

    pub fn build(self) -> Graph {
        Graph::from_parts(self.vertices, self.edges)
    }
}

fn check_token(id: &str, line: usize) -> Result<()> {
    if id.is_empty() || id.chars().any(char::is_whitespace) || id.starts_with('#') {
        return Err(Error::Malformed {
            line,
            message: format!("invalid id `{id}`"),
        });
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    vertices: Vec<String>,
    edges: Vec<JsonEdge>,
}

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    id: String,
    src: String,
    dst: String,
}

/// Sinks, sources, regular and isolated vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClassification {
    pub sinks: VertexSet,
    pub sources: VertexSet,
    pub regular: VertexSet,
    pub isolated: VertexSet,
}

impl Graph {
    fn from_parts(vertices: Vec<String>, edges: Vec<Edge>) -> Graph {
        let n = vertices.len();
        let vertex_index = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let mut out_edges = vec![Vec::new(); n];
        let mut in_edges = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.src].push(i);
            in_edges[e.dst].push(i);
        }
        Graph {
            vertices,
            edges,
            vertex_index,
            out_edges,
            in_edges,
        }
    }

    /// Parses the line format: `vertex <id>`, `edge <id> <src> <dst>`,
    /// `#` comments and blank lines. Vertices may be declared after the
    /// edges that use them.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut builder = GraphBuilder::new();
        let mut pending = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let tokens: Vec<&str> = raw
                .split_whitespace()
                .take_while(|t| !t.starts_with('#'))
                .collect();
            match tokens.as_slice() {
                [] => {}
                ["vertex", id] => {
                    builder.vertex_at(id, line)?;
                }
                ["edge", id, src, dst] => pending.push((line, *id, *src, *dst)),
                ["vertex", ..] => {
                    return Err(Error::Malformed {
                        line,
                        message: "expected `vertex <id>`".into(),
                    })
                }
                ["edge", ..] => {
                    return Err(Error::Malformed {
                        line,
                        message: "expected `edge <id> <src> <dst>`".into(),
                    })
                }
                [kw, ..] => {
                    return Err(Error::Malformed {
                        line,
                        message: format!("unknown declaration `{kw}`"),
                    })
                }
            }
        }
        for (line, id, src, dst) in pending {
            builder.edge_at(id, src, dst, line)?;
        }
        Ok(builder.build())
    }

    /// Parses `{"vertices":[...],"edges":[{"id":..,"src":..,"dst":..}]}`.
    pub fn from_json(text: &str) -> Result<Graph> {
        let raw: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let mut builder = GraphBuilder::new();
        for v in &raw.vertices {
            builder.vertex(v)?;
        }
        for e in &raw.edges {
            builder.edge(&e.id, &e.src, &e.dst)?;
        }
        Ok(builder.build())
    }

    /// Picks the JSON reader when the document starts with `{`.
    pub fn parse_any(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            Graph::from_json(text)
        } else {
            Graph::parse(text)
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let _ = writeln!(out, "vertex {v}");
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "edge {} {} {}",
                e.id, self.vertices[e.src], self.vertices[e.dst]
            );
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let raw = JsonGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| JsonEdge {
                    id: e.id.clone(),
                    src: self.vertices[e.src].clone(),
                    dst: self.vertices[e.dst].clone(),
                })
                .collect(),
        };
        serde_json::to_value(raw).expect("graph serializes")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    /// s⁻¹(v), as edge indices.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    /// r⁻¹(v), as edge indices.
    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_edges[v].is_empty()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].src == self.edges[e].dst
    }

    /// Range vertices of the out-edges of `v`, with multiplicity.
    pub fn ranges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_edges[v].iter().map(move |&e| self.edges[e].dst)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.vertex_count())
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn set_of(&self, names: &[&str]) -> Result<VertexSet> {
        let mut s = self.empty_set();
        for n in names {
            s.insert(self.vertex(n)?);
        }
        Ok(s)
    }

    pub fn names_of(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.vertices[v].clone()).collect()
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.universe() != self.vertex_count() {
            return Err(Error::UniverseMismatch {
                expected: self.vertex_count(),
                found: set.universe(),
            });
        }
        Ok(())
    }

    pub fn classify_vertices(&self) -> VertexClassification {
        let n = self.vertex_count();
        let sinks = VertexSet::from_indices(n, (0..n).filter(|&v| self.out_edges[v].is_empty()));
        let sources = VertexSet::from_indices(n, (0..n).filter(|&v| self.in_edges[v].is_empty()));
        let regular = sinks.complement();
        let isolated = sinks.intersection(&sources);
        VertexClassification {
            sinks,
            sources,
            regular,
            isolated,
        }
    }

    /// E(X, Y): edges with source in `x` and range in `y`.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| x.contains(e.src) && y.contains(e.dst))
            .map(|(i, _)| i)
            .collect()
    }

    /// Vertices reachable from `v`, including `v` itself.
    pub fn tree(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(self.vertex_count(), v);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for w in self.ranges(u) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Whether the underlying undirected graph is connected.
    pub fn is_connected(&self) -> Result<bool> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = n;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.src), find(&mut parent, e.dst));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        Ok(components == 1)
    }

    /// Quotient graph H₂/H₁: vertices H₂∖H₁, edges with source in H₂ and
    /// range outside H₁.
    pub fn quotient_graph(&self, upper: &VertexSet, lower: &VertexSet) -> Result<Graph> {
        self.quotient_with_map(upper, lower).map(|(g, _)| g)
    }

    /// Quotient graph together with the original index of each of its vertices.
    pub(crate) fn quotient_with_map(
        &self,
        upper: &VertexSet,
        lower: &VertexSet,
    ) -> Result<(Graph, Vec<usize>)> {
        self.check_set(upper)?;
        self.check_set(lower)?;
        if !lower.is_subset(upper) {
            return Err(Error::NotNested);
        }
        for h in [upper, lower] {
            if !closure::is_hereditary(self, h) || !closure::is_saturated(self, h) {
                return Err(Error::NotHereditarySaturated);
            }
        }
        let keep = upper.difference(lower);
        let edges = self
            .edges
            .iter()
            .filter(|e| upper.contains(e.src) && !lower.contains(e.dst))
            .cloned()
            .collect::<Vec<_>>();
        Ok(self.induced(&keep, edges))
    }

    /// Subgraph on a hereditary set, keeping every edge that starts in it.
    pub fn restriction(&self, set: &VertexSet) -> Result<Graph> {
        self.restriction_with_map(set).map(|(g, _)| g)
    }

    pub(crate) fn restriction_with_map(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(set)?;
        if !closure::is_hereditary(self, set) {
            return Err(Error::NotHereditary);
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| set.contains(e.src))
            .cloned()
            .collect();
        Ok(self.induced(set, edges))
    }

    /// Relabels `edges` (all inside `keep`) onto the vertex subset `keep`.
    fn induced(&self, keep: &VertexSet, edges: Vec<Edge>) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.to_vec();
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in map.iter().enumerate() {
            new_index[v] = i;
        }
        let vertices = map.iter().map(|&v| self.vertices[v].clone()).collect();
        let edges = edges
            .into_iter()
            .map(|e| Edge {
                id: e.id,
                src: new_index[e.src],
                dst: new_index[e.dst],
            })
            .collect();
        (Graph::from_parts(vertices, edges), map)
    }

    /// The window `[lo, hi]` of the ℤ-indexed covering graph: copies `v@n`
    /// and edges `e@n : s(e)@n → r(e)@(n+1)` whose range lies in the window.
    pub fn covering_graph(&self, lo: i64, hi: i64) -> Result<Graph> {
        if lo > hi {
            return Err(Error::InvalidWindow { lo, hi });
        }
        let width = (hi - lo + 1) as usize;
        let n = self.vertex_count();
        let mut vertices = Vec::with_capacity(n * width);
        for level in lo..=hi {
            for v in &self.vertices {
                vertices.push(format!("{v}@{level}"));
            }
        }
        let at = |v: usize, level: i64| (level - lo) as usize * n + v;
        let mut edges = Vec::new();
        for level in lo..hi {
            for e in &self.edges {
                edges.push(Edge {
                    id: format!("{}@{level}", e.id),
                    src: at(e.src, level),
                    dst: at(e.dst, level + 1),
                });
            }
        }
        Ok(Graph::from_parts(vertices, edges))
    }
}
