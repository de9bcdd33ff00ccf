//! Hereditary and saturated closures and the lattice of hereditary saturated
//! vertex sets. That lattice is isomorphic to the lattice of graded ideals of
//! the Leavitt path algebra and to the lattice of ℤ-order-ideals of the
//! talented monoid, so everything ideal-theoretic downstream is computed here.

use std::collections::{BTreeSet, HashMap};

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Environment variable overriding the exhaustive-enumeration vertex bound.
pub const BRUTE_FORCE_BOUND_ENV: &str = "LEAVITT_BRUTE_FORCE_BOUND";

pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 16;

/// No edge leaves `set`.
pub fn is_hereditary(g: &Graph, set: &VertexSet) -> bool {
    g.edges()
        .iter()
        .all(|e| !set.contains(e.src) || set.contains(e.dst))
}

/// Every regular vertex whose ranges all lie in `set` is itself in `set`.
pub fn is_saturated(g: &Graph, set: &VertexSet) -> bool {
    (0..g.vertex_count())
        .all(|v| set.contains(v) || g.is_sink(v) || !g.ranges(v).all(|w| set.contains(w)))
}

pub fn is_hereditary_saturated(g: &Graph, set: &VertexSet) -> bool {
    is_hereditary(g, set) && is_saturated(g, set)
}

pub fn hereditary_closure(g: &Graph, seed: &VertexSet) -> VertexSet {
    let mut set = seed.clone();
    let mut stack = seed.to_vec();
    while let Some(u) = stack.pop() {
        for w in g.ranges(u) {
            if set.insert(w) {
                stack.push(w);
            }
        }
    }
    set
}

fn saturate(g: &Graph, set: &mut VertexSet) {
    loop {
        let mut changed = false;
        for v in 0..g.vertex_count() {
            if !set.contains(v) && !g.is_sink(v) && g.ranges(v).all(|w| set.contains(w)) {
                set.insert(v);
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

/// Smallest hereditary saturated superset of `seed`.
pub fn hsat_closure(g: &Graph, seed: &VertexSet) -> VertexSet {
    let mut set = hereditary_closure(g, seed);
    // Saturation only adds vertices whose ranges are already inside, so the
    // result stays hereditary.
    saturate(g, &mut set);
    set
}

/// Vertex set of the order-ideal generated by the single vertex `v`.
pub fn order_ideal_vertices(g: &Graph, v: usize) -> VertexSet {
    hsat_closure(g, &VertexSet::singleton(g.vertex_count(), v))
}

/// How [`hsat_lattice`] enumerates the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeMode {
    /// Exhaustive up to the bound, generated above it.
    Auto,
    /// Filter all subsets; fails above the bound.
    Exhaustive,
    /// Close the singleton closures under meet and join.
    Generated,
}

#[derive(Debug, Clone, Copy)]
pub struct LatticeConfig {
    pub mode: LatticeMode,
    pub brute_force_bound: usize,
}

impl Default for LatticeConfig {
    fn default() -> Self {
        LatticeConfig {
            mode: LatticeMode::Auto,
            brute_force_bound: DEFAULT_BRUTE_FORCE_BOUND,
        }
    }
}

impl LatticeConfig {
    /// Default configuration with the bound taken from
    /// [`BRUTE_FORCE_BOUND_ENV`] when it is set to a number.
    pub fn from_env() -> Self {
        let bound = std::env::var(BRUTE_FORCE_BOUND_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_BRUTE_FORCE_BOUND);
        LatticeConfig {
            brute_force_bound: bound.min(63),
            ..Default::default()
        }
    }
}

/// The hereditary saturated subsets of a graph with their covering relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HsatLattice {
    /// Sorted by size, then lexicographically by vertex index.
    pub elements: Vec<VertexSet>,
    /// Pairs `(i, j)` with `elements[j]` covering `elements[i]`.
    pub hasse: Vec<(usize, usize)>,
    /// Indices of the minimal nonempty elements (the atoms).
    pub minimal: Vec<usize>,
}

impl HsatLattice {
    fn from_elements(g: &Graph, elements: BTreeSet<VertexSet>) -> HsatLattice {
        let elements: Vec<VertexSet> = elements.into_iter().collect();
        let index: HashMap<&VertexSet, usize> =
            elements.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut hasse = Vec::new();
        for (i, lower) in elements.iter().enumerate() {
            // Every strictly larger element contains some hsat(lower ∪ {v}),
            // so the covers are the minimal sets of that form.
            let candidates: BTreeSet<VertexSet> = lower
                .complement()
                .iter()
                .map(|v| {
                    let mut seed = lower.clone();
                    seed.insert(v);
                    hsat_closure(g, &seed)
                })
                .collect();
            for c in &candidates {
                if candidates.iter().all(|d| d == c || !d.is_subset(c)) {
                    hasse.push((i, index[c]));
                }
            }
        }
        hasse.sort_unstable();
        let minimal = hasse
            .iter()
            .filter(|&&(i, _)| elements[i].is_empty())
            .map(|&(_, j)| j)
            .collect();
        HsatLattice {
            elements,
            hasse,
            minimal,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Only ∅ and E⁰.
    pub fn is_trivial(&self) -> bool {
        self.elements.len() <= 2
    }

    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        json!({
            "elements": self.elements.iter().map(|s| g.names_of(s)).collect::<Vec<_>>(),
            "hasse": self.hasse.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
            "minimal": self.minimal,
        })
    }
}

/// The full lattice of hereditary saturated subsets.
pub fn hsat_lattice(g: &Graph, config: &LatticeConfig) -> Result<HsatLattice> {
    let n = g.vertex_count();
    let bound = config.brute_force_bound.min(63);
    let elements = match config.mode {
        LatticeMode::Exhaustive if n > bound => {
            return Err(Error::LatticeBound { vertices: n, bound });
        }
        LatticeMode::Exhaustive => brute_force_elements(g),
        LatticeMode::Auto if n <= bound => brute_force_elements(g),
        LatticeMode::Auto | LatticeMode::Generated => generated_elements(g, hsat_closure),
    };
    Ok(HsatLattice::from_elements(g, elements))
}

/// Lattice via the exhaustive filter; `g` must have at most 63 vertices.
pub fn brute_force_lattice(g: &Graph) -> HsatLattice {
    HsatLattice::from_elements(g, brute_force_elements(g))
}

/// Lattice generated from singleton closures.
pub fn generated_lattice(g: &Graph) -> HsatLattice {
    HsatLattice::from_elements(g, generated_elements(g, hsat_closure))
}

/// Element sets of the generated lattice under an arbitrary closure, used by
/// the property suite to check that a broken closure gets caught.
pub fn generated_sets_with(
    g: &Graph,
    closure: fn(&Graph, &VertexSet) -> VertexSet,
) -> BTreeSet<VertexSet> {
    generated_elements(g, closure)
}

fn brute_force_elements(g: &Graph) -> BTreeSet<VertexSet> {
    let n = g.vertex_count();
    assert!(n <= 63, "exhaustive enumeration needs at most 63 vertices");
    let edges: Vec<(u64, u64)> = g
        .edges()
        .iter()
        .map(|e| (1u64 << e.src, 1u64 << e.dst))
        .collect();
    let regular: Vec<(u64, u64)> = (0..n)
        .filter(|&v| !g.is_sink(v))
        .map(|v| (1u64 << v, g.ranges(v).fold(0u64, |m, w| m | 1 << w)))
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0..(1u64 << n) {
        let hereditary = edges.iter().all(|&(s, r)| mask & s == 0 || mask & r != 0);
        let saturated = regular
            .iter()
            .all(|&(v, rs)| mask & v != 0 || rs & !mask != 0);
        if hereditary && saturated {
            out.insert(VertexSet::from_mask(n, mask));
        }
    }
    out
}

fn generated_elements(
    g: &Graph,
    closure: fn(&Graph, &VertexSet) -> VertexSet,
) -> BTreeSet<VertexSet> {
    let n = g.vertex_count();
    let empty = VertexSet::empty(n);
    debug_assert!(is_hereditary_saturated(g, &empty));
    let mut found: BTreeSet<VertexSet> = BTreeSet::from([empty]);
    let mut all: Vec<VertexSet> = Vec::new();
    let mut pending: Vec<VertexSet> = (0..n)
        .map(|v| closure(g, &VertexSet::singleton(n, v)))
        .collect();
    while let Some(next) = pending.pop() {
        if !found.insert(next.clone()) {
            continue;
        }
        for other in &all {
            pending.push(next.intersection(other));
            pending.push(closure(g, &next.union(other)));
        }
        all.push(next);
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> Graph {
        Graph::parse(text).unwrap()
    }

    fn toep() -> Graph {
        g("vertex u\nvertex w\nedge c u u\nedge f u w")
    }

    fn comet3() -> Graph {
        g("vertex v1\nvertex v2\nvertex v3\nvertex t\nedge a v1 v2\nedge b v2 v3\nedge c v3 v1\nedge d t v1")
    }

    fn names(g: &Graph, l: &HsatLattice) -> Vec<Vec<String>> {
        l.elements.iter().map(|s| g.names_of(s)).collect()
    }

    #[test]
    fn hereditary_examples() {
        let t = toep();
        assert!(!is_hereditary(&t, &t.set_of(&["u"]).unwrap()));
        assert!(is_hereditary(&t, &t.set_of(&["w"]).unwrap()));
        assert!(is_hereditary(&t, &t.empty_set()));
        assert!(is_hereditary(&t, &t.all_vertices()));
    }

    #[test]
    fn saturated_examples() {
        let c = comet3();
        assert!(!is_saturated(&c, &c.set_of(&["v1", "v2", "v3"]).unwrap()));
        let t = toep();
        assert!(is_saturated(&t, &t.set_of(&["w"]).unwrap()));
        assert!(is_saturated(&t, &t.all_vertices()));
    }

    #[test]
    fn closure_examples() {
        let t = toep();
        assert_eq!(
            t.names_of(&hsat_closure(&t, &t.set_of(&["u"]).unwrap())),
            ["u", "w"]
        );
        let c = comet3();
        assert_eq!(
            hsat_closure(&c, &c.set_of(&["v1"]).unwrap()),
            c.all_vertices()
        );
        assert!(hsat_closure(&c, &c.empty_set()).is_empty());
    }

    #[test]
    fn lattice_examples() {
        let t = toep();
        let l = hsat_lattice(&t, &LatticeConfig::default()).unwrap();
        assert_eq!(
            names(&t, &l),
            vec![vec![], vec!["w".to_string()], vec!["u".into(), "w".into()]]
        );
        assert_eq!(l.minimal, vec![1]);
        assert_eq!(l.hasse, vec![(0, 1), (1, 2)]);

        let rose = g("vertex u\nedge p1 u u\nedge p2 u u");
        let l = hsat_lattice(&rose, &LatticeConfig::default()).unwrap();
        assert_eq!(l.len(), 2);
        assert!(l.is_trivial());

        let two_sinks = g("vertex v\nvertex w1\nvertex w2\nedge a v w1\nedge b v w2");
        let l = hsat_lattice(&two_sinks, &LatticeConfig::default()).unwrap();
        let expect: Vec<Vec<String>> = vec![
            vec![],
            vec!["w1".into()],
            vec!["w2".into()],
            vec!["v".into(), "w1".into(), "w2".into()],
        ];
        // {w1, w2} is not saturated: v is regular and emits only into it.
        assert_eq!(names(&two_sinks, &l), expect);
        assert_eq!(l.minimal, vec![1, 2]);
        assert_eq!(l.hasse, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn lattice_modes() {
        let t = toep();
        let tight = LatticeConfig {
            mode: LatticeMode::Exhaustive,
            brute_force_bound: 1,
        };
        assert_eq!(
            hsat_lattice(&t, &tight),
            Err(Error::LatticeBound {
                vertices: 2,
                bound: 1
            })
        );
        let auto = LatticeConfig {
            mode: LatticeMode::Auto,
            brute_force_bound: 1,
        };
        assert_eq!(hsat_lattice(&t, &auto).unwrap(), brute_force_lattice(&t));
        assert_eq!(generated_lattice(&t), brute_force_lattice(&t));
    }

    #[test]
    fn order_ideal_examples() {
        let l = g("vertex u\nedge c u u");
        assert_eq!(l.names_of(&order_ideal_vertices(&l, 0)), ["u"]);
        let t = toep();
        assert_eq!(t.names_of(&order_ideal_vertices(&t, 0)), ["u", "w"]);
        let two = g("vertex u\nvertex v\nedge e1 u v\nedge e2 v u");
        assert_eq!(two.names_of(&order_ideal_vertices(&two, 0)), ["u", "v"]);
    }

    #[test]
    fn lattice_json_shape() {
        let t = toep();
        let v = hsat_lattice(&t, &LatticeConfig::default())
            .unwrap()
            .to_json(&t);
        assert_eq!(
            v.to_string(),
            r#"{"elements":[[],["w"],["u","w"]],"hasse":[[0,1],[1,2]],"minimal":[1]}"#
        );
    }
}
