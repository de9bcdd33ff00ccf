use proptest::prelude::*;

use leavitt::closure::{
    brute_force_lattice, generated_lattice, hereditary_closure, hsat_closure,
    is_hereditary_saturated,
};
use leavitt::cycles::{enumerate_cycles, gk_dimension, is_no_exit};
use leavitt::lie::{
    commutator_zero, is_lie_nilpotent, is_lie_solvable, is_lie_solvable_monoid, relation_vectors,
};
use leavitt::linalg::span_contains;
use leavitt::random::RandomGraphSpec;
use leavitt::suite::{property_suite, CheckOptions};
use leavitt::{FieldChar, Graph, GraphBuilder, VertexSet};

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    let mut b = GraphBuilder::new();
    for v in 0..n {
        b.vertex(&format!("v{v}")).unwrap();
    }
    for (i, &(s, d)) in edges.iter().enumerate() {
        b.edge(&format!("e{i}"), &format!("v{s}"), &format!("v{d}"))
            .unwrap();
    }
    b.build()
}

fn graph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |edges| build(n, &edges))
    })
}

/// Edges only run from lower to higher index, so the graph is acyclic.
fn acyclic_graph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (2..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec((0..n - 1, 1..n), 0..=max_edges).prop_map(move |pairs| {
            let edges: Vec<_> = pairs
                .into_iter()
                .map(|(a, b)| if a < b { (a, b) } else { (b, a + 1) })
                .collect();
            build(n, &edges)
        })
    })
}

fn subset(g: &Graph, mask: u64) -> VertexSet {
    let n = g.vertex_count();
    VertexSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1))
}

/// Paths ending at each sink, trivial path included: the matrix size of the
/// corresponding summand of an acyclic Leavitt path algebra.
fn paths_into_sinks(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for s in (0..n).filter(|&s| g.is_sink(s)) {
        let mut count = vec![0u64; n];
        count[s] = 1;
        // Indices respect the edge order, so a reverse sweep sees every range first.
        for v in (0..n).rev() {
            if v != s {
                count[v] = g.out_edges(v).iter().map(|&e| count[g.edge(e).dst]).sum();
            }
        }
        out.push(count.iter().sum());
    }
    out
}

/// gl_n is Lie solvable for n = 1 in every characteristic and for n = 2 in
/// characteristic 2 only.
fn matrix_sum_solvable(sizes: &[u64], p: u64) -> bool {
    sizes.iter().all(|&m| m == 1 || (m == 2 && p == 2))
}

/// Brute-force span membership over F_p by trying every coefficient tuple.
fn span_contains_by_search(rows: &[Vec<i64>], target: &[i64], p: i64) -> bool {
    let k = rows.len() as u32;
    (0..(p as u64).pow(k)).any(|code| {
        let mut c = code;
        let mut sum = vec![0i64; target.len()];
        for row in rows {
            let coef = (c % p as u64) as i64;
            c /= p as u64;
            for (s, r) in sum.iter_mut().zip(row) {
                *s += coef * r;
            }
        }
        sum.iter()
            .zip(target)
            .all(|(s, t)| (s - t).rem_euclid(p) == 0)
    })
}

fn fc(p: u64) -> FieldChar {
    FieldChar::new(p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closure_is_a_closure_operator(g in graph(7, 12), a in any::<u64>(), b in any::<u64>()) {
        let x = subset(&g, a);
        let y = x.union(&subset(&g, b));
        let cx = hsat_closure(&g, &x);
        prop_assert!(x.is_subset(&cx));
        prop_assert_eq!(hsat_closure(&g, &cx), cx.clone());
        prop_assert!(cx.is_subset(&hsat_closure(&g, &y)));
        prop_assert!(is_hereditary_saturated(&g, &cx));
    }

    #[test]
    fn text_and_json_round_trip(g in graph(7, 12)) {
        prop_assert_eq!(Graph::parse(&g.to_text()).unwrap(), g.clone());
        prop_assert_eq!(Graph::from_json(&g.to_json().to_string()).unwrap(), g);
    }

    #[test]
    fn trees_are_monotone(g in graph(7, 12)) {
        for v in 0..g.vertex_count() {
            let t = g.tree(v);
            prop_assert!(t.contains(v));
            for u in t.iter() {
                prop_assert!(g.tree(u).is_subset(&t));
            }
        }
    }

    #[test]
    fn covering_graph_is_acyclic(g in graph(5, 8), lo in -3i64..3, width in 0i64..4) {
        let cover = g.covering_graph(lo, lo + width).unwrap();
        prop_assert_eq!(cover.vertex_count(), g.vertex_count() * (width as usize + 1));
        prop_assert!(enumerate_cycles(&cover).is_empty());
    }

    #[test]
    fn exhaustive_and_generated_lattices_agree(g in graph(8, 14)) {
        let brute = brute_force_lattice(&g);
        let generated = generated_lattice(&g);
        prop_assert_eq!(&brute.elements, &generated.elements);
        prop_assert_eq!(&brute.hasse, &generated.hasse);
        prop_assert_eq!(&brute.minimal, &generated.minimal);
    }

    #[test]
    fn no_exit_graphs_have_gk_at_most_one(g in graph(6, 10)) {
        prop_assert_eq!(is_no_exit(&g), gk_dimension(&g).value.at_most(1));
    }

    #[test]
    fn acyclic_solvability_matches_matrix_sizes(g in acyclic_graph(7, 10)) {
        let sizes = paths_into_sinks(&g);
        for p in [0u64, 2, 3, 5] {
            prop_assert_eq!(is_lie_solvable(&g, fc(p)).verdict, matrix_sum_solvable(&sizes, p), "char {} sizes {:?}", p, sizes);
        }
        let abelian = sizes.iter().all(|&m| m == 1);
        prop_assert_eq!(commutator_zero(&g), abelian);
        prop_assert_eq!(is_lie_nilpotent(&g).unwrap().verdict, abelian);
    }

    #[test]
    fn odd_char_monoid_solvability_matches_matrix_sizes(g in acyclic_graph(7, 10)) {
        let sizes = paths_into_sinks(&g);
        for p in [0u64, 3, 5] {
            prop_assert_eq!(is_lie_solvable_monoid(&g, fc(p)).unwrap().verdict, matrix_sum_solvable(&sizes, p));
        }
    }

    #[test]
    fn span_membership_matches_search(g in graph(4, 6), target in prop::collection::vec(-3i64..4, 4)) {
        let rows = relation_vectors(&g);
        let t = &target[..g.vertex_count()];
        for p in [2u64, 3, 5] {
            prop_assert_eq!(span_contains(&rows, t, fc(p)), span_contains_by_search(&rows, t, p as i64));
        }
    }
}

#[test]
fn matrix_oracle_on_shared_sink() {
    let g = Graph::parse("vertex x\nvertex w\nvertex y\nedge e x w\nedge f y w\n").unwrap();
    assert_eq!(paths_into_sinks(&g), vec![3]);
    assert!(!is_lie_solvable(&g, FieldChar::TWO).verdict);
    // The char-2 monoid form reads T_E as simple non-comparable and accepts.
    assert!(is_lie_solvable_monoid(&g, FieldChar::TWO).unwrap().verdict);
}

#[test]
fn skipping_saturation_is_caught_by_the_lattice_check() {
    let opts = CheckOptions {
        closure: hereditary_closure,
        ..CheckOptions::default()
    };
    let report = property_suite(
        300,
        &RandomGraphSpec {
            seed: 9,
            ..Default::default()
        },
        &[FieldChar::ZERO],
        &opts,
    );
    let caught = report.findings_for("lattice-exhaustive-vs-generated", None);
    assert!(!caught.is_empty());
    assert!(caught.iter().all(|f| Graph::parse(&f.graph).is_ok()));
    let honest = property_suite(
        300,
        &RandomGraphSpec {
            seed: 9,
            ..Default::default()
        },
        &[FieldChar::ZERO],
        &CheckOptions::default(),
    );
    assert!(honest
        .findings_for("lattice-exhaustive-vs-generated", None)
        .is_empty());
}
