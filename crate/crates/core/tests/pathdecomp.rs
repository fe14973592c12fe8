mod common;

use common::*;
use proptest::prelude::*;
use twolayer::caterpillar::is_caterpillar;
use twolayer::generators::{gen_grid, GenCaps};
use twolayer::pathdecomp::{normalize_unique_intro, validate_pd, width, PathDecomposition, Violation};
use twolayer::pathwidth::{pathwidth_exact, vertex_separation};
use twolayer::BipartiteGraph;

fn p3() -> BipartiteGraph {
    BipartiteGraph::with_bipartition(&["v1", "v2", "v3"], &[("v1", "v2"), ("v2", "v3")]).unwrap()
}

#[test]
fn validation_examples() {
    let k2 = BipartiteGraph::new(&["u"], &["v"], &[("u", "v")]).unwrap();
    let pd = PathDecomposition::from_ids(&k2, &[vec!["u", "v"]]).unwrap();
    assert!(validate_pd(&k2, &pd).unwrap().is_empty());

    let g = p3();
    let pd = PathDecomposition::from_ids(&g, &[vec!["v1", "v2"], vec!["v3"]]).unwrap();
    let (v2, v3) = (g.index_of("v2").unwrap(), g.index_of("v3").unwrap());
    let violations = validate_pd(&g, &pd).unwrap();
    assert_eq!(violations.len(), 1);
    match violations[0] {
        Violation::EdgeUncovered { a, b } => assert_eq!([a.min(b), a.max(b)], [v2.min(v3), v2.max(v3)]),
        ref other => panic!("unexpected {other:?}"),
    }

    let g = BipartiteGraph::new(&["v", "u"], &[], &[]).unwrap();
    let pd = PathDecomposition::from_ids(&g, &[vec!["v"], vec!["u"], vec!["v"]]).unwrap();
    assert_eq!(
        validate_pd(&g, &pd).unwrap(),
        vec![Violation::NotContiguous { vertex: 0, before: 0, gap: 1, after: 2 }]
    );
}

#[test]
fn width_examples() {
    let g = p3();
    let pd = PathDecomposition::from_ids(&g, &[vec!["v1", "v2"], vec!["v2", "v3"]]).unwrap();
    assert_eq!(width(&pd).unwrap(), 1);
    assert!(width(&PathDecomposition::new(vec![])).is_err());
}

#[test]
fn staging_a_single_bag() {
    let g = BipartiteGraph::new(&["u", "w"], &["v"], &[("u", "v"), ("v", "w")]).unwrap();
    let pd = PathDecomposition::from_ids(&g, &[vec!["u", "v", "w"]]).unwrap();
    let norm = normalize_unique_intro(&g, &pd).unwrap();
    assert_eq!(norm.len(), 3);
    assert_eq!(norm.bags().iter().map(Vec::len).collect::<Vec<_>>(), [1, 2, 3]);
    assert_eq!(norm.width().unwrap(), 2);
    let again = normalize_unique_intro(&g, &norm).unwrap();
    assert_eq!(again, norm);
}

#[test]
fn pathwidth_examples() {
    let caps = GenCaps::default();
    let grid = |h| pathwidth_exact(&gen_grid(h, &caps).unwrap().0, 20).unwrap().0;
    assert_eq!(grid(3), 3);
    assert_eq!(grid(4), 4);
    for n in 2..=12 {
        for t in unlabelled_trees(n) {
            let g = tree_graph(n, &t);
            if is_caterpillar(&g).unwrap().is_some() {
                assert_eq!(pathwidth_exact(&g, 20).unwrap().0, 1);
            }
        }
    }
}

#[test]
fn pathwidth_matches_factorial_oracle() {
    for i in 0..150 {
        let d = random_drawing(5, i, 4);
        let g = d.graph();
        if g.vertex_count() > 8 {
            continue;
        }
        let (pw, order) = pathwidth_exact(g, 20).unwrap();
        assert_eq!(pw, factorial_pathwidth(g), "drawing {i}");
        assert_eq!(vertex_separation(g, &order), pw);
    }
}

#[test]
fn deleting_a_vertex_never_increases_pathwidth() {
    for i in 0..60 {
        let d = random_drawing(6, i, 6);
        let g = d.graph();
        let pw = pathwidth_exact(g, 20).unwrap().0;
        for v in 0..g.vertex_count() {
            let keep: Vec<usize> = (0..g.vertex_count()).filter(|&w| w != v).collect();
            let sub = g.induced(&keep);
            if sub.vertex_count() > 0 {
                assert!(pathwidth_exact(&sub, 20).unwrap().0 <= pw);
            }
        }
    }
}

/// A random valid decomposition: a random vertex order, then random extra
/// vertices kept alive a few bags longer.
fn arb_valid_pd() -> impl Strategy<Value = (BipartiteGraph, PathDecomposition)> {
    (arb_drawing(5, 5), any::<u64>()).prop_map(|(d, salt)| {
        let g = d.graph().clone();
        let n = g.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (v as u64).wrapping_mul(salt | 1).rotate_left(17) ^ salt);
        let base = PathDecomposition::from_vertex_order(&g, &order);
        let mut bags: Vec<Vec<usize>> = base.bags().to_vec();
        // extend a vertex's last bag forward, which keeps contiguity
        let v = order[(salt % n as u64) as usize];
        if let Some(last) = bags.iter().rposition(|b| b.contains(&v)) {
            let stop = (last + 1 + (salt >> 8) as usize % 3).min(bags.len());
            for bag in &mut bags[last..stop] {
                bag.push(v);
            }
        }
        (g, PathDecomposition::new(bags))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalisation_preserves_validity_and_width((g, pd) in arb_valid_pd()) {
        prop_assert!(validate_pd(&g, &pd).unwrap().is_empty());
        let norm = normalize_unique_intro(&g, &pd).unwrap();
        prop_assert!(validate_pd(&g, &norm).unwrap().is_empty());
        prop_assert_eq!(norm.width().unwrap(), pd.width().unwrap());
        prop_assert!(norm.intro_map(g.vertex_count()).is_injective());
    }

    #[test]
    fn exact_order_gives_a_valid_decomposition(d in arb_drawing(5, 5)) {
        let g = d.graph();
        let (pw, order) = pathwidth_exact(g, 20).unwrap();
        let pd = PathDecomposition::from_vertex_order(g, &order);
        prop_assert!(validate_pd(g, &pd).unwrap().is_empty());
        prop_assert_eq!(pd.width().unwrap(), pw);
    }
}
