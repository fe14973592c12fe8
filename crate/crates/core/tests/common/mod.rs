//! Independent brute-force oracles shared by the integration tests. None of
//! these call into the algorithms they are used to check.

#![allow(dead_code)]

use std::collections::HashSet;

use itertools::Itertools;
use twolayer::generators::gen_random;
use twolayer::{BipartiteGraph, Side, TwoLayerDrawing};

/// Edge coordinates `(posA, posB)` read straight off the layer orders.
pub fn raw_coords(d: &TwoLayerDrawing) -> Vec<(usize, usize)> {
    let g = d.graph();
    let pos = |order: &[usize], v: usize| order.iter().position(|&w| w == v).unwrap();
    g.edges()
        .iter()
        .map(|&(a, b)| (pos(d.order_a(), a), pos(d.order_b(), b)))
        .collect()
}

pub fn raw_cross(p: (usize, usize), q: (usize, usize)) -> bool {
    (p.0 < q.0 && p.1 > q.1) || (p.0 > q.0 && p.1 < q.1)
}

pub fn crossing_pairs(d: &TwoLayerDrawing) -> usize {
    let c = raw_coords(d);
    c.iter().tuple_combinations().filter(|(p, q)| raw_cross(**p, **q)).count()
}

/// Largest set of pairwise crossing edges, by subset enumeration.
pub fn naive_max_crossing(d: &TwoLayerDrawing) -> usize {
    let c = raw_coords(d);
    let m = c.len();
    assert!(m <= 16);
    (0u32..1 << m)
        .filter(|&mask| {
            let idx: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            idx.iter().tuple_combinations().all(|(&i, &j)| raw_cross(c[i], c[j]))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Does any pair of layer orders draw `g` without crossings?
pub fn has_crossing_free_drawing(g: &BipartiteGraph) -> bool {
    let a: Vec<usize> = g.vertices_on(Side::A).collect();
    let b: Vec<usize> = g.vertices_on(Side::B).collect();
    a.iter().copied().permutations(a.len()).any(|oa| {
        b.iter().copied().permutations(b.len()).any(|ob| {
            let d = TwoLayerDrawing::new(g.clone(), oa.clone(), ob).unwrap();
            crossing_pairs(&d) == 0
        })
    })
}

/// Minimum vertex separation over every vertex order.
pub fn factorial_pathwidth(g: &BipartiteGraph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 9);
    (0..n)
        .permutations(n)
        .map(|order| {
            let mut pos = vec![0; n];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            (0..n)
                .map(|i| {
                    order[..=i]
                        .iter()
                        .filter(|&&u| g.edges().iter().any(|&(x, y)| {
                            (x == u && pos[y] > i) || (y == u && pos[x] > i)
                        }))
                        .count()
                })
                .max()
                .unwrap()
        })
        .min()
        .unwrap()
}

/// Every achievable `(s,t)` with `s, t <= cap`, by full enumeration of
/// pairs of non-crossing matchings.
pub fn naive_st_pairs(d: &TwoLayerDrawing, cap: usize) -> HashSet<(usize, usize)> {
    let g = d.graph();
    let c = raw_coords(d);
    let m = c.len();
    assert!(m <= 12);
    let matchings: Vec<u32> = (1u32..1 << m)
        .filter(|mask| mask.count_ones() as usize <= cap)
        .filter(|&mask| {
            let idx: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            idx.iter().tuple_combinations().all(|(&i, &j)| {
                let (e, f) = (g.edges()[i], g.edges()[j]);
                e.0 != f.0 && e.1 != f.1 && !raw_cross(c[i], c[j])
            })
        })
        .collect();
    let crosses: Vec<u32> = (0..m)
        .map(|i| (0..m).filter(|&j| raw_cross(c[i], c[j])).fold(0, |acc, j| acc | 1 << j))
        .collect();
    let mut out = HashSet::new();
    for &s in &matchings {
        let common = (0..m).filter(|&i| s >> i & 1 == 1).fold(u32::MAX, |acc, i| acc & crosses[i]);
        for &t in &matchings {
            if t & !common == 0 {
                out.insert((s.count_ones() as usize, t.count_ones() as usize));
            }
        }
    }
    out
}

/// Unlabelled trees on exactly `n` vertices, one edge list per isomorphism class.
pub fn unlabelled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for size in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..size {
                let mut grown = t.clone();
                grown.push((v, size));
                if seen.insert(canonical(size + 1, &grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

fn canonical(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // strip leaves down to the one or two centres
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &w in &adj[v] {
                if deg[w] > 0 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| encode(adj, w, v)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer.iter().map(|&c| encode(&adj, c, usize::MAX)).min().unwrap()
}

pub fn tree_graph(n: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let e: Vec<(String, String)> = edges.iter().map(|&(u, v)| (names[u].clone(), names[v].clone())).collect();
    BipartiteGraph::with_bipartition(&names, &e).unwrap()
}

/// Random drawing `index` of a reproducible family with sides in `1..=max_side`.
pub fn random_drawing(seed: u64, index: u64, max_side: usize) -> TwoLayerDrawing {
    let h = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ index;
    let na = 1 + (h % max_side as u64) as usize;
    let nb = 1 + ((h / 97) % max_side as u64) as usize;
    let p = [0.1, 0.2, 0.35, 0.5, 0.8][(index % 5) as usize];
    gen_random(na, nb, p, h).unwrap().1
}

/// Random drawing with between 1 and `max_edges` edges.
pub fn random_small_drawing(seed: u64, index: u64, max_edges: usize) -> TwoLayerDrawing {
    let mut k = 0;
    loop {
        let d = random_drawing(seed, index * 1000 + k, 6);
        if (1..=max_edges).contains(&d.graph().edge_count()) {
            return d;
        }
        k += 1;
    }
}

/// Strategy for arbitrary drawings with the given side bounds.
pub fn arb_drawing(max_a: usize, max_b: usize) -> impl proptest::strategy::Strategy<Value = TwoLayerDrawing> {
    use proptest::prelude::*;
    (1..=max_a, 1..=max_b)
        .prop_flat_map(|(na, nb)| {
            (
                proptest::collection::vec(proptest::bool::weighted(0.3), na * nb),
                Just((0..na).collect::<Vec<usize>>()).prop_shuffle(),
                Just((0..nb).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(mask, oa, ob)| {
            let (na, nb) = (oa.len(), ob.len());
            let a: Vec<String> = (0..na).map(|i| format!("a{i}")).collect();
            let b: Vec<String> = (0..nb).map(|j| format!("b{j}")).collect();
            let edges: Vec<(String, String)> = (0..na)
                .flat_map(|i| (0..nb).map(move |j| (i, j)))
                .filter(|&(i, j)| mask[i * nb + j])
                .map(|(i, j)| (a[i].clone(), b[j].clone()))
                .collect();
            let g = BipartiteGraph::new(&a, &b, &edges).unwrap();
            // vertex indices: A first, then B
            let ob: Vec<usize> = ob.into_iter().map(|j| na + j).collect();
            TwoLayerDrawing::new(g, oa, ob).unwrap()
        })
}

/// Strategy for drawings with at most `max_edges` edges.
pub fn arb_small_drawing(max_side: usize, max_edges: usize) -> impl proptest::strategy::Strategy<Value = TwoLayerDrawing> {
    use proptest::prelude::*;
    arb_drawing(max_side, max_side).prop_filter("too many edges", move |d| d.graph().edge_count() <= max_edges)
}
