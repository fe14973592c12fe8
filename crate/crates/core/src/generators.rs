//! Example graph families with canonical ids and drawings.
//!
//! The tree and grid drawings order each layer level by level (depth for the
//! tree, anti-diagonal for the grid). Edges between the same pair of
//! consecutive levels never cross each other, and only edges of adjacent level
//! pairs can cross, so colouring an edge by the parity of its upper level
//! gives two non-crossing classes and hence no 3-crossing.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side, TwoLayerDrawing, VertexIndex};

/// Guards against accidentally huge instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenCaps {
    pub max_height: usize,
    pub max_count: usize,
}

impl Default for GenCaps {
    fn default() -> Self {
        GenCaps {
            max_height: 10,
            max_count: 10_000,
        }
    }
}

fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::SizeCap { what, value, cap })
    } else {
        Ok(())
    }
}

/// Complete binary tree with `h` levels below the root (2^(h+1) - 1 vertices).
///
/// Ids are `r`, `r.0`, `r.1`, `r.0.0`, ...; even depths go to side A.
pub fn gen_complete_binary_tree(h: usize, caps: &GenCaps) -> Result<(BipartiteGraph, TwoLayerDrawing)> {
    check_cap("height", h, caps.max_height)?;
    let (names, sides, edges, _) = binary_tree_parts(h);
    let graph = BipartiteGraph::from_parts(names, sides, &edges)?;
    // vertex indices are already in level order
    let drawing = TwoLayerDrawing::identity(graph.clone());
    Ok((graph, drawing))
}

/// Edge colours (0/1) of the tree drawing, aligned with the generator's edge order.
pub fn binary_tree_edge_colours(h: usize) -> Vec<u8> {
    binary_tree_parts(h).3
}

type Parts = (Vec<String>, Vec<Side>, Vec<(VertexIndex, VertexIndex)>, Vec<u8>);

fn binary_tree_parts(h: usize) -> Parts {
    // level order: vertex i has children 2i+1, 2i+2
    let n = (1usize << (h + 1)) - 1;
    let mut names = Vec::with_capacity(n);
    let mut depth = Vec::with_capacity(n);
    names.push("r".to_string());
    depth.push(0usize);
    for i in 1..n {
        let parent = (i - 1) / 2;
        let child = (i - 1) % 2;
        names.push(format!("{}.{}", names[parent], child));
        depth.push(depth[parent] + 1);
    }
    let sides = depth.iter().map(|d| if d % 2 == 0 { Side::A } else { Side::B }).collect();
    let edges = (1..n).map(|i| ((i - 1) / 2, i)).collect();
    let colours = (1..n).map(|i| (depth[(i - 1) / 2] % 2) as u8).collect();
    (names, sides, edges, colours)
}

/// The `h`×`h` grid with ids `(i,j)`; vertices with even `i+j` go to side A.
pub fn gen_grid(h: usize, caps: &GenCaps) -> Result<(BipartiteGraph, TwoLayerDrawing)> {
    if h == 0 {
        return Err(Error::InvalidParameter("grid side length must be at least 1".into()));
    }
    check_cap("grid side", h, caps.max_height)?;
    let (names, sides, edges, _) = grid_parts(h);
    let graph = BipartiteGraph::from_parts(names, sides, &edges)?;
    // vertex index is row-major; level order sorts by (i+j, i)
    let key = |v: VertexIndex| (v / h + v % h, v / h);
    let mut order_a: Vec<_> = graph.vertices_on(Side::A).collect();
    let mut order_b: Vec<_> = graph.vertices_on(Side::B).collect();
    order_a.sort_by_key(|&v| key(v));
    order_b.sort_by_key(|&v| key(v));
    let drawing = TwoLayerDrawing::new(graph.clone(), order_a, order_b)?;
    Ok((graph, drawing))
}

/// Edge colours (0/1) of the grid drawing, aligned with the generator's edge order.
pub fn grid_edge_colours(h: usize) -> Vec<u8> {
    grid_parts(h).3
}

fn grid_parts(h: usize) -> Parts {
    let idx = |i: usize, j: usize| i * h + j;
    let mut names = Vec::with_capacity(h * h);
    let mut sides = Vec::with_capacity(h * h);
    let mut edges = Vec::new();
    let mut colours = Vec::new();
    for i in 0..h {
        for j in 0..h {
            names.push(format!("({i},{j})"));
            sides.push(if (i + j) % 2 == 0 { Side::A } else { Side::B });
            // both neighbours below/right sit on diagonal i+j+1
            let colour = ((i + j) % 2) as u8;
            if j + 1 < h {
                edges.push((idx(i, j), idx(i, j + 1)));
                colours.push(colour);
            }
            if i + 1 < h {
                edges.push((idx(i, j), idx(i + 1, j)));
                colours.push(colour);
            }
        }
    }
    (names, sides, edges, colours)
}

/// 1-subdivision of the star with `n` leaves: centre `c`, subdivision
/// vertices `s1..sn` (side B) and leaves `l1..ln` (side A).
pub fn gen_subdivided_star(n: usize, caps: &GenCaps) -> Result<BipartiteGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("star needs at least one leaf".into()));
    }
    check_cap("leaf count", n, caps.max_count)?;
    let mut a = vec!["c".to_string()];
    a.extend((1..=n).map(|i| format!("l{i}")));
    let b: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    let mut edges = Vec::with_capacity(2 * n);
    for i in 1..=n {
        edges.push(("c".to_string(), format!("s{i}")));
        edges.push((format!("s{i}"), format!("l{i}")));
    }
    BipartiteGraph::new(&a, &b, &edges)
}

/// Fan drawing of the subdivided star: centre leftmost on layer A, then the
/// leaves in the same order as their subdivision vertices on layer B.
pub fn subdivided_star_fan(n: usize, caps: &GenCaps) -> Result<TwoLayerDrawing> {
    let g = gen_subdivided_star(n, caps)?;
    Ok(TwoLayerDrawing::identity(g))
}

/// Random bipartite graph with `na` + `nb` vertices (`a0..`, `b0..`); each
/// A-B pair is an edge with probability `p`. Layer orders are uniform random
/// permutations drawn from the same ChaCha8 stream, so equal seeds give
/// identical output.
pub fn gen_random(na: usize, nb: usize, p: f64, seed: u64) -> Result<(BipartiteGraph, TwoLayerDrawing)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gen_random_with(na, nb, p, &mut rng)
}

pub fn gen_random_with<R: Rng>(
    na: usize,
    nb: usize,
    p: f64,
    rng: &mut R,
) -> Result<(BipartiteGraph, TwoLayerDrawing)> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0,1]")));
    }
    let mut names = Vec::with_capacity(na + nb);
    let mut sides = Vec::with_capacity(na + nb);
    for i in 0..na {
        names.push(format!("a{i}"));
        sides.push(Side::A);
    }
    for j in 0..nb {
        names.push(format!("b{j}"));
        sides.push(Side::B);
    }
    let mut edges = Vec::new();
    for i in 0..na {
        for j in 0..nb {
            if rng.gen_bool(p) {
                edges.push((i, na + j));
            }
        }
    }
    let graph = BipartiteGraph::from_parts(names, sides, &edges)?;
    let mut order_a: Vec<_> = (0..na).collect();
    let mut order_b: Vec<_> = (na..na + nb).collect();
    order_a.shuffle(rng);
    order_b.shuffle(rng);
    let drawing = TwoLayerDrawing::new(graph.clone(), order_a, order_b)?;
    Ok((graph, drawing))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caterpillar::is_caterpillar;

    #[test]
    fn tree_sizes_and_ids() {
        let caps = GenCaps::default();
        let (g, _) = gen_complete_binary_tree(0, &caps).unwrap();
        assert_eq!(g.vertex_count(), 1);
        let (g, d) = gen_complete_binary_tree(3, &caps).unwrap();
        assert_eq!(g.vertex_count(), 15);
        assert_eq!(g.edge_count(), 14);
        assert!(g.index_of("r.1.0.1").is_some());
        assert_eq!(d.graph().side(g.index_of("r.0").unwrap()), Side::B);
        assert!(matches!(
            gen_complete_binary_tree(11, &caps),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn grid_shape() {
        let caps = GenCaps::default();
        let (g, _) = gen_grid(1, &caps).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let (g, _) = gen_grid(2, &caps).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        let (g, _) = gen_grid(5, &caps).unwrap();
        assert_eq!(g.edge_count(), 2 * 5 * 4);
        assert!(gen_grid(0, &caps).is_err());
    }

    #[test]
    fn star_shapes() {
        let caps = GenCaps::default();
        let s1 = gen_subdivided_star(1, &caps).unwrap();
        assert_eq!(s1.vertex_count(), 3);
        assert!(is_caterpillar(&s1).unwrap().is_some());
        let s3 = gen_subdivided_star(3, &caps).unwrap();
        assert_eq!(s3.vertex_count(), 7);
        assert_eq!(is_caterpillar(&s3).unwrap(), None);
        let s9 = gen_subdivided_star(9, &caps).unwrap();
        assert_eq!((s9.vertex_count(), s9.edge_count()), (19, 18));
        assert_eq!(s9.side(s9.index_of("c").unwrap()), Side::A);
        assert_eq!(s9.side(s9.index_of("l9").unwrap()), Side::A);
        assert_eq!(s9.side(s9.index_of("s9").unwrap()), Side::B);
    }

    #[test]
    fn random_is_deterministic() {
        let (g0, _) = gen_random(0, 0, 0.5, 1).unwrap();
        assert_eq!(g0.vertex_count(), 0);
        let (k33, _) = gen_random(3, 3, 1.0, 99).unwrap();
        assert_eq!(k33.edge_count(), 9);
        let x = gen_random(5, 5, 0.5, 12345).unwrap();
        let y = gen_random(5, 5, 0.5, 12345).unwrap();
        assert_eq!(x, y);
        assert!(gen_random(2, 2, 1.5, 0).is_err());
    }
}
