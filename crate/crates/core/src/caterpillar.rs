//! Caterpillar recognition and crossing-free 2-layer layouts.

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side, TwoLayerDrawing, VertexIndex};

/// Decides whether a connected graph is a caterpillar.
///
/// Returns `Some(spine)` when it is, where the spine is the path left after
/// deleting every degree-1 vertex, listed from one end to the other. The spine
/// is empty for a single edge and a single vertex for a star.
pub fn is_caterpillar(graph: &BipartiteGraph) -> Result<Option<Vec<VertexIndex>>> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    if graph.edge_count() != n - 1 {
        return Ok(None);
    }
    let on_spine: Vec<bool> = (0..n).map(|v| graph.degree(v) != 1).collect();
    let spine_deg = |v: VertexIndex| graph.neighbors(v).iter().filter(|&&w| on_spine[w]).count();
    let spine_vertices: Vec<VertexIndex> = (0..n).filter(|&v| on_spine[v]).collect();
    if spine_vertices.is_empty() {
        // a single edge
        return Ok(Some(Vec::new()));
    }
    if spine_vertices.iter().any(|&v| spine_deg(v) > 2) {
        return Ok(None);
    }
    let Some(&start) = spine_vertices.iter().find(|&&v| spine_deg(v) <= 1) else {
        // every spine vertex has two spine neighbours: impossible in a tree
        return Ok(None);
    };
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = graph
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| on_spine[w] && w != prev);
        match next {
            Some(w) => {
                spine.push(w);
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    debug_assert_eq!(spine.len(), spine_vertices.len());
    Ok(Some(spine))
}

/// True when every connected component is a caterpillar (isolated vertices included).
pub fn is_caterpillar_forest(graph: &BipartiteGraph) -> bool {
    graph.components().iter().all(|comp| {
        let sub = graph.induced(comp);
        matches!(is_caterpillar(&sub), Ok(Some(_)))
    })
}

/// Lays a caterpillar out on two layers with no crossings.
///
/// Walks the spine; each spine vertex is appended to its layer and is followed
/// on the opposite layer by its leaves and then by the next spine vertex. Every
/// edge then has both endpoint ranks non-decreasing along the walk.
pub fn caterpillar_layout(graph: &BipartiteGraph) -> Result<TwoLayerDrawing> {
    let spine = is_caterpillar(graph)?.ok_or(Error::NotCaterpillar)?;
    let mut order_a = Vec::new();
    let mut order_b = Vec::new();
    let mut push = |v: VertexIndex| match graph.side(v) {
        Side::A => order_a.push(v),
        Side::B => order_b.push(v),
    };
    if spine.is_empty() {
        // single edge
        let (a, b) = graph.edges()[0];
        push(a);
        push(b);
    } else {
        let mut on_spine = vec![false; graph.vertex_count()];
        for &s in &spine {
            on_spine[s] = true;
        }
        for &s in &spine {
            push(s);
            let mut leaves: Vec<VertexIndex> =
                graph.neighbors(s).iter().copied().filter(|&w| !on_spine[w]).collect();
            leaves.sort_unstable();
            for leaf in leaves {
                push(leaf);
            }
        }
    }
    TwoLayerDrawing::new(graph.clone(), order_a, order_b)
}
