//! Path-decomposition to drawing.
//!
//! After making introduction bags distinct, every vertex is placed at the
//! index of its first bag on its own layer. For a width-`k` decomposition the
//! resulting drawing has no `(k+2)`-crossing and no `(k+1,k+1)`-crossing;
//! both facts are re-verified on every call.

use serde::Serialize;

use crate::analysis::{edges_cross, max_crossing_set, st_crossing_exists, CrossingWitness, StCaps};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EdgeIndex, Side, TwoLayerDrawing, VertexIndex};
use crate::pathdecomp::{normalize_unique_intro, PathDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayoutCertificate {
    /// Width of the input decomposition.
    pub k: usize,
    /// Introduction bag of every vertex in the normalised decomposition, by vertex index.
    pub intro: Vec<usize>,
    pub max_crossing: usize,
    pub no_k_plus_2_crossing: bool,
    pub no_k_plus_1_st_crossing: bool,
    pub st_edge_cap: usize,
}

/// Lays out `graph` from `pd`. Fails on an invalid decomposition, or if the
/// produced drawing does not verify, which would be an implementation bug.
pub fn layout(
    graph: &BipartiteGraph,
    pd: &PathDecomposition,
    caps: &StCaps,
) -> Result<(TwoLayerDrawing, LayoutCertificate)> {
    let k = pd.width()?;
    let norm = normalize_unique_intro(graph, pd)?;
    let drawing = layout_normalized(graph, &norm)?;
    let intro_map = norm.intro_map(graph.vertex_count());
    let intro: Vec<usize> = (0..graph.vertex_count()).map(|v| intro_map.first(v)).collect();

    let (max_crossing, witness) = max_crossing_set(&drawing);
    if max_crossing > k + 1 {
        return Err(Error::LayoutVerification(format!(
            "found a {max_crossing}-crossing {witness:?} from a width-{k} decomposition"
        )));
    }
    if let Some(w) = st_crossing_exists(&drawing, k + 1, k + 1, caps)? {
        return Err(Error::LayoutVerification(format!(
            "found a ({0},{0})-crossing {w:?} from a width-{k} decomposition",
            k + 1
        )));
    }
    let cert = LayoutCertificate {
        k,
        intro,
        max_crossing,
        no_k_plus_2_crossing: true,
        no_k_plus_1_st_crossing: true,
        st_edge_cap: caps.max_edges,
    };
    Ok((drawing, cert))
}

/// Orders each side by introduction bag. `pd` must already have distinct
/// introduction bags.
fn layout_normalized(graph: &BipartiteGraph, pd: &PathDecomposition) -> Result<TwoLayerDrawing> {
    let intro = pd.intro_map(graph.vertex_count());
    let mut order_a: Vec<VertexIndex> = graph.vertices_on(Side::A).collect();
    let mut order_b: Vec<VertexIndex> = graph.vertices_on(Side::B).collect();
    order_a.sort_by_key(|&v| intro.first(v));
    order_b.sort_by_key(|&v| intro.first(v));
    TwoLayerDrawing::new(graph.clone(), order_a, order_b)
}

/// The interval argument made concrete: the witness edges' introduction
/// intervals pairwise intersect, so they share a point `p`, and bag `p`
/// holds an endpoint of every witness edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalExplanation {
    /// `[min, max]` of the two endpoints' introduction bags, per witness edge.
    pub intervals: Vec<(usize, usize)>,
    /// Common point, as a bag index of the normalised decomposition.
    pub p: usize,
    pub bag: Vec<VertexIndex>,
    /// For each witness edge, the endpoint found in `bag`.
    pub hits: Vec<VertexIndex>,
    /// `|witness| - 1`: the width any decomposition producing this layout must have.
    pub implied_width: usize,
}

impl IntervalExplanation {
    /// True when the explanation refutes a claimed width.
    pub fn contradicts(&self, claimed_width: usize) -> bool {
        self.bag.len() > claimed_width + 1
    }
}

/// Turns a pairwise-crossing witness in the layout of `pd` into an oversized bag.
pub fn verify_interval_argument(
    graph: &BipartiteGraph,
    pd: &PathDecomposition,
    witness: &CrossingWitness,
) -> Result<IntervalExplanation> {
    let CrossingWitness::KCrossing(edges) = witness else {
        return Err(Error::BadWitness("expected a k-crossing".into()));
    };
    if edges.is_empty() {
        return Err(Error::BadWitness("empty witness".into()));
    }
    let norm = normalize_unique_intro(graph, pd)?;
    let drawing = layout_normalized(graph, &norm)?;
    witness.verify(&drawing)?;
    let intro = norm.intro_map(graph.vertex_count());
    let intervals: Vec<(usize, usize)> = edges
        .iter()
        .map(|&e: &EdgeIndex| {
            let (a, b) = graph.edges()[e];
            let (la, lb) = (intro.first(a), intro.first(b));
            (la.min(lb), la.max(lb))
        })
        .collect();
    let p = intervals.iter().map(|iv| iv.0).max().unwrap();
    let q = intervals.iter().map(|iv| iv.1).min().unwrap();
    if p > q {
        // pairwise crossing edges always have pairwise intersecting intervals
        return Err(Error::BadWitness(format!("intervals have no common point ({p} > {q})")));
    }
    let bag = norm.bags()[p].clone();
    let mut hits = Vec::with_capacity(edges.len());
    for &e in edges {
        let (a, b) = graph.edges()[e];
        let hit = [a, b]
            .into_iter()
            .find(|v| bag.binary_search(v).is_ok())
            .ok_or_else(|| Error::BadWitness(format!("bag {p} misses both ends of edge {e}")))?;
        hits.push(hit);
    }
    debug_assert!(edges
        .iter()
        .enumerate()
        .all(|(i, &e)| edges[i + 1..].iter().all(|&f| edges_cross(&drawing, e, f).unwrap())));
    Ok(IntervalExplanation {
        intervals,
        p,
        bag,
        hits,
        implied_width: edges.len() - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_three_has_no_crossings() {
        let g = BipartiteGraph::with_bipartition(&["v1", "v2", "v3"], &[("v1", "v2"), ("v2", "v3")]).unwrap();
        let pd = PathDecomposition::from_ids(&g, &[vec!["v1", "v2"], vec!["v2", "v3"]]).unwrap();
        let (d, cert) = layout(&g, &pd, &StCaps::default()).unwrap();
        assert_eq!(max_crossing_set(&d).0, 1);
        assert_eq!(cert.k, 1);
        assert!(cert.no_k_plus_2_crossing && cert.no_k_plus_1_st_crossing);
    }

    #[test]
    fn invalid_decomposition_is_rejected() {
        let g = BipartiteGraph::with_bipartition(&["v1", "v2", "v3"], &[("v1", "v2"), ("v2", "v3")]).unwrap();
        let pd = PathDecomposition::from_ids(&g, &[vec!["v1", "v2"], vec!["v3"]]).unwrap();
        assert!(matches!(
            layout(&g, &pd, &StCaps::default()),
            Err(Error::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn two_crossing_on_a_width_zero_claim() {
        let g = BipartiteGraph::new(&["a1", "a2"], &["b1", "b2"], &[("a1", "b1"), ("a2", "b2")]).unwrap();
        let pd = PathDecomposition::from_ids(
            &g,
            &[vec!["a1"], vec!["a1", "b2"], vec!["a1", "a2", "b2"], vec!["a1", "b1"]],
        )
        .unwrap();
        let w = CrossingWitness::KCrossing(vec![0, 1]);
        let ex = verify_interval_argument(&g, &pd, &w).unwrap();
        assert_eq!(ex.intervals, vec![(0, 3), (1, 2)]);
        assert_eq!(ex.p, 1);
        assert_eq!(ex.bag.len(), 2);
        assert!(ex.contradicts(0));
        assert_eq!(ex.implied_width, 1);
    }

    #[test]
    fn non_crossing_witness_is_rejected() {
        let g = BipartiteGraph::new(&["a1", "a2"], &["b1", "b2"], &[("a1", "b1"), ("a2", "b2")]).unwrap();
        let pd = PathDecomposition::from_ids(&g, &[vec!["a1", "b1"], vec!["a2", "b2"]]).unwrap();
        let w = CrossingWitness::KCrossing(vec![0, 1]);
        assert!(matches!(
            verify_interval_argument(&g, &pd, &w),
            Err(Error::BadWitness(_))
        ));
    }
}
