use crate::error::{Error, Result};
use crate::graph::{EdgeCoord, EdgeIndex, TwoLayerDrawing, VertexIndex};

use super::crossing::{coords_cross, CrossingWitness};

/// Largest edge count accepted by [`brute_max_crossing_set`].
pub const BRUTE_FORCE_EDGE_CAP: usize = 20;

/// Indices of a longest strictly increasing subsequence of `values`
/// (patience sorting with predecessor links).
pub(crate) fn longest_strictly_increasing(values: &[usize]) -> Vec<usize> {
    let mut tails: Vec<usize> = Vec::new(); // indices into values
    let mut pred = vec![usize::MAX; values.len()];
    for (i, &v) in values.iter().enumerate() {
        let p = tails.partition_point(|&j| values[j] < v);
        if p > 0 {
            pred[i] = tails[p - 1];
        }
        if p == tails.len() {
            tails.push(i);
        } else {
            tails[p] = i;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied().unwrap_or(usize::MAX);
    while cur != usize::MAX {
        out.push(cur);
        cur = pred[cur];
    }
    out.reverse();
    out
}

fn sorted_coords(drawing: &TwoLayerDrawing, b_descending: bool) -> Vec<EdgeCoord> {
    let mut coords = drawing.coords();
    if b_descending {
        coords.sort_by_key(|c| (c.pos_a, std::cmp::Reverse(c.pos_b), c.edge));
    } else {
        coords.sort_by_key(|c| (c.pos_a, c.pos_b, c.edge));
    }
    coords
}

/// Maximum size of a pairwise-crossing edge set, with a set attaining it.
///
/// After sorting by `(pos_a, pos_b)` ascending, a pairwise-crossing set is
/// exactly a strictly decreasing run of `pos_b`: equal `pos_a` values appear
/// with ascending `pos_b` and so can never both be picked.
pub fn max_crossing_set(drawing: &TwoLayerDrawing) -> (usize, CrossingWitness) {
    let coords = sorted_coords(drawing, false);
    let max_b = coords.iter().map(|c| c.pos_b).max().unwrap_or(0);
    let flipped: Vec<usize> = coords.iter().map(|c| max_b - c.pos_b).collect();
    let picked: Vec<EdgeIndex> = longest_strictly_increasing(&flipped)
        .into_iter()
        .map(|i| coords[i].edge)
        .collect();
    (picked.len(), CrossingWitness::KCrossing(picked))
}

/// Maximum pairwise-crossing subset size by enumerating all edge subsets.
pub fn brute_max_crossing_set(drawing: &TwoLayerDrawing) -> Result<usize> {
    let coords = drawing.coords();
    let m = coords.len();
    if m > BRUTE_FORCE_EDGE_CAP {
        return Err(Error::SizeCap {
            what: "edges for brute force",
            value: m,
            cap: BRUTE_FORCE_EDGE_CAP,
        });
    }
    let mut cross = vec![0u32; m];
    for i in 0..m {
        for j in 0..m {
            if i != j && coords_cross(&coords[i], &coords[j]) {
                cross[i] |= 1 << j;
            }
        }
    }
    let mut best = 0;
    for mask in 1u32..(1u32 << m) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut rest = mask;
        let mut clique = true;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if mask & !(cross[i] | (1 << i)) != 0 {
                clique = false;
                break;
            }
        }
        if clique {
            best = size;
        }
    }
    Ok(best)
}

/// A maximum-cardinality non-crossing matching, sorted by the edge order.
///
/// Non-crossing matchings are the chains that increase strictly in both
/// coordinates; sorting by `pos_a` ascending and `pos_b` descending reduces
/// this to a strict LIS on `pos_b`.
pub fn maximum_noncrossing_matching(drawing: &TwoLayerDrawing) -> Vec<EdgeIndex> {
    let coords = sorted_coords(drawing, true);
    let bs: Vec<usize> = coords.iter().map(|c| c.pos_b).collect();
    longest_strictly_increasing(&bs)
        .into_iter()
        .map(|i| coords[i].edge)
        .collect()
}

/// Greedy inclusion-maximal non-crossing matching: sweep edges by
/// `(pos_a, pos_b)` and keep each edge that is vertex-disjoint from and
/// non-crossing with everything kept so far.
pub fn maximal_noncrossing_matching(drawing: &TwoLayerDrawing) -> Vec<EdgeIndex> {
    let coords = sorted_coords(drawing, false);
    let mut kept: Vec<EdgeCoord> = Vec::new();
    for c in coords {
        let ok = kept.iter().all(|k| {
            k.pos_a != c.pos_a && k.pos_b != c.pos_b && !coords_cross(k, &c)
        });
        if ok {
            kept.push(c);
        }
    }
    kept.into_iter().map(|c| c.edge).collect()
}

/// One oriented edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub edge: EdgeIndex,
    pub tail: VertexIndex,
    pub head: VertexIndex,
}

/// Partition of the edges into non-crossing chains, with every chain's
/// caterpillar forest oriented towards a root so that each vertex has at
/// most one out-arc per chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCover {
    chains: Vec<Vec<EdgeIndex>>,
    arcs: Vec<Arc>,
    out: Vec<Vec<VertexIndex>>,
}

impl ChainCover {
    pub fn chains(&self) -> &[Vec<EdgeIndex>] {
        &self.chains
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Arcs indexed by edge.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: VertexIndex) -> &[VertexIndex] {
        &self.out[v]
    }

    /// `N+[v]`: `v` together with the heads of its out-arcs, sorted.
    pub fn closed_out_neighborhood(&self, v: VertexIndex) -> Vec<VertexIndex> {
        let mut n = self.out[v].clone();
        n.push(v);
        n.sort_unstable();
        n.dedup();
        n
    }

    /// Checks the partition, chain, and out-degree invariants.
    pub fn verify(&self, drawing: &TwoLayerDrawing) -> Result<()> {
        let m = drawing.graph().edge_count();
        let mut seen = vec![false; m];
        for chain in &self.chains {
            for (i, &e) in chain.iter().enumerate() {
                if std::mem::replace(&mut seen[e], true) {
                    return Err(Error::BadWitness(format!("edge {e} in two chains")));
                }
                if i > 0 {
                    let (p, c) = (drawing.coord(chain[i - 1])?, drawing.coord(e)?);
                    if p.pos_a > c.pos_a || p.pos_b > c.pos_b {
                        return Err(Error::BadWitness(format!("chain not monotone at edge {e}")));
                    }
                }
            }
            let mut out_in_chain = std::collections::HashMap::new();
            for &e in chain {
                *out_in_chain.entry(self.arcs[e].tail).or_insert(0usize) += 1;
            }
            if out_in_chain.values().any(|&d| d > 1) {
                return Err(Error::BadWitness("out-degree above 1 inside a chain".into()));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::BadWitness("chains do not cover every edge".into()));
        }
        for (e, arc) in self.arcs.iter().enumerate() {
            let (a, b) = drawing.graph().edge(e)?;
            if !((arc.tail == a && arc.head == b) || (arc.tail == b && arc.head == a)) {
                return Err(Error::BadWitness(format!("arc {e} does not match its edge")));
            }
        }
        Ok(())
    }
}

/// Minimum chain cover of the edge order, oriented.
///
/// Edges are placed greedily, in `(pos_a, pos_b)` order, on the chain whose
/// last `pos_b` is the largest value not exceeding the current one; the number
/// of chains opened equals the maximum crossing set size. Each chain's forest
/// is rooted at the A-end of its first edge per component and oriented
/// child to parent.
pub fn min_chain_cover(drawing: &TwoLayerDrawing) -> ChainCover {
    let coords = sorted_coords(drawing, false);
    let mut chains: Vec<Vec<EdgeIndex>> = Vec::new();
    let mut last_b: Vec<usize> = Vec::new();
    for c in &coords {
        let target = last_b
            .iter()
            .enumerate()
            .filter(|(_, &b)| b <= c.pos_b)
            .max_by_key(|(i, &b)| (b, std::cmp::Reverse(*i)))
            .map(|(i, _)| i);
        match target {
            Some(i) => {
                chains[i].push(c.edge);
                last_b[i] = c.pos_b;
            }
            None => {
                chains.push(vec![c.edge]);
                last_b.push(c.pos_b);
            }
        }
    }

    let graph = drawing.graph();
    let n = graph.vertex_count();
    let mut arcs = vec![
        Arc {
            edge: usize::MAX,
            tail: usize::MAX,
            head: usize::MAX
        };
        graph.edge_count()
    ];
    let mut out = vec![Vec::new(); n];
    let mut adj: Vec<Vec<(VertexIndex, EdgeIndex)>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    for chain in &chains {
        for &e in chain {
            let (a, b) = graph.edges()[e];
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        for &e in chain {
            let root = graph.edges()[e].0;
            if visited[root] {
                continue;
            }
            visited[root] = true;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &(w, f) in &adj[u] {
                    if !visited[w] {
                        visited[w] = true;
                        arcs[f] = Arc { edge: f, tail: w, head: u };
                        out[w].push(u);
                        stack.push(w);
                    }
                }
            }
        }
        for &e in chain {
            let (a, b) = graph.edges()[e];
            adj[a].clear();
            adj[b].clear();
            visited[a] = false;
            visited[b] = false;
        }
    }
    for o in &mut out {
        o.sort_unstable();
    }
    ChainCover { chains, arcs, out }
}
