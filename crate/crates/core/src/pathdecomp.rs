//! Path-decompositions: validation, width, and the distinct-introduction normal form.
//!
//! Bag indices are 0-based throughout.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, VertexIndex};

/// An ordered sequence of bags. Each bag is kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathDecomposition {
    bags: Vec<Vec<VertexIndex>>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<Vec<VertexIndex>>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        PathDecomposition { bags }
    }

    pub fn from_ids<S: AsRef<str>>(graph: &BipartiteGraph, bags: &[Vec<S>]) -> Result<Self> {
        let bags = bags
            .iter()
            .map(|bag| {
                bag.iter()
                    .map(|id| {
                        graph
                            .index_of(id.as_ref())
                            .ok_or_else(|| Error::UnknownVertex(id.as_ref().to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(bags))
    }

    /// The decomposition induced by a vertex ordering: bag `i` holds the
    /// `i`-th vertex plus every earlier vertex with a neighbour at position
    /// `i` or later. Its width is the vertex separation of the ordering.
    pub fn from_vertex_order(graph: &BipartiteGraph, order: &[VertexIndex]) -> Self {
        let mut pos = vec![usize::MAX; graph.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let last_needed: Vec<usize> = (0..graph.vertex_count())
            .map(|v| {
                graph
                    .neighbors(v)
                    .iter()
                    .map(|&w| pos[w])
                    .filter(|&p| p != usize::MAX)
                    .max()
                    .unwrap_or(0)
                    .max(pos[v])
            })
            .collect();
        let bags = (0..order.len())
            .map(|i| {
                order[..=i]
                    .iter()
                    .copied()
                    .filter(|&u| u == order[i] || last_needed[u] >= i)
                    .collect()
            })
            .collect();
        Self::new(bags)
    }

    pub fn bags(&self) -> &[Vec<VertexIndex>] {
        &self.bags
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag size minus one. All-empty bags count as width 0.
    pub fn width(&self) -> Result<usize> {
        width(self)
    }

    /// First and last bag index of every vertex that appears anywhere.
    pub fn intro_map(&self, vertex_count: usize) -> IntroMap {
        let mut first = vec![None; vertex_count];
        let mut last = vec![None; vertex_count];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v < vertex_count {
                    first[v].get_or_insert(i);
                    last[v] = Some(i);
                }
            }
        }
        IntroMap { first, last }
    }
}

/// `first[v]` (the introduction bag) and `last[v]` for each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntroMap {
    pub first: Vec<Option<usize>>,
    pub last: Vec<Option<usize>>,
}

impl IntroMap {
    pub fn first(&self, v: VertexIndex) -> usize {
        self.first[v].expect("vertex occurs in some bag")
    }

    pub fn last(&self, v: VertexIndex) -> usize {
        self.last[v].expect("vertex occurs in some bag")
    }

    /// True when no two vertices share an introduction bag.
    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.first.iter().flatten().all(|&i| seen.insert(i))
    }
}

/// One broken path-decomposition condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// The vertex is in no bag.
    Uncovered { vertex: VertexIndex },
    /// No bag holds both endpoints.
    EdgeUncovered { a: VertexIndex, b: VertexIndex },
    /// `vertex` is in bags `before` and `after` but not in `gap`.
    NotContiguous {
        vertex: VertexIndex,
        before: usize,
        gap: usize,
        after: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Uncovered { vertex } => write!(f, "vertex #{vertex} is in no bag"),
            Violation::EdgeUncovered { a, b } => write!(f, "edge #{a}-#{b} is in no bag"),
            Violation::NotContiguous {
                vertex,
                before,
                gap,
                after,
            } => write!(
                f,
                "vertex #{vertex} is in bags {before} and {after} but not in bag {gap}"
            ),
        }
    }
}

/// Checks the cover, edge and contiguity conditions. An empty result means the
/// decomposition is valid; a bag entry outside the graph is a hard error.
pub fn validate_pd(graph: &BipartiteGraph, pd: &PathDecomposition) -> Result<Vec<Violation>> {
    let n = graph.vertex_count();
    for (i, bag) in pd.bags().iter().enumerate() {
        if let Some(&v) = bag.iter().find(|&&v| v >= n) {
            return Err(Error::ForeignVertex { bag: i, vertex: v });
        }
    }
    let mut violations = Vec::new();
    let mut occurs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in pd.bags().iter().enumerate() {
        for &v in bag {
            occurs[v].push(i);
        }
    }
    for (v, idx) in occurs.iter().enumerate() {
        if idx.is_empty() {
            violations.push(Violation::Uncovered { vertex: v });
        }
    }
    for &(a, b) in graph.edges() {
        let together = pd
            .bags()
            .iter()
            .any(|bag| bag.binary_search(&a).is_ok() && bag.binary_search(&b).is_ok());
        if !together {
            violations.push(Violation::EdgeUncovered { a, b });
        }
    }
    for (v, idx) in occurs.iter().enumerate() {
        if let Some(w) = idx.windows(2).find(|w| w[1] != w[0] + 1) {
            violations.push(Violation::NotContiguous {
                vertex: v,
                before: w[0],
                gap: w[0] + 1,
                after: w[1],
            });
        }
    }
    Ok(violations)
}

/// Largest bag size minus one.
pub fn width(pd: &PathDecomposition) -> Result<usize> {
    pd.bags()
        .iter()
        .map(Vec::len)
        .max()
        .map(|s| s.saturating_sub(1))
        .ok_or(Error::EmptyDecomposition)
}

/// Rewrites a valid decomposition so that every bag introduces at most one
/// vertex: a bag introducing `m >= 2` vertices becomes `m` staged copies,
/// each adding one new vertex in vertex-id order. Stages are subsets of the
/// original bag, so the width is unchanged.
pub fn normalize_unique_intro(graph: &BipartiteGraph, pd: &PathDecomposition) -> Result<PathDecomposition> {
    let violations = validate_pd(graph, pd)?;
    if let Some(v) = violations.first() {
        return Err(Error::InvalidDecomposition(v.to_string()));
    }
    let mut out = Vec::with_capacity(pd.len());
    let empty = Vec::new();
    for (i, bag) in pd.bags().iter().enumerate() {
        let prev = if i == 0 { &empty } else { &pd.bags()[i - 1] };
        let (kept, mut fresh): (Vec<VertexIndex>, Vec<VertexIndex>) =
            bag.iter().partition(|v| prev.binary_search(v).is_ok());
        if fresh.len() <= 1 {
            out.push(bag.clone());
            continue;
        }
        fresh.sort_by(|&x, &y| graph.name(x).cmp(graph.name(y)));
        let mut stage = kept;
        for v in fresh {
            stage.push(v);
            out.push(stage.clone());
        }
    }
    Ok(PathDecomposition::new(out))
}
