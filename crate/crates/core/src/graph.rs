//! Bipartite graphs and their 2-layer drawings.
//!
//! Vertices are addressed by dense indices (`usize`) internally and by their
//! string ids at the boundaries. A drawing is nothing more than a total order
//! of each side; all crossing structure is derived from the two rank maps.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

/// Index of a vertex inside a [`BipartiteGraph`].
pub type VertexIndex = usize;
/// Index of an edge inside a [`BipartiteGraph`].
pub type EdgeIndex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A simple bipartite graph with a fixed bipartition.
///
/// Every edge is stored as `(a_end, b_end)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    names: Vec<String>,
    sides: Vec<Side>,
    edges: Vec<(VertexIndex, VertexIndex)>,
    adj: Vec<Vec<VertexIndex>>,
    index: HashMap<String, VertexIndex>,
}

impl BipartiteGraph {
    /// Builds a graph from explicit sides. Edge endpoints may be given in
    /// either order; they are normalised to `(a_end, b_end)`.
    pub fn new<S: AsRef<str>>(a: &[S], b: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut names = Vec::with_capacity(a.len() + b.len());
        let mut sides = Vec::with_capacity(a.len() + b.len());
        for id in a {
            names.push(id.as_ref().to_string());
            sides.push(Side::A);
        }
        for id in b {
            names.push(id.as_ref().to_string());
            sides.push(Side::B);
        }
        let index = build_index(&names)?;
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            let u = lookup(&index, u.as_ref())?;
            let v = lookup(&index, v.as_ref())?;
            idx_edges.push((u, v));
        }
        Self::from_parts(names, sides, &idx_edges)
    }

    /// Builds a graph whose sides are not given, 2-colouring each connected
    /// component by breadth-first search. The first vertex of every component
    /// (in input order) goes to side A.
    pub fn with_bipartition<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let index = build_index(&names)?;
        let n = names.len();
        let mut adj = vec![Vec::new(); n];
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            let u = lookup(&index, u.as_ref())?;
            let v = lookup(&index, v.as_ref())?;
            if u == v {
                return Err(Error::SelfLoop(names[u].clone()));
            }
            adj[u].push(v);
            adj[v].push(u);
            idx_edges.push((u, v));
        }
        let mut colour: Vec<Option<Side>> = vec![None; n];
        for root in 0..n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(Side::A);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &w in &adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(cu.other());
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return Err(Error::NotBipartite(names[w].clone())),
                        Some(_) => {}
                    }
                }
            }
        }
        let sides = colour.into_iter().map(Option::unwrap).collect();
        Self::from_parts(names, sides, &idx_edges)
    }

    pub(crate) fn from_parts(
        names: Vec<String>,
        sides: Vec<Side>,
        edges: &[(VertexIndex, VertexIndex)],
    ) -> Result<Self> {
        let index = build_index(&names)?;
        let n = names.len();
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
            }
            if u == v {
                return Err(Error::SelfLoop(names[u].clone()));
            }
            if sides[u] == sides[v] {
                return Err(Error::SameSideEdge(names[u].clone(), names[v].clone()));
            }
            let (a, b) = if sides[u] == Side::A { (u, v) } else { (v, u) };
            if !seen.insert((a, b)) {
                return Err(Error::DuplicateEdge(names[a].clone(), names[b].clone()));
            }
            adj[a].push(b);
            adj[b].push(a);
            out.push((a, b));
        }
        Ok(BipartiteGraph {
            names,
            sides,
            edges: out,
            adj,
            index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: VertexIndex) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn side(&self, v: VertexIndex) -> Side {
        self.sides[v]
    }

    pub fn index_of(&self, id: &str) -> Option<VertexIndex> {
        self.index.get(id).copied()
    }

    /// Edges as `(a_end, b_end)` in insertion order.
    pub fn edges(&self) -> &[(VertexIndex, VertexIndex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeIndex) -> Result<(VertexIndex, VertexIndex)> {
        self.edges.get(e).copied().ok_or(Error::UnknownEdge(e))
    }

    pub fn find_edge(&self, u: VertexIndex, v: VertexIndex) -> Option<EdgeIndex> {
        let key = if self.sides[u] == Side::A { (u, v) } else { (v, u) };
        self.edges.iter().position(|&e| e == key)
    }

    pub fn neighbors(&self, v: VertexIndex) -> &[VertexIndex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexIndex) -> usize {
        self.adj[v].len()
    }

    pub fn vertices_on(&self, side: Side) -> impl Iterator<Item = VertexIndex> + '_ {
        (0..self.vertex_count()).filter(move |&v| self.sides[v] == side)
    }

    /// Connected components, each sorted ascending, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexIndex>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for root in 0..n {
            if comp[root] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[root] = id;
            let mut members = vec![root];
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `keep`, preserving relative vertex order, ids and sides.
    pub fn induced(&self, keep: &[VertexIndex]) -> BipartiteGraph {
        let mut map = vec![usize::MAX; self.vertex_count()];
        let mut kept: Vec<VertexIndex> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        for (i, &v) in kept.iter().enumerate() {
            map[v] = i;
        }
        let names = kept.iter().map(|&v| self.names[v].clone()).collect();
        let sides = kept.iter().map(|&v| self.sides[v]).collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| map[a] != usize::MAX && map[b] != usize::MAX)
            .map(|&(a, b)| (map[a], map[b]))
            .collect();
        BipartiteGraph::from_parts(names, sides, &edges).expect("induced subgraph of a valid graph")
    }

    /// Spanning subgraph keeping only the listed edges.
    pub fn edge_subgraph(&self, keep: &[EdgeIndex]) -> BipartiteGraph {
        let edges: Vec<_> = keep.iter().map(|&e| self.edges[e]).collect();
        BipartiteGraph::from_parts(self.names.clone(), self.sides.clone(), &edges)
            .expect("edge subgraph of a valid graph")
    }
}

fn build_index(names: &[String]) -> Result<HashMap<String, VertexIndex>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, id) in names.iter().enumerate() {
        if index.insert(id.clone(), i).is_some() {
            return Err(Error::DuplicateVertex(id.clone()));
        }
    }
    Ok(index)
}

fn lookup(index: &HashMap<String, VertexIndex>, id: &str) -> Result<VertexIndex> {
    index.get(id).copied().ok_or_else(|| Error::UnknownVertex(id.to_string()))
}

/// Position data of one edge: its index and the 1-based ranks of its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeCoord {
    pub edge: EdgeIndex,
    pub pos_a: usize,
    pub pos_b: usize,
}

/// A bipartite graph together with a left-to-right order of each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoLayerDrawing {
    graph: BipartiteGraph,
    order_a: Vec<VertexIndex>,
    order_b: Vec<VertexIndex>,
    rank: Vec<usize>,
}

impl TwoLayerDrawing {
    pub fn new(
        graph: BipartiteGraph,
        order_a: Vec<VertexIndex>,
        order_b: Vec<VertexIndex>,
    ) -> Result<Self> {
        let n = graph.vertex_count();
        let mut rank = vec![0usize; n];
        for (order, side) in [(&order_a, Side::A), (&order_b, Side::B)] {
            let expected = graph.vertices_on(side).count();
            if order.len() != expected {
                return Err(Error::InvalidOrder(format!(
                    "order of side {side:?} has {} entries, side has {expected} vertices",
                    order.len()
                )));
            }
            for (i, &v) in order.iter().enumerate() {
                if v >= n || graph.side(v) != side {
                    return Err(Error::InvalidOrder(format!(
                        "entry {i} of order {side:?} is not a vertex of that side"
                    )));
                }
                if rank[v] != 0 {
                    return Err(Error::InvalidOrder(format!(
                        "`{}` appears twice",
                        graph.name(v)
                    )));
                }
                rank[v] = i + 1;
            }
        }
        Ok(TwoLayerDrawing {
            graph,
            order_a,
            order_b,
            rank,
        })
    }

    /// Builds a drawing from orders given as vertex ids.
    pub fn from_ids<S: AsRef<str>>(graph: BipartiteGraph, order_a: &[S], order_b: &[S]) -> Result<Self> {
        let resolve = |ids: &[S]| -> Result<Vec<VertexIndex>> {
            ids.iter()
                .map(|s| {
                    graph
                        .index_of(s.as_ref())
                        .ok_or_else(|| Error::UnknownVertex(s.as_ref().to_string()))
                })
                .collect()
        };
        let a = resolve(order_a)?;
        let b = resolve(order_b)?;
        Self::new(graph, a, b)
    }

    /// Orders each side by vertex index; mostly useful in tests.
    pub fn identity(graph: BipartiteGraph) -> Self {
        let a = graph.vertices_on(Side::A).collect();
        let b = graph.vertices_on(Side::B).collect();
        Self::new(graph, a, b).expect("identity orders are bijections")
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn into_graph(self) -> BipartiteGraph {
        self.graph
    }

    pub fn order_a(&self) -> &[VertexIndex] {
        &self.order_a
    }

    pub fn order_b(&self) -> &[VertexIndex] {
        &self.order_b
    }

    pub fn order(&self, side: Side) -> &[VertexIndex] {
        match side {
            Side::A => &self.order_a,
            Side::B => &self.order_b,
        }
    }

    /// 1-based rank of `v` within its own layer.
    pub fn rank(&self, v: VertexIndex) -> usize {
        self.rank[v]
    }

    pub fn coord(&self, e: EdgeIndex) -> Result<EdgeCoord> {
        let (a, b) = self.graph.edge(e)?;
        Ok(EdgeCoord {
            edge: e,
            pos_a: self.rank[a],
            pos_b: self.rank[b],
        })
    }

    /// Coordinates of every edge, indexed by edge.
    pub fn coords(&self) -> Vec<EdgeCoord> {
        self.graph
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(a, b))| EdgeCoord {
                edge: e,
                pos_a: self.rank[a],
                pos_b: self.rank[b],
            })
            .collect()
    }

    /// Restriction of the drawing to the vertices in `keep`, with the
    /// surviving vertices in their original relative order.
    pub fn induced(&self, keep: &[VertexIndex]) -> TwoLayerDrawing {
        let sub = self.graph.induced(keep);
        let project = |order: &[VertexIndex]| -> Vec<VertexIndex> {
            order
                .iter()
                .filter_map(|&v| sub.index_of(self.graph.name(v)))
                .collect()
        };
        let a = project(&self.order_a);
        let b = project(&self.order_b);
        TwoLayerDrawing::new(sub, a, b).expect("projection of a valid drawing")
    }

    /// Same orders, only the listed edges.
    pub fn edge_subdrawing(&self, keep: &[EdgeIndex]) -> TwoLayerDrawing {
        let sub = self.graph.edge_subgraph(keep);
        TwoLayerDrawing::new(sub, self.order_a.clone(), self.order_b.clone())
            .expect("same vertex set")
    }
}
