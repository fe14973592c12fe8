//! JSON interchange formats.
//!
//! * graph: `{"a":[ids],"b":[ids],"edges":[[idA,idB],...]}`
//! * drawing: the graph keys plus `"orderA"` and `"orderB"`
//! * decomposition: `{"bags":[[ids],...]}` with each bag sorted by id
//!
//! A graph document may give `"vertices"` instead of `"a"`/`"b"`, in which
//! case the sides are computed by 2-colouring.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::analysis::{CrossingWitness, StCutTable};
use crate::decompose::{AuditReport, BagRule, Thm3Certificate};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EdgeIndex, Side, TwoLayerDrawing};
use crate::layout::LayoutCertificate;
use crate::pathdecomp::PathDecomposition;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    #[serde(default)]
    pub a: Vec<String>,
    #[serde(default)]
    pub b: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl GraphJson {
    pub fn from_graph(g: &BipartiteGraph) -> Self {
        GraphJson {
            vertices: None,
            a: g.vertices_on(Side::A).map(|v| g.name(v).to_string()).collect(),
            b: g.vertices_on(Side::B).map(|v| g.name(v).to_string()).collect(),
            edges: edge_names(g),
        }
    }

    pub fn to_graph(&self) -> Result<BipartiteGraph> {
        match &self.vertices {
            Some(vertices) if self.a.is_empty() && self.b.is_empty() => {
                BipartiteGraph::with_bipartition(vertices, &self.edges)
            }
            Some(_) => Err(Error::Format("give either \"vertices\" or \"a\"/\"b\", not both".into())),
            None => BipartiteGraph::new(&self.a, &self.b, &self.edges),
        }
    }
}

fn edge_names(g: &BipartiteGraph) -> Vec<(String, String)> {
    g.edges()
        .iter()
        .map(|&(a, b)| (g.name(a).to_string(), g.name(b).to_string()))
        .collect()
}

fn edge_pair(g: &BipartiteGraph, e: EdgeIndex) -> (String, String) {
    let (a, b) = g.edges()[e];
    (g.name(a).to_string(), g.name(b).to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingJson {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub edges: Vec<(String, String)>,
    #[serde(rename = "orderA")]
    pub order_a: Vec<String>,
    #[serde(rename = "orderB")]
    pub order_b: Vec<String>,
}

impl DrawingJson {
    pub fn from_drawing(d: &TwoLayerDrawing) -> Self {
        let g = d.graph();
        let names = |o: &[usize]| o.iter().map(|&v| g.name(v).to_string()).collect();
        let gj = GraphJson::from_graph(g);
        DrawingJson {
            a: gj.a,
            b: gj.b,
            edges: gj.edges,
            order_a: names(d.order_a()),
            order_b: names(d.order_b()),
        }
    }

    pub fn to_drawing(&self) -> Result<TwoLayerDrawing> {
        let g = BipartiteGraph::new(&self.a, &self.b, &self.edges)?;
        TwoLayerDrawing::from_ids(g, &self.order_a, &self.order_b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub bags: Vec<Vec<String>>,
}

impl DecompositionJson {
    pub fn from_pd(g: &BipartiteGraph, pd: &PathDecomposition) -> Self {
        let bags = pd
            .bags()
            .iter()
            .map(|bag| {
                let mut ids: Vec<String> = bag.iter().map(|&v| g.name(v).to_string()).collect();
                ids.sort();
                ids
            })
            .collect();
        DecompositionJson { bags }
    }

    pub fn to_pd(&self, g: &BipartiteGraph) -> Result<PathDecomposition> {
        PathDecomposition::from_ids(g, &self.bags)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StWitnessJson {
    pub s: usize,
    pub t: usize,
    #[serde(rename = "S")]
    pub s_edges: Vec<(String, String)>,
    #[serde(rename = "T")]
    pub t_edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessesJson {
    #[serde(rename = "maxCrossing")]
    pub max_crossing: Vec<(String, String)>,
    pub st: Vec<StWitnessJson>,
}

/// Summary of [`crate::analysis`] results for one drawing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub k: usize,
    #[serde(rename = "perEdgeMax")]
    pub per_edge_max: usize,
    #[serde(rename = "stFrontier")]
    pub st_frontier: Vec<(usize, usize)>,
    pub witnesses: WitnessesJson,
}

impl AnalysisReport {
    /// Runs the analyses. The frontier is capped at `st_cap` in both coordinates.
    pub fn build(d: &TwoLayerDrawing, st_cap: usize, caps: &crate::analysis::StCaps) -> Result<Self> {
        let g = d.graph();
        let (k, witness) = crate::analysis::max_crossing_set(d);
        let per_edge_max = crate::analysis::crossings_per_edge(d).into_iter().max().unwrap_or(0);
        let table = StCutTable::build(d, caps)?;
        let st_frontier = table.frontier(st_cap.max(1), st_cap.max(1));
        let st = st_frontier
            .iter()
            .map(|&(s, t)| {
                let Some(CrossingWitness::St { s: se, t: te }) = table.find(s, t) else {
                    unreachable!("frontier points are achievable")
                };
                StWitnessJson {
                    s,
                    t,
                    s_edges: se.iter().map(|&e| edge_pair(g, e)).collect(),
                    t_edges: te.iter().map(|&e| edge_pair(g, e)).collect(),
                }
            })
            .collect();
        Ok(AnalysisReport {
            k,
            per_edge_max,
            st_frontier,
            witnesses: WitnessesJson {
                max_crossing: witness.edges().iter().map(|&e| edge_pair(g, e)).collect(),
                st,
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ProvenanceJson {
    Vi(&'static str, usize),
    Vij(&'static str, usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thm3CertificateJson {
    pub k: usize,
    pub width: usize,
    #[serde(rename = "X")]
    pub matching: Vec<(String, String)>,
    pub chains: Vec<Vec<(String, String)>>,
    /// `[tail, head]` per edge, in graph edge order.
    pub orientation: Vec<(String, String)>,
    #[serde(rename = "Y")]
    pub gaps: Vec<Vec<String>>,
    pub provenance: Vec<ProvenanceJson>,
    #[serde(rename = "stFrontier")]
    pub st_frontier: Option<Vec<(usize, usize)>>,
    pub beyond: Vec<(usize, usize)>,
    #[serde(rename = "claimedBound")]
    pub claimed_bound: Option<u64>,
    pub audit: AuditReport,
}

impl Thm3CertificateJson {
    pub fn build(d: &TwoLayerDrawing, pd: &PathDecomposition, cert: &Thm3Certificate, audit: AuditReport) -> Self {
        let g = d.graph();
        let name = |v: usize| g.name(v).to_string();
        Thm3CertificateJson {
            k: cert.k,
            width: pd.width().unwrap_or(0),
            matching: cert.matching.iter().map(|&e| edge_pair(g, e)).collect(),
            chains: cert
                .cover
                .chains()
                .iter()
                .map(|c| c.iter().map(|&e| edge_pair(g, e)).collect())
                .collect(),
            orientation: cert.cover.arcs().iter().map(|a| (name(a.tail), name(a.head))).collect(),
            gaps: cert.gaps.iter().map(|y| y.iter().map(|&v| name(v)).collect()).collect(),
            provenance: cert
                .provenance
                .iter()
                .map(|r| match *r {
                    BagRule::Vi(i) => ProvenanceJson::Vi("Vi", i),
                    BagRule::Vij(i, j) => ProvenanceJson::Vij("Vij", i, j),
                })
                .collect(),
            st_frontier: cert.frontier.clone(),
            beyond: cert.beyond.clone(),
            claimed_bound: cert.claimed_bound,
            audit,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayoutCertificateJson {
    pub k: usize,
    pub intro: BTreeMap<String, usize>,
    #[serde(rename = "maxCrossing")]
    pub max_crossing: usize,
    #[serde(rename = "noKPlus2Crossing")]
    pub no_k_plus_2_crossing: bool,
    #[serde(rename = "noKPlus1StCrossing")]
    pub no_k_plus_1_st_crossing: bool,
    #[serde(rename = "stEdgeCap")]
    pub st_edge_cap: usize,
}

impl LayoutCertificateJson {
    pub fn build(g: &BipartiteGraph, cert: &LayoutCertificate) -> Self {
        LayoutCertificateJson {
            k: cert.k,
            intro: cert
                .intro
                .iter()
                .enumerate()
                .map(|(v, &i)| (g.name(v).to_string(), i))
                .collect(),
            max_crossing: cert.max_crossing,
            no_k_plus_2_crossing: cert.no_k_plus_2_crossing,
            no_k_plus_1_st_crossing: cert.no_k_plus_1_st_crossing,
            st_edge_cap: cert.st_edge_cap,
        }
    }
}

/// Any of the three input documents, told apart by their keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Graph(GraphJson),
    Drawing(DrawingJson),
    Decomposition(DecompositionJson),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let has = |k: &str| value.get(k).is_some();
        let doc = if has("bags") {
            Document::Decomposition(from_value(value)?)
        } else if has("orderA") || has("orderB") {
            Document::Drawing(from_value(value)?)
        } else {
            Document::Graph(from_value(value)?)
        };
        Ok(doc)
    }
}

fn from_value<T: for<'de> Deserialize<'de>>(v: serde_json::Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Format(e.to_string()))
}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph> {
    match Document::parse(text)? {
        Document::Graph(g) => g.to_graph(),
        Document::Drawing(d) => Ok(d.to_drawing()?.into_graph()),
        Document::Decomposition(_) => Err(Error::Format("expected a graph, found a decomposition".into())),
    }
}

pub fn parse_drawing(text: &str) -> Result<TwoLayerDrawing> {
    let d: DrawingJson = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    d.to_drawing()
}

pub fn parse_decomposition(text: &str, g: &BipartiteGraph) -> Result<PathDecomposition> {
    let d: DecompositionJson = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    d.to_pd(g)
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serialises");
    s.push('\n');
    s
}

pub fn graph_to_string(g: &BipartiteGraph) -> String {
    to_pretty(&GraphJson::from_graph(g))
}

pub fn drawing_to_string(d: &TwoLayerDrawing) -> String {
    to_pretty(&DrawingJson::from_drawing(d))
}

pub fn decomposition_to_string(g: &BipartiteGraph, pd: &PathDecomposition) -> String {
    to_pretty(&DecompositionJson::from_pd(g, pd))
}
