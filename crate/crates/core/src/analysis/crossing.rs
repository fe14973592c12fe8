use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeCoord, EdgeIndex, TwoLayerDrawing};

/// True iff `e` and `f` cross in the drawing. Edges sharing an endpoint never cross.
pub fn edges_cross(drawing: &TwoLayerDrawing, e: EdgeIndex, f: EdgeIndex) -> Result<bool> {
    let ce = drawing.coord(e)?;
    let cf = drawing.coord(f)?;
    Ok(coords_cross(&ce, &cf))
}

#[inline]
pub(crate) fn coords_cross(e: &EdgeCoord, f: &EdgeCoord) -> bool {
    (e.pos_a < f.pos_a && e.pos_b > f.pos_b) || (e.pos_a > f.pos_a && e.pos_b < f.pos_b)
}

/// Number of edges crossing each edge, indexed by edge.
pub fn crossings_per_edge(drawing: &TwoLayerDrawing) -> Vec<usize> {
    let coords = drawing.coords();
    let mut counts = vec![0; coords.len()];
    for i in 0..coords.len() {
        for j in i + 1..coords.len() {
            if coords_cross(&coords[i], &coords[j]) {
                counts[i] += 1;
                counts[j] += 1;
            }
        }
    }
    counts
}

/// A concrete crossing certificate, re-checkable against a drawing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CrossingWitness {
    /// Pairwise crossing edges.
    KCrossing(Vec<EdgeIndex>),
    /// Two non-crossing matchings with every cross pair crossing.
    St { s: Vec<EdgeIndex>, t: Vec<EdgeIndex> },
}

impl CrossingWitness {
    /// Re-validates the witness from raw coordinates.
    pub fn verify(&self, drawing: &TwoLayerDrawing) -> Result<()> {
        let coord = |e: EdgeIndex| drawing.coord(e);
        match self {
            CrossingWitness::KCrossing(edges) => {
                for (i, &e) in edges.iter().enumerate() {
                    for &f in &edges[i + 1..] {
                        if !coords_cross(&coord(e)?, &coord(f)?) {
                            return Err(Error::BadWitness(format!("edges {e} and {f} do not cross")));
                        }
                    }
                }
                Ok(())
            }
            CrossingWitness::St { s, t } => {
                for set in [s, t] {
                    for (i, &e) in set.iter().enumerate() {
                        for &f in &set[i + 1..] {
                            let (ce, cf) = (coord(e)?, coord(f)?);
                            let disjoint = ce.pos_a != cf.pos_a && ce.pos_b != cf.pos_b;
                            if !disjoint || coords_cross(&ce, &cf) {
                                return Err(Error::BadWitness(format!(
                                    "edges {e} and {f} are not a non-crossing matching pair"
                                )));
                            }
                        }
                    }
                }
                for &e in s {
                    for &f in t {
                        if !coords_cross(&coord(e)?, &coord(f)?) {
                            return Err(Error::BadWitness(format!(
                                "S-edge {e} does not cross T-edge {f}"
                            )));
                        }
                    }
                }
                Ok(())
            }
        }
    }

    /// Every edge mentioned by the witness.
    pub fn edges(&self) -> Vec<EdgeIndex> {
        match self {
            CrossingWitness::KCrossing(e) => e.clone(),
            CrossingWitness::St { s, t } => s.iter().chain(t).copied().collect(),
        }
    }
}
