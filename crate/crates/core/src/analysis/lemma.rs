//! Runtime check of the counting bound `|A| <= k * l * d`.

use serde::Serialize;

use crate::graph::{Side, TwoLayerDrawing};

use super::chains::{max_crossing_set, maximum_noncrossing_matching};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub holds: bool,
    pub observed: usize,
    pub bound: usize,
}

/// A hypothesis of the counting bound that the instance does not satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum HypothesisViolation {
    IsolatedAVertex(String),
    BDegreeTooLarge { vertex: String, degree: usize, d: usize },
    CrossingTooLarge { found: usize, k: usize },
    MatchingTooLarge { found: usize, l: usize },
}

/// Verifies the hypotheses (every A-vertex has degree at least 1, every
/// B-vertex degree at most `d`, no `(k+1)`-crossing, no non-crossing
/// `(l+1)`-matching) and then compares `|A|` with `k * l * d`.
pub fn check_lemma_useful(
    drawing: &TwoLayerDrawing,
    k: usize,
    l: usize,
    d: usize,
) -> Result<LemmaReport, Vec<HypothesisViolation>> {
    let g = drawing.graph();
    let mut violations = Vec::new();
    for v in g.vertices_on(Side::A) {
        if g.degree(v) == 0 {
            violations.push(HypothesisViolation::IsolatedAVertex(g.name(v).to_string()));
        }
    }
    for v in g.vertices_on(Side::B) {
        if g.degree(v) > d {
            violations.push(HypothesisViolation::BDegreeTooLarge {
                vertex: g.name(v).to_string(),
                degree: g.degree(v),
                d,
            });
        }
    }
    let (found, _) = max_crossing_set(drawing);
    if found > k {
        violations.push(HypothesisViolation::CrossingTooLarge { found, k });
    }
    let found = maximum_noncrossing_matching(drawing).len();
    if found > l {
        violations.push(HypothesisViolation::MatchingTooLarge { found, l });
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    let observed = g.vertices_on(Side::A).count();
    let bound = k * l * d;
    Ok(LemmaReport {
        holds: observed <= bound,
        observed,
        bound,
    })
}
