//! Exact (s,t)-crossing search.
//!
//! In any (s,t)-crossing `(S, T)` one of the two matchings lies entirely to
//! the left of the other on layer A and entirely to the right of it on layer
//! B. (Were some S-edge left of one T-edge and right of another, those two
//! T-edges would cross.) So a crossing exists iff some cut `(alpha, beta)` of
//! the two layers leaves a non-crossing matching of the right sizes in the
//! upper-left quadrant `{pos_a <= alpha, pos_b > beta}` and in the lower-right
//! quadrant `{pos_a > alpha, pos_b <= beta}`. Non-crossing matchings inside a
//! quadrant are chains increasing strictly in both coordinates, so each
//! quadrant reduces to a longest-chain computation.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeCoord, EdgeIndex, Side, TwoLayerDrawing};

use super::chains::longest_strictly_increasing;
use super::crossing::CrossingWitness;

/// Runtime guard for the cut scan, which costs `O(|B| * m^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StCaps {
    pub max_edges: usize,
}

impl Default for StCaps {
    fn default() -> Self {
        StCaps { max_edges: 2000 }
    }
}

/// Longest non-crossing matching in each quadrant, for every cut.
#[derive(Debug, Clone)]
pub struct StCutTable {
    na: usize,
    nb: usize,
    // indexed [alpha * (nb + 1) + beta]
    upper_left: Vec<usize>,
    lower_right: Vec<usize>,
    coords: Vec<EdgeCoord>,
}

impl StCutTable {
    pub fn build(drawing: &TwoLayerDrawing, caps: &StCaps) -> Result<Self> {
        let coords = drawing.coords();
        let m = coords.len();
        if m > caps.max_edges {
            return Err(Error::SearchCap {
                what: "edges for (s,t) search",
                value: m,
                cap: caps.max_edges,
            });
        }
        let na = drawing.order(Side::A).len();
        let nb = drawing.order(Side::B).len();
        let mut sorted = coords.clone();
        sorted.sort_by_key(|c| (c.pos_a, c.pos_b));
        let width = nb + 1;
        let mut upper_left = vec![0; (na + 1) * width];
        let mut lower_right = vec![0; (na + 1) * width];
        let mut best = vec![0usize; m];
        for beta in 0..=nb {
            // chains ending at each edge, using only edges with pos_b > beta
            let mut prefix = vec![0usize; na + 1];
            for i in 0..m {
                let c = &sorted[i];
                if c.pos_b <= beta {
                    best[i] = 0;
                    continue;
                }
                let mut len = 1;
                for j in 0..i {
                    let p = &sorted[j];
                    if best[j] > 0 && p.pos_a < c.pos_a && p.pos_b < c.pos_b {
                        len = len.max(best[j] + 1);
                    }
                }
                best[i] = len;
                prefix[c.pos_a] = prefix[c.pos_a].max(len);
            }
            for alpha in 1..=na {
                prefix[alpha] = prefix[alpha].max(prefix[alpha - 1]);
            }
            for alpha in 0..=na {
                upper_left[alpha * width + beta] = prefix[alpha];
            }

            // chains starting at each edge, using only edges with pos_b <= beta
            let mut suffix = vec![0usize; na + 2];
            for i in (0..m).rev() {
                let c = &sorted[i];
                if c.pos_b > beta {
                    best[i] = 0;
                    continue;
                }
                let mut len = 1;
                for j in i + 1..m {
                    let p = &sorted[j];
                    if best[j] > 0 && p.pos_a > c.pos_a && p.pos_b > c.pos_b {
                        len = len.max(best[j] + 1);
                    }
                }
                best[i] = len;
                suffix[c.pos_a] = suffix[c.pos_a].max(len);
            }
            // lower_right[alpha] = best start among pos_a > alpha
            let mut run = 0;
            for alpha in (0..=na).rev() {
                run = run.max(suffix[alpha + 1]);
                lower_right[alpha * width + beta] = run;
            }
        }
        Ok(StCutTable {
            na,
            nb,
            upper_left,
            lower_right,
            coords,
        })
    }

    /// `(alpha, beta, upper_left, lower_right)` for every cut, alpha-major.
    pub fn cuts(&self) -> impl Iterator<Item = (usize, usize, usize, usize)> + '_ {
        let width = self.nb + 1;
        (0..=self.na).flat_map(move |alpha| {
            (0..=self.nb).map(move |beta| {
                let i = alpha * width + beta;
                (alpha, beta, self.upper_left[i], self.lower_right[i])
            })
        })
    }

    fn quadrant_matching(&self, alpha: usize, beta: usize, upper_left: bool, size: usize) -> Vec<EdgeIndex> {
        let mut region: Vec<&EdgeCoord> = self
            .coords
            .iter()
            .filter(|c| {
                if upper_left {
                    c.pos_a <= alpha && c.pos_b > beta
                } else {
                    c.pos_a > alpha && c.pos_b <= beta
                }
            })
            .collect();
        region.sort_by_key(|c| (c.pos_a, std::cmp::Reverse(c.pos_b), c.edge));
        let bs: Vec<usize> = region.iter().map(|c| c.pos_b).collect();
        let chain = longest_strictly_increasing(&bs);
        debug_assert!(chain.len() >= size);
        chain.into_iter().take(size).map(|i| region[i].edge).collect()
    }

    /// First witness in cut order, if any.
    pub fn find(&self, s: usize, t: usize) -> Option<CrossingWitness> {
        for (alpha, beta, ul, lr) in self.cuts() {
            if ul >= s && lr >= t {
                return Some(CrossingWitness::St {
                    s: self.quadrant_matching(alpha, beta, true, s),
                    t: self.quadrant_matching(alpha, beta, false, t),
                });
            }
            if lr >= s && ul >= t {
                return Some(CrossingWitness::St {
                    s: self.quadrant_matching(alpha, beta, false, s),
                    t: self.quadrant_matching(alpha, beta, true, t),
                });
            }
        }
        None
    }

    /// Maximal achievable `(s, t)` pairs with `s <= s_cap`, `t <= t_cap`.
    pub fn frontier(&self, s_cap: usize, t_cap: usize) -> Vec<(usize, usize)> {
        let mut points = BTreeSet::new();
        for (_, _, ul, lr) in self.cuts() {
            if ul >= 1 && lr >= 1 {
                points.insert((ul.min(s_cap), lr.min(t_cap)));
                points.insert((lr.min(s_cap), ul.min(t_cap)));
            }
        }
        pareto_maximal(points.into_iter().collect())
    }
}

fn pareto_maximal(mut points: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    // sort by s descending, t descending; keep points whose t beats all larger s
    points.sort_by(|x, y| y.cmp(x));
    let mut out = Vec::new();
    let mut best_t = 0;
    for (s, t) in points {
        if t > best_t {
            out.push((s, t));
            best_t = t;
        }
    }
    out.reverse();
    out
}

/// Finds an (s,t)-crossing, or proves there is none.
pub fn st_crossing_exists(
    drawing: &TwoLayerDrawing,
    s: usize,
    t: usize,
    caps: &StCaps,
) -> Result<Option<CrossingWitness>> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidParameter("s and t must be at least 1".into()));
    }
    Ok(StCutTable::build(drawing, caps)?.find(s, t))
}

/// Pareto frontier of achievable `(s, t)` within the caps, both components at least 1.
pub fn st_profile(
    drawing: &TwoLayerDrawing,
    s_cap: usize,
    t_cap: usize,
    caps: &StCaps,
) -> Result<Vec<(usize, usize)>> {
    if s_cap == 0 || t_cap == 0 {
        return Err(Error::InvalidParameter("profile caps must be at least 1".into()));
    }
    Ok(StCutTable::build(drawing, caps)?.frontier(s_cap, t_cap))
}

/// Uncapped frontier.
pub fn st_frontier(drawing: &TwoLayerDrawing, caps: &StCaps) -> Result<Vec<(usize, usize)>> {
    st_profile(drawing, usize::MAX, usize::MAX, caps)
}

/// Minimal `(s, t)` pairs (both at least 1) not dominated by an uncapped
/// frontier, i.e. the pairs for which the drawing has no (s,t)-crossing and
/// every smaller pair in one coordinate is achievable.
pub fn beyond_frontier(frontier: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let max_t = |s: usize| {
        frontier
            .iter()
            .filter(|&&(fs, _)| fs >= s)
            .map(|&(_, ft)| ft)
            .max()
            .unwrap_or(0)
    };
    let s_max = frontier.iter().map(|&(s, _)| s).max().unwrap_or(0);
    let mut out = Vec::new();
    let mut prev = usize::MAX;
    for s in 1..=s_max + 1 {
        let t = max_t(s);
        if t < prev {
            out.push((s, t + 1));
        }
        prev = t;
    }
    out
}
