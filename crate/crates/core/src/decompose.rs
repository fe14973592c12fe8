//! Drawing to path-decomposition.
//!
//! Given any 2-layer drawing:
//!
//! 1. cover the edges by `k` non-crossing chains and orient each chain's
//!    caterpillar forest so every vertex has out-degree at most 1 per chain;
//! 2. take an inclusion-maximal non-crossing matching `X = e_1 < ... < e_n`;
//! 3. split the unmatched vertices into gap classes `Y_0 .. Y_n` by where they
//!    fall between consecutive matching edges;
//! 4. `V_i` is the closed out-neighbourhood of both ends of `e_i` plus the head
//!    of every arc crossing `e_i`;
//! 5. `V_{i,j} = V_i ∪ V_{i+1} ∪ N+[v_{i,j}]` for the `j`-th vertex of `Y_i`;
//! 6. the bags are `V_{0,*}; V_1; V_{1,*}; ...; V_n; V_{n,*}`.
//!
//! The result is a path-decomposition of every drawing. Its width is bounded
//! by [`pw_bound`] whenever the drawing has no `(k+1)`-crossing and no
//! `(s,t)`-crossing; [`audit_counting_bounds`] checks the intermediate counts.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::analysis::{
    beyond_frontier, maximal_noncrossing_matching, min_chain_cover, ChainCover, StCaps, StCutTable,
};
use crate::analysis::edges_cross;
use crate::error::{Error, Result};
use crate::graph::{EdgeIndex, Side, TwoLayerDrawing, VertexIndex};
use crate::pathdecomp::{validate_pd, PathDecomposition};

/// Which rule produced a bag. `Vi(i)` is 1-based in `i`; `Vij(i, j)` has
/// `i` in `0..=n` and `j` 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BagRule {
    Vi(usize),
    Vij(usize, usize),
}

/// Everything needed to reproduce and audit the decomposition.
#[derive(Debug, Clone)]
pub struct Thm3Certificate {
    /// Number of chains, equal to the maximum crossing set size.
    pub k: usize,
    pub cover: ChainCover,
    /// The matching `e_1 .. e_n` in edge order.
    pub matching: Vec<EdgeIndex>,
    /// `Y_0 .. Y_n`, each by ascending rank, side A first.
    pub gaps: Vec<Vec<VertexIndex>>,
    pub provenance: Vec<BagRule>,
    /// Uncapped `(s,t)` frontier, or `None` when the search cap was hit.
    pub frontier: Option<Vec<(usize, usize)>>,
    /// Minimal `(s,t)` pairs with no crossing, derived from the frontier.
    pub beyond: Vec<(usize, usize)>,
    /// Smallest [`pw_bound`] over `beyond` (with `k` raised to 1 for edgeless drawings).
    pub claimed_bound: Option<u64>,
}

impl Thm3Certificate {
    /// Recomputes the bag sequence from the certificate's parts alone.
    pub fn rebuild_bags(&self, drawing: &TwoLayerDrawing) -> Vec<Vec<VertexIndex>> {
        let v_sets = main_bags(drawing, &self.cover, &self.matching);
        self.provenance
            .iter()
            .map(|rule| match *rule {
                BagRule::Vi(i) => v_sets[i - 1].iter().copied().collect(),
                BagRule::Vij(i, j) => self.gap_bag(&v_sets, i, j).into_iter().collect(),
            })
            .collect()
    }

    fn gap_bag(&self, v_sets: &[BTreeSet<VertexIndex>], i: usize, j: usize) -> BTreeSet<VertexIndex> {
        let n = self.matching.len();
        let mut bag = BTreeSet::new();
        if i >= 1 {
            bag.extend(v_sets[i - 1].iter().copied());
        }
        if i < n {
            bag.extend(v_sets[i].iter().copied());
        }
        bag.extend(self.cover.closed_out_neighborhood(self.gaps[i][j - 1]));
        bag
    }
}

/// `V_1 .. V_n` (0-based storage).
fn main_bags(drawing: &TwoLayerDrawing, cover: &ChainCover, matching: &[EdgeIndex]) -> Vec<BTreeSet<VertexIndex>> {
    let graph = drawing.graph();
    matching
        .iter()
        .map(|&e| {
            let (x, y) = graph.edges()[e];
            let mut set: BTreeSet<VertexIndex> = cover.closed_out_neighborhood(x).into_iter().collect();
            set.extend(cover.closed_out_neighborhood(y));
            for arc in cover.arcs() {
                if edges_cross(drawing, arc.edge, e).expect("edges of this drawing") {
                    set.insert(arc.head);
                }
            }
            set
        })
        .collect()
}

/// Gap index of every vertex (`None` for matching endpoints).
fn gap_index(drawing: &TwoLayerDrawing, matching: &[EdgeIndex]) -> Vec<Option<usize>> {
    let graph = drawing.graph();
    let mut matched = vec![false; graph.vertex_count()];
    let mut ranks_a = Vec::with_capacity(matching.len());
    let mut ranks_b = Vec::with_capacity(matching.len());
    for &e in matching {
        let (x, y) = graph.edges()[e];
        matched[x] = true;
        matched[y] = true;
        ranks_a.push(drawing.rank(x));
        ranks_b.push(drawing.rank(y));
    }
    (0..graph.vertex_count())
        .map(|v| {
            if matched[v] {
                return None;
            }
            let ranks = match graph.side(v) {
                Side::A => &ranks_a,
                Side::B => &ranks_b,
            };
            Some(ranks.partition_point(|&r| r < drawing.rank(v)))
        })
        .collect()
}

/// Builds the decomposition and its certificate. Total: it works for every
/// drawing. The `(s,t)` frontier is only measured when the drawing is within
/// `caps`.
///
/// # Panics
///
/// If the produced sequence is not a valid path-decomposition, which would be
/// an implementation bug.
pub fn decompose(drawing: &TwoLayerDrawing, caps: &StCaps) -> (PathDecomposition, Thm3Certificate) {
    decompose_with_matching(drawing, caps, maximal_noncrossing_matching(drawing))
        .expect("the greedy matching is inclusion-maximal")
}

/// [`decompose`] with a caller-chosen matching `X`, which must be an
/// inclusion-maximal non-crossing matching, for example
/// [`crate::analysis::maximum_noncrossing_matching`].
pub fn decompose_with_matching(
    drawing: &TwoLayerDrawing,
    caps: &StCaps,
    mut matching: Vec<EdgeIndex>,
) -> Result<(PathDecomposition, Thm3Certificate)> {
    let graph = drawing.graph();
    check_maximal_matching(drawing, &matching)?;
    matching.sort_by_key(|&e| drawing.rank(graph.edges()[e].0));
    let cover = min_chain_cover(drawing);
    let k = cover.len();
    let n = matching.len();

    let gap_of = gap_index(drawing, &matching);
    let mut gaps = vec![Vec::new(); n + 1];
    for side in [Side::A, Side::B] {
        for &v in drawing.order(side) {
            if let Some(i) = gap_of[v] {
                gaps[i].push(v);
            }
        }
    }
    for gap in &gaps {
        for (p, &u) in gap.iter().enumerate() {
            for &w in &gap[p + 1..] {
                assert!(
                    graph.find_edge(u, w).is_none(),
                    "gap class is not independent: {} - {}",
                    graph.name(u),
                    graph.name(w)
                );
            }
        }
    }

    let mut provenance = Vec::new();
    for i in 0..=n {
        if i >= 1 {
            provenance.push(BagRule::Vi(i));
        }
        for j in 1..=gaps[i].len() {
            provenance.push(BagRule::Vij(i, j));
        }
    }

    let (frontier, beyond, claimed_bound) = match StCutTable::build(drawing, caps) {
        Ok(table) => {
            let frontier = table.frontier(usize::MAX, usize::MAX);
            let beyond = beyond_frontier(&frontier);
            let bound = beyond
                .iter()
                .filter_map(|&(s, t)| pw_bound(k.max(1), s, t).ok())
                .min();
            (Some(frontier), beyond, bound)
        }
        Err(_) => (None, Vec::new(), None),
    };

    let cert = Thm3Certificate {
        k,
        cover,
        matching,
        gaps,
        provenance,
        frontier,
        beyond,
        claimed_bound,
    };
    let mut bags = cert.rebuild_bags(drawing);
    if bags.is_empty() {
        // only the empty graph gets here
        bags.push(Vec::new());
    }
    let pd = PathDecomposition::new(bags);
    let violations = validate_pd(graph, &pd).expect("bags only hold graph vertices");
    assert!(
        violations.is_empty(),
        "decomposition construction produced an invalid path-decomposition: {violations:?}"
    );
    Ok((pd, cert))
}

fn check_maximal_matching(drawing: &TwoLayerDrawing, matching: &[EdgeIndex]) -> Result<()> {
    let graph = drawing.graph();
    let bad = |msg: String| Err(Error::InvalidParameter(msg));
    let mut used = vec![false; graph.vertex_count()];
    for (p, &e) in matching.iter().enumerate() {
        let (x, y) = graph.edge(e)?;
        if used[x] || used[y] {
            return bad(format!("edge {e} shares an endpoint with another matching edge"));
        }
        used[x] = true;
        used[y] = true;
        for &f in &matching[p + 1..] {
            if edges_cross(drawing, e, f)? {
                return bad(format!("matching edges {e} and {f} cross"));
            }
        }
    }
    for (e, &(x, y)) in graph.edges().iter().enumerate() {
        if !used[x] && !used[y] && !matching.iter().any(|&f| edges_cross(drawing, e, f).unwrap_or(true)) {
            return bad(format!("edge {e} can be added to the matching"));
        }
    }
    Ok(())
}

/// `8k^2(t-1) + 4k^2(s-1)^2(s-2) + 5k + 4`.
pub fn pw_bound(k: usize, s: usize, t: usize) -> Result<u64> {
    if k == 0 || s == 0 || t == 0 {
        return Err(Error::InvalidParameter(format!(
            "bound needs k, s, t >= 1 (got {k}, {s}, {t})"
        )));
    }
    let overflow = || Error::InvalidParameter("bound overflows u64".into());
    let (k, s, t) = (k as u64, s as u64, t as u64);
    let k2 = k.checked_mul(k).ok_or_else(overflow)?;
    let first = k2
        .checked_mul(8)
        .and_then(|x| x.checked_mul(t - 1))
        .ok_or_else(overflow)?;
    let second = k2
        .checked_mul(4)
        .and_then(|x| x.checked_mul((s - 1) * (s - 1)))
        .and_then(|x| x.checked_mul(s.saturating_sub(2)))
        .ok_or_else(overflow)?;
    first
        .checked_add(second)
        .and_then(|x| x.checked_add(5 * k + 4))
        .ok_or_else(overflow)
}

/// One failed counting inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum AuditViolation {
    /// `|N_i| <= 2(k+1)`.
    Neighbourhood { i: usize, observed: usize, bound: usize },
    /// `|Y_{i,j}| <= 2k^2 |j - i|`.
    GapArcs { i: usize, j: usize, observed: usize, bound: usize },
    /// `|P_i| <= 4k^2 (t-1)`.
    CrossingHeads { i: usize, s: usize, t: usize, observed: usize, bound: usize },
    /// `|V_i| <= 2(k+1) + 4k^2(t-1) + 2k^2(s-1)^2(s-2)`.
    MainBag { i: usize, s: usize, t: usize, observed: usize, bound: usize },
    /// `|V_{i,j}| <= |V_i| + |V_{i+1}| + (k+1)`.
    GapBag { i: usize, j: usize, observed: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    /// No matching edges: nothing to constrain.
    pub vacuous: bool,
    /// The `(s,t)` pairs the `s,t`-dependent inequalities were checked at.
    pub pairs: Vec<(usize, usize)>,
    pub checks: usize,
    pub violations: Vec<AuditViolation>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Audits every counting inequality at every `(s,t)` pair recorded as
/// beyond the frontier in the certificate.
pub fn audit_counting_bounds(drawing: &TwoLayerDrawing, cert: &Thm3Certificate) -> AuditReport {
    audit_at(drawing, cert, &cert.beyond)
}

/// Same as [`audit_counting_bounds`] for caller-chosen pairs. The pairs must
/// admit no `(s,t)`-crossing for the inequalities to be guaranteed.
pub fn audit_counting_bounds_at(
    drawing: &TwoLayerDrawing,
    cert: &Thm3Certificate,
    pairs: &[(usize, usize)],
) -> AuditReport {
    audit_at(drawing, cert, pairs)
}

fn audit_at(drawing: &TwoLayerDrawing, cert: &Thm3Certificate, pairs: &[(usize, usize)]) -> AuditReport {
    let graph = drawing.graph();
    let k = cert.k;
    let k2 = k * k;
    let n = cert.matching.len();
    let mut violations = Vec::new();
    let mut checks = 0;
    if n == 0 {
        return AuditReport {
            vacuous: true,
            pairs: pairs.to_vec(),
            checks,
            violations,
        };
    }

    for (i, &e) in cert.matching.iter().enumerate() {
        let (x, y) = graph.edges()[e];
        let mut nbhd: BTreeSet<_> = cert.cover.closed_out_neighborhood(x).into_iter().collect();
        nbhd.extend(cert.cover.closed_out_neighborhood(y));
        checks += 1;
        if nbhd.len() > 2 * (k + 1) {
            violations.push(AuditViolation::Neighbourhood {
                i: i + 1,
                observed: nbhd.len(),
                bound: 2 * (k + 1),
            });
        }
    }

    // Y_{i,j}: heads in Y_i of arcs whose tail is in Y_j
    let gap_of = gap_index(drawing, &cert.matching);
    let mut gap_arcs: HashMap<(usize, usize), BTreeSet<VertexIndex>> = HashMap::new();
    for arc in cert.cover.arcs() {
        if let (Some(i), Some(j)) = (gap_of[arc.head], gap_of[arc.tail]) {
            gap_arcs.entry((i, j)).or_default().insert(arc.head);
        }
    }
    let mut keys: Vec<_> = gap_arcs.keys().copied().collect();
    keys.sort_unstable();
    for (i, j) in keys {
        let observed = gap_arcs[&(i, j)].len();
        let bound = 2 * k2 * i.abs_diff(j);
        checks += 1;
        if observed > bound {
            violations.push(AuditViolation::GapArcs { i, j, observed, bound });
        }
    }

    // crossing table: crosses[arc][i] for matching edge e_{i+1}
    let arcs = cert.cover.arcs();
    let crosses: Vec<Vec<bool>> = arcs
        .iter()
        .map(|arc| {
            cert.matching
                .iter()
                .map(|&e| edges_cross(drawing, arc.edge, e).expect("edges of this drawing"))
                .collect()
        })
        .collect();

    let v_sets = main_bags(drawing, &cert.cover, &cert.matching);
    for &(s, t) in pairs {
        for i in 0..n {
            // windows e_{i-s+1}..e_i and e_i..e_{i+s-1}, 0-based, only if complete
            let mut heads = BTreeSet::new();
            for (a, arc) in arcs.iter().enumerate() {
                let left = i + 1 >= s && (i + 1 - s..=i).all(|w| crosses[a][w]);
                let right = i + s <= n && (i..i + s).all(|w| crosses[a][w]);
                if left || right {
                    heads.insert(arc.head);
                }
            }
            let bound = 4 * k2 * (t - 1);
            checks += 1;
            if heads.len() > bound {
                violations.push(AuditViolation::CrossingHeads {
                    i: i + 1,
                    s,
                    t,
                    observed: heads.len(),
                    bound,
                });
            }
            let bound = 2 * (k + 1) + 4 * k2 * (t - 1) + 2 * k2 * (s - 1) * (s - 1) * s.saturating_sub(2);
            checks += 1;
            if v_sets[i].len() > bound {
                violations.push(AuditViolation::MainBag {
                    i: i + 1,
                    s,
                    t,
                    observed: v_sets[i].len(),
                    bound,
                });
            }
        }
    }

    for i in 0..=n {
        for j in 1..=cert.gaps[i].len() {
            let bag = cert.gap_bag(&v_sets, i, j);
            let left = if i >= 1 { v_sets[i - 1].len() } else { 0 };
            let right = if i < n { v_sets[i].len() } else { 0 };
            let bound = left + right + k + 1;
            checks += 1;
            if bag.len() > bound {
                violations.push(AuditViolation::GapBag {
                    i,
                    j,
                    observed: bag.len(),
                    bound,
                });
            }
        }
    }

    AuditReport {
        vacuous: false,
        pairs: pairs.to_vec(),
        checks,
        violations,
    }
}
