//! Randomised invariant campaigns over random drawings.
//!
//! Trial `i` draws its instance from a ChaCha8 generator seeded with the
//! campaign seed on stream `i`, so trials are independent and the report does
//! not depend on how they are scheduled across threads.

use std::collections::BTreeMap;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    check_lemma_useful, crossings_per_edge, max_crossing_set, maximum_noncrossing_matching, StCaps,
};
use crate::decompose::{audit_counting_bounds, decompose, decompose_with_matching, pw_bound};
use crate::error::{Error, Result};
use crate::generators::gen_random_with;
use crate::graph::{Side, TwoLayerDrawing};
use crate::json::{DecompositionJson, DrawingJson};
use crate::layout::layout;
use crate::pathdecomp::{validate_pd, PathDecomposition};
use crate::pathwidth::{pathwidth_exact, HARD_PATHWIDTH_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Invariant {
    /// The drawing-to-decomposition output is valid, within the claimed bound,
    /// and no narrower than the exact pathwidth.
    Decompose,
    /// Every counting inequality holds, for the greedy and the maximum matching.
    Audit,
    /// The layout of an optimal decomposition verifies.
    Layout,
    /// `|A| <= k * l * d` once isolated A-vertices are dropped.
    Lemma,
    /// At most `c` crossings per edge implies pathwidth at most `c + 1`.
    PerEdge,
}

impl Invariant {
    pub const ALL: [Invariant; 5] = [
        Invariant::Decompose,
        Invariant::Audit,
        Invariant::Layout,
        Invariant::Lemma,
        Invariant::PerEdge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Decompose => "decompose",
            Invariant::Audit => "audit",
            Invariant::Layout => "layout",
            Invariant::Lemma => "lemma",
            Invariant::PerEdge => "per-edge",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown invariant {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzConfig {
    pub trials: usize,
    /// Inclusive range for `|A|`.
    pub na: (usize, usize),
    /// Inclusive range for `|B|`.
    pub nb: (usize, usize),
    /// Inclusive range for the edge probability.
    pub p: (f64, f64),
    pub seed: u64,
    /// Vertex cap for the exact pathwidth oracle; larger instances skip the
    /// invariants that need it.
    pub pathwidth_cap: usize,
    pub st_caps: StCaps,
    pub invariants: Vec<Invariant>,
    /// Test mode: report the opposite verdict for this invariant.
    pub invert: Option<Invariant>,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            trials: 100,
            na: (1, 8),
            nb: (1, 8),
            p: (0.1, 0.6),
            seed: 0,
            pathwidth_cap: 16,
            st_caps: StCaps::default(),
            invariants: Invariant::ALL.to_vec(),
            invert: None,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if self.na.0 > self.na.1 || self.nb.0 > self.nb.1 {
            return bad(format!("empty size range {:?} / {:?}", self.na, self.nb));
        }
        if !(0.0..=1.0).contains(&self.p.0) || !(0.0..=1.0).contains(&self.p.1) || self.p.0 > self.p.1 {
            return bad(format!("edge probability range {:?} not inside [0,1]", self.p));
        }
        if self.pathwidth_cap > HARD_PATHWIDTH_CAP {
            return bad(format!(
                "pathwidth cap {} above the hard limit {HARD_PATHWIDTH_CAP}",
                self.pathwidth_cap
            ));
        }
        Ok(())
    }

    /// The instance of trial `trial`.
    pub fn instance(&self, trial: usize) -> TwoLayerDrawing {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial as u64);
        let na = rng.gen_range(self.na.0..=self.na.1);
        let nb = rng.gen_range(self.nb.0..=self.nb.1);
        let p = if self.p.0 < self.p.1 {
            rng.gen_range(self.p.0..=self.p.1)
        } else {
            self.p.0
        };
        gen_random_with(na, nb, p, &mut rng)
            .expect("validated probability")
            .1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// Everything needed to replay one failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureDump {
    pub trial: usize,
    pub invariant: Invariant,
    pub message: String,
    pub drawing: DrawingJson,
    /// Output of the decomposer on the drawing, when it ran.
    pub decomposition: Option<DecompositionJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub trials: usize,
    pub seed: u64,
    pub counts: BTreeMap<Invariant, Counts>,
    pub failures: Vec<FailureDump>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_fuzz(config: &FuzzConfig) -> Result<FuzzReport> {
    config.validate()?;
    let per_trial: Vec<Vec<(Invariant, Verdict)>> = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let d = config.instance(trial);
            config.invariants.iter().map(|&inv| (inv, check(config, inv, &d))).collect()
        })
        .collect();

    let mut counts: BTreeMap<Invariant, Counts> =
        config.invariants.iter().map(|&i| (i, Counts::default())).collect();
    let mut failures = Vec::new();
    for (trial, verdicts) in per_trial.into_iter().enumerate() {
        for (inv, verdict) in verdicts {
            let c = counts.get_mut(&inv).expect("selected invariant");
            match verdict {
                Verdict::Pass => c.passed += 1,
                Verdict::Skip(_) => c.skipped += 1,
                Verdict::Fail(message) => {
                    c.failed += 1;
                    failures.push(dump(config, trial, inv, message));
                }
            }
        }
    }
    Ok(FuzzReport {
        trials: config.trials,
        seed: config.seed,
        counts,
        failures,
    })
}

fn dump(config: &FuzzConfig, trial: usize, invariant: Invariant, message: String) -> FailureDump {
    let d = config.instance(trial);
    let decomposition = catch_unwind(AssertUnwindSafe(|| decompose(&d, &config.st_caps)))
        .ok()
        .map(|(pd, _)| DecompositionJson::from_pd(d.graph(), &pd));
    FailureDump {
        trial,
        invariant,
        message,
        drawing: DrawingJson::from_drawing(&d),
        decomposition,
    }
}

/// Re-runs a dumped failure on its stored drawing.
pub fn replay(config: &FuzzConfig, failure: &FailureDump) -> Result<Verdict> {
    let d = failure.drawing.to_drawing()?;
    Ok(check(config, failure.invariant, &d))
}

/// Checks one invariant on one drawing, honouring `config.invert`.
pub fn check(config: &FuzzConfig, invariant: Invariant, d: &TwoLayerDrawing) -> Verdict {
    let verdict = match catch_unwind(AssertUnwindSafe(|| check_raw(config, invariant, d))) {
        Ok(v) => v,
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Verdict::Fail(format!("panicked: {msg}"))
        }
    };
    if config.invert != Some(invariant) {
        return verdict;
    }
    match verdict {
        Verdict::Pass => Verdict::Fail("inverted: invariant held".into()),
        Verdict::Fail(_) => Verdict::Pass,
        skip => skip,
    }
}

fn check_raw(config: &FuzzConfig, invariant: Invariant, d: &TwoLayerDrawing) -> Verdict {
    match invariant {
        Invariant::Decompose => check_decompose(config, d),
        Invariant::Audit => check_audit(config, d),
        Invariant::Layout => check_layout(config, d),
        Invariant::Lemma => check_lemma(d),
        Invariant::PerEdge => check_per_edge(config, d),
    }
}

fn exact_pw(config: &FuzzConfig, d: &TwoLayerDrawing) -> std::result::Result<(usize, PathDecomposition), Verdict> {
    let g = d.graph();
    match pathwidth_exact(g, config.pathwidth_cap) {
        Ok((pw, order)) => Ok((pw, PathDecomposition::from_vertex_order(g, &order))),
        Err(Error::EmptyGraph) => Err(Verdict::Skip("empty graph".into())),
        Err(e) if e.is_cap() => Err(Verdict::Skip(e.to_string())),
        Err(e) => Err(Verdict::Fail(e.to_string())),
    }
}

fn check_decompose(config: &FuzzConfig, d: &TwoLayerDrawing) -> Verdict {
    let g = d.graph();
    let (pd, cert) = decompose(d, &config.st_caps);
    match validate_pd(g, &pd) {
        Ok(v) if v.is_empty() => {}
        Ok(v) => return Verdict::Fail(format!("invalid decomposition: {v:?}")),
        Err(e) => return Verdict::Fail(e.to_string()),
    }
    let width = pd.width().unwrap_or(0);
    if let Some(bound) = cert.claimed_bound {
        if width as u64 > bound {
            return Verdict::Fail(format!("width {width} above bound {bound}"));
        }
    }
    if g.vertex_count() > 0 && g.vertex_count() <= config.pathwidth_cap {
        match exact_pw(config, d) {
            Ok((pw, _)) if pw > width => {
                return Verdict::Fail(format!("width {width} below exact pathwidth {pw}"));
            }
            Ok(_) => {}
            Err(v) => return v,
        }
    }
    Verdict::Pass
}

fn check_audit(config: &FuzzConfig, d: &TwoLayerDrawing) -> Verdict {
    let (_, greedy) = decompose(d, &config.st_caps);
    if greedy.frontier.is_none() {
        return Verdict::Skip("(s,t) search cap exceeded".into());
    }
    let maximum = match decompose_with_matching(d, &config.st_caps, maximum_noncrossing_matching(d)) {
        Ok((_, cert)) => cert,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    for (label, cert) in [("greedy", &greedy), ("maximum", &maximum)] {
        let report = audit_counting_bounds(d, cert);
        if !report.passed() {
            return Verdict::Fail(format!("{label} matching: {:?}", report.violations));
        }
    }
    Verdict::Pass
}

fn check_layout(config: &FuzzConfig, d: &TwoLayerDrawing) -> Verdict {
    let g = d.graph();
    let (k, pd) = match exact_pw(config, d) {
        Ok(x) => x,
        Err(v) => return v,
    };
    let (drawing, cert) = match layout(g, &pd, &config.st_caps) {
        Ok(x) => x,
        Err(e) if e.is_cap() => return Verdict::Skip(e.to_string()),
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    if cert.k != k || cert.max_crossing > k + 1 {
        return Verdict::Fail(format!("certificate {cert:?} for pathwidth {k}"));
    }
    // both directions compose
    let (back, _) = decompose(&drawing, &config.st_caps);
    let bound = pw_bound(k + 1, k + 1, k + 1).expect("small parameters");
    let width = back.width().unwrap_or(0) as u64;
    if width > bound {
        return Verdict::Fail(format!("round trip width {width} above {bound}"));
    }
    Verdict::Pass
}

fn check_lemma(d: &TwoLayerDrawing) -> Verdict {
    let g = d.graph();
    let keep: Vec<_> = (0..g.vertex_count())
        .filter(|&v| g.side(v) == Side::B || g.degree(v) > 0)
        .collect();
    let sub = d.induced(&keep);
    let sg = sub.graph();
    if sg.edge_count() == 0 {
        return Verdict::Skip("no edges".into());
    }
    let k = max_crossing_set(&sub).0;
    let l = maximum_noncrossing_matching(&sub).len();
    let deg = sg.vertices_on(Side::B).map(|v| sg.degree(v)).max().unwrap_or(0);
    match check_lemma_useful(&sub, k, l, deg) {
        Ok(r) if r.holds => Verdict::Pass,
        Ok(r) => Verdict::Fail(format!("|A| = {} > {}", r.observed, r.bound)),
        Err(v) => Verdict::Fail(format!("hypotheses rejected: {v:?}")),
    }
}

fn check_per_edge(config: &FuzzConfig, d: &TwoLayerDrawing) -> Verdict {
    let c = crossings_per_edge(d).into_iter().max().unwrap_or(0);
    match exact_pw(config, d) {
        Ok((pw, _)) if pw > c + 1 => Verdict::Fail(format!("pathwidth {pw} with {c} crossings per edge")),
        Ok(_) => Verdict::Pass,
        Err(v) => v,
    }
}
