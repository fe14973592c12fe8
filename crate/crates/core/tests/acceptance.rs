//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//! All numeric tolerances are exact; time limits are listed per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use itertools::Itertools;
use twolayer::analysis::*;
use twolayer::caterpillar::is_caterpillar;
use twolayer::decompose::{audit_counting_bounds, decompose, pw_bound};
use twolayer::generators::*;
use twolayer::layout::layout;
use twolayer::pathdecomp::{validate_pd, PathDecomposition};
use twolayer::pathwidth::pathwidth_exact;
use twolayer::{Side, TwoLayerDrawing};

const CAPS: StCaps = StCaps { max_edges: 2000 };
const CORPUS_SEED: u64 = 2024;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.1?}, limit {limit:?}"))
}

fn observation_equivalence() -> Outcome {
    let start = Instant::now();
    let (mut trees, mut searched, mut caterpillars) = (0, 0, 0);
    for n in 1..=10 {
        for t in unlabelled_trees(n) {
            let g = tree_graph(n, &t);
            let cat = is_caterpillar(&g).map_err(|e| e.to_string())?.is_some();
            let pw = pathwidth_exact(&g, 20).map_err(|e| e.to_string())?.0;
            // K1 has pathwidth 0; every larger caterpillar has pathwidth exactly 1
            let pw_small = if n == 1 { pw == 0 } else { pw == 1 };
            ensure(cat == pw_small, || format!("{t:?}: caterpillar {cat}, pathwidth {pw}"))?;
            if n <= 8 {
                let free = has_crossing_free_drawing(&g);
                ensure(cat == free, || format!("{t:?}: caterpillar {cat}, crossing-free drawing {free}"))?;
                searched += 1;
            }
            caterpillars += cat as usize;
            trees += 1;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{trees} trees on 1..=10 vertices ({caterpillars} caterpillars), {searched} with exhaustive order search, 0 discrepancies"
    ))
}

fn corpus() -> impl Iterator<Item = TwoLayerDrawing> {
    (0..10_000).map(|i| random_drawing(CORPUS_SEED, i, 10))
}

fn decompose_validity() -> Outcome {
    let mut edges = 0;
    for (i, d) in corpus().enumerate() {
        let (pd, _) = decompose(&d, &CAPS);
        let v = validate_pd(d.graph(), &pd).map_err(|e| e.to_string())?;
        ensure(v.is_empty(), || format!("drawing {i}: {v:?}"))?;
        edges += d.graph().edge_count();
    }
    Ok(format!("10000 drawings (sides 1..=10, {edges} edges total), 0 invalid"))
}

fn decompose_bound() -> Outcome {
    let (mut pairs, mut checks, mut worst) = (0, 0, 0.0f64);
    for (i, d) in corpus().enumerate() {
        let (pd, cert) = decompose(&d, &CAPS);
        let k = max_crossing_set(&d).0;
        ensure(cert.k == k, || format!("drawing {i}: cover size {} vs max crossing {k}", cert.k))?;
        let w = pd.width().map_err(|e| e.to_string())? as u64;
        let frontier = cert.frontier.as_ref().ok_or_else(|| format!("drawing {i}: frontier missing"))?;
        for &(s, t) in &beyond_frontier(frontier) {
            let absent = st_crossing_exists(&d, s, t, &CAPS).map_err(|e| e.to_string())?.is_none();
            ensure(absent, || format!("drawing {i}: ({s},{t}) listed beyond the frontier but present"))?;
            let bound = pw_bound(k.max(1), s, t).map_err(|e| e.to_string())?;
            ensure(w <= bound, || format!("drawing {i}: width {w} > pw_bound({k},{s},{t}) = {bound}"))?;
            worst = worst.max(w as f64 / bound as f64);
            pairs += 1;
        }
        let audit = audit_counting_bounds(&d, &cert);
        ensure(audit.passed(), || format!("drawing {i}: {:?}", audit.violations))?;
        checks += audit.checks;
    }
    Ok(format!(
        "{pairs} (s,t) pairs checked, largest width/bound ratio {worst:.3}; {checks} audit inequalities, 0 violations"
    ))
}

fn layout_verification() -> Outcome {
    let start = Instant::now();
    let mut widths = [0usize; 16];
    for i in 0..1000 {
        let d = random_drawing(CORPUS_SEED + 1, i, 7);
        let g = d.graph();
        let (k, order) = pathwidth_exact(g, 20).map_err(|e| e.to_string())?;
        let pd = PathDecomposition::from_vertex_order(g, &order);
        let (drawn, cert) = layout(g, &pd, &CAPS).map_err(|e| format!("graph {i}: {e}"))?;
        let c = max_crossing_set(&drawn).0;
        ensure(c <= k + 1, || format!("graph {i}: {c}-crossing at width {k}"))?;
        let st = st_crossing_exists(&drawn, k + 1, k + 1, &CAPS).map_err(|e| e.to_string())?;
        ensure(st.is_none(), || format!("graph {i}: ({0},{0})-crossing at width {k}", k + 1))?;
        ensure(cert.no_k_plus_2_crossing && cert.no_k_plus_1_st_crossing, || format!("graph {i}: flags unset"))?;
        widths[k] += 1;
    }
    within(start, Duration::from_secs(600))?;
    let hist = widths.iter().enumerate().filter(|(_, &c)| c > 0).map(|(k, c)| format!("pw {k}: {c}")).join(", ");
    Ok(format!("1000 graphs on <= 14 vertices ({hist}), 0 failures"))
}

fn worked_examples() -> Outcome {
    let caps = GenCaps::default();
    let mut found = Vec::new();
    for h in 2..=4 {
        let (_, d) = gen_complete_binary_tree(h, &caps).map_err(|e| e.to_string())?;
        let k = max_crossing_set(&d).0;
        ensure(k == 2, || format!("tree h={h}: max crossing {k}"))?;
        found.push(format!("T{h}:{k}"));
    }
    for h in 2..=5 {
        let (_, d) = gen_grid(h, &caps).map_err(|e| e.to_string())?;
        let k = max_crossing_set(&d).0;
        ensure(k == 2, || format!("grid h={h}: max crossing {k}"))?;
        found.push(format!("G{h}:{k}"));
    }
    for h in [3, 4] {
        let pw = pathwidth_exact(&gen_grid(h, &caps).map_err(|e| e.to_string())?.0, 20)
            .map_err(|e| e.to_string())?
            .0;
        ensure(pw == h, || format!("pw(G{h}) = {pw}"))?;
        found.push(format!("pw(G{h})={pw}"));
    }
    for n in 3..=6 {
        let pw = pathwidth_exact(&gen_subdivided_star(n, &caps).map_err(|e| e.to_string())?, 20)
            .map_err(|e| e.to_string())?
            .0;
        ensure(pw == 2, || format!("pw(S{n}) = {pw}"))?;
        found.push(format!("pw(S{n})={pw}"));
    }
    Ok(found.join(" "))
}

fn subdivided_star_lower_bound() -> Outcome {
    let start = Instant::now();
    let caps = GenCaps::default();
    let g = gen_subdivided_star(5, &caps).map_err(|e| e.to_string())?;
    let a: Vec<usize> = g.vertices_on(Side::A).collect();
    let b: Vec<usize> = g.vertices_on(Side::B).collect();
    let mut drawings = 0;
    let mut least = usize::MAX;
    for oa in a.iter().copied().permutations(a.len()) {
        for ob in b.iter().copied().permutations(b.len()) {
            let d = TwoLayerDrawing::new(g.clone(), oa.clone(), ob).map_err(|e| e.to_string())?;
            let c = raw_coords(&d);
            let most = (0..c.len())
                .map(|e| (0..c.len()).filter(|&f| raw_cross(c[e], c[f])).count())
                .max()
                .unwrap();
            least = least.min(most);
            drawings += 1;
        }
    }
    ensure(drawings == 720 * 120, || format!("{drawings} drawings enumerated"))?;
    ensure(least >= 2, || format!("a drawing of S5 has at most {least} crossings per edge"))?;
    let fan = subdivided_star_fan(9, &caps).map_err(|e| e.to_string())?;
    let fan_max = crossings_per_edge(&fan).into_iter().max().unwrap();
    ensure(fan_max >= 4, || format!("S9 fan: {fan_max} crossings on the busiest edge"))?;
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{drawings} drawings of S5, every one has an edge with >= {least} crossings; S9 fan edge with {fan_max}"
    ))
}

fn dilworth() -> Outcome {
    let mut by_k = [0usize; 8];
    for i in 0..1000 {
        let d = random_small_drawing(CORPUS_SEED + 2, i, 12);
        let cover = min_chain_cover(&d);
        let brute = brute_max_crossing_set(&d).map_err(|e| e.to_string())?;
        ensure(cover.len() == brute, || format!("drawing {i}: {} chains, antichain {brute}", cover.len()))?;
        ensure(brute == naive_max_crossing(&d), || format!("drawing {i}: brute-force disagreement"))?;
        cover.verify(&d).map_err(|e| format!("drawing {i}: {e}"))?;
        by_k[brute] += 1;
    }
    let hist = by_k.iter().enumerate().filter(|(_, &c)| c > 0).map(|(k, c)| format!("k={k}: {c}")).join(", ");
    Ok(format!("1000 drawings with <= 12 edges ({hist}), chain count = antichain size"))
}

fn lemma() -> Outcome {
    let (mut instances, mut tight, mut i) = (0, 0, 0u64);
    while instances < 1000 {
        let d = random_drawing(CORPUS_SEED + 3, i, 12);
        i += 1;
        let g = d.graph();
        let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.side(v) == Side::B || g.degree(v) > 0).collect();
        let d = d.induced(&keep);
        let g = d.graph();
        if g.edge_count() == 0 {
            continue;
        }
        let k = max_crossing_set(&d).0;
        let l = maximum_noncrossing_matching(&d).len();
        let deg = g.vertices_on(Side::B).map(|v| g.degree(v)).max().unwrap();
        let r = check_lemma_useful(&d, k, l, deg).map_err(|v| format!("instance {i}: hypotheses fail {v:?}"))?;
        ensure(r.holds, || format!("instance {i}: |A| = {} > {}", r.observed, r.bound))?;
        tight += (r.observed == r.bound) as usize;
        instances += 1;
    }
    Ok(format!("1000 hypothesis-verified instances, 0 failures, {tight} tight"))
}

fn per_edge_crossings() -> Outcome {
    let mut checked = 0;
    for i in 0..3000 {
        let d = random_drawing(CORPUS_SEED + 4, i, 6);
        let g = d.graph();
        if g.vertex_count() > 12 {
            continue;
        }
        let c = crossings_per_edge(&d).into_iter().max().unwrap_or(0);
        let pw = pathwidth_exact(g, 20).map_err(|e| e.to_string())?.0;
        ensure(pw <= c + 1, || format!("drawing {i}: pathwidth {pw} with {c} crossings per edge"))?;
        checked += 1;
    }
    Ok(format!("{checked} drawings on <= 12 vertices, 0 failures"))
}

fn formula() -> Outcome {
    let got = [pw_bound(1, 1, 1), pw_bound(2, 3, 4), pw_bound(1, 2, 1)]
        .map(|r| r.map_err(|e| e.to_string()));
    let got: Vec<u64> = got.into_iter().collect::<Result<_, _>>()?;
    ensure(got == [9, 174, 9], || format!("got {got:?}"))?;
    Ok("pw_bound(1,1,1)=9 pw_bound(2,3,4)=174 pw_bound(1,2,1)=9".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("observation equivalence (exact, < 1 min)", observation_equivalence),
        ("decompose validity (0 failures)", decompose_validity),
        ("decompose width bound and audit (0 failures)", decompose_bound),
        ("layout verification (0 failures, < 10 min)", layout_verification),
        ("worked examples (exact)", worked_examples),
        ("subdivided star lower bound (exact, < 2 min)", subdivided_star_lower_bound),
        ("Dilworth duality (exact)", dilworth),
        ("counting lemma (0 failures)", lemma),
        ("per-edge crossings bound pathwidth (0 failures)", per_edge_crossings),
        ("bound arithmetic (exact)", formula),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{:>2}] {name}: {detail} ({secs:.2}s)", n + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{:>2}] {name}: {detail} ({secs:.2}s)", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
