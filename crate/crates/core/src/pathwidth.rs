//! Exact pathwidth via vertex separation over all vertex subsets.
//!
//! `f(S)` is the best vertex separation achievable by a layout whose first
//! `|S|` vertices are `S`:
//!
//! ```text
//! f({})  = 0
//! f(S)   = max(|boundary(S)|, min over v in S of f(S - v))
//! ```
//!
//! where `boundary(S)` is the set of vertices in `S` with a neighbour outside
//! `S`. The pathwidth is `f(V)`.

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, VertexIndex};

/// Default vertex cap for [`pathwidth_exact`].
pub const DEFAULT_PATHWIDTH_CAP: usize = 20;
/// The table takes `2^n` bytes; larger caps are clamped to this.
pub const HARD_PATHWIDTH_CAP: usize = 26;

/// Exact pathwidth and a vertex order achieving it.
pub fn pathwidth_exact(graph: &BipartiteGraph, cap: usize) -> Result<(usize, Vec<VertexIndex>)> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let cap = cap.min(HARD_PATHWIDTH_CAP);
    if n > cap {
        return Err(Error::SizeCap {
            what: "vertices for exact pathwidth",
            value: n,
            cap,
        });
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| graph.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let full: u32 = (1u32 << n) - 1;
    let boundary = |s: u32| -> u8 {
        let outside = !s & full;
        let mut rest = s;
        let mut count = 0u8;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if nbr[v] & outside != 0 {
                count += 1;
            }
        }
        count
    };

    let mut f = vec![0u8; 1usize << n];
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            best = best.min(f[(s ^ bit) as usize]);
        }
        f[s as usize] = best.max(boundary(s));
    }

    let pw = f[full as usize];
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let mut rest = s;
        loop {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            if f[(s ^ bit) as usize] <= f[s as usize] {
                order.push(bit.trailing_zeros() as usize);
                s ^= bit;
                break;
            }
        }
    }
    order.reverse();
    Ok((pw as usize, order))
}

/// Vertex separation of a given layout: the largest number of placed
/// vertices that still have an unplaced neighbour.
pub fn vertex_separation(graph: &BipartiteGraph, order: &[VertexIndex]) -> usize {
    let mut pos = vec![usize::MAX; graph.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    (0..order.len())
        .map(|i| {
            order[..=i]
                .iter()
                .filter(|&&u| graph.neighbors(u).iter().any(|&w| pos[w] > i))
                .count()
        })
        .max()
        .unwrap_or(0)
}
