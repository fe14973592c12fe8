//! Crossing structure of a 2-layer drawing.
//!
//! Two edges cross exactly when they are incomparable in the dominance order
//! on `(pos_a, pos_b)`, so antichains are pairwise-crossing sets and chains are
//! non-crossing sets. Everything here works on that 2-D picture.

mod chains;
mod crossing;
mod lemma;
mod st;

pub use chains::{
    brute_max_crossing_set, max_crossing_set, maximal_noncrossing_matching,
    maximum_noncrossing_matching, min_chain_cover, Arc, ChainCover, BRUTE_FORCE_EDGE_CAP,
};
pub use crossing::{crossings_per_edge, edges_cross, CrossingWitness};
pub use lemma::{check_lemma_useful, HypothesisViolation, LemmaReport};
pub use st::{
    beyond_frontier, st_crossing_exists, st_frontier, st_profile, StCaps, StCutTable,
};
