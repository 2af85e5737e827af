//! Shared helpers for the criterion benchmarks.

use cintervals_core::model::Sequence;
use cintervals_core::pipeline::{find_common_intervals, SearchOptions, Stats};
use cintervals_core::synth::generate;

/// Builds a seeded input pair from the synthetic generator.
pub fn input_pair(n: usize, p: usize, q: usize, seed: u64) -> (Sequence, Sequence) {
    let t = Sequence::from_codes(&generate(n, p, q, seed), p);
    let s = Sequence::from_codes(&generate(n, p, q, seed + 1), p);
    (t, s)
}

/// Runs the search, discarding records; returns (record count, stats).
pub fn run_counting(t: &Sequence, s: &Sequence) -> (u64, Stats) {
    let opts = SearchOptions::default();
    let mut count = 0u64;
    let stats = find_common_intervals(t, s, &opts, &mut |_| count += 1);
    (count, stats)
}
