//! Instance builders shared by the benchmarks in `benches/`.

use thcover::oracle::{generate, GenMode, GenSpec};
use thcover::Graph;

/// First union-of-two-threshold graph, scanning seeds from `seed` upward,
/// whose edge count is within 5% of `target`. The vertex count is chosen so
/// that such graphs are common.
pub fn union_of_two_threshold_near(target: usize, seed: u64) -> Graph {
    // two random threshold graphs with p = 1/2 give about 3n^2/8 edges
    let n = ((target as f64) * 8.0 / 3.0).sqrt().round() as usize;
    (seed..)
        .flat_map(|s| {
            let ns = n.saturating_sub(3).max(2)..=n + 3;
            ns.map(move |k| generate(&GenSpec::random(GenMode::UnionOfTwoThreshold, k, 0.5, s, 1)))
        })
        .map(|g| g.expect("valid spec").next().expect("one graph"))
        .find(|g| g.m().abs_diff(target) * 20 <= target)
        .expect("seed stream is unbounded")
}
