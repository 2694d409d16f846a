//! Shared inputs for the benchmarks.

use blockmean_core::{random_block_graph, seeded_rng, Graph};

/// `count` seeded random block graphs of order `n`.
pub fn block_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| random_block_graph(n, &mut rng).expect("valid order"))
        .collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_are_stable() {
        assert_eq!(super::block_graphs(9, 3, 1), super::block_graphs(9, 3, 1));
    }
}
