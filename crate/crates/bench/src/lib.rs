//! Fixed instance sets shared by the criterion benches.

use burnbound::gen::{gen_path, gen_random_caterpillar, gen_random_connected, gen_random_spider, gen_random_tree};
use burnbound::Graph;

pub const TREE_SIZES: [usize; 4] = [100, 1_000, 10_000, 100_000];

/// Named tree instances of size `n`, one per family.
pub fn tree_instances(n: usize, seed: u64) -> Vec<(&'static str, Graph)> {
    vec![
        ("random-tree", gen_random_tree(n, seed).unwrap()),
        ("path", gen_path(n).unwrap()),
        ("spider", gen_random_spider(n, seed).unwrap()),
        ("caterpillar", gen_random_caterpillar(n, seed).unwrap()),
    ]
}

/// Sparse connected graph with about twice as many edges as vertices.
pub fn sparse_graph(n: usize, seed: u64) -> Graph {
    gen_random_connected(n, (2 * n).min(n * (n - 1) / 2).max(n - 1), seed).unwrap()
}
