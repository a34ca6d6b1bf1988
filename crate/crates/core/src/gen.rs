//! Deterministic instance generators.
//!
//! Random instances come from [`XorShift64Star`], a fixed generator chosen so
//! corpora can be reproduced from `(parameters, seed)` in any language:
//!
//! ```text
//! seeding (splitmix64):  z = seed + 0x9E3779B97F4A7C15
//!                        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//!                        z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//!                        state = z ^ (z >> 31)      (0 is replaced by 0x9E3779B97F4A7C15)
//! step:                  x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27
//!                        output = x * 0x2545F4914F6CDD1D
//! below(b):              (output * b) >> 64         (128-bit product)
//! ```
//!
//! All arithmetic wraps modulo 2^64.

use std::collections::HashSet;

use crate::error::GraphError;
use crate::graph::{Graph, Vertex};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(GOLDEN);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        XorShift64Star {
            state: if z == 0 { GOLDEN } else { z },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Value in `0..bound`. `bound` must be positive.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }
}

fn require_positive(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    Ok(())
}

/// Path `0 - 1 - .. - (n-1)`.
pub fn gen_path(n: usize) -> Result<Graph, GraphError> {
    require_positive(n)?;
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// Star with hub `0` and leaves `1..n`.
pub fn gen_star(n: usize) -> Result<Graph, GraphError> {
    require_positive(n)?;
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

pub fn gen_complete(n: usize) -> Result<Graph, GraphError> {
    require_positive(n)?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Spider with center `0` and one leg per entry of `legs`; leg vertices are
/// numbered consecutively outward.
pub fn gen_spider(legs: &[usize]) -> Result<Graph, GraphError> {
    if legs.is_empty() {
        return Err(GraphError::BadParameters("spider needs at least one leg".into()));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    let g = Graph::from_edges(n, edges)?;
    assert!(is_spider(&g));
    Ok(g)
}

/// Caterpillar with spine `0..spine` and `legs[i]` leaves on spine vertex `i`.
pub fn gen_caterpillar(spine: usize, legs: &[usize]) -> Result<Graph, GraphError> {
    if spine == 0 {
        return Err(GraphError::BadParameters("spine must be nonempty".into()));
    }
    if legs.len() != spine {
        return Err(GraphError::BadParameters(format!(
            "expected {spine} leg counts, got {}",
            legs.len()
        )));
    }
    let n = spine + legs.iter().sum::<usize>();
    let mut edges: Vec<_> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut next = spine;
    for (s, &count) in legs.iter().enumerate() {
        for _ in 0..count {
            edges.push((s, next));
            next += 1;
        }
    }
    let g = Graph::from_edges(n, edges)?;
    assert!(is_caterpillar(&g));
    Ok(g)
}

/// Decodes a Prüfer sequence over `0..n` (`n = seq.len() + 2`) by repeatedly
/// joining the smallest current leaf to the next sequence entry.
pub fn prufer_decode(seq: &[Vertex]) -> Result<Graph, GraphError> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(GraphError::VertexOutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a tree has leaves");
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, edges)
}

/// Uniform random labelled tree: a Prüfer sequence of `n - 2` draws of
/// `below(n)`, decoded by [`prufer_decode`].
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph, GraphError> {
    require_positive(n)?;
    if n == 1 {
        return Graph::from_edges(1, []);
    }
    let mut rng = XorShift64Star::new(seed);
    let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.below(n)).collect();
    prufer_decode(&seq)
}

/// Random tree on `n` vertices plus `m - n + 1` distinct extra edges.
pub fn gen_random_connected(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    require_positive(n)?;
    let max_edges = n * (n - 1) / 2;
    if m + 1 < n || m > max_edges {
        return Err(GraphError::BadParameters(format!(
            "m={m} outside {}..={max_edges} for n={n}",
            n - 1
        )));
    }
    let tree = gen_random_tree(n, seed)?;
    // Extra edges draw from a stream separate from the tree's.
    let mut rng = XorShift64Star::new(seed ^ GOLDEN);
    let mut present: HashSet<(Vertex, Vertex)> = tree.edges().collect();
    let mut edges: Vec<_> = tree.edges().collect();
    let extra = m - (n - 1);
    if 2 * extra <= max_edges - (n - 1) {
        while edges.len() < m {
            let (u, v) = (rng.below(n), rng.below(n));
            let e = (u.min(v), u.max(v));
            if u != v && present.insert(e) {
                edges.push(e);
            }
        }
    } else {
        // Dense request: partial Fisher-Yates over the non-edges.
        let mut missing: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|e| !present.contains(e))
            .collect();
        for i in 0..extra {
            let j = i + rng.below(missing.len() - i);
            missing.swap(i, j);
            edges.push(missing[i]);
        }
        present.clear();
    }
    Graph::from_edges(n, edges)
}

/// Spider on `n` vertices with a seeded number of legs and seeded leg lengths.
pub fn gen_random_spider(n: usize, seed: u64) -> Result<Graph, GraphError> {
    require_positive(n)?;
    if n == 1 {
        return Graph::from_edges(1, []);
    }
    let mut rng = XorShift64Star::new(seed);
    let max_legs = (n - 1).min(12);
    let legs_count = 1 + rng.below(max_legs);
    let mut legs = vec![1; legs_count];
    for _ in 0..(n - 1 - legs_count) {
        legs[rng.below(legs_count)] += 1;
    }
    gen_spider(&legs)
}

/// Caterpillar on `n` vertices with a seeded spine length and seeded leaf
/// placement.
pub fn gen_random_caterpillar(n: usize, seed: u64) -> Result<Graph, GraphError> {
    require_positive(n)?;
    let mut rng = XorShift64Star::new(seed);
    let spine = 1 + rng.below(n);
    let mut legs = vec![0; spine];
    for _ in 0..(n - spine) {
        legs[rng.below(spine)] += 1;
    }
    gen_caterpillar(spine, &legs)
}

/// A tree with at most one vertex of degree three or more.
pub fn is_spider(g: &Graph) -> bool {
    g.is_tree() && (0..g.n()).filter(|&v| g.degree(v) >= 3).count() <= 1
}

/// A tree whose non-leaf vertices induce a path.
pub fn is_caterpillar(g: &Graph) -> bool {
    if !g.is_tree() {
        return false;
    }
    let inner = |v: Vertex| g.degree(v) > 1;
    (0..g.n())
        .filter(|&v| inner(v))
        .all(|v| g.neighbors(v).iter().filter(|&&w| inner(w)).count() <= 2)
}
