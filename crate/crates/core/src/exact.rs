//! Exhaustive ground-truth oracles for small graphs.
//!
//! Vertex sets are `u64` bitmasks, so both searches are limited to 64
//! vertices; in practice they are only fast up to about twenty.

use std::collections::HashSet;

use crate::error::{ExactError, GraphError};
use crate::graph::{Graph, Vertex, UNREACHABLE};
use crate::schedule::BurnSchedule;

pub const MAX_BITMASK_VERTICES: usize = 64;

type Mask = u64;

/// Ball masks `balls[v][r]` for every radius up to the eccentricity of `v`
/// (larger radii reuse the last entry).
struct Balls {
    n: usize,
    balls: Vec<Vec<Mask>>,
    full: Mask,
}

impl Balls {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let balls = (0..n)
            .map(|s| {
                let dist = g.bfs_distances(s);
                let ecc = dist.iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0);
                (0..=ecc)
                    .map(|r| {
                        dist.iter()
                            .enumerate()
                            .filter(|&(_, &d)| d <= r)
                            .fold(0, |m, (v, _)| m | (1 << v))
                    })
                    .collect()
            })
            .collect();
        let full = if n == 64 { !0 } else { (1u64 << n) - 1 };
        Balls { n, balls, full }
    }

    fn ball(&self, v: Vertex, r: usize) -> Mask {
        let b = &self.balls[v];
        b[r.min(b.len() - 1)]
    }

    fn expand(&self, set: Mask, r: usize) -> Mask {
        iter_bits(set).fold(set, |acc, v| acc | self.ball(v, r))
    }

    /// Largest ball of each radius `0..=max_r`.
    fn max_ball_sizes(&self, max_r: usize) -> Vec<usize> {
        (0..=max_r)
            .map(|r| {
                (0..self.n)
                    .map(|v| self.ball(v, r).count_ones() as usize)
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }
}

fn iter_bits(mut m: Mask) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

fn check_size(g: &Graph) -> Result<(), ExactError> {
    if g.n() > MAX_BITMASK_VERTICES {
        return Err(ExactError::TooLarge {
            n: g.n(),
            limit: MAX_BITMASK_VERTICES,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactBurn {
    pub burning_number: usize,
    /// An optimal schedule; valid under strict simulation.
    pub witness: BurnSchedule,
}

/// Least `k <= max_k` such that some choice of sources burns `g` within `k`
/// rounds, by iterative deepening over `k` and depth-first search over the
/// source lit in each round.
pub fn exact_burning_number(g: &Graph, max_k: usize) -> Result<ExactBurn, ExactError> {
    check_size(g)?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let balls = Balls::new(g);
    let cap = balls.max_ball_sizes(max_k);
    for k in 1..=max_k {
        let mut search = BurnSearch {
            balls: &balls,
            k,
            cap: &cap,
            failed: HashSet::new(),
            sources: Vec::with_capacity(k),
        };
        if search.run(1, 0) {
            return Ok(ExactBurn {
                burning_number: k,
                witness: BurnSchedule::from_sequence(&search.sources),
            });
        }
    }
    Err(ExactError::Exceeded { max_k })
}

struct BurnSearch<'a> {
    balls: &'a Balls,
    k: usize,
    /// `cap[r]`: most vertices any single ball of radius `r` holds.
    cap: &'a [usize],
    failed: HashSet<(Mask, usize)>,
    sources: Vec<Vertex>,
}

impl BurnSearch<'_> {
    /// Plays round `round` starting from the burned set left by the previous
    /// round. Returns whether the graph can be fully burned by round `k`.
    fn run(&mut self, round: usize, burned: Mask) -> bool {
        let full = self.balls.full;
        let burned = self.balls.expand(burned, 1);
        if burned == full {
            return true;
        }
        if round > self.k || self.failed.contains(&(burned, round)) {
            return false;
        }
        // Fire already present reaches radius k - round by the last round;
        // each source lit from now on adds at most one ball.
        let left = self.k - round;
        let reach = self.balls.expand(burned, left);
        let capacity: usize = (0..=left).map(|r| self.cap[r]).sum();
        if ((full & !reach).count_ones() as usize) > capacity {
            self.failed.insert((burned, round));
            return false;
        }
        for v in iter_bits(full & !burned) {
            self.sources.push(v);
            let next = burned | (1 << v);
            if next == full || self.run(round + 1, next) {
                return true;
            }
            self.sources.pop();
        }
        self.failed.insert((burned, round));
        false
    }
}

/// A ball in a cover witness with the vertices assigned to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverPiece {
    pub radius: usize,
    pub center: Vertex,
    pub vertices: Vec<Vertex>,
}

/// Decides whether the tree is covered by `k` balls of radii `k-1, .., 0`
/// (some possibly unused), which for trees is equivalent to a burning
/// schedule of length `k`. Returns the pieces of one such partition.
pub fn tree_cover_check(tree: &Graph, k: usize) -> Result<Option<Vec<CoverPiece>>, ExactError> {
    if !tree.is_tree() {
        return Err(GraphError::NotATree {
            n: tree.n(),
            m: tree.edge_count(),
        }
        .into());
    }
    check_size(tree)?;
    let balls = Balls::new(tree);
    let cap = balls.max_ball_sizes(k.saturating_sub(1));
    let mut search = CoverSearch {
        balls: &balls,
        k,
        cap: &cap,
        failed: HashSet::new(),
        chosen: Vec::new(),
    };
    if !search.run(0, 0) {
        return Ok(None);
    }
    let mut assigned: Mask = 0;
    let mut pieces = Vec::new();
    for &(radius, center) in &search.chosen {
        let own = balls.ball(center, radius) & !assigned;
        assigned |= own;
        pieces.push(CoverPiece {
            radius,
            center,
            vertices: iter_bits(own).collect(),
        });
    }
    pieces.sort_by_key(|p| std::cmp::Reverse(p.radius));
    Ok(Some(pieces))
}

struct CoverSearch<'a> {
    balls: &'a Balls,
    k: usize,
    cap: &'a [usize],
    failed: HashSet<(Mask, u64)>,
    chosen: Vec<(usize, Vertex)>,
}

impl CoverSearch<'_> {
    /// The smallest uncovered vertex must lie in some ball; branch on which
    /// unused radius and which center within that radius of it.
    fn run(&mut self, covered: Mask, used: u64) -> bool {
        let full = self.balls.full;
        if covered == full {
            return true;
        }
        if self.failed.contains(&(covered, used)) {
            return false;
        }
        let free = (0..self.k).rev().filter(|&r| used & (1 << r) == 0);
        let capacity: usize = free.clone().map(|r| self.cap[r]).sum();
        if (full & !covered).count_ones() as usize > capacity {
            self.failed.insert((covered, used));
            return false;
        }
        let x = (full & !covered).trailing_zeros() as usize;
        for r in free {
            for c in iter_bits(self.balls.ball(x, r)) {
                self.chosen.push((r, c));
                if self.run(covered | self.balls.ball(c, r), used | (1 << r)) {
                    return true;
                }
                self.chosen.pop();
            }
        }
        self.failed.insert((covered, used));
        false
    }
}
