//! Partitioning a tree into subtrees of distinct bounded radii, and turning
//! the partition into a burning schedule.
//!
//! Iteration `j` runs from `k - 1` down to `0` with the remaining radii `R`
//! (initially `{0, .., k-1}`). Each iteration detaches one subtree `T_p` and
//! consumes one radius `r*` such that
//!
//! * the radius of `T_p` is at most `r*`, and
//! * `|T_p| >= r* + floor(j/2) - 3`.
//!
//! Summed over `k` iterations the pieces hold at least `(3k^2 - 16k) / 4`
//! vertices, so a tree of order `n` is exhausted once `k` reaches
//! [`burning_bound`](crate::bounds::burning_bound). Lighting the center of the
//! piece with radius `r` in round `k - r` then burns the tree within `k`
//! rounds.
//!
//! All inequalities are compared after doubling both sides, so odd `j` never
//! needs fractions.

use std::fmt;

use crate::bounds::{burning_bound, elementary_bound};
use crate::error::{DecomposeError, GraphError};
use crate::graph::{Graph, Vertex};
use crate::schedule::BurnSchedule;
use crate::tree::RootedTree;

/// Remaining radii, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusSet {
    values: Vec<usize>,
}

impl RadiusSet {
    /// `{0, 1, .., k-1}`.
    pub fn full(k: usize) -> Self {
        RadiusSet {
            values: (0..k).collect(),
        }
    }

    /// Builds a set from arbitrary values; duplicates are dropped.
    pub fn from_values<I: IntoIterator<Item = usize>>(values: I) -> Self {
        let mut values: Vec<usize> = values.into_iter().collect();
        values.sort_unstable();
        values.dedup();
        RadiusSet { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> Option<usize> {
        self.values.last().copied()
    }

    pub fn contains(&self, r: usize) -> bool {
        self.values.binary_search(&r).is_ok()
    }

    /// Removes `r`, returning whether it was present.
    pub fn remove(&mut self, r: usize) -> bool {
        match self.values.binary_search(&r) {
            Ok(i) => {
                self.values.remove(i);
                true
            }
            Err(_) => false,
        }
    }
}

/// Which rule produced an extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// The deepest vertex has no ancestor at distance `max(R)`; the whole
    /// remaining tree is taken.
    WholeTree,
    /// `T_v` is already large enough; take it with `r* = max(R)`.
    Case1,
    /// Small `T_v` and a large selected radius; take `T_v` with `r*`.
    Case2a,
    /// Small `T_v` and a small selected radius; take the subtree rooted
    /// `r* + floor(j/2)` hops above the deepest vertex.
    Case2b,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::WholeTree => "WHOLE_TREE",
            CaseTag::Case1 => "CASE1",
            CaseTag::Case2a => "CASE2A",
            CaseTag::Case2b => "CASE2B",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Record of one iteration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub j: usize,
    pub case: CaseTag,
    pub r_star: usize,
    /// Root of the detached subtree.
    pub p: Vertex,
    pub center: Vertex,
    /// Detached vertices, ascending.
    pub piece: Vec<Vertex>,
    /// Eccentricity of `center` inside the piece.
    pub measured_radius: usize,
    /// `|T_v| - max(R)`, present for the two small-subtree cases.
    pub m: Option<usize>,
}

impl Extraction {
    pub fn is_terminal(&self) -> bool {
        self.case == CaseTag::WholeTree
    }

    /// `r* + floor(j/2) - 3`, the guaranteed piece size for non-terminal
    /// extractions. May be negative for small `j`.
    pub fn size_guarantee(&self) -> i64 {
        self.r_star as i64 + (self.j / 2) as i64 - 3
    }

    pub fn satisfies_radius_condition(&self) -> bool {
        self.measured_radius <= self.r_star
    }

    pub fn satisfies_size_condition(&self) -> bool {
        self.is_terminal() || self.piece.len() as i64 >= self.size_guarantee()
    }
}

/// One trace line: `j=.. case=.. r*=.. p=.. center=.. size=.. radius=..`.
impl fmt::Display for Extraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "j={} case={} r*={} p={} center={} size={} radius={}",
            self.j,
            self.case,
            self.r_star,
            self.p,
            self.center,
            self.piece.len(),
            self.measured_radius
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub k: usize,
    pub n: usize,
    pub extractions: Vec<Extraction>,
    /// Vertices still in the tree after the last iteration.
    pub uncovered: usize,
}

impl Decomposition {
    pub fn covers(&self) -> bool {
        self.uncovered == 0
    }

    /// All `k` iterations ran and none took the whole remaining tree.
    pub fn is_full_length(&self) -> bool {
        self.extractions.len() == self.k && self.extractions.iter().all(|e| !e.is_terminal())
    }

    pub fn covered(&self) -> usize {
        self.extractions.iter().map(|e| e.piece.len()).sum()
    }

    /// Sum of the per-iteration size guarantees over the trace.
    pub fn guaranteed_total(&self) -> i64 {
        self.extractions.iter().map(Extraction::size_guarantee).sum()
    }

    /// The trace, one line per extraction.
    pub fn trace(&self) -> String {
        self.extractions.iter().map(|e| format!("{e}\n")).collect()
    }

    /// Lights the center of the piece with radius `r*` in round `k - r*`.
    pub fn schedule(&self) -> BurnSchedule {
        schedule_from(self)
    }
}

/// Smallest `r` in `radii` with `j + 2m <= 2r <= 2 max(R) - j + 2m + 6`.
///
/// This is the admissible window for a small subtree of order `max(R) + m`.
/// Requires `1 <= 2m < j`.
pub fn select_radius(radii: &RadiusSet, j: usize, m: usize) -> Result<usize, DecomposeError> {
    let r_max = radii.max();
    let lower = j + 2 * m;
    let upper = r_max.map_or(-1, |r| 2 * r as i64 - j as i64 + 2 * m as i64 + 6);
    let no_radius = || DecomposeError::NoAdmissibleRadius {
        values: radii.values().to_vec(),
        j,
        m,
        lower,
        upper,
    };
    if m == 0 || 2 * m >= j {
        return Err(no_radius());
    }
    radii
        .values()
        .iter()
        .copied()
        .find(|&r| lower <= 2 * r && 2 * r as i64 <= upper)
        .ok_or_else(no_radius)
}

/// Runs iteration `j`: detaches one piece from `tree`, removes the consumed
/// radius from `radii` and checks both per-iteration conditions.
pub fn extract_step(tree: &mut RootedTree, radii: &mut RadiusSet, j: usize) -> Result<Extraction, DecomposeError> {
    let u = tree.deepest_vertex()?;
    let r_max = radii
        .max()
        .ok_or_else(|| DecomposeError::Invariant(format!("radius set exhausted at j={j}")))?;

    let (case, r_star, p, m) = match tree.ancestor_at(u, r_max) {
        None => (CaseTag::WholeTree, r_max, tree.root(), None),
        Some(v) => {
            let size = tree.subtree_size(v);
            if size >= r_max + j / 2 {
                (CaseTag::Case1, r_max, v, None)
            } else {
                // The path from u up to v alone holds r_max + 1 vertices.
                let m = size - r_max;
                if j < 2 {
                    return Err(DecomposeError::Invariant(format!(
                        "small-subtree case reached at j={j} (|T_v|={size}, r_max={r_max})"
                    )));
                }
                let r_star = select_radius(radii, j, m)?;
                if 2 * r_star + j > 2 * r_max {
                    (CaseTag::Case2a, r_star, v, Some(m))
                } else {
                    let h = r_star + j / 2;
                    let p = tree.ancestor_at(u, h).ok_or_else(|| {
                        DecomposeError::Invariant(format!("ancestor at {h} missing below v at j={j}"))
                    })?;
                    (CaseTag::Case2b, r_star, p, Some(m))
                }
            }
        }
    };

    let mut piece = tree.detach_subtree(p);
    piece.sort_unstable();
    radii.remove(r_star);
    let (center, measured_radius) = piece_center(tree, &piece, p)?;

    let extraction = Extraction {
        j,
        case,
        r_star,
        p,
        center,
        piece,
        measured_radius,
        m,
    };
    check_conditions(extraction)
}

fn check_conditions(extraction: Extraction) -> Result<Extraction, DecomposeError> {
    if !extraction.satisfies_radius_condition() {
        return Err(DecomposeError::RadiusCondition {
            extraction: Box::new(extraction),
        });
    }
    if !extraction.satisfies_size_condition() {
        return Err(DecomposeError::SizeCondition {
            extraction: Box::new(extraction),
        });
    }
    Ok(extraction)
}

/// Center and radius of a detached piece (sorted vertex list rooted at `p`),
/// using the parent links that survive detachment.
fn piece_center(tree: &RootedTree, piece: &[Vertex], p: Vertex) -> Result<(Vertex, usize), GraphError> {
    let local = |v: Vertex| piece.binary_search(&v).expect("parent inside piece");
    let edges: Vec<_> = piece
        .iter()
        .enumerate()
        .filter(|&(_, &v)| v != p)
        .map(|(i, &v)| (local(tree.parent(v).expect("non-root piece vertex has a parent")), i))
        .collect();
    let metrics = Graph::from_edges(piece.len(), edges)?.tree_metrics()?;
    Ok((piece[metrics.center], metrics.radius))
}

/// Runs iterations `j = k-1, .., 0` until the tree is empty.
///
/// When `k >= burning_bound(n)` the pieces must cover the tree; failing to do
/// so is reported as [`DecomposeError::Uncovered`]. Smaller `k` is allowed and
/// may leave vertices behind.
pub fn decompose_tree(mut tree: RootedTree, k: usize) -> Result<Decomposition, DecomposeError> {
    let n = tree.alive_count();
    let mut radii = RadiusSet::full(k);
    let mut extractions = Vec::new();
    for j in (0..k).rev() {
        if tree.is_empty() {
            break;
        }
        extractions.push(extract_step(&mut tree, &mut radii, j)?);
    }
    let uncovered = tree.alive_count();
    let guaranteed = burning_bound(n as u64).is_some_and(|b| k as u64 >= b);
    if uncovered > 0 && guaranteed {
        return Err(DecomposeError::Uncovered {
            n,
            k,
            remaining: uncovered,
        });
    }
    Ok(Decomposition {
        k,
        n,
        extractions,
        uncovered,
    })
}

/// Round `k - r*` lights the center of the piece that consumed `r*`.
pub fn schedule_from(d: &Decomposition) -> BurnSchedule {
    d.extractions.iter().map(|e| (d.k - e.r_star, e.center)).collect()
}

/// Baseline scheme: each iteration takes `r = max(R)` and detaches the
/// subtree rooted `r` hops above the deepest vertex (or the whole tree).
/// Every non-terminal piece has at least `r + 1` vertices.
pub fn elementary_decompose(mut tree: RootedTree, k: usize) -> Result<Decomposition, DecomposeError> {
    let n = tree.alive_count();
    let mut radii = RadiusSet::full(k);
    let mut extractions = Vec::new();
    for j in (0..k).rev() {
        if tree.is_empty() {
            break;
        }
        let u = tree.deepest_vertex()?;
        let r = radii.max().expect("one radius per iteration");
        let (case, p) = match tree.ancestor_at(u, r) {
            Some(p) => (CaseTag::Case1, p),
            None => (CaseTag::WholeTree, tree.root()),
        };
        let mut piece = tree.detach_subtree(p);
        piece.sort_unstable();
        radii.remove(r);
        let (center, measured_radius) = piece_center(&tree, &piece, p)?;
        let e = Extraction {
            j,
            case,
            r_star: r,
            p,
            center,
            piece,
            measured_radius,
            m: None,
        };
        if e.measured_radius > r {
            return Err(DecomposeError::RadiusCondition {
                extraction: Box::new(e),
            });
        }
        if !e.is_terminal() && e.piece.len() < r + 1 {
            return Err(DecomposeError::SizeCondition {
                extraction: Box::new(e),
            });
        }
        extractions.push(e);
    }
    let uncovered = tree.alive_count();
    if uncovered > 0 && k as u64 >= elementary_bound(n as u64) {
        return Err(DecomposeError::Uncovered {
            n,
            k,
            remaining: uncovered,
        });
    }
    Ok(Decomposition {
        k,
        n,
        extractions,
        uncovered,
    })
}

/// A schedule of length `k = burning_bound(n)` together with the
/// decomposition it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnPlan {
    pub k: usize,
    pub decomposition: Decomposition,
    pub schedule: BurnSchedule,
}

/// Decomposes the tree `tree` rooted at `root` with `k = burning_bound(n)`.
pub fn burn_tree(tree: &Graph, root: Vertex) -> Result<BurnPlan, DecomposeError> {
    let rooted = RootedTree::from_graph(tree, root)?;
    plan(rooted)
}

/// Burns a connected graph through its breadth-first spanning tree from
/// `root`. Any schedule that burns a spanning tree burns the graph at least
/// as fast.
pub fn burn_graph(g: &Graph, root: Vertex) -> Result<BurnPlan, DecomposeError> {
    let (_, rooted) = g.spanning_tree(root)?;
    plan(rooted)
}

fn plan(rooted: RootedTree) -> Result<BurnPlan, DecomposeError> {
    let n = rooted.order();
    let k = burning_bound(n as u64).ok_or(GraphError::Empty)? as usize;
    let decomposition = decompose_tree(rooted, k)?;
    let schedule = schedule_from(&decomposition);
    Ok(BurnPlan {
        k,
        decomposition,
        schedule,
    })
}
