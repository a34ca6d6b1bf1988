//! Undirected simple graphs over dense vertex ids, with the traversals and
//! metrics the decomposition needs.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};
use crate::tree::RootedTree;

pub type Vertex = usize;

/// Marker returned by [`Graph::bfs_distances`] for unreachable vertices.
pub const UNREACHABLE: usize = usize::MAX;

/// A finite, simple, undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted so every traversal visits neighbors in
/// ascending id order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

/// Eccentricity-derived metrics of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metrics {
    pub eccentricity: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    /// Smallest-id vertex whose eccentricity equals the radius.
    pub center: Vertex,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::InvalidEdge { u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::InvalidEdge { u, v: w[0] });
            }
        }
        Ok(Graph { adj, edge_count })
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines `u v`.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
        let [n, m] = parse_pair(hline, header)?;
        if n == 0 {
            return Err(ParseError::Malformed {
                line: hline,
                msg: "vertex count must be at least 1".into(),
            });
        }

        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::with_capacity(m);
        let mut found = 0;
        for (line, body) in lines {
            let [u, v] = parse_pair(line, body)?;
            for x in [u, v] {
                if x >= n {
                    return Err(ParseError::VertexOutOfRange { line, vertex: x, n });
                }
            }
            if u == v {
                return Err(ParseError::SelfLoop { line, vertex: u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(ParseError::DuplicateEdge { line, u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
            found += 1;
        }
        if found != m {
            return Err(ParseError::EdgeCount { declared: m, found });
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edge_count: m })
    }

    /// Serializes to the edge-list format with edges `u < v` in lexicographic
    /// order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n(), self.edge_count);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Hop distances from `s`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs_distances(&self, s: Vertex) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.n() && self.is_connected()
    }

    /// Metrics by all-source BFS. Quadratic; intended for small graphs.
    /// Use [`Graph::tree_metrics`] on trees.
    pub fn metrics(&self) -> Result<Metrics, GraphError> {
        let mut eccentricity = Vec::with_capacity(self.n());
        for s in 0..self.n() {
            let ecc = self.bfs_distances(s).into_iter().max().unwrap_or(0);
            if ecc == UNREACHABLE {
                return Err(GraphError::Disconnected);
            }
            eccentricity.push(ecc);
        }
        Ok(Metrics::from_eccentricity(eccentricity))
    }

    /// Linear-time metrics for trees. In a tree every vertex is farthest from
    /// one of the two endpoints of a diameter path, so three BFS passes give
    /// every eccentricity.
    pub fn tree_metrics(&self) -> Result<Metrics, GraphError> {
        if !self.is_tree() {
            return Err(GraphError::NotATree {
                n: self.n(),
                m: self.edge_count,
            });
        }
        let from0 = self.bfs_distances(0);
        let a = argmax(&from0);
        let from_a = self.bfs_distances(a);
        let b = argmax(&from_a);
        let from_b = self.bfs_distances(b);
        let eccentricity = from_a.iter().zip(&from_b).map(|(&x, &y)| x.max(y)).collect();
        Ok(Metrics::from_eccentricity(eccentricity))
    }

    /// Breadth-first spanning tree rooted at `root`, exploring neighbors in
    /// ascending id order.
    pub fn spanning_tree(&self, root: Vertex) -> Result<(Graph, RootedTree), GraphError> {
        if root >= self.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: root,
                n: self.n(),
            });
        }
        let mut parent = vec![None; self.n()];
        let mut visited = vec![false; self.n()];
        let mut edges = Vec::with_capacity(self.n().saturating_sub(1));
        let mut queue = VecDeque::new();
        visited[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = Some(u);
                    edges.push((u, w));
                    queue.push_back(w);
                }
            }
        }
        if edges.len() + 1 != self.n() {
            return Err(GraphError::Disconnected);
        }
        let tree = Graph::from_edges(self.n(), edges)?;
        let rooted = RootedTree::from_parents(root, parent)?;
        Ok((tree, rooted))
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
    /// Returns the subgraph and the local-to-global id map.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<(Graph, Vec<Vertex>), GraphError> {
        let mut local = vec![UNREACHABLE; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let local = &local;
            self.adj[v]
                .iter()
                .filter(move |&&w| local[w] != UNREACHABLE && i < local[w])
                .map(move |&w| (i, local[w]))
        });
        let sub = Graph::from_edges(vertices.len(), edges.collect::<Vec<_>>())?;
        Ok((sub, vertices.to_vec()))
    }
}

impl Metrics {
    fn from_eccentricity(eccentricity: Vec<usize>) -> Self {
        let radius = eccentricity.iter().copied().min().unwrap_or(0);
        let diameter = eccentricity.iter().copied().max().unwrap_or(0);
        let center = eccentricity.iter().position(|&e| e == radius).unwrap_or(0);
        Metrics {
            eccentricity,
            radius,
            diameter,
            center,
        }
    }
}

fn argmax(dist: &[usize]) -> Vertex {
    let mut best = 0;
    for (v, &d) in dist.iter().enumerate() {
        if d > dist[best] {
            best = v;
        }
    }
    best
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2], ParseError> {
    let mut it = body.split_whitespace();
    let mut next = || -> Result<usize, ParseError> {
        let tok = it.next().ok_or_else(|| ParseError::Malformed {
            line,
            msg: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| ParseError::Malformed {
            line,
            msg: format!("not a non-negative integer: {tok:?}"),
        })
    };
    let pair = [next()?, next()?];
    if it.next().is_some() {
        return Err(ParseError::Malformed {
            line,
            msg: "trailing tokens".into(),
        });
    }
    Ok(pair)
}
