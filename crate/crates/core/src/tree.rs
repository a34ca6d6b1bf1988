//! Rooted trees with in-place subtree removal.
//!
//! Removal only ever cuts a whole subtree off a surviving vertex, so depths
//! measured from the original root stay valid for the survivors and are never
//! recomputed. Removed vertices are flagged dead rather than dropped.

use std::collections::VecDeque;

use crate::error::GraphError;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    children: Vec<Vec<Vertex>>,
    depth: Vec<usize>,
    alive: Vec<bool>,
    alive_count: usize,
}

impl RootedTree {
    /// Roots the tree `g` at `root` by breadth-first search.
    pub fn from_graph(g: &Graph, root: Vertex) -> Result<Self, GraphError> {
        if !g.is_tree() {
            return Err(GraphError::NotATree {
                n: g.n(),
                m: g.edge_count(),
            });
        }
        g.spanning_tree(root).map(|(_, t)| t)
    }

    /// Builds a rooted tree from a parent array. `parent[root]` must be `None`
    /// and every other vertex must reach the root.
    pub fn from_parents(root: Vertex, parent: Vec<Option<Vertex>>) -> Result<Self, GraphError> {
        let n = parent.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if root >= n {
            return Err(GraphError::VertexOutOfRange { vertex: root, n });
        }
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            match *p {
                None if v != root => return Err(GraphError::Disconnected),
                Some(_) if v == root => return Err(GraphError::InvalidEdge { u: v, v }),
                Some(p) if p >= n || p == v => return Err(GraphError::InvalidEdge { u: p, v }),
                Some(p) => children[p].push(v),
                None => {}
            }
        }
        let mut depth = vec![usize::MAX; n];
        let mut queue = VecDeque::from([root]);
        depth[root] = 0;
        let mut reached = 0;
        while let Some(u) = queue.pop_front() {
            reached += 1;
            for &c in &children[u] {
                depth[c] = depth[u] + 1;
                queue.push_back(c);
            }
        }
        if reached != n {
            return Err(GraphError::Disconnected);
        }
        Ok(RootedTree {
            root,
            parent,
            children,
            depth,
            alive: vec![true; n],
            alive_count: n,
        })
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    /// Number of vertices the tree was built with, dead or alive.
    pub fn order(&self) -> usize {
        self.parent.len()
    }

    pub fn alive_count(&self) -> usize {
        self.alive_count
    }

    pub fn is_empty(&self) -> bool {
        self.alive_count == 0
    }

    pub fn is_alive(&self, v: Vertex) -> bool {
        self.alive[v]
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[v]
    }

    pub fn alive_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.order()).filter(|&v| self.alive[v])
    }

    /// Alive vertex of maximum depth, smallest id on ties.
    pub fn deepest_vertex(&self) -> Result<Vertex, GraphError> {
        let mut best: Option<Vertex> = None;
        for v in self.alive_vertices() {
            if best.is_none_or(|b| self.depth[v] > self.depth[b]) {
                best = Some(v);
            }
        }
        best.ok_or(GraphError::EmptyTree)
    }

    /// The vertex exactly `dist` parent hops above `u`, if the tree is deep
    /// enough.
    pub fn ancestor_at(&self, u: Vertex, dist: usize) -> Option<Vertex> {
        if dist > self.depth[u] {
            return None;
        }
        let mut v = u;
        for _ in 0..dist {
            v = self.parent[v]?;
        }
        Some(v)
    }

    /// Alive descendants of `p`, including `p`, in preorder.
    pub fn subtree_vertices(&self, p: Vertex) -> Vec<Vertex> {
        if !self.alive[p] {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut stack = vec![p];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(self.children[v].iter().rev().copied());
        }
        out
    }

    pub fn subtree_size(&self, p: Vertex) -> usize {
        if !self.alive[p] {
            return 0;
        }
        let mut size = 0;
        let mut stack = vec![p];
        while let Some(v) = stack.pop() {
            size += 1;
            stack.extend_from_slice(&self.children[v]);
        }
        size
    }

    /// Removes the subtree rooted at `p` and returns its vertices.
    pub fn detach_subtree(&mut self, p: Vertex) -> Vec<Vertex> {
        let piece = self.subtree_vertices(p);
        for &v in &piece {
            self.alive[v] = false;
        }
        self.alive_count -= piece.len();
        if let Some(q) = self.parent[p] {
            self.children[q].retain(|&c| c != p);
        }
        piece
    }
}
