//! Immutable trees and weighted trees.
//!
//! Vertex ids are 1-based at the API ([`VertexId`]); storage is 0-based and
//! never leaks.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Defect, Error, Result};
use crate::ring::Ring;

/// A 1-based vertex id.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VertexId(pub usize);

impl VertexId {
    pub(crate) fn index(self) -> usize {
        self.0 - 1
    }

    pub(crate) fn from_index(i: usize) -> Self {
        VertexId(i + 1)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<usize> for VertexId {
    fn from(id: usize) -> Self {
        VertexId(id)
    }
}

/// Shorthand for `VertexId(id)`.
pub fn v(id: usize) -> VertexId {
    VertexId(id)
}

/// Topology of a tree on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    // (neighbor, edge index)
    adj: Vec<Vec<(usize, usize)>>,
}

impl Tree {
    /// Validates that `edges` form a spanning tree of `1..=n`.
    pub fn new<I, V>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (V, V)>,
        V: Into<VertexId>,
    {
        if n == 0 {
            return Err(Defect::Empty.into());
        }
        let edges: Vec<(VertexId, VertexId)> = edges.into_iter().map(|(a, b)| (a.into(), b.into())).collect();
        if edges.len() != n - 1 {
            return Err(Defect::EdgeCount { expected: n - 1, found: edges.len() }.into());
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut stored = Vec::with_capacity(edges.len());
        for &(a, b) in &edges {
            for id in [a, b] {
                if id.0 == 0 || id.0 > n {
                    return Err(Defect::OutOfRange(id.0).into());
                }
            }
            if a == b {
                return Err(Defect::SelfLoop(a).into());
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Defect::DuplicateEdge(a, b).into());
            }
            let (ra, rb) = (find(&mut parent, a.index()), find(&mut parent, b.index()));
            if ra == rb {
                return Err(Defect::Cycle(a, b).into());
            }
            parent[ra] = rb;
            stored.push((a.index(), b.index()));
        }
        Ok(Self::from_valid_edges(n, stored))
    }

    pub(crate) fn from_valid_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (e, &(a, b)) in edges.iter().enumerate() {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        Tree { edges, adj }
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1, "a path needs at least one vertex");
        Self::from_valid_edges(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    /// The star `K_{1,n-1}` centered at vertex 1.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1, "a star needs at least one vertex");
        Self::from_valid_edges(n, (1..n).map(|i| (0, i)).collect())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = VertexId> + ExactSizeIterator + Clone {
        (1..self.order() + 1).map(VertexId)
    }

    /// Edges in construction order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().map(|&(a, b)| (VertexId::from_index(a), VertexId::from_index(b)))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (1..=self.order()).contains(&v.0)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.order() })
        }
    }

    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v.index()].iter().map(|&(w, _)| VertexId::from_index(w))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn is_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.contains(a) && self.contains(b) && self.adj[a.index()].iter().any(|&(w, _)| w == b.index())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn leaves(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|&v| self.degree(v) == 1)
    }

    pub(crate) fn adj(&self, i: usize) -> &[(usize, usize)] {
        &self.adj[i]
    }

    pub(crate) fn raw_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// BFS distances (in edges) and parent pointers from `source`.
    pub(crate) fn bfs(&self, source: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.order();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(x) = queue.pop_front() {
            for &(w, _) in &self.adj[x] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// Longest path length in edges.
    pub fn diameter(&self) -> usize {
        let (d0, _) = self.bfs(0);
        let far = argmax(&d0);
        let (d1, _) = self.bfs(far);
        d1[argmax(&d1)]
    }

    /// The unique path from `from` to `to`, endpoints included.
    pub fn path_between(&self, from: VertexId, to: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        if from == to {
            return Err(Error::SameVertex(from));
        }
        let (_, parent) = self.bfs(to.index());
        let mut path = vec![from];
        let mut x = from.index();
        while x != to.index() {
            x = parent[x];
            path.push(VertexId::from_index(x));
        }
        Ok(path)
    }

    pub fn distance(&self, a: VertexId, b: VertexId) -> Result<usize> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        Ok(self.bfs(a.index()).0[b.index()])
    }

    pub fn is_path(&self) -> bool {
        self.max_degree() <= 2
    }

    pub fn is_star(&self) -> bool {
        self.order() <= 2 || self.max_degree() == self.order() - 1
    }

    /// Renames vertex `i` to `perm[i - 1]`; `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Tree> {
        if perm.len() != self.order() {
            return Err(Error::LengthMismatch { expected: self.order(), found: perm.len() });
        }
        Tree::new(self.order(), self.edges().map(|(a, b)| (perm[a.index()], perm[b.index()])))
    }

    /// Subtree induced by `keep`, relabeled `1..=k` in the order given.
    /// Returns the new tree and, for each new vertex, its old id.
    pub fn induced(&self, keep: &[VertexId]) -> Result<(Tree, Vec<VertexId>)> {
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, &old) in keep.iter().enumerate() {
            self.check_vertex(old)?;
            new_id[old.index()] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| new_id[a] != usize::MAX && new_id[b] != usize::MAX)
            .map(|&(a, b)| (VertexId::from_index(new_id[a]), VertexId::from_index(new_id[b])));
        Ok((Tree::new(keep.len(), edges)?, keep.to_vec()))
    }

    /// Attaches weights computed from vertex ids and edge endpoints.
    pub fn with_weights<R, FV, FE>(&self, mut vertex: FV, mut edge: FE) -> WeightedTree<R>
    where
        FV: FnMut(VertexId) -> R,
        FE: FnMut(VertexId, VertexId) -> R,
    {
        WeightedTree {
            vertex_weights: self.vertices().map(&mut vertex).collect(),
            edge_weights: self.edges().map(|(a, b)| edge(a, b)).collect(),
            shape: self.clone(),
        }
    }

    /// All vertex and edge weights equal to one (a simple tree).
    pub fn unit_weighted<R: Ring>(&self) -> WeightedTree<R> {
        self.with_weights(|_| R::one(), |_, _| R::one())
    }
}

fn argmax(xs: &[usize]) -> usize {
    let mut best = 0;
    for (i, &x) in xs.iter().enumerate() {
        if x > xs[best] {
            best = i;
        }
    }
    best
}

/// A tree with ring-valued vertex weights `f` and edge weights `g`.
#[derive(Clone, PartialEq, Debug)]
pub struct WeightedTree<R> {
    shape: Tree,
    vertex_weights: Vec<R>,
    edge_weights: Vec<R>,
}

impl<R> WeightedTree<R> {
    /// Builds and validates a weighted tree from `(u, v, weight)` edges and
    /// per-vertex weights indexed by id (`vertex_weights[0]` is vertex 1).
    pub fn new<V: Into<VertexId>>(n: usize, edges: Vec<(V, V, R)>, vertex_weights: Vec<R>) -> Result<Self> {
        let mut ends = Vec::with_capacity(edges.len());
        let mut weights = Vec::with_capacity(edges.len());
        for (a, b, w) in edges {
            ends.push((a.into(), b.into()));
            weights.push(w);
        }
        Self::from_shape(Tree::new(n, ends)?, vertex_weights, weights)
    }

    /// `edge_weights` follows the order of `shape.edges()`.
    pub fn from_shape(shape: Tree, vertex_weights: Vec<R>, edge_weights: Vec<R>) -> Result<Self> {
        if vertex_weights.len() != shape.order() {
            return Err(Error::WeightCount { expected: shape.order(), found: vertex_weights.len() });
        }
        if edge_weights.len() != shape.order() - 1 {
            return Err(Error::WeightCount { expected: shape.order() - 1, found: edge_weights.len() });
        }
        Ok(WeightedTree { shape, vertex_weights, edge_weights })
    }

    pub fn shape(&self) -> &Tree {
        &self.shape
    }

    pub fn order(&self) -> usize {
        self.shape.order()
    }

    pub fn vertex_weight(&self, v: VertexId) -> &R {
        &self.vertex_weights[v.index()]
    }

    pub fn vertex_weights(&self) -> &[R] {
        &self.vertex_weights
    }

    /// Parallel to `shape().edges()`.
    pub fn edge_weights(&self) -> &[R] {
        &self.edge_weights
    }

    pub fn edge_weight(&self, a: VertexId, b: VertexId) -> Option<&R> {
        if !self.shape.contains(a) {
            return None;
        }
        self.shape
            .adj(a.index())
            .iter()
            .find(|&&(w, _)| w + 1 == b.0)
            .map(|&(_, e)| &self.edge_weights[e])
    }

    pub(crate) fn edge_weight_at(&self, e: usize) -> &R {
        &self.edge_weights[e]
    }

    pub fn map<S>(&self, mut vertex: impl FnMut(&R) -> S, mut edge: impl FnMut(&R) -> S) -> WeightedTree<S> {
        WeightedTree {
            shape: self.shape.clone(),
            vertex_weights: self.vertex_weights.iter().map(&mut vertex).collect(),
            edge_weights: self.edge_weights.iter().map(&mut edge).collect(),
        }
    }
}
