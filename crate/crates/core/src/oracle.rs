//! Ground truth for small trees: brute-force subtree enumeration, canonical
//! codes for unlabeled isomorphism, and exhaustive tree generation.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::tree::{Tree, VertexId, WeightedTree};

/// Largest tree accepted by [`enumerate_subtrees`] and the `brute_*` sums.
pub const ENUMERATION_CAP: usize = 16;
/// Largest order accepted by [`all_trees`] and [`all_trees_by_prufer`].
pub const GENERATION_CAP: usize = 10;

/// Every subtree of a host tree, as vertex bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtreeSet {
    order: usize,
    masks: Vec<u32>,
}

impl SubtreeSet {
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Each subtree as an ascending list of vertices.
    pub fn vertex_sets(&self) -> impl Iterator<Item = Vec<VertexId>> + '_ {
        self.masks.iter().map(move |&m| {
            (0..self.order).filter(|i| m >> i & 1 == 1).map(VertexId::from_index).collect()
        })
    }

    pub(crate) fn masks(&self) -> &[u32] {
        &self.masks
    }
}

/// Lists every connected vertex subset exactly once.
///
/// Each subtree is grown from its smallest vertex (the anchor) using only
/// larger vertices. At every step the candidate list is split into "take
/// candidate `k`" and "never take candidates before `k`", so no subset is
/// reached twice and nothing needs deduplicating.
pub fn enumerate_subtrees(tree: &Tree) -> Result<SubtreeSet> {
    let n = tree.order();
    if n > ENUMERATION_CAP {
        return Err(Error::TooLarge { what: "subtree enumeration", n, cap: ENUMERATION_CAP });
    }
    let mut masks = Vec::new();
    for anchor in 0..n {
        let cand: Vec<usize> = tree.adj(anchor).iter().map(|&(w, _)| w).filter(|&w| w > anchor).collect();
        grow(tree, anchor, 1 << anchor, &cand, 0, &mut masks);
    }
    Ok(SubtreeSet { order: n, masks })
}

fn grow(tree: &Tree, anchor: usize, set: u32, cand: &[usize], forbidden: u32, out: &mut Vec<u32>) {
    out.push(set);
    let mut forbidden = forbidden;
    for (k, &w) in cand.iter().enumerate() {
        let next_set = set | 1 << w;
        let mut next: Vec<usize> = cand[k + 1..].to_vec();
        for &(x, _) in tree.adj(w) {
            let bit = 1 << x;
            if x > anchor && next_set & bit == 0 && forbidden & bit == 0 && !next.contains(&x) {
                next.push(x);
            }
        }
        grow(tree, anchor, next_set, &next, forbidden, out);
        forbidden |= 1 << w;
    }
}

fn subset_weight<R: Ring>(tree: &WeightedTree<R>, mask: u32) -> R {
    let mut w = R::one();
    for i in 0..tree.order() {
        if mask >> i & 1 == 1 {
            w = w * tree.vertex_weight(VertexId::from_index(i)).clone();
        }
    }
    for (e, &(a, b)) in tree.shape().raw_edges().iter().enumerate() {
        if mask >> a & 1 == 1 && mask >> b & 1 == 1 {
            w = w * tree.edge_weight_at(e).clone();
        }
    }
    w
}

fn brute_sum<R: Ring>(tree: &WeightedTree<R>, required: u32) -> Result<R> {
    let subtrees = enumerate_subtrees(tree.shape())?;
    Ok(subtrees
        .masks()
        .iter()
        .filter(|&&m| m & required == required)
        .fold(R::zero(), |acc, &m| acc + subset_weight(tree, m)))
}

/// Sum of subtree weights by explicit enumeration.
pub fn brute_gf<R: Ring>(tree: &WeightedTree<R>) -> Result<R> {
    brute_sum(tree, 0)
}

/// Enumerated sum over subtrees containing `root`.
pub fn brute_rooted_gf<R: Ring>(tree: &WeightedTree<R>, root: VertexId) -> Result<R> {
    tree.shape().check_vertex(root)?;
    brute_sum(tree, 1 << root.index())
}

/// Enumerated sum over subtrees containing `a` and `b`.
pub fn brute_pair_gf<R: Ring>(tree: &WeightedTree<R>, a: VertexId, b: VertexId) -> Result<R> {
    tree.shape().check_vertex(a)?;
    tree.shape().check_vertex(b)?;
    if a == b {
        return Err(Error::SameVertex(a));
    }
    brute_sum(tree, 1 << a.index() | 1 << b.index())
}

/// Isomorphism invariant of an unlabeled tree: the balanced-parenthesis
/// AHU code rooted at the center, taking the smaller code when there are
/// two centers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Parses a code previously produced by [`canonical_code`].
    pub fn parse(s: &str) -> Result<Self> {
        let mut depth = 0i64;
        for (i, ch) in s.chars().enumerate() {
            depth += match ch {
                '(' => 1,
                ')' => -1,
                _ => return Err(Error::BadParameters(format!("unexpected {ch:?} in code"))),
            };
            if depth < 0 || (depth == 0 && i + 1 != s.len()) {
                return Err(Error::BadParameters("unbalanced code".into()));
            }
        }
        if depth != 0 || s.is_empty() {
            return Err(Error::BadParameters("unbalanced code".into()));
        }
        Ok(CanonicalCode(s.to_owned()))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The one or two central vertices (middle of any longest path).
pub fn centers(tree: &Tree) -> Vec<VertexId> {
    let (d0, _) = tree.bfs(0);
    let far = (0..tree.order()).max_by_key(|&i| (d0[i], std::cmp::Reverse(i))).unwrap();
    let (d1, parent) = tree.bfs(far);
    let other = (0..tree.order()).max_by_key(|&i| (d1[i], std::cmp::Reverse(i))).unwrap();
    let mut path = vec![other];
    while *path.last().unwrap() != far {
        path.push(parent[*path.last().unwrap()]);
    }
    let len = path.len() - 1;
    let mut c = vec![VertexId::from_index(path[len / 2])];
    if len % 2 == 1 {
        c.push(VertexId::from_index(path[len / 2 + 1]));
    }
    c.sort();
    c
}

/// AHU code of `tree` rooted at `root`: `(` + sorted child codes + `)`.
pub fn rooted_code(tree: &Tree, root: VertexId) -> String {
    let n = tree.order();
    let (_, parent) = tree.bfs(root.index());
    let (dist, _) = tree.bfs(root.index());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(dist[i]));
    let mut codes: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut done: Vec<String> = vec![String::new(); n];
    for &x in &order {
        let mut kids = std::mem::take(&mut codes[x]);
        kids.sort_unstable();
        let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        s.push('(');
        for k in &kids {
            s.push_str(k);
        }
        s.push(')');
        if x == root.index() {
            done[x] = s;
        } else {
            codes[parent[x]].push(s);
        }
    }
    std::mem::take(&mut done[root.index()])
}

pub fn canonical_code(tree: &Tree) -> CanonicalCode {
    let code = centers(tree)
        .into_iter()
        .map(|c| rooted_code(tree, c))
        .min()
        .expect("a tree has a center");
    CanonicalCode(code)
}

pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.order() == b.order() && canonical_code(a) == canonical_code(b)
}

/// Rebuilds a representative tree from a code; vertices are numbered in
/// preorder from the root, which becomes vertex 1.
pub fn tree_from_code(code: &CanonicalCode) -> Tree {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for ch in code.0.chars() {
        if ch == '(' {
            if let Some(&p) = stack.last() {
                edges.push((p, next));
            }
            stack.push(next);
            next += 1;
        } else {
            stack.pop();
        }
    }
    Tree::from_valid_edges(next, edges)
}

/// One representative per isomorphism class of trees on `n` vertices,
/// sorted by canonical code.
///
/// Classes on `n` vertices are found by hanging a leaf on every vertex of
/// every class on `n - 1` vertices; deleting any leaf of a tree gives a tree,
/// so every class is reached.
pub fn all_trees(n: usize) -> Result<Vec<Tree>> {
    if n == 0 || n > GENERATION_CAP {
        return Err(Error::TooLarge { what: "tree generation", n, cap: GENERATION_CAP });
    }
    let mut level = vec![Tree::path(1)];
    for m in 2..=n {
        let codes: BTreeSet<CanonicalCode> = level
            .iter()
            .flat_map(|t| {
                (0..m - 1).map(move |attach| {
                    let mut edges = t.raw_edges().to_vec();
                    edges.push((attach, m - 1));
                    canonical_code(&Tree::from_valid_edges(m, edges))
                })
            })
            .collect();
        level = codes.iter().map(tree_from_code).collect();
    }
    Ok(level)
}

/// Decodes a Prüfer sequence (1-based entries, length `n - 2`).
pub fn prufer_decode(seq: &[usize]) -> Result<Tree> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&s| s == 0 || s > n) {
        return Err(Error::BadParameters(format!("Prüfer entry {bad} outside 1..={n}")));
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s - 1] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &s in seq {
        let s = s - 1;
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Ok(Tree::from_valid_edges(n, edges))
}

/// Every labeled tree on `n >= 2` vertices, via all `n^(n-2)` Prüfer
/// sequences in lexicographic order.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Tree> {
    assert!(n >= 2, "labeled_trees needs n >= 2");
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total).map(move |mut k| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = k % n + 1;
            k /= n;
        }
        prufer_decode(&seq).expect("entries in range")
    })
}

/// Same classes as [`all_trees`], found the slow way: decode every Prüfer
/// sequence and keep one tree per canonical code.
pub fn all_trees_by_prufer(n: usize) -> Result<Vec<Tree>> {
    if n == 0 || n > GENERATION_CAP {
        return Err(Error::TooLarge { what: "tree generation", n, cap: GENERATION_CAP });
    }
    if n <= 2 {
        return Ok(vec![Tree::path(n)]);
    }
    // One parallel block per leading Prüfer entry.
    let codes: BTreeSet<CanonicalCode> = (1..=n)
        .into_par_iter()
        .map(|first| {
            let len = n - 2;
            let rest = n.pow(len as u32 - 1);
            let mut seen = BTreeSet::new();
            let mut seq = vec![first; len];
            for mut k in 0..rest {
                for slot in seq[1..].iter_mut().rev() {
                    *slot = k % n + 1;
                    k /= n;
                }
                seen.insert(canonical_code(&prufer_decode(&seq).expect("entries in range")));
            }
            seen
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(codes.iter().map(tree_from_code).collect())
}
