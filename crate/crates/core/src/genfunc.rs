//! Subtree generating functions by repeated pendant contraction.
//!
//! * [`total_gf`]: sum of weights of all subtrees.
//! * [`rooted_gf`]: subtrees containing one fixed vertex.
//! * [`pair_gf`]: subtrees containing two fixed vertices.
//!
//! Each performs at most `n - 1` contractions, each a constant number of
//! ring operations. The default elimination order removes the smallest
//! eligible pendant id first; results do not depend on the order, and the
//! `*_with_order` variants accept any order for checking that.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::contract::ContractionState;
use crate::error::{Error, Result};
use crate::ring::{Poly2, Ring};
use crate::tree::{Tree, VertexId, WeightedTree};

/// How vertex (`f`) and edge (`g`) weights are chosen.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum WeightMode {
    /// `f = g = 1`: plain counting.
    Unit,
    /// `f = 1, g = x`: the exponent of `x` is the edge count.
    EdgeVar,
    /// `f = y, g = 1`: the exponent of `y` is the vertex count.
    VertexVar,
    /// `f = y, g = x`.
    Bivariate,
    /// Weights as stored in the tree. Missing weights default to 1.
    Explicit,
}

impl WeightMode {
    pub fn default_vertex_weight(self) -> Poly2 {
        match self {
            WeightMode::VertexVar | WeightMode::Bivariate => Poly2::y(),
            _ => Poly2::one(),
        }
    }

    pub fn default_edge_weight(self) -> Poly2 {
        match self {
            WeightMode::EdgeVar | WeightMode::Bivariate => Poly2::x(),
            _ => Poly2::one(),
        }
    }

    /// `shape` weighted by this mode's defaults.
    pub fn weigh(self, shape: &Tree) -> WeightedTree<Poly2> {
        let (f, g) = (self.default_vertex_weight(), self.default_edge_weight());
        shape.with_weights(|_| f.clone(), |_, _| g.clone())
    }
}

fn protected(keep: &[VertexId], i: usize) -> bool {
    keep.iter().any(|k| k.index() == i)
}

/// Eliminates every pendant outside `keep`, smallest id first, in linear time.
///
/// A vertex below the scan pointer can only become a pendant when its
/// neighbor is removed, so it is handled on the spot and is then the
/// smallest eligible pendant.
fn eliminate_smallest_first<R: Ring>(tree: &WeightedTree<R>, keep: &[VertexId], accumulate: bool) -> ContractionState<R> {
    let mut state = ContractionState::new(tree);
    let eligible = |s: &ContractionState<R>, i: usize| s.is_pendant_index(i) && !protected(keep, i);
    for ptr in 0..tree.order() {
        if !eligible(&state, ptr) {
            continue;
        }
        let mut u = ptr;
        loop {
            let (v, e) = state.live_neighbor(tree, u).expect("pendant has a live neighbor");
            let removed = state.contract_index(tree, u, v, e);
            if accumulate {
                state.accumulate(removed);
            }
            if v < ptr && eligible(&state, v) {
                u = v;
            } else {
                break;
            }
        }
    }
    state
}

fn eliminate_with_order<R, P>(tree: &WeightedTree<R>, keep: &[VertexId], accumulate: bool, mut pick: P) -> ContractionState<R>
where
    R: Ring,
    P: FnMut(&[VertexId]) -> usize,
{
    let mut state = ContractionState::new(tree);
    loop {
        let candidates: Vec<VertexId> = state.pendants().into_iter().filter(|u| !keep.contains(u)).collect();
        if candidates.is_empty() {
            return state;
        }
        let u = candidates[pick(&candidates)];
        let (removed, _) = state.contract_pendant(tree, u).expect("candidate is a live pendant");
        if accumulate {
            state.accumulate(removed);
        }
    }
}

fn finish_total<R: Ring>(mut state: ContractionState<R>) -> (R, usize) {
    let last = state.live_vertices()[0];
    let label = state.take_label(last);
    let acc = state.take_accumulator();
    let value = state.add_counted(label, acc);
    (value, state.ring_ops())
}

fn finish_pair<R: Ring>(tree: &WeightedTree<R>, mut state: ContractionState<R>, a: VertexId, b: VertexId) -> R {
    let path = tree.shape().path_between(a, b).expect("validated endpoints");
    debug_assert_eq!(state.live_vertices().len(), path.len());
    let mut value = state.take_label(path[0]);
    for w in path.windows(2) {
        let g = tree.edge_weight(w[0], w[1]).expect("path edge").clone();
        value = state.mul_counted(value, g);
        let p = state.take_label(w[1]);
        value = state.mul_counted(value, p);
    }
    value
}

fn check_pair(tree: &Tree, a: VertexId, b: VertexId) -> Result<()> {
    tree.check_vertex(a)?;
    tree.check_vertex(b)?;
    if a == b {
        return Err(Error::SameVertex(a));
    }
    Ok(())
}

/// Sum of the weights of all subtrees of `tree`.
pub fn total_gf<R: Ring>(tree: &WeightedTree<R>) -> R {
    total_gf_with_ops(tree).0
}

/// [`total_gf`] together with the number of ring operations it used
/// (`4(n - 1) + 1`).
pub fn total_gf_with_ops<R: Ring>(tree: &WeightedTree<R>) -> (R, usize) {
    finish_total(eliminate_smallest_first(tree, &[], true))
}

/// [`total_gf`] with the pendant to contract chosen by `pick`, which gets the
/// current candidates in ascending order and returns an index into them.
pub fn total_gf_with_order<R: Ring>(tree: &WeightedTree<R>, pick: impl FnMut(&[VertexId]) -> usize) -> R {
    finish_total(eliminate_with_order(tree, &[], true, pick)).0
}

/// Sum of the weights of subtrees containing `root`.
pub fn rooted_gf<R: Ring>(tree: &WeightedTree<R>, root: VertexId) -> Result<R> {
    tree.shape().check_vertex(root)?;
    let mut state = eliminate_smallest_first(tree, &[root], false);
    Ok(state.take_label(root))
}

pub fn rooted_gf_with_order<R: Ring>(
    tree: &WeightedTree<R>,
    root: VertexId,
    pick: impl FnMut(&[VertexId]) -> usize,
) -> Result<R> {
    tree.shape().check_vertex(root)?;
    let mut state = eliminate_with_order(tree, &[root], false, pick);
    Ok(state.take_label(root))
}

/// Sum of the weights of subtrees containing both `a` and `b`.
///
/// Pendants other than `a` and `b` are contracted until only the `a`-`b`
/// path is left; the answer is the product of the remaining labels and the
/// path's edge weights.
pub fn pair_gf<R: Ring>(tree: &WeightedTree<R>, a: VertexId, b: VertexId) -> Result<R> {
    check_pair(tree.shape(), a, b)?;
    let state = eliminate_smallest_first(tree, &[a, b], false);
    Ok(finish_pair(tree, state, a, b))
}

pub fn pair_gf_with_order<R: Ring>(
    tree: &WeightedTree<R>,
    a: VertexId,
    b: VertexId,
    pick: impl FnMut(&[VertexId]) -> usize,
) -> Result<R> {
    check_pair(tree.shape(), a, b)?;
    let state = eliminate_with_order(tree, &[a, b], false, pick);
    Ok(finish_pair(tree, state, a, b))
}

/// Number of subtrees.
pub fn subtree_count(tree: &Tree) -> BigInt {
    total_gf(&tree.unit_weighted::<BigInt>())
}

/// Number of subtrees containing `root`.
pub fn rooted_count(tree: &Tree, root: VertexId) -> Result<BigInt> {
    rooted_gf(&tree.unit_weighted::<BigInt>(), root)
}

/// Number of subtrees containing `a` and `b`.
pub fn pair_count(tree: &Tree, a: VertexId, b: VertexId) -> Result<BigInt> {
    pair_gf(&tree.unit_weighted::<BigInt>(), a, b)
}

/// Subtree counts by size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubtreeProfile {
    by_edges: Vec<BigInt>,
    by_vertices: Vec<BigInt>,
}

impl SubtreeProfile {
    fn from_gfs(n: usize, edge_gf: &Poly2, vertex_gf: &Poly2) -> Self {
        SubtreeProfile {
            by_edges: (0..n as u32).map(|k| edge_gf.coeff(k, 0)).collect(),
            by_vertices: (1..=n as u32).map(|k| vertex_gf.coeff(0, k)).collect(),
        }
    }

    /// Subtrees with `k` edges; zero out of range.
    pub fn a(&self, k: usize) -> BigInt {
        self.by_edges.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Subtrees with `k` vertices; zero out of range.
    pub fn b(&self, k: usize) -> BigInt {
        k.checked_sub(1)
            .and_then(|i| self.by_vertices.get(i))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// `a(0..n)`.
    pub fn edge_counts(&self) -> &[BigInt] {
        &self.by_edges
    }

    /// `b(1..=n)`.
    pub fn vertex_counts(&self) -> &[BigInt] {
        &self.by_vertices
    }

    pub fn total(&self) -> BigInt {
        self.by_edges.iter().sum()
    }
}

pub fn size_profile(tree: &Tree) -> SubtreeProfile {
    let e = total_gf(&WeightMode::EdgeVar.weigh(tree));
    let v = total_gf(&WeightMode::VertexVar.weigh(tree));
    SubtreeProfile::from_gfs(tree.order(), &e, &v)
}

pub fn rooted_profile(tree: &Tree, root: VertexId) -> Result<SubtreeProfile> {
    let e = rooted_gf(&WeightMode::EdgeVar.weigh(tree), root)?;
    let v = rooted_gf(&WeightMode::VertexVar.weigh(tree), root)?;
    Ok(SubtreeProfile::from_gfs(tree.order(), &e, &v))
}

pub fn pair_profile(tree: &Tree, a: VertexId, b: VertexId) -> Result<SubtreeProfile> {
    let e = pair_gf(&WeightMode::EdgeVar.weigh(tree), a, b)?;
    let v = pair_gf(&WeightMode::VertexVar.weigh(tree), a, b)?;
    Ok(SubtreeProfile::from_gfs(tree.order(), &e, &v))
}

/// Generating function of the weighted path `v_1 - ... - v_n` written as the
/// double sum over segment length `j` and start `i` of
/// `(prod_{s=i}^{i+j-1} x_s y_s) * y_{i+j}`.
pub fn closed_path_gf<R: Ring>(vertex_weights: &[R], edge_weights: &[R]) -> Result<R> {
    check_path_lengths(vertex_weights, edge_weights)?;
    let n = vertex_weights.len();
    let mut sum = R::zero();
    for start in 0..n {
        let mut prefix = R::one();
        for end in start..n {
            sum = sum + prefix.clone() * vertex_weights[end].clone();
            if end + 1 < n {
                prefix = prefix * edge_weights[end].clone() * vertex_weights[end].clone();
            }
        }
    }
    Ok(sum)
}

/// Subpaths of the weighted path that contain `v_1`:
/// `y_1 (1 + sum_{j=1}^{n-1} prod_{i=1}^{j} x_i y_{i+1})`.
pub fn closed_path_rooted_gf<R: Ring>(vertex_weights: &[R], edge_weights: &[R]) -> Result<R> {
    check_path_lengths(vertex_weights, edge_weights)?;
    let mut sum = R::one();
    let mut prod = R::one();
    for (x, y) in edge_weights.iter().zip(&vertex_weights[1..]) {
        prod = prod * x.clone() * y.clone();
        sum = sum + prod.clone();
    }
    Ok(vertex_weights[0].clone() * sum)
}

fn check_path_lengths<R>(vertex_weights: &[R], edge_weights: &[R]) -> Result<()> {
    if vertex_weights.is_empty() {
        return Err(Error::BadParameters("a path needs at least one vertex".into()));
    }
    if edge_weights.len() != vertex_weights.len() - 1 {
        return Err(Error::LengthMismatch { expected: vertex_weights.len() - 1, found: edge_weights.len() });
    }
    Ok(())
}

/// Generating function of a weighted star: the single vertices, plus the
/// center times the sum over nonempty leaf subsets of `prod x_k y_k`.
///
/// The subset sum is `prod (1 + x_k y_k) - 1`, accumulated as
/// `S <- S (1 + x_k y_k) + x_k y_k` so no subtraction is needed.
pub fn closed_star_gf<R: Ring>(leaf_weights: &[R], center_weight: &R, edge_weights: &[R]) -> Result<R> {
    if leaf_weights.len() != edge_weights.len() {
        return Err(Error::LengthMismatch { expected: leaf_weights.len(), found: edge_weights.len() });
    }
    let mut singles = center_weight.clone();
    let mut subsets = R::zero();
    for (y, x) in leaf_weights.iter().zip(edge_weights) {
        singles = singles + y.clone();
        let xy = x.clone() * y.clone();
        subsets = subsets * (R::one() + xy.clone()) + xy;
    }
    Ok(singles + subsets * center_weight.clone())
}

/// Subtree count of the path on `n` vertices: `n(n+1)/2`.
pub fn path_count(n: usize) -> BigInt {
    BigInt::from(n) * BigInt::from(n + 1) / 2
}

/// Subtree count of the star on `n` vertices: `2^(n-1) + n - 1`.
pub fn star_count(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    (BigInt::one() << (n - 1)) + BigInt::from(n - 1)
}
