//! Pendant contraction: the single step behind every generating-function
//! algorithm in the crate.
//!
//! Removing a pendant vertex `u` with edge `e = (u, v)` and replacing the
//! label of `v` by `p(v) * (p(u) * g(e) + 1)` leaves the generating function
//! of subtrees containing any surviving vertex unchanged. The subtrees lost
//! are exactly those equal to `{u}`, whose weight is the removed label.

use std::mem;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::tree::{VertexId, WeightedTree};

/// Working labels `p`, the live vertex set and the accumulator `N` of a
/// contraction run over one tree.
#[derive(Clone, Debug)]
pub struct ContractionState<R> {
    labels: Vec<R>,
    live: Vec<bool>,
    live_degree: Vec<usize>,
    live_count: usize,
    accumulator: R,
    ring_ops: usize,
}

impl<R: Ring> ContractionState<R> {
    /// `p(v) = f(v)` for every vertex, `N = 0`.
    pub fn new(tree: &WeightedTree<R>) -> Self {
        let shape = tree.shape();
        ContractionState {
            labels: tree.vertex_weights().to_vec(),
            live: vec![true; shape.order()],
            live_degree: shape.vertices().map(|v| shape.degree(v)).collect(),
            live_count: shape.order(),
            accumulator: R::zero(),
            ring_ops: 0,
        }
    }

    pub fn label(&self, v: VertexId) -> &R {
        &self.labels[v.index()]
    }

    pub fn accumulator(&self) -> &R {
        &self.accumulator
    }

    pub fn live_count(&self) -> usize {
        self.live_count
    }

    pub fn is_live(&self, v: VertexId) -> bool {
        self.live.get(v.index()).copied().unwrap_or(false)
    }

    /// Ring additions and multiplications performed so far.
    pub fn ring_ops(&self) -> usize {
        self.ring_ops
    }

    pub(crate) fn is_pendant_index(&self, i: usize) -> bool {
        self.live[i] && self.live_degree[i] == 1
    }

    /// Live vertices with exactly one live neighbor, ascending.
    pub fn pendants(&self) -> Vec<VertexId> {
        (0..self.live.len())
            .filter(|&i| self.is_pendant_index(i))
            .map(VertexId::from_index)
            .collect()
    }

    /// Live vertices, ascending.
    pub fn live_vertices(&self) -> Vec<VertexId> {
        (0..self.live.len()).filter(|&i| self.live[i]).map(VertexId::from_index).collect()
    }

    /// Contracts the pendant `u` into its live neighbor `v` and returns the
    /// removed label `p(u)` together with `v`. Whether `p(u)` is added to the
    /// accumulator is the caller's decision (see [`accumulate`](Self::accumulate)).
    pub fn contract_pendant(&mut self, tree: &WeightedTree<R>, u: VertexId) -> Result<(R, VertexId)> {
        tree.shape().check_vertex(u)?;
        let ui = u.index();
        if !self.live[ui] {
            return Err(Error::NotLive(u));
        }
        if self.live_degree[ui] != 1 {
            return Err(Error::NotPendant(u));
        }
        let (vi, e) = tree
            .shape()
            .adj(ui)
            .iter()
            .copied()
            .find(|&(w, _)| self.live[w])
            .expect("live degree 1 implies a live neighbor");
        Ok((self.contract_index(tree, ui, vi, e), VertexId::from_index(vi)))
    }

    pub(crate) fn contract_index(&mut self, tree: &WeightedTree<R>, ui: usize, vi: usize, e: usize) -> R {
        let removed = mem::replace(&mut self.labels[ui], R::zero());
        let factor = removed.clone() * tree.edge_weight_at(e).clone() + R::one();
        let pv = mem::replace(&mut self.labels[vi], R::zero());
        self.labels[vi] = pv * factor;
        self.ring_ops += 3;
        self.live[ui] = false;
        self.live_degree[ui] = 0;
        self.live_degree[vi] -= 1;
        self.live_count -= 1;
        removed
    }

    /// `N <- N + value`.
    pub fn accumulate(&mut self, value: R) {
        let n = mem::replace(&mut self.accumulator, R::zero());
        self.accumulator = n + value;
        self.ring_ops += 1;
    }

    pub(crate) fn add_counted(&mut self, a: R, b: R) -> R {
        self.ring_ops += 1;
        a + b
    }

    pub(crate) fn mul_counted(&mut self, a: R, b: R) -> R {
        self.ring_ops += 1;
        a * b
    }

    pub(crate) fn take_label(&mut self, v: VertexId) -> R {
        mem::replace(&mut self.labels[v.index()], R::zero())
    }

    pub(crate) fn take_accumulator(&mut self) -> R {
        mem::replace(&mut self.accumulator, R::zero())
    }

    /// First live neighbor of `i` (the unique one for a pendant).
    pub(crate) fn live_neighbor(&self, tree: &WeightedTree<R>, i: usize) -> Option<(usize, usize)> {
        tree.shape().adj(i).iter().copied().find(|&(w, _)| self.live[w])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Poly2;
    use crate::tree::{v, Tree};
    use num_bigint::BigInt;

    fn p2(a: Poly2, b: Poly2, c: Poly2) -> WeightedTree<Poly2> {
        WeightedTree::new(2, vec![(1usize, 2usize, c)], vec![a, b]).unwrap()
    }

    #[test]
    fn symbolic_base_case() {
        // f(u) = a, f(v) = b, g(e) = c, encoded as independent monomials.
        let a = Poly2::from_terms([(1, 0, 1)]);
        let b = Poly2::from_terms([(0, 1, 1)]);
        let c = Poly2::from_terms([(2, 2, 1)]);
        let t = p2(a.clone(), b.clone(), c.clone());
        let mut s = ContractionState::new(&t);
        let (removed, into) = s.contract_pendant(&t, v(1)).unwrap();
        assert_eq!(into, v(2));
        assert_eq!(removed, a);
        assert_eq!(s.label(v(2)), &(b.clone() * (a.clone() * c.clone() + Poly2::from(1))));
        s.accumulate(removed);
        let total = s.label(v(2)).clone() + s.accumulator().clone();
        assert_eq!(total, a.clone() + b.clone() + a * b * c);
    }

    #[test]
    fn unit_weights_on_p2() {
        let t = Tree::path(2).unit_weighted::<BigInt>();
        let mut s = ContractionState::new(&t);
        let (removed, _) = s.contract_pendant(&t, v(1)).unwrap();
        s.accumulate(removed);
        assert_eq!(s.label(v(2)), &BigInt::from(2));
        assert_eq!(s.accumulator(), &BigInt::from(1));
        assert_eq!(s.live_count(), 1);
        assert_eq!(s.ring_ops(), 4);
    }

    #[test]
    fn edge_variable_on_p2() {
        let t = Tree::path(2).with_weights(|_| Poly2::from(1), |_, _| Poly2::x());
        let mut s = ContractionState::new(&t);
        let (removed, _) = s.contract_pendant(&t, v(1)).unwrap();
        assert_eq!(s.label(v(2)), &(Poly2::x() + Poly2::from(1)));
        assert_eq!(s.label(v(2)).clone() + removed, Poly2::x() + Poly2::from(2));
    }

    #[test]
    fn rejects_non_pendants_and_dead_vertices() {
        let t = Tree::path(3).unit_weighted::<BigInt>();
        let mut s = ContractionState::new(&t);
        assert_eq!(s.contract_pendant(&t, v(2)).unwrap_err(), Error::NotPendant(v(2)));
        s.contract_pendant(&t, v(1)).unwrap();
        assert_eq!(s.contract_pendant(&t, v(1)).unwrap_err(), Error::NotLive(v(1)));
        s.contract_pendant(&t, v(2)).unwrap();
        // the last vertex has no live neighbor
        assert_eq!(s.contract_pendant(&t, v(3)).unwrap_err(), Error::NotPendant(v(3)));
        assert!(s.contract_pendant(&t, v(4)).is_err());
        assert_eq!(s.live_vertices(), vec![v(3)]);
    }
}
