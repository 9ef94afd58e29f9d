//! The four subtree-count monotone tree moves and the reduction chains built
//! from them.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::families::{make_family, FamilySpec};
use crate::error::{Error, Result};
use crate::genfunc::{rooted_count, subtree_count};
use crate::tree::{Tree, VertexId};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Transform {
    /// Branch at `u` replaced by pendant leaves at `u`.
    Phi1,
    /// Branch at `u` replaced by a pendant path from `u`.
    Phi2,
    /// Caterpillar pendants at `v_i` moved one step inward to `v_{i+1}`.
    Phi3,
    /// Two legs `(s, t)` at `u` replaced by legs `(s + t - 1, 1)`.
    Phi4,
}

/// How the subtree count before a move compares with the count after it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Relation {
    StrictLt,
    Eq,
    StrictGt,
}

impl Relation {
    pub fn between(before: &BigInt, after: &BigInt) -> Self {
        match before.cmp(after) {
            Ordering::Less => Relation::StrictLt,
            Ordering::Equal => Relation::Eq,
            Ordering::Greater => Relation::StrictGt,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::StrictLt => "STRICT_LT",
            Relation::Eq => "EQ",
            Relation::StrictGt => "STRICT_GT",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransformReport {
    pub transform: Transform,
    pub before: Tree,
    pub after: Tree,
    pub chi_before: BigInt,
    pub chi_after: BigInt,
    pub relation: Relation,
    /// Whether the move's structural equality condition holds for this site.
    pub equality_condition_met: bool,
}

impl TransformReport {
    fn new(transform: Transform, before: Tree, after: Tree, equality_condition_met: bool) -> Self {
        let chi_before = subtree_count(&before);
        let chi_after = subtree_count(&after);
        TransformReport {
            transform,
            relation: Relation::between(&chi_before, &chi_after),
            before,
            after,
            chi_before,
            chi_after,
            equality_condition_met,
        }
    }

    /// Checks the inequality promised for this move, including that
    /// equality happens exactly under the structural condition.
    pub fn inequality_holds(&self) -> bool {
        let eq = self.relation == Relation::Eq;
        match self.transform {
            Transform::Phi1 | Transform::Phi3 => self.relation != Relation::StrictGt && eq == self.equality_condition_met,
            Transform::Phi2 => self.relation != Relation::StrictLt && eq == self.equality_condition_met,
            Transform::Phi4 => self.relation == Relation::StrictGt,
        }
    }
}

/// Vertices of the branches hanging from `u` at `roots`, in BFS order.
fn branch(tree: &Tree, u: VertexId, roots: &[VertexId]) -> Result<Vec<usize>> {
    tree.check_vertex(u)?;
    if roots.is_empty() {
        return Err(Error::BadParameters("at least one branch root is required".into()));
    }
    for (k, &r) in roots.iter().enumerate() {
        tree.check_vertex(r)?;
        if !tree.is_adjacent(u, r) {
            return Err(Error::NotNeighbor { u, v: r });
        }
        if roots[..k].contains(&r) {
            return Err(Error::BadParameters(format!("branch root {r} given twice")));
        }
    }
    if tree.degree(u) == roots.len() {
        return Err(Error::BranchTooLarge);
    }
    let mut seen = vec![false; tree.order()];
    seen[u.index()] = true;
    let mut out = Vec::new();
    let mut queue: VecDeque<usize> = roots.iter().map(|r| r.index()).collect();
    for r in roots {
        seen[r.index()] = true;
    }
    while let Some(x) = queue.pop_front() {
        out.push(x);
        for &(w, _) in tree.adj(x) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    Ok(out)
}

fn kept_edges(tree: &Tree, removed: &[usize]) -> Vec<(usize, usize)> {
    let mut gone = vec![false; tree.order()];
    for &b in removed {
        gone[b] = true;
    }
    tree.raw_edges().iter().copied().filter(|&(a, b)| !gone[a] && !gone[b]).collect()
}

/// Replaces the branches of `u` rooted at `roots` by the same number of
/// pendant leaves at `u`. The count never decreases; it stays equal exactly
/// when every branch is already a single leaf.
pub fn phi1(tree: &Tree, u: VertexId, roots: &[VertexId]) -> Result<TransformReport> {
    let part = branch(tree, u, roots)?;
    let mut edges = kept_edges(tree, &part);
    edges.extend(part.iter().map(|&b| (u.index(), b)));
    let after = Tree::from_valid_edges(tree.order(), edges);
    let equality = roots.iter().all(|&r| tree.degree(r) == 1);
    Ok(TransformReport::new(Transform::Phi1, tree.clone(), after, equality))
}

/// Replaces the branches of `u` rooted at `roots` by one pendant path from
/// `u`. The count never increases; it stays equal exactly when there is a
/// single branch that is already a path entered at its end.
pub fn phi2(tree: &Tree, u: VertexId, roots: &[VertexId]) -> Result<TransformReport> {
    let part = branch(tree, u, roots)?;
    let mut edges = kept_edges(tree, &part);
    let mut prev = u.index();
    for &b in &part {
        edges.push((prev, b));
        prev = b;
    }
    let after = Tree::from_valid_edges(tree.order(), edges);
    let equality = roots.len() == 1 && part.iter().all(|&b| tree.adj(b).len() <= 2);
    Ok(TransformReport::new(Transform::Phi2, tree.clone(), after, equality))
}

fn caterpillar_parts(spec: &FamilySpec) -> Result<(usize, usize, &[usize])> {
    match spec {
        FamilySpec::Caterpillar { d, i, ks } => {
            spec.validate()?;
            if 2 * i > d + 1 {
                return Err(Error::BadParameters(format!(
                    "pendant shift needs i <= (d+1)/2, got i = {i}, d = {d}"
                )));
            }
            Ok((*d, *i, ks))
        }
        other => Err(Error::BadParameters(format!("pendant shift applies to caterpillars, got {other}"))),
    }
}

/// `T_d(k_i + k_{i+1}, k_{i+2}, ..., k_d)`.
pub fn phi3_target(spec: &FamilySpec) -> Result<FamilySpec> {
    let (d, i, ks) = caterpillar_parts(spec)?;
    let mut merged = vec![ks[0] + ks[1]];
    merged.extend_from_slice(&ks[2..]);
    Ok(FamilySpec::Caterpillar { d, i: i + 1, ks: merged })
}

/// Moves the `k_i` pendants of `v_i` onto `v_{i+1}` in the caterpillar
/// `T_d(k_i, ..., k_d)`. Only defined for `i <= (d+1)/2`, where the count
/// never decreases.
pub fn phi3(spec: &FamilySpec) -> Result<TransformReport> {
    let (d, i, ks) = caterpillar_parts(spec)?;
    let target = phi3_target(spec)?;
    let equality = ks[1..].iter().all(|&k| k == 0) && d % 2 == 1 && 2 * i == d + 1;
    Ok(TransformReport::new(Transform::Phi3, make_family(spec)?, make_family(&target)?, equality))
}

/// Predicted count gain of [`phi3`]:
/// `(2^{k_i} - 1)(2^{k_{i+1}} R + 2^{k_{i+1}} - i)`, where `R` counts the
/// subtrees through `v_{i+2}` of the part beyond the edge `v_{i+1} v_{i+2}`.
pub fn phi3_gain(spec: &FamilySpec) -> Result<BigInt> {
    let (d, i, ks) = caterpillar_parts(spec)?;
    // far part: v_{i+2} .. v_{d+1} plus the pendants on v_{i+2} .. v_d
    let spine = d - i;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|j| (j - 1, j)).collect();
    let mut next = spine;
    for (offset, &k) in ks.iter().enumerate().skip(2) {
        for _ in 0..k {
            edges.push((offset - 2, next));
            next += 1;
        }
    }
    let far = Tree::from_valid_edges(next, edges);
    let through = rooted_count(&far, VertexId(1))?;
    let pow = |e: usize| BigInt::one() << e;
    Ok((pow(ks[0]) - 1) * (pow(ks[1]) * through + pow(ks[1]) - BigInt::from(i)))
}

/// Vertices of the pendant path from `u` to the leaf `end`, excluding `u`.
fn leg(tree: &Tree, u: VertexId, end: VertexId) -> Result<Vec<VertexId>> {
    let path = tree.path_between(u, end)?;
    let not_leg = || Error::NotPendantPath { u, end };
    if tree.degree(end) != 1 {
        return Err(not_leg());
    }
    if path[1..path.len() - 1].iter().any(|&x| tree.degree(x) != 2) {
        return Err(not_leg());
    }
    Ok(path[1..].to_vec())
}

/// Replaces two pendant paths at `u` with `s, t >= 2` edges by paths of
/// `s + t - 1` and `1` edges. The count strictly drops.
pub fn phi4(tree: &Tree, u: VertexId, leg1_end: VertexId, leg2_end: VertexId) -> Result<TransformReport> {
    if leg1_end == leg2_end {
        return Err(Error::SameVertex(leg1_end));
    }
    let a = leg(tree, u, leg1_end)?;
    let b = leg(tree, u, leg2_end)?;
    if a[0] == b[0] {
        return Err(Error::NotPendantPath { u, end: leg2_end });
    }
    for l in [&a, &b] {
        if l.len() < 2 {
            return Err(Error::LegTooShort(l.len()));
        }
    }
    if tree.degree(u) < 3 {
        return Err(Error::BranchTooLarge);
    }
    let removed: Vec<usize> = a.iter().chain(&b).map(|x| x.index()).collect();
    let mut edges = kept_edges(tree, &removed);
    let mut prev = u.index();
    for x in a.iter().chain(&b[1..]) {
        edges.push((prev, x.index()));
        prev = x.index();
    }
    edges.push((u.index(), b[0].index()));
    let after = Tree::from_valid_edges(tree.order(), edges);
    Ok(TransformReport::new(Transform::Phi4, tree.clone(), after, false))
}

/// `rest` with legs of `s` and `t` edges hung on `u`. Returns the tree and
/// the two leg ends.
pub fn attach_legs(rest: &Tree, u: VertexId, s: usize, t: usize) -> Result<(Tree, VertexId, VertexId)> {
    rest.check_vertex(u)?;
    if s == 0 || t == 0 {
        return Err(Error::LegTooShort(0));
    }
    let mut edges = rest.raw_edges().to_vec();
    let mut next = rest.order();
    let mut ends = [0; 2];
    for (slot, len) in [s, t].into_iter().enumerate() {
        let mut prev = u.index();
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        ends[slot] = prev;
    }
    Ok((Tree::from_valid_edges(next, edges), VertexId::from_index(ends[0]), VertexId::from_index(ends[1])))
}

/// Predicted count drop of [`phi4`] on `rest` with legs `(s, t)` at `u`:
/// `(st - s - t + 1) * |Φ|`, with `|Φ|` the subtrees of `rest` through `u`
/// having at least two vertices.
pub fn phi4_loss(rest: &Tree, u: VertexId, s: usize, t: usize) -> Result<BigInt> {
    let phi = rooted_count(rest, u)? - 1;
    let factor = BigInt::from(s * t + 1) - BigInt::from(s + t);
    Ok(factor * phi)
}

fn branch_sites(tree: &Tree) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
    tree.vertices()
        .filter(|&u| tree.degree(u) >= 2)
        .flat_map(move |u| {
            let mut nbrs: Vec<VertexId> = tree.neighbors(u).collect();
            nbrs.sort();
            nbrs.into_iter().map(move |r| (u, r))
        })
}

fn chain_budget(tree: &Tree) -> usize {
    tree.order() * tree.diameter().max(1)
}

/// Applies [`phi1`] at single-branch sites (smallest `u`, then smallest
/// root, skipping sites where it would be the identity) until the tree is a
/// star.
pub fn reduce_to_star(tree: &Tree) -> Result<Vec<TransformReport>> {
    let mut chain = Vec::new();
    let mut current = tree.clone();
    while !current.is_star() {
        if chain.len() > chain_budget(tree) {
            return Err(Error::BadParameters("star reduction did not terminate".into()));
        }
        let site = branch_sites(&current).find(|&(_, r)| current.degree(r) >= 2);
        let (u, r) = site.expect("a non-star has two adjacent internal vertices");
        let report = phi1(&current, u, &[r])?;
        current = report.after.clone();
        chain.push(report);
    }
    Ok(chain)
}

/// Applies [`phi2`] at single-branch sites until the tree is a path. When
/// no single branch qualifies (stars, spiders with a short leg) it takes a
/// leaf `v'` and straightens everything hanging from its neighbor except
/// `v'` in one move.
pub fn reduce_to_path(tree: &Tree) -> Result<Vec<TransformReport>> {
    let mut chain = Vec::new();
    let mut current = tree.clone();
    while !current.is_path() {
        if chain.len() > chain_budget(tree) {
            return Err(Error::BadParameters("path reduction did not terminate".into()));
        }
        let mut report = None;
        for (u, r) in branch_sites(&current) {
            let candidate = phi2(&current, u, &[r])?;
            if !candidate.equality_condition_met {
                report = Some(candidate);
                break;
            }
        }
        let report = match report {
            Some(r) => r,
            None => {
                let leaf = current.leaves().next().expect("a tree with an edge has a leaf");
                let u = current.neighbors(leaf).next().expect("leaf has a neighbor");
                let mut roots: Vec<VertexId> = current.neighbors(u).filter(|&w| w != leaf).collect();
                roots.sort();
                phi2(&current, u, &roots)?
            }
        };
        current = report.after.clone();
        chain.push(report);
    }
    Ok(chain)
}
