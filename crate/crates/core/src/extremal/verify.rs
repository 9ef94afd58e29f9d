//! Exhaustive checks of the extremal results over all trees of a given order,
//! plus oracle, closed-form and confluence sweeps.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use super::families::{bnd_count, make_family, tn4_count, tnd_attached_at, FamilySpec};
use crate::error::{Error, Result};
use crate::genfunc::{
    closed_path_gf, closed_star_gf, pair_gf, pair_gf_with_order, path_count, rooted_gf, rooted_gf_with_order,
    star_count, subtree_count, total_gf, total_gf_with_order, WeightMode,
};
use crate::oracle::{all_trees, brute_gf, brute_pair_gf, brute_rooted_gf, canonical_code, CanonicalCode, GENERATION_CAP};
use crate::ring::Poly2;
use crate::tree::{Tree, VertexId};

/// Largest order for the brute-force oracle sweep.
pub const ORACLE_CAP: usize = 9;
/// Largest order for pair checks inside the oracle sweep.
pub const PAIR_ORACLE_CAP: usize = 7;
/// Largest order for the closed-form sweep.
pub const CLOSED_FORM_CAP: usize = 200;
/// Random elimination orders tried per tree by the confluence sweep.
pub const CONFLUENCE_ORDERS: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Check {
    Oracle,
    Theorem11,
    Theorem36,
    Theorem37,
    Cor39,
    ClosedForms,
    Confluence,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Oracle => "oracle",
            Check::Theorem11 => "theorem11",
            Check::Theorem36 => "theorem36",
            Check::Theorem37 => "theorem37",
            Check::Cor39 => "cor39",
            Check::ClosedForms => "closedforms",
            Check::Confluence => "confluence",
        }
    }
}

/// A tree singled out by a check, by canonical code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub role: String,
    pub code: CanonicalCode,
    pub count: BigInt,
}

impl Witness {
    fn new(role: impl Into<String>, tree: &Tree, count: BigInt) -> Self {
        Witness { role: role.into(), code: canonical_code(tree), count }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub check: Check,
    pub n: usize,
    pub trees_examined: usize,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
    /// Human-readable reasons for a failure, empty on success.
    pub failures: Vec<String>,
}

impl VerifyReport {
    fn new(check: Check, n: usize, trees_examined: usize) -> Self {
        VerifyReport { check, n, trees_examined, passed: true, witnesses: Vec::new(), failures: Vec::new() }
    }

    fn fail(&mut self, why: String) {
        self.passed = false;
        self.failures.push(why);
    }
}

struct Scored {
    tree: Tree,
    code: CanonicalCode,
    count: BigInt,
}

fn scored_trees(n: usize) -> Result<Vec<Scored>> {
    let trees = all_trees(n)?;
    Ok(trees
        .into_par_iter()
        .map(|tree| Scored { code: canonical_code(&tree), count: subtree_count(&tree), tree })
        .collect())
}

fn exhaustive_range(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n > GENERATION_CAP {
        return Err(Error::TooLarge { what, n, cap: GENERATION_CAP });
    }
    if n < min {
        return Err(Error::BadParameters(format!("{what} needs n >= {min}, got {n}")));
    }
    Ok(())
}

/// Among `pool`, the codes attaining the extreme count (`max` or min).
fn extremes<'a>(pool: impl Iterator<Item = &'a Scored>, max: bool) -> Option<(BigInt, BTreeSet<&'a CanonicalCode>)> {
    let mut best: Option<(BigInt, BTreeSet<&CanonicalCode>)> = None;
    for s in pool {
        match &mut best {
            Some((value, codes)) if *value == s.count => {
                codes.insert(&s.code);
            }
            Some((value, _)) if (s.count > *value) != max => {}
            _ => best = Some((s.count.clone(), BTreeSet::from([&s.code]))),
        }
    }
    best
}

fn expect_unique(report: &mut VerifyReport, label: &str, found: Option<(BigInt, BTreeSet<&CanonicalCode>)>, target: &Tree) {
    let want = canonical_code(target);
    let count = subtree_count(target);
    report.witnesses.push(Witness { role: label.to_string(), code: want.clone(), count: count.clone() });
    match found {
        Some((value, codes)) if codes.len() == 1 && codes.contains(&want) && value == count => {}
        Some((value, codes)) => report.fail(format!(
            "{label}: expected only {want} with {count}, extreme value {value} attained by {}",
            codes.iter().map(|c| c.as_str()).collect::<Vec<_>>().join(", ")
        )),
        None => report.fail(format!("{label}: no trees qualify")),
    }
}

/// `P_n` is the unique tree on `n` vertices with fewest subtrees and
/// `K_{1,n-1}` the unique one with most.
pub fn verify_theorem_1_1(n: usize) -> Result<VerifyReport> {
    exhaustive_range("theorem11", n, 3)?;
    let scored = scored_trees(n)?;
    let mut report = VerifyReport::new(Check::Theorem11, n, scored.len());
    expect_unique(&mut report, "min", extremes(scored.iter(), false), &Tree::path(n));
    expect_unique(&mut report, "max", extremes(scored.iter(), true), &Tree::star(n));
    Ok(report)
}

/// For each `Δ` (or just `delta`), the broom `T_{n,Δ}` is the unique tree
/// with fewest subtrees among trees of maximum degree at least `Δ`.
pub fn verify_theorem_3_6(n: usize, delta: Option<usize>) -> Result<VerifyReport> {
    exhaustive_range("theorem36", n, 3)?;
    let deltas: Vec<usize> = match delta {
        Some(d) if d < 3 || d > n - 1 => {
            return Err(Error::BadParameters(format!("Δ must lie in 3..={}, got {d}", n - 1)));
        }
        Some(d) => vec![d],
        None => (3..n).collect(),
    };
    let scored = scored_trees(n)?;
    let mut report = VerifyReport::new(Check::Theorem36, n, scored.len());
    for d in deltas {
        let pool = scored.iter().filter(|s| s.tree.max_degree() >= d);
        let broom = make_family(&FamilySpec::Broom { n, delta: d })?;
        expect_unique(&mut report, &format!("min maxdeg>={d}"), extremes(pool, false), &broom);
    }
    Ok(report)
}

/// For each `d` (or just `d`), `T(n,d)` is the unique tree with most
/// subtrees among trees of diameter at least `d`. `attach` moves the extra
/// leaves to another path vertex, which should make the check fail unless
/// the result is isomorphic.
pub fn verify_theorem_3_7(n: usize, d: Option<usize>, attach: Option<usize>) -> Result<VerifyReport> {
    exhaustive_range("theorem37", n, 3)?;
    let ds: Vec<usize> = match d {
        Some(d) if d < 2 || d > n - 1 => {
            return Err(Error::BadParameters(format!("d must lie in 2..={}, got {d}", n - 1)));
        }
        Some(d) => vec![d],
        None => (2..n).collect(),
    };
    let scored = scored_trees(n)?;
    let mut report = VerifyReport::new(Check::Theorem37, n, scored.len());
    for d in ds {
        let pool = scored.iter().filter(|s| s.tree.diameter() >= d);
        let target = tnd_attached_at(n, d, attach.unwrap_or(d.div_ceil(2) + 1))?;
        expect_unique(&mut report, &format!("max diam>={d}"), extremes(pool, true), &target);
    }
    Ok(report)
}

/// The chain `χ(K_{1,n-1}) > χ(T(n,3)) > χ(B_{n,2}) > χ(B_{n,3}) > χ(T(n,4))`,
/// the closed forms behind it, and (for `n <= 10`) that every other tree
/// has fewer subtrees than `T(n,4)`.
pub fn verify_cor_3_9(n: usize) -> Result<VerifyReport> {
    const CAP: usize = 12;
    if n > CAP {
        return Err(Error::TooLarge { what: "cor39", n, cap: CAP });
    }
    if n < 8 {
        return Err(Error::BadParameters(format!("cor39 needs n >= 8, got {n}")));
    }
    let chain = [
        ("star", FamilySpec::Star { n }, star_count(n)),
        ("T(n,3)", FamilySpec::Tnd { n, d: 3 }, BigInt::from(0)),
        ("B(n,2)", FamilySpec::Bnd { n, d: 2 }, bnd_count(n, 2)?),
        ("B(n,3)", FamilySpec::Bnd { n, d: 3 }, bnd_count(n, 3)?),
        ("T(n,4)", FamilySpec::Tnd { n, d: 4 }, tn4_count(n)?),
    ];
    let mut report = VerifyReport::new(Check::Cor39, n, chain.len());
    let mut codes = BTreeSet::new();
    for (k, (role, spec, formula)) in chain.iter().enumerate() {
        let tree = make_family(spec)?;
        let count = subtree_count(&tree);
        // T(n,3) has no closed form to compare against
        if k != 1 && count != *formula {
            report.fail(format!("{role}: computed {count}, closed form {formula}"));
        }
        codes.insert(canonical_code(&tree));
        report.witnesses.push(Witness::new(*role, &tree, count));
    }
    for pair in report.witnesses.clone().windows(2) {
        if pair[0].count <= pair[1].count {
            report.fail(format!("{} ({}) is not above {} ({})", pair[0].role, pair[0].count, pair[1].role, pair[1].count));
        }
    }
    if n <= GENERATION_CAP {
        let floor = report.witnesses[4].count.clone();
        let scored = scored_trees(n)?;
        report.trees_examined = scored.len();
        for s in scored.iter().filter(|s| !codes.contains(&s.code)) {
            if s.count >= floor {
                report.fail(format!("{} has {} subtrees, not below T(n,4)", s.code, s.count));
            }
        }
    }
    Ok(report)
}

fn oracle_mismatches(tree: &Tree) -> Vec<String> {
    let code = canonical_code(tree);
    let mut out = Vec::new();
    let modes = [WeightMode::Unit, WeightMode::EdgeVar, WeightMode::VertexVar, WeightMode::Bivariate];
    for mode in modes {
        let w = mode.weigh(tree);
        if total_gf(&w) != brute_gf(&w).expect("within cap") {
            out.push(format!("{code}: total, {mode:?}"));
        }
    }
    let w = WeightMode::Bivariate.weigh(tree);
    for r in tree.vertices() {
        if rooted_gf(&w, r).expect("valid root") != brute_rooted_gf(&w, r).expect("within cap") {
            out.push(format!("{code}: rooted at {r}"));
        }
    }
    if tree.order() <= PAIR_ORACLE_CAP {
        for a in tree.vertices() {
            for b in tree.vertices().filter(|&b| b > a) {
                if pair_gf(&w, a, b).expect("valid pair") != brute_pair_gf(&w, a, b).expect("within cap") {
                    out.push(format!("{code}: pair {a},{b}"));
                }
            }
        }
    }
    out
}

/// Contraction results against brute-force subtree enumeration on every
/// tree of order `n`: totals in all four weight modes, rooted totals at
/// every vertex, and pair totals for every pair when `n <= 7`.
pub fn verify_oracle(n: usize) -> Result<VerifyReport> {
    if n > ORACLE_CAP {
        return Err(Error::TooLarge { what: "oracle", n, cap: ORACLE_CAP });
    }
    let trees = all_trees(n)?;
    let mut report = VerifyReport::new(Check::Oracle, n, trees.len());
    let failures: Vec<String> = trees.par_iter().flat_map_iter(oracle_mismatches).collect();
    for f in failures {
        report.fail(f);
    }
    Ok(report)
}

/// Path and star closed forms (counts and generic-weight polynomials) and
/// the family count formulas, for every order up to `n`.
pub fn verify_closed_forms(n: usize) -> Result<VerifyReport> {
    if n > CLOSED_FORM_CAP {
        return Err(Error::TooLarge { what: "closedforms", n, cap: CLOSED_FORM_CAP });
    }
    if n == 0 {
        return Err(Error::BadParameters("closedforms needs n >= 1".into()));
    }
    let mut report = VerifyReport::new(Check::ClosedForms, n, 0);
    for m in 1..=n {
        let path = Tree::path(m);
        let star = Tree::star(m);
        report.trees_examined += 2;
        let chi_path = subtree_count(&path);
        let chi_star = subtree_count(&star);
        if chi_path != BigInt::from(m * (m + 1) / 2) || chi_path != path_count(m) {
            report.fail(format!("path {m}: {chi_path}"));
        }
        let want_star = (BigInt::from(1) << (m - 1)) + (m - 1);
        if chi_star != want_star || chi_star != star_count(m) {
            report.fail(format!("star {m}: {chi_star}"));
        }
        // distinct monomial weights keep every subtree visible in the result
        let vw: Vec<Poly2> = (0..m as u32).map(|i| Poly2::monomial(BigInt::from(i + 1), i, 0)).collect();
        let ew: Vec<Poly2> = (0..m.saturating_sub(1) as u32).map(|i| Poly2::monomial(BigInt::from(i + 2), 0, i + 1)).collect();
        let weighted = path.with_weights(|v| vw[v.index()].clone(), |a, b| ew[a.index().min(b.index())].clone());
        if m <= 40 && closed_path_gf(&vw, &ew)? != total_gf(&weighted) {
            report.fail(format!("weighted path {m}: closed form differs"));
        }
        if (2..=40).contains(&m) {
            let star_w = star.with_weights(
                |v| vw[v.index()].clone(),
                |a, b| ew[a.index().max(b.index()) - 1].clone(),
            );
            if closed_star_gf(&vw[1..], &vw[0], &ew)? != total_gf(&star_w) {
                report.fail(format!("weighted star {m}: closed form differs"));
            }
        }
        if m >= 4 {
            for d in 1..=(m - 2) / 2 {
                report.trees_examined += 1;
                let tree = make_family(&FamilySpec::Bnd { n: m, d })?;
                if subtree_count(&tree) != bnd_count(m, d)? {
                    report.fail(format!("B({m},{d}) count differs from closed form"));
                }
            }
        }
        if m >= 5 {
            report.trees_examined += 1;
            if subtree_count(&make_family(&FamilySpec::Tnd { n: m, d: 4 })?) != tn4_count(m)? {
                report.fail(format!("T({m},4) count differs from closed form"));
            }
        }
    }
    Ok(report)
}

fn confluence_mismatches(tree: &Tree, seed: u64) -> Vec<String> {
    let code = canonical_code(tree);
    let w = WeightMode::Bivariate.weigh(tree);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    let n = tree.order();
    let total = total_gf(&w);
    for k in 0..CONFLUENCE_ORDERS {
        let mut pick = |c: &[VertexId]| rng.gen_range(0..c.len());
        if total_gf_with_order(&w, &mut pick) != total {
            out.push(format!("{code}: total, order {k}"));
        }
        let root = VertexId(rng.gen_range(1..=n));
        let mut pick = |c: &[VertexId]| rng.gen_range(0..c.len());
        if rooted_gf_with_order(&w, root, &mut pick).expect("valid root") != rooted_gf(&w, root).expect("valid root") {
            out.push(format!("{code}: rooted at {root}, order {k}"));
        }
        if n >= 2 {
            let a = VertexId(rng.gen_range(1..=n));
            let mut b = VertexId(rng.gen_range(1..n));
            if b >= a {
                b = VertexId(b.0 + 1);
            }
            let mut pick = |c: &[VertexId]| rng.gen_range(0..c.len());
            if pair_gf_with_order(&w, a, b, &mut pick).expect("valid pair") != pair_gf(&w, a, b).expect("valid pair") {
                out.push(format!("{code}: pair {a},{b}, order {k}"));
            }
        }
    }
    out
}

/// Total, rooted and pair results under random elimination orders agree
/// with the default order on every tree of order `n`.
pub fn verify_confluence(n: usize, seed: u64) -> Result<VerifyReport> {
    let trees = all_trees(n)?;
    let mut report = VerifyReport::new(Check::Confluence, n, trees.len());
    let failures: Vec<String> = trees
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, t)| confluence_mismatches(t, seed.wrapping_add(i as u64)))
        .collect();
    for f in failures {
        report.fail(f);
    }
    Ok(report)
}
