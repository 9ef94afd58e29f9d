//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treegf_core::extremal::{attach_legs, make_family, phi3, phi4, FamilySpec};
use treegf_core::oracle::{all_trees, brute_gf, brute_pair_gf, brute_rooted_gf, canonical_code, CanonicalCode};
use treegf_core::{
    pair_count, pair_gf, pair_gf_with_order, rooted_count, rooted_gf, rooted_gf_with_order, subtree_count,
    total_gf, total_gf_with_ops, total_gf_with_order, BigInt, Poly2, Tree, VertexId, WeightMode,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

fn ac1_closed_counts() -> Outcome {
    for n in 1..=20u64 {
        let path = subtree_count(&Tree::path(n as usize));
        ensure(path == BigInt::from(n * (n + 1) / 2), || format!("path {n}: {path}"))?;
        let star = subtree_count(&Tree::star(n as usize));
        ensure(star == BigInt::from((1u64 << (n - 1)) + n - 1), || format!("star {n}: {star}"))?;
    }
    Ok("paths and stars, n = 1..20".into())
}

/// Coefficients listed from the top degree down, as printed.
fn descending(coeffs: &[i64], var_x: bool) -> Poly2 {
    let top = coeffs.len() as u32 - 1;
    Poly2::from_terms(coeffs.iter().enumerate().map(|(k, &c)| {
        let e = top - k as u32;
        if var_x {
            (e, 0, c)
        } else {
            (0, e, c)
        }
    }))
}

fn ac2_double_star() -> Outcome {
    // A = 1, C = 2, B = 3; leaf 4 on A, leaves 5 and 6 on C
    let t = Tree::new(6, [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).map_err(|e| e.to_string())?;
    let (a, b, c) = (VertexId(1), VertexId(3), VertexId(2));
    let ex = WeightMode::EdgeVar.weigh(&t);
    let vy = WeightMode::VertexVar.weigh(&t);
    let checks = [
        (total_gf(&ex), descending(&[1, 4, 6, 6, 5, 6], true), "x^5 + 4x^4 + 6x^3 + 6x^2 + 5x + 6"),
        (rooted_gf(&ex, a).unwrap(), descending(&[1, 4, 6, 5, 3, 1], true), "x^5 + 4x^4 + 6x^3 + 5x^2 + 3x + 1"),
        (pair_gf(&ex, b, c).unwrap(), descending(&[1, 3, 3, 1, 0, 0], true), "x^5 + 3x^4 + 3x^3 + x^2"),
        (total_gf(&vy), descending(&[1, 4, 6, 6, 5, 6, 0], false), "y^6 + 4y^5 + 6y^4 + 6y^3 + 5y^2 + 6y"),
        (rooted_gf(&vy, a).unwrap(), descending(&[1, 4, 6, 5, 3, 1, 0], false), "y^6 + 4y^5 + 6y^4 + 5y^3 + 3y^2 + y"),
        (pair_gf(&vy, b, c).unwrap(), descending(&[1, 3, 3, 1, 0, 0, 0], false), "y^6 + 3y^5 + 3y^4 + y^3"),
    ];
    for (got, want, printed) in checks {
        ensure(got == want && got.to_string() == printed, || format!("got {got}, want {printed}"))?;
    }
    ensure(subtree_count(&t) == BigInt::from(28), || "χ(T) != 28".into())?;
    ensure(rooted_count(&t, a).unwrap() == BigInt::from(20), || "χ(T;A) != 20".into())?;
    ensure(pair_count(&t, b, c).unwrap() == BigInt::from(8), || "χ(T;B,C) != 8".into())?;
    Ok("six polynomials exact; counts 28, 20, 8".into())
}

fn ac3_oracle() -> Outcome {
    let modes = [WeightMode::Unit, WeightMode::EdgeVar, WeightMode::VertexVar, WeightMode::Bivariate];
    let (mut trees, mut comparisons) = (0, 0);
    for n in 1..=9 {
        for tree in all_trees(n).map_err(|e| e.to_string())? {
            trees += 1;
            let code = canonical_code(&tree);
            for mode in modes {
                let w = mode.weigh(&tree);
                ensure(total_gf(&w) == brute_gf(&w).unwrap(), || format!("{code} total {mode:?}"))?;
                comparisons += 1;
            }
            for mode in modes {
                let w = mode.weigh(&tree);
                for r in tree.vertices() {
                    ensure(rooted_gf(&w, r).unwrap() == brute_rooted_gf(&w, r).unwrap(), || format!("{code} rooted {r}"))?;
                    comparisons += 1;
                }
                if n <= 7 {
                    for x in tree.vertices() {
                        for y in tree.vertices().filter(|&y| y > x) {
                            let same = pair_gf(&w, x, y).unwrap() == brute_pair_gf(&w, x, y).unwrap();
                            ensure(same, || format!("{code} pair {x},{y}"))?;
                            comparisons += 1;
                        }
                    }
                }
            }
        }
    }
    ensure(trees == 95, || format!("{trees} classes instead of 95"))?;
    Ok(format!("{trees} trees, {comparisons} comparisons, 0 mismatches"))
}

fn ac4_confluence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut runs = 0;
    for n in 1..=9 {
        for tree in all_trees(n).map_err(|e| e.to_string())? {
            let w = WeightMode::Bivariate.weigh(&tree);
            let code = canonical_code(&tree);
            let total = total_gf(&w);
            for k in 0..20 {
                let mut pick = |c: &[VertexId]| rng.gen_range(0..c.len());
                ensure(total_gf_with_order(&w, &mut pick) == total, || format!("{code} total, order {k}"))?;
                let r = VertexId(rng.gen_range(1..=n));
                let mut pick = |c: &[VertexId]| rng.gen_range(0..c.len());
                let same = rooted_gf_with_order(&w, r, &mut pick).unwrap() == rooted_gf(&w, r).unwrap();
                ensure(same, || format!("{code} rooted {r}, order {k}"))?;
                if n >= 2 {
                    let a = VertexId(rng.gen_range(1..=n));
                    let b = VertexId(rng.gen_range(1..=n));
                    if a != b {
                        let mut pick = |c: &[VertexId]| rng.gen_range(0..c.len());
                        let same = pair_gf_with_order(&w, a, b, &mut pick).unwrap() == pair_gf(&w, a, b).unwrap();
                        ensure(same, || format!("{code} pair {a},{b}, order {k}"))?;
                    }
                }
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} random orders, 0 mismatches"))
}

struct Scored {
    tree: Tree,
    code: CanonicalCode,
    count: BigInt,
}

fn scored(n: usize) -> Result<Vec<Scored>, String> {
    Ok(all_trees(n)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|tree| Scored { code: canonical_code(&tree), count: subtree_count(&tree), tree })
        .collect())
}

/// The codes attaining the smallest (or largest) count in `pool`.
fn arg_extreme<'a>(pool: impl Iterator<Item = &'a Scored> + Clone, max: bool) -> BTreeSet<CanonicalCode> {
    let best = if max { pool.clone().map(|s| &s.count).max() } else { pool.clone().map(|s| &s.count).min() };
    match best {
        Some(best) => pool.filter(|s| &s.count == best).map(|s| s.code.clone()).collect(),
        None => BTreeSet::new(),
    }
}

fn only(code: CanonicalCode) -> BTreeSet<CanonicalCode> {
    BTreeSet::from([code])
}

fn ac5_theorem_1_1() -> Outcome {
    for n in 3..=10 {
        let all = scored(n)?;
        ensure(arg_extreme(all.iter(), false) == only(canonical_code(&Tree::path(n))), || format!("min at n={n}"))?;
        ensure(arg_extreme(all.iter(), true) == only(canonical_code(&Tree::star(n))), || format!("max at n={n}"))?;
    }
    Ok("unique path minimum and star maximum, n = 3..10".into())
}

fn ac6_theorems_3_6_3_7() -> Outcome {
    let mut cases = 0;
    for n in 3..=10 {
        let all = scored(n)?;
        for delta in 3..n {
            let pool = all.iter().filter(|s| s.tree.max_degree() >= delta);
            let broom = make_family(&FamilySpec::Broom { n, delta }).map_err(|e| e.to_string())?;
            ensure(arg_extreme(pool, false) == only(canonical_code(&broom)), || format!("broom n={n} Δ={delta}"))?;
            cases += 1;
        }
        for d in 2..n {
            let pool = all.iter().filter(|s| s.tree.diameter() >= d);
            let tnd = make_family(&FamilySpec::Tnd { n, d }).map_err(|e| e.to_string())?;
            ensure(arg_extreme(pool, true) == only(canonical_code(&tnd)), || format!("T(n,d) n={n} d={d}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n, Δ) and (n, d) cases, all unique"))
}

fn ac7_cor_3_9() -> Outcome {
    for n in 8..=10 {
        let eq15 = |d: usize| BigInt::from(n - 2) + pow2(d) + pow2(n - d - 2) + pow2(n - 2);
        let eq16 = BigInt::from(n + 1) + pow2(n - 2) + pow2(n - 5);
        let star_formula = pow2(n - 1) + (n - 1);
        let specs = [
            FamilySpec::Star { n },
            FamilySpec::Tnd { n, d: 3 },
            FamilySpec::Bnd { n, d: 2 },
            FamilySpec::Bnd { n, d: 3 },
            FamilySpec::Tnd { n, d: 4 },
        ];
        let trees: Vec<Tree> = specs.iter().map(|s| make_family(s).unwrap()).collect();
        let counts: Vec<BigInt> = trees.iter().map(subtree_count).collect();
        ensure(counts[0] == star_formula && counts[2] == eq15(2) && counts[3] == eq15(3) && counts[4] == eq16, || {
            format!("n={n}: closed forms disagree with {counts:?}")
        })?;
        ensure(counts.windows(2).all(|w| w[0] > w[1]), || format!("n={n}: chain not strict: {counts:?}"))?;
        if n == 8 {
            let want: Vec<BigInt> = [135, 104, 90, 86, 81].map(BigInt::from).to_vec();
            ensure(counts == want, || format!("n=8 chain {counts:?}"))?;
        }
        let named: BTreeSet<CanonicalCode> = trees.iter().map(canonical_code).collect();
        for s in scored(n)?.iter().filter(|s| !named.contains(&s.code)) {
            ensure(s.count < counts[4], || format!("n={n}: {} has {} >= {}", s.code, s.count, counts[4]))?;
        }
    }
    Ok("135 > 104 > 90 > 86 > 81 at n=8; rest below T(n,4) for n = 8..10".into())
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The part of the caterpillar past the edge `v_{i+1} v_{i+2}`, with
/// `v_{i+2}` as vertex 1.
fn far_part(d: usize, i: usize, ks: &[usize]) -> Tree {
    let spine = d - i;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|j| (j, j + 1)).collect();
    let mut next = spine + 1;
    for (offset, &k) in ks.iter().enumerate().skip(2) {
        for _ in 0..k {
            edges.push((offset - 1, next));
            next += 1;
        }
    }
    Tree::new(next - 1, edges).unwrap()
}

fn ac8_difference_formulas() -> Outcome {
    let mut phi3_cases = 0;
    for d in 2..=6usize {
        for i in 1..=d.div_ceil(2) {
            for sum in 1..=4 {
                for ks in compositions(sum, d - i + 1).into_iter().filter(|ks| ks[0] >= 1) {
                    let spec = FamilySpec::Caterpillar { d, i, ks: ks.clone() };
                    let report = phi3(&spec).map_err(|e| e.to_string())?;
                    let r = rooted_count(&far_part(d, i, &ks), VertexId(1)).unwrap();
                    let predicted = (pow2(ks[0]) - 1) * (pow2(ks[1]) * r + pow2(ks[1]) - i);
                    let actual = &report.chi_after - &report.chi_before;
                    ensure(predicted == actual, || format!("φ3 {spec:?}: {predicted} vs {actual}"))?;
                    phi3_cases += 1;
                }
            }
        }
    }
    let mut phi4_cases = 0;
    for m in 2..=5 {
        for rest in all_trees(m).unwrap() {
            for u in rest.vertices() {
                for s in 2..=4usize {
                    for t in 2..=4usize {
                        let (tree, e1, e2) = attach_legs(&rest, u, s, t).unwrap();
                        let report = phi4(&tree, u, e1, e2).map_err(|e| e.to_string())?;
                        let phi = rooted_count(&rest, u).unwrap() - 1;
                        let predicted = (BigInt::from(s * t + 1) - (s + t)) * phi;
                        let actual = &report.chi_before - &report.chi_after;
                        ensure(predicted == actual, || format!("φ4 s={s} t={t}: {predicted} vs {actual}"))?;
                        phi4_cases += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{phi3_cases} φ3 and {phi4_cases} φ4 cases, 0 mismatches"))
}

fn timed_path(n: usize) -> (Duration, usize, BigInt) {
    let w = Tree::path(n).unit_weighted::<BigInt>();
    let mut best = Duration::MAX;
    let mut last = (0, BigInt::from(0));
    for _ in 0..3 {
        let start = Instant::now();
        let (value, ops) = total_gf_with_ops(&w);
        best = best.min(start.elapsed());
        last = (ops, value);
    }
    (best, last.0, last.1)
}

fn ac9_linear_time() -> Outcome {
    let mut times = Vec::new();
    for n in [100_000usize, 1_000_000] {
        let (t, ops, value) = timed_path(n);
        let n64 = n as u64;
        ensure(value == BigInt::from(n64 * (n64 + 1) / 2), || format!("χ(P_{n}) = {value}"))?;
        ensure(ops <= 5 * n, || format!("{ops} ring operations for n = {n}"))?;
        times.push(t);
    }
    let ratio = times[1].as_secs_f64() / times[0].as_secs_f64().max(1e-9);
    ensure(ratio <= 20.0, || format!("time ratio {ratio:.2} for 10x the vertices"))?;
    Ok(format!("{:.1} ms vs {:.1} ms, ratio {ratio:.2} (limit 20), ops <= 5n", times[0].as_secs_f64() * 1e3, times[1].as_secs_f64() * 1e3))
}

fn ac10_cli_contract() -> Outcome {
    let problems = common::check_matrix();
    ensure(problems.is_empty(), || problems.join("; "))?;
    Ok(format!("{} cases, each run twice with identical bytes", common::matrix().len()))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, &'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 10] = [
        ("AC1", "closed-count formulas", ac1_closed_counts, Some(Duration::from_secs(1))),
        ("AC2", "double star examples", ac2_double_star, Some(Duration::from_secs(1))),
        ("AC3", "oracle equivalence", ac3_oracle, Some(Duration::from_secs(60))),
        ("AC4", "elimination-order confluence", ac4_confluence, Some(Duration::from_secs(60))),
        ("AC5", "path/star extremes", ac5_theorem_1_1, Some(Duration::from_secs(30))),
        ("AC6", "max-degree and diameter extremes", ac6_theorems_3_6_3_7, Some(Duration::from_secs(300))),
        ("AC7", "top-five chain", ac7_cor_3_9, Some(Duration::from_secs(60))),
        ("AC8", "move difference formulas", ac8_difference_formulas, Some(Duration::from_secs(60))),
        ("AC9", "linear-time contraction", ac9_linear_time, None),
        ("AC10", "CLI contract", ac10_cli_contract, None),
    ];
    let mut failed = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("[PASS] {id} {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
