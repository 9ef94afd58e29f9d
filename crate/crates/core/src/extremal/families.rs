use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Named tree shapes used by the extremal results.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    /// `P_n`.
    Path { n: usize },
    /// `K_{1,n-1}`.
    Star { n: usize },
    /// `T_{n,Δ}`: the path on `n - Δ + 1` vertices with `Δ - 1` extra leaves
    /// at one end.
    Broom { n: usize, delta: usize },
    /// `T(n,d)`: `P_{d+1}` with `n - d - 1` leaves at vertex `⌊(d+1)/2⌋ + 1`.
    Tnd { n: usize, d: usize },
    /// `B_{n,d}`: `K_{1,n-d-1}` with `d` extra leaves on one of its leaves.
    Bnd { n: usize, d: usize },
    /// `T_d(k_i, ..., k_d)`: `P_{d+1}` with `ks[l - i]` leaves at vertex `l`
    /// for `l = i..=d`.
    Caterpillar { d: usize, i: usize, ks: Vec<usize> },
    /// `T_0(s,t)` with `T_0 = K_{1,n-s-t-1}`: legs of `s` and `t` edges and
    /// `n - s - t - 1` single leaves around a common center.
    Spider { n: usize, s: usize, t: usize },
}

impl FamilySpec {
    /// Number of vertices of the shape (before parameter validation).
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Star { n }
            | FamilySpec::Broom { n, .. }
            | FamilySpec::Tnd { n, .. }
            | FamilySpec::Bnd { n, .. }
            | FamilySpec::Spider { n, .. } => n,
            FamilySpec::Caterpillar { d, ref ks, .. } => d + 1 + ks.iter().sum::<usize>(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::BadParameters(msg));
        match *self {
            FamilySpec::Path { n } | FamilySpec::Star { n } if n == 0 => bad("n must be at least 1".into()),
            FamilySpec::Path { .. } | FamilySpec::Star { .. } => Ok(()),
            FamilySpec::Broom { n, delta } => {
                if delta < 2 || n < delta + 1 {
                    bad(format!("broom needs Δ >= 2 and n >= Δ + 1, got n = {n}, Δ = {delta}"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Tnd { n, d } => {
                if d < 1 || n < d + 1 {
                    bad(format!("T(n,d) needs d >= 1 and n >= d + 1, got n = {n}, d = {d}"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Bnd { n, d } => {
                if d < 1 || n < 2 * d + 2 {
                    bad(format!("B(n,d) needs n >= 2d + 2 >= 4, got n = {n}, d = {d}"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Caterpillar { d, i, ref ks } => {
                if d < 2 {
                    bad(format!("caterpillar needs d > 1, got d = {d}"))
                } else if i < 1 || i > d {
                    bad(format!("caterpillar index i = {i} outside 1..={d}"))
                } else if ks.len() != d - i + 1 {
                    bad(format!("caterpillar needs {} pendant counts k_{i}..k_{d}, got {}", d - i + 1, ks.len()))
                } else if ks[0] < 1 {
                    bad(format!("caterpillar needs k_{i} >= 1"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Spider { n, s, t } => {
                if s < 1 || t < 1 || n < s + t + 2 {
                    bad(format!("spider needs s, t >= 1 and n >= s + t + 2, got n = {n}, s = {s}, t = {t}"))
                } else {
                    Ok(())
                }
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "P_{n}"),
            FamilySpec::Star { n } => write!(f, "K_{{1,{}}}", n.saturating_sub(1)),
            FamilySpec::Broom { n, delta } => write!(f, "T_{{{n},{delta}}}"),
            FamilySpec::Tnd { n, d } => write!(f, "T({n},{d})"),
            FamilySpec::Bnd { n, d } => write!(f, "B_{{{n},{d}}}"),
            FamilySpec::Caterpillar { d, ks, .. } => {
                let ks: Vec<String> = ks.iter().map(ToString::to_string).collect();
                write!(f, "T_{d}({})", ks.join(","))
            }
            FamilySpec::Spider { n, s, t } => write!(f, "T_0({s},{t}) on {n} vertices"),
        }
    }
}

/// Appends `count` new leaves to `at` (0-based), numbering them from `*next`.
fn hang_leaves(edges: &mut Vec<(usize, usize)>, next: &mut usize, at: usize, count: usize) {
    for _ in 0..count {
        edges.push((at, *next));
        *next += 1;
    }
}

fn path_edges(len: usize) -> Vec<(usize, usize)> {
    (1..len).map(|i| (i - 1, i)).collect()
}

/// Builds the named shape. Path-like parts take the lowest ids, in order,
/// and extra leaves follow.
pub fn make_family(spec: &FamilySpec) -> Result<Tree> {
    spec.validate()?;
    let n = spec.order();
    let tree = match *spec {
        FamilySpec::Path { n } => Tree::path(n),
        FamilySpec::Star { n } => Tree::star(n),
        FamilySpec::Broom { n, delta } => {
            let spine = n - delta + 1;
            let mut edges = path_edges(spine);
            let mut next = spine;
            hang_leaves(&mut edges, &mut next, 0, delta - 1);
            Tree::from_valid_edges(n, edges)
        }
        FamilySpec::Tnd { n, d } => tnd_edges(n, d, d.div_ceil(2) + 1),
        FamilySpec::Bnd { n, d } => {
            let mut edges: Vec<(usize, usize)> = (1..n - d).map(|i| (0, i)).collect();
            let mut next = n - d;
            hang_leaves(&mut edges, &mut next, 1, d);
            Tree::from_valid_edges(n, edges)
        }
        FamilySpec::Caterpillar { d, i, ref ks } => {
            let mut edges = path_edges(d + 1);
            let mut next = d + 1;
            for (offset, &k) in ks.iter().enumerate() {
                hang_leaves(&mut edges, &mut next, i - 1 + offset, k);
            }
            Tree::from_valid_edges(n, edges)
        }
        FamilySpec::Spider { n, s, t } => {
            let mut edges = Vec::with_capacity(n - 1);
            let mut next = 1;
            for leg in [s, t] {
                let mut prev = 0;
                for _ in 0..leg {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
            hang_leaves(&mut edges, &mut next, 0, n - s - t - 1);
            Tree::from_valid_edges(n, edges)
        }
    };
    debug_assert_eq!(tree.order(), n);
    Ok(tree)
}

fn tnd_edges(n: usize, d: usize, attach: usize) -> Tree {
    let mut edges = path_edges(d + 1);
    let mut next = d + 1;
    hang_leaves(&mut edges, &mut next, attach - 1, n - d - 1);
    Tree::from_valid_edges(n, edges)
}

/// `P_{d+1}` with the `n - d - 1` extra leaves on path vertex `attach`
/// (1-based) instead of the central one.
pub fn tnd_attached_at(n: usize, d: usize, attach: usize) -> Result<Tree> {
    FamilySpec::Tnd { n, d }.validate()?;
    if attach < 1 || attach > d + 1 {
        return Err(Error::BadParameters(format!("attachment vertex {attach} outside 1..={}", d + 1)));
    }
    Ok(tnd_edges(n, d, attach))
}

/// Closed-form subtree count of `B_{n,d}`: `n - 2 + 2^d + 2^(n-d-2) + 2^(n-2)`.
pub fn bnd_count(n: usize, d: usize) -> Result<BigInt> {
    FamilySpec::Bnd { n, d }.validate()?;
    let p = |e: usize| BigInt::one() << e;
    Ok(BigInt::from(n - 2) + p(d) + p(n - d - 2) + p(n - 2))
}

/// Closed-form subtree count of `T(n,4)`: `n + 1 + 2^(n-2) + 2^(n-5)`.
pub fn tn4_count(n: usize) -> Result<BigInt> {
    FamilySpec::Tnd { n, d: 4 }.validate()?;
    let p = |e: usize| BigInt::one() << e;
    Ok(BigInt::from(n + 1) + p(n - 2) + p(n - 5))
}
