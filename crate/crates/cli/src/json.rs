//! JSON shapes printed by the CLI. Numbers that can grow without bound are
//! decimal strings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use treegf_core::extremal::{TransformReport, VerifyReport};
use treegf_core::{Poly2, SubtreeProfile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub x: u32,
    pub y: u32,
    pub c: String,
}

/// A polynomial as `{"terms":[{"x":i,"y":j,"c":"..."}]}`, sorted by `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<Term>,
}

impl From<&Poly2> for PolyJson {
    fn from(p: &Poly2) -> Self {
        PolyJson { terms: p.terms().map(|((x, y), c)| Term { x, y, c: c.to_string() }).collect() }
    }
}

impl TryFrom<&PolyJson> for Poly2 {
    type Error = String;

    fn try_from(j: &PolyJson) -> Result<Self, String> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let c: BigInt = t.c.parse().map_err(|_| format!("bad coefficient {:?}", t.c))?;
            terms.push((t.x, t.y, c));
        }
        Ok(Poly2::from_terms(terms))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountJson {
    pub count: String,
}

impl From<&BigInt> for CountJson {
    fn from(c: &BigInt) -> Self {
        CountJson { count: c.to_string() }
    }
}

/// `a[k]` counts subtrees with `k` edges and `b[k]` those with `k` vertices,
/// so `b[0]` is always zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub a: Vec<String>,
    pub b: Vec<String>,
}

impl From<&SubtreeProfile> for ProfileJson {
    fn from(p: &SubtreeProfile) -> Self {
        let n = p.edge_counts().len();
        ProfileJson {
            a: (0..n).map(|k| p.a(k).to_string()).collect(),
            b: (0..=n).map(|k| p.b(k).to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformJson {
    pub transform: String,
    pub chi_before: String,
    pub chi_after: String,
    pub relation: String,
    pub equality_condition_met: bool,
    pub inequality_holds: bool,
}

impl From<&TransformReport> for TransformJson {
    fn from(r: &TransformReport) -> Self {
        TransformJson {
            transform: format!("{:?}", r.transform).to_lowercase(),
            chi_before: r.chi_before.to_string(),
            chi_after: r.chi_after.to_string(),
            relation: r.relation.to_string(),
            equality_condition_met: r.equality_condition_met,
            inequality_holds: r.inequality_holds(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub role: String,
    pub code: String,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub check: String,
    pub n: usize,
    pub trees_examined: usize,
    pub result: String,
    pub witnesses: Vec<WitnessJson>,
    pub failures: Vec<String>,
}

impl From<&VerifyReport> for VerifyJson {
    fn from(r: &VerifyReport) -> Self {
        VerifyJson {
            check: r.check.name().to_string(),
            n: r.n,
            trees_examined: r.trees_examined,
            result: if r.passed { "pass" } else { "fail" }.to_string(),
            witnesses: r
                .witnesses
                .iter()
                .map(|w| WitnessJson { role: w.role.clone(), code: w.code.to_string(), count: w.count.to_string() })
                .collect(),
            failures: r.failures.clone(),
        }
    }
}
