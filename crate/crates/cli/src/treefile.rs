//! The plain-text tree format.
//!
//! ```text
//! tree 3
//! edge 1 2
//! edge 2 3 x      # optional weight: integer, x or y
//! vertex 2 5      # optional vertex weights after the edges
//! ```

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;
use treegf_core::{Defect, Poly2, Tree, WeightMode, WeightedTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Weight {
    Int(BigInt),
    X,
    Y,
}

impl Weight {
    pub fn to_poly(&self) -> Poly2 {
        match self {
            Weight::Int(c) => Poly2::constant(c.clone()),
            Weight::X => Poly2::x(),
            Weight::Y => Poly2::y(),
        }
    }
}

impl std::str::FromStr for Weight {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "x" => Ok(Weight::X),
            "y" => Ok(Weight::Y),
            _ => s
                .parse::<BigInt>()
                .map(Weight::Int)
                .map_err(|_| format!("weight must be an integer, x or y, got {s:?}")),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Int(c) => write!(f, "{c}"),
            Weight::X => f.write_str("x"),
            Weight::Y => f.write_str("y"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeFile {
    pub n: usize,
    pub edges: Vec<(usize, usize, Option<Weight>)>,
    pub vertices: Vec<(usize, Weight)>,
    shape: Tree,
}

impl TreeFile {
    /// An unweighted file for `tree`.
    pub fn from_tree(tree: &Tree) -> Self {
        TreeFile {
            n: tree.order(),
            edges: tree.edges().map(|(a, b)| (a.0, b.0, None)).collect(),
            vertices: Vec::new(),
            shape: tree.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut n = None;
        let mut edges = Vec::new();
        let mut edge_lines = Vec::new();
        let mut vertices: Vec<(usize, Weight)> = Vec::new();
        let mut last_line = 0;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let Some((&head, args)) = tokens.split_first() else { continue };
            let id = |tok: &str, n: usize| -> Result<usize, ParseError> {
                let v: usize = tok.parse().map_err(|_| at(line, format!("expected a vertex id, got {tok:?}")))?;
                if v == 0 || v > n {
                    return Err(at(line, format!("vertex {v} is out of range 1..={n}")));
                }
                Ok(v)
            };
            match (head, n) {
                ("tree", None) => {
                    let [count] = args else { return Err(at(line, "expected `tree <n>`")) };
                    let count: usize = count.parse().map_err(|_| at(line, format!("expected a vertex count, got {count:?}")))?;
                    if count == 0 {
                        return Err(at(line, "a tree needs at least one vertex"));
                    }
                    n = Some(count);
                }
                ("tree", Some(_)) => return Err(at(line, "duplicate `tree` line")),
                (_, None) => return Err(at(line, format!("expected `tree <n>` first, got {head:?}"))),
                ("edge", Some(n)) => {
                    if !vertices.is_empty() {
                        return Err(at(line, "edge lines must come before vertex lines"));
                    }
                    if edges.len() == n - 1 {
                        return Err(at(line, format!("too many edges: a tree on {n} vertices has {}", n - 1)));
                    }
                    let (u, v, w) = match args {
                        [u, v] => (u, v, None),
                        [u, v, w] => (u, v, Some(w.parse::<Weight>().map_err(|e| at(line, e))?)),
                        _ => return Err(at(line, "expected `edge <u> <v> [<w>]`")),
                    };
                    edges.push((id(u, n)?, id(v, n)?, w));
                    edge_lines.push(line);
                }
                ("vertex", Some(n)) => {
                    let [u, w] = args else { return Err(at(line, "expected `vertex <u> <w>`")) };
                    let u = id(u, n)?;
                    if vertices.iter().any(|&(x, _)| x == u) {
                        return Err(at(line, format!("vertex {u} is weighted twice")));
                    }
                    vertices.push((u, w.parse::<Weight>().map_err(|e| at(line, e))?));
                }
                (other, Some(_)) => return Err(at(line, format!("unknown directive {other:?}"))),
            }
        }
        let Some(n) = n else { return Err(at(last_line.max(1), "missing `tree <n>` line")) };
        if edges.len() != n - 1 {
            return Err(at(last_line.max(1), format!("expected {} edges, found {}", n - 1, edges.len())));
        }
        let shape = Tree::new(n, edges.iter().map(|&(u, v, _)| (u, v))).map_err(|e| {
            let line = match e {
                treegf_core::Error::NotATree(Defect::SelfLoop(x)) => {
                    edges.iter().position(|&(u, v, _)| u == x.0 && v == x.0)
                }
                treegf_core::Error::NotATree(Defect::DuplicateEdge(a, b) | Defect::Cycle(a, b)) => edges
                    .iter()
                    .rposition(|&(u, v, _)| (u, v) == (a.0, b.0) || (v, u) == (a.0, b.0)),
                _ => None,
            };
            at(line.map_or(last_line, |i| edge_lines[i]), e.to_string())
        })?;
        Ok(TreeFile { n, edges, vertices, shape })
    }

    pub fn shape(&self) -> &Tree {
        &self.shape
    }

    /// Weights from the file, with missing ones taken from `mode`.
    pub fn weighted(&self, mode: WeightMode) -> WeightedTree<Poly2> {
        let mut fv = vec![mode.default_vertex_weight(); self.n];
        for (u, w) in &self.vertices {
            fv[u - 1] = w.to_poly();
        }
        let fe = self
            .edges
            .iter()
            .map(|(_, _, w)| w.as_ref().map_or_else(|| mode.default_edge_weight(), Weight::to_poly))
            .collect();
        WeightedTree::from_shape(self.shape.clone(), fv, fe).expect("lengths match the shape")
    }

    pub fn is_unweighted(&self) -> bool {
        self.vertices.is_empty() && self.edges.iter().all(|(_, _, w)| w.is_none())
    }
}

impl fmt::Display for TreeFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tree {}", self.n)?;
        for (u, v, w) in &self.edges {
            match w {
                Some(w) => writeln!(f, "edge {u} {v} {w}")?,
                None => writeln!(f, "edge {u} {v}")?,
            }
        }
        for (u, w) in &self.vertices {
            writeln!(f, "vertex {u} {w}")?;
        }
        Ok(())
    }
}
