//! Subtree generating functions of vertex- and edge-weighted trees.
//!
//! Every algorithm here repeatedly contracts a pendant vertex into its
//! neighbor, so totals, rooted totals and pair totals all take a linear
//! number of ring operations. The code is generic over the coefficient ring
//! ([`Ring`]); [`BigInt`] gives exact counts and [`Poly2`] gives bivariate
//! polynomials in `x` (edges) and `y` (vertices).
//!
//! ```
//! use treegf_core::{subtree_count, total_gf, Tree, WeightMode};
//!
//! let star = Tree::star(5);
//! assert_eq!(subtree_count(&star), 20.into());
//! let gf = total_gf(&WeightMode::EdgeVar.weigh(&star));
//! assert_eq!(gf.to_string(), "x^4 + 4x^3 + 6x^2 + 4x + 5");
//! ```

pub mod contract;
pub mod error;
pub mod extremal;
pub mod genfunc;
pub mod oracle;
pub mod ring;
pub mod tree;

pub use num_bigint::BigInt;

pub use contract::ContractionState;
pub use error::{Defect, Error, Result};
pub use genfunc::{
    closed_path_gf, closed_path_rooted_gf, closed_star_gf, pair_count, pair_gf, pair_gf_with_order, pair_profile,
    path_count, rooted_count, rooted_gf, rooted_gf_with_order, rooted_profile, size_profile, star_count,
    subtree_count, total_gf, total_gf_with_ops, total_gf_with_order, SubtreeProfile, WeightMode,
};
pub use ring::{Monomial, Poly2, Ring};
pub use tree::{v, Tree, VertexId, WeightedTree};

/// A tree with integer weights.
pub type CountTree = WeightedTree<BigInt>;
/// A tree with bivariate polynomial weights.
pub type PolyTree = WeightedTree<Poly2>;
