//! Exact computer algebra for the free pre-Lie algebra on rooted trees.
//!
//! - [`tree`]: canonical rooted trees, labeled and heap-ordered trees.
//! - [`linear`]: rational linear combinations and tensors.
//! - [`prelie`], [`coalgebra`]: the grafting products and the NAP coproduct.
//! - [`rigidity`]: the operators `A_k`, `U_k` and the projector `e` onto primitives.
//! - [`presented`], [`reconstruct`]: algebras given by structure constants,
//!   their validation, and their reconstruction from primitives.
//! - [`operads`]: partial compositions on labeled trees.
//! - [`checks`]: exact identity suites.

pub mod algebra;
pub mod checks;
pub mod coalgebra;
pub mod error;
pub mod linalg;
pub mod linear;
pub mod operads;
pub mod perm;
pub mod prelie;
pub mod presented;
pub mod reconstruct;
pub mod rigidity;
pub mod tree;

pub use algebra::{FreePreLie, PreLieCoalgebra};
pub use error::{Error, Result};
pub use linear::{Element, LinComb, Rational, Tensor, TensorElement};
pub use perm::Permutation;
pub use tree::{parse_tree, HeapOrderedTree, Label, LabeledTree, RootedTree};
