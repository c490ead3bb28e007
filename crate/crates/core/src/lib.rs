//! Mod-2 homology of algebras over the Goodwillie derivatives of the identity.
//!
//! * [`gf2`]: bit-packed linear algebra over F₂ and chain complexes.
//! * [`partition`]: the pointed partition complex `P_n`, its homology and the
//!   induced symmetric-group action.
//! * [`trees`]: weighted leaf-labelled trees, grafting and the cooperad
//!   decomposition maps.
//! * [`qbar`]: the algebra R̄ of Q̄-operations and its CU normal forms.
//! * [`hall`]: basic products (Hall bases) and bracket reduction.
//! * [`freealg`]: bases and Poincaré series of free allowable R̄-ΣLie
//!   algebras, with the wedge-of-spheres cross-check.

pub mod error;
pub mod freealg;
pub mod gf2;
pub mod hall;
pub mod partition;
pub mod qbar;
pub mod trees;

pub use error::{Error, Result};

pub use freealg::{AlgebraBasisElement, Element, GradedDims};
pub use gf2::{BitMatrix, BitVector, ChainComplexF2, SparseMatrix};
pub use hall::{BasicProduct, BracketExpr, Letter};
pub use partition::{FlagChain, Partition, Permutation};
pub use qbar::{QbarElement, QbarMonomial};
pub use trees::{TreePoint, WeightedTree};
