//! Exact-arithmetic homology of finite simple digraphs.
//!
//! The library computes the path homology of a digraph together with the
//! primitive variant and the primitive cluster/tail/head homologies of paths
//! with fixed endpoint vertices, entirely over exact coefficient rings
//! (integers, rationals, prime fields). It also provides the digraph
//! constructions these theories are usually exercised on: box products and
//! n-cubes, cones, suspensions, directed suspensions, inverse digraphs, and
//! the cluster/tail/head subgraphs spanned by paths with fixed endpoints.
//!
//! The computational backbone is exact integer linear algebra: allowed paths
//! are enumerated per degree, the chain submodules are extracted as saturated
//! integer kernel lattices via Hermite normal form, and homology groups with
//! torsion come from Smith normal form. A separate fraction-free rational
//! pipeline cross-checks every Betti number produced by the primary one.

// Indexed loops over matrix dimensions are the house style here.
#![allow(clippy::needless_range_loop)]

pub mod chains;
pub mod crosscheck;
pub mod digraph;
pub mod homology;
pub mod linalg;
pub mod spaces;

pub use chains::{Chain, ChainError, ElemPath};
pub use digraph::{Digraph, DigraphError, DigraphMap};
pub use homology::{CoefficientRing, HomologyGroup, Theory, TheorySpec};
