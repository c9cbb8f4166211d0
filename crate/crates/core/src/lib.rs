//! Bi-Cayley graphs over finite abelian groups.
//!
//! The crate builds `BC(H, R, L, S)` graphs, computes their automorphism
//! groups with a partition-refinement search backed by a Schreier-Sims
//! stabilizer chain, and uses that machinery to study arc-transitivity,
//! regular coverings given by voltage assignments, and the BCI property of
//! bipartite (0-type) bi-Cayley graphs.
//!
//! Module map:
//!
//! * [`abelian`]: finite abelian groups as products of cyclic groups.
//! * [`graph`]: simple graphs, girth, bipartition, graph6.
//! * [`bicayley`]: the bi-Cayley construction and its canonical automorphisms.
//! * [`symmetry`]: permutations, permutation groups, automorphism search.
//! * [`voltage`]: voltage graphs, base circuits, the lifting test.
//! * [`bci`]: BCI decision by the normalizer/conjugacy criterion and by brute force.
//! * [`census`]: the concrete families and searches driven by the CLI.

pub mod abelian;
pub mod bci;
pub mod bicayley;
pub mod census;
pub mod error;
pub mod graph;
mod snf;
pub mod symmetry;
pub mod voltage;

pub use abelian::{AbelianGroup, GroupElement, Subgroup};
pub use bicayley::{BiCayleyGraph, BiCayleySpec};
pub use error::{Error, Result};
pub use graph::Graph;
pub use symmetry::{PermGroup, Permutation};
