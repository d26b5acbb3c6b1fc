//! Exact-arithmetic engine for the boson-fermion correspondence and its
//! categorification by symmetric group modules.
//!
//! Layers, bottom-up:
//! - [`rational`], [`linalg`]: exact scalars and sparse matrices;
//! - [`partition`]: partitions, tableaux, strips;
//! - [`symfunc`]: symmetric functions, Heisenberg and Bernstein operators;
//! - [`fock`]: fermionic and bosonic Fock spaces and the map between them;
//! - [`symrep`]: symmetric group modules, induction/restriction, Young idempotents;
//! - [`homalg`]: chain complexes, cones, totalization, Gaussian elimination, homology;
//! - [`catbernstein`]: categorical Bernstein and projector complexes and their checks.

pub mod catbernstein;
pub mod fock;
pub mod homalg;
pub mod linalg;
pub mod partition;
pub mod rational;
pub mod symfunc;
pub mod symrep;

pub use partition::Partition;
pub use rational::Q;
