//! Symmetric group representations and the Heisenberg category acting on them.
//!
//! - [`perm`]: permutations, group algebra elements, Young idempotents;
//! - [`module`]: explicit modules, induction/restriction, Frobenius characteristic;
//! - [`functor`]: words in `P`, `Q` with caps, cups, crossings and idempotent blocks;
//! - [`branching`]: the decompositions of products of `P^λ`, `Q^μ` as explicit maps.

pub mod branching;
pub mod functor;
pub mod module;
pub mod perm;

pub use functor::{p_lambda, q_lambda, Block, Elementary, Evaluator, FunctorTerm, Idem, Letter, RawOp, TermImage, Transform};
pub use module::{frobenius_char, induce_power, restrict_power, ModuleMap, RepModule, SerialModule};
pub use perm::{young_idempotent, GroupAlgebraElement, Perm};

use std::sync::Arc;

use crate::linalg::Matrix;
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("matrix does not commute with the group action")]
    NotIntertwiner,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("non-integral character: {0}")]
    NonIntegralCharacter(String),
}

pub fn trivial_module(n: usize) -> RepModule {
    RepModule::trivial(n)
}

pub fn sign_module(n: usize) -> RepModule {
    RepModule::sign(n)
}

pub fn regular_module(n: usize) -> Result<RepModule, RepError> {
    RepModule::regular(n)
}

/// `S_λ`, realized as `P^λ` applied to the trivial `S_0`-module.
pub fn specht_module(lambda: &Partition) -> Result<RepModule, RepError> {
    if lambda.size() > module::MAX_REGULAR_DEGREE {
        return Err(RepError::DegreeCap { degree: lambda.size(), cap: module::MAX_REGULAR_DEGREE });
    }
    Ok(p_lambda(lambda, &RepModule::trivial(0)).0)
}

pub fn induce(m: &RepModule) -> RepModule {
    m.induce()
}

pub fn restrict(m: &RepModule) -> RepModule {
    m.restrict()
}

fn map_from(ev: &mut Evaluator, word: &[Letter], ops: Vec<RawOp>, target: &[Letter]) -> ModuleMap {
    let src = ev.raw_module(word).expect("small module");
    let tgt = ev.raw_module(target).expect("small module");
    let (w, m) = ev.path_matrix(word, &ops).expect("valid path");
    debug_assert_eq!(w, target);
    ModuleMap { source: src, target: tgt, matrix: m }
}

/// `PQ(M) → M`, `g ⊗ v ↦ g·v`.
pub fn counit_pq(m: &Arc<RepModule>) -> ModuleMap {
    let mut ev = Evaluator::new(m.clone());
    map_from(&mut ev, &[Letter::P, Letter::Q], vec![RawOp::gen(Elementary::CapPQ, 0)], &[])
}

/// `M → QP(M)`, `v ↦ 1 ⊗ v`.
pub fn unit_qp(m: &Arc<RepModule>) -> ModuleMap {
    let mut ev = Evaluator::new(m.clone());
    map_from(&mut ev, &[], vec![RawOp::gen(Elementary::CupQP, 0)], &[Letter::Q, Letter::P])
}

/// `M → PQ(M)`, `v ↦ Σ_k c_k ⊗ c_k^{-1} v`.
pub fn unit_pq(m: &Arc<RepModule>) -> ModuleMap {
    let mut ev = Evaluator::new(m.clone());
    map_from(&mut ev, &[], vec![RawOp::gen(Elementary::CupPQ, 0)], &[Letter::P, Letter::Q])
}

/// `QP(M) → M`, projection onto the identity coset.
pub fn counit_qp(m: &Arc<RepModule>) -> ModuleMap {
    let mut ev = Evaluator::new(m.clone());
    map_from(&mut ev, &[Letter::Q, Letter::P], vec![RawOp::gen(Elementary::CapQP, 0)], &[])
}

/// Crossing of the two new strands on `PP(M)`: right multiplication by `s_{n+1}`.
pub fn crossing(m: &Arc<RepModule>) -> ModuleMap {
    let mut ev = Evaluator::new(m.clone());
    map_from(&mut ev, &[Letter::P, Letter::P], vec![RawOp::gen(Elementary::CrossPP, 0)], &[Letter::P, Letter::P])
}

/// Curl on one `P` strand: cup `QP` on its left, cross the two `P`s, cap. Vanishes.
pub fn curl(m: &Arc<RepModule>) -> ModuleMap {
    use Elementary::*;
    let mut ev = Evaluator::new(m.clone());
    let ops = vec![RawOp::gen(CupQP, 0), RawOp::gen(CrossPP, 1), RawOp::gen(CapQP, 0)];
    map_from(&mut ev, &[Letter::P], ops, &[Letter::P])
}

/// Whether a matrix is the zero map.
pub fn is_zero_map(m: &Matrix) -> bool {
    m.is_zero()
}
