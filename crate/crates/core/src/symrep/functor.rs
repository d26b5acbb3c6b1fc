//! Words in the induction functor `P` and restriction functor `Q`, the
//! elementary natural transformations between them (crossings, caps, cups,
//! strand permutations), and their evaluation on a fixed module.
//!
//! A word is read left to right as functor composition, so the rightmost
//! letter is applied first. Strands of a block of `b` letters `P` over a
//! module of degree `m` carry the letters `m+b, …, m+1` (left to right); a
//! permutation of those strands acts by right multiplication in
//! `k[S_{m+b}] ⊗ N`. Strands of a block of `b` letters `Q` carry the letters
//! `m−b+1, …, m` and act through the module itself.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::module::{coset_rep, induce_power, restrict_power, InducedLayout, RepModule};
use super::perm::{young_idempotent, GroupAlgebraElement, Perm};
use super::RepError;
use crate::linalg::Matrix;
use crate::partition::Partition;
use crate::rational::Q;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Letter {
    P,
    Q,
}

pub fn word_degree_shift(word: &[Letter]) -> i64 {
    word.iter().map(|l| if *l == Letter::P { 1 } else { -1 }).sum()
}

/// Generating 2-morphisms on two adjacent letters (or inserting two letters).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Elementary {
    /// `PP → PP`.
    CrossPP,
    /// `QQ → QQ`.
    CrossQQ,
    /// `QP → PQ`.
    CrossQP,
    /// `PQ → QP`.
    CrossPQ,
    /// `PQ → 1`, the action map `g ⊗ v ↦ g·v`.
    CapPQ,
    /// `QP → 1`, projection to the identity coset.
    CapQP,
    /// `1 → PQ`, `v ↦ Σ_k c_k ⊗ c_k^{-1} v`.
    CupPQ,
    /// `1 → QP`, `v ↦ 1 ⊗ v`.
    CupQP,
}

impl Elementary {
    pub fn source(&self) -> &'static [Letter] {
        use Letter::*;
        match self {
            Elementary::CrossPP => &[P, P],
            Elementary::CrossQQ => &[Q, Q],
            Elementary::CrossQP | Elementary::CapQP => &[Q, P],
            Elementary::CrossPQ | Elementary::CapPQ => &[P, Q],
            Elementary::CupPQ | Elementary::CupQP => &[],
        }
    }

    pub fn target(&self) -> &'static [Letter] {
        use Letter::*;
        match self {
            Elementary::CrossPP => &[P, P],
            Elementary::CrossQQ => &[Q, Q],
            Elementary::CrossQP | Elementary::CupPQ => &[P, Q],
            Elementary::CrossPQ | Elementary::CupQP => &[Q, P],
            Elementary::CapPQ | Elementary::CapQP => &[],
        }
    }
}

/// One step of a composite natural transformation on a raw word.
#[derive(Clone, Debug, PartialEq)]
pub enum RawOp {
    /// Elementary map on the letters starting at `pos` (inserting at `pos` for cups).
    Gen { gen: Elementary, pos: usize },
    /// Group algebra element acting on the `len` letters `P` starting at `pos`.
    PBlock { pos: usize, len: usize, elem: Arc<GroupAlgebraElement> },
    /// Group algebra element acting on the `len` letters `Q` starting at `pos`.
    QBlock { pos: usize, len: usize, elem: Arc<GroupAlgebraElement> },
}

impl RawOp {
    pub fn gen(gen: Elementary, pos: usize) -> RawOp {
        RawOp::Gen { gen, pos }
    }

    pub fn p_perm(pos: usize, p: Perm) -> RawOp {
        RawOp::PBlock { pos, len: p.degree(), elem: Arc::new(GroupAlgebraElement::from_perm(p)) }
    }

    pub fn q_perm(pos: usize, p: Perm) -> RawOp {
        RawOp::QBlock { pos, len: p.degree(), elem: Arc::new(GroupAlgebraElement::from_perm(p)) }
    }

    pub fn shifted(&self, offset: usize) -> RawOp {
        match self {
            RawOp::Gen { gen, pos } => RawOp::Gen { gen: *gen, pos: pos + offset },
            RawOp::PBlock { pos, len, elem } => RawOp::PBlock { pos: pos + offset, len: *len, elem: elem.clone() },
            RawOp::QBlock { pos, len, elem } => RawOp::QBlock { pos: pos + offset, len: *len, elem: elem.clone() },
        }
    }

    /// The word after this step, or an error if the letters do not match.
    pub fn apply_word(&self, word: &[Letter]) -> Result<Vec<Letter>, RepError> {
        let bad = || RepError::Shape(format!("{self:?} does not apply to {word:?}"));
        match self {
            RawOp::Gen { gen, pos } => {
                let src = gen.source();
                if *pos + src.len() > word.len() || &word[*pos..*pos + src.len()] != src {
                    return Err(bad());
                }
                let mut out = word[..*pos].to_vec();
                out.extend_from_slice(gen.target());
                out.extend_from_slice(&word[*pos + src.len()..]);
                Ok(out)
            }
            RawOp::PBlock { pos, len, elem } | RawOp::QBlock { pos, len, elem } => {
                let letter = if matches!(self, RawOp::PBlock { .. }) { Letter::P } else { Letter::Q };
                if elem.degree() != *len || *pos + len > word.len() || word[*pos..*pos + len].iter().any(|l| *l != letter) {
                    return Err(bad());
                }
                Ok(word.to_vec())
            }
        }
    }
}

/// A rational combination of composites of [`RawOp`]s between two raw words.
#[derive(Clone, Debug, PartialEq)]
pub struct Transform {
    pub source: Vec<Letter>,
    pub target: Vec<Letter>,
    pub paths: Vec<(Q, Vec<RawOp>)>,
}

impl Transform {
    pub fn identity(word: &[Letter]) -> Transform {
        Transform { source: word.to_vec(), target: word.to_vec(), paths: vec![(Q::one(), vec![])] }
    }

    pub fn zero(source: &[Letter], target: &[Letter]) -> Transform {
        Transform { source: source.to_vec(), target: target.to_vec(), paths: vec![] }
    }

    /// The composite of `ops` (first op first) starting at `source`.
    pub fn path(source: &[Letter], ops: Vec<RawOp>) -> Result<Transform, RepError> {
        let mut w = source.to_vec();
        for op in &ops {
            w = op.apply_word(&w)?;
        }
        Ok(Transform { source: source.to_vec(), target: w, paths: vec![(Q::one(), ops)] })
    }

    pub fn is_zero(&self) -> bool {
        self.paths.is_empty()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Transform) -> Transform {
        assert_eq!(self.target, other.source, "composing mismatched transforms");
        let mut paths = Vec::new();
        for (a, p) in &self.paths {
            for (b, q) in &other.paths {
                let mut ops = p.clone();
                ops.extend(q.iter().cloned());
                paths.push((a * b, ops));
            }
        }
        Transform { source: self.source.clone(), target: other.target.clone(), paths }
    }

    pub fn add(&self, other: &Transform) -> Transform {
        assert_eq!((&self.source, &self.target), (&other.source, &other.target));
        let mut paths = self.paths.clone();
        paths.extend(other.paths.iter().cloned());
        Transform { source: self.source.clone(), target: self.target.clone(), paths }
    }

    pub fn scale(&self, c: &Q) -> Transform {
        let paths = if c.is_zero() { vec![] } else { self.paths.iter().map(|(a, p)| (a * c, p.clone())).collect() };
        Transform { source: self.source.clone(), target: self.target.clone(), paths }
    }

    /// `1_left ⊗ self ⊗ 1_right`.
    pub fn whisker(&self, left: &[Letter], right: &[Letter]) -> Transform {
        let wrap = |w: &[Letter]| [left, w, right].concat();
        Transform {
            source: wrap(&self.source),
            target: wrap(&self.target),
            paths: self.paths.iter().map(|(c, p)| (c.clone(), p.iter().map(|op| op.shifted(left.len())).collect())).collect(),
        }
    }
}

/// Idempotent cutting down a block.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Idem {
    None,
    /// Young idempotent `e_λ` on a block of equal letters.
    Young(Partition),
    /// `(1/k!) Σ_σ sgn(σ) σ ⊗ σ̃` on `P^k Q^k`, `σ̃` the mirror of `σ`; image `⊕_{λ⊢k} P^λ Q^{λ^t}`.
    DiagonalSign,
}

/// A block of equal letters (or `P^len Q^len` for [`Idem::DiagonalSign`]) cut down by an idempotent.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Block {
    pub letter: Letter,
    pub len: usize,
    pub idem: Idem,
}

impl Block {
    pub fn letters(&self) -> Vec<Letter> {
        match self.idem {
            Idem::DiagonalSign => [vec![Letter::P; self.len], vec![Letter::Q; self.len]].concat(),
            _ => vec![self.letter; self.len],
        }
    }
}

/// Mirror of a strand permutation: strand `p` of `P^k` faces strand `k−1−p` of `Q^k`.
pub fn mirror(sigma: &Perm) -> Perm {
    let k = sigma.degree();
    Perm::from_images((0..k).map(|p| k - 1 - sigma.apply(k - 1 - p)).collect()).unwrap()
}

/// The diagonal sign idempotent on `P^k Q^k` as a transform.
pub fn diagonal_sign(k: usize) -> Transform {
    let word = [vec![Letter::P; k], vec![Letter::Q; k]].concat();
    let norm = Q::from_int((1..=k as i64).product()).recip();
    let paths = Perm::all(k)
        .into_iter()
        .map(|s| {
            let c = &Q::sign(s.inversions() as i64) * &norm;
            (c, vec![RawOp::p_perm(0, s.clone()), RawOp::q_perm(k, mirror(&s))])
        })
        .collect();
    Transform { source: word.clone(), target: word, paths }
}

/// An object `X_1^{λ_1} X_2^{λ_2} ⋯` (leftmost outermost) of the Heisenberg category.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FunctorTerm {
    pub blocks: Vec<Block>,
}

impl FunctorTerm {
    pub fn identity() -> FunctorTerm {
        FunctorTerm { blocks: vec![] }
    }

    /// `P^λ`; the empty partition gives the identity.
    pub fn p(lambda: &Partition) -> FunctorTerm {
        FunctorTerm::identity().then_block(Letter::P, lambda)
    }

    pub fn q(lambda: &Partition) -> FunctorTerm {
        FunctorTerm::identity().then_block(Letter::Q, lambda)
    }

    /// Raw letters, no idempotent.
    pub fn raw(word: &[Letter]) -> FunctorTerm {
        FunctorTerm { blocks: word.iter().map(|&letter| Block { letter, len: 1, idem: Idem::None }).collect() }
    }

    /// Appends (innermost) a block `X^λ`.
    pub fn then_block(mut self, letter: Letter, lambda: &Partition) -> FunctorTerm {
        if lambda.size() > 0 {
            let idem = if lambda.size() > 1 { Idem::Young(lambda.clone()) } else { Idem::None };
            self.blocks.push(Block { letter, len: lambda.size(), idem });
        }
        self
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &FunctorTerm) -> FunctorTerm {
        let mut blocks = self.blocks.clone();
        blocks.extend(inner.blocks.iter().cloned());
        FunctorTerm { blocks }
    }

    /// `⊕_{λ⊢k} P^λ Q^{λ^t}`, as one diagonal-sign block.
    pub fn sigma(k: usize) -> FunctorTerm {
        if k == 0 {
            return FunctorTerm::identity();
        }
        FunctorTerm { blocks: vec![Block { letter: Letter::P, len: k, idem: Idem::DiagonalSign }] }
    }

    pub fn raw_word(&self) -> Vec<Letter> {
        self.blocks.iter().flat_map(|b| b.letters()).collect()
    }

    pub fn raw_len(&self) -> usize {
        self.blocks.iter().map(|b| b.letters().len()).sum()
    }

    pub fn label(&self) -> String {
        if self.blocks.is_empty() {
            return "1".into();
        }
        self.blocks
            .iter()
            .map(|b| {
                let l = if b.letter == Letter::P { "P" } else { "Q" };
                match &b.idem {
                    Idem::Young(p) => format!("{l}^({p})"),
                    Idem::DiagonalSign => format!("Sigma_{}", b.len),
                    Idem::None if b.len == 1 => l.to_string(),
                    Idem::None => format!("{l}^{}", b.len),
                }
            })
            .collect::<Vec<_>>()
            .join("")
    }
}

/// Strand permutation on a `P`-block, as a permutation of `S_{m+len}` acting on the right.
fn p_strand_letter_perm(sigma: &Perm, m: usize) -> Perm {
    let b = sigma.degree();
    let w: Vec<usize> = (0..b).map(|p| b - 1 - sigma.apply(b - 1 - p)).collect();
    Perm::from_images(w).unwrap().embed(m + b, m)
}

/// Action of `x ∈ k[S_len]` on the strands of `Ind^len N`.
pub fn p_block_matrix(n_mod: &RepModule, len: usize, x: &GroupAlgebraElement) -> Matrix {
    let Some(m) = n_mod.group_degree().filter(|_| !n_mod.is_zero()) else {
        return Matrix::zeros(0, 0);
    };
    let layout = InducedLayout { m, k: len };
    let d = layout.blocks() * n_mod.dim();
    combine(d, x.terms().iter().map(|(sigma, c)| (c, layout.right(n_mod, &p_strand_letter_perm(&sigma.inverse(), m)))))
}

/// `Σ c·A` over square `d × d` terms, accumulated in one pass.
fn combine<'a>(d: usize, terms: impl Iterator<Item = (&'a Q, Matrix)>) -> Matrix {
    let mut entries = Vec::new();
    for (c, a) in terms {
        entries.extend(a.entries().map(|(i, j, v)| (i, j, c * v)));
    }
    Matrix::from_triplets(d, d, entries)
}

/// Action of `x ∈ k[S_len]` on the strands of `Res^len N`.
pub fn q_block_matrix(n_mod: &RepModule, len: usize, x: &GroupAlgebraElement) -> Matrix {
    let m = n_mod.degree();
    if m < len as i64 || n_mod.is_zero() {
        return Matrix::zeros(0, 0);
    }
    let m = m as usize;
    combine(n_mod.dim(), x.terms().iter().map(|(sigma, c)| (c, n_mod.act(&sigma.embed(m, m - len)))))
}

/// Idempotent image of a single block over `N`: `(X^λ N, incl, proj)`.
pub fn block_image(n_mod: &RepModule, letter: Letter, lambda: &Partition) -> (RepModule, Matrix, Matrix) {
    let k = lambda.size();
    let raw = match letter {
        Letter::P => induce_power(n_mod, k),
        Letter::Q => restrict_power(n_mod, k),
    };
    if k <= 1 || raw.is_zero() {
        let d = raw.dim();
        return (raw, Matrix::identity(d), Matrix::identity(d));
    }
    let e = young_idempotent(lambda);
    let mat = match letter {
        Letter::P => p_block_matrix(n_mod, k, &e),
        Letter::Q => q_block_matrix(n_mod, k, &e),
    };
    raw.image(&mat)
}

/// `P^λ(M)` with its inclusion into and projection from `Ind^{|λ|} M`.
pub fn p_lambda(lambda: &Partition, m: &RepModule) -> (RepModule, Matrix, Matrix) {
    block_image(m, Letter::P, lambda)
}

/// `Q^λ(M)` with its inclusion into and projection from `Res^{|λ|} M`.
pub fn q_lambda(lambda: &Partition, m: &RepModule) -> (RepModule, Matrix, Matrix) {
    block_image(m, Letter::Q, lambda)
}

/// Evaluated object: module with inclusion into / projection from the raw word module.
#[derive(Clone, Debug)]
pub struct TermImage {
    pub module: Arc<RepModule>,
    pub incl: Matrix,
    pub proj: Matrix,
}

/// `I ⊗ f` through the prefix letters, where `inner_degree` is the degree `f` lives in.
pub fn lift(prefix: &[Letter], inner_degree: i64, f: Matrix) -> Matrix {
    let mut f = f;
    let mut deg = inner_degree;
    for l in prefix.iter().rev() {
        match l {
            Letter::P => {
                f = f.kron_identity_left((deg + 1).max(0) as usize);
                deg += 1;
            }
            Letter::Q => {
                deg -= 1;
                if deg < 0 {
                    f = Matrix::zeros(0, 0);
                }
            }
        }
    }
    f
}

/// Evaluates words, terms and transforms on one base module, with caches.
pub struct Evaluator {
    base: Arc<RepModule>,
    max_dim: usize,
    raw: HashMap<Vec<Letter>, Arc<RepModule>>,
    terms: HashMap<FunctorTerm, Arc<TermImage>>,
    local: HashMap<(Elementary, Vec<Letter>), Matrix>,
}

/// Default bound on the dimension of any raw module built during evaluation.
pub const DEFAULT_MAX_DIM: usize = 20_000;

impl Evaluator {
    pub fn new(base: Arc<RepModule>) -> Evaluator {
        Evaluator::with_cap(base, DEFAULT_MAX_DIM)
    }

    pub fn with_cap(base: Arc<RepModule>, max_dim: usize) -> Evaluator {
        Evaluator { base, max_dim, raw: HashMap::new(), terms: HashMap::new(), local: HashMap::new() }
    }

    pub fn base(&self) -> &Arc<RepModule> {
        &self.base
    }

    pub fn degree_of(&self, word: &[Letter]) -> i64 {
        self.base.degree() + word_degree_shift(word)
    }

    fn check_dim(&self, dim: usize) -> Result<(), RepError> {
        if dim > self.max_dim {
            Err(RepError::DimensionCap { dim, cap: self.max_dim })
        } else {
            Ok(())
        }
    }

    /// The module `w(M)` with no idempotents.
    pub fn raw_module(&mut self, word: &[Letter]) -> Result<Arc<RepModule>, RepError> {
        if word.is_empty() {
            return Ok(self.base.clone());
        }
        if let Some(m) = self.raw.get(word) {
            return Ok(m.clone());
        }
        let inner = self.raw_module(&word[1..])?;
        if word[0] == Letter::P {
            let m = inner.group_degree().map_or(0, |d| d + 1);
            self.check_dim((m * inner.dim()).max(inner.dim()))?;
        }
        let out = Arc::new(match word[0] {
            Letter::P => induce_power(&inner, 1),
            Letter::Q => restrict_power(&inner, 1),
        });
        self.raw.insert(word.to_vec(), out.clone());
        Ok(out)
    }

    fn local_elementary(&mut self, gen: Elementary, suffix: &[Letter]) -> Result<Matrix, RepError> {
        let key = (gen, suffix.to_vec());
        if let Some(m) = self.local.get(&key) {
            return Ok(m.clone());
        }
        let n_mod = self.raw_module(suffix)?;
        let d = n_mod.dim();
        let m = self.degree_of(suffix);
        let out = match gen {
            Elementary::CrossPP => {
                if d == 0 || m < 0 {
                    Matrix::zeros(0, 0)
                } else {
                    let m = m as usize;
                    InducedLayout { m, k: 2 }.right(&n_mod, &Perm::s(m + 2, m + 1))
                }
            }
            Elementary::CrossQQ => {
                if d == 0 || m < 2 {
                    Matrix::zeros(0, 0)
                } else {
                    let m = m as usize;
                    n_mod.act(&Perm::s(m, m - 1))
                }
            }
            Elementary::CapPQ | Elementary::CupPQ => {
                if d == 0 || m < 1 {
                    if gen == Elementary::CapPQ {
                        Matrix::zeros(d, 0)
                    } else {
                        Matrix::zeros(0, d)
                    }
                } else {
                    let m = m as usize;
                    let blocks: Vec<Matrix> = (0..m)
                        .map(|j| {
                            let c = coset_rep(m, j);
                            if gen == Elementary::CapPQ {
                                n_mod.act(&c)
                            } else {
                                n_mod.act(&c.inverse())
                            }
                        })
                        .collect();
                    if gen == Elementary::CapPQ {
                        Matrix::hstack(&blocks)
                    } else {
                        Matrix::vstack(&blocks)
                    }
                }
            }
            Elementary::CapQP | Elementary::CupQP => {
                if d == 0 || m < 0 {
                    Matrix::zeros(0, 0)
                } else {
                    let m = m as usize;
                    let proj = Matrix::from_triplets(d, (m + 1) * d, (0..d).map(|i| (i, m * d + i, Q::one())));
                    if gen == Elementary::CapQP {
                        proj
                    } else {
                        proj.transpose()
                    }
                }
            }
            Elementary::CrossQP | Elementary::CrossPQ => {
                use Elementary::*;
                let ops = if gen == CrossQP {
                    vec![RawOp::gen(CupPQ, 2), RawOp::gen(CrossPP, 1), RawOp::gen(CapQP, 0)]
                } else {
                    vec![RawOp::gen(CupQP, 0), RawOp::gen(CrossPP, 1), RawOp::gen(CapPQ, 2)]
                };
                let mut sub = Evaluator::with_cap(n_mod.clone(), self.max_dim);
                sub.path_matrix(gen.source(), &ops)?.1
            }
        };
        self.local.insert(key, out.clone());
        Ok(out)
    }

    /// Matrix of one step on `word(M)`, and the resulting word.
    pub fn op_matrix(&mut self, word: &[Letter], op: &RawOp) -> Result<(Vec<Letter>, Matrix), RepError> {
        let new_word = op.apply_word(word)?;
        let (pos, local) = match op {
            RawOp::Gen { gen, pos } => {
                let n = gen.source().len();
                (*pos, self.local_elementary(*gen, &word[pos + n..])?)
            }
            RawOp::PBlock { pos, len, elem } => {
                let n_mod = self.raw_module(&word[pos + len..])?;
                (*pos, p_block_matrix(&n_mod, *len, elem))
            }
            RawOp::QBlock { pos, len, elem } => {
                let n_mod = self.raw_module(&word[pos + len..])?;
                (*pos, q_block_matrix(&n_mod, *len, elem))
            }
        };
        // Every step preserves the degree shift of the letters it touches.
        let inner_deg = self.degree_of(&word[pos..]);
        Ok((new_word, lift(&word[..pos], inner_deg, local)))
    }

    /// Composite of `ops` applied in order to `word(M)`.
    pub fn path_matrix(&mut self, word: &[Letter], ops: &[RawOp]) -> Result<(Vec<Letter>, Matrix), RepError> {
        let mut w = word.to_vec();
        let mut acc = Matrix::identity(self.raw_module(word)?.dim());
        for op in ops {
            let (w2, m) = self.op_matrix(&w, op)?;
            acc = m.mul(&acc);
            w = w2;
        }
        Ok((w, acc))
    }

    pub fn transform_matrix(&mut self, t: &Transform) -> Result<Matrix, RepError> {
        let rows = self.raw_module(&t.target)?.dim();
        let cols = self.raw_module(&t.source)?.dim();
        let mut out = Matrix::zeros(rows, cols);
        for (c, ops) in &t.paths {
            let (w, m) = self.path_matrix(&t.source, ops)?;
            debug_assert_eq!(w, t.target);
            out = out.axpy(c, &m);
        }
        Ok(out)
    }

    /// `F(M)` as an idempotent image inside the raw word module.
    pub fn term(&mut self, f: &FunctorTerm) -> Result<Arc<TermImage>, RepError> {
        if let Some(t) = self.terms.get(f) {
            return Ok(t.clone());
        }
        let mut cur = self.base.clone();
        let d0 = cur.dim();
        let mut incl = Matrix::identity(d0);
        let mut proj = Matrix::identity(d0);
        for b in f.blocks.iter().rev() {
            let letters = b.letters();
            if b.idem == Idem::DiagonalSign {
                let m = cur.group_degree().unwrap_or(0);
                let blocks: usize = (m.saturating_sub(b.len) + 1..=m).product();
                self.check_dim(blocks * cur.dim())?;
            } else if b.letter == Letter::P {
                let m = cur.group_degree().unwrap_or(0);
                let blocks: usize = (m + 1..=m + b.len).product();
                self.check_dim(blocks * cur.dim())?;
            }
            let deg = cur.degree();
            let (img, c, r) = match &b.idem {
                Idem::Young(l) => block_image(&cur, b.letter, l),
                Idem::DiagonalSign => {
                    let mut local = Evaluator::with_cap(cur.clone(), self.max_dim);
                    let raw = local.raw_module(&letters)?;
                    let e = local.transform_matrix(&diagonal_sign(b.len))?;
                    raw.image(&e)
                }
                Idem::None => {
                    let raw = match b.letter {
                        Letter::P => induce_power(&cur, b.len),
                        Letter::Q => restrict_power(&cur, b.len),
                    };
                    let d = raw.dim();
                    (raw, Matrix::identity(d), Matrix::identity(d))
                }
            };
            incl = lift(&letters, deg, incl).mul(&c);
            proj = r.mul(&lift(&letters, deg, proj));
            cur = Arc::new(img);
        }
        let t = Arc::new(TermImage { module: cur, incl, proj });
        self.terms.insert(f.clone(), t.clone());
        Ok(t)
    }

    /// `proj_G ∘ T ∘ incl_F` for a transform `T` between the raw words of `F` and `G`.
    pub fn component(&mut self, f: &FunctorTerm, g: &FunctorTerm, t: &Transform) -> Result<Matrix, RepError> {
        debug_assert_eq!(t.source, f.raw_word());
        debug_assert_eq!(t.target, g.raw_word());
        let tf = self.term(f)?;
        let tg = self.term(g)?;
        if t.is_zero() {
            return Ok(Matrix::zeros(tg.module.dim(), tf.module.dim()));
        }
        let m = self.transform_matrix(t)?;
        Ok(tg.proj.mul(&m).mul(&tf.incl))
    }
}

/// `F(f)` for a module map `f: source(M) → target(M')` between the bases of two evaluators.
pub fn term_on_map(term: &FunctorTerm, src: &mut Evaluator, tgt: &mut Evaluator, f: &Matrix) -> Result<Matrix, RepError> {
    assert_eq!(src.base().degree(), tgt.base().degree(), "map between different degrees");
    let a = src.term(term)?;
    let b = tgt.term(term)?;
    if a.module.is_zero() || b.module.is_zero() {
        return Ok(Matrix::zeros(b.module.dim(), a.module.dim()));
    }
    let lifted = lift(&term.raw_word(), src.base().degree(), f.clone());
    Ok(b.proj.mul(&lifted).mul(&a.incl))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symrep::module::frobenius_char;
    use crate::symfunc::SymPoly;
    use Elementary::*;
    use Letter::*;

    fn ev(m: RepModule) -> Evaluator {
        Evaluator::new(Arc::new(m))
    }

    #[test]
    fn crossing_is_involution_and_braid() {
        let mut e = ev(RepModule::trivial(0));
        let (_, x) = e.path_matrix(&[P, P, P], &[RawOp::gen(CrossPP, 0)]).unwrap();
        let (_, y) = e.path_matrix(&[P, P, P], &[RawOp::gen(CrossPP, 1)]).unwrap();
        assert!(x.mul(&x).is_identity());
        assert_eq!(x.mul(&y).mul(&x), y.mul(&x).mul(&y));
        let m = e.raw_module(&[P, P, P]).unwrap();
        assert!(m.is_intertwiner(&m, &x));
    }

    #[test]
    fn bubble_and_curl() {
        for base in [RepModule::trivial(1), RepModule::regular(2).unwrap(), RepModule::regular(3).unwrap()] {
            let mut e = ev(base);
            let (_, b) = e.path_matrix(&[], &[RawOp::gen(CupQP, 0), RawOp::gen(CapQP, 0)]).unwrap();
            assert!(b.is_identity());
            let (_, c) = e
                .path_matrix(&[P], &[RawOp::gen(CupQP, 0), RawOp::gen(CrossPP, 1), RawOp::gen(CapQP, 0)])
                .unwrap();
            assert!(c.is_zero());
        }
    }

    #[test]
    fn mixed_crossings_split_qp() {
        for base in [RepModule::trivial(0), RepModule::trivial(2), RepModule::regular(3).unwrap()] {
            let mut e = ev(base);
            let (_, a) = e.path_matrix(&[P, Q], &[RawOp::gen(CrossPQ, 0), RawOp::gen(CrossQP, 0)]).unwrap();
            assert!(a.is_identity(), "PQ → QP → PQ");
            let (_, b) = e.path_matrix(&[Q, P], &[RawOp::gen(CrossQP, 0), RawOp::gen(CrossPQ, 0)]).unwrap();
            let (_, c) = e.path_matrix(&[Q, P], &[RawOp::gen(CapQP, 0), RawOp::gen(CupQP, 0)]).unwrap();
            assert!(b.add(&c).is_identity(), "QP = PQ ⊕ 1");
        }
    }

    #[test]
    fn p_lambda_images() {
        let (m, i, p) = p_lambda(&Partition::row(2), &RepModule::trivial(0));
        assert_eq!(m.dim(), 1);
        assert!(p.mul(&i).is_identity());
        assert_eq!(frobenius_char(&m).unwrap(), SymPoly::h(2));
        for l in crate::partition::enumerate_partitions(4) {
            let (s, _, _) = p_lambda(&l, &RepModule::trivial(0));
            assert_eq!(frobenius_char(&s).unwrap(), SymPoly::schur(l.clone()));
        }
        let s21 = p_lambda(&"2,1".parse().unwrap(), &RepModule::trivial(0)).0;
        let (q, _, _) = q_lambda(&Partition::column(2), &s21);
        assert_eq!(q.dim(), 1);
    }
}

#[cfg(test)]
mod sigma_tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    #[test]
    fn diagonal_sign_block_splits_by_shape() {
        for base in [RepModule::trivial(2), RepModule::regular(3).unwrap()] {
            let mut ev = Evaluator::new(Arc::new(base));
            for k in 1..=3 {
                let got = ev.term(&FunctorTerm::sigma(k)).unwrap().module.dim();
                let want: usize = enumerate_partitions(k)
                    .iter()
                    .map(|l| ev.term(&FunctorTerm::p(l).then_block(Letter::Q, &l.conjugate())).unwrap().module.dim())
                    .sum();
                assert_eq!(got, want, "k={k}");
            }
            for k in 2..=3 {
                let cap = |j: usize| Transform::path(&[vec![Letter::P; j], vec![Letter::Q; j]].concat(), vec![RawOp::gen(Elementary::CapPQ, j - 1)]).unwrap();
                let d1 = ev.component(&FunctorTerm::sigma(k), &FunctorTerm::sigma(k - 1), &cap(k)).unwrap();
                let d2 = ev.component(&FunctorTerm::sigma(k - 1), &FunctorTerm::sigma(k - 2), &cap(k - 1)).unwrap();
                assert!(d2.mul(&d1).is_zero(), "k={k}");
                assert_eq!(d1.is_zero(), ev.base().degree() < k as i64, "k={k}");
            }
        }
    }
}
