//! Explicit modules over `k[S_n]` and intertwiners between them.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use super::perm::{GroupAlgebraElement, Perm};
use super::RepError;
use crate::linalg::{DenseMatrix, Matrix};
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::Q;
use crate::symfunc::{Basis, SymPoly};

/// Largest `n` for which regular modules are built.
pub const MAX_REGULAR_DEGREE: usize = 9;

/// A representation of `S_n` given by the matrices of `s_1, …, s_{n−1}`.
///
/// Negative degrees occur only for zero modules (restriction below `S_0`).
pub struct RepModule {
    degree: i64,
    dim: usize,
    gens: Vec<Matrix>,
    act_cache: Mutex<HashMap<Perm, Matrix>>,
}

impl Clone for RepModule {
    fn clone(&self) -> Self {
        RepModule { degree: self.degree, dim: self.dim, gens: self.gens.clone(), act_cache: Mutex::default() }
    }
}

impl PartialEq for RepModule {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.dim == other.dim && self.gens == other.gens
    }
}

impl Eq for RepModule {}

impl std::fmt::Debug for RepModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RepModule(S_{}, dim {})", self.degree, self.dim)
    }
}

impl RepModule {
    /// Checks shapes; the Coxeter relations are checked by [`check_relations`](Self::check_relations).
    pub fn new(degree: i64, dim: usize, gens: Vec<Matrix>) -> Result<RepModule, RepError> {
        let expected = if degree >= 1 { degree as usize - 1 } else { 0 };
        if gens.len() != expected || gens.iter().any(|g| g.nrows() != dim || g.ncols() != dim) {
            return Err(RepError::Shape(format!("S_{degree} module of dim {dim} needs {expected} square generators")));
        }
        if degree < 0 && dim != 0 {
            return Err(RepError::Shape("negative degree requires the zero module".into()));
        }
        Ok(RepModule { degree, dim, gens, act_cache: Mutex::default() })
    }

    pub(crate) fn new_unchecked(degree: i64, dim: usize, gens: Vec<Matrix>) -> RepModule {
        RepModule { degree, dim, gens, act_cache: Mutex::default() }
    }

    pub fn zero(degree: i64) -> RepModule {
        let k = if degree >= 1 { degree as usize - 1 } else { 0 };
        RepModule::new_unchecked(degree, 0, vec![Matrix::zeros(0, 0); k])
    }

    pub fn trivial(n: usize) -> RepModule {
        RepModule::new_unchecked(n as i64, 1, vec![Matrix::identity(1); n.saturating_sub(1)])
    }

    pub fn sign(n: usize) -> RepModule {
        RepModule::new_unchecked(n as i64, 1, vec![Matrix::scalar(1, &-Q::one()); n.saturating_sub(1)])
    }

    /// `k[S_n]`, realized as `Ind^n` of the trivial `S_0`-module (basis: coset words).
    pub fn regular(n: usize) -> Result<RepModule, RepError> {
        if n > MAX_REGULAR_DEGREE {
            return Err(RepError::DegreeCap { degree: n, cap: MAX_REGULAR_DEGREE });
        }
        Ok(induce_power(&RepModule::trivial(0), n))
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// The degree as a group index; zero modules of negative degree report `None`.
    pub fn group_degree(&self) -> Option<usize> {
        (self.degree >= 0).then_some(self.degree as usize)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    /// Matrix of `s_i` (1-based).
    pub fn generator(&self, i: usize) -> &Matrix {
        &self.gens[i - 1]
    }

    /// `ρ(g)`, built by peeling right descents and memoized.
    pub fn act(&self, g: &Perm) -> Matrix {
        if self.dim == 0 {
            return Matrix::zeros(0, 0);
        }
        assert_eq!(g.degree() as i64, self.degree, "permutation degree differs from module degree");
        let mut chain = Vec::new();
        let mut cur = g.clone();
        let base = loop {
            if cur.is_identity() {
                break Matrix::identity(self.dim);
            }
            if let Some(m) = self.act_cache.lock().unwrap().get(&cur) {
                break m.clone();
            }
            let i = cur.right_descent().unwrap();
            chain.push((cur.clone(), i));
            cur = cur.times_s(i);
        };
        let mut m = base;
        for (p, i) in chain.into_iter().rev() {
            m = m.mul(&self.gens[i - 1]);
            self.act_cache.lock().unwrap().insert(p, m.clone());
        }
        m
    }

    /// `Σ c_g ρ(g)`.
    pub fn act_element(&self, x: &GroupAlgebraElement) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (p, c) in x.terms() {
            out = out.axpy(c, &self.act(p));
        }
        out
    }

    pub fn character(&self, g: &Perm) -> Q {
        self.act(g).trace()
    }

    /// Exact check of `s_i² = 1`, braid and far-commutation relations.
    pub fn check_relations(&self) -> bool {
        let id = Matrix::identity(self.dim);
        let k = self.gens.len();
        for i in 0..k {
            let a = &self.gens[i];
            if a.mul(a) != id {
                return false;
            }
            for j in i + 1..k {
                let b = &self.gens[j];
                let ok = if j == i + 1 { a.mul(b).mul(a) == b.mul(a).mul(b) } else { a.mul(b) == b.mul(a) };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `f: self → target` commutes with every generator.
    pub fn is_intertwiner(&self, target: &RepModule, f: &Matrix) -> bool {
        if f.nrows() != target.dim || f.ncols() != self.dim {
            return false;
        }
        if self.dim == 0 || target.dim == 0 {
            return true;
        }
        self.degree == target.degree && self.gens.iter().zip(&target.gens).all(|(a, b)| f.mul(a) == b.mul(f))
    }

    /// Submodule cut out by an idempotent `E` commuting with the action:
    /// returns `(image, incl, proj)` with `proj·incl = 1` and `incl·proj = E`.
    pub fn image(&self, e: &Matrix) -> (RepModule, Matrix, Matrix) {
        let (c, r) = e.rank_factorization();
        let gens = self.gens.iter().map(|g| r.mul(g).mul(&c)).collect();
        (RepModule::new_unchecked(self.degree, c.ncols(), gens), c, r)
    }

    /// Transport along a change of basis `incl`/`proj` onto a complement-free subspace.
    pub fn subquotient(&self, incl: &Matrix, proj: &Matrix) -> RepModule {
        let gens = self.gens.iter().map(|g| proj.mul(g).mul(incl)).collect();
        RepModule::new_unchecked(self.degree, incl.ncols(), gens)
    }

    pub fn direct_sum(degree: i64, parts: &[&RepModule]) -> RepModule {
        let dim = parts.iter().map(|m| m.dim).sum();
        let k = if degree >= 1 { degree as usize - 1 } else { 0 };
        let live: Vec<&&RepModule> = parts.iter().filter(|m| m.dim > 0).collect();
        let gens = (0..k)
            .map(|i| Matrix::block_diag(&live.iter().map(|m| m.gens[i].clone()).collect::<Vec<_>>()))
            .map(|g| if dim == 0 { Matrix::zeros(0, 0) } else { g })
            .collect();
        RepModule::new_unchecked(degree, dim, gens)
    }

    pub fn restrict(&self) -> RepModule {
        restrict_power(self, 1)
    }

    pub fn induce(&self) -> RepModule {
        induce_power(self, 1)
    }

    pub fn to_serial(&self) -> SerialModule {
        SerialModule { degree: self.degree, dim: self.dim, generators: self.gens.iter().map(DenseMatrix::from).collect() }
    }

    pub fn from_serial(s: &SerialModule) -> Result<RepModule, RepError> {
        RepModule::new(s.degree, s.dim, s.generators.iter().map(Matrix::from).collect())
    }
}

/// JSON form of a module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerialModule {
    pub degree: i64,
    pub dim: usize,
    pub generators: Vec<DenseMatrix>,
}

/// An intertwiner between two modules of the same degree.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: Arc<RepModule>,
    pub target: Arc<RepModule>,
    pub matrix: Matrix,
}

impl ModuleMap {
    /// Fails unless `matrix` commutes with the actions.
    pub fn new(source: Arc<RepModule>, target: Arc<RepModule>, matrix: Matrix) -> Result<ModuleMap, RepError> {
        if !source.is_intertwiner(&target, &matrix) {
            return Err(RepError::NotIntertwiner);
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub fn identity(m: Arc<RepModule>) -> ModuleMap {
        let d = m.dim();
        ModuleMap { source: m.clone(), target: m, matrix: Matrix::identity(d) }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { source: other.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn is_intertwiner(&self) -> bool {
        self.source.is_intertwiner(&self.target, &self.matrix)
    }
}

/// `0`-based coset representative of `S_n / S_{n−1}` sending `n−1 ↦ j`:
/// `i ↦ i+1` on `j..n−1`, identity below `j`. `j = n−1` is the identity coset.
pub fn coset_rep(n: usize, j: usize) -> Perm {
    let mut v: Vec<usize> = (0..n).collect();
    v[n - 1] = j;
    for (i, slot) in v.iter_mut().enumerate().take(n - 1).skip(j) {
        *slot = i + 1;
    }
    Perm::from_images(v).unwrap()
}

/// Block layout of `Ind^k N` for `N` of degree `m`: a basis vector is
/// `C(J) ⊗ v` with `C(J) = c_{J_k} c_{J_{k−1}} ⋯ c_{J_1}` and `J_k` most significant.
#[derive(Clone, Copy, Debug)]
pub struct InducedLayout {
    pub m: usize,
    pub k: usize,
}

impl InducedLayout {
    pub fn blocks(&self) -> usize {
        (self.m + 1..=self.m + self.k).product()
    }

    pub fn rep(&self, mut idx: usize) -> Perm {
        let n = self.m + self.k;
        let mut js = Vec::with_capacity(self.k);
        for t in 1..=self.k {
            js.push(idx % (self.m + t));
            idx /= self.m + t;
        }
        let mut g = Perm::identity(n);
        for t in (1..=self.k).rev() {
            g = g.compose(&coset_rep(self.m + t, js[t - 1]).embed(n, 0));
        }
        g
    }

    /// Writes `g = C(J)·h` with `h ∈ S_m`; returns `(block index of J, h)`.
    pub fn decompose(&self, g: &Perm) -> (usize, Perm) {
        let mut cur = g.images().to_vec();
        let mut idx = 0;
        for t in (1..=self.k).rev() {
            let n = self.m + t;
            let j = cur[n - 1];
            idx = idx * n + j;
            // cur ← c_j^{-1} ∘ cur, then drop the fixed last letter.
            for x in cur.iter_mut() {
                if *x == j {
                    *x = n - 1;
                } else if *x > j {
                    *x -= 1;
                }
            }
            cur.pop();
        }
        (idx, Perm::from_images(cur).unwrap())
    }

    /// Matrix on `Ind^k N` of `v ↦ Σ_J` (block permutation with blocks `ρ_N(h)`) for the map
    /// `C(J) ↦ f(C(J)) = C(J')·h`.
    fn block_matrix(&self, module: &RepModule, f: impl Fn(&Perm) -> Perm) -> Matrix {
        let d = module.dim();
        let nb = self.blocks();
        let mut trip = Vec::new();
        for b in 0..nb {
            let g = f(&self.rep(b));
            let (b2, h) = self.decompose(&g);
            let blk = module.act(&h);
            for (i, j, v) in blk.entries() {
                trip.push((b2 * d + i, b * d + j, v.clone()));
            }
        }
        Matrix::from_triplets(nb * d, nb * d, trip)
    }

    /// Left action of `g ∈ S_{m+k}`.
    pub fn left(&self, module: &RepModule, g: &Perm) -> Matrix {
        self.block_matrix(module, |c| g.compose(c))
    }

    /// Right multiplication by `h` centralizing `S_m`.
    pub fn right(&self, module: &RepModule, h: &Perm) -> Matrix {
        self.block_matrix(module, |c| c.compose(h))
    }
}

/// `Ind^k N` in the iterated coset basis.
pub fn induce_power(n_mod: &RepModule, k: usize) -> RepModule {
    let deg = n_mod.degree() + k as i64;
    if n_mod.is_zero() || k == 0 {
        return if k == 0 { n_mod.clone() } else { RepModule::zero(deg) };
    }
    let m = n_mod.degree() as usize;
    let layout = InducedLayout { m, k };
    let n = m + k;
    let gens = (1..n).map(|i| layout.left(n_mod, &Perm::s(n, i))).collect();
    RepModule::new_unchecked(deg, layout.blocks() * n_mod.dim(), gens)
}

/// `Res^k N`: keeps `s_1, …, s_{n−k−1}`; zero once the degree drops below 0.
pub fn restrict_power(n_mod: &RepModule, k: usize) -> RepModule {
    let deg = n_mod.degree() - k as i64;
    if deg < 0 || n_mod.is_zero() {
        return RepModule::zero(deg);
    }
    let keep = (deg as usize).saturating_sub(1);
    RepModule::new_unchecked(deg, n_mod.dim(), n_mod.generators()[..keep].to_vec())
}

/// Frobenius characteristic `Σ_μ χ(μ)/z_μ p_μ`, returned in the Schur basis.
/// Fails if a multiplicity is not a nonnegative integer.
pub fn frobenius_char(module: &RepModule) -> Result<SymPoly, RepError> {
    let Some(n) = module.group_degree().filter(|_| !module.is_zero()) else {
        return Ok(SymPoly::zero());
    };
    let mut coeffs = BTreeMap::new();
    for mu in enumerate_partitions(n) {
        let chi = module.character(&Perm::of_cycle_type(&mu));
        coeffs.insert(mu.clone(), chi / Q::from_bigint(mu.z().into()));
    }
    let f = SymPoly::from_basis(Basis::PowerSum, &coeffs);
    for (l, c) in f.terms() {
        if !c.is_integer() || c.is_negative() {
            return Err(RepError::NonIntegralCharacter(format!("multiplicity {c} of s_{l}")));
        }
    }
    Ok(f)
}

/// Multiplicity of the irreducible `S_λ` in a module.
pub fn multiplicity(module: &RepModule, lambda: &Partition) -> Result<Q, RepError> {
    Ok(frobenius_char(module)?.coeff(lambda))
}
