//! Finite chain complexes of symmetric group modules with exact differentials.
//!
//! Differentials lower homological degree: `d_k : C_k → C_{k−1}`. A plain
//! vector space is a module over the trivial group `S_0`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::linalg::{DenseMatrix, Matrix};
use crate::rational::Q;
use crate::symfunc::SymPoly;
use crate::symrep::functor::{term_on_map, Evaluator, FunctorTerm};
use crate::symrep::module::frobenius_char;
use crate::symrep::{RepError, RepModule};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomError {
    #[error("differential d_{degree} has shape {rows}x{cols}, expected {want_rows}x{want_cols}")]
    Shape { degree: i64, rows: usize, cols: usize, want_rows: usize, want_cols: usize },
    #[error("d_{degree} ∘ d_{next} ≠ 0")]
    NotComplex { degree: i64, next: i64 },
    #[error("map does not commute with differentials in degree {0}")]
    NotChainMap(i64),
    #[error("chosen block in degree {0} is not invertible")]
    Singular(i64),
    #[error("bicomplex squares fail to anticommute at ({0}, {1})")]
    NotAnticommuting(i64, i64),
    #[error("chain groups disagree on the symmetric group degree")]
    GroupDegree,
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// A bounded complex. Missing degrees are zero.
#[derive(Clone, Debug)]
pub struct Complex {
    group_degree: i64,
    groups: BTreeMap<i64, Arc<RepModule>>,
    diffs: BTreeMap<i64, Matrix>,
}

/// `f_k : C_k → D_k`. Missing degrees are zero maps.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub maps: BTreeMap<i64, Matrix>,
}

/// Homology in one degree: the quotient module, cycle representatives
/// (columns) and a map sending cycles to their classes.
#[derive(Clone, Debug)]
pub struct Homology {
    pub module: RepModule,
    pub reps: Matrix,
    pub classify: Matrix,
}

/// A mapping cone with its canonical maps `ι : D → Cone(f)`, `π : Cone(f) → C[1]`.
#[derive(Clone, Debug)]
pub struct Cone {
    pub complex: Complex,
    pub iota: ChainMap,
    pub pi: ChainMap,
}

fn plain(dim: usize) -> Arc<RepModule> {
    Arc::new(RepModule::new_unchecked(0, dim, vec![]))
}

impl Complex {
    /// Empty complex over `S_n` with `n = group_degree`.
    pub fn new(group_degree: i64) -> Complex {
        Complex { group_degree, groups: BTreeMap::new(), diffs: BTreeMap::new() }
    }

    /// Complex of plain vector spaces: `dims[k]`, `diffs[k] : k → k−1`.
    pub fn plain(dims: &BTreeMap<i64, usize>, diffs: BTreeMap<i64, Matrix>) -> Result<Complex, HomError> {
        let mut c = Complex::new(0);
        for (&k, &d) in dims {
            c.set_group(k, plain(d))?;
        }
        for (k, d) in diffs {
            c.set_diff(k, d)?;
        }
        c.validate()?;
        Ok(c)
    }

    pub fn group_degree(&self) -> i64 {
        self.group_degree
    }

    pub fn set_group(&mut self, k: i64, m: Arc<RepModule>) -> Result<(), HomError> {
        if m.dim() == 0 {
            self.groups.remove(&k);
            return Ok(());
        }
        if m.degree() != self.group_degree {
            return Err(HomError::GroupDegree);
        }
        self.groups.insert(k, m);
        Ok(())
    }

    pub fn set_diff(&mut self, k: i64, d: Matrix) -> Result<(), HomError> {
        let (want_rows, want_cols) = (self.dim(k - 1), self.dim(k));
        if d.nrows() != want_rows || d.ncols() != want_cols {
            return Err(HomError::Shape { degree: k, rows: d.nrows(), cols: d.ncols(), want_rows, want_cols });
        }
        if d.is_zero() {
            self.diffs.remove(&k);
        } else {
            self.diffs.insert(k, d);
        }
        Ok(())
    }

    pub fn group(&self, k: i64) -> Arc<RepModule> {
        self.groups.get(&k).cloned().unwrap_or_else(|| Arc::new(RepModule::zero(self.group_degree)))
    }

    pub fn dim(&self, k: i64) -> usize {
        self.groups.get(&k).map_or(0, |m| m.dim())
    }

    /// `d_k : C_k → C_{k−1}`.
    pub fn d(&self, k: i64) -> Matrix {
        self.diffs.get(&k).cloned().unwrap_or_else(|| Matrix::zeros(self.dim(k - 1), self.dim(k)))
    }

    /// Degrees with nonzero chain groups.
    pub fn support(&self) -> Vec<i64> {
        self.groups.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.groups.values().map(|m| m.dim()).sum()
    }

    /// Checks `d ∘ d = 0` in every degree.
    pub fn validate(&self) -> Result<(), HomError> {
        for (&k, d) in &self.diffs {
            let below = self.d(k - 1);
            if below.ncols() > 0 && !below.mul(d).is_zero() {
                return Err(HomError::NotComplex { degree: k - 1, next: k });
            }
        }
        Ok(())
    }

    /// Whether every differential commutes with the group action.
    pub fn differentials_are_intertwiners(&self) -> bool {
        self.diffs.iter().all(|(&k, d)| self.group(k).is_intertwiner(&self.group(k - 1), d))
    }

    /// `C[s]_k = C_{k−s}` with differential `(−1)^s d`.
    pub fn shift(&self, s: i64) -> Complex {
        let sign = Q::sign(s);
        Complex {
            group_degree: self.group_degree,
            groups: self.groups.iter().map(|(&k, m)| (k + s, m.clone())).collect(),
            diffs: self.diffs.iter().map(|(&k, d)| (k + s, d.scale(&sign))).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Complex) -> Result<Complex, HomError> {
        if !self.is_zero() && !other.is_zero() && self.group_degree != other.group_degree {
            return Err(HomError::GroupDegree);
        }
        let gd = if self.is_zero() { other.group_degree } else { self.group_degree };
        let mut out = Complex::new(gd);
        let degrees: BTreeSet<i64> = self.groups.keys().chain(other.groups.keys()).copied().collect();
        for &k in &degrees {
            let (a, b) = (self.group(k), other.group(k));
            out.set_group(k, Arc::new(RepModule::direct_sum(gd, &[&a, &b])))?;
        }
        for &k in &degrees {
            out.set_diff(k, Matrix::block_diag(&[self.d(k), other.d(k)]))?;
        }
        Ok(out)
    }

    /// Rank-only homology dimension.
    pub fn homology_dim(&self, k: i64) -> usize {
        let n = self.dim(k);
        if n == 0 {
            return 0;
        }
        let out_rank = if self.dim(k - 1) == 0 { 0 } else { self.d(k).rank() };
        let in_rank = if self.dim(k + 1) == 0 { 0 } else { self.d(k + 1).rank() };
        n - out_rank - in_rank
    }

    /// Nonzero homology dimensions.
    pub fn homology_dims(&self) -> BTreeMap<i64, usize> {
        self.support().into_iter().map(|k| (k, self.homology_dim(k))).filter(|&(_, d)| d > 0).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.support().into_iter().all(|k| self.homology_dim(k) == 0)
    }

    /// `ker d_k / im d_{k+1}` with its induced group action.
    pub fn homology(&self, k: i64) -> Homology {
        let n = self.dim(k);
        let gd = self.group_degree;
        if n == 0 {
            return Homology { module: RepModule::zero(gd), reps: Matrix::zeros(0, 0), classify: Matrix::zeros(0, 0) };
        }
        let cycles = if self.dim(k - 1) == 0 { Matrix::identity(n) } else { self.d(k).kernel() };
        let incoming = self.d(k + 1);
        let bounds = incoming.select_cols(&incoming.independent_columns());
        let nb = bounds.ncols();
        let both = Matrix::hstack(&[bounds.clone(), cycles.clone()]);
        let picked: Vec<usize> = both.independent_columns().into_iter().filter(|&j| j >= nb).map(|j| j - nb).collect();
        let reps = cycles.select_cols(&picked);
        let h = reps.ncols();
        if h == 0 {
            return Homology { module: RepModule::zero(gd), reps: Matrix::zeros(n, 0), classify: Matrix::zeros(0, n) };
        }
        let basis = Matrix::hstack(&[bounds, reps.clone()]);
        let inv = basis.left_inverse().expect("independent columns");
        let classify = inv.select_rows(&(nb..nb + h).collect::<Vec<_>>());
        let module = self.group(k).subquotient(&reps, &classify);
        Homology { module, reps, classify }
    }

    /// `Σ_k (−1)^k dim C_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups.iter().map(|(&k, m)| if k.rem_euclid(2) == 0 { m.dim() as i64 } else { -(m.dim() as i64) }).sum()
    }

    /// `Σ_k (−1)^k ch(C_k)`.
    pub fn euler_frobenius(&self) -> Result<SymPoly, HomError> {
        let mut out = SymPoly::zero();
        for (&k, m) in &self.groups {
            out = out.add(&frobenius_char(m)?.scale(&Q::sign(k)));
        }
        Ok(out)
    }

    /// `Σ_k (−1)^k ch(H_k)`, computed from homology modules.
    pub fn homology_frobenius(&self) -> Result<SymPoly, HomError> {
        let mut out = SymPoly::zero();
        for k in self.support() {
            let h = self.homology(k);
            if h.module.dim() > 0 {
                out = out.add(&frobenius_char(&h.module)?.scale(&Q::sign(k)));
            }
        }
        Ok(out)
    }

    /// Replaces the complex by its homology with zero differential.
    pub fn minimal(&self) -> Complex {
        let mut out = Complex::new(self.group_degree);
        for k in self.support() {
            let h = self.homology(k);
            out.set_group(k, Arc::new(h.module)).expect("same group degree");
        }
        out
    }

    /// Forgets the group action.
    pub fn underlying(&self) -> Complex {
        Complex {
            group_degree: 0,
            groups: self.groups.iter().map(|(&k, m)| (k, plain(m.dim()))).collect(),
            diffs: self.diffs.clone(),
        }
    }

    /// Termwise `F(C)` for a functor term `F`.
    pub fn apply_functor(&self, term: &FunctorTerm) -> Result<Complex, HomError> {
        let mut evs: BTreeMap<i64, Evaluator> = self.groups.iter().map(|(&k, m)| (k, Evaluator::new(m.clone()))).collect();
        let gd = self.group_degree + crate::symrep::functor::word_degree_shift(&term.raw_word());
        let mut out = Complex::new(gd);
        for (&k, ev) in evs.iter_mut() {
            out.set_group(k, ev.term(term)?.module.clone())?;
        }
        for &k in self.diffs.keys() {
            let mut src = evs.remove(&k).expect("differential source");
            let f = {
                let tgt = evs.get_mut(&(k - 1)).expect("differential target");
                term_on_map(term, &mut src, tgt, &self.d(k))?
            };
            evs.insert(k, src);
            out.set_diff(k, f)?;
        }
        Ok(out)
    }

    /// Removes the invertible block `D = d_k[rows, cols]`, replacing the
    /// remaining part of `d_k` by `A − B D^{-1} C`. The result carries no group action.
    pub fn gaussian_eliminate(&self, k: i64, rows: &[usize], cols: &[usize]) -> Result<Complex, HomError> {
        let d = self.d(k);
        let block = d.select(rows, cols);
        let dinv = block.inverse().ok_or(HomError::Singular(k))?;
        let keep_rows: Vec<usize> = (0..self.dim(k - 1)).filter(|i| !rows.contains(i)).collect();
        let keep_cols: Vec<usize> = (0..self.dim(k)).filter(|j| !cols.contains(j)).collect();
        let a = d.select(&keep_rows, &keep_cols);
        let b = d.select(&keep_rows, cols);
        let c = d.select(rows, &keep_cols);
        let new_d = a.sub(&b.mul(&dinv).mul(&c));
        let mut dims: BTreeMap<i64, usize> = self.groups.iter().map(|(&j, m)| (j, m.dim())).collect();
        dims.insert(k, keep_cols.len());
        dims.insert(k - 1, keep_rows.len());
        let mut diffs = BTreeMap::new();
        for j in self.support().into_iter().chain([k, k + 1]) {
            let m = if j == k {
                new_d.clone()
            } else if j == k + 1 {
                self.d(k + 1).select_rows(&keep_cols)
            } else if j == k - 1 {
                self.d(k - 1).select_cols(&keep_rows)
            } else {
                self.d(j)
            };
            diffs.insert(j, m);
        }
        Complex::plain(&dims, diffs)
    }

    /// Eliminates single invertible entries until every differential vanishes.
    pub fn eliminate_all(&self) -> Complex {
        let mut c = self.underlying();
        loop {
            let pivot = c.diffs.iter().find_map(|(&k, d)| d.entries().next().map(|(i, j, _)| (k, i, j)));
            match pivot {
                Some((k, i, j)) => c = c.gaussian_eliminate(k, &[i], &[j]).expect("nonzero pivot"),
                None => return c,
            }
        }
    }

    pub fn to_serial(&self) -> SerialComplex {
        SerialComplex {
            group_degree: self.group_degree,
            dims: self.groups.iter().map(|(&k, m)| (k, m.dim())).collect(),
            differentials: self.diffs.iter().map(|(&k, d)| (k, DenseMatrix::from(d))).collect(),
        }
    }
}

/// JSON form: per-degree dimensions and dense differentials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerialComplex {
    pub group_degree: i64,
    pub dims: BTreeMap<i64, usize>,
    pub differentials: BTreeMap<i64, DenseMatrix>,
}

impl ChainMap {
    pub fn new() -> ChainMap {
        ChainMap { maps: BTreeMap::new() }
    }

    pub fn at(&self, k: i64, source: &Complex, target: &Complex) -> Matrix {
        self.maps.get(&k).cloned().unwrap_or_else(|| Matrix::zeros(target.dim(k), source.dim(k)))
    }

    /// `d_D f = f d_C` in every degree.
    pub fn verify(&self, source: &Complex, target: &Complex) -> Result<(), HomError> {
        let degrees: BTreeSet<i64> = source.support().into_iter().chain(target.support()).collect();
        for &k in &degrees {
            let lhs = target.d(k).mul(&self.at(k, source, target));
            let rhs = self.at(k - 1, source, target).mul(&source.d(k));
            if lhs != rhs {
                return Err(HomError::NotChainMap(k));
            }
        }
        Ok(())
    }
}

impl Default for ChainMap {
    fn default() -> Self {
        ChainMap::new()
    }
}

/// `Cone(f)_k = C_{k−1} ⊕ D_k` with `d = [[−d_C, 0], [f, d_D]]`.
pub fn cone(c: &Complex, d: &Complex, f: &ChainMap) -> Result<Cone, HomError> {
    f.verify(c, d)?;
    let gd = if c.is_zero() { d.group_degree } else { c.group_degree };
    if !c.is_zero() && !d.is_zero() && c.group_degree != d.group_degree {
        return Err(HomError::GroupDegree);
    }
    let degrees: BTreeSet<i64> = c.support().into_iter().map(|k| k + 1).chain(d.support()).collect();
    let mut out = Complex::new(gd);
    let mut iota = ChainMap::new();
    let mut pi = ChainMap::new();
    for &k in &degrees {
        let (a, b) = (c.group(k - 1), d.group(k));
        out.set_group(k, Arc::new(RepModule::direct_sum(gd, &[&a, &b])))?;
        let (na, nb) = (a.dim(), b.dim());
        iota.maps.insert(k, Matrix::vstack(&[Matrix::zeros(na, nb), Matrix::identity(nb)]));
        pi.maps.insert(k, Matrix::hstack(&[Matrix::identity(na), Matrix::zeros(na, nb)]));
    }
    let edges: BTreeSet<i64> = degrees.iter().flat_map(|&k| [k, k + 1]).collect();
    for &k in &edges {
        let (a1, b1) = (c.dim(k - 2), d.dim(k - 1));
        let (a0, b0) = (c.dim(k - 1), d.dim(k));
        let top = Matrix::hstack(&[c.d(k - 1).neg(), Matrix::zeros(a1, b0)]);
        let bottom = Matrix::hstack(&[f.at(k - 1, c, d), d.d(k)]);
        let m = Matrix::vstack(&[top, bottom]);
        debug_assert_eq!((m.nrows(), m.ncols()), (a1 + b1, a0 + b0));
        out.set_diff(k, m)?;
    }
    out.validate()?;
    Ok(Cone { complex: out, iota, pi })
}

/// Finite double complex: `h` maps `(i, j) → (i−1, j)`, `v` maps `(i, j) → (i, j−1)`.
#[derive(Clone, Debug)]
pub struct Bicomplex {
    pub group_degree: i64,
    pub cells: BTreeMap<(i64, i64), Arc<RepModule>>,
    pub h: BTreeMap<(i64, i64), Matrix>,
    pub v: BTreeMap<(i64, i64), Matrix>,
}

impl Bicomplex {
    pub fn new(group_degree: i64) -> Bicomplex {
        Bicomplex { group_degree, cells: BTreeMap::new(), h: BTreeMap::new(), v: BTreeMap::new() }
    }

    fn dim(&self, c: (i64, i64)) -> usize {
        self.cells.get(&c).map_or(0, |m| m.dim())
    }

    fn h_at(&self, c: (i64, i64)) -> Matrix {
        self.h.get(&c).cloned().unwrap_or_else(|| Matrix::zeros(self.dim((c.0 - 1, c.1)), self.dim(c)))
    }

    fn v_at(&self, c: (i64, i64)) -> Matrix {
        self.v.get(&c).cloned().unwrap_or_else(|| Matrix::zeros(self.dim((c.0, c.1 - 1)), self.dim(c)))
    }

    /// Turns commuting squares into anticommuting ones by the sign `(−1)^i` on `v` in column `i`.
    pub fn with_koszul_sign(mut self) -> Bicomplex {
        for ((i, _), m) in self.v.iter_mut() {
            *m = m.scale(&Q::sign(*i));
        }
        self
    }

    /// `Tot_n = ⊕_{i+j=n} A_{i,j}` with `d = h + v`, ordered by increasing `i`.
    pub fn total_complex(&self) -> Result<Complex, HomError> {
        for &(i, j) in self.cells.keys() {
            let hv = self.h_at((i, j - 1)).mul(&self.v_at((i, j)));
            let vh = self.v_at((i - 1, j)).mul(&self.h_at((i, j)));
            if !hv.add(&vh).is_zero() {
                return Err(HomError::NotAnticommuting(i, j));
            }
        }
        let mut by_deg: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
        for &(i, j) in self.cells.keys() {
            by_deg.entry(i + j).or_default().push((i, j));
        }
        let mut out = Complex::new(self.group_degree);
        for (&n, cells) in &by_deg {
            let parts: Vec<&RepModule> = cells.iter().map(|c| self.cells[c].as_ref()).collect();
            out.set_group(n, Arc::new(RepModule::direct_sum(self.group_degree, &parts)))?;
        }
        for (&n, src) in &by_deg {
            let Some(tgt) = by_deg.get(&(n - 1)) else { continue };
            let rows: Vec<usize> = tgt.iter().map(|&c| self.dim(c)).collect();
            let cols: Vec<usize> = src.iter().map(|&c| self.dim(c)).collect();
            let m = Matrix::from_blocks(&rows, &cols, |r, s| {
                let (t, c) = (tgt[r], src[s]);
                if t == (c.0 - 1, c.1) {
                    Some(self.h_at(c))
                } else if t == (c.0, c.1 - 1) {
                    Some(self.v_at(c))
                } else {
                    None
                }
            });
            out.set_diff(n, m)?;
        }
        out.validate()?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(v: &[(i64, usize)]) -> BTreeMap<i64, usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn identity_complex_is_acyclic() {
        let c = Complex::plain(&dims(&[(0, 2), (1, 2)]), [(1, Matrix::identity(2))].into()).unwrap();
        assert!(c.is_acyclic());
        assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn homology_of_single_module() {
        let s = crate::symrep::specht_module(&"2,1".parse().unwrap()).unwrap();
        let mut c = Complex::new(3);
        c.set_group(4, Arc::new(s)).unwrap();
        let h = c.homology(4);
        assert_eq!(frobenius_char(&h.module).unwrap(), SymPoly::schur("2,1".parse().unwrap()));
        assert_eq!(c.homology_dims(), dims(&[(4, 2)]));
    }

    #[test]
    fn shifts_and_cones() {
        let c = Complex::plain(&dims(&[(0, 1), (1, 2)]), [(1, Matrix::from_ints(&[vec![1, 1]]))].into()).unwrap();
        let back = c.shift(1).shift(-1);
        assert_eq!(back.d(1), c.d(1));
        let id = ChainMap { maps: [(0, Matrix::identity(1)), (1, Matrix::identity(2))].into() };
        let k = cone(&c, &c, &id).unwrap();
        assert!(k.complex.is_acyclic());
        let zero = ChainMap::new();
        let k0 = cone(&c, &c, &zero).unwrap();
        assert_eq!(k0.complex.euler_characteristic(), 0);
        assert_eq!(k0.complex.homology_dims(), dims(&[(1, 1), (2, 1)]));
        k.iota.verify(&c, &k.complex).unwrap();
        k.pi.verify(&k.complex, &c.shift(1)).unwrap();
    }

    #[test]
    fn elimination_keeps_homology() {
        let c = Complex::plain(&dims(&[(0, 1), (1, 2)]), [(1, Matrix::from_ints(&[vec![0, 1]]))].into()).unwrap();
        let r = c.gaussian_eliminate(1, &[0], &[1]).unwrap();
        assert_eq!(r.dim(1), 1);
        assert_eq!(r.dim(0), 0);
        assert_eq!(r.homology_dims(), c.homology_dims());
        assert!(matches!(c.gaussian_eliminate(1, &[0], &[0]), Err(HomError::Singular(1))));
    }

    #[test]
    fn square_total_complex() {
        let mut b = Bicomplex::new(0);
        for i in 0..2 {
            for j in 0..2 {
                b.cells.insert((i, j), plain(1));
            }
        }
        b.h.insert((1, 0), Matrix::identity(1));
        b.h.insert((1, 1), Matrix::identity(1));
        b.v.insert((0, 1), Matrix::identity(1));
        b.v.insert((1, 1), Matrix::identity(1));
        assert!(matches!(b.total_complex(), Err(HomError::NotAnticommuting(1, 1))));
        let t = b.with_koszul_sign().total_complex().unwrap();
        assert!(t.is_acyclic());
    }
}
