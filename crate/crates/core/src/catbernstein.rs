//! Complexes of functors built from `P^λ`, `Q^μ` and adjunction maps, their
//! action on complexes of symmetric group modules, and homology-level checks
//! of the categorical Bernstein, Clifford and projector relations.
//!
//! A functor complex is applied to a complex `C` by forming the double complex
//! `T_i(C_j)` with horizontal maps the components of `d_T` and vertical maps
//! `(−1)^i T_i(d_C)`, then totalizing.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::fock::{boson_psi, boson_psi_star, BosonState};
use crate::homalg::{cone, Bicomplex, ChainMap, Complex, HomError};
use crate::linalg::Matrix;
use crate::partition::{enumerate_partitions, syt_count, Partition};
use crate::rational::Q;
use crate::symfunc::{bernstein, bernstein_star, multiply, skew, SymError, SymPoly};
use crate::symrep::functor::{term_on_map, word_degree_shift, Elementary, Evaluator, FunctorTerm, Letter, RawOp, Transform};
use crate::symrep::module::frobenius_char;
use crate::symrep::{RepError, RepModule};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// Degree bound passed to symmetric function operators; the complexes here stay far below it.
const SYM_CAP: usize = 64;

/// A bounded complex of functors: `terms[i]` is a direct sum, `diffs[i]` lists
/// `(target index, source index, transform)` for `d_i : T_i → T_{i−1}`.
#[derive(Clone, Debug, Default)]
pub struct FunctorComplex {
    pub terms: BTreeMap<i64, Vec<FunctorTerm>>,
    pub diffs: BTreeMap<i64, Vec<(usize, usize, Transform)>>,
}

impl FunctorComplex {
    pub fn identity() -> FunctorComplex {
        let mut f = FunctorComplex::default();
        f.terms.insert(0, vec![FunctorTerm::identity()]);
        f
    }

    fn push_term(&mut self, degree: i64, t: FunctorTerm) -> usize {
        let v = self.terms.entry(degree).or_default();
        v.push(t);
        v.len() - 1
    }

    /// Common degree shift of all terms, if any term exists.
    pub fn degree_shift(&self) -> Option<i64> {
        self.terms.values().flatten().next().map(|t| word_degree_shift(&t.raw_word()))
    }

    /// Formal composite `self ∘ inner` with `(−1)^i` on `1_{T_i} ⊗ d_inner`.
    pub fn compose(&self, inner: &FunctorComplex) -> FunctorComplex {
        let mut out = FunctorComplex::default();
        let mut index: HashMap<(i64, i64, usize, usize), usize> = HashMap::new();
        for (&i, outer_terms) in &self.terms {
            for (&j, inner_terms) in &inner.terms {
                for (t, a) in outer_terms.iter().enumerate() {
                    for (u, b) in inner_terms.iter().enumerate() {
                        let idx = out.push_term(i + j, a.compose(b));
                        index.insert((i, j, t, u), idx);
                    }
                }
            }
        }
        for (&i, outer_terms) in &self.terms {
            for (&j, inner_terms) in &inner.terms {
                for (u, b) in inner_terms.iter().enumerate() {
                    for (tt, st, tr) in self.diffs.get(&i).into_iter().flatten() {
                        let (Some(&src), Some(&tgt)) = (index.get(&(i, j, *st, u)), index.get(&(i - 1, j, *tt, u))) else { continue };
                        out.diffs.entry(i + j).or_default().push((tgt, src, tr.whisker(&[], &b.raw_word())));
                    }
                }
                for (t, a) in outer_terms.iter().enumerate() {
                    for (tu, su, tr) in inner.diffs.get(&j).into_iter().flatten() {
                        let (Some(&src), Some(&tgt)) = (index.get(&(i, j, t, *su)), index.get(&(i, j - 1, t, *tu))) else { continue };
                        let tr = tr.whisker(&a.raw_word(), &[]).scale(&Q::sign(i));
                        out.diffs.entry(i + j).or_default().push((tgt, src, tr));
                    }
                }
            }
        }
        out
    }

    /// Applies the functor complex to a complex of modules and totalizes.
    pub fn apply(&self, c: &Complex) -> Result<Complex, CatError> {
        let shift = self.degree_shift().unwrap_or(0);
        let gd = c.group_degree() + shift;
        let mut evs: BTreeMap<i64, Evaluator> = c.support().into_iter().map(|j| (j, Evaluator::new(c.group(j)))).collect();
        let mut b = Bicomplex::new(gd);
        let mut dims: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        for (&j, ev) in evs.iter_mut() {
            for (&i, ts) in &self.terms {
                let imgs = ts.iter().map(|t| ev.term(t)).collect::<Result<Vec<_>, _>>()?;
                let mods: Vec<&RepModule> = imgs.iter().map(|x| x.module.as_ref()).collect();
                let cell = RepModule::direct_sum(gd, &mods);
                dims.insert((i, j), mods.iter().map(|m| m.dim()).collect());
                if cell.dim() > 0 {
                    b.cells.insert((i, j), Arc::new(cell));
                }
            }
        }
        for (&j, ev) in evs.iter_mut() {
            for (&i, entries) in &self.diffs {
                let (Some(src), Some(tgt)) = (dims.get(&(i, j)), dims.get(&(i - 1, j))) else { continue };
                let mut blocks: BTreeMap<(usize, usize), Matrix> = BTreeMap::new();
                for (tt, st, tr) in entries {
                    if src[*st] == 0 || tgt[*tt] == 0 {
                        continue;
                    }
                    let m = ev.component(&self.terms[&i][*st], &self.terms[&(i - 1)][*tt], tr)?;
                    let acc = blocks.remove(&(*tt, *st)).map_or(m.clone(), |x| x.add(&m));
                    blocks.insert((*tt, *st), acc);
                }
                let h = Matrix::from_blocks(tgt, src, |r, s| blocks.get(&(r, s)).cloned());
                if !h.is_zero() {
                    b.h.insert((i, j), h);
                }
            }
        }
        let js: Vec<i64> = evs.keys().copied().collect();
        for &j in &js {
            if !evs.contains_key(&(j - 1)) {
                continue;
            }
            let d = c.d(j);
            if d.is_zero() {
                continue;
            }
            let mut src_ev = evs.remove(&j).expect("present");
            for (&i, ts) in &self.terms {
                let tgt_ev = evs.get_mut(&(j - 1)).expect("present");
                let parts = ts.iter().map(|t| term_on_map(t, &mut src_ev, tgt_ev, &d)).collect::<Result<Vec<_>, _>>()?;
                let v = Matrix::block_diag(&parts).scale(&Q::sign(i));
                if !v.is_zero() {
                    b.v.insert((i, j), v);
                }
            }
            evs.insert(j, src_ev);
        }
        Ok(b.total_complex()?)
    }

    /// `T(M)` for a single module placed in degree 0.
    pub fn evaluate(&self, m: Arc<RepModule>) -> Result<Complex, CatError> {
        self.apply(&module_complex(m))
    }
}

/// `M` as a complex concentrated in degree 0.
pub fn module_complex(m: Arc<RepModule>) -> Complex {
    let mut c = Complex::new(m.degree());
    c.set_group(0, m).expect("matching degree");
    c
}

fn pq(word_p: usize, word_q: usize) -> Vec<Letter> {
    [vec![Letter::P; word_p], vec![Letter::Q; word_q]].concat()
}

fn path(word: &[Letter], ops: Vec<RawOp>) -> Transform {
    Transform::path(word, ops).expect("well-formed composite")
}

/// `B_a` truncated for modules over `S_n`: `P^{(x+a)} Q^{(1^x)}` in degree `x`,
/// `d` capping the innermost `P` strand against the outermost `Q` strand.
pub fn bernstein_functor(a: i64, n: i64) -> FunctorComplex {
    let mut f = FunctorComplex::default();
    let lo = 0.max(-a);
    for x in lo..=n {
        let p = (x + a) as usize;
        f.push_term(x, FunctorTerm::p(&Partition::row(p)).then_block(Letter::Q, &Partition::column(x as usize)));
        if x > lo {
            let d = path(&pq(p, x as usize), vec![RawOp::gen(Elementary::CapPQ, p - 1)]);
            f.diffs.entry(x).or_default().push((0, 0, d));
        }
    }
    f
}

/// `B*_a` truncated for modules over `S_n`: `P^{(1^x)} Q^{(x+a)}` in degree `−x`,
/// `d` inserting a `PQ` cup between the blocks.
pub fn bernstein_star_functor(a: i64, n: i64) -> FunctorComplex {
    let mut f = FunctorComplex::default();
    let lo = 0.max(-a);
    for x in lo..=(n - a) {
        let qlen = (x + a) as usize;
        f.push_term(-x, FunctorTerm::p(&Partition::column(x as usize)).then_block(Letter::Q, &Partition::row(qlen)));
        if x > lo {
            let d = path(&pq(x as usize - 1, qlen - 1), vec![RawOp::gen(Elementary::CupPQ, x as usize - 1)]);
            f.diffs.entry(-(x - 1)).or_default().push((0, 0, d));
        }
    }
    f
}

/// Sign of the projector complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SigmaSign {
    Minus,
    Plus,
}

/// `Σ^∓` truncated for modules over `S_n`: `⊕_{λ⊢k} P^λ Q^{λ^t}` in degree `±k`.
/// `Σ^-` lowers `k` by the middle cap, `Σ^+` raises it by a middle cup.
pub fn sigma_functor(sign: SigmaSign, n: i64) -> FunctorComplex {
    let mut f = FunctorComplex::default();
    for k in 0..=n.max(0) as usize {
        match sign {
            SigmaSign::Minus => {
                f.push_term(k as i64, FunctorTerm::sigma(k));
                if k > 0 {
                    f.diffs.entry(k as i64).or_default().push((0, 0, path(&pq(k, k), vec![RawOp::gen(Elementary::CapPQ, k - 1)])));
                }
            }
            SigmaSign::Plus => {
                f.push_term(-(k as i64), FunctorTerm::sigma(k));
                if k > 0 {
                    let d = path(&pq(k - 1, k - 1), vec![RawOp::gen(Elementary::CupPQ, k - 1)]);
                    f.diffs.entry(-(k as i64 - 1)).or_default().push((0, 0, d));
                }
            }
        }
    }
    f
}

pub fn bernstein_complex(a: i64, m: Arc<RepModule>) -> Result<Complex, CatError> {
    bernstein_functor(a, m.degree()).evaluate(m)
}

pub fn bernstein_star_complex(a: i64, m: Arc<RepModule>) -> Result<Complex, CatError> {
    bernstein_star_functor(a, m.degree()).evaluate(m)
}

pub fn sigma_complex(sign: SigmaSign, m: Arc<RepModule>) -> Result<Complex, CatError> {
    sigma_functor(sign, m.degree()).evaluate(m)
}

/// One factor of a word of Bernstein functors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub a: i64,
    pub star: bool,
}

impl Step {
    pub fn functor(&self, n: i64) -> FunctorComplex {
        if self.star {
            bernstein_star_functor(self.a, n)
        } else {
            bernstein_functor(self.a, n)
        }
    }

    /// The decategorified operator.
    pub fn on_symfunc(&self, f: &SymPoly) -> Result<SymPoly, SymError> {
        if self.star {
            bernstein_star(self.a, f, SYM_CAP)
        } else {
            bernstein(self.a, f, SYM_CAP)
        }
    }
}

/// Applies one functor complex to a complex, optionally replacing the result by its homology.
pub fn apply_step(step: Step, c: &Complex, reduce: bool) -> Result<Complex, CatError> {
    let out = step.functor(c.group_degree()).apply(c)?;
    Ok(if reduce { out.minimal() } else { out })
}

/// `w_1 ∘ ⋯ ∘ w_k (seed)`, rightmost factor applied first.
///
/// With `reduce`, each intermediate complex is replaced by its homology; over a
/// field of characteristic zero every complex of modules is homotopy equivalent
/// to its homology, so the final homology is unchanged.
pub fn compose_bernstein(word: &[Step], seed: Arc<RepModule>, reduce: bool) -> Result<Complex, CatError> {
    let mut c = module_complex(seed);
    for step in word.iter().rev() {
        c = apply_step(*step, &c, reduce)?;
    }
    Ok(c)
}

/// Creation word `B_{λ_1} ⋯ B_{λ_k}`: the smallest part is applied first.
pub fn creation_word(lambda: &Partition) -> Vec<Step> {
    lambda.parts().iter().map(|&p| Step { a: p as i64, star: false }).collect()
}

/// Annihilation word `B*_{λ_k} ⋯ B*_{λ_1}`: `B*_{λ_1}` is applied first.
pub fn annihilation_word(lambda: &Partition) -> Vec<Step> {
    lambda.parts().iter().rev().map(|&p| Step { a: p as i64, star: true }).collect()
}

/// One line of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub parameters: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl CheckRecord {
    fn new(name: &str, parameters: String, expected: impl ToString, computed: impl ToString, pass: bool) -> CheckRecord {
        CheckRecord { name: name.into(), parameters, expected: expected.to_string(), computed: computed.to_string(), pass }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(name: &str, parameters: String, expected: T, computed: T) -> CheckRecord {
        let pass = expected == computed;
        CheckRecord::new(name, parameters, format!("{expected:?}"), format!("{computed:?}"), pass)
    }
}

/// A named module used as input to a check.
#[derive(Clone, Debug)]
pub struct Seed {
    pub label: String,
    pub module: Arc<RepModule>,
}

impl Seed {
    pub fn new(label: impl Into<String>, module: RepModule) -> Seed {
        Seed { label: label.into(), module: Arc::new(module) }
    }

    pub fn character(&self) -> Result<SymPoly, CatError> {
        Ok(frobenius_char(&self.module)?)
    }
}

fn fmt_dims(d: &BTreeMap<i64, usize>) -> String {
    if d.is_empty() {
        return "0".into();
    }
    d.iter().map(|(k, v)| format!("H{k}={v}")).collect::<Vec<_>>().join(" ")
}

/// `H_k(X) = H_{k−s}(Y)` as graded dimensions.
fn shifted(d: &BTreeMap<i64, usize>, s: i64) -> BTreeMap<i64, usize> {
    d.iter().map(|(&k, &v)| (k + s, v)).collect()
}

/// Signed Frobenius characteristic of `c` against an expected symmetric function.
fn decat_record(name: &str, params: String, c: &Complex, expected: &SymPoly) -> Result<CheckRecord, CatError> {
    let got = c.euler_frobenius()?;
    Ok(CheckRecord::new(name, params, expected, &got, &got == expected))
}

/// Homology of `B_{λ_k} ⋯ B_{λ_1}(S_0)`: degree 0 only, of dimension `Δ_λ`, character `s_λ`.
pub fn specht_check(lambda: &Partition, reduce: bool) -> Result<Vec<CheckRecord>, CatError> {
    let params = format!("lambda={lambda} reduce={reduce}");
    let c = compose_bernstein(&creation_word(lambda), Arc::new(RepModule::trivial(0)), reduce)?;
    let dims = c.homology_dims();
    let delta = syt_count(lambda) as usize;
    let want: BTreeMap<i64, usize> = [(0, delta)].into();
    let mut out = vec![CheckRecord::new("specht-homology", params.clone(), fmt_dims(&want), fmt_dims(&dims), dims == want)];
    let h = c.homology(0);
    let ch = frobenius_char(&h.module)?;
    let s = SymPoly::schur(lambda.clone());
    out.push(CheckRecord::new("specht-character", params.clone(), &s, &ch, ch == s));
    out.push(decat_record("specht-euler", params, &c, &s)?);
    Ok(out)
}

/// `B*_{λ_k} ⋯ B*_{λ_1}(S_λ)` has homology the trivial `S_0`-module in degree 0.
pub fn dual_annihilation_check(lambda: &Partition, reduce: bool) -> Result<Vec<CheckRecord>, CatError> {
    let s = crate::symrep::specht_module(lambda)?;
    dual_annihilation_check_on(lambda, Arc::new(s), reduce)
}

/// [`dual_annihilation_check`] on a supplied realization of `S_λ`.
pub fn dual_annihilation_check_on(lambda: &Partition, specht: Arc<RepModule>, reduce: bool) -> Result<Vec<CheckRecord>, CatError> {
    let params = format!("lambda={lambda} reduce={reduce}");
    let c = compose_bernstein(&annihilation_word(lambda), specht, reduce)?;
    let dims = c.homology_dims();
    let want: BTreeMap<i64, usize> = [(0, 1)].into();
    let ok = dims == want && c.group_degree() == 0;
    let mut out = vec![CheckRecord::new("dual-annihilation", params.clone(), fmt_dims(&want), fmt_dims(&dims), ok)];
    out.push(decat_record("dual-annihilation-euler", params, &c, &SymPoly::one())?);
    Ok(out)
}

/// Graded homology dimensions of `w(M)`, with the signed character check.
fn word_on(word: &[Step], m: &Seed, reduce: bool) -> Result<(Complex, BTreeMap<i64, usize>, CheckRecord), CatError> {
    let c = compose_bernstein(word, m.module.clone(), reduce)?;
    let mut f = m.character()?;
    for s in word.iter().rev() {
        f = s.on_symfunc(&f)?;
    }
    let label: Vec<String> = word.iter().map(|s| format!("B{}{}", if s.star { "*" } else { "" }, s.a)).collect();
    let rec = decat_record("euler", format!("{} on {}", label.join(""), m.label), &c, &f)?;
    let dims = c.homology_dims();
    Ok((c, dims, rec))
}

/// `B_{a−1} B_b (M)` against `B_{b−1} B_a (M)`: acyclic for `a = b`, otherwise
/// `B_{a−1}B_b ≃ B_{b−1}B_a[s]` with `s = +1` for `a < b` and `−1` for `a > b`.
/// The star variant compares `B*_{a+1}B*_b` with `B*_{b+1}B*_a`.
pub fn relation_suite_bb(a: i64, b: i64, m: &Seed, star: bool) -> Result<Vec<CheckRecord>, CatError> {
    let (x_word, y_word) = if star {
        (vec![Step { a: a + 1, star }, Step { a: b, star }], vec![Step { a: b + 1, star }, Step { a, star }])
    } else {
        (vec![Step { a: a - 1, star }, Step { a: b, star }], vec![Step { a: b - 1, star }, Step { a, star }])
    };
    let name = if star { "bb-star" } else { "bb" };
    let params = format!("a={a} b={b} M={}", m.label);
    let (_, xd, xr) = word_on(&x_word, m, false)?;
    let mut out = vec![xr];
    if a == b {
        out.push(CheckRecord::new(&format!("{name}-acyclic"), params, "0", fmt_dims(&xd), xd.is_empty()));
        return Ok(out);
    }
    let (_, yd, yr) = word_on(&y_word, m, false)?;
    out.push(yr);
    let s = if a < b { 1 } else { -1 };
    out.push(CheckRecord::new(&format!("{name}-shift[{s:+}]"), params, fmt_dims(&shifted(&yd, s)), fmt_dims(&xd), xd == shifted(&yd, s)));
    Ok(out)
}

/// `B_{a+1} B*_{b+1}(M) ≃ B*_b B_a(M)[s]`, `s = −1` for `a < b`, `+1` for `a > b`;
/// for `a = b` the triangle `B*_a B_a ≃ Cone(B_{a+1} B*_{a+1} → 1)` at the level of graded dimensions.
pub fn relation_suite_bbstar(a: i64, b: i64, m: &Seed) -> Result<Vec<CheckRecord>, CatError> {
    let params = format!("a={a} b={b} M={}", m.label);
    let x_word = vec![Step { a: a + 1, star: false }, Step { a: b + 1, star: true }];
    let y_word = vec![Step { a: b, star: true }, Step { a, star: false }];
    let (_, xd, xr) = word_on(&x_word, m, false)?;
    let (_, yd, yr) = word_on(&y_word, m, false)?;
    let mut out = vec![xr, yr];
    if a != b {
        let s = if a < b { -1 } else { 1 };
        out.push(CheckRecord::new(&format!("bbstar-shift[{s:+}]"), params, fmt_dims(&shifted(&yd, s)), fmt_dims(&xd), xd == shifted(&yd, s)));
        return Ok(out);
    }
    let tri = triangle(a, m)?;
    out.push(CheckRecord::new(
        "bbstar-triangle",
        format!("{params} scalars={}", tri.scalars.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")),
        fmt_dims(&yd),
        fmt_dims(&tri.cone_dims),
        tri.cone_dims == yd && tri.chain_map,
    ));
    Ok(out)
}

/// The comparison map of the triangle and the homology of its cone.
#[derive(Clone, Debug)]
pub struct Triangle {
    /// Scalars on the nested-cap components, one per surviving degree-0 term.
    pub scalars: Vec<Q>,
    /// Dimension of the space of admissible scalar vectors.
    pub solution_dim: usize,
    pub chain_map: bool,
    pub cone_dims: BTreeMap<i64, usize>,
}

/// Builds `f : B_{a+1} B*_{a+1}(M) → M` from nested caps on the degree-0 terms
/// `P^{(x+a+1)} Q^{(1^x)} P^{(1^x)} Q^{(x+a+1)}`, with scalars fixed by `f ∘ d = 0`.
pub fn triangle(a: i64, m: &Seed) -> Result<Triangle, CatError> {
    let n = m.module.degree();
    let inner = bernstein_star_functor(a + 1, n);
    let outer = bernstein_functor(a + 1, n - (a + 1));
    let fc = outer.compose(&inner);
    let x = fc.evaluate(m.module.clone())?;
    let mut ev = Evaluator::new(m.module.clone());
    let d0 = m.module.dim();
    let terms = fc.terms.get(&0).cloned().unwrap_or_default();
    let mut comps = Vec::new();
    let mut offset = 0;
    for t in &terms {
        let dim = ev.term(t)?.module.dim();
        if dim > 0 {
            let word = t.raw_word();
            let p_total = word.iter().filter(|&&l| l == Letter::P).count() as i64;
            let xs = ((p_total - (a + 1)) / 2) as usize;
            let np = xs + (a + 1) as usize;
            let mut ops = Vec::new();
            for s in 0..xs {
                ops.push(RawOp::gen(Elementary::CapQP, np + xs - 1 - s));
            }
            for s in 0..np {
                ops.push(RawOp::gen(Elementary::CapPQ, np - 1 - s));
            }
            let f = ev.component(t, &FunctorTerm::identity(), &path(&word, ops))?;
            comps.push((offset, dim, f));
        }
        offset += dim;
    }
    let total0 = x.dim(0);
    let embed = |off: usize, dim: usize, f: &Matrix| {
        Matrix::from_blocks(&[d0], &[off, dim, total0 - off - dim], |_, s| (s == 1).then(|| f.clone()))
    };
    let d1 = x.d(1);
    let cols: Vec<Matrix> = comps.iter().map(|(o, d, f)| embed(*o, *d, f).mul(&d1)).collect();
    let flat = Matrix::from_triplets(
        d0 * d1.ncols(),
        cols.len(),
        cols.iter().enumerate().flat_map(|(j, g)| g.entries().map(move |(r, c, v)| (r * g.ncols() + c, j, v.clone())).collect::<Vec<_>>()),
    );
    let kernel = flat.kernel();
    let solution_dim = kernel.ncols();
    let scalars: Vec<Q> = (0..comps.len()).map(|i| (0..kernel.ncols()).map(|j| kernel.get(i, j)).sum()).collect();
    let mut f0 = Matrix::zeros(d0, total0);
    for ((o, d, f), c) in comps.iter().zip(&scalars) {
        f0 = f0.add(&embed(*o, *d, f).scale(c));
    }
    let target = module_complex(m.module.clone());
    let map = ChainMap { maps: [(0, f0)].into() };
    let chain_map = map.verify(&x, &target).is_ok();
    let cone_dims = if chain_map { cone(&x, &target, &map)?.complex.homology_dims() } else { BTreeMap::new() };
    Ok(Triangle { scalars, solution_dim, chain_map, cone_dims })
}

/// `Σ_k (−1)^k Σ_{λ⊢k} s_λ s_{λ^t}^⊥ f` (degree-`k` part taken from `Σ^-`).
pub fn sigma_symfunc(f: &SymPoly) -> SymPoly {
    let mut out = SymPoly::zero();
    for k in 0..=f.max_degree() {
        for l in enumerate_partitions(k) {
            let term = multiply(&SymPoly::schur(l.clone()), &skew(&SymPoly::schur(l.conjugate()), f));
            out = out.add(&term.scale(&Q::sign(k as i64)));
        }
    }
    out
}

fn sigma_on(sign: SigmaSign, c: &Complex) -> Result<Complex, CatError> {
    sigma_functor(sign, c.group_degree()).apply(c)
}

/// Projector checks on `M`: nullity against `P`, `P^λ`, `Q`, `Q^λ`; idempotence; `Σ^+ ≡ Σ^-`.
pub fn sigma_suite(m: &Seed) -> Result<Vec<CheckRecord>, CatError> {
    let mut out = Vec::new();
    let mc = module_complex(m.module.clone());
    let ch = m.character()?;
    let minus = sigma_on(SigmaSign::Minus, &mc)?;
    let plus = sigma_on(SigmaSign::Plus, &mc)?;
    let proj = sigma_symfunc(&ch);
    out.push(decat_record("sigma-minus-euler", m.label.clone(), &minus, &proj)?);
    out.push(decat_record("sigma-plus-euler", m.label.clone(), &plus, &proj)?);
    for sign in [SigmaSign::Minus, SigmaSign::Plus] {
        let tag = if sign == SigmaSign::Minus { "minus" } else { "plus" };
        for lambda in [vec![1], vec![2], vec![1, 1]] {
            let lambda = Partition::from_parts(&lambda);
            let inner = FunctorComplex { terms: [(0, vec![FunctorTerm::p(&lambda)])].into(), diffs: BTreeMap::new() };
            let pm = inner.apply(&mc)?;
            let c = sigma_on(sign, &pm)?;
            let dims = c.homology_dims();
            out.push(CheckRecord::new(&format!("sigma-{tag}-P^({lambda})-null"), m.label.clone(), "0", fmt_dims(&dims), dims.is_empty()));
            let s = sigma_on(sign, &mc)?;
            let qc = FunctorComplex { terms: [(0, vec![FunctorTerm::q(&lambda)])].into(), diffs: BTreeMap::new() }.apply(&s)?;
            let dims = qc.homology_dims();
            out.push(CheckRecord::new(&format!("Q^({lambda})-sigma-{tag}-null"), m.label.clone(), "0", fmt_dims(&dims), dims.is_empty()));
        }
    }
    let base = minus.homology_dims();
    let twice = sigma_on(SigmaSign::Minus, &minus)?.homology_dims();
    out.push(CheckRecord::new("sigma-minus-idempotent", m.label.clone(), fmt_dims(&base), fmt_dims(&twice), twice == base));
    let twice_plus = sigma_on(SigmaSign::Plus, &plus)?.homology_dims();
    let plus_dims = plus.homology_dims();
    out.push(CheckRecord::new("sigma-plus-idempotent", m.label.clone(), fmt_dims(&plus_dims), fmt_dims(&twice_plus), twice_plus == plus_dims));
    out.push(CheckRecord::new("sigma-plus-equals-minus", m.label.clone(), fmt_dims(&base), fmt_dims(&plus_dims), plus_dims == base));
    Ok(out)
}

/// Finitely supported charge-indexed vector of complexes.
#[derive(Clone, Debug, Default)]
pub struct ChargedModuleVector {
    pub entries: BTreeMap<i64, Complex>,
}

impl ChargedModuleVector {
    pub fn single(charge: i64, m: Arc<RepModule>) -> ChargedModuleVector {
        ChargedModuleVector { entries: [(charge, module_complex(m))].into() }
    }

    /// Charge-wise signed Frobenius characteristic.
    pub fn decategorify(&self) -> Result<BosonState, CatError> {
        let mut out = BosonState::zero();
        for (&c, x) in &self.entries {
            out.add_component(c, &x.euler_frobenius()?);
        }
        Ok(out)
    }

    /// Graded homology dimensions per charge, omitting acyclic entries.
    pub fn homology_dims(&self) -> BTreeMap<i64, BTreeMap<i64, usize>> {
        self.entries.iter().map(|(&c, x)| (c, x.homology_dims())).filter(|(_, d)| !d.is_empty()).collect()
    }
}

/// `(Ψ_i v)_{c+1} = B_{i−c−1}(v_c)`.
pub fn fermionic_apply(i: i64, v: &ChargedModuleVector) -> Result<ChargedModuleVector, CatError> {
    let mut out = ChargedModuleVector::default();
    for (&c, x) in &v.entries {
        out.entries.insert(c + 1, apply_step(Step { a: i - c - 1, star: false }, x, false)?);
    }
    Ok(out)
}

/// `(Ψ*_i v)_{c−1} = B*_{i−c}(v_c)`.
pub fn fermionic_star_apply(i: i64, v: &ChargedModuleVector) -> Result<ChargedModuleVector, CatError> {
    let mut out = ChargedModuleVector::default();
    for (&c, x) in &v.entries {
        out.entries.insert(c - 1, apply_step(Step { a: i - c, star: true }, x, false)?);
    }
    Ok(out)
}

/// `Ψ_i`, `Ψ*_i` on `v`: decategorification against the bosonic operators and `Ψ_i² ≃ 0`.
pub fn fermionic_suite(i: i64, charge: i64, m: &Seed) -> Result<Vec<CheckRecord>, CatError> {
    let params = format!("i={i} c={charge} M={}", m.label);
    let v = ChargedModuleVector::single(charge, m.module.clone());
    let b = v.decategorify()?;
    let mut out = Vec::new();
    let w = fermionic_apply(i, &v)?;
    out.push(CheckRecord::eq("psi-decat", params.clone(), boson_psi(i, &b, SYM_CAP)?, w.decategorify()?));
    let ws = fermionic_star_apply(i, &v)?;
    out.push(CheckRecord::eq("psi-star-decat", params.clone(), boson_psi_star(i, &b, SYM_CAP)?, ws.decategorify()?));
    let w2 = fermionic_apply(i, &w)?.homology_dims();
    out.push(CheckRecord::new("psi-squared-null", params, "0", format!("{w2:?}"), w2.is_empty()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symrep::{regular_module, specht_module};

    fn triv0() -> Arc<RepModule> {
        Arc::new(RepModule::trivial(0))
    }

    fn all_pass(r: &[CheckRecord]) {
        for c in r {
            assert!(c.pass, "{c:#?}");
        }
    }

    #[test]
    fn bernstein_on_vacuum_is_one_row() {
        for a in 0..4 {
            let c = bernstein_complex(a, triv0()).unwrap();
            assert_eq!(c.support(), vec![0]);
            assert_eq!(c.euler_frobenius().unwrap(), SymPoly::schur(Partition::row(a as usize)));
        }
        assert!(bernstein_star_complex(1, triv0()).unwrap().is_zero());
        assert_eq!(bernstein_star_complex(0, triv0()).unwrap().homology_dims(), [(0, 1)].into());
    }

    #[test]
    fn bernstein_decategorifies() {
        let s1 = Arc::new(specht_module(&Partition::row(1)).unwrap());
        let c = bernstein_complex(2, s1.clone()).unwrap();
        c.validate().unwrap();
        let want = bernstein(2, &SymPoly::schur(Partition::row(1)), 10).unwrap();
        assert_eq!(c.euler_frobenius().unwrap(), want);
        assert_eq!(c.homology_frobenius().unwrap(), want);
        let m = Arc::new(specht_module(&"2,1".parse().unwrap()).unwrap());
        for a in -2..3 {
            let f = frobenius_char(&m).unwrap();
            assert_eq!(bernstein_complex(a, m.clone()).unwrap().euler_frobenius().unwrap(), bernstein(a, &f, 10).unwrap());
            assert_eq!(bernstein_star_complex(a, m.clone()).unwrap().euler_frobenius().unwrap(), bernstein_star(a, &f, 10).unwrap());
        }
    }

    #[test]
    fn specht_small() {
        for l in ["1", "2", "1,1", "2,1", "3,1", "2,2"] {
            let l: Partition = l.parse().unwrap();
            all_pass(&specht_check(&l, true).unwrap());
        }
        all_pass(&specht_check(&"2,1".parse().unwrap(), false).unwrap());
        all_pass(&dual_annihilation_check(&"2,1".parse().unwrap(), true).unwrap());
        all_pass(&dual_annihilation_check(&"2,1".parse().unwrap(), false).unwrap());
    }

    #[test]
    fn relations_small() {
        let s1 = Seed::new("S:1", specht_module(&Partition::row(1)).unwrap());
        let t0 = Seed::new("trivial:0", RepModule::trivial(0));
        for m in [&t0, &s1] {
            all_pass(&relation_suite_bb(1, 1, m, false).unwrap());
            all_pass(&relation_suite_bb(2, 1, m, false).unwrap());
            all_pass(&relation_suite_bb(0, 1, m, false).unwrap());
            all_pass(&relation_suite_bb(0, 0, m, true).unwrap());
            all_pass(&relation_suite_bb(0, 1, m, true).unwrap());
            all_pass(&relation_suite_bbstar(1, 0, m).unwrap());
            all_pass(&relation_suite_bbstar(0, 0, m).unwrap());
        }
    }

    #[test]
    fn sigma_small() {
        all_pass(&sigma_suite(&Seed::new("trivial:0", RepModule::trivial(0))).unwrap());
        all_pass(&sigma_suite(&Seed::new("reg:1", regular_module(1).unwrap())).unwrap());
    }

    #[test]
    fn fermions_small() {
        all_pass(&fermionic_suite(1, 0, &Seed::new("trivial:0", RepModule::trivial(0))).unwrap());
        all_pass(&fermionic_suite(0, 0, &Seed::new("S:1", specht_module(&Partition::row(1)).unwrap())).unwrap());
    }
}
