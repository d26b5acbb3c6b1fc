//! Direct-sum decompositions of composites of `P^λ` and `Q^μ`, realized by
//! explicit inclusion/projection maps `ι_s`, `ρ_s` and checked on a module.
//!
//! Each summand comes with a list of candidate composites; the first one whose
//! round trip `ρ_s ∘ ι_s` is a nonzero scalar is used, and `ι_s` is divided by
//! that scalar so that `ρ_s ∘ ι_s = 1`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::functor::{Elementary, Evaluator, FunctorTerm, Letter, RawOp, Transform};
use super::module::RepModule;
use super::perm::Perm;
use super::RepError;
use crate::linalg::Matrix;
use crate::partition::Partition;
use crate::rational::Q;

/// Which decomposition to realize.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branching {
    /// `Q^{(1^n)} P^{(m)} ≅ P^{(m)} Q^{(1^n)} ⊕ P^{(m−1)} Q^{(1^{n−1})}`.
    QStarPSwap { n: usize, m: usize },
    /// `Q^n P^m ≅ ⊕_s (s! C(n,s) C(m,s)) P^{m−s} Q^{n−s}`.
    QPSwap { n: usize, m: usize },
    /// `P^{(n)} P^{(1^m)} ≅ P^{(n,1^m)} ⊕ P^{(n+1,1^{m−1})}`.
    PPStarMerge { n: usize, m: usize },
    /// `P^{(m)} P^{(n)} ≅ ⊕_s P^{(m+n−s,s)}`.
    PPMerge { m: usize, n: usize },
    /// `Q^μ P ≅ P Q^μ ⊕ ⊕_{λ = μ − □} Q^λ`.
    QLambdaP { mu: Partition },
    /// `P^λ P ≅ ⊕_{μ = λ + □} P^μ`.
    PLambdaP { lambda: Partition },
}

impl Branching {
    pub fn label(&self) -> String {
        match self {
            Branching::QStarPSwap { n, m } => format!("QstarP-swap(n={n},m={m})"),
            Branching::QPSwap { n, m } => format!("QP-swap(n={n},m={m})"),
            Branching::PPStarMerge { n, m } => format!("PPstar-merge(n={n},m={m})"),
            Branching::PPMerge { m, n } => format!("PP-merge(m={m},n={n})"),
            Branching::QLambdaP { mu } => format!("QlambdaP(mu={mu})"),
            Branching::PLambdaP { lambda } => format!("PlambdaP(lambda={lambda})"),
        }
    }
}

struct Summand {
    label: String,
    term: FunctorTerm,
    candidates: Vec<(Transform, Transform)>,
}

/// Result of one decomposition check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingReport {
    pub name: String,
    pub source: String,
    pub source_dim: usize,
    pub summands: Vec<SummandReport>,
    pub dims_add_up: bool,
    pub orthogonal: bool,
    pub complete: bool,
    pub intertwiners: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandReport {
    pub label: String,
    pub dim: usize,
    /// Scalar `c` with `ρ ∘ ι = c` before normalization (`None` when the summand vanishes on the module).
    pub scalar: Option<Q>,
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.iter().copied().filter(|&x| x > 0).collect()).expect("valid partition")
}

fn hook(a: usize, legs: usize) -> Partition {
    let mut v = vec![a];
    v.extend(std::iter::repeat_n(1, legs));
    part(&v)
}

/// Moves the `P` block of `Q^n P^m` to the left, one crossing at a time.
pub fn cross_qp_to_pq(n: usize, m: usize) -> Vec<RawOp> {
    let mut ops = Vec::new();
    for j in 0..m {
        for p in (j..j + n).rev() {
            ops.push(RawOp::gen(Elementary::CrossQP, p));
        }
    }
    ops
}

/// Inverse sequence to [`cross_qp_to_pq`]: `P^m Q^n → Q^n P^m`.
pub fn cross_pq_to_qp(m: usize, n: usize) -> Vec<RawOp> {
    cross_qp_to_pq(n, m)
        .into_iter()
        .rev()
        .map(|op| match op {
            RawOp::Gen { pos, .. } => RawOp::gen(Elementary::CrossPQ, pos),
            other => other,
        })
        .collect()
}

fn path(word: &[Letter], ops: Vec<RawOp>) -> Transform {
    Transform::path(word, ops).expect("well-formed composite")
}

fn word(q: usize, p: usize, q_first: bool) -> Vec<Letter> {
    let qs = std::iter::repeat_n(Letter::Q, q);
    let ps = std::iter::repeat_n(Letter::P, p);
    if q_first {
        qs.chain(ps).collect()
    } else {
        ps.chain(qs).collect()
    }
}

/// All strand permutations of a `P`-only word, identity first.
fn p_candidates(len: usize) -> Vec<(Transform, Transform)> {
    let w = vec![Letter::P; len];
    Perm::all(len)
        .into_iter()
        .map(|s| (path(&w, vec![RawOp::p_perm(0, s.clone())]), path(&w, vec![RawOp::p_perm(0, s.inverse())])))
        .collect()
}

fn summands(kind: &Branching) -> (FunctorTerm, Vec<Summand>) {
    use Letter::*;
    match kind {
        Branching::PLambdaP { lambda } => {
            let a = FunctorTerm::p(lambda).then_block(P, &Partition::row(1));
            let k = lambda.size() + 1;
            let s = lambda
                .boxes_added()
                .into_iter()
                .map(|(mu, _)| Summand { label: format!("P^({mu})"), term: FunctorTerm::p(&mu), candidates: p_candidates(k) })
                .collect();
            (a, s)
        }
        Branching::PPMerge { m, n } => {
            let a = FunctorTerm::p(&Partition::row(*m)).then_block(P, &Partition::row(*n));
            let s = (0..=(*m).min(*n))
                .map(|s| {
                    let mu = part(&[m + n - s, s]);
                    Summand { label: format!("P^({mu})"), term: FunctorTerm::p(&mu), candidates: p_candidates(m + n) }
                })
                .collect();
            (a, s)
        }
        Branching::PPStarMerge { n, m } => {
            let a = FunctorTerm::p(&Partition::row(*n)).then_block(P, &Partition::column(*m));
            let mut shapes = vec![hook(*n, *m)];
            if *m >= 1 {
                shapes.push(hook(n + 1, m - 1));
            }
            let s = shapes
                .into_iter()
                .map(|mu| Summand { label: format!("P^({mu})"), term: FunctorTerm::p(&mu), candidates: p_candidates(n + m) })
                .collect();
            (a, s)
        }
        Branching::QLambdaP { mu } => {
            let k = mu.size();
            let a = FunctorTerm::q(mu).then_block(P, &Partition::row(1));
            let src = word(k, 1, true);
            let mut out = vec![Summand {
                label: format!("PQ^({mu})"),
                term: FunctorTerm::p(&Partition::row(1)).then_block(Q, mu),
                candidates: vec![(path(&src, cross_qp_to_pq(k, 1)), path(&word(k, 1, false), cross_pq_to_qp(1, k)))],
            }];
            for (lam, _) in mu.boxes_removed() {
                let tgt = word(k - 1, 0, true);
                let candidates = Perm::all(k)
                    .into_iter()
                    .map(|s| {
                        let r = vec![RawOp::q_perm(0, s.clone()), RawOp::gen(Elementary::CapQP, k - 1)];
                        let i = vec![RawOp::gen(Elementary::CupQP, k - 1), RawOp::q_perm(0, s.inverse())];
                        (path(&src, r), path(&tgt, i))
                    })
                    .collect();
                out.push(Summand { label: format!("Q^({lam})"), term: FunctorTerm::q(&lam), candidates });
            }
            (a, out)
        }
        Branching::QStarPSwap { n, m } => {
            let (n, m) = (*n, *m);
            let a = FunctorTerm::q(&Partition::column(n)).then_block(P, &Partition::row(m));
            let src = word(n, m, true);
            let mut out = vec![Summand {
                label: format!("P^({m})Q^(1^{n})"),
                term: FunctorTerm::p(&Partition::row(m)).then_block(Q, &Partition::column(n)),
                candidates: vec![(path(&src, cross_qp_to_pq(n, m)), path(&word(n, m, false), cross_pq_to_qp(m, n)))],
            }];
            if n >= 1 && m >= 1 {
                let tgt = word(n - 1, m - 1, false);
                let mut candidates = Vec::new();
                for sp in Perm::all(m - 1) {
                    for sq in Perm::all(n - 1) {
                        let mut r = vec![RawOp::gen(Elementary::CapQP, n - 1)];
                        r.extend(cross_qp_to_pq(n - 1, m - 1));
                        let mut i = Vec::new();
                        if m > 1 {
                            r.push(RawOp::p_perm(0, sp.clone()));
                            i.push(RawOp::p_perm(0, sp.inverse()));
                        }
                        if n > 1 {
                            r.push(RawOp::q_perm(m - 1, sq.clone()));
                            i.push(RawOp::q_perm(m - 1, sq.inverse()));
                        }
                        i.extend(cross_pq_to_qp(m - 1, n - 1));
                        i.push(RawOp::gen(Elementary::CupQP, n - 1));
                        candidates.push((path(&src, r), path(&tgt, i)));
                    }
                }
                out.push(Summand {
                    label: format!("P^({})Q^(1^{})", m - 1, n - 1),
                    term: FunctorTerm::p(&Partition::row(m - 1)).then_block(Q, &Partition::column(n - 1)),
                    candidates,
                });
            }
            (a, out)
        }
        Branching::QPSwap { n, m } => {
            let (n, m) = (*n, *m);
            let src = word(n, m, true);
            let a = FunctorTerm::raw(&src);
            let mut out = Vec::new();
            for s in 0..=n.min(m) {
                for ps in subsets(m, s) {
                    for qs in arrangements(n, s) {
                        let tau = matching_perm(n, &qs, true);
                        let sigma = matching_perm(m, &ps, false);
                        let mut r = vec![RawOp::q_perm(0, tau.clone()), RawOp::p_perm(n, sigma.clone())];
                        for c in 0..s {
                            r.push(RawOp::gen(Elementary::CapQP, n - 1 - c));
                        }
                        r.extend(cross_qp_to_pq(n - s, m - s));
                        let mut i = cross_pq_to_qp(m - s, n - s);
                        for c in 0..s {
                            i.push(RawOp::gen(Elementary::CupQP, n - s + c));
                        }
                        i.push(RawOp::p_perm(n, sigma.inverse()));
                        i.push(RawOp::q_perm(0, tau.inverse()));
                        let tgt = word(n - s, m - s, false);
                        let pairs: Vec<String> = qs.iter().zip(&ps).map(|(q, p)| format!("Q{q}-P{p}")).collect();
                        out.push(Summand {
                            label: format!("P^{}Q^{} [{}]", m - s, n - s, pairs.join(",")),
                            term: FunctorTerm::raw(&tgt),
                            candidates: vec![(path(&src, r), path(&tgt, i))],
                        });
                    }
                }
            }
            (a, out)
        }
    }
}

/// Increasing `s`-subsets of `0..m`.
fn subsets(m: usize, s: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for x in start..m {
            cur.push(x);
            rec(x + 1, m, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, s, &mut Vec::new(), &mut out);
    out
}

/// Injective `s`-tuples from `0..n`.
fn arrangements(n: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for sub in subsets(n, s) {
        for p in Perm::all(s) {
            out.push((0..s).map(|i| sub[p.apply(i)]).collect());
        }
    }
    out
}

/// Permutation sending the chosen strands to the capping slots: for `Q` the
/// `i`-th chosen strand goes to `n−1−i`, for `P` to `i`; the rest keep their order.
fn matching_perm(n: usize, chosen: &[usize], q_side: bool) -> Perm {
    let s = chosen.len();
    let mut img = vec![usize::MAX; n];
    for (i, &c) in chosen.iter().enumerate() {
        img[c] = if q_side { n - 1 - i } else { i };
    }
    let mut next = if q_side { 0 } else { s };
    for slot in img.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    Perm::from_images(img).unwrap()
}

/// Builds `ρ_s`, `ι_s` on `M` and checks `ρ_s ι_t = δ_{st}`, `Σ ι_s ρ_s = 1`,
/// the dimension count, and that every map is an intertwiner.
pub fn branching_iso_check(kind: &Branching, m: Arc<RepModule>) -> Result<BranchingReport, RepError> {
    let mut ev = Evaluator::new(m);
    let (a, parts) = summands(kind);
    let a_img = ev.term(&a)?;
    let da = a_img.module.dim();
    let mut rhos = Vec::new();
    let mut iotas = Vec::new();
    let mut reports = Vec::new();
    let mut intertwiners = true;
    for s in &parts {
        let b_img = ev.term(&s.term)?;
        let db = b_img.module.dim();
        let mut chosen = None;
        if db == 0 {
            chosen = Some((Matrix::zeros(0, da), Matrix::zeros(da, 0), None));
        } else {
            for (r, i) in &s.candidates {
                let rm = ev.component(&a, &s.term, r)?;
                let im = ev.component(&s.term, &a, i)?;
                if let Some(c) = rm.mul(&im).as_scalar().filter(|c| !c.is_zero()) {
                    chosen = Some((rm, im.scale(&c.recip()), Some(c)));
                    break;
                }
            }
        }
        let (rm, im, scalar) = chosen.unwrap_or_else(|| (Matrix::zeros(db, da), Matrix::zeros(da, db), Some(Q::zero())));
        intertwiners &= a_img.module.is_intertwiner(&b_img.module, &rm) && b_img.module.is_intertwiner(&a_img.module, &im);
        reports.push(SummandReport { label: s.label.clone(), dim: db, scalar });
        rhos.push(rm);
        iotas.push(im);
    }
    let mut orthogonal = true;
    for (x, r) in rhos.iter().enumerate() {
        for (y, i) in iotas.iter().enumerate() {
            let p = r.mul(i);
            orthogonal &= if x == y { p.is_identity() } else { p.is_zero() };
        }
    }
    let mut total = Matrix::zeros(da, da);
    for (r, i) in rhos.iter().zip(&iotas) {
        total = total.add(&i.mul(r));
    }
    let complete = total.is_identity();
    let dims_add_up = reports.iter().map(|r| r.dim).sum::<usize>() == da;
    Ok(BranchingReport {
        name: kind.label(),
        source: a.label(),
        source_dim: da,
        summands: reports,
        dims_add_up,
        orthogonal,
        complete,
        intertwiners,
        pass: dims_add_up && orthogonal && complete && intertwiners,
    })
}

/// `dim Q^n P^m(M)` against `Σ_s s! C(n,s) C(m,s) dim P^{m−s} Q^{n−s}(M)`.
pub fn qp_dimension_identity(n: usize, m: usize, module: Arc<RepModule>) -> Result<(usize, usize), RepError> {
    let mut ev = Evaluator::new(module);
    let lhs = ev.raw_module(&word(n, m, true))?.dim();
    let mut rhs = 0usize;
    for s in 0..=n.min(m) {
        let mult = binom(n, s) * binom(m, s) * (1..=s).product::<usize>();
        rhs += mult * ev.raw_module(&word(n - s, m - s, false))?.dim();
    }
    Ok((lhs, rhs))
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symrep::specht_module;

    fn check(kind: Branching, m: RepModule) -> BranchingReport {
        let r = branching_iso_check(&kind, Arc::new(m)).unwrap();
        assert!(r.pass, "{r:#?}");
        r
    }

    #[test]
    fn qp_swap_small() {
        let r = check(Branching::QPSwap { n: 1, m: 1 }, RepModule::regular(1).unwrap());
        assert_eq!(r.source_dim, 2);
        assert_eq!(r.summands.iter().map(|s| s.dim).collect::<Vec<_>>(), vec![1, 1]);
        check(Branching::QPSwap { n: 2, m: 2 }, specht_module(&"2,1".parse().unwrap()).unwrap());
        assert_eq!(qp_dimension_identity(2, 3, Arc::new(RepModule::trivial(2))).map(|(a, b)| a == b), Ok(true));
    }

    #[test]
    fn merges() {
        let r = check(Branching::PPMerge { m: 1, n: 1 }, RepModule::trivial(0));
        assert_eq!(r.summands.iter().map(|s| s.dim).collect::<Vec<_>>(), vec![1, 1]);
        check(Branching::PLambdaP { lambda: Partition::row(1) }, RepModule::trivial(0));
        check(Branching::PLambdaP { lambda: "2,1".parse().unwrap() }, RepModule::trivial(1));
        check(Branching::PPStarMerge { n: 2, m: 2 }, RepModule::trivial(0));
    }

    #[test]
    fn mixed_swaps() {
        check(Branching::QStarPSwap { n: 2, m: 2 }, RepModule::regular(2).unwrap());
        check(Branching::QLambdaP { mu: "2,1".parse().unwrap() }, RepModule::regular(3).unwrap());
    }
}
