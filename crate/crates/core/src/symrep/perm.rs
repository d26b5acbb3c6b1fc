//! Permutations, the group algebra `k[S_n]`, and Young idempotents.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::partition::{syt_count, Partition, StandardTableau};
use crate::rational::Q;

/// A permutation of `{0, …, n−1}` stored by images; `(p·q)(i) = p(q(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    /// Validates that `images` is a bijection of `{0, …, n−1}`.
    pub fn from_images(images: Vec<usize>) -> Option<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(images))
    }

    /// Adjacent transposition `s_i` (1-based `i`), swapping `i−1` and `i`.
    pub fn s(n: usize, i: usize) -> Perm {
        assert!(i >= 1 && i < n, "s_{i} outside S_{n}");
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, i);
        Perm(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x] = i;
        }
        Perm(v)
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.0[i] > self.0[j]).count()).sum()
    }

    /// `+1` or `−1`.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// A reduced word `[w_1, …, w_l]` with `self = s_{w_1} ⋯ s_{w_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut g = self.0.clone();
        let mut rev = Vec::new();
        'outer: loop {
            for i in 0..g.len().saturating_sub(1) {
                if g[i] > g[i + 1] {
                    g.swap(i, i + 1);
                    rev.push(i + 1);
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        rev
    }

    /// A descent `i` (1-based) with `ℓ(self·s_i) < ℓ(self)`, if any.
    pub fn right_descent(&self) -> Option<usize> {
        (0..self.degree().saturating_sub(1)).find(|&i| self.0[i] > self.0[i + 1]).map(|i| i + 1)
    }

    /// `self · s_i`.
    pub fn times_s(&self, i: usize) -> Perm {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// Embeds into `S_n` acting on `offset..offset+k`, fixing everything else.
    pub fn embed(&self, n: usize, offset: usize) -> Perm {
        assert!(offset + self.degree() <= n);
        let mut v: Vec<usize> = (0..n).collect();
        for (i, &x) in self.0.iter().enumerate() {
            v[offset + i] = offset + x;
        }
        Perm(v)
    }

    /// Restriction to `{0, …, k−1}`; every point `≥ k` must be fixed.
    pub fn truncate(&self, k: usize) -> Perm {
        debug_assert!((k..self.degree()).all(|i| self.0[i] == i));
        Perm(self.0[..k].to_vec())
    }

    /// All permutations of degree `n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// The standard element of cycle type `μ`: consecutive cycles `(1 2 … μ_1)(μ_1+1 …)⋯`.
    pub fn of_cycle_type(mu: &Partition) -> Perm {
        let n = mu.size();
        let mut v: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &p in mu.parts() {
            for i in 0..p {
                v[start + i] = start + (i + 1) % p;
            }
            start += p;
        }
        Perm(v)
    }
}

/// All permutations preserving each block of a set partition of `{0, …, n−1}`.
pub fn block_subgroup(n: usize, blocks: &[Vec<usize>]) -> Vec<Perm> {
    let mut out = vec![Perm::identity(n)];
    for block in blocks {
        let k = block.len();
        let local = Perm::all(k);
        let mut next = Vec::with_capacity(out.len() * local.len());
        for g in &out {
            for l in &local {
                let mut v = g.0.clone();
                for (i, &src) in block.iter().enumerate() {
                    v[src] = block[l.0[i]];
                }
                next.push(Perm(v));
            }
        }
        out = next;
    }
    out
}

/// A finite rational combination of permutations of one degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Perm, Q>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { degree: n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_perm(Perm::identity(n))
    }

    pub fn from_perm(p: Perm) -> Self {
        let mut x = Self::zero(p.degree());
        x.add_term(p, Q::one());
        x
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Perm, Q)>) -> Self {
        let mut x = Self::zero(n);
        for (p, c) in terms {
            x.add_term(p, c);
        }
        x
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Perm, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Perm) -> Q {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, p: Perm, c: Q) {
        assert_eq!(p.degree(), self.degree, "degree mismatch");
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        GroupAlgebraElement { degree: self.degree, terms: self.terms.iter().map(|(p, d)| (p.clone(), c * d)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch in product");
        let mut acc: HashMap<Perm, Q> = HashMap::new();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                *acc.entry(p.compose(q)).or_insert_with(Q::zero) += a * b;
            }
        }
        Self::from_terms(self.degree, acc.into_iter().filter(|(_, c)| !c.is_zero()))
    }

    /// Image under `σ ↦ σ^{-1}`.
    pub fn antipode(&self) -> Self {
        Self::from_terms(self.degree, self.terms.iter().map(|(p, c)| (p.inverse(), c.clone())))
    }

    /// Embeds into `k[S_n]` acting on the letters `offset..offset+degree`.
    pub fn embed(&self, n: usize, offset: usize) -> Self {
        Self::from_terms(n, self.terms.iter().map(|(p, c)| (p.embed(n, offset), c.clone())))
    }

    /// If `self = c·other` for a scalar `c`, returns `c`.
    pub fn ratio_to(&self, other: &Self) -> Option<Q> {
        if other.is_zero() {
            return if self.is_zero() { Some(Q::zero()) } else { None };
        }
        let (p, b) = other.terms.iter().next().unwrap();
        let c = &self.coeff(p) / b;
        if *self == other.scale(&c) {
            Some(c)
        } else {
            None
        }
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

static YOUNG: LazyLock<RwLock<HashMap<Partition, Arc<GroupAlgebraElement>>>> = LazyLock::new(Default::default);

/// `e_λ = α_λ · S_row · A_col` on the row-reading tableau, with
/// `α_λ = Π λ_i! Π λ'_j! · f^λ / n!` for normalized symmetrizers.
pub fn young_idempotent(lambda: &Partition) -> Arc<GroupAlgebraElement> {
    if let Some(e) = YOUNG.read().unwrap().get(lambda) {
        return e.clone();
    }
    let n = lambda.size();
    let t = StandardTableau::row_reading(lambda);
    let zero_based = |v: &Vec<usize>| v.iter().map(|x| x - 1).collect::<Vec<_>>();
    let rows: Vec<Vec<usize>> = t.rows().iter().map(zero_based).collect();
    let cols: Vec<Vec<usize>> = t.columns().iter().map(zero_based).collect();
    let row_group = block_subgroup(n, &rows);
    let col_group = block_subgroup(n, &cols);
    let row_norm: u128 = lambda.parts().iter().map(|&p| factorial(p)).product();
    let col_norm: u128 = lambda.conjugate().parts().iter().map(|&p| factorial(p)).product();
    let alpha = Q::from_bigint((row_norm * col_norm * syt_count(lambda)).into()) / Q::from_bigint(factorial(n).into());
    let s = GroupAlgebraElement::from_terms(n, row_group.into_iter().map(|p| (p, Q::new(1, row_norm as i64))));
    let a = GroupAlgebraElement::from_terms(n, col_group.into_iter().map(|q| (q.clone(), Q::new(q.sign(), col_norm as i64))));
    let e = Arc::new(s.mul(&a).scale(&alpha));
    YOUNG.write().unwrap().insert(lambda.clone(), e.clone());
    e
}

/// Whether `e_λ · σ · e_μ = 0` for every `σ ∈ S_n`, computed with the integer
/// (unnormalized) symmetrizer products over a dense multiplication table.
pub fn sandwich_vanishes(lambda: &Partition, mu: &Partition) -> bool {
    let n = lambda.size();
    assert_eq!(n, mu.size());
    let perms = Perm::all(n);
    let index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let dense = |x: &GroupAlgebraElement| -> Vec<i64> {
        // Clear denominators: entries of a Young idempotent share one denominator.
        let l = crate::rational::lcm_denominators(x.terms.values());
        let mut v = vec![0i64; perms.len()];
        for (p, c) in &x.terms {
            let z = c * &Q::from_bigint(l.clone());
            v[index[p]] = z.to_i64().expect("integer entry");
        }
        v
    };
    let a = dense(&young_idempotent(lambda));
    let b = dense(&young_idempotent(mu));
    let a_support: Vec<usize> = (0..perms.len()).filter(|&i| a[i] != 0).collect();
    let b_support: Vec<usize> = (0..perms.len()).filter(|&i| b[i] != 0).collect();
    for sigma in &perms {
        let mut acc = vec![0i64; perms.len()];
        for &i in &a_support {
            let ps = perms[i].compose(sigma);
            for &j in &b_support {
                acc[index[&ps.compose(&perms[j])]] += a[i] * b[j];
            }
        }
        if acc.iter().any(|&x| x != 0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    #[test]
    fn words_and_products() {
        for g in Perm::all(4) {
            let w = g.reduced_word();
            assert_eq!(w.len(), g.inversions());
            let prod = w.iter().fold(Perm::identity(4), |acc, &i| acc.compose(&Perm::s(4, i)));
            assert_eq!(prod, g);
            assert_eq!(g.compose(&g.inverse()), Perm::identity(4));
        }
        assert_eq!(Perm::all(4).len(), 24);
    }

    #[test]
    fn small_idempotents() {
        let half = Q::new(1, 2);
        let e2 = young_idempotent(&Partition::row(2));
        assert_eq!(e2.coeff(&Perm::identity(2)), half);
        assert_eq!(e2.coeff(&Perm::s(2, 1)), half);
        let e11 = young_idempotent(&Partition::column(2));
        assert_eq!(e11.coeff(&Perm::s(2, 1)), -half);
        assert_eq!(*young_idempotent(&Partition::row(1)), GroupAlgebraElement::identity(1));
    }

    #[test]
    fn idempotent_up_to_six() {
        for n in 1..=6 {
            for l in enumerate_partitions(n) {
                let e = young_idempotent(&l);
                assert_eq!(e.mul(&e), *e, "e_{l} not idempotent");
            }
        }
    }

    #[test]
    fn sandwich_orthogonality() {
        let ps = enumerate_partitions(4);
        for a in &ps {
            for b in &ps {
                assert_eq!(sandwich_vanishes(a, b), a != b);
            }
        }
    }
}
