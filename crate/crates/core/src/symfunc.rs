//! Symmetric functions over exact rationals, in the Schur basis.
//!
//! Products expand one factor into complete homogeneous functions (inverse
//! Kostka matrix) and apply Pieri's rule; skew operators are defined by
//! adjointness against the orthonormal Schur basis. Degree tables and
//! operator results are memoized in process-wide read-mostly caches.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::partition::{enumerate_partitions, horizontal_strips, vertical_strips, Partition};
use crate::rational::Q;

/// The five classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Schur,
    Complete,
    Elementary,
    #[serde(rename = "powersum")]
    PowerSum,
    Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("degree {needed} exceeds the degree cap {cap}")]
    DegreeCap { needed: usize, cap: usize },
    #[error("alpha index must be nonzero")]
    ZeroAlpha,
    #[error("malformed symmetric function record: {0}")]
    Record(String),
}

/// A finite rational combination of Schur functions; no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymPoly {
    terms: BTreeMap<Partition, Q>,
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("{}*s[{}]", c, l)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl SymPoly {
    pub fn zero() -> SymPoly {
        SymPoly::default()
    }

    pub fn one() -> SymPoly {
        SymPoly::schur(Partition::empty())
    }

    pub fn constant(c: Q) -> SymPoly {
        SymPoly::from_terms([(Partition::empty(), c)])
    }

    pub fn schur(lambda: Partition) -> SymPoly {
        SymPoly::from_terms([(lambda, Q::one())])
    }

    /// `h_n = s_(n)`.
    pub fn h(n: usize) -> SymPoly {
        SymPoly::schur(Partition::row(n))
    }

    /// `e_n = s_(1^n)`.
    pub fn e(n: usize) -> SymPoly {
        SymPoly::schur(Partition::column(n))
    }

    /// Power sum `p_n` (`p_0 = 1`).
    pub fn p(n: usize) -> SymPoly {
        if n == 0 {
            return SymPoly::one();
        }
        mul_p(n, &SymPoly::one())
    }

    /// Builds from Schur coefficients, summing duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Q)>) -> SymPoly {
        let mut out = SymPoly::zero();
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Schur coefficient of `s_λ`.
    pub fn coeff(&self, lambda: &Partition) -> Q {
        self.terms.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    /// Largest degree present (0 for the zero function).
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|l| l.size()).max().unwrap_or(0)
    }

    pub fn homogeneous_component(&self, d: usize) -> SymPoly {
        SymPoly { terms: self.terms.iter().filter(|(l, _)| l.size() == d).map(|(l, c)| (l.clone(), c.clone())).collect() }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|l| l.size()).collect();
        d.dedup();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero();
        }
        SymPoly { terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect() }
    }

    /// Hall inner product; Schur functions are orthonormal.
    pub fn inner(&self, other: &SymPoly) -> Q {
        self.terms.iter().filter_map(|(l, c)| other.terms.get(l).map(|d| c * d)).sum()
    }

    /// The involution `ω(s_λ) = s_{λ^t}`.
    pub fn omega(&self) -> SymPoly {
        SymPoly::from_terms(self.terms.iter().map(|(l, c)| (l.conjugate(), c.clone())))
    }

    /// Applies a linear map defined on Schur functions.
    pub fn map_schur(&self, f: impl Fn(&Partition) -> SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for (l, c) in &self.terms {
            for (m, d) in f(l).terms {
                out.add_term(m, c * &d);
            }
        }
        out
    }

    fn try_map_schur(&self, f: impl Fn(&Partition) -> Result<SymPoly, SymError>) -> Result<SymPoly, SymError> {
        let mut out = SymPoly::zero();
        for (l, c) in &self.terms {
            for (m, d) in f(l)?.terms {
                out.add_term(m, c * &d);
            }
        }
        Ok(out)
    }

    /// Coefficients in another basis, in canonical partition order.
    pub fn to_basis(&self, basis: Basis) -> BTreeMap<Partition, Q> {
        let mut out: BTreeMap<Partition, Q> = BTreeMap::new();
        for d in self.degrees() {
            let t = tables(d);
            // e-coefficients of f are the h-coefficients of ω f.
            let src = if basis == Basis::Elementary { self.omega() } else { self.clone() };
            let a: Vec<Q> = t.parts.iter().map(|l| src.coeff(l)).collect();
            let n = t.parts.len();
            for (j, mu) in t.parts.iter().enumerate() {
                let c: Q = match basis {
                    Basis::Schur => a[j].clone(),
                    // s_λ = Σ_μ Kinv[μ][λ]·h_μ
                    Basis::Complete | Basis::Elementary => (0..n).map(|i| &a[i] * &t.kostka_inv[j][i]).sum(),
                    // s_λ = Σ_μ K[λ][μ]·m_μ
                    Basis::Monomial => (0..n).map(|i| &a[i] * &t.kostka[i][j]).sum(),
                    // s_λ = Σ_μ χ^λ(μ)/z_μ · p_μ
                    Basis::PowerSum => {
                        let s: Q = (0..n).map(|i| &a[i] * &t.chi[i][j]).sum();
                        s / Q::from(mu.z() as usize)
                    }
                };
                if !c.is_zero() {
                    out.insert(mu.clone(), c);
                }
            }
        }
        out
    }

    /// Builds from coefficients in any basis.
    pub fn from_basis(basis: Basis, coeffs: &BTreeMap<Partition, Q>) -> SymPoly {
        let mut out = SymPoly::zero();
        for (mu, c) in coeffs {
            out = out.add(&basis_element(basis, mu).scale(c));
        }
        out
    }

    /// JSON records `{basis, partition, numerator, denominator}` in canonical order.
    pub fn to_records(&self, basis: Basis) -> Vec<SymRecord> {
        self.to_basis(basis)
            .into_iter()
            .map(|(l, c)| SymRecord { basis, partition: l, numerator: c.numer().to_string(), denominator: c.denom().to_string() })
            .collect()
    }

    pub fn from_records(records: &[SymRecord]) -> Result<SymPoly, SymError> {
        let mut out = SymPoly::zero();
        for r in records {
            let c: Q = format!("{}/{}", r.numerator, r.denominator).parse().map_err(|_| SymError::Record(format!("{:?}", r)))?;
            out = out.add(&basis_element(r.basis, &r.partition).scale(&c));
        }
        Ok(out)
    }
}

/// One serialized term of a symmetric function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymRecord {
    pub basis: Basis,
    pub partition: Partition,
    pub numerator: String,
    pub denominator: String,
}

impl Serialize for SymPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_records(Basis::Schur).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<SymPoly, D::Error> {
        let records = Vec::<SymRecord>::deserialize(d)?;
        SymPoly::from_records(&records).map_err(serde::de::Error::custom)
    }
}

/// The basis element `b_μ` expanded in Schur functions.
pub fn basis_element(basis: Basis, mu: &Partition) -> SymPoly {
    let t = tables(mu.size());
    let j = t.index[mu];
    let n = t.parts.len();
    match basis {
        Basis::Schur => SymPoly::schur(mu.clone()),
        Basis::Complete => SymPoly::from_terms((0..n).map(|i| (t.parts[i].clone(), t.kostka[i][j].clone()))),
        Basis::Elementary => SymPoly::from_terms((0..n).map(|i| (t.parts[i].conjugate(), t.kostka[i][j].clone()))),
        // m_μ = Σ_λ Kinv[μ][λ]·s_λ
        Basis::Monomial => SymPoly::from_terms((0..n).map(|i| (t.parts[i].clone(), t.kostka_inv[j][i].clone()))),
        Basis::PowerSum => SymPoly::from_terms((0..n).map(|i| (t.parts[i].clone(), t.chi[i][j].clone()))),
    }
}

/// Precomputed change-of-basis data for one degree.
pub struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `kostka[λ][μ]` = coefficient of `s_λ` in `h_μ`.
    pub kostka: Vec<Vec<Q>>,
    pub kostka_inv: Vec<Vec<Q>>,
    /// `chi[λ][μ]` = irreducible character `χ^λ` on cycle type `μ`.
    pub chi: Vec<Vec<Q>>,
}

static TABLES: LazyLock<RwLock<HashMap<usize, Arc<DegreeTables>>>> = LazyLock::new(Default::default);

/// Change-of-basis tables for degree `n`, built once per process.
pub fn tables(n: usize) -> Arc<DegreeTables> {
    if let Some(t) = TABLES.read().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build_tables(n));
    TABLES.write().unwrap().entry(n).or_insert(t).clone()
}

fn build_tables(n: usize) -> DegreeTables {
    let parts = enumerate_partitions(n);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let m = parts.len();
    let mut kostka = vec![vec![Q::zero(); m]; m];
    let mut chi = vec![vec![Q::zero(); m]; m];
    for (j, mu) in parts.iter().enumerate() {
        let mut hmu = SymPoly::one();
        let mut pmu = SymPoly::one();
        for &k in mu.parts().iter().rev() {
            hmu = mul_h(k, &hmu);
            pmu = mul_p(k, &pmu);
        }
        for (l, c) in hmu.terms {
            kostka[index[&l]][j] = c;
        }
        for (l, c) in pmu.terms {
            chi[index[&l]][j] = c;
        }
    }
    // K is upper unitriangular in canonical order; back-substitute column by column.
    let mut kostka_inv = vec![vec![Q::zero(); m]; m];
    #[allow(clippy::needless_range_loop)]
    for c in 0..m {
        kostka_inv[c][c] = Q::one();
        for i in (0..c).rev() {
            let s: Q = (i + 1..=c).filter(|&k| !kostka[i][k].is_zero()).map(|k| &kostka[i][k] * &kostka_inv[k][c]).sum();
            kostka_inv[i][c] = -s;
        }
    }
    DegreeTables { parts, index, kostka, kostka_inv, chi }
}

/// Pieri rule: `h_k · f`.
pub fn mul_h(k: usize, f: &SymPoly) -> SymPoly {
    f.map_schur(|l| SymPoly::from_terms(horizontal_strips(l, k).into_iter().map(|m| (m, Q::one()))))
}

/// Dual Pieri rule: `e_k · f`.
pub fn mul_e(k: usize, f: &SymPoly) -> SymPoly {
    f.map_schur(|l| SymPoly::from_terms(vertical_strips(l, k).into_iter().map(|m| (m, Q::one()))))
}

/// All `μ ⊇ λ` with `μ/λ` a border strip of size `k`, with sign `(−1)^{height}`.
pub fn add_ribbons(lambda: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let len = lambda.len() + k;
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        let t = b + k;
        if beta.contains(&t) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b && x < t).count() as i64;
        let mut nb = beta.clone();
        nb[idx] = t;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = nb.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).collect();
        out.push((Partition::new(parts).unwrap(), if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Murnaghan–Nakayama rule: `p_k · f` for `k ≥ 1`.
pub fn mul_p(k: usize, f: &SymPoly) -> SymPoly {
    assert!(k >= 1);
    f.map_schur(|l| SymPoly::from_terms(add_ribbons(l, k).into_iter().map(|(m, s)| (m, Q::from_int(s)))))
}

/// Row or column shape with a scalar, if `f` is a single such Schur term.
fn pieri_shape(f: &SymPoly) -> Option<(bool, usize, Q)> {
    if f.terms.len() != 1 {
        return None;
    }
    let (l, c) = f.terms.iter().next().unwrap();
    if l.len() <= 1 {
        Some((true, l.size(), c.clone()))
    } else if l.part(0) == 1 {
        Some((false, l.size(), c.clone()))
    } else {
        None
    }
}

/// Exact product; one factor is expanded into `h_μ` and applied by Pieri.
pub fn multiply(f: &SymPoly, g: &SymPoly) -> SymPoly {
    for (a, b) in [(f, g), (g, f)] {
        if let Some((is_row, k, c)) = pieri_shape(a) {
            let r = if is_row { mul_h(k, b) } else { mul_e(k, b) };
            return r.scale(&c);
        }
    }
    let (expand, other) = if f.max_degree() <= g.max_degree() { (f, g) } else { (g, f) };
    let mut out = SymPoly::zero();
    for (mu, c) in expand.to_basis(Basis::Complete) {
        let mut acc = other.clone();
        for &k in mu.parts().iter().rev() {
            acc = mul_h(k, &acc);
        }
        out = out.add(&acc.scale(&c));
    }
    out
}

static SKEW_MEMO: LazyLock<RwLock<HashMap<(Partition, Partition), SymPoly>>> = LazyLock::new(Default::default);

/// `s_μ^⊥ s_λ = Σ_ν ⟨s_λ, s_μ s_ν⟩ s_ν`.
pub fn skew_schur(mu: &Partition, lambda: &Partition) -> SymPoly {
    let key = (mu.clone(), lambda.clone());
    if let Some(v) = SKEW_MEMO.read().unwrap().get(&key) {
        return v.clone();
    }
    let mut out = SymPoly::zero();
    if lambda.size() >= mu.size() && lambda.contains(mu) {
        let target = SymPoly::schur(lambda.clone());
        for nu in enumerate_partitions(lambda.size() - mu.size()) {
            if !lambda.contains(&nu) {
                continue;
            }
            let c = target.inner(&multiply(&SymPoly::schur(mu.clone()), &SymPoly::schur(nu.clone())));
            out.add_term(nu, c);
        }
    }
    SKEW_MEMO.write().unwrap().insert(key, out.clone());
    out
}

/// `g^⊥ f`, the adjoint of multiplication by `g`.
pub fn skew(g: &SymPoly, f: &SymPoly) -> SymPoly {
    let mut out = SymPoly::zero();
    for (mu, a) in &g.terms {
        for (lambda, b) in &f.terms {
            let c = a * b;
            for (nu, d) in skew_schur(mu, lambda).terms {
                out.add_term(nu, &c * &d);
            }
        }
    }
    out
}

fn check_cap(needed: usize, cap: usize) -> Result<(), SymError> {
    if needed > cap {
        Err(SymError::DegreeCap { needed, cap })
    } else {
        Ok(())
    }
}

type OpKey = (bool, i64, Partition);
static BERNSTEIN_MEMO: LazyLock<RwLock<HashMap<OpKey, SymPoly>>> = LazyLock::new(Default::default);

fn memo_op(key: OpKey, compute: impl FnOnce() -> SymPoly) -> SymPoly {
    if let Some(v) = BERNSTEIN_MEMO.read().unwrap().get(&key) {
        return v.clone();
    }
    let v = compute();
    BERNSTEIN_MEMO.write().unwrap().insert(key, v.clone());
    v
}

fn bernstein_schur(a: i64, lambda: &Partition) -> SymPoly {
    memo_op((false, a, lambda.clone()), || {
        let n = lambda.size() as i64;
        let mut out = SymPoly::zero();
        for m in 0.max(-a)..=n {
            let perp = skew_schur(&Partition::column(m as usize), lambda);
            out = out.add(&mul_h((a + m) as usize, &perp).scale(&Q::sign(m)));
        }
        out
    })
}

fn bernstein_star_schur(a: i64, lambda: &Partition) -> SymPoly {
    memo_op((true, a, lambda.clone()), || {
        let n = lambda.size() as i64;
        let mut out = SymPoly::zero();
        for k in 0.max(-a)..=(n - a) {
            let perp = skew_schur(&Partition::row((k + a) as usize), lambda);
            out = out.add(&mul_e(k as usize, &perp).scale(&Q::sign(k)));
        }
        out
    })
}

/// Bernstein creation operator `B_a f = Σ_{m ≥ max(0,−a)} (−1)^m h_{a+m} e_m^⊥ f`.
pub fn bernstein(a: i64, f: &SymPoly, cap: usize) -> Result<SymPoly, SymError> {
    f.try_map_schur(|l| {
        let d = l.size() as i64 + a;
        if d > 0 {
            check_cap(d as usize, cap)?;
        }
        Ok(bernstein_schur(a, l))
    })
}

/// Bernstein annihilation operator `B*_a f = Σ_n (−1)^n e_n h_{n+a}^⊥ f`.
pub fn bernstein_star(a: i64, f: &SymPoly, cap: usize) -> Result<SymPoly, SymError> {
    f.try_map_schur(|l| {
        let d = l.size() as i64 - a;
        if d > 0 {
            check_cap(d as usize, cap)?;
        }
        Ok(bernstein_star_schur(a, l))
    })
}

/// `p^{(n)}`: multiplication by `h_n`.
pub fn heis_p(n: usize, f: &SymPoly) -> SymPoly {
    mul_h(n, f)
}

/// `q^{(n)}`: the skew operator `h_n^⊥`.
pub fn heis_q(n: usize, f: &SymPoly) -> SymPoly {
    skew(&SymPoly::h(n), f)
}

/// `p^{(1^n)}`: multiplication by `e_n`.
pub fn heis_p_col(n: usize, f: &SymPoly) -> SymPoly {
    mul_e(n, f)
}

/// `q^{(1^n)}`: the skew operator `e_n^⊥`.
pub fn heis_q_col(n: usize, f: &SymPoly) -> SymPoly {
    skew(&SymPoly::e(n), f)
}

/// `α_{−n} = n·p_n` (multiplication) and `α_n = p_n^⊥`.
pub fn heis_alpha(k: i64, f: &SymPoly) -> Result<SymPoly, SymError> {
    match k {
        0 => Err(SymError::ZeroAlpha),
        k if k < 0 => {
            let n = (-k) as usize;
            Ok(mul_p(n, f).scale(&Q::from(n)))
        }
        k => Ok(skew(&SymPoly::p(k as usize), f)),
    }
}

/// Which half vertex operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Half {
    /// `Γ_−(z) = Σ_m p^{(m)} z^m`.
    Minus,
    /// `Γ_+(1/z) = Σ_m q^{(m)} z^m`.
    Plus,
}

/// Coefficient of `z^k` of a half vertex operator (or its inverse) applied to `f`.
pub fn gamma_half(side: Half, k: usize, f: &SymPoly, inverse: bool, cap: usize) -> Result<SymPoly, SymError> {
    let sign = if inverse { Q::sign(k as i64) } else { Q::one() };
    let out = match (side, inverse) {
        (Half::Minus, false) => {
            check_cap(f.max_degree() + k, cap)?;
            mul_h(k, f)
        }
        (Half::Minus, true) => {
            check_cap(f.max_degree() + k, cap)?;
            mul_e(k, f)
        }
        (Half::Plus, false) => heis_q(k, f),
        (Half::Plus, true) => heis_q_col(k, f),
    };
    Ok(out.scale(&sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> SymPoly {
        SymPoly::schur(x.parse().unwrap())
    }

    #[test]
    fn pieri_products() {
        assert_eq!(multiply(&SymPoly::h(2), &s("1")), s("3").add(&s("2,1")));
        assert_eq!(multiply(&SymPoly::e(2), &s("1")), s("2,1").add(&s("1,1,1")));
        assert_eq!(multiply(&SymPoly::one(), &s("2,1")), s("2,1"));
    }

    #[test]
    fn general_product_matches_littlewood_richardson() {
        // s_21 · s_21 = s_42 + s_411 + s_33 + 2 s_321 + s_3111 + s_222 + s_2211
        let got = multiply(&s("2,1"), &s("2,1"));
        let want = SymPoly::from_terms(
            [("4,2", 1), ("4,1,1", 1), ("3,3", 1), ("3,2,1", 2), ("3,1,1,1", 1), ("2,2,2", 1), ("2,2,1,1", 1)]
                .iter()
                .map(|(l, c)| (l.parse().unwrap(), Q::from_int(*c))),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn skew_examples() {
        assert_eq!(skew(&SymPoly::e(1), &s("2,1")), s("2").add(&s("1,1")));
        assert!(skew(&SymPoly::h(3), &s("2,1")).is_zero());
        assert_eq!(skew(&SymPoly::one(), &s("2,1")), s("2,1"));
    }

    #[test]
    fn ribbons() {
        let r = add_ribbons(&Partition::empty(), 2);
        assert_eq!(r, vec![("2".parse().unwrap(), 1), ("1,1".parse().unwrap(), -1)]);
    }

    #[test]
    fn bernstein_examples() {
        let one = SymPoly::one();
        assert_eq!(bernstein(3, &one, 10).unwrap(), SymPoly::h(3));
        assert!(bernstein(-1, &one, 10).unwrap().is_zero());
        let s21 = bernstein(2, &bernstein(1, &one, 10).unwrap(), 10).unwrap();
        assert_eq!(s21, s("2,1"));
        let back = bernstein_star(1, &bernstein_star(2, &s21, 10).unwrap(), 10).unwrap();
        assert_eq!(back, one);
        assert_eq!(bernstein(4, &one, 3), Err(SymError::DegreeCap { needed: 4, cap: 3 }));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(heis_alpha(1, &SymPoly::p(1)).unwrap(), SymPoly::one());
        assert_eq!(heis_alpha(-2, &SymPoly::one()).unwrap(), SymPoly::p(2).scale(&Q::from_int(2)));
        assert!(heis_alpha(0, &SymPoly::one()).is_err());
    }

    #[test]
    fn gamma_examples() {
        let f = s("2,1");
        assert_eq!(gamma_half(Half::Minus, 0, &f, false, 10).unwrap(), f);
        assert_eq!(gamma_half(Half::Plus, 2, &s("2"), false, 10).unwrap(), SymPoly::one());
    }

    #[test]
    fn records_round_trip() {
        let f = s("2,1").add(&s("3").scale(&Q::new(-1, 2)));
        for b in [Basis::Schur, Basis::Complete, Basis::Elementary, Basis::PowerSum, Basis::Monomial] {
            let rec = f.to_records(b);
            assert_eq!(SymPoly::from_records(&rec).unwrap(), f);
        }
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<SymPoly>(&json).unwrap(), f);
    }
}
