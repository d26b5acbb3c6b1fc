//! Fermionic and bosonic Fock spaces and the isomorphism between them.
//!
//! A semi-infinite monomial `i_1 > i_2 > …` is stored only through its
//! charge `c` and partition `λ`, with `i_j = λ_j + c − j + ½`. Energies are
//! handled as the integers `i_j + ½` inside the slot arithmetic.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::partition::{enumerate_partitions, Partition};
use crate::rational::Q;
use crate::symfunc::{bernstein, bernstein_star, mul_p, SymError, SymPoly};

/// Basis vector `(c, λ)` of fermionic Fock space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FermionBasisVector {
    pub charge: i64,
    pub shape: Partition,
}

impl FermionBasisVector {
    pub fn new(charge: i64, shape: Partition) -> Self {
        FermionBasisVector { charge, shape }
    }

    pub fn vacuum(charge: i64) -> Self {
        FermionBasisVector { charge, shape: Partition::empty() }
    }

    /// First `n` shifted energies `i_j + ½ = λ_j + c − j + 1`.
    pub fn energies(&self, n: usize) -> Vec<i64> {
        (1..=n).map(|j| self.shape.part(j - 1) as i64 + self.charge - j as i64 + 1).collect()
    }

    /// Inverse of [`energies`](Self::energies): the prefix must be followed by a consecutive tail.
    pub fn from_energies(charge: i64, energies: &[i64]) -> Self {
        let parts: Vec<usize> = energies
            .iter()
            .enumerate()
            .map(|(k, &e)| {
                let p = e - charge + k as i64;
                assert!(p >= 0, "energies below the vacuum tail");
                p as usize
            })
            .collect();
        FermionBasisVector { charge, shape: Partition::new(parts).expect("energies not strictly decreasing") }
    }

    pub fn charge_of(&self) -> i64 {
        self.charge
    }

    /// Principal degree `|λ|`.
    pub fn principal_degree(&self) -> usize {
        self.shape.size()
    }

    fn window(&self, j: i64) -> usize {
        self.shape.len() + (self.charge - j + 1).max(0) as usize + 2
    }
}

/// Finite rational combination of fermionic basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FermionState {
    terms: BTreeMap<FermionBasisVector, Q>,
}

/// One serialized `(charge, partition, coefficient)` term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FockRecord {
    pub charge: i64,
    pub partition: Partition,
    pub coefficient: Q,
}

impl FermionState {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(v: FermionBasisVector) -> Self {
        let mut s = Self::zero();
        s.add_term(v, Q::one());
        s
    }

    pub fn vacuum(charge: i64) -> Self {
        Self::basis(FermionBasisVector::vacuum(charge))
    }

    pub fn add_term(&mut self, v: FermionBasisVector, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(v.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&v);
        }
    }

    pub fn terms(&self) -> &BTreeMap<FermionBasisVector, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(v.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        for (v, d) in &self.terms {
            out.add_term(v.clone(), c * d);
        }
        out
    }

    fn map_basis(&self, f: impl Fn(&FermionBasisVector) -> Option<(FermionBasisVector, Q)>) -> Self {
        let mut out = Self::zero();
        for (v, c) in &self.terms {
            if let Some((w, s)) = f(v) {
                out.add_term(w, c * &s);
            }
        }
        out
    }

    pub fn to_records(&self) -> Vec<FockRecord> {
        self.terms
            .iter()
            .map(|(v, c)| FockRecord { charge: v.charge, partition: v.shape.clone(), coefficient: c.clone() })
            .collect()
    }

    pub fn from_records(records: &[FockRecord]) -> Self {
        let mut out = Self::zero();
        for r in records {
            out.add_term(FermionBasisVector::new(r.charge, r.partition.clone()), r.coefficient.clone());
        }
        out
    }
}

/// `ψ_j` on a basis vector: insert energy `j − ½` with sign `(−1)^s`.
pub fn psi_basis(j: i64, v: &FermionBasisVector) -> Option<(FermionBasisVector, Q)> {
    let n = v.window(j);
    let e = v.energies(n);
    if e.contains(&j) || j < e[n - 1] {
        return None;
    }
    let s = e.iter().filter(|&&x| x > j).count();
    let mut ne = e;
    ne.insert(s, j);
    Some((FermionBasisVector::from_energies(v.charge + 1, &ne), Q::sign(s as i64)))
}

/// `ψ*_j` on a basis vector: delete energy `j − ½` at 1-based slot `s` with sign `(−1)^{s+1}`.
pub fn psi_star_basis(j: i64, v: &FermionBasisVector) -> Option<(FermionBasisVector, Q)> {
    let n = v.window(j);
    let e = v.energies(n);
    let pos = e.iter().position(|&x| x == j)?;
    let mut ne = e;
    ne.remove(pos);
    let s = pos as i64 + 1;
    Some((FermionBasisVector::from_energies(v.charge - 1, &ne), Q::sign(s + 1)))
}

pub fn psi(j: i64, v: &FermionState) -> FermionState {
    v.map_basis(|b| psi_basis(j, b))
}

pub fn psi_star(j: i64, v: &FermionState) -> FermionState {
    v.map_basis(|b| psi_star_basis(j, b))
}

/// Bosonic Fock space element `Σ_c t^c f_c`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BosonState {
    terms: BTreeMap<i64, SymPoly>,
}

impl BosonState {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(charge: i64, f: SymPoly) -> Self {
        let mut b = Self::zero();
        b.add_component(charge, &f);
        b
    }

    pub fn add_component(&mut self, charge: i64, f: &SymPoly) {
        let cur = self.terms.remove(&charge).unwrap_or_default().add(f);
        if !cur.is_zero() {
            self.terms.insert(charge, cur);
        }
    }

    pub fn component(&self, charge: i64) -> SymPoly {
        self.terms.get(&charge).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<i64, SymPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_records(&self) -> Vec<FockRecord> {
        sigma_inv(self).to_records()
    }

    pub fn from_records(records: &[FockRecord]) -> Self {
        sigma_iso(&FermionState::from_records(records))
    }
}

/// `σ(c, λ) = t^c s_λ`.
pub fn sigma_iso(v: &FermionState) -> BosonState {
    let mut out = BosonState::zero();
    for (b, c) in &v.terms {
        out.add_component(b.charge, &SymPoly::schur(b.shape.clone()).scale(c));
    }
    out
}

pub fn sigma_inv(b: &BosonState) -> FermionState {
    let mut out = FermionState::zero();
    for (&c, f) in &b.terms {
        for (l, x) in f.terms() {
            out.add_term(FermionBasisVector::new(c, l.clone()), x.clone());
        }
    }
    out
}

/// `ψ_i(t^c f) = t^{c+1} B_{i−c−1}(f)`.
pub fn boson_psi(i: i64, b: &BosonState, cap: usize) -> Result<BosonState, SymError> {
    let mut out = BosonState::zero();
    for (&c, f) in &b.terms {
        out.add_component(c + 1, &bernstein(i - c - 1, f, cap)?);
    }
    Ok(out)
}

/// `ψ*_i(t^c f) = t^{c−1} B*_{i−c}(f)`.
pub fn boson_psi_star(i: i64, b: &BosonState, cap: usize) -> Result<BosonState, SymError> {
    let mut out = BosonState::zero();
    for (&c, f) in &b.terms {
        out.add_component(c - 1, &bernstein_star(i - c, f, cap)?);
    }
    Ok(out)
}

/// Inclusive integer window; empty when `lo > hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Self {
        Window { lo, hi }
    }

    /// The symmetric window `[-r, r]`.
    pub fn symmetric(r: i64) -> Self {
        Window { lo: -r, hi: r }
    }

    pub fn empty() -> Self {
        Window { lo: 1, hi: 0 }
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }
}

/// All basis vectors with `|λ| ≤ max_degree` and charge in the window.
pub fn basis_window(max_degree: usize, charges: Window) -> Vec<FermionBasisVector> {
    let mut out = Vec::new();
    for c in charges.iter() {
        for d in 0..=max_degree {
            for l in enumerate_partitions(d) {
                out.push(FermionBasisVector::new(c, l));
            }
        }
    }
    out
}

/// One failed identity in a Fock-space check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FockMismatch {
    pub check: String,
    pub charge: i64,
    pub partition: Partition,
    pub indices: Vec<i64>,
    pub detail: String,
}

/// Result of a windowed Fock-space check.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FockReport {
    pub checked: usize,
    pub mismatches: Vec<FockMismatch>,
}

impl FockReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn merge(&mut self, other: FockReport) {
        self.checked += other.checked;
        self.mismatches.extend(other.mismatches);
    }
}

/// Fermionic operator signature, used to inject alternative implementations.
pub type FermionOp = fn(i64, &FermionState) -> FermionState;

/// Bosonic operator signature with a degree cap.
pub type BosonOp = fn(i64, &BosonState, usize) -> Result<BosonState, SymError>;

/// Checks `σ∘ψ_i = ψ_i^{bos}∘σ` and the `ψ*` counterpart on the window.
pub fn verify_correspondence(max_degree: usize, charges: Window, indices: Window) -> FockReport {
    verify_correspondence_with(psi, psi_star, max_degree, charges, indices)
}

/// [`verify_correspondence`] with caller-supplied fermionic operators.
pub fn verify_correspondence_with(
    psi_op: FermionOp,
    psi_star_op: FermionOp,
    max_degree: usize,
    charges: Window,
    indices: Window,
) -> FockReport {
    let mut report = FockReport::default();
    if indices.is_empty() {
        return report;
    }
    let cap = max_degree + 2 * (indices.hi.abs().max(indices.lo.abs()) + charges.hi.abs().max(charges.lo.abs())) as usize + 2;
    for v in basis_window(max_degree, charges) {
        let fv = FermionState::basis(v.clone());
        let bv = sigma_iso(&fv);
        for i in indices.iter() {
            let pairs: [(&str, FermionOp, BosonOp); 2] =
                [("psi", psi_op, boson_psi), ("psi_star", psi_star_op, boson_psi_star)];
            for (name, fop, bop) in pairs {
                report.checked += 1;
                let lhs = sigma_iso(&fop(i, &fv));
                let rhs = bop(i, &bv, cap);
                let ok = matches!(&rhs, Ok(r) if *r == lhs);
                if !ok {
                    report.mismatches.push(FockMismatch {
                        check: format!("sigma∘{name} = {name}_bos∘sigma"),
                        charge: v.charge,
                        partition: v.shape.clone(),
                        indices: vec![i],
                        detail: format!("fermionic {:?} vs bosonic {:?}", lhs, rhs),
                    });
                }
            }
        }
    }
    report
}

/// Clifford anticommutators on every basis vector of the window.
pub fn verify_clifford(max_degree: usize, charges: Window, indices: Window) -> FockReport {
    verify_clifford_with(psi, psi_star, max_degree, charges, indices)
}

/// [`verify_clifford`] with injected `ψ`, `ψ*`.
pub fn verify_clifford_with(
    psi: FermionOp,
    psi_star: FermionOp,
    max_degree: usize,
    charges: Window,
    indices: Window,
) -> FockReport {
    let mut report = FockReport::default();
    for v in basis_window(max_degree, charges) {
        let fv = FermionState::basis(v.clone());
        for i in indices.iter() {
            for j in indices.iter() {
                let delta = if i == j { fv.clone() } else { FermionState::zero() };
                let checks = [
                    ("psi_i psi_j + psi_j psi_i = 0", psi(i, &psi(j, &fv)).add(&psi(j, &psi(i, &fv))), FermionState::zero()),
                    (
                        "psi*_i psi*_j + psi*_j psi*_i = 0",
                        psi_star(i, &psi_star(j, &fv)).add(&psi_star(j, &psi_star(i, &fv))),
                        FermionState::zero(),
                    ),
                    ("psi_i psi*_j + psi*_j psi_i = delta", psi(i, &psi_star(j, &fv)).add(&psi_star(j, &psi(i, &fv))), delta),
                ];
                for (name, got, want) in checks {
                    report.checked += 1;
                    if got != want {
                        report.mismatches.push(FockMismatch {
                            check: name.to_string(),
                            charge: v.charge,
                            partition: v.shape.clone(),
                            indices: vec![i, j],
                            detail: format!("{:?}", got.to_records()),
                        });
                    }
                }
            }
        }
    }
    report
}

/// The anticommutation relations of `B_a`, `B*_a` that the Clifford relations become at charge `c`,
/// applied to every `s_λ` of the window.
pub fn verify_bernstein_clifford(max_degree: usize, charges: Window, indices: Window) -> FockReport {
    let b = |a: i64, f: &SymPoly| bernstein(a, f, usize::MAX).expect("uncapped");
    let bs = |a: i64, f: &SymPoly| bernstein_star(a, f, usize::MAX).expect("uncapped");
    let mut report = FockReport::default();
    for v in basis_window(max_degree, charges) {
        let c = v.charge;
        let f = SymPoly::schur(v.shape.clone());
        for i in indices.iter() {
            for j in indices.iter() {
                let delta = if i == j { f.clone() } else { SymPoly::zero() };
                let checks = [
                    (
                        "B_{i-c} B*_{j-c} + B*_{j-c-1} B_{i-c-1} = delta",
                        b(i - c, &bs(j - c, &f)).add(&bs(j - c - 1, &b(i - c - 1, &f))),
                        delta,
                    ),
                    (
                        "B_{i-c-2} B_{j-c-1} + B_{j-c-2} B_{i-c-1} = 0",
                        b(i - c - 2, &b(j - c - 1, &f)).add(&b(j - c - 2, &b(i - c - 1, &f))),
                        SymPoly::zero(),
                    ),
                    (
                        "B*_{i-c+1} B*_{j-c} + B*_{j-c+1} B*_{i-c} = 0",
                        bs(i - c + 1, &bs(j - c, &f)).add(&bs(j - c + 1, &bs(i - c, &f))),
                        SymPoly::zero(),
                    ),
                ];
                for (name, got, want) in checks {
                    report.checked += 1;
                    if got != want {
                        report.mismatches.push(FockMismatch {
                            check: name.to_string(),
                            charge: c,
                            partition: v.shape.clone(),
                            indices: vec![i, j],
                            detail: format!("{got}"),
                        });
                    }
                }
            }
        }
    }
    report
}

/// `Σ_j ψ_{j+1}ψ*_j` on a basis vector, summed over the finite range where terms can be nonzero.
pub fn fermionic_alpha_minus_one(v: &FermionBasisVector) -> FermionState {
    let fv = FermionState::basis(v.clone());
    let lo = v.charge - v.shape.len() as i64 - 2;
    let hi = v.charge + v.shape.part(0) as i64 + 1;
    let mut out = FermionState::zero();
    for j in lo..=hi {
        out = out.add(&psi(j + 1, &psi_star(j, &fv)));
    }
    out
}

/// Checks that `Σ_j ψ_{j+1}ψ*_j` transports to multiplication by `p_1` (that is `α_{−1}`).
pub fn verify_alpha_transport(max_degree: usize, charges: Window) -> FockReport {
    let mut report = FockReport::default();
    for v in basis_window(max_degree, charges) {
        report.checked += 1;
        let lhs = sigma_iso(&fermionic_alpha_minus_one(&v));
        let rhs = BosonState::single(v.charge, mul_p(1, &SymPoly::schur(v.shape.clone())));
        if lhs != rhs {
            report.mismatches.push(FockMismatch {
                check: "sum_j psi_{j+1} psi*_j = alpha_{-1}".into(),
                charge: v.charge,
                partition: v.shape.clone(),
                indices: vec![],
                detail: format!("{:?} vs {:?}", lhs, rhs),
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernstein_clifford_small_window() {
        let r = verify_bernstein_clifford(3, Window::symmetric(1), Window::symmetric(2));
        assert!(r.pass(), "{:?}", r.mismatches.first());
        assert_eq!(r.checked, 3 * 7 * 25 * 3);
    }

    fn fv(c: i64, s: &str) -> FermionState {
        FermionState::basis(FermionBasisVector::new(c, s.parse().unwrap()))
    }

    #[test]
    fn encoding_round_trip() {
        let v = FermionBasisVector::new(2, "3,1".parse().unwrap());
        let e = v.energies(5);
        assert_eq!(e, vec![5, 2, 0, -1, -2]);
        assert_eq!(FermionBasisVector::from_energies(2, &e), v);
    }

    #[test]
    fn psi_on_vacuum() {
        for c in -2..=2 {
            assert_eq!(psi(c + 1, &FermionState::vacuum(c)), FermionState::vacuum(c + 1));
            assert_eq!(psi(c + 2, &FermionState::vacuum(c)), fv(c + 1, "1"));
            for j in c - 3..=c {
                assert!(psi(j, &FermionState::vacuum(c)).is_zero());
            }
            for j in c + 1..=c + 3 {
                assert!(psi_star(j, &FermionState::vacuum(c)).is_zero());
            }
        }
    }

    #[test]
    fn sign_of_deeper_insertion() {
        // ψ_c on (c,(1)) fills the hole below i_1 = c + 3/2: one entry before it.
        assert_eq!(psi(0, &fv(0, "1")), fv(1, "0").scale(&-Q::one()));
    }

    #[test]
    fn boson_examples() {
        let c = 1;
        let vac = BosonState::single(c, SymPoly::one());
        assert_eq!(boson_psi(c + 1, &vac, 10).unwrap(), BosonState::single(c + 1, SymPoly::one()));
        assert_eq!(boson_psi(c + 2, &vac, 10).unwrap(), BosonState::single(c + 1, SymPoly::h(1)));
        let b = BosonState::single(c, SymPoly::h(1));
        let want = bernstein_star(0, &SymPoly::h(1), 10).unwrap();
        assert_eq!(boson_psi_star(c, &b, 10).unwrap(), BosonState::single(c - 1, want));
    }

    #[test]
    fn small_windows() {
        assert!(verify_correspondence(3, Window::symmetric(1), Window::symmetric(2)).pass());
        let empty = verify_correspondence(3, Window::symmetric(1), Window::empty());
        assert!(empty.pass() && empty.checked == 0);
        assert!(verify_clifford(3, Window::symmetric(1), Window::symmetric(2)).pass());
        assert!(verify_alpha_transport(4, Window::symmetric(1)).pass());
    }
}
