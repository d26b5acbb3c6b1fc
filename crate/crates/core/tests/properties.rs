//! Randomized identities for partitions, symmetric functions and Fock space,
//! each checked against an oracle computed here.

use catbf_core::fock::{boson_psi, boson_psi_star, psi, psi_star, sigma_iso, FermionBasisVector, FermionState};
use catbf_core::partition::{enumerate_partitions, syt_count};
use catbf_core::symfunc::{bernstein, bernstein_star, heis_p, heis_q, skew, SymPoly};
use catbf_core::{Partition, Q};
use proptest::prelude::*;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let ps = enumerate_partitions(n);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

/// `n! / Π hooks`.
fn hook_length(l: &Partition) -> u128 {
    let n = l.size() as u128;
    let conj = l.conjugate();
    let mut hooks: u128 = 1;
    for (i, &row) in l.parts().iter().enumerate() {
        for j in 0..row {
            hooks *= (row - j - 1 + conj.part(j) - i - 1 + 1) as u128;
        }
    }
    (1..=n).product::<u128>() / hooks
}

fn b(a: i64, f: &SymPoly) -> SymPoly {
    bernstein(a, f, usize::MAX).unwrap()
}

fn bs(a: i64, f: &SymPoly) -> SymPoly {
    bernstein_star(a, f, usize::MAX).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(l in partition(10)) {
        let c = l.conjugate();
        prop_assert_eq!(c.size(), l.size());
        prop_assert_eq!(c.conjugate(), l.clone());
        prop_assert_eq!(syt_count(&l), hook_length(&l));
        prop_assert_eq!(SymPoly::schur(l.clone()).omega(), SymPoly::schur(c));
    }

    #[test]
    fn bernstein_anticommutation(l in partition(5), m in -4i64..4, n in -4i64..4) {
        let f = SymPoly::schur(l);
        prop_assert!(b(m, &b(n, &f)).add(&b(n - 1, &b(m + 1, &f))).is_zero());
        prop_assert!(bs(m, &bs(n, &f)).add(&bs(n + 1, &bs(m - 1, &f))).is_zero());
        let delta = if m == n { f.clone() } else { SymPoly::zero() };
        prop_assert_eq!(b(m, &bs(n, &f)).add(&bs(n - 1, &b(m - 1, &f))), delta);
    }

    #[test]
    fn heisenberg_commutation(l in partition(6), n in 0usize..4, m in 0usize..4) {
        let f = SymPoly::schur(l);
        let lhs = heis_q(n, &heis_p(m, &f));
        let mut rhs = SymPoly::zero();
        for k in 0..=n.min(m) {
            rhs = rhs.add(&heis_p(m - k, &heis_q(n - k, &f)));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn skew_is_adjoint_to_multiplication(l in partition(5), mu in partition(3), nu in partition(6)) {
        let (f, g, h) = (SymPoly::schur(l), SymPoly::schur(mu), SymPoly::schur(nu));
        let prod = catbf_core::symfunc::multiply(&g, &f);
        prop_assert_eq!(prod.inner(&h), f.inner(&skew(&g, &h)));
    }

    #[test]
    fn correspondence_intertwines(l in partition(5), c in -3i64..3, i in -4i64..4) {
        let v = FermionState::basis(FermionBasisVector::new(c, l));
        let bv = sigma_iso(&v);
        prop_assert_eq!(sigma_iso(&psi(i, &v)), boson_psi(i, &bv, 64).unwrap());
        prop_assert_eq!(sigma_iso(&psi_star(i, &v)), boson_psi_star(i, &bv, 64).unwrap());
    }
}

#[test]
fn vertex_operator_on_vacuum_builds_rows() {
    for a in 0..6 {
        assert_eq!(b(a, &SymPoly::one()), SymPoly::schur(Partition::row(a as usize)));
    }
    assert_eq!(b(-1, &SymPoly::one()), SymPoly::zero());
    assert_eq!(bs(0, &SymPoly::one()), SymPoly::one());
    let s = |p: &[usize]| SymPoly::schur(Partition::from_parts(p));
    assert_eq!(b(1, &s(&[2])), SymPoly::zero());
    assert_eq!(b(0, &s(&[2])), s(&[1, 1]).scale(&Q::from(-1)));
    assert_eq!(b(3, &s(&[2])), s(&[3, 2]));
    assert_eq!(bs(3, &s(&[3, 2])), s(&[2]));
}
