//! Categorified Bernstein operators against independent character computations.

use std::collections::BTreeMap;
use std::sync::Arc;

use catbf_core::catbernstein::{compose_bernstein, creation_word, fermionic_suite, Seed};
use catbf_core::partition::enumerate_partitions;
use catbf_core::symrep::branching::{branching_iso_check, Branching};
use catbf_core::symrep::{specht_module, Perm, RepModule};
use catbf_core::{Partition, Q};

/// `χ^λ(μ)` by removing `μ_1`-ribbons from the beta-set of `λ`.
fn mn_character(lambda: &[usize], mu: &[usize]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0;
    for (idx, &x) in beta.iter().enumerate() {
        if x < k || beta.contains(&(x - k)) {
            continue;
        }
        let height = beta.iter().filter(|&&y| y > x - k && y < x).count() as i64;
        let mut nb = beta.clone();
        nb[idx] = x - k;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let l = nb.len();
        let shape: Vec<usize> = nb.iter().enumerate().map(|(i, &b)| b - (l - 1 - i)).filter(|&p| p > 0).collect();
        total += if height % 2 == 0 { 1 } else { -1 } * mn_character(&shape, rest);
    }
    total
}

fn characters(m: &RepModule) -> Vec<Q> {
    let n = m.degree() as usize;
    enumerate_partitions(n).iter().map(|mu| m.character(&Perm::of_cycle_type(mu))).collect()
}

#[test]
fn murnaghan_nakayama_oracle_is_sane() {
    assert_eq!(mn_character(&[2, 1], &[3]), -1);
    assert_eq!(mn_character(&[2, 1], &[1, 1, 1]), 2);
    assert_eq!(mn_character(&[3, 1], &[2, 2]), -1);
    for n in 1..=5 {
        let sum: i64 = enumerate_partitions(n).iter().map(|l| mn_character(l.parts(), &vec![1; n]).pow(2)).sum();
        assert_eq!(sum, (1..=n as i64).product::<i64>());
    }
}

#[test]
fn specht_homology_has_the_irreducible_character() {
    for n in 0..=5 {
        for l in enumerate_partitions(n) {
            let c = compose_bernstein(&creation_word(&l), Arc::new(RepModule::trivial(0)), true).unwrap();
            assert_eq!(c.support(), vec![0], "{l}");
            let h = c.homology(0).module;
            let want: Vec<Q> = enumerate_partitions(n).iter().map(|mu| Q::from(mn_character(l.parts(), mu.parts()))).collect();
            assert_eq!(characters(&h), want, "{l}");
        }
    }
}

#[test]
fn stage_reduction_matches_full_complexes() {
    for n in 1..=4 {
        for l in enumerate_partitions(n) {
            let word = creation_word(&l);
            let seed = Arc::new(RepModule::trivial(0));
            let raw = compose_bernstein(&word, seed.clone(), false).unwrap();
            let red = compose_bernstein(&word, seed, true).unwrap();
            assert!(raw.validate().is_ok());
            assert_eq!(raw.homology_dims(), red.homology_dims(), "{l}");
            assert_eq!(raw.euler_frobenius().unwrap(), red.euler_frobenius().unwrap(), "{l}");
        }
    }
}

#[test]
fn specht_realization_matches_oracle() {
    for n in 1..=5 {
        for l in enumerate_partitions(n) {
            let s = specht_module(&l).unwrap();
            assert!(s.check_relations());
            let want: Vec<Q> = enumerate_partitions(n).iter().map(|mu| Q::from(mn_character(l.parts(), mu.parts()))).collect();
            assert_eq!(characters(&s), want, "{l}");
        }
    }
}

#[test]
fn fermionic_functors_decategorify() {
    let seeds = [Seed::new("S:0", RepModule::trivial(0)), Seed::new("S:1", RepModule::trivial(1)), Seed::new("S:1,1", RepModule::sign(2))];
    for s in &seeds {
        for i in -2..=2 {
            for c in -1..=1 {
                for r in fermionic_suite(i, c, s).unwrap() {
                    assert!(r.pass, "{r:?}");
                }
            }
        }
    }
}

#[test]
fn branching_on_a_two_dimensional_specht_module() {
    let m = Arc::new(specht_module(&Partition::from_parts(&[2, 1])).unwrap());
    let kinds = [
        Branching::QPSwap { n: 1, m: 1 },
        Branching::QStarPSwap { n: 1, m: 1 },
        Branching::PPMerge { m: 1, n: 1 },
        Branching::QLambdaP { mu: Partition::row(2) },
        Branching::PLambdaP { lambda: Partition::column(2) },
    ];
    let mut dims = BTreeMap::new();
    for k in kinds {
        let r = branching_iso_check(&k, m.clone()).unwrap();
        assert!(r.pass, "{r:?}");
        dims.insert(k.label(), r.source_dim);
    }
    // Res Ind M and Ind Res M ⊕ M both have dimension 8 for dim M = 2, n = 3.
    assert_eq!(dims["QP-swap(n=1,m=1)"], 4 * 2);
}
