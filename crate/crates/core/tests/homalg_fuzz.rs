//! Seeded random complexes with planted homology.

use std::collections::BTreeMap;

use catbf_core::homalg::{cone, ChainMap, Complex};
use catbf_core::linalg::Matrix;
use catbf_core::Q;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random invertible integer matrix: a product of elementary row operations.
fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    for _ in 0..3 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let c = Q::from(rng.gen_range(-2i64..=2));
        let e = Matrix::from_triplets(n, n, (0..n).map(|k| (k, k, Q::one())).chain([(i, j, c)]));
        m = e.mul(&m);
    }
    m
}

/// Complex on degrees `lo..=hi` with homology `h`, hidden by contractible pairs
/// and a random change of basis. Layout in degree `k`: `[H_k | E_k | F_k]`, `d: E_k ≅ F_{k−1}`.
pub fn planted(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> (Complex, BTreeMap<i64, usize>) {
    let h: BTreeMap<i64, usize> = (lo..=hi).map(|k| (k, rng.gen_range(0..3))).collect();
    let e: BTreeMap<i64, usize> = (lo..=hi).map(|k| (k, if k > lo { rng.gen_range(0..3) } else { 0 })).collect();
    let f = |k: i64| e.get(&(k + 1)).copied().unwrap_or(0);
    let dims: BTreeMap<i64, usize> = (lo..=hi).map(|k| (k, h[&k] + e[&k] + f(k))).collect();
    let bases: BTreeMap<i64, Matrix> = dims.iter().map(|(&k, &n)| (k, random_invertible(rng, n))).collect();
    let mut diffs = BTreeMap::new();
    for k in lo + 1..=hi {
        let (src, tgt) = (dims[&k], dims[&(k - 1)]);
        let off_src = h[&k];
        let off_tgt = h[&(k - 1)] + e[&(k - 1)];
        let d0 = Matrix::from_triplets(tgt, src, (0..e[&k]).map(|i| (off_tgt + i, off_src + i, Q::one())));
        let d = bases[&(k - 1)].mul(&d0).mul(&bases[&k].inverse().unwrap());
        diffs.insert(k, d);
    }
    let planted: BTreeMap<i64, usize> = h.into_iter().filter(|&(_, d)| d > 0).collect();
    (Complex::plain(&dims, diffs).unwrap(), planted)
}

#[test]
fn elimination_preserves_planted_homology() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..60 {
        let (c, h) = planted(&mut rng, -1, 3);
        assert_eq!(c.homology_dims(), h);
        let min = c.eliminate_all();
        assert!(min.support().into_iter().all(|k| min.d(k).is_zero()));
        assert_eq!(min.homology_dims(), h);
        let pivots: Vec<(i64, usize, usize)> =
            c.support().into_iter().flat_map(|k| c.d(k).entries().map(move |(i, j, _)| (k, i, j)).collect::<Vec<_>>()).collect();
        if pivots.is_empty() {
            continue;
        }
        let (k, i, j) = pivots[rng.gen_range(0..pivots.len())];
        let once = c.gaussian_eliminate(k, &[i], &[j]).unwrap();
        assert_eq!(once.total_dim() + 2, c.total_dim());
        assert_eq!(once.homology_dims(), h);
    }
}

#[test]
fn shift_and_sum_move_homology() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let (a, ha) = planted(&mut rng, 0, 2);
        let (b, hb) = planted(&mut rng, 0, 2);
        let shifted: BTreeMap<i64, usize> = ha.iter().map(|(&k, &v)| (k + 2, v)).collect();
        assert_eq!(a.shift(2).homology_dims(), shifted);
        assert!(a.shift(1).validate().is_ok());
        let mut sum = ha.clone();
        for (k, v) in hb {
            *sum.entry(k).or_default() += v;
        }
        assert_eq!(a.direct_sum(&b).unwrap().homology_dims(), sum);
    }
}

#[test]
fn cone_of_identity_is_acyclic() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let (c, _) = planted(&mut rng, 0, 3);
        let id = ChainMap { maps: c.support().into_iter().map(|k| (k, Matrix::identity(c.dim(k)))).collect() };
        let cn = cone(&c, &c, &id).unwrap();
        assert!(cn.complex.validate().is_ok());
        assert!(cn.complex.is_acyclic());
    }
}
