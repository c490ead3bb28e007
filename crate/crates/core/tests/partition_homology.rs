use std::collections::BTreeMap;

use derivlie::partition::{
    build_complex, enumerate_partitions, homology, homology_of, refines, ActionCalculator,
    FlagChain, Permutation,
};
use derivlie::BitMatrix;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Strict chains `0̂ < λ_1 < … < λ_m < 1̂` counted by number of interior
/// entries, straight from the refinement relation.
fn chain_counts_by_interior(n: usize) -> Vec<usize> {
    let parts = enumerate_partitions(n).unwrap();
    let interior: Vec<_> = parts
        .iter()
        .filter(|p| p.num_blocks() != 1 && p.num_blocks() != n)
        .collect();
    let m = interior.len();
    let below = |i: usize, j: usize| i != j && refines(interior[i], interior[j]).unwrap();
    // paths[len][j]: chains of `len + 1` interior entries ending at j
    let mut counts = vec![1];
    let mut paths = vec![1usize; m];
    while paths.iter().any(|&c| c > 0) {
        counts.push(paths.iter().sum());
        paths = (0..m)
            .map(|j| (0..m).filter(|&i| below(i, j)).map(|i| paths[i]).sum())
            .collect();
    }
    counts
}

#[test]
fn chain_counts_match_refinement_oracle() {
    for n in 2..=5 {
        let pc = build_complex(n).unwrap();
        let by_simplex = pc.chain_counts();
        let oracle = chain_counts_by_interior(n);
        assert_eq!(by_simplex[0], 0);
        assert_eq!(&by_simplex[1..], &oracle[..], "n = {n}");
    }
}

#[test]
fn boundaries_square_to_zero() {
    for n in 2..=6 {
        let pc = build_complex(n).unwrap();
        let c = pc.complex();
        for k in 1..n - 1 {
            assert!(
                c.boundary(k).composes_to_zero(c.boundary(k + 1)),
                "n = {n}, k = {k}"
            );
        }
    }
}

#[test]
fn homology_is_concentrated() {
    for n in 2..=6 {
        let h = homology(n).unwrap();
        let expected = BTreeMap::from([(n - 1, factorial(n - 1))]);
        assert_eq!(h.nonzero_dims(), expected, "n = {n}");
        let shifted = h.interior_dims();
        assert_eq!(shifted.get(&(n - 2)), Some(&factorial(n - 1)));
        assert_eq!(shifted.values().sum::<usize>(), factorial(n - 1));
    }
}

#[test]
fn seven_points() {
    let h = homology(7).unwrap();
    assert_eq!(h.nonzero_dims(), BTreeMap::from([(6, 720)]));
}

#[test]
fn euler_characteristic() {
    for n in 2..=6 {
        let counts = build_complex(n).unwrap().chain_counts();
        let chi: i64 = counts
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| {
                if (k - 1) % 2 == 0 {
                    c as i64
                } else {
                    -(c as i64)
                }
            })
            .sum();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(chi, sign * factorial(n - 1) as i64, "n = {n}");
    }
}

#[test]
fn cycle_basis_vectors_are_cycles() {
    let pc = build_complex(4).unwrap();
    let h = homology_of(&pc).unwrap();
    let basis = &h.cycle_basis[&3];
    assert_eq!(basis.len(), 6);
    let d = pc.complex().boundary(3).to_dense();
    for z in basis {
        assert!(d.mul_vec(z).is_zero());
    }
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::new(v).unwrap()
}

#[test]
fn action_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in 2..=5 {
        let pc = build_complex(n).unwrap();
        let h = homology_of(&pc).unwrap();
        let calc = ActionCalculator::new(&pc, &h);
        assert_eq!(calc.dimension(), factorial(n - 1));
        let id = calc.action(&Permutation::identity(n)).unwrap().matrix;
        assert_eq!(id, BitMatrix::identity(factorial(n - 1)));
        for _ in 0..20 {
            let s = random_permutation(&mut rng, n);
            let t = random_permutation(&mut rng, n);
            let st = s.compose(&t).unwrap();
            let ms = calc.action(&s).unwrap().matrix;
            let mt = calc.action(&t).unwrap().matrix;
            let mst = calc.action(&st).unwrap().matrix;
            assert_eq!(mst, ms.mul(&mt), "n = {n}, {s:?} after {t:?}");
            assert_eq!(ms.rank(), factorial(n - 1));
        }
    }
}

#[test]
fn permuted_chains_stay_chains() {
    let pc = build_complex(4).unwrap();
    let p = Permutation::new(vec![3, 1, 4, 2]).unwrap();
    for k in 1..4 {
        for chain in pc.generators(k) {
            let moved = FlagChain::new(
                4,
                chain
                    .interior
                    .iter()
                    .map(|q| q.permute(&p).unwrap())
                    .collect(),
            )
            .unwrap();
            assert!(pc.generator_index(&moved).is_some());
        }
    }
}

#[test]
fn out_of_range_sizes_are_rejected() {
    assert!(build_complex(1).is_err());
    assert!(build_complex(8).is_err());
    assert!(enumerate_partitions(10).is_err());
}
