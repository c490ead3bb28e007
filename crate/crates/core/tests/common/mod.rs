//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use derivlie::qbar::is_cu;
use derivlie::trees::{Node, Weight, WeightedTree};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every CU sequence with last entry >= n, found by scanning all sequences
/// with bounded entries and length; independent of the library's generator.
pub fn brute_force_cu_dims(n: u32, max_degree: i64) -> BTreeMap<i64, usize> {
    let mut dims: BTreeMap<i64, usize> = (i64::from(n)..=max_degree).map(|d| (d, 0)).collect();
    let bound = (max_degree - i64::from(n) + 1) as u32;
    let mut stack: Vec<Vec<u32>> = vec![vec![]];
    while let Some(seq) = stack.pop() {
        let degree = i64::from(n) + seq.iter().map(|&j| i64::from(j) - 1).sum::<i64>();
        let ok = is_cu(&seq) && seq.last().is_none_or(|&l| l >= n);
        if ok && degree <= max_degree {
            *dims.get_mut(&degree).unwrap() += 1;
        }
        if seq.len() < 6 {
            for j in 0..=bound {
                let mut next = vec![j];
                next.extend_from_slice(&seq);
                stack.push(next);
            }
        }
    }
    dims
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Multigraded necklace (Witt) formula for the dimension of the free Lie
/// algebra in multidegree `m`.
pub fn necklace_count(m: &[usize]) -> usize {
    let total: usize = m.iter().sum();
    if total == 0 {
        return 0;
    }
    let g = m.iter().fold(0, |acc, &x| gcd(acc, x));
    let mut sum = BigInt::zero();
    for d in (1..=g).filter(|d| g % d == 0) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let mut term = factorial(total / d);
        for &x in m {
            term /= factorial(x / d);
        }
        sum += term * mu;
    }
    let count: BigInt = sum / total;
    count.try_into().expect("small count")
}

/// A random tree on `labels` with positive rational weights and valid path
/// sums; vertices are placed at random heights in `(0, 1)`.
pub fn random_tree(rng: &mut impl Rng, labels: &[String]) -> WeightedTree {
    assert!(labels.len() >= 2);
    let mut labels = labels.to_vec();
    labels.shuffle(rng);
    let start = random_fraction(rng, &Weight::zero());
    let root = Node::internal(start.clone(), random_children(rng, &labels, &start));
    WeightedTree::new(root).expect("valid random tree")
}

fn random_fraction(rng: &mut impl Rng, above: &Weight) -> Weight {
    let num = rng.gen_range(1..10);
    let t = Weight::new(BigInt::from(num), BigInt::from(10));
    above + (Weight::one() - above) * t
}

fn random_children(rng: &mut impl Rng, labels: &[String], height: &Weight) -> Vec<Node> {
    let parts = rng.gen_range(2..=labels.len().min(3));
    let mut cuts: Vec<usize> = (1..labels.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(parts - 1).collect();
    cuts.sort_unstable();
    let mut groups = Vec::new();
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(labels.len())) {
        groups.push(&labels[prev..c]);
        prev = c;
    }
    groups
        .into_iter()
        .map(|g| {
            if g.len() == 1 {
                Node::leaf(g[0].clone(), Weight::one() - height)
            } else {
                let h = random_fraction(rng, height);
                let w = &h - height;
                Node::internal(w, random_children(rng, g, &h))
            }
        })
        .collect()
}

pub fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}
