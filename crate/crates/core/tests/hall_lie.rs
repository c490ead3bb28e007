mod common;

use derivlie::freealg::{apply_qbar, bracket, count_basic};
use derivlie::hall::{
    alphabet, bracket_basic, bracket_combinations, gen_basic_products, hall_reduce, is_basic,
    sl_degree, BasicProduct, BracketExpr, Combination, DecoratedProduct, Product,
};
use derivlie::qbar::QbarMonomial;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn single(w: &BasicProduct) -> Combination {
    Combination::single(DecoratedProduct::plain(w.clone()))
}

fn jacobi(a: &BasicProduct, b: &BasicProduct, c: &BasicProduct) -> Combination {
    let mut sum = bracket_combinations(&single(a), &bracket_basic(b, c));
    sum.add_assign(&bracket_combinations(&single(b), &bracket_basic(c, a)));
    sum.add_assign(&bracket_combinations(&single(c), &bracket_basic(a, b)));
    sum
}

#[test]
fn jacobi_exhaustive_two_letters() {
    let words = gen_basic_products(&alphabet(&[2, 3]).unwrap(), 3);
    for a in &words {
        for b in &words {
            for c in &words {
                assert!(jacobi(a, b, c).is_zero(), "Jacobi fails on {a}, {b}, {c}");
            }
        }
    }
}

#[test]
fn jacobi_random_three_letters() {
    let words = gen_basic_products(&alphabet(&[2, 2, 3]).unwrap(), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let a = words.choose(&mut rng).unwrap();
        let b = words.choose(&mut rng).unwrap();
        let c = words.choose(&mut rng).unwrap();
        assert!(jacobi(a, b, c).is_zero(), "Jacobi fails on {a}, {b}, {c}");
    }
}

#[test]
fn squares_are_top_operations() {
    let words = gen_basic_products(&alphabet(&[2, 3]).unwrap(), 4);
    for a in &words {
        let expected = Combination::single(DecoratedProduct::new(
            QbarMonomial::new(vec![sl_degree(a) as u32]),
            a.clone(),
        ));
        assert_eq!(bracket_basic(a, a), expected, "[{a},{a}]");
    }
}

#[test]
fn bracket_is_symmetric() {
    let words = gen_basic_products(&alphabet(&[2, 2, 4]).unwrap(), 3);
    for a in &words {
        for b in &words {
            assert_eq!(bracket_basic(a, b), bracket_basic(b, a));
        }
    }
}

#[test]
fn brackets_with_operations_vanish() {
    let words = gen_basic_products(&alphabet(&[2, 3]).unwrap(), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let a = words.choose(&mut rng).unwrap();
        let b = words.choose(&mut rng).unwrap();
        let d = sl_degree(b) as u32;
        let k = rng.gen_range(d..=d + 6);
        let qb = apply_qbar(k, &single(b)).unwrap();
        assert!(!qb.is_zero());
        assert!(
            bracket(&single(a), &qb).unwrap().is_zero(),
            "[{a}, Q{k} {b}]"
        );
        assert!(bracket(&qb, &single(a)).unwrap().is_zero());
    }
}

#[test]
fn reduced_brackets_are_basic_and_homogeneous() {
    let words = gen_basic_products(&alphabet(&[2, 3, 5]).unwrap(), 3);
    for a in &words {
        for b in &words {
            let r = bracket_basic(a, b);
            let expected = sl_degree(a) + sl_degree(b) - 1;
            for t in r.terms() {
                assert!(is_basic(&t.word.to_product()));
                assert_eq!(t.degree(), expected);
            }
        }
    }
}

#[test]
fn expression_reduction() {
    let x = alphabet(&[2, 3]).unwrap();
    let (x1, x2) = (BracketExpr::Letter(x[0]), BracketExpr::Letter(x[1]));
    let e = BracketExpr::bracket(x2.clone(), x1.clone());
    let r = hall_reduce(&e).unwrap();
    let w = BasicProduct::from_product(&Product::bracket(
        Product::Letter(x[0]),
        Product::Letter(x[1]),
    ))
    .unwrap();
    assert_eq!(r, single(&w));
    let inner = BracketExpr::apply(5, e.clone());
    let r = hall_reduce(&BracketExpr::bracket(x1.clone(), inner)).unwrap();
    assert!(r.is_zero());
    // Q^j below the degree of its argument is zero
    assert!(hall_reduce(&BracketExpr::apply(3, e)).unwrap().is_zero());
}

#[test]
fn mixed_degrees_for_one_letter_are_rejected() {
    let a = alphabet(&[2]).unwrap();
    let b = alphabet(&[3]).unwrap();
    let e = BracketExpr::bracket(BracketExpr::Letter(a[0]), BracketExpr::Letter(b[0]));
    assert!(hall_reduce(&e).is_err());
}

#[test]
fn basic_counts_match_necklace_formula() {
    let mut shapes = Vec::new();
    for a in 0..=8 {
        shapes.push(vec![a]);
        for b in 0..=8 - a {
            shapes.push(vec![a, b]);
            for c in 0..=8 - a - b {
                shapes.push(vec![a, b, c]);
            }
        }
    }
    for m in shapes {
        assert_eq!(
            count_basic(&m),
            common::necklace_count(&m),
            "multidegree {m:?}"
        );
    }
    assert_eq!(count_basic(&[1, 1, 1]), 2);
}

#[test]
fn necklace_oracle_frozen_values() {
    assert_eq!(common::necklace_count(&[1, 1, 1]), 2);
    assert_eq!(common::necklace_count(&[2, 1]), 1);
    assert_eq!(common::necklace_count(&[2, 2]), 1);
    assert_eq!(common::necklace_count(&[3, 3]), 3);
    assert_eq!(common::necklace_count(&[5]), 0);
}
