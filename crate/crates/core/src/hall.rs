//! Basic products and the bracket of free allowable R̄-ΣLie algebras.
//!
//! Basic products are ordered by weight first. Within one weight the order is
//! structural: letters by index, brackets lexicographically by
//! `(left, right)`. Any within-weight order gives a Hall basis; fixing this
//! one makes every listing reproducible.
//!
//! Degrees follow the shifted convention: a product of `ℓ` letters with total
//! letter degree `d` sits in degree `d - (ℓ - 1)`, since each bracket lowers
//! degree by one.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::qbar::{reduce_against, QbarMonomial};

/// A generator `x_i` of degree at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    index: u32,
    degree: u32,
}

impl Letter {
    pub fn new(index: u32, degree: u32) -> Result<Self> {
        if degree < 2 {
            return Err(Error::DegreeBelowTwo(i64::from(degree)));
        }
        Ok(Self { index, degree })
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

/// Letters `x_1, …, x_k` with the given degrees.
pub fn alphabet(degrees: &[u32]) -> Result<Vec<Letter>> {
    degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| Letter::new(i as u32 + 1, d))
        .collect()
}

/// An arbitrary bracketing of letters, not necessarily basic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Product {
    Letter(Letter),
    Bracket(Box<Product>, Box<Product>),
}

impl Product {
    pub fn bracket(a: Product, b: Product) -> Product {
        Product::Bracket(Box::new(a), Box::new(b))
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum Node {
    Letter(Letter),
    Bracket {
        left: BasicProduct,
        right: BasicProduct,
        weight: usize,
        degree_sum: i64,
    },
}

/// A basic product; construction enforces the basic-product conditions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BasicProduct(Arc<Node>);

impl BasicProduct {
    pub fn letter(x: Letter) -> Self {
        Self(Arc::new(Node::Letter(x)))
    }

    /// `[w1, w2]` if it is basic: `w1 < w2`, and when `w2 = [w3, w4]` also
    /// `w3 ≤ w1`.
    pub fn try_bracket(w1: &BasicProduct, w2: &BasicProduct) -> Option<Self> {
        if hall_compare(w1, w2) != Ordering::Less {
            return None;
        }
        if let Some((w3, _)) = w2.split() {
            if hall_compare(w3, w1) == Ordering::Greater {
                return None;
            }
        }
        Some(Self::bracket_unchecked(w1, w2))
    }

    fn bracket_unchecked(w1: &BasicProduct, w2: &BasicProduct) -> Self {
        Self(Arc::new(Node::Bracket {
            left: w1.clone(),
            right: w2.clone(),
            weight: w1.weight() + w2.weight(),
            degree_sum: w1.degree_sum() + w2.degree_sum(),
        }))
    }

    pub fn from_product(p: &Product) -> Option<Self> {
        match p {
            Product::Letter(x) => Some(Self::letter(*x)),
            Product::Bracket(a, b) => {
                let a = Self::from_product(a)?;
                let b = Self::from_product(b)?;
                Self::try_bracket(&a, &b)
            }
        }
    }

    pub fn to_product(&self) -> Product {
        match &*self.0 {
            Node::Letter(x) => Product::Letter(*x),
            Node::Bracket { left, right, .. } => {
                Product::bracket(left.to_product(), right.to_product())
            }
        }
    }

    pub fn as_letter(&self) -> Option<Letter> {
        match &*self.0 {
            Node::Letter(x) => Some(*x),
            Node::Bracket { .. } => None,
        }
    }

    /// `(w3, w4)` when this is `[w3, w4]`.
    pub fn split(&self) -> Option<(&BasicProduct, &BasicProduct)> {
        match &*self.0 {
            Node::Letter(_) => None,
            Node::Bracket { left, right, .. } => Some((left, right)),
        }
    }

    /// Number of letter occurrences.
    pub fn weight(&self) -> usize {
        match &*self.0 {
            Node::Letter(_) => 1,
            Node::Bracket { weight, .. } => *weight,
        }
    }

    fn degree_sum(&self) -> i64 {
        match &*self.0 {
            Node::Letter(x) => i64::from(x.degree),
            Node::Bracket { degree_sum, .. } => *degree_sum,
        }
    }

    /// Occurrences of each letter index.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        self.visit_letters(&mut |x| *out.entry(x.index).or_insert(0) += 1);
        out
    }

    fn visit_letters(&self, f: &mut impl FnMut(Letter)) {
        match &*self.0 {
            Node::Letter(x) => f(*x),
            Node::Bracket { left, right, .. } => {
                left.visit_letters(f);
                right.visit_letters(f);
            }
        }
    }
}

/// Shifted degree `(sum of letter degrees) - (weight - 1)`.
pub fn sl_degree(w: &BasicProduct) -> i64 {
    w.degree_sum() - (w.weight() as i64 - 1)
}

/// The fixed total order on basic products.
pub fn hall_compare(u: &BasicProduct, v: &BasicProduct) -> Ordering {
    if Arc::ptr_eq(&u.0, &v.0) {
        return Ordering::Equal;
    }
    u.weight()
        .cmp(&v.weight())
        .then_with(|| match (&*u.0, &*v.0) {
            (Node::Letter(a), Node::Letter(b)) => a.cmp(b),
            (
                Node::Bracket {
                    left: l1,
                    right: r1,
                    ..
                },
                Node::Bracket {
                    left: l2,
                    right: r2,
                    ..
                },
            ) => hall_compare(l1, l2).then_with(|| hall_compare(r1, r2)),
            // equal weight means both letters or both brackets
            _ => unreachable!("letters and brackets never share a weight"),
        })
}

impl PartialOrd for BasicProduct {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BasicProduct {
    fn cmp(&self, other: &Self) -> Ordering {
        hall_compare(self, other)
    }
}

impl fmt::Display for BasicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Letter(x) => write!(f, "x{}", x.index),
            Node::Bracket { left, right, .. } => write!(f, "[{left},{right}]"),
        }
    }
}

impl fmt::Debug for BasicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Product::Letter(x) => write!(f, "x{}", x.index),
            Product::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

pub fn is_basic(p: &Product) -> bool {
    BasicProduct::from_product(p).is_some()
}

/// All basic products of weight `≤ max_weight`, in Hall order.
pub fn gen_basic_products(alphabet: &[Letter], max_weight: usize) -> Vec<BasicProduct> {
    gen_basic_products_where(alphabet, max_weight, |_| true)
}

/// Like [`gen_basic_products`], keeping only products accepted by `keep`.
///
/// `keep` must be closed under taking factors: if it accepts `[a, b]` it
/// accepts `a` and `b`. Bounds on multiplicities or on degree qualify.
pub fn gen_basic_products_where(
    alphabet: &[Letter],
    max_weight: usize,
    keep: impl Fn(&BasicProduct) -> bool,
) -> Vec<BasicProduct> {
    let mut letters: Vec<Letter> = alphabet.to_vec();
    letters.sort();
    letters.dedup();

    // all[rank] in Hall order; factors[rank] = ranks of (left, right)
    let mut all: Vec<BasicProduct> = Vec::new();
    let mut factors: Vec<Option<(usize, usize)>> = Vec::new();
    // by_weight[w] = rank range of weight-w products
    let mut by_weight: Vec<std::ops::Range<usize>> = std::iter::once(0..0).collect();

    if max_weight == 0 {
        return all;
    }
    for x in letters {
        let w = BasicProduct::letter(x);
        if keep(&w) {
            all.push(w);
            factors.push(None);
        }
    }
    by_weight.push(0..all.len());

    for k in 2..=max_weight {
        let mut fresh: Vec<(usize, usize)> = Vec::new();
        for i in 1..=k / 2 {
            let left_range = by_weight[i].clone();
            for r2 in by_weight[k - i].clone() {
                let lo = match factors[r2] {
                    Some((r3, _)) => r3.max(left_range.start),
                    None => left_range.start,
                };
                let hi = r2.min(left_range.end);
                for r1 in lo..hi {
                    let cand = BasicProduct::bracket_unchecked(&all[r1], &all[r2]);
                    if keep(&cand) {
                        fresh.push((r1, r2));
                    }
                }
            }
        }
        fresh.sort_unstable();
        let start = all.len();
        for (r1, r2) in fresh {
            let w = BasicProduct::bracket_unchecked(&all[r1], &all[r2]);
            all.push(w);
            factors.push(Some((r1, r2)));
        }
        by_weight.push(start..all.len());
    }
    all
}

/// `Q̄^J w`; with `J` empty this is the basic product itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedProduct {
    pub word: BasicProduct,
    pub ops: QbarMonomial,
}

impl DecoratedProduct {
    pub fn plain(word: BasicProduct) -> Self {
        Self {
            word,
            ops: QbarMonomial::unit(),
        }
    }

    pub fn new(ops: QbarMonomial, word: BasicProduct) -> Self {
        Self { word, ops }
    }

    pub fn degree(&self) -> i64 {
        self.ops.degree_on(sl_degree(&self.word))
    }
}

impl fmt::Display for DecoratedProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ops.is_empty() {
            write!(f, "{}", self.word)
        } else {
            write!(f, "{} {}", self.ops, self.word)
        }
    }
}

/// An F₂-combination of decorated products.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Combination {
    terms: BTreeSet<DecoratedProduct>,
}

impl Combination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(t: DecoratedProduct) -> Self {
        Self {
            terms: BTreeSet::from([t]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, t: DecoratedProduct) {
        if !self.terms.remove(&t) {
            self.terms.insert(t);
        }
    }

    pub fn add_assign(&mut self, other: &Combination) {
        for t in &other.terms {
            self.toggle(t.clone());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = &DecoratedProduct> {
        self.terms.iter()
    }

    /// Degrees occurring in the combination.
    pub fn degrees(&self) -> BTreeSet<i64> {
        self.terms.iter().map(DecoratedProduct::degree).collect()
    }
}

impl FromIterator<DecoratedProduct> for Combination {
    fn from_iter<T: IntoIterator<Item = DecoratedProduct>>(iter: T) -> Self {
        let mut c = Self::zero();
        for t in iter {
            c.toggle(t);
        }
        c
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Bracket of two basic products, reduced to basis elements.
///
/// 1. `[w1, w2]` basic: itself.
/// 2. `[w, w] = Q̄^{|w|} w`.
/// 3. `[w1, w2] = [w2, w1]` when `w1 > w2`.
/// 4. `[w1, [w3, w4]] = [w3, [w4, w1]] + [w4, [w1, w3]]` when `w1 < w3`.
///
/// Any bracket with a Q̄-decorated factor is zero.
pub fn bracket_basic(w1: &BasicProduct, w2: &BasicProduct) -> Combination {
    match hall_compare(w1, w2) {
        Ordering::Equal => {
            let ops = QbarMonomial::new(vec![sl_degree(w1) as u32]);
            Combination::single(DecoratedProduct::new(ops, w1.clone()))
        }
        Ordering::Greater => bracket_basic(w2, w1),
        Ordering::Less => {
            if let Some(w) = BasicProduct::try_bracket(w1, w2) {
                return Combination::single(DecoratedProduct::plain(w));
            }
            let (w3, w4) = w2
                .split()
                .expect("a letter on the right always gives a basic bracket");
            let mut out = bracket_with(w3, &bracket_basic(w4, w1));
            out.add_assign(&bracket_with(w4, &bracket_basic(w1, w3)));
            out
        }
    }
}

/// `[w, c]` for a basic product `w` and a combination `c`.
fn bracket_with(w: &BasicProduct, c: &Combination) -> Combination {
    let mut out = Combination::zero();
    for t in c.terms().filter(|t| t.ops.is_empty()) {
        out.add_assign(&bracket_basic(w, &t.word));
    }
    out
}

/// Bilinear bracket of combinations.
pub fn bracket_combinations(a: &Combination, b: &Combination) -> Combination {
    let mut out = Combination::zero();
    for s in a.terms().filter(|t| t.ops.is_empty()) {
        for t in b.terms().filter(|t| t.ops.is_empty()) {
            out.add_assign(&bracket_basic(&s.word, &t.word));
        }
    }
    out
}

/// Free bracket expression over letters and Q̄-decorated atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketExpr {
    Letter(Letter),
    /// `Q̄^J w` for a basic product `w`.
    Atom(QbarMonomial, BasicProduct),
    Bracket(Box<BracketExpr>, Box<BracketExpr>),
    /// `Q̄^j e`
    Apply(u32, Box<BracketExpr>),
}

impl BracketExpr {
    pub fn bracket(a: BracketExpr, b: BracketExpr) -> Self {
        BracketExpr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn apply(j: u32, e: BracketExpr) -> Self {
        BracketExpr::Apply(j, Box::new(e))
    }

    pub fn product(p: &Product) -> Self {
        match p {
            Product::Letter(x) => BracketExpr::Letter(*x),
            Product::Bracket(a, b) => BracketExpr::bracket(Self::product(a), Self::product(b)),
        }
    }

    fn letters(&self, out: &mut Vec<Letter>) {
        match self {
            BracketExpr::Letter(x) => out.push(*x),
            BracketExpr::Atom(_, w) => w.visit_letters(&mut |x| out.push(x)),
            BracketExpr::Bracket(a, b) => {
                a.letters(out);
                b.letters(out);
            }
            BracketExpr::Apply(_, e) => e.letters(out),
        }
    }
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketExpr::Letter(x) => write!(f, "x{}", x.index),
            BracketExpr::Atom(j, w) if j.is_empty() => write!(f, "{w}"),
            BracketExpr::Atom(j, w) => write!(f, "{j} {w}"),
            BracketExpr::Bracket(a, b) => write!(f, "[{a},{b}]"),
            BracketExpr::Apply(j, e) => write!(f, "Q{j} {e}"),
        }
    }
}

/// Reduces an expression to a combination of basis elements `Q̄^J w`.
pub fn hall_reduce(e: &BracketExpr) -> Result<Combination> {
    let mut letters = Vec::new();
    e.letters(&mut letters);
    let mut degrees: BTreeMap<u32, u32> = BTreeMap::new();
    for x in letters {
        if let Some(&d) = degrees.get(&x.index) {
            if d != x.degree {
                return Err(Error::MixedAlphabets(format!(
                    "x{} used with degrees {d} and {}",
                    x.index, x.degree
                )));
            }
        }
        degrees.insert(x.index, x.degree);
    }
    evaluate(e)
}

fn evaluate(e: &BracketExpr) -> Result<Combination> {
    Ok(match e {
        BracketExpr::Letter(x) => {
            Combination::single(DecoratedProduct::plain(BasicProduct::letter(*x)))
        }
        BracketExpr::Atom(j, w) => reduce_against(j, sl_degree(w) as u32)?
            .into_iter()
            .map(|ops| DecoratedProduct::new(ops, w.clone()))
            .collect(),
        BracketExpr::Bracket(a, b) => bracket_combinations(&evaluate(a)?, &evaluate(b)?),
        BracketExpr::Apply(j, inner) => {
            let mut out = Combination::zero();
            for t in evaluate(inner)?.terms() {
                for ops in reduce_against(&t.ops.prepend(*j), sl_degree(&t.word) as u32)? {
                    out.toggle(DecoratedProduct::new(ops, t.word.clone()));
                }
            }
            out
        }
    })
}
