//! The free allowable R̄-ΣLie algebra on a graded vector space.
//!
//! A basis is given by the elements `Q̄^J w` where `w` is a basic product and
//! `J = (j_1, …, j_k)` is CU with `j_k ≥ |w|` (or empty). Since CU gives
//! `j_i ≥ 2 j_{i+1} + 1`, induction from the right shows
//! `j_i ≥ j_{i+1} + ⋯ + j_k + |w|`, which is the excess condition, so this
//! basis is allowable element by element.
//!
//! The bracket vanishes as soon as either side carries a Q̄-operation; on basic
//! products it is [`hall::bracket_basic`].

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::hall::{
    self, gen_basic_products_where, sl_degree, BasicProduct, Combination, DecoratedProduct, Letter,
};
use crate::qbar::{cu_monomials_on, reduce_against, rn_module_dims};

/// A basis element `Q̄^J w`.
pub type AlgebraBasisElement = DecoratedProduct;

/// An F₂-combination of basis elements.
pub type Element = Combination;

/// Dimensions of a graded vector space, supported in degrees `≥ 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedDims(BTreeMap<i64, usize>);

impl GradedDims {
    pub fn new(dims: BTreeMap<i64, usize>) -> Result<Self> {
        if let Some((&d, _)) = dims.iter().find(|(&d, &n)| n > 0 && d < 2) {
            return Err(Error::DegreeBelowTwo(d));
        }
        Ok(Self(dims.into_iter().filter(|&(_, n)| n > 0).collect()))
    }

    pub fn get(&self, degree: i64) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.0.iter().map(|(&d, &n)| (d, n))
    }

    /// One letter per basis vector, indexed `1, 2, …` in increasing degree.
    pub fn alphabet(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for (d, n) in self.iter() {
            for _ in 0..n {
                let index = out.len() as u32 + 1;
                out.push(Letter::new(index, d as u32).expect("degree checked on construction"));
            }
        }
        out
    }
}

/// Basic products on `alphabet` of shifted degree `≤ max_degree`.
fn basic_products_up_to(alphabet: &[Letter], max_degree: i64) -> Vec<BasicProduct> {
    // every letter adds at least one to the degree, so weight < max_degree
    let max_weight = max_degree.max(1) as usize;
    gen_basic_products_where(alphabet, max_weight, |w| sl_degree(w) <= max_degree)
}

fn degree_range(max_degree: i64) -> impl Iterator<Item = i64> {
    2..=max_degree
}

/// All basis elements of degree `≤ max_degree`, grouped by degree, each group
/// ordered by basic product and then by `J`.
pub fn enumerate_basis(
    alphabet: &[Letter],
    max_degree: i64,
) -> BTreeMap<i64, Vec<AlgebraBasisElement>> {
    let mut out: BTreeMap<i64, Vec<AlgebraBasisElement>> =
        degree_range(max_degree).map(|d| (d, Vec::new())).collect();
    for w in basic_products_up_to(alphabet, max_degree) {
        for (ops, d) in cu_monomials_on(sl_degree(&w) as u32, max_degree) {
            out.entry(d)
                .or_default()
                .push(DecoratedProduct::new(ops, w.clone()));
        }
    }
    for group in out.values_mut() {
        group.sort();
    }
    out
}

/// Dimension of every degree `2..=max_degree`, without building elements.
pub fn poincare(alphabet: &[Letter], max_degree: i64) -> BTreeMap<i64, usize> {
    let mut out: BTreeMap<i64, usize> = degree_range(max_degree).map(|d| (d, 0)).collect();
    let mut per_base: HashMap<i64, Vec<i64>> = HashMap::new();
    for w in basic_products_up_to(alphabet, max_degree) {
        let base = sl_degree(&w);
        let degrees = per_base.entry(base).or_insert_with(|| {
            cu_monomials_on(base as u32, max_degree)
                .into_iter()
                .map(|(_, d)| d)
                .collect()
        });
        for d in degrees.iter() {
            *out.entry(*d).or_default() += 1;
        }
    }
    out
}

/// Homology dimensions of the free algebra on a space with reduced homology
/// of the given dimensions.
pub fn homology_of_free(dims: &GradedDims, max_degree: i64) -> BTreeMap<i64, usize> {
    poincare(&dims.alphabet(), max_degree)
}

/// The same dimensions with the basis listed.
pub fn homology_of_free_basis(
    dims: &GradedDims,
    max_degree: i64,
) -> BTreeMap<i64, Vec<AlgebraBasisElement>> {
    enumerate_basis(&dims.alphabet(), max_degree)
}

fn homogeneous_degree(e: &Element) -> Result<Option<i64>> {
    let degrees = e.degrees();
    match degrees.len() {
        0 => Ok(None),
        1 => Ok(degrees.first().copied()),
        _ => Err(Error::Precondition(format!(
            "element {e} is not homogeneous (degrees {degrees:?})"
        ))),
    }
}

/// The bracket, of degree `|e1| + |e2| - 1`.
pub fn bracket(e1: &Element, e2: &Element) -> Result<Element> {
    homogeneous_degree(e1)?;
    homogeneous_degree(e2)?;
    Ok(hall::bracket_combinations(e1, e2))
}

/// `Q̄^j e`, of degree `|e| + j - 1`; zero when `j < |e|`.
pub fn apply_qbar(j: u32, e: &Element) -> Result<Element> {
    let Some(d) = homogeneous_degree(e)? else {
        return Ok(Element::zero());
    };
    if i64::from(j) < d {
        return Ok(Element::zero());
    }
    let mut out = Element::zero();
    for t in e.terms() {
        for ops in reduce_against(&t.ops.prepend(j), sl_degree(&t.word) as u32)? {
            out.toggle(DecoratedProduct::new(ops, t.word.clone()));
        }
    }
    Ok(out)
}

/// Number of basic products using letter `i` exactly `m[i]` times.
pub fn count_basic(m: &[usize]) -> usize {
    let total: usize = m.iter().sum();
    if total == 0 {
        return 0;
    }
    let letters: Vec<Letter> = (0..m.len())
        .map(|i| Letter::new(i as u32 + 1, 2).expect("degree 2"))
        .collect();
    let fits = |w: &BasicProduct| {
        w.multiplicities()
            .iter()
            .all(|(&i, &c)| c <= m[i as usize - 1])
    };
    gen_basic_products_where(&letters, total, fits)
        .into_iter()
        .filter(|w| w.weight() == total)
        .count()
}

/// Dimensions obtained by splitting the free algebra on a wedge of spheres
/// into free algebras on single spheres, one sphere `S^{|w|}` per basic
/// product `w`.
///
/// Basic products are counted per multiplicity vector by the Witt formula
/// rather than generated, so this is independent of [`homology_of_free`] and
/// stays cheap in high degrees. Each single-sphere summand contributes the
/// dimensions of `R̄_{|w|}{ι}`.
pub fn hilton_milnor_dims(sphere_dims: &[u32], max_degree: i64) -> Result<BTreeMap<i64, usize>> {
    if let Some(&d) = sphere_dims.iter().find(|&&d| d < 2) {
        return Err(Error::DegreeBelowTwo(i64::from(d)));
    }
    let mut out: BTreeMap<i64, usize> = degree_range(max_degree).map(|d| (d, 0)).collect();
    let mut rn_cache: HashMap<i64, BTreeMap<i64, usize>> = HashMap::new();
    let mut m = vec![0usize; sphere_dims.len()];
    let mut failure = None;
    for_each_multiplicity(sphere_dims, max_degree, 0, 0, 0, &mut m, &mut |m, base| {
        if failure.is_some() {
            return;
        }
        let count = match witt_count(m) {
            Ok(c) => c,
            Err(e) => {
                failure = Some(e);
                return;
            }
        };
        if count == 0 {
            return;
        }
        let dims = rn_cache
            .entry(base)
            .or_insert_with(|| rn_module_dims(base as u32, max_degree));
        for (&d, &n) in dims.iter() {
            *out.entry(d).or_default() += count * n;
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Calls `f(m, degree)` for every nonzero multiplicity vector whose basic
/// products have degree `≤ max_degree`.
fn for_each_multiplicity(
    sphere_dims: &[u32],
    max_degree: i64,
    i: usize,
    letters: usize,
    degree_sum: i64,
    m: &mut [usize],
    f: &mut impl FnMut(&[usize], i64),
) {
    if i == m.len() {
        if letters > 0 {
            f(m, degree_sum - (letters as i64 - 1));
        }
        return;
    }
    let d = i64::from(sphere_dims[i]);
    let mut c = 0;
    loop {
        let (l, s) = (letters + c, degree_sum + c as i64 * d);
        // remaining letters can only raise the degree
        if l > 0 && s - (l as i64 - 1) > max_degree {
            break;
        }
        m[i] = c;
        for_each_multiplicity(sphere_dims, max_degree, i + 1, l, s, m, f);
        c += 1;
    }
    m[i] = 0;
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

fn overflow() -> Error {
    Error::Precondition("basic product count overflows".into())
}

fn multinomial(parts: &[usize]) -> Result<u128> {
    let mut total = 0u128;
    let mut acc = 1u128;
    for &p in parts {
        for i in 1..=p as u128 {
            total += 1;
            // after each step acc is the multinomial of the letters seen so far
            acc = acc.checked_mul(total).ok_or_else(overflow)? / i;
        }
    }
    Ok(acc)
}

/// Number of basic products with multiplicity vector `m`:
/// `(1/|m|) Σ_{d | gcd m} μ(d) (|m|/d)! / Π (m_i/d)!`.
fn witt_count(m: &[usize]) -> Result<usize> {
    let total: usize = m.iter().sum();
    if total == 0 {
        return Ok(0);
    }
    let g = m.iter().fold(0, |a, &x| gcd(a, x));
    let mut sum: i128 = 0;
    for d in (1..=g).filter(|d| g % d == 0) {
        let mu = mobius(d);
        if mu != 0 {
            let parts: Vec<usize> = m.iter().map(|&x| x / d).collect();
            let t = i128::try_from(multinomial(&parts)?).map_err(|_| overflow())?;
            sum += i128::from(mu) * t;
        }
    }
    usize::try_from(sum / total as i128).map_err(|_| overflow())
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
