//! The algebra R̄ generated by the operations Q̄^j, j ≥ 0, over F₂.
//!
//! Q̄^j raises degree by `j - 1`. Monomials are written left to right in
//! application order reversed, i.e. `Q̄^{j_1} Q̄^{j_2} ⋯ Q̄^{j_k} x` applies
//! `j_k` first. A monomial is *completely unadmissible* (CU) when
//! `j_i > 2·j_{i+1}` for every adjacent pair.
//!
//! The defining relation only rewrites pairs `Q̄^r Q̄^s` with `s < r ≤ 2s`,
//! so normal forms are computed relative to the degree `n` of the class the
//! monomial acts on: with instability (`Q̄^j y = 0` when `j < |y|`) every
//! surviving non-CU pair is rewritable once `n ≥ 2`. For a CU monomial with
//! last entry `j_k ≥ n` the full excess condition `j_1 ≥ j_2 + ⋯ + j_k + n`
//! follows by induction, so normal forms are automatically allowable.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest entry accepted by the rewriting engine.
pub const MAX_ENTRY: u32 = 1_000_000;

/// A word `Q̄^{j_1} ⋯ Q̄^{j_k}`; the empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QbarMonomial(Vec<u32>);

impl QbarMonomial {
    pub fn new(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&j| u64::from(j)).sum()
    }

    pub fn is_cu(&self) -> bool {
        is_cu(&self.0)
    }

    /// Degree of `Q̄^J y` for `|y| = base`.
    pub fn degree_on(&self, base: i64) -> i64 {
        base + self.0.iter().map(|&j| i64::from(j) - 1).sum::<i64>()
    }

    /// `Q̄^j Q̄^J`
    pub fn prepend(&self, j: u32) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(j);
        v.extend_from_slice(&self.0);
        Self(v)
    }

    /// Whether `Q̄^J` is nonzero in R̄_n by the excess condition
    /// `j_1 ≥ j_2 + ⋯ + j_k + n`.
    pub fn is_allowable(&self, n: u32) -> bool {
        match self.0.split_first() {
            None => true,
            Some((&first, rest)) => {
                u64::from(first) >= rest.iter().map(|&j| u64::from(j)).sum::<u64>() + u64::from(n)
            }
        }
    }
}

impl From<Vec<u32>> for QbarMonomial {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Display for QbarMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for j in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "Q{j}")?;
        }
        Ok(())
    }
}

/// An F₂-linear combination of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QbarElement {
    monomials: BTreeSet<QbarMonomial>,
}

impl QbarElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Adds one monomial; a repeated monomial cancels.
    pub fn toggle(&mut self, m: QbarMonomial) {
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &QbarElement) {
        for m in &other.monomials {
            self.toggle(m.clone());
        }
    }

    pub fn monomials(&self) -> impl Iterator<Item = &QbarMonomial> {
        self.monomials.iter()
    }

    pub fn into_set(self) -> BTreeSet<QbarMonomial> {
        self.monomials
    }
}

impl FromIterator<QbarMonomial> for QbarElement {
    fn from_iter<T: IntoIterator<Item = QbarMonomial>>(iter: T) -> Self {
        let mut e = Self::zero();
        for m in iter {
            e.toggle(m);
        }
        e
    }
}

impl From<BTreeSet<QbarMonomial>> for QbarElement {
    fn from(monomials: BTreeSet<QbarMonomial>) -> Self {
        Self { monomials }
    }
}

impl fmt::Display for QbarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.monomials.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `binomial(a, b) mod 2` by Lucas' theorem.
#[inline]
pub fn binom_mod2(a: u64, b: u64) -> bool {
    b & !a == 0
}

pub fn is_cu(entries: &[u32]) -> bool {
    entries
        .windows(2)
        .all(|p| u64::from(p[0]) > 2 * u64::from(p[1]))
}

/// Right-hand side of the relation
/// `Q̄^r Q̄^s = Σ_{k=0}^{r-s-1} C(2s-r+1+2k, k) Q̄^{2s+1+k} Q̄^{r-s-1-k}`
/// for `s < r ≤ 2s`.
pub fn adem_step(r: u32, s: u32) -> Result<QbarElement> {
    if !(s < r && r <= 2 * s) {
        return Err(Error::Precondition(format!(
            "relation needs s < r <= 2s, got r = {r}, s = {s}"
        )));
    }
    let (r, s) = (u64::from(r), u64::from(s));
    let mut out = QbarElement::zero();
    for k in 0..(r - s) {
        let top = 2 * s + 1 + 2 * k - r;
        if binom_mod2(top, k) {
            let left = 2 * s + 1 + k;
            let right = r - s - 1 - k;
            out.toggle(QbarMonomial(vec![left as u32, right as u32]));
        }
    }
    Ok(out)
}

/// Which non-CU pair the rewriting engine attacks first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    Rightmost,
    Leftmost,
}

enum Step {
    /// The term vanishes.
    Zero,
    /// The term is already CU.
    Normal,
    /// Rewrite the pair starting at this position.
    Rewrite(usize),
}

fn classify(entries: &[u32], n: u32, strategy: Strategy) -> Step {
    // instability, checked from the innermost operation outwards
    let mut d = i64::from(n);
    for &j in entries.iter().rev() {
        if i64::from(j) < d {
            return Step::Zero;
        }
        d += i64::from(j) - 1;
    }
    let bad = |i: &usize| u64::from(entries[*i]) <= 2 * u64::from(entries[*i + 1]);
    let pos = match strategy {
        Strategy::Leftmost => (0..entries.len().saturating_sub(1)).find(bad),
        Strategy::Rightmost => (0..entries.len().saturating_sub(1)).rev().find(bad),
    };
    match pos {
        None => Step::Normal,
        // r <= s can only survive instability for n = 1 with a tail of Q̄^1's;
        // such a suffix violates the excess condition and vanishes in R̄_1
        Some(i) if entries[i] <= entries[i + 1] => Step::Zero,
        Some(i) => Step::Rewrite(i),
    }
}

/// Normal form of `Q̄^J` acting on a class of degree `n`, as a set of CU
/// monomials each ending in an entry `≥ n`.
pub fn reduce_against(j: &QbarMonomial, n: u32) -> Result<BTreeSet<QbarMonomial>> {
    reduce_against_with(j, n, Strategy::default())
}

pub fn reduce_against_with(
    j: &QbarMonomial,
    n: u32,
    strategy: Strategy,
) -> Result<BTreeSet<QbarMonomial>> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "target degree",
            value: 0,
            range: ">= 1",
        });
    }
    if let Some(&big) = j.0.iter().find(|&&e| e > MAX_ENTRY) {
        return Err(Error::OutOfRange {
            what: "monomial entry",
            value: i64::from(big),
            range: "<= 1000000",
        });
    }
    let mut pending: BTreeSet<QbarMonomial> = BTreeSet::from([j.clone()]);
    let mut done = QbarElement::zero();
    while let Some(term) = pending.pop_first() {
        match classify(&term.0, n, strategy) {
            Step::Zero => {}
            Step::Normal => done.toggle(term),
            Step::Rewrite(i) => {
                let rhs = adem_step(term.0[i], term.0[i + 1])?;
                for pair in rhs.monomials() {
                    let mut v = Vec::with_capacity(term.0.len());
                    v.extend_from_slice(&term.0[..i]);
                    v.extend_from_slice(&pair.0);
                    v.extend_from_slice(&term.0[i + 2..]);
                    let m = QbarMonomial(v);
                    if !pending.remove(&m) {
                        pending.insert(m);
                    }
                }
            }
        }
    }
    Ok(done.into_set())
}

/// Linear extension of [`reduce_against`].
pub fn reduce_element(e: &QbarElement, n: u32) -> Result<BTreeSet<QbarMonomial>> {
    let mut out = QbarElement::zero();
    for m in e.monomials() {
        for r in reduce_against(m, n)? {
            out.toggle(r);
        }
    }
    Ok(out.into_set())
}

/// All CU monomials `J` with last entry `≥ n` (plus the empty monomial) such
/// that `Q̄^J ι_n` has degree `≤ max_degree`, each with that degree.
///
/// Sorted lexicographically by entries.
pub fn cu_monomials_on(n: u32, max_degree: i64) -> Vec<(QbarMonomial, i64)> {
    let mut out = Vec::new();
    if i64::from(n) > max_degree {
        return out;
    }
    // grow sequences leftwards: the next entry must exceed twice the current
    // leftmost one and, for the first entry, be at least n
    fn grow(
        current: &mut Vec<u32>,
        degree: i64,
        min_next: u64,
        max_degree: i64,
        out: &mut Vec<(QbarMonomial, i64)>,
    ) {
        let mut j = min_next;
        loop {
            let d = degree + j as i64 - 1;
            if d > max_degree {
                break;
            }
            current.insert(0, j as u32);
            out.push((QbarMonomial(current.clone()), d));
            grow(current, d, 2 * j + 1, max_degree, out);
            current.remove(0);
            j += 1;
        }
    }
    out.push((QbarMonomial::unit(), i64::from(n)));
    grow(
        &mut Vec::new(),
        i64::from(n),
        u64::from(n),
        max_degree,
        &mut out,
    );
    out.sort();
    out
}

/// Per-degree dimension of `R̄_n{ι_n}` for degrees `n..=max_degree`.
///
/// Counted with a table over (degree, leftmost entry) rather than by listing
/// monomials.
pub fn rn_module_dims(n: u32, max_degree: i64) -> BTreeMap<i64, usize> {
    let n64 = i64::from(n);
    let mut dims: BTreeMap<i64, usize> = (n64..=max_degree).map(|d| (d, 0)).collect();
    if n64 > max_degree {
        return dims;
    }
    // ways[(degree, leftmost)] = number of CU sequences with that leftmost
    // entry reaching that degree; leftmost = 0 stands for the empty sequence
    let mut ways: HashMap<(i64, i64), usize> = HashMap::new();
    ways.insert((n64, 0), 1);
    for degree in n64..=max_degree {
        let here: Vec<(i64, usize)> = ways
            .iter()
            .filter(|((d, _), _)| *d == degree)
            .map(|((_, left), &c)| (*left, c))
            .collect();
        let total: usize = here.iter().map(|(_, c)| c).sum();
        dims.insert(degree, total);
        for (left, count) in here {
            let lower = if left == 0 { n64 } else { 2 * left + 1 };
            let mut j = lower;
            while degree + j - 1 <= max_degree {
                *ways.entry((degree + j - 1, j)).or_default() += count;
                j += 1;
            }
        }
    }
    dims
}

/// Classification of a monomial against a target degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuWitness {
    pub monomial: QbarMonomial,
    pub target_degree: u32,
    pub is_cu: bool,
    /// `Some(j_k ≥ n)` when the monomial is CU.
    pub survives: Option<bool>,
}

impl CuWitness {
    pub fn new(monomial: QbarMonomial, target_degree: u32) -> Self {
        let is_cu = monomial.is_cu();
        let survives = is_cu.then(|| monomial.last().is_none_or(|last| last >= target_degree));
        Self {
            monomial,
            target_degree,
            is_cu,
            survives,
        }
    }
}
