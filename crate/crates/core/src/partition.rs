//! The pointed partition complex `P_n`.
//!
//! `P_n` is the nerve of the partition lattice of `{1..n}` with the
//! subcomplexes of chains missing `0̂` or `1̂` collapsed to the basepoint. Its
//! reduced cellular chains in dimension `k` are spanned by the chains
//! `0̂ = λ_0 < λ_1 < … < λ_k = 1̂`, so a generator is determined by its `k - 1`
//! interior partitions. Deleting `λ_0` or `λ_k` lands in the collapsed part,
//! hence the boundary only deletes interior entries.
//!
//! Reduced homology is concentrated in dimension `n - 1` with rank `(n-1)!`.
//! The customary "`H_{n-2}`" indexing (the proper part of the lattice, or
//! equivalently degree = number of interior partitions) is one lower; see
//! [`HomologyResult::interior_dims`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, ChainComplexF2, Echelon, SparseMatrix};

/// Largest `n` for which partitions are enumerated.
pub const MAX_PARTITION_N: usize = 9;
/// Largest `n` for which the chain complex is built.
pub const MAX_COMPLEX_N: usize = 7;

/// A set partition of `{1..n}`; blocks are bitmasks (bit `i-1` for `i`),
/// sorted by least element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    blocks: Vec<u16>,
}

impl Partition {
    /// Canonicalizes `blocks` (lists of elements of `1..=n`).
    pub fn new(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        check_n(n, 1, MAX_PARTITION_N)?;
        let mut masks = Vec::with_capacity(blocks.len());
        let mut seen = 0u16;
        for b in blocks {
            if b.is_empty() {
                return Err(Error::Precondition("empty block".into()));
            }
            let mut mask = 0u16;
            for &i in b {
                if i == 0 || i > n {
                    return Err(Error::Precondition(format!("element {i} not in 1..={n}")));
                }
                let bit = 1u16 << (i - 1);
                if (seen | mask) & bit != 0 {
                    return Err(Error::Precondition(format!("element {i} repeated")));
                }
                mask |= bit;
            }
            seen |= mask;
            masks.push(mask);
        }
        if seen != full_mask(n) {
            return Err(Error::Precondition("blocks do not cover 1..=n".into()));
        }
        Ok(Self::from_masks(n, masks))
    }

    fn from_masks(n: usize, mut blocks: Vec<u16>) -> Self {
        blocks.sort_by_key(|b| b.trailing_zeros());
        Self { n, blocks }
    }

    /// The discrete partition `0̂`.
    pub fn bottom(n: usize) -> Self {
        Self::from_masks(n, (0..n).map(|i| 1u16 << i).collect())
    }

    /// The one-block partition `1̂`.
    pub fn top(n: usize) -> Self {
        Self::from_masks(n, vec![full_mask(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|&m| mask_elements(m)).collect()
    }

    pub(crate) fn masks(&self) -> &[u16] {
        &self.blocks
    }

    /// Image under a permutation of the underlying set.
    pub fn permute(&self, p: &Permutation) -> Result<Self> {
        if p.len() != self.n {
            return Err(Error::InvalidPermutation(format!(
                "permutation of {} points applied to a partition of {}",
                p.len(),
                self.n
            )));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|&m| {
                mask_elements(m)
                    .into_iter()
                    .fold(0u16, |acc, i| acc | 1 << (p.apply(i) - 1))
            })
            .collect();
        Ok(Self::from_masks(self.n, blocks))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|&m| {
                let els = mask_elements(m);
                if self.n < 10 {
                    els.iter().map(ToString::to_string).collect::<String>()
                } else {
                    els.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                }
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

fn full_mask(n: usize) -> u16 {
    ((1u32 << n) - 1) as u16
}

fn mask_elements(m: u16) -> Vec<usize> {
    (0..16).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect()
}

fn check_n(n: usize, lo: usize, hi: usize) -> Result<()> {
    if n < lo || n > hi {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            range: match (lo, hi) {
                (1, MAX_PARTITION_N) => "1..=9",
                (2, MAX_COMPLEX_N) => "2..=7",
                _ => "supported range",
            },
        });
    }
    Ok(())
}

/// All set partitions of `{1..n}` in restricted-growth-string order.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    check_n(n, 1, MAX_PARTITION_N)?;
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let blocks = rgs.iter().max().map_or(0, |m| m + 1);
        let mut masks = vec![0u16; blocks];
        for (i, &b) in rgs.iter().enumerate() {
            masks[b] |= 1 << i;
        }
        out.push(Partition::from_masks(n, masks));
        // next restricted growth string
        let mut i = n;
        loop {
            if i <= 1 {
                return Ok(out);
            }
            i -= 1;
            let prefix_max = rgs[..i].iter().copied().max().unwrap_or(0);
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for r in &mut rgs[i + 1..] {
                    *r = 0;
                }
                break;
            }
        }
    }
}

/// Whether every block of `p` lies inside a block of `q`.
pub fn refines(p: &Partition, q: &Partition) -> Result<bool> {
    if p.n != q.n {
        return Err(Error::MismatchedPartitions(p.n, q.n));
    }
    Ok(p.blocks
        .iter()
        .all(|&b| q.blocks.iter().any(|&c| b & c == b)))
}

/// A permutation of `{1..n}` in one-line notation: `i ↦ images[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[i - 1] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::InvalidPermutation("sizes differ".into()));
        }
        Ok(Self(other.0.iter().map(|&i| self.apply(i)).collect()))
    }
}

/// A chain `0̂ < λ_1 < … < λ_{k-1} < 1̂` stored by its interior.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagChain {
    pub n: usize,
    pub interior: Vec<Partition>,
}

impl FlagChain {
    pub fn new(n: usize, interior: Vec<Partition>) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as i64,
                range: ">= 2",
            });
        }
        let full = std::iter::once(Partition::bottom(n))
            .chain(interior.iter().cloned())
            .chain(std::iter::once(Partition::top(n)))
            .collect::<Vec<_>>();
        for pair in full.windows(2) {
            if pair[0].n != n || pair[1].n != n {
                return Err(Error::MismatchedPartitions(pair[0].n, pair[1].n));
            }
            if pair[0] == pair[1] || !refines(&pair[0], &pair[1])? {
                return Err(Error::Precondition(format!(
                    "{} < {} is not a strict refinement",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(Self { n, interior })
    }

    /// Simplicial dimension `k` of the chain `λ_0 < … < λ_k`.
    pub fn dimension(&self) -> usize {
        self.interior.len() + 1
    }

    /// All partitions `λ_0 = 0̂, …, λ_k = 1̂`.
    pub fn levels(&self) -> Vec<Partition> {
        std::iter::once(Partition::bottom(self.n))
            .chain(self.interior.iter().cloned())
            .chain(std::iter::once(Partition::top(self.n)))
            .collect()
    }
}

impl fmt::Display for FlagChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let levels: Vec<String> = self.levels().iter().map(ToString::to_string).collect();
        write!(f, "{}", levels.join(" < "))
    }
}

/// The reduced chain complex of `P_n` over F₂.
#[derive(Clone, Debug)]
pub struct PartitionComplex {
    n: usize,
    partitions: Vec<Partition>,
    index_of: HashMap<Partition, u16>,
    /// `generators[k]`: interior index lists of the dimension-`k` chains
    generators: Vec<Vec<Vec<u16>>>,
    lookup: Vec<HashMap<Vec<u16>, usize>>,
    complex: ChainComplexF2,
}

impl PartitionComplex {
    pub fn build(n: usize) -> Result<Self> {
        check_n(n, 2, MAX_COMPLEX_N)?;
        let partitions = enumerate_partitions(n)?;
        let index_of: HashMap<Partition, u16> = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u16))
            .collect();
        let bottom = index_of[&Partition::bottom(n)];
        let top = index_of[&Partition::top(n)];

        // strict coverings, restricted to the proper part
        let mut above: Vec<Vec<u16>> = vec![Vec::new(); partitions.len()];
        for (i, p) in partitions.iter().enumerate() {
            for (j, q) in partitions.iter().enumerate() {
                if i != j && q.num_blocks() < p.num_blocks() && refines(p, q)? {
                    above[i].push(j as u16);
                }
            }
        }
        let is_proper = |i: u16| i != bottom && i != top;

        let mut generators: Vec<Vec<Vec<u16>>> = vec![Vec::new(); n];
        let mut stack: Vec<Vec<u16>> = vec![Vec::new()];
        while let Some(chain) = stack.pop() {
            generators[chain.len() + 1].push(chain.clone());
            let last = chain.last().copied().unwrap_or(bottom);
            for &next in &above[last as usize] {
                if is_proper(next) {
                    let mut c = chain.clone();
                    c.push(next);
                    stack.push(c);
                }
            }
        }
        for g in &mut generators {
            g.sort();
        }
        let lookup: Vec<HashMap<Vec<u16>, usize>> = generators
            .iter()
            .map(|g| g.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect())
            .collect();

        let ranks: Vec<usize> = generators.iter().map(Vec::len).collect();
        let mut boundaries = vec![SparseMatrix::zeros(0, ranks[0])];
        for k in 1..n {
            let columns = generators[k]
                .iter()
                .map(|chain| {
                    (0..chain.len())
                        .map(|skip| {
                            let mut face = chain.clone();
                            face.remove(skip);
                            lookup[k - 1][&face] as u32
                        })
                        .collect()
                })
                .collect();
            boundaries.push(SparseMatrix::from_columns(ranks[k - 1], columns));
        }
        let complex = ChainComplexF2::from_sparse(ranks, boundaries)?;
        Ok(Self {
            n,
            partitions,
            index_of,
            generators,
            lookup,
            complex,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn complex(&self) -> &ChainComplexF2 {
        &self.complex
    }

    /// Number of generators in each dimension `0..n`.
    pub fn chain_counts(&self) -> Vec<usize> {
        self.generators.iter().map(Vec::len).collect()
    }

    pub fn generators(&self, k: usize) -> Vec<FlagChain> {
        self.generators[k]
            .iter()
            .map(|c| FlagChain {
                n: self.n,
                interior: c
                    .iter()
                    .map(|&i| self.partitions[i as usize].clone())
                    .collect(),
            })
            .collect()
    }

    pub fn generator_index(&self, chain: &FlagChain) -> Option<usize> {
        let ids: Option<Vec<u16>> = chain
            .interior
            .iter()
            .map(|p| self.index_of.get(p).copied())
            .collect();
        self.lookup.get(chain.dimension())?.get(&ids?).copied()
    }

    /// The chain map induced by a permutation, on dimension-`k` chains.
    pub fn permute_chain(&self, k: usize, p: &Permutation, v: &BitVector) -> Result<BitVector> {
        if p.len() != self.n {
            return Err(Error::InvalidPermutation(format!(
                "expected a permutation of {} points, got {}",
                self.n,
                p.len()
            )));
        }
        let image: Vec<u16> = self
            .partitions
            .iter()
            .map(|q| q.permute(p).map(|r| self.index_of[&r]))
            .collect::<Result<_>>()?;
        let mut out = BitVector::zeros(v.len());
        for g in v.ones() {
            let chain: Vec<u16> = self.generators[k][g]
                .iter()
                .map(|&i| image[i as usize])
                .collect();
            out.flip(self.lookup[k][&chain]);
        }
        Ok(out)
    }
}

/// Reduced homology of `P_n`.
#[derive(Clone, Debug)]
pub struct HomologyResult {
    pub n: usize,
    /// Dimension per simplicial degree `0..n`.
    pub dims: BTreeMap<usize, usize>,
    /// Cycles representing a basis of each nonzero homology group.
    pub cycle_basis: BTreeMap<usize, Vec<BitVector>>,
}

impl HomologyResult {
    /// Dimensions indexed by the number of interior partitions, i.e. shifted
    /// down by one; the nonzero group then sits in degree `n - 2`.
    pub fn interior_dims(&self) -> BTreeMap<usize, usize> {
        self.dims
            .iter()
            .filter(|(&k, _)| k >= 1)
            .map(|(&k, &d)| (k - 1, d))
            .collect()
    }

    pub fn nonzero_dims(&self) -> BTreeMap<usize, usize> {
        self.dims
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(&k, &d)| (k, d))
            .collect()
    }
}

pub fn build_complex(n: usize) -> Result<PartitionComplex> {
    PartitionComplex::build(n)
}

pub fn homology(n: usize) -> Result<HomologyResult> {
    homology_of(&PartitionComplex::build(n)?)
}

pub fn homology_of(pc: &PartitionComplex) -> Result<HomologyResult> {
    let dims = pc.complex.homology_dims();
    let cycle_basis = dims
        .iter()
        .filter(|(_, &d)| d > 0)
        .map(|(&k, _)| (k, pc.complex.cycle_basis(k)))
        .collect();
    Ok(HomologyResult {
        n: pc.n,
        dims,
        cycle_basis,
    })
}

/// Action of a permutation on the top homology in the stored cycle basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMatrix {
    pub permutation: Permutation,
    /// Column `i` holds the coordinates of the image of the `i`-th cycle.
    pub matrix: BitMatrix,
}

/// Computes action matrices on `H̃_{n-1}(P_n)` for one complex and its
/// homology.
pub struct ActionCalculator<'a> {
    pc: &'a PartitionComplex,
    degree: usize,
    basis: Vec<BitVector>,
    echelon: Echelon,
    boundary_count: usize,
}

impl<'a> ActionCalculator<'a> {
    pub fn new(pc: &'a PartitionComplex, hom: &HomologyResult) -> Self {
        let degree = pc.n - 1;
        let basis = hom.cycle_basis.get(&degree).cloned().unwrap_or_default();
        let dim = pc.generators[degree].len();
        let images: Vec<BitVector> = match pc.generators.get(degree + 1) {
            Some(_) => {
                let d = pc.complex.boundary(degree + 1);
                (0..d.cols()).map(|j| d.column_vector(j)).collect()
            }
            None => Vec::new(),
        };
        let mut echelon = Echelon::new(dim, images.len() + basis.len());
        for b in &images {
            echelon.insert(b);
        }
        let boundary_count = images.len();
        for z in &basis {
            echelon.insert(z);
        }
        Self {
            pc,
            degree,
            basis,
            echelon,
            boundary_count,
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn action(&self, p: &Permutation) -> Result<ActionMatrix> {
        let m = self.basis.len();
        let mut matrix = BitMatrix::zeros(m, m);
        for (i, z) in self.basis.iter().enumerate() {
            let image = self.pc.permute_chain(self.degree, p, z)?;
            let (residual, combo) = self.echelon.reduce(&image);
            debug_assert!(residual.is_zero(), "image of a cycle is a cycle");
            for j in combo.ones().filter(|&j| j >= self.boundary_count) {
                matrix.set(j - self.boundary_count, i, true);
            }
        }
        Ok(ActionMatrix {
            permutation: p.clone(),
            matrix,
        })
    }
}

pub fn induced_action(n: usize, perm: &Permutation) -> Result<ActionMatrix> {
    if perm.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "expected a permutation of {n} points, got {}",
            perm.len()
        )));
    }
    let pc = PartitionComplex::build(n)?;
    let hom = homology_of(&pc)?;
    ActionCalculator::new(&pc, &hom).action(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: usize, blocks: &[&[usize]]) -> Partition {
        let blocks: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
        Partition::new(n, &blocks).unwrap()
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_partitions(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52, 203]);
        assert!(enumerate_partitions(0).is_err());
        assert!(enumerate_partitions(10).is_err());
    }

    #[test]
    fn canonical_form() {
        let a = part(3, &[&[3], &[2, 1]]);
        let b = part(3, &[&[1, 2], &[3]]);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "12|3");
        assert!(Partition::new(3, &[vec![1, 2]]).is_err());
        assert!(Partition::new(3, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn refinement() {
        let p = part(3, &[&[1, 2], &[3]]);
        let q = part(3, &[&[1, 3], &[2]]);
        assert!(refines(&p, &p).unwrap());
        assert!(refines(&Partition::bottom(3), &q).unwrap());
        assert!(!refines(&p, &q).unwrap());
        assert!(refines(&p, &Partition::top(3)).unwrap());
        assert!(refines(&p, &Partition::bottom(4)).is_err());
    }

    #[test]
    fn small_complexes() {
        let pc = build_complex(2).unwrap();
        assert_eq!(pc.chain_counts(), vec![0, 1]);
        let pc = build_complex(3).unwrap();
        assert_eq!(pc.chain_counts(), vec![0, 1, 3]);
        let d2 = pc.complex().boundary(2).to_dense();
        assert_eq!(d2, BitMatrix::from_rows(&[[1, 1, 1]]));
        assert!(build_complex(1).is_err());
        assert!(build_complex(8).is_err());
    }

    #[test]
    fn homology_small() {
        let h = homology(2).unwrap();
        assert_eq!(h.nonzero_dims(), BTreeMap::from([(1, 1)]));
        let h = homology(3).unwrap();
        assert_eq!(h.nonzero_dims(), BTreeMap::from([(2, 2)]));
        assert_eq!(h.interior_dims().get(&1), Some(&2));
        assert_eq!(h.cycle_basis[&2].len(), 2);
    }

    #[test]
    fn chain_validation() {
        let p = part(3, &[&[1, 2], &[3]]);
        assert!(FlagChain::new(3, vec![p.clone()]).is_ok());
        assert!(FlagChain::new(3, vec![p.clone(), p.clone()]).is_err());
        assert!(FlagChain::new(3, vec![Partition::top(3)]).is_err());
        let pc = build_complex(3).unwrap();
        let c = FlagChain::new(3, vec![p]).unwrap();
        assert!(pc.generator_index(&c).is_some());
    }

    #[test]
    fn permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        let s = Permutation::new(vec![2, 3, 1]).unwrap();
        let s2 = s.compose(&s).unwrap();
        assert_eq!(s2.images(), &[3, 1, 2]);
        assert_eq!(s.compose(&s2).unwrap(), Permutation::identity(3));
        let p = part(3, &[&[1, 2], &[3]]);
        assert_eq!(p.permute(&s).unwrap(), part(3, &[&[2, 3], &[1]]));
    }

    #[test]
    fn identity_acts_trivially() {
        for n in 2..=4 {
            let a = induced_action(n, &Permutation::identity(n)).unwrap();
            let dim = (1..n).product::<usize>();
            assert_eq!(a.matrix, BitMatrix::identity(dim));
        }
        assert!(induced_action(3, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn three_cycle_on_p3() {
        let s = induced_action(3, &Permutation::new(vec![2, 3, 1]).unwrap())
            .unwrap()
            .matrix;
        let i = BitMatrix::identity(2);
        let s2 = s.mul(&s);
        assert!(i.add(&s).add(&s2).is_zero());
        assert_eq!(s2.mul(&s), i);
        let t = induced_action(3, &Permutation::new(vec![2, 1, 3]).unwrap())
            .unwrap()
            .matrix;
        assert_eq!(t.mul(&t), i);
    }
}
