//! Linear algebra over the field with two elements.
//!
//! Vectors and matrix rows are bit-packed into `u64` words. Elimination is
//! plain word-level XOR with the lowest available index as pivot, so every
//! basis this module hands out is reproducible from run to run.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A fixed-length vector over F₂.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector with ones exactly at `indices` (repeated indices cancel).
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn unit(len: usize, i: usize) -> Self {
        Self::from_indices(len, [i])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product over F₂.
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, "]")
    }
}

/// A dense `rows × cols` matrix over F₂, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from 0/1 rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                if x % 2 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`; every column must
    /// have length `rows`.
    pub fn from_columns(rows: usize, columns: &[BitVector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.rows && j < self.cols,
            "entry ({i},{j}) out of bounds"
        );
        (self.data[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(
            i < self.rows && j < self.cols,
            "entry ({i},{j}) out of bounds"
        );
        let w = &mut self.data[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize, j: usize) {
        assert!(
            i < self.rows && j < self.cols,
            "entry ({i},{j}) out of bounds"
        );
        self.data[i * self.stride + j / WORD] ^= 1u64 << (j % WORD);
    }

    pub fn row(&self, i: usize) -> BitVector {
        BitVector {
            len: self.cols,
            words: self.row_words(i).to_vec(),
        }
    }

    pub fn column(&self, j: usize) -> BitVector {
        let mut v = BitVector::zeros(self.rows);
        for i in 0..self.rows {
            if self.get(i, j) {
                v.set(i, true);
            }
        }
        v
    }

    #[inline]
    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// `row[dst] ^= row[src]`
    fn xor_rows(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let (d, s) = (dst * self.stride, src * self.stride);
        for k in 0..self.stride {
            let v = self.data[s + k];
            self.data[d + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.stride {
            self.data.swap(a * self.stride + k, b * self.stride + k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row(i).ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        let mut out = BitVector::zeros(self.rows);
        for i in 0..self.rows {
            let odd = self
                .row_words(i)
                .iter()
                .zip(&v.words)
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>()
                % 2
                == 1;
            if odd {
                out.set(i, true);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in mul");
        let mut out = BitMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in self.row(i).ones() {
                let (o, r) = (i * out.stride, k * rhs.stride);
                for w in 0..out.stride {
                    out.data[o + w] ^= rhs.data[r + w];
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &BitMatrix) -> BitMatrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "dimension mismatch in add"
        );
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a ^= b;
        }
        out
    }

    /// Row-reduces in place to reduced row echelon form and returns the pivot
    /// columns in increasing order.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let (wi, mask) = (c / WORD, 1u64 << (c % WORD));
            let Some(p) = (r..self.rows).find(|&i| self.data[i * self.stride + wi] & mask != 0)
            else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.data[i * self.stride + wi] & mask != 0 {
                    self.xor_rows(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate along the shorter side
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// A basis of `{v : M·v = 0}`, one vector per non-pivot column in
    /// increasing column order.
    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVector::unit(self.cols, f);
                for (row, &p) in pivots.iter().enumerate() {
                    if m.get(row, f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// The inverse, if the matrix is square and invertible.
    pub fn inverse(&self) -> Option<BitMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = BitMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in self.row(i).ones() {
                aug.set(i, j, true);
            }
            aug.set(i, n + i, true);
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = BitMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if aug.get(i, n + j) {
                    inv.set(i, j, true);
                }
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Incrementally maintained echelon basis of a subspace, remembering how each
/// stored vector was combined from the inserted ones.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    // (pivot, reduced vector, combination of inserted vectors)
    rows: Vec<(usize, BitVector, BitVector)>,
    inserted: usize,
    capacity: usize,
}

impl Echelon {
    /// `capacity` bounds the number of vectors that may be inserted.
    pub fn new(dim: usize, capacity: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
            inserted: 0,
            capacity,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored basis. Returns the residual and the
    /// combination of inserted vectors that was subtracted.
    pub fn reduce(&self, v: &BitVector) -> (BitVector, BitVector) {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        let mut residual = v.clone();
        let mut combo = BitVector::zeros(self.capacity);
        for (pivot, row, c) in &self.rows {
            if residual.get(*pivot) {
                residual.xor_assign(row);
                combo.xor_assign(c);
            }
        }
        (residual, combo)
    }

    /// Inserts `v`; returns `true` when it was independent of what was
    /// already stored.
    pub fn insert(&mut self, v: &BitVector) -> bool {
        assert!(self.inserted < self.capacity, "echelon capacity exceeded");
        let id = self.inserted;
        self.inserted += 1;
        let (residual, mut combo) = self.reduce(v);
        let Some(pivot) = residual.first_one() else {
            return false;
        };
        combo.flip(id);
        // keep earlier rows free of the new pivot so `reduce` is one pass
        for (_, row, c) in &mut self.rows {
            if row.get(pivot) {
                row.xor_assign(&residual);
                c.xor_assign(&combo);
            }
        }
        self.rows.push((pivot, residual, combo));
        true
    }
}

/// A sparse `rows × cols` matrix over F₂ stored by columns; each column is
/// the sorted list of its nonzero rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<u32>>,
}

/// Column-reduced form of a [`SparseMatrix`].
#[derive(Clone, Debug)]
pub struct ColumnReduction {
    /// `pivots[c]` = lowest (largest) row of reduced column `c`, if nonzero.
    pub pivots: Vec<Option<u32>>,
    /// Combinations of original columns that reduce to zero, as sorted
    /// column lists; these form a basis of the kernel.
    pub kernel: Vec<Vec<u32>>,
}

impl ColumnReduction {
    pub fn rank(&self) -> usize {
        self.pivots.iter().filter(|p| p.is_some()).count()
    }
}

fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Columns given as lists of row indices; repeated entries cancel.
    pub fn from_columns(rows: usize, columns: Vec<Vec<u32>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                let mut out: Vec<u32> = Vec::with_capacity(c.len());
                for r in c {
                    assert!((r as usize) < rows, "row {r} out of range {rows}");
                    if out.last() == Some(&r) {
                        out.pop();
                    } else {
                        out.push(r);
                    }
                }
                out
            })
            .collect();
        Self { rows, columns }
    }

    pub fn from_dense(m: &BitMatrix) -> Self {
        let t = m.transpose();
        let columns = (0..m.cols())
            .map(|j| t.row(j).ones().map(|i| i as u32).collect())
            .collect();
        Self {
            rows: m.rows(),
            columns,
        }
    }

    pub fn to_dense(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows, self.columns.len());
        for (j, c) in self.columns.iter().enumerate() {
            for &i in c {
                m.set(i as usize, j, true);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[u32] {
        &self.columns[j]
    }

    pub fn column_vector(&self, j: usize) -> BitVector {
        BitVector::from_indices(self.rows, self.columns[j].iter().map(|&i| i as usize))
    }

    /// `self · v` for `v` given by its support.
    pub fn apply(&self, support: &[u32]) -> Vec<u32> {
        let mut acc = Vec::new();
        for &j in support {
            acc = xor_sorted(&acc, &self.columns[j as usize]);
        }
        acc
    }

    /// Whether `self · other = 0`.
    pub fn composes_to_zero(&self, other: &SparseMatrix) -> bool {
        assert_eq!(self.cols(), other.rows, "dimension mismatch");
        other.columns.iter().all(|c| self.apply(c).is_empty())
    }

    /// Standard left-to-right column reduction: each column is cleared by
    /// earlier columns sharing its lowest nonzero row.
    pub fn reduce(&self, with_kernel: bool) -> ColumnReduction {
        let mut owner: Vec<Option<u32>> = vec![None; self.rows];
        let mut reduced: Vec<Vec<u32>> = Vec::with_capacity(self.cols());
        let mut combos: Vec<Vec<u32>> = Vec::new();
        let mut pivots = Vec::with_capacity(self.cols());
        let mut kernel = Vec::new();
        for (j, original) in self.columns.iter().enumerate() {
            let mut col = original.clone();
            let mut combo = if with_kernel {
                vec![j as u32]
            } else {
                Vec::new()
            };
            while let Some(&low) = col.last() {
                match owner[low as usize] {
                    Some(i) => {
                        col = xor_sorted(&col, &reduced[i as usize]);
                        if with_kernel {
                            combo = xor_sorted(&combo, &combos[i as usize]);
                        }
                    }
                    None => break,
                }
            }
            match col.last() {
                Some(&low) => {
                    owner[low as usize] = Some(j as u32);
                    pivots.push(Some(low));
                }
                None => {
                    pivots.push(None);
                    if with_kernel {
                        kernel.push(combo.clone());
                    }
                }
            }
            reduced.push(col);
            if with_kernel {
                combos.push(combo);
            }
        }
        ColumnReduction { pivots, kernel }
    }

    pub fn rank(&self) -> usize {
        self.reduce(false).rank()
    }

    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let n = self.cols();
        self.reduce(true)
            .kernel
            .into_iter()
            .map(|c| BitVector::from_indices(n, c.into_iter().map(|i| i as usize)))
            .collect()
    }
}

/// A chain complex of finite-dimensional F₂ vector spaces in degrees
/// `0..ranks.len()`.
///
/// `boundaries[k]` is the matrix of `∂_k : C_k → C_{k-1}` with shape
/// `ranks[k-1] × ranks[k]`; `boundaries[0]` has zero rows.
#[derive(Clone, Debug)]
pub struct ChainComplexF2 {
    ranks: Vec<usize>,
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplexF2 {
    /// Checks shapes and that consecutive boundaries compose to zero.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<BitMatrix>) -> Result<Self> {
        let sparse = boundaries.iter().map(SparseMatrix::from_dense).collect();
        Self::from_sparse(ranks, sparse)
    }

    pub fn from_sparse(ranks: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if ranks.len() != boundaries.len() {
            return Err(Error::MalformedComplex(format!(
                "{} degrees but {} boundary maps",
                ranks.len(),
                boundaries.len()
            )));
        }
        for (k, d) in boundaries.iter().enumerate() {
            let expected_rows = if k == 0 { 0 } else { ranks[k - 1] };
            if d.rows() != expected_rows || d.cols() != ranks[k] {
                return Err(Error::MalformedComplex(format!(
                    "boundary in degree {k} has shape {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    expected_rows,
                    ranks[k]
                )));
            }
        }
        for k in 1..boundaries.len().saturating_sub(1) {
            if !boundaries[k].composes_to_zero(&boundaries[k + 1]) {
                return Err(Error::MalformedComplex(format!(
                    "boundary maps in degrees {k} and {} do not compose to zero",
                    k + 1
                )));
            }
        }
        Ok(Self { ranks, boundaries })
    }

    /// A complex with the given generator counts and all boundaries zero.
    pub fn with_zero_boundaries(ranks: Vec<usize>) -> Self {
        let boundaries = (0..ranks.len())
            .map(|k| SparseMatrix::zeros(if k == 0 { 0 } else { ranks[k - 1] }, ranks[k]))
            .collect();
        Self { ranks, boundaries }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.ranks.len().checked_sub(1)
    }

    pub fn boundary(&self, k: usize) -> &SparseMatrix {
        &self.boundaries[k]
    }

    /// `dim ker ∂_k − rank ∂_{k+1}` for every degree of the complex.
    pub fn homology_dims(&self) -> BTreeMap<usize, usize> {
        let ranks: Vec<usize> = self.boundaries.iter().map(SparseMatrix::rank).collect();
        (0..self.ranks.len())
            .map(|k| {
                let kernel = self.ranks[k] - ranks[k];
                let image = ranks.get(k + 1).copied().unwrap_or(0);
                (k, kernel - image)
            })
            .collect()
    }

    /// Cycles in degree `k` whose classes form a basis of `H_k`.
    ///
    /// Kernel vectors are tried in the order the column reduction finds them
    /// and kept when independent of the boundaries and of earlier picks.
    pub fn cycle_basis(&self, k: usize) -> Vec<BitVector> {
        let n = self.ranks[k];
        let cycles = self.boundaries[k].kernel_basis();
        let images: Vec<BitVector> = match self.boundaries.get(k + 1) {
            Some(d) => (0..d.cols()).map(|j| d.column_vector(j)).collect(),
            None => Vec::new(),
        };
        let mut ech = Echelon::new(n, images.len() + cycles.len());
        for b in &images {
            ech.insert(b);
        }
        cycles.into_iter().filter(|z| ech.insert(z)).collect()
    }
}

/// Homology dimensions of a complex given only by its boundary maps.
///
/// Degree `k` has `boundaries[k].cols()` generators.
pub fn homology_dims(boundaries: &[BitMatrix]) -> Result<BTreeMap<usize, usize>> {
    let ranks = boundaries.iter().map(BitMatrix::cols).collect();
    Ok(ChainComplexF2::new(ranks, boundaries.to_vec())?.homology_dims())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::zeros(0, 0).rank(), 0);
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(BitMatrix::from_rows(&[[1, 1], [1, 1]]).rank(), 1);
        assert_eq!(BitMatrix::zeros(5, 0).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert!(BitMatrix::identity(2).kernel_basis().is_empty());
        let k = BitMatrix::zeros(2, 3).kernel_basis();
        assert_eq!(k.len(), 3);
        let k = BitMatrix::from_rows(&[[1, 1]]).kernel_basis();
        assert_eq!(k, vec![BitVector::from_bits(&[true, true])]);
    }

    #[test]
    fn rank_across_word_boundary() {
        let n = 130;
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
            m.set(i, (i + 1) % n, true);
        }
        // cycle graph incidence: rank n - 1 over F2
        assert_eq!(m.rank(), n - 1);
        assert_eq!(m.kernel_basis().len(), 1);
    }

    #[test]
    fn homology_dims_examples() {
        let c = ChainComplexF2::with_zero_boundaries(vec![1, 0, 0]);
        assert_eq!(c.homology_dims(), BTreeMap::from([(0, 1), (1, 0), (2, 0)]));

        // one 2-cell on three 1-cells, nothing in degree 0
        let d1 = BitMatrix::zeros(0, 3);
        let d2 = BitMatrix::from_rows(&[[1], [1], [1]]);
        let dims = homology_dims(&[BitMatrix::zeros(0, 0), d1, d2]).unwrap();
        assert_eq!(dims.get(&1), Some(&2));
        assert_eq!(dims.get(&2), Some(&0));

        let c = ChainComplexF2::with_zero_boundaries(vec![4]);
        assert_eq!(c.homology_dims(), BTreeMap::from([(0, 4)]));
    }

    #[test]
    fn rejects_non_complex() {
        // ∂1 ∘ ∂2 ≠ 0
        let d0 = BitMatrix::zeros(0, 1);
        let d1 = BitMatrix::from_rows(&[[1]]);
        let d2 = BitMatrix::from_rows(&[[1]]);
        let err = ChainComplexF2::new(vec![1, 1, 1], vec![d0, d1, d2]).unwrap_err();
        assert!(matches!(err, Error::MalformedComplex(_)));
        let bad_shape = ChainComplexF2::new(
            vec![1, 2],
            vec![BitMatrix::zeros(0, 1), BitMatrix::zeros(2, 2)],
        );
        assert!(bad_shape.is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = BitMatrix::from_rows(&[[1, 1, 0], [0, 1, 1], [0, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), BitMatrix::identity(3));
        assert!(BitMatrix::from_rows(&[[1, 1], [1, 1]]).inverse().is_none());
    }

    #[test]
    fn echelon_tracks_combinations() {
        let a = BitVector::from_bits(&[true, true, false]);
        let b = BitVector::from_bits(&[false, true, true]);
        let mut e = Echelon::new(3, 3);
        assert!(e.insert(&a));
        assert!(e.insert(&b));
        let target = BitVector::from_bits(&[true, false, true]);
        let (res, combo) = e.reduce(&target);
        assert!(res.is_zero());
        assert_eq!(combo.ones().collect::<Vec<_>>(), vec![0, 1]);
        assert!(!e.insert(&target));
    }

    #[test]
    fn sparse_agrees_with_dense() {
        let m = BitMatrix::from_rows(&[[1, 1, 0, 1], [0, 1, 1, 1], [1, 0, 1, 0]]);
        let s = SparseMatrix::from_dense(&m);
        assert_eq!(s.to_dense(), m);
        assert_eq!(s.rank(), m.rank());
        let k = s.kernel_basis();
        assert_eq!(k.len(), 4 - m.rank());
        for v in &k {
            assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn cycle_basis_of_circle() {
        // triangle boundary: 3 vertices, 3 edges, H0 = 1, H1 = 1
        let d1 = BitMatrix::from_rows(&[[1, 0, 1], [1, 1, 0], [0, 1, 1]]);
        let c = ChainComplexF2::new(vec![3, 3], vec![BitMatrix::zeros(0, 3), d1]).unwrap();
        assert_eq!(c.homology_dims(), BTreeMap::from([(0, 1), (1, 1)]));
        let z = c.cycle_basis(1);
        assert_eq!(z.len(), 1);
        assert_eq!(z[0].count_ones(), 3);
    }
}
