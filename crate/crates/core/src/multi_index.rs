//! Bitset labels for basis forms and Levi-Civita symbols.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported frame dimension `d = 1 + n`.
pub const MAX_DIM: usize = 16;

/// Strictly increasing set of frame indices `{0, ..., n}`; bit `i` set means
/// the factor `e^i` is present. Index 0 is the temporal leg.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MultiIndex(u16);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    pub fn from_bits(bits: u16) -> Self {
        MultiIndex(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn single(index: usize) -> Self {
        assert!(index < MAX_DIM, "frame index {index} out of range");
        MultiIndex(1 << index)
    }

    /// Sorts `indices` into canonical order. Returns the permutation sign and
    /// the index, or `None` when an index repeats (the wedge vanishes).
    pub fn from_indices(indices: &[usize]) -> Option<(i8, MultiIndex)> {
        let mut bits = 0u16;
        let mut sign = 1i8;
        for &i in indices {
            assert!(i < MAX_DIM, "frame index {i} out of range");
            let bit = 1u16 << i;
            if bits & bit != 0 {
                return None;
            }
            // every already-placed index above `i` must hop over it
            if (bits >> i).count_ones() % 2 == 1 {
                sign = -sign;
            }
            bits |= bit;
        }
        Some((sign, MultiIndex(bits)))
    }

    /// `{0, 1, ..., dim - 1}`.
    pub fn full(dim: usize) -> Self {
        assert!(dim <= MAX_DIM);
        MultiIndex(((1u32 << dim) - 1) as u16)
    }

    /// `{1, ..., n}` for `dim = 1 + n`.
    pub fn spatial_full(dim: usize) -> Self {
        MultiIndex(Self::full(dim).0 & !1)
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_DIM && self.0 & (1 << index) != 0
    }

    pub fn is_spatial(self) -> bool {
        !self.contains(0)
    }

    pub fn is_disjoint(self, other: MultiIndex) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: MultiIndex) -> Self {
        MultiIndex(self.0 | other.0)
    }

    pub fn without(self, index: usize) -> Self {
        MultiIndex(self.0 & !(1 << index))
    }

    pub fn complement(self, dim: usize) -> Self {
        MultiIndex(Self::full(dim).0 & !self.0)
    }

    /// Largest index present plus one, i.e. the smallest dimension that can hold it.
    pub fn min_dim(self) -> usize {
        16 - self.0.leading_zeros() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_DIM).filter(move |i| bits & (1 << i) != 0)
    }

    /// Sign of sorting the concatenation `self ++ other` into increasing
    /// order, or 0 when the two share an index.
    pub fn wedge_sign(self, other: MultiIndex) -> i8 {
        if !self.is_disjoint(other) {
            return 0;
        }
        let mut swaps = 0u32;
        for j in other.indices() {
            swaps += (self.0 >> j).count_ones();
        }
        if swaps.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Every index of cardinality `degree` drawn from `0..dim`, in canonical order.
    pub fn all_of_degree(dim: usize, degree: usize) -> Vec<MultiIndex> {
        assert!(dim <= MAX_DIM);
        let mut out: Vec<MultiIndex> = (0..(1u32 << dim))
            .map(|b| MultiIndex(b as u16))
            .filter(|m| m.degree() == degree)
            .collect();
        out.sort();
        out
    }

    /// All `2^dim` indices, ordered by degree then lexicographically.
    pub fn all(dim: usize) -> Vec<MultiIndex> {
        (0..=dim)
            .flat_map(|p| Self::all_of_degree(dim, p))
            .collect()
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Levi-Civita symbol `ε_{i_0 ... i_n}` on `d = indices.len()` slots with
/// `ε_{01...n} = +1`; 0 on any repetition.
pub fn levi_civita(indices: &[usize]) -> Result<i8> {
    let d = indices.len();
    if d == 0 || d > MAX_DIM {
        return Err(Error::DimensionOutOfRange(d));
    }
    if let Some(&bad) = indices.iter().find(|&&i| i >= d) {
        return Err(Error::IndexOutOfRange { index: bad, dim: d });
    }
    Ok(MultiIndex::from_indices(indices).map_or(0, |(s, _)| s))
}
