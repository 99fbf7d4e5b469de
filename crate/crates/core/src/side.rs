//! Subsets of a finite ground set `{0, .., len-1}`, stored as a bitset.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{input, Result};

type Block = u64;
const BITS: usize = Block::BITS as usize;

/// A subset of the ground set `{0, .., len-1}`.
///
/// Two sides are only comparable when they live on the same ground set; the
/// set operations below assume this and debug-assert it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Side {
    len: usize,
    blocks: SmallVec<[Block; 2]>,
}

#[inline]
fn blocks_for(len: usize) -> usize {
    len.div_ceil(BITS)
}

impl Side {
    pub fn empty(len: usize) -> Self {
        Side {
            len,
            blocks: SmallVec::from_elem(0, blocks_for(len)),
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Side::empty(len);
        for b in s.blocks.iter_mut() {
            *b = Block::MAX;
        }
        s.trim();
        s
    }

    /// Builds a side from element indices, rejecting indices outside the ground set.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Result<Self> {
        let mut s = Side::empty(len);
        for i in indices {
            if i >= len {
                return input(format!("element {i} out of range for ground set of size {len}"));
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Builds a side from the low `len` bits of `mask`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        debug_assert!(len <= 64);
        let mut s = Side::empty(len);
        if len > 0 {
            s.blocks[0] = mask;
            s.trim();
        }
        s
    }

    fn trim(&mut self) {
        let extra = self.blocks.len() * BITS - self.len;
        if extra > 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= Block::MAX >> extra;
            }
        }
    }

    /// Size of the ground set this side lives on.
    #[inline]
    pub fn universe_len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / BITS] |= 1 << (i % BITS);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / BITS] &= !(1 << (i % BITS));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.blocks[i / BITS] & (1 << (i % BITS)) != 0
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    #[inline]
    pub fn is_subset(&self, other: &Side) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Side) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Side) -> bool {
        !self.is_disjoint(other)
    }

    fn zip_with(&self, other: &Side, f: impl Fn(Block, Block) -> Block) -> Side {
        debug_assert_eq!(self.len, other.len);
        let mut out = Side {
            len: self.len,
            blocks: self
                .blocks
                .iter()
                .zip(other.blocks.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        };
        out.trim();
        out
    }

    pub fn union(&self, other: &Side) -> Side {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Side) -> Side {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Side) -> Side {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Side {
        let mut out = Side {
            len: self.len,
            blocks: self.blocks.iter().map(|b| !b).collect(),
        };
        out.trim();
        out
    }

    pub fn union_with(&mut self, other: &Side) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(other.blocks.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Side) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(other.blocks.iter()) {
            *a &= b;
        }
    }

    /// `|self ∩ other|` without allocating.
    #[inline]
    pub fn intersection_count(&self, other: &Side) -> usize {
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `|self ∖ other|` without allocating.
    #[inline]
    pub fn difference_count(&self, other: &Side) -> usize {
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(bi * BITS + tz)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Lexicographic order on the sorted index sequences: `[] < [0] < [0,1] < [1]`.
impl Ord for Side {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Side {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
