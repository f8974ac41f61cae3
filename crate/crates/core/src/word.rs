//! Machine words used as clause bit vectors.

use std::fmt::Debug;
use std::hash::Hash;

use num_traits::{PrimInt, Unsigned};

/// Largest dimension supported by any word type.
pub const MAX_DIMENSION: u32 = 64;

/// An unsigned machine word holding one bit per variable.
///
/// Variable `i` (1-based) lives at bit `i - 1`.
pub trait Word: PrimInt + Unsigned + Hash + Debug + Default + Send + Sync + 'static {
    /// Number of variables this word can hold.
    fn capacity() -> u32 {
        (Self::zero().count_zeros()).min(MAX_DIMENSION)
    }

    /// Word with only the bit of variable `var` (1-based) set.
    #[inline]
    fn var(var: u32) -> Self {
        Self::one() << (var as usize - 1)
    }

    /// Word with the bits of variables `1..=p` set.
    #[inline]
    fn full(p: u32) -> Self {
        if p >= Self::zero().count_zeros() {
            !Self::zero()
        } else {
            (Self::one() << p as usize) - Self::one()
        }
    }

    #[inline]
    fn has_var(self, var: u32) -> bool {
        self & Self::var(var) != Self::zero()
    }

    /// `self ⊆ other`.
    #[inline]
    fn is_subset(self, other: Self) -> bool {
        self & !other == Self::zero()
    }

    #[inline]
    fn widen(self) -> u64 {
        // capacity() never exceeds 64 bits of payload
        self.to_u64().unwrap_or(u64::MAX)
    }

    #[inline]
    fn narrow(bits: u64) -> Self {
        Self::from(bits).expect("bit pattern exceeds word width")
    }

    /// Iterator over the 1-based variables whose bit is set.
    fn vars(self) -> Vars<Self> {
        Vars(self)
    }
}

impl<T> Word for T where T: PrimInt + Unsigned + Hash + Debug + Default + Send + Sync + 'static {}

/// Set bits of a word as 1-based variable indices, ascending.
#[derive(Clone, Copy, Debug)]
pub struct Vars<W>(W);

impl<W: Word> Iterator for Vars<W> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == W::zero() {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 = self.0 & (self.0 - W::one());
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl<W: Word> ExactSizeIterator for Vars<W> {}
