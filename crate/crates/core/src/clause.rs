use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// A non-empty subset of the variables `1..=p`, one prime implicant of a
/// positive function.
///
/// Clauses order by cardinality first and by bit pattern second; that order
/// is the canonical order of clauses inside a [`FunctionRep`](crate::FunctionRep).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Clause<W: Word = u64> {
    bits: W,
    dim: u8,
}

pub(crate) fn check_dimension<W: Word>(p: u32) -> Result<()> {
    let cap = W::capacity();
    if p == 0 || p > cap {
        return Err(Error::InvalidDimension(p, cap));
    }
    Ok(())
}

impl<W: Word> Clause<W> {
    pub fn new(vars: impl IntoIterator<Item = u32>, p: u32) -> Result<Self> {
        check_dimension::<W>(p)?;
        let mut bits = W::zero();
        for var in vars {
            if var == 0 || var > p {
                return Err(Error::VariableOutOfRange { var, p });
            }
            bits = bits | W::var(var);
        }
        Self::from_bits(bits, p)
    }

    pub fn from_bits(bits: W, p: u32) -> Result<Self> {
        check_dimension::<W>(p)?;
        if bits == W::zero() {
            return Err(Error::EmptyClause);
        }
        if !bits.is_subset(W::full(p)) {
            let var = (bits & !W::full(p)).trailing_zeros() + 1;
            return Err(Error::VariableOutOfRange { var, p });
        }
        Ok(Self::from_bits_unchecked(bits, p))
    }

    /// Caller guarantees `bits` is non-empty and within `1..=p`.
    #[inline]
    pub(crate) fn from_bits_unchecked(bits: W, p: u32) -> Self {
        debug_assert!(bits != W::zero() && bits.is_subset(W::full(p)));
        Clause { bits, dim: p as u8 }
    }

    /// The whole variable set `{1..p}`.
    pub fn full(p: u32) -> Result<Self> {
        check_dimension::<W>(p)?;
        Ok(Self::from_bits_unchecked(W::full(p), p))
    }

    #[inline]
    pub fn bits(&self) -> W {
        self.bits
    }

    #[inline]
    pub fn dim(&self) -> u32 {
        u32::from(self.dim)
    }

    #[inline]
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> u32 {
        self.bits.count_ones()
    }

    #[inline]
    pub fn contains(&self, var: u32) -> bool {
        var >= 1 && var <= self.dim() && self.bits.has_var(var)
    }

    /// `self ⊆ other`.
    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(other.bits)
    }

    #[inline]
    pub fn is_strict_subset(&self, other: &Self) -> bool {
        self.bits != other.bits && self.is_subset(other)
    }

    #[inline]
    pub fn comparable(&self, other: &Self) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }

    pub fn vars(&self) -> impl ExactSizeIterator<Item = u32> {
        self.bits.vars()
    }

    /// Variables of `1..=p` not in the clause.
    pub fn missing(&self) -> impl ExactSizeIterator<Item = u32> {
        (W::full(self.dim()) & !self.bits).vars()
    }

    /// The clause extended with `var`.
    pub fn with(&self, var: u32) -> Self {
        Self::from_bits_unchecked(self.bits | W::var(var), self.dim())
    }

    /// The clause without `var`, or `None` if that would leave it empty.
    pub fn without(&self, var: u32) -> Option<Self> {
        let bits = self.bits & !W::var(var);
        (bits != W::zero()).then(|| Self::from_bits_unchecked(bits, self.dim()))
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_bits_unchecked(self.bits | other.bits, self.dim())
    }
}

impl<W: Word> Ord for Clause<W> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.bits.cmp(&other.bits))
            .then_with(|| self.dim.cmp(&other.dim))
    }
}

impl<W: Word> PartialOrd for Clause<W> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<W: Word> fmt::Display for Clause<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vars().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl<W: Word> fmt::Debug for Clause<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_out_of_range() {
        assert_eq!(Clause::<u64>::new([], 3), Err(Error::EmptyClause));
        assert_eq!(
            Clause::<u64>::new([1, 4], 3),
            Err(Error::VariableOutOfRange { var: 4, p: 3 })
        );
        assert_eq!(
            Clause::<u64>::from_bits(0b1000, 3),
            Err(Error::VariableOutOfRange { var: 4, p: 3 })
        );
        assert_eq!(Clause::<u8>::new([1], 9), Err(Error::InvalidDimension(9, 8)));
        assert_eq!(Clause::<u64>::new([1], 0), Err(Error::InvalidDimension(0, 64)));
    }

    #[test]
    fn canonical_order_is_cardinality_then_value() {
        let p = 4;
        let a = Clause::<u32>::new([3, 4], p).unwrap();
        let b = Clause::<u32>::new([1, 2, 3], p).unwrap();
        let c = Clause::<u32>::new([1, 3], p).unwrap();
        let mut v = vec![b, a, c];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn edits() {
        let c = Clause::<u16>::new([2, 4], 5).unwrap();
        assert_eq!(c.missing().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(c.with(1).to_string(), "{1,2,4}");
        assert_eq!(c.without(2).unwrap().to_string(), "{4}");
        assert!(Clause::<u16>::new([2], 5).unwrap().without(2).is_none());
        assert!(c.contains(4) && !c.contains(6));
    }
}
