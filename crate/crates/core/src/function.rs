use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::clause::{check_dimension, Clause};
use crate::error::{Error, Result};
use crate::word::Word;

/// A non-degenerate positive monotone Boolean function, held as the antichain
/// of its prime implicants.
///
/// Invariants: non-empty, pairwise incomparable clauses, the clauses cover
/// `{1..p}`, clauses kept in canonical order. Equality, hashing and ordering
/// all use that canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunctionRep<W: Word = u64> {
    p: u32,
    clauses: Vec<Clause<W>>,
}

fn dims_agree<W: Word>(clauses: &[Clause<W>], p: Option<u32>) -> Result<()> {
    let expected = match p.or_else(|| clauses.first().map(Clause::dim)) {
        Some(p) => p,
        None => return Ok(()),
    };
    match clauses.iter().find(|c| c.dim() != expected) {
        Some(c) => Err(Error::DimensionMismatch {
            expected,
            found: c.dim(),
        }),
        None => Ok(()),
    }
}

fn first_comparable<W: Word>(clauses: &[Clause<W>]) -> Option<(Clause<W>, Clause<W>)> {
    for (i, a) in clauses.iter().enumerate() {
        for b in &clauses[i + 1..] {
            if a.bits() == b.bits() {
                continue;
            }
            if a.is_subset(b) {
                return Some((*a, *b));
            }
            if b.is_subset(a) {
                return Some((*b, *a));
            }
        }
    }
    None
}

/// True iff no clause is contained in another distinct clause.
pub fn is_antichain<W: Word>(clauses: &[Clause<W>]) -> Result<bool> {
    dims_agree(clauses, None)?;
    Ok(first_comparable(clauses).is_none())
}

/// True iff the union of the clauses is `{1..p}`.
pub fn is_cover<W: Word>(clauses: &[Clause<W>], p: u32) -> Result<bool> {
    check_dimension::<W>(p)?;
    dims_agree(clauses, Some(p))?;
    Ok(union_bits(clauses) == W::full(p))
}

#[inline]
pub(crate) fn union_bits<W: Word>(clauses: &[Clause<W>]) -> W {
    clauses.iter().fold(W::zero(), |acc, c| acc | c.bits())
}

impl<W: Word> FunctionRep<W> {
    /// Validates and canonicalises a clause set. Duplicate clauses collapse.
    pub fn new(mut clauses: Vec<Clause<W>>, p: u32) -> Result<Self> {
        check_dimension::<W>(p)?;
        dims_agree(&clauses, Some(p))?;
        if clauses.is_empty() {
            return Err(Error::EmptyFunction);
        }
        clauses.sort_unstable();
        clauses.dedup();
        if let Some((sub, sup)) = first_comparable(&clauses) {
            return Err(Error::NotAntichain {
                subset: sub.to_string(),
                superset: sup.to_string(),
            });
        }
        let uncovered = W::full(p) & !union_bits(&clauses);
        if uncovered != W::zero() {
            return Err(Error::NotCover {
                missing: uncovered.vars().collect(),
            });
        }
        Ok(FunctionRep { p, clauses })
    }

    pub fn from_bits(bits: impl IntoIterator<Item = W>, p: u32) -> Result<Self> {
        let clauses = bits
            .into_iter()
            .map(|b| Clause::from_bits(b, p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(clauses, p)
    }

    /// Builds a function from index lists, e.g. `&[&[1], &[2, 3]]`.
    pub fn from_sets<S: AsRef<[u32]>>(sets: &[S], p: u32) -> Result<Self> {
        let clauses = sets
            .iter()
            .map(|s| Clause::new(s.as_ref().iter().copied(), p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(clauses, p)
    }

    /// Caller guarantees the clause set is a valid antichain cover.
    pub(crate) fn from_clauses_unchecked(mut clauses: Vec<Clause<W>>, p: u32) -> Self {
        clauses.sort_unstable();
        let f = FunctionRep { p, clauses };
        debug_assert!(f.is_valid(), "invalid function constructed: {f}");
        f
    }

    /// The single conjunction `x1 ∧ … ∧ xp`, bottom of the order.
    pub fn infimum(p: u32) -> Result<Self> {
        Ok(FunctionRep {
            p,
            clauses: vec![Clause::full(p)?],
        })
    }

    /// The disjunction `x1 ∨ … ∨ xp`, top of the order.
    pub fn supremum(p: u32) -> Result<Self> {
        check_dimension::<W>(p)?;
        let clauses = (1..=p)
            .map(|v| Clause::from_bits_unchecked(W::var(v), p))
            .collect();
        Ok(FunctionRep { p, clauses })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn clauses(&self) -> &[Clause<W>] {
        &self.clauses
    }

    #[inline]
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_infimum(&self) -> bool {
        self.clauses.len() == 1 && self.clauses[0].bits() == W::full(self.p)
    }

    pub fn is_supremum(&self) -> bool {
        self.clauses.len() == self.p as usize && self.clauses.iter().all(|c| c.len() == 1)
    }

    pub fn contains(&self, clause: &Clause<W>) -> bool {
        self.clauses.binary_search(clause).is_ok()
    }

    /// Re-checks every structural invariant.
    pub fn is_valid(&self) -> bool {
        !self.clauses.is_empty()
            && self.clauses.windows(2).all(|w| w[0] < w[1])
            && self.clauses.iter().all(|c| c.dim() == self.p)
            && first_comparable(&self.clauses).is_none()
            && union_bits(&self.clauses) == W::full(self.p)
    }

    /// `self ≼ other`: every clause of `self` has a witness in `other`, i.e.
    /// a clause of `other` contained in it.
    pub fn precedes(&self, other: &Self) -> Result<bool> {
        if self.p != other.p {
            return Err(Error::DimensionMismatch {
                expected: self.p,
                found: other.p,
            });
        }
        Ok(self
            .clauses
            .iter()
            .all(|s| other.clauses.iter().any(|w| w.is_subset(s))))
    }

    /// True iff `state` (bit `i-1` = value of `x_i`) is in the True set.
    #[inline]
    pub fn eval(&self, state: W) -> bool {
        self.clauses.iter().any(|c| c.bits().is_subset(state))
    }

    /// Index lists of the clauses in canonical order.
    pub fn to_sets(&self) -> Vec<Vec<u32>> {
        self.clauses.iter().map(|c| c.vars().collect()).collect()
    }

    /// The same function over a different word type.
    pub fn convert<V: Word>(&self) -> Result<FunctionRep<V>> {
        FunctionRep::from_bits(
            self.clauses.iter().map(|c| V::narrow(c.bits().widen())),
            self.p,
        )
    }
}

impl<W: Word> fmt::Display for FunctionRep<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl<W: Word> fmt::Debug for FunctionRep<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/p={}", self.p)
    }
}

impl<W: Word> Serialize for FunctionRep<W> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.clauses.len()))?;
        for c in &self.clauses {
            seq.serialize_element(&c.vars().collect::<Vec<u32>>())?;
        }
        seq.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

/// Per-variable regulation sign. Affects only how a function is written,
/// never where it sits in the order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignStructure {
    signs: Vec<Sign>,
}

impl SignStructure {
    pub fn all_positive(p: u32) -> Self {
        SignStructure {
            signs: vec![Sign::Positive; p as usize],
        }
    }

    pub fn new(signs: Vec<Sign>) -> Self {
        SignStructure { signs }
    }

    /// Parses a pattern such as `++-`.
    pub fn parse(pattern: &str) -> Result<Self> {
        pattern
            .chars()
            .enumerate()
            .map(|(pos, ch)| match ch {
                '+' => Ok(Sign::Positive),
                '-' => Ok(Sign::Negative),
                _ => Err(Error::Syntax {
                    pos,
                    msg: format!("expected '+' or '-' in sign pattern, found {ch:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignStructure::new)
    }

    pub fn p(&self) -> u32 {
        self.signs.len() as u32
    }

    /// Sign of the 1-based variable `var`.
    pub fn sign(&self, var: u32) -> Sign {
        self.signs[var as usize - 1]
    }

    pub fn is_negative(&self, var: u32) -> bool {
        self.sign(var) == Sign::Negative
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn check_dimension(&self, p: u32) -> Result<()> {
        if self.p() != p {
            return Err(Error::DimensionMismatch {
                expected: p,
                found: self.p(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for SignStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            f.write_str(match s {
                Sign::Positive => "+",
                Sign::Negative => "-",
            })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl(v: &[u32], p: u32) -> Clause {
        Clause::new(v.iter().copied(), p).unwrap()
    }

    fn f(sets: &[&[u32]], p: u32) -> FunctionRep {
        FunctionRep::from_sets(sets, p).unwrap()
    }

    #[test]
    fn antichain_examples() {
        assert!(is_antichain(&[cl(&[1, 2, 3], 4), cl(&[2, 4], 4)]).unwrap());
        assert!(!is_antichain(&[cl(&[1], 4), cl(&[1, 2], 4)]).unwrap());
        assert!(is_antichain(&[cl(&[1, 2], 3), cl(&[1, 3], 3), cl(&[2, 3], 3)]).unwrap());
        assert_eq!(
            is_antichain(&[cl(&[1], 3), cl(&[2], 4)]),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 4
            })
        );
    }

    #[test]
    fn cover_examples() {
        assert!(is_cover(&[cl(&[1, 2, 3], 4), cl(&[2, 4], 4)], 4).unwrap());
        assert!(!is_cover(&[cl(&[1, 2], 4), cl(&[1, 3], 4)], 4).unwrap());
        assert!(is_cover(&[cl(&[1, 2, 3, 4], 4)], 4).unwrap());
        assert!(is_cover(&[cl(&[1], 3)], 4).is_err());
    }

    #[test]
    fn precedes_examples() {
        let s = f(&[&[1, 2, 3], &[1, 3, 4], &[2, 3, 4]], 4);
        let s2 = f(&[&[1, 2, 3], &[3, 4]], 4);
        assert!(s.precedes(&s2).unwrap());
        assert!(s.precedes(&s).unwrap());

        let a = f(&[&[1, 3], &[2, 3, 4]], 4);
        assert!(!a.precedes(&s2).unwrap());
        assert!(!s2.precedes(&a).unwrap());

        let other_p = FunctionRep::<u64>::infimum(3).unwrap();
        assert!(s.precedes(&other_p).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(FunctionRep::<u64>::infimum(3).unwrap().to_string(), "{{1,2,3}}");
        assert_eq!(
            FunctionRep::<u64>::supremum(3).unwrap().to_string(),
            "{{1},{2},{3}}"
        );
        let one = FunctionRep::<u8>::infimum(1).unwrap();
        assert_eq!(one, FunctionRep::<u8>::supremum(1).unwrap());
        assert!(one.is_infimum() && one.is_supremum());
        assert!(FunctionRep::<u64>::infimum(0).is_err());
        assert!(FunctionRep::<u64>::supremum(0).is_err());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FunctionRep::<u64>::from_sets(&[&[1, 2][..], &[1]], 2),
            Err(Error::NotAntichain {
                subset: "{1}".into(),
                superset: "{1,2}".into()
            })
        );
        assert_eq!(
            FunctionRep::<u64>::from_sets(&[&[1, 2][..], &[1, 3]], 4),
            Err(Error::NotCover { missing: vec![4] })
        );
        assert_eq!(
            FunctionRep::<u64>::from_sets::<&[u32]>(&[], 4),
            Err(Error::EmptyFunction)
        );
    }

    #[test]
    fn canonical_equality() {
        let a = f(&[&[3, 4], &[1, 2, 3]], 4);
        let b = f(&[&[1, 2, 3], &[3, 4]], 4);
        assert_eq!(a, b);
        assert_eq!(a.to_sets(), vec![vec![3, 4], vec![1, 2, 3]]);
    }
}
