//! Brute-force ground truth: exhaustive enumeration, the Hasse cover relation
//! computed from truth tables, and the counting recurrence.
//!
//! Nothing here goes through the neighbour rules or the witness order; the
//! order used is True-set inclusion on explicit truth tables.

use std::collections::HashMap;

use num_bigint::BigUint;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::clause::{check_dimension, Clause};
use crate::error::{Error, Result};
use crate::function::FunctionRep;
use crate::truth::TruthTable;
use crate::word::Word;

/// Enumeration limit without the long-running flag.
pub const ENUMERATE_MAX_P: u32 = 5;
/// Enumeration limit with the long-running flag (several seconds, 7.8M functions).
pub const ENUMERATE_MAX_P_LONG: u32 = 6;
/// Hasse relation limit without the long-running flag.
pub const HASSE_MAX_P: u32 = 4;
/// Hasse relation limit with the long-running flag (seconds in release builds).
pub const HASSE_MAX_P_LONG: u32 = 5;

/// Dedekind numbers `M(1..=9)`: positive monotone functions of `p`
/// variables, degenerate ones and both constants included.
pub const DEDEKIND: [&str; 9] = [
    "3",
    "6",
    "20",
    "168",
    "7581",
    "7828354",
    "2414682040998",
    "56130437228687557907788",
    "286386577668298411128469151667598498812366",
];

fn enumeration_cap(p: u32, long: bool, normal: u32, extended: u32, what: &str) -> Result<()> {
    let cap = if long { extended } else { normal };
    if p > cap {
        return Err(Error::capability(format!("{what} at p={p}"), u64::from(cap)));
    }
    Ok(())
}

/// Non-empty subsets of `{1..p}` in canonical clause order, with for each the
/// set of later subsets incomparable to it.
struct SubsetTable {
    masks: Vec<u64>,
    incomparable_after: Vec<u64>,
    full: u64,
}

impl SubsetTable {
    fn new(p: u32) -> Self {
        debug_assert!(p <= 6, "subset indices must fit a u64");
        let full = (1u64 << p) - 1;
        let mut masks: Vec<u64> = (1..=full).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        let incomparable_after = (0..masks.len())
            .map(|i| {
                let a = masks[i];
                (i + 1..masks.len())
                    .filter(|&j| {
                        let b = masks[j];
                        a & !b != 0 && b & !a != 0
                    })
                    .fold(0u64, |acc, j| acc | 1 << j)
            })
            .collect();
        SubsetTable {
            masks,
            incomparable_after,
            full,
        }
    }

    /// Calls `visit` with the subset indices of every antichain cover whose
    /// first member is `first`.
    fn walk_from(&self, first: usize, visit: &mut impl FnMut(&[usize])) {
        let mut chosen = vec![first];
        self.extend(
            &mut chosen,
            self.incomparable_after[first],
            self.masks[first],
            visit,
        );
    }

    fn extend(
        &self,
        chosen: &mut Vec<usize>,
        allowed: u64,
        union: u64,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if union == self.full {
            visit(chosen);
        }
        let mut rest = allowed;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            chosen.push(j);
            self.extend(
                chosen,
                allowed & self.incomparable_after[j],
                union | self.masks[j],
                visit,
            );
            chosen.pop();
        }
    }
}

/// Number of antichain covers of `{1..p}`, counted without materialising them.
pub fn count_all(p: u32, long: bool) -> Result<u64> {
    check_dimension::<u64>(p)?;
    enumeration_cap(p, long, ENUMERATE_MAX_P, ENUMERATE_MAX_P_LONG, "enumeration")?;
    let table = SubsetTable::new(p);
    Ok((0..table.masks.len())
        .into_par_iter()
        .map(|first| {
            let mut n = 0u64;
            table.walk_from(first, &mut |_| n += 1);
            n
        })
        .sum())
}

/// Every antichain cover of `{1..p}` exactly once, in canonical order.
pub fn enumerate_all<W: Word>(p: u32, long: bool) -> Result<Vec<FunctionRep<W>>> {
    check_dimension::<W>(p)?;
    enumeration_cap(p, long, ENUMERATE_MAX_P, ENUMERATE_MAX_P_LONG, "enumeration")?;
    let table = SubsetTable::new(p);
    let parts: Vec<Vec<FunctionRep<W>>> = (0..table.masks.len())
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            table.walk_from(first, &mut |idx| {
                let clauses = idx
                    .iter()
                    .map(|&i| Clause::from_bits_unchecked(W::narrow(table.masks[i]), p))
                    .collect();
                out.push(FunctionRep::from_clauses_unchecked(clauses, p));
            });
            out
        })
        .collect();
    let mut all: Vec<FunctionRep<W>> = parts.into_iter().flatten().collect();
    all.sort_unstable();
    Ok(all)
}

/// Truth table straight from the True-set definition: `x` is true iff some
/// clause has all its variables set in `x`.
pub fn table_of<W: Word>(f: &FunctionRep<W>) -> Result<TruthTable> {
    TruthTable::from_fn(f.p(), |x| {
        f.clauses().iter().any(|c| c.bits().widen() & !x == 0)
    })
}

/// The whole of `F_p` with truth tables, answering cover queries by brute force.
pub struct HasseOracle<W: Word = u64> {
    functions: Vec<FunctionRep<W>>,
    tables: Vec<TruthTable>,
    sizes: Vec<u64>,
    index: HashMap<FunctionRep<W>, usize>,
}

impl<W: Word> HasseOracle<W> {
    /// Enumerates `F_p`. Subject to the enumeration limits.
    pub fn new(p: u32, long: bool) -> Result<Self> {
        let functions = enumerate_all::<W>(p, long)?;
        let tables = functions
            .par_iter()
            .map(table_of)
            .collect::<Result<Vec<_>>>()?;
        let sizes = tables.iter().map(TruthTable::count_true).collect();
        let index = functions
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();
        Ok(HasseOracle {
            functions,
            tables,
            sizes,
            index,
        })
    }

    pub fn functions(&self) -> &[FunctionRep<W>] {
        &self.functions
    }

    pub fn table(&self, f: &FunctionRep<W>) -> Option<&TruthTable> {
        self.index.get(f).map(|&i| &self.tables[i])
    }

    fn lookup(&self, f: &FunctionRep<W>) -> usize {
        *self
            .index
            .get(f)
            .unwrap_or_else(|| panic!("{f} is not a member of the enumerated set"))
    }

    /// Minimal elements strictly above (`up`) or below `f`.
    fn covers(&self, f: &FunctionRep<W>, up: bool) -> Vec<FunctionRep<W>> {
        let a = self.lookup(f);
        let ta = &self.tables[a];
        let mut beyond: Vec<usize> = (0..self.functions.len())
            .filter(|&b| {
                b != a
                    && if up {
                        ta.le(&self.tables[b])
                    } else {
                        self.tables[b].le(ta)
                    }
            })
            .collect();
        // nearest first: anything between a and b is nearer to a than b is
        if up {
            beyond.sort_by_key(|&b| self.sizes[b]);
        } else {
            beyond.sort_by_key(|&b| std::cmp::Reverse(self.sizes[b]));
        }
        let mut covers: Vec<usize> = Vec::new();
        for b in beyond {
            let tb = &self.tables[b];
            let blocked = covers.iter().any(|&c| {
                if up {
                    self.tables[c].le(tb)
                } else {
                    tb.le(&self.tables[c])
                }
            });
            if !blocked {
                covers.push(b);
            }
        }
        let mut out: Vec<FunctionRep<W>> =
            covers.into_iter().map(|i| self.functions[i].clone()).collect();
        out.sort_unstable();
        out
    }

    /// Brute-force immediate parents.
    pub fn parents(&self, f: &FunctionRep<W>) -> Vec<FunctionRep<W>> {
        self.covers(f, true)
    }

    /// Brute-force immediate children.
    pub fn children(&self, f: &FunctionRep<W>) -> Vec<FunctionRep<W>> {
        self.covers(f, false)
    }

    /// Every cover pair `(lower, upper)`, sorted.
    pub fn edges(&self) -> Vec<(FunctionRep<W>, FunctionRep<W>)> {
        let mut out: Vec<_> = self
            .functions
            .par_iter()
            .flat_map_iter(|a| {
                self.parents(a)
                    .into_iter()
                    .map(move |b| (a.clone(), b))
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// The Hasse cover relation of `F_p`.
pub fn hasse_edges<W: Word>(p: u32, long: bool) -> Result<Vec<(FunctionRep<W>, FunctionRep<W>)>> {
    check_dimension::<W>(p)?;
    enumeration_cap(p, long, HASSE_MAX_P, HASSE_MAX_P_LONG, "Hasse relation")?;
    Ok(HasseOracle::<W>::new(p, long)?.edges())
}

/// Whether each variable is positive and essential; see
/// [`check_monotone_nondegenerate`](crate::truth::check_monotone_nondegenerate).
pub use crate::truth::check_monotone_nondegenerate;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub p: u32,
    #[serde(serialize_with = "as_decimal")]
    pub m: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub n: BigUint,
    /// `|F_p|` by exhaustive enumeration, when it was run.
    pub enumerated: Option<u64>,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

pub fn dedekind(p: u32) -> Option<BigUint> {
    let s = DEDEKIND.get(p.checked_sub(1)? as usize)?;
    BigUint::parse_bytes(s.as_bytes(), 10)
}

fn binomial(n: u32, k: u32) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

/// `N(p) = M(p) - 2 - Σ_{k<p} C(p,k)·N(k)` for `p = 1..=m_values.len()`.
/// Rows with `p ≤ enumerate_up_to` are also counted exhaustively and must agree.
pub fn count_table(m_values: &[BigUint], enumerate_up_to: u32, long: bool) -> Result<Vec<CountRow>> {
    let mut rows: Vec<CountRow> = Vec::with_capacity(m_values.len());
    for (i, m) in m_values.iter().enumerate() {
        let p = i as u32 + 1;
        let sub = rows
            .iter()
            .fold(BigUint::from(2u32), |acc, r| acc + binomial(p, r.p) * &r.n);
        if *m < sub {
            return Err(Error::Integrity {
                p,
                recurrence: format!("M={m} below subtracted total {sub}"),
                enumerated: "-".into(),
            });
        }
        let n = m - sub;
        let enumerated = if p <= enumerate_up_to {
            let count = count_all(p, long)?;
            if BigUint::from(count) != n {
                return Err(Error::Integrity {
                    p,
                    recurrence: n.to_string(),
                    enumerated: count.to_string(),
                });
            }
            Some(count)
        } else {
            None
        };
        rows.push(CountRow {
            p,
            m: m.clone(),
            n,
            enumerated,
        });
    }
    Ok(rows)
}

/// [`count_table`] over the embedded Dedekind numbers, enumerating as far as
/// the enumeration limit allows.
pub fn default_count_table(max_p: u32, long: bool) -> Result<Vec<CountRow>> {
    if max_p == 0 || max_p as usize > DEDEKIND.len() {
        return Err(Error::capability(
            format!("count table up to p={max_p}"),
            DEDEKIND.len() as u64,
        ));
    }
    let m: Vec<BigUint> = (1..=max_p).filter_map(dedekind).collect();
    let cap = if long {
        ENUMERATE_MAX_P_LONG
    } else {
        ENUMERATE_MAX_P
    };
    count_table(&m, cap, long)
}

/// A random antichain cover: random clauses reduced to their minimal members,
/// then uncovered variables added as singletons. Not uniform over `F_p`.
pub fn random_function<W: Word, R: Rng + ?Sized>(p: u32, rng: &mut R) -> Result<FunctionRep<W>> {
    check_dimension::<W>(p)?;
    let full = W::full(p).widen();
    let k = rng.random_range(1..=p.max(2) as usize);
    let mut masks: Vec<u64> = (0..k)
        .map(|_| loop {
            let m = rng.random::<u64>() & full;
            if m != 0 {
                break m;
            }
        })
        .collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for m in masks {
        if !kept.iter().any(|&c| c & !m == 0) {
            kept.push(m);
        }
    }
    let covered = kept.iter().fold(0, |a, m| a | m);
    let mut rest = full & !covered;
    while rest != 0 {
        kept.push(rest & rest.wrapping_neg());
        rest &= rest - 1;
    }
    FunctionRep::from_bits(kept.into_iter().map(W::narrow), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        let two: Vec<String> = enumerate_all::<u8>(2, false)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(two, ["{{1},{2}}", "{{1,2}}"]);
        assert_eq!(enumerate_all::<u8>(3, false).unwrap().len(), 9);
        assert_eq!(enumerate_all::<u16>(4, false).unwrap().len(), 114);
        assert_eq!(count_all(1, false).unwrap(), 1);
        assert!(enumerate_all::<u64>(6, false).unwrap_err().is_capability());
        assert!(count_all(7, true).unwrap_err().is_capability());
    }

    #[test]
    fn hasse_small() {
        assert!(hasse_edges::<u8>(1, false).unwrap().is_empty());
        let e2 = hasse_edges::<u8>(2, false).unwrap();
        assert_eq!(e2.len(), 1);
        assert_eq!(e2[0].0.to_string(), "{{1,2}}");
        assert_eq!(e2[0].1.to_string(), "{{1},{2}}");
        assert_eq!(hasse_edges::<u8>(3, false).unwrap().len(), 12);
        assert!(hasse_edges::<u8>(5, false).unwrap_err().is_capability());
    }

    #[test]
    fn recurrence_rows() {
        let rows = count_table(
            &[3u32, 6, 20, 168]
                .iter()
                .map(|&m| BigUint::from(m))
                .collect::<Vec<_>>(),
            0,
            false,
        )
        .unwrap();
        let n: Vec<String> = rows.iter().map(|r| r.n.to_string()).collect();
        assert_eq!(n, ["1", "2", "9", "114"]);
        let table = default_count_table(9, false).unwrap();
        assert_eq!(table[4].n.to_string(), "6894");
        assert_eq!(table[4].enumerated, Some(6894));
        assert_eq!(table[5].n.to_string(), "7785062");
        assert_eq!(table[6].n.to_string(), "2414627396434");
        // the recurrence over the published M(8); the published N(8) ends in ...968
        assert_eq!(table[7].n.to_string(), "56130437209370320359966");
        assert_eq!(
            table[8].n.to_string(),
            "286386577668298410623295216696338374471993"
        );
        assert!(default_count_table(10, false).is_err());
    }

    #[test]
    fn mismatch_is_an_integrity_error() {
        let bad = [3u32, 6, 21].map(BigUint::from);
        assert!(matches!(
            count_table(&bad, 3, false),
            Err(Error::Integrity { p: 3, .. })
        ));
    }

    #[test]
    fn random_functions_are_valid() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for p in 1..=12 {
            for _ in 0..50 {
                assert!(random_function::<u16, _>(p, &mut rng).unwrap().is_valid());
            }
        }
    }
}
