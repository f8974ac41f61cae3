//! Immediate parents and children in the order of antichain covers.
//!
//! Parents come from three rules:
//! * R1 adds a maximal independent set;
//! * R2 replaces every clause containing a maximal dominated set `d` by `d`
//!   (when that still covers);
//! * R3 replaces one clause `s` by two maximal dominated subsets of it
//!   (when neither alone would cover).
//!
//! In R2 and R3 the dominated sets must lie inside no maximal independent set.
//!
//! Children are the mirror image:
//! * R1 drops a clause that is maximal independent of the rest (cover kept);
//! * R2 replaces a clause `s` by all its one-variable extensions independent
//!   of the rest;
//! * R3 merges two equal-size clauses differing in one variable each, when
//!   neither is droppable alone.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::clause::Clause;
use crate::function::{union_bits, FunctionRep};
use crate::sets::{maximal_dominated, maximal_independent};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    R1,
    R2,
    R3,
}

impl Rule {
    pub const ALL: [Rule; 3] = [Rule::R1, Rule::R2, Rule::R3];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Parent,
    Child,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NeighborResult<W: Word = u64> {
    pub neighbor: FunctionRep<W>,
    pub rule: Rule,
    pub direction: Direction,
}

impl<W: Word> NeighborResult<W> {
    /// Change in True-set size from the origin to the neighbour.
    pub fn rule_delta(&self) -> i64 {
        rule_delta(self.rule, self.direction)
    }
}

/// ±1 for R1/R2 and ±2 for R3, positive towards parents.
pub fn rule_delta(rule: Rule, direction: Direction) -> i64 {
    let magnitude = match rule {
        Rule::R1 | Rule::R2 => 1,
        Rule::R3 => 2,
    };
    match direction {
        Direction::Parent => magnitude,
        Direction::Child => -magnitude,
    }
}

fn finish<W: Word>(mut out: Vec<NeighborResult<W>>) -> Vec<NeighborResult<W>> {
    out.sort_unstable();
    out.dedup_by(|a, b| a.neighbor == b.neighbor);
    out
}

fn without<W: Word>(f: &FunctionRep<W>, removed: impl Fn(&Clause<W>) -> bool) -> Vec<Clause<W>> {
    f.clauses().iter().copied().filter(|c| !removed(c)).collect()
}

/// All immediate parents of `f`, sorted by neighbour.
pub fn immediate_parents<W: Word>(f: &FunctionRep<W>) -> Vec<NeighborResult<W>> {
    let p = f.p();
    let full = W::full(p);
    let mut out = Vec::new();
    let parent = |clauses: Vec<Clause<W>>, rule| NeighborResult {
        neighbor: FunctionRep::from_clauses_unchecked(clauses, p),
        rule,
        direction: Direction::Parent,
    };

    let independent = maximal_independent(f);
    for c in &independent {
        let mut clauses = f.clauses().to_vec();
        clauses.push(*c);
        out.push(parent(clauses, Rule::R1));
    }

    let dominated: Vec<Clause<W>> = maximal_dominated(f)
        .into_iter()
        .filter(|d| !independent.iter().any(|c| d.is_subset(c)))
        .collect();

    // clause -> dominated sets inside it that R2 could not use
    let mut not_used: BTreeMap<Clause<W>, Vec<Clause<W>>> = BTreeMap::new();
    for d in dominated {
        let mut clauses = without(f, |s| d.is_subset(s));
        clauses.push(d);
        if union_bits(&clauses) == full {
            out.push(parent(clauses, Rule::R2));
        } else {
            for s in f.clauses().iter().filter(|s| d.is_subset(s)) {
                not_used.entry(*s).or_default().push(d);
            }
        }
    }

    for (s, ds) in &not_used {
        for (i, di) in ds.iter().enumerate() {
            for dj in &ds[i + 1..] {
                let mut clauses = without(f, |c| c == s);
                clauses.push(*di);
                clauses.push(*dj);
                out.push(parent(clauses, Rule::R3));
            }
        }
    }

    finish(out)
}

/// All immediate children of `f`, sorted by neighbour.
pub fn immediate_children<W: Word>(f: &FunctionRep<W>) -> Vec<NeighborResult<W>> {
    let p = f.p();
    let full = W::full(p);
    let mut out = Vec::new();
    let child = |clauses: Vec<Clause<W>>, rule| NeighborResult {
        neighbor: FunctionRep::from_clauses_unchecked(clauses, p),
        rule,
        direction: Direction::Child,
    };
    let contained_by = |sigma: &Clause<W>, pool: &[Clause<W>]| -> Vec<Clause<W>> {
        pool.iter().copied().filter(|c| c.is_subset(sigma)).collect()
    };

    let mut mergeable: BTreeMap<u32, Vec<Clause<W>>> = BTreeMap::new();
    for s in f.clauses() {
        let mut to_merge = false;
        let mut extendable = false;
        let mut candidate = without(f, |c| c == s);
        for l in s.missing() {
            let ext = s.with(l);
            match contained_by(&ext, f.clauses()).len() {
                1 => {
                    // only s itself
                    extendable = true;
                    candidate.push(ext);
                }
                2 => to_merge = true,
                _ => {}
            }
        }
        if extendable {
            out.push(child(candidate, Rule::R2));
        } else if !candidate.is_empty() && union_bits(&candidate) == full {
            out.push(child(candidate, Rule::R1));
        } else if to_merge {
            mergeable.entry(s.len()).or_default().push(*s);
        }
    }

    for group in mergeable.values_mut() {
        while let Some(s) = group.last().copied() {
            for l in s.missing() {
                let ext = s.with(l);
                let contained = contained_by(&ext, group);
                if contained.len() == 2 {
                    let mut clauses = without(f, |c| contained.contains(c));
                    clauses.push(ext);
                    out.push(child(clauses, Rule::R3));
                }
            }
            group.pop();
        }
    }

    finish(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(sets: &[&[u32]]) -> FunctionRep {
        let p = sets.iter().flat_map(|s| s.iter()).copied().max().unwrap();
        FunctionRep::from_sets(sets, p).unwrap()
    }

    fn tagged(v: &[NeighborResult]) -> Vec<(String, Rule)> {
        v.iter().map(|r| (r.neighbor.to_string(), r.rule)).collect()
    }

    #[test]
    fn deltas() {
        assert_eq!(rule_delta(Rule::R3, Direction::Parent), 2);
        assert_eq!(rule_delta(Rule::R1, Direction::Child), -1);
        assert_eq!(rule_delta(Rule::R1, Direction::Parent), 1);
        assert_eq!(rule_delta(Rule::R2, Direction::Child), -1);
        assert_eq!(rule_delta(Rule::R3, Direction::Child), -2);
    }

    #[test]
    fn p3_infimum_parents_are_r3() {
        // R2 fails its cover condition for every dominated pair member, so
        // each parent swaps {1,2,3} for two of its facets
        let got = immediate_parents(&f(&[&[1, 2, 3]]));
        assert_eq!(
            tagged(&got),
            vec![
                ("{{1,2},{1,3}}".into(), Rule::R3),
                ("{{1,2},{2,3}}".into(), Rule::R3),
                ("{{1,3},{2,3}}".into(), Rule::R3),
            ]
        );
    }

    #[test]
    fn extremes_have_no_neighbours_beyond() {
        let sup = FunctionRep::<u64>::supremum(4).unwrap();
        let inf = FunctionRep::<u64>::infimum(4).unwrap();
        assert!(immediate_parents(&sup).is_empty());
        assert!(immediate_children(&inf).is_empty());
        let one = FunctionRep::<u64>::infimum(1).unwrap();
        assert!(immediate_parents(&one).is_empty());
        assert!(immediate_children(&one).is_empty());
    }

    #[test]
    fn p2_neighbours() {
        let inf = FunctionRep::<u8>::infimum(2).unwrap();
        let sup = FunctionRep::<u8>::supremum(2).unwrap();
        let up = immediate_parents(&inf);
        assert_eq!(up.len(), 1);
        assert_eq!(up[0].neighbor, sup);
        let down = immediate_children(&sup);
        assert_eq!(down.len(), 1);
        assert_eq!(down[0].neighbor, inf);
    }
}
