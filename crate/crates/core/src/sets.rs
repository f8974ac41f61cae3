//! Independent and dominated sets of an antichain.
//!
//! A set is *independent* of an antichain when it is incomparable to every
//! member, and *dominated* when it is strictly contained in some member.

use crate::clause::Clause;
use crate::function::FunctionRep;
use crate::word::Word;

/// All inclusion-minimal subsets of `universe` meeting every edge.
///
/// Depth-first search in the style of MMCS: branch on the vertices of the
/// uncovered edge with the fewest remaining candidates, and keep a branch only
/// while every chosen vertex still has a critical edge (an edge it alone hits).
/// Each minimal transversal is produced exactly once.
pub fn minimal_transversals<W: Word>(edges: &[W], universe: W) -> Vec<W> {
    let mut out = Vec::new();
    if edges.iter().any(|&e| e & universe == W::zero()) {
        return out;
    }
    transversal_search(edges, W::zero(), universe, &mut out);
    out
}

fn transversal_search<W: Word>(edges: &[W], chosen: W, cand: W, out: &mut Vec<W>) {
    let mut branch: Option<(u32, W)> = None;
    for &e in edges {
        if e & chosen == W::zero() {
            let n = (e & cand).count_ones();
            if branch.is_none_or(|(best, _)| n < best) {
                branch = Some((n, e));
                if n == 0 {
                    // dead end: an uncovered edge with no usable vertex
                    return;
                }
            }
        }
    }
    let Some((_, edge)) = branch else {
        out.push(chosen);
        return;
    };
    let pick = edge & cand;
    let mut cand = cand & !pick;
    for v in pick.vars() {
        let bit = W::var(v);
        let next = chosen | bit;
        if is_minimal_transversal_prefix(edges, next) {
            transversal_search(edges, next, cand, out);
        }
        cand = cand | bit;
    }
}

/// Every vertex of `chosen` is the sole chosen vertex of some edge.
fn is_minimal_transversal_prefix<W: Word>(edges: &[W], chosen: W) -> bool {
    let mut critical = W::zero();
    for &e in edges {
        let hit = e & chosen;
        if hit != W::zero() && hit & (hit - W::one()) == W::zero() {
            critical = critical | hit;
            if critical == chosen {
                return true;
            }
        }
    }
    critical == chosen
}

/// The inclusion-maximal sets independent of `f`.
///
/// A set contains no clause iff its complement meets every clause, so these
/// are the complements of minimal transversals, minus any that sit inside a
/// clause.
pub fn maximal_independent<W: Word>(f: &FunctionRep<W>) -> Vec<Clause<W>> {
    let p = f.p();
    let full = W::full(p);
    let edges: Vec<W> = f.clauses().iter().map(Clause::bits).collect();
    let mut out: Vec<Clause<W>> = minimal_transversals(&edges, full)
        .into_iter()
        .map(|t| full & !t)
        .filter(|&sigma| sigma != W::zero() && !edges.iter().any(|&s| sigma.is_subset(s)))
        .map(|sigma| Clause::from_bits_unchecked(sigma, p))
        .collect();
    out.sort_unstable();
    out
}

/// The inclusion-maximal non-empty sets dominated by `f`.
///
/// Every such set is a clause with one variable removed; candidates strictly
/// inside another candidate are dropped.
pub fn maximal_dominated<W: Word>(f: &FunctionRep<W>) -> Vec<Clause<W>> {
    let mut cands: Vec<Clause<W>> = f
        .clauses()
        .iter()
        .flat_map(|s| s.vars().filter_map(move |x| s.without(x)))
        .collect();
    cands.sort_unstable();
    cands.dedup();
    // canonical order is by cardinality, so only later entries can be supersets
    let keep: Vec<bool> = (0..cands.len())
        .map(|i| {
            !cands[i + 1..]
                .iter()
                .any(|c| cands[i].is_strict_subset(c))
        })
        .collect();
    cands
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// Clauses of `f` that contain `sigma`.
pub fn containing<'a, W: Word>(
    sigma: &'a Clause<W>,
    f: &'a FunctionRep<W>,
) -> impl Iterator<Item = &'a Clause<W>> + 'a {
    f.clauses().iter().filter(move |s| sigma.is_subset(s))
}
