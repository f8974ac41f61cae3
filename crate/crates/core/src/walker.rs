//! Seeded random walks between the infimum and the supremum.
//!
//! Each step computes the full neighbour set in the walking direction and
//! moves to one neighbour chosen uniformly. The generator is ChaCha8
//! (`rand_chacha`, seeded with `seed_from_u64`), and a uniform index below `n`
//! is drawn by rejection: 64-bit outputs below `2^64 mod n` are discarded and
//! the rest reduced modulo `n`. Both are fixed so that traces reproduce
//! across platforms.

use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::clause::check_dimension;
use crate::error::{Error, Result};
use crate::function::FunctionRep;
use crate::neighbors::{immediate_children, immediate_parents, NeighborResult, Rule};
use crate::word::Word;

/// Default dimension limit for walks.
pub const WALK_MAX_P: u32 = 11;

type StepFn<W> = fn(&FunctionRep<W>) -> Vec<NeighborResult<W>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkDirection {
    /// Infimum to supremum through parents.
    Up,
    /// Supremum to infimum through children.
    Down,
}

impl std::str::FromStr for WalkDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "up" => Ok(WalkDirection::Up),
            "down" => Ok(WalkDirection::Down),
            _ => Err(Error::Syntax {
                pos: 0,
                msg: format!("expected 'up' or 'down', found {s:?}"),
            }),
        }
    }
}

impl std::fmt::Display for WalkDirection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            WalkDirection::Up => "up",
            WalkDirection::Down => "down",
        })
    }
}

/// Neighbour counts per rule.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RuleCounts(pub [u64; 3]);

impl RuleCounts {
    pub fn of<W: Word>(neighbors: &[NeighborResult<W>]) -> Self {
        let mut c = RuleCounts::default();
        for n in neighbors {
            c.0[n.rule.index()] += 1;
        }
        c
    }

    pub fn get(&self, rule: Rule) -> u64 {
        self.0[rule.index()]
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl std::ops::AddAssign for RuleCounts {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl Serialize for RuleCounts {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("R1", &self.0[0])?;
        m.serialize_entry("R2", &self.0[1])?;
        m.serialize_entry("R3", &self.0[2])?;
        m.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkStep<W: Word = u64> {
    pub from: FunctionRep<W>,
    pub chosen: NeighborResult<W>,
    /// Counts over every neighbour generated at `from`.
    pub counts: RuleCounts,
}

#[derive(Clone, Debug, Serialize)]
pub struct WalkTrace<W: Word = u64> {
    pub p: u32,
    pub direction: WalkDirection,
    pub seed: u64,
    pub steps: Vec<WalkStep<W>>,
    #[serde(skip)]
    pub duration: Duration,
}

impl<W: Word> WalkTrace<W> {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Visited functions, start and end included.
    pub fn path(&self) -> Vec<&FunctionRep<W>> {
        let mut path: Vec<&FunctionRep<W>> = self.steps.iter().map(|s| &s.from).collect();
        if let Some(last) = self.steps.last() {
            path.push(&last.chosen.neighbor);
        }
        path
    }

    pub fn counts(&self) -> RuleCounts {
        let mut total = RuleCounts::default();
        for s in &self.steps {
            total += s.counts;
        }
        total
    }
}

/// Uniform index in `0..n` by rejection sampling over 64-bit outputs.
pub fn uniform_index<R: RngCore + ?Sized>(rng: &mut R, n: usize) -> usize {
    assert!(n > 0, "cannot choose from an empty set");
    let n = n as u64;
    let reject_below = n.wrapping_neg() % n;
    loop {
        let x = rng.next_u64();
        if x >= reject_below {
            return (x % n) as usize;
        }
    }
}

pub fn random_walk<W: Word>(p: u32, direction: WalkDirection, seed: u64) -> Result<WalkTrace<W>> {
    random_walk_capped(p, direction, seed, WALK_MAX_P)
}

pub fn random_walk_capped<W: Word>(
    p: u32,
    direction: WalkDirection,
    seed: u64,
    max_p: u32,
) -> Result<WalkTrace<W>> {
    check_dimension::<W>(p)?;
    if p > max_p {
        return Err(Error::capability(format!("random walk at p={p}"), u64::from(max_p)));
    }
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut current, step_fn): (FunctionRep<W>, StepFn<W>) =
        match direction {
            WalkDirection::Up => (FunctionRep::infimum(p)?, immediate_parents),
            WalkDirection::Down => (FunctionRep::supremum(p)?, immediate_children),
        };
    let mut steps = Vec::new();
    loop {
        let mut neighbors = step_fn(&current);
        if neighbors.is_empty() {
            break;
        }
        let counts = RuleCounts::of(&neighbors);
        let chosen = neighbors.swap_remove(uniform_index(&mut rng, neighbors.len()));
        let next = chosen.neighbor.clone();
        steps.push(WalkStep {
            from: current,
            chosen,
            counts,
        });
        current = next;
    }
    Ok(WalkTrace {
        p,
        direction,
        seed,
        steps,
        duration: started.elapsed(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WalkStats {
    pub p: u32,
    pub direction: WalkDirection,
    pub traces: usize,
    pub mean_len: f64,
    pub std_len: f64,
    /// Neighbour counts summed over every step of every trace.
    pub total_counts: RuleCounts,
    /// Mean per trace of the cumulative neighbour count, per rule.
    pub cumulative: [f64; 3],
    /// `cumulative` divided by the mean trace length.
    pub per_step: [f64; 3],
    pub mean_ms: f64,
    pub q1_ms: f64,
    pub median_ms: f64,
    pub q3_ms: f64,
}

impl WalkStats {
    pub fn from_traces<W: Word>(p: u32, direction: WalkDirection, traces: &[WalkTrace<W>]) -> Self {
        let n = traces.len();
        let mut stats = WalkStats {
            p,
            direction,
            traces: n,
            mean_len: 0.0,
            std_len: 0.0,
            total_counts: RuleCounts::default(),
            cumulative: [0.0; 3],
            per_step: [0.0; 3],
            mean_ms: 0.0,
            q1_ms: 0.0,
            median_ms: 0.0,
            q3_ms: 0.0,
        };
        if n == 0 {
            return stats;
        }
        let nf = n as f64;
        let lens: Vec<f64> = traces.iter().map(|t| t.len() as f64).collect();
        stats.mean_len = lens.iter().sum::<f64>() / nf;
        stats.std_len =
            (lens.iter().map(|l| (l - stats.mean_len).powi(2)).sum::<f64>() / nf).sqrt();
        for t in traces {
            stats.total_counts += t.counts();
        }
        for r in 0..3 {
            stats.cumulative[r] = stats.total_counts.0[r] as f64 / nf;
            stats.per_step[r] = if stats.mean_len > 0.0 {
                stats.cumulative[r] / stats.mean_len
            } else {
                0.0
            };
        }
        let mut ms: Vec<f64> = traces
            .iter()
            .map(|t| t.duration.as_secs_f64() * 1e3)
            .collect();
        ms.sort_by(f64::total_cmp);
        stats.mean_ms = ms.iter().sum::<f64>() / nf;
        stats.q1_ms = quantile(&ms, 0.25);
        stats.median_ms = quantile(&ms, 0.5);
        stats.q3_ms = quantile(&ms, 0.75);
        stats
    }
}

/// Linear-interpolated quantile of sorted data.
fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

/// Runs `traces_per_p` walks for each `p`, trace `i` seeded with
/// `base_seed + i`. Traces run in parallel; the result does not depend on
/// scheduling (timings aside).
pub fn run_experiment<W: Word>(
    p_range: RangeInclusive<u32>,
    traces_per_p: usize,
    direction: WalkDirection,
    base_seed: u64,
) -> Result<Vec<WalkStats>> {
    p_range
        .map(|p| {
            let traces = collect_traces::<W>(p, traces_per_p, direction, base_seed)?;
            Ok(WalkStats::from_traces(p, direction, &traces))
        })
        .collect()
}

/// The individual traces behind one row of [`run_experiment`].
pub fn collect_traces<W: Word>(
    p: u32,
    traces: usize,
    direction: WalkDirection,
    base_seed: u64,
) -> Result<Vec<WalkTrace<W>>> {
    (0..traces as u64)
        .into_par_iter()
        .map(|i| random_walk::<W>(p, direction, base_seed.wrapping_add(i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_index_is_in_range_and_covers() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut seen = [0usize; 5];
        for _ in 0..5000 {
            seen[uniform_index(&mut rng, 5)] += 1;
        }
        assert!(seen.iter().all(|&c| c > 850 && c < 1150), "{seen:?}");
        assert_eq!(uniform_index(&mut rng, 1), 0);
    }

    #[test]
    fn trivial_walks() {
        let t = random_walk::<u8>(1, WalkDirection::Up, 99).unwrap();
        assert_eq!(t.len(), 0);
        assert_eq!(t.path().len(), 0);
        for seed in 0..10 {
            let t = random_walk::<u8>(2, WalkDirection::Up, seed).unwrap();
            assert_eq!(t.len(), 1);
            assert_eq!(t.steps[0].from.to_string(), "{{1,2}}");
            assert_eq!(t.steps[0].chosen.neighbor.to_string(), "{{1},{2}}");
        }
    }

    #[test]
    fn deterministic_per_seed() {
        for dir in [WalkDirection::Up, WalkDirection::Down] {
            let a = random_walk::<u64>(6, dir, 42).unwrap();
            let b = random_walk::<u64>(6, dir, 42).unwrap();
            assert_eq!(a.steps, b.steps);
        }
    }

    #[test]
    fn walks_end_at_the_opposite_bound() {
        let up = random_walk::<u16>(5, WalkDirection::Up, 3).unwrap();
        assert!(up.path().first().unwrap().is_infimum());
        assert!(up.path().last().unwrap().is_supremum());
        let down = random_walk::<u16>(5, WalkDirection::Down, 3).unwrap();
        assert!(down.path().first().unwrap().is_supremum());
        assert!(down.path().last().unwrap().is_infimum());
    }

    #[test]
    fn caps() {
        assert!(random_walk::<u64>(12, WalkDirection::Up, 0)
            .unwrap_err()
            .is_capability());
        assert!(random_walk::<u8>(9, WalkDirection::Up, 0).is_err());
    }

    #[test]
    fn empty_experiment() {
        let s = run_experiment::<u64>(3..=3, 0, WalkDirection::Up, 0).unwrap();
        assert_eq!(s[0].traces, 0);
        assert_eq!(s[0].mean_len, 0.0);
        assert_eq!(s[0].total_counts, RuleCounts::default());
    }

    #[test]
    fn stats_aggregate_step_counts() {
        let traces = collect_traces::<u64>(4, 20, WalkDirection::Down, 11).unwrap();
        let stats = WalkStats::from_traces(4, WalkDirection::Down, &traces);
        let manual: u64 = traces
            .iter()
            .flat_map(|t| t.steps.iter())
            .map(|s| s.counts.total())
            .sum();
        assert_eq!(stats.total_counts.total(), manual);
        assert!(stats.q1_ms <= stats.median_ms && stats.median_ms <= stats.q3_ms);
    }
}
