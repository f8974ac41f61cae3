use std::collections::BTreeSet;

use monofun::oracle;
use monofun::walker::{collect_traces, random_walk, run_experiment, WalkDirection};
use monofun::{FunctionRep, Rule};

#[test]
fn p3_walks_follow_hasse_edges() {
    let edges: BTreeSet<(FunctionRep, FunctionRep)> =
        oracle::hasse_edges(3, false).unwrap().into_iter().collect();
    for seed in 0..50 {
        let t = random_walk::<u64>(3, WalkDirection::Up, seed).unwrap();
        let path = t.path();
        assert_eq!(path.len(), 5);
        for w in path.windows(2) {
            assert!(edges.contains(&(w[0].clone(), w[1].clone())));
        }
    }
}

#[test]
fn p3_fixed_seed_trace() {
    let t = random_walk::<u64>(3, WalkDirection::Up, 0).unwrap();
    let path: Vec<String> = t.path().iter().map(ToString::to_string).collect();
    assert_eq!(path.first().unwrap(), "{{1,2,3}}");
    assert_eq!(path[2], "{{1,2},{1,3},{2,3}}");
    assert_eq!(path.last().unwrap(), "{{1},{2},{3}}");
    // True-set sizes by level are 1, 3, 4, 5, 7
    let counts: Vec<[u64; 3]> = t.steps.iter().map(|s| s.counts.0).collect();
    assert_eq!(counts, vec![[0, 0, 3], [1, 0, 0], [0, 3, 0], [0, 0, 1]]);
}

#[test]
fn experiment_examples() {
    let s2 = &run_experiment::<u64>(2..=2, 100, WalkDirection::Up, 0).unwrap()[0];
    assert_eq!(s2.mean_len, 1.0);
    assert_eq!(s2.std_len, 0.0);
    // the single p=2 parent replaces {1,2} by {1} and {2}
    assert_eq!(s2.total_counts.get(Rule::R3), 100);

    let s3 = &run_experiment::<u64>(3..=3, 100, WalkDirection::Up, 7).unwrap()[0];
    assert_eq!(s3.mean_len, 4.0);
}

#[test]
fn experiments_are_deterministic() {
    let a = collect_traces::<u64>(5, 10, WalkDirection::Down, 123).unwrap();
    let b = collect_traces::<u64>(5, 10, WalkDirection::Down, 123).unwrap();
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.steps, y.steps);
        assert_eq!(x.seed, y.seed);
    }
    assert_eq!(a[3].seed, 126);
}
