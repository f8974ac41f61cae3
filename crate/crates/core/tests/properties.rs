use monofun::oracle::{self, table_of};
use monofun::walker::{random_walk, WalkDirection};
use monofun::{
    check_monotone_nondegenerate, from_truth_table, immediate_children, immediate_parents,
    parse_function, render_function, to_truth_table, true_set_size, FunctionRep, Sign,
    SignStructure, Style,
};
use proptest::prelude::*;
use rand::SeedableRng;

fn seeded_function(p: u32, seed: u64) -> FunctionRep {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    oracle::random_function(p, &mut rng).unwrap()
}

fn signs_from(p: u32, pattern: u64) -> SignStructure {
    SignStructure::new(
        (0..p)
            .map(|i| {
                if pattern >> i & 1 == 1 {
                    Sign::Negative
                } else {
                    Sign::Positive
                }
            })
            .collect(),
    )
}

#[test]
fn precedes_is_a_partial_order_matching_true_set_inclusion() {
    for p in 1..=4 {
        let all = oracle::enumerate_all::<u64>(p, false).unwrap();
        let tables: Vec<_> = all.iter().map(|f| table_of(f).unwrap()).collect();
        let n = all.len();
        let le: Vec<Vec<bool>> = all
            .iter()
            .map(|a| all.iter().map(|b| a.precedes(b).unwrap()).collect())
            .collect();
        for i in 0..n {
            assert!(le[i][i]);
            for j in 0..n {
                assert_eq!(le[i][j], tables[i].le(&tables[j]), "{} vs {}", all[i], all[j]);
                if i != j {
                    assert!(!(le[i][j] && le[j][i]));
                }
                if le[i][j] {
                    for (k, &jk) in le[j].iter().enumerate() {
                        if jk {
                            assert!(le[i][k]);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn enumerated_functions_round_trip_through_truth_tables() {
    for p in 1..=5 {
        for f in oracle::enumerate_all::<u32>(p, false).unwrap() {
            let t = to_truth_table(&f).unwrap();
            assert_eq!(t, table_of(&f).unwrap());
            assert!(check_monotone_nondegenerate(&t).pass());
            assert_eq!(from_truth_table::<u32>(&t).unwrap(), f);
        }
    }
}

#[test]
fn parse_render_identity_up_to_p4() {
    for p in 1..=4 {
        for f in oracle::enumerate_all::<u64>(p, false).unwrap() {
            for pattern in 0..1u64 << p {
                let signs = signs_from(p, pattern);
                for style in [Style::Sets, Style::Expr] {
                    let text = render_function(&f, &signs, style).unwrap();
                    let (g, s) = parse_function::<u64>(&text, p).unwrap();
                    assert_eq!((&g, &s), (&f, &signs), "{text}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn neighbours_are_sound_and_dual(p in 1u32..=7, seed in any::<u64>()) {
        let f = seeded_function(p, seed);
        let base = true_set_size(&f).unwrap() as i64;
        for n in immediate_parents(&f) {
            prop_assert!(n.neighbor.is_valid());
            prop_assert!(f.precedes(&n.neighbor).unwrap());
            prop_assert!(!n.neighbor.precedes(&f).unwrap());
            prop_assert_eq!(true_set_size(&n.neighbor).unwrap() as i64 - base, n.rule_delta());
            prop_assert!(immediate_children(&n.neighbor).iter().any(|c| c.neighbor == f && c.rule == n.rule));
        }
        for n in immediate_children(&f) {
            prop_assert!(n.neighbor.is_valid());
            prop_assert!(n.neighbor.precedes(&f).unwrap());
            prop_assert_eq!(true_set_size(&n.neighbor).unwrap() as i64 - base, n.rule_delta());
            prop_assert!(immediate_parents(&n.neighbor).iter().any(|c| c.neighbor == f && c.rule == n.rule));
        }
    }

    #[test]
    fn word_width_does_not_change_neighbours(p in 1u32..=8, seed in any::<u64>()) {
        let f = seeded_function(p, seed);
        let narrow: FunctionRep<u8> = f.convert().unwrap();
        let wide: Vec<String> = immediate_parents(&f).iter().map(|n| n.neighbor.to_string()).collect();
        let small: Vec<String> = immediate_parents(&narrow).iter().map(|n| n.neighbor.to_string()).collect();
        prop_assert_eq!(wide, small);
    }

    #[test]
    fn text_round_trip(p in 1u32..=12, seed in any::<u64>(), pattern in any::<u64>()) {
        let f = seeded_function(p, seed);
        let signs = signs_from(p, pattern);
        for style in [Style::Sets, Style::Expr] {
            let text = render_function(&f, &signs, style).unwrap();
            let parsed = parse_function::<u64>(&text, p).unwrap();
            prop_assert_eq!(parsed, (f.clone(), signs.clone()));
        }
    }

    #[test]
    fn up_walks_climb_by_rule_deltas(p in 2u32..=7, seed in any::<u64>()) {
        let trace = random_walk::<u64>(p, WalkDirection::Up, seed).unwrap();
        let full = (1i64 << p) - 1;
        let mut size = 1i64;
        for step in &trace.steps {
            prop_assert_eq!(true_set_size(&step.from).unwrap() as i64, size);
            let next = true_set_size(&step.chosen.neighbor).unwrap() as i64;
            prop_assert_eq!(next - size, step.chosen.rule_delta());
            size = next;
        }
        prop_assert_eq!(size, full);
        let len = trace.len() as i64;
        prop_assert!(len * 2 >= full - 1 && len < full);
    }

    #[test]
    fn down_walks_descend(p in 2u32..=7, seed in any::<u64>()) {
        let trace = random_walk::<u64>(p, WalkDirection::Down, seed).unwrap();
        for step in &trace.steps {
            prop_assert!(step.chosen.neighbor.precedes(&step.from).unwrap());
            prop_assert!(immediate_children(&step.from).contains(&step.chosen));
        }
        prop_assert!(trace.path().last().unwrap().is_infimum());
    }
}
