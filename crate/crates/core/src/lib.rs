//! Non-degenerate positive monotone Boolean functions as antichain covers,
//! and exact computation of their immediate neighbours in the True-set order.
//!
//! Every type is generic over the machine word used for clause bit vectors
//! (`u8` through `u64`, or `u128` with the 64-variable cap). The aliases below
//! fix the word for the common cases; the unparameterised names default to
//! `u64`.
//!
//! ```
//! use monofun::{immediate_parents, Function, Rule};
//!
//! let f = Function::from_sets(&[&[1, 2, 3][..], &[3, 4]], 4).unwrap();
//! let rules: Vec<Rule> = immediate_parents(&f).iter().map(|n| n.rule).collect();
//! assert_eq!(rules, [Rule::R3, Rule::R1]);
//! ```

pub mod clause;
pub mod error;
pub mod function;
pub mod neighbors;
pub mod oracle;
pub mod sets;
pub mod text;
pub mod truth;
pub mod walker;
pub mod word;

pub use clause::Clause;
pub use error::{Error, Result, TableProperty};
pub use function::{is_antichain, is_cover, FunctionRep, Sign, SignStructure};
pub use neighbors::{immediate_children, immediate_parents, rule_delta, Direction, NeighborResult, Rule};
pub use sets::{maximal_dominated, maximal_independent};
pub use text::{parse_function, render_function, Style};
pub use truth::{
    check_monotone_nondegenerate, from_truth_table, to_truth_table, true_set_size, TruthTable,
    ValidationReport,
};
pub use walker::{random_walk, run_experiment, WalkDirection, WalkStats, WalkTrace};
pub use word::{Word, MAX_DIMENSION};

/// Functions of up to 64 variables.
pub type Function = FunctionRep<u64>;
pub type Function32 = FunctionRep<u32>;
pub type Function16 = FunctionRep<u16>;
pub type Function8 = FunctionRep<u8>;

pub type Clause64 = Clause<u64>;
pub type Clause32 = Clause<u32>;
pub type Clause16 = Clause<u16>;
pub type Clause8 = Clause<u8>;

pub type Neighbor = NeighborResult<u64>;
pub type Trace = WalkTrace<u64>;
