//! Truth tables and True-set sizes.
//!
//! State `x` is indexed by the integer whose bit `i-1` holds `x_i`.

use serde::Serialize;

use crate::clause::Clause;
use crate::error::{Error, Result, TableProperty};
use crate::function::FunctionRep;
use crate::word::Word;

/// Largest dimension for which a truth table is materialised.
pub const TABLE_MAX_DIMENSION: u32 = 24;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    p: u32,
    words: Vec<u64>,
}

fn check_table_dimension(p: u32) -> Result<()> {
    if p == 0 {
        return Err(Error::InvalidDimension(0, TABLE_MAX_DIMENSION));
    }
    if p > TABLE_MAX_DIMENSION {
        return Err(Error::capability(
            format!("truth table dimension {p}"),
            u64::from(TABLE_MAX_DIMENSION),
        ));
    }
    Ok(())
}

impl TruthTable {
    pub fn from_fn(p: u32, mut value: impl FnMut(u64) -> bool) -> Result<Self> {
        check_table_dimension(p)?;
        let n = 1u64 << p;
        let mut words = vec![0u64; n.div_ceil(64) as usize];
        for x in 0..n {
            if value(x) {
                words[(x / 64) as usize] |= 1 << (x % 64);
            }
        }
        Ok(TruthTable { p, words })
    }

    pub fn from_values(p: u32, values: &[bool]) -> Result<Self> {
        check_table_dimension(p)?;
        let expected = 1u64 << p;
        if values.len() as u64 != expected {
            return Err(Error::TableLength {
                p,
                expected,
                found: values.len() as u64,
            });
        }
        Self::from_fn(p, |x| values[x as usize])
    }

    /// Parses a string of `0`/`1` characters, one per state in index order.
    /// Whitespace and `_` are ignored; the dimension is inferred from the length.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (pos, ch) in text.chars().enumerate() {
            match ch {
                '0' => values.push(false),
                '1' => values.push(true),
                c if c.is_whitespace() || c == '_' => {}
                c => {
                    return Err(Error::Syntax {
                        pos,
                        msg: format!("expected '0' or '1' in truth table, found {c:?}"),
                    })
                }
            }
        }
        let n = values.len() as u64;
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::TableLength {
                p: n.max(1).ilog2(),
                expected: n.max(2).next_power_of_two(),
                found: n,
            });
        }
        Self::from_values(n.ilog2(), &values)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Number of states, `2^p`.
    pub fn len(&self) -> u64 {
        1 << self.p
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, x: u64) -> bool {
        self.words[(x / 64) as usize] >> (x % 64) & 1 == 1
    }

    /// `|T(f)|`.
    pub fn count_true(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Pointwise `self ≤ other`, i.e. True-set inclusion.
    pub fn le(&self, other: &TruthTable) -> bool {
        self.p == other.p
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn true_states(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.len()).filter(|&x| self.get(x))
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len())
            .map(|x| if self.get(x) { '1' } else { '0' })
            .collect()
    }
}

impl std::fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TruthTable(p={}, {})", self.p, self.to_bit_string())
    }
}

/// Up-closure of the clause masks over `B^p`, as one flag per state.
fn up_closure<W: Word>(f: &FunctionRep<W>) -> Vec<bool> {
    let p = f.p();
    let n = 1usize << p;
    let mut marks = vec![false; n];
    for c in f.clauses() {
        marks[c.bits().widen() as usize] = true;
    }
    for i in 0..p {
        let bit = 1usize << i;
        for x in 0..n {
            if x & bit != 0 && marks[x ^ bit] {
                marks[x] = true;
            }
        }
    }
    marks
}

pub fn to_truth_table<W: Word>(f: &FunctionRep<W>) -> Result<TruthTable> {
    check_table_dimension(f.p())?;
    let marks = up_closure(f);
    TruthTable::from_fn(f.p(), |x| marks[x as usize])
}

/// Exact-counting limits for [`true_set_size_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountLimits {
    /// Up to this dimension states are enumerated directly.
    pub enumeration_max_p: u32,
    /// Beyond it, inclusion–exclusion is used for at most this many clauses.
    pub inclusion_exclusion_max_clauses: usize,
}

impl Default for CountLimits {
    fn default() -> Self {
        CountLimits {
            enumeration_max_p: TABLE_MAX_DIMENSION,
            inclusion_exclusion_max_clauses: 24,
        }
    }
}

/// `|T(f)|`, the number of states where the function is true.
pub fn true_set_size<W: Word>(f: &FunctionRep<W>) -> Result<u128> {
    true_set_size_with(f, CountLimits::default())
}

pub fn true_set_size_with<W: Word>(f: &FunctionRep<W>, limits: CountLimits) -> Result<u128> {
    if f.p() <= limits.enumeration_max_p.min(TABLE_MAX_DIMENSION) {
        return Ok(up_closure(f).into_iter().filter(|&b| b).count() as u128);
    }
    if f.len() > limits.inclusion_exclusion_max_clauses {
        return Err(Error::capability(
            format!(
                "exact True-set count at p={} with {} clauses",
                f.p(),
                f.len()
            ),
            limits.inclusion_exclusion_max_clauses as u64,
        ));
    }
    let masks: Vec<W> = f.clauses().iter().map(Clause::bits).collect();
    Ok(inclusion_exclusion(&masks, f.p(), 0, W::zero(), false) as u128)
}

/// Σ over non-empty clause subsets of `(-1)^{k+1} · 2^{p - |∪|}`.
fn inclusion_exclusion<W: Word>(masks: &[W], p: u32, from: usize, union: W, odd: bool) -> i128 {
    let mut total = 0i128;
    for i in from..masks.len() {
        let u = union | masks[i];
        let term = 1i128 << (p - u.count_ones());
        total += if odd { -term } else { term };
        total += inclusion_exclusion(masks, p, i + 1, u, !odd);
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariableReport {
    pub var: u32,
    /// `f|x=0 ≤ f|x=1` everywhere.
    pub positive: bool,
    /// `f|x=1 ≤ f|x=0` everywhere.
    pub negative: bool,
    pub essential: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub property: TableProperty,
    pub var: u32,
    pub witness: (u64, u64),
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::InvalidTable {
            property: v.property,
            var: v.var,
            witness: v.witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub p: u32,
    pub variables: Vec<VariableReport>,
    /// First failing variable, if any.
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks that every variable is positive and essential.
pub fn check_monotone_nondegenerate(t: &TruthTable) -> ValidationReport {
    let mut variables = Vec::new();
    let mut violation = None;
    for var in 1..=t.p() {
        let bit = 1u64 << (var - 1);
        let mut drop = None; // f(x)=1, f(x+e)=0
        let mut rise = None; // f(x)=0, f(x+e)=1
        for x in (0..t.len()).filter(|x| x & bit == 0) {
            match (t.get(x), t.get(x | bit)) {
                (true, false) if drop.is_none() => drop = Some((x, x | bit)),
                (false, true) if rise.is_none() => rise = Some((x, x | bit)),
                _ => {}
            }
            if drop.is_some() && rise.is_some() {
                break;
            }
        }
        let report = VariableReport {
            var,
            positive: drop.is_none(),
            negative: rise.is_none(),
            essential: drop.is_some() || rise.is_some(),
        };
        if violation.is_none() {
            violation = match (drop, rise) {
                (Some(w), Some(_)) => Some((TableProperty::NonMonotone, w)),
                (Some(w), None) => Some((TableProperty::NegativeVariable, w)),
                (None, None) => Some((TableProperty::Degenerate, (0, bit))),
                (None, Some(_)) => None,
            }
            .map(|(property, witness)| Violation {
                property,
                var,
                witness,
            });
        }
        variables.push(report);
    }
    ValidationReport {
        p: t.p(),
        variables,
        violation,
    }
}

/// Recovers the prime implicants (minimal true states) of a positive,
/// non-degenerate table.
pub fn from_truth_table<W: Word>(t: &TruthTable) -> Result<FunctionRep<W>> {
    if let Some(v) = check_monotone_nondegenerate(t).violation {
        return Err(v.into());
    }
    let p = t.p();
    let minimal = t.true_states().filter(|&x| {
        let mut rest = x;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if t.get(x & !bit) {
                return false;
            }
            rest &= rest - 1;
        }
        true
    });
    let bits: Vec<W> = minimal.map(W::narrow).collect();
    if bits.iter().any(|&b| b == W::zero()) {
        // constant true; unreachable for a non-degenerate table
        return Err(Error::EmptyClause);
    }
    FunctionRep::from_bits(bits, p)
}
