use std::fmt;

use thiserror::Error;

/// A property a truth table must satisfy to be a non-degenerate positive function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableProperty {
    /// Neither increasing nor decreasing in the variable.
    NonMonotone,
    /// Monotone but decreasing in the variable.
    NegativeVariable,
    /// The variable never changes the output.
    Degenerate,
}

impl fmt::Display for TableProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableProperty::NonMonotone => "non-monotone",
            TableProperty::NegativeVariable => "negative (decreasing) variable",
            TableProperty::Degenerate => "degenerate (inessential) variable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimension {0}: must be between 1 and {1}")]
    InvalidDimension(u32, u32),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: u32, found: u32 },

    #[error("empty clause")]
    EmptyClause,

    #[error("empty function (constants are not members of the function set)")]
    EmptyFunction,

    #[error("variable {var} out of range 1..={p}")]
    VariableOutOfRange { var: u32, p: u32 },

    #[error("not an antichain: {subset} is contained in {superset}")]
    NotAntichain { subset: String, superset: String },

    #[error("not a cover: variables {missing:?} appear in no clause")]
    NotCover { missing: Vec<u32> },

    #[error("truth table rejected: variable x{var} is {property} (witness states {witness:?})")]
    InvalidTable {
        property: TableProperty,
        var: u32,
        /// Two states differing only in `var`, lower one first.
        witness: (u64, u64),
    },

    #[error("truth table of dimension {p} must hold {expected} values, found {found}")]
    TableLength { p: u32, expected: u64, found: u64 },

    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("variable x{var} occurs both positively and negatively")]
    MixedSign { var: u32 },

    #[error("{what} exceeds the supported limit ({limit})")]
    Capability { what: String, limit: u64 },

    #[error("integrity check failed for p={p}: recurrence gives {recurrence}, enumeration gives {enumerated}")]
    Integrity {
        p: u32,
        recurrence: String,
        enumerated: String,
    },
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidDimension(..) => "invalid_dimension",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::EmptyClause => "empty_clause",
            Error::EmptyFunction => "empty_function",
            Error::VariableOutOfRange { .. } => "variable_out_of_range",
            Error::NotAntichain { .. } => "not_antichain",
            Error::NotCover { .. } => "not_cover",
            Error::InvalidTable { .. } => "invalid_table",
            Error::TableLength { .. } => "table_length",
            Error::Syntax { .. } => "syntax",
            Error::MixedSign { .. } => "mixed_sign",
            Error::Capability { .. } => "capability",
            Error::Integrity { .. } => "integrity",
        }
    }

    pub fn is_capability(&self) -> bool {
        matches!(self, Error::Capability { .. })
    }

    pub(crate) fn capability(what: impl Into<String>, limit: u64) -> Self {
        Error::Capability {
            what: what.into(),
            limit,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
