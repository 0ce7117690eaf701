use alloc::string::String;

use super::Labeling;

/// Outcome of a closed-chromatic-number query.
///
/// There is no infinite arm: on a finite graph every labeling has finite
/// order. `value` is absent for existence-only answers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Exists { value: Option<usize>, witness: Option<Labeling>, source: String },
    NotExists { source: String },
    Unknown { source: String },
}

impl Verdict {
    pub fn exists(value: Option<usize>, witness: Option<Labeling>, source: impl Into<String>) -> Self {
        Verdict::Exists { value, witness, source: source.into() }
    }

    pub fn not_exists(source: impl Into<String>) -> Self {
        Verdict::NotExists { source: source.into() }
    }

    pub fn unknown(source: impl Into<String>) -> Self {
        Verdict::Unknown { source: source.into() }
    }

    /// `Some(true/false)` when existence is decided.
    pub fn existence(&self) -> Option<bool> {
        match self {
            Verdict::Exists { .. } => Some(true),
            Verdict::NotExists { .. } => Some(false),
            Verdict::Unknown { .. } => None,
        }
    }

    pub fn value(&self) -> Option<usize> {
        match self {
            Verdict::Exists { value, .. } => *value,
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&Labeling> {
        match self {
            Verdict::Exists { witness, .. } => witness.as_ref(),
            _ => None,
        }
    }

    pub fn source(&self) -> &str {
        match self {
            Verdict::Exists { source, .. } | Verdict::NotExists { source } | Verdict::Unknown { source } => source,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Exists { .. } => "exists",
            Verdict::NotExists { .. } => "not-exists",
            Verdict::Unknown { .. } => "unknown",
        }
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    pub fn without_witness(mut self) -> Self {
        if let Verdict::Exists { witness, .. } = &mut self {
            *witness = None;
        }
        self
    }
}
