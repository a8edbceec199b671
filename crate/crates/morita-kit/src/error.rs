//! Crate-wide error and validation-report types.
//!
//! Axiom checks never panic: a failed axiom is reported with the witnessing
//! generator tuple so that a workspace author can locate the bad table entry.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An exact computation would exceed the configured size limits
    /// (or overflow the wide integer type used internally).
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A table or matrix has the wrong dimensions for the operation.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// An object failed axiom validation; the report carries witnesses.
    #[error("validation failed: {0}")]
    Validation(ValidationReport),

    /// An element expected to lie in a computed submodule did not;
    /// this indicates an invalid input (e.g. a non-linear map).
    #[error("no preimage: {0}")]
    NoPreimage(String),

    /// A precondition of an operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An internal consistency check failed. This is a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// One failed axiom together with the generator tuple witnessing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    /// Short axiom name, e.g. "associativity" or "well-definedness".
    pub axiom: &'static str,
    /// Generator indices at which the axiom fails.
    pub witness: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at generators {:?}: {}", self.axiom, self.witness, self.detail)
    }
}

/// Outcome of validating one object; empty = valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// What was validated, e.g. "ring" or "left module".
    pub subject: String,
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        Self { subject: subject.into(), failures: Vec::new() }
    }

    pub fn push(&mut self, axiom: &'static str, witness: Vec<usize>, detail: impl Into<String>) {
        self.failures.push(AxiomFailure { axiom, witness, detail: detail.into() });
    }

    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }

    /// Turn a non-empty report into an error, or pass the value through.
    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::Validation(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "{}: valid", self.subject);
        }
        write!(f, "{}: {} failure(s):", self.subject, self.failures.len())?;
        for failure in &self.failures {
            write!(f, "\n  {failure}")?;
        }
        Ok(())
    }
}
