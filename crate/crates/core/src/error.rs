use thiserror::Error;

/// Errors surfaced by the exact-arithmetic kernels.
///
/// Contract violations that indicate caller bugs (mismatched truncation
/// orders, out-of-domain integer arguments) panic instead; these variants
/// cover conditions a caller may legitimately need to detect and handle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Series division requires a divisor with nonzero constant term.
    #[error("series division not representable: divisor has zero constant term")]
    ZeroConstantTerm,

    /// A coefficient recursion hit a vanishing pivot and cannot continue.
    #[error("coefficient recursion pivot vanishes at index {index}")]
    SingularPivot { index: usize },

    /// Dual bases exist over the integers only for unimodular Gram matrices.
    #[error("Gram matrix is not unimodular (det = {det})")]
    NotUnimodular { det: String },

    /// A rational literal failed to parse as "p" or "p/q".
    #[error("invalid rational literal {input:?}")]
    ParseRational { input: String },
}
