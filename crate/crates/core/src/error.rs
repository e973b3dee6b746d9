use thiserror::Error;

/// Errors reported by state construction and the decomposition routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input vector is zero (or numerically indistinguishable from zero).
    #[error("degenerate input: amplitude vector has zero norm")]
    DegenerateInput,

    /// Amplitude vector is not unit-norm and normalization was not requested.
    #[error("state not normalized: |norm - 1| = {deviation:.3e}")]
    NotNormalized { deviation: f64 },

    /// A matrix expected to be unitary is not.
    #[error("matrix is not unitary: deviation {deviation:.3e}")]
    NotUnitary { deviation: f64 },

    /// A row expected to be normalized is not.
    #[error("row is not normalized: |norm - 1| = {deviation:.3e}")]
    RowNotNormalized { deviation: f64 },

    /// The requested decomposition does not exist for this state.
    #[error("state of type {type_label} cannot be written as a sum of two product states (I5 = 0, genuinely tripartite)")]
    NotDecomposable { type_label: String },

    /// A canonical form violates its structural invariants.
    #[error("invalid canonical form: {reason}")]
    InvalidForm { reason: String },
}
