//! Generalized Schmidt decomposition of three-qubit pure states.
//!
//! Any pure state of three qubits can be brought by local unitaries to the
//! five-term canonical form
//!
//! ```text
//! λ₀|000⟩ + λ₁e^{iφ}|100⟩ + λ₂|101⟩ + λ₃|110⟩ + λ₄|111⟩
//! ```
//!
//! with λᵢ ≥ 0 and 0 ≤ φ ≤ π. This crate computes that form together with
//! the explicit local unitaries, the polynomial invariants I₁–I₅ and J₁–J₅,
//! the complete entanglement-type classification, entanglement-erasing
//! measurement directions, and the auxiliary decompositions (sum of two
//! nonorthogonal product states, product-plus-biseparable splitting, and the
//! second five-state support set).
//!
//! All operations are pure functions; seeded randomness is always an
//! explicit argument.

pub mod canonical;
pub mod classify;
pub mod decomp;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod state;

pub use canonical::{
    canonical_candidates, canonical_candidates_tol, canonical_form, canonical_form_tol,
    erasing_states, erasing_states_tol, reconstruct, CanonicalForm, ErasingDirection, RootChoice,
    RootCount,
};
pub use classify::{classify, classify_state, verify_type_identities, Classification, TypeLabel};
pub use decomp::{
    product_plus_biseparable, set2_form, two_product, ProductBiseparableForm, Set2Form,
    TwoProductDecomposition,
};
pub use error::Error;
pub use invariants::{
    hyperdeterminant, invariants_direct, invariants_from_canonical, invariants_full, invariants_j,
    InvariantSet, JSet,
};
pub use linalg::{complete_unitary, pencil_roots, svd2, Mat2, Multiplicity, ProjectiveRoot};
pub use state::{
    haar_random, permute_parties, CoefficientPencil, DensityMatrix2, DensityMatrix4, Party,
    Permutation, ThreeQubitState,
};

/// Default relative tolerance for rank and zero decisions.
pub const DEFAULT_TOL: f64 = 1e-10;
