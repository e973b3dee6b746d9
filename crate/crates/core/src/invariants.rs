//! Local-unitary invariants I₁–I₅ and J₁–J₅.
//!
//! I₁–I₅ are computed two independent ways: directly from traces of reduced
//! density matrices and the Cayley hyperdeterminant, and from closed forms in
//! the canonical-form parameters μ₀…μ₄, Δ. The agreement of the two routes is
//! this module's own oracle.

use num_complex::Complex64;

use crate::canonical::CanonicalForm;
use crate::linalg::C64;
use crate::state::ThreeQubitState;

/// The five polynomial invariants, both J-traded variants, Δ and the raw
/// hyperdeterminant value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantSet {
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub i4: f64,
    pub i5: f64,
    pub hdet: C64,
}

/// The algebraically simpler invariants J₁…J₅ and Δ (= J₁).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JSet {
    pub j1: f64,
    pub j2: f64,
    pub j3: f64,
    pub j4: f64,
    pub j5: f64,
    pub delta: f64,
}

impl JSet {
    pub fn as_array(&self) -> [f64; 5] {
        [self.j1, self.j2, self.j3, self.j4, self.j5]
    }
}

/// I₁…I₅ from traces of reduced density matrices and the hyperdeterminant.
/// This is the authoritative route.
pub fn invariants_direct(state: &ThreeQubitState) -> InvariantSet {
    let rho_ab = state.reduced_density_ab();
    let rho_a = rho_ab.trace_out_b();
    let rho_b = rho_ab.trace_out_a();
    let rho_c = state.reduced_density(crate::state::Party::C);

    let i1 = rho_a.purity();
    let i2 = rho_b.purity();
    let i3 = rho_c.purity();

    // I4 = Tr((ρ_A ⊗ ρ_B)·ρ_AB) by direct 4×4 contraction; (ρ_A⊗ρ_B) has
    // entries ρ_A[a,a']·ρ_B[b,b'] at (2a+b, 2a'+b').
    let a = rho_a.0;
    let b = rho_b.0;
    let ae = [[a.m00, a.m01], [a.m10, a.m11]];
    let be = [[b.m00, b.m01], [b.m10, b.m11]];
    let mut i4 = Complex64::new(0.0, 0.0);
    for ai in 0..2 {
        for bi in 0..2 {
            for aj in 0..2 {
                for bj in 0..2 {
                    i4 += ae[ai][aj] * be[bi][bj] * rho_ab.0[2 * aj + bj][2 * ai + bi];
                }
            }
        }
    }

    let hdet = hyperdeterminant(state);
    InvariantSet {
        i1,
        i2,
        i3,
        i4: i4.re,
        i5: hdet.norm_sqr(),
        hdet,
    }
}

/// I₁…I₅ from the canonical-form closed forms in μ and Δ.
pub fn invariants_from_canonical(cf: &CanonicalForm) -> InvariantSet {
    let [m0, m1, m2, m3, m4] = cf.mu;
    let delta = cf.delta();
    let i1 = 1.0 - 2.0 * m0 * (1.0 - m0 - m1);
    let i2 = 1.0 - 2.0 * m0 * (1.0 - m0 - m1 - m2) - 2.0 * delta;
    let i3 = 1.0 - 2.0 * m0 * (1.0 - m0 - m1 - m3) - 2.0 * delta;
    let i4 = 1.0 + m0 * (m2 * m3 - m1 * m4 - 2.0 * m2 - 3.0 * m3 - 3.0 * m4)
        - (2.0 - m0) * delta;
    let i5 = m0 * m0 * m4 * m4;
    // Hdet in the canonical frame: det of the pencil quadratic with
    // T0 = M0, T1 = M1; its modulus is fixed by the form, the phase is not
    // an LU invariant so only λ₀²·(det M₁ cross terms) survive here.
    let hdet_mod = m0 * m4;
    InvariantSet {
        i1,
        i2,
        i3,
        i4,
        i5,
        hdet: Complex64::new(hdet_mod, 0.0),
    }
}

/// J₁…J₅ and Δ from the canonical form.
pub fn invariants_j(cf: &CanonicalForm) -> JSet {
    let [m0, m1, m2, m3, m4] = cf.mu;
    let delta = cf.delta();
    JSet {
        j1: delta,
        j2: m0 * m2,
        j3: m0 * m3,
        j4: m0 * m4,
        j5: m0 * (delta + m2 * m3 - m1 * m4),
        delta,
    }
}

/// Both invariant families for one state, via the canonical form.
pub fn invariants_full(state: &ThreeQubitState) -> (InvariantSet, JSet) {
    let cf = crate::canonical::canonical_form(state);
    (invariants_direct(state), invariants_j(&cf))
}

/// Cayley's hyperdeterminant of the 2×2×2 amplitude tensor, degree 4.
///
/// Equal to the discriminant of the binary quadratic
/// `det(u0·T0 + u1·T1)`; |Hdet|² = μ₀²μ₄² of the canonical form, and the
/// three-tangle is 4|Hdet|.
pub fn hyperdeterminant(state: &ThreeQubitState) -> C64 {
    let t = |i: usize, j: usize, k: usize| state.amplitude(i, j, k);
    let sq = |z: C64| z * z;

    sq(t(0, 0, 0)) * sq(t(1, 1, 1))
        + sq(t(0, 0, 1)) * sq(t(1, 1, 0))
        + sq(t(0, 1, 0)) * sq(t(1, 0, 1))
        + sq(t(1, 0, 0)) * sq(t(0, 1, 1))
        - 2.0
            * (t(0, 0, 0) * t(0, 0, 1) * t(1, 1, 0) * t(1, 1, 1)
                + t(0, 0, 0) * t(0, 1, 0) * t(1, 0, 1) * t(1, 1, 1)
                + t(0, 0, 0) * t(0, 1, 1) * t(1, 0, 0) * t(1, 1, 1)
                + t(0, 0, 1) * t(0, 1, 0) * t(1, 0, 1) * t(1, 1, 0)
                + t(0, 0, 1) * t(0, 1, 1) * t(1, 1, 0) * t(1, 0, 0)
                + t(0, 1, 0) * t(0, 1, 1) * t(1, 0, 1) * t(1, 0, 0))
        + 4.0
            * (t(0, 0, 0) * t(0, 1, 1) * t(1, 0, 1) * t(1, 1, 0)
                + t(0, 0, 1) * t(0, 1, 0) * t(1, 0, 0) * t(1, 1, 1))
}
