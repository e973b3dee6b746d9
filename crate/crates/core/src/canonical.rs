//! The five-term canonical form of a three-qubit pure state.
//!
//! Pipeline: find the projective roots of `det(u0·T0 + u1·T1) = 0`, lift each
//! root to a party-A unitary, diagonalize the singular slice by SVD, fix the
//! remaining basis phases so a single phase φ sits on the λ₁ term, and pick
//! the root whose φ falls in [0, π].

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::Error;
use crate::linalg::{complete_unitary, pencil_roots_tol, svd2, C64, Mat2, Multiplicity, ProjectiveRoot};
use crate::state::{permute_parties, Party, Permutation, ThreeQubitState};
use crate::DEFAULT_TOL;

/// How many distinct entanglement-erasing roots the pencil quadratic has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootCount {
    One,
    Two,
    /// The quadratic vanishes identically; every direction is a root.
    Continuum,
}

/// How the returned root was picked among the candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootChoice {
    /// Only one candidate existed.
    Single,
    /// Exactly one candidate had φ in [0, π].
    PhaseRange,
    /// Ambiguous φ pattern; resolved by the lexicographic (λ₀, λ₄, λ₁, λ₂, λ₃) order.
    TieBreak,
}

/// Canonical decomposition
/// `e^{iω}(uA⊗uB⊗uC)|Ψ⟩ = λ₀|000⟩ + λ₁e^{iφ}|100⟩ + λ₂|101⟩ + λ₃|110⟩ + λ₄|111⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalForm {
    /// λ₀…λ₄, all nonnegative.
    pub lambda: [f64; 5],
    /// Phase on the λ₁ term; in [0, π] for the selected form.
    pub phi: f64,
    pub u_a: Mat2,
    pub u_b: Mat2,
    pub u_c: Mat2,
    /// Global phase of the transformation.
    pub omega: f64,
    /// The pencil root this form was built from.
    pub root: ProjectiveRoot,
    pub root_count: RootCount,
    pub root_choice: RootChoice,
    /// μᵢ = λᵢ², cached.
    pub mu: [f64; 5],
}

impl CanonicalForm {
    /// Δ = |λ₁λ₄e^{iφ} − λ₂λ₃|².
    pub fn delta(&self) -> f64 {
        let l = &self.lambda;
        (Complex64::from_polar(l[1] * l[4], self.phi) - Complex64::new(l[2] * l[3], 0.0)).norm_sqr()
    }

    /// The matrix M₁ = [[λ₁e^{iφ}, λ₂], [λ₃, λ₄]].
    pub fn m1(&self) -> Mat2 {
        let l = &self.lambda;
        Mat2::new(
            Complex64::from_polar(l[1], self.phi),
            Complex64::new(l[2], 0.0),
            Complex64::new(l[3], 0.0),
            Complex64::new(l[4], 0.0),
        )
    }

    /// The canonical amplitude vector (λ₀, 0, 0, 0, λ₁e^{iφ}, λ₂, λ₃, λ₄).
    pub fn canonical_vector(&self) -> ThreeQubitState {
        let z = Complex64::new(0.0, 0.0);
        let l = &self.lambda;
        let amps = [
            Complex64::new(l[0], 0.0),
            z,
            z,
            z,
            Complex64::from_polar(l[1], self.phi),
            Complex64::new(l[2], 0.0),
            Complex64::new(l[3], 0.0),
            Complex64::new(l[4], 0.0),
        ];
        ThreeQubitState::from_amplitudes(amps, true).expect("canonical vector is nonzero")
    }

    /// ‖e^{iω}(uA⊗uB⊗uC)|Ψ⟩ − canonical vector‖ for the original state.
    pub fn transform_residual(&self, original: &ThreeQubitState) -> f64 {
        let moved = original.apply_local_unchecked(&self.u_a, &self.u_b, &self.u_c, self.omega);
        let target = self.canonical_vector();
        moved
            .amplitudes()
            .iter()
            .zip(target.amplitudes().iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    fn validate(&self) -> Result<(), Error> {
        if self.lambda.iter().any(|&l| l < 0.0) {
            return Err(Error::InvalidForm {
                reason: "negative lambda".into(),
            });
        }
        let sum_mu: f64 = self.lambda.iter().map(|l| l * l).sum();
        if (sum_mu - 1.0).abs() > 1e-6 {
            return Err(Error::InvalidForm {
                reason: format!("sum of mu deviates from 1 by {:.3e}", (sum_mu - 1.0).abs()),
            });
        }
        for u in [&self.u_a, &self.u_b, &self.u_c] {
            if !u.is_unitary(1e-8) {
                return Err(Error::InvalidForm {
                    reason: "non-unitary local factor".into(),
                });
            }
        }
        Ok(())
    }
}

/// A single-party measurement direction whose outcome leaves the other two
/// parties in a product state.
#[derive(Debug, Clone, PartialEq)]
pub struct ErasingDirection {
    pub party: Party,
    /// The measured ket |e⟩ (⟨e| = the pencil root).
    pub ket: [C64; 2],
    /// Unnormalized post-measurement amplitudes ⟨e|Ψ⟩ over the two remaining
    /// parties, in their original order; its 2×2 matrix is singular.
    pub residual: [C64; 4],
    /// ‖residual‖², the outcome probability.
    pub probability: f64,
    /// Set when every direction works (party already unentangled).
    pub degenerate: bool,
}

impl ErasingDirection {
    /// |det| of the 2×2 residual coefficient matrix.
    pub fn residual_det(&self) -> f64 {
        (self.residual[0] * self.residual[3] - self.residual[1] * self.residual[2]).norm()
    }
}

/// Canonical form with the default tolerance.
pub fn canonical_form(state: &ThreeQubitState) -> CanonicalForm {
    canonical_form_tol(state, DEFAULT_TOL)
}

/// Canonical form of `state`: λ's, φ and the local unitaries achieving them.
pub fn canonical_form_tol(state: &ThreeQubitState, tol: f64) -> CanonicalForm {
    let mut cands = canonical_candidates_tol(state, tol);
    if cands.len() == 1 {
        let mut cf = cands.pop().expect("one candidate");
        cf.root_choice = RootChoice::Single;
        cf.phi = snap_phase(cf.phi);
        return cf;
    }

    let in_range: Vec<bool> = cands.iter().map(|c| c.phi <= PI + 1e-12).collect();
    let mut cf = match (in_range[0], in_range[1]) {
        (true, false) => {
            let mut cf = cands.swap_remove(0);
            cf.root_choice = RootChoice::PhaseRange;
            cf
        }
        (false, true) => {
            let mut cf = cands.swap_remove(1);
            cf.root_choice = RootChoice::PhaseRange;
            cf
        }
        _ => {
            // Both or neither in range: deterministic lexicographic tie-break.
            let key = |c: &CanonicalForm| {
                let l = &c.lambda;
                [l[0], l[4], l[1], l[2], l[3]]
            };
            let pick = if key(&cands[0]) >= key(&cands[1]) { 0 } else { 1 };
            let mut cf = cands.swap_remove(pick);
            cf.root_choice = RootChoice::TieBreak;
            cf
        }
    };
    cf.phi = snap_phase(cf.phi);
    cf
}

/// Clamp a phase that sits numerically just outside [0, π] back onto the
/// boundary. The window is kept tiny so reconstruction stays exact.
fn snap_phase(phi: f64) -> f64 {
    const WINDOW: f64 = 1e-9;
    if phi >= 2.0 * PI - WINDOW {
        0.0
    } else if phi > PI && phi <= PI + WINDOW {
        PI
    } else {
        phi
    }
}

/// All pre-selection candidate forms, one per pencil root (two conventional
/// representatives in the continuum case). Candidate φ lies in [0, 2π).
pub fn canonical_candidates(state: &ThreeQubitState) -> Vec<CanonicalForm> {
    canonical_candidates_tol(state, DEFAULT_TOL)
}

pub fn canonical_candidates_tol(state: &ThreeQubitState, tol: f64) -> Vec<CanonicalForm> {
    let pencil = state.pencil();
    let roots = pencil_roots_tol(&pencil.t0, &pencil.t1, tol);
    let root_count = match (roots.len(), roots[0].multiplicity) {
        (_, Multiplicity::IdenticallyZero) => RootCount::Continuum,
        (1, _) => RootCount::One,
        _ => RootCount::Two,
    };
    roots
        .into_iter()
        .map(|root| candidate_from_root(state, root, root_count, tol))
        .collect()
}

fn candidate_from_root(
    state: &ThreeQubitState,
    root: ProjectiveRoot,
    root_count: RootCount,
    tol: f64,
) -> CanonicalForm {
    let pencil = state.pencil();
    let u_a0 = complete_unitary((root.u0, root.u1)).expect("roots are normalized");
    let t0p = pencil.t0.scale(root.u0).add(&pencil.t1.scale(root.u1));
    let t1p = pencil
        .t0
        .scale(-root.u1.conj())
        .add(&pencil.t1.scale(root.u0.conj()));

    let (u1, d, u2) = svd2(&t0p);
    let lambda0 = d.m00.re;

    if lambda0 < tol {
        // Party A unentangled along this root: diagonalize the other slice
        // so its singular values land at the λ₁, λ₄ slots.
        let (v1, dp, v2) = svd2(&t1p);
        let lambda = [0.0, dp.m00.re, 0.0, 0.0, dp.m11.re];
        return finish(
            lambda,
            0.0,
            u_a0,
            v1,
            v2.transpose(),
            root,
            root_count,
        );
    }

    let m1 = u1.mul(&t1p).mul(&u2);
    let entries = m1.entries();
    let nonzero: Vec<bool> = entries.iter().map(|e| e.norm() >= tol).collect();

    let (x, b, c, phi) = if nonzero.iter().all(|&z| z) {
        // Generic gauge: make m01, m10, m11 real nonnegative; the residual
        // invariant phase arg(m00·m11/(m01·m10)) lands on the λ₁ term.
        let th: Vec<f64> = entries.iter().map(|e| e.arg()).collect();
        let x = th[3] - th[1] - th[2];
        let b = -th[2] - x;
        let c = -th[1] - x;
        let phi = (th[0] + x).rem_euclid(2.0 * PI);
        (x, b, c, phi)
    } else {
        // Fewer than four entries: the phase constraint degenerates, every
        // surviving entry can be made real nonnegative and φ = 0.
        let mut rows: Vec<[f64; 4]> = Vec::new();
        let coeffs = [[1.0, 0.0, 0.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0], [1.0, 1.0, 1.0]];
        for (idx, e) in entries.iter().enumerate() {
            if nonzero[idx] {
                let co = coeffs[idx];
                rows.push([co[0], co[1], co[2], -e.arg()]);
            }
        }
        let sol = solve_phase_system(rows);
        (sol[0], sol[1], sol[2], 0.0)
    };

    let phase_a = Mat2::diag(C64::new(1.0, 0.0), C64::from_polar(1.0, x));
    let phase_b = Mat2::diag(C64::new(1.0, 0.0), C64::from_polar(1.0, b));
    let phase_c = Mat2::diag(C64::new(1.0, 0.0), C64::from_polar(1.0, c));

    let lambda = [
        lambda0,
        entries[0].norm(),
        entries[1].norm(),
        entries[2].norm(),
        entries[3].norm(),
    ];
    finish(
        lambda,
        phi,
        phase_a.mul(&u_a0),
        phase_b.mul(&u1),
        phase_c.mul(&u2.transpose()),
        root,
        root_count,
    )
}

fn finish(
    lambda: [f64; 5],
    phi: f64,
    u_a: Mat2,
    u_b: Mat2,
    u_c: Mat2,
    root: ProjectiveRoot,
    root_count: RootCount,
) -> CanonicalForm {
    let mu = [
        lambda[0] * lambda[0],
        lambda[1] * lambda[1],
        lambda[2] * lambda[2],
        lambda[3] * lambda[3],
        lambda[4] * lambda[4],
    ];
    CanonicalForm {
        lambda,
        phi,
        u_a,
        u_b,
        u_c,
        omega: 0.0,
        root,
        root_count,
        root_choice: RootChoice::Single,
        mu,
    }
}

/// Gauss-Jordan solve of the underdetermined phase system (≤ 3 independent
/// rows over unknowns x, b, c); free unknowns are set to zero. Exactness over
/// the reals is enough because fewer than four rows carry no cycle constraint.
fn solve_phase_system(mut rows: Vec<[f64; 4]>) -> [f64; 3] {
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0;
    for col in 0..3 {
        let Some(best) = (r..rows.len()).max_by(|&i, &j| {
            rows[i][col].abs().partial_cmp(&rows[j][col].abs()).expect("finite")
        }) else {
            break;
        };
        if rows[best][col].abs() < 1e-9 {
            continue;
        }
        rows.swap(r, best);
        let p = rows[r][col];
        for v in rows[r].iter_mut() {
            *v /= p;
        }
        for i in 0..rows.len() {
            if i != r {
                let f = rows[i][col];
                for k in 0..4 {
                    rows[i][k] -= f * rows[r][k];
                }
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    let mut sol = [0.0; 3];
    for (row, col) in pivots {
        sol[col] = rows[row][3];
    }
    sol
}

/// Rebuilds the original state from its canonical form.
pub fn reconstruct(cf: &CanonicalForm) -> Result<ThreeQubitState, Error> {
    cf.validate()?;
    let canon = cf.canonical_vector();
    canon.apply_local(
        &cf.u_a.adjoint(),
        &cf.u_b.adjoint(),
        &cf.u_c.adjoint(),
        -cf.omega,
    )
}

/// Measurement directions for `party` that erase the entanglement between
/// the other two parties.
pub fn erasing_states(state: &ThreeQubitState, party: Party) -> Vec<ErasingDirection> {
    erasing_states_tol(state, party, DEFAULT_TOL)
}

pub fn erasing_states_tol(state: &ThreeQubitState, party: Party, tol: f64) -> Vec<ErasingDirection> {
    let fronted = match party {
        Party::A => state.clone(),
        _ => permute_parties(state, &Permutation::bring_to_front(party)),
    };
    let pencil = fronted.pencil();
    let roots = pencil_roots_tol(&pencil.t0, &pencil.t1, tol);
    roots
        .into_iter()
        .map(|root| {
            let residual = pencil.t0.scale(root.u0).add(&pencil.t1.scale(root.u1));
            let entries = residual.entries();
            ErasingDirection {
                party,
                ket: [root.u0.conj(), root.u1.conj()],
                residual: entries,
                probability: entries.iter().map(|e| e.norm_sqr()).sum(),
                degenerate: root.multiplicity == Multiplicity::IdenticallyZero,
            }
        })
        .collect()
}
