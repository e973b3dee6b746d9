//! Entanglement-type classification of three-qubit states.
//!
//! Types are matched most-specific-first on the canonical μ/φ pattern and the
//! J-invariant signature; the patterns overlap (every tri-Bell state also
//! satisfies the type-4a condition μ₄ = 0), so precedence matters.

use std::f64::consts::PI;

use crate::canonical::{canonical_form_tol, CanonicalForm};
use crate::invariants::{invariants_j, JSet};
use crate::state::{Party, ThreeQubitState};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeLabel {
    /// Product states: every Jᵢ = 0.
    Type1,
    /// Biseparable: one party unentangled from the pair; the surviving
    /// J among J₁/J₂/J₃ names the unentangled party.
    Type2a(Party),
    /// Generalized GHZ: only J₄ survives.
    Type2b,
    /// Tri-Bell: μ₁ = μ₄ = 0.
    Type3a,
    /// Extended GHZ (slice states): two of μ₁, μ₂, μ₃ vanish.
    Type3b,
    /// μ₄ = 0.
    Type4a,
    /// μ₂ = 0 or μ₃ = 0.
    Type4b,
    /// μ₁ = 0.
    Type4c,
    /// Real states: φ ∈ {0, π} with all μ nonzero.
    Type5,
    Generic,
}

impl std::fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TypeLabel::Type1 => write!(f, "1"),
            TypeLabel::Type2a(p) => write!(f, "2a-{p}"),
            TypeLabel::Type2b => write!(f, "2b"),
            TypeLabel::Type3a => write!(f, "3a"),
            TypeLabel::Type3b => write!(f, "3b"),
            TypeLabel::Type4a => write!(f, "4a"),
            TypeLabel::Type4b => write!(f, "4b"),
            TypeLabel::Type4c => write!(f, "4c"),
            TypeLabel::Type5 => write!(f, "5"),
            TypeLabel::Generic => write!(f, "generic"),
        }
    }
}

/// Result of classifying one canonical form.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub label: TypeLabel,
    /// Human-readable μ/φ pattern that matched.
    pub matched_mu_pattern: String,
    /// Which J's vanish and which identities were verified, with residuals.
    pub j_signature: IdentityReport,
    pub tolerance: f64,
    /// Set when some decision quantity is within a factor of 10 of the
    /// tolerance, i.e. the label is numerically unstable.
    pub boundary: bool,
}

/// Residuals of the identities attached to a type label.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct IdentityReport {
    pub checks: Vec<(String, f64)>,
}

impl IdentityReport {
    fn push(&mut self, name: &str, residual: f64) {
        self.checks.push((name.to_string(), residual));
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|(_, r)| *r).fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.checks.iter().all(|(_, r)| *r <= tol)
    }
}

/// Classify a raw state (composes with `canonical_form`).
pub fn classify_state(state: &ThreeQubitState, tol: f64) -> Classification {
    classify(&canonical_form_tol(state, crate::DEFAULT_TOL), tol)
}

/// Classify a canonical form; `tol` defaults to 1e-8 at the CLI surface.
pub fn classify(cf: &CanonicalForm, tol: f64) -> Classification {
    let j = invariants_j(cf);
    let mu = &cf.mu;
    let phi_edge = (cf.phi).min((cf.phi - PI).abs());

    // Every quantity a pattern decision can hinge on.
    let decision_values = [
        mu[0], mu[1], mu[2], mu[3], mu[4], j.j1, j.j2, j.j3, j.j4, j.j5.abs(), phi_edge,
    ];
    let boundary = decision_values
        .iter()
        .any(|&v| v > tol * 0.1 && v < tol * 10.0);

    let small = |v: f64| v < tol;
    let j_arr = [j.j1, j.j2, j.j3, j.j4];

    let (label, pattern) = if j_arr.iter().all(|&v| small(v)) && small(j.j5.abs()) {
        (TypeLabel::Type1, "all J = 0 (product state)".to_string())
    } else if small(j.j4) && small(j.j5.abs()) && j_arr[..3].iter().filter(|&&v| !small(v)).count() == 1
    {
        let party = if !small(j.j1) {
            Party::A
        } else if !small(j.j2) {
            Party::B
        } else {
            Party::C
        };
        (
            TypeLabel::Type2a(party),
            format!("only J{} nonzero (party {party} unentangled)", party.slot() + 1),
        )
    } else if !small(j.j4) && j_arr[..3].iter().all(|&v| small(v)) && small(j.j5.abs()) {
        (TypeLabel::Type2b, "only J4 nonzero".to_string())
    } else if small(mu[1])
        && small(mu[4])
        && [mu[0], mu[2], mu[3]].iter().filter(|&&v| !small(v)).count() >= 2
    {
        (TypeLabel::Type3a, "mu1 = mu4 = 0".to_string())
    } else if [mu[1], mu[2], mu[3]].iter().filter(|&&v| small(v)).count() == 2
        && [mu[1], mu[2], mu[3]].iter().filter(|&&v| !small(v)).count() == 1
        && !small(mu[0])
        && !small(mu[4])
    {
        (TypeLabel::Type3b, "two of mu1, mu2, mu3 = 0".to_string())
    } else if small(mu[4]) {
        (TypeLabel::Type4a, "mu4 = 0".to_string())
    } else if small(mu[2]) || small(mu[3]) {
        (TypeLabel::Type4b, "mu2 = 0 or mu3 = 0".to_string())
    } else if small(mu[1]) {
        (TypeLabel::Type4c, "mu1 = 0".to_string())
    } else if phi_edge < tol && mu.iter().all(|&v| !small(v)) {
        (TypeLabel::Type5, "phi in {0, pi}, all mu nonzero".to_string())
    } else {
        (TypeLabel::Generic, "no special pattern".to_string())
    };

    let report = identity_report(&j, label);
    Classification {
        label,
        matched_mu_pattern: pattern,
        j_signature: report,
        tolerance: tol,
        boundary,
    }
}

/// Evaluates every identity the classification attaches to `label` and
/// reports the residuals.
pub fn verify_type_identities(cf: &CanonicalForm, label: TypeLabel) -> IdentityReport {
    identity_report(&invariants_j(cf), label)
}

fn identity_report(j: &JSet, label: TypeLabel) -> IdentityReport {
    let mut report = IdentityReport::default();
    let sqrt_j123 = (j.j1 * j.j2 * j.j3).max(0.0).sqrt();
    match label {
        TypeLabel::Type1 => {
            report.push("J1 = 0", j.j1);
            report.push("J2 = 0", j.j2);
            report.push("J3 = 0", j.j3);
            report.push("J4 = 0", j.j4);
            report.push("J5 = 0", j.j5.abs());
        }
        TypeLabel::Type2a(party) => {
            for (name, value, keep) in [
                ("J1", j.j1, Party::A),
                ("J2", j.j2, Party::B),
                ("J3", j.j3, Party::C),
            ] {
                if keep != party {
                    report.push(&format!("{name} = 0"), value);
                }
            }
            report.push("J4 = 0", j.j4);
            report.push("J5 = 0", j.j5.abs());
        }
        TypeLabel::Type2b => {
            report.push("J1 = 0", j.j1);
            report.push("J2 = 0", j.j2);
            report.push("J3 = 0", j.j3);
            report.push("J5 = 0", j.j5.abs());
        }
        TypeLabel::Type3a => {
            report.push("J4 = 0", j.j4);
            report.push(
                "J1J2 + J1J3 + J2J3 = sqrt(J1J2J3)",
                (j.j1 * j.j2 + j.j1 * j.j3 + j.j2 * j.j3 - sqrt_j123).abs(),
            );
            report.push("sqrt(J1J2J3) = J5/2", (sqrt_j123 - j.j5 / 2.0).abs());
        }
        TypeLabel::Type3b => {
            // μ_j = μ_k = 0 kills the matching pair of J's and J5; which
            // pair died is visible from the values themselves.
            let mut pair: Vec<(&str, f64)> = vec![("J1", j.j1), ("J2", j.j2), ("J3", j.j3)];
            pair.sort_by(|a, b| a.1.partial_cmp(&b.1).expect("finite"));
            report.push(&format!("{} = 0", pair[0].0), pair[0].1);
            report.push(&format!("{} = 0", pair[1].0), pair[1].1);
            report.push("J5 = 0", j.j5.abs());
        }
        TypeLabel::Type4a => {
            report.push("J4 = 0", j.j4);
            report.push("sqrt(J1J2J3) = J5/2", (sqrt_j123 - j.j5 / 2.0).abs());
        }
        TypeLabel::Type4b => {
            report.push("J2 = 0 or J3 = 0", j.j2.min(j.j3));
            report.push("J5 = 0", j.j5.abs());
        }
        TypeLabel::Type4c => {
            report.push(
                "J1(J2+J3+J4) + J2J3 = sqrt(J1J2J3)",
                (j.j1 * (j.j2 + j.j3 + j.j4) + j.j2 * j.j3 - sqrt_j123).abs(),
            );
            report.push("sqrt(J1J2J3) = J5/2", (sqrt_j123 - j.j5 / 2.0).abs());
        }
        TypeLabel::Type5 => {
            report.push("sqrt(J1J2J3) = J5/2", (sqrt_j123 - j.j5 / 2.0).abs());
        }
        TypeLabel::Generic => {}
    }
    report
}
