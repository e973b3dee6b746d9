//! JSON state and report formats.
//!
//! Every float is written with 17 significant digits so a serialize/parse
//! round trip reproduces the exact double. Complex numbers are `[re, im]`
//! pairs, angles are radians, key order follows struct declaration order so
//! output is byte-stable for golden tests.

use std::io;

use serde::{Deserialize, Serialize};

use schmidt3::{
    CanonicalForm, Classification, ErasingDirection, InvariantSet, JSet, Mat2,
    ProductBiseparableForm, RootChoice, RootCount, Set2Form, TwoProductDecomposition,
};

/// Complex number as `[re, im]`.
#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
pub struct Cx(pub f64, pub f64);

impl From<schmidt3::linalg::C64> for Cx {
    fn from(z: schmidt3::linalg::C64) -> Self {
        Cx(z.re, z.im)
    }
}

pub fn mat(m: &Mat2) -> [[Cx; 2]; 2] {
    [
        [m.m00.into(), m.m01.into()],
        [m.m10.into(), m.m11.into()],
    ]
}

fn qubit(v: &[schmidt3::linalg::C64; 2]) -> [Cx; 2] {
    [v[0].into(), v[1].into()]
}

/// On-disk state format: 8 amplitude pairs at index 4i + 2j + k.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct StateFile {
    pub amplitudes: [[f64; 2]; 8],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct RootReport {
    pub u0: Cx,
    pub u1: Cx,
    pub multiplicity: String,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct CanonReport {
    pub party: String,
    pub lambda: [f64; 5],
    pub phi: f64,
    pub mu: [f64; 5],
    pub u_a: [[Cx; 2]; 2],
    pub u_b: [[Cx; 2]; 2],
    pub u_c: [[Cx; 2]; 2],
    pub global_phase: f64,
    pub root: RootReport,
    pub root_count: String,
    pub root_choice: String,
    pub reconstruction_residual: f64,
}

impl CanonReport {
    pub fn new(cf: &CanonicalForm, party: &str, residual: f64) -> Self {
        CanonReport {
            party: party.to_string(),
            lambda: cf.lambda,
            phi: cf.phi,
            mu: cf.mu,
            u_a: mat(&cf.u_a),
            u_b: mat(&cf.u_b),
            u_c: mat(&cf.u_c),
            global_phase: cf.omega,
            root: RootReport {
                u0: cf.root.u0.into(),
                u1: cf.root.u1.into(),
                multiplicity: format!("{:?}", cf.root.multiplicity).to_lowercase(),
            },
            root_count: match cf.root_count {
                RootCount::One => "one",
                RootCount::Two => "two",
                RootCount::Continuum => "continuum",
            }
            .to_string(),
            root_choice: match cf.root_choice {
                RootChoice::Single => "single",
                RootChoice::PhaseRange => "phase-range",
                RootChoice::TieBreak => "tie-break",
            }
            .to_string(),
            reconstruction_residual: residual,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct InvariantsReport {
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub i4: f64,
    pub i5: f64,
    pub hdet: Cx,
    pub j1: f64,
    pub j2: f64,
    pub j3: f64,
    pub j4: f64,
    pub j5: f64,
    pub delta: f64,
}

impl InvariantsReport {
    pub fn new(i: &InvariantSet, j: &JSet) -> Self {
        InvariantsReport {
            i1: i.i1,
            i2: i.i2,
            i3: i.i3,
            i4: i.i4,
            i5: i.i5,
            hdet: i.hdet.into(),
            j1: j.j1,
            j2: j.j2,
            j3: j.j3,
            j4: j.j4,
            j5: j.j5,
            delta: j.delta,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub residual: f64,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ClassifyReport {
    #[serde(rename = "type")]
    pub type_label: String,
    pub matched_mu_pattern: String,
    pub tolerance: f64,
    pub boundary: bool,
    pub identity_checks: Vec<IdentityCheck>,
}

impl ClassifyReport {
    pub fn new(c: &Classification) -> Self {
        ClassifyReport {
            type_label: c.label.to_string(),
            matched_mu_pattern: c.matched_mu_pattern.clone(),
            tolerance: c.tolerance,
            boundary: c.boundary,
            identity_checks: c
                .j_signature
                .checks
                .iter()
                .map(|(name, residual)| IdentityCheck {
                    name: name.clone(),
                    residual: *residual,
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct DirectionReport {
    pub ket: [Cx; 2],
    pub residual: [Cx; 4],
    pub probability: f64,
    pub residual_det: f64,
    pub degenerate: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct EraseReport {
    pub party: String,
    pub count: usize,
    pub directions: Vec<DirectionReport>,
}

impl EraseReport {
    pub fn new(party: &str, dirs: &[ErasingDirection]) -> Self {
        EraseReport {
            party: party.to_string(),
            count: dirs.len(),
            directions: dirs
                .iter()
                .map(|d| DirectionReport {
                    ket: qubit(&d.ket),
                    residual: [
                        d.residual[0].into(),
                        d.residual[1].into(),
                        d.residual[2].into(),
                        d.residual[3].into(),
                    ],
                    probability: d.probability,
                    residual_det: d.residual_det(),
                    degenerate: d.degenerate,
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct TwoProductReport {
    pub alpha: f64,
    pub beta: f64,
    pub ket1: [[Cx; 2]; 3],
    pub ket2: [[Cx; 2]; 3],
    pub trivial: bool,
    pub reconstruction_residual: f64,
}

impl TwoProductReport {
    pub fn new(d: &TwoProductDecomposition, residual: f64) -> Self {
        TwoProductReport {
            alpha: d.alpha,
            beta: d.beta,
            ket1: [qubit(&d.ket1[0]), qubit(&d.ket1[1]), qubit(&d.ket1[2])],
            ket2: [qubit(&d.ket2[0]), qubit(&d.ket2[1]), qubit(&d.ket2[2])],
            trivial: d.trivial,
            reconstruction_residual: residual,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct BiseparableReport {
    pub theta: f64,
    pub omega: f64,
    pub a0: [Cx; 2],
    pub a1: [Cx; 2],
    pub b0: [Cx; 2],
    pub c0: [Cx; 2],
    pub schmidt_b: [[Cx; 2]; 2],
    pub schmidt_c: [[Cx; 2]; 2],
    pub phase: f64,
    pub reconstruction_residual: f64,
}

impl BiseparableReport {
    pub fn new(f: &ProductBiseparableForm, residual: f64) -> Self {
        BiseparableReport {
            theta: f.theta,
            omega: f.omega_angle,
            a0: qubit(&f.a0),
            a1: qubit(&f.a1),
            b0: qubit(&f.b0),
            c0: qubit(&f.c0),
            schmidt_b: [qubit(&f.schmidt_b[0]), qubit(&f.schmidt_b[1])],
            schmidt_c: [qubit(&f.schmidt_c[0]), qubit(&f.schmidt_c[1])],
            phase: f.phase,
            reconstruction_residual: residual,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct Set2Report {
    pub support: [usize; 5],
    pub coefficients: [Cx; 5],
    pub c_rotation: [[Cx; 2]; 2],
    pub rotated: bool,
}

impl Set2Report {
    pub fn new(f: &Set2Form) -> Self {
        Set2Report {
            support: schmidt3::decomp::SET2_SUPPORT,
            coefficients: [
                f.coeffs[0].into(),
                f.coeffs[1].into(),
                f.coeffs[2].into(),
                f.coeffs[3].into(),
                f.coeffs[4].into(),
            ],
            c_rotation: mat(&f.c_rotation),
            rotated: f.rotated,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct VerifyCheck {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<VerifyCheck>,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ErrorBody {
    pub error: String,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub type_label: Option<String>,
}

/// Writes floats as `d.dddddddddddddddde±x`: 17 significant digits, enough
/// for the parse to reproduce the exact bit pattern.
struct SigDigits17;

impl serde_json::ser::Formatter for SigDigits17 {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// One line of compact JSON, no trailing newline.
pub fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SigDigits17);
    value
        .serialize(&mut ser)
        .expect("report serialization cannot fail");
    String::from_utf8(buf).expect("serializer emits UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_is_lossless() {
        for &x in &[
            0.0,
            1.0,
            -1.0,
            0.1,
            std::f64::consts::FRAC_1_SQRT_2,
            1.0 / 3.0,
            -2.718281828459045e-101,
            f64::MIN_POSITIVE,
            1e300,
        ] {
            let s = to_json_line(&x);
            let back: f64 = serde_json::from_str(&s).unwrap();
            assert_eq!(x.to_bits(), back.to_bits(), "{s}");
        }
    }

    #[test]
    fn state_file_round_trip() {
        let f = StateFile {
            amplitudes: [[0.25, -0.1]; 8],
            label: Some("x".into()),
        };
        let s = to_json_line(&f);
        let back: StateFile = serde_json::from_str(&s).unwrap();
        assert_eq!(f, back);

        let unlabeled = StateFile {
            amplitudes: [[0.35355339059327373, 0.0]; 8],
            label: None,
        };
        let s = to_json_line(&unlabeled);
        assert!(!s.contains("label"));
        let back: StateFile = serde_json::from_str(&s).unwrap();
        assert_eq!(unlabeled, back);
    }

    #[test]
    fn report_round_trip_bit_for_bit() {
        let state = schmidt3::haar_random(42);
        let cf = schmidt3::canonical_form(&state);
        let r = CanonReport::new(&cf, "A", cf.transform_residual(&state));
        let back: CanonReport = serde_json::from_str(&to_json_line(&r)).unwrap();
        assert_eq!(r, back);

        let (i, j) = schmidt3::invariants_full(&state);
        let r = InvariantsReport::new(&i, &j);
        let back: InvariantsReport = serde_json::from_str(&to_json_line(&r)).unwrap();
        assert_eq!(r, back);

        let c = schmidt3::classify_state(&state, 1e-10);
        let r = ClassifyReport::new(&c);
        let back: ClassifyReport = serde_json::from_str(&to_json_line(&r)).unwrap();
        assert_eq!(r, back);
    }

    #[test]
    fn key_order_is_declaration_order() {
        let c = schmidt3::classify_state(&schmidt3::ThreeQubitState::ghz(), 1e-10);
        let line = to_json_line(&ClassifyReport::new(&c));
        let t = line.find("\"type\"").unwrap();
        let m = line.find("\"matched_mu_pattern\"").unwrap();
        let b = line.find("\"boundary\"").unwrap();
        assert!(t < m && m < b);
        assert!(line.starts_with("{\"type\":\"2b\""));
    }
}
