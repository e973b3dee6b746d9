//! Exact-shape 2×2 complex matrix primitives.
//!
//! Everything here is closed-form: the SVD goes through the eigendecomposition
//! of M†M, and the matrix-pencil root finder solves a homogeneous binary
//! quadratic, so "roots at infinity" need no special casing.

use num_complex::Complex64;

use crate::error::Error;
use crate::DEFAULT_TOL;

pub type C64 = Complex64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// A 2×2 complex matrix stored by value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub m00: C64,
    pub m01: C64,
    pub m10: C64,
    pub m11: C64,
}

impl Mat2 {
    pub const fn new(m00: C64, m01: C64, m10: C64, m11: C64) -> Self {
        Mat2 { m00, m01, m10, m11 }
    }

    pub const fn zero() -> Self {
        Mat2::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub const fn identity() -> Self {
        Mat2::new(ONE, ZERO, ZERO, ONE)
    }

    pub fn diag(a: C64, b: C64) -> Self {
        Mat2::new(a, ZERO, ZERO, b)
    }

    pub fn from_rows(r0: [C64; 2], r1: [C64; 2]) -> Self {
        Mat2::new(r0[0], r0[1], r1[0], r1[1])
    }

    pub fn det(&self) -> C64 {
        self.m00 * self.m11 - self.m01 * self.m10
    }

    pub fn trace(&self) -> C64 {
        self.m00 + self.m11
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat2 {
        Mat2::new(
            self.m00.conj(),
            self.m10.conj(),
            self.m01.conj(),
            self.m11.conj(),
        )
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2::new(self.m00, self.m10, self.m01, self.m11)
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            self.m00 * rhs.m00 + self.m01 * rhs.m10,
            self.m00 * rhs.m01 + self.m01 * rhs.m11,
            self.m10 * rhs.m00 + self.m11 * rhs.m10,
            self.m10 * rhs.m01 + self.m11 * rhs.m11,
        )
    }

    pub fn scale(&self, s: C64) -> Mat2 {
        Mat2::new(self.m00 * s, self.m01 * s, self.m10 * s, self.m11 * s)
    }

    pub fn add(&self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            self.m00 + rhs.m00,
            self.m01 + rhs.m01,
            self.m10 + rhs.m10,
            self.m11 + rhs.m11,
        )
    }

    pub fn sub(&self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            self.m00 - rhs.m00,
            self.m01 - rhs.m01,
            self.m10 - rhs.m10,
            self.m11 - rhs.m11,
        )
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: [C64; 2]) -> [C64; 2] {
        [
            self.m00 * v[0] + self.m01 * v[1],
            self.m10 * v[0] + self.m11 * v[1],
        ]
    }

    pub fn frobenius_norm(&self) -> f64 {
        (self.m00.norm_sqr() + self.m01.norm_sqr() + self.m10.norm_sqr() + self.m11.norm_sqr())
            .sqrt()
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.mul(&self.adjoint()).sub(&Mat2::identity()).frobenius_norm() < tol
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        self.m01.norm() < tol && self.m10.norm() < tol
    }

    /// Singular values, descending.
    pub fn singular_values(&self) -> [f64; 2] {
        let (_, d, _) = svd2(self);
        [d.m00.re, d.m11.re]
    }

    /// Number of singular values exceeding `tol` (relative to the larger one).
    pub fn rank(&self, tol: f64) -> usize {
        let [s0, s1] = self.singular_values();
        if s0 <= tol {
            0
        } else if s1 <= tol * s0.max(1.0) {
            1
        } else {
            2
        }
    }

    pub fn entries(&self) -> [C64; 4] {
        [self.m00, self.m01, self.m10, self.m11]
    }
}

/// Normalized projective solution (u0 : u1) of the pencil quadratic,
/// canonicalized so the leading component with modulus above 1e-14 is real
/// positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectiveRoot {
    pub u0: C64,
    pub u1: C64,
    pub multiplicity: Multiplicity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Simple,
    Double,
    /// All coefficients of the quadratic vanish; every direction is a root
    /// and this is a conventional representative.
    IdenticallyZero,
}

impl ProjectiveRoot {
    fn canonicalized(u0: C64, u1: C64, multiplicity: Multiplicity) -> Self {
        let norm = (u0.norm_sqr() + u1.norm_sqr()).sqrt();
        let (mut u0, mut u1) = (u0 / norm, u1 / norm);
        let lead = if u0.norm() > 1e-14 { u0 } else { u1 };
        let phase = lead.conj() / lead.norm();
        u0 *= phase;
        u1 *= phase;
        ProjectiveRoot { u0, u1, multiplicity }
    }

    /// Chordal distance between projective classes: |u0 v1 − u1 v0|.
    pub fn distance(&self, other: &ProjectiveRoot) -> f64 {
        (self.u0 * other.u1 - self.u1 * other.u0).norm()
    }
}

/// Closed-form SVD of a 2×2 complex matrix.
///
/// Returns unitaries `(U1, D, U2)` with `U1·M·U2 = D`, `D` diagonal with
/// real entries and `D₀₀ ≥ D₁₁ ≥ 0`.
pub fn svd2(m: &Mat2) -> (Mat2, Mat2, Mat2) {
    // Eigendecomposition of the Hermitian PSD matrix H = M†M.
    let h = m.adjoint().mul(m);
    let a = h.m00.re;
    let c = h.m11.re;
    let b = h.m01; // h.m10 = conj(b)

    let half_diff = 0.5 * (a - c);
    let root = (half_diff * half_diff + b.norm_sqr()).sqrt();
    let mean = 0.5 * (a + c);
    let eig0 = (mean + root).max(0.0);
    let eig1 = (mean - root).max(0.0);

    let scale = m.frobenius_norm();
    let tol = 1e-15 * scale * scale;

    // Columns of V are the eigenvectors of H, eig0 first.
    let v = if b.norm() > tol {
        let v0 = [b, C64::new(eig0 - a, 0.0)];
        let n0 = (v0[0].norm_sqr() + v0[1].norm_sqr()).sqrt();
        let v0 = [v0[0] / n0, v0[1] / n0];
        // Orthogonal complement spans the other eigenspace.
        let v1 = [-v0[1].conj(), v0[0].conj()];
        Mat2::new(v0[0], v1[0], v0[1], v1[1])
    } else if a >= c {
        Mat2::identity()
    } else {
        Mat2::new(ZERO, ONE, ONE, ZERO)
    };

    let s0 = eig0.sqrt();
    let s1 = eig1.sqrt();

    // Columns of U: u_i = M v_i / s_i, completed unitarily where s_i ~ 0.
    let col = |mat: &Mat2, j: usize| -> [C64; 2] {
        if j == 0 {
            [mat.m00, mat.m10]
        } else {
            [mat.m01, mat.m11]
        }
    };
    let sing_tol = 1e-14 * scale.max(1.0);
    let u0 = if s0 > sing_tol {
        let w = m.apply(col(&v, 0));
        let n = (w[0].norm_sqr() + w[1].norm_sqr()).sqrt();
        [w[0] / n, w[1] / n]
    } else {
        [ONE, ZERO]
    };
    // Exact orthogonal complement keeps U unitary even when the two
    // singular values nearly coincide; only its phase is taken from M v1.
    let comp = [-u0[1].conj(), u0[0].conj()];
    let u1 = if s1 > sing_tol {
        let w = m.apply(col(&v, 1));
        let overlap = comp[0].conj() * w[0] + comp[1].conj() * w[1];
        let phase = overlap / overlap.norm();
        [comp[0] * phase, comp[1] * phase]
    } else {
        comp
    };
    let u = Mat2::new(u0[0], u1[0], u0[1], u1[1]);

    // M = U Σ V†, so U1 = U†, U2 = V.
    (u.adjoint(), Mat2::diag(C64::new(s0, 0.0), C64::new(s1, 0.0)), v)
}

/// Roots of the homogeneous quadratic `det(u0·T0 + u1·T1) = 0`.
///
/// The quadratic is `A·u0² + B·u0u1 + C·u1²` with `A = det T0`,
/// `C = det T1` and `B = det(T0+T1) − det T0 − det T1`. If all three
/// coefficients vanish relative to the pencil scale, every direction is a
/// root and the two conventional representatives (1,0), (0,1) are returned.
pub fn pencil_roots(t0: &Mat2, t1: &Mat2) -> Vec<ProjectiveRoot> {
    pencil_roots_tol(t0, t1, DEFAULT_TOL)
}

pub fn pencil_roots_tol(t0: &Mat2, t1: &Mat2, tol: f64) -> Vec<ProjectiveRoot> {
    let a = t0.det();
    let c = t1.det();
    let b = t0.add(t1).det() - a - c;

    let scale = t0.frobenius_norm() + t1.frobenius_norm();
    let coeff_tol = tol * scale * scale;

    if a.norm() < coeff_tol && b.norm() < coeff_tol && c.norm() < coeff_tol {
        return vec![
            ProjectiveRoot::canonicalized(ONE, ZERO, Multiplicity::IdenticallyZero),
            ProjectiveRoot::canonicalized(ZERO, ONE, Multiplicity::IdenticallyZero),
        ];
    }

    // disc carries four powers of the pencil scale.
    let disc = b * b - 4.0 * a * c;
    let double = disc.norm() < tol * scale.powi(4);
    let mult = if double {
        Multiplicity::Double
    } else {
        Multiplicity::Simple
    };

    // Stable complex quadratic: pick the sqrt branch that does not cancel B.
    let mut sq = disc.sqrt();
    if (b.conj() * sq).re < 0.0 {
        sq = -sq;
    }
    let q = -0.5 * (b + sq);

    // Work in whichever chart keeps the leading coefficient large.
    let roots: [(C64, C64); 2] = if a.norm() < coeff_tol && c.norm() < coeff_tol {
        // both determinants vanish, B dominates: roots at u0 = 0 and u1 = 0
        [(ONE, ZERO), (ZERO, ONE)]
    } else if a.norm() >= c.norm() {
        // roots of A r² + B r + C in r = u0/u1: r1 = q/A, r2 = C/q
        let r1 = (q / a, ONE);
        let r2 = if q.norm() > coeff_tol {
            (c / q, ONE)
        } else {
            // B ≈ 0 and C ≈ 0: double root at u0 = 0
            (ZERO, ONE)
        };
        [r1, r2]
    } else {
        // roots of C s² + B s + A in s = u1/u0: s1 = q/C, s2 = A/q
        let s1 = (ONE, q / c);
        let s2 = if q.norm() > coeff_tol {
            (ONE, a / q)
        } else {
            (ONE, ZERO)
        };
        [s1, s2]
    };

    if double {
        vec![ProjectiveRoot::canonicalized(roots[0].0, roots[0].1, mult)]
    } else {
        vec![
            ProjectiveRoot::canonicalized(roots[0].0, roots[0].1, mult),
            ProjectiveRoot::canonicalized(roots[1].0, roots[1].1, mult),
        ]
    }
}

/// Extends a normalized row `(u0, u1)` to the special unitary
/// `[[u0, u1], [−u1*, u0*]]`.
pub fn complete_unitary(row: (C64, C64)) -> Result<Mat2, Error> {
    let norm_sq = row.0.norm_sqr() + row.1.norm_sqr();
    let deviation = (norm_sq - 1.0).abs();
    if deviation > 1e-12 {
        return Err(Error::RowNotNormalized { deviation });
    }
    Ok(Mat2::new(row.0, row.1, -row.1.conj(), row.0.conj()))
}
