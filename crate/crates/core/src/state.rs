//! Three-qubit pure states: construction, pencil slicing, local-unitary
//! action, partial traces, party permutations and Haar-random sampling.
//!
//! Amplitudes are stored at index `4i + 2j + k` for the basis ket |ijk⟩, with
//! party A carrying the most significant bit, so the two pencil slices are
//! the contiguous halves of the vector.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::Error;
use crate::linalg::{C64, Mat2};

/// One of the three parties holding a qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Party {
    A,
    B,
    C,
}

impl Party {
    pub const ALL: [Party; 3] = [Party::A, Party::B, Party::C];

    /// Slot of this party in the |ijk⟩ index (A = 0, B = 1, C = 2).
    pub fn slot(&self) -> usize {
        match self {
            Party::A => 0,
            Party::B => 1,
            Party::C => 2,
        }
    }
}

impl std::fmt::Display for Party {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Party::A => write!(f, "A"),
            Party::B => write!(f, "B"),
            Party::C => write!(f, "C"),
        }
    }
}

/// Permutation of the three party slots; `map[p]` is the slot to which the
/// party currently in slot `p` moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Permutation {
    pub map: [usize; 3],
}

impl Permutation {
    pub const IDENTITY: Permutation = Permutation { map: [0, 1, 2] };

    pub fn new(map: [usize; 3]) -> Self {
        let mut seen = [false; 3];
        for &m in &map {
            assert!(m < 3 && !seen[m], "not a permutation of {{0,1,2}}");
            seen[m] = true;
        }
        Permutation { map }
    }

    /// Swap of two parties, the third stays.
    pub fn swap(p: Party, q: Party) -> Self {
        let mut map = [0, 1, 2];
        map.swap(p.slot(), q.slot());
        Permutation { map }
    }

    /// The permutation that moves `p` to slot 0 by swapping with party A.
    pub fn bring_to_front(p: Party) -> Self {
        Permutation::swap(Party::A, p)
    }

    pub fn inverse(&self) -> Self {
        let mut map = [0; 3];
        for (from, &to) in self.map.iter().enumerate() {
            map[to] = from;
        }
        Permutation { map }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        let mut map = [0; 3];
        for (from, &mid) in self.map.iter().enumerate() {
            map[from] = other.map[mid];
        }
        Permutation { map }
    }
}

/// A pure three-qubit state with unit 2-norm.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreeQubitState {
    amps: [C64; 8],
}

/// The pair of 2×2 slices (T₀, T₁) of the amplitude tensor along party A,
/// `(Tᵢ)ⱼₖ = t_ijk`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientPencil {
    pub t0: Mat2,
    pub t1: Mat2,
}

/// Single-party reduced density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2(pub Mat2);

impl DensityMatrix2 {
    pub fn purity(&self) -> f64 {
        self.0.mul(&self.0).trace().re
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.0.sub(&self.0.adjoint()).frobenius_norm() < tol
    }

    /// Eigenvalues, descending. Real for Hermitian input.
    pub fn eigenvalues(&self) -> [f64; 2] {
        let tr = self.0.trace().re;
        let det = self.0.det().re;
        let root = (0.25 * tr * tr - det).max(0.0).sqrt();
        [0.5 * tr + root, 0.5 * tr - root]
    }

    /// Normalized eigenvector of the larger eigenvalue.
    pub fn principal_eigenvector(&self) -> [C64; 2] {
        let [e0, _] = self.eigenvalues();
        let a = self.0.m00;
        let b = self.0.m01;
        let v = if b.norm() > 1e-14 {
            [b, C64::new(e0, 0.0) - a]
        } else if a.re >= self.0.m11.re {
            [C64::new(1.0, 0.0), C64::new(0.0, 0.0)]
        } else {
            [C64::new(0.0, 0.0), C64::new(1.0, 0.0)]
        };
        let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        [v[0] / n, v[1] / n]
    }
}

/// Two-party (AB) reduced density matrix, row-major 4×4.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix4(pub [[C64; 4]; 4]);

impl DensityMatrix4 {
    pub fn trace(&self) -> f64 {
        (0..4).map(|i| self.0[i][i].re).sum()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        let mut dev: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                dev += (self.0[i][j] - self.0[j][i].conj()).norm_sqr();
            }
        }
        dev.sqrt() < tol
    }

    /// Partial trace over party B, leaving party A.
    pub fn trace_out_b(&self) -> DensityMatrix2 {
        // AB index = 2a + b
        let e = |i: usize, j: usize| self.0[i][j];
        DensityMatrix2(Mat2::new(
            e(0, 0) + e(1, 1),
            e(0, 2) + e(1, 3),
            e(2, 0) + e(3, 1),
            e(2, 2) + e(3, 3),
        ))
    }

    /// Partial trace over party A, leaving party B.
    pub fn trace_out_a(&self) -> DensityMatrix2 {
        let e = |i: usize, j: usize| self.0[i][j];
        DensityMatrix2(Mat2::new(
            e(0, 0) + e(2, 2),
            e(0, 1) + e(2, 3),
            e(1, 0) + e(3, 2),
            e(1, 1) + e(3, 3),
        ))
    }
}

impl ThreeQubitState {
    /// Builds a state from 8 amplitudes indexed `4i + 2j + k`.
    ///
    /// With `normalize` unset the vector must already be unit-norm to within
    /// 1e-6 (loose enough for hand-typed input); with it set, any nonzero
    /// vector is accepted and rescaled.
    pub fn from_amplitudes(amps: [C64; 8], normalize: bool) -> Result<Self, Error> {
        let norm = norm8(&amps);
        if norm < 1e-14 {
            return Err(Error::DegenerateInput);
        }
        let deviation = (norm - 1.0).abs();
        if !normalize && deviation > 1e-6 {
            return Err(Error::NotNormalized { deviation });
        }
        let mut amps = amps;
        for a in &mut amps {
            *a /= norm;
        }
        Ok(ThreeQubitState { amps })
    }

    /// Basis ket |ijk⟩.
    pub fn basis(i: usize, j: usize, k: usize) -> Self {
        let mut amps = [C64::new(0.0, 0.0); 8];
        amps[4 * i + 2 * j + k] = C64::new(1.0, 0.0);
        ThreeQubitState { amps }
    }

    /// (|000⟩ + |111⟩)/√2.
    pub fn ghz() -> Self {
        let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let mut amps = [C64::new(0.0, 0.0); 8];
        amps[0] = h;
        amps[7] = h;
        ThreeQubitState { amps }
    }

    /// (|001⟩ + |010⟩ + |100⟩)/√3.
    pub fn w() -> Self {
        let s = C64::new(1.0 / 3.0f64.sqrt(), 0.0);
        let mut amps = [C64::new(0.0, 0.0); 8];
        amps[1] = s;
        amps[2] = s;
        amps[4] = s;
        ThreeQubitState { amps }
    }

    pub fn amplitudes(&self) -> &[C64; 8] {
        &self.amps
    }

    pub fn amplitude(&self, i: usize, j: usize, k: usize) -> C64 {
        self.amps[4 * i + 2 * j + k]
    }

    pub fn norm(&self) -> f64 {
        norm8(&self.amps)
    }

    /// The coefficient pencil (T₀, T₁) sliced along party A.
    pub fn pencil(&self) -> CoefficientPencil {
        let a = &self.amps;
        CoefficientPencil {
            t0: Mat2::new(a[0], a[1], a[2], a[3]),
            t1: Mat2::new(a[4], a[5], a[6], a[7]),
        }
    }

    /// Inverse of [`ThreeQubitState::pencil`]; the slices must carry unit
    /// total norm.
    pub fn from_pencil(p: &CoefficientPencil) -> Result<Self, Error> {
        let [a0, a1, a2, a3] = p.t0.entries();
        let [a4, a5, a6, a7] = p.t1.entries();
        ThreeQubitState::from_amplitudes([a0, a1, a2, a3, a4, a5, a6, a7], false)
    }

    /// `e^{i·phase} (A ⊗ B ⊗ C)|Ψ⟩` for single-qubit unitaries A, B, C.
    pub fn apply_local(
        &self,
        a: &Mat2,
        b: &Mat2,
        c: &Mat2,
        phase: f64,
    ) -> Result<ThreeQubitState, Error> {
        for u in [a, b, c] {
            let dev = u.mul(&u.adjoint()).sub(&Mat2::identity()).frobenius_norm();
            if dev > 1e-10 {
                return Err(Error::NotUnitary { deviation: dev });
            }
        }
        Ok(self.apply_local_unchecked(a, b, c, phase))
    }

    /// Same contraction without the unitarity check; norm is not preserved
    /// for non-unitary factors.
    pub fn apply_local_unchecked(
        &self,
        a: &Mat2,
        b: &Mat2,
        c: &Mat2,
        phase: f64,
    ) -> ThreeQubitState {
        let ph = C64::from_polar(1.0, phase);
        let ae = [[a.m00, a.m01], [a.m10, a.m11]];
        let be = [[b.m00, b.m01], [b.m10, b.m11]];
        let ce = [[c.m00, c.m01], [c.m10, c.m11]];
        let mut out = [C64::new(0.0, 0.0); 8];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let mut acc = C64::new(0.0, 0.0);
                    for (ip, jp, kp) in
                        (0..2).flat_map(|x| (0..2).flat_map(move |y| (0..2).map(move |z| (x, y, z))))
                    {
                        acc += ae[i][ip] * be[j][jp] * ce[k][kp] * self.amps[4 * ip + 2 * jp + kp];
                    }
                    out[4 * i + 2 * j + k] = ph * acc;
                }
            }
        }
        ThreeQubitState { amps: out }
    }

    /// Reduced density matrix of a single party.
    pub fn reduced_density(&self, party: Party) -> DensityMatrix2 {
        let mut rho = Mat2::zero();
        let slot = party.slot();
        for idx in 0..8 {
            for jdx in 0..8 {
                let (bi, bj) = (bits(idx), bits(jdx));
                // off-party indices must match
                let mut same = true;
                for s in 0..3 {
                    if s != slot && bi[s] != bj[s] {
                        same = false;
                    }
                }
                if !same {
                    continue;
                }
                let v = self.amps[idx] * self.amps[jdx].conj();
                match (bi[slot], bj[slot]) {
                    (0, 0) => rho.m00 += v,
                    (0, 1) => rho.m01 += v,
                    (1, 0) => rho.m10 += v,
                    (1, 1) => rho.m11 += v,
                    _ => unreachable!(),
                }
            }
        }
        DensityMatrix2(rho)
    }

    /// Reduced density matrix of the AB pair, Tr_C |Ψ⟩⟨Ψ|.
    pub fn reduced_density_ab(&self) -> DensityMatrix4 {
        let mut rho = [[C64::new(0.0, 0.0); 4]; 4];
        for ab in 0..4 {
            for ab2 in 0..4 {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..2 {
                    acc += self.amps[2 * ab + k] * self.amps[2 * ab2 + k].conj();
                }
                rho[ab][ab2] = acc;
            }
        }
        DensityMatrix4(rho)
    }

    /// Inner product ⟨self|other⟩.
    pub fn overlap(&self, other: &ThreeQubitState) -> C64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// |⟨self|other⟩|².
    pub fn fidelity(&self, other: &ThreeQubitState) -> f64 {
        self.overlap(other).norm_sqr()
    }
}

fn bits(idx: usize) -> [usize; 3] {
    [(idx >> 2) & 1, (idx >> 1) & 1, idx & 1]
}

fn norm8(amps: &[C64; 8]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// Haar-uniform pure state: 8 independent standard complex Gaussian draws,
/// normalized. Deterministic per seed.
pub fn haar_random(seed: u64) -> ThreeQubitState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut amps = [C64::new(0.0, 0.0); 8];
    for a in &mut amps {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        *a = C64::new(re, im);
    }
    let norm = norm8(&amps);
    for a in &mut amps {
        *a /= norm;
    }
    ThreeQubitState { amps }
}

/// Reorders the parties: the party in slot p moves to slot `perm.map[p]`.
pub fn permute_parties(state: &ThreeQubitState, perm: &Permutation) -> ThreeQubitState {
    let mut out = [C64::new(0.0, 0.0); 8];
    for idx in 0..8 {
        let b = bits(idx);
        let mut nb = [0usize; 3];
        for s in 0..3 {
            nb[perm.map[s]] = b[s];
        }
        out[4 * nb[0] + 2 * nb[1] + nb[2]] = state.amplitudes()[idx];
    }
    ThreeQubitState { amps: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn random_unitary(rng: &mut ChaCha8Rng) -> Mat2 {
        // QR-free: random special unitary from a normalized random row.
        loop {
            let a = c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
            let b = c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
            let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
            if n > 1e-3 {
                return crate::linalg::complete_unitary((a / n, b / n)).unwrap();
            }
        }
    }

    #[test]
    fn from_amplitudes_accepts_ghz() {
        assert!(ThreeQubitState::from_amplitudes(*ThreeQubitState::ghz().amplitudes(), false).is_ok());
    }

    #[test]
    fn from_amplitudes_rejects_zero() {
        let z = [c(0.0, 0.0); 8];
        assert_eq!(
            ThreeQubitState::from_amplitudes(z, true),
            Err(Error::DegenerateInput)
        );
    }

    #[test]
    fn from_amplitudes_normalization_flag() {
        let mut v = [c(0.0, 0.0); 8];
        v[0] = c(1.0, 0.0);
        v[1] = c(1.0, 0.0);
        assert!(matches!(
            ThreeQubitState::from_amplitudes(v, false),
            Err(Error::NotNormalized { .. })
        ));
        let s = ThreeQubitState::from_amplitudes(v, true).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((s.amplitudes()[0] - c(h, 0.0)).norm() < 1e-15);
        assert!((s.amplitudes()[1] - c(h, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn pencil_ghz_slices() {
        let p = ThreeQubitState::ghz().pencil();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((p.t0.m00 - c(h, 0.0)).norm() < 1e-15 && p.t0.m11.norm() < 1e-15);
        assert!((p.t1.m11 - c(h, 0.0)).norm() < 1e-15 && p.t1.m00.norm() < 1e-15);
    }

    #[test]
    fn pencil_basis_101() {
        let p = ThreeQubitState::basis(1, 0, 1).pencil();
        assert!(p.t0.frobenius_norm() < 1e-15);
        assert!((p.t1.m01 - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn pencil_round_trip() {
        for seed in 0..50 {
            let s = haar_random(seed);
            let back = ThreeQubitState::from_pencil(&s.pencil()).unwrap();
            // from_amplitudes rescales by the (≈1) norm, so ulp-level drift
            for (a, b) in s.amplitudes().iter().zip(back.amplitudes()) {
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn apply_local_identity_and_flip() {
        let s = ThreeQubitState::basis(0, 0, 0);
        let id = Mat2::identity();
        let out = s.apply_local(&id, &id, &id, 0.0).unwrap();
        assert_eq!(&s, &out);

        let x = Mat2::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0));
        let out = s.apply_local(&x, &id, &id, 0.0).unwrap();
        assert!(out.fidelity(&ThreeQubitState::basis(1, 0, 0)) > 1.0 - 1e-12);
    }

    #[test]
    fn apply_local_rejects_non_unitary() {
        let s = ThreeQubitState::ghz();
        let bad = Mat2::diag(c(2.0, 0.0), c(1.0, 0.0));
        assert!(matches!(
            s.apply_local(&bad, &Mat2::identity(), &Mat2::identity(), 0.0),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn apply_local_preserves_norm_and_composes() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for seed in 0..200 {
            let s = haar_random(seed);
            let (a1, b1, c1) = (
                random_unitary(&mut rng),
                random_unitary(&mut rng),
                random_unitary(&mut rng),
            );
            let (a2, b2, c2) = (
                random_unitary(&mut rng),
                random_unitary(&mut rng),
                random_unitary(&mut rng),
            );
            let step = s
                .apply_local(&a1, &b1, &c1, 0.3)
                .unwrap()
                .apply_local(&a2, &b2, &c2, 0.5)
                .unwrap();
            assert!((step.norm() - 1.0).abs() < 1e-10);
            let combined = s
                .apply_local(&a2.mul(&a1), &b2.mul(&b1), &c2.mul(&c1), 0.8)
                .unwrap();
            let mut dev: f64 = 0.0;
            for i in 0..8 {
                dev += (step.amplitudes()[i] - combined.amplitudes()[i]).norm_sqr();
            }
            assert!(dev.sqrt() < 1e-10);
        }
    }

    #[test]
    fn reduced_density_named_states() {
        let rho = ThreeQubitState::ghz().reduced_density(Party::A);
        assert!((rho.0.m00.re - 0.5).abs() < 1e-14 && (rho.0.m11.re - 0.5).abs() < 1e-14);
        assert!(rho.0.m01.norm() < 1e-14);

        let rho = ThreeQubitState::basis(0, 0, 0).reduced_density(Party::B);
        assert!((rho.0.m00.re - 1.0).abs() < 1e-14 && rho.0.m11.norm() < 1e-14);

        // W, party A: direct 8-amplitude contraction gives diag(2/3, 1/3)
        let rho = ThreeQubitState::w().reduced_density(Party::A);
        assert!((rho.0.m00.re - 2.0 / 3.0).abs() < 1e-14);
        assert!((rho.0.m11.re - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn partial_trace_consistency() {
        for seed in 0..100 {
            let s = haar_random(seed);
            let rho_ab = s.reduced_density_ab();
            assert!(rho_ab.is_hermitian(1e-12));
            assert!((rho_ab.trace() - 1.0).abs() < 1e-10);
            let via_ab = rho_ab.trace_out_b();
            let direct = s.reduced_density(Party::A);
            assert!(via_ab.0.sub(&direct.0).frobenius_norm() < 1e-12);
            let via_ab = rho_ab.trace_out_a();
            let direct = s.reduced_density(Party::B);
            assert!(via_ab.0.sub(&direct.0).frobenius_norm() < 1e-12);
        }
    }

    #[test]
    fn purity_bounds() {
        for seed in 0..200 {
            let s = haar_random(seed);
            for p in Party::ALL {
                let purity = s.reduced_density(p).purity();
                assert!((0.5..=1.0 + 1e-10).contains(&purity));
            }
        }
    }

    #[test]
    fn haar_random_deterministic_and_normalized() {
        assert_eq!(haar_random(7), haar_random(7));
        for seed in 0..20 {
            assert!((haar_random(seed).norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn haar_average_purity_matches_lubkin() {
        // E[Tr ρ_A²] = (m + n)/(mn + 1) = 2/3 for m = 2, n = 4.
        let n = 10_000;
        let mean = (0..n)
            .map(|seed| haar_random(seed).reduced_density(Party::A).purity())
            .sum::<f64>()
            / n as f64;
        assert!((mean - 2.0 / 3.0).abs() < 0.01, "mean purity {mean}");
    }

    #[test]
    fn overlap_named() {
        let ghz = ThreeQubitState::ghz();
        assert!((ghz.overlap(&ghz) - c(1.0, 0.0)).norm() < 1e-14);
        let s000 = ThreeQubitState::basis(0, 0, 0);
        let s111 = ThreeQubitState::basis(1, 1, 1);
        assert!(s000.overlap(&s111).norm() < 1e-14);
    }

    #[test]
    fn permutation_laws() {
        let s = ThreeQubitState::basis(0, 1, 1);
        let swapped = permute_parties(&s, &Permutation::swap(Party::B, Party::C));
        assert_eq!(&s, &swapped);

        let s = ThreeQubitState::basis(1, 0, 0);
        let out = permute_parties(&s, &Permutation::swap(Party::A, Party::C));
        assert!(out.fidelity(&ThreeQubitState::basis(0, 0, 1)) > 1.0 - 1e-12);

        let id = Permutation::IDENTITY;
        assert_eq!(&s, &permute_parties(&s, &id));

        // involution and composition
        for seed in 0..20 {
            let s = haar_random(seed);
            let p = Permutation::swap(Party::A, Party::B);
            let back = permute_parties(&permute_parties(&s, &p), &p.inverse());
            assert_eq!(&s, &back);
            let q = Permutation::new([1, 2, 0]);
            let lhs = permute_parties(&permute_parties(&s, &p), &q);
            let rhs = permute_parties(&s, &p.then(&q));
            assert_eq!(&lhs, &rhs);
        }
    }

    proptest! {
        #[test]
        fn fidelity_bounded_by_one(s1 in 0u64..5000, s2 in 0u64..5000) {
            let a = haar_random(s1);
            let b = haar_random(s2);
            prop_assert!(a.fidelity(&b) <= 1.0 + 1e-12);
        }
    }
}
