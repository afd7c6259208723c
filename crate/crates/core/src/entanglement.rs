//! Entanglement entropies that drive the suppression model.
//!
//! Two regimes matter for hydrogen. Spin entanglement between proton and
//! electron is a two-qubit problem: the reduced single-spin density operator
//! is 2×2 and its von Neumann entropy has a closed form, maximal at ln 2 for
//! a Bell state. The intrinsic center-of-mass entanglement of a bound or
//! trapped pair is a Gaussian problem: for two harmonically trapped charges
//! with the Coulomb interaction linearized about their equilibrium
//! separation, the ground state is Gaussian and the entropy of either
//! particle follows from the symplectic eigenvalue of its reduced covariance
//! block.
//!
//! Entropies are in nats throughout; a Bell state has s = ln 2, not 1 bit.

use num_complex::Complex64;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

/// Which reduction produced an entropy value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntropyMethod {
    Qubit,
    Gaussian,
}

impl EntropyMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            EntropyMethod::Qubit => "qubit",
            EntropyMethod::Gaussian => "gaussian",
        }
    }
}

/// An entanglement entropy in nats, tagged with its method.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyResult {
    pub entropy: f64,
    pub method: EntropyMethod,
}

/// Tolerance on the squared-amplitude normalization of a two-qubit state.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// A normalized pure state of two spin-1/2 particles, amplitudes ordered
/// (↑↑, ↑↓, ↓↑, ↓↓) with the first arrow the first particle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState {
    amplitudes: [Complex64; 4],
}

impl TwoQubitState {
    pub fn new(amplitudes: [Complex64; 4]) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if !norm_sq.is_finite() || libm::fabs(norm_sq - 1.0) > NORMALIZATION_TOL {
            return Err(Error::Validation(alloc::format!(
                "two-qubit state must be normalized; squared amplitudes sum to {norm_sq}"
            )));
        }
        Ok(Self { amplitudes })
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amplitudes
    }

    /// The spin singlet (|↑↓⟩ − |↓↑⟩)/√2, total spin j = 0.
    pub fn singlet() -> Self {
        let r = core::f64::consts::FRAC_1_SQRT_2;
        Self {
            amplitudes: [
                Complex64::new(0.0, 0.0),
                Complex64::new(r, 0.0),
                Complex64::new(-r, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        }
    }

    /// The entangled triplet (|↑↓⟩ + |↓↑⟩)/√2, the m = 0 member of j = 1.
    pub fn triplet_zero() -> Self {
        let r = core::f64::consts::FRAC_1_SQRT_2;
        Self {
            amplitudes: [
                Complex64::new(0.0, 0.0),
                Complex64::new(r, 0.0),
                Complex64::new(r, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        }
    }

    /// The product state |↑↑⟩, the m = +1 triplet member.
    pub fn up_up() -> Self {
        Self {
            amplitudes: [
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        }
    }

    /// The product state |↓↓⟩, the m = −1 triplet member.
    pub fn down_down() -> Self {
        Self {
            amplitudes: [
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
            ],
        }
    }

    /// Applies a single-particle operator `u` (2×2, row-major) to the first
    /// particle. The caller is responsible for `u` being unitary if the
    /// result is to stay normalized.
    pub fn apply_to_first(&self, u: &[[Complex64; 2]; 2]) -> Result<Self> {
        let a = &self.amplitudes;
        // Index = 2·(first bit) + (second bit).
        let mut out = [Complex64::new(0.0, 0.0); 4];
        for second in 0..2 {
            for i in 0..2 {
                out[2 * i + second] =
                    u[i][0] * a[second] + u[i][1] * a[2 + second];
            }
        }
        Self::new(out)
    }

    /// Applies a single-particle operator to the second particle.
    pub fn apply_to_second(&self, u: &[[Complex64; 2]; 2]) -> Result<Self> {
        let a = &self.amplitudes;
        let mut out = [Complex64::new(0.0, 0.0); 4];
        for first in 0..2 {
            for k in 0..2 {
                out[2 * first + k] =
                    u[k][0] * a[2 * first] + u[k][1] * a[2 * first + 1];
            }
        }
        Self::new(out)
    }
}

/// `−λ ln λ`, with the degenerate `0 · ln 0 := 0` convention.
fn entropy_term(lambda: f64) -> f64 {
    if lambda <= 0.0 {
        0.0
    } else {
        -lambda * libm::log(lambda)
    }
}

/// Von Neumann entropy of the reduced single-spin state, in nats.
///
/// The reduced density operator of the first spin is 2×2 with unit trace, so
/// its eigenvalues are `1/2 ± sqrt(1/4 − det ρ)`; the entropy of the second
/// spin is identical for a pure global state.
pub fn two_qubit_entropy(state: &TwoQubitState) -> EntropyResult {
    let a = state.amplitudes();
    let rho00 = a[0].norm_sqr() + a[1].norm_sqr();
    let rho11 = a[2].norm_sqr() + a[3].norm_sqr();
    let rho01 = a[0] * a[2].conj() + a[1] * a[3].conj();
    let det = rho00 * rho11 - rho01.norm_sqr();
    let disc = libm::sqrt(libm::fmax(0.25 - det, 0.0));
    let lambda_hi = 0.5 + disc;
    let lambda_lo = 0.5 - disc;
    EntropyResult {
        entropy: entropy_term(lambda_hi) + entropy_term(lambda_lo),
        method: EntropyMethod::Qubit,
    }
}

/// Two charged particles in 1D harmonic traps a fixed distance apart, with
/// the Coulomb interaction expanded to second order about the equilibrium
/// separation.
///
/// The second-order expansion contributes `½k(x₂ − x₁)²` with
/// `k = q₁q₂ / (2π ε₀ d³)`: a cross term `−k x₁x₂` plus matching diagonal
/// terms, so an interaction depending only on the separation leaves the
/// symmetric center-of-mass mode untouched. Attractive pairs (k < 0) soften
/// the relative mode and go unstable once `|k|` exceeds the harmonic mean of
/// the trap stiffnesses; the constructor rejects such configurations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapPairConfig {
    mass_1: f64,
    mass_2: f64,
    trap_freq_1: f64,
    trap_freq_2: f64,
    separation: f64,
    charge_1: f64,
    charge_2: f64,
    /// Linearized Coulomb spring constant k = q₁q₂/(2π ε₀ d³) [N/m].
    coupling: f64,
}

/// Normal modes of the coupled pair: squared frequencies and the rotation
/// taking mass-weighted particle coordinates to mode coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalModes {
    /// Squared angular frequencies, higher first [rad²/s²].
    pub omega_sq: [f64; 2],
    /// First-particle components of the two mode vectors.
    pub first_components: [f64; 2],
}

impl TrapPairConfig {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        mass_1: f64,
        mass_2: f64,
        trap_freq_1: f64,
        trap_freq_2: f64,
        separation: f64,
        charge_1: f64,
        charge_2: f64,
        constants: &PhysicalConstants,
    ) -> Result<Self> {
        for (name, v) in [
            ("mass_1", mass_1),
            ("mass_2", mass_2),
            ("trap_freq_1", trap_freq_1),
            ("trap_freq_2", trap_freq_2),
            ("separation", separation),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Validation(alloc::format!(
                    "{name} must be strictly positive, got {v}"
                )));
            }
        }
        if !charge_1.is_finite() || !charge_2.is_finite() {
            return Err(Error::Validation("charges must be finite".into()));
        }
        let coupling = charge_1 * charge_2
            / (2.0 * core::f64::consts::PI
                * constants.vacuum_permittivity
                * separation
                * separation
                * separation);
        let config = Self {
            mass_1,
            mass_2,
            trap_freq_1,
            trap_freq_2,
            separation,
            charge_1,
            charge_2,
            coupling,
        };
        let modes = config.normal_modes();
        if !(modes.omega_sq[0] > 0.0 && modes.omega_sq[1] > 0.0) {
            return Err(Error::Domain(alloc::format!(
                "unstable trap configuration: squared normal-mode frequencies {:?}",
                modes.omega_sq
            )));
        }
        Ok(config)
    }

    pub fn mass_1(&self) -> f64 {
        self.mass_1
    }

    pub fn mass_2(&self) -> f64 {
        self.mass_2
    }

    pub fn trap_freq_1(&self) -> f64 {
        self.trap_freq_1
    }

    pub fn trap_freq_2(&self) -> f64 {
        self.trap_freq_2
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }

    pub fn charge_1(&self) -> f64 {
        self.charge_1
    }

    pub fn charge_2(&self) -> f64 {
        self.charge_2
    }

    /// The linearized spring constant k = q₁q₂/(2π ε₀ d³) [N/m].
    pub fn coupling(&self) -> f64 {
        self.coupling
    }

    /// An electron-mass pair with opposite elementary charges in 1 µm traps,
    /// tuned to 99.75 % of the instability threshold. Its ground state keeps
    /// an entanglement entropy of about 1.13 nats even though the particles
    /// sit ~1e4 Bohr radii apart.
    pub fn near_critical_demo(constants: &PhysicalConstants) -> Self {
        let m = constants.electron_mass;
        let q = constants.elementary_charge;
        let d = 1e-6;
        let k = q * q
            / (2.0 * core::f64::consts::PI * constants.vacuum_permittivity * d * d * d);
        let omega = libm::sqrt(2.0 * k / (0.9975 * m));
        Self::new(m, m, omega, omega, d, -q, q, constants)
            .expect("demo configuration is stable by construction")
    }

    /// Diagonalizes the mass-weighted potential matrix.
    pub fn normal_modes(&self) -> NormalModes {
        let k = self.coupling;
        let d11 = self.trap_freq_1 * self.trap_freq_1 + k / self.mass_1;
        let d22 = self.trap_freq_2 * self.trap_freq_2 + k / self.mass_2;
        let d12 = -k / libm::sqrt(self.mass_1 * self.mass_2);
        if d12 == 0.0 {
            return NormalModes {
                omega_sq: [d11, d22],
                first_components: [1.0, 0.0],
            };
        }
        let theta = 0.5 * libm::atan2(2.0 * d12, d11 - d22);
        let (s, c) = (libm::sin(theta), libm::cos(theta));
        // Mode vectors (c, s) and (−s, c).
        let w1 = d11 * c * c + 2.0 * d12 * c * s + d22 * s * s;
        let w2 = d11 * s * s - 2.0 * d12 * c * s + d22 * c * c;
        NormalModes {
            omega_sq: [w1, w2],
            first_components: [c, -s],
        }
    }
}

/// Gaussian entropy `(ν + ½) ln(ν + ½) − (ν − ½) ln(ν − ½)` of a single-mode
/// state with symplectic eigenvalue `ν ≥ ½`.
pub fn gaussian_mode_entropy(nu: f64) -> f64 {
    let hi = nu + 0.5;
    let lo = nu - 0.5;
    if lo <= 0.0 {
        return 0.0;
    }
    hi * libm::log(hi) - lo * libm::log(lo)
}

/// Ground-state entanglement entropy of one particle of the coupled trapped
/// pair, in nats.
///
/// Works in mass-weighted coordinates: the ground-state covariance of
/// particle 1 is diagonal with `⟨y²⟩ = (ħ/2) Σₖ cₖ²/Ωₖ` and
/// `⟨q²⟩ = (ħ/2) Σₖ cₖ²Ωₖ` over modes k with first components cₖ, so the
/// symplectic eigenvalue `ν = sqrt(⟨y²⟩⟨q²⟩)/ħ` is ħ-free in code. Decoupled
/// traps give ν = ½ exactly and zero entropy.
pub fn oscillator_entropy(config: &TrapPairConfig) -> EntropyResult {
    let modes = config.normal_modes();
    let omega = [
        libm::sqrt(modes.omega_sq[0]),
        libm::sqrt(modes.omega_sq[1]),
    ];
    let c_sq = [
        modes.first_components[0] * modes.first_components[0],
        modes.first_components[1] * modes.first_components[1],
    ];
    let pos = c_sq[0] / omega[0] + c_sq[1] / omega[1];
    let mom = c_sq[0] * omega[0] + c_sq[1] * omega[1];
    let nu = 0.5 * libm::sqrt(pos * mom);
    EntropyResult {
        entropy: gaussian_mode_entropy(nu),
        method: EntropyMethod::Gaussian,
    }
}
