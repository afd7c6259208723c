//! The suppression model itself: how much electric flux an entangled point
//! charge loses, and what that does to the effective charges.
//!
//! A Gauss surface around an entangled point particle sees its field reduced
//! by the divisor `1 + x`, with `x = s / (π α²)`; the missing flux goes into
//! the wormhole. The combination `x` is the single internal parameter of the
//! whole model: every downstream formula takes `x`, never `s` and `α`
//! separately, which centralizes the stable arithmetic in one place.
//!
//! Only point particles are affected. The electron is treated as a point
//! particle and the proton as composite (much larger than the Planck
//! length), so under a non-traversable wormhole only the electron charge is
//! suppressed. If the wormhole is traversable the flux re-emerges at the far
//! mouth near the proton, which then carries the same suppressed effective
//! charge, and the atom stays exactly neutral.

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::shift::{pow_shift, StableShift};

/// Whether flux entering the wormhole is lost to the exterior or re-emerges
/// at the far mouth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    Nontraversable,
    Traversable,
}

impl Topology {
    pub fn as_str(self) -> &'static str {
        match self {
            Topology::Nontraversable => "nontraversable",
            Topology::Traversable => "traversable",
        }
    }
}

impl core::fmt::Display for Topology {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nontraversable" => Ok(Topology::Nontraversable),
            "traversable" => Ok(Topology::Traversable),
            other => Err(Error::Validation(alloc::format!(
                "unknown topology {other:?} (expected nontraversable or traversable)"
            ))),
        }
    }
}

/// A full parameter point of the model: entanglement entropy `s` [nats],
/// strength parameter `α > 0`, and the wormhole topology.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuppressionConfig {
    entropy: f64,
    alpha: f64,
    topology: Topology,
}

impl SuppressionConfig {
    pub fn new(entropy: f64, alpha: f64, topology: Topology) -> Result<Self> {
        if !entropy.is_finite() || entropy < 0.0 {
            return Err(Error::Validation(alloc::format!(
                "entanglement entropy must be finite and >= 0, got {entropy}"
            )));
        }
        if alpha.is_nan() || alpha <= 0.0 {
            return Err(Error::Validation(alloc::format!(
                "suppression parameter alpha must be > 0, got {alpha}"
            )));
        }
        Ok(Self {
            entropy,
            alpha,
            topology,
        })
    }

    pub fn entropy(&self) -> f64 {
        self.entropy
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    /// The suppression factor `x = s / (π α²)`; the field and charge divisor
    /// is `1 + x`. Approaches zero as `α → ∞` (no effect), including
    /// gracefully through `α² = inf`.
    pub fn suppression_factor(&self) -> f64 {
        self.entropy / (core::f64::consts::PI * self.alpha * self.alpha)
    }
}

/// Effective charges of the two hydrogen constituents as shifts on ∓e.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveCharges {
    /// Electron charge, base −e [C]. Suppressed under both topologies.
    pub electron: StableShift,
    /// Proton charge, base +e [C]. Unmodified under a non-traversable
    /// wormhole; suppressed like the electron under a traversable one.
    pub proton: StableShift,
}

/// Effective charges e′ = e/(1+x) (and e″ for the traversable proton).
pub fn effective_charges(
    config: &SuppressionConfig,
    constants: &PhysicalConstants,
) -> EffectiveCharges {
    let e = constants.elementary_charge;
    let x = config.suppression_factor();
    let delta = pow_shift(x, -1.0).expect("suppression factor is nonnegative");
    EffectiveCharges {
        electron: StableShift::new(-e, delta),
        proton: match config.topology() {
            Topology::Nontraversable => StableShift::unshifted(e),
            Topology::Traversable => StableShift::new(e, delta),
        },
    }
}

/// Electric flux bookkeeping for a Gauss surface around an entangled point
/// charge, in V·m.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxBalance {
    /// Flux through the exterior surface: `q / (ε₀ (1 + x))`.
    pub surface: f64,
    /// Flux into the wormhole: `q · x / (ε₀ (1 + x))`.
    pub wormhole: f64,
}

impl FluxBalance {
    /// Total flux; equals `q / ε₀` up to a couple of ulp.
    pub fn total(&self) -> f64 {
        self.surface + self.wormhole
    }
}

/// Splits the Gauss-law flux of a point charge into the surface and wormhole
/// contributions. Their sum reconstructs `q / ε₀`.
pub fn flux_balance(
    charge_coulomb: f64,
    config: &SuppressionConfig,
    constants: &PhysicalConstants,
) -> FluxBalance {
    let x = config.suppression_factor();
    let total = charge_coulomb / constants.vacuum_permittivity;
    let divisor = 1.0 + x;
    FluxBalance {
        surface: total / divisor,
        wormhole: total * (x / divisor),
    }
}
