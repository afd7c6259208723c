//! Observational lower bounds on the suppression parameter α.
//!
//! Two measurements constrain the model. The 21-cm wavelength is known to
//! twelve significant figures, so the relative hyperfine suppression
//! `(1 + x)^p − 1` cannot exceed ~1e-12; inverting that at a given entropy
//! yields `α ≳ 1e6`. And hydrogen is neutral to better than 1e-20 e; under a
//! non-traversable wormhole an entangled atom carries a residual charge
//! `x/(1 + x)` in units of e, so neutrality pushes the bound up to
//! `α ≳ 1e9` — three to four orders stronger. A traversable wormhole leaves
//! the atom exactly neutral and yields no neutrality bound at all.
//!
//! Bounds are reported as exact equality solutions at the stated precision:
//! reproducible numbers rather than orders of magnitude.

use crate::error::{Error, Result};
use crate::shift::{inv_pow_shift, pow_shift};
use crate::suppression::{SuppressionConfig, Topology};

/// Which measurement produced a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSource {
    Hyperfine,
    Neutrality,
}

impl BoundSource {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundSource::Hyperfine => "hyperfine",
            BoundSource::Neutrality => "neutrality",
        }
    }
}

/// A lower bound on α together with the inputs that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaBound {
    pub alpha_min: f64,
    pub source: BoundSource,
    /// The measurement precision (relative, or units of e) that was inverted.
    pub precision_used: f64,
    /// Entanglement entropy assumed, in nats.
    pub entropy_used: f64,
    pub topology: Topology,
}

impl AlphaBound {
    /// Re-evaluates the generating forward model at `alpha_min`; returns the
    /// observable it predicts, which must reproduce `precision_used`.
    pub fn forward_precision(&self) -> f64 {
        let config = SuppressionConfig::new(self.entropy_used, self.alpha_min, self.topology)
            .expect("bound carries validated parameters");
        let x = config.suppression_factor();
        match self.source {
            BoundSource::Hyperfine => {
                let p = match self.topology {
                    Topology::Nontraversable => 3.0,
                    Topology::Traversable => 6.0,
                };
                pow_shift(x, p).expect("x >= 0")
            }
            BoundSource::Neutrality => x / (1.0 + x),
        }
    }
}

/// Inverts a relative hyperfine-splitting precision δ into a lower bound on
/// α: solves `(1 + s/(πα²))^p − 1 = δ` with p = 3 (non-traversable) or 6
/// (traversable).
pub fn bound_alpha_from_hyperfine(
    precision: f64,
    entropy: f64,
    topology: Topology,
) -> Result<AlphaBound> {
    if !(precision > 0.0 && precision.is_finite()) {
        return Err(Error::Domain(alloc::format!(
            "measurement precision must be positive and finite, got {precision}"
        )));
    }
    if !(entropy > 0.0 && entropy.is_finite()) {
        return Err(Error::Domain(alloc::format!(
            "entropy must be positive and finite for a bound, got {entropy}"
        )));
    }
    let p = match topology {
        Topology::Nontraversable => 3.0,
        Topology::Traversable => 6.0,
    };
    let x = inv_pow_shift(precision, p)?;
    let alpha_min = libm::sqrt(entropy / (core::f64::consts::PI * x));
    Ok(AlphaBound {
        alpha_min,
        source: BoundSource::Hyperfine,
        precision_used: precision,
        entropy_used: entropy,
        topology,
    })
}

/// Residual effective charge of an entangled hydrogen atom, in units of e.
///
/// Non-traversable: the proton flux is intact while the electron flux is
/// reduced, leaving `x/(1 + x) > 0`. Traversable: the lost flux re-emerges
/// at the proton and the total is exactly zero.
pub fn residual_charge(config: &SuppressionConfig) -> f64 {
    match config.topology() {
        Topology::Traversable => 0.0,
        Topology::Nontraversable => {
            let x = config.suppression_factor();
            x / (1.0 + x)
        }
    }
}

/// Outcome of a neutrality inversion: traversable wormholes keep the atom
/// neutral for every α, so they yield no bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NeutralityBound {
    Bound(AlphaBound),
    /// The topology predicts exact neutrality; the measurement says nothing.
    Unconstrained,
}

/// Inverts a neutrality limit (units of e) into a lower bound on α by
/// solving `x/(1 + x) = limit`.
pub fn bound_alpha_from_neutrality(
    charge_limit: f64,
    entropy: f64,
    topology: Topology,
) -> Result<NeutralityBound> {
    if !(charge_limit > 0.0 && charge_limit < 1.0) {
        return Err(Error::Domain(alloc::format!(
            "charge limit must lie in (0, 1) e, got {charge_limit}"
        )));
    }
    if !(entropy > 0.0 && entropy.is_finite()) {
        return Err(Error::Domain(alloc::format!(
            "entropy must be positive and finite for a bound, got {entropy}"
        )));
    }
    if topology == Topology::Traversable {
        return Ok(NeutralityBound::Unconstrained);
    }
    let x = charge_limit / (1.0 - charge_limit);
    let alpha_min = libm::sqrt(entropy / (core::f64::consts::PI * x));
    Ok(NeutralityBound::Bound(AlphaBound {
        alpha_min,
        source: BoundSource::Neutrality,
        precision_used: charge_limit,
        entropy_used: entropy,
        topology,
    }))
}
