//! Shift-stable arithmetic: the `(base, relative delta)` representation and
//! the compensated power kernels everything else is built on.
//!
//! The quantities this model predicts are relative shifts as small as 1e-30.
//! Factors of the form `(1 + x)^p − 1` must therefore never be formed by
//! literally exponentiating and subtracting; that path returns exactly zero
//! for any `|x|` below machine epsilon. [`pow_shift`] instead goes through
//! `expm1(p · log1p(x))`, which keeps full relative precision for arbitrarily
//! small `x`, and [`inv_pow_shift`] inverts it the same way.

use crate::error::{Error, Result};

/// A quantity carried as an unmodified base value plus an exact relative
/// shift, reconstructible as `base · (1 + relative_delta)`.
///
/// The reconstruction in [`value`](Self::value) is written `base + base · δ`
/// so the shift survives even when `|δ|` is far below machine epsilon of 1;
/// `base * (1.0 + δ)` would round the parenthesis to 1 and silently discard
/// the physics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableShift {
    /// The unmodified quantity.
    pub base: f64,
    /// Dimensionless shift relative to the base, exact at machine precision
    /// even when of order 1e-30.
    pub relative_delta: f64,
}

impl StableShift {
    pub const fn new(base: f64, relative_delta: f64) -> Self {
        Self {
            base,
            relative_delta,
        }
    }

    /// A quantity with no shift applied; `relative_delta` is exactly zero.
    pub const fn unshifted(base: f64) -> Self {
        Self::new(base, 0.0)
    }

    /// The modified value `base · (1 + relative_delta)`.
    pub fn value(&self) -> f64 {
        self.base + self.base * self.relative_delta
    }

    /// The absolute shift `base · relative_delta`, exact for tiny deltas.
    pub fn shift(&self) -> f64 {
        self.base * self.relative_delta
    }

    /// Rescales the base, keeping the relative delta.
    pub fn scale(&self, factor: f64) -> Self {
        Self::new(self.base * factor, self.relative_delta)
    }
}

/// Computes `(1 + x)^p − 1` with full relative precision.
///
/// Requires `x > −1`. The result keeps a relative error of a few ulp (well
/// under 1e-14) down to `|x| ~ 1e-30` and beyond, where the naive expression
/// would underflow to zero.
pub fn pow_shift(x: f64, p: f64) -> Result<f64> {
    if x.is_nan() || x <= -1.0 {
        return Err(Error::Domain(alloc::format!(
            "pow_shift requires x > -1, got {x}"
        )));
    }
    if p == 1.0 {
        // (1 + x)^1 − 1 is x exactly; skipping the kernel keeps it bit-exact.
        return Ok(x);
    }
    if x == 0.0 || p == 0.0 {
        return Ok(0.0);
    }
    Ok(libm::expm1(p * libm::log1p(x)))
}

/// Inverts [`pow_shift`]: returns `x` such that `(1 + x)^p − 1 = delta`.
///
/// Requires `1 + delta > 0` and `p ≠ 0`. Stable for `|delta|` down to 1e-30.
pub fn inv_pow_shift(delta: f64, p: f64) -> Result<f64> {
    if delta.is_nan() || delta <= -1.0 {
        return Err(Error::Domain(alloc::format!(
            "inv_pow_shift requires 1 + delta > 0, got delta = {delta}"
        )));
    }
    if p == 0.0 {
        return Err(Error::Domain(
            "inv_pow_shift requires a nonzero exponent".into(),
        ));
    }
    if p == 1.0 {
        return Ok(delta);
    }
    if delta == 0.0 {
        return Ok(0.0);
    }
    Ok(libm::expm1(libm::log1p(delta) / p))
}
