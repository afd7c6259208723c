//! Independent numerical validation of the analytic spectrum: a radial
//! Schrödinger eigensolver for hydrogen-like potentials with an arbitrary
//! charge product.
//!
//! The solver never touches the closed-form energy expressions it is
//! checking. It discretizes the radial equation
//! `u″ = [ℓ(ℓ+1)/r² − 2Z/r − 2E] u` on a uniform grid in scaled atomic units
//! (`Z` the dimensionless charge product), builds the symmetric tridiagonal
//! second-order operator with Dirichlet walls at `r = 0` and `r = rmax`, and
//! extracts eigenvalues by deterministic Sturm-sequence bisection.
//! Eigenvectors come from inverse iteration and feed a virial check and an
//! exponential fit of the ground-state tail.
//!
//! Double precision cannot resolve the physical 1e-13-level charge shifts
//! directly, so [`verify_scaling`] certifies the *functional form* of the
//! energy and length scalings at resolvable `x ∈ [1e-4, 1e-2]`; the
//! shift-stable analytic path covers the small-x regime. Systematic grid
//! error cancels almost completely in the suppressed/baseline ratios, which
//! is what makes 1e-5 ratio tolerances reachable on modest grids.

mod tridiag;

use alloc::vec::Vec;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::shift::pow_shift;
use crate::suppression::Topology;

/// Smallest accepted number of interior grid points.
pub const MIN_GRID_POINTS: usize = 1000;
/// Smallest accepted box size, in (mass-scaled) Bohr radii.
pub const MIN_RMAX_BOHR: f64 = 50.0;
/// Largest number of levels the solver will extract.
pub const MAX_LEVELS: u32 = 5;

/// Window of suppression factors the scaling check can resolve numerically.
pub const SCALING_X_MIN: f64 = 1e-4;
pub const SCALING_X_MAX: f64 = 1e-2;
/// Grid used by [`verify_scaling`].
pub const SCALING_GRID_POINTS: usize = 6000;
/// Tolerances the scaling check asserts on the measured/expected ratios.
pub const ENERGY_RATIO_TOL: f64 = 1e-5;
pub const DECAY_RATIO_TOL: f64 = 1e-4;

/// A bound-state Coulomb problem for the radial solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialProblem {
    charge_product: f64,
    angular_momentum: u32,
    grid_rmax: f64,
    grid_points: usize,
    reduced_mass_kg: Option<f64>,
}

impl RadialProblem {
    /// `charge_product` is the dimensionless ratio `e_A·e_B/e²` (must be
    /// positive for bound states); `grid_rmax` is in Bohr radii and
    /// `grid_points` counts interior nodes.
    pub fn new(
        charge_product: f64,
        angular_momentum: u32,
        grid_rmax: f64,
        grid_points: usize,
    ) -> Result<Self> {
        if !charge_product.is_finite() || charge_product <= 0.0 {
            return Err(Error::Validation(alloc::format!(
                "charge product must be positive for bound states, got {charge_product}"
            )));
        }
        if !grid_rmax.is_finite() || grid_rmax < MIN_RMAX_BOHR {
            return Err(Error::Validation(alloc::format!(
                "grid_rmax must be at least {MIN_RMAX_BOHR} Bohr radii, got {grid_rmax}"
            )));
        }
        if grid_points < MIN_GRID_POINTS {
            return Err(Error::Validation(alloc::format!(
                "grid_points must be at least {MIN_GRID_POINTS}, got {grid_points}"
            )));
        }
        Ok(Self {
            charge_product,
            angular_momentum,
            grid_rmax,
            grid_points,
            reduced_mass_kg: None,
        })
    }

    /// Solve with a reduced mass instead of the plain electron-mass
    /// convention. Energies scale by `μ/mₑ` and the grid length unit shrinks
    /// to the μ-scaled Bohr radius; off in all acceptance runs.
    pub fn with_reduced_mass(mut self, mass_kg: f64) -> Result<Self> {
        if !mass_kg.is_finite() || mass_kg <= 0.0 {
            return Err(Error::Validation(alloc::format!(
                "reduced mass must be positive, got {mass_kg}"
            )));
        }
        self.reduced_mass_kg = Some(mass_kg);
        Ok(self)
    }

    pub fn charge_product(&self) -> f64 {
        self.charge_product
    }

    pub fn angular_momentum(&self) -> u32 {
        self.angular_momentum
    }

    pub fn grid_rmax(&self) -> f64 {
        self.grid_rmax
    }

    pub fn grid_points(&self) -> usize {
        self.grid_points
    }
}

/// Solver output compared against the analytic Coulomb spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    /// Computed levels as (principal quantum number, energy [eV]).
    pub eigenvalues: Vec<(u32, f64)>,
    /// Analytic `−Ry·Z²/n²` references for the same levels [eV].
    pub analytic_reference: Vec<(u32, f64)>,
    /// Maximum relative eigenvalue error over the compared levels.
    pub max_relative_error: f64,
    /// Exponential decay length of the ground-state tail, in (mass-scaled)
    /// Bohr radii, with the known `r^(ℓ+1)` prefactor removed before the fit.
    pub fitted_decay_length: f64,
    /// Coulomb virial ratio `⟨V⟩/(2E)` per level; 1 for an exact eigenstate.
    pub virial_ratios: Vec<(u32, f64)>,
}

/// Solves for the lowest `n_levels` bound states and compares them with the
/// analytic spectrum.
pub fn solve_radial(
    problem: &RadialProblem,
    n_levels: u32,
    constants: &PhysicalConstants,
) -> Result<SpectrumReport> {
    if !(1..=MAX_LEVELS).contains(&n_levels) {
        return Err(Error::Validation(alloc::format!(
            "n_levels must be in 1..={MAX_LEVELS}, got {n_levels}"
        )));
    }
    let z = problem.charge_product;
    let l = problem.angular_momentum as f64;
    let n_pts = problem.grid_points;
    let h = problem.grid_rmax / (n_pts as f64 + 1.0);

    // Effective potential on the interior nodes, in scaled atomic units.
    let mut radii = Vec::with_capacity(n_pts);
    let mut diag = Vec::with_capacity(n_pts);
    let mut coulomb = Vec::with_capacity(n_pts);
    let kinetic_diag = 1.0 / (h * h);
    for i in 1..=n_pts {
        let r = h * i as f64;
        let vc = -z / r;
        let v = vc + l * (l + 1.0) / (2.0 * r * r);
        radii.push(r);
        coulomb.push(vc);
        diag.push(kinetic_diag + v);
    }
    let off = -0.5 / (h * h);
    let off_sq = off * off;

    // Gershgorin bracket.
    let (mut dmin, mut dmax) = (f64::INFINITY, f64::NEG_INFINITY);
    for &d in &diag {
        dmin = libm::fmin(dmin, d);
        dmax = libm::fmax(dmax, d);
    }
    let lo = dmin - 2.0 * libm::fabs(off) - 1.0;
    let hi = dmax + 2.0 * libm::fabs(off) + 1.0;

    let mass_scale = problem
        .reduced_mass_kg
        .map(|m| m / constants.electron_mass)
        .unwrap_or(1.0);
    let hartree_ev = 2.0 * constants.rydberg_energy_ev() * mass_scale;
    let rydberg_ev = constants.rydberg_energy_ev() * mass_scale;

    let mut eigenvalues = Vec::with_capacity(n_levels as usize);
    let mut references = Vec::with_capacity(n_levels as usize);
    let mut virials = Vec::with_capacity(n_levels as usize);
    let mut max_rel = 0.0f64;
    let mut ground_vec: Vec<f64> = Vec::new();

    for k in 1..=n_levels {
        let lambda = tridiag::kth_eigenvalue(&diag, off_sq, k as usize, lo, hi);
        if !lambda.is_finite() {
            return Err(Error::Solver(alloc::format!(
                "bisection failed for level {k}: got {lambda}"
            )));
        }
        if k == 1 && lambda >= 0.0 {
            return Err(Error::Solver(alloc::format!(
                "no bound ground state resolved: lowest eigenvalue {lambda} Ha >= 0 \
                 (charge product {z}, rmax {} a0, {n_pts} points)",
                problem.grid_rmax
            )));
        }
        let n_principal = problem.angular_momentum + k;
        let energy_ev = lambda * hartree_ev;
        let reference_ev = -rydberg_ev * z * z / ((n_principal as f64) * (n_principal as f64));
        max_rel = libm::fmax(
            max_rel,
            libm::fabs(energy_ev / reference_ev - 1.0),
        );

        let v = tridiag::eigenvector(&diag, off, lambda, 2);
        let mut vmean_num = 0.0;
        let mut vmean_den = 0.0;
        for i in 0..n_pts {
            let w = v[i] * v[i];
            vmean_num += coulomb[i] * w;
            vmean_den += w;
        }
        let virial_ratio = (vmean_num / vmean_den) / (2.0 * lambda);
        virials.push((n_principal, virial_ratio));
        eigenvalues.push((n_principal, energy_ev));
        references.push((n_principal, reference_ev));
        if k == 1 {
            ground_vec = v;
        }
    }

    let fitted_decay_length = fit_decay_length(
        &radii,
        &ground_vec,
        problem.angular_momentum,
        problem.grid_rmax,
    )?;

    Ok(SpectrumReport {
        eigenvalues,
        analytic_reference: references,
        max_relative_error: max_rel,
        fitted_decay_length,
        virial_ratios: virials,
    })
}

/// Least-squares slope of `ln(u) − (ℓ+1) ln(r)` over the window
/// `r ∈ [0.3, 0.5]·rmax`, far enough out for the exponential to dominate and
/// early enough that the Dirichlet wall has no pull.
fn fit_decay_length(radii: &[f64], u: &[f64], l: u32, rmax: f64) -> Result<f64> {
    let r_lo = 0.3 * rmax;
    let r_hi = 0.5 * rmax;
    let prefactor = (l + 1) as f64;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (&r, &ui) in radii.iter().zip(u) {
        if r < r_lo || r > r_hi || ui == 0.0 {
            continue;
        }
        xs.push(r);
        ys.push(libm::log(libm::fabs(ui)) - prefactor * libm::log(r));
    }
    if xs.len() < 8 {
        return Err(Error::Solver(
            "too few usable tail points for the decay fit".into(),
        ));
    }
    let n = xs.len() as f64;
    let xbar = xs.iter().sum::<f64>() / n;
    let ybar = ys.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        num += (x - xbar) * (y - ybar);
        den += (x - xbar) * (x - xbar);
    }
    let slope = num / den;
    if slope.is_nan() || slope >= 0.0 {
        return Err(Error::Solver(alloc::format!(
            "ground-state tail does not decay (fitted slope {slope})"
        )));
    }
    Ok(-1.0 / slope)
}

/// Result of the numerical scaling certification at one resolvable `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingReport {
    pub x: f64,
    pub topology: Topology,
    /// Unsuppressed run, charge product 1.
    pub baseline: SpectrumReport,
    /// Suppressed run, charge product `1/(1+x)` or `1/(1+x)²`.
    pub suppressed: SpectrumReport,
    pub energy_ratio: f64,
    pub expected_energy_ratio: f64,
    /// `|energy_ratio / expected − 1|`.
    pub energy_ratio_error: f64,
    pub decay_ratio: f64,
    pub expected_decay_ratio: f64,
    pub decay_ratio_error: f64,
    /// Both ratio errors within [`ENERGY_RATIO_TOL`] / [`DECAY_RATIO_TOL`].
    pub passed: bool,
}

/// Certifies the suppression scaling numerically: the ground energy must
/// scale as `(1+x)⁻²` (non-traversable) or `(1+x)⁻⁴` (traversable) and the
/// decay length as `(1+x)` or `(1+x)²`.
///
/// `x = 0` is accepted as the trivial identity run (both problems coincide,
/// all ratios are exactly 1); every other `x` must sit in the resolvable
/// window `[1e-4, 1e-2]`.
pub fn verify_scaling(
    x: f64,
    topology: Topology,
    constants: &PhysicalConstants,
) -> Result<ScalingReport> {
    if x != 0.0 && !(SCALING_X_MIN..=SCALING_X_MAX).contains(&x) {
        return Err(Error::Validation(alloc::format!(
            "x = {x} outside the numerically resolvable window \
             [{SCALING_X_MIN}, {SCALING_X_MAX}] (or exactly 0)"
        )));
    }
    let charge_power = match topology {
        Topology::Nontraversable => 1,
        Topology::Traversable => 2,
    };
    let one_plus = 1.0 + x;
    let z = match charge_power {
        1 => 1.0 / one_plus,
        _ => 1.0 / (one_plus * one_plus),
    };

    let baseline_problem = RadialProblem::new(1.0, 0, MIN_RMAX_BOHR, SCALING_GRID_POINTS)?;
    let suppressed_problem = RadialProblem::new(z, 0, MIN_RMAX_BOHR, SCALING_GRID_POINTS)?;
    let baseline = solve_radial(&baseline_problem, 1, constants)?;
    let suppressed = solve_radial(&suppressed_problem, 1, constants)?;

    let energy_ratio = suppressed.eigenvalues[0].1 / baseline.eigenvalues[0].1;
    let expected_energy_ratio =
        1.0 + pow_shift(x, -2.0 * charge_power as f64).expect("x in window");
    let energy_ratio_error = libm::fabs(energy_ratio / expected_energy_ratio - 1.0);

    let decay_ratio = suppressed.fitted_decay_length / baseline.fitted_decay_length;
    let expected_decay_ratio = 1.0 + pow_shift(x, charge_power as f64).expect("x in window");
    let decay_ratio_error = libm::fabs(decay_ratio / expected_decay_ratio - 1.0);

    Ok(ScalingReport {
        x,
        topology,
        baseline,
        suppressed,
        energy_ratio,
        expected_energy_ratio,
        energy_ratio_error,
        decay_ratio,
        expected_decay_ratio,
        decay_ratio_error,
        passed: energy_ratio_error <= ENERGY_RATIO_TOL && decay_ratio_error <= DECAY_RATIO_TOL,
    })
}
