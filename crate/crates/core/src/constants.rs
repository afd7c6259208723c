//! Physical constants, loaded from embedded CODATA tables.
//!
//! Constants ship as embedded text resources keyed by dataset id so that
//! results are reproducible offline and a new CODATA adjustment is a purely
//! additive change. Twelve-significant-figure spectroscopy claims make
//! constant provenance part of correctness, so every loaded set is checked
//! against two derived anchors (Rydberg energy and Bohr radius) before use.

use core::f64::consts::PI;

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Default dataset used when none is requested.
pub const DEFAULT_DATASET: &str = "codata-2022";

const DATASETS: &[(&str, &str)] = &[
    ("codata-2022", include_str!("data/codata-2022.csv")),
    ("codata-2018", include_str!("data/codata-2018.csv")),
];

/// Anchors for the load-time sanity check, 1e-6 relative.
const RYDBERG_EV_REF: f64 = 13.605693;
const BOHR_RADIUS_M_REF: f64 = 5.29177e-11;
const ANCHOR_TOL: f64 = 1e-6;

/// SI values of the constants the model needs, from one CODATA adjustment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Elementary charge [C].
    pub elementary_charge: f64,
    /// Electron mass [kg].
    pub electron_mass: f64,
    /// Proton mass [kg].
    pub proton_mass: f64,
    /// Reduced Planck constant [J s].
    pub reduced_planck: f64,
    /// Vacuum permittivity [F/m].
    pub vacuum_permittivity: f64,
    /// Speed of light in vacuum [m/s].
    pub light_speed: f64,
    /// Proton g-factor [dimensionless].
    pub proton_g_factor: f64,
    /// Planck length [m]. Sets the quantum-gravity scale the model assumes
    /// the proton to be much larger than; no formula here uses it.
    pub planck_length: f64,
    /// Id of the dataset these values came from.
    pub dataset: &'static str,
}

impl PhysicalConstants {
    /// Rydberg energy mₑe⁴ / (2ℏ²(4πε₀)²) in joules.
    pub fn rydberg_energy_joule(&self) -> f64 {
        let e2_4pie0 = self.elementary_charge * self.elementary_charge
            / (4.0 * PI * self.vacuum_permittivity);
        self.electron_mass * e2_4pie0 * e2_4pie0
            / (2.0 * self.reduced_planck * self.reduced_planck)
    }

    /// Rydberg energy in eV.
    pub fn rydberg_energy_ev(&self) -> f64 {
        self.rydberg_energy_joule() / self.elementary_charge
    }

    /// Bohr radius 4πε₀ℏ² / (mₑe²) in meters.
    pub fn bohr_radius_m(&self) -> f64 {
        4.0 * PI * self.vacuum_permittivity * self.reduced_planck * self.reduced_planck
            / (self.electron_mass * self.elementary_charge * self.elementary_charge)
    }

    /// hc in eV·cm, the conversion between photon energy and wavelength.
    pub fn hc_ev_cm(&self) -> f64 {
        2.0 * PI * self.reduced_planck * self.light_speed / self.elementary_charge * 100.0
    }

    fn validate(&self) -> Result<()> {
        let fields = [
            ("elementary_charge", self.elementary_charge),
            ("electron_mass", self.electron_mass),
            ("proton_mass", self.proton_mass),
            ("reduced_planck", self.reduced_planck),
            ("vacuum_permittivity", self.vacuum_permittivity),
            ("light_speed", self.light_speed),
            ("proton_g_factor", self.proton_g_factor),
            ("planck_length", self.planck_length),
        ];
        for (name, v) in fields {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Config(alloc::format!(
                    "constant {name} must be strictly positive, got {v}"
                )));
            }
        }
        let ry = self.rydberg_energy_ev();
        if libm::fabs(ry / RYDBERG_EV_REF - 1.0) > ANCHOR_TOL {
            return Err(Error::Config(alloc::format!(
                "derived Rydberg energy {ry} eV is off the {RYDBERG_EV_REF} eV anchor"
            )));
        }
        let a0 = self.bohr_radius_m();
        if libm::fabs(a0 / BOHR_RADIUS_M_REF - 1.0) > ANCHOR_TOL {
            return Err(Error::Config(alloc::format!(
                "derived Bohr radius {a0} m is off the {BOHR_RADIUS_M_REF} m anchor"
            )));
        }
        Ok(())
    }
}

/// One row of a constants table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantRecord {
    pub name: &'static str,
    pub value: f64,
    pub unit: &'static str,
    pub source: &'static str,
}

fn table(dataset_id: &str) -> Result<&'static str> {
    DATASETS
        .iter()
        .find(|(id, _)| *id == dataset_id)
        .map(|(_, text)| *text)
        .ok_or_else(|| {
            Error::Config(alloc::format!(
                "unknown constants dataset {dataset_id:?} (available: {})",
                dataset_ids().join(", ")
            ))
        })
}

/// Ids of the bundled datasets.
pub fn dataset_ids() -> Vec<&'static str> {
    DATASETS.iter().map(|(id, _)| *id).collect()
}

/// Parses the raw records of a bundled dataset, in table order.
pub fn records(dataset_id: &str) -> Result<Vec<ConstantRecord>> {
    let text = table(dataset_id)?;
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split(',');
        let (name, value, unit, source) = (
            parts.next().unwrap_or_default().trim(),
            parts.next().unwrap_or_default().trim(),
            parts.next().unwrap_or_default().trim(),
            parts.next().unwrap_or_default().trim(),
        );
        if name.is_empty() || unit.is_empty() || source.is_empty() || parts.next().is_some() {
            return Err(Error::Config(alloc::format!(
                "malformed constants record {line:?}"
            )));
        }
        let value: f64 = value
            .parse()
            .map_err(|_| Error::Config(alloc::format!("bad value in record {line:?}")))?;
        out.push(ConstantRecord {
            name,
            value,
            unit,
            source,
        });
    }
    Ok(out)
}

/// Loads a bundled constants dataset and checks its invariants.
pub fn load_constants(dataset_id: &str) -> Result<PhysicalConstants> {
    let rows = records(dataset_id)?;
    let get = |name: &str| -> Result<f64> {
        rows.iter()
            .find(|r| r.name == name)
            .map(|r| r.value)
            .ok_or_else(|| Error::Config(alloc::format!("dataset {dataset_id} misses {name}")))
    };
    let source = rows
        .first()
        .map(|r| r.source)
        .ok_or_else(|| Error::Config("empty constants table".to_string()))?;
    let constants = PhysicalConstants {
        elementary_charge: get("elementary_charge")?,
        electron_mass: get("electron_mass")?,
        proton_mass: get("proton_mass")?,
        reduced_planck: get("reduced_planck")?,
        vacuum_permittivity: get("vacuum_permittivity")?,
        light_speed: get("light_speed")?,
        proton_g_factor: get("proton_g_factor")?,
        planck_length: get("planck_length")?,
        dataset: source,
    };
    constants.validate()?;
    Ok(constants)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn codata_2022_loads_and_matches_published_values() {
        let c = load_constants("codata-2022").unwrap();
        assert_eq!(c.elementary_charge, 1.602176634e-19);
        assert_eq!(c.proton_g_factor, 5.5856946893);
        assert_eq!(c.dataset, "codata-2022");
    }

    #[test]
    fn default_dataset_is_bundled() {
        assert!(dataset_ids().contains(&DEFAULT_DATASET));
        load_constants(DEFAULT_DATASET).unwrap();
    }

    #[test]
    fn unknown_dataset_is_a_configuration_error() {
        match load_constants("nonexistent") {
            Err(Error::Config(msg)) => assert!(msg.contains("nonexistent")),
            other => panic!("expected configuration error, got {other:?}"),
        }
    }

    #[test]
    fn derived_anchors_hold() {
        for id in dataset_ids() {
            let c = load_constants(id).unwrap();
            assert_relative_eq!(c.rydberg_energy_ev(), 13.605693, max_relative = 1e-6);
            assert_relative_eq!(c.bohr_radius_m(), 5.29177e-11, max_relative = 1e-6);
        }
    }

    #[test]
    fn hc_is_the_usual_ev_cm_value() {
        let c = load_constants(DEFAULT_DATASET).unwrap();
        assert_relative_eq!(c.hc_ev_cm(), 1.23984198e-4, max_relative = 1e-8);
    }

    #[test]
    fn records_expose_units_and_source() {
        let rows = records("codata-2022").unwrap();
        assert_eq!(rows.len(), 8);
        let q = rows.iter().find(|r| r.name == "elementary_charge").unwrap();
        assert_eq!(q.unit, "C");
        assert_eq!(q.source, "codata-2022");
    }
}
