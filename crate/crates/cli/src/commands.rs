//! Command implementations: each subcommand resolves its inputs, calls the
//! library, and lays the results out as output records.

use std::collections::BTreeMap;

use erepr_core::constants::{self, PhysicalConstants};
use erepr_core::constraints::{
    bound_alpha_from_hyperfine, bound_alpha_from_neutrality, residual_charge, AlphaBound,
    NeutralityBound,
};
use erepr_core::entanglement::{
    oscillator_entropy, two_qubit_entropy, TrapPairConfig, TwoQubitState,
};
use erepr_core::oracle::{self, solve_radial, verify_scaling, RadialProblem};
use erepr_core::spectrum::{
    bohr_energy, bohr_radius, energy_to_wavelength, hyperfine_base, hyperfine_transition,
    singlet_wavelength_gap_cm, TransitionKind, Wavelength,
};
use erepr_core::suppression::SuppressionConfig;
use erepr_core::num_complex::Complex64;
use erepr_core::{Error, Topology};

use crate::output::{OutputRecord, ResultEntry, SCHEMA_VERSION};
use crate::settings::Settings;
use crate::{
    BoundCommand, Cli, Command, EntropyCommand, ModelArgs, OracleCommand, QubitStateArg,
    TopologyArg,
};

pub fn command_name(command: &Command) -> String {
    match command {
        Command::Spectrum { .. } => "spectrum".into(),
        Command::Hfs { .. } => "hfs".into(),
        Command::Bound(BoundCommand::Hyperfine { .. }) => "bound hyperfine".into(),
        Command::Bound(BoundCommand::Neutrality { .. }) => "bound neutrality".into(),
        Command::Charge { .. } => "charge".into(),
        Command::Entropy(EntropyCommand::Qubit { .. }) => "entropy qubit".into(),
        Command::Entropy(EntropyCommand::Oscillator { .. }) => "entropy oscillator".into(),
        Command::Oracle(OracleCommand::Solve { .. }) => "oracle solve".into(),
        Command::Oracle(OracleCommand::Verify { .. }) => "oracle verify".into(),
        Command::Constants => "constants".into(),
    }
}

fn record(
    command: &Command,
    inputs: BTreeMap<String, String>,
    results: Vec<ResultEntry>,
) -> OutputRecord {
    OutputRecord {
        schema_version: SCHEMA_VERSION,
        command: command_name(command),
        timestamp: None,
        inputs,
        results,
    }
}

fn resolve_topology(arg: Option<TopologyArg>, settings: &Settings) -> Topology {
    arg.map(Topology::from).unwrap_or(settings.default_topology)
}

fn load(settings: &Settings) -> Result<PhysicalConstants, Error> {
    erepr_core::load_constants(&settings.dataset)
}

fn model_config(
    model: &ModelArgs,
    settings: &Settings,
) -> Result<(SuppressionConfig, BTreeMap<String, String>), Error> {
    let topology = resolve_topology(model.topology, settings);
    let config = SuppressionConfig::new(model.entropy, model.alpha, topology)?;
    let mut inputs = BTreeMap::new();
    inputs.insert("alpha".into(), crate::output::float_str(model.alpha));
    inputs.insert("entropy".into(), crate::output::float_str(model.entropy));
    inputs.insert("topology".into(), topology.as_str().into());
    inputs.insert("dataset".into(), settings.dataset.clone());
    Ok((config, inputs))
}

fn wavelength_entry(name: String, wavelength: Wavelength) -> ResultEntry {
    match wavelength {
        Wavelength::Centimeters(v) => ResultEntry::new(name, v, "cm"),
        Wavelength::Degenerate => ResultEntry::degenerate(
            name,
            "cm",
            "degenerate: zero transition energy, no photon",
        ),
    }
}

pub fn run(cli: &Cli, settings: &Settings) -> Result<Vec<OutputRecord>, Error> {
    match &cli.command {
        Command::Spectrum { n_max, model } => spectrum_cmd(&cli.command, *n_max, model, settings),
        Command::Hfs { model } => hfs_cmd(&cli.command, model, settings),
        Command::Bound(bound) => bound_cmd(&cli.command, bound, settings),
        Command::Charge { model } => charge_cmd(&cli.command, model, settings),
        Command::Entropy(entropy) => entropy_cmd(&cli.command, entropy, settings),
        Command::Oracle(oracle_cmd_args) => oracle_cmd(&cli.command, oracle_cmd_args, settings),
        Command::Constants => constants_cmd(&cli.command, settings),
    }
}

fn spectrum_cmd(
    command: &Command,
    n_max: u32,
    model: &ModelArgs,
    settings: &Settings,
) -> Result<Vec<OutputRecord>, Error> {
    if n_max < 1 {
        return Err(Error::Validation("--n-max must be at least 1".into()));
    }
    let constants = load(settings)?;
    let (config, mut inputs) = model_config(model, settings)?;
    inputs.insert("n_max".into(), n_max.to_string());

    let mut results = vec![ResultEntry::new(
        "suppression_factor",
        config.suppression_factor(),
        "1",
    )];
    for n in 1..=n_max {
        let level = bohr_energy(n, &config, &constants)?;
        results.push(ResultEntry::new(format!("energy_n{n}_base"), level.base, "eV"));
        results.push(ResultEntry::new(
            format!("energy_n{n}_delta_rel"),
            level.relative_delta,
            "1",
        ));
        results.push(ResultEntry::new(format!("energy_n{n}"), level.value(), "eV"));
    }
    let radius = bohr_radius(&config, &constants);
    results.push(ResultEntry::new("bohr_radius_base", radius.base, "m"));
    results.push(ResultEntry::new(
        "bohr_radius_delta_rel",
        radius.relative_delta,
        "1",
    ));
    results.push(ResultEntry::new("bohr_radius", radius.value(), "m"));

    Ok(vec![record(command, inputs, results)])
}

fn hfs_cmd(
    command: &Command,
    model: &ModelArgs,
    settings: &Settings,
) -> Result<Vec<OutputRecord>, Error> {
    let constants = load(settings)?;
    let (config, inputs) = model_config(model, settings)?;

    let de_hf = hyperfine_base(&constants);
    let lambda21 = energy_to_wavelength(de_hf, &constants)?;
    let mut results = vec![
        ResultEntry::new("suppression_factor", config.suppression_factor(), "1"),
        ResultEntry::new("hyperfine_base", de_hf, "eV"),
        ResultEntry::new("wavelength_21cm", lambda21, "cm"),
    ];

    for kind in TransitionKind::ALL {
        let t = hyperfine_transition(kind, &config, &constants);
        let k = kind.as_str();
        results.push(ResultEntry::new(format!("{k}_energy_base"), t.energy.base, "eV"));
        results.push(ResultEntry::new(
            format!("{k}_energy_delta_rel"),
            t.energy.relative_delta,
            "1",
        ));
        results.push(ResultEntry::new(format!("{k}_energy"), t.energy_ev(), "eV"));
        let mut wl = wavelength_entry(format!("{k}_wavelength"), t.wavelength);
        if kind == TransitionKind::EntangledTripletToUnentangledTriplet
            && matches!(t.wavelength, Wavelength::Centimeters(_))
        {
            wl = wl.with_note(
                "pure-suppression line: wavelength grows as alpha^2/s \
                 (roughly 1e14 cm at alpha = 1e6, s = ln 2; 1e16 cm near alpha = 1e7)",
            );
        }
        results.push(wl);
        results.push(wavelength_entry(
            format!("{k}_wavelength_shift_from_21cm"),
            t.wavelength_shift_from_21cm,
        ));
    }

    results.push(ResultEntry::new(
        "singlet_wavelength_gap",
        singlet_wavelength_gap_cm(&config, &constants),
        "cm",
    ));

    Ok(vec![record(command, inputs, results)])
}

fn bound_entries(bound: &AlphaBound) -> Vec<ResultEntry> {
    vec![
        ResultEntry::new("alpha_min", bound.alpha_min, "1"),
        ResultEntry::new("forward_precision", bound.forward_precision(), "1").with_note(
            "the generating forward model re-evaluated at alpha_min; must \
             reproduce the input precision",
        ),
    ]
}

fn bound_cmd(
    command: &Command,
    bound: &BoundCommand,
    settings: &Settings,
) -> Result<Vec<OutputRecord>, Error> {
    match bound {
        BoundCommand::Hyperfine {
            precision,
            entropy,
            topology,
        } => {
            let topology = resolve_topology(*topology, settings);
            let result = bound_alpha_from_hyperfine(*precision, *entropy, topology)?;
            let mut inputs = BTreeMap::new();
            inputs.insert("precision".into(), crate::output::float_str(*precision));
            inputs.insert("entropy".into(), crate::output::float_str(*entropy));
            inputs.insert("topology".into(), topology.as_str().into());
            Ok(vec![record(command, inputs, bound_entries(&result))])
        }
        BoundCommand::Neutrality {
            charge_limit,
            entropy,
            topology,
        } => {
            let topology = resolve_topology(*topology, settings);
            let outcome = bound_alpha_from_neutrality(*charge_limit, *entropy, topology)?;
            let mut inputs = BTreeMap::new();
            inputs.insert("charge_limit".into(), crate::output::float_str(*charge_limit));
            inputs.insert("entropy".into(), crate::output::float_str(*entropy));
            inputs.insert("topology".into(), topology.as_str().into());
            let results = match outcome {
                NeutralityBound::Bound(b) => bound_entries(&b),
                NeutralityBound::Unconstrained => vec![ResultEntry::degenerate(
                    "alpha_min",
                    "1",
                    "no bound: a traversable wormhole keeps the atom exactly neutral",
                )],
            };
            Ok(vec![record(command, inputs, results)])
        }
    }
}

fn charge_cmd(
    command: &Command,
    model: &ModelArgs,
    settings: &Settings,
) -> Result<Vec<OutputRecord>, Error> {
    let (config, inputs) = model_config(model, settings)?;
    let results = vec![
        ResultEntry::new("suppression_factor", config.suppression_factor(), "1"),
        ResultEntry::new("residual_charge", residual_charge(&config), "e"),
    ];
    Ok(vec![record(command, inputs, results)])
}

fn entropy_cmd(
    command: &Command,
    entropy: &EntropyCommand,
    settings: &Settings,
) -> Result<Vec<OutputRecord>, Error> {
    match entropy {
        EntropyCommand::Qubit { state, amplitudes } => {
            let mut inputs = BTreeMap::new();
            let qubit_state = match state {
                QubitStateArg::Singlet => TwoQubitState::singlet(),
                QubitStateArg::TripletZero => TwoQubitState::triplet_zero(),
                QubitStateArg::UpUp => TwoQubitState::up_up(),
                QubitStateArg::DownDown => TwoQubitState::down_down(),
                QubitStateArg::Custom => {
                    let Some(raw) = amplitudes else {
                        return Err(Error::Validation(
                            "--state custom requires --amplitudes re,im,...  (8 reals)".into(),
                        ));
                    };
                    let parsed: Vec<f64> = raw
                        .split(',')
                        .map(|piece| {
                            piece.trim().parse::<f64>().map_err(|_| {
                                Error::Validation(format!(
                                    "bad amplitude component {piece:?} in --amplitudes"
                                ))
                            })
                        })
                        .collect::<Result<_, _>>()?;
                    if parsed.len() != 8 {
                        return Err(Error::Validation(format!(
                            "--amplitudes needs 8 comma-separated reals (re,im per \
                             amplitude), got {}",
                            parsed.len()
                        )));
                    }
                    inputs.insert("amplitudes".into(), raw.clone());
                    TwoQubitState::new([
                        Complex64::new(parsed[0], parsed[1]),
                        Complex64::new(parsed[2], parsed[3]),
                        Complex64::new(parsed[4], parsed[5]),
                        Complex64::new(parsed[6], parsed[7]),
                    ])?
                }
            };
            let state_name = match state {
                QubitStateArg::Singlet => "singlet",
                QubitStateArg::TripletZero => "triplet-zero",
                QubitStateArg::UpUp => "up-up",
                QubitStateArg::DownDown => "down-down",
                QubitStateArg::Custom => "custom",
            };
            inputs.insert("state".into(), state_name.into());
            let result = two_qubit_entropy(&qubit_state);
            let results = vec![ResultEntry::new("entropy", result.entropy, "nat")
                .with_note(format!("method: {}", result.method.as_str()))];
            Ok(vec![record(command, inputs, results)])
        }
        EntropyCommand::Oscillator {
            mass1,
            mass2,
            freq1,
            freq2,
            separation,
            charge1,
            charge2,
            demo,
        } => {
            let constants = load(settings)?;
            let config = if *demo {
                TrapPairConfig::near_critical_demo(&constants)
            } else {
                TrapPairConfig::new(
                    mass1.expect("clap enforces presence"),
                    mass2.expect("clap enforces presence"),
                    freq1.expect("clap enforces presence"),
                    freq2.expect("clap enforces presence"),
                    separation.expect("clap enforces presence"),
                    charge1.expect("clap enforces presence"),
                    charge2.expect("clap enforces presence"),
                    &constants,
                )?
            };
            let mut inputs = BTreeMap::new();
            inputs.insert("dataset".into(), settings.dataset.clone());
            inputs.insert("demo".into(), demo.to_string());
            inputs.insert("mass1".into(), crate::output::float_str(config.mass_1()));
            inputs.insert("mass2".into(), crate::output::float_str(config.mass_2()));
            inputs.insert("freq1".into(), crate::output::float_str(config.trap_freq_1()));
            inputs.insert("freq2".into(), crate::output::float_str(config.trap_freq_2()));
            inputs.insert("separation".into(), crate::output::float_str(config.separation()));
            inputs.insert("charge1".into(), crate::output::float_str(config.charge_1()));
            inputs.insert("charge2".into(), crate::output::float_str(config.charge_2()));

            let modes = config.normal_modes();
            let result = oscillator_entropy(&config);
            let results = vec![
                ResultEntry::new("entropy", result.entropy, "nat")
                    .with_note(format!("method: {}", result.method.as_str())),
                ResultEntry::new("coupling", config.coupling(), "N m^-1"),
                ResultEntry::new("mode_freq_1", modes.omega_sq[0].sqrt(), "rad s^-1"),
                ResultEntry::new("mode_freq_2", modes.omega_sq[1].sqrt(), "rad s^-1"),
            ];
            Ok(vec![record(command, inputs, results)])
        }
    }
}

fn oracle_cmd(
    command: &Command,
    oracle_args: &OracleCommand,
    settings: &Settings,
) -> Result<Vec<OutputRecord>, Error> {
    let constants = load(settings)?;
    match oracle_args {
        OracleCommand::Solve {
            charge_product,
            l,
            levels,
            rmax,
            points,
            reduced_mass,
        } => {
            let mut problem = RadialProblem::new(*charge_product, *l, *rmax, *points)?;
            if let Some(mass) = reduced_mass {
                problem = problem.with_reduced_mass(*mass)?;
            }
            let report = solve_radial(&problem, *levels, &constants)?;

            let mut inputs = BTreeMap::new();
            inputs.insert("charge_product".into(), crate::output::float_str(*charge_product));
            inputs.insert("l".into(), l.to_string());
            inputs.insert("levels".into(), levels.to_string());
            inputs.insert("rmax".into(), crate::output::float_str(*rmax));
            inputs.insert("points".into(), points.to_string());
            if let Some(mass) = reduced_mass {
                inputs.insert("reduced_mass".into(), crate::output::float_str(*mass));
            }
            inputs.insert("dataset".into(), settings.dataset.clone());

            let mut results = Vec::new();
            for ((n, energy), (_, reference)) in report
                .eigenvalues
                .iter()
                .zip(&report.analytic_reference)
            {
                results.push(ResultEntry::oracle(format!("energy_n{n}"), *energy, "eV"));
                results.push(ResultEntry::new(
                    format!("reference_n{n}"),
                    *reference,
                    "eV",
                ));
            }
            for (n, ratio) in &report.virial_ratios {
                results.push(ResultEntry::oracle(
                    format!("virial_ratio_n{n}"),
                    *ratio,
                    "1",
                ));
            }
            results.push(ResultEntry::oracle(
                "max_relative_error",
                report.max_relative_error,
                "1",
            ));
            results.push(ResultEntry::oracle(
                "fitted_decay_length",
                report.fitted_decay_length,
                "bohr",
            ));
            Ok(vec![record(command, inputs, results)])
        }
        OracleCommand::Verify { x, topology } => {
            let topology = resolve_topology(*topology, settings);
            let report = verify_scaling(*x, topology, &constants)?;

            let mut inputs = BTreeMap::new();
            inputs.insert("x".into(), crate::output::float_str(*x));
            inputs.insert("topology".into(), topology.as_str().into());
            inputs.insert("dataset".into(), settings.dataset.clone());

            let verdict = if report.passed { "pass" } else { "fail" };
            let results = vec![
                ResultEntry::oracle("energy_ratio", report.energy_ratio, "1"),
                ResultEntry::new("expected_energy_ratio", report.expected_energy_ratio, "1"),
                ResultEntry::oracle("energy_ratio_error", report.energy_ratio_error, "1"),
                ResultEntry::oracle("decay_ratio", report.decay_ratio, "1"),
                ResultEntry::new("expected_decay_ratio", report.expected_decay_ratio, "1"),
                ResultEntry::oracle("decay_ratio_error", report.decay_ratio_error, "1"),
                ResultEntry::oracle(
                    "within_tolerance",
                    if report.passed { 1.0 } else { 0.0 },
                    "1",
                )
                .with_note(format!(
                    "{verdict}: energy tolerance {}, decay tolerance {}",
                    oracle::ENERGY_RATIO_TOL,
                    oracle::DECAY_RATIO_TOL
                )),
            ];
            Ok(vec![record(command, inputs, results)])
        }
    }
}

fn constants_cmd(command: &Command, settings: &Settings) -> Result<Vec<OutputRecord>, Error> {
    // Loading validates the table invariants before anything is printed.
    let loaded = erepr_core::load_constants(&settings.dataset)?;
    let rows = constants::records(&settings.dataset)?;

    let mut inputs = BTreeMap::new();
    inputs.insert("dataset".into(), settings.dataset.clone());

    let mut results: Vec<ResultEntry> = rows
        .iter()
        .map(|r| ResultEntry::new(r.name, r.value, r.unit))
        .collect();
    results.push(
        ResultEntry::new("rydberg_energy", loaded.rydberg_energy_ev(), "eV")
            .with_note("derived"),
    );
    results.push(
        ResultEntry::new("bohr_radius", loaded.bohr_radius_m(), "m").with_note("derived"),
    );
    Ok(vec![record(command, inputs, results)])
}
