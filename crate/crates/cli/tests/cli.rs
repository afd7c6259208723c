//! End-to-end tests of the `erepr` binary: formats, determinism, exit codes,
//! configuration layering, and schema guarantees.

use std::io::Write;
use std::process::{Command, Output};

fn erepr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_erepr"))
        .args(args)
        .env_remove("EREPR_CONSTANTS_DATASET")
        .output()
        .expect("binary runs")
}

fn erepr_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_erepr"));
    cmd.args(args).env_remove("EREPR_CONSTANTS_DATASET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn json_records(out: &Output) -> Vec<serde_json::Value> {
    stdout(out)
        .lines()
        .map(|line| serde_json::from_str(line).expect("valid json line"))
        .collect()
}

fn result_value(record: &serde_json::Value, name: &str) -> Option<f64> {
    record["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == name)
        .and_then(|e| e["value"].as_f64())
}

#[test]
fn reproducible_runs_are_byte_identical() {
    let args = [
        "hfs",
        "--alpha",
        "1e6",
        "--entropy",
        "ln2",
        "--topology",
        "nontraversable",
        "--format",
        "json",
        "--reproducible",
    ];
    let a = erepr(&args);
    let b = erepr(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    // No timestamp field under --reproducible.
    assert!(!stdout(&a).contains("timestamp"));

    // Without --reproducible a timestamp field appears.
    let c = erepr(&args[..args.len() - 1]);
    assert!(stdout(&c).contains("timestamp"));
}

#[test]
fn json_schema_has_versions_and_units() {
    let out = erepr(&[
        "spectrum",
        "--alpha",
        "1e8",
        "--n-max",
        "2",
        "--format",
        "json",
        "--reproducible",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let records = json_records(&out);
    assert_eq!(records.len(), 1);
    let record = &records[0];
    assert_eq!(record["schema_version"], "1");
    assert_eq!(record["command"], "spectrum");
    assert!(record["inputs"].is_object());
    let results = record["results"].as_array().unwrap();
    assert!(!results.is_empty());
    for entry in results {
        assert!(entry["unit"].is_string(), "unit missing in {entry}");
        assert!(entry["provenance"].is_string());
    }
    // Round-trip: serialize back and compare parsed values.
    let reparsed: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(record).unwrap()).unwrap();
    assert_eq!(&reparsed, record);
}

#[test]
fn csv_has_header_and_one_line_per_result() {
    let out = erepr(&[
        "charge",
        "--alpha",
        "1e9",
        "--entropy",
        "1",
        "--format",
        "csv",
        "--reproducible",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "schema_version,command,name,value,unit,provenance,note"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2); // suppression_factor + residual_charge
    assert!(rows.iter().all(|r| r.starts_with("1,charge,")));
}

#[test]
fn entropy_token_and_numeric_agree() {
    let with_token = erepr(&[
        "bound",
        "hyperfine",
        "--precision",
        "1e-12",
        "--entropy",
        "ln2",
        "--format",
        "json",
        "--reproducible",
    ]);
    let with_number = erepr(&[
        "bound",
        "hyperfine",
        "--precision",
        "1e-12",
        "--entropy",
        "0.6931471805599453",
        "--format",
        "json",
        "--reproducible",
    ]);
    assert_eq!(with_token.stdout, with_number.stdout);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(erepr(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(erepr(&["hfs", "--alpha"]).status.code(), Some(2));
    assert_eq!(
        erepr(&["bound", "hyperfine", "--precision", "1e-12", "--entropy", "two"])
            .status
            .code(),
        Some(2)
    );
    // Missing required oscillator parameters without --demo.
    assert_eq!(
        erepr(&["entropy", "oscillator", "--mass1", "1e-30"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn domain_errors_exit_1_with_structured_record() {
    let out = erepr(&[
        "bound",
        "hyperfine",
        "--precision",
        "-1",
        "--format",
        "json",
        "--reproducible",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let records = json_records(&out);
    assert_eq!(records[0]["error"]["kind"], "domain");
    assert_eq!(records[0]["schema_version"], "1");

    let out = erepr(&["constants", "--dataset", "nonexistent", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let records = json_records(&out);
    assert_eq!(records[0]["error"]["kind"], "configuration");
}

#[test]
fn unstable_trap_reports_domain_error() {
    // Attractive pair far past the stability threshold.
    let out = erepr(&[
        "entropy",
        "oscillator",
        "--mass1",
        "9.1093837139e-31",
        "--mass2",
        "9.1093837139e-31",
        "--freq1",
        "1e6",
        "--freq2",
        "1e6",
        "--separation",
        "1e-6",
        "--charge1",
        "-1.602176634e-19",
        "--charge2",
        "1.602176634e-19",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let records = json_records(&out);
    assert_eq!(records[0]["error"]["kind"], "domain");
}

#[test]
fn degenerate_wavelength_is_null_with_note() {
    // s = 0: no entanglement, x = 0, the breaking transition is degenerate.
    let out = erepr(&[
        "hfs",
        "--alpha",
        "1e6",
        "--entropy",
        "0",
        "--format",
        "json",
        "--reproducible",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let records = json_records(&out);
    let entry = records[0]["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == "entangled_triplet_to_unentangled_triplet_wavelength")
        .unwrap();
    assert!(entry["value"].is_null());
    assert!(entry["note"].as_str().unwrap().contains("degenerate"));
}

#[test]
fn config_file_env_and_flag_layering() {
    let dir = std::env::temp_dir().join(format!("erepr-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config_path = dir.join("erepr.conf");
    let mut f = std::fs::File::create(&config_path).unwrap();
    writeln!(f, "# test preset").unwrap();
    writeln!(f, "dataset = codata-2018").unwrap();
    writeln!(f, "topology = traversable").unwrap();
    drop(f);
    let config = config_path.to_str().unwrap();

    // File presets both dataset and default topology.
    let out = erepr(&[
        "charge",
        "--alpha",
        "1e6",
        "--config",
        config,
        "--format",
        "json",
        "--reproducible",
    ]);
    let records = json_records(&out);
    assert_eq!(records[0]["inputs"]["dataset"], "codata-2018");
    assert_eq!(records[0]["inputs"]["topology"], "traversable");
    // Traversable topology: residual charge exactly zero.
    assert_eq!(result_value(&records[0], "residual_charge"), Some(0.0));

    // Environment overrides the file dataset.
    let out = erepr_env(
        &[
            "charge",
            "--alpha",
            "1e6",
            "--config",
            config,
            "--format",
            "json",
            "--reproducible",
        ],
        &[("EREPR_CONSTANTS_DATASET", "codata-2022")],
    );
    let records = json_records(&out);
    assert_eq!(records[0]["inputs"]["dataset"], "codata-2022");

    // Flags override both.
    let out = erepr_env(
        &[
            "charge",
            "--alpha",
            "1e6",
            "--config",
            config,
            "--dataset",
            "codata-2018",
            "--topology",
            "nontraversable",
            "--format",
            "json",
            "--reproducible",
        ],
        &[("EREPR_CONSTANTS_DATASET", "codata-2022")],
    );
    let records = json_records(&out);
    assert_eq!(records[0]["inputs"]["dataset"], "codata-2018");
    assert_eq!(records[0]["inputs"]["topology"], "nontraversable");

    // Unknown config keys are usage errors.
    let bad_path = dir.join("bad.conf");
    std::fs::write(&bad_path, "colour = green\n").unwrap();
    let out = erepr(&["charge", "--alpha", "1e6", "--config", bad_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn custom_qubit_state_amplitudes() {
    let r = 1.0 / 2.0f64.sqrt();
    let amp = format!("0,0,{r},0,-{r},0,0,0");
    let out = erepr(&[
        "entropy",
        "qubit",
        "--state",
        "custom",
        "--amplitudes",
        &amp,
        "--format",
        "json",
        "--reproducible",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let records = json_records(&out);
    let entropy = result_value(&records[0], "entropy").unwrap();
    assert!((entropy - std::f64::consts::LN_2).abs() < 1e-12);

    // Non-normalized input is a validation error.
    let out = erepr(&[
        "entropy",
        "qubit",
        "--state",
        "custom",
        "--amplitudes",
        "1,0,1,0,0,0,0,0",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let records = json_records(&out);
    assert_eq!(records[0]["error"]["kind"], "validation");
}

#[test]
fn oracle_solve_emits_oracle_provenance() {
    let out = erepr(&[
        "oracle",
        "solve",
        "--charge-product",
        "1",
        "--levels",
        "2",
        "--points",
        "2000",
        "--format",
        "json",
        "--reproducible",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let records = json_records(&out);
    let results = records[0]["results"].as_array().unwrap();
    let energy = results.iter().find(|e| e["name"] == "energy_n1").unwrap();
    assert_eq!(energy["provenance"], "oracle");
    let reference = results.iter().find(|e| e["name"] == "reference_n1").unwrap();
    assert_eq!(reference["provenance"], "analytic");
    // Coarse grid, but the levels still land close to -13.6 and -3.4 eV.
    assert!((result_value(&records[0], "energy_n1").unwrap() + 13.6057).abs() < 0.01);
    assert!((result_value(&records[0], "energy_n2").unwrap() + 3.4014).abs() < 0.01);
}
