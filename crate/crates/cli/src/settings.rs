//! Layered run configuration: built-in defaults, then an optional key-value
//! config file, then the environment, then command-line flags.

use std::path::Path;

use erepr_core::Topology;

/// Environment variable overriding the constants dataset.
pub const DATASET_ENV: &str = "EREPR_CONSTANTS_DATASET";

#[derive(Debug, Clone)]
pub struct Settings {
    pub dataset: String,
    pub default_topology: Topology,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            dataset: erepr_core::constants::DEFAULT_DATASET.to_string(),
            default_topology: Topology::Nontraversable,
        }
    }
}

impl Settings {
    /// Resolution order: defaults < config file < environment < flags.
    /// Flags are applied by the caller, which knows whether they were given.
    pub fn resolve(config_path: Option<&Path>) -> Result<Self, String> {
        let mut settings = Self::default();
        if let Some(path) = config_path {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
            settings.apply_file(&text, path)?;
        }
        if let Ok(dataset) = std::env::var(DATASET_ENV) {
            if !dataset.is_empty() {
                settings.dataset = dataset;
            }
        }
        Ok(settings)
    }

    fn apply_file(&mut self, text: &str, path: &Path) -> Result<(), String> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!(
                    "{}:{}: expected 'key = value', got {raw:?}",
                    path.display(),
                    lineno + 1
                ));
            };
            let key = key.trim();
            let value = value.trim();
            match key {
                "dataset" => self.dataset = value.to_string(),
                "topology" => {
                    self.default_topology = value.parse().map_err(|e| {
                        format!("{}:{}: {e}", path.display(), lineno + 1)
                    })?;
                }
                other => {
                    return Err(format!(
                        "{}:{}: unknown config key {other:?} (known: dataset, topology)",
                        path.display(),
                        lineno + 1
                    ));
                }
            }
        }
        Ok(())
    }
}
