//! Scenario configuration: a strict JSON document mapped onto the library
//! types. Unknown keys are rejected so typos fail loudly.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use photon_shaping::{load_filter_table, PairModel, SpectralFilter};

use crate::output::Format;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub pair_model: PairModelConfig,
    pub filter: FilterConfig,
    #[serde(default)]
    pub herald_instants: Vec<f64>,
    #[serde(default)]
    pub atom: Option<AtomConfig>,
    #[serde(default)]
    pub grid: Option<GridConfig>,
    #[serde(default)]
    pub imperfections: Imperfections,
    #[serde(default)]
    pub output: OutputConfig,
    #[serde(default)]
    pub unit: Option<UnitConfig>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PairModelConfig {
    Ideal,
    FiniteWindow {
        window: f64,
        #[serde(default = "one")]
        correlation_time: f64,
    },
    StationaryCw {
        pair_flux: f64,
        #[serde(default = "one")]
        correlation_time: f64,
    },
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FilterConfig {
    Lorentzian {
        response_time: f64,
        #[serde(default)]
        drift: f64,
    },
    Tabulated { path: PathBuf },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomConfig {
    pub lifetime: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(default)]
    pub step: Option<f64>,
    #[serde(default)]
    pub t_min: Option<f64>,
    #[serde(default)]
    pub t_max: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Imperfections {
    /// Detector time resolution t_d; smears reported intensities.
    #[serde(default)]
    pub detector_resolution: f64,
    /// Additional filter central-frequency drift ω_d.
    #[serde(default)]
    pub filter_drift: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default = "default_dir")]
    pub directory: PathBuf,
    #[serde(default = "default_format")]
    pub format: Format,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitConfig {
    pub label: String,
    /// The correlation time expressed in `label` units.
    pub correlation_time: f64,
}

fn one() -> f64 {
    1.0
}

fn default_dir() -> PathBuf {
    PathBuf::from("out")
}

fn default_format() -> Format {
    Format::Csv
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self { directory: default_dir(), format: default_format() }
    }
}

impl ScenarioConfig {
    pub fn from_file(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        serde_json::from_str(&text)
            .map_err(|e| format!("config error in {}: {e}", path.display()))
    }

    pub fn build_model(&self) -> photon_shaping::Result<PairModel> {
        match &self.pair_model {
            PairModelConfig::Ideal => Ok(PairModel::IdealCorrelated),
            PairModelConfig::FiniteWindow { window, correlation_time } => {
                PairModel::finite_window(*correlation_time, *window)
            }
            PairModelConfig::StationaryCw { pair_flux, correlation_time } => {
                PairModel::stationary_cw(*pair_flux, *correlation_time)
            }
        }
    }

    /// Build the filter, folding in the imperfection drift.
    pub fn build_filter(&self) -> photon_shaping::Result<SpectralFilter> {
        let base = match &self.filter {
            FilterConfig::Lorentzian { response_time, drift } => {
                SpectralFilter::lorentzian(*response_time).map(|f| f.with_drift(*drift))?
            }
            FilterConfig::Tabulated { path } => load_filter_table(path)?,
        };
        let total_drift = base.drift() + self.imperfections.filter_drift;
        Ok(base.with_drift(total_drift))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_config_parses_with_defaults() {
        let text = r#"{
            "pair_model": {"kind": "finite_window", "window": 150.0},
            "filter": {"kind": "lorentzian", "response_time": 10.0},
            "herald_instants": [75.0]
        }"#;
        let cfg: ScenarioConfig = serde_json::from_str(text).unwrap();
        assert!(matches!(
            cfg.pair_model,
            PairModelConfig::FiniteWindow { correlation_time, .. } if correlation_time == 1.0
        ));
        assert_eq!(cfg.output.directory, PathBuf::from("out"));
        assert_eq!(cfg.output.format, Format::Csv);
        assert_eq!(cfg.imperfections.detector_resolution, 0.0);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = r#"{
            "pair_model": {"kind": "finite_window", "window": 150.0},
            "filter": {"kind": "lorentzian", "response_time": 10.0},
            "herlad_instants": [75.0]
        }"#;
        let err = serde_json::from_str::<ScenarioConfig>(text).unwrap_err();
        assert!(err.to_string().contains("herlad_instants"), "{err}");
    }

    #[test]
    fn nested_unknown_keys_are_rejected_too() {
        let text = r#"{
            "pair_model": {"kind": "finite_window", "window": 150.0, "wndow": 1.0},
            "filter": {"kind": "lorentzian", "response_time": 10.0}
        }"#;
        assert!(serde_json::from_str::<ScenarioConfig>(text).is_err());
    }
}
