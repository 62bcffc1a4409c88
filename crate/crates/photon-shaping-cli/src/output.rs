//! Dataset emission: CSV and JSON writers with atomic file replacement and
//! optional physical-unit scaling of time columns.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use photon_shaping::{Error, Result};

/// Output format of emitted datasets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}; use csv or json")),
        }
    }
}

/// Physical unit attachment: every time column is multiplied by the
/// correlation time expressed in `label` units.
#[derive(Debug, Clone)]
pub struct UnitScale {
    pub label: String,
    pub correlation_time: f64,
}

/// A rectangular dataset: named columns of equal length.
pub struct Dataset {
    pub columns: Vec<(String, Vec<f64>)>,
    /// Marks columns carrying times, to be rescaled when units attach.
    pub time_columns: Vec<usize>,
}

impl Dataset {
    pub fn new() -> Self {
        Self { columns: Vec::new(), time_columns: Vec::new() }
    }

    pub fn push_time(&mut self, name: impl Into<String>, values: Vec<f64>) -> &mut Self {
        self.time_columns.push(self.columns.len());
        self.columns.push((name.into(), values));
        self
    }

    pub fn push(&mut self, name: impl Into<String>, values: Vec<f64>) -> &mut Self {
        self.columns.push((name.into(), values));
        self
    }

    fn scaled(&self, unit: Option<&UnitScale>) -> Vec<(String, Vec<f64>)> {
        let Some(unit) = unit else {
            return self.columns.clone();
        };
        self.columns
            .iter()
            .enumerate()
            .map(|(i, (name, values))| {
                if self.time_columns.contains(&i) {
                    let scaled = values.iter().map(|v| v * unit.correlation_time).collect();
                    (format!("{name}_{}", unit.label), scaled)
                } else {
                    (name.clone(), values.clone())
                }
            })
            .collect()
    }

    /// Write the dataset under `dir` with the format's extension, atomically
    /// (temp file + rename). Returns the final path.
    pub fn write(
        &self,
        dir: &Path,
        stem: &str,
        format: Format,
        unit: Option<&UnitScale>,
    ) -> Result<PathBuf> {
        let columns = self.scaled(unit);
        let len = columns.first().map(|(_, v)| v.len()).unwrap_or(0);
        for (name, v) in &columns {
            if v.len() != len {
                return Err(Error::InvalidArgument(format!(
                    "dataset column {name} has {} rows, expected {len}",
                    v.len()
                )));
            }
        }

        let mut body = String::new();
        match format {
            Format::Csv => {
                let header: Vec<&str> = columns.iter().map(|(n, _)| n.as_str()).collect();
                body.push_str(&header.join(","));
                body.push('\n');
                for row in 0..len {
                    let cells: Vec<String> = columns
                        .iter()
                        .map(|(_, v)| format!("{:.9e}", v[row]))
                        .collect();
                    body.push_str(&cells.join(","));
                    body.push('\n');
                }
            }
            Format::Json => {
                let records: Vec<serde_json::Value> = (0..len)
                    .map(|row| {
                        let mut map = serde_json::Map::new();
                        for (name, v) in &columns {
                            map.insert(
                                name.clone(),
                                serde_json::Value::from(format!("{:.9e}", v[row])),
                            );
                        }
                        serde_json::Value::Object(map)
                    })
                    .collect();
                body = serde_json::to_string_pretty(&records)
                    .map_err(|e| Error::InvalidArgument(e.to_string()))?;
                body.push('\n');
            }
        }

        let path = dir.join(format!("{stem}.{}", format.extension()));
        write_atomic(&path, body.as_bytes())?;
        Ok(path)
    }
}

impl Default for Dataset {
    fn default() -> Self {
        Self::new()
    }
}

/// Write via a temp file in the same directory, then rename into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    fs::create_dir_all(dir)?;
    let file_name = path
        .file_name()
        .and_then(|n| n.to_str())
        .ok_or_else(|| Error::InvalidArgument(format!("bad output path {path:?}")))?;
    let tmp = dir.join(format!(".{file_name}.tmp"));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout_and_unit_scaling() {
        let mut ds = Dataset::new();
        ds.push_time("t", vec![0.0, 1.0]);
        ds.push("p", vec![0.5, 0.25]);
        let dir = std::env::temp_dir().join("photon-shaping-output-test");
        let unit = UnitScale { label: "ns".into(), correlation_time: 7.0 };
        let path = ds.write(&dir, "curve", Format::Csv, Some(&unit)).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "t_ns,p");
        assert!(lines.next().unwrap().starts_with("0.000000000e0,5.000000000e-1"));
        assert!(lines.next().unwrap().starts_with("7.000000000e0,"));
        fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn json_records() {
        let mut ds = Dataset::new();
        ds.push_time("dt", vec![2.0]);
        ds.push("g2", vec![3.5]);
        let dir = std::env::temp_dir().join("photon-shaping-output-test-json");
        let path = ds.write(&dir, "g2", Format::Json, None).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let parsed: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.len(), 1);
        assert_eq!(parsed[0]["g2"], "3.500000000e0");
        fs::remove_dir_all(&dir).ok();
    }
}
