use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Environment variable naming a default config file.
pub const CONFIG_ENV: &str = "JONES2_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format {s:?} (expected json or text)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Text => "text",
        })
    }
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config file {path}: {message}")]
    Io { path: String, message: String },

    #[error("config line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("config line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },

    #[error("invalid configuration: {0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    /// Truncation degree `K` of the expansion.
    pub truncation_degree: usize,
    /// Word-length bound for the orbit span search.
    pub span_depth: usize,
    /// Word-length bound for the degree-1 orbit lattice.
    pub lattice_depth: usize,
    /// Word-length bound for the degree-2 commutator seeds.
    pub degree2_depth: usize,
    pub order_cap: u64,
    /// Largest `k` in the lower central series check.
    pub max_k: usize,
    pub format: Format,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            truncation_degree: 3,
            span_depth: 4,
            lattice_depth: 6,
            degree2_depth: 1,
            order_cap: 200,
            max_k: 6,
            format: Format::Json,
            seed: 0,
        }
    }
}

fn parse_value<T: FromStr>(line: usize, key: &str, value: &str) -> Result<T, ConfigError>
where
    T::Err: fmt::Display,
{
    value.parse().map_err(|e| ConfigError::Syntax {
        line,
        message: format!("bad value for {key}: {e}"),
    })
}

impl RunConfig {
    /// Applies `key = value` lines; blank lines and `#` comments are ignored.
    pub fn apply_text(&mut self, text: &str) -> Result<(), ConfigError> {
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| ConfigError::Syntax {
                line,
                message: format!("expected key = value, got {content:?}"),
            })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "truncation_degree" => self.truncation_degree = parse_value(line, key, value)?,
                "span_depth" => self.span_depth = parse_value(line, key, value)?,
                "lattice_depth" => self.lattice_depth = parse_value(line, key, value)?,
                "degree2_depth" => self.degree2_depth = parse_value(line, key, value)?,
                "order_cap" => self.order_cap = parse_value(line, key, value)?,
                "max_k" => self.max_k = parse_value(line, key, value)?,
                "format" => self.format = parse_value(line, key, value)?,
                "seed" => self.seed = parse_value(line, key, value)?,
                _ => {
                    return Err(ConfigError::UnknownKey {
                        line,
                        key: key.to_string(),
                    })
                }
            }
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        self.apply_text(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let positive = [
            ("span_depth", self.span_depth as u64),
            ("lattice_depth", self.lattice_depth as u64),
            ("degree2_depth", self.degree2_depth as u64),
            ("order_cap", self.order_cap),
            ("max_k", self.max_k as u64),
        ];
        for (name, v) in positive {
            if v == 0 {
                return Err(ConfigError::Invalid(format!("{name} must be at least 1")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_key_value_lines() {
        let mut c = RunConfig::default();
        c.apply_text("# run settings\nspan_depth = 2\n\norder_cap=50 # small\nformat = text\n")
            .unwrap();
        assert_eq!(c.span_depth, 2);
        assert_eq!(c.order_cap, 50);
        assert_eq!(c.format, Format::Text);
        assert_eq!(c.lattice_depth, 6);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        let mut c = RunConfig::default();
        assert!(matches!(
            c.apply_text("depth = 3"),
            Err(ConfigError::UnknownKey { line: 1, .. })
        ));
        assert!(matches!(
            c.apply_text("\nseed = x"),
            Err(ConfigError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            c.apply_text("seed"),
            Err(ConfigError::Syntax { .. })
        ));
    }

    #[test]
    fn validation() {
        assert!(RunConfig::default().validate().is_ok());
        let c = RunConfig {
            order_cap: 0,
            ..RunConfig::default()
        };
        assert!(c.validate().is_err());
    }
}
