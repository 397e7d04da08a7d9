//! Compute budgets and output settings, read from a TOML file.
//!
//! ```toml
//! homfly_crossing_cap = 16
//! theta_state_cap = 1000000
//! output_format = "json"
//! ```
//!
//! Missing keys take the defaults above. The camelCase spellings
//! (`homflyCrossingCap`, ...) are accepted too.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homfly::DEFAULT_CROSSING_CAP;

/// Environment variable naming a config file.
pub const CONFIG_ENV: &str = "KNOTGRID_CONFIG";

pub const DEFAULT_THETA_STATE_CAP: usize = 1_000_000;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("bad config: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("{0} must be positive")]
    NonPositive(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    #[serde(alias = "homflyCrossingCap")]
    pub homfly_crossing_cap: usize,
    #[serde(alias = "thetaStateCap")]
    pub theta_state_cap: usize,
    #[serde(alias = "outputFormat")]
    pub output_format: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            homfly_crossing_cap: DEFAULT_CROSSING_CAP,
            theta_state_cap: DEFAULT_THETA_STATE_CAP,
            output_format: OutputFormat::Json,
        }
    }
}

impl Config {
    pub fn from_toml(s: &str) -> Result<Self, ConfigError> {
        let c: Config = toml::from_str(s)?;
        c.validate()?;
        Ok(c)
    }

    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let s = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_toml(&s)
    }

    /// The file named by `explicit`, else by `$KNOTGRID_CONFIG`, else the
    /// defaults.
    pub fn load(explicit: Option<&Path>) -> Result<Self, ConfigError> {
        if let Some(p) = explicit {
            return Self::from_file(p);
        }
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Self::from_file(Path::new(&p)),
            _ => Ok(Self::default()),
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.homfly_crossing_cap == 0 {
            return Err(ConfigError::NonPositive("homfly_crossing_cap"));
        }
        if self.theta_state_cap == 0 {
            return Err(ConfigError::NonPositive("theta_state_cap"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_overrides() {
        assert_eq!(Config::from_toml("").unwrap(), Config::default());
        let c = Config::from_toml("homflyCrossingCap = 20\noutput_format = \"text\"").unwrap();
        assert_eq!(c.homfly_crossing_cap, 20);
        assert_eq!(c.theta_state_cap, DEFAULT_THETA_STATE_CAP);
        assert_eq!(c.output_format, OutputFormat::Text);
        assert!(matches!(
            Config::from_toml("theta_state_cap = 0"),
            Err(ConfigError::NonPositive(_))
        ));
        assert!(Config::from_toml("bogus = 1").is_err());
        let round = toml::to_string(&c).unwrap();
        assert_eq!(Config::from_toml(&round).unwrap(), c);
    }
}
