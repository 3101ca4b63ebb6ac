//! Optional TOML file with default caps and bounds for the command line.
//!
//! ```toml
//! [seq]
//! count = 20
//! form = "numeral"
//!
//! [tree]
//! depth = 6
//!
//! [fibs]
//! cap = 400          # omit to use 10 * (start digits) + 100
//! max_digits = 12
//! ```
//!
//! Every key is optional and flags on the command line win.

use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid config {path}: {source}")]
    Parse {
        path: String,
        source: toml::de::Error,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub seq: SeqDefaults,
    pub tree: TreeDefaults,
    pub fibs: FibsDefaults,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SeqDefaults {
    pub count: usize,
    pub form: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TreeDefaults {
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FibsDefaults {
    pub cap: Option<usize>,
    pub max_digits: usize,
}

impl Default for SeqDefaults {
    fn default() -> Self {
        SeqDefaults {
            count: 10,
            form: None,
        }
    }
}

impl Default for TreeDefaults {
    fn default() -> Self {
        TreeDefaults { depth: 5 }
    }
}

impl Default for FibsDefaults {
    fn default() -> Self {
        FibsDefaults {
            cap: None,
            max_digits: 8,
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, ConfigError> {
        let path = path.as_ref();
        let shown = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: shown.clone(),
            source,
        })?;
        Self::from_toml(&text).map_err(|source| ConfigError::Parse {
            path: shown,
            source,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_gives_defaults() {
        assert_eq!(Config::from_toml("").unwrap(), Config::default());
    }

    #[test]
    fn partial_override() {
        let c = Config::from_toml("[fibs]\ncap = 40\n[tree]\ndepth = 3\n").unwrap();
        assert_eq!(c.fibs.cap, Some(40));
        assert_eq!(c.fibs.max_digits, 8);
        assert_eq!(c.tree.depth, 3);
        assert_eq!(c.seq.count, 10);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(Config::from_toml("[fibs]\ncapp = 1\n").is_err());
    }
}
