//! Plain `key = value` config files. Keys are the long flag names of the
//! invoked subcommand; `#` starts a comment; blank lines are ignored.
//! Command-line flags override file values; unknown keys are usage errors.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use crate::{CliError, CliResult};

#[derive(Debug, Default)]
pub struct Config {
    values: BTreeMap<String, String>,
}

impl Config {
    pub fn load(path: Option<&Path>) -> CliResult<Self> {
        let Some(path) = path else {
            return Ok(Config::default());
        };
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::usage(format!("cannot read config file {}: {e}", path.display()))
        })?;
        let mut values = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::usage(format!(
                    "config line {}: expected `key = value`, got {line:?}",
                    lineno + 1
                )));
            };
            values.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Config { values })
    }

    /// Resolve one option: a flag given on the command line wins; otherwise
    /// the config value is parsed. Either way the key is consumed.
    pub fn merge<T>(&mut self, flag: Option<T>, key: &str) -> CliResult<Option<T>>
    where
        T: FromStr,
        T::Err: Display,
    {
        let file_value = self.values.remove(key);
        if flag.is_some() {
            return Ok(flag);
        }
        match file_value {
            None => Ok(None),
            Some(raw) => raw.parse().map(Some).map_err(|e| {
                CliError::usage(format!("config: invalid value for {key}: {raw:?} ({e})"))
            }),
        }
    }

    /// Reject leftover keys so typos do not silently drop settings.
    pub fn finish(self) -> CliResult<()> {
        if self.values.is_empty() {
            Ok(())
        } else {
            let keys: Vec<_> = self.values.keys().cloned().collect();
            Err(CliError::usage(format!(
                "config: unknown key(s) for this subcommand: {}",
                keys.join(", ")
            )))
        }
    }
}
