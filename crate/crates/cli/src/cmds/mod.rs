pub mod evolve;
pub mod mu3;
pub mod profile;
pub mod sweep;

use phasectl::scan::Method;

use crate::{CliError, CliResult};

pub fn parse_method(raw: Option<String>) -> CliResult<Method> {
    match raw.as_deref() {
        None | Some("analytic") => Ok(Method::Analytic),
        Some("ode") => Ok(Method::Ode),
        Some(other) => Err(CliError::usage(format!(
            "--method must be `analytic` or `ode`, got {other:?}"
        ))),
    }
}

pub fn require<T>(value: Option<T>, flag: &str) -> CliResult<T> {
    value.ok_or_else(|| CliError::usage(format!("missing required flag --{flag}")))
}

/// Write to the file when given, stdout otherwise.
pub fn emit(out: Option<&std::path::Path>, contents: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, contents)
            .map_err(|e| CliError::runtime(format!("cannot write {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(contents.as_bytes())
                .map_err(CliError::from)
        }
    }
}
