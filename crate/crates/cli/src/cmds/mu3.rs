//! `phasectl mu3`: sum the effective three-photon matrix element from a CSV
//! level table and print it as `re,im`.

use std::path::Path;

use phasectl::domain::{ComplexAmp, LevelTriple};
use phasectl::drive::three_photon_moment;
use phasectl::Error;

use crate::cmds::require;
use crate::config::Config;
use crate::opts::Mu3Args;
use crate::{CliError, CliResult};

/// Parsed rows with their 1-based line numbers (comments and blank lines
/// are skipped but keep counting).
fn parse_levels(path: &Path) -> CliResult<(Vec<LevelTriple>, Vec<usize>)> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        CliError::runtime(format!("cannot read levels file {}: {e}", path.display()))
    })?;
    let mut triples = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 8 {
            return Err(CliError::runtime(format!(
                "levels file line {lineno}: expected 8 comma-separated values \
                 (mu1n_re,mu1n_im,munm_re,munm_im,mum2_re,mum2_im,omega_n1,omega_2m), \
                 got {}",
                fields.len()
            )));
        }
        let mut nums = [0.0f64; 8];
        for (k, field) in fields.iter().enumerate() {
            nums[k] = field.parse().map_err(|e| {
                CliError::runtime(format!(
                    "levels file line {lineno}: non-numeric field {field:?} ({e})"
                ))
            })?;
        }
        let triple = LevelTriple::new(
            ComplexAmp::new(nums[0], nums[1]).map_err(runtime_at(lineno))?,
            ComplexAmp::new(nums[2], nums[3]).map_err(runtime_at(lineno))?,
            ComplexAmp::new(nums[4], nums[5]).map_err(runtime_at(lineno))?,
            nums[6],
            nums[7],
        )
        .map_err(runtime_at(lineno))?;
        triples.push(triple);
        lines.push(lineno);
    }
    Ok((triples, lines))
}

fn runtime_at(lineno: usize) -> impl Fn(Error) -> CliError {
    move |e| CliError::runtime(format!("levels file line {lineno}: {e}"))
}

pub fn run(args: Mu3Args) -> CliResult<()> {
    let mut cfg = Config::load(args.config.as_deref())?;
    let levels = cfg.merge(args.levels, "levels")?;
    let omega_f = cfg.merge(args.omega_f, "omega-f")?;
    cfg.finish()?;

    let levels = require(levels, "levels")?;
    let omega_f = require(omega_f, "omega-f")?;

    let (triples, lines) = parse_levels(&levels)?;
    let moment = three_photon_moment(&triples, omega_f).map_err(|e| match e {
        Error::ResonantDenominator { index, .. } => {
            CliError::runtime(format!("levels file line {}: {e}", lines[index]))
        }
        other => CliError::from(other),
    })?;
    println!("{},{}", moment.re, moment.im);
    Ok(())
}
