//! `phasectl sweep`: batch runs into an output directory plus an index CSV.
//! Runs are evaluated and written in ascending parameter-tuple order so the
//! directory contents are deterministic.

use std::f64::consts::TAU;
use std::path::Path;

use phasectl::scan::{
    sweep_fig1, Method, FIG1_GAMMAS, FIG1_SAMPLES, FIG1_T_END, FIG2_GAMMAS, FIG2_MAGS, FIG2_TOFFS,
};

use crate::cmds::profile::{degree_of_control, profile_rows, ProfileParams};
use crate::cmds::require;
use crate::config::Config;
use crate::csvfmt::{fmt_f64, fmt_param, profile_csv, series_csv};
use crate::opts::SweepArgs;
use crate::{CliError, CliResult};

fn parse_list(raw: &str, flag: &str) -> CliResult<Vec<f64>> {
    raw.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<f64>()
                .map_err(|e| CliError::usage(format!("--{flag}: invalid number {piece:?} ({e})")))
        })
        .collect()
}

/// Ascending, deduplicated parameter list.
fn sorted(mut values: Vec<f64>) -> Vec<f64> {
    values.sort_by(f64::total_cmp);
    values.dedup();
    values
}

fn write_file(dir: &Path, name: &str, contents: &str) -> CliResult<()> {
    let path = dir.join(name);
    std::fs::write(&path, contents)
        .map_err(|e| CliError::runtime(format!("cannot write {}: {e}", path.display())))
}

pub fn run(args: SweepArgs) -> CliResult<()> {
    let mut cfg = Config::load(args.config.as_deref())?;
    let preset = cfg.merge(args.preset, "preset")?;
    let out_dir = cfg.merge(args.out_dir, "out-dir")?;
    let omega_eff = cfg.merge(args.omega_eff, "omega-eff")?;
    let gammas = cfg.merge(args.gammas, "gammas")?;
    let t_end = cfg.merge(args.t_end, "t-end")?;
    let samples = cfg.merge(args.samples, "samples")?;
    let mags = cfg.merge(args.mags, "mags")?;
    let t_offs = cfg.merge(args.t_offs, "t-offs")?;
    let n_phi = cfg.merge(args.n_phi, "n-phi")?;
    cfg.finish()?;

    let preset = require(preset, "preset")?;
    let out_dir = require(out_dir, "out-dir")?;
    let gammas = gammas
        .as_deref()
        .map(|g| parse_list(g, "gammas"))
        .transpose()?;

    match preset.as_str() {
        "fig1" => {
            let omega_eff = omega_eff.unwrap_or(TAU);
            let gammas = sorted(gammas.unwrap_or_else(|| FIG1_GAMMAS.to_vec()));
            let t_end = t_end.unwrap_or(FIG1_T_END);
            let samples = samples.unwrap_or(FIG1_SAMPLES);
            run_fig1(&out_dir, omega_eff, &gammas, t_end, samples)
        }
        "fig2" => {
            let mags = sorted(
                mags.as_deref()
                    .map(|m| parse_list(m, "mags"))
                    .transpose()?
                    .unwrap_or_else(|| FIG2_MAGS.to_vec()),
            );
            let gammas = sorted(gammas.unwrap_or_else(|| FIG2_GAMMAS.to_vec()));
            let t_offs = sorted(
                t_offs
                    .as_deref()
                    .map(|t| parse_list(t, "t-offs"))
                    .transpose()?
                    .unwrap_or_else(|| FIG2_TOFFS.to_vec()),
            );
            let n_phi = n_phi.unwrap_or(64);
            run_fig2(&out_dir, &mags, &gammas, &t_offs, n_phi)
        }
        other => Err(CliError::usage(format!(
            "unknown preset {other:?}: expected fig1 or fig2"
        ))),
    }
}

fn run_fig1(
    out_dir: &Path,
    omega_eff: f64,
    gammas: &[f64],
    t_end: f64,
    samples: usize,
) -> CliResult<()> {
    let series = sweep_fig1(omega_eff, gammas, t_end, samples).map_err(CliError::from)?;
    std::fs::create_dir_all(out_dir)
        .map_err(|e| CliError::runtime(format!("cannot create {}: {e}", out_dir.display())))?;
    let mut index = String::from("file,omega_eff,gamma_p,t_end,samples\n");
    for (gamma_p, one) in gammas.iter().zip(&series) {
        let name = format!("fig1_gp{}.csv", fmt_param(*gamma_p));
        write_file(out_dir, &name, &series_csv(one)?)?;
        index.push_str(&format!(
            "{},{},{},{},{}\n",
            name,
            fmt_f64(omega_eff),
            fmt_f64(*gamma_p),
            fmt_f64(t_end),
            samples
        ));
    }
    write_file(out_dir, "index.csv", &index)
}

fn run_fig2(
    out_dir: &Path,
    mags: &[f64],
    gammas: &[f64],
    t_offs: &[f64],
    n_phi: usize,
) -> CliResult<()> {
    if n_phi < 2 {
        return Err(CliError::usage("--n-phi must be at least 2"));
    }
    // Validate every parameter before any file is touched.
    if let Some(bad) = mags.iter().find(|m| !(m.is_finite() && **m >= 0.0)) {
        return Err(CliError::usage(format!(
            "--mags entries must be nonnegative magnitudes, got {bad}"
        )));
    }
    if let Some(bad) = t_offs.iter().find(|t| !(t.is_finite() && **t >= 0.0)) {
        return Err(CliError::usage(format!(
            "--t-offs entries must be nonnegative times, got {bad}"
        )));
    }
    std::fs::create_dir_all(out_dir)
        .map_err(|e| CliError::runtime(format!("cannot create {}: {e}", out_dir.display())))?;
    let mut index = String::from("file,mag,gamma_p,t_off,degree_of_control\n");
    for &mag in mags {
        for &gamma_p in gammas {
            for &t_off in t_offs {
                let params = ProfileParams {
                    mag,
                    relax: phasectl::domain::Relaxation::pure_dephasing(gamma_p)
                        .map_err(|e| CliError::usage(e.to_string()))?,
                    t_off,
                    n_phi,
                    method: Method::Analytic,
                    theta_diff: 0.0,
                };
                let rows = profile_rows(&params)?;
                let c = degree_of_control(&rows);
                let name = format!(
                    "fig2_mag{}_gp{}_toff{}.csv",
                    fmt_param(mag),
                    fmt_param(gamma_p),
                    fmt_param(t_off)
                );
                write_file(out_dir, &name, &profile_csv(&rows, c))?;
                index.push_str(&format!(
                    "{},{},{},{},{}\n",
                    name,
                    fmt_f64(mag),
                    fmt_f64(gamma_p),
                    fmt_f64(t_off),
                    fmt_f64(c)
                ));
            }
        }
    }
    write_file(out_dir, "index.csv", &index)
}
