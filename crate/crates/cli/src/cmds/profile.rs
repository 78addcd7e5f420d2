//! `phasectl profile`: population versus control phase at pulse turn-off.
//!
//! Rows scan the laser phase phi uniformly over [0, 2pi) and report
//! Phi = phi + (theta_h - theta_f), so `--mu-sign -` emits the `+` profile
//! shifted by pi.

use std::f64::consts::{PI, TAU};

use phasectl::analytic::rho22_analytic;
use phasectl::bloch_ode::{advance, default_step};
use phasectl::domain::{rho22_of, BlochState, PathwaySet, Relaxation};
use phasectl::drive::effective_drive;
use phasectl::scan::Method;

use crate::cmds::{emit, parse_method, require};
use crate::config::Config;
use crate::opts::ProfileArgs;
use crate::{csvfmt, CliError, CliResult};

pub struct ProfileParams {
    pub mag: f64,
    pub relax: Relaxation,
    pub t_off: f64,
    pub n_phi: usize,
    pub method: Method,
    pub theta_diff: f64,
}

/// (Phi, omega_eff, rho22) rows over the laser-phase grid.
pub fn profile_rows(params: &ProfileParams) -> CliResult<Vec<(f64, f64, f64)>> {
    let mut rows = Vec::with_capacity(params.n_phi);
    for i in 0..params.n_phi {
        let phi = TAU * (i as f64 / params.n_phi as f64);
        let pathways = PathwaySet::new(params.mag, params.theta_diff, params.mag, 0.0, phi)?;
        let drive = effective_drive(&pathways);
        let rho = match params.method {
            Method::Analytic => {
                rho22_analytic(drive.omega_eff, params.relax.gamma_p, params.t_off)?
            }
            Method::Ode => {
                let h = default_step(&drive, &params.relax);
                let state = advance(BlochState::GROUND, &drive, &params.relax, h, params.t_off)?;
                rho22_of(&state)?
            }
        };
        rows.push((drive.cap_phi, drive.omega_eff, rho));
    }
    Ok(rows)
}

pub fn degree_of_control(rows: &[(f64, f64, f64)]) -> f64 {
    let max = rows.iter().fold(f64::NEG_INFINITY, |a, r| a.max(r.2));
    let min = rows.iter().fold(f64::INFINITY, |a, r| a.min(r.2));
    max - min
}

pub fn run(args: ProfileArgs) -> CliResult<()> {
    let mut cfg = Config::load(args.config.as_deref())?;
    let mag = cfg.merge(args.mag, "mag")?;
    let gamma_p = cfg.merge(args.gamma_p, "gamma-p")?.unwrap_or(0.0);
    let t_off = cfg.merge(args.t_off, "t-off")?;
    let n_phi = cfg.merge(args.n_phi, "n-phi")?.unwrap_or(64);
    let method = cfg.merge(args.method, "method")?;
    let mu_sign = cfg.merge(args.mu_sign, "mu-sign")?;
    cfg.finish()?;

    let mag = require(mag, "mag")?;
    let t_off = require(t_off, "t-off")?;
    let method = parse_method(method)?;
    let theta_diff = match mu_sign.as_deref() {
        None | Some("+") => 0.0,
        Some("-") => PI,
        Some(other) => {
            return Err(CliError::usage(format!(
                "--mu-sign must be `+` or `-`, got {other:?}"
            )));
        }
    };
    if n_phi < 2 {
        return Err(CliError::usage("--n-phi must be at least 2"));
    }
    if !(t_off.is_finite() && t_off >= 0.0) {
        return Err(CliError::usage("--t-off must be a nonnegative time"));
    }
    let relax = Relaxation::pure_dephasing(gamma_p).map_err(|e| CliError::usage(e.to_string()))?;
    if !(mag.is_finite() && mag >= 0.0) {
        return Err(CliError::usage("--mag must be a nonnegative magnitude"));
    }

    let params = ProfileParams {
        mag,
        relax,
        t_off,
        n_phi,
        method,
        theta_diff,
    };
    let rows = profile_rows(&params)?;
    let csv = csvfmt::profile_csv(&rows, degree_of_control(&rows));
    emit(None, &csv)
}
