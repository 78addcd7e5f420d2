//! `phasectl evolve`: Bloch-vector time series as CSV.

use phasectl::bloch_ode::OdeParams;
use phasectl::domain::{EffectiveDrive, PathwaySet, Relaxation};
use phasectl::drive::effective_drive;
use phasectl::scan::{time_series_with_step, Method};

use crate::cmds::{emit, parse_method, require};
use crate::config::Config;
use crate::opts::EvolveArgs;
use crate::{csvfmt, CliError, CliResult};

pub fn run(args: EvolveArgs) -> CliResult<()> {
    let mut cfg = Config::load(args.config.as_deref())?;
    let omega_eff = cfg.merge(args.omega_eff, "omega-eff")?;
    let omega_h = cfg.merge(args.omega_h, "omega-h")?;
    let theta_h = cfg.merge(args.theta_h, "theta-h")?;
    let omega_f = cfg.merge(args.omega_f, "omega-f")?;
    let theta_f = cfg.merge(args.theta_f, "theta-f")?;
    let phi = cfg.merge(args.phi, "phi")?;
    let gamma_p = cfg.merge(args.gamma_p, "gamma-p")?.unwrap_or(0.0);
    let gamma_d = cfg.merge(args.gamma_d, "gamma-d")?.unwrap_or(0.0);
    let delta = cfg.merge(args.delta, "delta")?.unwrap_or(0.0);
    let t_end = cfg.merge(args.t_end, "t-end")?;
    let samples = cfg.merge(args.samples, "samples")?.unwrap_or(201);
    let method = cfg.merge(args.method, "method")?;
    let step = cfg.merge(args.step, "step")?;
    let out = cfg.merge(args.out, "out")?;
    cfg.finish()?;

    let method = parse_method(method)?;
    let t_end = require(t_end, "t-end")?;

    let pathway_flags = [&omega_h, &theta_h, &omega_f, &theta_f, &phi]
        .iter()
        .any(|o| o.is_some());
    let drive = match (omega_eff, pathway_flags) {
        (Some(_), true) => {
            return Err(CliError::usage(
                "--omega-eff conflicts with the pathway flags \
                 --omega-h/--theta-h/--omega-f/--theta-f/--phi",
            ));
        }
        (Some(omega), false) => {
            EffectiveDrive::from_omega(omega).map_err(|e| CliError::usage(e.to_string()))?
        }
        (None, true) => {
            let pathways = PathwaySet::new(
                omega_h.unwrap_or(0.0),
                theta_h.unwrap_or(0.0),
                omega_f.unwrap_or(0.0),
                theta_f.unwrap_or(0.0),
                phi.unwrap_or(0.0),
            )
            .map_err(|e| CliError::usage(e.to_string()))?;
            effective_drive(&pathways)
        }
        (None, false) => {
            return Err(CliError::usage(
                "specify --omega-eff, or pathway data via --omega-h/--omega-f",
            ));
        }
    };

    // Decay relaxes toward the ground state; equilibrium populations are
    // fixed at (sigma_1e, sigma_2e) = (1, 0).
    let relax = Relaxation::new(gamma_p, gamma_d, delta, 1.0, 0.0)
        .map_err(|e| CliError::usage(e.to_string()))?;

    if method == Method::Analytic {
        if delta != 0.0 || gamma_d != 0.0 {
            return Err(CliError::usage(
                "--method analytic requires --delta 0 and --gamma-d 0; \
                 use --method ode for the generalized equations",
            ));
        }
        if step.is_some() {
            return Err(CliError::usage("--step applies only to --method ode"));
        }
    }
    if let Some(step) = step {
        // Surface step problems as flag errors before running.
        OdeParams::new(drive, relax, step, t_end).map_err(|e| CliError::usage(e.to_string()))?;
    }
    if samples < 2 {
        return Err(CliError::usage("--samples must be at least 2"));
    }
    if !(t_end.is_finite() && t_end >= 0.0) {
        return Err(CliError::usage("--t-end must be a nonnegative time"));
    }

    let series = time_series_with_step(&drive, &relax, t_end, samples, method, step)?;
    let csv = csvfmt::series_csv(&series)?;
    emit(out.as_deref(), &csv)
}
