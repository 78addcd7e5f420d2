//! Control experiments: population time series, phase-control profiles for
//! square pulses, degree-of-control metrics, and batch sweeps.
//!
//! A square pulse is the CW solution read out at the turn-off time; no
//! envelope convolution. Profiles scan the control phase Phi on a uniform
//! grid over [0, 2pi) — with an even point count the completely destructive
//! point Phi = pi is hit exactly.

use std::f64::consts::TAU;

use crate::analytic::{bloch_analytic, rho22_analytic};
use crate::bloch_ode::{advance, default_step};
use crate::domain::{rho22_of, BlochState, EffectiveDrive, PathwaySet, Relaxation};
use crate::drive::effective_drive;
use crate::error::{Error, Result};

/// Evaluation route: closed form (valid for delta = gamma_d = 0, ground
/// start) or RK4 integration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Analytic,
    Ode,
}

impl Method {
    pub fn tag(&self) -> &'static str {
        match self {
            Method::Analytic => "analytic",
            Method::Ode => "ode",
        }
    }
}

/// Default number of profile points. Even, so the grid lands exactly on
/// Phi = pi.
pub const DEFAULT_N_PHI: usize = 64;

/// Default dephasing rates for the time-series sweep (the plotted set is not
/// fixed by the model; this one spans all regimes at omega_eff = 2 pi,
/// including the exact critical point 4 pi).
pub const FIG1_GAMMAS: [f64; 5] = [
    0.0,
    std::f64::consts::PI,
    2.0 * std::f64::consts::PI,
    4.0 * std::f64::consts::PI,
    6.0 * std::f64::consts::PI,
];

/// Default horizon and sampling for the time-series sweep.
pub const FIG1_T_END: f64 = 2.0;
pub const FIG1_SAMPLES: usize = 201;

/// Profile-sweep grid: equal pathway magnitudes, dephasing rates and
/// turn-off times.
pub const FIG2_MAGS: [f64; 2] = [std::f64::consts::PI / 5.0, 2.0 * std::f64::consts::PI];
pub const FIG2_GAMMAS: [f64; 2] = [0.0, std::f64::consts::PI];
pub const FIG2_TOFFS: [f64; 4] = [0.25, 0.5, 0.75, 2.0];

/// Generating parameters of a time series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesMeta {
    pub drive: EffectiveDrive,
    pub relax: Relaxation,
    pub method: Method,
}

/// Bloch-vector samples on a uniform time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub times: Vec<f64>,
    pub states: Vec<BlochState>,
    pub meta: SeriesMeta,
}

impl TimeSeries {
    /// Excited-state population per sample.
    pub fn rho22(&self) -> Result<Vec<f64>> {
        self.states.iter().map(rho22_of).collect()
    }
}

/// Generating parameters of a profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileMeta {
    pub mag_a: f64,
    pub mag_b: f64,
    pub theta_diff: f64,
    pub relax: Relaxation,
    pub method: Method,
}

/// Excited-state population versus control phase at pulse turn-off.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    /// Phi grid, uniform over [0, 2pi).
    pub phis: Vec<f64>,
    pub rho22: Vec<f64>,
    pub t_off: f64,
    pub meta: ProfileMeta,
}

fn require_analytic_domain(relax: &Relaxation) -> Result<()> {
    if relax.delta != 0.0 || relax.gamma_d != 0.0 {
        return Err(Error::AnalyticDomain {
            delta: relax.delta,
            gamma_d: relax.gamma_d,
        });
    }
    Ok(())
}

fn check_horizon(t_end: f64) -> Result<()> {
    if !t_end.is_finite() || t_end < 0.0 {
        return Err(Error::NegativeTime { t: t_end });
    }
    Ok(())
}

/// Population/coherence time series on a uniform grid from 0 to `t_end`,
/// starting from the ground state, by the requested method with the given
/// RK4 step (None = default). The degenerate `t_end = 0` grid repeats the
/// initial state.
pub fn time_series_with_step(
    drive: &EffectiveDrive,
    relax: &Relaxation,
    t_end: f64,
    n_samples: usize,
    method: Method,
    step: Option<f64>,
) -> Result<TimeSeries> {
    if n_samples < 2 {
        return Err(Error::TooFewPoints {
            what: "time samples",
            min: 2,
            got: n_samples,
        });
    }
    check_horizon(t_end)?;
    let relax = crate::domain::validate_relaxation(*relax)?;
    let times: Vec<f64> = (0..n_samples)
        .map(|i| t_end * (i as f64 / (n_samples - 1) as f64))
        .collect();
    let states = match method {
        Method::Analytic => {
            require_analytic_domain(&relax)?;
            times
                .iter()
                .map(|&t| bloch_analytic(drive.omega_eff, relax.gamma_p, t))
                .collect::<Result<Vec<_>>>()?
        }
        Method::Ode => {
            let h = step.unwrap_or_else(|| default_step(drive, &relax));
            let mut states = Vec::with_capacity(n_samples);
            let mut state = BlochState::GROUND;
            states.push(state);
            for pair in times.windows(2) {
                state = advance(state, drive, &relax, h, pair[1] - pair[0])?;
                states.push(state);
            }
            states
        }
    };
    Ok(TimeSeries {
        times,
        states,
        meta: SeriesMeta {
            drive: *drive,
            relax,
            method,
        },
    })
}

/// As [`time_series_with_step`] with the default step.
pub fn time_series_from_drive(
    drive: &EffectiveDrive,
    relax: &Relaxation,
    t_end: f64,
    n_samples: usize,
    method: Method,
) -> Result<TimeSeries> {
    time_series_with_step(drive, relax, t_end, n_samples, method, None)
}

/// Time series for a two-pathway drive.
pub fn time_series(
    pathways: &PathwaySet,
    relax: &Relaxation,
    t_end: f64,
    n_samples: usize,
    method: Method,
) -> Result<TimeSeries> {
    let drive = effective_drive(pathways);
    time_series_from_drive(&drive, relax, t_end, n_samples, method)
}

/// Population at turn-off time `t_off` for each Phi on a uniform grid over
/// [0, 2pi). `theta_diff` = theta_a - theta_b enters through the pathway
/// construction (phi = Phi - theta_diff) and the metadata; the curve itself
/// depends on Phi only.
pub fn phase_profile(
    mag_a: f64,
    mag_b: f64,
    theta_diff: f64,
    relax: &Relaxation,
    t_off: f64,
    n_phi: usize,
    method: Method,
) -> Result<Profile> {
    if n_phi < 2 {
        return Err(Error::TooFewPoints {
            what: "phase samples",
            min: 2,
            got: n_phi,
        });
    }
    check_horizon(t_off)?;
    let relax = crate::domain::validate_relaxation(*relax)?;
    if method == Method::Analytic {
        require_analytic_domain(&relax)?;
    }
    let mut phis = Vec::with_capacity(n_phi);
    let mut rho22 = Vec::with_capacity(n_phi);
    for i in 0..n_phi {
        // i/n is exact for i = n/2, so even grids hit Phi = pi exactly.
        let cap_phi = TAU * (i as f64 / n_phi as f64);
        let pathways = PathwaySet::new(mag_a, theta_diff, mag_b, 0.0, cap_phi - theta_diff)?;
        let drive = effective_drive(&pathways);
        let rho = match method {
            Method::Analytic => rho22_analytic(drive.omega_eff, relax.gamma_p, t_off)?,
            Method::Ode => {
                let h = default_step(&drive, &relax);
                let state = advance(BlochState::GROUND, &drive, &relax, h, t_off)?;
                rho22_of(&state)?
            }
        };
        phis.push(cap_phi);
        rho22.push(rho);
    }
    Ok(Profile {
        phis,
        rho22,
        t_off,
        meta: ProfileMeta {
            mag_a,
            mag_b,
            theta_diff,
            relax,
            method,
        },
    })
}

/// Difference between the largest and smallest population over the profile.
pub fn degree_of_control(profile: &Profile) -> Result<f64> {
    if profile.rho22.is_empty() {
        return Err(Error::EmptyProfile);
    }
    let max = profile
        .rho22
        .iter()
        .fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    let min = profile.rho22.iter().fold(f64::INFINITY, |a, &b| a.min(b));
    Ok(max - min)
}

/// One analytic time series per dephasing rate, identical grids.
pub fn sweep_fig1(
    omega_eff: f64,
    gamma_list: &[f64],
    t_end: f64,
    n_samples: usize,
) -> Result<Vec<TimeSeries>> {
    let drive = EffectiveDrive::from_omega(omega_eff)?;
    gamma_list
        .iter()
        .map(|&gamma_p| {
            let relax = Relaxation::pure_dephasing(gamma_p)?;
            time_series_from_drive(&drive, &relax, t_end, n_samples, Method::Analytic)
        })
        .collect()
}

/// Cartesian product of equal-magnitude pathways, dephasing rates and
/// turn-off times, one analytic profile per tuple, in input order.
pub fn sweep_fig2(
    mag_list: &[f64],
    gamma_list: &[f64],
    t_off_list: &[f64],
    n_phi: usize,
) -> Result<Vec<Profile>> {
    let mut profiles = Vec::with_capacity(mag_list.len() * gamma_list.len() * t_off_list.len());
    for &mag in mag_list {
        for &gamma_p in gamma_list {
            let relax = Relaxation::pure_dephasing(gamma_p)?;
            for &t_off in t_off_list {
                profiles.push(phase_profile(
                    mag,
                    mag,
                    0.0,
                    &relax,
                    t_off,
                    n_phi,
                    Method::Analytic,
                )?);
            }
        }
    }
    Ok(profiles)
}
