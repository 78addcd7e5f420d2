//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("{name} must be nonnegative, got {value}")]
    Negative { name: &'static str, value: f64 },

    #[error("equilibrium populations must lie in [0, 1] and sum to 1: sigma_1e = {sigma_1e}, sigma_2e = {sigma_2e}")]
    BadEquilibrium { sigma_1e: f64, sigma_2e: f64 },

    #[error("unphysical inversion: |w| = {w} exceeds 1 beyond round-off")]
    UnphysicalInversion { w: f64 },

    #[error("level triple {index}: near-resonant denominator {factor} = {value} (|{factor}| must exceed {guard:e})")]
    ResonantDenominator {
        index: usize,
        factor: &'static str,
        value: f64,
        guard: f64,
    },

    #[error("pathway {pathway}: zero matrix element with nonzero field amplitude leaves the pathway phase undefined")]
    ZeroMatrixElement { pathway: &'static str },

    #[error("photon count for pathway {pathway} must be at least 1")]
    ZeroPhotonCount { pathway: &'static str },

    #[error("time must be nonnegative, got {t}")]
    NegativeTime { t: f64 },

    #[error("step must satisfy 0 < h <= t_end, got h = {step} with t_end = {t_end}")]
    BadStep { step: f64, t_end: f64 },

    #[error(
        "unstable step: h * max(omega_eff, gamma_p + gamma_d, |delta|) = {product} exceeds 0.1"
    )]
    UnstableStep { product: f64 },

    #[error("state norm {norm} exceeded 1 + 1e-6 at t = {t}; the step is too large")]
    NormExceeded { t: f64, norm: f64 },

    #[error("steady state is undetermined: the linear system is singular (no damping fixes some component)")]
    SingularSteadyState,

    #[error("profile has no samples")]
    EmptyProfile,

    #[error("need at least {min} {what}, got {got}")]
    TooFewPoints {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("analytic method requires delta = 0 and gamma_d = 0, got delta = {delta}, gamma_d = {gamma_d}")]
    AnalyticDomain { delta: f64, gamma_d: f64 },
}
