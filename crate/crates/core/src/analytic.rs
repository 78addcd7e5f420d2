//! Closed-form time evolution for the on-resonance, pure-dephasing case.
//!
//! With the system starting in the ground state (w = -1, no coherence) the
//! inversion obeys w'' + gamma_p w' + omega_eff^2 w = 0, so the excited-state
//! population has three closed forms depending on whether the dephasing rate
//! is below, at, or above twice the effective Rabi frequency. The coherence
//! component v follows by analytic differentiation (v = -w'/omega_eff); u
//! decouples and stays zero.

use crate::domain::BlochState;
use crate::error::{Error, Result};

/// Drives below this magnitude are treated as absent: the inversion stays
/// frozen at -1 and the population at 0.
pub const DRIVE_CUTOFF: f64 = 1e-12;

/// Relative half-width of the critical classification band. Near
/// gamma_p = 2 omega_eff both oscillatory and biexponential forms suffer
/// catastrophic cancellation; inside the band the critical formula is the
/// accurate stand-in (error O(band * t^2)).
const REGIME_BAND: f64 = 1e-9;

/// Damping regime of the inversion equation, carrying the regime's
/// characteristic rates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Regime {
    /// gamma_p < 2 omega_eff: damped oscillation at frequency
    /// s = sqrt(4 omega_eff^2 - gamma_p^2) / 2.
    Underdamped { s: f64 },
    /// gamma_p = 2 omega_eff (within the classification band).
    Critical,
    /// gamma_p > 2 omega_eff: biexponential with rates
    /// lambda_{1,2} = [-gamma_p +- sqrt(gamma_p^2 - 4 omega_eff^2)] / 2.
    Overdamped { lambda1: f64, lambda2: f64 },
}

/// Classify the damping regime of `(omega_eff, gamma_p)`.
///
/// The boundary carries a band of width `1e-9 * max(gamma_p, 2 omega_eff, 1)`
/// inside which the critical regime is reported.
pub fn classify_regime(omega_eff: f64, gamma_p: f64) -> Regime {
    debug_assert!(omega_eff >= 0.0 && gamma_p >= 0.0);
    let band = REGIME_BAND * gamma_p.max(2.0 * omega_eff).max(1.0);
    if gamma_p < 2.0 * omega_eff - band {
        // Factored discriminant keeps s accurate near the boundary.
        let s = 0.5 * ((2.0 * omega_eff - gamma_p) * (2.0 * omega_eff + gamma_p)).sqrt();
        Regime::Underdamped { s }
    } else if gamma_p > 2.0 * omega_eff + band {
        let root = ((gamma_p - 2.0 * omega_eff) * (gamma_p + 2.0 * omega_eff)).sqrt();
        Regime::Overdamped {
            lambda1: 0.5 * (-gamma_p + root),
            lambda2: 0.5 * (-gamma_p - root),
        }
    } else {
        Regime::Critical
    }
}

fn check_inputs(omega_eff: f64, gamma_p: f64, t: f64) -> Result<()> {
    if !omega_eff.is_finite() {
        return Err(Error::NonFinite {
            name: "omega_eff",
            value: omega_eff,
        });
    }
    if omega_eff < 0.0 {
        return Err(Error::Negative {
            name: "omega_eff",
            value: omega_eff,
        });
    }
    if !gamma_p.is_finite() {
        return Err(Error::NonFinite {
            name: "gamma_p",
            value: gamma_p,
        });
    }
    if gamma_p < 0.0 {
        return Err(Error::Negative {
            name: "gamma_p",
            value: gamma_p,
        });
    }
    if !t.is_finite() || t < 0.0 {
        return Err(Error::NegativeTime { t });
    }
    Ok(())
}

/// Inversion and coherence (w, v) at time t for the ground-state start.
fn wv_at(omega_eff: f64, gamma_p: f64, t: f64) -> (f64, f64) {
    if omega_eff < DRIVE_CUTOFF {
        return (-1.0, 0.0);
    }
    let decay = (-0.5 * gamma_p * t).exp();
    match classify_regime(omega_eff, gamma_p) {
        Regime::Underdamped { s } => {
            let (sin, cos) = (s * t).sin_cos();
            let w = -decay * (cos + 0.5 * gamma_p / s * sin);
            let v = -(omega_eff / s) * decay * sin;
            (w, v)
        }
        Regime::Critical => {
            let w = -decay * (1.0 + 0.5 * gamma_p * t);
            let v = -omega_eff * t * decay;
            (w, v)
        }
        Regime::Overdamped { lambda1, lambda2 } => {
            let e1 = (lambda1 * t).exp();
            let e2 = (lambda2 * t).exp();
            let w = (-lambda2 * e1 + lambda1 * e2) / (lambda2 - lambda1);
            let v = omega_eff * (e1 - e2) / (lambda2 - lambda1);
            (w, v)
        }
    }
}

/// Excited-state population at time `t >= 0`, starting from the ground
/// state, for drive `omega_eff` and pure dephasing `gamma_p`.
pub fn rho22_analytic(omega_eff: f64, gamma_p: f64, t: f64) -> Result<f64> {
    check_inputs(omega_eff, gamma_p, t)?;
    let (w, _) = wv_at(omega_eff, gamma_p, t);
    Ok((0.5 * (1.0 + w)).clamp(0.0, 1.0))
}

/// Full Bloch vector at time `t` for the ground-state start: u stays 0,
/// w comes from the closed form, v = -w'(t)/omega_eff by analytic
/// differentiation (0 when the drive vanishes).
pub fn bloch_analytic(omega_eff: f64, gamma_p: f64, t: f64) -> Result<BlochState> {
    check_inputs(omega_eff, gamma_p, t)?;
    let (w, v) = wv_at(omega_eff, gamma_p, t);
    Ok(BlochState::new(0.0, v, w))
}

/// Weak-field population: `mag_h^2 (1 + cos Phi) t^2 / 2` for equal pathway
/// magnitudes. Valid while `omega_eff * t` is small; the caller owns that
/// check.
pub fn rho22_weak_field(mag_h: f64, cap_phi: f64, t: f64) -> f64 {
    debug_assert!(mag_h >= 0.0 && t >= 0.0);
    0.5 * mag_h * mag_h * (1.0 + cap_phi.cos()) * t * t
}

/// Short-time population `omega_eff^2 t^2 / 4`, independent of dephasing.
pub fn rho22_short_time(omega_eff: f64, t: f64) -> f64 {
    debug_assert!(t >= 0.0);
    0.25 * omega_eff * omega_eff * t * t
}
