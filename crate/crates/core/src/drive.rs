//! Effective single-mode drive from two-pathway field data.
//!
//! Two excitation pathways with Rabi amplitudes `mag_a e^{i theta_a}` and
//! `mag_b e^{i theta_b}` and relative laser phase `phi` add coherently to a
//! single drive `omega_eff e^{i theta}`; the interference is controlled by
//! `Phi = phi + theta_a - theta_b`.

use num_complex::Complex64;

use crate::domain::{ComplexAmp, EffectiveDrive, LaserField, LevelTriple, PathwaySet};
use crate::error::{Error, Result};

/// Absolute guard on each energy denominator (dimensionless units); smaller
/// magnitudes indicate a near-resonant intermediate level.
pub const RESONANCE_GUARD: f64 = 1e-12;

/// Below this drive magnitude the effective phase is reported as 0; the
/// phase is physically irrelevant when the drive vanishes.
pub const PHASE_CUTOFF: f64 = 1e-12;

/// Effective three-photon matrix element: the sum over intermediate-level
/// pairs of `mu_1n mu_nm mu_m2 / [(omega_n1 - omega_f)(omega_f - omega_2m)]`
/// with prefactor 1/4 (from 1/(2 hbar)^2 at hbar = 1).
///
/// The triple list is taken as given; no deduplication is attempted.
pub fn three_photon_moment(triples: &[LevelTriple], omega_f: f64) -> Result<ComplexAmp> {
    if !omega_f.is_finite() {
        return Err(Error::NonFinite {
            name: "omega_f",
            value: omega_f,
        });
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for (index, triple) in triples.iter().enumerate() {
        let d_n = triple.omega_n1 - omega_f;
        let d_m = omega_f - triple.omega_2m;
        if d_n.abs() <= RESONANCE_GUARD {
            return Err(Error::ResonantDenominator {
                index,
                factor: "omega_n1 - omega_f",
                value: d_n,
                guard: RESONANCE_GUARD,
            });
        }
        if d_m.abs() <= RESONANCE_GUARD {
            return Err(Error::ResonantDenominator {
                index,
                factor: "omega_f - omega_2m",
                value: d_m,
                guard: RESONANCE_GUARD,
            });
        }
        let product = Complex64::from(triple.mu_1n)
            * Complex64::from(triple.mu_nm)
            * Complex64::from(triple.mu_m2);
        sum += product / (d_n * d_m);
    }
    Ok(ComplexAmp::from(0.25 * sum))
}

/// Pathway amplitudes for N-photon (field_h, matrix element `mu`) versus
/// M-photon (field_f, matrix element `mu3`) excitation:
/// `mag = |mu| * amplitude^photons`, `theta = arg(mu)`, and the relative
/// phase `phi = N phase_h - M phase_f`.
pub fn pathways_from_fields(
    field_h: &LaserField,
    field_f: &LaserField,
    mu: ComplexAmp,
    mu3: ComplexAmp,
    n_photons_a: u32,
    n_photons_b: u32,
) -> Result<PathwaySet> {
    if n_photons_a == 0 {
        return Err(Error::ZeroPhotonCount { pathway: "a" });
    }
    if n_photons_b == 0 {
        return Err(Error::ZeroPhotonCount { pathway: "b" });
    }
    if mu.abs() == 0.0 && field_h.amplitude > 0.0 {
        return Err(Error::ZeroMatrixElement { pathway: "a" });
    }
    if mu3.abs() == 0.0 && field_f.amplitude > 0.0 {
        return Err(Error::ZeroMatrixElement { pathway: "b" });
    }
    let mag_a = mu.abs() * field_h.amplitude.powi(n_photons_a as i32);
    let mag_b = mu3.abs() * field_f.amplitude.powi(n_photons_b as i32);
    let phi = n_photons_a as f64 * field_h.phase - n_photons_b as f64 * field_f.phase;
    PathwaySet::new(mag_a, mu.arg(), mag_b, mu3.arg(), phi)
}

/// Coherent sum of the two pathway amplitudes.
///
/// `omega_eff` comes from the interference form
/// `sqrt(mag_a^2 + mag_b^2 + 2 mag_a mag_b cos Phi)`; `theta` is the
/// two-argument arctangent of the summed complex amplitude, which stays
/// defined where the tangent-ratio expression blows up.
pub fn effective_drive(p: &PathwaySet) -> EffectiveDrive {
    let cap_phi = p.phi + p.theta_a - p.theta_b;
    let squared = p.mag_a * p.mag_a + p.mag_b * p.mag_b + 2.0 * p.mag_a * p.mag_b * cap_phi.cos();
    // Cancellation can push the square a few ulp below zero.
    let omega_eff = squared.max(0.0).sqrt();
    let theta = if omega_eff < PHASE_CUTOFF {
        0.0
    } else {
        let re = p.mag_a * (p.phi + p.theta_a).cos() + p.mag_b * p.theta_b.cos();
        let im = p.mag_a * (p.phi + p.theta_a).sin() + p.mag_b * p.theta_b.sin();
        im.atan2(re)
    };
    EffectiveDrive {
        omega_eff,
        theta,
        cap_phi,
    }
}
