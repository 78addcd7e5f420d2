//! Core value types and validation.
//!
//! Everything is an immutable `Copy` value in dimensionless units
//! (hbar = 1); types are safe to share across threads freely.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Slack for physical bounds: within it values are clamped as round-off,
/// beyond it they are rejected as integrator blow-up.
pub const BOUND_EPS: f64 = 1e-9;

/// Tolerance on the equilibrium-population trace.
pub const TRACE_EPS: f64 = 1e-12;

fn ensure_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { name, value })
    }
}

fn ensure_nonnegative(name: &'static str, value: f64) -> Result<f64> {
    ensure_finite(name, value)?;
    if value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::Negative { name, value })
    }
}

/// Complex transition amplitude (dimensionless). Holds the one-photon and
/// effective multi-photon matrix elements, which may be complex for
/// transitions into a continuum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexAmp {
    pub re: f64,
    pub im: f64,
}

impl ComplexAmp {
    pub const ZERO: ComplexAmp = ComplexAmp { re: 0.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Result<Self> {
        ensure_finite("re", re)?;
        ensure_finite("im", im)?;
        Ok(ComplexAmp { re, im })
    }

    /// Purely real amplitude.
    pub fn real(re: f64) -> Result<Self> {
        Self::new(re, 0.0)
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Principal argument in (-pi, pi]; 0 for the zero amplitude.
    pub fn arg(self) -> f64 {
        if self.re == 0.0 && self.im == 0.0 {
            0.0
        } else {
            self.im.atan2(self.re)
        }
    }
}

impl From<ComplexAmp> for Complex64 {
    fn from(a: ComplexAmp) -> Self {
        Complex64::new(a.re, a.im)
    }
}

impl From<Complex64> for ComplexAmp {
    fn from(z: Complex64) -> Self {
        ComplexAmp { re: z.re, im: z.im }
    }
}

/// One linearly polarized CW field: real amplitude, phase and angular
/// frequency, all dimensionless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaserField {
    pub amplitude: f64,
    pub phase: f64,
    pub frequency: f64,
}

impl LaserField {
    pub fn new(amplitude: f64, phase: f64, frequency: f64) -> Result<Self> {
        ensure_nonnegative("amplitude", amplitude)?;
        ensure_finite("phase", phase)?;
        ensure_finite("frequency", frequency)?;
        Ok(LaserField {
            amplitude,
            phase,
            frequency,
        })
    }
}

/// Magnitudes and phases of the two interfering Rabi amplitudes plus the
/// controllable relative laser phase `phi`.
///
/// For real matrix elements `theta_a` and `theta_b` are each 0 or pi; the
/// constructor does not enforce that, since complex matrix elements are
/// legal inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathwaySet {
    /// |Omega_h|-role magnitude (angular frequency, >= 0).
    pub mag_a: f64,
    /// Phase of pathway a's matrix element.
    pub theta_a: f64,
    /// |Omega_f|-role magnitude (>= 0).
    pub mag_b: f64,
    /// Phase of pathway b's matrix element.
    pub theta_b: f64,
    /// Controllable relative laser phase.
    pub phi: f64,
}

impl PathwaySet {
    pub fn new(mag_a: f64, theta_a: f64, mag_b: f64, theta_b: f64, phi: f64) -> Result<Self> {
        ensure_nonnegative("mag_a", mag_a)?;
        ensure_nonnegative("mag_b", mag_b)?;
        ensure_finite("theta_a", theta_a)?;
        ensure_finite("theta_b", theta_b)?;
        ensure_finite("phi", phi)?;
        Ok(PathwaySet {
            mag_a,
            theta_a,
            mag_b,
            theta_b,
            phi,
        })
    }
}

/// The single-mode-equivalent drive: the coherent sum of the two pathway
/// amplitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveDrive {
    /// Effective Rabi frequency (>= 0).
    pub omega_eff: f64,
    /// Effective drive phase theta (0 by convention when omega_eff vanishes).
    pub theta: f64,
    /// Control phase Phi = phi + theta_a - theta_b.
    pub cap_phi: f64,
}

impl EffectiveDrive {
    /// Drive specified directly by its effective Rabi frequency, bypassing
    /// the two-pathway construction (theta = Phi = 0).
    pub fn from_omega(omega_eff: f64) -> Result<Self> {
        ensure_nonnegative("omega_eff", omega_eff)?;
        Ok(EffectiveDrive {
            omega_eff,
            theta: 0.0,
            cap_phi: 0.0,
        })
    }
}

/// Relaxation parameters of the generalized Bloch equations: pure dephasing
/// `gamma_p`, population decay `gamma_d`, common detuning `delta`, and the
/// zero-drive equilibrium populations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Relaxation {
    pub gamma_p: f64,
    pub gamma_d: f64,
    pub delta: f64,
    pub sigma_1e: f64,
    pub sigma_2e: f64,
}

impl Relaxation {
    pub fn new(
        gamma_p: f64,
        gamma_d: f64,
        delta: f64,
        sigma_1e: f64,
        sigma_2e: f64,
    ) -> Result<Self> {
        validate_relaxation(Relaxation {
            gamma_p,
            gamma_d,
            delta,
            sigma_1e,
            sigma_2e,
        })
    }

    /// On-resonance pure dephasing: gamma_d = delta = 0, ground-state
    /// equilibrium.
    pub fn pure_dephasing(gamma_p: f64) -> Result<Self> {
        Self::new(gamma_p, 0.0, 0.0, 1.0, 0.0)
    }

    /// Equilibrium inversion w_e = sigma_2e - sigma_1e.
    pub fn w_e(&self) -> f64 {
        self.sigma_2e - self.sigma_1e
    }

    /// Transverse relaxation rate 1/T2 = gamma_d + gamma_p.
    pub fn t2_rate(&self) -> f64 {
        self.gamma_d + self.gamma_p
    }

    /// Longitudinal relaxation rate 1/T1 = gamma_d (0 means no T1 term).
    pub fn t1_rate(&self) -> f64 {
        self.gamma_d
    }
}

/// Returns `r` unchanged when every invariant holds.
pub fn validate_relaxation(r: Relaxation) -> Result<Relaxation> {
    ensure_nonnegative("gamma_p", r.gamma_p)?;
    ensure_nonnegative("gamma_d", r.gamma_d)?;
    ensure_finite("delta", r.delta)?;
    ensure_finite("sigma_1e", r.sigma_1e)?;
    ensure_finite("sigma_2e", r.sigma_2e)?;
    let in_range = |p: f64| (0.0..=1.0).contains(&p);
    if !in_range(r.sigma_1e)
        || !in_range(r.sigma_2e)
        || (r.sigma_1e + r.sigma_2e - 1.0).abs() > TRACE_EPS
    {
        return Err(Error::BadEquilibrium {
            sigma_1e: r.sigma_1e,
            sigma_2e: r.sigma_2e,
        });
    }
    Ok(r)
}

/// Bloch vector in the effective-drive frame: u and v are twice the real and
/// imaginary parts of the rotated coherence, w is the population inversion
/// sigma_22 - sigma_11.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochState {
    pub u: f64,
    pub v: f64,
    pub w: f64,
}

impl BlochState {
    /// Ground state with no coherence: (0, 0, -1).
    pub const GROUND: BlochState = BlochState {
        u: 0.0,
        v: 0.0,
        w: -1.0,
    };

    pub fn new(u: f64, v: f64, w: f64) -> Self {
        BlochState { u, v, w }
    }

    pub fn norm_sq(&self) -> f64 {
        self.u * self.u + self.v * self.v + self.w * self.w
    }
}

/// Excited-state population (1 + w) / 2, clamped to [0, 1] when within
/// round-off of the boundary and rejected beyond it.
pub fn rho22_of(state: &BlochState) -> Result<f64> {
    let w = state.w;
    if !w.is_finite() || w.abs() > 1.0 + BOUND_EPS {
        return Err(Error::UnphysicalInversion { w });
    }
    Ok((0.5 * (1.0 + w)).clamp(0.0, 1.0))
}

/// One intermediate-level pair contributing to the effective three-photon
/// matrix element: dipole factors mu_1n, mu_nm, mu_m2 and the level
/// frequencies omega_n1, omega_2m.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelTriple {
    pub mu_1n: ComplexAmp,
    pub mu_nm: ComplexAmp,
    pub mu_m2: ComplexAmp,
    pub omega_n1: f64,
    pub omega_2m: f64,
}

impl LevelTriple {
    pub fn new(
        mu_1n: ComplexAmp,
        mu_nm: ComplexAmp,
        mu_m2: ComplexAmp,
        omega_n1: f64,
        omega_2m: f64,
    ) -> Result<Self> {
        ensure_finite("omega_n1", omega_n1)?;
        ensure_finite("omega_2m", omega_2m)?;
        Ok(LevelTriple {
            mu_1n,
            mu_nm,
            mu_m2,
            omega_n1,
            omega_2m,
        })
    }
}
