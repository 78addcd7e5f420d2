//! Two-pathway coherent control of a dephasing two-level system.
//!
//! Interference between an N-photon and an M-photon excitation pathway to
//! the same excited state is captured by a single effective drive
//! (Rabi frequency `omega_eff`, phase `theta`, control phase `Phi`). On
//! resonance with pure dephasing the excited-state population has a closed
//! form in all three damping regimes; the general detuned/decaying case is
//! integrated numerically. The two routes cross-validate each other.
//!
//! Module map:
//! - [`domain`]: value types (fields, pathways, relaxation rates, Bloch vector)
//!   and their validation.
//! - [`drive`]: effective-drive construction, including the perturbative
//!   three-photon matrix element.
//! - [`analytic`]: closed-form time evolution for the pure-dephasing,
//!   on-resonance case, with regime classification and limiting laws.
//! - [`bloch_ode`]: fixed-step RK4 integration of the (generalized) Bloch
//!   equations and the damped steady state. Serves as the independent
//!   numerical oracle for [`analytic`].
//! - [`scan`]: time series, phase-control profiles, degree of control, and
//!   batch sweeps.
//!
//! Units: hbar = 1 and all rates/frequencies are dimensionless; time is the
//! inverse frequency unit. Angles are radians and are not normalized.

pub mod analytic;
pub mod bloch_ode;
pub mod domain;
pub mod drive;
pub mod error;
pub mod scan;

pub use domain::{
    rho22_of, validate_relaxation, BlochState, ComplexAmp, EffectiveDrive, LaserField, LevelTriple,
    PathwaySet, Relaxation,
};
pub use error::{Error, Result};
