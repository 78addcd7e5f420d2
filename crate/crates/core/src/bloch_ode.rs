//! Fixed-step RK4 integration of the (generalized) Bloch equations, plus the
//! damped steady state.
//!
//! The equations of motion in the effective-drive frame are
//!
//! ```text
//! du/dt = -delta v - u / T2
//! dv/dt =  delta u - v / T2 + omega_eff w
//! dw/dt = -(w - w_e) / T1  - omega_eff v
//! ```
//!
//! with 1/T2 = gamma_d + gamma_p and 1/T1 = gamma_d (no T1 term at
//! gamma_d = 0). At delta = gamma_d = 0 they reduce to the pure-dephasing
//! equations solved in closed form by [`crate::analytic`], which is what
//! makes this module an independent oracle for that one.
//!
//! Fixed-step RK4 keeps outputs bit-reproducible and makes the
//! convergence-order test trivial; the trajectories are smooth and bounded,
//! so adaptivity buys nothing here.

use crate::domain::{BlochState, EffectiveDrive, Relaxation};
use crate::error::{Error, Result};

/// Hard ceiling on `h * max(omega_eff, gamma_p + gamma_d, |delta|)`.
pub const STABILITY_LIMIT: f64 = 0.1;

/// Norm slack beyond the Bloch ball that flags a too-large step.
const NORM_SLACK: f64 = 1e-6;

/// Integration setup: drive, relaxation, step and horizon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeParams {
    pub drive: EffectiveDrive,
    pub relax: Relaxation,
    pub step: f64,
    pub t_end: f64,
}

impl OdeParams {
    pub fn new(drive: EffectiveDrive, relax: Relaxation, step: f64, t_end: f64) -> Result<Self> {
        if !t_end.is_finite() || t_end < 0.0 {
            return Err(Error::NegativeTime { t: t_end });
        }
        check_step(step, t_end, &drive, &relax)?;
        Ok(OdeParams {
            drive,
            relax,
            step,
            t_end,
        })
    }

    /// Params with the default step for these rates.
    pub fn with_default_step(drive: EffectiveDrive, relax: Relaxation, t_end: f64) -> Result<Self> {
        Self::new(drive, relax, default_step(&drive, &relax), t_end)
    }
}

fn max_rate(drive: &EffectiveDrive, relax: &Relaxation) -> f64 {
    drive
        .omega_eff
        .max(relax.gamma_p + relax.gamma_d)
        .max(relax.delta.abs())
}

/// Default step `min(1e-3, 0.02 / max(omega_eff, gamma_p + gamma_d, |delta|, 1))`.
pub fn default_step(drive: &EffectiveDrive, relax: &Relaxation) -> f64 {
    (1e-3f64).min(0.02 / max_rate(drive, relax).max(1.0))
}

fn check_step(step: f64, t_end: f64, drive: &EffectiveDrive, relax: &Relaxation) -> Result<()> {
    if !step.is_finite() || step <= 0.0 || (t_end > 0.0 && step > t_end) {
        return Err(Error::BadStep { step, t_end });
    }
    let product = step * max_rate(drive, relax);
    if product > STABILITY_LIMIT {
        return Err(Error::UnstableStep { product });
    }
    Ok(())
}

/// Time derivative of the Bloch vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochRate {
    pub du: f64,
    pub dv: f64,
    pub dw: f64,
}

impl BlochRate {
    pub fn max_abs(&self) -> f64 {
        self.du.abs().max(self.dv.abs()).max(self.dw.abs())
    }
}

/// Right-hand side of the equations of motion. The sign pair
/// (+omega_eff w in dv, -omega_eff v in dw) is fixed by requiring the
/// delta = gamma_d = 0 limit to match the closed-form solution exactly.
pub fn derivative(state: &BlochState, drive: &EffectiveDrive, relax: &Relaxation) -> BlochRate {
    let t2_rate = relax.t2_rate();
    let du = -relax.delta * state.v - t2_rate * state.u;
    let dv = relax.delta * state.u - t2_rate * state.v + drive.omega_eff * state.w;
    let mut dw = -drive.omega_eff * state.v;
    if relax.gamma_d > 0.0 {
        dw -= relax.gamma_d * (state.w - relax.w_e());
    }
    BlochRate { du, dv, dw }
}

fn shifted(state: &BlochState, rate: &BlochRate, h: f64) -> BlochState {
    BlochState::new(
        state.u + h * rate.du,
        state.v + h * rate.dv,
        state.w + h * rate.dw,
    )
}

/// One classical RK4 step of size `h`.
fn rk4_step(state: &BlochState, drive: &EffectiveDrive, relax: &Relaxation, h: f64) -> BlochState {
    let k1 = derivative(state, drive, relax);
    let k2 = derivative(&shifted(state, &k1, 0.5 * h), drive, relax);
    let k3 = derivative(&shifted(state, &k2, 0.5 * h), drive, relax);
    let k4 = derivative(&shifted(state, &k3, h), drive, relax);
    BlochState::new(
        state.u + h / 6.0 * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du),
        state.v + h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv),
        state.w + h / 6.0 * (k1.dw + 2.0 * k2.dw + 2.0 * k3.dw + k4.dw),
    )
}

fn check_norm(state: &BlochState, t: f64) -> Result<()> {
    let norm = state.norm_sq().sqrt();
    if norm > 1.0 + NORM_SLACK {
        return Err(Error::NormExceeded { t, norm });
    }
    Ok(())
}

/// Number of steps covering `dt` with step at most `h`, final partial step
/// landing exactly on the endpoint.
fn step_count(dt: f64, h: f64) -> usize {
    ((dt / h - 1e-9).ceil().max(1.0)) as usize
}

/// Advance `state` by `dt` using RK4 substeps of size at most `h`.
pub fn advance(
    state: BlochState,
    drive: &EffectiveDrive,
    relax: &Relaxation,
    h: f64,
    dt: f64,
) -> Result<BlochState> {
    if !dt.is_finite() || dt < 0.0 {
        return Err(Error::NegativeTime { t: dt });
    }
    if dt == 0.0 {
        return Ok(state);
    }
    check_step(h.min(dt), dt, drive, relax)?;
    let h = h.min(dt);
    let n = step_count(dt, h);
    let mut current = state;
    let mut t_prev = 0.0;
    for k in 1..=n {
        let t_next = if k == n { dt } else { k as f64 * h };
        current = rk4_step(&current, drive, relax, t_next - t_prev);
        check_norm(&current, t_next)?;
        t_prev = t_next;
    }
    Ok(current)
}

/// Integration output on the integration grid itself (no interpolation);
/// consumers subsample as needed.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<BlochState>,
}

/// Integrate from t = 0 to `params.t_end` inclusive, recording every step.
/// The final partial step is shortened to land exactly on `t_end`.
pub fn integrate(initial: BlochState, params: &OdeParams) -> Result<Trajectory> {
    check_norm(&initial, 0.0)?;
    let mut times = vec![0.0];
    let mut states = vec![initial];
    if params.t_end == 0.0 {
        return Ok(Trajectory { times, states });
    }
    let n = step_count(params.t_end, params.step);
    times.reserve(n);
    states.reserve(n);
    let mut state = initial;
    let mut t_prev = 0.0;
    for k in 1..=n {
        let t_next = if k == n {
            params.t_end
        } else {
            k as f64 * params.step
        };
        state = rk4_step(&state, &params.drive, &params.relax, t_next - t_prev);
        check_norm(&state, t_next)?;
        times.push(t_next);
        states.push(state);
        t_prev = t_next;
    }
    Ok(Trajectory { times, states })
}

/// Steady state of the generalized equations: the unique solution of the
/// 3x3 linear system obtained by zeroing all time derivatives, via direct
/// elimination with partial pivoting. Errors when no damping fixes the
/// state (e.g. gamma_d = gamma_p = 0).
pub fn steady_state_general(drive: &EffectiveDrive, relax: &Relaxation) -> Result<BlochState> {
    let t2_rate = relax.t2_rate();
    let a = [
        [-t2_rate, -relax.delta, 0.0],
        [relax.delta, -t2_rate, drive.omega_eff],
        [0.0, -drive.omega_eff, -relax.gamma_d],
    ];
    let b = [0.0, 0.0, -relax.gamma_d * relax.w_e()];
    let x = solve3(a, b).ok_or(Error::SingularSteadyState)?;
    Ok(BlochState::new(x[0], x[1], x[2]))
}

/// 3x3 Gaussian elimination with partial pivoting; None when singular.
fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    let scale = a.iter().flatten().fold(0.0f64, |acc, &x| acc.max(x.abs()));
    if scale == 0.0 {
        return None;
    }
    let tol = 1e-12 * scale;
    for col in 0..3 {
        let pivot_row = (col..3)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot_row][col].abs() <= tol {
            return None;
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for row in col + 1..3 {
            let factor = a[row][col] / a[col][col];
            let (upper, lower) = a.split_at_mut(row);
            for (entry, pivot_entry) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *entry -= factor * pivot_entry;
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let mut sum = b[row];
        for k in row + 1..3 {
            sum -= a[row][k] * x[k];
        }
        x[row] = sum / a[row][row];
    }
    Some(x)
}
