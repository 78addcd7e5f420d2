//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//!
//! Criterion 2 is expected to fail: it reads the population at t = 50/gamma_p,
//! but in the overdamped regime the relaxation toward 1/2 is governed by the
//! slow rate |lambda1| = [gamma_p - sqrt(gamma_p^2 - 4 omega_eff^2)]/2, which
//! goes to zero as gamma_p grows; the probe time is then far too short. The
//! test states the violating parameter pairs when it fires.

use std::f64::consts::PI;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use phasectl::analytic::{bloch_analytic, classify_regime, rho22_analytic, Regime};
use phasectl::bloch_ode::{
    advance, default_step, derivative, integrate, steady_state_general, OdeParams,
};
use phasectl::domain::{rho22_of, BlochState, EffectiveDrive, LaserField, Relaxation};
use phasectl::drive::{effective_drive, pathways_from_fields};
use phasectl::scan::{degree_of_control, phase_profile, Method};
use phasectl::ComplexAmp;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TAU: f64 = 2.0 * PI;

fn report(criterion: usize, name: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    if detail.is_empty() {
        println!("acceptance {criterion:>2} ({name}): {verdict}");
    } else {
        println!("acceptance {criterion:>2} ({name}): {verdict} — {detail}");
    }
    assert!(ok, "criterion {criterion} ({name}) failed: {detail}");
}

fn drive(omega: f64) -> EffectiveDrive {
    EffectiveDrive::from_omega(omega).unwrap()
}

fn dephasing(gamma_p: f64) -> Relaxation {
    Relaxation::pure_dephasing(gamma_p).unwrap()
}

#[test]
fn c01_undamped_rabi() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for k in 0..=100 {
        let t = k as f64 / 100.0;
        let got = rho22_analytic(TAU, 0.0, t).unwrap();
        let expect = 0.5 * (1.0 - (TAU * t).cos());
        worst = worst.max((got - expect).abs());
    }
    let at_half = rho22_analytic(TAU, 0.0, 0.5).unwrap();
    let at_one = rho22_analytic(TAU, 0.0, 1.0).unwrap();
    let elapsed = start.elapsed();
    let ok = worst < 1e-12
        && (at_half - 1.0).abs() < 1e-12
        && at_one.abs() < 1e-12
        && elapsed < Duration::from_millis(1);
    report(
        1,
        "undamped Rabi cycle",
        ok,
        &format!("rho22(0.5) = {at_half}, rho22(1) = {at_one}, {elapsed:?}"),
    );
}

#[test]
fn c02_steady_state_at_fifty_dephasing_times() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut violations = Vec::new();
    for _ in 0..20 {
        let omega = rng.gen_range(0.5..10.0);
        let gamma = rng.gen_range(0.1..10.0);
        let t = 50.0 / gamma;
        let analytic = rho22_analytic(omega, gamma, t).unwrap();
        let relax = dephasing(gamma);
        let state = advance(
            BlochState::GROUND,
            &drive(omega),
            &relax,
            default_step(&drive(omega), &relax),
            t,
        )
        .unwrap();
        let ode = rho22_of(&state).unwrap();
        if (analytic - 0.5).abs() >= 1e-6 || (ode - 0.5).abs() >= 1e-5 {
            violations.push(format!(
                "(omega_eff = {omega:.3}, gamma_p = {gamma:.3}): analytic {analytic:.6}, ode {ode:.6}"
            ));
        }
    }
    let elapsed = start.elapsed();
    let ok = violations.is_empty() && elapsed < Duration::from_secs(5);
    let detail = if violations.is_empty() {
        format!("{elapsed:?}")
    } else {
        format!(
            "t = 50/gamma_p precedes the slow overdamped relaxation (rate \
             [gamma_p - sqrt(gamma_p^2 - 4 omega_eff^2)]/2) for: {}",
            violations.join("; ")
        )
    };
    report(2, "steady state at t = 50/gamma_p", ok, &detail);
}

#[test]
fn c03_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = 0.0f64;
    let mut worst_pair = (0.0, 0.0);
    for i in 0..50 {
        let omega: f64 = rng.gen_range(0.5..TAU);
        let gamma = match i % 3 {
            0 => rng.gen_range(0.0..0.95 * 2.0 * omega),
            1 => 2.0 * omega, // the exact boundary
            _ => rng.gen_range(1.05 * 2.0 * omega..4.0 * omega),
        };
        let relax = dephasing(gamma);
        let params = OdeParams::with_default_step(drive(omega), relax, 5.0).unwrap();
        let traj = integrate(BlochState::GROUND, &params).unwrap();
        for (t, s) in traj.times.iter().zip(&traj.states) {
            let exact = bloch_analytic(omega, gamma, *t).unwrap();
            let dev = (s.u - exact.u)
                .abs()
                .max((s.v - exact.v).abs())
                .max((s.w - exact.w).abs());
            if dev > worst {
                worst = dev;
                worst_pair = (omega, gamma);
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = worst < 1e-6 && elapsed < Duration::from_secs(10);
    report(
        3,
        "closed form vs RK4 across regimes",
        ok,
        &format!("max deviation {worst:.3e} at {worst_pair:?}, {elapsed:?}"),
    );
}

#[test]
fn c04_rk4_convergence_order() {
    let error_at = |h: f64| -> f64 {
        let params = OdeParams::new(drive(TAU), dephasing(PI), h, 2.0).unwrap();
        let traj = integrate(BlochState::GROUND, &params).unwrap();
        traj.times
            .iter()
            .zip(&traj.states)
            .map(|(t, s)| {
                let e = bloch_analytic(TAU, PI, *t).unwrap();
                (s.u - e.u)
                    .abs()
                    .max((s.v - e.v).abs())
                    .max((s.w - e.w).abs())
            })
            .fold(0.0f64, f64::max)
    };
    let coarse = error_at(4e-3);
    let fine = error_at(2e-3);
    let exponent = (coarse / fine).log2();
    let ok = (3.5..=4.5).contains(&exponent);
    report(
        4,
        "RK4 order from step halving",
        ok,
        &format!("errors {coarse:.3e} -> {fine:.3e}, measured order {exponent:.2}"),
    );
}

#[test]
fn c05_regime_continuity() {
    let omega = 1.0;
    let mut worst = 0.0f64;
    for &t in &[0.1, 0.5, 1.0, 2.0] {
        let critical = rho22_analytic(omega, 2.0 * omega, t).unwrap();
        for &side in &[1.0 - 1e-6, 1.0 + 1e-6] {
            let near = rho22_analytic(omega, 2.0 * omega * side, t).unwrap();
            worst = worst.max((near - critical).abs());
        }
    }
    let ok = worst < 1e-4;
    report(
        5,
        "continuity across the critical boundary",
        ok,
        &format!("max difference {worst:.3e}"),
    );
}

#[test]
fn c06_interference_extremes() {
    let mut ok = true;
    let mut detail = String::new();
    for &mag in &[PI / 5.0, TAU] {
        let profile =
            phase_profile(mag, mag, 0.0, &dephasing(0.0), 0.25, 64, Method::Analytic).unwrap();
        let dark = profile.rho22[32];
        let at_pi = profile.phis[32];
        let constructive =
            effective_drive(&phasectl::domain::PathwaySet::new(mag, 0.0, mag, 0.0, 0.0).unwrap())
                .omega_eff;
        let err = (constructive - 2.0 * mag).abs();
        if at_pi != PI || dark != 0.0 || err > 1e-12 * (2.0 * mag) {
            ok = false;
        }
        detail.push_str(&format!(
            "mag {mag:.4}: rho22(pi) = {dark}, |omega_eff(0) - 2 mag| = {err:.2e}; "
        ));
    }
    report(6, "interference extremes", ok, detail.trim_end());
}

#[test]
fn c07_weak_field_cos_rule() {
    let profile = phase_profile(
        PI / 5.0,
        PI / 5.0,
        0.0,
        &dephasing(0.0),
        0.25,
        64,
        Method::Analytic,
    )
    .unwrap();
    // Least-squares coefficient of rho22 against (1 + cos Phi).
    let (mut num, mut den) = (0.0, 0.0);
    for (phi, rho) in profile.phis.iter().zip(&profile.rho22) {
        let g = 1.0 + phi.cos();
        num += rho * g;
        den += g * g;
    }
    let c = num / den;
    let peak = profile.rho22.iter().fold(0.0f64, |a, &b| a.max(b));
    let residual = profile
        .phis
        .iter()
        .zip(&profile.rho22)
        .map(|(phi, rho)| (rho - c * (1.0 + phi.cos())).abs())
        .fold(0.0f64, f64::max)
        / peak;
    let peak_err = (profile.rho22[0] - 0.024471741852423214).abs();
    let ok = residual < 0.02 && peak_err < 1e-6;
    report(
        7,
        "weak-field cos-Phi rule",
        ok,
        &format!("relative residual {residual:.4}, peak error {peak_err:.2e}"),
    );
}

#[test]
fn c08_strong_field_interior_maximum() {
    // t_off = 0.75 puts omega_eff(0) * t_off at 3 pi, so Phi = 0 also reaches
    // full transfer; the maximal yield must nevertheless appear at interior
    // phases, past a deep valley.
    let n = 16384;
    let profile = phase_profile(TAU, TAU, 0.0, &dephasing(0.0), 0.75, n, Method::Analytic).unwrap();
    let half = n / 2 + 1; // Phi in [0, pi]
    let global_max = profile.rho22[..half].iter().fold(0.0f64, |a, &b| a.max(b));
    let (arg_int, max_int) = profile.rho22[..half]
        .iter()
        .enumerate()
        .filter(|(i, _)| profile.phis[*i] > 0.1)
        .map(|(i, &r)| (i, r))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    let valley = profile.rho22[..arg_int]
        .iter()
        .skip(1)
        .fold(1.0f64, |a, &b| a.min(b));
    let phi_at_max = profile.phis[arg_int];
    let ok = phi_at_max > 0.1 && max_int >= global_max - 1e-6 && valley < max_int - 0.1;
    report(
        8,
        "strong-field maximum at interior phase",
        ok,
        &format!(
            "max {max_int:.8} at Phi = {phi_at_max:.4} (global {global_max:.8}), valley {valley:.4}"
        ),
    );
}

#[test]
fn c09_dephasing_envelope() {
    let (omega, gamma) = (TAU, PI);
    let s = match classify_regime(omega, gamma) {
        Regime::Underdamped { s } => s,
        other => panic!("expected underdamped, got {other:?}"),
    };
    let amp = 1.0 + 0.5 * gamma / s;
    let mut worst = f64::NEG_INFINITY;
    for k in 0..=5000 {
        let t = 5.0 * k as f64 / 5000.0;
        let rho = rho22_analytic(omega, gamma, t).unwrap();
        let envelope = 0.5 * (-0.5 * gamma * t).exp() * amp;
        worst = worst.max((rho - 0.5).abs() - envelope);
    }
    let ok = worst <= 1e-12;
    report(
        9,
        "exponential dephasing envelope",
        ok,
        &format!("max excursion above envelope {worst:.3e}"),
    );
}

#[test]
fn c10_sign_flip_shifts_by_pi() {
    // Profiles built end to end from fields and real matrix elements of
    // opposite product sign, compared as functions of the laser phase.
    let n = 64;
    let t_off = 0.6;
    let gamma = 0.4;
    let rho_for = |mu: f64, phase_h: f64| -> f64 {
        let field_h = LaserField::new(1.0, phase_h, 3.0).unwrap();
        let field_f = LaserField::new(1.0, 0.0, 1.0).unwrap();
        let p = pathways_from_fields(
            &field_h,
            &field_f,
            ComplexAmp::real(mu).unwrap(),
            ComplexAmp::real(1.0).unwrap(),
            1,
            3,
        )
        .unwrap();
        let d = effective_drive(&p);
        rho22_analytic(d.omega_eff, gamma, t_off).unwrap()
    };
    let mut worst = 0.0f64;
    for i in 0..n {
        let phi = TAU * (i as f64 / n as f64);
        let minus = rho_for(-1.0, phi);
        let plus_shifted = rho_for(1.0, phi + PI);
        worst = worst.max((minus - plus_shifted).abs());
    }
    let ok = worst < 1e-12;
    report(
        10,
        "opposite matrix-element signs shift the profile by pi",
        ok,
        &format!("max difference {worst:.3e}"),
    );
}

#[test]
fn c11_degree_of_control_converges_to_half() {
    let profile = phase_profile(TAU, TAU, 0.0, &dephasing(PI), 10.0, 64, Method::Analytic).unwrap();
    let c = degree_of_control(&profile).unwrap();
    let ok = (c - 0.5).abs() < 1e-3;
    report(
        11,
        "degree of control converges to 1/2",
        ok,
        &format!("C(t_off = 10) = {c:.6}"),
    );
}

#[test]
fn c12_generalized_fixed_point() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst_residual = 0.0f64;
    let mut worst_gap = 0.0f64;
    for _ in 0..20 {
        let omega = rng.gen_range(0.1..5.0);
        let gamma_p = rng.gen_range(0.0..3.0);
        let gamma_d = rng.gen_range(0.2..3.0);
        let delta = rng.gen_range(-3.0..3.0);
        let sigma_1e = rng.gen_range(0.0..1.0);
        let relax = Relaxation::new(gamma_p, gamma_d, delta, sigma_1e, 1.0 - sigma_1e).unwrap();
        let d = drive(omega);
        let fixed = steady_state_general(&d, &relax).unwrap();
        worst_residual = worst_residual.max(derivative(&fixed, &d, &relax).max_abs());

        let params = OdeParams::with_default_step(d, relax, 80.0 / gamma_d).unwrap();
        let traj = integrate(BlochState::GROUND, &params).unwrap();
        let end = traj.states.last().unwrap();
        worst_gap = worst_gap
            .max((end.u - fixed.u).abs())
            .max((end.v - fixed.v).abs())
            .max((end.w - fixed.w).abs());
    }
    let ok = worst_residual < 1e-10 && worst_gap < 1e-6;
    report(
        12,
        "generalized steady state",
        ok,
        &format!("max derivative residual {worst_residual:.3e}, max RK4 gap {worst_gap:.3e}"),
    );
}

#[test]
fn c13_cli_golden_files() {
    let bin = env!("CARGO_BIN_EXE_phasectl");
    let goldens = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/goldens");

    let evolve = Command::new(bin)
        .args([
            "evolve",
            "--omega-eff",
            "6.283185307179586",
            "--gamma-p",
            "0",
            "--t-end",
            "1",
            "--samples",
            "5",
            "--method",
            "analytic",
        ])
        .output()
        .unwrap();
    let evolve_ok = evolve.status.success()
        && evolve.stdout == std::fs::read(goldens.join("evolve_basic.csv")).unwrap();

    let profile = Command::new(bin)
        .args([
            "profile",
            "--mag",
            "0.6283185307179586",
            "--gamma-p",
            "0",
            "--t-off",
            "0.25",
            "--n-phi",
            "4",
        ])
        .output()
        .unwrap();
    let profile_ok = profile.status.success()
        && profile.stdout == std::fs::read(goldens.join("profile_basic.csv")).unwrap();

    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("fig2");
    let sweep = Command::new(bin)
        .args([
            "sweep",
            "--preset",
            "fig2",
            "--out-dir",
            out_dir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    let mut sweep_ok = sweep.status.success();
    let mut mismatches = Vec::new();
    if sweep_ok {
        for entry in std::fs::read_dir(goldens.join("fig2")).unwrap() {
            let name = entry.unwrap().file_name();
            let expect = std::fs::read(goldens.join("fig2").join(&name)).unwrap();
            let got = std::fs::read(out_dir.join(&name)).unwrap_or_default();
            if got != expect {
                sweep_ok = false;
                mismatches.push(name.to_string_lossy().into_owned());
            }
        }
        if std::fs::read_dir(&out_dir).unwrap().count() != 17 {
            sweep_ok = false;
            mismatches.push("unexpected file count".into());
        }
    }

    let ok = evolve_ok && profile_ok && sweep_ok;
    report(
        13,
        "CLI byte-identical to committed goldens",
        ok,
        &format!(
            "evolve {evolve_ok}, profile {profile_ok}, sweep {sweep_ok}{}",
            if mismatches.is_empty() {
                String::new()
            } else {
                format!(" (mismatched: {})", mismatches.join(", "))
            }
        ),
    );
}
