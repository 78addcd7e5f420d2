//! Deterministic CSV assembly: `\n` line endings, 17-significant-digit
//! floats (lossless f64 round-trip), comments only after the header.

use phasectl::domain::rho22_of;
use phasectl::scan::TimeSeries;

/// 17 significant digits in scientific notation; negative zero normalizes
/// to zero so identical values always print identically.
pub fn fmt_f64(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// Compact parameter rendering for file names: four decimals, trailing
/// zeros trimmed (6.2832, 0.75, 2).
pub fn fmt_param(x: f64) -> String {
    let s = format!("{x:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() || s == "-" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// `t,u,v,w,rho22` rows for a time series.
pub fn series_csv(series: &TimeSeries) -> phasectl::Result<String> {
    let mut out = String::from("t,u,v,w,rho22\n");
    for (t, state) in series.times.iter().zip(&series.states) {
        let rho = rho22_of(state)?;
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            fmt_f64(*t),
            fmt_f64(state.u),
            fmt_f64(state.v),
            fmt_f64(state.w),
            fmt_f64(rho)
        ));
    }
    Ok(out)
}

/// `phi_cap,omega_eff,rho22` rows plus the degree-of-control comment.
pub fn profile_csv(rows: &[(f64, f64, f64)], degree_of_control: f64) -> String {
    let mut out = String::from("phi_cap,omega_eff,rho22\n");
    for (cap_phi, omega_eff, rho) in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            fmt_f64(*cap_phi),
            fmt_f64(*omega_eff),
            fmt_f64(*rho)
        ));
    }
    out.push_str(&format!("# C={}\n", fmt_f64(degree_of_control)));
    out
}
