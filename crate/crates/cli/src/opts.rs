//! Flag definitions. Every value flag is optional at parse time so that a
//! `--config` file can supply it; required-ness is enforced after the merge.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "phasectl",
    version,
    about = "Two-pathway phase control of a dephasing two-level system",
    long_about = "Computes excited-state populations of a two-level system driven by two \
                  interfering excitation pathways, in dimensionless units (hbar = 1). \
                  Output is deterministic CSV with 17-significant-digit floats.\n\n\
                  Any flag may also be supplied by a `key = value` config file via --config, \
                  with command-line flags taking precedence."
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Time evolution of the Bloch vector and excited-state population
    Evolve(EvolveArgs),
    /// Population versus control phase Phi at pulse turn-off
    Profile(ProfileArgs),
    /// Batch runs into an output directory, with an index CSV
    Sweep(SweepArgs),
    /// Effective three-photon matrix element summed from a level table
    Mu3(Mu3Args),
}

#[derive(Args)]
pub struct EvolveArgs {
    /// Effective Rabi frequency; bypasses the pathway flags below
    #[arg(long, allow_negative_numbers = true)]
    pub omega_eff: Option<f64>,

    /// Pathway-a Rabi magnitude |Omega_h|
    #[arg(long)]
    pub omega_h: Option<f64>,

    /// Pathway-a matrix-element phase theta_h (radians)
    #[arg(long, allow_negative_numbers = true)]
    pub theta_h: Option<f64>,

    /// Pathway-b Rabi magnitude |Omega_f|
    #[arg(long)]
    pub omega_f: Option<f64>,

    /// Pathway-b matrix-element phase theta_f (radians)
    #[arg(long, allow_negative_numbers = true)]
    pub theta_f: Option<f64>,

    /// Relative laser phase phi (radians)
    #[arg(long, allow_negative_numbers = true)]
    pub phi: Option<f64>,

    /// Pure dephasing rate [default: 0]
    #[arg(long)]
    pub gamma_p: Option<f64>,

    /// Population decay rate; equilibrium is the ground state [default: 0]
    #[arg(long)]
    pub gamma_d: Option<f64>,

    /// Common detuning (ode method only) [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    pub delta: Option<f64>,

    /// Final time (required)
    #[arg(long)]
    pub t_end: Option<f64>,

    /// Number of output samples, uniform from 0 to t-end [default: 201]
    #[arg(long)]
    pub samples: Option<usize>,

    /// Evaluation method: analytic | ode [default: analytic]
    #[arg(long)]
    pub method: Option<String>,

    /// RK4 step, ode method only [default: min(1e-3, 0.02/max rate)]
    #[arg(long)]
    pub step: Option<f64>,

    /// Output file (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// key = value file supplying defaults for the flags above
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Args)]
pub struct ProfileArgs {
    /// Equal pathway magnitude |Omega_h| = |Omega_f| (required)
    #[arg(long)]
    pub mag: Option<f64>,

    /// Pure dephasing rate [default: 0]
    #[arg(long)]
    pub gamma_p: Option<f64>,

    /// Pulse turn-off time (required)
    #[arg(long)]
    pub t_off: Option<f64>,

    /// Number of laser-phase samples over [0, 2pi) [default: 64]
    #[arg(long)]
    pub n_phi: Option<usize>,

    /// Evaluation method: analytic | ode [default: analytic]
    #[arg(long)]
    pub method: Option<String>,

    /// Sign of mu * mu3: '+' maps Phi = phi, '-' maps Phi = phi + pi
    /// [default: +]
    #[arg(long, allow_hyphen_values = true)]
    pub mu_sign: Option<String>,

    /// key = value file supplying defaults for the flags above
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Args)]
pub struct SweepArgs {
    /// Preset grid: fig1 (time series per gamma_p) | fig2 (profiles over
    /// mag x gamma_p x t_off) (required)
    #[arg(long)]
    pub preset: Option<String>,

    /// Output directory for the CSV files and index.csv (required)
    #[arg(long)]
    pub out_dir: Option<PathBuf>,

    /// fig1: effective Rabi frequency [default: 2pi]
    #[arg(long)]
    pub omega_eff: Option<f64>,

    /// Comma-separated dephasing rates [fig1 default: 0,pi,2pi,4pi,6pi;
    /// fig2 default: 0,pi]
    #[arg(long)]
    pub gammas: Option<String>,

    /// fig1: final time [default: 2]
    #[arg(long)]
    pub t_end: Option<f64>,

    /// fig1: samples per series [default: 201]
    #[arg(long)]
    pub samples: Option<usize>,

    /// fig2: comma-separated equal pathway magnitudes [default: pi/5,2pi]
    #[arg(long)]
    pub mags: Option<String>,

    /// fig2: comma-separated turn-off times [default: 0.25,0.5,0.75,2.0]
    #[arg(long)]
    pub t_offs: Option<String>,

    /// fig2: phase samples per profile [default: 64]
    #[arg(long)]
    pub n_phi: Option<usize>,

    /// key = value file supplying defaults for the flags above
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Args)]
pub struct Mu3Args {
    /// CSV of level triples, one per line:
    /// mu1n_re,mu1n_im,munm_re,munm_im,mum2_re,mum2_im,omega_n1,omega_2m
    #[arg(long)]
    pub levels: Option<PathBuf>,

    /// Fundamental angular frequency omega_f; each denominator factor must
    /// stay above 1e-12 in magnitude
    #[arg(long, allow_negative_numbers = true)]
    pub omega_f: Option<f64>,

    /// key = value file supplying defaults for the flags above
    #[arg(long)]
    pub config: Option<PathBuf>,
}
