use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use fockcanon::{Complex64, RealMatrix2};

use crate::formats::{parse_complex, parse_matrix};

#[derive(Debug, Parser)]
#[command(
    name = "fockcanon",
    version,
    about = "Canonical integral operators on the Fock space"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Gauss–Hermite points per axis for planar quadrature.
    #[arg(long, global = true, env = "FOCKCANON_NODES", default_value_t = 64)]
    pub nodes: usize,
    /// Stretch the planar rule so its outermost node sits at this radius.
    #[arg(long, global = true)]
    pub radius: Option<f64>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Matrix truncation N.
    #[arg(long, short = 'N', global = true, default_value_t = 64)]
    pub truncation: usize,
    /// Tolerance for pass/fail flags in command output.
    #[arg(long, global = true, default_value_t = 1e-6)]
    pub tol: f64,
    /// Write the artifact here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn complex(s: &str) -> Result<Complex64, String> {
    parse_complex(s)
}

fn matrix(s: &str) -> Result<RealMatrix2, String> {
    parse_matrix(s)
}

#[derive(Debug, Args)]
pub struct Params {
    /// `s` as "re,im".
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    pub s: Complex64,
    /// `t` as "re,im".
    #[arg(long, value_parser = complex, allow_hyphen_values = true)]
    pub t: Complex64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Quadrature,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Unbounded / unitary / Hilbert–Schmidt, with the HS norm when defined.
    Classify(Params),
    /// Kernel values, sign, Fock-norms of kernel sections and growth along rays.
    Kernel {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        z: Option<Complex64>,
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        w: Option<Complex64>,
        /// Radii at which to report the growth ratio ‖K_u‖ / e^{|u|²/2}.
        #[arg(long, value_delimiter = ',')]
        ray: Vec<f64>,
    },
    /// Truncated matrix ⟨T e_n, e_m⟩, m, n < N.
    Matrix {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// Eigenvalues and eigen-residuals of a unitary operator.
    Eigen {
        #[command(flatten)]
        params: Params,
        /// Largest eigen-index reported.
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        /// Also compute the quadrature norm residual (slower).
        #[arg(long)]
        norm_residual: bool,
    },
    /// Group product, cocycle and kernel-composition data.
    Compose {
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        s1: Complex64,
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        t1: Complex64,
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        s2: Complex64,
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        t2: Complex64,
    },
    /// Apply a linear canonical transform to sampled data.
    #[command(group(ArgGroup::new("transform").required(true).args(["matrix", "frft", "fresnel", "chirp", "dilate"])))]
    Lct {
        /// General [[a, b], [c, d]] as "a,b,c,d".
        #[arg(long, value_parser = matrix, allow_hyphen_values = true)]
        matrix: Option<RealMatrix2>,
        #[arg(long, allow_hyphen_values = true)]
        frft: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        fresnel: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        chirp: Option<f64>,
        #[arg(long)]
        dilate: Option<f64>,
        /// JSON sample file {"grid": [...], "values": [...]}.
        #[arg(long, conflicts_with = "preset")]
        input: Option<PathBuf>,
        /// "gaussian" or "hermite:n".
        #[arg(long, default_value = "gaussian")]
        preset: String,
        #[arg(long, default_value_t = 8.0)]
        half_width: f64,
        #[arg(long, default_value_t = 1025)]
        points: usize,
    },
    /// Coefficients of the δ-generalized Hermite polynomial.
    Hermite {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = complex, allow_hyphen_values = true, default_value = "1,0")]
        delta: Complex64,
        /// Build by the three-term recursion instead of the closed form.
        #[arg(long)]
        recursive: bool,
    },
    /// The integral-equation battery alone.
    #[command(name = "verify-theorem-e")]
    VerifyIntegralEquation,
    /// The full acceptance battery.
    Verify {
        /// Restrict to these criterion numbers.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}
