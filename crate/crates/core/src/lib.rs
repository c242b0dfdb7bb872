//! Elliptic analogues of multiple zeta values.
//!
//! The crate evaluates the one-parameter families `I_d(tau)` and `J_d(tau)`
//! indexed by integer words `d = (d_1, ..., d_n)`, `d_i >= -1`, as regularized
//! iterated integrals of Kronecker-Eisenstein kernels along `[0,1]` and
//! `[0,tau]`. On top of the numeric layer sit an exact algebra layer (free Lie
//! algebra on two generators, its derivations, and a functional realization)
//! and the assembly of the noncommutative generating series `A(tau)`, `B(tau)`
//! together with their identity web: shuffle, reversal, modularity, the
//! tau-differential system, and the asymptotic expansion at `i*infinity`.
//!
//! Module map:
//! - [`modform`]: theta function, Eisenstein series, Weierstrass data, kernels.
//! - [`itint`]: regularized iterated integrals over sampled paths.
//! - [`emzv`]: the values `I_d`, `J_d` and their scalar identity checks.
//! - [`freelie`]: exact truncated noncommutative series, derivations, and the
//!   functional Lie algebra acting on generating variables.
//! - [`kzb`]: KZ associator, assembled series, group relations, asymptotics.
//!
//! All numeric entry points take an explicit [`Settings`] so tolerances and
//! truncations stay in one place. Computations are pure; fan-out over
//! independent words is parallelized with rayon when the `parallel` feature
//! (default) is enabled.

pub mod emzv;
pub mod exec;
pub mod freelie;
pub mod itint;
pub mod kzb;
pub mod laurent;
pub mod modform;

use num_complex::Complex64;
use thiserror::Error;

/// Crate-wide complex scalar. Keeping call sites on the alias means a
/// higher-precision type can be swapped in without touching interfaces.
pub type Cplx = Complex64;

/// Errors surfaced by the numeric layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("evaluation out of range: {0}")]
    OutOfRange(String),
    #[error("singular point: {0}")]
    SingularPoint(String),
    #[error("unsupported index: {0}")]
    UnsupportedIndex(String),
    #[error("branch tracking step too coarse: phase jump {jump:.3} rad at sample {index}")]
    BranchStep { jump: f64, index: usize },
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("quadrature accuracy {achieved:.3e} above requested {requested:.3e}")]
    Accuracy { achieved: f64, requested: f64 },
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("truncation too small: {0}")]
    Truncation(String),
    #[error("missing dependency: {0}")]
    Dependency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Numeric configuration shared by every module.
///
/// Defaults implement the tolerance ladder used throughout: series
/// truncation at machine precision, quadrature at `1e-10`, identity suites at
/// `1e-8`, finite-difference checks at `1e-5`.
#[derive(Debug, Clone)]
pub struct Settings {
    /// Target size for the smallest retained `q`-power.
    pub q_tol: f64,
    /// Hard cap on the number of retained `q`-factors or terms.
    pub q_max_terms: usize,
    /// Chebyshev points per quadrature panel.
    pub cheb_points: usize,
    /// Width of the zone near each path endpoint covered by the geometric
    /// panel ladder.
    pub ladder_start: f64,
    /// Innermost ladder panel edge; contributions below are dropped (their
    /// size is bounded by `ladder_eps * |log ladder_eps|^depth`).
    pub ladder_eps: f64,
    /// Panels on the interior section of the path, per unit length.
    pub interior_panels: usize,
    /// Relative tail threshold for truncating Chebyshev coefficient series.
    pub tail_rel: f64,
    /// Quadrature tolerance (absolute, per value).
    pub quad_tol: f64,
    /// Identity-suite tolerance.
    pub id_tol: f64,
    /// Finite-difference (ODE) tolerance.
    pub ode_tol: f64,
    /// Central-difference step in `tau`.
    pub ode_dtau: f64,
    /// Depth cap for index words.
    pub max_depth: usize,
    /// Per-letter degree cap `d_i <= max_entry`.
    pub max_entry: i32,
    /// Weight cap `sum(d_i + 2) <= max_weight`.
    pub max_weight: i32,
    /// Samples per unit path length for branch tracking.
    pub branch_samples: usize,
    /// Phase jump (radians) triggering adaptive refinement in branch tracking.
    pub branch_refine_jump: f64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            q_tol: 1e-16,
            q_max_terms: 400,
            cheb_points: 20,
            ladder_start: 0.125,
            ladder_eps: 1e-32,
            interior_panels: 8,
            tail_rel: 1e-18,
            quad_tol: 1e-10,
            id_tol: 1e-8,
            ode_tol: 1e-5,
            ode_dtau: 1e-3,
            max_depth: 4,
            max_entry: 6,
            max_weight: 8,
            branch_samples: 256,
            branch_refine_jump: std::f64::consts::FRAC_PI_4,
        }
    }
}

impl Settings {
    /// Caps raised enough to run the full identity suites (reversal and
    /// shuffle need all-(-1) words of depth equal to the weight bound).
    pub fn for_suites() -> Self {
        Settings {
            max_depth: 8,
            max_weight: 10,
            ..Settings::default()
        }
    }
}
