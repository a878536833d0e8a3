//! Error types. Configuration problems and physics-domain failures are kept
//! apart so callers (notably the CLI) can map them to distinct exit codes.

use thiserror::Error;

/// Problems with a configuration document.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("missing required field `{0}`")]
    MissingField(&'static str),
    #[error("unknown field `{0}`")]
    UnknownField(String),
    #[error("field `{field}` is not a finite number")]
    NonNumeric { field: String },
    #[error("field `{field}` violates an invariant: {reason}")]
    InvalidValue { field: &'static str, reason: String },
    #[error("exactly one of `gamma_m` and `q_factor` must be given")]
    DampingSpec,
    #[error("exactly one of `omega_l` and `detuning` must be given")]
    LaserSpec,
    #[error("`units` must be \"rad_s\" or \"hz_2pi\", got `{0}`")]
    BadUnits(String),
    #[error("config is not a JSON object")]
    NotAnObject,
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// Physics-domain failures: the inputs are valid but the model refuses or
/// breaks down at this point of parameter space.
#[derive(Debug, Error)]
pub enum PhysicsError {
    #[error("degenerate cubic: optomechanical coupling g_m is zero")]
    DegenerateCubic,
    #[error("no real steady-state root: stable operating point lost")]
    NoRealRoot,
    #[error("linearization refused around a complex (unstable-branch) root")]
    ComplexOperatingPoint,
    #[error("parametric instability: effective damping {gamma_eff} rad/s <= 0")]
    ParametricInstability { gamma_eff: f64 },
    #[error("static instability: effective frequency squared {omega_eff_sq} (rad/s)^2 <= 0")]
    StaticInstability { omega_eff_sq: f64 },
    #[error(
        "quadrature did not converge: estimated relative error {achieved:.3e} > requested {requested:.3e}"
    )]
    QuadratureNoConvergence { achieved: f64, requested: f64 },
    #[error("integrator step size underflow at t = {t}: reduce the kappa*dt scale or loosen rel_tol")]
    StepUnderflow { t: f64 },
    #[error("trajectory diverged at t = {t} (|state| > {threshold:.1e}): dynamical instability")]
    Divergence { t: f64, threshold: f64 },
    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },
    #[error("sweep budget exceeded: {requested} points > budget {budget}")]
    BudgetExceeded { requested: usize, budget: usize },
}

impl PhysicsError {
    /// Short machine-readable code, used in sweep CSV rows and CLI errors.
    pub fn code(&self) -> &'static str {
        match self {
            PhysicsError::DegenerateCubic => "degenerate_cubic",
            PhysicsError::NoRealRoot => "no_real_root",
            PhysicsError::ComplexOperatingPoint => "complex_operating_point",
            PhysicsError::ParametricInstability { .. } => "parametric_instability",
            PhysicsError::StaticInstability { .. } => "static_instability",
            PhysicsError::QuadratureNoConvergence { .. } => "quadrature_no_convergence",
            PhysicsError::StepUnderflow { .. } => "step_underflow",
            PhysicsError::Divergence { .. } => "divergence",
            PhysicsError::InvalidArgument { .. } => "invalid_argument",
            PhysicsError::BudgetExceeded { .. } => "budget_exceeded",
        }
    }
}
