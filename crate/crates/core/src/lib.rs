//! Analytical model of a driven optomechanical cavity with geometrical and
//! optical nonlinearities.
//!
//! The crate computes, from a small set of experimental parameters:
//!
//! - steady states of the mean field (a cubic in the static displacement,
//!   [`steadystate`]),
//! - the linearized fluctuation dynamics around a steady state: effective
//!   coupling, drift matrix, dynamical stability and the effective mechanical
//!   susceptibility ([`lindyn`]),
//! - mechanical position/momentum variances from closed forms and from an
//!   independent spectral-integral route ([`mechvar`]),
//! - output-field intensity/phase spectra and variances ([`optout`]),
//! - deterministic time-domain integration of the nonlinear mean-field
//!   equations as a dynamical cross-check ([`timedomain`]),
//! - grid sweeps of any scalar observable with CSV output ([`sweep`],
//!   [`figures`]).
//!
//! All angular frequencies are stored in rad/s. Quadrature variances are
//! normalized so a coherent state has unit variance in both quadratures.

pub mod constants;
pub mod error;
pub mod figures;
pub mod lindyn;
pub mod mechvar;
pub mod optout;
pub mod params;
pub mod steadystate;
pub mod sweep;
pub mod timedomain;

mod quad;

pub use error::{ConfigError, PhysicsError};
pub use lindyn::{
    drift_matrix, effective_params, is_dynamically_stable, susceptibility, DriftMatrix,
    EffectiveParams, StabilityReport, Susceptibility,
};
pub use mechvar::{
    position_spectrum, var_x_from_n_eff, variances_by_quadrature, variances_closed_form,
    MechanicalVariances, PositionSpectrumPoint, ThermalMode,
};
pub use optout::{
    input_output, output_field, output_spectra, output_variances, AlphaInNorm, OutputField,
    OutputSpectraPoint, OutputVariances,
};
pub use params::{derive_scalars, load_params, DerivedScalars, PhysicalParams};
pub use steadystate::{
    photon_number, select_operating_point, solve_cubic, Classification, OperatingPoint,
    SteadyState,
};
pub use sweep::{
    run_sweep, run_sweep_serial, table1_ranges, Axis, AxisName, Observable, PointSpec, Spacing,
    SweepResult, SweepSpec, Table1Ranges,
};
pub use timedomain::{integrate, integrate_linear, TrajectoryState};
