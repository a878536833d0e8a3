//! Fundamental constants, CODATA values hard-coded to 10 significant digits.

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054571817e-34;

/// Boltzmann constant, J/K.
pub const KB: f64 = 1.380649e-23;

/// Speed of light in vacuum, m/s.
pub const C0: f64 = 2.997924580e8;
