//! Physical inputs, unit conventions and single-valued derived quantities.
//!
//! The on-disk format is a flat JSON object with one numeric value per key.
//! An explicit `units` field selects the angular-frequency convention:
//! `"rad_s"` (values already in rad/s) or `"hz_2pi"` (ordinary frequencies in
//! Hz, multiplied by 2π on load). Mechanical damping may be given either as
//! `gamma_m` or as `q_factor` (Γ_m = Ω_m/Q); the laser either as `omega_l` or
//! as `detuning` (Δ = ω_ℓ − ω_c). Unknown keys are rejected.

use crate::constants::{HBAR, KB};
use crate::error::ConfigError;
use serde_json::{Map, Number, Value};
use std::f64::consts::TAU;

/// The experimental knobs. All angular frequencies in rad/s, SI otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Mechanical resonance Ω_m, rad/s.
    pub omega_m: f64,
    /// Mechanical damping Γ_m, rad/s.
    pub gamma_m: f64,
    /// Cavity decay κ, rad/s.
    pub kappa: f64,
    /// Optical cavity mode ω_c, rad/s.
    pub omega_c: f64,
    /// Drive laser ω_ℓ, rad/s.
    pub omega_l: f64,
    /// Effective mass of the nanobeam M, kg.
    pub mass: f64,
    /// Cavity length d₀, m.
    pub cavity_length: f64,
    /// Geometrical-nonlinearity coefficient β′ of the restoring force, 1/(m²·s²).
    pub beta_prime: f64,
    /// Input laser power P_in, W.
    pub p_in: f64,
    /// Support temperature T, K.
    pub temperature: f64,
}

impl PhysicalParams {
    /// Laser-cavity detuning Δ = ω_ℓ − ω_c, rad/s.
    pub fn detuning(&self) -> f64 {
        self.omega_l - self.omega_c
    }

    /// Mechanical quality factor Q = Ω_m/Γ_m.
    pub fn q_factor(&self) -> f64 {
        self.omega_m / self.gamma_m
    }

    /// Same parameters at a different laser detuning (rad/s).
    pub fn with_detuning(mut self, detuning: f64) -> Self {
        self.omega_l = self.omega_c + detuning;
        self
    }

    pub fn with_p_in(mut self, p_in: f64) -> Self {
        self.p_in = p_in;
        self
    }

    pub fn with_temperature(mut self, temperature: f64) -> Self {
        self.temperature = temperature;
        self
    }

    fn validate(&self) -> Result<(), ConfigError> {
        fn positive(field: &'static str, v: f64) -> Result<(), ConfigError> {
            if !(v > 0.0) || !v.is_finite() {
                return Err(ConfigError::InvalidValue {
                    field,
                    reason: format!("must be positive and finite, got {v}"),
                });
            }
            Ok(())
        }
        fn non_negative(field: &'static str, v: f64) -> Result<(), ConfigError> {
            if !(v >= 0.0) || !v.is_finite() {
                return Err(ConfigError::InvalidValue {
                    field,
                    reason: format!("must be non-negative and finite, got {v}"),
                });
            }
            Ok(())
        }
        positive("omega_m", self.omega_m)?;
        non_negative("gamma_m", self.gamma_m)?;
        positive("kappa", self.kappa)?;
        positive("omega_c", self.omega_c)?;
        positive("omega_l", self.omega_l)?;
        positive("mass", self.mass)?;
        positive("cavity_length", self.cavity_length)?;
        non_negative("beta_prime", self.beta_prime)?;
        non_negative("p_in", self.p_in)?;
        non_negative("temperature", self.temperature)?;
        Ok(())
    }

    /// The pinned reference parameter set shipped with the crate
    /// (`configs/reference.json`).
    pub fn reference() -> Self {
        load_params(include_str!("../configs/reference.json"))
            .expect("embedded reference config must be valid")
    }
}

/// Quantities that are pure functions of [`PhysicalParams`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedScalars {
    /// Zero-point fluctuation amplitude x_ZPF = sqrt(ħ/(2MΩ_m)), m.
    pub x_zpf: f64,
    /// Single-photon optomechanical coupling g_M = √2 ω_c x_ZPF/d₀, rad/s.
    pub g_m: f64,
    /// Drive amplitude ε_in = sqrt(2κP_in/(ħΩ_m)), sqrt(photons)/s.
    pub epsilon_in: f64,
    /// High-temperature occupancy factor 2k_B T/(ħΩ_m).
    pub n_thermal: f64,
    /// Re-thermalization time ħQ/(k_B T), s; infinite at T = 0.
    pub tau_th: f64,
}

/// Derived single-valued quantities; pure in the inputs.
pub fn derive_scalars(p: &PhysicalParams) -> DerivedScalars {
    let x_zpf = (HBAR / (2.0 * p.mass * p.omega_m)).sqrt();
    let g_m = std::f64::consts::SQRT_2 * p.omega_c * x_zpf / p.cavity_length;
    let epsilon_in = (2.0 * p.kappa * p.p_in / (HBAR * p.omega_m)).sqrt();
    let n_thermal = 2.0 * KB * p.temperature / (HBAR * p.omega_m);
    let tau_th = if p.temperature > 0.0 && p.gamma_m > 0.0 {
        HBAR * p.q_factor() / (KB * p.temperature)
    } else {
        f64::INFINITY
    };
    DerivedScalars {
        x_zpf,
        g_m,
        epsilon_in,
        n_thermal,
        tau_th,
    }
}

const KNOWN_KEYS: &[&str] = &[
    "units",
    "omega_m",
    "gamma_m",
    "q_factor",
    "kappa",
    "omega_c",
    "omega_l",
    "detuning",
    "mass",
    "cavity_length",
    "beta_prime",
    "p_in",
    "temperature",
];

fn get_num(map: &Map<String, Value>, key: &str) -> Result<Option<f64>, ConfigError> {
    match map.get(key) {
        None => Ok(None),
        Some(Value::Number(n)) => {
            let v = n.as_f64().ok_or(ConfigError::NonNumeric {
                field: key.to_string(),
            })?;
            if !v.is_finite() {
                return Err(ConfigError::NonNumeric {
                    field: key.to_string(),
                });
            }
            Ok(Some(v))
        }
        Some(_) => Err(ConfigError::NonNumeric {
            field: key.to_string(),
        }),
    }
}

fn require(map: &Map<String, Value>, key: &'static str) -> Result<f64, ConfigError> {
    get_num(map, key)?.ok_or(ConfigError::MissingField(key))
}

/// Parse and validate a configuration document.
pub fn load_params(config_text: &str) -> Result<PhysicalParams, ConfigError> {
    let value: Value = serde_json::from_str(config_text)?;
    let map = match value {
        Value::Object(m) => m,
        _ => return Err(ConfigError::NotAnObject),
    };
    for key in map.keys() {
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(ConfigError::UnknownField(key.clone()));
        }
    }

    let units = match map.get("units") {
        None => return Err(ConfigError::MissingField("units")),
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(ConfigError::BadUnits("<non-string>".into())),
    };
    let scale = match units.as_str() {
        "rad_s" => 1.0,
        "hz_2pi" => TAU,
        other => return Err(ConfigError::BadUnits(other.to_string())),
    };

    let omega_m = scale * require(&map, "omega_m")?;
    let kappa = scale * require(&map, "kappa")?;
    let omega_c = scale * require(&map, "omega_c")?;
    let mass = require(&map, "mass")?;
    let cavity_length = require(&map, "cavity_length")?;
    let beta_prime = require(&map, "beta_prime")?;
    let p_in = require(&map, "p_in")?;
    let temperature = require(&map, "temperature")?;

    let gamma_m = match (get_num(&map, "gamma_m")?, get_num(&map, "q_factor")?) {
        (Some(g), None) => scale * g,
        (None, Some(q)) => {
            if !(q > 0.0) {
                return Err(ConfigError::InvalidValue {
                    field: "q_factor",
                    reason: format!("must be positive, got {q}"),
                });
            }
            omega_m / q
        }
        _ => return Err(ConfigError::DampingSpec),
    };

    let omega_l = match (get_num(&map, "omega_l")?, get_num(&map, "detuning")?) {
        (Some(w), None) => scale * w,
        (None, Some(d)) => omega_c + scale * d,
        _ => return Err(ConfigError::LaserSpec),
    };

    let p = PhysicalParams {
        omega_m,
        gamma_m,
        kappa,
        omega_c,
        omega_l,
        mass,
        cavity_length,
        beta_prime,
        p_in,
        temperature,
    };
    p.validate()?;
    Ok(p)
}

/// Serialize params as a `rad_s`-units config document. `load_params` of the
/// result reproduces the struct bit-exactly.
pub fn to_config_json(p: &PhysicalParams) -> String {
    let mut map = Map::new();
    map.insert("units".into(), Value::String("rad_s".into()));
    let mut put = |k: &str, v: f64| {
        map.insert(k.into(), Value::Number(Number::from_f64(v).expect("finite")));
    };
    put("omega_m", p.omega_m);
    put("gamma_m", p.gamma_m);
    put("kappa", p.kappa);
    put("omega_c", p.omega_c);
    put("omega_l", p.omega_l);
    put("mass", p.mass);
    put("cavity_length", p.cavity_length);
    put("beta_prime", p.beta_prime);
    put("p_in", p.p_in);
    put("temperature", p.temperature);
    serde_json::to_string_pretty(&Value::Object(map)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn reference_config_loads() {
        let p = PhysicalParams::reference();
        assert_relative_eq!(p.omega_m, TAU * 3.68e9, max_relative = 1e-15);
        assert_relative_eq!(p.kappa, TAU * 5.0e8, max_relative = 1e-15);
        assert_relative_eq!(p.q_factor(), 1.0e5, max_relative = 1e-12);
        assert_relative_eq!(p.detuning(), TAU * 3.68e9, max_relative = 1e-9);
    }

    #[test]
    fn derived_scalars_match_independent_evaluation() {
        // Frozen from a 40-digit mpmath evaluation of the defining formulas
        // on the reference config.
        let p = PhysicalParams::reference();
        let d = derive_scalars(&p);
        assert_relative_eq!(d.x_zpf, 8.7788323727434259e-14, max_relative = 1e-12);
        assert_relative_eq!(d.g_m, 186223.78060641438, max_relative = 1e-12);
        assert_relative_eq!(d.epsilon_in, 1.6052327448980022e15, max_relative = 1e-12);
        assert_relative_eq!(d.n_thermal, 2.377378973681677, max_relative = 1e-12);
        assert_relative_eq!(d.tau_th, 3.638345111903879e-6, max_relative = 1e-12);
    }

    #[test]
    fn zero_temperature_limits() {
        let p = PhysicalParams::reference().with_temperature(0.0);
        let d = derive_scalars(&p);
        assert_eq!(d.n_thermal, 0.0);
        assert!(d.tau_th.is_infinite());
    }

    #[test]
    fn mass_scaling_law() {
        let p = PhysicalParams::reference();
        let mut p2 = p;
        p2.mass = 2.0 * p.mass;
        let d = derive_scalars(&p);
        let d2 = derive_scalars(&p2);
        assert_relative_eq!(d2.x_zpf, d.x_zpf / 2f64.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(d2.g_m, d.g_m / 2f64.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn x_zpf_scale_covariance() {
        let p = PhysicalParams::reference();
        let d = derive_scalars(&p);
        let one = d.x_zpf * (2.0 * p.mass * p.omega_m / HBAR).sqrt();
        assert_relative_eq!(one, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn round_trip_is_identity() {
        let p = PhysicalParams::reference();
        let text = to_config_json(&p);
        let p2 = load_params(&text).expect("round trip parses");
        assert_eq!(p, p2);
    }

    #[test]
    fn missing_field_names_it() {
        let text = r#"{"units":"rad_s","omega_m":1.0,"q_factor":10.0,"omega_c":1.0,
                       "omega_l":1.0,"mass":1.0,"cavity_length":1.0,"beta_prime":0.0,
                       "p_in":0.0,"temperature":0.0}"#;
        match load_params(text) {
            Err(ConfigError::MissingField("kappa")) => {}
            other => panic!("expected missing `kappa`, got {other:?}"),
        }
    }

    #[test]
    fn zero_mass_is_rejected() {
        let text = r#"{"units":"rad_s","omega_m":1.0,"q_factor":10.0,"kappa":1.0,
                       "omega_c":1.0,"omega_l":1.0,"mass":0.0,"cavity_length":1.0,
                       "beta_prime":0.0,"p_in":0.0,"temperature":0.0}"#;
        match load_params(text) {
            Err(ConfigError::InvalidValue { field: "mass", .. }) => {}
            other => panic!("expected mass invariant violation, got {other:?}"),
        }
    }

    #[test]
    fn unknown_key_is_rejected() {
        let text = r#"{"units":"rad_s","omega_m":1.0,"q_factor":10.0,"kappa":1.0,
                       "omega_c":1.0,"omega_l":1.0,"mass":1.0,"cavity_length":1.0,
                       "beta_prime":0.0,"p_in":0.0,"temperature":0.0,"wavelength":1.0}"#;
        match load_params(text) {
            Err(ConfigError::UnknownField(k)) => assert_eq!(k, "wavelength"),
            other => panic!("expected unknown-field error, got {other:?}"),
        }
    }

    #[test]
    fn damping_must_be_given_exactly_once() {
        let both = r#"{"units":"rad_s","omega_m":1.0,"gamma_m":0.1,"q_factor":10.0,
                       "kappa":1.0,"omega_c":1.0,"omega_l":1.0,"mass":1.0,
                       "cavity_length":1.0,"beta_prime":0.0,"p_in":0.0,"temperature":0.0}"#;
        assert!(matches!(load_params(both), Err(ConfigError::DampingSpec)));
        let neither = r#"{"units":"rad_s","omega_m":1.0,"kappa":1.0,"omega_c":1.0,
                          "omega_l":1.0,"mass":1.0,"cavity_length":1.0,"beta_prime":0.0,
                          "p_in":0.0,"temperature":0.0}"#;
        assert!(matches!(load_params(neither), Err(ConfigError::DampingSpec)));
    }

    #[test]
    fn hz_2pi_units_convert_on_load() {
        let text = r#"{"units":"hz_2pi","omega_m":1.0,"q_factor":10.0,"kappa":1.0,
                       "omega_c":10.0,"detuning":-1.0,"mass":1.0,"cavity_length":1.0,
                       "beta_prime":0.0,"p_in":0.0,"temperature":0.0}"#;
        let p = load_params(text).unwrap();
        assert_relative_eq!(p.omega_m, TAU, max_relative = 1e-15);
        assert_relative_eq!(p.detuning(), -TAU, max_relative = 1e-12);
    }
}
