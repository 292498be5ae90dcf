//! Bulk dielectric response of the mirror materials.
//!
//! All response functions take a wave-vector magnitude `k` (1/m) and a
//! [`ComplexFrequency`]. On the imaginary axis (`ω = iξ`) every model is
//! evaluated in real arithmetic and returns a value with an exactly zero
//! imaginary part; on the real axis the `ω + i0⁺` prescription is applied
//! analytically, never through a finite broadening.

mod config;
mod lindhard;
mod models;

pub use config::{load_material, parse_material_json, parse_material_toml, ConfigError};
pub use lindhard::{
    lindhard_f_complex, lindhard_f_imaginary, lindhard_f_real_axis, lindhard_long_wavelength,
    lindhard_longitudinal,
};
pub use models::{
    drude_transverse, exciton_resonance, excitonic_lorentz, hydrodynamic_longitudinal,
};

use num_complex::Complex64;
use thiserror::Error;

use crate::units::{BOHR_RADIUS, ELECTRON_MASS, ELEMENTARY_CHARGE, HBAR, VACUUM_PERMITTIVITY};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DielectricError {
    #[error("invalid material parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("invalid frequency {value}: {reason}")]
    InvalidFrequency { value: f64, reason: &'static str },
    #[error("invalid wave-vector {0}: must be finite and non-negative")]
    InvalidWavevector(f64),
    #[error("response evaluated at zero frequency (static pole)")]
    ZeroFrequency,
    #[error("Lindhard response is undefined at k = 0; use the long-wavelength limit")]
    ZeroWavevector,
    #[error("response evaluated on a pole at k = {k:e} 1/m, omega = {omega:e} rad/s")]
    Pole { k: f64, omega: f64 },
    #[error("excitonic model requested but the material has no excitonic parameters")]
    MissingExcitonic,
}

/// Which frequency axis a [`ComplexFrequency`] lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// `ω + i0⁺` with real `ω`.
    Real,
    /// `iξ` with `ξ > 0`.
    Imaginary,
}

/// A frequency on the real axis (`ω + i0⁺`) or the positive imaginary axis (`iξ`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexFrequency {
    axis: Axis,
    magnitude: f64,
}

impl ComplexFrequency {
    pub fn real(omega: f64) -> Result<Self, DielectricError> {
        if !omega.is_finite() {
            return Err(DielectricError::InvalidFrequency {
                value: omega,
                reason: "real-axis frequency must be finite",
            });
        }
        Ok(Self {
            axis: Axis::Real,
            magnitude: omega,
        })
    }

    pub fn imaginary(xi: f64) -> Result<Self, DielectricError> {
        if !(xi > 0.0 && xi.is_finite()) {
            return Err(DielectricError::InvalidFrequency {
                value: xi,
                reason: "imaginary-axis frequency must be positive and finite",
            });
        }
        Ok(Self {
            axis: Axis::Imaginary,
            magnitude: xi,
        })
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    /// `ω` on the real axis or `ξ` on the imaginary axis.
    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    /// `ξ` when on the imaginary axis.
    pub fn xi(&self) -> Option<f64> {
        (self.axis == Axis::Imaginary).then_some(self.magnitude)
    }

    pub fn value(&self) -> Complex64 {
        match self.axis {
            Axis::Real => Complex64::new(self.magnitude, 0.0),
            Axis::Imaginary => Complex64::new(0.0, self.magnitude),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.magnitude == 0.0
    }
}

/// Excitonic Lorentz-oscillator parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExcitonParams {
    /// Band gap `E_g` (J).
    pub gap: f64,
    /// Exciton binding energy `E_b` (J).
    pub binding: f64,
    /// Exciton mass `M` (kg).
    pub mass: f64,
    /// Oscillator weight `ω_p²` of the resonance (rad²/s²).
    pub weight: f64,
}

impl ExcitonParams {
    pub fn new(gap: f64, binding: f64, mass: f64, weight: f64) -> Result<Self, DielectricError> {
        let bad = |name, value, reason| DielectricError::InvalidParameter {
            name,
            value,
            reason,
        };
        if !(binding >= 0.0 && binding.is_finite()) {
            return Err(bad("E_b", binding, "must be non-negative"));
        }
        if !(gap > binding && gap.is_finite()) {
            return Err(bad("E_g", gap, "must exceed the binding energy"));
        }
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(bad("M", mass, "must be positive"));
        }
        if !(weight >= 0.0 && weight.is_finite()) {
            return Err(bad("weight", weight, "must be non-negative"));
        }
        Ok(Self {
            gap,
            binding,
            mass,
            weight,
        })
    }
}

/// Optical parameters of one mirror material, in SI units.
#[derive(Debug, Clone, PartialEq)]
pub struct MaterialParams {
    omega_p: f64,
    gamma: f64,
    fermi_velocity: f64,
    beta2: f64,
    fermi_wavevector: f64,
    eps_inf: f64,
    excitonic: Option<ExcitonParams>,
}

impl MaterialParams {
    /// Free-electron metal with plasma frequency `omega_p` (rad/s), damping
    /// `gamma` (rad/s) and Fermi velocity `fermi_velocity` (m/s).
    ///
    /// `β² = 3 v_F² / 5` and `k_F = m v_F / ħ` are derived.
    pub fn new(omega_p: f64, gamma: f64, fermi_velocity: f64) -> Result<Self, DielectricError> {
        if !(omega_p > 0.0 && omega_p.is_finite()) {
            return Err(DielectricError::InvalidParameter {
                name: "omega_p",
                value: omega_p,
                reason: "must be positive",
            });
        }
        if !(gamma >= 0.0 && gamma.is_finite()) {
            return Err(DielectricError::InvalidParameter {
                name: "gamma",
                value: gamma,
                reason: "must be non-negative",
            });
        }
        if !(fermi_velocity > 0.0 && fermi_velocity.is_finite()) {
            return Err(DielectricError::InvalidParameter {
                name: "v_F",
                value: fermi_velocity,
                reason: "must be positive",
            });
        }
        Ok(Self {
            omega_p,
            gamma,
            fermi_velocity,
            beta2: 3.0 * fermi_velocity * fermi_velocity / 5.0,
            fermi_wavevector: ELECTRON_MASS * fermi_velocity / HBAR,
            eps_inf: 1.0,
            excitonic: None,
        })
    }

    /// Free-electron gas with Wigner–Seitz radius `r_s` (in Bohr radii).
    ///
    /// `n = 3 / (4π r_s³)`, `k_F = (3π² n)^{1/3}`, `v_F = ħ k_F / m` and
    /// `ω_p² = n e² / (ε₀ m)`.
    pub fn from_wigner_seitz(r_s_bohr: f64, gamma: f64) -> Result<Self, DielectricError> {
        if !(r_s_bohr > 0.0 && r_s_bohr.is_finite()) {
            return Err(DielectricError::InvalidParameter {
                name: "r_s",
                value: r_s_bohr,
                reason: "must be positive",
            });
        }
        let density = wigner_seitz_density(r_s_bohr);
        let k_f = (3.0 * std::f64::consts::PI.powi(2) * density).cbrt();
        let v_f = HBAR * k_f / ELECTRON_MASS;
        let omega_p = (density * ELEMENTARY_CHARGE * ELEMENTARY_CHARGE
            / (VACUUM_PERMITTIVITY * ELECTRON_MASS))
            .sqrt();
        let mut p = Self::new(omega_p, gamma, v_f)?;
        p.fermi_wavevector = k_f;
        Ok(p)
    }

    /// Overrides the hydrodynamic speed squared (m²/s²).
    pub fn with_beta2(mut self, beta2: f64) -> Result<Self, DielectricError> {
        if !(beta2 >= 0.0 && beta2.is_finite()) {
            return Err(DielectricError::InvalidParameter {
                name: "beta2",
                value: beta2,
                reason: "must be non-negative",
            });
        }
        self.beta2 = beta2;
        Ok(self)
    }

    pub fn with_eps_inf(mut self, eps_inf: f64) -> Result<Self, DielectricError> {
        if !(eps_inf >= 1.0 && eps_inf.is_finite()) {
            return Err(DielectricError::InvalidParameter {
                name: "eps_inf",
                value: eps_inf,
                reason: "must be at least 1",
            });
        }
        self.eps_inf = eps_inf;
        Ok(self)
    }

    pub fn with_fermi_wavevector(mut self, k_f: f64) -> Result<Self, DielectricError> {
        if !(k_f > 0.0 && k_f.is_finite()) {
            return Err(DielectricError::InvalidParameter {
                name: "k_F",
                value: k_f,
                reason: "must be positive",
            });
        }
        self.fermi_wavevector = k_f;
        Ok(self)
    }

    pub fn with_gamma(mut self, gamma: f64) -> Result<Self, DielectricError> {
        if !(gamma >= 0.0 && gamma.is_finite()) {
            return Err(DielectricError::InvalidParameter {
                name: "gamma",
                value: gamma,
                reason: "must be non-negative",
            });
        }
        self.gamma = gamma;
        Ok(self)
    }

    pub fn with_excitonic(mut self, excitonic: ExcitonParams) -> Self {
        self.excitonic = Some(excitonic);
        self
    }

    pub fn omega_p(&self) -> f64 {
        self.omega_p
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn fermi_velocity(&self) -> f64 {
        self.fermi_velocity
    }

    pub fn beta2(&self) -> f64 {
        self.beta2
    }

    pub fn fermi_wavevector(&self) -> f64 {
        self.fermi_wavevector
    }

    pub fn eps_inf(&self) -> f64 {
        self.eps_inf
    }

    pub fn excitonic(&self) -> Option<&ExcitonParams> {
        self.excitonic.as_ref()
    }

    /// Conduction-electron density implied by `ω_p` (1/m³).
    pub fn electron_density(&self) -> f64 {
        VACUUM_PERMITTIVITY * ELECTRON_MASS * self.omega_p * self.omega_p
            / (ELEMENTARY_CHARGE * ELEMENTARY_CHARGE)
    }

    /// Thomas–Fermi screening wave-vector squared, `3 ω_p² / v_F²`.
    pub fn thomas_fermi_wavevector_sq(&self) -> f64 {
        3.0 * self.omega_p * self.omega_p / (self.fermi_velocity * self.fermi_velocity)
    }
}

/// Electron density (1/m³) of a gas with Wigner–Seitz radius `r_s` Bohr radii.
pub fn wigner_seitz_density(r_s_bohr: f64) -> f64 {
    let r = r_s_bohr * BOHR_RADIUS;
    3.0 / (4.0 * std::f64::consts::PI * r * r * r)
}

/// Selects one of the bulk response functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResponseModel {
    /// `ε = 1`.
    Vacuum,
    /// Local Drude response.
    Drude,
    /// Hydrodynamic longitudinal response.
    Hydrodynamic,
    /// Lindhard (RPA) longitudinal response.
    Lindhard,
    /// Excitonic Lorentz oscillator with a kinetic-energy shifted resonance.
    ExcitonicLorentz,
}

impl ResponseModel {
    pub fn evaluate(
        self,
        p: &MaterialParams,
        k: f64,
        w: ComplexFrequency,
    ) -> Result<Complex64, DielectricError> {
        match self {
            ResponseModel::Vacuum => Ok(Complex64::new(1.0, 0.0)),
            ResponseModel::Drude => drude_transverse(p, w),
            ResponseModel::Hydrodynamic => hydrodynamic_longitudinal(p, k, w),
            ResponseModel::Lindhard => lindhard_longitudinal(p, k, w),
            ResponseModel::ExcitonicLorentz => excitonic_lorentz(p, k, w),
        }
    }

    /// True when the response does not depend on `k`.
    pub fn is_local(self) -> bool {
        matches!(self, ResponseModel::Vacuum | ResponseModel::Drude)
    }

    /// Wave-vector magnitudes (1/m) around which the response changes
    /// appreciably at frequency `w`. Used to seed quadrature panels.
    pub fn wavevector_scales(self, p: &MaterialParams, w: ComplexFrequency) -> Vec<f64> {
        let omega = w.magnitude().abs();
        let mut scales = match self {
            ResponseModel::Vacuum | ResponseModel::Drude => vec![],
            ResponseModel::Hydrodynamic => {
                let g = p.gamma() * omega;
                let d = omega * omega + p.omega_p() * p.omega_p();
                if p.beta2() > 0.0 {
                    vec![(d.hypot(g) / p.beta2()).sqrt()]
                } else {
                    vec![]
                }
            }
            ResponseModel::Lindhard => vec![
                2.0 * p.fermi_wavevector(),
                p.thomas_fermi_wavevector_sq().sqrt(),
                omega / p.fermi_velocity(),
            ],
            ResponseModel::ExcitonicLorentz => match p.excitonic() {
                Some(ex) => {
                    let e = ex.gap - ex.binding + HBAR * omega;
                    vec![(2.0 * ex.mass * e).sqrt() / HBAR]
                }
                None => vec![],
            },
        };
        scales.retain(|s| *s > 0.0 && s.is_finite());
        scales
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::ev_to_angular_frequency;

    fn gold() -> MaterialParams {
        MaterialParams::new(
            ev_to_angular_frequency(9.0),
            ev_to_angular_frequency(0.035),
            1.4e6,
        )
        .unwrap()
    }

    #[test]
    fn beta2_default_identity() {
        let p = gold();
        assert_eq!(p.beta2(), 3.0 * 1.4e6 * 1.4e6 / 5.0);
    }

    #[test]
    fn wigner_seitz_round_trip() {
        for rs in [2.0, 3.0, 4.0, 5.0] {
            let p = MaterialParams::from_wigner_seitz(rs, 0.0).unwrap();
            let n = wigner_seitz_density(rs);
            assert!(((p.electron_density() - n) / n).abs() < 1e-12);
            // k_F and v_F must be mutually consistent for the free-electron gas
            let kf = ELECTRON_MASS * p.fermi_velocity() / HBAR;
            assert!(((kf - p.fermi_wavevector()) / kf).abs() < 1e-12);
        }
    }

    #[test]
    fn rs_density_scaling() {
        // smaller r_s means denser gas, larger plasma frequency
        let a = MaterialParams::from_wigner_seitz(2.0, 0.0).unwrap();
        let b = MaterialParams::from_wigner_seitz(5.0, 0.0).unwrap();
        assert!(a.omega_p() > b.omega_p());
        assert!(a.fermi_velocity() > b.fermi_velocity());
    }

    #[test]
    fn invariants_rejected() {
        assert!(MaterialParams::new(0.0, 0.0, 1.0).is_err());
        assert!(MaterialParams::new(1.0, -1.0, 1.0).is_err());
        assert!(MaterialParams::new(1.0, 0.0, 0.0).is_err());
        assert!(gold().with_eps_inf(0.5).is_err());
        assert!(ExcitonParams::new(1.0, 2.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn frequency_axis_invariants() {
        assert!(ComplexFrequency::imaginary(0.0).is_err());
        assert!(ComplexFrequency::imaginary(-1.0).is_err());
        assert!(ComplexFrequency::real(f64::NAN).is_err());
        let w = ComplexFrequency::imaginary(2.0).unwrap();
        assert_eq!(w.value(), Complex64::new(0.0, 2.0));
        assert_eq!(w.xi(), Some(2.0));
        let w = ComplexFrequency::real(-3.0).unwrap();
        assert_eq!(w.value().im, 0.0);
        assert_eq!(w.xi(), None);
    }
}
