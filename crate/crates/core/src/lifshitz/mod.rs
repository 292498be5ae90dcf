//! Zero-temperature Lifshitz pressure between two planar mirrors.
//!
//! After rotation to the imaginary frequency axis the pressure is
//!
//! ```text
//! F/A = ħ/(2π²) ∫₀^∞ dξ ∫₀^∞ dQ Q κ Σ_α R_α e^{−2κL} / (1 − R_α e^{−2κL})
//! ```
//!
//! with `R_α = r_α⁽¹⁾ r_α⁽²⁾`, `κ = sqrt(Q² + ξ²/c²)`, reported positive for
//! attraction. It is evaluated in the dimensionless variables `a = 2Lξ/c`
//! and `b = 2Lκ = a + t`, where `Q dQ = κ dκ` gives
//!
//! ```text
//! F/A = ħc / (2π² (2L)⁴) ∫₀^∞ da ∫₀^∞ dt b² Σ_α R_α e^{−b} / (1 − R_α e^{−b})
//! ```
//!
//! The inner variable `t` starts at the light line, so the exponential
//! kernel is the same for every `a` and a unit mapping scale serves all
//! separations.

mod curve;
mod mirror;

pub use curve::{
    compare_curves, feibelman_vs_exact_curve, nonlocal_correction_curve, CurvePoint, ForceCurve,
};
pub use mirror::{DperpSource, DperpTable, FixedAmplitudes, MirrorKind, MirrorModel, Reflector};

use num_complex::Complex64;
use thiserror::Error;

use crate::dielectric::DielectricError;
use crate::numerics::{integrate_with, Domain, QuadratureConfig, QuadratureError};
use crate::surface::SurfaceError;
use crate::units::{HBAR, SPEED_OF_LIGHT};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LifshitzError {
    #[error("separation must be positive and finite, got {0} m")]
    InvalidSeparation(f64),
    #[error("invalid separation grid: {0}")]
    InvalidGrid(String),
    #[error("non-passive reflection product {product} at Q = {q:e} 1/m, xi = {xi:e} rad/s")]
    NonPassive { q: f64, xi: f64, product: f64 },
    #[error("pressure integral did not converge: {pressure:e} Pa with error estimate {error_estimate:e} Pa")]
    NotConverged { pressure: f64, error_estimate: f64 },
    #[error("d_perp = {0} m must be real on the imaginary frequency axis")]
    ComplexDperp(Complex64),
    #[error("invalid d_perp table: {0}")]
    InvalidTable(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Dielectric(#[from] DielectricError),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// Pressure at one separation.
#[derive(Debug, Clone, PartialEq)]
pub struct ForcePoint {
    /// Plate separation `L` (m).
    pub separation: f64,
    /// Pressure (Pa), positive for attraction.
    pub pressure: f64,
    /// Absolute error estimate of `pressure` (Pa).
    pub error_estimate: f64,
    pub model: String,
}

/// Outer-integral breakpoints in `a = 2Lξ/c` beyond which material features
/// are either irrelevant or already resolved by the mapping.
const BREAKPOINT_RANGE: (f64, f64) = (1e-8, 60.0);

/// Casimir pressure between mirrors `m1` and `m2` at separation `l` (m).
pub fn casimir_pressure(
    l: f64,
    m1: &dyn Reflector,
    m2: &dyn Reflector,
    cfg: &QuadratureConfig,
) -> Result<ForcePoint, LifshitzError> {
    if !(l > 0.0 && l.is_finite()) {
        return Err(LifshitzError::InvalidSeparation(l));
    }
    cfg.validate()?;
    let two_l = 2.0 * l;
    let inner_cfg = cfg.with_rel_tol(cfg.rel_tol * 0.1);

    let inner = |a: f64| -> Result<[f64; 2], LifshitzError> {
        let xi = SPEED_OF_LIGHT * a / two_l;
        let est = integrate_with::<1, LifshitzError, _>(
            |t| {
                let b = a + t;
                let q = (t * (t + 2.0 * a)).sqrt() / two_l;
                let (s1, p1) = m1.amplitudes(q, xi, cfg)?;
                let (s2, p2) = m2.amplitudes(q, xi, cfg)?;
                let decay = (-b).exp();
                let mut sum = 0.0;
                for product in [s1 * s2, p1 * p2] {
                    // 1 − R e^{−b} without cancellation for R → 1
                    let den = (1.0 - product) - product * (-b).exp_m1();
                    if den.is_nan() || den <= 0.0 {
                        return Err(LifshitzError::NonPassive { q, xi, product });
                    }
                    sum += product * decay / den;
                }
                Ok([b * b * sum])
            },
            &Domain::half_line(0.0, 1.0),
            &[],
            &inner_cfg,
        )?;
        if !est.converged {
            return Err(LifshitzError::NotConverged {
                pressure: est.scalar(),
                error_estimate: est.scalar_error(),
            });
        }
        Ok([est.scalar(), est.scalar_error()])
    };

    let mut breaks: Vec<f64> = m1
        .frequency_scales()
        .into_iter()
        .chain(m2.frequency_scales())
        .map(|w| two_l * w / SPEED_OF_LIGHT)
        .filter(|a| *a > BREAKPOINT_RANGE.0 && *a < BREAKPOINT_RANGE.1)
        .collect();
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();

    let outer =
        integrate_with::<2, LifshitzError, _>(inner, &Domain::half_line(0.0, 1.0), &breaks, cfg)?;

    let prefactor = HBAR * SPEED_OF_LIGHT / (2.0 * std::f64::consts::PI.powi(2) * two_l.powi(4));
    let pressure = prefactor * outer.value[0];
    let error_estimate = prefactor * (outer.error[0] + outer.value[1].abs());
    if !outer.converged {
        return Err(LifshitzError::NotConverged {
            pressure,
            error_estimate,
        });
    }

    let (d1, d2) = (m1.descriptor(), m2.descriptor());
    let model = if d1 == d2 { d1 } else { format!("{d1} / {d2}") };
    Ok(ForcePoint {
        separation: l,
        pressure,
        error_estimate,
        model,
    })
}

/// `π²ħc / (240 L⁴)`, the pressure between perfect conductors.
pub fn perfect_mirror_pressure(l: f64) -> f64 {
    std::f64::consts::PI.powi(2) * HBAR * SPEED_OF_LIGHT / (240.0 * l.powi(4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dielectric::MaterialParams;
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
    fn perfect_mirrors() {
        let m = FixedAmplitudes {
            r_s: -1.0,
            r_p: 1.0,
        };
        let cfg = QuadratureConfig::default();
        for l in [1e-9, 1e-7, 3e-6] {
            let f = casimir_pressure(l, &m, &m, &cfg).unwrap();
            let want = perfect_mirror_pressure(l);
            assert!(
                ((f.pressure - want) / want).abs() < 1e-6,
                "{} vs {want}",
                f.pressure
            );
            assert!(f.error_estimate < 1e-6 * want);
        }
    }

    #[test]
    fn zero_reflection_gives_zero() {
        let m = FixedAmplitudes { r_s: 0.0, r_p: 0.0 };
        let f = casimir_pressure(1e-7, &m, &m, &QuadratureConfig::default()).unwrap();
        assert_eq!(f.pressure, 0.0);
    }

    #[test]
    fn non_passive_input_is_an_error() {
        let m = FixedAmplitudes { r_s: 0.0, r_p: 1.5 };
        let r = casimir_pressure(1e-7, &m, &m, &QuadratureConfig::default());
        assert!(matches!(r, Err(LifshitzError::NonPassive { .. })), "{r:?}");
    }

    #[test]
    fn rejects_bad_separation() {
        let m = FixedAmplitudes { r_s: 0.0, r_p: 0.0 };
        let cfg = QuadratureConfig::default();
        assert!(casimir_pressure(0.0, &m, &m, &cfg).is_err());
        assert!(casimir_pressure(f64::NAN, &m, &m, &cfg).is_err());
    }

    #[test]
    fn gold_local_is_below_perfect_and_self_convergent() {
        let m = MirrorModel::local(gold());
        let l = 100e-9;
        let coarse = casimir_pressure(l, &m, &m, &QuadratureConfig::default()).unwrap();
        let fine =
            casimir_pressure(l, &m, &m, &QuadratureConfig::default().with_rel_tol(5e-9)).unwrap();
        assert!(coarse.pressure > 0.0 && coarse.pressure < perfect_mirror_pressure(l));
        assert!(((fine.pressure - coarse.pressure) / fine.pressure).abs() < 1e-4);
        assert!((fine.pressure - coarse.pressure).abs() < coarse.error_estimate);
        assert_eq!(coarse.model, "local");
    }

    #[test]
    fn mirror_symmetry() {
        let cfg = QuadratureConfig::default();
        let a = MirrorModel::local(gold());
        let b = MirrorModel::new(MirrorKind::HydrodynamicClosedForm, gold()).unwrap();
        let ab = casimir_pressure(40e-9, &a, &b, &cfg).unwrap();
        let ba = casimir_pressure(40e-9, &b, &a, &cfg).unwrap();
        assert!((ab.pressure - ba.pressure).abs() <= ab.error_estimate + ba.error_estimate);
        assert_eq!(ab.model, "local / hydrodynamic");
    }

    #[test]
    fn plasma_limit_scaling() {
        // ω_p → ∞ approaches the perfect-conductor pressure, so F L⁴ → const
        let p = MaterialParams::new(ev_to_angular_frequency(9e3), 0.0, 1.4e6).unwrap();
        let m = MirrorModel::local(p);
        let cfg = QuadratureConfig::default();
        let mut ratios = Vec::new();
        for l in [100e-9, 300e-9, 1e-6] {
            let f = casimir_pressure(l, &m, &m, &cfg).unwrap();
            ratios.push(f.pressure / perfect_mirror_pressure(l));
        }
        for r in &ratios {
            assert!(*r > 0.99 && *r < 1.0, "{ratios:?}");
        }
        assert!(ratios.windows(2).all(|w| w[1] > w[0]));
    }
}
