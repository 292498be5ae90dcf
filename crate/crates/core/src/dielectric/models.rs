use num_complex::Complex64;

use super::{Axis, ComplexFrequency, DielectricError, MaterialParams};
use crate::units::HBAR;

fn check_wavevector(k: f64) -> Result<(), DielectricError> {
    if k >= 0.0 && k.is_finite() {
        Ok(())
    } else {
        Err(DielectricError::InvalidWavevector(k))
    }
}

/// Drude transverse response `ε_t(ω) = 1 − ω_p² / (ω² + iγω)`.
pub fn drude_transverse(
    p: &MaterialParams,
    w: ComplexFrequency,
) -> Result<Complex64, DielectricError> {
    if w.is_zero() {
        return Err(DielectricError::ZeroFrequency);
    }
    let wp2 = p.omega_p() * p.omega_p();
    let x = w.magnitude();
    Ok(match w.axis() {
        Axis::Imaginary => Complex64::new(1.0 + wp2 / (x * x + p.gamma() * x), 0.0),
        Axis::Real => 1.0 - wp2 / Complex64::new(x * x, p.gamma() * x),
    })
}

/// Hydrodynamic longitudinal response
/// `ε_l(k, ω) = 1 − ω_p² / (ω² + iωγ − β²k²)`.
///
/// At `k = 0` the arithmetic is identical to [`drude_transverse`].
pub fn hydrodynamic_longitudinal(
    p: &MaterialParams,
    k: f64,
    w: ComplexFrequency,
) -> Result<Complex64, DielectricError> {
    check_wavevector(k)?;
    if w.is_zero() && k == 0.0 {
        return Err(DielectricError::ZeroFrequency);
    }
    let wp2 = p.omega_p() * p.omega_p();
    let x = w.magnitude();
    let restoring = p.beta2() * k * k;
    match w.axis() {
        Axis::Imaginary => Ok(Complex64::new(
            1.0 + wp2 / (x * x + p.gamma() * x + restoring),
            0.0,
        )),
        Axis::Real => {
            let den = Complex64::new(x * x - restoring, p.gamma() * x);
            if den.re == 0.0 && den.im == 0.0 {
                return Err(DielectricError::Pole { k, omega: x });
            }
            Ok(1.0 - wp2 / den)
        }
    }
}

/// Excitonic resonance `ω_T(k) = (E_g − E_b + ħ²k²/2M) / ħ` (rad/s).
pub fn exciton_resonance(p: &MaterialParams, k: f64) -> Result<f64, DielectricError> {
    check_wavevector(k)?;
    let ex = p.excitonic().ok_or(DielectricError::MissingExcitonic)?;
    let kinetic = HBAR * HBAR * k * k / (2.0 * ex.mass);
    Ok((ex.gap - ex.binding + kinetic) / HBAR)
}

/// Excitonic Lorentz oscillator
/// `ε(k, ω) = ε_∞ + ω_p² / (ω_T²(k) − ω² − iγω)`, shared by the transverse
/// and longitudinal channels.
pub fn excitonic_lorentz(
    p: &MaterialParams,
    k: f64,
    w: ComplexFrequency,
) -> Result<Complex64, DielectricError> {
    let wt = exciton_resonance(p, k)?;
    // exciton_resonance already guarantees the block exists
    let weight = p.excitonic().map(|e| e.weight).unwrap_or_default();
    let x = w.magnitude();
    match w.axis() {
        Axis::Imaginary => Ok(Complex64::new(
            p.eps_inf() + weight / (wt * wt + x * x + p.gamma() * x),
            0.0,
        )),
        Axis::Real => {
            let den = Complex64::new(wt * wt - x * x, -p.gamma() * x);
            if den.re == 0.0 && den.im == 0.0 {
                return Err(DielectricError::Pole { k, omega: x });
            }
            Ok(p.eps_inf() + weight / den)
        }
    }
}
