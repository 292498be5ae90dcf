//! Lindhard (RPA) longitudinal dielectric function of the free-electron gas.
//!
//! `ε_l(k, ω) = 1 + (3 ω_p² / k² v_F²) f_l(w, u)` with `w = k / 2k_F`,
//! `u = ω / k v_F` and
//!
//! ```text
//! f_l = 1/2 + 1/(8w) { [1 − (w−u)²] ln((w−u+1)/(w−u−1))
//!                    + [1 − (w+u)²] ln((w+u+1)/(w+u−1)) }
//! ```
//!
//! Three evaluation routes are provided:
//!
//! * [`lindhard_f_complex`]: the formula above with principal complex logs,
//!   valid for `u` off the real axis.
//! * [`lindhard_f_real_axis`]: the `u + i0⁺` limit for real `u`.
//! * [`lindhard_f_imaginary`]: `u = iν` in real arithmetic. The two logs are
//!   complex conjugates there, leaving a log-modulus and an arctangent pair.
//!   For `w² + ν² > 4` an odd-power series in `1/(w ± iν)` is used instead,
//!   which avoids the cancellation of the leading `1/2` against the logs.

use num_complex::Complex64;

use super::{Axis, ComplexFrequency, DielectricError, MaterialParams};

/// Above this `w² + ν²` the imaginary-axis route switches to the series.
const SERIES_RADIUS_SQ: f64 = 4.0;

/// One bracket term `[1 − a²] ln((a+1)/(a−1))` with principal logs.
fn bracket_complex(a: Complex64) -> Complex64 {
    let coef = 1.0 - a * a;
    if coef == Complex64::new(0.0, 0.0) {
        return coef;
    }
    coef * ((a + 1.0) / (a - 1.0)).ln()
}

/// `f_l(w, u)` with principal-branch complex logarithms.
pub fn lindhard_f_complex(w: f64, u: Complex64) -> Complex64 {
    let a_minus = Complex64::new(w, 0.0) - u;
    let a_plus = Complex64::new(w, 0.0) + u;
    0.5 + (bracket_complex(a_minus) + bracket_complex(a_plus)) / (8.0 * w)
}

/// `[1 − a²] ln((a+1)/(a−1))` for real `a` approached from `a + i·side·0⁺`.
fn bracket_real(a: f64, side: f64) -> Complex64 {
    let coef = 1.0 - a * a;
    if coef == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let ratio = (a + 1.0) / (a - 1.0);
    let re = ratio.abs().ln();
    // |a| < 1 puts the ratio on the negative real axis: arg = -side·π
    let im = if a.abs() < 1.0 {
        -side * std::f64::consts::PI
    } else {
        0.0
    };
    coef * Complex64::new(re, im)
}

/// `f_l(w, u)` on the real frequency axis, `u → u + i0⁺`.
pub fn lindhard_f_real_axis(w: f64, u: f64) -> Complex64 {
    // u + i0⁺ sends w − u below the real axis and w + u above it
    0.5 + (bracket_real(w - u, -1.0) + bracket_real(w + u, 1.0)) / (8.0 * w)
}

/// `f_l(w, iν)` for `ν ≥ 0` in real arithmetic.
pub fn lindhard_f_imaginary(w: f64, nu: f64) -> f64 {
    let r2 = w * w + nu * nu;
    if r2 > SERIES_RADIUS_SQ {
        return series_imaginary(w, nu, r2);
    }
    let coef = 1.0 + nu * nu - w * w;
    let log_term = if coef == 0.0 {
        0.0
    } else {
        let d = (w - 1.0) * (w - 1.0) + nu * nu;
        coef / (8.0 * w) * (4.0 * w / d).ln_1p()
    };
    let atan_term = if nu == 0.0 {
        0.0
    } else {
        0.5 * nu * (((1.0 + w) / nu).atan() + ((1.0 - w) / nu).atan())
    };
    0.5 + log_term - atan_term
}

/// `f_l = (1/2w) Σ_n [(w+u)^{-m} + (w−u)^{-m}] / (m(m+2))`, `m = 2n+1`,
/// evaluated at `u = iν`. With `δ = atan2(w, ν)` the bracket is
/// `2 (−1)^n sin(mδ) / r^m`.
fn series_imaginary(w: f64, nu: f64, r2: f64) -> f64 {
    let r = r2.sqrt();
    let delta = w.atan2(nu);
    let inv_r2 = 1.0 / r2;
    let mut rpow = 1.0 / r;
    let mut sign = 1.0;
    let mut sum = 0.0;
    for n in 0..400 {
        let m = (2 * n + 1) as f64;
        let term = sign * rpow * (m * delta).sin() / (m * (m + 2.0));
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            break;
        }
        rpow *= inv_r2;
        sign = -sign;
    }
    sum / w
}

/// Lindhard longitudinal dielectric function.
pub fn lindhard_longitudinal(
    p: &MaterialParams,
    k: f64,
    w: ComplexFrequency,
) -> Result<Complex64, DielectricError> {
    if !k.is_finite() || k < 0.0 {
        return Err(DielectricError::InvalidWavevector(k));
    }
    if k == 0.0 {
        return Err(DielectricError::ZeroWavevector);
    }
    let vf = p.fermi_velocity();
    let reduced_k = k / (2.0 * p.fermi_wavevector());
    let prefactor = 3.0 * p.omega_p() * p.omega_p() / (k * k * vf * vf);
    let u = w.magnitude() / (k * vf);
    Ok(match w.axis() {
        Axis::Imaginary => {
            Complex64::new(1.0 + prefactor * lindhard_f_imaginary(reduced_k, u), 0.0)
        }
        Axis::Real => 1.0 + prefactor * lindhard_f_real_axis(reduced_k, u),
    })
}

/// The `k → 0` limit of [`lindhard_longitudinal`], `1 − ω_p² / ω²`.
pub fn lindhard_long_wavelength(
    p: &MaterialParams,
    w: ComplexFrequency,
) -> Result<Complex64, DielectricError> {
    if w.is_zero() {
        return Err(DielectricError::ZeroFrequency);
    }
    let wp2 = p.omega_p() * p.omega_p();
    let x = w.magnitude();
    Ok(match w.axis() {
        Axis::Imaginary => Complex64::new(1.0 + wp2 / (x * x), 0.0),
        Axis::Real => Complex64::new(1.0 - wp2 / (x * x), 0.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::ev_to_angular_frequency;

    fn gold() -> MaterialParams {
        MaterialParams::new(ev_to_angular_frequency(9.0), 0.0, 1.4e6).unwrap()
    }

    /// `f_l(w, iν)` computed with 40-digit arithmetic (mpmath, principal logs).
    #[allow(clippy::excessive_precision)]
    const HIGH_PRECISION: &[(f64, f64, f64)] = &include!("lindhard_oracle.in");

    #[test]
    fn static_bracket_zero() {
        let f = lindhard_f_real_axis(1.0, 0.0);
        assert_eq!(f, Complex64::new(0.5, 0.0));
    }

    #[test]
    fn imaginary_route_matches_high_precision() {
        for &(w, nu, want) in HIGH_PRECISION {
            let got = lindhard_f_imaginary(w, nu);
            assert!(
                ((got - want) / want).abs() < 1e-12,
                "w={w} nu={nu}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn series_and_closed_form_agree_at_switch() {
        for w in [0.05, 0.5, 1.0, 1.5, 1.99] {
            let nu = (SERIES_RADIUS_SQ - w * w).sqrt();
            let r2 = w * w + nu * nu;
            let series = series_imaginary(w, nu, r2);
            let closed = {
                let coef = 1.0 + nu * nu - w * w;
                let d = (w - 1.0) * (w - 1.0) + nu * nu;
                0.5 + coef / (8.0 * w) * (4.0 * w / d).ln_1p()
                    - 0.5 * nu * (((1.0 + w) / nu).atan() + ((1.0 - w) / nu).atan())
            };
            assert!(((series - closed) / closed).abs() < 1e-13, "w={w}");
        }
    }

    #[test]
    fn real_axis_landau_damping_is_absorptive() {
        // inside the particle–hole continuum Im ε_l > 0
        let p = gold();
        let k = 0.5 * p.fermi_wavevector();
        let omega = 0.3 * k * p.fermi_velocity();
        let e = lindhard_longitudinal(&p, k, ComplexFrequency::real(omega).unwrap()).unwrap();
        assert!(e.im > 0.0);
        // small-u limit: Im f_l = π u / 2
        let f = lindhard_f_real_axis(0.1, 0.01);
        assert!((f.im - std::f64::consts::PI * 0.01 / 2.0).abs() < 1e-12);
    }

    #[test]
    fn real_axis_route_is_limit_of_complex_route() {
        for (w, u) in [(0.3, 0.2), (0.3, 1.0), (1.5, 0.4), (0.7, 2.5)] {
            let exact = lindhard_f_real_axis(w, u);
            let near = lindhard_f_complex(w, Complex64::new(u, 1e-9));
            assert!(
                (exact - near).norm() < 1e-6,
                "w={w} u={u}: {exact} vs {near}"
            );
        }
    }

    #[test]
    fn zero_wavevector_is_an_error() {
        let w = ComplexFrequency::imaginary(1e15).unwrap();
        assert_eq!(
            lindhard_longitudinal(&gold(), 0.0, w).unwrap_err(),
            DielectricError::ZeroWavevector
        );
        let lw = lindhard_long_wavelength(&gold(), w).unwrap();
        let small_k = lindhard_longitudinal(&gold(), 1e3, w).unwrap();
        assert!(((lw - small_k) / lw).norm() < 1e-9);
    }
}
