use num_complex::Complex64;

use super::{Channel, NormalWavevectors, SurfaceError};
use crate::dielectric::MaterialParams;

/// Multiplier of `d_⊥` in the long-wavelength amplitude,
/// `2i k_v ε_t / (1 + ε_t k_v²/Q²)`.
pub fn feibelman_coefficient(ch: &Channel, eps_t: Complex64) -> Result<Complex64, SurfaceError> {
    let q = ch.q();
    if q == 0.0 {
        return Err(SurfaceError::ZeroInPlaneWavevector);
    }
    let kv = ch.k_v();
    // 1 + ε k_v²/Q² rearranged so that ε → 1 does not cancel
    let den = (eps_t * ch.omega_over_c_sq() - (eps_t - 1.0) * q * q) / (q * q);
    if den == Complex64::new(0.0, 0.0) {
        return Err(SurfaceError::Degenerate("p"));
    }
    Ok(Complex64::new(0.0, 2.0) * kv * eps_t / den)
}

/// First-order surface correction to a local `p` amplitude,
/// `r_p = r_p⁰ [1 + 2i k_v ε_t d_⊥ / (1 + ε_t k_v²/Q²)]`.
///
/// Undefined at `Q = 0`.
pub fn feibelman_rp(
    ch: &Channel,
    eps_t: Complex64,
    r_p0: Complex64,
    d_perp: Complex64,
) -> Result<Complex64, SurfaceError> {
    let coef = feibelman_coefficient(ch, eps_t)?;
    Ok(r_p0 + r_p0 * coef * d_perp)
}

/// Centroid `−i/k_l` of the hydrodynamic induced charge, which decays as
/// `e^{−i k_l z}` into the medium (`z < 0`). Real and negative on the
/// imaginary axis.
pub fn hydrodynamic_dperp(ch: &Channel, p: &MaterialParams) -> Result<Complex64, SurfaceError> {
    let k_l = NormalWavevectors::hydrodynamic(ch, p)?
        .k_l
        .ok_or(SurfaceError::LongitudinalBranchPoint)?;
    Ok(Complex64::new(0.0, -1.0) / k_l)
}

/// Centroid `∫ z δρ dz / ∫ δρ dz` of a sampled induced-charge profile,
/// by the trapezoidal rule on the supplied (strictly increasing) grid.
pub fn centroid_dperp(z: &[f64], rho: &[Complex64]) -> Result<Complex64, SurfaceError> {
    if z.len() != rho.len() {
        return Err(SurfaceError::InvalidProfile(format!(
            "{} grid points but {} density samples",
            z.len(),
            rho.len()
        )));
    }
    if z.len() < 2 {
        return Err(SurfaceError::InvalidProfile(
            "need at least two samples".into(),
        ));
    }
    if z.iter().any(|v| !v.is_finite()) || z.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SurfaceError::InvalidProfile(
            "grid must be finite and strictly increasing".into(),
        ));
    }
    if rho.iter().any(|r| !(r.re.is_finite() && r.im.is_finite())) {
        return Err(SurfaceError::InvalidProfile(
            "density contains non-finite values".into(),
        ));
    }

    let mut net = Complex64::new(0.0, 0.0);
    let mut moment = Complex64::new(0.0, 0.0);
    let mut total = 0.0;
    for i in 1..z.len() {
        let h = 0.5 * (z[i] - z[i - 1]);
        net += (rho[i] + rho[i - 1]) * h;
        moment += (rho[i] * z[i] + rho[i - 1] * z[i - 1]) * h;
        total += (rho[i].norm() + rho[i - 1].norm()) * h;
    }
    if net.norm().is_nan() || net.norm() <= 1e-10 * total {
        return Err(SurfaceError::IllConditioned {
            net: net.norm(),
            total,
        });
    }
    Ok(moment / net)
}
