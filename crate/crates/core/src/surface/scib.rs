//! Semi-classical infinite barrier (SCIB) surface impedances.
//!
//! With specular electron reflection the half-space behaves like an infinite
//! medium driven by a current sheet, and
//!
//! ```text
//! Z_s = (i/π)(ω/c) ∫ dk_z / ((ω²/c²) ε_t − k²)
//! Z_p = (i/π)(ω/c) ∫ dk_z / k² [ Q² / ((ω²/c²) ε_l) + k_z² / ((ω²/c²) ε_t − k²) ]
//! ```
//!
//! over `k_z ∈ ℝ`, with `k² = Q² + k_z²`. On the imaginary axis both
//! integrands are real and sign-definite.
//!
//! The vacuum impedances are the same integrals with `ε = 1`. Integrating the
//! deviations `Z − Z_v` instead of `Z` keeps the reflection amplitudes
//! accurate to the quadrature tolerance even when `|r| ≪ 1`.

use num_complex::Complex64;

use super::{Channel, SurfaceError};
use crate::dielectric::{MaterialParams, ResponseModel};
use crate::numerics::{integrate_with, Domain, QuadratureConfig};

/// Longitudinal and transverse bulk responses fed to the SCIB integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScibModel {
    pub longitudinal: ResponseModel,
    pub transverse: ResponseModel,
}

impl ScibModel {
    pub fn new(longitudinal: ResponseModel, transverse: ResponseModel) -> Self {
        Self {
            longitudinal,
            transverse,
        }
    }

    /// Hydrodynamic `ε_l` with Drude `ε_t`.
    pub fn hydrodynamic() -> Self {
        Self::new(ResponseModel::Hydrodynamic, ResponseModel::Drude)
    }

    /// Lindhard `ε_l` with Drude `ε_t`.
    pub fn lindhard() -> Self {
        Self::new(ResponseModel::Lindhard, ResponseModel::Drude)
    }

    /// Drude response in both channels.
    pub fn local() -> Self {
        Self::new(ResponseModel::Drude, ResponseModel::Drude)
    }
}

/// Surface and vacuum impedances of one channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Impedances {
    pub z_s: Complex64,
    pub z_p: Complex64,
    pub z_vs: Complex64,
    pub z_vp: Complex64,
}

impl Impedances {
    /// Vacuum impedances `Z_vs = ω/(k_v c)` and `Z_vp = k_v c/ω`, with the
    /// surface impedances set equal to them.
    pub fn vacuum(ch: &Channel) -> Self {
        let (z_vs, z_vp) = vacuum_pair(ch);
        Self {
            z_s: z_vs,
            z_p: z_vp,
            z_vs,
            z_vp,
        }
    }
}

fn vacuum_pair(ch: &Channel) -> (Complex64, Complex64) {
    match ch.kappa() {
        Some(kappa) => {
            let x = ch.freq().magnitude() / crate::units::SPEED_OF_LIGHT;
            (
                Complex64::new(x / kappa, 0.0),
                Complex64::new(kappa / x, 0.0),
            )
        }
        None => {
            let w = ch.freq().value() / crate::units::SPEED_OF_LIGHT;
            let kv = ch.k_v();
            (w / kv, kv / w)
        }
    }
}

/// `r_s = (Z_s − Z_vs)/(Z_s + Z_vs)`, `r_p = (Z_vp − Z_p)/(Z_vp + Z_p)`.
pub fn impedance_to_reflection(z: &Impedances) -> Result<(Complex64, Complex64), SurfaceError> {
    let zero = Complex64::new(0.0, 0.0);
    let den_s = z.z_s + z.z_vs;
    if den_s == zero {
        return Err(SurfaceError::Degenerate("s"));
    }
    let den_p = z.z_vp + z.z_p;
    if den_p == zero {
        return Err(SurfaceError::Degenerate("p"));
    }
    Ok(((z.z_s - z.z_vs) / den_s, (z.z_vp - z.z_p) / den_p))
}

/// Deviations `Z_s − Z_vs`, `Z_p − Z_vp` on the imaginary axis.
struct Deviations {
    s: f64,
    p: f64,
    z_vs: f64,
    z_vp: f64,
}

fn deviations(
    ch: &Channel,
    p: &MaterialParams,
    model: &ScibModel,
    cfg: &QuadratureConfig,
) -> Result<Deviations, SurfaceError> {
    let xi = ch.freq().xi().ok_or(SurfaceError::RealAxisUnsupported)?;
    let w = ch.freq();
    let x = xi / crate::units::SPEED_OF_LIGHT;
    let x2 = x * x;
    let q = ch.q();
    let q2 = q * q;
    let kappa = q.hypot(x);

    let eps_t = |k: f64| model.transverse.evaluate(p, k, w).map(|e| e.re);
    let eps_l = |k: f64| model.longitudinal.evaluate(p, k, w).map(|e| e.re);

    // Transverse structure sits between κ and K_t = sqrt(Q² + x² ε_t).
    let k_t = (q2 + x2 * eps_t(q)?).sqrt();
    let to_kz = |scales: Vec<f64>| -> Vec<f64> {
        scales
            .into_iter()
            .filter(|&k| k > q)
            .map(|k| (k * k - q2).sqrt())
            .collect()
    };
    let mut transverse_breaks = to_kz(model.transverse.wavevector_scales(p, w));
    transverse_breaks.extend([x, k_t]);
    if q > 0.0 {
        transverse_breaks.push(q);
    }

    let run = |polarization: &'static str,
               f: &dyn Fn(f64) -> Result<f64, SurfaceError>,
               scale: f64,
               breaks: &[f64]|
     -> Result<f64, SurfaceError> {
        let est = integrate_with::<1, SurfaceError, _>(
            |kz| Ok([f(kz)?]),
            &Domain::half_line(0.0, scale),
            breaks,
            cfg,
        )?;
        if !est.converged {
            return Err(SurfaceError::NotConverged {
                polarization,
                value: est.scalar(),
                achieved: est.scalar_error(),
            });
        }
        Ok(est.scalar())
    };

    // ∫ x²(ε_t−1) / ((k² + x²ε_t)(k² + x²)) dk_z, shared by both channels
    // up to the k_z²/k² weight of the p channel.
    let transverse_kernel = |kz: f64| -> Result<(f64, f64), SurfaceError> {
        let k2 = q2 + kz * kz;
        let e = eps_t(k2.sqrt())?;
        let v = x2 * (e - 1.0) / ((k2 + x2 * e) * (k2 + x2));
        Ok((v, k2))
    };

    let s_integral = run(
        "s",
        &|kz| transverse_kernel(kz).map(|(v, _)| v),
        k_t,
        &transverse_breaks,
    )?;
    let p_transverse = run(
        "p",
        &|kz| transverse_kernel(kz).map(|(v, k2)| v * kz * kz / k2),
        k_t,
        &transverse_breaks,
    )?;
    let p_longitudinal = if q > 0.0 {
        let breaks = to_kz(model.longitudinal.wavevector_scales(p, w));
        let integral = run(
            "p",
            &|kz| {
                let k2 = q2 + kz * kz;
                let e = eps_l(k2.sqrt())?;
                Ok((e - 1.0) / (e * k2))
            },
            q,
            &breaks,
        )?;
        q2 / x2 * integral
    } else {
        0.0
    };

    let pref = 2.0 * x / std::f64::consts::PI;
    Ok(Deviations {
        s: -pref * s_integral,
        p: -pref * (p_longitudinal + p_transverse),
        z_vs: x / kappa,
        z_vp: kappa / x,
    })
}

/// SCIB surface impedances on the imaginary frequency axis.
pub fn scib_impedances(
    ch: &Channel,
    p: &MaterialParams,
    model: &ScibModel,
    cfg: &QuadratureConfig,
) -> Result<Impedances, SurfaceError> {
    let d = deviations(ch, p, model, cfg)?;
    let c = |v: f64| Complex64::new(v, 0.0);
    Ok(Impedances {
        z_s: c(d.z_vs + d.s),
        z_p: c(d.z_vp + d.p),
        z_vs: c(d.z_vs),
        z_vp: c(d.z_vp),
    })
}

/// SCIB reflection amplitudes `(r_s, r_p)` on the imaginary frequency axis.
///
/// Algebraically identical to `impedance_to_reflection(scib_impedances(..))`
/// but formed from the impedance deviations directly.
pub fn scib_reflection(
    ch: &Channel,
    p: &MaterialParams,
    model: &ScibModel,
    cfg: &QuadratureConfig,
) -> Result<(Complex64, Complex64), SurfaceError> {
    let d = deviations(ch, p, model, cfg)?;
    let den_s = 2.0 * d.z_vs + d.s;
    let den_p = 2.0 * d.z_vp + d.p;
    if den_s == 0.0 {
        return Err(SurfaceError::Degenerate("s"));
    }
    if den_p == 0.0 {
        return Err(SurfaceError::Degenerate("p"));
    }
    Ok((
        Complex64::new(d.s / den_s, 0.0),
        Complex64::new(-d.p / den_p, 0.0),
    ))
}
