//! Reflection amplitudes of a vacuum / half-space interface.
//!
//! Conventions: the medium fills `z < 0`, vacuum `z > 0`. Every complex square
//! root is taken on the decaying branch (`Im ≥ 0`, ties broken by `Re ≥ 0`),
//! so on the imaginary frequency axis the normal wave-vectors are
//! `k_v = iκ`, `k_t = iK_t`, `k_l = iK_l` with positive `κ, K_t, K_l` and all
//! amplitudes come out real.
//!
//! The `p`-polarised amplitude is defined with the sign for which the local
//! result is `(ε k_v − k_t)/(ε k_v + k_t)`; on the imaginary axis
//! `0 ≤ r_p < 1` and `−1 < r_s ≤ 0` for a Drude metal.

mod feibelman;
mod scib;

pub use feibelman::{centroid_dperp, feibelman_coefficient, feibelman_rp, hydrodynamic_dperp};
pub use scib::{impedance_to_reflection, scib_impedances, scib_reflection, Impedances, ScibModel};

use num_complex::Complex64;
use thiserror::Error;

use crate::dielectric::{
    drude_transverse, Axis, ComplexFrequency, DielectricError, MaterialParams,
};
use crate::numerics::QuadratureError;
use crate::units::SPEED_OF_LIGHT;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SurfaceError {
    #[error("invalid in-plane wave-vector Q = {0}: must be finite and non-negative")]
    InvalidWavevector(f64),
    #[error("the long-wavelength Feibelman amplitude is undefined at Q = 0")]
    ZeroInPlaneWavevector,
    #[error("hydrodynamic surface response needs beta^2 > 0")]
    NoHydrodynamicPressure,
    #[error("channel sits on the longitudinal branch point k_l = 0")]
    LongitudinalBranchPoint,
    #[error("degenerate channel: {0}-polarised impedance denominator vanishes")]
    Degenerate(&'static str),
    #[error("SCIB impedances are only available on the imaginary frequency axis")]
    RealAxisUnsupported,
    #[error("{polarization}-polarised SCIB integral did not converge (achieved error {achieved:e} on {value:e})")]
    NotConverged {
        polarization: &'static str,
        value: f64,
        achieved: f64,
    },
    #[error("induced charge profile: {0}")]
    InvalidProfile(String),
    #[error("net induced charge {net:e} is too small against total {total:e}; centroid is ill-conditioned")]
    IllConditioned { net: f64, total: f64 },
    #[error(transparent)]
    Dielectric(#[from] DielectricError),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// Square root on the decaying branch: `Im ≥ 0`, and `Re ≥ 0` when `Im = 0`.
pub fn decaying_sqrt(z: Complex64) -> Complex64 {
    let mut r = z.sqrt();
    if r.im < 0.0 || (r.im == 0.0 && r.re < 0.0) {
        r = -r;
    }
    // normalise signed zeros so that identical inputs give identical bits
    Complex64::new(r.re + 0.0, r.im + 0.0)
}

/// One `(Q, ω)` point at which reflection amplitudes are evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Channel {
    q: f64,
    freq: ComplexFrequency,
}

impl Channel {
    pub fn new(q: f64, freq: ComplexFrequency) -> Result<Self, SurfaceError> {
        if !(q >= 0.0 && q.is_finite()) {
            return Err(SurfaceError::InvalidWavevector(q));
        }
        Ok(Self { q, freq })
    }

    /// Channel on the imaginary axis, `ω = iξ`.
    pub fn imaginary(q: f64, xi: f64) -> Result<Self, SurfaceError> {
        Self::new(q, ComplexFrequency::imaginary(xi)?)
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn freq(&self) -> ComplexFrequency {
        self.freq
    }

    /// `(ω/c)²`, which is `−ξ²/c²` on the imaginary axis.
    pub fn omega_over_c_sq(&self) -> Complex64 {
        let x = self.freq.magnitude() / SPEED_OF_LIGHT;
        match self.freq.axis() {
            Axis::Real => Complex64::new(x * x, 0.0),
            Axis::Imaginary => Complex64::new(-x * x, 0.0),
        }
    }

    /// Vacuum decay constant `κ = sqrt(Q² + ξ²/c²)` on the imaginary axis.
    pub fn kappa(&self) -> Option<f64> {
        self.freq.xi().map(|xi| self.q.hypot(xi / SPEED_OF_LIGHT))
    }

    /// Vacuum normal wave-vector `k_v = sqrt(ω²/c² − Q²)`.
    pub fn k_v(&self) -> Complex64 {
        match self.kappa() {
            Some(kappa) => Complex64::new(0.0, kappa),
            None => decaying_sqrt(self.omega_over_c_sq() - self.q * self.q),
        }
    }

    /// `k_t = sqrt(ε_t ω²/c² − Q²)` for a given transverse response.
    pub fn k_t(&self, eps_t: Complex64) -> Complex64 {
        decaying_sqrt(eps_t * self.omega_over_c_sq() - self.q * self.q)
    }
}

/// Normal wave-vector components in vacuum and in the medium.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalWavevectors {
    pub k_v: Complex64,
    pub k_t: Complex64,
    /// Longitudinal component; `None` for a local medium.
    pub k_l: Option<Complex64>,
}

impl NormalWavevectors {
    pub fn local(ch: &Channel, eps_t: Complex64) -> Self {
        Self {
            k_v: ch.k_v(),
            k_t: ch.k_t(eps_t),
            k_l: None,
        }
    }

    /// Local transverse wave plus the hydrodynamic longitudinal wave,
    /// `k_l² = (ω² + iγω − ω_p²)/β² − Q²`.
    pub fn hydrodynamic(ch: &Channel, p: &MaterialParams) -> Result<Self, SurfaceError> {
        if p.beta2() <= 0.0 {
            return Err(SurfaceError::NoHydrodynamicPressure);
        }
        let eps_t = drude_transverse(p, ch.freq())?;
        let x = ch.freq().magnitude();
        let wp2 = p.omega_p() * p.omega_p();
        let q2 = ch.q() * ch.q();
        let radicand = match ch.freq().axis() {
            Axis::Imaginary => {
                Complex64::new(-((x * x + p.gamma() * x + wp2) / p.beta2() + q2), 0.0)
            }
            Axis::Real => Complex64::new(x * x - wp2, p.gamma() * x) / p.beta2() - q2,
        };
        let k_l = decaying_sqrt(radicand);
        if k_l == Complex64::new(0.0, 0.0) {
            return Err(SurfaceError::LongitudinalBranchPoint);
        }
        Ok(Self {
            k_v: ch.k_v(),
            k_t: ch.k_t(eps_t),
            k_l: Some(k_l),
        })
    }
}

/// `k_v − k_t` and `ε k_v − k_t` written as differences of squares over the
/// matching sums, with `ε − 1` factored out. Near `ε = 1` the direct
/// subtractions lose `log10(1/|ε−1|)` digits.
fn fresnel_numerators(
    ch: &Channel,
    eps_t: Complex64,
    kv: Complex64,
    kt: Complex64,
) -> (Complex64, Complex64) {
    let w2 = ch.omega_over_c_sq();
    let chi = eps_t - 1.0;
    let q2 = ch.q() * ch.q();
    let s = -chi * w2 / (kv + kt);
    let p = chi * (eps_t * w2 - (eps_t + 1.0) * q2) / (eps_t * kv + kt);
    (s, p)
}

/// Local Fresnel amplitudes `(r_s, r_p)`.
pub fn fresnel_local(ch: &Channel, eps_t: Complex64) -> (Complex64, Complex64) {
    let kw = NormalWavevectors::local(ch, eps_t);
    let (kv, kt) = (kw.k_v, kw.k_t);
    let (num_s, num_p) = fresnel_numerators(ch, eps_t, kv, kt);
    (num_s / (kv + kt), num_p / (eps_t * kv + kt))
}

/// Hydrodynamic `p` amplitude
/// `(ε_t k_v − k_t + Q²(ε_t−1)/k_l) / (ε_t k_v + k_t − Q²(ε_t−1)/k_l)`
/// with a Drude `ε_t`.
pub fn hydrodynamic_rp(ch: &Channel, p: &MaterialParams) -> Result<Complex64, SurfaceError> {
    let kw = NormalWavevectors::hydrodynamic(ch, p)?;
    let eps_t = drude_transverse(p, ch.freq())?;
    // k_l is always present for the hydrodynamic constructor
    let k_l = kw.k_l.ok_or(SurfaceError::LongitudinalBranchPoint)?;
    let extra = ch.q() * ch.q() * (eps_t - 1.0) / k_l;
    let num = fresnel_numerators(ch, eps_t, kw.k_v, kw.k_t).1 + extra;
    let den = eps_t * kw.k_v + kw.k_t - extra;
    if den == Complex64::new(0.0, 0.0) {
        return Err(SurfaceError::Degenerate("p"));
    }
    Ok(num / den)
}
