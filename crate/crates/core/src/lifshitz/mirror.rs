use num_complex::Complex64;

use super::LifshitzError;
use crate::dielectric::{drude_transverse, exciton_resonance, MaterialParams, ResponseModel};
use crate::numerics::QuadratureConfig;
use crate::surface::{
    feibelman_rp, fresnel_local, hydrodynamic_dperp, hydrodynamic_rp, scib_reflection, Channel,
    ScibModel,
};
use crate::units::ANGSTROM;

/// Source of reflection amplitudes on the imaginary frequency axis.
pub trait Reflector: Send + Sync {
    /// `(r_s, r_p)` at in-plane wave-vector `q` (1/m) and frequency `iξ`.
    fn amplitudes(
        &self,
        q: f64,
        xi: f64,
        cfg: &QuadratureConfig,
    ) -> Result<(f64, f64), LifshitzError>;

    /// Angular frequencies (rad/s) at which the amplitudes change character.
    fn frequency_scales(&self) -> Vec<f64> {
        Vec::new()
    }

    fn descriptor(&self) -> String;
}

/// Per-frequency `d_⊥(iξ)` values, linearly interpolated in `ξ` with
/// constant extrapolation beyond the first and last nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct DperpTable {
    xi: Vec<f64>,
    d: Vec<f64>,
}

impl DperpTable {
    /// `xi` in rad/s (strictly increasing), `d` in metres.
    pub fn new(xi: Vec<f64>, d: Vec<f64>) -> Result<Self, LifshitzError> {
        if xi.is_empty() || xi.len() != d.len() {
            return Err(LifshitzError::InvalidTable(format!(
                "{} frequencies and {} d_perp values",
                xi.len(),
                d.len()
            )));
        }
        if xi.iter().chain(&d).any(|v| !v.is_finite()) {
            return Err(LifshitzError::InvalidTable("non-finite entry".into()));
        }
        if xi[0] <= 0.0 || xi.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LifshitzError::InvalidTable(
                "frequencies must be positive and strictly increasing".into(),
            ));
        }
        Ok(Self { xi, d })
    }

    pub fn at(&self, xi: f64) -> f64 {
        let n = self.xi.len();
        if xi <= self.xi[0] {
            return self.d[0];
        }
        if xi >= self.xi[n - 1] {
            return self.d[n - 1];
        }
        let i = self.xi.partition_point(|&x| x <= xi);
        let (x0, x1) = (self.xi[i - 1], self.xi[i]);
        let t = (xi - x0) / (x1 - x0);
        self.d[i - 1] + t * (self.d[i] - self.d[i - 1])
    }

    pub fn len(&self) -> usize {
        self.xi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xi.is_empty()
    }
}

/// Where the Feibelman mirror takes its `d_⊥` from.
#[derive(Debug, Clone, PartialEq)]
pub enum DperpSource {
    /// Frequency-independent value (m). Must be real for imaginary-axis work.
    Constant(Complex64),
    /// Tabulated `d_⊥(iξ)`.
    Table(DperpTable),
    /// Hydrodynamic centroid `−i/k_l`, evaluated per channel.
    Hydrodynamic,
}

impl DperpSource {
    /// Real, frequency-independent `d_⊥` (m).
    pub fn constant(d: f64) -> Self {
        DperpSource::Constant(Complex64::new(d, 0.0))
    }

    fn value(&self, ch: &Channel, p: &MaterialParams) -> Result<Complex64, LifshitzError> {
        match self {
            DperpSource::Constant(d) => Ok(*d),
            DperpSource::Table(t) => {
                // every channel built by this module sits on the imaginary axis
                let xi = ch.freq().magnitude();
                Ok(Complex64::new(t.at(xi), 0.0))
            }
            DperpSource::Hydrodynamic => Ok(hydrodynamic_dperp(ch, p)?),
        }
    }
}

/// Optical model of one mirror.
#[derive(Debug, Clone, PartialEq)]
pub enum MirrorKind {
    /// Drude `ε_t` with Fresnel amplitudes.
    LocalFresnel,
    /// Closed-form hydrodynamic `r_p` with Drude `r_s`.
    HydrodynamicClosedForm,
    /// SCIB impedances with the given bulk responses.
    Scib {
        longitudinal: ResponseModel,
        transverse: ResponseModel,
    },
    /// Local amplitudes with the long-wavelength `d_⊥` correction to `r_p`.
    Feibelman(DperpSource),
    /// `r_s = −1`, `r_p = 1`.
    PerfectConductor,
}

impl MirrorKind {
    pub fn label(&self) -> String {
        match self {
            MirrorKind::LocalFresnel => "local".into(),
            MirrorKind::HydrodynamicClosedForm => "hydrodynamic".into(),
            MirrorKind::Scib {
                longitudinal,
                transverse,
            } => format!("scib(l={longitudinal:?}, t={transverse:?})").to_lowercase(),
            MirrorKind::Feibelman(DperpSource::Constant(d)) => {
                format!("feibelman(d={} A)", d.re / ANGSTROM)
            }
            MirrorKind::Feibelman(DperpSource::Table(t)) => {
                format!("feibelman(table, {} nodes)", t.len())
            }
            MirrorKind::Feibelman(DperpSource::Hydrodynamic) => "feibelman(hydrodynamic)".into(),
            MirrorKind::PerfectConductor => "perfect".into(),
        }
    }
}

/// A [`MirrorKind`] bound to a material.
#[derive(Debug, Clone, PartialEq)]
pub struct MirrorModel {
    pub kind: MirrorKind,
    pub material: MaterialParams,
}

impl MirrorModel {
    pub fn new(kind: MirrorKind, material: MaterialParams) -> Result<Self, LifshitzError> {
        match &kind {
            MirrorKind::Feibelman(DperpSource::Constant(d)) => {
                if !(d.re.is_finite() && d.im.is_finite()) {
                    return Err(LifshitzError::ComplexDperp(*d));
                }
                if d.im != 0.0 {
                    return Err(LifshitzError::ComplexDperp(*d));
                }
            }
            MirrorKind::Scib { .. } | MirrorKind::HydrodynamicClosedForm
                if material.beta2() <= 0.0 =>
            {
                return Err(crate::surface::SurfaceError::NoHydrodynamicPressure.into());
            }
            _ => {}
        }
        Ok(Self { kind, material })
    }

    pub fn local(material: MaterialParams) -> Self {
        Self {
            kind: MirrorKind::LocalFresnel,
            material,
        }
    }
}

impl Reflector for MirrorModel {
    fn amplitudes(
        &self,
        q: f64,
        xi: f64,
        cfg: &QuadratureConfig,
    ) -> Result<(f64, f64), LifshitzError> {
        let p = &self.material;
        let ch = Channel::imaginary(q, xi)?;
        let (rs, rp) = match &self.kind {
            MirrorKind::PerfectConductor => return Ok((-1.0, 1.0)),
            MirrorKind::LocalFresnel => fresnel_local(&ch, drude_transverse(p, ch.freq())?),
            MirrorKind::HydrodynamicClosedForm => {
                let rs = fresnel_local(&ch, drude_transverse(p, ch.freq())?).0;
                (rs, hydrodynamic_rp(&ch, p)?)
            }
            MirrorKind::Scib {
                longitudinal,
                transverse,
            } => {
                let inner = cfg.with_rel_tol(cfg.rel_tol * 0.1);
                scib_reflection(&ch, p, &ScibModel::new(*longitudinal, *transverse), &inner)?
            }
            MirrorKind::Feibelman(src) => {
                let eps = drude_transverse(p, ch.freq())?;
                let (rs, rp0) = fresnel_local(&ch, eps);
                let d = src.value(&ch, p)?;
                if d.im != 0.0 {
                    return Err(LifshitzError::ComplexDperp(d));
                }
                (rs, feibelman_rp(&ch, eps, rp0, d)?)
            }
        };
        Ok((rs.re, rp.re))
    }

    fn frequency_scales(&self) -> Vec<f64> {
        let p = &self.material;
        let mut s = vec![p.omega_p()];
        if p.gamma() > 0.0 {
            s.push(p.gamma());
        }
        if let Ok(wt) = exciton_resonance(p, 0.0) {
            s.push(wt);
        }
        s
    }

    fn descriptor(&self) -> String {
        self.kind.label()
    }
}

/// Frequency- and wave-vector-independent amplitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedAmplitudes {
    pub r_s: f64,
    pub r_p: f64,
}

impl Reflector for FixedAmplitudes {
    fn amplitudes(
        &self,
        _: f64,
        _: f64,
        _: &QuadratureConfig,
    ) -> Result<(f64, f64), LifshitzError> {
        Ok((self.r_s, self.r_p))
    }

    fn descriptor(&self) -> String {
        format!("fixed(r_s={}, r_p={})", self.r_s, self.r_p)
    }
}
