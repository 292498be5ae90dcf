use rayon::prelude::*;

use super::{
    casimir_pressure, DperpSource, ForcePoint, LifshitzError, MirrorKind, MirrorModel, Reflector,
};
use crate::dielectric::MaterialParams;
use crate::numerics::QuadratureConfig;

/// Local and non-local pressure at one separation.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvePoint {
    pub local: ForcePoint,
    pub nonlocal: ForcePoint,
    /// `(|F_nl| − |F_l|) / |F_l|`.
    pub delta: f64,
}

impl CurvePoint {
    pub fn new(local: ForcePoint, nonlocal: ForcePoint) -> Self {
        let delta = (nonlocal.pressure.abs() - local.pressure.abs()) / local.pressure.abs();
        Self {
            local,
            nonlocal,
            delta,
        }
    }
}

/// A sweep over separations. Failed points keep their error; the rest of
/// the curve is still available.
#[derive(Debug, Clone, PartialEq)]
pub struct ForceCurve {
    pub separations: Vec<f64>,
    pub points: Vec<Result<CurvePoint, LifshitzError>>,
}

impl ForceCurve {
    pub fn is_complete(&self) -> bool {
        self.points.iter().all(Result::is_ok)
    }

    pub fn deltas(&self) -> Vec<Option<f64>> {
        self.points
            .iter()
            .map(|p| p.as_ref().ok().map(|p| p.delta))
            .collect()
    }

    pub fn failures(&self) -> impl Iterator<Item = (f64, &LifshitzError)> {
        self.separations
            .iter()
            .zip(&self.points)
            .filter_map(|(l, p)| p.as_ref().err().map(|e| (*l, e)))
    }
}

fn validate_grid(ls: &[f64]) -> Result<(), LifshitzError> {
    if ls.is_empty() {
        return Err(LifshitzError::InvalidGrid("no separations".into()));
    }
    if ls.iter().any(|l| !(*l > 0.0 && l.is_finite())) {
        return Err(LifshitzError::InvalidGrid(
            "separations must be positive and finite".into(),
        ));
    }
    if ls.windows(2).any(|w| w[0] >= w[1]) {
        return Err(LifshitzError::InvalidGrid(
            "separations must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// Compares each of `nonlocal` against the shared `local` baseline, with
/// identical mirrors on both sides. Separations are processed in parallel;
/// the output order follows `ls`.
pub fn compare_curves(
    ls: &[f64],
    local: &dyn Reflector,
    nonlocal: &[&dyn Reflector],
    cfg: &QuadratureConfig,
) -> Result<Vec<ForceCurve>, LifshitzError> {
    validate_grid(ls)?;
    cfg.validate()?;
    let rows: Vec<Vec<Result<CurvePoint, LifshitzError>>> = ls
        .par_iter()
        .map(|&l| {
            let base = casimir_pressure(l, local, local, cfg);
            nonlocal
                .iter()
                .map(|m| {
                    let base = base.clone()?;
                    let nl = casimir_pressure(l, *m, *m, cfg)?;
                    Ok(CurvePoint::new(base, nl))
                })
                .collect()
        })
        .collect();

    Ok((0..nonlocal.len())
        .map(|j| ForceCurve {
            separations: ls.to_vec(),
            points: rows.iter().map(|r| r[j].clone()).collect(),
        })
        .collect())
}

/// `δF/F` of `nonlocal_kind` against local Fresnel mirrors of the same
/// material.
pub fn nonlocal_correction_curve(
    ls: &[f64],
    material: &MaterialParams,
    nonlocal_kind: &MirrorKind,
    cfg: &QuadratureConfig,
) -> Result<ForceCurve, LifshitzError> {
    let local = MirrorModel::local(material.clone());
    let nl = MirrorModel::new(nonlocal_kind.clone(), material.clone())?;
    let mut curves = compare_curves(ls, &local, &[&nl], cfg)?;
    Ok(curves.remove(0))
}

/// Closed-form hydrodynamic ("exact") and long-wavelength Feibelman curves
/// with `d_⊥ = −i/k_l`, in that order.
pub fn feibelman_vs_exact_curve(
    ls: &[f64],
    material: &MaterialParams,
    cfg: &QuadratureConfig,
) -> Result<(ForceCurve, ForceCurve), LifshitzError> {
    let local = MirrorModel::local(material.clone());
    let exact = MirrorModel::new(MirrorKind::HydrodynamicClosedForm, material.clone())?;
    let lw = MirrorModel::new(
        MirrorKind::Feibelman(DperpSource::Hydrodynamic),
        material.clone(),
    )?;
    let mut curves = compare_curves(ls, &local, &[&exact, &lw], cfg)?;
    let lw = curves.pop().expect("two curves requested");
    let exact = curves.pop().expect("two curves requested");
    Ok((exact, lw))
}
