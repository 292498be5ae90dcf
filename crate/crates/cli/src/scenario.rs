use std::path::{Path, PathBuf};
use std::time::Instant;

use nonlocal_casimir::dielectric::{drude_transverse, ComplexFrequency};
use nonlocal_casimir::lifshitz::{compare_curves, ForceCurve, Reflector};
use nonlocal_casimir::surface::{fresnel_local, Channel};
use nonlocal_casimir::units::{ev_to_angular_frequency, SPEED_OF_LIGHT};
use nonlocal_casimir::{log_grid, MirrorKind, MirrorModel, ResponseModel};

use crate::table::{emit_table, Table, FORCE_COLUMNS};
use crate::{CliError, RunSpec, Scenario, SeparationRange};

/// One-line run report printed to stderr.
#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub scenario: &'static str,
    pub points: usize,
    /// Largest pressure error estimate (Pa); `None` for scans.
    pub max_error_estimate: Option<f64>,
    /// Seconds.
    pub wall_time: f64,
}

impl Summary {
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "scenario": self.scenario,
            "points": self.points,
            "max_error_estimate": self.max_error_estimate,
            "wall_time": self.wall_time,
        })
        .to_string()
    }
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub summary: Summary,
    /// True when some grid points failed and were written as missing values.
    pub partial: bool,
    pub outputs: Vec<PathBuf>,
}

fn grid_error(e: impl std::fmt::Display) -> CliError {
    CliError::Field {
        field: "points",
        reason: e.to_string(),
    }
}

/// Separations (m) and their dimensionless values `L ω_p / c`.
fn separations(spec: &RunSpec) -> Result<(Vec<f64>, Vec<f64>), CliError> {
    let unit = SPEED_OF_LIGHT / spec.material.omega_p();
    match spec.range {
        SeparationRange::Nanometres { min, max } => {
            let ls: Vec<f64> = log_grid(min, max, spec.points)
                .map_err(grid_error)?
                .into_iter()
                .map(|nm| nm * 1e-9)
                .collect();
            let xs = ls.iter().map(|l| l / unit).collect();
            Ok((ls, xs))
        }
        SeparationRange::Dimensionless { min, max } => {
            let xs = log_grid(min, max, spec.points).map_err(grid_error)?;
            let ls = xs.iter().map(|x| x * unit).collect();
            Ok((ls, xs))
        }
    }
}

fn force_table(curve: &ForceCurve, xs: &[f64]) -> Table {
    let mut t = Table::new(FORCE_COLUMNS);
    for ((l, x), pt) in curve.separations.iter().zip(xs).zip(&curve.points) {
        let row = match pt {
            Ok(p) => vec![
                l * 1e9,
                *x,
                p.local.pressure,
                p.nonlocal.pressure,
                p.delta,
                p.local.error_estimate,
                p.nonlocal.error_estimate,
            ],
            Err(_) => {
                let mut r = vec![l * 1e9, *x];
                r.extend([f64::NAN; 5]);
                r
            }
        };
        t.push(row).expect("row width matches FORCE_COLUMNS");
    }
    t
}

fn max_error(curves: &[ForceCurve]) -> Option<f64> {
    curves
        .iter()
        .flat_map(|c| c.points.iter().flatten())
        .flat_map(|p| [p.local.error_estimate, p.nonlocal.error_estimate])
        .fold(None, |acc: Option<f64>, e| {
            Some(acc.map_or(e, |a| a.max(e)))
        })
}

/// `<dir>/<stem>_<suffix>.<ext>` next to `out`.
fn sibling(out: &Path, suffix: &str, ext: &str) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".into());
    out.with_file_name(format!("{stem}_{suffix}.{ext}"))
}

fn longitudinal_of(kind: &MirrorKind) -> ResponseModel {
    match kind {
        MirrorKind::HydrodynamicClosedForm => ResponseModel::Hydrodynamic,
        MirrorKind::Scib { longitudinal, .. } => *longitudinal,
        _ => ResponseModel::Drude,
    }
}

fn reflectivity_scan(spec: &RunSpec) -> Result<(Table, bool), CliError> {
    let p = &spec.material;
    let local = MirrorModel::local(p.clone());
    let model = MirrorModel::new(spec.model.clone(), p.clone())?;
    let xi = spec.xi * p.omega_p();
    let qs = log_grid(spec.q_range.0, spec.q_range.1, spec.points).map_err(grid_error)?;
    let mut t = Table::new([
        "Q_over_omega_p_c",
        "r_s_local",
        "r_p_local",
        "r_s_model",
        "r_p_model",
    ]);
    let mut partial = false;
    for qn in qs {
        let q = qn * p.omega_p() / SPEED_OF_LIGHT;
        let a = local.amplitudes(q, xi, &spec.quadrature);
        let b = model.amplitudes(q, xi, &spec.quadrature);
        let row = match (a, b) {
            (Ok(a), Ok(b)) => vec![qn, a.0, a.1, b.0, b.1],
            _ => {
                partial = true;
                vec![qn, f64::NAN, f64::NAN, f64::NAN, f64::NAN]
            }
        };
        t.push(row)?;
    }
    Ok((t, partial))
}

fn dielectric_scan(spec: &RunSpec) -> Result<(Table, bool), CliError> {
    let p = &spec.material;
    let longitudinal = longitudinal_of(&spec.model);
    let ws = log_grid(spec.w_range.0, spec.w_range.1, spec.points).map_err(grid_error)?;
    let mut t = Table::new([
        "hbar_omega_eV",
        "omega_over_omega_p",
        "eps_t_re",
        "eps_t_im",
        "eps_l_re",
        "eps_l_im",
        "reflectivity",
    ]);
    let mut partial = false;
    for energy in ws {
        let omega = ev_to_angular_frequency(energy);
        let wn = omega / p.omega_p();
        let row = (|| -> Result<Vec<f64>, nonlocal_casimir::LifshitzError> {
            let w = ComplexFrequency::real(omega)?;
            let eps_t = drude_transverse(p, w)?;
            let eps_l = longitudinal.evaluate(p, spec.k, w)?;
            let normal = Channel::new(0.0, w)?;
            let r = fresnel_local(&normal, eps_t).1;
            Ok(vec![
                energy,
                wn,
                eps_t.re,
                eps_t.im,
                eps_l.re,
                eps_l.im,
                r.norm_sqr(),
            ])
        })();
        let row = row.unwrap_or_else(|_| {
            partial = true;
            let mut r = vec![energy, wn];
            r.extend([f64::NAN; 5]);
            r
        });
        t.push(row)?;
    }
    Ok((t, partial))
}

/// Executes a run and writes its output files.
pub fn run(spec: &RunSpec) -> Result<RunOutcome, CliError> {
    let start = Instant::now();
    let cfg = &spec.quadrature;
    let p = &spec.material;
    let ext = spec.format.extension();

    let mut outputs = Vec::new();
    let (points, max_error_estimate, partial) = match spec.scenario {
        Scenario::ForceCurve | Scenario::DeltaCurve => {
            let (ls, xs) = separations(spec)?;
            let (local, nonlocal) = if spec.perfect {
                (
                    MirrorModel::new(MirrorKind::PerfectConductor, p.clone())?,
                    MirrorModel::new(MirrorKind::PerfectConductor, p.clone())?,
                )
            } else {
                (
                    MirrorModel::local(p.clone()),
                    MirrorModel::new(spec.model.clone(), p.clone())?,
                )
            };
            let curves = compare_curves(&ls, &local, &[&nonlocal as &dyn Reflector], cfg)?;
            emit_table(&force_table(&curves[0], &xs), spec.format, &spec.out)?;
            outputs.push(spec.out.clone());
            (ls.len(), max_error(&curves), !curves[0].is_complete())
        }
        Scenario::FeibelmanCompare => {
            let (ls, xs) = separations(spec)?;
            let (exact, lw) = nonlocal_casimir::feibelman_vs_exact_curve(&ls, p, cfg)?;
            for (curve, suffix) in [(&exact, "exact"), (&lw, "long_wavelength")] {
                let path = sibling(&spec.out, suffix, ext);
                emit_table(&force_table(curve, &xs), spec.format, &path)?;
                outputs.push(path);
            }
            let partial = !(exact.is_complete() && lw.is_complete());
            (ls.len(), max_error(&[exact, lw]), partial)
        }
        Scenario::ReflectivityScan | Scenario::DielectricScan => {
            let (table, partial) = if spec.scenario == Scenario::ReflectivityScan {
                reflectivity_scan(spec)?
            } else {
                dielectric_scan(spec)?
            };
            emit_table(&table, spec.format, &spec.out)?;
            outputs.push(spec.out.clone());
            (table.rows.len(), None, partial)
        }
    };

    Ok(RunOutcome {
        summary: Summary {
            scenario: spec.scenario.name(),
            points,
            max_error_estimate,
            wall_time: start.elapsed().as_secs_f64(),
        },
        partial,
        outputs,
    })
}
