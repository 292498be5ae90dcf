//! Command-line driver: parses a run description, sweeps separations or
//! frequencies with `nonlocal_casimir` and writes CSV / JSON tables.

mod scenario;
pub mod table;

use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use nonlocal_casimir::dielectric::{load_material, ConfigError};
use nonlocal_casimir::lifshitz::{DperpSource, DperpTable, LifshitzError};
use nonlocal_casimir::numerics::QuadratureConfig;
use nonlocal_casimir::units::{ev_to_angular_frequency, ANGSTROM};
use nonlocal_casimir::{MaterialParams, MirrorKind, ResponseModel};
use thiserror::Error;

pub use scenario::{run, RunOutcome, Summary};
pub use table::{emit_table, Format, Table, TableError, FORCE_COLUMNS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scenario {
    /// Local and model pressure versus separation.
    ForceCurve,
    /// Non-local correction δF/F versus separation.
    DeltaCurve,
    /// Closed-form hydrodynamic against the long-wavelength Feibelman curve.
    FeibelmanCompare,
    /// Imaginary-axis reflection amplitudes versus in-plane wave-vector.
    ReflectivityScan,
    /// Real-axis bulk response and normal-incidence reflectivity versus frequency.
    DielectricScan,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::ForceCurve => "force-curve",
            Scenario::DeltaCurve => "delta-curve",
            Scenario::FeibelmanCompare => "feibelman-compare",
            Scenario::ReflectivityScan => "reflectivity-scan",
            Scenario::DielectricScan => "dielectric-scan",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Local,
    Hydro,
    ScibHydro,
    ScibLindhard,
    Feibelman,
}

#[derive(Debug, Parser)]
#[command(
    name = "casimir",
    version,
    about = "Casimir pressure between non-local metallic mirrors"
)]
pub struct Cli {
    #[arg(long, value_enum)]
    pub scenario: Scenario,
    /// Material file (.toml or .json).
    #[arg(long)]
    pub material: PathBuf,
    #[arg(long, value_enum)]
    pub model: Option<ModelArg>,
    /// d_perp for the feibelman model: a constant in Å, `hydro` for −i/k_l,
    /// or a table file of `ħξ (eV), d_perp (Å)` rows.
    #[arg(long)]
    pub dperp: Option<String>,
    /// Smallest separation (nm).
    #[arg(long, conflicts_with_all = ["xmin", "xmax"])]
    pub lmin: Option<f64>,
    /// Largest separation (nm).
    #[arg(long, conflicts_with_all = ["xmin", "xmax"])]
    pub lmax: Option<f64>,
    /// Smallest separation in units of c/ω_p.
    #[arg(long)]
    pub xmin: Option<f64>,
    /// Largest separation in units of c/ω_p.
    #[arg(long)]
    pub xmax: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub rel_tol: Option<f64>,
    #[arg(long)]
    pub max_subdivisions: Option<usize>,
    /// Replace both mirrors by perfect conductors (force-curve only).
    #[arg(long)]
    pub perfect: bool,
    /// Imaginary frequency ξ/ω_p for reflectivity-scan.
    #[arg(long, default_value_t = 0.5)]
    pub xi: f64,
    /// Smallest Q in units of ω_p/c for reflectivity-scan.
    #[arg(long, default_value_t = 0.01)]
    pub qmin: f64,
    /// Largest Q in units of ω_p/c for reflectivity-scan.
    #[arg(long, default_value_t = 100.0)]
    pub qmax: f64,
    /// Smallest photon energy ħω (eV) for dielectric-scan.
    #[arg(long, default_value_t = 0.1)]
    pub wmin: f64,
    /// Largest photon energy ħω (eV) for dielectric-scan.
    #[arg(long, default_value_t = 100.0)]
    pub wmax: f64,
    /// Wave-vector (1/nm) at which dielectric-scan evaluates ε_l.
    #[arg(long, default_value_t = 1.0)]
    pub k_nm: f64,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("--{field}: {reason}")]
    Field { field: &'static str, reason: String },
    #[error(transparent)]
    Material(#[from] ConfigError),
    #[error("--dperp table {path}: {reason}")]
    DperpTable { path: String, reason: String },
    #[error(transparent)]
    Lifshitz(#[from] LifshitzError),
    #[error(transparent)]
    Table(#[from] TableError),
}

fn field(field: &'static str, reason: impl Into<String>) -> CliError {
    CliError::Field {
        field,
        reason: reason.into(),
    }
}

/// Separation grid, in metres or in units of c/ω_p.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeparationRange {
    Nanometres { min: f64, max: f64 },
    Dimensionless { min: f64, max: f64 },
}

/// A validated run description.
#[derive(Debug, Clone)]
pub struct RunSpec {
    pub scenario: Scenario,
    pub material: MaterialParams,
    pub model: MirrorKind,
    pub range: SeparationRange,
    pub points: usize,
    pub out: PathBuf,
    pub format: Format,
    pub quadrature: QuadratureConfig,
    pub perfect: bool,
    pub xi: f64,
    pub q_range: (f64, f64),
    /// Photon energies (eV).
    pub w_range: (f64, f64),
    pub k: f64,
}

fn positive_range(lo_name: &'static str, lo: f64, hi: f64) -> Result<(f64, f64), CliError> {
    if !(lo > 0.0 && lo.is_finite() && hi.is_finite()) {
        return Err(field(
            lo_name,
            format!("range must be positive and finite, got {lo}..{hi}"),
        ));
    }
    if hi <= lo {
        return Err(field(
            lo_name,
            format!("range must be increasing, got {lo}..{hi}"),
        ));
    }
    Ok((lo, hi))
}

/// Reads a `ħξ (eV), d_perp (Å)` table; `#` starts a comment and a
/// non-numeric first line is treated as a header.
pub fn load_dperp_table(path: &Path) -> Result<DperpTable, CliError> {
    let err = |reason: String| CliError::DperpTable {
        path: path.display().to_string(),
        reason,
    };
    let text = std::fs::read_to_string(path).map_err(|e| err(e.to_string()))?;
    let mut xi = Vec::new();
    let mut d = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let cells: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        let parsed: Option<Vec<f64>> = cells.iter().map(|c| c.parse().ok()).collect();
        match parsed {
            Some(v) if v.len() == 2 => {
                xi.push(ev_to_angular_frequency(v[0]));
                d.push(v[1] * ANGSTROM);
            }
            None if xi.is_empty() && i == 0 => continue,
            _ => return Err(err(format!("line {}: expected two numbers", i + 1))),
        }
    }
    DperpTable::new(xi, d).map_err(|e| err(e.to_string()))
}

fn dperp_source(arg: &str) -> Result<DperpSource, CliError> {
    if arg.eq_ignore_ascii_case("hydro") {
        return Ok(DperpSource::Hydrodynamic);
    }
    if let Ok(v) = arg.parse::<f64>() {
        if !v.is_finite() {
            return Err(field("dperp", format!("must be finite, got {v}")));
        }
        return Ok(DperpSource::constant(v * ANGSTROM));
    }
    Ok(DperpSource::Table(load_dperp_table(Path::new(arg))?))
}

impl Cli {
    pub fn into_spec(self) -> Result<RunSpec, CliError> {
        let material = load_material(&self.material)?;

        let model_arg = self.model.unwrap_or(match self.scenario {
            Scenario::ForceCurve => ModelArg::Local,
            _ => ModelArg::Hydro,
        });
        if self.dperp.is_some() && model_arg != ModelArg::Feibelman {
            return Err(field("dperp", "only used with --model feibelman"));
        }
        let model = match model_arg {
            ModelArg::Local => MirrorKind::LocalFresnel,
            ModelArg::Hydro => MirrorKind::HydrodynamicClosedForm,
            ModelArg::ScibHydro => MirrorKind::Scib {
                longitudinal: ResponseModel::Hydrodynamic,
                transverse: ResponseModel::Drude,
            },
            ModelArg::ScibLindhard => MirrorKind::Scib {
                longitudinal: ResponseModel::Lindhard,
                transverse: ResponseModel::Drude,
            },
            ModelArg::Feibelman => {
                let arg = self
                    .dperp
                    .as_deref()
                    .ok_or_else(|| field("dperp", "required with --model feibelman"))?;
                MirrorKind::Feibelman(dperp_source(arg)?)
            }
        };
        if self.perfect && self.scenario != Scenario::ForceCurve {
            return Err(field("perfect", "only valid with --scenario force-curve"));
        }

        let range = match (self.lmin, self.lmax, self.xmin, self.xmax) {
            (Some(lo), Some(hi), None, None) => {
                let (min, max) = positive_range("lmin", lo, hi)?;
                SeparationRange::Nanometres { min, max }
            }
            (None, None, Some(lo), Some(hi)) => {
                let (min, max) = positive_range("xmin", lo, hi)?;
                SeparationRange::Dimensionless { min, max }
            }
            (None, None, None, None) => match self.scenario {
                Scenario::ForceCurve => SeparationRange::Nanometres {
                    min: 10.0,
                    max: 1000.0,
                },
                _ => SeparationRange::Dimensionless {
                    min: 0.01,
                    max: 100.0,
                },
            },
            (Some(_), None, ..) | (None, Some(_), ..) => {
                return Err(field("lmin", "--lmin and --lmax must be given together"))
            }
            _ => return Err(field("xmin", "--xmin and --xmax must be given together")),
        };

        let points = self.points.unwrap_or(match self.scenario {
            Scenario::DeltaCurve | Scenario::FeibelmanCompare => 81,
            _ => 41,
        });
        if points < 2 {
            return Err(field("points", format!("need at least 2, got {points}")));
        }

        let mut quadrature = QuadratureConfig::default();
        if let Some(t) = self.rel_tol {
            quadrature.rel_tol = t;
        }
        if let Some(m) = self.max_subdivisions {
            quadrature.max_subdivisions = m;
        }
        quadrature
            .validate()
            .map_err(|e| field("rel-tol", e.to_string()))?;

        if !(self.xi > 0.0 && self.xi.is_finite()) {
            return Err(field("xi", format!("must be positive, got {}", self.xi)));
        }
        let q_range = positive_range("qmin", self.qmin, self.qmax)?;
        let w_range = positive_range("wmin", self.wmin, self.wmax)?;
        if !(self.k_nm > 0.0 && self.k_nm.is_finite()) {
            return Err(field(
                "k-nm",
                format!("must be positive, got {}", self.k_nm),
            ));
        }

        Ok(RunSpec {
            scenario: self.scenario,
            material,
            model,
            range,
            points,
            out: self.out,
            format: self.format,
            quadrature,
            perfect: self.perfect,
            xi: self.xi,
            q_range,
            w_range,
            k: self.k_nm * 1e9,
        })
    }
}
