//! Material configuration files.
//!
//! TOML or JSON, chosen by file extension. Energies are in eV and are
//! converted to angular frequencies here; unknown keys are rejected.
//!
//! ```toml
//! omega_p_eV = 9.0
//! gamma_eV = 0.035
//! v_F_m_per_s = 1.40e6
//! # beta2_m2_per_s2 = 1.176e12
//! # eps_inf = 1.0
//! # r_s_bohr = 3.0         # replaces omega_p_eV and v_F_m_per_s
//!
//! # [excitonic]
//! # E_g_eV = 1.52
//! # E_b_eV = 0.0042
//! # M_over_m_e = 0.6
//! # omega_p_eV = 0.1
//! ```

use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;

use super::{DielectricError, ExcitonParams, MaterialParams};
use crate::units::{ev_to_angular_frequency, ELECTRON_MASS, EV};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read material file {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("material file has unsupported extension (expected .toml or .json): {0}")]
    UnsupportedExtension(PathBuf),
    #[error("malformed material description: {0}")]
    Parse(String),
    #[error("inconsistent material description: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Material(#[from] DielectricError),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MaterialFile {
    #[serde(rename = "omega_p_eV")]
    omega_p_ev: Option<f64>,
    #[serde(rename = "gamma_eV")]
    gamma_ev: f64,
    #[serde(rename = "v_F_m_per_s")]
    fermi_velocity: Option<f64>,
    #[serde(rename = "beta2_m2_per_s2")]
    beta2: Option<f64>,
    eps_inf: Option<f64>,
    r_s_bohr: Option<f64>,
    excitonic: Option<ExcitonFile>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExcitonFile {
    #[serde(rename = "E_g_eV")]
    gap_ev: f64,
    #[serde(rename = "E_b_eV")]
    binding_ev: f64,
    #[serde(rename = "M_over_m_e")]
    mass_ratio: f64,
    #[serde(rename = "omega_p_eV")]
    weight_ev: f64,
}

impl MaterialFile {
    fn build(self) -> Result<MaterialParams, ConfigError> {
        let gamma = ev_to_angular_frequency(self.gamma_ev);
        let mut p = match (self.r_s_bohr, self.omega_p_ev, self.fermi_velocity) {
            (Some(rs), None, None) => MaterialParams::from_wigner_seitz(rs, gamma)?,
            (Some(_), _, _) => {
                return Err(ConfigError::Inconsistent(
                    "r_s_bohr cannot be combined with omega_p_eV or v_F_m_per_s".into(),
                ))
            }
            (None, Some(wp), Some(vf)) => {
                MaterialParams::new(ev_to_angular_frequency(wp), gamma, vf)?
            }
            (None, None, _) => {
                return Err(ConfigError::Inconsistent(
                    "missing omega_p_eV (or r_s_bohr)".into(),
                ))
            }
            (None, _, None) => {
                return Err(ConfigError::Inconsistent(
                    "missing v_F_m_per_s (or r_s_bohr)".into(),
                ))
            }
        };
        if let Some(b2) = self.beta2 {
            p = p.with_beta2(b2)?;
        }
        if let Some(e) = self.eps_inf {
            p = p.with_eps_inf(e)?;
        }
        if let Some(ex) = self.excitonic {
            let weight = ev_to_angular_frequency(ex.weight_ev);
            p = p.with_excitonic(ExcitonParams::new(
                ex.gap_ev * EV,
                ex.binding_ev * EV,
                ex.mass_ratio * ELECTRON_MASS,
                weight * weight,
            )?);
        }
        Ok(p)
    }
}

pub fn parse_material_toml(text: &str) -> Result<MaterialParams, ConfigError> {
    let file: MaterialFile = toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
    file.build()
}

pub fn parse_material_json(text: &str) -> Result<MaterialParams, ConfigError> {
    let file: MaterialFile =
        serde_json::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
    file.build()
}

/// Loads a material file, picking the format from its extension.
pub fn load_material(path: &Path) -> Result<MaterialParams, ConfigError> {
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    let parse = match ext.as_deref() {
        Some("toml") => parse_material_toml,
        Some("json") => parse_material_json,
        _ => return Err(ConfigError::UnsupportedExtension(path.to_path_buf())),
    };
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::angular_frequency_to_ev;

    const GOLD: &str = include_str!("../../../../materials/gold.toml");

    #[test]
    fn bundled_gold_file() {
        let p = parse_material_toml(GOLD).unwrap();
        assert!((angular_frequency_to_ev(p.omega_p()) - 9.0).abs() < 1e-12);
        assert!((angular_frequency_to_ev(p.gamma()) - 0.035).abs() < 1e-14);
        assert_eq!(p.fermi_velocity(), 1.4e6);
        assert_eq!(p.beta2(), 0.6 * 1.4e6 * 1.4e6);
    }

    #[test]
    fn json_equivalent() {
        let j = r#"{"omega_p_eV": 9.0, "gamma_eV": 0.035, "v_F_m_per_s": 1.4e6}"#;
        assert_eq!(
            parse_material_json(j).unwrap(),
            parse_material_toml(GOLD).unwrap()
        );
    }

    #[test]
    fn unknown_key_is_named() {
        let err = parse_material_toml(
            "omega_p_eV = 9.0\ngamma_eV = 0.0\nv_F_m_per_s = 1e6\nplasma = 3\n",
        )
        .unwrap_err();
        assert!(err.to_string().contains("plasma"), "{err}");
    }

    #[test]
    fn wigner_seitz_and_overrides() {
        let p = parse_material_toml("r_s_bohr = 3.0\ngamma_eV = 0.0\nbeta2_m2_per_s2 = 1e12\n")
            .unwrap();
        assert_eq!(p.beta2(), 1e12);
        assert!(parse_material_toml("r_s_bohr = 3.0\nomega_p_eV = 1.0\ngamma_eV = 0.0\n").is_err());
        assert!(parse_material_toml("gamma_eV = 0.0\nv_F_m_per_s = 1e6\n").is_err());
    }

    #[test]
    fn excitonic_table() {
        let text = "omega_p_eV = 1.0\ngamma_eV = 0.001\nv_F_m_per_s = 1e5\neps_inf = 12.0\n\
                    [excitonic]\nE_g_eV = 1.52\nE_b_eV = 0.0042\nM_over_m_e = 0.6\nomega_p_eV = 0.1\n";
        let p = parse_material_toml(text).unwrap();
        let ex = p.excitonic().unwrap();
        assert!((ex.gap / EV - 1.52).abs() < 1e-12);
        assert_eq!(p.eps_inf(), 12.0);
    }

    #[test]
    fn extension_dispatch() {
        let dir = tempfile::tempdir().unwrap();
        let bad = dir.path().join("gold.yaml");
        std::fs::write(&bad, GOLD).unwrap();
        assert!(matches!(
            load_material(&bad),
            Err(ConfigError::UnsupportedExtension(_))
        ));
        let good = dir.path().join("gold.toml");
        std::fs::write(&good, GOLD).unwrap();
        assert!(load_material(&good).is_ok());
        assert!(matches!(
            load_material(&dir.path().join("missing.toml")),
            Err(ConfigError::Io { .. })
        ));
    }
}
