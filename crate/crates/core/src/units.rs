//! Physical constants (CODATA 2018, SI) and unit conversions used at the
//! configuration boundary.

/// Reduced Planck constant (J s).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Speed of light in vacuum (m/s).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Elementary charge (C).
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
/// Electron rest mass (kg).
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;
/// Vacuum permittivity (F/m).
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;
/// Bohr radius (m).
pub const BOHR_RADIUS: f64 = 5.291_772_109_03e-11;

/// Joules per electron-volt.
pub const EV: f64 = ELEMENTARY_CHARGE;

/// Angular frequency (rad/s) of a photon energy given in eV.
pub fn ev_to_angular_frequency(energy_ev: f64) -> f64 {
    energy_ev * EV / HBAR
}

/// Photon energy (eV) of an angular frequency given in rad/s.
pub fn angular_frequency_to_ev(omega: f64) -> f64 {
    omega * HBAR / EV
}

pub fn nm_to_m(x: f64) -> f64 {
    x * 1e-9
}

pub fn m_to_nm(x: f64) -> f64 {
    x * 1e9
}

pub const ANGSTROM: f64 = 1e-10;
