//! Zero-temperature Casimir pressure between planar mirrors with spatially
//! dispersive (non-local) optical response.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`]: adaptive Gauss–Kronrod quadrature and log grids.
//! * [`dielectric`]: bulk response functions (Drude, hydrodynamic,
//!   Lindhard, excitonic Lorentz) on the real and imaginary frequency axes.
//! * [`surface`]: reflection amplitudes of a vacuum/metal interface under
//!   local, hydrodynamic, semi-classical infinite barrier (SCIB) and
//!   Feibelman descriptions.
//! * [`lifshitz`]: the Lifshitz pressure on the imaginary frequency axis and
//!   non-local correction curves.
//!
//! Everything is a pure function of its inputs and safe to call from many
//! threads at once.
//!
//! Non-locality in a homogeneous isotropic medium enters through a
//! wave-vector dependent dielectric tensor split into longitudinal and
//! transverse parts, `ε(k, ω) = ε_l k̂k̂ + ε_t (1 − k̂k̂)`. Near a surface this
//! bulk object is not defined on its own, which is why the surface models
//! below each make a specific assumption (specular electron reflection, an
//! extra boundary condition, or a long-wavelength centroid expansion).

pub mod dielectric;
pub mod lifshitz;
pub mod numerics;
pub mod surface;
pub mod units;

pub use dielectric::{ComplexFrequency, DielectricError, MaterialParams, ResponseModel};
pub use lifshitz::{
    casimir_pressure, feibelman_vs_exact_curve, nonlocal_correction_curve, perfect_mirror_pressure,
    CurvePoint, DperpSource, ForceCurve, ForcePoint, LifshitzError, MirrorKind, MirrorModel,
    Reflector,
};
pub use numerics::{log_grid, QuadratureConfig};
pub use surface::{Channel, SurfaceError};
