//! Adaptive Gauss–Kronrod quadrature.
//!
//! Every integral in the crate goes through [`integrate_with`]: a globally
//! adaptive bisection scheme built on the 15-point Kronrod extension of the
//! 7-point Gauss rule. The per-panel error is `|K15 - G7|`, with no
//! QUADPACK-style rescaling, so estimates are conservative for the smooth,
//! pole-free integrands met on the imaginary frequency axis.
//!
//! Half-line integrals are mapped onto `[0, 1)` with `x = a + s t / (1 - t)`.
//! An integrand decaying like `1/x^2` becomes bounded near `t = 1` and the
//! exponential tails of the Lifshitz kernel become polynomially flat.
//!
//! Vector-valued integrands (`[f64; N]`) share one set of panels; this is how
//! complex integrands and "value plus inner error" pairs are integrated.

use thiserror::Error;

/// Kronrod abscissae on `[-1, 1]`, descending; the last entry is the centre.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the abscissae `XGK[1]`, `XGK[3]`, `XGK[5]` and the centre.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuadratureError {
    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid integration domain: {0}")]
    InvalidDomain(String),
    #[error("integrand returned a non-finite value at x = {abscissa:e}")]
    NonFinite { abscissa: f64 },
}

/// Tolerances and budget shared by all semi-infinite integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Requested relative accuracy.
    pub rel_tol: f64,
    /// Absolute floor; stops refinement of integrals whose value underflows.
    pub abs_tol: f64,
    /// Maximum number of panels kept by the adaptive scheme.
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-8,
            abs_tol: 1e-300,
            max_subdivisions: 200,
        }
    }
}

impl QuadratureConfig {
    pub fn new(
        rel_tol: f64,
        abs_tol: f64,
        max_subdivisions: usize,
    ) -> Result<Self, QuadratureError> {
        let cfg = Self {
            rel_tol,
            abs_tol,
            max_subdivisions,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        Self { rel_tol, ..self }
    }

    pub fn validate(&self) -> Result<(), QuadratureError> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(QuadratureError::InvalidConfig(format!(
                "rel_tol must be positive, got {}",
                self.rel_tol
            )));
        }
        if !(self.abs_tol >= 0.0 && self.abs_tol.is_finite()) {
            return Err(QuadratureError::InvalidConfig(format!(
                "abs_tol must be non-negative, got {}",
                self.abs_tol
            )));
        }
        if self.max_subdivisions == 0 {
            return Err(QuadratureError::InvalidConfig(
                "max_subdivisions must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Integration domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    /// `[lower, upper]`.
    Finite { lower: f64, upper: f64 },
    /// `[lower, ∞)` mapped through `x = lower + scale * t / (1 - t)`.
    HalfLine { lower: f64, scale: f64 },
}

impl Domain {
    pub fn finite(lower: f64, upper: f64) -> Self {
        Domain::Finite { lower, upper }
    }

    pub fn half_line(lower: f64, scale: f64) -> Self {
        Domain::HalfLine { lower, scale }
    }

    fn validate(&self) -> Result<(), QuadratureError> {
        match *self {
            Domain::Finite { lower, upper } => {
                if !(lower.is_finite() && upper.is_finite() && lower < upper) {
                    return Err(QuadratureError::InvalidDomain(format!(
                        "finite interval [{lower}, {upper}] is empty or non-finite"
                    )));
                }
            }
            Domain::HalfLine { lower, scale } => {
                if !lower.is_finite() {
                    return Err(QuadratureError::InvalidDomain(format!(
                        "half-line lower bound {lower} is not finite"
                    )));
                }
                if !(scale > 0.0 && scale.is_finite()) {
                    return Err(QuadratureError::InvalidDomain(format!(
                        "half-line scale must be positive, got {scale}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Parameter range on which the panels live.
    fn parameter_range(&self) -> (f64, f64) {
        match *self {
            Domain::Finite { lower, upper } => (lower, upper),
            Domain::HalfLine { .. } => (0.0, 1.0),
        }
    }

    /// Parameter value of a point in the original variable, if it lies
    /// strictly inside the domain.
    fn parameter_of(&self, x: f64) -> Option<f64> {
        match *self {
            Domain::Finite { lower, upper } => (x > lower && x < upper).then_some(x),
            Domain::HalfLine { lower, scale } => {
                let d = x - lower;
                (d > 0.0 && d.is_finite()).then(|| d / (scale + d))
            }
        }
    }

    /// Maps a parameter value to `(x, dx/dt)`.
    #[inline]
    fn map(&self, t: f64) -> (f64, f64) {
        match *self {
            Domain::Finite { .. } => (t, 1.0),
            Domain::HalfLine { lower, scale } => {
                let one_minus = 1.0 - t;
                (
                    lower + scale * t / one_minus,
                    scale / (one_minus * one_minus),
                )
            }
        }
    }
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<const N: usize> {
    pub value: [f64; N],
    /// Per-component sum of panel error estimates.
    pub error: [f64; N],
    /// False when the subdivision budget ran out before the tolerance was met;
    /// `value` is then the best available approximation.
    pub converged: bool,
    pub evaluations: usize,
    pub panels: usize,
}

impl Estimate<1> {
    pub fn scalar(&self) -> f64 {
        self.value[0]
    }

    pub fn scalar_error(&self) -> f64 {
        self.error[0]
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel<const N: usize> {
    lower: f64,
    upper: f64,
    value: [f64; N],
    error: [f64; N],
    error_norm: f64,
}

fn norm<const N: usize>(v: &[f64; N]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn gauss_kronrod<const N: usize, E, F>(
    f: &mut F,
    domain: &Domain,
    lower: f64,
    upper: f64,
) -> Result<Panel<N>, E>
where
    F: FnMut(f64) -> Result<[f64; N], E>,
    E: From<QuadratureError>,
{
    let centre = 0.5 * (lower + upper);
    let half = 0.5 * (upper - lower);

    let mut eval = |t: f64| -> Result<[f64; N], E> {
        let (x, jac) = domain.map(t);
        let mut y = f(x)?;
        for v in y.iter_mut() {
            if !v.is_finite() {
                return Err(QuadratureError::NonFinite { abscissa: x }.into());
            }
            *v *= jac;
        }
        Ok(y)
    };

    let fc = eval(centre)?;
    let mut kronrod = [0.0; N];
    let mut gauss = [0.0; N];
    for c in 0..N {
        kronrod[c] = WGK[7] * fc[c];
        gauss[c] = WG[3] * fc[c];
    }
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(centre - dx)?;
        let f2 = eval(centre + dx)?;
        for c in 0..N {
            let pair = f1[c] + f2[c];
            kronrod[c] += WGK[j] * pair;
            if j % 2 == 1 {
                gauss[c] += WG[j / 2] * pair;
            }
        }
    }

    let mut value = [0.0; N];
    let mut error = [0.0; N];
    for c in 0..N {
        value[c] = kronrod[c] * half;
        error[c] = ((kronrod[c] - gauss[c]) * half).abs();
    }
    Ok(Panel {
        lower,
        upper,
        value,
        error,
        error_norm: norm(&error),
    })
}

/// Integrates a vector-valued, fallible integrand over `domain`.
///
/// `breakpoints` are points (in the original variable) where the integrand
/// has structure on a scale very different from the mapping scale; they seed
/// the initial panel boundaries. Points outside the domain are ignored.
///
/// Panels are summed in order of position, so the result is a deterministic
/// function of the inputs.
pub fn integrate_with<const N: usize, E, F>(
    mut f: F,
    domain: &Domain,
    breakpoints: &[f64],
    cfg: &QuadratureConfig,
) -> Result<Estimate<N>, E>
where
    F: FnMut(f64) -> Result<[f64; N], E>,
    E: From<QuadratureError>,
{
    cfg.validate()?;
    domain.validate()?;

    let (lo, hi) = domain.parameter_range();
    let mut cuts: Vec<f64> = breakpoints
        .iter()
        .filter_map(|&b| domain.parameter_of(b))
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let mut edges = Vec::with_capacity(cuts.len() + 2);
    edges.push(lo);
    edges.extend(cuts);
    edges.push(hi);

    let mut panels: Vec<Panel<N>> = Vec::with_capacity(cfg.max_subdivisions.max(edges.len()));
    for w in edges.windows(2) {
        panels.push(gauss_kronrod(&mut f, domain, w[0], w[1])?);
    }
    let mut evaluations = 15 * panels.len();

    loop {
        let mut value = [0.0; N];
        let mut error = [0.0; N];
        let mut error_norm = 0.0;
        for p in &panels {
            for c in 0..N {
                value[c] += p.value[c];
                error[c] += p.error[c];
            }
            error_norm += p.error_norm;
        }

        let target = cfg.abs_tol.max(cfg.rel_tol * norm(&value));
        let done = |converged: bool, panels: usize| Estimate {
            value,
            error,
            converged,
            evaluations,
            panels,
        };
        if error_norm <= target {
            return Ok(done(true, panels.len()));
        }
        if panels.len() >= cfg.max_subdivisions {
            return Ok(done(false, panels.len()));
        }

        let mut worst = 0;
        for (i, p) in panels.iter().enumerate() {
            if p.error_norm > panels[worst].error_norm {
                worst = i;
            }
        }
        let p = panels[worst];
        let mid = 0.5 * (p.lower + p.upper);
        if !(mid > p.lower && mid < p.upper) {
            // Panel cannot be split further in floating point.
            return Ok(done(false, panels.len()));
        }
        let left = gauss_kronrod(&mut f, domain, p.lower, mid)?;
        let right = gauss_kronrod(&mut f, domain, mid, p.upper)?;
        evaluations += 30;
        panels[worst] = left;
        panels.insert(worst + 1, right);
    }
}

/// Scalar convenience wrapper around [`integrate_with`].
pub fn integrate_adaptive<F>(
    mut f: F,
    domain: &Domain,
    cfg: &QuadratureConfig,
) -> Result<Estimate<1>, QuadratureError>
where
    F: FnMut(f64) -> f64,
{
    integrate_with(|x| Ok([f(x)]), domain, &[], cfg)
}
