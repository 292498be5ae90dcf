use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GridError {
    #[error("log grid needs 0 < min < max, got min = {min}, max = {max}")]
    Bounds { min: f64, max: f64 },
    #[error("log grid needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("log grid of {n} points between {min} and {max} is not strictly increasing in f64")]
    Degenerate { min: f64, max: f64, n: usize },
}

/// Geometric progression from `min` to `max` with `n` samples.
///
/// Both endpoints are reproduced bit-exactly.
pub fn log_grid(min: f64, max: f64, n: usize) -> Result<Vec<f64>, GridError> {
    if !(min > 0.0 && max > min && max.is_finite()) {
        return Err(GridError::Bounds { min, max });
    }
    if n < 2 {
        return Err(GridError::TooFewPoints(n));
    }
    let (lmin, lmax) = (min.ln(), max.ln());
    let last = (n - 1) as f64;
    let mut grid: Vec<f64> = (0..n)
        .map(|i| (lmin + (lmax - lmin) * i as f64 / last).exp())
        .collect();
    grid[0] = min;
    grid[n - 1] = max;
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(GridError::Degenerate { min, max, n });
    }
    Ok(grid)
}
