//! Shared numerical machinery: adaptive quadrature and log-spaced grids.

mod grid;
mod quadrature;

pub use grid::{log_grid, GridError};
pub use quadrature::{
    integrate_adaptive, integrate_with, Domain, Estimate, QuadratureConfig, QuadratureError,
};
