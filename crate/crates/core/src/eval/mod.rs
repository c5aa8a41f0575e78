//! Pochhammer values, coefficients, shell summation and convergence regions.

pub mod aux;
pub mod coeff;
pub mod pochhammer;
pub mod region;
pub mod sum;

pub use aux::{aux_function, AuxKind};
pub use coeff::{coefficient_at, coefficient_direct, coefficient_grid, BoundSeries};
pub use pochhammer::pochhammer;
pub use region::{parse_region, RegionExpr, RegionStatus, RootSelector};
pub use sum::{eval_series, region_check, region_check_detail, EvalConfig, EvalResult};
