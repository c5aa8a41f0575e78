//! Horn-type hypergeometric series in one to three variables: ratio polynomials,
//! the PDE systems they satisfy, numeric evaluation, exact verification and
//! Frobenius-type particular solutions.
//!
//! ```
//! use horncalc::{derive_system, format_system, shipped_series, Style};
//!
//! let gauss = shipped_series("Gauss").unwrap();
//! let system = derive_system(&gauss).unwrap();
//! assert!(format_system(&system, Style::Human).contains("u_xx"));
//! ```

pub mod error;
pub mod eval;
pub mod frobenius;
pub mod pde;
pub mod series;
pub mod shipped;
pub mod symbolic;
pub mod verify;

pub use error::{HornError, Result};
pub use eval::{aux_function, eval_series, region_check, AuxKind, EvalConfig, EvalResult, RegionStatus};
pub use frobenius::{enumerate_exponents, indicial_system, particular_solutions, ParticularSolution};
pub use pde::{derive_system, format_system, parse_structured, DiffOperator, PdeSystem, Style};
pub use series::{parse_catalog, ExponentTuple, ParamBinding, SeriesDefinition};
pub use shipped::{shipped_catalog, shipped_series};
pub use symbolic::{ParamPoly, RationalNumber};
pub use verify::{audit, compare_systems, residual_exact, residual_numeric, AuditOptions, AuditReport, ReferenceSet};
