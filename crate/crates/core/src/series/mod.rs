//! Declarative series definitions, the catalog format, ratio polynomials and shifts.

pub mod catalog;
pub mod definition;
pub mod ratio;
pub mod shift;

pub use catalog::{format_catalog, format_series, parse_catalog};
pub use definition::{FactorRole, ParamBinding, PochFactor, SeriesDefinition};
pub use ratio::{horn_order, ratio_factors, FactorList};
pub use shift::{argument_list, shift_series, substitute_params, ExponentTuple};
