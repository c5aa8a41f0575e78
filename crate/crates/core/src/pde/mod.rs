//! From ratio polynomials to second-order PDE systems.

pub mod derive;
pub mod format;
pub mod normalize;
pub mod operator;

pub use derive::{axis_equation, derive_system, euler_to_operator};
pub use format::{format_equation, format_system, parse_structured, Style, TranscribedSystem};
pub use normalize::normalize_equation;
pub use operator::{derivative_name, DiffOperator, PdeSystem, Provenance};
