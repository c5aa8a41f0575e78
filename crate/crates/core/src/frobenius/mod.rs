//! Indicial equations, exponent tuples and the particular solutions they generate.

pub mod exponents;
pub mod indicial;
pub mod reference;
pub mod solutions;

pub use exponents::{enumerate_exponents, ExponentSearch};
pub use indicial::{indicial_system, IndicialSystem, EXPONENT_NAMES};
pub use reference::{check_reference, parse_solution_reference, EntryOutcome, ReferenceCheck, ReferenceEntry, SolutionReference};
pub use solutions::{check_annihilated, particular_solutions, particular_solutions_with, ParticularSolution, SolutionOptions};
