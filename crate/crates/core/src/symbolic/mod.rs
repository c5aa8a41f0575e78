//! Exact arithmetic: rationals, parameter polynomials, three-variable
//! polynomials, linear index forms and Stirling numbers.

pub mod expr;
pub mod linear;
pub mod param;
pub mod rational;
pub mod scalar;
pub mod stirling;
pub mod tripoly;

pub use linear::{IndexLinearForm, LinFactor};
pub use param::{sym, Monomial, ParamPoly, Sym};
pub use rational::RationalNumber;
pub use scalar::Scalar;
pub use stirling::{stirling2, StirlingTable};
pub use tripoly::{poly_arith, poly_shift, CoordPoly, EulerPoly, Exp3, IndexPoly, PolyOp, TriPoly};
