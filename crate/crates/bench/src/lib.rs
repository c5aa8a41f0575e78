//! Shared inputs for the benchmarks in `benches/`.

use horncalc::series::ParamBinding;
use horncalc::verify::{nondegenerate_bindings, seed_for, to_f64_binding};
use horncalc::{shipped_series, RationalNumber, SeriesDefinition};

pub fn series(name: &str) -> SeriesDefinition {
    shipped_series(name).unwrap_or_else(|| panic!("{name} is not shipped"))
}

/// A fixed non-degenerate binding valid through degree `n`.
pub fn exact_binding(s: &SeriesDefinition, n: u32) -> ParamBinding<RationalNumber> {
    nondegenerate_bindings(s, 1, n, seed_for(&s.name, 0)).expect("binding").remove(0)
}

pub fn float_binding(s: &SeriesDefinition) -> ParamBinding<f64> {
    to_f64_binding(&exact_binding(s, 10))
}
