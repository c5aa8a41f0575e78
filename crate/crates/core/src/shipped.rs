//! Catalogs and reference files compiled into the library.

use crate::error::Result;
use crate::series::{parse_catalog, SeriesDefinition};

mod files {
    include!(concat!(env!("OUT_DIR"), "/reference_files.rs"));
}

pub static CATALOGS: &[(&str, &str)] = &[
    ("classical.hcat", include_str!("../../../catalog/classical.hcat")),
    ("two_var.hcat", include_str!("../../../catalog/two_var.hcat")),
    ("complete_3var.hcat", include_str!("../../../catalog/complete_3var.hcat")),
    ("confluent_3var.hcat", include_str!("../../../catalog/confluent_3var.hcat")),
];

/// Every shipped definition, in catalog order.
pub fn shipped_catalog() -> Result<Vec<SeriesDefinition>> {
    let mut out = Vec::new();
    for (_, text) in CATALOGS {
        out.extend(parse_catalog(text)?);
    }
    Ok(out)
}

pub fn shipped_series(name: &str) -> Option<SeriesDefinition> {
    shipped_catalog().ok()?.into_iter().find(|s| s.name == name)
}

/// Transcribed systems as (series name, file text).
pub fn system_files() -> &'static [(&'static str, &'static str)] {
    files::SYSTEM_FILES
}

/// Reference particular-solution lists as (series name, file text).
pub fn solution_files() -> &'static [(&'static str, &'static str)] {
    files::SOLUTION_FILES
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogs_parse() {
        let all = shipped_catalog().unwrap();
        assert!(all.len() >= 78, "{}", all.len());
        assert_eq!(all.iter().filter(|s| s.dim() == 2).count(), 34);
        assert!(all.iter().filter(|s| s.dim() == 3 && s.name.starts_with("F_")).count() >= 20);
        assert!(all.iter().filter(|s| s.dim() == 3 && s.name.starts_with("E_")).count() >= 20);
        assert!(!system_files().is_empty());
        assert!(!solution_files().is_empty());
    }
}
