use std::path::{Path, PathBuf};

use horncalc::{parse_catalog, shipped_catalog, SeriesDefinition};

use crate::Exit;

pub const CATALOG_PATH_VAR: &str = "HORNCALC_CATALOG_PATH";

fn env_paths() -> Vec<PathBuf> {
    std::env::var_os(CATALOG_PATH_VAR)
        .map(|v| std::env::split_paths(&v).filter(|p| !p.as_os_str().is_empty()).collect())
        .unwrap_or_default()
}

fn read_catalog(p: &Path) -> Result<Vec<SeriesDefinition>, Exit> {
    let text = std::fs::read_to_string(p).map_err(|e| Exit::usage(format!("{}: {e}", p.display())))?;
    parse_catalog(&text).map_err(|e| Exit::usage(format!("{}: {e}", p.display())))
}

/// Shipped definitions, with user catalogs replacing same-named entries and appending new ones.
pub fn load_definitions(flags: &[PathBuf]) -> Result<Vec<SeriesDefinition>, Exit> {
    let mut defs = shipped_catalog().map_err(|e| Exit::usage(format!("shipped catalog: {e}")))?;
    let paths = if flags.is_empty() { env_paths() } else { flags.to_vec() };
    for p in paths {
        for s in read_catalog(&p)? {
            match defs.iter_mut().find(|d| d.name == s.name) {
                Some(d) => *d = s,
                None => defs.push(s),
            }
        }
    }
    Ok(defs)
}
