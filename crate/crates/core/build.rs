use std::fmt::Write;
use std::path::Path;

fn collect(dir: &Path, ext: &str) -> Vec<(String, String)> {
    let mut v = Vec::new();
    if let Ok(rd) = std::fs::read_dir(dir) {
        for e in rd.flatten() {
            let p = e.path();
            if p.extension().and_then(|s| s.to_str()) == Some(ext) {
                let stem = p.file_stem().unwrap().to_string_lossy().into_owned();
                v.push((stem, p.canonicalize().unwrap().to_string_lossy().into_owned()));
            }
        }
    }
    v.sort();
    v
}

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../reference");
    println!("cargo:rerun-if-changed={}", root.display());
    let mut out = String::new();
    for (name, dir, ext) in [("SYSTEM_FILES", "systems", "sys"), ("SOLUTION_FILES", "solutions", "sol")] {
        let d = root.join(dir);
        println!("cargo:rerun-if-changed={}", d.display());
        writeln!(out, "pub static {name}: &[(&str, &str)] = &[").unwrap();
        for (stem, path) in collect(&d, ext) {
            writeln!(out, "    ({stem:?}, include_str!({path:?})),").unwrap();
        }
        writeln!(out, "];").unwrap();
    }
    let dest = Path::new(&std::env::var("OUT_DIR").unwrap()).join("reference_files.rs");
    std::fs::write(dest, out).unwrap();
}
