//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use horncalc::eval::{aux_function, region_check, AuxKind, EvalConfig, RegionStatus};
use horncalc::frobenius::{check_reference, particular_solutions, SolutionOptions};
use horncalc::verify::{
    compare_systems, nondegenerate_bindings, residual_exact, residual_numeric, seed_for, to_f64_binding, EquationStatus,
    ReferenceSet, NUMERIC_RESIDUAL_BOUND,
};
use horncalc::{derive_system, eval_series, shipped_catalog, shipped_series, HornError, ParamBinding};

type Outcome = Result<String, String>;

const GOLDEN: [&str; 18] = [
    "Gauss", "Kummer", "F1", "F2", "F3", "F4", "Phi1", "Psi2", "Gamma2", "H4", "HH4", "F_3a", "F_10a", "F_14a", "F_17a", "E_1", "E_62",
    "E_153",
];
const GOLDEN_BUDGET: Duration = Duration::from_secs(5);
const ANNIHILATION_DEGREE: u32 = 10;
const ANNIHILATION_BINDINGS: usize = 3;
const ANNIHILATION_BUDGET: Duration = Duration::from_secs(60);
const FD_STEP: f64 = 1e-3;
const SOLUTION_DEGREE: u32 = 8;
const GAUSS_TOL: f64 = 1e-6;
const GAUSS_MAX_SHELLS: usize = 5000;
const AUX_TOL: f64 = 1e-12;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn series(name: &str) -> Result<horncalc::SeriesDefinition, String> {
    shipped_series(name).ok_or_else(|| format!("{name} is not shipped"))
}

fn golden_derivations() -> Outcome {
    let start = Instant::now();
    let refs = ReferenceSet::shipped().map_err(|e| e.to_string())?;
    for name in GOLDEN {
        let s = series(name)?;
        let p = derive_system(&s).map_err(|e| format!("{name}: {e}"))?;
        let t = refs.systems.get(name).ok_or_else(|| format!("{name}: no transcription"))?;
        ensure(t.spot_check, || format!("{name}: transcription not marked spot-check"))?;
        let raw = compare_systems(&p, &t.system);
        if t.has_errata() {
            ensure(!raw.all_agree(), || format!("{name}: erratum recorded but print already agrees"))?;
            for (k, d) in raw.discrepancies() {
                let fixed = t.errata[k].iter().any(|(e, _)| *e == d.derivative);
                ensure(fixed, || format!("{name}: equation {} differs outside the erratum: {d}", k + 1))?;
            }
            let fixed = compare_systems(&p, &t.corrected());
            ensure(fixed.all_match(), || format!("{name}: corrected transcription {:?}", fixed.equations))?;
        } else {
            for (k, st) in raw.equations.iter().enumerate() {
                ensure(matches!(st, EquationStatus::Match | EquationStatus::ScaledMatch(_)), || {
                    format!("{name}: equation {}: {st}", k + 1)
                })?;
            }
        }
    }
    let took = start.elapsed();
    ensure(took < GOLDEN_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("{} systems agree term by term ({took:.2?})", GOLDEN.len()))
}

fn annihilation_suite() -> Outcome {
    let start = Instant::now();
    let defs = shipped_catalog().map_err(|e| e.to_string())?;
    let dims = |d| defs.iter().filter(|s| s.dim() == d).count();
    ensure(defs.len() >= 78 && dims(2) == 34 && dims(3) >= 40, || format!("catalog has {} entries", defs.len()))?;
    let failures: Vec<String> = defs
        .par_iter()
        .filter_map(|s| {
            let check = || -> Result<(), String> {
                let p = derive_system(s).map_err(|e| e.to_string())?;
                let bs = nondegenerate_bindings(s, ANNIHILATION_BINDINGS, ANNIHILATION_DEGREE, seed_for(&s.name, 0)).map_err(|e| e.to_string())?;
                for b in &bs {
                    let r = residual_exact(&p, s, b, ANNIHILATION_DEGREE).map_err(|e| e.to_string())?;
                    ensure(r.is_clean(), || format!("{} nonzero coefficients", r.violations.len()))?;
                }
                Ok(())
            };
            check().err().map(|e| format!("{}: {e}", s.name))
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    let took = start.elapsed();
    ensure(took < ANNIHILATION_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("{} entries annihilated at N={ANNIHILATION_DEGREE} x {ANNIHILATION_BINDINGS} bindings ({took:.2?})", defs.len()))
}

fn numeric_cross_check() -> Outcome {
    let cases: [(&str, &[f64]); 10] = [
        ("F_10a", &[0.1, 0.15, 0.2]),
        ("F_4b", &[0.1, 0.15, 0.2]),
        ("E_1", &[0.1, 0.15, 0.2]),
        ("F_14a", &[0.1, 0.15, 0.2]),
        ("F_22a", &[0.05, 0.1, 0.05]),
        ("F_17a", &[0.1, 0.15, 0.2]),
        ("E_62", &[0.1, 0.15, 0.2]),
        ("E_153", &[0.1, 0.15, 0.2]),
        ("F2", &[0.2, 0.15]),
        ("F1", &[0.1, 0.2]),
    ];
    let mut worst: f64 = 0.0;
    for (name, pt) in cases {
        ensure(pt.iter().all(|c| c.abs() <= 0.2), || format!("{name}: point outside the 0.2 box"))?;
        let s = series(name)?;
        let p = derive_system(&s).map_err(|e| e.to_string())?;
        let b = to_f64_binding(&nondegenerate_bindings(&s, 1, 10, seed_for(name, 3)).map_err(|e| e.to_string())?[0]);
        let r = residual_numeric(&p, &s, &b, pt, FD_STEP).map_err(|e| format!("{name}: {e}"))?;
        for (k, v) in r.relative.iter().enumerate() {
            ensure(*v <= NUMERIC_RESIDUAL_BOUND, || format!("{name} equation {}: {v:e}", k + 1))?;
        }
        worst = worst.max(r.max_relative());
    }
    Ok(format!("10 entries, worst relative residual {worst:.1e} <= {NUMERIC_RESIDUAL_BOUND:e}"))
}

fn frobenius_regression() -> Outcome {
    let refs = ReferenceSet::shipped().map_err(|e| e.to_string())?;
    let opts = SolutionOptions { degree: SOLUTION_DEGREE, ..SolutionOptions::default() };
    let expect = [("F_10a", 8), ("F2", 4), ("F4", 4), ("H1", 2), ("H2", 2), ("Psi1", 4), ("Psi2", 4), ("HH3", 2), ("HH4", 2)];
    for (name, count) in expect {
        let s = series(name)?;
        let sols = particular_solutions(&s).map_err(|e| e.to_string())?;
        ensure(sols.len() == count, || format!("{name}: {} solutions, expected {count}", sols.len()))?;
        ensure(sols.iter().all(|p| p.verified), || format!("{name}: unverified solution"))?;
        let r = refs.solutions.get(name).ok_or_else(|| format!("{name}: no reference block"))?;
        let c = check_reference(&s, &sols, r, &opts).map_err(|e| e.to_string())?;
        ensure(c.passes(), || format!("{name}: {:?}", c.outcomes))?;
    }
    Ok("F_10a 8/8; F2, F4, Psi1, Psi2 4/4; H1, H2, HH3, HH4 2/2; all verified at N=8".into())
}

fn gauss_summation() -> Outcome {
    let s = series("Gauss")?;
    let (a, b, c) = (0.5, 1.0 / 3.0, 3.0);
    let bind: ParamBinding<f64> = [("a", a), ("b", b), ("c", c)].into_iter().map(|(k, v)| (horncalc::symbolic::sym(k), v)).collect();
    let cfg = EvalConfig { max_shells: GAUSS_MAX_SHELLS, ..EvalConfig::default() };
    let r = eval_series(&s, &bind, &[1.0], &cfg).map_err(|e| e.to_string())?;
    let g = libm::tgamma;
    let want = g(c) * g(c - a - b) / (g(c - a) * g(c - b));
    let err = (r.value - want).abs();
    ensure(err <= GAUSS_TOL, || format!("sum {} vs {want}, error {err:e}", r.value))?;
    Ok(format!("{:.10} vs {want:.10}, error {err:.1e} after {} shells", r.value, r.shells_used))
}

fn aux_and_regions() -> Outcome {
    let phi1 = aux_function(AuxKind::Phi1, 0.0).map_err(|e| e.to_string())?;
    ensure(phi1 == 0.25, || format!("phi1(0) = {phi1}"))?;
    let psi2 = aux_function(AuxKind::Psi2, 1.0 / 12.0).map_err(|e| e.to_string())?;
    ensure((psi2 - 8.0 / 9.0).abs() <= AUX_TOL, || format!("psi2(1/12) = {psi2}"))?;
    ensure(matches!(aux_function(AuxKind::Phi2, 0.0), Err(HornError::Domain(_))), || "phi2(0) did not fail".into())?;
    use RegionStatus::{Inside, Outside};
    let table: [(&str, [f64; 3], RegionStatus); 12] = [
        ("F_10a", [0.1, 0.2, 0.1], Inside),
        ("F_10a", [0.5, 0.3, 0.5], Outside),
        ("F_10a", [-0.5, 0.2, 0.5], Inside),
        ("F_10a", [1.1, 0.0, 0.0], Outside),
        ("F_14a", [0.2, 0.2, 0.2], Inside),
        ("F_14a", [0.3, 0.3, 0.3], Outside),
        ("F_14a", [0.5, 0.4, 0.0], Inside),
        ("F_14a", [0.6, 0.0, 0.5], Outside),
        ("F_22a", [0.04, 0.09, 0.16], Inside),
        ("F_22a", [0.09, 0.16, 0.25], Outside),
        ("F_22a", [0.2, -0.2, 0.0], Inside),
        ("F_22a", [0.01, 0.01, 0.7], Outside),
    ];
    for (name, pt, want) in table {
        let got = region_check(&series(name)?, &pt);
        ensure(got == want, || format!("{name} at {pt:?}: {got}, expected {want}"))?;
    }
    Ok("phi1(0)=1/4, psi2(1/12)=8/9, phi2(0) domain error, 12/12 region points".into())
}

fn discrepancy_honesty() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/corrupted");
    ensure(!GOLDEN.contains(&"F_4b"), || "fixture entry is on the golden list".into())?;
    let o = Command::new(env!("CARGO_BIN_EXE_horncalc"))
        .args(["audit", "F_4b", "--reference"])
        .arg(&dir)
        .arg("--summary")
        .env_remove(horncalc_cli::CATALOG_PATH_VAR)
        .output()
        .map_err(|e| e.to_string())?;
    let out = String::from_utf8_lossy(&o.stdout);
    ensure(out.contains("F_4b\teq2\tdiscrepancy"), || format!("discrepancy not reported:\n{out}"))?;
    ensure(out.contains("F_4b\tannihilation\tok"), || "annihilation not ok".into())?;
    ensure(o.status.code() == Some(0), || format!("audit exited {:?}", o.status.code()))?;
    Ok("corrupted F_4b reported as a discrepancy, audit exit 0".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("golden derivations", golden_derivations),
        ("annihilation suite", annihilation_suite),
        ("numeric cross-check", numeric_cross_check),
        ("Frobenius regression", frobenius_regression),
        ("Gauss summation", gauss_summation),
        ("auxiliary functions and regions", aux_and_regions),
        ("discrepancy honesty", discrepancy_honesty),
    ];
    let mut failed = 0;
    for (i, (label, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {}. {label}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {label}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
