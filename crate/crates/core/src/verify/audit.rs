use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;

use super::bindings::{nondegenerate_bindings, seed_for};
use super::compare::{compare_systems, ComparisonReport, EquationStatus};
use super::residual::residual_exact;
use crate::error::{HornError, Result};
use crate::frobenius::{check_reference, parse_solution_reference, particular_solutions_with, ReferenceCheck, SolutionOptions, SolutionReference};
use crate::pde::{derive_system, parse_structured, PdeSystem, TranscribedSystem};
use crate::series::{horn_order, SeriesDefinition};
use crate::shipped::{solution_files, system_files};

/// Transcribed systems and printed solution lists, keyed by series name.
#[derive(Clone, Debug, Default)]
pub struct ReferenceSet {
    pub systems: BTreeMap<String, TranscribedSystem>,
    pub solutions: BTreeMap<String, SolutionReference>,
}

impl ReferenceSet {
    pub fn shipped() -> Result<Self> {
        let mut r = ReferenceSet::default();
        for (_, text) in system_files() {
            r.add_system(text)?;
        }
        for (_, text) in solution_files() {
            r.add_solutions(text)?;
        }
        Ok(r)
    }

    pub fn add_system(&mut self, text: &str) -> Result<()> {
        let t = parse_structured(text)?;
        self.systems.insert(t.system.name.clone(), t);
        Ok(())
    }

    pub fn add_solutions(&mut self, text: &str) -> Result<()> {
        let s = parse_solution_reference(text)?;
        self.solutions.insert(s.name.clone(), s);
        Ok(())
    }

    /// Reads `*.sys` and `*.sol` from `dir`, `dir/systems` and `dir/solutions`.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let mut r = ReferenceSet::default();
        for sub in [dir.to_path_buf(), dir.join("systems"), dir.join("solutions")] {
            let Ok(rd) = std::fs::read_dir(&sub) else { continue };
            let mut paths: Vec<_> = rd.filter_map(|e| e.ok().map(|e| e.path())).collect();
            paths.sort();
            for p in paths {
                let ext = p.extension().and_then(|e| e.to_str()).unwrap_or("");
                if ext != "sys" && ext != "sol" {
                    continue;
                }
                let text = std::fs::read_to_string(&p).map_err(|e| HornError::Io(format!("{}: {e}", p.display())))?;
                let res = if ext == "sys" { r.add_system(&text) } else { r.add_solutions(&text) };
                res.map_err(|e| HornError::Io(format!("{}: {e}", p.display())))?;
            }
        }
        Ok(r)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AuditOptions {
    pub degree: u32,
    pub bindings: usize,
    pub solutions: SolutionOptions,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions { degree: 10, bindings: 3, solutions: SolutionOptions::default() }
    }
}

#[derive(Clone, Debug)]
pub struct TranscriptionCheck {
    pub spot_check: bool,
    pub raw: ComparisonReport,
    /// Present when the transcription carries errata.
    pub corrected: Option<ComparisonReport>,
}

impl TranscriptionCheck {
    pub fn effective(&self) -> &ComparisonReport {
        self.corrected.as_ref().unwrap_or(&self.raw)
    }
}

#[derive(Clone, Debug)]
pub struct SolutionAudit {
    pub count: usize,
    pub unverified: Vec<String>,
    pub reference: Option<std::result::Result<ReferenceCheck, String>>,
}

#[derive(Clone, Debug)]
pub struct AuditEntry {
    pub name: String,
    pub dim: usize,
    pub order: usize,
    pub annihilation: std::result::Result<(), String>,
    pub transcription: Option<TranscriptionCheck>,
    pub solutions: std::result::Result<SolutionAudit, String>,
}

impl AuditEntry {
    /// Reasons this entry fails the audit. Discrepancies outside the spot-check set are reported but tolerated.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Err(e) = &self.annihilation {
            out.push(format!("annihilation: {e}"));
        }
        if let Some(t) = &self.transcription {
            if t.spot_check && !t.effective().all_agree() {
                out.push("spot-check transcription disagrees with the derived system".into());
            }
        }
        match &self.solutions {
            Err(e) => out.push(format!("solutions: {e}")),
            Ok(s) => {
                for u in &s.unverified {
                    out.push(format!("solution not verified: {u}"));
                }
                match &s.reference {
                    Some(Err(e)) => out.push(format!("solution reference: {e}")),
                    Some(Ok(c)) if !c.passes() => out.push("solution list disagrees with the reference".into()),
                    _ => {}
                }
            }
        }
        out
    }

    fn transcription_cell(&self) -> String {
        let Some(t) = &self.transcription else { return "-".into() };
        let describe = |r: &ComparisonReport| {
            if r.all_match() {
                "match".to_string()
            } else if r.all_agree() {
                "scaled-match".to_string()
            } else {
                let n = r.equations.iter().filter(|e| !e.agrees()).count();
                format!("discrepancy({n})")
            }
        };
        let mut s = describe(&t.raw);
        if let Some(c) = &t.corrected {
            s = format!("{s}->{}", describe(c));
        }
        if t.spot_check {
            s.push('*');
        }
        s
    }

    fn solutions_cell(&self) -> String {
        match &self.solutions {
            Err(_) => "error".into(),
            Ok(s) => {
                let mut out = format!("{}/{}", s.count - s.unverified.len(), s.count);
                match &s.reference {
                    Some(Ok(c)) if c.passes() => out.push_str(" ref-ok"),
                    Some(_) => out.push_str(" ref-FAIL"),
                    None => {}
                }
                out
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.failures().is_empty())
    }

    pub fn entry(&self, name: &str) -> Option<&AuditEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Table, then details for anything that is not a clean match.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<10} {:>3} {:>5}  {:<13} {:<28} solutions", "entry", "dim", "order", "annihilation", "transcription");
        for e in &self.entries {
            let ann = if e.annihilation.is_ok() { "ok" } else { "FAIL" };
            let _ = writeln!(
                s,
                "{:<10} {:>3} {:>5}  {:<13} {:<28} {}",
                e.name,
                e.dim,
                e.order,
                ann,
                e.transcription_cell(),
                e.solutions_cell()
            );
        }
        let _ = writeln!(s, "(* spot-check transcription)");
        for e in &self.entries {
            let mut lines = Vec::new();
            if let Some(t) = &e.transcription {
                for (label, r) in [("", Some(&t.raw)), (" after errata", t.corrected.as_ref())] {
                    let Some(r) = r else { continue };
                    for (k, st) in r.equations.iter().enumerate() {
                        match st {
                            EquationStatus::Match => {}
                            EquationStatus::ScaledMatch(_) => lines.push(format!("  equation {}{label}: {st}", k + 1)),
                            EquationStatus::Discrepancy(d) => {
                                lines.push(format!("  equation {}{label}: {st}", k + 1));
                                lines.extend(d.iter().map(|t| format!("    {t}")));
                            }
                        }
                    }
                }
            }
            if let Ok(sol) = &e.solutions {
                if let Some(Ok(c)) = &sol.reference {
                    for (t, o) in &c.outcomes {
                        if *o != crate::frobenius::EntryOutcome::Match {
                            lines.push(format!("  solution {t}: {o}"));
                        }
                    }
                    for t in &c.unmatched {
                        lines.push(format!("  solution {t}: not in the reference list"));
                    }
                }
            }
            for f in e.failures() {
                lines.push(format!("  FAIL {f}"));
            }
            if !lines.is_empty() {
                let _ = writeln!(s, "{}:", e.name);
                for l in lines {
                    let _ = writeln!(s, "{l}");
                }
            }
        }
        let failed = self.entries.iter().filter(|e| !e.failures().is_empty()).count();
        let _ = writeln!(s, "{} entries, {} failed", self.entries.len(), failed);
        s
    }

    /// One tab-separated `entry  item  status` line per check.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let ann = match &e.annihilation {
                Ok(()) => "ok".to_string(),
                Err(_) => "fail".to_string(),
            };
            let _ = writeln!(s, "{}\tannihilation\t{ann}", e.name);
            if let Some(t) = &e.transcription {
                for (k, st) in t.raw.equations.iter().enumerate() {
                    let mut status = match st {
                        EquationStatus::Match => "match".to_string(),
                        EquationStatus::ScaledMatch(_) => "scaled-match".to_string(),
                        EquationStatus::Discrepancy(_) => "discrepancy".to_string(),
                    };
                    if let Some(c) = &t.corrected {
                        if c.equations[k] != *st {
                            status = format!("{status};corrected:{}", if c.equations[k].agrees() { "match" } else { "discrepancy" });
                        }
                    }
                    let _ = writeln!(s, "{}\teq{}\t{status}", e.name, k + 1);
                }
            }
            let sol = match &e.solutions {
                Err(_) => "error".to_string(),
                Ok(a) if !a.unverified.is_empty() => "unverified".to_string(),
                Ok(a) => match &a.reference {
                    None => "verified".to_string(),
                    Some(Ok(c)) if c.passes() => "reference-ok".to_string(),
                    Some(_) => "reference-mismatch".to_string(),
                },
            };
            let _ = writeln!(s, "{}\tsolutions\t{sol}", e.name);
        }
        s
    }
}

fn annihilation(s: &SeriesDefinition, p: &PdeSystem, opts: &AuditOptions) -> std::result::Result<(), String> {
    let bindings = nondegenerate_bindings(s, opts.bindings, opts.degree, seed_for(&s.name, 0)).map_err(|e| e.to_string())?;
    for b in &bindings {
        let r = residual_exact(p, s, b, opts.degree).map_err(|e| e.to_string())?;
        if let Some(v) = r.violations.first() {
            return Err(format!("equation {} leaves {} at x^{:?}", v.equation + 1, v.value, &v.index[..s.dim()]));
        }
    }
    Ok(())
}

fn audit_one(s: &SeriesDefinition, refs: &ReferenceSet, opts: &AuditOptions) -> AuditEntry {
    let derived = derive_system(s);
    let annihilation = match &derived {
        Ok(p) => annihilation(s, p, opts),
        Err(e) => Err(e.to_string()),
    };
    let transcription = match (&derived, refs.systems.get(&s.name)) {
        (Ok(p), Some(t)) => Some(TranscriptionCheck {
            spot_check: t.spot_check,
            raw: compare_systems(p, &t.system),
            corrected: t.has_errata().then(|| compare_systems(p, &t.corrected())),
        }),
        _ => None,
    };
    let solutions = particular_solutions_with(s, &opts.solutions).map_err(|e| e.to_string()).map(|sols| {
        let unverified = sols
            .iter()
            .filter(|p| !p.verified)
            .map(|p| format!("{} ({})", p.exponents, p.diagnostics.join("; ")))
            .collect();
        let reference = refs
            .solutions
            .get(&s.name)
            .map(|r| check_reference(s, &sols, r, &opts.solutions).map_err(|e| e.to_string()));
        SolutionAudit { count: sols.len(), unverified, reference }
    });
    AuditEntry { name: s.name.clone(), dim: s.dim(), order: horn_order(s), annihilation, transcription, solutions }
}

/// Runs every check for every definition; output order follows the input.
pub fn audit(defs: &[SeriesDefinition], refs: &ReferenceSet, opts: &AuditOptions) -> AuditReport {
    AuditReport { entries: defs.par_iter().map(|s| audit_one(s, refs, opts)).collect() }
}
