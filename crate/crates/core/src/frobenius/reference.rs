use std::fmt;

use super::indicial::indicial_system;
use super::solutions::{check_annihilated, ParticularSolution, SolutionOptions};
use crate::error::{HornError, Result};
use crate::pde::derive_system;
use crate::series::{ExponentTuple, FactorRole, SeriesDefinition};
use crate::symbolic::expr::parse_param_poly;
use crate::symbolic::ParamPoly;

/// One printed solution: exponents, shifted parameter list, and whether it is a known misprint.
#[derive(Clone, Debug, PartialEq)]
pub struct ReferenceEntry {
    pub line: usize,
    pub tuple: ExponentTuple,
    pub args: Vec<ParamPoly>,
    pub erratum: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolutionReference {
    pub name: String,
    pub entries: Vec<ReferenceEntry>,
}

/// Reads `solutions NAME` followed by `e1 e2 .. | p1, p2, .. [! erratum]` lines.
pub fn parse_solution_reference(text: &str) -> Result<SolutionReference> {
    let mut name = None;
    let mut entries = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let ln = no + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("solutions ") {
            if name.is_some() {
                return Err(HornError::syntax(ln, "second `solutions` header"));
            }
            name = Some(rest.trim().to_string());
            continue;
        }
        if name.is_none() {
            return Err(HornError::syntax(ln, "missing `solutions` header"));
        }
        let (body, flag) = match line.split_once('!') {
            Some((b, f)) if f.trim() == "erratum" => (b, true),
            Some((_, f)) => return Err(HornError::syntax(ln, format!("unknown flag `{}`", f.trim()))),
            None => (line, false),
        };
        let (t, a) = body.split_once('|').ok_or_else(|| HornError::syntax(ln, "expected `exponents | arguments`"))?;
        let poly = |s: &str| parse_param_poly(s).map_err(|e| HornError::syntax(ln, e.to_string()));
        let tuple = t.split_whitespace().map(poly).collect::<Result<Vec<_>>>()?;
        let args = a.split(',').map(|s| poly(s.trim())).collect::<Result<Vec<_>>>()?;
        entries.push(ReferenceEntry { line: ln, tuple: ExponentTuple(tuple), args, erratum: flag });
    }
    let name = name.ok_or_else(|| HornError::syntax(1, "missing `solutions` header"))?;
    Ok(SolutionReference { name, entries })
}

#[derive(Clone, Debug, PartialEq)]
pub enum EntryOutcome {
    Match,
    /// Flagged entry shown to be wrong, with the evidence.
    ErratumConfirmed(String),
    Mismatch(String),
}

impl fmt::Display for EntryOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryOutcome::Match => f.write_str("match"),
            EntryOutcome::ErratumConfirmed(why) => write!(f, "erratum confirmed: {why}"),
            EntryOutcome::Mismatch(why) => write!(f, "mismatch: {why}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReferenceCheck {
    pub outcomes: Vec<(ExponentTuple, EntryOutcome)>,
    /// Verified tuples that no printed entry accounts for.
    pub unmatched: Vec<ExponentTuple>,
    /// Number of verified solutions.
    pub computed: usize,
}

impl ReferenceCheck {
    pub fn passes(&self) -> bool {
        let tuple_errata = self
            .outcomes
            .iter()
            .filter(|(_, o)| matches!(o, EntryOutcome::ErratumConfirmed(w) if w.starts_with("exponents")))
            .count();
        self.outcomes.iter().all(|(_, o)| !matches!(o, EntryOutcome::Mismatch(_)))
            && self.unmatched.len() == tuple_errata
            && self.computed == self.outcomes.len()
    }
}

fn render_args(a: &[ParamPoly]) -> String {
    a.iter().map(|p| p.display_affine()).collect::<Vec<_>>().join(", ")
}

/// The shifted series with each labeled factor given the printed parameter.
fn printed_series(shifted: &SeriesDefinition, args: &[ParamPoly]) -> SeriesDefinition {
    let mut out = shifted.clone();
    for (p, v) in shifted.params.iter().zip(args) {
        let role = FactorRole::Labeled(p.clone());
        if let Some(f) = out.num.iter_mut().chain(out.den.iter_mut()).find(|f| f.role == role) {
            f.param = v.clone();
        }
    }
    out
}

/// Compares the verified particular solutions with a printed list.
pub fn check_reference(
    s: &SeriesDefinition,
    solutions: &[ParticularSolution],
    r: &SolutionReference,
    opts: &SolutionOptions,
) -> Result<ReferenceCheck> {
    let system = derive_system(s)?;
    let indicial = indicial_system(s);
    let mut used = vec![false; solutions.len()];
    let mut outcomes = Vec::new();
    for e in &r.entries {
        let hit = solutions.iter().position(|p| p.exponents == e.tuple);
        let outcome = match hit {
            None if e.tuple.0.len() != s.dim() => EntryOutcome::Mismatch(format!("line {}: wrong number of exponents", e.line)),
            None if e.erratum && !indicial.is_satisfied_by(&e.tuple) => {
                EntryOutcome::ErratumConfirmed(format!("exponents {} do not satisfy the indicial equations", e.tuple))
            }
            None => EntryOutcome::Mismatch(format!("exponents {} were not found", e.tuple)),
            Some(i) => {
                used[i] = true;
                let sol = &solutions[i];
                if !sol.verified {
                    let why = sol.diagnostics.join("; ");
                    if e.erratum {
                        EntryOutcome::ErratumConfirmed(format!("exponents {} give no solution ({why})", e.tuple))
                    } else {
                        EntryOutcome::Mismatch(format!("exponents {} give no solution ({why})", e.tuple))
                    }
                } else if e.args.len() != s.params.len() {
                    EntryOutcome::Mismatch(format!("line {}: {} arguments for {} parameters", e.line, e.args.len(), s.params.len()))
                } else if sol.arguments == e.args {
                    if e.erratum {
                        EntryOutcome::Mismatch("flagged as erratum but agrees with the computed list".into())
                    } else {
                        EntryOutcome::Match
                    }
                } else if !e.erratum {
                    EntryOutcome::Mismatch(format!("printed ({}) vs computed ({})", render_args(&e.args), render_args(&sol.arguments)))
                } else {
                    let printed = printed_series(&sol.series, &e.args);
                    match check_annihilated(&system, &printed, &e.tuple, opts) {
                        Err(why) => EntryOutcome::ErratumConfirmed(format!(
                            "printed ({}) is not annihilated ({why}); computed ({})",
                            render_args(&e.args),
                            render_args(&sol.arguments)
                        )),
                        Ok(()) => EntryOutcome::Mismatch("printed arguments differ but still give a solution".into()),
                    }
                }
            }
        };
        outcomes.push((e.tuple.clone(), outcome));
    }
    let unmatched = solutions
        .iter()
        .zip(&used)
        .filter(|(p, u)| p.verified && !**u)
        .map(|(p, _)| p.exponents.clone())
        .collect();
    let computed = solutions.iter().filter(|p| p.verified).count();
    Ok(ReferenceCheck { outcomes, unmatched, computed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::particular_solutions;
    use crate::series::parse_catalog;

    const G: &str = "series G\n  indices: n\n  params: a b c\n  num: a|n; b|n\n  den: c|n\n";

    #[test]
    fn parse_and_round_trip_values() {
        let r = parse_solution_reference("solutions G\n  0 | a, b, c\n  1-c | 1-c+a, 1-c+b, 2-c ! erratum\n").unwrap();
        assert_eq!(r.name, "G");
        assert_eq!(r.entries.len(), 2);
        assert!(r.entries[1].erratum);
        assert_eq!(r.entries[1].tuple.to_string(), "(1-c)");
        assert!(parse_solution_reference("  0 | a").is_err());
        assert!(parse_solution_reference("solutions G\n  0 a b c\n").is_err());
    }

    #[test]
    fn gauss_reference() {
        let s = parse_catalog(G).unwrap().remove(0);
        let sols = particular_solutions(&s).unwrap();
        let good = parse_solution_reference("solutions G\n  0 | a, b, c\n  1-c | 1-c+a, 1-c+b, 2-c\n").unwrap();
        assert!(check_reference(&s, &sols, &good, &SolutionOptions::default()).unwrap().passes());
        let typo = parse_solution_reference("solutions G\n  0 | a, b, c\n  1-c | 1-c+a, b, 2-c ! erratum\n").unwrap();
        let c = check_reference(&s, &sols, &typo, &SolutionOptions::default()).unwrap();
        assert!(c.passes(), "{:?}", c.outcomes);
        assert!(matches!(c.outcomes[1].1, EntryOutcome::ErratumConfirmed(_)));
        let unflagged = parse_solution_reference("solutions G\n  0 | a, b, c\n  1-c | 1-c+a, b, 2-c\n").unwrap();
        assert!(!check_reference(&s, &sols, &unflagged, &SolutionOptions::default()).unwrap().passes());
    }
}
