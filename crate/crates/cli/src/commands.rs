use std::io::Write;

use horncalc::eval::region_check_detail;
use horncalc::frobenius::{enumerate_exponents, indicial_system, particular_solutions};
use horncalc::pde::{format_system, Style};
use horncalc::series::{format_series, horn_order, ParamBinding, SeriesDefinition};
use horncalc::symbolic::rational::{fmt_rational, parse_rational, to_f64};
use horncalc::symbolic::RationalNumber;
use horncalc::verify::{
    audit, nondegenerate_bindings, residual_exact, residual_numeric, seed_for, to_f64_binding, AuditOptions, ReferenceSet,
    NUMERIC_RESIDUAL_BOUND,
};
use horncalc::{derive_system, eval_series, EvalConfig};

use crate::catalogs::load_definitions;
use crate::{Cli, Command, Exit, Format};

const SHOWN_VIOLATIONS: usize = 5;

type Out<'a> = &'a mut dyn Write;

fn io(e: std::io::Error) -> Exit {
    Exit::failed(format!("write error: {e}"))
}

fn find<'a>(defs: &'a [SeriesDefinition], name: &str) -> Result<&'a SeriesDefinition, Exit> {
    defs.iter().find(|d| d.name == name).ok_or_else(|| Exit::usage(format!("unknown series `{name}` (see `horncalc list`)")))
}

fn parse_point(text: &str, s: &SeriesDefinition) -> Result<Vec<f64>, Exit> {
    let v = text
        .split(',')
        .map(|c| c.trim().parse::<f64>().map_err(|_| Exit::usage(format!("bad coordinate `{c}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    if v.len() != s.dim() {
        return Err(Exit::usage(format!("{} takes {} coordinate(s), got {}", s.name, s.dim(), v.len())));
    }
    Ok(v)
}

fn parse_assignments<T>(text: &str, s: &SeriesDefinition, value: impl Fn(&str) -> Option<T>) -> Result<ParamBinding<T>, Exit> {
    let mut b = ParamBinding::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| Exit::usage(format!("expected name=value, got `{part}`")))?;
        let k = k.trim();
        if !s.has_param(k) {
            return Err(Exit::usage(format!("{} has no parameter `{k}`", s.name)));
        }
        let v = value(v.trim()).ok_or_else(|| Exit::usage(format!("bad value for `{k}`: `{}`", v.trim())))?;
        b.insert(horncalc::symbolic::sym(k), v);
    }
    if let Some(p) = s.params.iter().find(|p| !b.contains_key(*p)) {
        return Err(Exit::usage(format!("no value given for parameter `{p}`")));
    }
    Ok(b)
}

fn float_params(text: &str, s: &SeriesDefinition) -> Result<ParamBinding<f64>, Exit> {
    parse_assignments(text, s, |v| v.parse::<f64>().ok().or_else(|| parse_rational(v).map(|r| to_f64(&r))))
}

fn exact_params(text: &str, s: &SeriesDefinition) -> Result<ParamBinding<RationalNumber>, Exit> {
    parse_assignments(text, s, parse_rational)
}

fn show_exact(b: &ParamBinding<RationalNumber>) -> String {
    b.iter().map(|(k, v)| format!("{k}={}", fmt_rational(v))).collect::<Vec<_>>().join(", ")
}

pub fn dispatch(cli: &Cli, out: Out) -> Result<(), Exit> {
    let defs = load_definitions(&cli.catalogs)?;
    match &cli.command {
        Command::List => {
            for s in &defs {
                writeln!(out, "{:<10} dim {}  order {}", s.name, s.dim(), horn_order(s)).map_err(io)?;
            }
            Ok(())
        }
        Command::Show { name } => {
            let s = find(&defs, name)?;
            write!(out, "{}", format_series(s)).map_err(io)?;
            if s.region.is_none() {
                writeln!(out, "  # no region recorded").map_err(io)?;
            }
            Ok(())
        }
        Command::Derive { name, format } => {
            let s = find(&defs, name)?;
            let p = derive_system(s).map_err(|e| Exit::failed(e.to_string()))?;
            let style = match format {
                Format::Human => Style::Human,
                Format::Structured => Style::Structured,
            };
            write!(out, "{}", format_system(&p, style)).map_err(io)
        }
        Command::Eval { name, params, point, tol, max_shells } => {
            let s = find(&defs, name)?;
            let b = float_params(params, s)?;
            let x = parse_point(point, s)?;
            let cfg = EvalConfig { tol: *tol, max_shells: *max_shells, ..EvalConfig::default() };
            let r = eval_series(s, &b, &x, &cfg).map_err(|e| Exit::failed(e.to_string()))?;
            writeln!(out, "{}", r.value).map_err(io)?;
            writeln!(out, "shells_used {}", r.shells_used).map_err(io)?;
            writeln!(out, "tail_estimate {:e}", r.tail_estimate).map_err(io)?;
            writeln!(out, "region {}", r.region_status).map_err(io)?;
            if r.exhausted {
                return Err(Exit::failed(format!(
                    "not converged after {} shells (region {}); the value is a partial sum",
                    r.shells_used, r.region_status
                )));
            }
            Ok(())
        }
        Command::Verify { name, exact_degree, params, numeric, point, step } => {
            let s = find(&defs, name)?;
            let p = derive_system(s).map_err(|e| Exit::failed(e.to_string()))?;
            if *numeric {
                let point = point.as_deref().ok_or_else(|| Exit::usage("--numeric needs --point"))?;
                let x = parse_point(point, s)?;
                let b = match params {
                    Some(t) => float_params(t, s)?,
                    None => {
                        let e = nondegenerate_bindings(s, 1, *exact_degree, seed_for(&s.name, 0)).map_err(|e| Exit::failed(e.to_string()))?;
                        writeln!(out, "binding {}", show_exact(&e[0])).map_err(io)?;
                        to_f64_binding(&e[0])
                    }
                };
                let r = residual_numeric(&p, s, &b, &x, *step).map_err(|e| Exit::usage(e.to_string()))?;
                for (k, v) in r.relative.iter().enumerate() {
                    writeln!(out, "equation {}: relative residual {v:.3e}", k + 1).map_err(io)?;
                }
                if r.max_relative() > NUMERIC_RESIDUAL_BOUND {
                    return Err(Exit::failed(format!("relative residual {:.3e} exceeds {NUMERIC_RESIDUAL_BOUND:e}", r.max_relative())));
                }
                writeln!(out, "ok: below {NUMERIC_RESIDUAL_BOUND:e}").map_err(io)?;
                return Ok(());
            }
            let bindings = match params {
                Some(t) => vec![exact_params(t, s)?],
                None => nondegenerate_bindings(s, 3, *exact_degree, seed_for(&s.name, 0)).map_err(|e| Exit::failed(e.to_string()))?,
            };
            let mut bad = 0;
            for b in &bindings {
                let r = residual_exact(&p, s, b, *exact_degree).map_err(|e| Exit::failed(e.to_string()))?;
                writeln!(out, "binding {}", show_exact(b)).map_err(io)?;
                if r.is_clean() {
                    writeln!(out, "  all equations vanish through degree {}", exact_degree.saturating_sub(2)).map_err(io)?;
                } else {
                    bad += 1;
                    for v in r.violations.iter().take(SHOWN_VIOLATIONS) {
                        writeln!(out, "  equation {}: coefficient of x^{:?} is {}", v.equation + 1, &v.index[..s.dim()], v.value).map_err(io)?;
                    }
                    if r.violations.len() > SHOWN_VIOLATIONS {
                        writeln!(out, "  ... {} more", r.violations.len() - SHOWN_VIOLATIONS).map_err(io)?;
                    }
                }
            }
            if bad > 0 {
                return Err(Exit::failed(format!("{name}: residual nonzero for {bad} binding(s)")));
            }
            Ok(())
        }
        Command::Exponents { name } => {
            let s = find(&defs, name)?;
            let ind = indicial_system(s);
            writeln!(out, "indicial system:").map_err(io)?;
            for l in ind.render() {
                writeln!(out, "  {l}").map_err(io)?;
            }
            let search = enumerate_exponents(&ind);
            for sk in &search.skipped {
                writeln!(out, "  skipped {sk}").map_err(io)?;
            }
            let sols = particular_solutions(s).map_err(|e| Exit::failed(e.to_string()))?;
            writeln!(out, "{} exponent tuple(s)", sols.len()).map_err(io)?;
            for p in &sols {
                let args: Vec<String> = p.arguments.iter().map(|a| a.display_affine()).collect();
                let state = if p.verified { "verified" } else { "NOT verified" };
                writeln!(out, "  {}  {} * {}({})  {state}", p.exponents, p.prefactor, s.name, args.join(", ")).map_err(io)?;
                for d in &p.diagnostics {
                    writeln!(out, "    {d}").map_err(io)?;
                }
            }
            let verified = sols.iter().filter(|p| p.verified).count();
            writeln!(out, "{verified} verified particular solution(s)").map_err(io)?;
            if verified < sols.len() {
                return Err(Exit::failed(format!("{} particular solution(s) failed verification", sols.len() - verified)));
            }
            Ok(())
        }
        Command::Region { name, point } => {
            let s = find(&defs, name)?;
            let x = parse_point(point, s)?;
            let (st, diag) = region_check_detail(s, &x);
            writeln!(out, "{st}").map_err(io)?;
            for d in diag {
                writeln!(out, "  {d}").map_err(io)?;
            }
            Ok(())
        }
        Command::Audit { names, reference, summary } => {
            let chosen: Vec<SeriesDefinition> = if names.is_empty() {
                defs.clone()
            } else {
                names.iter().map(|n| find(&defs, n).cloned()).collect::<Result<_, _>>()?
            };
            let mut refs = ReferenceSet::shipped().map_err(|e| Exit::usage(e.to_string()))?;
            if let Some(dir) = reference {
                if !dir.is_dir() {
                    return Err(Exit::usage(format!("{} is not a directory", dir.display())));
                }
                let extra = ReferenceSet::load_dir(dir).map_err(|e| Exit::usage(e.to_string()))?;
                refs.systems.extend(extra.systems);
                refs.solutions.extend(extra.solutions);
            }
            let report = audit(&chosen, &refs, &AuditOptions::default());
            write!(out, "{}", report.to_text()).map_err(io)?;
            if *summary {
                write!(out, "{}", report.summary()).map_err(io)?;
            }
            if !report.passed() {
                return Err(Exit::failed("audit failed"));
            }
            Ok(())
        }
    }
}

