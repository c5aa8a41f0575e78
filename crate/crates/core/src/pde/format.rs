//! Human-readable and structured renderings of PDE systems.
//!
//! Structured layout:
//!
//! ```text
//! system Gauss dim 1 provenance derived
//! equation 1
//! term 2 0 0 x - x^2
//! term 1 0 0 c - a*x - b*x - x
//! term 0 0 0 -a*b
//! end
//! ```
//!
//! Transcription files may add `spot-check` to the header and
//! `erratum i j k <coeff>` lines carrying a corrected coefficient.

use super::normalize::normalize_equation;
use super::operator::{derivative_name, DiffOperator, PdeSystem, Provenance};
use crate::error::{HornError, Result};
use crate::symbolic::expr::parse_tripoly;
use crate::symbolic::tripoly::mono_string;
use crate::symbolic::{CoordPoly, Exp3, ParamPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Human,
    Structured,
}

const COORDS: [&str; 3] = ["x", "y", "z"];

fn param_display_sign(p: &ParamPoly) -> bool {
    p.to_string().starts_with('-')
}

/// (negative, text) for `pp · mono`.
fn render_piece(pp: &ParamPoly, mono: &str) -> (bool, String) {
    let neg = param_display_sign(pp);
    let body = if neg { pp.neg() } else { pp.clone() };
    let bs = body.to_string();
    let text = if body.len() > 1 {
        format!("({bs}){mono}")
    } else if mono.is_empty() {
        bs
    } else if bs == "1" {
        mono.to_string()
    } else if body.as_constant().is_some() {
        format!("{bs}{mono}")
    } else {
        format!("{bs}*{mono}")
    };
    (neg, text)
}

/// (negative, text) for a whole coefficient, e.g. `x(1-x)` or `(c-(a+b+1)x)`.
pub fn render_coefficient(c: &CoordPoly) -> (bool, String) {
    let g = c.monomial_gcd();
    let q = c.div_monomial(g);
    let gs = mono_string(&g, &COORDS, "");
    let terms = q.graded_terms();
    if terms.len() == 1 {
        let (e, pp) = terms[0];
        let inner = mono_string(e, &COORDS, "");
        return render_piece(pp, &format!("{gs}{inner}"));
    }
    let pieces: Vec<(bool, String)> = terms.iter().map(|(e, pp)| render_piece(pp, &mono_string(e, &COORDS, ""))).collect();
    let flip = pieces[0].0;
    let mut inner = String::new();
    for (i, (neg, t)) in pieces.iter().enumerate() {
        let neg = *neg != flip;
        if neg {
            inner.push('-');
        } else if i > 0 {
            inner.push('+');
        }
        inner.push_str(t);
    }
    (flip, format!("{gs}({inner})"))
}

/// One line, e.g. `x(1-x) u_xx + (c-(a+b+1)x) u_x - a*b u = 0`; the operator is normalized first.
pub fn format_equation(op: &DiffOperator, dim: usize, axis: usize) -> String {
    let (op, _) = normalize_equation(op, axis);
    if op.is_zero() {
        return "0 = 0".into();
    }
    let mut s = String::new();
    for (i, (d, c)) in op.ordered_terms(dim, axis).into_iter().enumerate() {
        let (neg, text) = render_coefficient(c);
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if text == "1" {
            s.push_str(&derivative_name(&d));
        } else {
            s.push_str(&text);
            s.push(' ');
            s.push_str(&derivative_name(&d));
        }
    }
    s.push_str(" = 0");
    s
}

pub fn format_system(p: &PdeSystem, style: Style) -> String {
    match style {
        Style::Human => {
            let mut s = String::new();
            for (k, eq) in p.equations.iter().enumerate() {
                s.push_str(&format_equation(eq, p.dim, k));
                s.push('\n');
            }
            s
        }
        Style::Structured => format_structured(p, false, &[]),
    }
}

fn format_structured(p: &PdeSystem, spot: bool, errata: &[Vec<(Exp3, CoordPoly)>]) -> String {
    let mut s = format!("system {} dim {} provenance {}", p.name, p.dim, p.provenance.as_str());
    if spot {
        s.push_str(" spot-check");
    }
    s.push('\n');
    for (k, eq) in p.equations.iter().enumerate() {
        s.push_str(&format!("equation {}\n", k + 1));
        for (d, c) in eq.ordered_terms(p.dim, k) {
            s.push_str(&format!("term {} {} {} {}\n", d[0], d[1], d[2], c.to_expanded_string(&COORDS)));
        }
        for (d, c) in errata.get(k).into_iter().flatten() {
            s.push_str(&format!("erratum {} {} {} {}\n", d[0], d[1], d[2], c.to_expanded_string(&COORDS)));
        }
        s.push_str("end\n");
    }
    s
}

/// A system read from a structured file, with any recorded errata.
#[derive(Clone, Debug, PartialEq)]
pub struct TranscribedSystem {
    pub system: PdeSystem,
    pub spot_check: bool,
    /// Per equation: corrected coefficients.
    pub errata: Vec<Vec<(Exp3, CoordPoly)>>,
}

impl TranscribedSystem {
    pub fn has_errata(&self) -> bool {
        self.errata.iter().any(|e| !e.is_empty())
    }

    /// The system with every erratum applied.
    pub fn corrected(&self) -> PdeSystem {
        let mut p = self.system.clone();
        for (k, list) in self.errata.iter().enumerate() {
            for (d, c) in list {
                p.equations[k].set_term(*d, c.clone());
            }
        }
        p
    }

    pub fn to_text(&self) -> String {
        format_structured(&self.system, self.spot_check, &self.errata)
    }
}

fn parse_exp(parts: &[&str], line: usize) -> Result<Exp3> {
    let mut e = [0u32; 3];
    for k in 0..3 {
        e[k] = parts
            .get(k)
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| HornError::syntax(line, "expected three derivative orders"))?;
    }
    Ok(e)
}

pub fn parse_structured(text: &str) -> Result<TranscribedSystem> {
    let mut header: Option<(String, usize, Provenance, bool)> = None;
    let mut equations: Vec<DiffOperator> = Vec::new();
    let mut errata: Vec<Vec<(Exp3, CoordPoly)>> = Vec::new();
    let mut open = false;
    for (no, raw) in text.lines().enumerate() {
        let ln = no + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        match words[0] {
            "system" => {
                if header.is_some() {
                    return Err(HornError::syntax(ln, "second `system` header"));
                }
                if words.len() < 6 || words[2] != "dim" || words[4] != "provenance" {
                    return Err(HornError::syntax(ln, "expected `system NAME dim D provenance P`"));
                }
                let dim: usize = words[3].parse().map_err(|_| HornError::syntax(ln, "bad dimension"))?;
                if !(1..=3).contains(&dim) {
                    return Err(HornError::syntax(ln, "dimension must be 1, 2 or 3"));
                }
                let prov = match words[5] {
                    "derived" => Provenance::Derived,
                    "transcribed" => Provenance::Transcribed,
                    w => return Err(HornError::syntax(ln, format!("unknown provenance `{w}`"))),
                };
                let spot = words[6..].contains(&"spot-check");
                header = Some((words[1].to_string(), dim, prov, spot));
            }
            "equation" => {
                if header.is_none() || open {
                    return Err(HornError::syntax(ln, "unexpected `equation`"));
                }
                open = true;
                equations.push(DiffOperator::zero());
                errata.push(Vec::new());
            }
            "term" | "erratum" => {
                if !open {
                    return Err(HornError::syntax(ln, format!("`{}` outside an equation", words[0])));
                }
                let e = parse_exp(&words[1..], ln)?;
                let rest = line.splitn(5, char::is_whitespace).nth(4).unwrap_or("").trim();
                if rest.is_empty() {
                    return Err(HornError::syntax(ln, "missing coefficient"));
                }
                let c = parse_tripoly(rest, &COORDS).map_err(|err| HornError::syntax(ln, err.to_string()))?;
                if words[0] == "term" {
                    equations.last_mut().unwrap().add_term(e, c);
                } else {
                    errata.last_mut().unwrap().push((e, c));
                }
            }
            "end" => {
                if !open {
                    return Err(HornError::syntax(ln, "`end` without `equation`"));
                }
                open = false;
            }
            w => return Err(HornError::syntax(ln, format!("unknown keyword `{w}`"))),
        }
    }
    if open {
        return Err(HornError::syntax(text.lines().count(), "missing `end`"));
    }
    let (name, dim, provenance, spot_check) = header.ok_or_else(|| HornError::syntax(1, "missing `system` header"))?;
    if equations.len() != dim {
        return Err(HornError::syntax(1, format!("{name}: {} equations for dimension {dim}", equations.len())));
    }
    Ok(TranscribedSystem { system: PdeSystem { name, dim, equations, provenance }, spot_check, errata })
}

/// Convenience for tests and tools: a coefficient from text over x, y, z.
pub fn coord_poly(text: &str) -> Result<CoordPoly> {
    parse_tripoly(text, &COORDS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_operator() {
        assert_eq!(format_equation(&DiffOperator::zero(), 2, 0), "0 = 0");
    }

    #[test]
    fn coefficient_shapes() {
        assert_eq!(render_coefficient(&coord_poly("x - x^2").unwrap()), (false, "x(1-x)".into()));
        assert_eq!(render_coefficient(&coord_poly("-2*z - 4*x*z").unwrap()), (true, "z(2+4x)".into()));
        assert_eq!(render_coefficient(&coord_poly("-a*b").unwrap()), (true, "a*b".into()));
        assert_eq!(render_coefficient(&coord_poly("(a+b)*x").unwrap()), (false, "(a+b)x".into()));
        assert_eq!(render_coefficient(&coord_poly("alpha*y").unwrap()), (false, "alpha*y".into()));
    }

    #[test]
    fn structured_round_trip() {
        let text = "system H system\n";
        assert!(parse_structured(text).is_err());
        let text = "system T dim 2 provenance transcribed spot-check\nequation 1\nterm 2 0 0 x - x^2\nterm 0 0 0 -a*b\nerratum 0 0 0 a*b\nend\nequation 2\nterm 0 1 0 c - y\nend\n";
        let t = parse_structured(text).unwrap();
        assert!(t.spot_check);
        assert!(t.has_errata());
        assert_eq!(parse_structured(&t.to_text()).unwrap(), t);
        assert_eq!(t.corrected().equations[0].coeff([0, 0, 0]), coord_poly("a*b").unwrap());
        assert!(parse_structured("system T dim 1 provenance derived\nequation 1\nterm 1 0 x\nend\n").is_err());
    }
}
