//! Line-oriented catalog format.
//!
//! ```text
//! series Gauss
//!   indices: n
//!   params: a b c
//!   num: a|n; b|n
//!   den: c|n
//!   region: r < 1
//! ```

use std::collections::BTreeSet;

use super::definition::{FactorRole, PochFactor, SeriesDefinition};
use crate::error::{HornError, Result};
use crate::eval::region::parse_region;
use crate::symbolic::expr::parse_param_poly;
use crate::symbolic::{sym, IndexLinearForm, ParamPoly, Sym};

#[derive(Default)]
struct Block {
    line: usize,
    name: String,
    indices: Option<(usize, String)>,
    params: Option<(usize, String)>,
    num: Option<(usize, String)>,
    den: Option<(usize, String)>,
    region: Option<(usize, String)>,
}

pub fn parse_catalog(text: &str) -> Result<Vec<SeriesDefinition>> {
    let mut blocks: Vec<Block> = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("series ") {
            let name = rest.trim();
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(HornError::syntax(line_no, "series needs a single name"));
            }
            blocks.push(Block {
                line: line_no,
                name: name.to_string(),
                ..Block::default()
            });
            continue;
        }
        let Some(b) = blocks.last_mut() else {
            return Err(HornError::syntax(line_no, "expected `series <name>`"));
        };
        let Some((key, value)) = line.split_once(':') else {
            return Err(HornError::syntax(line_no, format!("expected `key: value`, got `{line}`")));
        };
        let slot = match key.trim() {
            "indices" => &mut b.indices,
            "params" => &mut b.params,
            "num" => &mut b.num,
            "den" => &mut b.den,
            "region" => &mut b.region,
            k => return Err(HornError::syntax(line_no, format!("unknown key `{k}`"))),
        };
        if slot.is_some() {
            return Err(HornError::syntax(line_no, format!("repeated key `{}`", key.trim())));
        }
        *slot = Some((line_no, value.trim().to_string()));
    }

    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for b in blocks {
        if !seen.insert(b.name.clone()) {
            return Err(HornError::DuplicateSeries(b.name));
        }
        out.push(build(b)?);
    }
    Ok(out)
}

fn build(b: Block) -> Result<SeriesDefinition> {
    let (il, itext) = b.indices.ok_or_else(|| HornError::syntax(b.line, format!("{}: missing indices", b.name)))?;
    let indices: Vec<String> = itext.split_whitespace().map(str::to_string).collect();
    if indices.is_empty() || indices.len() > 3 {
        return Err(HornError::syntax(il, "between one and three indices are required"));
    }
    let params: Vec<Sym> = b
        .params
        .as_ref()
        .map(|(_, t)| t.split_whitespace().map(sym).collect())
        .unwrap_or_default();
    let pset: BTreeSet<Sym> = params.iter().cloned().collect();
    if pset.len() != params.len() {
        return Err(HornError::syntax(b.params.as_ref().unwrap().0, "parameter declared twice"));
    }
    for i in &indices {
        if pset.contains(i.as_str()) {
            return Err(HornError::IndexClash { series: b.name.clone(), name: i.clone() });
        }
    }
    if indices.iter().collect::<BTreeSet<_>>().len() != indices.len() {
        return Err(HornError::syntax(il, "index declared twice"));
    }

    let parse_list = |slot: &Option<(usize, String)>| -> Result<Vec<PochFactor>> {
        let Some((ln, t)) = slot else { return Ok(Vec::new()) };
        let mut v = Vec::new();
        for item in t.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (p, f) = item
                .split_once('|')
                .ok_or_else(|| HornError::syntax(*ln, format!("factor `{item}` needs `param|form`")))?;
            let param = parse_param_poly(p).map_err(|e| HornError::syntax(*ln, e.to_string()))?;
            if !param.is_affine() {
                return Err(HornError::syntax(*ln, format!("factor parameter `{p}` is not affine")));
            }
            for s in param.symbols() {
                if !pset.contains(&s) {
                    return Err(HornError::UndeclaredParam { series: b.name.clone(), param: s.to_string() });
                }
            }
            let form = IndexLinearForm::parse(f, &indices).map_err(|m| HornError::syntax(*ln, m))?;
            if form.is_zero() {
                if param.is_one() {
                    continue;
                }
                return Err(HornError::syntax(*ln, format!("factor `{item}` has an empty index form")));
            }
            let role = label_of(&param);
            v.push(PochFactor::new(param, form, role));
        }
        Ok(v)
    };
    let num = parse_list(&b.num)?;
    let mut den = parse_list(&b.den)?;
    for k in 0..indices.len() {
        den.push(PochFactor::factorial(k));
    }
    let (region, region_text) = match b.region {
        Some((ln, t)) if !t.is_empty() => {
            let e = parse_region(&t).map_err(|m| HornError::syntax(ln, m))?;
            (Some(e), Some(t))
        }
        _ => (None, None),
    };
    Ok(SeriesDefinition {
        name: b.name,
        indices,
        params,
        num,
        den,
        region,
        region_text,
    })
}

fn label_of(p: &ParamPoly) -> FactorRole {
    let syms = p.symbols();
    if syms.len() == 1 && p.len() == 1 {
        let s = syms.into_iter().next().unwrap();
        if p.linear_coeff(&s) == num_traits::One::one() {
            return FactorRole::Labeled(s);
        }
    }
    FactorRole::Other
}

fn factor_text(f: &PochFactor, indices: &[String]) -> String {
    format!("{}|{}", f.param.display_affine(), f.form.render(indices))
}

/// Writes definitions back in catalog syntax; factorial factors are left implicit.
pub fn format_catalog(defs: &[SeriesDefinition]) -> String {
    let mut out = String::new();
    for (i, d) in defs.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format_series(d));
    }
    out
}

pub fn format_series(d: &SeriesDefinition) -> String {
    let list = |fs: &[PochFactor]| {
        fs.iter()
            .filter(|f| !f.is_factorial())
            .map(|f| factor_text(f, &d.indices))
            .collect::<Vec<_>>()
            .join("; ")
    };
    let params: Vec<&str> = d.params.iter().map(|p| &**p).collect();
    let mut s = format!(
        "series {}\n  indices: {}\n  params: {}\n  num: {}\n  den: {}\n",
        d.name,
        d.indices.join(" "),
        params.join(" "),
        list(&d.num),
        list(&d.den)
    );
    if let Some(r) = &d.region_text {
        s.push_str(&format!("  region: {r}\n"));
    }
    s.lines().map(|l| l.trim_end().to_string() + "\n").collect()
}
