use std::collections::HashMap;

use super::truncated::{bind_operator, window, TruncatedSeries};
use crate::error::{HornError, Result};
use crate::eval::{eval_series, region_check_detail, EvalConfig, RegionStatus};
use crate::pde::PdeSystem;
use crate::series::{ExponentTuple, ParamBinding, SeriesDefinition};
use crate::symbolic::rational::fmt_rational;
use crate::symbolic::{Exp3, RationalNumber};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidualMode {
    Exact,
    Numeric,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub equation: usize,
    /// Exponent offset from x^e of the offending coefficient.
    pub index: [i64; 3],
    pub value: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidualReport {
    pub mode: ResidualMode,
    pub violations: Vec<Violation>,
    /// Numeric mode: |Lu| / Σ|terms| per equation.
    pub relative: Vec<f64>,
    pub point: Vec<f64>,
    pub step: f64,
}

impl ResidualReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn max_relative(&self) -> f64 {
        self.relative.iter().copied().fold(0.0, f64::max)
    }
}

/// Checks every coefficient of L u up to total degree N-2 is exactly zero.
pub fn residual_exact(
    p: &PdeSystem,
    s: &SeriesDefinition,
    b: &ParamBinding<RationalNumber>,
    n: u32,
) -> Result<ResidualReport> {
    residual_exact_shifted(p, s, &ExponentTuple::zero(s.dim()), b, n)
}

/// As [`residual_exact`] for the function x^e · u.
pub fn residual_exact_shifted(
    p: &PdeSystem,
    s: &SeriesDefinition,
    e: &ExponentTuple,
    b: &ParamBinding<RationalNumber>,
    n: u32,
) -> Result<ResidualReport> {
    let series = TruncatedSeries::build(s, b, n)?;
    let mut offset: [RationalNumber; 3] = Default::default();
    for (k, v) in e.0.iter().enumerate() {
        offset[k] = v.eval(b)?;
    }
    let offset = (!e.is_zero()).then_some(&offset);
    let mut violations = Vec::new();
    for (k, eq) in p.equations.iter().enumerate() {
        let bound = bind_operator(eq, b)?;
        let reach = eq.order().max(2);
        // with an offset the lowest terms carry the indicial conditions
        let low = if offset.is_some() { reach as i64 } else { 0 };
        for w in window(s.dim(), n.saturating_sub(reach) + s.dim() as u32 * low as u32) {
            let mut beta = [0i64; 3];
            for k in 0..s.dim() {
                beta[k] = w[k] as i64 - low;
            }
            let v = series.apply_at_offset(&bound, &beta, offset);
            if !num_traits::Zero::is_zero(&v) {
                violations.push(Violation { equation: k, index: beta, value: fmt_rational(&v) });
            }
        }
    }
    violations.sort_by_key(|v| (v.index.iter().sum::<i64>(), v.equation));
    Ok(ResidualReport { mode: ResidualMode::Exact, violations, relative: Vec::new(), point: Vec::new(), step: 0.0 })
}

/// Series settings used for finite-difference samples.
pub fn fd_eval_config() -> EvalConfig {
    EvalConfig { tol: 1e-17, max_shells: 400, consecutive_small_shells: 3 }
}

const W1: [f64; 5] = [1.0, -8.0, 0.0, 8.0, -1.0];
const W2: [f64; 5] = [-1.0, 16.0, -30.0, 16.0, -1.0];

/// Largest relative residual accepted from the finite-difference check.
pub const NUMERIC_RESIDUAL_BOUND: f64 = 1e-6;

/// Fourth-order central differences at a point strictly inside the region.
pub fn residual_numeric(
    p: &PdeSystem,
    s: &SeriesDefinition,
    b: &ParamBinding<f64>,
    point: &[f64],
    h: f64,
) -> Result<ResidualReport> {
    if !(h > 0.0) {
        return Err(HornError::OutOfRange("step must be positive".into()));
    }
    if point.len() != s.dim() {
        return Err(HornError::OutOfRange(format!("{} expects {} coordinates", s.name, s.dim())));
    }
    let (st, diag) = region_check_detail(s, point);
    if st != RegionStatus::Inside {
        return Err(HornError::Refused(format!(
            "{} at {:?} is {st} of the region{}",
            s.name,
            point,
            if diag.is_empty() { String::new() } else { format!(": {}", diag.join("; ")) }
        )));
    }
    let cfg = fd_eval_config();
    let dim = s.dim();
    let mut cache: HashMap<[i32; 3], f64> = HashMap::new();
    let mut u = |off: [i32; 3]| -> Result<f64> {
        if let Some(v) = cache.get(&off) {
            return Ok(*v);
        }
        let pt: Vec<f64> = (0..dim).map(|k| point[k] + off[k] as f64 * h).collect();
        let v = eval_series(s, b, &pt, &cfg)?.value;
        cache.insert(off, v);
        Ok(v)
    };
    let mut derivs: HashMap<Exp3, f64> = HashMap::new();
    derivs.insert([0, 0, 0], u([0, 0, 0])?);
    for a in 0..dim {
        let mut d1 = 0.0;
        let mut d2 = 0.0;
        for (i, o) in (-2..=2).enumerate() {
            let mut off = [0; 3];
            off[a] = o;
            let f = u(off)?;
            d1 += W1[i] * f;
            d2 += W2[i] * f;
        }
        let mut e1 = [0; 3];
        e1[a] = 1;
        let mut e2 = [0; 3];
        e2[a] = 2;
        derivs.insert(e1, d1 / (12.0 * h));
        derivs.insert(e2, d2 / (12.0 * h * h));
        for c in a + 1..dim {
            let mut acc = 0.0;
            for (i, oi) in (-2..=2).enumerate() {
                for (j, oj) in (-2..=2).enumerate() {
                    if W1[i] == 0.0 || W1[j] == 0.0 {
                        continue;
                    }
                    let mut off = [0; 3];
                    off[a] = oi;
                    off[c] = oj;
                    acc += W1[i] * W1[j] * u(off)?;
                }
            }
            let mut e = [0; 3];
            e[a] = 1;
            e[c] = 1;
            derivs.insert(e, acc / (144.0 * h * h));
        }
    }
    let mut x = [0.0; 3];
    x[..dim].copy_from_slice(point);
    let mut relative = Vec::new();
    for eq in &p.equations {
        let mut sum = 0.0;
        let mut mag = 0.0;
        for (d, c) in eq.terms() {
            let dv = *derivs
                .get(d)
                .ok_or_else(|| HornError::OutOfRange(format!("derivative order {d:?} is beyond the stencil")))?;
            let t = c.eval(&x, b)? * dv;
            sum += t;
            mag += t.abs();
        }
        relative.push(if mag == 0.0 { 0.0 } else { sum.abs() / mag });
    }
    Ok(ResidualReport { mode: ResidualMode::Numeric, violations: Vec::new(), relative, point: point.to_vec(), step: h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pde::derive_system;
    use crate::pde::format::coord_poly;
    use crate::shipped::shipped_series;
    use crate::verify::bindings::{nondegenerate_bindings, to_f64_binding};

    fn exact_clean(name: &str, n: u32) -> bool {
        let s = shipped_series(name).unwrap();
        let p = derive_system(&s).unwrap();
        nondegenerate_bindings(&s, 2, n, 11)
            .unwrap()
            .iter()
            .all(|b| residual_exact(&p, &s, b, n).unwrap().is_clean())
    }

    #[test]
    fn derived_systems_annihilate() {
        assert!(exact_clean("Gauss", 12));
        assert!(exact_clean("E_1", 10));
        assert!(exact_clean("H4", 8));
    }

    #[test]
    fn perturbed_system_fails_at_degree_zero() {
        let s = shipped_series("Gauss").unwrap();
        let mut p = derive_system(&s).unwrap();
        let c = p.equations[0].coeff([0, 0, 0]);
        p.equations[0].set_term([0, 0, 0], c.add(&coord_poly("1").unwrap()));
        let b = &nondegenerate_bindings(&s, 1, 10, 3).unwrap()[0];
        let r = residual_exact(&p, &s, b, 10).unwrap();
        assert!(!r.is_clean());
        assert_eq!(r.violations[0].index, [0, 0, 0]);
    }

    #[test]
    fn exponential_numeric() {
        let s = shipped_series("Exp").unwrap();
        let p = derive_system(&s).unwrap();
        let r = residual_numeric(&p, &s, &ParamBinding::new(), &[0.3], 1e-3).unwrap();
        assert!(r.max_relative() <= 1e-10, "{}", r.max_relative());
    }

    #[test]
    fn numeric_three_variables_and_refusal() {
        let s = shipped_series("F_10a").unwrap();
        let p = derive_system(&s).unwrap();
        let b = to_f64_binding(&nondegenerate_bindings(&s, 1, 10, 5).unwrap()[0]);
        let r = residual_numeric(&p, &s, &b, &[0.1, 0.05, 0.1], 1e-3).unwrap();
        assert!(r.max_relative() <= NUMERIC_RESIDUAL_BOUND, "{}", r.max_relative());
        assert!(matches!(residual_numeric(&p, &s, &b, &[0.6, 0.3, 0.6], 1e-3), Err(HornError::Refused(_))));
        assert!(residual_numeric(&p, &s, &b, &[0.1, 0.05, 0.1], 0.0).is_err());
    }
}
