use std::collections::HashMap;

use super::coeff::{predecessor, shell, BoundSeries};
use super::region::{region_status, RegionStatus};
use crate::error::{HornError, Result};
use crate::series::{ParamBinding, SeriesDefinition};
use crate::symbolic::Exp3;

#[derive(Clone, Debug, PartialEq)]
pub struct EvalConfig {
    pub tol: f64,
    pub max_shells: usize,
    pub consecutive_small_shells: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { tol: 1e-12, max_shells: 400, consecutive_small_shells: 3 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub shells_used: usize,
    pub tail_estimate: f64,
    pub region_status: RegionStatus,
    /// Stopped at `max_shells` without meeting the tolerance.
    pub exhausted: bool,
}

/// Region status of a point, `unknown` when the series carries no region.
pub fn region_check(s: &SeriesDefinition, point: &[f64]) -> RegionStatus {
    region_check_detail(s, point).0
}

pub fn region_check_detail(s: &SeriesDefinition, point: &[f64]) -> (RegionStatus, Vec<String>) {
    match &s.region {
        Some(r) => region_status(r, point),
        None => (RegionStatus::Unknown, vec![format!("{} has no region", s.name)]),
    }
}

/// Sums total-degree shells of the series at `point`.
pub fn eval_series(s: &SeriesDefinition, b: &ParamBinding<f64>, point: &[f64], cfg: &EvalConfig) -> Result<EvalResult> {
    if point.len() != s.dim() {
        return Err(HornError::OutOfRange(format!("{} expects {} coordinates, got {}", s.name, s.dim(), point.len())));
    }
    if cfg.tol <= 0.0 || cfg.max_shells == 0 {
        return Err(HornError::OutOfRange("tol must be positive and max_shells at least 1".into()));
    }
    if point.iter().any(|x| !x.is_finite()) {
        return Err(HornError::OutOfRange("coordinates must be finite".into()));
    }
    let mut x = [0.0; 3];
    x[..point.len()].copy_from_slice(point);
    let bs = BoundSeries::new(s, b)?;
    let status = region_check(s, point);

    let mut prev: HashMap<Exp3, f64> = HashMap::new();
    prev.insert([0, 0, 0], 1.0);
    let mut sum = 1.0;
    let mut small = 0;
    let mut shell_mags = vec![1.0];
    let mut used = 1;
    let mut converged = false;
    for k in 1..cfg.max_shells as u32 {
        let mut cur = HashMap::new();
        let mut shell_sum = 0.0;
        let mut shell_abs = 0.0;
        for idx in shell(s.dim(), k) {
            let t = if (0..3).any(|a| idx[a] > 0 && x[a] == 0.0) {
                0.0
            } else {
                let (p, a) = predecessor(&idx).unwrap();
                let tp = prev.get(&p).copied().unwrap_or(0.0);
                let (n, d) = if tp == 0.0 { (0.0, 0.0) } else { bs.step(&p, a) };
                if tp != 0.0 && d != 0.0 {
                    tp * n / d * x[a]
                } else {
                    let c = bs.direct(&idx)?;
                    (0..3).fold(c, |acc, j| acc * x[j].powi(idx[j] as i32))
                }
            };
            shell_sum += t;
            shell_abs += t.abs();
            cur.insert(idx, t);
        }
        sum += shell_sum;
        shell_mags.push(shell_abs);
        used += 1;
        prev = cur;
        if shell_abs <= cfg.tol * sum.abs() {
            small += 1;
            if small >= cfg.consecutive_small_shells {
                converged = true;
                break;
            }
        } else {
            small = 0;
        }
    }
    let last = *shell_mags.last().unwrap();
    let before = shell_mags[shell_mags.len().saturating_sub(2)];
    let mut exhausted = !converged;
    let tail = if last == 0.0 {
        0.0
    } else {
        let q = last / before;
        if q < 1.0 {
            last * q / (1.0 - q)
        } else {
            exhausted = true;
            last
        }
    };
    Ok(EvalResult { value: sum, shells_used: used, tail_estimate: tail, region_status: status, exhausted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::parse_catalog;
    use crate::symbolic::sym;

    fn gauss() -> SeriesDefinition {
        parse_catalog("series Gauss\n  indices: n\n  params: a b c\n  num: a|n; b|n\n  den: c|n\n  region: r < 1\n").unwrap().remove(0)
    }

    fn bind(a: f64, b: f64, c: f64) -> ParamBinding<f64> {
        [(sym("a"), a), (sym("b"), b), (sym("c"), c)].into_iter().collect()
    }

    #[test]
    fn at_origin() {
        let r = eval_series(&gauss(), &bind(0.5, 0.5, 1.5), &[0.0], &EvalConfig::default()).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(r.shells_used <= 4);
        assert_eq!(r.tail_estimate, 0.0);
    }

    #[test]
    fn log_closed_form() {
        let r = eval_series(&gauss(), &bind(1.0, 1.0, 2.0), &[0.5], &EvalConfig::default()).unwrap();
        assert!((r.value - 2.0 * 2f64.ln()).abs() < 1e-11);
        assert_eq!(r.region_status, RegionStatus::Inside);
        assert!(!r.exhausted);
        assert!(r.tail_estimate >= 0.0);
    }

    #[test]
    fn exhaustion_is_flagged() {
        let cfg = EvalConfig { max_shells: 10, ..EvalConfig::default() };
        let r = eval_series(&gauss(), &bind(1.0, 1.0, 2.0), &[0.9], &cfg).unwrap();
        assert!(r.exhausted);
        assert_eq!(r.shells_used, 10);
    }

    #[test]
    fn arity_checked() {
        assert!(eval_series(&gauss(), &bind(1.0, 1.0, 2.0), &[0.1, 0.2], &EvalConfig::default()).is_err());
    }
}
