use rayon::prelude::*;

use super::exponents::enumerate_exponents;
use super::indicial::indicial_system;
use crate::error::Result;
use crate::pde::{derive_system, PdeSystem};
use crate::series::{argument_list, shift_series, ExponentTuple, SeriesDefinition};
use crate::symbolic::ParamPoly;
use crate::verify::bindings::{nondegenerate_bindings, seed_for};
use crate::verify::residual::residual_exact_shifted;

#[derive(Clone, Copy, Debug)]
pub struct SolutionOptions {
    pub degree: u32,
    pub bindings: usize,
    pub salt: u64,
}

impl Default for SolutionOptions {
    fn default() -> Self {
        SolutionOptions { degree: 8, bindings: 3, salt: 0 }
    }
}

/// x^e times a Horn series with shifted parameters.
#[derive(Clone, Debug)]
pub struct ParticularSolution {
    pub exponents: ExponentTuple,
    pub series: SeriesDefinition,
    pub prefactor: String,
    pub arguments: Vec<ParamPoly>,
    pub verified: bool,
    pub diagnostics: Vec<String>,
}

/// Does the original system annihilate x^e · S through the given degree?
pub fn check_annihilated(
    p: &PdeSystem,
    series: &SeriesDefinition,
    e: &ExponentTuple,
    opts: &SolutionOptions,
) -> std::result::Result<(), String> {
    let seed = seed_for(&format!("{} {}", series.name, e), opts.salt);
    let bindings = nondegenerate_bindings(series, opts.bindings, opts.degree, seed).map_err(|err| err.to_string())?;
    for b in &bindings {
        let r = residual_exact_shifted(p, series, e, b, opts.degree).map_err(|err| err.to_string())?;
        if let Some(v) = r.violations.first() {
            return Err(format!(
                "{} residual coefficient(s), first in equation {} at {:?}: {}",
                r.violations.len(),
                v.equation + 1,
                &v.index[..series.dim()],
                v.value
            ));
        }
    }
    Ok(())
}

pub fn particular_solutions(s: &SeriesDefinition) -> Result<Vec<ParticularSolution>> {
    particular_solutions_with(s, &SolutionOptions::default())
}

pub fn particular_solutions_with(s: &SeriesDefinition, opts: &SolutionOptions) -> Result<Vec<ParticularSolution>> {
    let system = derive_system(s)?;
    let search = enumerate_exponents(&indicial_system(s));
    let out = search
        .tuples
        .par_iter()
        .map(|e| {
            let series = shift_series(s, e);
            let check = check_annihilated(&system, &series, e, opts);
            ParticularSolution {
                exponents: e.clone(),
                prefactor: e.prefactor(),
                arguments: argument_list(&series),
                verified: check.is_ok(),
                diagnostics: check.err().into_iter().collect(),
                series,
            }
        })
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::parse_catalog;

    #[test]
    fn gauss_second_solution() {
        let s = parse_catalog("series G\n  indices: n\n  params: a b c\n  num: a|n; b|n\n  den: c|n\n").unwrap().remove(0);
        let sols = particular_solutions(&s).unwrap();
        assert_eq!(sols.len(), 2);
        assert!(sols.iter().all(|p| p.verified), "{:?}", sols[1].diagnostics);
        let args: Vec<String> = sols[1].arguments.iter().map(|a| a.display_affine()).collect();
        assert_eq!(args, ["1-c+a", "1-c+b", "2-c"]);
        assert_eq!(sols[1].prefactor, "x^(1-c)");
    }

    #[test]
    fn wrong_exponent_is_rejected() {
        let s = parse_catalog("series G\n  indices: n\n  params: a b c\n  num: a|n; b|n\n  den: c|n\n").unwrap().remove(0);
        let p = derive_system(&s).unwrap();
        let e = ExponentTuple(vec![crate::symbolic::expr::parse_param_poly("1-a").unwrap()]);
        let shifted = shift_series(&s, &e);
        assert!(check_annihilated(&p, &shifted, &e, &SolutionOptions::default()).is_err());
    }
}
