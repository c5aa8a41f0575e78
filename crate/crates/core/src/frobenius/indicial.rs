use crate::series::{ratio_factors, ExponentTuple, FactorList, SeriesDefinition};
use crate::symbolic::rational::rat_int;
use crate::symbolic::{LinFactor, ParamPoly};

pub const EXPONENT_NAMES: [&str; 3] = ["tau", "nu", "lambda"];

/// Per axis, the denominator of that axis ratio at (τ,ν,λ) - e_axis, still factored.
#[derive(Clone, Debug, PartialEq)]
pub struct IndicialSystem {
    pub dim: usize,
    pub axes: Vec<FactorList>,
}

impl IndicialSystem {
    pub fn render(&self) -> Vec<String> {
        let names: Vec<String> = EXPONENT_NAMES[..self.dim].iter().map(|s| s.to_string()).collect();
        self.axes.iter().map(|f| format!("{} = 0", f.render(&names))).collect()
    }

    /// Value of a factor at the tuple.
    pub fn factor_at(f: &LinFactor, e: &ExponentTuple) -> ParamPoly {
        f.constant.add(&f.form.apply(&e.0))
    }

    /// Every axis polynomial vanishes identically at the tuple.
    pub fn is_satisfied_by(&self, e: &ExponentTuple) -> bool {
        self.axes
            .iter()
            .all(|fl| fl.scalar.is_zero() || fl.factors.iter().any(|f| Self::factor_at(f, e).is_zero()))
    }
}

pub fn indicial_system(s: &SeriesDefinition) -> IndicialSystem {
    let axes = (0..s.dim())
        .map(|i| {
            let (_, den) = ratio_factors(s, i);
            let mut out = FactorList { scalar: den.scalar.clone(), factors: Vec::new() };
            for f in &den.factors {
                out.push(f.add_const(&rat_int(-f.form.coeff(i))));
            }
            out
        })
        .collect();
    IndicialSystem { dim: s.dim(), axes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::parse_catalog;

    #[test]
    fn f10a_is_uncoupled() {
        let s = parse_catalog("series F_10a\n  indices: m n p\n  params: a1 a2 a3 a4 c1 c2 c3\n  num: a1|m+n; a2|n+p; a3|m; a4|p\n  den: c1|m; c2|n; c3|p\n").unwrap().remove(0);
        let r = indicial_system(&s).render();
        assert_eq!(r, ["(tau)(-1+c1+tau) = 0", "(nu)(-1+c2+nu) = 0", "(lambda)(-1+c3+lambda) = 0"]);
    }

    #[test]
    fn f1_is_coupled() {
        let s = parse_catalog("series F1\n  indices: m n\n  params: a b b' c\n  num: a|m+n; b|m; b'|n\n  den: c|m+n\n").unwrap().remove(0);
        let r = indicial_system(&s).render();
        assert_eq!(r, ["(tau)(-1+c+tau+nu) = 0", "(nu)(-1+c+tau+nu) = 0"]);
    }

    #[test]
    fn exponential() {
        let s = parse_catalog("series E\n  indices: n\n  params:\n  num:\n  den:\n").unwrap().remove(0);
        assert_eq!(indicial_system(&s).render(), ["(tau) = 0"]);
    }
}
