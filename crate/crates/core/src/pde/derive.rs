use super::normalize::normalize_equation;
use super::operator::{DiffOperator, PdeSystem, Provenance};
use crate::error::{HornError, Result};
use crate::series::{ratio_factors, SeriesDefinition};
use crate::symbolic::rational::rat_int;
use crate::symbolic::{EulerPoly, ParamPoly, StirlingTable, TriPoly};

/// Expands δ-monomials: δ_a^k = Σ_i S(k,i) a^i ∂_a^i, multiplied across axes.
pub fn euler_to_operator(e: &EulerPoly) -> DiffOperator {
    let max = (0..3).map(|k| e.degree_in(k)).max().unwrap_or(0) as usize;
    let st = StirlingTable::new(max);
    let mut op = DiffOperator::zero();
    for (pw, c) in e.terms() {
        for i in 0..=pw[0] {
            for j in 0..=pw[1] {
                for k in 0..=pw[2] {
                    let w = st.get(pw[0] as usize, i as usize).unwrap()
                        * st.get(pw[1] as usize, j as usize).unwrap()
                        * st.get(pw[2] as usize, k as usize).unwrap();
                    if w == 0 {
                        continue;
                    }
                    let coeff = TriPoly::monomial([i, j, k], c.scale(&rat_int(w as i64)));
                    op.add_term([i, j, k], coeff);
                }
            }
        }
    }
    op
}

/// D(δ - e_axis) u - x_axis N(δ) u, divided by x_axis.
pub fn axis_equation(s: &SeriesDefinition, axis: usize) -> Result<DiffOperator> {
    let (num, den) = ratio_factors(s, axis);
    let mut back = [ParamPoly::zero(), ParamPoly::zero(), ParamPoly::zero()];
    back[axis] = ParamPoly::int(-1);
    let lhs = euler_to_operator(&den.expand().shift(&back));
    let mut unit = [0; 3];
    unit[axis] = 1;
    let rhs = euler_to_operator(&num.expand()).map_coeffs(|c| c.shift_exp(unit));
    let full = lhs.sub(&rhs);
    let mut out = DiffOperator::zero();
    for (d, c) in full.terms() {
        let q = c.div_var(axis).ok_or_else(|| {
            HornError::Inconsistent(format!("{}: equation {} is not divisible by the coordinate", s.name, axis + 1))
        })?;
        out.add_term(*d, q);
    }
    Ok(out)
}

/// One normalized equation per axis.
pub fn derive_system(s: &SeriesDefinition) -> Result<PdeSystem> {
    let mut equations = Vec::new();
    for axis in 0..s.dim() {
        equations.push(normalize_equation(&axis_equation(s, axis)?, axis).0);
    }
    Ok(PdeSystem { name: s.name.clone(), dim: s.dim(), equations, provenance: Provenance::Derived })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pde::format::format_equation;
    use crate::series::parse_catalog;

    fn def(text: &str) -> SeriesDefinition {
        parse_catalog(text).unwrap().remove(0)
    }

    #[test]
    fn gauss_equation() {
        let g = def("series G\n  indices: n\n  params: a b c\n  num: a|n; b|n\n  den: c|n\n");
        let sys = derive_system(&g).unwrap();
        assert_eq!(format_equation(&sys.equations[0], 1, 0), "x(1-x) u_xx + (c-(a+b+1)x) u_x - a*b u = 0");
    }

    #[test]
    fn exponential_equation() {
        let e = def("series E\n  indices: n\n  params:\n  num:\n  den:\n");
        let op = axis_equation(&e, 0).unwrap();
        assert_eq!(format_equation(&op, 1, 0), "u_x - u = 0");
    }

    #[test]
    fn e1_equations() {
        let e1 = def("series E_1\n  indices: m n p\n  params: a1 a2 a3 a4 a5 c\n  num: a1|m; a2|m; a3|n; a4|n; a5|p\n  den: c|m+n+p\n");
        let sys = derive_system(&e1).unwrap();
        assert_eq!(
            format_equation(&sys.equations[0], 3, 0),
            "x(1-x) u_xx + y u_xy + z u_xz + (c-(a1+a2+1)x) u_x - a1*a2 u = 0"
        );
        assert_eq!(format_equation(&sys.equations[2], 3, 2), "z u_zz + x u_xz + y u_yz + (c-z) u_z - a5 u = 0");
        for eq in &sys.equations {
            assert!(eq.order() <= 2);
        }
    }
}
