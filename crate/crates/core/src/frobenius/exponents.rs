use num_traits::{One, Zero};

use super::indicial::{IndicialSystem, EXPONENT_NAMES};
use crate::series::ExponentTuple;
use crate::symbolic::rational::rat_int;
use crate::symbolic::{LinFactor, ParamPoly, RationalNumber};

#[derive(Clone, Debug, Default)]
pub struct ExponentSearch {
    pub tuples: Vec<ExponentTuple>,
    /// Factor choices left out, with the reason.
    pub skipped: Vec<String>,
}

/// Solves one linear factor per axis for (τ, ν, λ). Choices involving a factor
/// that couples several exponents are skipped, as are singular ones.
pub fn enumerate_exponents(sys: &IndicialSystem) -> ExponentSearch {
    let dim = sys.dim;
    let names: Vec<String> = EXPONENT_NAMES[..dim].iter().map(|s| s.to_string()).collect();
    let mut out = ExponentSearch::default();
    let mut choice = vec![0usize; dim];
    if sys.axes.iter().any(|a| a.factors.is_empty()) {
        return out;
    }
    loop {
        let picked: Vec<&LinFactor> = (0..dim).map(|k| &sys.axes[k].factors[choice[k]]).collect();
        let label = || picked.iter().map(|f| f.render(&names)).collect::<Vec<_>>().join(", ");
        if let Some(f) = picked.iter().find(|f| f.form.support() > 1) {
            out.skipped.push(format!("{}: coupled factor {}", label(), f.render(&names)));
        } else {
            match solve(&picked, dim) {
                Some(t) => {
                    if !out.tuples.contains(&t) {
                        out.tuples.push(t);
                    }
                }
                None => out.skipped.push(format!("{}: singular", label())),
            }
        }
        let mut k = dim;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < sys.axes[k].factors.len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

fn solve(fs: &[&LinFactor], dim: usize) -> Option<ExponentTuple> {
    let mut a: Vec<Vec<RationalNumber>> = fs.iter().map(|f| (0..dim).map(|k| rat_int(f.form.coeff(k))).collect()).collect();
    let mut rhs: Vec<ParamPoly> = fs.iter().map(|f| f.constant.neg()).collect();
    for col in 0..dim {
        let piv = (col..dim).find(|r| !a[*r][col].is_zero())?;
        a.swap(col, piv);
        rhs.swap(col, piv);
        let inv = RationalNumber::one() / a[col][col].clone();
        for c in 0..dim {
            a[col][c] = &a[col][c] * &inv;
        }
        rhs[col] = rhs[col].scale(&inv);
        for r in 0..dim {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let m = a[r][col].clone();
            for c in 0..dim {
                let v = &a[col][c] * &m;
                a[r][c] -= v;
            }
            rhs[r] = rhs[r].sub(&rhs[col].scale(&m));
        }
    }
    Some(ExponentTuple(rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::indicial_system;
    use crate::series::parse_catalog;

    fn tuples(text: &str) -> Vec<String> {
        let s = parse_catalog(text).unwrap().remove(0);
        enumerate_exponents(&indicial_system(&s)).tuples.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn f10a_has_eight() {
        let t = tuples("series F_10a\n  indices: m n p\n  params: a1 a2 a3 a4 c1 c2 c3\n  num: a1|m+n; a2|n+p; a3|m; a4|p\n  den: c1|m; c2|n; c3|p\n");
        assert_eq!(t.len(), 8);
        assert_eq!(t[0], "(0, 0, 0)");
        assert!(t.contains(&"(1-c1, 1-c2, 1-c3)".to_string()));
    }

    #[test]
    fn h1_skips_the_coupled_factor() {
        let s = parse_catalog("series H1\n  indices: m n\n  params: alpha beta gamma delta\n  num: alpha|m-n; beta|m+n; gamma|n\n  den: delta|m\n").unwrap().remove(0);
        let search = enumerate_exponents(&indicial_system(&s));
        let t: Vec<String> = search.tuples.iter().map(|t| t.to_string()).collect();
        assert_eq!(t, ["(0, 0)", "(1-delta, 0)"]);
        assert_eq!(search.skipped.len(), 2);
    }

    #[test]
    fn gauss_and_coupled_f1() {
        assert_eq!(tuples("series G\n  indices: n\n  params: a b c\n  num: a|n; b|n\n  den: c|n\n"), ["(0)", "(1-c)"]);
        assert_eq!(tuples("series F1\n  indices: m n\n  params: a b b' c\n  num: a|m+n; b|m; b'|n\n  den: c|m+n\n"), ["(0, 0)"]);
    }
}
