use std::collections::HashMap;

use crate::error::Result;
use crate::eval::coefficient_grid;
use crate::pde::DiffOperator;
use crate::series::{ParamBinding, SeriesDefinition};
use crate::symbolic::{Exp3, Scalar};

/// Coefficients of x^idx for every idx of total degree ≤ `degree`.
#[derive(Clone, Debug)]
pub struct TruncatedSeries<T> {
    pub dim: usize,
    pub degree: u32,
    pub coeffs: HashMap<Exp3, T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    pub fn build(s: &SeriesDefinition, b: &ParamBinding<T>, degree: u32) -> Result<Self> {
        Ok(TruncatedSeries { dim: s.dim(), degree, coeffs: coefficient_grid(s, b, degree)? })
    }

    pub fn get(&self, e: &Exp3) -> T {
        self.coeffs.get(e).cloned().unwrap_or_else(T::zero)
    }

    /// Coefficient of x^β in L u, valid while |β| + order ≤ degree.
    pub fn apply_at(&self, op: &[(Exp3, Vec<(Exp3, T)>)], beta: &Exp3) -> T {
        self.apply_at_offset(op, &beta.map(|v| v as i64), None)
    }

    /// Same for x^e · u: the coefficient of x^(e+β). β may be negative there.
    pub fn apply_at_offset(&self, op: &[(Exp3, Vec<(Exp3, T)>)], beta: &[i64; 3], offset: Option<&[T; 3]>) -> T {
        let mut acc = T::zero();
        for (d, coeff) in op {
            for (mu, c) in coeff {
                let src = [0, 1, 2].map(|k| beta[k] + d[k] as i64 - mu[k] as i64);
                if src.iter().any(|v| *v < 0) {
                    continue;
                }
                let src = src.map(|v| v as u32);
                let a = self.get(&src);
                if a.is_zero() {
                    continue;
                }
                let mut w = T::one();
                for k in 0..3 {
                    for j in 0..d[k] {
                        let mut f = T::from_i64(src[k] as i64 - j as i64);
                        if let Some(o) = offset {
                            f = f.add(&o[k]);
                        }
                        w = w.mul(&f);
                    }
                }
                acc = acc.add(&c.mul(&a).mul(&w));
            }
        }
        acc
    }
}

/// Evaluates the parameter part of every coefficient of an operator.
pub fn bind_operator<T: Scalar>(op: &DiffOperator, b: &ParamBinding<T>) -> Result<Vec<(Exp3, Vec<(Exp3, T)>)>> {
    op.terms().map(|(d, c)| Ok((*d, c.eval_params(b)?))).collect()
}

/// All multi-indices of the given dimension with total degree ≤ n.
pub fn window(dim: usize, n: u32) -> Vec<Exp3> {
    (0..=n).flat_map(|k| crate::eval::coeff::shell(dim, k)).collect()
}
