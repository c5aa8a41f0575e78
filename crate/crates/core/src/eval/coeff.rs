use std::collections::HashMap;

use super::pochhammer::pochhammer;
use crate::error::{HornError, Result};
use crate::series::{ParamBinding, SeriesDefinition};
use crate::symbolic::{Exp3, Scalar};

/// A series with its parameters evaluated, ready for repeated coefficient work.
#[derive(Clone, Debug)]
pub struct BoundSeries<T> {
    pub dim: usize,
    /// (value of λ, form, upstairs)
    factors: Vec<(T, [i64; 3], bool)>,
}

impl<T: Scalar> BoundSeries<T> {
    pub fn new(s: &SeriesDefinition, b: &ParamBinding<T>) -> Result<Self> {
        let mut factors = Vec::new();
        for (f, up) in s.factors() {
            factors.push((f.param.eval(b)?, f.form.0, up));
        }
        Ok(BoundSeries { dim: s.dim(), factors })
    }

    /// ∏ (λ)_{L·idx} over the numerator divided by the same over the denominator.
    pub fn direct(&self, idx: &Exp3) -> Result<T> {
        let iv = [idx[0] as i64, idx[1] as i64, idx[2] as i64];
        let mut acc = T::one();
        for (lam, form, up) in &self.factors {
            let k = form[0] * iv[0] + form[1] * iv[1] + form[2] * iv[2];
            let v = pochhammer(lam, k)?;
            if *up {
                acc = acc.mul(&v);
            } else {
                if v.is_zero() {
                    return Err(HornError::Pole {
                        factor: format!("({})_{k} in a denominator", lam.describe()),
                    });
                }
                acc = acc.div(&v);
            }
        }
        Ok(acc)
    }

    /// Numerator and denominator of A(idx + e_axis) / A(idx), evaluated.
    pub fn step(&self, idx: &Exp3, axis: usize) -> (T, T) {
        let iv = [idx[0] as i64, idx[1] as i64, idx[2] as i64];
        let mut n = T::one();
        let mut d = T::one();
        for (lam, form, up) in &self.factors {
            let c = form[axis];
            if c == 0 {
                continue;
            }
            let base = lam.add(&T::from_i64(form[0] * iv[0] + form[1] * iv[1] + form[2] * iv[2]));
            let (top, bottom) = if *up { (&mut n, &mut d) } else { (&mut d, &mut n) };
            if c > 0 {
                for j in 0..c {
                    *top = top.mul(&base.add(&T::from_i64(j)));
                }
            } else {
                for j in 1..=-c {
                    *bottom = bottom.mul(&base.sub(&T::from_i64(j)));
                }
            }
        }
        (n, d)
    }

    /// Next coefficient from a known one, falling back to the direct formula
    /// when the step passes through a zero or a pole.
    pub fn advance(&self, prev: &T, idx: &Exp3, axis: usize) -> Result<T> {
        let mut next = *idx;
        next[axis] += 1;
        if prev.is_zero() {
            return self.direct(&next);
        }
        let (n, d) = self.step(idx, axis);
        if d.is_zero() {
            return self.direct(&next);
        }
        Ok(prev.mul(&n).div(&d))
    }
}

/// All multi-indices of `dim` components with total degree `k`, x-major order.
pub fn shell(dim: usize, k: u32) -> Vec<Exp3> {
    let mut v = Vec::new();
    match dim {
        1 => v.push([k, 0, 0]),
        2 => {
            for i in (0..=k).rev() {
                v.push([i, k - i, 0]);
            }
        }
        _ => {
            for i in (0..=k).rev() {
                for j in (0..=k - i).rev() {
                    v.push([i, j, k - i - j]);
                }
            }
        }
    }
    v
}

/// Predecessor used by the shell recurrences: step back along the first nonzero axis.
pub fn predecessor(idx: &Exp3) -> Option<(Exp3, usize)> {
    let a = (0..3).find(|k| idx[*k] > 0)?;
    let mut p = *idx;
    p[a] -= 1;
    Some((p, a))
}

/// Coefficient of x^idx (factorials included) via the ratio recurrences from the origin.
pub fn coefficient_at<T: Scalar>(s: &SeriesDefinition, b: &ParamBinding<T>, idx: &Exp3) -> Result<T> {
    let bs = BoundSeries::new(s, b)?;
    let mut cur = [0u32; 3];
    let mut v = T::one();
    for axis in 0..3 {
        while cur[axis] < idx[axis] {
            v = bs.advance(&v, &cur, axis)?;
            cur[axis] += 1;
        }
    }
    Ok(v)
}

pub fn coefficient_direct<T: Scalar>(s: &SeriesDefinition, b: &ParamBinding<T>, idx: &Exp3) -> Result<T> {
    BoundSeries::new(s, b)?.direct(idx)
}

/// Every coefficient with total degree ≤ n.
pub fn coefficient_grid<T: Scalar>(s: &SeriesDefinition, b: &ParamBinding<T>, n: u32) -> Result<HashMap<Exp3, T>> {
    let bs = BoundSeries::new(s, b)?;
    let mut out = HashMap::new();
    out.insert([0, 0, 0], T::one());
    for k in 1..=n {
        for idx in shell(s.dim(), k) {
            let (p, a) = predecessor(&idx).unwrap();
            let v = bs.advance(&out[&p], &p, a)?;
            out.insert(idx, v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::parse_catalog;
    use crate::symbolic::rational::{rat, rat_int};
    use crate::symbolic::{sym, RationalNumber};

    fn f10a() -> SeriesDefinition {
        parse_catalog("series F_10a\n  indices: m n p\n  params: a1 a2 a3 a4 c1 c2 c3\n  num: a1|m+n; a2|n+p; a3|m; a4|p\n  den: c1|m; c2|n; c3|p\n")
            .unwrap()
            .remove(0)
    }

    fn binding(vals: &[(&str, RationalNumber)]) -> ParamBinding<RationalNumber> {
        vals.iter().map(|(k, v)| (sym(k), v.clone())).collect()
    }

    #[test]
    fn origin_is_one() {
        let b = binding(&[("a1", rat(1, 3)), ("a2", rat(2, 5)), ("a3", rat(1, 7)), ("a4", rat(3, 4)), ("c1", rat(5, 2)), ("c2", rat(9, 4)), ("c3", rat(7, 3))]);
        assert_eq!(coefficient_at(&f10a(), &b, &[0, 0, 0]).unwrap(), rat_int(1));
    }

    #[test]
    fn f10a_recurrence_vs_products() {
        let b = binding(&[("a1", rat(1, 3)), ("a2", rat(2, 5)), ("a3", rat(1, 7)), ("a4", rat(3, 4)), ("c1", rat(5, 2)), ("c2", rat(9, 4)), ("c3", rat(7, 3))]);
        let got = coefficient_at(&f10a(), &b, &[1, 1, 0]).unwrap();
        // (a1)_2 (a2)_1 (a3)_1 / ((c1)_1 (c2)_1) / (1! 1!)
        let a1 = rat(1, 3);
        let want = a1.clone() * (a1 + rat_int(1)) * rat(2, 5) * rat(1, 7) / (rat(5, 2) * rat(9, 4));
        assert_eq!(got, want);
        let grid = coefficient_grid(&f10a(), &b, 8).unwrap();
        for (idx, v) in &grid {
            assert_eq!(*v, coefficient_direct(&f10a(), &b, idx).unwrap());
        }
    }

    #[test]
    fn gauss_equal_parameters() {
        let g = parse_catalog("series G\n  indices: n\n  params: a b c\n  num: a|n; b|n\n  den: c|n\n").unwrap().remove(0);
        let b = binding(&[("a", rat(3, 2)), ("b", rat(3, 2)), ("c", rat(3, 2))]);
        let v = coefficient_at(&g, &b, &[4, 0, 0]).unwrap();
        let want = pochhammer(&rat(3, 2), 4).unwrap() / rat_int(24);
        assert_eq!(v, want);
    }

    #[test]
    fn terminating_series_passes_zero() {
        let g = parse_catalog("series G\n  indices: n\n  params: a b c\n  num: a|n; b|n\n  den: c|n\n").unwrap().remove(0);
        let b = binding(&[("a", rat_int(-2)), ("b", rat(1, 3)), ("c", rat(1, 2))]);
        assert_eq!(coefficient_at(&g, &b, &[3, 0, 0]).unwrap(), rat_int(0));
        let b = binding(&[("a", rat(1, 3)), ("b", rat(1, 3)), ("c", rat_int(-1))]);
        assert!(matches!(coefficient_at(&g, &b, &[3, 0, 0]), Err(HornError::Pole { .. })));
    }
}
