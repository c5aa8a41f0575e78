use std::fmt;

use super::definition::SeriesDefinition;
use crate::symbolic::rational::rat_int;
use crate::symbolic::{IndexLinearForm, IndexPoly, LinFactor, ParamPoly, TriPoly};

/// A product `scalar · ∏ factors` of linear polynomials in the indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorList {
    pub scalar: ParamPoly,
    pub factors: Vec<LinFactor>,
}

impl FactorList {
    pub fn one() -> Self {
        FactorList { scalar: ParamPoly::one(), factors: Vec::new() }
    }

    /// Adds a factor, moving index-free factors into the scalar and orienting signs.
    pub fn push(&mut self, f: LinFactor) {
        if f.is_constant() {
            self.scalar = self.scalar.mul(&f.constant);
            return;
        }
        let (g, sign) = f.normalized();
        if sign < 0 {
            self.scalar = self.scalar.neg();
        }
        self.factors.push(g);
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn expand(&self) -> IndexPoly {
        self.factors
            .iter()
            .fold(TriPoly::constant(self.scalar.clone()), |acc, f| acc.mul(&f.expand()))
    }

    pub fn render(&self, names: &[String]) -> String {
        let mut parts: Vec<String> = Vec::new();
        if !self.scalar.is_one() || self.factors.is_empty() {
            let s = self.scalar.to_string();
            parts.push(if self.scalar.len() > 1 { format!("({s})") } else { s });
        }
        for f in &self.factors {
            parts.push(format!("({})", f.render(names)));
        }
        if parts.len() > 1 && parts[0] == "-1" {
            parts.remove(0);
            return format!("-{}", parts.join(""));
        }
        parts.join("")
    }
}

impl fmt::Display for FactorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = ["m", "n", "p"].iter().map(|s| s.to_string()).collect();
        f.write_str(&self.render(&names))
    }
}

/// Factors contributed by (λ)_{L} when the axis index steps by one:
/// `c > 0` gives (λ+L)…(λ+L+c-1) upstairs, `c < 0` gives (λ+L-1)…(λ+L-|c|) downstairs.
fn contribution(base: &LinFactor, c: i64) -> (Vec<LinFactor>, Vec<LinFactor>) {
    let mut up = Vec::new();
    let mut down = Vec::new();
    if c > 0 {
        for j in 0..c {
            up.push(base.add_const(&rat_int(j)));
        }
    } else {
        for j in 1..=-c {
            down.push(base.add_const(&rat_int(-j)));
        }
    }
    (up, down)
}

/// Numerator and denominator of A(idx + e_axis) / A(idx), with common factors cancelled.
/// The factorial's `(idx_axis + 1)` is always kept in the denominator.
pub fn ratio_factors(s: &SeriesDefinition, axis: usize) -> (FactorList, FactorList) {
    let mut num = FactorList::one();
    let mut den = FactorList::one();
    let step = factorial_step(axis);
    let mut kept_step = false;
    for (f, upstairs) in s.factors() {
        let c = f.form.coeff(axis);
        if c == 0 {
            continue;
        }
        let (mut a, mut b) = contribution(&f.base(), c);
        if !upstairs {
            std::mem::swap(&mut a, &mut b);
        }
        for g in a {
            num.push(g);
        }
        for g in b {
            if !kept_step && g == step {
                kept_step = true;
            } else {
                den.push(g);
            }
        }
    }
    let mut i = 0;
    while i < num.factors.len() {
        if let Some(j) = den.factors.iter().position(|g| *g == num.factors[i]) {
            den.factors.remove(j);
            num.factors.remove(i);
        } else {
            i += 1;
        }
    }
    if kept_step {
        den.factors.insert(0, step);
    }
    (num, den)
}

pub fn horn_order(s: &SeriesDefinition) -> usize {
    (0..s.dim())
        .map(|k| {
            let (n, d) = ratio_factors(s, k);
            n.degree().max(d.degree())
        })
        .max()
        .unwrap_or(0)
}

/// The factor `idx_axis + 1`.
pub fn factorial_step(axis: usize) -> LinFactor {
    LinFactor::new(ParamPoly::one(), IndexLinearForm::unit(axis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::catalog::parse_catalog;
    use crate::symbolic::expr::parse_tripoly;

    fn def(text: &str) -> SeriesDefinition {
        parse_catalog(text).unwrap().remove(0)
    }

    fn ip(s: &str) -> IndexPoly {
        parse_tripoly(s, &["m", "n", "p"]).unwrap()
    }

    #[test]
    fn e1_axis_m() {
        let e1 = def("series E_1\n  indices: m n p\n  params: a1 a2 a3 a4 a5 c\n  num: a1|m; a2|m; a3|n; a4|n; a5|p\n  den: c|m+n+p\n");
        let (n, d) = ratio_factors(&e1, 0);
        assert_eq!(n.expand(), ip("(a1+m)*(a2+m)"));
        assert_eq!(d.expand(), ip("(m+1)*(c+m+n+p)"));
        assert_eq!(horn_order(&e1), 2);
    }

    #[test]
    fn gauss_and_exp() {
        let g = def("series G\n  indices: n\n  params: a b c\n  num: a|n; b|n\n  den: c|n\n");
        let (n, d) = ratio_factors(&g, 0);
        assert_eq!(n.expand(), ip("(a+m)*(b+m)"));
        assert_eq!(d.expand(), ip("(m+1)*(c+m)"));
        let e = def("series E\n  indices: n\n  params:\n  num:\n  den:\n");
        let (n, d) = ratio_factors(&e, 0);
        assert_eq!(n.expand(), ip("1"));
        assert_eq!(d.expand(), ip("m+1"));
        assert_eq!(horn_order(&e), 1);
    }

    #[test]
    fn negative_suffix_goes_downstairs() {
        let s = def("series B\n  indices: m n\n  params: b\n  num: b|m-n\n  den:\n");
        let (n, d) = ratio_factors(&s, 1);
        assert_eq!(n.expand(), ip("1"));
        assert_eq!(d.expand(), ip("(n+1)*(b+m-n-1)"));
        let (n, d) = ratio_factors(&s, 0);
        assert_eq!(n.expand(), ip("b+m-n"));
        assert_eq!(d.expand(), ip("m+1"));
    }

    #[test]
    fn cancellation_keeps_factorial() {
        let s = def("series K\n  indices: m\n  params: a\n  num: a|m; 1|m\n  den: a|m\n");
        let (n, d) = ratio_factors(&s, 0);
        assert_eq!(n.expand(), ip("m+1"));
        assert_eq!(d.expand(), ip("m+1"));
    }
}
