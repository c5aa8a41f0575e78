use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, rat_int, RationalNumber};

use crate::error::{HornError, Result};

/// Parameter symbol name.
pub type Sym = Arc<str>;

pub fn sym(name: &str) -> Sym {
    Arc::from(name)
}

/// Power product of parameter symbols, stored sorted by name.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Sym, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: Sym) -> Self {
        Monomial(vec![(s, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Sym, u32)] {
        &self.0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut out: Vec<(Sym, u32)> = Vec::with_capacity(self.0.len() + o.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < o.0.len() {
            if j >= o.0.len() || (i < self.0.len() && self.0[i].0 < o.0[j].0) {
                out.push(self.0[i].clone());
                i += 1;
            } else if i >= self.0.len() || o.0[j].0 < self.0[i].0 {
                out.push(o.0[j].clone());
                j += 1;
            } else {
                out.push((self.0[i].0.clone(), self.0[i].1 + o.0[j].1));
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    fn render(&self) -> String {
        self.0
            .iter()
            .map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Polynomial in the parameter symbols with exact rational coefficients.
/// Terms are kept in total-degree-then-lex order and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, RationalNumber>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(RationalNumber::one())
    }

    pub fn constant(c: RationalNumber) -> Self {
        let mut p = ParamPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn int(v: i64) -> Self {
        Self::constant(rat_int(v))
    }

    pub fn var(name: &str) -> Self {
        Self::symbol(sym(name))
    }

    pub fn symbol(s: Sym) -> Self {
        let mut p = ParamPoly::zero();
        p.add_term(Monomial::var(s), RationalNumber::one());
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: RationalNumber) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(RationalNumber::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RationalNumber)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value when the polynomial has no symbols.
    pub fn as_constant(&self) -> Option<RationalNumber> {
        match self.terms.len() {
            0 => Some(RationalNumber::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn constant_term(&self) -> RationalNumber {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(RationalNumber::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn is_affine(&self) -> bool {
        self.degree() <= 1
    }

    pub fn symbols(&self) -> BTreeSet<Sym> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(s, _)| s.clone()))
            .collect()
    }

    /// Coefficient of a single symbol in an affine polynomial.
    pub fn linear_coeff(&self, s: &Sym) -> RationalNumber {
        self.terms
            .get(&Monomial::var(s.clone()))
            .cloned()
            .unwrap_or_else(RationalNumber::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &RationalNumber)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, o: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, o: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, r: &RationalNumber) -> ParamPoly {
        if r.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    pub fn add_const(&self, r: &RationalNumber) -> ParamPoly {
        let mut out = self.clone();
        out.add_term(Monomial::one(), r.clone());
        out
    }

    pub fn pow(&self, e: u32) -> ParamPoly {
        let mut acc = ParamPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replaces symbols by polynomials; symbols missing from `map` stay.
    pub fn substitute(&self, map: &BTreeMap<Sym, ParamPoly>) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let mut t = ParamPoly::constant(c.clone());
            for (s, e) in &m.0 {
                let base = map.get(s).cloned().unwrap_or_else(|| ParamPoly::symbol(s.clone()));
                t = t.mul(&base.pow(*e));
            }
            out = out.add(&t);
        }
        out
    }

    pub fn eval<T: super::scalar::Scalar>(&self, binding: &BTreeMap<Sym, T>) -> Result<T> {
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = T::from_rational(c);
            for (s, e) in &m.0 {
                let v = binding.get(s).ok_or_else(|| HornError::Unbound(s.to_string()))?;
                t = t.mul(&v.pow_u32(*e));
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Exact division by a nonzero rational constant.
    pub fn div_const(&self, r: &RationalNumber) -> ParamPoly {
        self.scale(&(RationalNumber::one() / r))
    }

    /// Sign of the leading term in canonical order (0 for the zero polynomial).
    pub fn leading_sign(&self) -> i32 {
        match self.leading() {
            None => 0,
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    /// Terms printed highest degree first, constant last.
    fn ordered_terms(&self) -> Vec<(&Monomial, &RationalNumber)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0 .0.cmp(&b.0 .0)));
        v
    }

    /// Writes `1-c1+a1` style: constant, then negative terms, then positive terms.
    pub fn display_affine(&self) -> String {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(m, c)| (!m.is_one(), !c.is_negative()));
        render_terms(&v)
    }
}

fn render_terms(v: &[(&Monomial, &RationalNumber)]) -> String {
    if v.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, (m, c)) in v.iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push(if neg { '-' } else { '+' });
        }
        if m.is_one() {
            s.push_str(&fmt_rational(&a));
        } else if a.is_one() {
            s.push_str(&m.render());
        } else {
            s.push_str(&fmt_rational(&a));
            s.push('*');
            s.push_str(&m.render());
        }
    }
    s
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(&self.ordered_terms()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rational::rat;

    fn p(s: &str) -> ParamPoly {
        crate::symbolic::expr::parse_param_poly(s).unwrap()
    }

    #[test]
    fn canonical_independent_of_order() {
        let a = p("a1").add(&p("c")).add(&p("2"));
        let b = p("2").add(&p("c")).add(&p("a1"));
        assert_eq!(a, b);
        assert_eq!(a.to_string(), b.to_string());
        assert_eq!(a.to_string(), "a1+c+2");
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = p("a*b").sub(&p("b*a"));
        assert!(a.is_zero());
        assert_eq!(a.to_string(), "0");
    }

    #[test]
    fn products_and_powers() {
        let a = p("a+1").pow(2);
        assert_eq!(a, p("a^2+2*a+1"));
        assert_eq!(a.degree(), 2);
        assert_eq!(p("(a+b)*(a-b)"), p("a^2-b^2"));
    }

    #[test]
    fn affine_display_puts_constant_first() {
        assert_eq!(p("a1-c1+1").display_affine(), "1-c1+a1");
        assert_eq!(p("a1-c1-c2+2").display_affine(), "2-c1-c2+a1");
        assert_eq!(p("a1").display_affine(), "a1");
    }

    #[test]
    fn substitute_and_eval() {
        let mut m = BTreeMap::new();
        m.insert(sym("a"), p("1-c+a"));
        assert_eq!(p("a*b").substitute(&m), p("b-b*c+a*b"));
        let mut b = BTreeMap::new();
        b.insert(sym("a"), rat(1, 2));
        b.insert(sym("b"), rat(3, 1));
        assert_eq!(p("a*b+a").eval(&b).unwrap(), rat(2, 1));
        assert!(p("q").eval(&b).is_err());
    }
}
