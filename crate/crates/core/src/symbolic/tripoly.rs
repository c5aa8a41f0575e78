use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use super::param::{ParamPoly, Sym};
use super::rational::RationalNumber;

use crate::error::Result;

pub type Exp3 = [u32; 3];

/// Polynomial in up to three variables with parameter-polynomial coefficients.
///
/// The same shape serves as an index polynomial (variables m, n, p), an Euler
/// polynomial (variables δx, δy, δz) and a coordinate polynomial (x, y, z).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TriPoly {
    terms: BTreeMap<Exp3, ParamPoly>,
}

pub type IndexPoly = TriPoly;
pub type EulerPoly = TriPoly;
pub type CoordPoly = TriPoly;

pub fn exp_degree(e: &Exp3) -> u32 {
    e[0] + e[1] + e[2]
}

/// Ascending total degree, then by exponent of x, y, z descending (x before y before z).
pub fn graded_order(a: &Exp3, b: &Exp3) -> std::cmp::Ordering {
    exp_degree(a).cmp(&exp_degree(b)).then_with(|| b.cmp(a))
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(ParamPoly::one())
    }

    pub fn constant(c: ParamPoly) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    pub fn monomial(e: Exp3, c: ParamPoly) -> Self {
        let mut t = TriPoly::zero();
        t.add_term(e, c);
        t
    }

    pub fn var(k: usize) -> Self {
        let mut e = [0; 3];
        e[k] = 1;
        Self::monomial(e, ParamPoly::one())
    }

    pub fn add_term(&mut self, e: Exp3, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp3, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exp3) -> ParamPoly {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(exp_degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, k: usize) -> u32 {
        self.terms.keys().map(|e| e[k]).max().unwrap_or(0)
    }

    pub fn as_constant(&self) -> Option<ParamPoly> {
        match self.terms.len() {
            0 => Some(ParamPoly::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, o: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &TriPoly) -> TriPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> TriPoly {
        TriPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn mul(&self, o: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (e, v) in &self.terms {
            out.add_term(*e, v.mul(c));
        }
        out
    }

    pub fn scale_rational(&self, r: &RationalNumber) -> TriPoly {
        if r.is_zero() {
            return TriPoly::zero();
        }
        TriPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.scale(r))).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> TriPoly {
        let mut acc = TriPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by a monomial in the variables.
    pub fn shift_exp(&self, by: Exp3) -> TriPoly {
        TriPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] + by[0], e[1] + by[1], e[2] + by[2]], c.clone()))
                .collect(),
        }
    }

    /// Exact division by the k-th variable; `None` if some term lacks it.
    pub fn div_var(&self, k: usize) -> Option<TriPoly> {
        let mut out = TriPoly::zero();
        for (e, c) in &self.terms {
            if e[k] == 0 {
                return None;
            }
            let mut f = *e;
            f[k] -= 1;
            out.terms.insert(f, c.clone());
        }
        Some(out)
    }

    /// Replaces each variable v_k by v_k + shift[k].
    pub fn shift(&self, shift: &[ParamPoly; 3]) -> TriPoly {
        let lin: Vec<TriPoly> = (0..3)
            .map(|k| TriPoly::var(k).add(&TriPoly::constant(shift[k].clone())))
            .collect();
        let mut out = TriPoly::zero();
        for (e, c) in &self.terms {
            let mut t = TriPoly::constant(c.clone());
            for k in 0..3 {
                if e[k] > 0 {
                    t = t.mul(&lin[k].pow(e[k]));
                }
            }
            out = out.add(&t);
        }
        out
    }

    pub fn substitute_params(&self, map: &BTreeMap<Sym, ParamPoly>) -> TriPoly {
        let mut out = TriPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c.substitute(map));
        }
        out
    }

    pub fn eval<T: super::scalar::Scalar>(&self, vars: &[T; 3], binding: &BTreeMap<Sym, T>) -> Result<T> {
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut t = c.eval(binding)?;
            for k in 0..3 {
                if e[k] > 0 {
                    t = t.mul(&vars[k].pow_u32(e[k]));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Evaluates only the parameters, leaving a map from exponent to value.
    pub fn eval_params<T: super::scalar::Scalar>(&self, binding: &BTreeMap<Sym, T>) -> Result<Vec<(Exp3, T)>> {
        self.terms.iter().map(|(e, c)| Ok((*e, c.eval(binding)?))).collect()
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_gcd(&self) -> Exp3 {
        let mut g = [u32::MAX; 3];
        for e in self.terms.keys() {
            for k in 0..3 {
                g[k] = g[k].min(e[k]);
            }
        }
        if self.terms.is_empty() {
            [0; 3]
        } else {
            g
        }
    }

    /// Divides by a monomial that divides every term.
    pub fn div_monomial(&self, g: Exp3) -> TriPoly {
        TriPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] - g[0], e[1] - g[1], e[2] - g[2]], c.clone()))
                .collect(),
        }
    }

    /// Terms sorted by ascending total degree.
    pub fn graded_terms(&self) -> Vec<(&Exp3, &ParamPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| graded_order(a.0, b.0));
        v
    }

    /// Renders as an expanded sum over `names`, e.g. `c - a*x - b*x - x`.
    pub fn to_expanded_string(&self, names: &[&str]) -> String {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (e, c) in self.graded_terms() {
            let mono = mono_string(e, names, "*");
            let mut pt: Vec<_> = c.terms().collect();
            pt.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
            for (m, r) in pt {
                let neg = r.is_negative();
                let mut body = ParamPoly::zero();
                body.add_term(m.clone(), r.abs());
                let bs = body.to_string();
                let s = match (bs.as_str(), mono.is_empty()) {
                    (_, true) => bs,
                    ("1", false) => mono.clone(),
                    _ => format!("{bs}*{mono}"),
                };
                parts.push((neg, s));
            }
        }
        join_signed(&parts)
    }
}

pub(crate) fn join_signed(parts: &[(bool, String)]) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, s)) in parts.iter().enumerate() {
        if i == 0 {
            if *neg {
                out.push('-');
            }
        } else {
            out.push_str(if *neg { " - " } else { " + " });
        }
        out.push_str(s);
    }
    out
}

pub fn mono_string(e: &Exp3, names: &[&str], sep: &str) -> String {
    let mut v = Vec::new();
    for (k, name) in names.iter().enumerate().take(3) {
        match e[k] {
            0 => {}
            1 => v.push(name.to_string()),
            d => v.push(format!("{name}^{d}")),
        }
    }
    v.join(sep)
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expanded_string(&["m", "n", "p"]))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &IndexPoly, b: &IndexPoly, op: PolyOp) -> IndexPoly {
    match op {
        PolyOp::Add => a.add(b),
        PolyOp::Sub => a.sub(b),
        PolyOp::Mul => a.mul(b),
    }
}

pub fn poly_shift(p: &IndexPoly, shift: &[ParamPoly; 3]) -> IndexPoly {
    p.shift(shift)
}
