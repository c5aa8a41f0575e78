use std::collections::BTreeMap;
use std::fmt;

use super::definition::{FactorRole, PochFactor, SeriesDefinition};
use crate::symbolic::{ParamPoly, Sym};

/// Frobenius exponents, one affine expression per axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentTuple(pub Vec<ParamPoly>);

impl ExponentTuple {
    pub fn zero(dim: usize) -> Self {
        ExponentTuple(vec![ParamPoly::zero(); dim])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }

    pub fn neg(&self) -> Self {
        ExponentTuple(self.0.iter().map(|e| e.neg()).collect())
    }

    /// `x^{1-c1} z^{1-c3}`, or `1` for the zero tuple.
    pub fn prefactor(&self) -> String {
        let coords = ["x", "y", "z"];
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(coords)
            .filter(|(e, _)| !e.is_zero())
            .map(|(e, c)| {
                let s = e.display_affine();
                if e.len() == 1 && !s.starts_with('-') {
                    format!("{c}^{s}")
                } else {
                    format!("{c}^({s})")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|e| e.display_affine()).collect();
        write!(f, "({})", v.join(", "))
    }
}

/// Moves every factor (λ, L) to (λ + L·e, L). A labeled denominator factor
/// on a single index that lands on 1 trades parameters with that index's factorial,
/// so the factorial stays (1, e_i).
pub fn shift_series(s: &SeriesDefinition, e: &ExponentTuple) -> SeriesDefinition {
    let mv = |f: &PochFactor| {
        let mut g = f.clone();
        g.param = f.param.add(&f.form.apply(&e.0));
        g
    };
    let num: Vec<PochFactor> = s.num.iter().map(mv).collect();
    let mut den: Vec<PochFactor> = s.den.iter().map(mv).collect();
    for k in 0..s.dim() {
        let Some(fi) = den.iter().position(|f| f.role == FactorRole::Factorial(k)) else { continue };
        if den[fi].param.is_one() {
            continue;
        }
        let unit = crate::symbolic::IndexLinearForm::unit(k);
        let hit = den
            .iter()
            .position(|f| matches!(f.role, FactorRole::Labeled(_)) && f.form == unit && f.param.is_one());
        if let Some(li) = hit {
            let p = den[fi].param.clone();
            den[fi].param = ParamPoly::one();
            den[li].param = p;
        }
    }
    SeriesDefinition {
        name: s.name.clone(),
        indices: s.indices.clone(),
        params: s.params.clone(),
        num,
        den,
        region: s.region.clone(),
        region_text: s.region_text.clone(),
    }
}

/// Parameter list in declared order: each declared parameter is represented by
/// the first factor labeled with it.
pub fn argument_list(s: &SeriesDefinition) -> Vec<ParamPoly> {
    s.params
        .iter()
        .map(|p| {
            s.factors()
                .find(|(f, _)| f.role == FactorRole::Labeled(p.clone()))
                .map(|(f, _)| f.param.clone())
                .unwrap_or_else(|| ParamPoly::symbol(p.clone()))
        })
        .collect()
}

/// Replaces parameter symbols inside every factor.
pub fn substitute_params(s: &SeriesDefinition, map: &BTreeMap<Sym, ParamPoly>) -> SeriesDefinition {
    let mut out = s.clone();
    for f in out.num.iter_mut().chain(out.den.iter_mut()) {
        f.param = f.param.substitute(map);
    }
    out
}

/// Non-factorial content of a definition, used to compare shifted series structurally.
pub fn factor_signature(s: &SeriesDefinition) -> (Vec<(ParamPoly, [i64; 3])>, Vec<(ParamPoly, [i64; 3])>) {
    let key = |fs: &[PochFactor]| fs.iter().map(|f| (f.param.clone(), f.form.0)).collect::<Vec<_>>();
    (key(&s.num), key(&s.den))
}
