use std::collections::BTreeMap;

use crate::eval::region::RegionExpr;
use crate::symbolic::{IndexLinearForm, LinFactor, ParamPoly, Sym};

/// What a Pochhammer factor stands for, which decides how shifted series are printed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FactorRole {
    /// Carries the declared parameter of that name.
    Labeled(Sym),
    /// The implicit factorial of index k.
    Factorial(usize),
    Other,
}

/// The factor (param)_{form·idx}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PochFactor {
    pub param: ParamPoly,
    pub form: IndexLinearForm,
    pub role: FactorRole,
}

impl PochFactor {
    pub fn new(param: ParamPoly, form: IndexLinearForm, role: FactorRole) -> Self {
        PochFactor { param, form, role }
    }

    pub fn factorial(k: usize) -> Self {
        PochFactor::new(ParamPoly::one(), IndexLinearForm::unit(k), FactorRole::Factorial(k))
    }

    pub fn is_factorial(&self) -> bool {
        matches!(self.role, FactorRole::Factorial(_))
    }

    /// The linear polynomial param + form·idx.
    pub fn base(&self) -> LinFactor {
        LinFactor::new(self.param.clone(), self.form)
    }
}

/// Parameter values, exact or floating.
pub type ParamBinding<T> = BTreeMap<Sym, T>;

#[derive(Clone, Debug)]
pub struct SeriesDefinition {
    pub name: String,
    pub indices: Vec<String>,
    pub params: Vec<Sym>,
    pub num: Vec<PochFactor>,
    /// Includes one factorial factor per index.
    pub den: Vec<PochFactor>,
    pub region: Option<RegionExpr>,
    pub region_text: Option<String>,
}

impl PartialEq for SeriesDefinition {
    fn eq(&self, o: &Self) -> bool {
        self.name == o.name
            && self.indices == o.indices
            && self.params == o.params
            && self.num == o.num
            && self.den == o.den
            && self.region_text == o.region_text
    }
}

impl SeriesDefinition {
    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&PochFactor, bool)> {
        self.num.iter().map(|f| (f, true)).chain(self.den.iter().map(|f| (f, false)))
    }

    /// Coordinate names in axis order.
    pub fn coord_names(&self) -> &'static [&'static str] {
        &["x", "y", "z"][..self.dim()]
    }

    /// Builds a definition from explicit factors, appending factorials.
    pub fn build(
        name: &str,
        indices: &[&str],
        params: &[&str],
        num: &[(&str, &str)],
        den: &[(&str, &str)],
        region: Option<&str>,
    ) -> crate::error::Result<Self> {
        let mut text = format!("series {name}\n  indices: {}\n  params: {}\n", indices.join(" "), params.join(" "));
        let join = |fs: &[(&str, &str)]| fs.iter().map(|(p, f)| format!("{p}|{f}")).collect::<Vec<_>>().join("; ");
        text.push_str(&format!("  num: {}\n  den: {}\n", join(num), join(den)));
        if let Some(r) = region {
            text.push_str(&format!("  region: {r}\n"));
        }
        let mut v = super::catalog::parse_catalog(&text)?;
        Ok(v.remove(0))
    }

    pub fn has_param(&self, name: &str) -> bool {
        self.params.iter().any(|p| &**p == name)
    }
}
