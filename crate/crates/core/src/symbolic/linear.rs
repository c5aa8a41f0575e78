use std::fmt;

use num_traits::{One, Signed};

use super::param::ParamPoly;
use super::rational::{rat_int, RationalNumber};
use super::tripoly::{IndexPoly, TriPoly};

/// Integer combination of the summation indices, e.g. `2p-m-n` is `[-1, -1, 2]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct IndexLinearForm(pub [i64; 3]);

impl IndexLinearForm {
    pub fn unit(k: usize) -> Self {
        let mut c = [0; 3];
        c[k] = 1;
        IndexLinearForm(c)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0[k]
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    pub fn neg(&self) -> Self {
        IndexLinearForm([-self.0[0], -self.0[1], -self.0[2]])
    }

    /// Number of indices with a nonzero coefficient.
    pub fn support(&self) -> usize {
        self.0.iter().filter(|c| **c != 0).count()
    }

    pub fn dot(&self, idx: &[i64; 3]) -> i64 {
        self.0[0] * idx[0] + self.0[1] * idx[1] + self.0[2] * idx[2]
    }

    /// Applies the form to a vector of parameter polynomials.
    pub fn apply(&self, v: &[ParamPoly]) -> ParamPoly {
        let mut acc = ParamPoly::zero();
        for (k, e) in v.iter().enumerate().take(3) {
            if self.0[k] != 0 {
                acc = acc.add(&e.scale(&rat_int(self.0[k])));
            }
        }
        acc
    }

    /// Parses `m+n`, `2p-m-n`, `n`, `0` over the given index names.
    pub fn parse(text: &str, names: &[String]) -> Result<Self, String> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err("empty linear form".into());
        }
        let mut out = [0i64; 3];
        let cs: Vec<char> = t.chars().collect();
        let mut i = 0;
        while i < cs.len() {
            let mut sign = 1;
            if cs[i] == '+' || cs[i] == '-' {
                if cs[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(format!("expected sign in `{text}`"));
            }
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let k: i64 = if i > st {
                cs[st..i].iter().collect::<String>().parse().map_err(|_| "bad integer".to_string())?
            } else {
                1
            };
            if i < cs.len() && cs[i] == '*' {
                i += 1;
            }
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_' || cs[i] == '\'') {
                i += 1;
            }
            let id: String = cs[st..i].iter().collect();
            if id.is_empty() {
                if k == 0 && i == cs.len() {
                    continue;
                }
                return Err(format!("missing index name in `{text}`"));
            }
            let pos = names
                .iter()
                .position(|n| *n == id)
                .ok_or_else(|| format!("`{id}` is not a declared index"))?;
            out[pos] += sign * k;
        }
        Ok(IndexLinearForm(out))
    }

    pub fn render(&self, names: &[String]) -> String {
        let mut s = String::new();
        for (k, name) in names.iter().enumerate().take(3) {
            let c = self.0[k];
            if c == 0 {
                continue;
            }
            if c < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if c.abs() != 1 {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(name);
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }
}

/// The linear polynomial `constant + form·(m,n,p)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinFactor {
    pub constant: ParamPoly,
    pub form: IndexLinearForm,
}

impl LinFactor {
    pub fn new(constant: ParamPoly, form: IndexLinearForm) -> Self {
        LinFactor { constant, form }
    }

    pub fn expand(&self) -> IndexPoly {
        let mut t = TriPoly::constant(self.constant.clone());
        for k in 0..3 {
            if self.form.0[k] != 0 {
                t = t.add(&TriPoly::var(k).scale_rational(&rat_int(self.form.0[k])));
            }
        }
        t
    }

    pub fn add_const(&self, r: &RationalNumber) -> Self {
        LinFactor::new(self.constant.add_const(r), self.form)
    }

    pub fn neg(&self) -> Self {
        LinFactor::new(self.constant.neg(), self.form.neg())
    }

    /// Orients the factor so its first nonzero index coefficient is positive
    /// (or, for a constant factor, so its leading term is positive). Returns the sign used.
    pub fn normalized(&self) -> (LinFactor, i32) {
        let first = self.form.0.iter().find(|c| **c != 0).copied();
        let neg = match first {
            Some(c) => c < 0,
            None => self.constant.leading_sign() < 0,
        };
        if neg {
            (self.neg(), -1)
        } else {
            (self.clone(), 1)
        }
    }

    pub fn is_constant(&self) -> bool {
        self.form.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.form.is_zero() && self.constant.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.form.is_zero() {
            return self.constant.display_affine();
        }
        let c = self.constant.display_affine();
        let f = self.form.render(names);
        if self.constant.is_zero() {
            f
        } else if f.starts_with('-') {
            format!("{c}{f}")
        } else {
            format!("{c}+{f}")
        }
    }
}

impl fmt::Display for LinFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = ["m", "n", "p"].iter().map(|s| s.to_string()).collect();
        f.write_str(&self.render(&names))
    }
}

pub fn constant_sign(r: &RationalNumber) -> i32 {
    if r.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::expr::{parse_param_poly, parse_tripoly};

    fn names() -> Vec<String> {
        vec!["m".into(), "n".into(), "p".into()]
    }

    #[test]
    fn parse_and_render_forms() {
        let f = IndexLinearForm::parse("2p-m-n", &names()).unwrap();
        assert_eq!(f, IndexLinearForm([-1, -1, 2]));
        assert_eq!(f.render(&names()), "-m-n+2p");
        assert_eq!(IndexLinearForm::parse("m+n", &names()).unwrap(), IndexLinearForm([1, 1, 0]));
        assert!(IndexLinearForm::parse("m+q", &names()).is_err());
        assert!(IndexLinearForm::parse("m n", &names()).is_err());
    }

    #[test]
    fn expand_and_normalize() {
        let f = LinFactor::new(parse_param_poly("b-1").unwrap(), IndexLinearForm([-1, 1, 0]));
        assert_eq!(f.expand(), parse_tripoly("b-1-m+n", &["m", "n", "p"]).unwrap());
        let (g, s) = f.normalized();
        assert_eq!(s, -1);
        assert_eq!(g.form, IndexLinearForm([1, -1, 0]));
        assert_eq!(g.render(&names()), "1-b+m-n");
    }
}
