//! Tokenizer and polynomial expression parser shared by the catalog, the
//! structured system format and the region grammar.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::param::{sym, ParamPoly};
use super::rational::{parse_rational, RationalNumber};
use super::tripoly::TriPoly;
use crate::error::{HornError, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Num(String),
    Ident(String),
    Op(char),
    Le,
    Ge,
}

pub fn tokenize(src: &str) -> std::result::Result<Vec<Tok>, String> {
    let cs: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || (c == '.' && i + 1 < cs.len() && cs[i + 1].is_ascii_digit()) {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_digit() || cs[i] == '.') {
                i += 1;
            }
            // scientific notation, e.g. 1e-3
            if i < cs.len() && (cs[i] == 'e' || cs[i] == 'E') {
                let mut j = i + 1;
                if j < cs.len() && (cs[j] == '-' || cs[j] == '+') {
                    j += 1;
                }
                if j < cs.len() && cs[j].is_ascii_digit() {
                    while j < cs.len() && cs[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            out.push(Tok::Num(cs[st..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            while i < cs.len() && cs[i] == '\'' {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if c == '<' && i + 1 < cs.len() && cs[i + 1] == '=' {
            out.push(Tok::Le);
            i += 2;
        } else if c == '>' && i + 1 < cs.len() && cs[i + 1] == '=' {
            out.push(Tok::Ge);
            i += 2;
        } else if "+-*/^(),;<>&|".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

/// Polynomial syntax tree: numbers, identifiers, `+ - * /` (division by constants only),
/// `^` with non-negative integer exponents, parentheses and juxtaposition (`2c1`, `x(1-x)`).
#[derive(Clone, Debug)]
enum Ast {
    Num(RationalNumber),
    Var(String),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct P<'a> {
    t: &'a [Tok],
    i: usize,
}

impl P<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.t.get(self.i)
    }

    fn is_op(&self, c: char) -> bool {
        matches!(self.peek(), Some(Tok::Op(o)) if *o == c)
    }

    fn expr(&mut self) -> std::result::Result<Ast, String> {
        let mut lhs = if self.is_op('-') {
            self.i += 1;
            Ast::Neg(Box::new(self.term()?))
        } else {
            if self.is_op('+') {
                self.i += 1;
            }
            self.term()?
        };
        loop {
            if self.is_op('+') {
                self.i += 1;
                lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.is_op('-') {
                self.i += 1;
                lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> std::result::Result<Ast, String> {
        let mut lhs = self.power()?;
        loop {
            if self.is_op('*') {
                self.i += 1;
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.power()?));
            } else if self.is_op('/') {
                self.i += 1;
                lhs = Ast::Div(Box::new(lhs), Box::new(self.power()?));
            } else if matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_))) || self.is_op('(') {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn power(&mut self) -> std::result::Result<Ast, String> {
        let base = self.atom()?;
        if self.is_op('^') {
            self.i += 1;
            let neg = self.is_op('-');
            match self.t.get(self.i) {
                Some(Tok::Num(n)) if !neg => {
                    let e: u32 = n.parse().map_err(|_| format!("bad exponent `{n}`"))?;
                    self.i += 1;
                    return Ok(Ast::Pow(Box::new(base), e));
                }
                _ => return Err("exponent must be a non-negative integer".into()),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> std::result::Result<Ast, String> {
        match self.t.get(self.i).cloned() {
            Some(Tok::Num(n)) => {
                self.i += 1;
                parse_rational(&n).map(Ast::Num).ok_or_else(|| format!("bad number `{n}`"))
            }
            Some(Tok::Ident(s)) => {
                self.i += 1;
                Ok(Ast::Var(s))
            }
            Some(Tok::Op('(')) => {
                self.i += 1;
                let e = self.expr()?;
                if !self.is_op(')') {
                    return Err("missing `)`".into());
                }
                self.i += 1;
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.i += 1;
                Ok(Ast::Neg(Box::new(self.power()?)))
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of expression".into()),
        }
    }
}

fn parse_ast(src: &str) -> std::result::Result<Ast, String> {
    let toks = tokenize(src)?;
    let mut p = P { t: &toks, i: 0 };
    let e = p.expr()?;
    if p.i != toks.len() {
        return Err(format!("trailing input at token {:?}", toks[p.i]));
    }
    Ok(e)
}

fn lower(a: &Ast, coords: &[&str]) -> std::result::Result<TriPoly, String> {
    Ok(match a {
        Ast::Num(r) => TriPoly::constant(ParamPoly::constant(r.clone())),
        Ast::Var(v) => match coords.iter().position(|c| c == v) {
            Some(k) => TriPoly::var(k),
            None => TriPoly::constant(ParamPoly::symbol(sym(v))),
        },
        Ast::Add(x, y) => lower(x, coords)?.add(&lower(y, coords)?),
        Ast::Sub(x, y) => lower(x, coords)?.sub(&lower(y, coords)?),
        Ast::Mul(x, y) => lower(x, coords)?.mul(&lower(y, coords)?),
        Ast::Neg(x) => lower(x, coords)?.neg(),
        Ast::Pow(x, e) => lower(x, coords)?.pow(*e),
        Ast::Div(x, y) => {
            let d = lower(y, coords)?;
            let c = d
                .as_constant()
                .and_then(|p| p.as_constant())
                .ok_or_else(|| "division only by numeric constants".to_string())?;
            if c.is_zero() {
                return Err("division by zero".into());
            }
            lower(x, coords)?.scale(&ParamPoly::constant(RationalNumber::from_integer(BigInt::from(1)) / c))
        }
    })
}

/// Parses a polynomial whose identifiers listed in `coords` become the three
/// variables (in order) and every other identifier a parameter symbol.
pub fn parse_tripoly(src: &str, coords: &[&str]) -> Result<TriPoly> {
    let ast = parse_ast(src).map_err(|m| HornError::syntax(0, m))?;
    lower(&ast, coords).map_err(|m| HornError::syntax(0, m))
}

pub fn parse_param_poly(src: &str) -> Result<ParamPoly> {
    let t = parse_tripoly(src, &[])?;
    Ok(t.as_constant().unwrap_or_default())
}

/// Small helper for exponents in the reference formats, e.g. `2`.
pub fn parse_u32(s: &str) -> Option<u32> {
    s.parse::<BigInt>().ok()?.to_u32()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens() {
        let t = tokenize("x(1-x) <= beta'*2e-3").unwrap();
        assert_eq!(t[0], Tok::Ident("x".into()));
        assert!(t.contains(&Tok::Le));
        assert!(t.contains(&Tok::Ident("beta'".into())));
        assert!(t.contains(&Tok::Num("2e-3".into())));
    }

    #[test]
    fn juxtaposition_and_division() {
        let a = parse_param_poly("2c1 - (a+b)/2").unwrap();
        let b = parse_param_poly("2*c1 - a/2 - b/2").unwrap();
        assert_eq!(a, b);
        assert!(parse_param_poly("a/b").is_err());
        assert!(parse_param_poly("a^-1").is_err());
    }

    #[test]
    fn coordinates_split_from_params() {
        let t = parse_tripoly("x(1-x)", &["x", "y", "z"]).unwrap();
        let u = parse_tripoly("x - x^2", &["x", "y", "z"]).unwrap();
        assert_eq!(t, u);
        let v = parse_tripoly("c-(a+b+1)x", &["x"]).unwrap();
        assert_eq!(v.coeff([0, 0, 0]), parse_param_poly("c").unwrap());
        assert_eq!(v.coeff([1, 0, 0]), parse_param_poly("-a-b-1").unwrap());
    }
}
