//! Region-of-convergence expressions over (r, s, t) = (|x|, |y|, |z|).

use std::fmt;

use super::aux::{aux_function, AuxKind};
use crate::symbolic::expr::{tokenize, Tok};

/// Distance from a comparison boundary treated as undecidable.
pub const BOUNDARY_TOL: f64 = 1e-12;
/// Bisection stops once the bracket is this narrow.
pub const ROOT_TOL: f64 = 1e-12;
/// Grid used to locate sign changes for `smaller` / `greater`.
pub const ROOT_SCAN_POINTS: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSelector {
    Only,
    Smaller,
    Greater,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmpOp {
    Lt,
    Le,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RegionExpr {
    Const(f64),
    Var(usize),
    Add(Box<RegionExpr>, Box<RegionExpr>),
    Sub(Box<RegionExpr>, Box<RegionExpr>),
    Mul(Box<RegionExpr>, Box<RegionExpr>),
    Div(Box<RegionExpr>, Box<RegionExpr>),
    Pow(Box<RegionExpr>, Box<RegionExpr>),
    Neg(Box<RegionExpr>),
    Sqrt(Box<RegionExpr>),
    Min(Vec<RegionExpr>),
    Max(Vec<RegionExpr>),
    Aux(AuxKind, Box<RegionExpr>),
    Root {
        coeffs: Vec<RegionExpr>,
        lo: Box<RegionExpr>,
        hi: Box<RegionExpr>,
        selector: RootSelector,
    },
    Cmp(CmpOp, Box<RegionExpr>, Box<RegionExpr>),
    And(Box<RegionExpr>, Box<RegionExpr>),
    Or(Box<RegionExpr>, Box<RegionExpr>),
    True,
}

/// Kleene three-valued truth.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionStatus {
    Inside,
    Outside,
    Unknown,
}

impl RegionStatus {
    fn and(self, o: RegionStatus) -> RegionStatus {
        use RegionStatus::*;
        match (self, o) {
            (Outside, _) | (_, Outside) => Outside,
            (Inside, Inside) => Inside,
            _ => Unknown,
        }
    }

    fn or(self, o: RegionStatus) -> RegionStatus {
        use RegionStatus::*;
        match (self, o) {
            (Inside, _) | (_, Inside) => Inside,
            (Outside, Outside) => Outside,
            _ => Unknown,
        }
    }
}

impl fmt::Display for RegionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegionStatus::Inside => "inside",
            RegionStatus::Outside => "outside",
            RegionStatus::Unknown => "unknown",
        })
    }
}

impl RegionExpr {
    fn is_bool(&self) -> bool {
        matches!(self, RegionExpr::Cmp(..) | RegionExpr::And(..) | RegionExpr::Or(..) | RegionExpr::True)
    }

    pub fn eval_num(&self, v: &[f64; 3]) -> Result<f64, String> {
        use RegionExpr::*;
        Ok(match self {
            Const(c) => *c,
            Var(k) => v[*k],
            Add(a, b) => a.eval_num(v)? + b.eval_num(v)?,
            Sub(a, b) => a.eval_num(v)? - b.eval_num(v)?,
            Mul(a, b) => a.eval_num(v)? * b.eval_num(v)?,
            Div(a, b) => {
                let d = b.eval_num(v)?;
                if d == 0.0 {
                    return Err("division by zero".into());
                }
                a.eval_num(v)? / d
            }
            Pow(a, b) => a.eval_num(v)?.powf(b.eval_num(v)?),
            Neg(a) => -a.eval_num(v)?,
            Sqrt(a) => {
                let x = a.eval_num(v)?;
                if x < 0.0 {
                    return Err(format!("sqrt of negative value {x}"));
                }
                x.sqrt()
            }
            Min(xs) => xs.iter().map(|x| x.eval_num(v)).collect::<Result<Vec<_>, _>>()?.into_iter().fold(f64::INFINITY, f64::min),
            Max(xs) => xs.iter().map(|x| x.eval_num(v)).collect::<Result<Vec<_>, _>>()?.into_iter().fold(f64::NEG_INFINITY, f64::max),
            Aux(k, a) => aux_function(*k, a.eval_num(v)?).map_err(|e| e.to_string())?,
            Root { coeffs, lo, hi, selector } => {
                let c: Vec<f64> = coeffs.iter().map(|x| x.eval_num(v)).collect::<Result<_, _>>()?;
                find_root(&c, lo.eval_num(v)?, hi.eval_num(v)?, *selector)?
            }
            Cmp(..) | And(..) | Or(..) | True => return Err("boolean used as a number".into()),
        })
    }

    /// Three-valued evaluation; undecidable sub-results push a diagnostic.
    pub fn eval_status(&self, v: &[f64; 3], diag: &mut Vec<String>) -> RegionStatus {
        use RegionExpr::*;
        match self {
            True => RegionStatus::Inside,
            And(a, b) => a.eval_status(v, diag).and(b.eval_status(v, diag)),
            Or(a, b) => a.eval_status(v, diag).or(b.eval_status(v, diag)),
            Cmp(_, a, b) => {
                let (x, y) = match (a.eval_num(v), b.eval_num(v)) {
                    (Ok(x), Ok(y)) => (x, y),
                    (Err(e), _) | (_, Err(e)) => {
                        diag.push(e);
                        return RegionStatus::Unknown;
                    }
                };
                let d = y - x;
                if d.is_nan() {
                    diag.push("comparison of NaN".into());
                    RegionStatus::Unknown
                } else if d.abs() <= BOUNDARY_TOL {
                    diag.push(format!("on the boundary: {x} vs {y}"));
                    RegionStatus::Unknown
                } else if d > 0.0 {
                    RegionStatus::Inside
                } else {
                    RegionStatus::Outside
                }
            }
            _ => {
                diag.push("region is not a condition".into());
                RegionStatus::Unknown
            }
        }
    }

    /// True if the expression contains a `root(...)` node.
    pub fn has_root(&self) -> bool {
        use RegionExpr::*;
        match self {
            Root { .. } => true,
            Const(_) | Var(_) | True => false,
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) | Pow(a, b) | Cmp(_, a, b) | And(a, b) | Or(a, b) => {
                a.has_root() || b.has_root()
            }
            Neg(a) | Sqrt(a) | Aux(_, a) => a.has_root(),
            Min(xs) | Max(xs) => xs.iter().any(|x| x.has_root()),
        }
    }
}

fn poly_at(c: &[f64], w: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, k| acc * w + k)
}

fn bisect(c: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = poly_at(c, lo);
    while hi - lo > ROOT_TOL {
        let mid = 0.5 * (lo + hi);
        let fm = poly_at(c, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Root of Σ c_i w^i on [lo, hi] chosen by `sel`.
pub fn find_root(c: &[f64], lo: f64, hi: f64, sel: RootSelector) -> Result<f64, String> {
    if !(lo < hi) {
        return Err(format!("root bracket [{lo}, {hi}] is empty"));
    }
    match sel {
        RootSelector::Only => {
            let (a, b) = (poly_at(c, lo), poly_at(c, hi));
            if a == 0.0 {
                return Ok(lo);
            }
            if b == 0.0 {
                return Ok(hi);
            }
            if (a < 0.0) == (b < 0.0) {
                return Err(format!("root bracket [{lo}, {hi}] has no sign change"));
            }
            Ok(bisect(c, lo, hi))
        }
        RootSelector::Smaller | RootSelector::Greater => {
            let step = (hi - lo) / ROOT_SCAN_POINTS as f64;
            let mut changes = Vec::new();
            let mut prev = poly_at(c, lo);
            for i in 1..=ROOT_SCAN_POINTS {
                let w = if i == ROOT_SCAN_POINTS { hi } else { lo + step * i as f64 };
                let f = poly_at(c, w);
                if prev == 0.0 {
                    changes.push((w - step, w - step));
                } else if f != 0.0 && (f < 0.0) != (prev < 0.0) {
                    changes.push((w - step, w));
                }
                prev = f;
            }
            if prev == 0.0 {
                changes.push((hi, hi));
            }
            let pick = if sel == RootSelector::Smaller { changes.first() } else { changes.last() };
            match pick {
                Some((a, b)) if a == b => Ok(*a),
                Some((a, b)) => Ok(bisect(c, *a, *b)),
                None => Err(format!("no root found on [{lo}, {hi}]")),
            }
        }
    }
}

struct Parser<'a> {
    t: &'a [Tok],
    i: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.t.get(self.i)
    }

    fn is_op(&self, c: char) -> bool {
        matches!(self.peek(), Some(Tok::Op(o)) if *o == c)
    }

    fn expect(&mut self, c: char) -> Result<(), String> {
        if self.is_op(c) {
            self.i += 1;
            Ok(())
        } else {
            Err(format!("expected `{c}`"))
        }
    }

    fn or(&mut self) -> Result<RegionExpr, String> {
        let mut lhs = self.and()?;
        while self.is_op('|') {
            self.i += 1;
            lhs = RegionExpr::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<RegionExpr, String> {
        let mut lhs = self.cmp()?;
        while self.is_op('&') {
            self.i += 1;
            lhs = RegionExpr::And(Box::new(lhs), Box::new(self.cmp()?));
        }
        Ok(lhs)
    }

    fn cmp(&mut self) -> Result<RegionExpr, String> {
        let lhs = self.sum()?;
        let op = match self.peek() {
            Some(Tok::Op('<')) => Some((CmpOp::Lt, false)),
            Some(Tok::Le) => Some((CmpOp::Le, false)),
            Some(Tok::Op('>')) => Some((CmpOp::Lt, true)),
            Some(Tok::Ge) => Some((CmpOp::Le, true)),
            _ => None,
        };
        let Some((op, swap)) = op else { return Ok(lhs) };
        self.i += 1;
        let rhs = self.sum()?;
        if lhs.is_bool() || rhs.is_bool() {
            return Err("comparison between conditions".into());
        }
        Ok(if swap {
            RegionExpr::Cmp(op, Box::new(rhs), Box::new(lhs))
        } else {
            RegionExpr::Cmp(op, Box::new(lhs), Box::new(rhs))
        })
    }

    fn sum(&mut self) -> Result<RegionExpr, String> {
        let mut lhs = if self.is_op('-') {
            self.i += 1;
            RegionExpr::Neg(Box::new(self.product()?))
        } else {
            self.product()?
        };
        loop {
            if self.is_op('+') {
                self.i += 1;
                lhs = RegionExpr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.is_op('-') {
                self.i += 1;
                lhs = RegionExpr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<RegionExpr, String> {
        let mut lhs = self.power()?;
        loop {
            if self.is_op('*') {
                self.i += 1;
                lhs = RegionExpr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else if self.is_op('/') {
                self.i += 1;
                lhs = RegionExpr::Div(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn power(&mut self) -> Result<RegionExpr, String> {
        let base = self.atom()?;
        if self.is_op('^') {
            self.i += 1;
            let e = if self.is_op('-') {
                self.i += 1;
                RegionExpr::Neg(Box::new(self.atom()?))
            } else {
                self.atom()?
            };
            return Ok(RegionExpr::Pow(Box::new(base), Box::new(e)));
        }
        Ok(base)
    }

    fn args(&mut self) -> Result<Vec<RegionExpr>, String> {
        self.expect('(')?;
        let mut v = vec![self.sum()?];
        while self.is_op(',') {
            self.i += 1;
            v.push(self.sum()?);
        }
        self.expect(')')?;
        Ok(v)
    }

    fn atom(&mut self) -> Result<RegionExpr, String> {
        let tok = self.peek().cloned().ok_or("unexpected end of region")?;
        self.i += 1;
        match tok {
            Tok::Num(n) => n.parse::<f64>().map(RegionExpr::Const).map_err(|_| format!("bad number `{n}`")),
            Tok::Op('(') => {
                let e = self.or()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Op('-') => Ok(RegionExpr::Neg(Box::new(self.power()?))),
            Tok::Ident(id) => match id.as_str() {
                "r" => Ok(RegionExpr::Var(0)),
                "s" => Ok(RegionExpr::Var(1)),
                "t" => Ok(RegionExpr::Var(2)),
                "true" => Ok(RegionExpr::True),
                "inf" => Ok(RegionExpr::Const(f64::INFINITY)),
                "sqrt" => {
                    let mut a = self.args()?;
                    if a.len() != 1 {
                        return Err("sqrt takes one argument".into());
                    }
                    Ok(RegionExpr::Sqrt(Box::new(a.remove(0))))
                }
                "min" => Ok(RegionExpr::Min(self.args()?)),
                "max" => Ok(RegionExpr::Max(self.args()?)),
                "root" => self.root(),
                other => match AuxKind::from_name(other) {
                    Some(k) => {
                        let mut a = self.args()?;
                        if a.len() != 1 {
                            return Err(format!("{other} takes one argument"));
                        }
                        Ok(RegionExpr::Aux(k, Box::new(a.remove(0))))
                    }
                    None => Err(format!("unknown name `{other}` in region")),
                },
            },
            t => Err(format!("unexpected token {t:?} in region")),
        }
    }

    fn root(&mut self) -> Result<RegionExpr, String> {
        self.expect('(')?;
        let mut coeffs = vec![self.sum()?];
        while self.is_op(',') {
            self.i += 1;
            coeffs.push(self.sum()?);
        }
        self.expect(';')?;
        let lo = self.sum()?;
        self.expect(',')?;
        let hi = self.sum()?;
        self.expect(';')?;
        let selector = match self.peek() {
            Some(Tok::Ident(s)) if s == "only" => RootSelector::Only,
            Some(Tok::Ident(s)) if s == "smaller" => RootSelector::Smaller,
            Some(Tok::Ident(s)) if s == "greater" => RootSelector::Greater,
            _ => return Err("root selector must be only, smaller or greater".into()),
        };
        self.i += 1;
        self.expect(')')?;
        Ok(RegionExpr::Root {
            coeffs,
            lo: Box::new(lo),
            hi: Box::new(hi),
            selector,
        })
    }
}

pub fn parse_region(text: &str) -> Result<RegionExpr, String> {
    let toks = tokenize(text)?;
    let mut p = Parser { t: &toks, i: 0 };
    let e = p.or()?;
    if p.i != toks.len() {
        return Err(format!("trailing input in region at token {:?}", toks[p.i]));
    }
    if !e.is_bool() {
        return Err("region must be a condition".into());
    }
    Ok(e)
}

/// Evaluates a region at absolute coordinates; returns the status and any diagnostics.
pub fn region_status(expr: &RegionExpr, point: &[f64]) -> (RegionStatus, Vec<String>) {
    let mut v = [0.0; 3];
    for (k, x) in point.iter().enumerate().take(3) {
        v[k] = x.abs();
    }
    let mut diag = Vec::new();
    let st = expr.eval_status(&v, &mut diag);
    (st, diag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(src: &str, p: &[f64]) -> RegionStatus {
        region_status(&parse_region(src).unwrap(), p).0
    }

    #[test]
    fn simple_regions() {
        let f10a = "r < 1 & t < 1 & s < (1-r)*(1-t)";
        assert_eq!(check(f10a, &[0.5, 0.2, 0.3]), RegionStatus::Inside);
        assert_eq!(check(f10a, &[0.5, 0.4, 0.3]), RegionStatus::Outside);
        assert_eq!(check("r < 1", &[-0.5]), RegionStatus::Inside);
        assert_eq!(check("r < 1", &[1.0]), RegionStatus::Unknown);
        assert_eq!(check("true", &[9.0]), RegionStatus::Inside);
        assert_eq!(check("r > 2 | s >= 1", &[0.1, 0.5]), RegionStatus::Outside);
        let f14a = "r + s + t + 2*sqrt(r*s*t) < 1";
        assert_eq!(check(f14a, &[0.1, 0.1, 0.1]), RegionStatus::Inside);
    }

    #[test]
    fn kleene_logic() {
        assert_eq!(check("r < 1 & s < 1", &[1.0, 5.0]), RegionStatus::Outside);
        assert_eq!(check("r < 1 | s < 1", &[1.0, 0.5]), RegionStatus::Inside);
        assert_eq!(check("r < 1 | s < 1", &[1.0, 2.0]), RegionStatus::Unknown);
        assert_eq!(check("phi2(r) < 1", &[0.0]), RegionStatus::Unknown);
    }

    #[test]
    fn roots() {
        // w^2 - 2 on [0, 2]
        let c = [-2.0, 0.0, 1.0];
        let w = find_root(&c, 0.0, 2.0, RootSelector::Only).unwrap();
        assert!((w - 2f64.sqrt()).abs() < 1e-11);
        // (w-1)(w-3) on [0, 4]
        let c = [3.0, -4.0, 1.0];
        assert!((find_root(&c, 0.0, 4.0, RootSelector::Smaller).unwrap() - 1.0).abs() < 1e-11);
        assert!((find_root(&c, 0.0, 4.0, RootSelector::Greater).unwrap() - 3.0).abs() < 1e-11);
        assert!(find_root(&c, 0.0, 4.0, RootSelector::Only).is_err());
        assert_eq!(check("r < root(-2, 0, 1; 0, 2; only)", &[1.0]), RegionStatus::Inside);
        assert_eq!(check("r < root(1, 0, 1; 0, 2; only)", &[1.0]), RegionStatus::Unknown);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_region("r + 1").is_err());
        assert!(parse_region("r < 1 &").is_err());
        assert!(parse_region("q < 1").is_err());
        assert!(parse_region("(r < 1) < 2").is_err());
    }
}
