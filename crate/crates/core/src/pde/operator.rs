use std::collections::BTreeMap;

use crate::symbolic::{CoordPoly, Exp3};

/// Second-order linear operator: derivative multi-index ↦ coefficient in x, y, z.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffOperator {
    terms: BTreeMap<Exp3, CoordPoly>,
}

impl DiffOperator {
    pub fn zero() -> Self {
        DiffOperator::default()
    }

    pub fn add_term(&mut self, d: Exp3, c: CoordPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(d).or_default();
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    /// Replaces the coefficient of one derivative outright.
    pub fn set_term(&mut self, d: Exp3, c: CoordPoly) {
        if c.is_zero() {
            self.terms.remove(&d);
        } else {
            self.terms.insert(d, c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp3, &CoordPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: Exp3) -> CoordPoly {
        self.terms.get(&d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn order(&self) -> u32 {
        self.terms.keys().map(|d| d[0] + d[1] + d[2]).max().unwrap_or(0)
    }

    pub fn sub(&self, o: &DiffOperator) -> DiffOperator {
        let mut out = self.clone();
        for (d, c) in &o.terms {
            out.add_term(*d, c.neg());
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&CoordPoly) -> CoordPoly) -> DiffOperator {
        let mut out = DiffOperator::zero();
        for (d, c) in &self.terms {
            out.add_term(*d, f(c));
        }
        out
    }

    /// Derivative multi-indices in display order for the equation of `axis`:
    /// own pure second, mixed (xy, xz, yz), other pure seconds, own first, other firsts, u.
    pub fn display_order(dim: usize, axis: usize) -> Vec<Exp3> {
        let unit = |k: usize| {
            let mut e = [0; 3];
            e[k] = 1;
            e
        };
        let add = |a: Exp3, b: Exp3| [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
        let mut v = vec![add(unit(axis), unit(axis))];
        for i in 0..dim {
            for j in i + 1..dim {
                v.push(add(unit(i), unit(j)));
            }
        }
        for k in (0..dim).filter(|k| *k != axis) {
            v.push(add(unit(k), unit(k)));
        }
        v.push(unit(axis));
        for k in (0..dim).filter(|k| *k != axis) {
            v.push(unit(k));
        }
        v.push([0, 0, 0]);
        v
    }

    /// Terms in display order, followed by anything of higher order.
    pub fn ordered_terms(&self, dim: usize, axis: usize) -> Vec<(Exp3, &CoordPoly)> {
        let order = Self::display_order(dim.max(axis + 1), axis);
        let mut v: Vec<(Exp3, &CoordPoly)> = order.iter().filter_map(|d| self.terms.get(d).map(|c| (*d, c))).collect();
        for (d, c) in &self.terms {
            if !order.contains(d) {
                v.push((*d, c));
            }
        }
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Derived,
    Transcribed,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Derived => "derived",
            Provenance::Transcribed => "transcribed",
        }
    }
}

/// One equation per axis of a d-index series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdeSystem {
    pub name: String,
    pub dim: usize,
    pub equations: Vec<DiffOperator>,
    pub provenance: Provenance,
}

pub fn derivative_name(d: &Exp3) -> String {
    let mut s = String::from("u");
    if d == &[0, 0, 0] {
        return s;
    }
    s.push('_');
    for (k, c) in ["x", "y", "z"].iter().enumerate() {
        for _ in 0..d[k] {
            s.push_str(c);
        }
    }
    s
}
